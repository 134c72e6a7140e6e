use std::collections::HashSet;
use std::hash::Hash;

use super::GroupDescriptor;
use crate::error::{Error, Result};
use crate::word::{Letter, Word};

/// Default element cap for [`ball`].
pub const DEFAULT_BALL_CAP: usize = 2_000_000;

/// Breadth-first growth of a Cayley graph ball, keeping the shortlex-first
/// word for every element. Elements are identified by the key returned from
/// `key`, which must be a normal form (equal keys iff equal elements).
pub struct GroupBall<K, F> {
    rank: u32,
    key: F,
    seen: HashSet<K>,
    words: Vec<Word>,
    /// `layer_starts[r]` = index of the first word of length `r`.
    layer_starts: Vec<usize>,
    exhausted: bool,
}

impl<K, F> GroupBall<K, F>
where
    K: Hash + Eq,
    F: Fn(&Word) -> Result<K>,
{
    pub fn new(rank: u32, key: F) -> Result<Self> {
        let id = key(&Word::empty())?;
        Ok(GroupBall {
            rank,
            key,
            seen: HashSet::from([id]),
            words: vec![Word::empty()],
            layer_starts: vec![0],
            exhausted: rank == 0,
        })
    }

    pub fn radius(&self) -> usize {
        self.layer_starts.len() - 1
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn into_words(self) -> Vec<Word> {
        self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// True once a layer came out empty, i.e. the whole (finite) group is listed.
    pub fn is_exhausted(&self) -> bool {
        self.exhausted
    }

    pub fn layer(&self, r: usize) -> &[Word] {
        let start = self.layer_starts[r];
        let end = self
            .layer_starts
            .get(r + 1)
            .copied()
            .unwrap_or(self.words.len());
        &self.words[start..end]
    }

    /// Adds the next sphere. Fails with the partial list once `cap` elements
    /// would be exceeded.
    pub fn grow(&mut self, cap: usize) -> Result<()> {
        if self.exhausted {
            self.layer_starts.push(self.words.len());
            return Ok(());
        }
        let r = self.radius();
        let start = self.layer_starts[r];
        let end = self.words.len();
        let mut next = Vec::new();
        for idx in start..end {
            let last = self.words[idx].letters().last().copied();
            for rank in 0..2 * self.rank as u64 {
                let l = Letter::from_rank(rank);
                if last == Some(l.inverse()) {
                    continue;
                }
                let cand = self.words[idx].pushed(l);
                let k = (self.key)(&cand)?;
                if self.seen.insert(k) {
                    if self.words.len() + next.len() >= cap {
                        let mut partial = std::mem::take(&mut self.words);
                        partial.extend(next);
                        return Err(Error::BallCapped { partial });
                    }
                    next.push(cand);
                }
            }
        }
        self.layer_starts.push(self.words.len());
        if next.is_empty() {
            self.exhausted = true;
        }
        self.words.extend(next);
        Ok(())
    }

    pub fn grow_to(&mut self, radius: usize, cap: usize) -> Result<()> {
        while self.radius() < radius {
            self.grow(cap)?;
        }
        Ok(())
    }
}

/// One shortlex-first word per element of the radius-`r` ball of `g`.
pub fn ball(g: &GroupDescriptor, r: usize) -> Result<Vec<Word>> {
    ball_capped(g, r, DEFAULT_BALL_CAP)
}

pub fn ball_capped(g: &GroupDescriptor, r: usize, cap: usize) -> Result<Vec<Word>> {
    let mut b = GroupBall::new(g.generator_count(), |w: &Word| g.normal_form(w))?;
    b.grow_to(r, cap)?;
    Ok(b.into_words())
}
