use std::collections::hash_map::Entry;
use std::collections::HashMap;

use rayon::prelude::*;

use super::Budget;
use crate::error::{Error, Result};
use crate::groups::Family;
use crate::wreath::{l2_key, HLetter, HWord, L2Key, Level2Element};

#[derive(Debug, Clone)]
pub struct HEntry {
    pub word: HWord,
    pub element: Level2Element,
}

/// Ball around the identity in the Cayley graph of `H̃` with respect to
/// `{s^±1, F^±1}`, grown one sphere at a time. Each element is stored once,
/// under its shortlex-first word; elements are identified by canonical keys,
/// so the family must be finite.
pub struct HBall<'f> {
    fam: &'f Family,
    entries: Vec<HEntry>,
    layer_starts: Vec<usize>,
    index: HashMap<L2Key, usize>,
}

impl<'f> HBall<'f> {
    pub fn new(fam: &'f Family) -> Result<Self> {
        let id = Level2Element::identity();
        let key = l2_key(&id, fam)?;
        Ok(HBall {
            fam,
            entries: vec![HEntry {
                word: HWord::empty(),
                element: id,
            }],
            layer_starts: vec![0],
            index: HashMap::from([(key, 0)]),
        })
    }

    pub fn family(&self) -> &'f Family {
        self.fam
    }

    pub fn radius(&self) -> u32 {
        (self.layer_starts.len() - 1) as u32
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[HEntry] {
        &self.entries
    }

    pub fn sphere(&self, r: u32) -> &[HEntry] {
        let r = r as usize;
        let start = self.layer_starts[r];
        let end = self
            .layer_starts
            .get(r + 1)
            .copied()
            .unwrap_or(self.entries.len());
        &self.entries[start..end]
    }

    pub fn distance_of_key(&self, key: &L2Key) -> Option<u32> {
        self.index
            .get(key)
            .map(|&i| self.entries[i].word.len() as u32)
    }

    pub fn lookup(&self, key: &L2Key) -> Option<&HEntry> {
        self.index.get(key).map(|&i| &self.entries[i])
    }

    /// Adds the next sphere. Returns `Ok(false)` without changing the ball
    /// when the sphere would push the size past `budget.max_states`.
    ///
    /// Candidates are generated in shortlex order (canonical prefixes
    /// extended by letters in alphabet order), keyed in parallel and then
    /// deduplicated sequentially, so the result does not depend on scheduling.
    pub fn grow(&mut self, budget: &Budget) -> Result<bool> {
        budget.check()?;
        let r = self.radius();
        let last = self.sphere(r);
        let mut candidates = Vec::with_capacity(last.len() * 3);
        for e in last {
            let tail = e.word.letters().last().copied();
            for l in HLetter::ALL {
                if tail == Some(l.inverse()) {
                    continue;
                }
                candidates.push((e, l));
            }
        }
        let fam = self.fam;
        let keyed: Vec<(HEntry, L2Key)> = candidates
            .par_iter()
            .map(|(e, l)| {
                let element = e.element.mul(&l.element());
                let key = l2_key(&element, fam)?;
                Ok((
                    HEntry {
                        word: e.word.pushed(*l),
                        element,
                    },
                    key,
                ))
            })
            .collect::<Result<_>>()?;
        budget.check()?;
        let start = self.entries.len();
        let mut fresh = Vec::new();
        for (entry, key) in keyed {
            if let Entry::Vacant(slot) = self.index.entry(key) {
                slot.insert(start + fresh.len());
                fresh.push(entry);
            }
        }
        if start + fresh.len() > budget.max_states {
            self.index.retain(|_, i| *i < start);
            return Ok(false);
        }
        self.layer_starts.push(self.entries.len());
        self.entries.extend(fresh);
        Ok(true)
    }

    /// Grows to `radius` if the budget allows; returns the radius reached.
    pub fn grow_to(&mut self, radius: u32, budget: &Budget) -> Result<u32> {
        while self.radius() < radius {
            if !self.grow(budget)? {
                break;
            }
        }
        Ok(self.radius())
    }

    /// Grows until at least `count` elements are listed.
    pub fn grow_to_count(&mut self, count: usize, budget: &Budget) -> Result<()> {
        while self.entries.len() < count {
            if !self.grow(budget)? {
                return Err(Error::Budget(format!(
                    "listing {count} elements of H̃ exceeds {} states",
                    budget.max_states
                )));
            }
        }
        Ok(())
    }
}

/// Lists distinct elements of `H̃` by shortlex-first words, identity first.
pub fn enumerate_h(fam: &Family, cap: usize) -> Result<Vec<(HWord, Level2Element)>> {
    let budget = Budget {
        max_states: cap.max(1).saturating_mul(8),
        ..Budget::default()
    };
    enumerate_h_with(fam, cap, &budget)
}

/// [`enumerate_h`] under an explicit budget; the last sphere is built in
/// full, so `max_states` must cover it.
pub fn enumerate_h_with(
    fam: &Family,
    cap: usize,
    budget: &Budget,
) -> Result<Vec<(HWord, Level2Element)>> {
    let mut ball = HBall::new(fam)?;
    ball.grow_to_count(cap, budget)?;
    Ok(ball
        .entries()
        .iter()
        .take(cap)
        .map(|e| (e.word.clone(), e.element.clone()))
        .collect())
}

/// Persistent memo for geodesic lengths; answers must be definitive
/// (`Some(len)` or "longer than cap"), never capped results.
pub trait GeodesicStore: Send + Sync {
    fn get(&self, e: &Level2Element, cap: u32) -> Option<Option<u32>>;
    fn put(&self, e: &Level2Element, cap: u32, value: Option<u32>);
}

/// Exact word lengths in `H̃`, computed from a shared ball by meeting in the
/// middle: if `e` is not in the ball `B(R)` then `|e| > R`, and a geodesic
/// for `e` splits as `a · b` with `|a| = |e| − R`, `|b| = R`. Scanning spheres
/// `S(1), S(2), …` for the first `a` with `a⁻¹e ∈ B(R)` gives `|e| = |a| + R`.
pub struct GeodesicOracle<'f> {
    ball: HBall<'f>,
    budget: Budget,
    store: Option<Box<dyn GeodesicStore + 'f>>,
}

impl<'f> GeodesicOracle<'f> {
    pub fn new(fam: &'f Family, budget: Budget) -> Result<Self> {
        Ok(GeodesicOracle {
            ball: HBall::new(fam)?,
            budget,
            store: None,
        })
    }

    pub fn with_store(mut self, store: Box<dyn GeodesicStore + 'f>) -> Self {
        self.store = Some(store);
        self
    }

    pub fn family(&self) -> &'f Family {
        self.ball.family()
    }

    pub fn budget(&self) -> &Budget {
        &self.budget
    }

    pub fn ball(&self) -> &HBall<'f> {
        &self.ball
    }

    pub fn ball_mut(&mut self) -> (&mut HBall<'f>, &Budget) {
        (&mut self.ball, &self.budget)
    }

    /// Smallest `L ≤ cap` such that a word of length `L` represents `e`;
    /// `Ok(None)` if there is none; `SearchCapped` when the budget runs out first.
    pub fn geodesic_length(&mut self, e: &Level2Element, cap: u32) -> Result<Option<u32>> {
        if let Some(store) = &self.store {
            if let Some(v) = store.get(e, cap) {
                return Ok(v);
            }
        }
        let v = self.compute(e, cap)?;
        if let Some(store) = &self.store {
            store.put(e, cap, v);
        }
        Ok(v)
    }

    fn compute(&mut self, e: &Level2Element, cap: u32) -> Result<Option<u32>> {
        let fam = self.ball.family();
        let key = l2_key(e, fam)?;
        if let Some(d) = self.ball.distance_of_key(&key) {
            return Ok((d <= cap).then_some(d));
        }
        let needed = cap.div_ceil(2);
        // grow one sphere at a time; stop early once e shows up
        while self.ball.radius() < needed {
            if !self.ball.grow(&self.budget)? {
                break;
            }
            if let Some(d) = self.ball.distance_of_key(&key) {
                return Ok((d <= cap).then_some(d));
            }
        }
        let r = self.ball.radius();
        if r >= cap {
            return Ok(None);
        }
        for i in 1..=r {
            if i + r > cap {
                return Ok(None);
            }
            self.budget.check()?;
            let hit = self
                .ball
                .sphere(i)
                .par_iter()
                .map(|a| {
                    let q = a.element.inv().mul(e);
                    Ok(l2_key(&q, fam)?).map(|k| self.ball.distance_of_key(&k))
                })
                .collect::<Result<Vec<Option<u32>>>>()?
                .into_iter()
                .flatten()
                .min();
            if let Some(d) = hit {
                let len = i + d;
                return Ok((len <= cap).then_some(len));
            }
        }
        if 2 * r >= cap {
            Ok(None)
        } else {
            Err(Error::SearchCapped {
                lower_bound: 2 * r + 1,
            })
        }
    }

    /// Certified bounds `lo ≤ |e| ≤ hi`, where `hi = upper` is a known upper
    /// bound (e.g. the length of a word for `e`).
    pub fn length_bounds(&mut self, e: &Level2Element, upper: u32) -> Result<(u32, u32)> {
        match self.geodesic_length(e, upper) {
            Ok(Some(l)) => Ok((l, l)),
            // a word of length `upper` exists, so this only happens on bad input
            Ok(None) => Ok((upper, upper)),
            Err(Error::SearchCapped { lower_bound }) => Ok((lower_bound, upper)),
            Err(err) => Err(err),
        }
    }
}

/// One-shot geodesic computation with a fresh ball.
pub fn geodesic_length(
    e: &Level2Element,
    fam: &Family,
    cap: u32,
    budget: &Budget,
) -> Result<Option<u32>> {
    GeodesicOracle::new(fam, budget.clone())?.geodesic_length(e, cap)
}
