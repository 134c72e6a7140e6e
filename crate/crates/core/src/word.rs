//! Words over a numbered generating set.
//!
//! A [`Word`] is a finite sequence of signed generator references. Generators
//! are 1-based. The textual syntax is whitespace-separated tokens `x<i>` with
//! an optional `^-1` suffix, e.g. `x1 x2^-1 x1`. The empty word prints as `e`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Mul, Neg};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Serialized as `1` / `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "i64", try_from = "i64")]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }

    pub fn from_i64(v: i64) -> Option<Sign> {
        match v {
            1 => Some(Sign::Pos),
            -1 => Some(Sign::Neg),
            _ => None,
        }
    }
}

impl From<Sign> for i64 {
    fn from(s: Sign) -> i64 {
        s.as_i64()
    }
}

impl TryFrom<i64> for Sign {
    type Error = String;
    fn try_from(v: i64) -> std::result::Result<Sign, String> {
        Sign::from_i64(v).ok_or_else(|| format!("sign must be 1 or -1, got {v}"))
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Pos
        } else {
            Sign::Neg
        }
    }
}

/// A generator index (1-based) together with an exponent sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub gen: u32,
    pub sign: Sign,
}

impl Letter {
    pub fn new(gen: u32, sign: Sign) -> Self {
        debug_assert!(gen >= 1);
        Letter { gen, sign }
    }

    pub fn pos(gen: u32) -> Self {
        Letter::new(gen, Sign::Pos)
    }

    pub fn neg(gen: u32) -> Self {
        Letter::new(gen, Sign::Neg)
    }

    pub fn inverse(self) -> Self {
        Letter {
            gen: self.gen,
            sign: -self.sign,
        }
    }

    /// Position in the alphabet order `x1 < x1^-1 < x2 < x2^-1 < ...`.
    pub fn rank(self) -> u64 {
        2 * (self.gen as u64 - 1) + (self.sign == Sign::Neg) as u64
    }

    /// The `rank`-th letter of the alphabet.
    pub fn from_rank(rank: u64) -> Self {
        let gen = (rank / 2 + 1) as u32;
        let sign = if rank.is_multiple_of(2) { Sign::Pos } else { Sign::Neg };
        Letter { gen, sign }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            Sign::Pos => write!(f, "x{}", self.gen),
            Sign::Neg => write!(f, "x{}^-1", self.gen),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(l: Letter) -> Self {
        Word(vec![l])
    }

    /// Builds a word from `(generator, ±1)` pairs; panics on a zero exponent.
    pub fn from_pairs(pairs: &[(u32, i64)]) -> Self {
        Word(
            pairs
                .iter()
                .map(|&(g, e)| Letter::new(g, Sign::from_i64(e).expect("exponent must be ±1")))
                .collect(),
        )
    }

    /// `x_gen^exp` as a word of |exp| letters.
    pub fn power(gen: u32, exp: i64) -> Self {
        let sign = if exp >= 0 { Sign::Pos } else { Sign::Neg };
        Word(vec![Letter::new(gen, sign); exp.unsigned_abs() as usize])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn pushed(&self, l: Letter) -> Word {
        let mut v = self.0.clone();
        v.push(l);
        Word(v)
    }

    pub fn max_generator(&self) -> u32 {
        self.0.iter().map(|l| l.gen).max().unwrap_or(0)
    }

    /// `c · self · c⁻¹`
    pub fn conjugated_by(&self, c: &Word) -> Word {
        c.concat(self).concat(&c.inverse())
    }

    /// Shortlex comparison under the alphabet order of [`Letter::rank`].
    pub fn shortlex_cmp(&self, other: &Word) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| {
            self.0
                .iter()
                .map(|l| l.rank())
                .cmp(other.0.iter().map(|l| l.rank()))
        })
    }

    /// Rewrites generator indices through `f`.
    pub fn relabel(&self, f: impl Fn(u32) -> u32) -> Word {
        Word(
            self.0
                .iter()
                .map(|l| Letter::new(f(l.gen), l.sign))
                .collect(),
        )
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Word(v)
    }
}

/// Cancels adjacent `x x^-1` pairs until none remain.
pub fn free_reduce(w: &Word) -> Word {
    let mut out: Vec<Letter> = Vec::with_capacity(w.len());
    for &l in &w.0 {
        if out.last().is_some_and(|&p| p == l.inverse()) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    Word(out)
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("e");
        }
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Splits a token like `x3^-1` or `F^2` into its stem and integer exponent.
pub(crate) fn split_exponent(tok: &str) -> Result<(&str, i64)> {
    match tok.split_once('^') {
        None => Ok((tok, 1)),
        Some((stem, exp)) => {
            let e: i64 = exp
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent in `{tok}`")))?;
            Ok((stem, e))
        }
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Accepts `x<i>` tokens with optional integer exponents (`x1^3`, `x2^-1`);
    /// `e`, `1` and the empty string denote the identity.
    fn from_str(s: &str) -> Result<Word> {
        let mut letters = Vec::new();
        for tok in s.split_whitespace() {
            if tok == "e" || tok == "1" {
                continue;
            }
            let (stem, exp) = split_exponent(tok)?;
            let idx = stem
                .strip_prefix('x')
                .ok_or_else(|| Error::Parse(format!("expected x<i>, got `{tok}`")))?;
            let gen: u32 = idx
                .parse()
                .map_err(|_| Error::Parse(format!("bad generator index in `{tok}`")))?;
            if gen == 0 {
                return Err(Error::Parse("generator indices start at 1".into()));
            }
            letters.extend(Word::power(gen, exp).0);
        }
        Ok(Word(letters))
    }
}

impl serde::Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for Word {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
