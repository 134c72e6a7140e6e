//! Words over the generators `s`, `F` of `H̃`.
//!
//! Two text forms are accepted:
//! * token form (used by the CLI): whitespace-separated `s`, `F` with an
//!   optional integer exponent, e.g. `F s F s^-1 F^-1`;
//! * compact form: one character per letter, lowercase for the generator and
//!   uppercase for its inverse: `s` = s, `S` = s⁻¹, `f` = F, `F` = F⁻¹.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use super::level2::{L2Factor, Level2Element};
use crate::error::{Error, Result};
use crate::word::{split_exponent, Sign};

/// Alphabet in shortlex order: `s < s⁻¹ < F < F⁻¹`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HLetter {
    S,
    SInv,
    F,
    FInv,
}

impl HLetter {
    pub const ALL: [HLetter; 4] = [HLetter::S, HLetter::SInv, HLetter::F, HLetter::FInv];

    pub fn inverse(self) -> HLetter {
        match self {
            HLetter::S => HLetter::SInv,
            HLetter::SInv => HLetter::S,
            HLetter::F => HLetter::FInv,
            HLetter::FInv => HLetter::F,
        }
    }

    pub fn element(self) -> Level2Element {
        match self {
            HLetter::S => Level2Element::s(),
            HLetter::SInv => Level2Element::s().inv(),
            HLetter::F => Level2Element::F(),
            HLetter::FInv => Level2Element::F().inv(),
        }
    }

    pub fn compact(self) -> char {
        match self {
            HLetter::S => 's',
            HLetter::SInv => 'S',
            HLetter::F => 'f',
            HLetter::FInv => 'F',
        }
    }
}

impl fmt::Display for HLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HLetter::S => "s",
            HLetter::SInv => "s^-1",
            HLetter::F => "F",
            HLetter::FInv => "F^-1",
        })
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct HWord(pub Vec<HLetter>);

impl HWord {
    pub fn empty() -> Self {
        HWord(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[HLetter] {
        &self.0
    }

    pub fn pushed(&self, l: HLetter) -> HWord {
        let mut v = self.0.clone();
        v.push(l);
        HWord(v)
    }

    pub fn inverse(&self) -> HWord {
        HWord(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    pub fn concat(&self, other: &HWord) -> HWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        HWord(v)
    }

    pub fn shortlex_cmp(&self, other: &HWord) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.cmp(&other.0))
    }

    pub fn parse_compact(s: &str) -> Result<HWord> {
        s.chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                's' => Ok(HLetter::S),
                'S' => Ok(HLetter::SInv),
                'f' => Ok(HLetter::F),
                'F' => Ok(HLetter::FInv),
                other => Err(Error::Parse(format!(
                    "unexpected `{other}` in compact H-word"
                ))),
            })
            .collect::<Result<Vec<_>>>()
            .map(HWord)
    }

    pub fn to_compact(&self) -> String {
        self.0.iter().map(|l| l.compact()).collect()
    }

    /// Pushes every `s` to the right using `s^a F = F^{s^a} s^a`.
    pub fn collect(&self) -> Level2Element {
        l2_collect(self)
    }
}

/// Collected form of an `{s, F}`-word.
pub fn l2_collect(w: &HWord) -> Level2Element {
    let mut pos = 0i64;
    let mut factors = Vec::new();
    for l in w.letters() {
        match l {
            HLetter::S => pos += 1,
            HLetter::SInv => pos -= 1,
            HLetter::F => factors.push(L2Factor::new(pos, Sign::Pos)),
            HLetter::FInv => factors.push(L2Factor::new(pos, Sign::Neg)),
        }
    }
    Level2Element::from_parts(factors, pos)
}

/// Letter expansion of a collected element: walk the `s`-position to each
/// factor's shift, emit `F^{±1}`, then walk to `s_exp`.
pub fn expand(e: &Level2Element) -> HWord {
    let mut out = Vec::new();
    let mut pos = 0i64;
    let walk = |out: &mut Vec<HLetter>, to: i64, pos: &mut i64| {
        let step = if to > *pos { HLetter::S } else { HLetter::SInv };
        for _ in 0..(to - *pos).unsigned_abs() {
            out.push(step);
        }
        *pos = to;
    };
    for f in e.factors() {
        walk(&mut out, f.shift, &mut pos);
        out.push(match f.sign {
            Sign::Pos => HLetter::F,
            Sign::Neg => HLetter::FInv,
        });
    }
    walk(&mut out, e.s_exp(), &mut pos);
    HWord(out)
}

impl fmt::Display for HWord {
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

impl FromStr for HWord {
    type Err = Error;

    /// Token form; `e` or `1` is the identity.
    fn from_str(s: &str) -> Result<HWord> {
        let mut out = Vec::new();
        for tok in s.split_whitespace() {
            if tok == "e" || tok == "1" {
                continue;
            }
            let (stem, exp) = split_exponent(tok)?;
            let (pos, neg) = match stem {
                "s" => (HLetter::S, HLetter::SInv),
                "F" => (HLetter::F, HLetter::FInv),
                _ => return Err(Error::Parse(format!("expected s or F, got `{tok}`"))),
            };
            let l = if exp >= 0 { pos } else { neg };
            out.extend(std::iter::repeat_n(l, exp.unsigned_abs() as usize));
        }
        Ok(HWord(out))
    }
}

impl serde::Serialize for HWord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for HWord {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hw(s: &str) -> HWord {
        s.parse().unwrap()
    }

    #[test]
    fn collect_examples() {
        let e = l2_collect(&hw("s F s^-1"));
        assert_eq!(e.factors(), &[L2Factor::new(1, Sign::Pos)]);
        assert_eq!(e.s_exp(), 0);
        assert!(l2_collect(&hw("F F^-1")).is_empty_form());
        let e = l2_collect(&hw("F s F s^-1 F^-1 s F^-1 s^-1"));
        let got: Vec<(i64, i64)> = e
            .factors()
            .iter()
            .map(|f| (f.shift, f.sign.as_i64()))
            .collect();
        assert_eq!(got, [(0, 1), (1, 1), (0, -1), (1, -1)]);
        assert_eq!(e.s_exp(), 0);
    }

    #[test]
    fn expansion_of_psi() {
        let e = l2_collect(&hw("F s F s^-1 F^-1 s F^-1 s^-1"));
        assert_eq!(expand(&e), hw("F s F s^-1 F^-1 s F^-1 s^-1"));
        assert_eq!(expand(&e).len(), 8);
    }

    #[test]
    fn compact_form() {
        let w = HWord::parse_compact("fsFS").unwrap();
        assert_eq!(w, hw("F s F^-1 s^-1"));
        assert_eq!(w.to_compact(), "fsFS");
        assert!(HWord::parse_compact("fx").is_err());
    }

    #[test]
    fn token_exponents() {
        assert_eq!(hw("s^3 F^-2"), hw("s s s F^-1 F^-1"));
        assert_eq!(hw("e"), HWord::empty());
        assert!("t".parse::<HWord>().is_err());
        assert_eq!(hw("s^-1 F").to_string(), "s^-1 F");
    }
}
