//! Finitely generated groups with a decidable word problem.
//!
//! The zoo is fixed: every entry carries a normal-form routine, so the word
//! problem is total and elements can be hashed by their normal form.

mod ball;
mod family;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::word::{free_reduce, Letter, Sign, Word};

pub use ball::{ball, ball_capped, GroupBall};
pub use family::{
    direct_sum_is_trivial, direct_sum_normal_form, Family, GroupEnumerator, SumElement,
    TorsionOracle, TorsionPolicy,
};

/// The zoo entries together with their parameters.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Zoo {
    Integers,
    FreeAbelian {
        rank: u32,
    },
    Free {
        rank: u32,
    },
    /// `⟨a, b | a b a⁻¹ = b⁻¹⟩` with `x1 = a`, `x2 = b`.
    KleinBottle,
    Cyclic {
        order: u64,
    },
    /// `x1 = (1 2)`, `x2 = (1 2 … n)`; for n = 2 only the transposition.
    Symmetric {
        degree: u16,
    },
}

/// Canonical normal form of a zoo group element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Element {
    Int(i64),
    Vector(Vec<i64>),
    Free(Vec<(u32, bool)>),
    /// `b^b_exp a^a_exp`
    Klein {
        b_exp: i64,
        a_exp: i64,
    },
    Residue(u64),
    Perm(Vec<u16>),
}

impl Element {
    pub fn is_identity(&self) -> bool {
        match self {
            Element::Int(n) => *n == 0,
            Element::Vector(v) => v.iter().all(|&x| x == 0),
            Element::Free(w) => w.is_empty(),
            Element::Klein { b_exp, a_exp } => *b_exp == 0 && *a_exp == 0,
            Element::Residue(r) => *r == 0,
            Element::Perm(p) => p.iter().enumerate().all(|(i, &x)| i == x as usize),
        }
    }
}

pub type ZooParams = BTreeMap<String, u64>;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupDescriptor {
    name: String,
    kind: Zoo,
}

impl fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

fn param(name: &str, params: &ZooParams, key: &str) -> Result<u64> {
    params
        .get(key)
        .copied()
        .ok_or_else(|| Error::InvalidParams {
            name: name.to_string(),
            reason: format!("missing `{key}`"),
        })
}

fn check_params(name: &str, params: &ZooParams, allowed: &[&str]) -> Result<()> {
    match params.keys().find(|k| !allowed.contains(&k.as_str())) {
        Some(k) => Err(Error::InvalidParams {
            name: name.to_string(),
            reason: format!("unexpected parameter `{k}`"),
        }),
        None => Ok(()),
    }
}

/// Instantiates a zoo group by name.
///
/// Names (aliases in parentheses): `integers` (`Z`), `free_abelian` (`Zn`,
/// param `rank`), `free` (`F`, param `rank`), `klein_bottle` (`klein`),
/// `cyclic` (`Zm`, param `order`), `symmetric` (`S`, param `degree`).
pub fn make_zoo_group(name: &str, params: &ZooParams) -> Result<GroupDescriptor> {
    let invalid = |reason: &str| Error::InvalidParams {
        name: name.to_string(),
        reason: reason.to_string(),
    };
    let kind = match name {
        "integers" | "Z" => {
            check_params(name, params, &[])?;
            Zoo::Integers
        }
        "free_abelian" | "Zn" => {
            check_params(name, params, &["rank"])?;
            let rank = param(name, params, "rank")?;
            if rank > 64 {
                return Err(invalid("rank must be at most 64"));
            }
            Zoo::FreeAbelian { rank: rank as u32 }
        }
        "free" | "F" => {
            check_params(name, params, &["rank"])?;
            let rank = param(name, params, "rank")?;
            if rank > 64 {
                return Err(invalid("rank must be at most 64"));
            }
            Zoo::Free { rank: rank as u32 }
        }
        "klein_bottle" | "klein" => {
            check_params(name, params, &[])?;
            Zoo::KleinBottle
        }
        "cyclic" | "Zm" => {
            check_params(name, params, &["order"])?;
            let order = param(name, params, "order")?;
            if order == 0 {
                return Err(invalid("order must be positive"));
            }
            Zoo::Cyclic { order }
        }
        "symmetric" | "S" => {
            check_params(name, params, &["degree"])?;
            let degree = param(name, params, "degree")?;
            if !(2..=64).contains(&degree) {
                return Err(invalid("degree must lie in 2..=64"));
            }
            Zoo::Symmetric {
                degree: degree as u16,
            }
        }
        _ => return Err(Error::UnknownGroup(name.to_string())),
    };
    Ok(GroupDescriptor::new(kind))
}

impl GroupDescriptor {
    pub fn new(kind: Zoo) -> Self {
        let name = match &kind {
            Zoo::Integers => "Z".to_string(),
            Zoo::FreeAbelian { rank } => format!("Z^{rank}"),
            Zoo::Free { rank } => format!("F{rank}"),
            Zoo::KleinBottle => "Klein".to_string(),
            Zoo::Cyclic { order } => format!("Z/{order}"),
            Zoo::Symmetric { degree } => format!("S{degree}"),
        };
        GroupDescriptor { name, kind }
    }

    pub fn integers() -> Self {
        Self::new(Zoo::Integers)
    }

    pub fn free_abelian(rank: u32) -> Self {
        Self::new(Zoo::FreeAbelian { rank })
    }

    pub fn free(rank: u32) -> Self {
        Self::new(Zoo::Free { rank })
    }

    pub fn klein_bottle() -> Self {
        Self::new(Zoo::KleinBottle)
    }

    pub fn cyclic(order: u64) -> Self {
        Self::new(Zoo::Cyclic { order })
    }

    pub fn symmetric(degree: u16) -> Self {
        Self::new(Zoo::Symmetric { degree })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> &Zoo {
        &self.kind
    }

    pub fn generator_count(&self) -> u32 {
        match self.kind {
            Zoo::Integers | Zoo::Cyclic { .. } => 1,
            Zoo::FreeAbelian { rank } | Zoo::Free { rank } => rank,
            Zoo::KleinBottle => 2,
            Zoo::Symmetric { degree } => {
                if degree == 2 {
                    1
                } else {
                    2
                }
            }
        }
    }

    /// Whether the group comes with a computable left-order.
    pub fn has_order(&self) -> bool {
        matches!(
            self.kind,
            Zoo::Integers | Zoo::FreeAbelian { .. } | Zoo::Free { .. } | Zoo::KleinBottle
        )
    }

    pub fn check_word(&self, w: &Word) -> Result<()> {
        let count = self.generator_count();
        match w.letters().iter().find(|l| l.gen == 0 || l.gen > count) {
            Some(l) => Err(Error::InvalidGenerator {
                index: l.gen as u64,
                count: count as u64,
            }),
            None => Ok(()),
        }
    }

    pub fn identity_element(&self) -> Element {
        self.normal_form_unchecked(&Word::empty())
    }

    pub fn normal_form(&self, w: &Word) -> Result<Element> {
        self.check_word(w)?;
        Ok(self.normal_form_unchecked(w))
    }

    fn normal_form_unchecked(&self, w: &Word) -> Element {
        match &self.kind {
            Zoo::Integers => Element::Int(w.letters().iter().map(|l| l.sign.as_i64()).sum()),
            Zoo::FreeAbelian { rank } => {
                let mut v = vec![0i64; *rank as usize];
                for l in w.letters() {
                    v[l.gen as usize - 1] += l.sign.as_i64();
                }
                Element::Vector(v)
            }
            Zoo::Free { .. } => Element::Free(
                free_reduce(w)
                    .letters()
                    .iter()
                    .map(|l| (l.gen, l.sign == Sign::Neg))
                    .collect(),
            ),
            Zoo::KleinBottle => {
                // b^m a^n · a^e = b^m a^(n+e);  b^m a^n · b^e = b^(m + (-1)^n e) a^n
                let (mut b_exp, mut a_exp) = (0i64, 0i64);
                for l in w.letters() {
                    let e = l.sign.as_i64();
                    if l.gen == 1 {
                        a_exp += e;
                    } else if a_exp.rem_euclid(2) == 0 {
                        b_exp += e;
                    } else {
                        b_exp -= e;
                    }
                }
                Element::Klein { b_exp, a_exp }
            }
            Zoo::Cyclic { order } => {
                let m = *order as i128;
                let s: i128 = w.letters().iter().map(|l| l.sign.as_i64() as i128).sum();
                Element::Residue(s.rem_euclid(m) as u64)
            }
            Zoo::Symmetric { degree } => {
                let n = *degree as usize;
                let mut p: Vec<u16> = (0..n as u16).collect();
                for l in w.letters() {
                    let g = symmetric_generator(n, l.gen, l.sign);
                    // p ← p ∘ g
                    p = g.iter().map(|&i| p[i as usize]).collect();
                }
                Element::Perm(p)
            }
        }
    }

    /// The word problem: `true` iff `w` represents the identity.
    pub fn is_trivial(&self, w: &Word) -> Result<bool> {
        Ok(self.normal_form(w)?.is_identity())
    }

    pub fn equal(&self, a: &Word, b: &Word) -> Result<bool> {
        Ok(self.normal_form(a)? == self.normal_form(b)?)
    }

    /// Shortlex-first word representing the same element as `w`: the word a
    /// shortlex ball enumeration lists for it. Groups without a closed form
    /// are searched breadth-first, storing at most `cap` elements.
    pub fn canonical_word(&self, w: &Word, cap: usize) -> Result<Word> {
        let nf = self.normal_form(w)?;
        match (&self.kind, &nf) {
            (Zoo::Integers, Element::Int(n)) => return Ok(Word::power(1, *n)),
            (Zoo::Free { .. }, _) => return Ok(free_reduce(w)),
            (Zoo::FreeAbelian { .. }, Element::Vector(v)) => {
                // geodesics use |v_i| copies of x_i^{±1}; sorting by letter rank is lex-least
                let mut out = Vec::new();
                for (i, &c) in v.iter().enumerate() {
                    out.extend(Word::power(i as u32 + 1, c).0);
                }
                return Ok(Word(out));
            }
            _ => {}
        }
        let mut b = GroupBall::new(self.generator_count(), |x: &Word| self.normal_form(x))?;
        let mut r = 0;
        loop {
            if let Some(found) = b
                .layer(r)
                .iter()
                .find(|x| self.normal_form_unchecked(x) == nf)
            {
                return Ok(found.clone());
            }
            if b.is_exhausted() && r >= b.radius() {
                return Err(Error::Unsupported(format!(
                    "element of {} not reached by its ball",
                    self.name
                )));
            }
            b.grow(cap).map_err(|e| match e {
                Error::BallCapped { partial } => Error::Budget(format!(
                    "canonical word search stopped after {} elements",
                    partial.len()
                )),
                other => other,
            })?;
            r += 1;
        }
    }

    /// Defining relators of the standard presentation.
    pub fn relators(&self) -> Vec<Word> {
        let comm = |i: u32, j: u32| {
            Word(vec![
                Letter::pos(i),
                Letter::pos(j),
                Letter::neg(i),
                Letter::neg(j),
            ])
        };
        match &self.kind {
            Zoo::Integers => vec![],
            Zoo::Free { .. } => vec![],
            Zoo::FreeAbelian { rank } => {
                let mut out = Vec::new();
                for i in 1..=*rank {
                    for j in i + 1..=*rank {
                        out.push(comm(i, j));
                    }
                }
                out
            }
            Zoo::KleinBottle => vec![Word(vec![
                Letter::pos(1),
                Letter::pos(2),
                Letter::neg(1),
                Letter::pos(2),
            ])],
            Zoo::Cyclic { order } => vec![Word::power(1, *order as i64)],
            Zoo::Symmetric { degree } => {
                let n = *degree as i64;
                let a = Word::power(1, 1);
                if n == 2 {
                    return vec![Word::power(1, 2)];
                }
                let b = |e: i64| Word::power(2, e);
                let rep = |w: Word, k: usize| Word(w.0.repeat(k));
                let mut out = vec![
                    Word::power(1, 2),
                    b(n),
                    rep(a.concat(&b(1)), (n - 1) as usize),
                    rep(a.concat(&b(-1)).concat(&a).concat(&b(1)), 3),
                ];
                for j in 2..=n - 2 {
                    out.push(rep(a.concat(&b(-j)).concat(&a).concat(&b(j)), 2));
                }
                out
            }
        }
    }
}

/// Permutation image array (`g[i]` is the image of `i`) of a symmetric-group generator.
fn symmetric_generator(n: usize, gen: u32, sign: Sign) -> Vec<u16> {
    let mut g: Vec<u16> = (0..n as u16).collect();
    if gen == 1 {
        g.swap(0, 1);
    } else {
        for (i, slot) in g.iter_mut().enumerate() {
            *slot = match sign {
                Sign::Pos => ((i + 1) % n) as u16,
                Sign::Neg => ((i + n - 1) % n) as u16,
            };
        }
    }
    g
}
