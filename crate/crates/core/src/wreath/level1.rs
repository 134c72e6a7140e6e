use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::groups::{direct_sum_is_trivial, Family};
use crate::word::{Letter, Sign, Word};

/// `(f_gen^{t^shift})^sign`, the function that is `x_gen^sign` at every
/// `t^m` with `m + shift ≥ 1` and the identity elsewhere.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct L1Factor {
    pub gen: u32,
    pub shift: i64,
    pub sign: Sign,
}

impl L1Factor {
    pub fn new(gen: u32, shift: i64, sign: Sign) -> Self {
        L1Factor { gen, shift, sign }
    }

    fn inverse(self) -> Self {
        L1Factor {
            sign: -self.sign,
            ..self
        }
    }

    fn shifted(self, by: i64) -> Self {
        L1Factor {
            shift: self.shift + by,
            ..self
        }
    }

    /// Whether the factor is nontrivial at `t^m`.
    pub fn active_at(&self, m: i64) -> bool {
        m + self.shift >= 1
    }
}

/// An element of `⟨t, f_1, f_2, …⟩ ≤ G ≀ ⟨t⟩` in collected form
/// `(f_{n_1}^{t^{m_1}})^{ε_1} ⋯ (f_{n_s}^{t^{m_s}})^{ε_s} · t^{t_exp}`.
///
/// Conventions: `x^y = y x y⁻¹`, and `f^{t^m}(t^k) = f(t^{k+m})`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Level1Element {
    factors: Vec<L1Factor>,
    #[serde(rename = "tExp")]
    t_exp: i64,
}

fn push_reduced(out: &mut Vec<L1Factor>, f: L1Factor) {
    if out.last().is_some_and(|&p| p == f.inverse()) {
        out.pop();
    } else {
        out.push(f);
    }
}

impl Level1Element {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn t() -> Self {
        Level1Element {
            factors: Vec::new(),
            t_exp: 1,
        }
    }

    /// The generator `f_gen`.
    pub fn f(gen: u32) -> Self {
        Level1Element {
            factors: vec![L1Factor::new(gen, 0, Sign::Pos)],
            t_exp: 0,
        }
    }

    pub fn from_parts(factors: impl IntoIterator<Item = L1Factor>, t_exp: i64) -> Self {
        let mut out = Vec::new();
        for f in factors {
            push_reduced(&mut out, f);
        }
        Level1Element {
            factors: out,
            t_exp,
        }
    }

    pub fn factors(&self) -> &[L1Factor] {
        &self.factors
    }

    pub fn t_exp(&self) -> i64 {
        self.t_exp
    }

    /// Trivial as a collected form (no factors, no t-power). A nontrivial
    /// form can still represent the identity; see [`l1_is_trivial`].
    pub fn is_empty_form(&self) -> bool {
        self.factors.is_empty() && self.t_exp == 0
    }

    /// `(A, t^a)·(B, t^b) = (A · B^{t^a}, t^{a+b})`
    pub fn mul(&self, other: &Level1Element) -> Level1Element {
        let mut out = self.factors.clone();
        for &f in &other.factors {
            push_reduced(&mut out, f.shifted(self.t_exp));
        }
        Level1Element {
            factors: out,
            t_exp: self.t_exp + other.t_exp,
        }
    }

    pub fn inv(&self) -> Level1Element {
        Level1Element::from_parts(
            self.factors
                .iter()
                .rev()
                .map(|f| f.inverse().shifted(-self.t_exp)),
            -self.t_exp,
        )
    }

    pub fn pow_sign(&self, sign: Sign) -> Level1Element {
        match sign {
            Sign::Pos => self.clone(),
            Sign::Neg => self.inv(),
        }
    }

    /// Exponents `m` where some factor switches on; the value is constant
    /// between consecutive thresholds and trivial below the first one.
    pub fn thresholds(&self) -> BTreeSet<i64> {
        self.factors.iter().map(|f| 1 - f.shift).collect()
    }
}

/// `l1_mul`
pub fn l1_mul(a: &Level1Element, b: &Level1Element) -> Level1Element {
    a.mul(b)
}

/// `l1_inv`
pub fn l1_inv(a: &Level1Element) -> Level1Element {
    a.inv()
}

/// Value of the function part at `t^m`, as a word over the global generators
/// of `G` (the pointwise product, in factor order).
pub fn eval_l1(e: &Level1Element, m: i64) -> Word {
    Word(
        e.factors
            .iter()
            .filter(|f| f.active_at(m))
            .map(|f| Letter::new(f.gen, f.sign))
            .collect(),
    )
}

/// Word problem for level-1 elements: `t_exp = 0` and the function part is
/// trivial at every threshold (hence everywhere).
pub fn l1_is_trivial(e: &Level1Element, fam: &Family) -> Result<bool> {
    if e.t_exp != 0 {
        return Ok(false);
    }
    for m in e.thresholds() {
        if !direct_sum_is_trivial(fam, &eval_l1(e, m))? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn l1_equal(a: &Level1Element, b: &Level1Element, fam: &Family) -> Result<bool> {
    l1_is_trivial(&a.mul(&b.inv()), fam)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::GroupDescriptor;

    fn psi1() -> Level1Element {
        Level1Element::from_parts(
            [
                L1Factor::new(1, 1, Sign::Pos),
                L1Factor::new(1, 0, Sign::Neg),
            ],
            0,
        )
    }

    #[test]
    fn t_times_f_collects() {
        let e = Level1Element::t().mul(&Level1Element::f(1));
        assert_eq!(e.factors(), &[L1Factor::new(1, 1, Sign::Pos)]);
        assert_eq!(e.t_exp(), 1);
    }

    #[test]
    fn inverse_cancels() {
        let e = Level1Element::t()
            .mul(&Level1Element::f(2))
            .mul(&Level1Element::t());
        assert!(e.mul(&e.inv()).is_empty_form());
        assert!(e.inv().mul(&e).is_empty_form());
    }

    #[test]
    fn evaluation_examples() {
        let w: Word = "x1".parse().unwrap();
        assert_eq!(eval_l1(&psi1(), 0), w);
        assert_eq!(eval_l1(&psi1(), 1), "x1 x1^-1".parse().unwrap());
        assert!(eval_l1(&psi1(), -1).is_empty());
        assert!(eval_l1(&Level1Element::f(1), -5).is_empty());
    }

    #[test]
    fn triviality_examples() {
        let z = Family::finite(vec![GroupDescriptor::integers()]);
        assert!(l1_is_trivial(&psi1().mul(&psi1().inv()), &z).unwrap());
        assert!(!l1_is_trivial(&psi1(), &z).unwrap());
        assert!(!l1_is_trivial(&Level1Element::t(), &z).unwrap());
        let s2 = Family::finite(vec![GroupDescriptor::symmetric(2)]);
        let sq = Level1Element::from_parts(
            [
                L1Factor::new(1, 0, Sign::Pos),
                L1Factor::new(1, 0, Sign::Pos),
            ],
            0,
        );
        assert!(l1_is_trivial(&sq, &s2).unwrap());
        assert!(!l1_is_trivial(&sq, &z).unwrap());
    }

    #[test]
    fn shifted_copies_commute_in_abelian_base() {
        // f1 and f1^t commute in Z ≀ Z
        let z = Family::finite(vec![GroupDescriptor::integers()]);
        let f = Level1Element::f(1);
        let ft = Level1Element::t().mul(&f).mul(&Level1Element::t().inv());
        let c = f.mul(&ft).mul(&f.inv()).mul(&ft.inv());
        assert!(!c.is_empty_form());
        assert!(l1_is_trivial(&c, &z).unwrap());
    }
}
