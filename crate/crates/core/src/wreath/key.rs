//! Canonical keys: hashable normal forms of wreath elements over a finite
//! family. Two elements get equal keys iff they are equal in the group.
//!
//! A level-1 element is a step function `m ↦ G` that is trivial for small `m`
//! and constant between thresholds; its key lists the value at each threshold
//! where the value changes. A level-2 element over a finite family has a
//! finitely supported function part; its key lists the nontrivial values.

use super::level1::{eval_l1, Level1Element};
use super::level2::{eval_l2, Level2Element, MAX_OFFSET_EXPONENT};
use crate::error::{Error, Result};
use crate::groups::{direct_sum_normal_form, Family, SumElement};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct L1Key {
    pub t_exp: i64,
    pub steps: Vec<(i64, SumElement)>,
}

impl L1Key {
    pub fn is_identity(&self) -> bool {
        self.t_exp == 0 && self.steps.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct L2Key {
    pub s_exp: i64,
    pub points: Vec<(i64, L1Key)>,
}

impl L2Key {
    pub fn is_identity(&self) -> bool {
        self.s_exp == 0 && self.points.is_empty()
    }
}

pub fn l1_key(e: &Level1Element, fam: &Family) -> Result<L1Key> {
    let mut steps = Vec::new();
    let mut prev = SumElement::default();
    for m in e.thresholds() {
        let v = direct_sum_normal_form(fam, &eval_l1(e, m))?;
        if v != prev {
            steps.push((m, v.clone()));
            prev = v;
        }
    }
    Ok(L1Key {
        t_exp: e.t_exp(),
        steps,
    })
}

pub fn l2_key(e: &Level2Element, fam: &Family) -> Result<L2Key> {
    let n = fam
        .generator_total()
        .ok_or_else(|| Error::Unsupported("canonical keys need a finite family".into()))?;
    if n > MAX_OFFSET_EXPONENT {
        return Err(Error::Unsupported("too many generators".into()));
    }
    let mut points = Vec::new();
    for k in e.support_window(n) {
        let v = l1_key(&eval_l2(e, k, fam)?, fam)?;
        if !v.is_identity() {
            points.push((k, v));
        }
    }
    Ok(L2Key {
        s_exp: e.s_exp(),
        points,
    })
}
