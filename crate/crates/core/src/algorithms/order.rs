//! Left-order on `H̃`: the lexicographic order at the least point of support.
//!
//! For a wreath element `(φ, t^a)` with `φ` supported on a set bounded below,
//! `(φ, t^a) > 1` iff `φ ≠ 1` and `φ(min supp φ) > 1`, or `φ = 1` and `a > 0`.
//! The positive cone is closed under products (at the least support point of
//! a product the value is one of the two leading values or their product),
//! so this is a left-order. Level-1 functions are supported on `m ≥ 1 − shift`
//! and level-2 functions on `k ≥ 1 − shift`, so both levels qualify.

use crate::error::{Error, Result};
use crate::groups::Family;
use crate::orders::{sign_directsum, OrderSign};
use crate::wreath::{eval_l1, eval_l2, l2_is_trivial, Level1Element, Level2Element};

fn ensure_orderable(fam: &Family) -> Result<()> {
    if let Some(groups) = fam.groups() {
        if let Some(g) = groups.iter().find(|g| !g.has_order()) {
            return Err(Error::Unsupported(format!(
                "{} has no left-order",
                g.name()
            )));
        }
    }
    Ok(())
}

pub fn sign_l1(e: &Level1Element, fam: &Family) -> Result<OrderSign> {
    ensure_orderable(fam)?;
    sign_l1_unchecked(e, fam)
}

fn sign_l1_unchecked(e: &Level1Element, fam: &Family) -> Result<OrderSign> {
    for m in e.thresholds() {
        let s = sign_directsum(fam, &eval_l1(e, m))?;
        if s != OrderSign::Zero {
            return Ok(s);
        }
    }
    Ok(OrderSign::of(e.t_exp()))
}

pub fn sign_l2(e: &Level2Element, fam: &Family) -> Result<OrderSign> {
    ensure_orderable(fam)?;
    match fam.generator_total() {
        Some(n) => {
            for k in e.support_window(n) {
                let s = sign_l1_unchecked(&eval_l2(e, k, fam)?, fam)?;
                if s != OrderSign::Zero {
                    return Ok(s);
                }
            }
        }
        None => {
            let function_part = Level2Element::from_parts(e.factors().iter().copied(), 0);
            if !l2_is_trivial(&function_part, fam)? {
                // a nontrivial point exists at or above the support's lower end
                let mut k = 1 - e.distinct_shifts().last().copied().unwrap_or(0);
                loop {
                    let s = sign_l1_unchecked(&eval_l2(e, k, fam)?, fam)?;
                    if s != OrderSign::Zero {
                        return Ok(s);
                    }
                    k += 1;
                }
            }
        }
    }
    Ok(OrderSign::of(e.s_exp()))
}

/// `sign_l2(a⁻¹ b)`; `Positive` means `a < b`.
pub fn compare_l2(a: &Level2Element, b: &Level2Element, fam: &Family) -> Result<OrderSign> {
    sign_l2(&a.inv().mul(b), fam)
}
