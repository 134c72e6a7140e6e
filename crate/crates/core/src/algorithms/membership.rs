//! Membership in `Ψ(G_l)` (or `Ψ(G)`) and the induced order list `L_G`.
//!
//! `Ψ(g)` is supported at the single point `s^1`, where its value is `ψ(g)`,
//! and `ψ(g)` is supported at `t^0` with value `g`. Reading off `e` at those
//! two points therefore yields the only possible preimage; the word problem
//! of `H̃` then confirms or refutes it. The answer agrees with the
//! length-window enumeration ([`membership_by_enumeration`]): `Ψ` is
//! injective, so the first enumerated hit is the shortlex-first word of the
//! same element.

use serde::Serialize;

use super::{Budget, GeodesicOracle, QiConstants};
use crate::error::{Error, Result};
use crate::groups::{Family, GroupBall};
use crate::orders::{sign_directsum, OrderSign};
use crate::word::Word;
use crate::wreath::{embed, embed_global, eval_l1, eval_l2, l2_is_trivial, HWord, Level2Element};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MembershipTarget {
    /// `Ψ(G_l)`; preimages are words over `G_l`'s own generators.
    Component(usize),
    /// `Ψ(G)`; preimages are words over the global generators.
    Whole,
}

/// The canonical preimage of `e` under `Ψ` restricted to `target`, or `None`
/// when `e` is not in the image.
pub fn membership(
    fam: &Family,
    target: MembershipTarget,
    e: &Level2Element,
    budget: &Budget,
) -> Result<Option<Word>> {
    budget.check()?;
    if e.s_exp() != 0 {
        return Ok(None);
    }
    let decoded = eval_l1(&eval_l2(e, 1, fam)?, 0);
    let parts = fam.project(&decoded)?;
    let candidate = match target {
        MembershipTarget::Component(l) => {
            fam.group(l)?;
            let mut local = Word::empty();
            for (k, w) in parts {
                if k == l {
                    local = w;
                } else if !fam.group(k)?.is_trivial(&w)? {
                    return Ok(None);
                }
            }
            local
        }
        MembershipTarget::Whole => decoded,
    };
    let image = match target {
        MembershipTarget::Component(l) => embed(fam, l, &candidate)?,
        MembershipTarget::Whole => embed_global(fam, &candidate)?,
    };
    budget.check()?;
    if !l2_is_trivial(&image.mul(&e.inv()), fam)? {
        return Ok(None);
    }
    canonical_preimage(fam, target, &candidate, budget).map(Some)
}

fn canonical_preimage(
    fam: &Family,
    target: MembershipTarget,
    w: &Word,
    budget: &Budget,
) -> Result<Word> {
    match target {
        MembershipTarget::Component(l) => fam.group(l)?.canonical_word(w, budget.max_states),
        MembershipTarget::Whole => {
            // components commute and earlier ones have smaller letters
            let mut out = Word::empty();
            for (l, local) in fam.project(w)? {
                let c = fam.group(l)?.canonical_word(&local, budget.max_states)?;
                out = out.concat(&fam.globalize(l, &c)?);
            }
            Ok(out)
        }
    }
}

/// Membership by the length window: bound `L = |e|` (exactly, or by a
/// certified interval when the geodesic search is capped), then list words
/// `v` of `G_l` in shortlex order with `⌈L_lo / C⌉ ≤ |v| ≤ C · L_hi` and
/// return the first with `Ψ(v) = e`. `upper` is the length of a known word
/// for `e`. Exceeding `max_states` group elements is a budget error.
pub fn membership_by_enumeration(
    oracle: &mut GeodesicOracle<'_>,
    l: usize,
    e: &Level2Element,
    upper: u32,
) -> Result<Option<Word>> {
    let fam = oracle.family();
    let g = fam.group(l)?;
    let qi = QiConstants::for_group(fam, l)?;
    let (lo, hi) = oracle.length_bounds(e, upper)?;
    let min_len = (lo as u64).div_ceil(qi.c) as usize;
    let max_len = (qi.c * hi as u64 + qi.k) as usize;
    let cap = oracle.budget().max_states;
    let mut ball = GroupBall::new(g.generator_count(), |w: &Word| g.normal_form(w))?;
    for r in 0..=max_len {
        if r > ball.radius() {
            if ball.is_exhausted() {
                break;
            }
            ball.grow(cap).map_err(|err| match err {
                Error::BallCapped { partial } => Error::Budget(format!(
                    "membership window up to length {max_len} exceeds {} group elements",
                    partial.len()
                )),
                other => other,
            })?;
        }
        oracle.budget().check()?;
        if r < min_len {
            continue;
        }
        for v in ball.layer(r) {
            if l2_is_trivial(&embed(fam, l, v)?.mul(&e.inv()), fam)? {
                return Ok(Some(v.clone()));
            }
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrderListEntry {
    pub word: HWord,
    pub sign: OrderSign,
    #[serde(skip)]
    pub preimage: Word,
}

/// `L_G`: the first `cap` elements of `H̃` in enumeration order, filtered by
/// membership, each paired with its sign in the order of `H̃`.
pub fn induced_order_list(
    fam: &Family,
    target: MembershipTarget,
    cap: usize,
    budget: &Budget,
) -> Result<Vec<OrderListEntry>> {
    let mut out = Vec::new();
    for (word, element) in super::enumerate_h_with(fam, cap, budget)? {
        budget.check()?;
        if let Some(preimage) = membership(fam, target, &element, budget)? {
            let sign = super::sign_l2(&element, fam)?;
            out.push(OrderListEntry {
                word,
                sign,
                preimage,
            });
        }
    }
    Ok(out)
}

/// Sign of a preimage in the direct-sum order, for cross-checking `L_G`.
pub fn preimage_sign(fam: &Family, target: MembershipTarget, v: &Word) -> Result<OrderSign> {
    match target {
        MembershipTarget::Component(l) => sign_directsum(fam, &fam.globalize(l, v)?),
        MembershipTarget::Whole => sign_directsum(fam, v),
    }
}
