use super::{Budget, HBall};
use crate::error::Result;
use crate::groups::{ball_capped, Family};
use crate::word::Word;
use crate::wreath::{embed, l2_key, HWord};

/// Result of a bounded conjugacy search. Conjugators `c` satisfy
/// `c · g1 · c⁻¹ = g2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FrattiniOutcome {
    ConjugateInG(Word),
    /// Conjugate in `H̃` but no conjugator found in `G_l` within the radius.
    /// For a Frattini embedding this is expected never to occur.
    ConjugateInHOnly(HWord),
    NoWitnessFound,
}

impl FrattiniOutcome {
    pub fn kind(&self) -> &'static str {
        match self {
            FrattiniOutcome::ConjugateInG(_) => "conjugate_in_G",
            FrattiniOutcome::ConjugateInHOnly(_) => "conjugate_in_H_only",
            FrattiniOutcome::NoWitnessFound => "no_witness_found",
        }
    }
}

/// Searches conjugators of length at most `radius`, first in `G_l`, then in
/// `H̃` between `Ψ(g1)` and `Ψ(g2)`. Both searches return the shortlex-first
/// witness. A negative answer only covers the radius searched.
pub fn frattini_witness_search(
    fam: &Family,
    l: usize,
    g1: &Word,
    g2: &Word,
    radius: u32,
    budget: &Budget,
) -> Result<FrattiniOutcome> {
    let g = fam.group(l)?;
    let target = g.normal_form(g2)?;
    g.check_word(g1)?;
    for c in ball_capped(&g, radius as usize, budget.max_states)? {
        budget.check()?;
        if g.normal_form(&g1.conjugated_by(&c))? == target {
            return Ok(FrattiniOutcome::ConjugateInG(c));
        }
    }
    let a = embed(fam, l, g1)?;
    let b_key = l2_key(&embed(fam, l, g2)?, fam)?;
    let mut ball = HBall::new(fam)?;
    ball.grow_to(radius, budget)?;
    for entry in ball.entries() {
        budget.check()?;
        let conj = entry.element.mul(&a).mul(&entry.element.inv());
        if l2_key(&conj, fam)? == b_key {
            return Ok(FrattiniOutcome::ConjugateInHOnly(entry.word.clone()));
        }
    }
    Ok(FrattiniOutcome::NoWitnessFound)
}
