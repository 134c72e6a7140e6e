use serde::Serialize;

use super::{GeodesicOracle, QiConstants};
use crate::error::{Error, Result};
use crate::groups::ball_capped;
use crate::word::Word;
use crate::wreath::{embed, expand};

/// One element `g` of a ball in `G_l` and the lengths of `Ψ(g)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DistortionRow {
    pub word: Word,
    #[serde(rename = "len_G")]
    pub len_g: u32,
    /// Length of the letter expansion of the collected `Ψ(g)`.
    #[serde(rename = "len_H_upper")]
    pub len_h_upper: u32,
    /// `|Ψ(g)|` in `{s, F}`; `None` when the geodesic search ran out of budget
    /// or `geodesic_cap` was below the expansion length.
    #[serde(rename = "len_H_exact")]
    pub len_h_exact: Option<u32>,
    #[serde(rename = "C_bound")]
    pub c_bound: u64,
    pub ok: bool,
}

/// Checks `|g| ≤ |Ψ(g)| ≤ C |g|` on every element of the radius-`radius`
/// ball of `G_l`, with `C = 2^(M_l + 2)`. Capped searches produce rows
/// without an exact length; they are not failures.
pub fn lipschitz_audit(
    oracle: &mut GeodesicOracle<'_>,
    l: usize,
    radius: usize,
    geodesic_cap: u32,
) -> Result<Vec<DistortionRow>> {
    let fam = oracle.family();
    let g = fam.group(l)?;
    let qi = QiConstants::for_group(fam, l)?;
    let words = ball_capped(&g, radius, oracle.budget().max_states)?;
    let mut rows = Vec::with_capacity(words.len());
    for word in words {
        oracle.budget().check()?;
        let e = embed(fam, l, &word)?;
        let len_g = word.len() as u32;
        let len_h_upper = expand(&e).len() as u32;
        let cap = len_h_upper.min(geodesic_cap);
        let len_h_exact = match oracle.geodesic_length(&e, cap) {
            Ok(v) => v,
            Err(Error::SearchCapped { .. }) => None,
            Err(err) => return Err(err),
        };
        let c_bound = qi.c * len_g as u64 + qi.k;
        let ok = len_h_exact.map_or(len_g <= len_h_upper, |x| len_g <= x && x <= len_h_upper)
            && len_h_upper as u64 <= c_bound;
        rows.push(DistortionRow {
            word,
            len_g,
            len_h_upper,
            len_h_exact,
            c_bound,
            ok,
        });
    }
    Ok(rows)
}
