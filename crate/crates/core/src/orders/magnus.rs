//! Magnus ordering of a free group.
//!
//! `x_i ↦ 1 + X_i` embeds the free group into noncommuting power series with
//! integer coefficients. An element is positive when the first nonzero
//! coefficient of `g − 1`, monomials ordered by degree and then
//! lexicographically by variable index, is positive. A reduced word with
//! `r` syllables `x_{i1}^{e1} ⋯ x_{ir}^{er}` has coefficient `e1⋯er ≠ 0` on
//! `X_{i1}⋯X_{ir}`, so degrees up to `r` (at most the word length) suffice.

use std::collections::HashMap;

use super::OrderSign;
use crate::word::{free_reduce, Word};

type Monomial = Vec<u32>;

/// Syllable decomposition `(generator, exponent)` of a reduced word.
fn syllables(w: &Word) -> Vec<(u32, i64)> {
    let mut out: Vec<(u32, i64)> = Vec::new();
    for l in w.letters() {
        match out.last_mut() {
            Some((g, e)) if *g == l.gen => *e += l.sign.as_i64(),
            _ => out.push((l.gen, l.sign.as_i64())),
        }
    }
    out
}

/// `binom(e, n)` for `n = 0..=max`, valid for negative `e`.
fn binomials(e: i64, max: usize) -> Vec<i128> {
    let mut c = Vec::with_capacity(max + 1);
    c.push(1i128);
    for n in 1..=max {
        let prev = c[n - 1];
        c.push(prev * (e as i128 - n as i128 + 1) / n as i128);
    }
    c
}

/// Product of `(1 + X_g)^e` over the syllables, truncated above `degree`.
fn truncated_series(syl: &[(u32, i64)], degree: usize) -> HashMap<Monomial, i128> {
    let mut series: HashMap<Monomial, i128> = HashMap::from([(Vec::new(), 1)]);
    for &(g, e) in syl {
        let coeffs = binomials(e, degree);
        let mut next: HashMap<Monomial, i128> = HashMap::with_capacity(series.len() * 2);
        for (m, a) in &series {
            for (n, &c) in coeffs.iter().enumerate().take(degree - m.len() + 1) {
                if c == 0 {
                    continue;
                }
                let mut mono = m.clone();
                mono.extend(std::iter::repeat_n(g, n));
                *next.entry(mono).or_insert(0) += a * c;
            }
        }
        next.retain(|_, v| *v != 0);
        series = next;
    }
    series
}

pub fn magnus_sign(w: &Word) -> OrderSign {
    let reduced = free_reduce(w);
    if reduced.is_empty() {
        return OrderSign::Zero;
    }
    let syl = syllables(&reduced);
    for degree in 1..=syl.len() {
        let series = truncated_series(&syl, degree);
        let lead = series
            .into_iter()
            .filter(|(m, c)| m.len() == degree && *c != 0)
            .min_by(|a, b| a.0.cmp(&b.0));
        if let Some((_, c)) = lead {
            return OrderSign::from_i128(c);
        }
    }
    unreachable!("a reduced nonempty word has a nonzero coefficient in degree ≤ its syllable count")
}
