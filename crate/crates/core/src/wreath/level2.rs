use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::level1::{l1_is_trivial, L1Factor, Level1Element};
use crate::error::{Error, Result};
use crate::groups::{direct_sum_is_trivial, Family, TorsionPolicy};
use crate::word::{Sign, Word};

/// `(F^{s^shift})^sign`; its value at `s^k` is `F(s^{k+shift})^sign`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct L2Factor {
    pub shift: i64,
    pub sign: Sign,
}

impl L2Factor {
    pub fn new(shift: i64, sign: Sign) -> Self {
        L2Factor { shift, sign }
    }

    fn inverse(self) -> Self {
        L2Factor {
            sign: -self.sign,
            ..self
        }
    }

    fn shifted(self, by: i64) -> Self {
        L2Factor {
            shift: self.shift + by,
            ..self
        }
    }
}

/// An element of `H̃ = ⟨s, F⟩` in collected form
/// `(F^{s^{γ_1}})^{ε_1} ⋯ (F^{s^{γ_N}})^{ε_N} · s^{s_exp}`, with no adjacent
/// pair `(γ, ε), (γ, −ε)`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "Level2Json", try_from = "Level2Json")]
pub struct Level2Element {
    factors: Vec<L2Factor>,
    s_exp: i64,
}

/// Wire form: `{"factors": [[shift, sign], …], "sExp": n}`.
#[derive(Serialize, Deserialize)]
struct Level2Json {
    factors: Vec<(i64, i64)>,
    #[serde(rename = "sExp")]
    s_exp: i64,
}

impl From<Level2Element> for Level2Json {
    fn from(e: Level2Element) -> Self {
        Level2Json {
            factors: e
                .factors
                .iter()
                .map(|f| (f.shift, f.sign.as_i64()))
                .collect(),
            s_exp: e.s_exp,
        }
    }
}

impl TryFrom<Level2Json> for Level2Element {
    type Error = String;
    fn try_from(j: Level2Json) -> std::result::Result<Self, String> {
        let factors = j
            .factors
            .into_iter()
            .map(|(shift, s)| {
                Sign::from_i64(s)
                    .map(|sign| L2Factor { shift, sign })
                    .ok_or_else(|| format!("factor sign must be ±1, got {s}"))
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(Level2Element::from_parts(factors, j.s_exp))
    }
}

fn push_reduced(out: &mut Vec<L2Factor>, f: L2Factor) {
    if out.last().is_some_and(|&p| p == f.inverse()) {
        out.pop();
    } else {
        out.push(f);
    }
}

impl Level2Element {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn s() -> Self {
        Level2Element {
            factors: Vec::new(),
            s_exp: 1,
        }
    }

    #[allow(non_snake_case)]
    pub fn F() -> Self {
        Level2Element {
            factors: vec![L2Factor::new(0, Sign::Pos)],
            s_exp: 0,
        }
    }

    pub fn from_parts(factors: impl IntoIterator<Item = L2Factor>, s_exp: i64) -> Self {
        let mut out = Vec::new();
        for f in factors {
            push_reduced(&mut out, f);
        }
        Level2Element {
            factors: out,
            s_exp,
        }
    }

    pub fn factors(&self) -> &[L2Factor] {
        &self.factors
    }

    pub fn s_exp(&self) -> i64 {
        self.s_exp
    }

    pub fn is_empty_form(&self) -> bool {
        self.factors.is_empty() && self.s_exp == 0
    }

    pub fn mul(&self, other: &Level2Element) -> Level2Element {
        let mut out = self.factors.clone();
        for &f in &other.factors {
            push_reduced(&mut out, f.shifted(self.s_exp));
        }
        Level2Element {
            factors: out,
            s_exp: self.s_exp + other.s_exp,
        }
    }

    pub fn inv(&self) -> Level2Element {
        Level2Element::from_parts(
            self.factors
                .iter()
                .rev()
                .map(|f| f.inverse().shifted(-self.s_exp)),
            -self.s_exp,
        )
    }

    pub fn pow_sign(&self, sign: Sign) -> Level2Element {
        match sign {
            Sign::Pos => self.clone(),
            Sign::Neg => self.inv(),
        }
    }

    pub fn distinct_shifts(&self) -> BTreeSet<i64> {
        self.factors.iter().map(|f| f.shift).collect()
    }

    /// Every `s^k` at which the function part can be nontrivial, for a finite
    /// family with `n` global generators: `F` is supported on
    /// `{1, 2, 4, …, 2^n}`, so factor `γ` is supported on `−γ + {2^0, …, 2^n}`.
    pub fn support_window(&self, n: u64) -> BTreeSet<i64> {
        let mut pts = BTreeSet::new();
        for g in self.distinct_shifts() {
            for j in 0..=n {
                pts.insert((1i64 << j) - g);
            }
        }
        pts
    }
}

pub fn l2_mul(a: &Level2Element, b: &Level2Element) -> Level2Element {
    a.mul(b)
}

pub fn l2_inv(a: &Level2Element) -> Level2Element {
    a.inv()
}

/// Largest generator index usable as an `F` offset exponent (`2^j` must fit in `i64`).
pub const MAX_OFFSET_EXPONENT: u64 = 61;

fn power_of_two_exponent(d: i64) -> Option<u64> {
    (d > 0 && d & (d - 1) == 0).then(|| d.trailing_zeros() as u64)
}

/// `F(s^δ)`: `t` at `δ = 1`, `f_j` at `δ = 2^j` (when `x_j` exists), identity elsewhere.
pub fn offset_value(delta: i64, fam: &Family) -> Result<Level1Element> {
    if delta == 1 {
        return Ok(Level1Element::t());
    }
    match power_of_two_exponent(delta) {
        Some(j) if j >= 1 => {
            let exists = if fam.is_finite() {
                fam.has_generator(j)
            } else {
                fam.resolve(j)?;
                true
            };
            Ok(if exists {
                Level1Element::f(j as u32)
            } else {
                Level1Element::identity()
            })
        }
        _ => Ok(Level1Element::identity()),
    }
}

/// Value of the function part of `e` at `s^k`; the `s`-exponent is ignored.
pub fn eval_l2(e: &Level2Element, k: i64, fam: &Family) -> Result<Level1Element> {
    let mut acc = Level1Element::identity();
    for f in &e.factors {
        let v = offset_value(k + f.shift, fam)?;
        if !v.is_empty_form() {
            acc = acc.mul(&v.pow_sign(f.sign));
        }
    }
    Ok(acc)
}

/// Word problem of `H̃`.
///
/// Finite family with `n` generators: `s_exp = 0` and the function part is
/// level-1 trivial on the support window (it is the identity outside).
///
/// Enumerated family: `F` has infinite support, so the window is replaced by
/// two finite checks. Two factors with shifts `γ < γ'` are simultaneously
/// active at `k` only if `γ' − γ = 2^b − 2^a`, which has at most one solution
/// `(a, b)`; those exceptional points are evaluated directly. Everywhere else
/// a single shift class `γ` is active and the value is `F(2^j)^c` with `c`
/// the class's sign sum, i.e. `t^c` at `j = 0` and `f_j^c` for `j ≥ 1`. The
/// finitely many `j` up to the exceptional bound are checked with the word
/// problem of `G`; the tail `j > J` is answered by the torsion policy.
pub fn l2_is_trivial(e: &Level2Element, fam: &Family) -> Result<bool> {
    if e.s_exp != 0 {
        return Ok(false);
    }
    if e.factors.is_empty() {
        return Ok(true);
    }
    match fam.generator_total() {
        Some(n) => {
            if n > MAX_OFFSET_EXPONENT {
                return Err(Error::Unsupported(format!(
                    "families with more than {MAX_OFFSET_EXPONENT} generators"
                )));
            }
            for k in e.support_window(n) {
                if !l1_is_trivial(&eval_l2(e, k, fam)?, fam)? {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        None => l2_is_trivial_enumerated(e, fam),
    }
}

/// The unique `(a, b)` with `b > a ≥ 0` and `2^b − 2^a = d`, if any.
fn power_gap(d: i64) -> Option<(u32, u32)> {
    if d <= 0 {
        return None;
    }
    let a = d.trailing_zeros();
    let q = d >> a;
    let b = a + power_of_two_exponent(q.checked_add(1)?)? as u32;
    (b <= MAX_OFFSET_EXPONENT as u32).then_some((a, b))
}

fn l2_is_trivial_enumerated(e: &Level2Element, fam: &Family) -> Result<bool> {
    let shifts: Vec<i64> = e.distinct_shifts().into_iter().collect();
    let mut class_sum: BTreeMap<i64, i64> = BTreeMap::new();
    for f in &e.factors {
        *class_sum.entry(f.shift).or_default() += f.sign.as_i64();
    }

    let mut exceptional = BTreeSet::new();
    let mut j_bound = 0u32;
    for (i, &g) in shifts.iter().enumerate() {
        for &h in &shifts[i + 1..] {
            if let Some((a, b)) = power_gap(h - g) {
                exceptional.insert((1i64 << a) - g);
                j_bound = j_bound.max(b);
            }
        }
    }
    for &k in &exceptional {
        if !l1_is_trivial(&eval_l2(e, k, fam)?, fam)? {
            return Ok(false);
        }
    }

    for (&g, &c) in &class_sum {
        if c == 0 {
            continue;
        }
        // j = 0: the value t^c is nontrivial
        if !exceptional.contains(&(1 - g)) {
            return Ok(false);
        }
        for j in 1..=j_bound {
            if exceptional.contains(&((1i64 << j) - g)) {
                continue;
            }
            if !direct_sum_is_trivial(fam, &Word::power(j, c))? {
                return Ok(false);
            }
        }
        let from = j_bound as u64 + 1;
        match fam.policy() {
            TorsionPolicy::TorsionFreeGenerators => return Ok(false),
            TorsionPolicy::GeneratorOrderOracle(oracle) => match oracle.power_trivial_from(c, from)
            {
                Some(true) => {}
                Some(false) => return Ok(false),
                None => {
                    return Err(Error::Undecidable(format!(
                        "torsion oracle cannot decide whether x_j^{c} is trivial for all j ≥ {from}"
                    )))
                }
            },
            TorsionPolicy::FiniteFamily => {
                return Err(Error::Undecidable(
                    "enumerated family without a torsion policy".into(),
                ))
            }
        }
    }
    Ok(true)
}

pub fn l2_equal(a: &Level2Element, b: &Level2Element, fam: &Family) -> Result<bool> {
    l2_is_trivial(&a.mul(&b.inv()), fam)
}

/// `ψ(x_i) = [t, f_i] = f_i^t · f_i⁻¹`.
pub fn psi_gen(i: u64, fam: &Family) -> Result<Level1Element> {
    check_generator(i, fam)?;
    let i = i as u32;
    Ok(Level1Element::from_parts(
        [
            L1Factor::new(i, 1, Sign::Pos),
            L1Factor::new(i, 0, Sign::Neg),
        ],
        0,
    ))
}

/// `Ψ(x_i) = [F, F^{s^{2^i − 1}}]`.
#[allow(non_snake_case)]
pub fn Psi_gen(i: u64, fam: &Family) -> Result<Level2Element> {
    check_generator(i, fam)?;
    let g = (1i64 << i) - 1;
    Ok(Level2Element::from_parts(
        [
            L2Factor::new(0, Sign::Pos),
            L2Factor::new(g, Sign::Pos),
            L2Factor::new(0, Sign::Neg),
            L2Factor::new(g, Sign::Neg),
        ],
        0,
    ))
}

fn check_generator(i: u64, fam: &Family) -> Result<()> {
    if i == 0 || i > MAX_OFFSET_EXPONENT || !fam.has_generator(i) {
        return Err(Error::InvalidGenerator {
            index: i,
            count: fam.generator_total().unwrap_or(MAX_OFFSET_EXPONENT),
        });
    }
    if !fam.is_finite() {
        fam.resolve(i)?;
    }
    Ok(())
}

/// `Ψ` applied to a word over `G_l`'s own generators.
pub fn embed(fam: &Family, l: usize, w: &Word) -> Result<Level2Element> {
    let global = fam.globalize(l, w)?;
    embed_global(fam, &global)
}

/// `Ψ` applied to a word over the global generators of `G`.
pub fn embed_global(fam: &Family, w: &Word) -> Result<Level2Element> {
    let mut acc = Level2Element::identity();
    for l in w.letters() {
        acc = acc.mul(&Psi_gen(l.gen as u64, fam)?.pow_sign(l.sign));
    }
    Ok(acc)
}
