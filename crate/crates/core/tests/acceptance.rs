//! Acceptance suite: nine criteria, one PASS/FAIL line each.
//!
//! Built with `harness = false` so the lines are printed under plain
//! `cargo test`. The process exits nonzero if any criterion fails.

use std::collections::BTreeMap;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use wreath_lab::algorithms::{
    compare_l2, enumerate_h, frattini_witness_search, induced_order_list, membership,
    membership_by_enumeration, preimage_sign, sign_l2, Budget, FrattiniOutcome, GeodesicOracle,
    MembershipTarget, QiConstants,
};
use wreath_lab::groups::{ball, direct_sum_normal_form, Family, GroupBall, GroupDescriptor};
use wreath_lab::orders::{sign_directsum, OrderSign};
use wreath_lab::wreath::{
    embed, embed_global, eval_l2, expand, l1_equal, l1_is_trivial, l2_collect, l2_is_trivial,
    psi_gen, HWord, L2Factor, Level2Element, Psi_gen,
};
use wreath_lab::{Sign, Word};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lib<T>(r: wreath_lab::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn z() -> GroupDescriptor {
    GroupDescriptor::integers()
}

fn named_families() -> Vec<(&'static str, Family)> {
    vec![
        ("(Z)", Family::finite(vec![z()])),
        (
            "(Z^2)",
            Family::finite(vec![GroupDescriptor::free_abelian(2)]),
        ),
        ("(F2)", Family::finite(vec![GroupDescriptor::free(2)])),
        (
            "(Z, Klein)",
            Family::finite(vec![z(), GroupDescriptor::klein_bottle()]),
        ),
    ]
}

/// Shortlex ball of the whole direct sum, one word per element.
fn direct_sum_ball(fam: &Family, r: usize) -> Result<Vec<Word>, String> {
    let rank = fam.generator_total().unwrap() as u32;
    let mut b = lib(GroupBall::new(rank, |w: &Word| {
        direct_sum_normal_form(fam, w)
    }))?;
    lib(b.grow_to(r, 1_000_000))?;
    Ok(b.into_words())
}

fn embedding_correctness() -> Outcome {
    let mut relators = 0;
    let mut pairs = 0usize;
    for (name, fam) in named_families() {
        let groups = fam.groups().unwrap().to_vec();
        let mut images: Vec<(String, Level2Element)> = Vec::new();
        for (i, g) in groups.iter().enumerate() {
            let l = i + 1;
            for r in g.relators() {
                relators += 1;
                let e = lib(embed(&fam, l, &r))?;
                ensure(lib(l2_is_trivial(&e, &fam))?, || {
                    format!("{name}: relator {r} of G_{l} maps nontrivially")
                })?;
            }
        }
        // the radius-3 ball of G itself (for one-group families, of G_1)
        for w in direct_sum_ball(&fam, 3)? {
            images.push((w.to_string(), lib(embed_global(&fam, &w))?));
        }
        for i in 0..images.len() {
            for j in i + 1..images.len() {
                pairs += 1;
                let q = images[i].1.mul(&images[j].1.inv());
                ensure(!lib(l2_is_trivial(&q, &fam))?, || {
                    format!(
                        "{name}: {} and {} have equal images",
                        images[i].0, images[j].0
                    )
                })?;
            }
        }
    }
    Ok(format!(
        "{relators} relators trivial, {pairs} distinct pairs separated"
    ))
}

fn point_evaluation() -> Outcome {
    let fam = Family::finite(vec![z(), GroupDescriptor::free_abelian(2)]);
    let n = fam.generator_total().unwrap();
    let mut points = 0;
    for i in 1..=3u64 {
        let big = lib(Psi_gen(i, &fam))?;
        let small = lib(psi_gen(i, &fam))?;
        ensure(
            lib(l1_equal(&lib(eval_l2(&big, 1, &fam))?, &small, &fam))?,
            || format!("Psi(x{i}) at s^1 is not psi(x{i})"),
        )?;
        let reach = (1i64 << n) + 16;
        let mut ks: Vec<i64> = big.support_window(n).into_iter().collect();
        ks.extend(-reach..=reach);
        for k in ks.into_iter().filter(|&k| k != 1) {
            points += 1;
            ensure(
                lib(l1_is_trivial(&lib(eval_l2(&big, k, &fam))?, &fam))?,
                || format!("Psi(x{i}) is nontrivial at s^{k}"),
            )?;
        }
    }
    Ok(format!("i = 1..3, {points} off-support points trivial"))
}

fn lipschitz_bounds() -> Outcome {
    let mut rows = Vec::new();
    for (name, fam, radius) in [
        ("(Z)", Family::finite(vec![z()]), 2usize),
        (
            "(Z^2)",
            Family::finite(vec![GroupDescriptor::free_abelian(2)]),
            1,
        ),
    ] {
        let qi = lib(QiConstants::for_group(&fam, 1))?;
        let mut oracle = lib(GeodesicOracle::new(&fam, Budget::with_states(4_000_000)))?;
        for g in lib(ball(&fam.group(1).unwrap(), radius))? {
            let len_g = g.len() as u64;
            let e = lib(embed(&fam, 1, &g))?;
            let cap = (qi.c * len_g) as u32;
            let exact = lib(oracle.geodesic_length(&e, cap))?
                .ok_or_else(|| format!("{name}: no word of length <= {cap} for Psi({g})"))?;
            ensure(
                len_g <= exact as u64 && exact as u64 <= qi.c * len_g,
                || format!("{name}: |{g}| = {len_g}, |Psi| = {exact}, C = {}", qi.c),
            )?;
            ensure(exact as usize <= expand(&e).len(), || {
                format!("{name}: geodesic longer than expansion")
            })?;
            rows.push(format!("{name} {g}: {exact}"));
        }
    }
    Ok(rows.join("; "))
}

/// Independent model of `H̃` over `G = Z × Z`, for the brute-force oracle.
mod brute {
    /// Level-1 element: values on `[-W, W]`, a constant right tail, and `t_exp`.
    /// Values are vectors in `Z²`.
    #[derive(Clone, PartialEq, Eq)]
    pub struct L1 {
        vals: Vec<[i64; 2]>,
        tail: [i64; 2],
        t_exp: i64,
    }

    const W: i64 = 48;

    impl L1 {
        pub fn identity() -> L1 {
            L1 {
                vals: vec![[0, 0]; (2 * W + 1) as usize],
                tail: [0, 0],
                t_exp: 0,
            }
        }

        fn at(&self, m: i64) -> [i64; 2] {
            if m < -W {
                [0, 0]
            } else if m > W {
                self.tail
            } else {
                self.vals[(m + W) as usize]
            }
        }

        pub fn t() -> L1 {
            L1 {
                t_exp: 1,
                ..L1::identity()
            }
        }

        /// `f_j`: `x_j` at every `t^m`, `m ≥ 1`.
        pub fn f(j: usize) -> L1 {
            let mut e = L1::identity();
            let mut x = [0, 0];
            x[j - 1] = 1;
            for m in 1..=W {
                e.vals[(m + W) as usize] = x;
            }
            e.tail = x;
            e
        }

        /// `(φ, a)(ψ, b) = (k ↦ φ(k) + ψ(k + a), a + b)`.
        pub fn mul(&self, o: &L1) -> L1 {
            let a = self.t_exp;
            let vals = (-W..=W)
                .map(|k| {
                    let (p, q) = (self.at(k), o.at(k + a));
                    [p[0] + q[0], p[1] + q[1]]
                })
                .collect();
            let tail = [self.tail[0] + o.tail[0], self.tail[1] + o.tail[1]];
            L1 {
                vals,
                tail,
                t_exp: a + o.t_exp,
            }
        }

        /// `(φ, a)⁻¹ = (k ↦ −φ(k − a), −a)`.
        pub fn inv(&self) -> L1 {
            let a = self.t_exp;
            let vals = (-W..=W).map(|k| {
                let p = self.at(k - a);
                [-p[0], -p[1]]
            });
            L1 {
                vals: vals.collect(),
                tail: [-self.tail[0], -self.tail[1]],
                t_exp: -a,
            }
        }

        pub fn is_trivial(&self) -> bool {
            self.t_exp == 0 && self.tail == [0, 0] && self.vals.iter().all(|v| *v == [0, 0])
        }
    }

    /// `F(s^δ)` for a family with two generators.
    fn offset(delta: i64) -> L1 {
        match delta {
            1 => L1::t(),
            2 => L1::f(1),
            4 => L1::f(2),
            _ => L1::identity(),
        }
    }

    /// Evaluates every point of `[−maxγ − 2^n − 1, −minγ + 2^n + 1]`.
    pub fn is_trivial(factors: &[(i64, i64)], s_exp: i64) -> bool {
        if s_exp != 0 {
            return false;
        }
        let Some(min) = factors.iter().map(|f| f.0).min() else {
            return true;
        };
        let max = factors.iter().map(|f| f.0).max().unwrap();
        (-max - 5..=-min + 5).all(|k| {
            factors
                .iter()
                .fold(L1::identity(), |acc, &(g, e)| {
                    let v = offset(k + g);
                    acc.mul(&if e > 0 { v } else { v.inv() })
                })
                .is_trivial()
        })
    }
}

fn random_element(rng: &mut ChaCha8Rng) -> Vec<(i64, i64)> {
    let n = rng.gen_range(0..=6);
    (0..n)
        .map(|_| {
            (
                rng.gen_range(-4..=4),
                if rng.gen_bool(0.5) { 1 } else { -1 },
            )
        })
        .collect()
}

fn to_element(factors: &[(i64, i64)], s_exp: i64) -> Level2Element {
    Level2Element::from_parts(
        factors
            .iter()
            .map(|&(g, e)| L2Factor::new(g, Sign::from_i64(e).unwrap())),
        s_exp,
    )
}

fn oracle_equivalence() -> Outcome {
    let fam = Family::finite(vec![z(), z()]);
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0004);
    let mut samples: Vec<(Vec<(i64, i64)>, i64)> = Vec::new();
    for _ in 0..1000 {
        let s = if rng.gen_bool(0.8) {
            0
        } else {
            rng.gen_range(-1..=1)
        };
        samples.push((random_element(&mut rng), s));
    }
    // products with commuting images; trivial unless the random parts interfere
    let x = embed_global(&fam, &"x1".parse().unwrap()).unwrap();
    let y = embed_global(&fam, &"x2".parse().unwrap()).unwrap();
    for _ in 0..200 {
        let c = to_element(&random_element(&mut rng), 0);
        let shift = Level2Element::s();
        let sx = if rng.gen_bool(0.5) {
            x.clone()
        } else {
            shift.mul(&x).mul(&shift.inv())
        };
        let comm = c
            .mul(&sx)
            .mul(&y)
            .mul(&sx.inv())
            .mul(&y.inv())
            .mul(&c.inv());
        let pairs: Vec<(i64, i64)> = comm
            .factors()
            .iter()
            .map(|f| (f.shift, f.sign.as_i64()))
            .collect();
        samples.push((pairs, comm.s_exp()));
    }
    let mut trivial = 0;
    for (factors, s) in &samples {
        let e = to_element(factors, *s);
        let windowed = lib(l2_is_trivial(&e, &fam))?;
        let wide = brute::is_trivial(factors, *s);
        ensure(windowed == wide, || {
            format!("disagreement on {factors:?}, sExp {s}: windowed {windowed}, brute {wide}")
        })?;
        trivial += usize::from(wide);
    }
    Ok(format!(
        "{} elements, 0 disagreements ({trivial} trivial)",
        samples.len()
    ))
}

fn order_axioms() -> Outcome {
    let fam = Family::finite(vec![z()]);
    let list = lib(enumerate_h(&fam, 40))?;
    let elems: Vec<&Level2Element> = list.iter().map(|(_, e)| e).collect();
    let name = |i: usize| list[i].0.to_string();
    let mut cmp = vec![vec![OrderSign::Zero; elems.len()]; elems.len()];
    for (i, a) in elems.iter().enumerate() {
        let s = lib(sign_l2(a, &fam))?;
        ensure(lib(sign_l2(&a.inv(), &fam))? == -s, || {
            format!("sign of inverse of {}", name(i))
        })?;
        for (j, b) in elems.iter().enumerate() {
            cmp[i][j] = lib(compare_l2(a, b, &fam))?;
            ensure((cmp[i][j] == OrderSign::Zero) == (i == j), || {
                format!("totality fails on {}, {}", name(i), name(j))
            })?;
        }
    }
    let mut triples = 0;
    for (k, c) in elems.iter().enumerate() {
        let shifted: Vec<Level2Element> = elems.iter().map(|a| c.mul(a)).collect();
        for i in 0..elems.len() {
            for j in 0..elems.len() {
                triples += 1;
                ensure(
                    lib(compare_l2(&shifted[i], &shifted[j], &fam))? == cmp[i][j],
                    || {
                        format!(
                            "left-invariance fails for c = {}, a = {}, b = {}",
                            name(k),
                            name(i),
                            name(j)
                        )
                    },
                )?;
                if cmp[i][j] == OrderSign::Positive && cmp[j][k] == OrderSign::Positive {
                    ensure(cmp[i][k] == OrderSign::Positive, || {
                        format!(
                            "transitivity fails on {}, {}, {}",
                            name(i),
                            name(j),
                            name(k)
                        )
                    })?;
                }
            }
        }
    }
    Ok(format!("{} elements, {triples} triples", elems.len()))
}

fn order_restriction() -> Outcome {
    let mut checked = 0;
    for (name, g) in [
        ("(Z)", z()),
        ("(Z^2)", GroupDescriptor::free_abelian(2)),
        ("(Klein)", GroupDescriptor::klein_bottle()),
    ] {
        let fam = Family::finite(vec![g.clone()]);
        for w in lib(ball(&g, 3))? {
            checked += 1;
            let lhs = lib(sign_l2(&lib(embed(&fam, 1, &w))?, &fam))?;
            let rhs = lib(sign_directsum(&fam, &w))?;
            ensure(lhs == rhs, || {
                format!("{name}: {w} has sign {lhs} in H but {rhs} in G")
            })?;
        }
    }
    Ok(format!("{checked} ball elements agree"))
}

fn membership_criterion() -> Outcome {
    let budget = Budget::default();
    let mut positives = 0;
    let mut negatives = 0;
    // structural reasons: s, s² have sExp ≠ 0; F, Fs, FsF are t or t² at s^1 (tExp ≠ 0)
    let negative_words = ["s", "F", "s s", "F s", "F s F"];
    for (name, fam) in named_families() {
        for (i, g) in fam.groups().unwrap().iter().enumerate() {
            let l = i + 1;
            for v in lib(ball(g, 2))? {
                let w = expand(&lib(embed(&fam, l, &v))?);
                let got = lib(membership(
                    &fam,
                    MembershipTarget::Component(l),
                    &l2_collect(&w),
                    &budget,
                ))?;
                let pre =
                    got.ok_or_else(|| format!("{name}: Psi({v}) on G_{l} reported absent"))?;
                ensure(lib(g.equal(&pre, &v))?, || {
                    format!("{name}: preimage {pre} differs from {v}")
                })?;
                positives += 1;
            }
            for w in negative_words {
                let hw: HWord = w.parse().unwrap();
                let got = lib(membership(
                    &fam,
                    MembershipTarget::Component(l),
                    &l2_collect(&hw),
                    &budget,
                ))?;
                ensure(got.is_none(), || {
                    format!("{name}: {w} reported as a member of G_{l}")
                })?;
                negatives += 1;
            }
        }
    }
    // the length-window enumeration gives the same answers
    let mut windowed = 0;
    for fam in [
        Family::finite(vec![z()]),
        Family::finite(vec![GroupDescriptor::free_abelian(2)]),
    ] {
        let mut oracle = lib(GeodesicOracle::new(&fam, Budget::with_states(2_000_000)))?;
        let g = fam.group(1).unwrap();
        let radius = if g.generator_count() == 1 { 2 } else { 1 };
        let mut words: Vec<HWord> = lib(ball(&g, radius))?
            .iter()
            .map(|v| expand(&embed(&fam, 1, v).unwrap()))
            .collect();
        words.extend(negative_words.iter().map(|w| w.parse().unwrap()));
        for w in words {
            let e = l2_collect(&w);
            let fast = lib(membership(
                &fam,
                MembershipTarget::Component(1),
                &e,
                &budget,
            ))?;
            let slow = lib(membership_by_enumeration(
                &mut oracle,
                1,
                &e,
                w.len() as u32,
            ))?;
            ensure(fast == slow, || {
                format!("{w}: decoded {fast:?}, window enumeration {slow:?}")
            })?;
            windowed += 1;
        }
    }
    Ok(format!("{positives} positives, {negatives} negatives absent, {windowed} cross-checked by window enumeration"))
}

fn induced_order() -> Outcome {
    let fam = Family::finite(vec![z()]);
    let target = MembershipTarget::Component(1);
    let budget = Budget::default();
    let list = lib(induced_order_list(&fam, target, 25, &budget))?;
    let first = list.first().ok_or("empty list")?;
    ensure(
        first.word.is_empty() && first.sign == OrderSign::Zero,
        || format!("first entry is {} ({})", first.word, first.sign),
    )?;
    for entry in &list {
        let again = lib(membership(&fam, target, &l2_collect(&entry.word), &budget))?;
        ensure(again.as_ref() == Some(&entry.preimage), || {
            format!("{} is not a member", entry.word)
        })?;
        let expected = lib(preimage_sign(&fam, target, &entry.preimage))?;
        ensure(entry.sign == expected, || {
            format!(
                "{}: sign {} but preimage {} has {}",
                entry.word, entry.sign, entry.preimage, expected
            )
        })?;
    }
    Ok(format!(
        "{} entries from 25 enumerated elements",
        list.len()
    ))
}

fn frattini_audit() -> Outcome {
    let budget = Budget::default();
    let f2 = Family::finite(vec![GroupDescriptor::free(2)]);
    let g1: Word = "x1 x2".parse().unwrap();
    let g2: Word = "x2 x1".parse().unwrap();
    match lib(frattini_witness_search(&f2, 1, &g1, &g2, 1, &budget))? {
        FrattiniOutcome::ConjugateInG(c) => {
            let conj = f2.group(1).unwrap();
            ensure(
                c.len() == 1 && lib(conj.equal(&g1.conjugated_by(&c), &g2))?,
                || format!("bad witness {c}"),
            )?;
        }
        other => return Err(format!("(x1x2, x2x1) at radius 1: {other:?}")),
    }
    let mut tested = 0;
    let mut tally: BTreeMap<&'static str, usize> = BTreeMap::new();
    for (fam, radius) in [
        (f2.clone(), 1),
        (Family::finite(vec![GroupDescriptor::free_abelian(2)]), 2),
    ] {
        let g = fam.group(1).unwrap();
        let words = lib(ball(&g, 1))?;
        for a in &words {
            for b in &words {
                for r in 0..=radius {
                    let out = lib(frattini_witness_search(&fam, 1, a, b, r, &budget))?;
                    tested += 1;
                    *tally.entry(out.kind()).or_default() += 1;
                    ensure(!matches!(out, FrattiniOutcome::ConjugateInHOnly(_)), || {
                        format!("{a} and {b} conjugate in H only at radius {r}: {out:?}")
                    })?;
                }
            }
        }
    }
    for r in 0..=2 {
        let out = lib(frattini_witness_search(&f2, 1, &g1, &g2, r, &budget))?;
        tested += 1;
        ensure(!matches!(out, FrattiniOutcome::ConjugateInHOnly(_)), || {
            format!("(x1x2, x2x1) radius {r}: {out:?}")
        })?;
    }
    Ok(format!("{tested} searches, outcomes {tally:?}"))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("embedding correctness", embedding_correctness),
        ("point evaluation", point_evaluation),
        ("Lipschitz bounds", lipschitz_bounds),
        ("word problem oracle equivalence", oracle_equivalence),
        ("order axioms on H", order_axioms),
        ("order restriction", order_restriction),
        ("membership", membership_criterion),
        ("induced order list", induced_order),
        ("Frattini audit", frattini_audit),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {}. {name} [{secs:.2}s]: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {}. {name} [{secs:.2}s]: {why}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
