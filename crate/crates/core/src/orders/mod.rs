//! Computable left-orders on zoo groups and on the direct sum.

mod magnus;

use std::fmt;
use std::ops::Neg;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groups::{
    direct_sum_is_trivial, direct_sum_normal_form, Element, Family, GroupBall, GroupDescriptor, Zoo,
};
use crate::word::Word;

pub use magnus::magnus_sign;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderSign {
    Negative,
    Zero,
    Positive,
}

impl OrderSign {
    pub fn of<T: Ord + Default>(v: T) -> OrderSign {
        match v.cmp(&T::default()) {
            std::cmp::Ordering::Less => OrderSign::Negative,
            std::cmp::Ordering::Equal => OrderSign::Zero,
            std::cmp::Ordering::Greater => OrderSign::Positive,
        }
    }

    pub(crate) fn from_i128(v: i128) -> OrderSign {
        OrderSign::of(v)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            OrderSign::Negative => "negative",
            OrderSign::Zero => "zero",
            OrderSign::Positive => "positive",
        }
    }
}

impl Neg for OrderSign {
    type Output = OrderSign;
    fn neg(self) -> OrderSign {
        match self {
            OrderSign::Negative => OrderSign::Positive,
            OrderSign::Zero => OrderSign::Zero,
            OrderSign::Positive => OrderSign::Negative,
        }
    }
}

impl fmt::Display for OrderSign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Sign of a normal form.
///
/// `Z^n` is ordered lexicographically with the first coordinate dominant.
/// The Klein bottle group `b^m a^n` is ordered by `n` first, then `m`: the
/// kernel `⟨b⟩` and quotient `⟨a⟩` orders combine into a left-order.
fn element_sign(g: &GroupDescriptor, w: &Word, nf: &Element) -> Result<OrderSign> {
    Ok(match (g.kind(), nf) {
        (Zoo::Integers, Element::Int(n)) => OrderSign::of(*n),
        (Zoo::FreeAbelian { .. }, Element::Vector(v)) => v
            .iter()
            .find(|&&x| x != 0)
            .map_or(OrderSign::Zero, |&x| OrderSign::of(x)),
        (Zoo::Free { .. }, _) => magnus_sign(w),
        (Zoo::KleinBottle, Element::Klein { b_exp, a_exp }) => {
            if *a_exp != 0 {
                OrderSign::of(*a_exp)
            } else {
                OrderSign::of(*b_exp)
            }
        }
        _ => {
            return Err(Error::Unsupported(format!(
                "{} is not left-orderable here",
                g.name()
            )))
        }
    })
}

/// Sign of `w` against the identity in the chosen left-order of `g`.
pub fn sign_base(g: &GroupDescriptor, w: &Word) -> Result<OrderSign> {
    if !g.has_order() {
        return Err(Error::Unsupported(format!(
            "{} has no left-order",
            g.name()
        )));
    }
    let nf = g.normal_form(w)?;
    element_sign(g, w, &nf)
}

/// Lexicographic order on `⊕ G_l`: the lowest-indexed component with a
/// nontrivial projection decides.
pub fn sign_directsum(fam: &Family, w: &Word) -> Result<OrderSign> {
    if let Some(groups) = fam.groups() {
        if let Some((i, g)) = groups.iter().enumerate().find(|(_, g)| !g.has_order()) {
            return Err(Error::Unsupported(format!(
                "group {} ({}) has no left-order",
                i + 1,
                g.name()
            )));
        }
    }
    let parts = fam.project(w)?;
    for (l, local) in parts {
        let g = fam.group(l)?;
        if !g.has_order() {
            return Err(Error::Unsupported(format!(
                "group {l} ({}) has no left-order",
                g.name()
            )));
        }
        let s = sign_base(&g, &local)?;
        if s != OrderSign::Zero {
            return Ok(s);
        }
    }
    Ok(OrderSign::Zero)
}

/// A computable left-order bound to a group or to a family's direct sum.
#[derive(Debug, Clone, Copy)]
pub enum OrderDescriptor<'a> {
    Group(&'a GroupDescriptor),
    DirectSum(&'a Family),
}

impl OrderDescriptor<'_> {
    pub fn sign(&self, w: &Word) -> Result<OrderSign> {
        match self {
            OrderDescriptor::Group(g) => sign_base(g, w),
            OrderDescriptor::DirectSum(fam) => sign_directsum(fam, w),
        }
    }

    pub fn is_trivial(&self, w: &Word) -> Result<bool> {
        match self {
            OrderDescriptor::Group(g) => g.is_trivial(w),
            OrderDescriptor::DirectSum(fam) => direct_sum_is_trivial(fam, w),
        }
    }

    /// `sign(a⁻¹ b)`; `Positive` means `a < b`.
    pub fn compare(&self, a: &Word, b: &Word) -> Result<OrderSign> {
        self.sign(&a.inverse().concat(b))
    }
}

pub fn compare(o: &OrderDescriptor<'_>, a: &Word, b: &Word) -> Result<OrderSign> {
    o.compare(a, b)
}

/// The first `cap` positive elements in shortlex order of their canonical words.
pub fn positive_cone_enum(o: &OrderDescriptor<'_>, cap: usize) -> Result<Vec<Word>> {
    let mut out = Vec::new();
    if cap == 0 {
        return Ok(out);
    }
    match o {
        OrderDescriptor::Group(g) => {
            let g: &GroupDescriptor = g;
            let ball = GroupBall::new(g.generator_count(), |w: &Word| g.normal_form(w))?;
            collect_positive(o, ball, cap, &mut out)?;
        }
        OrderDescriptor::DirectSum(fam) => {
            let fam: &Family = fam;
            let rank = fam.generator_total().ok_or_else(|| {
                Error::Unsupported("cone enumeration needs a finite family".into())
            })?;
            let ball = GroupBall::new(rank as u32, |w: &Word| direct_sum_normal_form(fam, w))?;
            collect_positive(o, ball, cap, &mut out)?;
        }
    }
    Ok(out)
}

fn collect_positive<K, F>(
    o: &OrderDescriptor<'_>,
    mut ball: GroupBall<K, F>,
    cap: usize,
    out: &mut Vec<Word>,
) -> Result<()>
where
    K: std::hash::Hash + Eq,
    F: Fn(&Word) -> Result<K>,
{
    let mut r = 0;
    loop {
        for w in ball.layer(r) {
            if o.sign(w)? == OrderSign::Positive {
                out.push(w.clone());
                if out.len() == cap {
                    return Ok(());
                }
            }
        }
        if ball.is_exhausted() && r >= ball.radius() {
            return Ok(());
        }
        ball.grow(usize::MAX)?;
        r += 1;
    }
}
