use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::{Element, GroupDescriptor};
use crate::error::{Error, Result};
use crate::word::{Letter, Word};

/// Lazily enumerated infinite family. `group(l)` must be total for `l ≥ 1`
/// and every group it returns must have at least one generator.
pub trait GroupEnumerator: Send + Sync {
    fn group(&self, index: usize) -> Result<GroupDescriptor>;
}

/// Answers the tail question "is `x_j^exponent` trivial for every global
/// index `j ≥ from`?". `None` means the oracle cannot tell.
pub trait TorsionOracle: Send + Sync {
    fn power_trivial_from(&self, exponent: i64, from: u64) -> Option<bool>;
}

#[derive(Clone)]
pub enum TorsionPolicy {
    FiniteFamily,
    /// Every generator of every group has infinite order.
    TorsionFreeGenerators,
    GeneratorOrderOracle(Arc<dyn TorsionOracle>),
}

impl fmt::Debug for TorsionPolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TorsionPolicy::FiniteFamily => f.write_str("FiniteFamily"),
            TorsionPolicy::TorsionFreeGenerators => f.write_str("TorsionFreeGenerators"),
            TorsionPolicy::GeneratorOrderOracle(_) => f.write_str("GeneratorOrderOracle"),
        }
    }
}

#[derive(Clone)]
enum Source {
    Finite {
        groups: Vec<GroupDescriptor>,
        /// `offsets[l - 1]` = number of global generators before `G_l`.
        offsets: Vec<u64>,
        total: u64,
    },
    Enumerated(Arc<dyn GroupEnumerator>),
}

/// An enumerated family `G_1, G_2, …` with the global generator numbering of
/// `G = ⊕ G_l`: all generators of `G_1` first, then those of `G_2`, and so on.
#[derive(Clone)]
pub struct Family {
    source: Source,
    policy: TorsionPolicy,
}

impl fmt::Debug for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.source {
            Source::Finite { groups, .. } => f
                .debug_struct("Family")
                .field(
                    "groups",
                    &groups.iter().map(|g| g.name()).collect::<Vec<_>>(),
                )
                .finish(),
            Source::Enumerated(_) => f
                .debug_struct("Family")
                .field("groups", &"<enumerated>")
                .field("policy", &self.policy)
                .finish(),
        }
    }
}

impl Family {
    pub fn finite(groups: Vec<GroupDescriptor>) -> Family {
        let mut offsets = Vec::with_capacity(groups.len());
        let mut total = 0u64;
        for g in &groups {
            offsets.push(total);
            total += g.generator_count() as u64;
        }
        Family {
            source: Source::Finite {
                groups,
                offsets,
                total,
            },
            policy: TorsionPolicy::FiniteFamily,
        }
    }

    pub fn enumerated(
        enumerator: Arc<dyn GroupEnumerator>,
        policy: TorsionPolicy,
    ) -> Result<Family> {
        if matches!(policy, TorsionPolicy::FiniteFamily) {
            return Err(Error::Undecidable(
                "an enumerated family needs a torsion policy other than finite_family".into(),
            ));
        }
        Ok(Family {
            source: Source::Enumerated(enumerator),
            policy,
        })
    }

    pub fn is_finite(&self) -> bool {
        matches!(self.source, Source::Finite { .. })
    }

    pub fn policy(&self) -> &TorsionPolicy {
        &self.policy
    }

    pub fn group_count(&self) -> Option<usize> {
        match &self.source {
            Source::Finite { groups, .. } => Some(groups.len()),
            Source::Enumerated(_) => None,
        }
    }

    /// Total number of global generators, `None` for infinite families.
    pub fn generator_total(&self) -> Option<u64> {
        match &self.source {
            Source::Finite { total, .. } => Some(*total),
            Source::Enumerated(_) => None,
        }
    }

    pub fn group(&self, l: usize) -> Result<GroupDescriptor> {
        if l == 0 {
            return Err(Error::InvalidGroup(l));
        }
        match &self.source {
            Source::Finite { groups, .. } => {
                groups.get(l - 1).cloned().ok_or(Error::InvalidGroup(l))
            }
            Source::Enumerated(e) => {
                let g = e.group(l).map_err(|err| match err {
                    Error::Enumerator { .. } => err,
                    other => Error::Enumerator {
                        index: l,
                        reason: other.to_string(),
                    },
                })?;
                if g.generator_count() == 0 {
                    return Err(Error::Enumerator {
                        index: l,
                        reason: "enumerated groups must have at least one generator".into(),
                    });
                }
                Ok(g)
            }
        }
    }

    /// Number of global generators preceding `G_l`.
    fn offset(&self, l: usize) -> Result<u64> {
        match &self.source {
            Source::Finite { offsets, .. } => offsets
                .get(l.wrapping_sub(1))
                .copied()
                .ok_or(Error::InvalidGroup(l)),
            Source::Enumerated(_) => {
                if l == 0 {
                    return Err(Error::InvalidGroup(l));
                }
                let mut acc = 0u64;
                for k in 1..l {
                    acc += self.group(k)?.generator_count() as u64;
                }
                Ok(acc)
            }
        }
    }

    /// Global index of the `j`-th generator of `G_l`.
    pub fn global_index(&self, l: usize, j: u32) -> Result<u64> {
        let g = self.group(l)?;
        if j == 0 || j > g.generator_count() {
            return Err(Error::InvalidGenerator {
                index: j as u64,
                count: g.generator_count() as u64,
            });
        }
        Ok(self.offset(l)? + j as u64)
    }

    /// Inverse of [`global_index`](Self::global_index).
    pub fn resolve(&self, i: u64) -> Result<(usize, u32)> {
        if i == 0 {
            return Err(Error::InvalidGenerator {
                index: 0,
                count: self.generator_total().unwrap_or(0),
            });
        }
        match &self.source {
            Source::Finite {
                groups,
                offsets,
                total,
            } => {
                if i > *total {
                    return Err(Error::InvalidGenerator {
                        index: i,
                        count: *total,
                    });
                }
                // last group whose offset is < i (skipping zero-generator groups)
                let l = offsets.partition_point(|&o| o < i);
                let mut idx = l - 1;
                while groups[idx].generator_count() == 0 {
                    idx -= 1;
                }
                Ok((idx + 1, (i - offsets[idx]) as u32))
            }
            Source::Enumerated(_) => {
                let mut acc = 0u64;
                let mut l = 1usize;
                loop {
                    let n = self.group(l)?.generator_count() as u64;
                    if i <= acc + n {
                        return Ok((l, (i - acc) as u32));
                    }
                    acc += n;
                    l += 1;
                }
            }
        }
    }

    /// `M_l`, the largest global index among the generators of `G_l`.
    pub fn max_index(&self, l: usize) -> Result<u64> {
        let g = self.group(l)?;
        if g.generator_count() == 0 {
            return Err(Error::Unsupported(format!("group {l} has no generators")));
        }
        Ok(self.offset(l)? + g.generator_count() as u64)
    }

    pub fn has_generator(&self, i: u64) -> bool {
        match &self.source {
            Source::Finite { total, .. } => i >= 1 && i <= *total,
            Source::Enumerated(_) => i >= 1,
        }
    }

    /// Maps a word over `G_l`'s own generators to global numbering.
    pub fn globalize(&self, l: usize, w: &Word) -> Result<Word> {
        let g = self.group(l)?;
        g.check_word(w)?;
        let off = self.offset(l)?;
        Ok(w.relabel(|j| (off + j as u64) as u32))
    }

    /// Splits a global word into per-component local words, keeping the
    /// letter order inside each component.
    pub fn project(&self, w: &Word) -> Result<BTreeMap<usize, Word>> {
        let mut parts: BTreeMap<usize, Word> = BTreeMap::new();
        for l in w.letters() {
            let (grp, j) = self.resolve(l.gen as u64)?;
            parts.entry(grp).or_default().0.push(Letter::new(j, l.sign));
        }
        Ok(parts)
    }

    /// Short description of a finite family, used for cache digests.
    pub fn fingerprint(&self) -> Option<String> {
        match &self.source {
            Source::Finite { groups, .. } => Some(
                groups
                    .iter()
                    .map(|g| g.name().to_string())
                    .collect::<Vec<_>>()
                    .join(","),
            ),
            Source::Enumerated(_) => None,
        }
    }

    pub fn groups(&self) -> Option<&[GroupDescriptor]> {
        match &self.source {
            Source::Finite { groups, .. } => Some(groups),
            Source::Enumerated(_) => None,
        }
    }
}

/// Normal form of an element of `⊕ G_l`: the nontrivial components, by group index.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SumElement(pub Vec<(usize, Element)>);

impl SumElement {
    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }
}

pub fn direct_sum_normal_form(fam: &Family, w: &Word) -> Result<SumElement> {
    let mut out = Vec::new();
    for (l, local) in fam.project(w)? {
        let nf = fam.group(l)?.normal_form(&local)?;
        if !nf.is_identity() {
            out.push((l, nf));
        }
    }
    Ok(SumElement(out))
}

/// Word problem of `G = ⊕ G_l`: letters from different components commute,
/// so `w` is trivial iff each component projection is.
pub fn direct_sum_is_trivial(fam: &Family, w: &Word) -> Result<bool> {
    for (l, local) in fam.project(w)? {
        if !fam.group(l)?.is_trivial(&local)? {
            return Ok(false);
        }
    }
    Ok(true)
}
