//! Exact computation in the 2-generated group `H̃ = ⟨s, F⟩` that receives an
//! embedding of every group of a family `G_1, G_2, …` of finitely generated
//! groups with decidable word problem.
//!
//! * [`groups`]: zoo groups, families and the direct sum `G = ⊕ G_l`.
//! * [`orders`]: computable left-orders on zoo groups and on `G`.
//! * [`wreath`]: collected normal forms, evaluation, word problem, `ψ` and `Ψ`.
//! * [`algorithms`]: geodesics, distortion audits, membership, the left-order
//!   on `H̃`, enumeration of `H̃` and bounded conjugacy audits.
//! * [`cli`]: the `wreath-lab` command-line front end.

pub mod algorithms;
pub mod cli;
pub mod config;
pub mod error;
pub mod groups;
pub mod orders;
pub mod word;
pub mod wreath;

pub use error::{Error, Result};
pub use word::{free_reduce, Letter, Sign, Word};
