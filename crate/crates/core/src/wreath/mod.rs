//! Arithmetic in `⟨t, f_1, f_2, …⟩ ≤ G ≀ ⟨t⟩` (level 1) and in
//! `H̃ = ⟨s, F⟩ ≤ (G ≀ ⟨t⟩) ≀ ⟨s⟩` (level 2).
//!
//! `f_i` is `x_i` at every `t^m` with `m ≥ 1` and trivial elsewhere. `F` is
//! `t` at `s^1`, `f_i` at `s^{2^i}` and trivial elsewhere. The embeddings are
//! `ψ(x_i) = [t, f_i]` and `Ψ(x_i) = [F, F^{s^{2^i − 1}}]`, with
//! `[x, y] = x y x⁻¹ y⁻¹` and `x^y = y x y⁻¹`.

mod hword;
mod key;
mod level1;
mod level2;

pub use hword::{expand, l2_collect, HLetter, HWord};
pub use key::{l1_key, l2_key, L1Key, L2Key};
pub use level1::{eval_l1, l1_equal, l1_inv, l1_is_trivial, l1_mul, L1Factor, Level1Element};
pub use level2::{
    embed, embed_global, eval_l2, l2_equal, l2_inv, l2_is_trivial, l2_mul, offset_value, psi_gen,
    L2Factor, Level2Element, Psi_gen, MAX_OFFSET_EXPONENT,
};
