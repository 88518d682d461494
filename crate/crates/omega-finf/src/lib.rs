//! The co-B-construction `Ω(C)` of a connected colored coalgebra and the
//! algebra of ∞-simplicial faces `F∞ = Ω(F^!)`.
//!
//! Two sign conventions meet here. [`omega_differential`] follows the
//! generic co-B formula, under which `φ^Ω(c) = [c]` is a twisting cochain.
//! [`finf_d`] is the generator differential of `F∞` in face notation. On
//! `F^!` every letter has `s - t + q = 0`, the generic formula reduces to
//! `d[c] = -[∇̄c]`, and the two differentials correspond under
//! `∂_I ↦ -[w_I]`.

mod cobar;
mod fn_module;
mod word;

pub use cobar::{omega_differential, omega_of_cochain, CoBar};
pub use fn_module::{coface_delta, f_n_basis, f_n_components, finf_d, finf_d_word, left_multiply};
pub use word::OmegaWord;
