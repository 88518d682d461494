//! A∞-algebras `(A, d, π_n)`, the tensor module `T(A)` with its
//! ∞-simplicial faces, and the bar construction `(B(A), ∂̄, Δ)` realized
//! as the total complex of `T(A)`.
//!
//! Operators on tensors follow the Koszul rule: `1^{⊗a} ⊗ π_n ⊗ 1^{⊗b}`
//! picks up `(-1)^{n·ε}` with `ε` the degree of the first `a` letters.

mod algebra;
mod bar;
mod examples;
pub mod json;
mod ta;
mod word;

pub use algebra::{check_ainf, AInfAlgebra};
pub use bar::{
    bar_coproduct, bar_differential, check_bar_coalgebra, classic_bar_compare, classic_bar_differential,
    classic_deconcatenation, delta_family, total_degree,
};
pub use examples::{random_ainf, truncated_polynomial, xy_example};
pub use ta::TensorAlgebraModule;
pub use word::BarWord;
