//! Differential modules with ∞-simplicial faces.
//!
//! A module is anything implementing [`FaceModule`]: a bigraded basis over a
//! finite test region, the differential `d : X_{n,m} → X_{n,m-1}` and faces
//! `∂_I : X_{n,m} → X_{n-k,m+k-1}` for every proper [`WedgeTuple`] `I` of
//! ambient `n`. The defining relation is
//! `d∂_I + ∂_I d = Σ_splits sign · ∂_L ∂_R`.
//!
//! Morphisms and homotopies are families indexed by wedge tuples including
//! the units `1_n`, which carry `f_()` and `h_()`.
//!
//! Operators on tensors are evaluated with the Koszul rule
//! `(f⊗g)(x⊗y) = (-1)^{|g||x|} f(x)⊗g(y)`.
//!
//! [`WedgeTuple`]: koszul_dual::WedgeTuple

mod checks;
mod face_module;
mod free;
pub mod json;
mod lie;
mod realize;
mod tensor;
mod total;

pub use checks::{check_faces, check_homotopy, check_morphism, compose_morphisms, identity_morphism};
pub use face_module::{
    apply_d, apply_face, face_tuples, materialize, ExplicitFaceModule, FaceFamily, FaceModule, MapFamily,
};
pub use free::{xbar, FreeFaceModule};
pub use lie::{lie_structure, word_action, LieFaceModule};
pub use realize::{naive_realization_oracle, RealizationKey, RealizationReport};
pub use tensor::TensorFaceModule;
pub use total::{
    check_dinfty, check_total_differential, dinfty, dinfty_sum, total_bar_differential, total_complex_ranks,
};
