//! Colored differential modules indexed by color pairs `(s, t)`, their
//! tensor product, bigraded modules `X_{n,m}` and the hom-algebra sign rule.
//!
//! Sign conventions used throughout the workspace:
//! * tensor: `d(x⊗y) = dx⊗y + (-1)^{s-l+p} x⊗dy` for `x ∈ X(s,l)_p`;
//! * hom: `d(f) = d f + (-1)^{s-t+m+1} f d` for `f ∈ hom(s,t)_m`.

mod bigraded;
mod colored;
mod hom;
pub mod json;
mod report;

pub use bigraded::{BigradedModule, Bidegree};
pub use colored::{check_colored_d_squared, unit_module, Colored, ColoredModule, ColoredTensor, Tricolor};
pub use hom::{hom_compose, hom_differential, hom_sign, HomElement};
pub use report::{Report, Violation};
