//! The Koszul dual coalgebra `F^!` of the face algebra.
//!
//! A basis element of `(F^!)^{(k)}(n-k, n)_k` is a [`WedgeTuple`]: an
//! ambient `n` and indices `0 <= i_1 < … < i_k <= n`. Its coproduct is a sum
//! over [`Split`]s, the shuffles of the tuple into two increasing blocks,
//! with sign `(-1)^{inv(σ)+1}` and the hat correction on the left block.

mod generic;
mod twisting;
mod wedge;

pub use generic::{koszul_dual_generic, wedge_expansion, DualComponent, GenWord};
pub use twisting::{
    check_twisting_cochain, phi_shriek, ColoredCoalgebra, ColoredDga, FaceAlgebra, FaceCoalgebra,
};
pub use wedge::{
    coproduct, enumerate_splits, enumerate_splits_brute, hat, inversions, permutations, reduced_coproduct,
    wedge_tuples, Split, WedgeTuple,
};
