//! Exact coefficient arithmetic and the sparse linear algebra used by every
//! other crate in the workspace.
//!
//! Coefficients live in [`Scalar`], whose ring ([`Ring`]) is chosen at run
//! time. Integer literals promote into whatever ring they meet, so structure
//! constants such as signs can be written once and reused over ℤ, ℚ or 𝔽_p.

mod elim;
mod error;
mod map;
mod module;
mod scalar;
mod vector;

pub use elim::{nullspace, quotient_by_span, rank, Echelon};
pub use error::Error;
pub use map::SparseMap;
pub use module::FreeModule;
pub use scalar::{Ring, Scalar};
pub use vector::{Tensor, Vector};

/// Basis keys: totally ordered, cloneable and printable.
pub trait Key: Ord + Clone + std::fmt::Debug + std::fmt::Display {}
impl<T: Ord + Clone + std::fmt::Debug + std::fmt::Display> Key for T {}

/// `(-1)^e` as an integer.
pub fn sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// A linear map stored by the images of basis keys; absent keys map to 0.
pub type Columns<K, L> = std::collections::BTreeMap<K, Vector<L>>;

/// Linear extension of a column table.
pub fn apply_columns<K: Key, L: Key>(cols: &Columns<K, L>, v: &Vector<K>) -> Vector<L> {
    v.map_linear(|k| cols.get(k).cloned().unwrap_or_default())
}

pub type Result<T> = std::result::Result<T, Error>;
