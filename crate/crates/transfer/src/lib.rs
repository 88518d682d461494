//! Homotopy transfer of ∞-simplicial faces along strong deformation
//! retracts: given a face module `X` and SDR-data `(η, ξ, h)` onto `Y`,
//! [`Transfer`] equips `Y` with faces and produces the comparison maps
//! `η̄`, `ξ̄` and the homotopy `h̄` as families over wedge tuples.

mod cone;
pub mod json;
mod sdr;
mod series;
mod verify;

pub use cone::cone_extension;
pub use sdr::{validate_sdr, SdrData};
pub use series::{unfolded_summands, Transfer};
pub use verify::{random_small_module, verify_transfer, TransferCheck};
