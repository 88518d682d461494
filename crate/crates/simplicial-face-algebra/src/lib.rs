//! The colored algebra `F` of simplicial faces: words in the generators
//! `∂_i^n ∈ F(n-1, n)_0`, their normal form under `∂_i ∂_j = ∂_{j-1} ∂_i`
//! (`i < j`), the quadratic presentation `(M, Q)`, and checks for modules
//! with strict simplicial faces.

mod presentation;
mod strict;
mod word;

pub use presentation::{build_presentation, Generator, QuadraticPresentation};
pub use strict::{check_strict_homotopy, check_strict_map, check_strict_module, standard_simplex_model, StrictFaces};
pub use word::{normal_words, normalize_word, rewrite_steps, FaceWord};
