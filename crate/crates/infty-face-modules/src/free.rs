use coeff_core::{Scalar, Vector};
use colored_core::Bidegree;
use koszul_dual::WedgeTuple;
use omega_finf::{f_n_components, finf_d_word, left_multiply, OmegaWord};

use crate::face_module::FaceModule;
use crate::lie::word_action;

/// `F[n]`: `F[n]_{m,p} = F∞(m, n)_p`, the free module on `1_n` with faces
/// acting by left multiplication and `d` the derivation of `F∞`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FreeFaceModule {
    pub n: i64,
}

impl FaceModule for FreeFaceModule {
    type K = OmegaWord<WedgeTuple>;

    fn bidegree(&self, a: &Self::K) -> Bidegree {
        Bidegree::new(a.colors().0, a.degree())
    }

    fn region(&self) -> Vec<(Bidegree, Vec<Self::K>)> {
        f_n_components(self.n).into_iter().map(|((m, p), b)| (Bidegree::new(m, p), b)).collect()
    }

    fn d(&self, a: &Self::K) -> Vector<Self::K> {
        finf_d_word(a)
    }

    fn face(&self, w: &WedgeTuple, a: &Self::K) -> Vector<Self::K> {
        left_multiply(w, a).map(Vector::basis).unwrap_or_default()
    }
}

/// `x̄(a) = (-1)^{(p+m)q} μ(a ⊗ x)` for `x ∈ X_{n,q}` and `a ∈ F[n]_{m,p}`;
/// zero unless `a` ends at color `n`.
pub fn xbar<X: FaceModule>(x: &X, key: &X::K, a: &OmegaWord<WedgeTuple>) -> Vector<X::K> {
    let b = x.bidegree(key);
    let (m, n) = a.colors();
    if n != b.n {
        return Vector::zero();
    }
    word_action(x, a, key).scale(&Scalar::sign((a.degree() + m) * b.m))
}
