use coeff_core::{Scalar, Vector};
use colored_core::Bidegree;
use koszul_dual::WedgeTuple;
use omega_finf::OmegaWord;

use crate::face_module::{apply_face, FaceModule};

/// `μ(w ⊗ k)`: the word acts letter by letter, rightmost first; the empty
/// word acts as the identity.
pub fn word_action<X: FaceModule>(x: &X, w: &OmegaWord<WedgeTuple>, k: &X::K) -> Vector<X::K> {
    let mut v = Vector::basis(k.clone());
    for g in w.letters().iter().rev() {
        v = apply_face(x, g, &v);
    }
    v
}

/// The Lie structure `ψ(c ⊗ k) = μ([c] ⊗ k)` of a face module:
/// `ψ(1_n ⊗ k) = dk` and `ψ(w_I ⊗ k) = −∂_I k`. The sign comes from the
/// algebra isomorphism `∂_I ↦ −[w_I]` between the face presentation of `F∞`
/// and the co-B-construction with its displayed differential.
pub fn lie_structure<X: FaceModule>(x: &X, c: &WedgeTuple, k: &X::K) -> Vector<X::K> {
    if x.bidegree(k).n != c.n() {
        Vector::zero()
    } else if c.is_unit() {
        x.d(k)
    } else {
        -x.face(c, k)
    }
}

/// The face module of a Lie structure `ψ`: `d = ψ(1_n ⊗ −)` and
/// `∂_I = −ψ(w_I ⊗ −)`. `region` and `bidegree` are taken from `base`.
pub struct LieFaceModule<X, P> {
    pub base: X,
    pub psi: P,
}

impl<X, P> FaceModule for LieFaceModule<X, P>
where
    X: FaceModule,
    P: Fn(&WedgeTuple, &X::K) -> Vector<X::K>,
{
    type K = X::K;
    fn bidegree(&self, k: &X::K) -> Bidegree {
        self.base.bidegree(k)
    }
    fn region(&self) -> Vec<(Bidegree, Vec<X::K>)> {
        self.base.region()
    }
    fn d(&self, k: &X::K) -> Vector<X::K> {
        (self.psi)(&WedgeTuple::unit(self.base.bidegree(k).n), k)
    }
    fn face(&self, w: &WedgeTuple, k: &X::K) -> Vector<X::K> {
        (self.psi)(w, k).scale(&Scalar::from(-1))
    }
}
