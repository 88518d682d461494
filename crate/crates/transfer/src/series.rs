use std::cell::{Cell, RefCell};
use std::collections::BTreeMap;

use coeff_core::{Key, Scalar, Vector};
use colored_core::{Bidegree, BigradedModule};
use infty_face_modules::FaceModule;
use koszul_dual::{enumerate_splits, WedgeTuple};

use crate::sdr::SdrData;

/// Perturbation series of a face module `X` along SDR-data `(η, ξ, h)` onto
/// `Y`. With `Ψ_c = ∂_c − Σ_splits sign · Ψ_L h ∂_R` for every proper tuple
/// `c`, the transferred structure is
///
/// * faces `∂̄_c = η Ψ_c ξ` on `Y`,
/// * `ξ̄_c = h Ψ_c ξ`, `η̄_c = η Ψ_c h`, `h̄_c = h Ψ_c h`,
/// * unit components `ξ̄_() = ξ`, `η̄_() = η`, `h̄_() = h`.
///
/// These are the series `η t (1⊗ξ) + η t (1⊗h)(1⊗t)(∇⊗1)(1⊗ξ) + …` with
/// `t = ψ − ε⊗d`, i.e. `t(w_c ⊗ x) = −∂_c x` and `t(1_n ⊗ x) = 0`: a unit
/// factor of `∇` is killed by `t`, so only reduced splits survive and both
/// blocks are strictly shorter than `c`. The recursion therefore stops
/// after at most `|c|` levels.
pub struct Transfer<'a, X: FaceModule, KY: Ord> {
    x: X,
    y: &'a BigradedModule<KY>,
    sdr: &'a SdrData<X::K, KY>,
    memo: RefCell<BTreeMap<(WedgeTuple, X::K), Vector<X::K>>>,
    terms: Cell<usize>,
}

impl<'a, X: FaceModule, KY: Key> Transfer<'a, X, KY> {
    pub fn new(x: X, y: &'a BigradedModule<KY>, sdr: &'a SdrData<X::K, KY>) -> Self {
        Transfer { x, y, sdr, memo: RefCell::default(), terms: Cell::new(0) }
    }

    pub fn source(&self) -> &X {
        &self.x
    }

    pub fn target(&self) -> &BigradedModule<KY> {
        self.y
    }

    /// Number of summands evaluated so far: one face per memo miss plus one
    /// per split expanded.
    pub fn evaluated_terms(&self) -> usize {
        self.terms.get()
    }

    /// `Ψ_c` on a basis element of level `c.n()`.
    pub fn psi(&self, c: &WedgeTuple, k: &X::K) -> Vector<X::K> {
        let key = (c.clone(), k.clone());
        if let Some(v) = self.memo.borrow().get(&key) {
            return v.clone();
        }
        let mut v = self.x.face(c, k);
        let splits = enumerate_splits(c);
        self.terms.set(self.terms.get() + 1 + splits.len());
        for s in splits {
            let hr = self.sdr.h_of(&self.x.face(&s.right, k));
            v.axpy(&Scalar::from(-s.sign), &self.psi_vec(&s.left, &hr));
        }
        self.memo.borrow_mut().insert(key, v.clone());
        v
    }

    pub fn psi_vec(&self, c: &WedgeTuple, v: &Vector<X::K>) -> Vector<X::K> {
        v.map_linear(|k| self.psi(c, k))
    }

    fn level_y(&self, k: &KY) -> i64 {
        self.y.bidegree(k).map_or(-1, |b| b.n)
    }

    fn level_x(&self, k: &X::K) -> i64 {
        self.x.bidegree(k).n
    }

    pub fn xi_bar(&self, c: &WedgeTuple, k: &KY) -> Vector<X::K> {
        if c.n() != self.level_y(k) {
            return Vector::zero();
        }
        let xk = self.sdr.xi_of(&Vector::basis(k.clone()));
        if c.is_unit() {
            xk
        } else {
            self.sdr.h_of(&self.psi_vec(c, &xk))
        }
    }

    pub fn eta_bar(&self, c: &WedgeTuple, k: &X::K) -> Vector<KY> {
        if c.n() != self.level_x(k) {
            return Vector::zero();
        }
        let e = Vector::basis(k.clone());
        if c.is_unit() {
            self.sdr.eta_of(&e)
        } else {
            self.sdr.eta_of(&self.psi_vec(c, &self.sdr.h_of(&e)))
        }
    }

    pub fn h_bar(&self, c: &WedgeTuple, k: &X::K) -> Vector<X::K> {
        if c.n() != self.level_x(k) {
            return Vector::zero();
        }
        let hk = self.sdr.h_of(&Vector::basis(k.clone()));
        if c.is_unit() {
            hk
        } else {
            self.sdr.h_of(&self.psi_vec(c, &hk))
        }
    }
}

/// `Y` with the transferred faces.
impl<X: FaceModule, KY: Key> FaceModule for Transfer<'_, X, KY> {
    type K = KY;

    fn bidegree(&self, k: &KY) -> Bidegree {
        self.y.bidegree(k).unwrap_or_else(|| panic!("{k} is not a basis key of the target"))
    }

    fn region(&self) -> Vec<(Bidegree, Vec<KY>)> {
        self.y.components().iter().map(|(b, ks)| (*b, ks.clone())).collect()
    }

    fn d(&self, k: &KY) -> Vector<KY> {
        self.y.d(k)
    }

    fn face(&self, c: &WedgeTuple, k: &KY) -> Vector<KY> {
        if c.n() != self.level_y(k) || c.is_unit() {
            return Vector::zero();
        }
        self.sdr.eta_of(&self.psi_vec(c, &self.sdr.xi_of(&Vector::basis(k.clone()))))
    }
}

/// Summands of the fully unfolded series for `Ψ_c`:
/// `N(c) = 1 + Σ_splits N(L)`.
pub fn unfolded_summands(c: &WedgeTuple) -> usize {
    1 + enumerate_splits(c).iter().map(|s| unfolded_summands(&s.left)).sum::<usize>()
}
