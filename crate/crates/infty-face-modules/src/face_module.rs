use std::collections::{BTreeMap, BTreeSet};

use coeff_core::{Columns, Error, Key, Vector};
use colored_core::{Bidegree, BigradedModule};
use itertools::Itertools;
use koszul_dual::WedgeTuple;
use simplicial_face_algebra::StrictFaces;

/// Faces keyed by wedge tuple; absent entries and absent columns are zero.
pub type FaceFamily<K> = BTreeMap<WedgeTuple, Columns<K, K>>;

/// A morphism or homotopy family `f_I : X_n → Y_{n-k}`, including the unit
/// tuples `1_n` for `f_()`.
pub type MapFamily<K, L> = BTreeMap<WedgeTuple, Columns<K, L>>;

/// A differential bigraded module with ∞-simplicial faces, evaluated on
/// basis keys. `region` lists the basis on which identities are tested;
/// `d` and `face` may produce keys outside it.
pub trait FaceModule {
    type K: Key;
    fn bidegree(&self, k: &Self::K) -> Bidegree;
    fn region(&self) -> Vec<(Bidegree, Vec<Self::K>)>;
    fn d(&self, k: &Self::K) -> Vector<Self::K>;
    /// `∂_I k`; zero unless `k` lies in level `I.n()`. Never called on units.
    fn face(&self, w: &WedgeTuple, k: &Self::K) -> Vector<Self::K>;
}

impl<T: FaceModule> FaceModule for &T {
    type K = T::K;
    fn bidegree(&self, k: &T::K) -> Bidegree {
        (**self).bidegree(k)
    }
    fn region(&self) -> Vec<(Bidegree, Vec<T::K>)> {
        (**self).region()
    }
    fn d(&self, k: &T::K) -> Vector<T::K> {
        (**self).d(k)
    }
    fn face(&self, w: &WedgeTuple, k: &T::K) -> Vector<T::K> {
        (**self).face(w, k)
    }
}

pub fn apply_d<X: FaceModule>(x: &X, v: &Vector<X::K>) -> Vector<X::K> {
    v.map_linear(|k| x.d(k))
}

pub fn apply_face<X: FaceModule>(x: &X, w: &WedgeTuple, v: &Vector<X::K>) -> Vector<X::K> {
    v.map_linear(|k| x.face(w, k))
}

/// Every proper wedge tuple of ambient `n`, by length and then
/// lexicographically.
pub fn face_tuples(n: i64) -> Vec<WedgeTuple> {
    (1..=n.max(0) as usize)
        .flat_map(|k| (0..=n).combinations(k))
        .map(|idx| WedgeTuple::new(n, idx).expect("k <= n"))
        .collect()
}

/// Explicit finite module with a stored face family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExplicitFaceModule<K: Ord> {
    module: BigradedModule<K>,
    faces: FaceFamily<K>,
}

impl<K: Key> ExplicitFaceModule<K> {
    /// Validates that each entry is a proper tuple whose columns map level
    /// `n` into bidegree `(n-k, m+k-1)`.
    pub fn new(module: BigradedModule<K>, mut faces: FaceFamily<K>) -> Result<Self, Error> {
        for (w, cols) in &faces {
            let at = || format!("/faces/{w}");
            if w.is_unit() {
                return Err(Error::input(at(), "the empty tuple is not a face"));
            }
            let k = w.k() as i64;
            for (src, v) in cols {
                let b = module.bidegree(src).ok_or_else(|| Error::input(at(), format!("unknown basis key {src}")))?;
                if b.n != w.n() {
                    return Err(Error::input(at(), format!("{src} is not in level {}", w.n())));
                }
                for l in v.keys() {
                    if module.bidegree(l) != Some(Bidegree::new(b.n - k, b.m + k - 1)) {
                        return Err(Error::input(at(), format!("image {l} of {src} has the wrong bidegree")));
                    }
                }
            }
        }
        for cols in faces.values_mut() {
            cols.retain(|_, v| !v.is_zero());
        }
        faces.retain(|_, c| !c.is_empty());
        Ok(ExplicitFaceModule { module, faces })
    }

    /// Strict faces `∂_i` become the length-one faces; all longer faces vanish.
    pub fn from_strict(module: BigradedModule<K>, strict: &StrictFaces<K>) -> Result<Self, Error> {
        let mut faces = FaceFamily::new();
        for (&(n, i), cols) in strict {
            let w = WedgeTuple::new(n, vec![i]).map_err(|e| Error::input(format!("/faces/({n},{i})"), e.to_string()))?;
            faces.insert(w, cols.clone());
        }
        Self::new(module, faces)
    }

    pub fn module(&self) -> &BigradedModule<K> {
        &self.module
    }

    pub fn faces(&self) -> &FaceFamily<K> {
        &self.faces
    }

    /// The same module with keys renamed by an injective `f`.
    pub fn relabel<L: Key>(&self, f: impl Fn(&K) -> L) -> Result<ExplicitFaceModule<L>, Error> {
        let vec = |v: &Vector<K>| -> Vector<L> { v.iter().map(|(k, c)| (f(k), c.clone())).collect() };
        let comps = self.module.components().iter().map(|(b, ks)| (*b, ks.iter().map(&f).collect())).collect();
        let d = self.module.differential().iter().map(|(k, v)| (f(k), vec(v))).collect();
        let faces = self
            .faces
            .iter()
            .map(|(w, cols)| (w.clone(), cols.iter().map(|(k, v)| (f(k), vec(v))).collect()))
            .collect();
        ExplicitFaceModule::new(BigradedModule::new(comps, d)?, faces)
    }
}

impl<K: Key> FaceModule for ExplicitFaceModule<K> {
    type K = K;
    fn bidegree(&self, k: &K) -> Bidegree {
        self.module.bidegree(k).unwrap_or_else(|| panic!("{k} is not a basis key"))
    }
    fn region(&self) -> Vec<(Bidegree, Vec<K>)> {
        self.module.components().iter().map(|(b, ks)| (*b, ks.clone())).collect()
    }
    fn d(&self, k: &K) -> Vector<K> {
        self.module.d(k)
    }
    fn face(&self, w: &WedgeTuple, k: &K) -> Vector<K> {
        self.faces.get(w).and_then(|c| c.get(k)).cloned().unwrap_or_default()
    }
}

/// Stores the region of `x` with its differential and every face as an
/// explicit module. Fails if `d` or a face leaves the region.
pub fn materialize<X: FaceModule>(x: &X) -> Result<ExplicitFaceModule<X::K>, Error> {
    let region = x.region();
    let keys: BTreeSet<&X::K> = region.iter().flat_map(|(_, ks)| ks).collect();
    let mut d = Vec::new();
    let mut faces = FaceFamily::new();
    for (b, ks) in &region {
        for k in ks {
            let dk = x.d(k);
            if let Some(out) = dk.keys().find(|l| !keys.contains(l)) {
                return Err(Error::Unsupported(format!("d({k}) leaves the region at {out}")));
            }
            d.push((k.clone(), dk));
            for w in face_tuples(b.n) {
                let v = x.face(&w, k);
                if let Some(out) = v.keys().find(|l| !keys.contains(l)) {
                    return Err(Error::Unsupported(format!("{w}({k}) leaves the region at {out}")));
                }
                if !v.is_zero() {
                    faces.entry(w).or_default().insert(k.clone(), v);
                }
            }
        }
    }
    ExplicitFaceModule::new(BigradedModule::new(region, d)?, faces)
}
