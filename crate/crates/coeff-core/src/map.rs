use std::collections::BTreeMap;
use std::sync::Arc;

use crate::{Error, FreeModule, Key, Scalar, Vector};

/// A linear map between free modules, stored column-wise. Columns are never
/// zero and every key lies in the relevant basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMap<K: Ord, L: Ord> {
    source: Arc<FreeModule<K>>,
    target: Arc<FreeModule<L>>,
    cols: BTreeMap<K, Vector<L>>,
}

impl<K: Key, L: Key> SparseMap<K, L> {
    pub fn zero(source: Arc<FreeModule<K>>, target: Arc<FreeModule<L>>) -> Self {
        SparseMap { source, target, cols: BTreeMap::new() }
    }

    /// Builds a map from `(from, to, c)` entries; repeated pairs add up.
    pub fn from_entries(
        source: Arc<FreeModule<K>>,
        target: Arc<FreeModule<L>>,
        entries: impl IntoIterator<Item = (K, L, Scalar)>,
    ) -> Result<Self, Error> {
        let mut m = Self::zero(source, target);
        for (a, b, c) in entries {
            if !m.source.contains(&a) {
                return Err(Error::UnknownKey(a.to_string()));
            }
            if !m.target.contains(&b) {
                return Err(Error::UnknownKey(b.to_string()));
            }
            m.cols.entry(a).or_default().add_term(b, c);
        }
        m.cols.retain(|_, v| !v.is_zero());
        Ok(m)
    }

    /// Builds a map from the image of each source key.
    pub fn from_fn(
        source: Arc<FreeModule<K>>,
        target: Arc<FreeModule<L>>,
        mut f: impl FnMut(&K) -> Vector<L>,
    ) -> Result<Self, Error> {
        let mut cols = BTreeMap::new();
        for k in source.basis() {
            let v = f(k);
            target.check_support(&v)?;
            if !v.is_zero() {
                cols.insert(k.clone(), v);
            }
        }
        Ok(SparseMap { source, target, cols })
    }

    pub fn source(&self) -> &Arc<FreeModule<K>> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FreeModule<L>> {
        &self.target
    }

    pub fn column(&self, k: &K) -> Vector<L> {
        self.cols.get(k).cloned().unwrap_or_default()
    }

    /// Nonzero entries in (source, target) order.
    pub fn entries(&self) -> impl Iterator<Item = (&K, &L, &Scalar)> {
        self.cols.iter().flat_map(|(k, v)| v.iter().map(move |(l, c)| (k, l, c)))
    }

    pub fn is_zero(&self) -> bool {
        self.cols.is_empty()
    }

    pub fn apply(&self, v: &Vector<K>) -> Result<Vector<L>, Error> {
        self.source.check_support(v)?;
        Ok(v.map_linear(|k| self.column(k)))
    }

    /// `g ∘ f`, defined when the target of `f` is the source of `g`.
    pub fn compose<M: Key>(g: &SparseMap<L, M>, f: &SparseMap<K, L>) -> Result<SparseMap<K, M>, Error> {
        if !Arc::ptr_eq(&f.target, &g.source) && f.target != g.source {
            return Err(Error::ModuleMismatch("target of the inner map differs from the source of the outer".into()));
        }
        let mut cols = BTreeMap::new();
        for (k, v) in &f.cols {
            let w = v.map_linear(|l| g.column(l));
            if !w.is_zero() {
                cols.insert(k.clone(), w);
            }
        }
        Ok(SparseMap { source: f.source.clone(), target: g.target.clone(), cols })
    }
}

impl<K: Key> SparseMap<K, K> {
    pub fn identity(m: Arc<FreeModule<K>>) -> Self {
        let cols = m.basis().iter().map(|k| (k.clone(), Vector::basis(k.clone()))).collect();
        SparseMap { source: m.clone(), target: m, cols }
    }
}
