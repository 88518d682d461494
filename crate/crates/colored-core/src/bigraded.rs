use std::collections::BTreeMap;

use coeff_core::{Error, Key, Vector};

use crate::Report;

/// Bidegree `(n, m)` of an element of `X_{n,m}`; `n` is the simplicial
/// level and doubles as the color.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Bidegree {
    pub n: i64,
    pub m: i64,
}

impl Bidegree {
    pub fn new(n: i64, m: i64) -> Self {
        Bidegree { n, m }
    }

    /// Total degree `n + m`.
    pub fn total(self) -> i64 {
        self.n + self.m
    }
}

/// A finite differential bigraded module with `d : X_{n,m} → X_{n,m-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BigradedModule<K: Ord> {
    grading: BTreeMap<K, Bidegree>,
    components: BTreeMap<Bidegree, Vec<K>>,
    d: BTreeMap<K, Vector<K>>,
}

impl<K: Key> BigradedModule<K> {
    /// Validates `n >= 0`, key uniqueness and the bidegree of `d`.
    /// `d∘d = 0` is reported by [`BigradedModule::check_d_squared`].
    pub fn new(components: Vec<(Bidegree, Vec<K>)>, d: Vec<(K, Vector<K>)>) -> Result<Self, Error> {
        let mut grading = BTreeMap::new();
        let mut comps: BTreeMap<Bidegree, Vec<K>> = BTreeMap::new();
        for (ci, (b, keys)) in components.into_iter().enumerate() {
            if b.n < 0 {
                return Err(Error::input(format!("/components/{ci}/n"), "level must be nonnegative"));
            }
            for k in keys {
                if grading.insert(k.clone(), b).is_some() {
                    return Err(Error::input(format!("/components/{ci}/basis"), format!("duplicate basis key {k}")));
                }
                comps.entry(b).or_default().push(k);
            }
        }
        let mut dm: BTreeMap<K, Vector<K>> = BTreeMap::new();
        for (k, v) in d {
            let b = *grading.get(&k).ok_or_else(|| Error::UnknownKey(k.to_string()))?;
            for (j, _) in &v {
                let bj = *grading.get(j).ok_or_else(|| Error::UnknownKey(j.to_string()))?;
                if bj != Bidegree::new(b.n, b.m - 1) {
                    return Err(Error::input("/d", format!("d({k}) has a term {j} of the wrong bidegree")));
                }
            }
            let e = dm.entry(k).or_default();
            *e = &*e + &v;
        }
        dm.retain(|_, v| !v.is_zero());
        Ok(BigradedModule { grading, components: comps, d: dm })
    }

    pub fn bidegree(&self, k: &K) -> Option<Bidegree> {
        self.grading.get(k).copied()
    }

    pub fn contains(&self, k: &K) -> bool {
        self.grading.contains_key(k)
    }

    /// Basis of `X_{n,m}` in declaration order.
    pub fn basis(&self, b: Bidegree) -> &[K] {
        self.components.get(&b).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn components(&self) -> &BTreeMap<Bidegree, Vec<K>> {
        &self.components
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.grading.keys()
    }

    pub fn max_level(&self) -> i64 {
        self.components.keys().map(|b| b.n).max().unwrap_or(0)
    }

    pub fn d(&self, k: &K) -> Vector<K> {
        self.d.get(k).cloned().unwrap_or_default()
    }

    pub fn differential(&self) -> &BTreeMap<K, Vector<K>> {
        &self.d
    }

    pub fn check_d_squared(&self) -> Report {
        let mut r = Report::new();
        for (b, keys) in &self.components {
            for k in keys {
                let dd = self.d(k).map_linear(|j| self.d(j));
                r.check("d∘d = 0", || format!("({},{}) {}", b.n, b.m, k), &dd);
            }
        }
        r
    }
}
