use std::collections::BTreeSet;

use crate::{Error, Key, Vector};

/// A finite-rank free module on an ordered list of unique keys.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeModule<K: Ord> {
    basis: Vec<K>,
    index: BTreeSet<K>,
}

impl<K: Key> FreeModule<K> {
    /// Fails on duplicate keys.
    pub fn new(basis: Vec<K>) -> Result<Self, Error> {
        let mut index = BTreeSet::new();
        for k in &basis {
            if !index.insert(k.clone()) {
                return Err(Error::input("basis", format!("duplicate basis key {k}")));
            }
        }
        Ok(FreeModule { basis, index })
    }

    /// Sorted, deduplicated basis.
    pub fn from_keys(keys: impl IntoIterator<Item = K>) -> Self {
        let index: BTreeSet<K> = keys.into_iter().collect();
        FreeModule { basis: index.iter().cloned().collect(), index }
    }

    pub fn zero() -> Self {
        FreeModule { basis: Vec::new(), index: BTreeSet::new() }
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[K] {
        &self.basis
    }

    pub fn contains(&self, k: &K) -> bool {
        self.index.contains(k)
    }

    /// Fails with the first key outside the basis.
    pub fn check_support(&self, v: &Vector<K>) -> Result<(), Error> {
        match v.keys().find(|k| !self.contains(k)) {
            Some(k) => Err(Error::UnknownKey(k.to_string())),
            None => Ok(()),
        }
    }
}
