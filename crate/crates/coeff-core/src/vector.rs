use std::collections::btree_map::{self, BTreeMap};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::{Key, Scalar};

/// A finite formal sum over basis keys. Zero coefficients are never stored,
/// so structural equality is mathematical equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vector<K: Ord> {
    terms: BTreeMap<K, Scalar>,
}

impl<K: Ord> Default for Vector<K> {
    fn default() -> Self {
        Vector { terms: BTreeMap::new() }
    }
}

impl<K: Key> Vector<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(k: K) -> Self {
        Self::term(k, Scalar::one())
    }

    pub fn term(k: K, c: Scalar) -> Self {
        let mut v = Self::zero();
        v.add_term(k, c);
        v
    }

    pub fn from_terms(it: impl IntoIterator<Item = (K, Scalar)>) -> Self {
        let mut v = Self::zero();
        for (k, c) in it {
            v.add_term(k, c);
        }
        v
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, k: &K) -> Scalar {
        self.terms.get(k).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn iter(&self) -> btree_map::Iter<'_, K, Scalar> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    /// Smallest key with a nonzero coefficient.
    pub fn leading(&self) -> Option<(&K, &Scalar)> {
        self.terms.iter().next()
    }

    pub fn add_term(&mut self, k: K, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(k) {
            btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += c * other`.
    pub fn axpy(&mut self, c: &Scalar, other: &Vector<K>) {
        if c.is_zero() {
            return;
        }
        for (k, a) in &other.terms {
            self.add_term(k.clone(), c * a);
        }
    }

    pub fn scale(&self, c: &Scalar) -> Vector<K> {
        let mut out = Vector::zero();
        out.axpy(c, self);
        out
    }

    /// Linear extension of `f` defined on basis keys.
    pub fn map_linear<L: Key>(&self, mut f: impl FnMut(&K) -> Vector<L>) -> Vector<L> {
        let mut out = Vector::zero();
        for (k, c) in &self.terms {
            out.axpy(c, &f(k));
        }
        out
    }

    /// Fallible linear extension.
    pub fn try_map_linear<L: Key, E>(
        &self,
        mut f: impl FnMut(&K) -> Result<Vector<L>, E>,
    ) -> Result<Vector<L>, E> {
        let mut out = Vector::zero();
        for (k, c) in &self.terms {
            out.axpy(c, &f(k)?);
        }
        Ok(out)
    }

    /// The same sum with coefficients moved into `ring`; terms that vanish
    /// there are dropped.
    pub fn coerce(&self, ring: crate::Ring) -> Result<Vector<K>, crate::Error> {
        let mut out = Vector::zero();
        for (k, c) in &self.terms {
            out.add_term(k.clone(), ring.coerce(c)?);
        }
        Ok(out)
    }

    /// Keeps only the terms whose key satisfies `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&K) -> bool) -> Vector<K> {
        Vector { terms: self.terms.iter().filter(|(k, _)| keep(k)).map(|(k, c)| (k.clone(), c.clone())).collect() }
    }
}

impl<K: Key> FromIterator<(K, Scalar)> for Vector<K> {
    fn from_iter<I: IntoIterator<Item = (K, Scalar)>>(iter: I) -> Self {
        Vector::from_terms(iter)
    }
}

impl<K: Key> IntoIterator for Vector<K> {
    type Item = (K, Scalar);
    type IntoIter = btree_map::IntoIter<K, Scalar>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.into_iter()
    }
}

impl<'a, K: Key> IntoIterator for &'a Vector<K> {
    type Item = (&'a K, &'a Scalar);
    type IntoIter = btree_map::Iter<'a, K, Scalar>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl<K: Key> Add for &Vector<K> {
    type Output = Vector<K>;
    fn add(self, rhs: &Vector<K>) -> Vector<K> {
        let mut out = self.clone();
        out.axpy(&Scalar::one(), rhs);
        out
    }
}

impl<K: Key> Sub for &Vector<K> {
    type Output = Vector<K>;
    fn sub(self, rhs: &Vector<K>) -> Vector<K> {
        let mut out = self.clone();
        out.axpy(&Scalar::from(-1), rhs);
        out
    }
}

impl<K: Key> Add for Vector<K> {
    type Output = Vector<K>;
    fn add(self, rhs: Vector<K>) -> Vector<K> {
        &self + &rhs
    }
}

impl<K: Key> Sub for Vector<K> {
    type Output = Vector<K>;
    fn sub(self, rhs: Vector<K>) -> Vector<K> {
        &self - &rhs
    }
}

impl<K: Key> Neg for &Vector<K> {
    type Output = Vector<K>;
    fn neg(self) -> Vector<K> {
        self.scale(&Scalar::from(-1))
    }
}

impl<K: Key> Neg for Vector<K> {
    type Output = Vector<K>;
    fn neg(self) -> Vector<K> {
        -&self
    }
}

impl<K: Key> fmt::Display for Vector<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (k, c)) in self.terms.iter().enumerate() {
            let s = c.to_string();
            let (neg, mag) = match s.strip_prefix('-') {
                Some(m) => (true, m.to_string()),
                None => (false, s),
            };
            match (n, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if mag != "1" {
                write!(f, "{mag}*")?;
            }
            write!(f, "{k}")?;
        }
        Ok(())
    }
}

/// A pure tensor of two basis keys, ordered lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tensor<K, L>(pub K, pub L);

impl<K: fmt::Display, L: fmt::Display> fmt::Display for Tensor<K, L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}⊗{}", self.0, self.1)
    }
}
