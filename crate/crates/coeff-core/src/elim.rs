use std::collections::BTreeMap;
use std::sync::Arc;

use crate::{Error, FreeModule, Key, Ring, Scalar, SparseMap, Vector};

/// Reduced row echelon form of a span over a field.
///
/// Each stored row has pivot coefficient 1 at its smallest key, and no
/// row contains another row's pivot. Pivots are chosen by key order, so
/// the form depends only on the span, never on insertion order.
#[derive(Clone, Debug)]
pub struct Echelon<K: Ord> {
    ring: Ring,
    rows: BTreeMap<K, Vector<K>>,
}

impl<K: Key> Echelon<K> {
    pub fn new(ring: Ring) -> Result<Self, Error> {
        ring.require_field()?;
        Ok(Echelon { ring, rows: BTreeMap::new() })
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = &K> {
        self.rows.keys()
    }

    pub fn rows(&self) -> impl Iterator<Item = (&K, &Vector<K>)> {
        self.rows.iter()
    }

    /// Remainder of `v` after clearing every pivot position.
    ///
    /// Panics if `v` has coefficients that do not live in the ring.
    pub fn reduce(&self, v: &Vector<K>) -> Vector<K> {
        let mut out = v.coerce(self.ring).expect("coefficients live in the elimination ring");
        for (p, row) in &self.rows {
            let c = out.coeff(p);
            if !c.is_zero() {
                out.axpy(&-c, row);
            }
        }
        out
    }

    pub fn contains(&self, v: &Vector<K>) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: &Vector<K>) -> bool {
        let r = self.reduce(v);
        let Some((p, c)) = r.leading() else {
            return false;
        };
        let p = p.clone();
        let inv = self.ring.inv(c).expect("nonzero field element is invertible");
        let r = r.scale(&inv);
        for row in self.rows.values_mut() {
            let c = row.coeff(&p);
            if !c.is_zero() {
                row.axpy(&-c, &r);
            }
        }
        self.rows.insert(p, r);
        true
    }

    pub fn extend<'a>(&mut self, vs: impl IntoIterator<Item = &'a Vector<K>>)
    where
        K: 'a,
    {
        for v in vs {
            self.insert(v);
        }
    }
}

/// Rank of the span of `vs`.
pub fn rank<K: Key>(vs: &[Vector<K>], ring: Ring) -> Result<usize, Error> {
    let mut e = Echelon::new(ring)?;
    e.extend(vs);
    Ok(e.rank())
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Aug<K> {
    Image(K),
    Source(usize),
}

impl<K: std::fmt::Display> std::fmt::Display for Aug<K> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Aug::Image(k) => write!(f, "{k}"),
            Aug::Source(j) => write!(f, "#{j}"),
        }
    }
}

/// Basis of the kernel of `e_j ↦ images[j]`, as vectors over column indices.
pub fn nullspace<K: Key>(images: &[Vector<K>], ring: Ring) -> Result<Vec<Vector<usize>>, Error> {
    let mut e = Echelon::new(ring)?;
    for (j, v) in images.iter().enumerate() {
        let mut row: Vector<Aug<K>> = v.iter().map(|(k, c)| (Aug::Image(k.clone()), c.clone())).collect();
        row.add_term(Aug::Source(j), Scalar::one());
        e.insert(&row);
    }
    Ok(e.rows
        .into_iter()
        .filter(|(p, _)| matches!(p, Aug::Source(_)))
        .map(|(_, row)| {
            row.into_iter()
                .map(|(k, c)| match k {
                    Aug::Source(j) => (j, c),
                    Aug::Image(_) => unreachable!("image part of a kernel row is zero"),
                })
                .collect()
        })
        .collect())
}

/// The quotient of `v` by the span of `relations` together with the
/// projection. The quotient basis is the non-pivot keys of `v` in their
/// original order; a pivot key maps to minus the rest of its reduced row.
pub fn quotient_by_span<K: Key>(
    v: &Arc<FreeModule<K>>,
    relations: &[Vector<K>],
    ring: Ring,
) -> Result<(Arc<FreeModule<K>>, SparseMap<K, K>), Error> {
    let mut e = Echelon::new(ring)?;
    for r in relations {
        v.check_support(r)?;
        e.insert(r);
    }
    let q = Arc::new(FreeModule::new(v.basis().iter().filter(|k| !e.rows.contains_key(k)).cloned().collect())?);
    let proj = SparseMap::from_fn(v.clone(), q.clone(), |k| match e.rows.get(k) {
        Some(row) => -&row.filter(|j| j != k),
        None => Vector::basis(k.clone()),
    })?;
    Ok((q, proj))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64) -> Scalar {
        Scalar::from(n)
    }

    #[test]
    fn quotient_examples() {
        let v = Arc::new(FreeModule::new(vec!["a", "b"]).unwrap());
        let (q, p) = quotient_by_span(&v, &[], Ring::Rat).unwrap();
        assert_eq!(q.rank(), 2);
        assert_eq!(p, SparseMap::identity(v.clone()));

        let rel = Vector::from_terms([("a", s(1)), ("b", s(-1))]);
        let (q, p) = quotient_by_span(&v, &[rel.clone()], Ring::Rat).unwrap();
        assert_eq!(q.rank(), 1);
        assert_eq!(p.apply(&Vector::basis("a")).unwrap(), p.apply(&Vector::basis("b")).unwrap());
        assert!(p.apply(&rel).unwrap().is_zero());

        let (q, _) = quotient_by_span(&v, &[Vector::basis("a"), rel], Ring::Mod(3)).unwrap();
        assert_eq!(q.rank(), 0);

        assert!(matches!(quotient_by_span(&v, &[], Ring::Int), Err(Error::Unsupported(_))));
    }

    #[test]
    fn nullspace_small() {
        let imgs = vec![
            Vector::basis("x"),
            Vector::basis("x"),
            Vector::from_terms([("x", s(2)), ("y", s(1))]),
            Vector::zero(),
        ];
        let k = nullspace(&imgs, Ring::Rat).unwrap();
        assert_eq!(k.len(), 2);
        for v in &k {
            let img = v.map_linear(|j| imgs[*j].clone());
            assert!(img.is_zero());
        }
    }

    #[test]
    fn echelon_independent_of_order() {
        let a = Vector::from_terms([("a", s(2)), ("c", s(1))]);
        let b = Vector::from_terms([("a", s(1)), ("b", s(1))]);
        let mut e1 = Echelon::new(Ring::Rat).unwrap();
        e1.extend([&a, &b]);
        let mut e2 = Echelon::new(Ring::Rat).unwrap();
        e2.extend([&b, &a]);
        assert_eq!(e1.rows, e2.rows);
    }
}
