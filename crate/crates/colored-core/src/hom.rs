use std::collections::BTreeMap;

use coeff_core::{sign, Key, Scalar, Vector};

use crate::BigradedModule;

/// `f ∈ hom(X;Y)(s,t)_m`: a map `X_{t,•} → Y_{s,•+m}` stored on basis keys.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomElement<K: Ord, L: Ord> {
    pub s: i64,
    pub t: i64,
    pub m: i64,
    map: BTreeMap<K, Vector<L>>,
}

/// `(-1)^{s-t+m+1}`: the sign of `f d` in `d(f)`.
pub fn hom_sign(s: i64, t: i64, m: i64) -> i64 {
    sign(s - t + m + 1)
}

impl<K: Key, L: Key> HomElement<K, L> {
    pub fn zero(s: i64, t: i64, m: i64) -> Self {
        HomElement { s, t, m, map: BTreeMap::new() }
    }

    /// Columns that are zero are dropped.
    pub fn new(s: i64, t: i64, m: i64, cols: impl IntoIterator<Item = (K, Vector<L>)>) -> Self {
        let mut map = BTreeMap::new();
        for (k, v) in cols {
            if !v.is_zero() {
                map.insert(k, v);
            }
        }
        HomElement { s, t, m, map }
    }

    pub fn apply_key(&self, k: &K) -> Vector<L> {
        self.map.get(k).cloned().unwrap_or_default()
    }

    pub fn apply(&self, v: &Vector<K>) -> Vector<L> {
        v.map_linear(|k| self.apply_key(k))
    }

    pub fn is_zero(&self) -> bool {
        self.map.is_empty()
    }

    /// Checks that every column lands in `Y_{s,m+deg}` from `X_{t,deg}`.
    pub fn respects_degree(&self, x: &BigradedModule<K>, y: &BigradedModule<L>) -> bool {
        self.map.iter().all(|(k, v)| {
            let Some(b) = x.bidegree(k) else { return false };
            b.n == self.t
                && v.keys().all(|l| y.bidegree(l).is_some_and(|c| c.n == self.s && c.m == b.m + self.m))
        })
    }
}

/// `d(f) = d_Y f + (-1)^{s-t+m+1} f d_X`, evaluated on the basis of `X_t`.
pub fn hom_differential<K: Key, L: Key>(
    f: &HomElement<K, L>,
    x: &BigradedModule<K>,
    y: &BigradedModule<L>,
) -> HomElement<K, L> {
    let e = Scalar::from(hom_sign(f.s, f.t, f.m));
    let cols = x
        .components()
        .iter()
        .filter(|(b, _)| b.n == f.t)
        .flat_map(|(_, keys)| keys.iter())
        .map(|k| {
            let mut v = f.apply_key(k).map_linear(|l| y.d(l));
            v.axpy(&e, &f.apply(&x.d(k)));
            (k.clone(), v)
        });
    HomElement::new(f.s, f.t, f.m - 1, cols)
}

/// `g f` when the inner colors agree, otherwise the zero element of
/// `hom(g.s, f.t)_{g.m+f.m}`.
pub fn hom_compose<K: Key, L: Key, M: Key>(g: &HomElement<L, M>, f: &HomElement<K, L>) -> HomElement<K, M> {
    if g.t != f.s {
        return HomElement::zero(g.s, f.t, g.m + f.m);
    }
    let cols = f.map.iter().map(|(k, v)| (k.clone(), g.apply(v)));
    HomElement::new(g.s, f.t, g.m + f.m, cols)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Bidegree;

    fn module() -> BigradedModule<&'static str> {
        BigradedModule::new(
            vec![
                (Bidegree::new(0, 1), vec!["a1"]),
                (Bidegree::new(0, 0), vec!["a0"]),
                (Bidegree::new(1, 1), vec!["b1"]),
                (Bidegree::new(1, 0), vec!["b0"]),
            ],
            vec![("a1", Vector::basis("a0")), ("b1", Vector::basis("b0"))],
        )
        .unwrap()
    }

    #[test]
    fn sign_examples() {
        assert_eq!(hom_sign(0, 0, 0), -1);
        assert_eq!(hom_sign(1, 0, 0), 1);
    }

    #[test]
    fn chain_map_has_zero_differential() {
        let x = module();
        // s=1, t=0, m=0: d(f) = df + fd, zero for the anti-chain map below.
        let f = HomElement::new(1, 0, 0, [("a1", Vector::basis("b1")), ("a0", Vector::term("b0", Scalar::from(-1)))]);
        assert!(f.respects_degree(&x, &x));
        assert!(hom_differential(&f, &x, &x).is_zero());
        // s=t=0, m=0: d(f) = df - fd, zero for the identity.
        let id = HomElement::new(0, 0, 0, [("a1", Vector::basis("a1")), ("a0", Vector::basis("a0"))]);
        assert!(hom_differential(&id, &x, &x).is_zero());
    }

    #[test]
    fn mismatched_colors_compose_to_zero() {
        let g = HomElement::new(2, 1, 0, [("x", Vector::basis("y"))]);
        let f = HomElement::new(3, 0, 0, [("w", Vector::basis("x"))]);
        let gf = hom_compose(&g, &f);
        assert!(gf.is_zero());
        assert_eq!((gf.s, gf.t), (2, 0));
        let f = HomElement::new(1, 0, 0, [("w", Vector::basis("x"))]);
        assert_eq!(hom_compose(&g, &f).apply_key(&"w"), Vector::basis("y"));
    }
}
