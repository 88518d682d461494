use std::collections::{BTreeMap, BTreeSet};

use coeff_core::{sign, Error, Key, Scalar, Tensor, Vector};

use crate::Report;

/// Colors `(s, t)` and degree `m` of a homogeneous element of `X(s,t)_m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tricolor {
    pub s: i64,
    pub t: i64,
    pub m: i64,
}

/// A colored differential module given by homogeneous basis keys.
pub trait Colored {
    type K: Key;
    fn tricolor(&self, k: &Self::K) -> Tricolor;
    fn d(&self, k: &Self::K) -> Vector<Self::K>;
    /// Basis of `X(s,t)_m`.
    fn component(&self, c: Tricolor) -> Vec<Self::K>;
    /// Every `(s,t,m)` whose component is nonzero.
    fn support(&self) -> BTreeSet<Tricolor>;
}

/// A finite colored differential module with explicit basis and differential.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredModule<K: Ord> {
    grading: BTreeMap<K, Tricolor>,
    components: BTreeMap<Tricolor, Vec<K>>,
    d: BTreeMap<K, Vector<K>>,
}

impl<K: Key> ColoredModule<K> {
    /// Validates colors (nonnegative), key uniqueness and that `d` lowers
    /// degree by one inside a fixed color pair. `d∘d = 0` is checked
    /// separately by [`check_colored_d_squared`].
    pub fn new(components: Vec<(Tricolor, Vec<K>)>, d: Vec<(K, Vector<K>)>) -> Result<Self, Error> {
        let mut grading = BTreeMap::new();
        let mut comps: BTreeMap<Tricolor, Vec<K>> = BTreeMap::new();
        for (ci, (c, keys)) in components.into_iter().enumerate() {
            if c.s < 0 || c.t < 0 {
                return Err(Error::input(format!("/components/{ci}"), "colors must be nonnegative"));
            }
            for k in keys {
                if grading.insert(k.clone(), c).is_some() {
                    return Err(Error::input(format!("/components/{ci}"), format!("duplicate basis key {k}")));
                }
                comps.entry(c).or_default().push(k);
            }
        }
        let mut dm: BTreeMap<K, Vector<K>> = BTreeMap::new();
        for (k, v) in d {
            let c = *grading.get(&k).ok_or_else(|| Error::UnknownKey(k.to_string()))?;
            for (j, _) in &v {
                let cj = *grading.get(j).ok_or_else(|| Error::UnknownKey(j.to_string()))?;
                if cj != (Tricolor { m: c.m - 1, ..c }) {
                    return Err(Error::input("/d", format!("d({k}) has a term {j} of the wrong color or degree")));
                }
            }
            let e = dm.entry(k).or_default();
            *e = &*e + &v;
        }
        dm.retain(|_, v| !v.is_zero());
        Ok(ColoredModule { grading, components: comps, d: dm })
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.grading.keys()
    }

    pub fn components(&self) -> &BTreeMap<Tricolor, Vec<K>> {
        &self.components
    }

    pub fn differential(&self) -> &BTreeMap<K, Vector<K>> {
        &self.d
    }
}

impl<K: Key> Colored for ColoredModule<K> {
    type K = K;
    fn tricolor(&self, k: &K) -> Tricolor {
        self.grading[k]
    }
    fn d(&self, k: &K) -> Vector<K> {
        self.d.get(k).cloned().unwrap_or_default()
    }
    fn component(&self, c: Tricolor) -> Vec<K> {
        self.components.get(&c).cloned().unwrap_or_default()
    }
    fn support(&self) -> BTreeSet<Tricolor> {
        self.components.keys().copied().collect()
    }
}

/// The unit colored algebra `K_I` on colors `0..=max_color`: one basis
/// element `1_s` in each `(s,s)_0`, zero differential.
pub fn unit_module(max_color: i64) -> ColoredModule<String> {
    let comps = (0..=max_color).map(|s| (Tricolor { s, t: s, m: 0 }, vec![format!("1_{s}")])).collect();
    ColoredModule::new(comps, vec![]).expect("unit module is well formed")
}

/// `X ⊗ Y` with components `⊕_{l, p+q=m} X(s,l)_p ⊗ Y(l,t)_q`, computed on
/// demand.
pub struct ColoredTensor<'a, X, Y> {
    pub x: &'a X,
    pub y: &'a Y,
}

impl<'a, X: Colored, Y: Colored> ColoredTensor<'a, X, Y> {
    pub fn new(x: &'a X, y: &'a Y) -> Self {
        ColoredTensor { x, y }
    }
}

impl<X: Colored, Y: Colored> Colored for ColoredTensor<'_, X, Y> {
    type K = Tensor<X::K, Y::K>;

    fn tricolor(&self, k: &Self::K) -> Tricolor {
        let a = self.x.tricolor(&k.0);
        let b = self.y.tricolor(&k.1);
        debug_assert_eq!(a.t, b.s, "inner colors of a tensor basis element agree");
        Tricolor { s: a.s, t: b.t, m: a.m + b.m }
    }

    fn d(&self, k: &Self::K) -> Vector<Self::K> {
        let a = self.x.tricolor(&k.0);
        let mut out: Vector<Self::K> = self.x.d(&k.0).iter().map(|(x, c)| (Tensor(x.clone(), k.1.clone()), c.clone())).collect();
        let e = Scalar::from(sign(a.s - a.t + a.m));
        for (y, c) in &self.y.d(&k.1) {
            out.add_term(Tensor(k.0.clone(), y.clone()), &e * c);
        }
        out
    }

    fn component(&self, c: Tricolor) -> Vec<Self::K> {
        let mut out = Vec::new();
        for a in self.x.support().into_iter().filter(|a| a.s == c.s) {
            let b = Tricolor { s: a.t, t: c.t, m: c.m - a.m };
            let ys = self.y.component(b);
            if ys.is_empty() {
                continue;
            }
            for x in self.x.component(a) {
                out.extend(ys.iter().map(|y| Tensor(x.clone(), y.clone())));
            }
        }
        out
    }

    fn support(&self) -> BTreeSet<Tricolor> {
        let ys = self.y.support();
        let mut out = BTreeSet::new();
        for a in self.x.support() {
            for b in ys.iter().filter(|b| b.s == a.t) {
                out.insert(Tricolor { s: a.s, t: b.t, m: a.m + b.m });
            }
        }
        out
    }
}

/// Checks `d∘d = 0` on every basis element of every nonzero component.
pub fn check_colored_d_squared<X: Colored>(x: &X) -> Report {
    let mut r = Report::new();
    for c in x.support() {
        for k in x.component(c) {
            let dd = x.d(&k).map_linear(|j| x.d(j));
            r.check("d∘d = 0", || format!("({},{})_{} {}", c.s, c.t, c.m, k), &dd);
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tc(s: i64, t: i64, m: i64) -> Tricolor {
        Tricolor { s, t, m }
    }

    #[test]
    fn sign_on_second_factor() {
        let x = ColoredModule::new(vec![(tc(2, 1, 0), vec!["x"])], vec![]).unwrap();
        let y = ColoredModule::new(
            vec![(tc(1, 0, 1), vec!["y"]), (tc(1, 0, 0), vec!["z"])],
            vec![("y", Vector::basis("z"))],
        )
        .unwrap();
        let t = ColoredTensor::new(&x, &y);
        let d = t.d(&Tensor("x", "y"));
        assert_eq!(d, Vector::term(Tensor("x", "z"), Scalar::from(-1)));
    }

    #[test]
    fn unit_is_left_identity() {
        let y = ColoredModule::new(
            vec![(tc(1, 0, 1), vec!["y"]), (tc(1, 0, 0), vec!["z"]), (tc(0, 0, 3), vec!["w"])],
            vec![("y", Vector::term("z", Scalar::from(2)))],
        )
        .unwrap();
        let u = unit_module(2);
        let t = ColoredTensor::new(&u, &y);
        assert_eq!(t.support(), y.support());
        for c in y.support() {
            let lhs: Vec<_> = t.component(c).into_iter().map(|k| k.1).collect();
            assert_eq!(lhs, y.component(c));
            for k in t.component(c) {
                let strip: Vector<&str> = t.d(&k).iter().map(|(kk, c)| (kk.1, c.clone())).collect();
                assert_eq!(strip, y.d(&k.1));
            }
        }
    }

    #[test]
    fn rejects_bad_differential() {
        let e = ColoredModule::new(vec![(tc(0, 0, 1), vec!["a"]), (tc(0, 1, 0), vec!["b"])], vec![("a", Vector::basis("b"))]);
        assert!(e.is_err());
        assert!(ColoredModule::<&str>::new(vec![(tc(-1, 0, 0), vec!["a"])], vec![]).is_err());
    }
}
