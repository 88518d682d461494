use std::collections::BTreeMap;

use coeff_core::{apply_columns, Columns, Error, Key, Scalar, Vector};
use colored_core::{Bidegree, BigradedModule, Report};
use itertools::Itertools;

/// Strict faces `∂_i : X_{n,•} → X_{n-1,•}` keyed by `(n, i)`; absent
/// entries are zero maps.
pub type StrictFaces<K> = BTreeMap<(i64, i64), Columns<K, K>>;

fn face<K: Key>(faces: &StrictFaces<K>, n: i64, i: i64, v: &Vector<K>) -> Vector<K> {
    faces.get(&(n, i)).map(|c| apply_columns(c, v)).unwrap_or_default()
}

fn check_shape<K: Key>(x: &BigradedModule<K>, faces: &StrictFaces<K>) -> Result<(), Error> {
    for (&(n, i), cols) in faces {
        if n < 1 || i < 0 || i > n {
            return Err(Error::input(format!("faces/({n},{i})"), "face index out of range"));
        }
        for (k, v) in cols {
            let b = x.bidegree(k).ok_or_else(|| Error::UnknownKey(k.to_string()))?;
            if b.n != n {
                return Err(Error::input(format!("faces/({n},{i})"), format!("{k} is not in level {n}")));
            }
            for l in v.keys() {
                if x.bidegree(l) != Some(Bidegree::new(n - 1, b.m)) {
                    return Err(Error::input(format!("faces/({n},{i})"), format!("image {l} has the wrong bidegree")));
                }
            }
        }
    }
    Ok(())
}

fn basis_at_level<K: Key>(x: &BigradedModule<K>, n: i64) -> impl Iterator<Item = &K> {
    x.components().iter().filter(move |(b, _)| b.n == n).flat_map(|(_, ks)| ks.iter())
}

/// Checks `d∂_i + ∂_i d = 0` and `∂_i ∂_j = ∂_{j-1} ∂_i` for `i < j` on
/// every basis element.
pub fn check_strict_module<K: Key>(x: &BigradedModule<K>, faces: &StrictFaces<K>) -> Result<Report, Error> {
    check_shape(x, faces)?;
    let mut r = Report::new();
    for n in 1..=x.max_level() {
        for k in basis_at_level(x, n) {
            let e = Vector::basis(k.clone());
            for i in 0..=n {
                let a = face(faces, n, i, &e).map_linear(|j| x.d(j));
                let b = face(faces, n, i, &x.d(k));
                r.check("d∂ + ∂d = 0", || format!("n={n} i={i} {k}"), &(&a + &b));
            }
            if n < 2 {
                continue;
            }
            for (i, j) in (0..=n).tuple_combinations() {
                let lhs = face(faces, n - 1, i, &face(faces, n, j, &e));
                let rhs = face(faces, n - 1, j - 1, &face(faces, n, i, &e));
                r.check("∂_i∂_j = ∂_{j-1}∂_i", || format!("n={n} i={i} j={j} {k}"), &(&lhs - &rhs));
            }
        }
    }
    Ok(r)
}

/// Checks that `f` is a chain map commuting with every face.
pub fn check_strict_map<K: Key, L: Key>(
    x: &BigradedModule<K>,
    xf: &StrictFaces<K>,
    y: &BigradedModule<L>,
    yf: &StrictFaces<L>,
    f: &Columns<K, L>,
) -> Report {
    let mut r = Report::new();
    for k in x.keys() {
        let e = Vector::basis(k.clone());
        let fk = apply_columns(f, &e);
        let dd = &fk.map_linear(|l| y.d(l)) - &apply_columns(f, &x.d(k));
        r.check("df = fd", || k.to_string(), &dd);
        let n = x.bidegree(k).expect("key of x").n;
        for i in 0..=n {
            let lhs = yf.get(&(n, i)).map(|c| apply_columns(c, &fk)).unwrap_or_default();
            let rhs = apply_columns(f, &face(xf, n, i, &e));
            r.check("∂_i f = f ∂_i", || format!("n={n} i={i} {k}"), &(&lhs - &rhs));
        }
    }
    r
}

/// Checks `dh + hd = f − g` and `∂_i h + h ∂_i = 0`.
pub fn check_strict_homotopy<K: Key, L: Key>(
    x: &BigradedModule<K>,
    xf: &StrictFaces<K>,
    y: &BigradedModule<L>,
    yf: &StrictFaces<L>,
    f: &Columns<K, L>,
    g: &Columns<K, L>,
    h: &Columns<K, L>,
) -> Report {
    let mut r = Report::new();
    for k in x.keys() {
        let e = Vector::basis(k.clone());
        let hk = apply_columns(h, &e);
        let mut v = hk.map_linear(|l| y.d(l));
        v.axpy(&Scalar::one(), &apply_columns(h, &x.d(k)));
        v.axpy(&Scalar::from(-1), &apply_columns(f, &e));
        v.axpy(&Scalar::one(), &apply_columns(g, &e));
        r.check("dh + hd = f − g", || k.to_string(), &v);
        let n = x.bidegree(k).expect("key of x").n;
        for i in 0..=n {
            let mut w = yf.get(&(n, i)).map(|c| apply_columns(c, &hk)).unwrap_or_default();
            w.axpy(&Scalar::one(), &apply_columns(h, &face(xf, n, i, &e)));
            r.check("∂_i h + h ∂_i = 0", || format!("n={n} i={i} {k}"), &w);
        }
    }
    r
}

/// Simplices of `Δ^top` as a strict face module: `X_{n,1}` and `X_{n,0}`
/// are free on the increasing `(n+1)`-tuples in `0..=top`, written `e…`
/// and `f…`, with `d e_σ = f_σ`, `∂_i e_σ = e_{d_i σ}` and
/// `∂_i f_σ = −f_{d_i σ}` so that faces anticommute with `d`.
pub fn standard_simplex_model(top: i64, n_max: i64) -> (BigradedModule<String>, StrictFaces<String>) {
    let name = |p: &str, s: &[i64]| format!("{p}{}", s.iter().join(""));
    let mut comps = Vec::new();
    let mut d = Vec::new();
    let mut faces: StrictFaces<String> = BTreeMap::new();
    for n in 0..=n_max.min(top) {
        let simplices: Vec<Vec<i64>> = (0..=top).combinations(n as usize + 1).collect();
        comps.push((Bidegree::new(n, 1), simplices.iter().map(|s| name("e", s)).collect()));
        comps.push((Bidegree::new(n, 0), simplices.iter().map(|s| name("f", s)).collect()));
        for s in &simplices {
            d.push((name("e", s), Vector::basis(name("f", s))));
            if n == 0 {
                continue;
            }
            for i in 0..=n {
                let mut t = s.clone();
                t.remove(i as usize);
                let cols = faces.entry((n, i)).or_default();
                cols.insert(name("e", s), Vector::basis(name("e", &t)));
                cols.insert(name("f", s), Vector::term(name("f", &t), Scalar::from(-1)));
            }
        }
    }
    (BigradedModule::new(comps, d).expect("simplex model is well formed"), faces)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_faces_pass() {
        let (x, _) = standard_simplex_model(3, 3);
        assert!(check_strict_module(&x, &BTreeMap::new()).unwrap().ok());
    }

    #[test]
    fn simplex_model_passes() {
        let (x, f) = standard_simplex_model(5, 4);
        let r = check_strict_module(&x, &f).unwrap();
        assert!(r.ok(), "{r}");
        assert!(r.checks > 0);
    }

    #[test]
    fn flipped_face_is_caught() {
        let (x, mut f) = standard_simplex_model(3, 3);
        let col = f.get_mut(&(2, 1)).unwrap().get_mut("e012").unwrap();
        *col = -&*col;
        let r = check_strict_module(&x, &f).unwrap();
        assert!(r.violations.iter().any(|v| v.location.starts_with("n=2 i=0 j=1")), "{r}");
        assert!(r.violations.iter().any(|v| v.relation == "d∂ + ∂d = 0"));
    }

    #[test]
    fn shape_errors() {
        let (x, mut f) = standard_simplex_model(2, 2);
        f.insert((1, 5), BTreeMap::new());
        assert!(check_strict_module(&x, &f).is_err());
    }

    #[test]
    fn identity_map_and_zero_homotopy() {
        let (x, f) = standard_simplex_model(3, 3);
        let id: Columns<String, String> = x.keys().map(|k| (k.clone(), Vector::basis(k.clone()))).collect();
        assert!(check_strict_map(&x, &f, &x, &f, &id).ok());
        assert!(check_strict_homotopy(&x, &f, &x, &f, &id, &id, &BTreeMap::new()).ok());
        let bad: Columns<String, String> = [("e01".to_string(), Vector::basis("e01".to_string()))].into();
        assert!(!check_strict_map(&x, &f, &x, &f, &bad).ok());
    }
}
