use coeff_core::{Key, Scalar, Vector};
use colored_core::Report;
use koszul_dual::{enumerate_splits, WedgeTuple};

use crate::face_module::{apply_d, apply_face, face_tuples, FaceModule};

/// Linear extension of one member of a map family.
fn on<K: Key, L: Key>(f: &impl Fn(&WedgeTuple, &K) -> Vector<L>, w: &WedgeTuple, v: &Vector<K>) -> Vector<L> {
    v.map_linear(|k| f(w, k))
}

/// `f_()` on a vector of level `n`.
fn on0<K: Key, L: Key>(f: &impl Fn(&WedgeTuple, &K) -> Vector<L>, n: i64, v: &Vector<K>) -> Vector<L> {
    on(f, &WedgeTuple::unit(n), v)
}

/// Checks `d² = 0`, the bidegrees of faces, and for every proper tuple `I`
/// the relation `d∂_I + ∂_I d = Σ_splits sign · ∂_L ∂_R` on the region.
pub fn check_faces<X: FaceModule>(x: &X) -> Report {
    let mut r = Report::new();
    for (b, keys) in x.region() {
        let tuples = face_tuples(b.n);
        for key in &keys {
            let dk = x.d(key);
            r.check("d∘d = 0", || format!("({},{}) {key}", b.n, b.m), &apply_d(x, &dk));
            for w in &tuples {
                let fx = x.face(w, key);
                let k = w.k() as i64;
                if let Some(bad) = fx.keys().find(|l| {
                    let c = x.bidegree(l);
                    (c.n, c.m) != (b.n - k, b.m + k - 1)
                }) {
                    r.fail("face bidegree", format!("{w} on {key}"), format!("term {bad}"));
                    continue;
                }
                let mut v = apply_d(x, &fx);
                v.axpy(&Scalar::one(), &apply_face(x, w, &dk));
                for s in enumerate_splits(w) {
                    let lr = apply_face(x, &s.left, &x.face(&s.right, key));
                    v.axpy(&Scalar::from(-s.sign), &lr);
                }
                r.check("d∂ + ∂d = Σ sign ∂∂", || format!("{w} on {key}"), &v);
            }
        }
    }
    r
}

/// Checks the morphism relations: `d f_() = f_() d` and, per proper tuple,
/// `d f_I − f_I d = −∂_I f_() + f_() ∂_I + Σ_splits sign (∂_L f_R − f_L ∂_R)`.
pub fn check_morphism<X: FaceModule, Y: FaceModule>(
    f: impl Fn(&WedgeTuple, &X::K) -> Vector<Y::K>,
    x: &X,
    y: &Y,
) -> Report {
    let mut r = Report::new();
    for (b, keys) in x.region() {
        let n = b.n;
        for key in &keys {
            let e = Vector::basis(key.clone());
            let dk = x.d(key);
            let f0 = f(&WedgeTuple::unit(n), key);
            let v = &apply_d(y, &f0) - &on0(&f, n, &dk);
            r.check("d f_() = f_() d", || format!("({},{}) {key}", n, b.m), &v);
            for w in face_tuples(n) {
                let k = w.k() as i64;
                let mut v = &apply_d(y, &f(&w, key)) - &on(&f, &w, &dk);
                v.axpy(&Scalar::one(), &apply_face(y, &w, &f0));
                v.axpy(&Scalar::from(-1), &on0(&f, n - k, &x.face(&w, key)));
                for s in enumerate_splits(&w) {
                    let c = Scalar::from(-s.sign);
                    v.axpy(&c, &apply_face(y, &s.left, &on(&f, &s.right, &e)));
                    v.axpy(&-&c, &on(&f, &s.left, &x.face(&s.right, key)));
                }
                r.check("d(f_I) = Σ", || format!("{w} on {key}"), &v);
            }
        }
    }
    r
}

/// Checks the homotopy relations: `dh_() + h_() d = f_() − g_()` and, per
/// proper tuple, `dh_I + h_I d = f_I − g_I − ∂_I h_() − h_() ∂_I
/// + Σ_splits sign (∂_L h_R + h_L ∂_R)`.
pub fn check_homotopy<X: FaceModule, Y: FaceModule>(
    h: impl Fn(&WedgeTuple, &X::K) -> Vector<Y::K>,
    f: impl Fn(&WedgeTuple, &X::K) -> Vector<Y::K>,
    g: impl Fn(&WedgeTuple, &X::K) -> Vector<Y::K>,
    x: &X,
    y: &Y,
) -> Report {
    let mut r = Report::new();
    let one = Scalar::one();
    let neg = Scalar::from(-1);
    for (b, keys) in x.region() {
        let n = b.n;
        for key in &keys {
            let e = Vector::basis(key.clone());
            let dk = x.d(key);
            let unit = WedgeTuple::unit(n);
            let h0 = h(&unit, key);
            let mut v = &apply_d(y, &h0) + &on0(&h, n, &dk);
            v.axpy(&neg, &f(&unit, key));
            v.axpy(&one, &g(&unit, key));
            r.check("dh_() + h_() d = f_() − g_()", || format!("({},{}) {key}", n, b.m), &v);
            for w in face_tuples(n) {
                let k = w.k() as i64;
                let mut v = &apply_d(y, &h(&w, key)) + &on(&h, &w, &dk);
                v.axpy(&neg, &f(&w, key));
                v.axpy(&one, &g(&w, key));
                v.axpy(&one, &apply_face(y, &w, &h0));
                v.axpy(&one, &on0(&h, n - k, &x.face(&w, key)));
                for s in enumerate_splits(&w) {
                    let c = Scalar::from(-s.sign);
                    v.axpy(&c, &apply_face(y, &s.left, &on(&h, &s.right, &e)));
                    v.axpy(&c, &on(&h, &s.left, &x.face(&s.right, key)));
                }
                r.check("d(h_I) = Σ", || format!("{w} on {key}"), &v);
            }
        }
    }
    r
}

/// `1_X`: `f_() = 1`, every higher component zero.
pub fn identity_morphism<K: Key>(w: &WedgeTuple, k: &K) -> Vector<K> {
    if w.is_unit() {
        Vector::basis(k.clone())
    } else {
        Vector::zero()
    }
}

/// Composite of morphism families:
/// `(gf)_() = g_() f_()` and
/// `(gf)_I = g_I f_() + g_() f_I − Σ_splits sign · g_L f_R`.
pub fn compose_morphisms<'a, K: Key, L: Key, M: Key>(
    g: impl Fn(&WedgeTuple, &L) -> Vector<M> + 'a,
    f: impl Fn(&WedgeTuple, &K) -> Vector<L> + 'a,
    level: impl Fn(&K) -> i64 + 'a,
) -> impl Fn(&WedgeTuple, &K) -> Vector<M> + 'a {
    move |w: &WedgeTuple, k: &K| {
        let n = level(k);
        if w.n() != n {
            return Vector::zero();
        }
        let f0 = f(&WedgeTuple::unit(n), k);
        if w.is_unit() {
            return on(&g, w, &f0);
        }
        let e = Vector::basis(k.clone());
        let mut v = on(&g, w, &f0);
        v.axpy(&Scalar::one(), &on0(&g, n - w.k() as i64, &f(w, k)));
        for s in enumerate_splits(w) {
            v.axpy(&Scalar::from(-s.sign), &on(&g, &s.left, &on(&f, &s.right, &e)));
        }
        v
    }
}
