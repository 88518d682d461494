use std::collections::BTreeMap;

use coeff_core::{Scalar, Vector};
use colored_core::Report;

use crate::face_module::{face_tuples, FaceModule};

/// `d^0 = d`, `d^k = Σ_{|I|=k} (-1)^{i_1+…+i_k} ∂_I` for `1 <= k <= n`, and
/// `d^k = 0` for `k > n`.
pub fn dinfty<X: FaceModule>(x: &X, k: usize, key: &X::K) -> Vector<X::K> {
    if k == 0 {
        return x.d(key);
    }
    let n = x.bidegree(key).n;
    let mut v = Vector::zero();
    for w in face_tuples(n).into_iter().filter(|w| w.k() == k) {
        v.axpy(&Scalar::sign(w.index_sum()), &x.face(&w, key));
    }
    v
}

/// `∂ = Σ_k d^k`, the differential of the total complex of the D∞-module.
pub fn dinfty_sum<X: FaceModule>(x: &X, key: &X::K) -> Vector<X::K> {
    let n = x.bidegree(key).n;
    (0..=n.max(0) as usize).fold(Vector::zero(), |acc, k| &acc + &dinfty(x, k, key))
}

/// Checks `Σ_{i+j=k} d^i d^j = 0` for `0 <= k <= n + 1` on the region.
pub fn check_dinfty<X: FaceModule>(x: &X) -> Report {
    let mut r = Report::new();
    for (b, keys) in x.region() {
        for key in &keys {
            for k in 0..=(b.n + 1) as usize {
                let mut v = Vector::zero();
                for j in 0..=k {
                    v.axpy(&Scalar::one(), &dinfty(x, j, key).map_linear(|l| dinfty(x, k - j, l)));
                }
                r.check("Σ d^i d^j = 0", || format!("k={k} on {key}"), &v);
            }
        }
    }
    r
}

/// `∂̄x = (-1)^n dx + Σ_I (-1)^{i_1+…+i_k + n(k-1) + (q-1)k} ∂_I x` for
/// `x ∈ X_{n,q}`: the total differential of the modified D∞-module.
pub fn total_bar_differential<X: FaceModule>(x: &X, key: &X::K) -> Vector<X::K> {
    let b = x.bidegree(key);
    let (n, q) = (b.n, b.m);
    let mut v = x.d(key).scale(&Scalar::sign(n));
    for w in face_tuples(n) {
        let k = w.k() as i64;
        v.axpy(&Scalar::sign(w.index_sum() + n * (k - 1) + (q - 1) * k), &x.face(&w, key));
    }
    v
}

/// Checks `∂̄∘∂̄ = 0` on the region.
pub fn check_total_differential<X: FaceModule>(x: &X) -> Report {
    let mut r = Report::new();
    for (b, keys) in x.region() {
        for key in &keys {
            let v = total_bar_differential(x, key).map_linear(|l| total_bar_differential(x, l));
            r.check("∂̄∘∂̄ = 0", || format!("({},{}) {key}", b.n, b.m), &v);
        }
    }
    r
}

/// Rank of `X̄_t = ⊕_{n+m=t} X_{n,m}` over the region, per total degree.
pub fn total_complex_ranks<X: FaceModule>(x: &X) -> BTreeMap<i64, usize> {
    let mut out = BTreeMap::new();
    for (b, keys) in x.region() {
        *out.entry(b.total()).or_insert(0) += keys.len();
    }
    out
}
