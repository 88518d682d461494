use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use coeff_core::{quotient_by_span, Echelon, Error, FreeModule, Ring, Scalar, Tensor, Vector};
use colored_core::Report;
use koszul_dual::WedgeTuple;
use omega_finf::{coface_delta, f_n_components, OmegaWord};

use crate::face_module::{face_tuples, FaceModule};
use crate::free::FreeFaceModule;
use crate::total::{dinfty_sum, total_bar_differential, total_complex_ranks};

/// Basis element `a ⊗ x` of `F̄[n] ⊗ X_n`.
pub type RealizationKey<K> = Tensor<OmegaWord<WedgeTuple>, K>;

/// Outcome of the quotient construction and its comparison with `(X̄, ∂̄)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealizationReport {
    pub report: Report,
    /// Rank of `⊕ F̄[n] ⊗ X_n` before the quotient.
    pub dimension: usize,
    /// Rank of the relation span.
    pub relations: usize,
    pub d_stable: bool,
    pub isomorphic: bool,
    pub quotient_ranks: BTreeMap<i64, usize>,
    pub total_ranks: BTreeMap<i64, usize>,
}

/// Builds `⊕_{n<=n_max} F̄[n] ⊗ X_n` with `d(a⊗x) = ∂a⊗x + (-1)^s a⊗dx`
/// (`s` the total degree of `a`, `∂ = Σ d^k` on `F[n]`), the relations
/// `δ^I(a)⊗x − (-1)^{s(k-1)+(n+q)k} a⊗∂_I x`, checks that `d` preserves
/// their span, and compares the quotient with `(X̄, ∂̄)` through
/// `[1_n ⊗ x] ↔ x`.
///
/// The region of `x` up to level `n_max` must be closed under `d` and the
/// faces; field coefficients are required.
pub fn naive_realization_oracle<X: FaceModule>(x: &X, n_max: i64, ring: Ring) -> Result<RealizationReport, Error> {
    ring.require_field()?;
    let region: Vec<_> = x.region().into_iter().filter(|(b, _)| b.n <= n_max).collect();
    let keys: BTreeSet<X::K> = region.iter().flat_map(|(_, ks)| ks.iter().cloned()).collect();
    let by_level = |n: i64| region.iter().filter(move |(b, _)| b.n == n).flat_map(|(_, ks)| ks.iter());
    for k in &keys {
        let n = x.bidegree(k).n;
        let closed = x.d(k).keys().all(|l| keys.contains(l))
            && face_tuples(n).iter().all(|w| x.face(w, k).keys().all(|l| keys.contains(l)));
        if !closed {
            return Err(Error::Unsupported(format!("the region is not closed under d and the faces at {k}")));
        }
    }

    let words: BTreeMap<i64, Vec<OmegaWord<WedgeTuple>>> =
        (0..=n_max).map(|n| (n, f_n_components(n).into_iter().flat_map(|(_, b)| b).collect())).collect();
    let deg = |a: &OmegaWord<WedgeTuple>| a.colors().0 + a.degree();

    let mut basis = Vec::new();
    for n in 0..=n_max {
        for a in &words[&n] {
            for k in by_level(n) {
                basis.push(Tensor(a.clone(), k.clone()));
            }
        }
    }
    let v = Arc::new(FreeModule::new(basis)?);

    let d_v = |t: &RealizationKey<X::K>| -> Vector<RealizationKey<X::K>> {
        let Tensor(a, k) = t;
        let fnm = FreeFaceModule { n: a.colors().1 };
        let mut out: Vector<_> = dinfty_sum(&fnm, a).iter().map(|(b, c)| (Tensor(b.clone(), k.clone()), c.clone())).collect();
        let e = Scalar::sign(deg(a));
        for (l, c) in &x.d(k) {
            out.add_term(Tensor(a.clone(), l.clone()), &e * c);
        }
        out
    };

    let mut rels = Vec::new();
    for n in 1..=n_max {
        for w in face_tuples(n) {
            let k = w.k() as i64;
            for a in &words[&(n - k)] {
                let s = deg(a);
                for key in by_level(n) {
                    let q = x.bidegree(key).m;
                    let mut r: Vector<_> =
                        coface_delta(&w, a).iter().map(|(b, c)| (Tensor(b.clone(), key.clone()), c.clone())).collect();
                    let e = Scalar::sign(s * (k - 1) + (n + q) * k + 1);
                    for (l, c) in &x.face(&w, key) {
                        r.add_term(Tensor(a.clone(), l.clone()), &e * c);
                    }
                    if !r.is_zero() {
                        rels.push(r);
                    }
                }
            }
        }
    }

    let mut report = Report::new();
    let mut span = Echelon::new(ring)?;
    span.extend(&rels);
    let mut d_stable = true;
    for r in &rels {
        let dr = r.map_linear(|t| d_v(t));
        let rest = span.reduce(&dr);
        d_stable &= rest.is_zero();
        report.check("d(relations) ⊆ span", || r.to_string(), &rest);
    }

    let (q, proj) = quotient_by_span(&v, &rels, ring)?;
    let class = |n: i64, k: &X::K| proj.apply(&Vector::basis(Tensor(OmegaWord::unit(n), k.clone()))).expect("in basis");
    let mut images = Echelon::new(ring)?;
    for k in &keys {
        images.insert(&class(x.bidegree(k).n, k));
    }
    let isomorphic = images.rank() == keys.len() && q.rank() == keys.len();
    if !isomorphic {
        report.fail(
            "[1_n ⊗ x] is a basis of the quotient",
            "quotient".into(),
            format!("quotient rank {}, classes span {}, expected {}", q.rank(), images.rank(), keys.len()),
        );
    }
    for k in &keys {
        let n = x.bidegree(k).n;
        let lhs = proj.apply(&d_v(&Tensor(OmegaWord::unit(n), k.clone()))).expect("in basis");
        let rhs = total_bar_differential(x, k).map_linear(|l| class(x.bidegree(l).n, l));
        report.check("F d = ∂̄ F", || k.to_string(), &(&lhs - &rhs));
    }

    let mut quotient_ranks = BTreeMap::new();
    for Tensor(a, k) in q.basis() {
        *quotient_ranks.entry(deg(a) + x.bidegree(k).m).or_insert(0) += 1;
    }
    let total_ranks = total_complex_ranks(&Restricted { inner: x, n_max });
    Ok(RealizationReport {
        report,
        dimension: v.rank(),
        relations: span.rank(),
        d_stable,
        isomorphic: isomorphic && quotient_ranks == total_ranks,
        quotient_ranks,
        total_ranks,
    })
}

/// `x` with its region cut at level `n_max`.
struct Restricted<'a, X> {
    inner: &'a X,
    n_max: i64,
}

impl<X: FaceModule> FaceModule for Restricted<'_, X> {
    type K = X::K;
    fn bidegree(&self, k: &X::K) -> colored_core::Bidegree {
        self.inner.bidegree(k)
    }
    fn region(&self) -> Vec<(colored_core::Bidegree, Vec<X::K>)> {
        self.inner.region().into_iter().filter(|(b, _)| b.n <= self.n_max).collect()
    }
    fn d(&self, k: &X::K) -> Vector<X::K> {
        self.inner.d(k)
    }
    fn face(&self, w: &WedgeTuple, k: &X::K) -> Vector<X::K> {
        self.inner.face(w, k)
    }
}

