use coeff_core::{rank, Echelon, Error, Ring, Tensor, Vector};
use colored_core::Report;
use koszul_dual::{
    check_twisting_cochain, coproduct, koszul_dual_generic, phi_shriek, wedge_expansion, wedge_tuples, FaceAlgebra,
    FaceCoalgebra, WedgeTuple,
};
use serde_json::{json, Map, Value};
use simplicial_face_algebra::build_presentation;

use crate::input::{config, Failure};
use crate::output::Outcome;

fn binom(n: i64, k: i64) -> usize {
    (0..k).fold(1usize, |acc, i| acc * (n - i) as usize / (i + 1) as usize)
}

/// For `1 <= k <= n <= n_max`: the quadratic-dual intersection at
/// `(k, n-k, n)` has rank `C(n+1, k)`, and the wedge expansions lie in it
/// with full rank. Also coassociativity and counit of the wedge coproduct
/// and the twisting cochain `φ^!`. Returns the report and the rank table.
pub fn koszul_report(n_max: i64, ring: Ring) -> Result<(Report, Value), Error> {
    ring.require_field()?;
    let p = build_presentation(n_max);
    let mut r = Report::new();
    let mut ranks = Vec::new();
    for n in 1..=n_max {
        for k in 1..=n as usize {
            let comp = koszul_dual_generic(&p, k, n - k as i64, n, ring)?;
            let expected = binom(n + 1, k as i64);
            let mut span = Echelon::new(ring)?;
            span.extend(&comp.basis);
            let wedges: Vec<_> =
                wedge_tuples(n).into_iter().filter(|w| w.n() == n && w.k() == k).map(|w| wedge_expansion(&w)).collect();
            let inside = wedges.iter().all(|v| span.contains(v));
            let wedge_rank = rank(&wedges, ring)?;
            let at = format!("k={k} n={n}");
            if comp.rank() == expected {
                r.checks += 1;
            } else {
                r.fail("rank = C(n+1,k)", at.clone(), format!("rank {} ≠ {expected}", comp.rank()));
            }
            if inside && wedge_rank == comp.rank() {
                r.checks += 1;
            } else {
                r.fail("wedge change of basis is invertible", at, format!("inside={inside} wedge rank {wedge_rank}"));
            }
            ranks.push(json!({"k": k, "n": n, "rank": comp.rank(), "expected": expected}));
        }
    }
    let all: Vec<WedgeTuple> = wedge_tuples(n_max).into_iter().chain((0..=n_max).map(WedgeTuple::unit)).collect();
    type T3 = Tensor<Tensor<WedgeTuple, WedgeTuple>, WedgeTuple>;
    for w in &all {
        let mut lr: Vector<T3> = Vector::zero();
        for (Tensor(a, b), c) in &coproduct(w) {
            for (Tensor(a1, a2), c1) in &coproduct(a) {
                lr.add_term(Tensor(Tensor(a1.clone(), a2.clone()), b.clone()), c * c1);
            }
            for (Tensor(b1, b2), c2) in &coproduct(b) {
                lr.add_term(Tensor(Tensor(a.clone(), b1.clone()), b2.clone()), -(c * c2));
            }
        }
        r.check("(∇⊗1)∇ = (1⊗∇)∇", || w.to_string(), &lr);
        let (s, t) = w.colors();
        let left: Vector<WedgeTuple> =
            coproduct(w).iter().filter(|(k, _)| k.0 == WedgeTuple::unit(s)).map(|(k, c)| (k.1.clone(), c.clone())).collect();
        let right: Vector<WedgeTuple> =
            coproduct(w).iter().filter(|(k, _)| k.1 == WedgeTuple::unit(t)).map(|(k, c)| (k.0.clone(), c.clone())).collect();
        let e = Vector::basis(w.clone());
        r.check("(ε⊗1)∇ = 1", || w.to_string(), &(&left - &e));
        r.check("(1⊗ε)∇ = 1", || w.to_string(), &(&right - &e));
    }
    r.merge(check_twisting_cochain(phi_shriek, &FaceCoalgebra, &FaceAlgebra, all)?);
    Ok((r, Value::Array(ranks)))
}

pub fn check(n_max: i64, ring: Ring) -> Result<Outcome, Failure> {
    let (report, ranks) = config(koszul_report(n_max, ring))?;
    let mut fields = Map::new();
    fields.insert("n_max".into(), json!(n_max));
    fields.insert("coeff".into(), json!(ring.to_string()));
    fields.insert("ranks".into(), ranks);
    Ok(Outcome::checked("koszul check", &report, true, fields))
}
