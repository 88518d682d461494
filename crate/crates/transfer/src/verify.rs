use coeff_core::{Error, Key, Scalar, Vector};
use colored_core::{Bidegree, BigradedModule, Report};
use infty_face_modules::{
    check_faces, check_homotopy, check_morphism, compose_morphisms, face_tuples, identity_morphism, materialize,
    ExplicitFaceModule, FaceModule,
};
use koszul_dual::WedgeTuple;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use simplicial_face_algebra::standard_simplex_model;

use crate::sdr::{validate_sdr, SdrData};
use crate::series::Transfer;

/// Outcome of [`verify_transfer`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransferCheck {
    pub report: Report,
    /// Some higher component of `η̄`, `ξ̄` or `h̄` is nonzero.
    pub nontrivial: bool,
}

/// Validates the SDR and then the transferred structure: `∂̄` passes
/// `check_faces`, `η̄` and `ξ̄` are morphisms, `h̄` is a homotopy from
/// `ξ̄η̄` to `1`, the unit components are `η`, `ξ`, `h`, and length-one
/// faces are `η∂ξ`.
pub fn verify_transfer<KX: Key, KY: Key>(
    x: &ExplicitFaceModule<KX>,
    y: &BigradedModule<KY>,
    s: &SdrData<KX, KY>,
) -> Result<TransferCheck, Error> {
    let mut report = validate_sdr(x.module(), y, s)?;
    if !report.ok() {
        return Ok(TransferCheck { report, nontrivial: false });
    }
    let t = Transfer::new(x, y, s);
    report.merge(check_faces(&t));
    let eta = |c: &WedgeTuple, k: &KX| t.eta_bar(c, k);
    let xi = |c: &WedgeTuple, k: &KY| t.xi_bar(c, k);
    let h = |c: &WedgeTuple, k: &KX| t.h_bar(c, k);
    report.merge(check_morphism(eta, x, &t));
    report.merge(check_morphism(xi, &t, x));
    let level = |k: &KX| x.bidegree(k).n;
    report.merge(check_homotopy(h, compose_morphisms(xi, eta, level), identity_morphism, x, x));

    let mut nontrivial = false;
    for k in x.module().keys() {
        let n = level(k);
        let e = Vector::basis(k.clone());
        let unit = WedgeTuple::unit(n);
        report.check("η̄_() = η", || k.to_string(), &(&t.eta_bar(&unit, k) - &s.eta_of(&e)));
        report.check("h̄_() = h", || k.to_string(), &(&t.h_bar(&unit, k) - &s.h_of(&e)));
        nontrivial |= face_tuples(n).iter().any(|c| !(t.h_bar(c, k).is_zero() && t.eta_bar(c, k).is_zero()));
    }
    for k in y.keys() {
        let n = y.bidegree(k).expect("key of y").n;
        let e = Vector::basis(k.clone());
        report.check("ξ̄_() = ξ", || k.to_string(), &(&t.xi_bar(&WedgeTuple::unit(n), k) - &s.xi_of(&e)));
        for w in face_tuples(n) {
            if w.k() == 1 {
                let expect = s.xi_of(&e).map_linear(|l| x.face(&w, l)).map_linear(|l| s.eta_of(&Vector::basis(l.clone())));
                report.check("∂̄_(i) = η∂_(i)ξ", || format!("{w} on {k}"), &(&t.face(&w, k) - &expect));
            }
            nontrivial |= !t.xi_bar(&w, k).is_zero();
        }
    }
    Ok(TransferCheck { report, nontrivial })
}

/// A small face module with genuinely higher faces: the simplex model of
/// `Δ^n_max` transferred onto a random choice of at most `rank` simplices
/// per level, each with a random orientation. Every bidegree has rank at
/// most `rank`.
pub fn random_small_module(seed: u64, n_max: i64, rank: usize) -> ExplicitFaceModule<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (xm, strict) = standard_simplex_model(n_max, n_max);
    let x = ExplicitFaceModule::from_strict(xm, &strict).expect("simplex model is valid");
    let mut comps = Vec::new();
    let mut d = Vec::new();
    let mut s = SdrData { eta: Default::default(), xi: Default::default(), h: Default::default() };
    for n in 0..=n_max {
        let mut simplices: Vec<String> =
            x.module().basis(Bidegree::new(n, 1)).iter().map(|e| e[1..].to_string()).collect();
        simplices.shuffle(&mut rng);
        let keep = rng.gen_range(1..=rank.min(simplices.len()));
        let (kept, dropped) = simplices.split_at(keep);
        let names = |p: &str| kept.iter().map(|s| format!("{p}{s}")).collect::<Vec<_>>();
        comps.push((Bidegree::new(n, 1), names("e")));
        comps.push((Bidegree::new(n, 0), names("f")));
        for sigma in kept {
            let (e, f) = (format!("e{sigma}"), format!("f{sigma}"));
            let c = Scalar::from(if rng.gen_bool(0.5) { 1 } else { -1 });
            d.push((e.clone(), Vector::basis(f.clone())));
            for k in [e, f] {
                s.eta.insert(k.clone(), Vector::term(k.clone(), c.clone()));
                s.xi.insert(k.clone(), Vector::term(k, c.clone()));
            }
        }
        for sigma in dropped {
            s.h.insert(format!("f{sigma}"), Vector::term(format!("e{sigma}"), Scalar::from(-1)));
        }
    }
    let y = BigradedModule::new(comps, d).expect("retract is well formed");
    let t = Transfer::new(&x, &y, &s);
    materialize(&t).expect("transferred faces stay in the retract")
}
