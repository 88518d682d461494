use coeff_core::{apply_columns, Columns, Scalar, Vector};
use colored_core::{Bidegree, BigradedModule};
use infty_face_modules::{ExplicitFaceModule, FaceFamily, FaceModule};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::sdr::SdrData;

/// `X = Y ⊕ C` for a random acyclic `C` spanned by cone pairs `b ↦ a`
/// (`d b = a`, named `~b{j}` and `~a{j}`), with faces
/// `∂^X_I = φ (∂^Y_I ⊕ 0) φ⁻¹` for the chain automorphism
/// `φ = (1 + ν)(1 + ν')`, `ν = ds + sd`, `ν' = ds' + s'd`, where
/// `s : Y → C` and `s' : C → Y` are random maps of degree `+1`.
/// Since `ν` maps `Y` into `C` and kills `C` (and `ν'` the reverse),
/// `ν² = ν'² = 0` and `φ⁻¹ = (1 − ν')(1 − ν)`.
///
/// The SDR is the projection `η`, the inclusion `ξ` and the contraction
/// `h(a) = −b`, `h(b) = 0`; it satisfies all five identities exactly.
pub fn cone_extension(y: &ExplicitFaceModule<String>, seed: u64) -> (ExplicitFaceModule<String>, SdrData<String, String>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ym = y.module();
    let mut comps: Vec<(Bidegree, Vec<String>)> = ym.components().iter().map(|(b, ks)| (*b, ks.clone())).collect();
    let mut d: Vec<(String, Vector<String>)> = ym.differential().iter().map(|(k, v)| (k.clone(), v.clone())).collect();
    let mut cone: Vec<(String, String, Bidegree)> = Vec::new();
    let slots: Vec<Bidegree> = ym.components().keys().copied().collect();
    for (j, b) in slots.iter().enumerate() {
        if rng.gen_bool(0.3) {
            continue;
        }
        let m = if b.m > 0 && rng.gen_bool(0.5) { b.m - 1 } else { b.m };
        cone.push((format!("~a{j}"), format!("~b{j}"), Bidegree::new(b.n, m)));
    }
    for (a, b, bd) in &cone {
        comps.push((*bd, vec![a.clone()]));
        comps.push((Bidegree::new(bd.n, bd.m + 1), vec![b.clone()]));
        d.push((b.clone(), Vector::basis(a.clone())));
    }
    let x = BigradedModule::new(comps, d).expect("cone extension is well formed");

    let coef = |rng: &mut ChaCha8Rng| Scalar::from(rng.gen_range(-1i64..=1));
    let mut s: Columns<String, String> = Columns::new();
    let mut s2: Columns<String, String> = Columns::new();
    for k in ym.keys() {
        let bk = ym.bidegree(k).expect("key of y");
        let col: Vector<String> = cone_keys(&cone, Bidegree::new(bk.n, bk.m + 1)).map(|c| (c, coef(&mut rng))).collect();
        s.insert(k.clone(), col);
    }
    for (a, b, bd) in &cone {
        for (c, m) in [(a, bd.m), (b, bd.m + 1)] {
            let col: Vector<String> = ym.basis(Bidegree::new(bd.n, m + 1)).iter().map(|l| (l.clone(), coef(&mut rng))).collect();
            s2.insert(c.clone(), col);
        }
    }
    let homotopic = |s: &Columns<String, String>, v: &Vector<String>| {
        let sd = apply_columns(s, &v.map_linear(|k| x.d(k)));
        &apply_columns(s, v).map_linear(|k| x.d(k)) + &sd
    };
    let nu = |v: &Vector<String>| homotopic(&s, v);
    let nu2 = |v: &Vector<String>| homotopic(&s2, v);
    let phi = |v: &Vector<String>| {
        let w = v + &nu2(v);
        &w + &nu(&w)
    };
    let phi_inv = |v: &Vector<String>| {
        let w = v - &nu(v);
        &w - &nu2(&w)
    };

    let mut faces = FaceFamily::new();
    let all: Vec<&String> = x.keys().collect();
    for w in y.faces().keys() {
        let cols: Columns<String, String> = all
            .iter()
            .filter(|k| x.bidegree(k).is_some_and(|b| b.n == w.n()))
            .map(|k| {
                let pre = phi_inv(&Vector::basis((*k).clone()));
                let mid = pre.filter(|l| ym.contains(l)).map_linear(|l| y.face(w, l));
                ((*k).clone(), phi(&mid))
            })
            .collect();
        faces.insert(w.clone(), cols);
    }
    let x = ExplicitFaceModule::new(x, faces).expect("conjugated faces keep their bidegrees");

    let id: Columns<String, String> = ym.keys().map(|k| (k.clone(), Vector::basis(k.clone()))).collect();
    let h = cone.iter().map(|(a, b, _)| (a.clone(), Vector::term(b.clone(), Scalar::from(-1)))).collect();
    (x, SdrData { eta: id.clone(), xi: id, h })
}

fn cone_keys(cone: &[(String, String, Bidegree)], at: Bidegree) -> impl Iterator<Item = String> + '_ {
    cone.iter().flat_map(move |(a, b, bd)| {
        let mut v = Vec::new();
        if *bd == at {
            v.push(a.clone());
        }
        if Bidegree::new(bd.n, bd.m + 1) == at {
            v.push(b.clone());
        }
        v
    })
}
