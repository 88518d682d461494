use std::collections::BTreeMap;

use coeff_core::{Columns, Ring, Scalar, Vector};
use colored_core::BigradedModule;
use infty_face_modules::{
    check_dinfty, check_faces, check_total_differential, materialize, naive_realization_oracle, ExplicitFaceModule,
    FaceModule, FreeFaceModule, TensorFaceModule,
};
use proptest::prelude::*;
use simplicial_face_algebra::standard_simplex_model;

/// `φ = 1 + N` with `N` strictly upper triangular inside each component,
/// so `φ⁻¹ = Σ_j (-N)^j` is exact over the integers.
fn conjugate(x: &ExplicitFaceModule<String>, entries: &[i64]) -> ExplicitFaceModule<String> {
    let mut phi: Columns<String, String> = BTreeMap::new();
    let mut nil: Columns<String, String> = BTreeMap::new();
    let mut it = entries.iter().cycle();
    for ks in x.module().components().values() {
        for (j, k) in ks.iter().enumerate() {
            let mut col = Vector::zero();
            for l in &ks[..j] {
                col.add_term(l.clone(), Scalar::from(*it.next().unwrap()));
            }
            nil.insert(k.clone(), col.clone());
            col.add_term(k.clone(), Scalar::one());
            phi.insert(k.clone(), col);
        }
    }
    let apply = |m: &Columns<String, String>, v: &Vector<String>| v.map_linear(|k| m.get(k).cloned().unwrap_or_default());
    let inv = |v: &Vector<String>| {
        let mut out = v.clone();
        let mut term = v.clone();
        loop {
            term = -&apply(&nil, &term);
            if term.is_zero() {
                return out;
            }
            out = &out + &term;
        }
    };
    let conj = |f: &dyn Fn(&String) -> Vector<String>, k: &String| inv(&Vector::basis(k.clone())).map_linear(f);
    let conj = |f: &dyn Fn(&String) -> Vector<String>, k: &String| apply(&phi, &conj(f, k));
    let d = x.module().keys().map(|k| (k.clone(), conj(&|l| x.d(l), k))).collect();
    let comps = x.module().components().iter().map(|(b, ks)| (*b, ks.clone())).collect();
    let faces = x
        .faces()
        .keys()
        .map(|w| {
            let cols = x.module().keys().filter(|k| x.bidegree(k).n == w.n()).map(|k| (k.clone(), conj(&|l| x.face(w, l), k)));
            (w.clone(), cols.collect())
        })
        .collect();
    ExplicitFaceModule::new(BigradedModule::new(comps, d).unwrap(), faces).unwrap()
}

fn base(kind: u8, n: i64) -> ExplicitFaceModule<String> {
    if kind == 0 {
        let (m, f) = standard_simplex_model(n, n);
        ExplicitFaceModule::from_strict(m, &f).unwrap()
    } else {
        materialize(&FreeFaceModule { n }).unwrap().relabel(|w| w.to_string()).unwrap()
    }
}

fn instance() -> impl Strategy<Value = ExplicitFaceModule<String>> {
    (0u8..2, 1i64..=3, prop::collection::vec(-2i64..=2, 1..6)).prop_map(|(kind, n, e)| conjugate(&base(kind, n), &e))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn valid_modules_have_square_zero_total_differentials(x in instance()) {
        prop_assert!(check_faces(&x).ok());
        prop_assert!(check_dinfty(&x).ok());
        prop_assert!(check_total_differential(&x).ok());
    }

    #[test]
    fn tensor_products_of_valid_modules_are_valid(x in instance(), y in instance()) {
        let t = TensorFaceModule::new(&x, &y, 3);
        let r = check_faces(&t);
        prop_assert!(r.ok(), "{}", r);
    }

    #[test]
    fn realization_is_isomorphic_to_the_total_complex(x in instance()) {
        let n_max = x.module().max_level().min(2);
        let r = naive_realization_oracle(&x, n_max, Ring::Rat).unwrap();
        prop_assert!(r.report.ok(), "{}", r.report);
        prop_assert!(r.isomorphic && r.d_stable);
    }

    /// Perturbed families may or may not stay valid; whenever the face
    /// relations hold, so do the D∞ relations and `∂̄² = 0`.
    #[test]
    fn face_relations_imply_total_relations(x in instance(), pick in 0usize..64, c in -2i64..3) {
        let mut faces = x.faces().clone();
        let slots: Vec<_> = faces.iter().flat_map(|(w, cols)| cols.keys().map(move |k| (w.clone(), k.clone()))).collect();
        prop_assume!(!slots.is_empty());
        let (w, k) = &slots[pick % slots.len()];
        let col = faces.get_mut(w).unwrap().get_mut(k).unwrap();
        *col = col.scale(&Scalar::from(c));
        let y = ExplicitFaceModule::new(x.module().clone(), faces).unwrap();
        if check_faces(&y).ok() {
            prop_assert!(check_dinfty(&y).ok());
            prop_assert!(check_total_differential(&y).ok());
        }
    }
}
