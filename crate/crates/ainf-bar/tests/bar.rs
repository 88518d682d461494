use ainf_bar::json::{ainf_to_json, bar_to_json, parse_ainf};
use ainf_bar::{
    bar_coproduct, bar_differential, check_ainf, check_bar_coalgebra, classic_bar_compare, delta_family, random_ainf,
    total_degree, truncated_polynomial, xy_example, AInfAlgebra, BarWord, TensorAlgebraModule,
};
use coeff_core::{Error, Ring, Scalar, Tensor, Vector};
use infty_face_modules::{
    check_faces, check_morphism, dinfty_sum, naive_realization_oracle, total_bar_differential, FaceModule,
    TensorFaceModule,
};

fn w(letters: &[&str]) -> BarWord {
    BarWord::from(letters)
}

fn all_words(a: &AInfAlgebra, max_len: usize, deg_cap: Option<i64>) -> Vec<BarWord> {
    (0..=max_len).flat_map(|n| a.words(n, deg_cap)).collect()
}

#[test]
fn xy_bar_differential() {
    let a = xy_example();
    assert!(check_ainf(&a, 4, None).ok());
    assert_eq!(bar_differential(&a, &w(&["x", "x"])), Vector::term(w(&["y"]), Scalar::from(-1)));
    assert!(bar_differential(&a, &w(&["x"])).is_zero());
    assert!(bar_differential(&a, &w(&["y", "x"])).is_zero());
    // [x|x|x] ↦ -[y|x] ± [x|y]
    let d3 = bar_differential(&a, &w(&["x", "x", "x"]));
    assert_eq!(d3.len(), 2);
    assert_eq!(total_degree(&a, &w(&["x", "x"])), 4);
}

#[test]
fn xy_coproduct() {
    let a = xy_example();
    let expect: Vector<_> = [
        (Tensor(BarWord::empty(), w(&["x", "x"])), Scalar::one()),
        (Tensor(w(&["x"]), w(&["x"])), Scalar::from(-1)),
        (Tensor(w(&["x", "x"]), BarWord::empty()), Scalar::one()),
    ]
    .into_iter()
    .collect();
    assert_eq!(bar_coproduct(&a, &w(&["x", "x"])), expect);
}

#[test]
fn truncated_polynomial_is_a_dga() {
    let a = truncated_polynomial(2, 3);
    assert!(check_ainf(&a, 3, None).ok());
    assert_eq!(bar_differential(&a, &w(&["x", "x"])), Vector::term(w(&["x2"]), Scalar::from(-1)));
    assert!(bar_differential(&a, &w(&["x", "x2"])).is_zero());
    let words = all_words(&a, 4, None);
    let r = classic_bar_compare(&a, &words).unwrap();
    assert!(r.ok(), "{r}");
    let xy = xy_example();
    assert!(classic_bar_compare(&xy, &all_words(&xy, 3, None)).unwrap().ok());
}

#[test]
fn classic_compare_rejects_higher_operations() {
    let a = random_ainf(3, 2);
    if a.max_arity().is_some_and(|n| n > 0) {
        assert!(matches!(classic_bar_compare(&a, &[]), Err(Error::Input { .. })));
    }
}

#[test]
fn inconsistent_degree_is_an_input_error() {
    let err = AInfAlgebra::new(
        vec![("x".into(), 1), ("y".into(), 2)],
        vec![],
        vec![(0, vec!["x".into(), "x".into()], Vector::basis("y".into())), (0, vec!["y".into(), "x".into()], Vector::basis("x".into()))],
    )
    .unwrap_err();
    assert!(matches!(err, Error::Input { ref pointer, .. } if pointer == "/pi/1"), "{err}");
}

#[test]
fn non_associative_product_fails_stasheff() {
    let a = AInfAlgebra::new(
        vec![("x".into(), 1), ("y".into(), 2), ("z".into(), 3)],
        vec![],
        vec![(0, vec!["x".into(), "x".into()], Vector::basis("y".into())), (0, vec!["y".into(), "x".into()], Vector::basis("z".into()))],
    )
    .unwrap();
    let r = check_ainf(&a, 2, None);
    assert!(r.violations.iter().any(|v| v.relation == "Stasheff relation n=0" && v.location == "[x|x|x]"), "{r}");
    assert!(!check_bar_coalgebra(&a, &[w(&["x", "x", "x"])]).ok());
}

#[test]
fn d_squared_is_checked() {
    let a = AInfAlgebra::new(
        vec![("a".into(), 1), ("b".into(), 2), ("c".into(), 3)],
        vec![("c".into(), Vector::basis("b".into())), ("b".into(), Vector::basis("a".into()))],
        vec![],
    )
    .unwrap();
    let r = check_ainf(&a, 1, None);
    assert!(r.violations.iter().any(|v| v.relation == "d∘d = 0" && v.location == "c"));
}

#[test]
fn constructor_errors() {
    let g = |v: &[(&str, i64)]| v.iter().map(|(s, d)| (s.to_string(), *d)).collect::<Vec<_>>();
    let dup = AInfAlgebra::new(g(&[("x", 1), ("x", 2)]), vec![], vec![]).unwrap_err();
    assert!(matches!(dup, Error::Input { ref pointer, .. } if pointer == "/generators/1/id"));
    let unknown = AInfAlgebra::new(g(&[("x", 1)]), vec![("q".into(), Vector::zero())], vec![]).unwrap_err();
    assert!(matches!(unknown, Error::Input { ref pointer, .. } if pointer == "/d/0"));
    let arity = AInfAlgebra::new(g(&[("x", 1)]), vec![], vec![(1, vec!["x".into(), "x".into()], Vector::zero())]).unwrap_err();
    assert!(matches!(arity, Error::Input { ref pointer, .. } if pointer == "/pi/0"));
    let a = AInfAlgebra::new(g(&[("x", 0)]), vec![], vec![]).unwrap();
    assert!(matches!(TensorAlgebraModule::new(&a, 2, None), Err(Error::Unsupported(_))));
}

#[test]
fn tensor_module_faces_hold() {
    for a in [xy_example(), truncated_polynomial(2, 4), random_ainf(7, 2)] {
        let t = TensorAlgebraModule::new(&a, 6, Some(9)).unwrap();
        let r = check_faces(&t);
        assert!(r.ok(), "{r}");
        assert!(check_faces(&t.clone().primed()).ok());
    }
}

#[test]
fn bar_differential_is_the_total_differential() {
    for a in [xy_example(), truncated_polynomial(1, 4), random_ainf(11, 3)] {
        let t = TensorAlgebraModule::new(&a, 5, Some(8)).unwrap();
        let tp = t.clone().primed();
        for (_, keys) in t.region() {
            for u in &keys {
                let d = bar_differential(&a, u);
                assert_eq!(d, total_bar_differential(&t, u), "{u}");
                assert_eq!(d, dinfty_sum(&tp, u), "{u}");
            }
        }
    }
}

#[test]
fn realization_matches_total_complex() {
    let a = xy_example();
    let t = TensorAlgebraModule::new(&a, 3, None).unwrap();
    let rep = naive_realization_oracle(&t, 2, Ring::Rat).unwrap();
    assert!(rep.report.ok(), "{}", rep.report);
    assert!(rep.d_stable && rep.isomorphic);
    let ranks: Vec<usize> = (0..=6).map(|d| rep.quotient_ranks.get(&d).copied().unwrap_or(0)).collect();
    assert_eq!(ranks, vec![1, 0, 1, 1, 1, 2, 1]);
    assert_eq!(rep.quotient_ranks, rep.total_ranks);

    let rep3 = naive_realization_oracle(&t, 3, Ring::Mod(7)).unwrap();
    assert!(rep3.report.ok() && rep3.isomorphic);
}

#[test]
fn coproduct_is_a_morphism_of_face_modules() {
    for a in [xy_example(), truncated_polynomial(2, 3)] {
        let src = TensorAlgebraModule::new(&a, 4, Some(8)).unwrap().primed();
        let tp = TensorAlgebraModule::new(&a, 4, None).unwrap().primed();
        let target = TensorFaceModule::new(&tp, &tp, 4);
        let r = check_morphism(delta_family(&a), &src, &target);
        assert!(r.ok(), "{r}");
        let words = all_words(&a, 4, Some(8));
        assert!(check_bar_coalgebra(&a, &words).ok());
    }
}

#[test]
fn json_round_trip() {
    let text = r#"{"generators":[{"id":"x","deg":1},{"id":"y","deg":2}],
        "pi":[{"n":0,"entries":[{"from":["x","x"],"to":[{"gen":"y","c":"1"}]}]}]}"#;
    let a = parse_ainf(text, Ring::Rat).unwrap();
    assert_eq!(a, xy_example());
    let again = parse_ainf(&ainf_to_json(&a).to_string(), Ring::Rat).unwrap();
    assert_eq!(again, a);
    let r = random_ainf(5, 2);
    assert_eq!(parse_ainf(&ainf_to_json(&r).to_string(), Ring::Int).unwrap(), r);

    let out = bar_to_json(&a, &[w(&["x", "x"])]);
    assert_eq!(out["d"][0]["to"], "[y]");
    assert_eq!(out["d"][0]["c"], "-1");
    assert_eq!(out["coproduct"].as_array().unwrap().len(), 3);
}

#[test]
fn json_errors_point_at_entries() {
    let bad_deg = r#"{"generators":[{"id":"x","deg":1},{"id":"y","deg":2}],
        "pi":[{"n":0,"entries":[{"from":["x","x"],"to":[{"gen":"y","c":"1"}]},{"from":["y","x"],"to":[{"gen":"x","c":"1"}]}]}]}"#;
    let err = parse_ainf(bad_deg, Ring::Rat).unwrap_err();
    assert!(matches!(err, Error::Input { ref pointer, .. } if pointer == "/pi/0/entries/1"), "{err}");
    let bad_c = r#"{"generators":[{"id":"x","deg":1}],"pi":[{"n":0,"entries":[{"from":["x","x"],"to":[{"gen":"x","c":"q"}]}]}]}"#;
    assert!(matches!(parse_ainf(bad_c, Ring::Rat), Err(Error::Input { .. })));
    assert!(matches!(parse_ainf("{", Ring::Rat), Err(Error::Input { .. })));
    assert!(parse_ainf(r#"{"generators":[],"extra":1}"#, Ring::Rat).is_err());
}

#[test]
fn faces_fail_without_stasheff() {
    let a = AInfAlgebra::new(
        vec![("x".into(), 1), ("y".into(), 2), ("z".into(), 3)],
        vec![],
        vec![(0, vec!["x".into(), "x".into()], Vector::basis("y".into())), (0, vec!["y".into(), "x".into()], Vector::basis("z".into()))],
    )
    .unwrap();
    let t = TensorAlgebraModule::new(&a, 4, Some(6)).unwrap();
    assert!(!check_faces(&t).ok());
}
