use ainf_bar::{bar_differential, check_ainf, check_bar_coalgebra, delta_family, random_ainf, TensorAlgebraModule};
use infty_face_modules::{check_faces, check_morphism, total_bar_differential, FaceModule, TensorFaceModule};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn random_algebras_satisfy_stasheff(seed in any::<u64>()) {
        let a = random_ainf(seed, 2);
        prop_assert!(check_ainf(&a, 3, Some(9)).ok());
    }

    #[test]
    fn tensor_module_has_faces_and_bar_is_total(seed in any::<u64>()) {
        let a = random_ainf(seed, 2);
        let t = TensorAlgebraModule::new(&a, 4, Some(8)).unwrap();
        prop_assert!(check_faces(&t).ok());
        for (_, keys) in t.region() {
            for u in &keys {
                prop_assert_eq!(bar_differential(&a, u), total_bar_differential(&t, u));
            }
        }
    }

    #[test]
    fn bar_is_a_dg_coalgebra(seed in any::<u64>()) {
        let a = random_ainf(seed, 2);
        let words: Vec<_> = (0..=4).flat_map(|n| a.words(n, Some(8))).collect();
        prop_assert!(check_bar_coalgebra(&a, &words).ok());
        let src = TensorAlgebraModule::new(&a, 3, Some(6)).unwrap().primed();
        let tp = TensorAlgebraModule::new(&a, 3, None).unwrap().primed();
        prop_assert!(check_morphism(delta_family(&a), &src, &TensorFaceModule::new(&tp, &tp, 3)).ok());
    }
}
