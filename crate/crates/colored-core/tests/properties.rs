use colored_core::{
    check_colored_d_squared, hom_compose, hom_differential, Bidegree, BigradedModule, ColoredModule, ColoredTensor,
    HomElement, Tricolor,
};
use coeff_core::{sign, Scalar, Vector};
use proptest::prelude::*;

/// Components `(s,t)` with colors in `0..=2` and degrees 0 and 1, at most two
/// basis elements each, with a random differential from degree 1 to 0.
fn colored(tag: &'static str) -> impl Strategy<Value = ColoredModule<String>> {
    prop::collection::vec((0i64..=2, 0i64..=2, 0usize..=2, 0usize..=2, prop::collection::vec(-2i64..=2, 4)), 1..4)
        .prop_map(move |specs| {
            let mut comps = Vec::new();
            let mut d = Vec::new();
            let mut seen = std::collections::BTreeSet::new();
            for (ci, (s, t, r1, r0, coeffs)) in specs.into_iter().enumerate() {
                if !seen.insert((s, t)) {
                    continue;
                }
                let hi: Vec<String> = (0..r1).map(|i| format!("{tag}{ci}h{i}")).collect();
                let lo: Vec<String> = (0..r0).map(|i| format!("{tag}{ci}l{i}")).collect();
                for (i, h) in hi.iter().enumerate() {
                    let v: Vector<String> =
                        lo.iter().enumerate().map(|(j, l)| (l.clone(), Scalar::from(coeffs[2 * i + j]))).collect();
                    d.push((h.clone(), v));
                }
                comps.push((Tricolor { s, t, m: 1 }, hi));
                comps.push((Tricolor { s, t, m: 0 }, lo));
            }
            ColoredModule::new(comps, d).unwrap()
        })
}

fn bigraded() -> impl Strategy<Value = BigradedModule<String>> {
    prop::collection::vec(prop::collection::vec(-2i64..=2, 4), 3).prop_map(|ds| {
        let mut comps = Vec::new();
        let mut d = Vec::new();
        for (n, c) in ds.iter().enumerate() {
            let hi = vec![format!("x{n}a"), format!("x{n}b")];
            let lo = vec![format!("y{n}a"), format!("y{n}b")];
            for (i, h) in hi.iter().enumerate() {
                d.push((h.clone(), lo.iter().enumerate().map(|(j, l)| (l.clone(), Scalar::from(c[2 * i + j]))).collect()));
            }
            comps.push((Bidegree::new(n as i64, 1), hi));
            comps.push((Bidegree::new(n as i64, 0), lo));
        }
        BigradedModule::new(comps, d).unwrap()
    })
}

/// A random element of `hom(s,t)_m` of the module built by [`bigraded`].
fn hom(s: i64, t: i64, m: i64, c: &[i64]) -> HomElement<String, String> {
    let src = |deg: i64| if deg == 1 { ["x", "x"].map(|p| format!("{p}{t}")) } else { ["y", "y"].map(|p| format!("{p}{t}")) };
    let tgt = |deg: i64| if deg == 1 { format!("x{s}") } else { format!("y{s}") };
    let mut cols = Vec::new();
    for deg in [0i64, 1] {
        let out = deg + m;
        if !(0..=1).contains(&out) {
            continue;
        }
        for (i, suffix) in ["a", "b"].iter().enumerate() {
            let k = format!("{}{suffix}", src(deg)[i]);
            let v: Vector<String> = ["a", "b"]
                .iter()
                .enumerate()
                .map(|(j, sj)| (format!("{}{sj}", tgt(out)), Scalar::from(c[(4 * deg as usize + 2 * i + j) % c.len()])))
                .collect();
            cols.push((k, v));
        }
    }
    HomElement::new(s, t, m, cols)
}

proptest! {
    #[test]
    fn tensor_differential_squares_to_zero(x in colored("a"), y in colored("b"), z in colored("c")) {
        prop_assert!(check_colored_d_squared(&x).ok());
        let xy = ColoredTensor::new(&x, &y);
        prop_assert!(check_colored_d_squared(&xy).ok());
        let xyz = ColoredTensor::new(&xy, &z);
        let r = check_colored_d_squared(&xyz);
        prop_assert!(r.ok(), "{}", r);
    }

    #[test]
    fn hom_differential_squares_to_zero(x in bigraded(), s in 0i64..3, t in 0i64..3, m in -1i64..=1, c in prop::collection::vec(-2i64..=2, 8)) {
        let f = hom(s, t, m, &c);
        prop_assert!(f.respects_degree(&x, &x));
        let dd = hom_differential(&hom_differential(&f, &x, &x), &x, &x);
        prop_assert!(dd.is_zero());
    }

    #[test]
    fn hom_differential_is_a_derivation(
        x in bigraded(),
        (s, l, t) in (0i64..3, 0i64..3, 0i64..3),
        (p, q) in (-1i64..=1, -1i64..=1),
        c1 in prop::collection::vec(-2i64..=2, 8),
        c2 in prop::collection::vec(-2i64..=2, 8),
    ) {
        let g = hom(s, l, p, &c1);
        let f = hom(l, t, q, &c2);
        let lhs = hom_differential(&hom_compose(&g, &f), &x, &x);
        let a = hom_compose(&hom_differential(&g, &x, &x), &f);
        let b = hom_compose(&g, &hom_differential(&f, &x, &x));
        let e = Scalar::from(sign(s - l + p));
        for k in x.keys() {
            let mut rhs = a.apply_key(k);
            rhs.axpy(&e, &b.apply_key(k));
            prop_assert_eq!(lhs.apply_key(k), rhs, "at {}", k);
        }
    }

    #[test]
    fn hom_compose_associative_with_units(
        x in bigraded(),
        cs in prop::collection::vec(prop::collection::vec(-2i64..=2, 8), 3),
        colors in prop::collection::vec(0i64..3, 4),
        degs in prop::collection::vec(-1i64..=1, 3),
    ) {
        let f = hom(colors[1], colors[0], degs[0], &cs[0]);
        let g = hom(colors[2], colors[1], degs[1], &cs[1]);
        let h = hom(colors[3], colors[2], degs[2], &cs[2]);
        let left = hom_compose(&h, &hom_compose(&g, &f));
        let right = hom_compose(&hom_compose(&h, &g), &f);
        prop_assert_eq!(left, right);
        let unit = |n: i64| HomElement::new(n, n, 0, x.keys().filter(|k| x.bidegree(k).unwrap().n == n).map(|k| (k.clone(), Vector::basis(k.clone()))));
        prop_assert_eq!(hom_compose(&unit(colors[1]), &f), f.clone());
        prop_assert_eq!(hom_compose(&f, &unit(colors[0])), f);
    }
}
