use std::collections::BTreeSet;

use coeff_core::{rank, Echelon, Ring, Tensor, Vector};
use koszul_dual::{
    coproduct, enumerate_splits, enumerate_splits_brute, hat, koszul_dual_generic, permutations, reduced_coproduct,
    wedge_expansion, wedge_tuples, GenWord, WedgeTuple,
};
use simplicial_face_algebra::build_presentation;

type W = WedgeTuple;

fn binom(n: i64, k: i64) -> usize {
    (0..k).fold(1usize, |acc, i| acc * (n - i) as usize / (i + 1) as usize)
}

fn all_with_units(n_max: i64) -> Vec<W> {
    wedge_tuples(n_max).into_iter().chain((0..=n_max).map(W::unit)).collect()
}

#[test]
fn coassociative() {
    for w in all_with_units(5) {
        let mut left: Vector<Tensor<Tensor<W, W>, W>> = Vector::zero();
        let mut right: Vector<Tensor<Tensor<W, W>, W>> = Vector::zero();
        for (Tensor(a, b), c) in &coproduct(&w) {
            for (Tensor(a1, a2), c1) in &coproduct(a) {
                left.add_term(Tensor(Tensor(a1.clone(), a2.clone()), b.clone()), c * c1);
            }
            for (Tensor(b1, b2), c2) in &coproduct(b) {
                right.add_term(Tensor(Tensor(a.clone(), b1.clone()), b2.clone()), c * c2);
            }
        }
        assert_eq!(left, right, "{w}");
    }
}

#[test]
fn counital() {
    for w in all_with_units(5) {
        let (s, t) = w.colors();
        let left: Vector<W> = coproduct(&w).iter().filter(|(k, _)| k.0 == W::unit(s)).map(|(k, c)| (k.1.clone(), c.clone())).collect();
        let right: Vector<W> = coproduct(&w).iter().filter(|(k, _)| k.1 == W::unit(t)).map(|(k, c)| (k.0.clone(), c.clone())).collect();
        assert_eq!(left, Vector::basis(w.clone()));
        assert_eq!(right, Vector::basis(w.clone()));
    }
}

#[test]
fn shuffle_enumeration_matches_brute_force() {
    for w in wedge_tuples(6).into_iter().filter(|w| w.k() <= 4) {
        let fast: BTreeSet<_> = enumerate_splits(&w).into_iter().map(|s| (s.sigma, s.m, s.sign, s.left, s.right)).collect();
        let slow: BTreeSet<_> =
            enumerate_splits_brute(&w).into_iter().map(|s| (s.sigma, s.m, s.sign, s.left, s.right)).collect();
        assert_eq!(fast, slow, "{w}");
    }
}

#[test]
fn ordered_blocks_equivalence() {
    let inc = |b: &[i64]| b.windows(2).all(|x| x[0] < x[1]);
    for w in wedge_tuples(6).into_iter().filter(|w| w.k() <= 4) {
        for sigma in permutations(w.k()) {
            let p: Vec<i64> = sigma.iter().map(|&j| w.indices()[j]).collect();
            let h = hat(&sigma, w.indices());
            for m in 1..w.k() {
                assert_eq!(inc(&p[..m]) && inc(&p[m..]), inc(&h[..m]) && inc(&h[m..]), "{w} {sigma:?} {m}");
            }
        }
    }
}

/// Deconcatenating the word expansion of a wedge reproduces its signed
/// reduced coproduct.
#[test]
fn deconcatenation_matches_wedge_coproduct() {
    type P = Tensor<GenWord<simplicial_face_algebra::FaceWord>, GenWord<simplicial_face_algebra::FaceWord>>;
    for w in wedge_tuples(5) {
        let mut lhs: Vector<P> = Vector::zero();
        for (word, c) in &wedge_expansion(&w) {
            for i in 1..word.0.len() {
                lhs.add_term(Tensor(GenWord(word.0[..i].to_vec()), GenWord(word.0[i..].to_vec())), c.clone());
            }
        }
        let mut rhs: Vector<P> = Vector::zero();
        for (Tensor(l, r), c) in &reduced_coproduct(&w) {
            for (a, ca) in &wedge_expansion(l) {
                for (b, cb) in &wedge_expansion(r) {
                    rhs.add_term(Tensor(a.clone(), b.clone()), &(c * ca) * cb);
                }
            }
        }
        assert_eq!(lhs, rhs, "{w}");
    }
}

#[test]
fn generic_dual_small_cases() {
    let p = build_presentation(4);
    // k = 0 and k = 1.
    assert_eq!(koszul_dual_generic(&p, 0, 2, 2, Ring::Rat).unwrap().rank(), 1);
    assert_eq!(koszul_dual_generic(&p, 0, 1, 2, Ring::Rat).unwrap().rank(), 0);
    assert_eq!(koszul_dual_generic(&p, 1, 2, 3, Ring::Rat).unwrap().rank(), 4);
    assert!(koszul_dual_generic(&p, 2, 0, 2, Ring::Int).is_err());
    for n in 2..=4i64 {
        for k in 2..=n as usize {
            let comp = koszul_dual_generic(&p, k, n - k as i64, n, Ring::Rat).unwrap();
            assert_eq!(comp.rank(), binom(n + 1, k as i64), "k={k} n={n}");
            let mut span = Echelon::new(Ring::Rat).unwrap();
            span.extend(&comp.basis);
            let wedges: Vec<_> = wedge_tuples(n).into_iter().filter(|w| w.n() == n && w.k() == k).map(|w| wedge_expansion(&w)).collect();
            assert!(wedges.iter().all(|v| span.contains(v)));
            assert_eq!(rank(&wedges, Ring::Rat).unwrap(), comp.rank());
        }
    }
}
