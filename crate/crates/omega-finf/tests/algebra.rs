use coeff_core::{Scalar, Vector};
use colored_core::Tricolor;
use koszul_dual::{
    check_twisting_cochain, enumerate_splits, phi_shriek, wedge_tuples, ColoredDga, FaceAlgebra, FaceCoalgebra,
    WedgeTuple,
};
use omega_finf::{
    coface_delta, f_n_basis, f_n_components, finf_d, finf_d_word, left_multiply, omega_differential, omega_of_cochain,
    CoBar, OmegaWord,
};

type Word = OmegaWord<WedgeTuple>;

fn apply(v: &Vector<Word>, f: impl Fn(&Word) -> Vector<Word>) -> Vector<Word> {
    v.map_linear(f)
}

fn all_words(n_max: i64) -> Vec<Word> {
    (0..=n_max).flat_map(|n| f_n_components(n).into_iter().flat_map(|(_, b)| b)).collect()
}

#[test]
fn differential_squares_to_zero() {
    for w in all_words(5) {
        let dd = apply(&finf_d_word(&w), finf_d_word);
        assert!(dd.is_zero(), "d²({w}) = {dd}");
        let dd = apply(&omega_differential(&FaceCoalgebra, &w), |x| omega_differential(&FaceCoalgebra, x));
        assert!(dd.is_zero(), "display d²({w}) = {dd}");
    }
}

#[test]
fn display_differential_is_the_negative_of_the_generator_formula() {
    for w in all_words(5) {
        assert_eq!(omega_differential(&FaceCoalgebra, &w), -finf_d_word(&w), "{w}");
    }
}

/// `∂_I ↦ -[w_I]` is an algebra isomorphism intertwining the two
/// differentials: a word of length `r` picks up `(-1)^r`.
#[test]
fn sign_twist_is_a_chain_isomorphism() {
    let twist = |w: &Word| Vector::term(w.clone(), Scalar::sign(w.len() as i64));
    for w in all_words(4) {
        let lhs = apply(&twist(&w), |x| omega_differential(&FaceCoalgebra, x));
        let rhs = apply(&finf_d_word(&w), twist);
        assert_eq!(lhs, rhs, "{w}");
    }
}

#[test]
fn generator_differential_matches_printed_low_cases() {
    let g = |n, idx: &[i64]| WedgeTuple::new(n, idx.to_vec()).unwrap();
    let word = |a: WedgeTuple, b: WedgeTuple| OmegaWord::from_wedges(vec![a, b]).unwrap();
    assert!(finf_d(&g(2, &[1])).is_zero());
    // d∂_{(i,j)} = ∂_{j-1}∂_i - ∂_i∂_j
    let d = finf_d(&g(3, &[0, 2]));
    let mut expect = Vector::zero();
    expect.add_term(word(g(2, &[1]), g(3, &[0])), Scalar::one());
    expect.add_term(word(g(2, &[0]), g(3, &[2])), -Scalar::one());
    assert_eq!(d, expect);
}

#[test]
fn phi_omega_is_twisting() {
    let cobar = CoBar(FaceCoalgebra);
    let phi = |c: &WedgeTuple| cobar.word(vec![c.clone()]).map(Vector::basis).unwrap_or_default();
    let basis = wedge_tuples(5).into_iter().chain((0..=5).map(WedgeTuple::unit));
    let r = check_twisting_cochain(phi, &FaceCoalgebra, &cobar, basis).unwrap();
    assert!(r.ok(), "{r}");
    assert!(r.checks > 0);
}

#[test]
fn omega_of_phi_shriek_kills_boundaries() {
    for w in all_words(4) {
        let image = apply_cochain(&omega_differential(&FaceCoalgebra, &w));
        assert!(image.is_zero(), "Ω(φ^!)(d{w}) = {image}");
    }
    let g = |n, i| WedgeTuple::new(n, vec![i]).unwrap();
    let w = OmegaWord::from_wedges(vec![g(1, 0), g(2, 2)]).unwrap();
    let v = omega_of_cochain(phi_shriek, &FaceAlgebra, &w);
    assert_eq!(v.len(), 1);
    assert_eq!(v.keys().next().unwrap().to_string(), "d1^1*d0^2");
    assert_eq!(omega_of_cochain(phi_shriek, &FaceAlgebra, &OmegaWord::unit(2)), FaceAlgebra.unit(2));
}

fn apply_cochain(v: &Vector<Word>) -> Vector<simplicial_face_algebra::FaceWord> {
    v.map_linear(|w| omega_of_cochain(phi_shriek, &FaceAlgebra, w))
}

#[test]
fn cobar_grading() {
    let cobar = CoBar(FaceCoalgebra);
    let w: Word = "d[2](0,1)*d[3](2)".parse().unwrap();
    assert_eq!(cobar.tricolor(&w), Tricolor { s: 0, t: 3, m: 1 });
    assert_eq!(w.degree(), 1);
    assert!(cobar.word(vec![WedgeTuple::unit(2)]).is_none());
}

#[test]
fn faces_on_f_n_are_left_multiplication() {
    let a: Word = "d[2](1)".parse().unwrap();
    let g = WedgeTuple::new(1, vec![0]).unwrap();
    assert_eq!(left_multiply(&g, &a).unwrap().to_string(), "d[1](0)*d[2](1)");
    assert!(left_multiply(&WedgeTuple::new(2, vec![0]).unwrap(), &a).is_none());
    for n in 0..=4 {
        for (_, basis) in f_n_components(n) {
            for a in basis {
                let m = a.colors().0;
                for g in wedge_tuples(m).into_iter().filter(|g| g.n() == m) {
                    let ga = left_multiply(&g, &a).unwrap();
                    assert_eq!(ga.colors(), (m - g.k() as i64, n));
                    assert_eq!(ga.degree(), a.degree() + g.k() as i64 - 1);
                }
            }
        }
    }
}

#[test]
fn f_n_ranks_follow_compositions() {
    // rank F[n]_{m,p} = Σ over compositions (k_j) of n-m into n-m-p parts of Π C(a_j + 1, k_j)
    assert_eq!(f_n_basis(3, 0, 2).len(), 4);
    assert_eq!(f_n_basis(3, 0, 0).len(), 2 * 3 * 4);
    assert_eq!(f_n_basis(3, 0, 1).len(), 2 * 6 + 3 * 4);
    assert_eq!(f_n_basis(3, 1, 0).len(), 3 * 4);
}

/// `dδ^I + (-1)^k δ^I d = Σ_splits (-1)^{inv+k(m-1)} δ^R δ^L`.
#[test]
fn coface_relation() {
    for w in wedge_tuples(5).into_iter().filter(|w| w.k() <= 3) {
        let (n, k) = (w.n(), w.k() as i64);
        for (_, basis) in f_n_components(n - k) {
            for a in basis {
                let mut lhs = apply(&coface_delta(&w, &a), finf_d_word);
                lhs.axpy(&Scalar::sign(k), &apply(&finf_d_word(&a), |x| coface_delta(&w, x)));
                let mut rhs = Vector::zero();
                for s in enumerate_splits(&w) {
                    let e = Scalar::from(-s.sign) * Scalar::sign(k * (s.m as i64 - 1));
                    let v = apply(&coface_delta(&s.left, &a), |x| coface_delta(&s.right, x));
                    rhs.axpy(&e, &v);
                }
                assert_eq!(lhs, rhs, "δ^{w} on {a}");
            }
        }
    }
}
