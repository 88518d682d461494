use coeff_core::{sign, Error, Key, Scalar, Tensor, Vector};
use colored_core::{Report, Tricolor};
use simplicial_face_algebra::{normal_words, normalize_word, FaceWord};

use crate::wedge::{coproduct, WedgeTuple};

/// A colored graded coalgebra with counit and coaugmentation, given on a
/// homogeneous basis.
pub trait ColoredCoalgebra {
    type K: Key;
    fn tricolor(&self, c: &Self::K) -> Tricolor;
    fn coproduct(&self, c: &Self::K) -> Vector<Tensor<Self::K, Self::K>>;
    /// Whether `c` is a coaugmentation unit `1_s`.
    fn is_unit(&self, c: &Self::K) -> bool;

    /// `∇̄`: the coproduct without the terms carrying a unit factor.
    fn reduced_coproduct(&self, c: &Self::K) -> Vector<Tensor<Self::K, Self::K>> {
        self.coproduct(c).filter(|Tensor(a, b)| !self.is_unit(a) && !self.is_unit(b))
    }
}

/// A colored differential algebra given on a homogeneous basis; products of
/// non-composable elements are zero.
pub trait ColoredDga {
    type K: Key;
    fn tricolor(&self, a: &Self::K) -> Tricolor;
    fn d(&self, a: &Self::K) -> Vector<Self::K>;
    fn product(&self, a: &Self::K, b: &Self::K) -> Vector<Self::K>;
    /// The identity `1_n ∈ A(n, n)_0`.
    fn unit(&self, n: i64) -> Vector<Self::K>;
}

/// `F^!` on wedge tuples.
#[derive(Clone, Copy, Debug, Default)]
pub struct FaceCoalgebra;

impl ColoredCoalgebra for FaceCoalgebra {
    type K = WedgeTuple;
    fn tricolor(&self, c: &WedgeTuple) -> Tricolor {
        let (s, t) = c.colors();
        Tricolor { s, t, m: c.k() as i64 }
    }
    fn coproduct(&self, c: &WedgeTuple) -> Vector<Tensor<WedgeTuple, WedgeTuple>> {
        coproduct(c)
    }
    fn is_unit(&self, c: &WedgeTuple) -> bool {
        c.is_unit()
    }
}

/// The face algebra `F` on normal words, with zero differential.
#[derive(Clone, Copy, Debug, Default)]
pub struct FaceAlgebra;

impl FaceAlgebra {
    /// Basis of `F(n-k, n)_0`.
    pub fn basis(&self, k: usize, n: i64) -> Vec<FaceWord> {
        normal_words(k, n)
    }
}

impl ColoredDga for FaceAlgebra {
    type K = FaceWord;
    fn tricolor(&self, a: &FaceWord) -> Tricolor {
        let (s, t) = a.colors();
        Tricolor { s, t, m: 0 }
    }
    fn d(&self, _: &FaceWord) -> Vector<FaceWord> {
        Vector::zero()
    }
    fn product(&self, a: &FaceWord, b: &FaceWord) -> Vector<FaceWord> {
        match a.concat(b) {
            Some(w) => Vector::basis(normalize_word(&w)),
            None => Vector::zero(),
        }
    }
    fn unit(&self, n: i64) -> Vector<FaceWord> {
        Vector::basis(FaceWord::unit(n))
    }
}

/// `φ^! : F^! → F`, sending `[∂_i]` to `∂_i` and every longer wedge and
/// every unit to zero.
pub fn phi_shriek(w: &WedgeTuple) -> Vector<FaceWord> {
    match w.indices() {
        [i] => Vector::basis(FaceWord::new(&[(*i, w.n())]).expect("valid letter")),
        _ => Vector::zero(),
    }
}

/// Checks `dφ + φ∪φ = 0` on each element of `basis`, where
/// `φ∪φ = π(φ⊗φ)∇` and `(φ⊗φ)(c'⊗c'') = (-1)^{s'-t'+m'} φ(c')⊗φ(c'')`.
///
/// `φ` must lower degree by one and preserve colors; otherwise an input
/// error names the first offending element.
pub fn check_twisting_cochain<C: ColoredCoalgebra, A: ColoredDga>(
    phi: impl Fn(&C::K) -> Vector<A::K>,
    c: &C,
    a: &A,
    basis: impl IntoIterator<Item = C::K>,
) -> Result<Report, Error> {
    let mut r = Report::new();
    for x in basis {
        let tc = c.tricolor(&x);
        let px = phi(&x);
        if let Some(bad) = px.keys().find(|y| a.tricolor(y) != Tricolor { m: tc.m - 1, ..tc }) {
            return Err(Error::input(x.to_string(), format!("φ({x}) has term {bad} of the wrong color or degree")));
        }
        let mut v = px.map_linear(|y| a.d(y));
        for (Tensor(l, rr), coef) in &c.coproduct(&x) {
            let tl = c.tricolor(l);
            let e = coef * &Scalar::from(sign(tl.s - tl.t + tl.m));
            let pl = phi(l);
            let pr = phi(rr);
            for (u, cu) in &pl {
                for (w, cw) in &pr {
                    v.axpy(&(&e * &(cu * cw)), &a.product(u, w));
                }
            }
        }
        r.check("dφ + φ∪φ = 0", || x.to_string(), &v);
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wedge::wedge_tuples;

    #[test]
    fn phi_shriek_is_twisting() {
        let basis = wedge_tuples(5).into_iter().chain((0..=5).map(WedgeTuple::unit));
        let r = check_twisting_cochain(phi_shriek, &FaceCoalgebra, &FaceAlgebra, basis).unwrap();
        assert!(r.ok(), "{r}");
    }

    #[test]
    fn zero_cochain_is_twisting() {
        let r = check_twisting_cochain(|_: &WedgeTuple| Vector::<FaceWord>::zero(), &FaceCoalgebra, &FaceAlgebra, wedge_tuples(4))
            .unwrap();
        assert!(r.ok());
    }

    #[test]
    fn wrong_degree_is_an_input_error() {
        let bad = |w: &WedgeTuple| Vector::basis(FaceWord::unit(w.n()));
        assert!(check_twisting_cochain(bad, &FaceCoalgebra, &FaceAlgebra, wedge_tuples(2)).is_err());
    }
}
