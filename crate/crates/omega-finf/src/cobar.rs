use coeff_core::{Scalar, Tensor, Vector};
use colored_core::Tricolor;
use koszul_dual::{ColoredCoalgebra, ColoredDga};

use crate::word::OmegaWord;

/// `Ω(C)` as a colored differential algebra on words of reduced letters.
#[derive(Clone, Copy, Debug, Default)]
pub struct CoBar<C>(pub C);

impl<C: ColoredCoalgebra> CoBar<C> {
    /// Builds a word from composable non-unit letters.
    pub fn word(&self, letters: Vec<C::K>) -> Option<OmegaWord<C::K>> {
        if letters.iter().any(|c| self.0.is_unit(c)) {
            return None;
        }
        OmegaWord::with_colors(letters, |c| {
            let t = self.0.tricolor(c);
            (t.s, t.t)
        })
        .ok()
    }
}

/// `d[c_1|…|c_k] = Σ_i (-1)^{i+μ_i} [c_1|…|∇̄c_i|…|c_k]` with
/// `μ_i = s_1 - t_i' + q_1 + … + q_{i-1} + q_i'`, where `c_i' ∈ C(s_i, t_i')_{q_i'}`.
pub fn omega_differential<C: ColoredCoalgebra>(c: &C, w: &OmegaWord<C::K>) -> Vector<OmegaWord<C::K>> {
    let s1 = w.colors().0;
    let mut out = Vector::zero();
    let mut q_before = 0;
    for (i, ci) in w.letters().iter().enumerate() {
        for (Tensor(a, b), coef) in &c.reduced_coproduct(ci) {
            let ta = c.tricolor(a);
            let mu = s1 - ta.t + q_before + ta.m;
            out.add_term(w.splice(i, a, b), coef * &Scalar::sign(i as i64 + 1 + mu));
        }
        q_before += c.tricolor(ci).m;
    }
    out
}

impl<C: ColoredCoalgebra> ColoredDga for CoBar<C> {
    type K = OmegaWord<C::K>;

    /// A word of letters of degrees `q_j` sits in degree `Σ (q_j - 1)`.
    fn tricolor(&self, w: &Self::K) -> Tricolor {
        let (s, t) = w.colors();
        Tricolor { s, t, m: w.letters().iter().map(|c| self.0.tricolor(c).m - 1).sum() }
    }

    fn d(&self, w: &Self::K) -> Vector<Self::K> {
        omega_differential(&self.0, w)
    }

    fn product(&self, a: &Self::K, b: &Self::K) -> Vector<Self::K> {
        a.concat(b).map(Vector::basis).unwrap_or_default()
    }

    fn unit(&self, n: i64) -> Vector<Self::K> {
        Vector::basis(OmegaWord::unit(n))
    }
}

/// `Ω(φ)[c_1|…|c_k] = φ(c_1) ⋯ φ(c_k)`, multiplied right to left; the empty
/// word goes to the unit.
pub fn omega_of_cochain<C, A>(phi: impl Fn(&C) -> Vector<A::K>, a: &A, w: &OmegaWord<C>) -> Vector<A::K>
where
    C: coeff_core::Key,
    A: ColoredDga,
{
    let mut acc = a.unit(w.colors().1);
    for c in w.letters().iter().rev() {
        let f = phi(c);
        let mut next = Vector::zero();
        for (x, cx) in &f {
            for (y, cy) in &acc {
                next.axpy(&(cx * cy), &a.product(x, y));
            }
        }
        acc = next;
    }
    acc
}
