use coeff_core::{Error, Scalar, Vector};
use colored_core::Bidegree;
use infty_face_modules::FaceModule;
use koszul_dual::WedgeTuple;

use crate::algebra::AInfAlgebra;
use crate::word::BarWord;

/// `T(A)` with `T(A)_{n,q} = (A^{⊗n})_q`, the tensor differential and the
/// faces
/// `∂_{(j,…,j+k-1)} = (-1)^{k(q-1)} 1^{⊗(j-1)} ⊗ π_{k-1} ⊗ 1^{⊗(n-k-j)}`
/// for `1 <= j <= n-k`, every other tuple acting by zero.
///
/// The primed variant uses `d' = (-1)^n d` and
/// `∂'_I = (-1)^{n(k-1)+k(q-1)} ∂_I`; its plain `D∞` total differential is
/// the bar differential.
///
/// The region is every word of length at most `word_cap` and degree at
/// most `deg_cap`; without a degree cap it is closed under `d` and faces.
#[derive(Clone, Debug)]
pub struct TensorAlgebraModule<'a> {
    a: &'a AInfAlgebra,
    word_cap: usize,
    deg_cap: Option<i64>,
    primed: bool,
}

impl<'a> TensorAlgebraModule<'a> {
    /// Requires `A` strictly positively graded, so `T(A)_{n,0} = 0` for
    /// `n > 0`.
    pub fn new(a: &'a AInfAlgebra, word_cap: usize, deg_cap: Option<i64>) -> Result<Self, Error> {
        if !a.is_positively_graded() {
            return Err(Error::Unsupported("the bar pipeline needs every generator in positive degree".into()));
        }
        Ok(TensorAlgebraModule { a, word_cap, deg_cap, primed: false })
    }

    pub fn primed(mut self) -> Self {
        self.primed = true;
        self
    }

    pub fn algebra(&self) -> &AInfAlgebra {
        self.a
    }

    /// `(j, k)` when `w = (j, …, j+k-1)` with `1 <= j <= n - k`.
    fn consecutive(w: &WedgeTuple) -> Option<(usize, usize)> {
        let idx = w.indices();
        let (j, k) = (*idx.first()?, idx.len() as i64);
        let run = idx.iter().enumerate().all(|(s, &i)| i == j + s as i64);
        (run && j >= 1 && j <= w.n() - k).then_some((j as usize, k as usize))
    }
}

impl FaceModule for TensorAlgebraModule<'_> {
    type K = BarWord;

    fn bidegree(&self, w: &BarWord) -> Bidegree {
        Bidegree::new(w.len() as i64, self.a.word_degree(&w.0))
    }

    fn region(&self) -> Vec<(Bidegree, Vec<BarWord>)> {
        let mut out: std::collections::BTreeMap<Bidegree, Vec<BarWord>> = Default::default();
        for n in 0..=self.word_cap {
            for w in self.a.words(n, self.deg_cap) {
                out.entry(self.bidegree(&w)).or_default().push(w);
            }
        }
        out.into_iter().collect()
    }

    fn d(&self, w: &BarWord) -> Vector<BarWord> {
        let v = self.a.d_word(w);
        if self.primed {
            v.scale(&Scalar::sign(w.len() as i64))
        } else {
            v
        }
    }

    fn face(&self, t: &WedgeTuple, w: &BarWord) -> Vector<BarWord> {
        let n = w.len() as i64;
        if t.n() != n {
            return Vector::zero();
        }
        let Some((j, k)) = Self::consecutive(t) else {
            return Vector::zero();
        };
        let (k, q) = (k as i64, self.a.word_degree(&w.0));
        let mut e = k * (q - 1);
        if self.primed {
            e += n * (k - 1) + k * (q - 1);
        }
        self.a.pi_at((k - 1) as usize, w, j - 1).scale(&Scalar::sign(e))
    }
}
