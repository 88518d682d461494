use std::collections::BTreeMap;

use coeff_core::{Key, Scalar, Tensor, Vector};

use crate::FaceWord;

/// A generator of `M` with colors `(s, t)` and degree `m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator<L> {
    pub key: L,
    pub s: i64,
    pub t: i64,
    pub m: i64,
}

/// A quadratic colored algebra `T(M)/(Q)` given by generators `M` and
/// relation vectors `Q ⊆ M⊗M`. Each relation is homogeneous and pairs
/// generators with matching inner colors.
#[derive(Clone, Debug)]
pub struct QuadraticPresentation<L: Ord> {
    pub generators: Vec<Generator<L>>,
    pub relations: Vec<Vector<Tensor<L, L>>>,
}

impl<L: Key> QuadraticPresentation<L> {
    pub fn generator(&self, key: &L) -> Option<&Generator<L>> {
        self.generators.iter().find(|g| &g.key == key)
    }

    /// Generators indexed by key.
    pub fn colors(&self) -> BTreeMap<L, (i64, i64, i64)> {
        self.generators.iter().map(|g| (g.key.clone(), (g.s, g.t, g.m))).collect()
    }

    /// Generators in `M(s, t)`.
    pub fn generators_between(&self, s: i64, t: i64) -> Vec<&Generator<L>> {
        self.generators.iter().filter(|g| g.s == s && g.t == t).collect()
    }

    /// Whether every relation term pairs composable generators.
    pub fn is_well_formed(&self) -> bool {
        let c = self.colors();
        self.relations.iter().all(|r| {
            r.keys().all(|Tensor(a, b)| match (c.get(a), c.get(b)) {
                (Some(x), Some(y)) => x.1 == y.0,
                _ => false,
            })
        })
    }
}

/// `M(n-1, n)_0` free on `∂_0^n, …, ∂_n^n` for `1 <= n <= n_max`, and
/// `Q(n-2, n)_0` free on `∂_i ⊗ ∂_j − ∂_{j-1} ⊗ ∂_i` for `0 <= i < j <= n`.
pub fn build_presentation(n_max: i64) -> QuadraticPresentation<FaceWord> {
    let letter = |i: i64, n: i64| FaceWord::new(&[(i, n)]).expect("valid letter");
    let mut generators = Vec::new();
    let mut relations = Vec::new();
    for n in 1..=n_max {
        for i in 0..=n {
            generators.push(Generator { key: letter(i, n), s: n - 1, t: n, m: 0 });
        }
        if n >= 2 {
            for j in 0..=n {
                for i in 0..j {
                    relations.push(Vector::from_terms([
                        (Tensor(letter(i, n - 1), letter(j, n)), Scalar::one()),
                        (Tensor(letter(j - 1, n - 1), letter(i, n)), Scalar::from(-1)),
                    ]));
                }
            }
        }
    }
    QuadraticPresentation { generators, relations }
}
