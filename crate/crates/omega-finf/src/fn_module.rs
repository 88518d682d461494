use coeff_core::{Scalar, Vector};
use itertools::Itertools;
use koszul_dual::{enumerate_splits, WedgeTuple};

use crate::word::OmegaWord;

/// `d∂_I = Σ_splits sign · ∂_L ∂_R` on a generator of `F∞`.
pub fn finf_d(w: &WedgeTuple) -> Vector<OmegaWord<WedgeTuple>> {
    enumerate_splits(w)
        .into_iter()
        .map(|s| (OmegaWord::from_wedges(vec![s.left, s.right]).expect("split blocks compose"), Scalar::from(s.sign)))
        .collect()
}

/// The derivation extension of [`finf_d`]. Every generator has
/// `s - t + m = -1`, so the term differentiating letter `i` carries
/// `(-1)^{i-1}`.
pub fn finf_d_word(w: &OmegaWord<WedgeTuple>) -> Vector<OmegaWord<WedgeTuple>> {
    let mut out = Vector::zero();
    for (i, g) in w.letters().iter().enumerate() {
        let sg = Scalar::sign(i as i64);
        for (pair, c) in &finf_d(g) {
            let [a, b] = pair.letters() else { unreachable!() };
            out.add_term(w.splice(i, a, b), &sg * c);
        }
    }
    out
}

/// `∂^m_I · a` for `a ∈ F[n]_{m,*}`; zero when the ambient of `I` is not `m`.
pub fn left_multiply(g: &WedgeTuple, a: &OmegaWord<WedgeTuple>) -> Option<OmegaWord<WedgeTuple>> {
    OmegaWord::generator(g.clone()).concat(a)
}

/// Basis of `F[n]_{m,p} = F∞(m, n)_p`: words of `r = n - m - p` generators
/// leading from color `m` to color `n`.
pub fn f_n_basis(n: i64, m: i64, p: i64) -> Vec<OmegaWord<WedgeTuple>> {
    if m < 0 || p < 0 || m > n {
        return Vec::new();
    }
    let r = n - m - p;
    if r == 0 {
        return if p == 0 { vec![OmegaWord::unit(n)] } else { Vec::new() };
    }
    if r < 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for sizes in compositions(n - m, r as usize) {
        let mut ambient = m;
        let choices: Vec<Vec<WedgeTuple>> = sizes
            .iter()
            .map(|&k| {
                ambient += k;
                (0..=ambient)
                    .combinations(k as usize)
                    .map(|idx| WedgeTuple::new(ambient, idx).expect("k <= ambient"))
                    .collect()
            })
            .collect();
        for letters in choices.into_iter().multi_cartesian_product() {
            out.push(OmegaWord::from_wedges(letters).expect("ambients chain"));
        }
    }
    out
}

/// Every nonzero component of `F[n]`, ordered by `m` and then `p`.
pub fn f_n_components(n: i64) -> Vec<((i64, i64), Vec<OmegaWord<WedgeTuple>>)> {
    (0..=n)
        .flat_map(|m| (0..=(n - m)).map(move |p| (m, p)))
        .map(|(m, p)| ((m, p), f_n_basis(n, m, p)))
        .filter(|(_, b)| !b.is_empty())
        .collect()
}

/// Ordered compositions of `total` into `parts` positive parts.
fn compositions(total: i64, parts: usize) -> Vec<Vec<i64>> {
    if parts == 0 {
        return if total == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    (1..=total - parts as i64 + 1)
        .flat_map(|first| {
            compositions(total - first, parts - 1).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

/// The coface `δ^I : F[n-k] → F[n]`, `δ^I(a) = (-1)^{n-k+(m+p)(k-1)} a·∂^n_I`
/// for `a ∈ F[n-k]_{m,p}`.
pub fn coface_delta(w: &WedgeTuple, a: &OmegaWord<WedgeTuple>) -> Vector<OmegaWord<WedgeTuple>> {
    let k = w.k() as i64;
    let n = w.n();
    let (m, t) = a.colors();
    if t != n - k {
        return Vector::zero();
    }
    let p = a.degree();
    let word = a.concat(&OmegaWord::generator(w.clone())).expect("colors checked");
    Vector::term(word, Scalar::sign(n - k + (m + p) * (k - 1)))
}
