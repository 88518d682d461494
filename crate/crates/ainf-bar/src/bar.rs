use coeff_core::{Error, Scalar, Tensor, Vector};
use colored_core::Report;
use koszul_dual::WedgeTuple;

use crate::algebra::AInfAlgebra;
use crate::word::BarWord;

/// Degree `n + Σ deg a_i` of `[a_1|…|a_n]` in the bar complex.
pub fn total_degree(a: &AInfAlgebra, w: &BarWord) -> i64 {
    w.len() as i64 + a.word_degree(&w.0)
}

/// `∂̄[a_1|…|a_n] = (-1)^n Σ_i (-1)^{ε} [..d a_i..]
///   + Σ_{k=1}^{n-1} Σ_{i=1}^{n-k} (-1)^{k(k-1)/2 + ik + n(k-1) + ε(k-1)} [..π_{k-1}(a_i..a_{i+k})..]`
/// with `ε = deg a_1 + … + deg a_{i-1}`.
pub fn bar_differential(a: &AInfAlgebra, w: &BarWord) -> Vector<BarWord> {
    let n = w.len() as i64;
    let mut out = Vector::zero();
    for i in 1..=n {
        let eps = a.word_degree(&w.0[..(i - 1) as usize]);
        let e = Scalar::sign(n + eps);
        for (g, c) in &a.d(&w.0[(i - 1) as usize]) {
            out.add_term(w.replace((i - 1) as usize, 1, g), &e * c);
        }
    }
    for k in 1..n {
        for i in 1..=n - k {
            let eps = a.word_degree(&w.0[..(i - 1) as usize]);
            let e = Scalar::sign(k * (k - 1) / 2 + i * k + n * (k - 1) + eps * (k - 1));
            let args = &w.0[(i - 1) as usize..(i + k) as usize];
            for (g, c) in &a.pi((k - 1) as usize, args) {
                out.add_term(w.replace((i - 1) as usize, (k + 1) as usize, g), &e * c);
            }
        }
    }
    out
}

/// `Δ[a_1|…|a_n] = Σ_{i=0}^{n} (-1)^{(n-i)ε_i} [a_1..a_i] ⊗ [a_{i+1}..a_n]`,
/// `ε_i = deg a_1 + … + deg a_i`.
pub fn bar_coproduct(a: &AInfAlgebra, w: &BarWord) -> Vector<Tensor<BarWord, BarWord>> {
    let n = w.len();
    (0..=n)
        .map(|i| {
            let (l, r) = w.split_at(i);
            let e = Scalar::sign((n - i) as i64 * a.word_degree(&w.0[..i]));
            (Tensor(l, r), e)
        })
        .collect()
}

/// `Δ̃` as a morphism family: `Δ̃_() = Δ`, every proper component zero.
pub fn delta_family<'a>(a: &'a AInfAlgebra) -> impl Fn(&WedgeTuple, &BarWord) -> Vector<Tensor<BarWord, BarWord>> + 'a {
    move |t, w| {
        if t.is_unit() && t.n() == w.len() as i64 {
            bar_coproduct(a, w)
        } else {
            Vector::zero()
        }
    }
}

fn tensor_d(a: &AInfAlgebra, Tensor(u, v): &Tensor<BarWord, BarWord>) -> Vector<Tensor<BarWord, BarWord>> {
    let mut out: Vector<_> = bar_differential(a, u).iter().map(|(x, c)| (Tensor(x.clone(), v.clone()), c.clone())).collect();
    let e = Scalar::sign(total_degree(a, u));
    for (y, c) in &bar_differential(a, v) {
        out.add_term(Tensor(u.clone(), y.clone()), &e * c);
    }
    out
}

/// Checks on the given words: `∂̄² = 0`, coassociativity, both counit
/// laws, and `Δ∂̄ = (∂̄⊗1 + 1⊗∂̄)Δ` with `(1⊗∂̄)(u⊗v) = (-1)^{|u|} u⊗∂̄v`.
pub fn check_bar_coalgebra<'w>(a: &AInfAlgebra, words: impl IntoIterator<Item = &'w BarWord>) -> Report {
    let mut r = Report::new();
    for w in words {
        let dd = bar_differential(a, w).map_linear(|x| bar_differential(a, x));
        r.check("∂̄∘∂̄ = 0", || w.to_string(), &dd);

        let delta = bar_coproduct(a, w);
        let left: Vector<Tensor<Tensor<BarWord, BarWord>, BarWord>> = delta
            .iter()
            .flat_map(|(Tensor(u, v), c)| {
                bar_coproduct(a, u).into_iter().map(move |(Tensor(x, y), e)| (Tensor(Tensor(x, y), v.clone()), &e * c))
            })
            .collect();
        let right: Vector<Tensor<Tensor<BarWord, BarWord>, BarWord>> = delta
            .iter()
            .flat_map(|(Tensor(u, v), c)| {
                bar_coproduct(a, v).into_iter().map(move |(Tensor(x, y), e)| (Tensor(Tensor(u.clone(), x), y), &e * c))
            })
            .collect();
        r.check("(Δ⊗1)Δ = (1⊗Δ)Δ", || w.to_string(), &(&left - &right));

        let counit_l: Vector<BarWord> = delta.iter().filter(|(Tensor(u, _), _)| u.is_empty()).map(|(Tensor(_, v), c)| (v.clone(), c.clone())).collect();
        let counit_r: Vector<BarWord> = delta.iter().filter(|(Tensor(_, v), _)| v.is_empty()).map(|(Tensor(u, _), c)| (u.clone(), c.clone())).collect();
        let e = Vector::basis(w.clone());
        r.check("(ε⊗1)Δ = 1", || w.to_string(), &(&counit_l - &e));
        r.check("(1⊗ε)Δ = 1", || w.to_string(), &(&counit_r - &e));

        let lhs = bar_differential(a, w).map_linear(|x| bar_coproduct(a, x));
        let rhs = delta.map_linear(|t| tensor_d(a, t));
        r.check("Δ∂̄ = ∂̄Δ", || w.to_string(), &(&lhs - &rhs));
    }
    r
}

/// The classical bar differential of a DGA:
/// `(-1)^n Σ_i (-1)^{ε_i} [..d a_i..] + Σ_{i=1}^{n-1} (-1)^i [..a_i a_{i+1}..]`.
pub fn classic_bar_differential(a: &AInfAlgebra, w: &BarWord) -> Vector<BarWord> {
    let n = w.len();
    let mut out = a.d_word(w).scale(&Scalar::sign(n as i64));
    for i in 1..n {
        let e = Scalar::sign(i as i64);
        for (g, c) in &a.pi(0, &w.0[i - 1..=i]) {
            out.add_term(w.replace(i - 1, 2, g), &e * c);
        }
    }
    out
}

/// Deconcatenation `Σ_i [a_1..a_i] ⊗ [a_{i+1}..a_n]` with the Koszul sign
/// of moving the last `n - i` suspensions past `a_1 … a_i`.
pub fn classic_deconcatenation(a: &AInfAlgebra, w: &BarWord) -> Vector<Tensor<BarWord, BarWord>> {
    let mut out = Vector::zero();
    for i in 0..=w.len() {
        let (l, r) = w.split_at(i);
        let mut e = 0;
        for _ in 0..r.len() {
            e += a.word_degree(&l.0);
        }
        out.add_term(Tensor(l, r), Scalar::sign(e));
    }
    out
}

/// For a DGA (`π_n = 0` for `n > 0`): the bar differential and coproduct
/// agree with the classical two-term differential and deconcatenation,
/// and the coalgebra checks pass.
pub fn classic_bar_compare<'w>(a: &AInfAlgebra, words: impl IntoIterator<Item = &'w BarWord> + Clone) -> Result<Report, Error> {
    if a.max_arity().is_some_and(|n| n > 0) {
        return Err(Error::input("/pi", "a DGA has no operations π_n with n > 0"));
    }
    let mut r = Report::new();
    for w in words.clone() {
        r.check("∂̄ = classical bar differential", || w.to_string(), &(&bar_differential(a, w) - &classic_bar_differential(a, w)));
        r.check("Δ = deconcatenation", || w.to_string(), &(&bar_coproduct(a, w) - &classic_deconcatenation(a, w)));
    }
    r.merge(check_bar_coalgebra(a, words));
    Ok(r)
}
