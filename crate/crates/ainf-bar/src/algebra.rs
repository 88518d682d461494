use std::collections::BTreeMap;

use coeff_core::{sign, Columns, Error, Scalar, Vector};
use colored_core::Report;
use itertools::Itertools;

use crate::word::BarWord;

/// An A∞-algebra on a finite set of homogeneous generators: `d` of degree
/// `-1` and operations `π_n : A^{⊗(n+2)} → A` of degree `n`, stored on
/// generator tuples. Missing entries are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AInfAlgebra {
    generators: Vec<(String, i64)>,
    degree: BTreeMap<String, i64>,
    d: Columns<String, String>,
    pi: BTreeMap<usize, BTreeMap<Vec<String>, Vector<String>>>,
}

impl AInfAlgebra {
    /// Validates ids, arities and degrees. Pointers name the offending
    /// generator, `d` entry or `π_n` entry.
    pub fn new(
        generators: Vec<(String, i64)>,
        d: Vec<(String, Vector<String>)>,
        pi: Vec<(usize, Vec<String>, Vector<String>)>,
    ) -> Result<Self, Error> {
        let mut degree = BTreeMap::new();
        for (i, (g, deg)) in generators.iter().enumerate() {
            if degree.insert(g.clone(), *deg).is_some() {
                return Err(Error::input(format!("/generators/{i}/id"), format!("duplicate generator {g}")));
            }
        }
        let deg_of = |g: &String, at: &str| degree.get(g).copied().ok_or_else(|| Error::input(at, format!("unknown generator {g}")));
        let mut dcols: Columns<String, String> = Columns::new();
        for (i, (g, v)) in d.into_iter().enumerate() {
            let at = format!("/d/{i}");
            let dg = deg_of(&g, &at)?;
            for h in v.keys() {
                if deg_of(h, &at)? != dg - 1 {
                    return Err(Error::input(at, format!("d({g}) has term {h} of the wrong degree")));
                }
            }
            let col = dcols.entry(g).or_default();
            *col = &*col + &v;
        }
        dcols.retain(|_, v| !v.is_zero());
        let mut table: BTreeMap<usize, BTreeMap<Vec<String>, Vector<String>>> = BTreeMap::new();
        for (i, (n, args, v)) in pi.into_iter().enumerate() {
            let at = format!("/pi/{i}");
            if args.len() != n + 2 {
                return Err(Error::input(at, format!("π_{n} takes {} arguments, got {}", n + 2, args.len())));
            }
            let mut total = n as i64;
            for a in &args {
                total += deg_of(a, &at)?;
            }
            for h in v.keys() {
                if deg_of(h, &at)? != total {
                    return Err(Error::input(at, format!("π_{n}({}) has term {h} of the wrong degree", args.join(","))));
                }
            }
            let slot = table.entry(n).or_default().entry(args).or_default();
            *slot = &*slot + &v;
        }
        for t in table.values_mut() {
            t.retain(|_, v| !v.is_zero());
        }
        table.retain(|_, t| !t.is_empty());
        Ok(AInfAlgebra { generators, degree, d: dcols, pi: table })
    }

    pub fn generators(&self) -> &[(String, i64)] {
        &self.generators
    }

    pub fn degree(&self, g: &str) -> i64 {
        *self.degree.get(g).unwrap_or_else(|| panic!("unknown generator {g}"))
    }

    pub fn word_degree(&self, w: &[String]) -> i64 {
        w.iter().map(|g| self.degree(g)).sum()
    }

    pub fn d(&self, g: &str) -> Vector<String> {
        self.d.get(g).cloned().unwrap_or_default()
    }

    pub fn differential(&self) -> &Columns<String, String> {
        &self.d
    }

    pub fn pi(&self, n: usize, args: &[String]) -> Vector<String> {
        self.pi.get(&n).and_then(|t| t.get(args)).cloned().unwrap_or_default()
    }

    pub fn pi_table(&self) -> &BTreeMap<usize, BTreeMap<Vec<String>, Vector<String>>> {
        &self.pi
    }

    /// Largest `n` with a nonzero `π_n`.
    pub fn max_arity(&self) -> Option<usize> {
        self.pi.keys().next_back().copied()
    }

    pub fn is_positively_graded(&self) -> bool {
        self.generators.iter().all(|(_, d)| *d > 0)
    }

    /// `1^{⊗start} ⊗ π_n ⊗ 1^{⊗…}` on a word with the Koszul sign
    /// `(-1)^{n·ε}`, `ε` the degree of the letters before `start`.
    pub fn pi_at(&self, n: usize, w: &BarWord, start: usize) -> Vector<BarWord> {
        let len = n + 2;
        if start + len > w.len() {
            return Vector::zero();
        }
        let e = Scalar::sign(n as i64 * self.word_degree(&w.0[..start]));
        self.pi(n, &w.0[start..start + len]).iter().map(|(g, c)| (w.replace(start, len, g), &e * c)).collect()
    }

    /// The tensor differential `Σ_i (-1)^{ε_i} [..d a_i..]`, `ε_i` the degree
    /// of the letters before `a_i`.
    pub fn d_word(&self, w: &BarWord) -> Vector<BarWord> {
        let mut out = Vector::zero();
        for i in 0..w.len() {
            let e = Scalar::sign(self.word_degree(&w.0[..i]));
            for (g, c) in &self.d(&w.0[i]) {
                out.add_term(w.replace(i, 1, g), &e * c);
            }
        }
        out
    }

    /// Words of length `len` in the generators with degree at most `deg_cap`.
    pub fn words(&self, len: usize, deg_cap: Option<i64>) -> Vec<BarWord> {
        if len == 0 {
            return vec![BarWord::empty()];
        }
        let ids: Vec<&String> = self.generators.iter().map(|(g, _)| g).collect();
        (0..len)
            .map(|_| ids.iter().copied())
            .multi_cartesian_product()
            .map(|v| BarWord(v.into_iter().cloned().collect()))
            .filter(|w| deg_cap.is_none_or(|c| self.word_degree(&w.0) <= c))
            .collect()
    }
}

/// Checks `d² = 0` on generators and, for `-1 <= n <= arity_cap - 1`,
///
/// `dπ_{n+1} + (-1)^n π_{n+1} d = Σ_{m=0}^{n} Σ_{t=1}^{m+2} (-1)^{t(n-m+1)+n+1}
/// π_m(1^{⊗(t-1)} ⊗ π_{n-m} ⊗ 1^{⊗(m-t+2)})`
///
/// on every generator word of length `n + 3` and degree at most `deg_cap`.
pub fn check_ainf(a: &AInfAlgebra, arity_cap: usize, deg_cap: Option<i64>) -> Report {
    let mut r = Report::new();
    for (g, _) in a.generators() {
        r.check("d∘d = 0", || g.clone(), &a.d(g).map_linear(|h| a.d(h)));
    }
    let apply_pi = |n: usize, v: &Vector<BarWord>, start: usize| v.map_linear(|w| a.pi_at(n, w, start));
    let d_gen = |v: &Vector<BarWord>| v.map_linear(|w| a.d_word(w));
    for n in -1..arity_cap as i64 {
        let top = (n + 1) as usize;
        for w in a.words(top + 2, deg_cap) {
            let e = Vector::basis(w.clone());
            let mut v = d_gen(&apply_pi(top, &e, 0));
            v.axpy(&Scalar::sign(n), &apply_pi(top, &d_gen(&e), 0));
            for m in 0..=n {
                for t in 1..=m + 2 {
                    let inner = apply_pi((n - m) as usize, &e, (t - 1) as usize);
                    let outer = apply_pi(m as usize, &inner, 0);
                    v.axpy(&Scalar::from(-sign(t * (n - m + 1) + n + 1)), &outer);
                }
            }
            r.check(&format!("Stasheff relation n={n}"), || w.to_string(), &v);
        }
    }
    r
}
