use std::collections::BTreeSet;
use std::path::Path;

use coeff_core::{Error, Ring, Scalar, Vector};
use colored_core::json::{from_str, scalar};
use colored_core::Report;
use koszul_dual::{enumerate_splits, enumerate_splits_brute, hat, permutations, wedge_tuples, WedgeTuple};
use omega_finf::{finf_d, finf_d_word, OmegaWord};
use serde::Deserialize;
use serde_json::{json, Map, Value};

use crate::input::{read, Failure, InFile};
use crate::output::Outcome;

type Word = OmegaWord<WedgeTuple>;

fn pass_if(r: &mut Report, ok: bool, relation: &str, location: impl FnOnce() -> String) {
    if ok {
        r.checks += 1;
    } else {
        r.fail(relation, location(), "does not hold".into());
    }
}

/// `d² = 0` on every generator of ambient at most `n_max`; the shuffle
/// enumeration of splits against brute force and the ordered-blocks
/// equivalence for `k <= 4`; the printed `k = 2, 3` expansions.
pub fn finf_report(n_max: i64) -> Report {
    let mut r = Report::new();
    for w in wedge_tuples(n_max) {
        let dd = finf_d(&w).map_linear(finf_d_word);
        r.check("d∘d = 0", || w.to_string(), &dd);
    }
    let inc = |b: &[i64]| b.windows(2).all(|x| x[0] < x[1]);
    for w in wedge_tuples(n_max).into_iter().filter(|w| w.k() <= 4) {
        let key = |s: koszul_dual::Split| (s.sigma, s.m, s.sign, s.left, s.right);
        let fast: BTreeSet<_> = enumerate_splits(&w).into_iter().map(key).collect();
        let slow: BTreeSet<_> = enumerate_splits_brute(&w).into_iter().map(key).collect();
        pass_if(&mut r, fast == slow, "shuffle splits = all ordered splits", || w.to_string());
        for sigma in permutations(w.k()) {
            let p: Vec<i64> = sigma.iter().map(|&j| w.indices()[j]).collect();
            let h = hat(&sigma, w.indices());
            for m in 1..w.k() {
                let ok = (inc(&p[..m]) && inc(&p[m..])) == (inc(&h[..m]) && inc(&h[m..]));
                pass_if(&mut r, ok, "ordered σ-blocks ⇔ ordered hat blocks", || format!("{w} σ={sigma:?} m={m}"));
            }
        }
    }
    r.merge(printed_form_report(n_max));
    r
}

fn g(n: i64, idx: &[i64]) -> WedgeTuple {
    WedgeTuple::new(n, idx.to_vec()).expect("printed tuples are valid")
}

/// `∂_L ∂_R` with `R` of ambient `n` and `L` of ambient `n - |R|`.
fn pair(n: i64, left: &[i64], right: &[i64]) -> Word {
    let r = g(n, right);
    OmegaWord::from_wedges(vec![g(n - right.len() as i64, left), r]).expect("printed pairs compose")
}

/// The printed low-length differentials:
/// `d∂_(i,j) = ∂_(j-1)∂_(i) − ∂_(i)∂_(j)` and the six-term
/// `d∂_(i1,i2,i3) = −∂_(i1)∂_(i2,i3) − ∂_(i1,i2)∂_(i3) − ∂_(i3-2)∂_(i1,i2)
///  − ∂_(i2-1,i3-1)∂_(i1) + ∂_(i2-1)∂_(i1,i3) + ∂_(i1,i3-1)∂_(i2)`.
pub fn printed_form_report(n_max: i64) -> Report {
    let mut r = Report::new();
    let one = Scalar::one();
    let neg = Scalar::from(-1);
    for w in wedge_tuples(n_max) {
        let n = w.n();
        let expect: Vector<Word> = match *w.indices() {
            [i, j] => [(pair(n, &[j - 1], &[i]), one.clone()), (pair(n, &[i], &[j]), neg.clone())].into_iter().collect(),
            [a, b, c] => [
                (pair(n, &[a], &[b, c]), neg.clone()),
                (pair(n, &[a, b], &[c]), neg.clone()),
                (pair(n, &[c - 2], &[a, b]), neg.clone()),
                (pair(n, &[b - 1, c - 1], &[a]), neg.clone()),
                (pair(n, &[b - 1], &[a, c]), one.clone()),
                (pair(n, &[a, c - 1], &[b]), one.clone()),
            ]
            .into_iter()
            .collect(),
            _ => continue,
        };
        let name = if w.k() == 2 { "printed form, k=2" } else { "printed form, k=3" };
        r.check(name, || w.to_string(), &(&finf_d(&w) - &expect));
    }
    r
}

/// `{"expansions": [{"generator", "terms": [{"word", "c"}]}]}` for every
/// generator of ambient at most `n_max`.
pub fn golden_expansions(n_max: i64) -> Value {
    let rows: Vec<Value> = wedge_tuples(n_max)
        .iter()
        .map(|w| {
            let terms: Vec<Value> = finf_d(w).iter().map(|(x, c)| json!({"word": x.to_string(), "c": c.to_string()})).collect();
            json!({"generator": w.to_string(), "terms": terms})
        })
        .collect();
    Value::Array(rows)
}

#[derive(Deserialize)]
struct GoldenDoc {
    expansions: Vec<GoldenEntry>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GoldenEntry {
    generator: String,
    terms: Vec<GoldenTerm>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GoldenTerm {
    word: String,
    c: String,
}

/// Parses a golden expansion document.
pub fn parse_golden(text: &str, ring: Ring) -> Result<Vec<(WedgeTuple, Vector<Word>)>, Error> {
    let doc: GoldenDoc = from_str(text)?;
    let mut out = Vec::new();
    for (i, e) in doc.expansions.into_iter().enumerate() {
        let at = format!("/expansions/{i}");
        let w: WedgeTuple = e.generator.parse().map_err(|err: Error| Error::input(format!("{at}/generator"), err.to_string()))?;
        let mut v = Vector::zero();
        for (t, term) in e.terms.iter().enumerate() {
            let x: Word = term.word.parse().map_err(|err: Error| Error::input(format!("{at}/terms/{t}/word"), err.to_string()))?;
            v.add_term(x, scalar(ring, &term.c, &format!("{at}/terms/{t}/c"))?);
        }
        out.push((w, v));
    }
    Ok(out)
}

pub fn verify(n_max: i64, golden: Option<&Path>, emit: bool, ring: Ring) -> Result<Outcome, Failure> {
    let mut report = finf_report(n_max);
    let mut fields = Map::new();
    if let Some(path) = golden {
        let entries = parse_golden(&read(path)?, ring).in_file(path)?;
        let mut g = Report::new();
        for (w, listed) in entries {
            // The discrepancy is listed − computed.
            g.check("golden expansion", || w.to_string(), &(&listed - &finf_d(&w)));
        }
        fields.insert("golden_checks".into(), json!(g.checks));
        report.merge(g);
    }
    if emit {
        fields.insert("expansions".into(), golden_expansions(n_max));
    }
    fields.insert("n_max".into(), json!(n_max));
    Ok(Outcome::checked("finf verify", &report, true, fields))
}
