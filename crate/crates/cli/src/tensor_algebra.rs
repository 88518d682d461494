use std::path::Path;

use ainf_bar::json::{ainf_to_json, bar_to_json, parse_ainf};
use ainf_bar::{bar_differential, check_ainf, check_bar_coalgebra, classic_bar_compare, AInfAlgebra, BarWord, TensorAlgebraModule};
use coeff_core::Ring;
use colored_core::Report;
use infty_face_modules::{check_faces, dinfty_sum, total_bar_differential};
use serde_json::{json, Map};

use crate::args::Settings;
use crate::input::{config, read, Failure, InFile};
use crate::output::Outcome;

pub fn load(file: &Path, ring: Ring) -> Result<AInfAlgebra, Failure> {
    parse_ainf(&read(file)?, ring).in_file(file)
}

pub fn validate(file: &Path, s: &Settings, ring: Ring) -> Result<Outcome, Failure> {
    let a = load(file, ring)?;
    let report = check_ainf(&a, s.arity_cap(), Some(s.deg_cap()));
    let mut fields = Map::new();
    fields.insert("algebra".into(), ainf_to_json(&a));
    fields.insert("arity_cap".into(), json!(s.arity_cap()));
    fields.insert("deg_cap".into(), json!(s.deg_cap()));
    Ok(Outcome::checked("ainf validate", &report, true, fields))
}

/// The bar checks on every word within the caps: `T(A)` has valid faces,
/// `∂̄` agrees with the total differential of `T(A)` and with `D∞` of the
/// primed structure, and `(B(A), ∂̄, Δ)` is a dg coalgebra. For a DGA the
/// classical bar construction is compared as well.
pub fn bar_report(a: &AInfAlgebra, words: &[BarWord], word_cap: usize, deg_cap: i64) -> Result<Report, coeff_core::Error> {
    let t = TensorAlgebraModule::new(a, word_cap, Some(deg_cap))?;
    let tp = t.clone().primed();
    let mut r = check_faces(&t);
    for w in words {
        let d = bar_differential(a, w);
        r.check("∂̄ = total differential of T(A)", || w.to_string(), &(&d - &total_bar_differential(&t, w)));
        r.check("∂̄ = D∞ of the primed structure", || w.to_string(), &(&d - &dinfty_sum(&tp, w)));
    }
    r.merge(check_bar_coalgebra(a, words));
    if a.max_arity().is_none_or(|n| n == 0) {
        r.merge(classic_bar_compare(a, words)?);
    }
    Ok(r)
}

pub fn build(file: &Path, s: &Settings, ring: Ring) -> Result<Outcome, Failure> {
    let a = load(file, ring)?;
    let words: Vec<BarWord> = (0..=s.word_cap()).flat_map(|n| a.words(n, Some(s.deg_cap()))).collect();
    let report = config(bar_report(&a, &words, s.word_cap(), s.deg_cap()))?;
    let bar = bar_to_json(&a, &words);
    let mut fields = Map::new();
    for key in ["basis", "d", "coproduct"] {
        fields.insert(key.into(), bar[key].clone());
    }
    fields.insert("word_cap".into(), json!(s.word_cap()));
    fields.insert("deg_cap".into(), json!(s.deg_cap()));
    Ok(Outcome::checked("bar build", &report, true, fields))
}
