//! A∞ JSON: `{"generators":[{"id":"x","deg":1}],"d":[{"from","to","c"}],
//! "pi":[{"n":0,"entries":[{"from":["x","x"],"to":[{"gen":"y","c":"1"}]}]}]}`,
//! and the bar complex output document.

use coeff_core::{Error, Ring, Tensor, Vector};
use colored_core::json::{entries_json, from_str, parse_entries, scalar, MapEntry};
use serde::Deserialize;
use serde_json::{json, Value};

use crate::algebra::AInfAlgebra;
use crate::bar::{bar_coproduct, bar_differential, total_degree};
use crate::word::BarWord;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Doc {
    generators: Vec<Generator>,
    #[serde(default)]
    d: Vec<MapEntry>,
    #[serde(default)]
    pi: Vec<PiBlock>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Generator {
    id: String,
    deg: i64,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PiBlock {
    n: usize,
    #[serde(default)]
    entries: Vec<PiEntry>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PiEntry {
    from: Vec<String>,
    to: Vec<Term>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Term {
    gen: String,
    c: String,
}

pub fn parse_ainf(text: &str, ring: Ring) -> Result<AInfAlgebra, Error> {
    let doc: Doc = from_str(text)?;
    let gens = doc.generators.into_iter().map(|g| (g.id, g.deg)).collect();
    let d = parse_entries(&doc.d, ring, "/d")?;
    let mut pi = Vec::new();
    let mut index = Vec::new();
    for (b, block) in doc.pi.into_iter().enumerate() {
        for (e, entry) in block.entries.into_iter().enumerate() {
            let mut v = Vector::zero();
            for (t, term) in entry.to.iter().enumerate() {
                v.add_term(term.gen.clone(), scalar(ring, &term.c, &format!("/pi/{b}/entries/{e}/to/{t}/c"))?);
            }
            pi.push((block.n, entry.from, v));
            index.push(format!("/pi/{b}/entries/{e}"));
        }
    }
    AInfAlgebra::new(gens, d, pi).map_err(|err| match err {
        Error::Input { pointer, message } => {
            let pointer = match pointer.strip_prefix("/pi/").and_then(|i| i.parse::<usize>().ok()) {
                Some(i) => index[i].clone(),
                None => pointer,
            };
            Error::Input { pointer, message }
        }
        other => other,
    })
}

/// Canonical form of an algebra.
pub fn ainf_to_json(a: &AInfAlgebra) -> Value {
    let gens: Vec<Value> = a.generators().iter().map(|(g, d)| json!({"id": g, "deg": d})).collect();
    let pi: Vec<Value> = a
        .pi_table()
        .iter()
        .map(|(n, t)| {
            let entries: Vec<Value> = t
                .iter()
                .map(|(args, v)| json!({"from": args, "to": v.iter().map(|(g, c)| json!({"gen": g, "c": c.to_string()})).collect::<Vec<_>>()}))
                .collect();
            json!({"n": n, "entries": entries})
        })
        .collect();
    json!({"generators": gens, "d": entries_json(a.differential()), "pi": pi})
}

/// Bar complex on the given words: basis with bidegrees, the differential
/// table and the coproduct table, all in word order.
pub fn bar_to_json<'w>(a: &AInfAlgebra, words: impl IntoIterator<Item = &'w BarWord>) -> Value {
    let mut basis = Vec::new();
    let mut d = Vec::new();
    let mut delta = Vec::new();
    for w in words {
        basis.push(json!({"word": w.to_string(), "n": w.len(), "deg": a.word_degree(&w.0), "total": total_degree(a, w)}));
        for (x, c) in &bar_differential(a, w) {
            d.push(json!({"from": w.to_string(), "to": x.to_string(), "c": c.to_string()}));
        }
        for (Tensor(l, r), c) in &bar_coproduct(a, w) {
            delta.push(json!({"from": w.to_string(), "left": l.to_string(), "right": r.to_string(), "c": c.to_string()}));
        }
    }
    json!({"basis": basis, "d": d, "coproduct": delta})
}
