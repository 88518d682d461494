//! JSON forms of colored and bigraded modules and of sparse map tables.
//!
//! Coefficients are decimal strings. Output is canonical: object keys are
//! sorted, components are ordered by grading and map entries by key, so a
//! canonical document survives a parse/print round trip byte for byte.

use coeff_core::{Error, Ring, Scalar, Vector};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use serde_path_to_error::Segment;

use crate::{Bidegree, BigradedModule, ColoredModule, Tricolor};

/// One `(from, to, c)` entry of a sparse map table.
#[derive(Clone, Debug, Deserialize, Serialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct MapEntry {
    pub from: String,
    pub to: String,
    pub c: String,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct BigradedDoc {
    components: Vec<BiComponent>,
    #[serde(default)]
    d: Vec<MapEntry>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct BiComponent {
    n: i64,
    m: i64,
    basis: Vec<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ColoredDoc {
    components: Vec<ColoredComponent>,
    #[serde(default)]
    d: Vec<MapEntry>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ColoredComponent {
    s: i64,
    t: i64,
    m: i64,
    basis: Vec<String>,
}

/// JSON pointer of a deserialization path.
fn pointer(path: &serde_path_to_error::Path) -> String {
    let mut out = String::new();
    for seg in path.iter() {
        match seg {
            Segment::Seq { index } => out.push_str(&format!("/{index}")),
            Segment::Map { key } => out.push_str(&format!("/{}", key.replace('~', "~0").replace('/', "~1"))),
            Segment::Enum { variant } => out.push_str(&format!("/{variant}")),
            Segment::Unknown => out.push_str("/?"),
        }
    }
    if out.is_empty() {
        out.push('/');
    }
    out
}

/// Deserializes `T`, reporting failures with a JSON pointer.
pub fn from_str<T: DeserializeOwned>(text: &str) -> Result<T, Error> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| Error::input(pointer(e.path()), e.inner().to_string()))
}

/// Deserializes `T` from an already parsed value.
pub fn from_value<T: DeserializeOwned>(v: Value) -> Result<T, Error> {
    serde_path_to_error::deserialize(v).map_err(|e| Error::input(pointer(e.path()), e.inner().to_string()))
}

/// Parses a coefficient, attaching `at` as pointer on failure.
pub fn scalar(ring: Ring, text: &str, at: &str) -> Result<Scalar, Error> {
    ring.parse_scalar(text).map_err(|_| Error::input(at, format!("bad coefficient {text:?} for {ring}")))
}

/// Groups map entries by source key; `at` prefixes error pointers.
pub fn parse_entries(entries: &[MapEntry], ring: Ring, at: &str) -> Result<Vec<(String, Vector<String>)>, Error> {
    let mut out: Vec<(String, Vector<String>)> = Vec::new();
    for (i, e) in entries.iter().enumerate() {
        let c = scalar(ring, &e.c, &format!("{at}/{i}/c"))?;
        match out.last_mut() {
            Some((k, v)) if *k == e.from => v.add_term(e.to.clone(), c),
            _ => out.push((e.from.clone(), Vector::term(e.to.clone(), c))),
        }
    }
    Ok(out)
}

/// Canonical entry table of a column map.
pub fn entries_json<'a>(cols: impl IntoIterator<Item = (&'a String, &'a Vector<String>)>) -> Value {
    let mut rows: Vec<(String, String, String)> = Vec::new();
    for (k, v) in cols {
        for (l, c) in v {
            rows.push((k.clone(), l.clone(), c.to_string()));
        }
    }
    rows.sort();
    Value::Array(rows.into_iter().map(|(f, t, c)| json!({"from": f, "to": t, "c": c})).collect())
}

fn locate(e: Error, entries: &[MapEntry], at: &str) -> Error {
    match e {
        Error::UnknownKey(k) => {
            let i = entries.iter().position(|x| x.from == k || x.to == k).unwrap_or(0);
            Error::input(format!("{at}/{i}"), format!("unknown basis key {k}"))
        }
        other => other,
    }
}

pub fn parse_bigraded(text: &str, ring: Ring) -> Result<BigradedModule<String>, Error> {
    bigraded_from_value(from_str(text)?, ring)
}

pub fn bigraded_from_value(v: Value, ring: Ring) -> Result<BigradedModule<String>, Error> {
    let doc: BigradedDoc = from_value(v)?;
    let comps = doc.components.into_iter().map(|c| (Bidegree::new(c.n, c.m), c.basis)).collect();
    let d = parse_entries(&doc.d, ring, "/d")?;
    BigradedModule::new(comps, d).map_err(|e| locate(e, &doc.d, "/d"))
}

pub fn bigraded_to_json(x: &BigradedModule<String>) -> Value {
    let comps: Vec<Value> = x
        .components()
        .iter()
        .map(|(b, keys)| json!({"n": b.n, "m": b.m, "basis": keys}))
        .collect();
    json!({"components": comps, "d": entries_json(x.differential())})
}

pub fn parse_colored(text: &str, ring: Ring) -> Result<ColoredModule<String>, Error> {
    let doc: ColoredDoc = from_str(text)?;
    let comps = doc.components.into_iter().map(|c| (Tricolor { s: c.s, t: c.t, m: c.m }, c.basis)).collect();
    let d = parse_entries(&doc.d, ring, "/d")?;
    ColoredModule::new(comps, d).map_err(|e| locate(e, &doc.d, "/d"))
}

pub fn colored_to_json(x: &ColoredModule<String>) -> Value {
    let comps: Vec<Value> = x
        .components()
        .iter()
        .map(|(c, keys)| json!({"s": c.s, "t": c.t, "m": c.m, "basis": keys}))
        .collect();
    json!({"components": comps, "d": entries_json(x.differential())})
}

/// Pretty, key-sorted rendering with a trailing newline.
pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values always serialize");
    s.push('\n');
    s
}
