//! JSON form of face and map families:
//! `{"faces":[{"n":..,"tuple":[..],"map":[{"from":..,"to":..,"c":".."}]}]}`.
//! An empty `tuple` denotes the unit `1_n` and is only accepted for map
//! families.

use coeff_core::{Error, Ring, Vector};
use colored_core::json::{entries_json, from_value, parse_entries, MapEntry};
use colored_core::BigradedModule;
use koszul_dual::WedgeTuple;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::face_module::{ExplicitFaceModule, MapFamily};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FamilyDoc {
    faces: Vec<FamilyEntry>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FamilyEntry {
    n: i64,
    tuple: Vec<i64>,
    #[serde(default)]
    map: Vec<MapEntry>,
}

/// Parses a family; repeated `(n, tuple)` entries add up.
pub fn family_from_value(v: Value, ring: Ring, allow_units: bool) -> Result<MapFamily<String, String>, Error> {
    let doc: FamilyDoc = from_value(v)?;
    let mut out = MapFamily::new();
    for (i, e) in doc.faces.into_iter().enumerate() {
        let at = format!("/faces/{i}");
        let w = WedgeTuple::new(e.n, e.tuple).map_err(|err| Error::input(format!("{at}/tuple"), err.to_string()))?;
        if w.is_unit() && !allow_units {
            return Err(Error::input(format!("{at}/tuple"), "the empty tuple is not a face"));
        }
        let cols: &mut coeff_core::Columns<String, String> = out.entry(w).or_default();
        for (src, v) in parse_entries(&e.map, ring, &format!("{at}/map"))? {
            cols.entry(src).or_insert_with(Vector::zero).axpy(&coeff_core::Scalar::one(), &v);
        }
    }
    for cols in out.values_mut() {
        cols.retain(|_, v| !v.is_zero());
    }
    Ok(out)
}

pub fn parse_family(text: &str, ring: Ring, allow_units: bool) -> Result<MapFamily<String, String>, Error> {
    family_from_value(colored_core::json::from_str(text)?, ring, allow_units)
}

/// Canonical form: entries in tuple order, empty maps omitted.
pub fn family_to_json(f: &MapFamily<String, String>) -> Value {
    let faces: Vec<Value> = f
        .iter()
        .filter(|(_, c)| c.values().any(|v| !v.is_zero()))
        .map(|(w, c)| json!({"n": w.n(), "tuple": w.indices(), "map": entries_json(c)}))
        .collect();
    json!({ "faces": faces })
}

/// A module document together with a face family document.
pub fn parse_face_module(module: &str, faces: &str, ring: Ring) -> Result<ExplicitFaceModule<String>, Error> {
    let m: BigradedModule<String> = colored_core::json::parse_bigraded(module, ring)?;
    ExplicitFaceModule::new(m, parse_family(faces, ring, false)?)
}
