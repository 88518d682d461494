//! Transfer input document: the source module, its face family, the
//! target module and the three SDR map tables, all embedded:
//! `{"x":{module},"faces":{family},"y":{module},"eta":[..],"xi":[..],"h":[..]}`.

use coeff_core::{Columns, Error, Ring, Vector};
use colored_core::json::{bigraded_from_value, bigraded_to_json, entries_json, from_str, parse_entries, MapEntry};
use colored_core::BigradedModule;
use infty_face_modules::json::{family_from_value, family_to_json};
use infty_face_modules::ExplicitFaceModule;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::sdr::SdrData;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TransferDoc {
    x: Value,
    faces: Value,
    y: Value,
    #[serde(default)]
    eta: Vec<MapEntry>,
    #[serde(default)]
    xi: Vec<MapEntry>,
    #[serde(default)]
    h: Vec<MapEntry>,
}

/// Parsed transfer input.
#[derive(Debug)]
pub struct TransferInput {
    pub x: ExplicitFaceModule<String>,
    pub y: BigradedModule<String>,
    pub sdr: SdrData<String, String>,
}

fn prefix(e: Error, at: &str) -> Error {
    match e {
        Error::Input { pointer, message } => Error::Input { pointer: format!("{at}{pointer}"), message },
        other => other,
    }
}

fn columns(entries: &[MapEntry], ring: Ring, at: &str) -> Result<Columns<String, String>, Error> {
    let mut out: Columns<String, String> = Columns::new();
    for (k, v) in parse_entries(entries, ring, at)? {
        let col = out.entry(k).or_insert_with(Vector::zero);
        *col = &*col + &v;
    }
    Ok(out)
}

pub fn parse_transfer_input(text: &str, ring: Ring) -> Result<TransferInput, Error> {
    let doc: TransferDoc = from_str(text)?;
    let xm = bigraded_from_value(doc.x, ring).map_err(|e| prefix(e, "/x"))?;
    let faces = family_from_value(doc.faces, ring, false).map_err(|e| prefix(e, "/faces"))?;
    let x = ExplicitFaceModule::new(xm, faces)?;
    let y = bigraded_from_value(doc.y, ring).map_err(|e| prefix(e, "/y"))?;
    let sdr = SdrData {
        eta: columns(&doc.eta, ring, "/eta")?,
        xi: columns(&doc.xi, ring, "/xi")?,
        h: columns(&doc.h, ring, "/h")?,
    };
    Ok(TransferInput { x, y, sdr })
}

pub fn transfer_input_to_json(x: &ExplicitFaceModule<String>, y: &BigradedModule<String>, s: &SdrData<String, String>) -> Value {
    json!({
        "x": bigraded_to_json(x.module()),
        "faces": family_to_json(x.faces()),
        "y": bigraded_to_json(y),
        "eta": entries_json(&s.eta),
        "xi": entries_json(&s.xi),
        "h": entries_json(&s.h),
    })
}
