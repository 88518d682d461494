use std::path::Path;

use ainf_bar::TensorAlgebraModule;
use coeff_core::{Error, Ring};
use colored_core::json::bigraded_to_json;
use colored_core::Report;
use infty_face_modules::json::{family_to_json, parse_face_module};
use infty_face_modules::{
    check_faces, check_total_differential, materialize, naive_realization_oracle,
    ExplicitFaceModule, TensorFaceModule,
};
use serde_json::{json, Map};
use transfer::json::parse_transfer_input;
use transfer::{cone_extension, random_small_module, verify_transfer, Transfer};

use crate::args::Settings;
use crate::input::{config, read, Failure, InFile};
use crate::output::{ranks_json, Outcome};
use crate::tensor_algebra;

/// A module with faces, up to level `n_max`: `file` is a module document
/// when `faces` is given, otherwise an A∞-algebra whose `T(A)` is taken
/// with words of length at most `n_max` and no degree cap.
fn load_module(file: &Path, faces: Option<&Path>, n_max: i64, ring: Ring) -> Result<ExplicitFaceModule<String>, Failure> {
    match faces {
        Some(f) => {
            let module = read(file)?;
            let family = read(f)?;
            parse_face_module(&module, &family, ring).in_file(file)
        }
        None => {
            let a = tensor_algebra::load(file, ring)?;
            let t = TensorAlgebraModule::new(&a, n_max.max(0) as usize, None).in_file(file)?;
            config(materialize(&t).and_then(|m| m.relabel(|w| w.to_string())))
        }
    }
}

pub fn realize(file: &Path, faces: Option<&Path>, oracle: bool, s: &Settings, ring: Ring) -> Result<Outcome, Failure> {
    let n_max = s.n_max.unwrap_or(3);
    let x = load_module(file, faces, n_max, ring)?;
    let mut report = check_faces(&x);
    report.merge(check_total_differential(&x));
    let mut fields = Map::new();
    fields.insert("n_max".into(), json!(n_max));
    let mut extra_ok = true;
    if oracle {
        let rep = config(naive_realization_oracle(&x, n_max, ring))?;
        report.merge(rep.report);
        extra_ok = rep.d_stable && rep.isomorphic;
        fields.insert("isomorphic".into(), json!(rep.isomorphic));
        fields.insert("d_stable".into(), json!(rep.d_stable));
        fields.insert("dimension".into(), json!(rep.dimension));
        fields.insert("relations".into(), json!(rep.relations));
        fields.insert("quotient_ranks".into(), ranks_json(&rep.quotient_ranks));
        fields.insert("total_ranks".into(), ranks_json(&rep.total_ranks));
    } else {
        let truncated: std::collections::BTreeMap<i64, usize> = x
            .module()
            .components()
            .iter()
            .filter(|(b, _)| b.n <= n_max)
            .fold(Default::default(), |mut acc, (b, ks)| {
                *acc.entry(b.total()).or_default() += ks.len();
                acc
            });
        fields.insert("total_ranks".into(), ranks_json(&truncated));
    }
    Ok(Outcome::checked("realize", &report, extra_ok, fields))
}

pub fn transfer(file: &Path, faces: Option<&Path>, cone: bool, s: &Settings, ring: Ring) -> Result<Outcome, Failure> {
    let (x, y, sdr) = if cone {
        let y = load_module(file, faces, s.n_max.unwrap_or(3), ring)?;
        let (x, sdr) = cone_extension(&y, s.seed);
        (x, y.module().clone(), sdr)
    } else {
        let input = parse_transfer_input(&read(file)?, ring).in_file(file)?;
        (input.x, input.y, input.sdr)
    };
    let check = verify_transfer(&x, &y, &sdr).in_file(file)?;
    let mut fields = Map::new();
    fields.insert("nontrivial".into(), json!(check.nontrivial));
    if check.report.ok() {
        let t = Transfer::new(&x, &y, &sdr);
        let transferred = config(materialize(&t))?;
        fields.insert("target".into(), bigraded_to_json(transferred.module()));
        fields.insert("faces".into(), family_to_json(transferred.faces()));
    }
    fields.insert("seed".into(), json!(s.seed));
    Ok(Outcome::checked("transfer", &check.report, true, fields))
}

pub fn tensor_check(
    left: Option<&Path>,
    left_faces: Option<&Path>,
    right: Option<&Path>,
    right_faces: Option<&Path>,
    s: &Settings,
    ring: Ring,
) -> Result<Outcome, Failure> {
    let n_max = s.n_max.unwrap_or(4);
    let mut report = Report::new();
    let mut fields = Map::new();
    match (left, right) {
        (Some(l), Some(r)) => {
            let a = load_module(l, left_faces, n_max, ring)?;
            let b = load_module(r, right_faces, n_max, ring)?;
            report.merge(check_faces(&TensorFaceModule::new(&a, &b, n_max)));
            fields.insert("instances".into(), json!(1));
        }
        _ => {
            if ring != Ring::Rat && ring != Ring::Int {
                return Err(Failure::flag("--coeff", Error::Unsupported("generated instances use integer coefficients".into())));
            }
            let count = s.count.unwrap_or(20);
            for i in 0..count as u64 {
                let seed = s.seed.wrapping_add(2 * i);
                let a = random_small_module(seed, n_max, 2);
                let b = random_small_module(seed + 1, n_max, 2);
                let mut r = check_faces(&TensorFaceModule::new(&a, &b, n_max));
                for v in &mut r.violations {
                    v.location = format!("instance {i}: {}", v.location);
                }
                report.merge(r);
            }
            fields.insert("instances".into(), json!(count));
            fields.insert("seed".into(), json!(s.seed));
        }
    }
    fields.insert("n_max".into(), json!(n_max));
    Ok(Outcome::checked("tensor check", &report, true, fields))
}
