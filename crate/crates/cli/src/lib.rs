//! Command-line front end. Every command returns an [`Outcome`]: an exit
//! code (0 all checks pass, 1 some check fails, 2 input error) and a JSON
//! document with sorted keys, so identical inputs give identical bytes.

mod args;
mod faces;
mod finf;
mod input;
mod koszul;
mod output;
mod tensor_algebra;

pub use args::{AinfCommand, BarCommand, Cli, Command, FinfCommand, KoszulCommand, Settings, TensorCommand};
pub use finf::{finf_report, golden_expansions, parse_golden, printed_form_report};
pub use input::Failure;
pub use koszul::koszul_report;
pub use output::{render, Outcome};

use coeff_core::Ring;

/// Runs a parsed command line.
pub fn run(cli: &Cli) -> Outcome {
    let s = &cli.settings;
    let ring = match Ring::parse(&s.coeff) {
        Ok(r) => r,
        Err(e) => return Outcome::failure(Failure::flag("--coeff", e)),
    };
    if [s.word_cap, s.deg_cap, s.arity_cap, s.count].contains(&Some(0)) {
        return Outcome::failure(Failure::flag("caps", coeff_core::Error::input("caps", "caps must be positive")));
    }
    let result = match &cli.command {
        Command::Finf { command: FinfCommand::Verify { golden, emit_golden } } => {
            finf::verify(s.n_max.unwrap_or(6), golden.as_deref(), *emit_golden, ring)
        }
        Command::Koszul { command: KoszulCommand::Check } => koszul::check(s.n_max.unwrap_or(5), ring),
        Command::Ainf { command: AinfCommand::Validate { file } } => tensor_algebra::validate(file, s, ring),
        Command::Bar { command: BarCommand::Build { file } } => tensor_algebra::build(file, s, ring),
        Command::Realize { file, faces, oracle } => faces::realize(file, faces.as_deref(), *oracle, s, ring),
        Command::Transfer { file, faces, cone } => faces::transfer(file, faces.as_deref(), *cone, s, ring),
        Command::Tensor { command: TensorCommand::Check { left, left_faces, right, right_faces } } => {
            faces::tensor_check(left.as_deref(), left_faces.as_deref(), right.as_deref(), right_faces.as_deref(), s, ring)
        }
    };
    match result {
        Ok(o) => o,
        Err(f) => Outcome::failure(f),
    }
}
