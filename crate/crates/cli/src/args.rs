use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Parser, Debug)]
#[command(name = "finf", version, about = "Checks for modules with ∞-simplicial faces, A∞-algebras and their bar constructions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub settings: Settings,
}

/// Flags shared by every command.
#[derive(Args, Debug, Clone)]
pub struct Settings {
    /// Largest simplicial level; each command has its own default.
    #[arg(long, global = true)]
    pub n_max: Option<i64>,
    /// Longest bar word.
    #[arg(long, global = true)]
    pub word_cap: Option<usize>,
    /// Largest internal degree of a bar word.
    #[arg(long, global = true)]
    pub deg_cap: Option<usize>,
    /// Largest `π_n` index checked is `arity_cap - 1`.
    #[arg(long, global = true)]
    pub arity_cap: Option<usize>,
    /// Coefficients: int, rat or mod:p.
    #[arg(long, global = true, default_value = "rat")]
    pub coeff: String,
    /// Seed for generated instances.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Number of generated instances.
    #[arg(long, global = true)]
    pub count: Option<usize>,
    /// Write the JSON result here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

impl Settings {
    pub fn word_cap(&self) -> usize {
        self.word_cap.unwrap_or(5)
    }
    pub fn deg_cap(&self) -> i64 {
        self.deg_cap.unwrap_or(8) as i64
    }
    pub fn arity_cap(&self) -> usize {
        self.arity_cap.unwrap_or(4)
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// The free algebra F∞ and its differential.
    Finf {
        #[command(subcommand)]
        command: FinfCommand,
    },
    /// The Koszul dual coalgebra of the face algebra.
    Koszul {
        #[command(subcommand)]
        command: KoszulCommand,
    },
    /// A∞-algebras.
    Ainf {
        #[command(subcommand)]
        command: AinfCommand,
    },
    /// Bar constructions of A∞-algebras.
    Bar {
        #[command(subcommand)]
        command: BarCommand,
    },
    /// Total complex of a face module, optionally against the quotient
    /// construction. FILE is an A∞-algebra, or a module when --faces is given.
    Realize {
        file: PathBuf,
        /// Face family document for a module FILE.
        #[arg(long)]
        faces: Option<PathBuf>,
        /// Also build the quotient construction and compare ranks.
        #[arg(long)]
        oracle: bool,
    },
    /// Transfers faces along SDR-data. FILE is an SDR document; with --cone
    /// it is an A∞-algebra or a module (with --faces) extended by a random
    /// acyclic cone.
    Transfer {
        file: PathBuf,
        /// Face family document for a module FILE (with --cone).
        #[arg(long)]
        faces: Option<PathBuf>,
        /// Extend FILE by a random acyclic cone seeded by --seed and
        /// transfer back.
        #[arg(long)]
        cone: bool,
    },
    /// Tensor products of face modules.
    Tensor {
        #[command(subcommand)]
        command: TensorCommand,
    },
}

#[derive(Subcommand, Debug)]
pub enum FinfCommand {
    /// d² = 0 on generators, split enumeration, ordered blocks, printed low
    /// cases, and optionally a golden expansion file.
    Verify {
        /// Compare every generator expansion with this file.
        #[arg(long)]
        golden: Option<PathBuf>,
        /// Include the expansion of every generator in the output; the
        /// result is itself a golden file.
        #[arg(long)]
        emit_golden: bool,
    },
}

#[derive(Subcommand, Debug)]
pub enum KoszulCommand {
    /// Intersection ranks, wedge change of basis, coalgebra laws and the
    /// twisting cochain.
    Check,
}

#[derive(Subcommand, Debug)]
pub enum AinfCommand {
    /// d² = 0 and the Stasheff relations within the caps.
    Validate { file: PathBuf },
}

#[derive(Subcommand, Debug)]
pub enum BarCommand {
    /// Basis, differential and coproduct tables with their checks.
    Build { file: PathBuf },
}

#[derive(Subcommand, Debug)]
pub enum TensorCommand {
    /// check_faces on a tensor product; random small modules when no files
    /// are given.
    Check {
        /// Left factor: an A∞-algebra, or a module with --left-faces.
        #[arg(long, requires = "right")]
        left: Option<PathBuf>,
        #[arg(long)]
        left_faces: Option<PathBuf>,
        /// Right factor, read like --left.
        #[arg(long, requires = "left")]
        right: Option<PathBuf>,
        #[arg(long)]
        right_faces: Option<PathBuf>,
    },
}
