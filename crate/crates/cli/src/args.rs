use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use tropgen_core::generic::Family;

#[derive(Parser, Debug, Clone)]
#[command(
    name = "tropgen",
    version,
    about = "Tropical varieties, Groebner complexes and generic coordinate changes"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Tropical hypersurface of a principal ideal.
    Hypersurface(Common),
    /// Groebner complex.
    Gc(Common),
    /// Tropical variety.
    Trop(Common),
    /// Tropical varieties under sampled coordinate changes.
    GenericTrop(Generic),
    /// Groebner complexes under sampled coordinate changes.
    GenericGc(Generic),
    /// Certified tropical basis after a sampled coordinate change.
    Basis(Basis),
    /// Distinct tropical varieties across many samples.
    Classify(Generic),
    /// Hilbert, dimension and diagonal invariance checks, or schema
    /// validation of a complex with `--complex`.
    Validate(Validate),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Text,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Gl,
    Diag,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::Gl => Family::GeneralLinear,
            FamilyArg::Diag => Family::Diagonal,
        }
    }
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Ideal input file.
    pub input: PathBuf,
    /// Largest degree slice; defaults to twice the largest generator degree.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub dmax: Option<u32>,
    #[arg(long, value_enum, default_value = "json")]
    pub output: OutputFormat,
    /// Write the result here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct Sampling {
    #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u64).range(1..))]
    pub samples: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Entries of sampled matrices lie in [-bound, bound].
    #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(i64).range(1..))]
    pub bound: i64,
    #[arg(long, value_enum, default_value = "gl")]
    pub family: FamilyArg,
}

#[derive(Args, Debug, Clone)]
pub struct Generic {
    #[command(flatten)]
    pub common: Common,
    #[command(flatten)]
    pub sampling: Sampling,
}

#[derive(Args, Debug, Clone)]
pub struct Basis {
    #[command(flatten)]
    pub common: Common,
    #[command(flatten)]
    pub sampling: Sampling,
    /// Number of rational projections.
    #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u64).range(1..))]
    pub projections: u64,
    /// Certification grid size.
    #[arg(long, default_value_t = 200, value_parser = clap::value_parser!(u64).range(1..))]
    pub grid: u64,
    /// Kernel vectors of sampled projections have entries in
    /// [-kernel-bound, kernel-bound].
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(i64).range(1..))]
    pub kernel_bound: i64,
}

#[derive(Args, Debug, Clone)]
pub struct Validate {
    /// Ideal input file; ignored with `--complex`.
    #[arg(required_unless_present = "complex")]
    pub input: Option<PathBuf>,
    /// Validate this complex JSON file against the schema.
    #[arg(long)]
    pub complex: Option<PathBuf>,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub dmax: Option<u32>,
    #[command(flatten)]
    pub sampling: Sampling,
    #[arg(long, value_enum, default_value = "json")]
    pub output: OutputFormat,
    #[arg(long)]
    pub out: Option<PathBuf>,
}
