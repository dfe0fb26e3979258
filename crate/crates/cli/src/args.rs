use clap::{Args, Parser, Subcommand, ValueEnum};

use powspec::groups::Family;
use powspec::joinstruct::Variant;

#[derive(Debug, Parser)]
#[command(
    name = "powspec",
    version,
    about = "Universal adjacency spectra of group power graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Eigenvalues and multiplicities of U for one graph.
    Spectrum(SpectrumArgs),
    /// Run the invariant battery over seeded random parameters.
    Verify(VerifyArgs),
    /// Exact quotient characteristic polynomial, or the normalized
    /// Laplacian determinant ratio at a point.
    Charpoly(CharpolyArgs),
    /// Print the power graph as an edge list.
    Graph(GraphArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GroupArg {
    Zn,
    Dn,
    Qn,
}

impl From<GroupArg> for Family {
    fn from(g: GroupArg) -> Family {
        match g {
            GroupArg::Zn => Family::Cyclic,
            GroupArg::Dn => Family::Dihedral,
            GroupArg::Qn => Family::Dicyclic,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    Power,
    Proper,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Variant {
        match v {
            VariantArg::Power => Variant::Power,
            VariantArg::Proper => Variant::Proper,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PresetArg {
    Adjacency,
    Laplacian,
    Signless,
    Seidel,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Args)]
pub struct Selection {
    #[arg(long, value_enum)]
    pub group: GroupArg,
    #[arg(long)]
    pub n: u64,
    #[arg(long, value_enum, default_value = "power")]
    pub variant: VariantArg,
    /// Use the complement graph.
    #[arg(long)]
    pub complement: bool,
}

#[derive(Debug, Clone, Args)]
#[group(multiple = false)]
pub struct ParamsArg {
    /// Named parameter preset; adjacency when neither this nor --params is given.
    #[arg(long, value_enum)]
    pub preset: Option<PresetArg>,
    /// alpha,beta,gamma,eta as integers, decimals or fractions.
    #[arg(long, allow_hyphen_values = true)]
    pub params: Option<String>,
}

#[derive(Debug, Clone, Args)]
pub struct SpectrumArgs {
    #[command(flatten)]
    pub selection: Selection,
    #[command(flatten)]
    pub params: ParamsArg,
    /// Include eigenvectors and the vertex order they refer to.
    #[arg(long)]
    pub vectors: bool,
    /// Cross-check against the dense oracle and any applicable closed form.
    #[arg(long)]
    pub oracle_check: bool,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    /// Relative tolerance, scaled by max(1, ||U||_inf).
    #[arg(long, default_value_t = 1e-8)]
    pub tol: f64,
    /// Append wall-clock timing to the report (breaks byte-identical output).
    #[arg(long)]
    pub timing: bool,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub selection: Selection,
    /// Number of random parameter quadruples.
    #[arg(long, default_value_t = 5)]
    pub samples: usize,
    #[arg(long, env = "POWSPEC_SEED", default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 1e-8)]
    pub tol: f64,
}

#[derive(Debug, Clone, Args)]
pub struct CharpolyArgs {
    #[command(flatten)]
    pub selection: Selection,
    #[command(flatten)]
    pub params: ParamsArg,
    /// Characteristic polynomial of the quotient matrix.
    #[arg(long, conflicts_with = "normalized", required_unless_present = "normalized")]
    pub quotient: bool,
    /// Also locate the real roots of the quotient polynomial.
    #[arg(long, requires = "quotient")]
    pub roots: bool,
    /// det(U(-1, 1 - lambda, 0, 0)) / prod deg at --at.
    #[arg(long, requires = "at")]
    pub normalized: bool,
    #[arg(long, allow_hyphen_values = true)]
    pub at: Option<String>,
}

#[derive(Debug, Clone, Args)]
pub struct GraphArgs {
    #[command(flatten)]
    pub selection: Selection,
    /// Prefix the edge list with one `# index label` line per vertex.
    #[arg(long)]
    pub labels: bool,
}
