use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "theta-lab", version, about = "Theta characteristics, theta-nulls and their identities")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Table,
    Latex,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Enumerate and count characteristics.
    #[command(subcommand)]
    Chars(CharsCommand),
    /// Göpel groups and their systems.
    #[command(subcommand)]
    Goepel(GoepelCommand),
    /// Evaluate theta functions.
    #[command(subcommand)]
    Theta(ThetaCommand),
    /// Period matrices and theta-null checks for real hyperelliptic curves.
    #[command(subcommand)]
    Curve(CurveCommand),
    /// Generate and verify theta-null identities.
    #[command(subcommand)]
    Identities(IdentitiesCommand),
    /// Detect automorphism groups of a genus-3 curve from vanishing theta-nulls.
    Detect(DetectArgs),
}

#[derive(Args, Debug)]
pub struct CharSpace {
    #[arg(long)]
    pub genus: usize,
    /// Common denominator of the entries.
    #[arg(long, default_value_t = 2)]
    pub denom: u32,
}

#[derive(Subcommand, Debug)]
pub enum CharsCommand {
    Count(CharSpace),
    List(CharSpace),
}

#[derive(Subcommand, Debug)]
pub enum GoepelCommand {
    /// All Göpel groups with 2^rank elements.
    Enumerate {
        #[arg(long)]
        genus: usize,
        #[arg(long)]
        rank: usize,
    },
    /// Classify Göpel systems, of one group given by generators or of all groups of a rank.
    Classify {
        #[arg(long)]
        genus: usize,
        #[arg(long)]
        rank: Option<usize>,
        /// Generator in compact form, e.g. 01/10; repeatable.
        #[arg(long = "char")]
        chars: Vec<String>,
    },
}

#[derive(Subcommand, Debug)]
pub enum ThetaCommand {
    Eval {
        /// Period matrix file.
        #[arg(long)]
        tau: PathBuf,
        /// Characteristic as compact digits over --denom (e.g. 0/1) or a JSON object.
        #[arg(long = "char", default_value = "")]
        characteristic: String,
        #[arg(long, default_value_t = 2)]
        denom: u32,
        /// Comma-separated complex entries, or 0 for the origin.
        #[arg(long, default_value = "0")]
        z: String,
        /// Absolute evaluation tolerance.
        #[arg(long)]
        tol: Option<f64>,
    },
}

#[derive(Args, Debug)]
pub struct CurveInput {
    /// Curve file with real branch points.
    #[arg(long)]
    pub input: PathBuf,
    /// Expected genus, checked against the file.
    #[arg(long)]
    pub genus: Option<usize>,
}

#[derive(Args, Debug)]
pub struct Sampling {
    #[arg(long)]
    pub samples: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Pass/fail tolerance.
    #[arg(long)]
    pub tol: Option<f64>,
}

#[derive(Subcommand, Debug)]
pub enum CurveCommand {
    Periods(CurveInput),
    Vanishing(CurveInput),
    Thomae {
        #[command(flatten)]
        curve: CurveInput,
        #[command(flatten)]
        sampling: Sampling,
    },
    Frobenius {
        #[command(flatten)]
        curve: CurveInput,
        #[command(flatten)]
        sampling: Sampling,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum KindArg {
    Product,
    Quartic,
}

#[derive(Subcommand, Debug)]
pub enum IdentitiesCommand {
    Generate {
        #[arg(long)]
        genus: usize,
        /// Restrict to one kind; both by default.
        #[arg(long, value_enum)]
        kind: Option<KindArg>,
        /// `a` then `h` in compact form; omit both for the whole family.
        #[arg(long = "char")]
        chars: Vec<String>,
    },
    Verify {
        #[arg(long)]
        genus: usize,
        /// Restrict to one kind; both by default.
        #[arg(long, value_enum)]
        kind: Option<KindArg>,
        /// Period matrix file; random matrices from --seed otherwise.
        #[arg(long)]
        tau: Option<PathBuf>,
        #[command(flatten)]
        sampling: Sampling,
    },
}

#[derive(Args, Debug)]
pub struct DetectArgs {
    /// Period matrix file.
    #[arg(long, conflicts_with = "input")]
    pub tau: Option<PathBuf>,
    /// Curve file with real branch points; the period matrix is computed.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Run a single case, e.g. c2, v4_hyperelliptic, d4, l3_2.
    #[arg(long = "case")]
    pub case: Option<String>,
    /// Absolute evaluation tolerance.
    #[arg(long)]
    pub tol: Option<f64>,
}
