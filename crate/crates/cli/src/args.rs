use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "cyclic-sieve",
    version,
    about = "Cyclic sieving checks for circular lattice paths"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct Global {
    /// Print the JSON payload instead of a summary.
    #[arg(long, global = true)]
    pub json: bool,
    /// Write a CSV export to this path.
    #[arg(long, global = true, value_name = "PATH")]
    pub csv: Option<PathBuf>,
    /// Cache directory (also read from CYCLIC_SIEVE_CACHE).
    #[arg(long, global = true, value_name = "PATH")]
    pub cache_dir: Option<PathBuf>,
    /// Ignore and do not write the cache.
    #[arg(long, global = true)]
    pub no_cache: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count circular Dyck paths, optionally with the q-polynomial.
    Count(CountArgs),
    /// Check a cyclic sieving instance.
    Verify(TargetArgs),
    /// Orbit decomposition of an instance.
    Orbits(TargetArgs),
    /// Lyndon parameters, families and the canonical construction.
    Lyndon {
        #[command(subcommand)]
        command: LyndonCommand,
    },
    /// Orbit averages of inv on balanced words.
    Homomesy(HomomesyArgs),
    /// Run the acceptance grid at a reduced scale.
    Selftest(SelftestArgs),
}

#[derive(Debug, Clone, Args)]
pub struct CountArgs {
    #[arg(long, required_unless_present = "max_n")]
    pub n: Option<usize>,
    /// Strip width; defaults to n.
    #[arg(long)]
    pub w: Option<usize>,
    /// Include the q-polynomial.
    #[arg(long)]
    pub q: bool,
    /// One row per n = 1..max-n, printed as CSV.
    #[arg(long, requires = "max_n")]
    pub table: bool,
    /// One "n count" line per n = 1..max-n.
    #[arg(long, requires = "max_n", conflicts_with = "table")]
    pub bfile: bool,
    #[arg(long, conflicts_with = "n")]
    pub max_n: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Cdp,
    Cmp,
    Bw,
    Avl,
    Words,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CmpPoly {
    HalfBw,
    Maj,
}

#[derive(Debug, Clone, Args)]
pub struct TargetArgs {
    #[arg(value_enum)]
    pub target: Target,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub w: Option<usize>,
    /// Letter multiplicities for `words`, e.g. 2,2.
    #[arg(long, value_delimiter = ',')]
    pub content: Option<Vec<usize>>,
    /// Polynomial used for `cmp`.
    #[arg(long, value_enum, default_value = "maj")]
    pub polynomial: CmpPoly,
    /// verify: print (k, evaluation, fixed_count) as CSV.
    #[arg(long)]
    pub table: bool,
    /// orbits: compare the orbit polynomial with the closed form mod q^n - 1.
    #[arg(long)]
    pub poly: bool,
}

#[derive(Debug, Subcommand)]
pub enum LyndonCommand {
    /// Extract t_d from family sizes.
    Params(ParamsArgs),
    /// Check a built-in family up to max-n.
    Check(CheckArgs),
    /// Canonical instance for given parameters.
    Construct(ConstructArgs),
}

#[derive(Debug, Clone, Args)]
pub struct ParamsArgs {
    /// Sizes |X_1|, |X_2|, ...
    #[arg(
        long,
        value_delimiter = ',',
        required_unless_present = "file",
        conflicts_with = "file"
    )]
    pub sizes: Option<Vec<String>>,
    /// File of sizes: one per line, "n count" lines, or comma separated.
    #[arg(long)]
    pub file: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyName {
    #[value(name = "cdp-fixed-w", alias = "cdp")]
    CdpFixedW,
    #[value(name = "binary-words")]
    BinaryWords,
    #[value(name = "k-ary-words", alias = "words")]
    KaryWords,
    Cmp,
}

#[derive(Debug, Clone, Args)]
pub struct CheckArgs {
    #[arg(long, value_enum)]
    pub family: FamilyName,
    /// Width for cdp-fixed-w.
    #[arg(long)]
    pub w: Option<usize>,
    /// Alphabet size for k-ary-words.
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub max_n: usize,
}

#[derive(Debug, Clone, Args)]
pub struct ConstructArgs {
    /// Parameters t_1, t_2, ...
    #[arg(long, value_delimiter = ',', required = true)]
    pub t: Vec<String>,
    #[arg(long)]
    pub n: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Action {
    Alpha,
    Beta,
}

#[derive(Debug, Clone, Args)]
pub struct HomomesyArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum)]
    pub action: Action,
}

#[derive(Debug, Clone, Args)]
pub struct SelftestArgs {
    #[arg(long, default_value_t = 5)]
    pub max_n: usize,
}
