use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use grquot_core::deodhar::ProbeCase;

/// Default seed for sampled checks.
pub const DEFAULT_SEED: u64 = 20_240_607;

/// Environment variable read for the worker thread count.
pub const THREADS_ENV: &str = "GRQUOT_THREADS";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "grquot", version, about = "Torus quotients of Schubert and Richardson varieties in G(r, n)")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Shorthand for `--format json`.
    #[arg(long, global = true)]
    pub json: bool,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Seed for sampled checks.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Include wall-clock timing in the report.
    #[arg(long, global = true)]
    pub timing: bool,
}

impl RunConfig {
    pub fn format(&self) -> Format {
        if self.json {
            Format::Json
        } else {
            self.format
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// w_{r,n}, v_{r,n} and the Coxeter check.
    MinimalSchubert(RankArgs),
    /// The tableau Γ_{r,n}.
    Gamma(RankArgs),
    /// Torus-invariant standard monomials on X^v_w.
    Invariants(InvariantArgs),
    /// Quadratic relations among y1..y7 on X(w_{3,7}).
    VerifyRelations(RelationArgs),
    /// Overlap and unique-normal-form checks for a rule file.
    Confluence(ConfluenceArgs),
    /// Subexpressions and Deodhar cells along a reduced word.
    Deodhar(DeodharArgs),
    /// Degree-one generation for G(2, n).
    Projnorm(ProjnormArgs),
    /// Run the acceptance suite.
    Acceptance(AcceptanceArgs),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::MinimalSchubert(_) => "minimal-schubert",
            Command::Gamma(_) => "gamma",
            Command::Invariants(_) => "invariants",
            Command::VerifyRelations(_) => "verify-relations",
            Command::Confluence(_) => "confluence",
            Command::Deodhar(_) => "deodhar",
            Command::Projnorm(_) => "projnorm",
            Command::Acceptance(_) => "acceptance",
        }
    }
}

#[derive(Debug, Args)]
pub struct RankArgs {
    #[arg(long)]
    pub r: usize,
    #[arg(long)]
    pub n: usize,
}

#[derive(Debug, Args)]
pub struct InvariantArgs {
    #[arg(long)]
    pub r: usize,
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 1)]
    pub m: usize,
    /// Upper bound, e.g. `3,5,7`; defaults to the top tuple.
    #[arg(long, value_delimiter = ',')]
    pub w: Option<Vec<usize>>,
    /// Lower bound, e.g. `1,2,3`; defaults to `1..r`.
    #[arg(long, value_delimiter = ',')]
    pub v: Option<Vec<usize>>,
    #[arg(long)]
    pub count_only: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    G37,
}

#[derive(Debug, Args)]
pub struct RelationArgs {
    #[arg(long, value_enum, default_value_t = Family::G37)]
    pub family: Family,
}

#[derive(Debug, Args)]
pub struct ConfluenceArgs {
    /// `g37` or a path to a rule file.
    #[arg(long, default_value = "g37")]
    pub rules: String,
    #[arg(long, default_value_t = 4)]
    pub max_degree: u32,
}

#[derive(Debug, Args)]
pub struct DeodharArgs {
    /// Letters of a reduced word.
    #[arg(long, value_delimiter = ',', default_value = "2,1,4,3,6,5,2,4,3")]
    pub word: Vec<usize>,
    /// Target permutation in one-line notation.
    #[arg(long, value_delimiter = ',')]
    pub v: Option<Vec<usize>>,
    /// Target permutation as a product of simple reflections.
    #[arg(long, value_delimiter = ',', conflicts_with = "v")]
    pub v_word: Option<Vec<usize>>,
    /// List every distinguished subexpression.
    #[arg(long, conflicts_with_all = ["pds", "probe"])]
    pub enumerate: bool,
    /// Positive distinguished subexpression and its cell matrix.
    #[arg(long, conflicts_with = "probe")]
    pub pds: bool,
    /// One of s2s4s3, s2s3, s4s3, s3 (word and v are fixed).
    #[arg(long)]
    pub probe: Option<ProbeCase>,
}

#[derive(Debug, Args)]
pub struct ProjnormArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 2)]
    pub m: usize,
    #[arg(long, conflicts_with = "sample")]
    pub exhaustive: bool,
    /// Check this many random invariants.
    #[arg(long)]
    pub sample: Option<usize>,
    /// Also compare ranks of R(1)^m and R(m).
    #[arg(long)]
    pub oracle: bool,
    /// Upper bound for the rank oracle, e.g. `3,5`.
    #[arg(long, value_delimiter = ',', requires = "oracle")]
    pub w: Option<Vec<usize>>,
}

#[derive(Debug, Args)]
pub struct AcceptanceArgs {
    /// Run every criterion (the default).
    #[arg(long, conflicts_with = "criterion")]
    pub all: bool,
    /// Run a single criterion by number.
    #[arg(long)]
    pub criterion: Option<usize>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn command_tree_is_consistent() {
        RunConfig::command().debug_assert();
    }

    #[test]
    fn subcommand_names_match_clap() {
        let cmd = RunConfig::command();
        let names: Vec<&str> = cmd.get_subcommands().map(|c| c.get_name()).collect();
        assert_eq!(
            names,
            [
                "minimal-schubert",
                "gamma",
                "invariants",
                "verify-relations",
                "confluence",
                "deodhar",
                "projnorm",
                "acceptance"
            ]
        );
        let cfg = RunConfig::try_parse_from(["grquot", "deodhar", "--probe", "s2s3"]).unwrap();
        assert_eq!(cfg.command.name(), "deodhar");
        let Command::Deodhar(d) = cfg.command else { unreachable!() };
        assert_eq!(d.probe, Some(ProbeCase::S2s3));
        assert_eq!(d.word, vec![2, 1, 4, 3, 6, 5, 2, 4, 3]);
    }

    #[test]
    fn global_flags_after_subcommand() {
        let cfg = RunConfig::try_parse_from(["grquot", "gamma", "--r", "3", "--n", "7", "--json", "--timing"]).unwrap();
        assert_eq!(cfg.format(), Format::Json);
        assert!(cfg.timing);
    }
}
