use std::fmt;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Symbolic certification of critical points stays exact and fast up to here.
pub const MAX_SYMBOLIC_GENUS: usize = 8;

#[derive(Debug, Parser)]
#[command(name = "graphpot", version, about = "Exact checks for graph potentials and moduli of rank-two bundles")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Write the report to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Worker threads for parallel batches.
    #[arg(long, global = true, env = "GRAPHPOT_THREADS")]
    pub threads: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a graph potential and optionally check its decompositions.
    Potential(PotentialArgs),
    /// Certify the critical-value spectrum of the necklace graph.
    Critical(CriticalArgs),
    /// Grothendieck-ring checkpoints for the moduli of bundles.
    K0 {
        #[command(subcommand)]
        action: K0Action,
    },
    /// Realizations of the moduli class under motivic measures.
    Measure {
        #[command(subcommand)]
        action: MeasureAction,
    },
    /// Zeta-function checks, symbolic or for a curve over a finite field.
    Zeta(ZetaArgs),
}

#[derive(Debug, Args)]
pub struct PotentialArgs {
    /// `theta`, `dumbbell`, `necklace` or a path to a JSON graph.
    #[arg(long, conflicts_with = "necklace")]
    pub graph: Option<String>,

    /// Shorthand for `--graph necklace --genus G`.
    #[arg(long, value_name = "G")]
    pub necklace: Option<usize>,

    /// Genus of a named necklace.
    #[arg(long)]
    pub genus: Option<usize>,

    /// Colored vertices as `v1,v2,...` (1-based); replaces the graph's own coloring.
    #[arg(long, value_delimiter = ',')]
    pub colored: Option<Vec<String>>,

    /// Check matching (and, for necklaces, bead and string) decompositions.
    #[arg(long)]
    pub check_decompositions: bool,
}

#[derive(Debug, Args)]
pub struct CriticalArgs {
    /// Genus or inclusive range `A..B`.
    #[arg(long)]
    pub genus: GenusRange,

    /// Add exact Hessian kernel dimensions.
    #[arg(long)]
    pub hessian: bool,

    /// Add the multi-start numeric completeness report.
    #[arg(long)]
    pub brute: bool,

    /// Number of numeric starts.
    #[arg(long, default_value_t = 10_000)]
    pub seeds: usize,

    /// Seed for the numeric starts.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,

    /// Clustering tolerance for numeric values.
    #[arg(long, default_value_t = 1e-8)]
    pub tolerance: f64,
}

#[derive(Debug, Subcommand)]
pub enum K0Action {
    /// Run every checkpoint for each genus.
    Verify {
        #[arg(long)]
        genus: GenusRange,
    },
    /// Print the class of the moduli space.
    Class {
        #[arg(long)]
        genus: GenusRange,
    },
}

#[derive(Debug, Subcommand)]
pub enum MeasureAction {
    /// Poincaré polynomial coefficients.
    Betti {
        #[arg(long)]
        genus: GenusRange,
    },
    /// Signed Hodge polynomial.
    Hodge {
        #[arg(long)]
        genus: GenusRange,
    },
    /// Block multiplicities at `L = 1`.
    Dg {
        #[arg(long)]
        genus: GenusRange,
    },
    /// Point count of the moduli space over `F_q` by two routes.
    Count {
        /// Curve fixture `{"q": 3, "f": [c0, ..., c5]}`.
        #[arg(long)]
        curve: PathBuf,
    },
}

#[derive(Debug, Args)]
pub struct ZetaArgs {
    /// Genus or range for the symbolic zeta identities.
    #[arg(long, required_unless_present = "curve", conflicts_with = "curve")]
    pub genus: Option<GenusRange>,

    /// Curve fixture for the zeta numerator and its functional equation.
    #[arg(long)]
    pub curve: Option<PathBuf>,
}

/// A single genus `G` or an inclusive range `A..B`, all at least 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenusRange(pub RangeInclusive<usize>);

impl GenusRange {
    pub fn iter(&self) -> impl Iterator<Item = usize> {
        self.0.clone()
    }

    pub fn max(&self) -> usize {
        *self.0.end()
    }
}

impl FromStr for GenusRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("invalid genus `{t}`"));
        let (a, b) = match s.split_once("..") {
            Some((a, b)) => (parse(a)?, parse(b.strip_prefix('=').unwrap_or(b))?),
            None => {
                let g = parse(s)?;
                (g, g)
            }
        };
        if a < 2 {
            return Err(format!("genus must be at least 2, got {a}"));
        }
        if b < a {
            return Err(format!("empty genus range {s}"));
        }
        Ok(Self(a..=b))
    }
}

impl fmt::Display for GenusRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.start() == self.0.end() {
            write!(f, "{}", self.0.start())
        } else {
            write!(f, "{}..{}", self.0.start(), self.0.end())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn genus_ranges() {
        assert_eq!("4".parse::<GenusRange>().unwrap(), GenusRange(4..=4));
        assert_eq!("2..10".parse::<GenusRange>().unwrap(), GenusRange(2..=10));
        assert_eq!("2..=3".parse::<GenusRange>().unwrap(), GenusRange(2..=3));
        assert!("1".parse::<GenusRange>().is_err());
        assert!("5..3".parse::<GenusRange>().is_err());
        assert!("x".parse::<GenusRange>().is_err());
        assert_eq!(GenusRange(2..=10).to_string(), "2..10");
    }

    #[test]
    fn cli_is_well_formed() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
