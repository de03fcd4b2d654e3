//! Command-line grammar.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "surfgeom",
    version,
    about = "Collar, hexagon, Farey-graph and move-sequence computations"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Default, Args)]
pub struct GlobalOpts {
    /// JSON job configuration supplying defaults; flags take precedence.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Write the result here (atomically) instead of standard output.
    #[arg(long, short = 'o', global = true)]
    pub output: Option<PathBuf>,
    #[arg(long, short = 'f', global = true, value_enum)]
    pub format: Option<Format>,
    /// JSON constants profile; defaults to `$SURFGEOM_CONSTANTS` when set.
    #[arg(long, global = true)]
    pub constants: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
    Dot,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Collar widths and boundary lengths about geodesics of the given lengths.
    Collar {
        #[arg(required = true, allow_negative_numbers = true)]
        ell: Vec<f64>,
    },
    /// Right-angled hexagon with alternate sides a1, a2, a3.
    Hex {
        #[arg(allow_hyphen_values = true)]
        a1: f64,
        #[arg(allow_hyphen_values = true)]
        a2: f64,
        #[arg(allow_hyphen_values = true)]
        a3: f64,
    },
    /// Maximum of the collar twist ratio p/ell over all lengths.
    TwistRatio,
    /// Displacement of a point at distance r from the axis of a translation.
    Shorten {
        #[arg(allow_hyphen_values = true)]
        ell: f64,
        #[arg(allow_hyphen_values = true)]
        r: f64,
    },
    /// Displacement along the equidistant surface of a loxodromic.
    Equidistant {
        #[arg(allow_hyphen_values = true)]
        ell: f64,
        #[arg(allow_hyphen_values = true)]
        theta: f64,
        #[arg(allow_hyphen_values = true)]
        t: f64,
    },
    /// Lower bound on the Margulis tube radius for curves shorter than eps.
    Tube {
        #[arg(allow_hyphen_values = true)]
        eps: f64,
    },
    /// Diameter of the intersection of b-neighbourhoods of two half-spaces.
    Juncture {
        #[arg(allow_hyphen_values = true)]
        b: f64,
        #[arg(allow_hyphen_values = true)]
        r0: f64,
    },
    /// Farey-graph queries.
    Farey {
        #[command(subcommand)]
        query: FareyQuery,
    },
    /// Continued-fraction expansion of a rational slope.
    Cf {
        #[arg(allow_hyphen_values = true)]
        x: String,
    },
    /// Annular coefficient spectrum between two end invariants.
    Coeffs {
        #[arg(allow_hyphen_values = true)]
        nu_plus: String,
        #[arg(allow_hyphen_values = true)]
        nu_minus: String,
        #[arg(long)]
        depth: Option<usize>,
        /// Threshold used for the decision in the summary.
        #[arg(short = 'K', long = "threshold")]
        k: Option<u64>,
        /// Write the JSON summary here as well.
        #[arg(long)]
        summary: Option<PathBuf>,
    },
    /// Bounded-geometry decision: exit 0 Bounded, 3 Unbounded, 4 indeterminate.
    Decide {
        #[arg(allow_hyphen_values = true)]
        nu_plus: String,
        #[arg(allow_hyphen_values = true)]
        nu_minus: String,
        #[arg(short = 'K', long = "threshold")]
        k: Option<u64>,
        #[arg(long)]
        depth: Option<usize>,
    },
    /// Resolution sequence between two slopes, or between two pants
    /// decompositions on a surface of higher complexity.
    Resolve {
        #[arg(allow_hyphen_values = true)]
        from: String,
        #[arg(allow_hyphen_values = true)]
        to: String,
        /// Surface as "genus punctures"; slopes imply "1 1" by default.
        #[arg(long)]
        surface: Option<String>,
        /// Search radius for decompositions.
        #[arg(long)]
        radius: Option<usize>,
    },
    /// Checks a move-sequence file and reports its structural properties.
    CheckResolution { file: PathBuf },
    /// Graphviz output.
    ExportDot {
        #[command(subcommand)]
        what: DotTarget,
    },
    /// Runs one command per line of a file; stops at the first failure.
    Batch { file: PathBuf },
}

#[derive(Debug, Subcommand)]
pub enum FareyQuery {
    /// Farey distance, optionally with a geodesic.
    Dist {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(long)]
        path: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum DotTarget {
    /// Gluing graph of a pants decomposition (the standard one by default).
    Pants {
        genus: u32,
        punctures: u32,
        decomposition: Option<String>,
    },
    /// Ball in the Farey graph, optionally highlighting a geodesic.
    Farey {
        #[arg(allow_hyphen_values = true)]
        center: String,
        #[arg(long)]
        radius: Option<usize>,
        #[arg(long)]
        height: Option<u32>,
        /// Highlight the geodesic from the centre to this slope.
        #[arg(long, allow_hyphen_values = true)]
        to: Option<String>,
    },
    /// Farey picture of a complexity-one move-sequence file.
    Resolution { file: PathBuf },
}
