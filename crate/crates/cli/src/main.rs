mod commands;
mod parse;

use clap::{Args, Parser, Subcommand};
use std::path::PathBuf;
use std::process::ExitCode;

/// Exact analysis and exhaustive search for dissections of rectangles into
/// congruent convex polygons.
#[derive(Parser, Debug)]
#[command(name = "dissect", version)]
struct Cli {
    /// Worker threads for the parallel kernels.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Reserved; no exact code path is randomized.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check that a tiling covers its region without overlap.
    Validate { file: PathBuf },
    /// Vertex census and counting identities.
    Analyze {
        file: PathBuf,
        /// Vertex count of the prototile (default: read from the prototile).
        #[arg(long)]
        q: Option<i64>,
    },
    /// Hypotenuse graph, angle patterns and parity certificates.
    Hgraph { file: PathBuf },
    /// Maximal segments, side relations and the special-segment scan.
    Segments { file: PathBuf },
    /// Enumerate all tilings of a rectangle by one prototile.
    Search(SearchArgs),
    /// Draw a tiling as SVG.
    Render {
        file: PathBuf,
        /// Output file (default: standard output).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Overlay hypotenuse-graph edges.
        #[arg(long)]
        hgraph: bool,
        /// Overlay maximal segments.
        #[arg(long)]
        segments: bool,
        /// Label vertices with their angle patterns.
        #[arg(long)]
        patterns: bool,
    },
    /// Search a range of tile counts and tabulate the results.
    Sweep(SweepArgs),
}

#[derive(Args, Debug, Clone)]
struct ShapeArgs {
    /// trapezoid or rectangle.
    #[arg(long, default_value = "trapezoid")]
    prototile: String,
    /// Short base of the trapezoid, e.g. "(-1/2)+(1/2)√3".
    #[arg(long)]
    x: Option<String>,
    /// Acute angle of the trapezoid.
    #[arg(long, default_value = "pi/3")]
    angle: String,
    /// Rectangle width.
    #[arg(long)]
    w: Option<String>,
    /// Rectangle height.
    #[arg(long)]
    h: Option<String>,
    /// Field radicand for rectangle prototiles.
    #[arg(long, default_value_t = 1)]
    field: u32,
    #[arg(long, default_value_t = dissect_core::search::DEFAULT_NODE_LIMIT)]
    node_limit: u64,
    /// Keep tilings that differ only by a symmetry of the region.
    #[arg(long)]
    no_dedup: bool,
}

#[derive(Args, Debug)]
struct SearchArgs {
    #[command(flatten)]
    shape: ShapeArgs,
    /// Region as WxH, e.g. "√3x√3".
    #[arg(long)]
    region: String,
    /// Number of tiles.
    #[arg(long)]
    n: usize,
    /// Directory for one JSON file per tiling plus summary.json.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct SweepArgs {
    #[command(flatten)]
    shape: ShapeArgs,
    /// Tile counts, e.g. "1..3" or "2,4".
    #[arg(long)]
    n: String,
    /// "square" (side from the area) or a fixed WxH.
    #[arg(long, default_value = "square")]
    region: String,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    if let Some(n) = cli.threads {
        commands::set_threads(n);
    }
    match commands::run(&cli) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
