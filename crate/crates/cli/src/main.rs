//! `grk`: matched ribbon graphs and Gauss codes from the command line.

mod commands;
mod input;
mod report;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use report::{render_batch, Format, Report};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Domain(String),
}

impl From<grk_core::Error> for CliError {
    fn from(e: grk_core::Error) -> Self {
        CliError::Domain(e.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Orientation {
    Auto,
    Enumerate,
    Explicit(Vec<bool>),
}

fn parse_orientation(s: &str) -> Result<Orientation, String> {
    match s {
        "auto" => Ok(Orientation::Auto),
        "enumerate" => Ok(Orientation::Enumerate),
        _ if !s.is_empty() && s.chars().all(|c| c == '0' || c == '1') => {
            Ok(Orientation::Explicit(s.chars().map(|c| c == '1').collect()))
        }
        _ => Err("expected auto, enumerate, or a string of 0/1 (1 reverses that cycle)".into()),
    }
}

#[derive(Args, Clone, Debug)]
pub struct Opts {
    /// Size cap for the computation (crossings, matched edges or vertices)
    #[arg(long, global = true)]
    pub limit: Option<usize>,
    /// Node budget for move search
    #[arg(long, global = true)]
    pub budget: Option<usize>,
    /// Depth for move search, or number of steps for a walk
    #[arg(long, global = true)]
    pub depth: Option<usize>,
    /// Prime for Fox colorings
    #[arg(long, global = true, default_value_t = 3)]
    pub prime: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Seed for `moves walk`
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Cycle directions: auto, enumerate, or 0/1 per cycle
    #[arg(long, global = true, default_value = "auto", value_parser = parse_orientation)]
    pub orientation: Orientation,
}

#[derive(Parser, Debug)]
#[command(name = "grk", version, about = "Matched ribbon graphs, Gauss codes and their invariants")]
struct Cli {
    #[command(flatten)]
    opts: Opts,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TaitMethod {
    Brute,
    Expansion,
}

#[derive(Args, Debug)]
struct Files {
    /// Input files; `-` reads stdin
    #[arg(required = true)]
    files: Vec<String>,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Check that inputs parse and satisfy their structural rules
    Validate(Files),
    /// Gauss code of a matched graph
    K(Files),
    /// Matched graph of a Gauss code
    Kinv(Files),
    /// Check K and its inverse against each other
    Roundtrip(Files),
    /// Reidemeister and graphene moves
    #[command(subcommand)]
    Moves(MovesCmd),
    /// Kauffman bracket of a Gauss code
    Bracket(Files),
    /// Jones polynomial of a Gauss code
    Jones(Files),
    /// Bracket of a matched graph
    TwoFactor(Files),
    /// Penrose number of a matched graph
    Penrose(Files),
    /// Number of 3-edge-colorings
    Tait {
        #[arg(value_enum)]
        method: TaitMethod,
        #[command(flatten)]
        files: Files,
    },
    /// Perfect matchings of the underlying graph
    Matchings(Files),
    /// Sum of Jones values at 1 over all perfect matchings
    SumJones(Files),
    /// Binary bracket of a Gauss code
    Binary {
        /// Multiply by A^-w
        #[arg(long)]
        normalized: bool,
        #[command(flatten)]
        files: Files,
    },
    /// Wirtinger presentation of a Gauss code
    Wirtinger(Files),
    /// Number of Fox colorings mod --prime
    Fox(Files),
    /// Khovanov homology over GF(2)
    Khovanov(Files),
    /// Cube homology of a perfect matching drawing
    Baldridge(Files),
    /// Compare the matched-graph homology with Khovanov homology of its image
    ShiftCheck(Files),
    /// 2-colorings of a Gauss code
    TwoColorings(Files),
    /// Bicolored multicycles of a matched graph
    Multicycles(Files),
    /// Strong embeddings of every bicolored multicycle
    StrongEmbed(Files),
    /// Number of 2-colorings
    DkhRank(Files),
    /// Genus of the ribbon surface
    Genus(Files),
    /// Isomorphism of underlying graphs
    Isomorphic { first: String, second: String },
}

#[derive(Subcommand, Debug)]
enum MovesCmd {
    /// Apply one move, e.g. "R2- @ x2 x3" or "G4 @ e3"
    Apply {
        file: String,
        #[arg(value_name = "MOVE")]
        mv: String,
    },
    /// Replay a trace file, one move per line
    Replay { file: String, trace: String },
    /// Search for a move sequence between two Gauss codes
    Search { from: String, to: String },
    /// All single moves from a Gauss code
    Neighbors(Files),
    /// Random walk of --depth moves seeded by --seed
    Walk(Files),
}

/// Reads every input up front, runs `f` on them in parallel and reports in
/// input order; the first failure, in input order, wins.
fn batch<F>(files: &[String], f: F) -> Result<Vec<(String, Report)>, CliError>
where
    F: Fn(&str, &str) -> Result<Report, CliError> + Sync,
{
    if files.iter().filter(|p| *p == "-").count() > 1 {
        return Err(CliError::Usage("stdin (-) can be read only once".into()));
    }
    let texts: Vec<String> = files.iter().map(|p| input::read_text(p)).collect::<Result<_, _>>()?;
    let out: Vec<Result<Report, CliError>> = files.par_iter().zip(texts.par_iter()).map(|(p, t)| f(p, t)).collect();
    files.iter().cloned().zip(out).map(|(p, r)| r.map(|r| (p, r))).collect()
}

fn read_pair(a: &str, b: &str) -> Result<[String; 2], CliError> {
    if a == "-" && b == "-" {
        return Err(CliError::Usage("stdin (-) can be read only once".into()));
    }
    Ok([input::read_text(a)?, input::read_text(b)?])
}

fn run(cli: Cli) -> Result<String, CliError> {
    let o = &cli.opts;
    if o.prime == 2 || o.prime < 2 || !(2..).take_while(|k: &u64| k * k <= o.prime).all(|k| o.prime % k != 0) {
        return Err(CliError::Usage(format!("--prime {} is not an odd prime", o.prime)));
    }
    use commands as c;
    let items = match &cli.cmd {
        Cmd::Validate(f) => batch(&f.files, |p, t| c::validate(p, t))?,
        Cmd::K(f) => batch(&f.files, |p, t| c::k(o, p, t))?,
        Cmd::Kinv(f) => batch(&f.files, |p, t| c::kinv(o, p, t))?,
        Cmd::Roundtrip(f) => batch(&f.files, |p, t| c::roundtrip(o, p, t))?,
        Cmd::Moves(m) => match m {
            MovesCmd::Apply { file, mv } => batch(std::slice::from_ref(file), |p, t| c::moves_apply(p, t, mv))?,
            MovesCmd::Replay { file, trace } => {
                let tr = input::read_text(trace)?;
                batch(std::slice::from_ref(file), |p, t| c::moves_replay(p, t, &tr))?
            }
            MovesCmd::Search { from, to } => {
                let [a, b] = read_pair(from, to)?;
                vec![(from.clone(), c::moves_search(o, (from, &a), (to, &b))?)]
            }
            MovesCmd::Neighbors(f) => batch(&f.files, |p, t| c::moves_neighbors(o, p, t))?,
            MovesCmd::Walk(f) => batch(&f.files, |p, t| c::moves_walk(o, p, t))?,
        },
        Cmd::Bracket(f) => batch(&f.files, |p, t| c::bracket(o, p, t))?,
        Cmd::Jones(f) => batch(&f.files, |p, t| c::jones(o, p, t))?,
        Cmd::TwoFactor(f) => batch(&f.files, |p, t| c::two_factor(o, p, t))?,
        Cmd::Penrose(f) => batch(&f.files, |p, t| c::penrose(o, p, t))?,
        Cmd::Tait { method, files } => batch(&files.files, |p, t| c::tait(o, *method, p, t))?,
        Cmd::Matchings(f) => batch(&f.files, |p, t| c::matchings(o, p, t))?,
        Cmd::SumJones(f) => batch(&f.files, |p, t| c::sum_jones(o, p, t))?,
        Cmd::Binary { normalized, files } => batch(&files.files, |p, t| c::binary(o, *normalized, p, t))?,
        Cmd::Wirtinger(f) => batch(&f.files, |p, t| c::wirtinger(o, p, t))?,
        Cmd::Fox(f) => batch(&f.files, |p, t| c::fox(o, p, t))?,
        Cmd::Khovanov(f) => batch(&f.files, |p, t| c::khovanov(o, p, t))?,
        Cmd::Baldridge(f) => batch(&f.files, |p, t| c::baldridge(o, p, t))?,
        Cmd::ShiftCheck(f) => batch(&f.files, |p, t| c::shift_check(o, p, t))?,
        Cmd::TwoColorings(f) => batch(&f.files, |p, t| c::two_colorings(o, p, t))?,
        Cmd::Multicycles(f) => batch(&f.files, |p, t| c::multicycles(o, p, t))?,
        Cmd::StrongEmbed(f) => batch(&f.files, |p, t| c::strong_embed(o, p, t))?,
        Cmd::DkhRank(f) => batch(&f.files, |p, t| c::dkh_rank(o, p, t))?,
        Cmd::Genus(f) => batch(&f.files, |p, t| c::genus(o, p, t))?,
        Cmd::Isomorphic { first, second } => {
            let [a, b] = read_pair(first, second)?;
            vec![(first.clone(), c::isomorphic(o, (first, &a), (second, &b))?)]
        }
    };
    Ok(render_batch(&items, o.format))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(CliError::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(CliError::Domain(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
    }
}
