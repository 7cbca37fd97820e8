use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use toricg_cli::suites::{cmd_verify, Suite};
use toricg_cli::{
    cmd_enumerate, cmd_table, configure_threads, limits, CliError, CliResult, EnumerateRequest,
    Format, Object, Source, TableRequest,
};

/// Toric g-vectors of simple polytopes and the combinatorics behind them.
#[derive(Parser)]
#[command(name = "toricg", version)]
struct Cli {
    /// Lift every capacity bound.
    #[arg(long, global = true)]
    unsafe_max: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Toric g-vectors, one row per dimension.
    Table {
        /// cube, associahedron, cyclohedron, permutahedron, stanley_pitman,
        /// associahedron_intervals or interpolation:<r>
        #[arg(
            long,
            conflicts_with = "building_set",
            required_unless_present = "building_set"
        )]
        family: Option<String>,
        /// JSON building set file; produces a single row.
        #[arg(long)]
        building_set: Option<PathBuf>,
        /// Largest dimension.
        #[arg(long)]
        max: Option<usize>,
        /// gamma, hetyei, direct or all.
        #[arg(long, default_value = "gamma")]
        route: String,
        /// csv or json.
        #[arg(long, default_value = "csv")]
        format: String,
    },
    /// Run a verification suite and print a JSON report.
    Verify {
        /// bijections, compat, series, gamma, nestohedra or conjectures.
        suite: String,
        n_max: usize,
    },
    /// List combinatorial objects, one per line.
    Enumerate {
        /// dyck, parking_functions_123, parking_trees or b_perms.
        object: String,
        n: usize,
        #[arg(long)]
        count_only: bool,
        /// Named building-set family (for b_perms).
        #[arg(long, conflicts_with = "building_set")]
        family: Option<String>,
        /// JSON building set file (for b_perms).
        #[arg(long)]
        building_set: Option<PathBuf>,
    },
}

fn source(family: Option<String>, building_set: Option<PathBuf>) -> CliResult<Option<Source>> {
    match (family, building_set) {
        (Some(f), _) => Source::parse_family(&f).map(Some),
        (None, Some(path)) => Source::load_building_set(&path).map(Some),
        (None, None) => Ok(None),
    }
}

fn run(cli: Cli, out: &mut dyn Write) -> CliResult<()> {
    configure_threads()?;
    let limits = limits(cli.unsafe_max);
    match cli.command {
        Command::Table {
            family,
            building_set,
            max,
            route,
            format,
        } => {
            let req = TableRequest {
                source: source(family, building_set)?.expect("clap requires a source"),
                max,
                route: route.parse()?,
                format: format.parse::<Format>()?,
                limits,
            };
            cmd_table(&req, out)
        }
        Command::Verify { suite, n_max } => {
            cmd_verify(suite.parse::<Suite>()?, n_max, &limits, out)
        }
        Command::Enumerate {
            object,
            n,
            count_only,
            family,
            building_set,
        } => {
            let req = EnumerateRequest {
                object: object.parse::<Object>()?,
                n,
                count_only,
                source: source(family, building_set)?,
                limits,
            };
            cmd_enumerate(&req, out)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli, &mut out).and_then(|()| out.flush().map_err(CliError::from));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("toricg: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
