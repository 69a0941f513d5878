use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use spinlab::census::{bfs_census_with, projected_census, CensusOptions, DistanceTable};
use spinlab::properties::spin_algebra;
use spinlab::solver::{
    greedy_solve, optimal_solve, optimal_solve_with_table, restricted_solve_one_two,
    upper_bound_formulas, weight_lower_bound, SolveResult,
};
use spinlab::subgroups::{
    chain_for, classify_type_subsets, full_order, generates, verify_identities,
};
use spinlab::{
    format_word, parse_board, parse_board_with_dims, spin_counts, BoardDims, GeneratorSet,
    SpinError,
};

const CACHE_ENV: &str = "SPINLAB_CACHE_DIR";

#[derive(Parser)]
#[command(
    name = "spinlab",
    version,
    about = "Solve and analyse spin puzzles on rectangular boards"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct DimsArg {
    /// Board size as two numbers, rows then columns.
    #[arg(long, num_args = 2, value_names = ["M", "N"])]
    dims: Vec<usize>,
}

impl DimsArg {
    fn get(&self) -> Result<BoardDims, SpinError> {
        BoardDims::new(self.dims[0], self.dims[1])
    }
}

#[derive(Subcommand)]
enum Command {
    /// Find a word of spins that restores a board.
    Solve {
        /// Board rows separated by '/', e.g. "-5 -4 -9 / -2 -1 -6 / 7 8 -3".
        #[arg(long, conflicts_with = "file", allow_hyphen_values = true)]
        board: Option<String>,
        /// Read the board from a file instead.
        #[arg(long)]
        file: Option<PathBuf>,
        #[arg(long, num_args = 2, value_names = ["M", "N"])]
        dims: Option<Vec<usize>>,
        /// Shortest solution (table descent when a cached census exists).
        #[arg(long, conflicts_with = "restricted")]
        optimal: bool,
        /// Use only 1x1 and 1x2 spins.
        #[arg(long)]
        restricted: bool,
        /// Allowed spin types for --optimal, e.g. "1x2,2x3" or "all".
        #[arg(long, default_value = "all")]
        gens: String,
        /// Distance table to use for --optimal.
        #[arg(long)]
        table: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Breadth-first census of the whole group or of a generated subgroup.
    Census {
        #[command(flatten)]
        dims: DimsArg,
        #[arg(long, default_value = "all")]
        gens: String,
        /// Track how many shortest solutions each board has.
        #[arg(long)]
        unique: bool,
        /// Census of the permutation parts only.
        #[arg(long)]
        projected: bool,
        /// Write the distance table here.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        /// Largest table to allocate, in bytes.
        #[arg(long)]
        memory_budget: Option<u64>,
    },
    /// Order and index of the subgroup generated by some spin types.
    Generates {
        #[command(flatten)]
        dims: DimsArg,
        #[arg(long)]
        gens: String,
    },
    /// Classify all 64 unions of spin types with sides at most 3.
    Classify {
        #[command(flatten)]
        dims: DimsArg,
    },
    /// Check the spin identities and the spin algebra on a board.
    Verify {
        #[command(flatten)]
        dims: DimsArg,
    },
    /// Lower and upper bounds on the number of spins needed.
    Bounds {
        #[command(flatten)]
        dims: DimsArg,
        #[arg(long, default_value = "all")]
        gens: String,
    },
    /// Number of spins of each type.
    Count {
        #[command(flatten)]
        dims: DimsArg,
    },
}

enum Failure {
    Spin(SpinError),
    Verification,
}

impl From<SpinError> for Failure {
    fn from(e: SpinError) -> Self {
        Failure::Spin(e)
    }
}

fn exit_code(e: &SpinError) -> u8 {
    match e {
        SpinError::InvalidDims { .. }
        | SpinError::InvalidPosition(_)
        | SpinError::InvalidRectangle(..)
        | SpinError::Parse(_)
        | SpinError::UnknownSpinType(_)
        | SpinError::EmptySpinType(_)
        | SpinError::DimsMismatch { .. } => 2,
        SpinError::Unsolvable | SpinError::Unreachable => 3,
        SpinError::MemoryBudget { .. } => 4,
        _ => 1,
    }
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("json value"));
}

fn cache_path(dims: BoardDims, gens: &GeneratorSet) -> Option<PathBuf> {
    let dir = std::env::var_os(CACHE_ENV)?;
    Some(Path::new(&dir).join(format!(
        "{}x{}-{:04x}.spnt",
        dims.rows(),
        dims.cols(),
        gens.mask(dims)
    )))
}

#[allow(clippy::too_many_arguments)]
fn solve(
    board: Option<String>,
    file: Option<PathBuf>,
    dims: Option<Vec<usize>>,
    optimal: bool,
    restricted: bool,
    gens: &str,
    table: Option<PathBuf>,
    as_json: bool,
) -> Result<(), Failure> {
    let text = match (board, file) {
        (Some(b), _) => b,
        (None, Some(f)) => fs::read_to_string(f).map_err(SpinError::from)?,
        (None, None) => return Err(SpinError::Parse("give --board or --file".into()).into()),
    };
    let (dims, b) = match dims {
        Some(d) => {
            let dims = BoardDims::new(d[0], d[1])?;
            (dims, parse_board_with_dims(&text, dims)?)
        }
        None => parse_board(&text)?,
    };
    let gens = GeneratorSet::parse(gens, dims)?;
    let result: SolveResult = if optimal {
        let path = table.or_else(|| cache_path(dims, &gens).filter(|p| p.exists()));
        match path {
            Some(p) => optimal_solve_with_table(&DistanceTable::load_for(p, dims, &gens)?, &b)?,
            None => optimal_solve(dims, &b, &gens)?,
        }
    } else if restricted {
        restricted_solve_one_two(dims, &b)
    } else {
        greedy_solve(dims, &b)
    };
    let word = format_word(dims, &result.word);
    if as_json {
        print_json(&json!({
            "word": word,
            "length": result.length,
            "method": result.method,
        }));
    } else {
        println!("{word}");
        println!("length {}", result.length);
    }
    Ok(())
}

fn census(
    dims: BoardDims,
    gens: &str,
    unique: bool,
    projected: bool,
    out: Option<PathBuf>,
    threads: usize,
    memory_budget: Option<u64>,
) -> Result<(), Failure> {
    let gens = GeneratorSet::parse(gens, dims)?;
    if projected {
        print_json(&serde_json::to_value(projected_census(dims, &gens)?).expect("report"));
        return Ok(());
    }
    let mut opts = CensusOptions {
        track_uniqueness: unique,
        threads,
        ..CensusOptions::default()
    };
    if let Some(b) = memory_budget {
        opts.memory_budget = b;
    }
    let (table, report) = bfs_census_with(dims, &gens, &opts)?;
    if let Some(path) = out {
        table.save(path)?;
    }
    if let Some(path) = cache_path(dims, &gens) {
        if let Some(dir) = path.parent() {
            fs::create_dir_all(dir).map_err(SpinError::from)?;
        }
        table.save(path)?;
    }
    print_json(&serde_json::to_value(report).expect("report"));
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Solve {
            board,
            file,
            dims,
            optimal,
            restricted,
            gens,
            table,
            json,
        } => solve(board, file, dims, optimal, restricted, &gens, table, json),
        Command::Census {
            dims,
            gens,
            unique,
            projected,
            out,
            threads,
            memory_budget,
        } => census(
            dims.get()?,
            &gens,
            unique,
            projected,
            out,
            threads,
            memory_budget,
        ),
        Command::Generates { dims, gens } => {
            let dims = dims.get()?;
            let gens = GeneratorSet::parse(&gens, dims)?;
            let order = chain_for(dims, &gens).order();
            let index = full_order(dims.cells()) / &order;
            print_json(&json!({
                "order": order.to_string(),
                "index": index.to_string(),
                "generates": generates(dims, &gens),
            }));
            Ok(())
        }
        Command::Classify { dims } => {
            println!("{}", classify_type_subsets(dims.get()?)?.to_json());
            Ok(())
        }
        Command::Verify { dims } => {
            let dims = dims.get()?;
            let identities = verify_identities(dims);
            let properties = spin_algebra(dims);
            let ok = identities.iter().all(|c| c.passed()) && properties.iter().all(|r| r.passed());
            print_json(&json!({
                "dims": dims.to_string(),
                "identities": identities,
                "properties": properties,
                "passed": ok,
            }));
            if ok {
                Ok(())
            } else {
                Err(Failure::Verification)
            }
        }
        Command::Bounds { dims, gens } => {
            let dims = dims.get()?;
            let gens = GeneratorSet::parse(&gens, dims)?;
            let mut v = serde_json::to_value(upper_bound_formulas(dims)).expect("bounds");
            v["gens"] = json!(gens.to_string());
            v["gens_weight_lower"] = json!(weight_lower_bound(dims, &gens)?);
            print_json(&v);
            Ok(())
        }
        Command::Count { dims } => {
            print_json(&serde_json::to_value(spin_counts(dims.get()?)).expect("counts"));
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Spin(e)) => {
            eprintln!("spinlab: {e}");
            ExitCode::from(exit_code(&e))
        }
        Err(Failure::Verification) => {
            eprintln!("spinlab: verification failed");
            ExitCode::FAILURE
        }
    }
}
