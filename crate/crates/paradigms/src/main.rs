//! Command-line front end: the two classic demos plus a generic runner
//! for JSON network descriptions.
//!
//! Exit codes: 0 success, 1 usage or input errors, 2 inconsistent
//! constraint system, 3 run budget exhausted.

use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use paradigms::dataflow::load_network;
use paradigms::{build_hamming, circle_parabola_system, Network, PropagationStatus};

#[derive(Parser)]
#[command(
    name = "paradigms",
    version,
    about = "Dataflow and interval-constraint demos",
    propagate_version = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print Hamming numbers (no prime factors other than 2, 3, 5) from
    /// the classic dataflow network
    Hamming {
        /// How many numbers to print
        #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
        /// Capacity of every pipe in the network
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u64).range(1..))]
        capacity: u64,
        /// Node scheduling strategy
        #[arg(long, value_enum, default_value_t = SchedulerArg::Roundrobin)]
        scheduler: SchedulerArg,
    },
    /// Intersect the unit circle with the parabola y = x^2 by interval
    /// constraint propagation
    CircleParabola {
        /// Add the constraint 0.5 <= x and enclose the single remaining
        /// solution by branch-and-prune search
        #[arg(long)]
        positive_x: bool,
        /// Target width for solution intervals (with --positive-x)
        #[arg(long, default_value_t = 1e-12)]
        eps: f64,
    },
    /// Run a dataflow network described by a JSON file and print what its
    /// probes observed
    RunNetwork {
        /// Path to the network description
        path: PathBuf,
        /// Scheduler sweeps (round-robin) or firings (blocked-set) to run
        #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
        /// Node scheduling strategy
        #[arg(long, value_enum, default_value_t = SchedulerArg::Roundrobin)]
        scheduler: SchedulerArg,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SchedulerArg {
    Roundrobin,
    Blockedset,
}

enum CmdError {
    Usage(String),
    Inconsistent(String),
    BudgetExhausted(String),
}

impl CmdError {
    fn code(&self) -> u8 {
        match self {
            CmdError::Usage(_) => 1,
            CmdError::Inconsistent(_) => 2,
            CmdError::BudgetExhausted(_) => 3,
        }
    }
}

impl fmt::Display for CmdError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CmdError::Usage(m) | CmdError::Inconsistent(m) | CmdError::BudgetExhausted(m) => {
                write!(f, "{m}")
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // --help and --version print to stdout and succeed; anything
            // else is a usage error
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Hamming {
            count,
            capacity,
            scheduler,
        } => cmd_hamming(count, capacity as usize, scheduler),
        Command::CircleParabola { positive_x, eps } => cmd_circle_parabola(positive_x, eps),
        Command::RunNetwork {
            path,
            count,
            scheduler,
        } => cmd_run_network(&path, count, scheduler),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}

fn observed(net: &Network) -> usize {
    net.observations("p").map_or(0, <[i64]>::len)
}

fn cmd_hamming(count: u64, capacity: usize, scheduler: SchedulerArg) -> Result<(), CmdError> {
    let mut net = build_hamming(capacity).map_err(|e| CmdError::Usage(e.to_string()))?;
    let sweep_budget = 100 * count;
    match scheduler {
        SchedulerArg::Roundrobin => {
            let mut sweeps = 0;
            while (observed(&net) as u64) < count && sweeps < sweep_budget {
                net.run_round_robin(1);
                sweeps += 1;
            }
        }
        SchedulerArg::Blockedset => {
            let nodes = net.node_count() as u64;
            let firing_budget = sweep_budget * nodes;
            let mut used = 0;
            while (observed(&net) as u64) < count && used < firing_budget {
                let stats = net.run_blocked_set(nodes.min(firing_budget - used));
                if stats.firings == 0 {
                    break; // nothing can fire any more
                }
                used += stats.firings;
            }
        }
    }
    let obs = net.observations("p").expect("the network has probe p");
    if (obs.len() as u64) < count {
        return Err(CmdError::BudgetExhausted(format!(
            "produced only {} of {} items within the run budget",
            obs.len(),
            count
        )));
    }
    for v in &obs[..count as usize] {
        println!("{v}");
    }
    Ok(())
}

fn cmd_circle_parabola(positive_x: bool, eps: f64) -> Result<(), CmdError> {
    if !(eps > 0.0) {
        return Err(CmdError::Usage(format!(
            "--eps must be positive, got {eps}"
        )));
    }
    let (mut store, x, y) = circle_parabola_system(positive_x);
    if positive_x {
        let boxes = store
            .solve(&[x, y], eps)
            .map_err(|e| CmdError::Usage(e.to_string()))?;
        if boxes.is_empty() {
            return Err(CmdError::Inconsistent(
                "the constraint system has no solution".to_owned(),
            ));
        }
        for solution in &boxes {
            println!("x: {}", solution[0]);
            println!("y: {}", solution[1]);
        }
    } else {
        let outcome = store.propagate_round_robin(1000);
        if outcome.status == PropagationStatus::Inconsistent {
            return Err(CmdError::Inconsistent(
                "propagation emptied a variable's domain".to_owned(),
            ));
        }
        println!("x: {}", store.value(x));
        println!("y: {}", store.value(y));
    }
    Ok(())
}

fn cmd_run_network(
    path: &std::path::Path,
    count: u64,
    scheduler: SchedulerArg,
) -> Result<(), CmdError> {
    let mut net = load_network(path).map_err(|e| CmdError::Usage(e.to_string()))?;
    match scheduler {
        SchedulerArg::Roundrobin => net.run_round_robin(count),
        SchedulerArg::Blockedset => net.run_blocked_set(count),
    };
    let probes = net.probe_names();
    if probes.len() == 1 {
        for v in net.observations(probes[0]).unwrap() {
            println!("{v}");
        }
    } else {
        for name in probes {
            println!("{name}:");
            for v in net.observations(name).unwrap() {
                println!("{v}");
            }
        }
    }
    Ok(())
}
