//! Command line front end: verification suites, orbit growth, Schreier ball
//! export and single actions on cube vertices.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use grigorchuk::checks::{self, default_omegas, run_suite, CheckReport, Status, Suite, SuiteOptions};
use grigorchuk::export::{GraphFormat, SchreierBall};
use grigorchuk::stabilizers::orbit_growth;
use grigorchuk::{CubeVertex, GroupElement, OmegaSequence, Word};

const EXIT_FAIL: u8 = 1;
const EXIT_UNSUPPORTED: u8 = 3;

#[derive(Parser)]
#[command(name = "grigorchuk", version, about = "Grigorchuk groups acting on a CAT(0) cube complex")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification checks, one JSON record per check on stdout.
    Check {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        /// Defining sequence as `preperiod:period`, e.g. `:012`. Repeatable.
        #[arg(long = "omega")]
        omegas: Vec<OmegaSequence>,
        #[arg(long, default_value_t = 10)]
        max_len: usize,
        /// Ray depth for the prefix checks.
        #[arg(long, default_value_t = 12)]
        depth: usize,
        #[arg(long, default_value_t = 2024)]
        seed: u64,
    },
    /// Largest d(v, gv) over words of length at most each l.
    Orbit {
        #[arg(long, default_value = ":012")]
        omega: OmegaSequence,
        #[arg(long, default_value_t = 12)]
        max_len: usize,
        #[arg(long, default_value = "v0")]
        vertex: CubeVertex,
    },
    /// Export the ball of radius r around 0^inf in the Schreier graph.
    Schreier {
        #[arg(long, default_value = ":012")]
        omega: OmegaSequence,
        #[arg(long, default_value_t = 3)]
        radius: usize,
        #[arg(long, value_enum, default_value_t = FormatArg::Dot)]
        format: FormatArg,
    },
    /// Apply a word to a cube vertex.
    Act {
        #[arg(long)]
        omega: OmegaSequence,
        #[arg(long)]
        word: Word,
        #[arg(long, default_value = "v0")]
        vertex: CubeVertex,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    All,
    Prefix,
    Reduction,
    Projections,
    Stab,
    Commensuration,
    Faithful,
    Bound,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::All => Suite::All,
            SuiteArg::Prefix => Suite::Prefix,
            SuiteArg::Reduction => Suite::Reduction,
            SuiteArg::Projections => Suite::Projections,
            SuiteArg::Stab => Suite::Stab,
            SuiteArg::Commensuration => Suite::Commensuration,
            SuiteArg::Faithful => Suite::Faithful,
            SuiteArg::Bound => Suite::Bound,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Dot,
    Jsonl,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Check { suite, omegas, max_len, depth, seed } => {
            let omegas = if omegas.is_empty() { default_omegas() } else { omegas };
            check(suite.into(), &omegas, SuiteOptions { max_len, depth, seed })
        }
        Command::Orbit { omega, max_len, vertex } => match orbit_growth(&omega, &vertex, max_len) {
            Ok(rows) => {
                for row in &rows {
                    println!("{}", json!({"omega": omega, "vertex": vertex, "length": row.length,
                        "max_distance": row.max_distance, "witness": row.witness_word}));
                }
                if let Some(last) = rows.last() {
                    eprintln!("max d(v, gv) for l(g) <= {}: {}", last.length, last.max_distance);
                }
                ExitCode::SUCCESS
            }
            Err(e) => {
                println!("{}", checks::unsupported("orbit", &omega, &e).to_json_line());
                eprintln!("unsupported: {e}");
                ExitCode::from(EXIT_UNSUPPORTED)
            }
        },
        Command::Schreier { omega, radius, format } => {
            let format = match format {
                FormatArg::Dot => GraphFormat::Dot,
                FormatArg::Jsonl => GraphFormat::Jsonl,
            };
            print!("{}", SchreierBall::new(&omega, radius).render(format));
            ExitCode::SUCCESS
        }
        Command::Act { omega, word, vertex } => {
            let g = GroupElement::new(omega.clone(), word);
            let image = vertex.act(&g);
            println!("{}", json!({"omega": omega, "word": g.word().to_string(), "vertex": vertex,
                "image": image, "distance": vertex.distance(&image)}));
            ExitCode::SUCCESS
        }
    }
}

fn check(suite: Suite, omegas: &[OmegaSequence], options: SuiteOptions) -> ExitCode {
    let mut counts = [0usize; 3];
    let mut sink = |report: CheckReport| {
        println!("{}", report.to_json_line());
        let omega = report.omega.as_deref().unwrap_or("-");
        let status = match report.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Unsupported => "UNSUPPORTED",
        };
        eprintln!("{status:<11} {:<22} {omega:<8} {} ms", report.check, report.elapsed_ms);
        counts[report.status as usize] += 1;
    };
    run_suite(suite, omegas, &options, &mut sink);
    let [pass, fail, unsupported] = counts;
    eprintln!("{pass} passed, {fail} failed, {unsupported} unsupported");
    if fail > 0 {
        ExitCode::from(EXIT_FAIL)
    } else if unsupported > 0 {
        ExitCode::from(EXIT_UNSUPPORTED)
    } else {
        ExitCode::SUCCESS
    }
}
