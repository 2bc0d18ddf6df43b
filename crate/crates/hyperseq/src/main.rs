//! Command-line surface: sequence generation, identity verification,
//! tiling enumeration, convergence checks, strategy benchmarking and OEIS
//! b-file cross-checking.
//!
//! Exit codes: 0 on success/all-pass, 1 on verification failures or
//! mismatches, 2 on usage or parse errors.

use std::fs;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use hyperseq::bfile::{self, SequenceKind};
use hyperseq::identity::{self, Context, SuiteBounds};
use hyperseq::sequence::{ops, parse_eps, Engine, Nat, PhiSide};
use hyperseq::tiling;

#[derive(Parser)]
#[command(name = "hyperseq", version, about = "Exact hyperfibonacci/hyperlucas toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Fib,
    Lucas,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
    Bfile,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Strategy {
    Cumsum,
    Rec,
    Poly,
    Closed,
    Binom,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a sequence range in CSV, JSON-lines or b-file form.
    Gen {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        r: u32,
        #[arg(long)]
        from: u64,
        #[arg(long)]
        to: u64,
        #[arg(long, value_enum)]
        format: Format,
        #[arg(long, value_enum, default_value = "cumsum")]
        strategy: Strategy,
    },
    /// Run the identity suite (or one identity) over bounded ranges.
    Verify {
        #[arg(long)]
        identity: Option<String>,
        #[arg(long)]
        n_max: u64,
        #[arg(long)]
        r_max: u32,
        #[arg(long)]
        oracle_m_max: u64,
        #[arg(long, default_value_t = 5)]
        max_counterexamples: usize,
    },
    /// Enumerate or count board/bracelet tilings.
    Enumerate {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        min_dominoes: u64,
        /// Stream every tiling as text instead of printing the count.
        #[arg(long)]
        list: bool,
    },
    /// Exact golden-ratio gap check for a consecutive-term ratio.
    Ratio {
        #[arg(long)]
        r: u32,
        #[arg(long)]
        n: u64,
        /// Exact rational epsilon, NUM/DEN.
        #[arg(long)]
        eps: String,
    },
    /// Partition tilings by last tile (board) or phase (bracelet).
    Classify {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        r: u32,
    },
    /// Cross-check a generation against a local OEIS b-file.
    OeisCheck {
        #[arg(long)]
        file: String,
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        r: u32,
        /// Our index n maps to reference index n + shift.
        #[arg(long, allow_hyphen_values = true)]
        shift: i64,
    },
    /// Compare computation strategies; informational only.
    Bench {
        #[arg(long)]
        r_max: u32,
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = 3)]
        repeat: u32,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Target {
    /// Board length m.
    #[arg(long)]
    board: Option<u64>,
    /// Bracelet length m.
    #[arg(long)]
    bracelet: Option<u64>,
}

fn enum_cap() -> Result<u64, String> {
    match std::env::var("HYPERSEQ_ENUM_CAP") {
        Ok(v) => v
            .trim()
            .parse::<u64>()
            .map_err(|e| format!("bad HYPERSEQ_ENUM_CAP `{v}`: {e}")),
        Err(_) => Ok(tiling::DEFAULT_ENUM_CAP),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, String> {
    let engine = Engine::standard();
    match command {
        Command::Gen {
            kind,
            r,
            from,
            to,
            format,
            strategy,
        } => {
            if to < from {
                return Err(format!("--to {to} is below --from {from}"));
            }
            let values = generate(&engine, kind, r, from, to, strategy)?;
            let mut out = String::new();
            if format == Format::Csv {
                out.push_str("n,value\n");
            }
            for (n, v) in (from..=to).zip(values.iter()) {
                match format {
                    Format::Csv => out.push_str(&format!("{n},{v}\n")),
                    // big values always as decimal strings in JSON
                    Format::Json => out.push_str(&format!("{{\"n\":{n},\"value\":\"{v}\"}}\n")),
                    Format::Bfile => out.push_str(&format!("{n} {v}\n")),
                }
            }
            print!("{out}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            identity: only,
            n_max,
            r_max,
            oracle_m_max,
            max_counterexamples,
        } => {
            let ctx = Context {
                engine,
                enum_cap: enum_cap()?,
            };
            let bounds = SuiteBounds {
                n_max,
                r_max,
                oracle_m_max,
                max_counterexamples,
            };
            let report = identity::run_suite_filtered(&ctx, &bounds, only.as_deref())
                .map_err(|e| e.to_string())?;
            print!("{}", report.render_machine());
            Ok(if report.all_passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Enumerate {
            target,
            min_dominoes,
            list,
        } => {
            let cap = enum_cap()?;
            match (target.board, target.bracelet, list) {
                (Some(m), None, true) => {
                    for t in tiling::enumerate_board_with_cap(m, min_dominoes, cap)
                        .map_err(|e| e.to_string())?
                    {
                        println!("{}", t.render());
                    }
                }
                (Some(m), None, false) => {
                    println!("{}", tiling::count_board(m, min_dominoes));
                }
                (None, Some(m), true) => {
                    for b in tiling::enumerate_bracelet_with_cap(m, min_dominoes, cap)
                        .map_err(|e| e.to_string())?
                    {
                        println!("{}", b.render());
                    }
                }
                (None, Some(m), false) => {
                    let count = tiling::count_bracelet(m, min_dominoes);
                    if count.convention {
                        eprintln!("note: m = 0 count is a bookkeeping convention");
                    }
                    println!("{}", count.value);
                }
                _ => unreachable!("clap group enforces exactly one target"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Ratio { r, n, eps } => {
            let (num, den) = parse_eps(&eps).map_err(|e| e.to_string())?;
            let (within, gap) = engine
                .ratio_gap_within(r, n, &num, &den)
                .map_err(|e| e.to_string())?;
            let side = match gap.side {
                PhiSide::BelowPhi => "below_phi",
                PhiSide::AbovePhi => "above_phi",
            };
            let verdict = if within { "pass" } else { "fail" };
            println!("{}/{} {side} {verdict}", gap.numerator, gap.denominator);
            Ok(if within {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Classify { target, r } => {
            let cap = enum_cap()?;
            match (target.board, target.bracelet) {
                (Some(m), None) => {
                    let c = tiling::classify_board_by_last_tile_with_cap(m, r, cap)
                        .map_err(|e| e.to_string())?;
                    println!("square_ending {}", c.square_ending);
                    println!("exactly_r_domino_ending {}", c.exactly_r_domino_ending);
                    println!(
                        "at_least_r_plus_1_domino_ending {}",
                        c.at_least_r_plus_1_domino_ending
                    );
                    println!("total {}", c.total);
                }
                (None, Some(m)) => {
                    let c = tiling::classify_bracelet_by_phase_with_cap(m, r, cap)
                        .map_err(|e| e.to_string())?;
                    println!("in_phase {}", c.in_phase);
                    println!("out_of_phase_exactly_r {}", c.out_of_phase_exactly_r);
                    println!(
                        "out_of_phase_at_least_r_plus_1 {}",
                        c.out_of_phase_at_least_r_plus_1
                    );
                    println!("total {}", c.total);
                    for (k, count) in &c.out_of_phase_histogram {
                        println!("out_of_phase_dominoes {k} {count}");
                    }
                }
                _ => unreachable!("clap group enforces exactly one target"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::OeisCheck {
            file,
            kind,
            r,
            shift,
        } => {
            let text = fs::read_to_string(&file).map_err(|e| format!("{file}: {e}"))?;
            let entries = bfile::parse_bfile(&text).map_err(|e| format!("{file}: {e}"))?;
            let kind = match kind {
                Kind::Fib => SequenceKind::Fib,
                Kind::Lucas => SequenceKind::Lucas,
            };
            let report = bfile::compare_with_reference(&engine, kind, r, shift, &entries)
                .map_err(|e| e.to_string())?;
            println!(
                "matched {} over n {}..{}",
                report.matched, report.range.0, report.range.1
            );
            if let Some(mm) = &report.first_mismatch {
                println!(
                    "mismatch at n {}: expected {} got {}",
                    mm.n, mm.expected, mm.actual
                );
                return Ok(ExitCode::from(1));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Bench { r_max, n, repeat } => {
            bench(&engine, r_max, n, repeat.max(1))?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn generate(
    engine: &Engine,
    kind: Kind,
    r: u32,
    from: u64,
    to: u64,
    strategy: Strategy,
) -> Result<Vec<Nat>, String> {
    let slice_row = |row: Vec<Nat>| row[from as usize..].to_vec();
    let result = match (kind, strategy) {
        (Kind::Fib, Strategy::Cumsum) => engine.hyper_fib_cumsum(r, to).map(slice_row),
        (Kind::Fib, Strategy::Poly) => engine.hyper_fib_poly_rec(r, to).map(slice_row),
        (Kind::Fib, Strategy::Rec) => (from..=to)
            .map(|n| engine.hyper_fib_rec(r, n))
            .collect::<Result<Vec<_>, _>>(),
        (Kind::Fib, Strategy::Closed) => (from..=to)
            .map(|n| engine.hyper_fib_closed(r, n))
            .collect::<Result<Vec<_>, _>>(),
        (Kind::Fib, Strategy::Binom) => (from..=to)
            .map(|n| engine.hyper_fib_binom_sum(r, n))
            .collect::<Result<Vec<_>, _>>(),
        (Kind::Lucas, Strategy::Cumsum) => engine.hyper_lucas_cumsum(r, to).map(slice_row),
        (Kind::Lucas, Strategy::Closed) => (from..=to)
            .map(|n| engine.hyper_lucas_closed(r, n))
            .collect::<Result<Vec<_>, _>>(),
        (Kind::Lucas, _) => {
            return Err("lucas supports only the cumsum and closed strategies".into())
        }
    };
    result.map_err(|e| e.to_string())
}

fn bench(engine: &Engine, r_max: u32, n: u64, repeat: u32) -> Result<(), String> {
    println!("strategy r n repeat avg_ns big_ops");
    for r in 0..=r_max {
        for strategy in [
            Strategy::Cumsum,
            Strategy::Rec,
            Strategy::Poly,
            Strategy::Closed,
            Strategy::Binom,
        ] {
            let name = match strategy {
                Strategy::Cumsum => "cumsum",
                Strategy::Rec => "rec",
                Strategy::Poly => "poly",
                Strategy::Closed => "closed",
                Strategy::Binom => "binom",
            };
            ops::reset();
            let start = Instant::now();
            for _ in 0..repeat {
                let v = match strategy {
                    Strategy::Cumsum => engine
                        .hyper_fib_cumsum(r, n)
                        .map(|mut row| row.pop().expect("nonempty")),
                    Strategy::Rec => engine.hyper_fib_rec(r, n),
                    Strategy::Poly => engine
                        .hyper_fib_poly_rec(r, n)
                        .map(|mut row| row.pop().expect("nonempty")),
                    Strategy::Closed => engine.hyper_fib_closed(r, n),
                    Strategy::Binom => engine.hyper_fib_binom_sum(r, n),
                };
                v.map_err(|e| e.to_string())?;
            }
            let avg = start.elapsed().as_nanos() / u128::from(repeat);
            println!("{name} {r} {n} {repeat} {avg} {}", ops::count() / u64::from(repeat));
        }
    }
    Ok(())
}
