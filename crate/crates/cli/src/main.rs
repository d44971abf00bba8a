use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use heron_cli::commands::{self, FamilyResult, Method};
use heron_cli::error::exit;
use heron_cli::limits::max_input;
use heron_cli::output::OutputEnvelope;
use heron_cli::verify::Suite;
use heron_cli::CliError;
use heron_core::arith::{set_factor_seed, DEFAULT_FACTOR_SEED};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "heron", version, about = "Heron triangles with two prescribed sides")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    /// Seed for randomized factorization.
    #[arg(long, global = true, default_value_t = DEFAULT_FACTOR_SEED)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Example1,
    Prop28,
}

#[derive(Subcommand)]
enum Command {
    /// Count third sides c making (a, b, c) a Heron triangle.
    Count {
        #[arg(long)]
        a: u64,
        #[arg(long)]
        b: u64,
        #[arg(long, value_enum, default_value_t = Method::Oracle)]
        method: Method,
    },
    /// Classify a pair of primes and solve the side equations.
    Classify {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        q: u64,
    },
    /// Build a member of a parametric family.
    Family {
        #[arg(long = "type", value_enum)]
        kind: Family,
        #[arg(long, required_if_eq("kind", "example1"))]
        s: Option<u64>,
        #[arg(long, required_if_eq("kind", "example1"))]
        t: Option<u64>,
        #[arg(long, required_if_eq("kind", "prop28"))]
        i: Option<u64>,
        #[arg(long, required_if_eq("kind", "prop28"))]
        j: Option<u64>,
        #[arg(long, required_if_eq("kind", "prop28"))]
        k: Option<u64>,
        #[arg(long, required_if_eq("kind", "prop28"))]
        l: Option<u64>,
    },
    /// Count H(a, b) over the grid 1..=max and fit the growth exponent.
    Survey {
        #[arg(long)]
        max: u64,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Directory receiving survey.csv and scaling.json.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Grid sizes for the scaling report, comma separated.
        #[arg(long, value_delimiter = ',')]
        xs: Option<Vec<u64>>,
    },
    /// Run invariant suites up to the given scale.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long)]
        max: u64,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Count { .. } => "count",
            Command::Classify { .. } => "classify",
            Command::Family { .. } => "family",
            Command::Survey { .. } => "survey",
            Command::Verify { .. } => "verify",
        }
    }

    fn input(&self) -> serde_json::Value {
        use serde_json::json;
        match self {
            Command::Count { a, b, method } => json!({ "a": a, "b": b, "method": method }),
            Command::Classify { p, q } => json!({ "p": p, "q": q }),
            Command::Family { kind: Family::Example1, s, t, .. } => json!({ "type": "example1", "s": s, "t": t }),
            Command::Family { kind: Family::Prop28, i, j, k, l, .. } => {
                json!({ "type": "prop28", "i": i, "j": j, "k": k, "l": l })
            }
            Command::Survey { max, workers, out, xs } => {
                json!({ "max": max, "workers": workers, "out": out, "xs": xs })
            }
            Command::Verify { suite, max } => json!({ "suite": suite, "max": max }),
        }
    }
}

struct Printer {
    format: Format,
    command: &'static str,
    input: serde_json::Value,
    start: Instant,
}

impl Printer {
    fn emit<T: Serialize>(&self, result: T, text: impl FnOnce(&T) -> String) -> Result<(), CliError> {
        let mut out = io::stdout().lock();
        match self.format {
            Format::Text => write!(out, "{}", text(&result))?,
            Format::Json => {
                let envelope = OutputEnvelope {
                    command: self.command.to_string(),
                    input: self.input.clone(),
                    result,
                    elapsed_ms: self.start.elapsed().as_secs_f64() * 1e3,
                };
                serde_json::to_writer_pretty(&mut out, &envelope)?;
                writeln!(out)?;
            }
        }
        Ok(())
    }
}

fn join(xs: &[u64]) -> String {
    xs.iter().map(u64::to_string).collect::<Vec<_>>().join(", ")
}

fn run(cli: Cli) -> Result<i32, CliError> {
    set_factor_seed(cli.seed);
    let ceiling = max_input()?;
    let printer =
        Printer { format: cli.format, command: cli.command.name(), input: cli.command.input(), start: Instant::now() };

    match cli.command {
        Command::Count { a, b, method } => {
            let h = commands::count(a, b, method, ceiling)?;
            printer.emit(h, |h| format!("H({}, {}) = {}\nc = [{}]\n", h.a, h.b, h.count(), join(&h.third_sides)))?;
        }
        Command::Classify { p, q } => {
            let c = commands::classify(p, q, ceiling)?;
            printer.emit(c, |c| {
                let mut s =
                    format!("({}, {}): {}\nH = {}\nc = [{}]\n", c.p, c.q, c.tag.as_str(), c.h, join(&c.third_sides));
                if let Some(set) = &c.solutions {
                    for (eq, x) in &set.solutions {
                        match x {
                            Some(x) => s += &format!("  eq{eq}: {x}\n"),
                            None => s += &format!("  eq{eq}: -\n"),
                        }
                    }
                }
                s
            })?;
        }
        Command::Family { kind, s, t, i, j, k, l } => {
            let result = match kind {
                Family::Example1 => commands::family_example(s.unwrap(), t.unwrap())?,
                Family::Prop28 => commands::family_prop(i.unwrap(), j.unwrap(), k.unwrap(), l.unwrap())?,
            };
            printer.emit(result, |r| match r {
                FamilyResult::Example1 { member: Some(m), .. } => {
                    format!("({}, {}, {})\narea {}\n", m.p, m.q, m.x, m.certificate.area)
                }
                FamilyResult::Prop28 {
                    outcome: Some(heron_core::prime_case::Prop28Outcome::Member { p, q, x5, x7, certificates }),
                    ..
                } => {
                    format!("({p}, {q}, {x5}, {x7})\nareas {} {}\n", certificates[0].area, certificates[1].area)
                }
                FamilyResult::Prop28 {
                    outcome: Some(heron_core::prime_case::Prop28Outcome::Degenerate { p, q, x5, x7 }),
                    ..
                } => {
                    format!("degenerate ({p}, {q}, {x5}, {x7})\nno family member\n")
                }
                _ => "no family member\n".to_string(),
            })?;
        }
        Command::Survey { max, workers, out, xs } => {
            let run = commands::survey(max, workers, xs, out.as_deref(), ceiling)?;
            printer.emit(run.summary, |s| {
                let mut text = format!("x = {}\ntotal {}\nzero fraction {}/{}\n", s.x, s.total, s.zero_cells, s.cells);
                if let Some(r) = &s.report {
                    text += &format!("xs [{}]\nS [{}]\n", join(&r.xs), join(&r.s_values));
                    match r.exponent {
                        Some(e) => text += &format!("exponent {e:.4}\n"),
                        None => text += "exponent undefined\n",
                    }
                }
                for path in s.csv_path.iter().chain(&s.report_path) {
                    text += &format!("wrote {}\n", path.display());
                }
                text
            })?;
        }
        Command::Verify { suite, max } => {
            let text = printer.format == Format::Text;
            if max == 0 {
                eprintln!("warning: max = 0, every check passes vacuously");
            }
            let report = commands::verify(suite, max, |o| {
                if text {
                    let status = if o.passed { "PASS" } else { "FAIL" };
                    println!("{status}  {}: {}", o.suite, o.name);
                    if let Some(d) = &o.detail {
                        println!("      counterexample: {d}");
                    }
                }
            });
            let passed = report.passed;
            if !text {
                printer.emit(report, |_| String::new())?;
            }
            if !passed {
                return Ok(exit::VERIFICATION);
            }
        }
    }
    Ok(exit::OK)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { exit::INVALID_INPUT } else { exit::OK };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
