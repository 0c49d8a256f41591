//! The `sgw` command-line front end.
//!
//! Exit codes: 0 success, 1 when `reproduce-paper` finds a mismatch, 2 for
//! usage and domain errors, 3 when localization contradicts itself.

mod output;

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::error::Error;
use crate::localize::{self, Strategy, DEFAULT_SAMPLES, DEFAULT_SEED};
use crate::point_sgw::sgw_point;
use crate::quantum::{QElement, QuantumRing};
use crate::reference::{self, Status};
use crate::taut0::integrate_chain;

use output::{Emitter, Record};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum StrategyArg {
    #[default]
    Evaluate,
    Symbolic,
}

#[derive(Debug, Parser)]
#[command(name = "sgw", version, about = "Exact super Gromov-Witten invariants of a point and of P^n")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Invariant of a point target with k marked points.
    Point {
        #[arg(long)]
        k: u32,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Degree-one invariant of P^n with insertions Lambda^a1, .., Lambda^ak.
    Invariant {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        #[arg(long, value_delimiter = ',', required = true)]
        classes: Vec<u32>,
        #[arg(long, value_enum, default_value_t)]
        strategy: StrategyArg,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
        #[arg(long, env = "SGW_SEED", default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Also print every fixed-locus contribution.
        #[arg(long)]
        trace: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Integral over M_(0,k) of the chain monomial with exponents i4,..,ik.
    Taut {
        #[arg(long)]
        k: u32,
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        exps: Vec<u32>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Quantum products of P^n to first order in q.
    Quantum {
        #[arg(long)]
        n: u32,
        #[arg(long, env = "SGW_SEED", default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Recompute every published value and print a PASS/FAIL/SKIP matrix.
    ReproducePaper {
        #[arg(long, env = "SGW_SEED", default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

/// Runs the command line of the current process.
pub fn run() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

/// Runs `args` (program name first), writing to `out` and `err`; returns
/// the exit code.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn strategy(arg: StrategyArg, samples: usize, seed: u64) -> Strategy {
    match arg {
        StrategyArg::Evaluate => Strategy::Evaluate { samples, seed },
        StrategyArg::Symbolic => Strategy::Symbolic,
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32, Error> {
    match command {
        Command::Point { k, format } => {
            let x = sgw_point(k)?;
            let mut em = Emitter::new(out, format);
            em.record(&Record::new("point", json!({ "k": k }), json!(x)), &x.to_string())?;
            Ok(0)
        }
        Command::Invariant { n, k, classes, strategy: arg, samples, seed, trace, format } => {
            if classes.len() != k as usize {
                return Err(Error::Domain(format!("--k {k} but {} classes given", classes.len())));
            }
            let e = localize::evaluate(n, &classes, strategy(arg, samples, seed), trace)?;
            let mut diagnostics = json!({ "strategy": match arg {
                StrategyArg::Evaluate => "evaluate",
                StrategyArg::Symbolic => "symbolic",
            }});
            if arg == StrategyArg::Evaluate {
                diagnostics["seed"] = json!(seed);
                diagnostics["samples"] = json!(e.samples);
            }
            let inputs = json!({ "n": n, "d": 1, "k": k, "classes": classes });
            let record = Record::new("invariant", inputs, json!(e.invariant)).with_diagnostics(diagnostics);
            let mut text = e.invariant.to_string();
            if trace {
                for s in &e.samples {
                    let tau: Vec<String> = s.tau.iter().map(ToString::to_string).collect();
                    text.push_str(&format!("\n# tau = ({}), sum = {}", tau.join(", "), s.total));
                    for t in &s.terms {
                        text.push_str(&format!("\n#   {} : {}", t.graph, t.value));
                    }
                }
            }
            Emitter::new(out, format).record(&record, &text)?;
            Ok(0)
        }
        Command::Taut { k, exps, format } => {
            let v = integrate_chain(k, &exps)?;
            let record = Record::new("taut", json!({ "k": k, "exps": exps }), json!({ "value": v.to_string() }));
            Emitter::new(out, format).record(&record, &v.to_string())?;
            Ok(0)
        }
        Command::Quantum { n, seed, format } => {
            let ring = QuantumRing::with_strategy(n, Strategy::Evaluate { samples: DEFAULT_SAMPLES, seed })?;
            let mut lines = Vec::new();
            let mut products = Vec::new();
            for a in 0..=n {
                for b in a..=n {
                    let p = ring.star(&QElement::basis(n, a)?, &QElement::basis(n, b)?)?;
                    lines.push(format!("{} * {} = {p}", output::power_text(a), output::power_text(b)));
                    products.push(json!({ "a": a, "b": b, "product": p.to_string() }));
                }
            }
            let table = ring.structure_table();
            let text = format!("{}\n\nthree-point invariants <L^a, L^b, L^c>, degree one\n{}", lines.join("\n"), table);
            let record =
                Record::new("quantum", json!({ "n": n }), json!({ "products": products, "table": table }));
            Emitter::new(out, format).record(&record, text.trim_end())?;
            Ok(0)
        }
        Command::ReproducePaper { seed, format } => {
            let strategy = Strategy::Evaluate { samples: DEFAULT_SAMPLES, seed };
            let mut outcomes = Vec::new();
            for entry in reference::published() {
                outcomes.push(reference::verify(&entry, strategy)?);
            }
            output::reproduction(out, format, &outcomes)?;
            let failed = outcomes.iter().any(|o| o.status == Status::Fail);
            Ok(if failed { 1 } else { 0 })
        }
    }
}
