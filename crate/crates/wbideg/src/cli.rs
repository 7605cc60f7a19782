//! Command-line front end. [`run`] takes the full argument vector and
//! returns what to print and the exit code, so it can be driven in-process.

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use wbideg_core::harness::{roundtrip_suite, verify_theorem_main, GeneratorPool};
use wbideg_core::{
    decompose_bounded, enumerate_z, invert_map_bounded, member, parse_poly, realize, Bidegree,
    DecomposeError, PolyMap, VerificationReport, WDeg, Weight, DEFAULT_MAX_DEGREE,
};

use crate::json;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NOT_AUTOMORPHISM: i32 = 3;
pub const EXIT_NOT_REALIZABLE: i32 = 4;
pub const EXIT_DEGREE_OVERFLOW: i32 = 5;

#[derive(Debug, Parser)]
#[command(
    name = "wbideg",
    version,
    about = "Weighted bidegrees of plane polynomial automorphisms"
)]
struct Cli {
    #[command(flatten)]
    config: CliConfig,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Debug, Args)]
pub struct CliConfig {
    /// Weights as "w1,w2".
    #[arg(short = 'w', long = "weights", global = true, default_value = "1,1", value_parser = parse_weight)]
    pub weights: Weight,
    #[arg(long, global = true, default_value_t = 20, value_parser = clap::value_parser!(u64).range(1..))]
    pub bound: u64,
    #[arg(long, global = true, value_enum, default_value_t = Output::Text)]
    pub output: Output,
    /// Largest total degree any composition may reach.
    #[arg(long, global = true, env = "WBIDEG_MAX_DEGREE", default_value_t = DEFAULT_MAX_DEGREE)]
    pub max_degree: u32,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Text,
    Json,
}

#[derive(Debug, Args)]
struct MapArgs {
    /// First component.
    #[arg(long, allow_hyphen_values = true)]
    f1: String,
    /// Second component.
    #[arg(long, allow_hyphen_values = true)]
    f2: String,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Weighted degree of a polynomial.
    Wdeg {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Weighted bidegree of a map.
    Wmdeg(MapArgs),
    /// Whether (d1, d2) is an achievable weighted bidegree.
    Member { d1: u64, d2: u64 },
    /// Every achievable weighted bidegree with entries up to --bound.
    Enumerate,
    /// A word, in application order, realizing (d1, d2).
    Realize { d1: u64, d2: u64 },
    /// Normal form of a map, in application order.
    Decompose(MapArgs),
    /// Length of a map's normal form.
    Length(MapArgs),
    /// Inverse of a map.
    Invert(MapArgs),
    /// Check achievable bidegrees on the desk pool against the prediction.
    Verify,
    /// Decompose and invert seeded random words from the desk pool.
    Roundtrip {
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
}

fn parse_weight(s: &str) -> Result<Weight, String> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| String::from("expected \"w1,w2\""))?;
    let entry = |t: &str| t.trim().parse::<u64>().map_err(|e| format!("{t:?}: {e}"));
    Weight::new(entry(a)?, entry(b)?).map_err(|e| e.to_string())
}

/// What a run printed and how it ended.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn error(code: i32, stdout: String, stderr: String) -> Self {
        Outcome {
            code,
            stdout,
            stderr,
        }
    }
}

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome::error(EXIT_USAGE, String::new(), text)
            } else {
                Outcome::ok(text)
            };
        }
    };
    execute(&cli.config, &cli.command)
}

fn usage(message: impl std::fmt::Display) -> Outcome {
    Outcome::error(EXIT_USAGE, String::new(), format!("error: {message}\n"))
}

fn read_map(args: &MapArgs) -> Result<PolyMap, Outcome> {
    let f1 = parse_poly(&args.f1).map_err(|e| usage(format_args!("--f1: {e}")))?;
    let f2 = parse_poly(&args.f2).map_err(|e| usage(format_args!("--f2: {e}")))?;
    Ok(PolyMap::new(f1, f2))
}

fn positive_bidegree(d1: u64, d2: u64) -> Result<Bidegree, Outcome> {
    if d1 == 0 || d2 == 0 {
        return Err(usage("bidegree entries must be positive"));
    }
    Ok(Bidegree::new(d1, d2))
}

fn decompose_failure(e: DecomposeError, output: Output) -> Outcome {
    match e {
        DecomposeError::NotAutomorphism(reason) => {
            let stdout = match output {
                Output::Text => format!("not an automorphism: {}\n", reason.as_str()),
                Output::Json => json::render(&json!({
                    "error": "not-automorphism",
                    "reason": reason.as_str(),
                })),
            };
            Outcome::error(EXIT_NOT_AUTOMORPHISM, stdout, String::new())
        }
        DecomposeError::DegreeOverflow(e) => {
            Outcome::error(EXIT_DEGREE_OVERFLOW, String::new(), format!("error: {e}\n"))
        }
    }
}

fn wdeg_text(d: WDeg) -> String {
    d.to_string()
}

fn report_outcome(report: &VerificationReport, output: Output) -> Outcome {
    let stdout = match output {
        Output::Json => json::render(&json::report(report)),
        Output::Text => report_text(report),
    };
    let code = if report.pass() { EXIT_OK } else { EXIT_FAILURE };
    Outcome::error(code, stdout, String::new())
}

fn report_text(r: &VerificationReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{}", if r.pass() { "pass" } else { "FAIL" });
    if let Some(w) = r.weight {
        let _ = writeln!(out, "weight: {w}");
    }
    if let Some(b) = r.bound {
        let _ = writeln!(out, "bound: {b}");
    }
    if let Some(s) = r.seed {
        let _ = writeln!(out, "seed: {s}");
    }
    if let Some(rng) = r.rng {
        let _ = writeln!(out, "rng: {rng}");
    }
    let _ = writeln!(out, "words checked: {}", r.words_checked);
    let _ = writeln!(out, "words skipped: {}", r.words_skipped);
    if r.weight.is_some() {
        let _ = writeln!(out, "achieved: {}", r.achieved.len());
        let _ = writeln!(out, "predicted: {}", r.predicted.len());
        let _ = writeln!(out, "missing: {}", set_text(&r.missing));
        let _ = writeln!(out, "extraneous: {}", set_text(&r.extraneous));
    }
    let _ = writeln!(out, "failures: {}", r.failures.len());
    for f in &r.failures {
        let word = serde_json::to_string(&json::word(&f.word)).expect("plain data");
        let _ = writeln!(out, "  {}: {} in {}", f.check.as_str(), f.detail, word);
    }
    out
}

fn set_text(set: &std::collections::BTreeSet<Bidegree>) -> String {
    if set.is_empty() {
        return String::from("none");
    }
    set.iter()
        .map(|d| d.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn execute(cfg: &CliConfig, command: &Command) -> Outcome {
    let w = cfg.weights;
    let out = cfg.output;
    let result: Result<Outcome, Outcome> = (|| {
        Ok(match command {
            Command::Wdeg { poly } => {
                let p = parse_poly(poly).map_err(usage)?;
                let d = p.wdeg(w);
                Outcome::ok(match out {
                    Output::Text => format!("{}\n", wdeg_text(d)),
                    Output::Json => json::render(&json!({ "wdeg": d.finite() })),
                })
            }
            Command::Wmdeg(args) => {
                let d = read_map(args)?.wmdeg(w);
                Outcome::ok(match out {
                    Output::Text => format!("{d}\n"),
                    Output::Json => json::render(&json!({ "wmdeg": json::bidegree(d) })),
                })
            }
            Command::Member { d1, d2 } => {
                let d = positive_bidegree(*d1, *d2)?;
                let wit = member(w, d).map_err(usage)?;
                Outcome::ok(match out {
                    Output::Json => json::render(&json::witness(&wit)),
                    Output::Text => {
                        let j = json::witness(&wit);
                        match j.branch {
                            Some(b) => format!("{} {b}\n", j.verdict),
                            None => format!("{} failed: {}\n", j.verdict, j.failed.join(", ")),
                        }
                    }
                })
            }
            Command::Enumerate => {
                let set = enumerate_z(w, cfg.bound);
                Outcome::ok(match out {
                    Output::Json => {
                        json::render(&set.iter().copied().map(json::bidegree).collect::<Vec<_>>())
                    }
                    Output::Text => set.iter().map(|d| format!("{d}\n")).collect(),
                })
            }
            Command::Realize { d1, d2 } => {
                let d = positive_bidegree(*d1, *d2)?;
                match realize(w, d) {
                    Ok(word) => Outcome::ok(json::render(&json::word(&word))),
                    Err(e) => {
                        let stdout = match out {
                            Output::Text => format!("not realizable: {d} under {w}\n"),
                            Output::Json => json::render(&json!({ "error": "not-realizable" })),
                        };
                        Outcome::error(EXIT_NOT_REALIZABLE, stdout, format!("error: {e}\n"))
                    }
                }
            }
            Command::Decompose(args) => {
                let m = read_map(args)?;
                match decompose_bounded(&m, cfg.max_degree) {
                    Ok(nf) => Outcome::ok(json::render(&json::normal_form(&nf))),
                    Err(e) => decompose_failure(e, out),
                }
            }
            Command::Length(args) => {
                let m = read_map(args)?;
                match decompose_bounded(&m, cfg.max_degree) {
                    Ok(nf) => Outcome::ok(match out {
                        Output::Text => format!("{}\n", nf.length()),
                        Output::Json => json::render(&json!({ "length": nf.length() })),
                    }),
                    Err(e) => decompose_failure(e, out),
                }
            }
            Command::Invert(args) => {
                let m = read_map(args)?;
                match invert_map_bounded(&m, cfg.max_degree) {
                    Ok(inv) => Outcome::ok(match out {
                        Output::Text => format!("{inv}\n"),
                        Output::Json => json::render(&json!({
                            "f1": inv.f1.to_string(),
                            "f2": inv.f2.to_string(),
                        })),
                    }),
                    Err(e) => decompose_failure(e, out),
                }
            }
            Command::Verify => {
                let report = verify_theorem_main(w, &GeneratorPool::desk(), cfg.bound);
                report_outcome(&report, out)
            }
            Command::Roundtrip { samples } => {
                let report = roundtrip_suite(&GeneratorPool::desk(), *samples, cfg.seed);
                report_outcome(&report, out)
            }
        })
    })();
    result.unwrap_or_else(|e| e)
}
