mod input;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use twohop_core::graph::conflict_graph;
use twohop_core::invariants::{chordality, invariant_report};
use twohop_core::perf::{admission_threshold, beta_bounds, user_threshold, LowerSearch};
use twohop_core::schedule::{dual_fractional_chromatic, min_schedule, weighted_clique_number};
use twohop_core::sim::{evaluate_policy, run_admission, write_metrics_csv, Policy, Sampler};
use twohop_core::{Caps, DemandVector, Error, NetworkGraph, Rational, Result};

const GENERATORS: &str = "GRAPH is a JSON file {\"vertices\":[...],\"edges\":[[a,b],...]} or a generator \
shorthand name:arg[:arg...]: cycle:N, complete:N, path:N, star:M, clique_pendant:R, circulant:N:S1,S2,...";

#[derive(Parser)]
#[command(name = "twohop", version, about = "Admission control analysis under the K-hop interference model", after_help = GENERATORS)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: Options,
}

#[derive(clap::Args)]
struct Options {
    /// Interference range K (links conflict when their distance is below K).
    #[arg(long, global = true, default_value_t = 2)]
    k: usize,
    /// Demand vector as a JSON file or inline JSON object {"a-b":"p/q",...}.
    #[arg(long, global = true)]
    demands: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Mode::Central)]
    mode: Mode,
    /// `auto` for the certified threshold, or an explicit p/q (simulate also accepts `oracle`).
    #[arg(long, global = true, default_value = "auto")]
    threshold: String,
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[arg(long, global = true)]
    samples: Option<usize>,
    /// Cap on maximal independent set / clique enumeration.
    #[arg(long, global = true)]
    cap_sets: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Central,
    Distributed,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum SamplerKind {
    Uniform,
    Boundary,
    Scaled,
}

#[derive(Subcommand)]
enum Command {
    /// Conflict graph L_K(G): links and interfering pairs.
    Conflict { graph: String },
    /// Weighted fractional chromatic number (minimum schedule length).
    Chif { graph: String },
    /// Admission decision, centralized or distance-1 distributed.
    Admit { graph: String },
    /// nu, lambda, chordality and imperfection-ratio bounds.
    Invariants { graph: String },
    /// Certified bounds on the distributed suboptimality ratio.
    Beta { graph: String },
    /// Certified per-node admission threshold.
    Threshold {
        graph: String,
        /// Also report the threshold 1/B for this bound B.
        #[arg(long)]
        bound: Option<Rational>,
    },
    /// Sampled evaluation of an admission policy.
    Simulate {
        graph: String,
        #[arg(long, value_enum, default_value_t = SamplerKind::Uniform)]
        sampler: SamplerKind,
        /// Scale factors for `--sampler scaled`, comma separated.
        #[arg(long, value_delimiter = ',')]
        factors: Vec<Rational>,
        /// Largest demand denominator for random samplers.
        #[arg(long, default_value_t = 4)]
        max_denominator: i64,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Conflict { .. } => "conflict",
            Command::Chif { .. } => "chif",
            Command::Admit { .. } => "admit",
            Command::Invariants { .. } => "invariants",
            Command::Beta { .. } => "beta",
            Command::Threshold { .. } => "threshold",
            Command::Simulate { .. } => "simulate",
        }
    }

    fn graph(&self) -> &str {
        match self {
            Command::Conflict { graph }
            | Command::Chif { graph }
            | Command::Admit { graph }
            | Command::Invariants { graph }
            | Command::Beta { graph }
            | Command::Threshold { graph, .. }
            | Command::Simulate { graph, .. } => graph,
        }
    }
}

enum Output {
    Json(Value),
    Csv(Vec<u8>),
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

fn require_demands(g: &NetworkGraph, opts: &Options) -> Result<DemandVector> {
    let arg = opts
        .demands
        .as_deref()
        .ok_or_else(|| Error::input("this command needs --demands"))?;
    input::load_demands(g, arg)
}

fn run(cli: &Cli) -> Result<Output> {
    let opts = &cli.opts;
    if opts.k == 0 {
        return Err(Error::input("--k must be at least 1"));
    }
    let mut caps = Caps::default();
    if let Some(n) = opts.cap_sets {
        caps.max_sets = n;
    }
    let g = input::load_graph(cli.command.graph())?;
    let demands = opts
        .demands
        .as_ref()
        .map(|d| input::load_demands(&g, d))
        .transpose()?;
    let needs_two_hop = !matches!(cli.command, Command::Conflict { .. } | Command::Chif { .. });
    if needs_two_hop && opts.k != 2 {
        return Err(Error::input(format!(
            "{} is defined for K = 2 only",
            cli.command.name()
        )));
    }

    let result = match &cli.command {
        Command::Conflict { .. } => {
            let gc = conflict_graph(&g, opts.k)?;
            let edges: Vec<[String; 2]> = gc
                .graph()
                .edges()
                .map(|(a, b)| [gc.links()[a].id(), gc.links()[b].id()])
                .collect();
            json!({
                "k": opts.k,
                "links": gc.links(),
                "conflicts": edges,
                "chordality": chordality(&gc),
            })
        }
        Command::Chif { .. } => {
            let tau = require_demands(&g, opts)?;
            let gc = conflict_graph(&g, opts.k)?;
            let schedule = min_schedule(&gc, &tau, &caps)?;
            json!({
                "chif": schedule.duration(),
                "dual": dual_fractional_chromatic(&gc, &tau, &caps)?,
                "weighted_clique": weighted_clique_number(&gc, &tau, &caps)?,
                "feasible": schedule.duration() <= Rational::one(),
                "schedule": schedule,
            })
        }
        Command::Admit { .. } => {
            let tau = require_demands(&g, opts)?;
            match opts.mode {
                Mode::Central => {
                    let gc = conflict_graph(&g, 2)?;
                    let chif = twohop_core::schedule::fractional_chromatic(&gc, &tau, &caps)?;
                    let admit = chif <= Rational::one();
                    json!({
                        "mode": "central",
                        "chif": chif,
                        "decision": if admit { "admit" } else { "reject" },
                    })
                }
                Mode::Distributed => {
                    let (threshold, source) = match opts.threshold.as_str() {
                        "auto" => (admission_threshold(&g, &caps)?.value, "certified"),
                        t => (parse_rational(t, "--threshold")?, "user"),
                    };
                    let trace = run_admission(&g, &tau, &threshold, &caps)?;
                    json!({
                        "mode": "distributed",
                        "threshold_source": source,
                        "decision": trace.global_decision,
                        "trace": trace,
                    })
                }
            }
        }
        Command::Invariants { .. } => to_value(&invariant_report(&g, &caps)?),
        Command::Beta { .. } => {
            let mut search = LowerSearch {
                seed: opts.seed.unwrap_or(0),
                ..LowerSearch::default()
            };
            if let Some(n) = opts.samples {
                search.random_samples = n;
            }
            to_value(&beta_bounds(&g, &search, &caps)?)
        }
        Command::Threshold { bound, .. } => {
            let t = admission_threshold(&g, &caps)?;
            let mut v = to_value(&t);
            if let Some(b) = bound {
                let lower = beta_bounds(&g, &LowerSearch::default(), &caps)?.lower;
                let (value, sound) = user_threshold(b, &lower)?;
                if !sound {
                    eprintln!("warning: B = {b} is below the certified beta lower bound {lower}; admissions may be unsound");
                }
                v["user"] = json!({"bound": b, "value": value, "certified_beta_lower": lower, "sound": sound});
            }
            v
        }
        Command::Simulate {
            sampler,
            factors,
            max_denominator,
            ..
        } => {
            if *max_denominator < 1 {
                return Err(Error::input("--max-denominator must be at least 1"));
            }
            let sampler = match sampler {
                SamplerKind::Uniform => Sampler::Uniform {
                    max_denominator: *max_denominator,
                },
                SamplerKind::Boundary => Sampler::Boundary {
                    max_denominator: *max_denominator,
                    levels: if factors.is_empty() {
                        vec![Rational::new(1, 2), Rational::one(), Rational::new(3, 2)]
                    } else {
                        factors.clone()
                    },
                },
                SamplerKind::Scaled => Sampler::Scaled {
                    base: demands.clone().ok_or_else(|| {
                        Error::input("--sampler scaled needs --demands as the base vector")
                    })?,
                    factors: factors.clone(),
                },
            };
            let seed = match (&sampler, opts.seed) {
                (_, Some(s)) => s,
                (Sampler::Scaled { .. }, None) => 0,
                _ => return Err(Error::input("simulate with a random sampler needs --seed")),
            };
            let policy = match opts.threshold.as_str() {
                "auto" => Policy::Certified,
                "oracle" => Policy::OracleExact,
                t => {
                    let t = parse_rational(t, "--threshold")?;
                    if !t.is_positive() {
                        return Err(Error::input("--threshold must be positive"));
                    }
                    Policy::User(t.recip())
                }
            };
            let metrics = evaluate_policy(
                &g,
                &sampler,
                &policy,
                seed,
                opts.samples.unwrap_or(100),
                &caps,
            )?;
            if opts.format == Format::Csv {
                let mut buf = Vec::new();
                write_metrics_csv(&metrics, &mut buf)?;
                return Ok(Output::Csv(buf));
            }
            to_value(&metrics)
        }
    };

    let digest = {
        let canonical = json!({"graph": g.to_json(), "demands": demands}).to_string();
        hex::encode(Sha256::digest(canonical.as_bytes()))
    };
    Ok(Output::Json(json!({
        "tool": "twohop",
        "version": env!("CARGO_PKG_VERSION"),
        "command": cli.command.name(),
        "input_digest": digest,
        "k": opts.k,
        "seed": opts.seed,
        "caps": caps,
        "result": result,
    })))
}

fn parse_rational(text: &str, flag: &str) -> Result<Rational> {
    text.parse()
        .map_err(|_| Error::input(format!("{flag}: expected `auto` or p/q, got {text:?}")))
}

fn emit(bytes: &[u8], out: Option<&PathBuf>) -> std::io::Result<()> {
    match out {
        Some(path) => fs::write(path, bytes),
        None => std::io::stdout().write_all(bytes),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let bytes = match out {
                Output::Json(v) => {
                    let mut s = serde_json::to_string_pretty(&v).expect("json values serialize");
                    s.push('\n');
                    s.into_bytes()
                }
                Output::Csv(b) => b,
            };
            if let Err(e) = emit(&bytes, cli.opts.out.as_ref()) {
                eprintln!("twohop: cannot write output: {e}");
                return ExitCode::from(2);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("twohop: {e}");
            ExitCode::from(if e.is_resource() { 3 } else { 2 })
        }
    }
}
