use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use bfold_core::fractional::{
    b_fold_chromatic_number, fractional_count, fractional_polynomial, frt_demo,
};
use bfold_core::graph::{parse_dimacs, parse_edge_list, to_dimacs, to_edge_list};
use bfold_core::oracle::{enumerate_count, DEFAULT_BUDGET};
use bfold_core::selfcheck::{run_selfcheck, SelfCheckConfig};
use bfold_core::{blowup, chromatic, Error, Graph, GraphKind};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

const EXIT_USAGE: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_BUDGET: u8 = 3;
const EXIT_INTERNAL: u8 = 4;

#[derive(Parser)]
#[command(
    name = "bfold",
    version,
    about = "Exact ordinary and b-fold chromatic polynomials"
)]
struct Cli {
    /// Input graph format; `auto` picks DIMACS for .col/.dimacs files or text
    /// whose first directive is a `c`/`p` line.
    #[arg(long, global = true, value_enum, default_value_t = InputFormat::Auto)]
    input_format: InputFormat,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum InputFormat {
    Auto,
    Edgelist,
    Dimacs,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Json,
    Pretty,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Edgelist,
    Dimacs,
}

#[derive(Subcommand)]
enum Command {
    /// Ordinary chromatic polynomial.
    Poly {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
    },
    /// b-fold polynomial as numerator coefficients over (b!)^n.
    Fracpoly {
        file: PathBuf,
        #[arg(long)]
        b: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
    },
    /// Number of b-fold λ-colourings, via the blow-up polynomial.
    Count {
        file: PathBuf,
        #[arg(long)]
        lambda: u64,
        #[arg(long)]
        b: usize,
    },
    /// Number of b-fold λ-colourings by brute-force enumeration.
    Oracle {
        file: PathBuf,
        #[arg(long)]
        lambda: u32,
        #[arg(long)]
        b: u32,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Print the blow-up G^b.
    Blowup {
        file: PathBuf,
        #[arg(long)]
        b: usize,
        #[arg(long, value_enum, default_value_t = GraphFormat::Edgelist)]
        format: GraphFormat,
    },
    /// Smallest λ admitting a b-fold λ-colouring.
    ChromaticNumber {
        file: PathBuf,
        #[arg(long)]
        b: usize,
    },
    /// Compare the naive and blow-up deletion–contraction on one edge.
    FrtDemo {
        file: PathBuf,
        /// Edge of the input graph as `U,V`.
        #[arg(long, value_parser = parse_pair)]
        edge: (usize, usize),
        #[arg(long)]
        lambda: u64,
        #[arg(long)]
        b: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Pretty)]
        format: OutputFormat,
    },
    /// Differential sweep: closed forms vs. pipeline vs. oracle.
    Selfcheck {
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        #[arg(long, default_value_t = 3)]
        max_b: usize,
        #[arg(long, default_value_t = 8)]
        max_lambda: u64,
    },
    /// Generate a graph. KIND is one of complete, path, cycle, star, edgeless
    /// (N), random-tree (N), random-graph (N P), forest (N1 N2 ...).
    Generate {
        kind: String,
        args: Vec<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = GraphFormat::Edgelist)]
        format: GraphFormat,
    },
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or("expected U,V")?;
    let a = a.trim().parse().map_err(|_| format!("bad vertex `{a}`"))?;
    let b = b.trim().parse().map_err(|_| format!("bad vertex `{b}`"))?;
    Ok((a, b))
}

/// Failure carrying the process exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. }
            | Error::VertexOutOfRange { .. }
            | Error::SelfLoop(_)
            | Error::EdgeAbsent(..)
            | Error::EdgeExists(..)
            | Error::MalformedColoring(_) => EXIT_INPUT,
            Error::InvalidArgument(_) => EXIT_USAGE,
            Error::BudgetExceeded { .. } => EXIT_BUDGET,
            Error::Interpolation(_) | Error::Invariant(_) => EXIT_INTERNAL,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

fn read_graph(path: &Path, format: InputFormat) -> Result<Graph, Failure> {
    let text = if path == Path::new("-") {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Failure {
                code: EXIT_INPUT,
                message: format!("stdin: {e}"),
            })?;
        buf
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure {
            code: EXIT_INPUT,
            message: format!("{}: {e}", path.display()),
        })?
    };
    let dimacs = match format {
        InputFormat::Dimacs => true,
        InputFormat::Edgelist => false,
        InputFormat::Auto => {
            let ext = path.extension().and_then(|e| e.to_str());
            matches!(ext, Some("col" | "dimacs"))
                || text
                    .lines()
                    .map(str::trim)
                    .find(|l| !l.is_empty() && !l.starts_with('#'))
                    .is_some_and(|l| l.starts_with("p ") || l.starts_with("c ") || l == "c")
        }
    };
    let parsed = if dimacs {
        parse_dimacs(&text)
    } else {
        parse_edge_list(&text)
    };
    parsed.map_err(|e| {
        let mut f = Failure::from(e);
        f.message = format!("{}: {}", path.display(), f.message);
        f
    })
}

fn render_graph(g: &Graph, format: GraphFormat) -> String {
    match format {
        GraphFormat::Edgelist => to_edge_list(g),
        GraphFormat::Dimacs => to_dimacs(g),
    }
}

fn parse_arg<T: std::str::FromStr>(args: &[String], i: usize, what: &str) -> Result<T, Failure> {
    let raw = args
        .get(i)
        .ok_or_else(|| usage(format!("missing {what}")))?;
    raw.parse()
        .map_err(|_| usage(format!("invalid {what} `{raw}`")))
}

fn graph_kind(kind: &str, args: &[String], seed: u64) -> Result<GraphKind, Failure> {
    let arity = |k: usize| {
        if args.len() == k {
            Ok(())
        } else {
            Err(usage(format!(
                "`{kind}` takes {k} argument(s), got {}",
                args.len()
            )))
        }
    };
    let kind = match kind {
        "complete" | "path" | "cycle" | "star" | "edgeless" | "random-tree" => {
            arity(1)?;
            let n = parse_arg(args, 0, "vertex count")?;
            match kind {
                "complete" => GraphKind::Complete(n),
                "path" => GraphKind::Path(n),
                "cycle" => GraphKind::Cycle(n),
                "star" => GraphKind::Star(n),
                "edgeless" => GraphKind::Edgeless(n),
                _ => GraphKind::RandomTree { n, seed },
            }
        }
        "random-graph" => {
            arity(2)?;
            GraphKind::RandomGraph {
                n: parse_arg(args, 0, "vertex count")?,
                p: parse_arg(args, 1, "edge probability")?,
                seed,
            }
        }
        "forest" => {
            // Accept both `forest 2 1` and `forest 2,1`.
            let parts = args
                .iter()
                .flat_map(|a| a.split(','))
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.trim()
                        .parse()
                        .map_err(|_| usage(format!("invalid part size `{s}`")))
                })
                .collect::<Result<Vec<usize>, _>>()?;
            GraphKind::Forest { parts, seed }
        }
        other => return Err(usage(format!("unknown graph kind `{other}`"))),
    };
    Ok(kind)
}

/// Text for stdout plus the exit code to finish with.
struct Outcome {
    text: String,
    code: u8,
}

fn run(cli: Cli) -> Result<Outcome, Failure> {
    let input = cli.input_format;
    let out = match cli.command {
        Command::Poly { file, format } => {
            let g = read_graph(&file, input)?;
            let p = chromatic::chromatic_polynomial(&g);
            match format {
                OutputFormat::Json => serde_json::to_string(&p).expect("serializable"),
                OutputFormat::Pretty => p.to_string(),
            }
        }
        Command::Fracpoly { file, b, format } => {
            let g = read_graph(&file, input)?;
            let fp = fractional_polynomial(&g, b)?;
            match format {
                OutputFormat::Json => json!({
                    "b": b,
                    "order": fp.order(),
                    "numerator": fp.numerator(),
                    "denominator": fp.denominator().to_string(),
                })
                .to_string(),
                OutputFormat::Pretty => format!("({}) / {}", fp.numerator(), fp.denominator()),
            }
        }
        Command::Count { file, lambda, b } => {
            let g = read_graph(&file, input)?;
            fractional_count(&g, lambda, b)?.to_string()
        }
        Command::Oracle {
            file,
            lambda,
            b,
            budget,
        } => {
            let g = read_graph(&file, input)?;
            enumerate_count(&g, lambda, b, budget)?.to_string()
        }
        Command::Blowup { file, b, format } => {
            let g = read_graph(&file, input)?;
            render_graph(&blowup::blow_up(&g, b)?, format)
                .trim_end()
                .to_string()
        }
        Command::ChromaticNumber { file, b } => {
            let g = read_graph(&file, input)?;
            b_fold_chromatic_number(&g, b)?.to_string()
        }
        Command::FrtDemo {
            file,
            edge,
            lambda,
            b,
            format,
        } => {
            let g = read_graph(&file, input)?;
            let r = frt_demo(&g, edge, lambda, b)?;
            let verdict = |ok: bool| if ok { "OK" } else { "FAIL" };
            match format {
                OutputFormat::Json => json!({
                    "edge": [edge.0, edge.1],
                    "lambda": lambda,
                    "b": b,
                    "lhs": r.lhs.to_string(),
                    "naive_rhs": r.naive_rhs.to_string(),
                    "naive_verdict": verdict(r.naive_holds),
                    "blowup_edge": [r.blowup_edge.0, r.blowup_edge.1],
                    "generalized_rhs": r.generalized_rhs.to_string(),
                    "generalized_verdict": verdict(r.generalized_holds),
                })
                .to_string(),
                OutputFormat::Pretty => format!(
                    "edge ({}, {}), λ = {lambda}, b = {b}\n\
                     lhs              P(G,λ,b)                      = {}\n\
                     naive rhs        P(G-uv,λ,b) - P(G/uv,λ,b)     = {}  {}\n\
                     generalized rhs  [P(G^b-xy) - P(G^b/xy)]/(b!)^n = {}  {}  (xy = {:?} in G^b)",
                    edge.0,
                    edge.1,
                    r.lhs,
                    r.naive_rhs,
                    verdict(r.naive_holds),
                    r.generalized_rhs,
                    verdict(r.generalized_holds),
                    r.blowup_edge,
                ),
            }
        }
        Command::Selfcheck {
            max_n,
            max_b,
            max_lambda,
        } => {
            if max_n > 6 {
                return Err(usage("--max-n is limited to 6"));
            }
            let cfg = SelfCheckConfig {
                max_n,
                max_b,
                max_lambda,
                ..Default::default()
            };
            let rows = run_selfcheck(&cfg);
            let table = rows
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join("\n");
            let failed = rows.iter().filter(|r| !r.passed()).count();
            let code = if failed == 0 { 0 } else { EXIT_INTERNAL };
            return Ok(Outcome {
                text: format!("{table}\n{failed} check(s) failed"),
                code,
            });
        }
        Command::Generate {
            kind,
            args,
            seed,
            format,
        } => {
            let kind = graph_kind(&kind, &args, seed)?;
            let g = bfold_core::graph::generate(&kind)?;
            render_graph(&g, format).trim_end().to_string()
        }
    };
    Ok(Outcome { text: out, code: 0 })
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(out) => {
            println!("{}", out.text);
            ExitCode::from(out.code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
