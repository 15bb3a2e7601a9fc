use std::io::{self, Read, Write};
use std::process::ExitCode;

use boolcomb::booldim::{boolean_dimension, restricted_dimension};
use boolcomb::classes::{enumerate, ClassTag};
use boolcomb::decompose::{
    class_l_decomposition, fold_partition_complements, partition_complementation_sequence, twin_decomposition,
    vizing_matchings, xor_normal_form,
};
use boolcomb::extremal::{hnk, hnk_report};
use boolcomb::harness::{verify_all, verify_theorem_seeded, TheoremCheck};
use boolcomb::invariants::param_report;
use boolcomb::io::{detect_format, emit_graph, parse_graph, GraphFormat};
use boolcomb::labeling::{compose, BaseScheme};
use boolcomb::{apply_boolean, combine, BooleanFunction, CombineOp, Error, Graph};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

const DEFAULT_SEED: u64 = 0;

/// Boolean combinations of graphs.
///
/// Graph arguments are graph6 strings or edge lists ("n m" then "u v" lines);
/// `@path` reads a file and `-` reads standard input.
#[derive(Parser)]
#[command(name = "boolcomb", version)]
struct Cli {
    /// Output format for graphs.
    #[arg(long, global = true, default_value = "graph6")]
    format: GraphFormat,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Vizing,
    Twin,
    #[value(name = "classL", alias = "class-l")]
    ClassL,
    Xornf,
    Pcseq,
}

#[derive(Subcommand)]
enum Command {
    /// Exact parameters of a graph as JSON.
    Params { graph: String },
    /// Combine graphs on a common vertex set.
    Combine {
        /// union, intersect, xor, or fn:<arity>:0x<table>
        #[arg(long)]
        op: String,
        #[arg(required = true)]
        graphs: Vec<String>,
    },
    /// Write a graph (or, for xornf and pcseq, a tuple) as a combination of simple parts.
    Decompose {
        #[arg(long)]
        method: Method,
        /// Function for xornf.
        #[arg(long = "fn")]
        function: Option<BooleanFunction>,
        /// Class of the inputs for xornf.
        #[arg(long)]
        class: Option<ClassTag>,
        #[arg(required = true)]
        graphs: Vec<String>,
    },
    /// The graph H(n, k), or its report with --report.
    Hnk {
        n: usize,
        k: usize,
        #[arg(long)]
        report: bool,
    },
    /// Run a catalogue check, or all of them.
    Verify {
        /// A catalogue id or "all".
        id: String,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Print a pass/fail table instead of JSON.
        #[arg(long)]
        table: bool,
    },
    /// Smallest number of class members whose combination is the target.
    Booldim {
        #[arg(long)]
        target: String,
        #[arg(long)]
        class: ClassTag,
        #[arg(long, default_value_t = 3)]
        kmax: usize,
        /// Restrict to union, intersect or xor.
        #[arg(long)]
        mode: Option<CombineOp>,
    },
    /// Adjacency labels of a combination of equivalence graphs.
    Label {
        #[arg(long = "fn")]
        function: BooleanFunction,
        #[arg(required = true)]
        graphs: Vec<String>,
    },
    /// Every labeled member of a class on n vertices, one per line.
    Enumerate {
        #[arg(long)]
        class: ClassTag,
        #[arg(long)]
        n: usize,
    },
}

enum Failure {
    Check,
    Error(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Error(e.to_string())
    }
}

fn read_graph(arg: &str) -> Result<Graph, Failure> {
    let text = if arg == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        s
    } else if let Some(path) = arg.strip_prefix('@') {
        std::fs::read_to_string(path).map_err(|e| Failure::Error(format!("{path}: {e}")))?
    } else {
        arg.to_string()
    };
    Ok(parse_graph(&text, detect_format(&text))?)
}

fn read_graphs(args: &[String]) -> Result<Vec<Graph>, Failure> {
    args.iter().map(|a| read_graph(a)).collect()
}

fn print_json(value: &impl serde::Serialize) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(value).map_err(|e| Failure::Error(e.to_string()))?;
    println!("{text}");
    Ok(())
}

fn print_graph(g: &Graph, format: GraphFormat) -> Result<(), Failure> {
    let text = emit_graph(g, format)?;
    let mut out = io::stdout().lock();
    writeln!(out, "{}", text.trim_end())?;
    Ok(())
}

fn print_checks(checks: &[TheoremCheck], table: bool) -> Result<(), Failure> {
    if table {
        for c in checks {
            println!("{:<4} {:<24} {:>8}  {}", if c.passed { "ok" } else { "FAIL" }, c.id, c.instances, c.scope);
        }
    } else if let [single] = checks {
        print_json(single)?;
    } else {
        print_json(&checks)?;
    }
    if checks.iter().all(|c| c.passed) {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let format = cli.format;
    match cli.command {
        Command::Params { graph } => print_json(&param_report(&read_graph(&graph)?)?),
        Command::Combine { op, graphs } => {
            let graphs = read_graphs(&graphs)?;
            let g = match op.strip_prefix("fn:") {
                Some(spec) => apply_boolean(&spec.parse()?, &graphs)?,
                None => combine(op.parse()?, &graphs)?,
            };
            print_graph(&g, format)
        }
        Command::Decompose { method, function, class, graphs } => {
            let graphs = read_graphs(&graphs)?;
            let single = || match graphs.as_slice() {
                [g] => Ok(g),
                _ => Err(Failure::Error("this method takes exactly one graph".into())),
            };
            match method {
                Method::Vizing => print_json(&vizing_matchings(single()?)?),
                Method::Twin => print_json(&twin_decomposition(single()?)?),
                Method::ClassL => print_json(&class_l_decomposition(single()?)?),
                Method::Xornf => {
                    let f = function.ok_or_else(|| Failure::Error("xornf needs --fn".into()))?;
                    let tag = class.ok_or_else(|| Failure::Error("xornf needs --class".into()))?;
                    let form = xor_normal_form(&f, &graphs, tag)?;
                    print_json(&json!({
                        "alpha": form.alpha,
                        "parts": form.parts,
                        "tag": form.tag,
                        "certified": form.certified,
                    }))
                }
                Method::Pcseq => {
                    let seq = partition_complementation_sequence(&graphs)?;
                    let folded = fold_partition_complements(graphs[0].n(), &seq)?;
                    print_json(&json!({ "partitions": seq, "xor": folded }))
                }
            }
        }
        Command::Hnk { n, k, report } => {
            if report {
                print_json(&hnk_report(n, k)?)
            } else {
                print_graph(&hnk(n, k)?, format)
            }
        }
        Command::Verify { id, seed, table } => {
            let checks = if id == "all" { verify_all(seed)? } else { vec![verify_theorem_seeded(&id, seed)?] };
            print_checks(&checks, table)
        }
        Command::Booldim { target, class, kmax, mode } => {
            let g = read_graph(&target)?;
            let result = match mode {
                Some(op) => restricted_dimension(&g, class, op, kmax)?,
                None => boolean_dimension(&g, class, kmax)?,
            };
            print_json(&result)
        }
        Command::Label { function, graphs } => {
            let graphs = read_graphs(&graphs)?;
            let bases = vec![BaseScheme::Equivalence; graphs.len()];
            let (labels, scheme) = compose(&function, &bases, &graphs)?;
            let map: serde_json::Map<String, serde_json::Value> =
                labels.iter().enumerate().map(|(v, l)| (v.to_string(), json!(l.to_hex()))).collect();
            print_json(&json!({ "scheme": scheme, "label_bits": scheme.label_len(), "labels": map }))
        }
        Command::Enumerate { class, n } => {
            let mut out = io::stdout().lock();
            for g in enumerate(class, n)? {
                writeln!(out, "{}", emit_graph(&g, format)?.trim_end())?;
                if format == GraphFormat::EdgeList {
                    writeln!(out)?;
                }
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Error(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
