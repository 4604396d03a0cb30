//! Command-line driver. Exit codes: 0 success, 1 bad input, 2 a
//! cross-check failed, 3 size cap exceeded.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::expansions::{self, duality_check, verify_all, Method, MethodReport, DEFAULT_SIZE_CAP};
use crate::io::{parse_order, read_graph};
use crate::poly::TermJson;
use crate::report::{counts_line, CountReport, QuasiTreeTable, RowOrder, SpanningTreeTable};
use crate::ribbon::RibbonGraph;

pub const EXIT_INPUT: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;
pub const EXIT_SIZE_CAP: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "brtpoly",
    version,
    about = "Ribbon graph polynomials and quasi-trees"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Edge order override, lowest first, as 1-based edge indices: `4,2,3,1,5,6`.
    #[arg(long, global = true)]
    pub order: Option<String>,
    /// Largest edge count accepted by the state sum.
    #[arg(long, default_value_t = DEFAULT_SIZE_CAP as u64, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub cap: u64,
    /// Seed for sampled evaluation points.
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print C(X, Y, Z).
    Compute {
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = MethodArg::Quasitree)]
        method: MethodArg,
    },
    /// Print the quasi-tree table.
    Quasitrees {
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = SortArg::Leaf)]
        sort: SortArg,
    },
    /// Count quasi-trees by genus via C(1, Y, t/Y^2).
    Count {
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = MethodArg::Quasitree)]
        method: MethodArg,
    },
    /// Run every method and cross-check the results.
    Verify { graph: PathBuf },
    /// Compare quasi-trees with those of the dual and test the duality identity.
    Dual {
        graph: PathBuf,
        #[arg(long, default_value_t = 20)]
        points: usize,
    },
    /// Print the spanning-tree expansion table.
    SpanningTrees { graph: PathBuf },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Statesum,
    Tree,
    Recursive,
    Quasitree,
    All,
}

impl MethodArg {
    fn method(self) -> Option<Method> {
        match self {
            MethodArg::Statesum => Some(Method::StateSum),
            MethodArg::Tree => Some(Method::SpanningTree),
            MethodArg::Recursive => Some(Method::Recursive),
            MethodArg::Quasitree => Some(Method::QuasiTree),
            MethodArg::All => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SortArg {
    Leaf,
    Bitstring,
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Mismatch { .. } | Error::BijectionFailure(_) | Error::IdentityFailure { .. } => {
            EXIT_MISMATCH
        }
        Error::SizeLimit { .. } => EXIT_SIZE_CAP,
        _ => EXIT_INPUT,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { 0 };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

#[derive(Serialize)]
struct ComputeJson {
    method: Method,
    polynomial: String,
    terms: Vec<TermJson>,
    term_count: u64,
    elapsed_ms: f64,
}

#[derive(Serialize)]
struct CountJson<'a> {
    method: Method,
    #[serde(flatten)]
    report: &'a CountReport,
}

fn load(cli: &Cli, path: &std::path::Path) -> Result<RibbonGraph> {
    let graph = read_graph(path)?;
    match &cli.order {
        None => Ok(graph),
        Some(text) => {
            let order = parse_order(text, graph.edge_count())?;
            graph.with_edge_order(order)
        }
    }
}

fn emit(out: &mut dyn Write, text: &str) -> Result<()> {
    out.write_all(text.as_bytes())
        .map_err(|e| Error::Input(e.to_string()))
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    let cap = usize::try_from(cli.cap).unwrap_or(usize::MAX);
    let as_json = cli.format == Format::Json;
    match &cli.command {
        Command::Compute { graph, method } => {
            let g = load(cli, graph)?;
            match method.method() {
                None => verify(&g, cap, as_json, out),
                Some(m) => {
                    let r = expansions::compute(&g, m, cap)?;
                    let text = if as_json {
                        let report = MethodReport::from(&r);
                        json(&ComputeJson {
                            method: m,
                            terms: r.polynomial.to_json_terms(),
                            polynomial: report.polynomial,
                            term_count: report.term_count,
                            elapsed_ms: report.elapsed_ms,
                        })
                    } else {
                        format!("{}\n", r.polynomial)
                    };
                    emit(out, &text)?;
                    Ok(0)
                }
            }
        }
        Command::Verify { graph } => verify(&load(cli, graph)?, cap, as_json, out),
        Command::Quasitrees { graph, sort } => {
            let g = load(cli, graph)?;
            let order = match sort {
                SortArg::Leaf => RowOrder::Leaf,
                SortArg::Bitstring => RowOrder::Bitstring,
            };
            let table = QuasiTreeTable::new(&g, order)?;
            emit(
                out,
                &if as_json {
                    json(&table)
                } else {
                    table.to_text()
                },
            )?;
            Ok(0)
        }
        Command::Count { graph, method } => {
            let g = load(cli, graph)?;
            let m = method.method().unwrap_or(Method::QuasiTree);
            let c = expansions::compute(&g, m, cap)?.polynomial;
            let report = CountReport::new(&g, &c)?;
            let text = if as_json {
                json(&CountJson {
                    method: m,
                    report: &report,
                })
            } else {
                report.to_text()
            };
            emit(out, &text)?;
            Ok(if report.agrees() { 0 } else { EXIT_MISMATCH })
        }
        Command::Dual { graph, points } => {
            let g = load(cli, graph)?;
            let report = duality_check(&g, cli.seed, *points)?;
            let text = if as_json {
                json(&report)
            } else {
                let mut s = format!("genus: {}\n", report.genus);
                s.push_str(&format!("quasi-trees by genus: {:?}\n", report.histogram));
                s.push_str(&format!(
                    "dual quasi-trees by genus: {:?}\n",
                    report.dual_histogram
                ));
                s.push_str(&format!(
                    "complement bijection: {}\n",
                    verdict(report.bijection_ok)
                ));
                s.push_str(&format!(
                    "(X-1)^g C(X,Y,Z) = Y^g C*(Y,X,Z) on (X-1)YZ=1: {} at {} points\n",
                    verdict(report.swapped_identity_ok),
                    report.points.len()
                ));
                s.push_str(&format!(
                    "(X-1)^g C(X,Y,Z) = Y^g C*(Y+1,X-1,Z) on (X-1)YZ=1: {} at {} points\n",
                    verdict(report.shifted_identity_ok),
                    report.points.len()
                ));
                s
            };
            emit(out, &text)?;
            report.require_shifted_identity()?;
            Ok(0)
        }
        Command::SpanningTrees { graph } => {
            let table = SpanningTreeTable::new(&load(cli, graph)?)?;
            emit(
                out,
                &if as_json {
                    json(&table)
                } else {
                    table.to_text()
                },
            )?;
            Ok(0)
        }
    }
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "holds"
    } else {
        "FAILS"
    }
}

fn verify(g: &RibbonGraph, cap: usize, as_json: bool, out: &mut dyn Write) -> Result<i32> {
    let report = verify_all(g, cap)?;
    let text = if as_json {
        json(&report)
    } else {
        let mut s = counts_line(&g.counts());
        for m in &report.methods {
            s.push_str(&format!(
                "{:<10} {:>8} terms {:>10.3} ms  {}\n",
                m.method.name(),
                m.term_count,
                m.elapsed_ms,
                m.polynomial
            ));
        }
        s.push_str(&format!("all methods agree: {}\n", report.all_equal));
        s.push_str(&format!(
            "C(X,Y,1) = T_G(X,1+Y): {}\n",
            report.specialization_ok
        ));
        s.push_str(&format!(
            "quasi-tree summands {} <= state-sum summands {}: {}\n",
            report.quasi_tree_terms, report.state_sum_terms, report.quasi_tree_not_more_terms
        ));
        s
    };
    emit(out, &text)?;
    Ok(0)
}
