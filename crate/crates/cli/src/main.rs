//! `miskit` — count and enumerate maximal independent sets, compute
//! structural graph parameters, evaluate extremal bounds, generate witness
//! families, and run verification sweeps.
//!
//! Graphs are given as graph6 strings, either as an argument or on stdin
//! (one per line; blank lines and `#` comments ignored).
//!
//! Exit codes: 0 pass/success, 1 violation or resource limit, 2 inconclusive,
//! 64 usage error, 65 input parse error.

use std::io::{BufRead, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use miskit_core::families::{FamilyKind, FamilySpec};
use miskit_core::interval::parse_rational;
use miskit_core::metrics::StructureProfile;
use miskit_core::mis::MisError;
use miskit_core::report::Verdict;
use miskit_core::sweep::{self, SweepError, Theorem};
use miskit_core::{bounds, graph6, mis, Graph};

const EXIT_PASS: u8 = 0;
const EXIT_VIOLATION: u8 = 1;
const EXIT_INCONCLUSIVE: u8 = 2;
const EXIT_USAGE: u8 = 64;
const EXIT_PARSE: u8 = 65;

#[derive(Parser)]
#[command(name = "miskit", version, about = "Maximal independent set toolkit", max_term_width = 100)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the number of maximal independent sets (exact decimal).
    Count {
        /// graph6 string; omit or use "-" to read stdin
        graph: Option<String>,
    },
    /// Print every maximal independent set, one vertex set per line.
    Enumerate {
        /// graph6 string; omit or use "-" to read stdin
        graph: Option<String>,
        /// Fail (exit 1) if more than this many sets exist
        #[arg(long, value_name = "N")]
        limit: Option<usize>,
    },
    /// Print triangle-freeness and the induced (triangle) matching numbers.
    Metrics {
        /// graph6 string; omit or use "-" to read stdin
        graph: Option<String>,
    },
    /// Evaluate a closed-form bound (mm, ht, main) or certified enclosure (kp2).
    Bound {
        /// One of: mm, ht, main, kp2
        #[arg(long, value_name = "ID")]
        theorem: String,
        #[arg(short = 'n', value_name = "N")]
        n: usize,
        /// Structural parameter; required for main and kp2
        #[arg(short = 't', value_name = "T")]
        t: Option<usize>,
        /// Enclosure width for kp2 (rational, e.g. 1e-8)
        #[arg(long, value_name = "P")]
        precision: Option<String>,
    },
    /// Emit a parametric family member as graph6.
    Construct {
        /// One of: moon_moser, hujter_tuza, g_extremal, cycle, complete, matching
        #[arg(long, value_name = "NAME")]
        family: String,
        /// Vertex count (for matching: number of edges)
        #[arg(short = 'n', value_name = "N")]
        n: usize,
        /// Triangle budget; required for g_extremal
        #[arg(short = 't', value_name = "T")]
        t: Option<usize>,
        /// Use the alternative witness where one exists
        #[arg(long)]
        alt: bool,
    },
    /// Sweep-verify a bound over all labeled graphs, or over a corpus file.
    Verify {
        /// One of: mm, ht, main, kp2
        #[arg(long, value_name = "ID")]
        theorem: String,
        #[arg(short = 'n', value_name = "N")]
        n: usize,
        /// graph6 corpus file (one graph per line) instead of labeled exhaustion
        #[arg(long, value_name = "FILE")]
        corpus: Option<PathBuf>,
        /// Write the full report as JSON
        #[arg(long, value_name = "OUT")]
        json: Option<PathBuf>,
        /// Write flat per-parameter rows as CSV
        #[arg(long, value_name = "OUT")]
        csv: Option<PathBuf>,
    },
    /// Exact checks of the bound-ratio and root-constant inequalities.
    CheckFacts {
        /// Enclosure width for the constant checks (default 1e-8)
        #[arg(long, value_name = "P")]
        precision: Option<String>,
        /// Largest triangle budget for the ratio checks (default 40)
        #[arg(long = "t-max", value_name = "T")]
        t_max: Option<usize>,
        /// Vertex-count span above 3t for the ratio checks (default 100)
        #[arg(long, value_name = "S")]
        span: Option<usize>,
    },
    /// Print the recursive counting upper bound.
    WoodBound {
        /// graph6 string; omit or use "-" to read stdin
        graph: Option<String>,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: String) -> Failure {
        Failure { code: EXIT_USAGE, message }
    }
    fn parse(message: String) -> Failure {
        Failure { code: EXIT_PARSE, message }
    }
}

/// Graphs from the argument, or stdin when absent or "-".
fn input_graphs(arg: Option<String>) -> Result<Vec<(String, Graph)>, Failure> {
    let mut out = Vec::new();
    match arg {
        Some(s) if s != "-" => {
            let g = graph6::parse(&s).map_err(|e| Failure::parse(format!("{s}: {e}")))?;
            out.push((s, g));
        }
        _ => {
            for (idx, line) in std::io::stdin().lock().lines().enumerate() {
                let line = line.map_err(|e| Failure::parse(format!("stdin: {e}")))?;
                let trimmed = line.trim();
                if trimmed.is_empty() || trimmed.starts_with('#') {
                    continue;
                }
                let g = graph6::parse(trimmed)
                    .map_err(|e| Failure::parse(format!("stdin line {}: {e}", idx + 1)))?;
                out.push((trimmed.to_string(), g));
            }
        }
    }
    Ok(out)
}

fn parse_precision(arg: Option<String>) -> Result<miskit_core::BigRational, Failure> {
    let text = arg.unwrap_or_else(|| sweep::BASE_PRECISION.to_string());
    parse_rational(&text).map_err(|e| Failure::usage(format!("--precision {text}: {e}")))
}

fn verdict_exit(verdict: Verdict) -> u8 {
    match verdict {
        Verdict::Pass => EXIT_PASS,
        Verdict::Fail => EXIT_VIOLATION,
        Verdict::Inconclusive => EXIT_INCONCLUSIVE,
    }
}

fn sweep_failure(err: SweepError) -> Failure {
    match &err {
        SweepError::CorpusParse { .. }
        | SweepError::VertexCountMismatch { .. }
        | SweepError::Io { .. } => Failure::parse(err.to_string()),
        _ => Failure::usage(err.to_string()),
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Count { graph } => {
            for (_, g) in input_graphs(graph)? {
                println!("{}", mis::count(&g));
            }
            Ok(EXIT_PASS)
        }
        Command::Enumerate { graph, limit } => {
            let graphs = input_graphs(graph)?;
            let many = graphs.len() > 1;
            for (text, g) in graphs {
                if many {
                    println!("# {text}");
                }
                let sets = match limit {
                    Some(cap) => mis::enumerate_capped(&g, cap).map_err(|e| match e {
                        MisError::LimitExceeded { .. } => {
                            Failure { code: EXIT_VIOLATION, message: format!("{text}: {e}") }
                        }
                        other => Failure::usage(format!("{text}: {other}")),
                    })?,
                    None => mis::enumerate(&g),
                };
                let mut stdout = std::io::stdout().lock();
                for s in sets {
                    let verts: Vec<String> = s.iter().map(|v| v.to_string()).collect();
                    writeln!(stdout, "{}", verts.join(" "))
                        .map_err(|e| Failure::parse(format!("stdout: {e}")))?;
                }
            }
            Ok(EXIT_PASS)
        }
        Command::Metrics { graph } => {
            let graphs = input_graphs(graph)?;
            let many = graphs.len() > 1;
            for (text, g) in graphs {
                let p = StructureProfile::of(&g);
                let prefix = if many { format!("graph={text} ") } else { String::new() };
                println!(
                    "{prefix}triangle_free={} triangle_matching_number={} induced_matching_number={}",
                    p.triangle_free, p.triangle_matching_number, p.induced_matching_number
                );
            }
            Ok(EXIT_PASS)
        }
        Command::Bound { theorem, n, t, precision } => {
            let theorem = Theorem::parse(&theorem).map_err(|e| Failure::usage(e.to_string()))?;
            let require_t = || t.ok_or_else(|| Failure::usage("this theorem requires -t".into()));
            let reject_t = || match t {
                Some(_) => Err(Failure::usage("this theorem takes no -t".into())),
                None => Ok(()),
            };
            match theorem {
                Theorem::GlobalMax => {
                    reject_t()?;
                    let v = bounds::mis_max(n).map_err(|e| Failure::usage(e.to_string()))?;
                    println!("{v}");
                }
                Theorem::TriangleFreeMax => {
                    reject_t()?;
                    let v = bounds::mis_triangle_free_max(n)
                        .map_err(|e| Failure::usage(e.to_string()))?;
                    println!("{v}");
                }
                Theorem::TriangleMatching => {
                    let t = require_t()?;
                    let v = bounds::g_bound(t, n).map_err(|e| Failure::usage(e.to_string()))?;
                    println!("{v}");
                }
                Theorem::InducedMatching => {
                    let t = require_t()?;
                    let p = parse_precision(precision)?;
                    let iv = bounds::h_bound(t, n, &p).map_err(|e| Failure::usage(e.to_string()))?;
                    let (lo, hi) = iv.to_decimal(16);
                    println!("[{lo}, {hi}]");
                }
            }
            Ok(EXIT_PASS)
        }
        Command::Construct { family, n, t, alt } => {
            let kind: FamilyKind = family.parse().map_err(|e| Failure::usage(format!("{e}")))?;
            let spec = FamilySpec { kind, n, t, alt };
            let g = spec.build().map_err(|e| Failure::usage(e.to_string()))?;
            println!("{}", graph6::encode(&g));
            Ok(EXIT_PASS)
        }
        Command::Verify { theorem, n, corpus, json, csv } => {
            let theorem = Theorem::parse(&theorem).map_err(|e| Failure::usage(e.to_string()))?;
            let report = match corpus {
                Some(path) => sweep::sweep_corpus(&path, theorem, n).map_err(sweep_failure)?,
                None => sweep::sweep_labeled(n, theorem).map_err(sweep_failure)?,
            };
            print!("{}", report.render());
            if let Some(path) = json {
                std::fs::write(&path, report.to_json_string())
                    .map_err(|e| Failure::usage(format!("writing {}: {e}", path.display())))?;
            }
            if let Some(path) = csv {
                let mut buf = Vec::new();
                report.write_csv(&mut buf).expect("vec write cannot fail");
                std::fs::write(&path, buf)
                    .map_err(|e| Failure::usage(format!("writing {}: {e}", path.display())))?;
            }
            Ok(verdict_exit(report.verdict()))
        }
        Command::CheckFacts { precision, t_max, span } => {
            let precision = parse_precision(precision)?;
            let t_max = t_max.unwrap_or(40);
            let span = span.unwrap_or(100);
            let ratios = bounds::check_fact1(t_max, span).map_err(|e| Failure::usage(e.to_string()))?;
            let constants = bounds::check_fact2(&precision).map_err(|e| Failure::usage(e.to_string()))?;
            print!("{}", ratios.render());
            print!("{}", constants.render());
            let verdict = match (ratios.verdict(), constants.verdict()) {
                (Verdict::Fail, _) | (_, Verdict::Fail) => Verdict::Fail,
                (Verdict::Inconclusive, _) | (_, Verdict::Inconclusive) => Verdict::Inconclusive,
                _ => Verdict::Pass,
            };
            Ok(verdict_exit(verdict))
        }
        Command::WoodBound { graph } => {
            for (_, g) in input_graphs(graph)? {
                println!("{}", mis::wood_bound(&g));
            }
            Ok(EXIT_PASS)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_USAGE,
            };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
