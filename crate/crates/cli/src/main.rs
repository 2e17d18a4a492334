//! Command-line front-end: build matching arrangements, compute
//! characteristic polynomials and region counts, query maximum-weight
//! matchings, probe region constancy, and run the identity suite.
//!
//! Exit status: 0 on success (and all checks passing), 1 when a
//! verification fails, 2 on input or guard errors.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use matcharr::{
    build_flat_lattice_with_limit, build_matching_arrangement_with_limit, max_weight_matchings,
    probe_theorem2, run_suite, Arrangement, EdgeNumbering, Graph, IntPolynomial, Matching,
    WeightPoint,
};

const DEFAULT_MAX_EDGES: usize = matcharr::paths::MAX_ENUM_EDGES;
const DEFAULT_MAX_HYPERPLANES: usize = matcharr::lattice::MAX_LATTICE_HYPERPLANES;

#[derive(Parser)]
#[command(
    name = "matcharr",
    version,
    about = "Matching arrangements of graphs: exact characteristic polynomials, region counts, and maximum-matching probes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct GraphArgs {
    /// Graph file: a "V E" header line, then one "u v" line per edge;
    /// `#` starts a comment line
    #[arg(short, long)]
    input: PathBuf,
    /// Edge numbering as a comma-separated permutation of 1..n
    /// (default: file order)
    #[arg(long)]
    numbering: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Raise the edge-count guard (may be slow)
    #[arg(long)]
    max_edges: Option<usize>,
    /// Raise the hyperplane-count guard on lattice construction
    /// (may be slow)
    #[arg(long)]
    max_hyperplanes: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Print the hyperplanes of the matching arrangement
    Arrangement(GraphArgs),
    /// Characteristic polynomial of the matching arrangement
    Charpoly(GraphArgs),
    /// Number of regions of the matching arrangement
    Regions(GraphArgs),
    /// Maximum-weight matchings under the given edge weights
    Matching {
        #[command(flatten)]
        graph: GraphArgs,
        /// Comma-separated integer weights, one per edge in file order
        #[arg(long)]
        weights: String,
    },
    /// Sample generic weight points and verify region constancy of the
    /// maximum matching
    Probe {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
    /// Run the built-in identity suite
    Verify {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Arrangement(args) => {
            let (_, _, a) = load(&args)?;
            match args.format {
                Format::Json => println!("{}", a.to_json()),
                Format::Text => {
                    println!("dimension: {}", a.dimension());
                    println!("hyperplanes: {}", a.len());
                    for h in a.hyperplanes() {
                        println!("{} = 0", equation(h.normal()));
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Charpoly(args) => {
            let chi = charpoly(&args)?;
            match args.format {
                Format::Json => println!("{{\"chi\":{}}}", chi.coeffs_json()),
                Format::Text => match chi.split_linear() {
                    Some((unit, factors)) => println!("chi(t) = {}", factored(&unit, &factors)),
                    None => println!("chi(t) = {chi}"),
                },
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Regions(args) => {
            let chi = charpoly(&args)?;
            let value = chi.eval_int(&BigInt::from(-1));
            let regions = value.magnitude();
            match args.format {
                Format::Json => println!("{{\"regions\":{regions}}}"),
                Format::Text => println!("{regions}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Matching { graph, weights } => {
            let (g, _, _) = load(&graph)?;
            let weights = parse_weights(&weights, g.edge_count())?;
            let best =
                max_weight_matchings(&g, &weights).map_err(|e| e.to_string())?;
            match graph.format {
                Format::Json => {
                    let sets: Vec<String> = best.iter().map(matching_json).collect();
                    println!("{{\"argmax\":[{}]}}", sets.join(","));
                }
                Format::Text => {
                    for m in &best {
                        let nums: Vec<String> =
                            m.edges().iter().map(|e| (e + 1).to_string()).collect();
                        println!("{{{}}}", nums.join(","));
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Probe {
            graph,
            samples,
            seed,
        } => {
            let (g, num, _) = load(&graph)?;
            let report =
                probe_theorem2(&g, &num, samples, seed).map_err(|e| e.to_string())?;
            match graph.format {
                Format::Json => println!("{}", report.to_json()),
                Format::Text => {
                    println!("sign_vectors_seen: {}", report.sign_vectors_seen);
                    println!("constancy_violations: {}", report.constancy_violations);
                    println!("uniqueness_violations: {}", report.uniqueness_violations);
                    println!("samples: {}", report.samples);
                    println!("seed: {}", report.seed);
                }
            }
            let ok = report.constancy_violations == 0 && report.uniqueness_violations == 0;
            Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Verify { format } => {
            let reports = run_suite(&matcharr::default_suite()).map_err(|e| e.to_string())?;
            let failed = reports.iter().filter(|r| !r.pass).count();
            match format {
                Format::Json => {
                    let rows: Vec<String> = reports.iter().map(|r| r.to_json()).collect();
                    println!("[{}]", rows.join(","));
                }
                Format::Text => {
                    for r in &reports {
                        let status = if r.pass { "PASS" } else { "FAIL" };
                        println!("{status} {} — {}", r.theorem_id, r.instance_description);
                    }
                    println!("{}/{} passed", reports.len() - failed, reports.len());
                }
            }
            Ok(if failed == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

/// Reads the graph, numbering, and matching arrangement from common args.
fn load(args: &GraphArgs) -> Result<(Graph, EdgeNumbering, Arrangement), String> {
    let text = std::fs::read_to_string(&args.input)
        .map_err(|e| format!("cannot read {}: {e}", args.input.display()))?;
    let g = Graph::parse(&text).map_err(|e| e.to_string())?;
    let num = match &args.numbering {
        Some(spec) => {
            let numbers = parse_usize_list(spec)?;
            EdgeNumbering::new(numbers).map_err(|e| e.to_string())?
        }
        None => EdgeNumbering::identity(g.edge_count()),
    };
    if num.len() != g.edge_count() {
        return Err(format!(
            "numbering has {} entries for {} edges",
            num.len(),
            g.edge_count()
        ));
    }
    let max_edges = guard_override(args.max_edges, DEFAULT_MAX_EDGES, "edge-count");
    let a = build_matching_arrangement_with_limit(&g, &num, max_edges)
        .map_err(|e| e.to_string())?;
    Ok((g, num, a))
}

fn charpoly(args: &GraphArgs) -> Result<IntPolynomial, String> {
    let (_, _, a) = load(args)?;
    let max_planes = guard_override(
        args.max_hyperplanes,
        DEFAULT_MAX_HYPERPLANES,
        "hyperplane-count",
    );
    let lattice = build_flat_lattice_with_limit(&a, max_planes).map_err(|e| e.to_string())?;
    Ok(lattice.characteristic_polynomial())
}

fn guard_override(requested: Option<usize>, default: usize, what: &str) -> usize {
    match requested {
        Some(limit) if limit > default => {
            eprintln!("warning: raising {what} guard to {limit}; this may be slow");
            limit
        }
        Some(limit) => limit,
        None => default,
    }
}

fn parse_usize_list(spec: &str) -> Result<Vec<usize>, String> {
    spec.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<usize>()
                .map_err(|_| format!("bad list entry `{tok}`"))
        })
        .collect()
}

fn parse_weights(spec: &str, edges: usize) -> Result<WeightPoint, String> {
    let values: Vec<i64> = spec
        .split(',')
        .map(|tok| {
            tok.trim()
                .parse::<i64>()
                .map_err(|_| format!("bad weight `{tok}`"))
        })
        .collect::<Result<_, _>>()?;
    if values.len() != edges {
        return Err(format!("{} weights given for {edges} edges", values.len()));
    }
    Ok(WeightPoint::from_integers(&values))
}

fn matching_json(m: &Matching) -> String {
    let nums: Vec<String> = m.edges().iter().map(|e| (e + 1).to_string()).collect();
    format!("[{}]", nums.join(","))
}

fn equation(normal: &[i8]) -> String {
    let mut out = String::new();
    for (i, &c) in normal.iter().enumerate() {
        match c {
            0 => {}
            1 if out.is_empty() => out.push_str(&format!("x{}", i + 1)),
            1 => out.push_str(&format!(" + x{}", i + 1)),
            _ if out.is_empty() => out.push_str(&format!("-x{}", i + 1)),
            _ => out.push_str(&format!(" - x{}", i + 1)),
        }
    }
    out
}

fn factored(unit: &BigInt, factors: &[(i64, usize)]) -> String {
    let mut out = String::new();
    if unit != &BigInt::from(1) {
        out.push_str(&unit.to_string());
    }
    for &(root, mult) in factors {
        let base = match root {
            0 => "t".to_string(),
            r => format!("(t - {r})"),
        };
        out.push_str(&base);
        if mult > 1 {
            out.push_str(&format!("^{mult}"));
        }
    }
    if out.is_empty() {
        out.push('1');
    }
    out
}
