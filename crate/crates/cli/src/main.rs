mod report;

use std::fs;
use std::io::{self, Read, Write};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use turan_core::family_m::{contains_m1, contains_m2, contains_m3_report, M3Mode, MViolation};
use turan_core::lagrangian::{
    default_resolution, lagrangian_certified, lagrangian_lower, LagrangianConfig,
};
use turan_core::region::{count_induced_k43minus, edit_distance_lower_bound, region_point};
use turan_core::search::{max_free_edges, two_n_cubed_bound, Family, SearchConfig};
use turan_core::symmetrize::{algorithm1, algorithm2, alpha_from_epsilon};
use turan_core::verify::{run_suite, Suite};
use turan_core::{rational_to_f64, Hypergraph, Rational};

use report::Report;

#[derive(Parser)]
#[command(
    name = "turan",
    version,
    about = "Turán-type computations for 3-graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a named construction as an edge list.
    Gen {
        /// g1, g2, g26, turan, kostochka, complete, k53minus, f32 or star
        name: String,
        params: Vec<usize>,
        #[arg(long, default_value = "-")]
        out: String,
    },
    /// Test whether a hypergraph contains a member of M. Exits 1 if it does.
    Check {
        file: String,
        #[arg(long, default_value = "exact")]
        mode: String,
        #[arg(long)]
        json: bool,
    },
    /// Lagrangian lower bound, optionally certified from above.
    Lagrangian {
        file: String,
        #[arg(long)]
        certify: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        resolution: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Run symmetrization and print the resulting hypergraph.
    Symmetrize {
        file: String,
        /// Density threshold as P/Q, for algorithm 2
        #[arg(long, conflicts_with = "epsilon")]
        alpha: Option<String>,
        /// Use alpha = 4/9 - 3 sqrt(epsilon)
        #[arg(long)]
        epsilon: Option<f64>,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=2))]
        algorithm: u8,
        /// Write the event trace as JSON
        #[arg(long)]
        trace: Option<String>,
        #[arg(long, default_value = "-")]
        out: String,
    },
    /// Exhaustive search for the largest family-free 3-graph.
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = FamilyArg::M)]
        family: FamilyArg,
        /// Forbidden hypergraphs for `--family custom`
        #[arg(long)]
        forbid: Vec<String>,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Shadow and edge density.
    Region {
        file: String,
        #[arg(long)]
        json: bool,
    },
    /// Number of 4-sets spanning exactly three edges.
    K43count { file: String },
    /// Lower bound on the edit distance between two hypergraphs.
    Edlb { file1: String, file2: String },
    /// Recompute the library's verification claims.
    VerifyLemmas {
        #[arg(long, default_value = "core")]
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    M,
    Custom,
}

/// Failure with its exit code.
struct Failure(u8, String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(2, e.to_string())
    }
}

type Outcome = Result<ExitCode, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = std::env::var("TURAN_THREADS")
        .ok()
        .and_then(|t| t.parse().ok())
    {
        // only fails if a pool already exists
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global();
    }
    match run(cli.command) {
        Ok(code) => code,
        Err(Failure(code, message)) => {
            eprintln!("error: {message}");
            ExitCode::from(code)
        }
    }
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Gen { name, params, out } => {
            let h = turan_core::constructions::by_name(&name, &params)?;
            write_output(&out, &h.to_edge_list())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Check { file, mode, json } => check(&file, &mode, json),
        Command::Lagrangian {
            file,
            certify,
            seed,
            resolution,
            json,
        } => lagrangian(&file, certify, seed, resolution, json),
        Command::Symmetrize {
            file,
            alpha,
            epsilon,
            algorithm,
            trace,
            out,
        } => symmetrize(&file, alpha, epsilon, algorithm, trace, &out),
        Command::Search {
            n,
            family,
            forbid,
            budget,
            json,
        } => search(n, family, &forbid, budget, json),
        Command::Region { file, json } => region(&file, json),
        Command::K43count { file } => {
            println!("{}", count_induced_k43minus(&read_graph(&file)?));
            Ok(ExitCode::SUCCESS)
        }
        Command::Edlb { file1, file2 } => {
            let bound = edit_distance_lower_bound(&read_graph(&file1)?, &read_graph(&file2)?)?;
            let ceil = bound.ceil().to_integer();
            println!("{} ({:.9})", fmt_rational(bound), rational_to_f64(&bound));
            println!("edit distance >= {ceil}");
            Ok(ExitCode::SUCCESS)
        }
        Command::VerifyLemmas { suite, seed, json } => verify(&suite, seed, json),
    }
}

fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| Failure(2, format!("{path}: {e}")))
    }
}

fn read_graph(path: &str) -> Result<Hypergraph, Failure> {
    Hypergraph::parse_edge_list(&read_input(path)?).map_err(|e| Failure(2, format!("{path}: {e}")))
}

fn write_output(path: &str, text: &str) -> Result<(), Failure> {
    if path == "-" {
        io::stdout().write_all(text.as_bytes())?;
        Ok(())
    } else {
        fs::write(path, text).map_err(|e| Failure(2, format!("{path}: {e}")))
    }
}

fn fmt_rational(x: Rational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

fn parse_rational(s: &str) -> Result<Rational, Failure> {
    let bad = || Failure(2, format!("expected a rational P/Q, got {s:?}"));
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (
            p.trim().parse().map_err(|_| bad())?,
            q.trim().parse().map_err(|_| bad())?,
        ),
        None => (s.trim().parse().map_err(|_| bad())?, 1),
    };
    if q == 0 {
        return Err(bad());
    }
    Ok(Rational::new(p, q))
}

fn check(file: &str, mode: &str, json: bool) -> Outcome {
    let start = Instant::now();
    let mode: M3Mode = mode.parse()?;
    let h = read_graph(file)?;
    let (violation, conclusive) = match contains_m1(&h).or_else(|| contains_m2(&h)) {
        Some(v) => (Some(v), true),
        None => {
            let r = contains_m3_report(&h, mode);
            (r.violation, r.conclusive)
        }
    };
    let verdict = match (&violation, conclusive) {
        (Some(_), _) => "false",
        (None, true) => "true",
        (None, false) => "inconclusive",
    };
    if json {
        let report = Report::new(
            "check",
            json!({ "file": file, "mode": mode, "n": h.vertex_count(), "edges": h.edge_count() }),
            json!({ "m_free": verdict, "violation": violation, "conclusive": conclusive }),
            start.elapsed(),
        );
        println!("{}", report.to_json());
    } else {
        println!("M-free: {verdict}");
        if let Some(v) = &violation {
            print_violation(v);
        }
        if !conclusive {
            println!("# no M3 member found, but the search above 21 vertices is not exhaustive");
        }
    }
    Ok(if violation.is_some() {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

fn print_violation(v: &MViolation) {
    let core: Vec<String> = v.core_set.iter().map(|x| x.to_string()).collect();
    println!("kind: {}", v.kind);
    println!("core: {}", core.join(" "));
    if v.flagged {
        println!("flagged: witness exceeds the 21-vertex bound");
    }
    println!("witness edges:");
    for e in &v.witness_edges {
        let e: Vec<String> = e.iter().map(|x| x.to_string()).collect();
        println!("{}", e.join(" "));
    }
}

fn lagrangian(
    file: &str,
    certify: bool,
    seed: u64,
    resolution: Option<usize>,
    json: bool,
) -> Outcome {
    let start = Instant::now();
    let h = read_graph(file)?;
    let config = LagrangianConfig {
        seed,
        ..LagrangianConfig::default()
    };
    let r = if certify {
        let d = resolution.unwrap_or_else(|| default_resolution(h.vertex_count()));
        lagrangian_certified(&h, &config, d)?
    } else {
        lagrangian_lower(&h, &config)?
    };
    if json {
        let certificate = r.certificate.as_ref().map(|c| {
            json!({
                "resolution": c.resolution,
                "upper_bound": report::exact(c.exact),
                "lattice_max": c.lattice_max,
                "correction": c.correction,
            })
        });
        let report = Report::new(
            "lagrangian",
            json!({ "file": file, "certify": certify, "resolution": resolution }),
            json!({
                "lower_bound": r.lower_bound,
                "maximizer": r.maximizer.weights(),
                "iterations": r.iterations,
                "restarts": r.restarts,
                "certificate": certificate,
            }),
            start.elapsed(),
        )
        .with_seed(seed);
        println!("{}", report.to_json());
    } else {
        let x: Vec<String> = r
            .maximizer
            .weights()
            .iter()
            .map(|w| format!("{w:.9}"))
            .collect();
        println!("lower bound: {:.12}", r.lower_bound);
        println!("maximizer: {}", x.join(" "));
        if let Some(c) = &r.certificate {
            println!(
                "upper bound: {} ({:.12}) at resolution {}",
                fmt_rational(c.exact),
                c.value,
                c.resolution
            );
            println!("lattice maximum: {:.12}", c.lattice_max);
            println!("correction: {:.3e}", c.correction);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn symmetrize(
    file: &str,
    alpha: Option<String>,
    epsilon: Option<f64>,
    algorithm: u8,
    trace_path: Option<String>,
    out: &str,
) -> Outcome {
    let h = read_graph(file)?;
    let t = if algorithm == 1 {
        if alpha.is_some() || epsilon.is_some() {
            return Err(Failure(2, "algorithm 1 takes no threshold".into()));
        }
        algorithm1(&h)
    } else {
        let alpha = match (alpha, epsilon) {
            (Some(a), _) => parse_rational(&a)?,
            (None, Some(e)) => alpha_from_epsilon(e)?,
            (None, None) => {
                return Err(Failure(2, "algorithm 2 needs --alpha or --epsilon".into()))
            }
        };
        algorithm2(&h, alpha)?
    };
    if let Some(path) = trace_path {
        let text = serde_json::to_string_pretty(&report::trace(&t))?;
        write_output(&path, &(text + "\n"))?;
    }
    let removed: Vec<String> = t.removed().iter().map(|v| v.to_string()).collect();
    let mut text = format!(
        "# algorithm {}: {} symmetrization steps, removed [{}]\n",
        t.algorithm,
        t.symmetrize_steps(),
        removed.join(" ")
    );
    text.push_str(&t.output_graph().to_edge_list());
    write_output(out, &text)?;
    Ok(ExitCode::SUCCESS)
}

fn search(
    n: usize,
    family: FamilyArg,
    forbid: &[String],
    budget: Option<u64>,
    json: bool,
) -> Outcome {
    let start = Instant::now();
    let family = match family {
        FamilyArg::M if forbid.is_empty() => Family::M,
        FamilyArg::M => return Err(Failure(2, "--forbid needs --family custom".into())),
        FamilyArg::Custom if forbid.is_empty() => {
            return Err(Failure(
                2,
                "--family custom needs at least one --forbid".into(),
            ))
        }
        FamilyArg::Custom => Family::Custom(
            forbid
                .iter()
                .map(|f| read_graph(f))
                .collect::<Result<_, _>>()?,
        ),
    };
    let mut config = SearchConfig::new(n, family);
    config.node_budget = budget;
    let r = max_free_edges(&config)?;
    let bound = two_n_cubed_bound(n);
    if json {
        let report = Report::new(
            "search",
            json!({ "n": n, "forbid": forbid, "budget": budget }),
            json!({
                "max_edges": r.max_edges,
                "optimal": r.optimal,
                "nodes_expanded": r.nodes_expanded,
                "bound_2n3_27": report::exact(bound),
                "witness": report::graph(&r.witness),
            }),
            start.elapsed(),
        );
        println!("{}", report.to_json());
    } else {
        let mut text = format!(
            "# max_edges: {}\n# optimal: {}\n# nodes: {}\n# 2n^3/27: {}\n",
            r.max_edges,
            r.optimal,
            r.nodes_expanded,
            fmt_rational(bound)
        );
        text.push_str(&r.witness.to_edge_list());
        write_output("-", &text)?;
    }
    Ok(ExitCode::SUCCESS)
}

fn region(file: &str, json: bool) -> Outcome {
    let start = Instant::now();
    let p = region_point(&read_graph(file)?);
    if json {
        let report = Report::new(
            "region",
            json!({ "file": file }),
            json!({
                "n": p.n,
                "shadow_size": p.shadow_size,
                "edge_count": p.edge_count,
                "shadow_density": report::exact(p.shadow_density),
                "edge_density": report::exact(p.edge_density),
            }),
            start.elapsed(),
        );
        println!("{}", report.to_json());
    } else {
        println!(
            "shadow density: {} ({:.9})",
            fmt_rational(p.shadow_density),
            p.shadow_f64()
        );
        println!(
            "edge density: {} ({:.9})",
            fmt_rational(p.edge_density),
            p.edge_f64()
        );
    }
    Ok(ExitCode::SUCCESS)
}

fn verify(suite: &str, seed: u64, json: bool) -> Outcome {
    let start = Instant::now();
    let suite: Suite = suite.parse()?;
    let report = run_suite(suite, seed, |c| {
        if !json {
            println!("{}", c.line());
        }
    });
    let passed = report.claims.iter().filter(|c| c.passed).count();
    if json {
        let doc = Report::new(
            "verify-lemmas",
            json!({ "suite": suite }),
            serde_json::to_value(&report)?,
            start.elapsed(),
        )
        .with_seed(seed);
        println!("{}", doc.to_json());
    } else {
        println!("{passed}/{} claims passed", report.claims.len());
    }
    Ok(if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
