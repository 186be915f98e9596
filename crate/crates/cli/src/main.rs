//! Command-line front door: digraph generation, independence bounds, exact
//! oracles, constructive colorings, dichromatic polynomials, and the
//! verification suites, all seeded and reproducible.

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;
use serde::Serialize;

use dichroma_core::coloring::{
    dfs_mod_k_coloring, exact_chromatic_number, exact_coloring, greedy_girth_coloring,
    is_proper_coloring, partition_coloring, ColoringAssignment, CHROMATIC_DP_LIMIT,
};
use dichroma_core::dichromatic::{
    dichromatic_polynomial, verify_allcycle_lemma, verify_closed_forms, verify_coefficients,
    verify_dn_maximality, verify_puv_bound, DICHROMATIC_DP_LIMIT,
};
use dichroma_core::digraph::{parse_edge_list, DEFAULT_DP_LIMIT};
use dichroma_core::families::{
    d_tournament, directed_cycle, random_digraph, random_tournament, s_tournament,
    search_knn_orientation, transitive_tournament,
};
use dichroma_core::independence::{
    all_bounds, best_of_permutations, caro_wei_directed_bound_exact, exact_max_acyclic_set,
    random_deletion_acyclic_set,
};
use dichroma_core::{Digraph, SuiteReport};

#[derive(Parser)]
#[command(name = "dichroma", version, about = "Digraph combinatorics toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Dot,
    EdgeList,
}

#[derive(Args)]
struct Common {
    /// Edge-list input path, or "-" for standard input.
    #[arg(default_value = "-")]
    input: String,
    /// RNG seed; fixed default keeps every run reproducible.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Exact-oracle capacity gate (vertices).
    #[arg(long, default_value_t = DEFAULT_DP_LIMIT)]
    dp_limit: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Transitive,
    Sn,
    Dn,
    Cycle,
    RandomTournament,
    RandomDigraph,
    Knn,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Exact,
    DfsModK,
    GreedyGirth,
    Partition,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    DnMax,
    Allcycle,
    Puv,
    Coeff,
    Sn,
    CaroWei,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a digraph from a named family.
    Gen {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        n: usize,
        /// Subset size (knn family).
        #[arg(long, default_value_t = 2)]
        t: usize,
        /// Arc probability (random-digraph family).
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Search budget for the knn family.
        #[arg(long, default_value_t = 100_000)]
        attempts: u64,
        #[arg(long, value_enum, default_value_t = Format::EdgeList)]
        format: Format,
    },
    /// All independence-number lower bounds plus the exact oracle.
    Bounds(Common),
    /// Exact maximum acyclic set and the randomized extractors.
    Alpha {
        #[command(flatten)]
        common: Common,
        /// Random permutations to draw for the best-of extractor.
        #[arg(long, default_value_t = 100)]
        samples: u64,
        /// Keep probability for the random-deletion extractor.
        #[arg(long, default_value_t = 0.5)]
        p: f64,
    },
    /// Exact dichromatic number with an optimal coloring.
    Chi(Common),
    /// A proper coloring by the chosen procedure.
    Color {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = Method::Exact)]
        method: Method,
        /// Modulus / color budget (dfs-mod-k method).
        #[arg(long, default_value_t = 2)]
        k: usize,
    },
    /// Dichromatic polynomial coefficients (ascending, decimal strings).
    Poly(Common),
    /// Exhaustive verification suites; exits 1 on any violation.
    Verify {
        #[arg(long, value_enum, required_unless_present = "all")]
        suite: Option<Suite>,
        /// Run every suite at its default scale.
        #[arg(long)]
        all: bool,
        /// Largest order the suite enumerates (suite-specific default).
        #[arg(long)]
        max_n: Option<usize>,
        /// Random-sample count for sampled suites.
        #[arg(long)]
        samples: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Serialize)]
struct Meta {
    version: &'static str,
    seed: u64,
    dp_limit: usize,
    chromatic_dp_limit: usize,
    dichromatic_dp_limit: usize,
}

impl Meta {
    fn new(seed: u64, dp_limit: usize) -> Self {
        Meta {
            version: env!("CARGO_PKG_VERSION"),
            seed,
            dp_limit,
            chromatic_dp_limit: CHROMATIC_DP_LIMIT,
            dichromatic_dp_limit: DICHROMATIC_DP_LIMIT,
        }
    }
}

#[derive(Serialize)]
struct BoundLine {
    bound: &'static str,
    applicable: bool,
    value: Option<f64>,
    heuristic: bool,
}

#[derive(Serialize)]
struct BoundsReport {
    meta: Meta,
    n: usize,
    arcs: usize,
    bounds: Vec<BoundLine>,
    caro_wei_exact: String,
    exact_alpha: Option<usize>,
}

#[derive(Serialize)]
struct AlphaReport {
    meta: Meta,
    n: usize,
    exact_alpha: Option<usize>,
    exact_set: Option<Vec<usize>>,
    best_permutation_size: usize,
    best_permutation_set: Vec<usize>,
    random_deletion_size: usize,
    random_deletion_set: Vec<usize>,
}

#[derive(Serialize)]
struct ColorReport {
    meta: Meta,
    n: usize,
    method: &'static str,
    num_colors: usize,
    colors: Vec<usize>,
    proper: bool,
}

#[derive(Serialize)]
struct PolyReport {
    meta: Meta,
    n: usize,
    coeffs: Vec<String>,
}

#[derive(Serialize)]
struct SuiteLine {
    suite: &'static str,
    cases: u64,
    violations: Vec<String>,
    passed: bool,
}

fn suite_line(r: SuiteReport) -> SuiteLine {
    SuiteLine {
        passed: r.passed(),
        suite: r.suite,
        cases: r.cases,
        violations: r.violations,
    }
}

enum CliError {
    Usage(String),
    Violations,
}

fn read_digraph(input: &str) -> Result<Digraph, CliError> {
    let text = if input == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| CliError::Usage(format!("reading standard input: {e}")))?;
        buf
    } else {
        std::fs::read_to_string(input)
            .map_err(|e| CliError::Usage(format!("reading {input}: {e}")))?
    };
    parse_edge_list(&text).map_err(|e| CliError::Usage(format!("parsing {input}: {e}")))
}

fn emit<T: Serialize>(report: &T, format: Format, text: impl FnOnce() -> String) {
    match format {
        Format::Text => println!("{}", text()),
        _ => println!("{}", serde_json::to_string_pretty(report).unwrap()),
    }
}

fn coloring_dot(d: &Digraph, c: &ColoringAssignment) -> String {
    let mut out = String::from("digraph {\n  node [style=filled, colorscheme=set312];\n");
    for v in 0..d.vertex_count() {
        out.push_str(&format!("  {v} [fillcolor={}];\n", c.colors()[v] % 12 + 1));
    }
    for (u, v) in d.arcs() {
        out.push_str(&format!("  {u} -> {v};\n"));
    }
    out.push_str("}\n");
    out
}

fn run_gen(
    family: Family,
    n: usize,
    t: usize,
    p: f64,
    seed: u64,
    attempts: u64,
    format: Format,
) -> Result<(), CliError> {
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let usage = |e: &dyn std::fmt::Display| CliError::Usage(e.to_string());
    let d = match family {
        Family::Transitive => transitive_tournament(n).map_err(|e| usage(&e))?,
        Family::Sn => s_tournament(n).map_err(|e| usage(&e))?,
        Family::Dn => d_tournament(n).map_err(|e| usage(&e))?,
        Family::Cycle => directed_cycle(n).map_err(|e| usage(&e))?,
        Family::RandomTournament => random_tournament(n, &mut rng).map_err(|e| usage(&e))?,
        Family::RandomDigraph => random_digraph(n, p, &mut rng).map_err(|e| usage(&e))?,
        Family::Knn => match search_knn_orientation(n, t, attempts, &mut rng) {
            Ok(Some(d)) => d,
            Ok(None) => {
                eprintln!("no K_{{{n},{n}}} orientation found in {attempts} attempts (t={t})");
                return Err(CliError::Violations);
            }
            Err(e) => return Err(usage(&e)),
        },
    };
    match format {
        Format::Dot => print!("{}", d.to_dot()),
        _ => print!("{}", d.to_edge_list()),
    }
    Ok(())
}

fn run_bounds(common: &Common) -> Result<(), CliError> {
    let d = read_digraph(&common.input)?;
    let bounds = all_bounds(&d)
        .into_iter()
        .map(|b| BoundLine {
            bound: b.kind.name(),
            applicable: b.applicable,
            value: b.value,
            heuristic: b.heuristic,
        })
        .collect();
    let exact_alpha = if d.vertex_count() <= common.dp_limit {
        Some(exact_max_acyclic_set(&d).map_err(|e| CliError::Usage(e.to_string()))?.len())
    } else {
        None
    };
    let report = BoundsReport {
        meta: Meta::new(common.seed, common.dp_limit),
        n: d.vertex_count(),
        arcs: d.arc_count(),
        bounds,
        caro_wei_exact: caro_wei_directed_bound_exact(&d).to_string(),
        exact_alpha,
    };
    emit(&report, common.format, || {
        let mut s = format!("n = {}, arcs = {}\n", report.n, report.arcs);
        for b in &report.bounds {
            s.push_str(&match b.value {
                Some(v) => format!("{:<22} {v:.6}{}\n", b.bound, if b.heuristic { "  (heuristic)" } else { "" }),
                None => format!("{:<22} n/a\n", b.bound),
            });
        }
        s.push_str(&format!("caro_wei exact         {}\n", report.caro_wei_exact));
        match report.exact_alpha {
            Some(a) => s.push_str(&format!("alpha (exact)          {a}")),
            None => s.push_str("alpha (exact)          beyond dp limit"),
        }
        s
    });
    Ok(())
}

fn run_alpha(common: &Common, samples: u64, p: f64) -> Result<(), CliError> {
    let d = read_digraph(&common.input)?;
    let mut rng = ChaCha12Rng::seed_from_u64(common.seed);
    let best = best_of_permutations(&d, samples, &mut rng)
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let deletion = random_deletion_acyclic_set(&d, p, &mut rng)
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let exact = if d.vertex_count() <= common.dp_limit {
        Some(exact_max_acyclic_set(&d).map_err(|e| CliError::Usage(e.to_string()))?)
    } else {
        None
    };
    let report = AlphaReport {
        meta: Meta::new(common.seed, common.dp_limit),
        n: d.vertex_count(),
        exact_alpha: exact.map(|s| s.len()),
        exact_set: exact.map(|s| s.iter().collect()),
        best_permutation_size: best.len(),
        best_permutation_set: best.iter().collect(),
        random_deletion_size: deletion.len(),
        random_deletion_set: deletion.iter().collect(),
    };
    emit(&report, common.format, || {
        format!(
            "n = {}\nalpha (exact)       {}\nbest of {samples} perms   {}\nrandom deletion     {}",
            report.n,
            report
                .exact_alpha
                .map_or("beyond dp limit".into(), |a| a.to_string()),
            report.best_permutation_size,
            report.random_deletion_size,
        )
    });
    Ok(())
}

fn run_color(common: &Common, method: Method, k: usize) -> Result<(), CliError> {
    let d = read_digraph(&common.input)?;
    let (name, coloring) = match method {
        Method::Exact => (
            "exact",
            exact_coloring(&d).map_err(|e| CliError::Usage(e.to_string()))?,
        ),
        Method::DfsModK => (
            "dfs-mod-k",
            dfs_mod_k_coloring(&d, k).map_err(|e| CliError::Usage(format!("{e}")))?,
        ),
        Method::GreedyGirth => ("greedy-girth", greedy_girth_coloring(&d)),
        Method::Partition => (
            "partition",
            partition_coloring(&d).map_err(|e| CliError::Usage(format!("{e}")))?,
        ),
    };
    if common.format == Format::Dot {
        print!("{}", coloring_dot(&d, &coloring));
        return Ok(());
    }
    let report = ColorReport {
        meta: Meta::new(common.seed, common.dp_limit),
        n: d.vertex_count(),
        method: name,
        num_colors: coloring.num_colors(),
        colors: coloring.colors().to_vec(),
        proper: is_proper_coloring(&d, &coloring),
    };
    emit(&report, common.format, || {
        format!(
            "method {}: {} colors, proper = {}\ncolors: {:?}",
            report.method, report.num_colors, report.proper, report.colors
        )
    });
    Ok(())
}

fn run_chi(common: &Common) -> Result<(), CliError> {
    let d = read_digraph(&common.input)?;
    let chi = exact_chromatic_number(&d).map_err(|e| CliError::Usage(e.to_string()))?;
    let coloring = exact_coloring(&d).map_err(|e| CliError::Usage(e.to_string()))?;
    let report = ColorReport {
        meta: Meta::new(common.seed, common.dp_limit),
        n: d.vertex_count(),
        method: "exact",
        num_colors: chi,
        colors: coloring.colors().to_vec(),
        proper: is_proper_coloring(&d, &coloring),
    };
    emit(&report, common.format, || {
        format!("chi = {}\ncolors: {:?}", report.num_colors, report.colors)
    });
    Ok(())
}

fn run_poly(common: &Common) -> Result<(), CliError> {
    let d = read_digraph(&common.input)?;
    let poly = dichromatic_polynomial(&d).map_err(|e| CliError::Usage(e.to_string()))?;
    let report = PolyReport {
        meta: Meta::new(common.seed, common.dp_limit),
        n: d.vertex_count(),
        coeffs: poly.coeffs().iter().map(|c| c.to_string()).collect(),
    };
    emit(&report, common.format, || format!("{poly:?}"));
    Ok(())
}

fn run_verify(
    suite: Option<Suite>,
    all: bool,
    max_n: Option<usize>,
    samples: Option<u64>,
    seed: u64,
) -> Result<(), CliError> {
    let suites: Vec<Suite> = if all {
        vec![
            Suite::Sn,
            Suite::DnMax,
            Suite::Allcycle,
            Suite::Puv,
            Suite::Coeff,
            Suite::CaroWei,
        ]
    } else {
        vec![suite.expect("clap enforces --suite unless --all")]
    };
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let mut lines = Vec::new();
    for s in suites {
        let result = match s {
            Suite::Sn => verify_closed_forms(max_n.unwrap_or(10)),
            Suite::DnMax => {
                let mut merged = SuiteReport::new("dn-max");
                for n in 3..=max_n.unwrap_or(5) {
                    let r = verify_dn_maximality(n, &[2, 3, 4, 5])
                        .map_err(|e| CliError::Usage(format!("{e:?}")))?;
                    merged.cases += r.cases;
                    merged.violations.extend(r.violations);
                }
                Ok(merged)
            }
            Suite::Allcycle => {
                let mut merged = SuiteReport::new("allcycle");
                for n in 3..=max_n.unwrap_or(6) {
                    let r = verify_allcycle_lemma(n)
                        .map_err(|e| CliError::Usage(format!("{e:?}")))?;
                    merged.cases += r.cases;
                    merged.violations.extend(r.violations);
                }
                Ok(merged)
            }
            Suite::Puv => {
                let mut merged = SuiteReport::new("puv");
                for n in 3..=max_n.unwrap_or(5) {
                    let r = verify_puv_bound(n, &[2, 3, 4])
                        .map_err(|e| CliError::Usage(format!("{e:?}")))?;
                    merged.cases += r.cases;
                    merged.violations.extend(r.violations);
                }
                Ok(merged)
            }
            Suite::Coeff => {
                verify_coefficients(max_n.unwrap_or(6), samples.unwrap_or(300), &mut rng)
            }
            Suite::CaroWei => {
                dichroma_core::independence::verify_caro_wei(samples.unwrap_or(500), &mut rng)
                    .map_err(Into::into)
            }
        };
        let report = result.map_err(|e| CliError::Usage(format!("{e:?}")))?;
        lines.push(suite_line(report));
    }
    #[derive(Serialize)]
    struct VerifyReport {
        meta: Meta,
        suites: Vec<SuiteLine>,
    }
    let failed = lines.iter().any(|l| !l.passed);
    let report = VerifyReport {
        meta: Meta::new(seed, DEFAULT_DP_LIMIT),
        suites: lines,
    };
    println!("{}", serde_json::to_string_pretty(&report).unwrap());
    if failed {
        Err(CliError::Violations)
    } else {
        Ok(())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Gen {
            family,
            n,
            t,
            p,
            seed,
            attempts,
            format,
        } => run_gen(family, n, t, p, seed, attempts, format),
        Command::Bounds(common) => run_bounds(&common),
        Command::Alpha { common, samples, p } => run_alpha(&common, samples, p),
        Command::Chi(common) => run_chi(&common),
        Command::Color { common, method, k } => run_color(&common, method, k),
        Command::Poly(common) => run_poly(&common),
        Command::Verify {
            suite,
            all,
            max_n,
            samples,
            seed,
        } => run_verify(suite, all, max_n, samples, seed),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Violations) => ExitCode::from(1),
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
