//! `dgb`: Janet-like Gröbner bases of linear difference systems.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use dgb::division::DivisionKind;
use dgb::engine::{complete, CompletionConfig, EngineError};
use dgb::io::{format_system, parse_system};
use dgb::oracle;
use dgb::sample::{random_system, SampleParams};
use dgb::tools::{extract_reduced_gb, verify};

const EXIT_VERIFY: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_CAP: u8 = 3;

#[derive(Parser)]
#[command(name = "dgb", version, about = "Janet-like Gröbner bases of linear difference ideals")]
#[command(args_conflicts_with_subcommands = true)]
struct Cli {
    #[command(subcommand)]
    command: Option<Cmd>,

    /// Compare the engine against the reference Buchberger implementation
    /// on random systems.
    #[arg(long, hide = true)]
    self_test: bool,

    #[arg(long, hide = true, default_value_t = 50)]
    self_test_cases: usize,

    #[arg(long, hide = true, default_value_t = 1)]
    self_test_seed: u64,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute a basis of the ideal generated by a system file.
    Compute(ComputeArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum BasisKind {
    /// Minimal Janet-like basis.
    Jlb,
    /// Minimal Janet basis.
    Janet,
    /// Reduced Gröbner basis, extracted from the Janet-like basis.
    Gb,
}

#[derive(clap::Args)]
struct ComputeArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = BasisKind::Jlb)]
    basis: BasisKind,
    /// Check the completeness condition, cone disjointness and coverage.
    #[arg(long)]
    verify: bool,
    /// Append cardinality and completion counters.
    #[arg(long)]
    stats: bool,
    /// Find reductors by linear scan instead of the Janet tree.
    #[arg(long)]
    no_tree: bool,
    #[arg(long, default_value_t = CompletionConfig::default().max_iterations)]
    max_iter: usize,
    /// Write the result here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

fn compute(args: &ComputeArgs) -> ExitCode {
    let text = match std::fs::read_to_string(&args.input) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", args.input.display());
            return ExitCode::from(EXIT_PARSE);
        }
    };
    let system = match parse_system(&text) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {}: {e}", args.input.display());
            return ExitCode::from(EXIT_PARSE);
        }
    };
    for w in &system.warnings {
        eprintln!("warning: {w}");
    }

    let division = match args.basis {
        BasisKind::Janet => DivisionKind::Janet,
        BasisKind::Jlb | BasisKind::Gb => DivisionKind::JanetLike,
    };
    let config = CompletionConfig {
        division,
        use_tree: !args.no_tree,
        max_iterations: args.max_iter,
    };
    let result = match complete(&system.ring, &system.polynomials, &config) {
        Ok(r) => r,
        Err(e @ EngineError::ResourceCap { .. }) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_CAP);
        }
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_PARSE);
        }
    };
    let polys = match args.basis {
        BasisKind::Gb => extract_reduced_gb(&result).expect("completed basis is complete"),
        _ => result.basis.clone(),
    };

    let mut out = format_system(&system.ring, &polys);
    let mut verified = true;
    if args.stats {
        let s = &result.stats;
        let _ = writeln!(out, "# card = {}", polys.len());
        let _ = writeln!(out, "# division = {}", result.division);
        let _ = writeln!(out, "# normal_forms = {}", s.normal_forms);
        let _ = writeln!(out, "# reductions = {}", s.reductions);
        let _ = writeln!(out, "# prolongations = {}", s.prolongations);
        let _ = writeln!(out, "# prolongations_skipped = {}", s.prolongations_skipped);
        let _ = writeln!(out, "# insertions = {}", s.insertions);
        let _ = writeln!(out, "# displacements = {}", s.displacements);
        let _ = writeln!(out, "# queue_peak = {}", s.queue_peak);
    }
    if args.verify {
        let report = verify(&result, &system.polynomials).expect("basis elements are valid");
        let flag = |ok: bool| if ok { "ok" } else { "FAILED" };
        let _ = writeln!(
            out,
            "# verify: condition4 = {}, cone_disjointness = {}, coverage = {}",
            flag(report.condition4_ok),
            flag(report.cone_disjointness_ok),
            flag(report.coverage_ok)
        );
        if let Some(c) = &report.counterexample {
            let _ = writeln!(
                out,
                "# counterexample: element {} prolonged by {} leaves {}",
                c.element + 1,
                c.power,
                dgb::io::format_poly(&c.remainder, &system.ring)
            );
        }
        verified = report.all_ok();
    }

    match &args.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &out) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(EXIT_PARSE);
            }
        }
        None => print!("{out}"),
    }
    if verified {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_VERIFY)
    }
}

fn self_test(cases: usize, seed: u64) -> ExitCode {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let params = SampleParams::default();
    let mut failures = 0;
    for case in 0..cases {
        let (ring, gens) = random_system(&mut rng, &params);
        let result = match complete(&ring, &gens, &CompletionConfig::default()) {
            Ok(r) => r,
            Err(e) => {
                println!("case {case}: completion failed: {e}");
                failures += 1;
                continue;
            }
        };
        let report = verify(&result, &gens).expect("valid basis");
        let ours = extract_reduced_gb(&result).ok();
        let theirs = oracle::reduced_gb(&ring, &gens).ok();
        if !report.all_ok() || ours.is_none() || ours != theirs {
            println!("case {case}: mismatch\n{}", format_system(&ring, &gens));
            failures += 1;
        }
    }
    println!("self-test: {cases} cases, {failures} failures");
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_VERIFY)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.self_test {
        return self_test(cli.self_test_cases, cli.self_test_seed);
    }
    match cli.command {
        Some(Cmd::Compute(args)) => compute(&args),
        None => {
            eprintln!("error: no command given; see `dgb --help`");
            ExitCode::from(EXIT_PARSE)
        }
    }
}
