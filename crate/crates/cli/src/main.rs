//! `bitcode` — construct perfect binary codes and machine-check their
//! structural properties.
//!
//! Exit codes: 0 = the checked property holds (or the construction
//! succeeded), 1 = the property computed false, 2 = usage or input error.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};

use bitcode_core::report::{CheckReport, ReproReport, ReproRow};
use bitcode_core::suite::{self, SuiteConfig};
use bitcode_core::{code, groups, io, sts, vasiliev, Code, LambdaFn, SteinerTripleSystem, Word};

#[derive(Parser)]
#[command(name = "bitcode", version, about = "Perfect binary codes: constructions and structural checks")]
struct Cli {
    #[command(subcommand)]
    command: Commands,
}

#[derive(Subcommand)]
enum Commands {
    /// Build a code, a doubled triple system, or a λ table and write it out
    #[command(subcommand)]
    Construct(ConstructCmd),
    /// Run a structural check and report the verdict
    #[command(subcommand)]
    Check(CheckCmd),
    /// Run the reproduction suite (all claims, or a subset via --only)
    Repro(ReproArgs),
}

#[derive(Subcommand)]
enum ConstructCmd {
    /// The linear perfect code of length 2^k - 1
    Hamming {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        out: OutArgs,
    },
    /// The length-(2n+1) code built from a base code and a λ function
    Vasiliev {
        /// Base code: a named object or a code file path
        #[arg(long)]
        base: String,
        /// λ: a named object (V22_1, V3_11, zero) or a λ file path
        #[arg(long)]
        lambda: String,
        #[command(flatten)]
        out: OutArgs,
    },
    /// The doubled Steiner triple system S^θ of order 2n+1
    Doubling {
        /// Base system: `fano` or an STS file path
        #[arg(long)]
        sts: String,
        /// θ: `all-zero`, `all-one`, or a θ file path
        #[arg(long)]
        theta: String,
        #[command(flatten)]
        out: OutArgs,
    },
}

#[derive(Args)]
struct OutArgs {
    /// Output path (a format-appropriate default is used when omitted)
    #[arg(long)]
    out: Option<PathBuf>,
    /// Emit the report as JSON
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum CheckCmd {
    /// Code statistics: size, rank, kernel, distance, perfectness
    Analyze(CodeArgs),
    /// Every neighborhood system isomorphic to the one at zero
    Homogeneity(CodeArgs),
    /// Every codeword reachable by an automorphism
    Transitivity(CodeArgs),
    /// |Sym|·|Tr| = |Rot|·|Ker| plus the subgroup chain
    Identity(CodeArgs),
    /// Lift λ and decide transitivity at the lifted length
    Reduction {
        /// λ: a named object or a λ file path
        #[arg(long)]
        lambda: String,
        /// Lift levels (1 decides length 31, 2 decides length 63)
        #[arg(long, default_value_t = 1)]
        levels: u32,
        #[arg(long, default_value_t = 1000)]
        budget: u64,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct CodeArgs {
    /// Code: a named object (hamming7_paper, V22_1, V3_11) or a file path
    #[arg(long)]
    code: String,
    /// Sampling budget for checks on codes too large to enumerate
    #[arg(long, default_value_t = 1000)]
    budget: u64,
    #[arg(long)]
    json: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ReproArgs {
    /// Claim ids to run (default: all)
    #[arg(long)]
    only: Vec<String>,
    #[arg(long, default_value_t = 1000)]
    budget: u64,
    #[arg(long)]
    json: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Outcome classes mapped to exit codes.
enum Verdict {
    Holds,
    False,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(Verdict::Holds) => ExitCode::SUCCESS,
        Ok(Verdict::False) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(cli: Cli) -> bitcode_core::Result<Verdict> {
    match cli.command {
        Commands::Construct(cmd) => construct(cmd),
        Commands::Check(cmd) => check(cmd),
        Commands::Repro(args) => repro(args),
    }
}

const NAMED_CODES: [&str; 3] = ["hamming7_paper", "V22_1", "V3_11"];

fn resolve_code(arg: &str) -> bitcode_core::Result<Code> {
    if NAMED_CODES.contains(&arg) {
        vasiliev::named_code(arg)
    } else {
        io::read_code(Path::new(arg))
    }
}

fn resolve_lambda(arg: &str) -> bitcode_core::Result<Arc<LambdaFn>> {
    if ["V22_1", "V3_11", "zero"].contains(&arg) {
        vasiliev::lambda_named(arg)
    } else {
        io::read_lambda(Path::new(arg))
    }
}

fn resolve_sts(arg: &str) -> bitcode_core::Result<SteinerTripleSystem> {
    if arg == "fano" {
        sts::neighborhood_sts(&code::hamming7_paper(), &Word::zero(7))
    } else {
        io::read_sts(Path::new(arg))
    }
}

fn emit(text: String, json: bool, report: Option<&CheckReport>, out: Option<&Path>) -> bitcode_core::Result<()> {
    let payload = if json {
        report.map(|r| r.to_json()).unwrap_or_else(|| text.clone())
    } else {
        text
    };
    match out {
        Some(p) if json => std::fs::write(p, &payload)?,
        _ => println!("{payload}"),
    }
    Ok(())
}

fn stats_summary(stats: &code::CodeStats) -> String {
    let dist: Vec<String> = stats
        .weight_distribution
        .iter()
        .map(|(w, c)| format!("{w}:{c}"))
        .collect();
    format!(
        "n={} size={} rank={} kernel={} min_distance={} perfect={}\nweights {{{}}}\n{}",
        stats.n,
        stats.size,
        stats.rank,
        stats.kernel_size,
        stats.min_distance,
        stats.is_perfect,
        dist.join(", "),
        stats.method_notes.join("\n")
    )
}

fn construct(cmd: ConstructCmd) -> bitcode_core::Result<Verdict> {
    match cmd {
        ConstructCmd::Hamming { n, out } => {
            let c = code::hamming(n)?;
            let path = out.out.unwrap_or_else(|| PathBuf::from(format!("hamming{n}.code")));
            io::write_code(&path, &c)?;
            let stats = code::stats(&c, 1000, 0xC0DE);
            let report = CheckReport::new(&format!("hamming{n}"), &stats).with_stats_detail(&stats);
            emit(
                format!("wrote {} ({} words)\n{}", path.display(), c.size(), stats_summary(&stats)),
                out.json,
                Some(&report),
                None,
            )?;
            Ok(Verdict::Holds)
        }
        ConstructCmd::Vasiliev { base, lambda, out } => {
            let lam = resolve_lambda(&lambda)?;
            let base_code = resolve_code(&base)?;
            // λ must live on the requested base; named λs carry their own.
            let lam = if base_code.same_set(lam.base()) {
                lam
            } else {
                return Err(bitcode_core::Error::LambdaDomain(format!(
                    "λ {lambda:?} is not defined on base {base:?}"
                )));
            };
            let v = vasiliev::vasiliev_construct(lam.base(), &lam)?;
            let path = out
                .out
                .unwrap_or_else(|| PathBuf::from(format!("vasiliev_{}.code", sanitize(&lambda))));
            io::write_code(&path, &v)?;
            let stats = code::stats(&v, 1000, 0xC0DE);
            let report =
                CheckReport::new(&format!("vasiliev({base},{lambda})"), &stats).with_stats_detail(&stats);
            emit(
                format!("wrote {} ({} words)\n{}", path.display(), v.size(), stats_summary(&stats)),
                out.json,
                Some(&report),
                None,
            )?;
            Ok(Verdict::Holds)
        }
        ConstructCmd::Doubling { sts: sts_arg, theta, out } => {
            let base = Arc::new(resolve_sts(&sts_arg)?);
            let theta_fn = match theta.as_str() {
                "all-zero" => sts::ThetaFn::constant(base.clone(), false),
                "all-one" => sts::ThetaFn::constant(base.clone(), true),
                path => io::read_theta(Path::new(path), base.clone())?,
            };
            let doubled = sts::am_doubling(&base, &theta_fn)?;
            let path = out.out.unwrap_or_else(|| PathBuf::from("doubling.sts"));
            io::write_sts(&path, &doubled)?;
            println!(
                "wrote {} (order {}, {} triples)",
                path.display(),
                doubled.order(),
                doubled.triples().len()
            );
            Ok(Verdict::Holds)
        }
    }
}

fn sanitize(s: &str) -> String {
    s.chars().map(|c| if c.is_alphanumeric() { c } else { '_' }).collect()
}

fn check(cmd: CheckCmd) -> bitcode_core::Result<Verdict> {
    match cmd {
        CheckCmd::Analyze(args) => {
            let c = resolve_code(&args.code)?;
            let stats = code::stats(&c, args.budget, 0xC0DE);
            let report = CheckReport::new(&args.code, &stats).with_stats_detail(&stats);
            emit(stats_summary(&stats), args.json, Some(&report), args.out.as_deref())?;
            Ok(Verdict::Holds)
        }
        CheckCmd::Homogeneity(args) => {
            let c = resolve_code(&args.code)?;
            let rep = groups::is_homogeneous(&c, args.budget, 0xC0DE)?;
            let stats = code::stats(&c, args.budget.min(100), 0xC0DE);
            let report = CheckReport::new(&args.code, &stats).with_homogeneity(&rep);
            emit(
                format!(
                    "homogeneous: {} ({} over {} representatives)",
                    rep.homogeneous, rep.method, rep.representatives_checked
                ),
                args.json,
                Some(&report),
                args.out.as_deref(),
            )?;
            Ok(if rep.homogeneous { Verdict::Holds } else { Verdict::False })
        }
        CheckCmd::Transitivity(args) => {
            let c = resolve_code(&args.code)?;
            let rep = groups::is_transitive(&c)?;
            let stats = code::stats(&c, args.budget.min(100), 0xC0DE);
            let report = CheckReport::new(&args.code, &stats).with_transitivity(&rep);
            let failing: Vec<String> = rep.failing.iter().map(|w| w.support_string()).collect();
            let mut text = format!("transitive: {}", rep.transitive);
            if !failing.is_empty() {
                text.push_str(&format!("\nfailing translators: {}", failing.join(" ")));
            }
            emit(text, args.json, Some(&report), args.out.as_deref())?;
            Ok(if rep.transitive { Verdict::Holds } else { Verdict::False })
        }
        CheckCmd::Identity(args) => {
            let c = resolve_code(&args.code)?;
            let rep = groups::order_identity_check(&c)?;
            let stats = code::stats(&c, args.budget.min(100), 0xC0DE);
            let report = CheckReport::new(&args.code, &stats).with_identity(&rep);
            let holds = rep.identity_holds && rep.chain_holds;
            emit(
                format!(
                    "identity: |Sym|·|Tr| = {}·{} = {} and |Rot|·|Ker| = {}·{} = {} -> {}\nchain Sym ≤ Rot ≤ Sym(Ker): {}",
                    rep.sym,
                    rep.tr,
                    rep.sym * rep.tr,
                    rep.rot,
                    rep.ker,
                    rep.rot * rep.ker,
                    rep.identity_holds,
                    rep.chain_holds
                ),
                args.json,
                Some(&report),
                args.out.as_deref(),
            )?;
            Ok(if holds { Verdict::Holds } else { Verdict::False })
        }
        CheckCmd::Reduction { lambda, levels, budget, json, out } => {
            let lam = resolve_lambda(&lambda)?;
            let rep = groups::transitivity_reduction(&lam, levels, budget.max(1) << 10)?;
            let base_code = vasiliev::vasiliev_construct(lam.base(), &lam)?;
            let stats = code::stats(&base_code, budget.min(100), 0xC0DE);
            let report = CheckReport::new(&lambda, &stats).with_reduction(&rep);
            emit(rep.conclusion.clone(), json, Some(&report), out.as_deref())?;
            Ok(if rep.base_transitive { Verdict::Holds } else { Verdict::False })
        }
    }
}

fn repro(args: ReproArgs) -> bitcode_core::Result<Verdict> {
    let config = SuiteConfig { budget: args.budget, ..SuiteConfig::default() };
    let ids: Vec<&str> = if args.only.is_empty() {
        suite::IDS.to_vec()
    } else {
        let mut picked = Vec::new();
        for want in &args.only {
            let id = suite::IDS
                .iter()
                .find(|&&id| id == want)
                .ok_or_else(|| bitcode_core::Error::UnknownName(want.clone()))?;
            picked.push(*id);
        }
        picked
    };
    let mut rows = Vec::new();
    let mut all_passed = true;
    for id in ids {
        let outcome = suite::run(id, &config)?;
        all_passed &= outcome.passed;
        if !args.json {
            println!(
                "[{}] {:<14} {:>8.2}s",
                if outcome.passed { "PASS" } else { "FAIL" },
                outcome.id,
                outcome.seconds
            );
            for line in &outcome.detail {
                println!("       {line}");
            }
        }
        rows.push(ReproRow {
            id: outcome.id.to_string(),
            passed: outcome.passed,
            seconds: outcome.seconds,
            detail: outcome.detail,
        });
    }
    let report = ReproReport { rows, all_passed };
    if args.json {
        let payload = serde_json::to_string_pretty(&report).expect("report serializes");
        match &args.out {
            Some(p) => std::fs::write(p, payload)?,
            None => println!("{payload}"),
        }
    } else if let Some(p) = &args.out {
        std::fs::write(p, serde_json::to_string_pretty(&report).expect("report serializes"))?;
    }
    Ok(if all_passed { Verdict::Holds } else { Verdict::False })
}
