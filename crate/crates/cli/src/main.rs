//! `oscbound`: lower bounds for real osculating Schubert problems from the command line.
//!
//! Exit codes: 0 ok, 1 a check failed, 2 bad input.

mod problem;
mod render;
mod verify;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use oscbound::bounds::{bound_table, hhs_count_r, hhs_sharp_bound, twisted_product, white_bound};
use oscbound::characters::{
    character_value, character_value_direct, character_value_via_expansion, plethysm_product, shifted_target,
    ProductClass,
};
use oscbound::partitions::Partition;
use oscbound::symfunc::CycleType;

use problem::{parse_lambda_flag, LambdaEntry, PairSpec, ProblemFile};
use render::{Int, Rendered};
use verify::CheckLine;

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Check(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Input(m) | CliError::Check(m) => f.write_str(m),
        }
    }
}

const THREADS_VAR: &str = "OSCBOUND_THREADS";

#[derive(Parser)]
#[command(
    name = "oscbound",
    version,
    about = "Lower bounds for real solutions of osculating Schubert problems"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Lower bound |a| for a Schubert problem, from flags or problem files.
    Bound(BoundArgs),
    /// Trace of a product class on a multiplicity space.
    Character(CharacterArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Sign-imbalance of the p x m rectangle.
    SignImbalance {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        p: u32,
    },
    /// Real-point count r(k, n, s), or the sharp bound for c pairs with --c.
    RealCount {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        n: u32,
        #[arg(long, conflicts_with = "c")]
        s: Option<u32>,
        #[arg(long)]
        c: Option<u32>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args)]
struct BoundArgs {
    /// Problem files (JSON or TOML); one problem each.
    #[arg(conflicts_with_all = ["n", "d", "lambda", "nu"])]
    files: Vec<PathBuf>,
    #[arg(long)]
    n: Option<usize>,
    /// Defaults to the value forced by the weight condition.
    #[arg(long)]
    d: Option<u32>,
    /// Repeatable; `2,1:x3` is three copies of (2,1).
    #[arg(long, value_parser = parse_lambda_flag)]
    lambda: Vec<LambdaEntry>,
    #[arg(long)]
    nu: Option<String>,
    /// Number of conjugate pairs, or an inclusive range `a..b`.
    #[arg(long)]
    c: Option<PairSpec>,
    /// Every admissible c when --c is not given.
    #[arg(long)]
    table: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Cross-check against the Schur expansion and Littlewood-Richardson routes.
    #[arg(long)]
    verify: bool,
    /// Include the truncated twisted product polynomial.
    #[arg(long)]
    dump_poly: bool,
}

#[derive(Args)]
struct CharacterArgs {
    /// Repeatable; `2,1@3,1` is lambda = (2,1) with cycle type (3,1).
    #[arg(long = "factor", required = true, value_parser = parse_factor)]
    factors: Vec<(Partition, CycleType)>,
    #[arg(long)]
    mu: Partition,
    #[arg(long)]
    n: usize,
    /// Also compute the direct and Schur expansion routes.
    #[arg(long)]
    verify: bool,
    #[arg(long)]
    dump_poly: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    #[value(name = "paper-tables")]
    Tables,
    Frobenius,
    Counterexample,
    Oracles,
    Dualities,
    All,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(value_enum)]
    suite: Suite,
    /// Largest k for the frobenius suite.
    #[arg(long, default_value_t = 6)]
    k: u32,
    /// Instance count for the randomized suites.
    #[arg(long)]
    instances: Option<usize>,
    #[arg(long, default_value_t = 2023)]
    seed: u64,
}

fn parse_factor(s: &str) -> Result<(Partition, CycleType), String> {
    let (lambda, cycles) = s
        .split_once('@')
        .ok_or_else(|| format!("'{s}': expected LAMBDA@CYCLES"))?;
    let lambda = Partition::from_str(lambda).map_err(|e| format!("'{s}': {e}"))?;
    let lengths = cycles
        .split(',')
        .map(|t| t.trim().parse::<u32>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| format!("'{s}': bad cycle type"))?;
    let cycles = CycleType::new(lengths).map_err(|e| format!("'{s}': {e}"))?;
    Ok((lambda, cycles))
}

fn configure_threads() -> Result<(), CliError> {
    let Ok(raw) = std::env::var(THREADS_VAR) else {
        return Ok(());
    };
    let threads: usize = raw
        .trim()
        .parse()
        .map_err(|_| CliError::Input(format!("{THREADS_VAR}={raw} is not a thread count")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| CliError::Input(format!("{THREADS_VAR}: {e}")))
}

fn inline_problem(args: &BoundArgs) -> Result<ProblemFile, CliError> {
    let n = args
        .n
        .ok_or_else(|| CliError::Input("either a problem file or --n and --lambda are required".into()))?;
    if args.lambda.is_empty() {
        return Err(CliError::Input("at least one --lambda is required".into()));
    }
    let nu = match &args.nu {
        Some(text) => Partition::from_str(text).map_err(|e| CliError::Input(format!("--nu: {e}")))?,
        None => Partition::empty(),
    };
    Ok(ProblemFile {
        n,
        d: args.d,
        lambdas: args.lambda.clone(),
        nu: nu.parts().to_vec(),
        c: PairSpec::default(),
    })
}

fn compute(file: ProblemFile, args: &BoundArgs) -> Result<Rendered, CliError> {
    let mut file = file;
    if let Some(c) = &args.c {
        file.c = c.clone();
    }
    let base = file.problem(0)?;
    if args.table && args.c.is_none() && !file.c.is_range() {
        file.c = PairSpec::Range(0, base.max_pairs());
    }
    let cs: Vec<usize> = file.c.values().collect();
    for &c in &cs {
        file.problem(c)?;
    }
    let reports = bound_table(&base, cs, args.verify).map_err(|e| CliError::Input(e.to_string()))?;
    let polys = reports
        .iter()
        .map(|r| {
            args.dump_poly
                .then(|| twisted_product(&r.problem.lambdas, &r.mu, r.problem.c, r.problem.n).map(|p| p.to_string()))
                .transpose()
                .map_err(|e| CliError::Input(e.to_string()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Rendered {
        file: file.resolved()?,
        reports,
        polys,
    })
}

fn run_bound(args: BoundArgs) -> Result<String, CliError> {
    let files = if args.files.is_empty() {
        vec![inline_problem(&args)?]
    } else {
        args.files
            .iter()
            .map(|path| {
                let text = fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
                ProblemFile::parse(&text)
            })
            .collect::<Result<Vec<_>, _>>()?
    };
    let rendered = files
        .into_iter()
        .map(|f| compute(f, &args))
        .collect::<Result<Vec<_>, _>>()?;

    let out = match args.format {
        Format::Text => rendered.iter().map(Rendered::text).collect::<Vec<_>>().join("\n"),
        Format::Json => {
            let docs: Vec<_> = rendered.iter().map(Rendered::json).collect();
            let text = if docs.len() == 1 {
                serde_json::to_string_pretty(&docs[0])
            } else {
                serde_json::to_string_pretty(&docs)
            };
            text.expect("report serializes") + "\n"
        }
        Format::Csv => render::csv(&rendered).map_err(|e| CliError::Input(e.to_string()))?,
    };

    let broken: Vec<String> = rendered
        .iter()
        .flat_map(|r| &r.reports)
        .filter(|r| !r.is_consistent() || r.provenance.oracle_agreement == Some(false))
        .map(|r| format!("c={}", r.problem.c))
        .collect();
    if broken.is_empty() {
        Ok(out)
    } else {
        print!("{out}");
        Err(CliError::Check(format!("cross-check failed for {}", broken.join(", "))))
    }
}

#[derive(Serialize)]
struct CharacterJson {
    n: usize,
    mu: Vec<u32>,
    factors: Vec<FactorJson>,
    value: Int,
    weight_gated: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    direct: Option<Int>,
    #[serde(skip_serializing_if = "Option::is_none")]
    expansion: Option<Int>,
    #[serde(skip_serializing_if = "Option::is_none")]
    agree: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    poly: Option<String>,
}

#[derive(Serialize)]
struct FactorJson {
    lambda: Vec<u32>,
    cycles: Vec<u32>,
}

fn run_character(args: CharacterArgs) -> Result<String, CliError> {
    let input = |e: &dyn std::fmt::Display| CliError::Input(e.to_string());
    let cls = ProductClass::new(args.factors.clone());
    let value = character_value(&cls, &args.mu, args.n).map_err(|e| input(&e))?;
    if value.weight_gated {
        eprintln!(
            "warning: |mu| = {} differs from the class weight {}, the multiplicity space is zero",
            args.mu.weight(),
            cls.weight()
        );
    }
    let (direct, expansion) = if args.verify {
        let d = character_value_direct(&cls, &args.mu, args.n).map_err(|e| input(&e))?;
        let x = character_value_via_expansion(&cls, &args.mu, args.n).map_err(|e| input(&e))?;
        (Some(d.value), Some(x.value))
    } else {
        (None, None)
    };
    let agree = args
        .verify
        .then(|| direct.as_ref() == Some(&value.value) && expansion.as_ref() == Some(&value.value));
    let poly = if args.dump_poly {
        let target = shifted_target(&args.mu, args.n).map_err(|e| input(&e))?;
        Some(
            plethysm_product(&cls.plethysm_factors(), args.n, &target)
                .map_err(|e| input(&e))?
                .to_string(),
        )
    } else {
        None
    };

    let out = match args.format {
        Format::Json => {
            let doc = CharacterJson {
                n: args.n,
                mu: args.mu.parts().to_vec(),
                factors: cls
                    .factors
                    .iter()
                    .map(|f| FactorJson {
                        lambda: f.lambda.parts().to_vec(),
                        cycles: f.cycles.lengths().to_vec(),
                    })
                    .collect(),
                value: Int(value.value.clone()),
                weight_gated: value.weight_gated,
                direct: direct.clone().map(Int),
                expansion: expansion.clone().map(Int),
                agree,
                poly: poly.clone(),
            };
            serde_json::to_string_pretty(&doc).expect("character serializes") + "\n"
        }
        Format::Text | Format::Csv => {
            let mut s = format!("value = {}\n", value.value);
            if let (Some(d), Some(x)) = (&direct, &expansion) {
                s.push_str(&format!("direct = {d}\nexpansion = {x}\n"));
                s.push_str(if agree == Some(true) {
                    "routes agree\n"
                } else {
                    "routes DISAGREE\n"
                });
            }
            if let Some(p) = &poly {
                s.push_str(&format!("product = {p}\n"));
            }
            s
        }
    };
    if agree == Some(false) {
        print!("{out}");
        return Err(CliError::Check("character routes disagree".into()));
    }
    Ok(out)
}

fn run_verify(args: VerifyArgs) -> Result<String, CliError> {
    let oracle_n = args.instances.unwrap_or(200);
    let duality_n = args.instances.unwrap_or(100);
    let mut lines: Vec<CheckLine> = Vec::new();
    let all = args.suite == Suite::All;
    if all || args.suite == Suite::Tables {
        lines.extend(verify::published_tables());
        lines.push(verify::monotonicity(20));
    }
    if all || args.suite == Suite::Frobenius {
        lines.extend(verify::frobenius(args.k));
    }
    if all || args.suite == Suite::Counterexample {
        lines.extend(verify::counterexample());
    }
    if all || args.suite == Suite::Oracles {
        lines.extend(verify::oracles(oracle_n, args.seed));
    }
    if all || args.suite == Suite::Dualities {
        lines.extend(verify::dualities(duality_n, args.seed));
    }
    let mut out = String::new();
    for l in &lines {
        let tag = if l.passed { "PASS" } else { "FAIL" };
        out.push_str(&format!("{tag} {} {}", l.suite, l.name));
        if !l.detail.is_empty() {
            out.push_str(&format!(": {}", l.detail));
        }
        out.push('\n');
    }
    let failed = lines.iter().filter(|l| !l.passed).count();
    out.push_str(&format!("{} checks, {failed} failed\n", lines.len()));
    if failed == 0 {
        Ok(out)
    } else {
        print!("{out}");
        Err(CliError::Check(format!("{failed} checks failed")))
    }
}

fn run(cli: Cli) -> Result<String, CliError> {
    configure_threads()?;
    let input = |e: oscbound::BoundsError| CliError::Input(e.to_string());
    match cli.command {
        Command::Bound(args) => run_bound(args),
        Command::Character(args) => run_character(args),
        Command::Verify(args) => run_verify(args),
        Command::SignImbalance { m, p } => Ok(format!("{}\n", white_bound(m, p).map_err(input)?)),
        Command::RealCount { k, n, s, c } => {
            let v = match (s, c) {
                (_, Some(c)) => hhs_sharp_bound(k, n, c),
                (s, None) => hhs_count_r(k, n, s.unwrap_or(0)),
            };
            Ok(format!("{}\n", v.map_err(input)?))
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(CliError::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Check(msg)) => {
            eprintln!("check failed: {msg}");
            ExitCode::from(1)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factor_syntax() {
        let (l, c) = parse_factor("2,1@3,1").unwrap();
        assert_eq!(l.parts(), &[2, 1]);
        assert_eq!(c.lengths(), &[3, 1]);
        let (l, c) = parse_factor("1@1,2").unwrap();
        assert_eq!(l.parts(), &[1]);
        assert_eq!(c.lengths(), &[2, 1]);
        assert!(parse_factor("1").is_err());
        assert!(parse_factor("1@0").is_err());
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
