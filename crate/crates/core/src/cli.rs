//! Command-line front end. Every command emits one JSON artifact embedding
//! its configuration and the tool version.
//!
//! Exit codes: 0 pass, 1 a requested predicate failed, 2 bad input,
//! 3 a precondition of the computation does not hold.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::Error;
use crate::groebner::GroebnerCaps;
use crate::groups::{make_group, Group, GroupSpec};
use crate::hopf::TensorElement;
use crate::phi::{p_regular, s3_family, PCandidate, PhiContext};
use crate::scalar::Scalar;
use crate::search::{search, Strategy, Verdict, DEFAULT_SEED};
use crate::uq;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;

#[derive(Parser, Debug, Serialize)]
#[command(name = "peterweyl", version, about = "Exact checks for kernels P in kG ⊗ kG, Peter-Weyl style decompositions and quantum sl2 centers")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Write the artifact here (atomically) instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    /// Membership predicates and rank of Φ_P.
    Verify(VerifyArgs),
    /// Decomposition kG = ⊕ Φ_P(H*_V) with ad-types and central elements.
    Decompose(PArgs),
    /// Search 𝒜(kG) for admissible P.
    Search(SearchArgs),
    /// Quantum sl2 computations.
    Uq {
        #[command(subcommand)]
        command: UqCommand,
    },
    /// Supported groups.
    Groups {
        #[command(subcommand)]
        command: GroupsCommand,
    },
}

#[derive(Args, Debug, Serialize)]
pub struct PArgs {
    /// Group descriptor: S3, D4, Z5, Z2xZ2, ...
    #[arg(long)]
    pub group: String,
    /// Built-in family instead of a P-file.
    #[arg(long, value_enum, conflicts_with = "p_file")]
    pub family: Option<Family>,
    #[arg(long, default_value = "1")]
    pub lambda: String,
    #[arg(long, default_value = "1")]
    pub mu: String,
    /// JSON file with a tensor {"arity": 2, "terms": [[[a, b], "c"], ...]} or an object with a "P" field.
    #[arg(long)]
    pub p_file: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// The two-parameter S3 family (uses --lambda, --mu).
    S3,
    /// Σ g ⊗ g⁻¹
    Regular,
    /// 1 ⊗ 1
    Unit,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Predicate {
    A,
    M,
    M0,
    Injective,
}

#[derive(Args, Debug, Serialize)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub p: PArgs,
    /// Predicates that must hold for exit 0.
    #[arg(long, value_enum, value_delimiter = ',', default_values_t = [Predicate::A, Predicate::M, Predicate::M0, Predicate::Injective])]
    pub require: Vec<Predicate>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum StrategyName {
    Random,
    Groebner,
    Verify,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
pub enum ExpectedVerdict {
    #[value(name = "solutions-found")]
    SolutionsFound,
    #[value(name = "none-found-bounded")]
    NoneFoundBounded,
    #[value(name = "proved-infeasible")]
    ProvedInfeasible,
}

#[derive(Args, Debug, Serialize)]
pub struct SearchArgs {
    #[command(flatten)]
    pub p: PArgs,
    #[arg(long, value_enum, default_value_t = StrategyName::Random)]
    pub strategy: StrategyName,
    #[arg(long, default_value_t = 1000)]
    pub count: usize,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[arg(long, default_value_t = GroebnerCaps::default().max_degree)]
    pub max_deg: u32,
    #[arg(long, default_value_t = GroebnerCaps::default().max_steps)]
    pub max_steps: usize,
    /// Leave out the t·det(Φ_P) − 1 equation in the Gröbner strategy.
    #[arg(long)]
    pub no_injectivity: bool,
    /// Exit 1 unless the verdict is this one.
    #[arg(long, value_enum)]
    pub expect: Option<ExpectedVerdict>,
    /// Write each solution as a P-file into this directory.
    #[arg(long)]
    pub emit_dir: Option<PathBuf>,
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum UqCommand {
    /// The central element c_q(n) of V(n).
    Center {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        check: Option<UqCheck>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum UqCheck {
    /// c_q(1)·c_q(n) = c_q(n+1) + c_q(n−1)
    Product,
    /// commutes with E, F, K
    Central,
    /// lies in the independently solved bounded-degree center
    Commutant,
    /// Φ_P of the highest coefficient is a unit times K_{2λ}; ad-orbit dimension (n+1)²
    Joseph,
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GroupsCommand {
    List,
}

/// Result of one invocation.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub code: i32,
    pub artifact: Value,
    pub text: String,
    pub stdout: String,
    pub stderr: String,
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::Parse(_)
        | Error::Unsupported(_)
        | Error::GroupMismatch(..)
        | Error::ArityMismatch(..)
        | Error::DimensionMismatch(_)
        | Error::FieldMismatch(..)
        | Error::Strategy(_) => EXIT_INPUT,
        _ => EXIT_PRECONDITION,
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::FieldMismatch(..) => "FieldMismatch",
        Error::DimensionMismatch(_) => "DimensionMismatch",
        Error::GroupMismatch(..) => "GroupMismatch",
        Error::ArityMismatch(..) => "ArityMismatch",
        Error::Unsupported(_) => "Unsupported",
        Error::Realizability { .. } => "Realizability",
        Error::Cocycle(_) => "Cocycle",
        Error::NotSplit(..) => "NotSplit",
        Error::Precondition(_) => "Precondition",
        Error::Membership(_) => "Membership",
        Error::Convention => "Convention",
        Error::Strategy(_) => "Strategy",
        Error::Parse(_) => "Parse",
        Error::Internal(_) => "Internal",
    }
}

fn artifact(command: &str, config: &Cli, result: Value, code: i32) -> Value {
    json!({
        "tool": {"name": env!("CARGO_PKG_NAME"), "version": env!("CARGO_PKG_VERSION")},
        "command": command,
        "config": serde_json::to_value(config).expect("config serializes"),
        "result": result,
        "exit_code": code,
    })
}

fn parse_group(s: &str) -> crate::Result<Arc<Group>> {
    let spec: GroupSpec = s.parse()?;
    make_group(&spec)
}

fn parse_scalar(s: &str) -> crate::Result<Scalar> {
    s.parse()
}

fn load_p(group: &Arc<Group>, args: &PArgs) -> crate::Result<PCandidate> {
    match (&args.family, &args.p_file) {
        (Some(Family::S3), _) => s3_family(group, &parse_scalar(&args.lambda)?, &parse_scalar(&args.mu)?),
        (Some(Family::Regular), _) => Ok(PCandidate::with_note(p_regular(group), "regular")),
        (Some(Family::Unit), _) => Ok(PCandidate::with_note(TensorElement::one(group, 2), "unit")),
        (None, Some(path)) => {
            let text = fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {}", path.display(), e)))?;
            let v: Value = serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {}", path.display(), e)))?;
            let v = v.get("P").cloned().unwrap_or(v);
            if let Some(g) = v.get("group") {
                let spec: GroupSpec =
                    serde_json::from_value(g.clone()).map_err(|e| Error::Parse(format!("group descriptor: {}", e)))?;
                if spec != *group.spec() {
                    return Err(Error::GroupMismatch(spec.to_string(), group.name()));
                }
            }
            let p = TensorElement::from_json_in(group, &v)?;
            if p.arity() != 2 {
                return Err(Error::ArityMismatch(p.arity(), 2));
            }
            Ok(PCandidate::with_note(p, &path.display().to_string()))
        }
        (None, None) => Err(Error::Parse("one of --family or --p-file is required".into())),
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_PASS };
            let text = e.render().to_string();
            let (stdout, stderr) = if code == EXIT_PASS { (text.clone(), String::new()) } else { (String::new(), text.clone()) };
            return Outcome {
                code,
                artifact: json!({"error": {"kind": "Usage", "message": text}, "exit_code": code}),
                text,
                stdout,
                stderr,
            };
        }
    };
    let name = match &cli.command {
        Command::Verify(_) => "verify",
        Command::Decompose(_) => "decompose",
        Command::Search(_) => "search",
        Command::Uq { .. } => "uq center",
        Command::Groups { .. } => "groups list",
    };
    let (code, result, text) = match dispatch(&cli) {
        Ok(r) => r,
        Err(e) => {
            let code = exit_code_for(&e);
            let msg = e.to_string();
            (code, json!({"error": {"kind": error_kind(&e), "message": msg}}), format!("error: {}", msg))
        }
    };
    let mut outcome = Outcome { code, artifact: artifact(name, &cli, result, code), text, stdout: String::new(), stderr: String::new() };
    let rendered = render(&outcome, cli.format);
    match &cli.out {
        None => outcome.stdout = rendered,
        Some(path) => {
            if let Err(e) = write_atomically(path, &rendered) {
                outcome.code = EXIT_INPUT;
                outcome.stderr = format!("error: cannot write {}: {}\n", path.display(), e);
            }
        }
    }
    outcome
}

pub fn render(outcome: &Outcome, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(&outcome.artifact).expect("json") + "\n",
        Format::Text => outcome.text.clone() + "\n",
    }
}

fn write_atomically(path: &Path, contents: &str) -> std::io::Result<()> {
    let tmp = path.with_extension("tmp");
    fs::write(&tmp, contents)?;
    fs::rename(&tmp, path)
}

type Dispatched = (i32, Value, String);

fn dispatch(cli: &Cli) -> crate::Result<Dispatched> {
    match &cli.command {
        Command::Verify(a) => cmd_verify(a),
        Command::Decompose(a) => cmd_decompose(a),
        Command::Search(a) => cmd_search(a),
        Command::Uq { command: UqCommand::Center { n, check } } => cmd_uq_center(*n, *check),
        Command::Groups { command: GroupsCommand::List } => cmd_groups_list(),
    }
}

fn cmd_verify(a: &VerifyArgs) -> crate::Result<Dispatched> {
    let group = parse_group(&a.p.group)?;
    let cand = load_p(&group, &a.p)?;
    let ctx = PhiContext::new(&group)?;
    let r = ctx.report(&cand.p)?;
    let holds = |pr: &Predicate| match pr {
        Predicate::A => r.a,
        Predicate::M => r.m,
        Predicate::M0 => r.m0,
        Predicate::Injective => r.rank == group.order(),
    };
    let failed: Vec<&Predicate> = a.require.iter().filter(|p| !holds(p)).collect();
    let code = if failed.is_empty() { EXIT_PASS } else { EXIT_FAIL };
    let mut text = format!(
        "{} {}: A={} M={} M0={} rank={}/{}",
        group.name(),
        cand.note.as_deref().unwrap_or("P"),
        r.a,
        r.m,
        r.m0,
        r.rank,
        group.order()
    );
    for (v, w) in &r.m_witnesses {
        text.push_str(&format!("\n  M witness ({}, {})", v, w));
    }
    let result = json!({
        "group": group.name(),
        "note": cand.note,
        "report": r.to_json(),
        "failed": failed,
        "P": cand.p.to_json(),
    });
    Ok((code, result, text))
}

fn cmd_decompose(a: &PArgs) -> crate::Result<Dispatched> {
    let group = parse_group(&a.group)?;
    let cand = load_p(&group, a)?;
    let ctx = PhiContext::new(&group)?;
    let d = ctx.mock_pw_decomposition(&cand.p)?;
    let ok = d.direct && d.central_independent && d.central_spans_center && d.blocks.iter().all(|b| b.ad_stable && b.ad_type_matches);
    let mut text = format!("{} {}: direct={} central spans Z={}", group.name(), cand.note.as_deref().unwrap_or("P"), d.direct, d.central_spans_center);
    for b in &d.blocks {
        text.push_str(&format!("\n  {} dim {} ad-stable={} type matches={}", b.label, b.dim, b.ad_stable, b.ad_type_matches));
    }
    Ok((if ok { EXIT_PASS } else { EXIT_FAIL }, d.to_json(), text))
}

fn cmd_search(a: &SearchArgs) -> crate::Result<Dispatched> {
    let group = parse_group(&a.p.group)?;
    let strategy = match a.strategy {
        StrategyName::Random => {
            if a.count == 0 {
                return Err(Error::Strategy("--count must be positive".into()));
            }
            Strategy::RandomSampling { count: a.count, seed: a.seed }
        }
        StrategyName::Groebner => Strategy::Groebner {
            caps: GroebnerCaps { max_degree: a.max_deg, max_steps: a.max_steps },
            injectivity: !a.no_injectivity,
        },
        StrategyName::Verify => Strategy::VerifyOnly(load_p(&group, &a.p)?),
    };
    let out = search(&group, &strategy)?;
    if let (Some(dir), Verdict::SolutionsFound(list)) = (&a.emit_dir, &out.verdict) {
        fs::create_dir_all(dir).map_err(|e| Error::Parse(format!("{}: {}", dir.display(), e)))?;
        for (i, c) in list.iter().enumerate() {
            let path = dir.join(format!("solution_{:03}.json", i));
            let body = serde_json::to_string_pretty(&c.p.to_json()).expect("json");
            write_atomically(&path, &body).map_err(|e| Error::Parse(format!("{}: {}", path.display(), e)))?;
        }
    }
    let matches = match a.expect {
        None => true,
        Some(ExpectedVerdict::SolutionsFound) => matches!(out.verdict, Verdict::SolutionsFound(_)),
        Some(ExpectedVerdict::NoneFoundBounded) => matches!(out.verdict, Verdict::NoneFoundBounded { .. }),
        Some(ExpectedVerdict::ProvedInfeasible) => matches!(out.verdict, Verdict::ProvedInfeasible { .. }),
    };
    let s = &out.stats;
    let text = format!(
        "{}: {} (samples {}, hom {}, M0 {}, filter {}, verified {})",
        group.name(),
        out.verdict.name(),
        s.samples,
        s.hom_survivors,
        s.m0_members,
        s.filter_survivors,
        s.verified
    );
    // elapsed time is left out so identical configs give identical artifacts
    Ok((if matches { EXIT_PASS } else { EXIT_FAIL }, out.to_json(), text))
}

fn cmd_uq_center(n: usize, check: Option<UqCheck>) -> crate::Result<Dispatched> {
    let c = uq::c_q(n)?;
    let mut result = json!({"n": n, "c": c.to_json()});
    let mut text = format!("c_q({}) = {}", n, c);
    let passed = match check {
        None => true,
        Some(UqCheck::Central) => {
            let ok = c.is_central();
            result["central"] = json!(ok);
            ok
        }
        Some(UqCheck::Product) => {
            if n + 1 > uq::MAX_HIGHEST_WEIGHT {
                return Err(Error::Precondition(format!("c_q({}) exceeds the bound {}", n + 1, uq::MAX_HIGHEST_WEIGHT)));
            }
            let ok = uq::product_rule_check(1, n)?;
            result["product_rule"] = json!({"left": [1, n], "holds": ok});
            ok
        }
        Some(UqCheck::Commutant) => {
            let b = n.max(1) as u32;
            let basis = uq::central_commutant_solve(b, b as i64, b);
            let ok = uq::in_span(&c, &basis);
            result["commutant"] = json!({"degree_bound": b, "dim": basis.len(), "contains_c": ok});
            ok
        }
        Some(UqCheck::Joseph) => {
            let r = uq::joseph_component_check(n)?;
            let ok = r.passed();
            result["joseph"] = r.to_json();
            ok
        }
    };
    if check.is_some() {
        text.push_str(&format!("\ncheck {:?}: {}", check.expect("checked"), passed));
    }
    Ok((if passed { EXIT_PASS } else { EXIT_FAIL }, result, text))
}

/// Built-in descriptors: `(descriptor, order, classes)`.
pub fn group_catalog() -> crate::Result<Vec<(String, usize, usize)>> {
    let mut names: Vec<String> = Vec::new();
    names.extend((1..=5).map(|n| format!("S{}", n)));
    names.extend((1..=8).map(|n| format!("D{}", n)));
    names.extend((1..=12).map(|n| format!("Z{}", n)));
    names.push("Z2xZ2".into());
    names
        .into_iter()
        .map(|s| {
            let g = parse_group(&s)?;
            Ok((s, g.order(), g.classes().len()))
        })
        .collect()
}

fn cmd_groups_list() -> crate::Result<Dispatched> {
    let cat = group_catalog()?;
    let groups: Vec<Value> = cat.iter().map(|(n, o, c)| json!({"descriptor": n, "order": o, "classes": c})).collect();
    let mut text: Vec<String> = cat.iter().map(|(n, o, c)| format!("{:<6} order {:>3}  classes {:>2}", n, o, c)).collect();
    text.push(format!("products: AxB of the above, order at most {}", crate::groups::MAX_ORDER));
    Ok((
        EXIT_PASS,
        json!({"groups": groups, "products": format!("AxB of the above, order at most {}", crate::groups::MAX_ORDER)}),
        text.join("\n"),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(s: &str) -> Outcome {
        run(std::iter::once("peterweyl").chain(s.split_whitespace()))
    }

    #[test]
    fn verify_family() {
        let o = run_args("verify --group S3 --family s3 --lambda 1/1 --mu 1/1");
        assert_eq!(o.code, EXIT_PASS, "{}", o.text);
        assert_eq!(o.artifact["result"]["report"]["rank"], json!(6));
        let o = run_args("verify --group S3 --family regular");
        assert_eq!(o.code, EXIT_FAIL);
        let o = run_args("verify --group Z1 --family unit");
        assert_eq!(o.code, EXIT_PASS);
    }

    #[test]
    fn input_errors() {
        assert_eq!(run_args("verify --group Q8 --family unit").code, EXIT_INPUT);
        assert_eq!(run_args("verify --group S3 --family s3 --lambda x").code, EXIT_INPUT);
        assert_eq!(run_args("verify --group D4 --family s3").code, EXIT_INPUT);
        assert_eq!(run_args("frobnicate").code, EXIT_INPUT);
        assert_eq!(run_args("decompose --group S3 --family regular").code, EXIT_PRECONDITION);
        assert_eq!(run_args("uq center --n 9").code, EXIT_PRECONDITION);
    }

    #[test]
    fn deterministic_artifacts() {
        let a = run_args("search --group Z2xZ2 --count 50 --seed 3");
        let b = run_args("search --group Z2xZ2 --count 50 --seed 3");
        assert_eq!(a.code, EXIT_PASS);
        assert_eq!(render(&a, Format::Json), render(&b, Format::Json));
    }
}
