//! The command line: JSON in (inline or `@file`), JSON out on standard
//! output, one-line summaries on standard error.
//!
//! Exit status is 0 when the requested report passes, 1 when it records a
//! property violation and 2 for malformed input or unmet hypotheses.

mod input;

use std::io::Write;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::contact::roeper::cluster_name;
use crate::contact::{standard_lca, LocalContactAlgebra};
use crate::duality::interval::w_interval;
use crate::duality::{comma_report, gamma};
use crate::error::{Error, Result};
use crate::harness::{self, CRITERIA};
use crate::json::{
    hom_json, lca_json, map_json, parse_clca_table, parse_comma, parse_finite_hom, parse_finite_lca, parse_hom,
    parse_lca, parse_point_map, parse_space, set_json, space_json, table_json,
};
use crate::morphisms::{self, interval as imorph, ClcaMorphism, DbooMorphism, CLC_CONDITIONS, DBOO_CONDITIONS};
use crate::topology::{absolute, RegularClosedAlgebra};
use input::{load, parse_seed, required};

#[derive(Parser, Debug)]
#[command(name = "contact-duality", version, about = "Local contact algebras and their dual spaces")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// Axiom, predicate and morphism reports.
    Check(CheckArgs),
    /// Space to algebra (RC and standard LCA) or algebra to space (W and γ).
    Dual(DualArgs),
    /// Clans, clusters, bounded clusters and the cluster at infinity.
    Clusters(ClustersArgs),
    /// The absolute of a finite Hausdorff space and its projection.
    Absolute(AbsoluteArgs),
    /// Rounding, the functor V, or ⋄-composition.
    Compose(ComposeArgs),
    /// Run verification suites.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
struct Sampling {
    /// Seed for sampled checks on the interval algebra (decimal or 0x-hex).
    #[arg(long, default_value = "0xD0B0", value_parser = parse_seed)]
    seed: u64,
    /// Samples per sampled check.
    #[arg(long, default_value_t = 500)]
    samples: usize,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("subject").required(true).args(["contact", "space", "map", "hom", "clca", "comma"])))]
struct CheckArgs {
    /// A local contact algebra, or `interval`.
    #[arg(long)]
    contact: Option<String>,
    #[arg(long)]
    space: Option<String>,
    /// A point map; needs --dom and --cod.
    #[arg(long)]
    map: Option<String>,
    /// A Boolean homomorphism; needs --source and --target.
    #[arg(long)]
    hom: Option<String>,
    /// A CLCA morphism table; needs --source and --target.
    #[arg(long)]
    clca: Option<String>,
    #[arg(long)]
    comma: Option<String>,
    #[arg(long)]
    dom: Option<String>,
    #[arg(long)]
    cod: Option<String>,
    #[arg(long)]
    source: Option<String>,
    #[arg(long)]
    target: Option<String>,
    #[command(flatten)]
    sampling: Sampling,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("subject").required(true).args(["space", "contact"])))]
struct DualArgs {
    #[arg(long)]
    space: Option<String>,
    #[arg(long)]
    contact: Option<String>,
    #[command(flatten)]
    sampling: Sampling,
}

#[derive(Args, Debug)]
struct ClustersArgs {
    #[arg(long)]
    contact: String,
}

#[derive(Args, Debug)]
struct AbsoluteArgs {
    #[arg(long)]
    space: String,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Op {
    Round,
    V,
    Diamond,
}

#[derive(Args, Debug)]
struct ComposeArgs {
    #[arg(long, value_enum)]
    op: Op,
    #[arg(long)]
    source: Option<String>,
    /// Middle algebra of a ⋄-composition.
    #[arg(long)]
    middle: Option<String>,
    #[arg(long)]
    target: Option<String>,
    /// An element table to round (finite source).
    #[arg(long)]
    table: Option<String>,
    /// A Boolean homomorphism (round on `interval`, or V).
    #[arg(long)]
    hom: Option<String>,
    /// First factor of ⋄, from source to middle.
    #[arg(long)]
    phi: Option<String>,
    /// Second factor of ⋄, from middle to target.
    #[arg(long)]
    psi: Option<String>,
    #[command(flatten)]
    sampling: Sampling,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("which").required(true).args(["suite", "criterion", "all"])))]
struct VerifyArgs {
    #[arg(long)]
    suite: Option<String>,
    #[arg(long)]
    criterion: Option<String>,
    #[arg(long)]
    all: bool,
    #[arg(long, default_value = "0xD0B0", value_parser = parse_seed)]
    seed: u64,
    /// Overrides the suite's own instance size.
    #[arg(long)]
    max_size: Option<usize>,
}

/// A finished report: the JSON document, whether it passes, and summary lines.
struct Report {
    value: Value,
    pass: bool,
    summary: Vec<String>,
}

impl Report {
    fn new(value: Value, pass: bool, what: &str) -> Self {
        let verdict = if pass { "pass" } else { "FAIL" };
        Report { value, pass, summary: vec![format!("{what}: {verdict}")] }
    }
}

/// Parse `args` (including the program name) and run the verb.
pub fn run_with<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    0
                }
                _ => {
                    let _ = write!(err, "{text}");
                    2
                }
            };
        }
    };
    match dispatch(cli.verb) {
        Ok(r) => {
            let _ = writeln!(out, "{}", serde_json::to_string(&r.value).expect("JSON values serialize"));
            for line in r.summary {
                let _ = writeln!(err, "{line}");
            }
            if r.pass {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let mut doc = json!({"error": error_kind(&e), "message": e.to_string()});
            if let Error::TheoremViolation { check, witness } = &e {
                doc["check"] = json!(check);
                doc["witness"] = witness.clone();
            }
            let _ = writeln!(out, "{}", serde_json::to_string(&doc).expect("JSON values serialize"));
            let _ = writeln!(err, "{e}");
            e.exit_code()
        }
    }
}

/// Entry point for the binary.
pub fn run() -> i32 {
    run_with(std::env::args_os(), &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::Input(_) => "input",
        Error::Hypothesis { .. } => "hypothesis",
        Error::Unsupported(_) => "unsupported",
        Error::Invariant(_) => "invariant",
        Error::TheoremViolation { .. } => "violation",
    }
}

fn dispatch(verb: Verb) -> Result<Report> {
    match verb {
        Verb::Check(a) => check(a),
        Verb::Dual(a) => dual(a),
        Verb::Clusters(a) => clusters(a),
        Verb::Absolute(a) => {
            let x = parse_space(&load(&a.space)?)?;
            let (ex, pi) = absolute(&x)?;
            let value = json!({"EX": space_json(&ex), "pi": map_json(&pi), "predicates": pi.predicates()});
            Ok(Report::new(value, true, "absolute"))
        }
        Verb::Compose(a) => compose(a),
        Verb::Verify(a) => verify(a),
    }
}

fn is_interval(v: &Value) -> bool {
    v.as_str() == Some("interval")
}

fn names_of_all(rc: &RegularClosedAlgebra, sets: &[u32]) -> Vec<Vec<String>> {
    sets.iter().map(|&s| rc.space().names_of(s)).collect()
}

fn check(a: CheckArgs) -> Result<Report> {
    let (seed, samples) = (a.sampling.seed, a.sampling.samples);
    if let Some(c) = &a.contact {
        let lca = parse_lca(&load(c)?)?;
        let r = lca.axiom_report(seed, samples);
        let pass = r.is_local_contact_algebra();
        let value = json!({
            "contact_algebra": r.is_contact_algebra(),
            "normal": r.is_normal(),
            "local_contact_algebra": pass,
            "report": r,
        });
        return Ok(Report::new(value, pass, "check contact"));
    }
    if let Some(s) = &a.space {
        let x = parse_space(&load(s)?)?;
        let rc = RegularClosedAlgebra::new(&x)?;
        let value = json!({"predicates": x.predicates()?, "regular_closed": names_of_all(&rc, rc.carrier())});
        return Ok(Report::new(value, true, "check space"));
    }
    if let Some(m) = &a.map {
        let dom = parse_space(&load(required(&a.dom, "dom", "check --map")?)?)?;
        let cod = parse_space(&load(required(&a.cod, "cod", "check --map")?)?)?;
        let f = parse_point_map(&load(m)?, &dom, &cod)?;
        return Ok(Report::new(json!({"predicates": f.predicates()}), true, "check map"));
    }
    if let Some(c) = &a.comma {
        let o = parse_comma(&load(c)?)?;
        let r = comma_report(o.algebra, o.z, &o.p)?;
        let value = json!({"first_failure": r.first_failure(), "report": r});
        return Ok(Report::new(value, r.is_valid(), "check comma"));
    }
    let source = load(required(&a.source, "source", "check")?)?;
    let target = load(required(&a.target, "target", "check")?)?;
    if let Some(h) = &a.hom {
        let h = load(h)?;
        let r = if is_interval(&source) && is_interval(&target) {
            imorph::dboo_check(&parse_hom(&h)?, seed, samples)
        } else {
            let (s, t) = (parse_finite_lca(&source)?, parse_finite_lca(&target)?);
            morphisms::dboo_check(&parse_finite_hom(&h, s.n(), t.n())?, &s, &t)?
        };
        let pass = r.all_pass(&DBOO_CONDITIONS);
        return Ok(Report::new(json!({"report": r}), pass, "check hom"));
    }
    let m = load(required(&a.clca, "clca", "check")?)?;
    let r = if is_interval(&source) && is_interval(&target) {
        imorph::clca_check(&parse_hom(&m)?, seed, samples)
    } else {
        let (s, t) = (parse_finite_lca(&source)?, parse_finite_lca(&target)?);
        morphisms::clca_check(&parse_clca_table(&m, s.n(), t.n())?, &s, &t)?
    };
    let pass = r.all_pass(&CLC_CONDITIONS);
    Ok(Report::new(json!({"report": r}), pass, "check clca"))
}

fn dual(a: DualArgs) -> Result<Report> {
    if let Some(s) = &a.space {
        let x = parse_space(&load(s)?)?;
        let std = standard_lca(&x)?;
        let value = json!({
            "regular_closed": names_of_all(&std.rc, std.rc.carrier()),
            "atoms": names_of_all(&std.rc, std.rc.atoms()),
            "standard_lca": lca_json(&std.lca),
        });
        return Ok(Report::new(value, true, "dual space"));
    }
    let c = load(a.contact.as_deref().expect("clap enforces one subject"))?;
    match parse_lca(&c)? {
        LocalContactAlgebra::Interval => {
            let q = w_interval(a.sampling.seed, a.sampling.samples)?;
            let pass = q.equivalence && q.two_point_fibers && q.zlz.z_algebra && q.zlz.lz_algebra;
            Ok(Report::new(json!(q), pass, "dual interval"))
        }
        LocalContactAlgebra::Finite(l) => {
            let g = gamma(&l)?;
            let classes = g.object.y().names();
            let gamma: Vec<Value> = g
                .map
                .iter()
                .enumerate()
                .map(|(k, &c)| json!({"class": classes[k], "cluster": cluster_name(g.clusters.clusters[c])}))
                .collect();
            let value = json!({"W": g.object.to_json(), "gamma": gamma, "clusters": space_json(&g.clusters.space)});
            Ok(Report::new(value, true, "dual contact"))
        }
    }
}

fn clusters(a: ClustersArgs) -> Result<Report> {
    let l = match parse_lca(&load(&a.contact)?)? {
        LocalContactAlgebra::Finite(l) => l,
        LocalContactAlgebra::Interval => {
            return Err(Error::Unsupported("cluster enumeration is available only for finite algebras".into()))
        }
    };
    let c = l.contact_algebra();
    let sets = |v: Vec<u32>| v.into_iter().map(set_json).collect::<Vec<_>>();
    let value = json!({
        "clans": sets(c.clans()?),
        "clusters": sets(c.clusters()?),
        "bounded_clusters": sets(l.bounded_clusters()?),
        "c_infinity": l.c_infinity().ok().map(set_json),
    });
    Ok(Report::new(value, true, "clusters"))
}

fn compose(a: ComposeArgs) -> Result<Report> {
    let (seed, samples) = (a.sampling.seed, a.sampling.samples);
    let source = load(required(&a.source, "source", "compose")?)?;
    match a.op {
        Op::Round if is_interval(&source) => {
            let g = imorph::round(&parse_hom(&load(required(&a.hom, "hom", "compose --op round")?)?)?, seed, samples)?;
            Ok(Report::new(hom_json(&g), true, "round"))
        }
        Op::Round => {
            let s = parse_finite_lca(&source)?;
            let table = load(required(&a.table, "table", "compose --op round")?)?;
            let n = table_target_atoms(&a.target, s.n())?;
            let f = parse_clca_table(&table, s.n(), n)?;
            Ok(Report::new(table_json(&morphisms::round(&f, &s)?), true, "round"))
        }
        Op::V => {
            let target = load(required(&a.target, "target", "compose --op v")?)?;
            let h = load(required(&a.hom, "hom", "compose --op v")?)?;
            if is_interval(&source) && is_interval(&target) {
                let g = imorph::v_functor(&parse_hom(&h)?, seed, samples)?;
                return Ok(Report::new(hom_json(&g), true, "V"));
            }
            let (s, t) = (parse_finite_lca(&source)?, parse_finite_lca(&target)?);
            let phi = DbooMorphism::new(parse_finite_hom(&h, s.n(), t.n())?, s, t)?;
            let m = morphisms::v_functor(&phi)?;
            Ok(Report::new(json!({"table": m.to_json()["table"], "report": m.report}), true, "V"))
        }
        Op::Diamond => {
            let s = parse_finite_lca(&source)?;
            let mid = parse_finite_lca(&load(required(&a.middle, "middle", "compose --op diamond")?)?)?;
            let t = parse_finite_lca(&load(required(&a.target, "target", "compose --op diamond")?)?)?;
            let phi_t = parse_clca_table(&load(required(&a.phi, "phi", "compose --op diamond")?)?, s.n(), mid.n())?;
            let psi_t = parse_clca_table(&load(required(&a.psi, "psi", "compose --op diamond")?)?, mid.n(), t.n())?;
            let phi = ClcaMorphism::new(s, mid.clone(), phi_t)?;
            let psi = ClcaMorphism::new(mid, t, psi_t)?;
            let m = morphisms::diamond(&psi, &phi)?;
            let pass = m.is_valid();
            Ok(Report::new(json!({"table": m.to_json()["table"], "report": m.report}), pass, "diamond"))
        }
    }
}

/// Rounding a table into another algebra needs its atom count; by default
/// the table maps the source into itself.
fn table_target_atoms(target: &Option<String>, default: usize) -> Result<usize> {
    match target {
        None => Ok(default),
        Some(t) => Ok(parse_finite_lca(&load(t)?)?.n()),
    }
}

fn suite_line(r: &harness::SuiteResult) -> String {
    format!(
        "{:<28} {} checked={} failures={}",
        r.suite,
        if r.pass { "PASS" } else { "FAIL" },
        r.instances_checked,
        r.failure_count
    )
}

fn verify(a: VerifyArgs) -> Result<Report> {
    if let Some(s) = &a.suite {
        let r = harness::run_suite(s, a.seed, a.max_size)?;
        let line = suite_line(&r);
        return Ok(Report { pass: r.pass, summary: vec![line], value: json!(r) });
    }
    if a.max_size.is_some() {
        return Err(Error::input("--max-size applies only with --suite"));
    }
    let criteria: Vec<&str> = match &a.criterion {
        Some(c) => vec![c.as_str()],
        None => CRITERIA.to_vec(),
    };
    let results = criteria.iter().map(|c| harness::run_criterion(c, a.seed)).collect::<Result<Vec<_>>>()?;
    let pass = results.iter().all(|r| r.pass);
    let summary = results.iter().flat_map(|c| c.suites.iter().map(suite_line)).collect();
    let value = match (&a.criterion, results.as_slice()) {
        (Some(_), [one]) => json!(one),
        _ => json!({"seed": a.seed, "pass": pass, "criteria": results}),
    };
    Ok(Report { value, pass, summary })
}
