mod config;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use claspknot::census::Census;
use claspknot::clasp::{
    enumerate_params, kadokami_kawamura_excluded, typex_p0_obstruction, typex_parity_obstruction, DiskType, SosBounds,
    SosVerdict,
};
use claspknot::openbook::{associated_link, classify_range, classify_triple, Budgets, OpenBookTriple, Verdict};
use claspknot::report::{corollary12, corollary_targets};
use claspknot::tangle::{continued_fraction, theorem1_catalog, Description, MontesinosDesc, TangleError};
use claspknot::{Diagram, DiagramError, ParseError, SkeinConfig, SkeinEngine, SkeinError};

use config::Config;

/// Knot invariants, clasp number obstructions, Montesinos knots and open
/// books of the three-holed sphere. Output is JSON on stdout.
#[derive(Parser, Debug)]
#[command(name = "claspknot", version)]
struct Cli {
    /// `key = value` settings file; flags override its values.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Census file (`name<TAB>PD[...]` per line) instead of the shipped one.
    #[arg(long, global = true)]
    census: Option<PathBuf>,
    /// Worker threads; more than one enables parallel evaluation.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Maximum skein recursion nodes per polynomial.
    #[arg(long, global = true)]
    node_budget: Option<u64>,
    /// Cache capacity of the skein engine, 0 to disable.
    #[arg(long, global = true)]
    memo_capacity: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// HOMFLY, Conway and p0 polynomials of a census knot or a PD code.
    Invariants { knot: String },
    /// Conway and p0 obstructions to a two-clasp disk.
    ClaspObstruct {
        /// Census name or PD code; alternatively give `--a2` and `--a4`.
        #[arg(required_unless_present_all = ["a2", "a4"], conflicts_with_all = ["a2", "a4"])]
        knot: Option<String>,
        #[arg(long, allow_hyphen_values = true, requires = "a4")]
        a2: Option<i64>,
        #[arg(long, allow_hyphen_values = true, requires = "a2")]
        a4: Option<i64>,
        /// Restrict the parameter search to one disk type.
        #[arg(long = "type", value_name = "X|II")]
        disk_type: Option<DiskType>,
        /// Bound on |l1|, |l2|, |l| in the parameter search.
        #[arg(long)]
        bound: Option<i64>,
        #[command(flatten)]
        sos: SosArgs,
    },
    /// Diagram and invariants of K(r1, r2, r3).
    Montesinos {
        /// Three comma-separated fractions, e.g. `-2/3,2,1/2`.
        #[arg(allow_hyphen_values = true)]
        desc: String,
    },
    /// Knots of genus two and clasp number two with a type II disk.
    Catalog {
        /// Family parameter range |n| <= N.
        #[arg(long)]
        n_bound: Option<i64>,
        /// Also compute (a2, a4), Conway and p0 for each entry.
        #[arg(long)]
        invariants: bool,
    },
    /// Fundamental group of the open book with monodromy T1^a T2^b T3^c.
    Openbook {
        /// A single triple `a,b,c`.
        #[arg(long, allow_hyphen_values = true, conflicts_with = "scan", required_unless_present = "scan")]
        triple: Option<String>,
        /// Classify all triples with |a| <= |b| <= |c| <= R.
        #[arg(long)]
        scan: Option<i64>,
        /// In scan mode, list every triple rather than only the trivial ones.
        #[arg(long, requires = "scan")]
        all: bool,
        #[arg(long)]
        max_cosets: Option<usize>,
        #[arg(long)]
        max_target_order: Option<u64>,
    },
    /// Clasp number bounds for 11n74, 11n116, 11n142, 12n462 and 12n838.
    Corollary12 {
        #[arg(long)]
        n_bound: Option<i64>,
        /// Extra knots (census names or PD codes) to run through the same test.
        #[arg(long = "extra")]
        extra: Vec<String>,
    },
}

#[derive(Args, Debug)]
struct SosArgs {
    #[arg(long)]
    sos_deg_bound: Option<i32>,
    #[arg(long)]
    sos_coeff_bound: Option<i64>,
    #[arg(long)]
    sos_work_budget: Option<u64>,
}

/// A knot name that is neither in the census nor a PD code.
#[derive(Debug)]
struct UnknownName(String);

impl std::fmt::Display for UnknownName {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "unknown knot `{}` (not in the census and not a PD code)", self.0)
    }
}

impl std::error::Error for UnknownName {}

/// Exit status: 2 unknown name, 3 malformed input, 4 budget exceeded.
fn exit_code(err: &anyhow::Error) -> u8 {
    for cause in err.chain() {
        if cause.is::<UnknownName>() {
            return 2;
        }
        if let Some(e) = cause.downcast_ref::<SkeinError>() {
            return match e {
                SkeinError::BudgetExceeded { .. } => 4,
                _ => 3,
            };
        }
        if cause.is::<DiagramError>() || cause.is::<ParseError>() || cause.is::<TangleError>() {
            return 3;
        }
    }
    1
}

struct App {
    config: Config,
    census: Census,
    engine: SkeinEngine,
}

impl App {
    fn new(cli: &Cli) -> Result<App> {
        let file = match &cli.config {
            Some(p) => Config::load(p)?,
            None => Config::default(),
        };
        let flags = Config {
            census: cli.census.clone(),
            jobs: cli.jobs,
            node_budget: cli.node_budget,
            memo_capacity: cli.memo_capacity,
            ..Default::default()
        };
        let config = file.overridden_by(flags);
        let jobs = config.jobs.unwrap_or(1).max(1);
        if jobs > 1 {
            rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global().context("cannot start thread pool")?;
        }
        let defaults = SkeinConfig::default();
        let engine = SkeinEngine::new(SkeinConfig {
            memo_capacity: config.memo_capacity.unwrap_or(defaults.memo_capacity),
            node_budget: config.node_budget.unwrap_or(defaults.node_budget),
            parallel: jobs > 1,
        });
        // The shipped census is checked by the test suite. A user census is
        // checked with default budgets, so a small --node-budget only limits
        // the requested computation.
        let census = match &config.census {
            Some(p) => {
                let c = Census::load(p).with_context(|| format!("loading census {}", p.display()))?;
                c.validate(&SkeinEngine::default()).context("census validation")?;
                c
            }
            None => Census::shipped(),
        };
        Ok(App { config, census, engine })
    }

    /// Census name, or PD text when it looks like one.
    fn knot(&self, text: &str) -> Result<Diagram> {
        let t = text.trim();
        if t.starts_with("PD") || t.starts_with('X') || t.starts_with("Loop") {
            return t.parse::<Diagram>().with_context(|| format!("cannot parse PD code `{t}`"));
        }
        match self.census.get(t) {
            Some(d) => Ok(d.clone()),
            None => Err(UnknownName(t.to_string()).into()),
        }
    }

    fn parallel(&self) -> bool {
        self.engine.config().parallel
    }
}

fn invariants_json(ctx: &App, d: &Diagram) -> Result<Value> {
    let homfly = ctx.engine.homfly(d)?;
    let p0 = ctx.engine.p0(d)?;
    let conway = homfly.substitute_v(1);
    let (a2, a4) = if d.is_knot() {
        (json!(conway.coefficient_i64(0, 2)), json!(conway.coefficient_i64(0, 4)))
    } else {
        (Value::Null, Value::Null)
    };
    Ok(json!({
        "crossings": d.num_crossings(),
        "components": d.num_components(),
        "homfly": homfly.to_string(),
        "conway": conway.to_string(),
        "p0": p0.to_string(),
        "a2": a2,
        "a4": a4,
    }))
}

fn cmd_invariants(ctx: &App, knot: &str) -> Result<Value> {
    let d = ctx.knot(knot)?;
    let mut v = invariants_json(ctx, &d)?;
    v["input"] = json!(knot);
    Ok(v)
}

#[derive(Serialize)]
struct SosRow {
    eps1: i64,
    eps2: i64,
    #[serde(flatten)]
    verdict: SosVerdict,
}

struct ClaspQuery<'a> {
    knot: Option<&'a str>,
    a2: Option<i64>,
    a4: Option<i64>,
    disk_type: Option<DiskType>,
    bound: Option<i64>,
}

fn cmd_clasp_obstruct(ctx: &App, q: ClaspQuery<'_>, sos: &SosArgs) -> Result<Value> {
    let bound = q.bound.or(ctx.config.clasp_bound).unwrap_or(50);
    if bound < 0 {
        bail!("bound must be nonnegative");
    }
    let defaults = SosBounds::default();
    let bounds = SosBounds {
        deg_bound: sos.sos_deg_bound.or(ctx.config.sos_deg_bound).unwrap_or(defaults.deg_bound),
        coeff_bound: sos.sos_coeff_bound.or(ctx.config.sos_coeff_bound).unwrap_or(defaults.coeff_bound),
        work_budget: sos.sos_work_budget.or(ctx.config.sos_work_budget).unwrap_or(defaults.work_budget),
    };
    let (a2, a4, p0) = match (q.knot, q.a2, q.a4) {
        (Some(knot), _, _) => {
            let d = ctx.knot(knot)?;
            if !d.is_knot() {
                return Err(DiagramError::NotAKnot(d.num_components()).into());
            }
            let (a2, a4) = ctx.engine.conway_coefficients(&d)?;
            (a2, a4, Some(ctx.engine.p0(&d)?))
        }
        (None, Some(a2), Some(a4)) => (a2, a4, None),
        _ => bail!("give a knot or both --a2 and --a4"),
    };
    let parity = typex_parity_obstruction(a2, a4);
    let kk = kadokami_kawamura_excluded(a2, a4);
    let wants = |t: DiskType| q.disk_type.is_none_or(|w| w == t);
    let type_x = wants(DiskType::X).then(|| enumerate_params(a2, a4, DiskType::X, bound));
    let type_ii = wants(DiskType::II).then(|| enumerate_params(a2, a4, DiskType::II, bound));
    let sos_rows: Option<Vec<SosRow>> = match (&p0, wants(DiskType::X)) {
        (Some(p0), true) => Some(
            typex_p0_obstruction(p0, &bounds)
                .into_iter()
                .map(|((eps1, eps2), verdict)| SosRow { eps1, eps2, verdict })
                .collect(),
        ),
        _ => None,
    };
    let sos_refuted = sos_rows.as_ref().is_some_and(|rows| rows.iter().all(|r| r.verdict.is_refuted()));
    let no_x = kk || parity || type_x.as_ref().is_some_and(Vec::is_empty) || sos_refuted;
    let no_ii = kk || type_ii.as_ref().is_some_and(Vec::is_empty);
    let conclusion = match (q.disk_type, no_x, no_ii) {
        (None, true, true) => "cl >= 3",
        (Some(DiskType::X), true, _) => "no type X disk",
        (Some(DiskType::II), _, true) => "no type II disk",
        _ => "not obstructed",
    };
    Ok(json!({
        "input": q.knot,
        "a2": a2,
        "a4": a4,
        "p0": p0.map(|p| p.to_string()),
        "bound": bound,
        "kadokami_kawamura_excluded": kk,
        "typex_parity_obstruction": parity,
        "typex_params": type_x,
        "typeii_params": type_ii,
        "typex_p0_search": sos_rows,
        "typex_excluded": wants(DiskType::X).then_some(no_x),
        "typeii_excluded": wants(DiskType::II).then_some(no_ii),
        "note": "parameter searches are complete only within the bound; an empty list means no solutions within bound",
        "conclusion": conclusion,
    }))
}

fn cmd_montesinos(ctx: &App, desc: &str) -> Result<Value> {
    let m: MontesinosDesc = desc.parse()?;
    let fractions: Vec<Value> =
        m.0.iter()
            .map(|r| match continued_fraction(*r) {
                Ok(cf) => json!({ "value": r.to_string(), "continued_fraction": cf }),
                Err(_) => json!({ "value": r.to_string(), "continued_fraction": Value::Null }),
            })
            .collect();
    let d = m.diagram();
    let mut v = invariants_json(ctx, &d)?;
    v["desc"] = json!(m.to_string());
    v["tangles"] = json!(fractions);
    v["knot"] = json!(d.is_knot());
    v["pd"] = json!(d.to_string());
    Ok(v)
}

fn cmd_catalog(ctx: &App, n_bound: Option<i64>, invariants: bool) -> Result<Value> {
    let n_bound = n_bound.or(ctx.config.n_bound).unwrap_or(3);
    let catalog = theorem1_catalog(n_bound, &ctx.census);
    let mut entries = Vec::new();
    for e in &catalog.entries {
        let mut v = serde_json::to_value(e)?;
        v["has_diagram"] = json!(e.diagram.is_some());
        if let Description::Montesinos { .. } | Description::ConnectedSum { .. } = e.description {
            v["crossings"] = json!(e.diagram.as_ref().map(Diagram::num_crossings));
        }
        if invariants {
            if let Some(d) = &e.diagram {
                let inv = invariants_json(ctx, d)?;
                for k in ["a2", "a4", "conway", "p0"] {
                    v[k] = inv[k].clone();
                }
            }
        }
        entries.push(v);
    }
    Ok(json!({ "n_bound": n_bound, "entries": entries, "skipped": catalog.skipped }))
}

fn parse_triple(s: &str) -> Result<OpenBookTriple> {
    let parts: Vec<i64> = s
        .trim_matches(|c| c == '(' || c == ')')
        .split(',')
        .map(|p| p.trim().parse::<i64>())
        .collect::<Result<_, _>>()
        .map_err(|_| ParseError::new(0, format!("expected `a,b,c`, got `{s}`")))?;
    match parts.as_slice() {
        &[a, b, c] => Ok(OpenBookTriple::new(a, b, c)),
        _ => Err(ParseError::new(0, format!("expected three integers, got `{s}`")).into()),
    }
}

fn cmd_openbook(
    ctx: &App,
    triple: Option<&str>,
    scan: Option<i64>,
    all: bool,
    max_cosets: Option<usize>,
    max_target_order: Option<u64>,
) -> Result<Value> {
    let defaults = Budgets::default();
    let budgets = Budgets {
        max_cosets: max_cosets.or(ctx.config.max_cosets).unwrap_or(defaults.max_cosets),
        max_target_order: max_target_order.or(ctx.config.max_target_order).unwrap_or(defaults.max_target_order),
    };
    if let Some(t) = triple {
        let c = classify_triple(&parse_triple(t)?, &budgets);
        let mut v = serde_json::to_value(&c)?;
        v["link"] = json!((c.verdict == Verdict::TrivialPi1).then(|| associated_link(&c.triple)).flatten());
        return Ok(v);
    }
    let Some(range) = scan else { bail!("give --triple or --scan") };
    if range < 1 {
        return Err(ParseError::new(0, "scan range must be at least 1").into());
    }
    let all_rows = classify_range(range, &budgets, ctx.parallel());
    let count = |v: Verdict| all_rows.iter().filter(|c| c.verdict == v).count();
    let trivial: Vec<Value> = all_rows
        .iter()
        .filter(|c| c.verdict == Verdict::TrivialPi1)
        .map(|c| json!({ "triple": c.triple, "link": associated_link(&c.triple) }))
        .collect();
    let mut v = json!({
        "range": range,
        "triples": all_rows.len(),
        "trivial_pi1": count(Verdict::TrivialPi1),
        "nontrivial_pi1": count(Verdict::NontrivialPi1),
        "inconclusive": count(Verdict::Inconclusive),
        "trivial": trivial,
    });
    if all {
        v["classifications"] = serde_json::to_value(&all_rows)?;
    }
    Ok(v)
}

fn cmd_corollary12(ctx: &App, n_bound: Option<i64>, extra: &[String]) -> Result<Value> {
    let n_bound = n_bound.or(ctx.config.n_bound).unwrap_or(6);
    let mut targets = corollary_targets(&ctx.census)?;
    for k in extra {
        targets.push((k.clone(), ctx.knot(k)?));
    }
    Ok(serde_json::to_value(corollary12(&targets, &ctx.census, &ctx.engine, n_bound)?)?)
}

fn run(cli: &Cli) -> Result<Value> {
    let ctx = App::new(cli)?;
    match &cli.command {
        Command::Invariants { knot } => cmd_invariants(&ctx, knot),
        Command::ClaspObstruct { knot, a2, a4, disk_type, bound, sos } => {
            let q = ClaspQuery { knot: knot.as_deref(), a2: *a2, a4: *a4, disk_type: *disk_type, bound: *bound };
            cmd_clasp_obstruct(&ctx, q, sos)
        }
        Command::Montesinos { desc } => cmd_montesinos(&ctx, desc),
        Command::Catalog { n_bound, invariants } => cmd_catalog(&ctx, *n_bound, *invariants),
        Command::Openbook { triple, scan, all, max_cosets, max_target_order } => {
            cmd_openbook(&ctx, triple.as_deref(), *scan, *all, *max_cosets, *max_target_order)
        }
        Command::Corollary12 { n_bound, extra } => cmd_corollary12(&ctx, *n_bound, extra),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(v) => {
            let text = serde_json::to_string_pretty(&v).expect("JSON values serialize");
            // A closed pipe (e.g. `| head`) is not an error worth reporting.
            let _ = writeln!(std::io::stdout().lock(), "{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
