use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use heckerep::harness::{self, CheckReport, Grid, Instance, Status, REPORT_SCHEMA_VERSION};
use heckerep::hecke::QPoly;
use heckerep::{fiber, hecke, latoracle, repring, rgon, RootDatum, WeightVec};

#[derive(Parser)]
#[command(name = "heckerep", version, about = "Hecke and representation ring structure constants")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Datum {
    /// Root datum label, e.g. C2, GL3, D4sc, adj(A3).
    #[arg(long = "type")]
    label: String,
    /// A dominant coweight: coordinates `1,0,-1`, `0`, or `w3`, `2w1+w2`.
    #[arg(long = "mu", allow_hyphen_values = true, required = true)]
    mus: Vec<String>,
}

impl Datum {
    fn load(&self) -> Result<(std::sync::Arc<RootDatum>, Vec<WeightVec>)> {
        let d = RootDatum::get(&self.label)?;
        let mus = self.mus.iter().map(|m| d.parse_weight(m)).collect::<heckerep::Result<_>>()?;
        Ok((d, mus))
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Hecke structure constants `c^λ_{μ•}(q)`.
    Hecke {
        #[command(flatten)]
        datum: Datum,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        /// Multiply in the Iwahori-Hecke algebra instead of the spherical module.
        #[arg(long)]
        iwahori: bool,
    },
    /// Tensor product multiplicities `dim V^λ_{μ•}`.
    Rep {
        #[command(flatten)]
        datum: Datum,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
    },
    /// Fiber recursions for minuscule coweights.
    Fiber {
        #[command(subcommand)]
        cmd: FiberCmd,
    },
    /// Count `GL_n` lattice chains over `F_q`.
    Oracle {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u8,
        #[arg(long = "mu", allow_hyphen_values = true, required = true)]
        mus: Vec<String>,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        /// Dump up to 1000 chains as echelon bases with their step positions.
        #[arg(long)]
        witnesses: bool,
    },
    /// Tree polygons and special polygons in the building.
    Rgon {
        /// Side lengths in the tree.
        #[arg(long, value_delimiter = ',')]
        u: Option<Vec<i64>>,
        #[command(subcommand)]
        cmd: Option<RgonCmd>,
    },
    /// Batch checks over a grid of instances.
    Verify(Verify),
}

#[derive(Subcommand)]
enum FiberCmd {
    /// Point count of the fiber as a polynomial in q.
    Count {
        #[command(flatten)]
        datum: Datum,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// Equidimensionality audit of the stratification.
    Audit {
        #[command(flatten)]
        datum: Datum,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
}

#[derive(Subcommand)]
enum RgonCmd {
    /// Special polygon with sides `a_i` times an allowed coweight.
    Special {
        #[arg(long = "type")]
        label: String,
        #[arg(long, value_delimiter = ',', required = true)]
        a: Vec<i64>,
        /// The coweight scaled by each `a_i`; defaults to the first allowed fundamental one.
        #[arg(long, allow_hyphen_values = true)]
        generator: Option<String>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Engines,
    Satake,
    Equivalence,
    Audit,
    Saturation,
    Prv,
    Examples,
    Table,
    Rgon,
    All,
}

#[derive(Args)]
struct Verify {
    #[arg(value_enum)]
    suite: Suite,
    /// Grid TOML; the shipped grid when absent.
    #[arg(long)]
    grid: Option<PathBuf>,
    /// Write the full report here.
    #[arg(long)]
    json: Option<PathBuf>,
    /// Saturation scales.
    #[arg(long = "scale", value_delimiter = ',', default_values_t = [2, 3])]
    scales: Vec<i64>,
    /// Random instances for the PRV and r-gon suites.
    #[arg(long, default_value_t = 200)]
    count: usize,
    #[arg(long, default_value_t = 20_240_601)]
    seed: u64,
}

fn print_json(v: &Value) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(v)?);
    Ok(())
}

fn keyed(map: &BTreeMap<Vec<i64>, QPoly>) -> Result<Value> {
    let mut out = serde_json::Map::new();
    for (k, v) in map {
        out.insert(serde_json::to_string(k)?, serde_json::to_value(v)?);
    }
    Ok(Value::Object(out))
}

fn run_hecke(datum: &Datum, lambda: Option<&str>, iwahori: bool) -> Result<()> {
    let (d, mus) = datum.load()?;
    let consts = if iwahori { hecke::structure_constants_iwahori(&d, &mus)? } else { (*hecke::structure_constants(&d, &mus)?).clone() };
    match lambda {
        Some(l) => {
            let lam = d.parse_weight(l)?;
            print_json(&serde_json::to_value(consts.get(lam.coords()).cloned().unwrap_or_default())?)
        }
        None => print_json(&keyed(&consts)?),
    }
}

fn run_rep(datum: &Datum, lambda: Option<&str>) -> Result<()> {
    let (d, mus) = datum.load()?;
    let t = repring::tensor_decompose(&d, &mus)?;
    match lambda {
        Some(l) => print_json(&json!(t.multiplicity(d.parse_weight(l)?.coords()))),
        None => print_json(&serde_json::to_value(&t)?),
    }
}

fn run_oracle(n: usize, q: u8, mus: &[String], lambda: &str, witnesses: bool) -> Result<()> {
    let d = RootDatum::get(&format!("GL{n}"))?;
    let mus: Vec<WeightVec> = mus.iter().map(|m| d.parse_weight(m)).collect::<heckerep::Result<_>>()?;
    let lam = d.parse_weight(lambda)?;
    let res = latoracle::enumerate_fiber(&d, &mus, &lam, q, witnesses)?;
    let mut out = json!({ "count": res.count });
    if let Some(ws) = &res.witnesses {
        let f = latoracle::Field::new(q)?;
        let mut list = Vec::new();
        for w in ws {
            list.push(json!({ "bases": w, "steps": latoracle::witness_steps(&f, n, w)? }));
        }
        out["witnesses"] = json!(list);
    }
    print_json(&out)
}

fn default_generator(d: &RootDatum) -> Result<WeightVec> {
    for i in 1..=d.semisimple_rank() {
        if let Some(w) = d.fundamental_coweight(i)? {
            if rgon::allowed_choice(d, std::slice::from_ref(&w)).is_ok_and(|c| c.iter().all(Option::is_some)) {
                return Ok(w);
            }
        }
    }
    bail!("{} has no fundamental coweight that is a multiple of an allowed one", d.label())
}

fn run_special(label: &str, a: &[i64], generator: Option<&str>) -> Result<bool> {
    let d = RootDatum::get(label)?;
    let g = match generator {
        Some(s) => d.parse_weight(s)?,
        None => default_generator(&d)?,
    };
    let mus: Vec<WeightVec> = a.iter().map(|&k| g.scale(k)).collect();
    let choice = rgon::allowed_choice(&d, &mus)?;
    let witness = rgon::special_rgon(&d, &mus, &choice)?;
    let nonzero = hecke::hecke_nonvanishing(&d, &mus, &d.zero())?;
    print_json(&json!({
        "generator": g.coords(),
        "witness": witness,
        "hecke_nonvanishing": nonzero,
        "status": if nonzero { "PASS" } else { "FAIL" },
    }))?;
    Ok(nonzero)
}

fn grid(path: Option<&PathBuf>) -> Result<Vec<Instance>> {
    let g = match path {
        Some(p) => Grid::parse(&fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?)?,
        None => Grid::default_grid(),
    };
    Ok(g.instances()?)
}

fn run_verify(v: &Verify) -> Result<bool> {
    let needs_grid = !matches!(v.suite, Suite::Examples | Suite::Table | Suite::Rgon);
    let instances = if needs_grid { grid(v.grid.as_ref())? } else { Vec::new() };
    let want = |s: Suite| v.suite == s || v.suite == Suite::All;
    let mut reports: Vec<CheckReport> = Vec::new();
    if want(Suite::Examples) {
        let gate = harness::normalization_gate();
        let gated = gate.passed();
        reports.push(gate);
        reports.push(harness::reproduce_so5());
        reports.push(harness::reproduce_spin12());
        if !gated && v.suite == Suite::All {
            eprintln!("normalization gate failed; grid checks not run");
            return finish(v, &reports);
        }
    }
    if want(Suite::Engines) {
        reports.extend(harness::check_engines(&instances));
    }
    if want(Suite::Satake) {
        reports.extend(harness::check_weak_satake(&instances));
    }
    if want(Suite::Equivalence) {
        reports.extend(harness::check_equivalence(&instances));
    }
    if want(Suite::Audit) {
        reports.extend(harness::check_audit(&instances));
    }
    if want(Suite::Saturation) {
        reports.extend(harness::check_saturation(&instances, &v.scales));
    }
    if want(Suite::Prv) {
        let cases = harness::random_prv_instances(&instances, v.count, v.seed)?;
        reports.extend(harness::prv_suite(&cases));
    }
    if want(Suite::Table) {
        reports.push(harness::emit_allowed_table().1);
    }
    if want(Suite::Rgon) {
        reports.extend(harness::rgon_suite(v.count, v.seed));
    }
    finish(v, &reports)
}

fn finish(v: &Verify, reports: &[CheckReport]) -> Result<bool> {
    let mut by_check: BTreeMap<&str, harness::Summary> = BTreeMap::new();
    for r in reports {
        let s = by_check.entry(&r.check_id).or_default();
        match r.status {
            Status::Pass => s.pass += 1,
            Status::Fail => s.fail += 1,
            Status::Skipped => s.skipped += 1,
        }
    }
    for (id, s) in &by_check {
        println!("{id:<20} pass {:>4}  fail {:>4}  skipped {:>4}", s.pass, s.fail, s.skipped);
    }
    for r in reports.iter().filter(|r| r.status == Status::Fail) {
        println!("FAIL {} {} {}", r.check_id, r.instance, r.evidence);
    }
    let total = harness::summarize(reports);
    if let Some(path) = &v.json {
        let doc = json!({ "schema_version": REPORT_SCHEMA_VERSION, "summary": total, "reports": reports });
        fs::write(path, serde_json::to_string_pretty(&doc)?).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(total.fail == 0)
}

fn run(cli: Cli) -> Result<bool> {
    match cli.cmd {
        Cmd::Hecke { datum, lambda, iwahori } => run_hecke(&datum, lambda.as_deref(), iwahori)?,
        Cmd::Rep { datum, lambda } => run_rep(&datum, lambda.as_deref())?,
        Cmd::Fiber { cmd: FiberCmd::Count { datum, lambda } } => {
            let (d, mus) = datum.load()?;
            let poly = fiber::point_count_recursion(&d, &mus, &d.parse_weight(&lambda)?)?;
            print_json(&serde_json::to_value(poly)?)?;
        }
        Cmd::Fiber { cmd: FiberCmd::Audit { datum, lambda } } => {
            let (d, mus) = datum.load()?;
            let report = fiber::equidimensionality_audit(&d, &mus, &d.parse_weight(&lambda)?)?;
            let pass = report.pass;
            print_json(&json!({ "status": if pass { "PASS" } else { "FAIL" }, "report": report }))?;
            return Ok(pass);
        }
        Cmd::Oracle { n, q, mus, lambda, witnesses } => run_oracle(n, q, &mus, &lambda, witnesses)?,
        Cmd::Rgon { cmd: Some(RgonCmd::Special { label, a, generator }), .. } => return run_special(&label, &a, generator.as_deref()),
        Cmd::Rgon { u: Some(u), cmd: None } => print_json(&serde_json::to_value(rgon::tree_rgon(&u)?)?)?,
        Cmd::Rgon { u: None, cmd: None } => bail!("rgon needs --u or the `special` subcommand"),
        Cmd::Verify(v) => return run_verify(&v),
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
