//! Command-line front end: argument parsing, command dispatch and reports.
//!
//! Every command yields one [`Report`]. Its JSON form has the keys
//! `command`, `inputs`, `verdict`, `witness` and `timing` in that order;
//! `timing` is null unless `--timing` is given, so two runs of one command
//! write identical bytes.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::dsl::{self, Document, Kind};
use crate::error::{Result, SoftError};
use crate::oracle::{self, EnumBounds, Instance, Status, Witness};
use crate::separation::{Axiom, AxiomOutcome, AxiomWitness, DomainScope};
use crate::soft::{Context, SoftPoint, SoftSet};
use crate::{
    check_cotopology, check_topology, is_closed_map, is_open_map, kappa_continuity_witness,
    tau_continuity_witness, Ditopology, SoftCotopology, SoftTopology,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "softdito",
    version,
    about = "Check finite soft topologies, cotopologies and ditopologies"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Output {
    /// Write the JSON report to PATH; `-` writes it to stdout instead of text.
    #[arg(long, value_name = "PATH")]
    json: Option<PathBuf>,
    /// Record wall-clock time in the report.
    #[arg(long)]
    timing: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Validate every declared topology, cotopology and ditopology.
    Check {
        #[arg(long, value_name = "FILE")]
        spec: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Interior of a soft set in a topology or ditopology.
    Interior {
        #[arg(long, value_name = "FILE")]
        spec: PathBuf,
        #[arg(long, value_name = "NAME")]
        space: String,
        #[arg(long, value_name = "NAME")]
        set: String,
        #[command(flatten)]
        out: Output,
    },
    /// Closure of a soft set in a cotopology or ditopology.
    Closure {
        #[arg(long, value_name = "FILE")]
        spec: PathBuf,
        #[arg(long, value_name = "NAME")]
        space: String,
        #[arg(long, value_name = "NAME")]
        set: String,
        #[command(flatten)]
        out: Output,
    },
    /// Separation axioms of a space.
    Axioms {
        #[arg(long, value_name = "FILE")]
        spec: PathBuf,
        #[arg(long, value_name = "NAME")]
        space: String,
        /// Check one axiom: T0, T1, T2, regular, T3, normal or T4.
        #[arg(long, value_name = "AXIOM")]
        axiom: Option<String>,
        /// Restrict soft points to one parameter set, e.g. `e1,e2`.
        #[arg(long, value_name = "PARAMS")]
        domain: Option<String>,
        /// Evaluate on the listed members even if they are not closed.
        #[arg(long)]
        unchecked: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Continuity of a map between two spaces of the same kind.
    Continuity {
        #[arg(long, value_name = "FILE")]
        spec: PathBuf,
        #[arg(long, value_name = "NAME")]
        map: String,
        /// Source then target.
        #[arg(long, value_name = "NAME", num_args = 2, required = true)]
        space: Vec<String>,
        #[command(flatten)]
        out: Output,
    },
    /// Count soft sets, topologies and cotopologies within bounds.
    Enumerate {
        #[arg(long, value_name = "U,E,M", default_value = "2,2,6")]
        bounds: EnumBounds,
        #[command(flatten)]
        out: Output,
    },
    /// Run the registered properties on every instance within bounds.
    VerifyTheorems {
        #[arg(long, value_name = "U,E,M", default_value = "2,1,6")]
        bounds: EnumBounds,
        /// Run only these properties.
        #[arg(long, value_name = "ID")]
        property: Vec<String>,
        #[command(flatten)]
        out: Output,
    },
    /// Search for one witness of a property within bounds.
    Counterexample {
        #[arg(long, value_name = "ID")]
        property: String,
        #[arg(long, value_name = "U,E,M", default_value = "2,2,6")]
        bounds: EnumBounds,
        #[command(flatten)]
        out: Output,
    },
    /// Re-check a witness document against a property.
    Replay {
        #[arg(long, value_name = "FILE")]
        spec: PathBuf,
        #[arg(long, value_name = "ID")]
        property: String,
        #[command(flatten)]
        out: Output,
    },
    /// List the registered properties.
    Properties {
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Debug, Clone, Serialize)]
pub struct Timing {
    pub elapsed_ms: u128,
}

/// One command's result.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub verdict: Value,
    pub witness: Value,
    pub timing: Option<Timing>,
    #[serde(skip)]
    pub ok: bool,
    #[serde(skip)]
    pub text: String,
}

impl Report {
    fn new(command: &str, inputs: Map<String, Value>) -> Report {
        Report {
            command: command.to_string(),
            inputs: Value::Object(inputs),
            verdict: Value::Null,
            witness: Value::Null,
            timing: None,
            ok: true,
            text: String::new(),
        }
    }

    fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report values serialize");
        s.push('\n');
        s
    }

    pub fn exit_code(&self) -> i32 {
        if self.ok {
            EXIT_OK
        } else {
            EXIT_FALSE
        }
    }
}

/// Runs one command line and returns the exit status. Text goes to `out`,
/// diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let opts = cli.command.output().clone();
    let start = Instant::now();
    let mut report = match execute(cli.command) {
        Ok(r) => r,
        Err(Failure::Parse(path, errors)) => {
            for e in errors.0 {
                let _ = writeln!(err, "{}:{e}", path.display());
            }
            return EXIT_USAGE;
        }
        Err(Failure::Soft(e)) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    if opts.timing {
        report.timing = Some(Timing {
            elapsed_ms: start.elapsed().as_millis(),
        });
    }
    match opts.json.as_deref() {
        Some(p) if p == Path::new("-") => {
            let _ = out.write_all(report.to_json().as_bytes());
        }
        Some(p) => {
            if let Err(e) = std::fs::write(p, report.to_json()) {
                let _ = writeln!(err, "error: cannot write {}: {e}", p.display());
                return EXIT_USAGE;
            }
            let _ = out.write_all(report.text.as_bytes());
        }
        None => {
            let _ = out.write_all(report.text.as_bytes());
        }
    }
    report.exit_code()
}

enum Failure {
    Parse(PathBuf, dsl::ParseErrors),
    Soft(SoftError),
}

impl From<SoftError> for Failure {
    fn from(e: SoftError) -> Failure {
        Failure::Soft(e)
    }
}

impl Command {
    fn output(&self) -> &Output {
        match self {
            Command::Check { out, .. }
            | Command::Interior { out, .. }
            | Command::Closure { out, .. }
            | Command::Axioms { out, .. }
            | Command::Continuity { out, .. }
            | Command::Enumerate { out, .. }
            | Command::VerifyTheorems { out, .. }
            | Command::Counterexample { out, .. }
            | Command::Replay { out, .. }
            | Command::Properties { out } => out,
        }
    }
}

fn load(path: &Path) -> std::result::Result<Document, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| {
        Failure::Soft(SoftError::Argument(format!(
            "cannot read {}: {e}",
            path.display()
        )))
    })?;
    dsl::parse(&text).map_err(|e| Failure::Parse(path.to_path_buf(), e))
}

fn inputs(pairs: &[(&str, Value)]) -> Map<String, Value> {
    pairs
        .iter()
        .filter(|(_, v)| !v.is_null())
        .map(|(k, v)| (k.to_string(), v.clone()))
        .collect()
}

fn path_value(p: &Path) -> Value {
    Value::String(p.display().to_string())
}

fn execute(command: Command) -> std::result::Result<Report, Failure> {
    Ok(match command {
        Command::Check { spec, .. } => {
            let doc = load(&spec)?;
            check(&doc, inputs(&[("spec", path_value(&spec))]))?
        }
        Command::Interior {
            spec, space, set, ..
        } => {
            let doc = load(&spec)?;
            let ins = inputs(&[
                ("spec", path_value(&spec)),
                ("space", json!(space)),
                ("set", json!(set)),
            ]);
            operator(&doc, ins, Operator::Interior, &space, &set)?
        }
        Command::Closure {
            spec, space, set, ..
        } => {
            let doc = load(&spec)?;
            let ins = inputs(&[
                ("spec", path_value(&spec)),
                ("space", json!(space)),
                ("set", json!(set)),
            ]);
            operator(&doc, ins, Operator::Closure, &space, &set)?
        }
        Command::Axioms {
            spec,
            space,
            axiom,
            domain,
            unchecked,
            ..
        } => {
            let doc = load(&spec)?;
            let ins = inputs(&[
                ("spec", path_value(&spec)),
                ("space", json!(space)),
                ("axiom", json!(axiom)),
                ("domain", json!(domain)),
                (
                    "unchecked",
                    if unchecked { json!(true) } else { Value::Null },
                ),
            ]);
            axioms(
                &doc,
                ins,
                &space,
                axiom.as_deref(),
                domain.as_deref(),
                unchecked,
            )?
        }
        Command::Continuity {
            spec, map, space, ..
        } => {
            let doc = load(&spec)?;
            let ins = inputs(&[
                ("spec", path_value(&spec)),
                ("map", json!(map)),
                ("spaces", json!(space)),
            ]);
            continuity(&doc, ins, &map, &space[0], &space[1])?
        }
        Command::Enumerate { bounds, .. } => enumerate(bounds)?,
        Command::VerifyTheorems {
            bounds, property, ..
        } => verify(bounds, &property)?,
        Command::Counterexample {
            property, bounds, ..
        } => counterexample(&property, bounds)?,
        Command::Replay { spec, property, .. } => {
            let doc = load(&spec)?;
            let ins = inputs(&[("spec", path_value(&spec)), ("property", json!(property))]);
            replay(&doc, ins, &property)?
        }
        Command::Properties { .. } => list_properties(),
    })
}

pub fn soft_set_json(s: &SoftSet) -> Value {
    let ctx = s.context();
    let m: Map<String, Value> = s
        .entries()
        .map(|(e, v)| (ctx.param_label(e).to_string(), json!(ctx.point_labels(v))))
        .collect();
    Value::Object(m)
}

pub fn soft_point_json(p: &SoftPoint) -> Value {
    let ctx = p.context();
    json!({ "point": ctx.point_label(p.point()), "domain": ctx.param_labels(p.domain()) })
}

pub fn axiom_witness_json(w: &AxiomWitness) -> Value {
    match w {
        AxiomWitness::Points { first, second } => {
            json!({ "kind": "points", "first": soft_point_json(first), "second": soft_point_json(second) })
        }
        AxiomWitness::PointAndSet { point, set } => {
            json!({ "kind": "point-and-set", "point": soft_point_json(point), "set": soft_set_json(set) })
        }
        AxiomWitness::Sets { first, second } => {
            json!({ "kind": "sets", "first": soft_set_json(first), "second": soft_set_json(second) })
        }
    }
}

fn check(doc: &Document, ins: Map<String, Value>) -> Result<Report> {
    let mut r = Report::new("check", ins);
    let mut structures = Map::new();
    let mut witness = Map::new();
    let mut all = true;
    for (name, decl) in doc.topologies() {
        let v = check_topology(doc.context(&decl.context)?, &decl.sets)?;
        record(&mut r, &mut structures, &mut witness, name, "topology", &v);
        all &= v.is_ok();
    }
    for (name, decl) in doc.cotopologies() {
        let v = check_cotopology(doc.context(&decl.context)?, &decl.sets)?;
        record(
            &mut r,
            &mut structures,
            &mut witness,
            name,
            "cotopology",
            &v,
        );
        all &= v.is_ok();
    }
    for (name, decl) in doc.ditopologies() {
        let ok = structures.get(&decl.tau) == Some(&json!(true))
            && structures.get(&decl.kappa) == Some(&json!(true));
        r.line(format!(
            "ditopology {name}: {}",
            if ok { "ok" } else { "invalid component" }
        ));
        structures.insert(name.to_string(), json!(ok));
        all &= ok;
    }
    let counts = json!({
        "contexts": doc.contexts().count(),
        "softsets": doc.sets().count(),
        "topologies": doc.topologies().count(),
        "cotopologies": doc.cotopologies().count(),
        "ditopologies": doc.ditopologies().count(),
        "maps": doc.maps().count(),
    });
    r.verdict = json!({ "ok": all, "declarations": counts, "structures": structures });
    if !witness.is_empty() {
        r.witness = Value::Object(witness);
    }
    r.ok = all;
    Ok(r)
}

fn record(
    r: &mut Report,
    structures: &mut Map<String, Value>,
    witness: &mut Map<String, Value>,
    name: &str,
    kind: &str,
    v: &crate::Validation,
) {
    structures.insert(name.to_string(), json!(v.is_ok()));
    if v.is_ok() {
        r.line(format!("{kind} {name}: ok"));
        return;
    }
    r.line(format!("{kind} {name}: {} violations", v.violations.len()));
    let mut list = Vec::new();
    for x in &v.violations {
        r.line(format!("  {x}"));
        list.push(json!({
            "op": x.op.to_string(),
            "left": soft_set_json(&x.left),
            "right": soft_set_json(&x.right),
            "missing": soft_set_json(&x.missing),
        }));
    }
    witness.insert(name.to_string(), Value::Array(list));
}

#[derive(Clone, Copy)]
enum Operator {
    Interior,
    Closure,
}

fn operator(
    doc: &Document,
    ins: Map<String, Value>,
    op: Operator,
    space: &str,
    set: &str,
) -> Result<Report> {
    let s = doc.set(set)?;
    let (name, result, fixed) = match (op, doc.kind_of(space)) {
        (Operator::Interior, Some(Kind::Topology)) => {
            let t = doc.topology(space)?;
            ("interior", t.interior(s)?, t.is_open(s))
        }
        (Operator::Interior, Some(Kind::Ditopology)) => {
            let d = doc.ditopology(space)?;
            ("interior", d.interior(s)?, d.tau().is_open(s))
        }
        (Operator::Closure, Some(Kind::Cotopology)) => {
            let k = doc.cotopology(space)?;
            ("closure", k.closure(s)?, k.is_closed(s))
        }
        (Operator::Closure, Some(Kind::Ditopology)) => {
            let d = doc.ditopology(space)?;
            ("closure", d.closure(s)?, d.kappa().is_closed(s))
        }
        (Operator::Interior, _) => {
            return Err(SoftError::Argument(format!(
                "`{space}` is not a topology or ditopology"
            )))
        }
        (Operator::Closure, _) => {
            return Err(SoftError::Argument(format!(
                "`{space}` is not a cotopology or ditopology"
            )))
        }
    };
    let mut r = Report::new(name, ins);
    let flag = if matches!(op, Operator::Interior) {
        "open"
    } else {
        "closed"
    };
    r.line(format!("{name} of {set} in {space}: {result}"));
    r.line(format!(
        "{set} is {}{flag}",
        if fixed { "" } else { "not " }
    ));
    let mut v = Map::new();
    v.insert("ok".into(), json!(true));
    v.insert("result".into(), soft_set_json(&result));
    v.insert(flag.into(), json!(fixed));
    r.verdict = Value::Object(v);
    Ok(r)
}

enum Space {
    Tau(SoftTopology),
    Kappa(SoftCotopology),
    Dito(Ditopology),
}

impl Space {
    fn context(&self) -> &Arc<Context> {
        match self {
            Space::Tau(t) => t.context(),
            Space::Kappa(k) => k.context(),
            Space::Dito(d) => d.context(),
        }
    }

    fn check_axiom(&self, a: Axiom, scope: DomainScope) -> Result<AxiomOutcome> {
        match self {
            Space::Tau(t) => t.check_axiom(a, scope),
            Space::Kappa(k) => k.check_axiom(a, scope),
            Space::Dito(d) => d.check_axiom(a, scope),
        }
    }
}

fn space(doc: &Document, name: &str, unchecked: bool) -> Result<Space> {
    match doc.kind_of(name) {
        Some(Kind::Topology) if unchecked => {
            let d = doc.topology_decl(name)?;
            Ok(Space::Tau(SoftTopology::from_members_unchecked(
                doc.context(&d.context)?,
                d.sets.clone(),
            )?))
        }
        Some(Kind::Cotopology) if unchecked => {
            let d = doc.cotopology_decl(name)?;
            Ok(Space::Kappa(SoftCotopology::from_members_unchecked(
                doc.context(&d.context)?,
                d.sets.clone(),
            )?))
        }
        Some(Kind::Ditopology) if unchecked => {
            let d = doc.ditopology_decl(name)?;
            let (Space::Tau(t), Space::Kappa(k)) =
                (space(doc, &d.tau, true)?, space(doc, &d.kappa, true)?)
            else {
                unreachable!("ditopology components are resolved by the parser")
            };
            Ok(Space::Dito(Ditopology::new(t, k)?))
        }
        Some(Kind::Topology) => Ok(Space::Tau(doc.topology(name)?)),
        Some(Kind::Cotopology) => Ok(Space::Kappa(doc.cotopology(name)?)),
        Some(Kind::Ditopology) => Ok(Space::Dito(doc.ditopology(name)?)),
        _ => Err(SoftError::Argument(format!(
            "`{name}` is not a topology, cotopology or ditopology"
        ))),
    }
}

fn axioms(
    doc: &Document,
    ins: Map<String, Value>,
    name: &str,
    axiom: Option<&str>,
    domain: Option<&str>,
    unchecked: bool,
) -> Result<Report> {
    let sp = space(doc, name, unchecked)?;
    let ctx = sp.context().clone();
    let scope = match domain {
        None => DomainScope::All,
        Some(d) => {
            let labels: Vec<&str> = d
                .split(',')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .collect();
            DomainScope::Fixed(ctx.param_set(&labels)?)
        }
    };
    scope.domains(&ctx)?;
    let list: Vec<Axiom> = match axiom {
        Some(a) => vec![a.parse()?],
        None => Axiom::ALL.to_vec(),
    };
    let mut r = Report::new("axioms", ins);
    let mut results = Map::new();
    let mut witness = Map::new();
    let mut all = true;
    for a in list {
        let o = sp.check_axiom(a, scope)?;
        results.insert(a.name().into(), json!(o.holds));
        all &= o.holds;
        match &o.witness {
            Some(w) => {
                let side = o
                    .failed_side
                    .map(|s| format!(" on {s}"))
                    .unwrap_or_default();
                r.line(format!("{:8}fails{side}: {w}", a.name()));
                let mut j = axiom_witness_json(w);
                if let (Some(s), Value::Object(m)) = (o.failed_side, &mut j) {
                    m.insert("side".into(), json!(s.to_string()));
                }
                witness.insert(a.name().into(), j);
            }
            None => r.line(format!(
                "{:8}{}",
                a.name(),
                if o.holds { "holds" } else { "fails" }
            )),
        }
    }
    let scope_json = match scope {
        DomainScope::All => json!("all"),
        DomainScope::Fixed(a) => json!(ctx.param_labels(a)),
    };
    r.verdict = json!({ "ok": all, "scope": scope_json, "axioms": results });
    if !witness.is_empty() {
        r.witness = Value::Object(witness);
    }
    r.ok = all;
    Ok(r)
}

fn continuity(
    doc: &Document,
    ins: Map<String, Value>,
    map: &str,
    src: &str,
    tgt: &str,
) -> Result<Report> {
    let f = doc.map(map)?;
    let (s, t) = (space(doc, src, false)?, space(doc, tgt, false)?);
    let mut r = Report::new("continuity", ins);
    let mut v = Map::new();
    let mut w = Map::new();
    let mut ok = true;
    let mut side =
        |label: &str, found: Option<SoftSet>, v: &mut Map<String, Value>, r: &mut Report| {
            v.insert(format!("{label}_continuous"), json!(found.is_none()));
            match found {
                None => r.line(format!("{label}-continuous: yes")),
                Some(g) => {
                    r.line(format!("{label}-continuous: no, preimage of {g} fails"));
                    w.insert(label.to_string(), soft_set_json(&g));
                    ok = false;
                }
            }
        };
    match (&s, &t) {
        (Space::Tau(a), Space::Tau(b)) => {
            side("tau", tau_continuity_witness(f, a, b)?, &mut v, &mut r);
            v.insert("open_map".into(), json!(is_open_map(f, a, b)?));
        }
        (Space::Kappa(a), Space::Kappa(b)) => {
            side("kappa", kappa_continuity_witness(f, a, b)?, &mut v, &mut r);
            v.insert("closed_map".into(), json!(is_closed_map(f, a, b)?));
        }
        (Space::Dito(a), Space::Dito(b)) => {
            side(
                "tau",
                tau_continuity_witness(f, a.tau(), b.tau())?,
                &mut v,
                &mut r,
            );
            side(
                "kappa",
                kappa_continuity_witness(f, a.kappa(), b.kappa())?,
                &mut v,
                &mut r,
            );
        }
        _ => {
            return Err(SoftError::Argument(format!(
                "`{src}` and `{tgt}` are spaces of different kinds"
            )))
        }
    }
    if let (Space::Dito(_), Space::Dito(_)) = (&s, &t) {
        let both = v["tau_continuous"] == json!(true) && v["kappa_continuous"] == json!(true);
        v.insert("dito_continuous".into(), json!(both));
    }
    let mut verdict = Map::new();
    verdict.insert("ok".into(), json!(ok));
    verdict.extend(v);
    r.verdict = Value::Object(verdict);
    if !w.is_empty() {
        r.witness = Value::Object(w);
    }
    r.ok = ok;
    Ok(r)
}

fn enumerate(bounds: EnumBounds) -> Result<Report> {
    let mut r = Report::new(
        "enumerate",
        inputs(&[("bounds", json!(bounds.to_string()))]),
    );
    let rows = oracle::census(bounds)?;
    r.line(format!(
        "{:8}{:>10}{:>12}{:>14}{:>14}{:>11}",
        "context", "softsets", "topologies", "cotopologies", "ditopologies", "self-maps"
    ));
    for row in &rows {
        r.line(format!(
            "{:8}{:>10}{:>12}{:>14}{:>14}{:>11}",
            row.context,
            row.soft_sets,
            row.topologies,
            row.cotopologies,
            row.ditopologies,
            row.self_maps
        ));
    }
    r.verdict = json!({ "ok": true, "census": rows });
    Ok(r)
}

fn verify(bounds: EnumBounds, only: &[String]) -> Result<Report> {
    let ins = inputs(&[
        ("bounds", json!(bounds.to_string())),
        (
            "properties",
            if only.is_empty() {
                Value::Null
            } else {
                json!(only)
            },
        ),
    ]);
    let mut r = Report::new("verify-theorems", ins);
    let reports = if only.is_empty() {
        oracle::run_theorem_suite(bounds)?
    } else {
        let ps = only
            .iter()
            .map(|id| oracle::property(id))
            .collect::<Result<Vec<_>>>()?;
        oracle::run_properties(bounds, &ps)?
    };
    let mut rows = Vec::new();
    let mut witness = Map::new();
    let mut ok = true;
    let (mut verified, mut examples, mut logged) = (0, 0, 0);
    for t in &reports {
        match t.status {
            Status::Verified => verified += 1,
            Status::Counterexample => examples += 1,
            Status::DiscrepancyLogged => logged += 1,
        }
        // a discrepancy without a replayable witness is an unsupported claim
        let good = t.status != Status::DiscrepancyLogged || t.witness.is_some();
        ok &= good;
        let note = t
            .note
            .as_deref()
            .map(|n| format!(" ({n})"))
            .unwrap_or_default();
        r.line(format!(
            "{:<38} {:<19} {:>8} instances{note}",
            t.id,
            t.status.to_string(),
            t.instances
        ));
        rows.push(json!({
            "id": t.id,
            "anchor": t.anchor,
            "kind": t.kind,
            "status": t.status,
            "instances": t.instances,
            "note": t.note,
        }));
        if let Some(w) = &t.witness {
            witness.insert(t.id.clone(), json!(w.document));
        }
    }
    r.line(format!(
        "{verified} verified, {examples} with examples, {logged} discrepancies logged"
    ));
    r.verdict = json!({
        "ok": ok,
        "counts": { "verified": verified, "counterexample": examples, "discrepancy-logged": logged },
        "reports": rows,
    });
    if !witness.is_empty() {
        r.witness = Value::Object(witness);
    }
    r.ok = ok;
    Ok(r)
}

fn counterexample(id: &str, bounds: EnumBounds) -> Result<Report> {
    let p = oracle::property(id)?;
    let ins = inputs(&[
        ("property", json!(id)),
        ("bounds", json!(bounds.to_string())),
    ]);
    let mut r = Report::new("counterexample", ins);
    let found = oracle::find_counterexample(id, bounds)?;
    r.verdict =
        json!({ "ok": found.is_some(), "property": id, "kind": p.kind, "anchor": p.anchor });
    match found {
        Some(w) => {
            r.line(format!("witness for {id} ({})", p.anchor));
            r.text.push_str(&w.document);
            r.witness = json!({ "property": w.property, "document": w.document });
        }
        None => {
            r.line(format!("no witness for {id} within {bounds}"));
            r.ok = false;
        }
    }
    Ok(r)
}

fn replay(doc: &Document, ins: Map<String, Value>, id: &str) -> Result<Report> {
    let p = oracle::property(id)?;
    let inst = Instance::from_document(doc)?;
    let hit = (p.check)(&inst)?;
    let mut r = Report::new("replay", ins);
    r.line(format!(
        "{id}: {}",
        if hit {
            "witness reproduced"
        } else {
            "not a witness"
        }
    ));
    r.verdict = json!({ "ok": hit, "property": id, "kind": p.kind });
    if hit {
        r.witness = json!(Witness::new(id, &inst)?);
    }
    r.ok = hit;
    Ok(r)
}

fn list_properties() -> Report {
    let mut r = Report::new("properties", Map::new());
    let mut rows = Vec::new();
    for p in oracle::properties() {
        r.line(format!(
            "{:<38} {:<8} {}",
            p.id,
            serde_json::to_value(p.kind).unwrap().as_str().unwrap_or(""),
            p.anchor
        ));
        rows.push(json!({ "id": p.id, "kind": p.kind, "anchor": p.anchor }));
    }
    r.verdict = json!({ "ok": true, "properties": rows });
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(
            std::iter::once("softdito").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run_str(&["bogus"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["interior"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn json_key_order_is_fixed() {
        let (code, out, _) = run_str(&["enumerate", "--bounds", "1,1", "--json", "-"]);
        assert_eq!(code, EXIT_OK);
        let keys: Vec<usize> = [
            "\"command\"",
            "\"inputs\"",
            "\"verdict\"",
            "\"witness\"",
            "\"timing\"",
        ]
        .iter()
        .map(|k| out.find(k).unwrap())
        .collect();
        assert!(keys.windows(2).all(|w| w[0] < w[1]));
        assert!(out.contains("\"timing\": null"));
    }
}
