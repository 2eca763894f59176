//! Exhaustive enumeration over bounded contexts, the theorem suite and the
//! counterexample registry.
//!
//! Every property is a predicate that is true exactly on its witnesses: a
//! violating instance for a law, an example for an existence claim, a
//! disagreement for a reading comparison. Instances are visited in canonical
//! order, so the first witness found is the smallest one.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock};

use serde::Serialize;

use crate::bits::{ParamSet, PointSet};
use crate::cotopo::SoftCotopology;
use crate::dsl::{self, Document};
use crate::error::{Result, SoftError};
use crate::family::Family;
use crate::map::SoftMap;
use crate::soft::{Context, SoftSet};
use crate::topo::SoftTopology;

mod props;

pub use props::{properties, property, Property, PropertyKind};

pub const DEFAULT_BUDGET: u64 = 4096;
pub const DEFAULT_INSTANCE_CAP: u64 = 1_000_000;

/// Sizes of the contexts and families that enumeration may visit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EnumBounds {
    pub max_universe: usize,
    pub max_params: usize,
    pub max_explicit_members: usize,
    /// Upper limit on `(1 + 2^|U|)^|E|` for the largest context.
    pub budget: u64,
    /// Instances visited per property before a search stops.
    pub instance_cap: u64,
}

impl Default for EnumBounds {
    fn default() -> Self {
        EnumBounds {
            max_universe: 2,
            max_params: 2,
            max_explicit_members: 6,
            budget: DEFAULT_BUDGET,
            instance_cap: DEFAULT_INSTANCE_CAP,
        }
    }
}

/// `(1 + 2^u)^e`, the number of soft sets over `u` points and `e` parameters.
pub fn soft_set_count(u: usize, e: usize) -> Option<u64> {
    let base = 1u64.checked_shl(u32::try_from(u).ok()?)?.checked_add(1)?;
    base.checked_pow(u32::try_from(e).ok()?)
}

impl EnumBounds {
    pub fn new(
        max_universe: usize,
        max_params: usize,
        max_explicit_members: usize,
    ) -> Result<EnumBounds> {
        EnumBounds {
            max_universe,
            max_params,
            max_explicit_members,
            ..EnumBounds::default()
        }
        .checked()
    }

    pub fn with_budget(self, budget: u64) -> Result<EnumBounds> {
        EnumBounds { budget, ..self }.checked()
    }

    pub fn with_instance_cap(self, instance_cap: u64) -> EnumBounds {
        EnumBounds {
            instance_cap,
            ..self
        }
    }

    fn checked(self) -> Result<EnumBounds> {
        if self.max_universe == 0 || self.max_params == 0 {
            return Err(SoftError::Bounds(
                "bounds need at least one point and one parameter".into(),
            ));
        }
        match soft_set_count(self.max_universe, self.max_params) {
            Some(n) if n <= self.budget => Ok(self),
            _ => Err(SoftError::Bounds(format!(
                "|U|={} |E|={} exceeds the budget of {} soft sets",
                self.max_universe, self.max_params, self.budget
            ))),
        }
    }

    /// Componentwise maximum.
    pub fn join(self, other: EnumBounds) -> EnumBounds {
        EnumBounds {
            max_universe: self.max_universe.max(other.max_universe),
            max_params: self.max_params.max(other.max_params),
            max_explicit_members: self.max_explicit_members.max(other.max_explicit_members),
            budget: self.budget.max(other.budget),
            instance_cap: self.instance_cap.max(other.instance_cap),
        }
    }

    pub fn contains(self, other: EnumBounds) -> bool {
        other.max_universe <= self.max_universe
            && other.max_params <= self.max_params
            && other.max_explicit_members <= self.max_explicit_members
    }

    /// Every context within the bounds, ordered by `|U| + |E|`, then `|E|`.
    pub fn contexts(self) -> Vec<Arc<Context>> {
        let mut dims: Vec<(usize, usize)> = (1..=self.max_universe)
            .flat_map(|u| (1..=self.max_params).map(move |e| (u, e)))
            .collect();
        dims.sort_by_key(|&(u, e)| (u + e, e));
        dims.into_iter()
            .map(|(u, e)| bounded_context(u, e))
            .collect()
    }
}

impl fmt::Display for EnumBounds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{},{},{}",
            self.max_universe, self.max_params, self.max_explicit_members
        )
    }
}

impl FromStr for EnumBounds {
    type Err = SoftError;

    /// `U,E` or `U,E,M`.
    fn from_str(s: &str) -> Result<EnumBounds> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        let num = |p: &str| {
            p.parse::<usize>()
                .map_err(|_| SoftError::Argument(format!("bounds `{s}`: `{p}` is not a count")))
        };
        match parts.as_slice() {
            [u, e] => EnumBounds::new(num(u)?, num(e)?, EnumBounds::default().max_explicit_members),
            [u, e, m] => EnumBounds::new(num(u)?, num(e)?, num(m)?),
            _ => Err(SoftError::Argument(format!(
                "bounds `{s}`: expected U,E or U,E,M"
            ))),
        }
    }
}

/// The canonical context with `u` points and `e` parameters, named `U{u}E{e}`.
pub fn bounded_context(u: usize, e: usize) -> Arc<Context> {
    let points: Vec<String> = if u <= 3 {
        ["x", "y", "z"][..u].iter().map(|s| s.to_string()).collect()
    } else {
        (0..u).map(|i| format!("u{i:02}")).collect()
    };
    let params: Vec<String> = (1..=e)
        .map(|i| {
            if e < 10 {
                format!("e{i}")
            } else {
                format!("e{i:02}")
            }
        })
        .collect();
    Context::new(format!("U{u}E{e}"), points, params).expect("distinct generated labels")
}

/// Every soft set over `ctx` exactly once. Parameter `i` is digit `i` of
/// the index in base `1 + 2^|U|`: 0 leaves it out of the domain, `1 + v`
/// maps it to the point set with bits `v`.
pub fn enumerate_soft_sets(ctx: &Arc<Context>, budget: u64) -> Result<Vec<SoftSet>> {
    let count = soft_set_count(ctx.n_points(), ctx.n_params())
        .filter(|&n| n <= budget)
        .ok_or_else(|| {
            SoftError::Bounds(format!(
                "context `{}` has more than {budget} soft sets",
                ctx.name()
            ))
        })?;
    let base = 1 + (1u64 << ctx.n_points());
    Ok((0..count)
        .map(|mut k| {
            let mut domain = ParamSet::EMPTY;
            let mut values = vec![PointSet::EMPTY; ctx.n_params()];
            for (e, v) in values.iter_mut().enumerate() {
                let d = k % base;
                k /= base;
                if d > 0 {
                    domain.insert(e);
                    *v = PointSet(d - 1);
                }
            }
            SoftSet::from_parts(ctx, domain, values)
        })
        .collect())
}

/// Every family closed under both binary operations with at most
/// `max_explicit_members` listed members, as canonical member lists ordered
/// by size then members. Families are reached by adding one generator at a
/// time to an already closed family and closing again. The member bound is
/// applied only at the end: a closed subfamily can list more members than
/// the family it generates, since a padding in the larger family may be a
/// core in the smaller one.
fn closed_families(ctx: &Arc<Context>, bounds: EnumBounds) -> Result<Vec<Vec<SoftSet>>> {
    let sets = enumerate_soft_sets(ctx, bounds.budget)?;
    let start = Family::normalized(ctx, []);
    let mut seen: BTreeSet<Vec<SoftSet>> = BTreeSet::from([start.members().to_vec()]);
    let mut frontier = vec![start];
    while let Some(fam) = frontier.pop() {
        for s in &sets {
            if fam.contains(s) {
                continue;
            }
            let next = Family::generated(ctx, fam.members().iter().cloned().chain([s.clone()]));
            if seen.insert(next.members().to_vec()) {
                frontier.push(next);
            }
        }
    }
    let mut out: Vec<Vec<SoftSet>> = seen
        .into_iter()
        .filter(|m| m.len() <= bounds.max_explicit_members)
        .collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(out)
}

/// Every soft topology on `ctx` within the member bound. The closure
/// conditions of topologies and cotopologies coincide for finite families,
/// so [`enumerate_cotopologies`] visits the same families.
pub fn enumerate_topologies(ctx: &Arc<Context>, bounds: EnumBounds) -> Result<Vec<SoftTopology>> {
    closed_families(ctx, bounds)?
        .into_iter()
        .map(|m| SoftTopology::new(ctx, m))
        .collect()
}

pub fn enumerate_cotopologies(
    ctx: &Arc<Context>,
    bounds: EnumBounds,
) -> Result<Vec<SoftCotopology>> {
    closed_families(ctx, bounds)?
        .into_iter()
        .map(|m| SoftCotopology::new(ctx, m))
        .collect()
}

/// Every soft map, point table varying fastest in the last position.
pub fn enumerate_maps(source: &Arc<Context>, target: &Arc<Context>) -> Vec<SoftMap> {
    let tables = |n: usize, m: usize| -> Vec<Vec<usize>> {
        let mut out = vec![vec![]];
        for _ in 0..n {
            out = out
                .into_iter()
                .flat_map(|t| (0..m).map(move |j| [t.clone(), vec![j]].concat()))
                .collect();
        }
        out
    };
    let phis = tables(source.n_points(), target.n_points());
    let psis = tables(source.n_params(), target.n_params());
    let mut out = Vec::with_capacity(phis.len() * psis.len());
    for psi in &psis {
        for phi in &phis {
            out.push(
                SoftMap::new(source, target, phi.clone(), psi.clone())
                    .expect("tables within range"),
            );
        }
    }
    out
}

/// Sizes of the enumerated structures for one context.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub context: String,
    pub universe: usize,
    pub params: usize,
    pub soft_sets: u64,
    pub topologies: usize,
    pub cotopologies: usize,
    pub ditopologies: usize,
    pub self_maps: usize,
}

pub fn census(bounds: EnumBounds) -> Result<Vec<CensusRow>> {
    bounds
        .contexts()
        .iter()
        .map(|ctx| {
            let t = closed_families(ctx, bounds)?.len();
            Ok(CensusRow {
                context: ctx.name().to_string(),
                universe: ctx.n_points(),
                params: ctx.n_params(),
                soft_sets: soft_set_count(ctx.n_points(), ctx.n_params()).unwrap_or(u64::MAX),
                topologies: t,
                cotopologies: t,
                ditopologies: t * t,
                self_maps: ctx.n_points().pow(ctx.n_points() as u32)
                    * ctx.n_params().pow(ctx.n_params() as u32),
            })
        })
        .collect()
}

/// The objects a property is evaluated on. Which fields are used, and in
/// what roles, is fixed by the property's [`Shape`].
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Instance {
    pub sets: Vec<SoftSet>,
    pub topologies: Vec<SoftTopology>,
    pub cotopologies: Vec<SoftCotopology>,
    pub maps: Vec<SoftMap>,
}

impl Instance {
    /// A document declaring every object: sets `S1..`, topologies `tau1..`,
    /// cotopologies `kappa1..`, maps `f1..`.
    pub fn to_document(&self) -> Result<Document> {
        let mut doc = Document::new();
        let add_ctx = |doc: &mut Document, c: &Arc<Context>| -> Result<()> {
            if doc.context(c.name()).is_err() {
                doc.add_context(c.clone())?;
            }
            Ok(())
        };
        for s in &self.sets {
            add_ctx(&mut doc, s.context())?;
        }
        for t in &self.topologies {
            add_ctx(&mut doc, t.context())?;
        }
        for k in &self.cotopologies {
            add_ctx(&mut doc, k.context())?;
        }
        for m in &self.maps {
            add_ctx(&mut doc, m.source())?;
            add_ctx(&mut doc, m.target())?;
        }
        for (i, s) in self.sets.iter().enumerate() {
            doc.add_set(&format!("S{}", i + 1), s.clone())?;
        }
        for (prefix, members) in self
            .topologies
            .iter()
            .map(|t| (t.context().clone(), t.members().to_vec()))
            .enumerate()
            .map(|(i, m)| (format!("tau{}", i + 1), m))
            .chain(
                self.cotopologies
                    .iter()
                    .map(|k| (k.context().clone(), k.members().to_vec()))
                    .enumerate()
                    .map(|(i, m)| (format!("kappa{}", i + 1), m)),
            )
        {
            let (ctx, sets) = members;
            let names: Vec<String> = (1..=sets.len()).map(|j| format!("{prefix}_{j}")).collect();
            for (n, s) in names.iter().zip(sets) {
                doc.add_set(n, s)?;
            }
            let refs: Vec<&str> = names.iter().map(String::as_str).collect();
            if prefix.starts_with("tau") {
                doc.add_topology(&prefix, ctx.name(), &refs)?;
            } else {
                doc.add_cotopology(&prefix, ctx.name(), &refs)?;
            }
        }
        for (i, m) in self.maps.iter().enumerate() {
            doc.add_map(&format!("f{}", i + 1), m.clone())?;
        }
        Ok(doc)
    }

    pub fn from_document(doc: &Document) -> Result<Instance> {
        let mut inst = Instance::default();
        for i in 1.. {
            match doc.set(&format!("S{i}")) {
                Ok(s) => inst.sets.push(s.clone()),
                Err(_) => break,
            }
        }
        for i in 1.. {
            let name = format!("tau{i}");
            if doc.topology_decl(&name).is_err() {
                break;
            }
            inst.topologies.push(doc.topology(&name)?);
        }
        for i in 1.. {
            let name = format!("kappa{i}");
            if doc.cotopology_decl(&name).is_err() {
                break;
            }
            inst.cotopologies.push(doc.cotopology(&name)?);
        }
        for i in 1.. {
            match doc.map(&format!("f{i}")) {
                Ok(m) => inst.maps.push(m.clone()),
                Err(_) => break,
            }
        }
        Ok(inst)
    }
}

/// A serialized witness: the property it witnesses and the instance as a
/// specification document.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub property: String,
    pub document: String,
}

impl Witness {
    pub fn new(property: &str, inst: &Instance) -> Result<Witness> {
        Ok(Witness {
            property: property.to_string(),
            document: inst.to_document()?.to_text(),
        })
    }

    /// Parses the document and re-evaluates the property; true when the
    /// instance still witnesses it.
    pub fn replay(&self) -> Result<bool> {
        let p = property(&self.property)?;
        let doc = dsl::parse(&self.document)
            .map_err(|e| SoftError::Argument(format!("witness document: {e}")))?;
        (p.check)(&Instance::from_document(&doc)?)
    }
}

/// How the instances of a property are built.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shape {
    /// `k` soft sets over one context.
    Sets(usize),
    /// Families of one to three soft sets over one context.
    SetFamily,
    /// A topology and `k` soft sets on its context.
    Topo(usize),
    Cotopo(usize),
    /// Two topologies on one context.
    TopoPair,
    CotopoPair,
    /// A topology, a cotopology and `k` soft sets on one context.
    Dito(usize),
    /// A map with `src` soft sets over its source and `tgt` over its target.
    Map {
        src: usize,
        tgt: usize,
    },
    /// A map with a topology on each side.
    MapTopo,
    MapCotopo,
    /// A map with a topology and a cotopology on each side, in the order
    /// source then target.
    MapDito,
    /// Maps `f: U → V`, `g: V → W` and one soft set over `W`.
    MapChain,
    /// Maps `f`, `g` with a topology on each of the three contexts.
    MapChainTopo,
    MapChainCotopo,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Verified,
    Counterexample,
    DiscrepancyLogged,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Verified => "verified",
            Status::Counterexample => "counterexample",
            Status::DiscrepancyLogged => "discrepancy-logged",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub id: String,
    pub anchor: String,
    pub kind: PropertyKind,
    pub instances: u64,
    pub status: Status,
    pub witness: Option<Witness>,
    pub note: Option<String>,
}

struct CtxData {
    ctx: Arc<Context>,
    sets: Vec<SoftSet>,
    topologies: OnceLock<Vec<SoftTopology>>,
    cotopologies: OnceLock<Vec<SoftCotopology>>,
}

/// Enumerated structures per context, computed on first use.
pub struct Catalog {
    bounds: EnumBounds,
    ctxs: Vec<CtxData>,
}

enum Flow {
    Continue,
    Stop,
}

impl Catalog {
    pub fn new(bounds: EnumBounds) -> Result<Catalog> {
        let ctxs = bounds
            .contexts()
            .into_iter()
            .map(|ctx| {
                Ok(CtxData {
                    sets: enumerate_soft_sets(&ctx, bounds.budget)?,
                    ctx,
                    topologies: OnceLock::new(),
                    cotopologies: OnceLock::new(),
                })
            })
            .collect::<Result<_>>()?;
        Ok(Catalog { bounds, ctxs })
    }

    pub fn bounds(&self) -> EnumBounds {
        self.bounds
    }

    fn topologies(&self, i: usize) -> &[SoftTopology] {
        let d = &self.ctxs[i];
        d.topologies
            .get_or_init(|| enumerate_topologies(&d.ctx, self.bounds).expect("budget checked"))
    }

    fn cotopologies(&self, i: usize) -> &[SoftCotopology] {
        let d = &self.ctxs[i];
        d.cotopologies
            .get_or_init(|| enumerate_cotopologies(&d.ctx, self.bounds).expect("budget checked"))
    }

    /// Calls `f` on every instance of `shape` in canonical order until it
    /// asks to stop or the instance cap is reached. Returns the number of
    /// instances visited and whether the cap cut the search short.
    fn visit(
        &self,
        shape: Shape,
        f: &mut dyn FnMut(Instance) -> Result<Flow>,
    ) -> Result<(u64, bool)> {
        let mut n = 0u64;
        let cap = self.bounds.instance_cap;
        let mut capped = false;
        let mut step = |inst: Instance| -> Result<Flow> {
            if n >= cap {
                capped = true;
                return Ok(Flow::Stop);
            }
            n += 1;
            f(inst)
        };
        let nc = self.ctxs.len();
        match shape {
            Shape::Sets(k) => {
                for d in &self.ctxs {
                    if let Flow::Stop = tuples(&d.sets, k, &mut |sets| {
                        step(Instance {
                            sets,
                            ..Default::default()
                        })
                    })? {
                        break;
                    }
                }
            }
            Shape::SetFamily => {
                'outer: for d in &self.ctxs {
                    for k in 1..=3 {
                        if let Flow::Stop = tuples(&d.sets, k, &mut |sets| {
                            step(Instance {
                                sets,
                                ..Default::default()
                            })
                        })? {
                            break 'outer;
                        }
                    }
                }
            }
            Shape::Topo(k) | Shape::Cotopo(k) | Shape::Dito(k) => {
                'outer: for (i, d) in self.ctxs.iter().enumerate() {
                    let taus: Vec<Option<&SoftTopology>> = match shape {
                        Shape::Cotopo(_) => vec![None],
                        _ => self.topologies(i).iter().map(Some).collect(),
                    };
                    let kappas: Vec<Option<&SoftCotopology>> = match shape {
                        Shape::Topo(_) => vec![None],
                        _ => self.cotopologies(i).iter().map(Some).collect(),
                    };
                    for t in &taus {
                        for c in &kappas {
                            let flow = tuples(&d.sets, k, &mut |sets| {
                                step(Instance {
                                    sets,
                                    topologies: t.iter().map(|t| (*t).clone()).collect(),
                                    cotopologies: c.iter().map(|c| (*c).clone()).collect(),
                                    maps: vec![],
                                })
                            })?;
                            if let Flow::Stop = flow {
                                break 'outer;
                            }
                        }
                    }
                }
            }
            Shape::TopoPair => {
                'outer: for i in 0..nc {
                    for a in self.topologies(i) {
                        for b in self.topologies(i) {
                            let inst = Instance {
                                topologies: vec![a.clone(), b.clone()],
                                ..Default::default()
                            };
                            if let Flow::Stop = step(inst)? {
                                break 'outer;
                            }
                        }
                    }
                }
            }
            Shape::CotopoPair => {
                'outer: for i in 0..nc {
                    for a in self.cotopologies(i) {
                        for b in self.cotopologies(i) {
                            let inst = Instance {
                                cotopologies: vec![a.clone(), b.clone()],
                                ..Default::default()
                            };
                            if let Flow::Stop = step(inst)? {
                                break 'outer;
                            }
                        }
                    }
                }
            }
            Shape::Map { src, tgt } => {
                'outer: for i in 0..nc {
                    for j in 0..nc {
                        let (s, t) = (&self.ctxs[i], &self.ctxs[j]);
                        for m in enumerate_maps(&s.ctx, &t.ctx) {
                            let flow = tuples(&s.sets, src, &mut |a| {
                                tuples(&t.sets, tgt, &mut |b| {
                                    step(Instance {
                                        sets: [a.clone(), b].concat(),
                                        maps: vec![m.clone()],
                                        ..Default::default()
                                    })
                                })
                            })?;
                            if let Flow::Stop = flow {
                                break 'outer;
                            }
                        }
                    }
                }
            }
            Shape::MapTopo | Shape::MapCotopo | Shape::MapDito => {
                'outer: for i in 0..nc {
                    for j in 0..nc {
                        let side =
                            |c: usize| -> Vec<(Option<SoftTopology>, Option<SoftCotopology>)> {
                                let ts: Vec<Option<SoftTopology>> = if shape == Shape::MapCotopo {
                                    vec![None]
                                } else {
                                    self.topologies(c).iter().cloned().map(Some).collect()
                                };
                                let ks: Vec<Option<SoftCotopology>> = if shape == Shape::MapTopo {
                                    vec![None]
                                } else {
                                    self.cotopologies(c).iter().cloned().map(Some).collect()
                                };
                                ts.iter()
                                    .flat_map(|t| ks.iter().map(move |k| (t.clone(), k.clone())))
                                    .collect()
                            };
                        let (left, right) = (side(i), side(j));
                        for m in enumerate_maps(&self.ctxs[i].ctx, &self.ctxs[j].ctx) {
                            for (t1, k1) in &left {
                                for (t2, k2) in &right {
                                    let inst = Instance {
                                        topologies: t1.iter().chain(t2).cloned().collect(),
                                        cotopologies: k1.iter().chain(k2).cloned().collect(),
                                        maps: vec![m.clone()],
                                        sets: vec![],
                                    };
                                    if let Flow::Stop = step(inst)? {
                                        break 'outer;
                                    }
                                }
                            }
                        }
                    }
                }
            }
            Shape::MapChain | Shape::MapChainTopo | Shape::MapChainCotopo => {
                'outer: for i in 0..nc {
                    for j in 0..nc {
                        for l in 0..nc {
                            let fs = enumerate_maps(&self.ctxs[i].ctx, &self.ctxs[j].ctx);
                            let gs = enumerate_maps(&self.ctxs[j].ctx, &self.ctxs[l].ctx);
                            for f in &fs {
                                for g in &gs {
                                    let maps = vec![f.clone(), g.clone()];
                                    let flow = match shape {
                                        Shape::MapChain => {
                                            tuples(&self.ctxs[l].sets, 1, &mut |sets| {
                                                step(Instance {
                                                    sets,
                                                    maps: maps.clone(),
                                                    ..Default::default()
                                                })
                                            })?
                                        }
                                        Shape::MapChainTopo => triples(
                                            self.topologies(i),
                                            self.topologies(j),
                                            self.topologies(l),
                                            &mut |t| {
                                                step(Instance {
                                                    topologies: t,
                                                    maps: maps.clone(),
                                                    ..Default::default()
                                                })
                                            },
                                        )?,
                                        _ => triples(
                                            self.cotopologies(i),
                                            self.cotopologies(j),
                                            self.cotopologies(l),
                                            &mut |k| {
                                                step(Instance {
                                                    cotopologies: k,
                                                    maps: maps.clone(),
                                                    ..Default::default()
                                                })
                                            },
                                        )?,
                                    };
                                    if let Flow::Stop = flow {
                                        break 'outer;
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok((n, capped))
    }
}

/// Every `k`-tuple of `items` (with repetition) in lexicographic order.
fn tuples<T: Clone>(
    items: &[T],
    k: usize,
    f: &mut dyn FnMut(Vec<T>) -> Result<Flow>,
) -> Result<Flow> {
    let mut idx = vec![0usize; k];
    if k > 0 && items.is_empty() {
        return Ok(Flow::Continue);
    }
    loop {
        if let Flow::Stop = f(idx.iter().map(|&i| items[i].clone()).collect())? {
            return Ok(Flow::Stop);
        }
        let mut pos = k;
        loop {
            if pos == 0 {
                return Ok(Flow::Continue);
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < items.len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}

fn triples<T: Clone>(
    a: &[T],
    b: &[T],
    c: &[T],
    f: &mut dyn FnMut(Vec<T>) -> Result<Flow>,
) -> Result<Flow> {
    for x in a {
        for y in b {
            for z in c {
                if let Flow::Stop = f(vec![x.clone(), y.clone(), z.clone()])? {
                    return Ok(Flow::Stop);
                }
            }
        }
    }
    Ok(Flow::Continue)
}

/// Evaluates one property over the catalog.
pub fn run_property(catalog: &Catalog, p: &Property) -> Result<TheoremReport> {
    let mut witness: Option<Instance> = None;
    let mut hits = 0u64;
    let mut tallied = 0u64;
    let stop_at_first = p.kind == PropertyKind::Claim;
    let (instances, capped) = catalog.visit(p.shape, &mut |inst| {
        if let Some(t) = p.tally {
            if t(&inst)? {
                tallied += 1;
            }
        }
        if (p.check)(&inst)? {
            hits += 1;
            if witness.is_none() {
                witness = Some(inst);
            }
            if stop_at_first {
                return Ok(Flow::Stop);
            }
        }
        Ok(Flow::Continue)
    })?;
    let witness = witness.map(|w| Witness::new(p.id, &w)).transpose()?;
    let mut notes: Vec<String> = Vec::new();
    let status = match (p.kind, &witness) {
        (PropertyKind::Claim, Some(_)) => Status::Counterexample,
        (PropertyKind::Claim, None) => {
            notes.push(format!("no witness within bounds {}", catalog.bounds()));
            Status::DiscrepancyLogged
        }
        (_, None) => Status::Verified,
        (PropertyKind::Law, Some(_)) => {
            notes.push(format!("violated on {hits} of {instances} instances"));
            Status::DiscrepancyLogged
        }
        (PropertyKind::Reading, Some(_)) => {
            notes.push(format!(
                "readings disagree on {hits} of {instances} instances"
            ));
            Status::DiscrepancyLogged
        }
    };
    if let (Some(label), true) = (p.tally_label, p.tally.is_some()) {
        notes.push(format!("{label}: {tallied} of {instances} instances"));
    }
    if let Some(n) = p.note {
        if status != Status::Verified || p.kind == PropertyKind::Law {
            notes.push(n.to_string());
        }
    }
    if capped {
        notes.push(format!(
            "search stopped at the instance cap of {}",
            catalog.bounds().instance_cap
        ));
    }
    Ok(TheoremReport {
        id: p.id.to_string(),
        anchor: p.anchor.to_string(),
        kind: p.kind,
        instances,
        status,
        witness,
        note: if notes.is_empty() {
            None
        } else {
            Some(notes.join("; "))
        },
    })
}

/// One report per registered property, in registry order.
pub fn run_theorem_suite(bounds: EnumBounds) -> Result<Vec<TheoremReport>> {
    run_properties(bounds, &properties())
}

/// One report per property of `props`, in order. An existence claim with a
/// floor above `bounds` is searched within `bounds` joined with the floor,
/// and the report says so.
pub fn run_properties(bounds: EnumBounds, props: &[Property]) -> Result<Vec<TheoremReport>> {
    let base = Catalog::new(bounds)?;
    let mut wider: Vec<(EnumBounds, Catalog)> = Vec::new();
    let mut out = Vec::new();
    for p in props {
        let floor = p.floor.map(|(u, e)| EnumBounds {
            max_universe: u,
            max_params: e,
            ..bounds
        });
        let report = match floor {
            Some(fl) if !bounds.contains(fl) => {
                let b = bounds.join(fl);
                if !wider.iter().any(|(wb, _)| *wb == b) {
                    wider.push((b, Catalog::new(b)?));
                }
                let cat = &wider
                    .iter()
                    .find(|(wb, _)| *wb == b)
                    .expect("just inserted")
                    .1;
                let mut r = run_property(cat, p)?;
                let n = format!(
                    "searched at bounds {b}: a witness needs |U| >= {} and |E| >= {}",
                    fl.max_universe, fl.max_params
                );
                r.note = Some(r.note.map_or(n.clone(), |o| format!("{n}; {o}")));
                r
            }
            _ => run_property(&base, p)?,
        };
        out.push(report);
    }
    Ok(out)
}

/// The smallest witness of a registered property within `bounds`.
pub fn find_counterexample(id: &str, bounds: EnumBounds) -> Result<Option<Witness>> {
    let p = property(id)?;
    let catalog = Catalog::new(bounds)?;
    let mut found = None;
    catalog.visit(p.shape, &mut |inst| {
        if (p.check)(&inst)? {
            found = Some(inst);
            return Ok(Flow::Stop);
        }
        Ok(Flow::Continue)
    })?;
    found.map(|w| Witness::new(id, &w)).transpose()
}
