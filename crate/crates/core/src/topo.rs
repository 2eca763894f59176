//! Soft topologies: open sets, interior, neighborhoods, τ-continuity, open
//! maps and τ-separation axioms.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::bits::{ParamSet, PointSet};
use crate::error::{Result, SoftError};
use crate::family::{Family, Validation};
use crate::map::SoftMap;
use crate::separation::{disjoint_on, point_pairs, Axiom, AxiomOutcome, AxiomWitness, DomainScope};
use crate::soft::{ensure_same, Context, SoftPoint, SoftSet};

/// A soft topology `τ`. The null sets, `Ũ_E` and paddings of listed members
/// are members without being listed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SoftTopology {
    family: Family,
}

/// Checks both closure axioms for `members` plus the implicit members.
pub fn check_topology(ctx: &Arc<Context>, members: &[SoftSet]) -> Result<Validation> {
    Family::validate(ctx, members)
}

impl SoftTopology {
    /// Validates and builds; fails with the first violation if the family
    /// is not closed.
    pub fn new(ctx: &Arc<Context>, members: Vec<SoftSet>) -> Result<SoftTopology> {
        let report = check_topology(ctx, &members)?;
        if let Some(v) = report.violations.first() {
            return Err(SoftError::NotClosed(format!(
                "not a soft topology ({} violations), e.g. {v}",
                report.violations.len()
            )));
        }
        Ok(SoftTopology {
            family: Family::normalized(ctx, members),
        })
    }

    /// Takes `members` as listed, without checking closure. Axiom checks
    /// then see exactly these members plus the implicit ones; operators
    /// that assume closure (interior, continuity) are meaningless.
    pub fn from_members_unchecked(
        ctx: &Arc<Context>,
        members: Vec<SoftSet>,
    ) -> Result<SoftTopology> {
        Family::check_context(ctx, &members)?;
        Ok(SoftTopology {
            family: Family::normalized(ctx, members),
        })
    }

    /// The smallest soft topology containing `gens`.
    pub fn generated(ctx: &Arc<Context>, gens: Vec<SoftSet>) -> SoftTopology {
        SoftTopology {
            family: Family::generated(ctx, gens),
        }
    }

    /// Only the implicit members.
    pub fn indiscrete(ctx: &Arc<Context>) -> SoftTopology {
        SoftTopology {
            family: Family::normalized(ctx, []),
        }
    }

    pub fn context(&self) -> &Arc<Context> {
        self.family.context()
    }

    /// Listed members in canonical order, implicit members excluded.
    pub fn members(&self) -> &[SoftSet] {
        self.family.members()
    }

    pub fn is_open(&self, f: &SoftSet) -> bool {
        self.family.contains(f)
    }

    /// Every member, implicit ones included. Needs a small parameter set.
    pub fn all_members(&self) -> Result<Vec<SoftSet>> {
        self.family.materialize()
    }

    /// `τ₂ ⊆ τ₁` read as `self ⊇ other`.
    pub fn includes(&self, other: &SoftTopology) -> bool {
        self.family.includes(&other.family)
    }

    /// `τ₁ ∩ τ₂`, validated as a topology.
    pub fn intersection(&self, other: &SoftTopology) -> Result<SoftTopology> {
        let fam = self.family.intersection(&other.family)?;
        SoftTopology::new(self.context(), fam.members().to_vec())
    }

    /// `int F`: the union of all open sets `⊆̃ F`.
    pub fn interior(&self, f: &SoftSet) -> Result<SoftSet> {
        ensure_same(self.context(), f.context())?;
        crate::soft::union(&self.family.maximal_subsets(f))
    }

    /// `G` is a τ-neighborhood of `p`: some open `H` has `p ∈̃ H ⊆̃ G`.
    pub fn is_nbhd_of_point(&self, g: &SoftSet, p: &SoftPoint) -> bool {
        // paddings never contain a point on a padded parameter, so the
        // listed members and Ũ_E are the only candidates
        self.family
            .cores()
            .iter()
            .any(|h| p.is_in(h) && h.is_subset(g))
    }

    /// `G` is a τ-neighborhood of `F`: some open `H` has `F ⊆̃ H ⊆̃ G`.
    pub fn is_nbhd_of_set(&self, g: &SoftSet, f: &SoftSet) -> bool {
        self.family
            .minimal_supersets(f)
            .iter()
            .any(|h| h.is_subset(g))
    }

    /// Open sets containing `p`, up to padding.
    pub(crate) fn open_cores_containing(&self, p: &SoftPoint) -> Vec<SoftSet> {
        self.family
            .cores()
            .into_iter()
            .filter(|h| p.is_in(h))
            .collect()
    }

    pub(crate) fn minimal_open_supersets(&self, f: &SoftSet) -> Vec<SoftSet> {
        self.family.minimal_supersets(f)
    }

    /// Open sets with domain exactly `a`.
    pub fn opens_with_domain(&self, a: ParamSet) -> Vec<SoftSet> {
        self.family.members_with_domain(a)
    }

    /// `τ(e) = { F(e) : F ∈ τ, e ∈ dom F }`.
    pub fn slice_at_parameter(&self, e: usize) -> Result<BTreeSet<PointSet>> {
        self.family.slice(e)
    }

    pub fn check_axiom(&self, axiom: Axiom, scope: DomainScope) -> Result<AxiomOutcome> {
        let ctx = self.context().clone();
        Ok(match axiom {
            Axiom::T0 => {
                AxiomOutcome::from_search(axiom, self.points_failing(scope, |a, b| a || b)?)
            }
            Axiom::T1 => {
                AxiomOutcome::from_search(axiom, self.points_failing(scope, |a, b| a && b)?)
            }
            Axiom::T2 => {
                let w = point_pairs(&ctx, scope)?.into_iter().find(|(x, y)| {
                    let hx = self.open_cores_containing(x);
                    let hy = self.open_cores_containing(y);
                    !hx.iter()
                        .any(|g| hy.iter().any(|h| disjoint_on(g, h, x.domain())))
                });
                AxiomOutcome::from_search(
                    axiom,
                    w.map(|(first, second)| AxiomWitness::Points { first, second }),
                )
            }
            Axiom::Regular => AxiomOutcome::from_search(axiom, self.regular_failure(scope)?),
            Axiom::Normal => AxiomOutcome::from_search(axiom, self.normal_failure(scope)?),
            Axiom::T3 => self.conjunction(Axiom::T3, Axiom::Regular, scope)?,
            Axiom::T4 => self.conjunction(Axiom::T4, Axiom::Normal, scope)?,
        })
    }

    fn conjunction(&self, name: Axiom, base: Axiom, scope: DomainScope) -> Result<AxiomOutcome> {
        let first = self.check_axiom(base, scope)?;
        if !first.holds {
            return Ok(first.relabeled(name));
        }
        Ok(self.check_axiom(Axiom::T1, scope)?.relabeled(name))
    }

    /// `x` can be separated from `y`: an open set contains `x_A` but not `y_A`.
    fn separates(&self, x: &SoftPoint, y: &SoftPoint) -> bool {
        self.open_cores_containing(x).iter().any(|h| !y.is_in(h))
    }

    fn points_failing(
        &self,
        scope: DomainScope,
        combine: fn(bool, bool) -> bool,
    ) -> Result<Option<AxiomWitness>> {
        Ok(point_pairs(self.context(), scope)?
            .into_iter()
            .find(|(x, y)| !combine(self.separates(x, y), self.separates(y, x)))
            .map(|(first, second)| AxiomWitness::Points { first, second }))
    }

    fn regular_failure(&self, scope: DomainScope) -> Result<Option<AxiomWitness>> {
        let ctx = self.context();
        let null_e = SoftSet::null_all(ctx);
        for a in scope.domains(ctx)? {
            for open in self.opens_with_domain(a) {
                let closed = open.complement();
                if closed == null_e {
                    continue;
                }
                let nbhds_of_set = self.minimal_open_supersets(&closed);
                for p in SoftPoint::all_at(ctx, a).filter(|p| p.is_in(&open)) {
                    let ok = self
                        .open_cores_containing(&p)
                        .iter()
                        .any(|g| nbhds_of_set.iter().any(|h| disjoint_on(g, h, a)));
                    if !ok {
                        return Ok(Some(AxiomWitness::PointAndSet {
                            point: p,
                            set: closed,
                        }));
                    }
                }
            }
        }
        Ok(None)
    }

    fn normal_failure(&self, scope: DomainScope) -> Result<Option<AxiomWitness>> {
        let ctx = self.context();
        for a in scope.domains(ctx)? {
            let closed: Vec<SoftSet> = self
                .opens_with_domain(a)
                .iter()
                .map(SoftSet::complement)
                .collect();
            for (i, f) in closed.iter().enumerate() {
                for g in &closed[i..] {
                    if !disjoint_on(f, g, a) {
                        continue;
                    }
                    let vs = self.minimal_open_supersets(f);
                    let ws = self.minimal_open_supersets(g);
                    if !vs.iter().any(|v| ws.iter().any(|w| disjoint_on(v, w, a))) {
                        return Ok(Some(AxiomWitness::Sets {
                            first: f.clone(),
                            second: g.clone(),
                        }));
                    }
                }
            }
        }
        Ok(None)
    }
}

/// An open member of the target whose preimage is not open. Checking
/// listed members and `Ũ_E` suffices: preimages of null sets are null and
/// the preimage of a padding is a padding of the preimage.
pub fn tau_continuity_witness(
    f: &SoftMap,
    source: &SoftTopology,
    target: &SoftTopology,
) -> Result<Option<SoftSet>> {
    ensure_same(f.source(), source.context())?;
    ensure_same(f.target(), target.context())?;
    for g in target.family.cores() {
        if !source.is_open(&f.preimage(&g)?) {
            return Ok(Some(g));
        }
    }
    Ok(None)
}

/// Preimages of open sets are open.
pub fn is_tau_continuous(
    f: &SoftMap,
    source: &SoftTopology,
    target: &SoftTopology,
) -> Result<bool> {
    Ok(tau_continuity_witness(f, source, target)?.is_none())
}

/// Images of open sets are open. Images of null sets are null and images
/// commute with padding, so the listed members and `Ũ_E` suffice.
pub fn is_open_map(f: &SoftMap, source: &SoftTopology, target: &SoftTopology) -> Result<bool> {
    ensure_same(f.source(), source.context())?;
    ensure_same(f.target(), target.context())?;
    for g in source.family.cores() {
        if !target.is_open(&f.image(&g)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::separation::AxiomWitness;

    fn s(c: &Arc<Context>, entries: &[(&str, &[&str])]) -> SoftSet {
        SoftSet::from_labels(c, entries).unwrap()
    }

    fn p1() -> SoftTopology {
        let c = Context::new("C1", ["x", "z"], ["e1", "e2", "e3", "e4"]).unwrap();
        let f = s(&c, &[("e1", &["x"]), ("e2", &["x", "z"])]);
        let g = s(&c, &[("e1", &["x"])]);
        SoftTopology::new(&c, vec![f, g]).unwrap()
    }

    fn e12(c: &Arc<Context>) -> ParamSet {
        c.param_set(&["e1", "e2"]).unwrap()
    }

    #[test]
    fn check_reports_missing_intersection() {
        let c = Context::new("C", ["x", "z"], ["e1", "e2"]).unwrap();
        let f = s(&c, &[("e1", &["x"]), ("e2", &["x"])]);
        let h = s(&c, &[("e1", &["x", "z"]), ("e2", &["z"])]);
        let report = check_topology(&c, &[f.clone(), h.clone()]).unwrap();
        assert!(!report.is_ok());
        let v = &report.violations[0];
        assert_eq!((&v.left, &v.right), (&f, &h));
        assert!(check_topology(&c, &[]).unwrap().is_ok());
        assert!(SoftTopology::new(&c, vec![f, h]).is_err());
    }

    #[test]
    fn interior_examples() {
        let t = p1();
        let c = t.context().clone();
        let whole = SoftSet::whole_all(&c);
        assert_eq!(t.interior(&whole).unwrap(), whole);
        let null = SoftSet::null(&c, e12(&c)).unwrap();
        assert_eq!(t.interior(&null).unwrap(), null);
        let h = s(&c, &[("e1", &["x"]), ("e2", &["x"])]);
        assert_eq!(
            t.interior(&h).unwrap(),
            s(&c, &[("e1", &["x"]), ("e2", &[])])
        );
    }

    #[test]
    fn openness() {
        let t = p1();
        let c = t.context().clone();
        let f = s(&c, &[("e1", &["x"]), ("e2", &["x", "z"])]);
        assert!(t.is_open(&SoftSet::whole_all(&c)));
        assert!(t.is_open(&f));
        assert!(!t.is_open(&f.complement()));
        for b in c.all_params().subsets() {
            assert!(t.is_open(&SoftSet::null(&c, b).unwrap()));
        }
        assert_eq!(t.interior(&f).unwrap(), f);
    }

    #[test]
    fn neighborhoods() {
        let t = p1();
        let c = t.context().clone();
        let a = e12(&c);
        let x = SoftPoint::new(&c, c.point_index("x").unwrap(), a).unwrap();
        let z = SoftPoint::new(&c, c.point_index("z").unwrap(), a).unwrap();
        let whole = SoftSet::whole_all(&c);
        let f = s(&c, &[("e1", &["x"]), ("e2", &["x", "z"])]);
        assert!(t.is_nbhd_of_point(&whole, &x));
        assert!(t.is_nbhd_of_point(&f, &x));
        assert!(!t.is_nbhd_of_point(&f, &z));
        assert!(t.is_nbhd_of_set(&whole, &f));
        assert!(t.is_nbhd_of_set(&f, &f));
        assert!(!t.is_nbhd_of_set(&f.complement(), &f.complement()));
    }

    #[test]
    fn slices() {
        let t = p1();
        let c = t.context().clone();
        let e1 = c.param_index("e1").unwrap();
        let e3 = c.param_index("e3").unwrap();
        let x = PointSet::singleton(c.point_index("x").unwrap());
        assert_eq!(
            t.slice_at_parameter(e1)
                .unwrap()
                .into_iter()
                .collect::<Vec<_>>(),
            vec![PointSet::EMPTY, x, c.all_points()]
        );
        assert_eq!(t.slice_at_parameter(e3).unwrap().len(), 2);
        assert!(t.slice_at_parameter(9).is_err());
    }

    #[test]
    fn p1_axioms_at_declared_domain() {
        let t = p1();
        let c = t.context().clone();
        let scope = DomainScope::Fixed(e12(&c));
        assert!(t.check_axiom(Axiom::T0, scope).unwrap().holds);
        let t1 = t.check_axiom(Axiom::T1, scope).unwrap();
        assert!(!t1.holds);
        match t1.witness.unwrap() {
            AxiomWitness::Points { first, second } => {
                assert_eq!(c.point_label(first.point()), "x");
                assert_eq!(c.point_label(second.point()), "z");
                assert_eq!(first.domain(), e12(&c));
            }
            w => panic!("unexpected witness {w}"),
        }
        // over every domain, e3 alone already breaks T0
        assert!(!t.check_axiom(Axiom::T0, DomainScope::All).unwrap().holds);
    }

    #[test]
    fn continuity_of_identity() {
        let t = p1();
        let c = t.context().clone();
        let id = SoftMap::identity(&c);
        let coarse = SoftTopology::indiscrete(&c);
        assert!(is_tau_continuous(&id, &t, &coarse).unwrap());
        assert!(!is_tau_continuous(&id, &coarse, &t).unwrap());
        assert!(is_open_map(&id, &coarse, &t).unwrap());
        assert!(!is_open_map(&id, &t, &coarse).unwrap());
        assert!(t.includes(&coarse));
    }
}
