//! Soft cotopologies: closed sets, remote neighborhoods, closure, adherence
//! and accumulation points, κ-continuity, closed maps and κ-separation.
//!
//! A cotopology is independent of any topology; nothing here is obtained
//! by complementing open sets.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::bits::{ParamSet, PointSet};
use crate::error::{Result, SoftError};
use crate::family::{Family, Validation};
use crate::map::SoftMap;
use crate::separation::{
    cover_on, disjoint_on, point_pairs, Axiom, AxiomOutcome, AxiomWitness, DomainScope,
};
use crate::soft::{ensure_same, Context, SoftPoint, SoftSet};

/// A soft cotopology `κ`. The null sets, `Ũ_E` and paddings of listed
/// members are members without being listed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SoftCotopology {
    family: Family,
}

pub fn check_cotopology(ctx: &Arc<Context>, members: &[SoftSet]) -> Result<Validation> {
    Family::validate(ctx, members)
}

impl SoftCotopology {
    pub fn new(ctx: &Arc<Context>, members: Vec<SoftSet>) -> Result<SoftCotopology> {
        let report = check_cotopology(ctx, &members)?;
        if let Some(v) = report.violations.first() {
            return Err(SoftError::NotClosed(format!(
                "not a soft cotopology ({} violations), e.g. {v}",
                report.violations.len()
            )));
        }
        Ok(SoftCotopology {
            family: Family::normalized(ctx, members),
        })
    }

    /// Takes `members` as listed, without checking closure; see
    /// [`SoftTopology::from_members_unchecked`](crate::topo::SoftTopology::from_members_unchecked).
    pub fn from_members_unchecked(
        ctx: &Arc<Context>,
        members: Vec<SoftSet>,
    ) -> Result<SoftCotopology> {
        Family::check_context(ctx, &members)?;
        Ok(SoftCotopology {
            family: Family::normalized(ctx, members),
        })
    }

    pub fn generated(ctx: &Arc<Context>, gens: Vec<SoftSet>) -> SoftCotopology {
        SoftCotopology {
            family: Family::generated(ctx, gens),
        }
    }

    pub fn indiscrete(ctx: &Arc<Context>) -> SoftCotopology {
        SoftCotopology {
            family: Family::normalized(ctx, []),
        }
    }

    pub fn context(&self) -> &Arc<Context> {
        self.family.context()
    }

    pub fn members(&self) -> &[SoftSet] {
        self.family.members()
    }

    pub fn is_closed(&self, f: &SoftSet) -> bool {
        self.family.contains(f)
    }

    pub fn contains(&self, f: &SoftSet) -> bool {
        self.family.contains(f)
    }

    pub fn all_members(&self) -> Result<Vec<SoftSet>> {
        self.family.materialize()
    }

    pub fn includes(&self, other: &SoftCotopology) -> bool {
        self.family.includes(&other.family)
    }

    pub fn intersection(&self, other: &SoftCotopology) -> Result<SoftCotopology> {
        let fam = self.family.intersection(&other.family)?;
        SoftCotopology::new(self.context(), fam.members().to_vec())
    }

    pub fn closed_with_domain(&self, a: ParamSet) -> Vec<SoftSet> {
        self.family.members_with_domain(a)
    }

    /// `M` is a remote neighborhood of `p`: some closed `K` has
    /// `p ∉̃ K ⊇̃ M`.
    pub fn is_remote_nbhd(&self, m: &SoftSet, p: &SoftPoint) -> bool {
        // a wider padding of K can only add parameters where p fails anyway
        self.family.minimal_supersets(m).iter().any(|k| !p.is_in(k))
    }

    /// `S` is a remote neighborhood of `F`: some closed `K ⊇̃ S` with
    /// `F ⊄̃ K`.
    pub fn is_remote_nbhd_of_set(&self, s: &SoftSet, f: &SoftSet) -> bool {
        self.family
            .minimal_supersets(s)
            .iter()
            .any(|k| !f.is_subset(k))
    }

    /// `cl F`: the intersection of every closed set containing `F`. The
    /// domain is that intersection's domain, which may exceed `dom F`.
    pub fn closure(&self, f: &SoftSet) -> Result<SoftSet> {
        ensure_same(self.context(), f.context())?;
        crate::soft::intersect(&self.family.minimal_supersets(f))
    }

    /// Closed sets `K` with `a ⊆ dom K`, restricted to `a`: the largest
    /// remote-neighborhood candidates with domain `a`, paired with the full
    /// closed set they come from.
    fn covering_closed(&self, a: ParamSet) -> Vec<SoftSet> {
        let mut out = BTreeSet::new();
        out.insert(SoftSet::null(self.context(), a).expect("domain from same context"));
        for core in self.family.cores() {
            out.insert(core.pad(a.difference(core.domain())));
        }
        out.into_iter().collect()
    }

    /// Points `x` such that `x_A` (with `A = dom F`) is a soft adherence
    /// point of `F`: no remote neighborhood `M_A` of `x_A` has
    /// `M_A ∪̃ F^c = Ũ_A`.
    pub fn adherence_points(&self, f: &SoftSet) -> Result<Vec<SoftPoint>> {
        ensure_same(self.context(), f.context())?;
        let a = f.domain();
        if a.is_empty() {
            return Ok(Vec::new());
        }
        let fc = f.complement();
        let closed = self.covering_closed(a);
        Ok(SoftPoint::all_at(self.context(), a)
            .filter(|p| {
                !closed
                    .iter()
                    .filter(|k| !p.is_in(k))
                    .any(|k| k.restrict(a).join(&fc).is_whole_on(a))
            })
            .collect())
    }

    /// `F'`: the union of the soft points `x_A` that are accumulation points
    /// of `F`, or `φ_A` when there are none.
    pub fn accumulation(&self, f: &SoftSet) -> Result<SoftSet> {
        ensure_same(self.context(), f.context())?;
        let a = f.domain();
        let empty = SoftSet::null(self.context(), a)?;
        if a.is_empty() {
            return Ok(empty);
        }
        let fc = f.complement();
        let closed = self.covering_closed(a);
        let mut out = empty;
        for p in SoftPoint::all_at(self.context(), a) {
            let xa = p.to_soft_set();
            let accumulates = !closed
                .iter()
                .filter(|k| !p.is_in(k))
                .any(|k| k.restrict(a).join(&xa).join(&fc).is_whole_on(a));
            if accumulates {
                out = out.join(&xa);
            }
        }
        Ok(out)
    }

    /// Closed sets `K` with `a ⊆ dom K`, one per core, padded minimally.
    fn strong_candidates(&self, a: ParamSet) -> Vec<SoftSet> {
        self.covering_closed(a)
    }

    /// `S` is a strong remote neighborhood of `p = x_A`: some closed `K_C`
    /// with `A ⊆ C ⊆ dom S` has `x ∉ K(e) ⊇ S(e)` for every `e ∈ C`.
    pub fn is_strong_remote_nbhd(&self, s: &SoftSet, p: &SoftPoint) -> bool {
        let a = p.domain();
        if !a.is_subset(s.domain()) {
            return false;
        }
        self.strong_candidates(a)
            .iter()
            .filter(|k| k.domain().is_subset(s.domain()))
            .any(|k| {
                k.entries()
                    .all(|(e, v)| !v.contains(p.point()) && s.raw(e).is_subset(v))
            })
    }

    /// `S` is a strong remote neighborhood of `F_A`: some closed `K_C` with
    /// `A ⊆ C ⊆ dom S` has `S(e) ⊆ K(e)` for `e ∈ C` and `F(e) ⊄ K(e)` for
    /// every `e ∈ A`.
    pub fn is_strong_remote_nbhd_of_set(&self, s: &SoftSet, f: &SoftSet) -> bool {
        let a = f.domain();
        if !a.is_subset(s.domain()) {
            return false;
        }
        self.strong_candidates(a)
            .iter()
            .filter(|k| k.domain().is_subset(s.domain()))
            .any(|k| {
                k.entries().all(|(e, v)| s.raw(e).is_subset(v))
                    && a.iter().all(|e| !f.raw(e).is_subset(k.raw(e)))
            })
    }

    /// Largest strong remote neighborhoods of `x_A` on `A`.
    fn strong_nbhds_of_point(&self, p: &SoftPoint) -> Vec<SoftSet> {
        self.strong_candidates(p.domain())
            .into_iter()
            .filter(|k| k.entries().all(|(_, v)| !v.contains(p.point())))
            .collect()
    }

    fn strong_nbhds_of_set(&self, f: &SoftSet) -> Vec<SoftSet> {
        let a = f.domain();
        self.strong_candidates(a)
            .into_iter()
            .filter(|k| a.iter().all(|e| !f.raw(e).is_subset(k.raw(e))))
            .collect()
    }

    pub fn slice_at_parameter(&self, e: usize) -> Result<BTreeSet<PointSet>> {
        self.family.slice(e)
    }

    pub fn check_axiom(&self, axiom: Axiom, scope: DomainScope) -> Result<AxiomOutcome> {
        Ok(match axiom {
            Axiom::T0 => {
                AxiomOutcome::from_search(axiom, self.points_failing(scope, |a, b| a || b)?)
            }
            Axiom::T1 => {
                AxiomOutcome::from_search(axiom, self.points_failing(scope, |a, b| a && b)?)
            }
            Axiom::T2 => {
                let w = point_pairs(self.context(), scope)?
                    .into_iter()
                    .find(|(x, y)| {
                        let sx = self.strong_nbhds_of_point(x);
                        let sy = self.strong_nbhds_of_point(y);
                        !sx.iter()
                            .any(|s| sy.iter().any(|t| cover_on(s, t, x.domain())))
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

    /// Some remote neighborhood of `x_A` contains `y_A`; equivalently some
    /// closed set contains `y_A` but not `x_A`.
    fn remote_separates(&self, x: &SoftPoint, y: &SoftPoint) -> bool {
        self.family
            .minimal_supersets(&y.to_soft_set())
            .iter()
            .any(|k| !x.is_in(k))
    }

    fn points_failing(
        &self,
        scope: DomainScope,
        combine: fn(bool, bool) -> bool,
    ) -> Result<Option<AxiomWitness>> {
        Ok(point_pairs(self.context(), scope)?
            .into_iter()
            .find(|(x, y)| !combine(self.remote_separates(x, y), self.remote_separates(y, x)))
            .map(|(first, second)| AxiomWitness::Points { first, second }))
    }

    fn regular_failure(&self, scope: DomainScope) -> Result<Option<AxiomWitness>> {
        let ctx = self.context();
        for a in scope.domains(ctx)? {
            for k in self
                .closed_with_domain(a)
                .into_iter()
                .filter(|k| !k.is_null())
            {
                let ts = self.strong_nbhds_of_set(&k);
                for p in SoftPoint::all_at(ctx, a).filter(|p| !p.is_in(&k)) {
                    let ss = self.strong_nbhds_of_point(&p);
                    if !ss.iter().any(|s| ts.iter().any(|t| cover_on(s, t, a))) {
                        return Ok(Some(AxiomWitness::PointAndSet { point: p, set: k }));
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
                .closed_with_domain(a)
                .into_iter()
                .filter(|k| !k.is_null())
                .collect();
            for (i, k) in closed.iter().enumerate() {
                for l in &closed[i..] {
                    if !disjoint_on(k, l, a) {
                        continue;
                    }
                    let ss = self.strong_nbhds_of_set(k);
                    let ts = self.strong_nbhds_of_set(l);
                    if !ss.iter().any(|s| ts.iter().any(|t| cover_on(s, t, a))) {
                        return Ok(Some(AxiomWitness::Sets {
                            first: k.clone(),
                            second: l.clone(),
                        }));
                    }
                }
            }
        }
        Ok(None)
    }
}

impl SoftSet {
    /// Defined on all of `a` with value `U` there.
    pub(crate) fn is_whole_on(&self, a: ParamSet) -> bool {
        let all = self.context().all_points();
        a.iter().all(|e| self.value(e) == Some(all))
    }
}

/// A closed member of the target whose preimage is not closed. Listed
/// members and `Ũ_E` suffice for the same reason as in the open case.
pub fn kappa_continuity_witness(
    f: &SoftMap,
    source: &SoftCotopology,
    target: &SoftCotopology,
) -> Result<Option<SoftSet>> {
    ensure_same(f.source(), source.context())?;
    ensure_same(f.target(), target.context())?;
    for k in target.family.cores() {
        if !source.is_closed(&f.preimage(&k)?) {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

/// Preimages of closed sets are closed.
pub fn is_kappa_continuous(
    f: &SoftMap,
    source: &SoftCotopology,
    target: &SoftCotopology,
) -> Result<bool> {
    Ok(kappa_continuity_witness(f, source, target)?.is_none())
}

/// Images of closed sets are closed.
pub fn is_closed_map(
    f: &SoftMap,
    source: &SoftCotopology,
    target: &SoftCotopology,
) -> Result<bool> {
    ensure_same(f.source(), source.context())?;
    ensure_same(f.target(), target.context())?;
    for k in source.family.cores() {
        if !target.is_closed(&f.image(&k)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(c: &Arc<Context>, entries: &[(&str, &[&str])]) -> SoftSet {
        SoftSet::from_labels(c, entries).unwrap()
    }

    fn p4_source() -> SoftCotopology {
        let c = Context::new("U", ["a", "c"], ["e1", "e2"]).unwrap();
        let k = s(&c, &[("e1", &["c"]), ("e2", &["c"])]);
        SoftCotopology::new(&c, vec![k]).unwrap()
    }

    fn pt(k: &SoftCotopology, x: &str) -> SoftPoint {
        let c = k.context();
        SoftPoint::new(c, c.point_index(x).unwrap(), c.all_params()).unwrap()
    }

    #[test]
    fn validation() {
        let c = Context::new("C", ["x", "y"], ["e1"]).unwrap();
        let x = s(&c, &[("e1", &["x"])]);
        let y = s(&c, &[("e1", &["y"])]);
        assert!(check_cotopology(&c, &[]).unwrap().is_ok());
        // x ∪ y = Ũ_E and x ∩ y = φ, so the pair is already closed
        assert!(check_cotopology(&c, &[x.clone(), y]).unwrap().is_ok());
        let c2 = Context::new("C", ["x", "y", "z"], ["e1"]).unwrap();
        let k = s(&c2, &[("e1", &["x"])]);
        let l = s(&c2, &[("e1", &["y"])]);
        let report = check_cotopology(&c2, &[k, l]).unwrap();
        assert_eq!(report.violations.len(), 1);
        assert_eq!(report.violations[0].op, crate::family::BinaryOp::Union);
        let _ = x;
    }

    #[test]
    fn remote_neighborhoods() {
        let kappa = p4_source();
        let c = kappa.context().clone();
        let a = pt(&kappa, "a");
        let k = s(&c, &[("e1", &["c"]), ("e2", &["c"])]);
        assert!(kappa.is_remote_nbhd(&SoftSet::null_all(&c), &a));
        assert!(kappa.is_remote_nbhd(&k, &a));
        assert!(!kappa.is_remote_nbhd(&k, &pt(&kappa, "c")));
        let smaller = s(&c, &[("e1", &["c"])]);
        assert!(kappa.is_remote_nbhd(&smaller, &a));
        assert!(kappa.is_remote_nbhd_of_set(&k, &SoftSet::whole(&c, c.all_params()).unwrap()));
        assert!(
            !kappa.is_remote_nbhd_of_set(&k, &SoftSet::whole_all(&c))
                || !SoftSet::whole_all(&c).is_subset(&k)
        );
        assert!(!kappa.is_remote_nbhd_of_set(&SoftSet::whole_all(&c), &SoftSet::whole_all(&c)));
    }

    #[test]
    fn closure_examples() {
        let kappa = p4_source();
        let c = kappa.context().clone();
        let phi = SoftSet::null(&c, c.param_set(&["e1"]).unwrap()).unwrap();
        assert_eq!(kappa.closure(&phi).unwrap(), phi);
        assert_eq!(
            kappa.closure(&SoftSet::whole_all(&c)).unwrap(),
            SoftSet::whole_all(&c)
        );
        let f = s(&c, &[("e1", &["c"]), ("e2", &[])]);
        assert_eq!(
            kappa.closure(&f).unwrap(),
            s(&c, &[("e1", &["c"]), ("e2", &["c"])])
        );
        // the only closed set above {e1: {c}} has domain {e1, e2}
        let g = s(&c, &[("e1", &["c"])]);
        assert_eq!(kappa.closure(&g).unwrap().domain(), c.all_params());
    }

    #[test]
    fn adherence_and_accumulation() {
        let kappa = p4_source();
        let c = kappa.context().clone();
        let f = s(&c, &[("e1", &["c"]), ("e2", &[])]);
        let adh: Vec<&str> = kappa
            .adherence_points(&f)
            .unwrap()
            .iter()
            .map(|p| c.point_label(p.point()))
            .collect();
        assert_eq!(adh, ["c"]);
        let whole = SoftSet::whole(&c, c.all_params()).unwrap();
        assert_eq!(kappa.adherence_points(&whole).unwrap().len(), 2);
        // c_A lies in F only at e1, so φ_A is a remote neighborhood with
        // (φ_A ∪̃ c_A) ∪̃ F^c = Ũ_A and F ∪̃ F' = F is not closed
        let acc = kappa.accumulation(&f).unwrap();
        assert!(acc.is_null());
        assert_ne!(f.join(&acc), kappa.closure(&f).unwrap());
        let g = s(&c, &[("e1", &["c"]), ("e2", &["c"])]);
        assert!(kappa.accumulation(&g).unwrap().is_subset(&g));
    }

    #[test]
    fn strong_remote() {
        let kappa = p4_source();
        let c = kappa.context().clone();
        let k = s(&c, &[("e1", &["c"]), ("e2", &["c"])]);
        let a = pt(&kappa, "a");
        assert!(kappa.is_strong_remote_nbhd(&k, &a));
        assert!(!kappa.is_strong_remote_nbhd(&k, &pt(&kappa, "c")));
        assert!(kappa.is_strong_remote_nbhd(&SoftSet::null(&c, c.all_params()).unwrap(), &a));
        let xa = a.to_soft_set();
        assert!(kappa.is_strong_remote_nbhd_of_set(&k, &xa));
    }

    #[test]
    fn p4_source_separation() {
        let kappa = p4_source();
        let c = kappa.context().clone();
        let scope = DomainScope::Fixed(c.all_params());
        assert!(kappa.check_axiom(Axiom::T0, scope).unwrap().holds);
        let t1 = kappa.check_axiom(Axiom::T1, scope).unwrap();
        assert!(!t1.holds);
        assert!(matches!(t1.witness, Some(AxiomWitness::Points { .. })));
        assert!(!kappa.check_axiom(Axiom::T2, scope).unwrap().holds);
    }

    #[test]
    fn point_closed_cotopology_is_t1() {
        let c = Context::new("C", ["x", "y"], ["e"]).unwrap();
        let x = s(&c, &[("e", &["x"])]);
        let y = s(&c, &[("e", &["y"])]);
        let kappa = SoftCotopology::new(&c, vec![x, y]).unwrap();
        for ax in [Axiom::T0, Axiom::T1, Axiom::T2] {
            assert!(
                kappa.check_axiom(ax, DomainScope::All).unwrap().holds,
                "{ax}"
            );
        }
    }

    #[test]
    fn slices() {
        let kappa = p4_source();
        let c = kappa.context().clone();
        for e in 0..2 {
            let sl: Vec<_> = kappa.slice_at_parameter(e).unwrap().into_iter().collect();
            assert_eq!(
                sl,
                vec![
                    PointSet::EMPTY,
                    c.point_set(&["c"]).unwrap(),
                    c.all_points()
                ]
            );
        }
        assert!(kappa.slice_at_parameter(2).is_err());
    }

    #[test]
    fn p4_map_is_kappa_continuous() {
        let u = Context::new("U", ["a", "c"], ["e1", "e2"]).unwrap();
        let v = Context::new("V", ["1", "2"], ["p1", "p2"]).unwrap();
        let k1 = SoftCotopology::new(&u, vec![s(&u, &[("e1", &["c"]), ("e2", &["c"])])]).unwrap();
        let k2 =
            SoftCotopology::new(&v, vec![s(&v, &[("p1", &["1", "2"]), ("p2", &["2"])])]).unwrap();
        let f = SoftMap::from_labels(
            &u,
            &v,
            &[("a", "1"), ("c", "2")],
            &[("e1", "p2"), ("e2", "p2")],
        )
        .unwrap();
        assert!(is_kappa_continuous(&f, &k1, &k2).unwrap());
        let id = SoftMap::identity(&u);
        assert!(is_kappa_continuous(&id, &k1, &SoftCotopology::indiscrete(&u)).unwrap());
        assert!(is_closed_map(&id, &SoftCotopology::indiscrete(&u), &k1).unwrap());
    }
}
