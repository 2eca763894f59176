//! Finite families of soft sets with implicit members.
//!
//! Both soft topologies and soft cotopologies contain every null soft set
//! `φ_A` and `Ũ_E` without listing them. Because they are closed under
//! union, they also contain `M ∪̃ φ_B` for every listed member `M`: the
//! member extended by empty values on extra parameters (a *padding* of
//! `M`). Paddings commute with both binary operations:
//!
//! ```text
//! pad(F) ∪̃ pad(G) = pad(F ∪̃ G)      pad(F) ∩̃ pad(G) = pad(F ∩̃ G)
//! ```
//!
//! so a listed family that is closed under `∪̃`/`∩̃` modulo paddings, with
//! `Ũ_E` adjoined, generates a family satisfying both closure axioms
//! outright. Members are stored normalized: no null sets, no `Ũ_E`, and no
//! member that is a padding of another.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::bits::{ParamSet, PointSet};
use crate::error::{Result, SoftError};
use crate::soft::{ensure_same, same_context, Context, SoftSet};

/// Largest parameter count for which the implicit members are materialized.
pub const MAX_MATERIALIZED_PARAMS: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BinaryOp {
    Union,
    Intersection,
}

impl fmt::Display for BinaryOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BinaryOp::Union => "union",
            BinaryOp::Intersection => "intersection",
        })
    }
}

/// A pair of members whose union or intersection is missing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub left: SoftSet,
    pub right: SoftSet,
    pub op: BinaryOp,
    pub missing: SoftSet,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} of {} and {} is missing: {}",
            self.op, self.left, self.right, self.missing
        )
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Validation {
    pub violations: Vec<Violation>,
}

impl Validation {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Clone, PartialEq, Eq)]
pub(crate) struct Family {
    ctx: Arc<Context>,
    members: Vec<SoftSet>,
}

impl Family {
    pub(crate) fn normalized(
        ctx: &Arc<Context>,
        members: impl IntoIterator<Item = SoftSet>,
    ) -> Family {
        let set: BTreeSet<SoftSet> = members
            .into_iter()
            .filter(|m| !m.is_null() && !m.is_whole_all())
            .collect();
        let all: Vec<SoftSet> = set.into_iter().collect();
        let members = all
            .iter()
            .filter(|m| !all.iter().any(|core| core != *m && m.is_padding_of(core)))
            .cloned()
            .collect();
        Family {
            ctx: ctx.clone(),
            members,
        }
    }

    pub(crate) fn check_context(ctx: &Arc<Context>, members: &[SoftSet]) -> Result<()> {
        members
            .iter()
            .try_for_each(|m| ensure_same(ctx, m.context()))
    }

    /// Checks binary closure over the listed members and `Ũ_E`.
    pub(crate) fn validate(ctx: &Arc<Context>, members: &[SoftSet]) -> Result<Validation> {
        Family::check_context(ctx, members)?;
        let fam = Family::normalized(ctx, members.iter().cloned());
        let cores = fam.cores();
        let mut violations = Vec::new();
        for (i, a) in cores.iter().enumerate() {
            for b in &cores[i + 1..] {
                for (op, r) in [
                    (BinaryOp::Union, a.join(b)),
                    (BinaryOp::Intersection, a.meet(b)),
                ] {
                    if !fam.contains(&r) {
                        violations.push(Violation {
                            left: a.clone(),
                            right: b.clone(),
                            op,
                            missing: r,
                        });
                    }
                }
            }
        }
        Ok(Validation { violations })
    }

    /// The smallest family containing `gens` that is closed under both
    /// binary operations.
    pub(crate) fn generated(ctx: &Arc<Context>, gens: impl IntoIterator<Item = SoftSet>) -> Family {
        let mut fam = Family::normalized(ctx, gens);
        loop {
            let cores = fam.cores();
            let mut fresh = BTreeSet::new();
            for (i, a) in cores.iter().enumerate() {
                for b in &cores[i + 1..] {
                    for r in [a.join(b), a.meet(b)] {
                        if !fam.contains(&r) {
                            fresh.insert(r);
                        }
                    }
                }
            }
            if fresh.is_empty() {
                return fam;
            }
            fam = Family::normalized(ctx, fam.members.into_iter().chain(fresh));
        }
    }

    pub(crate) fn context(&self) -> &Arc<Context> {
        &self.ctx
    }

    pub(crate) fn members(&self) -> &[SoftSet] {
        &self.members
    }

    /// Listed members followed by `Ũ_E`; every non-null member of the
    /// family is a padding of one of these.
    pub(crate) fn cores(&self) -> Vec<SoftSet> {
        let mut v = self.members.clone();
        v.push(SoftSet::whole_all(&self.ctx));
        v
    }

    pub(crate) fn contains(&self, f: &SoftSet) -> bool {
        same_context(&self.ctx, f.context())
            && (f.is_null() || f.is_whole_all() || self.members.iter().any(|m| f.is_padding_of(m)))
    }

    /// For every way `f` fits under a member, the smallest such member.
    /// Any member containing `f` contains one of these, and agrees with it
    /// on the smaller domain.
    pub(crate) fn minimal_supersets(&self, f: &SoftSet) -> Vec<SoftSet> {
        let mut out = BTreeSet::new();
        if f.is_null() {
            out.insert(SoftSet::null(&self.ctx, f.domain()).expect("domain from same context"));
        }
        for core in self.cores() {
            let k = core.pad(f.domain().difference(core.domain()));
            if f.is_subset(&k) {
                out.insert(k);
            }
        }
        out.into_iter().collect()
    }

    /// Members that are `⊆̃ f`, one per core plus `φ_{dom f}`; their union
    /// is the union of all members below `f`.
    pub(crate) fn maximal_subsets(&self, f: &SoftSet) -> Vec<SoftSet> {
        let mut out = vec![SoftSet::null(&self.ctx, f.domain()).expect("domain from same context")];
        out.extend(self.cores().into_iter().filter(|m| m.is_subset(f)));
        out
    }

    /// Every member with domain exactly `a`.
    pub(crate) fn members_with_domain(&self, a: ParamSet) -> Vec<SoftSet> {
        let mut out = BTreeSet::new();
        out.insert(SoftSet::null(&self.ctx, a).expect("domain from same context"));
        for core in self.cores() {
            if core.domain().is_subset(a) {
                out.insert(core.pad(a.difference(core.domain())));
            }
        }
        out.into_iter().collect()
    }

    /// Every member, implicit ones included.
    pub(crate) fn materialize(&self) -> Result<Vec<SoftSet>> {
        if self.ctx.n_params() > MAX_MATERIALIZED_PARAMS {
            return Err(SoftError::Bounds(format!(
                "materializing needs at most {MAX_MATERIALIZED_PARAMS} parameters, context `{}` has {}",
                self.ctx.name(),
                self.ctx.n_params()
            )));
        }
        let all = self.ctx.all_params();
        let mut out = BTreeSet::new();
        for b in all.subsets() {
            out.insert(SoftSet::null(&self.ctx, b)?);
        }
        for core in self.cores() {
            for b in all.difference(core.domain()).subsets() {
                out.insert(core.pad(b));
            }
        }
        Ok(out.into_iter().collect())
    }

    pub(crate) fn slice(&self, e: usize) -> Result<BTreeSet<PointSet>> {
        if e >= self.ctx.n_params() {
            return Err(SoftError::Domain(format!(
                "parameter index {e} outside `{}`",
                self.ctx.name()
            )));
        }
        let mut out = BTreeSet::from([PointSet::EMPTY, self.ctx.all_points()]);
        out.extend(self.members.iter().filter_map(|m| m.value(e)));
        Ok(out)
    }

    /// The family of soft sets belonging to both.
    pub(crate) fn intersection(&self, other: &Family) -> Result<Family> {
        ensure_same(&self.ctx, &other.ctx)?;
        let mut common = Vec::new();
        for a in &self.members {
            for b in other.cores() {
                let j = a.join(&b);
                if j.is_padding_of(a) && j.is_padding_of(&b) {
                    common.push(j);
                }
            }
        }
        for b in &other.members {
            if self.contains(b) {
                common.push(b.clone());
            }
        }
        Ok(Family::normalized(&self.ctx, common))
    }

    /// Every member of `other` is a member of `self`.
    pub(crate) fn includes(&self, other: &Family) -> bool {
        same_context(&self.ctx, &other.ctx) && other.members.iter().all(|m| self.contains(m))
    }
}

impl fmt::Debug for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.members.iter().map(|m| m.to_string()))
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p1() -> (Arc<Context>, SoftSet, SoftSet) {
        let c = Context::new("C1", ["x", "z"], ["e1", "e2", "e3", "e4"]).unwrap();
        let f = SoftSet::from_labels(&c, &[("e1", &["x"][..]), ("e2", &["x", "z"][..])]).unwrap();
        let g = SoftSet::from_labels(&c, &[("e1", &["x"][..])]).unwrap();
        (c, f, g)
    }

    #[test]
    fn normalization_drops_implicit_members() {
        let (c, f, g) = p1();
        let fam = Family::normalized(
            &c,
            vec![
                f.clone(),
                g.clone(),
                g.pad(ParamSet(0b100)),
                SoftSet::whole_all(&c),
                SoftSet::null_all(&c),
            ],
        );
        assert_eq!(fam.members(), &[g.clone(), f.clone()]);
        assert!(fam.contains(&g.pad(ParamSet(0b1000))));
        assert!(!fam.contains(&f.complement()));
    }

    #[test]
    fn materialized_members_are_closed() {
        let (c, f, g) = p1();
        let fam = Family::normalized(&c, vec![f, g]);
        let all = fam.materialize().unwrap();
        for a in &all {
            assert!(fam.contains(a));
            for b in &all {
                assert!(all.binary_search(&a.join(b)).is_ok(), "{a} ∪ {b}");
                assert!(all.binary_search(&a.meet(b)).is_ok(), "{a} ∩ {b}");
            }
        }
    }

    #[test]
    fn generation_closes_family() {
        let c = Context::new("C", ["x", "y"], ["e1"]).unwrap();
        let x = SoftSet::from_labels(&c, &[("e1", &["x"][..])]).unwrap();
        let y = SoftSet::from_labels(&c, &[("e1", &["y"][..])]).unwrap();
        let fam = Family::generated(&c, vec![x.clone(), y.clone()]);
        assert_eq!(fam.members().len(), 2);
        let v = Family::validate(&c, &[x, y]).unwrap();
        assert!(v.is_ok());
    }
}
