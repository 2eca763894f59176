//! Soft ditopologies: an unrelated topology and cotopology on one context.

use std::sync::Arc;

use crate::cotopo::{check_cotopology, is_kappa_continuous, SoftCotopology};
use crate::error::{Result, SoftError};
use crate::family::{Validation, Violation};
use crate::map::SoftMap;
use crate::separation::{Axiom, AxiomOutcome, DomainScope, Side};
use crate::soft::{ensure_same, Context, SoftPoint, SoftSet};
use crate::topo::{check_topology, is_tau_continuous, SoftTopology};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ditopology {
    tau: SoftTopology,
    kappa: SoftCotopology,
}

/// Per-side validation of a candidate ditopology.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DitoValidation {
    pub tau: Validation,
    pub kappa: Validation,
}

impl DitoValidation {
    pub fn is_ok(&self) -> bool {
        self.tau.is_ok() && self.kappa.is_ok()
    }

    pub fn violations(&self) -> impl Iterator<Item = (Side, &Violation)> {
        let t = self.tau.violations.iter().map(|v| (Side::Tau, v));
        t.chain(self.kappa.violations.iter().map(|v| (Side::Kappa, v)))
    }
}

pub fn check_ditopology(
    ctx: &Arc<Context>,
    tau_members: &[SoftSet],
    kappa_members: &[SoftSet],
) -> Result<DitoValidation> {
    Ok(DitoValidation {
        tau: check_topology(ctx, tau_members)?,
        kappa: check_cotopology(ctx, kappa_members)?,
    })
}

impl Ditopology {
    pub fn new(tau: SoftTopology, kappa: SoftCotopology) -> Result<Ditopology> {
        ensure_same(tau.context(), kappa.context())?;
        Ok(Ditopology { tau, kappa })
    }

    pub fn context(&self) -> &Arc<Context> {
        self.tau.context()
    }

    pub fn tau(&self) -> &SoftTopology {
        &self.tau
    }

    pub fn kappa(&self) -> &SoftCotopology {
        &self.kappa
    }

    /// `self` is coarser than `other`, read literally: `τ₂ ⊆ τ₁` and
    /// `κ₂ ⊆ κ₁` where `self = (τ₁, κ₁)`.
    pub fn is_coarser(&self, other: &Ditopology) -> Result<bool> {
        ensure_same(self.context(), other.context())?;
        Ok(self.tau.includes(&other.tau) && self.kappa.includes(&other.kappa))
    }

    /// `(F, M)` is a neighborhood of `p`: `F` is a neighborhood and `M` a
    /// remote neighborhood of `p`.
    pub fn is_dito_nbhd(&self, f: &SoftSet, m: &SoftSet, p: &SoftPoint) -> bool {
        self.tau.is_nbhd_of_point(f, p) && self.kappa.is_remote_nbhd(m, p)
    }

    pub fn interior(&self, f: &SoftSet) -> Result<SoftSet> {
        self.tau.interior(f)
    }

    pub fn closure(&self, f: &SoftSet) -> Result<SoftSet> {
        self.kappa.closure(f)
    }

    /// Both component axioms; a failure names the first failing side,
    /// τ before κ.
    pub fn check_axiom(&self, axiom: Axiom, scope: DomainScope) -> Result<AxiomOutcome> {
        let t = self.tau.check_axiom(axiom, scope)?;
        if !t.holds {
            return Ok(AxiomOutcome {
                failed_side: Some(Side::Tau),
                ..t
            });
        }
        let k = self.kappa.check_axiom(axiom, scope)?;
        if !k.holds {
            return Ok(AxiomOutcome {
                failed_side: Some(Side::Kappa),
                ..k
            });
        }
        Ok(k)
    }

    /// Like [`Ditopology::check_axiom`] with the axiom given by name.
    pub fn check_axiom_named(&self, axiom: &str, scope: DomainScope) -> Result<AxiomOutcome> {
        let axiom: Axiom = axiom
            .parse()
            .map_err(|e: SoftError| SoftError::Argument(e.to_string()))?;
        self.check_axiom(axiom, scope)
    }
}

pub fn is_dito_continuous(f: &SoftMap, source: &Ditopology, target: &Ditopology) -> Result<bool> {
    Ok(is_tau_continuous(f, &source.tau, &target.tau)?
        && is_kappa_continuous(f, &source.kappa, &target.kappa)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(c: &Arc<Context>, entries: &[(&str, &[&str])]) -> SoftSet {
        SoftSet::from_labels(c, entries).unwrap()
    }

    fn ctx() -> Arc<Context> {
        Context::new("C", ["x", "y"], ["e"]).unwrap()
    }

    #[test]
    fn validation_is_tagged_by_side() {
        let c = Context::new("C", ["x", "y", "z"], ["e"]).unwrap();
        let x = s(&c, &[("e", &["x"])]);
        let y = s(&c, &[("e", &["y"])]);
        assert!(check_ditopology(&c, &[], &[]).unwrap().is_ok());
        let r = check_ditopology(&c, std::slice::from_ref(&x), &[x.clone(), y]).unwrap();
        assert!(!r.is_ok());
        let sides: Vec<Side> = r.violations().map(|(side, _)| side).collect();
        assert_eq!(sides, [Side::Kappa]);
    }

    #[test]
    fn coarseness_is_literal() {
        let c = ctx();
        let x = s(&c, &[("e", &["x"])]);
        let fine = Ditopology::new(
            SoftTopology::new(&c, vec![x.clone()]).unwrap(),
            SoftCotopology::new(&c, vec![x]).unwrap(),
        )
        .unwrap();
        let coarse =
            Ditopology::new(SoftTopology::indiscrete(&c), SoftCotopology::indiscrete(&c)).unwrap();
        assert!(fine.is_coarser(&fine).unwrap());
        assert!(fine.is_coarser(&coarse).unwrap());
        assert!(!coarse.is_coarser(&fine).unwrap());
    }

    #[test]
    fn neighborhoods_and_operators() {
        let c = ctx();
        let x = s(&c, &[("e", &["x"])]);
        let d = Ditopology::new(
            SoftTopology::new(&c, vec![x.clone()]).unwrap(),
            SoftCotopology::new(&c, vec![x.clone()]).unwrap(),
        )
        .unwrap();
        let px = SoftPoint::new(&c, 0, c.all_params()).unwrap();
        let py = SoftPoint::new(&c, 1, c.all_params()).unwrap();
        assert!(d.is_dito_nbhd(&SoftSet::whole_all(&c), &SoftSet::null_all(&c), &px));
        assert!(d.is_dito_nbhd(&x, &SoftSet::null_all(&c), &px));
        assert!(!d.is_dito_nbhd(&x, &SoftSet::null_all(&c), &py));
        assert!(d.is_dito_nbhd(&SoftSet::whole_all(&c), &x, &py));
        assert_eq!(
            d.interior(&SoftSet::whole_all(&c)).unwrap(),
            SoftSet::whole_all(&c)
        );
        assert_eq!(
            d.closure(&SoftSet::null_all(&c)).unwrap(),
            SoftSet::null_all(&c)
        );
        // x is open and closed; its complement is neither
        let y = x.complement();
        assert_ne!(
            d.closure(&y).unwrap().complement(),
            d.interior(&y.complement()).unwrap()
        );
    }

    #[test]
    fn axioms_report_failing_side() {
        let c = ctx();
        let x = s(&c, &[("e", &["x"])]);
        let y = s(&c, &[("e", &["y"])]);
        let d = Ditopology::new(
            SoftTopology::new(&c, vec![x.clone()]).unwrap(),
            SoftCotopology::new(&c, vec![x, y]).unwrap(),
        )
        .unwrap();
        let t1 = d.check_axiom(Axiom::T1, DomainScope::All).unwrap();
        assert!(!t1.holds);
        assert_eq!(t1.failed_side, Some(Side::Tau));
        let t0 = d.check_axiom(Axiom::T0, DomainScope::All).unwrap();
        assert!(t0.holds);
        assert!(matches!(
            d.check_axiom_named("T9", DomainScope::All),
            Err(SoftError::Argument(_))
        ));
    }

    #[test]
    fn identity_is_continuous() {
        let c = ctx();
        let x = s(&c, &[("e", &["x"])]);
        let d = Ditopology::new(
            SoftTopology::new(&c, vec![x.clone()]).unwrap(),
            SoftCotopology::indiscrete(&c),
        )
        .unwrap();
        let id = SoftMap::identity(&c);
        assert!(is_dito_continuous(&id, &d, &d).unwrap());
        let fine_kappa = Ditopology::new(
            SoftTopology::indiscrete(&c),
            SoftCotopology::new(&c, vec![x]).unwrap(),
        )
        .unwrap();
        assert!(!is_dito_continuous(&id, &d, &fine_kappa).unwrap());
    }
}
