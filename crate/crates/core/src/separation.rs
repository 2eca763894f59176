//! Names, scopes and witnesses for separation axioms.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::bits::ParamSet;
use crate::error::{Result, SoftError};
use crate::soft::{Context, SoftPoint, SoftSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axiom {
    T0,
    T1,
    T2,
    Regular,
    T3,
    Normal,
    T4,
}

impl Axiom {
    pub const ALL: [Axiom; 7] = [
        Axiom::T0,
        Axiom::T1,
        Axiom::T2,
        Axiom::Regular,
        Axiom::T3,
        Axiom::Normal,
        Axiom::T4,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Axiom::T0 => "T0",
            Axiom::T1 => "T1",
            Axiom::T2 => "T2",
            Axiom::Regular => "regular",
            Axiom::T3 => "T3",
            Axiom::Normal => "normal",
            Axiom::T4 => "T4",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Axiom {
    type Err = SoftError;

    fn from_str(s: &str) -> Result<Axiom> {
        Axiom::ALL
            .into_iter()
            .find(|a| a.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| SoftError::UnknownAxiom(s.to_string()))
    }
}

/// Which parameter sets `A` the soft points `x_A, y_A` range over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DomainScope {
    /// Every non-empty `A ⊆ E`.
    #[default]
    All,
    /// One fixed non-empty `A`.
    Fixed(ParamSet),
}

impl DomainScope {
    pub fn domains(self, ctx: &Arc<Context>) -> Result<Vec<ParamSet>> {
        match self {
            DomainScope::All => Ok(ctx
                .all_params()
                .subsets()
                .filter(|a| !a.is_empty())
                .collect()),
            DomainScope::Fixed(a) => {
                ctx.check_params(a)?;
                if a.is_empty() {
                    return Err(SoftError::Argument(
                        "axiom scope needs a non-empty parameter set".into(),
                    ));
                }
                Ok(vec![a])
            }
        }
    }
}

/// Why an axiom fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AxiomWitness {
    /// Two soft points that cannot be separated.
    Points { first: SoftPoint, second: SoftPoint },
    /// A soft point and a soft set (regularity).
    PointAndSet { point: SoftPoint, set: SoftSet },
    /// Two soft sets (normality).
    Sets { first: SoftSet, second: SoftSet },
}

impl fmt::Display for AxiomWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomWitness::Points { first, second } => write!(f, "points {first}, {second}"),
            AxiomWitness::PointAndSet { point, set } => write!(f, "point {point}, set {set}"),
            AxiomWitness::Sets { first, second } => write!(f, "sets {first}, {second}"),
        }
    }
}

/// Which structure of a ditopology an outcome refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Tau,
    Kappa,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Tau => "tau",
            Side::Kappa => "kappa",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomOutcome {
    pub axiom: Axiom,
    pub holds: bool,
    pub witness: Option<AxiomWitness>,
    /// Set only for ditopologies: the structure whose axiom failed.
    pub failed_side: Option<Side>,
}

impl AxiomOutcome {
    pub(crate) fn pass(axiom: Axiom) -> Self {
        AxiomOutcome {
            axiom,
            holds: true,
            witness: None,
            failed_side: None,
        }
    }

    pub(crate) fn fail(axiom: Axiom, witness: AxiomWitness) -> Self {
        AxiomOutcome {
            axiom,
            holds: false,
            witness: Some(witness),
            failed_side: None,
        }
    }

    pub(crate) fn from_search(axiom: Axiom, w: Option<AxiomWitness>) -> Self {
        match w {
            None => AxiomOutcome::pass(axiom),
            Some(w) => AxiomOutcome::fail(axiom, w),
        }
    }

    /// Relabels a failing outcome of a component axiom as `axiom`.
    pub(crate) fn relabeled(mut self, axiom: Axiom) -> Self {
        self.axiom = axiom;
        self
    }
}

/// Unordered pairs `x < y` of soft points over each domain of the scope, in
/// canonical order.
pub(crate) fn point_pairs(
    ctx: &Arc<Context>,
    scope: DomainScope,
) -> Result<Vec<(SoftPoint, SoftPoint)>> {
    let mut out = Vec::new();
    for a in scope.domains(ctx)? {
        for x in 0..ctx.n_points() {
            for y in x + 1..ctx.n_points() {
                out.push((SoftPoint::new(ctx, x, a)?, SoftPoint::new(ctx, y, a)?));
            }
        }
    }
    Ok(out)
}

/// `(F ∩̃ G)` restricted to `a` is null: `F(e) ∩ G(e) = ∅` for all `e ∈ a`.
/// Both sets must be defined on `a`.
pub(crate) fn disjoint_on(f: &SoftSet, g: &SoftSet, a: ParamSet) -> bool {
    a.iter().all(|e| match (f.value(e), g.value(e)) {
        (Some(u), Some(v)) => u.intersection(v).is_empty(),
        _ => false,
    })
}

/// `(F ∪̃ G)` restricted to `a` is `Ũ_a`.
pub(crate) fn cover_on(f: &SoftSet, g: &SoftSet, a: ParamSet) -> bool {
    let all = f.context().all_points();
    a.iter().all(|e| match (f.value(e), g.value(e)) {
        (Some(u), Some(v)) => u.union(v) == all,
        _ => false,
    })
}
