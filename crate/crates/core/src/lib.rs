//! Soft topologies, soft cotopologies and soft ditopologies over finite
//! universes and parameter sets.

pub mod bits;
pub mod cli;
pub mod cotopo;
pub mod dito;
pub mod dsl;
pub mod error;
pub mod family;
pub mod map;
pub mod oracle;
pub mod separation;
pub mod soft;
pub mod topo;

pub use bits::{ParamSet, PointSet};
pub use cotopo::{
    check_cotopology, is_closed_map, is_kappa_continuous, kappa_continuity_witness, SoftCotopology,
};
pub use dito::{check_ditopology, is_dito_continuous, DitoValidation, Ditopology};
pub use error::{Result, SoftError};
pub use family::{BinaryOp, Validation, Violation};
pub use map::SoftMap;
pub use separation::{Axiom, AxiomOutcome, AxiomWitness, DomainScope, Side};
pub use soft::{intersect, union, Context, SoftPoint, SoftSet};
pub use topo::{
    check_topology, is_open_map, is_tau_continuous, tau_continuity_witness, SoftTopology,
};
