//! Exact first-passage-percolation laboratory on finite lattice windows.
//!
//! The crate builds explicit edge-weight configurations on finite
//! windows of the integer lattice — corridors that force geodesics
//! through a segment, weight layouts that pin normalized passage times
//! to a target, negative-weight witnesses, reach-set layouts that
//! approximate a prescribed compact shape — and then machine-verifies
//! the forced property each construction claims, with exact rational
//! arithmetic end to end.
//!
//! Start with the runnable examples (`cargo run --example corridor_forcing`)
//! or the `fpplab` command-line tool; the acceptance suite under
//! `tests/acceptance.rs` exercises every headline claim.

pub mod config;
pub mod engine;
pub mod error;
pub mod lattice;
pub mod path;
pub mod rat;
pub mod values;

pub use config::{
    constraint_from_triples, sample_configuration, uniform_configuration, Configuration,
    CylinderConstraint, DefaultRule,
};
pub use error::{Error, Result};
pub use lattice::{floor_lattice_point, Edge, LatticePoint, Window};
pub use path::PathRecord;
pub use rat::Rat;
pub use values::{EpsilonSchedule, Interval, ValueSet, ValueSetKind};
