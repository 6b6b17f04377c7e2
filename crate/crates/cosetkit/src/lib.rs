//! Toolkit for finite Cayley graphs over involutive generator sets:
//! coset partitions, coset cycles and paths, acyclicity levels, dual
//! hypergraphs with path translation, convex closures, and covering maps.

pub mod acyclicity;
pub mod budget;
pub mod catalog;
pub mod cosets;
pub mod covering;
pub mod dual;
pub mod error;
pub mod group;
pub mod hypergraph;
pub mod mask;
pub mod paths;
pub mod report;
pub mod verify;

pub use budget::Budget;
pub use cosets::{Cayley, CosetId};
pub use error::{Error, Result};
pub use group::{Group, GroupSpec};
pub use mask::Mask;
