//! Exact-arithmetic toolkit for quasiperiodic flows on the n-torus whose
//! generating vector fields have components in a real algebraic number
//! field: symmetry multipliers, unit groups of orders, and numeric
//! integer-relation probes.

pub mod classify;
pub mod error;
pub mod field;
pub mod flow;
pub mod json;
pub mod lattice;
pub mod lll;
pub mod matrix;
pub mod poly;
pub mod probe;
pub mod rational;
pub mod roots;
pub mod symmetry;
pub mod units;

pub use error::{Error, Result};
pub use field::{FieldElement, NumberField};
pub use poly::{IntPoly, RatPoly};
pub use rational::{Int, Rat};
pub use flow::Flow;
pub use roots::Interval;
