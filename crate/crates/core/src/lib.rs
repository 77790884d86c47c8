//! Synthesis and verification toolkit for output regulation of LTI systems.
//!
//! Solves four families of regulator equations — classical, energy-optimal
//! (over-actuated), error-optimal (under-actuated), and the interpolating
//! linear-quadratic-tracking triple — checks every solvability assumption,
//! and verifies optimality by analytic power formulas, per-eigenvalue
//! oracles and closed-loop simulation.

pub mod error;
pub mod linalg;
pub mod model;

pub use error::{Error, Result};
