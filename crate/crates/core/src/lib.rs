//! Stuck knot diagrams and their invariants.
//!
//! * [`laurent`]: exact Laurent polynomials in `A, R, a, z, t, r`.
//! * [`diagram`]: oriented diagrams with classical and stuck crossings.
//! * [`bracket`]: the stuck bracket state sum and its writhe normalization.
//! * [`skein`]: the rigid HOMFLYPT polynomial.
//! * [`isotopy`]: the move calculus, barriers, and unsticking distance.
//! * [`registry`]: invariant engines selectable by name.
//! * [`catalog`]: built-in example diagrams.
//! * [`cli`]: the `stuckknot` command-line tool.

pub mod error;
pub mod laurent;
pub mod diagram;
pub mod bracket;
pub mod skein;
pub mod isotopy;
pub mod registry;
pub mod catalog;
pub mod cli;

pub use diagram::{CrossingKind, DiagramCode, End, StuckDiagram};
pub use error::{Error, Result};
pub use laurent::{Exponents, LaurentPoly, Var};
