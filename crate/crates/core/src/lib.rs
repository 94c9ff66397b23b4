//! Exact arithmetic on rational normal scrolls: divisor classes and their
//! intersection numbers, transforms through the vertex, the extremal
//! Hilbert-function profile of maximal-genus curves, and the genus
//! accounting of curves linked on scroll 3-folds.
//!
//! Everything is integer or rational arithmetic; no floating point enters
//! any reported value.

pub mod chow;
pub mod classification;
pub mod cli;
pub mod emit;
pub mod error;
pub mod expr;
pub mod hilbert;
pub mod linkage;
pub mod scroll;
pub mod transforms;

pub use chow::{ci_invariants, intersect, CiCurveData};
pub use classification::{classify, line_vertex_lower_bound, sweep, verify_closure, ClassificationReport};
pub use error::{Error, Result};
pub use hilbert::{decompose, delta_h, genus_from_profile, profile, HilbertProfile, MaxGenusParams};
pub use linkage::{clebsch, link_genus, noether_union, residual_quadric_invariants, CurveInvariants};
pub use scroll::{AmbientClass, ClassGroup, ResolvedClass, ScrollType};
