//! Warping degrees and warping polynomials of oriented knot diagrams.
//!
//! Diagrams are Gauss codes ([`GaussDiagram`]). Each edge carries the
//! warping degree of a base point on it, and the warping polynomial is
//! `W_D(t) = sum over edges of t^label`. The crate also implements the
//! Reidemeister-1 kinks and connected sum with their effect on `W_D`, the
//! recognition of warping polynomials with witness diagrams, braid closures,
//! and exhaustive checks over every small Gauss code.

pub mod characterize;
pub mod diagram;
pub mod error;
pub mod laurent;
pub mod notation;
pub mod search;
pub mod transform;
pub mod warping;

pub use characterize::{f_l, one_bridge_diagram, recognize, witness, CharForm, Rejection};
pub use diagram::{GaussDiagram, Pass, Sign, Strand};
pub use error::{Error, Result};
pub use laurent::WarpPoly;
pub use notation::{braid_closure, format_gauss, format_poly, parse_gauss, parse_poly, BraidWord};
pub use search::{dealternating_number, run_property_suite, span_witness, PropertyReport};
pub use transform::{connected_sum, find_edge_with_label, insert_kink_over_first, insert_kink_under_first, KinkKind};
pub use warping::{labeling, polynomial, WarpLabeling};
