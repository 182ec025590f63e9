//! Oriented Reidemeister-1 kink insertions and connected sum.
//!
//! Fresh crossing ids are always `max existing id + 1, + 2, ...` so output
//! codes are deterministic.

use crate::diagram::{GaussDiagram, Pass};
use crate::error::{Error, Result};
use crate::warping::labeling;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KinkKind {
    /// Inserts `O x, U x`; `W -> W + t^i (1 + t)`.
    OverFirst,
    /// Inserts `U x, O x`; `W -> t W + t^i (1 + t)`.
    UnderFirst,
}

pub fn insert_kink(d: &GaussDiagram, edge: usize, kind: KinkKind) -> Result<GaussDiagram> {
    d.check_edge(edge)?;
    let x = d.max_id() + 1;
    let pair = match kind {
        KinkKind::OverFirst => [Pass::over(x), Pass::under(x)],
        KinkKind::UnderFirst => [Pass::under(x), Pass::over(x)],
    };
    let mut passes = d.passes().to_vec();
    let at = if passes.is_empty() { 0 } else { edge + 1 };
    passes.splice(at..at, pair);
    Ok(GaussDiagram::from_parts_unchecked(passes))
}

pub fn insert_kink_over_first(d: &GaussDiagram, edge: usize) -> Result<GaussDiagram> {
    insert_kink(d, edge, KinkKind::OverFirst)
}

pub fn insert_kink_under_first(d: &GaussDiagram, edge: usize) -> Result<GaussDiagram> {
    insert_kink(d, edge, KinkKind::UnderFirst)
}

/// Splices `e` into `d`: the passes of `d` up to pass `edge_d`, then every
/// pass of `e` starting after pass `edge_e`, then the rest of `d`.
pub fn connected_sum(d: &GaussDiagram, edge_d: usize, e: &GaussDiagram, edge_e: usize) -> Result<GaussDiagram> {
    if d.crossing_count() == 0 || e.crossing_count() == 0 {
        return Err(Error::EmptySummand);
    }
    d.check_edge(edge_d)?;
    e.check_edge(edge_e)?;
    let inner = e.renumbered().rotated(edge_e + 1).shifted_ids(d.max_id());
    let mut passes = d.passes().to_vec();
    passes.splice(edge_d + 1..edge_d + 1, inner);
    Ok(GaussDiagram::from_parts_unchecked(passes))
}

pub fn find_edge_with_label(d: &GaussDiagram, target: usize) -> Result<usize> {
    labeling(d)?.find(target).ok_or(Error::NoSuchLabel(target))
}
