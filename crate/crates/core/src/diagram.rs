//! Oriented knot diagrams as Gauss codes.
//!
//! A diagram is the cyclic sequence of crossing passes met while walking
//! along the knot. Edge `j` is the arc between pass `j` and pass `j + 1`
//! (mod `2c`); the zero-crossing diagram has a single edge `0`.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Strand {
    Over,
    Under,
}

impl Strand {
    pub fn flip(self) -> Self {
        match self {
            Strand::Over => Strand::Under,
            Strand::Under => Strand::Over,
        }
    }

    pub fn is_over(self) -> bool {
        self == Strand::Over
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Self {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

/// One traversal of a crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Pass {
    pub crossing: u32,
    pub strand: Strand,
    pub sign: Option<Sign>,
}

impl Pass {
    pub fn over(crossing: u32) -> Self {
        Pass { crossing, strand: Strand::Over, sign: None }
    }

    pub fn under(crossing: u32) -> Self {
        Pass { crossing, strand: Strand::Under, sign: None }
    }

    pub fn with_sign(self, sign: Option<Sign>) -> Self {
        Pass { sign, ..self }
    }

    /// Swaps over/under and flips the sign, if any.
    pub fn switched(self) -> Self {
        Pass {
            crossing: self.crossing,
            strand: self.strand.flip(),
            sign: self.sign.map(Sign::flip),
        }
    }
}

impl fmt::Display for Pass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self.strand {
            Strand::Over => 'O',
            Strand::Under => 'U',
        };
        write!(f, "{}{}", s, self.crossing)?;
        match self.sign {
            Some(Sign::Plus) => write!(f, "+"),
            Some(Sign::Minus) => write!(f, "-"),
            None => Ok(()),
        }
    }
}

/// A validated Gauss code: every crossing id appears exactly twice,
/// once over and once under.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Pass>", into = "Vec<Pass>")]
pub struct GaussDiagram {
    passes: Vec<Pass>,
}

impl TryFrom<Vec<Pass>> for GaussDiagram {
    type Error = Error;

    fn try_from(passes: Vec<Pass>) -> Result<Self> {
        GaussDiagram::validate(passes)
    }
}

impl From<GaussDiagram> for Vec<Pass> {
    fn from(d: GaussDiagram) -> Self {
        d.passes
    }
}

impl GaussDiagram {
    pub fn validate(passes: Vec<Pass>) -> Result<Self> {
        if passes.len() % 2 != 0 {
            return Err(Error::OddLength(passes.len()));
        }
        // (over count, under count, first sign seen)
        let mut seen: HashMap<u32, (u8, u8, Option<Sign>)> = HashMap::new();
        for p in &passes {
            if p.crossing == 0 {
                return Err(Error::ZeroId);
            }
            let entry = seen.entry(p.crossing).or_insert((0, 0, None));
            match p.strand {
                Strand::Over => entry.0 += 1,
                Strand::Under => entry.1 += 1,
            }
            if entry.0 > 1 || entry.1 > 1 {
                return Err(Error::IdNotPairedOnceOverOnceUnder(p.crossing));
            }
            if let Some(s) = p.sign {
                match entry.2 {
                    Some(prev) if prev != s => return Err(Error::SignMismatch(p.crossing)),
                    _ => entry.2 = Some(s),
                }
            }
        }
        if let Some((&id, _)) = seen.iter().filter(|(_, e)| e.0 != 1 || e.1 != 1).min_by_key(|(id, _)| **id) {
            return Err(Error::IdNotPairedOnceOverOnceUnder(id));
        }
        Ok(GaussDiagram { passes })
    }

    pub fn empty() -> Self {
        GaussDiagram { passes: Vec::new() }
    }

    pub fn passes(&self) -> &[Pass] {
        &self.passes
    }

    pub fn crossing_count(&self) -> usize {
        self.passes.len() / 2
    }

    /// Number of edges: `2c`, or 1 for the crossingless diagram.
    pub fn edge_count(&self) -> usize {
        self.passes.len().max(1)
    }

    pub fn check_edge(&self, edge: usize) -> Result<()> {
        if edge < self.edge_count() {
            Ok(())
        } else {
            Err(Error::EdgeOutOfRange { edge, edges: self.edge_count() })
        }
    }

    pub fn max_id(&self) -> u32 {
        self.passes.iter().map(|p| p.crossing).max().unwrap_or(0)
    }

    /// Crossing ids in order of first appearance.
    pub fn crossings(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.crossing_count());
        for p in &self.passes {
            if !out.contains(&p.crossing) {
                out.push(p.crossing);
            }
        }
        out
    }

    /// Positions of the over pass and the under pass of crossing `x`.
    pub fn positions(&self, x: u32) -> Result<(usize, usize)> {
        let mut over = None;
        let mut under = None;
        for (i, p) in self.passes.iter().enumerate() {
            if p.crossing == x {
                match p.strand {
                    Strand::Over => over = Some(i),
                    Strand::Under => under = Some(i),
                }
            }
        }
        match (over, under) {
            (Some(a), Some(b)) => Ok((a, b)),
            _ => Err(Error::UnknownCrossing(x)),
        }
    }

    pub fn is_alternating(&self) -> bool {
        let n = self.passes.len();
        n > 0 && (0..n).all(|i| self.passes[i].strand != self.passes[(i + 1) % n].strand)
    }

    /// True iff the cyclic over/under pattern is a rotation of `O^c U^c`.
    pub fn is_one_bridge(&self) -> Result<bool> {
        let n = self.passes.len();
        if n == 0 {
            return Err(Error::ZeroCrossings);
        }
        let switches = (0..n)
            .filter(|&i| self.passes[i].strand == Strand::Over && self.passes[(i + 1) % n].strand == Strand::Under)
            .count();
        Ok(switches == 1)
    }

    pub fn mirror(&self) -> Self {
        GaussDiagram { passes: self.passes.iter().map(|p| p.switched()).collect() }
    }

    pub fn reverse(&self) -> Self {
        GaussDiagram { passes: self.passes.iter().rev().copied().collect() }
    }

    pub fn crossing_change(&self, x: u32) -> Result<Self> {
        self.positions(x)?;
        Ok(GaussDiagram {
            passes: self
                .passes
                .iter()
                .map(|p| if p.crossing == x { p.switched() } else { *p })
                .collect(),
        })
    }

    /// Advisory realizability check: the two occurrences of every crossing
    /// are separated by an even number of passes.
    pub fn evenness_lint(&self) -> bool {
        let mut first: HashMap<u32, usize> = HashMap::new();
        for (i, p) in self.passes.iter().enumerate() {
            if let Some(j) = first.insert(p.crossing, i) {
                if (i - j - 1) % 2 != 0 {
                    return false;
                }
            }
        }
        true
    }

    /// Crossing ids renumbered `1..=c` by first appearance.
    pub fn renumbered(&self) -> Self {
        let order = self.crossings();
        let index: HashMap<u32, u32> = order.iter().enumerate().map(|(i, &id)| (id, i as u32 + 1)).collect();
        GaussDiagram {
            passes: self
                .passes
                .iter()
                .map(|p| Pass { crossing: index[&p.crossing], ..*p })
                .collect(),
        }
    }

    /// Cyclic rotation so that pass `k` comes first.
    pub fn rotated(&self, k: usize) -> Self {
        let mut passes = self.passes.clone();
        if !passes.is_empty() {
            let n = passes.len();
            passes.rotate_left(k % n);
        }
        GaussDiagram { passes }
    }

    /// Offsets every crossing id by `by`.
    pub(crate) fn shifted_ids(&self, by: u32) -> Vec<Pass> {
        self.passes
            .iter()
            .map(|p| Pass { crossing: p.crossing + by, ..*p })
            .collect()
    }

    pub(crate) fn from_parts_unchecked(passes: Vec<Pass>) -> Self {
        debug_assert!(GaussDiagram::validate(passes.clone()).is_ok());
        GaussDiagram { passes }
    }
}

impl fmt::Display for GaussDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.passes.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}
