//! Warping degrees, the warping degree labeling of edges and the warping
//! polynomial `W_D(t) = sum over edges of t^label`.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::diagram::{GaussDiagram, Strand};
use crate::error::{Error, Result};
use crate::laurent::WarpPoly;

/// Warping degree of every edge; `labels[j]` belongs to the edge following pass `j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WarpLabeling {
    labels: Vec<usize>,
}

impl WarpLabeling {
    pub fn new(labels: Vec<usize>) -> Self {
        WarpLabeling { labels }
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn get(&self, edge: usize) -> usize {
        self.labels[edge]
    }

    pub fn min(&self) -> usize {
        self.labels.iter().copied().min().unwrap_or(0)
    }

    pub fn max(&self) -> usize {
        self.labels.iter().copied().max().unwrap_or(0)
    }

    pub fn span(&self) -> usize {
        self.max() - self.min()
    }

    pub fn polynomial(&self) -> WarpPoly {
        WarpPoly::from_exponents(self.labels.iter().copied())
    }

    /// Lowest edge index carrying `label`.
    pub fn find(&self, label: usize) -> Option<usize> {
        self.labels.iter().position(|&l| l == label)
    }
}

/// Number of crossings first met as an under pass when walking once around
/// the diagram from a base point on edge `edge`.
pub fn degree_at_base(d: &GaussDiagram, edge: usize) -> Result<usize> {
    d.check_edge(edge)?;
    let passes = d.passes();
    let n = passes.len();
    let mut seen = HashSet::with_capacity(d.crossing_count());
    let mut count = 0;
    for step in 1..=n {
        let p = passes[(edge + step) % n];
        if seen.insert(p.crossing) && p.strand == Strand::Under {
            count += 1;
        }
    }
    Ok(count)
}

/// Labels every edge: one scan for the last edge, then a ±1 walk.
pub fn labeling(d: &GaussDiagram) -> Result<WarpLabeling> {
    let passes = d.passes();
    let n = passes.len();
    if n == 0 {
        return Ok(WarpLabeling::new(vec![0]));
    }
    let start = degree_at_base(d, n - 1)? as i64;
    let mut labels = Vec::with_capacity(n);
    let mut cur = start;
    for p in passes {
        cur += if p.strand.is_over() { 1 } else { -1 };
        if cur < 0 {
            return Err(Error::InconsistentClosure(format!("negative label on {d}")));
        }
        labels.push(cur as usize);
    }
    if cur != start {
        return Err(Error::InconsistentClosure(format!("walk on {d} ends at {cur}, started at {start}")));
    }
    Ok(WarpLabeling::new(labels))
}

pub fn polynomial(d: &GaussDiagram) -> Result<WarpPoly> {
    Ok(labeling(d)?.polynomial())
}

/// `d(D)`, the minimum warping degree over all base points.
pub fn warping_degree(d: &GaussDiagram) -> Result<usize> {
    Ok(labeling(d)?.min())
}

pub fn max_degree(d: &GaussDiagram) -> Result<usize> {
    Ok(labeling(d)?.max())
}

pub fn diagram_span(d: &GaussDiagram) -> Result<usize> {
    Ok(labeling(d)?.span())
}

pub fn is_monotone(d: &GaussDiagram) -> Result<bool> {
    Ok(warping_degree(d)? == 0)
}

/// Splits `W_D` at crossing `x`: `f` sums the edges walked from the over
/// pass of `x` to its under pass, `g` the remaining edges.
pub fn fg_decomposition(d: &GaussDiagram, x: u32) -> Result<(WarpPoly, WarpPoly)> {
    if d.crossing_count() == 0 {
        return Err(Error::ZeroCrossings);
    }
    let (a, b) = d.positions(x)?;
    let lab = labeling(d)?;
    let n = d.passes().len();
    let mut f = WarpPoly::zero();
    let mut g = WarpPoly::zero();
    let mut e = a;
    while e != b {
        f.add_term(lab.get(e), 1);
        e = (e + 1) % n;
    }
    while e != a {
        g.add_term(lab.get(e), 1);
        e = (e + 1) % n;
    }
    Ok((f, g))
}

/// `t g + t^-1 f`, the polynomial after changing crossing `x`.
pub fn predict_crossing_change(d: &GaussDiagram, x: u32) -> Result<WarpPoly> {
    let (f, g) = fg_decomposition(d, x)?;
    Ok(g.shift(1).add(&f.shift_down(1)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::notation::parse_gauss;

    fn d(s: &str) -> GaussDiagram {
        parse_gauss(s).unwrap()
    }

    const TREFOIL: &str = "O1 U2 O3 U1 O2 U3";
    const ONE_BRIDGE3: &str = "O1 O2 O3 U1 U2 U3";

    fn brute_labels(g: &GaussDiagram) -> Vec<usize> {
        (0..g.edge_count()).map(|e| degree_at_base(g, e).unwrap()).collect()
    }

    #[test]
    fn degree_at_base_examples() {
        assert_eq!(degree_at_base(&d(TREFOIL), 5), Ok(1));
        assert_eq!(degree_at_base(&d(ONE_BRIDGE3), 5), Ok(0));
        assert_eq!(degree_at_base(&d(""), 0), Ok(0));
        assert_eq!(degree_at_base(&d(""), 1), Err(Error::EdgeOutOfRange { edge: 1, edges: 1 }));
    }

    #[test]
    fn labeling_examples() {
        assert_eq!(labeling(&d(TREFOIL)).unwrap().labels(), &[2, 1, 2, 1, 2, 1]);
        assert_eq!(labeling(&d(ONE_BRIDGE3)).unwrap().labels(), &[1, 2, 3, 2, 1, 0]);
        assert_eq!(labeling(&d("")).unwrap().labels(), &[0]);
        for s in [TREFOIL, ONE_BRIDGE3, "O1 U2 O3 U4 O2 U1 O4 U3", "U1 O2 U3 O1 U2 O3"] {
            assert_eq!(labeling(&d(s)).unwrap().labels(), brute_labels(&d(s)).as_slice(), "{s}");
        }
    }

    #[test]
    fn polynomial_examples() {
        assert_eq!(polynomial(&d(TREFOIL)).unwrap().to_string(), "3t+3t^2");
        assert_eq!(polynomial(&d(ONE_BRIDGE3)).unwrap().to_string(), "1+2t+2t^2+t^3");
        assert_eq!(polynomial(&d("")).unwrap(), WarpPoly::one());
    }

    #[test]
    fn degrees_and_span() {
        let t = d(TREFOIL);
        assert_eq!((warping_degree(&t), max_degree(&t), diagram_span(&t)), (Ok(1), Ok(2), Ok(1)));
        let b = d(ONE_BRIDGE3);
        assert_eq!((warping_degree(&b), max_degree(&b), diagram_span(&b)), (Ok(0), Ok(3), Ok(3)));
        let e = d("");
        assert_eq!((warping_degree(&e), max_degree(&e), diagram_span(&e)), (Ok(0), Ok(0), Ok(0)));
    }

    #[test]
    fn monotone() {
        assert_eq!(is_monotone(&d(ONE_BRIDGE3)), Ok(true));
        assert_eq!(is_monotone(&d(TREFOIL)), Ok(false));
        assert_eq!(is_monotone(&d("")), Ok(true));
    }

    #[test]
    fn fg_examples() {
        let (f, g) = fg_decomposition(&d(TREFOIL), 1).unwrap();
        assert_eq!((f.to_string(), g.to_string()), ("t+2t^2".into(), "2t+t^2".into()));
        let (f, g) = fg_decomposition(&d("O1 U1"), 1).unwrap();
        assert_eq!((f.to_string(), g.to_string()), ("t".into(), "1".into()));
        assert_eq!(fg_decomposition(&d(TREFOIL), 4), Err(Error::UnknownCrossing(4)));
        assert_eq!(fg_decomposition(&d(""), 1), Err(Error::ZeroCrossings));
    }

    #[test]
    fn predicted_crossing_change() {
        // The printed expansion of this example, 1+2t+t+2t^2+t^3, evaluates to -1 at t = -1;
        // recomputing the changed code gives F^3.
        let t = d(TREFOIL);
        let p = predict_crossing_change(&t, 1).unwrap();
        assert_eq!(p.to_string(), "1+2t+2t^2+t^3");
        assert_eq!(p, polynomial(&t.crossing_change(1).unwrap()).unwrap());
        assert_eq!(predict_crossing_change(&d("O1 U1"), 1).unwrap().to_string(), "1+t");
        assert_eq!(polynomial(&d("U1 O1")).unwrap().to_string(), "1+t");
    }
}
