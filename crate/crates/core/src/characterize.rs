//! Which polynomials are warping polynomials, and diagrams realizing them.
//!
//! A polynomial is a warping polynomial exactly when it has the shape
//!
//! ```text
//! m_0 t^k + (m_0 + m_1) t^(k+1) + ... + (m_(l-2) + m_(l-1)) t^(k+l-1) + m_(l-1) t^(k+l)
//! ```
//!
//! with every `m_i >= 1` and `m_0 + ... + m_(l-1) >= k + l`. For `l = 0`
//! the constraint forces `k = 0` and the polynomial is `1`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::diagram::{GaussDiagram, Pass};
use crate::error::{Error, Result};
use crate::laurent::WarpPoly;
use crate::transform::{insert_kink, KinkKind};
use crate::warping::{labeling, polynomial};

/// The `(k, l, m)` decomposition of a warping polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CharForm {
    pub k: usize,
    pub l: usize,
    pub m: Vec<u64>,
}

impl CharForm {
    pub fn new(k: usize, m: Vec<u64>) -> Result<Self> {
        let form = CharForm { k, l: m.len(), m };
        form.check()?;
        Ok(form)
    }

    pub fn check(&self) -> Result<()> {
        if self.m.len() != self.l {
            return Err(Error::InvalidForm(format!("{} multiplicities for l = {}", self.m.len(), self.l)));
        }
        if self.m.iter().any(|&x| x == 0) {
            return Err(Error::InvalidForm("every m_i must be at least 1".into()));
        }
        if self.sum() < (self.k + self.l) as u64 {
            return Err(Error::InvalidForm(format!("sum of m is {} < k + l = {}", self.sum(), self.k + self.l)));
        }
        Ok(())
    }

    pub fn sum(&self) -> u64 {
        self.m.iter().sum()
    }

    /// The polynomial this form describes.
    pub fn encode(&self) -> WarpPoly {
        if self.l == 0 {
            return WarpPoly::monomial(1, self.k);
        }
        let mut p = WarpPoly::zero();
        for (i, &mi) in self.m.iter().enumerate() {
            p.add_term(self.k + i, mi);
            p.add_term(self.k + i + 1, mi);
        }
        p
    }
}

impl fmt::Display for CharForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m: Vec<String> = self.m.iter().map(u64::to_string).collect();
        write!(f, "k={} l={} m=({})", self.k, self.l, m.join(","))
    }
}

/// Why a polynomial is not a warping polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Rejection {
    ZeroPolynomial,
    GapInCoefficients,
    BadEnds,
    SumTooSmall,
    NonUnitSpanZero,
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

pub fn recognize(f: &WarpPoly) -> std::result::Result<CharForm, Rejection> {
    let (Ok(k), Ok(top)) = (f.ldeg(), f.udeg()) else {
        return Err(Rejection::ZeroPolynomial);
    };
    if f.gap_free() != Ok(true) {
        return Err(Rejection::GapInCoefficients);
    }
    let l = top - k;
    if l == 0 {
        if k > 0 {
            return Err(Rejection::SumTooSmall);
        }
        if f.coeff(0) != 1 {
            return Err(Rejection::NonUnitSpanZero);
        }
        return Ok(CharForm { k: 0, l: 0, m: Vec::new() });
    }
    // m_0 = c_k, m_j = c_(k+j) - m_(j-1), and the top coefficient must equal m_(l-1)
    let mut m = Vec::with_capacity(l);
    let mut prev = 0u64;
    for j in 0..l {
        let c = f.coeff(k + j);
        if c <= prev {
            return Err(Rejection::BadEnds);
        }
        prev = c - prev;
        m.push(prev);
    }
    if f.coeff(top) != prev {
        return Err(Rejection::BadEnds);
    }
    let form = CharForm { k, l, m };
    if form.sum() < (k + l) as u64 {
        return Err(Rejection::SumTooSmall);
    }
    Ok(form)
}

/// `1 + 2t + ... + 2t^(l-1) + t^l`; `f_l(0) = 1`.
pub fn f_l(l: usize) -> WarpPoly {
    let mut p = WarpPoly::zero();
    for i in 0..l {
        p.add_term(i, 1);
        p.add_term(i + 1, 1);
    }
    if l == 0 {
        p.add_term(0, 1);
    }
    p
}

/// A one-bridge diagram with `l` crossings: `l` over passes, then `l` under
/// passes. The under passes run `U1..Ul` for odd `l` and `Ul..U1` for even
/// `l`, which keeps the code realizable (and hence alternatable).
pub fn one_bridge_diagram(l: usize) -> Result<GaussDiagram> {
    if l == 0 {
        return Err(Error::NonPositiveL);
    }
    let l = l as u32;
    let mut passes: Vec<Pass> = (1..=l).map(Pass::over).collect();
    if l % 2 == 1 {
        passes.extend((1..=l).map(Pass::under));
    } else {
        passes.extend((1..=l).rev().map(Pass::under));
    }
    Ok(GaussDiagram::from_parts_unchecked(passes))
}

/// Builds a diagram whose warping polynomial is `form.encode()`.
///
/// Starts from a one-bridge diagram with `l` crossings, adds `k` under-first
/// kinks, then the remaining over-first kinks. The result is re-checked.
pub fn witness(form: &CharForm) -> Result<GaussDiagram> {
    form.check()?;
    let target = form.encode();
    if form.l == 0 {
        return Ok(GaussDiagram::empty());
    }
    let mut remaining = form.k as u64;
    let split: Vec<(u64, u64)> = form
        .m
        .iter()
        .map(|&mi| {
            let under = (mi - 1).min(remaining);
            remaining -= under;
            (under, mi - 1 - under)
        })
        .collect();
    debug_assert_eq!(remaining, 0);

    let mut d = one_bridge_diagram(form.l)?;
    // Each under-first kink multiplies the polynomial by t, so the a-th one
    // targets label a + i + 1 to land at degree k + i after the rest.
    let mut done = 0usize;
    for (i, &(under, _)) in split.iter().enumerate() {
        for _ in 0..under {
            d = kink_at_label(&d, done + i + 1, KinkKind::UnderFirst)?;
            done += 1;
        }
    }
    for (i, &(_, over)) in split.iter().enumerate() {
        for _ in 0..over {
            d = kink_at_label(&d, form.k + i, KinkKind::OverFirst)?;
        }
    }

    let got = polynomial(&d)?;
    if got != target {
        return Err(Error::VerificationFailed { expected: target.to_string(), got: got.to_string() });
    }
    Ok(d)
}

fn kink_at_label(d: &GaussDiagram, label: usize, kind: KinkKind) -> Result<GaussDiagram> {
    let edge = labeling(d)?.find(label).ok_or(Error::NoSuchLabel(label))?;
    insert_kink(d, edge, kind)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::notation::parse_gauss;
    use crate::warping::diagram_span;

    fn p(s: &str) -> WarpPoly {
        crate::notation::parse_poly(s).unwrap()
    }

    #[test]
    fn one_bridge_examples() {
        let d1 = one_bridge_diagram(1).unwrap();
        assert_eq!(d1, parse_gauss("O1 U1").unwrap());
        assert_eq!(polynomial(&d1).unwrap().to_string(), "1+t");
        let d3 = one_bridge_diagram(3).unwrap();
        assert_eq!(d3, parse_gauss("O1 O2 O3 U1 U2 U3").unwrap());
        assert_eq!(polynomial(&d3).unwrap().to_string(), "1+2t+2t^2+t^3");
        let d8 = one_bridge_diagram(8).unwrap();
        assert_eq!(diagram_span(&d8), Ok(8));
        assert!(d8.is_one_bridge().unwrap());
        assert!(d8.evenness_lint());
        assert_eq!(one_bridge_diagram(0), Err(Error::NonPositiveL));
    }

    #[test]
    fn f_l_examples() {
        assert_eq!(f_l(0), WarpPoly::one());
        assert_eq!(f_l(2).to_string(), "1+2t+t^2");
        assert_eq!(f_l(3).to_string(), "1+2t+2t^2+t^3");
    }

    #[test]
    fn recognize_examples() {
        assert_eq!(recognize(&p("1+2t+2t^2+t^3")), Ok(CharForm { k: 0, l: 3, m: vec![1, 1, 1] }));
        assert_eq!(recognize(&p("3t+3t^2")), Ok(CharForm { k: 1, l: 1, m: vec![3] }));
        assert_eq!(recognize(&p("t+t^2")), Err(Rejection::SumTooSmall));
        assert_eq!(recognize(&p("1")), Ok(CharForm { k: 0, l: 0, m: vec![] }));
        assert_eq!(recognize(&p("1+3t+t^2")), Err(Rejection::BadEnds));
        assert_eq!(recognize(&WarpPoly::zero()), Err(Rejection::ZeroPolynomial));
        assert_eq!(recognize(&p("1+t^3")), Err(Rejection::GapInCoefficients));
        assert_eq!(recognize(&p("2")), Err(Rejection::NonUnitSpanZero));
        assert_eq!(recognize(&p("t^2")), Err(Rejection::SumTooSmall));
        assert_eq!(recognize(&p("2+t")), Err(Rejection::BadEnds));
    }

    #[test]
    fn witness_examples() {
        let w = witness(&CharForm::new(0, vec![1, 1, 1]).unwrap()).unwrap();
        assert_eq!(w, parse_gauss("O1 O2 O3 U1 U2 U3").unwrap());
        let w = witness(&CharForm::new(1, vec![2]).unwrap()).unwrap();
        assert_eq!(w, parse_gauss("O1 U2 O2 U1").unwrap());
        assert_eq!(polynomial(&w).unwrap().to_string(), "2t+2t^2");
        let w = witness(&CharForm::new(1, vec![3]).unwrap()).unwrap();
        assert_eq!(w.crossing_count(), 3);
        assert_eq!(polynomial(&w).unwrap().to_string(), "3t+3t^2");
        assert_eq!(witness(&CharForm::new(0, vec![]).unwrap()).unwrap(), GaussDiagram::empty());
    }

    #[test]
    fn invalid_forms() {
        assert!(CharForm::new(2, vec![1]).is_err());
        assert!(CharForm::new(0, vec![1, 0]).is_err());
        assert!(CharForm::new(1, vec![]).is_err());
        assert!(witness(&CharForm { k: 0, l: 2, m: vec![1] }).is_err());
    }
}
