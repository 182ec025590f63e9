//! Polynomials in `t` with non-negative degrees and positive coefficients.
//!
//! Degrees and coefficients never exceed a few hundred for diagrams with up
//! to 64 crossings, so `usize` degrees and `u64` coefficients cannot overflow
//! in that range.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WarpPoly {
    coeffs: BTreeMap<usize, u64>,
}

impl WarpPoly {
    pub fn zero() -> Self {
        WarpPoly::default()
    }

    pub fn one() -> Self {
        WarpPoly::monomial(1, 0)
    }

    pub fn monomial(coeff: u64, degree: usize) -> Self {
        let mut p = WarpPoly::zero();
        p.add_term(degree, coeff);
        p
    }

    /// Coefficients `coeffs[i]` at degree `start + i`; zero entries are dropped.
    pub fn from_dense(start: usize, coeffs: &[u64]) -> Self {
        let mut p = WarpPoly::zero();
        for (i, &c) in coeffs.iter().enumerate() {
            p.add_term(start + i, c);
        }
        p
    }

    /// Sum of `t^e` over the given exponents.
    pub fn from_exponents<I: IntoIterator<Item = usize>>(exps: I) -> Self {
        let mut p = WarpPoly::zero();
        for e in exps {
            p.add_term(e, 1);
        }
        p
    }

    pub fn add_term(&mut self, degree: usize, coeff: u64) {
        if coeff > 0 {
            *self.coeffs.entry(degree).or_insert(0) += coeff;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, degree: usize) -> u64 {
        self.coeffs.get(&degree).copied().unwrap_or(0)
    }

    /// `(degree, coefficient)` pairs in ascending degree.
    pub fn terms(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.coeffs.iter().map(|(&d, &c)| (d, c))
    }

    pub fn eval(&self, x: i64) -> i128 {
        let x = x as i128;
        self.terms().map(|(d, c)| c as i128 * x.pow(d as u32)).sum()
    }

    pub fn ldeg(&self) -> Result<usize> {
        self.coeffs.keys().next().copied().ok_or(Error::ZeroPolynomial)
    }

    pub fn udeg(&self) -> Result<usize> {
        self.coeffs.keys().next_back().copied().ok_or(Error::ZeroPolynomial)
    }

    pub fn span(&self) -> Result<usize> {
        Ok(self.udeg()? - self.ldeg()?)
    }

    pub fn add(&self, other: &WarpPoly) -> WarpPoly {
        let mut out = self.clone();
        for (d, c) in other.terms() {
            out.add_term(d, c);
        }
        out
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: usize) -> WarpPoly {
        WarpPoly { coeffs: self.terms().map(|(d, c)| (d + k, c)).collect() }
    }

    /// Multiplication by `t^-k`; requires `ldeg >= k`.
    pub fn shift_down(&self, k: usize) -> Result<WarpPoly> {
        if let Some(ldeg) = self.coeffs.keys().next().copied() {
            if ldeg < k {
                return Err(Error::ShiftBelowZero { by: k, ldeg });
            }
        }
        Ok(WarpPoly { coeffs: self.terms().map(|(d, c)| (d - k, c)).collect() })
    }

    /// `t^c p(1/t)`.
    pub fn reflect(&self, c: usize) -> Result<WarpPoly> {
        if let Some(udeg) = self.coeffs.keys().next_back().copied() {
            if udeg > c {
                return Err(Error::DegreeExceedsC { udeg, c });
            }
        }
        Ok(WarpPoly { coeffs: self.terms().map(|(d, n)| (c - d, n)).collect() })
    }

    /// Every degree between the lower and upper degree is present.
    pub fn gap_free(&self) -> Result<bool> {
        let span = self.span()?;
        Ok(self.coeffs.len() == span + 1)
    }

    /// `(sum of even-degree coefficients, sum of odd-degree coefficients)`.
    pub fn parity_sums(&self) -> (u64, u64) {
        self.terms().fold((0, 0), |(e, o), (d, c)| if d % 2 == 0 { (e + c, o) } else { (e, o + c) })
    }
}

impl fmt::Display for WarpPoly {
    /// Ascending degree, e.g. `1+2t+2t^2+t^3`; the zero polynomial is `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (d, c)) in self.terms().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            match (d, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => f.write_str("t")?,
                (1, c) => write!(f, "{c}t")?,
                (d, 1) => write!(f, "t^{d}")?,
                (d, c) => write!(f, "{c}t^{d}")?,
            }
        }
        Ok(())
    }
}
