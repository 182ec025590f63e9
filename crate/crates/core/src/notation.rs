//! Text formats: Gauss codes, polynomials and braid words.
//!
//! Gauss code tokens are `O` or `U` (either case), a positive crossing id
//! and an optional `+`/`-` sign, separated by ASCII whitespace:
//! `O1 U2 O3 U1 O2 U3`.
//!
//! Polynomials are written in ascending degree, `1+2t+2t^2+t^3`, or in the
//! list form `k:c0,c1,...,cl` giving coefficients from degree `k` upwards.

use std::fmt;

use crate::diagram::{GaussDiagram, Pass, Sign, Strand};
use crate::error::{Error, Result};
use crate::laurent::WarpPoly;

pub fn parse_gauss(text: &str) -> Result<GaussDiagram> {
    let mut passes = Vec::new();
    for (i, tok) in text.split_ascii_whitespace().enumerate() {
        passes.push(parse_pass(tok).ok_or_else(|| Error::Syntax {
            position: i + 1,
            message: format!("bad pass token {tok:?}"),
        })?);
    }
    GaussDiagram::validate(passes)
}

fn parse_pass(tok: &str) -> Option<Pass> {
    let mut chars = tok.chars();
    let strand = match chars.next()? {
        'O' | 'o' => Strand::Over,
        'U' | 'u' => Strand::Under,
        _ => return None,
    };
    let rest = chars.as_str();
    let (digits, sign) = match rest.as_bytes().last()? {
        b'+' => (&rest[..rest.len() - 1], Some(Sign::Plus)),
        b'-' => (&rest[..rest.len() - 1], Some(Sign::Minus)),
        _ => (rest, None),
    };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let crossing: u32 = digits.parse().ok()?;
    if crossing == 0 {
        return None;
    }
    Some(Pass { crossing, strand, sign })
}

/// Space-joined uppercase tokens. The canonical form renumbers crossings
/// by first appearance and picks the least rotation (ordering passes by
/// over before under, then id, then sign).
pub fn format_gauss(d: &GaussDiagram, canonical: bool) -> String {
    if canonical {
        canonical_form(d).to_string()
    } else {
        d.to_string()
    }
}

pub fn canonical_form(d: &GaussDiagram) -> GaussDiagram {
    let n = d.passes().len();
    (0..n.max(1))
        .map(|r| d.rotated(r).renumbered())
        .min_by(|a, b| sort_key(a).cmp(&sort_key(b)))
        .expect("at least one rotation")
}

fn sort_key(d: &GaussDiagram) -> Vec<(Strand, u32, Option<Sign>)> {
    d.passes().iter().map(|p| (p.strand, p.crossing, p.sign)).collect()
}

pub fn parse_poly(text: &str) -> Result<WarpPoly> {
    if text.contains(':') {
        parse_poly_list(text)
    } else {
        parse_poly_terms(text)
    }
}

pub fn format_poly(p: &WarpPoly) -> String {
    p.to_string()
}

/// The list form of `p`, `k:c0,...,cl`.
pub fn format_poly_list(p: &WarpPoly) -> String {
    match (p.ldeg(), p.udeg()) {
        (Ok(lo), Ok(hi)) => {
            let cs: Vec<String> = (lo..=hi).map(|d| p.coeff(d).to_string()).collect();
            format!("{lo}:{}", cs.join(","))
        }
        _ => "0:0".to_string(),
    }
}

fn syntax(position: usize, message: impl Into<String>) -> Error {
    Error::Syntax { position, message: message.into() }
}

fn parse_poly_terms(text: &str) -> Result<WarpPoly> {
    let mut p = WarpPoly::zero();
    let mut offset = 0;
    for raw in text.split('+') {
        let lead = raw.len() - raw.trim_start().len();
        parse_term(raw.trim(), offset + lead, &mut p)?;
        offset += raw.len() + 1;
    }
    Ok(p)
}

fn parse_term(term: &str, at: usize, p: &mut WarpPoly) -> Result<()> {
    if term.is_empty() {
        return Err(syntax(at, "empty term"));
    }
    let (coeff_part, var_part) = match term.find('t') {
        Some(i) => (&term[..i], Some(&term[i + 1..])),
        None => (term, None),
    };
    if coeff_part.starts_with('-') {
        return Err(Error::NegativeCoefficient);
    }
    let coeff = if coeff_part.is_empty() && var_part.is_some() {
        1
    } else {
        parse_uint(coeff_part, at)?
    };
    let degree = match var_part {
        None => 0,
        Some("") => 1,
        Some(rest) => {
            let exp = rest
                .strip_prefix('^')
                .ok_or_else(|| syntax(at + coeff_part.len() + 1, "expected '^' after 't'"))?;
            if exp.starts_with('-') {
                return Err(Error::NegativeDegree);
            }
            parse_uint(exp, at + coeff_part.len() + 2)? as usize
        }
    };
    p.add_term(degree, coeff);
    Ok(())
}

fn parse_uint(s: &str, at: usize) -> Result<u64> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(syntax(at, format!("expected a non-negative integer, found {s:?}")));
    }
    s.parse().map_err(|_| syntax(at, "integer too large"))
}

fn parse_poly_list(text: &str) -> Result<WarpPoly> {
    let text = text.trim();
    let (start, rest) = text.split_once(':').expect("caller checked for ':'");
    let start = start.trim();
    if start.starts_with('-') {
        return Err(Error::NegativeDegree);
    }
    let k = parse_uint(start, 0)? as usize;
    let mut coeffs = Vec::new();
    let mut offset = text.find(':').unwrap() + 1;
    for c in rest.split(',') {
        let trimmed = c.trim();
        if trimmed.starts_with('-') {
            return Err(Error::NegativeCoefficient);
        }
        coeffs.push(parse_uint(trimmed, offset)?);
        offset += c.len() + 1;
    }
    Ok(WarpPoly::from_dense(k, &coeffs))
}

/// A braid word on `n` strands. Letter `w` crosses strand positions `|w|`
/// and `|w| + 1`; positive letters are positive crossings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidWord {
    n: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(n: usize, letters: Vec<i32>) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidBraid(format!("need at least 2 strands, got {n}")));
        }
        if letters.is_empty() {
            return Err(Error::InvalidBraid("empty word".into()));
        }
        if let Some(&w) = letters.iter().find(|&&w| w == 0 || w.unsigned_abs() as usize >= n) {
            return Err(Error::InvalidBraid(format!("generator {w} out of range for {n} strands")));
        }
        Ok(BraidWord { n, letters })
    }

    /// Letters separated by whitespace or commas, e.g. `"1 -2 1"`.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let mut letters = Vec::new();
        for (i, tok) in text.split(|c: char| c.is_ascii_whitespace() || c == ',').filter(|t| !t.is_empty()).enumerate() {
            letters.push(tok.parse().map_err(|_| syntax(i + 1, format!("bad braid letter {tok:?}")))?);
        }
        BraidWord::new(n, letters)
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn mirror(&self) -> Self {
        BraidWord { n: self.n, letters: self.letters.iter().map(|w| -w).collect() }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ls: Vec<String> = self.letters.iter().map(i32::to_string).collect();
        f.write_str(&ls.join(" "))
    }
}

/// Gauss code of the closure of `w`.
///
/// Letter number `s` (1-based) becomes crossing `s`. The strand entering
/// the crossing at the upper position `|w|` passes over for positive
/// letters and under for negative ones. The code starts with the strand
/// that begins at position 1.
pub fn braid_closure(w: &BraidWord) -> Result<GaussDiagram> {
    let n = w.n;
    // strand currently at each position; strands are named by start position
    let mut at: Vec<usize> = (0..n).collect();
    let mut paths: Vec<Vec<Pass>> = vec![Vec::new(); n];
    for (s, &letter) in w.letters.iter().enumerate() {
        let id = s as u32 + 1;
        let upper = letter.unsigned_abs() as usize - 1;
        let sign = if letter > 0 { Sign::Plus } else { Sign::Minus };
        let (top, bottom) = if letter > 0 {
            (Pass::over(id), Pass::under(id))
        } else {
            (Pass::under(id), Pass::over(id))
        };
        paths[at[upper]].push(top.with_sign(Some(sign)));
        paths[at[upper + 1]].push(bottom.with_sign(Some(sign)));
        at.swap(upper, upper + 1);
    }
    let mut ends = vec![0; n];
    for (pos, &strand) in at.iter().enumerate() {
        ends[strand] = pos;
    }
    let mut passes = Vec::with_capacity(2 * w.letters.len());
    let mut cur = 0;
    let mut visited = 0;
    loop {
        passes.extend_from_slice(&paths[cur]);
        visited += 1;
        cur = ends[cur];
        if cur == 0 {
            break;
        }
    }
    if visited != n {
        return Err(Error::NotAKnot);
    }
    GaussDiagram::validate(passes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::warping::diagram_span;

    #[test]
    fn parse_gauss_examples() {
        let t = parse_gauss("O1 U2 O3 U1 O2 U3").unwrap();
        assert_eq!(t.crossing_count(), 3);
        let s = parse_gauss("o1+ u1+").unwrap();
        assert_eq!(s.passes()[0], Pass::over(1).with_sign(Some(Sign::Plus)));
        assert_eq!(s.to_string(), "O1+ U1+");
        assert!(matches!(parse_gauss("O1 X2"), Err(Error::Syntax { position: 2, .. })));
        assert!(matches!(parse_gauss("O0 U0"), Err(Error::Syntax { position: 1, .. })));
        assert!(matches!(parse_gauss("O U1"), Err(Error::Syntax { position: 1, .. })));
        assert!(matches!(parse_gauss("O1+- U1"), Err(Error::Syntax { .. })));
        assert_eq!(parse_gauss("O1 O1"), Err(Error::IdNotPairedOnceOverOnceUnder(1)));
        assert_eq!(parse_gauss("  \t\n").unwrap(), GaussDiagram::empty());
    }

    #[test]
    fn format_gauss_examples() {
        let t = parse_gauss("O1 U2 O3 U1 O2 U3").unwrap();
        assert_eq!(parse_gauss(&format_gauss(&t, false)).unwrap(), t);
        assert_eq!(format_gauss(&parse_gauss("U1 O1").unwrap(), true), "O1 U1");
        assert_eq!(format_gauss(&GaussDiagram::empty(), true), "");
        assert_eq!(format_gauss(&parse_gauss("U9 O4 O9 U4").unwrap(), true), "O1 O2 U1 U2");
    }

    #[test]
    fn braid_closure_examples() {
        let t = braid_closure(&BraidWord::parse(2, "1 1 1").unwrap()).unwrap();
        assert_eq!(format_gauss(&t, true), "O1+ U2+ O3+ U1+ O2+ U3+");
        assert_eq!(diagram_span(&t), Ok(1));
        let w = braid_closure(&BraidWord::parse(3, "1 2 1 2 1 2 1 2").unwrap()).unwrap();
        assert_eq!(w.crossing_count(), 8);
        assert_eq!(diagram_span(&w), Ok(2));
        assert_eq!(braid_closure(&BraidWord::parse(2, "1 1").unwrap()), Err(Error::NotAKnot));
        assert_eq!(braid_closure(&BraidWord::parse(3, "1 1 2").unwrap()), Err(Error::NotAKnot));
    }

    #[test]
    fn braid_word_validation() {
        assert!(BraidWord::parse(2, "2").is_err());
        assert!(BraidWord::parse(2, "0").is_err());
        assert!(BraidWord::parse(1, "1").is_err());
        assert!(BraidWord::parse(3, "").is_err());
        assert!(BraidWord::parse(3, "1 x").is_err());
        assert_eq!(BraidWord::parse(3, "1,-2, 1").unwrap().letters(), &[1, -2, 1]);
    }

    #[test]
    fn parse_poly_examples() {
        let f3 = WarpPoly::from_dense(0, &[1, 2, 2, 1]);
        assert_eq!(parse_poly("1+2t+2t^2+t^3").unwrap(), f3);
        assert_eq!(parse_poly("0:1,2,2,1").unwrap(), f3);
        assert_eq!(parse_poly("3t+3t^2").unwrap(), WarpPoly::from_dense(1, &[3, 3]));
        assert_eq!(parse_poly(" t + t ").unwrap(), WarpPoly::monomial(2, 1));
        assert_eq!(parse_poly("2:1,0,1").unwrap(), WarpPoly::from_dense(2, &[1, 0, 1]));
        assert_eq!(parse_poly("0").unwrap(), WarpPoly::zero());
    }

    #[test]
    fn parse_poly_errors() {
        assert_eq!(parse_poly("-3t"), Err(Error::NegativeCoefficient));
        assert_eq!(parse_poly("t^-1"), Err(Error::NegativeDegree));
        assert_eq!(parse_poly("1:-1"), Err(Error::NegativeCoefficient));
        assert_eq!(parse_poly("-1:1"), Err(Error::NegativeDegree));
        assert!(matches!(parse_poly("1++t"), Err(Error::Syntax { position: 2, .. })));
        assert!(matches!(parse_poly("x"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_poly("2t3"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_poly(""), Err(Error::Syntax { .. })));
    }

    #[test]
    fn poly_list_rendering() {
        assert_eq!(format_poly_list(&WarpPoly::from_dense(1, &[3, 3])), "1:3,3");
        assert_eq!(format_poly(&WarpPoly::from_dense(1, &[3, 3])), "3t+3t^2");
    }
}
