//! Exhaustive oracles over small diagrams.
//!
//! Every Gauss code with `c` crossings is enumerated (ids canonical by first
//! appearance, every over/under assignment, rotations not identified) and
//! the identities satisfied by warping polynomials are checked on each.
//! Work is split by chord word across threads; results are merged in
//! enumeration order, so reports do not depend on the thread count.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::characterize::{one_bridge_diagram, recognize};
use crate::diagram::{GaussDiagram, Pass};
use crate::error::{Error, Result};
use crate::laurent::WarpPoly;
use crate::transform::{connected_sum, insert_kink, insert_kink_over_first, KinkKind};
use crate::warping::{self, degree_at_base, fg_decomposition, WarpLabeling};

pub const DEFAULT_BOUND: usize = 6;
pub const DALT_LIMIT: usize = 20;
/// Connected sums are checked for all pairs of summands up to this size.
pub const CONNECTED_SUM_BOUND: usize = 3;

/// Double-occurrence words on `1..=c` in which ids first appear in order.
pub fn chord_words(c: usize) -> Vec<Vec<u32>> {
    fn extend(word: &mut Vec<u32>, open: &mut Vec<u32>, next: u32, c: u32, out: &mut Vec<Vec<u32>>) {
        if word.len() == 2 * c as usize {
            out.push(word.clone());
            return;
        }
        for idx in 0..open.len() {
            let id = open.remove(idx);
            word.push(id);
            extend(word, open, next, c, out);
            word.pop();
            open.insert(idx, id);
        }
        if next <= c {
            word.push(next);
            open.push(next);
            extend(word, open, next + 1, c, out);
            open.pop();
            word.pop();
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), &mut Vec::new(), 1, c as u32, &mut out);
    out
}

/// All `2^c` over/under assignments of one chord word. Bit `id - 1` of the
/// mask set means the first occurrence of `id` is an under pass.
pub fn assignments(word: &[u32]) -> impl Iterator<Item = GaussDiagram> + '_ {
    let c = word.len() / 2;
    (0u64..1 << c).map(move |mask| {
        let mut seen = 0u64;
        let passes = word
            .iter()
            .map(|&id| {
                let bit = 1u64 << (id - 1);
                let first = seen & bit == 0;
                seen |= bit;
                if (mask & bit == 0) == first {
                    Pass::over(id)
                } else {
                    Pass::under(id)
                }
            })
            .collect();
        GaussDiagram::from_parts_unchecked(passes)
    })
}

pub fn enumerate_diagrams(c: usize) -> Result<impl Iterator<Item = GaussDiagram>> {
    enumerate_diagrams_bounded(c, DEFAULT_BOUND)
}

pub fn enumerate_diagrams_bounded(c: usize, bound: usize) -> Result<impl Iterator<Item = GaussDiagram>> {
    if c > bound {
        return Err(Error::BoundExceeded { c, bound });
    }
    Ok(chord_words(c).into_iter().flat_map(|w| assignments(&w).collect::<Vec<_>>()))
}

/// Fewest crossing changes that make `d` alternating, by trying subsets in
/// order of size.
pub fn dealternating_number(d: &GaussDiagram) -> Result<usize> {
    let c = d.crossing_count();
    if c == 0 {
        return Err(Error::ZeroCrossings);
    }
    if c > DALT_LIMIT {
        return Err(Error::TooLarge { c, limit: DALT_LIMIT });
    }
    // a crossing whose two passes have the same parity can never alternate
    if !d.evenness_lint() {
        return Err(Error::NotAlternatable);
    }
    let ids = d.crossings();
    let n = d.passes().len();
    let over: Vec<bool> = d.passes().iter().map(|p| p.strand.is_over()).collect();
    let slot: Vec<usize> = d.passes().iter().map(|p| ids.iter().position(|&x| x == p.crossing).unwrap()).collect();
    for size in 0..=c {
        for subset in (0u32..1 << c).filter(|s| s.count_ones() as usize == size) {
            let strand = |i: usize| over[i] ^ (subset >> slot[i] & 1 == 1);
            if (0..n).all(|i| strand(i) != strand((i + 1) % n)) {
                return Ok(size);
            }
        }
    }
    Err(Error::NotAlternatable)
}

/// A diagram with `c` crossings and span `s`: a one-bridge diagram with `s`
/// crossings plus `c - s` over-first kinks on the edge labeled 0.
pub fn span_witness(c: usize, s: usize) -> Result<GaussDiagram> {
    if c == 0 && s == 0 {
        return Ok(GaussDiagram::empty());
    }
    if s == 0 || s > c {
        return Err(Error::NotConstructible { c, s });
    }
    let mut d = one_bridge_diagram(s)?;
    for _ in s..c {
        let edge = warping::labeling(&d)?.find(0).ok_or(Error::NoSuchLabel(0))?;
        d = insert_kink_over_first(&d, edge)?;
    }
    Ok(d)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossingRange {
    pub min: usize,
    pub max: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub property: String,
    pub code: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyReport {
    pub crossings_checked: CrossingRange,
    pub diagrams_checked: u64,
    pub violations: Vec<Violation>,
}

impl PropertyReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Property ids with at least one violation, sorted and deduplicated.
    pub fn failed_properties(&self) -> Vec<String> {
        let mut ids: Vec<String> = self.violations.iter().map(|v| v.property.clone()).collect();
        ids.sort();
        ids.dedup();
        ids
    }
}

/// Property ids used in reports.
pub mod property {
    pub const LABELING: &str = "labeling-matches-base-scan";
    pub const REFLECT: &str = "w1-reverse-mirror-reflect";
    pub const EVAL: &str = "w2-eval-minus-one-and-one";
    pub const GAP_FREE: &str = "w3-gap-free";
    pub const LDEG: &str = "w4-ldeg-is-warping-degree";
    pub const SPAN_FORMULA: &str = "w5-span-formula";
    pub const SPAN_SYMMETRY: &str = "w6-span-orientation-mirror";
    pub const ALTERNATING: &str = "w7-alternating-iff-span-one";
    pub const WD_BOUND: &str = "w8-warping-degree-bound";
    pub const PARITY: &str = "w9-odd-even-sums";
    pub const CROSSING_CHANGE: &str = "w10-crossing-change-prediction";
    pub const CC_SPAN: &str = "crossing-change-span-jump";
    pub const MONOTONE: &str = "monotone-iff-constant-term";
    pub const KINK_OVER: &str = "kink-over-first-identity";
    pub const KINK_UNDER: &str = "kink-under-first-identity";
    pub const KINK_LINT: &str = "kink-preserves-evenness";
    pub const SOUNDNESS: &str = "recognize-soundness";
    pub const DALT: &str = "span-dalt-sandwich";
    pub const CONNECTED_SUM: &str = "connected-sum-identity";
    pub const CONNECTED_SPAN: &str = "connected-sum-span-bounds";
    pub const CONNECTED_EQUALITY: &str = "connected-sum-span-equality";
    pub const ALMOST_RANGE: &str = "almost-alternating-span-2-or-3";
    pub const ALMOST_FG: &str = "almost-alternating-fg-criterion";
}

pub type Labeler = fn(&GaussDiagram) -> Result<WarpLabeling>;

/// Runs every property check over all diagrams with at most
/// `max_crossings` crossings. The labeler is pluggable so the harness can be
/// exercised against a broken implementation.
#[derive(Clone, Copy)]
pub struct PropertySuite {
    pub max_crossings: usize,
    pub labeler: Labeler,
}

pub fn run_property_suite(max_crossings: usize) -> Result<PropertyReport> {
    PropertySuite { max_crossings, labeler: warping::labeling }.run()
}

struct Sink<'a> {
    code: &'a GaussDiagram,
    out: Vec<Violation>,
}

impl Sink<'_> {
    fn check(&mut self, ok: bool, property: &str, detail: impl FnOnce() -> String) {
        if !ok {
            self.out.push(Violation { property: property.to_string(), code: self.code.to_string(), detail: detail() });
        }
    }
}

fn brute_min(d: &GaussDiagram) -> usize {
    (0..d.edge_count()).map(|e| degree_at_base(d, e).unwrap()).min().unwrap()
}

fn kink_term(i: usize) -> WarpPoly {
    WarpPoly::from_dense(i, &[1, 1])
}

impl PropertySuite {
    fn poly(&self, d: &GaussDiagram) -> Option<WarpPoly> {
        (self.labeler)(d).ok().map(|l| l.polynomial())
    }

    fn span(&self, d: &GaussDiagram) -> Option<usize> {
        (self.labeler)(d).ok().map(|l| l.span())
    }

    pub fn run(&self) -> Result<PropertyReport> {
        if self.max_crossings > DEFAULT_BOUND {
            return Err(Error::BoundExceeded { c: self.max_crossings, bound: DEFAULT_BOUND });
        }
        let mut violations = Vec::new();
        let mut checked = 0u64;
        for c in 0..=self.max_crossings {
            let words = chord_words(c);
            let per_word: Vec<(u64, Vec<Violation>)> = words
                .par_iter()
                .map(|w| {
                    let mut out = Vec::new();
                    let mut n = 0;
                    for d in assignments(w) {
                        out.extend(self.check_diagram(&d));
                        n += 1;
                    }
                    (n, out)
                })
                .collect();
            for (n, v) in per_word {
                checked += n;
                violations.extend(v);
            }
        }
        violations.extend(self.check_connected_sums(self.max_crossings.min(CONNECTED_SUM_BOUND)));
        Ok(PropertyReport {
            crossings_checked: CrossingRange { min: 0, max: self.max_crossings },
            diagrams_checked: checked,
            violations,
        })
    }

    pub fn check_diagram(&self, d: &GaussDiagram) -> Vec<Violation> {
        use property::*;
        let mut s = Sink { code: d, out: Vec::new() };
        let c = d.crossing_count();
        let lab = match (self.labeler)(d) {
            Ok(l) => l,
            Err(e) => {
                s.check(false, LABELING, || e.to_string());
                return s.out;
            }
        };
        let brute: Vec<usize> = (0..d.edge_count()).map(|e| degree_at_base(d, e).unwrap()).collect();
        s.check(lab.labels() == brute.as_slice(), LABELING, || format!("{:?} vs scan {:?}", lab.labels(), brute));

        let w = lab.polynomial();
        let span = lab.span();
        let d_min = brute_min(d);
        let rev = d.reverse();
        let d_rev = brute_min(&rev);

        let reflected = w.reflect(c).ok();
        let (w_rev, w_mir) = (self.poly(&rev), self.poly(&d.mirror()));
        s.check(reflected.is_some() && w_rev == reflected && w_mir == reflected, REFLECT, || {
            format!("W={w} reverse={w_rev:?} mirror={w_mir:?}")
        });

        if c >= 1 {
            s.check(w.eval(-1) == 0 && w.eval(1) == 2 * c as i128, EVAL, || format!("W={w}"));
            let (even, odd) = w.parity_sums();
            s.check(even == c as u64 && odd == c as u64, PARITY, || format!("W={w} even={even} odd={odd}"));
        } else {
            s.check(w == WarpPoly::one(), EVAL, || format!("W={w} for the crossingless diagram"));
        }
        s.check(w.gap_free() == Ok(true), GAP_FREE, || format!("W={w}"));
        s.check(w.ldeg() == Ok(d_min), LDEG, || format!("ldeg {:?} vs d(D) {d_min}", w.ldeg()));
        s.check(span + d_min + d_rev == c, SPAN_FORMULA, || format!("span {span}, d(D) {d_min}, d(-D) {d_rev}, c {c}"));
        let spans = (self.span(&rev), self.span(&d.mirror()));
        s.check(spans == (Some(span), Some(span)), SPAN_SYMMETRY, || format!("span {span}, reverse/mirror {spans:?}"));

        let alt = d.is_alternating();
        s.check(alt == (span == 1), ALTERNATING, || format!("alternating {alt}, span {span}"));
        if alt {
            let expect = WarpPoly::from_dense(d_min, &[c as u64, c as u64]);
            s.check(w == expect, ALTERNATING, || format!("W={w}, expected {expect}"));
        }
        if c >= 1 {
            let lhs = d_min + d_rev + 1;
            s.check(lhs <= c && (lhs == c) == alt, WD_BOUND, || format!("d+d(-D)+1 = {lhs}, c = {c}, alternating {alt}"));
        }
        s.check((w.eval(0) != 0) == (d_min == 0), MONOTONE, || format!("W(0)={}, d={d_min}", w.eval(0)));
        s.check(recognize(&w).map(|f| f.encode()) == Ok(w.clone()), SOUNDNESS, || format!("W={w}: {:?}", recognize(&w)));

        for x in d.crossings() {
            let changed = d.crossing_change(x).expect("crossing exists");
            let actual = self.poly(&changed);
            let predicted = warping::predict_crossing_change(d, x).ok();
            s.check(actual.is_some() && actual == predicted, CROSSING_CHANGE, || {
                format!("crossing {x}: predicted {predicted:?}, actual {actual:?}")
            });
            if let Some(s2) = self.span(&changed) {
                s.check(s2.abs_diff(span) <= 2, CC_SPAN, || format!("crossing {x}: span {span} -> {s2}"));
            }
        }

        for edge in 0..d.edge_count() {
            let i = lab.get(edge);
            for kind in [KinkKind::OverFirst, KinkKind::UnderFirst] {
                let k = insert_kink(d, edge, kind).expect("edge in range");
                // on the crossingless diagram the kink replaces the only edge
                let (expect, id) = match kind {
                    _ if c == 0 => (kink_term(0), if kind == KinkKind::OverFirst { KINK_OVER } else { KINK_UNDER }),
                    KinkKind::OverFirst => (w.add(&kink_term(i)), KINK_OVER),
                    KinkKind::UnderFirst => (w.shift(1).add(&kink_term(i)), KINK_UNDER),
                };
                let got = self.poly(&k);
                s.check(got.as_ref() == Some(&expect), id, || format!("edge {edge}: expected {expect}, got {got:?}"));
                s.check(k.evenness_lint() == d.evenness_lint(), KINK_LINT, || format!("edge {edge} -> {k}"));
            }
        }

        if c >= 1 {
            match dealternating_number(d) {
                Ok(dalt) => s.check(span <= 2 * dalt + 1 && 2 * dalt <= c, DALT, || format!("span {span}, dalt {dalt}, c {c}")),
                Err(Error::NotAlternatable) => s.check(!d.evenness_lint(), DALT, || "no alternating crossing change set".into()),
                Err(e) => s.check(false, DALT, || e.to_string()),
            }
        }
        s.out
    }

    /// Connected-sum identity, span bounds and the equality criterion for
    /// every pair of diagrams with `1..=max_c` crossings and every edge pair.
    pub fn check_connected_sums(&self, max_c: usize) -> Vec<Violation> {
        let summands: Vec<(GaussDiagram, WarpLabeling)> = (1..=max_c)
            .flat_map(|c| chord_words(c).into_iter().flat_map(|w| assignments(&w).collect::<Vec<_>>()))
            .filter_map(|d| (self.labeler)(&d).ok().map(|l| (d, l)))
            .collect();
        summands
            .par_iter()
            .flat_map_iter(|(d, ld)| summands.iter().flat_map(move |(e, le)| self.check_pair(d, ld, e, le)))
            .collect()
    }

    fn check_pair(&self, d: &GaussDiagram, ld: &WarpLabeling, e: &GaussDiagram, le: &WarpLabeling) -> Vec<Violation> {
        use property::*;
        let wd = ld.polynomial();
        let we = le.polynomial();
        let (sd, se) = (ld.span(), le.span());
        let mut out = Vec::new();
        for jd in 0..d.edge_count() {
            for je in 0..e.edge_count() {
                let sum = connected_sum(d, jd, e, je).expect("valid summands");
                let mut s = Sink { code: &sum, out: Vec::new() };
                let (i, j) = (ld.get(jd), le.get(je));
                let expect = wd.shift(j).add(&we.shift(i));
                let got = self.poly(&sum);
                s.check(got.as_ref() == Some(&expect), CONNECTED_SUM, || {
                    format!("{d} # {e} at ({jd},{je}): expected {expect}, got {got:?}")
                });
                let span = self.span(&sum).unwrap_or(usize::MAX);
                s.check(sd.max(se) <= span && span <= sd + se, CONNECTED_SPAN, || {
                    format!("{d} # {e} at ({jd},{je}): spans {sd}, {se} -> {span}")
                });
                let diff = i as i64 - j as i64;
                let criterion = if sd >= se {
                    ld.min() as i64 - le.min() as i64 <= diff && diff <= ld.max() as i64 - le.max() as i64
                } else {
                    le.min() as i64 - ld.min() as i64 <= -diff && -diff <= le.max() as i64 - ld.max() as i64
                };
                s.check((span == sd.max(se)) == criterion, CONNECTED_EQUALITY, || {
                    format!("{d} # {e} at ({jd},{je}): span {span}, criterion {criterion}")
                });
                out.extend(s.out);
            }
        }
        out
    }
}

/// For every alternating diagram with `1..=max_c` crossings and every
/// crossing, the changed diagram has span 2 or 3, and span 2 exactly when
/// `f` or `g` at that crossing has span 0. A change that leaves the code
/// alternating (only possible with one crossing) is skipped.
pub fn almost_alternating_scan(max_c: usize) -> Result<PropertyReport> {
    use property::*;
    if max_c > DEFAULT_BOUND {
        return Err(Error::BoundExceeded { c: max_c, bound: DEFAULT_BOUND });
    }
    let mut violations = Vec::new();
    let mut checked = 0u64;
    for c in 1..=max_c {
        for d in enumerate_diagrams(c)?.filter(GaussDiagram::is_alternating) {
            checked += 1;
            let mut s = Sink { code: &d, out: Vec::new() };
            for x in d.crossings() {
                let changed = d.crossing_change(x)?;
                if changed.is_alternating() {
                    continue;
                }
                let span = warping::diagram_span(&changed)?;
                let (f, g) = fg_decomposition(&d, x)?;
                let flat = f.span()? == 0 || g.span()? == 0;
                s.check(span == 2 || span == 3, ALMOST_RANGE, || format!("crossing {x}: span {span}"));
                s.check((span == 2) == flat, ALMOST_FG, || format!("crossing {x}: span {span}, f={f}, g={g}"));
            }
            violations.extend(s.out);
        }
    }
    Ok(PropertyReport { crossings_checked: CrossingRange { min: 1, max: max_c }, diagrams_checked: checked, violations })
}
