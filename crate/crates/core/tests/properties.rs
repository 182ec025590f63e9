//! Randomized invariants on codes larger than the exhaustive range.

use proptest::prelude::*;

use warp_core::characterize::{recognize, witness, CharForm};
use warp_core::notation::{canonical_form, format_gauss, format_poly, parse_gauss, parse_poly};
use warp_core::transform::{connected_sum, insert_kink_over_first, insert_kink_under_first};
use warp_core::warping::{degree_at_base, diagram_span, labeling, polynomial, predict_crossing_change};
use warp_core::{GaussDiagram, Pass, WarpPoly};

/// A random Gauss code: a shuffled double-occurrence word with random
/// over/under choices and random (non-consecutive) crossing ids.
fn gauss_code(max_c: usize) -> impl Strategy<Value = GaussDiagram> {
    (0..=max_c)
        .prop_flat_map(|c| {
            let word: Vec<u32> = (1..=c as u32).flat_map(|i| [i, i]).collect();
            (Just(word).prop_shuffle(), proptest::collection::vec(any::<bool>(), c), 1u32..5)
        })
        .prop_map(|(word, over_first, stride)| {
            let mut seen = vec![false; over_first.len() + 1];
            let passes = word
                .iter()
                .map(|&id| {
                    let first = !seen[id as usize];
                    seen[id as usize] = true;
                    let over = first == over_first[id as usize - 1];
                    let id = id * stride;
                    if over {
                        Pass::over(id)
                    } else {
                        Pass::under(id)
                    }
                })
                .collect();
            GaussDiagram::validate(passes).unwrap()
        })
}

fn char_form() -> impl Strategy<Value = CharForm> {
    proptest::collection::vec(1u64..5, 1..6).prop_flat_map(|m| {
        let slack = m.iter().sum::<u64>() as usize - m.len();
        (0..=slack).prop_map(move |k| CharForm::new(k, m.clone()).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn symmetries_are_commuting_involutions(d in gauss_code(10)) {
        prop_assert_eq!(d.mirror().mirror(), d.clone());
        prop_assert_eq!(d.reverse().reverse(), d.clone());
        prop_assert_eq!(d.mirror().reverse(), d.reverse().mirror());
        for x in d.crossings() {
            prop_assert_eq!(d.crossing_change(x).unwrap().crossing_change(x).unwrap(), d.clone());
        }
    }

    #[test]
    fn labeling_matches_base_scan(d in gauss_code(12)) {
        let lab = labeling(&d).unwrap();
        for e in 0..d.edge_count() {
            prop_assert_eq!(lab.get(e), degree_at_base(&d, e).unwrap());
        }
    }

    #[test]
    fn polynomial_identities(d in gauss_code(12)) {
        let c = d.crossing_count();
        let w = polynomial(&d).unwrap();
        prop_assert_eq!(polynomial(&d.reverse()).unwrap(), w.reflect(c).unwrap());
        prop_assert_eq!(polynomial(&d.mirror()).unwrap(), w.reflect(c).unwrap());
        prop_assert_eq!(w.gap_free(), Ok(true));
        prop_assert!(recognize(&w).is_ok());
        if c > 0 {
            prop_assert_eq!(w.eval(-1), 0);
            prop_assert_eq!(w.eval(1), 2 * c as i128);
            prop_assert_eq!(d.is_alternating(), diagram_span(&d).unwrap() == 1);
        }
    }

    #[test]
    fn crossing_change_prediction(d in gauss_code(10)) {
        let span = diagram_span(&d).unwrap();
        for x in d.crossings() {
            let changed = d.crossing_change(x).unwrap();
            prop_assert_eq!(predict_crossing_change(&d, x).unwrap(), polynomial(&changed).unwrap());
            prop_assert!(diagram_span(&changed).unwrap().abs_diff(span) <= 2);
        }
    }

    #[test]
    fn kink_identities(d in gauss_code(10).prop_filter("needs a crossing", |d| d.crossing_count() > 0), pick in any::<prop::sample::Index>()) {
        let w = polynomial(&d).unwrap();
        let edge = pick.index(d.edge_count());
        let i = labeling(&d).unwrap().get(edge);
        let kink = WarpPoly::from_dense(i, &[1, 1]);
        prop_assert_eq!(polynomial(&insert_kink_over_first(&d, edge).unwrap()).unwrap(), w.add(&kink));
        prop_assert_eq!(polynomial(&insert_kink_under_first(&d, edge).unwrap()).unwrap(), w.shift(1).add(&kink));
    }

    #[test]
    fn connected_sum_identity(
        d in gauss_code(6).prop_filter("nonempty", |d| d.crossing_count() > 0),
        e in gauss_code(6).prop_filter("nonempty", |d| d.crossing_count() > 0),
        a in any::<prop::sample::Index>(),
        b in any::<prop::sample::Index>(),
    ) {
        let (jd, je) = (a.index(d.edge_count()), b.index(e.edge_count()));
        let (i, j) = (labeling(&d).unwrap().get(jd), labeling(&e).unwrap().get(je));
        let sum = connected_sum(&d, jd, &e, je).unwrap();
        let expect = polynomial(&d).unwrap().shift(j).add(&polynomial(&e).unwrap().shift(i));
        prop_assert_eq!(polynomial(&sum).unwrap(), expect);
    }

    #[test]
    fn gauss_text_round_trip(d in gauss_code(10)) {
        prop_assert_eq!(parse_gauss(&format_gauss(&d, false)).unwrap(), d.clone());
        let canon = canonical_form(&d);
        prop_assert_eq!(polynomial(&canon).unwrap(), polynomial(&d).unwrap());
        if d.crossing_count() > 0 {
            let rotated = d.rotated(3 % d.passes().len());
            prop_assert_eq!(canonical_form(&rotated), canon);
        }
    }

    #[test]
    fn poly_text_round_trip(coeffs in proptest::collection::vec(0u64..20, 1..8), start in 0usize..6) {
        let p = WarpPoly::from_dense(start, &coeffs);
        prop_assert_eq!(parse_poly(&format_poly(&p)).unwrap(), p.clone());
        prop_assert_eq!(parse_poly(&warp_core::notation::format_poly_list(&p)).unwrap(), p);
    }

    #[test]
    fn forms_round_trip_and_realize(form in char_form()) {
        let p = form.encode();
        prop_assert_eq!(recognize(&p), Ok(form.clone()));
        let d = witness(&form).unwrap();
        prop_assert_eq!(polynomial(&d).unwrap(), p);
        prop_assert!(d.evenness_lint());
    }
}
