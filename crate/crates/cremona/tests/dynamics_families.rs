//! Cross-module checks: the degree-sequence route against the closed-form
//! route, and soundness of the growth heuristic against the exact
//! parameter classification.

mod common;

use common::*;
use cremona::dynamics::{degree_sequence, is_algebraic_heuristic, Verdict};
use cremona::families::{
    semisimple_classify, semisimple_iterate, semisimple_map, unipotent_classify,
    unipotent_iterate, unipotent_map, ParamClassification,
};

/// The sequence computed by repeated composition agrees, degree by degree,
/// with the closed-form iterate.
#[test]
fn degree_sequence_matches_closed_form_degrees() {
    let horizon = 8;
    for p in unipotent_grid_q(2).iter().chain(&unipotent_grid_f5(2)) {
        let seq = degree_sequence(&unipotent_map(p), horizon).unwrap();
        for m in 1..=horizon {
            assert_eq!(
                seq.degrees()[m - 1],
                unipotent_iterate(p, m).unwrap().degree(),
                "t = {}, m = {m}",
                p.t()
            );
        }
    }
    for p in semisimple_grid_q(2).iter().chain(&semisimple_grid_f5(2)) {
        let seq = degree_sequence(&semisimple_map(p), horizon).unwrap();
        for m in 1..=horizon {
            assert_eq!(
                seq.degrees()[m - 1],
                semisimple_iterate(p, m).unwrap().degree(),
                "a = {}, xi = {}, m = {m}",
                p.a(),
                p.xi()
            );
        }
    }
}

/// The truncated heuristic never contradicts the exact classification:
/// bounded evidence only for algebraic parameters, strictly-growing
/// evidence only for non-algebraic ones. (Inconclusive is always allowed;
/// over F_p the bounded sequences are periodic rather than eventually
/// constant, which the trailing-window classifier declines to call.)
#[test]
fn heuristic_verdicts_are_sound_on_the_families() {
    let horizon = 14;
    let window = 5;
    for p in unipotent_grid_q(2).iter().chain(&unipotent_grid_f5(2)) {
        let exact = unipotent_classify(p, 64);
        let report = is_algebraic_heuristic(&unipotent_map(p), horizon, window).unwrap();
        check_sound(&exact, report.verdict, &format!("t = {}", p.t()));
    }
    for p in semisimple_grid_q(2).iter().chain(&semisimple_grid_f5(2)) {
        let exact = semisimple_classify(p, 64);
        let report = is_algebraic_heuristic(&semisimple_map(p), horizon, window).unwrap();
        check_sound(
            &exact,
            report.verdict,
            &format!("a = {}, xi = {}", p.a(), p.xi()),
        );
    }
}

fn check_sound(exact: &ParamClassification, verdict: Verdict, label: &str) {
    match verdict {
        Verdict::AlgebraicEvidence => {
            assert!(
                matches!(exact, ParamClassification::Algebraic { .. }),
                "{label}: bounded evidence for a non-algebraic parameter"
            );
        }
        Verdict::NotAlgebraicEvidence => {
            assert!(
                matches!(exact, ParamClassification::NotAlgebraic),
                "{label}: growth evidence for an algebraic parameter"
            );
        }
        Verdict::Inconclusive => {}
    }
}

/// Where the sequence is eventually constant or exactly linear the
/// heuristic is not just sound but decisive: every unipotent rational
/// parameter, and every semi-simple one with xi not a root of unity.
/// (Root-of-unity xi gives periodic sequences, e.g. the involution at
/// a = xi = -1 has degrees 2, 1, 2, 1, ..., which stay Inconclusive.)
#[test]
fn heuristic_is_decisive_over_the_rationals() {
    for p in unipotent_grid_q(2) {
        let report = is_algebraic_heuristic(&unipotent_map(&p), 14, 5).unwrap();
        let expected = match unipotent_classify(&p, 64) {
            ParamClassification::Algebraic { .. } => Verdict::AlgebraicEvidence,
            ParamClassification::NotAlgebraic => Verdict::NotAlgebraicEvidence,
            ParamClassification::SearchExhausted { .. } => continue,
        };
        assert_eq!(report.verdict, expected, "t = {}", p.t());
    }
    for p in semisimple_grid_q(2) {
        if p.xi().abs().is_one() {
            continue;
        }
        let report = is_algebraic_heuristic(&semisimple_map(&p), 14, 5).unwrap();
        let expected = match semisimple_classify(&p, 64) {
            ParamClassification::Algebraic { .. } => Verdict::AlgebraicEvidence,
            ParamClassification::NotAlgebraic => Verdict::NotAlgebraicEvidence,
            ParamClassification::SearchExhausted { .. } => continue,
        };
        assert_eq!(report.verdict, expected, "a = {}, xi = {}", p.a(), p.xi());
    }
    // the involution itself: bounded in truth, inconclusive by design
    let inv = semi(2, "-1", "-1");
    let report = is_algebraic_heuristic(&semisimple_map(&inv), 14, 5).unwrap();
    assert_eq!(report.verdict, Verdict::Inconclusive);
    assert_eq!(report.sequence.max_degree(), 2);
}
