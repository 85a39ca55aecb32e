//! Degree sequences of iterates and their growth classification.
//!
//! Boundedness of `deg(f^m)` characterizes maps lying in an algebraic
//! subgroup, but no finite computation certifies boundedness for an
//! arbitrary map. Everything here is therefore truncated at a horizon and
//! labelled as evidence: a trailing constant window reports `Bounded`, a
//! trailing constant positive difference reports `Linear`, and anything
//! else stays `Undetermined` rather than guessing.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ratmap::RationalMap;

/// Default truncation horizon for degree sequences.
pub const DEFAULT_HORIZON: usize = 16;
/// Default trailing-window length for growth classification.
pub const DEFAULT_WINDOW: usize = 5;

/// The exact degrees of the cancelled iterates `f, f^2, ..., f^M`;
/// entry `m - 1` is `deg(f^m)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DegreeSequence {
    map: RationalMap,
    degrees: Vec<usize>,
}

impl DegreeSequence {
    pub fn map(&self) -> &RationalMap {
        &self.map
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn max_degree(&self) -> usize {
        self.degrees.iter().copied().max().unwrap_or(0)
    }
}

/// Growth classification of a truncated degree sequence.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum GrowthClass {
    /// The trailing window is constant; `max` is the maximum over the whole
    /// computed sequence.
    Bounded { max: usize },
    /// The trailing first differences are a positive constant `slope`, with
    /// `deg(f^m) = slope * m + intercept` on the window.
    Linear { slope: i64, intercept: i64 },
    /// Neither pattern held over the window.
    Undetermined { window: usize },
}

/// JSON view of a sequence and its classification:
/// `{"degrees":[...],"classification":{...}}`.
#[derive(Serialize)]
pub struct GrowthReport<'a> {
    pub degrees: &'a [usize],
    pub classification: &'a GrowthClass,
}

/// Computes `deg(f^m)` for `m = 1..=horizon` by incremental composition,
/// cancelling at every step.
pub fn degree_sequence(f: &RationalMap, horizon: usize) -> Result<DegreeSequence> {
    if horizon == 0 {
        return Err(Error::InvalidArgument("horizon must be at least 1".into()));
    }
    let mut degrees = Vec::with_capacity(horizon);
    let mut acc = f.clone();
    degrees.push(acc.degree());
    for _ in 1..horizon {
        acc = f.compose(&acc)?;
        degrees.push(acc.degree());
    }
    Ok(DegreeSequence {
        map: f.clone(),
        degrees,
    })
}

/// Classifies the trailing behaviour of a degree sequence.
///
/// `Bounded` requires the last `window` entries to be equal; `Linear`
/// requires the last `window` first differences (or all of them, if the
/// sequence is exactly `window` long) to be equal and positive.
pub fn classify_growth(seq: &DegreeSequence, window: usize) -> Result<GrowthClass> {
    if window < 2 {
        return Err(Error::InvalidArgument("window must be at least 2".into()));
    }
    let degrees = seq.degrees();
    let len = degrees.len();
    if window > len {
        return Err(Error::WindowTooLarge { window, len });
    }
    let tail = &degrees[len - window..];
    if tail.iter().all(|&d| d == tail[0]) {
        return Ok(GrowthClass::Bounded {
            max: seq.max_degree(),
        });
    }
    let diff_count = window.min(len - 1);
    let diffs: Vec<i64> = degrees[len - diff_count - 1..]
        .windows(2)
        .map(|w| w[1] as i64 - w[0] as i64)
        .collect();
    if diffs.iter().all(|&d| d == diffs[0]) && diffs[0] > 0 {
        let slope = diffs[0];
        let intercept = degrees[len - 1] as i64 - slope * len as i64;
        return Ok(GrowthClass::Linear { slope, intercept });
    }
    Ok(GrowthClass::Undetermined { window })
}

/// Membership in `{f : deg(f^k) <= d}`.
pub fn in_bir_k_d(f: &RationalMap, k: usize, d: usize) -> Result<bool> {
    Ok(f.power(k)?.degree() <= d)
}

/// Truncated membership in `{f : deg(f^i) <= d for all i}`: checks
/// `i = 1..=horizon` only, so `true` is evidence rather than proof, while
/// `false` is conclusive.
pub fn in_bir_inf_d_truncated(f: &RationalMap, d: usize, horizon: usize) -> Result<bool> {
    Ok(degree_sequence(f, horizon)?
        .degrees()
        .iter()
        .all(|&deg| deg <= d))
}

/// Verdict of the truncated algebraicity test.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    AlgebraicEvidence,
    NotAlgebraicEvidence,
    Inconclusive,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Verdict::AlgebraicEvidence => "algebraic_evidence",
            Verdict::NotAlgebraicEvidence => "not_algebraic_evidence",
            Verdict::Inconclusive => "inconclusive",
        };
        write!(f, "{s}")
    }
}

/// Outcome of [`is_algebraic_heuristic`]: the verdict together with the
/// sequence and classification that produced it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlgebraicityReport {
    pub verdict: Verdict,
    pub sequence: DegreeSequence,
    pub growth: GrowthClass,
}

/// Truncated form of the bounded-degree criterion: a bounded window is
/// evidence the map is algebraic, a strictly growing one is evidence it is
/// not, anything else is inconclusive.
pub fn is_algebraic_heuristic(
    f: &RationalMap,
    horizon: usize,
    window: usize,
) -> Result<AlgebraicityReport> {
    let sequence = degree_sequence(f, horizon)?;
    let growth = classify_growth(&sequence, window)?;
    let verdict = match growth {
        GrowthClass::Bounded { .. } => Verdict::AlgebraicEvidence,
        GrowthClass::Linear { .. } => Verdict::NotAlgebraicEvidence,
        GrowthClass::Undetermined { .. } => Verdict::Inconclusive,
    };
    Ok(AlgebraicityReport {
        verdict,
        sequence,
        growth,
    })
}
