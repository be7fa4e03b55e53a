use std::fmt;

use serde::Serialize;

/// Which claim a failed check belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AnomalyKind {
    /// The maximal ascent is a prefix of more than one rotation.
    AscentNotUniquelyPositioned,
    /// A repeated descent occurs outside the interior of the ascent.
    DescentNotInternal,
    /// Empty descent does not coincide with monotonicity.
    MonotonicityMismatch,
    /// No decomposition could be produced.
    DecompositionFailed,
    /// The two maximal-ascent searches returned different words.
    AlgorithmsDisagree,
    AscentHostNotPositive,
    PeakIsNotLowTimesAscent,
    AscentRepeatedInHost,
    AscentInInverseHost,
    RemainderNotDescent,
    OverlapOfAscentsNotAscent,
    AscentOverlapsDescent,
    NoWeinbaumFactorization,
    /// The comparator failed to decide.
    OrderUndecided,
}

impl AnomalyKind {
    pub fn label(self) -> &'static str {
        match self {
            AnomalyKind::AscentNotUniquelyPositioned => "ascent_not_uniquely_positioned",
            AnomalyKind::DescentNotInternal => "descent_not_internal",
            AnomalyKind::MonotonicityMismatch => "monotonicity_mismatch",
            AnomalyKind::DecompositionFailed => "decomposition_failed",
            AnomalyKind::AlgorithmsDisagree => "algorithms_disagree",
            AnomalyKind::AscentHostNotPositive => "ascent_host_not_positive",
            AnomalyKind::PeakIsNotLowTimesAscent => "peak_is_not_low_times_ascent",
            AnomalyKind::AscentRepeatedInHost => "ascent_repeated_in_host",
            AnomalyKind::AscentInInverseHost => "ascent_in_inverse_host",
            AnomalyKind::RemainderNotDescent => "remainder_not_descent",
            AnomalyKind::OverlapOfAscentsNotAscent => "overlap_of_ascents_not_ascent",
            AnomalyKind::AscentOverlapsDescent => "ascent_overlaps_descent",
            AnomalyKind::NoWeinbaumFactorization => "no_weinbaum_factorization",
            AnomalyKind::OrderUndecided => "order_undecided",
        }
    }
}

impl fmt::Display for AnomalyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Anomaly {
    pub kind: AnomalyKind,
    pub detail: String,
}

impl Anomaly {
    pub fn new(kind: AnomalyKind, detail: impl Into<String>) -> Self {
        Self { kind, detail: detail.into() }
    }
}

impl fmt::Display for Anomaly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.kind, self.detail)
    }
}
