//! Word-by-word verification of the ascent/descent decomposition claims,
//! Weinbaum factorizations, and exhaustive campaigns over word ranges.

use std::collections::BTreeMap;
use std::path::Path;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::anomaly::{Anomaly, AnomalyKind};
use crate::error::{DecomposeError, OrderError, VerifyError};
use crate::magnus::{MagnusOrder, TruncationPolicy};
use crate::order::{
    check_ascent_hosts, check_overlaps, decompose, maximal_ascent, require_decomposable, Algorithm, Comparator,
    Decomposition, SignCache,
};
use crate::word::{Letter, Word};

pub const REPORT_SCHEMA: &str = "orderword-report-1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Dedup {
    None,
    RotationClass,
}

/// Reduced words of a fixed length, in lexicographic letter order.
///
/// Only reduced sequences are visited; cyclic reduction and the optional
/// class filter are applied on top.
pub struct CyclicallyReducedWords {
    rank: u32,
    alphabet: Vec<Letter>,
    digits: Vec<usize>,
    dedup: Dedup,
    done: bool,
}

impl CyclicallyReducedWords {
    fn new(rank: u32, length: usize, dedup: Dedup) -> Self {
        let alphabet = Letter::alphabet(rank);
        let mut it = Self { rank, alphabet, digits: vec![0; length], dedup, done: length == 0 };
        it.fill_from(0);
        it
    }

    fn allowed(&self, pos: usize, digit: usize) -> bool {
        pos == 0 || self.alphabet[digit] != self.alphabet[self.digits[pos - 1]].inverse()
    }

    fn fill_from(&mut self, pos: usize) {
        for p in pos..self.digits.len() {
            self.digits[p] = (0..self.alphabet.len()).find(|&d| self.allowed(p, d)).expect("alphabet has two letters");
        }
    }

    fn advance(&mut self) {
        for p in (0..self.digits.len()).rev() {
            if let Some(d) = (self.digits[p] + 1..self.alphabet.len()).find(|&d| self.allowed(p, d)) {
                self.digits[p] = d;
                self.fill_from(p + 1);
                return;
            }
        }
        self.done = true;
    }
}

impl Iterator for CyclicallyReducedWords {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        while !self.done {
            let letters: Vec<Letter> = self.digits.iter().map(|&d| self.alphabet[d]).collect();
            self.advance();
            let w = crate::word::reduce(self.rank, &letters).expect("alphabet letters are within rank");
            if !w.is_cyclically_reduced() {
                continue;
            }
            if self.dedup == Dedup::RotationClass && !is_class_representative(&w) {
                continue;
            }
            return Some(w);
        }
        None
    }
}

/// Whether `w` is the spelling-least element of its rotation set.
pub fn is_class_representative(w: &Word) -> bool {
    w.rotation_set().ok().and_then(|s| s.least().cloned()).as_ref() == Some(w)
}

pub fn enumerate_cyclically_reduced(rank: u32, length: usize, dedup: Dedup) -> CyclicallyReducedWords {
    CyclicallyReducedWords::new(rank, length, dedup)
}

/// Number of cyclically reduced words of length `n >= 1` over `rank` generators:
/// `(2k-1)^n + 1 + (k-1)(1 + (-1)^n)`.
pub fn cyclically_reduced_count(rank: u32, length: usize) -> u64 {
    let k = rank as u64;
    let parity = if length % 2 == 0 { 2 } else { 0 };
    (2 * k - 1).pow(length as u32) + 1 + (k - 1) * parity
}

/// How the descent of a decomposition sits relative to the rest of the word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum DescentStatus {
    #[serde(rename = "unique")]
    Unique,
    /// Repeated, and every other placement lies inside the ascent.
    #[serde(rename = "internal_in_A")]
    InternalInA,
    /// Repeated only as a prefix of a rotation of the inverse word.
    #[serde(rename = "inverse_side_only")]
    InverseSideOnly,
    /// Repeated somewhere outside the interior of the ascent.
    #[serde(rename = "outside_A")]
    OutsideA,
    #[serde(rename = "empty")]
    Empty,
}

impl DescentStatus {
    pub fn label(self) -> &'static str {
        match self {
            DescentStatus::Unique => "unique",
            DescentStatus::InternalInA => "internal_in_A",
            DescentStatus::InverseSideOnly => "inverse_side_only",
            DescentStatus::OutsideA => "outside_A",
            DescentStatus::Empty => "empty",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WordReport {
    pub word: Word,
    pub decomposition: Option<Decomposition>,
    pub a_uniquely_positioned: bool,
    pub d_status: DescentStatus,
    pub monotonic: bool,
    pub weinbaum_count: usize,
    pub anomalies: Vec<Anomaly>,
}

impl WordReport {
    pub fn is_clean(&self) -> bool {
        self.anomalies.is_empty()
    }
}

fn undecided(e: OrderError) -> Result<Anomaly, VerifyError> {
    match e {
        e @ OrderError::UndecidedAtCap { .. } => Ok(Anomaly::new(AnomalyKind::OrderUndecided, e.to_string())),
        e => Err(e.into()),
    }
}

/// Runs every per-word check. Violations are collected as anomalies; only
/// precondition failures are returned as errors.
pub fn check_word(w: &Word, cmp: &dyn Comparator, magnus_flag: bool) -> Result<WordReport, VerifyError> {
    require_decomposable(w)?;
    let rotations = w.rotation_set()?;
    let mut report = WordReport {
        word: w.clone(),
        decomposition: None,
        a_uniquely_positioned: false,
        d_status: DescentStatus::Empty,
        monotonic: w.is_monotonic(),
        weinbaum_count: 0,
        anomalies: Vec::new(),
    };

    report.weinbaum_count = weinbaum_factorizations(w)?.len();
    if report.weinbaum_count == 0 {
        report.anomalies.push(Anomaly::new(AnomalyKind::NoWeinbaumFactorization, format!("{w} has no factorization")));
    }

    let d = match decompose(w, cmp) {
        Ok(d) => d,
        Err(DecomposeError::Order(e)) => {
            report.anomalies.push(undecided(e)?);
            return Ok(report);
        }
        Err(
            e @ (DecomposeError::NoRotationStartsWithA { .. }
            | DecomposeError::RemainderNotDescent { .. }
            | DecomposeError::NoAscent(_)),
        ) => {
            report.anomalies.push(Anomaly::new(AnomalyKind::DecompositionFailed, e.to_string()));
            return Ok(report);
        }
        Err(e) => return Err(e.into()),
    };

    // (1) the maximal ascent is a prefix of exactly one rotation.
    report.a_uniquely_positioned = rotations.uniquely_positioned(&d.ascent)?;
    if !report.a_uniquely_positioned {
        report.anomalies.push(Anomaly::new(
            AnomalyKind::AscentNotUniquelyPositioned,
            format!("{} is a prefix of {} rotations", d.ascent, rotations.prefix_count(&d.ascent)),
        ));
    }

    // (2) a repeated descent recurs only strictly inside the ascent.
    report.d_status = descent_status(&d, &mut report.anomalies);

    // (3) empty descent exactly for monotonic words.
    if magnus_flag && d.descent.is_empty() != report.monotonic {
        report.anomalies.push(Anomaly::new(
            AnomalyKind::MonotonicityMismatch,
            format!("descent {:?} but monotonic = {}", d.descent.to_string(), report.monotonic),
        ));
    }

    let mut signs = SignCache::new(cmp);
    match maximal_ascent(w, cmp, Algorithm::BruteForce) {
        Ok(brute) if brute.ascent != d.ascent => report.anomalies.push(Anomaly::new(
            AnomalyKind::AlgorithmsDisagree,
            format!("brute force found {}, peak/low found {}", brute.ascent, d.ascent),
        )),
        Ok(_) => {}
        Err(DecomposeError::Order(e)) => report.anomalies.push(undecided(e)?),
        Err(e) => return Err(e.into()),
    }
    match check_ascent_hosts(&rotations, &d.ascent, &mut signs) {
        Ok(found) => report.anomalies.extend(found),
        Err(DecomposeError::Order(e)) => report.anomalies.push(undecided(e)?),
        Err(e) => return Err(e.into()),
    }
    for r in rotations.iter() {
        match check_overlaps(&r.word, &mut signs) {
            Ok(found) => report.anomalies.extend(found),
            Err(e) => report.anomalies.push(undecided(e)?),
        }
    }

    report.decomposition = Some(d);
    Ok(report)
}

fn descent_status(d: &Decomposition, anomalies: &mut Vec<Anomaly>) -> DescentStatus {
    match d.descent_unique {
        None => DescentStatus::Empty,
        Some(true) => DescentStatus::Unique,
        Some(false) => {
            let n = d.chosen.len();
            let (a_len, d_len) = (d.ascent.len(), d.descent.len());
            let others: Vec<usize> =
                (0..n).filter(|&i| i != a_len && d.chosen.rotate(i).starts_with(&d.descent)).collect();
            let outside: Vec<usize> = others.iter().copied().filter(|&i| i == 0 || i + d_len >= a_len).collect();
            if !outside.is_empty() {
                anomalies.push(Anomaly::new(
                    AnomalyKind::DescentNotInternal,
                    format!("{} recurs in {} at cyclic positions {outside:?}, outside the interior of {}", d.descent, d.chosen, d.ascent),
                ));
                DescentStatus::OutsideA
            } else if others.is_empty() {
                DescentStatus::InverseSideOnly
            } else {
                DescentStatus::InternalInA
            }
        }
    }
}

/// Splits `UV` of cyclic permutations of `w` with both `U` and `V` uniquely
/// positioned, ordered by rotation offset and then split point.
pub fn weinbaum_factorizations(w: &Word) -> Result<Vec<(Word, Word)>, VerifyError> {
    require_decomposable(w)?;
    let rotations = w.rotation_set()?;
    let mut out = Vec::new();
    for offset in 0..w.len() {
        let r = w.rotate(offset);
        for split in 1..r.len() {
            let (u, v) = (r.prefix(split), r.suffix_from(split));
            if rotations.uniquely_positioned(&u)? && rotations.uniquely_positioned(&v)? {
                out.push((u, v));
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CampaignConfig {
    pub rank: u32,
    pub min_len: usize,
    pub max_len: usize,
    /// Magnus variable precedence; the identity permutation is the canonical order.
    pub precedence: Vec<u32>,
    pub policy: TruncationPolicy,
    pub workers: usize,
    pub dedup: Dedup,
}

impl CampaignConfig {
    pub fn new(rank: u32, min_len: usize, max_len: usize) -> Self {
        Self {
            rank,
            min_len,
            max_len,
            precedence: (1..=rank).collect(),
            policy: TruncationPolicy::default(),
            workers: std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1),
            dedup: Dedup::RotationClass,
        }
    }

    pub fn swapped(mut self) -> Self {
        self.precedence.reverse();
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ChecksRun {
    pub unique_ascent: bool,
    pub internal_descent: bool,
    pub monotonic_iff_empty_descent: bool,
    pub ascent_hosts: bool,
    pub overlaps: bool,
    pub algorithm_agreement: bool,
    pub weinbaum: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LengthSummary {
    pub length: usize,
    pub cyclically_reduced: u64,
    pub nonperiodic: u64,
    pub checked: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CampaignReport {
    pub schema: String,
    pub rank: u32,
    pub min_len: usize,
    pub max_len: usize,
    pub order: String,
    pub dedup: Dedup,
    pub checks: ChecksRun,
    pub words_checked: u64,
    pub nonperiodic_count: u64,
    pub cyclically_reduced_count: u64,
    pub per_length: Vec<LengthSummary>,
    pub anomaly_count: u64,
    pub anomalies_by_kind: BTreeMap<String, u64>,
    pub descent_status_counts: BTreeMap<String, u64>,
    /// Keyed by `|D|/|W'|`.
    pub descent_ratio_histogram: BTreeMap<String, u64>,
    pub weinbaum_min_count: Option<usize>,
    pub counterexamples: Vec<WordReport>,
    pub duration_seconds: f64,
}

impl CampaignReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn write_to(&self, path: &Path) -> Result<(), VerifyError> {
        std::fs::write(path, self.to_json())
            .map_err(|source| VerifyError::Io { path: path.display().to_string(), source })
    }
}

/// Checks every nonperiodic cyclically reduced word in the length range.
///
/// Report content apart from `duration_seconds` does not depend on the
/// number of workers.
pub fn run_campaign(config: &CampaignConfig, output: Option<&Path>) -> Result<CampaignReport, VerifyError> {
    if config.min_len == 0 || config.min_len > config.max_len {
        return Err(VerifyError::InvalidRange { min_len: config.min_len, max_len: config.max_len });
    }
    let started = Instant::now();
    let order = MagnusOrder::with_precedence(config.rank, config.precedence.clone())?.with_policy(config.policy);
    let magnus_flag = order.is_canonical();

    let mut per_length = Vec::new();
    let mut selected = Vec::new();
    for length in config.min_len..=config.max_len {
        let mut summary = LengthSummary { length, cyclically_reduced: 0, nonperiodic: 0, checked: 0 };
        for w in enumerate_cyclically_reduced(config.rank, length, Dedup::None) {
            summary.cyclically_reduced += 1;
            if w.is_periodic()? {
                continue;
            }
            summary.nonperiodic += 1;
            if length < 2 {
                continue;
            }
            if config.dedup == Dedup::None || is_class_representative(&w) {
                summary.checked += 1;
                selected.push(w);
            }
        }
        per_length.push(summary);
    }

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers.max(1))
        .build()
        .map_err(|e| VerifyError::Io { path: "<worker pool>".into(), source: std::io::Error::other(e) })?;
    let reports: Vec<WordReport> = pool.install(|| {
        selected
            .par_iter()
            .map(|w| check_word(w, &order, magnus_flag))
            .collect::<Result<Vec<_>, _>>()
    })?;

    let mut anomalies_by_kind = BTreeMap::new();
    let mut descent_status_counts = BTreeMap::new();
    let mut descent_ratio_histogram = BTreeMap::new();
    let mut counterexamples = Vec::new();
    let mut anomaly_count = 0;
    for r in &reports {
        *descent_status_counts.entry(r.d_status.label().to_string()).or_insert(0) += 1;
        if let Some(d) = &r.decomposition {
            *descent_ratio_histogram.entry(format!("{}/{}", d.descent.len(), d.chosen.len())).or_insert(0) += 1;
        }
        for a in &r.anomalies {
            *anomalies_by_kind.entry(a.kind.label().to_string()).or_insert(0) += 1;
            anomaly_count += 1;
        }
        if !r.is_clean() {
            counterexamples.push(r.clone());
        }
    }

    let report = CampaignReport {
        schema: REPORT_SCHEMA.to_string(),
        rank: config.rank,
        min_len: config.min_len,
        max_len: config.max_len,
        order: order.describe(),
        dedup: config.dedup,
        checks: ChecksRun {
            unique_ascent: true,
            internal_descent: true,
            monotonic_iff_empty_descent: magnus_flag,
            ascent_hosts: true,
            overlaps: true,
            algorithm_agreement: true,
            weinbaum: true,
        },
        words_checked: reports.len() as u64,
        nonperiodic_count: per_length.iter().map(|l| l.nonperiodic).sum(),
        cyclically_reduced_count: per_length.iter().map(|l| l.cyclically_reduced).sum(),
        per_length,
        anomaly_count,
        anomalies_by_kind,
        descent_status_counts,
        descent_ratio_histogram,
        weinbaum_min_count: reports.iter().map(|r| r.weinbaum_count).min(),
        counterexamples,
        duration_seconds: started.elapsed().as_secs_f64(),
    };
    if let Some(path) = output {
        report.write_to(path)?;
    }
    Ok(report)
}
