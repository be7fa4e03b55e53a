//! Ascents, descents, prefix peaks and lows, and the decomposition of a
//! nonperiodic word into its maximal ascent followed by a descent.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};

use serde::Serialize;

use crate::anomaly::{Anomaly, AnomalyKind};
use crate::error::{DecomposeError, OrderError};
use crate::word::{Occurrence, Origin, Rotation, RotationSet, Word};

/// A bi-invariant total order on the words of a free group.
///
/// Implementations must be consistent with word equality and invariant
/// under left and right multiplication.
pub trait Comparator: Send + Sync {
    fn compare(&self, v: &Word, w: &Word) -> Result<Ordering, OrderError>;

    /// Position of `w` relative to the identity.
    fn sign(&self, w: &Word) -> Result<Ordering, OrderError> {
        self.compare(w, &Word::identity(w.rank()))
    }

    /// Indices `(peak, low)` of the largest and smallest prefix of `w`,
    /// prefixes being indexed by length.
    fn prefix_extrema(&self, w: &Word) -> Result<(usize, usize), OrderError> {
        let prefixes: Vec<Word> = (0..=w.len()).map(|i| w.prefix(i)).collect();
        let (mut peak, mut low) = (0, 0);
        for i in 1..prefixes.len() {
            if self.compare(&prefixes[i], &prefixes[peak])?.is_gt() {
                peak = i;
            }
            if self.compare(&prefixes[i], &prefixes[low])?.is_lt() {
                low = i;
            }
        }
        Ok((peak, low))
    }

    fn describe(&self) -> String;
}

/// Memoized signs for one comparator; words recur heavily as subwords.
pub struct SignCache<'c> {
    cmp: &'c dyn Comparator,
    signs: HashMap<Word, Ordering>,
}

impl<'c> SignCache<'c> {
    pub fn new(cmp: &'c dyn Comparator) -> Self {
        Self { cmp, signs: HashMap::new() }
    }

    pub fn comparator(&self) -> &'c dyn Comparator {
        self.cmp
    }

    pub fn sign(&mut self, w: &Word) -> Result<Ordering, OrderError> {
        if let Some(&s) = self.signs.get(w) {
            return Ok(s);
        }
        let s = self.cmp.sign(w)?;
        self.signs.insert(w.clone(), s);
        Ok(s)
    }

    fn all_prefixes_and_suffixes(&mut self, u: &Word, want: Ordering) -> Result<bool, OrderError> {
        if u.is_empty() {
            return Ok(false);
        }
        for i in 1..=u.len() {
            if self.sign(&u.prefix(i))? != want {
                return Ok(false);
            }
        }
        for i in 1..u.len() {
            if self.sign(&u.suffix_from(i))? != want {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn is_ascent(&mut self, u: &Word) -> Result<bool, OrderError> {
        self.all_prefixes_and_suffixes(u, Ordering::Greater)
    }

    pub fn is_descent(&mut self, u: &Word) -> Result<bool, OrderError> {
        self.all_prefixes_and_suffixes(u, Ordering::Less)
    }
}

/// Every nonempty prefix and suffix of `u` lies above the identity. The
/// identity itself is never an ascent.
pub fn is_ascent(u: &Word, cmp: &dyn Comparator) -> Result<bool, OrderError> {
    SignCache::new(cmp).is_ascent(u)
}

/// Every nonempty prefix and suffix of `u` lies below the identity.
pub fn is_descent(u: &Word, cmp: &dyn Comparator) -> Result<bool, OrderError> {
    SignCache::new(cmp).is_descent(u)
}

/// Peak and low among the `n + 1` prefixes `g_0 = 1, ..., g_n = host`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrefixProfile {
    pub host: Word,
    pub peak_index: usize,
    pub low_index: usize,
}

impl PrefixProfile {
    pub fn peak(&self) -> Word {
        self.host.prefix(self.peak_index)
    }

    pub fn low(&self) -> Word {
        self.host.prefix(self.low_index)
    }

    /// Only the empty prefix exists, so peak and low coincide.
    pub fn is_degenerate(&self) -> bool {
        self.host.is_empty()
    }

    /// `low^-1 * peak` when the low comes first; this slice is an ascent.
    pub fn ascent_candidate(&self) -> Option<Word> {
        (self.low_index < self.peak_index).then(|| self.host.slice(self.low_index, self.peak_index))
    }
}

pub fn prefix_profile(w: &Word, cmp: &dyn Comparator) -> Result<PrefixProfile, OrderError> {
    let (peak_index, low_index) = cmp.prefix_extrema(w)?;
    Ok(PrefixProfile { host: w.clone(), peak_index, low_index })
}

/// How [`maximal_ascent`] searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Algorithm {
    /// Every subword of every rotation, filtered by the ascent test.
    BruteForce,
    /// One candidate `low^-1 * peak` per rotation.
    PeakLow,
}

/// A positioned occurrence inside a specific element of a rotation set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RotationOccurrence {
    pub rotation: usize,
    pub occurrence: Occurrence,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaximalAscent {
    pub ascent: Word,
    /// First rotation (in rotation-set order) containing the ascent.
    pub host: Rotation,
    pub host_index: usize,
    /// Every occurrence of the ascent across all rotations.
    pub occurrences: Vec<RotationOccurrence>,
}

fn max_by_order(candidates: impl IntoIterator<Item = Word>, cmp: &dyn Comparator) -> Result<Option<Word>, OrderError> {
    let mut best: Option<Word> = None;
    for c in candidates {
        best = match best {
            Some(b) if cmp.compare(&c, &b)?.is_gt() => Some(c),
            Some(b) => Some(b),
            None => Some(c),
        };
    }
    Ok(best)
}

/// The greatest ascent among all subwords of the rotations of `w` and `w^-1`.
pub fn maximal_ascent(w: &Word, cmp: &dyn Comparator, algorithm: Algorithm) -> Result<MaximalAscent, DecomposeError> {
    if w.is_empty() {
        return Err(DecomposeError::Word(crate::error::WordError::EmptyWord));
    }
    let rotations = w.rotation_set()?;
    let ascent = match algorithm {
        Algorithm::BruteForce => {
            let mut seen = HashSet::new();
            let mut signs = SignCache::new(cmp);
            let mut ascents = Vec::new();
            for r in rotations.iter() {
                let n = r.word.len();
                for start in 0..n {
                    for end in start + 1..=n {
                        let u = r.word.slice(start, end);
                        if seen.insert(u.clone()) && signs.is_ascent(&u)? {
                            ascents.push(u);
                        }
                    }
                }
            }
            max_by_order(ascents, cmp)?
        }
        Algorithm::PeakLow => {
            let mut candidates = Vec::new();
            for r in rotations.iter() {
                if let Some(c) = prefix_profile(&r.word, cmp)?.ascent_candidate() {
                    candidates.push(c);
                }
            }
            max_by_order(candidates, cmp)?
        }
    };
    let ascent = ascent.ok_or_else(|| DecomposeError::NoAscent(w.to_string()))?;
    locate(ascent, &rotations)
}

fn locate(ascent: Word, rotations: &RotationSet) -> Result<MaximalAscent, DecomposeError> {
    let mut occurrences = Vec::new();
    for (rotation, r) in rotations.iter().enumerate() {
        for occurrence in r.word.occurrences(&ascent)? {
            occurrences.push(RotationOccurrence { rotation, occurrence });
        }
    }
    let host_index = occurrences
        .first()
        .map(|o| o.rotation)
        .ok_or_else(|| DecomposeError::NoAscent(rotations.host().to_string()))?;
    Ok(MaximalAscent {
        ascent,
        host: rotations.elements()[host_index].clone(),
        host_index,
        occurrences,
    })
}

/// A cyclic permutation `chosen = ascent * descent` of the word or of its inverse.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub source: Word,
    pub chosen: Word,
    pub origin: Origin,
    /// Rotation offset of `chosen` within its origin word.
    pub offset: usize,
    pub ascent: Word,
    pub descent: Word,
    /// Start positions of the ascent inside `chosen`.
    pub ascent_occurrences: Vec<usize>,
    /// `None` when the descent is empty.
    pub descent_unique: Option<bool>,
}

/// Checks the preconditions shared by [`decompose`] and the verifier.
pub fn require_decomposable(w: &Word) -> Result<(), DecomposeError> {
    if !w.is_cyclically_reduced() {
        return Err(crate::error::WordError::NotCyclicallyReduced(w.to_string()).into());
    }
    if w.len() <= 1 {
        return Err(DecomposeError::LengthOne(w.to_string()));
    }
    if w.is_periodic()? {
        return Err(DecomposeError::PeriodicInput(w.to_string()));
    }
    Ok(())
}

/// Finds the rotation of `w` or `w^-1` that begins with the maximal ascent
/// and splits it as ascent followed by the remainder.
pub fn decompose(w: &Word, cmp: &dyn Comparator) -> Result<Decomposition, DecomposeError> {
    require_decomposable(w)?;
    let rotations = w.rotation_set()?;
    let max = maximal_ascent(w, cmp, Algorithm::PeakLow)?;
    let ascent = max.ascent;
    let host = rotations
        .iter()
        .find(|r| r.word.starts_with(&ascent))
        .ok_or_else(|| DecomposeError::NoRotationStartsWithA { word: w.to_string(), ascent: ascent.to_string() })?;
    let chosen = host.word.clone();
    let descent = chosen.suffix_from(ascent.len());
    let mut signs = SignCache::new(cmp);
    if !descent.is_empty() && !signs.is_descent(&descent)? {
        return Err(DecomposeError::RemainderNotDescent { ascent: ascent.to_string(), descent: descent.to_string() });
    }
    let ascent_occurrences = chosen.occurrences(&ascent)?.iter().map(|o| o.start).collect();
    let descent_unique = if descent.is_empty() { None } else { Some(rotations.uniquely_positioned(&descent)?) };
    Ok(Decomposition {
        source: w.clone(),
        chosen,
        origin: host.origin,
        offset: host.offset,
        ascent,
        descent,
        ascent_occurrences,
        descent_unique,
    })
}

/// Sign of every slice of a host word, with ascent and descent tables.
pub struct SliceTable {
    n: usize,
    ascent: Vec<Vec<bool>>,
    descent: Vec<Vec<bool>>,
}

impl SliceTable {
    pub fn new(host: &Word, signs: &mut SignCache<'_>) -> Result<Self, OrderError> {
        let n = host.len();
        let mut sign = vec![vec![Ordering::Equal; n + 1]; n + 1];
        for i in 0..n {
            for j in i + 1..=n {
                sign[i][j] = signs.sign(&host.slice(i, j))?;
            }
        }
        let table = |want: Ordering| {
            // prefixes[i][j]: every nonempty prefix of i..j has sign `want`.
            let mut prefixes = vec![vec![true; n + 1]; n + 1];
            let mut suffixes = vec![vec![true; n + 1]; n + 1];
            for i in 0..n {
                for j in i + 1..=n {
                    prefixes[i][j] = prefixes[i][j - 1] && sign[i][j] == want;
                }
            }
            for j in 1..=n {
                for i in (0..j).rev() {
                    suffixes[i][j] = suffixes[i + 1][j] && sign[i][j] == want;
                }
            }
            (0..=n)
                .map(|i| (0..=n).map(|j| i < j && prefixes[i][j] && suffixes[i][j]).collect())
                .collect::<Vec<Vec<bool>>>()
        };
        Ok(Self { n, ascent: table(Ordering::Greater), descent: table(Ordering::Less) })
    }

    pub fn is_ascent(&self, occ: &Occurrence) -> bool {
        self.ascent[occ.start][occ.end()]
    }

    pub fn is_descent(&self, occ: &Occurrence) -> bool {
        self.descent[occ.start][occ.end()]
    }

    fn collect(&self, table: &[Vec<bool>]) -> Vec<Occurrence> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in i + 1..=self.n {
                if table[i][j] {
                    out.push(Occurrence::new(i, j - i));
                }
            }
        }
        out
    }

    pub fn ascents(&self) -> Vec<Occurrence> {
        self.collect(&self.ascent)
    }

    pub fn descents(&self) -> Vec<Occurrence> {
        self.collect(&self.descent)
    }
}

fn overlaps(a: &Occurrence, b: &Occurrence) -> bool {
    a.intersection(b).is_some() && !a.contains(b) && !b.contains(a)
}

/// Overlapping ascents overlap in an ascent; ascents never overlap descents.
pub fn check_overlaps(host: &Word, signs: &mut SignCache<'_>) -> Result<Vec<Anomaly>, OrderError> {
    let table = SliceTable::new(host, signs)?;
    let ascents = table.ascents();
    let descents = table.descents();
    let mut anomalies = Vec::new();
    for (k, a) in ascents.iter().enumerate() {
        for b in &ascents[k + 1..] {
            if overlaps(a, b) {
                let shared = a.intersection(b).expect("overlapping slices intersect");
                if !table.is_ascent(&shared) {
                    anomalies.push(Anomaly::new(
                        AnomalyKind::OverlapOfAscentsNotAscent,
                        format!("in {host}: ascents at {a:?} and {b:?} share non-ascent {shared:?}"),
                    ));
                }
            }
        }
        for d in &descents {
            if overlaps(a, d) {
                anomalies.push(Anomaly::new(
                    AnomalyKind::AscentOverlapsDescent,
                    format!("in {host}: ascent at {a:?} overlaps descent at {d:?}"),
                ));
            }
        }
    }
    Ok(anomalies)
}

/// Properties every rotation containing the maximal ascent `ascent` must have:
/// it lies above the identity, its peak is its low times the ascent, the
/// ascent occurs once, its inverse avoids the ascent, and a rotation starting
/// with the ascent continues with a descent.
pub fn check_ascent_hosts(
    rotations: &RotationSet,
    ascent: &Word,
    signs: &mut SignCache<'_>,
) -> Result<Vec<Anomaly>, DecomposeError> {
    let cmp = signs.comparator();
    let mut anomalies = Vec::new();
    for r in rotations.iter() {
        let host = &r.word;
        let found = host.occurrences(ascent)?;
        if found.is_empty() {
            continue;
        }
        if signs.sign(host)? != Ordering::Greater {
            anomalies.push(Anomaly::new(AnomalyKind::AscentHostNotPositive, format!("{host} is not above 1")));
        }
        let profile = prefix_profile(host, cmp)?;
        if profile.low().mul(ascent) != profile.peak() {
            anomalies.push(Anomaly::new(
                AnomalyKind::PeakIsNotLowTimesAscent,
                format!("in {host}: peak {} != low {} * {ascent}", profile.peak(), profile.low()),
            ));
        }
        if found.len() != 1 {
            anomalies.push(Anomaly::new(
                AnomalyKind::AscentRepeatedInHost,
                format!("{ascent} occurs {} times in {host}", found.len()),
            ));
        }
        if !host.inverse().occurrences(ascent)?.is_empty() {
            anomalies.push(Anomaly::new(
                AnomalyKind::AscentInInverseHost,
                format!("{ascent} occurs in the inverse of {host}"),
            ));
        }
        if host.starts_with(ascent) {
            let rest = host.suffix_from(ascent.len());
            if !rest.is_empty() && !signs.is_descent(&rest)? {
                anomalies.push(Anomaly::new(
                    AnomalyKind::RemainderNotDescent,
                    format!("{host} = {ascent} * {rest} but {rest} is not a descent"),
                ));
            }
        }
    }
    Ok(anomalies)
}
