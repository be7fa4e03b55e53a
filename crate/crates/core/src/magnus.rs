//! The Magnus bi-order on a free group: `v > w` iff the Magnus image of `v`
//! is larger than that of `w` at the first monomial where they differ.

use std::cmp::Ordering;

use crate::error::OrderError;
use crate::order::Comparator;
use crate::series::{mu, prefix_series, SeriesOrdering, TruncatedSeries};
use crate::word::Word;

/// How far series are expanded before two words are declared undecidable.
///
/// Comparison starts at `initial_bound` and doubles until it reaches the cap.
/// Without an explicit cap the cap is `max(8, 2 * (|v| + |w|))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TruncationPolicy {
    pub initial_bound: u32,
    pub cap: Option<u32>,
}

impl Default for TruncationPolicy {
    fn default() -> Self {
        Self { initial_bound: 2, cap: None }
    }
}

impl TruncationPolicy {
    pub fn with_cap(cap: u32) -> Self {
        Self { cap: Some(cap), ..Self::default() }
    }

    pub fn cap_for(&self, total_len: usize) -> u32 {
        self.cap.unwrap_or_else(|| 8.max(2 * total_len as u32))
    }

    /// The sequence of degree bounds tried for words of combined length `total_len`.
    pub fn bounds(&self, total_len: usize) -> Vec<u32> {
        let cap = self.cap_for(total_len);
        let mut out = Vec::new();
        let mut d = self.initial_bound.max(1).min(cap);
        loop {
            out.push(d);
            if d >= cap {
                break;
            }
            d = (d * 2).min(cap);
        }
        out
    }
}

/// Magnus order with a chosen variable precedence.
///
/// `precedence[0]` names the generator whose variable is most significant.
/// The identity precedence `[1, 2, ..., k]` is the canonical order with
/// `x1 > x2 > ... > 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MagnusOrder {
    rank: u32,
    precedence: Vec<u32>,
    relabel: Vec<u32>,
    policy: TruncationPolicy,
}

impl MagnusOrder {
    pub fn canonical(rank: u32) -> Self {
        Self::with_precedence(rank, (1..=rank).collect()).expect("identity is a permutation")
    }

    /// Reverses the variable precedence (for rank 2: `X2` before `X1`).
    pub fn swapped(rank: u32) -> Self {
        Self::with_precedence(rank, (1..=rank).rev().collect()).expect("reversal is a permutation")
    }

    pub fn with_precedence(rank: u32, precedence: Vec<u32>) -> Result<Self, OrderError> {
        let mut seen = vec![false; rank as usize];
        let valid = precedence.len() == rank as usize
            && precedence.iter().all(|&g| {
                let ok = g >= 1 && g <= rank && !seen[(g - 1) as usize];
                if ok {
                    seen[(g - 1) as usize] = true;
                }
                ok
            });
        if !valid {
            return Err(OrderError::InvalidPrecedence(format!("{precedence:?}")));
        }
        let mut relabel = vec![0; rank as usize];
        for (position, &g) in precedence.iter().enumerate() {
            relabel[(g - 1) as usize] = position as u32 + 1;
        }
        Ok(Self { rank, precedence, relabel, policy: TruncationPolicy::default() })
    }

    pub fn with_policy(mut self, policy: TruncationPolicy) -> Self {
        self.policy = policy;
        self
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn precedence(&self) -> &[u32] {
        &self.precedence
    }

    pub fn policy(&self) -> TruncationPolicy {
        self.policy
    }

    pub fn is_canonical(&self) -> bool {
        self.precedence.iter().enumerate().all(|(i, &g)| g == i as u32 + 1)
    }

    fn check_rank(&self, w: &Word) -> Result<(), OrderError> {
        if w.rank() != self.rank {
            return Err(OrderError::RankMismatch(self.rank, w.rank()));
        }
        Ok(())
    }

    fn relabeled(&self, w: &Word) -> Word {
        w.relabel(&self.relabel)
    }

    /// Magnus image under this order's variable labelling.
    pub fn series(&self, w: &Word, degree_bound: u32) -> TruncatedSeries {
        mu(&self.relabeled(w), degree_bound)
    }
}

/// Compares exponent-sum vectors; these are the degree-one coefficients.
fn compare_linear(a: &[i64], b: &[i64]) -> Ordering {
    a.iter().zip(b).map(|(x, y)| x.cmp(y)).find(|o| o.is_ne()).unwrap_or(Ordering::Equal)
}

fn to_ordering(o: SeriesOrdering) -> Option<Ordering> {
    match o {
        SeriesOrdering::Greater => Some(Ordering::Greater),
        SeriesOrdering::Less => Some(Ordering::Less),
        SeriesOrdering::EqualUpToBound => None,
    }
}

impl Comparator for MagnusOrder {
    fn compare(&self, v: &Word, w: &Word) -> Result<Ordering, OrderError> {
        self.check_rank(v)?;
        self.check_rank(w)?;
        if v == w {
            return Ok(Ordering::Equal);
        }
        let (rv, rw) = (self.relabeled(v), self.relabeled(w));
        let linear = compare_linear(&rv.exponent_sums(), &rw.exponent_sums());
        if linear.is_ne() {
            return Ok(linear);
        }
        let bounds = self.policy.bounds(v.len() + w.len());
        for &d in &bounds {
            if let Some(o) = to_ordering(mu(&rv, d).compare(&mu(&rw, d))?) {
                return Ok(o);
            }
        }
        Err(OrderError::UndecidedAtCap {
            v: v.to_string(),
            w: w.to_string(),
            cap: *bounds.last().unwrap_or(&0),
        })
    }

    fn sign(&self, w: &Word) -> Result<Ordering, OrderError> {
        self.check_rank(w)?;
        if w.is_empty() {
            return Ok(Ordering::Equal);
        }
        let rw = self.relabeled(w);
        let linear = compare_linear(&rw.exponent_sums(), &vec![0; self.rank as usize]);
        if linear.is_ne() {
            return Ok(linear);
        }
        let bounds = self.policy.bounds(w.len());
        for &d in &bounds {
            let s = mu(&rw, d);
            let leading = s.terms().find(|(m, _)| m.degree() > 0).map(|(_, c)| c.sign());
            if let Some(sign) = leading {
                return Ok(sign.cmp(&num_bigint::Sign::NoSign));
            }
        }
        Err(OrderError::UndecidedAtCap {
            v: w.to_string(),
            w: String::new(),
            cap: *bounds.last().unwrap_or(&0),
        })
    }

    fn prefix_extrema(&self, w: &Word) -> Result<(usize, usize), OrderError> {
        self.check_rank(w)?;
        let mut prefixes = PrefixImages::new(self, w);
        let n = w.len();
        let (mut peak, mut low) = (0, 0);
        for i in 1..=n {
            if prefixes.compare(i, peak)?.is_gt() {
                peak = i;
            }
            if prefixes.compare(i, low)?.is_lt() {
                low = i;
            }
        }
        Ok((peak, low))
    }

    fn describe(&self) -> String {
        let vars: Vec<String> = self.precedence.iter().map(|g| format!("X{g}")).collect();
        format!("magnus({})", vars.join(" > "))
    }
}

/// Magnus images of all prefixes of one word, expanded to higher degree
/// only when exponent sums and the current bound fail to separate a pair.
struct PrefixImages {
    original: Word,
    word: Word,
    sums: Vec<Vec<i64>>,
    bounds: Vec<u32>,
    level: usize,
    images: Option<Vec<TruncatedSeries>>,
}

impl PrefixImages {
    fn new(order: &MagnusOrder, w: &Word) -> Self {
        let word = order.relabeled(w);
        let mut sums = Vec::with_capacity(word.len() + 1);
        let mut acc = vec![0i64; order.rank as usize];
        sums.push(acc.clone());
        for l in word.letters() {
            acc[(l.generator() - 1) as usize] += l.sign().as_i64();
            sums.push(acc.clone());
        }
        let bounds = order.policy.bounds(2 * word.len());
        Self { original: w.clone(), word, sums, bounds, level: 0, images: None }
    }

    fn compare(&mut self, i: usize, j: usize) -> Result<Ordering, OrderError> {
        if i == j {
            return Ok(Ordering::Equal);
        }
        let linear = compare_linear(&self.sums[i], &self.sums[j]);
        if linear.is_ne() {
            return Ok(linear);
        }
        loop {
            let images = self
                .images
                .get_or_insert_with(|| prefix_series(&self.word, self.bounds[self.level]));
            if let Some(o) = to_ordering(images[i].compare(&images[j])?) {
                return Ok(o);
            }
            if self.level + 1 == self.bounds.len() {
                return Err(OrderError::UndecidedAtCap {
                    v: self.original.prefix(i).to_string(),
                    w: self.original.prefix(j).to_string(),
                    cap: self.bounds[self.level],
                });
            }
            self.level += 1;
            self.images = None;
        }
    }
}

/// Compares two words in the canonical Magnus order under `policy`.
pub fn magnus_compare_words(v: &Word, w: &Word, policy: TruncationPolicy) -> Result<Ordering, OrderError> {
    if v.rank() != w.rank() {
        return Err(OrderError::RankMismatch(v.rank(), w.rank()));
    }
    MagnusOrder::canonical(v.rank()).with_policy(policy).compare(v, w)
}

/// Parses a comma-separated precedence such as `2,1`.
pub fn parse_precedence(text: &str, rank: u32) -> Result<MagnusOrder, OrderError> {
    let parsed: Result<Vec<u32>, _> = text.split(',').map(|s| s.trim().parse::<u32>()).collect();
    match parsed {
        Ok(precedence) => MagnusOrder::with_precedence(rank, precedence),
        Err(_) => Err(OrderError::InvalidPrecedence(text.to_string())),
    }
}
