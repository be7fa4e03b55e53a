//! Truncated power series in noncommuting variables `X1, ..., Xk` with
//! integer coefficients, and the Magnus map from words into them.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::SeriesError;
use crate::word::{Letter, Sign, Word};

/// A noncommutative monomial `X_{i1} X_{i2} ... X_{id}`.
///
/// Monomials order by degree first, then lexicographically with smaller
/// indices first. This is the order in which coefficients are compared.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn new(indices: Vec<u32>) -> Self {
        Monomial(indices)
    }

    pub fn indices(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.len() as u32
    }

    fn times(&self, other: &Monomial) -> Monomial {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Monomial(v)
    }

    fn times_power(&self, index: u32, power: u32) -> Monomial {
        let mut v = Vec::with_capacity(self.0.len() + power as usize);
        v.extend_from_slice(&self.0);
        v.extend(std::iter::repeat(index).take(power as usize));
        Monomial(v)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut i = 0;
        while i < self.0.len() {
            let index = self.0[i];
            let run = self.0[i..].iter().take_while(|&&j| j == index).count();
            if run == 1 {
                write!(f, "X{index}")?;
            } else {
                write!(f, "X{index}^{run}")?;
            }
            i += run;
        }
        Ok(())
    }
}

/// Outcome of comparing two series at a common degree bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesOrdering {
    Greater,
    Less,
    EqualUpToBound,
}

/// A power series with every term above `degree_bound` discarded.
///
/// Zero coefficients are never stored, so structural equality is equality
/// of truncated series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    rank: u32,
    degree_bound: u32,
    coefficients: BTreeMap<Monomial, BigInt>,
}

impl TruncatedSeries {
    pub fn zero(rank: u32, degree_bound: u32) -> Self {
        Self { rank, degree_bound, coefficients: BTreeMap::new() }
    }

    pub fn one(rank: u32, degree_bound: u32) -> Self {
        let mut s = Self::zero(rank, degree_bound);
        s.coefficients.insert(Monomial::one(), BigInt::one());
        s
    }

    /// Builds a series from explicit terms; terms above the bound are dropped.
    pub fn from_terms<I>(rank: u32, degree_bound: u32, terms: I) -> Result<Self, SeriesError>
    where
        I: IntoIterator<Item = (Vec<u32>, i64)>,
    {
        let mut s = Self::zero(rank, degree_bound);
        for (indices, c) in terms {
            if let Some(&generator) = indices.iter().find(|&&i| i == 0 || i > rank) {
                return Err(SeriesError::GeneratorOutOfRange { generator, rank });
            }
            if indices.len() as u32 <= degree_bound {
                s.add_term(Monomial(indices), BigInt::from(c));
            }
        }
        s.prune();
        Ok(s)
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn degree_bound(&self) -> u32 {
        self.degree_bound
    }

    pub fn coefficient(&self, monomial: &Monomial) -> BigInt {
        self.coefficients.get(monomial).cloned().unwrap_or_default()
    }

    /// Nonzero terms in comparison order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.coefficients.iter()
    }

    pub fn is_one(&self) -> bool {
        self.coefficients.len() == 1 && self.coefficients.get(&Monomial::one()).is_some_and(|c| c.is_one())
    }

    fn add_term(&mut self, monomial: Monomial, c: BigInt) {
        *self.coefficients.entry(monomial).or_default() += c;
    }

    fn prune(&mut self) {
        self.coefficients.retain(|_, c| !c.is_zero());
    }

    /// Truncated noncommutative product; the result keeps the smaller bound.
    pub fn mul(&self, other: &TruncatedSeries) -> Result<TruncatedSeries, SeriesError> {
        if self.rank != other.rank {
            return Err(SeriesError::RankMismatch(self.rank, other.rank));
        }
        let bound = self.degree_bound.min(other.degree_bound);
        let mut out = Self::zero(self.rank, bound);
        for (m1, c1) in &self.coefficients {
            if m1.degree() > bound {
                continue;
            }
            for (m2, c2) in &other.coefficients {
                if m1.degree() + m2.degree() > bound {
                    continue;
                }
                out.add_term(m1.times(m2), c1 * c2);
            }
        }
        out.prune();
        Ok(out)
    }

    /// In-place right multiplication by the image of a single letter.
    pub fn mul_letter(&mut self, letter: Letter) -> Result<(), SeriesError> {
        let g = letter.generator();
        if g > self.rank {
            return Err(SeriesError::GeneratorOutOfRange { generator: g, rank: self.rank });
        }
        let d = self.degree_bound;
        let old = std::mem::take(&mut self.coefficients);
        for (m, c) in old {
            let room = d - m.degree();
            match letter.sign() {
                Sign::Positive => {
                    if room >= 1 {
                        self.add_term(m.times_power(g, 1), c.clone());
                    }
                }
                Sign::Negative => {
                    for j in 1..=room {
                        let term = if j % 2 == 0 { c.clone() } else { -c.clone() };
                        self.add_term(m.times_power(g, j), term);
                    }
                }
            }
            self.add_term(m, c);
        }
        self.prune();
        Ok(())
    }

    /// Compares coefficient by coefficient in monomial order; the first
    /// differing coefficient decides.
    pub fn compare(&self, other: &TruncatedSeries) -> Result<SeriesOrdering, SeriesError> {
        if self.rank != other.rank {
            return Err(SeriesError::RankMismatch(self.rank, other.rank));
        }
        if self.degree_bound != other.degree_bound {
            return Err(SeriesError::BoundMismatch(self.degree_bound, other.degree_bound));
        }
        let mut left = self.coefficients.iter().peekable();
        let mut right = other.coefficients.iter().peekable();
        let zero = BigInt::zero();
        loop {
            let (a, b) = match (left.peek(), right.peek()) {
                (None, None) => return Ok(SeriesOrdering::EqualUpToBound),
                (Some((ma, ca)), Some((mb, cb))) => match ma.cmp(mb) {
                    Ordering::Equal => {
                        let pair = (*ca, *cb);
                        left.next();
                        right.next();
                        pair
                    }
                    Ordering::Less => {
                        let c = *ca;
                        left.next();
                        (c, &zero)
                    }
                    Ordering::Greater => {
                        let c = *cb;
                        right.next();
                        (&zero, c)
                    }
                },
                (Some((_, ca)), None) => {
                    let c = *ca;
                    left.next();
                    (c, &zero)
                }
                (None, Some((_, cb))) => {
                    let c = *cb;
                    right.next();
                    (&zero, c)
                }
            };
            match a.cmp(b) {
                Ordering::Greater => return Ok(SeriesOrdering::Greater),
                Ordering::Less => return Ok(SeriesOrdering::Less),
                Ordering::Equal => {}
            }
        }
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (m, c) in &self.coefficients {
            let magnitude = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            if m.degree() == 0 {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{magnitude}{m}")?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O({})", self.degree_bound + 1)
    }
}

/// Image of a single generator or inverse: `1 + Xi`, or `1 - Xi + Xi^2 - ...`.
pub fn atom_series(rank: u32, generator: u32, sign: Sign, degree_bound: u32) -> Result<TruncatedSeries, SeriesError> {
    if generator == 0 || generator > rank {
        return Err(SeriesError::GeneratorOutOfRange { generator, rank });
    }
    let mut s = TruncatedSeries::one(rank, degree_bound);
    let letter = Letter::new(generator, sign).map_err(|_| SeriesError::GeneratorOutOfRange { generator, rank })?;
    s.mul_letter(letter)?;
    Ok(s)
}

/// Magnus image of a word, truncated at `degree_bound`.
pub fn mu(w: &Word, degree_bound: u32) -> TruncatedSeries {
    let mut s = TruncatedSeries::one(w.rank(), degree_bound);
    for &l in w.letters() {
        s.mul_letter(l).expect("word letters are within rank");
    }
    s
}

/// Magnus images of every prefix of `w`, from the empty prefix to `w` itself.
pub fn prefix_series(w: &Word, degree_bound: u32) -> Vec<TruncatedSeries> {
    let mut out = Vec::with_capacity(w.len() + 1);
    let mut s = TruncatedSeries::one(w.rank(), degree_bound);
    out.push(s.clone());
    for &l in w.letters() {
        s.mul_letter(l).expect("word letters are within rank");
        out.push(s.clone());
    }
    out
}

pub fn compare_series(a: &TruncatedSeries, b: &TruncatedSeries) -> Result<SeriesOrdering, SeriesError> {
    a.compare(b)
}
