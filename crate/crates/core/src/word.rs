//! Reduced words in a free group of finite rank.
//!
//! A [`Word`] is always freely reduced. Letters are written in a compact
//! text form: `a`, `b`, `c`, ... stand for the generators `x1`, `x2`, `x3`,
//! ... and the uppercase forms `A`, `B`, ... for their inverses.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::WordError;

/// Largest rank supported by the text grammar (one letter per generator).
pub const MAX_RANK: u32 = 26;

/// Exponent sign of a letter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn flip(self) -> Self {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }
}

/// A generator or the inverse of a generator. Generators are 1-based.
///
/// Letters order with all generators first (`a < b < ...`), followed by all
/// inverses (`A < B < ...`). Enumeration and canonical representatives use
/// this order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    generator: u32,
    sign: Sign,
}

impl Letter {
    pub fn new(generator: u32, sign: Sign) -> Result<Self, WordError> {
        if generator == 0 || generator > MAX_RANK {
            return Err(WordError::GeneratorOutOfRange { generator, rank: MAX_RANK });
        }
        Ok(Self { generator, sign })
    }

    pub fn pos(generator: u32) -> Self {
        Self::new(generator, Sign::Positive).expect("generator index out of range")
    }

    pub fn neg(generator: u32) -> Self {
        Self::new(generator, Sign::Negative).expect("generator index out of range")
    }

    pub fn generator(self) -> u32 {
        self.generator
    }

    pub fn sign(self) -> Sign {
        self.sign
    }

    pub fn is_positive(self) -> bool {
        self.sign == Sign::Positive
    }

    pub fn inverse(self) -> Self {
        Self { generator: self.generator, sign: self.sign.flip() }
    }

    pub fn from_char(c: char) -> Option<Self> {
        match c {
            'a'..='z' => Some(Self::pos(c as u32 - 'a' as u32 + 1)),
            'A'..='Z' => Some(Self::neg(c as u32 - 'A' as u32 + 1)),
            _ => None,
        }
    }

    pub fn to_char(self) -> char {
        let base = if self.is_positive() { b'a' } else { b'A' };
        (base + (self.generator - 1) as u8) as char
    }

    /// All `2 * rank` letters in enumeration order.
    pub fn alphabet(rank: u32) -> Vec<Letter> {
        let mut out: Vec<Letter> = (1..=rank).map(Letter::pos).collect();
        out.extend((1..=rank).map(Letter::neg));
        out
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Letter {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.sign, self.generator).cmp(&(other.sign, other.generator))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

/// A freely reduced word over an alphabet of `rank` generators.
///
/// The empty word is the identity. Words compare (`Ord`) lexicographically
/// by letters, which is the spelling order used for canonical forms; it has
/// nothing to do with the group order, see [`crate::order::Comparator`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word {
    rank: u32,
    letters: Vec<Letter>,
}

fn check_rank(rank: u32) -> Result<(), WordError> {
    if rank == 0 || rank > MAX_RANK {
        Err(WordError::InvalidRank(rank))
    } else {
        Ok(())
    }
}

/// Freely reduces a letter sequence into a [`Word`] of the given rank.
pub fn reduce(rank: u32, letters: &[Letter]) -> Result<Word, WordError> {
    check_rank(rank)?;
    let mut out: Vec<Letter> = Vec::with_capacity(letters.len());
    for &l in letters {
        if l.generator > rank {
            return Err(WordError::GeneratorOutOfRange { generator: l.generator, rank });
        }
        if out.last() == Some(&l.inverse()) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    Ok(Word { rank, letters: out })
}

/// Parses the text form of a word and freely reduces it.
pub fn parse_word(text: &str, rank: u32) -> Result<Word, WordError> {
    check_rank(rank)?;
    let mut letters = Vec::with_capacity(text.len());
    for (position, ch) in text.chars().enumerate() {
        let letter = Letter::from_char(ch).ok_or(WordError::InvalidCharacter { ch, position })?;
        if letter.generator > rank {
            return Err(WordError::CharacterOutOfRank { ch, position, rank });
        }
        letters.push(letter);
    }
    reduce(rank, &letters)
}

impl Word {
    pub fn identity(rank: u32) -> Self {
        check_rank(rank).expect("invalid rank");
        Self { rank, letters: Vec::new() }
    }

    /// Single-letter word.
    pub fn letter(rank: u32, letter: Letter) -> Result<Self, WordError> {
        reduce(rank, &[letter])
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Same letters regarded in a larger (or equal) ambient rank.
    pub fn with_rank(&self, rank: u32) -> Result<Self, WordError> {
        reduce(rank, &self.letters)
    }

    pub fn inverse(&self) -> Self {
        Self {
            rank: self.rank,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// Reduced product `self * other`.
    pub fn mul(&self, other: &Word) -> Word {
        assert_eq!(self.rank, other.rank, "rank mismatch in word product");
        let mut cancel = 0;
        while cancel < self.len().min(other.len())
            && self.letters[self.len() - 1 - cancel] == other.letters[cancel].inverse()
        {
            cancel += 1;
        }
        let mut letters = Vec::with_capacity(self.len() + other.len() - 2 * cancel);
        letters.extend_from_slice(&self.letters[..self.len() - cancel]);
        letters.extend_from_slice(&other.letters[cancel..]);
        Word { rank: self.rank, letters }
    }

    /// The subword occupying `start..end`. Subwords of reduced words are reduced.
    pub fn slice(&self, start: usize, end: usize) -> Word {
        Word { rank: self.rank, letters: self.letters[start..end].to_vec() }
    }

    pub fn prefix(&self, len: usize) -> Word {
        self.slice(0, len)
    }

    pub fn suffix_from(&self, start: usize) -> Word {
        self.slice(start, self.len())
    }

    pub fn starts_with(&self, prefix: &Word) -> bool {
        self.letters.starts_with(&prefix.letters)
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        match (self.letters.first(), self.letters.last()) {
            (Some(first), Some(last)) if self.len() > 1 => *first != last.inverse(),
            _ => true,
        }
    }

    /// Splits `self = conjugator * core * conjugator^-1` with `core` cyclically reduced.
    pub fn cyclically_reduce(&self) -> (Word, Word) {
        let n = self.len();
        let mut k = 0;
        while 2 * k + 1 < n && self.letters[k] == self.letters[n - 1 - k].inverse() {
            k += 1;
        }
        (self.slice(k, n - k), self.prefix(k))
    }

    /// Cyclic permutation `VU` where `self = UV` and `|U| = offset`.
    pub fn rotate(&self, offset: usize) -> Word {
        let mut letters = Vec::with_capacity(self.len());
        letters.extend_from_slice(&self.letters[offset..]);
        letters.extend_from_slice(&self.letters[..offset]);
        Word { rank: self.rank, letters }
    }

    /// `self` raised to a non-negative power (reduced).
    pub fn pow(&self, exponent: usize) -> Word {
        (0..exponent).fold(Word::identity(self.rank), |acc, _| acc.mul(self))
    }

    /// Shortest `root` with `root^exponent == self`.
    pub fn primitive_root(&self) -> Result<(Word, usize), WordError> {
        if self.is_empty() {
            return Err(WordError::EmptyWord);
        }
        if !self.is_cyclically_reduced() {
            return Err(WordError::NotCyclicallyReduced(self.to_string()));
        }
        let n = self.len();
        let period = (1..=n)
            .filter(|p| n % p == 0)
            .find(|&p| (p..n).all(|i| self.letters[i] == self.letters[i - p]))
            .unwrap_or(n);
        Ok((self.prefix(period), n / period))
    }

    pub fn is_periodic(&self) -> Result<bool, WordError> {
        Ok(self.primitive_root()?.1 > 1)
    }

    /// All positions where `pattern` is spelled inside `self`, in increasing order.
    pub fn occurrences(&self, pattern: &Word) -> Result<Vec<Occurrence>, WordError> {
        if pattern.is_empty() {
            return Err(WordError::EmptyPattern);
        }
        let len = pattern.len();
        Ok(self
            .letters
            .windows(len)
            .enumerate()
            .filter(|(_, window)| *window == pattern.letters.as_slice())
            .map(|(start, _)| Occurrence { start, len })
            .collect())
    }

    pub fn is_monotonic(&self) -> bool {
        self.letters.iter().all(|l| l.is_positive()) || self.letters.iter().all(|l| !l.is_positive())
    }

    /// Exponent sum of each generator, indexed from generator 1.
    pub fn exponent_sums(&self) -> Vec<i64> {
        let mut sums = vec![0; self.rank as usize];
        for l in &self.letters {
            sums[(l.generator - 1) as usize] += l.sign.as_i64();
        }
        sums
    }

    /// Rewrites every generator through `map` (`map[g - 1]` is the image of `g`).
    pub(crate) fn relabel(&self, map: &[u32]) -> Word {
        Word {
            rank: self.rank,
            letters: self
                .letters
                .iter()
                .map(|l| Letter { generator: map[(l.generator - 1) as usize], sign: l.sign })
                .collect(),
        }
    }

    pub fn rotation_set(&self) -> Result<RotationSet, WordError> {
        RotationSet::new(self)
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.letters.cmp(&other.letters).then(self.rank.cmp(&other.rank))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// A positioned subword `start..start + len` of some host word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Occurrence {
    pub start: usize,
    pub len: usize,
}

impl Occurrence {
    pub fn new(start: usize, len: usize) -> Self {
        Self { start, len }
    }

    pub fn end(&self) -> usize {
        self.start + self.len
    }

    pub fn is_prefix(&self) -> bool {
        self.start == 0
    }

    pub fn is_suffix_of(&self, host_len: usize) -> bool {
        self.end() == host_len
    }

    pub fn is_internal_in(&self, host_len: usize) -> bool {
        !self.is_prefix() && !self.is_suffix_of(host_len)
    }

    pub fn contains(&self, other: &Occurrence) -> bool {
        self.start <= other.start && other.end() <= self.end()
    }

    /// Shared positions, if any.
    pub fn intersection(&self, other: &Occurrence) -> Option<Occurrence> {
        let start = self.start.max(other.start);
        let end = self.end().min(other.end());
        (start < end).then(|| Occurrence::new(start, end - start))
    }
}

/// Whether two positioned subwords of `host` overlap: they share a
/// nonempty stretch and neither contains the other.
pub fn overlap_between(host: &Word, a: &Occurrence, b: &Occurrence) -> Result<bool, WordError> {
    for occ in [a, b] {
        if occ.end() > host.len() {
            return Err(WordError::OccurrenceOutsideHost { start: occ.start, len: occ.len, host_len: host.len() });
        }
    }
    Ok(a.intersection(b).is_some() && !a.contains(b) && !b.contains(a))
}

/// Which word a rotation was cut from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Origin {
    #[serde(rename = "fromW")]
    FromWord,
    #[serde(rename = "fromInverse")]
    FromInverse,
}

impl fmt::Display for Origin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Origin::FromWord => "fromW",
            Origin::FromInverse => "fromInverse",
        })
    }
}

/// One cyclic permutation in a [`RotationSet`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Rotation {
    pub word: Word,
    pub origin: Origin,
    /// Length of the prefix moved to the back.
    pub offset: usize,
}

/// All cyclic permutations of a cyclically reduced word and of its inverse,
/// listed positionally (rotations of `w` by offset, then those of `w^-1`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RotationSet {
    host: Word,
    elements: Vec<Rotation>,
}

impl RotationSet {
    pub fn new(host: &Word) -> Result<Self, WordError> {
        if !host.is_cyclically_reduced() {
            return Err(WordError::NotCyclicallyReduced(host.to_string()));
        }
        let inverse = host.inverse();
        let mut elements = Vec::with_capacity(2 * host.len());
        for (source, origin) in [(host, Origin::FromWord), (&inverse, Origin::FromInverse)] {
            for offset in 0..source.len() {
                elements.push(Rotation { word: source.rotate(offset), origin, offset });
            }
        }
        Ok(Self { host: host.clone(), elements })
    }

    pub fn host(&self) -> &Word {
        &self.host
    }

    pub fn elements(&self) -> &[Rotation] {
        &self.elements
    }

    pub fn iter(&self) -> impl Iterator<Item = &Rotation> {
        self.elements.iter()
    }

    /// Number of listed rotations having `u` as a prefix.
    pub fn prefix_count(&self, u: &Word) -> usize {
        self.elements.iter().filter(|r| r.word.starts_with(u)).count()
    }

    /// Prefix matches restricted to one side.
    pub fn prefix_count_from(&self, u: &Word, origin: Origin) -> usize {
        self.elements.iter().filter(|r| r.origin == origin && r.word.starts_with(u)).count()
    }

    pub fn uniquely_positioned(&self, u: &Word) -> Result<bool, WordError> {
        if u.is_empty() {
            return Err(WordError::EmptyWord);
        }
        Ok(self.prefix_count(u) == 1)
    }

    /// Spelling-least element; the canonical representative of the class.
    pub fn least(&self) -> Option<&Word> {
        self.elements.iter().map(|r| &r.word).min()
    }
}

/// Whether `u` is a prefix of exactly one listed element of the rotation set of `w`.
pub fn uniquely_positioned(u: &Word, w: &Word) -> Result<bool, WordError> {
    if w.is_empty() {
        return Err(WordError::EmptyWord);
    }
    RotationSet::new(w)?.uniquely_positioned(u)
}
