//! Independent string-level oracles. Nothing here calls into the library's
//! series or order code.

#![allow(dead_code)]

use std::cmp::Ordering;
use std::collections::BTreeMap;

/// Letters as signed generator indices: `a = 1`, `A = -1`, `b = 2`, ...
pub fn letters(text: &str) -> Vec<i32> {
    text.chars()
        .map(|c| if c.is_ascii_lowercase() { (c as u8 - b'a' + 1) as i32 } else { -((c as u8 - b'A' + 1) as i32) })
        .collect()
}

pub fn text(letters: &[i32]) -> String {
    letters
        .iter()
        .map(|&l| if l > 0 { (b'a' + l as u8 - 1) as char } else { (b'A' + (-l) as u8 - 1) as char })
        .collect()
}

pub fn reduce(w: &[i32]) -> Vec<i32> {
    let mut out: Vec<i32> = Vec::new();
    for &l in w {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

pub fn inverse(w: &[i32]) -> Vec<i32> {
    w.iter().rev().map(|l| -l).collect()
}

/// Expands the product of letter images term by term: each positive letter
/// contributes `X^0` or `X^1`, each negative letter `(-1)^j X^j`. Sums over
/// every choice of exponents with total degree at most `d`.
pub fn expand_mu(w: &[i32], d: usize) -> BTreeMap<Vec<u32>, i128> {
    let mut out = BTreeMap::new();
    fn go(w: &[i32], d: usize, pos: usize, mono: &mut Vec<u32>, coeff: i128, out: &mut BTreeMap<Vec<u32>, i128>) {
        if pos == w.len() {
            *out.entry(mono.clone()).or_insert(0) += coeff;
            return;
        }
        let g = w[pos].unsigned_abs();
        let max_power = if w[pos] > 0 { 1 } else { d - mono.len() };
        for j in 0..=max_power.min(d - mono.len()) {
            for _ in 0..j {
                mono.push(g);
            }
            let sign = if w[pos] < 0 && j % 2 == 1 { -1 } else { 1 };
            go(w, d, pos + 1, mono, coeff * sign, out);
            for _ in 0..j {
                mono.pop();
            }
        }
    }
    go(w, d, 0, &mut Vec::new(), 1, &mut out);
    out.retain(|_, c| *c != 0);
    out
}

fn monomial_key(m: &[u32]) -> (usize, Vec<u32>) {
    (m.len(), m.to_vec())
}

/// Compares two expanded series by the first differing coefficient in
/// degree-then-lexicographic monomial order.
pub fn compare_expanded(a: &BTreeMap<Vec<u32>, i128>, b: &BTreeMap<Vec<u32>, i128>) -> Ordering {
    let mut keys: Vec<&Vec<u32>> = a.keys().chain(b.keys()).collect();
    keys.sort_by_key(|m| monomial_key(m));
    keys.dedup();
    for m in keys {
        let (x, y) = (a.get(m).copied().unwrap_or(0), b.get(m).copied().unwrap_or(0));
        if x != y {
            return x.cmp(&y);
        }
    }
    Ordering::Equal
}

/// Magnus order via full expansion at increasing degree, up to `max_degree`.
pub fn oracle_compare(v: &[i32], w: &[i32], max_degree: usize) -> Ordering {
    let (v, w) = (reduce(v), reduce(w));
    if v == w {
        return Ordering::Equal;
    }
    for d in 1..=max_degree {
        let o = compare_expanded(&expand_mu(&v, d), &expand_mu(&w, d));
        if o.is_ne() {
            return o;
        }
    }
    panic!("oracle undecided for {} vs {}", text(&v), text(&w));
}

pub fn oracle_positive(u: &[i32]) -> bool {
    oracle_compare(u, &[], 6) == Ordering::Greater
}

pub fn oracle_is_ascent(u: &[i32]) -> bool {
    !u.is_empty()
        && (1..=u.len()).all(|i| oracle_positive(&u[..i]))
        && (0..u.len()).all(|i| oracle_positive(&u[i..]))
}

pub fn rotations(w: &[i32]) -> Vec<Vec<i32>> {
    let wi = inverse(w);
    let mut out = Vec::new();
    for src in [w.to_vec(), wi] {
        for i in 0..src.len() {
            let mut r = src[i..].to_vec();
            r.extend_from_slice(&src[..i]);
            out.push(r);
        }
    }
    out
}

pub fn prefix_count(u: &[i32], w: &[i32]) -> usize {
    rotations(w).iter().filter(|r| r.starts_with(u)).count()
}

/// Greatest ascent over all subwords of all rotations, by exhaustive search.
pub fn oracle_maximal_ascent(w: &[i32]) -> Vec<i32> {
    let mut best: Option<Vec<i32>> = None;
    for r in rotations(w) {
        for i in 0..r.len() {
            for j in i + 1..=r.len() {
                let u = r[i..j].to_vec();
                if oracle_is_ascent(&u) && best.as_ref().is_none_or(|b| oracle_compare(&u, b, 8) == Ordering::Greater) {
                    best = Some(u);
                }
            }
        }
    }
    best.expect("nonempty words have an ascent")
}

/// Every reduced word of the given length over `rank` generators.
pub fn reduced_words(rank: i32, length: usize) -> Vec<Vec<i32>> {
    let alphabet: Vec<i32> = (1..=rank).chain((1..=rank).map(|g| -g)).collect();
    let mut out = vec![Vec::new()];
    for _ in 0..length {
        let mut next = Vec::new();
        for w in &out {
            for &l in &alphabet {
                if w.last() != Some(&-l) {
                    let mut x = w.clone();
                    x.push(l);
                    next.push(x);
                }
            }
        }
        out = next;
    }
    out
}

pub fn cyclically_reduced(w: &[i32]) -> bool {
    w.len() < 2 || w[0] != -w[w.len() - 1]
}

pub fn periodic(w: &[i32]) -> bool {
    let n = w.len();
    (1..n).any(|p| n % p == 0 && (0..n).all(|i| w[i] == w[i % p]))
}
