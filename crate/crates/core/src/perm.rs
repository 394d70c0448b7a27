//! Permutations in one-line notation, Coxeter length, and the canonical
//! factorisation obtained by repeatedly peeling off initial increasing
//! subsequences.
//!
//! Positions and values are 1-based throughout, so the word `4,2,1` is the
//! permutation sending 1 to 4, 2 to 2 and 3 to 1.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{invalid, Error, Result};

/// A permutation of `{1, ..., m}` stored as its one-line word.
///
/// The derived order compares degree first, then Coxeter length, then the
/// word lexicographically. Within a single degree this is the fixed
/// length-compatible order used to index basis sets.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    word: Vec<usize>,
}

impl Permutation {
    /// Validates that `word` is a rearrangement of `1..=word.len()`.
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let m = word.len();
        let mut seen = vec![false; m];
        for &v in &word {
            if v == 0 || v > m {
                return invalid(format!("value {v} out of range 1..={m} in permutation word"));
            }
            if std::mem::replace(&mut seen[v - 1], true) {
                return invalid(format!("value {v} repeated in permutation word"));
            }
        }
        Ok(Self { word })
    }

    pub fn identity(m: usize) -> Self {
        Self {
            word: (1..=m).collect(),
        }
    }

    /// The longest element `(m, m-1, ..., 1)`.
    pub fn longest(m: usize) -> Self {
        Self {
            word: (1..=m).rev().collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.word.len()
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn into_word(self) -> Vec<usize> {
        self.word
    }

    /// Image of the 1-based point `t`.
    ///
    /// Panics if `t` is not in `1..=degree`.
    #[inline]
    pub fn apply(&self, t: usize) -> usize {
        self.word[t - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.word.iter().enumerate().all(|(a, &v)| v == a + 1)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.word.len()];
        for (a, &v) in self.word.iter().enumerate() {
            inv[v - 1] = a + 1;
        }
        Self { word: inv }
    }

    /// `self ∘ other`, i.e. `t ↦ self(other(t))`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                expected: self.degree(),
                found: other.degree(),
            });
        }
        Ok(Self {
            word: other.word.iter().map(|&t| self.apply(t)).collect(),
        })
    }

    pub fn coxeter_length(&self) -> usize {
        coxeter_length(self)
    }

    pub fn canonical_factorisation(&self) -> CanonicalFactorisation {
        canonical_factorisation(self)
    }

    pub fn llds(&self) -> usize {
        llds(self)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_word(f, &self.word)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        write_word(f, &self.word)?;
        write!(f, ")")
    }
}

pub(crate) fn write_word(f: &mut impl fmt::Write, word: &[usize]) -> fmt::Result {
    for (a, v) in word.iter().enumerate() {
        if a > 0 {
            f.write_char(',')?;
        }
        write!(f, "{v}")?;
    }
    Ok(())
}

/// Parses a comma separated list of positive integers. The empty string
/// parses to the empty list.
pub(crate) fn parse_word(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    let s = s
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .unwrap_or(s);
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|e| Error::InvalidInput(format!("bad entry {t:?}: {e}")))
        })
        .collect()
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::new(parse_word(s)?)
    }
}

impl Ord for Permutation {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.coxeter_length().cmp(&other.coxeter_length()))
            .then_with(|| self.word.cmp(&other.word))
    }
}

impl PartialOrd for Permutation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Number of inversions `a < b` with `p(a) > p(b)`.
pub fn coxeter_length(p: &Permutation) -> usize {
    let w = p.word();
    let mut count = 0;
    for a in 0..w.len() {
        for b in a + 1..w.len() {
            if w[a] > w[b] {
                count += 1;
            }
        }
    }
    count
}

/// An increasing subsequence together with the (1-based) positions it was
/// taken from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncreasingRun {
    pub indices: Vec<usize>,
    pub values: Vec<usize>,
}

/// Greedy left-to-right increasing subsequence: start at the first entry and
/// repeatedly jump to the nearest later entry exceeding the last one taken.
///
/// Entries must be distinct; ties are rejected.
pub fn initial_increasing_subsequence(y: &[usize]) -> Result<IncreasingRun> {
    if y.is_empty() {
        return invalid("initial increasing subsequence of an empty sequence");
    }
    check_distinct(y)?;
    let mut indices = vec![1];
    let mut values = vec![y[0]];
    let mut last = y[0];
    for (a, &v) in y.iter().enumerate().skip(1) {
        if v > last {
            indices.push(a + 1);
            values.push(v);
            last = v;
        }
    }
    Ok(IncreasingRun { indices, values })
}

fn check_distinct(y: &[usize]) -> Result<()> {
    let mut sorted = y.to_vec();
    sorted.sort_unstable();
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        return invalid(format!("sequence entries must be distinct, {} repeats", w[0]));
    }
    Ok(())
}

/// One part `π_c` of a canonical factorisation: a top line of positions and
/// a bottom line of values, both strictly increasing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Part {
    pub top: Vec<usize>,
    pub bottom: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalFactorisation {
    pub parts: Vec<Part>,
}

impl CanonicalFactorisation {
    /// Number of parts; equals the longest decreasing subsequence length.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

impl fmt::Display for CanonicalFactorisation {
    /// Renders as `1,4,6,7/4,7,8,9 | 2,5,8/2,3,6 | 3,9/1,5`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (c, part) in self.parts.iter().enumerate() {
            if c > 0 {
                write!(f, " | ")?;
            }
            write_word(f, &part.top)?;
            write!(f, "/")?;
            write_word(f, &part.bottom)?;
        }
        Ok(())
    }
}

/// Factorises the two-line array `(1..m / p)` by repeatedly extracting the
/// initial increasing subsequence of what remains and excising its columns.
pub fn canonical_factorisation(p: &Permutation) -> CanonicalFactorisation {
    let mut columns: Vec<(usize, usize)> = p
        .word()
        .iter()
        .enumerate()
        .map(|(a, &v)| (a + 1, v))
        .collect();
    let mut parts = Vec::new();
    while !columns.is_empty() {
        let mut top = Vec::new();
        let mut bottom = Vec::new();
        let mut rest = Vec::with_capacity(columns.len());
        for (x, y) in columns {
            if bottom.last().is_none_or(|&last| y > last) {
                top.push(x);
                bottom.push(y);
            } else {
                rest.push((x, y));
            }
        }
        parts.push(Part { top, bottom });
        columns = rest;
    }
    CanonicalFactorisation { parts }
}

/// Length of a longest decreasing subsequence, computed as the number of
/// parts in the canonical factorisation.
pub fn llds(p: &Permutation) -> usize {
    canonical_factorisation(p).len()
}

/// Independent longest-monotone-subsequence routines used to cross-check
/// [`llds`] and to evaluate basis membership.
pub mod oracle {
    /// Patience piles: keeps the smallest possible tail of an increasing run
    /// of each length.
    pub fn llis(y: &[usize]) -> usize {
        let mut tails: Vec<usize> = Vec::new();
        for &v in y {
            let at = tails.partition_point(|&t| t < v);
            if at == tails.len() {
                tails.push(v);
            } else {
                tails[at] = v;
            }
        }
        tails.len()
    }

    pub fn llds(y: &[usize]) -> usize {
        let mut tails: Vec<usize> = Vec::new();
        for &v in y {
            let at = tails.partition_point(|&t| t > v);
            if at == tails.len() {
                tails.push(v);
            } else {
                tails[at] = v;
            }
        }
        tails.len()
    }

    /// Exhaustive search over all `2^m` subsequences. Only for short inputs.
    pub fn llis_brute(y: &[usize]) -> usize {
        brute(y, |a, b| a < b)
    }

    pub fn llds_brute(y: &[usize]) -> usize {
        brute(y, |a, b| a > b)
    }

    fn brute(y: &[usize], ordered: impl Fn(usize, usize) -> bool) -> usize {
        assert!(y.len() <= 20, "brute force limited to length 20");
        let mut best = 0;
        for mask in 0u32..(1 << y.len()) {
            let picked: Vec<usize> = (0..y.len())
                .filter(|&a| mask & (1 << a) != 0)
                .map(|a| y[a])
                .collect();
            if picked.windows(2).all(|w| ordered(w[0], w[1])) {
                best = best.max(picked.len());
            }
        }
        best
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn rejects_bad_words() {
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!(Permutation::new(vec![1, 3]).is_err());
        assert!("1,x".parse::<Permutation>().is_err());
        assert_eq!("".parse::<Permutation>().unwrap().degree(), 0);
    }

    #[test]
    fn display_and_parse() {
        let q = p("4,2,1,7,3,8,9,6,5");
        assert_eq!(q.to_string(), "4,2,1,7,3,8,9,6,5");
        assert_eq!(format!("{q:?}"), "(4,2,1,7,3,8,9,6,5)");
        assert_eq!(p("(3,1,2)"), p("3,1,2"));
    }

    #[test]
    fn length_examples() {
        assert_eq!(coxeter_length(&p("1,2,3")), 0);
        assert_eq!(coxeter_length(&p("3,2,1")), 3);
        assert_eq!(coxeter_length(&p("4,2,1,7,3,8,9,6,5")), 12);
    }

    #[test]
    fn inverse_and_compose() {
        let q = p("2,3,1");
        assert_eq!(q.inverse(), p("3,1,2"));
        assert!(q.compose(&q.inverse()).unwrap().is_identity());
        // (2,3,1)∘(2,1,3): 1↦2↦3, 2↦1↦2, 3↦3↦1
        assert_eq!(q.compose(&p("2,1,3")).unwrap(), p("3,2,1"));
        assert!(q.compose(&p("1,2")).is_err());
    }

    #[test]
    fn initial_increasing_examples() {
        let run = initial_increasing_subsequence(&[5, 2, 1, 3, 7, 4, 6, 9]).unwrap();
        assert_eq!(run.values, vec![5, 7, 9]);
        assert_eq!(run.indices, vec![1, 5, 8]);
        assert_eq!(
            initial_increasing_subsequence(&[1, 2, 3]).unwrap().values,
            vec![1, 2, 3]
        );
        assert_eq!(initial_increasing_subsequence(&[3, 2, 1]).unwrap().values, vec![3]);
        assert!(initial_increasing_subsequence(&[]).is_err());
        assert!(initial_increasing_subsequence(&[2, 2]).is_err());
    }

    #[test]
    fn factorisation_example() {
        let f = canonical_factorisation(&p("4,2,1,7,3,8,9,6,5"));
        assert_eq!(f.to_string(), "1,4,6,7/4,7,8,9 | 2,5,8/2,3,6 | 3,9/1,5");
        assert_eq!(f.len(), 3);
    }

    #[test]
    fn factorisation_extremes() {
        let f = canonical_factorisation(&Permutation::identity(5));
        assert_eq!(f.len(), 1);
        assert_eq!(f.parts[0].bottom, vec![1, 2, 3, 4, 5]);
        let f = canonical_factorisation(&Permutation::longest(4));
        assert_eq!(f.len(), 4);
        assert!(f.parts.iter().all(|part| part.top.len() == 1));
        assert!(canonical_factorisation(&Permutation::identity(0)).is_empty());
    }

    #[test]
    fn llds_examples() {
        assert_eq!(llds(&p("4,2,1,7,3,8,9,6,5")), 3);
        assert_eq!(llds(&Permutation::identity(6)), 1);
        assert_eq!(llds(&p("3,2,1")), 3);
    }

    #[test]
    fn oracle_examples() {
        let w = [4, 2, 1, 7, 3, 8, 9, 6, 5];
        assert_eq!(oracle::llis(&w), 4);
        assert_eq!(oracle::llis_brute(&w), 4);
        assert_eq!(oracle::llds(&w), 3);
        assert_eq!(oracle::llds_brute(&w), 3);
        assert_eq!(oracle::llis(&[1, 2, 3]), 3);
        assert_eq!(oracle::llis(&[]), 0);
    }

    #[test]
    fn order_is_length_then_lex() {
        let mut v = vec![p("3,2,1"), p("1,3,2"), p("2,1,3"), p("1,2,3")];
        v.sort();
        assert_eq!(v, vec![p("1,2,3"), p("1,3,2"), p("2,1,3"), p("3,2,1")]);
    }
}
