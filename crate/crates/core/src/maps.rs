//! Entry selectors: maps sending each basis permutation to one matrix
//! coordinate `(i, j)` of `End(V^{⊗r})`.
//!
//! The Schur side colours a permutation by its canonical factorisation; the
//! partition side records a permutation on the complement of a chosen
//! increasing subsequence. Both come with left inverses.

use std::fmt;
use std::str::FromStr;

use crate::error::{invalid, Error, Result};
use crate::perm::{self, parse_word, write_word, Permutation};

/// A multi-index in `[n]^r`, labelling the basis vector
/// `v_{j_1} ⊗ ... ⊗ v_{j_r}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiIndex {
    entries: Vec<usize>,
    n: usize,
}

impl MultiIndex {
    pub fn new(entries: Vec<usize>, n: usize) -> Result<Self> {
        if let Some(&e) = entries.iter().find(|&&e| e == 0 || e > n) {
            return invalid(format!("multi-index entry {e} outside 1..={n}"));
        }
        Ok(Self { entries, n })
    }

    pub fn parse(s: &str, n: usize) -> Result<Self> {
        Self::new(parse_word(s)?, n)
    }

    /// `(1, 2, ..., r)` over the alphabet `[n]`.
    pub fn range(r: usize, n: usize) -> Result<Self> {
        Self::new((1..=r).collect(), n)
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// Alphabet bound.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Length.
    pub fn r(&self) -> usize {
        self.entries.len()
    }

    /// Same entries over a larger (or equal) alphabet.
    pub fn with_alphabet(&self, n: usize) -> Result<Self> {
        Self::new(self.entries.clone(), n)
    }

    pub fn weight(&self) -> Weight {
        let mut counts = vec![0; self.n];
        for &e in &self.entries {
            counts[e - 1] += 1;
        }
        Weight { counts }
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_word(f, &self.entries)
    }
}

impl fmt::Debug for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        write_word(f, &self.entries)?;
        write!(f, ")")
    }
}

/// Composition `(μ_1, ..., μ_n)` counting occurrences of each letter.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Weight {
    pub counts: Vec<usize>,
}

impl Weight {
    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }
}

/// A matrix coordinate `(row, col)`, i.e. the entry `X_{row, col}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EntrySelector {
    pub row: MultiIndex,
    pub col: MultiIndex,
}

impl EntrySelector {
    pub fn new(row: MultiIndex, col: MultiIndex) -> Result<Self> {
        if row.n() != col.n() || row.r() != col.r() {
            return invalid(format!(
                "selector halves disagree: row in [{}]^{}, col in [{}]^{}",
                row.n(),
                row.r(),
                col.n(),
                col.r()
            ));
        }
        Ok(Self { row, col })
    }

    pub fn n(&self) -> usize {
        self.row.n()
    }

    pub fn r(&self) -> usize {
        self.row.r()
    }

    pub fn with_alphabet(&self, n: usize) -> Result<Self> {
        Self::new(self.row.with_alphabet(n)?, self.col.with_alphabet(n)?)
    }
}

impl fmt::Display for EntrySelector {
    /// Two lines, row first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.row)?;
        write!(f, "{}", self.col)
    }
}

impl fmt::Debug for EntrySelector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?},{:?})", self.row, self.col)
    }
}

impl FromStr for EntrySelector {
    type Err = Error;

    /// Parses `"i / j"` or two lines; the alphabet is the largest entry.
    fn from_str(s: &str) -> Result<Self> {
        let halves: Vec<&str> = if s.contains('/') {
            s.split('/').collect()
        } else {
            s.lines().filter(|l| !l.trim().is_empty()).collect()
        };
        let [row, col] = halves.as_slice() else {
            return invalid(format!("selector {s:?} must have exactly two halves"));
        };
        let row = parse_word(row)?;
        let col = parse_word(col)?;
        let n = row.iter().chain(&col).copied().max().unwrap_or(0);
        Self::new(MultiIndex::new(row, n)?, MultiIndex::new(col, n)?)
    }
}

/// Colours each position by the part of the canonical factorisation it
/// belongs to: `row_α = c` when `α` is in the top line of part `c`, and
/// `col_α = c` when `α` is in the bottom line of part `c`.
///
/// The alphabet of the result is the number of parts `k = llds(σ)`.
pub fn phi_prime(sigma: &Permutation) -> EntrySelector {
    let factorisation = perm::canonical_factorisation(sigma);
    let r = sigma.degree();
    let k = factorisation.len();
    let mut row = vec![0; r];
    let mut col = vec![0; r];
    for (c, part) in factorisation.parts.iter().enumerate() {
        for &a in &part.top {
            row[a - 1] = c + 1;
        }
        for &v in &part.bottom {
            col[v - 1] = c + 1;
        }
    }
    EntrySelector {
        row: MultiIndex { entries: row, n: k },
        col: MultiIndex { entries: col, n: k },
    }
}

/// [`phi_prime`] restricted to permutations with `llds(σ) ≤ n`, embedded in
/// `[n]^r × [n]^r`.
pub fn phi(sigma: &Permutation, n: usize) -> Result<EntrySelector> {
    let sel = phi_prime(sigma);
    if sel.n() > n {
        return Err(Error::Domain {
            what: format!("permutation {sigma}"),
            reason: format!(
                "longest decreasing subsequence {} exceeds n = {n}",
                sel.n()
            ),
        });
    }
    sel.with_alphabet(n)
}

/// Recovers `σ` from a colouring: for each colour `c`, the positions of `c`
/// in the row are sent in increasing order to the positions of `c` in the
/// column.
pub fn phi_left_inverse(sel: &EntrySelector) -> Result<Permutation> {
    let r = sel.r();
    if sel.col.r() != r {
        return invalid("selector halves have different lengths");
    }
    let (wr, wc) = (sel.row.weight(), sel.col.weight());
    if wr != wc {
        return invalid(format!(
            "row weight {:?} differs from column weight {:?}",
            wr.counts, wc.counts
        ));
    }
    let mut word = vec![0; r];
    for c in 1..=sel.n() {
        let tops = positions_of(sel.row.entries(), c);
        let bottoms = positions_of(sel.col.entries(), c);
        for (a, v) in tops.zip(bottoms) {
            word[a - 1] = v;
        }
    }
    Permutation::new(word)
}

fn positions_of(entries: &[usize], c: usize) -> impl Iterator<Item = usize> + '_ {
    entries
        .iter()
        .enumerate()
        .filter(move |(_, &e)| e == c)
        .map(|(a, _)| a + 1)
}

/// Stable-range selector for `n ≥ r`: row `(1, ..., r)` and the column `j`
/// with `jσ = (1, ..., r)`, so `σ` is the only permutation matching it.
pub fn phi_stable(sigma: &Permutation, n: usize) -> Result<EntrySelector> {
    let r = sigma.degree();
    if n < r {
        return Err(Error::Domain {
            what: format!("stable selector for {sigma}"),
            reason: format!("requires n ≥ r, got n = {n}, r = {r}"),
        });
    }
    EntrySelector::new(
        MultiIndex::range(r, n)?,
        MultiIndex::new(sigma.inverse().into_word(), n)?,
    )
}

/// Lexicographically smallest set of `m` positions (1-based, increasing)
/// carrying increasing values in `w`.
///
/// For `m = 1` this is the first position.
pub fn choose_increasing_subsequence(w: &Permutation, m: usize) -> Result<Vec<usize>> {
    let word = w.word();
    let len = word.len();
    // longest increasing run starting at each position
    let mut from = vec![1usize; len];
    for a in (0..len).rev() {
        for b in a + 1..len {
            if word[b] > word[a] {
                from[a] = from[a].max(from[b] + 1);
            }
        }
    }
    let mut chosen = Vec::with_capacity(m);
    let mut start = 0;
    let mut last = 0;
    while chosen.len() < m {
        let needed = m - chosen.len();
        let Some(a) = (start..len).find(|&a| word[a] > last && from[a] >= needed) else {
            return Err(Error::Domain {
                what: format!("permutation {w}"),
                reason: format!("has no increasing subsequence of length {m}"),
            });
        };
        chosen.push(a + 1);
        last = word[a];
        start = a + 1;
    }
    Ok(chosen)
}

/// The partition-side selector for `w ∈ C(n, r)`.
///
/// For `r ≤ n - 1` the column lists the positions outside the chosen
/// increasing subsequence and the row lists `w` at those positions. For
/// `r > n - 1` the selector for `n - 1` is padded with columns `1` and rows
/// `w(1)`.
pub fn psi(w: &Permutation, n: usize, r: usize) -> Result<EntrySelector> {
    if w.degree() != n {
        return Err(Error::DegreeMismatch {
            expected: n,
            found: w.degree(),
        });
    }
    let base_r = r.min(n.saturating_sub(1));
    let keep = choose_increasing_subsequence(w, n - base_r).map_err(|_| Error::Domain {
        what: format!("permutation {w}"),
        reason: format!("longest increasing subsequence is shorter than n - r = {}", n - base_r),
    })?;
    psi_with_positions(w, n, r, &keep)
}

/// [`psi`] with the increasing subsequence given explicitly by its
/// positions. Requires `r ≤ n - 1` unless the padded form applies, in which
/// case the positions must have length one.
pub fn psi_with_positions(
    w: &Permutation,
    n: usize,
    r: usize,
    positions: &[usize],
) -> Result<EntrySelector> {
    if w.degree() != n {
        return Err(Error::DegreeMismatch {
            expected: n,
            found: w.degree(),
        });
    }
    if n == 0 {
        return invalid("n must be at least 1");
    }
    let base_r = r.min(n - 1);
    if positions.len() != n - base_r {
        return invalid(format!(
            "expected an increasing subsequence of length {}, got {}",
            n - base_r,
            positions.len()
        ));
    }
    if positions.iter().any(|&a| a == 0 || a > n) {
        return invalid("subsequence position out of range");
    }
    if !positions.windows(2).all(|p| p[0] < p[1] && w.apply(p[0]) < w.apply(p[1])) {
        return invalid(format!(
            "positions {positions:?} do not carry an increasing subsequence of {w}"
        ));
    }
    let mut col: Vec<usize> = (1..=n).filter(|a| !positions.contains(a)).collect();
    let mut row: Vec<usize> = col.iter().map(|&a| w.apply(a)).collect();
    for _ in base_r..r {
        col.push(1);
        row.push(w.apply(1));
    }
    EntrySelector::new(MultiIndex::new(row, n)?, MultiIndex::new(col, n)?)
}

/// Rebuilds `w` from a partition-side selector: `w(col_b) = row_b`, with the
/// unused values filling the remaining positions in increasing order.
/// Padding columns beyond `n - 1` are checked and stripped first.
pub fn psi_inverse(sel: &EntrySelector, n: usize) -> Result<Permutation> {
    if sel.n() > n {
        return invalid(format!("selector alphabet {} exceeds n = {n}", sel.n()));
    }
    if n == 0 {
        return invalid("n must be at least 1");
    }
    let base_r = sel.r().min(n - 1);
    let (row, row_pad) = sel.row.entries().split_at(base_r);
    let (col, col_pad) = sel.col.entries().split_at(base_r);
    if !col.windows(2).all(|c| c[0] < c[1]) {
        return invalid(format!("selector column {} is not strictly increasing", sel.col));
    }
    let mut used = vec![false; n];
    for &v in row {
        if std::mem::replace(&mut used[v - 1], true) {
            return invalid(format!("selector row {} repeats value {v}", sel.row));
        }
    }
    let mut word = vec![0; n];
    for (&a, &v) in col.iter().zip(row) {
        word[a - 1] = v;
    }
    let mut unused = (1..=n).filter(|v| !used[v - 1]);
    for slot in word.iter_mut().filter(|s| **s == 0) {
        *slot = unused.next().expect("counts agree");
    }
    if col_pad.iter().any(|&c| c != 1) || row_pad.iter().any(|&v| v != word[0]) {
        return invalid(format!(
            "padding of selector {:?} is not (w(1), 1) repeated",
            sel
        ));
    }
    Permutation::new(word)
}
