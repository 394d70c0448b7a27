//! Decomposition of an invariant `X` in the canonical basis via the
//! unitriangular subsystem picked out by the entry selectors.
//!
//! Rows of the coefficient matrix `A` are indexed by the basis element whose
//! selector names the equation, columns by the unknown coefficient:
//! `A[p', p]` is the entry of the basis matrix for `p` at the selector of
//! `p'`. Under a length-compatible order `A` is upper unitriangular.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::basis::{self, Caps, Side};
use crate::error::{invalid, Error, Result};
use crate::maps::{self, EntrySelector, MultiIndex};
use crate::perm::Permutation;
use crate::tensor::{self, multi_index_rank, multi_index_unrank};

/// Exact scalar. Integer inputs never acquire denominators.
pub type Scalar = BigRational;

/// How many offending coordinates a `NotInSpan` error carries.
pub const MAX_REPORTED_VIOLATIONS: usize = 10;

/// An `n^r × n^r` matrix stored sparsely by `(row rank, col rank)`.
/// Zero entries are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Invariant {
    pub n: usize,
    pub r: usize,
    entries: BTreeMap<(usize, usize), Scalar>,
}

impl Invariant {
    pub fn zero(n: usize, r: usize) -> Self {
        Self {
            n,
            r,
            entries: BTreeMap::new(),
        }
    }

    fn check_index(&self, j: &MultiIndex) -> Result<()> {
        if j.n() != self.n || j.r() != self.r {
            return invalid(format!(
                "multi-index {j} is not in [{}]^{}",
                self.n, self.r
            ));
        }
        Ok(())
    }

    pub fn get(&self, row: &MultiIndex, col: &MultiIndex) -> Result<Scalar> {
        self.check_index(row)?;
        self.check_index(col)?;
        Ok(self.get_ranked(multi_index_rank(row), multi_index_rank(col)))
    }

    pub fn get_ranked(&self, row: usize, col: usize) -> Scalar {
        self.entries
            .get(&(row, col))
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }

    pub fn set(&mut self, row: &MultiIndex, col: &MultiIndex, value: Scalar) -> Result<()> {
        self.check_index(row)?;
        self.check_index(col)?;
        let key = (multi_index_rank(row), multi_index_rank(col));
        if value.is_zero() {
            self.entries.remove(&key);
        } else {
            self.entries.insert(key, value);
        }
        Ok(())
    }

    fn add_ranked(&mut self, key: (usize, usize), value: &Scalar) {
        let slot = self.entries.entry(key).or_insert_with(Scalar::zero);
        *slot += value;
        if slot.is_zero() {
            self.entries.remove(&key);
        }
    }

    /// Nonzero entries in `(row, col)` rank order.
    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), &Scalar)> {
        self.entries.iter().map(|(&k, v)| (k, v))
    }

    /// Nonzero entries with their multi-indices.
    pub fn entries(&self) -> Result<Vec<(MultiIndex, MultiIndex, Scalar)>> {
        self.entries
            .iter()
            .map(|(&(i, j), v)| {
                Ok((
                    multi_index_unrank(i, self.n, self.r)?,
                    multi_index_unrank(j, self.n, self.r)?,
                    v.clone(),
                ))
            })
            .collect()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    /// `Σ coeff · rep(p)` over the given terms.
    pub fn from_combination<'a>(
        side: Side,
        n: usize,
        r: usize,
        terms: impl IntoIterator<Item = (&'a Permutation, &'a Scalar)>,
        caps: &Caps,
    ) -> Result<Self> {
        let mut x = Self::zero(n, r);
        for (p, coeff) in terms {
            if coeff.is_zero() {
                continue;
            }
            let m = tensor::rep_matrix(side, p, n, r, caps)?;
            for (col, &row) in m.mapping.iter().enumerate() {
                x.add_ranked((row, col), coeff);
            }
        }
        Ok(x)
    }
}

/// Upper unitriangular (0,1) matrix, stored as the sorted column indices of
/// the ones in each row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffMatrix {
    rows: Vec<Vec<usize>>,
}

impl CoeffMatrix {
    pub fn from_dense(dense: &[Vec<u8>]) -> Result<Self> {
        let size = dense.len();
        let mut rows = Vec::with_capacity(size);
        for row in dense {
            if row.len() != size {
                return invalid("coefficient matrix is not square");
            }
            rows.push(
                row.iter()
                    .enumerate()
                    .filter_map(|(c, &e)| match e {
                        0 => None,
                        _ => Some(c),
                    })
                    .collect(),
            );
        }
        let m = Self { rows };
        m.check_unitriangular()?;
        Ok(m)
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, row: usize, col: usize) -> u8 {
        u8::from(self.rows[row].binary_search(&col).is_ok())
    }

    /// Columns holding a 1 in `row`.
    pub fn row_support(&self, row: usize) -> &[usize] {
        &self.rows[row]
    }

    pub fn to_dense(&self) -> Vec<Vec<u8>> {
        (0..self.size())
            .map(|i| (0..self.size()).map(|j| self.get(i, j)).collect())
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        self.rows.iter().enumerate().all(|(i, row)| row == &[i])
    }

    fn check_unitriangular(&self) -> Result<()> {
        for (i, row) in self.rows.iter().enumerate() {
            if row.first() != Some(&i) {
                return Err(Error::NotUnitriangular(format!(
                    "row {i} does not start with a 1 on the diagonal"
                )));
            }
        }
        Ok(())
    }
}

/// Dense integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    pub rows: Vec<Vec<BigInt>>,
}

impl IntMatrix {
    pub fn identity(size: usize) -> Self {
        Self {
            rows: (0..size)
                .map(|i| {
                    (0..size)
                        .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                        .collect()
                })
                .collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    /// `A · self` for a coefficient matrix `A`.
    pub fn left_mul(&self, a: &CoeffMatrix) -> IntMatrix {
        let size = self.size();
        let rows = (0..size)
            .map(|i| {
                (0..size)
                    .map(|j| a.row_support(i).iter().map(|&k| &self.rows[k][j]).sum())
                    .collect()
            })
            .collect();
        IntMatrix { rows }
    }

    /// `self · v`.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.rows
            .iter()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .filter(|(a, _)| !a.is_zero())
                    .map(|(a, x)| Scalar::from_integer(a.clone()) * x)
                    .sum()
            })
            .collect()
    }
}

/// Inverts an upper unitriangular (0,1) matrix by peeling off the largest
/// trailing identity block:
///
/// ```text
/// A = [ Y  Z ]      A⁻¹ = [ Y⁻¹  -Y⁻¹Z ]
///     [ 0  I ]            [ 0     I    ]
/// ```
///
/// and recursing on `Y` down to the 1×1 matrix `[1]`.
pub fn invert_unitriangular(a: &CoeffMatrix) -> Result<IntMatrix> {
    a.check_unitriangular()?;
    let size = a.size();
    let mut inv = IntMatrix::identity(size);
    invert_leading(a, size, &mut inv);
    Ok(inv)
}

/// Writes the inverse of the leading `size × size` block of `a` into the
/// same block of `inv`, which must hold the identity there on entry.
fn invert_leading(a: &CoeffMatrix, size: usize, inv: &mut IntMatrix) {
    if size <= 1 {
        return;
    }
    // rows of the leading block that are rows of the identity, from the bottom
    let trailing = (0..size)
        .rev()
        .take_while(|&i| a.row_support(i).iter().all(|&c| c == i || c >= size))
        .count();
    let split = size - trailing;
    if split == 0 {
        return;
    }
    invert_leading(a, split, inv);
    // top-right block: -Y⁻¹ Z
    for i in 0..split {
        for j in split..size {
            let mut acc = BigInt::zero();
            for k in i..split {
                if a.get(k, j) == 1 && !inv.rows[i][k].is_zero() {
                    acc += &inv.rows[i][k];
                }
            }
            inv.rows[i][j] = -acc;
        }
    }
}

/// Solves `A c = rhs` from the last row upwards.
pub fn solve_subsystem(a: &CoeffMatrix, rhs: &[Scalar]) -> Result<Vec<Scalar>> {
    if rhs.len() != a.size() {
        return Err(Error::DegreeMismatch {
            expected: a.size(),
            found: rhs.len(),
        });
    }
    a.check_unitriangular()?;
    let mut c = vec![Scalar::zero(); a.size()];
    for i in (0..a.size()).rev() {
        let mut value = rhs[i].clone();
        for &k in &a.row_support(i)[1..] {
            value -= &c[k];
        }
        c[i] = value;
    }
    Ok(c)
}

/// Solves `A c = rhs` through the explicit integral inverse.
pub fn solve_with_inverse(a: &CoeffMatrix, rhs: &[Scalar]) -> Result<Vec<Scalar>> {
    if rhs.len() != a.size() {
        return Err(Error::DegreeMismatch {
            expected: a.size(),
            found: rhs.len(),
        });
    }
    Ok(invert_unitriangular(a)?.apply(rhs))
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SolveMethod {
    #[default]
    BackSubstitution,
    ExplicitInverse,
}

#[derive(Clone, Debug, Default)]
pub struct SystemOptions {
    /// Use the stable-range selectors (Schur side, `n ≥ r`), giving `A = I`.
    pub stable_fastpath: bool,
    /// Row/column order; must list the basis in a length-compatible order.
    pub order: Option<Vec<Permutation>>,
    pub method: SolveMethod,
    pub caps: Caps,
}

/// The square subsystem: one equation per basis element.
#[derive(Clone, Debug)]
pub struct Subsystem {
    pub side: Side,
    pub n: usize,
    pub r: usize,
    pub basis: Vec<Permutation>,
    pub selectors: Vec<EntrySelector>,
    pub matrix: CoeffMatrix,
}

/// Selector assigned to `p` by the side's entry-selector map.
pub fn selector(side: Side, p: &Permutation, n: usize, r: usize, stable: bool) -> Result<EntrySelector> {
    match (side, stable) {
        (Side::Schur, false) => maps::phi(p, n),
        (Side::Schur, true) => maps::phi_stable(p, n),
        (Side::Partition, false) => maps::psi(p, n, r),
        (Side::Partition, true) => invalid(
            "the stable fast path applies to the Schur side only; partition selectors are already diagonal in the stable range",
        ),
    }
}

/// Enumerates the basis, applies the selectors and assembles `A`, failing
/// loudly if the result is not upper unitriangular with off-diagonal ones
/// only towards strictly longer permutations.
pub fn build_a(side: Side, n: usize, r: usize, opts: &SystemOptions) -> Result<Subsystem> {
    let basis_set = basis::enumerate_basis(side, n, r, &opts.caps)?;
    let basis = match &opts.order {
        Some(order) => {
            basis::check_order(&basis_set, order)?;
            order.clone()
        }
        None => basis_set.elements,
    };
    let selectors = basis
        .iter()
        .map(|p| selector(side, p, n, r, opts.stable_fastpath))
        .collect::<Result<Vec<_>>>()?;
    let lengths: Vec<usize> = basis.iter().map(Permutation::coxeter_length).collect();
    let mut rows = Vec::with_capacity(basis.len());
    for (i, sel) in selectors.iter().enumerate() {
        let mut row = Vec::new();
        for (j, p) in basis.iter().enumerate() {
            if tensor::rep_entry(side, p, sel)? == 0 {
                continue;
            }
            if j != i && (j < i || lengths[j] <= lengths[i]) {
                return Err(Error::NotUnitriangular(format!(
                    "selector of {} also picks out {} ({} {side} n={n} r={r})",
                    basis[i],
                    p,
                    if j < i { "below the diagonal" } else { "of no greater length" }
                )));
            }
            row.push(j);
        }
        if row.first() != Some(&i) {
            return Err(Error::NotUnitriangular(format!(
                "selector {sel:?} of {} misses its own permutation",
                basis[i]
            )));
        }
        rows.push(row);
    }
    Ok(Subsystem {
        side,
        n,
        r,
        basis,
        selectors,
        matrix: CoeffMatrix { rows },
    })
}

/// The entries of `X` named by the selectors, in selector order.
pub fn extract_rhs(x: &Invariant, selectors: &[EntrySelector]) -> Result<Vec<Scalar>> {
    selectors.iter().map(|s| x.get(&s.row, &s.col)).collect()
}

/// Coefficients indexed by the basis, in basis order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientVector {
    pub basis: Vec<Permutation>,
    pub values: Vec<Scalar>,
}

impl CoefficientVector {
    pub fn new(basis: Vec<Permutation>, values: Vec<Scalar>) -> Result<Self> {
        if basis.len() != values.len() {
            return Err(Error::DegreeMismatch {
                expected: basis.len(),
                found: values.len(),
            });
        }
        Ok(Self { basis, values })
    }

    pub fn zero(basis: Vec<Permutation>) -> Self {
        let values = vec![Scalar::zero(); basis.len()];
        Self { basis, values }
    }

    pub fn get(&self, p: &Permutation) -> Option<&Scalar> {
        self.basis.iter().position(|q| q == p).map(|k| &self.values[k])
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Permutation, &Scalar)> {
        self.basis.iter().zip(&self.values)
    }

    pub fn nonzero(&self) -> impl Iterator<Item = (&Permutation, &Scalar)> {
        self.iter().filter(|(_, v)| !v.is_zero())
    }

    /// Same coefficients listed in the fixed basis order.
    pub fn sorted(&self) -> Self {
        let mut pairs: Vec<_> = self.basis.iter().cloned().zip(self.values.iter().cloned()).collect();
        pairs.sort_by(|a, b| a.0.cmp(&b.0));
        let (basis, values) = pairs.into_iter().unzip();
        Self { basis, values }
    }
}

/// A coordinate where `Σ c(p) rep(p)` disagrees with `X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub row: MultiIndex,
    pub col: MultiIndex,
    pub expected: Scalar,
    pub found: Scalar,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "X[({}),({})] = {} but the combination gives {}",
            self.row, self.col, self.expected, self.found
        )
    }
}

/// Compares `Σ c(p) rep(p)` with `X` at every coordinate. An empty result
/// means the decomposition is exact.
pub fn verify_residual(
    x: &Invariant,
    c: &CoefficientVector,
    side: Side,
    caps: &Caps,
) -> Result<Vec<Violation>> {
    let combo = Invariant::from_combination(side, x.n, x.r, c.iter(), caps)?;
    let mut keys: Vec<(usize, usize)> = x.entries.keys().chain(combo.entries.keys()).copied().collect();
    keys.sort_unstable();
    keys.dedup();
    keys.into_iter()
        .filter_map(|(i, j)| {
            let expected = x.get_ranked(i, j);
            let found = combo.get_ranked(i, j);
            (expected != found).then_some((i, j, expected, found))
        })
        .map(|(i, j, expected, found)| {
            Ok(Violation {
                row: multi_index_unrank(i, x.n, x.r)?,
                col: multi_index_unrank(j, x.n, x.r)?,
                expected,
                found,
            })
        })
        .collect()
}

/// Finds the unique coefficients with `Σ c(p) rep(p) = X`, reading only the
/// selected entries of `X`, then checks every coordinate.
pub fn decompose(x: &Invariant, side: Side, opts: &SystemOptions) -> Result<CoefficientVector> {
    let system = build_a(side, x.n, x.r, opts)?;
    decompose_with(x, &system, opts)
}

/// [`decompose`] against a prebuilt subsystem.
pub fn decompose_with(x: &Invariant, system: &Subsystem, opts: &SystemOptions) -> Result<CoefficientVector> {
    if (x.n, x.r) != (system.n, system.r) {
        return invalid(format!(
            "invariant is for n={} r={} but the system is for n={} r={}",
            x.n, x.r, system.n, system.r
        ));
    }
    let rhs = extract_rhs(x, &system.selectors)?;
    let values = match opts.method {
        SolveMethod::BackSubstitution => solve_subsystem(&system.matrix, &rhs)?,
        SolveMethod::ExplicitInverse => solve_with_inverse(&system.matrix, &rhs)?,
    };
    let c = CoefficientVector::new(system.basis.clone(), values)?;
    let violations = verify_residual(x, &c, system.side, &opts.caps)?;
    if !violations.is_empty() {
        return Err(Error::NotInSpan {
            violations: violations
                .iter()
                .take(MAX_REPORTED_VIOLATIONS)
                .map(ToString::to_string)
                .collect(),
        });
    }
    Ok(c)
}

/// A seeded random integer combination of the basis (coefficients in
/// `[-9, 9]`), returned with the coefficients that generated it.
pub fn random_invariant(
    side: Side,
    n: usize,
    r: usize,
    seed: u64,
    caps: &Caps,
) -> Result<(Invariant, CoefficientVector)> {
    let basis = basis::enumerate_basis(side, n, r, caps)?.elements;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let values: Vec<Scalar> = basis
        .iter()
        .map(|_| Scalar::from_integer(BigInt::from(rng.random_range(-9i64..=9))))
        .collect();
    let c = CoefficientVector::new(basis, values)?;
    let x = Invariant::from_combination(side, n, r, c.iter(), caps)?;
    Ok((x, c))
}
