//! The two permutation actions on multi-indices and the permutation matrices
//! they induce on `V^{⊗r}`.
//!
//! Matrices follow the usual column convention: the basis vector `v_j` is
//! sent to `v_{image(j)}`, so entry `(i, j)` is 1 exactly when
//! `image(j) = i`. For the place action the image of `j` is `jσ` with
//! `(jσ)_t = j_{σ(t)}`; for the value action it is `wj` with
//! `(wj)_t = w(j_t)`.

use crate::basis::{Caps, Side};
use crate::error::{invalid, Error, Result};
use crate::maps::{EntrySelector, MultiIndex};
use crate::perm::Permutation;

/// Place permutation: `result_t = j_{σ(t)}`.
pub fn act_place(j: &MultiIndex, sigma: &Permutation) -> Result<MultiIndex> {
    if sigma.degree() != j.r() {
        return Err(Error::DegreeMismatch {
            expected: j.r(),
            found: sigma.degree(),
        });
    }
    let e = j.entries();
    MultiIndex::new((1..=j.r()).map(|t| e[sigma.apply(t) - 1]).collect(), j.n())
}

/// Value permutation: `result_t = w(j_t)`.
pub fn act_value(w: &Permutation, j: &MultiIndex) -> Result<MultiIndex> {
    if w.degree() != j.n() {
        return Err(Error::DegreeMismatch {
            expected: j.n(),
            found: w.degree(),
        });
    }
    MultiIndex::new(j.entries().iter().map(|&e| w.apply(e)).collect(), j.n())
}

/// Image of the basis vector `v_j` under the action of `p` on `side`.
pub fn act(side: Side, p: &Permutation, j: &MultiIndex) -> Result<MultiIndex> {
    match side {
        Side::Schur => act_place(j, p),
        Side::Partition => act_value(p, j),
    }
}

/// Entry of `Φ(σ)` (Schur side) or `Ψ(w)` (partition side) at `sel`.
pub fn rep_entry(side: Side, p: &Permutation, sel: &EntrySelector) -> Result<u8> {
    Ok(u8::from(act(side, p, &sel.col)? == sel.row))
}

/// Base-`n` rank with the first entry most significant.
pub fn multi_index_rank(j: &MultiIndex) -> usize {
    j.entries()
        .iter()
        .fold(0usize, |acc, &e| acc * j.n() + (e - 1))
}

pub fn multi_index_unrank(mut rank: usize, n: usize, r: usize) -> Result<MultiIndex> {
    let dim = (n as u128).checked_pow(r as u32);
    if dim.is_none_or(|d| rank as u128 >= d) {
        return invalid(format!("rank {rank} out of range for [{n}]^{r}"));
    }
    let mut entries = vec![0; r];
    for slot in entries.iter_mut().rev() {
        *slot = rank % n + 1;
        rank /= n;
    }
    MultiIndex::new(entries, n)
}

/// Sparse (0,1) permutation matrix of dimension `n^r`, stored as the row
/// rank hit by each column rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermMatrix {
    pub side: Side,
    pub n: usize,
    pub r: usize,
    pub mapping: Vec<usize>,
}

impl PermMatrix {
    pub fn dimension(&self) -> usize {
        self.mapping.len()
    }

    pub fn get(&self, row: usize, col: usize) -> u8 {
        u8::from(self.mapping[col] == row)
    }

    /// Matrix product `self · other`.
    pub fn product(&self, other: &PermMatrix) -> Result<PermMatrix> {
        if self.dimension() != other.dimension() {
            return Err(Error::DegreeMismatch {
                expected: self.dimension(),
                found: other.dimension(),
            });
        }
        Ok(PermMatrix {
            side: self.side,
            n: self.n,
            r: self.r,
            mapping: other.mapping.iter().map(|&k| self.mapping[k]).collect(),
        })
    }
}

/// Materialises `Φ(p)` or `Ψ(p)` on `V^{⊗r}` with `dim V = n`.
pub fn rep_matrix(side: Side, p: &Permutation, n: usize, r: usize, caps: &Caps) -> Result<PermMatrix> {
    if p.degree() != side.degree(n, r) {
        return Err(Error::DegreeMismatch {
            expected: side.degree(n, r),
            found: p.degree(),
        });
    }
    let dim = caps.check_dimension(n, r)?;
    let mut mapping = Vec::with_capacity(dim);
    for col in 0..dim {
        let j = multi_index_unrank(col, n, r)?;
        mapping.push(multi_index_rank(&act(side, p, &j)?));
    }
    Ok(PermMatrix {
        side,
        n,
        r,
        mapping,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn mi(s: &str, n: usize) -> MultiIndex {
        MultiIndex::parse(s, n).unwrap()
    }

    #[test]
    fn place_examples() {
        assert_eq!(act_place(&mi("1,2,3", 3), &p("3,2,1")).unwrap(), mi("3,2,1", 3));
        assert_eq!(act_place(&mi("2,1,2", 2), &Permutation::identity(3)).unwrap(), mi("2,1,2", 2));
        assert_eq!(act_place(&mi("1,1,2", 2), &p("2,3,1")).unwrap(), mi("1,2,1", 2));
        assert!(act_place(&mi("1,1", 2), &p("2,3,1")).is_err());
    }

    #[test]
    fn value_examples() {
        assert_eq!(act_value(&p("2,3,1"), &mi("3", 3)).unwrap(), mi("1", 3));
        assert_eq!(act_value(&Permutation::identity(3), &mi("3,1", 3)).unwrap(), mi("3,1", 3));
        assert_eq!(act_value(&p("3,1,2"), &mi("2,3", 3)).unwrap(), mi("1,2", 3));
        assert!(act_value(&p("2,1"), &mi("1", 3)).is_err());
    }

    #[test]
    fn entry_examples() {
        let s: EntrySelector = "1,2,3/3,2,1".parse().unwrap();
        assert_eq!(rep_entry(Side::Schur, &p("3,2,1"), &s).unwrap(), 1);
        assert_eq!(rep_entry(Side::Schur, &Permutation::identity(3), &s).unwrap(), 0);
        let s = EntrySelector::new(mi("3", 3), mi("1", 3)).unwrap();
        assert_eq!(rep_entry(Side::Partition, &p("3,1,2"), &s).unwrap(), 1);
    }

    #[test]
    fn rank_examples() {
        assert_eq!(multi_index_rank(&mi("1,1,1", 3)), 0);
        assert_eq!(multi_index_rank(&mi("3,2,1", 3)), 21);
        assert_eq!(multi_index_unrank(21, 3, 3).unwrap(), mi("3,2,1", 3));
        assert!(multi_index_unrank(27, 3, 3).is_err());
        assert_eq!(multi_index_unrank(0, 3, 0).unwrap().r(), 0);
    }

    #[test]
    fn matrix_examples() {
        let caps = Caps::default();
        let id = rep_matrix(Side::Schur, &Permutation::identity(3), 2, 3, &caps).unwrap();
        assert_eq!(id.mapping, (0..8).collect::<Vec<_>>());

        let w = p("2,3,1");
        let m = rep_matrix(Side::Partition, &w, 3, 1, &caps).unwrap();
        // column j has its 1 in row w(j)
        assert_eq!(m.mapping, vec![1, 2, 0]);

        // (1,1),(1,2),(2,1),(2,2) have ranks 0..4; the swap fixes 0 and 3
        let m = rep_matrix(Side::Schur, &p("2,1"), 2, 2, &caps).unwrap();
        assert_eq!(m.mapping, vec![0, 2, 1, 3]);
        assert_eq!(m.get(2, 1), 1);
        assert_eq!(m.get(1, 1), 0);
    }

    #[test]
    fn matrix_caps() {
        let caps = Caps {
            max_group_order: 100,
            max_dimension: 8,
        };
        assert!(rep_matrix(Side::Schur, &Permutation::identity(3), 2, 3, &caps).is_ok());
        assert!(matches!(
            rep_matrix(Side::Schur, &Permutation::identity(2), 3, 2, &caps),
            Err(Error::CapExceeded { .. })
        ));
        assert!(rep_matrix(Side::Schur, &Permutation::identity(2), 3, 3, &caps).is_err());
    }
}
