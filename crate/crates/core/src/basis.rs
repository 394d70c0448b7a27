//! Index sets of the canonical bases of the two centraliser algebras.
//!
//! On the Schur side the basis of `End_{S(n,r)}(V^{⊗r})` is indexed by the
//! permutations of degree `r` with no decreasing subsequence longer than
//! `n`. On the partition side the basis of `End_{P_r(n)}(V^{⊗r})` is indexed
//! by permutations of degree `n` having an increasing subsequence of length
//! at least `n - r`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{self, Permutation};

/// Which of the two commuting symmetric group actions on `V^{⊗r}` is meant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// `Sym_r` acting by place permutations.
    Schur,
    /// `W_n` acting diagonally on values.
    Partition,
}

impl Side {
    pub fn as_str(self) -> &'static str {
        match self {
            Side::Schur => "schur",
            Side::Partition => "partition",
        }
    }

    /// Degree of the permutations indexing this side's basis.
    pub fn degree(self, n: usize, r: usize) -> usize {
        match self {
            Side::Schur => r,
            Side::Partition => n,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Side {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "schur" => Ok(Side::Schur),
            "partition" => Ok(Side::Partition),
            _ => Err(Error::InvalidInput(format!(
                "unknown side {s:?}, expected schur or partition"
            ))),
        }
    }
}

/// Resource limits for enumeration and matrix materialisation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Largest `m!` that will be enumerated.
    pub max_group_order: u128,
    /// Largest tensor dimension `n^r`.
    pub max_dimension: u128,
}

impl Default for Caps {
    fn default() -> Self {
        Self {
            max_group_order: 362_880,
            max_dimension: 100_000,
        }
    }
}

impl Caps {
    pub fn check_group(&self, m: usize) -> Result<()> {
        let order = (1..=m as u128).try_fold(1u128, |acc, k| acc.checked_mul(k));
        match order {
            Some(order) if order <= self.max_group_order => Ok(()),
            _ => Err(Error::CapExceeded {
                what: "symmetric group order",
                needed: order.unwrap_or(u128::MAX),
                cap: self.max_group_order,
            }),
        }
    }

    pub fn check_dimension(&self, n: usize, r: usize) -> Result<usize> {
        let dim = (n as u128).checked_pow(r as u32);
        match dim {
            Some(dim) if dim <= self.max_dimension => Ok(dim as usize),
            _ => Err(Error::CapExceeded {
                what: "tensor dimension",
                needed: dim.unwrap_or(u128::MAX),
                cap: self.max_dimension,
            }),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisSet {
    pub side: Side,
    pub n: usize,
    pub r: usize,
    pub elements: Vec<Permutation>,
}

impl BasisSet {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.position(p).is_some()
    }

    pub fn position(&self, p: &Permutation) -> Option<usize> {
        self.elements.iter().position(|q| q == p)
    }
}

/// Basis membership test without enumerating.
pub fn is_member(side: Side, n: usize, r: usize, p: &Permutation) -> bool {
    match side {
        Side::Schur => p.degree() == r && perm::llds(p) <= n,
        Side::Partition => {
            p.degree() == n && perm::oracle::llis(p.word()) + r >= n
        }
    }
}

/// All of `Sym_m` in lexicographic order of one-line words.
pub fn symmetric_group(m: usize) -> impl Iterator<Item = Permutation> {
    (1..=m)
        .permutations(m)
        .map(|word| Permutation::new(word).expect("permutations of 1..=m are valid"))
}

fn enumerate(side: Side, n: usize, r: usize, caps: &Caps) -> Result<BasisSet> {
    if n == 0 {
        return Err(Error::InvalidInput("n must be at least 1".into()));
    }
    let m = side.degree(n, r);
    caps.check_group(m)?;
    let mut elements: Vec<Permutation> = symmetric_group(m)
        .filter(|p| is_member(side, n, r, p))
        .collect();
    elements.sort();
    Ok(BasisSet {
        side,
        n,
        r,
        elements,
    })
}

/// `{σ ∈ Sym_r : llds(σ) ≤ n}` in the fixed length order.
pub fn enumerate_b(n: usize, r: usize, caps: &Caps) -> Result<BasisSet> {
    enumerate(Side::Schur, n, r, caps)
}

/// `{w ∈ W_n : llis(w) ≥ n - r}` in the fixed length order.
pub fn enumerate_c(n: usize, r: usize, caps: &Caps) -> Result<BasisSet> {
    enumerate(Side::Partition, n, r, caps)
}

pub fn enumerate_basis(side: Side, n: usize, r: usize, caps: &Caps) -> Result<BasisSet> {
    enumerate(side, n, r, caps)
}

/// Coxeter length, then one-line word. Fails on a degree mismatch.
pub fn length_order_compare(p: &Permutation, q: &Permutation) -> Result<Ordering> {
    if p.degree() != q.degree() {
        return Err(Error::DegreeMismatch {
            expected: p.degree(),
            found: q.degree(),
        });
    }
    Ok(p.cmp(q))
}

/// Checks that `order` lists exactly the elements of `basis` and never puts
/// a longer permutation before a shorter one.
pub fn check_order(basis: &BasisSet, order: &[Permutation]) -> Result<()> {
    let mut given = order.to_vec();
    given.sort();
    if given != basis.elements {
        return Err(Error::InvalidInput(format!(
            "order lists {} permutations but does not match the {} basis elements for {} n={} r={}",
            order.len(),
            basis.len(),
            basis.side,
            basis.n,
            basis.r
        )));
    }
    if let Some(w) = order
        .windows(2)
        .find(|w| w[0].coxeter_length() > w[1].coxeter_length())
    {
        return Err(Error::InvalidInput(format!(
            "order is not compatible with Coxeter length: {} comes before {}",
            w[0], w[1]
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn schur_examples() {
        let caps = Caps::default();
        let b = enumerate_b(2, 3, &caps).unwrap();
        assert_eq!(b.len(), 5);
        assert!(!b.contains(&p("3,2,1")));
        assert_eq!(enumerate_b(3, 3, &caps).unwrap().len(), 6);
        assert_eq!(enumerate_b(7, 4, &caps).unwrap().len(), 24);
        let b = enumerate_b(1, 3, &caps).unwrap();
        assert_eq!(b.elements, vec![Permutation::identity(3)]);
    }

    #[test]
    fn partition_examples() {
        let caps = Caps::default();
        let c = enumerate_c(3, 1, &caps).unwrap();
        assert_eq!(c.len(), 5);
        assert!(!c.contains(&p("3,2,1")));
        assert_eq!(enumerate_c(3, 2, &caps).unwrap().len(), 6);
        assert_eq!(enumerate_c(2, 5, &caps).unwrap().len(), 2);
        assert_eq!(
            enumerate_c(4, 0, &caps).unwrap().elements,
            vec![Permutation::identity(4)]
        );
    }

    #[test]
    fn degree_zero() {
        let b = enumerate_b(2, 0, &Caps::default()).unwrap();
        assert_eq!(b.elements, vec![Permutation::identity(0)]);
    }

    #[test]
    fn zero_rank_rejected() {
        assert!(matches!(
            enumerate_b(0, 2, &Caps::default()),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn caps_guard() {
        let caps = Caps {
            max_group_order: 100,
            max_dimension: 10,
        };
        assert!(matches!(enumerate_b(5, 5, &caps), Err(Error::CapExceeded { .. })));
        assert!(enumerate_b(4, 4, &caps).is_ok());
        assert!(matches!(caps.check_dimension(2, 4), Err(Error::CapExceeded { .. })));
        assert_eq!(caps.check_dimension(3, 2).unwrap(), 9);
        assert!(Caps::default().check_group(40).is_err());
    }

    #[test]
    fn compare_examples() {
        assert_eq!(
            length_order_compare(&p("1,2,3"), &p("2,1,3")).unwrap(),
            Ordering::Less
        );
        assert_eq!(
            length_order_compare(&p("1,3,2"), &p("2,1,3")).unwrap(),
            Ordering::Less
        );
        assert_eq!(
            length_order_compare(&p("2,3,1"), &p("2,3,1")).unwrap(),
            Ordering::Equal
        );
        assert!(length_order_compare(&p("1,2"), &p("1,2,3")).is_err());
    }

    #[test]
    fn order_override_validation() {
        let b = enumerate_b(3, 3, &Caps::default()).unwrap();
        let table_order: Vec<Permutation> = ["1,2,3", "2,1,3", "1,3,2", "2,3,1", "3,1,2", "3,2,1"]
            .iter()
            .map(|s| p(s))
            .collect();
        check_order(&b, &table_order).unwrap();
        let mut bad = table_order.clone();
        bad.swap(0, 1);
        assert!(check_order(&b, &bad).is_err());
        assert!(check_order(&b, &table_order[..5]).is_err());
    }

    #[test]
    fn side_parse() {
        assert_eq!("schur".parse::<Side>().unwrap(), Side::Schur);
        assert_eq!("partition".parse::<Side>().unwrap(), Side::Partition);
        assert!("brauer".parse::<Side>().is_err());
    }
}
