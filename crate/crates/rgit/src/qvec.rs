//! Fixed-dimension vectors of exact rationals.

use std::fmt;
use std::ops::Index;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rat::{rat, rat_from_str, rat_to_string, Rat};

/// A point or direction in `Q^d`. Dimension is fixed at construction.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QVec(Vec<Rat>);

impl QVec {
    pub fn new(coords: Vec<Rat>) -> Self {
        QVec(coords)
    }

    pub fn zero(dim: usize) -> Self {
        QVec(vec![Rat::zero(); dim])
    }

    /// Standard basis vector `e_i`.
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = vec![Rat::zero(); dim];
        v[i] = rat(1);
        QVec(v)
    }

    /// 0/1 indicator vector of a set of indices.
    pub fn indicator(dim: usize, support: &[usize]) -> Self {
        let mut v = vec![Rat::zero(); dim];
        for &i in support {
            v[i] = rat(1);
        }
        QVec(v)
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        QVec(coords.iter().map(|&c| rat(c)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rat] {
        &self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rat> {
        self.0.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    pub fn check_dim(&self, expected: usize) -> Result<()> {
        if self.dim() != expected {
            return Err(Error::DimensionMismatch {
                expected,
                got: self.dim(),
            });
        }
        Ok(())
    }

    pub fn dot(&self, other: &QVec) -> Rat {
        debug_assert_eq!(self.dim(), other.dim());
        self.0
            .iter()
            .zip(other.0.iter())
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn norm_sq(&self) -> Rat {
        self.dot(self)
    }

    pub fn add(&self, other: &QVec) -> QVec {
        debug_assert_eq!(self.dim(), other.dim());
        QVec(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &QVec) -> QVec {
        debug_assert_eq!(self.dim(), other.dim());
        QVec(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn scale(&self, k: &Rat) -> QVec {
        QVec(self.0.iter().map(|a| a * k).collect())
    }

    pub fn neg(&self) -> QVec {
        QVec(self.0.iter().map(|a| -a).collect())
    }

    /// Sum of all coordinates.
    pub fn coord_sum(&self) -> Rat {
        self.0.iter().sum()
    }

    /// Applies a permutation of coordinate labels: `result[perm[i]] = self[i]`.
    pub fn permute(&self, perm: &[usize]) -> QVec {
        let mut out = vec![Rat::zero(); self.dim()];
        for (i, &p) in perm.iter().enumerate() {
            out[p] = self.0[i].clone();
        }
        QVec(out)
    }

    /// Parses a comma-separated list of rationals, e.g. `"1/2,1/2,1"`.
    pub fn parse(s: &str) -> Result<QVec> {
        let coords = s
            .split(',')
            .map(rat_from_str)
            .collect::<Result<Vec<_>>>()?;
        if coords.is_empty() {
            return Err(Error::EmptyInput("vector"));
        }
        Ok(QVec(coords))
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(rat_to_string).collect()
    }
}

impl Index<usize> for QVec {
    type Output = Rat;
    fn index(&self, i: usize) -> &Rat {
        &self.0[i]
    }
}

impl fmt::Debug for QVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_strings().join(", "))
    }
}

impl fmt::Display for QVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_strings().join(", "))
    }
}
