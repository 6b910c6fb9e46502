//! Permutations of `{0..n-1}`.

use std::fmt;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Field;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || std::mem::replace(&mut seen[i], true) {
                return Err(Error::NotBijection(format!("{images:?}")));
            }
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    pub fn transposition(n: usize, a: usize, b: usize) -> Result<Self> {
        if a >= n || b >= n {
            return Err(Error::IndexOutOfRange {
                index: a.max(b),
                dim: n,
            });
        }
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(a, b);
        Ok(Permutation { images })
    }

    /// `i ↦ n-1-i`.
    pub fn reversal(n: usize) -> Self {
        Permutation {
            images: (0..n).rev().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    /// `self ∘ other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Self> {
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch {
                expected: self.len(),
                found: other.len(),
            });
        }
        Ok(Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        })
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn inversions(&self) -> usize {
        let n = self.len();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.images[i] > self.images[j])
            .count()
    }

    /// Matrix sending basis vector `e_j` to `e_{σ(j)}`.
    pub fn to_matrix<F: Field>(&self) -> Matrix<F> {
        let mut m = Matrix::zeros(self.len(), self.len());
        for (j, &i) in self.images.iter().enumerate() {
            m[(i, j)] = F::one();
        }
        m
    }

    /// All permutations of `{0..n-1}` in lexicographic order of images.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (0..n).collect();
        loop {
            out.push(Permutation {
                images: cur.clone(),
            });
            let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
                break;
            };
            let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).expect("successor exists");
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}
