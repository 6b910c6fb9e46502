//! Sparse tensors of degree 1 to 3 over a fixed basis.
//!
//! Entries are kept in a sorted map with no stored zeros, so two tensors are
//! equal exactly when their entry maps are.

use std::collections::BTreeMap;

use crate::error::{ensure_dim, Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Field;

pub const MAX_DEGREE: usize = 3;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SparseTensor<F> {
    degree: usize,
    dim: usize,
    entries: BTreeMap<Vec<usize>, F>,
}

impl<F: Field> SparseTensor<F> {
    pub fn zero(degree: usize, dim: usize) -> Result<Self> {
        if degree == 0 || degree > MAX_DEGREE {
            return Err(Error::Unsupported(format!("tensor degree {degree}")));
        }
        Ok(SparseTensor {
            degree,
            dim,
            entries: BTreeMap::new(),
        })
    }

    /// Builds a tensor by summing the given entries; repeated indices accumulate.
    pub fn from_entries<I>(degree: usize, dim: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<usize>, F)>,
    {
        let mut t = Self::zero(degree, dim)?;
        for (idx, v) in entries {
            t.add_entry(&idx, v)?;
        }
        Ok(t)
    }

    pub fn from_vector(v: &[F]) -> Self {
        let mut t = Self::zero(1, v.len()).expect("degree 1 is valid");
        for (i, x) in v.iter().enumerate() {
            t.add_entry_unchecked(vec![i], x.clone());
        }
        t
    }

    pub fn from_matrix(m: &Matrix<F>) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::InvalidArgument("degree-2 tensor needs a square matrix".into()));
        }
        let mut t = Self::zero(2, m.rows())?;
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                t.add_entry_unchecked(vec![i, j], m[(i, j)].clone());
            }
        }
        Ok(t)
    }

    /// `v₁ ⊗ v₂ ⊗ ...`
    pub fn outer(vectors: &[&[F]]) -> Result<Self> {
        let dim = vectors.first().map_or(0, |v| v.len());
        for v in vectors {
            ensure_dim(dim, v.len())?;
        }
        let mut t = Self::zero(vectors.len(), dim)?;
        let mut idx = vec![0; vectors.len()];
        t.outer_rec(vectors, 0, F::one(), &mut idx);
        Ok(t)
    }

    fn outer_rec(&mut self, vectors: &[&[F]], pos: usize, acc: F, idx: &mut Vec<usize>) {
        if pos == vectors.len() {
            self.add_entry_unchecked(idx.clone(), acc);
            return;
        }
        for (i, x) in vectors[pos].iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            idx[pos] = i;
            self.outer_rec(vectors, pos + 1, acc.clone() * x.clone(), idx);
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&[usize], &F)> {
        self.entries.iter().map(|(k, v)| (k.as_slice(), v))
    }

    pub fn get(&self, idx: &[usize]) -> F {
        self.entries.get(idx).cloned().unwrap_or_else(F::zero)
    }

    pub fn add_entry(&mut self, idx: &[usize], value: F) -> Result<()> {
        if idx.len() != self.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: idx.len(),
            });
        }
        if let Some(&bad) = idx.iter().find(|&&i| i >= self.dim) {
            return Err(Error::IndexOutOfRange {
                index: bad,
                dim: self.dim,
            });
        }
        self.add_entry_unchecked(idx.to_vec(), value);
        Ok(())
    }

    pub(crate) fn add_entry_unchecked(&mut self, idx: Vec<usize>, value: F) {
        if value.is_zero() {
            return;
        }
        match self.entries.entry(idx) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(value);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + value;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    fn ensure_same_shape(&self, other: &Self) -> Result<()> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: other.degree,
            });
        }
        ensure_dim(self.dim, other.dim)
    }

    pub fn ensure_degree(&self, degree: usize) -> Result<()> {
        if self.degree == degree {
            Ok(())
        } else {
            Err(Error::DegreeMismatch {
                expected: degree,
                found: self.degree,
            })
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.ensure_same_shape(other)?;
        let mut out = self.clone();
        for (k, v) in &other.entries {
            out.add_entry_unchecked(k.clone(), v.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-F::one())
    }

    pub fn scale(&self, s: &F) -> Self {
        let mut out = Self {
            degree: self.degree,
            dim: self.dim,
            entries: BTreeMap::new(),
        };
        if !s.is_zero() {
            for (k, v) in &self.entries {
                out.entries.insert(k.clone(), v.clone() * s.clone());
            }
        }
        out
    }

    /// Reorders tensor factors: output axis `a` is input axis `axes[a]`.
    pub fn permute_axes(&self, axes: &[usize]) -> Result<Self> {
        ensure_dim(self.degree, axes.len())?;
        let mut seen = vec![false; self.degree];
        for &a in axes {
            if a >= self.degree || std::mem::replace(&mut seen[a], true) {
                return Err(Error::NotBijection(format!("axis order {axes:?}")));
            }
        }
        let mut out = Self::zero(self.degree, self.dim)?;
        for (k, v) in &self.entries {
            let idx = axes.iter().map(|&a| k[a]).collect();
            out.entries.insert(idx, v.clone());
        }
        Ok(out)
    }

    /// `r²¹` for a degree-2 tensor.
    pub fn transpose(&self) -> Result<Self> {
        self.ensure_degree(2)?;
        self.permute_axes(&[1, 0])
    }

    /// Applies the same linear map to every tensor factor.
    pub fn map_each(&self, m: &Matrix<F>) -> Result<Self> {
        ensure_dim(self.dim, m.cols())?;
        let cols: Vec<Vec<F>> = (0..m.cols()).map(|j| m.column(j)).collect();
        let mut out = Self::zero(self.degree, m.rows())?;
        for (k, v) in &self.entries {
            let factors: Vec<&[F]> = k.iter().map(|&i| cols[i].as_slice()).collect();
            let mut idx = vec![0; self.degree];
            out.outer_rec(&factors, 0, v.clone(), &mut idx);
        }
        Ok(out)
    }

    /// Full contraction `⟨t, ξ₁⊗...⊗ξ_d⟩` against covectors.
    pub fn pair(&self, covectors: &[&[F]]) -> Result<F> {
        ensure_dim(self.degree, covectors.len())?;
        for c in covectors {
            ensure_dim(self.dim, c.len())?;
        }
        let mut acc = F::zero();
        for (k, v) in &self.entries {
            let mut term = v.clone();
            for (&i, c) in k.iter().zip(covectors) {
                if c[i].is_zero() {
                    term = F::zero();
                    break;
                }
                term = term * c[i].clone();
            }
            acc = acc + term;
        }
        Ok(acc)
    }

    pub fn to_vector(&self) -> Result<Vec<F>> {
        self.ensure_degree(1)?;
        let mut v = vec![F::zero(); self.dim];
        for (k, x) in &self.entries {
            v[k[0]] = x.clone();
        }
        Ok(v)
    }

    pub fn to_matrix(&self) -> Result<Matrix<F>> {
        self.ensure_degree(2)?;
        let mut m = Matrix::zeros(self.dim, self.dim);
        for (k, x) in &self.entries {
            m[(k[0], k[1])] = x.clone();
        }
        Ok(m)
    }

    /// Splits a degree-2 tensor into its skew-symmetric and symmetric parts.
    pub fn skew_sym_split(&self) -> Result<(Self, Self)> {
        self.ensure_degree(2)?;
        let half = F::from_frac(1, 2);
        let t = self.transpose()?;
        let skew = self.sub(&t)?.scale(&half);
        let sym = self.add(&t)?.scale(&half);
        Ok((skew, sym))
    }

    pub fn is_symmetric(&self) -> bool {
        self.degree == 2 && self.transpose().is_ok_and(|t| t == *self)
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.degree == 2 && self.transpose().is_ok_and(|t| t == self.neg())
    }

    /// Antisymmetric under every transposition of factors.
    pub fn is_totally_antisymmetric(&self) -> bool {
        let swaps: &[&[usize]] = match self.degree {
            1 => return true,
            2 => &[&[1, 0]],
            _ => &[&[1, 0, 2], &[0, 2, 1]],
        };
        let neg = self.neg();
        swaps
            .iter()
            .all(|s| self.permute_axes(s).is_ok_and(|p| p == neg))
    }
}

/// `x ⊗ y − y ⊗ x`.
pub fn wedge<F: Field>(x: &[F], y: &[F]) -> Result<SparseTensor<F>> {
    SparseTensor::outer(&[x, y])?.sub(&SparseTensor::outer(&[y, x])?)
}

/// `A ∧ v` for a bivector `A` (stored as its antisymmetric matrix) and a vector,
/// with full alternation: `(A∧v)_{ijk} = A_ij v_k + A_jk v_i + A_ki v_j`.
pub fn wedge_bivector_vector<F: Field>(a: &SparseTensor<F>, v: &[F]) -> Result<SparseTensor<F>> {
    a.ensure_degree(2)?;
    ensure_dim(a.dim(), v.len())?;
    let mut out = SparseTensor::zero(3, a.dim())?;
    for (k, x) in a.entries() {
        let (i, j) = (k[0], k[1]);
        for (l, y) in v.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            let c = x.clone() * y.clone();
            out.add_entry_unchecked(vec![i, j, l], c.clone());
            out.add_entry_unchecked(vec![l, i, j], c.clone());
            out.add_entry_unchecked(vec![j, l, i], c);
        }
    }
    Ok(out)
}

/// Writes an antisymmetric degree-2 tensor as `Σ_{a<b} T_ab e_a∧e_b`.
pub fn bivector_terms<F: Field>(a: &SparseTensor<F>) -> Result<Vec<(usize, usize, F)>> {
    if !a.is_antisymmetric() {
        return Err(Error::WrongSymmetry("expected an antisymmetric degree-2 tensor".into()));
    }
    Ok(a
        .entries()
        .filter(|(k, _)| k[0] < k[1])
        .map(|(k, v)| (k[0], k[1], v.clone()))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::unit_vec;
    use crate::Rational as Q;

    fn e(n: usize, i: usize) -> Vec<Q> {
        unit_vec(n, i)
    }

    #[test]
    fn split_of_example_tensor() {
        let r = SparseTensor::from_entries(
            2,
            3,
            [(vec![1, 2], Q::from_int(1)), (vec![0, 0], Q::from_frac(1, 4))],
        )
        .unwrap();
        let (l, s) = r.skew_sym_split().unwrap();
        assert_eq!(l.get(&[1, 2]), Q::from_frac(1, 2));
        assert_eq!(l.get(&[2, 1]), Q::from_frac(-1, 2));
        assert_eq!(l.nnz(), 2);
        assert_eq!(s.get(&[0, 0]), Q::from_frac(1, 4));
        assert_eq!(s.get(&[1, 2]), Q::from_frac(1, 2));
        assert_eq!(s.get(&[2, 1]), Q::from_frac(1, 2));
        assert_eq!(l.add(&s).unwrap(), r);
    }

    #[test]
    fn split_rejects_other_degrees() {
        let v = SparseTensor::from_vector(&e(3, 0));
        assert!(matches!(v.skew_sym_split(), Err(Error::DegreeMismatch { .. })));
    }

    #[test]
    fn wedge_basics() {
        let w = wedge(&e(3, 0), &e(3, 1)).unwrap();
        assert_eq!(w.get(&[0, 1]), Q::from_int(1));
        assert_eq!(w.get(&[1, 0]), Q::from_int(-1));
        assert!(w.is_antisymmetric());
        let x = vec![Q::from_int(2), Q::from_frac(1, 3), Q::from_int(0)];
        assert!(wedge(&x, &x).unwrap().is_zero());
    }

    #[test]
    fn cancellation_leaves_no_zeros() {
        let mut t = SparseTensor::<Q>::zero(2, 2).unwrap();
        t.add_entry(&[0, 1], Q::from_int(3)).unwrap();
        t.add_entry(&[0, 1], Q::from_int(-3)).unwrap();
        assert!(t.is_zero());
        assert!(t.add_entry(&[0, 2], Q::from_int(1)).is_err());
    }

    #[test]
    fn triple_wedge_is_alternating() {
        let a = wedge(&e(3, 0), &e(3, 1)).unwrap();
        let t = wedge_bivector_vector(&a, &e(3, 2)).unwrap();
        assert_eq!(t.nnz(), 6);
        assert!(t.is_totally_antisymmetric());
        assert_eq!(t.get(&[0, 1, 2]), Q::from_int(1));
        assert_eq!(t.get(&[1, 0, 2]), Q::from_int(-1));
    }

    #[test]
    fn map_each_matches_outer() {
        let m = Matrix::<Q>::from_int_rows(&[&[1, 2], &[0, 3]]);
        let x = vec![Q::from_int(1), Q::from_int(-1)];
        let y = vec![Q::from_int(2), Q::from_int(5)];
        let t = SparseTensor::outer(&[&x, &y]).unwrap();
        let mx = m.mul_vec(&x).unwrap();
        let my = m.mul_vec(&y).unwrap();
        assert_eq!(t.map_each(&m).unwrap(), SparseTensor::outer(&[&mx, &my]).unwrap());
    }
}
