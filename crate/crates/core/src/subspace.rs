//! Subspaces of a coordinate space, stored as a reduced row-echelon basis.

use crate::error::{ensure_dim, Result};
use crate::matrix::{is_zero_vec, Matrix};
use crate::scalar::Field;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace<F> {
    ambient: usize,
    basis: Matrix<F>,
}

impl<F: Field> Subspace<F> {
    pub fn span(ambient: usize, vectors: &[Vec<F>]) -> Result<Self> {
        for v in vectors {
            ensure_dim(ambient, v.len())?;
        }
        let m = if vectors.is_empty() {
            Matrix::zeros(0, ambient)
        } else {
            Matrix::from_rows(vectors.to_vec())?
        };
        Ok(Self::from_rows_matrix(&m))
    }

    pub fn from_rows_matrix(m: &Matrix<F>) -> Self {
        let (r, pivots) = m.rref();
        let rows: Vec<Vec<F>> = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        let basis = if rows.is_empty() {
            Matrix::zeros(0, m.cols())
        } else {
            Matrix::from_rows(rows).expect("rows share a length")
        };
        Subspace {
            ambient: m.cols(),
            basis,
        }
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zeros(0, ambient),
        }
    }

    pub fn whole(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(ambient),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis_matrix(&self) -> &Matrix<F> {
        &self.basis
    }

    pub fn basis(&self) -> Vec<Vec<F>> {
        self.basis.row_vecs()
    }

    pub fn pivots(&self) -> Vec<usize> {
        (0..self.dim())
            .map(|i| {
                self.basis
                    .row(i)
                    .iter()
                    .position(|x| !x.is_zero())
                    .expect("basis rows are nonzero")
            })
            .collect()
    }

    /// Membership by reduction against the echelon basis.
    pub fn contains_vec(&self, v: &[F]) -> Result<bool> {
        ensure_dim(self.ambient, v.len())?;
        let mut rest = v.to_vec();
        for (i, p) in self.pivots().into_iter().enumerate() {
            if rest[p].is_zero() {
                continue;
            }
            let c = rest[p].clone();
            for (x, b) in rest.iter_mut().zip(self.basis.row(i)) {
                if !b.is_zero() {
                    *x = x.clone() - c.clone() * b.clone();
                }
            }
        }
        Ok(is_zero_vec(&rest))
    }

    pub fn contains(&self, inner: &Subspace<F>) -> Result<bool> {
        ensure_dim(self.ambient, inner.ambient)?;
        for v in inner.basis() {
            if !self.contains_vec(&v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Subspace<F>) -> Result<Self> {
        ensure_dim(self.ambient, other.ambient)?;
        let mut rows = self.basis();
        rows.extend(other.basis());
        Self::span(self.ambient, &rows)
    }

    pub fn intersection(&self, other: &Subspace<F>) -> Result<Self> {
        ensure_dim(self.ambient, other.ambient)?;
        let id = Matrix::identity(self.ambient);
        self.orthogonal_complement(&id)?
            .sum(&other.orthogonal_complement(&id)?)?
            .orthogonal_complement(&id)
    }

    /// `{x : ⟨q, x⟩ = 0 for all q}` with `⟨q, x⟩ = qᵀ·form·x`.
    pub fn orthogonal_complement(&self, form: &Matrix<F>) -> Result<Self> {
        ensure_dim(self.ambient, form.rows())?;
        ensure_dim(self.ambient, form.cols())?;
        if self.dim() == 0 {
            return Ok(Self::whole(self.ambient));
        }
        let constraints = self.basis.mul(form)?;
        Self::span(self.ambient, &constraints.null_space())
    }

    /// Annihilator in dual coordinates, `⟨bᵢ*, bⱼ⟩ = δᵢⱼ`.
    pub fn annihilator(&self) -> Result<Self> {
        self.orthogonal_complement(&Matrix::identity(self.ambient))
    }

    /// Image under a linear map acting on column vectors.
    pub fn image(&self, map: &Matrix<F>) -> Result<Self> {
        ensure_dim(self.ambient, map.cols())?;
        let rows = self
            .basis()
            .iter()
            .map(|v| map.mul_vec(v))
            .collect::<Result<Vec<_>>>()?;
        Self::span(map.rows(), &rows)
    }

    pub fn is_isotropic(&self, form: &Matrix<F>) -> Result<bool> {
        ensure_dim(self.ambient, form.rows())?;
        Ok(self.basis.mul(form)?.mul(&self.basis.transpose())?.is_zero())
    }

    pub fn is_stable_under(&self, map: &Matrix<F>) -> Result<bool> {
        self.contains(&self.image(map)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::unit_vec;
    use crate::Rational as Q;

    fn v(xs: &[i64]) -> Vec<Q> {
        xs.iter().map(|&x| Q::from_int(x)).collect()
    }

    #[test]
    fn canonical_form_is_structural() {
        let a = Subspace::span(3, &[v(&[1, 1, 0]), v(&[0, 1, 1])]).unwrap();
        let b = Subspace::span(3, &[v(&[1, 2, 1]), v(&[1, 0, -1]), v(&[2, 2, 0])]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.dim(), 2);
        assert_eq!(a.pivots(), vec![0, 1]);
    }

    #[test]
    fn containment() {
        let whole = Subspace::<Q>::whole(3);
        let l1 = Subspace::span(3, &[unit_vec(3, 0)]).unwrap();
        let l2 = Subspace::span(3, &[unit_vec(3, 1)]).unwrap();
        assert!(whole.contains(&l1).unwrap());
        assert!(!l1.contains(&l2).unwrap());
        assert!(whole.contains(&Subspace::zero(3)).unwrap());
        assert!(l1.contains(&Subspace::zero(4)).is_err());
    }

    #[test]
    fn complements() {
        let form = Matrix::<Q>::from_int_rows(&[&[0, 1], &[1, 0]]);
        let p = Subspace::span(2, &[unit_vec(2, 0)]).unwrap();
        assert_eq!(p.orthogonal_complement(&form).unwrap(), p);
        assert!(p.is_isotropic(&form).unwrap());
        assert_eq!(Subspace::<Q>::whole(2).orthogonal_complement(&form).unwrap(), Subspace::zero(2));
        assert_eq!(Subspace::<Q>::zero(2).orthogonal_complement(&form).unwrap(), Subspace::whole(2));
    }

    #[test]
    fn intersection_of_planes() {
        let a = Subspace::span(3, &[v(&[1, 0, 0]), v(&[0, 1, 0])]).unwrap();
        let b = Subspace::span(3, &[v(&[0, 1, 0]), v(&[0, 0, 1])]).unwrap();
        assert_eq!(a.intersection(&b).unwrap(), Subspace::span(3, &[v(&[0, 1, 0])]).unwrap());
    }
}
