//! Hom-Lie algebras given by structure constants and a twist matrix.
//!
//! The bracket is stored only for basis pairs `i < j`; antisymmetry holds by
//! construction. The twist `φ` acts on column vectors.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::error::{ensure_dim, Error, Result};
use crate::matrix::{dot, is_zero_vec, unit_vec, vec_sub, zero_vec, Matrix};
use crate::report::Report;
use crate::scalar::Field;

/// Sparse coordinate vector: sorted `(index, nonzero value)` pairs.
pub type SparseVec<F> = Vec<(usize, F)>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomLieAlgebra<F> {
    dim: usize,
    name: Option<String>,
    brackets: BTreeMap<(usize, usize), SparseVec<F>>,
    twist: Matrix<F>,
}

impl<F: Field> HomLieAlgebra<F> {
    /// Builds an algebra and rejects it unless the hom-Jacobi identity holds.
    pub fn new<I>(dim: usize, brackets: I, twist: Matrix<F>) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, Vec<F>)>,
    {
        let h = Self::new_unchecked(dim, brackets, twist)?;
        let rep = h.check_hom_jacobi();
        if !rep.passed() {
            return Err(Error::NotLie(format!(
                "hom-Jacobi fails on {} basis triple(s)",
                rep.failures.len()
            )));
        }
        Ok(h)
    }

    /// Builds an algebra checking only shapes. Brackets given for `i > j` are
    /// stored negated; a nonzero `[bᵢ, bᵢ]` is rejected.
    pub fn new_unchecked<I>(dim: usize, brackets: I, twist: Matrix<F>) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, Vec<F>)>,
    {
        ensure_dim(dim, twist.rows())?;
        ensure_dim(dim, twist.cols())?;
        let mut h = HomLieAlgebra {
            dim,
            name: None,
            brackets: BTreeMap::new(),
            twist,
        };
        for (i, j, v) in brackets {
            ensure_dim(dim, v.len())?;
            for idx in [i, j] {
                if idx >= dim {
                    return Err(Error::IndexOutOfRange { index: idx, dim });
                }
            }
            if i == j {
                if !is_zero_vec(&v) {
                    return Err(Error::WrongSymmetry(format!("[b{i}, b{i}] must vanish")));
                }
                continue;
            }
            let (key, v) = if i < j {
                ((i, j), v)
            } else {
                ((j, i), v.into_iter().map(|x| -x).collect())
            };
            let cur = h.basis_bracket(key.0, key.1);
            let sum: Vec<F> = cur.into_iter().zip(v).map(|(a, b)| a + b).collect();
            h.set_bracket(key, &sum);
        }
        Ok(h)
    }

    fn set_bracket(&mut self, key: (usize, usize), v: &[F]) {
        let sparse: SparseVec<F> = v
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(k, x)| (k, x.clone()))
            .collect();
        if sparse.is_empty() {
            self.brackets.remove(&key);
        } else {
            self.brackets.insert(key, sparse);
        }
    }

    pub fn abelian(dim: usize, twist: Matrix<F>) -> Result<Self> {
        Self::new_unchecked(dim, std::iter::empty(), twist)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn twist(&self) -> &Matrix<F> {
        &self.twist
    }

    /// Same brackets, different twist; no axioms are rechecked.
    pub fn with_twist_unchecked(&self, twist: Matrix<F>) -> Result<Self> {
        ensure_dim(self.dim, twist.rows())?;
        ensure_dim(self.dim, twist.cols())?;
        Ok(HomLieAlgebra {
            twist,
            ..self.clone()
        })
    }

    /// Nonzero structure constants for `i < j`, in index order.
    pub fn structure_constants(&self) -> impl Iterator<Item = (usize, usize, &[(usize, F)])> {
        self.brackets.iter().map(|(&(i, j), v)| (i, j, v.as_slice()))
    }

    pub fn is_abelian(&self) -> bool {
        self.brackets.is_empty()
    }

    pub fn basis_bracket(&self, i: usize, j: usize) -> Vec<F> {
        let mut out = zero_vec(self.dim);
        let (key, sign) = match i.cmp(&j) {
            std::cmp::Ordering::Less => ((i, j), F::one()),
            std::cmp::Ordering::Greater => ((j, i), -F::one()),
            std::cmp::Ordering::Equal => return out,
        };
        if let Some(v) = self.brackets.get(&key) {
            for (k, x) in v {
                out[*k] = x.clone() * sign.clone();
            }
        }
        out
    }

    pub fn bracket(&self, x: &[F], y: &[F]) -> Vec<F> {
        let mut out: Vec<F> = zero_vec(self.dim);
        let nx: Vec<usize> = (0..self.dim).filter(|&i| !x[i].is_zero()).collect();
        let ny: Vec<usize> = (0..self.dim).filter(|&j| !y[j].is_zero()).collect();
        for &i in &nx {
            for &j in &ny {
                if i == j {
                    continue;
                }
                let (key, c) = if i < j {
                    ((i, j), x[i].clone() * y[j].clone())
                } else {
                    ((j, i), -(x[i].clone() * y[j].clone()))
                };
                if let Some(v) = self.brackets.get(&key) {
                    for (k, s) in v {
                        out[*k] = out[*k].clone() + c.clone() * s.clone();
                    }
                }
            }
        }
        out
    }

    pub fn apply_twist(&self, x: &[F]) -> Vec<F> {
        self.twist.mul_vec(x).expect("twist is dim × dim")
    }

    /// Matrix of `ad_x = [x, ·]`.
    pub fn ad(&self, x: &[F]) -> Matrix<F> {
        let cols: Vec<Vec<F>> = (0..self.dim)
            .map(|k| self.bracket(x, &unit_vec(self.dim, k)))
            .collect();
        Matrix::from_columns(&cols).expect("square")
    }

    pub fn ad_basis(&self, i: usize) -> Matrix<F> {
        self.ad(&unit_vec(self.dim, i))
    }

    pub fn is_involutive(&self) -> bool {
        self.twist.mul(&self.twist).is_ok_and(|p| p.is_identity())
    }

    pub fn twist_is_identity(&self) -> bool {
        self.twist.is_identity()
    }

    /// `[φx,[y,z]] + [φy,[z,x]] + [φz,[x,y]]`.
    pub fn jacobiator(&self, x: &[F], y: &[F], z: &[F]) -> Vec<F> {
        let (px, py, pz) = (self.apply_twist(x), self.apply_twist(y), self.apply_twist(z));
        let a = self.bracket(&px, &self.bracket(y, z));
        let b = self.bracket(&py, &self.bracket(z, x));
        let c = self.bracket(&pz, &self.bracket(x, y));
        a.into_iter()
            .zip(b)
            .zip(c)
            .map(|((a, b), c)| a + b + c)
            .collect()
    }

    /// The jacobiator is alternating, so basis triples `i < j < k` decide it.
    pub fn check_hom_jacobi(&self) -> Report {
        let n = self.dim;
        let mut failures: Vec<(Vec<usize>, Vec<F>)> = (0..n)
            .into_par_iter()
            .flat_map_iter(|i| {
                let mut out = Vec::new();
                let ei = unit_vec(n, i);
                for j in i + 1..n {
                    let ej = unit_vec(n, j);
                    for k in j + 1..n {
                        let r = self.jacobiator(&ei, &ej, &unit_vec(n, k));
                        if !is_zero_vec(&r) {
                            out.push((vec![i, j, k], r));
                        }
                    }
                }
                out
            })
            .collect();
        failures.sort_by(|a, b| a.0.cmp(&b.0));
        let mut rep = Report::new("hom-Jacobi identity");
        rep.ran("hom-jacobi");
        for (idx, r) in failures {
            rep.fail_vec("hom-jacobi", idx, &r);
        }
        rep
    }

    /// `φ[x,y] = [φx,φy]` on basis pairs.
    pub fn check_twist_morphism(&self) -> Report {
        let mut rep = Report::new("twist is an algebra morphism");
        rep.ran("twist-morphism");
        let n = self.dim;
        let images: Vec<Vec<F>> = (0..n).map(|i| self.twist.column(i)).collect();
        for i in 0..n {
            for j in i + 1..n {
                let lhs = self.apply_twist(&self.basis_bracket(i, j));
                let rhs = self.bracket(&images[i], &images[j]);
                let r = vec_sub(&lhs, &rhs);
                if !is_zero_vec(&r) {
                    rep.fail_vec("twist-morphism", vec![i, j], &r);
                }
            }
        }
        rep
    }

    /// Both conditions making the coadjoint triple a representation.
    pub fn check_admissible_algebra(&self) -> Report {
        let mut rep = Report::new("admissible hom-Lie algebra");
        rep.ran("ad-condition-1");
        rep.ran("ad-condition-2");
        let n = self.dim;
        let phi2 = self.twist.mul(&self.twist).expect("square");
        let p = Matrix::identity(n).sub(&phi2).expect("square");
        if p.is_zero() {
            return rep;
        }
        let pcols: Vec<Vec<F>> = (0..n).map(|i| p.column(i)).collect();
        let phicols: Vec<Vec<F>> = (0..n).map(|i| self.twist.column(i)).collect();
        for i in 0..n {
            for j in 0..n {
                let r = self.bracket(&pcols[i], &phicols[j]);
                if !is_zero_vec(&r) {
                    rep.fail_vec("ad-condition-1", vec![i, j], &r);
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                for k in 0..n {
                    let ek = unit_vec(n, k);
                    let lhs = self.bracket(&pcols[i], &self.bracket(&phicols[j], &ek));
                    let rhs = self.bracket(&pcols[j], &self.bracket(&phicols[i], &ek));
                    let r = vec_sub(&lhs, &rhs);
                    if !is_zero_vec(&r) {
                        rep.fail_vec("ad-condition-2", vec![i, j, k], &r);
                    }
                }
            }
        }
        rep
    }

    /// Symmetric, nondegenerate, invariant, and `φ` self-adjoint.
    pub fn check_quadratic(&self, form: &Matrix<F>) -> Report {
        let mut rep = Report::new("quadratic form");
        let n = self.dim;
        if form.rows() != n || form.cols() != n {
            rep.fail_msg(
                "shape",
                vec![],
                format!("form is {}x{}, algebra has dim {n}", form.rows(), form.cols()),
            );
            return rep;
        }
        rep.ran("symmetric");
        for i in 0..n {
            for j in i + 1..n {
                if form[(i, j)] != form[(j, i)] {
                    let r = form[(i, j)].clone() - form[(j, i)].clone();
                    rep.fail_vec("symmetric", vec![i, j], &[r]);
                }
            }
        }
        rep.ran("nondegenerate");
        let kernel = form.null_space();
        for v in &kernel {
            rep.fail_vec("nondegenerate", vec![], v);
        }
        rep.ran("invariant");
        // g_ij = form-row of [b_i, b_j]; invariance is ⟨[b_i,b_j],b_k⟩ = ⟨b_i,[b_j,b_k]⟩.
        let paired: Vec<Vec<Vec<F>>> = (0..n)
            .into_par_iter()
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let mut row = zero_vec::<F>(n);
                        for (l, c) in self.basis_bracket(i, j).iter().enumerate() {
                            if c.is_zero() {
                                continue;
                            }
                            for (k, g) in form.row(l).iter().enumerate() {
                                if !g.is_zero() {
                                    row[k] = row[k].clone() + c.clone() * g.clone();
                                }
                            }
                        }
                        row
                    })
                    .collect()
            })
            .collect();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let lhs = paired[i][j][k].clone();
                    let rhs = paired[j][k][i].clone();
                    if lhs != rhs {
                        rep.fail_vec("invariant", vec![i, j, k], &[lhs - rhs]);
                    }
                }
            }
        }
        rep.ran("twist-self-adjoint");
        let left = self.twist.transpose().mul(form).expect("square");
        let right = form.mul(&self.twist).expect("square");
        for i in 0..n {
            for j in 0..n {
                if left[(i, j)] != right[(i, j)] {
                    let r = left[(i, j)].clone() - right[(i, j)].clone();
                    rep.fail_vec("twist-self-adjoint", vec![i, j], &[r]);
                }
            }
        }
        rep
    }

    /// Block structure constants and block-diagonal twist.
    pub fn direct_sum(&self, other: &HomLieAlgebra<F>) -> HomLieAlgebra<F> {
        Self::direct_sum_all(&[self, other])
    }

    pub fn direct_sum_all(parts: &[&HomLieAlgebra<F>]) -> HomLieAlgebra<F> {
        let dim: usize = parts.iter().map(|p| p.dim).sum();
        let twist = Matrix::block_diag(&parts.iter().map(|p| p.twist.clone()).collect::<Vec<_>>());
        let mut brackets = BTreeMap::new();
        let mut off = 0;
        for p in parts {
            for (&(i, j), v) in &p.brackets {
                let shifted = v.iter().map(|(k, x)| (k + off, x.clone())).collect();
                brackets.insert((i + off, j + off), shifted);
            }
            off += p.dim;
        }
        HomLieAlgebra {
            dim,
            name: None,
            brackets,
            twist,
        }
    }

    /// Bracket-closed and `φ`-stable.
    pub fn is_subalgebra(&self, basis: &[Vec<F>]) -> Result<bool> {
        let s = crate::subspace::Subspace::span(self.dim, basis)?;
        if !s.is_stable_under(&self.twist)? {
            return Ok(false);
        }
        let b = s.basis();
        for i in 0..b.len() {
            for j in i + 1..b.len() {
                if !s.contains_vec(&self.bracket(&b[i], &b[j]))? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// `f∘φ₁ = φ₂∘f` and `f[x,y]₁ = [fx,fy]₂`.
pub fn check_homomorphism<F: Field>(
    f: &Matrix<F>,
    h1: &HomLieAlgebra<F>,
    h2: &HomLieAlgebra<F>,
) -> Report {
    let mut rep = Report::new("hom-Lie homomorphism");
    if f.cols() != h1.dim() || f.rows() != h2.dim() {
        rep.fail_msg(
            "shape",
            vec![],
            format!("map is {}x{}, expected {}x{}", f.rows(), f.cols(), h2.dim(), h1.dim()),
        );
        return rep;
    }
    rep.ran("twist-intertwining");
    let lhs = f.mul(h1.twist()).expect("shapes checked");
    let rhs = h2.twist().mul(f).expect("shapes checked");
    for j in 0..h1.dim() {
        let r = vec_sub(&lhs.column(j), &rhs.column(j));
        if !is_zero_vec(&r) {
            rep.fail_vec("twist-intertwining", vec![j], &r);
        }
    }
    rep.ran("bracket-preserving");
    let images: Vec<Vec<F>> = (0..h1.dim()).map(|j| f.column(j)).collect();
    let rows: Vec<(usize, Vec<(usize, Vec<F>)>)> = (0..h1.dim())
        .into_par_iter()
        .map(|i| {
            let mut bad = Vec::new();
            for j in i + 1..h1.dim() {
                let l = f.mul_vec(&h1.basis_bracket(i, j)).expect("shapes checked");
                let r = h2.bracket(&images[i], &images[j]);
                let d = vec_sub(&l, &r);
                if !is_zero_vec(&d) {
                    bad.push((j, d));
                }
            }
            (i, bad)
        })
        .collect();
    for (i, bad) in rows {
        for (j, d) in bad {
            rep.fail_vec("bracket-preserving", vec![i, j], &d);
        }
    }
    rep
}

/// A representation candidate `(V, ρ, α)`: `rho[i]` is the action of basis vector `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearRep<F> {
    pub rho: Vec<Matrix<F>>,
    pub alpha: Matrix<F>,
}

impl<F: Field> LinearRep<F> {
    pub fn new(rho: Vec<Matrix<F>>, alpha: Matrix<F>) -> Result<Self> {
        let d = alpha.rows();
        ensure_dim(d, alpha.cols())?;
        for m in &rho {
            ensure_dim(d, m.rows())?;
            ensure_dim(d, m.cols())?;
        }
        Ok(LinearRep { rho, alpha })
    }

    pub fn target_dim(&self) -> usize {
        self.alpha.rows()
    }

    /// `(𝔥, ad, φ)`.
    pub fn adjoint(h: &HomLieAlgebra<F>) -> Self {
        LinearRep {
            rho: (0..h.dim()).map(|i| h.ad_basis(i)).collect(),
            alpha: h.twist().clone(),
        }
    }

    pub fn zero(h: &HomLieAlgebra<F>, target_dim: usize) -> Self {
        LinearRep {
            rho: vec![Matrix::zeros(target_dim, target_dim); h.dim()],
            alpha: Matrix::identity(target_dim),
        }
    }

    /// `(V*, ρ*, α*)` with `ρ*(x) = −ρ(x)ᵀ` and `α* = αᵀ`.
    pub fn dual(&self) -> Self {
        LinearRep {
            rho: self.rho.iter().map(|m| m.transpose().scale(&-F::one())).collect(),
            alpha: self.alpha.transpose(),
        }
    }

    /// `ρ(x)` for an arbitrary vector by linearity.
    pub fn act(&self, x: &[F]) -> Matrix<F> {
        let d = self.target_dim();
        let mut m = Matrix::zeros(d, d);
        for (c, r) in x.iter().zip(&self.rho) {
            if !c.is_zero() {
                m = m.add(&r.scale(c)).expect("same shape");
            }
        }
        m
    }
}

fn matrix_residual<F: Field>(m: &Matrix<F>) -> Vec<F> {
    (0..m.rows()).flat_map(|i| m.row(i).to_vec()).collect()
}

fn rep_shape_ok<F: Field>(h: &HomLieAlgebra<F>, rep: &LinearRep<F>, out: &mut Report) -> bool {
    if rep.rho.len() != h.dim() {
        out.fail_msg(
            "shape",
            vec![],
            format!("rho has {} matrices, algebra has dim {}", rep.rho.len(), h.dim()),
        );
        return false;
    }
    true
}

/// `ρ(φx)α = αρ(x)` and `ρ([x,y])α = ρ(φx)ρ(y) − ρ(φy)ρ(x)`.
pub fn check_representation<F: Field>(h: &HomLieAlgebra<F>, rep: &LinearRep<F>) -> Report {
    let mut out = Report::new("representation");
    if !rep_shape_ok(h, rep, &mut out) {
        return out;
    }
    out.ran("rep-twist");
    out.ran("rep-bracket");
    let n = h.dim();
    let phi_act: Vec<Matrix<F>> = (0..n).map(|i| rep.act(&h.twist().column(i))).collect();
    for i in 0..n {
        let l = phi_act[i].mul(&rep.alpha).expect("square");
        let r = rep.alpha.mul(&rep.rho[i]).expect("square");
        let d = l.sub(&r).expect("square");
        if !d.is_zero() {
            out.fail_vec("rep-twist", vec![i], &matrix_residual(&d));
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            let l = rep.act(&h.basis_bracket(i, j)).mul(&rep.alpha).expect("square");
            let r = phi_act[i]
                .mul(&rep.rho[j])
                .and_then(|a| a.sub(&phi_act[j].mul(&rep.rho[i])?))
                .expect("square");
            let d = l.sub(&r).expect("square");
            if !d.is_zero() {
                out.fail_vec("rep-bracket", vec![i, j], &matrix_residual(&d));
            }
        }
    }
    out
}

/// `αρ(φx) = ρ(x)α` and `αρ([x,y]) = ρ(x)ρ(φy) − ρ(y)ρ(φx)`: the conditions
/// under which the dual triple is again a representation. These are the
/// transposes of the dual's axioms, so no invertibility of `α` is needed.
pub fn check_admissible_representation<F: Field>(
    h: &HomLieAlgebra<F>,
    rep: &LinearRep<F>,
) -> Report {
    let mut out = Report::new("admissible representation");
    if !rep_shape_ok(h, rep, &mut out) {
        return out;
    }
    out.ran("condition-1");
    out.ran("condition-2");
    let n = h.dim();
    let phi_act: Vec<Matrix<F>> = (0..n).map(|i| rep.act(&h.twist().column(i))).collect();
    for i in 0..n {
        let l = rep.alpha.mul(&phi_act[i]).expect("square");
        let r = rep.rho[i].mul(&rep.alpha).expect("square");
        let d = l.sub(&r).expect("square");
        if !d.is_zero() {
            out.fail_vec("condition-1", vec![i], &matrix_residual(&d));
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            let l = rep.alpha.mul(&rep.act(&h.basis_bracket(i, j))).expect("square");
            let r = rep.rho[i]
                .mul(&phi_act[j])
                .and_then(|a| a.sub(&rep.rho[j].mul(&phi_act[i])?))
                .expect("square");
            let d = l.sub(&r).expect("square");
            if !d.is_zero() {
                out.fail_vec("condition-2", vec![i, j], &matrix_residual(&d));
            }
        }
    }
    out
}

/// `⟨x, y⟩ = xᵀ·form·y` evaluated on two basis vectors' images.
pub fn form_value<F: Field>(form: &Matrix<F>, x: &[F], y: &[F]) -> F {
    dot(x, &form.mul_vec(y).expect("square form"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational as Q;

    pub(crate) fn sl2(phi: &[i64]) -> HomLieAlgebra<Q> {
        let q = |v: &[i64]| v.iter().map(|&x| Q::from_int(x)).collect::<Vec<_>>();
        HomLieAlgebra::new_unchecked(
            3,
            [
                (0, 1, q(&[0, -2, 0])),
                (0, 2, q(&[0, 0, 2])),
                (1, 2, q(&[1, 0, 0])),
            ],
            Matrix::diag(&q(phi)),
        )
        .unwrap()
    }

    #[test]
    fn involutive_sl2_is_hom_lie() {
        let h = sl2(&[1, -1, -1]);
        assert!(h.check_hom_jacobi().passed());
        assert!(h.check_twist_morphism().passed());
        assert!(h.is_involutive());
        assert!(h.check_admissible_algebra().passed());
    }

    #[test]
    fn wrong_twist_breaks_morphism() {
        let h = sl2(&[1, 1, -1]);
        let rep = h.check_twist_morphism();
        assert!(!rep.passed());
        assert_eq!(rep.failures.len(), 1);
        let f = &rep.failures[0];
        assert_eq!(f.index, vec![1, 2]);
        assert_eq!(f.residual, vec!["0:2/1".to_string()]);
    }

    #[test]
    fn antisymmetry_is_structural() {
        let h = sl2(&[1, 1, 1]);
        assert_eq!(
            h.basis_bracket(2, 1),
            vec![Q::from_int(-1), Q::from_int(0), Q::from_int(0)]
        );
        let bad = HomLieAlgebra::new_unchecked(
            2,
            [(0, 0, vec![Q::from_int(1), Q::from_int(0)])],
            Matrix::identity(2),
        );
        assert!(bad.is_err());
    }

    #[test]
    fn adjoint_and_dual_representations() {
        let h = sl2(&[1, -1, -1]);
        let ad = LinearRep::adjoint(&h);
        assert!(check_representation(&h, &ad).passed());
        assert!(check_admissible_representation(&h, &ad).passed());
        assert!(check_representation(&h, &ad.dual()).passed());
        assert!(check_representation(&h, &LinearRep::zero(&h, 2)).passed());
    }

    #[test]
    fn checked_constructor_rejects_non_jacobi() {
        let q = |v: &[i64]| v.iter().map(|&x| Q::from_int(x)).collect::<Vec<_>>();
        let r = HomLieAlgebra::new(
            3,
            [
                (0, 1, q(&[0, -2, 0])),
                (0, 2, q(&[0, 0, 2])),
                (1, 2, q(&[0, 1, 0])),
            ],
            Matrix::identity(3),
        );
        assert!(matches!(r, Err(Error::NotLie(_))));
    }
}
