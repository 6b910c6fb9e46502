//! Builders for the standard example algebras and triples.

use crate::error::{Error, Result};
use crate::homlie::HomLieAlgebra;
use crate::matrix::{unit_vec, Matrix};
use crate::scalar::Field;
use crate::subspace::Subspace;
use crate::tensor::{wedge, SparseTensor};

use super::ManinTriple;

/// `sl(k)` in the basis `H_1..H_{k−1}`, then `E_{−α}` and `E_α` for positive
/// roots `α = ε_i − ε_j` (`i < j`) in lexicographic order, with
/// `E_α = E_ij`, `E_{−α} = −E_ji`, so that `[E_{−α}, E_α] = H_α`.
#[derive(Clone, Debug)]
pub struct SlK<F> {
    k: usize,
    roots: Vec<(usize, usize)>,
    basis: Vec<Matrix<F>>,
}

impl<F: Field> SlK<F> {
    pub fn new(k: usize) -> Result<Self> {
        if !(2..=3).contains(&k) {
            return Err(Error::Unsupported(format!("sl({k}); only sl(2) and sl(3) are built in")));
        }
        let roots: Vec<(usize, usize)> =
            (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).collect();
        let unit = |i: usize, j: usize| {
            let mut m = Matrix::zeros(k, k);
            m[(i, j)] = F::one();
            m
        };
        let mut basis = Vec::new();
        for l in 0..k - 1 {
            let mut h = unit(l, l);
            h[(l + 1, l + 1)] = -F::one();
            basis.push(h);
        }
        for &(i, j) in &roots {
            basis.push(unit(j, i).scale(&-F::one()));
        }
        for &(i, j) in &roots {
            basis.push(unit(i, j));
        }
        Ok(SlK { k, roots, basis })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn rank(&self) -> usize {
        self.k - 1
    }

    pub fn basis_matrices(&self) -> &[Matrix<F>] {
        &self.basis
    }

    pub fn cartan(&self) -> std::ops::Range<usize> {
        0..self.rank()
    }

    pub fn negative_roots(&self) -> std::ops::Range<usize> {
        self.rank()..self.rank() + self.roots.len()
    }

    pub fn positive_roots(&self) -> std::ops::Range<usize> {
        self.rank() + self.roots.len()..self.dim()
    }

    /// Coordinates of a traceless matrix.
    pub fn coords(&self, m: &Matrix<F>) -> Vec<F> {
        let mut v = vec![F::zero(); self.dim()];
        let mut acc = F::zero();
        for l in 0..self.rank() {
            acc = acc + m[(l, l)].clone();
            v[l] = acc.clone();
        }
        for (a, &(i, j)) in self.roots.iter().enumerate() {
            v[self.rank() + a] = -m[(j, i)].clone();
            v[self.rank() + self.roots.len() + a] = m[(i, j)].clone();
        }
        v
    }

    /// Trace form of the defining representation.
    pub fn trace_form(&self) -> Matrix<F> {
        let n = self.dim();
        let mut g = Matrix::zeros(n, n);
        for a in 0..n {
            for b in 0..n {
                let p = self.basis[a].mul(&self.basis[b]).expect("square");
                g[(a, b)] = (0..self.k).fold(F::zero(), |s, i| s + p[(i, i)].clone());
            }
        }
        g
    }

    /// Conjugation by `diag(1, −1, 1, ...)`: `E_ij ↦ (−1)^{i−j} E_ij`.
    pub fn parity_twist(&self) -> Matrix<F> {
        let mut d = vec![F::one(); self.dim()];
        for (a, &(i, j)) in self.roots.iter().enumerate() {
            if (j - i) % 2 == 1 {
                d[self.rank() + a] = -F::one();
                d[self.rank() + self.roots.len() + a] = -F::one();
            }
        }
        Matrix::diag(&d)
    }

    pub fn algebra(&self, twist: Matrix<F>) -> Result<HomLieAlgebra<F>> {
        let n = self.dim();
        let mut brackets = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                let x = &self.basis[a];
                let y = &self.basis[b];
                let c = x.mul(y)?.sub(&y.mul(x)?)?;
                brackets.push((a, b, self.coords(&c)));
            }
        }
        HomLieAlgebra::new_unchecked(n, brackets, twist)
    }
}

/// `sl(k)`, optionally twisted by the parity involution (supported for `k = 2`).
pub fn sl_k<F: Field>(k: usize, twisted: bool) -> Result<HomLieAlgebra<F>> {
    let s = SlK::new(k)?;
    let twist = if twisted {
        if k != 2 {
            return Err(Error::Unsupported(format!(
                "twisted sl({k}) does not satisfy hom-Jacobi"
            )));
        }
        s.parity_twist()
    } else {
        Matrix::identity(s.dim())
    };
    let name = if twisted { format!("sl{k}-twisted") } else { format!("sl{k}") };
    Ok(s.algebra(twist)?.with_name(name))
}

pub fn sl_form<F: Field>(k: usize) -> Result<Matrix<F>> {
    Ok(SlK::new(k)?.trace_form())
}

/// `Λ_st = ½ Σ_{α>0} E_{−α} ∧ E_α`.
pub fn lambda_st<F: Field>(k: usize) -> Result<SparseTensor<F>> {
    let s = SlK::<F>::new(k)?;
    let n = s.dim();
    let mut t = SparseTensor::zero(2, n)?;
    for (neg, pos) in s.negative_roots().zip(s.positive_roots()) {
        t = t.add(&wedge(&unit_vec(n, neg), &unit_vec(n, pos))?)?;
    }
    Ok(t.scale(&F::from_frac(1, 2)))
}

/// `span(p, q)`, abelian, `⟨p, q⟩ = 1`, parts `span(p)` and `span(q)`.
pub fn hyperbolic_plane<F: Field>() -> ManinTriple<F> {
    let algebra = HomLieAlgebra::abelian(2, Matrix::identity(2))
        .expect("shapes agree")
        .with_name("hyperbolic");
    let form = Matrix::from_int_rows(&[&[0, 1], &[1, 0]]);
    let p = Subspace::span(2, &[unit_vec(2, 0)]).expect("dim 2");
    let q = Subspace::span(2, &[unit_vec(2, 1)]).expect("dim 2");
    ManinTriple::new(algebra, form, p, q).expect("shapes agree")
}

fn concat<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    a.iter().chain(b).cloned().collect()
}

/// `𝔡 = sl(k) ⊕ 𝔥` (`𝔥` the abelian Cartan), `⟨(x₁,y₁),(x₂,y₂)⟩ = ⟨x₁,x₂⟩ − ⟨y₁,y₂⟩`,
/// part1 `{(x₊ + x₁, x₁)}`, part2 `{(x₋ + x₂, −x₂)}`.
pub fn triple_g_plus_h<F: Field>(k: usize, twisted: bool) -> Result<ManinTriple<F>> {
    let s = SlK::<F>::new(k)?;
    let g = sl_k::<F>(k, twisted)?;
    let (n, r) = (s.dim(), s.rank());
    let h = HomLieAlgebra::abelian(r, Matrix::identity(r))?;
    let algebra = g.direct_sum(&h).with_name(format!(
        "sl{k}-plus-h{}",
        if twisted { "-twisted" } else { "" }
    ));
    let tf = s.trace_form();
    let mut hform = Matrix::zeros(r, r);
    for a in 0..r {
        for b in 0..r {
            hform[(a, b)] = -tf[(a, b)].clone();
        }
    }
    let form = Matrix::block_diag(&[tf, hform]);
    let zero_h = vec![F::zero(); r];
    let mut p1 = Vec::new();
    let mut p2 = Vec::new();
    for a in s.positive_roots() {
        p1.push(concat(&unit_vec(n, a), &zero_h));
    }
    for a in s.negative_roots() {
        p2.push(concat(&unit_vec(n, a), &zero_h));
    }
    for l in s.cartan() {
        let hl = unit_vec(n, l);
        let yl: Vec<F> = unit_vec(r, l);
        p1.push(concat(&hl, &yl));
        let neg: Vec<F> = yl.iter().map(|x| -x.clone()).collect();
        p2.push(concat(&hl, &neg));
    }
    ManinTriple::new(
        algebra,
        form,
        Subspace::span(n + r, &p1)?,
        Subspace::span(n + r, &p2)?,
    )
}

/// `𝔡 = sl(k) ⊕ sl(k)` with form `⟨x₁,x₂⟩ − ⟨y₁,y₂⟩`, part1 the diagonal,
/// part2 `{(x₊ + x₀, x₋ − x₀)}`.
pub fn triple_double<F: Field>(k: usize, twisted: bool) -> Result<ManinTriple<F>> {
    let s = SlK::<F>::new(k)?;
    let g = sl_k::<F>(k, twisted)?;
    let n = s.dim();
    let algebra = g.direct_sum(&g).with_name(format!(
        "sl{k}-double{}",
        if twisted { "-twisted" } else { "" }
    ));
    let tf = s.trace_form();
    let form = Matrix::block_diag(&[tf.clone(), tf.scale(&-F::one())]);
    let zero = vec![F::zero(); n];
    let p1: Vec<Vec<F>> = (0..n).map(|a| concat(&unit_vec(n, a), &unit_vec(n, a))).collect();
    let mut p2 = Vec::new();
    for a in s.positive_roots() {
        p2.push(concat(&unit_vec(n, a), &zero));
    }
    for a in s.negative_roots() {
        p2.push(concat(&zero, &unit_vec(n, a)));
    }
    for l in s.cartan() {
        let hl: Vec<F> = unit_vec(n, l);
        let neg: Vec<F> = hl.iter().map(|x| -x.clone()).collect();
        p2.push(concat(&hl, &neg));
    }
    ManinTriple::new(
        algebra,
        form,
        Subspace::span(2 * n, &p1)?,
        Subspace::span(2 * n, &p2)?,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational as Q;

    #[test]
    fn sl2_matches_the_standard_presentation() {
        let h: HomLieAlgebra<Q> = sl_k(2, true).unwrap();
        let q = |v: &[i64]| v.iter().map(|&x| Q::from_int(x)).collect::<Vec<_>>();
        assert_eq!(h.basis_bracket(0, 1), q(&[0, -2, 0]));
        assert_eq!(h.basis_bracket(0, 2), q(&[0, 0, 2]));
        assert_eq!(h.basis_bracket(1, 2), q(&[1, 0, 0]));
        assert_eq!(h.twist(), &Matrix::diag(&q(&[1, -1, -1])));
        let g: Matrix<Q> = sl_form(2).unwrap();
        assert_eq!(g, Matrix::from_int_rows(&[&[2, 0, 0], &[0, 0, -1], &[0, -1, 0]]));
    }

    #[test]
    fn sl3_is_lie() {
        let h: HomLieAlgebra<Q> = sl_k(3, false).unwrap();
        assert_eq!(h.dim(), 8);
        assert!(h.check_hom_jacobi().passed());
        assert!(h.check_quadratic(&sl_form(3).unwrap()).passed());
    }

    #[test]
    fn lambda_st_sl2() {
        let l: SparseTensor<Q> = lambda_st(2).unwrap();
        assert_eq!(l.nnz(), 2);
        assert_eq!(l.get(&[1, 2]), Q::from_frac(1, 2));
        assert_eq!(l.get(&[2, 1]), Q::from_frac(-1, 2));
    }

    #[test]
    fn unsupported_rank() {
        assert!(matches!(SlK::<Q>::new(5), Err(Error::Unsupported(_))));
        assert!(matches!(sl_k::<Q>(3, true), Err(Error::Unsupported(_))));
    }
}
