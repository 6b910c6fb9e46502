//! Stabilizer subalgebras of linear actions and the coisotropy-type
//! conditions on them.

use crate::error::{ensure_dim, Error, Result};
use crate::homlie::{HomLieAlgebra, LinearRep};
use crate::manin::ManinTriple;
use crate::matrix::Matrix;
use crate::report::Report;
use crate::rmatrix::sharp_matrix;
use crate::scalar::Field;
use crate::subspace::Subspace;
use crate::tensor::SparseTensor;

/// An action of an algebra on `ℚ^space_dim`, one matrix per basis element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearAction<F> {
    algebra: HomLieAlgebra<F>,
    space_dim: usize,
    act: Vec<Matrix<F>>,
}

impl<F: Field> LinearAction<F> {
    pub fn new(algebra: HomLieAlgebra<F>, space_dim: usize, act: Vec<Matrix<F>>) -> Result<Self> {
        ensure_dim(algebra.dim(), act.len())?;
        for m in &act {
            ensure_dim(space_dim, m.rows())?;
            ensure_dim(space_dim, m.cols())?;
        }
        Ok(LinearAction {
            algebra,
            space_dim,
            act,
        })
    }

    pub fn adjoint(h: &HomLieAlgebra<F>) -> Self {
        let rep = LinearRep::adjoint(h);
        LinearAction {
            algebra: h.clone(),
            space_dim: h.dim(),
            act: rep.rho,
        }
    }

    pub fn algebra(&self) -> &HomLieAlgebra<F> {
        &self.algebra
    }

    pub fn space_dim(&self) -> usize {
        self.space_dim
    }

    pub fn matrices(&self) -> &[Matrix<F>] {
        &self.act
    }

    /// The action matrix of an arbitrary element.
    pub fn act(&self, x: &[F]) -> Matrix<F> {
        let mut m = Matrix::zeros(self.space_dim, self.space_dim);
        for (c, a) in x.iter().zip(&self.act) {
            if !c.is_zero() {
                m = m.add(&a.scale(c)).expect("same shape");
            }
        }
        m
    }

    /// `act[x,y] = act(x)act(y) − act(y)act(x)`, checked only for an identity twist.
    pub fn check_action(&self) -> Report {
        if !self.algebra.twist_is_identity() {
            return Report::inapplicable(
                "Lie action",
                "no finite-dimensional action axiom is checked for a non-identity twist",
            );
        }
        let mut rep = Report::new("Lie action");
        rep.ran("action-bracket");
        let n = self.algebra.dim();
        for i in 0..n {
            for j in i + 1..n {
                let lhs = self.act(&self.algebra.basis_bracket(i, j));
                let rhs = self.act[i]
                    .mul(&self.act[j])
                    .and_then(|a| a.sub(&self.act[j].mul(&self.act[i])?))
                    .expect("square");
                let diff = lhs.sub(&rhs).expect("same shape");
                if !diff.is_zero() {
                    let flat: Vec<F> = (0..diff.rows()).flat_map(|r| diff.row(r).to_vec()).collect();
                    rep.fail_vec("action-bracket", vec![i, j], &flat);
                }
            }
        }
        rep
    }
}

/// `{x : act(x)·point = 0}`.
pub fn stabilizer_at<F: Field>(a: &LinearAction<F>, point: &[F]) -> Result<Subspace<F>> {
    ensure_dim(a.space_dim, point.len())?;
    let n = a.algebra.dim();
    let cols = a
        .act
        .iter()
        .map(|m| m.mul_vec(point))
        .collect::<Result<Vec<_>>>()?;
    if a.space_dim == 0 {
        return Ok(Subspace::whole(n));
    }
    let m = Matrix::from_columns(&cols)?;
    Subspace::span(n, &m.null_space())
}

fn brackets_inside<F: Field>(h: &HomLieAlgebra<F>, vs: &[Vec<F>], q: &Subspace<F>) -> Result<bool> {
    for (i, x) in vs.iter().enumerate() {
        for y in &vs[i + 1..] {
            if !q.contains_vec(&h.bracket(x, y))? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `[q^⊥, q^⊥] ⊆ q` with `q^⊥` taken against `form`.
pub fn check_coisotropy_with_form<F: Field>(
    h: &HomLieAlgebra<F>,
    form: &Matrix<F>,
    q: &Subspace<F>,
) -> Result<bool> {
    ensure_dim(h.dim(), q.ambient_dim())?;
    let perp = q.orthogonal_complement(form)?;
    brackets_inside(h, &perp.basis(), q)
}

pub fn check_coisotropy<F: Field>(t: &ManinTriple<F>, q: &Subspace<F>) -> Result<bool> {
    check_coisotropy_with_form(t.algebra(), t.form(), q)
}

fn sharp_of_annihilator<F: Field>(
    h: &HomLieAlgebra<F>,
    s: &SparseTensor<F>,
    q: &Subspace<F>,
) -> Result<Vec<Vec<F>>> {
    ensure_dim(h.dim(), q.ambient_dim())?;
    if !s.is_symmetric() {
        return Err(Error::WrongSymmetry("S♯ needs a symmetric tensor".into()));
    }
    let sharp = sharp_matrix(h, s)?;
    q.annihilator()?
        .basis()
        .iter()
        .map(|xi| sharp.mul_vec(xi))
        .collect()
}

/// `S♯(q^⊥) ⊆ q` with `q^⊥` the annihilator in the dual space.
pub fn check_s_sharp_condition<F: Field>(
    h: &HomLieAlgebra<F>,
    s: &SparseTensor<F>,
    q: &Subspace<F>,
) -> Result<bool> {
    for v in sharp_of_annihilator(h, s, q)? {
        if !q.contains_vec(&v)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `[S♯(q^⊥), S♯(q^⊥)] ⊆ q`.
pub fn check_bracket_sharp_condition<F: Field>(
    h: &HomLieAlgebra<F>,
    s: &SparseTensor<F>,
    q: &Subspace<F>,
) -> Result<bool> {
    brackets_inside(h, &sharp_of_annihilator(h, s, q)?, q)
}

pub fn check_phi_stable<F: Field>(q: &Subspace<F>, phi: &Matrix<F>) -> Result<bool> {
    q.is_stable_under(phi)
}

/// Whether `q` is closed under the bracket.
pub fn is_subalgebra<F: Field>(h: &HomLieAlgebra<F>, q: &Subspace<F>) -> Result<bool> {
    brackets_inside(h, &q.basis(), q)
}

/// The defining action of `sl(2)` on `ℚ²` in the basis `H, E₋, E₊`.
pub fn sl2_defining_action<F: Field>(h: &HomLieAlgebra<F>) -> Result<LinearAction<F>> {
    ensure_dim(3, h.dim())?;
    let act = vec![
        Matrix::from_int_rows(&[&[1, 0], &[0, -1]]),
        Matrix::from_int_rows(&[&[0, 0], &[-1, 0]]),
        Matrix::from_int_rows(&[&[0, 1], &[0, 0]]),
    ];
    LinearAction::new(h.clone(), 2, act)
}
