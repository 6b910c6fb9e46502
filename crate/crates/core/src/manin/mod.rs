//! Quadratic hom-Lie algebras with a Lagrangian splitting.

mod examples;

pub use examples::{
    hyperbolic_plane, lambda_st, sl_form, sl_k, triple_double, triple_g_plus_h, SlK,
};

use crate::error::{ensure_dim, Error, Result};
use crate::homlie::{check_homomorphism, HomLieAlgebra};
use crate::matrix::{dot, Matrix};
use crate::report::Report;
use crate::scalar::Field;
use crate::subspace::Subspace;
use crate::tensor::SparseTensor;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ManinTriple<F> {
    algebra: HomLieAlgebra<F>,
    form: Matrix<F>,
    part1: Subspace<F>,
    part2: Subspace<F>,
}

impl<F: Field> ManinTriple<F> {
    /// Assembles a triple checking shapes only; run [`check_manin_triple`] to certify it.
    pub fn new(
        algebra: HomLieAlgebra<F>,
        form: Matrix<F>,
        part1: Subspace<F>,
        part2: Subspace<F>,
    ) -> Result<Self> {
        let n = algebra.dim();
        ensure_dim(n, form.rows())?;
        ensure_dim(n, form.cols())?;
        ensure_dim(n, part1.ambient_dim())?;
        ensure_dim(n, part2.ambient_dim())?;
        Ok(ManinTriple {
            algebra,
            form,
            part1,
            part2,
        })
    }

    pub fn algebra(&self) -> &HomLieAlgebra<F> {
        &self.algebra
    }

    pub fn form(&self) -> &Matrix<F> {
        &self.form
    }

    pub fn part1(&self) -> &Subspace<F> {
        &self.part1
    }

    pub fn part2(&self) -> &Subspace<F> {
        &self.part2
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn pair(&self, x: &[F], y: &[F]) -> F {
        dot(x, &self.form.mul_vec(y).expect("form is dim × dim"))
    }

    pub fn with_parts(&self, part1: Subspace<F>, part2: Subspace<F>) -> Result<Self> {
        Self::new(self.algebra.clone(), self.form.clone(), part1, part2)
    }
}

fn check_part<F: Field>(t: &ManinTriple<F>, part: &Subspace<F>, label: &str, rep: &mut Report) {
    let h = t.algebra();
    let n = h.dim();
    let b = part.basis();

    let closed = format!("{label}-closed");
    rep.ran(&closed);
    for i in 0..b.len() {
        for j in i + 1..b.len() {
            let br = h.bracket(&b[i], &b[j]);
            if !part.contains_vec(&br).expect("same ambient") {
                rep.fail_vec(&closed, vec![i, j], &br);
            }
        }
    }

    let stable = format!("{label}-twist-stable");
    rep.ran(&stable);
    for (i, v) in b.iter().enumerate() {
        let img = h.apply_twist(v);
        if !part.contains_vec(&img).expect("same ambient") {
            rep.fail_vec(&stable, vec![i], &img);
        }
    }

    let iso = format!("{label}-isotropic");
    rep.ran(&iso);
    for i in 0..b.len() {
        for j in i..b.len() {
            let v = t.pair(&b[i], &b[j]);
            if !v.is_zero() {
                rep.fail_vec(&iso, vec![i, j], &[v]);
            }
        }
    }

    let half = format!("{label}-half-dimension");
    rep.expect(
        &half,
        2 * part.dim() == n,
        format!("dim {} in ambient dim {n}", part.dim()),
    );
}

/// Certifies every axiom of a (hom-)Manin triple.
pub fn check_manin_triple<F: Field>(t: &ManinTriple<F>) -> Report {
    let h = t.algebra();
    let mut rep = Report::new("Manin triple");
    rep.absorb(h.check_hom_jacobi());
    rep.absorb(h.check_twist_morphism());
    rep.absorb(h.check_quadratic(t.form()));
    check_part(t, t.part1(), "part1", &mut rep);
    check_part(t, t.part2(), "part2", &mut rep);
    let meet = t.part1().intersection(t.part2()).expect("same ambient");
    rep.expect(
        "direct-sum",
        meet.dim() == 0 && t.part1().dim() + t.part2().dim() == h.dim(),
        format!(
            "dims {} + {} with intersection of dim {} in ambient dim {}",
            t.part1().dim(),
            t.part2().dim(),
            meet.dim(),
            h.dim()
        ),
    );
    rep
}

/// Bases `x` of part1 and `ξ` of part2 with `⟨ξᵢ, xⱼ⟩ = δᵢⱼ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualBasisPair<F> {
    pub x_basis: Vec<Vec<F>>,
    pub xi_basis: Vec<Vec<F>>,
}

/// Uses the echelon basis of part1 and solves for the matching part2 basis.
pub fn dual_basis<F: Field>(t: &ManinTriple<F>) -> Result<DualBasisPair<F>> {
    dual_basis_from(t, &t.part1().basis(), &t.part2().basis())
}

/// Dual basis with an explicit part1 basis and any spanning basis of part2.
pub fn dual_basis_from<F: Field>(
    t: &ManinTriple<F>,
    x_basis: &[Vec<F>],
    part2_basis: &[Vec<F>],
) -> Result<DualBasisPair<F>> {
    if x_basis.len() != part2_basis.len() {
        return Err(Error::DimensionMismatch {
            expected: x_basis.len(),
            found: part2_basis.len(),
        });
    }
    let m = x_basis.len();
    let mut pairing = Matrix::zeros(m, m);
    for k in 0..m {
        for j in 0..m {
            pairing[(k, j)] = t.pair(&part2_basis[k], &x_basis[j]);
        }
    }
    let c = pairing
        .inverse()
        .map_err(|_| Error::Internal("pairing between the parts is singular".into()))?;
    let xi_basis = (0..m)
        .map(|i| {
            let mut v = vec![F::zero(); t.dim()];
            for (k, b) in part2_basis.iter().enumerate() {
                let ck = &c[(i, k)];
                if ck.is_zero() {
                    continue;
                }
                for (a, x) in v.iter_mut().zip(b) {
                    *a = a.clone() + ck.clone() * x.clone();
                }
            }
            v
        })
        .collect();
    Ok(DualBasisPair {
        x_basis: x_basis.to_vec(),
        xi_basis,
    })
}

/// `r = Σ ξᵢ ⊗ xᵢ` in the ambient basis.
pub fn r_from_splitting<F: Field>(t: &ManinTriple<F>) -> Result<SparseTensor<F>> {
    let db = dual_basis(t)?;
    r_from_dual_basis(t, &db)
}

pub fn r_from_dual_basis<F: Field>(
    t: &ManinTriple<F>,
    db: &DualBasisPair<F>,
) -> Result<SparseTensor<F>> {
    let mut r = SparseTensor::zero(2, t.dim())?;
    for (xi, x) in db.xi_basis.iter().zip(&db.x_basis) {
        r = r.add(&SparseTensor::outer(&[xi, x])?)?;
    }
    Ok(r)
}

/// The double `𝔤 ⊕ 𝔤*` of a Lie algebra with a bracket on the dual space.
///
/// Coordinates `0..n` are `𝔤`, `n..2n` are `𝔤*`; the pairing is canonical.
/// `dual` holds `[eᵃ, eᵇ] = Σ f^{ab}_c e^c`. Both inputs must be Lie algebras
/// with identity twist; whether the result is a Manin triple is then exactly
/// the bialgebra compatibility, decided by [`check_manin_triple`].
pub fn double_from_bialgebra<F: Field>(
    g: &HomLieAlgebra<F>,
    dual: &HomLieAlgebra<F>,
) -> Result<ManinTriple<F>> {
    let n = g.dim();
    ensure_dim(n, dual.dim())?;
    if !g.twist_is_identity() || !dual.twist_is_identity() {
        return Err(Error::InvalidArgument(
            "the double is built from Lie algebras (identity twist)".into(),
        ));
    }
    if !g.check_hom_jacobi().passed() {
        return Err(Error::NotLie("the algebra fails the Jacobi identity".into()));
    }
    if !dual.check_hom_jacobi().passed() {
        return Err(Error::NotLie("the dual bracket fails the Jacobi identity".into()));
    }
    let mut brackets = Vec::new();
    for (i, j, v) in g.structure_constants() {
        let mut out = vec![F::zero(); 2 * n];
        for (k, c) in v {
            out[*k] = c.clone();
        }
        brackets.push((i, j, out));
    }
    for (a, b, v) in dual.structure_constants() {
        let mut out = vec![F::zero(); 2 * n];
        for (c, f) in v {
            out[n + c] = f.clone();
        }
        brackets.push((n + a, n + b, out));
    }
    // [e_i, e^b] = −Σ_a f^{ab}_i e_a + Σ_k c_{ki}^b e^k
    for i in 0..n {
        for b in 0..n {
            let mut out = vec![F::zero(); 2 * n];
            for a in 0..n {
                let f = dual.basis_bracket(a, b)[i].clone();
                out[a] = -f;
            }
            for k in 0..n {
                out[n + k] = g.basis_bracket(k, i)[b].clone();
            }
            brackets.push((i, n + b, out));
        }
    }
    let algebra = HomLieAlgebra::new_unchecked(2 * n, brackets, Matrix::identity(2 * n))?;
    let mut form = Matrix::zeros(2 * n, 2 * n);
    for i in 0..n {
        form[(i, n + i)] = F::one();
        form[(n + i, i)] = F::one();
    }
    let e = |k: usize| crate::matrix::unit_vec(2 * n, k);
    let part1 = Subspace::span(2 * n, &(0..n).map(e).collect::<Vec<_>>())?;
    let part2 = Subspace::span(2 * n, &(n..2 * n).map(e).collect::<Vec<_>>())?;
    ManinTriple::new(algebra, form, part1, part2)
}

/// Dual bracket `f^{ab}_c = δ(e_c)_{ab}` of the coboundary `δ(x) = ad_x Λ`.
pub fn coboundary_dual<F: Field>(
    g: &HomLieAlgebra<F>,
    lambda: &SparseTensor<F>,
) -> Result<HomLieAlgebra<F>> {
    let n = g.dim();
    lambda.ensure_degree(2)?;
    ensure_dim(n, lambda.dim())?;
    let mut f = vec![vec![vec![F::zero(); n]; n]; n];
    for c in 0..n {
        let ad = g.ad_basis(c);
        for (idx, v) in lambda.entries() {
            let (p, q) = (idx[0], idx[1]);
            for a in 0..n {
                let x = ad[(a, p)].clone();
                if !x.is_zero() {
                    f[a][q][c] = f[a][q][c].clone() + x * v.clone();
                }
                let y = ad[(a, q)].clone();
                if !y.is_zero() {
                    f[p][a][c] = f[p][a][c].clone() + y * v.clone();
                }
            }
        }
    }
    let mut brackets = Vec::new();
    for (a, row) in f.iter().enumerate() {
        for (b, v) in row.iter().enumerate().skip(a + 1) {
            brackets.push((a, b, v.clone()));
        }
    }
    HomLieAlgebra::new_unchecked(n, brackets, Matrix::identity(n))
}

/// Bracket, form and twist preservation plus per-part image equality.
pub fn check_manin_isomorphism<F: Field>(
    f: &Matrix<F>,
    t1: &ManinTriple<F>,
    t2: &ManinTriple<F>,
) -> Report {
    let mut rep = Report::new("Manin triple isomorphism");
    rep.absorb(check_homomorphism(f, t1.algebra(), t2.algebra()));
    if f.rows() != t2.dim() || f.cols() != t1.dim() {
        return rep;
    }
    rep.ran("form-preserving");
    let pulled = f.transpose().mul(t2.form()).and_then(|m| m.mul(f)).expect("shapes checked");
    for i in 0..t1.dim() {
        for j in i..t1.dim() {
            if pulled[(i, j)] != t1.form()[(i, j)] {
                let d = pulled[(i, j)].clone() - t1.form()[(i, j)].clone();
                rep.fail_vec("form-preserving", vec![i, j], &[d]);
            }
        }
    }
    rep.expect("invertible", f.rank() == t1.dim() && f.is_square(), "map is not invertible");
    let img1 = t1.part1().image(f).expect("shapes checked");
    rep.expect("part1-image", img1 == *t2.part1(), "f(part1) differs from part1 of the target");
    let img2 = t1.part2().image(f).expect("shapes checked");
    rep.expect("part2-image", img2 == *t2.part2(), "f(part2) differs from part2 of the target");
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational as Q;

    #[test]
    fn hyperbolic_dual_basis_and_r() {
        let t: ManinTriple<Q> = hyperbolic_plane();
        assert!(check_manin_triple(&t).passed());
        let db = dual_basis(&t).unwrap();
        assert_eq!(db.x_basis, vec![vec![Q::from_int(1), Q::from_int(0)]]);
        assert_eq!(db.xi_basis, vec![vec![Q::from_int(0), Q::from_int(1)]]);
        let r = r_from_splitting(&t).unwrap();
        assert_eq!(r.nnz(), 1);
        assert_eq!(r.get(&[1, 0]), Q::from_int(1));
    }

    #[test]
    fn example_triples_certify() {
        for twisted in [false, true] {
            let a: ManinTriple<Q> = triple_g_plus_h(2, twisted).unwrap();
            assert!(check_manin_triple(&a).passed(), "{}", check_manin_triple(&a));
            let b: ManinTriple<Q> = triple_double(2, twisted).unwrap();
            assert!(check_manin_triple(&b).passed(), "{}", check_manin_triple(&b));
        }
        let c: ManinTriple<Q> = triple_g_plus_h(3, false).unwrap();
        assert!(check_manin_triple(&c).passed());
        assert!(triple_double::<Q>(4, false).is_err());
    }

    #[test]
    fn zero_cobracket_double() {
        let g: HomLieAlgebra<Q> = sl_k(2, false).unwrap();
        let dual = HomLieAlgebra::abelian(3, Matrix::identity(3)).unwrap();
        let t = double_from_bialgebra(&g, &dual).unwrap();
        assert!(check_manin_triple(&t).passed());
    }

    #[test]
    fn standard_cobracket_double() {
        let g: HomLieAlgebra<Q> = sl_k(2, false).unwrap();
        let dual = coboundary_dual(&g, &lambda_st(2).unwrap()).unwrap();
        let t = double_from_bialgebra(&g, &dual).unwrap();
        let rep = check_manin_triple(&t);
        assert!(rep.passed(), "{rep}");
    }
}
