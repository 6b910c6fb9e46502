//! The hom-classical Yang-Baxter map, hom-Schouten brackets, sharp maps and
//! quasi-triangularity certification.
//!
//! A degree-2 tensor `r` is read as `Σ r_ab e_a ⊗ e_b`. Covectors are
//! coordinate rows against the same basis and `φ*` is `φᵀ`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{ensure_dim, Error, Result};
use crate::homlie::HomLieAlgebra;
use crate::matrix::{dot, unit_vec, Matrix};
use crate::report::Report;
use crate::scalar::Field;
use crate::tensor::{bivector_terms, wedge, wedge_bivector_vector, SparseTensor};

fn sparse<F: Field>(v: &[F]) -> Vec<(usize, F)> {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

fn add_outer3<F: Field>(
    t: &mut SparseTensor<F>,
    c: &F,
    a: &[(usize, F)],
    b: &[(usize, F)],
    d: &[(usize, F)],
) {
    for (i, x) in a {
        let cx = c.clone() * x.clone();
        for (j, y) in b {
            let cxy = cx.clone() * y.clone();
            for (k, z) in d {
                t.add_entry_unchecked(vec![*i, *j, *k], cxy.clone() * z.clone());
            }
        }
    }
}

/// `Σ [xᵢ,xⱼ]⊗φyᵢ⊗φyⱼ + φxᵢ⊗[yᵢ,xⱼ]⊗φyⱼ + φxᵢ⊗φxⱼ⊗[yᵢ,yⱼ]` over the entries of `r`.
pub fn hcyb<F: Field>(h: &HomLieAlgebra<F>, r: &SparseTensor<F>) -> Result<SparseTensor<F>> {
    r.ensure_degree(2)?;
    ensure_dim(h.dim(), r.dim())?;
    let n = h.dim();
    let phi: Vec<Vec<(usize, F)>> = (0..n).map(|i| sparse(&h.twist().column(i))).collect();
    let br = |a: usize, b: usize| sparse(&h.basis_bracket(a, b));
    let entries: Vec<(usize, usize, F)> =
        r.entries().map(|(k, v)| (k[0], k[1], v.clone())).collect();
    let partials: Vec<SparseTensor<F>> = entries
        .par_iter()
        .map(|(a, b, c1)| {
            let mut t = SparseTensor::zero(3, n).expect("degree 3");
            for (a2, b2, c2) in &entries {
                let c = c1.clone() * c2.clone();
                add_outer3(&mut t, &c, &br(*a, *a2), &phi[*b], &phi[*b2]);
                add_outer3(&mut t, &c, &phi[*a], &br(*b, *a2), &phi[*b2]);
                add_outer3(&mut t, &c, &phi[*a], &phi[*a2], &br(*b, *b2));
            }
            t
        })
        .collect();
    let mut out = SparseTensor::zero(3, n)?;
    for p in partials {
        out = out.add(&p)?;
    }
    Ok(out)
}

/// The classical Yang-Baxter map: [`hcyb`] with the twist forced to the identity.
pub fn cyb<F: Field>(h: &HomLieAlgebra<F>, r: &SparseTensor<F>) -> Result<SparseTensor<F>> {
    hcyb(&h.with_twist_unchecked(Matrix::identity(h.dim()))?, r)
}

/// `r♯(ξ) = Σ ⟨φ*ξ, xᵢ⟩ yᵢ`, as the matrix `rᵀφᵀ`.
pub fn sharp_matrix<F: Field>(h: &HomLieAlgebra<F>, r: &SparseTensor<F>) -> Result<Matrix<F>> {
    r.ensure_degree(2)?;
    ensure_dim(h.dim(), r.dim())?;
    r.to_matrix()?.transpose().mul(&h.twist().transpose())
}

pub fn sharp_lambda<F: Field>(
    h: &HomLieAlgebra<F>,
    lambda: &SparseTensor<F>,
    xi: &[F],
) -> Result<Vec<F>> {
    if !lambda.is_antisymmetric() {
        return Err(Error::WrongSymmetry("Λ♯ needs an antisymmetric tensor".into()));
    }
    sharp_matrix(h, lambda)?.mul_vec(xi)
}

pub fn sharp_s<F: Field>(h: &HomLieAlgebra<F>, s: &SparseTensor<F>, xi: &[F]) -> Result<Vec<F>> {
    if !s.is_symmetric() {
        return Err(Error::WrongSymmetry("S♯ needs a symmetric tensor".into()));
    }
    sharp_matrix(h, s)?.mul_vec(xi)
}

/// `r₊ = r♯` and `r₋ = −(r²¹)♯`.
pub fn r_plus_minus<F: Field>(
    h: &HomLieAlgebra<F>,
    r: &SparseTensor<F>,
) -> Result<(Matrix<F>, Matrix<F>)> {
    let plus = sharp_matrix(h, r)?;
    let minus = sharp_matrix(h, &r.transpose()?)?.scale(&-F::one());
    Ok((plus, minus))
}

pub fn is_phi_fixed<F: Field>(h: &HomLieAlgebra<F>, r: &SparseTensor<F>) -> Result<bool> {
    Ok(r.map_each(h.twist())? == *r)
}

/// `½(t + φ^{⊗d} t)`, the projection onto `φ`-fixed tensors for involutive `φ`.
pub fn project_phi_fixed<F: Field>(
    h: &HomLieAlgebra<F>,
    t: &SparseTensor<F>,
) -> Result<SparseTensor<F>> {
    if !h.is_involutive() {
        return Err(Error::InvalidArgument("projection needs an involutive twist".into()));
    }
    Ok(t.add(&t.map_each(h.twist())?)?.scale(&F::from_frac(1, 2)))
}

/// `Σᵢ [x,xᵢ]⊗φ(yᵢ) + φ(xᵢ)⊗[x,yᵢ]` as a matrix, i.e. `ad_x S φᵀ + φ S ad_xᵀ`.
pub fn ad_residual<F: Field>(h: &HomLieAlgebra<F>, s: &Matrix<F>, x: &[F]) -> Matrix<F> {
    let ad = h.ad(x);
    let phi = h.twist();
    let a = ad.mul(s).and_then(|m| m.mul(&phi.transpose())).expect("square");
    let b = phi.mul(s).and_then(|m| m.mul(&ad.transpose())).expect("square");
    a.add(&b).expect("square")
}

pub fn check_hom_ad_invariant<F: Field>(h: &HomLieAlgebra<F>, s: &SparseTensor<F>) -> Report {
    let mut rep = Report::new("hom-ad-invariance");
    rep.ran("hom-ad-invariant");
    let m = match s.to_matrix() {
        Ok(m) if m.rows() == h.dim() => m,
        _ => {
            rep.fail_msg("hom-ad-invariant", vec![], "expected a degree-2 tensor on the algebra");
            return rep;
        }
    };
    for i in 0..h.dim() {
        let res = ad_residual(h, &m, &unit_vec(h.dim(), i));
        if !res.is_zero() {
            let flat: Vec<F> = (0..res.rows()).flat_map(|p| res.row(p).to_vec()).collect();
            rep.fail_vec("hom-ad-invariant", vec![i], &flat);
        }
    }
    rep
}

/// A multivector of degree 1 to 3, stored fully alternated.
pub type Multivector<F> = SparseTensor<F>;

pub fn vector_to_multivector<F: Field>(v: &[F]) -> Multivector<F> {
    SparseTensor::from_vector(v)
}

fn twist_mv<F: Field>(h: &HomLieAlgebra<F>, x: &Multivector<F>) -> Multivector<F> {
    x.map_each(h.twist()).expect("same dimension")
}

/// Decomposes a fully alternated trivector as `Σ_{a<b<c} C_abc e_a∧e_b∧e_c`.
fn trivector_terms<F: Field>(c: &SparseTensor<F>) -> Result<Vec<(usize, usize, usize, F)>> {
    if !c.is_totally_antisymmetric() {
        return Err(Error::WrongSymmetry("expected an alternating degree-3 tensor".into()));
    }
    Ok(c.entries()
        .filter(|(k, _)| k[0] < k[1] && k[1] < k[2])
        .map(|(k, v)| (k[0], k[1], k[2], v.clone()))
        .collect())
}

/// `[[x, Y]]` for a vector `x`.
fn schouten_vector<F: Field>(
    h: &HomLieAlgebra<F>,
    x: &[F],
    y: &Multivector<F>,
) -> Result<Multivector<F>> {
    let n = h.dim();
    let phi = |i: usize| h.twist().column(i);
    match y.degree() {
        1 => Ok(SparseTensor::from_vector(&h.bracket(x, &y.to_vector()?))),
        2 => {
            // [[x, a∧b]] = [x,a]∧φb + φa∧[x,b]
            let mut out = SparseTensor::zero(2, n)?;
            for (a, b, c) in bivector_terms(y)? {
                let xa = h.bracket(x, &unit_vec(n, a));
                let xb = h.bracket(x, &unit_vec(n, b));
                let t = wedge(&xa, &phi(b))?.add(&wedge(&phi(a), &xb)?)?;
                out = out.add(&t.scale(&c))?;
            }
            Ok(out)
        }
        3 => {
            // [[x, (a∧b)∧c]] = [[x, a∧b]]∧φc + φ(a∧b)∧[x,c]
            let mut out = SparseTensor::zero(3, n)?;
            for (a, b, c, v) in trivector_terms(y)? {
                let ab = wedge(&unit_vec(n, a), &unit_vec(n, b))?;
                let first = wedge_bivector_vector(&schouten_vector(h, x, &ab)?, &phi(c))?;
                let xc = h.bracket(x, &unit_vec(n, c));
                let second = wedge_bivector_vector(&twist_mv(h, &ab), &xc)?;
                out = out.add(&first.add(&second)?.scale(&v))?;
            }
            Ok(out)
        }
        d => Err(Error::Unsupported(format!("hom-Schouten bracket of degrees (1,{d})"))),
    }
}

/// The hom-Schouten bracket for degree pairs `(1,1)`, `(1,2)`, `(2,1)`,
/// `(2,2)`, `(1,3)` and `(3,1)`.
pub fn hom_schouten<F: Field>(
    h: &HomLieAlgebra<F>,
    x: &Multivector<F>,
    y: &Multivector<F>,
) -> Result<Multivector<F>> {
    ensure_dim(h.dim(), x.dim())?;
    ensure_dim(h.dim(), y.dim())?;
    let n = h.dim();
    match (x.degree(), y.degree()) {
        (1, _) => schouten_vector(h, &x.to_vector()?, y),
        (p, 1) if p <= 3 => {
            // [[X, y]] = −(−1)^{(p−1)·0} [[y, X]]
            Ok(schouten_vector(h, &y.to_vector()?, x)?.neg())
        }
        (2, 2) => {
            // [[X, a∧b]] = [[X,a]]∧φb − [[X,b]]∧φa
            let mut out = SparseTensor::zero(3, n)?;
            for (a, b, c) in bivector_terms(y)? {
                let xa = hom_schouten(h, x, &SparseTensor::from_vector(&unit_vec(n, a)))?;
                let xb = hom_schouten(h, x, &SparseTensor::from_vector(&unit_vec(n, b)))?;
                let ta = wedge_bivector_vector(&xa, &h.twist().column(b))?;
                let tb = wedge_bivector_vector(&xb, &h.twist().column(a))?;
                out = out.add(&ta.sub(&tb)?.scale(&c))?;
            }
            Ok(out)
        }
        (p, q) => Err(Error::Unsupported(format!("hom-Schouten bracket of degrees ({p},{q})"))),
    }
}

/// The left side of the graded hom-Jacobi identity.
pub fn graded_jacobiator<F: Field>(
    h: &HomLieAlgebra<F>,
    x: &Multivector<F>,
    y: &Multivector<F>,
    z: &Multivector<F>,
) -> Result<Multivector<F>> {
    let (i, j, k) = (x.degree() as i64, y.degree() as i64, z.degree() as i64);
    let sign = |e: i64| if e % 2 == 0 { F::one() } else { -F::one() };
    let a = hom_schouten(h, &twist_mv(h, x), &hom_schouten(h, y, z)?)?.scale(&sign((i - 1) * (k - 1)));
    let b = hom_schouten(h, &twist_mv(h, y), &hom_schouten(h, z, x)?)?.scale(&sign((j - 1) * (i - 1)));
    let c = hom_schouten(h, &twist_mv(h, z), &hom_schouten(h, x, y)?)?.scale(&sign((k - 1) * (j - 1)));
    a.add(&b)?.add(&c)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RVerdict {
    QuasiTriangular,
    /// Not quasi-triangular, but the skew part alone is a `φ`-fixed HCYBE solution.
    SkewOnly,
    Fails,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RMatrixReport<F> {
    pub lambda: SparseTensor<F>,
    pub s: SparseTensor<F>,
    pub phi_fixed: bool,
    pub s_invariant: bool,
    pub hcyb_residual: SparseTensor<F>,
    pub factorizable: bool,
    pub verdict: RVerdict,
}

impl<F: Field> RMatrixReport<F> {
    pub fn to_report(&self) -> Report {
        let mut rep = Report::new("quasi-triangular hom-r-matrix");
        rep.expect("phi-fixed", self.phi_fixed, "twist does not fix r");
        rep.expect("s-hom-ad-invariant", self.s_invariant, "symmetric part is not hom-ad-invariant");
        rep.ran("hcyb-zero");
        for (idx, v) in self.hcyb_residual.entries() {
            rep.fail_vec("hcyb-zero", idx.to_vec(), std::slice::from_ref(v));
        }
        rep
    }
}

pub fn check_quasi_triangular<F: Field>(
    h: &HomLieAlgebra<F>,
    r: &SparseTensor<F>,
) -> Result<RMatrixReport<F>> {
    r.ensure_degree(2)?;
    ensure_dim(h.dim(), r.dim())?;
    let (lambda, s) = r.skew_sym_split()?;
    let phi_fixed = is_phi_fixed(h, r)?;
    let s_invariant = check_hom_ad_invariant(h, &s).passed();
    let hcyb_residual = hcyb(h, r)?;
    let factorizable = sharp_matrix(h, &s)?.rank() == h.dim();
    let verdict = if phi_fixed && s_invariant && hcyb_residual.is_zero() {
        RVerdict::QuasiTriangular
    } else if is_phi_fixed(h, &lambda)? && hcyb(h, &lambda)?.is_zero() {
        RVerdict::SkewOnly
    } else {
        RVerdict::Fails
    };
    Ok(RMatrixReport {
        lambda,
        s,
        phi_fixed,
        s_invariant,
        hcyb_residual,
        factorizable,
        verdict,
    })
}

/// A small random rational: numerator in `[−6, 6]`, denominator in `[1, 3]`.
pub fn random_rational<F: Field, R: Rng>(rng: &mut R) -> F {
    F::from_frac(rng.gen_range(-6..=6), rng.gen_range(1..=3))
}

pub fn random_vector<F: Field, R: Rng>(rng: &mut R, n: usize) -> Vec<F> {
    (0..n).map(|_| random_rational(rng)).collect()
}

/// Both sides of the pairing identity for `HCYB(r)` on seeded random covectors.
///
/// The identity expands `⟨HCYB(r), ξ⊗η⊗ζ⟩` term by term and holds for any
/// bilinear bracket and twist, so no hypotheses are imposed.
pub fn hcyb_pairing_check<F: Field>(
    h: &HomLieAlgebra<F>,
    r: &SparseTensor<F>,
    trials: usize,
    seed: u64,
) -> Result<Report> {
    let n = h.dim();
    let t = hcyb(h, r)?;
    let (plus, minus) = r_plus_minus(h, r)?;
    let mut rep = Report::new("HCYB pairing identity");
    rep.ran("pairing");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for trial in 0..trials {
        let xi: Vec<F> = random_vector(&mut rng, n);
        let eta: Vec<F> = random_vector(&mut rng, n);
        let zeta: Vec<F> = random_vector(&mut rng, n);
        let lhs = t.pair(&[&xi, &eta, &zeta])?;
        let (px, mn_eta, mn_zeta) = (plus.mul_vec(&xi)?, minus.mul_vec(&eta)?, minus.mul_vec(&zeta)?);
        let p_eta = plus.mul_vec(&eta)?;
        let rhs = dot(&xi, &h.bracket(&mn_eta, &mn_zeta))
            + dot(&eta, &h.bracket(&mn_zeta, &px))
            + dot(&zeta, &h.bracket(&px, &p_eta));
        if lhs != rhs {
            rep.fail_vec("pairing", vec![trial], &[lhs - rhs]);
        }
    }
    Ok(rep)
}

/// `HCYB(Λ+S) − HCYB(Λ) − HCYB(S) = 0` under its hypotheses.
pub fn additivity_check<F: Field>(
    h: &HomLieAlgebra<F>,
    lambda: &SparseTensor<F>,
    s: &SparseTensor<F>,
) -> Result<Report> {
    let r = lambda.add(s)?;
    if !h.is_involutive() {
        return Ok(Report::inapplicable("HCYB additivity", "twist is not involutive"));
    }
    if !is_phi_fixed(h, &r)? {
        return Ok(Report::inapplicable("HCYB additivity", "twist does not fix Λ + S"));
    }
    if !check_hom_ad_invariant(h, s).passed() {
        return Ok(Report::inapplicable("HCYB additivity", "S is not hom-ad-invariant"));
    }
    let res = hcyb(h, &r)?.sub(&hcyb(h, lambda)?)?.sub(&hcyb(h, s)?)?;
    let mut rep = Report::new("HCYB additivity");
    rep.ran("additivity");
    for (idx, v) in res.entries() {
        rep.fail_vec("additivity", idx.to_vec(), std::slice::from_ref(v));
    }
    Ok(rep)
}

/// `e₂⊗e₃ + ¼ e₁⊗e₁` on `sl(2)` (0-based `e₁⊗e₂ + ¼ e₀⊗e₀`).
pub fn sl2_example_r<F: Field>() -> SparseTensor<F> {
    SparseTensor::from_entries(
        2,
        3,
        [(vec![1, 2], F::one()), (vec![0, 0], F::from_frac(1, 4))],
    )
    .expect("valid indices")
}

pub fn render_tensor<F: Field>(t: &SparseTensor<F>) -> Vec<String> {
    t.entries()
        .map(|(k, v)| {
            let idx: Vec<String> = k.iter().map(ToString::to_string).collect();
            format!("{}:{}", idx.join(","), v.to_fraction_string())
        })
        .collect()
}
