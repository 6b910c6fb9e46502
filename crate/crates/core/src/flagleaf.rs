//! Type-A Weyl group combinatorics, the leaf index correspondence, the `Ψ_n`
//! map on matrix representatives, and twisted-coset equality.

use std::fmt;

use crate::error::{ensure_dim, Error, Result};
use crate::matrix::Matrix;
use crate::perm::Permutation;
use crate::scalar::Field;

/// An element of `S_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    perm: Permutation,
}

impl WeylElement {
    pub fn new(perm: Permutation) -> Self {
        WeylElement { perm }
    }

    pub fn identity(k: usize) -> Self {
        WeylElement::new(Permutation::identity(k))
    }

    /// The simple reflection swapping `i` and `i+1` (0-based).
    pub fn simple(k: usize, i: usize) -> Result<Self> {
        if i + 1 >= k {
            return Err(Error::IndexOutOfRange { index: i, dim: k.saturating_sub(1) });
        }
        Ok(WeylElement::new(Permutation::transposition(k, i, i + 1)?))
    }

    /// Product `s_{i₁}⋯s_{iₘ}` of simple reflections given 1-based.
    pub fn from_word(k: usize, word: &[usize]) -> Result<Self> {
        let mut w = WeylElement::identity(k);
        for &i in word {
            if i == 0 {
                return Err(Error::InvalidArgument("simple reflections are numbered from 1".into()));
            }
            w = w.mul(&WeylElement::simple(k, i - 1)?)?;
        }
        Ok(w)
    }

    pub fn rank(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn mul(&self, other: &WeylElement) -> Result<Self> {
        Ok(WeylElement::new(self.perm.compose(&other.perm)?))
    }

    pub fn inverse(&self) -> Self {
        WeylElement::new(self.perm.inverse())
    }

    pub fn length(&self) -> usize {
        self.perm.inversions()
    }

    /// All `k!` elements.
    pub fn all(k: usize) -> Vec<WeylElement> {
        Permutation::all(k).into_iter().map(WeylElement::new).collect()
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.perm.fmt(f)
    }
}

pub fn weyl_longest(k: usize) -> WeylElement {
    WeylElement::new(Permutation::reversal(k))
}

/// A `k×k` matrix of determinant one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupElement<F> {
    matrix: Matrix<F>,
}

impl<F: Field> GroupElement<F> {
    pub fn new(matrix: Matrix<F>) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::DimensionMismatch { expected: matrix.rows(), found: matrix.cols() });
        }
        let det = matrix.det()?;
        if det != F::one() {
            return Err(Error::NotUnimodular(det.to_string()));
        }
        Ok(GroupElement { matrix })
    }

    pub fn identity(k: usize) -> Self {
        GroupElement { matrix: Matrix::identity(k) }
    }

    pub fn rank(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &Matrix<F> {
        &self.matrix
    }

    pub fn mul(&self, other: &GroupElement<F>) -> Result<Self> {
        Ok(GroupElement { matrix: self.matrix.mul(&other.matrix)? })
    }

    pub fn inverse(&self) -> Result<Self> {
        Ok(GroupElement { matrix: self.matrix.inverse()? })
    }

    pub fn in_borel(&self) -> bool {
        self.matrix.is_upper_triangular()
    }

    pub fn in_opposite_borel(&self) -> bool {
        self.matrix.is_lower_triangular()
    }
}

/// The antidiagonal representative of `w₀` with entries `+1, −1, +1, …`
/// read from the top-right corner downwards, rescaled so the determinant is one.
pub fn w0_dot<F: Field>(k: usize) -> GroupElement<F> {
    let mut m = Matrix::zeros(k, k);
    for i in 0..k {
        m[(i, k - 1 - i)] = if i % 2 == 0 { F::one() } else { -F::one() };
    }
    if m.det().expect("square") != F::one() {
        m[(0, k - 1)] = -F::one();
    }
    GroupElement { matrix: m }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LeafIndex {
    pub u: Vec<WeylElement>,
    pub w: WeylElement,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DoubleLeafIndex {
    pub u: Vec<WeylElement>,
    pub v: Vec<WeylElement>,
    pub w: WeylElement,
}

fn common_rank<'a>(mut ws: impl Iterator<Item = &'a WeylElement>) -> Result<usize> {
    let k = ws.next().map(WeylElement::rank).ok_or_else(|| {
        Error::InvalidArgument("empty index".into())
    })?;
    for w in ws {
        ensure_dim(k, w.rank())?;
    }
    Ok(k)
}

/// `((u₁, w·w₀, u₂, w₀v_n⁻¹w₀, …, u_n, w₀v₂⁻¹w₀), v₁·w₀)`.
pub fn leaf_index_map(idx: &DoubleLeafIndex) -> Result<LeafIndex> {
    let n = idx.u.len();
    if n == 0 || idx.v.len() != n {
        return Err(Error::InvalidArgument("u and v must have the same positive length".into()));
    }
    let k = common_rank(idx.u.iter().chain(&idx.v).chain(std::iter::once(&idx.w)))?;
    let w0 = weyl_longest(k);
    let mut out = Vec::with_capacity(2 * n);
    out.push(idx.u[0].clone());
    out.push(idx.w.mul(&w0)?);
    for j in 2..=n {
        out.push(idx.u[j - 1].clone());
        out.push(w0.mul(&idx.v[n + 1 - j].inverse())?.mul(&w0)?);
    }
    Ok(LeafIndex {
        u: out,
        w: idx.v[0].mul(&w0)?,
    })
}

/// The inverse of [`leaf_index_map`].
pub fn leaf_index_inverse(idx: &LeafIndex) -> Result<DoubleLeafIndex> {
    let len = idx.u.len();
    if len == 0 || !len.is_multiple_of(2) {
        return Err(Error::InvalidArgument("index tuple must have positive even length".into()));
    }
    let n = len / 2;
    let k = common_rank(idx.u.iter().chain(std::iter::once(&idx.w)))?;
    let w0 = weyl_longest(k);
    let u: Vec<WeylElement> = (0..n).map(|j| idx.u[2 * j].clone()).collect();
    let mut v = vec![WeylElement::identity(k); n];
    v[0] = idx.w.mul(&w0)?;
    for j in 2..=n {
        v[n + 1 - j] = w0.mul(&idx.u[2 * j - 1])?.mul(&w0)?.inverse();
    }
    Ok(DoubleLeafIndex {
        u,
        v,
        w: idx.u[1].mul(&w0)?,
    })
}

pub type Pair<F> = (GroupElement<F>, GroupElement<F>);

fn check_tuple<F: Field>(n: usize, g: &[GroupElement<F>]) -> Result<usize> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    ensure_dim(2 * n, g.len())?;
    let k = g[0].rank();
    for x in g {
        ensure_dim(k, x.rank())?;
    }
    Ok(k)
}

/// `Ψ_n` with an explicit representative for `w₀`.
pub fn psi_map_with<F: Field>(
    n: usize,
    g: &[GroupElement<F>],
    w0: &GroupElement<F>,
) -> Result<Vec<Pair<F>>> {
    let k = check_tuple(n, g)?;
    ensure_dim(k, w0.rank())?;
    let mut total = GroupElement::identity(k);
    for x in g {
        total = total.mul(x)?;
    }
    let mut out = vec![(g[0].clone(), total.mul(w0)?)];
    for j in 2..=n {
        let second = w0.mul(&g[2 * n + 1 - j].inverse()?)?.mul(w0)?;
        out.push((g[j - 1].clone(), second));
    }
    Ok(out)
}

/// `[g₁,…,g_{2n}] ↦ [(g₁, g₁⋯g_{2n}ẇ₀), (g₂, ẇ₀g_{2n}⁻¹ẇ₀), …, (g_n, ẇ₀g_{n+2}⁻¹ẇ₀)]`.
pub fn psi_map<F: Field>(n: usize, g: &[GroupElement<F>]) -> Result<Vec<Pair<F>>> {
    let k = check_tuple(n, g)?;
    psi_map_with(n, g, &w0_dot(k))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PsiStages<F> {
    /// Partial products `g₁⋯g_j`.
    pub stage1: Vec<GroupElement<F>>,
    /// The last `n` partial products right-multiplied by `ẇ₀`.
    pub stage2: Vec<GroupElement<F>>,
    /// Pairs `(P_j, P_{2n+1−j}ẇ₀)`.
    pub stage3: Vec<Pair<F>>,
    /// Consecutive quotients of the stage-3 pairs.
    pub stage4: Vec<Pair<F>>,
}

pub fn psi_stages<F: Field>(n: usize, g: &[GroupElement<F>]) -> Result<PsiStages<F>> {
    let k = check_tuple(n, g)?;
    let w0 = w0_dot(k);
    let mut stage1 = Vec::with_capacity(2 * n);
    let mut acc = GroupElement::identity(k);
    for x in g {
        acc = acc.mul(x)?;
        stage1.push(acc.clone());
    }
    let stage2: Vec<GroupElement<F>> = stage1
        .iter()
        .enumerate()
        .map(|(j, p)| if j < n { Ok(p.clone()) } else { p.mul(&w0) })
        .collect::<Result<_>>()?;
    let stage3: Vec<Pair<F>> = (0..n)
        .map(|j| (stage2[j].clone(), stage2[2 * n - 1 - j].clone()))
        .collect();
    let mut stage4 = vec![stage3[0].clone()];
    for j in 1..n {
        let a = stage3[j - 1].0.inverse()?.mul(&stage3[j].0)?;
        let b = stage3[j - 1].1.inverse()?.mul(&stage3[j].1)?;
        stage4.push((a, b));
    }
    Ok(PsiStages {
        stage1,
        stage2,
        stage3,
        stage4,
    })
}

/// Groups on which the staircase right action `(g₁q₁, q₁⁻¹g₂q₂, …)` is defined.
pub trait TwistedGroup: Sized + Clone {
    fn mul(&self, other: &Self) -> Result<Self>;
    fn inverse(&self) -> Result<Self>;
}

impl<F: Field> TwistedGroup for GroupElement<F> {
    fn mul(&self, other: &Self) -> Result<Self> {
        GroupElement::mul(self, other)
    }

    fn inverse(&self) -> Result<Self> {
        GroupElement::inverse(self)
    }
}

impl<F: Field> TwistedGroup for Pair<F> {
    fn mul(&self, other: &Self) -> Result<Self> {
        Ok((self.0.mul(&other.0)?, self.1.mul(&other.1)?))
    }

    fn inverse(&self) -> Result<Self> {
        Ok((self.0.inverse()?, self.1.inverse()?))
    }
}

pub fn in_borel<F: Field>(g: &GroupElement<F>) -> bool {
    g.in_borel()
}

pub fn in_opposite_borel<F: Field>(g: &GroupElement<F>) -> bool {
    g.in_opposite_borel()
}

pub fn in_borel_pair<F: Field>(p: &Pair<F>) -> bool {
    p.0.in_borel() && p.1.in_opposite_borel()
}

/// `(g₁q₁, q₁⁻¹g₂q₂, …, q_{n−1}⁻¹g_nq_n)`.
pub fn twisted_action<E: TwistedGroup>(g: &[E], q: &[E]) -> Result<Vec<E>> {
    ensure_dim(g.len(), q.len())?;
    let mut out = Vec::with_capacity(g.len());
    for j in 0..g.len() {
        let left = if j == 0 { g[0].clone() } else { q[j - 1].inverse()?.mul(&g[j])? };
        out.push(left.mul(&q[j])?);
    }
    Ok(out)
}

/// Solves `b = a ·_r q` for `q` step by step.
pub fn twisted_quotient<E: TwistedGroup>(a: &[E], b: &[E]) -> Result<Vec<E>> {
    ensure_dim(a.len(), b.len())?;
    let mut q: Vec<E> = Vec::with_capacity(a.len());
    for j in 0..a.len() {
        let rhs = if j == 0 { b[0].clone() } else { q[j - 1].mul(&b[j])? };
        q.push(a[j].inverse()?.mul(&rhs)?);
    }
    Ok(q)
}

/// Whether `a` and `b` lie in the same orbit of the staircase action of
/// the subgroup cut out by `member`.
pub fn twisted_coset_equal<E: TwistedGroup>(
    a: &[E],
    b: &[E],
    member: impl Fn(&E) -> bool,
) -> Result<bool> {
    Ok(twisted_quotient(a, b)?.iter().all(member))
}
