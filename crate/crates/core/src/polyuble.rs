//! Polyubles of Manin triples and the snake isomorphism between iterated ones.
//!
//! Slot `j` (1-based) of an `n`-uble occupies coordinates `[(j−1)d, jd)` where
//! `d` is the base dimension. Slot `j` carries the base form scaled by
//! `(−1)^{j+1}` and the base twist.

use std::fmt::Write as _;

use crate::error::{ensure_dim, Error, Result};
use crate::homlie::HomLieAlgebra;
use crate::manin::{check_manin_isomorphism, ManinTriple};
use crate::matrix::Matrix;
use crate::perm::Permutation;
use crate::report::Report;
use crate::scalar::Field;
use crate::subspace::Subspace;

fn embed<F: Field>(v: &[F], slot: usize, n: usize) -> Vec<F> {
    let d = v.len();
    let mut out = vec![F::zero(); n * d];
    out[(slot - 1) * d..slot * d].clone_from_slice(v);
    out
}

/// Spanning vectors of `𝔲_Δ` placed on slots `(j, j+1)`.
fn diagonal_on<F: Field>(d: usize, j: usize, n: usize) -> Vec<Vec<F>> {
    (0..d)
        .map(|i| {
            let mut v = vec![F::zero(); n * d];
            v[(j - 1) * d + i] = F::one();
            v[j * d + i] = F::one();
            v
        })
        .collect()
}

/// The `n`-uble `(𝔲ⁿ, 𝔥_n, 𝔥′_n)`.
///
/// Odd `n`: `𝔥_n = 𝔲_Δ(1,2) ⊕ … ⊕ 𝔲_Δ(n−2,n−1) ⊕ 𝔥 at slot n`,
/// `𝔥′_n = 𝔥′ at slot 1 ⊕ 𝔲_Δ(2,3) ⊕ … ⊕ 𝔲_Δ(n−1,n)`.
/// Even `n`: `𝔥_n = 𝔲_Δ(1,2) ⊕ … ⊕ 𝔲_Δ(n−1,n)`,
/// `𝔥′_n = 𝔥′ at slot 1 ⊕ 𝔲_Δ(2,3) ⊕ … ⊕ 𝔲_Δ(n−2,n−1) ⊕ 𝔥 at slot n`.
pub fn nuble<F: Field>(t: &ManinTriple<F>, n: usize) -> Result<ManinTriple<F>> {
    if n == 0 {
        return Err(Error::InvalidArgument("n-uble needs n ≥ 1".into()));
    }
    let d = t.dim();
    let base = t.algebra();
    let copies: Vec<&HomLieAlgebra<F>> = vec![base; n];
    let mut algebra = HomLieAlgebra::direct_sum_all(&copies);
    if let Some(name) = base.name() {
        algebra = algebra.with_name(format!("{name}^{n}"));
    }
    let blocks: Vec<Matrix<F>> = (1..=n)
        .map(|j| {
            if j % 2 == 1 {
                t.form().clone()
            } else {
                t.form().scale(&-F::one())
            }
        })
        .collect();
    let form = Matrix::block_diag(&blocks);

    let h = t.part1().basis();
    let hp = t.part2().basis();
    let mut p1 = Vec::new();
    let mut p2: Vec<Vec<F>> = hp.iter().map(|v| embed(v, 1, n)).collect();
    let mut j = 1;
    while j < n {
        p1.extend(diagonal_on(d, j, n));
        j += 2;
    }
    let mut j = 2;
    while j < n {
        p2.extend(diagonal_on(d, j, n));
        j += 2;
    }
    if n % 2 == 1 {
        p1.extend(h.iter().map(|v| embed(v, n, n)));
    } else {
        p2.extend(h.iter().map(|v| embed(v, n, n)));
    }
    ManinTriple::new(
        algebra,
        form,
        Subspace::span(n * d, &p1)?,
        Subspace::span(n * d, &p2)?,
    )
}

/// `(M^m)^n`, built by composing [`nuble`]. Copy `r` occupies slots `(r−1)m+1..rm`.
pub fn uble_of_uble<F: Field>(t: &ManinTriple<F>, m: usize, n: usize) -> Result<ManinTriple<F>> {
    nuble(&nuble(t, m)?, n)
}

/// The snake permutation on slots (0-based): slot `j` of `M^{mn}` goes to
/// position `(r−1)m + c` of `(M^m)^n`, where the `n × m` grid is read down
/// odd columns (`j = (c−1)n + r`) and up even columns (`j = cn − r + 1`).
pub fn snake_permutation(m: usize, n: usize) -> Result<Permutation> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidArgument("snake needs m, n ≥ 1".into()));
    }
    let mut images = vec![0; m * n];
    for c in 1..=m {
        for r in 1..=n {
            let j = if c % 2 == 1 { (c - 1) * n + r } else { c * n - r + 1 };
            images[j - 1] = (r - 1) * m + c - 1;
        }
    }
    Permutation::new(images)
}

/// Lifts a slot permutation to coordinates with blocks of size `block`.
pub fn block_permutation(p: &Permutation, block: usize) -> Permutation {
    let images = (0..p.len() * block)
        .map(|x| p.apply(x / block) * block + x % block)
        .collect();
    Permutation::new(images).expect("lift of a bijection")
}

/// Moves slot contents of a vector of `M^{mn}` to their snake positions.
pub fn snake_iso_apply<F: Field>(m: usize, n: usize, v: &[F], base_dim: usize) -> Result<Vec<F>> {
    ensure_dim(m * n * base_dim, v.len())?;
    let p = block_permutation(&snake_permutation(m, n)?, base_dim);
    let mut out = vec![F::zero(); v.len()];
    for (x, val) in v.iter().enumerate() {
        out[p.apply(x)] = val.clone();
    }
    Ok(out)
}

/// Certifies the snake map as an isomorphism `M^{mn} → (M^m)^n`.
pub fn verify_snake_iso<F: Field>(t: &ManinTriple<F>, m: usize, n: usize) -> Result<Report> {
    let big = nuble(t, m * n)?;
    let tower = uble_of_uble(t, m, n)?;
    let f = block_permutation(&snake_permutation(m, n)?, t.dim()).to_matrix();
    let mut rep = check_manin_isomorphism(&f, &big, &tower);
    rep.subject = format!("snake isomorphism M^{} -> (M^{m})^{n}", m * n);
    Ok(rep)
}

/// Slot permutations of `{0..mn−1}` whose block lift is a Manin isomorphism.
pub fn slot_isomorphisms<F: Field>(
    t: &ManinTriple<F>,
    m: usize,
    n: usize,
) -> Result<Vec<Permutation>> {
    let big = nuble(t, m * n)?;
    let tower = uble_of_uble(t, m, n)?;
    Ok(Permutation::all(m * n)
        .into_iter()
        .filter(|p| {
            let f = block_permutation(p, t.dim()).to_matrix();
            check_manin_isomorphism(&f, &big, &tower).passed()
        })
        .collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Color {
    Open,
    Filled,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shape {
    Circle,
    LeftTriangle,
    RightTriangle,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertex {
    /// 1-based slot, or the slot a triangle decorates.
    pub slot: usize,
    pub color: Color,
    pub shape: Shape,
    /// Which splitting chain (1 or 2) a decoration belongs to; 0 for slot vertices.
    pub part: usize,
}

/// Slots as colored circles, `𝔲_Δ` summands as edges of the two chains,
/// `𝔥` and `𝔥′` as left and right triangles on the slot that carries them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainGraph {
    pub n: usize,
    pub vertices: Vec<Vertex>,
    /// `(slot, slot, part)` with 1-based slots.
    pub edges: Vec<(usize, usize, usize)>,
}

fn slot_color(j: usize) -> Color {
    if j.is_multiple_of(2) {
        Color::Filled
    } else {
        Color::Open
    }
}

impl ChainGraph {
    pub fn for_nuble(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("n-uble needs n ≥ 1".into()));
        }
        let mut vertices: Vec<Vertex> = (1..=n)
            .map(|j| Vertex {
                slot: j,
                color: slot_color(j),
                shape: Shape::Circle,
                part: 0,
            })
            .collect();
        let mut edges = Vec::new();
        let mut j = 1;
        while j < n {
            edges.push((j, j + 1, 1));
            j += 2;
        }
        let mut j = 2;
        while j < n {
            edges.push((j, j + 1, 2));
            j += 2;
        }
        vertices.push(Vertex {
            slot: 1,
            color: slot_color(1),
            shape: Shape::RightTriangle,
            part: 2,
        });
        vertices.push(Vertex {
            slot: n,
            color: slot_color(n),
            shape: Shape::LeftTriangle,
            part: if n % 2 == 1 { 1 } else { 2 },
        });
        Ok(ChainGraph { n, vertices, edges })
    }

    fn color_of(&self, slot: usize) -> Option<Color> {
        self.vertices
            .iter()
            .find(|v| v.slot == slot && v.shape == Shape::Circle)
            .map(|v| v.color)
    }

    /// No edge joins two vertices of the same color.
    pub fn is_properly_colored(&self) -> bool {
        self.edges
            .iter()
            .all(|&(a, b, _)| self.color_of(a) != self.color_of(b))
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph nuble {\n  rankdir=LR;\n");
        for v in &self.vertices {
            let style = if v.color == Color::Filled { ", style=filled" } else { "" };
            match v.shape {
                Shape::Circle => {
                    let _ = writeln!(s, "  u{0} [label=\"u{0}\", shape=circle{style}];", v.slot);
                }
                Shape::LeftTriangle | Shape::RightTriangle => {
                    let (id, label, orient) = if v.shape == Shape::LeftTriangle {
                        (format!("h{}", v.slot), "h", 90)
                    } else {
                        (format!("hp{}", v.slot), "h'", 270)
                    };
                    let _ = writeln!(
                        s,
                        "  {id} [label=\"{label}\", shape=triangle, orientation={orient}];"
                    );
                    let _ = writeln!(s, "  {id} -- u{} [style=dashed];", v.slot);
                }
            }
        }
        for &(a, b, part) in &self.edges {
            let _ = writeln!(s, "  u{a} -- u{b} [label=\"part{part}\"];");
        }
        s.push_str("}\n");
        s
    }
}

/// The `n × m` grid of `(M^m)^n` with the snake path through `M^{mn}` slots.
pub fn snake_dot(m: usize, n: usize) -> Result<String> {
    let p = snake_permutation(m, n)?;
    let mut s = String::from("digraph snake {\n");
    for r in 1..=n {
        let _ = writeln!(s, "  subgraph cluster_copy{r} {{\n    label=\"copy {r}\";");
        for c in 1..=m {
            let pos = (r - 1) * m + c - 1;
            let j = p.inverse().apply(pos) + 1;
            let style = if j % 2 == 0 { ", style=filled" } else { "" };
            let _ = writeln!(s, "    u{j} [label=\"u{j}\", shape=circle{style}];");
        }
        s.push_str("  }\n");
    }
    for j in 1..m * n {
        let _ = writeln!(s, "  u{j} -> u{};", j + 1);
    }
    s.push_str("}\n");
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::manin::{check_manin_triple, hyperbolic_plane};
    use crate::Rational as Q;

    #[test]
    fn snake_small_cases() {
        assert!(snake_permutation(1, 4).unwrap().is_identity());
        assert!(snake_permutation(4, 1).unwrap().is_identity());
        // ((a1, a4), (a2, a3))
        assert_eq!(snake_permutation(2, 2).unwrap().images(), &[0, 2, 3, 1]);
        // ((a1, a4, a5), (a2, a3, a6))
        let p = snake_permutation(3, 2).unwrap();
        let grid: Vec<usize> = (0..6).map(|pos| p.inverse().apply(pos) + 1).collect();
        assert_eq!(grid, vec![1, 4, 5, 2, 3, 6]);
    }

    #[test]
    fn one_uble_is_the_base() {
        let t: ManinTriple<Q> = hyperbolic_plane();
        let one = nuble(&t, 1).unwrap();
        assert_eq!(one.part1(), t.part1());
        assert_eq!(one.part2(), t.part2());
        assert_eq!(one.form(), t.form());
        assert!(nuble(&t, 0).is_err());
    }

    #[test]
    fn double_of_hyperbolic_plane() {
        let t: ManinTriple<Q> = hyperbolic_plane();
        let d = nuble(&t, 2).unwrap();
        assert!(check_manin_triple(&d).passed());
        let q = |v: &[i64]| v.iter().map(|&x| Q::from_int(x)).collect::<Vec<_>>();
        let diag = Subspace::span(4, &[q(&[1, 0, 1, 0]), q(&[0, 1, 0, 1])]).unwrap();
        assert_eq!(d.part1(), &diag);
        let p2 = Subspace::span(4, &[q(&[0, 1, 0, 0]), q(&[0, 0, 1, 0])]).unwrap();
        assert_eq!(d.part2(), &p2);
    }

    #[test]
    fn graphs_are_properly_colored() {
        for n in 1..=6 {
            let g = ChainGraph::for_nuble(n).unwrap();
            assert!(g.is_properly_colored());
            assert_eq!(g.edges.len(), n - 1);
        }
        let g = ChainGraph::for_nuble(2).unwrap();
        assert_eq!(g.edges, vec![(1, 2, 1)]);
        assert!(g.to_dot().contains("u2 [label=\"u2\", shape=circle, style=filled]"));
    }
}
