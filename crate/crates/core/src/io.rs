//! Plain-text formats for algebras, triples, tensors, subspaces and matrix lists.
//!
//! Indices are 0-based. Blank lines and everything after `#` are ignored.
//! A file may hold several documents; each starts with a header line:
//!
//! ```text
//! algebra dim=3 name=sl2
//! bracket 0 1 : 1:-2
//! phi 1 0 0
//! ...
//! triple dim=2
//! phi 1 0
//! phi 0 1
//! form 0 1
//! form 1 0
//! part1 1 0
//! part2 0 1
//! tensor degree=2 dim=3
//! 1 2 1
//! 0 0 1/4
//! subspace dim=3
//! 1 0 0
//! ```
//!
//! Matrix lists are blocks of rows separated by blank lines.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::homlie::HomLieAlgebra;
use crate::manin::ManinTriple;
use crate::matrix::{zero_vec, Matrix};
use crate::scalar::Field;
use crate::subspace::Subspace;
use crate::tensor::SparseTensor;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Document<F> {
    Algebra(HomLieAlgebra<F>),
    Triple(ManinTriple<F>),
    Tensor(SparseTensor<F>),
    Subspace(Subspace<F>),
}

impl<F: Field> Document<F> {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Algebra(_) => "algebra",
            Document::Triple(_) => "triple",
            Document::Tensor(_) => "tensor",
            Document::Subspace(_) => "subspace",
        }
    }

    /// The algebra of an algebra or triple document.
    pub fn algebra(&self) -> Option<&HomLieAlgebra<F>> {
        match self {
            Document::Algebra(h) => Some(h),
            Document::Triple(t) => Some(t.algebra()),
            _ => None,
        }
    }
}

const HEADERS: [&str; 4] = ["algebra", "triple", "tensor", "subspace"];

fn perr<T>(line: usize, message: impl Into<String>) -> Result<T> {
    Err(Error::Parse {
        line,
        message: message.into(),
    })
}

fn strip(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

fn scalar<F: Field>(line: usize, tok: &str) -> Result<F> {
    F::parse(tok).map_or_else(|| perr(line, format!("bad rational `{tok}`")), Ok)
}

fn index(line: usize, tok: &str, dim: usize) -> Result<usize> {
    match tok.parse::<usize>() {
        Ok(i) if i < dim => Ok(i),
        Ok(i) => perr(line, format!("index {i} out of range for dimension {dim}")),
        Err(_) => perr(line, format!("bad index `{tok}`")),
    }
}

fn row<F: Field>(line: usize, toks: &[&str], dim: usize) -> Result<Vec<F>> {
    if toks.len() != dim {
        return perr(line, format!("expected {dim} entries, found {}", toks.len()));
    }
    toks.iter().map(|t| scalar(line, t)).collect()
}

struct Header {
    kind: String,
    keys: BTreeMap<String, String>,
}

impl Header {
    fn parse(line: usize, text: &str) -> Result<Self> {
        let mut toks = text.split_whitespace();
        let kind = toks.next().unwrap_or_default().to_string();
        let mut keys = BTreeMap::new();
        for t in toks {
            match t.split_once('=') {
                Some((k, v)) if !k.is_empty() => {
                    keys.insert(k.to_string(), v.to_string());
                }
                _ => return perr(line, format!("expected key=value, found `{t}`")),
            }
        }
        Ok(Header { kind, keys })
    }

    fn usize(&self, line: usize, key: &str) -> Result<usize> {
        match self.keys.get(key) {
            Some(v) => v
                .parse()
                .map_or_else(|_| perr(line, format!("bad value for {key}: `{v}`")), Ok),
            None => perr(line, format!("missing {key}= in {} header", self.kind)),
        }
    }
}

/// Parses every document in `text`.
pub fn parse_documents<F: Field>(text: &str) -> Result<Vec<Document<F>>> {
    let mut blocks: Vec<(usize, &str, Vec<(usize, &str)>)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let ln = i + 1;
        let s = strip(raw);
        if s.is_empty() {
            continue;
        }
        let first = s.split_whitespace().next().unwrap_or_default();
        if HEADERS.contains(&first) {
            blocks.push((ln, s, Vec::new()));
        } else if let Some(b) = blocks.last_mut() {
            b.2.push((ln, s));
        } else {
            return perr(ln, format!("expected a header ({}), found `{first}`", HEADERS.join(", ")));
        }
    }
    blocks
        .into_iter()
        .map(|(ln, head, body)| parse_block(ln, head, &body))
        .collect()
}

fn parse_block<F: Field>(ln: usize, head: &str, body: &[(usize, &str)]) -> Result<Document<F>> {
    let h = Header::parse(ln, head)?;
    match h.kind.as_str() {
        "tensor" => {
            let degree = h.usize(ln, "degree")?;
            let dim = h.usize(ln, "dim")?;
            if !(1..=3).contains(&degree) {
                return perr(ln, format!("degree must be 1, 2 or 3, found {degree}"));
            }
            let mut t = SparseTensor::zero(degree, dim).or_else(|e| perr(ln, e.to_string()))?;
            for &(l, s) in body {
                let toks: Vec<&str> = s.split_whitespace().collect();
                if toks.len() != degree + 1 {
                    return perr(l, format!("expected {degree} indices and a coefficient"));
                }
                let idx = toks[..degree]
                    .iter()
                    .map(|x| index(l, x, dim))
                    .collect::<Result<Vec<_>>>()?;
                let c: F = scalar(l, toks[degree])?;
                t.add_entry(&idx, c).or_else(|e| perr(l, e.to_string()))?;
            }
            Ok(Document::Tensor(t))
        }
        "subspace" => {
            let dim = h.usize(ln, "dim")?;
            let rows = body
                .iter()
                .map(|&(l, s)| row(l, &s.split_whitespace().collect::<Vec<_>>(), dim))
                .collect::<Result<Vec<Vec<F>>>>()?;
            Subspace::span(dim, &rows)
                .map(Document::Subspace)
                .or_else(|e| perr(ln, e.to_string()))
        }
        "algebra" | "triple" => parse_algebraic(ln, &h, body),
        other => perr(ln, format!("unknown document `{other}`")),
    }
}

fn parse_algebraic<F: Field>(ln: usize, h: &Header, body: &[(usize, &str)]) -> Result<Document<F>> {
    let dim = h.usize(ln, "dim")?;
    let triple = h.kind == "triple";
    let mut brackets: Vec<(usize, usize, Vec<F>)> = Vec::new();
    let mut phi: Vec<Vec<F>> = Vec::new();
    let mut form: Vec<Vec<F>> = Vec::new();
    let mut parts: [Vec<Vec<F>>; 2] = [Vec::new(), Vec::new()];
    let mut seen = BTreeMap::new();
    for &(l, s) in body {
        let toks: Vec<&str> = s.split_whitespace().collect();
        match toks[0] {
            "bracket" => {
                let colon = toks.iter().position(|t| *t == ":");
                if colon != Some(3) {
                    return perr(l, "expected `bracket i j : k:c ...`");
                }
                let i = index(l, toks[1], dim)?;
                let j = index(l, toks[2], dim)?;
                if i == j {
                    return perr(l, "bracket of a basis vector with itself must vanish");
                }
                let key = (i.min(j), i.max(j));
                if let Some(prev) = seen.insert(key, l) {
                    return perr(l, format!("bracket {} {} already given on line {prev}", key.0, key.1));
                }
                let mut v: Vec<F> = zero_vec(dim);
                for t in &toks[4..] {
                    let Some((k, c)) = t.split_once(':') else {
                        return perr(l, format!("expected k:c, found `{t}`"));
                    };
                    let k = index(l, k, dim)?;
                    v[k] = v[k].clone() + scalar::<F>(l, c)?;
                }
                brackets.push((i, j, v));
            }
            "phi" => phi.push(row(l, &toks[1..], dim)?),
            "form" => form.push(row(l, &toks[1..], dim)?),
            "part1" | "part2" if triple => {
                let p = if toks[0] == "part1" { 0 } else { 1 };
                parts[p].push(row(l, &toks[1..], dim)?);
            }
            other => return perr(l, format!("unknown line `{other}` in {} block", h.kind)),
        }
    }
    let twist = if phi.is_empty() {
        Matrix::identity(dim)
    } else if phi.len() == dim {
        Matrix::from_rows(phi).or_else(|e| perr(ln, e.to_string()))?
    } else {
        return perr(ln, format!("expected {dim} phi rows, found {}", phi.len()));
    };
    let mut alg = HomLieAlgebra::new_unchecked(dim, brackets, twist).or_else(|e| perr(ln, e.to_string()))?;
    if let Some(name) = h.keys.get("name") {
        alg = alg.with_name(name.clone());
    }
    if !triple {
        if !form.is_empty() {
            return perr(ln, "form rows belong in a triple document");
        }
        return Ok(Document::Algebra(alg));
    }
    if form.len() != dim {
        return perr(ln, format!("expected {dim} form rows, found {}", form.len()));
    }
    let form = Matrix::from_rows(form).or_else(|e| perr(ln, e.to_string()))?;
    let [p1, p2] = parts;
    let p1 = Subspace::span(dim, &p1).or_else(|e| perr(ln, e.to_string()))?;
    let p2 = Subspace::span(dim, &p2).or_else(|e| perr(ln, e.to_string()))?;
    ManinTriple::new(alg, form, p1, p2)
        .map(Document::Triple)
        .or_else(|e| perr(ln, e.to_string()))
}

fn expect_one<F: Field, T>(
    text: &str,
    what: &str,
    pick: impl Fn(Document<F>) -> Option<T>,
) -> Result<T> {
    let docs = parse_documents(text)?;
    docs.into_iter().find_map(pick).map_or_else(
        || perr(0, format!("no {what} document found")),
        Ok,
    )
}

/// The first algebra in `text`, also accepting the algebra of a triple.
pub fn parse_algebra<F: Field>(text: &str) -> Result<HomLieAlgebra<F>> {
    expect_one(text, "algebra", |d| match d {
        Document::Algebra(h) => Some(h),
        Document::Triple(t) => Some(t.algebra().clone()),
        _ => None,
    })
}

pub fn parse_triple<F: Field>(text: &str) -> Result<ManinTriple<F>> {
    expect_one(text, "triple", |d| match d {
        Document::Triple(t) => Some(t),
        _ => None,
    })
}

pub fn parse_tensor<F: Field>(text: &str) -> Result<SparseTensor<F>> {
    expect_one(text, "tensor", |d| match d {
        Document::Tensor(t) => Some(t),
        _ => None,
    })
}

pub fn parse_subspace<F: Field>(text: &str) -> Result<Subspace<F>> {
    expect_one(text, "subspace", |d| match d {
        Document::Subspace(s) => Some(s),
        _ => None,
    })
}

fn join_row<F: Field>(v: &[F]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn write_algebra_body<F: Field>(out: &mut String, h: &HomLieAlgebra<F>) {
    for (i, j, v) in h.structure_constants() {
        let terms: Vec<String> = v.iter().map(|(k, c)| format!("{k}:{c}")).collect();
        let _ = writeln!(out, "bracket {i} {j} : {}", terms.join(" "));
    }
    for r in h.twist().row_vecs() {
        let _ = writeln!(out, "phi {}", join_row(&r));
    }
}

fn header_name<F: Field>(h: &HomLieAlgebra<F>) -> String {
    h.name().map(|n| format!(" name={n}")).unwrap_or_default()
}

pub fn write_algebra<F: Field>(h: &HomLieAlgebra<F>) -> String {
    let mut out = format!("algebra dim={}{}\n", h.dim(), header_name(h));
    write_algebra_body(&mut out, h);
    out
}

pub fn write_triple<F: Field>(t: &ManinTriple<F>) -> String {
    let h = t.algebra();
    let mut out = format!("triple dim={}{}\n", h.dim(), header_name(h));
    write_algebra_body(&mut out, h);
    for r in t.form().row_vecs() {
        let _ = writeln!(out, "form {}", join_row(&r));
    }
    for (label, part) in [("part1", t.part1()), ("part2", t.part2())] {
        for r in part.basis() {
            let _ = writeln!(out, "{label} {}", join_row(&r));
        }
    }
    out
}

pub fn write_tensor<F: Field>(t: &SparseTensor<F>) -> String {
    let mut out = format!("tensor degree={} dim={}\n", t.degree(), t.dim());
    for (idx, c) in t.entries() {
        let idx: Vec<String> = idx.iter().map(ToString::to_string).collect();
        let _ = writeln!(out, "{} {c}", idx.join(" "));
    }
    out
}

pub fn write_subspace<F: Field>(s: &Subspace<F>) -> String {
    let mut out = format!("subspace dim={}\n", s.ambient_dim());
    for r in s.basis() {
        let _ = writeln!(out, "{}", join_row(&r));
    }
    out
}

pub fn write_document<F: Field>(d: &Document<F>) -> String {
    match d {
        Document::Algebra(h) => write_algebra(h),
        Document::Triple(t) => write_triple(t),
        Document::Tensor(t) => write_tensor(t),
        Document::Subspace(s) => write_subspace(s),
    }
}

/// Blank-line separated blocks of matrix rows.
pub fn parse_matrices<F: Field>(text: &str) -> Result<Vec<Matrix<F>>> {
    let mut out = Vec::new();
    let mut rows: Vec<Vec<F>> = Vec::new();
    let mut start = 0;
    let flush = |rows: &mut Vec<Vec<F>>, out: &mut Vec<Matrix<F>>, start: usize| -> Result<()> {
        if !rows.is_empty() {
            let m = Matrix::from_rows(std::mem::take(rows)).or_else(|e| perr(start, e.to_string()))?;
            out.push(m);
        }
        Ok(())
    };
    for (i, raw) in text.lines().enumerate() {
        let ln = i + 1;
        if raw.trim().is_empty() {
            flush(&mut rows, &mut out, start)?;
            continue;
        }
        let s = strip(raw);
        if s.is_empty() {
            continue;
        }
        if rows.is_empty() {
            start = ln;
        }
        let toks: Vec<&str> = s.split_whitespace().collect();
        let width = rows.first().map_or(toks.len(), Vec::len);
        rows.push(row(ln, &toks, width)?);
    }
    flush(&mut rows, &mut out, start)?;
    Ok(out)
}

pub fn write_matrices<F: Field>(ms: &[Matrix<F>]) -> String {
    ms.iter()
        .map(|m| {
            m.row_vecs()
                .iter()
                .map(|r| format!("{}\n", join_row(r)))
                .collect::<String>()
        })
        .collect::<Vec<_>>()
        .join("\n")
}
