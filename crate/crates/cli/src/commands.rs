use std::fs;
use std::io::Read;
use std::path::Path;

use maninforge::flagleaf::{
    in_borel_pair, leaf_index_inverse, leaf_index_map, psi_map, psi_stages, twisted_coset_equal,
    DoubleLeafIndex, GroupElement, Pair, WeylElement,
};
use maninforge::io::{
    parse_documents, parse_matrices, write_algebra, write_matrices, write_tensor, write_triple,
    Document,
};
use maninforge::manin::{
    check_manin_triple, hyperbolic_plane, lambda_st, r_from_splitting, sl_k, triple_double,
    triple_g_plus_h,
};
use maninforge::polyuble::{nuble, snake_dot, snake_permutation, verify_snake_iso};
use maninforge::rmatrix::{check_quasi_triangular, cyb, sl2_example_r, RVerdict};
use maninforge::stabilizer::{
    check_bracket_sharp_condition, check_coisotropy, check_s_sharp_condition,
};
use maninforge::{Algebra, Error, ManinTriple, Matrix, Rational as Q, Report, Subspace, Tensor};

use crate::args::{Command, ExampleName, LeafArgs, VerifyKind};
use crate::output::Outcome;

/// Failures that map to exit code 2.
#[derive(Debug)]
pub enum UsageError {
    Io(String),
    Input(Error),
}

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            UsageError::Io(m) => f.write_str(m),
            UsageError::Input(e) => e.fmt(f),
        }
    }
}

impl From<Error> for UsageError {
    fn from(e: Error) -> Self {
        UsageError::Input(e)
    }
}

type Res<T> = std::result::Result<T, UsageError>;

/// Reads files; `-` is stdin, read once and shared by every `-` argument.
#[derive(Default)]
pub struct Inputs {
    stdin: Option<String>,
}

impl Inputs {
    fn read(&mut self, path: &Path) -> Res<String> {
        if path == Path::new("-") {
            if self.stdin.is_none() {
                let mut s = String::new();
                std::io::stdin()
                    .read_to_string(&mut s)
                    .map_err(|e| UsageError::Io(format!("stdin: {e}")))?;
                self.stdin = Some(s);
            }
            return Ok(self.stdin.clone().unwrap_or_default());
        }
        fs::read_to_string(path).map_err(|e| UsageError::Io(format!("{}: {e}", path.display())))
    }

    fn documents(&mut self, path: &Path) -> Res<Vec<Document<Q>>> {
        let text = self.read(path)?;
        parse_documents(&text).map_err(|e| located(path, e))
    }

    fn find<T>(
        &mut self,
        path: &Path,
        what: &str,
        pick: impl Fn(Document<Q>) -> Option<T>,
    ) -> Res<T> {
        self.documents(path)?
            .into_iter()
            .find_map(pick)
            .ok_or_else(|| located(path, Error::Parse { line: 0, message: format!("no {what} document found") }))
    }

    fn triple(&mut self, path: &Path) -> Res<ManinTriple> {
        self.find(path, "triple", |d| match d {
            Document::Triple(t) => Some(t),
            _ => None,
        })
    }

    fn algebra(&mut self, path: &Path) -> Res<Algebra> {
        self.find(path, "algebra", |d| match d {
            Document::Algebra(h) => Some(h),
            Document::Triple(t) => Some(t.algebra().clone()),
            _ => None,
        })
    }

    fn tensor(&mut self, path: &Path) -> Res<Tensor> {
        self.find(path, "tensor", |d| match d {
            Document::Tensor(t) => Some(t),
            _ => None,
        })
    }

    fn subspace(&mut self, path: &Path) -> Res<Subspace> {
        self.find(path, "subspace", |d| match d {
            Document::Subspace(s) => Some(s),
            _ => None,
        })
    }
}

fn located(path: &Path, e: Error) -> UsageError {
    match e {
        Error::Parse { line, message } => UsageError::Io(format!("{}:{line}: {message}", path.display())),
        other => UsageError::Input(other),
    }
}

pub fn run(cmd: Command, inputs: &mut Inputs) -> Res<Outcome> {
    match cmd {
        Command::Verify { kind, file, admissible } => verify(inputs, kind, &file, admissible),
        Command::Polyuble { triple, n, check } => {
            let t = inputs.triple(&triple)?;
            let u = nuble(&t, n)?;
            let mut out = Outcome::document(write_triple(&u));
            if check {
                out.report = Some(check_manin_triple(&u));
            }
            Ok(out)
        }
        Command::Snake { m, n, verify, dot } => snake(inputs, m, n, verify.as_deref(), dot.as_deref()),
        Command::Hcybe { algebra, r, classical } => hcybe(inputs, &algebra, &r, classical),
        Command::Stabilizer { triple, q, s } => stabilizer(inputs, &triple, &q, s.as_deref()),
        Command::Leafmap(a) => leafmap(&a),
        Command::Psi { rank, n, input, stages } => psi(inputs, rank, n, &input, stages),
        Command::Examples { name, twisted } => examples(name, twisted),
    }
}

fn verify(inputs: &mut Inputs, kind: VerifyKind, file: &Path, admissible: bool) -> Res<Outcome> {
    let rep = match kind {
        VerifyKind::Manin => check_manin_triple(&inputs.triple(file)?),
        VerifyKind::Algebra => {
            let h = inputs.algebra(file)?;
            let mut rep = Report::new("hom-Lie algebra");
            rep.absorb(h.check_hom_jacobi());
            rep.absorb(h.check_twist_morphism());
            if admissible {
                rep.absorb(h.check_admissible_algebra());
            }
            rep
        }
    };
    Ok(Outcome { report: Some(rep), ..Outcome::default() })
}

fn snake(inputs: &mut Inputs, m: usize, n: usize, verify: Option<&Path>, dot: Option<&Path>) -> Res<Outcome> {
    let p = snake_permutation(m, n)?;
    let images: Vec<String> = p.images().iter().map(ToString::to_string).collect();
    let mut out = Outcome::default().detail("snake", images.join(" "));
    if let Some(path) = dot {
        let text = snake_dot(m, n)?;
        if path == Path::new("-") {
            out.text = text;
        } else {
            fs::write(path, text).map_err(|e| UsageError::Io(format!("{}: {e}", path.display())))?;
        }
    }
    if let Some(path) = verify {
        out.report = Some(verify_snake_iso(&inputs.triple(path)?, m, n)?);
    }
    Ok(out)
}

fn hcybe(inputs: &mut Inputs, algebra: &Path, r: &Path, classical: bool) -> Res<Outcome> {
    let h = inputs.algebra(algebra)?;
    let r = inputs.tensor(r)?;
    if classical {
        let res = cyb(&h, &r)?;
        let mut rep = Report::new("classical Yang-Baxter");
        rep.ran("cyb-zero");
        for (idx, v) in res.entries() {
            rep.fail_vec("cyb-zero", idx.to_vec(), std::slice::from_ref(v));
        }
        return Ok(Outcome {
            text: write_tensor(&res),
            report: Some(rep),
            ..Outcome::default()
        });
    }
    let rep = check_quasi_triangular(&h, &r)?;
    let verdict = match rep.verdict {
        RVerdict::QuasiTriangular => "quasi-triangular",
        RVerdict::SkewOnly => "skew-only",
        RVerdict::Fails => "fails",
    };
    Ok(Outcome {
        text: write_tensor(&rep.hcyb_residual),
        report: Some(rep.to_report()),
        ..Outcome::default()
    }
    .detail("r-matrix", verdict)
    .detail("factorizable", rep.factorizable))
}

fn stabilizer(inputs: &mut Inputs, triple: &Path, q: &Path, s: Option<&Path>) -> Res<Outcome> {
    let t = inputs.triple(triple)?;
    let q = inputs.subspace(q)?;
    let (s, source) = match s {
        Some(p) => (inputs.tensor(p)?, "file"),
        None => (r_from_splitting(&t)?.skew_sym_split()?.1, "splitting"),
    };
    let h = t.algebra();
    let mut rep = Report::new("stabilizer conditions");
    rep.expect("coisotropic", check_coisotropy(&t, &q)?, "q^⊥ is not contained in q");
    rep.expect("s-sharp-image", check_s_sharp_condition(h, &s, &q)?, "S♯(q^⊥) is not contained in q");
    rep.expect(
        "bracket-on-image",
        check_bracket_sharp_condition(h, &s, &q)?,
        "[S♯q^⊥, S♯q^⊥] is not contained in q",
    );
    Ok(Outcome { report: Some(rep), ..Outcome::default() }.detail("S", source))
}

fn parse_word(k: usize, text: &str) -> Res<WeylElement> {
    let text = text.trim();
    if text == "e" || text.is_empty() {
        return Ok(WeylElement::identity(k));
    }
    let word = text
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| UsageError::Io(format!("bad reflection index `{t}` in word `{text}`")))
        })
        .collect::<Res<Vec<_>>>()?;
    Ok(WeylElement::from_word(k, &word)?)
}

/// A reduced word in 1-based simple reflections, `e` for the identity.
pub fn reduced_word(w: &WeylElement) -> String {
    let mut images = w.perm().images().to_vec();
    let mut peeled = Vec::new();
    while let Some(i) = (0..images.len().saturating_sub(1)).find(|&i| images[i] > images[i + 1]) {
        images.swap(i, i + 1);
        peeled.push(i + 1);
    }
    if peeled.is_empty() {
        return "e".into();
    }
    let word: Vec<String> = peeled.iter().rev().map(ToString::to_string).collect();
    word.join(",")
}

fn leafmap(a: &LeafArgs) -> Res<Outcome> {
    if a.u.len() != a.n || a.v.len() != a.n {
        return Err(UsageError::Io(format!(
            "expected {} words for each of -u and -v, found {} and {}",
            a.n,
            a.u.len(),
            a.v.len()
        )));
    }
    let words = |ws: &[String]| ws.iter().map(|w| parse_word(a.rank, w)).collect::<Res<Vec<_>>>();
    let idx = DoubleLeafIndex {
        u: words(&a.u)?,
        v: words(&a.v)?,
        w: parse_word(a.rank, &a.w)?,
    };
    let image = leaf_index_map(&idx)?;
    let mut text = String::new();
    for (j, x) in image.u.iter().enumerate() {
        text.push_str(&format!("u{} {}\n", j + 1, reduced_word(x)));
    }
    text.push_str(&format!("w {}\n", reduced_word(&image.w)));
    let mut rep = Report::new("leaf index map");
    rep.expect("inverse", leaf_index_inverse(&image)? == idx, "inverse does not recover the input");
    Ok(Outcome { text, report: Some(rep), ..Outcome::default() })
}

fn pair_blocks(label: &str, pairs: &[Pair<Q>]) -> String {
    let mut s = String::new();
    for (j, (a, b)) in pairs.iter().enumerate() {
        for (side, g) in [("left", a), ("right", b)] {
            s.push_str(&format!("# {label} {} {side}\n", j + 1));
            s.push_str(&write_matrices(std::slice::from_ref(g.matrix())));
            s.push('\n');
        }
    }
    s
}

fn element_blocks(label: &str, gs: &[GroupElement<Q>]) -> String {
    let mut s = String::new();
    for (j, g) in gs.iter().enumerate() {
        s.push_str(&format!("# {label} {}\n", j + 1));
        s.push_str(&write_matrices(std::slice::from_ref(g.matrix())));
        s.push('\n');
    }
    s
}

fn psi(inputs: &mut Inputs, rank: usize, n: usize, input: &Path, stages: bool) -> Res<Outcome> {
    let text = inputs.read(input)?;
    let ms: Vec<Matrix> = parse_matrices(&text).map_err(|e| located(input, e))?;
    if ms.len() != 2 * n {
        return Err(UsageError::Io(format!("expected {} matrices, found {}", 2 * n, ms.len())));
    }
    let g = ms
        .into_iter()
        .map(|m| {
            if m.rows() != rank || m.cols() != rank {
                return Err(UsageError::Io(format!("expected {rank}×{rank} matrices")));
            }
            Ok(GroupElement::new(m)?)
        })
        .collect::<Res<Vec<_>>>()?;
    let out = psi_map(n, &g)?;
    let mut text = pair_blocks("pair", &out);
    if !stages {
        return Ok(Outcome::document(text));
    }
    let st = psi_stages(n, &g)?;
    text.push_str(&element_blocks("stage1", &st.stage1));
    text.push_str(&element_blocks("stage2", &st.stage2));
    text.push_str(&pair_blocks("stage3", &st.stage3));
    text.push_str(&pair_blocks("stage4", &st.stage4));
    let mut rep = Report::new("stage composition");
    rep.expect(
        "first-components",
        (0..n).all(|j| st.stage4[j].0 == out[j].0),
        "first components differ",
    );
    rep.expect(
        "coset-equal",
        twisted_coset_equal(&st.stage4, &out, in_borel_pair)?,
        "stage 4 and the map lie in different twisted cosets",
    );
    let literal = st.stage4 == out;
    Ok(Outcome { text, report: Some(rep), ..Outcome::default() }.detail("entrywise-equal", literal))
}

fn examples(name: ExampleName, twisted: bool) -> Res<Outcome> {
    let text = match name {
        ExampleName::Sl2 => {
            let h: Algebra = sl_k(2, true)?;
            let r: Tensor = sl2_example_r();
            write_algebra(&h) + &write_tensor(&r)
        }
        ExampleName::GPlusH => write_triple::<Q>(&triple_g_plus_h(2, twisted)?),
        ExampleName::Double => write_triple::<Q>(&triple_double(2, twisted)?),
        ExampleName::Hyperbolic => write_triple::<Q>(&hyperbolic_plane()),
        ExampleName::LambdaSt => write_tensor::<Q>(&lambda_st(2)?),
    };
    Ok(Outcome::document(text))
}
