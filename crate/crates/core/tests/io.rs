use maninforge::io::{
    parse_algebra, parse_documents, parse_matrices, parse_subspace, parse_tensor, parse_triple,
    write_document, write_matrices, write_subspace, write_tensor, write_triple, Document,
};
use maninforge::manin::{
    hyperbolic_plane, lambda_st, sl_k, triple_double, triple_g_plus_h,
};
use maninforge::matrix::unit_vec;
use maninforge::polyuble::nuble;
use maninforge::rmatrix::sl2_example_r;
use maninforge::{Algebra, Error, Field, ManinTriple, Rational as Q, Subspace, Tensor};

fn corpus() -> Vec<Document<Q>> {
    let sl2: Algebra = sl_k(2, true).unwrap().with_name("sl2");
    let r: Tensor = sl2_example_r();
    let lst: Tensor = lambda_st(2).unwrap();
    let t: ManinTriple = triple_g_plus_h(2, false).unwrap();
    vec![
        Document::Algebra(sl2),
        Document::Algebra(sl_k(3, false).unwrap()),
        Document::Tensor(r),
        Document::Tensor(lst),
        Document::Triple(hyperbolic_plane()),
        Document::Triple(t.clone()),
        Document::Triple(triple_g_plus_h(2, true).unwrap()),
        Document::Triple(triple_double(2, false).unwrap()),
        Document::Triple(triple_double(2, true).unwrap()),
        Document::Triple(nuble(&t, 3).unwrap()),
        Document::Subspace(Subspace::span(4, &[unit_vec(4, 0), unit_vec(4, 3)]).unwrap()),
    ]
}

#[test]
fn every_document_round_trips() {
    for d in corpus() {
        let text = write_document(&d);
        let back: Vec<Document<Q>> = parse_documents(&text).unwrap();
        assert_eq!(back, vec![d.clone()], "{}", d.kind());
        assert_eq!(write_document(&back[0]), text);
    }
}

#[test]
fn concatenated_documents_split_at_headers() {
    let docs = corpus();
    let text: String = docs.iter().map(write_document).collect();
    assert_eq!(parse_documents::<Q>(&text).unwrap(), docs);
}

#[test]
fn triple_text_is_also_an_algebra() {
    let t: ManinTriple = triple_double(2, false).unwrap();
    let h: Algebra = parse_algebra(&write_triple(&t)).unwrap();
    assert_eq!(&h, t.algebra());
}

#[test]
fn missing_phi_means_identity() {
    let h: Algebra = parse_algebra("algebra dim=2\nbracket 0 1 : 1:1\n").unwrap();
    assert!(h.twist_is_identity());
    assert_eq!(h.basis_bracket(0, 1), vec![Q::from_int(0), Q::from_int(1)]);
}

#[test]
fn comments_and_fractions() {
    let text = "# r\ntensor degree=2 dim=3  # header\n\n1 2 1\n0 0 -3/12\n";
    let t: Tensor = parse_tensor(text).unwrap();
    assert_eq!(t.nnz(), 2);
    assert_eq!(write_tensor(&t), "tensor degree=2 dim=3\n0 0 -1/4\n1 2 1\n");
}

#[test]
fn subspace_is_stored_reduced() {
    let s: Subspace = parse_subspace("subspace dim=3\n2 4 0\n1 3 1\n").unwrap();
    assert_eq!(write_subspace(&s), "subspace dim=3\n1 0 -2\n0 1 1\n");
}

fn parse_line(r: Result<impl std::fmt::Debug, Error>) -> usize {
    match r {
        Err(Error::Parse { line, .. }) => line,
        other => panic!("expected parse error, got {other:?}"),
    }
}

#[test]
fn parse_errors_point_at_the_line() {
    assert_eq!(parse_line(parse_algebra::<Q>("algebra dim=2\nbracket 0 1 : 1:x\n")), 2);
    assert_eq!(parse_line(parse_algebra::<Q>("algebra dim=2\nbracket 0 2 : 1:1\n")), 2);
    assert_eq!(parse_line(parse_algebra::<Q>("algebra\n")), 1);
    // an incomplete twist is reported at the header
    assert_eq!(parse_line(parse_algebra::<Q>("algebra dim=2\nphi 1 0\n")), 1);
    assert_eq!(parse_line(parse_tensor::<Q>("tensor degree=2 dim=2\n0 1\n")), 2);
    assert_eq!(parse_line(parse_triple::<Q>("algebra dim=2\n")), 0);
    assert_eq!(parse_line(parse_documents::<Q>("widget dim=1\n")), 1);
    assert_eq!(parse_line(parse_matrices::<Q>("1 0\n0\n")), 2);
    let short_form = "triple dim=2\nform 0 1\npart1 1 0\npart2 0 1\n";
    assert!(parse_triple::<Q>(short_form).is_err());
}

#[test]
fn matrices_round_trip() {
    let text = "0 1\n-1 0\n\n2 0\n0 1/2\n";
    let ms = parse_matrices::<Q>(text).unwrap();
    assert_eq!(ms.len(), 2);
    assert_eq!(write_matrices(&ms), text);
}
