use maninforge::manin::{check_manin_triple, hyperbolic_plane, triple_double, triple_g_plus_h};
use maninforge::perm::Permutation;
use maninforge::polyuble::{
    block_permutation, nuble, slot_isomorphisms, snake_iso_apply, snake_permutation,
    uble_of_uble, verify_snake_iso, ChainGraph,
};
use maninforge::{ManinTriple, Rational};

fn bases() -> Vec<ManinTriple> {
    vec![
        hyperbolic_plane(),
        triple_g_plus_h(2, false).unwrap(),
        triple_double(2, false).unwrap(),
    ]
}

#[test]
fn snake_certifies_for_every_small_grid() {
    let ts: [ManinTriple; 2] = [hyperbolic_plane(), triple_g_plus_h(2, true).unwrap()];
    for t in ts {
        for m in 1..=3 {
            for n in 1..=3 {
                let rep = verify_snake_iso(&t, m, n).unwrap();
                assert!(rep.passed(), "{rep}");
            }
        }
    }
}

#[test]
fn nubles_of_twisted_bases_certify() {
    let ts: [ManinTriple; 2] = [triple_g_plus_h(2, true).unwrap(), triple_double(2, true).unwrap()];
    for t in ts {
        for n in 1..=3 {
            let rep = check_manin_triple(&nuble(&t, n).unwrap());
            assert!(rep.passed(), "{rep}");
        }
    }
}

#[test]
fn snake_is_the_only_slot_isomorphism_for_two_by_two() {
    for t in bases() {
        let found = slot_isomorphisms(&t, 2, 2).unwrap();
        assert_eq!(found, vec![snake_permutation(2, 2).unwrap()]);
    }
}

#[test]
fn swapping_two_slots_breaks_the_form() {
    let t: ManinTriple = hyperbolic_plane();
    let big = nuble(&t, 4).unwrap();
    let tower = uble_of_uble(&t, 2, 2).unwrap();
    let swap = Permutation::transposition(4, 0, 1).unwrap();
    let f = block_permutation(&swap, 2).to_matrix();
    let rep = maninforge::manin::check_manin_isomorphism(&f, &big, &tower);
    assert!(rep.failed_checks().contains("form-preserving"));
}

#[test]
fn signs_agree_after_reindexing() {
    for t in bases() {
        for m in 1..=3 {
            for n in 1..=3 {
                let big = nuble(&t, m * n).unwrap();
                let tower = uble_of_uble(&t, m, n).unwrap();
                let f: maninforge::Matrix =
                    block_permutation(&snake_permutation(m, n).unwrap(), t.dim()).to_matrix();
                let pulled = f.transpose().mul(tower.form()).unwrap().mul(&f).unwrap();
                assert_eq!(&pulled, big.form());
            }
        }
    }
}

#[test]
fn towers_of_snakes_agree() {
    // M^8 -> (M^4)^2 -> ((M^2)^2)^2 against M^8 -> (M^2)^4 -> ((M^2)^2)^2.
    let s42 = snake_permutation(4, 2).unwrap();
    let s22 = snake_permutation(2, 2).unwrap();
    let s24 = snake_permutation(2, 4).unwrap();
    let mut inner = s22.images().to_vec();
    inner.extend(s22.images().iter().map(|x| x + 4));
    let via_four = Permutation::new(inner).unwrap().compose(&s42).unwrap();
    let via_two = block_permutation(&s22, 2).compose(&s24).unwrap();
    assert_eq!(via_four, via_two);
}

#[test]
fn snake_apply_round_trips() {
    let v: Vec<Rational> = (0..12).map(|i| Rational::from_integer(i.into())).collect();
    let w = snake_iso_apply(2, 3, &v, 2).unwrap();
    let p = block_permutation(&snake_permutation(2, 3).unwrap(), 2);
    let back: Vec<Rational> = (0..12).map(|x| w[p.apply(x)].clone()).collect();
    assert_eq!(back, v);
    assert!(snake_iso_apply(2, 3, &v, 3).is_err());
}

#[test]
fn chain_graph_matches_the_displays() {
    let g = ChainGraph::for_nuble(5).unwrap();
    assert_eq!(g.edges, vec![(1, 2, 1), (3, 4, 1), (2, 3, 2), (4, 5, 2)]);
    assert!(g.is_properly_colored());
    let one = ChainGraph::for_nuble(1).unwrap();
    assert!(one.edges.is_empty());
    assert_eq!(one.vertices.len(), 3);
}
