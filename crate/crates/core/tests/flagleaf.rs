mod common;

use std::collections::BTreeSet;

use common::{config, random_lower, random_sl, random_upper};
use maninforge::flagleaf::{
    in_borel, in_borel_pair, leaf_index_inverse, leaf_index_map, psi_map, psi_map_with,
    psi_stages, twisted_action, twisted_coset_equal, w0_dot, weyl_longest, DoubleLeafIndex,
    GroupElement, LeafIndex, Pair, WeylElement,
};
use maninforge::matrix::Matrix as M;
use maninforge::rmatrix::random_rational;
use maninforge::{Error, Field, Rational as Q};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn domain(k: usize, n: usize) -> Vec<DoubleLeafIndex> {
    let ws = WeylElement::all(k);
    let mut tuples: Vec<Vec<WeylElement>> = vec![vec![]];
    for _ in 0..n {
        tuples = tuples
            .into_iter()
            .flat_map(|t| {
                ws.iter().map(move |w| {
                    let mut t = t.clone();
                    t.push(w.clone());
                    t
                })
            })
            .collect();
    }
    let mut out = Vec::new();
    for u in &tuples {
        for v in &tuples {
            for w in &ws {
                out.push(DoubleLeafIndex { u: u.clone(), v: v.clone(), w: w.clone() });
            }
        }
    }
    out
}

#[test]
fn leaf_index_map_is_a_bijection() {
    for (k, n, count) in [(2, 1, 8), (2, 2, 32), (3, 1, 216)] {
        let dom = domain(k, n);
        assert_eq!(dom.len(), count);
        let images: BTreeSet<LeafIndex> = dom.iter().map(|d| leaf_index_map(d).unwrap()).collect();
        assert_eq!(images.len(), count);
        for d in &dom {
            assert_eq!(&leaf_index_inverse(&leaf_index_map(d).unwrap()).unwrap(), d);
        }
    }
}

#[test]
fn leaf_index_small_cases() {
    let e = WeylElement::identity(2);
    let w0 = weyl_longest(2);
    let idx = DoubleLeafIndex { u: vec![e.clone()], v: vec![e.clone()], w: e.clone() };
    let img = leaf_index_map(&idx).unwrap();
    assert_eq!(img, LeafIndex { u: vec![e, w0.clone()], w: w0 });

    let bad = DoubleLeafIndex {
        u: vec![WeylElement::identity(2)],
        v: vec![WeylElement::identity(3)],
        w: WeylElement::identity(2),
    };
    assert!(matches!(leaf_index_map(&bad), Err(Error::DimensionMismatch { .. })));
}

#[test]
fn words_multiply_simple_reflections() {
    let w = WeylElement::from_word(3, &[1, 2, 1]).unwrap();
    assert_eq!(w, weyl_longest(3));
    assert_eq!(WeylElement::from_word(4, &[1, 2, 1, 3, 2, 1]).unwrap(), weyl_longest(4));
    assert!(WeylElement::from_word(3, &[0]).is_err());
    assert!(WeylElement::from_word(3, &[3]).is_err());
}

#[test]
fn conjugating_simple_reflections_by_w0() {
    for k in 2..=6 {
        let w0 = weyl_longest(k);
        assert_eq!(w0.mul(&w0).unwrap(), WeylElement::identity(k));
        for i in 0..k - 1 {
            let s = WeylElement::simple(k, i).unwrap();
            let conj = w0.mul(&s).unwrap().mul(&w0).unwrap();
            assert_eq!(conj, WeylElement::simple(k, k - 2 - i).unwrap());
        }
    }
}

#[test]
fn group_elements_must_be_unimodular() {
    let m = M::from_int_rows(&[&[2, 0], &[0, 1]]);
    assert!(matches!(GroupElement::<Q>::new(m), Err(Error::NotUnimodular(_))));
}

#[test]
fn psi_on_diagonal_and_unipotent() {
    let q = |a, b| Q::from_frac(a, b);
    let g1 = GroupElement::new(M::from_rows(vec![vec![q(2, 1), q(0, 1)], vec![q(0, 1), q(1, 2)]]).unwrap()).unwrap();
    let g2 = GroupElement::new(M::from_int_rows(&[&[1, 1], &[0, 1]])).unwrap();
    let out = psi_map(1, &[g1.clone(), g2.clone()]).unwrap();
    // g₁g₂ = [[2,2],[0,1/2]], times ẇ₀ = [[0,1],[-1,0]]
    let expected = M::from_rows(vec![vec![q(-2, 1), q(2, 1)], vec![q(-1, 2), q(0, 1)]]).unwrap();
    assert_eq!(out[0].0, g1);
    assert_eq!(out[0].1.matrix(), &expected);
}

#[test]
fn stages_of_the_identity() {
    let g = vec![GroupElement::<Q>::identity(2); 4];
    let st = psi_stages(2, &g).unwrap();
    let w0: GroupElement<Q> = w0_dot(2);
    let id = GroupElement::identity(2);
    assert_eq!(st.stage1, vec![id.clone(); 4]);
    assert_eq!(st.stage2, vec![id.clone(), id.clone(), w0.clone(), w0.clone()]);
    assert_eq!(st.stage3, vec![(id.clone(), w0.clone()), (id.clone(), w0.clone())]);
    assert_eq!(st.stage4, vec![(id.clone(), w0), (id.clone(), id)]);
}

fn coset_eq(a: &[Pair<Q>], b: &[Pair<Q>]) -> bool {
    twisted_coset_equal(a, b, in_borel_pair).unwrap()
}

proptest! {
    #![proptest_config(config(100, 0x666c_6167))]

    #[test]
    fn stages_compose_to_psi(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for n in 1..=2 {
            let g: Vec<GroupElement<Q>> = (0..2 * n).map(|_| random_sl(&mut rng, 2)).collect();
            let st = psi_stages(n, &g).unwrap();
            let psi = psi_map(n, &g).unwrap();
            let mut acc = GroupElement::identity(2);
            for (j, x) in g.iter().enumerate() {
                acc = acc.mul(x).unwrap();
                prop_assert_eq!(&st.stage1[j], &acc);
            }
            prop_assert_eq!(&st.stage4[0], &psi[0]);
            for (a, b) in st.stage4.iter().zip(&psi) {
                prop_assert_eq!(&a.0, &b.0);
            }
            prop_assert!(coset_eq(&st.stage4, &psi));
        }
        // in SL(3) the representative squares to the identity and the match is literal
        let g: Vec<GroupElement<Q>> = (0..4).map(|_| random_sl(&mut rng, 3)).collect();
        prop_assert_eq!(psi_stages(2, &g).unwrap().stage4, psi_map(2, &g).unwrap());
    }

    #[test]
    fn psi_is_well_defined_on_cosets(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for n in 1..=2 {
            let g: Vec<GroupElement<Q>> = (0..2 * n).map(|_| random_sl(&mut rng, 2)).collect();
            let b: Vec<GroupElement<Q>> = (0..2 * n).map(|_| random_upper(&mut rng, 2)).collect();
            let moved = twisted_action(&g, &b).unwrap();
            prop_assert!(twisted_coset_equal(&g, &moved, in_borel).unwrap());
            prop_assert!(coset_eq(&psi_map(n, &g).unwrap(), &psi_map(n, &moved).unwrap()));
        }
    }

    #[test]
    fn psi_cosets_ignore_the_w0_representative(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = 2;
        let g: Vec<GroupElement<Q>> = (0..2 * n).map(|_| random_sl(&mut rng, 2)).collect();
        let mut t = random_rational::<Q, _>(&mut rng);
        if t == Q::from_int(0) {
            t = Q::from_int(3);
        }
        let torus = GroupElement::new(M::diag(&[t.clone(), Q::from_int(1) / t])).unwrap();
        let rep = w0_dot(2).mul(&torus).unwrap();
        prop_assert!(coset_eq(&psi_map(n, &g).unwrap(), &psi_map_with(n, &g, &rep).unwrap()));
    }

    #[test]
    fn lower_twists_are_detected(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a: Vec<GroupElement<Q>> = (0..2).map(|_| random_sl(&mut rng, 2)).collect();
        let mut q: Vec<GroupElement<Q>> = vec![random_lower(&mut rng, 2), GroupElement::identity(2)];
        while q[0].in_borel() {
            q[0] = random_lower(&mut rng, 2);
        }
        let b = twisted_action(&a, &q).unwrap();
        prop_assert!(!twisted_coset_equal(&a, &b, in_borel).unwrap());
        prop_assert!(twisted_coset_equal(&a, &a, in_borel).unwrap());
    }
}
