#![allow(dead_code)]

use maninforge::flagleaf::GroupElement;
use maninforge::homlie::HomLieAlgebra;
use maninforge::manin::{
    coboundary_dual, double_from_bialgebra, hyperbolic_plane, lambda_st, sl_k, triple_double,
    triple_g_plus_h,
};
use maninforge::polyuble::nuble;
use maninforge::matrix::Matrix as M;
use maninforge::rmatrix::random_rational;
use maninforge::tensor::SparseTensor;
use maninforge::{Algebra, Field, ManinTriple, Matrix, Rational as Q, Tensor};
use proptest::prelude::ProptestConfig;
use proptest::test_runner::RngSeed;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn config(cases: u32, seed: u64) -> ProptestConfig {
    ProptestConfig {
        cases,
        rng_seed: RngSeed::Fixed(seed),
        failure_persistence: None,
        ..ProptestConfig::default()
    }
}

pub fn involutive_algebras() -> Vec<Algebra> {
    vec![
        sl_k(2, true).unwrap(),
        sl_k(2, false).unwrap(),
        triple_g_plus_h::<Q>(2, true).unwrap().algebra().clone(),
        triple_double::<Q>(2, true).unwrap().algebra().clone(),
        triple_double::<Q>(2, false).unwrap().algebra().clone(),
        hyperbolic_plane::<Q>().algebra().clone(),
    ]
}

pub fn random_tensor2(rng: &mut ChaCha8Rng, n: usize, density: f64) -> Tensor {
    let mut t = SparseTensor::zero(2, n).unwrap();
    for a in 0..n {
        for b in 0..n {
            if rng.gen_bool(density) {
                t.add_entry(&[a, b], random_rational(rng)).unwrap();
            }
        }
    }
    t
}

pub fn random_skew(rng: &mut ChaCha8Rng, n: usize) -> Tensor {
    let t = random_tensor2(rng, n, 0.5);
    t.sub(&t.transpose().unwrap()).unwrap()
}

/// `c·φ_k G_k⁻¹` on each listed block.
pub fn invariant_s(t: &ManinTriple, blocks: &[(usize, usize)], coeffs: &[Q]) -> Tensor {
    let n = t.dim();
    let g_inv = t.form().inverse().unwrap();
    let sg = t.algebra().twist().mul(&g_inv).unwrap();
    let mut m: Matrix = M::zeros(n, n);
    for (&(lo, hi), c) in blocks.iter().zip(coeffs) {
        for i in lo..hi {
            for j in lo..hi {
                m[(i, j)] = sg[(i, j)].clone() * c.clone();
            }
        }
    }
    SparseTensor::from_matrix(&m).unwrap()
}

fn nonzero(rng: &mut ChaCha8Rng) -> Q {
    loop {
        let c: Q = random_rational(rng);
        if c != Q::from_int(0) {
            return c;
        }
    }
}

/// `diag(t, …, 1/∏)` times a unipotent upper-triangular matrix.
pub fn random_upper(rng: &mut ChaCha8Rng, k: usize) -> GroupElement<Q> {
    let mut m: Matrix = M::identity(k);
    let mut prod = Q::from_int(1);
    for i in 0..k - 1 {
        let d = nonzero(rng);
        prod *= d.clone();
        m[(i, i)] = d;
    }
    m[(k - 1, k - 1)] = Q::from_int(1) / prod;
    for i in 0..k {
        for j in i + 1..k {
            m[(i, j)] = random_rational(rng);
        }
    }
    GroupElement::new(m).unwrap()
}

pub fn random_lower(rng: &mut ChaCha8Rng, k: usize) -> GroupElement<Q> {
    GroupElement::new(random_upper(rng, k).matrix().transpose()).unwrap()
}

/// Products `L·U·L'` cover a dense set of `SL(k)`.
pub fn random_sl(rng: &mut ChaCha8Rng, k: usize) -> GroupElement<Q> {
    random_lower(rng, k)
        .mul(&random_upper(rng, k))
        .unwrap()
        .mul(&random_lower(rng, k))
        .unwrap()
}

/// Base triples, bialgebra doubles and their 2- and 3-ubles.
pub fn repo_triples() -> Vec<ManinTriple> {
    let g: Algebra = sl_k(2, false).unwrap();
    let zero = HomLieAlgebra::abelian(3, M::identity(3)).unwrap();
    let cob = coboundary_dual(&g, &lambda_st(2).unwrap()).unwrap();
    let mut ts: Vec<ManinTriple> = vec![
        hyperbolic_plane(),
        triple_g_plus_h(2, false).unwrap(),
        triple_g_plus_h(2, true).unwrap(),
        triple_double(2, false).unwrap(),
        triple_double(2, true).unwrap(),
        double_from_bialgebra(&g, &zero).unwrap(),
        double_from_bialgebra(&g, &cob).unwrap(),
    ];
    let bases = ts.clone();
    for t in &bases[..3] {
        for n in 2..=3 {
            ts.push(nuble(t, n).unwrap());
        }
    }
    ts
}
