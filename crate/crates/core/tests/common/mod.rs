//! Random valid comodules for property tests and the acceptance run.
#![allow(dead_code)]

use eocalc::comodule::{GradedComodule, Summand, SummandList};
use eocalc::{FpMatrix, Prime};
use rand::seq::SliceRandom;
use rand::Rng;

/// Inverse by row reduction of `[m | I]`.
pub fn invert(m: &FpMatrix) -> Option<FpMatrix> {
    let prime = m.prime();
    let n = m.rows();
    let mut aug = FpMatrix::zeros(prime, n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            aug.set(i, j, m.get(i, j));
        }
        aug.set(i, n + i, 1);
    }
    let (r, pivots) = aug.rref();
    if !pivots.iter().copied().take(n).eq(0..n) {
        return None;
    }
    let rows: Vec<usize> = (0..n).collect();
    let cols: Vec<usize> = (n..2 * n).collect();
    Some(r.select(&rows, &cols))
}

pub fn random_matrix(rng: &mut impl Rng, prime: Prime, rows: usize, cols: usize) -> FpMatrix {
    let mut m = FpMatrix::zeros(prime, rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            m.set(i, j, rng.gen_range(0..prime.get()));
        }
    }
    m
}

pub fn random_invertible(rng: &mut impl Rng, prime: Prime, n: usize) -> (FpMatrix, FpMatrix) {
    loop {
        let g = random_matrix(rng, prime, n, n);
        if let Some(inv) = invert(&g) {
            return (g, inv);
        }
    }
}

/// Up to `max_summands` summands with even shifts in `0..=span`.
pub fn random_summands(
    rng: &mut impl Rng,
    prime: Prime,
    max_summands: usize,
    span: i64,
) -> SummandList {
    let p = prime.get() as usize;
    let count = rng.gen_range(0..=max_summands);
    (0..count)
        .map(|_| Summand::new(2 * rng.gen_range(0..=span / 2), rng.gen_range(1..=p)))
        .collect()
}

/// A degree-preserving change of basis `g` with its inverse.
pub fn random_graded_basis_change(rng: &mut impl Rng, m: &GradedComodule) -> (FpMatrix, FpMatrix) {
    let prime = m.prime();
    let dim = m.dim();
    let mut g = FpMatrix::zeros(prime, dim, dim);
    let mut g_inv = FpMatrix::zeros(prime, dim, dim);
    for d in m.dims_by_degree().keys() {
        let idx: Vec<usize> = (0..dim)
            .filter(|&i| m.generators()[i].degree == *d)
            .collect();
        let (b, b_inv) = random_invertible(rng, prime, idx.len());
        for (a, &i) in idx.iter().enumerate() {
            for (c, &j) in idx.iter().enumerate() {
                g.set(i, j, b.get(a, c));
                g_inv.set(i, j, b_inv.get(a, c));
            }
        }
    }
    (g, g_inv)
}

pub fn random_permutation(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    perm
}

/// A module isomorphic to a random sum of shifted cyclics, written in a
/// scrambled homogeneous basis. Returns the summands it was built from.
pub fn random_comodule(
    rng: &mut impl Rng,
    prime: Prime,
    max_summands: usize,
    span: i64,
) -> (GradedComodule, SummandList) {
    let summands = random_summands(rng, prime, max_summands, span);
    let model = GradedComodule::from_summands(prime, &summands).expect("valid summands");
    let (g, g_inv) = random_graded_basis_change(rng, &model);
    let m = model
        .conjugated(&g, &g_inv)
        .expect("conjugation preserves validity");
    let perm = random_permutation(rng, m.dim());
    (m.permuted(&perm).expect("valid permutation"), summands)
}
