//! Rank from row reduction against rank from nonvanishing minors.

mod common;

use eocalc::{FpMatrix, Prime};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Determinant by the Leibniz permutation expansion.
fn det(m: &[Vec<u32>], prime: Prime) -> u32 {
    let n = m.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = 0u32;
    permute(&mut perm, 0, &mut |sigma| {
        let mut term = 1u32;
        for (i, &j) in sigma.iter().enumerate() {
            term = prime.mul(term, m[i][j]);
        }
        let inversions = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| sigma[i] > sigma[j])
            .count();
        total = if inversions % 2 == 0 {
            prime.add(total, term)
        } else {
            prime.add(total, prime.neg(term))
        };
    });
    total
}

fn permute(v: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == v.len() {
        f(v);
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permute(v, k + 1, f);
        v.swap(k, i);
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect())
        .collect()
}

/// The largest `k` with a nonzero `k x k` minor.
fn minor_rank(m: &FpMatrix) -> usize {
    let prime = m.prime();
    for k in (1..=m.rows().min(m.cols())).rev() {
        for rows in subsets(m.rows(), k) {
            for cols in subsets(m.cols(), k) {
                let sub: Vec<Vec<u32>> = rows
                    .iter()
                    .map(|&i| cols.iter().map(|&j| m.get(i, j)).collect())
                    .collect();
                if det(&sub, prime) != 0 {
                    return k;
                }
            }
        }
    }
    0
}

fn is_rref(r: &FpMatrix, pivots: &[usize]) -> bool {
    pivots.windows(2).all(|w| w[0] < w[1])
        && pivots.iter().enumerate().all(|(i, &c)| {
            r.get(i, c) == 1
                && (0..r.rows()).all(|k| k == i || r.get(k, c) == 0)
                && (0..c).all(|j| r.get(i, j) == 0)
        })
        && (pivots.len()..r.rows()).all(|i| r.row(i).iter().all(|&x| x == 0))
}

#[test]
fn random_six_by_six_over_f7() {
    let prime = Prime::new(7).unwrap();
    let mut rng = StdRng::seed_from_u64(7);
    for trial in 0..60 {
        // Low-rank products make the lower-rank branches of the oracle fire too.
        let inner = rng.gen_range(1..=6);
        let a = common::random_matrix(&mut rng, prime, 6, inner);
        let b = common::random_matrix(&mut rng, prime, inner, 6);
        let m = if trial % 2 == 0 {
            common::random_matrix(&mut rng, prime, 6, 6)
        } else {
            &a * &b
        };
        let (r, pivots) = m.rref();
        assert!(is_rref(&r, &pivots), "trial {trial}");
        assert_eq!(pivots.len(), minor_rank(&m), "trial {trial}");
        assert_eq!(r.rank(), m.rank());
    }
}

#[test]
fn spec_examples() {
    let p5 = Prime::new(5).unwrap();
    let (r, piv) = FpMatrix::identity(p5, 3).rref();
    assert_eq!((r, piv), (FpMatrix::identity(p5, 3), vec![0, 1, 2]));
    let m = FpMatrix::from_rows(p5, &[[1, 2], [2, 4]]).unwrap();
    let (r, piv) = m.rref();
    assert_eq!(r, FpMatrix::from_rows(p5, &[[1, 2], [0, 0]]).unwrap());
    assert_eq!(piv, vec![0]);
}
