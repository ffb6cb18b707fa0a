use serde::{Deserialize, Serialize};

use super::GradedComodule;
use crate::fp::Prime;

/// Power sums `ψ_1, .., ψ_k` mod `p` from Chern classes `c_1, c_2, ..` (missing ones are 0).
///
/// Newton's identity: `ψ_m = c_1 ψ_{m-1} - c_2 ψ_{m-2} + .. + (-1)^{m-1} m c_m`.
pub fn power_sums_from_chern(cherns: &[i64], k: usize, prime: Prime) -> Vec<u32> {
    let c = |i: usize| cherns.get(i - 1).map_or(0, |&x| prime.reduce(x));
    let mut psi: Vec<u32> = Vec::with_capacity(k);
    for m in 1..=k {
        let mut acc: i64 = 0;
        for i in 1..m {
            let term = prime.mul(c(i), psi[m - i - 1]) as i64;
            acc += if i % 2 == 1 { term } else { -term };
        }
        let last = prime.mul(c(m), prime.reduce(m as i64)) as i64;
        acc += if m % 2 == 1 { last } else { -last };
        psi.push(prime.reduce(acc));
    }
    psi
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    Orientable,
    NotOrientable,
    /// The sparsity hypothesis fails, so no claim is made.
    Undetermined,
}

/// For a `(2p-2)`-sparse base, a bundle is `EO`-orientable exactly when `ψ_{p-1} ≡ 0 (mod p)`.
pub fn orientable_chern_determined(z: &GradedComodule, psi_top: u32) -> Verdict {
    let prime = z.prime();
    if !z.is_sparse(prime.theta_degree()) {
        Verdict::Undetermined
    } else if psi_top.is_multiple_of(prime.get()) {
        Verdict::Orientable
    } else {
        Verdict::NotOrientable
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comodule::{Generator, SummandList};

    fn p(x: u32) -> Prime {
        Prime::new(x).unwrap()
    }

    /// ψ_m as a polynomial identity, checked by expanding elementary symmetric
    /// functions of explicit roots.
    #[test]
    fn newton_matches_roots() {
        let q = p(7);
        let roots = [2i64, 3, 5, 6];
        let mut e = vec![1i64];
        for r in roots {
            let mut next = e.clone();
            next.push(0);
            for i in 1..next.len() {
                next[i] += e[i - 1] * r;
            }
            e = next;
        }
        let psi = power_sums_from_chern(&e[1..], 6, q);
        for (m, &got) in psi.iter().enumerate() {
            let direct: i64 = roots.iter().map(|r| r.pow(m as u32 + 1)).sum();
            assert_eq!(got, q.reduce(direct), "ψ_{}", m + 1);
        }
    }

    #[test]
    fn small_cases() {
        let q = p(5);
        assert_eq!(power_sums_from_chern(&[3], 1, q), vec![3]);
        // ψ_2 = c_1^2 - 2 c_2
        assert_eq!(power_sums_from_chern(&[0, 1], 2, q)[1], q.reduce(-2));
        // ψ_4 = -4 c_4 = c_4 mod 5
        assert_eq!(power_sums_from_chern(&[0, 0, 0, 2], 4, q)[3], 2);
        assert_eq!(power_sums_from_chern(&[], 3, q), vec![0, 0, 0]);
    }

    #[test]
    fn verdicts() {
        let q = p(5);
        let sparse =
            GradedComodule::from_summands(q, &SummandList::from_pairs(&[(0, 1), (8, 2)])).unwrap();
        assert_eq!(orientable_chern_determined(&sparse, 0), Verdict::Orientable);
        assert_eq!(
            orientable_chern_determined(&sparse, 2),
            Verdict::NotOrientable
        );
        let dense = GradedComodule::from_sparse(
            q,
            vec![Generator::new("a", 0), Generator::new("b", 2)],
            [],
        )
        .unwrap();
        assert_eq!(
            orientable_chern_determined(&dense, 0),
            Verdict::Undetermined
        );
    }
}
