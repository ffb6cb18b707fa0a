//! Truncations of `H^*(Y_{2p}; F_p) = F_p[c_p, c_{p+n}, c_{p+2n}, ..]` with
//! `P^1(c_i) = (i+n) c_{i+n}`.

use std::collections::HashMap;

use super::{Generator, GradedComodule, Summand};
use crate::error::{Error, Result};
use crate::fp::Prime;

/// A summand together with whether it is known to be a complete summand of
/// the untruncated module.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FlaggedSummand {
    pub summand: Summand,
    /// `false` when the summand is shorter than `p` and `θ` of its top class
    /// would land above the truncation.
    pub complete: bool,
}

/// The polynomial algebra truncated at `max_degree`.
///
/// Elements above the cutoff form a sub-comodule, so the truncation is a
/// quotient and a summand whose top class maps into the kept range is a
/// genuine summand of the full module.
#[derive(Debug, Clone)]
pub struct Y2pModule {
    pub comodule: GradedComodule,
    pub max_degree: i64,
}

impl Y2pModule {
    pub fn flagged_summands(&self) -> Vec<FlaggedSummand> {
        let prime = self.comodule.prime();
        self.comodule
            .decompose()
            .iter()
            .map(|&summand| FlaggedSummand {
                summand,
                complete: summand.length == prime.get() as usize
                    || summand.top(prime) + prime.theta_degree() <= self.max_degree,
            })
            .collect()
    }
}

/// Indices `i` of the polynomial generators `c_i` with `2i ≤ max_degree`.
fn chern_indices(prime: Prime, max_degree: i64) -> Vec<i64> {
    let p = prime.get() as i64;
    let n = prime.n();
    (0..)
        .map(|k| p + k * n)
        .take_while(|&i| 2 * i <= max_degree)
        .collect()
}

fn check_degree(prime: Prime, max_degree: i64) -> Result<()> {
    if max_degree < 0 {
        return Err(Error::DegreeTooSmall {
            max_degree,
            min: 2 * prime.get() as i64,
        });
    }
    Ok(())
}

fn monomial_id(indices: &[i64], exps: &[u32]) -> String {
    let parts: Vec<String> = indices
        .iter()
        .zip(exps)
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| {
            if e == 1 {
                format!("c{i}")
            } else {
                format!("c{i}^{e}")
            }
        })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

/// Positive-degree monomials in the `c_i` up to `max_degree`, with `θ` extended
/// as a derivation. Below `2p` the module is empty.
pub fn y2p_comodule(prime: Prime, max_degree: i64) -> Result<Y2pModule> {
    check_degree(prime, max_degree)?;
    let indices = chern_indices(prime, max_degree);
    let degrees: Vec<i64> = indices.iter().map(|i| 2 * i).collect();
    let mut monos: Vec<Vec<u32>> = Vec::new();
    fn go(degrees: &[i64], budget: i64, k: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if k == degrees.len() {
            if cur.iter().any(|&e| e > 0) {
                out.push(cur.clone());
            }
            return;
        }
        let mut e = 0;
        while e as i64 * degrees[k] <= budget {
            cur[k] = e;
            go(degrees, budget - e as i64 * degrees[k], k + 1, cur, out);
            e += 1;
        }
        cur[k] = 0;
    }
    go(
        &degrees,
        max_degree,
        0,
        &mut vec![0; indices.len()],
        &mut monos,
    );
    monos.sort_by_key(|m| {
        let deg: i64 = m.iter().zip(&degrees).map(|(&e, d)| e as i64 * d).sum();
        (deg, std::cmp::Reverse(m.clone()))
    });
    let index: HashMap<&[u32], usize> = monos
        .iter()
        .enumerate()
        .map(|(i, m)| (m.as_slice(), i))
        .collect();
    let n = prime.n();
    let mut entries = Vec::new();
    for (col, m) in monos.iter().enumerate() {
        for (k, &e) in m.iter().enumerate() {
            // θ(c_i^e ..) ∋ e (i+n) c_i^{e-1} c_{i+n} ..; c_{i+n} is generator k+1.
            if e == 0 || k + 1 >= indices.len() {
                continue;
            }
            let coeff = e as i64 * (indices[k] + n);
            let mut image = m.clone();
            image[k] -= 1;
            image[k + 1] += 1;
            if let Some(&row) = index.get(image.as_slice()) {
                entries.push((col, row, coeff));
            }
        }
    }
    let gens = monos
        .iter()
        .map(|m| {
            let deg = m.iter().zip(&degrees).map(|(&e, d)| e as i64 * d).sum();
            Generator::new(monomial_id(&indices, m), deg)
        })
        .collect();
    Ok(Y2pModule {
        comodule: GradedComodule::from_sparse(prime, gens, entries)?,
        max_degree,
    })
}

/// The sub-comodule spanned by the generators `c_i` themselves.
pub fn y2p_linear_part(prime: Prime, max_degree: i64) -> Result<Y2pModule> {
    check_degree(prime, max_degree)?;
    let indices = chern_indices(prime, max_degree);
    let n = prime.n();
    let gens = indices
        .iter()
        .map(|&i| Generator::new(format!("c{i}"), 2 * i))
        .collect();
    let entries = (0..indices.len().saturating_sub(1)).map(|k| (k, k + 1, indices[k] + n));
    Ok(Y2pModule {
        comodule: GradedComodule::from_sparse(prime, gens, entries)?,
        max_degree,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comodule::SummandList;

    fn p(x: u32) -> Prime {
        Prime::new(x).unwrap()
    }

    #[test]
    fn linear_span_at_three() {
        // c_3, c_5, c_7 in degrees 6, 10, 14; θ(c_3) = 5 c_5 = 2 c_5, θ(c_5) = 7 c_7 = c_7.
        let lin = y2p_linear_part(p(3), 14).unwrap();
        assert_eq!(lin.comodule.dim(), 3);
        let theta = lin.comodule.theta();
        assert_eq!((theta.get(1, 0), theta.get(2, 1)), (2, 1));
        assert_eq!(lin.comodule.decompose(), SummandList::from_pairs(&[(6, 3)]));
        // The full truncation also sees c_3^2 in degree 12, whose image is cut off.
        let y = y2p_comodule(p(3), 14).unwrap();
        assert_eq!(
            y.comodule.decompose(),
            SummandList::from_pairs(&[(6, 3), (12, 1)])
        );
        let flags = y.flagged_summands();
        assert!(flags[0].complete && !flags[1].complete);
    }

    #[test]
    fn below_connectivity_is_empty() {
        assert_eq!(y2p_comodule(p(3), 4).unwrap().comodule.dim(), 0);
        assert!(matches!(
            y2p_comodule(p(3), -2),
            Err(Error::DegreeTooSmall { .. })
        ));
    }

    #[test]
    fn trivial_summands_sit_in_degrees_divisible_by_2p() {
        let y = y2p_comodule(p(3), 20).unwrap();
        for f in y.flagged_summands().into_iter().filter(|f| f.complete) {
            if f.summand.length < 3 {
                assert_eq!(f.summand.length, 1);
                assert_eq!(f.summand.shift % 6, 0, "{:?}", f.summand);
            }
        }
    }

    #[test]
    fn monomial_ids() {
        let y = y2p_comodule(p(3), 12).unwrap();
        let ids: Vec<_> = y
            .comodule
            .generators()
            .iter()
            .map(|g| g.id.as_str())
            .collect();
        assert_eq!(ids, ["c3", "c5", "c3^2"]);
    }
}
