//! The homotopy fixed point spectral sequence of `EO` in positive filtration.
//!
//! `E_2 = F_p[α, β, u^±]` with two generating differentials,
//! `d_{2n+1}(u) = αβ^n` and `d_{2n^2+1}(αu^n) = β^{n^2+1}`, extended by the
//! Leibniz rule. The zero line is represented only by the powers of `u`.

use super::{
    monomials_in, BigradedChart, ChartClass, ChartKind, ClassKey, Differential, Flag, Monomial,
    Shape,
};
use crate::error::{Error, Result};
use crate::fp::Prime;

/// The filtration shown by default: high enough that every target of a
/// differential leaving the region under the vanishing line is drawn.
pub fn default_max_filtration(prime: Prime) -> u32 {
    let n = prime.n() as u32;
    4 * n * n + 3
}

/// `d_{2n+1}` on `E_2`: the derivation with `d(u) = αβ^n` and `d(α) = d(β) = 0`.
///
/// Returns the coefficient and target monomial, or `None` when the image is zero.
pub fn first_differential(prime: Prime, m: &Monomial) -> Option<(u32, Monomial)> {
    let coeff = prime.reduce(m.c);
    if coeff == 0 {
        return None;
    }
    // d(u^c) = c u^{c-1} αβ^n; multiplying by α^eps β^b.
    let du = Monomial::new(1, prime.n() as u32, -1);
    let target = Monomial::new(m.eps, m.b, m.c).mul(&du)?;
    Some((coeff, target))
}

fn first_preimage(prime: Prime, m: &Monomial) -> Option<Monomial> {
    let n = prime.n() as u32;
    (m.eps == 1 && m.b >= n).then(|| Monomial::new(0, m.b - n, m.c + 1))
}

/// `d_{2n^2+1}` on `E_{2n+2}`, generated by `d(αu^n) = β^{n^2+1}` and linear over
/// `β` and the permanent cycle `u^p`.
pub fn second_differential(prime: Prime, m: &Monomial) -> Option<(u32, Monomial)> {
    let p = prime.get() as i64;
    let n = prime.n();
    (m.eps == 1 && m.c.rem_euclid(p) == n)
        .then(|| (1, Monomial::new(0, m.b + (n * n) as u32 + 1, m.c - n)))
}

fn second_preimage(prime: Prime, m: &Monomial) -> Option<Monomial> {
    let p = prime.get() as i64;
    let n = prime.n();
    let jump = (n * n) as u32 + 1;
    (m.eps == 0 && m.b >= jump && m.c.rem_euclid(p) == 0)
        .then(|| Monomial::new(1, m.b - jump, m.c + n))
}

type Rule = fn(Prime, &Monomial) -> Option<(u32, Monomial)>;
type Preimage = fn(Prime, &Monomial) -> Option<Monomial>;

struct Page {
    r: u32,
    d: Rule,
    preimage: Preimage,
}

fn pages(prime: Prime) -> [Page; 2] {
    let n = prime.n() as u32;
    [
        Page {
            r: 2 * n + 1,
            d: first_differential,
            preimage: first_preimage,
        },
        Page {
            r: 2 * n * n + 1,
            d: second_differential,
            preimage: second_preimage,
        },
    ]
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fate {
    Survives,
    Source { page: u32, target: Monomial },
    Target { page: u32, source: Monomial },
}

fn fate_before(prime: Prime, m: &Monomial, pages: &[Page]) -> Fate {
    for (k, page) in pages.iter().enumerate() {
        let alive = |x: &Monomial| fate_before(prime, x, &pages[..k]) == Fate::Survives;
        if let Some((coeff, target)) = (page.d)(prime, m) {
            if coeff != 0 && alive(&target) {
                return Fate::Source {
                    page: page.r,
                    target,
                };
            }
        }
        if let Some(source) = (page.preimage)(prime, m) {
            let hits = matches!((page.d)(prime, &source), Some((c, t)) if c != 0 && t == *m);
            if hits && alive(&source) {
                return Fate::Target {
                    page: page.r,
                    source,
                };
            }
        }
    }
    Fate::Survives
}

/// What happens to `m` in the spectral sequence.
pub fn hfpss_fate(prime: Prime, m: &Monomial) -> Fate {
    fate_before(prime, m, &pages(prime))
}

pub fn hfpss_run(prime: Prime, stem_lo: i64, stem_hi: i64) -> Result<BigradedChart> {
    hfpss_run_with(prime, stem_lo, stem_hi, default_max_filtration(prime))
}

/// The chart of `E_2` classes with stem in `stem_lo..=stem_hi` and filtration
/// at most `max_filtration`, with every differential touching one of them.
pub fn hfpss_run_with(
    prime: Prime,
    stem_lo: i64,
    stem_hi: i64,
    max_filtration: u32,
) -> Result<BigradedChart> {
    if stem_lo > stem_hi {
        return Err(Error::WindowEmpty {
            lo: stem_lo,
            hi: stem_hi,
        });
    }
    let in_chart = |m: &Monomial| {
        (stem_lo..=stem_hi).contains(&m.stem(prime)) && m.filtration() <= max_filtration
    };
    let mut classes = Vec::new();
    let mut differentials = Vec::new();
    // Sources one stem to the right may hit classes in the window.
    for m in monomials_in(prime, stem_lo, stem_hi + 1, max_filtration) {
        let fate = hfpss_fate(prime, &m);
        if let Fate::Source { page, target } = fate {
            if in_chart(&m) || in_chart(&target) {
                differentials.push(Differential {
                    page,
                    from: ClassKey::new(m, 0),
                    to: ClassKey::new(target, 0),
                });
            }
        }
        if in_chart(&m) {
            classes.push(ChartClass {
                key: ClassKey::new(m, 0),
                stem: m.stem(prime),
                filtration: m.filtration(),
                shape: if m.is_marker() {
                    Shape::Square
                } else {
                    Shape::Dot
                },
                flag: Flag::Unknown,
                survives: fate == Fate::Survives,
                upper_bound: false,
            });
        }
    }
    Ok(BigradedChart::new(
        prime,
        ChartKind::Hfpss,
        1,
        (stem_lo, stem_hi),
        max_filtration,
        classes,
        differentials,
    ))
}

#[cfg(test)]
mod tests {
    use std::collections::{BTreeMap, HashSet};

    use super::*;
    use crate::sseq::periodicity;

    fn p(x: u32) -> Prime {
        Prime::new(x).unwrap()
    }

    const P3_SURVIVORS: [(i64, u32); 8] = [
        (3, 1),
        (10, 2),
        (13, 3),
        (20, 4),
        (27, 1),
        (30, 6),
        (37, 3),
        (40, 8),
    ];

    #[test]
    fn chart_at_three() {
        let chart = hfpss_run(p(3), 0, 71).unwrap();
        assert_eq!(chart.positive_survivor_bidegrees(), P3_SURVIVORS);
        let squares: Vec<i64> = chart
            .displayed()
            .filter(|c| c.shape == Shape::Square)
            .map(|c| c.stem)
            .collect();
        assert_eq!(squares, [0, 24, 48]);
        let unit = chart.find(&ClassKey::new(Monomial::ONE, 0)).unwrap();
        assert!(unit.survives);
    }

    #[test]
    fn alpha_and_beta_at_five() {
        let chart = hfpss_run(p(5), 0, 100).unwrap();
        let s = chart.positive_survivor_bidegrees();
        assert!(s.contains(&(7, 1)) && s.contains(&(38, 2)));
    }

    /// `d(xy) = d(x) y + x d(y)`; the sign never matters because a nonzero
    /// `d` always contains `α` and `α^2 = 0`.
    #[test]
    fn first_differential_is_a_derivation() {
        for q in [3, 5, 7] {
            let q = p(q);
            let ms = monomials_in(q, -400, 400, 12);
            for x in ms.iter().step_by(3) {
                for y in ms.iter().step_by(5) {
                    let mut rhs: BTreeMap<Monomial, u32> = BTreeMap::new();
                    for (a, b) in [(x, y), (y, x)] {
                        if let Some((c, t)) = first_differential(q, a) {
                            if let Some(prod) = t.mul(b) {
                                let e = rhs.entry(prod).or_insert(0);
                                *e = q.add(*e, c);
                            }
                        }
                    }
                    rhs.retain(|_, c| *c != 0);
                    let lhs: BTreeMap<Monomial, u32> = x
                        .mul(y)
                        .and_then(|xy| first_differential(q, &xy))
                        .into_iter()
                        .map(|(c, t)| (t, c))
                        .collect();
                    assert_eq!(lhs, rhs, "x={x} y={y}");
                }
            }
        }
    }

    #[test]
    fn generating_differentials_have_the_right_bidegree() {
        for q in [3, 5, 7, 11, 13] {
            let q = p(q);
            let n = q.n() as u32;
            for (source, page, d) in [
                (Monomial::U, 2 * n + 1, first_differential as Rule),
                (
                    Monomial::new(1, 0, n as i64),
                    2 * n * n + 1,
                    second_differential as Rule,
                ),
            ] {
                let (_, target) = d(q, &source).unwrap();
                assert_eq!(target.stem(q), source.stem(q) - 1);
                assert_eq!(target.filtration(), source.filtration() + page);
            }
        }
    }

    #[test]
    fn survivors_respect_vanishing_line_and_periodicity() {
        for q in [3, 5, 7] {
            let q = p(q);
            let n = q.n() as u32;
            let per = periodicity(q);
            let chart = hfpss_run(q, 0, 2 * per - 1).unwrap();
            let mut by_stem: BTreeMap<i64, Vec<u32>> = BTreeMap::new();
            for c in chart.survivors() {
                assert!(c.filtration < 2 * n * n + 2);
                by_stem.entry(c.stem).or_default().push(c.filtration);
            }
            for s in 0..per {
                assert_eq!(by_stem.get(&s), by_stem.get(&(s + per)), "stem {s}");
            }
        }
    }

    #[test]
    fn survivors_and_differentials_partition_the_chart() {
        let chart = hfpss_run(p(3), -30, 100).unwrap();
        let ends: HashSet<ClassKey> = chart
            .differentials
            .iter()
            .flat_map(|d| [d.from, d.to])
            .collect();
        for c in &chart.classes {
            assert_ne!(c.survives, ends.contains(&c.key), "{:?}", c.key);
        }
        for d in &chart.differentials {
            assert_eq!(chart.stem_of(&d.to), chart.stem_of(&d.from) - 1);
            assert_eq!(d.to.mono.filtration(), d.from.mono.filtration() + d.page);
        }
    }

    #[test]
    fn empty_windows() {
        assert!(matches!(
            hfpss_run(p(3), 5, 4),
            Err(Error::WindowEmpty { .. })
        ));
        assert!(hfpss_run(p(3), 5, 5).unwrap().displayed().next().is_none());
    }
}
