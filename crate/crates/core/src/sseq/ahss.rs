//! The algebraic Atiyah-Hirzebruch spectral sequence of `EO ∧ X_l`.
//!
//! `E_1` is a chosen base of `EO_*` classes tensored with the cells
//! `[x_0], .., [x_{l-1}]` in degrees `0, 2n, .., 2n(l-1)`. The attaching maps
//! give `d([x_{i+1}]) = α[x_i]`, extended over the base:
//!
//! - rule A: `d(θ[x_{i+1}]) = (θα)[x_i]`;
//! - rule B, for `l = p` only: `d((αθ)[x_{p-1}]) = (βθ)[x_0]`.
//!
//! A product that is not a base monomial counts as zero.

use super::{
    hfpss::{default_max_filtration, hfpss_fate, Fate},
    monomials_in, BigradedChart, ChartClass, ChartKind, ClassKey, Differential, Flag, Monomial,
    Shape,
};
use crate::error::{Error, Result};
use crate::fp::Prime;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum AhssBase {
    /// `E_∞` of the homotopy fixed point spectral sequence plus every power of `u`.
    #[default]
    Einfinity,
    /// All of `F_p[α, β, u]/(α^2)` with nonnegative powers of `u`, the page
    /// drawn in the usual chart of `EO ∧ X_3`.
    E2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AhssOptions {
    pub base: AhssBase,
    pub max_filtration: u32,
}

impl AhssOptions {
    pub fn new(prime: Prime) -> Self {
        AhssOptions {
            base: AhssBase::default(),
            max_filtration: default_max_filtration(prime),
        }
    }

    pub fn with_base(mut self, base: AhssBase) -> Self {
        self.base = base;
        self
    }
}

fn in_base(prime: Prime, base: AhssBase, m: &Monomial) -> bool {
    match base {
        AhssBase::Einfinity => m.is_marker() || hfpss_fate(prime, m) == Fate::Survives,
        AhssBase::E2 => m.c >= 0,
    }
}

struct Rules {
    prime: Prime,
    base: AhssBase,
    l: usize,
}

impl Rules {
    fn rule_a_page(&self) -> u32 {
        self.prime.theta_degree() as u32
    }

    fn rule_b_page(&self) -> u32 {
        self.rule_a_page() * (self.prime.get() - 1)
    }

    fn base(&self, m: &Monomial) -> bool {
        in_base(self.prime, self.base, m)
    }

    fn source_of(&self, key: &ClassKey) -> Option<(u32, ClassKey)> {
        let m = key.mono;
        if key.cell >= 1 {
            if let Some(t) = m.mul(&Monomial::ALPHA).filter(|t| self.base(t)) {
                return Some((self.rule_a_page(), ClassKey::new(t, key.cell - 1)));
            }
        }
        // α-multiples on the top cell are never touched by rule A.
        if self.l == self.prime.get() as usize && key.cell == self.l - 1 && m.eps == 1 {
            let theta = Monomial::new(0, m.b, m.c);
            if let Some(t) = theta.mul(&Monomial::BETA).filter(|t| self.base(t)) {
                return Some((self.rule_b_page(), ClassKey::new(t, 0)));
            }
        }
        None
    }

    fn target_of(&self, key: &ClassKey) -> Option<(u32, ClassKey)> {
        let m = key.mono;
        if m.eps == 1 && key.cell + 1 < self.l {
            let theta = Monomial::new(0, m.b, m.c);
            if self.base(&theta) {
                return Some((self.rule_a_page(), ClassKey::new(theta, key.cell + 1)));
            }
        }
        if self.l == self.prime.get() as usize && key.cell == 0 && m.eps == 0 && m.b >= 1 {
            let theta = Monomial::new(0, m.b - 1, m.c);
            if let Some(s) = theta.mul(&Monomial::ALPHA).filter(|s| self.base(s)) {
                return Some((self.rule_b_page(), ClassKey::new(s, self.l - 1)));
            }
        }
        None
    }
}

pub fn ahss_run(prime: Prime, l: usize, stem_lo: i64, stem_hi: i64) -> Result<BigradedChart> {
    ahss_run_with(prime, l, stem_lo, stem_hi, AhssOptions::new(prime))
}

pub fn ahss_run_with(
    prime: Prime,
    l: usize,
    stem_lo: i64,
    stem_hi: i64,
    options: AhssOptions,
) -> Result<BigradedChart> {
    let p = prime.get() as usize;
    if l == 0 || l > p {
        return Err(Error::OutOfRange {
            what: "cells",
            value: l as i64,
            lo: 1,
            hi: p as i64,
        });
    }
    if stem_lo > stem_hi {
        return Err(Error::WindowEmpty {
            lo: stem_lo,
            hi: stem_hi,
        });
    }
    let rules = Rules {
        prime,
        base: options.base,
        l,
    };
    let step = prime.theta_degree();
    let cap = options.max_filtration;
    let stem = |k: &ClassKey| k.mono.stem(prime) + step * k.cell as i64;
    let in_chart = |k: &ClassKey| {
        (stem_lo..=stem_hi).contains(&stem(k)) && k.mono.filtration() <= cap && rules.base(&k.mono)
    };
    let mut classes = Vec::new();
    let mut differentials = Vec::new();
    for cell in 0..l {
        let shift = step * cell as i64;
        for m in monomials_in(prime, stem_lo - shift, stem_hi + 1 - shift, cap) {
            if !rules.base(&m) {
                continue;
            }
            let key = ClassKey::new(m, cell);
            let source = rules.source_of(&key);
            if let Some((page, to)) = source {
                if in_chart(&key) || in_chart(&to) {
                    differentials.push(Differential {
                        page,
                        from: key,
                        to,
                    });
                }
            }
            if in_chart(&key) {
                let survives = source.is_none() && rules.target_of(&key).is_none();
                let s = stem(&key);
                classes.push(ChartClass {
                    key,
                    stem: s,
                    filtration: m.filtration(),
                    shape: if m.is_marker() {
                        Shape::Square
                    } else {
                        Shape::Dot
                    },
                    flag: Flag::Unknown,
                    survives,
                    upper_bound: l > 1 && (s + 1).rem_euclid(step) != 0,
                });
            }
        }
    }
    Ok(BigradedChart::new(
        prime,
        ChartKind::Ahss,
        l,
        (stem_lo, stem_hi),
        cap,
        classes,
        differentials,
    ))
}
