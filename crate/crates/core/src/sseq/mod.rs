//! Spectral sequence charts for `EO` and `EO ∧ X_l`.
//!
//! Classes are monomials `α^ε β^b u^c` (times a cell `[x_i]` in the AHSS). Every
//! differential in scope sends a single monomial to a single monomial, and
//! distinct sources have distinct targets, so the pages can be computed on
//! the monomial basis directly without any linear algebra.

mod ahss;
mod chart;
mod flags;
mod hfpss;

pub use ahss::{ahss_run, ahss_run_with, AhssBase, AhssOptions};
pub use chart::{chart_emit, ChartFormat};
pub use flags::{hurewicz_flags, FlagOverride, FlagOverrides};
pub use hfpss::{
    default_max_filtration, first_differential, hfpss_fate, hfpss_run, hfpss_run_with,
    second_differential, Fate,
};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::fp::Prime;

/// `α^eps β^b u^c` in the `E_2` page `F_p[α, β, u^±]/(α^2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub eps: u8,
    pub b: u32,
    pub c: i64,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { eps: 0, b: 0, c: 0 };
    pub const ALPHA: Monomial = Monomial { eps: 1, b: 0, c: 0 };
    pub const BETA: Monomial = Monomial { eps: 0, b: 1, c: 0 };
    pub const U: Monomial = Monomial { eps: 0, b: 0, c: 1 };

    pub fn new(eps: u8, b: u32, c: i64) -> Self {
        debug_assert!(eps <= 1);
        Monomial { eps, b, c }
    }

    pub fn stem(&self, prime: Prime) -> i64 {
        let p = prime.get() as i64;
        let n = prime.n();
        self.eps as i64 * (2 * n - 1) + self.b as i64 * (2 * p * n - 2) + self.c * 2 * p * n * n
    }

    pub fn filtration(&self) -> u32 {
        self.eps as u32 + 2 * self.b
    }

    /// `None` when the product contains `α^2`.
    pub fn mul(&self, other: &Monomial) -> Option<Monomial> {
        (self.eps + other.eps <= 1)
            .then(|| Monomial::new(self.eps + other.eps, self.b + other.b, self.c + other.c))
    }

    /// A power of `u`, drawn on the zero line.
    pub fn is_marker(&self) -> bool {
        self.eps == 0 && self.b == 0
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self == Monomial::ONE {
            return write!(f, "1");
        }
        if self.eps == 1 {
            write!(f, "α")?;
        }
        match self.b {
            0 => {}
            1 => write!(f, "β")?,
            b => write!(f, "β^{b}")?,
        }
        match self.c {
            0 => {}
            1 => write!(f, "u")?,
            c => write!(f, "u^{c}")?,
        }
        Ok(())
    }
}

/// Which of `E_2`'s classes a chart entry is: a monomial on a cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassKey {
    pub mono: Monomial,
    pub cell: usize,
}

impl ClassKey {
    pub fn new(mono: Monomial, cell: usize) -> Self {
        ClassKey { mono, cell }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Flag {
    Filled,
    Open,
    /// Not decided by any rule or override; drawn filled with a mark.
    Unknown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Shape {
    Dot,
    Square,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ChartKind {
    Hfpss,
    Ahss,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChartClass {
    pub key: ClassKey,
    pub stem: i64,
    pub filtration: u32,
    pub shape: Shape,
    pub flag: Flag,
    /// Whether the class is a permanent cycle not hit by any differential.
    pub survives: bool,
    /// The class may still be killed by differentials the model cannot see.
    pub upper_bound: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Differential {
    pub page: u32,
    pub from: ClassKey,
    pub to: ClassKey,
}

/// Multiplication lines drawn between surviving classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LineKind {
    Alpha,
    Beta,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Line {
    pub kind: LineKind,
    pub from: ClassKey,
    pub to: ClassKey,
}

/// The `E_2` classes of a stem window up to a filtration cap, with their fates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BigradedChart {
    pub prime: Prime,
    pub kind: ChartKind,
    /// Number of cells; 1 for the homotopy fixed point spectral sequence.
    pub cells: usize,
    pub window: (i64, i64),
    pub max_filtration: u32,
    /// Sorted by stem, filtration, cell and monomial.
    pub classes: Vec<ChartClass>,
    /// Differentials with at least one end among `classes`, sorted.
    pub differentials: Vec<Differential>,
}

impl BigradedChart {
    pub(crate) fn new(
        prime: Prime,
        kind: ChartKind,
        cells: usize,
        window: (i64, i64),
        max_filtration: u32,
        mut classes: Vec<ChartClass>,
        mut differentials: Vec<Differential>,
    ) -> Self {
        classes.sort_by_key(|c| (c.stem, c.filtration, c.key.cell, c.key.mono));
        differentials.sort();
        BigradedChart {
            prime,
            kind,
            cells,
            window,
            max_filtration,
            classes,
            differentials,
        }
    }

    pub fn stem_of(&self, key: &ClassKey) -> i64 {
        key.mono.stem(self.prime) + self.prime.theta_degree() * key.cell as i64
    }

    pub fn in_window(&self, stem: i64) -> bool {
        (self.window.0..=self.window.1).contains(&stem)
    }

    pub fn find(&self, key: &ClassKey) -> Option<&ChartClass> {
        let stem = self.stem_of(key);
        let f = key.mono.filtration();
        let start = self
            .classes
            .partition_point(|c| (c.stem, c.filtration) < (stem, f));
        self.classes[start..]
            .iter()
            .take_while(|c| (c.stem, c.filtration) == (stem, f))
            .find(|c| c.key == *key)
    }

    pub fn survivors(&self) -> impl Iterator<Item = &ChartClass> {
        self.classes.iter().filter(|c| c.survives)
    }

    /// Survivors and all zero-line markers, which are always drawn.
    pub fn displayed(&self) -> impl Iterator<Item = &ChartClass> {
        self.classes
            .iter()
            .filter(|c| c.survives || c.shape == Shape::Square)
    }

    /// `(stem, filtration)` of every surviving class in positive filtration.
    pub fn positive_survivor_bidegrees(&self) -> Vec<(i64, u32)> {
        self.survivors()
            .filter(|c| c.filtration > 0)
            .map(|c| (c.stem, c.filtration))
            .collect()
    }

    /// `α` and `β` multiplications between surviving classes on the same cell.
    pub fn lines(&self) -> Vec<Line> {
        let mut out = Vec::new();
        for c in self.survivors() {
            for (kind, by) in [
                (LineKind::Alpha, Monomial::ALPHA),
                (LineKind::Beta, Monomial::BETA),
            ] {
                let Some(mono) = c.key.mono.mul(&by) else {
                    continue;
                };
                let to = ClassKey::new(mono, c.key.cell);
                if self.find(&to).is_some_and(|t| t.survives) {
                    out.push(Line {
                        kind,
                        from: c.key,
                        to,
                    });
                }
            }
        }
        out.sort();
        out
    }

    pub fn label(&self, key: &ClassKey) -> String {
        match self.kind {
            ChartKind::Hfpss => key.mono.to_string(),
            ChartKind::Ahss => format!("{}[x{}]", key.mono, key.cell),
        }
    }
}

/// `(stem, filtration)` of `α`, `β` and `u`.
pub fn generator_bidegrees(prime: Prime) -> [(i64, u32); 3] {
    [Monomial::ALPHA, Monomial::BETA, Monomial::U].map(|m| (m.stem(prime), m.filtration()))
}

/// The period `2p^2 n^2` coming from the permanent cycle `u^p`.
pub fn periodicity(prime: Prime) -> i64 {
    let p = prime.get() as i64;
    let n = prime.n();
    2 * p * p * n * n
}

/// Monomials with stem in `lo..=hi` and filtration at most `max_filtration`.
pub(crate) fn monomials_in(prime: Prime, lo: i64, hi: i64, max_filtration: u32) -> Vec<Monomial> {
    let period = Monomial::U.stem(prime);
    let mut out = Vec::new();
    for eps in 0..=1u8 {
        if eps as u32 > max_filtration {
            continue;
        }
        for b in 0..=(max_filtration - eps as u32) / 2 {
            let base = Monomial::new(eps, b, 0).stem(prime);
            let c_lo =
                (lo - base).div_euclid(period) + i64::from((lo - base).rem_euclid(period) != 0);
            let c_hi = (hi - base).div_euclid(period);
            out.extend((c_lo..=c_hi).map(|c| Monomial::new(eps, b, c)));
        }
    }
    out
}
