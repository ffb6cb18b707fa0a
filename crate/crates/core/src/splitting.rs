//! Splitting `EO ∧ Z` into a wedge of `EO ∧ Σ^s X_l` from mod `p` homology.
//!
//! Every answer is a [`SummandList`] read as `⋁ Σ^s X_l`, tagged with the
//! [`Rule`] that licenses it. Only the first three rules give a statement
//! about the homotopy type of the whole of `EO ∧ Z`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::comodule::{sym_comodule, GradedComodule, Summand, SummandList};
use crate::error::{Error, Result};
use crate::fp::{FpMatrix, Prime};

/// Homology data of a spectrum `Z` together with the hypotheses we know about it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumSpec {
    comodule: GradedComodule,
    connective: bool,
    torsion_free: bool,
}

impl SpectrumSpec {
    pub fn new(comodule: GradedComodule, connective: bool, torsion_free: bool) -> Result<Self> {
        if connective {
            if let Some(g) = comodule.generators().iter().find(|g| g.degree < 0) {
                return Err(Error::InvariantViolation(format!(
                    "connective spectrum has generator `{}` in degree {}",
                    g.id, g.degree
                )));
            }
        }
        Ok(SpectrumSpec {
            comodule,
            connective,
            torsion_free,
        })
    }

    pub fn comodule(&self) -> &GradedComodule {
        &self.comodule
    }

    pub fn connective(&self) -> bool {
        self.connective
    }

    pub fn torsion_free(&self) -> bool {
        self.torsion_free
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Rule {
    /// All cells in one class mod `2p`: a wedge of suspensions of `EO`.
    TwoPSparse,
    /// Connective and all cells in one class mod `2n`.
    TwoNSparse,
    /// Torsion-free with cells in a range of width at most `2pn - 2`.
    SmallRange,
    /// Only the free `X_p` summands are split off.
    FreeSplitOff,
    Undetermined,
}

impl Rule {
    /// Whether the summands describe all of `EO ∧ Z`.
    pub fn is_complete(self) -> bool {
        matches!(self, Rule::TwoPSparse | Rule::TwoNSparse | Rule::SmallRange)
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplittingResult {
    pub rule: Rule,
    pub summands: SummandList,
    /// Summands of the homology that were not split off (free-split-off and undetermined only).
    pub remainder: SummandList,
}

#[derive(Serialize, Deserialize)]
struct SplittingJson {
    rule: Rule,
    summands: Vec<(i64, usize)>,
    remainder: Vec<(i64, usize)>,
}

impl SplittingResult {
    pub fn to_json(&self) -> String {
        let j = SplittingJson {
            rule: self.rule,
            summands: self.summands.to_pairs(),
            remainder: self.remainder.to_pairs(),
        };
        serde_json::to_string(&j).expect("splitting results always serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let j: SplittingJson =
            serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))?;
        Ok(SplittingResult {
            rule: j.rule,
            summands: SummandList::from_pairs(&j.summands),
            remainder: SummandList::from_pairs(&j.remainder),
        })
    }
}

fn check_length(l: usize, prime: Prime) -> Result<()> {
    let p = prime.get() as usize;
    if l == 0 || l > p {
        return Err(Error::OutOfRange {
            what: "length",
            value: l as i64,
            lo: 1,
            hi: p as i64,
        });
    }
    Ok(())
}

/// `H^*(X_l; F_p)`: classes `x_0, .., x_{l-1}` in degrees `0, 2n, .., 2n(l-1)`.
pub fn homology_of_xl(l: usize, prime: Prime) -> Result<GradedComodule> {
    GradedComodule::cyclic(prime, l, 0)
}

/// A representative of the action of the generator of `C_p` on `E_*(X_l)/m`:
/// upper triangular, `1` on the diagonal and `-1` just above it.
pub fn zeta_matrix(l: usize, prime: Prime) -> Result<FpMatrix> {
    check_length(l, prime)?;
    let mut z = FpMatrix::identity(prime, l);
    for i in 0..l.saturating_sub(1) {
        z.add_to(i, i + 1, -1);
    }
    Ok(z)
}

/// Applies the splitting rules in order and reports the first that fires.
pub fn split_spectrum(spec: &SpectrumSpec) -> SplittingResult {
    let m = &spec.comodule;
    let prime = m.prime();
    let p = prime.get() as i64;
    let n = prime.n();
    if m.is_sparse(2 * p) {
        // θ changes the class mod 2p, so it vanishes here.
        let summands = m.degrees().map(|d| Summand::new(d, 1)).collect();
        return complete(Rule::TwoPSparse, summands);
    }
    let summands = m.decompose();
    if spec.connective && m.is_sparse(2 * n) {
        return complete(Rule::TwoNSparse, summands);
    }
    let span = m.max_degree().unwrap_or(0) - m.min_degree().unwrap_or(0);
    if spec.torsion_free && span <= 2 * p * n - 2 {
        return complete(Rule::SmallRange, summands);
    }
    let (free, rest): (Vec<Summand>, Vec<Summand>) =
        summands.iter().partition(|s| s.length as i64 == p);
    SplittingResult {
        rule: if free.is_empty() {
            Rule::Undetermined
        } else {
            Rule::FreeSplitOff
        },
        summands: SummandList::new(free),
        remainder: SummandList::new(rest),
    }
}

fn complete(rule: Rule, summands: SummandList) -> SplittingResult {
    SplittingResult {
        rule,
        summands,
        remainder: SummandList::default(),
    }
}

/// `Σ^{sa} W_r ⊗ Σ^{sb} W_s` as a list of shifted cyclic pieces.
fn smash_pair(a: Summand, b: Summand, prime: Prime, out: &mut Vec<Summand>) {
    let p = prime.get() as usize;
    let step = prime.theta_degree();
    let (r, s) = if a.length <= b.length {
        (a.length, b.length)
    } else {
        (b.length, a.length)
    };
    let base = a.shift + b.shift;
    let c = if r + s <= p { r } else { p - s };
    for i in 1..=r {
        let shift = base + step * (r - i) as i64;
        let length = if i <= c { s - r + 2 * i - 1 } else { p };
        out.push(Summand::new(shift, length));
    }
}

/// The splitting of `EO ∧ X ∧ Y` from splittings of `EO ∧ X` and `EO ∧ Y`.
pub fn smash_splitting(a: &SummandList, b: &SummandList, prime: Prime) -> SummandList {
    let mut out = Vec::new();
    for &x in a {
        for &y in b {
            smash_pair(x, y, prime, &mut out);
        }
    }
    SummandList::new(out)
}

type SymCache = Mutex<HashMap<(u32, usize, usize), SummandList>>;

/// `Sym^j W_l` in its lowest grading, cached per prime.
fn sym_of_cyclic(l: usize, j: usize, prime: Prime) -> Result<SummandList> {
    static CACHE: OnceLock<SymCache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let key = (prime.get(), l, j);
    if let Some(hit) = cache.lock().expect("cache poisoned").get(&key) {
        return Ok(hit.clone());
    }
    let result = sym_comodule(&GradedComodule::cyclic(prime, l, 0)?, j)?.decompose();
    cache
        .lock()
        .expect("cache poisoned")
        .insert(key, result.clone());
    Ok(result)
}

/// `Sym^k` of a wedge of `Σ^s X_l`, expanded over the wedge summands:
/// `Sym^k(⊕ M_i) = ⊕_{Σ j_i = k} ⊗_i Sym^{j_i} M_i`.
pub fn sym_splitting(m: &SummandList, k: usize, prime: Prime) -> Result<SummandList> {
    let p = prime.get() as usize;
    if k >= p {
        return Err(Error::OutOfRange {
            what: "symmetric power",
            value: k as i64,
            lo: 0,
            hi: p as i64 - 1,
        });
    }
    m.validate(prime)?;
    if let Some(s) = m.iter().find(|s| s.shift % 2 != 0) {
        return Err(Error::OddDegree(format!("summand in degree {}", s.shift)));
    }
    let parts = m.as_slice();
    // partial[j] = Sym^j of the summands seen so far.
    let mut partial: Vec<SummandList> = (0..=k)
        .map(|j| {
            if j == 0 {
                SummandList::from_pairs(&[(0, 1)])
            } else {
                SummandList::default()
            }
        })
        .collect();
    for part in parts {
        let powers = (0..=k)
            .map(|j| Ok(sym_of_cyclic(part.length, j, prime)?.shifted(part.shift * j as i64)))
            .collect::<Result<Vec<_>>>()?;
        partial = (0..=k)
            .map(|total| {
                (0..=total).fold(SummandList::default(), |acc, j| {
                    acc.union(&smash_splitting(&partial[total - j], &powers[j], prime))
                })
            })
            .collect();
    }
    Ok(partial.swap_remove(k))
}
