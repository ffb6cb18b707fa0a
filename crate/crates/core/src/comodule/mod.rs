//! Graded `P(1)_*`-comodules.
//!
//! A comodule over `P(1)_* = F_p[ξ_1]/(ξ_1^p)` is the same thing as a graded
//! `F_p`-vector space with an operator `θ` (the action of `P^1`) that raises
//! cohomological degree by `2n = 2(p-1)` and satisfies `θ^p = 0`. The
//! indecomposables are the cyclic modules `W_l`, `1 ≤ l ≤ p`, and every
//! finite module is a sum of shifted copies `Σ^s W_l`.
//!
//! Internally all gradings are cohomological: `θ` raises degree, and the
//! shift of a summand is the degree of its bottom class.

mod chern;
mod json;
mod y2p;

pub use chern::{orientable_chern_determined, power_sums_from_chern, Verdict};
pub use json::{ComoduleFile, GeneratorEntry, Grading, ThetaEntry};
pub use y2p::{y2p_comodule, y2p_linear_part, FlaggedSummand, Y2pModule};

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fp::{FpMatrix, Prime};
use crate::reps::{RepElement, Side};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Generator {
    pub id: String,
    pub degree: i64,
}

impl Generator {
    pub fn new(id: impl Into<String>, degree: i64) -> Self {
        Generator {
            id: id.into(),
            degree,
        }
    }
}

/// A finite graded `F_p`-space with a homogeneous nilpotent operator `θ` of degree `2(p-1)`.
///
/// `theta[(i, j)]` is the coefficient of generator `i` in `θ(generator j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedComodule {
    prime: Prime,
    generators: Vec<Generator>,
    theta: FpMatrix,
}

/// One shifted cyclic piece `Σ^shift W_length`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Summand {
    pub shift: i64,
    pub length: usize,
}

impl Summand {
    pub fn new(shift: i64, length: usize) -> Self {
        Summand { shift, length }
    }

    /// Degree of the top class.
    pub fn top(&self, prime: Prime) -> i64 {
        self.shift + prime.theta_degree() * (self.length as i64 - 1)
    }
}

/// A multiset of summands, kept sorted by shift and then length.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct SummandList(Vec<Summand>);

impl SummandList {
    pub fn new(mut summands: Vec<Summand>) -> Self {
        summands.sort_unstable();
        SummandList(summands)
    }

    pub fn from_pairs(pairs: &[(i64, usize)]) -> Self {
        Self::new(pairs.iter().map(|&(s, l)| Summand::new(s, l)).collect())
    }

    pub fn as_slice(&self) -> &[Summand] {
        &self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Summand> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total_dim(&self) -> usize {
        self.0.iter().map(|s| s.length).sum()
    }

    /// Multiset union.
    pub fn union(&self, other: &SummandList) -> SummandList {
        SummandList::new(self.0.iter().chain(&other.0).copied().collect())
    }

    pub fn shifted(&self, by: i64) -> SummandList {
        SummandList::new(
            self.0
                .iter()
                .map(|s| Summand::new(s.shift + by, s.length))
                .collect(),
        )
    }

    /// The ungraded class in the representation ring of `P(1)^*`.
    pub fn forget_shifts(&self, prime: Prime) -> Result<RepElement> {
        let lengths: Vec<usize> = self.0.iter().map(|s| s.length).collect();
        Ok(RepElement::from_blocks(prime, &lengths)?.with_side(Side::P1))
    }

    pub fn to_pairs(&self) -> Vec<(i64, usize)> {
        self.0.iter().map(|s| (s.shift, s.length)).collect()
    }

    pub fn validate(&self, prime: Prime) -> Result<()> {
        let p = prime.get() as usize;
        match self.0.iter().find(|s| s.length == 0 || s.length > p) {
            Some(s) => Err(Error::OutOfRange {
                what: "summand length",
                value: s.length as i64,
                lo: 1,
                hi: p as i64,
            }),
            None => Ok(()),
        }
    }
}

impl FromIterator<Summand> for SummandList {
    fn from_iter<I: IntoIterator<Item = Summand>>(iter: I) -> Self {
        SummandList::new(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a SummandList {
    type Item = &'a Summand;
    type IntoIter = std::slice::Iter<'a, Summand>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl fmt::Display for SummandList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ⊕ ")?;
            }
            if s.shift == 0 {
                write!(f, "W_{}", s.length)?;
            } else {
                write!(f, "Σ^{} W_{}", s.shift, s.length)?;
            }
        }
        Ok(())
    }
}

/// The action of `θ` split into its homogeneous pieces `M_d → M_{d+2n}`.
struct DegreeBlocks {
    step: i64,
    /// Generator indices in each degree.
    by_degree: BTreeMap<i64, Vec<usize>>,
    /// `θ` restricted to `M_d`, as a `dim M_{d+2n} × dim M_d` matrix.
    maps: BTreeMap<i64, FpMatrix>,
}

impl DegreeBlocks {
    fn new(m: &GradedComodule) -> Self {
        let step = m.prime.theta_degree();
        let mut by_degree: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
        for (i, g) in m.generators.iter().enumerate() {
            by_degree.entry(g.degree).or_default().push(i);
        }
        let maps = by_degree
            .iter()
            .filter_map(|(&d, src)| {
                let dst = by_degree.get(&(d + step))?;
                Some((d, m.theta.select(dst, src)))
            })
            .collect();
        DegreeBlocks {
            step,
            by_degree,
            maps,
        }
    }

    /// `rank(θ^k : M_d → M_{d+2nk})` for `k = 0..=max_power`.
    fn ranks_from(&self, d: i64, max_power: usize) -> Vec<usize> {
        let Some(src) = self.by_degree.get(&d) else {
            return vec![0; max_power + 1];
        };
        let mut ranks = vec![src.len()];
        let mut acc: Option<FpMatrix> = None;
        let mut deg = d;
        for _ in 0..max_power {
            let next = match (self.maps.get(&deg), &acc) {
                (Some(map), Some(a)) => Some(map * a),
                (Some(map), None) => Some(map.clone()),
                (None, _) => None,
            };
            match next {
                Some(m) if !m.is_zero() => {
                    ranks.push(m.rank());
                    acc = Some(m);
                }
                _ => {
                    ranks.resize(max_power + 1, 0);
                    return ranks;
                }
            }
            deg += self.step;
        }
        ranks
    }
}

impl GradedComodule {
    /// Validates homogeneity of `θ`, `θ^p = 0` and uniqueness of generator ids.
    pub fn new(prime: Prime, generators: Vec<Generator>, theta: FpMatrix) -> Result<Self> {
        let dim = generators.len();
        if theta.rows() != dim || theta.cols() != dim || theta.prime() != prime {
            return Err(Error::InvariantViolation(format!(
                "theta must be a {dim}x{dim} matrix over F_{prime}"
            )));
        }
        let mut seen = HashSet::new();
        if let Some(g) = generators.iter().find(|g| !seen.insert(g.id.as_str())) {
            return Err(Error::InvariantViolation(format!(
                "duplicate generator id `{}`",
                g.id
            )));
        }
        let step = prime.theta_degree();
        for j in 0..dim {
            for i in 0..dim {
                if theta.get(i, j) != 0 && generators[i].degree != generators[j].degree + step {
                    return Err(Error::InvariantViolation(format!(
                        "theta({}) has a component on {} but degrees {} -> {} differ by {}, not {step}",
                        generators[j].id,
                        generators[i].id,
                        generators[j].degree,
                        generators[i].degree,
                        generators[i].degree - generators[j].degree,
                    )));
                }
            }
        }
        let m = GradedComodule {
            prime,
            generators,
            theta,
        };
        let blocks = DegreeBlocks::new(&m);
        let p = prime.get() as usize;
        for &d in blocks.by_degree.keys() {
            if blocks.ranks_from(d, p)[p] != 0 {
                return Err(Error::InvariantViolation(format!(
                    "theta^{p} is nonzero on degree {d}"
                )));
            }
        }
        Ok(m)
    }

    /// Builds a module from sparse `θ` data: `(from, to, coefficient)` index triples.
    pub fn from_sparse(
        prime: Prime,
        generators: Vec<Generator>,
        entries: impl IntoIterator<Item = (usize, usize, i64)>,
    ) -> Result<Self> {
        let dim = generators.len();
        let mut theta = FpMatrix::zeros(prime, dim, dim);
        for (from, to, c) in entries {
            if from >= dim || to >= dim {
                return Err(Error::InvariantViolation(format!(
                    "theta entry ({from} -> {to}) refers to a missing generator"
                )));
            }
            theta.add_to(to, from, c);
        }
        Self::new(prime, generators, theta)
    }

    pub fn empty(prime: Prime) -> Self {
        GradedComodule {
            prime,
            generators: Vec::new(),
            theta: FpMatrix::zeros(prime, 0, 0),
        }
    }

    /// `Σ^shift W_length`, with basis `x0, .., x{l-1}` and `θ(x_k) = x_{k+1}`.
    pub fn cyclic(prime: Prime, length: usize, shift: i64) -> Result<Self> {
        let p = prime.get() as usize;
        if length == 0 || length > p {
            return Err(Error::OutOfRange {
                what: "length",
                value: length as i64,
                lo: 1,
                hi: p as i64,
            });
        }
        let step = prime.theta_degree();
        let gens = (0..length)
            .map(|k| Generator::new(format!("x{k}"), shift + step * k as i64))
            .collect();
        Self::from_sparse(prime, gens, (0..length - 1).map(|k| (k, k + 1, 1)))
    }

    /// The direct sum of cyclic models named by `summands`.
    pub fn from_summands(prime: Prime, summands: &SummandList) -> Result<Self> {
        summands.validate(prime)?;
        let parts = summands
            .iter()
            .map(|s| Self::cyclic(prime, s.length, s.shift))
            .collect::<Result<Vec<_>>>()?;
        Self::direct_sum(prime, &parts)
    }

    /// Direct sum; generator ids are prefixed with the summand index.
    pub fn direct_sum(prime: Prime, parts: &[GradedComodule]) -> Result<Self> {
        let mut gens = Vec::new();
        let mut entries = Vec::new();
        for (k, part) in parts.iter().enumerate() {
            if part.prime != prime {
                return Err(Error::InvariantViolation("primes differ".into()));
            }
            let offset = gens.len();
            gens.extend(
                part.generators
                    .iter()
                    .map(|g| Generator::new(format!("{k}.{}", g.id), g.degree)),
            );
            entries.extend(
                part.theta_entries()
                    .map(|(j, i, c)| (j + offset, i + offset, c)),
            );
        }
        Self::from_sparse(prime, gens, entries)
    }

    pub fn prime(&self) -> Prime {
        self.prime
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn theta(&self) -> &FpMatrix {
        &self.theta
    }

    pub fn dim(&self) -> usize {
        self.generators.len()
    }

    /// Nonzero `(from, to, coefficient)` entries of `θ`.
    pub fn theta_entries(&self) -> impl Iterator<Item = (usize, usize, i64)> + '_ {
        let dim = self.dim();
        (0..dim).flat_map(move |j| {
            (0..dim)
                .filter(move |&i| self.theta.get(i, j) != 0)
                .map(move |i| (j, i, self.theta.get(i, j) as i64))
        })
    }

    pub fn degrees(&self) -> impl Iterator<Item = i64> + '_ {
        self.generators.iter().map(|g| g.degree)
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.degrees().min()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.degrees().max()
    }

    /// Whether every generator degree is congruent mod `modulus`.
    pub fn is_sparse(&self, modulus: i64) -> bool {
        let mut residues = self.degrees().map(|d| d.rem_euclid(modulus));
        match residues.next() {
            Some(first) => residues.all(|r| r == first),
            None => true,
        }
    }

    pub fn dims_by_degree(&self) -> BTreeMap<i64, usize> {
        let mut dims = BTreeMap::new();
        for d in self.degrees() {
            *dims.entry(d).or_insert(0) += 1;
        }
        dims
    }

    /// For each degree `d`, the ranks of `θ^k` on `M_d` for `k = 0..=p`.
    pub fn rank_profile(&self) -> BTreeMap<i64, Vec<usize>> {
        let blocks = DegreeBlocks::new(self);
        let p = self.prime.get() as usize;
        blocks
            .by_degree
            .keys()
            .map(|&d| (d, blocks.ranks_from(d, p)))
            .collect()
    }

    /// Splits the module into shifted cyclic summands.
    ///
    /// The number of summands with bottom degree `s` and length at least `l` is
    /// `rank(θ^{l-1} on M_s) - rank(θ^l on M_{s-2n})`.
    pub fn decompose(&self) -> SummandList {
        let p = self.prime.get() as usize;
        let step = self.prime.theta_degree();
        let profile = self.rank_profile();
        let mut out = Vec::new();
        for (&s, ranks) in &profile {
            let below = profile.get(&(s - step));
            let at_least = |l: usize| -> usize {
                if l > p {
                    return 0;
                }
                ranks[l - 1] - below.map_or(0, |b| b[l])
            };
            for l in 1..=p {
                let exact = at_least(l) - at_least(l + 1);
                out.extend(std::iter::repeat_n(Summand::new(s, l), exact));
            }
        }
        SummandList::new(out)
    }

    /// Whether the cyclic model built from `summands` has the same dimension and
    /// the same rank of every power of `θ` in every degree as `self`.
    pub fn reconstructs(&self, summands: &SummandList) -> bool {
        match Self::from_summands(self.prime, summands) {
            Ok(model) => model.rank_profile() == self.rank_profile(),
            Err(_) => false,
        }
    }

    fn check_even(&self) -> Result<()> {
        match self.generators.iter().find(|g| g.degree % 2 != 0) {
            Some(g) => Err(Error::OddDegree(g.id.clone())),
            None => Ok(()),
        }
    }

    /// Relabels and reorders generators: generator `i` moves to position `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        let dim = self.dim();
        let mut gens = vec![Generator::new("", 0); dim];
        for (i, g) in self.generators.iter().enumerate() {
            gens[perm[i]] = g.clone();
        }
        let entries: Vec<_> = self
            .theta_entries()
            .map(|(j, i, c)| (perm[j], perm[i], c))
            .collect();
        Self::from_sparse(self.prime, gens, entries)
    }

    /// Conjugates `θ` by a degree-preserving invertible change of basis `g`:
    /// the new operator is `g θ g^{-1}` written in the same generators.
    pub fn conjugated(&self, g: &FpMatrix, g_inv: &FpMatrix) -> Result<Self> {
        let theta = &(g * &self.theta) * g_inv;
        Self::new(self.prime, self.generators.clone(), theta)
    }
}

/// `a ⊗ b` with `θ = θ_a ⊗ 1 + 1 ⊗ θ_b` (`P^1` is primitive).
pub fn tensor_comodule(a: &GradedComodule, b: &GradedComodule) -> Result<GradedComodule> {
    if a.prime != b.prime {
        return Err(Error::InvariantViolation("primes differ".into()));
    }
    a.check_even()?;
    b.check_even()?;
    let prime = a.prime;
    let gens = a
        .generators
        .iter()
        .flat_map(|x| {
            b.generators
                .iter()
                .map(move |y| Generator::new(format!("{}*{}", x.id, y.id), x.degree + y.degree))
        })
        .collect();
    let theta = &a.theta.kron(&FpMatrix::identity(prime, b.dim()))
        + &FpMatrix::identity(prime, a.dim()).kron(&b.theta);
    GradedComodule::new(prime, gens, theta)
}

/// `Sym^k m` for `k < p`: degree-`k` multisets of generators, `θ` acting as a derivation.
pub fn sym_comodule(m: &GradedComodule, k: usize) -> Result<GradedComodule> {
    let prime = m.prime;
    let p = prime.get() as usize;
    if k >= p {
        return Err(Error::OutOfRange {
            what: "symmetric power",
            value: k as i64,
            lo: 0,
            hi: p as i64 - 1,
        });
    }
    m.check_even()?;
    let basis = multisets(m.dim(), k);
    let index: HashMap<&[usize], usize> = basis
        .iter()
        .enumerate()
        .map(|(i, s)| (s.as_slice(), i))
        .collect();
    let gens = basis
        .iter()
        .map(|ms| {
            let id = if ms.is_empty() {
                "1".to_string()
            } else {
                ms.iter()
                    .map(|&i| m.generators[i].id.as_str())
                    .collect::<Vec<_>>()
                    .join("*")
            };
            Generator::new(id, ms.iter().map(|&i| m.generators[i].degree).sum())
        })
        .collect();
    let columns: Vec<Vec<(usize, i64)>> = (0..m.dim())
        .map(|j| {
            (0..m.dim())
                .filter(|&i| m.theta.get(i, j) != 0)
                .map(|i| (i, m.theta.get(i, j) as i64))
                .collect()
        })
        .collect();
    let mut entries = Vec::new();
    for (col, ms) in basis.iter().enumerate() {
        for slot in 0..ms.len() {
            // Each repeated factor is hit once per occurrence, which is the Leibniz rule.
            for &(target, c) in &columns[ms[slot]] {
                let mut image = ms.clone();
                image[slot] = target;
                image.sort_unstable();
                entries.push((col, index[image.as_slice()], c));
            }
        }
    }
    GradedComodule::from_sparse(prime, gens, entries)
}

/// Non-decreasing index sequences of length `k` drawn from `0..n`.
fn multisets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, k: usize, start: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == k {
            out.push(prefix.clone());
            return;
        }
        for i in start..n {
            prefix.push(i);
            go(n, k, i, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, k, 0, &mut Vec::with_capacity(k), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: u32) -> Prime {
        Prime::new(x).unwrap()
    }

    fn w(prime: Prime, l: usize) -> GradedComodule {
        GradedComodule::cyclic(prime, l, 0).unwrap()
    }

    #[test]
    fn cyclic_is_its_own_decomposition() {
        for l in 1..=5 {
            assert_eq!(w(p(5), l).decompose(), SummandList::from_pairs(&[(0, l)]));
        }
    }

    #[test]
    fn tensor_examples() {
        let q = p(5);
        let t = tensor_comodule(&w(q, 2), &w(q, 4)).unwrap();
        assert_eq!(t.decompose(), SummandList::from_pairs(&[(0, 5), (8, 3)]));
        let t = tensor_comodule(&w(q, 2), &w(q, 2)).unwrap();
        assert_eq!(t.decompose(), SummandList::from_pairs(&[(0, 3), (8, 1)]));
        let q = p(3);
        let t = tensor_comodule(&w(q, 2), &w(q, 2)).unwrap();
        assert_eq!(t.decompose(), SummandList::from_pairs(&[(0, 3), (4, 1)]));
    }

    #[test]
    fn tensor_unit() {
        let q = p(5);
        let m =
            GradedComodule::from_summands(q, &SummandList::from_pairs(&[(0, 2), (16, 5)])).unwrap();
        let t = tensor_comodule(&w(q, 1), &m).unwrap();
        assert_eq!(t.decompose(), m.decompose());
    }

    #[test]
    fn sym_examples() {
        let q = p(3);
        let s = sym_comodule(&w(q, 3), 2).unwrap();
        assert_eq!(s.decompose(), SummandList::from_pairs(&[(0, 3), (8, 3)]));
        let s = sym_comodule(&w(q, 2), 2).unwrap();
        assert_eq!(s.decompose(), SummandList::from_pairs(&[(0, 3)]));
        let s = sym_comodule(&w(q, 3), 0).unwrap();
        assert_eq!(s.decompose(), SummandList::from_pairs(&[(0, 1)]));
        assert!(matches!(
            sym_comodule(&w(q, 3), 3),
            Err(Error::OutOfRange { .. })
        ));
    }

    #[test]
    fn truncated_adams_summand_of_cp_infinity() {
        // x^{1+2j} in degree 2(1+2j), θ(x^m) = m x^{m+2}; the top class's image
        // falls outside the truncation.
        let q = p(3);
        let gens: Vec<_> = (0..6)
            .map(|j| Generator::new(format!("x^{}", 1 + 2 * j), 2 * (1 + 2 * j)))
            .collect();
        let entries = (0..5).map(|j| (j, j + 1, 1 + 2 * j as i64));
        let m = GradedComodule::from_sparse(q, gens, entries).unwrap();
        // Coefficients mod 3 are 1, 0, 2, 1, 0: the chain breaks after x^3 and x^9.
        assert_eq!(
            m.decompose(),
            SummandList::from_pairs(&[(2, 2), (10, 3), (22, 1)])
        );
    }

    #[test]
    fn rejects_inhomogeneous_theta() {
        let q = p(3);
        let gens = vec![Generator::new("a", 0), Generator::new("b", 2)];
        let err = GradedComodule::from_sparse(q, gens, [(0, 1, 1)]).unwrap_err();
        assert!(matches!(err, Error::InvariantViolation(_)));
    }

    #[test]
    fn rejects_non_nilpotent_chain() {
        // A chain of length p + 1 has θ^p ≠ 0.
        let q = p(3);
        let gens = (0..4)
            .map(|k| Generator::new(format!("x{k}"), 4 * k))
            .collect();
        let err = GradedComodule::from_sparse(q, gens, (0..3).map(|k| (k, k + 1, 1))).unwrap_err();
        assert!(matches!(err, Error::InvariantViolation(_)));
    }

    #[test]
    fn rejects_duplicate_ids() {
        let q = p(3);
        let gens = vec![Generator::new("a", 0), Generator::new("a", 4)];
        assert!(GradedComodule::from_sparse(q, gens, []).is_err());
    }

    #[test]
    fn odd_degrees_are_rejected_by_tensor() {
        let q = p(3);
        let odd = GradedComodule::from_sparse(q, vec![Generator::new("y", 1)], []).unwrap();
        assert_eq!(
            tensor_comodule(&odd, &w(q, 2)),
            Err(Error::OddDegree("y".into()))
        );
        assert_eq!(sym_comodule(&odd, 2), Err(Error::OddDegree("y".into())));
    }

    #[test]
    fn direct_sum_decomposes_to_union() {
        let q = p(5);
        let a = SummandList::from_pairs(&[(0, 2), (8, 5)]);
        let b = SummandList::from_pairs(&[(4, 1), (8, 5)]);
        let ma = GradedComodule::from_summands(q, &a).unwrap();
        let mb = GradedComodule::from_summands(q, &b).unwrap();
        let sum = GradedComodule::direct_sum(q, &[ma, mb]).unwrap();
        assert_eq!(sum.decompose(), a.union(&b));
    }

    #[test]
    fn empty_module() {
        let m = GradedComodule::empty(p(3));
        assert!(m.decompose().is_empty());
        assert!(m.reconstructs(&SummandList::default()));
        assert!(m.is_sparse(4));
    }

    #[test]
    fn display_and_forget() {
        let q = p(5);
        let s = SummandList::from_pairs(&[(8, 3), (0, 5)]);
        assert_eq!(s.to_string(), "W_5 ⊕ Σ^8 W_3");
        assert_eq!(s.forget_shifts(q).unwrap().to_string(), "W_3 ⊕ W_5");
    }
}
