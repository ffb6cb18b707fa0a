//! The representation ring of `F_p[C_p]` and its `P(1)` twin.
//!
//! `F_p[C_p] ≅ F_p[s]/(s^p)` via `ζ ↦ s + 1`, so a module is a vector space
//! with a nilpotent operator and its indecomposables `V_1, .., V_p` are the
//! Jordan blocks. Each decomposition here comes in two flavours: a closed
//! formula and an explicit matrix computation that serves as its oracle.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use crate::error::{Error, Result};
use crate::fp::{FpMatrix, Prime};
use crate::mu_ring::{mu_to_rep, MuRing, MuRingElement};

/// Which category the multiplicities refer to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Side {
    /// Modules over the group algebra; indecomposables written `V_l`.
    #[default]
    CyclicGroup,
    /// Modules over `P(1)^*`; indecomposables written `W_l`.
    P1,
}

/// A (possibly virtual) sum `⊕ V_l^{⊕a_l}`, stored as `(a_1, .., a_p)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RepElement {
    prime: Prime,
    side: Side,
    mults: Vec<i64>,
}

impl RepElement {
    pub fn zero(prime: Prime) -> Self {
        RepElement {
            prime,
            side: Side::CyclicGroup,
            mults: vec![0; prime.get() as usize],
        }
    }

    pub fn indecomposable(prime: Prime, l: usize) -> Result<Self> {
        check_length(prime, l)?;
        let mut x = Self::zero(prime);
        x.mults[l - 1] = 1;
        Ok(x)
    }

    pub fn from_mults(prime: Prime, mults: Vec<i64>) -> Result<Self> {
        if mults.len() != prime.get() as usize {
            return Err(Error::DimensionMismatch(format!(
                "expected {} multiplicities, got {}",
                prime,
                mults.len()
            )));
        }
        Ok(RepElement {
            prime,
            side: Side::CyclicGroup,
            mults,
        })
    }

    /// Counts block lengths, e.g. `[1, 3, 3]` is `V_1 ⊕ V_3^{⊕2}`.
    pub fn from_blocks(prime: Prime, blocks: &[usize]) -> Result<Self> {
        let mut x = Self::zero(prime);
        for &l in blocks {
            check_length(prime, l)?;
            x.mults[l - 1] += 1;
        }
        Ok(x)
    }

    pub fn prime(&self) -> Prime {
        self.prime
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn with_side(mut self, side: Side) -> Self {
        self.side = side;
        self
    }

    pub fn mults(&self) -> &[i64] {
        &self.mults
    }

    /// Multiplicity of the length-`l` indecomposable.
    pub fn mult(&self, l: usize) -> i64 {
        self.mults[l - 1]
    }

    /// Nonzero `(length, multiplicity)` pairs in increasing length.
    pub fn terms(&self) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.mults
            .iter()
            .enumerate()
            .filter(|(_, &a)| a != 0)
            .map(|(i, &a)| (i + 1, a))
    }

    pub fn dim(&self) -> i64 {
        self.terms().map(|(l, a)| l as i64 * a).sum()
    }

    /// True when every multiplicity is nonnegative.
    pub fn is_actual(&self) -> bool {
        self.mults.iter().all(|&a| a >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.mults.iter().all(|&a| a == 0)
    }

    pub fn add_copies(&mut self, l: usize, count: i64) {
        self.mults[l - 1] += count;
    }

    pub fn scale(&self, c: i64) -> Self {
        let mut x = self.clone();
        x.mults.iter_mut().for_each(|a| *a *= c);
        x
    }

    /// Rejects virtual elements; used on decomposition outputs.
    pub fn validate_actual(&self) -> Result<()> {
        if self.is_actual() {
            Ok(())
        } else {
            Err(Error::InvariantViolation(format!(
                "decomposition has a negative multiplicity: {self}"
            )))
        }
    }
}

fn check_length(prime: Prime, l: usize) -> Result<()> {
    let p = prime.get() as i64;
    if l == 0 || l as i64 > p {
        return Err(Error::OutOfRange {
            what: "length",
            value: l as i64,
            lo: 1,
            hi: p,
        });
    }
    Ok(())
}

impl Add for &RepElement {
    type Output = RepElement;
    fn add(self, rhs: &RepElement) -> RepElement {
        assert_eq!(self.prime, rhs.prime);
        let mut x = self.clone();
        x.mults
            .iter_mut()
            .zip(&rhs.mults)
            .for_each(|(a, b)| *a += b);
        x
    }
}

impl Sub for &RepElement {
    type Output = RepElement;
    fn sub(self, rhs: &RepElement) -> RepElement {
        self + &rhs.scale(-1)
    }
}

/// The ring product, extended bilinearly from [`tensor_rep`].
impl Mul for &RepElement {
    type Output = RepElement;
    fn mul(self, rhs: &RepElement) -> RepElement {
        assert_eq!(self.prime, rhs.prime);
        let mut out = RepElement::zero(self.prime).with_side(self.side);
        for (r, a) in self.terms() {
            for (s, b) in rhs.terms() {
                let t = tensor_rep(r, s, self.prime).expect("lengths are in range");
                out = &out + &t.scale(a * b);
            }
        }
        out
    }
}

impl fmt::Display for RepElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letter = match self.side {
            Side::CyclicGroup => 'V',
            Side::P1 => 'W',
        };
        let mut first = true;
        for (l, a) in self.terms() {
            let sep = match (first, a < 0) {
                (true, false) => "",
                (true, true) => "-",
                (false, false) => " ⊕ ",
                (false, true) => " ⊖ ",
            };
            write!(f, "{sep}{letter}_{l}")?;
            if a.abs() != 1 {
                write!(f, "^{{⊕{}}}", a.abs())?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for RepElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} (p = {})", self.prime)
    }
}

/// The unipotent generator `ζ = I + N` acting on `V_l`, with `N e_i = e_{i+1}`.
pub fn unipotent(prime: Prime, l: usize) -> Result<FpMatrix> {
    check_length(prime, l)?;
    let mut z = FpMatrix::identity(prime, l);
    for i in 0..l - 1 {
        z.set(i + 1, i, 1);
    }
    Ok(z)
}

/// The closed tensor product formula for `V_r ⊗ V_s`.
///
/// With `r ≤ s` and `c = r` if `r + s ≤ p`, else `c = p - s`, the product is
/// `V_p^{⊕(r-c)} ⊕ V_{s-r+1} ⊕ V_{s-r+3} ⊕ .. ⊕ V_{s-r+2c-1}`.
pub fn tensor_rep(r: usize, s: usize, prime: Prime) -> Result<RepElement> {
    check_length(prime, r)?;
    check_length(prime, s)?;
    let p = prime.get() as usize;
    let (r, s) = (r.min(s), r.max(s));
    let c = if r + s <= p { r } else { p - s };
    let mut x = RepElement::zero(prime);
    x.add_copies(p, (r - c) as i64);
    for i in 1..=c {
        x.add_copies(s - r + 2 * i - 1, 1);
    }
    Ok(x)
}

/// Decomposes `V_r ⊗ V_s` from the Jordan type of `ζ_r ⊗ ζ_s - I`.
pub fn tensor_rep_brute(r: usize, s: usize, prime: Prime) -> Result<RepElement> {
    let zr = unipotent(prime, r)?;
    let zs = unipotent(prime, s)?;
    let prod = zr.kron(&zs);
    let n = &prod - &FpMatrix::identity(prime, r * s);
    RepElement::from_blocks(prime, &n.nilpotent_block_sizes()?)
}

/// `C(n, k)` as an exact integer.
pub fn binomial(n: u64, k: u64) -> Result<u128> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.checked_mul((n - i) as u128).ok_or(Error::OutOfRange {
            what: "binomial coefficient",
            value: n as i64,
            lo: 0,
            hi: i64::MAX,
        })? / (i + 1) as u128;
    }
    Ok(acc)
}

/// `dim Sym^k V_l = C(k + l - 1, l - 1)`.
pub fn sym_dim(l: usize, k: u64) -> Result<u128> {
    binomial(k + l as u64 - 1, l as u64 - 1)
}

/// Coefficients of `t^0, .., t^{p-1}` in `∏_{j<l} (1 - μ^{l-1-2j} t)^{-1}`.
pub fn sym_generating_function(l: usize, prime: Prime) -> Result<Vec<MuRingElement>> {
    check_length(prime, l)?;
    let ring = MuRing::for_prime(prime);
    let terms = prime.get() as usize;
    let mut series = vec![ring.zero(); terms];
    series[0] = ring.one();
    for j in 0..l {
        let weight = ring.mu_pow(l as i64 - 1 - 2 * j as i64);
        // Multiplying by the geometric series in (weight · t) is the recurrence
        // a_k ← a_k + weight · a_{k-1}, run in increasing k.
        for k in 1..terms {
            let shifted = &weight * &series[k - 1];
            series[k] = &series[k] + &shifted;
        }
    }
    Ok(series)
}

/// `Sym^k V_l`: generating function below `p`, periodicity at and above it.
pub fn sym_power(l: usize, k: u64, prime: Prime) -> Result<RepElement> {
    check_length(prime, l)?;
    let p = prime.get() as u64;
    let base = k % p;
    let mut x = mu_to_rep(&sym_generating_function(l, prime)?[base as usize])?;
    x.validate_actual()?;
    // Sym^{m+p} V_l = Sym^m V_l ⊕ V_p^{⊕d}, d read off from dimensions.
    let mut m = base;
    while m < k {
        let grow = sym_dim(l, m + p)? - sym_dim(l, m)?;
        if grow % p as u128 != 0 {
            return Err(Error::InvariantViolation(format!(
                "dimension jump {grow} from Sym^{m} to Sym^{} of V_{l} is not a multiple of {p}",
                m + p
            )));
        }
        let d = i64::try_from(grow / p as u128).map_err(|_| Error::OutOfRange {
            what: "free multiplicity",
            value: i64::MAX,
            lo: 0,
            hi: i64::MAX,
        })?;
        x.add_copies(p as usize, d);
        m += p;
    }
    Ok(x)
}

/// The size guard for the dense brute-force symmetric power oracle.
pub const SYM_BRUTE_LIMIT: usize = 5000;

/// Exponent vectors of the degree-`k` monomials in `l` variables, in lexicographic order.
pub fn monomials(l: usize, k: usize) -> Vec<Vec<u16>> {
    fn go(l: usize, k: usize, prefix: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
        if prefix.len() + 1 == l {
            prefix.push(k as u16);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for a in (0..=k).rev() {
            prefix.push(a as u16);
            go(l, k - a, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if l == 0 {
        if k == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(l, k, &mut Vec::with_capacity(l), &mut out);
    out
}

/// Decomposes `Sym^k V_l` from the induced action of `ζ` on degree-`k` monomials.
pub fn sym_power_brute(l: usize, k: usize, prime: Prime) -> Result<RepElement> {
    let zeta = unipotent(prime, l)?;
    let dim = sym_dim(l, k as u64)?;
    if dim > SYM_BRUTE_LIMIT as u128 {
        return Err(Error::TooLarge {
            size: usize::try_from(dim).unwrap_or(usize::MAX),
            limit: SYM_BRUTE_LIMIT,
        });
    }
    let basis = monomials(l, k);
    let index: HashMap<&[u16], usize> = basis
        .iter()
        .enumerate()
        .map(|(i, m)| (m.as_slice(), i))
        .collect();
    // ζ(e_i) as a linear form.
    let images: Vec<Vec<(usize, u32)>> = (0..l)
        .map(|i| {
            (0..l)
                .filter(|&j| zeta.get(j, i) != 0)
                .map(|j| (j, zeta.get(j, i)))
                .collect()
        })
        .collect();
    let mut action = FpMatrix::zeros(prime, basis.len(), basis.len());
    for (col, mono) in basis.iter().enumerate() {
        let mut poly: HashMap<Vec<u16>, u32> = HashMap::from([(vec![0u16; l], 1)]);
        for (var, &exp) in mono.iter().enumerate() {
            for _ in 0..exp {
                let mut next: HashMap<Vec<u16>, u32> = HashMap::new();
                for (m, &c) in &poly {
                    for &(j, a) in &images[var] {
                        let mut m2 = m.clone();
                        m2[j] += 1;
                        let e = next.entry(m2).or_insert(0);
                        *e = prime.add(*e, prime.mul(c, a));
                    }
                }
                next.retain(|_, c| *c != 0);
                poly = next;
            }
        }
        for (m, c) in poly {
            action.set(index[m.as_slice()], col, c);
        }
    }
    let n = &action - &FpMatrix::identity(prime, basis.len());
    RepElement::from_blocks(prime, &n.nilpotent_block_sizes()?)
}

/// Re-reads a group-side element on the `P(1)^*` side, `V_l ↦ W_l`.
pub fn phi_iso(x: &RepElement) -> RepElement {
    x.clone().with_side(Side::P1)
}

/// Jordan type of `t` on `U_2 ⊗ U_2` for the deformed coproduct
/// `Δ_q(t) = t ⊗ 1 + 1 ⊗ t + q t ⊗ t`, where `U_2` has `t(x_1) = x_2`.
pub fn aq_tensor_square_blocks(prime: Prime, q: u32) -> Vec<usize> {
    let mut t = FpMatrix::zeros(prime, 2, 2);
    t.set(1, 0, 1);
    let id = FpMatrix::identity(prime, 2);
    let op = &(&t.kron(&id) + &id.kron(&t)) + &t.kron(&t).scale(prime.reduce(q as i64));
    op.nilpotent_block_sizes()
        .expect("the deformed tensor square of t is nilpotent")
}

/// Whether `U_2 ⊗ U_2 ≅ U_1 ⊕ U_3` for the specialization at `q`.
pub fn aq_tensor_square_check(prime: Prime, q: u32) -> bool {
    aq_tensor_square_blocks(prime, q) == [1, 3]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: u32) -> Prime {
        Prime::new(x).unwrap()
    }

    fn v(prime: Prime, mults: &[i64]) -> RepElement {
        RepElement::from_mults(prime, mults.to_vec()).unwrap()
    }

    #[test]
    fn tensor_examples() {
        assert_eq!(tensor_rep(2, 2, p(5)).unwrap(), v(p(5), &[1, 0, 1, 0, 0]));
        assert_eq!(tensor_rep(2, 4, p(5)).unwrap(), v(p(5), &[0, 0, 1, 0, 1]));
        assert_eq!(
            tensor_rep_brute(2, 4, p(5)).unwrap(),
            v(p(5), &[0, 0, 1, 0, 1])
        );
        for l in 1..=7 {
            let vl = RepElement::indecomposable(p(7), l).unwrap();
            assert_eq!(tensor_rep(1, l, p(7)).unwrap(), vl);
        }
    }

    #[test]
    fn brute_tensor_small() {
        assert_eq!(tensor_rep_brute(1, 1, p(3)).unwrap(), v(p(3), &[1, 0, 0]));
        assert_eq!(tensor_rep_brute(2, 2, p(3)).unwrap(), v(p(3), &[1, 0, 1]));
    }

    #[test]
    fn tensor_range_errors() {
        assert!(matches!(
            tensor_rep(0, 2, p(3)),
            Err(Error::OutOfRange { .. })
        ));
        assert!(matches!(
            tensor_rep(2, 4, p(3)),
            Err(Error::OutOfRange { .. })
        ));
        assert!(matches!(
            tensor_rep_brute(4, 1, p(3)),
            Err(Error::OutOfRange { .. })
        ));
    }

    #[test]
    fn tensor_is_symmetric() {
        let q = p(7);
        for r in 1..=7 {
            for s in 1..=7 {
                assert_eq!(tensor_rep(r, s, q).unwrap(), tensor_rep(s, r, q).unwrap());
            }
        }
    }

    #[test]
    fn sym_examples() {
        let q = p(3);
        assert_eq!(sym_power(2, 2, q).unwrap(), v(q, &[0, 0, 1]));
        assert_eq!(sym_power_brute(2, 2, q).unwrap(), v(q, &[0, 0, 1]));
        assert_eq!(sym_power_brute(3, 3, q).unwrap(), v(q, &[1, 0, 3]));
        assert_eq!(sym_power_brute(3, 2, q).unwrap(), v(q, &[0, 0, 2]));
        assert_eq!(sym_power_brute(2, 0, q).unwrap(), v(q, &[1, 0, 0]));
        assert_eq!(sym_power(1, 7, q).unwrap(), v(q, &[1, 0, 0]));
        for l in 1..=3 {
            assert_eq!(
                sym_power(l, 1, q).unwrap(),
                RepElement::indecomposable(q, l).unwrap()
            );
        }
    }

    #[test]
    fn sym_five_five() {
        // dim C(9, 4) = 126 = 1 + 25 * 5
        let q = p(5);
        assert_eq!(sym_power(5, 5, q).unwrap(), v(q, &[1, 0, 0, 0, 25]));
    }

    #[test]
    fn brute_guard() {
        assert!(matches!(
            sym_power_brute(7, 20, p(7)),
            Err(Error::TooLarge {
                limit: SYM_BRUTE_LIMIT,
                ..
            })
        ));
    }

    #[test]
    fn monomial_counts() {
        assert_eq!(monomials(3, 2).len(), 6);
        assert_eq!(monomials(1, 4), vec![vec![4]]);
        assert_eq!(monomials(4, 0), vec![vec![0, 0, 0, 0]]);
        assert_eq!(binomial(9, 4).unwrap(), 126);
    }

    #[test]
    fn phi_retags() {
        let w2 = phi_iso(&RepElement::indecomposable(p(5), 2).unwrap());
        assert_eq!(w2.side(), Side::P1);
        assert_eq!(w2.to_string(), "W_2");
        assert!(phi_iso(&RepElement::zero(p(5))).is_zero());
    }

    #[test]
    fn display() {
        let q = p(5);
        assert_eq!(v(q, &[1, 0, 0, 0, 25]).to_string(), "V_1 ⊕ V_5^{⊕25}");
        assert_eq!(v(q, &[0, -1, 1, 0, 0]).to_string(), "-V_2 ⊕ V_3");
        assert_eq!(RepElement::zero(q).to_string(), "0");
    }

    #[test]
    fn virtual_elements_are_rejected_as_outputs() {
        assert!(v(p(3), &[1, -1, 0]).validate_actual().is_err());
        assert!(v(p(3), &[1, 1, 0]).validate_actual().is_ok());
    }

    #[test]
    fn aq_examples() {
        assert!(aq_tensor_square_check(p(5), 1));
        assert!(aq_tensor_square_check(p(5), 0));
        assert!(aq_tensor_square_check(p(7), 3));
    }
}
