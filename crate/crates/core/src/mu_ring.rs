//! The ring `Z[μ]/f(μ)` with `f(x) = (x-1)(x^{2p}-1)/(x+1)`.
//!
//! Adjoining a root `μ` of `t^2 - V_2 t + 1` to the representation ring of
//! `F_p[C_p]` gives this ring, and `V_l` becomes `μ^{l-1} + μ^{l-3} + .. + μ^{1-l}`.
//! Symmetric powers are easy to expand here, and [`mu_to_rep`] reads the
//! answer back as multiplicities.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num::{BigInt, BigRational, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::fp::Prime;
use crate::reps::RepElement;

/// Per-prime data: the modulus `f` and the inverse of `μ`.
#[derive(Debug)]
pub struct MuRing {
    prime: Prime,
    /// Coefficients of `f`, lowest degree first; monic of degree `2p`.
    modulus: Vec<i64>,
    mu_inverse: Vec<i64>,
    /// `rep_to_mu(V_l)` for `l = 1..=p`.
    images: Vec<Vec<i64>>,
}

static RINGS: OnceLock<RwLock<HashMap<u32, Arc<MuRing>>>> = OnceLock::new();

impl MuRing {
    /// The shared ring for `p`, built on first use.
    pub fn for_prime(prime: Prime) -> Arc<MuRing> {
        let cache = RINGS.get_or_init(Default::default);
        if let Some(ring) = cache.read().unwrap().get(&prime.get()) {
            return ring.clone();
        }
        let ring = Arc::new(MuRing::build(prime));
        cache
            .write()
            .unwrap()
            .entry(prime.get())
            .or_insert(ring)
            .clone()
    }

    fn build(prime: Prime) -> MuRing {
        let p = prime.get() as usize;
        // (x^{2p} - 1) / (x + 1) by synthetic division at x = -1.
        let mut num = vec![0i64; 2 * p + 1];
        num[0] = -1;
        num[2 * p] = 1;
        let mut quotient = vec![0i64; 2 * p];
        let mut carry = 0i64;
        for deg in (1..=2 * p).rev() {
            carry = num[deg] - carry;
            quotient[deg - 1] = carry;
        }
        debug_assert_eq!(num[0] - carry, 0);
        // Multiply by (x - 1).
        let mut modulus = vec![0i64; 2 * p + 1];
        for (i, &c) in quotient.iter().enumerate() {
            modulus[i + 1] += c;
            modulus[i] -= c;
        }
        assert_eq!(modulus[0], 1, "f must have constant term 1");
        assert_eq!(modulus[2 * p], 1, "f must be monic");
        // f = 1 + μ g(μ), so μ (-g(μ)) = 1.
        let mu_inverse = modulus[1..].iter().map(|c| -c).collect();
        let mut ring = MuRing {
            prime,
            modulus,
            mu_inverse,
            images: Vec::new(),
        };
        ring.images = (1..=p)
            .map(|l| ring.indecomposable_image(l).coeffs)
            .collect();
        ring
    }

    pub fn prime(&self) -> Prime {
        self.prime
    }

    /// Rank of the ring as a free abelian group, `2p`.
    pub fn rank(&self) -> usize {
        2 * self.prime.get() as usize
    }

    /// Coefficients of `f`, lowest degree first.
    pub fn modulus(&self) -> &[i64] {
        &self.modulus
    }

    fn reduce(&self, mut poly: Vec<i64>) -> Vec<i64> {
        let d = self.rank();
        for deg in (d..poly.len()).rev() {
            let lead = poly[deg];
            if lead == 0 {
                continue;
            }
            for (i, &c) in self.modulus.iter().enumerate() {
                poly[deg - d + i] -= lead * c;
            }
        }
        poly.resize(d, 0);
        poly
    }

    pub fn zero(&self) -> MuRingElement {
        MuRingElement {
            prime: self.prime,
            coeffs: vec![0; self.rank()],
        }
    }

    pub fn one(&self) -> MuRingElement {
        self.constant(1)
    }

    pub fn constant(&self, c: i64) -> MuRingElement {
        let mut z = self.zero();
        z.coeffs[0] = c;
        z
    }

    /// `μ^e` for any integer `e`.
    pub fn mu_pow(&self, e: i64) -> MuRingElement {
        let (base, exp) = if e >= 0 {
            (self.from_coeffs(vec![0, 1]), e as u64)
        } else {
            (self.mu_inverse(), e.unsigned_abs())
        };
        self.pow(&base, exp)
    }

    pub fn mu_inverse(&self) -> MuRingElement {
        MuRingElement {
            prime: self.prime,
            coeffs: self.mu_inverse.clone(),
        }
    }

    /// Reduces an arbitrary integer polynomial in `μ` (lowest degree first).
    pub fn from_coeffs(&self, coeffs: Vec<i64>) -> MuRingElement {
        MuRingElement {
            prime: self.prime,
            coeffs: self.reduce(coeffs),
        }
    }

    pub fn mul(&self, a: &MuRingElement, b: &MuRingElement) -> MuRingElement {
        let mut prod = vec![0i64; a.coeffs.len() + b.coeffs.len()];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                prod[i + j] += x * y;
            }
        }
        self.from_coeffs(prod)
    }

    pub fn pow(&self, base: &MuRingElement, mut exp: u64) -> MuRingElement {
        let mut acc = self.one();
        let mut base = base.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            exp >>= 1;
            if exp > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    fn indecomposable_image(&self, l: usize) -> MuRingElement {
        let top = l as i64 - 1;
        (0..l as i64).fold(self.zero(), |acc, j| &acc + &self.mu_pow(top - 2 * j))
    }

    /// `rep_to_mu(V_l)`.
    pub fn image_of(&self, l: usize) -> MuRingElement {
        MuRingElement {
            prime: self.prime,
            coeffs: self.images[l - 1].clone(),
        }
    }
}

/// A residue in `Z[μ]/f(μ)`, stored by its canonical representative of degree `< 2p`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MuRingElement {
    prime: Prime,
    coeffs: Vec<i64>,
}

impl MuRingElement {
    pub fn prime(&self) -> Prime {
        self.prime
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    fn ring(&self) -> Arc<MuRing> {
        MuRing::for_prime(self.prime)
    }
}

impl Add for &MuRingElement {
    type Output = MuRingElement;
    fn add(self, rhs: &MuRingElement) -> MuRingElement {
        assert_eq!(self.prime, rhs.prime);
        MuRingElement {
            prime: self.prime,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &MuRingElement {
    type Output = MuRingElement;
    fn sub(self, rhs: &MuRingElement) -> MuRingElement {
        self + &(-rhs)
    }
}

impl Neg for &MuRingElement {
    type Output = MuRingElement;
    fn neg(self) -> MuRingElement {
        MuRingElement {
            prime: self.prime,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &MuRingElement {
    type Output = MuRingElement;
    fn mul(self, rhs: &MuRingElement) -> MuRingElement {
        assert_eq!(self.prime, rhs.prime);
        self.ring().mul(self, rhs)
    }
}

impl fmt::Debug for MuRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for MuRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (deg, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = c.abs();
            let body = match (deg, mag) {
                (0, m) => m.to_string(),
                (1, 1) => "μ".to_string(),
                (1, m) => format!("{m}μ"),
                (d, 1) => format!("μ^{d}"),
                (d, m) => format!("{m}μ^{d}"),
            };
            if first {
                write!(f, "{sign}{body}")?;
            } else {
                write!(f, " {sign} {body}")?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Linear extension of `V_l ↦ Σ_{j<l} μ^{l-1-2j}`.
pub fn rep_to_mu(x: &RepElement) -> MuRingElement {
    let ring = MuRing::for_prime(x.prime());
    let mut out = ring.zero();
    for (l, a) in x.terms() {
        for (o, c) in out.coeffs.iter_mut().zip(&ring.images[l - 1]) {
            *o += a * c;
        }
    }
    out
}

/// Inverse of [`rep_to_mu`] on its image: solves `Σ a_l rep_to_mu(V_l) = y` over `Z`.
pub fn mu_to_rep(y: &MuRingElement) -> Result<RepElement> {
    let ring = MuRing::for_prime(y.prime);
    let p = ring.prime.get() as usize;
    let rows = ring.rank();
    // Augmented system [A | y] over Q, A's columns are the images of V_1..V_p.
    let mut m: Vec<Vec<BigRational>> = (0..rows)
        .map(|i| {
            (0..p)
                .map(|l| ring.images[l][i])
                .chain(std::iter::once(y.coeffs[i]))
                .map(|v| BigRational::from_integer(BigInt::from(v)))
                .collect()
        })
        .collect();
    let mut pivot_row = 0;
    let mut pivot_cols = Vec::new();
    for col in 0..p {
        let Some(r) = (pivot_row..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(pivot_row, r);
        let inv = m[pivot_row][col].recip();
        for v in m[pivot_row].iter_mut() {
            *v *= &inv;
        }
        let pivot = m[pivot_row].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r == pivot_row || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (v, x) in row.iter_mut().zip(&pivot).skip(col) {
                *v -= &factor * x;
            }
        }
        pivot_cols.push(col);
        pivot_row += 1;
    }
    // The images of V_1..V_p are linearly independent.
    assert_eq!(pivot_cols.len(), p, "rep_to_mu images must be independent");
    if m[pivot_row..].iter().any(|row| !row[p].is_zero()) {
        return Err(Error::NotInImage);
    }
    let mut mults = vec![0i64; p];
    for (row, &col) in pivot_cols.iter().enumerate() {
        let v = &m[row][p];
        if !v.is_integer() {
            return Err(Error::NotInImage);
        }
        mults[col] = v.to_integer().to_i64().ok_or(Error::NotInImage)?;
    }
    RepElement::from_mults(ring.prime, mults)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(p: u32) -> Arc<MuRing> {
        MuRing::for_prime(Prime::new(p).unwrap())
    }

    #[test]
    fn modulus_at_three() {
        // (x-1)(x^6-1)/(x+1) = (x-1)^2 (x^4 + x^2 + 1)
        //   = x^6 - 2x^5 + 2x^4 - 2x^3 + 2x^2 - 2x + 1
        assert_eq!(ring(3).modulus(), &[1, -2, 2, -2, 2, -2, 1]);
    }

    #[test]
    fn mu_is_a_unit() {
        for p in [3, 5, 7, 11] {
            let r = ring(p);
            assert_eq!(&r.mu_pow(1) * &r.mu_inverse(), r.one());
            assert_eq!(&r.mu_pow(5) * &r.mu_pow(-5), r.one());
        }
    }

    #[test]
    fn images_of_small_indecomposables() {
        let r = ring(5);
        let p = r.prime();
        assert_eq!(
            rep_to_mu(&RepElement::indecomposable(p, 1).unwrap()),
            r.one()
        );
        let v2 = rep_to_mu(&RepElement::indecomposable(p, 2).unwrap());
        assert_eq!(v2, &r.mu_pow(1) + &r.mu_pow(-1));
        let v1_v3 = RepElement::from_mults(p, vec![1, 0, 1, 0, 0]).unwrap();
        assert_eq!(&v2 * &v2, rep_to_mu(&v1_v3));
    }

    #[test]
    fn mu_to_rep_examples() {
        let r = ring(5);
        let p = r.prime();
        assert_eq!(
            mu_to_rep(&r.one()).unwrap(),
            RepElement::indecomposable(p, 1).unwrap()
        );
        let y = &(&r.mu_pow(2) + &r.constant(2)) + &r.mu_pow(-2);
        assert_eq!(
            mu_to_rep(&y).unwrap(),
            RepElement::from_mults(p, vec![1, 0, 1, 0, 0]).unwrap()
        );
        assert_eq!(mu_to_rep(&r.mu_pow(3)), Err(Error::NotInImage));
    }

    #[test]
    fn display() {
        let r = ring(3);
        assert_eq!(r.zero().to_string(), "0");
        assert_eq!((&r.mu_pow(1) + &r.constant(-2)).to_string(), "μ - 2");
    }
}
