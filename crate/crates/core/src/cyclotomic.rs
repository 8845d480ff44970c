//! Exact arithmetic in `Z[omega_L]`.
//!
//! Values are stored in the power basis `1, w, ..., w^{phi(L)-1}` after
//! reduction modulo the cyclotomic polynomial `Phi_L`, which is monic, so the
//! representative is unique and integral. Equality of values is equality of
//! coordinate vectors.

use std::collections::HashMap;
use std::f64::consts::TAU;
use std::sync::{Arc, LazyLock, RwLock};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Dense integer polynomial; `coeffs[i]` is the coefficient of `x^i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `x^n - 1`.
    pub fn x_pow_minus_one(n: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[0] = BigInt::from(-1);
        coeffs[n] = BigInt::one();
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::new(Vec::new());
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Quotient and remainder by a monic divisor.
    pub fn div_rem_monic(&self, divisor: &Self) -> (Self, Self) {
        let d = divisor.degree().expect("non-zero divisor");
        assert!(divisor.coeffs[d].is_one(), "divisor must be monic");
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return (Self::new(Vec::new()), Self::new(rem));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - d];
        for i in (d..rem.len()).rev() {
            let c = std::mem::take(&mut rem[i]);
            if c.is_zero() {
                continue;
            }
            for (k, dc) in divisor.coeffs[..d].iter().enumerate() {
                rem[i - d + k] -= &c * dc;
            }
            quot[i - d] = c;
        }
        rem.truncate(d);
        (Self::new(quot), Self::new(rem))
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// `p(-x)`.
    pub fn compose_neg(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }
}

static PHI_CACHE: LazyLock<RwLock<HashMap<u64, Arc<IntPolynomial>>>> = LazyLock::new(|| RwLock::new(HashMap::new()));

/// The `n`-th cyclotomic polynomial, by dividing `x^n - 1` by `Phi_d` for
/// every proper divisor `d` of `n`. Results are memoized.
pub fn cyclotomic_polynomial(n: u64) -> Arc<IntPolynomial> {
    assert!(n >= 1, "cyclotomic polynomial index must be positive");
    if let Some(p) = PHI_CACHE.read().unwrap().get(&n) {
        return Arc::clone(p);
    }
    let mut acc = IntPolynomial::x_pow_minus_one(n as usize);
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        let (q, r) = acc.div_rem_monic(&cyclotomic_polynomial(d));
        debug_assert!(r.is_zero());
        acc = q;
    }
    let acc = Arc::new(acc);
    PHI_CACHE.write().unwrap().entry(n).or_insert(acc).clone()
}

/// Euler's totient.
pub fn totient(mut n: u64) -> u64 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// `x^e mod Phi_L` for `e in 0..L`, as coordinate vectors of length `phi(L)`.
struct PowerTable {
    rows: Vec<Vec<BigInt>>,
}

static POWER_TABLES: LazyLock<RwLock<HashMap<u64, Arc<PowerTable>>>> = LazyLock::new(|| RwLock::new(HashMap::new()));

fn power_table(conductor: u64) -> Arc<PowerTable> {
    if let Some(t) = POWER_TABLES.read().unwrap().get(&conductor) {
        return Arc::clone(t);
    }
    let phi = cyclotomic_polynomial(conductor);
    let dim = phi.degree().unwrap();
    let mut rows = Vec::with_capacity(conductor as usize);
    let mut cur = vec![BigInt::zero(); dim];
    if dim > 0 {
        cur[0] = BigInt::one();
    }
    for _ in 0..conductor {
        rows.push(cur.clone());
        if dim == 0 {
            continue;
        }
        // multiply by x and fold the overflow back using x^dim = -sum phi_k x^k
        let top = cur.pop().unwrap();
        cur.insert(0, BigInt::zero());
        if !top.is_zero() {
            for (k, c) in phi.coeffs()[..dim].iter().enumerate() {
                cur[k] -= &top * c;
            }
        }
    }
    let table = Arc::new(PowerTable { rows });
    POWER_TABLES.write().unwrap().entry(conductor).or_insert(table).clone()
}

/// An element of `Z[omega_L]` in canonical reduced form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CyclotomicInteger {
    conductor: u64,
    coords: Vec<BigInt>,
}

impl CyclotomicInteger {
    pub fn zero(conductor: u64) -> Self {
        assert!(conductor >= 1, "conductor must be positive");
        Self {
            conductor,
            coords: vec![BigInt::zero(); totient(conductor) as usize],
        }
    }

    pub fn from_integer(conductor: u64, m: impl Into<BigInt>) -> Self {
        let mut z = Self::zero(conductor);
        z.coords[0] = m.into();
        z
    }

    /// `sum_e omega_L^e` over a multiset of exponents (any integers).
    pub fn from_root_powers<I>(conductor: u64, exponents: I) -> Self
    where
        I: IntoIterator<Item = i64>,
    {
        let mut counts = vec![0i64; conductor as usize];
        for e in exponents {
            counts[e.rem_euclid(conductor as i64) as usize] += 1;
        }
        Self::from_exponent_counts(conductor, &counts)
    }

    /// `sum_e counts[e] * omega_L^e` with `counts.len() == L`.
    pub fn from_exponent_counts(conductor: u64, counts: &[i64]) -> Self {
        assert_eq!(counts.len() as u64, conductor, "one count per residue");
        let table = power_table(conductor);
        let mut z = Self::zero(conductor);
        for (row, &c) in table.rows.iter().zip(counts) {
            if c == 0 {
                continue;
            }
            let c = BigInt::from(c);
            for (acc, v) in z.coords.iter_mut().zip(row) {
                if !v.is_zero() {
                    *acc += &c * v;
                }
            }
        }
        z
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if self.conductor == other.conductor {
            Ok(())
        } else {
            Err(Error::ConductorMismatch(self.conductor, other.conductor))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(Self {
            conductor: self.conductor,
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(Self {
            conductor: self.conductor,
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        let prod = IntPolynomial::new(self.coords.clone()).mul(&IntPolynomial::new(other.coords.clone()));
        let (_, rem) = prod.div_rem_monic(&cyclotomic_polynomial(self.conductor));
        let mut coords = rem.coeffs().to_vec();
        coords.resize(self.coords.len(), BigInt::zero());
        Ok(Self {
            conductor: self.conductor,
            coords,
        })
    }

    pub fn scale(&self, m: impl Into<BigInt>) -> Self {
        let m = m.into();
        Self {
            conductor: self.conductor,
            coords: self.coords.iter().map(|a| a * &m).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            conductor: self.conductor,
            coords: self.coords.iter().map(|a| -a).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    /// The value as an integer, if it is rational. A rational cyclotomic
    /// integer is a rational algebraic integer, hence an integer.
    pub fn as_integer(&self) -> Option<BigInt> {
        if self.coords.iter().skip(1).all(Zero::is_zero) {
            Some(self.coords.first().cloned().unwrap_or_default())
        } else {
            None
        }
    }

    /// True iff the two values are linearly dependent over `Q`.
    pub fn are_parallel(&self, other: &Self) -> Result<bool> {
        self.same_field(other)?;
        let Some(pivot) = self.coords.iter().position(|c| !c.is_zero()) else {
            return Ok(true);
        };
        let p = &self.coords[pivot];
        let q = &other.coords[pivot];
        Ok(self.coords.iter().zip(&other.coords).all(|(a, b)| a * q == b * p))
    }

    /// The rational `c` with `other = c * self`, when it exists and `self != 0`.
    pub fn ratio_of(&self, other: &Self) -> Result<Option<BigRational>> {
        if !self.are_parallel(other)? {
            return Ok(None);
        }
        let Some(pivot) = self.coords.iter().position(|c| !c.is_zero()) else {
            return Ok(None);
        };
        Ok(Some(BigRational::new(
            other.coords[pivot].clone(),
            self.coords[pivot].clone(),
        )))
    }

    pub fn evaluate_float(&self) -> Complex64 {
        let l = self.conductor as f64;
        self.coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| Complex64::from_polar(1.0, TAU * j as f64 / l) * c.to_f64().unwrap_or(f64::NAN))
            .sum()
    }

    /// Largest absolute coordinate, useful for bounding growth in tests.
    pub fn height(&self) -> BigInt {
        self.coords.iter().map(|c| c.abs()).max().unwrap_or_default()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn cyclotomic_examples() {
        assert_eq!(*cyclotomic_polynomial(1), poly(&[-1, 1]));
        assert_eq!(*cyclotomic_polynomial(9), poly(&[1, 0, 0, 1, 0, 0, 1]));
        assert_eq!(*cyclotomic_polynomial(18), poly(&[1, 0, 0, -1, 0, 0, 1]));
        assert_eq!(*cyclotomic_polynomial(6), poly(&[1, -1, 1]));
    }

    #[test]
    fn totients() {
        let expect = [1, 1, 2, 2, 4, 2, 6, 4, 6, 4];
        for (n, e) in (1..=10).zip(expect) {
            assert_eq!(totient(n), e);
            assert_eq!(cyclotomic_polynomial(n).degree().unwrap() as u64, e);
        }
    }

    #[test]
    fn root_power_sums() {
        assert!(CyclotomicInteger::from_root_powers(4, [0, 1, 2, 3]).is_zero());
        let one = CyclotomicInteger::from_root_powers(6, [1, 5]);
        assert_eq!(one, CyclotomicInteger::from_integer(6, 1));
        let golden = CyclotomicInteger::from_root_powers(5, [1, 4]);
        assert!(golden.coords()[1..].iter().any(|c| !c.is_zero()));
        assert_eq!(golden.as_integer(), None);
        assert_eq!(one.as_integer(), Some(BigInt::from(1)));
        assert_eq!(
            CyclotomicInteger::from_integer(12, 7).as_integer(),
            Some(BigInt::from(7))
        );
    }

    #[test]
    fn ring_ops() {
        let c = CyclotomicInteger::from_root_powers(5, [1, 2]);
        assert!(c.sub(&c).unwrap().is_zero());
        let three = CyclotomicInteger::from_root_powers(6, [1, 5]).scale(3);
        assert_eq!(three.as_integer(), Some(BigInt::from(3)));
        assert_eq!(c.add(&three), Err(Error::ConductorMismatch(5, 6)),);
    }

    #[test]
    fn parallel_examples() {
        let m2 = CyclotomicInteger::from_integer(8, -2);
        let m4 = CyclotomicInteger::from_integer(8, -4);
        assert!(m2.are_parallel(&m4).unwrap());
        let root2 = CyclotomicInteger::from_root_powers(8, [1, 7]).scale(-2);
        assert!(!m2.are_parallel(&root2).unwrap());
        let c = CyclotomicInteger::from_root_powers(7, [1, 3, 6]);
        assert!(c.are_parallel(&c.scale(3)).unwrap());
        assert_eq!(
            c.ratio_of(&c.scale(-3)).unwrap(),
            Some(BigRational::from_integer(BigInt::from(-3)))
        );
        assert!(CyclotomicInteger::zero(7).are_parallel(&c).unwrap());
    }

    #[test]
    fn float_evaluation() {
        let three = CyclotomicInteger::from_integer(5, 3).evaluate_float();
        assert!((three - Complex64::new(3.0, 0.0)).norm() < 1e-12);
        let one = CyclotomicInteger::from_root_powers(6, [1, 5]).evaluate_float();
        assert!((one - Complex64::new(1.0, 0.0)).norm() < 1e-12);
        let i = CyclotomicInteger::from_root_powers(4, [1]).evaluate_float();
        assert!((i - Complex64::new(0.0, 1.0)).norm() < 1e-12);
    }

    #[test]
    fn conductor_one_and_two() {
        let a = CyclotomicInteger::from_root_powers(1, [0, 5, 7]);
        assert_eq!(a.as_integer(), Some(BigInt::from(3)));
        let b = CyclotomicInteger::from_root_powers(2, [0, 1, 1]);
        assert_eq!(b.as_integer(), Some(BigInt::from(-1)));
    }
}
