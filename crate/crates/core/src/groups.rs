//! Finite abelian groups `Z_{n_1} + ... + Z_{n_k}` with explicit coordinates.
//!
//! Elements are enumerated in mixed-radix lexicographic order: the last
//! coordinate varies fastest, so in `Z_2 + Z_3` the element `(1, 1)` has
//! index `1 * 3 + 1 = 4`. Characters are indexed by the same enumeration:
//! `chi_r(x) = prod_j omega_{n_j}^{g_{jr} x_j}`, which we report as an
//! exponent of `omega_L` with `L` the group exponent.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbelianGroup {
    orders: Vec<u64>,
    order: usize,
    exponent: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement(Vec<u64>);

impl GroupElement {
    pub fn residues(&self) -> &[u64] {
        &self.0
    }

    pub fn into_residues(self) -> Vec<u64> {
        self.0
    }

    /// Sum of the coordinates, each taken in `[0, n_j)`.
    pub fn weight(&self) -> u64 {
        self.0.iter().sum()
    }
}

impl AbelianGroup {
    pub fn new(orders: &[u64]) -> Result<Self> {
        if orders.is_empty() {
            return Err(Error::InvalidGroup("empty list of cyclic factors".into()));
        }
        if let Some(bad) = orders.iter().find(|&&n| n < 2) {
            return Err(Error::InvalidGroup(format!(
                "cyclic factor of order {bad} (must be >= 2)"
            )));
        }
        let order = orders
            .iter()
            .try_fold(1usize, |acc, &n| acc.checked_mul(n as usize))
            .ok_or_else(|| Error::InvalidGroup("group order overflows".into()))?;
        let exponent = orders.iter().fold(1u64, |acc, &n| acc.lcm(&n));
        Ok(Self {
            orders: orders.to_vec(),
            order,
            exponent,
        })
    }

    /// The cyclic group `Z_n`.
    pub fn cyclic(n: u64) -> Result<Self> {
        Self::new(&[n])
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    /// Number of elements `n`.
    pub fn order(&self) -> usize {
        self.order
    }

    /// Group exponent `L = lcm(n_1, ..., n_k)`.
    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    pub fn is_cyclic(&self) -> bool {
        self.orders.len() == 1
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement(vec![0; self.orders.len()])
    }

    pub fn element(&self, residues: &[u64]) -> Result<GroupElement> {
        if residues.len() != self.orders.len() || residues.iter().zip(&self.orders).any(|(g, n)| g >= n) {
            return Err(Error::InvalidElement(residues.to_vec()));
        }
        Ok(GroupElement(residues.to_vec()))
    }

    /// Builds an element from arbitrary integers, reducing each coordinate.
    pub fn element_reduced(&self, coords: &[i64]) -> Result<GroupElement> {
        if coords.len() != self.orders.len() {
            return Err(Error::InvalidElement(coords.iter().map(|&c| c as u64).collect()));
        }
        Ok(GroupElement(
            coords
                .iter()
                .zip(&self.orders)
                .map(|(&c, &n)| c.rem_euclid(n as i64) as u64)
                .collect(),
        ))
    }

    pub fn contains(&self, x: &GroupElement) -> bool {
        x.0.len() == self.orders.len() && x.0.iter().zip(&self.orders).all(|(g, n)| g < n)
    }

    fn check(&self, x: &GroupElement) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(Error::InvalidElement(x.0.clone()))
        }
    }

    pub fn element_at(&self, index: usize) -> Result<GroupElement> {
        if index >= self.order {
            return Err(Error::IndexOutOfRange {
                index,
                order: self.order,
            });
        }
        let mut rest = index as u64;
        let mut residues = vec![0; self.orders.len()];
        for (slot, &n) in residues.iter_mut().zip(&self.orders).rev() {
            *slot = rest % n;
            rest /= n;
        }
        Ok(GroupElement(residues))
    }

    pub fn index_of(&self, x: &GroupElement) -> Result<usize> {
        self.check(x)?;
        Ok(x.0
            .iter()
            .zip(&self.orders)
            .fold(0usize, |acc, (&g, &n)| acc * n as usize + g as usize))
    }

    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.order).map(move |r| self.element_at(r).expect("index in range"))
    }

    pub fn add(&self, x: &GroupElement, y: &GroupElement) -> Result<GroupElement> {
        self.check(x)?;
        self.check(y)?;
        Ok(GroupElement(
            x.0.iter()
                .zip(&y.0)
                .zip(&self.orders)
                .map(|((a, b), n)| (a + b) % n)
                .collect(),
        ))
    }

    pub fn neg(&self, x: &GroupElement) -> Result<GroupElement> {
        self.check(x)?;
        Ok(GroupElement(
            x.0.iter().zip(&self.orders).map(|(a, n)| (n - a) % n).collect(),
        ))
    }

    pub fn sub(&self, x: &GroupElement, y: &GroupElement) -> Result<GroupElement> {
        self.add(x, &self.neg(y)?)
    }

    /// Least `m >= 1` with `m * x = 0`.
    pub fn order_of(&self, x: &GroupElement) -> Result<u64> {
        self.check(x)?;
        Ok(x.0
            .iter()
            .zip(&self.orders)
            .fold(1u64, |acc, (&g, &n)| acc.lcm(&(n / g.gcd(&n)))))
    }

    /// Exponent `e` in `[0, L)` such that `chi_r(x) = omega_L^e`.
    pub fn character_exponent(&self, r: usize, x: &GroupElement) -> Result<u64> {
        let a = self.element_at(r)?;
        self.check(x)?;
        Ok(self.pairing(&a, x))
    }

    /// Symmetric pairing `sum_j g_j x_j (L / n_j) mod L` for valid elements.
    pub(crate) fn pairing(&self, a: &GroupElement, x: &GroupElement) -> u64 {
        let l = self.exponent as u128;
        let mut acc: u128 = 0;
        for ((&g, &h), &n) in a.0.iter().zip(&x.0).zip(&self.orders) {
            let scale = self.exponent / n;
            acc = (acc + (g as u128 * h as u128 % n as u128) * scale as u128) % l;
        }
        acc as u64
    }

    /// `sum_j t_j / n_j` for an unreduced integer tuple.
    pub fn weight_scaled(&self, tuple: &[i64]) -> Result<BigRational> {
        if tuple.len() != self.orders.len() {
            return Err(Error::DimensionMismatch {
                expected: self.orders.len(),
                got: tuple.len(),
            });
        }
        Ok(tuple
            .iter()
            .zip(&self.orders)
            .fold(BigRational::from_integer(0.into()), |acc, (&t, &n)| {
                acc + BigRational::new(BigInt::from(t), BigInt::from(n))
            }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(orders: &[u64]) -> AbelianGroup {
        AbelianGroup::new(orders).unwrap()
    }

    #[test]
    fn make_group_examples() {
        let z4 = g(&[4]);
        assert_eq!((z4.order(), z4.exponent()), (4, 4));
        let z23 = g(&[2, 3]);
        assert_eq!((z23.order(), z23.exponent()), (6, 6));
        let z233 = g(&[2, 3, 3]);
        assert_eq!((z233.order(), z233.exponent()), (18, 6));
    }

    #[test]
    fn make_group_rejects_small_factors() {
        assert!(AbelianGroup::new(&[1]).is_err());
        assert!(AbelianGroup::new(&[4, 0]).is_err());
        assert!(AbelianGroup::new(&[]).is_err());
    }

    #[test]
    fn indexing_examples() {
        let z23 = g(&[2, 3]);
        assert_eq!(z23.element_at(0).unwrap().residues(), &[0, 0]);
        assert_eq!(z23.element_at(4).unwrap().residues(), &[1, 1]);
        assert_eq!(g(&[4]).element_at(3).unwrap().residues(), &[3]);
        assert!(z23.element_at(6).is_err());
        for r in 0..6 {
            assert_eq!(z23.index_of(&z23.element_at(r).unwrap()).unwrap(), r);
        }
    }

    #[test]
    fn arithmetic_examples() {
        let z4 = g(&[4]);
        assert_eq!(z4.order_of(&z4.element(&[2]).unwrap()).unwrap(), 2);
        let z23 = g(&[2, 3]);
        assert_eq!(z23.order_of(&z23.element(&[1, 0]).unwrap()).unwrap(), 2);
        assert_eq!(z23.order_of(&z23.element(&[0, 1]).unwrap()).unwrap(), 3);
        assert_eq!(z23.order_of(&z23.identity()).unwrap(), 1);
        let z6 = g(&[6]);
        assert_eq!(z6.neg(&z6.element(&[1]).unwrap()).unwrap().residues(), &[5]);
        let alien = z4.element(&[3]).unwrap();
        assert!(z23.add(&alien, &z23.identity()).is_err());
    }

    #[test]
    fn character_examples() {
        let z4 = g(&[4]);
        assert_eq!(z4.character_exponent(1, &z4.element(&[1]).unwrap()).unwrap(), 1);
        let z23 = g(&[2, 3]);
        let r = z23.index_of(&z23.element(&[1, 1]).unwrap()).unwrap();
        assert_eq!(z23.character_exponent(r, &z23.element(&[1, 2]).unwrap()).unwrap(), 1);
        for x in z23.elements() {
            assert_eq!(z23.character_exponent(0, &x).unwrap(), 0);
        }
    }

    #[test]
    fn weights() {
        let z23 = g(&[2, 3]);
        assert_eq!(z23.element(&[1, 2]).unwrap().weight(), 3);
        assert_eq!(
            g(&[4]).weight_scaled(&[4]).unwrap(),
            BigRational::from_integer(1.into())
        );
        assert_eq!(
            g(&[2, 3, 3]).weight_scaled(&[2, 0, 3]).unwrap(),
            BigRational::from_integer(2.into())
        );
        assert!(z23.weight_scaled(&[1]).is_err());
    }
}
