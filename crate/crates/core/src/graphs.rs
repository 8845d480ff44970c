//! Cayley graphs `Cay(G, S)` over finite abelian groups and their spectra.
//!
//! The eigenvalue attached to the character `chi_r` is
//! `lambda_r = sum_{y in S} chi_r(y)`; we keep it both exactly, as an element
//! of `Z[omega_L]`, and as a double.

use std::collections::{BTreeSet, VecDeque};
use std::f64::consts::TAU;
use std::sync::OnceLock;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::cyclotomic::CyclotomicInteger;
use crate::error::{Error, Result};
use crate::groups::{AbelianGroup, GroupElement};

pub const DEFAULT_DENSE_BOUND: usize = 4096;

#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    pub exact: Vec<CyclotomicInteger>,
    pub float: Vec<f64>,
}

impl Spectrum {
    pub fn len(&self) -> usize {
        self.float.len()
    }

    pub fn is_empty(&self) -> bool {
        self.float.is_empty()
    }
}

#[derive(Debug)]
pub struct CayleyGraph {
    group: AbelianGroup,
    connection: Vec<GroupElement>,
    connected: bool,
    spectrum: OnceLock<Spectrum>,
}

impl Clone for CayleyGraph {
    fn clone(&self) -> Self {
        Self {
            group: self.group.clone(),
            connection: self.connection.clone(),
            connected: self.connected,
            spectrum: self.spectrum.clone(),
        }
    }
}

impl PartialEq for CayleyGraph {
    fn eq(&self, other: &Self) -> bool {
        self.group == other.group && self.connection == other.connection
    }
}

impl Eq for CayleyGraph {}

impl CayleyGraph {
    /// Validates `S` (identity-free, closed under negation, no repeats).
    pub fn new(group: AbelianGroup, connection: Vec<GroupElement>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for y in &connection {
            if !group.contains(y) {
                return Err(Error::InvalidElement(y.residues().to_vec()));
            }
            if *y == group.identity() {
                return Err(Error::InvalidConnection("identity element in connection set".into()));
            }
            if !seen.insert(y.clone()) {
                return Err(Error::InvalidConnection(format!(
                    "duplicate element {:?}",
                    y.residues()
                )));
            }
        }
        for y in &connection {
            let minus = group.neg(y)?;
            if !seen.contains(&minus) {
                return Err(Error::InvalidConnection(format!(
                    "connection set is not symmetric: {:?} present but {:?} missing",
                    y.residues(),
                    minus.residues()
                )));
            }
        }
        let connection: Vec<GroupElement> = seen.into_iter().collect();
        let connected = generates(&group, &connection);
        Ok(Self {
            group,
            connection,
            connected,
            spectrum: OnceLock::new(),
        })
    }

    /// Circulant graph `Cay(Z_n, S)` from residues.
    pub fn circulant(n: u64, connection: &[u64]) -> Result<Self> {
        let group = AbelianGroup::cyclic(n)?;
        let s = connection
            .iter()
            .map(|&y| group.element(&[y]))
            .collect::<Result<Vec<_>>>()?;
        Self::new(group, s)
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn connection(&self) -> &[GroupElement] {
        &self.connection
    }

    pub fn degree(&self) -> usize {
        self.connection.len()
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    /// Whether `S` generates `G`.
    pub fn is_connected(&self) -> bool {
        self.connected
    }

    /// `Cay(G, G \ (S + {0}))`.
    pub fn complement(&self) -> Self {
        let present: BTreeSet<&GroupElement> = self.connection.iter().collect();
        let identity = self.group.identity();
        let s = self
            .group
            .elements()
            .filter(|x| *x != identity && !present.contains(x))
            .collect();
        Self::new(self.group.clone(), s).expect("complement of a valid connection set is valid")
    }

    pub fn spectrum(&self) -> &Spectrum {
        self.spectrum
            .get_or_init(|| compute_spectrum(&self.group, &self.connection))
    }

    pub fn is_integral(&self) -> bool {
        self.spectrum().exact.iter().all(|l| l.as_integer().is_some())
    }

    pub fn are_adjacent(&self, x: &GroupElement, y: &GroupElement) -> Result<bool> {
        let d = self.group.sub(y, x)?;
        Ok(self.connection.binary_search(&d).is_ok())
    }

    pub fn adjacency_matrix(&self) -> Result<Vec<Vec<u8>>> {
        self.adjacency_matrix_bounded(DEFAULT_DENSE_BOUND)
    }

    pub fn adjacency_matrix_bounded(&self, bound: usize) -> Result<Vec<Vec<u8>>> {
        let n = self.order();
        if n > bound {
            return Err(Error::TooLarge { order: n, bound });
        }
        let mut a = vec![vec![0u8; n]; n];
        for (x, row) in a.iter_mut().enumerate() {
            let gx = self.group.element_at(x)?;
            for y in &self.connection {
                let target = self.group.add(&gx, y)?;
                row[self.group.index_of(&target)?] = 1;
            }
        }
        Ok(a)
    }
}

fn generates(group: &AbelianGroup, s: &[GroupElement]) -> bool {
    let n = group.order();
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut queue = VecDeque::from([group.identity()]);
    let mut count = 1;
    while let Some(x) = queue.pop_front() {
        for y in s {
            let z = group.add(&x, y).expect("valid elements");
            let i = group.index_of(&z).expect("valid element");
            if !seen[i] {
                seen[i] = true;
                count += 1;
                queue.push_back(z);
            }
        }
    }
    count == n
}

fn compute_spectrum(group: &AbelianGroup, connection: &[GroupElement]) -> Spectrum {
    let l = group.exponent();
    let cos_table: Vec<f64> = (0..l).map(|e| (TAU * e as f64 / l as f64).cos()).collect();
    let (exact, float) = (0..group.order())
        .into_par_iter()
        .map(|r| {
            let a = group.element_at(r).expect("index in range");
            let mut counts = vec![0i64; l as usize];
            for y in connection {
                counts[group.pairing(&a, y) as usize] += 1;
            }
            let float: f64 = counts.iter().zip(&cos_table).map(|(&c, cs)| c as f64 * cs).sum();
            (CyclotomicInteger::from_exponent_counts(l, &counts), float)
        })
        .unzip();
    Spectrum { exact, float }
}

/// Signed eigenvalue combination
/// `(l_2 - l_1) + sum_{j=1}^{(p-1)/2} (l_{mj+2} - l_{mj+1}) - sum_{j=1}^{(p-1)/2} (l_{mj-1} - l_{mj-2})`
/// on a circulant of order `m * p`. It vanishes exactly when `m >= 4` is even,
/// `p` is an odd prime and no connection element is divisible by `p`.
pub fn pal_combination(g: &CayleyGraph, m: u64, p: u64) -> Result<CyclotomicInteger> {
    let group = g.group();
    if !group.is_cyclic() || group.order() as u64 != m * p || p.is_multiple_of(2) || m == 0 {
        return Err(Error::InvalidFamily(format!(
            "pal combination needs a circulant of order m*p with p odd, got {:?} with m={m}, p={p}",
            group.orders()
        )));
    }
    let n = m * p;
    let spec = &g.spectrum().exact;
    let lam = |i: u64| &spec[(i % n) as usize];
    let mut acc = lam(2).sub(lam(1))?;
    for j in 1..=(p - 1) / 2 {
        acc = acc.add(lam(m * j + 2))?.sub(lam(m * j + 1))?;
        acc = acc.sub(lam(m * j - 1))?.add(lam(m * j - 2))?;
    }
    Ok(acc)
}

/// `chi_r(x)` as a complex number.
pub fn character_value(group: &AbelianGroup, r: usize, x: &GroupElement) -> Result<Complex64> {
    let e = group.character_exponent(r, x)?;
    Ok(Complex64::from_polar(1.0, TAU * e as f64 / group.exponent() as f64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn ints(g: &CayleyGraph) -> Vec<i64> {
        g.spectrum()
            .exact
            .iter()
            .map(|l| i64::try_from(l.as_integer().expect("integral")).unwrap())
            .collect()
    }

    #[test]
    fn construction_examples() {
        let c6 = CayleyGraph::circulant(6, &[1, 5]).unwrap();
        assert_eq!(c6.degree(), 2);
        assert!(c6.is_connected());
        assert!(matches!(
            CayleyGraph::circulant(6, &[1, 2]),
            Err(Error::InvalidConnection(_))
        ));
        assert!(matches!(
            CayleyGraph::circulant(4, &[0, 2]),
            Err(Error::InvalidConnection(_))
        ));
        assert!(matches!(
            CayleyGraph::circulant(4, &[2, 2]),
            Err(Error::InvalidConnection(_))
        ));
        assert!(!CayleyGraph::circulant(6, &[2, 4]).unwrap().is_connected());
    }

    #[test]
    fn complement_examples() {
        let c6 = CayleyGraph::circulant(6, &[1, 5]).unwrap();
        let comp = c6.complement();
        let s: Vec<u64> = comp.connection().iter().map(|y| y.residues()[0]).collect();
        assert_eq!(s, vec![2, 3, 4]);
        assert_eq!(comp.complement(), c6);
        let k5 = CayleyGraph::circulant(5, &[1, 2, 3, 4]).unwrap();
        assert_eq!(k5.complement().degree(), 0);
    }

    #[test]
    fn spectrum_examples() {
        assert_eq!(ints(&CayleyGraph::circulant(4, &[1, 3]).unwrap()), vec![2, 0, -2, 0]);
        assert_eq!(
            ints(&CayleyGraph::circulant(6, &[1, 5]).unwrap()),
            vec![2, 1, -1, -2, -1, 1]
        );
        let comp = CayleyGraph::circulant(10, &[1, 9]).unwrap().complement();
        assert_eq!(comp.spectrum().exact[0].as_integer(), Some(BigInt::from(7)));
    }

    #[test]
    fn integrality_examples() {
        assert!(CayleyGraph::circulant(6, &[1, 5]).unwrap().is_integral());
        assert!(!CayleyGraph::circulant(5, &[1, 4]).unwrap().is_integral());
        let k7 = CayleyGraph::circulant(7, &[1, 2, 3, 4, 5, 6]).unwrap();
        assert!(k7.is_integral());
        assert_eq!(ints(&k7)[1..], [-1; 6]);
    }

    #[test]
    fn adjacency_examples() {
        let c4 = CayleyGraph::circulant(4, &[1, 3]).unwrap();
        let a = c4.adjacency_matrix().unwrap();
        assert_eq!(
            a,
            vec![vec![0, 1, 0, 1], vec![1, 0, 1, 0], vec![0, 1, 0, 1], vec![1, 0, 1, 0]]
        );
        let empty = CayleyGraph::circulant(5, &[]).unwrap();
        assert!(empty.adjacency_matrix().unwrap().iter().flatten().all(|&x| x == 0));
        let g = CayleyGraph::new(
            AbelianGroup::new(&[2, 3]).unwrap(),
            vec![
                AbelianGroup::new(&[2, 3]).unwrap().element(&[1, 0]).unwrap(),
                AbelianGroup::new(&[2, 3]).unwrap().element(&[0, 1]).unwrap(),
                AbelianGroup::new(&[2, 3]).unwrap().element(&[0, 2]).unwrap(),
            ],
        )
        .unwrap();
        for row in g.adjacency_matrix().unwrap() {
            assert_eq!(row.iter().map(|&x| x as usize).sum::<usize>(), 3);
        }
        assert!(matches!(c4.adjacency_matrix_bounded(3), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn pal_combination_vanishes() {
        for (n, m, p) in [(6, 2, 3), (30, 10, 3), (30, 6, 5)] {
            let c = CayleyGraph::circulant(n, &[1, n - 1]).unwrap();
            assert!(pal_combination(&c, m, p).unwrap().is_zero(), "C{n} m={m} p={p}");
        }
        let c30 = CayleyGraph::circulant(30, &[1, 29]).unwrap();
        assert!(pal_combination(&c30.complement(), 10, 3).unwrap().is_zero());
        assert!(pal_combination(&c30, 5, 6).is_err());
    }
}
