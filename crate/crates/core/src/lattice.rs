//! Exact integer linear algebra over arbitrary-precision integers.
//!
//! Hermite normal form is computed with column operations (`H = M U`), so
//! the columns of `U` beyond the rank of `M` span the integer kernel and are
//! automatically saturated: `U` is unimodular.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl fmt::Debug for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntegerMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|e| e.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|row| row.len() != c) {
            return Err(Error::DimensionMismatch {
                expected: c,
                got: bad.len(),
            });
        }
        Ok(Self {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    /// Matrix whose columns are the given vectors (all of length `rows`).
    pub fn from_columns(rows: usize, columns: &[Vec<BigInt>]) -> Result<Self> {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::DimensionMismatch {
                    expected: rows,
                    got: col.len(),
                });
            }
            for (i, v) in col.iter().enumerate() {
                m[(i, j)] = v.clone();
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: other.rows,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, _)| !a.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect())
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<BigInt> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                got: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[(k, k)].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a[(i, k)].is_zero()) else {
                    return Ok(BigInt::zero());
                };
                a.swap_rows(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)]) / &prev;
                    a[(i, j)] = v;
                }
            }
            prev = a[(k, k)].clone();
        }
        Ok(sign * &a[(n - 1, n - 1)])
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `col[dst] -= q * col[src]`
    fn col_axpy(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let s = &self.entries[i * self.cols + src];
            if !s.is_zero() {
                let d = q * s;
                self.entries[i * self.cols + dst] -= d;
            }
        }
    }

    /// `row[dst] -= q * row[src]`
    fn row_axpy(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let s = &self.entries[src * self.cols + j];
            if !s.is_zero() {
                let d = q * s;
                self.entries[dst * self.cols + j] -= d;
            }
        }
    }

    fn negate_col(&mut self, j: usize) {
        for i in 0..self.rows {
            let e = &mut self.entries[i * self.cols + j];
            *e = -std::mem::take(e);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for e in &mut self.entries[i * self.cols..(i + 1) * self.cols] {
            *e = -std::mem::take(e);
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntegerMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntegerMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.entries[i * self.cols + j]
    }
}

/// Quotient of `a / b` rounded to the nearest integer.
fn round_div(a: &BigInt, b: &BigInt) -> BigInt {
    let two = BigInt::from(2);
    let (q, r) = a.div_mod_floor(b);
    if (&r * &two).abs() > b.abs() || ((&r * &two).abs() == b.abs() && b.is_negative()) {
        q + 1
    } else {
        q
    }
}

/// Column Hermite normal form, with its pivot layout.
#[derive(Debug, Clone)]
pub struct Hermite {
    pub h: IntegerMatrix,
    pub u: IntegerMatrix,
    /// `pivots[k]` is the row of the leading entry of column `k`.
    pub pivots: Vec<usize>,
}

impl Hermite {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// Column-style Hermite normal form `H = M U` with `U` unimodular.
///
/// Pivot columns occupy `0..rank`; pivots are positive and entries to the left
/// of a pivot in its row are reduced into `[0, pivot)`. Remaining columns of
/// `H` are zero.
pub fn hermite(m: &IntegerMatrix) -> Hermite {
    let mut h = m.clone();
    let mut u = IntegerMatrix::identity(m.cols);
    let mut pivots = Vec::new();
    let mut k = 0;
    for i in 0..h.rows {
        if k == h.cols {
            break;
        }
        // Euclid across the row: repeatedly pivot on the smallest entry.
        while let Some(j) = (k..h.cols)
            .filter(|&j| !h[(i, j)].is_zero())
            .min_by(|&a, &b| h[(i, a)].abs().cmp(&h[(i, b)].abs()))
        {
            h.swap_cols(k, j);
            u.swap_cols(k, j);
            let pivot = h[(i, k)].clone();
            let mut done = true;
            for j in k + 1..h.cols {
                if h[(i, j)].is_zero() {
                    continue;
                }
                let q = round_div(&h[(i, j)], &pivot);
                h.col_axpy(j, k, &q);
                u.col_axpy(j, k, &q);
                if !h[(i, j)].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h[(i, k)].is_zero() {
            continue;
        }
        if h[(i, k)].is_negative() {
            h.negate_col(k);
            u.negate_col(k);
        }
        let pivot = h[(i, k)].clone();
        for j in 0..k {
            let q = h[(i, j)].div_floor(&pivot);
            h.col_axpy(j, k, &q);
            u.col_axpy(j, k, &q);
        }
        pivots.push(i);
        k += 1;
    }
    Hermite { h, u, pivots }
}

/// `(H, U)` with `H = M U`.
pub fn hnf(m: &IntegerMatrix) -> (IntegerMatrix, IntegerMatrix) {
    let Hermite { h, u, .. } = hermite(m);
    (h, u)
}

/// Smith normal form `(D, U, V)` with `U M V = D`, `d_1 | d_2 | ...`.
pub fn snf(m: &IntegerMatrix) -> (IntegerMatrix, IntegerMatrix, IntegerMatrix) {
    let mut d = m.clone();
    let mut u = IntegerMatrix::identity(m.rows);
    let mut v = IntegerMatrix::identity(m.cols);
    let r = m.rows.min(m.cols);
    let mut t = 0;
    while t < r {
        let Some((pi, pj)) = smallest_entry(&d, t) else {
            break;
        };
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);
        loop {
            let mut clean = true;
            for i in t + 1..d.rows {
                if d[(i, t)].is_zero() {
                    continue;
                }
                let q = d[(i, t)].div_floor(&d[(t, t)]);
                d.row_axpy(i, t, &q);
                u.row_axpy(i, t, &q);
                if !d[(i, t)].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..d.cols {
                if d[(t, j)].is_zero() {
                    continue;
                }
                let q = d[(t, j)].div_floor(&d[(t, t)]);
                d.col_axpy(j, t, &q);
                v.col_axpy(j, t, &q);
                if !d[(t, j)].is_zero() {
                    clean = false;
                }
            }
            if clean {
                // divisibility: fold in an offending row and start over
                let offender =
                    (t + 1..d.rows).find(|&i| (t + 1..d.cols).any(|j| !d[(i, j)].is_multiple_of(&d[(t, t)])));
                match offender {
                    None => break,
                    Some(i) => {
                        let minus_one = BigInt::from(-1);
                        d.row_axpy(t, i, &minus_one);
                        u.row_axpy(t, i, &minus_one);
                    }
                }
            }
            // move the smallest entry of row t / column t to the pivot slot
            let (bi, bj) = smallest_in_cross(&d, t);
            d.swap_rows(t, bi);
            u.swap_rows(t, bi);
            d.swap_cols(t, bj);
            v.swap_cols(t, bj);
        }
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
        t += 1;
    }
    (d, u, v)
}

fn smallest_entry(d: &IntegerMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..d.rows {
        for j in t..d.cols {
            if d[(i, j)].is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| d[(i, j)].abs() < d[(bi, bj)].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

fn smallest_in_cross(d: &IntegerMatrix, t: usize) -> (usize, usize) {
    let mut best = (t, t);
    let mut val = d[(t, t)].abs();
    let mut consider = |i: usize, j: usize, best: &mut (usize, usize)| {
        let a = d[(i, j)].abs();
        if !a.is_zero() && (val.is_zero() || a < val) {
            val = a;
            *best = (i, j);
        }
    };
    for i in t + 1..d.rows {
        consider(i, t, &mut best);
    }
    for j in t + 1..d.cols {
        consider(t, j, &mut best);
    }
    best
}

/// A sublattice of `Z^dimension` given by a `Q`-independent generating set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeBasis {
    dimension: usize,
    vectors: Vec<Vec<BigInt>>,
}

impl LatticeBasis {
    pub fn new(dimension: usize, vectors: Vec<Vec<BigInt>>) -> Result<Self> {
        if let Some(v) = vectors.iter().find(|v| v.len() != dimension) {
            return Err(Error::DimensionMismatch {
                expected: dimension,
                got: v.len(),
            });
        }
        Ok(Self { dimension, vectors })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn vectors(&self) -> &[Vec<BigInt>] {
        &self.vectors
    }

    pub fn rank(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    /// Basis vectors as the columns of a `dimension x rank` matrix.
    pub fn as_matrix(&self) -> IntegerMatrix {
        IntegerMatrix::from_columns(self.dimension, &self.vectors).expect("consistent dimensions")
    }

    /// Integer combination of `coeffs` over the basis.
    pub fn combine(&self, coeffs: &[BigInt]) -> Result<Vec<BigInt>> {
        if coeffs.len() != self.vectors.len() {
            return Err(Error::DimensionMismatch {
                expected: self.vectors.len(),
                got: coeffs.len(),
            });
        }
        let mut out = vec![BigInt::zero(); self.dimension];
        for (c, b) in coeffs.iter().zip(&self.vectors) {
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(b) {
                *o += c * x;
            }
        }
        Ok(out)
    }

    /// Coefficients `c` with `v = sum c_i b_i`, if `v` lies in the lattice.
    pub fn coefficients_of(&self, v: &[BigInt]) -> Result<Option<Vec<BigInt>>> {
        if v.len() != self.dimension {
            return Err(Error::DimensionMismatch {
                expected: self.dimension,
                got: v.len(),
            });
        }
        if self.vectors.is_empty() {
            return Ok(v.iter().all(Zero::is_zero).then(Vec::new));
        }
        let herm = hermite(&self.as_matrix());
        let mut residual = v.to_vec();
        let mut y = vec![BigInt::zero(); self.vectors.len()];
        for (k, &row) in herm.pivots.iter().enumerate() {
            let (q, r) = residual[row].div_rem(&herm.h[(row, k)]);
            if !r.is_zero() {
                return Ok(None);
            }
            for (i, res) in residual.iter_mut().enumerate() {
                let hk = &herm.h[(i, k)];
                if !hk.is_zero() {
                    *res -= &q * hk;
                }
            }
            y[k] = q;
        }
        if residual.iter().any(|r| !r.is_zero()) {
            return Ok(None);
        }
        Ok(Some(herm.u.mul_vec(&y)?))
    }
}

/// Basis of the integer kernel `{l in Z^cols : M l = 0}`.
pub fn kernel_basis(m: &IntegerMatrix) -> LatticeBasis {
    let herm = hermite(m);
    let vectors = (herm.rank()..m.cols).map(|j| herm.u.column(j)).collect();
    LatticeBasis {
        dimension: m.cols,
        vectors,
    }
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).filter(|(x, _)| !x.is_zero()).map(|(x, y)| x * y).sum()
}

fn check_functional(basis: &LatticeBasis, f: &[BigInt]) -> Result<()> {
    if f.len() != basis.dimension {
        return Err(Error::DimensionMismatch {
            expected: basis.dimension,
            got: f.len(),
        });
    }
    Ok(())
}

/// Generator `d >= 0` of the subgroup `{f . l : l in lattice} = dZ`.
pub fn functional_image_gcd(basis: &LatticeBasis, f: &[BigInt]) -> Result<BigInt> {
    check_functional(basis, f)?;
    Ok(basis.vectors.iter().fold(BigInt::zero(), |g, b| g.gcd(&dot(f, b))))
}

/// A lattice vector `l` with `f . l = d`, where `d` is the image generator.
/// Returns `None` when `d = 0`.
pub fn functional_witness(basis: &LatticeBasis, f: &[BigInt]) -> Result<Option<(BigInt, Vec<BigInt>)>> {
    check_functional(basis, f)?;
    let values: Vec<BigInt> = basis.vectors.iter().map(|b| dot(f, b)).collect();
    // running extended gcd: g = sum coeffs_i * values_i
    let mut g = BigInt::zero();
    let mut coeffs = vec![BigInt::zero(); values.len()];
    for (i, v) in values.iter().enumerate() {
        if v.is_zero() {
            continue;
        }
        let e = g.extended_gcd(v);
        for c in coeffs[..i].iter_mut() {
            *c *= &e.x;
        }
        coeffs[i] = e.y.clone();
        g = e.gcd;
    }
    if g.is_zero() {
        return Ok(None);
    }
    let l = basis.combine(&coeffs)?;
    debug_assert_eq!(dot(f, &l), g);
    Ok(Some((g, l)))
}
