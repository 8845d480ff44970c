//! Independent checks of HNF / SNF / kernel output, shared by test targets.

use cayrev::lattice::{hermite, kernel_basis, snf, IntegerMatrix};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::Rng;

fn unimodular(u: &IntegerMatrix) -> bool {
    u.determinant().map(|d| d.abs().is_one()).unwrap_or(false)
}

pub fn check_hermite(m: &IntegerMatrix) -> Result<usize, String> {
    let herm = hermite(m);
    if !unimodular(&herm.u) {
        return Err("HNF transform is not unimodular".into());
    }
    if m.mul(&herm.u).map_err(|e| e.to_string())? != herm.h {
        return Err("H != M U".into());
    }
    let h = &herm.h;
    let rank = herm.rank();
    for (k, &row) in herm.pivots.iter().enumerate() {
        if k > 0 && row <= herm.pivots[k - 1] {
            return Err("pivot rows not increasing".into());
        }
        if (0..row).any(|i| !h[(i, k)].is_zero()) {
            return Err(format!("column {k} not echelon above its pivot"));
        }
        let p = &h[(row, k)];
        if !p.is_positive() {
            return Err("non-positive pivot".into());
        }
        if (0..k).any(|j| h[(row, j)].is_negative() || &h[(row, j)] >= p) {
            return Err("entries left of a pivot are not reduced".into());
        }
    }
    if (rank..h.cols()).any(|j| (0..h.rows()).any(|i| !h[(i, j)].is_zero())) {
        return Err("non-pivot columns of H are not zero".into());
    }
    Ok(rank)
}

pub fn check_smith(m: &IntegerMatrix) -> Result<(), String> {
    let (d, u, v) = snf(m);
    if !unimodular(&u) || !unimodular(&v) {
        return Err("SNF transforms are not unimodular".into());
    }
    let lhs = u.mul(m).and_then(|x| x.mul(&v)).map_err(|e| e.to_string())?;
    if lhs != d {
        return Err("U M V != D".into());
    }
    let mut prev: Option<BigInt> = None;
    for i in 0..d.rows() {
        for j in 0..d.cols() {
            if i != j && !d[(i, j)].is_zero() {
                return Err("D is not diagonal".into());
            }
        }
        if i < d.cols() {
            let x = &d[(i, i)];
            if x.is_negative() {
                return Err("negative invariant factor".into());
            }
            if let Some(p) = &prev {
                if !(x.is_zero() || (!p.is_zero() && x.is_multiple_of(p))) {
                    return Err(format!("invariant factors {p} and {x} do not divide"));
                }
            }
            prev = Some(x.clone());
        }
    }
    Ok(())
}

/// Kernel vectors solve `M l = 0`, the rank is `cols - rank(M)`, and the
/// kernel is saturated (its basis matrix has all invariant factors 1).
pub fn check_kernel(m: &IntegerMatrix, rank_m: usize) -> Result<(), String> {
    let k = kernel_basis(m);
    if k.rank() != m.cols() - rank_m {
        return Err(format!("kernel rank {} != {} - {}", k.rank(), m.cols(), rank_m));
    }
    for v in k.vectors() {
        if m.mul_vec(v).map_err(|e| e.to_string())?.iter().any(|x| !x.is_zero()) {
            return Err("kernel vector is not in the kernel".into());
        }
    }
    if !k.is_empty() {
        let (d, _, _) = snf(&k.as_matrix());
        if (0..k.rank()).any(|i| !d[(i, i)].is_one()) {
            return Err("kernel lattice is not saturated".into());
        }
    }
    Ok(())
}

pub fn check_all(m: &IntegerMatrix) -> Result<(), String> {
    let rank = check_hermite(m)?;
    check_smith(m)?;
    check_kernel(m, rank)
}

/// Dense, low-rank and sparse matrices with entries bounded by `bound`.
pub fn random_matrix<R: Rng>(rng: &mut R, max_dim: usize, bound: i64) -> IntegerMatrix {
    let rows = rng.gen_range(1..=max_dim);
    let cols = rng.gen_range(1..=max_dim);
    let data: Vec<Vec<i64>> = match rng.gen_range(0..3) {
        0 => (0..rows)
            .map(|_| (0..cols).map(|_| rng.gen_range(-bound..=bound)).collect())
            .collect(),
        1 => {
            let k = rng.gen_range(1..=rows.min(cols));
            let f = ((bound as f64 / k as f64).sqrt() as i64).max(1);
            let a: Vec<Vec<i64>> = (0..rows)
                .map(|_| (0..k).map(|_| rng.gen_range(-f..=f)).collect())
                .collect();
            let b: Vec<Vec<i64>> = (0..k)
                .map(|_| (0..cols).map(|_| rng.gen_range(-f..=f)).collect())
                .collect();
            (0..rows)
                .map(|i| (0..cols).map(|j| (0..k).map(|t| a[i][t] * b[t][j]).sum()).collect())
                .collect()
        }
        _ => (0..rows)
            .map(|_| {
                (0..cols)
                    .map(|_| if rng.gen_bool(0.2) { rng.gen_range(-9..=9) } else { 0 })
                    .collect()
            })
            .collect(),
    };
    IntegerMatrix::from_i64_rows(&data).expect("rectangular")
}
