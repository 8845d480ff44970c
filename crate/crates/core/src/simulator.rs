//! Continuous-time quantum walk `H(t) = exp(-i t A)` on abelian Cayley graphs.
//!
//! Amplitudes come from the character expansion
//! `(H(t) e_a)_c = (1/n) sum_r exp(-i t lambda_r) chi_r(c - a)`, so no
//! numerical eigensolver is involved. A dense scaled-and-squared Taylor
//! series is kept as an independent oracle for small graphs.

use std::collections::HashMap;
use std::f64::consts::TAU;
use std::io::Write;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::cyclotomic::CyclotomicInteger;
use crate::error::{Error, Result};
use crate::graphs::CayleyGraph;
use crate::groups::GroupElement;

pub const ORACLE_BOUND: usize = 512;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairProfile {
    pub t: f64,
    pub alpha: Complex64,
    pub beta: Complex64,
    /// `1 - |alpha|^2 - |beta|^2`, clamped at zero.
    pub leakage: f64,
    /// `-conj(alpha) beta / conj(beta)`, absent when `beta` vanishes.
    pub gamma: Option<Complex64>,
}

impl PairProfile {
    fn new(t: f64, alpha: Complex64, beta: Complex64) -> Self {
        let leakage = (1.0 - alpha.norm_sqr() - beta.norm_sqr()).max(0.0);
        let gamma = (beta.norm() > 1e-12).then(|| -alpha.conj() * beta / beta.conj());
        Self {
            t,
            alpha,
            beta,
            leakage,
            gamma,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SearchConfig {
    pub t_max: f64,
    pub grid_points: usize,
    pub refine_top: usize,
    pub refine_iters: usize,
    pub beta_floor: f64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            t_max: 1e4,
            grid_points: 1_000_000,
            refine_top: 32,
            refine_iters: 60,
            beta_floor: 1e-3,
        }
    }
}

impl SearchConfig {
    pub fn validate(&self) -> Result<()> {
        let ok = self.t_max > 0.0
            && self.t_max.is_finite()
            && self.grid_points > 0
            && self.refine_top > 0
            && self.refine_iters > 0
            && self.beta_floor > 0.0;
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidFamily(format!(
                "search configuration must be positive: {self:?}"
            )))
        }
    }
}

fn unit_root(exponent: u64, conductor: u64) -> Complex64 {
    Complex64::from_polar(1.0, TAU * exponent as f64 / conductor as f64)
}

/// The full amplitude vector `H(t) e_a`, indexed like the group elements.
pub fn amplitudes(g: &CayleyGraph, a: &GroupElement, t: f64) -> Result<Vec<Complex64>> {
    let group = g.group();
    group.index_of(a)?;
    let n = group.order();
    let l = group.exponent();
    let roots: Vec<Complex64> = (0..l).map(|e| unit_root(e, l)).collect();
    let phases: Vec<Complex64> = g
        .spectrum()
        .float
        .iter()
        .map(|&lam| Complex64::from_polar(1.0, -t * lam))
        .collect();
    let chars: Vec<GroupElement> = group.elements().collect();
    let out = (0..n)
        .into_par_iter()
        .map(|c| {
            let x = group.sub(&chars[c], a).expect("valid elements");
            let sum: Complex64 = chars
                .iter()
                .zip(&phases)
                .map(|(ar, p)| p * roots[group.pairing(ar, &x) as usize])
                .sum();
            sum / n as f64
        })
        .collect();
    Ok(out)
}

/// Precomputed weights for evaluating `alpha(t)` and `beta(t)` in `O(#distinct eigenvalues)`.
#[derive(Debug, Clone)]
pub struct PairEvaluator {
    lambdas: Vec<f64>,
    alpha_weights: Vec<f64>,
    beta_weights: Vec<Complex64>,
}

impl PairEvaluator {
    pub fn new(g: &CayleyGraph, a: &GroupElement, b: &GroupElement) -> Result<Self> {
        let group = g.group();
        let diff = group.sub(b, a)?;
        if diff == group.identity() {
            return Err(Error::SameVertex);
        }
        let n = group.order() as f64;
        let l = group.exponent();
        let spectrum = g.spectrum();
        let mut slot: HashMap<&CyclotomicInteger, usize> = HashMap::new();
        let mut lambdas = Vec::new();
        let mut alpha_weights = Vec::new();
        let mut beta_weights: Vec<Complex64> = Vec::new();
        for (r, (exact, &lam)) in spectrum.exact.iter().zip(&spectrum.float).enumerate() {
            let next = lambdas.len();
            let k = *slot.entry(exact).or_insert(next);
            if k == next {
                lambdas.push(lam);
                alpha_weights.push(0.0);
                beta_weights.push(Complex64::new(0.0, 0.0));
            }
            alpha_weights[k] += 1.0 / n;
            // amplitude at b uses chi_r(b - a)
            let e = group.character_exponent(r, &diff)?;
            beta_weights[k] += unit_root(e, l) / n;
        }
        Ok(Self {
            lambdas,
            alpha_weights,
            beta_weights,
        })
    }

    pub fn profile(&self, t: f64) -> PairProfile {
        let mut alpha = Complex64::new(0.0, 0.0);
        let mut beta = Complex64::new(0.0, 0.0);
        for ((&lam, &wa), &wb) in self.lambdas.iter().zip(&self.alpha_weights).zip(&self.beta_weights) {
            let p = Complex64::from_polar(1.0, -t * lam);
            alpha += p * wa;
            beta += p * wb;
        }
        PairProfile::new(t, alpha, beta)
    }
}

pub fn pair_profile(g: &CayleyGraph, a: &GroupElement, b: &GroupElement, t: f64) -> Result<PairProfile> {
    Ok(PairEvaluator::new(g, a, b)?.profile(t))
}

/// Golden-section minimisation of `f` on `[lo, hi]`.
fn golden_min(mut lo: f64, mut hi: f64, iters: usize, f: impl Fn(f64) -> f64) -> f64 {
    let ratio = (5f64.sqrt() - 1.0) / 2.0;
    let mut x1 = hi - ratio * (hi - lo);
    let mut x2 = lo + ratio * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    for _ in 0..iters {
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - ratio * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + ratio * (hi - lo);
            f2 = f(x2);
        }
    }
    if f1 <= f2 {
        x1
    } else {
        x2
    }
}

/// Grid scan followed by local refinement of the best local minima of
/// `objective`. Returns refined profiles in grid order.
fn scan(
    eval: &PairEvaluator,
    cfg: &SearchConfig,
    objective: impl Fn(&PairProfile) -> f64 + Sync,
    keep: impl Fn(&PairProfile) -> bool + Sync,
) -> Vec<PairProfile> {
    let step = cfg.t_max / cfg.grid_points as f64;
    let values: Vec<(f64, bool)> = (0..cfg.grid_points + 2)
        .into_par_iter()
        .with_min_len(4096)
        .map(|i| {
            let p = eval.profile(i as f64 * step);
            (objective(&p), keep(&p))
        })
        .collect();
    let mut minima: Vec<usize> = (1..=cfg.grid_points)
        .filter(|&i| values[i].1 && values[i].0 <= values[i - 1].0 && values[i].0 <= values[i + 1].0)
        .collect();
    minima.sort_by(|&x, &y| values[x].0.total_cmp(&values[y].0).then(x.cmp(&y)));
    minima.truncate(cfg.refine_top);
    minima.sort_unstable();
    minima
        .par_iter()
        .map(|&i| {
            let lo = (i - 1) as f64 * step;
            let hi = ((i + 1) as f64 * step).min(cfg.t_max);
            let t = golden_min(lo.max(f64::MIN_POSITIVE), hi, cfg.refine_iters, |t| {
                objective(&eval.profile(t))
            });
            let refined = eval.profile(t);
            let grid = eval.profile(i as f64 * step);
            if objective(&refined) <= objective(&grid) {
                refined
            } else {
                grid
            }
        })
        .collect()
}

/// Leakage bucketed at `1e-12` so rounding noise does not reorder exact hits.
fn rank(p: &PairProfile) -> u64 {
    (p.leakage / 1e-12).round() as u64
}

/// Candidate revival times ranked by ascending leakage. An empty or poor
/// result means "not found within budget", never a proof of absence.
pub fn search_times(
    g: &CayleyGraph,
    a: &GroupElement,
    b: &GroupElement,
    cfg: &SearchConfig,
) -> Result<Vec<PairProfile>> {
    cfg.validate()?;
    let eval = PairEvaluator::new(g, a, b)?;
    let floor = cfg.beta_floor;
    let mut found = scan(&eval, cfg, |p| p.leakage, |p| p.beta.norm() >= floor);
    found.retain(|p| p.beta.norm() >= floor);
    found.sort_by(|x, y| rank(x).cmp(&rank(y)).then(x.t.total_cmp(&y.t)));
    Ok(found)
}

/// Best observed `|beta|^2` over the search window, with the profile where it
/// occurs. A numerical indicator for state transfer, not a decision.
pub fn pgst_quality(
    g: &CayleyGraph,
    a: &GroupElement,
    b: &GroupElement,
    cfg: &SearchConfig,
) -> Result<(f64, PairProfile)> {
    cfg.validate()?;
    let eval = PairEvaluator::new(g, a, b)?;
    let best = scan(&eval, cfg, |p| -p.beta.norm_sqr(), |_| true)
        .into_iter()
        .max_by(|x, y| {
            x.beta
                .norm_sqr()
                .total_cmp(&y.beta.norm_sqr())
                .then(y.t.total_cmp(&x.t))
        })
        .unwrap_or_else(|| eval.profile(0.0));
    Ok((best.beta.norm_sqr().clamp(0.0, 1.0), best))
}

/// Dense row-major complex matrix, only what the oracle needs.
#[derive(Clone)]
struct Dense {
    n: usize,
    data: Vec<Complex64>,
}

impl Dense {
    fn identity(n: usize) -> Self {
        let mut data = vec![Complex64::new(0.0, 0.0); n * n];
        for i in 0..n {
            data[i * n + i] = Complex64::new(1.0, 0.0);
        }
        Self { n, data }
    }

    fn matmul(&self, other: &Dense) -> Dense {
        let n = self.n;
        let mut data = vec![Complex64::new(0.0, 0.0); n * n];
        data.par_chunks_mut(n).enumerate().for_each(|(i, row)| {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a.re == 0.0 && a.im == 0.0 {
                    continue;
                }
                for (o, b) in row.iter_mut().zip(&other.data[k * n..(k + 1) * n]) {
                    *o += a * b;
                }
            }
        });
        Dense { n, data }
    }

    fn one_norm(&self) -> f64 {
        (0..self.n)
            .map(|j| (0..self.n).map(|i| self.data[i * self.n + j].norm()).sum::<f64>())
            .fold(0.0, f64::max)
    }
}

/// `H(t) e_a` via `exp(X) = (T_m(X / 2^s))^{2^s}` on the dense adjacency matrix.
pub fn matrix_exponential_oracle(g: &CayleyGraph, a: &GroupElement, t: f64) -> Result<Vec<Complex64>> {
    let adj = g.adjacency_matrix_bounded(ORACLE_BOUND)?;
    let a_idx = g.group().index_of(a)?;
    let n = adj.len();
    let mut x = Dense {
        n,
        data: adj
            .iter()
            .flatten()
            .map(|&v| Complex64::new(0.0, -t * v as f64))
            .collect(),
    };
    let norm = x.one_norm();
    let squarings = if norm > 0.5 {
        (norm / 0.5).log2().ceil() as u32
    } else {
        0
    };
    let scale = 0.5f64.powi(squarings as i32);
    x.data.iter_mut().for_each(|v| *v *= scale);

    // Taylor series until the terms drop below double precision
    let mut result = Dense::identity(n);
    let mut term = Dense::identity(n);
    for k in 1..=40 {
        term = term.matmul(&x);
        let inv = 1.0 / k as f64;
        term.data.iter_mut().for_each(|v| *v *= inv);
        result.data.iter_mut().zip(&term.data).for_each(|(r, v)| *r += v);
        if term.one_norm() < 1e-20 {
            break;
        }
    }
    for _ in 0..squarings {
        result = result.matmul(&result);
    }
    Ok((0..n).map(|i| result.data[i * n + a_idx]).collect())
}

/// Writes `t,alpha_re,alpha_im,beta_re,beta_im,leakage` rows, sorted by leakage.
pub fn write_scan_csv<W: Write>(profiles: &[PairProfile], out: W) -> Result<()> {
    let mut rows: Vec<&PairProfile> = profiles.iter().collect();
    rows.sort_by(|x, y| rank(x).cmp(&rank(y)).then(x.t.total_cmp(&y.t)));
    let mut w = csv::Writer::from_writer(out);
    let io = |e: csv::Error| Error::Io(e.to_string());
    w.write_record(["t", "alpha_re", "alpha_im", "beta_re", "beta_im", "leakage"])
        .map_err(io)?;
    for p in rows {
        w.write_record([p.t, p.alpha.re, p.alpha.im, p.beta.re, p.beta.im, p.leakage].map(|v| format!("{v:.16e}")))
            .map_err(io)?;
    }
    w.flush().map_err(|e| Error::Io(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    use crate::groups::AbelianGroup;

    fn z(n: u64, x: u64) -> GroupElement {
        AbelianGroup::cyclic(n).unwrap().element(&[x]).unwrap()
    }

    fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
        (a - b).norm() < tol
    }

    #[test]
    fn amplitudes_at_zero_are_the_start_vertex() {
        let g = CayleyGraph::circulant(7, &[1, 3, 4, 6]).unwrap();
        let amp = amplitudes(&g, &z(7, 2), 0.0).unwrap();
        for (c, v) in amp.iter().enumerate() {
            let want = if c == 2 { 1.0 } else { 0.0 };
            assert!(close(*v, Complex64::new(want, 0.0), 1e-12));
        }
    }

    #[test]
    fn k2_closed_form() {
        let k2 = CayleyGraph::circulant(2, &[1]).unwrap();
        let amp = amplitudes(&k2, &z(2, 0), PI / 2.0).unwrap();
        assert!(close(amp[0], Complex64::new(0.0, 0.0), 1e-12));
        assert!(close(amp[1], Complex64::new(0.0, -1.0), 1e-12));
    }

    #[test]
    fn c4_closed_form() {
        let c4 = CayleyGraph::circulant(4, &[1, 3]).unwrap();
        let amp = amplitudes(&c4, &z(4, 0), PI / 2.0).unwrap();
        for (c, v) in amp.iter().enumerate() {
            let want = if c == 2 { -1.0 } else { 0.0 };
            assert!(close(*v, Complex64::new(want, 0.0), 1e-12), "{c}: {v}");
        }
        let p = pair_profile(&c4, &z(4, 0), &z(4, 2), PI / 2.0).unwrap();
        assert!(p.alpha.norm() < 1e-12);
        assert!(close(p.beta, Complex64::new(-1.0, 0.0), 1e-12));
        assert!(p.leakage.abs() < 1e-12);
        for t in [0.3, 1.1, 2.9] {
            let p = pair_profile(&c4, &z(4, 0), &z(4, 2), t).unwrap();
            let c = (2.0 * t).cos();
            assert!(close(p.alpha, Complex64::new((c + 1.0) / 2.0, 0.0), 1e-12));
            assert!(close(p.beta, Complex64::new((c - 1.0) / 2.0, 0.0), 1e-12));
        }
    }

    #[test]
    fn profile_at_zero() {
        let g = CayleyGraph::circulant(9, &[1, 2, 7, 8]).unwrap();
        let p = pair_profile(&g, &z(9, 0), &z(9, 4), 0.0).unwrap();
        assert!(close(p.alpha, Complex64::new(1.0, 0.0), 1e-12));
        assert!(p.beta.norm() < 1e-12);
        assert!(p.leakage.abs() < 1e-12);
        assert!(p.gamma.is_none());
        assert_eq!(
            pair_profile(&g, &z(9, 3), &z(9, 3), 1.0).unwrap_err(),
            Error::SameVertex
        );
    }

    #[test]
    fn gamma_has_alpha_modulus() {
        let g = CayleyGraph::circulant(6, &[1, 5]).unwrap();
        let p = pair_profile(&g, &z(6, 0), &z(6, 3), 0.7).unwrap();
        assert!((p.gamma.unwrap().norm() - p.alpha.norm()).abs() < 1e-12);
    }

    #[test]
    fn oracle_matches_closed_form_c4() {
        let c4 = CayleyGraph::circulant(4, &[1, 3]).unwrap();
        let exact = amplitudes(&c4, &z(4, 0), PI / 2.0).unwrap();
        let oracle = matrix_exponential_oracle(&c4, &z(4, 0), PI / 2.0).unwrap();
        for (x, y) in exact.iter().zip(&oracle) {
            assert!(close(*x, *y, 1e-10));
        }
        let at_zero = matrix_exponential_oracle(&c4, &z(4, 1), 0.0).unwrap();
        assert!(close(at_zero[1], Complex64::new(1.0, 0.0), 1e-14));
        let big = CayleyGraph::circulant(600, &[1, 599]).unwrap();
        assert!(matches!(
            matrix_exponential_oracle(&big, &z(600, 0), 1.0),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn search_finds_c4_transfer() {
        let c4 = CayleyGraph::circulant(4, &[1, 3]).unwrap();
        let cfg = SearchConfig {
            t_max: 20.0,
            grid_points: 20_000,
            ..Default::default()
        };
        let hits = search_times(&c4, &z(4, 0), &z(4, 2), &cfg).unwrap();
        let best = hits[0];
        assert!(best.leakage < 1e-12, "{best:?}");
        let k = (best.t - PI / 2.0) / PI;
        assert!((k - k.round()).abs() < 1e-6);
        let (q, at) = pgst_quality(&c4, &z(4, 0), &z(4, 2), &cfg).unwrap();
        assert!(q >= 1.0 - 1e-10, "{q} at {at:?}");
    }

    #[test]
    fn csv_export_is_sorted() {
        let c4 = CayleyGraph::circulant(4, &[1, 3]).unwrap();
        let ps: Vec<PairProfile> = [1.0, PI / 2.0, 0.5]
            .iter()
            .map(|&t| pair_profile(&c4, &z(4, 0), &z(4, 2), t).unwrap())
            .collect();
        let mut buf = Vec::new();
        write_scan_csv(&ps, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "t,alpha_re,alpha_im,beta_re,beta_im,leakage");
        assert_eq!(lines.len(), 4);
        assert!(lines[1].starts_with("1.5707963267948966e0"));
    }
}
