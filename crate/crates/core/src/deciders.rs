//! Exact FR and PGFR decisions between two vertices of an abelian Cayley graph.
//!
//! PGFR between `a` and `b` holds iff `b - a` has order two and the functional
//! `l -> sum_{r in X_2} l_r` never takes the value `+-1` on the lattice of
//! integer relations `sum_{r >= 1} l_r (lambda_r - lambda_0) = 0`. The values
//! it does take form a subgroup `dZ`, so the test reduces to `d != 1`.
//!
//! FR additionally asks for a single time `t` at which every difference of
//! eigenvalues within a parity class is a multiple of `2 pi / t`.

use std::collections::HashMap;
use std::f64::consts::{PI, TAU};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::cyclotomic::CyclotomicInteger;
use crate::error::{Error, Result};
use crate::graphs::CayleyGraph;
use crate::groups::{AbelianGroup, GroupElement};
use crate::lattice::{functional_image_gcd, functional_witness, kernel_basis, IntegerMatrix, LatticeBasis};

/// Character classes of `b - a` when it has order two.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CospectralPartition {
    /// Indices `r` with `chi_r(b - a) = 1`.
    pub x1: Vec<usize>,
    /// Indices `r` with `chi_r(b - a) = -1`.
    pub x2: Vec<usize>,
}

impl CospectralPartition {
    pub fn contains_x2(&self, r: usize) -> bool {
        self.x2.binary_search(&r).is_ok()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PgfrFailure {
    NotCospectral,
    /// `ell[r - 1]` for `r = 1..n`; satisfies the eigenvalue relation and has
    /// `sum_{r in X_2} ell_r = +-1`.
    RelationWitness {
        ell: Vec<BigInt>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PgfrVerdict {
    Yes { d: BigInt },
    No(PgfrFailure),
}

impl PgfrVerdict {
    pub fn is_yes(&self) -> bool {
        matches!(self, PgfrVerdict::Yes { .. })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum FrFailure {
    NotOrderTwo,
    OddFactor,
    /// Two pairs of `N` whose eigenvalue differences are not rationally related.
    IncommensurableDifferences {
        pair: [(usize, usize); 2],
    },
    /// Every admissible time has `beta = 0`, so the walk never leaves `a` for `b`.
    VanishingBeta,
}

#[derive(Debug, Clone, PartialEq)]
pub enum FrVerdict {
    Yes { t_witness: f64, description: String },
    No(FrFailure),
}

impl FrVerdict {
    pub fn is_yes(&self) -> bool {
        matches!(self, FrVerdict::Yes { .. })
    }
}

fn distinct_pair(group: &AbelianGroup, a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
    let diff = group.sub(b, a)?;
    if diff == group.identity() {
        return Err(Error::SameVertex);
    }
    Ok(diff)
}

pub fn cospectral_partition(
    g: &CayleyGraph,
    a: &GroupElement,
    b: &GroupElement,
) -> Result<Option<CospectralPartition>> {
    let group = g.group();
    let diff = distinct_pair(group, a, b)?;
    if group.order_of(&diff)? != 2 {
        return Ok(None);
    }
    let half = group.exponent() / 2;
    let (x2, x1): (Vec<usize>, Vec<usize>) =
        (0..group.order()).partition(|&r| group.character_exponent(r, &diff).expect("valid index") == half);
    Ok(Some(CospectralPartition { x1, x2 }))
}

/// Columns `coords(lambda_r - lambda_0)` for `r = 1..n`.
pub fn relation_matrix(g: &CayleyGraph) -> IntegerMatrix {
    let spectrum = &g.spectrum().exact;
    let l0 = &spectrum[0];
    let columns: Vec<Vec<BigInt>> = spectrum[1..]
        .iter()
        .map(|l| l.sub(l0).expect("same conductor").coords().to_vec())
        .collect();
    let rows = l0.coords().len();
    IntegerMatrix::from_columns(rows, &columns).expect("consistent column lengths")
}

/// Integer relations among the eigenvalue differences `lambda_r - lambda_0`.
pub fn relation_lattice(g: &CayleyGraph) -> LatticeBasis {
    kernel_basis(&relation_matrix(g))
}

/// Indicator of `X_2` on indices `1..n`.
pub fn x2_functional(partition: &CospectralPartition, n: usize) -> Vec<BigInt> {
    (1..n)
        .map(|r| {
            if partition.contains_x2(r) {
                BigInt::one()
            } else {
                BigInt::zero()
            }
        })
        .collect()
}

/// True iff `sum_{r >= 1} ell_r (lambda_r - lambda_0) = 0` exactly.
pub fn relation_holds(g: &CayleyGraph, ell: &[BigInt]) -> bool {
    let spectrum = &g.spectrum().exact;
    if ell.len() + 1 != spectrum.len() {
        return false;
    }
    let mut acc = CyclotomicInteger::zero(spectrum[0].conductor());
    for (c, l) in ell.iter().zip(&spectrum[1..]) {
        if c.is_zero() {
            continue;
        }
        let diff = l.sub(&spectrum[0]).expect("same conductor");
        acc = acc.add(&diff.scale(c.clone())).expect("same conductor");
    }
    acc.is_zero()
}

/// A relation of the shape `e_r - e_s` or `e_r` hitting `+-1`, when one exists.
fn short_witness(g: &CayleyGraph, partition: &CospectralPartition) -> Option<Vec<BigInt>> {
    let spectrum = &g.spectrum().exact;
    let n = spectrum.len();
    let unit = |idx: &[(usize, i64)]| {
        let mut ell = vec![BigInt::zero(); n - 1];
        for &(r, c) in idx {
            ell[r - 1] = BigInt::from(c);
        }
        ell
    };
    for &r in &partition.x2 {
        if spectrum[r] == spectrum[0] {
            return Some(unit(&[(r, 1)]));
        }
        if let Some(&s) = partition.x1.iter().find(|&&s| s != 0 && spectrum[s] == spectrum[r]) {
            let (lo, hi) = if r < s { ((r, 1), (s, -1)) } else { ((s, -1), (r, 1)) };
            return Some(unit(&[lo, hi]));
        }
    }
    None
}

pub fn decide_pgfr(g: &CayleyGraph, a: &GroupElement, b: &GroupElement) -> Result<PgfrVerdict> {
    let Some(partition) = cospectral_partition(g, a, b)? else {
        return Ok(PgfrVerdict::No(PgfrFailure::NotCospectral));
    };
    let basis = relation_lattice(g);
    let f = x2_functional(&partition, g.order());
    let d = functional_image_gcd(&basis, &f)?;
    if !d.is_one() {
        return Ok(PgfrVerdict::Yes { d });
    }
    let ell = match short_witness(g, &partition) {
        Some(ell) => ell,
        None => functional_witness(&basis, &f)?.expect("d = 1 has a witness").1,
    };
    debug_assert!(relation_holds(g, &ell));
    Ok(PgfrVerdict::No(PgfrFailure::RelationWitness { ell }))
}

/// One verdict per involution `b`, with `a` the identity.
pub fn decide_pgfr_from_identity(g: &CayleyGraph) -> Result<Vec<(GroupElement, PgfrVerdict)>> {
    let group = g.group();
    let a = group.identity();
    group
        .elements()
        .filter(|x| group.order_of(x).expect("valid element") == 2)
        .map(|b| decide_pgfr(g, &a, &b).map(|v| (b, v)))
        .collect()
}

/// Whether `wt(2 (b - a)(x - y) / n)` is an even integer, using unreduced
/// integer representatives. `diff` and the elements are residues in `[0, n_j)`.
fn in_pair_set(group: &AbelianGroup, diff: &[u64], x: &[u64], y: &[u64]) -> bool {
    // numerator over the common denominator L
    let l = group.exponent() as i128;
    let num: i128 = diff
        .iter()
        .zip(x.iter().zip(y))
        .zip(group.orders())
        .map(|((&z, (&xr, &yr)), &n)| 2 * z as i128 * (xr as i128 - yr as i128) * (l / n as i128))
        .sum();
    num.rem_euclid(2 * l) == 0
}

/// The pair set `N`: all `(r, l)` with `a_r > a_l` whose scaled weight is even.
pub fn fr_pair_set(group: &AbelianGroup, a: &GroupElement, b: &GroupElement) -> Result<Vec<(usize, usize)>> {
    let diff = distinct_pair(group, a, b)?;
    let elems: Vec<GroupElement> = group.elements().collect();
    let mut out = Vec::new();
    // mixed-radix enumeration is lexicographic, so a_r > a_l iff r > l
    for (r, x) in elems.iter().enumerate() {
        for (l, y) in elems[..r].iter().enumerate() {
            if in_pair_set(group, diff.residues(), x.residues(), y.residues()) {
                out.push((r, l));
            }
        }
    }
    Ok(out)
}

fn rational_gcd(a: &BigRational, b: &BigRational) -> BigRational {
    let num = a.numer().gcd(b.numer());
    let den = a.denom().lcm(b.denom());
    BigRational::new(num, den)
}

pub fn decide_fr(g: &CayleyGraph, a: &GroupElement, b: &GroupElement) -> Result<FrVerdict> {
    let group = g.group();
    let diff = distinct_pair(group, a, b)?;
    if group.order_of(&diff)? != 2 {
        return Ok(FrVerdict::No(FrFailure::NotOrderTwo));
    }
    if diff
        .residues()
        .iter()
        .zip(group.orders())
        .any(|(&z, &n)| z != 0 && n % 2 == 1)
    {
        return Ok(FrVerdict::No(FrFailure::OddFactor));
    }
    let spectrum = g.spectrum();
    let exact = &spectrum.exact;

    // group indices by exact eigenvalue so each distinct difference is built once
    let mut ids: HashMap<&CyclotomicInteger, usize> = HashMap::new();
    let value_id: Vec<usize> = exact
        .iter()
        .map(|l| {
            let next = ids.len();
            *ids.entry(l).or_insert(next)
        })
        .collect();
    let mut seen: HashMap<(usize, usize), ()> = HashMap::new();
    let mut deltas: Vec<((usize, usize), CyclotomicInteger)> = Vec::new();
    for (r, l) in fr_pair_set(group, a, b)? {
        let key = (value_id[r], value_id[l]);
        if key.0 == key.1 || seen.insert(key, ()).is_some() {
            continue;
        }
        deltas.push(((r, l), exact[r].sub(&exact[l])?));
    }

    // mu: an eigenvalue from the X_2 class, e.g. the character at b - a itself
    let x2_index = (0..group.order())
        .find(|&r| group.character_exponent(r, &diff).expect("valid") == group.exponent() / 2)
        .expect("order-two element has a non-trivial class");
    let gap = exact[0].sub(&exact[x2_index])?;

    let Some(((p0, delta0), rest)) = deltas.split_first() else {
        if gap.is_zero() {
            return Ok(FrVerdict::No(FrFailure::VanishingBeta));
        }
        let gap_f = gap.evaluate_float().re.abs();
        return Ok(FrVerdict::Yes {
            t_witness: PI / gap_f,
            description: format!(
                "all N-differences vanish; t = pi / |lambda_0 - lambda_{x2_index}| = pi / {gap_f:.17e}"
            ),
        });
    };
    let mut scale = BigRational::one();
    for (pair, delta) in rest {
        match delta0.ratio_of(delta)? {
            Some(c) => scale = rational_gcd(&scale, &c),
            None => {
                return Ok(FrVerdict::No(FrFailure::IncommensurableDifferences {
                    pair: [*p0, *pair],
                }));
            }
        }
    }
    // admissible times are t = 2 pi k / (|delta_0| * scale), k >= 1
    if let Some(c) = delta0.ratio_of(&gap)? {
        if (c / &scale).is_integer() {
            return Ok(FrVerdict::No(FrFailure::VanishingBeta));
        }
    }
    let delta0_f = delta0.evaluate_float().re.abs();
    let scale_f = scale.numer().to_f64().unwrap() / scale.denom().to_f64().unwrap();
    let t_witness = TAU / (delta0_f * scale_f);
    let delta_text = match delta0.as_integer() {
        Some(v) => v.to_string(),
        None => format!("{}", delta0.evaluate_float().re),
    };
    let description = format!(
        "delta_0 = lambda_{} - lambda_{} = {delta_text}; every N-difference is an integer multiple of {scale} * delta_0; t = 2 pi / {}",
        p0.0,
        p0.1,
        delta0_f * scale_f
    );
    Ok(FrVerdict::Yes { t_witness, description })
}
