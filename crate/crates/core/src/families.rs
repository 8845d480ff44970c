//! Named graph families and the labelled regression corpus.

use std::fmt;

use num_integer::Integer;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::deciders::{decide_fr, decide_pgfr, FrVerdict, PgfrVerdict};
use crate::error::{Error, Result};
use crate::graphs::CayleyGraph;
use crate::groups::{AbelianGroup, GroupElement};

/// A graph together with its designated vertex pair and, where the family
/// comes with an arithmetic side condition, whether that condition holds.
#[derive(Debug, Clone, PartialEq)]
pub struct FamilyInstance {
    pub graph: CayleyGraph,
    pub pair: Option<(GroupElement, GroupElement)>,
    pub hypothesis: Option<bool>,
}

impl FamilyInstance {
    fn plain(graph: CayleyGraph) -> Self {
        Self {
            graph,
            pair: None,
            hypothesis: None,
        }
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

fn odd_prime(p: u64) -> Result<()> {
    if p % 2 == 1 && is_prime(p) {
        Ok(())
    } else {
        Err(Error::InvalidFamily(format!("{p} is not an odd prime")))
    }
}

fn checked_pow(p: u64, s: u32) -> Result<u64> {
    p.checked_pow(s)
        .filter(|&v| v <= u32::MAX as u64)
        .ok_or_else(|| Error::InvalidFamily(format!("{p}^{s} is too large")))
}

fn symmetric_closure(n: u64, ys: impl IntoIterator<Item = u64>) -> Vec<u64> {
    let mut s: Vec<u64> = ys.into_iter().flat_map(|y| [y % n, (n - y % n) % n]).collect();
    s.sort_unstable();
    s.dedup();
    s
}

/// Odd entries among the distinct values of `ys`, as listed.
fn odd_count(ys: &[u64]) -> u64 {
    let mut v = ys.to_vec();
    v.sort_unstable();
    v.dedup();
    v.iter().filter(|&&y| y % 2 == 1).count() as u64
}

pub fn cycle(n: u64) -> Result<CayleyGraph> {
    if n < 3 {
        return Err(Error::InvalidFamily(format!("cycle needs n >= 3, got {n}")));
    }
    CayleyGraph::circulant(n, &[1, n - 1])
}

pub fn complement_cycle(n: u64) -> Result<CayleyGraph> {
    Ok(cycle(n)?.complement())
}

pub fn complete(n: u64) -> Result<CayleyGraph> {
    if n < 2 {
        return Err(Error::InvalidFamily(format!("complete graph needs n >= 2, got {n}")));
    }
    CayleyGraph::circulant(n, &(1..n).collect::<Vec<_>>())
}

/// `Cay(Z_n, {+-p^k : k in ks})`, with `ks` strictly increasing from 0.
pub fn power_jumps(n: u64, p: u64, ks: &[u32]) -> Result<CayleyGraph> {
    if ks.first() != Some(&0) || ks.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidFamily(format!(
            "exponents must start at 0 and increase strictly: {ks:?}"
        )));
    }
    let powers = ks.iter().map(|&k| checked_pow(p, k)).collect::<Result<Vec<_>>>()?;
    if powers.iter().any(|&y| 2 * y >= n) {
        return Err(Error::InvalidFamily(format!(
            "powers of {p} must stay below n/2 = {}",
            n / 2
        )));
    }
    CayleyGraph::circulant(n, &symmetric_closure(n, powers))
}

/// `Cay(Z_{2p^s}, {+-p^k})`; the flag is `gcd(p, |ks|) = 1`.
pub fn power_circulant(p: u64, s: u32, ks: &[u32]) -> Result<FamilyInstance> {
    odd_prime(p)?;
    if s == 0 || ks.last().is_some_and(|&k| k >= s) {
        return Err(Error::InvalidFamily(format!("exponents must lie in [0, {s}): {ks:?}")));
    }
    let n = 2 * checked_pow(p, s)?;
    let graph = power_jumps(n, p, ks)?;
    let hypothesis = p.gcd(&(ks.len() as u64)) == 1;
    Ok(FamilyInstance {
        graph,
        pair: Some(antipodal(n)?),
        hypothesis: Some(hypothesis),
    })
}

/// `Cay(Z_{2p^s}, {+-y})`; the flag is `gcd(p, #odd y) = 1`.
pub fn jump_circulant(p: u64, s: u32, ys: &[u64]) -> Result<FamilyInstance> {
    odd_prime(p)?;
    if s == 0 {
        return Err(Error::InvalidFamily("s must be at least 1".into()));
    }
    let n = 2 * checked_pow(p, s)?;
    if ys.is_empty() || ys.iter().any(|&y| y == 0 || y >= n) {
        return Err(Error::InvalidFamily(format!("jumps must lie in (0, {n}): {ys:?}")));
    }
    let odd = odd_count(ys);
    let graph = CayleyGraph::circulant(n, &symmetric_closure(n, ys.iter().copied()))?;
    Ok(FamilyInstance {
        graph,
        pair: Some(antipodal(n)?),
        hypothesis: Some(p.gcd(&odd) == 1),
    })
}

/// `Cay(Z_{2p^s}, {1, 3, p^s - 3, 2p^s - 1, 2p^s - 3, p^s + 3})` for primes `p > 3`.
pub fn six_jump_circulant(p: u64, s: u32) -> Result<FamilyInstance> {
    if p <= 3 || !is_prime(p) || s == 0 {
        return Err(Error::InvalidFamily(format!(
            "need a prime p > 3 and s >= 1, got p={p}, s={s}"
        )));
    }
    let q = checked_pow(p, s)?;
    let n = 2 * q;
    let graph = CayleyGraph::circulant(n, &[1, 3, q - 3, n - 1, n - 3, q + 3])?;
    Ok(FamilyInstance {
        graph,
        pair: Some(antipodal(n)?),
        hypothesis: None,
    })
}

/// Complement of `Cay(Z_{2p^s}^h, {(+-y, 0, ..., 0)})` with the pair `0, (p^s, 0, ..., 0)`.
/// The flag is `gcd(p, #odd y) = 1`.
pub fn axis_complement(p: u64, s: u32, h: usize, ys: &[u64]) -> Result<FamilyInstance> {
    odd_prime(p)?;
    if s < 2 || h < 2 {
        return Err(Error::InvalidFamily(format!("need s > 1 and h > 1, got s={s}, h={h}")));
    }
    let q = checked_pow(p, s)?;
    let n = 2 * q;
    if ys.is_empty() || ys.iter().any(|&y| y == 0 || y >= n) {
        return Err(Error::InvalidFamily(format!("entries must lie in (0, {n}): {ys:?}")));
    }
    let group = AbelianGroup::new(&vec![n; h])?;
    let axis = |y: u64| {
        let mut v = vec![0; h];
        v[0] = y;
        group.element(&v)
    };
    let base = symmetric_closure(n, ys.iter().copied());
    let odd = odd_count(ys);
    let s_set = base.iter().map(|&y| axis(y)).collect::<Result<Vec<_>>>()?;
    let graph = CayleyGraph::new(group.clone(), s_set)?.complement();
    let pair = (group.identity(), axis(q)?);
    Ok(FamilyInstance {
        graph,
        pair: Some(pair),
        hypothesis: Some(p.gcd(&odd) == 1),
    })
}

/// Complement of `Cay(Z_2 + Z_p^s, {(1,0,..), (0,k,0,..) : 0 < k < p})`, pair `0, (1, 0, ..)`.
pub fn elementary_complement(p: u64, s: usize) -> Result<FamilyInstance> {
    odd_prime(p)?;
    if s < 2 {
        return Err(Error::InvalidFamily(format!("need s > 1, got {s}")));
    }
    let mut orders = vec![2];
    orders.extend(std::iter::repeat_n(p, s));
    let group = AbelianGroup::new(&orders)?;
    let unit = |i: usize, v: u64| {
        let mut x = vec![0; s + 1];
        x[i] = v;
        group.element(&x)
    };
    let mut base = vec![unit(0, 1)?];
    for k in 1..p {
        base.push(unit(1, k)?);
    }
    let graph = CayleyGraph::new(group.clone(), base)?.complement();
    Ok(FamilyInstance {
        graph,
        pair: Some((group.identity(), unit(0, 1)?)),
        hypothesis: None,
    })
}

/// Complement of `Cay(Z_2^m, {(1,1,1,0,..), (0,1,1,0,..), (1,1,0,0,..)})`, pair `0, (1, .., 1)`.
pub fn cube_complement(m: usize) -> Result<FamilyInstance> {
    if m <= 3 {
        return Err(Error::InvalidFamily(format!("need m > 3, got {m}")));
    }
    let group = AbelianGroup::new(&vec![2; m])?;
    let pad = |head: &[u64]| {
        let mut v = head.to_vec();
        v.resize(m, 0);
        group.element(&v)
    };
    let base = vec![pad(&[1, 1, 1])?, pad(&[0, 1, 1])?, pad(&[1, 1, 0])?];
    let graph = CayleyGraph::new(group.clone(), base)?.complement();
    let ones = group.element(&vec![1; m])?;
    Ok(FamilyInstance {
        graph,
        pair: Some((group.identity(), ones)),
        hypothesis: None,
    })
}

fn antipodal(n: u64) -> Result<(GroupElement, GroupElement)> {
    let g = AbelianGroup::cyclic(n)?;
    Ok((g.identity(), g.element(&[n / 2])?))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Expectation {
    Yes,
    No,
    Unlabeled,
}

impl Expectation {
    pub fn check(self, observed: bool) -> Option<bool> {
        match self {
            Expectation::Yes => Some(observed),
            Expectation::No => Some(!observed),
            Expectation::Unlabeled => None,
        }
    }
}

impl fmt::Display for Expectation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Expectation::Yes => "yes",
            Expectation::No => "no",
            Expectation::Unlabeled => "unlabeled",
        })
    }
}

#[derive(Debug, Clone)]
pub struct CorpusCase {
    pub name: String,
    pub graph: CayleyGraph,
    pub pair: (GroupElement, GroupElement),
    pub expect_pgfr: Expectation,
    pub expect_fr: Expectation,
    pub provenance: String,
    /// Coarse grouping used for filtering, e.g. `cycles` or `complete`.
    pub category: String,
    pub hypothesis: Option<bool>,
    /// Set on cases kept only as state-transfer probes.
    pub pgst_probe: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ManifestEntry {
    pub name: String,
    pub orders: Vec<u64>,
    pub connection: Vec<Vec<u64>>,
    pub pair: [Vec<u64>; 2],
    pub expect_pgfr: Expectation,
    pub expect_fr: Expectation,
    pub provenance: String,
    pub category: String,
}

impl CorpusCase {
    pub fn manifest_entry(&self) -> ManifestEntry {
        ManifestEntry {
            name: self.name.clone(),
            orders: self.graph.group().orders().to_vec(),
            connection: self.graph.connection().iter().map(|y| y.residues().to_vec()).collect(),
            pair: [self.pair.0.residues().to_vec(), self.pair.1.residues().to_vec()],
            expect_pgfr: self.expect_pgfr,
            expect_fr: self.expect_fr,
            provenance: self.provenance.clone(),
            category: self.category.clone(),
        }
    }

    /// Rebuilds a case from its manifest entry.
    pub fn from_manifest(entry: &ManifestEntry) -> Result<Self> {
        let group = AbelianGroup::new(&entry.orders)?;
        let connection = entry
            .connection
            .iter()
            .map(|y| group.element(y))
            .collect::<Result<Vec<_>>>()?;
        let graph = CayleyGraph::new(group.clone(), connection)?;
        let pair = (group.element(&entry.pair[0])?, group.element(&entry.pair[1])?);
        Ok(Self {
            name: entry.name.clone(),
            graph,
            pair,
            expect_pgfr: entry.expect_pgfr,
            expect_fr: entry.expect_fr,
            provenance: entry.provenance.clone(),
            category: entry.category.clone(),
            hypothesis: None,
            pgst_probe: false,
        })
    }

    pub fn is_labeled(&self) -> bool {
        self.expect_pgfr != Expectation::Unlabeled || self.expect_fr != Expectation::Unlabeled
    }
}

#[derive(Debug, Clone)]
pub struct CaseOutcome {
    pub pgfr: PgfrVerdict,
    pub fr: FrVerdict,
    pub pgfr_ok: Option<bool>,
    pub fr_ok: Option<bool>,
}

impl CaseOutcome {
    /// False only when a labelled expectation disagrees with the deciders.
    pub fn passed(&self) -> bool {
        self.pgfr_ok != Some(false) && self.fr_ok != Some(false)
    }
}

pub fn evaluate_case(case: &CorpusCase) -> Result<CaseOutcome> {
    let (a, b) = &case.pair;
    let pgfr = decide_pgfr(&case.graph, a, b)?;
    let fr = decide_fr(&case.graph, a, b)?;
    Ok(CaseOutcome {
        pgfr_ok: case.expect_pgfr.check(pgfr.is_yes()),
        fr_ok: case.expect_fr.check(fr.is_yes()),
        pgfr,
        fr,
    })
}

/// Evaluates cases in parallel; results keep the input order.
pub fn evaluate_corpus(cases: &[CorpusCase]) -> Vec<Result<CaseOutcome>> {
    cases.par_iter().map(evaluate_case).collect()
}

struct Builder {
    cases: Vec<CorpusCase>,
    category: &'static str,
}

impl Builder {
    fn section(&mut self, category: &'static str) {
        self.category = category;
    }

    fn push(
        &mut self,
        name: impl Into<String>,
        inst: Result<FamilyInstance>,
        pgfr: Expectation,
        fr: Expectation,
        provenance: &'static str,
    ) -> &mut CorpusCase {
        let inst = inst.expect("corpus parameters are valid");
        let pair = inst.pair.clone().unwrap_or_else(|| {
            let g = inst.graph.group();
            let n = g.order() as u64;
            (g.identity(), g.element(&[n / 2]).expect("cyclic corpus graph"))
        });
        self.cases.push(CorpusCase {
            name: name.into(),
            graph: inst.graph,
            pair,
            expect_pgfr: pgfr,
            expect_fr: fr,
            provenance: provenance.to_string(),
            category: self.category.to_string(),
            hypothesis: inst.hypothesis,
            pgst_probe: false,
        });
        self.cases.last_mut().expect("just pushed")
    }

    fn graph(
        &mut self,
        name: impl Into<String>,
        g: Result<CayleyGraph>,
        pgfr: Expectation,
        fr: Expectation,
        provenance: &'static str,
    ) -> &mut CorpusCase {
        self.push(name, g.map(FamilyInstance::plain), pgfr, fr, provenance)
    }
}

const CYCLE_PGFR: &str =
    "\"a cycle exhibits PGFR if and only if the number of vertices is of the form 2p^s\"; no revival beyond 4 or 6 vertices";
const FIRST_NONEXISTENCE: &str =
    "2pq | n: \"if ... exhibits PGFR, then there exists y in S such that either p | y or q | y\"";
const SECOND_NONEXISTENCE: &str = "n = 2^h p^s, h > 1, S = {+-p^k}: \"does not exhibit PGFR\"";

/// The labelled regression corpus plus a few unlabelled exploratory cases.
pub fn corpus() -> Vec<CorpusCase> {
    use Expectation::{No, Unlabeled, Yes};
    let mut b = Builder {
        cases: Vec::new(),
        category: "cycles",
    };

    for n in [4u64, 6, 8, 10, 18, 50] {
        let fr = if n == 4 || n == 6 { Yes } else { No };
        let prov = match n {
            4 => "perfect state transfer between antipodes of C4 at t = pi/2",
            6 => "\"either 4 or 6\"; cycle on 2p^s vertices",
            8 => "pretty good state transfer on power-of-two cycles; no revival beyond 4 or 6 vertices",
            _ => CYCLE_PGFR,
        };
        b.graph(format!("C{n}"), cycle(n), Yes, fr, prov);
    }
    for n in [30u64, 42, 60] {
        b.graph(format!("C{n}"), cycle(n), No, No, FIRST_NONEXISTENCE);
    }
    for n in [12u64, 24, 36] {
        b.graph(format!("C{n}"), cycle(n), No, No, SECOND_NONEXISTENCE);
    }
    b.section("circulants");
    b.graph(
        "power-jumps(36,3,[0,1])",
        power_jumps(36, 3, &[0, 1]),
        No,
        Unlabeled,
        SECOND_NONEXISTENCE,
    );

    for (p, s) in [(3u64, 2u32), (5, 2)] {
        let tag = format!("power-circulant({p},{s},[0,1])");
        b.push(
            tag.clone(),
            power_circulant(p, s, &[0, 1]),
            Yes,
            Unlabeled,
            "S = {+-p^k}, gcd(p, m + 1) = 1: \"exhibits PGFR\"",
        );
        let comp = power_circulant(p, s, &[0, 1]).map(|i| FamilyInstance {
            graph: i.graph.complement(),
            ..i
        });
        b.push(
            format!("complement-{tag}"),
            comp,
            Yes,
            Unlabeled,
            "\"the complement of Cay(Z_n, S) exhibits PGFR\"",
        );
    }

    b.section("complements");
    for n in [6u64, 18, 50] {
        b.graph(
            format!("complement-C{n}"),
            complement_cycle(n),
            Yes,
            Unlabeled,
            "n = 2p^s: \"the graph C_n-bar exhibits PGFR\"",
        );
    }
    b.graph(
        "complement-C10",
        complement_cycle(10),
        Yes,
        No,
        "\"does not exhibit FR if n is even and n >= 8\"; complement of C_{2p^s} has PGFR",
    );
    b.graph(
        "complement-C30",
        complement_cycle(30),
        No,
        Unlabeled,
        "2pq | n: \"C_n-bar does not exhibit PGFR\"",
    );
    for n in [24u64, 48] {
        b.graph(
            format!("complement-C{n}"),
            complement_cycle(n),
            No,
            Unlabeled,
            "n = 2^h p^s, h > 2: \"C_n-bar does not exhibit PGFR\"",
        );
    }

    b.section("circulants");
    b.push(
        "jump-circulant(5,1,[1,3])",
        jump_circulant(5, 1, &[1, 3]),
        Yes,
        Unlabeled,
        "gcd(p, l) = 1: \"Cay(Z_n, S) and its complement exhibit PGFR\"",
    );
    let comp = jump_circulant(5, 1, &[1, 3]).map(|i| FamilyInstance {
        graph: i.graph.complement(),
        ..i
    });
    b.push(
        "complement-jump-circulant(5,1,[1,3])",
        comp,
        Yes,
        Unlabeled,
        "\"and its complement exhibit PGFR\"",
    );

    b.push(
        "six-jump(5,1)",
        six_jump_circulant(5, 1),
        Yes,
        No,
        "\"exhibits PGFR that fails to exhibit PGST and FR\"",
    )
    .pgst_probe = true;
    b.push(
        "six-jump(7,1)",
        six_jump_circulant(7, 1),
        Yes,
        Unlabeled,
        "\"exhibits PGFR that fails to exhibit PGST and FR\"",
    );

    b.section("complete");
    b.graph(
        "K2",
        complete(2),
        Yes,
        Yes,
        "\"K_n exhibits PGFR if and only if n = 2\"; perfect state transfer at t = pi/2",
    );
    for n in [4u64, 6, 8] {
        b.graph(
            format!("K{n}"),
            complete(n),
            No,
            Unlabeled,
            "\"K_n exhibits PGFR if and only if n = 2\"",
        );
    }

    b.section("products");
    b.push(
        "axis-complement(3,2,2,[1])",
        axis_complement(3, 2, 2, &[1]),
        Yes,
        Unlabeled,
        "\"exhibits PGFR between the vertices a and b\", b - a = (p^s, 0, ..., 0)",
    );
    for (p, s) in [(3u64, 2usize), (5, 2)] {
        b.push(
            format!("elementary-complement({p},{s})"),
            elementary_complement(p, s),
            Yes,
            Yes,
            "\"exhibits FR between the vertices a and b\"; \"For t = 2pi/p\"",
        );
    }
    for m in [4usize, 5] {
        b.push(
            format!("cube-complement({m})"),
            cube_complement(m),
            No,
            No,
            "\"does not exhibit PGFR between a and b\"",
        );
    }

    b.section("exploratory");
    b.graph(
        "complement-C36",
        complement_cycle(36),
        Unlabeled,
        Unlabeled,
        "n = 4p^s: \"it is not known whether the graph C_n-bar exhibits PGFR or not\"",
    );
    b.graph(
        "complement-C12",
        complement_cycle(12),
        Unlabeled,
        Unlabeled,
        "n = 4p^s: \"it is not known whether the graph C_n-bar exhibits PGFR or not\"",
    );
    b.graph(
        "complement-C18-pgst",
        complement_cycle(18),
        Unlabeled,
        Unlabeled,
        "complements of C_{2p^s} do not exhibit PGST",
    )
    .pgst_probe = true;
    b.push(
        "axis-complement(3,2,2,[1,3,15])",
        axis_complement(3, 2, 2, &[1, 3, 15]),
        Unlabeled,
        Unlabeled,
        "hypothesis gcd(p, l) = 1 fails; exploratory",
    );

    b.cases
}

/// Cases whose name contains `filter` or whose category equals it.
pub fn filter_cases(cases: Vec<CorpusCase>, filter: Option<&str>) -> Vec<CorpusCase> {
    match filter {
        None => cases,
        Some(f) => cases
            .into_iter()
            .filter(|c| c.category == f || c.name.contains(f))
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn residues(g: &CayleyGraph) -> Vec<u64> {
        g.connection().iter().map(|y| y.residues()[0]).collect()
    }

    #[test]
    fn basic_families() {
        assert_eq!(residues(&cycle(6).unwrap()), vec![1, 5]);
        assert_eq!(residues(&complement_cycle(6).unwrap()), vec![2, 3, 4]);
        assert_eq!(residues(&complete(2).unwrap()), vec![1]);
        assert!(cycle(2).is_err());
        assert!(complete(1).is_err());
    }

    #[test]
    fn power_circulant_examples() {
        let c6 = power_circulant(3, 1, &[0]).unwrap();
        assert_eq!(c6.graph, cycle(6).unwrap());
        let g = power_circulant(3, 2, &[0, 1]).unwrap();
        assert_eq!(residues(&g.graph), vec![1, 3, 15, 17]);
        assert_eq!(g.hypothesis, Some(true));
        assert_eq!(
            residues(&power_circulant(5, 2, &[0, 1]).unwrap().graph),
            vec![1, 5, 45, 49]
        );
        assert_eq!(power_circulant(3, 3, &[0, 1, 2]).unwrap().hypothesis, Some(false));
        assert!(power_circulant(3, 2, &[1]).is_err());
        assert!(power_circulant(3, 2, &[0, 2]).is_err());
        assert!(power_circulant(9, 1, &[0]).is_err());
    }

    #[test]
    fn jump_circulant_examples() {
        let g = jump_circulant(5, 1, &[1, 3]).unwrap();
        assert_eq!(residues(&g.graph), vec![1, 3, 7, 9]);
        assert_eq!(g.hypothesis, Some(true));
        let g = jump_circulant(3, 2, &[1, 2]).unwrap();
        assert_eq!(residues(&g.graph), vec![1, 2, 16, 17]);
        assert_eq!(g.hypothesis, Some(true));
        assert_eq!(jump_circulant(3, 2, &[1, 5, 7]).unwrap().hypothesis, Some(false));
        assert!(jump_circulant(5, 1, &[0]).is_err());
    }

    #[test]
    fn six_jump_examples() {
        assert_eq!(
            residues(&six_jump_circulant(5, 1).unwrap().graph),
            vec![1, 2, 3, 7, 8, 9]
        );
        assert_eq!(
            residues(&six_jump_circulant(7, 1).unwrap().graph),
            vec![1, 3, 4, 10, 11, 13]
        );
        assert_eq!(
            residues(&six_jump_circulant(5, 2).unwrap().graph),
            vec![1, 3, 22, 28, 47, 49]
        );
        assert!(six_jump_circulant(3, 1).is_err());
    }

    #[test]
    fn product_families() {
        let g = axis_complement(3, 2, 2, &[1]).unwrap();
        assert_eq!(g.graph.order(), 324);
        assert_eq!(g.graph.degree(), 323 - 2);
        assert_eq!(g.pair.as_ref().unwrap().1.residues(), &[9, 0]);
        assert_eq!(g.hypothesis, Some(true));
        assert_eq!(axis_complement(3, 2, 2, &[1, 3, 15]).unwrap().hypothesis, Some(false));
        assert!(axis_complement(3, 1, 2, &[1]).is_err());

        let e = elementary_complement(3, 2).unwrap();
        assert_eq!(e.graph.group().orders(), &[2, 3, 3]);
        assert_eq!(e.graph.order(), 18);
        assert_eq!(e.graph.complement().degree(), 3);
        assert_eq!(elementary_complement(5, 2).unwrap().graph.order(), 50);

        let c = cube_complement(4).unwrap();
        assert_eq!(c.graph.order(), 16);
        assert_eq!(c.graph.complement().degree(), 3);
        assert_eq!(cube_complement(5).unwrap().graph.order(), 32);
        assert!(cube_complement(3).is_err());
    }

    #[test]
    fn corpus_contents() {
        let cases = corpus();
        let find = |name: &str| cases.iter().find(|c| c.name == name).unwrap();
        let c6 = find("C6");
        assert_eq!((c6.expect_pgfr, c6.expect_fr), (Expectation::Yes, Expectation::Yes));
        assert_eq!(c6.pair.1.residues(), &[3]);
        assert_eq!(find("C30").expect_pgfr, Expectation::No);
        assert_eq!(find("complement-C24").expect_pgfr, Expectation::No);
        let mut names: Vec<&str> = cases.iter().map(|c| c.name.as_str()).collect();
        names.sort_unstable();
        assert!(names.windows(2).all(|w| w[0] != w[1]));
        assert!(cases.iter().all(|c| c.graph.order() <= 400));
        let cycles = filter_cases(corpus(), Some("cycles"));
        assert!(cycles.len() >= 10 && cycles.iter().all(|c| c.name.starts_with('C')));
    }

    #[test]
    fn manifest_round_trip() {
        for case in corpus() {
            let back = CorpusCase::from_manifest(&case.manifest_entry()).unwrap();
            assert_eq!(back.graph, case.graph);
            assert_eq!(back.pair, case.pair);
            assert_eq!(back.manifest_entry(), case.manifest_entry());
        }
    }
}
