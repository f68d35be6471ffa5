//! The deletion map from `S(2n-1, n)` to `S(2n-2, n)`, its fibers, the
//! rooted-desert encoding of the `m = 2` targets, and the resulting
//! difference formula.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::Zero;

use crate::cactus::{
    count_des1_closed, count_rdes_closed, enumerate_deserts, enumerate_rooted_deserts, is_triangular_cactus,
    LabeledGraph, RootedDesert,
};
use crate::error::{domain, invariant, resource, Result};
use crate::exact::{binomial, double_factorial, expect_integer, factorial, ipow, rat_of, Integer, Rational};
use crate::klcore::{leading_coeff_closed_form, LeadingForm};
use crate::matroid::{elems, range_set, size, LabeledMatroid};
use crate::spgen::enumerate_s;

/// Largest `n` for which the exhaustive map computations run.
pub const MAX_MAP_N: usize = 4;

fn check_map_n(n: usize) -> Result<()> {
    if !(2..=MAX_MAP_N).contains(&n) {
        return resource(format!("exhaustive map computations supported for 2 <= n <= {MAX_MAP_N}, got {n}"));
    }
    Ok(())
}

/// `M ∖ (2n-1)` for `M ∈ S(2n-1, n)`; the rank must survive.
pub fn phi(m: &LabeledMatroid, n: usize) -> Result<LabeledMatroid> {
    if n < 2 || m.ground() != range_set((2 * n - 1) as u8) || m.rank() != n {
        return domain(format!("phi expects a rank-{n} matroid on [{}]", 2 * n - 1));
    }
    let out = m.delete((2 * n - 1) as u8)?;
    if out.rank() != n {
        return invariant(format!("deleting {} from {m} dropped the rank", 2 * n - 1));
    }
    if !out.is_simple() || !out.is_quasi_series_parallel() {
        return invariant(format!("phi({m}) = {out} left S(2n-2, n)"));
    }
    Ok(out)
}

/// Recovers `m` from the chordless 4-circuits of a target: disconnected
/// targets have `m = 1`, connected ones have exactly `C(m, 2)` of them.
pub fn m_class_of_target(target: &LabeledMatroid) -> Result<usize> {
    let c = target.chordless_circuits_of_size(4).len();
    if !target.is_connected() {
        if c != 0 {
            return invariant(format!("disconnected target {target} has {c} chordless 4-circuits"));
        }
        return Ok(1);
    }
    let mut m = 2usize;
    while m * (m - 1) / 2 < c {
        m += 1;
    }
    if m * (m - 1) / 2 != c {
        return invariant(format!("{c} chordless 4-circuits in {target} is not C(m, 2) for m >= 2"));
    }
    Ok(m)
}

/// Graph on the ground set whose triangles are the 3-circuits of `m`.
pub fn triangle_graph(m: &LabeledMatroid) -> LabeledGraph {
    let mut g = LabeledGraph::empty(m.ground());
    for c in m.circuits_of_size(3) {
        let v: Vec<u8> = elems(c).collect();
        for (a, b) in [(v[0], v[1]), (v[1], v[2]), (v[0], v[2])] {
            g.add_edge(a, b).expect("circuit elements lie in the ground set");
        }
    }
    g
}

/// The rooted desert of an `m = 2` target: triangles from its 3-circuits,
/// roots at its unique chordless 4-circuit.
pub fn sigma2(target: &LabeledMatroid) -> Result<RootedDesert> {
    if m_class_of_target(target)? != 2 {
        return domain(format!("sigma2 needs an m = 2 target, got {target}"));
    }
    let roots = target.chordless_circuits_of_size(4)[0];
    let g = triangle_graph(target);
    let desert = RootedDesert::new(g, roots)?;
    if g.components().len() != 4 {
        return invariant(format!("sigma2({target}) has {} components, expected 4", g.components().len()));
    }
    Ok(desert)
}

/// Fiber of one target of the deletion map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberRecord {
    pub target: LabeledMatroid,
    pub m_class: usize,
    pub fiber_size: usize,
    pub expected: usize,
}

/// Exhaustive fiber statistics of the deletion map at one `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberReport {
    pub n: usize,
    pub source_size: usize,
    pub target_size: usize,
    pub surjective: bool,
    pub records: Vec<FiberRecord>,
    /// `m ↦ (targets, preimages)`
    pub totals: BTreeMap<usize, (usize, usize)>,
    pub failures: Vec<String>,
}

impl FiberReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for FiberReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n = {}: {} sources over {} targets", self.n, self.source_size, self.target_size)?;
        for (m, (t, p)) in &self.totals {
            write!(f, "; m = {m}: {t} targets, {p} preimages")?;
        }
        Ok(())
    }
}

fn expected_fiber(target: &LabeledMatroid, m_class: usize) -> Result<usize> {
    match m_class {
        1 => {
            let g = triangle_graph(target);
            let comps = g.components();
            for &c in &comps {
                let induced = LabeledGraph::with_edges(
                    c,
                    &g.edges().into_iter().filter(|&(a, _)| c & (1 << a) != 0).collect::<Vec<_>>(),
                )?;
                if !is_triangular_cactus(&induced) {
                    return invariant(format!("component of the desert of {target} is not a cactus"));
                }
            }
            if comps.len() != 2 {
                return invariant(format!("desert of m = 1 target {target} has {} components", comps.len()));
            }
            Ok(comps.iter().map(|&c| size(c)).product())
        }
        2 => Ok(3),
        _ => Ok(1),
    }
}

/// Groups `S(2n-1, n)` by image under [`phi`] and checks every fiber size.
pub fn fibers_of_phi(n: usize) -> Result<FiberReport> {
    check_map_n(n)?;
    let sources = enumerate_s(2 * n - 1, n)?;
    let targets = enumerate_s(2 * n - 2, n)?;
    let top = (2 * n - 1) as u8;
    let mut fibers: BTreeMap<LabeledMatroid, Vec<usize>> = BTreeMap::new();
    for src in &sources {
        let m = src.count_3circuits_through(top)?;
        fibers.entry(phi(src, n)?).or_default().push(m);
    }
    let mut failures = Vec::new();
    let image: BTreeSet<&LabeledMatroid> = fibers.keys().collect();
    let target_set: BTreeSet<&LabeledMatroid> = targets.iter().collect();
    let surjective = image == target_set;
    if !surjective {
        failures.push(format!("image has {} members, S({}, {n}) has {}", image.len(), 2 * n - 2, targets.len()));
    }
    let mut records = Vec::new();
    let mut totals: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
    for target in &targets {
        let preimage_ms = fibers.get(target).cloned().unwrap_or_default();
        let m_class = m_class_of_target(target)?;
        let expected = expected_fiber(target, m_class)?;
        if preimage_ms.iter().any(|&m| m != m_class) {
            failures.push(format!("preimages of {target} have m values {preimage_ms:?}, target class {m_class}"));
        }
        if preimage_ms.len() != expected {
            failures.push(format!("fiber of {target}: size {}, expected {expected}", preimage_ms.len()));
        }
        let e = totals.entry(m_class).or_default();
        e.0 += 1;
        e.1 += preimage_ms.len();
        records.push(FiberRecord { target: target.clone(), m_class, fiber_size: preimage_ms.len(), expected });
    }
    let rebuilt: usize = records.iter().map(|r| r.fiber_size).sum();
    if rebuilt != sources.len() {
        failures.push(format!("fibers sum to {rebuilt}, |S({}, {n})| = {}", 2 * n - 1, sources.len()));
    }
    Ok(FiberReport { n, source_size: sources.len(), target_size: targets.len(), surjective, records, totals, failures })
}

/// Cardinality and injectivity checks for the `m = 2` and `m = 1` targets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorrespondenceReport {
    pub n: usize,
    pub s2_targets: usize,
    pub rdes2: usize,
    pub sigma2_injective: bool,
    pub sigma2_onto: bool,
    pub s1_targets: usize,
    pub des1: usize,
}

impl CorrespondenceReport {
    pub fn passed(&self) -> bool {
        self.s2_targets == self.rdes2 && self.sigma2_injective && self.sigma2_onto && self.s1_targets == self.des1
    }
}

/// Checks `sigma2` against `RDes_2(n)` and `|S_1(2n-2, n)|` against `|Des_1(n)|`.
pub fn check_correspondences(n: usize) -> Result<CorrespondenceReport> {
    check_map_n(n)?;
    let targets = enumerate_s(2 * n - 2, n)?;
    let mut images = BTreeSet::new();
    let mut s2 = 0;
    let mut s1 = 0;
    for t in &targets {
        match m_class_of_target(t)? {
            1 => s1 += 1,
            2 => {
                s2 += 1;
                images.insert(sigma2(t)?);
            }
            _ => {}
        }
    }
    let rdes2: BTreeSet<RootedDesert> = enumerate_rooted_deserts(n, 2)?.into_iter().collect();
    Ok(CorrespondenceReport {
        n,
        s2_targets: s2,
        rdes2: rdes2.len(),
        sigma2_injective: images.len() == s2,
        sigma2_onto: images == rdes2,
        s1_targets: s1,
        des1: enumerate_deserts(n, 1)?.len(),
    })
}

/// `g_n = (n-1)^{n-5} (2n-1)! / (3 (n-3)!)`, `n >= 3`.
pub fn g_closed(n: usize) -> Result<Integer> {
    if n < 3 {
        return domain(format!("g_n needs n >= 3, got {n}"));
    }
    let ni = n as i64;
    let value = ipow(ni - 1, ni - 5)? * rat_of(factorial((2 * n - 1) as u64)) / rat_of(factorial((n - 3) as u64) * 3);
    expect_integer(&value, &format!("g_n at n = {n}"))
}

/// Closed form for `E_n`.
pub fn count_e_closed(n: usize) -> Result<Integer> {
    if n < 2 {
        return domain(format!("E_n closed form needs n >= 2, got {n}"));
    }
    let ni = n as i64;
    let tail =
        rat_of(factorial((2 * n - 3) as u64) * (n + 1)) * ipow(ni - 1, ni - 3)? / rat_of(factorial((n - 1) as u64) * 3);
    let value = rat_of(leading_coeff_closed_form(LeadingForm::POdd, n)?) - tail;
    expect_integer(&value, &format!("E_n closed form at n = {n}"))
}

/// `½ Σ_{j=0}^{n-2} C(2n-2, 2j+1) (2j-1)!! (2j+1)^{j-1} (2n-2j-5)!! (2n-2j-3)^{n-j-3}`,
/// the disconnected part of `|S(2n-2, n)|`.
pub fn disconnected_split_sum(n: usize) -> Result<Integer> {
    if n < 2 {
        return domain(format!("split sum needs n >= 2, got {n}"));
    }
    let ni = n as i64;
    let mut sum = Rational::zero();
    for j in 0..=ni - 2 {
        sum += rat_of(binomial((2 * n - 2) as u64, (2 * j + 1) as u64))
            * rat_of(double_factorial(2 * j - 1)? * double_factorial(2 * ni - 2 * j - 5)?)
            * ipow(2 * j + 1, j - 1)?
            * ipow(2 * ni - 2 * j - 3, ni - j - 3)?;
    }
    expect_integer(&(sum / rat_of(Integer::from(2))), &format!("split sum at n = {n}"))
}

/// How [`verify_difference`] obtains its counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DifferenceMode {
    Exhaustive,
    ClosedForm,
}

/// Both sides of `|S(2n-1,n)| - |S(2n-2,n)| = 2|RDes_2(n)| + |RDes_1(n)| - |Des_1(n)|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DifferenceReport {
    pub n: usize,
    pub mode: DifferenceMode,
    pub lhs: Integer,
    pub rhs: Integer,
    /// `g_n`, closed-form mode only.
    pub g: Option<Integer>,
}

impl DifferenceReport {
    pub fn passed(&self) -> bool {
        self.lhs == self.rhs && self.g.as_ref().is_none_or(|g| *g == self.lhs)
    }
}

pub fn verify_difference(n: usize, mode: DifferenceMode) -> Result<DifferenceReport> {
    match mode {
        DifferenceMode::Exhaustive => {
            check_map_n(n)?;
            let lhs = Integer::from(enumerate_s(2 * n - 1, n)?.len()) - Integer::from(enumerate_s(2 * n - 2, n)?.len());
            let rdes2 = enumerate_rooted_deserts(n, 2)?.len();
            let rdes1 = enumerate_rooted_deserts(n, 1)?.len();
            let des1 = enumerate_deserts(n, 1)?.len();
            let rhs = Integer::from(2 * rdes2 + rdes1) - Integer::from(des1);
            Ok(DifferenceReport { n, mode, lhs, rhs, g: None })
        }
        DifferenceMode::ClosedForm => {
            if n < 3 {
                return domain(format!("closed-form difference needs n >= 3, got {n}"));
            }
            let lhs =
                leading_coeff_closed_form(LeadingForm::PEven, n)? - leading_coeff_closed_form(LeadingForm::POdd, n)?;
            let rhs = count_rdes_closed(n, 2)? * 2 + count_rdes_closed(n, 1)? - count_des1_closed(n)?;
            Ok(DifferenceReport { n, mode, lhs, rhs, g: Some(g_closed(n)?) })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;
    use crate::matroid::set_of;
    use crate::matroid::tests::diamond;

    #[test]
    fn phi_of_diamond() {
        let image = phi(&diamond(), 3).unwrap();
        let expected = LabeledMatroid::from_circuits(range_set(4), [set_of(&[1, 2, 3])]).unwrap();
        assert_eq!(image, expected);
        assert!(!image.is_connected());
        assert_eq!(m_class_of_target(&image).unwrap(), 1);
    }

    #[test]
    fn m_two_sources_map_to_u34() {
        let u34 = LabeledMatroid::uniform(3, &[1, 2, 3, 4]).unwrap();
        let classes = crate::spgen::classify_by_m(3).unwrap();
        assert_eq!(classes[&2].len(), 3);
        for m in &classes[&2] {
            assert_eq!(phi(m, 3).unwrap(), u34);
        }
        assert_eq!(m_class_of_target(&u34).unwrap(), 2);
        let d = sigma2(&u34).unwrap();
        assert_eq!(d.graph().edge_count(), 0);
        assert_eq!(d.roots(), range_set(4));
    }

    #[test]
    fn fiber_reports() {
        let r3 = fibers_of_phi(3).unwrap();
        assert!(r3.passed(), "{:?}", r3.failures);
        assert_eq!(r3.totals[&1], (4, 12));
        assert_eq!(r3.totals[&2], (1, 3));
        let r2 = fibers_of_phi(2).unwrap();
        assert!(r2.passed(), "{:?}", r2.failures);
        assert_eq!((r2.source_size, r2.target_size), (1, 1));
    }

    #[test]
    fn fiber_report_n4() {
        let r = fibers_of_phi(4).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
        assert_eq!((r.source_size, r.target_size), (735, 175));
        assert!(r.totals.contains_key(&3));
        let c = check_correspondences(4).unwrap();
        assert!(c.passed(), "{c:?}");
        assert_eq!((c.s2_targets, c.s1_targets), (60, 100));
    }

    #[test]
    fn difference_formula() {
        for n in 2..=4 {
            let r = verify_difference(n, DifferenceMode::Exhaustive).unwrap();
            assert!(r.passed(), "{r:?}");
        }
        assert_eq!(verify_difference(3, DifferenceMode::Exhaustive).unwrap().lhs, int(10));
        assert_eq!(verify_difference(4, DifferenceMode::Exhaustive).unwrap().lhs, int(560));
        assert_eq!(g_closed(4).unwrap(), int(560));
        for n in 3..=20 {
            assert!(verify_difference(n, DifferenceMode::ClosedForm).unwrap().passed());
        }
    }

    #[test]
    fn e_closed_and_split() {
        assert_eq!(count_e_closed(2).unwrap(), int(0));
        assert_eq!(count_e_closed(3).unwrap(), int(1));
        assert_eq!(count_e_closed(4).unwrap(), int(75));
        for n in 2..=12 {
            let total = count_e_closed(n).unwrap() + disconnected_split_sum(n).unwrap();
            assert_eq!(total, leading_coeff_closed_form(LeadingForm::POdd, n).unwrap());
            assert_eq!(disconnected_split_sum(n).unwrap(), count_des1_closed(n).unwrap());
        }
    }
}
