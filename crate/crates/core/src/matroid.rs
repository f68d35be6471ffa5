//! Small labeled matroids stored as circuit sets over bitmask element sets.
//!
//! Labels are `0..16`; ground sets hold at most [`MAX_GROUND`] elements.

use std::collections::HashSet;
use std::fmt;

use crate::error::{domain, Result};

/// A set of labels, bit `i` standing for label `i`.
pub type ElemSet = u16;

pub const MAX_LABEL: u8 = 15;
pub const MAX_GROUND: u32 = 10;

pub fn set_of(labels: &[u8]) -> ElemSet {
    labels.iter().fold(0, |acc, &l| acc | (1 << l))
}

/// `{1, …, n}`
pub fn range_set(n: u8) -> ElemSet {
    (1..=n).fold(0, |acc, l| acc | (1 << l))
}

pub fn elems(s: ElemSet) -> impl Iterator<Item = u8> {
    (0..16u8).filter(move |&i| s & (1 << i) != 0)
}

pub fn size(s: ElemSet) -> usize {
    s.count_ones() as usize
}

/// All subsets of `s`, including `0` and `s`.
pub fn subsets(s: ElemSet) -> impl Iterator<Item = ElemSet> {
    let mut next = Some(0u16);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == s { None } else { Some((cur.wrapping_sub(s)) & s) };
        Some(cur)
    })
}

pub fn fmt_set(s: ElemSet) -> String {
    let body: Vec<String> = elems(s).map(|e| e.to_string()).collect();
    format!("{{{}}}", body.join(","))
}

/// Inclusion-minimal nonempty members of `sets`, sorted.
fn minimal_nonempty(mut sets: Vec<ElemSet>) -> Vec<ElemSet> {
    sets.retain(|&s| s != 0);
    sets.sort_unstable_by_key(|s| (s.count_ones(), *s));
    sets.dedup();
    let mut kept: Vec<ElemSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|&k| k & !s == 0) {
            kept.push(s);
        }
    }
    kept.sort_unstable();
    kept
}

/// A matroid on a labeled ground set, identified by its circuits.
///
/// Equality is equality of labeled circuit sets.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabeledMatroid {
    ground: ElemSet,
    circuits: Vec<ElemSet>,
    rank: usize,
}

impl LabeledMatroid {
    /// Builds a matroid and checks the circuit axioms exhaustively.
    pub fn from_circuits(ground: ElemSet, circuits: impl IntoIterator<Item = ElemSet>) -> Result<Self> {
        if ground.count_ones() > MAX_GROUND {
            return domain(format!("ground set {} exceeds {MAX_GROUND} elements", fmt_set(ground)));
        }
        let mut cs: Vec<ElemSet> = circuits.into_iter().collect();
        cs.sort_unstable();
        cs.dedup();
        for &c in &cs {
            if c == 0 || c & !ground != 0 {
                return domain(format!("circuit {} is empty or leaves the ground set", fmt_set(c)));
            }
        }
        for (i, &a) in cs.iter().enumerate() {
            for &b in &cs[i + 1..] {
                if a & b == a || a & b == b {
                    return domain(format!("circuit {} contains {}", fmt_set(a.max(b)), fmt_set(a.min(b))));
                }
                let union = a | b;
                for e in elems(a & b) {
                    let target = union & !(1 << e);
                    if !cs.iter().any(|&c| c & !target == 0) {
                        return domain(format!("elimination fails for {} and {} at {e}", fmt_set(a), fmt_set(b)));
                    }
                }
            }
        }
        Ok(Self::from_circuits_unchecked(ground, cs))
    }

    /// Trusted constructor for circuit sets produced by matroid operations.
    pub(crate) fn from_circuits_unchecked(ground: ElemSet, mut circuits: Vec<ElemSet>) -> Self {
        circuits.sort_unstable();
        circuits.dedup();
        let mut m = Self { ground, circuits, rank: 0 };
        m.rank = m.rank_unchecked(ground);
        m
    }

    /// Rank-`r` uniform matroid on `labels`.
    pub fn uniform(r: usize, labels: &[u8]) -> Result<Self> {
        let ground = set_of(labels);
        let circuits = subsets(ground).filter(|s| size(*s) == r + 1);
        Self::from_circuits(ground, circuits.collect::<Vec<_>>())
    }

    /// Cycle matroid of a multigraph given as `(label, u, v)` edges.
    pub fn graphic(edges: &[(u8, u32, u32)]) -> Result<Self> {
        let ground = set_of(&edges.iter().map(|e| e.0).collect::<Vec<_>>());
        if size(ground) != edges.len() {
            return domain("repeated edge label");
        }
        let mut circuits = Vec::new();
        for s in subsets(ground).skip(1) {
            let chosen: Vec<_> = edges.iter().filter(|e| s & (1 << e.0) != 0).collect();
            if is_cycle(&chosen) {
                circuits.push(s);
            }
        }
        Self::from_circuits(ground, circuits)
    }

    pub fn ground(&self) -> ElemSet {
        self.ground
    }

    pub fn circuits(&self) -> &[ElemSet] {
        &self.circuits
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        size(self.ground)
    }

    pub fn is_empty(&self) -> bool {
        self.ground == 0
    }

    pub fn is_circuit(&self, s: ElemSet) -> bool {
        self.circuits.binary_search(&s).is_ok()
    }

    fn is_independent(&self, s: ElemSet) -> bool {
        !self.circuits.iter().any(|&c| c & !s == 0)
    }

    fn rank_unchecked(&self, s: ElemSet) -> usize {
        let mut basis: ElemSet = 0;
        for e in elems(s) {
            if self.is_independent(basis | (1 << e)) {
                basis |= 1 << e;
            }
        }
        size(basis)
    }

    /// Size of a maximal independent subset of `s`.
    pub fn rank_of(&self, s: ElemSet) -> Result<usize> {
        if s & !self.ground != 0 {
            return domain(format!("{} is not inside the ground set", fmt_set(s)));
        }
        Ok(self.rank_unchecked(s))
    }

    fn require_element(&self, e: u8) -> Result<()> {
        if e > MAX_LABEL || self.ground & (1 << e) == 0 {
            return domain(format!("{e} is not an element of the ground set"));
        }
        Ok(())
    }

    fn require_fresh(&self, e: u8) -> Result<()> {
        if e > MAX_LABEL || self.ground & (1 << e) != 0 {
            return domain(format!("label {e} collides or is out of range"));
        }
        if self.len() as u32 >= MAX_GROUND {
            return domain("extension would exceed the ground-set cap");
        }
        Ok(())
    }

    pub fn delete(&self, e: u8) -> Result<Self> {
        self.require_element(e)?;
        let bit = 1 << e;
        let cs = self.circuits.iter().copied().filter(|c| c & bit == 0).collect();
        Ok(Self::from_circuits_unchecked(self.ground & !bit, cs))
    }

    pub fn contract(&self, e: u8) -> Result<Self> {
        self.require_element(e)?;
        let bit = 1 << e;
        let cs = minimal_nonempty(self.circuits.iter().map(|c| c & !bit).collect());
        Ok(Self::from_circuits_unchecked(self.ground & !bit, cs))
    }

    /// Restriction to `s` (deletion of the complement).
    pub fn restrict(&self, s: ElemSet) -> Result<Self> {
        if s & !self.ground != 0 {
            return domain(format!("{} is not inside the ground set", fmt_set(s)));
        }
        let cs = self.circuits.iter().copied().filter(|c| c & s == *c).collect();
        Ok(Self::from_circuits_unchecked(s, cs))
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if self.ground & other.ground != 0 {
            return domain("direct sum of matroids with overlapping ground sets");
        }
        let cs = self.circuits.iter().chain(&other.circuits).copied().collect();
        Ok(Self::from_circuits_unchecked(self.ground | other.ground, cs))
    }

    /// Applies an injective relabeling of the ground set.
    pub fn relabel(&self, f: impl Fn(u8) -> u8) -> Self {
        let map = |s: ElemSet| elems(s).fold(0u16, |acc, e| acc | (1 << f(e)));
        Self::from_circuits_unchecked(map(self.ground), self.circuits.iter().map(|&c| map(c)).collect())
    }

    /// No loops and no parallel pairs.
    pub fn is_simple(&self) -> bool {
        self.circuits.iter().all(|c| c.count_ones() >= 3)
    }

    /// Connected components, each element set sorted by lowest label.
    pub fn components(&self) -> Vec<ElemSet> {
        let mut comps: Vec<ElemSet> = elems(self.ground).map(|e| 1 << e).collect();
        for &c in &self.circuits {
            let (touching, rest): (Vec<_>, Vec<_>) = comps.into_iter().partition(|&k| k & c != 0);
            comps = rest;
            comps.push(touching.into_iter().fold(0, |a, b| a | b));
        }
        comps.sort_unstable_by_key(|k| k.trailing_zeros());
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    fn require_circuit(&self, c: ElemSet) -> Result<()> {
        if !self.is_circuit(c) {
            return domain(format!("{} is not a circuit", fmt_set(c)));
        }
        Ok(())
    }

    /// Elements `e ∉ C` for which some `S ⊂ C` makes both `S ∪ e` and `(C∖S) ∪ e` circuits.
    pub fn chords_of(&self, c: ElemSet) -> Result<ElemSet> {
        self.require_circuit(c)?;
        let mut chords = 0;
        for e in elems(self.ground & !c) {
            let bit = 1 << e;
            let is_chord = subsets(c)
                .filter(|&s| s != 0 && s != c)
                .any(|s| self.is_circuit(s | bit) && self.is_circuit((c & !s) | bit));
            if is_chord {
                chords |= bit;
            }
        }
        Ok(chords)
    }

    pub fn is_chordless(&self, c: ElemSet) -> Result<bool> {
        Ok(self.chords_of(c)? == 0)
    }

    /// No chordless circuits of size four or more.
    pub fn is_chordal(&self) -> bool {
        self.circuits
            .iter()
            .filter(|c| c.count_ones() >= 4)
            .all(|&c| self.chords_of(c).map(|ch| ch != 0).unwrap_or(false))
    }

    pub fn circuits_of_size(&self, k: usize) -> Vec<ElemSet> {
        self.circuits.iter().copied().filter(|c| size(*c) == k).collect()
    }

    pub fn count_3circuits_through(&self, e: u8) -> Result<usize> {
        self.require_element(e)?;
        Ok(self.circuits.iter().filter(|c| c.count_ones() == 3 && *c & (1 << e) != 0).count())
    }

    pub fn chordless_circuits_of_size(&self, k: usize) -> Vec<ElemSet> {
        self.circuits_of_size(k).into_iter().filter(|&c| self.chords_of(c).map(|ch| ch == 0).unwrap_or(false)).collect()
    }

    /// Coextension making `{at, new}` a series pair.
    pub fn series_extension(&self, at: u8, new: u8) -> Result<Self> {
        self.require_element(at)?;
        self.require_fresh(new)?;
        let (a, n) = (1u16 << at, 1u16 << new);
        let cs = self.circuits.iter().map(|&c| if c & a != 0 { c | n } else { c }).collect();
        Ok(Self::from_circuits_unchecked(self.ground | n, cs))
    }

    /// Extension making `new` parallel to `at`.
    pub fn parallel_extension(&self, at: u8, new: u8) -> Result<Self> {
        self.require_element(at)?;
        self.require_fresh(new)?;
        let (a, n) = (1u16 << at, 1u16 << new);
        let mut cs = self.circuits.clone();
        if self.is_circuit(a) {
            cs.push(n);
        } else {
            cs.push(a | n);
            cs.extend(self.circuits.iter().filter(|&&c| c & a != 0).map(|&c| (c & !a) | n));
        }
        Ok(Self::from_circuits_unchecked(self.ground | n, cs))
    }

    /// Parallel extension at `g` by `e`, then series extension at `e` by `f`;
    /// creates the 3-circuit `{g, e, f}`.
    pub fn triangle_extension(&self, g: u8, e: u8, f: u8) -> Result<Self> {
        if e == f {
            return domain("triangle extension needs two distinct new labels");
        }
        self.parallel_extension(g, e)?.series_extension(e, f)
    }

    /// True iff some minor is isomorphic to `U_{2,4}` or `M(K_4)`.
    pub fn has_excluded_minor(&self) -> bool {
        for (k, rank) in [(4usize, 2usize), (6, 3)] {
            for x in subsets(self.ground).filter(|s| size(*s) == k) {
                let rest = self.ground & !x;
                for contracted in subsets(rest) {
                    let r = self.rank_unchecked(x | contracted) - self.rank_unchecked(contracted);
                    if r != rank {
                        continue;
                    }
                    let minor = minimal_nonempty(
                        self.circuits
                            .iter()
                            .filter(|&&c| c & (x | contracted) == c)
                            .map(|&c| c & !contracted)
                            .collect(),
                    );
                    let hit = if k == 4 { is_u24_on(x, &minor) } else { is_mk4_on(x, &minor) };
                    if hit {
                        return true;
                    }
                }
            }
        }
        false
    }

    /// Direct sum of loops and series-parallel matroids.
    pub fn is_quasi_series_parallel(&self) -> bool {
        !self.has_excluded_minor()
    }
}

impl fmt::Display for LabeledMatroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cs: Vec<String> = self.circuits.iter().map(|&c| fmt_set(c)).collect();
        write!(f, "{}:[{}]", fmt_set(self.ground), cs.join(","))
    }
}

fn is_cycle(edges: &[&(u8, u32, u32)]) -> bool {
    if edges.is_empty() {
        return false;
    }
    if edges.len() == 1 {
        return edges[0].1 == edges[0].2;
    }
    let mut degree = std::collections::HashMap::new();
    for e in edges {
        if e.1 == e.2 {
            return false;
        }
        *degree.entry(e.1).or_insert(0) += 1;
        *degree.entry(e.2).or_insert(0) += 1;
    }
    if degree.values().any(|&d| d != 2) {
        return false;
    }
    // connected: walk from the first vertex
    let start = edges[0].1;
    let mut seen = HashSet::from([start]);
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for e in edges {
            let other = if e.1 == v {
                e.2
            } else if e.2 == v {
                e.1
            } else {
                continue;
            };
            if seen.insert(other) {
                stack.push(other);
            }
        }
    }
    seen.len() == degree.len()
}

fn is_u24_on(x: ElemSet, circuits: &[ElemSet]) -> bool {
    circuits.len() == 4 && circuits.iter().all(|c| c.count_ones() == 3 && c & x == *c)
}

/// Circuits of `M(K_4)` with edges labeled `0..6` as `01,02,03,12,13,23`.
const K4_CIRCUITS: [u8; 7] = [
    0b001011, // 01 02 12
    0b010101, // 01 03 13
    0b100110, // 02 03 23
    0b111000, // 12 13 23
    0b101101, // 01 03 12 23
    0b110011, // 01 02 13 23
    0b011110, // 02 03 12 13
];

fn is_mk4_on(x: ElemSet, circuits: &[ElemSet]) -> bool {
    if circuits.len() != 7 {
        return false;
    }
    let threes = circuits.iter().filter(|c| c.count_ones() == 3).count();
    let fours = circuits.iter().filter(|c| c.count_ones() == 4).count();
    if threes != 4 || fours != 3 {
        return false;
    }
    let labels: Vec<u8> = elems(x).collect();
    let mut perm: Vec<usize> = (0..6).collect();
    let target: HashSet<u8> = K4_CIRCUITS.iter().copied().collect();
    let mut found = false;
    permute(&mut perm, 0, &mut |p| {
        let image = |c: ElemSet| {
            labels.iter().enumerate().fold(0u8, |acc, (i, &l)| if c & (1 << l) != 0 { acc | (1 << p[i]) } else { acc })
        };
        if circuits.iter().all(|&c| target.contains(&image(c))) {
            found = true;
        }
        found
    });
    found
}

/// Visits permutations until `visit` returns true.
fn permute(p: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize]) -> bool) -> bool {
    if k == p.len() {
        return visit(p);
    }
    for i in k..p.len() {
        p.swap(k, i);
        if permute(p, k + 1, visit) {
            return true;
        }
        p.swap(k, i);
    }
    false
}
