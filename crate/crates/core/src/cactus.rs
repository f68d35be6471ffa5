//! Triangular cacti, deserts, rooted deserts and Husimi graphs on small
//! labeled vertex sets, with their closed-form counts.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{domain, resource, Error, Result};
use crate::exact::{expect_integer, factorial, ipow, multinomial, rat_of, Integer, Rational};
use crate::matroid::{elems, range_set, size, subsets, ElemSet};

/// Largest vertex set the constructive generators accept.
pub const MAX_VERTICES: usize = 9;

fn pair_bit(a: u8, b: u8) -> u128 {
    let (i, j) = if a < b { (a as u32, b as u32) } else { (b as u32, a as u32) };
    1u128 << (j * (j - 1) / 2 + i)
}

/// Simple graph on labeled vertices `0..16`; edges are a bitmask over vertex pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabeledGraph {
    vertices: ElemSet,
    edges: u128,
}

impl LabeledGraph {
    pub fn empty(vertices: ElemSet) -> Self {
        Self { vertices, edges: 0 }
    }

    pub fn with_edges(vertices: ElemSet, edges: &[(u8, u8)]) -> Result<Self> {
        let mut g = Self::empty(vertices);
        for &(a, b) in edges {
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, a: u8, b: u8) -> Result<()> {
        if a == b || a > 15 || b > 15 || self.vertices & (1 << a) == 0 || self.vertices & (1 << b) == 0 {
            return domain(format!("edge {a}-{b} is a loop or leaves the vertex set"));
        }
        self.edges |= pair_bit(a, b);
        Ok(())
    }

    fn add_clique(&mut self, s: ElemSet) {
        let vs: Vec<u8> = elems(s).collect();
        for (i, &a) in vs.iter().enumerate() {
            for &b in &vs[i + 1..] {
                self.edges |= pair_bit(a, b);
            }
        }
    }

    pub fn vertices(&self) -> ElemSet {
        self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        size(self.vertices)
    }

    pub fn edge_count(&self) -> usize {
        self.edges.count_ones() as usize
    }

    pub fn has_edge(&self, a: u8, b: u8) -> bool {
        a != b && self.edges & pair_bit(a, b) != 0
    }

    pub fn edges(&self) -> Vec<(u8, u8)> {
        let vs: Vec<u8> = elems(self.vertices).collect();
        let mut out = Vec::new();
        for (i, &a) in vs.iter().enumerate() {
            for &b in &vs[i + 1..] {
                if self.has_edge(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn neighbors(&self, v: u8) -> ElemSet {
        elems(self.vertices).filter(|&u| self.has_edge(u, v)).fold(0, |acc, u| acc | (1 << u))
    }

    /// Disjoint union; the vertex sets must not overlap.
    pub fn union(&self, other: &Self) -> Result<Self> {
        if self.vertices & other.vertices != 0 {
            return domain("union of graphs with overlapping vertex sets");
        }
        Ok(Self { vertices: self.vertices | other.vertices, edges: self.edges | other.edges })
    }

    /// Vertex sets of the connected components, ordered by lowest vertex.
    pub fn components(&self) -> Vec<ElemSet> {
        let mut left = self.vertices;
        let mut out = Vec::new();
        while left != 0 {
            let start = left.trailing_zeros() as u8;
            let mut comp: ElemSet = 1 << start;
            let mut frontier = comp;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as u8;
                frontier &= frontier - 1;
                let fresh = self.neighbors(v) & !comp;
                comp |= fresh;
                frontier |= fresh;
            }
            out.push(comp);
            left &= !comp;
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Blocks (maximal 2-connected pieces and bridges) as `(vertex set, edge count)`.
    /// Isolated vertices contribute no block.
    pub fn blocks(&self) -> Vec<(ElemSet, usize)> {
        let mut st = BlockSearch { g: self, disc: [0; 16], low: [0; 16], time: 0, stack: Vec::new(), out: Vec::new() };
        for v in elems(self.vertices) {
            if st.disc[v as usize] == 0 {
                st.visit(v, None);
            }
        }
        st.out.sort_unstable();
        st.out
    }
}

struct BlockSearch<'a> {
    g: &'a LabeledGraph,
    disc: [u8; 16],
    low: [u8; 16],
    time: u8,
    stack: Vec<(u8, u8)>,
    out: Vec<(ElemSet, usize)>,
}

impl BlockSearch<'_> {
    fn visit(&mut self, v: u8, parent: Option<u8>) {
        self.time += 1;
        self.disc[v as usize] = self.time;
        self.low[v as usize] = self.time;
        for w in elems(self.g.neighbors(v)) {
            if Some(w) == parent {
                continue;
            }
            if self.disc[w as usize] == 0 {
                self.stack.push((v, w));
                self.visit(w, Some(v));
                self.low[v as usize] = self.low[v as usize].min(self.low[w as usize]);
                if self.low[w as usize] >= self.disc[v as usize] {
                    let (mut verts, mut count) = (0u16, 0usize);
                    while let Some((a, b)) = self.stack.pop() {
                        verts |= (1 << a) | (1 << b);
                        count += 1;
                        if (a, b) == (v, w) {
                            break;
                        }
                    }
                    self.out.push((verts, count));
                }
            } else if self.disc[w as usize] < self.disc[v as usize] {
                self.stack.push((v, w));
                self.low[v as usize] = self.low[v as usize].min(self.disc[w as usize]);
            }
        }
    }
}

impl fmt::Display for LabeledGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let es: Vec<String> = self.edges().iter().map(|(a, b)| format!("{a}-{b}")).collect();
        write!(f, "{}[{}]", crate::matroid::fmt_set(self.vertices), es.join(","))
    }
}

/// Block multiplicities `(n₂, n₃, …)`: `counts[i - 2]` blocks isomorphic to `K_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct HusimiType {
    counts: Vec<usize>,
}

impl HusimiType {
    pub fn new(mut counts: Vec<usize>) -> Self {
        while counts.last() == Some(&0) {
            counts.pop();
        }
        Self { counts }
    }

    /// Type of a triangular cactus with `r - 1` triangles.
    pub fn cactus(r: usize) -> Self {
        Self::new(vec![0, r.saturating_sub(1)])
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    /// Number of `K_i` blocks.
    pub fn blocks_of_size(&self, i: usize) -> usize {
        if i < 2 {
            0
        } else {
            self.counts.get(i - 2).copied().unwrap_or(0)
        }
    }

    pub fn block_total(&self) -> usize {
        self.counts.iter().sum()
    }

    /// `1 + Σ (i-1) nᵢ`, the vertex count of a connected graph of this type.
    pub fn connected_vertex_count(&self) -> usize {
        1 + self.counts.iter().enumerate().map(|(k, &c)| (k + 1) * c).sum::<usize>()
    }

    fn decrement(&self, i: usize) -> Self {
        let mut c = self.counts.clone();
        c[i - 2] -= 1;
        Self::new(c)
    }

    /// Every type of a connected Husimi graph on `p` vertices.
    pub fn feasible_types(p: usize) -> Vec<Self> {
        if p == 0 {
            return Vec::new();
        }
        if p == 1 {
            return vec![Self::default()];
        }
        crate::klcore::partitions_of(p - 1)
            .expect("p - 1 >= 1")
            .into_iter()
            .map(|lambda| {
                let mut counts = vec![0usize; p - 1];
                for &part in lambda.parts() {
                    counts[part - 1] += 1;
                }
                Self::new(counts)
            })
            .collect()
    }
}

impl fmt::Display for HusimiType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.counts.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", body.join(","))
    }
}

impl FromStr for HusimiType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        if body.trim().is_empty() {
            return Ok(Self::default());
        }
        let counts = body
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Domain(format!("bad Husimi type {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(counts))
    }
}

/// Connected with every block complete.
pub fn is_husimi(g: &LabeledGraph) -> bool {
    g.is_connected() && g.blocks().iter().all(|&(vs, e)| e == size(vs) * (size(vs) - 1) / 2)
}

pub fn husimi_type(g: &LabeledGraph) -> Option<HusimiType> {
    if !is_husimi(g) {
        return None;
    }
    let mut counts = vec![0usize; g.vertex_count().saturating_sub(1)];
    for (vs, _) in g.blocks() {
        counts[size(vs) - 2] += 1;
    }
    Some(HusimiType::new(counts))
}

/// Connected, every edge on exactly one cycle, every cycle a triangle.
pub fn is_triangular_cactus(g: &LabeledGraph) -> bool {
    g.is_connected() && g.blocks().iter().all(|&(vs, e)| size(vs) == 3 && e == 3)
}

/// Husimi graphs on `vertices` of type `ty`, grown by attaching a complete
/// leaf block at a single vertex.
struct HusimiGen {
    memo: HashMap<(ElemSet, HusimiType), Vec<LabeledGraph>>,
}

impl HusimiGen {
    fn graphs(&mut self, vertices: ElemSet, ty: &HusimiType) -> Vec<LabeledGraph> {
        if let Some(v) = self.memo.get(&(vertices, ty.clone())) {
            return v.clone();
        }
        let out = if ty.connected_vertex_count() != size(vertices) {
            Vec::new()
        } else if ty.block_total() == 0 {
            vec![LabeledGraph::empty(vertices)]
        } else {
            let mut seen = BTreeSet::new();
            for i in 2..ty.counts.len() + 2 {
                if ty.blocks_of_size(i) == 0 {
                    continue;
                }
                let smaller = ty.decrement(i);
                for leaf in subsets(vertices).filter(|s| size(*s) == i - 1) {
                    let rest = vertices & !leaf;
                    for g in self.graphs(rest, &smaller) {
                        for anchor in elems(rest) {
                            let mut h = LabeledGraph { vertices, edges: g.edges };
                            h.add_clique(leaf | (1 << anchor));
                            seen.insert(h);
                        }
                    }
                }
            }
            seen.into_iter().collect()
        };
        self.memo.insert((vertices, ty.clone()), out.clone());
        out
    }
}

fn check_vertices(s: ElemSet) -> Result<()> {
    if size(s) > MAX_VERTICES {
        return resource(format!("graph generators capped at {MAX_VERTICES} vertices"));
    }
    Ok(())
}

/// Husimi graphs on `{1, …, p}` of type `ty`, sorted.
pub fn enumerate_husimi(p: usize, ty: &HusimiType) -> Result<Vec<LabeledGraph>> {
    if p == 0 {
        return domain("Husimi graphs need p >= 1");
    }
    let vs = range_set(p as u8);
    check_vertices(vs)?;
    Ok(HusimiGen { memo: HashMap::new() }.graphs(vs, ty))
}

/// Triangular cacti on exactly `vertices`, sorted; empty for even sizes.
pub fn enumerate_cacti(vertices: ElemSet) -> Result<Vec<LabeledGraph>> {
    check_vertices(vertices)?;
    let s = size(vertices);
    if s.is_multiple_of(2) {
        return Ok(Vec::new());
    }
    Ok(HusimiGen { memo: HashMap::new() }.graphs(vertices, &HusimiType::cactus(s.div_ceil(2))))
}

/// `p! / ∏ᵢ [(i-1)!]^{nᵢ} nᵢ! · p^{Σnᵢ - 2}`; zero for infeasible types.
pub fn count_husimi_closed(p: usize, ty: &HusimiType) -> Result<Integer> {
    if p == 0 {
        return domain("Husimi count needs p >= 1");
    }
    if ty.connected_vertex_count() != p {
        return Ok(Integer::zero());
    }
    let mut denom = Integer::one();
    for (k, &c) in ty.counts().iter().enumerate() {
        let i = k + 2;
        denom *= num_traits::pow(factorial((i - 1) as u64), c) * factorial(c as u64);
    }
    let value = rat_of(factorial(p as u64)) / rat_of(denom) * ipow(p as i64, ty.block_total() as i64 - 2)?;
    expect_integer(&value, &format!("Husimi count for p = {p}, type {ty}"))
}

/// `|Δ(r)| = (2r-1)^{r-3} (2r-1)! / (2^{r-1} (r-1)!)`.
pub fn count_cacti_closed(r: usize) -> Result<Integer> {
    if r == 0 {
        return domain("cactus count needs r >= 1");
    }
    expect_integer(&cacti_closed_rational(r)?, &format!("cactus count at r = {r}"))
}

fn cacti_closed_rational(r: usize) -> Result<Rational> {
    let r = r as i64;
    Ok(ipow(2 * r - 1, r - 3)? * rat_of(factorial((2 * r - 1) as u64))
        / (ipow(2, r - 1)? * rat_of(factorial((r - 1) as u64))))
}

fn check_desert_params(n: usize, m: usize) -> Result<()> {
    if n < 2 || m < 1 {
        return domain(format!("deserts need n >= 2 and m >= 1, got ({n}, {m})"));
    }
    Ok(())
}

/// `|RDes_m(n)| = (n-1)^{n-m-2} (2n-2)! / (2 (2m-1)! (n-m-1)!)`, `1 <= m <= n-1`.
pub fn count_rdes_closed(n: usize, m: usize) -> Result<Integer> {
    check_desert_params(n, m)?;
    if m > n - 1 {
        return domain(format!("rooted desert closed form needs m <= n - 1, got ({n}, {m})"));
    }
    let (ni, mi) = (n as i64, m as i64);
    let value = ipow(ni - 1, ni - mi - 2)? * rat_of(factorial((2 * n - 2) as u64))
        / rat_of(factorial((2 * m - 1) as u64) * factorial((n - m - 1) as u64) * 2);
    expect_integer(&value, &format!("rooted desert count at ({n}, {m})"))
}

/// `|Des_1(n)| = (n+1)(n-1)^{n-5} (2n-2)! / (6 (n-2)!)`.
pub fn count_des1_closed(n: usize) -> Result<Integer> {
    check_desert_params(n, 1)?;
    let ni = n as i64;
    let value =
        ipow(ni - 1, ni - 5)? * rat_of(factorial((2 * n - 2) as u64) * (n + 1)) / rat_of(factorial((n - 2) as u64) * 6);
    expect_integer(&value, &format!("desert count at n = {n}"))
}

/// `|Des_m(n)|` as the multinomial convolution of cactus counts over ordered
/// odd block sizes, divided by `(2m)!`.
pub fn des_convolution(n: usize, m: usize) -> Result<Integer> {
    check_desert_params(n, m)?;
    let total = 2 * n - 2;
    let parts = 2 * m;
    let mut sum = Rational::zero();
    let mut sizes = Vec::with_capacity(parts);
    compositions(total, parts, &mut sizes, &mut |odd_sizes| {
        let mut term = rat_of(multinomial(total as u64, &odd_sizes.iter().map(|&s| s as u64).collect::<Vec<_>>())?);
        for &s in odd_sizes {
            term *= cacti_closed_rational(s.div_ceil(2))?;
        }
        sum += term;
        Ok(())
    })?;
    let value = sum / rat_of(factorial(parts as u64));
    expect_integer(&value, &format!("desert convolution at ({n}, {m})"))
}

/// Ordered compositions of `total` into `parts` odd positive sizes.
fn compositions(
    total: usize,
    parts: usize,
    cur: &mut Vec<usize>,
    f: &mut impl FnMut(&[usize]) -> Result<()>,
) -> Result<()> {
    if parts == 0 {
        return if total == 0 { f(cur) } else { Ok(()) };
    }
    for s in (1..=total).step_by(2) {
        cur.push(s);
        compositions(total - s, parts - 1, cur, f)?;
        cur.pop();
    }
    Ok(())
}

/// A disjoint union of triangular cacti with one root per component.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootedDesert {
    graph: LabeledGraph,
    roots: ElemSet,
}

impl RootedDesert {
    pub fn new(graph: LabeledGraph, roots: ElemSet) -> Result<Self> {
        for comp in graph.components() {
            let induced = LabeledGraph { vertices: comp, edges: graph.edges };
            if !is_triangular_cactus(&induced) {
                return domain(format!(
                    "component {} of {graph} is not a triangular cactus",
                    crate::matroid::fmt_set(comp)
                ));
            }
            if size(comp & roots) != 1 {
                return domain(format!("component {} needs exactly one root", crate::matroid::fmt_set(comp)));
            }
        }
        if roots & !graph.vertices() != 0 {
            return domain("root outside the vertex set");
        }
        Ok(Self { graph, roots })
    }

    pub fn graph(&self) -> &LabeledGraph {
        &self.graph
    }

    pub fn roots(&self) -> ElemSet {
        self.roots
    }
}

impl fmt::Display for RootedDesert {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} roots {}", self.graph, crate::matroid::fmt_set(self.roots))
    }
}

/// Largest `n` for which deserts on `[2n-2]` are enumerated.
pub const MAX_DESERT_N: usize = 5;

/// Deserts on `{1, …, 2n-2}` with exactly `2m` components, sorted.
pub fn enumerate_deserts(n: usize, m: usize) -> Result<Vec<LabeledGraph>> {
    check_desert_params(n, m)?;
    if n > MAX_DESERT_N {
        return resource(format!("desert enumeration capped at n = {MAX_DESERT_N}"));
    }
    let mut cacti: HashMap<ElemSet, Vec<LabeledGraph>> = HashMap::new();
    let mut out = Vec::new();
    odd_partitions(range_set((2 * n - 2) as u8), 2 * m, &mut Vec::new(), &mut |blocks| {
        let mut acc = vec![LabeledGraph::empty(0)];
        for &b in blocks {
            let options = match cacti.get(&b) {
                Some(v) => v.clone(),
                None => {
                    let v = enumerate_cacti(b).expect("block sizes are within cap");
                    cacti.insert(b, v.clone());
                    v
                }
            };
            acc = acc.iter().flat_map(|g| options.iter().map(move |c| g.union(c).expect("disjoint blocks"))).collect();
        }
        out.extend(acc);
    });
    out.sort_unstable();
    Ok(out)
}

/// Rooted deserts on `{1, …, 2n-2}` with exactly `2m` components, sorted.
pub fn enumerate_rooted_deserts(n: usize, m: usize) -> Result<Vec<RootedDesert>> {
    let mut out = Vec::new();
    for g in enumerate_deserts(n, m)? {
        let mut roots = vec![0u16];
        for comp in g.components() {
            roots = roots.iter().flat_map(|&r| elems(comp).map(move |v| r | (1 << v))).collect();
        }
        out.extend(roots.into_iter().map(|r| RootedDesert { graph: g, roots: r }));
    }
    out.sort_unstable();
    Ok(out)
}

/// Set partitions of `set` into exactly `parts` blocks of odd size.
fn odd_partitions(set: ElemSet, parts: usize, cur: &mut Vec<ElemSet>, f: &mut impl FnMut(&[ElemSet])) {
    if set == 0 {
        if parts == 0 {
            f(cur);
        }
        return;
    }
    if parts == 0 || size(set) < parts {
        return;
    }
    let low = set & set.wrapping_neg();
    for rest in subsets(set & !low) {
        let block = rest | low;
        if size(block) % 2 == 1 {
            cur.push(block);
            odd_partitions(set & !block, parts - 1, cur, f);
            cur.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;
    use crate::matroid::set_of;

    fn graph(p: u8, edges: &[(u8, u8)]) -> LabeledGraph {
        LabeledGraph::with_edges(range_set(p), edges).unwrap()
    }

    #[test]
    fn predicate_examples() {
        let tri = graph(3, &[(1, 2), (2, 3), (1, 3)]);
        assert!(is_triangular_cactus(&tri) && is_husimi(&tri));
        assert_eq!(husimi_type(&tri), Some(HusimiType::new(vec![0, 1])));

        let path = graph(3, &[(1, 2), (2, 3)]);
        assert!(!is_triangular_cactus(&path) && is_husimi(&path));
        assert_eq!(husimi_type(&path), Some(HusimiType::new(vec![2])));

        let k4 = graph(4, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]);
        assert!(!is_triangular_cactus(&k4) && is_husimi(&k4));
        assert_eq!(husimi_type(&k4).unwrap().to_string(), "(0,0,1)");

        let c4 = graph(4, &[(1, 2), (2, 3), (3, 4), (1, 4)]);
        assert!(!is_husimi(&c4) && husimi_type(&c4).is_none());
        assert!(is_triangular_cactus(&LabeledGraph::empty(set_of(&[4]))));
        assert!(!is_husimi(&LabeledGraph::empty(set_of(&[1, 2]))));
    }

    #[test]
    fn bowtie_blocks() {
        let bowtie = graph(5, &[(1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (3, 5)]);
        assert_eq!(bowtie.blocks().len(), 2);
        assert!(is_triangular_cactus(&bowtie));
    }

    #[test]
    fn cactus_counts() {
        assert_eq!(count_cacti_closed(1).unwrap(), int(1));
        assert_eq!(count_cacti_closed(2).unwrap(), int(1));
        assert_eq!(count_cacti_closed(3).unwrap(), int(15));
        assert_eq!(count_cacti_closed(4).unwrap(), int(735));
        assert_eq!(enumerate_cacti(range_set(3)).unwrap().len(), 1);
        assert_eq!(enumerate_cacti(range_set(5)).unwrap().len(), 15);
        assert_eq!(enumerate_cacti(range_set(7)).unwrap().len(), 735);
        assert!(enumerate_cacti(range_set(4)).unwrap().is_empty());
        for g in enumerate_cacti(range_set(7)).unwrap() {
            assert!(is_triangular_cactus(&g));
            assert_eq!(husimi_type(&g), Some(HusimiType::cactus(4)));
        }
    }

    #[test]
    fn husimi_examples() {
        assert_eq!(count_husimi_closed(3, &HusimiType::new(vec![2])).unwrap(), int(3));
        assert_eq!(count_husimi_closed(3, &HusimiType::new(vec![0, 1])).unwrap(), int(1));
        assert_eq!(count_husimi_closed(4, &HusimiType::new(vec![1, 1])).unwrap(), int(12));
        assert_eq!(enumerate_husimi(4, &HusimiType::new(vec![1, 1])).unwrap().len(), 12);
        // (1,1) needs exactly four vertices
        assert_eq!(count_husimi_closed(5, &HusimiType::new(vec![1, 1])).unwrap(), int(0));
        assert!(enumerate_husimi(5, &HusimiType::new(vec![1, 1])).unwrap().is_empty());
        assert_eq!(count_husimi_closed(5, &HusimiType::new(vec![2, 1])).unwrap(), int(150));
        assert_eq!(enumerate_husimi(5, &HusimiType::new(vec![2, 1])).unwrap().len(), 150);
        // Cayley
        for p in 1..=7usize {
            let trees = HusimiType::new(vec![p - 1]);
            assert_eq!(count_husimi_closed(p, &trees).unwrap(), Integer::from(p).pow(p.saturating_sub(2) as u32));
        }
    }

    #[test]
    fn feasible_type_lists() {
        assert_eq!(HusimiType::feasible_types(1), vec![HusimiType::default()]);
        assert_eq!(HusimiType::feasible_types(4).len(), 3);
        for t in HusimiType::feasible_types(6) {
            assert_eq!(t.connected_vertex_count(), 6);
        }
    }

    #[test]
    fn type_parsing() {
        assert_eq!("(0,1)".parse::<HusimiType>().unwrap(), HusimiType::new(vec![0, 1]));
        assert_eq!("2".parse::<HusimiType>().unwrap(), HusimiType::new(vec![2]));
        assert!("x".parse::<HusimiType>().is_err());
    }

    #[test]
    fn desert_examples() {
        assert_eq!(enumerate_deserts(3, 1).unwrap().len(), 4);
        assert_eq!(enumerate_rooted_deserts(3, 1).unwrap().len(), 12);
        assert_eq!(enumerate_rooted_deserts(3, 2).unwrap().len(), 1);
        assert_eq!(count_rdes_closed(4, 1).unwrap(), int(540));
        assert_eq!(count_rdes_closed(4, 2).unwrap(), int(60));
        assert_eq!(count_rdes_closed(3, 2).unwrap(), int(1));
        assert_eq!(count_des1_closed(4).unwrap(), int(100));
        assert_eq!(des_convolution(3, 1).unwrap(), int(4));
        assert_eq!(des_convolution(4, 1).unwrap(), int(100));
        assert_eq!(des_convolution(3, 2).unwrap(), int(1));
        assert!(count_rdes_closed(3, 3).is_err());
    }

    #[test]
    fn desert_counts_agree() {
        for n in 2..=4 {
            for m in 1..n {
                let des = enumerate_deserts(n, m).unwrap();
                let rdes = enumerate_rooted_deserts(n, m).unwrap();
                assert_eq!(Integer::from(des.len()), des_convolution(n, m).unwrap());
                assert_eq!(Integer::from(rdes.len()), count_rdes_closed(n, m).unwrap());
                for g in &des {
                    let fiber = rdes.iter().filter(|r| r.graph() == g).count();
                    let product: usize = g.components().iter().map(|&c| size(c)).product();
                    assert_eq!(fiber, product);
                }
            }
            assert_eq!(Integer::from(enumerate_deserts(n, 1).unwrap().len()), count_des1_closed(n).unwrap());
        }
    }

    #[test]
    fn rooted_desert_validation() {
        let g = graph(4, &[(1, 2), (2, 3), (1, 3)]);
        assert!(RootedDesert::new(g, set_of(&[1, 4])).is_ok());
        assert!(RootedDesert::new(g, set_of(&[1, 2, 4])).is_err());
        assert!(RootedDesert::new(g, set_of(&[1])).is_err());
        let path = graph(3, &[(1, 2), (2, 3)]);
        assert!(RootedDesert::new(path, set_of(&[1])).is_err());
    }
}
