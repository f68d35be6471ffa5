//! Slow, literal reference computations used to cross-check the main
//! modules. Nothing here calls into `klcore`, `spgen` or the graph
//! predicates of `cactus`; set partitions, polynomials and graphs use their
//! own representations and are only converted to shared types at the end.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use crate::cactus::{HusimiType, LabeledGraph};
use crate::error::{domain, resource, Result};
use crate::exact::IntPoly;

/// Largest `n` (or `p`) any oracle accepts.
pub const MAX_ORACLE_N: usize = 6;

fn check_cap(n: usize, what: &str) -> Result<()> {
    if n == 0 {
        return domain(format!("{what} needs a positive size"));
    }
    if n > MAX_ORACLE_N {
        return resource(format!("{what} oracle capped at {MAX_ORACLE_N}, got {n}"));
    }
    Ok(())
}

// --- polynomials as plain coefficient vectors -------------------------------

type Poly = Vec<i64>;

fn trim(mut p: Poly) -> Poly {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

fn padd(a: &Poly, b: &Poly) -> Poly {
    let mut out = vec![0; a.len().max(b.len())];
    for (i, v) in a.iter().enumerate() {
        out[i] += v;
    }
    for (i, v) in b.iter().enumerate() {
        out[i] += v;
    }
    trim(out)
}

fn pmul(a: &Poly, b: &Poly) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn pscale(a: &Poly, c: i64) -> Poly {
    trim(a.iter().map(|v| v * c).collect())
}

fn monomial(c: i64, d: usize) -> Poly {
    let mut p = vec![0; d + 1];
    p[d] = c;
    trim(p)
}

// --- the lattice of set partitions of [n] ----------------------------------

/// All set partitions of `{0, …, n-1}` as restricted growth strings.
fn set_partitions(n: usize) -> Vec<Vec<u8>> {
    fn go(i: usize, n: usize, cur: &mut Vec<u8>, max: u8, out: &mut Vec<Vec<u8>>) {
        if i == n {
            out.push(cur.clone());
            return;
        }
        for b in 0..=max + 1 {
            if i == 0 && b > 0 {
                break;
            }
            cur.push(b);
            go(i + 1, n, cur, if i == 0 { 0 } else { max.max(b) }, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, &mut Vec::new(), 0, &mut out);
    out
}

struct PartitionLattice {
    n: usize,
    elems: Vec<Vec<u8>>,
    rank: Vec<usize>,
    leq: Vec<Vec<bool>>,
    mobius: Vec<Vec<i64>>,
}

impl PartitionLattice {
    fn new(n: usize) -> Self {
        let elems = set_partitions(n);
        let k = elems.len();
        let rank: Vec<usize> = elems.iter().map(|p| n - (*p.iter().max().unwrap() as usize + 1)).collect();
        let refines = |f: &[u8], g: &[u8]| (0..n).all(|i| (0..n).all(|j| f[i] != f[j] || g[i] == g[j]));
        let leq: Vec<Vec<bool>> = (0..k).map(|a| (0..k).map(|b| refines(&elems[a], &elems[b])).collect()).collect();
        let mut order: Vec<usize> = (0..k).collect();
        order.sort_by_key(|&i| rank[i]);
        let mut mobius = vec![vec![0i64; k]; k];
        for f in 0..k {
            for &h in &order {
                if !leq[f][h] {
                    continue;
                }
                mobius[f][h] = if f == h {
                    1
                } else {
                    -(0..k).filter(|&g| g != h && leq[f][g] && leq[g][h]).map(|g| mobius[f][g]).sum::<i64>()
                };
            }
        }
        PartitionLattice { n, elems, rank, leq, mobius }
    }

    fn bottom(&self) -> usize {
        self.rank.iter().position(|&r| r == 0).unwrap()
    }

    fn top(&self) -> usize {
        self.rank.iter().position(|&r| r == self.n - 1).unwrap()
    }

    fn between(&self, f: usize, g: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.elems.len()).filter(move |&h| self.leq[f][h] && self.leq[h][g])
    }

    fn char_poly(&self, f: usize, g: usize) -> Poly {
        let mut out = Vec::new();
        for h in self.between(f, g) {
            out = padd(&out, &monomial(self.mobius[f][h], self.rank[g] - self.rank[h]));
        }
        out
    }

    /// KL polynomial of the interval `[f, g]`, straight from
    /// `t^r P(1/t) - P(t) = Σ_{f < h <= g} χ_{[f,h]} P_{[h,g]}`.
    fn kl(&self, f: usize, g: usize, memo: &mut HashMap<(usize, usize), Poly>) -> Poly {
        if let Some(p) = memo.get(&(f, g)) {
            return p.clone();
        }
        let r = self.rank[g] - self.rank[f];
        let p = if f == g {
            vec![1]
        } else {
            let mut rhs = Vec::new();
            for h in self.between(f, g).filter(|&h| h != f) {
                let tail = self.kl(h, g, memo);
                rhs = padd(&rhs, &pmul(&self.char_poly(f, h), &tail));
            }
            let mut p = vec![0; r.div_ceil(2)];
            for (i, c) in p.iter_mut().enumerate() {
                if 2 * i < r {
                    *c = -rhs.get(i).copied().unwrap_or(0);
                }
            }
            trim(p)
        };
        memo.insert((f, g), p.clone());
        p
    }

    /// Inverse KL polynomial of `[f, g]` from
    /// `P = -Σ_{f <= h < g} P_{[f,h]} (-1)^{rk[h,g]} Q_{[h,g]}`.
    fn inv_kl(
        &self,
        f: usize,
        g: usize,
        pmemo: &mut HashMap<(usize, usize), Poly>,
        qmemo: &mut HashMap<(usize, usize), Poly>,
    ) -> Poly {
        if let Some(q) = qmemo.get(&(f, g)) {
            return q.clone();
        }
        let q = if f == g {
            vec![1]
        } else {
            let r = (self.rank[g] - self.rank[f]) as i64;
            let mut acc = self.kl(f, g, pmemo);
            for h in self.between(f, g).filter(|&h| h != f && h != g) {
                let sign = if (self.rank[g] - self.rank[h]).is_multiple_of(2) { 1 } else { -1 };
                let term = pmul(&self.kl(f, h, pmemo), &self.inv_kl(h, g, pmemo, qmemo));
                acc = padd(&acc, &pscale(&term, sign));
            }
            pscale(&acc, if r % 2 == 0 { -1 } else { 1 })
        };
        qmemo.insert((f, g), q.clone());
        q
    }
}

/// `χ_{B_n}` from the Möbius function of the partition lattice of `[n]`.
pub fn mobius_char_poly(n: usize) -> Result<IntPoly> {
    check_cap(n, "Möbius characteristic polynomial")?;
    let l = PartitionLattice::new(n);
    Ok(IntPoly::from_i64s(&l.char_poly(l.bottom(), l.top())))
}

/// `P_{B_n}` by the defining recursion over every interval of the partition lattice.
pub fn setpartition_kl(n: usize) -> Result<IntPoly> {
    check_cap(n, "set-partition KL")?;
    let l = PartitionLattice::new(n);
    Ok(IntPoly::from_i64s(&l.kl(l.bottom(), l.top(), &mut HashMap::new())))
}

/// `Q_{B_n}` from the flat-by-flat relation between `P` and `Q`.
pub fn setpartition_q_relation(n: usize) -> Result<IntPoly> {
    check_cap(n, "set-partition Q")?;
    let l = PartitionLattice::new(n);
    let q = l.inv_kl(l.bottom(), l.top(), &mut HashMap::new(), &mut HashMap::new());
    Ok(IntPoly::from_i64s(&q))
}

// --- exhaustive graph scan --------------------------------------------------

/// Property tested by [`graph_scan`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphPredicate {
    Cactus,
    /// Husimi graphs, optionally of one type.
    Husimi(Option<HusimiType>),
}

struct Adj {
    p: usize,
    m: [[bool; MAX_ORACLE_N]; MAX_ORACLE_N],
}

impl Adj {
    fn edge_count(&self) -> usize {
        (0..self.p).map(|i| (i + 1..self.p).filter(|&j| self.m[i][j]).count()).sum()
    }

    fn connected(&self) -> bool {
        let mut seen = vec![false; self.p];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for (w, &adj) in self.m[v].iter().enumerate().take(self.p) {
                if adj && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    fn triangles_on(&self, i: usize, j: usize) -> usize {
        (0..self.p).filter(|&k| self.m[i][k] && self.m[j][k]).count()
    }

    /// Connected, each edge on exactly one triangle, `2|E| = 3(|V| - 1)`.
    fn is_cactus(&self) -> bool {
        if !self.connected() || 2 * self.edge_count() != 3 * (self.p - 1) {
            return false;
        }
        (0..self.p).all(|i| (i + 1..self.p).all(|j| !self.m[i][j] || self.triangles_on(i, j) == 1))
    }

    fn is_clique(&self, s: &[usize]) -> bool {
        s.iter().enumerate().all(|(a, &i)| s[a + 1..].iter().all(|&j| self.m[i][j]))
    }

    fn chordal(&self) -> bool {
        let mut alive: Vec<usize> = (0..self.p).collect();
        while !alive.is_empty() {
            let simplicial = alive.iter().position(|&v| {
                let nb: Vec<usize> = alive.iter().copied().filter(|&w| self.m[v][w]).collect();
                self.is_clique(&nb)
            });
            match simplicial {
                Some(pos) => {
                    alive.remove(pos);
                }
                None => return false,
            }
        }
        true
    }

    /// No induced `K_4` minus an edge.
    fn diamond_free(&self) -> bool {
        for a in 0..self.p {
            for b in a + 1..self.p {
                if self.m[a][b] {
                    continue;
                }
                let common: Vec<usize> = (0..self.p).filter(|&k| self.m[a][k] && self.m[b][k]).collect();
                if common.iter().enumerate().any(|(x, &u)| common[x + 1..].iter().any(|&v| self.m[u][v])) {
                    return false;
                }
            }
        }
        true
    }

    fn is_husimi(&self) -> bool {
        self.connected() && self.chordal() && self.diamond_free()
    }

    /// Block sizes read off the maximal cliques with at least two vertices.
    fn clique_type(&self) -> HusimiType {
        let mut counts = vec![0usize; self.p];
        let cliques: Vec<u32> = (1u32..1 << self.p)
            .filter(|s| s.count_ones() >= 2)
            .filter(|&s| self.is_clique(&(0..self.p).filter(|&i| s & (1 << i) != 0).collect::<Vec<_>>()))
            .collect();
        for &s in &cliques {
            if !cliques.iter().any(|&t| t != s && t & s == s) {
                counts[s.count_ones() as usize - 2] += 1;
            }
        }
        HusimiType::new(counts)
    }

    fn to_graph(&self) -> LabeledGraph {
        let mut edges = Vec::new();
        for i in 0..self.p {
            for j in i + 1..self.p {
                if self.m[i][j] {
                    edges.push((i as u8 + 1, j as u8 + 1));
                }
            }
        }
        LabeledGraph::with_edges(((1u16 << self.p) - 1) << 1, &edges).expect("labels 1..=p")
    }
}

/// Every simple graph on `{1, …, p}` satisfying `pred`, sorted.
pub fn graph_scan(pred: &GraphPredicate, p: usize) -> Result<Vec<LabeledGraph>> {
    check_cap(p, "graph scan")?;
    let pairs: Vec<(usize, usize)> = (0..p).flat_map(|i| (i + 1..p).map(move |j| (i, j))).collect();
    let mut out = Vec::new();
    for mask in 0u32..1 << pairs.len() {
        let mut adj = Adj { p, m: [[false; MAX_ORACLE_N]; MAX_ORACLE_N] };
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if mask & (1 << k) != 0 {
                adj.m[i][j] = true;
                adj.m[j][i] = true;
            }
        }
        let keep = match pred {
            GraphPredicate::Cactus => adj.is_cactus(),
            GraphPredicate::Husimi(ty) => adj.is_husimi() && ty.as_ref().is_none_or(|t| adj.clique_type() == *t),
        };
        if keep {
            out.push(adj.to_graph());
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// One timed oracle evaluation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub oracle: String,
    pub input: String,
    pub value: String,
    pub wall: Duration,
}

/// Oracle ids accepted by [`run_oracle`].
pub const ORACLE_IDS: [&str; 5] = ["chi", "kl", "q", "cacti", "husimi"];

/// Runs an oracle by id: `chi`, `kl`, `q` take `n`; `cacti` takes `p`;
/// `husimi` takes `p` and an optional type.
pub fn run_oracle(id: &str, n: usize, ty: Option<&HusimiType>) -> Result<OracleResult> {
    let start = Instant::now();
    let (input, value) = match id {
        "chi" => (format!("n={n}"), mobius_char_poly(n)?.to_string()),
        "kl" => (format!("n={n}"), setpartition_kl(n)?.to_string()),
        "q" => (format!("n={n}"), setpartition_q_relation(n)?.to_string()),
        "cacti" => (format!("p={n}"), graph_scan(&GraphPredicate::Cactus, n)?.len().to_string()),
        "husimi" => {
            let input = match ty {
                Some(t) => format!("p={n},type={t}"),
                None => format!("p={n}"),
            };
            (input, graph_scan(&GraphPredicate::Husimi(ty.cloned()), n)?.len().to_string())
        }
        other => return domain(format!("unknown oracle {other:?}; expected one of {ORACLE_IDS:?}")),
    };
    Ok(OracleResult { oracle: id.into(), input, value, wall: start.elapsed() })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bell_numbers() {
        let bell: Vec<usize> = (1..=6).map(|n| set_partitions(n).len()).collect();
        assert_eq!(bell, vec![1, 2, 5, 15, 52, 203]);
    }

    #[test]
    fn char_poly_examples() {
        assert_eq!(mobius_char_poly(2).unwrap(), IntPoly::from_i64s(&[-1, 1]));
        assert_eq!(mobius_char_poly(3).unwrap(), IntPoly::from_i64s(&[2, -3, 1]));
        assert_eq!(mobius_char_poly(4).unwrap(), IntPoly::from_i64s(&[-6, 11, -6, 1]));
    }

    #[test]
    fn literal_kl_examples() {
        assert_eq!(setpartition_kl(4).unwrap(), IntPoly::from_i64s(&[1, 1]));
        assert_eq!(setpartition_kl(5).unwrap(), IntPoly::from_i64s(&[1, 5]));
        assert_eq!(setpartition_q_relation(2).unwrap(), IntPoly::from_i64s(&[1]));
        assert_eq!(setpartition_q_relation(3).unwrap(), IntPoly::from_i64s(&[2]));
        assert_eq!(setpartition_q_relation(5).unwrap().coeff(1), crate::exact::int(10));
        assert!(setpartition_kl(7).is_err());
    }

    #[test]
    fn graph_scan_examples() {
        assert_eq!(graph_scan(&GraphPredicate::Cactus, 5).unwrap().len(), 15);
        assert!(graph_scan(&GraphPredicate::Cactus, 4).unwrap().is_empty());
        assert_eq!(graph_scan(&GraphPredicate::Husimi(Some(HusimiType::new(vec![1, 1]))), 4).unwrap().len(), 12);
        assert!(graph_scan(&GraphPredicate::Husimi(Some(HusimiType::new(vec![1, 1]))), 5).unwrap().is_empty());
        // Cayley: trees are the Husimi graphs of type (p-1)
        assert_eq!(graph_scan(&GraphPredicate::Husimi(Some(HusimiType::new(vec![4]))), 5).unwrap().len(), 125);
    }
}
