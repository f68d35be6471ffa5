//! Exhaustive generation of labeled series-parallel matroids.
//!
//! Connected series-parallel matroids on `{1, …, s}` are grown level by level
//! from a single coloop by series and parallel extensions, deduplicated by
//! labeled circuit set. Non-simple members are kept because simple matroids
//! on `s` elements can have non-simple ancestors. Catalogs on arbitrary label
//! sets are order-preserving relabelings of these levels.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::Zero;

use crate::error::{domain, resource, Result};
use crate::exact::{binomial, IntPoly, Integer};
use crate::matroid::{elems, range_set, size, subsets, ElemSet, LabeledMatroid};

/// Largest ground set the generator will build.
pub const MAX_SP_GROUND: usize = 9;

type Level = Arc<Vec<LabeledMatroid>>;

/// Connected series-parallel matroids on `{1, …, s}` for each built `s`.
#[derive(Debug, Clone, Default)]
pub struct SpCatalog {
    levels: Vec<Level>,
}

fn shared() -> &'static Mutex<SpCatalog> {
    static CATALOG: OnceLock<Mutex<SpCatalog>> = OnceLock::new();
    CATALOG.get_or_init(|| Mutex::new(SpCatalog::default()))
}

impl SpCatalog {
    /// Builds every level up to `max_size`.
    pub fn up_to(max_size: usize) -> Result<Self> {
        let mut c = Self::default();
        c.extend_to(max_size)?;
        Ok(c)
    }

    /// Process-wide catalog, extended on demand. Levels are shared, not copied.
    pub fn shared(max_size: usize) -> Result<Self> {
        let mut guard = shared().lock().unwrap_or_else(|e| e.into_inner());
        guard.extend_to(max_size)?;
        Ok(guard.clone())
    }

    pub fn max_size(&self) -> usize {
        self.levels.len().saturating_sub(1)
    }

    pub fn extend_to(&mut self, max_size: usize) -> Result<()> {
        if max_size > MAX_SP_GROUND {
            return resource(format!("series-parallel catalog capped at {MAX_SP_GROUND} elements"));
        }
        if self.levels.is_empty() {
            self.levels.push(Arc::new(Vec::new()));
        }
        while self.levels.len() <= max_size {
            let s = self.levels.len();
            let next =
                if s == 1 { vec![LabeledMatroid::uniform(1, &[1])?] } else { grow(&self.levels[s - 1], s as u8)? };
            self.levels.push(Arc::new(next));
        }
        Ok(())
    }

    /// Connected series-parallel matroids on `{1, …, s}`, sorted.
    pub fn level(&self, s: usize) -> &[LabeledMatroid] {
        &self.levels[s]
    }

    /// Number of connected simple members on `s` labels, indexed by rank.
    pub fn simple_counts(&self, s: usize) -> Vec<u64> {
        let mut counts = vec![0u64; s + 1];
        for m in self.levels[s].iter().filter(|m| m.is_simple()) {
            counts[m.rank()] += 1;
        }
        counts
    }
}

fn grow(prev: &[LabeledMatroid], s: u8) -> Result<Vec<LabeledMatroid>> {
    let mut seen: HashSet<LabeledMatroid> = HashSet::new();
    for new in 1..=s {
        let shift = |i: u8| if i < new { i } else { i + 1 };
        for m in prev {
            let base = m.relabel(shift);
            for at in elems(base.ground()) {
                for m2 in [base.series_extension(at, new)?, base.parallel_extension(at, new)?] {
                    // only the series extension of a lone coloop disconnects
                    if s > 2 || m2.is_connected() {
                        seen.insert(m2);
                    }
                }
            }
        }
    }
    let mut out: Vec<_> = seen.into_iter().collect();
    out.sort_unstable();
    Ok(out)
}

/// Order-preserving relabeling of `{1, …, |target|}` onto `target`.
fn onto(target: ElemSet) -> impl Fn(u8) -> u8 {
    let labels: Vec<u8> = elems(target).collect();
    move |i| labels[i as usize - 1]
}

fn check_ground(e: ElemSet) -> Result<usize> {
    let s = size(e);
    if s == 0 || s > MAX_SP_GROUND {
        return resource(format!("label sets must have 1..={MAX_SP_GROUND} elements, got {s}"));
    }
    Ok(s)
}

/// All connected series-parallel matroids on exactly `e`, simple or not.
pub fn generate_connected_sp(e: ElemSet) -> Result<Vec<LabeledMatroid>> {
    let s = check_ground(e)?;
    let cat = SpCatalog::shared(s)?;
    let f = onto(e);
    let mut out: Vec<_> = cat.level(s).iter().map(|m| m.relabel(&f)).collect();
    out.sort_unstable();
    Ok(out)
}

fn check_nk(n: usize, k: usize) -> Result<()> {
    if n == 0 || k > n {
        return domain(format!("S(n, k) needs 1 <= n and k <= n; got ({n}, {k})"));
    }
    if n > MAX_SP_GROUND {
        return resource(format!("S(n, k) supported for 1 <= n <= {MAX_SP_GROUND}, k <= n; got ({n}, {k})"));
    }
    Ok(())
}

/// `S(n, k)`: simple quasi series-parallel matroids of rank `k` on `{1, …, n}`,
/// in sorted order.
pub fn enumerate_s(n: usize, k: usize) -> Result<Vec<LabeledMatroid>> {
    check_nk(n, k)?;
    let cat = SpCatalog::shared(n)?;
    let mut blocks: HashMap<ElemSet, Vec<LabeledMatroid>> = HashMap::new();
    let mut out = Vec::new();
    let empty = LabeledMatroid::from_circuits_unchecked(0, Vec::new());
    sum_over_blocks(range_set(n as u8), k, empty, &cat, &mut blocks, &mut out);
    out.sort_unstable();
    Ok(out)
}

fn sum_over_blocks(
    remaining: ElemSet,
    k_left: usize,
    acc: LabeledMatroid,
    cat: &SpCatalog,
    blocks: &mut HashMap<ElemSet, Vec<LabeledMatroid>>,
    out: &mut Vec<LabeledMatroid>,
) {
    if remaining == 0 {
        if k_left == 0 {
            out.push(acc);
        }
        return;
    }
    let low = remaining & remaining.wrapping_neg();
    for rest in subsets(remaining & !low) {
        let block = rest | low;
        let members = blocks
            .entry(block)
            .or_insert_with(|| {
                let f = onto(block);
                cat.level(size(block)).iter().filter(|m| m.is_simple()).map(|m| m.relabel(&f)).collect()
            })
            .clone();
        for m in members.iter().filter(|m| m.rank() <= k_left) {
            let next = acc.direct_sum(m).expect("blocks are disjoint");
            sum_over_blocks(remaining & !block, k_left - m.rank(), next, cat, blocks, out);
        }
    }
}

/// `|S(n, k)|`, from the catalog's simple connected counts by the block
/// containing the smallest label.
pub fn count_s(n: usize, k: usize) -> Result<Integer> {
    check_nk(n, k)?;
    let cat = SpCatalog::shared(n)?;
    let c: Vec<Vec<u64>> = (0..=n).map(|s| if s == 0 { vec![] } else { cat.simple_counts(s) }).collect();
    // f[a][r] = |S(a, r)|
    let mut f = vec![vec![Integer::zero(); n + 1]; n + 1];
    f[0][0] = Integer::from(1);
    for a in 1..=n {
        for r in 0..=a {
            let mut total = Integer::zero();
            for b in 1..=a {
                for (rb, &cnt) in c[b].iter().enumerate() {
                    if cnt == 0 || rb > r {
                        continue;
                    }
                    total += binomial((a - 1) as u64, (b - 1) as u64) * cnt * &f[a - b][r - rb];
                }
            }
            f[a][r] = total;
        }
    }
    Ok(f[n][k].clone())
}

/// `E_n`: connected members of `S(2n-2, n)`.
pub fn count_e(n: usize) -> Result<Integer> {
    if !(2..=5).contains(&n) {
        return resource(format!("count_e supported for 2 <= n <= 5, got {n}"));
    }
    let connected = enumerate_s(2 * n - 2, n)?.into_iter().filter(|m| m.is_connected()).count();
    Ok(Integer::from(connected))
}

/// Splits `S(2n-1, n)` by the number of 3-circuits through `2n-1`.
pub fn classify_by_m(n: usize) -> Result<BTreeMap<usize, Vec<LabeledMatroid>>> {
    if !(2..=4).contains(&n) {
        return resource(format!("classify_by_m supported for 2 <= n <= 4, got {n}"));
    }
    let top = (2 * n - 1) as u8;
    let mut out: BTreeMap<usize, Vec<LabeledMatroid>> = BTreeMap::new();
    for m in enumerate_s(2 * n - 1, n)? {
        out.entry(m.count_3circuits_through(top)?).or_default().push(m);
    }
    Ok(out)
}

/// `Σ_i |S(n-1, n-1-i)| t^i`.
pub fn kl_coeffs_via_enumeration(n: usize) -> Result<IntPoly> {
    if n == 0 || n > MAX_SP_GROUND + 1 {
        return resource(format!("enumeration-backed KL polynomial supported for 1 <= n <= {}", MAX_SP_GROUND + 1));
    }
    if n == 1 {
        return Ok(IntPoly::one());
    }
    let coeffs = (0..n).map(|i| count_s(n - 1, n - 1 - i)).collect::<Result<Vec<_>>>()?;
    Ok(IntPoly::from_coeffs(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;
    use crate::matroid::set_of;

    #[test]
    fn level_sizes_match_labeled_network_counts() {
        // connected SP matroids on s labels = series-parallel networks on s-1 labeled edges
        let cat = SpCatalog::shared(7).unwrap();
        let sizes: Vec<usize> = (1..=7).map(|s| cat.level(s).len()).collect();
        assert_eq!(sizes, vec![1, 1, 2, 8, 52, 472, 5504]);
    }

    #[test]
    fn small_generation_examples() {
        let one = generate_connected_sp(set_of(&[1])).unwrap();
        assert_eq!(one, vec![LabeledMatroid::uniform(1, &[1]).unwrap()]);
        let three: Vec<_> = generate_connected_sp(range_set(3))
            .unwrap()
            .into_iter()
            .filter(|m| m.is_simple() && m.rank() == 2)
            .collect();
        assert_eq!(three, vec![LabeledMatroid::uniform(2, &[1, 2, 3]).unwrap()]);
        let four: Vec<_> = generate_connected_sp(range_set(4))
            .unwrap()
            .into_iter()
            .filter(|m| m.is_simple() && m.rank() == 3)
            .collect();
        assert_eq!(four, vec![LabeledMatroid::uniform(3, &[1, 2, 3, 4]).unwrap()]);
        assert!(generate_connected_sp(0).is_err());
        assert!(generate_connected_sp(0b111_1111_1110).is_err());
    }

    #[test]
    fn relabeled_generation_uses_target_labels() {
        let e = set_of(&[2, 5, 9]);
        for m in generate_connected_sp(e).unwrap() {
            assert_eq!(m.ground(), e);
        }
    }

    #[test]
    fn s_counts() {
        assert_eq!(count_s(3, 2).unwrap(), int(1));
        assert_eq!(count_s(4, 3).unwrap(), int(5));
        assert_eq!(count_s(2, 1).unwrap(), int(0));
        assert_eq!(enumerate_s(4, 3).unwrap().len(), 5);
        for n in 1..=7 {
            assert_eq!(count_s(n, n).unwrap(), int(1));
            for k in 0..=n {
                assert_eq!(Integer::from(enumerate_s(n, k).unwrap().len()), count_s(n, k).unwrap(), "S({n},{k})");
            }
        }
        assert!(count_s(10, 3).is_err());
    }

    #[test]
    fn generated_matroids_avoid_excluded_minors() {
        let cat = SpCatalog::shared(6).unwrap();
        for s in 1..=6 {
            for m in cat.level(s) {
                assert!(m.is_connected());
                assert!(!m.has_excluded_minor(), "{m}");
            }
        }
        for m in enumerate_s(7, 4).unwrap() {
            assert!(m.is_quasi_series_parallel() && m.is_simple() && m.is_chordal());
        }
    }

    #[test]
    fn catalog_members_satisfy_axioms() {
        let cat = SpCatalog::shared(6).unwrap();
        for s in 1..=6 {
            for m in cat.level(s) {
                LabeledMatroid::from_circuits(m.ground(), m.circuits().to_vec()).unwrap();
            }
        }
    }

    #[test]
    fn minor_closure_on_single_element_minors() {
        for m in enumerate_s(5, 3).unwrap() {
            for e in elems(m.ground()) {
                assert!(m.delete(e).unwrap().is_quasi_series_parallel());
                assert!(m.contract(e).unwrap().is_quasi_series_parallel());
            }
        }
    }

    #[test]
    fn e_counts() {
        assert_eq!(count_e(2).unwrap(), int(0));
        assert_eq!(count_e(3).unwrap(), int(1));
        assert_eq!(count_e(4).unwrap(), int(75));
    }

    #[test]
    fn m_classes() {
        let c2 = classify_by_m(2).unwrap();
        assert_eq!(c2.keys().copied().collect::<Vec<_>>(), vec![1]);
        assert_eq!(c2[&1].len(), 1);
        let c3 = classify_by_m(3).unwrap();
        let sizes: Vec<(usize, usize)> = c3.iter().map(|(m, v)| (*m, v.len())).collect();
        assert_eq!(sizes, vec![(1, 12), (2, 3)]);
        for n in 2..=4 {
            let c = classify_by_m(n).unwrap();
            assert!(!c.contains_key(&0));
            let total: usize = c.values().map(Vec::len).sum();
            assert_eq!(Integer::from(total), count_s(2 * n - 1, n).unwrap());
        }
    }

    #[test]
    fn deleting_top_keeps_rank() {
        for n in 2..=4 {
            let top = (2 * n - 1) as u8;
            for m in enumerate_s(2 * n - 1, n).unwrap() {
                let d = m.delete(top).unwrap();
                assert_eq!(d.rank(), n);
                assert!(d.is_simple() && d.is_quasi_series_parallel());
            }
        }
    }

    #[test]
    fn enumeration_kl_small() {
        assert_eq!(kl_coeffs_via_enumeration(2).unwrap(), IntPoly::one());
        assert_eq!(kl_coeffs_via_enumeration(4).unwrap(), IntPoly::from_i64s(&[1, 1]));
        assert_eq!(kl_coeffs_via_enumeration(5).unwrap(), IntPoly::from_i64s(&[1, 5]));
    }
}
