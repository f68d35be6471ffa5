//! Kazhdan–Lusztig and inverse Kazhdan–Lusztig polynomials of braid matroids.
//!
//! Flats of `B_n` are set partitions of `[n]`. A flat whose blocks have sizes
//! `λ = (λ₁, …, λ_ℓ)` restricts to `B_{λ₁} ⊕ … ⊕ B_{λ_ℓ}` and contracts to
//! `B_ℓ`, so every sum over the lattice of flats is aggregated by partition
//! type, weighted by [`flat_count`].
//!
//! `P` is obtained from
//!
//! ```text
//! t^{n-1} P_{B_n}(1/t) = Σ_F χ_{B_n|F}(t) · P_{B_n/F}(t)
//! ```
//!
//! and `Q` from
//!
//! ```text
//! P_M(t) = -Σ_{F ≠ E} P_{M|F}(t) · (-1)^{rk M/F} · Q_{M/F}(t)
//! ```
//!
//! by isolating the `F = ∅` term in each.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{domain, invariant, Result};
use crate::exact::{binomial, double_factorial, expect_integer, factorial, ipow, rat, rat_of, sign, IntPoly, Integer};

/// A partition `λ ⊢ k`, parts weakly decreasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartitionType {
    parts: Vec<usize>,
}

impl PartitionType {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return domain(format!("partition parts must be positive: {parts:?}"));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `k`, the number being partitioned.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `ℓ(λ)`
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    /// Multiplicity of each distinct part size.
    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }
}

impl fmt::Display for PartitionType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All partitions of `k` in reverse-lexicographic order.
pub fn partitions_of(k: usize) -> Result<Vec<PartitionType>> {
    if k == 0 {
        return domain("partitions_of needs k >= 1");
    }
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<PartitionType>) {
        if rest == 0 {
            out.push(PartitionType { parts: cur.clone() });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(k, k, &mut Vec::new(), &mut out);
    Ok(out)
}

/// Number of set partitions of `[k]` with block sizes `λ`.
pub fn flat_count(lambda: &PartitionType) -> Integer {
    let mut denom = Integer::one();
    for &p in &lambda.parts {
        denom *= factorial(p as u64);
    }
    for &m in lambda.multiplicities().values() {
        denom *= factorial(m as u64);
    }
    factorial(lambda.size() as u64) / denom
}

/// `χ_{B_n}(t) = (t-1)(t-2)⋯(t-(n-1))`.
pub fn char_poly_braid(n: usize) -> Result<IntPoly> {
    if n == 0 {
        return domain("char_poly_braid needs n >= 1");
    }
    Ok((1..n).fold(IntPoly::one(), |acc, i| &acc * &IntPoly::from_coeffs(vec![-Integer::from(i), Integer::one()])))
}

/// Where a table entry came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    Recursion,
    Enumeration,
    Cache,
}

/// Which of the two polynomials.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PolyKind {
    P,
    Q,
}

impl fmt::Display for PolyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PolyKind::P => "P",
            PolyKind::Q => "Q",
        })
    }
}

#[derive(Debug, Clone)]
struct Entry {
    poly: IntPoly,
    provenance: Provenance,
}

/// Memo of `P_{B_n}` and `Q_{B_n}`. Inserts are validated against the
/// nonnegativity and degree bounds.
#[derive(Debug, Clone, Default)]
pub struct KlTable {
    entries: BTreeMap<(PolyKind, usize), Entry>,
}

/// Checks the coefficient sign and `deg < (n-1)/2` bounds for `B_n`.
pub fn check_kl_bounds(kind: PolyKind, n: usize, poly: &IntPoly) -> Result<()> {
    if n == 0 {
        return domain("braid matroids are indexed from n = 1");
    }
    if !poly.all_nonnegative() {
        return invariant(format!("{kind}_B{n} = {poly} has a negative coefficient"));
    }
    match poly.degree() {
        None => invariant(format!("{kind}_B{n} is zero")),
        Some(0) if n == 1 => Ok(()),
        Some(d) if 2 * d >= n - 1 && n > 1 => invariant(format!("{kind}_B{n} = {poly} violates deg < (n-1)/2")),
        Some(_) if n == 1 => invariant(format!("{kind}_B1 must be constant")),
        Some(_) => Ok(()),
    }
}

impl KlTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, kind: PolyKind, n: usize) -> Option<&IntPoly> {
        self.entries.get(&(kind, n)).map(|e| &e.poly)
    }

    pub fn provenance(&self, kind: PolyKind, n: usize) -> Option<Provenance> {
        self.entries.get(&(kind, n)).map(|e| e.provenance)
    }

    pub fn insert(&mut self, kind: PolyKind, n: usize, poly: IntPoly, provenance: Provenance) -> Result<()> {
        check_kl_bounds(kind, n, &poly)?;
        self.entries.insert((kind, n), Entry { poly, provenance });
        Ok(())
    }

    /// `(kind, n, poly, provenance)` for every entry, ordered by kind then n.
    pub fn iter(&self) -> impl Iterator<Item = (PolyKind, usize, &IntPoly, Provenance)> {
        self.entries.iter().map(|(&(k, n), e)| (k, n, &e.poly, e.provenance))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    fn require(&self, kind: PolyKind, n: usize) -> &IntPoly {
        self.get(kind, n).expect("bottom-up fill guarantees smaller entries")
    }
}

/// `∏ P_{B_{λᵢ}}`, the KL polynomial of a flat's restriction.
fn restriction_p(lambda: &PartitionType, table: &KlTable) -> IntPoly {
    lambda.parts().iter().fold(IntPoly::one(), |acc, &p| &acc * table.require(PolyKind::P, p))
}

fn restriction_chi(lambda: &PartitionType, chis: &[IntPoly]) -> IntPoly {
    lambda.parts().iter().fold(IntPoly::one(), |acc, &p| &acc * &chis[p])
}

fn is_bottom(lambda: &PartitionType) -> bool {
    lambda.parts().iter().all(|&p| p == 1)
}

/// `P_{B_n}(t)`, memoized into `table` together with every smaller `P`.
pub fn kl_poly_braid(n: usize, table: &mut KlTable) -> Result<IntPoly> {
    if n == 0 {
        return domain("kl_poly_braid needs n >= 1");
    }
    for k in 1..=n {
        if table.get(PolyKind::P, k).is_none() {
            let p = compute_p(k, table)?;
            table.insert(PolyKind::P, k, p, Provenance::Recursion)?;
        }
    }
    Ok(table.require(PolyKind::P, n).clone())
}

fn compute_p(n: usize, table: &KlTable) -> Result<IntPoly> {
    if n == 1 {
        return Ok(IntPoly::one());
    }
    let d = n - 1;
    let chis =
        (0..=n).map(|k| if k == 0 { Ok(IntPoly::one()) } else { char_poly_braid(k) }).collect::<Result<Vec<_>>>()?;
    // every nonempty flat: χ of the restriction times P of the contraction
    let mut rhs = IntPoly::zero();
    for lambda in partitions_of(n)? {
        if is_bottom(&lambda) {
            continue;
        }
        let term = &restriction_chi(&lambda, &chis) * table.require(PolyKind::P, lambda.length());
        rhs = &rhs + &term.scale(&flat_count(&lambda));
    }
    let coeffs: Vec<Integer> = (0..).take_while(|j| 2 * j < d).map(|j| rhs.coeff(d - j)).collect();
    let p = IntPoly::from_coeffs(coeffs);
    // the low half must agree too, or the recursion is inconsistent
    if &p.reversal(d)? - &p != rhs {
        return invariant(format!("KL recursion for B{n} is not self-consistent"));
    }
    Ok(p)
}

/// `Q_{B_n}(t)`, memoized into `table` together with every smaller `P` and `Q`.
pub fn inv_kl_poly_braid(n: usize, table: &mut KlTable) -> Result<IntPoly> {
    kl_poly_braid(n, table)?;
    for k in 1..=n {
        if table.get(PolyKind::Q, k).is_none() {
            let q = compute_q(k, table)?;
            table.insert(PolyKind::Q, k, q, Provenance::Recursion)?;
        }
    }
    Ok(table.require(PolyKind::Q, n).clone())
}

fn compute_q(n: usize, table: &KlTable) -> Result<IntPoly> {
    if n == 1 {
        return Ok(IntPoly::one());
    }
    let d = (n - 1) as i64;
    let mut inner = table.require(PolyKind::P, n).clone();
    for lambda in partitions_of(n)? {
        let ell = lambda.length();
        if is_bottom(&lambda) || ell == 1 {
            continue;
        }
        let coeff = flat_count(&lambda) * sign(ell as i64 - 1);
        let term = &restriction_p(&lambda, table) * table.require(PolyKind::Q, ell);
        inner = &inner + &term.scale(&coeff);
    }
    Ok(inner.scale(&sign(d + 1)))
}

/// The four leading-coefficient closed forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LeadingForm {
    /// `[t^{n-1}] P_{B_{2n}}`
    PEven,
    /// `[t^{n-2}] P_{B_{2n-1}}`
    POdd,
    /// `[t^{n-1}] Q_{B_{2n}}`
    QEven,
    /// `[t^{n-2}] Q_{B_{2n-1}}`
    QOdd,
}

impl LeadingForm {
    /// Index of the braid matroid whose leading coefficient this is.
    pub fn braid_index(self, n: usize) -> usize {
        match self {
            LeadingForm::PEven | LeadingForm::QEven => 2 * n,
            LeadingForm::POdd | LeadingForm::QOdd => 2 * n - 1,
        }
    }

    /// Degree of the leading coefficient.
    pub fn degree(self, n: usize) -> usize {
        match self {
            LeadingForm::PEven | LeadingForm::QEven => n - 1,
            LeadingForm::POdd | LeadingForm::QOdd => n - 2,
        }
    }

    pub fn kind(self) -> PolyKind {
        match self {
            LeadingForm::PEven | LeadingForm::POdd => PolyKind::P,
            LeadingForm::QEven | LeadingForm::QOdd => PolyKind::Q,
        }
    }
}

/// `(2n-1)^{n-2} (2n-3)!!`
fn even_leading(n: i64) -> Result<crate::exact::Rational> {
    Ok(ipow(2 * n - 1, n - 2)? * rat_of(double_factorial(2 * n - 3)?))
}

/// `(n-1)^{n-5} (2n-1)! / (3 (n-2)!)`
fn odd_q_leading(n: i64) -> Result<crate::exact::Rational> {
    Ok(ipow(n - 1, n - 5)? * rat_of(factorial((2 * n - 1) as u64)) / rat_of(factorial((n - 2) as u64) * 3))
}

/// Closed form for the leading coefficient selected by `which`, `n >= 2`.
pub fn leading_coeff_closed_form(which: LeadingForm, n: usize) -> Result<Integer> {
    if n < 2 {
        return domain(format!("leading coefficient closed forms need n >= 2, got {n}"));
    }
    let m = n as i64;
    let value = match which {
        LeadingForm::PEven | LeadingForm::QEven => even_leading(m)?,
        LeadingForm::POdd => even_leading(m)? - rat(m - 2) * odd_q_leading(m)?,
        LeadingForm::QOdd => odd_q_leading(m)?,
    };
    expect_integer(&value, &format!("{which:?} closed form at n = {n}"))
}

/// Two sides of a coefficient relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffCheck {
    pub lhs: Integer,
    pub rhs: Integer,
}

impl CoeffCheck {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// `[t^{n-1}] P_{B_{2n}}` against `[t^{n-1}] Q_{B_{2n}}`.
pub fn verify_parity_identity(n: usize, table: &mut KlTable) -> Result<CoeffCheck> {
    if n == 0 {
        return domain("parity identity needs n >= 1");
    }
    let p = kl_poly_braid(2 * n, table)?;
    let q = inv_kl_poly_braid(2 * n, table)?;
    Ok(CoeffCheck { lhs: p.coeff(n - 1), rhs: q.coeff(n - 1) })
}

/// `[t^{n-2}](P + Q)_{B_{2n-1}}` against
/// `Σ_{j=1}^{n-1} C(2n-1, 2j) [t^{j-1}] P_{B_{2j}} · [t^{n-1-j}] Q_{B_{2n-2j}}`.
pub fn verify_leading_relation(n: usize, table: &mut KlTable) -> Result<CoeffCheck> {
    if n < 2 {
        return domain("leading relation needs n >= 2");
    }
    inv_kl_poly_braid(2 * n, table)?;
    let lhs = table.require(PolyKind::P, 2 * n - 1).coeff(n - 2) + table.require(PolyKind::Q, 2 * n - 1).coeff(n - 2);
    let mut rhs = Integer::zero();
    for j in 1..n {
        rhs += binomial((2 * n - 1) as u64, (2 * j) as u64)
            * table.require(PolyKind::P, 2 * j).coeff(j - 1)
            * table.require(PolyKind::Q, 2 * n - 2 * j).coeff(n - 1 - j);
    }
    Ok(CoeffCheck { lhs, rhs })
}

/// For every proper nonempty flat type `λ` of `B_{2n-1}`, the coefficient of
/// `t^{n-2}` in `P_{B|F} · (-1)^{rk B/F} · Q_{B/F}` summed over the
/// `flat_count(λ)` flats of that type. Only hook types `(2j, 1, …, 1)`
/// contribute nonzero values.
pub fn leading_contributions_by_type(n: usize, table: &mut KlTable) -> Result<Vec<(PartitionType, Integer)>> {
    if n < 2 {
        return domain("leading contributions need n >= 2");
    }
    let k = 2 * n - 1;
    inv_kl_poly_braid(k, table)?;
    let mut out = Vec::new();
    for lambda in partitions_of(k)? {
        let ell = lambda.length();
        if is_bottom(&lambda) || ell == 1 {
            continue;
        }
        let term = &restriction_p(&lambda, table) * table.require(PolyKind::Q, ell);
        let c = term.coeff(n - 2) * sign(ell as i64 - 1) * flat_count(&lambda);
        out.push((lambda, c));
    }
    Ok(out)
}
