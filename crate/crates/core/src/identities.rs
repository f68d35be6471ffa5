//! The Abel binomial identity, its derivatives and specializations, and
//! the chain of finite sums built from them, checked exactly over grids.
//!
//! Each side of an identity is a sum of terms `c · ∏ Lᵢ^{eᵢ}` where every
//! `Lᵢ` is an integer linear form in `x, y, a`. Identical forms are merged
//! before evaluation, so `A₀(x; a) = x · x^{-1}` is exactly `1` even at
//! `x = 0`. A form that is identically zero with positive exponent kills its
//! term; a form that only vanishes at the evaluation point with negative
//! exponent makes the case a skip.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{domain, Result};
use crate::exact::{binomial, rat_of, Integer, Rational};

/// Coefficients of `c + x·X + y·Y + a·A`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct Lin([i64; 4]);

impl Lin {
    const X: Lin = Lin([0, 1, 0, 0]);
    const Y: Lin = Lin([0, 0, 1, 0]);

    fn c(v: i64) -> Lin {
        Lin([v, 0, 0, 0])
    }

    fn new(c: i64, x: i64, y: i64, a: i64) -> Lin {
        Lin([c, x, y, a])
    }

    fn is_zero(self) -> bool {
        self.0 == [0; 4]
    }

    fn at(self, p: Point) -> i64 {
        self.0[0] + self.0[1] * p.x + self.0[2] * p.y + self.0[3] * p.a
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Point {
    x: i64,
    y: i64,
    a: i64,
}

#[derive(Debug, Clone)]
struct Term {
    coeff: Integer,
    factors: Vec<(Lin, i64)>,
}

impl Term {
    fn new(coeff: impl Into<Integer>, factors: &[(Lin, i64)]) -> Self {
        Term { coeff: coeff.into(), factors: factors.to_vec() }
    }

    /// Merges equal forms and drops the term if a zero form survives with a
    /// positive exponent. `None` means the term is identically zero.
    fn normalize(mut self) -> Option<Self> {
        if self.coeff.is_zero() {
            return None;
        }
        self.factors.sort_unstable();
        let mut merged: Vec<(Lin, i64)> = Vec::with_capacity(self.factors.len());
        for (l, e) in self.factors {
            match merged.last_mut() {
                Some((last, exp)) if *last == l => *exp += e,
                _ => merged.push((l, e)),
            }
        }
        merged.retain(|&(_, e)| e != 0);
        if merged.iter().any(|&(l, e)| l.is_zero() && e > 0) {
            return None;
        }
        self.factors = merged;
        Some(self)
    }
}

/// A normalized sum of terms.
#[derive(Debug, Clone, Default)]
struct Expr(Vec<Term>);

impl Expr {
    fn from_terms(terms: impl IntoIterator<Item = Term>) -> Self {
        Expr(terms.into_iter().filter_map(Term::normalize).collect())
    }

    fn eval(&self, p: Point) -> std::result::Result<Rational, String> {
        let mut int_sum = Integer::zero();
        let mut frac_sum = Rational::zero();
        for t in &self.0 {
            let mut num = t.coeff.clone();
            let mut den = Integer::one();
            for &(l, e) in &t.factors {
                let v = l.at(p);
                if v == 0 {
                    if e < 0 {
                        return Err(format!("zero base {} to negative power {e}", fmt_lin(l)));
                    }
                    num = Integer::zero();
                    break;
                }
                let pow = num_traits::pow(Integer::from(v), e.unsigned_abs() as usize);
                if e > 0 {
                    num *= pow;
                } else {
                    den *= pow;
                }
            }
            if den.is_one() {
                int_sum += num;
            } else {
                frac_sum += Rational::new(num, den);
            }
        }
        Ok(frac_sum + rat_of(int_sum))
    }
}

fn fmt_lin(l: Lin) -> String {
    let names = ["", "x", "y", "a"];
    let mut parts = Vec::new();
    for (k, &c) in l.0.iter().enumerate() {
        if c != 0 {
            parts.push(if k == 0 { c.to_string() } else { format!("{c}{}", names[k]) });
        }
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join("+")
    }
}

/// `A_m(x; a) = x (x - am)^{m-1}`, with `A₀ = 1`.
pub fn abel(m: i64, x: &Rational, a: &Rational) -> Result<Rational> {
    if m < 0 {
        return domain(format!("Abel polynomial index must be >= 0, got {m}"));
    }
    if m == 0 {
        return Ok(Rational::one());
    }
    let base = x - a * Rational::from_integer(m.into());
    if base.is_zero() && m == 1 {
        return Ok(x.clone());
    }
    Ok(x * crate::exact::int_power(&base, m - 1)?)
}

/// `A_j(v; a)` as factors, `v` a linear form shifted by `-a·j`.
fn abel_factors(v: Lin, j: i64) -> [(Lin, i64); 2] {
    let shifted = Lin([v.0[0], v.0[1], v.0[2], v.0[3] - j]);
    [(v, 1), (shifted, j - 1)]
}

/// Free variables an identity depends on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shape {
    /// Index `m` plus free `x, y, a`.
    Free,
    /// A single integer index (`n` or `m`).
    Index(&'static str),
}

/// One catalog entry.
pub struct Identity {
    pub id: &'static str,
    pub shape: Shape,
    /// Smallest index at which the identity is stated.
    pub min_index: i64,
    /// Variable the two sides are polynomials in, for the sampling check.
    pub polynomial_in: Option<&'static str>,
    lhs: fn(i64) -> Expr,
    rhs: fn(i64) -> Expr,
}

impl fmt::Debug for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Identity").field("id", &self.id).field("shape", &self.shape).finish()
    }
}

fn c(n: u64, k: u64) -> Integer {
    binomial(n, k)
}

fn sum(lo: i64, hi: i64, f: impl Fn(i64) -> Term) -> Expr {
    Expr::from_terms((lo..=hi).map(f))
}

fn single(t: Term) -> Expr {
    Expr::from_terms([t])
}

fn y_shift(m: i64, j: i64) -> Lin {
    Lin::new(0, 0, 1, -(m - j))
}

fn x_shift(j: i64) -> Lin {
    Lin::new(0, 1, 0, -j)
}

fn xy_shift(m: i64) -> Lin {
    Lin::new(0, 1, 1, -m)
}

fn abel_binomial_lhs(m: i64) -> Expr {
    sum(0, m, |j| {
        let mut f = abel_factors(Lin::X, j).to_vec();
        f.extend(abel_factors(Lin::Y, m - j));
        Term::new(c(m as u64, j as u64), &f)
    })
}

fn abel_binomial_rhs(m: i64) -> Expr {
    single(Term::new(1, &abel_factors(Lin::new(0, 1, 1, 0), m)))
}

fn abel_dx_lhs(m: i64) -> Expr {
    sum(0, m, |j| {
        Term::new(
            c(m as u64, j as u64),
            &[(Lin::c(j), 1), (Lin::new(0, 1, 0, -1), 1), (Lin::Y, 1), (x_shift(j), j - 2), (y_shift(m, j), m - j - 1)],
        )
    })
}

fn abel_dxy_common_rhs(m: i64) -> Expr {
    single(Term::new(1, &[(Lin::c(m), 1), (Lin::new(0, 1, 1, -1), 1), (xy_shift(m), m - 2)]))
}

fn abel_dy_lhs(m: i64) -> Expr {
    sum(0, m, |j| {
        Term::new(
            c(m as u64, j as u64),
            &[
                (Lin::c(m - j), 1),
                (Lin::X, 1),
                (Lin::new(0, 0, 1, -1), 1),
                (x_shift(j), j - 1),
                (y_shift(m, j), m - j - 2),
            ],
        )
    })
}

fn dxy_lhs(m: i64) -> Expr {
    sum(0, m, |j| {
        Term::new(
            c(m as u64, j as u64),
            &[
                (Lin::c(j), 1),
                (Lin::c(m - j), 1),
                (Lin::new(0, 1, 0, -1), 1),
                (Lin::new(0, 0, 1, -1), 1),
                (x_shift(j), j - 2),
                (y_shift(m, j), m - j - 2),
            ],
        )
    })
}

fn dxy_rhs(m: i64) -> Expr {
    single(Term::new(1, &[(Lin::c(m), 1), (Lin::c(m - 1), 1), (Lin::new(0, 1, 1, -2), 1), (xy_shift(m), m - 3)]))
}

fn dxxy_lhs(m: i64) -> Expr {
    sum(0, m, |j| {
        Term::new(
            c(m as u64, j as u64),
            &[
                (Lin::c(j), 1),
                (Lin::c(j - 1), 1),
                (Lin::c(m - j), 1),
                (Lin::new(0, 1, 0, -2), 1),
                (Lin::new(0, 0, 1, -1), 1),
                (x_shift(j), j - 3),
                (y_shift(m, j), m - j - 2),
            ],
        )
    })
}

fn dxxy_rhs(m: i64) -> Expr {
    single(Term::new(
        1,
        &[(Lin::c(m), 1), (Lin::c(m - 1), 1), (Lin::c(m - 2), 1), (Lin::new(0, 1, 1, -3), 1), (xy_shift(m), m - 4)],
    ))
}

/// `Σ_r C(n-2, r) · k · extra(r) · (2r+1)^{p(r)} (2n-2r-3)^{q(r)}`
fn odd_sum_n(n: i64, k: i64, extra: impl Fn(i64) -> i64, p: impl Fn(i64) -> i64, q: impl Fn(i64) -> i64) -> Expr {
    sum(0, n - 2, |r| {
        Term::new(
            c((n - 2) as u64, r as u64) * k,
            &[(Lin::c(extra(r)), 1), (Lin::c(2 * r + 1), p(r)), (Lin::c(2 * n - 2 * r - 3), q(r))],
        )
    })
}

/// `Σ_j C(m, j) · k · extra(j) · (2j-1)^{p(j)} (2m-2j+1)^{q(j)}`
fn odd_sum_m(m: i64, k: i64, extra: impl Fn(i64) -> i64, p: impl Fn(i64) -> i64, q: impl Fn(i64) -> i64) -> Expr {
    sum(0, m, |j| {
        Term::new(
            c(m as u64, j as u64) * k,
            &[(Lin::c(extra(j)), 1), (Lin::c(2 * j - 1), p(j)), (Lin::c(2 * m - 2 * j + 1), q(j))],
        )
    })
}

/// `k · ∏ (value, exponent)` with constant bases.
fn closed(k: i64, factors: &[(i64, i64)]) -> Expr {
    let f: Vec<(Lin, i64)> = factors.iter().map(|&(v, e)| (Lin::c(v), e)).collect();
    single(Term::new(k, &f))
}

fn des1_target_lhs(n: i64) -> Expr {
    odd_sum_n(n, 3, |_| 1, |r| r - 2, |r| n - r - 4)
}
fn des1_target_rhs(n: i64) -> Expr {
    closed(1, &[(2, n - 2), (n + 1, 1), (n - 1, n - 5)])
}
fn abel_spec_1_lhs(n: i64) -> Expr {
    odd_sum_n(n, 1, |_| 1, |r| r - 1, |r| n - r - 3)
}
fn abel_spec_1_rhs(n: i64) -> Expr {
    closed(1, &[(2, n - 2), (n - 1, n - 3)])
}
fn abel_spec_2_lhs(n: i64) -> Expr {
    odd_sum_n(n, 3, |r| r, |r| r - 2, |r| n - r - 3)
}
fn abel_spec_2r_lhs(n: i64) -> Expr {
    odd_sum_n(n, 3, |r| n - r - 2, |r| r - 1, |r| n - r - 4)
}
fn abel_spec_2_rhs(n: i64) -> Expr {
    closed(1, &[(2, n - 2), (n - 2, 1), (n - 1, n - 4)])
}
fn q_target_lhs(n: i64) -> Expr {
    odd_sum_m(n - 1, 3, |_| 1, |j| j - 3, |j| n - j - 3)
}
fn q_target_rhs(n: i64) -> Expr {
    closed(-8, &[(n - 3, 1), (2 * n - 2, n - 4)])
}
fn comb_a_lhs(m: i64) -> Expr {
    odd_sum_m(m, 3, |_| 1, |j| j - 2, |j| m - j - 2)
}
fn comb_a_rhs(m: i64) -> Expr {
    closed(8, &[(2 * m, m - 2)])
}
fn comb_b_lhs(m: i64) -> Expr {
    odd_sum_m(m, 3, |j| 4 * m * j - 4 * j + 1, |j| j - 3, |j| m - j - 2)
}
fn comb_b_rhs(m: i64) -> Expr {
    closed(8, &[(2 * m * m + m - 2, 1), (2 * m, m - 3)])
}
fn spec_zero_lhs(m: i64) -> Expr {
    odd_sum_m(m, 1, |_| 1, |j| j - 1, |j| m - j - 1)
}
fn zero_rhs(_: i64) -> Expr {
    Expr::default()
}
fn spec_x_lhs(m: i64) -> Expr {
    odd_sum_m(m, 1, |j| j, |j| j - 2, |j| m - j - 1)
}
fn spec_y_lhs(m: i64) -> Expr {
    odd_sum_m(m, -3, |j| m - j, |j| j - 1, |j| m - j - 2)
}
fn power_2m_rhs(m: i64) -> Expr {
    closed(1, &[(2 * m, m - 1)])
}
fn lin_1_lhs(m: i64) -> Expr {
    odd_sum_m(m, 1, |_| 1, |j| j - 2, |j| m - j - 1)
}
fn lin_2_lhs(m: i64) -> Expr {
    odd_sum_m(m, 3, |_| 1, |j| j - 1, |j| m - j - 2)
}
fn two_power_2m_rhs(m: i64) -> Expr {
    closed(2, &[(2 * m, m - 1)])
}
fn dxy_spec_lhs(m: i64) -> Expr {
    odd_sum_m(m, 3, |j| j * (m - j), |j| j - 2, |j| m - j - 2)
}
fn dxy_spec_rhs(m: i64) -> Expr {
    closed(2, &[(m - 1, 1), (2 * m, m - 2)])
}
fn dxxy_spec_lhs(m: i64) -> Expr {
    odd_sum_m(m, 3, |j| j * (j - 1) * (m - j), |j| j - 3, |j| m - j - 2)
}
fn dxxy_spec_rhs(m: i64) -> Expr {
    closed(1, &[(m - 1, 1), (m - 2, 1), (2 * m, m - 3)])
}
fn comb_c_lhs(m: i64) -> Expr {
    odd_sum_m(m, 3, |j| j * (m - j), |j| j - 3, |j| m - j - 2)
}
fn comb_c_rhs(m: i64) -> Expr {
    closed(2, &[(m - 1, 1), (m + 2, 1), (2 * m, m - 3)])
}

macro_rules! identity {
    ($id:expr, $shape:expr, $min:expr, $poly:expr, $lhs:ident, $rhs:ident) => {
        Identity { id: $id, shape: $shape, min_index: $min, polynomial_in: $poly, lhs: $lhs, rhs: $rhs }
    };
}

/// Every identity, in a fixed order.
pub fn catalog() -> Vec<Identity> {
    use Shape::*;
    vec![
        identity!("abel-binomial", Free, 0, Some("x"), abel_binomial_lhs, abel_binomial_rhs),
        identity!("abel-dx", Free, 0, Some("x"), abel_dx_lhs, abel_dxy_common_rhs),
        identity!("abel-dy", Free, 0, Some("y"), abel_dy_lhs, abel_dxy_common_rhs),
        identity!("dxy", Free, 0, Some("x"), dxy_lhs, dxy_rhs),
        identity!("dxxy", Free, 0, Some("x"), dxxy_lhs, dxxy_rhs),
        identity!("des1-target", Index("n"), 2, None, des1_target_lhs, des1_target_rhs),
        identity!("abel-spec-1", Index("n"), 2, None, abel_spec_1_lhs, abel_spec_1_rhs),
        identity!("abel-spec-2", Index("n"), 2, None, abel_spec_2_lhs, abel_spec_2_rhs),
        identity!("abel-spec-2r", Index("n"), 2, None, abel_spec_2r_lhs, abel_spec_2_rhs),
        identity!("q-target", Index("n"), 2, None, q_target_lhs, q_target_rhs),
        identity!("comb-A", Index("m"), 1, None, comb_a_lhs, comb_a_rhs),
        identity!("comb-B", Index("m"), 1, None, comb_b_lhs, comb_b_rhs),
        identity!("comb-C", Index("m"), 1, None, comb_c_lhs, comb_c_rhs),
        identity!("spec-zero", Index("m"), 1, None, spec_zero_lhs, zero_rhs),
        identity!("spec-x", Index("m"), 1, None, spec_x_lhs, power_2m_rhs),
        identity!("spec-y", Index("m"), 1, None, spec_y_lhs, power_2m_rhs),
        identity!("lin-1", Index("m"), 1, None, lin_1_lhs, two_power_2m_rhs),
        identity!("lin-2", Index("m"), 1, None, lin_2_lhs, two_power_2m_rhs),
        identity!("dxy-spec", Index("m"), 1, None, dxy_spec_lhs, dxy_spec_rhs),
        identity!("dxxy-spec", Index("m"), 1, None, dxxy_spec_lhs, dxxy_spec_rhs),
    ]
}

pub fn find(id: &str) -> Option<Identity> {
    catalog().into_iter().find(|i| i.id == id)
}

/// Result of one evaluation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
    Skipped(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCase {
    pub id: String,
    pub params: Vec<(String, i64)>,
    pub lhs: Option<Rational>,
    pub rhs: Option<Rational>,
    pub outcome: Outcome,
}

impl IdentityCase {
    pub fn pass(&self) -> bool {
        self.outcome == Outcome::Pass
    }

    pub fn param_string(&self) -> String {
        self.params.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(",")
    }
}

fn compare(id: &str, params: Vec<(String, i64)>, lhs: &Expr, rhs: &Expr, p: Point) -> IdentityCase {
    match (lhs.eval(p), rhs.eval(p)) {
        (Ok(l), Ok(r)) => {
            let outcome = if l == r { Outcome::Pass } else { Outcome::Fail };
            IdentityCase { id: id.into(), params, lhs: Some(l), rhs: Some(r), outcome }
        }
        (Err(e), _) | (_, Err(e)) => {
            IdentityCase { id: id.into(), params, lhs: None, rhs: None, outcome: Outcome::Skipped(e) }
        }
    }
}

const ORIGIN: Point = Point { x: 0, y: 0, a: 0 };

/// Evaluates one identity. Index identities ignore `x, y, a`.
pub fn check_identity(id: &str, index: i64, x: i64, y: i64, a: i64) -> Result<IdentityCase> {
    let Some(ident) = find(id) else {
        return domain(format!("unknown identity {id:?}"));
    };
    if index < ident.min_index {
        return domain(format!("{id} needs index >= {}, got {index}", ident.min_index));
    }
    let (lhs, rhs) = ((ident.lhs)(index), (ident.rhs)(index));
    Ok(match ident.shape {
        Shape::Free => compare(id, free_params(index, x, y, a), &lhs, &rhs, Point { x, y, a }),
        Shape::Index(name) => compare(id, vec![(name.into(), index)], &lhs, &rhs, ORIGIN),
    })
}

fn free_params(m: i64, x: i64, y: i64, a: i64) -> Vec<(String, i64)> {
    vec![("m".into(), m), ("x".into(), x), ("y".into(), y), ("a".into(), a)]
}

/// Ranges for [`run_catalog`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridSpec {
    pub max_index: i64,
    /// Free parameters range over `-free_bound..=free_bound`.
    pub free_bound: i64,
    /// Largest `m` for the polynomial sampling check; `None` skips it.
    pub polynomial_max_m: Option<i64>,
    /// Restrict to these ids; empty means all.
    pub only: Vec<String>,
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec { max_index: 40, free_bound: 5, polynomial_max_m: Some(40), only: Vec::new() }
    }
}

/// Evaluates every selected identity over the grid, then the polynomial
/// sampling checks and the combination chains.
pub fn run_catalog(grid: &GridSpec) -> Vec<IdentityCase> {
    let mut out = Vec::new();
    let wanted = |id: &str| grid.only.is_empty() || grid.only.iter().any(|o| o == id);
    let b = grid.free_bound;
    for ident in catalog().into_iter().filter(|i| wanted(i.id)) {
        for index in ident.min_index..=grid.max_index {
            let (lhs, rhs) = ((ident.lhs)(index), (ident.rhs)(index));
            match ident.shape {
                Shape::Index(name) => out.push(compare(ident.id, vec![(name.into(), index)], &lhs, &rhs, ORIGIN)),
                Shape::Free => {
                    for x in -b..=b {
                        for y in -b..=b {
                            for a in -b..=b {
                                out.push(compare(ident.id, free_params(index, x, y, a), &lhs, &rhs, Point { x, y, a }));
                            }
                        }
                    }
                }
            }
        }
        if let (Some(var), Some(max_m)) = (ident.polynomial_in, grid.polynomial_max_m) {
            for m in ident.min_index..=max_m.min(grid.max_index) {
                out.push(polynomial_check(&ident, m, var));
            }
        }
    }
    if grid.only.is_empty() || grid.only.iter().any(|o| o.starts_with("chain")) {
        for m in 1..=grid.max_index {
            out.extend(chain_cases(m));
        }
    }
    out
}

/// Fixed values of the two other free parameters used by the sampling check.
const POLY_FIXED: [(i64, i64); 3] = [(2, 1), (-3, 2), (7, -2)];

/// Both sides have degree at most `m` in `var`, so agreement at `m + 2`
/// distinct points for each fixed pair of other parameters is equality of
/// polynomials in `var`.
fn polynomial_check(ident: &Identity, m: i64, var: &str) -> IdentityCase {
    let (lhs, rhs) = ((ident.lhs)(m), (ident.rhs)(m));
    let id = format!("{}/poly-{var}", ident.id);
    for &(u, a) in &POLY_FIXED {
        for s in 0..m + 2 {
            let p = if var == "x" { Point { x: s, y: u, a } } else { Point { x: u, y: s, a } };
            let case = compare(&id, free_params(m, p.x, p.y, a), &lhs, &rhs, p);
            if !case.pass() {
                return case;
            }
        }
    }
    IdentityCase {
        id,
        params: vec![("m".into(), m), ("points".into(), m + 2)],
        lhs: None,
        rhs: None,
        outcome: Outcome::Pass,
    }
}

fn value(f: fn(i64) -> Expr, i: i64) -> Rational {
    f(i).eval(ORIGIN).expect("specialized sums have odd, nonzero bases")
}

/// The linear combinations that carry the specialized sums to the final
/// identity, each as a separate case:
///
/// * `3·lin-1 + lin-2 = 2m·comb-A`
/// * `dxy-spec - 2·dxxy-spec = comb-C`
/// * `lin-2 + 4·comb-C = comb-B`
/// * `comb-B - (2m-2)·comb-A = (2m-1)·q-target(m+1)`
pub fn chain_cases(m: i64) -> Vec<IdentityCase> {
    let r = |v: i64| Rational::from_integer(v.into());
    let case = |id: &str, lhs: Rational, rhs: Rational| IdentityCase {
        id: id.into(),
        params: vec![("m".into(), m)],
        outcome: if lhs == rhs { Outcome::Pass } else { Outcome::Fail },
        lhs: Some(lhs),
        rhs: Some(rhs),
    };
    let (lin1, lin2) = (value(lin_1_lhs, m), value(lin_2_lhs, m));
    let (comb_a, comb_b, comb_c) = (value(comb_a_lhs, m), value(comb_b_lhs, m), value(comb_c_lhs, m));
    let (dxy, dxxy) = (value(dxy_spec_lhs, m), value(dxxy_spec_lhs, m));
    let q = value(q_target_lhs, m + 1);
    vec![
        case("chain-comb-A", r(3) * &lin1 + &lin2, r(2 * m) * &comb_a),
        case("chain-comb-C", &dxy - r(2) * &dxxy, comb_c.clone()),
        case("chain-comb-B", &lin2 + r(4) * &comb_c, comb_b.clone()),
        case("chain-q-target", &comb_b - r(2 * m - 2) * &comb_a, r(2 * m - 1) * q),
    ]
}

/// Pass / fail / skip totals.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

pub fn summarize(cases: &[IdentityCase]) -> Summary {
    let mut s = Summary::default();
    for c in cases {
        match c.outcome {
            Outcome::Pass => s.passed += 1,
            Outcome::Fail => s.failed += 1,
            Outcome::Skipped(_) => s.skipped += 1,
        }
    }
    s
}
