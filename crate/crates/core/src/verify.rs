//! Named verification suites. Each suite compares two independently
//! obtained values per parameter and reports one row per comparison.

use std::fmt;
use std::str::FromStr;

use crate::cactus::{
    count_cacti_closed, count_des1_closed, count_husimi_closed, count_rdes_closed, des_convolution, enumerate_cacti,
    enumerate_deserts, enumerate_husimi, enumerate_rooted_deserts, HusimiType,
};
use crate::error::{resource, Error, Result};
use crate::exact::Integer;
use crate::identities::{run_catalog, GridSpec, Outcome};
use crate::klcore::{
    inv_kl_poly_braid, kl_poly_braid, leading_coeff_closed_form, verify_leading_relation, verify_parity_identity,
    KlTable, LeadingForm, PolyKind,
};
use crate::maps::{
    check_correspondences, count_e_closed, disconnected_split_sum, fibers_of_phi, verify_difference, DifferenceMode,
};
use crate::matroid::range_set;
use crate::spgen::{count_e, count_s, enumerate_s};

/// The verification suites, keyed by stable command-line ids.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    /// KL coefficients against `|S(n-1, n-1-i)|`.
    KlCoefficients,
    /// Leading coefficient of `P_{B_{2n}}`.
    EvenLeading,
    /// Leading coefficient of `P_{B_{2n-1}}`.
    OddLeading,
    /// `E_n` closed form and the split of `|S(2n-2, n)|`.
    ConnectedCount,
    /// Leading coefficients of `Q`.
    InverseLeading,
    /// `|S(2n-1,n)| - |S(2n-2,n)|` against desert counts.
    Difference,
    /// Fibers of the deletion map.
    Fibers,
    /// Husimi graph and cactus counts.
    Husimi,
    /// Rooted desert counts.
    RootedDeserts,
    /// Desert counts.
    Deserts,
    /// `[t^{n-1}] P_{B_{2n}} = [t^{n-1}] Q_{B_{2n}}`.
    Parity,
    /// The leading-coefficient relation between `P + Q` and smaller braids.
    LeadingRelation,
    /// The identity catalog.
    Identities,
}

impl Suite {
    pub const ALL: [Suite; 13] = [
        Suite::KlCoefficients,
        Suite::EvenLeading,
        Suite::OddLeading,
        Suite::ConnectedCount,
        Suite::InverseLeading,
        Suite::Difference,
        Suite::Fibers,
        Suite::Husimi,
        Suite::RootedDeserts,
        Suite::Deserts,
        Suite::Parity,
        Suite::LeadingRelation,
        Suite::Identities,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Suite::KlCoefficients => "thm1.1",
            Suite::EvenLeading => "thm1.2",
            Suite::OddLeading => "thm1.3",
            Suite::ConnectedCount => "cor1.5",
            Suite::InverseLeading => "thm1.6",
            Suite::Difference => "prop2.7",
            Suite::Fibers => "lem2.4",
            Suite::Husimi => "lem3.1",
            Suite::RootedDeserts => "prop3.2",
            Suite::Deserts => "lem3.3",
            Suite::Parity => "parity",
            Suite::LeadingRelation => "lem4.1",
            Suite::Identities => "identities",
        }
    }

    /// Default upper end of the suite's main range.
    pub fn default_max_n(self) -> usize {
        match self {
            Suite::KlCoefficients => 8,
            Suite::EvenLeading | Suite::OddLeading | Suite::Parity | Suite::LeadingRelation => 7,
            Suite::InverseLeading => 6,
            Suite::ConnectedCount | Suite::Fibers | Suite::RootedDeserts | Suite::Deserts => 4,
            Suite::Difference => 20,
            Suite::Husimi => 6,
            Suite::Identities => 40,
        }
    }

    /// Largest `max_n` the suite accepts.
    pub fn cap(self) -> usize {
        match self {
            Suite::KlCoefficients => 9,
            Suite::EvenLeading | Suite::OddLeading | Suite::InverseLeading => 12,
            Suite::Parity | Suite::LeadingRelation => 12,
            Suite::ConnectedCount => 5,
            Suite::Fibers | Suite::RootedDeserts | Suite::Deserts => 4,
            Suite::Difference => 60,
            Suite::Husimi => 7,
            Suite::Identities => 60,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL.into_iter().find(|x| x.id() == s).ok_or_else(|| {
            let ids: Vec<&str> = Suite::ALL.iter().map(|x| x.id()).collect();
            Error::Domain(format!("unknown suite {s:?}; expected one of {}", ids.join(", ")))
        })
    }
}

/// Which side of a suite to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mode {
    ClosedForm,
    Exhaustive,
    #[default]
    Both,
}

impl Mode {
    fn closed(self) -> bool {
        self != Mode::Exhaustive
    }

    fn exhaustive(self) -> bool {
        self != Mode::ClosedForm
    }
}

impl FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "closed-form" => Ok(Mode::ClosedForm),
            "exhaustive" => Ok(Mode::Exhaustive),
            "both" => Ok(Mode::Both),
            _ => Err(Error::Domain(format!("unknown mode {s:?}; expected closed-form, exhaustive or both"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct VerifyOptions {
    pub max_n: Option<usize>,
    pub mode: Mode,
}

/// One comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Row {
    pub suite: String,
    pub parameter: String,
    pub lhs: String,
    pub rhs: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub rows: Vec<Row>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        !self.rows.is_empty() && self.rows.iter().all(|r| r.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Row> {
        self.rows.iter().filter(|r| !r.pass)
    }
}

struct Rows {
    suite: Suite,
    rows: Vec<Row>,
}

impl Rows {
    fn push(&mut self, parameter: impl Into<String>, lhs: impl ToString, rhs: impl ToString) {
        let (lhs, rhs) = (lhs.to_string(), rhs.to_string());
        let pass = lhs == rhs;
        self.rows.push(Row { suite: self.suite.id().into(), parameter: parameter.into(), lhs, rhs, pass });
    }

    fn push_flag(&mut self, parameter: impl Into<String>, lhs: impl ToString, rhs: impl ToString, pass: bool) {
        self.rows.push(Row {
            suite: self.suite.id().into(),
            parameter: parameter.into(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            pass,
        });
    }
}

fn leading(table: &mut KlTable, kind: PolyKind, which: LeadingForm, n: usize) -> Result<Integer> {
    let k = which.braid_index(n);
    let poly = match kind {
        PolyKind::P => kl_poly_braid(k, table)?,
        PolyKind::Q => inv_kl_poly_braid(k, table)?,
    };
    Ok(poly.coeff(which.degree(n)))
}

/// Runs one suite. `table` may be pre-seeded, for example from a cache.
pub fn run_suite(suite: Suite, opts: VerifyOptions, table: &mut KlTable) -> Result<SuiteReport> {
    let max_n = opts.max_n.unwrap_or(suite.default_max_n());
    if max_n > suite.cap() {
        return resource(format!("suite {suite} supports --max-n up to {}, got {max_n}", suite.cap()));
    }
    let mode = opts.mode;
    let mut out = Rows { suite, rows: Vec::new() };
    match suite {
        Suite::KlCoefficients => {
            for n in 2..=max_n {
                let p = kl_poly_braid(n, table)?;
                for i in 0..n - 1 {
                    let k = n - 1 - i;
                    if mode.closed() {
                        out.push(format!("n={n},i={i},count"), p.coeff(i), count_s(n - 1, k)?);
                    }
                    if mode.exhaustive() && n - 1 <= 7 {
                        out.push(format!("n={n},i={i},enumerate"), p.coeff(i), enumerate_s(n - 1, k)?.len());
                    }
                }
            }
        }
        Suite::EvenLeading => {
            for n in 2..=max_n {
                let lead = leading(table, PolyKind::P, LeadingForm::PEven, n)?;
                if mode.closed() {
                    out.push(format!("n={n},closed"), &lead, leading_coeff_closed_form(LeadingForm::PEven, n)?);
                    out.push(format!("n={n},cacti-closed"), &lead, count_cacti_closed(n)?);
                }
                if mode.exhaustive() && n <= 4 {
                    out.push(format!("n={n},cacti"), &lead, enumerate_cacti(range_set((2 * n - 1) as u8))?.len());
                    out.push(format!("n={n},S(2n-1,n)"), &lead, enumerate_s(2 * n - 1, n)?.len());
                }
            }
        }
        Suite::OddLeading => {
            for n in 2..=max_n {
                let lead = leading(table, PolyKind::P, LeadingForm::POdd, n)?;
                if mode.closed() {
                    out.push(format!("n={n},closed"), &lead, leading_coeff_closed_form(LeadingForm::POdd, n)?);
                }
                if mode.exhaustive() && n <= 4 {
                    out.push(format!("n={n},S(2n-2,n)"), &lead, enumerate_s(2 * n - 2, n)?.len());
                }
            }
        }
        Suite::ConnectedCount => {
            if mode.exhaustive() {
                for n in 2..=max_n {
                    let e = count_e(n)?;
                    out.push(format!("n={n},E"), &e, count_e_closed(n)?);
                    if n <= 4 {
                        let split = e + enumerate_deserts(n, 1)?.len();
                        out.push(format!("n={n},E+Des1"), split, enumerate_s(2 * n - 2, n)?.len());
                    }
                }
            }
            if mode.closed() {
                for n in 2..=(4 * max_n).max(12) {
                    let total = count_e_closed(n)? + disconnected_split_sum(n)?;
                    out.push(format!("n={n},E+sum"), total, leading_coeff_closed_form(LeadingForm::POdd, n)?);
                    out.push(format!("n={n},sum=Des1"), disconnected_split_sum(n)?, count_des1_closed(n)?);
                }
            }
        }
        Suite::InverseLeading => {
            for n in 2..=max_n {
                let even = leading(table, PolyKind::Q, LeadingForm::QEven, n)?;
                let odd = leading(table, PolyKind::Q, LeadingForm::QOdd, n)?;
                out.push(format!("n={n},even"), &even, leading_coeff_closed_form(LeadingForm::QEven, n)?);
                out.push(format!("n={n},odd"), &odd, leading_coeff_closed_form(LeadingForm::QOdd, n)?);
                out.push(format!("n={n},even=P"), &even, leading(table, PolyKind::P, LeadingForm::PEven, n)?);
            }
        }
        Suite::Difference => {
            if mode.exhaustive() {
                for n in 2..=max_n.min(4) {
                    let r = verify_difference(n, DifferenceMode::Exhaustive)?;
                    out.push(format!("n={n},exhaustive"), r.lhs, r.rhs);
                }
            }
            if mode.closed() {
                for n in 3..=max_n.max(3) {
                    let r = verify_difference(n, DifferenceMode::ClosedForm)?;
                    let g = r.g.clone().expect("closed-form mode reports g_n");
                    out.push(format!("n={n},closed"), &r.lhs, r.rhs);
                    out.push(format!("n={n},g_n"), r.lhs, g);
                }
            }
        }
        Suite::Fibers => {
            for n in 2..=max_n {
                let r = fibers_of_phi(n)?;
                out.push_flag(format!("n={n},surjective"), r.surjective, true, r.surjective);
                for (m, (targets, preimages)) in &r.totals {
                    let expected: usize = r.records.iter().filter(|x| x.m_class == *m).map(|x| x.expected).sum();
                    out.push(format!("n={n},m={m},targets={targets}"), preimages, expected);
                }
                out.push(format!("n={n},total"), r.source_size, r.records.iter().map(|x| x.fiber_size).sum::<usize>());
                for f in &r.failures {
                    out.push_flag(format!("n={n},failure"), f, "", false);
                }
                let c = check_correspondences(n)?;
                out.push(format!("n={n},S2=RDes2"), c.s2_targets, c.rdes2);
                out.push_flag(
                    format!("n={n},sigma2-bijective"),
                    c.sigma2_injective && c.sigma2_onto,
                    true,
                    c.sigma2_injective && c.sigma2_onto,
                );
                out.push(format!("n={n},S1=Des1"), c.s1_targets, c.des1);
            }
        }
        Suite::Husimi => {
            if mode.exhaustive() {
                for p in 1..=max_n.min(6) {
                    for ty in HusimiType::feasible_types(p) {
                        out.push(
                            format!("p={p},type={ty}"),
                            enumerate_husimi(p, &ty)?.len(),
                            count_husimi_closed(p, &ty)?,
                        );
                    }
                }
                for r in 1..=4 {
                    let v = 2 * r - 1;
                    out.push(
                        format!("cacti,vertices={v}"),
                        enumerate_cacti(range_set(v as u8))?.len(),
                        count_cacti_closed(r)?,
                    );
                }
            }
            if mode.closed() {
                for r in 1..=20 {
                    let v = 2 * r - 1;
                    out.push(
                        format!("cacti,r={r},husimi"),
                        count_cacti_closed(r)?,
                        count_husimi_closed(v, &HusimiType::cactus(r))?,
                    );
                }
            }
        }
        Suite::RootedDeserts => {
            if mode.exhaustive() {
                for n in 2..=max_n {
                    for m in 1..n {
                        out.push(
                            format!("n={n},m={m}"),
                            enumerate_rooted_deserts(n, m)?.len(),
                            count_rdes_closed(n, m)?,
                        );
                    }
                }
            }
            if mode.closed() {
                for n in 2..=20 {
                    // n - m - 1 triangles plus one K_{2m} whose vertices become the roots
                    for m in 1..n {
                        let mut counts = vec![0usize; (2 * m - 1).max(2)];
                        counts[1] += n - m - 1;
                        counts[2 * m - 2] += 1;
                        let ty = HusimiType::new(counts);
                        out.push(
                            format!("n={n},m={m},husimi"),
                            count_rdes_closed(n, m)?,
                            count_husimi_closed(2 * n - 2, &ty)?,
                        );
                    }
                }
            }
        }
        Suite::Deserts => {
            if mode.exhaustive() {
                for n in 2..=max_n {
                    out.push(format!("n={n},Des1"), enumerate_deserts(n, 1)?.len(), count_des1_closed(n)?);
                    for m in 1..n {
                        out.push(
                            format!("n={n},m={m},convolution"),
                            enumerate_deserts(n, m)?.len(),
                            des_convolution(n, m)?,
                        );
                    }
                }
            }
            if mode.closed() {
                for n in 2..=20 {
                    out.push(format!("n={n},convolution"), des_convolution(n, 1)?, count_des1_closed(n)?);
                }
            }
        }
        Suite::Parity => {
            for n in 1..=max_n {
                let c = verify_parity_identity(n, table)?;
                out.push(format!("n={n}"), c.lhs, c.rhs);
            }
        }
        Suite::LeadingRelation => {
            for n in 2..=max_n {
                let c = verify_leading_relation(n, table)?;
                out.push(format!("n={n}"), c.lhs, c.rhs);
            }
        }
        Suite::Identities => {
            let grid = GridSpec { max_index: max_n as i64, ..GridSpec::default() };
            let cases = run_catalog(&grid);
            let mut ids: Vec<String> = Vec::new();
            for c in &cases {
                let base = c.id.split('/').next().unwrap_or(&c.id).to_string();
                let base = if base.starts_with("chain-") { base } else { c.id.clone() };
                if !ids.contains(&base) {
                    ids.push(base);
                }
            }
            for id in ids {
                let mine: Vec<_> = cases.iter().filter(|c| c.id == id).collect();
                let passed = mine.iter().filter(|c| c.pass()).count();
                let skipped: Vec<_> = mine.iter().filter(|c| matches!(c.outcome, Outcome::Skipped(_))).collect();
                out.push_flag(
                    format!("{id},cases={},skipped={}", mine.len(), skipped.len()),
                    passed,
                    mine.len() - skipped.len(),
                    passed + skipped.len() == mine.len(),
                );
                for c in mine.iter().filter(|c| c.outcome == Outcome::Fail) {
                    let show =
                        |v: &Option<crate::exact::Rational>| v.as_ref().map(|x| x.to_string()).unwrap_or_default();
                    out.push_flag(format!("{id},{}", c.param_string()), show(&c.lhs), show(&c.rhs), false);
                }
            }
        }
    }
    Ok(SuiteReport { suite, rows: out.rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.id().parse::<Suite>().unwrap(), s);
        }
        assert!("thm9".parse::<Suite>().is_err());
        assert_eq!("closed-form".parse::<Mode>().unwrap(), Mode::ClosedForm);
    }

    #[test]
    fn caps_enforced() {
        let opts = VerifyOptions { max_n: Some(99), mode: Mode::Both };
        assert!(matches!(run_suite(Suite::Fibers, opts, &mut KlTable::new()), Err(Error::Resource(_))));
    }

    #[test]
    fn small_suites_pass() {
        let mut table = KlTable::new();
        for s in [Suite::Parity, Suite::LeadingRelation, Suite::InverseLeading, Suite::Deserts, Suite::RootedDeserts] {
            let r = run_suite(s, VerifyOptions::default(), &mut table).unwrap();
            assert!(r.passed(), "{s}: {:?}", r.failures().collect::<Vec<_>>());
        }
    }
}
