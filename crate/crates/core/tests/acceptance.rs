//! Acceptance run: one line per criterion, non-zero exit if any fails.

use std::process::ExitCode;
use std::time::Instant;

use braidkl::cactus::{count_des1_closed, count_rdes_closed, enumerate_cacti, enumerate_deserts, HusimiType};
use braidkl::exact::int;
use braidkl::klcore::{inv_kl_poly_braid, kl_poly_braid};
use braidkl::maps::{verify_difference, DifferenceMode};
use braidkl::matroid::range_set;
use braidkl::oracles::{graph_scan, setpartition_kl, setpartition_q_relation, GraphPredicate};
use braidkl::spgen::{count_e, enumerate_s};
use braidkl::verify::{run_suite, Mode, Suite, VerifyOptions};
use braidkl::{IntPoly, KlTable, Result};

struct Check {
    failures: Vec<String>,
}

impl Check {
    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, what: &str, lhs: T, rhs: T) {
        if lhs != rhs {
            self.failures.push(format!("{what}: {lhs:?} != {rhs:?}"));
        }
    }

    fn suite(&mut self, suite: Suite, max_n: Option<usize>, table: &mut KlTable) -> Result<()> {
        let report = run_suite(suite, VerifyOptions { max_n, mode: Mode::Both }, table)?;
        if report.rows.is_empty() {
            self.failures.push(format!("{suite}: no rows"));
        }
        for row in report.failures() {
            self.failures.push(format!("{suite} {}: {} != {}", row.parameter, row.lhs, row.rhs));
        }
        Ok(())
    }
}

fn kl_coefficients(c: &mut Check, t: &mut KlTable) -> Result<()> {
    c.suite(Suite::KlCoefficients, Some(8), t)?;
    c.eq("P_B4", kl_poly_braid(4, t)?, IntPoly::from_i64s(&[1, 1]));
    c.eq("P_B5", kl_poly_braid(5, t)?, IntPoly::from_i64s(&[1, 5]));
    for n in 1..=6 {
        c.eq(&format!("literal P_B{n}"), kl_poly_braid(n, t)?, setpartition_kl(n)?);
    }
    Ok(())
}

fn even_leading(c: &mut Check, t: &mut KlTable) -> Result<()> {
    c.suite(Suite::EvenLeading, Some(7), t)?;
    let cacti: Vec<usize> =
        (2..=4).map(|r| enumerate_cacti(range_set(2 * r - 1)).map(|v| v.len())).collect::<Result<_>>()?;
    c.eq("cacti on 3, 5, 7 vertices", cacti, vec![1, 15, 735]);
    Ok(())
}

fn odd_leading(c: &mut Check, t: &mut KlTable) -> Result<()> {
    c.suite(Suite::OddLeading, Some(7), t)?;
    c.eq("|S(4,3)|", enumerate_s(4, 3)?.len(), 5);
    c.eq("|S(6,4)|", enumerate_s(6, 4)?.len(), 175);
    Ok(())
}

fn connected_count(c: &mut Check, t: &mut KlTable) -> Result<()> {
    c.suite(Suite::ConnectedCount, Some(4), t)?;
    c.eq("E_3", count_e(3)?, int(1));
    c.eq("E_4", count_e(4)?, int(75));
    c.eq("E_3 + Des_1(3)", count_e(3)? + enumerate_deserts(3, 1)?.len(), int(5));
    c.eq("E_4 + Des_1(4)", count_e(4)? + enumerate_deserts(4, 1)?.len(), int(175));
    Ok(())
}

fn inverse_leading(c: &mut Check, t: &mut KlTable) -> Result<()> {
    c.suite(Suite::InverseLeading, Some(6), t)?;
    c.eq("[t]Q_B5", inv_kl_poly_braid(5, t)?.coeff(1), int(10));
    c.eq("[t^2]Q_B7", inv_kl_poly_braid(7, t)?.coeff(2), int(280));
    for n in 1..=6 {
        c.eq(&format!("literal Q_B{n}"), inv_kl_poly_braid(n, t)?, setpartition_q_relation(n)?);
    }
    Ok(())
}

fn difference(c: &mut Check, t: &mut KlTable) -> Result<()> {
    c.suite(Suite::Difference, Some(20), t)?;
    let r3 = verify_difference(3, DifferenceMode::Exhaustive)?;
    c.eq("n=3 sides", (r3.lhs, r3.rhs), (int(10), int(2 + 12 - 4)));
    let r4 = verify_difference(4, DifferenceMode::Exhaustive)?;
    c.eq("n=4 sides", (r4.lhs, r4.rhs), (int(560), int(2 * 60 + 540 - 100)));
    c.eq(
        "RDes_2(4), RDes_1(4), Des_1(4)",
        (count_rdes_closed(4, 2)?, count_rdes_closed(4, 1)?, count_des1_closed(4)?),
        (int(60), int(540), int(100)),
    );
    Ok(())
}

fn fibers(c: &mut Check, t: &mut KlTable) -> Result<()> {
    c.suite(Suite::Fibers, Some(4), t)
}

fn counting(c: &mut Check, t: &mut KlTable) -> Result<()> {
    c.suite(Suite::Husimi, Some(6), t)?;
    c.suite(Suite::RootedDeserts, Some(4), t)?;
    c.suite(Suite::Deserts, Some(4), t)?;
    for p in 1..=6 {
        c.eq(
            &format!("cactus scan p={p}"),
            graph_scan(&GraphPredicate::Cactus, p)?,
            enumerate_cacti(range_set(p as u8))?,
        );
        for ty in HusimiType::feasible_types(p) {
            c.eq(
                &format!("Husimi scan p={p} type={ty}"),
                graph_scan(&GraphPredicate::Husimi(Some(ty.clone())), p)?,
                braidkl::cactus::enumerate_husimi(p, &ty)?,
            );
        }
    }
    Ok(())
}

fn identities(c: &mut Check, t: &mut KlTable) -> Result<()> {
    c.suite(Suite::Identities, Some(40), t)
}

fn parity_and_relation(c: &mut Check, t: &mut KlTable) -> Result<()> {
    c.suite(Suite::Parity, Some(7), t)?;
    c.suite(Suite::LeadingRelation, Some(7), t)
}

type Criterion = fn(&mut Check, &mut KlTable) -> Result<()>;

fn main() -> ExitCode {
    let criteria: [(&str, Criterion); 10] = [
        ("KL coefficients count S(n-1, n-1-i), 2 <= n <= 8", kl_coefficients),
        ("leading coefficient of P_B2n, closed form and cacti", even_leading),
        ("leading coefficient of P_B(2n-1), closed form and S(2n-2,n)", odd_leading),
        ("E_n closed form and the connected/disconnected split", connected_count),
        ("leading coefficients of Q", inverse_leading),
        ("difference formula, exhaustive and closed form", difference),
        ("deletion map surjectivity and fiber sizes", fibers),
        ("Husimi, cactus, desert and rooted desert counts", counting),
        ("identity catalog", identities),
        ("parity identity and leading relation", parity_and_relation),
    ];
    let mut table = KlTable::new();
    let mut all = true;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let mut check = Check { failures: Vec::new() };
        if let Err(e) = run(&mut check, &mut table) {
            check.failures.push(format!("error: {e}"));
        }
        let ok = check.failures.is_empty();
        all &= ok;
        println!("criterion {:>2} {}: {name} ({:.2?})", i + 1, if ok { "PASS" } else { "FAIL" }, start.elapsed());
        for f in check.failures.iter().take(10) {
            println!("    {f}");
        }
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
