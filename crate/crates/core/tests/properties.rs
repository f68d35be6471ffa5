use braidkl::cactus::{count_husimi_closed, enumerate_husimi, husimi_type, HusimiType};
use braidkl::identities::{catalog, check_identity, Outcome};
use braidkl::klcore::{char_poly_braid, flat_count, inv_kl_poly_braid, kl_poly_braid, partitions_of};
use braidkl::{IntPoly, Integer, KlTable};
use proptest::prelude::*;

fn bell(k: usize) -> Integer {
    // Bell triangle
    let mut row = vec![Integer::from(1)];
    for _ in 1..k {
        let mut next = vec![row.last().unwrap().clone()];
        for x in &row {
            let v = next.last().unwrap() + x;
            next.push(v);
        }
        row = next;
    }
    row.last().unwrap().clone()
}

#[test]
fn flats_by_type_sum_to_bell_numbers() {
    for k in 1..=15 {
        let total: Integer = partitions_of(k).unwrap().iter().map(flat_count).sum();
        assert_eq!(total, bell(k), "k = {k}");
    }
}

#[test]
fn char_poly_vanishes_at_one() {
    for n in 2..=15 {
        assert_eq!(char_poly_braid(n).unwrap().eval(&Integer::from(1)), Integer::from(0));
    }
}

#[test]
fn small_polynomials() {
    let mut t = KlTable::new();
    let p: Vec<IntPoly> = (1..=7).map(|n| kl_poly_braid(n, &mut t).unwrap()).collect();
    assert_eq!(p[5], IntPoly::from_i64s(&[1, 16, 15]));
    assert_eq!(p[6], IntPoly::from_i64s(&[1, 42, 175]));
    assert_eq!(inv_kl_poly_braid(5, &mut t).unwrap(), IntPoly::from_i64s(&[24, 10]));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn table_order_does_not_matter(a in 1usize..16, b in 1usize..16) {
        let mut shared = KlTable::new();
        let pa = kl_poly_braid(a, &mut shared).unwrap();
        let qb = inv_kl_poly_braid(b, &mut shared).unwrap();
        prop_assert_eq!(pa, kl_poly_braid(a, &mut KlTable::new()).unwrap());
        prop_assert_eq!(qb, inv_kl_poly_braid(b, &mut KlTable::new()).unwrap());
    }

    #[test]
    fn husimi_closed_form_matches_enumeration(p in 1usize..=7, pick in any::<prop::sample::Index>()) {
        let types = HusimiType::feasible_types(p);
        let ty = pick.get(&types);
        let graphs = enumerate_husimi(p, ty).unwrap();
        prop_assert_eq!(Integer::from(graphs.len()), count_husimi_closed(p, ty).unwrap());
        for g in graphs.iter().take(20) {
            prop_assert_eq!(husimi_type(g), Some(ty.clone()));
        }
    }

    #[test]
    fn identities_hold_off_grid(
        pick in any::<prop::sample::Index>(),
        index in 0i64..60,
        x in -50i64..50,
        y in -50i64..50,
        a in -20i64..20,
    ) {
        let ids = catalog();
        let id = pick.get(&ids);
        let case = check_identity(id.id, index.max(id.min_index), x, y, a).unwrap();
        prop_assert!(!matches!(case.outcome, Outcome::Fail), "{} {}: {:?} != {:?}", case.id, case.param_string(), case.lhs, case.rhs);
    }
}
