use proptest::prelude::*;
use twistlab::hochschild::{
    bar_degree_limit, basis_idempotents, crown_formula, hh_bar, hh_bar_with_budget, hh_e_complex, hh_rsz, thm_formula,
    DEFAULT_BUDGET,
};
use twistlab::quiver::{standard_quiver, Quiver};
use twistlab::{Error, FieldDescriptor, StandardAlgebra};

const Q: FieldDescriptor = FieldDescriptor::RATIONALS;

fn small_quivers() -> impl Strategy<Value = Quiver> {
    (1usize..=3)
        .prop_flat_map(|v| (Just(v), prop::collection::vec((0..v, 0..v), 0..=3)))
        .prop_map(|(v, arrows)| Quiver::new(v, arrows).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, ..ProptestConfig::default() })]

    #[test]
    fn three_complexes_agree(q in small_quivers()) {
        let a = q.truncated_path_algebra(Q).unwrap();
        let rsz = hh_rsz(&q, Q, 3, "q").unwrap().dims;
        let e = hh_e_complex(&a, &basis_idempotents(&a), 3, "q").unwrap().dims;
        prop_assert_eq!(&rsz, &e);
        // HH⁰ is the center, computed without any complex
        prop_assert_eq!(rsz[0], a.center().dim());
        let top = bar_degree_limit(a.dim(), DEFAULT_BUDGET, 3).unwrap().min(2);
        prop_assert_eq!(&hh_bar(&a, top, "q").unwrap().dims[..], &rsz[..=top]);
    }

    #[test]
    fn formula_matches_complex(q in small_quivers()) {
        let rsz = hh_rsz(&q, Q, 5, "q").unwrap().dims;
        for (n, &d) in rsz.iter().enumerate() {
            if let Some(v) = thm_formula(&q, n) {
                prop_assert_eq!(v, d as i64, "degree {}", n);
            }
        }
    }
}

#[test]
fn crown_formula_against_complex() {
    for c in 2..=4 {
        let rsz = hh_rsz(&standard_quiver(&format!("crown({c})")).unwrap(), Q, 12, "crown").unwrap().dims;
        for (n, &d) in rsz.iter().enumerate() {
            assert_eq!(crown_formula(c, n, 0).unwrap(), d, "crown({c}) degree {n}");
        }
    }
}

#[test]
fn separable_algebras_have_no_higher_cohomology() {
    for p in [3, 5] {
        let f = FieldDescriptor::prime(p).unwrap();
        for s in [StandardAlgebra::Matrix2, StandardAlgebra::KN(3), StandardAlgebra::Aq(f.zero())] {
            let a = s.build(f).unwrap();
            let dims = hh_bar(&a, 3, "sep").unwrap().dims;
            assert_eq!(dims[0], a.center().dim());
            assert_eq!(&dims[1..], &[0, 0, 0]);
        }
    }
}

#[test]
fn dual_numbers_depend_on_characteristic() {
    // k[x]/x²: HH^n = k for n ≥ 1 away from characteristic 2, k² in characteristic 2
    let loop_q = standard_quiver("loop").unwrap();
    assert_eq!(hh_rsz(&loop_q, Q, 5, "loop").unwrap().dims, vec![2, 1, 1, 1, 1, 1]);
    let f2 = FieldDescriptor::prime(2).unwrap();
    assert_eq!(hh_rsz(&loop_q, f2, 5, "loop").unwrap().dims, vec![2; 6]);
    let a = loop_q.truncated_path_algebra(f2).unwrap();
    assert_eq!(hh_bar(&a, 5, "loop").unwrap().dims, vec![2; 6]);
}

#[test]
fn budget_is_enforced() {
    let a = StandardAlgebra::Matrix2.build(Q).unwrap();
    assert!(matches!(hh_bar_with_budget(&a, 6, "m", 1 << 10), Err(Error::BudgetExceeded { .. })));
    assert_eq!(bar_degree_limit(4, DEFAULT_BUDGET, 99), Some(8));
}
