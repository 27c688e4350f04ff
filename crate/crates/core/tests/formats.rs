use proptest::prelude::*;
use twistlab::classify::orbit_report;
use twistlab::duplicate::{DuplicateDatum, DuplicateRecord, RoundTripParams};
use twistlab::hochschild::hh_rsz;
use twistlab::io::{
    census, census_tsv, orbit_rows, orbit_tsv, parse_census_tsv, parse_orbit_tsv, read_algebra, read_quiver,
    write_algebra, write_quiver,
};
use twistlab::quiver::Quiver;
use twistlab::{FieldDescriptor, HHProfile, MatrixOfScalars, StandardAlgebra};

proptest! {
    #![proptest_config(ProptestConfig { cases: 32, ..ProptestConfig::default() })]

    #[test]
    fn algebra_files_round_trip(e in prop::collection::vec(-4i64..=4, 16), num in -9i64..=9, den in 1i64..=9) {
        let q = FieldDescriptor::RATIONALS;
        let p = MatrixOfScalars::new(q, 4, 4, e.iter().map(|&x| q.from_i64(x)).collect()).unwrap();
        prop_assume!(p.rank() == 4);
        let a = StandardAlgebra::Aq(q.from_ratio(num, den).unwrap()).build(q).unwrap().change_of_basis(&p, None).unwrap();
        let text = write_algebra(&a);
        let back = read_algebra(&text).unwrap();
        prop_assert_eq!(&back, &a);
        prop_assert_eq!(write_algebra(&back), text);
    }

    #[test]
    fn quiver_files_round_trip(v in 1usize..=5, raw in prop::collection::vec((0usize..5, 0usize..5), 0..8)) {
        let arrows = raw.into_iter().map(|(s, t)| (s % v, t % v)).collect();
        let q = Quiver::new(v, arrows).unwrap();
        let text = write_quiver(&q);
        prop_assert_eq!(read_quiver(&text).unwrap(), q);
    }
}

#[test]
fn census_and_orbit_tables_round_trip() {
    for f in ["F2", "F3", "F5", "F7", "Q"] {
        let f: FieldDescriptor = f.parse().unwrap();
        let rows = census(f).unwrap();
        assert_eq!(parse_census_tsv(&census_tsv(&rows)).unwrap(), rows);
        let orbit = orbit_rows(&orbit_report(f).unwrap());
        assert_eq!(parse_orbit_tsv(&orbit_tsv(&orbit)).unwrap(), orbit);
    }
}

#[test]
fn profiles_and_duplicate_records_round_trip() {
    let q = FieldDescriptor::RATIONALS;
    let profile = hh_rsz(&twistlab::quiver::standard_quiver("kronecker").unwrap(), q, 3, "kronecker").unwrap();
    let text = serde_json::to_string(&profile).unwrap();
    assert_eq!(text, r#"{"algebra_tag":"kronecker","method":"rsz-complex","dims":[1,3,0,0]}"#);
    assert_eq!(serde_json::from_str::<HHProfile>(&text).unwrap(), profile);

    let d = RoundTripParams::from_a_u(q.from_ratio(2, 3).unwrap()).datum().unwrap();
    let json = serde_json::to_string(&d.to_record()).unwrap();
    let record: DuplicateRecord = serde_json::from_str(&json).unwrap();
    let back = DuplicateDatum::from_record(&record).unwrap();
    assert_eq!(back.to_record(), d.to_record());
}

#[test]
fn malformed_inputs_are_rejected() {
    assert!(read_algebra(r#"{"field":"F4","dim":0,"basis":[],"unit":[],"table":[]}"#).is_err());
    assert!(read_quiver(r#"{"vertex_count":0,"arrows":[]}"#).is_err());
    assert!(read_quiver(r#"{"arrows":[]}"#).is_err());
    assert!(parse_census_tsv("family\tparameter\tp\tq\tr\ts\tinvertible\nflip\t-\t0\t0\t0\n").is_err());
    assert!(parse_orbit_tsv("").is_err());
}
