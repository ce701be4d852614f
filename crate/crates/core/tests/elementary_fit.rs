use num_bigint::BigInt;
use sturmkit::solver::fit::{default_samples, fit_elementary_map};
use sturmkit::solver::FracLinMap;
use sturmkit::words::Representative;

#[test]
fn tabulated_maps_are_the_unique_fits() {
    let samples = default_samples::<BigInt>();
    assert!(samples.len() >= 20);
    for i in 1..=8u8 {
        let fitted = fit_elementary_map(i, &samples).unwrap();
        let table = FracLinMap::<BigInt>::elementary(i).unwrap();
        assert!(
            table.same_action(&fitted.map),
            "T{i}: table {table}, fit {}",
            fitted.map
        );
        assert_eq!(table.ceiling_flag, fitted.map.ceiling_flag, "T{i}");
        // flagged maps swap the two codings in both directions
        assert_eq!(fitted.from_ceiling, fitted.from_floor.flipped(), "T{i}");
        assert_eq!(
            fitted.from_floor == Representative::Ceiling,
            table.ceiling_flag,
            "T{i}"
        );
    }
}
