use dissect_core::catalog;
use dissect_core::search::region_symmetries;
use dissect_core::tiling::{load, save, validate, FailureKind, Tiling};
use proptest::prelude::*;
use proptest::sample::subsequence;

fn valid_tilings() -> Vec<Tiling> {
    vec![
        catalog::unit_grid(3, 2),
        catalog::basket_weave(2, 2),
        catalog::brick_rows(2, 3),
        catalog::trapezoid_pair(),
        catalog::two_pairs_pi3(),
        catalog::pair_square_grid(2, &[true, false, false, true]),
        catalog::pi4_pairs_square(),
    ]
}

fn pick() -> impl Strategy<Value = Tiling> {
    (0..valid_tilings().len()).prop_map(|i| valid_tilings().swap_remove(i))
}

fn with_order() -> impl Strategy<Value = (Tiling, Vec<usize>)> {
    pick().prop_flat_map(|t| {
        let order: Vec<usize> = (0..t.len()).collect();
        (Just(t), Just(order).prop_shuffle())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn validity_ignores_tile_order((t, order) in with_order()) {
        prop_assert!(validate(&t.permuted(&order)).valid);
    }

    #[test]
    fn validity_survives_region_symmetries(t in pick(), k in 0usize..8) {
        let syms = region_symmetries(t.region());
        let g = &syms[k % syms.len()];
        prop_assert!(validate(&t.transformed(g)).valid);
    }

    #[test]
    fn save_then_load_is_identity((t, order) in with_order()) {
        let t = t.permuted(&order);
        let bytes = save(&t);
        let back = load(&bytes).unwrap();
        prop_assert_eq!(save(&back), bytes);
        let key = |t: &Tiling| {
            let mut v: Vec<String> = t.isometries().iter().map(|g| format!("{g:?}")).collect();
            v.sort();
            v
        };
        prop_assert_eq!(key(&back), key(&t));
        prop_assert_eq!(back.prototile(), t.prototile());
        prop_assert_eq!(back.region(), t.region());
    }

    #[test]
    fn dropping_tiles_breaks_coverage((t, keep) in pick().prop_flat_map(|t| {
        let n = t.len();
        (Just(t), subsequence((0..n).collect::<Vec<_>>(), 1..n))
    })) {
        let isos: Vec<_> = keep.iter().map(|&i| t.tiles()[i].iso.clone()).collect();
        let partial = Tiling::new(t.prototile().clone(), t.region().clone(), isos, t.angle_mode()).unwrap();
        let report = validate(&partial);
        prop_assert!(!report.valid);
        prop_assert!(report.has(|k| matches!(k, FailureKind::AreaMismatch)));
        let gap = report.has(|k| matches!(k, FailureKind::Gap { .. }));
        prop_assert!(gap);
    }

    #[test]
    fn duplicated_tile_overlaps(t in pick(), i in 0usize..8) {
        let mut isos = t.isometries();
        let i = i % isos.len();
        isos.push(isos[i].clone());
        let doubled = Tiling::new(t.prototile().clone(), t.region().clone(), isos, t.angle_mode()).unwrap();
        let report = validate(&doubled);
        let overlap = report.has(|k| matches!(k, FailureKind::Overlap { .. }));
        prop_assert!(overlap);
    }
}
