use dissect_core::catalog;
use dissect_core::exactnum::rational::{int, rat, Rational};
use dissect_core::exactnum::QuadraticNumber as Qn;
use dissect_core::geometry::Point;
use dissect_core::segments::{
    area_constraint_check, boundary_identified_relations, extract_maximal_segments, prec, pure2_check, solve_x,
    SideRelation, SolveX,
};
use dissect_core::tiling::Tiling;
use proptest::prelude::*;

fn pair_grid() -> impl Strategy<Value = Tiling> {
    (1usize..=3, any::<u16>()).prop_map(|(k, bits)| {
        let turned: Vec<bool> = (0..k * k).map(|i| bits >> i & 1 == 1).collect();
        catalog::pair_square_grid(k, &turned)
    })
}

fn length_sum(sides: &[dissect_core::segments::SegmentSide]) -> Qn {
    sides.iter().fold(Qn::zero(3), |acc, s| acc + s.length.clone().expect("trapezoid side"))
}

fn point3() -> impl Strategy<Value = Point> {
    (-6i64..=6, -6i64..=6, -6i64..=6, -6i64..=6)
        .prop_map(|(a, b, c, d)| Point::new(Qn::new(int(a), rat(b, 2), 3), Qn::new(int(c), rat(d, 2), 3)))
}

fn frame() -> impl Strategy<Value = Point> {
    (0u32..12).prop_map(|k| {
        let (c, s) = dissect_core::geometry::rotation_entries(k, 3);
        Point::new(c, s)
    })
}

fn relation() -> impl Strategy<Value = SideRelation> {
    (-4i64..=4, -4i64..=4, -4i64..=4, -4i64..=4).prop_map(|(a, b, c, d)| SideRelation { a, b, c, d })
}

/// Value of `a·x + b·(x+1) + c·√3 + 2d` at `x = r + s√3`.
fn residual(rel: &SideRelation, r: &Rational, s: &Rational) -> Qn {
    let x = Qn::new(r.clone(), s.clone(), 3);
    let k = Qn::from_int(rel.a + rel.b, 3);
    &k * &x + Qn::from_int(rel.b + 2 * rel.d, 3) + Qn::new(int(0), int(rel.c), 3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn segment_sides_balance_and_partition(t in pair_grid()) {
        let segs = extract_maximal_segments(&t);
        let mut count = 0;
        for s in &segs {
            count += s.upper.len() + s.lower.len();
            if s.boundary {
                prop_assert!(s.upper.is_empty() || s.lower.is_empty());
            } else {
                prop_assert_eq!(length_sum(&s.upper), length_sum(&s.lower));
                prop_assert_eq!(length_sum(&s.upper), (&s.v - &s.u).norm2().sqrt().unwrap());
            }
        }
        prop_assert_eq!(count, 4 * t.len());
    }

    #[test]
    fn pair_grids_meet_x_and_area(t in pair_grid()) {
        let rels: Vec<SideRelation> = boundary_identified_relations(&t).unwrap().into_iter().map(|l| l.relation).collect();
        match solve_x(&rels) {
            SolveX::Solved { r, s } => prop_assert_eq!(Qn::new(r, s, 3), catalog::pair_x()),
            SolveX::AllDegenerate => {}
            SolveX::Contradiction { .. } => prop_assert!(false, "a real tiling cannot contradict itself"),
        }
        prop_assert!(area_constraint_check(&t).unwrap().holds());
    }
}

proptest! {
    #[test]
    fn prec_is_a_strict_order(u in point3(), v in point3(), w in point3(), x in frame()) {
        prop_assert!(!prec(&u, &u, &x));
        prop_assert!(!(prec(&u, &v, &x) && prec(&v, &u, &x)));
        if prec(&u, &v, &x) && prec(&v, &w, &x) {
            prop_assert!(prec(&u, &w, &x));
        }
    }

    #[test]
    fn solve_x_agrees_with_every_relation(rels in prop::collection::vec(relation(), 0..6)) {
        match solve_x(&rels) {
            SolveX::Solved { r, s } => {
                for rel in rels.iter().filter(|r| r.x_coefficient() != 0) {
                    prop_assert!(residual(rel, &r, &s).is_zero());
                }
            }
            SolveX::AllDegenerate => prop_assert!(rels.iter().all(|r| r.x_coefficient() == 0)),
            SolveX::Contradiction { first, second } => {
                prop_assert!(first < second);
                let (p, q) = (rels[first], rels[second]);
                prop_assert!(p.x_coefficient() != 0 && q.x_coefficient() != 0);
                // equal x would make the cross-multiplied relations agree
                let lhs = (p.b + 2 * p.d) * q.x_coefficient() - (q.b + 2 * q.d) * p.x_coefficient();
                let rhs = p.c * q.x_coefficient() - q.c * p.x_coefficient();
                prop_assert!(lhs != 0 || rhs != 0);
            }
        }
    }

    #[test]
    fn solve_x_recovers_a_planted_value(r in (-6i64..=6, 1i64..=4), s in (-3i64..=3, 1i64..=4), k in 1i64..5, b in 0i64..4) {
        // k·x + b = r' + c√3 for a relation built from x itself
        let (r, s) = (rat(r.0, r.1), rat(s.0, s.1));
        let a = k - b;
        let cr = -(int(k) * &r + int(b));
        let cs = -(int(k) * &s);
        prop_assume!(cr.is_integer() && cs.is_integer());
        let rational = i64::try_from(cr.to_integer()).unwrap();
        prop_assume!(rational % 2 == 0);
        let rel = SideRelation { a, b, c: i64::try_from(cs.to_integer()).unwrap(), d: rational / 2 };
        prop_assert_eq!(solve_x(&[rel]), SolveX::Solved { r, s });
    }

    #[test]
    fn pure2_has_no_witness_with_positive_radical(r in (-20i64..=20, 1i64..=6), s in (1i64..=10, 1i64..=6)) {
        let x = Qn::new(rat(r.0, r.1), rat(s.0, s.1), 3);
        prop_assert_eq!(pure2_check(&x, 30).unwrap(), None);
    }

    #[test]
    fn pure2_matches_brute_force(r in (-6i64..=6, 1i64..=4), s in (-4i64..=0, 1i64..=3)) {
        let x = Qn::new(rat(r.0, r.1), rat(s.0, s.1), 3);
        let bound = 8;
        let mut expected = None;
        'outer: for a in 0..=bound {
            for b in 0..=bound {
                for c in 0..=bound {
                    let v = Qn::from_int(a + b, 3) * x.clone() + Qn::from_int(b, 3) + Qn::new(int(0), int(c), 3);
                    if v.is_rational() && v.rat().is_integer() && v.is_positive() && v.rat().to_integer() % 2u32 == 0u32.into() {
                        expected = Some((a, b, c));
                        break 'outer;
                    }
                }
            }
        }
        let got = pure2_check(&x, bound).unwrap().map(|w| (w.a, w.b, w.c));
        prop_assert_eq!(got, expected);
    }
}
