//! Randomized invariants across the exact layer and the surface pipeline.
//!
//! Each property re-derives its expectation from scratch inside the test
//! body, so a regression in the library cannot hide behind its own helper
//! functions.

use genus_gaps_core::exact::{ceil_quadratic, floor_quadratic, int, rat, to_rat, RationalPoly};
use genus_gaps_core::intervals::{interval_for, merge, GenusInterval};
use genus_gaps_core::nfold::{genus_pm, HilbertData};
use genus_gaps_core::{Error, Int, PolarizedSurface, Rat};
use num_traits::{Signed, Zero};
use proptest::prelude::*;

/// k >= base + sqrt(radicand), decided without leaving the rationals.
fn at_least_value(k: &Int, base: &Rat, radicand: &Rat) -> bool {
    let t = to_rat(k) - base;
    !t.is_negative() && &t * &t >= *radicand
}

/// k <= base + sqrt(radicand), decided without leaving the rationals.
fn at_most_value(k: &Int, base: &Rat, radicand: &Rat) -> bool {
    let t = to_rat(k) - base;
    t.is_negative() || t.is_zero() || &t * &t <= *radicand
}

fn small_rat() -> impl Strategy<Value = Rat> {
    (-400i64..=400, 1i64..=40).prop_map(|(n, d)| rat(n, d))
}

proptest! {
    #[test]
    fn quadratic_ceil_is_the_least_integer_at_or_above(
        base in small_rat(),
        rn in 0i64..=4000,
        rd in 1i64..=40,
    ) {
        let radicand = rat(rn, rd);
        let c = ceil_quadratic(base.clone(), radicand.clone()).unwrap();
        prop_assert!(at_least_value(&c, &base, &radicand));
        prop_assert!(!at_least_value(&(&c - int(1)), &base, &radicand));
    }

    #[test]
    fn quadratic_floor_is_the_greatest_integer_at_or_below(
        base in small_rat(),
        rn in 0i64..=4000,
        rd in 1i64..=40,
    ) {
        let radicand = rat(rn, rd);
        let f = floor_quadratic(base.clone(), radicand.clone()).unwrap();
        prop_assert!(at_most_value(&f, &base, &radicand));
        prop_assert!(!at_most_value(&(&f + int(1)), &base, &radicand));
    }

    #[test]
    fn merged_intervals_are_sorted_disjoint_and_membership_preserving(
        raw in prop::collection::vec((0i64..=500, 0i64..=50), 0..12),
    ) {
        let intervals: Vec<GenusInterval> = raw
            .iter()
            .map(|&(lo, len)| GenusInterval::from_i64(lo, lo + len).unwrap())
            .collect();
        let merged = merge(&intervals);
        for pair in merged.windows(2) {
            // Strictly separated: a gap of at least one integer.
            prop_assert!(pair[0].hi() < pair[1].lo());
            prop_assert!(&(pair[0].hi() + int(1)) < pair[1].lo());
        }
        // Membership is unchanged at every boundary and its neighbours.
        for iv in &intervals {
            for probe in [iv.lo() - int(1), iv.lo().clone(), iv.hi().clone(), iv.hi() + int(1)] {
                if probe.is_negative() {
                    continue;
                }
                let before = intervals.iter().any(|i| i.contains(&probe));
                let after = merged.iter().any(|i| i.contains(&probe));
                prop_assert_eq!(before, after);
            }
        }
    }

    #[test]
    fn genus_interval_endpoints_come_from_the_genus_formula(
        d in 1i64..=30,
        e_half in -20i64..=20,
        p in 0i64..=30,
        q in 0i64..=4,
        n4 in 1i64..=3,
        n in 1i64..=40,
    ) {
        // Keep d - e even by moving e in steps of 2 from d.
        let e = d - 2 * e_half;
        let s = PolarizedSurface::from_i64(d, e, p, q, n4).unwrap();
        let genus = |k: i64| {
            let v = rat(k, 2) * (rat(k * d, 1) + rat(e, 1)) + rat(1, 1);
            prop_assert!(v.is_integer());
            Ok(v.to_integer())
        };
        let lo = genus(n - 1)?;
        let hi = genus(n)?;
        match interval_for(&s, &int(n)) {
            Ok(iv) => {
                prop_assert_eq!(iv.lo(), &lo);
                prop_assert_eq!(iv.hi(), &hi);
            }
            // Strongly negative e makes the genus sequence dip at small n;
            // the constructor refuses those inverted or negative intervals.
            Err(Error::Domain(_)) => prop_assert!(lo > hi || lo.is_negative()),
            Err(other) => prop_assert!(false, "unexpected error {other}"),
        }
    }

    #[test]
    fn surface_hilbert_data_reproduces_the_genus_sequence(
        d in 1i64..=30,
        e_half in -20i64..=20,
        p in 0i64..=30,
        q in 0i64..=4,
        n4 in 1i64..=3,
    ) {
        let e = d - 2 * e_half;
        let s = PolarizedSurface::from_i64(d, e, p, q, n4).unwrap();
        let h = HilbertData::from_surface(&s).unwrap();
        for m in 1i64..=20 {
            prop_assert_eq!(
                genus_pm(&h, &int(m)).unwrap(),
                s.arithmetic_genus(&int(m)).unwrap()
            );
        }
    }

    #[test]
    fn polynomial_division_reassembles(
        a in prop::collection::vec(-30i64..=30, 1..7),
        b in prop::collection::vec(-30i64..=30, 1..5),
    ) {
        let a = RationalPoly::from_ints(&a);
        let b = RationalPoly::from_ints(&b);
        prop_assume!(!b.is_zero());
        let (quo, rem) = a.div_rem(&b);
        prop_assert_eq!(&(&quo * &b) + &rem, a);
        if let Some(rdeg) = rem.degree() {
            prop_assert!(rdeg < b.degree().unwrap());
        }
    }

    #[test]
    fn planted_positive_roots_are_isolated(
        r1 in 1i64..=25,
        gap2 in 1i64..=25,
        gap3 in 1i64..=25,
    ) {
        // Distinct positive roots r1 < r2 < r3.
        let r2 = r1 + gap2;
        let r3 = r2 + gap3;
        let poly = RationalPoly::from_ints(&[-r1 * r2 * r3, r1 * r2 + r1 * r3 + r2 * r3, -(r1 + r2 + r3), 1]);
        let brackets = poly.isolate_positive_roots(&rat(1, 100)).unwrap();
        prop_assert_eq!(brackets.len(), 3);
        for (root, (lo, hi)) in [r1, r2, r3].iter().zip(&brackets) {
            let r = rat(*root, 1);
            prop_assert!(lo < &r && &r < hi, "root {} escaped [{}, {}]", root, lo, hi);
        }
    }
}
