//! Deterministic sweeps pitting independent computation routes against each
//! other: the product-formula index against the Lefschetz route, the
//! closed-form merge witnesses against twisted conjugation, and the
//! brute-force fixed subgroup against the congruence description.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use fpclass::{
    brute_force_fixed_subgroup, class_index, fixed_subgroup, total_lefschetz, twisted_conjugate,
    verify_merge_witness, Family, FiberElement, FiberedMapSpec, ProductElement, SurfaceWord,
};

fn theorem1(m: i64) -> FiberedMapSpec {
    FiberedMapSpec::theorem1_family(BigInt::from(m)).unwrap()
}

fn theorem2(m: i64) -> FiberedMapSpec {
    FiberedMapSpec::theorem2_family(BigInt::from(m)).unwrap()
}

/// The class index computed through the lattice/product route must agree
/// with the Lefschetz route, and both must equal 2m, across a long sweep of
/// both families.
#[test]
fn index_routes_agree_up_to_m_200() {
    for m in 1i64..=200 {
        for spec in [theorem1(m), theorem2(m)] {
            let product_route = class_index(&spec).unwrap();
            let lefschetz_route = total_lefschetz(&spec).abs();
            assert_eq!(product_route, lefschetz_route, "m = {m}, {spec}");
            assert_eq!(product_route, BigInt::from(2 * m), "m = {m}, {spec}");
        }
    }
}

/// The closed-form witness (a1^{s''-s'}, (t''-t', t'-t'')) carries the
/// label (1, (s', t')) to (1, (s'', t'')) for every parameter choice in the
/// sweep window.
#[test]
fn closed_form_witness_sweep() {
    for m in [1i64, 2, 3] {
        let spec = theorem2(m);
        for s1 in -5i64..=5 {
            for t1 in -5i64..=5 {
                for s2 in -5i64..=5 {
                    for t2 in -5i64..=5 {
                        let beta = ProductElement::fiber_only(2, FiberElement::from_i64(&[s1, t1]));
                        let gamma = ProductElement::new(
                            SurfaceWord::generator_power(2, 0, BigInt::from(s2 - s1)),
                            FiberElement::from_i64(&[t2 - t1, t1 - t2]),
                        );
                        let moved = twisted_conjugate(&spec, &beta, &gamma).unwrap();
                        assert_eq!(
                            moved,
                            ProductElement::fiber_only(2, FiberElement::from_i64(&[s2, t2])),
                            "m = {m}, ({s1}, {t1}) -> ({s2}, {t2})"
                        );
                    }
                }
            }
        }
    }
}

/// Solver witnesses and the closed form must both merge every label pair of
/// the circle-fiber family as well.
#[test]
fn circle_family_labels_all_merge() {
    for m in [1i64, 4, 9] {
        let spec = theorem1(m);
        for s in -6i64..=6 {
            for s_prime in -6i64..=6 {
                let from = FiberElement::from_i64(&[s]);
                let to = FiberElement::from_i64(&[s_prime]);
                let witness = verify_merge_witness(&spec, &from, &to).unwrap();
                assert!(witness.verified, "m = {m}, {s} -> {s_prime}");
            }
        }
    }
}

/// Brute-force sweep against the congruence description for both families:
/// the enumerated pairs satisfy the conditions and the fiber formula, and
/// nothing in the box is missed.
#[test]
fn fixed_subgroup_brute_force_agreement() {
    for family in [Family::Theorem1, Family::Theorem2] {
        for m in 1i64..=6 {
            let spec = family.spec(BigInt::from(m)).unwrap();
            let report = fixed_subgroup(&spec).unwrap();
            let bound = 6u32;
            let pairs = brute_force_fixed_subgroup(&spec, bound).unwrap();

            for (alpha, v) in &pairs {
                assert!(report.contains(alpha), "{family} m={m}: {alpha:?} rejected");
                assert_eq!(
                    report.fiber_formula.apply_integral(alpha).as_deref(),
                    Some(v.as_slice()),
                    "{family} m={m}: fiber mismatch at {alpha:?}"
                );
            }

            let mut lattice_points = 0usize;
            let side = 2 * i64::from(bound) + 1;
            for idx in 0..side.pow(4) {
                let mut rem = idx;
                let mut alpha = [0i64; 4];
                for slot in &mut alpha {
                    *slot = rem % side - i64::from(bound);
                    rem /= side;
                }
                let alpha: Vec<BigInt> = alpha.iter().map(|&a| BigInt::from(a)).collect();
                if report.contains(&alpha) {
                    lattice_points += 1;
                }
            }
            assert_eq!(lattice_points, pairs.len(), "{family} m={m}");
        }
    }
}

/// Lattice membership for the circle family at m = 6 is exactly
/// divisibility of the a1 exponent: a box sweep of radius 12 confirms it.
#[test]
fn circle_family_membership_is_divisibility() {
    let spec = theorem1(6);
    let pairs = brute_force_fixed_subgroup(&spec, 12).unwrap();
    // alpha_1 in {-12, -6, 0, 6, 12}; the other three coordinates are free.
    assert_eq!(pairs.len(), 5 * 25 * 25 * 25);
    let report = fixed_subgroup(&spec).unwrap();
    for (alpha, v) in &pairs {
        assert!((&alpha[0] % BigInt::from(6)).is_zero(), "found {alpha:?}");
        assert_eq!(&v[0] * 6, -&alpha[0]);
        assert!(report.contains(alpha));
    }
}
