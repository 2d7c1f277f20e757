//! Seeded oracle cross-check suites behind the `oracle-check` command.
//!
//! Each suite pits an enumeration/substitution oracle against the formula
//! path it is supposed to confirm. With a fixed seed the sweeps (and hence
//! the structured output) are byte-for-byte reproducible.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use fpclass::{
    brute_force_fixed_subgroup, fiber_nielsen, fixed_subgroup, preimage_lattice_index,
    reidemeister_structure, torus_fixed_points, verify_merge_witness, Family, FiberElement,
    FiberedMapSpec, GroupOrder, IntMatrix,
};

/// Outcome of one suite: trials attempted, trials passed, and the first
/// failure rendered for the report.
#[derive(Clone, Debug)]
pub struct SuiteOutcome {
    pub name: &'static str,
    pub trials: u32,
    pub passed: u32,
    pub first_failure: Option<String>,
}

impl SuiteOutcome {
    fn tally(name: &'static str, results: Vec<Result<(), String>>) -> Self {
        let trials = results.len() as u32;
        let passed = results.iter().filter(|r| r.is_ok()).count() as u32;
        let first_failure = results.into_iter().find_map(Result::err);
        SuiteOutcome {
            name,
            trials,
            passed,
            first_failure,
        }
    }
}

/// Runs every suite with sweeps drawn from one seeded stream.
pub fn run_all(seed: u64) -> Vec<SuiteOutcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    vec![
        torus_count_vs_determinant(&mut rng),
        merge_witness_consistency(&mut rng),
        fixed_subgroup_agreement(),
        lattice_cross_identity(&mut rng),
    ]
}

fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize, lo: i64, hi: i64) -> IntMatrix {
    let entries: Vec<i64> = (0..rows * cols)
        .map(|_| rng.random_range(lo..=hi))
        .collect();
    IntMatrix::from_i64(rows, cols, &entries)
}

fn random_nondegenerate_fiber(rng: &mut ChaCha8Rng, k: usize, lo: i64, hi: i64) -> IntMatrix {
    loop {
        let xi = random_matrix(rng, k, k, lo, hi);
        let shear = &xi - &IntMatrix::identity(k);
        if !shear.det().is_zero() {
            return xi;
        }
    }
}

fn random_spec(rng: &mut ChaCha8Rng, nondegenerate: bool) -> FiberedMapSpec {
    loop {
        let genus = rng.random_range(2..=3usize);
        let k = rng.random_range(1..=3usize);
        let retraction = random_matrix(rng, k, 2 * genus, -4, 4);
        let fiber_matrix = random_matrix(rng, k, k, -4, 4);
        let spec = FiberedMapSpec::new(genus, retraction, fiber_matrix, "random")
            .expect("shapes are consistent by construction");
        if !nondegenerate || !spec.diagnostics().degenerate {
            return spec;
        }
    }
}

/// Fixed points of 200 random nondegenerate torus maps, counted by
/// enumeration, must match the Nielsen number |det(Xi - I)|.
fn torus_count_vs_determinant(rng: &mut ChaCha8Rng) -> SuiteOutcome {
    let results = (0..200)
        .map(|_| {
            let k = rng.random_range(1..=3usize);
            let xi = random_nondegenerate_fiber(rng, k, -5, 5);
            let expected = fiber_nielsen(&xi).expect("nondegenerate by construction");
            let shear_det = (&xi - &IntMatrix::identity(k)).det().abs();
            let count = torus_fixed_points(&xi, &vec![BigRational::zero(); k]).count();
            if BigInt::from(count) == expected && shear_det == expected {
                Ok(())
            } else {
                Err(format!(
                    "Xi = {xi}: enumerated {count} fixed points, Nielsen number {expected}"
                ))
            }
        })
        .collect();
    SuiteOutcome::tally("torus-count-vs-determinant", results)
}

/// Merge witnesses for 200 random label pairs: every returned witness must
/// re-verify under twisted conjugation, and absence is only consistent with
/// a map that genuinely has more than one class.
fn merge_witness_consistency(rng: &mut ChaCha8Rng) -> SuiteOutcome {
    let results = (0..200)
        .map(|_| {
            let spec = random_spec(rng, false);
            let k = spec.fiber_rank();
            let coords = |rng: &mut ChaCha8Rng| -> FiberElement {
                FiberElement::new(
                    (0..k)
                        .map(|_| BigInt::from(rng.random_range(-5..=5i64)))
                        .collect(),
                )
            };
            let from = coords(rng);
            let to = coords(rng);
            match verify_merge_witness(&spec, &from, &to) {
                Some(witness) if witness.verified => Ok(()),
                Some(_) => Err(format!(
                    "witness for {from} -> {to} failed re-verification on {spec:?}"
                )),
                None => {
                    let structure = reidemeister_structure(&spec);
                    if structure.class_count.is_one() {
                        Err(format!(
                            "single-class map refused to merge {from} -> {to}: {spec:?}"
                        ))
                    } else {
                        Ok(())
                    }
                }
            }
        })
        .collect();
    SuiteOutcome::tally("merge-witness-consistency", results)
}

/// Exhaustive sweep agreement between the brute-force fixed subgroup and
/// the congruence description, for both families at small parameters.
fn fixed_subgroup_agreement() -> SuiteOutcome {
    let bound = 3u32;
    let mut results = Vec::new();
    for family in [Family::Theorem1, Family::Theorem2] {
        for m in 1..=6i64 {
            let spec = family.spec(BigInt::from(m)).expect("m >= 1");
            let report = fixed_subgroup(&spec).expect("families are nondegenerate");
            let pairs = brute_force_fixed_subgroup(&spec, bound).expect("within budget");

            let mut failure = None;
            for (alpha, v) in &pairs {
                if !report.contains(alpha) {
                    failure = Some(format!("{family} m={m}: sweep found alpha outside lattice"));
                    break;
                }
                if report.fiber_formula.apply_integral(alpha).as_deref() != Some(v.as_slice()) {
                    failure = Some(format!("{family} m={m}: fiber formula disagrees"));
                    break;
                }
            }
            if failure.is_none() {
                // No lattice point in the box may be missing from the sweep.
                let side = 2 * i64::from(bound) + 1;
                let mut in_lattice = 0usize;
                let mut alpha = [-i64::from(bound); 4];
                'sweep: loop {
                    let alpha_big: Vec<BigInt> = alpha.iter().map(|&a| BigInt::from(a)).collect();
                    if report.contains(&alpha_big) {
                        in_lattice += 1;
                    }
                    let mut pos = 4;
                    loop {
                        if pos == 0 {
                            break 'sweep;
                        }
                        pos -= 1;
                        if alpha[pos] < i64::from(bound) {
                            alpha[pos] += 1;
                            break;
                        }
                        alpha[pos] = -i64::from(bound);
                    }
                }
                debug_assert!(side.pow(4) >= in_lattice as i64);
                if in_lattice != pairs.len() {
                    failure = Some(format!(
                        "{family} m={m}: sweep found {} pairs, lattice contains {in_lattice}",
                        pairs.len()
                    ));
                }
            }
            results.push(failure.map_or(Ok(()), Err));
        }
    }
    SuiteOutcome::tally("fixed-subgroup-agreement", results)
}

/// For 200 random nondegenerate maps, the lattice index times the class
/// count must equal |det(I - Xi)|: the fiber classes distribute evenly.
fn lattice_cross_identity(rng: &mut ChaCha8Rng) -> SuiteOutcome {
    let results = (0..200)
        .map(|_| {
            let spec = random_spec(rng, true);
            let lefschetz = spec.lefschetz_matrix();
            let index = preimage_lattice_index(spec.retraction(), &lefschetz);
            let count = reidemeister_structure(&spec).class_count;
            match (index, count) {
                (GroupOrder::Finite(i), GroupOrder::Finite(c)) => {
                    if i * c == lefschetz.det().abs() {
                        Ok(())
                    } else {
                        Err(format!("index * count != |det(I - Xi)| for {spec:?}"))
                    }
                }
                _ => Err(format!(
                    "unexpected infinite order for nondegenerate {spec:?}"
                )),
            }
        })
        .collect();
    SuiteOutcome::tally("lattice-cross-identity", results)
}
