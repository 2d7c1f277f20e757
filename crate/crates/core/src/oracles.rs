//! Independent brute-force verifiers for the invariant formulas.
//!
//! These deliberately avoid the main computation paths: fixed points of a
//! torus map are enumerated and substituted back, merge witnesses are
//! re-checked by direct twisted conjugation, and the fixed subgroup is
//! recovered by sweeping exponent vectors against a rational
//! Gauss-Jordan inverse. Agreement with the formula modules is evidence,
//! not tautology.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::fibered::FiberedMapSpec;
use crate::matrix::{smith_normal_form, solve_diophantine, IntMatrix};
use crate::words::{twisted_conjugate, FiberElement, ProductElement, SurfaceWord};

/// All fixed points of the torus map `x -> Xi x + c` in `[0, 1)^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusFixedPointSet {
    /// Exact rational fixed points, sorted lexicographically.
    pub points: Vec<Vec<BigRational>>,
    /// det(Xi - I) = 0: every solution is non-isolated and the enumeration
    /// is left empty.
    pub degenerate: bool,
}

impl TorusFixedPointSet {
    pub fn count(&self) -> usize {
        self.points.len()
    }
}

/// Solves `(Xi - I) x = -c (mod Z^k)` exactly: in Smith coordinates the
/// system splits into `d_i y_i = b_i (mod 1)`, each with `d_i` residue
/// solutions, and the products enumerate all fixed points. Every point is
/// substituted back into the map before being returned.
pub fn torus_fixed_points(
    fiber_matrix: &IntMatrix,
    translation: &[BigRational],
) -> TorusFixedPointSet {
    assert!(fiber_matrix.is_square(), "fiber matrix must be square");
    let k = fiber_matrix.rows();
    assert_eq!(translation.len(), k, "translation length must match rank");

    let shear = fiber_matrix - &IntMatrix::identity(k);
    if shear.det().is_zero() {
        return TorusFixedPointSet {
            points: Vec::new(),
            degenerate: true,
        };
    }

    let snf = smith_normal_form(&shear);
    let diagonal = snf.diagonal();
    // b = -U c
    let b: Vec<BigRational> = (0..k)
        .map(|i| {
            -snf.u()
                .row(i)
                .iter()
                .zip(translation)
                .map(|(u, c)| BigRational::from(u.clone()) * c)
                .sum::<BigRational>()
        })
        .collect();

    let mut points = Vec::new();
    let mut residues = vec![BigInt::zero(); k];
    'enumerate: loop {
        let y: Vec<BigRational> = (0..k)
            .map(|i| {
                (&b[i] + BigRational::from(residues[i].clone()))
                    / BigRational::from(diagonal[i].clone())
            })
            .collect();
        let point: Vec<BigRational> = (0..k)
            .map(|i| {
                let x: BigRational = snf
                    .v()
                    .row(i)
                    .iter()
                    .zip(&y)
                    .map(|(v, yj)| BigRational::from(v.clone()) * yj)
                    .sum();
                &x - x.floor()
            })
            .collect();
        assert!(
            is_fixed_point(fiber_matrix, translation, &point),
            "enumerated point failed substitution"
        );
        points.push(point);

        let mut pos = 0;
        loop {
            residues[pos] += 1;
            if residues[pos] < diagonal[pos] {
                break;
            }
            residues[pos] = BigInt::zero();
            pos += 1;
            if pos == k {
                break 'enumerate;
            }
        }
    }
    points.sort();
    TorusFixedPointSet {
        points,
        degenerate: false,
    }
}

/// Direct substitution: `Xi x + c = x (mod Z^k)`.
fn is_fixed_point(
    fiber_matrix: &IntMatrix,
    translation: &[BigRational],
    x: &[BigRational],
) -> bool {
    (0..fiber_matrix.rows()).all(|i| {
        let image: BigRational = fiber_matrix
            .row(i)
            .iter()
            .zip(x)
            .map(|(a, xj)| BigRational::from(a.clone()) * xj)
            .sum::<BigRational>()
            + &translation[i];
        (image - &x[i]).is_integer()
    })
}

/// A label-merging witness together with the result of re-checking it by
/// direct twisted conjugation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MergeWitness {
    pub witness: ProductElement,
    pub verified: bool,
}

/// Searches for gamma = (u, v) carrying the label (1, v_from) to
/// (1, v_to), i.e. an integer solution of
/// `v_to - v_from = R nu(u) + (Xi - I) v`.
///
/// Absence means the two labels name distinct classes. When a witness is
/// found, its exponent vector is lifted to the canonical word
/// a1^{alpha_1} b1^{alpha_2} ... and the witness is re-verified by
/// evaluating the twisted conjugation it claims to realize.
pub fn verify_merge_witness(
    spec: &FiberedMapSpec,
    v_from: &FiberElement,
    v_to: &FiberElement,
) -> Option<MergeWitness> {
    assert_eq!(
        v_from.rank(),
        spec.fiber_rank(),
        "v_from rank must match spec"
    );
    assert_eq!(v_to.rank(), spec.fiber_rank(), "v_to rank must match spec");

    let k = spec.fiber_rank();
    let shear = spec.fiber_matrix() - &IntMatrix::identity(k);
    let block = spec.retraction().hstack(&shear);
    let delta: Vec<BigInt> = v_to
        .coords()
        .iter()
        .zip(v_from.coords())
        .map(|(t, f)| t - f)
        .collect();

    let solution = solve_diophantine(&block, &delta)?;
    let base_exponents = &solution.particular[..2 * spec.genus()];
    let fiber = solution.particular[2 * spec.genus()..].to_vec();
    let witness = ProductElement::new(
        SurfaceWord::from_exponents(spec.genus(), base_exponents),
        FiberElement::new(fiber),
    );

    let from = ProductElement::fiber_only(spec.genus(), v_from.clone());
    let to = ProductElement::fiber_only(spec.genus(), v_to.clone());
    let verified = twisted_conjugate(spec, &from, &witness) == Ok(to);
    Some(MergeWitness { witness, verified })
}

/// Enumerates the fixed subgroup by sweeping every exponent vector in
/// `[-bound, bound]^{2g}` and solving `v = R alpha + Xi v` with a rational
/// Gauss-Jordan inverse; pairs are kept when the solution is integral and
/// each kept pair is re-checked by integer substitution.
///
/// Returns the (alpha, v) pairs in enumeration order. The sweep budget is
/// bound <= 12 and at most 10^7 lattice points.
pub fn brute_force_fixed_subgroup(
    spec: &FiberedMapSpec,
    bound: u32,
) -> Result<Vec<(Vec<BigInt>, Vec<BigInt>)>> {
    if !(1..=12).contains(&bound) {
        return Err(Error::BudgetExceeded(format!(
            "bound must be in 1..=12, got {bound}"
        )));
    }
    let n = 2 * spec.genus();
    let width = 2 * u128::from(bound) + 1;
    let total = (0..n).try_fold(1u128, |acc, _| acc.checked_mul(width));
    if total.is_none_or(|t| t > 10_000_000) {
        return Err(Error::BudgetExceeded(format!(
            "(2*{bound}+1)^{n} lattice points exceed the 10^7 sweep budget"
        )));
    }
    let lefschetz = spec.lefschetz_matrix();
    if lefschetz.det().is_zero() {
        return Err(Error::Degenerate);
    }
    let inverse = rational_inverse(&lefschetz).expect("nondegenerate matrix is invertible");

    let low = -(i64::from(bound));
    let high = i64::from(bound);
    let mut alpha = vec![low; n];
    let mut pairs = Vec::new();
    loop {
        let alpha_big: Vec<BigInt> = alpha.iter().map(|&a| BigInt::from(a)).collect();
        let rhs = spec.retraction().mul_vec(&alpha_big);
        let v_rational: Vec<BigRational> = inverse
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&rhs)
                    .map(|(m, r)| m * BigRational::from(r.clone()))
                    .sum()
            })
            .collect();
        if v_rational.iter().all(BigRational::is_integer) {
            let v: Vec<BigInt> = v_rational.into_iter().map(|q| q.to_integer()).collect();
            let image: Vec<BigInt> = spec
                .fiber_matrix()
                .mul_vec(&v)
                .iter()
                .zip(&rhs)
                .map(|(x, r)| x + r)
                .collect();
            assert_eq!(image, v, "fixed-subgroup candidate failed substitution");
            pairs.push((alpha_big, v));
        }

        let mut pos = n;
        loop {
            if pos == 0 {
                return Ok(pairs);
            }
            pos -= 1;
            if alpha[pos] < high {
                alpha[pos] += 1;
                break;
            }
            alpha[pos] = low;
        }
    }
}

/// Gauss-Jordan inverse over the rationals; `None` for singular input.
fn rational_inverse(a: &IntMatrix) -> Option<Vec<Vec<BigRational>>> {
    let n = a.rows();
    let mut aug: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            let mut row: Vec<BigRational> = a
                .row(i)
                .iter()
                .map(|e| BigRational::from(e.clone()))
                .collect();
            row.extend((0..n).map(|j| {
                if i == j {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
            }));
            row
        })
        .collect();

    for col in 0..n {
        let pivot_row = (col..n).find(|&i| !aug[i][col].is_zero())?;
        aug.swap(col, pivot_row);
        let pivot = aug[col][col].clone();
        for e in &mut aug[col] {
            *e /= &pivot;
        }
        for i in 0..n {
            if i == col || aug[i][col].is_zero() {
                continue;
            }
            let factor = aug[i][col].clone();
            let source = aug[col].clone();
            for (e, s) in aug[i].iter_mut().zip(&source) {
                *e -= &factor * s;
            }
        }
    }
    Some(aug.into_iter().map(|row| row[n..].to_vec()).collect())
}
