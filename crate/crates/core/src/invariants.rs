//! Fixed-point invariants of fibered maps: Lefschetz numbers, fiber Nielsen
//! numbers, the class structure of liftings, fixed subgroups, and the index
//! of the unique nonempty fixed point class.
//!
//! All nonempty-class labels live in the trivial-base-word sector: a label
//! whose base word is nontrivial names an empty class, because nontrivial
//! deck transformations of a hyperbolic surface act freely. Reports carry
//! that fact as a single note instead of enumerating the (infinitely many)
//! empty classes.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::fibered::{Family, FiberedMapSpec};
use crate::matrix::{cokernel, preimage_lattice_index, CokernelInvariants, GroupOrder, IntMatrix};
use crate::words::generator_name;

/// Lefschetz number of the restriction to one fiber: det(I - Xi).
pub fn fiber_lefschetz(fiber_matrix: &IntMatrix) -> BigInt {
    assert!(fiber_matrix.is_square(), "fiber matrix must be square");
    (&IntMatrix::identity(fiber_matrix.rows()) - fiber_matrix).det()
}

/// Nielsen number of the restriction to one fiber: |det(I - Xi)|.
///
/// Torus maps have all essential classes of index +-1, so the Nielsen number
/// equals the absolute Lefschetz number. Degenerate maps (det(I - Xi) = 0)
/// are refused.
pub fn fiber_nielsen(fiber_matrix: &IntMatrix) -> Result<BigInt> {
    let l = fiber_lefschetz(fiber_matrix);
    if l.is_zero() {
        return Err(Error::Degenerate);
    }
    Ok(l.abs())
}

/// Total Lefschetz number: chi(base) * det(I - Xi).
///
/// Valid because the base map is the identity, whose Lefschetz number is the
/// Euler characteristic.
pub fn total_lefschetz(spec: &FiberedMapSpec) -> BigInt {
    spec.euler_characteristic() * spec.lefschetz_matrix().det()
}

/// The class structure of labels in the trivial-base sector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReidemeisterStructure {
    /// Label group modulo merging: Z^k / (R Z^{2g} + (Xi - I) Z^k).
    pub cokernel: CokernelInvariants,
    /// Number of nonempty fixed point classes (order of the cokernel).
    pub class_count: GroupOrder,
}

/// Computes the merged label classes: labels (1, v') and (1, v'') name the
/// same class iff v'' - v' lies in R Z^{2g} + (Xi - I) Z^k, so the class set
/// is the cokernel of the block matrix [R | Xi - I].
pub fn reidemeister_structure(spec: &FiberedMapSpec) -> ReidemeisterStructure {
    let shear = spec.fiber_matrix() - &IntMatrix::identity(spec.fiber_rank());
    let block = spec.retraction().hstack(&shear);
    let cokernel = cokernel(&block);
    ReidemeisterStructure {
        class_count: cokernel.order(),
        cokernel,
    }
}

/// A homogeneous congruence `coefficients . alpha = 0 (mod modulus)` on
/// exponent vectors, with modulus >= 2, coefficients centered mod the
/// modulus and the leading nonzero coefficient positive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Congruence {
    pub coefficients: Vec<BigInt>,
    pub modulus: BigInt,
}

impl Congruence {
    pub fn holds(&self, alpha: &[BigInt]) -> bool {
        assert_eq!(alpha.len(), self.coefficients.len());
        let dot: BigInt = self
            .coefficients
            .iter()
            .zip(alpha)
            .map(|(c, a)| c * a)
            .sum();
        dot.is_multiple_of(&self.modulus)
    }
}

impl fmt::Display for Congruence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} = 0 (mod {})",
            format_exponent_combination(&self.coefficients),
            self.modulus
        )
    }
}

/// The exact rational linear map `alpha -> numerator . alpha / denominator`
/// giving the fiber coordinate forced by a base exponent vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberFormula {
    pub numerator: IntMatrix,
    pub denominator: BigInt,
}

impl FiberFormula {
    pub fn apply(&self, alpha: &[BigInt]) -> Vec<BigRational> {
        self.numerator
            .mul_vec(alpha)
            .into_iter()
            .map(|n| BigRational::new(n, self.denominator.clone()))
            .collect()
    }

    /// The fiber coordinate when it is integral, `None` otherwise.
    pub fn apply_integral(&self, alpha: &[BigInt]) -> Option<Vec<BigInt>> {
        self.numerator
            .mul_vec(alpha)
            .into_iter()
            .map(|n| {
                let (q, r) = n.div_rem(&self.denominator);
                r.is_zero().then_some(q)
            })
            .collect()
    }
}

impl fmt::Display for FiberFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.numerator.rows() {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<BigInt> = self.numerator.row(i).to_vec();
            let mut g = self.denominator.clone();
            for c in &row {
                g = g.gcd(c);
            }
            let den = &self.denominator / &g;
            let reduced: Vec<BigInt> = row.iter().map(|c| c / &g).collect();
            let combination = format_exponent_combination(&reduced);
            if den.is_one() {
                write!(f, "v{} = {}", i + 1, combination)?;
            } else {
                write!(f, "v{} = ({}) / {}", i + 1, combination, den)?;
            }
        }
        Ok(())
    }
}

fn format_exponent_combination(coefficients: &[BigInt]) -> String {
    let mut out = String::new();
    for (idx, c) in coefficients.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let magnitude = c.abs();
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else if c.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        if !magnitude.is_one() {
            out.push_str(&format!("{magnitude}*"));
        }
        out.push_str(&format!("nu({})", generator_name(idx)));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// The fixed subgroup of the induced endomorphism, described by the lattice
/// of base exponent vectors admitting a fixed fiber coordinate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedSubgroupReport {
    /// Congruences cutting out the lattice (empty means the full lattice).
    pub conditions: Vec<Congruence>,
    /// Index of the lattice in Z^{2g}: how many exponent classes fail to
    /// admit a fixed fiber coordinate.
    pub lattice_index: GroupOrder,
    /// Fiber coordinate forced by an exponent vector in the lattice.
    pub fiber_formula: FiberFormula,
}

impl FixedSubgroupReport {
    /// Membership test for the lattice.
    pub fn contains(&self, alpha: &[BigInt]) -> bool {
        self.conditions.iter().all(|c| c.holds(alpha))
    }
}

/// Solves `v = R alpha + Xi v` exactly: the fiber coordinate is
/// `(I - Xi)^{-1} R alpha`, computed with the adjugate so everything stays
/// in integers over a single denominator. Degenerate maps are refused.
pub fn fixed_subgroup(spec: &FiberedMapSpec) -> Result<FixedSubgroupReport> {
    let lefschetz = spec.lefschetz_matrix();
    let det = lefschetz.det();
    if det.is_zero() {
        return Err(Error::Degenerate);
    }

    let mut numerator = &lefschetz.adjugate() * spec.retraction();
    let mut denominator = det;
    if denominator.is_negative() {
        numerator = -&numerator;
        denominator = -denominator;
    }
    let mut g = denominator.clone();
    for i in 0..numerator.rows() {
        for c in numerator.row(i) {
            g = g.gcd(c);
        }
    }
    if !g.is_one() {
        numerator = divide_exact(&numerator, &g);
        denominator = &denominator / &g;
    }

    let mut conditions: Vec<Congruence> = Vec::new();
    for i in 0..numerator.rows() {
        if let Some(c) = canonical_congruence(numerator.row(i), &denominator) {
            if !conditions.contains(&c) {
                conditions.push(c);
            }
        }
    }

    Ok(FixedSubgroupReport {
        conditions,
        lattice_index: preimage_lattice_index(spec.retraction(), &lefschetz),
        fiber_formula: FiberFormula {
            numerator,
            denominator,
        },
    })
}

fn divide_exact(m: &IntMatrix, g: &BigInt) -> IntMatrix {
    let mut entries = Vec::with_capacity(m.rows() * m.cols());
    for i in 0..m.rows() {
        for c in m.row(i) {
            entries.push(c / g);
        }
    }
    IntMatrix::from_vec(m.rows(), m.cols(), entries)
}

/// Canonical form of `coeffs . alpha = 0 (mod modulus)`: common factors
/// divided out, coefficients centered in (-m/2, m/2], leading nonzero
/// coefficient positive. `None` when the congruence holds identically.
fn canonical_congruence(coeffs: &[BigInt], modulus: &BigInt) -> Option<Congruence> {
    let mut m = modulus.abs();
    if m.is_one() {
        return None;
    }
    let mut c: Vec<BigInt> = coeffs.to_vec();
    loop {
        for x in &mut c {
            let mut r = x.mod_floor(&m);
            if &r + &r > m {
                r -= &m;
            }
            *x = r;
        }
        let mut g = m.clone();
        for x in &c {
            g = g.gcd(x);
        }
        if g.is_one() {
            break;
        }
        for x in &mut c {
            *x = &*x / &g;
        }
        m = &m / &g;
        if m.is_one() {
            return None;
        }
    }
    if c.iter().all(|x| x.is_zero()) {
        return None;
    }
    if c.iter().find(|x| !x.is_zero()).unwrap().is_negative() {
        for x in &mut c {
            *x = -&*x;
        }
    }
    Some(Congruence {
        coefficients: c,
        modulus: m,
    })
}

/// Absolute index of the unique nonempty fixed point class, computed by the
/// product route: (index of the fixed-subgroup lattice) * |chi(base)|.
///
/// Refused when the map is degenerate or has more than one nonempty class.
pub fn class_index(spec: &FiberedMapSpec) -> Result<BigInt> {
    let lefschetz = spec.lefschetz_matrix();
    if lefschetz.det().is_zero() {
        return Err(Error::Degenerate);
    }
    let structure = reidemeister_structure(spec);
    if !structure.class_count.is_one() {
        return Err(Error::MultipleClasses(structure.class_count.to_string()));
    }
    match preimage_lattice_index(spec.retraction(), &lefschetz) {
        GroupOrder::Finite(index) => Ok(index * spec.euler_characteristic().abs()),
        // The image of Z^{2g} in the finite group Z^k/(I - Xi)Z^k is finite.
        GroupOrder::Infinite => unreachable!("nondegenerate map with infinite lattice index"),
    }
}

/// Genus of the fixed surface of the circle-fiber family member with
/// parameter m: the fixed set is an m-sheeted cover of the genus-2 base, so
/// chi = -2m and the genus is 1 - chi/2 = m + 1.
pub fn fixed_surface_genus(m: &BigInt) -> Result<BigInt> {
    if m < &BigInt::one() {
        return Err(Error::InvalidParameter(format!(
            "family parameter m >= 1 required, got {m}"
        )));
    }
    let chi = m * BigInt::from(-2);
    Ok(BigInt::one() - chi / BigInt::from(2))
}

/// Everything the analyzer reports for one nondegenerate map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantReport {
    pub fiber_lefschetz: BigInt,
    pub fiber_nielsen: BigInt,
    pub euler_characteristic: BigInt,
    pub total_lefschetz: BigInt,
    pub class_count: GroupOrder,
    /// |index| of the unique nonempty class; absent when there are several.
    pub class_index_abs: Option<BigInt>,
    /// Labels with nontrivial base word always name empty classes here.
    pub empty_classes_exist: bool,
}

/// Computes the full invariant report. Degenerate maps are refused.
pub fn analyze(spec: &FiberedMapSpec) -> Result<InvariantReport> {
    let diagnostics = spec.diagnostics();
    if diagnostics.degenerate {
        return Err(Error::Degenerate);
    }
    let fiber_lefschetz = diagnostics.lefschetz_det.clone();
    let euler_characteristic = spec.euler_characteristic();
    let total_lefschetz = &euler_characteristic * &fiber_lefschetz;
    let structure = reidemeister_structure(spec);
    let class_index_abs = if structure.class_count.is_one() {
        Some(class_index(spec)?)
    } else {
        None
    };
    Ok(InvariantReport {
        fiber_nielsen: fiber_lefschetz.abs(),
        fiber_lefschetz,
        euler_characteristic,
        total_lefschetz,
        class_count: structure.class_count,
        class_index_abs,
        empty_classes_exist: true,
    })
}

/// One row of an unbounded-index certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertificateRow {
    pub m: BigInt,
    pub total_lefschetz: BigInt,
    pub class_count: GroupOrder,
    pub class_index_abs: BigInt,
}

impl CertificateRow {
    /// A row certifies its parameter iff the map has a single nonempty
    /// class whose absolute index is 2m and accounts for the whole
    /// Lefschetz number.
    pub fn is_valid(&self) -> bool {
        let expected = &self.m * 2;
        self.class_count.is_one()
            && self.class_index_abs == expected
            && self.total_lefschetz == expected
    }
}

/// A table certifying that class indices in a family grow without bound:
/// valid iff every row is valid, making the growth 2m explicit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipCertificate {
    pub family: Family,
    pub rows: Vec<CertificateRow>,
}

impl BipCertificate {
    pub fn is_valid(&self) -> bool {
        !self.rows.is_empty() && self.rows.iter().all(CertificateRow::is_valid)
    }
}

/// Certificate rows for m = lo..=hi. Requires 1 <= lo <= hi.
pub fn bip_certificate_range(family: Family, lo: &BigInt, hi: &BigInt) -> Result<BipCertificate> {
    if lo < &BigInt::one() {
        return Err(Error::InvalidParameter(format!(
            "certificate range must start at m >= 1, got {lo}"
        )));
    }
    if hi < lo {
        return Err(Error::InvalidParameter(format!(
            "empty certificate range {lo}..{hi} rejected"
        )));
    }
    let mut rows = Vec::new();
    let mut m = lo.clone();
    while &m <= hi {
        let spec = family.spec(m.clone())?;
        let structure = reidemeister_structure(&spec);
        rows.push(CertificateRow {
            total_lefschetz: total_lefschetz(&spec),
            class_count: structure.class_count,
            class_index_abs: class_index(&spec)?,
            m: m.clone(),
        });
        m += 1;
    }
    Ok(BipCertificate { family, rows })
}

/// Certificate rows for m = 1..=m_max.
pub fn bip_certificate(family: Family, m_max: &BigInt) -> Result<BipCertificate> {
    bip_certificate_range(family, &BigInt::one(), m_max)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn theorem1(m: i64) -> FiberedMapSpec {
        FiberedMapSpec::theorem1_family(BigInt::from(m)).unwrap()
    }

    fn theorem2(m: i64) -> FiberedMapSpec {
        FiberedMapSpec::theorem2_family(BigInt::from(m)).unwrap()
    }

    #[test]
    fn fiber_lefschetz_examples() {
        assert_eq!(
            fiber_lefschetz(theorem2(3).fiber_matrix()),
            BigInt::from(-3)
        );
        assert_eq!(
            fiber_lefschetz(theorem1(7).fiber_matrix()),
            BigInt::from(-7)
        );
        assert_eq!(fiber_lefschetz(&IntMatrix::zero(2, 2)), BigInt::one());
    }

    #[test]
    fn fiber_nielsen_examples() {
        assert_eq!(
            fiber_nielsen(theorem2(4).fiber_matrix()).unwrap(),
            BigInt::from(4)
        );
        let doubled = IntMatrix::from_i64(2, 2, &[2, 0, 0, 2]);
        assert_eq!(fiber_nielsen(&doubled).unwrap(), BigInt::one());
        assert_eq!(
            fiber_nielsen(&IntMatrix::identity(2)),
            Err(Error::Degenerate)
        );
    }

    #[test]
    fn total_lefschetz_examples() {
        assert_eq!(total_lefschetz(&theorem2(1)), BigInt::from(2));
        assert_eq!(total_lefschetz(&theorem1(9)), BigInt::from(18));
        // genus 3, constant fiber map: chi = -4, det(I - 0) = 1.
        let spec = FiberedMapSpec::new(
            3,
            IntMatrix::zero(1, 6),
            IntMatrix::zero(1, 1),
            "genus3 constant",
        )
        .unwrap();
        assert_eq!(total_lefschetz(&spec), BigInt::from(-4));
    }

    #[test]
    fn reidemeister_unique_class_for_families() {
        for m in 1..=10 {
            let s1 = reidemeister_structure(&theorem1(m));
            assert!(s1.cokernel.is_trivial(), "m = {m}");
            assert!(s1.class_count.is_one(), "m = {m}");
            let s2 = reidemeister_structure(&theorem2(m));
            assert!(s2.class_count.is_one(), "m = {m}");
        }
    }

    #[test]
    fn reidemeister_splits_classes_without_retraction() {
        // R = 0 and a degree-3 circle map: label group Z/2, two classes;
        // the torus oracle module cross-checks the same count by
        // enumerating actual fixed points.
        let spec = FiberedMapSpec::new(
            2,
            IntMatrix::zero(1, 4),
            IntMatrix::from_i64(1, 1, &[3]),
            "no retraction",
        )
        .unwrap();
        let s = reidemeister_structure(&spec);
        assert_eq!(s.class_count, GroupOrder::finite(2));
        assert_eq!(s.cokernel.torsion_orders(), &[BigInt::from(2)]);
    }

    #[test]
    fn fixed_subgroup_torus_family() {
        let report = fixed_subgroup(&theorem2(2)).unwrap();
        assert_eq!(report.lattice_index, GroupOrder::finite(2));
        assert_eq!(report.conditions.len(), 1);
        let cond = &report.conditions[0];
        assert_eq!(
            cond.coefficients,
            vec![
                BigInt::one(),
                BigInt::zero(),
                BigInt::zero(),
                BigInt::zero()
            ]
        );
        assert_eq!(cond.modulus, BigInt::from(2));
        // v(alpha) = (-alpha_2, alpha_2 - alpha_1/2)
        assert_eq!(
            report.fiber_formula.numerator,
            IntMatrix::from_i64(2, 4, &[0, -2, 0, 0, -1, 2, 0, 0])
        );
        assert_eq!(report.fiber_formula.denominator, BigInt::from(2));
        let alpha: Vec<BigInt> = [4, 3, 7, -5].iter().map(|&a| BigInt::from(a)).collect();
        assert!(report.contains(&alpha));
        assert_eq!(
            report.fiber_formula.apply_integral(&alpha).unwrap(),
            vec![BigInt::from(-3), BigInt::from(1)]
        );
        let alpha_odd: Vec<BigInt> = [3, 0, 0, 0].iter().map(|&a| BigInt::from(a)).collect();
        assert!(!report.contains(&alpha_odd));
        assert!(report.fiber_formula.apply_integral(&alpha_odd).is_none());
    }

    #[test]
    fn fixed_subgroup_full_lattice_at_m_one() {
        let report = fixed_subgroup(&theorem2(1)).unwrap();
        assert_eq!(report.lattice_index, GroupOrder::finite(1));
        assert!(report.conditions.is_empty());
    }

    #[test]
    fn fixed_subgroup_circle_family() {
        let report = fixed_subgroup(&theorem1(6)).unwrap();
        assert_eq!(report.lattice_index, GroupOrder::finite(6));
        assert_eq!(report.conditions.len(), 1);
        assert_eq!(report.conditions[0].modulus, BigInt::from(6));
    }

    #[test]
    fn fixed_subgroup_rejects_degenerate() {
        let spec = FiberedMapSpec::new(
            2,
            IntMatrix::zero(2, 4),
            IntMatrix::identity(2),
            "identity fiber",
        )
        .unwrap();
        assert_eq!(fixed_subgroup(&spec), Err(Error::Degenerate));
    }

    #[test]
    fn class_index_examples() {
        assert_eq!(class_index(&theorem2(5)).unwrap(), BigInt::from(10));
        assert_eq!(class_index(&theorem1(1)).unwrap(), BigInt::from(2));
        assert_eq!(class_index(&theorem2(1)).unwrap(), BigInt::from(2));
    }

    #[test]
    fn class_index_refuses_multiple_classes() {
        let spec = FiberedMapSpec::new(
            2,
            IntMatrix::zero(1, 4),
            IntMatrix::from_i64(1, 1, &[3]),
            "two classes",
        )
        .unwrap();
        assert_eq!(class_index(&spec), Err(Error::MultipleClasses("2".into())));
    }

    #[test]
    fn analyze_reports_are_internally_consistent() {
        for m in [1i64, 2, 13] {
            for spec in [theorem1(m), theorem2(m)] {
                let report = analyze(&spec).unwrap();
                assert_eq!(report.fiber_nielsen, report.fiber_lefschetz.abs());
                assert_eq!(
                    report.total_lefschetz,
                    &report.euler_characteristic * &report.fiber_lefschetz
                );
                assert!(report.class_count.is_one());
                assert_eq!(
                    report.class_index_abs.as_ref().unwrap(),
                    &report.total_lefschetz.abs()
                );
                assert!(report.empty_classes_exist);
            }
        }
    }

    #[test]
    fn fixed_surface_genus_examples() {
        assert_eq!(
            fixed_surface_genus(&BigInt::one()).unwrap(),
            BigInt::from(2)
        );
        assert_eq!(
            fixed_surface_genus(&BigInt::from(4)).unwrap(),
            BigInt::from(5)
        );
        assert!(fixed_surface_genus(&BigInt::zero()).is_err());
        for m in 1i64..=50 {
            let genus = fixed_surface_genus(&BigInt::from(m)).unwrap();
            assert_eq!(genus, BigInt::from(m + 1));
            // chi consistency: 2 - 2*genus = -2m
            assert_eq!(
                BigInt::from(2) - BigInt::from(2) * genus,
                BigInt::from(-2 * m)
            );
        }
    }

    #[test]
    fn certificate_small_tables() {
        let cert = bip_certificate(Family::Theorem2, &BigInt::from(3)).unwrap();
        assert!(cert.is_valid());
        let snapshot: Vec<(i64, i64, bool, i64)> = cert
            .rows
            .iter()
            .map(|r| {
                (
                    i64::try_from(&r.m).unwrap(),
                    i64::try_from(&r.total_lefschetz).unwrap(),
                    r.class_count.is_one(),
                    i64::try_from(&r.class_index_abs).unwrap(),
                )
            })
            .collect();
        assert_eq!(
            snapshot,
            vec![(1, 2, true, 2), (2, 4, true, 4), (3, 6, true, 6)]
        );

        let cert = bip_certificate(Family::Theorem1, &BigInt::one()).unwrap();
        assert!(cert.is_valid());
        assert_eq!(cert.rows.len(), 1);
        assert_eq!(cert.rows[0].class_index_abs, BigInt::from(2));

        assert!(bip_certificate(Family::Theorem1, &BigInt::zero()).is_err());
        assert!(bip_certificate(Family::Theorem2, &BigInt::zero()).is_err());
    }

    #[test]
    fn certificate_validation_detects_tampering() {
        let cert = bip_certificate(Family::Theorem2, &BigInt::from(5)).unwrap();
        for (i, row) in cert.rows.iter().enumerate() {
            for delta in [1i64, -1] {
                let mut tampered = row.clone();
                tampered.m += delta;
                assert!(!tampered.is_valid(), "row {i}: m tamper undetected");

                let mut tampered = row.clone();
                tampered.total_lefschetz += delta;
                assert!(!tampered.is_valid(), "row {i}: L tamper undetected");

                let mut tampered = row.clone();
                tampered.class_index_abs += delta;
                assert!(!tampered.is_valid(), "row {i}: index tamper undetected");
            }
            let mut tampered = row.clone();
            tampered.class_count = GroupOrder::finite(2);
            assert!(!tampered.is_valid(), "row {i}: count tamper undetected");
        }
    }

    #[test]
    fn congruence_canonicalization() {
        // 2x = 0 (mod 4) reduces to x = 0 (mod 2)
        let c = canonical_congruence(&[BigInt::from(2), BigInt::zero()], &BigInt::from(4)).unwrap();
        assert_eq!(c.coefficients, vec![BigInt::one(), BigInt::zero()]);
        assert_eq!(c.modulus, BigInt::from(2));
        // -x + 3y = 0 (mod 3) centers and flips sign to x = 0 (mod 3)
        let c =
            canonical_congruence(&[BigInt::from(-1), BigInt::from(3)], &BigInt::from(3)).unwrap();
        assert_eq!(c.coefficients, vec![BigInt::one(), BigInt::zero()]);
        assert_eq!(c.modulus, BigInt::from(3));
        // trivial congruences vanish
        assert!(canonical_congruence(&[BigInt::from(5)], &BigInt::one()).is_none());
        assert!(canonical_congruence(&[BigInt::from(6)], &BigInt::from(3)).is_none());
    }

    #[test]
    fn report_rendering() {
        let report = fixed_subgroup(&theorem2(2)).unwrap();
        assert_eq!(report.conditions[0].to_string(), "nu(a1) = 0 (mod 2)");
        assert_eq!(
            report.fiber_formula.to_string(),
            "v1 = -nu(b1); v2 = (-nu(a1) + 2*nu(b1)) / 2"
        );
    }
}
