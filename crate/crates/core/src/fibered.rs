//! Descriptions of fiber-preserving self-maps of a product of a closed
//! orientable surface (genus >= 2) with a torus, over the identity base map.
//!
//! A map is determined at the fundamental-group level by the retraction
//! matrix R (images of the 2g surface generators in the fiber, read through
//! the abelianization) and the fiber matrix Xi (the endomorphism on Z^k).
//! The two built-in families `theorem1` and `theorem2` realize unbounded
//! fixed-point index on genus-2 products with circle and torus fibers.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// A fiber-preserving self-map over the identity base map.
#[derive(Clone, PartialEq, Eq)]
pub struct FiberedMapSpec {
    genus: usize,
    fiber_rank: usize,
    retraction: IntMatrix,
    fiber_matrix: IntMatrix,
    label: String,
}

impl FiberedMapSpec {
    /// Validates and builds a spec: genus >= 2 (the base surface must be
    /// hyperbolic so that nontrivial deck transformations act freely),
    /// square k x k fiber matrix with k >= 1, and a k x 2g retraction.
    pub fn new(
        genus: usize,
        retraction: IntMatrix,
        fiber_matrix: IntMatrix,
        label: impl Into<String>,
    ) -> Result<Self> {
        if genus < 2 {
            return Err(Error::InvalidParameter(format!(
                "genus >= 2 required, got {genus}"
            )));
        }
        if !fiber_matrix.is_square() {
            return Err(Error::InvalidParameter(format!(
                "fiber matrix must be square, got {}x{}",
                fiber_matrix.rows(),
                fiber_matrix.cols()
            )));
        }
        let fiber_rank = fiber_matrix.rows();
        if retraction.rows() != fiber_rank || retraction.cols() != 2 * genus {
            return Err(Error::InvalidParameter(format!(
                "retraction must be {}x{}, got {}x{}",
                fiber_rank,
                2 * genus,
                retraction.rows(),
                retraction.cols()
            )));
        }
        Ok(FiberedMapSpec {
            genus,
            fiber_rank,
            retraction,
            fiber_matrix,
            label: label.into(),
        })
    }

    /// The circle-fiber family on the genus-2 surface times S^1: the
    /// retraction kills every generator except a1, and the fiber map has
    /// degree m + 1. Requires m >= 1.
    pub fn theorem1_family(m: BigInt) -> Result<Self> {
        if m < BigInt::one() {
            return Err(Error::InvalidParameter(format!(
                "family parameter m >= 1 required, got {m}"
            )));
        }
        let label = format!("theorem1:m={m}");
        let retraction = IntMatrix::from_i64(1, 4, &[1, 0, 0, 0]);
        let fiber_matrix = IntMatrix::from_vec(1, 1, vec![&m + 1]);
        Self::new(2, retraction, fiber_matrix, label)
    }

    /// The torus-fiber family on the genus-2 surface times T^2: the
    /// retraction sends a1, b1 to the two fiber generators, and the fiber
    /// automorphism has matrix [[m+1, m], [1, 1]]. Requires m >= 1.
    pub fn theorem2_family(m: BigInt) -> Result<Self> {
        if m < BigInt::one() {
            return Err(Error::InvalidParameter(format!(
                "family parameter m >= 1 required, got {m}"
            )));
        }
        let label = format!("theorem2:m={m}");
        let retraction = IntMatrix::from_i64(2, 4, &[1, 0, 0, 0, 0, 1, 0, 0]);
        let fiber_matrix =
            IntMatrix::from_vec(2, 2, vec![&m + 1, m.clone(), BigInt::one(), BigInt::one()]);
        Self::new(2, retraction, fiber_matrix, label)
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn fiber_rank(&self) -> usize {
        self.fiber_rank
    }

    pub fn retraction(&self) -> &IntMatrix {
        &self.retraction
    }

    pub fn fiber_matrix(&self) -> &IntMatrix {
        &self.fiber_matrix
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// chi of the base surface: 2 - 2g.
    pub fn euler_characteristic(&self) -> BigInt {
        BigInt::from(2) - BigInt::from(2 * self.genus as i64)
    }

    /// I - Xi, the matrix whose determinant controls every fiber invariant.
    pub fn lefschetz_matrix(&self) -> IntMatrix {
        &IntMatrix::identity(self.fiber_rank) - &self.fiber_matrix
    }

    /// Exact diagnostics of the fiber endomorphism.
    pub fn diagnostics(&self) -> SpecDiagnostics {
        let fiber_det = self.fiber_matrix.det();
        let lefschetz_det = self.lefschetz_matrix().det();
        SpecDiagnostics {
            is_fiber_automorphism: fiber_det.abs().is_one(),
            degenerate: lefschetz_det.is_zero(),
            fiber_det,
            lefschetz_det,
        }
    }

    /// Parses the key-value spec file format. Keys: `genus`, `fiber_rank`,
    /// `retraction` (row-major integers), `fiber_matrix` (row-major
    /// integers), `label` (optional). Lines starting with `#` are comments.
    pub fn parse_spec_file(text: &str) -> Result<Self> {
        let mut fields: Vec<(usize, String, String)> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(Error::Parse(format!(
                    "line {line_no}: expected 'field = value', got '{line}'"
                )));
            };
            fields.push((line_no, key.trim().to_string(), value.trim().to_string()));
        }

        let lookup = |name: &str| fields.iter().find(|(_, key, _)| key == name);
        for (line_no, key, _) in &fields {
            if !["genus", "fiber_rank", "retraction", "fiber_matrix", "label"]
                .contains(&key.as_str())
            {
                return Err(Error::Parse(format!(
                    "line {line_no}: field '{key}': unknown field"
                )));
            }
        }

        let required = |name: &str| {
            lookup(name).ok_or_else(|| Error::Parse(format!("field '{name}': missing")))
        };

        let (line_no, _, value) = required("genus")?;
        let genus: usize = value.parse().map_err(|_| {
            Error::Parse(format!(
                "line {line_no}: field 'genus': expected a positive integer"
            ))
        })?;
        if genus < 2 {
            return Err(Error::Parse(format!(
                "line {line_no}: field 'genus': genus >= 2 required"
            )));
        }

        let (line_no, _, value) = required("fiber_rank")?;
        let fiber_rank: usize = value.parse().map_err(|_| {
            Error::Parse(format!(
                "line {line_no}: field 'fiber_rank': expected a positive integer"
            ))
        })?;
        if fiber_rank < 1 {
            return Err(Error::Parse(format!(
                "line {line_no}: field 'fiber_rank': fiber rank >= 1 required"
            )));
        }

        let parse_matrix = |name: &str, rows: usize, cols: usize| -> Result<IntMatrix> {
            let (line_no, _, value) = required(name)?;
            let mut entries = Vec::new();
            for tok in value.split(|c: char| c.is_whitespace() || c == ',') {
                if tok.is_empty() {
                    continue;
                }
                let e: BigInt = tok.parse().map_err(|_| {
                    Error::Parse(format!(
                        "line {line_no}: field '{name}': bad integer '{tok}'"
                    ))
                })?;
                entries.push(e);
            }
            if entries.len() != rows * cols {
                return Err(Error::Parse(format!(
                    "line {line_no}: field '{name}': expected {} integers ({rows}x{cols} row-major), found {}",
                    rows * cols,
                    entries.len()
                )));
            }
            Ok(IntMatrix::from_vec(rows, cols, entries))
        };

        let retraction = parse_matrix("retraction", fiber_rank, 2 * genus)?;
        let fiber_matrix = parse_matrix("fiber_matrix", fiber_rank, fiber_rank)?;
        let label = lookup("label")
            .map(|(_, _, v)| v.clone())
            .unwrap_or_default();

        Self::new(genus, retraction, fiber_matrix, label).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl fmt::Display for FiberedMapSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.label.is_empty() {
            write!(
                f,
                "genus {} / fiber rank {} map",
                self.genus, self.fiber_rank
            )
        } else {
            write!(f, "{}", self.label)
        }
    }
}

impl fmt::Debug for FiberedMapSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FiberedMapSpec(genus {}, rank {}, R = {}, Xi = {})",
            self.genus, self.fiber_rank, self.retraction, self.fiber_matrix
        )
    }
}

/// Exact diagnostics of a spec's fiber endomorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecDiagnostics {
    /// det(Xi).
    pub fiber_det: BigInt,
    /// |det(Xi)| = 1, i.e. the fiber map is invertible over Z.
    pub is_fiber_automorphism: bool,
    /// det(I - Xi).
    pub lefschetz_det: BigInt,
    /// det(I - Xi) = 0; Nielsen-type invariants are refused downstream.
    pub degenerate: bool,
}

/// The two built-in map families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Theorem1,
    Theorem2,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Theorem1 => "theorem1",
            Family::Theorem2 => "theorem2",
        }
    }

    pub fn spec(&self, m: BigInt) -> Result<FiberedMapSpec> {
        match self {
            Family::Theorem1 => FiberedMapSpec::theorem1_family(m),
            Family::Theorem2 => FiberedMapSpec::theorem2_family(m),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "theorem1" => Ok(Family::Theorem1),
            "theorem2" => Ok(Family::Theorem2),
            other => Err(Error::Parse(format!(
                "unknown family '{other}' (expected theorem1 or theorem2)"
            ))),
        }
    }
}

/// Parses an inline family reference: `theorem1` / `theorem2`, optionally
/// with a parameter as `theorem2:m=<int>`.
pub fn parse_family_reference(text: &str) -> Result<(Family, Option<BigInt>)> {
    match text.split_once(':') {
        None => Ok((text.parse()?, None)),
        Some((name, param)) => {
            let family = name.parse()?;
            let Some(value) = param.strip_prefix("m=") else {
                return Err(Error::Parse(format!(
                    "bad family parameter '{param}' (expected m=<int>)"
                )));
            };
            let m: BigInt = value
                .parse()
                .map_err(|_| Error::Parse(format!("bad integer '{value}' in family parameter")))?;
            Ok((family, Some(m)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theorem1_family_matrices() {
        let spec = FiberedMapSpec::theorem1_family(BigInt::one()).unwrap();
        assert_eq!(spec.genus(), 2);
        assert_eq!(spec.fiber_rank(), 1);
        assert_eq!(spec.retraction(), &IntMatrix::from_i64(1, 4, &[1, 0, 0, 0]));
        assert_eq!(spec.fiber_matrix(), &IntMatrix::from_i64(1, 1, &[2]));

        let spec = FiberedMapSpec::theorem1_family(BigInt::from(5)).unwrap();
        assert_eq!(spec.fiber_matrix(), &IntMatrix::from_i64(1, 1, &[6]));
    }

    #[test]
    fn theorem2_family_matrices() {
        let spec = FiberedMapSpec::theorem2_family(BigInt::one()).unwrap();
        assert_eq!(
            spec.fiber_matrix(),
            &IntMatrix::from_i64(2, 2, &[2, 1, 1, 1])
        );
        assert_eq!(spec.fiber_matrix().det(), BigInt::one());

        let spec = FiberedMapSpec::theorem2_family(BigInt::from(3)).unwrap();
        assert_eq!(
            spec.fiber_matrix(),
            &IntMatrix::from_i64(2, 2, &[4, 3, 1, 1])
        );
        assert_eq!(spec.fiber_matrix().det(), BigInt::one());
    }

    #[test]
    fn families_reject_m_below_one() {
        assert!(FiberedMapSpec::theorem1_family(BigInt::zero()).is_err());
        assert!(FiberedMapSpec::theorem2_family(BigInt::from(-3)).is_err());
    }

    #[test]
    fn family_generators_are_deterministic() {
        let a = FiberedMapSpec::theorem2_family(BigInt::from(17)).unwrap();
        let b = FiberedMapSpec::theorem2_family(BigInt::from(17)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn diagnostics_circle_family() {
        let spec = FiberedMapSpec::theorem1_family(BigInt::from(2)).unwrap();
        let diag = spec.diagnostics();
        assert_eq!(diag.fiber_det, BigInt::from(3));
        assert!(!diag.is_fiber_automorphism);
        assert_eq!(diag.lefschetz_det, BigInt::from(-2));
        assert!(!diag.degenerate);
    }

    #[test]
    fn diagnostics_torus_family() {
        let spec = FiberedMapSpec::theorem2_family(BigInt::from(4)).unwrap();
        let diag = spec.diagnostics();
        assert_eq!(diag.fiber_det, BigInt::one());
        assert!(diag.is_fiber_automorphism);
        assert_eq!(diag.lefschetz_det, BigInt::from(-4));
        assert!(!diag.degenerate);
    }

    #[test]
    fn diagnostics_flag_identity_as_degenerate() {
        let spec = FiberedMapSpec::new(
            2,
            IntMatrix::zero(2, 4),
            IntMatrix::identity(2),
            "identity fiber",
        )
        .unwrap();
        assert!(spec.diagnostics().degenerate);
    }

    #[test]
    fn family_determinants_across_range() {
        for m in 1i64..=100 {
            let d1 = FiberedMapSpec::theorem1_family(BigInt::from(m))
                .unwrap()
                .diagnostics();
            assert_eq!(d1.lefschetz_det, BigInt::from(-m));
            let d2 = FiberedMapSpec::theorem2_family(BigInt::from(m))
                .unwrap()
                .diagnostics();
            assert_eq!(d2.lefschetz_det, BigInt::from(-m));
            assert_eq!(d2.fiber_det, BigInt::one());
        }
    }

    #[test]
    fn spec_file_roundtrip() {
        let text = "# a torus-fiber map\n\
                    genus = 2\n\
                    fiber_rank = 2\n\
                    retraction = 1 0 0 0  0 1 0 0\n\
                    fiber_matrix = 3, 2, 1, 1\n\
                    label = sample\n";
        let spec = FiberedMapSpec::parse_spec_file(text).unwrap();
        assert_eq!(spec.genus(), 2);
        assert_eq!(spec.fiber_rank(), 2);
        assert_eq!(
            spec.fiber_matrix(),
            &IntMatrix::from_i64(2, 2, &[3, 2, 1, 1])
        );
        assert_eq!(spec.label(), "sample");
    }

    #[test]
    fn spec_file_errors_name_field_and_line() {
        let err = FiberedMapSpec::parse_spec_file(
            "genus = 1\nfiber_rank = 1\nretraction = 0 0\nfiber_matrix = 2\n",
        )
        .unwrap_err();
        assert!(err.to_string().contains("genus >= 2"), "got: {err}");
        assert!(err.to_string().contains("line 1"), "got: {err}");

        let err = FiberedMapSpec::parse_spec_file(
            "genus = 2\nfiber_rank = 1\nretraction = 1 0 0\nfiber_matrix = 2\n",
        )
        .unwrap_err();
        assert!(err.to_string().contains("retraction"), "got: {err}");
        assert!(err.to_string().contains("line 3"), "got: {err}");

        let err = FiberedMapSpec::parse_spec_file("genus = 2\n").unwrap_err();
        assert!(err.to_string().contains("fiber_rank"), "got: {err}");
    }

    #[test]
    fn family_reference_parsing() {
        let (family, m) = parse_family_reference("theorem2:m=12").unwrap();
        assert_eq!(family, Family::Theorem2);
        assert_eq!(m, Some(BigInt::from(12)));

        let (family, m) = parse_family_reference("theorem1").unwrap();
        assert_eq!(family, Family::Theorem1);
        assert_eq!(m, None);

        assert!(parse_family_reference("theorem3").is_err());
        assert!(parse_family_reference("theorem1:k=2").is_err());
        assert!(parse_family_reference("theorem1:m=x").is_err());
    }
}
