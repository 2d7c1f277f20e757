//! Python bindings for the fpclass library.
//!
//! Exposes the map-spec type with its invariant reports plus the standalone
//! oracles. Integers cross the boundary as arbitrary-precision Python ints;
//! rational torus fixed points are returned as (numerator, denominator)
//! tuples; "infinite" group orders come back as None.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use fpclass::{Family, FiberElement, FiberedMapSpec, GroupOrder, IntMatrix};

fn value_error(e: fpclass::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn rows_to_matrix(rows: &[Vec<BigInt>], what: &str) -> PyResult<IntMatrix> {
    if rows.is_empty() || rows[0].is_empty() {
        return Err(PyValueError::new_err(format!(
            "{what}: matrix must be nonempty"
        )));
    }
    let cols = rows[0].len();
    if rows.iter().any(|r| r.len() != cols) {
        return Err(PyValueError::new_err(format!("{what}: ragged rows")));
    }
    let entries: Vec<BigInt> = rows.iter().flatten().cloned().collect();
    Ok(IntMatrix::from_vec(rows.len(), cols, entries))
}

fn matrix_to_rows(m: &IntMatrix) -> Vec<Vec<BigInt>> {
    (0..m.rows()).map(|i| m.row(i).to_vec()).collect()
}

fn order_to_option(order: &GroupOrder) -> Option<BigInt> {
    order.as_finite().cloned()
}

fn rational_to_pair(q: &BigRational) -> (BigInt, BigInt) {
    (q.numer().clone(), q.denom().clone())
}

/// A fiber-preserving self-map of (genus-g surface) x (k-torus) over the
/// identity base map, described by its retraction and fiber matrices.
#[pyclass(name = "FiberedMapSpec", frozen)]
struct PySpec {
    inner: FiberedMapSpec,
}

#[pymethods]
impl PySpec {
    #[new]
    #[pyo3(signature = (genus, retraction, fiber_matrix, label = String::new()))]
    fn new(
        genus: usize,
        retraction: Vec<Vec<BigInt>>,
        fiber_matrix: Vec<Vec<BigInt>>,
        label: String,
    ) -> PyResult<Self> {
        let retraction = rows_to_matrix(&retraction, "retraction")?;
        let fiber_matrix = rows_to_matrix(&fiber_matrix, "fiber_matrix")?;
        Ok(PySpec {
            inner: FiberedMapSpec::new(genus, retraction, fiber_matrix, label)
                .map_err(value_error)?,
        })
    }

    /// Circle-fiber family member with parameter m >= 1.
    #[staticmethod]
    fn theorem1(m: BigInt) -> PyResult<Self> {
        Ok(PySpec {
            inner: FiberedMapSpec::theorem1_family(m).map_err(value_error)?,
        })
    }

    /// Torus-fiber family member with parameter m >= 1.
    #[staticmethod]
    fn theorem2(m: BigInt) -> PyResult<Self> {
        Ok(PySpec {
            inner: FiberedMapSpec::theorem2_family(m).map_err(value_error)?,
        })
    }

    /// Parses the key-value spec file format.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(PySpec {
            inner: FiberedMapSpec::parse_spec_file(text).map_err(value_error)?,
        })
    }

    #[getter]
    fn genus(&self) -> usize {
        self.inner.genus()
    }

    #[getter]
    fn fiber_rank(&self) -> usize {
        self.inner.fiber_rank()
    }

    #[getter]
    fn label(&self) -> &str {
        self.inner.label()
    }

    fn retraction(&self) -> Vec<Vec<BigInt>> {
        matrix_to_rows(self.inner.retraction())
    }

    fn fiber_matrix(&self) -> Vec<Vec<BigInt>> {
        matrix_to_rows(self.inner.fiber_matrix())
    }

    fn euler_characteristic(&self) -> BigInt {
        self.inner.euler_characteristic()
    }

    /// dict with fiber_det, is_fiber_automorphism, lefschetz_det, degenerate.
    fn diagnostics<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let d = self.inner.diagnostics();
        let out = PyDict::new(py);
        out.set_item("fiber_det", d.fiber_det)?;
        out.set_item("is_fiber_automorphism", d.is_fiber_automorphism)?;
        out.set_item("lefschetz_det", d.lefschetz_det)?;
        out.set_item("degenerate", d.degenerate)?;
        Ok(out)
    }

    fn total_lefschetz(&self) -> BigInt {
        fpclass::total_lefschetz(&self.inner)
    }

    fn fiber_lefschetz(&self) -> BigInt {
        fpclass::fiber_lefschetz(self.inner.fiber_matrix())
    }

    fn fiber_nielsen(&self) -> PyResult<BigInt> {
        fpclass::fiber_nielsen(self.inner.fiber_matrix()).map_err(value_error)
    }

    /// Number of nonempty fixed point classes, None when infinite.
    fn class_count(&self) -> Option<BigInt> {
        order_to_option(&fpclass::reidemeister_structure(&self.inner).class_count)
    }

    /// |index| of the unique nonempty fixed point class.
    fn class_index(&self) -> PyResult<BigInt> {
        fpclass::class_index(&self.inner).map_err(value_error)
    }

    /// Full invariant report as a dict.
    fn analyze<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let report = fpclass::analyze(&self.inner).map_err(value_error)?;
        let out = PyDict::new(py);
        out.set_item("fiber_lefschetz", report.fiber_lefschetz)?;
        out.set_item("fiber_nielsen", report.fiber_nielsen)?;
        out.set_item("euler_characteristic", report.euler_characteristic)?;
        out.set_item("total_lefschetz", report.total_lefschetz)?;
        out.set_item("class_count", order_to_option(&report.class_count))?;
        out.set_item("class_index_abs", report.class_index_abs)?;
        out.set_item("empty_classes_exist", report.empty_classes_exist)?;
        Ok(out)
    }

    /// Fixed-subgroup report: congruence conditions on exponent vectors,
    /// the lattice index, and the forced fiber coordinate as an exact
    /// rational linear map.
    fn fixed_subgroup<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let report = fpclass::fixed_subgroup(&self.inner).map_err(value_error)?;
        let out = PyDict::new(py);
        let conditions: Vec<(Vec<BigInt>, BigInt)> = report
            .conditions
            .iter()
            .map(|c| (c.coefficients.clone(), c.modulus.clone()))
            .collect();
        out.set_item("conditions", conditions)?;
        out.set_item("lattice_index", order_to_option(&report.lattice_index))?;
        out.set_item(
            "fiber_numerator",
            matrix_to_rows(&report.fiber_formula.numerator),
        )?;
        out.set_item(
            "fiber_denominator",
            report.fiber_formula.denominator.clone(),
        )?;
        out.set_item("fiber_formula", report.fiber_formula.to_string())?;
        Ok(out)
    }

    fn __repr__(&self) -> String {
        format!("{:?}", self.inner)
    }
}

/// Exact fixed points of the torus map x -> Xi x + c on [0, 1)^k.
/// Returns (degenerate, points) with each coordinate as a
/// (numerator, denominator) tuple. `translation` defaults to zero.
#[pyfunction]
#[pyo3(signature = (fiber_matrix, translation = None))]
#[allow(clippy::type_complexity)]
fn torus_fixed_points(
    fiber_matrix: Vec<Vec<BigInt>>,
    translation: Option<Vec<(BigInt, BigInt)>>,
) -> PyResult<(bool, Vec<Vec<(BigInt, BigInt)>>)> {
    let xi = rows_to_matrix(&fiber_matrix, "fiber_matrix")?;
    if !xi.is_square() {
        return Err(PyValueError::new_err("fiber_matrix must be square"));
    }
    let c: Vec<BigRational> = match translation {
        None => vec![BigRational::zero(); xi.rows()],
        Some(pairs) => {
            if pairs.len() != xi.rows() {
                return Err(PyValueError::new_err("translation length must match rank"));
            }
            if pairs.iter().any(|(_, d)| d.is_zero()) {
                return Err(PyValueError::new_err(
                    "translation denominators must be nonzero",
                ));
            }
            pairs
                .into_iter()
                .map(|(n, d)| BigRational::new(n, d))
                .collect()
        }
    };
    let fixed = fpclass::torus_fixed_points(&xi, &c);
    let points = fixed
        .points
        .iter()
        .map(|p| p.iter().map(rational_to_pair).collect())
        .collect();
    Ok((fixed.degenerate, points))
}

/// Searches for an element merging the labels (1, v_from) and (1, v_to).
/// Returns None when the labels name distinct classes, else a dict with the
/// witness word, its fiber part, and the re-verification flag.
#[pyfunction]
fn verify_merge_witness<'py>(
    py: Python<'py>,
    spec: &PySpec,
    v_from: Vec<BigInt>,
    v_to: Vec<BigInt>,
) -> PyResult<Option<Bound<'py, PyDict>>> {
    let k = spec.inner.fiber_rank();
    if v_from.len() != k || v_to.len() != k {
        return Err(PyValueError::new_err(
            "label lengths must match the fiber rank",
        ));
    }
    let from = FiberElement::new(v_from);
    let to = FiberElement::new(v_to);
    match fpclass::verify_merge_witness(&spec.inner, &from, &to) {
        None => Ok(None),
        Some(witness) => {
            let out = PyDict::new(py);
            out.set_item("base_word", witness.witness.base.to_string())?;
            out.set_item("base_exponents", witness.witness.base.exponent_vector())?;
            out.set_item("fiber", witness.witness.fiber.coords().to_vec())?;
            out.set_item("verified", witness.verified)?;
            Ok(Some(out))
        }
    }
}

/// Certificate table for a family ("theorem1" or "theorem2") with
/// m = 1..=m_max: (valid, rows), each row a dict.
#[pyfunction]
#[allow(clippy::type_complexity)]
fn bip_certificate<'py>(
    py: Python<'py>,
    family: &str,
    m_max: BigInt,
) -> PyResult<(bool, Vec<Bound<'py, PyDict>>)> {
    let family: Family = family.parse().map_err(value_error)?;
    let certificate = fpclass::bip_certificate(family, &m_max).map_err(value_error)?;
    let rows = certificate
        .rows
        .iter()
        .map(|row| {
            let out = PyDict::new(py);
            out.set_item("m", row.m.clone())?;
            out.set_item("total_lefschetz", row.total_lefschetz.clone())?;
            out.set_item("class_count", order_to_option(&row.class_count))?;
            out.set_item("class_index_abs", row.class_index_abs.clone())?;
            out.set_item("valid", row.is_valid())?;
            Ok(out)
        })
        .collect::<PyResult<Vec<_>>>()?;
    Ok((certificate.is_valid(), rows))
}

/// Exponent-sum vector of a word literal like "a1 b1^-1 a2^3".
#[pyfunction]
fn exponent_vector(genus: usize, word: &str) -> PyResult<Vec<BigInt>> {
    Ok(fpclass::SurfaceWord::parse(genus, word)
        .map_err(value_error)?
        .exponent_vector())
}

/// Smith normal form U A V = D; returns (u, d, v) as nested lists.
#[pyfunction]
#[allow(clippy::type_complexity)]
fn smith_normal_form(
    matrix: Vec<Vec<BigInt>>,
) -> PyResult<(Vec<Vec<BigInt>>, Vec<Vec<BigInt>>, Vec<Vec<BigInt>>)> {
    let a = rows_to_matrix(&matrix, "matrix")?;
    let snf = fpclass::smith_normal_form(&a);
    Ok((
        matrix_to_rows(snf.u()),
        matrix_to_rows(snf.d()),
        matrix_to_rows(snf.v()),
    ))
}

/// Genus of the fixed surface of the circle-fiber family member: m + 1.
#[pyfunction]
fn fixed_surface_genus(m: BigInt) -> PyResult<BigInt> {
    fpclass::fixed_surface_genus(&m).map_err(value_error)
}

#[pymodule]
fn fpclass_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PySpec>()?;
    m.add_function(wrap_pyfunction!(torus_fixed_points, m)?)?;
    m.add_function(wrap_pyfunction!(verify_merge_witness, m)?)?;
    m.add_function(wrap_pyfunction!(bip_certificate, m)?)?;
    m.add_function(wrap_pyfunction!(exponent_vector, m)?)?;
    m.add_function(wrap_pyfunction!(smith_normal_form, m)?)?;
    m.add_function(wrap_pyfunction!(fixed_surface_genus, m)?)?;
    Ok(())
}
