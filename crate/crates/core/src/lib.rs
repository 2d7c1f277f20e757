//! Exact fixed-point class invariants for fiber-preserving self-maps of
//! products of a hyperbolic surface with a torus, over the identity base
//! map.
//!
//! A map is described by its retraction matrix R (how base generators twist
//! into the fiber) and its fiber matrix Xi. From those two integer matrices
//! the crate computes, exactly:
//!
//! - fiber and total Lefschetz numbers and the fiber Nielsen number,
//! - the merged class structure of lifting labels (a lattice cokernel),
//! - the fixed subgroup of the induced endomorphism, as congruence
//!   conditions on exponent vectors plus the forced fiber coordinate,
//! - the absolute index of the unique nonempty fixed point class,
//! - certificate tables exhibiting families whose class index grows as 2m.
//!
//! Independent brute-force oracles (torus fixed-point enumeration, witness
//! re-verification, exponent sweeps) cross-check the formula paths at small
//! scale.
//!
//! Surface-group words are handled up to free reduction only; see
//! [`words`] for what that does and does not decide.

pub mod error;
pub mod fibered;
pub mod invariants;
pub mod matrix;
pub mod oracles;
pub mod words;

pub use error::{Error, Result};
pub use fibered::{parse_family_reference, Family, FiberedMapSpec, SpecDiagnostics};
pub use invariants::{
    analyze, bip_certificate, bip_certificate_range, class_index, fiber_lefschetz, fiber_nielsen,
    fixed_subgroup, fixed_surface_genus, reidemeister_structure, total_lefschetz, BipCertificate,
    CertificateRow, Congruence, FiberFormula, FixedSubgroupReport, InvariantReport,
    ReidemeisterStructure,
};
pub use matrix::{
    cokernel, preimage_lattice_index, smith_normal_form, solve_diophantine, CokernelInvariants,
    DiophantineSolution, GroupOrder, IntMatrix, SmithDecomposition,
};
pub use oracles::{
    brute_force_fixed_subgroup, torus_fixed_points, verify_merge_witness, MergeWitness,
    TorusFixedPointSet,
};
pub use words::{
    apply_endomorphism, generator_name, twisted_conjugate, FiberElement, ProductElement,
    SurfaceWord,
};
