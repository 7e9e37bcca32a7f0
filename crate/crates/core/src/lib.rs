//! Exact verification engine for left-invariant geometry on
//! three-dimensional Lorentzian Lie groups.
//!
//! From structure constants alone, the engine derives the Levi-Civita,
//! canonical, and Kobayashi–Nomizu connections in a pseudo-orthonormal
//! frame (e₃ timelike), their curvature and symmetrized Ricci forms, and
//! the space of frame vectors ξ with L_ξ Ric̃ = 0 (the collineation space)
//! as the exact null space of a 6×3 linear system.
//!
//! A bundled reference catalog records the closed-form expectations for
//! seven parameterized families (G1–G7) under both non-Levi-Civita
//! connections, together with per-family case predicates predicting the
//! collineation space on each parameter region. The engine's job is to
//! compare itself against that catalog — componentwise, at exact rational
//! points — and to certify every divergence with pencil-checkable data
//! rather than repair either side.
//!
//! Numeric policy: all geometry is generic over [`scalar::Scalar`]
//! (arbitrary-precision rationals by default, `f64`/`f32` available);
//! everything touching the reference catalog, case predicates, scans, and
//! reports is concrete over [`Rational`] so that equality means equality.

pub mod algebra;
pub mod cases;
pub mod config;
pub mod connection;
pub mod curvature;
pub mod error;
pub mod metric;
pub mod reference;
pub mod report;
pub mod sample;
pub mod scalar;
pub mod scan;
pub mod solver;

pub use algebra::{
    bracket, custom_group, jacobi_defect, make_group, param_list, Family, LieAlgebra3, Params,
    CATALOG_FAMILIES,
};
pub use cases::{case_catalog, case_info, theorem_predicate, Predicted, TheoremCase};
pub use connection::{
    canonical_connection, connection, kobayashi_nomizu, levi_civita, nabla_j, Connection, Flavor,
    NablaJ,
};
pub use curvature::{
    curvature, operator_to_form, ricci_form, symmetric_ricci, symmetrize, BilinearForm,
    CurvatureTensor, OperatorMatrix,
};
pub use error::{Error, Result};
pub use metric::{basis_vec, Metric, ProductStructure, Vec3};
pub use reference::{check_lemmas, CheckKind, LemmaCheck, LemmaDiscrepancy};
pub use scalar::{format_rational, parse_rational, Rational, Scalar};
pub use scan::{
    certify_mismatch, default_grid, evaluate_point, scan, CaseReport, Certificate, ScanConfig,
    ScanOutcome, ScanSummary, Verdict,
};
pub use solver::{
    assemble_system, collineation_space, lie_derivative_form, null_space, rref,
    CollineationSystem, SolutionSpace,
};

/// A catalog algebra over the default exact scalar.
pub type RationalAlgebra = LieAlgebra3<Rational>;
/// A parameter point over the default exact scalar.
pub type RationalParams = Params<Rational>;
/// A connection table over the default exact scalar.
pub type RationalConnection = Connection<Rational>;
/// A frame (0,2)-tensor over the default exact scalar.
pub type RationalForm = BilinearForm<Rational>;
/// A canonical-form subspace over the default exact scalar.
pub type RationalSpace = SolutionSpace<Rational>;
