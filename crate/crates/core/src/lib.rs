//! Geometric algebra of 3-D Euclidean space, the trivector hidden-variable
//! Bell model built on it, and the audits that check which grades the model's
//! "expectation values" occupy and which CHSH bounds its scalarizations obey.

pub mod bell;
pub mod error;
pub mod ga;
pub mod measure;
pub mod model;
pub mod report;

pub use error::{Error, Result};
pub use ga::{
    cross, dot, gp, grade_audit, grade_project, wedge, Blade, GradeSupport, Multivector,
    UnitVector3, Vector3,
};
pub use measure::{
    codomain_support, expectation, expectation_with_tol, functional_range_probe, measure_total,
    ExpectationResult, MeasureKind,
};
pub use model::{
    observable, product_identity, product_raw, HiddenVariable, Kernel, OrientationDistribution,
    ProductForm,
};
pub use report::{emit, run_audit, AuditConfig, AuditReport, OutputFormat, Verdict};
