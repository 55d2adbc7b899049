//! Expectation functionals over the two-atom orientation distribution.
//!
//! Under [`MeasureKind::ScalarWeights`] atom `λ` carries the real weight
//! `p(λ)`. Under [`MeasureKind::DirectedTrivector`] it carries `p(λ) I`, applied
//! by right geometric multiplication onto the integrand (`I` is central, so
//! the side does not matter). The directed measure totals to `I`, never to 1,
//! and it rotates grades: scalars land in grade 3 and bivectors in grade 1.
//!
//! Grade support of a functional is always reported from a sweep over the
//! distribution family: a single isotropic evaluation can cancel to an exact
//! zero and hide the grade it lives in.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ga::{gp, grade_audit, GradeSupport, Multivector, UnitVector3, DEFAULT_TOLERANCE};
use crate::model::{Kernel, OrientationDistribution};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MeasureKind {
    ScalarWeights,
    DirectedTrivector,
}

impl MeasureKind {
    pub const ALL: [MeasureKind; 2] = [MeasureKind::ScalarWeights, MeasureKind::DirectedTrivector];

    pub fn name(self) -> &'static str {
        match self {
            MeasureKind::ScalarWeights => "scalar",
            MeasureKind::DirectedTrivector => "directed",
        }
    }

    /// Multivector weight of an atom with probability `p`.
    pub fn atom_weight(self, p: f64) -> Multivector {
        match self {
            MeasureKind::ScalarWeights => Multivector::scalar(p),
            MeasureKind::DirectedTrivector => Multivector::trivector(p),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ExpectationResult {
    pub value: Multivector,
    /// Grades of `value` itself.
    pub support: GradeSupport,
    /// Grades of the individual weighted atom terms; keeps the grade of a
    /// value that cancelled to zero.
    pub term_support: GradeSupport,
    pub measure_total: Multivector,
    pub valid_probability_measure: bool,
}

/// Sum of the atom weights.
pub fn measure_total(dist: &OrientationDistribution, kind: MeasureKind) -> Multivector {
    dist.atoms().iter().map(|&(_, p)| kind.atom_weight(p)).sum()
}

/// `Σ_λ kernel(a, b, λ) · weight(λ)`, audited at the default tolerance.
pub fn expectation<K: Kernel + ?Sized>(
    kernel: &K,
    a: &UnitVector3,
    b: &UnitVector3,
    dist: &OrientationDistribution,
    kind: MeasureKind,
) -> ExpectationResult {
    expectation_with_tol(kernel, a, b, dist, kind, DEFAULT_TOLERANCE)
        .expect("default tolerance is positive")
}

pub fn expectation_with_tol<K: Kernel + ?Sized>(
    kernel: &K,
    a: &UnitVector3,
    b: &UnitVector3,
    dist: &OrientationDistribution,
    kind: MeasureKind,
    tol: f64,
) -> Result<ExpectationResult> {
    let mut value = Multivector::ZERO;
    let mut term_support = GradeSupport::empty();
    for (hv, p) in dist.atoms() {
        let term = gp(&kernel.eval(a, b, hv), &kind.atom_weight(p));
        term_support = term_support.union(&grade_audit(&term, tol)?);
        value += term;
    }
    let total = measure_total(dist, kind);
    Ok(ExpectationResult {
        value,
        support: grade_audit(&value, tol)?,
        term_support,
        measure_total: total,
        valid_probability_measure: total.approx_eq(&Multivector::ONE, tol),
    })
}

fn check_grid(p_grid: &[f64]) -> Result<Vec<OrientationDistribution>> {
    if p_grid.is_empty() {
        return Err(Error::EmptyGrid);
    }
    p_grid
        .iter()
        .map(|&p| OrientationDistribution::new(p))
        .collect()
}

/// Union of the value supports over every distribution in `p_grid`.
pub fn codomain_support<K: Kernel + ?Sized>(
    kernel: &K,
    a: &UnitVector3,
    b: &UnitVector3,
    kind: MeasureKind,
    p_grid: &[f64],
    tol: f64,
) -> Result<GradeSupport> {
    let mut support = GradeSupport::empty();
    for dist in check_grid(p_grid)? {
        let r = expectation_with_tol(kernel, a, b, &dist, kind, tol)?;
        support = support.union(&r.support);
    }
    Ok(support)
}

/// Raw `(p, expectation)` sweep data.
pub fn functional_range_probe<K: Kernel + ?Sized>(
    kernel: &K,
    a: &UnitVector3,
    b: &UnitVector3,
    kind: MeasureKind,
    p_grid: &[f64],
) -> Result<Vec<(f64, Multivector)>> {
    Ok(check_grid(p_grid)?
        .into_iter()
        .map(|dist| {
            let r = expectation(kernel, a, b, &dist, kind);
            (dist.p_plus(), r.value)
        })
        .collect())
}

/// `0, step, 2 step, ..., 1`. When `step` does not divide 1 the grid is
/// closed with an explicit 1.
pub fn p_grid(step: f64) -> Result<Vec<f64>> {
    if !(step > 0.0 && step <= 1.0) {
        return Err(Error::Config(format!(
            "p-grid step must be in (0, 1], got {step}"
        )));
    }
    let n = (1.0 / step).round();
    if (n * step - 1.0).abs() < 1e-9 {
        let n = n as usize;
        return Ok((0..=n).map(|i| i as f64 / n as f64).collect());
    }
    let mut grid: Vec<f64> = (0..)
        .map(|i| i as f64 * step)
        .take_while(|&p| p < 1.0)
        .collect();
    grid.push(1.0);
    Ok(grid)
}

pub const DEFAULT_P_STEP: f64 = 0.05;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ga::{Blade, Vector3};
    use crate::model::ProductForm;
    use MeasureKind::{DirectedTrivector, ScalarWeights};

    const E1: UnitVector3 = UnitVector3::E1;
    const E2: UnitVector3 = UnitVector3::E2;
    const ID: ProductForm = ProductForm::Identity;

    fn dist(p: f64) -> OrientationDistribution {
        OrientationDistribution::new(p).unwrap()
    }

    fn diag() -> UnitVector3 {
        UnitVector3::normalize(Vector3::new(1.0, 1.0, 0.0)).unwrap()
    }

    #[test]
    fn totals() {
        assert_eq!(measure_total(&dist(0.5), ScalarWeights), Multivector::ONE);
        assert_eq!(measure_total(&dist(0.5), DirectedTrivector), Multivector::I);
        assert_eq!(measure_total(&dist(0.3), DirectedTrivector), Multivector::I);
    }

    #[test]
    fn expectation_examples() {
        let r = expectation(&ID, &E1, &E2, &dist(0.5), ScalarWeights);
        assert!(r.value.is_zero());
        assert!(r.support.is_empty());
        assert!(r.term_support.is_exactly(&[2]));
        assert!(r.valid_probability_measure);

        let r = expectation(&ID, &E1, &E2, &dist(1.0), ScalarWeights);
        assert_eq!(r.value, -Multivector::basis(Blade::E12));
        assert!(r.support.is_exactly(&[2]));

        let r = expectation(&ID, &E1, &E1, &dist(0.5), DirectedTrivector);
        assert_eq!(r.value, -Multivector::I);
        assert!(r.support.is_exactly(&[3]));
        assert!(!r.valid_probability_measure);

        let r = expectation(&ID, &E1, &E2, &dist(1.0), DirectedTrivector);
        assert_eq!(r.value, Multivector::basis(Blade::E3));
        assert!(r.support.is_exactly(&[1]));
    }

    #[test]
    fn codomain_examples() {
        let grid = p_grid(DEFAULT_P_STEP).unwrap();
        let tol = DEFAULT_TOLERANCE;
        let s = codomain_support(&ID, &E1, &E2, ScalarWeights, &grid, tol).unwrap();
        assert!(s.is_exactly(&[2]));
        let s = codomain_support(&ID, &E1, &diag(), ScalarWeights, &grid, tol).unwrap();
        assert!(s.is_exactly(&[0, 2]));
        let s = codomain_support(&ID, &E1, &E2, DirectedTrivector, &grid, tol).unwrap();
        assert!(s.is_exactly(&[1]));
        let s = codomain_support(&ID, &E1, &diag(), DirectedTrivector, &grid, tol).unwrap();
        assert!(s.is_exactly(&[1, 3]));
        let s = codomain_support(&ID, &E1, &E1, ScalarWeights, &grid, tol).unwrap();
        assert!(s.is_exactly(&[0]));
        let s = codomain_support(&ID, &E1, &E1, DirectedTrivector, &[0.2, 0.9], tol).unwrap();
        assert!(s.is_exactly(&[3]));
    }

    #[test]
    fn grid_errors() {
        assert_eq!(
            codomain_support(&ID, &E1, &E2, ScalarWeights, &[], 1e-12),
            Err(Error::EmptyGrid)
        );
        assert_eq!(
            codomain_support(&ID, &E1, &E2, ScalarWeights, &[0.5, 1.5], 1e-12),
            Err(Error::InvalidProbability(1.5))
        );
        assert!(functional_range_probe(&ID, &E1, &E2, ScalarWeights, &[]).is_err());
        assert!(codomain_support(&ID, &E1, &E2, ScalarWeights, &[0.5], 0.0).is_err());
    }

    #[test]
    fn probe_examples() {
        let probe = functional_range_probe(&ID, &E1, &E2, DirectedTrivector, &[0.5]).unwrap();
        assert_eq!(probe.len(), 1);
        assert_eq!(probe[0].0, 0.5);
        assert!(probe[0].1.is_zero());

        let probe = functional_range_probe(&ID, &E1, &E2, DirectedTrivector, &[1.0]).unwrap();
        assert_eq!(probe[0].1, Multivector::basis(Blade::E3));

        let probe = functional_range_probe(&ID, &E1, &diag(), DirectedTrivector, &[0.5]).unwrap();
        let expected = Multivector::trivector(-std::f64::consts::FRAC_1_SQRT_2);
        assert!(probe[0].1.approx_eq(&expected, 1e-15));
    }

    #[test]
    fn grid_shapes() {
        let g = p_grid(0.05).unwrap();
        assert_eq!(g.len(), 21);
        assert_eq!(g[0], 0.0);
        assert_eq!(g[10], 0.5);
        assert_eq!(g[20], 1.0);
        assert_eq!(p_grid(1.0).unwrap(), vec![0.0, 1.0]);
        assert_eq!(p_grid(0.3).unwrap().last(), Some(&1.0));
        assert_eq!(p_grid(0.3).unwrap().len(), 5);
        assert!(p_grid(0.0).is_err());
        assert!(p_grid(1.5).is_err());
        assert!(p_grid(f64::NAN).is_err());
    }
}
