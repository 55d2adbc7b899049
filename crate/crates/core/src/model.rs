//! The trivector hidden-variable model and its bivector spin observables.
//!
//! The hidden variable is an orientation `λ = ±1` selecting `μ = λI`. Since
//! the grade-3 subspace of G3 is one-dimensional, these two values exhaust
//! the unit trivectors.
//!
//! Two forms of the observable product are provided because they disagree:
//! [`ProductForm::Identity`] keeps `μ` in the bivector term and so flips it
//! with `λ`, while [`ProductForm::Raw`] multiplies the two observables
//! directly and, because `(λI)² = -1`, loses all `λ` dependence.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ga::{gp, Multivector, UnitVector3};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HiddenVariable {
    Plus,
    Minus,
}

impl HiddenVariable {
    pub const BOTH: [HiddenVariable; 2] = [HiddenVariable::Plus, HiddenVariable::Minus];

    pub fn from_sign(lambda: i32) -> Result<Self> {
        match lambda {
            1 => Ok(HiddenVariable::Plus),
            -1 => Ok(HiddenVariable::Minus),
            other => Err(Error::InvalidOrientation(other)),
        }
    }

    pub fn lambda(self) -> f64 {
        match self {
            HiddenVariable::Plus => 1.0,
            HiddenVariable::Minus => -1.0,
        }
    }

    /// `μ = λI`.
    pub fn mu(self) -> Multivector {
        Multivector::trivector(self.lambda())
    }
}

impl fmt::Display for HiddenVariable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HiddenVariable::Plus => "+1",
            HiddenVariable::Minus => "-1",
        })
    }
}

/// Weights on the two orientations. Isotropic when `p_plus = 1/2`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OrientationDistribution {
    p_plus: f64,
}

impl OrientationDistribution {
    pub const ISOTROPIC: OrientationDistribution = OrientationDistribution { p_plus: 0.5 };

    pub fn new(p_plus: f64) -> Result<Self> {
        if (0.0..=1.0).contains(&p_plus) {
            Ok(OrientationDistribution { p_plus })
        } else {
            Err(Error::InvalidProbability(p_plus))
        }
    }

    pub fn p_plus(&self) -> f64 {
        self.p_plus
    }

    pub fn p_minus(&self) -> f64 {
        1.0 - self.p_plus
    }

    pub fn weight(&self, hv: HiddenVariable) -> f64 {
        match hv {
            HiddenVariable::Plus => self.p_plus(),
            HiddenVariable::Minus => self.p_minus(),
        }
    }

    pub fn is_isotropic(&self) -> bool {
        self.p_plus == 0.5
    }

    /// `(λ, p(λ))` for both atoms.
    pub fn atoms(&self) -> [(HiddenVariable, f64); 2] {
        HiddenVariable::BOTH.map(|hv| (hv, self.weight(hv)))
    }
}

/// Spin observable `μ a`, a unit bivector.
pub fn observable(a: &UnitVector3, hv: HiddenVariable) -> Multivector {
    gp(&hv.mu(), &a.to_multivector())
}

/// `-a·b - μ(a×b)`: the product identity with the bivector term carrying `μ`.
pub fn product_identity(a: &UnitVector3, b: &UnitVector3, hv: HiddenVariable) -> Multivector {
    let bivector = gp(&hv.mu(), &a.cross(b).to_multivector());
    Multivector::scalar(-a.dot(b)) - bivector
}

/// The literal geometric product of the two observables.
pub fn product_raw(a: &UnitVector3, b: &UnitVector3, hv: HiddenVariable) -> Multivector {
    gp(&observable(a, hv), &observable(b, hv))
}

/// Selects which product of observables an expectation integrates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ProductForm {
    Identity,
    Raw,
}

impl ProductForm {
    pub const ALL: [ProductForm; 2] = [ProductForm::Identity, ProductForm::Raw];

    pub fn name(self) -> &'static str {
        match self {
            ProductForm::Identity => "identity",
            ProductForm::Raw => "raw",
        }
    }

    pub fn apply(self, a: &UnitVector3, b: &UnitVector3, hv: HiddenVariable) -> Multivector {
        match self {
            ProductForm::Identity => product_identity(a, b, hv),
            ProductForm::Raw => product_raw(a, b, hv),
        }
    }
}

/// A correlation kernel `(a, b, λ) ↦ multivector`.
pub trait Kernel {
    fn eval(&self, a: &UnitVector3, b: &UnitVector3, hv: HiddenVariable) -> Multivector;
}

impl Kernel for ProductForm {
    fn eval(&self, a: &UnitVector3, b: &UnitVector3, hv: HiddenVariable) -> Multivector {
        self.apply(a, b, hv)
    }
}

impl<F> Kernel for F
where
    F: Fn(&UnitVector3, &UnitVector3, HiddenVariable) -> Multivector,
{
    fn eval(&self, a: &UnitVector3, b: &UnitVector3, hv: HiddenVariable) -> Multivector {
        self(a, b, hv)
    }
}
