//! The geometric algebra of three-dimensional Euclidean space.
//!
//! Coefficients are stored in the fixed basis order
//! `(1, e1, e2, e3, e12, e13, e23, e123)` with `e_i e_i = +1`. The bivector
//! basis uses `e13` rather than `e31`, so `I e2 = -e13`.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Deref, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Number of basis blades.
pub const DIM: usize = 8;

/// Grade of each basis blade, indexed like [`Multivector::coeffs`].
pub const BLADE_GRADE: [usize; DIM] = [0, 1, 1, 1, 2, 2, 2, 3];

pub const BLADE_NAMES: [&str; DIM] = ["1", "e1", "e2", "e3", "e12", "e13", "e23", "e123"];

/// Default audit tolerance. Every value in this crate is O(1).
pub const DEFAULT_TOLERANCE: f64 = 1e-12;

/// Basis blade labels, in storage order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Blade {
    Scalar = 0,
    E1 = 1,
    E2 = 2,
    E3 = 3,
    E12 = 4,
    E13 = 5,
    E23 = 6,
    E123 = 7,
}

impl Blade {
    pub const ALL: [Blade; DIM] = [
        Blade::Scalar,
        Blade::E1,
        Blade::E2,
        Blade::E3,
        Blade::E12,
        Blade::E13,
        Blade::E23,
        Blade::E123,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn grade(self) -> usize {
        BLADE_GRADE[self.index()]
    }

    pub fn name(self) -> &'static str {
        BLADE_NAMES[self.index()]
    }
}

const S: usize = 0;
const E1: usize = 1;
const E2: usize = 2;
const E3: usize = 3;
const E12: usize = 4;
const E13: usize = 5;
const E23: usize = 6;
const E123: usize = 7;

const fn p(k: usize) -> (f64, usize) {
    (1.0, k)
}

const fn n(k: usize) -> (f64, usize) {
    (-1.0, k)
}

/// `CAYLEY[i][j] = (sign, k)` means `blade_i * blade_j = sign * blade_k`.
const CAYLEY: [[(f64, usize); DIM]; DIM] = [
    [p(S), p(E1), p(E2), p(E3), p(E12), p(E13), p(E23), p(E123)],
    [p(E1), p(S), p(E12), p(E13), p(E2), p(E3), p(E123), p(E23)],
    [p(E2), n(E12), p(S), p(E23), n(E1), n(E123), p(E3), n(E13)],
    [p(E3), n(E13), n(E23), p(S), p(E123), n(E1), n(E2), p(E12)],
    [p(E12), n(E2), p(E1), p(E123), n(S), n(E23), p(E13), n(E3)],
    [p(E13), n(E3), n(E123), p(E1), p(E23), n(S), n(E12), p(E2)],
    [p(E23), p(E123), n(E3), p(E2), n(E13), p(E12), n(S), n(E1)],
    [p(E123), p(E23), n(E13), p(E12), n(E3), p(E2), n(E1), n(S)],
];

/// Product of two basis blades as `(sign, blade)`.
pub fn blade_product(a: Blade, b: Blade) -> (f64, Blade) {
    let (sign, k) = CAYLEY[a.index()][b.index()];
    (sign, Blade::ALL[k])
}

/// An element of G3: eight real coefficients across grades 0..=3.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Multivector {
    coeffs: [f64; DIM],
}

impl Multivector {
    pub const ZERO: Multivector = Multivector { coeffs: [0.0; DIM] };
    pub const ONE: Multivector = Multivector::basis(Blade::Scalar);
    /// The unit pseudoscalar `I = e1 e2 e3`.
    pub const I: Multivector = Multivector::basis(Blade::E123);

    pub const fn from_coeffs(coeffs: [f64; DIM]) -> Self {
        Multivector { coeffs }
    }

    /// Like [`Multivector::from_coeffs`], rejecting NaN and infinities.
    pub fn try_from_coeffs(coeffs: [f64; DIM]) -> Result<Self> {
        if coeffs.iter().all(|c| c.is_finite()) {
            Ok(Multivector { coeffs })
        } else {
            Err(Error::NonFinite("multivector"))
        }
    }

    pub const fn basis(blade: Blade) -> Self {
        let mut coeffs = [0.0; DIM];
        coeffs[blade as usize] = 1.0;
        Multivector { coeffs }
    }

    pub const fn scalar(s: f64) -> Self {
        let mut coeffs = [0.0; DIM];
        coeffs[S] = s;
        Multivector { coeffs }
    }

    pub const fn vector(x: f64, y: f64, z: f64) -> Self {
        Multivector {
            coeffs: [0.0, x, y, z, 0.0, 0.0, 0.0, 0.0],
        }
    }

    pub const fn bivector(e12: f64, e13: f64, e23: f64) -> Self {
        Multivector {
            coeffs: [0.0, 0.0, 0.0, 0.0, e12, e13, e23, 0.0],
        }
    }

    pub const fn trivector(e123: f64) -> Self {
        let mut coeffs = [0.0; DIM];
        coeffs[E123] = e123;
        Multivector { coeffs }
    }

    pub fn coeffs(&self) -> &[f64; DIM] {
        &self.coeffs
    }

    pub fn coeff(&self, blade: Blade) -> f64 {
        self.coeffs[blade.index()]
    }

    pub fn scalar_part(&self) -> f64 {
        self.coeffs[S]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0.0)
    }

    pub fn is_finite(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_finite())
    }

    /// Component in the grade-`k` subspace.
    pub fn grade(&self, k: usize) -> Result<Multivector> {
        if k > 3 {
            return Err(Error::InvalidGrade(k));
        }
        let mut out = Multivector::ZERO;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if BLADE_GRADE[i] == k {
                out.coeffs[i] = c;
            }
        }
        Ok(out)
    }

    /// Euclidean norm of the grade-`k` coefficients.
    pub fn grade_magnitude(&self, k: usize) -> Result<f64> {
        if k > 3 {
            return Err(Error::InvalidGrade(k));
        }
        Ok(self
            .coeffs
            .iter()
            .zip(BLADE_GRADE)
            .filter(|&(_, g)| g == k)
            .map(|(c, _)| c * c)
            .sum::<f64>()
            .sqrt())
    }

    pub fn max_abs_diff(&self, other: &Multivector) -> f64 {
        self.coeffs
            .iter()
            .zip(other.coeffs.iter())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    pub fn approx_eq(&self, other: &Multivector, tol: f64) -> bool {
        self.max_abs_diff(other) <= tol
    }

    /// Renders the value, spelling out a zero that cancelled within known grades
    /// as e.g. `0 [as grade-2]`.
    pub fn annotated(&self, support: &GradeSupport) -> String {
        if self.is_zero() && !support.is_empty() {
            let grades: Vec<String> = support.grades().iter().map(|g| g.to_string()).collect();
            format!("0 [as grade-{}]", grades.join(","))
        } else {
            self.to_string()
        }
    }
}

/// Shortest round-trip decimal, switching to exponent form for very small or
/// very large magnitudes.
pub fn format_real(x: f64) -> String {
    let mag = x.abs();
    if x != 0.0 && !(1e-4..1e15).contains(&mag) {
        format!("{x:e}")
    } else {
        format!("{x}")
    }
}

/// Geometric product, driven by the basis Cayley table.
pub fn gp(x: &Multivector, y: &Multivector) -> Multivector {
    let mut out = [0.0; DIM];
    for (i, &xi) in x.coeffs.iter().enumerate() {
        for (j, &yj) in y.coeffs.iter().enumerate() {
            let (sign, k) = CAYLEY[i][j];
            out[k] += sign * xi * yj;
        }
    }
    Multivector { coeffs: out }
}

pub fn grade_project(x: &Multivector, k: usize) -> Result<Multivector> {
    x.grade(k)
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0.0 {
                continue;
            }
            let mag = c.abs();
            if wrote {
                f.write_str(if c < 0.0 { " - " } else { " + " })?;
            } else if c < 0.0 {
                f.write_str("-")?;
            }
            match (i, mag == 1.0) {
                (S, _) => f.write_str(&format_real(mag))?,
                (_, true) => f.write_str(BLADE_NAMES[i])?,
                (_, false) => write!(f, "{}{}", format_real(mag), BLADE_NAMES[i])?,
            }
            wrote = true;
        }
        if !wrote {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl Add for Multivector {
    type Output = Multivector;
    fn add(mut self, rhs: Multivector) -> Multivector {
        self += rhs;
        self
    }
}

impl AddAssign for Multivector {
    fn add_assign(&mut self, rhs: Multivector) {
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs) {
            *a += b;
        }
    }
}

impl Sub for Multivector {
    type Output = Multivector;
    fn sub(mut self, rhs: Multivector) -> Multivector {
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs) {
            *a -= b;
        }
        self
    }
}

impl Neg for Multivector {
    type Output = Multivector;
    fn neg(mut self) -> Multivector {
        for a in self.coeffs.iter_mut() {
            *a = -*a;
        }
        self
    }
}

impl Mul<f64> for Multivector {
    type Output = Multivector;
    fn mul(mut self, rhs: f64) -> Multivector {
        for a in self.coeffs.iter_mut() {
            *a *= rhs;
        }
        self
    }
}

impl Mul<Multivector> for f64 {
    type Output = Multivector;
    fn mul(self, rhs: Multivector) -> Multivector {
        rhs * self
    }
}

impl Mul for Multivector {
    type Output = Multivector;
    fn mul(self, rhs: Multivector) -> Multivector {
        gp(&self, &rhs)
    }
}

impl Sum for Multivector {
    fn sum<I: Iterator<Item = Multivector>>(iter: I) -> Multivector {
        iter.fold(Multivector::ZERO, |acc, x| acc + x)
    }
}

/// A plain Euclidean 3-vector.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Vector3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Vector3 {
    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Vector3 { x, y, z }
    }

    pub fn dot(&self, other: &Vector3) -> f64 {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    /// Right-handed cross product.
    pub fn cross(&self, other: &Vector3) -> Vector3 {
        Vector3 {
            x: self.y * other.z - self.z * other.y,
            y: self.z * other.x - self.x * other.z,
            z: self.x * other.y - self.y * other.x,
        }
    }

    pub fn wedge(&self, other: &Vector3) -> Multivector {
        Multivector::bivector(
            self.x * other.y - self.y * other.x,
            self.x * other.z - self.z * other.x,
            self.y * other.z - self.z * other.y,
        )
    }

    pub fn norm(&self) -> f64 {
        self.dot(self).sqrt()
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    /// Embeds the vector as a grade-1 multivector.
    pub fn to_multivector(&self) -> Multivector {
        Multivector::vector(self.x, self.y, self.z)
    }

    pub fn scale(&self, s: f64) -> Vector3 {
        Vector3::new(self.x * s, self.y * s, self.z * s)
    }
}

impl From<Vector3> for Multivector {
    fn from(v: Vector3) -> Multivector {
        v.to_multivector()
    }
}

impl fmt::Display for Vector3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

pub fn dot(a: &Vector3, b: &Vector3) -> f64 {
    a.dot(b)
}

pub fn cross(a: &Vector3, b: &Vector3) -> Vector3 {
    a.cross(b)
}

pub fn wedge(a: &Vector3, b: &Vector3) -> Multivector {
    a.wedge(b)
}

/// Strict tolerance on `|‖v‖ - 1|` for [`UnitVector3::new`].
pub const UNIT_TOLERANCE: f64 = 1e-9;
/// Looser tolerance under which [`UnitVector3::ingest`] renormalizes.
pub const INGEST_TOLERANCE: f64 = 1e-6;

/// A vector known to have unit length.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct UnitVector3(Vector3);

impl UnitVector3 {
    pub const E1: UnitVector3 = UnitVector3(Vector3::new(1.0, 0.0, 0.0));
    pub const E2: UnitVector3 = UnitVector3(Vector3::new(0.0, 1.0, 0.0));
    pub const E3: UnitVector3 = UnitVector3(Vector3::new(0.0, 0.0, 1.0));

    /// Accepts `v` unchanged if its norm is within 1e-9 of one.
    pub fn new(v: Vector3) -> Result<Self> {
        Self::check(v, UNIT_TOLERANCE).map(|_| UnitVector3(v))
    }

    /// Accepts `v` within 1e-6 of unit length and renormalizes it.
    pub fn ingest(v: Vector3) -> Result<Self> {
        let norm = Self::check(v, INGEST_TOLERANCE)?;
        Ok(UnitVector3(v.scale(1.0 / norm)))
    }

    /// Normalizes any finite nonzero vector.
    pub fn normalize(v: Vector3) -> Result<Self> {
        let norm = v.norm();
        if !v.is_finite() || norm == 0.0 || !norm.is_finite() {
            return Err(Error::NotUnit {
                x: v.x,
                y: v.y,
                z: v.z,
                norm,
            });
        }
        Ok(UnitVector3(v.scale(1.0 / norm)))
    }

    /// Unit vector in the e1-e2 plane at `degrees` from e1.
    pub fn in_plane(degrees: f64) -> Self {
        let (s, c) = degrees.to_radians().sin_cos();
        UnitVector3(Vector3::new(c, s, 0.0))
    }

    pub fn get(&self) -> Vector3 {
        self.0
    }

    fn check(v: Vector3, tol: f64) -> Result<f64> {
        let norm = v.norm();
        if v.is_finite() && (norm - 1.0).abs() <= tol {
            Ok(norm)
        } else {
            Err(Error::NotUnit {
                x: v.x,
                y: v.y,
                z: v.z,
                norm,
            })
        }
    }
}

impl Deref for UnitVector3 {
    type Target = Vector3;
    fn deref(&self) -> &Vector3 {
        &self.0
    }
}

impl TryFrom<Vector3> for UnitVector3 {
    type Error = Error;
    fn try_from(v: Vector3) -> Result<Self> {
        UnitVector3::new(v)
    }
}

/// Which grades a multivector, or a family of them, occupies.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct GradeSupport {
    present: [bool; 4],
    max_magnitude: [f64; 4],
}

impl GradeSupport {
    pub fn empty() -> Self {
        GradeSupport::default()
    }

    pub fn grades(&self) -> Vec<usize> {
        (0..4).filter(|&k| self.present[k]).collect()
    }

    pub fn contains(&self, k: usize) -> bool {
        k < 4 && self.present[k]
    }

    pub fn is_empty(&self) -> bool {
        !self.present.iter().any(|&p| p)
    }

    /// Largest grade-`k` magnitude observed, present or not.
    pub fn max_magnitude(&self, k: usize) -> f64 {
        self.max_magnitude[k]
    }

    pub fn magnitudes(&self) -> [f64; 4] {
        self.max_magnitude
    }

    /// True if the present grades are exactly `grades`.
    pub fn is_exactly(&self, grades: &[usize]) -> bool {
        (0..4).all(|k| self.present[k] == grades.contains(&k))
    }

    /// True if every present grade is listed in `grades`.
    pub fn is_subset_of(&self, grades: &[usize]) -> bool {
        (0..4).all(|k| !self.present[k] || grades.contains(&k))
    }

    pub fn union(&self, other: &GradeSupport) -> GradeSupport {
        let mut out = *self;
        for k in 0..4 {
            out.present[k] |= other.present[k];
            out.max_magnitude[k] = out.max_magnitude[k].max(other.max_magnitude[k]);
        }
        out
    }
}

impl fmt::Display for GradeSupport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let grades: Vec<String> = self.grades().iter().map(|g| g.to_string()).collect();
        write!(f, "{{{}}}", grades.join(", "))
    }
}

/// Lists the grades of `x` whose magnitude exceeds `tol`.
pub fn grade_audit(x: &Multivector, tol: f64) -> Result<GradeSupport> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidTolerance(tol));
    }
    let mut support = GradeSupport::empty();
    for k in 0..4 {
        let mag = x.grade_magnitude(k)?;
        support.max_magnitude[k] = mag;
        support.present[k] = mag > tol;
    }
    Ok(support)
}
