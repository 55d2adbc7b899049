//! CHSH machinery on real-valued correlations.
//!
//! A [`Scalarizer`] maps one local observable, identified by its setting and
//! the hidden variable, to a number in `[-1, 1]`. Correlations built from
//! such maps factorize, so their CHSH value is bounded by 2. Maps that look
//! at both settings at once are refused by [`ScalarizerRegistry::register`].
//!
//! The CHSH combination used throughout is
//! `S = E(a,b) - E(a,b') + E(a',b) + E(a',b')`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::ga::{UnitVector3, Vector3};
use crate::model::{observable, HiddenVariable, OrientationDistribution};

/// Classical bound on `|S|`.
pub const LHV_BOUND: f64 = 2.0;

pub trait Scalarizer: Send + Sync {
    fn id(&self) -> &str;
    /// Real outcome for setting `a` under hidden variable `hv`.
    fn value(&self, a: &UnitVector3, hv: HiddenVariable) -> f64;
}

/// `⟨μa⟩₀`. Bivectors have no scalar part, so this is identically zero.
#[derive(Clone, Copy, Debug, Default)]
pub struct GradeZeroProjection;

impl Scalarizer for GradeZeroProjection {
    fn id(&self) -> &str {
        "grade0"
    }

    fn value(&self, a: &UnitVector3, hv: HiddenVariable) -> f64 {
        observable(a, hv).scalar_part()
    }
}

/// `s = λ`.
#[derive(Clone, Copy, Debug, Default)]
pub struct OrientationSign;

impl Scalarizer for OrientationSign {
    fn id(&self) -> &str {
        "orientation_sign"
    }

    fn value(&self, _a: &UnitVector3, hv: HiddenVariable) -> f64 {
        hv.lambda()
    }
}

/// `s = λ · sign(a·n)`, with `a·n = 0` counted as positive.
#[derive(Clone, Copy, Debug)]
pub struct ComponentSign {
    pub axis: UnitVector3,
}

impl Default for ComponentSign {
    fn default() -> Self {
        ComponentSign {
            axis: UnitVector3::E3,
        }
    }
}

impl Scalarizer for ComponentSign {
    fn id(&self) -> &str {
        "component_sign"
    }

    fn value(&self, a: &UnitVector3, hv: HiddenVariable) -> f64 {
        let sign = if a.dot(&self.axis) >= 0.0 { 1.0 } else { -1.0 };
        hv.lambda() * sign
    }
}

pub type JointMap = Box<dyn Fn(&UnitVector3, &UnitVector3, HiddenVariable) -> f64 + Send + Sync>;

/// Candidate map from the model's observables to real numbers.
pub enum ScalarizationMap {
    Local(Box<dyn Scalarizer>),
    /// Acts on both settings at once.
    Joint {
        id: String,
        map: JointMap,
    },
}

/// Scalarizers admitted for CHSH audits.
#[derive(Default)]
pub struct ScalarizerRegistry {
    entries: Vec<Box<dyn Scalarizer>>,
}

impl ScalarizerRegistry {
    /// The three built-in scalarizers; `axis` configures [`ComponentSign`].
    pub fn standard(axis: UnitVector3) -> Self {
        let mut reg = ScalarizerRegistry::default();
        for s in [
            ScalarizationMap::Local(Box::new(GradeZeroProjection)),
            ScalarizationMap::Local(Box::new(OrientationSign)),
            ScalarizationMap::Local(Box::new(ComponentSign { axis })),
        ] {
            reg.register(s)
                .expect("built-in scalarizers are local and bounded");
        }
        reg
    }

    pub fn register(&mut self, map: ScalarizationMap) -> Result<()> {
        let s = match map {
            ScalarizationMap::Joint { id, .. } => return Err(Error::NonFactorizing(id)),
            ScalarizationMap::Local(s) => s,
        };
        for a in probe_settings() {
            for hv in HiddenVariable::BOTH {
                let v = s.value(&a, hv);
                if !(-1.0..=1.0).contains(&v) {
                    return Err(Error::ScalarizerRange {
                        id: s.id().to_string(),
                        value: v,
                    });
                }
            }
        }
        self.entries.push(s);
        Ok(())
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn Scalarizer> {
        self.entries.iter().map(|s| s.as_ref())
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

fn probe_settings() -> Vec<UnitVector3> {
    let mut out = Vec::new();
    for v in [UnitVector3::E1, UnitVector3::E2, UnitVector3::E3] {
        out.push(v);
        out.push(UnitVector3::new(v.scale(-1.0)).expect("negated unit vector"));
    }
    out.extend((0..8).map(|k| UnitVector3::in_plane(45.0 * k as f64 + 10.0)));
    out
}

/// `Σ_λ p(λ) s(a,λ) s(b,λ)`.
pub fn scalar_correlation(
    s: &dyn Scalarizer,
    a: &UnitVector3,
    b: &UnitVector3,
    dist: &OrientationDistribution,
) -> f64 {
    dist.atoms()
        .iter()
        .map(|&(hv, p)| p * s.value(a, hv) * s.value(b, hv))
        .sum()
}

/// The four measurement settings of a CHSH experiment.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ChshScenario {
    pub a: UnitVector3,
    pub a_prime: UnitVector3,
    pub b: UnitVector3,
    pub b_prime: UnitVector3,
}

impl ChshScenario {
    pub const DEFAULT_ANGLES: [f64; 4] = [0.0, 90.0, 45.0, 135.0];

    /// Coplanar settings at `[a, a', b, b']` degrees from e1.
    pub fn from_angles_deg(angles: [f64; 4]) -> Self {
        let [a, a_prime, b, b_prime] = angles.map(UnitVector3::in_plane);
        ChshScenario {
            a,
            a_prime,
            b,
            b_prime,
        }
    }

    pub fn standard() -> Self {
        Self::from_angles_deg(Self::DEFAULT_ANGLES)
    }

    /// Settings drawn uniformly from the sphere.
    pub fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        ChshScenario {
            a: random_unit(rng),
            a_prime: random_unit(rng),
            b: random_unit(rng),
            b_prime: random_unit(rng),
        }
    }
}

/// Uniform on the unit sphere via a normalized Gaussian triple.
pub fn random_unit<R: Rng + ?Sized>(rng: &mut R) -> UnitVector3 {
    loop {
        let v = Vector3::new(
            rng.sample(StandardNormal),
            rng.sample(StandardNormal),
            rng.sample(StandardNormal),
        );
        if v.norm() > 1e-8 {
            return UnitVector3::normalize(v).expect("nonzero finite vector");
        }
    }
}

pub fn chsh<F>(corr: F, sc: &ChshScenario) -> f64
where
    F: Fn(&UnitVector3, &UnitVector3) -> f64,
{
    corr(&sc.a, &sc.b) - corr(&sc.a, &sc.b_prime)
        + corr(&sc.a_prime, &sc.b)
        + corr(&sc.a_prime, &sc.b_prime)
}

/// Fixed ±1 outcomes for each of the four settings.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DeterministicStrategy {
    pub a: i8,
    pub a_prime: i8,
    pub b: i8,
    pub b_prime: i8,
}

impl DeterministicStrategy {
    pub fn new(a: i8, a_prime: i8, b: i8, b_prime: i8) -> Self {
        for s in [a, a_prime, b, b_prime] {
            assert!(s == 1 || s == -1, "strategy entries must be ±1");
        }
        DeterministicStrategy {
            a,
            a_prime,
            b,
            b_prime,
        }
    }

    /// All 16 assignments.
    pub fn all() -> impl Iterator<Item = DeterministicStrategy> {
        (0u8..16).map(|bits| {
            let sign = |i: u8| if bits >> i & 1 == 0 { 1 } else { -1 };
            DeterministicStrategy::new(sign(0), sign(1), sign(2), sign(3))
        })
    }

    pub fn chsh_value(&self) -> i32 {
        let (a, ap, b, bp) = (
            self.a as i32,
            self.a_prime as i32,
            self.b as i32,
            self.b_prime as i32,
        );
        a * b - a * bp + ap * b + ap * bp
    }
}

/// Max `|S|` over every deterministic local strategy. The outcomes ignore the
/// settings, so the scenario does not enter.
pub fn lhv_bruteforce_bound(_sc: &ChshScenario) -> f64 {
    DeterministicStrategy::all()
        .map(|s| s.chsh_value().abs())
        .max()
        .unwrap_or(0) as f64
}

/// Largest `|S|` seen over `trials` random scenarios and random distributions.
pub fn scalarizer_audit(s: &dyn Scalarizer, trials: usize, seed: u64) -> Result<f64> {
    if trials == 0 {
        return Err(Error::Config(
            "scalarizer audit needs at least one trial".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut max = 0.0_f64;
    for _ in 0..trials {
        let sc = ChshScenario::random(&mut rng);
        let dist = OrientationDistribution::new(rng.random::<f64>())?;
        let value = chsh(|x, y| scalar_correlation(s, x, y, &dist), &sc);
        max = max.max(value.abs());
    }
    Ok(max)
}

/// `-a·b`, the scalar part of the model's expectation.
pub fn quantum_target(a: &UnitVector3, b: &UnitVector3) -> f64 {
    -a.dot(b)
}
