//! Full audit pipeline and its text/JSON rendering.
//!
//! Every claim checked by [`run_audit`] has a fixed expected outcome. The
//! claim table is printed at the top of every report, and each claim gets one
//! verdict line. JSON output uses the field names of [`AuditReport`], with
//! numbers rounded to 15 significant digits.

use std::io::{self, Write};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use crate::bell::{
    chsh, lhv_bruteforce_bound, quantum_target, random_unit, scalarizer_audit, ChshScenario,
    DeterministicStrategy, ScalarizerRegistry, LHV_BOUND,
};
use crate::error::{Error, Result};
use crate::ga::{
    format_real, grade_audit, Blade, GradeSupport, Multivector, UnitVector3, Vector3, DIM,
};
use crate::measure::{
    codomain_support, expectation_with_tol, functional_range_probe, measure_total, p_grid,
    MeasureKind, DEFAULT_P_STEP,
};
use crate::model::{HiddenVariable, OrientationDistribution, ProductForm};

/// Random unit pairs checked against the product identity.
pub const IDENTITY_SAMPLE: usize = 1000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Debug, PartialEq)]
pub struct AuditConfig {
    pub tolerance: f64,
    pub p_step: f64,
    /// `[a, a', b, b']` in degrees, in the e1-e2 plane.
    pub angles: [f64; 4],
    pub trials: usize,
    pub seed: u64,
    pub format: OutputFormat,
    /// Audited in addition to the three built-in pairs.
    pub pairs: Vec<(Vector3, Vector3)>,
    /// Reference axis of the component-sign scalarizer.
    pub axis: Vector3,
}

impl Default for AuditConfig {
    fn default() -> Self {
        AuditConfig {
            tolerance: crate::ga::DEFAULT_TOLERANCE,
            p_step: DEFAULT_P_STEP,
            angles: ChshScenario::DEFAULT_ANGLES,
            trials: 10_000,
            seed: 42,
            format: OutputFormat::Text,
            pairs: Vec::new(),
            axis: Vector3::new(0.0, 0.0, 1.0),
        }
    }
}

impl AuditConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.tolerance > 0.0 && self.tolerance.is_finite()) {
            return Err(Error::Config(format!(
                "tolerance must be positive, got {}",
                self.tolerance
            )));
        }
        if !(self.p_step > 0.0 && self.p_step <= 1.0) {
            return Err(Error::Config(format!(
                "p-step must be in (0, 1], got {}",
                self.p_step
            )));
        }
        if self.trials == 0 {
            return Err(Error::Config("trials must be at least 1".into()));
        }
        if self.angles.iter().any(|a| !a.is_finite()) {
            return Err(Error::Config("scenario angles must be finite".into()));
        }
        Ok(())
    }

    /// Tolerance at or above unit magnitude: every unit component audits as absent.
    pub fn tolerance_is_degenerate(&self) -> bool {
        self.tolerance >= 1.0
    }
}

/// A real rounded to 15 significant digits on serialization.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd, Default)]
pub struct Real(pub f64);

pub fn round_sig15(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return if x == 0.0 { 0.0 } else { x };
    }
    format!("{x:.14e}").parse().unwrap_or(x)
}

impl Serialize for Real {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_f64(round_sig15(self.0))
    }
}

impl std::fmt::Display for Real {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&format_real(round_sig15(self.0)))
    }
}

/// Multivector serialized as a blade-name → coefficient map.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mv(pub Multivector);

impl Serialize for Mv {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(DIM))?;
        for blade in Blade::ALL {
            map.serialize_entry(blade.name(), &Real(self.0.coeff(blade)))?;
        }
        map.end()
    }
}

impl Mv {
    fn rounded(&self) -> Multivector {
        Multivector::from_coeffs(self.0.coeffs().map(round_sig15))
    }
}

impl std::fmt::Display for Mv {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.rounded())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Confirmed,
    Refuted,
    Informational,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Confirmed => "confirmed",
            Verdict::Refuted => "refuted",
            Verdict::Informational => "informational",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PairClass {
    Parallel,
    Orthogonal,
    Generic,
}

impl PairClass {
    fn of(a: &UnitVector3, b: &UnitVector3, tol: f64) -> Self {
        if a.cross(b).norm() <= tol {
            PairClass::Parallel
        } else if a.dot(b).abs() <= tol {
            PairClass::Orthogonal
        } else {
            PairClass::Generic
        }
    }

    /// Grades an expectation family must occupy for this pair geometry.
    pub fn expected_support(self, kind: MeasureKind) -> &'static [usize] {
        match (self, kind) {
            (PairClass::Parallel, MeasureKind::ScalarWeights) => &[0],
            (PairClass::Orthogonal, MeasureKind::ScalarWeights) => &[2],
            (PairClass::Generic, MeasureKind::ScalarWeights) => &[0, 2],
            (PairClass::Parallel, MeasureKind::DirectedTrivector) => &[3],
            (PairClass::Orthogonal, MeasureKind::DirectedTrivector) => &[1],
            (PairClass::Generic, MeasureKind::DirectedTrivector) => &[1, 3],
        }
    }
}

/// The fixed claim table: `(id, verdict line text, check performed)`.
pub const CLAIMS: [(&str, &str, &str); 9] = [
    (
        "product-identity",
        "product identity has scalar part -a.b and bivector part of size |a x b|",
        "identity form vs raw geometric product on random and audited pairs, both orientations",
    ),
    (
        "codomain-not-scalar",
        "expectation codomain spans several grades",
        "grade support of the expectation over the p-grid, per pair, product form and measure",
    ),
    (
        "orthogonal-null-not-scalar",
        "orthogonal settings cancel to a zero bivector, not a zero scalar",
        "term supports of the isotropic expectation for orthogonal pairs",
    ),
    (
        "non-isotropic-leak",
        "non-isotropic distributions leak non-scalar grades",
        "cross-term magnitude against |2p-1| |a x b| across the p-grid",
    ),
    (
        "directed-normalizes-to-trivector",
        "directed measure normalizes to trivector",
        "total mass of each measure at every grid point",
    ),
    (
        "directed-no-scalar-values",
        "directed functional attains no nonzero scalar",
        "grade-0 part of the directed expectation at every grid point",
    ),
    (
        "trivector-closure",
        "sums of trivectors stay trivectors",
        "grade support of summed directed atom weights",
    ),
    (
        "lhv-bound",
        "deterministic local strategies are bounded by 2",
        "exhaustive CHSH over the 16 deterministic strategies",
    ),
    (
        "scalarizations-obey-bell",
        "every registered local scalarization obeys |S| <= 2",
        "seeded Monte Carlo CHSH maximum per scalarizer",
    ),
];

#[derive(Clone, Debug, Serialize)]
pub struct ClaimMapEntry {
    pub id: &'static str,
    pub claim: &'static str,
    pub check: &'static str,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerdictLine {
    pub id: &'static str,
    pub claim: &'static str,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConfigEcho {
    pub tolerance: Real,
    pub p_step: Real,
    pub p_grid: Vec<Real>,
    pub angles: [Real; 4],
    pub trials: usize,
    pub seed: u64,
    pub axis: [Real; 3],
    pub degenerate_tolerance: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct PairInfo {
    pub label: String,
    pub a: [Real; 3],
    pub b: [Real; 3],
    pub class: PairClass,
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentityEntry {
    pub pair: String,
    pub lambda: i8,
    pub identity: Mv,
    pub raw: Mv,
    pub scalar_parts_agree: bool,
    pub bivector_parts_agree: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentityCheck {
    pub random_pairs: usize,
    pub max_scalar_error: Real,
    pub max_bivector_magnitude_error: Real,
    pub max_raw_scalar_error: Real,
    pub raw_lambda_independent: bool,
    pub identity_bivector_flips_with_lambda: bool,
    pub per_pair: Vec<IdentityEntry>,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct GradeSupportEntry {
    pub pair: String,
    pub form: ProductForm,
    pub measure: MeasureKind,
    pub grades: Vec<usize>,
    pub expected: Vec<usize>,
    pub matches: bool,
    pub max_magnitudes: [Real; 4],
    pub isotropic_value: Mv,
    pub isotropic_display: String,
    pub isotropic_term_grades: Vec<usize>,
    /// Max deviation of the cross-term magnitude from its predicted value.
    pub cross_term_error: Real,
}

#[derive(Clone, Debug, Serialize)]
pub struct Normalization {
    pub scalar_total: Real,
    pub scalar_total_multivector: Mv,
    pub scalar_valid: bool,
    pub directed_total: Real,
    pub directed_total_multivector: Mv,
    pub directed_total_grades: Vec<usize>,
    pub directed_valid: bool,
    /// Each total identical at every grid point.
    pub totals_constant_over_grid: bool,
    /// Both measures are valid probability measures.
    pub valid: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ProbePoint {
    pub pair: String,
    pub form: ProductForm,
    pub p: Real,
    pub value: Mv,
}

#[derive(Clone, Debug, Serialize)]
pub struct FunctionalRange {
    pub measure: MeasureKind,
    pub max_abs_scalar: Real,
    pub nonzero_scalar_attained: bool,
    pub zero_attained: bool,
    pub points: Vec<ProbePoint>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ScalarizerResult {
    pub id: String,
    pub max_abs_s: Real,
    pub within_bound: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ChshSection {
    pub angles: [Real; 4],
    pub lhv_bound: Real,
    pub strategies: usize,
    pub trials: usize,
    pub seed: u64,
    pub scalarizers: Vec<ScalarizerResult>,
    pub quantum_target_s: Real,
    pub quantum_exceeds_lhv: bool,
    /// Grade support of the full scalar-measure expectation over the
    /// scenario's four setting pairs: what the grade-0 target discards.
    pub full_expectation_grades: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AuditReport {
    pub config: ConfigEcho,
    pub claim_map: Vec<ClaimMapEntry>,
    pub pairs: Vec<PairInfo>,
    pub identity_check: IdentityCheck,
    pub grade_support: Vec<GradeSupportEntry>,
    pub normalization: Normalization,
    pub functional_range: FunctionalRange,
    pub chsh: ChshSection,
    pub verdicts: Vec<VerdictLine>,
}

impl AuditReport {
    pub fn all_confirmed(&self) -> bool {
        self.verdicts
            .iter()
            .all(|v| v.verdict == Verdict::Confirmed)
    }

    /// 0 when every claim is confirmed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.all_confirmed() {
            0
        } else {
            1
        }
    }

    pub fn verdict(&self, id: &str) -> Option<Verdict> {
        self.verdicts.iter().find(|v| v.id == id).map(|v| v.verdict)
    }
}

struct Pair {
    label: String,
    a: UnitVector3,
    b: UnitVector3,
    class: PairClass,
}

fn vec3(v: &Vector3) -> [Real; 3] {
    [Real(v.x), Real(v.y), Real(v.z)]
}

fn default_pairs() -> Vec<(String, UnitVector3, UnitVector3)> {
    let diag = UnitVector3::normalize(Vector3::new(1.0, 1.0, 0.0)).expect("nonzero");
    vec![
        ("e1,e2".into(), UnitVector3::E1, UnitVector3::E2),
        ("e1,e1".into(), UnitVector3::E1, UnitVector3::E1),
        ("e1,(e1+e2)/sqrt2".into(), UnitVector3::E1, diag),
    ]
}

fn audited_pairs(config: &AuditConfig) -> Result<Vec<Pair>> {
    let mut raw = default_pairs();
    for (a, b) in &config.pairs {
        let ua = UnitVector3::ingest(*a).map_err(|e| Error::Config(e.to_string()))?;
        let ub = UnitVector3::ingest(*b).map_err(|e| Error::Config(e.to_string()))?;
        raw.push((format!("{a},{b}"), ua, ub));
    }
    Ok(raw
        .into_iter()
        .map(|(label, a, b)| Pair {
            class: PairClass::of(&a, &b, config.tolerance),
            label,
            a,
            b,
        })
        .collect())
}

fn identity_check(pairs: &[Pair], seed: u64) -> IdentityCheck {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut max_scalar = 0.0_f64;
    let mut max_bivector = 0.0_f64;
    let mut max_raw_scalar = 0.0_f64;
    let mut raw_independent = true;
    let mut flips = true;

    let mut record = |a: &UnitVector3, b: &UnitVector3| {
        let target = -a.dot(b);
        let cross_mag = a.cross(b).norm();
        for hv in HiddenVariable::BOTH {
            let id = ProductForm::Identity.apply(a, b, hv);
            let raw = ProductForm::Raw.apply(a, b, hv);
            max_scalar = max_scalar.max((id.scalar_part() - target).abs());
            max_raw_scalar = max_raw_scalar.max((raw.scalar_part() - target).abs());
            let mag = id.grade_magnitude(2).expect("grade 2");
            max_bivector = max_bivector.max((mag - cross_mag).abs());
        }
        let raw_plus = ProductForm::Raw.apply(a, b, HiddenVariable::Plus);
        let raw_minus = ProductForm::Raw.apply(a, b, HiddenVariable::Minus);
        raw_independent &= raw_plus == raw_minus;
        let id_plus = ProductForm::Identity.apply(a, b, HiddenVariable::Plus);
        let id_minus = ProductForm::Identity.apply(a, b, HiddenVariable::Minus);
        let (bp, bm) = (id_plus.grade(2).unwrap(), id_minus.grade(2).unwrap());
        flips &= bp == -bm;
    };

    for _ in 0..IDENTITY_SAMPLE {
        let a = random_unit(&mut rng);
        let b = random_unit(&mut rng);
        record(&a, &b);
    }
    for p in pairs {
        record(&p.a, &p.b);
    }

    let per_pair = pairs
        .iter()
        .flat_map(|p| {
            HiddenVariable::BOTH.map(|hv| {
                let id = ProductForm::Identity.apply(&p.a, &p.b, hv);
                let raw = ProductForm::Raw.apply(&p.a, &p.b, hv);
                IdentityEntry {
                    pair: p.label.clone(),
                    lambda: hv.lambda() as i8,
                    identity: Mv(id),
                    raw: Mv(raw),
                    scalar_parts_agree: id.scalar_part() == raw.scalar_part(),
                    bivector_parts_agree: id.grade(2).unwrap() == raw.grade(2).unwrap(),
                }
            })
        })
        .collect();

    IdentityCheck {
        random_pairs: IDENTITY_SAMPLE,
        max_scalar_error: Real(max_scalar),
        max_bivector_magnitude_error: Real(max_bivector),
        max_raw_scalar_error: Real(max_raw_scalar),
        raw_lambda_independent: raw_independent,
        identity_bivector_flips_with_lambda: flips,
        per_pair,
        holds: max_scalar <= 1e-12 && max_bivector <= 1e-12,
    }
}

fn cross_term_error(
    pair: &Pair,
    form: ProductForm,
    kind: MeasureKind,
    grid: &[f64],
    tol: f64,
) -> Result<f64> {
    let cross_mag = pair.a.cross(&pair.b).norm();
    let grade = match kind {
        MeasureKind::ScalarWeights => 2,
        MeasureKind::DirectedTrivector => 1,
    };
    let mut worst = 0.0_f64;
    for &p in grid {
        let dist = OrientationDistribution::new(p)?;
        let r = expectation_with_tol(&form, &pair.a, &pair.b, &dist, kind, tol)?;
        let predicted = match form {
            ProductForm::Identity => (2.0 * p - 1.0).abs() * cross_mag,
            ProductForm::Raw => cross_mag,
        };
        worst = worst.max((r.value.grade_magnitude(grade)? - predicted).abs());
    }
    Ok(worst)
}

fn grade_support_entries(pairs: &[Pair], grid: &[f64], tol: f64) -> Result<Vec<GradeSupportEntry>> {
    let mut out = Vec::new();
    for pair in pairs {
        for form in ProductForm::ALL {
            for kind in MeasureKind::ALL {
                let support = codomain_support(&form, &pair.a, &pair.b, kind, grid, tol)?;
                let expected = pair.class.expected_support(kind);
                let iso = expectation_with_tol(
                    &form,
                    &pair.a,
                    &pair.b,
                    &OrientationDistribution::ISOTROPIC,
                    kind,
                    tol,
                )?;
                out.push(GradeSupportEntry {
                    pair: pair.label.clone(),
                    form,
                    measure: kind,
                    grades: support.grades(),
                    expected: expected.to_vec(),
                    matches: support.is_exactly(expected),
                    max_magnitudes: support.magnitudes().map(Real),
                    isotropic_value: Mv(iso.value),
                    isotropic_display: Mv(iso.value).rounded().annotated(&iso.term_support),
                    isotropic_term_grades: iso.term_support.grades(),
                    cross_term_error: Real(cross_term_error(pair, form, kind, grid, tol)?),
                });
            }
        }
    }
    Ok(out)
}

fn normalization(grid: &[f64], tol: f64) -> Result<(Normalization, bool)> {
    let dists: Vec<_> = grid
        .iter()
        .map(|&p| OrientationDistribution::new(p))
        .collect::<Result<_>>()?;
    let iso = OrientationDistribution::ISOTROPIC;
    let scalar = measure_total(&iso, MeasureKind::ScalarWeights);
    let directed = measure_total(&iso, MeasureKind::DirectedTrivector);
    let constant = dists.iter().all(|d| {
        measure_total(d, MeasureKind::ScalarWeights) == scalar
            && measure_total(d, MeasureKind::DirectedTrivector) == directed
    });
    let directed_support = grade_audit(&directed, tol)?;

    let mut closure = true;
    for d in &dists {
        let mut acc = Multivector::ZERO;
        for (_, p) in d.atoms() {
            acc += MeasureKind::DirectedTrivector.atom_weight(p);
            closure &= grade_audit(&acc, tol)?.is_subset_of(&[3]);
        }
    }

    let scalar_valid = scalar.approx_eq(&Multivector::ONE, tol);
    let directed_valid = directed.approx_eq(&Multivector::ONE, tol);
    Ok((
        Normalization {
            scalar_total: Real(scalar.scalar_part()),
            scalar_total_multivector: Mv(scalar),
            scalar_valid,
            directed_total: Real(directed.coeff(Blade::E123)),
            directed_total_multivector: Mv(directed),
            directed_total_grades: directed_support.grades(),
            directed_valid,
            totals_constant_over_grid: constant,
            valid: scalar_valid && directed_valid,
        },
        closure,
    ))
}

fn functional_range(pairs: &[Pair], grid: &[f64], tol: f64) -> Result<FunctionalRange> {
    let kind = MeasureKind::DirectedTrivector;
    let mut points = Vec::new();
    let mut max_abs_scalar = 0.0_f64;
    let mut zero_attained = false;
    for pair in pairs {
        for form in ProductForm::ALL {
            for (p, value) in functional_range_probe(&form, &pair.a, &pair.b, kind, grid)? {
                max_abs_scalar = max_abs_scalar.max(value.scalar_part().abs());
                zero_attained |= value.max_abs_diff(&Multivector::ZERO) <= tol;
                points.push(ProbePoint {
                    pair: pair.label.clone(),
                    form,
                    p: Real(p),
                    value: Mv(value),
                });
            }
        }
    }
    Ok(FunctionalRange {
        measure: kind,
        max_abs_scalar: Real(max_abs_scalar),
        nonzero_scalar_attained: max_abs_scalar > tol,
        zero_attained,
        points,
    })
}

fn chsh_section(config: &AuditConfig, grid: &[f64]) -> Result<ChshSection> {
    let sc = ChshScenario::from_angles_deg(config.angles);
    let axis = UnitVector3::ingest(config.axis).map_err(|e| Error::Config(e.to_string()))?;
    let registry = ScalarizerRegistry::standard(axis);
    let mut scalarizers = Vec::new();
    for (i, s) in registry.iter().enumerate() {
        let max = scalarizer_audit(s, config.trials, config.seed.wrapping_add(i as u64))?;
        scalarizers.push(ScalarizerResult {
            id: s.id().to_string(),
            max_abs_s: Real(max),
            within_bound: max <= LHV_BOUND + config.tolerance,
        });
    }
    let s_quantum = chsh(quantum_target, &sc);

    let mut full = GradeSupport::empty();
    for (a, b) in [
        (sc.a, sc.b),
        (sc.a, sc.b_prime),
        (sc.a_prime, sc.b),
        (sc.a_prime, sc.b_prime),
    ] {
        let s = codomain_support(
            &ProductForm::Identity,
            &a,
            &b,
            MeasureKind::ScalarWeights,
            grid,
            config.tolerance,
        )?;
        full = full.union(&s);
    }

    Ok(ChshSection {
        angles: config.angles.map(Real),
        lhv_bound: Real(lhv_bruteforce_bound(&sc)),
        strategies: DeterministicStrategy::all().count(),
        trials: config.trials,
        seed: config.seed,
        scalarizers,
        quantum_target_s: Real(s_quantum),
        quantum_exceeds_lhv: s_quantum.abs() > LHV_BOUND + config.tolerance,
        full_expectation_grades: full.grades(),
    })
}

/// Runs every check. Deterministic given the config.
pub fn run_audit(config: &AuditConfig) -> Result<AuditReport> {
    config.validate()?;
    let tol = config.tolerance;
    let grid = p_grid(config.p_step)?;
    let pairs = audited_pairs(config)?;

    let identity = identity_check(&pairs, config.seed);
    let supports = grade_support_entries(&pairs, &grid, tol)?;
    let (norm, closure) = normalization(&grid, tol)?;
    let range = functional_range(&pairs, &grid, tol)?;
    let chsh = chsh_section(config, &grid)?;

    let identity_ok = identity.holds && identity.raw_lambda_independent;
    let codomain_ok = supports.iter().all(|e| e.matches)
        && supports.iter().any(|e| e.grades.iter().any(|&g| g != 0));
    let orthogonal: Vec<_> = supports
        .iter()
        .filter(|e| {
            e.form == ProductForm::Identity
                && pairs
                    .iter()
                    .any(|p| p.label == e.pair && p.class == PairClass::Orthogonal)
        })
        .collect();
    let orthogonal_ok = !orthogonal.is_empty()
        && orthogonal.iter().all(|e| {
            let grade = match e.measure {
                MeasureKind::ScalarWeights => 2,
                MeasureKind::DirectedTrivector => 1,
            };
            e.isotropic_value.0.is_zero() && e.isotropic_term_grades == [grade]
        });
    let leak_ok = supports
        .iter()
        .filter(|e| e.form == ProductForm::Identity)
        .all(|e| e.cross_term_error.0 <= tol);
    let normalization_ok = norm.directed_total_grades == [3]
        && norm.directed_total.0 == 1.0
        && !norm.directed_valid
        && norm.scalar_valid
        && norm.totals_constant_over_grid;
    let range_ok = !range.nonzero_scalar_attained;
    let lhv_ok = chsh.lhv_bound.0 == LHV_BOUND && chsh.strategies == 16;
    let bell_ok = chsh.scalarizers.iter().all(|s| s.within_bound);

    let outcomes = [
        identity_ok,
        codomain_ok,
        orthogonal_ok,
        leak_ok,
        normalization_ok,
        range_ok,
        closure,
        lhv_ok,
        bell_ok,
    ];
    let degenerate = config.tolerance_is_degenerate();
    let verdicts = CLAIMS
        .iter()
        .zip(outcomes)
        .map(|(&(id, claim, _), ok)| VerdictLine {
            id,
            claim,
            verdict: match (degenerate, ok) {
                (true, _) => Verdict::Informational,
                (false, true) => Verdict::Confirmed,
                (false, false) => Verdict::Refuted,
            },
        })
        .collect();

    Ok(AuditReport {
        config: ConfigEcho {
            tolerance: Real(tol),
            p_step: Real(config.p_step),
            p_grid: grid.iter().copied().map(Real).collect(),
            angles: config.angles.map(Real),
            trials: config.trials,
            seed: config.seed,
            axis: vec3(&config.axis),
            degenerate_tolerance: degenerate,
        },
        claim_map: CLAIMS
            .iter()
            .map(|&(id, claim, check)| ClaimMapEntry { id, claim, check })
            .collect(),
        pairs: pairs
            .iter()
            .map(|p| PairInfo {
                label: p.label.clone(),
                a: vec3(&p.a),
                b: vec3(&p.b),
                class: p.class,
            })
            .collect(),
        identity_check: identity,
        grade_support: supports,
        normalization: norm,
        functional_range: range,
        chsh,
        verdicts,
    })
}

fn grades(g: &[usize]) -> String {
    let s: Vec<String> = g.iter().map(|k| k.to_string()).collect();
    format!("{{{}}}", s.join(", "))
}

pub fn emit<W: Write>(report: &AuditReport, format: OutputFormat, out: &mut W) -> io::Result<()> {
    match format {
        OutputFormat::Json => {
            serde_json::to_writer_pretty(&mut *out, report)?;
            writeln!(out)
        }
        OutputFormat::Text => emit_text(report, out),
    }
}

fn emit_text<W: Write>(r: &AuditReport, out: &mut W) -> io::Result<()> {
    let c = &r.config;
    writeln!(out, "g3bell audit report")?;
    writeln!(
        out,
        "tolerance {}, p-grid {} points (step {}), seed {}, trials {}",
        c.tolerance,
        c.p_grid.len(),
        c.p_step,
        c.seed,
        c.trials
    )?;
    if c.degenerate_tolerance {
        writeln!(
            out,
            "warning: tolerance >= 1 hides unit-size components; verdicts are informational"
        )?;
    }
    writeln!(out)?;
    writeln!(out, "claim map:")?;
    for e in &r.claim_map {
        writeln!(out, "  {:<34} {}", e.id, e.check)?;
    }

    let id = &r.identity_check;
    writeln!(out)?;
    writeln!(out, "identity check:")?;
    writeln!(
        out,
        "  {} random pairs: max scalar error {}, max bivector magnitude error {}",
        id.random_pairs, id.max_scalar_error, id.max_bivector_magnitude_error
    )?;
    writeln!(
        out,
        "  raw product independent of lambda: {}; identity bivector flips with lambda: {}",
        id.raw_lambda_independent, id.identity_bivector_flips_with_lambda
    )?;
    for e in &id.per_pair {
        writeln!(
            out,
            "  ({}) lambda {:+}: identity {}, raw {}",
            e.pair, e.lambda, e.identity, e.raw
        )?;
    }

    writeln!(out)?;
    writeln!(out, "grade support over the p-grid:")?;
    for e in &r.grade_support {
        writeln!(
            out,
            "  ({}) {} {}: {} expected {}; isotropic value {}",
            e.pair,
            e.form.name(),
            e.measure.name(),
            grades(&e.grades),
            grades(&e.expected),
            e.isotropic_display
        )?;
    }

    let n = &r.normalization;
    writeln!(out)?;
    writeln!(out, "normalization:")?;
    writeln!(
        out,
        "  scalar measure total {} (valid probability measure: {})",
        n.scalar_total_multivector, n.scalar_valid
    )?;
    writeln!(
        out,
        "  directed measure total {} grades {} (valid probability measure: {})",
        n.directed_total_multivector,
        grades(&n.directed_total_grades),
        n.directed_valid
    )?;

    let f = &r.functional_range;
    writeln!(out)?;
    writeln!(out, "functional range under the directed measure:")?;
    writeln!(
        out,
        "  {} sweep points, max |scalar part| {}, zero attained: {}",
        f.points.len(),
        f.max_abs_scalar,
        f.zero_attained
    )?;

    let ch = &r.chsh;
    writeln!(out)?;
    writeln!(
        out,
        "chsh (angles {}, {}, {}, {} deg):",
        ch.angles[0], ch.angles[1], ch.angles[2], ch.angles[3]
    )?;
    writeln!(
        out,
        "  deterministic bound over {} strategies: {}",
        ch.strategies, ch.lhv_bound
    )?;
    for s in &ch.scalarizers {
        writeln!(
            out,
            "  scalarizer {}: max |S| {} over {} trials",
            s.id, s.max_abs_s, ch.trials
        )?;
    }
    writeln!(
        out,
        "  grade-0 target S = {} (full expectation grades {})",
        ch.quantum_target_s,
        grades(&ch.full_expectation_grades)
    )?;

    writeln!(out)?;
    writeln!(out, "verdicts:")?;
    for v in &r.verdicts {
        writeln!(out, "{}: {}", v.claim, v.verdict.as_str())?;
    }
    writeln!(
        out,
        "grade-0 target exceeds the local bound but is not a statistical correlation: {}",
        Verdict::Informational.as_str()
    )
}
