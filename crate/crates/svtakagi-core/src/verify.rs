//! Hypothesis checks, conclusion checks at dyadic parameters, the inductive
//! proof-chain oracle, and precondition validators.
//!
//! Everything here reduces to exact polyhedral subset tests.  The Jensen
//! checks test the midpoint inclusions; the conclusion checks test the
//! t-parameterized inclusions with truncated transforms at level
//! `max(depth(t), 1)`; the oracles replay the bisection induction step by
//! step and reassemble the conclusion sets independently, so agreement
//! between the two paths is itself a checkable property.
//!
//! A failing record always carries a witness: a generator of the left-hand
//! set (or, for precondition records, of the offending value) that escapes
//! the right-hand set.  Missing tabulated points produce `coverage-gap`
//! records, counted as skipped rather than failed.

use crate::error::{Error, Result};
use crate::exactgeom::{
    contains_point, minkowski_sum, scale, subset, Cone, Polyhedron, RationalVector,
    SubsetOutcome,
};
use crate::rational::{format_rational, pow2, rat, Rational};
use crate::svmap::{takagi_transform_truncated, DomainGrid, ErrorMap, SetValuedMap};
use crate::takagi::DyadicRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

/// Which of the two theorems a scenario exercises.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Convex,
    Concave,
}

/// A tested `(x, y)` pair together with its dyadic parameter list.
#[derive(Clone, Debug)]
pub struct TestPair {
    pub x: RationalVector,
    pub y: RationalVector,
    pub t_list: Vec<DyadicRational>,
}

impl TestPair {
    pub fn difference(&self) -> RationalVector {
        self.x.sub(&self.y)
    }
}

/// Radius of the box `[-r, r]^d` added to right-hand sides; `0` is exact.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SlackBox {
    radius: Rational,
}

impl SlackBox {
    pub fn new(radius: Rational) -> Result<Self> {
        if radius < Rational::zero() {
            return Err(Error::NegativeSlack {
                radius: format_rational(&radius),
            });
        }
        Ok(SlackBox { radius })
    }

    pub fn zero() -> Self {
        SlackBox {
            radius: Rational::zero(),
        }
    }

    pub fn radius(&self) -> &Rational {
        &self.radius
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CheckKind {
    JensenConvex,
    JensenConcave,
    ConclusionConvex,
    ConclusionConcave,
    OracleSplit,
    OracleJensen,
    OracleMerge,
    OracleAbsorption,
    OracleEquivalence,
    PreconditionLowerBound,
    PreconditionUpperBound,
    PreconditionKConvexity,
    CoverageGap,
}

impl CheckKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            CheckKind::JensenConvex => "jensen-convex",
            CheckKind::JensenConcave => "jensen-concave",
            CheckKind::ConclusionConvex => "conclusion-convex",
            CheckKind::ConclusionConcave => "conclusion-concave",
            CheckKind::OracleSplit => "oracle-split",
            CheckKind::OracleJensen => "oracle-jensen",
            CheckKind::OracleMerge => "oracle-merge",
            CheckKind::OracleAbsorption => "oracle-absorption",
            CheckKind::OracleEquivalence => "oracle-equivalence",
            CheckKind::PreconditionLowerBound => "precondition-lower-bound",
            CheckKind::PreconditionUpperBound => "precondition-upper-bound",
            CheckKind::PreconditionKConvexity => "precondition-k-convexity",
            CheckKind::CoverageGap => "coverage-gap",
        }
    }
}

/// One verification step.  Witness coordinates live in the value space for
/// inclusion checks and in the generator space of the offending value for
/// precondition checks.
#[derive(Clone, Debug)]
pub struct CheckRecord {
    pub kind: CheckKind,
    pub pair: Option<usize>,
    pub t: Option<DyadicRational>,
    pub pass: bool,
    pub witness: Option<RationalVector>,
    pub slack: Rational,
    pub level: Option<u32>,
}

impl CheckRecord {
    fn from_outcome(
        kind: CheckKind,
        pair: Option<usize>,
        t: Option<DyadicRational>,
        outcome: SubsetOutcome,
        slack: Rational,
        level: Option<u32>,
    ) -> Self {
        let pass = outcome.holds();
        let witness = outcome.witness().map(|w| w.generator.clone());
        CheckRecord {
            kind,
            pair,
            t,
            pass,
            witness,
            slack,
            level,
        }
    }

    fn gap(pair: Option<usize>, t: Option<DyadicRational>) -> Self {
        CheckRecord {
            kind: CheckKind::CoverageGap,
            pair,
            t,
            pass: true,
            witness: None,
            slack: Rational::zero(),
            level: None,
        }
    }

    pub fn is_gap(&self) -> bool {
        self.kind == CheckKind::CoverageGap
    }
}

#[derive(Serialize)]
struct CheckRecordRepr {
    kind: &'static str,
    pair: Option<[usize; 1]>,
    t: Option<String>,
    pass: bool,
    witness: Option<Vec<String>>,
    slack: String,
    level: Option<u32>,
}

impl Serialize for CheckRecord {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        CheckRecordRepr {
            kind: self.kind.as_str(),
            pair: self.pair.map(|i| [i]),
            t: self.t.as_ref().map(|t| format_rational(&t.value())),
            pass: self.pass,
            witness: self.witness.as_ref().map(|w| w.to_strings()),
            slack: format_rational(&self.slack),
            level: self.level,
        }
        .serialize(serializer)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

/// All records for one scenario, in deterministic (pair, t) order.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub scenario: String,
    pub checks: Vec<CheckRecord>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn from_checks(scenario: impl Into<String>, checks: Vec<CheckRecord>) -> Self {
        let mut summary = Summary::default();
        for c in &checks {
            if c.is_gap() {
                summary.skipped += 1;
            } else if c.pass {
                summary.pass += 1;
            } else {
                summary.fail += 1;
            }
        }
        VerificationReport {
            scenario: scenario.into(),
            checks,
            summary,
        }
    }

    pub fn passed(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialization");
        s.push('\n');
        s
    }
}

/// Evaluates an expression that may legitimately hit a missing tabulated
/// point; such gaps are reported, all other errors propagate.
macro_rules! try_gap {
    ($expr:expr, $gap:expr) => {
        match $expr {
            Ok(v) => v,
            Err(Error::MissingTableEntry { .. }) => return Ok($gap),
            Err(e) => return Err(e),
        }
    };
}

fn half() -> Rational {
    rat(1, 2)
}

/// `(F(x) + F(y)) / 2 + A(x - y)  <=  F((x+y)/2) + B(x - y)` per pair.
pub fn check_jensen_convex(
    f: &SetValuedMap,
    a: &ErrorMap,
    b: &ErrorMap,
    pairs: &[TestPair],
) -> Result<Vec<CheckRecord>> {
    pairs
        .iter()
        .enumerate()
        .map(|(i, pair)| jensen_record(f, a, b, pair, i, Mode::Convex))
        .collect()
}

/// `F((x+y)/2) + A(x - y)  <=  (F(x) + F(y)) / 2 + B(x - y)` per pair.
pub fn check_jensen_concave(
    f: &SetValuedMap,
    a: &ErrorMap,
    b: &ErrorMap,
    pairs: &[TestPair],
) -> Result<Vec<CheckRecord>> {
    pairs
        .iter()
        .enumerate()
        .map(|(i, pair)| jensen_record(f, a, b, pair, i, Mode::Concave))
        .collect()
}

fn jensen_record(
    f: &SetValuedMap,
    a: &ErrorMap,
    b: &ErrorMap,
    pair: &TestPair,
    idx: usize,
    mode: Mode,
) -> Result<CheckRecord> {
    let gap = CheckRecord::gap(Some(idx), None);
    let u = pair.difference();
    let fx = try_gap!(f.evaluate(&pair.x), gap);
    let fy = try_gap!(f.evaluate(&pair.y), gap);
    let fm = try_gap!(f.evaluate(&RationalVector::midpoint(&pair.x, &pair.y)), gap);
    let au = try_gap!(a.evaluate(&u), gap);
    let bu = try_gap!(b.evaluate(&u), gap);
    let average = scale(&minkowski_sum(&fx, &fy)?, &half())?;
    let (kind, left, right) = match mode {
        Mode::Convex => (
            CheckKind::JensenConvex,
            minkowski_sum(&average, &au)?,
            minkowski_sum(&fm, &bu)?,
        ),
        Mode::Concave => (
            CheckKind::JensenConcave,
            minkowski_sum(&fm, &au)?,
            minkowski_sum(&average, &bu)?,
        ),
    };
    let outcome = subset(&left, &right, &Rational::zero())?;
    Ok(CheckRecord::from_outcome(
        kind,
        Some(idx),
        None,
        outcome,
        Rational::zero(),
        None,
    ))
}

/// Result of a conclusion check: the record plus the two sides of the
/// inclusion (absent when a coverage gap prevented assembly), kept so the
/// oracle's independently derived sets can be compared against them.
#[derive(Clone, Debug)]
pub struct ConclusionOutcome {
    pub record: CheckRecord,
    pub sets: Option<(Polyhedron, Polyhedron)>,
}

/// `t F(x) + (1-t) F(y) + A^T(t, x-y)  <=  F(tx+(1-t)y) + B^T(t, x-y)` with
/// transforms truncated at `max(depth(t), 1)`.
pub fn check_conclusion_convex(
    f: &SetValuedMap,
    a: &ErrorMap,
    b: &ErrorMap,
    pair: &TestPair,
    idx: usize,
    t: &DyadicRational,
    slack: &SlackBox,
) -> Result<ConclusionOutcome> {
    conclusion(f, a, b, pair, idx, t, slack, Mode::Convex)
}

/// `F(tx+(1-t)y) + A^T(t, x-y)  <=  t F(x) + (1-t) F(y) + B^T(t, x-y)`.
pub fn check_conclusion_concave(
    f: &SetValuedMap,
    a: &ErrorMap,
    b: &ErrorMap,
    pair: &TestPair,
    idx: usize,
    t: &DyadicRational,
    slack: &SlackBox,
) -> Result<ConclusionOutcome> {
    conclusion(f, a, b, pair, idx, t, slack, Mode::Concave)
}

#[allow(clippy::too_many_arguments)]
fn conclusion(
    f: &SetValuedMap,
    a: &ErrorMap,
    b: &ErrorMap,
    pair: &TestPair,
    idx: usize,
    t: &DyadicRational,
    slack: &SlackBox,
    mode: Mode,
) -> Result<ConclusionOutcome> {
    if !t.in_unit_interval() {
        return Err(Error::ParameterRange { t: t.to_string() });
    }
    let level = t.depth().max(1);
    let gap = ConclusionOutcome {
        record: CheckRecord::gap(Some(idx), Some(*t)),
        sets: None,
    };
    let u = pair.difference();
    let tv = t.value();
    let z = RationalVector::combine(&tv, &pair.x, &pair.y);
    let fx = try_gap!(f.evaluate(&pair.x), gap);
    let fy = try_gap!(f.evaluate(&pair.y), gap);
    let fz = try_gap!(f.evaluate(&z), gap);
    let ta = try_gap!(takagi_transform_truncated(a, &tv, &u, level), gap);
    let tb = try_gap!(takagi_transform_truncated(b, &tv, &u, level), gap);
    let combination = minkowski_sum(
        &scale(&fx, &tv)?,
        &scale(&fy, &(Rational::one() - &tv))?,
    )?;
    let (kind, left, right) = match mode {
        Mode::Convex => (
            CheckKind::ConclusionConvex,
            minkowski_sum(&combination, &ta)?,
            minkowski_sum(&fz, &tb)?,
        ),
        Mode::Concave => (
            CheckKind::ConclusionConcave,
            minkowski_sum(&fz, &ta)?,
            minkowski_sum(&combination, &tb)?,
        ),
    };
    let outcome = subset(&left, &right, slack.radius())?;
    let record = CheckRecord::from_outcome(
        kind,
        Some(idx),
        Some(*t),
        outcome,
        slack.radius().clone(),
        Some(level),
    );
    Ok(ConclusionOutcome {
        record,
        sets: Some((left, right)),
    })
}

/// Result of replaying the proof chain: step records plus independently
/// reassembled conclusion sides (absent on coverage gaps).
#[derive(Clone, Debug)]
pub struct OracleOutcome {
    pub records: Vec<CheckRecord>,
    pub sets: Option<(Polyhedron, Polyhedron)>,
}

impl OracleOutcome {
    pub fn passed(&self) -> bool {
        self.records.iter().all(|r| r.pass)
    }

    fn gap(idx: usize, t: DyadicRational) -> Self {
        OracleOutcome {
            records: vec![CheckRecord::gap(Some(idx), Some(t))],
            sets: None,
        }
    }
}

/// Replays the bisection induction behind the convexity theorem at dyadic
/// `t`: at every level the value split and the corresponding Jensen
/// instance are verified exactly, the per-level error terms are
/// accumulated, and the exact transform tails are attached at the end.
pub fn inductive_oracle_convex(
    f: &SetValuedMap,
    a: &ErrorMap,
    b: &ErrorMap,
    pair: &TestPair,
    idx: usize,
    t: &DyadicRational,
) -> Result<OracleOutcome> {
    oracle(f, a, b, None, pair, idx, t, Mode::Convex)
}

/// Concave mirror; `k` is the cone named by the theorem (the recession
/// cone of the `B` family), consumed by the per-level merge checks and the
/// final absorption.
pub fn inductive_oracle_concave(
    f: &SetValuedMap,
    a: &ErrorMap,
    b: &ErrorMap,
    k: &Cone,
    pair: &TestPair,
    idx: usize,
    t: &DyadicRational,
) -> Result<OracleOutcome> {
    oracle(f, a, b, Some(k), pair, idx, t, Mode::Concave)
}

#[allow(clippy::too_many_arguments)]
fn oracle(
    f: &SetValuedMap,
    a: &ErrorMap,
    b: &ErrorMap,
    k: Option<&Cone>,
    pair: &TestPair,
    idx: usize,
    t: &DyadicRational,
    mode: Mode,
) -> Result<OracleOutcome> {
    if !t.in_unit_interval() {
        return Err(Error::ParameterRange { t: t.to_string() });
    }
    let m = t.depth();
    let gap = OracleOutcome::gap(idx, *t);
    let zero = Rational::zero();
    let u = pair.difference();
    let tv = t.value();
    let z = RationalVector::combine(&tv, &pair.x, &pair.y);
    let fz = try_gap!(f.evaluate(&z), gap);
    let fx = try_gap!(f.evaluate(&pair.x), gap);
    let fy = try_gap!(f.evaluate(&pair.y), gap);

    let mut records = Vec::new();
    let mut terms_a: Option<Polyhedron> = None;
    let mut terms_b: Option<Polyhedron> = None;
    let mut cur = *t;
    for level in 0..m {
        let cv = cur.value();
        let low_branch = cv <= half();
        // the value being split and the Jensen partner for this branch
        let (split_set, split_coef, partner, jensen_pair) = if low_branch {
            let xp = RationalVector::combine(&(rat(2, 1) * &cv), &pair.x, &pair.y);
            (&fy, Rational::one() - rat(2, 1) * &cv, xp.clone(), (xp, pair.y.clone()))
        } else {
            let yp =
                RationalVector::combine(&(rat(2, 1) * &cv - Rational::one()), &pair.x, &pair.y);
            (&fx, rat(2, 1) * &cv - Rational::one(), yp.clone(), (pair.x.clone(), yp))
        };
        let f_partner = try_gap!(f.evaluate(&partner), gap);
        let arg = u.scale(&(rat(2, 1) * crate::takagi::dist_to_integers(&cv)));
        let a_arg = try_gap!(a.evaluate(&arg), gap);
        let b_arg = try_gap!(b.evaluate(&arg), gap);
        let mid = RationalVector::combine(&cv, &pair.x, &pair.y);
        let f_mid = try_gap!(f.evaluate(&mid), gap);

        match mode {
            Mode::Convex => {
                // split: (1-t) F(y) <= ((1-2t)/2) F(y) + (1/2) F(y), mirrored
                let whole = if low_branch {
                    Rational::one() - &cv
                } else {
                    cv.clone()
                };
                let split_left = scale(split_set, &whole)?;
                let split_right = minkowski_sum(
                    &scale(split_set, &(&split_coef * half()))?,
                    &scale(split_set, &half())?,
                )?;
                records.push(CheckRecord::from_outcome(
                    CheckKind::OracleSplit,
                    Some(idx),
                    Some(*t),
                    subset(&split_left, &split_right, &zero)?,
                    zero.clone(),
                    Some(level),
                ));
                // Jensen instance whose midpoint is the current combination
                let (px, py) = &jensen_pair;
                debug_assert_eq!(RationalVector::midpoint(px, py), mid);
                let average =
                    scale(&minkowski_sum(&f_partner, split_set)?, &half())?;
                let jensen_left = minkowski_sum(&average, &a_arg)?;
                let jensen_right = minkowski_sum(&f_mid, &b_arg)?;
                records.push(CheckRecord::from_outcome(
                    CheckKind::OracleJensen,
                    Some(idx),
                    Some(*t),
                    subset(&jensen_left, &jensen_right, &zero)?,
                    zero.clone(),
                    Some(level),
                ));
            }
            Mode::Concave => {
                let jensen_left = minkowski_sum(&f_mid, &a_arg)?;
                let average =
                    scale(&minkowski_sum(&f_partner, split_set)?, &half())?;
                let jensen_right = minkowski_sum(&average, &b_arg)?;
                records.push(CheckRecord::from_outcome(
                    CheckKind::OracleJensen,
                    Some(idx),
                    Some(*t),
                    subset(&jensen_left, &jensen_right, &zero)?,
                    zero.clone(),
                    Some(level),
                ));
                // merge: (1-2t) F(y) + F(y) <= (2-2t) F(y) + K, mirrored
                let k_poly = k.expect("concave oracle requires the cone").as_polyhedron();
                let merge_left =
                    minkowski_sum(&scale(split_set, &split_coef)?, split_set)?;
                let merge_right = minkowski_sum(
                    &scale(split_set, &(&split_coef + Rational::one()))?,
                    &k_poly,
                )?;
                records.push(CheckRecord::from_outcome(
                    CheckKind::OracleMerge,
                    Some(idx),
                    Some(*t),
                    subset(&merge_left, &merge_right, &zero)?,
                    zero.clone(),
                    Some(level),
                ));
            }
        }

        let coef = pow2(-(level as i32));
        let ta = scale(&a_arg, &coef)?;
        let tb = scale(&b_arg, &coef)?;
        terms_a = Some(match terms_a {
            None => ta,
            Some(acc) => minkowski_sum(&acc, &ta)?,
        });
        terms_b = Some(match terms_b {
            None => tb,
            Some(acc) => minkowski_sum(&acc, &tb)?,
        });
        cur = cur.double().fract();
    }

    let tail_a = a.transform_tail(m)?;
    let tail_b = b.transform_tail(m)?;
    let combination = minkowski_sum(
        &scale(&fx, &tv)?,
        &scale(&fy, &(Rational::one() - &tv))?,
    )?;

    // the chain ends with the residual cone plus the A-tail on the right;
    // both must dissolve into the B-tail for the conclusion shape to follow
    let absorb_base = match mode {
        Mode::Convex => &fz,
        Mode::Concave => &combination,
    };
    let mut absorb_left = minkowski_sum(absorb_base, &tail_a)?;
    if let Some(k) = k {
        absorb_left = minkowski_sum(&absorb_left, &k.as_polyhedron())?;
    }
    let absorb_right = minkowski_sum(absorb_base, &tail_b)?;
    records.push(CheckRecord::from_outcome(
        CheckKind::OracleAbsorption,
        Some(idx),
        Some(*t),
        subset(&absorb_left, &absorb_right, &zero)?,
        zero.clone(),
        Some(m),
    ));

    let attach = |base: &Polyhedron, terms: &Option<Polyhedron>, tail: &Polyhedron| {
        let with_terms = match terms {
            Some(ts) => minkowski_sum(base, ts)?,
            None => base.clone(),
        };
        minkowski_sum(&with_terms, tail)
    };
    let (left, right) = match mode {
        Mode::Convex => (
            attach(&combination, &terms_a, &tail_a)?,
            attach(&fz, &terms_b, &tail_b)?,
        ),
        Mode::Concave => (
            attach(&fz, &terms_a, &tail_a)?,
            attach(&combination, &terms_b, &tail_b)?,
        ),
    };
    Ok(OracleOutcome {
        records,
        sets: Some((left, right)),
    })
}

/// Compares the oracle's reassembled sides against the conclusion's sides
/// by mutual inclusion; the two are produced by different code paths.
pub fn oracle_equivalence_record(
    idx: usize,
    t: &DyadicRational,
    oracle_sets: &(Polyhedron, Polyhedron),
    conclusion_sets: &(Polyhedron, Polyhedron),
) -> Result<CheckRecord> {
    let zero = Rational::zero();
    for (ours, theirs) in [
        (&oracle_sets.0, &conclusion_sets.0),
        (&oracle_sets.1, &conclusion_sets.1),
    ] {
        for (p, q) in [(ours, theirs), (theirs, ours)] {
            let outcome = subset(p, q, &zero)?;
            if !outcome.holds() {
                return Ok(CheckRecord::from_outcome(
                    CheckKind::OracleEquivalence,
                    Some(idx),
                    Some(*t),
                    outcome,
                    zero.clone(),
                    Some(t.depth()),
                ));
            }
        }
    }
    Ok(CheckRecord::from_outcome(
        CheckKind::OracleEquivalence,
        Some(idx),
        Some(*t),
        SubsetOutcome::Holds,
        zero,
        Some(t.depth()),
    ))
}

/// A certified two-sided estimate of the smallest slack radius repairing a
/// failed inclusion: `passes_at` is confirmed to pass, `fails_at` (when
/// present) is confirmed to fail, and the gap between them is at most the
/// requested resolution.  `fails_at = None` means the inclusion holds
/// exactly.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MarginBracket {
    pub passes_at: Rational,
    pub fails_at: Option<Rational>,
}

impl MarginBracket {
    fn exact() -> Self {
        MarginBracket {
            passes_at: Rational::zero(),
            fails_at: None,
        }
    }

    /// Combines per-check brackets into the scenario-level one: the smallest
    /// radius passing everything is the maximum of the per-check radii.
    pub fn join(self, other: MarginBracket) -> MarginBracket {
        MarginBracket {
            passes_at: self.passes_at.max(other.passes_at),
            fails_at: match (self.fails_at, other.fails_at) {
                (Some(a), Some(b)) => Some(a.max(b)),
                (a, b) => a.or(b),
            },
        }
    }
}

/// Bisects for the smallest `r` with `left <= right + [-r, r]^d`, down to a
/// bracket of width `2^-resolution`.  Every probe is an exact subset test.
/// Returns `None` when even radius 2^16 fails — in particular whenever a
/// generator ray of `left` escapes the recession cone of `right`, which no
/// bounded slack can repair.
pub fn margin_bracket(
    left: &Polyhedron,
    right: &Polyhedron,
    resolution: u32,
) -> Result<Option<MarginBracket>> {
    if subset(left, right, &Rational::zero())?.holds() {
        return Ok(Some(MarginBracket::exact()));
    }
    let mut hi = pow2(16);
    if !subset(left, right, &hi)?.holds() {
        return Ok(None);
    }
    let mut lo = Rational::zero();
    let width = pow2(-(resolution as i32));
    while &hi - &lo > width {
        let mid = (&hi + &lo) / rat(2, 1);
        if subset(left, right, &mid)?.holds() {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(Some(MarginBracket {
        passes_at: hi,
        fails_at: Some(lo),
    }))
}

/// Boundedness / convexity preconditions of the two theorems, evaluated on
/// the finite grid.  One aggregated record per subcheck kind; the first
/// failing generator is the witness.
pub fn validate_preconditions(
    f: &SetValuedMap,
    k: &Cone,
    grid: &DomainGrid,
    mode: Mode,
) -> Result<Vec<CheckRecord>> {
    let zero = Rational::zero();
    let k_poly = k.as_polyhedron();
    let mut values = Vec::with_capacity(grid.points().len());
    for x in grid.points() {
        match f.evaluate(x) {
            Ok(v) => values.push(v),
            Err(Error::MissingTableEntry { .. }) => {
                return Ok(vec![CheckRecord::gap(None, None)])
            }
            Err(e) => return Err(e),
        }
    }

    // common box radius: enough to cover one point of each value, and (for
    // the common lower bound) every vertex of every value
    let per_value_radius: Vec<Rational> = values
        .iter()
        .map(|v| {
            v.vertices()
                .iter()
                .map(|w| w.linf_norm())
                .min()
                .expect("nonempty vertex set")
        })
        .collect();
    let all_vertex_radius = values
        .iter()
        .flat_map(|v| v.vertices().iter().map(|w| w.linf_norm()))
        .max()
        .unwrap_or_else(Rational::zero);

    let mut records = Vec::new();
    match mode {
        Mode::Convex => {
            // pointwise K-lower bound: F(x) <= H_x + K with a per-point box
            let mut outcome = SubsetOutcome::Holds;
            for (value, radius) in values.iter().zip(&per_value_radius) {
                let vertex_radius = value
                    .vertices()
                    .iter()
                    .map(|w| w.linf_norm())
                    .max()
                    .expect("nonempty vertex set")
                    .max(radius.clone());
                let bound = minkowski_sum(
                    &Polyhedron::symmetric_box(value.dim(), &vertex_radius)?,
                    &k_poly,
                )?;
                let o = subset(value, &bound, &zero)?;
                if !o.holds() {
                    outcome = o;
                    break;
                }
            }
            records.push(CheckRecord::from_outcome(
                CheckKind::PreconditionLowerBound,
                None,
                None,
                outcome,
                zero.clone(),
                None,
            ));

            // weak K-upper bound: 0 in F(x) + H' + K with a common box
            let common = per_value_radius
                .iter()
                .max()
                .cloned()
                .unwrap_or_else(Rational::zero);
            let box_common = Polyhedron::symmetric_box(f.value_dim(), &common)?;
            let origin = RationalVector::zero(f.value_dim());
            let mut pass = true;
            let mut witness = None;
            for (value, x) in values.iter().zip(grid.points()) {
                let inflated = minkowski_sum(&minkowski_sum(value, &box_common)?, &k_poly)?;
                if !contains_point(&inflated, &origin)? {
                    pass = false;
                    witness = Some(x.clone());
                    break;
                }
            }
            records.push(CheckRecord {
                kind: CheckKind::PreconditionUpperBound,
                pair: None,
                t: None,
                pass,
                witness,
                slack: zero.clone(),
                level: None,
            });
        }
        Mode::Concave => {
            // pointwise K-convexity at the three probe parameters
            let mut outcome = SubsetOutcome::Holds;
            'outer: for value in &values {
                for (p, q) in [(1i64, 4i64), (1, 2), (3, 4)] {
                    let tq = rat(p, q);
                    let left = minkowski_sum(
                        &scale(value, &tq)?,
                        &scale(value, &(Rational::one() - &tq))?,
                    )?;
                    let right = minkowski_sum(value, &k_poly)?;
                    let o = subset(&left, &right, &zero)?;
                    if !o.holds() {
                        outcome = o;
                        break 'outer;
                    }
                }
            }
            records.push(CheckRecord::from_outcome(
                CheckKind::PreconditionKConvexity,
                None,
                None,
                outcome,
                zero.clone(),
                None,
            ));

            // local K-lower bound with a common box over the grid
            let bound = minkowski_sum(
                &Polyhedron::symmetric_box(f.value_dim(), &all_vertex_radius)?,
                &k_poly,
            )?;
            let mut outcome = SubsetOutcome::Holds;
            for value in &values {
                let o = subset(value, &bound, &zero)?;
                if !o.holds() {
                    outcome = o;
                    break;
                }
            }
            records.push(CheckRecord::from_outcome(
                CheckKind::PreconditionLowerBound,
                None,
                None,
                outcome,
                zero.clone(),
                None,
            ));
        }
    }
    Ok(records)
}
