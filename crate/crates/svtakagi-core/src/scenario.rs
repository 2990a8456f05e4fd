//! Scenario files, the built-in suite, and the verification driver.
//!
//! A scenario is a JSON document with exact rational strings everywhere a
//! number appears; floating-point literals are rejected by construction
//! because every numeric field is typed as a string.  Unknown fields are
//! rejected so that a typo cannot silently relax a check.
//!
//! `instantiate` adjoins every combination point `t x + (1-t) y` for the
//! listed pairs and the full dyadic lattice of the configured depth, so a
//! tabulated map must cover those points or the affected checks degrade to
//! coverage gaps.

use crate::error::{Error, Result};
use crate::exactgeom::{Cone, Polyhedron, RationalVector};
use crate::rational::{format_rational, parse_rational, Rational};
use crate::svmap::{rec_of_map, DomainGrid, ErrorMap, MapKind, Monomial, PolynomialMap, SetValuedMap};
use crate::takagi::DyadicRational;
use crate::verify::{
    check_conclusion_concave, check_conclusion_convex, check_jensen_concave,
    check_jensen_convex, inductive_oracle_concave, inductive_oracle_convex, margin_bracket,
    oracle_equivalence_record, validate_preconditions, CheckRecord, MarginBracket, Mode,
    SlackBox, TestPair, VerificationReport,
};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonomialSpec {
    pub coef: String,
    pub powers: Vec<u32>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConeSpec {
    pub rays: Vec<Vec<String>>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolyhedronSpec {
    pub vertices: Vec<Vec<String>>,
    #[serde(default)]
    pub rays: Vec<Vec<String>>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum PhiSpec {
    Constant { epsilon: String },
    L1 { epsilon: String },
    Linf { epsilon: String },
    SqL2 { epsilon: String },
    Tabulated { entries: Vec<PhiEntrySpec> },
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PhiEntrySpec {
    pub at: Vec<String>,
    pub value: String,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum MapSpec {
    Singleton {
        components: Vec<Vec<MonomialSpec>>,
    },
    ConePlusScaled {
        #[serde(rename = "K")]
        k: ConeSpec,
        phi: PhiSpec,
        #[serde(rename = "S0")]
        s0: PolyhedronSpec,
    },
    Tabulated {
        entries: Vec<TableEntrySpec>,
    },
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableEntrySpec {
    pub at: Vec<String>,
    pub value: PolyhedronSpec,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum GridSpec {
    Box {
        lo: Vec<String>,
        hi: Vec<String>,
        step: String,
    },
    Simplex {
        vertices: Vec<Vec<String>>,
        levels: u32,
    },
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairSpec {
    pub x: Vec<String>,
    pub y: Vec<String>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    pub id: String,
    pub domain_dim: usize,
    pub value_dim: usize,
    pub grid: GridSpec,
    pub map: MapSpec,
    pub a: MapSpec,
    pub b: MapSpec,
    pub pairs: Vec<PairSpec>,
    pub depth: u32,
    pub slack: String,
    pub mode: Mode,
    #[serde(default)]
    pub probe_weakened: bool,
}

fn parse_vector(coords: &[String]) -> Result<RationalVector> {
    let parsed: Result<Vec<Rational>> = coords.iter().map(|c| parse_rational(c)).collect();
    Ok(RationalVector(parsed?))
}

fn parse_vectors(rows: &[Vec<String>]) -> Result<Vec<RationalVector>> {
    rows.iter().map(|row| parse_vector(row)).collect()
}

impl PolyhedronSpec {
    fn build(&self, dim: usize) -> Result<Polyhedron> {
        Polyhedron::new(dim, parse_vectors(&self.vertices)?, parse_vectors(&self.rays)?)
    }
}

impl PhiSpec {
    fn build(&self) -> Result<crate::takagi::ErrorFunction> {
        use crate::takagi::ErrorFunction;
        match self {
            PhiSpec::Constant { epsilon } => ErrorFunction::constant(parse_rational(epsilon)?),
            PhiSpec::L1 { epsilon } => ErrorFunction::l1(parse_rational(epsilon)?),
            PhiSpec::Linf { epsilon } => ErrorFunction::linf(parse_rational(epsilon)?),
            PhiSpec::SqL2 { epsilon } => ErrorFunction::sq_l2(parse_rational(epsilon)?),
            PhiSpec::Tabulated { entries } => {
                let parsed: Result<Vec<_>> = entries
                    .iter()
                    .map(|e| Ok((parse_vector(&e.at)?, parse_rational(&e.value)?)))
                    .collect();
                ErrorFunction::tabulated(parsed?)
            }
        }
    }
}

impl MapSpec {
    fn build(&self, domain_dim: usize, value_dim: usize) -> Result<SetValuedMap> {
        let kind = match self {
            MapSpec::Singleton { components } => {
                let comps: Result<Vec<Vec<Monomial>>> = components
                    .iter()
                    .map(|component| {
                        component
                            .iter()
                            .map(|m| {
                                Ok(Monomial {
                                    coef: parse_rational(&m.coef)?,
                                    powers: m.powers.clone(),
                                })
                            })
                            .collect()
                    })
                    .collect();
                MapKind::Singleton(PolynomialMap::new(domain_dim, comps?)?)
            }
            MapSpec::ConePlusScaled { k, phi, s0 } => MapKind::ConePlusScaled {
                k: Cone::new(value_dim, parse_vectors(&k.rays)?)?,
                phi: phi.build()?,
                s0: s0.build(value_dim)?,
            },
            MapSpec::Tabulated { entries } => {
                let parsed: Result<Vec<_>> = entries
                    .iter()
                    .map(|e| Ok((parse_vector(&e.at)?, e.value.build(value_dim)?)))
                    .collect();
                MapKind::Tabulated(parsed?)
            }
        };
        SetValuedMap::new(domain_dim, value_dim, kind)
    }
}

impl GridSpec {
    fn build(&self) -> Result<DomainGrid> {
        match self {
            GridSpec::Box { lo, hi, step } => {
                DomainGrid::from_box(parse_vector(lo)?, parse_vector(hi)?, parse_rational(step)?)
            }
            GridSpec::Simplex { vertices, levels } => {
                DomainGrid::from_simplex(parse_vectors(vertices)?, *levels)
            }
        }
    }
}

/// A scenario with all strings parsed and the grid closed under the
/// combination points the checks will evaluate.
#[derive(Clone, Debug)]
pub struct ScenarioInstance {
    pub id: String,
    pub f: SetValuedMap,
    pub a: ErrorMap,
    pub b: ErrorMap,
    pub grid: DomainGrid,
    pub pairs: Vec<TestPair>,
    pub slack: SlackBox,
    pub mode: Mode,
    pub depth: u32,
    pub probe_weakened: bool,
}

/// Every `t x + (1-t) y` for listed pairs and dyadic `t` up to `depth`;
/// this is exactly the evaluation set of the conclusion checks and the
/// bisection oracle (the orbit of a depth-m point stays on the lattice).
pub fn combination_points(pairs: &[TestPair], depth: u32) -> Vec<RationalVector> {
    let mut out = Vec::new();
    for t in DyadicRational::unit_grid(depth) {
        let tv = t.value();
        for pair in pairs {
            out.push(RationalVector::combine(&tv, &pair.x, &pair.y));
        }
    }
    out
}

impl Scenario {
    pub fn instantiate(&self) -> Result<ScenarioInstance> {
        if self.domain_dim == 0 || self.value_dim == 0 {
            return Err(Error::Scenario {
                detail: "dimensions must be positive".to_string(),
            });
        }
        let mut grid = self.grid.build()?;
        if grid.dim() != self.domain_dim {
            return Err(Error::DimensionMismatch {
                expected: self.domain_dim,
                got: grid.dim(),
            });
        }
        let f = self.map.build(self.domain_dim, self.value_dim)?;
        let a = ErrorMap::new(self.a.build(self.domain_dim, self.value_dim)?)?;
        let b = ErrorMap::new(self.b.build(self.domain_dim, self.value_dim)?)?;
        let slack = SlackBox::new(parse_rational(&self.slack)?)?;
        let t_list = DyadicRational::unit_grid(self.depth);
        let mut pairs = Vec::with_capacity(self.pairs.len());
        for spec in &self.pairs {
            let x = parse_vector(&spec.x)?;
            let y = parse_vector(&spec.y)?;
            for v in [&x, &y] {
                if v.dim() != self.domain_dim {
                    return Err(Error::DimensionMismatch {
                        expected: self.domain_dim,
                        got: v.dim(),
                    });
                }
            }
            pairs.push(TestPair {
                x,
                y,
                t_list: t_list.clone(),
            });
        }
        for point in combination_points(&pairs, self.depth) {
            grid.adjoin(point);
        }
        Ok(ScenarioInstance {
            id: self.id.clone(),
            f,
            a,
            b,
            grid,
            pairs,
            slack,
            mode: self.mode,
            depth: self.depth,
            probe_weakened: self.probe_weakened,
        })
    }
}

/// Difference vectors the recession cone of the error family is sampled
/// at; the zero vector is always included.
fn rec_samples(instance: &ScenarioInstance) -> Vec<RationalVector> {
    let mut samples = vec![RationalVector::zero(instance.grid.dim())];
    for pair in &instance.pairs {
        samples.push(pair.difference());
    }
    samples
}

pub fn run_scenario(scenario: &Scenario) -> Result<VerificationReport> {
    run_instance(&scenario.instantiate()?)
}

/// Precondition records, then per-pair hypothesis records, then per
/// (pair, t): the conclusion record, the oracle's step records, and the
/// set-equivalence record.  The (pair, t) work runs in parallel; record
/// order is fixed by the combo enumeration, not scheduling.
pub fn run_instance(instance: &ScenarioInstance) -> Result<VerificationReport> {
    let k = rec_of_map(instance.b.map(), &rec_samples(instance))?;
    let mut checks = validate_preconditions(&instance.f, &k, &instance.grid, instance.mode)?;
    checks.extend(match instance.mode {
        Mode::Convex => check_jensen_convex(&instance.f, &instance.a, &instance.b, &instance.pairs)?,
        Mode::Concave => {
            check_jensen_concave(&instance.f, &instance.a, &instance.b, &instance.pairs)?
        }
    });

    let combos: Vec<(usize, DyadicRational)> = instance
        .pairs
        .iter()
        .enumerate()
        .flat_map(|(i, pair)| pair.t_list.iter().map(move |t| (i, *t)))
        .collect();
    let groups: Result<Vec<Vec<CheckRecord>>> = combos
        .par_iter()
        .map(|(i, t)| combo_records(instance, &k, *i, t))
        .collect();
    for group in groups? {
        checks.extend(group);
    }
    Ok(VerificationReport::from_checks(instance.id.clone(), checks))
}

fn combo_records(
    instance: &ScenarioInstance,
    k: &Cone,
    i: usize,
    t: &DyadicRational,
) -> Result<Vec<CheckRecord>> {
    let pair = &instance.pairs[i];
    let conclusion = match instance.mode {
        Mode::Convex => check_conclusion_convex(
            &instance.f,
            &instance.a,
            &instance.b,
            pair,
            i,
            t,
            &instance.slack,
        )?,
        Mode::Concave => check_conclusion_concave(
            &instance.f,
            &instance.a,
            &instance.b,
            pair,
            i,
            t,
            &instance.slack,
        )?,
    };
    let oracle = match instance.mode {
        Mode::Convex => {
            inductive_oracle_convex(&instance.f, &instance.a, &instance.b, pair, i, t)?
        }
        Mode::Concave => {
            inductive_oracle_concave(&instance.f, &instance.a, &instance.b, k, pair, i, t)?
        }
    };
    let mut records = Vec::with_capacity(oracle.records.len() + 2);
    records.push(conclusion.record);
    records.extend(oracle.records);
    if let (Some(oracle_sets), Some(conclusion_sets)) = (&oracle.sets, &conclusion.sets) {
        records.push(oracle_equivalence_record(i, t, oracle_sets, conclusion_sets)?);
    }
    Ok(records)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum WitnessKind {
    /// Full hypotheses held but a conclusion failed: an implementation bug.
    BugSignal,
    /// The weakened hypothesis set broke the conclusion, as expected.
    HypothesisNecessity,
}

#[derive(Clone, Debug)]
pub struct CounterexampleWitness {
    pub kind: WitnessKind,
    /// A single-pair scenario reproducing the failure.
    pub scenario: Scenario,
    pub pair_index: usize,
    pub t: DyadicRational,
    pub record: CheckRecord,
}

fn zero_error_map(domain_dim: usize, value_dim: usize) -> Result<ErrorMap> {
    let f = PolynomialMap::new(domain_dim, vec![vec![]; value_dim])?;
    ErrorMap::new(SetValuedMap::new(domain_dim, value_dim, MapKind::Singleton(f))?)
}

/// Deterministic random probing of a scenario family.  With
/// `probe_weakened` the `B` error is dropped from the conclusion while the
/// hypotheses keep it, so a hit demonstrates the error term is doing work;
/// without it, any hit is a soundness bug in this implementation.
pub fn search_counterexample(
    family: &Scenario,
    trials: u64,
    seed: u64,
) -> Result<Option<CounterexampleWitness>> {
    if trials == 0 {
        return Err(Error::ZeroTrials);
    }
    let instance = family.instantiate()?;
    if instance.pairs.is_empty() {
        return Err(Error::Scenario {
            detail: "counterexample search needs at least one pair".to_string(),
        });
    }
    let k = rec_of_map(instance.b.map(), &rec_samples(&instance))?;
    let preconditions_pass = validate_preconditions(&instance.f, &k, &instance.grid, instance.mode)?
        .iter()
        .all(|r| r.pass);
    let weakened = if family.probe_weakened {
        Some(zero_error_map(family.domain_dim, family.value_dim)?)
    } else {
        None
    };

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let i = rng.gen_range(0..instance.pairs.len());
        let depth = rng.gen_range(0..=instance.depth);
        let numer = rng.gen_range(0..=(1i128 << depth));
        let t = DyadicRational::new(numer, depth);
        let pair = &instance.pairs[i];

        let hypothesis = match instance.mode {
            Mode::Convex => {
                check_jensen_convex(&instance.f, &instance.a, &instance.b, std::slice::from_ref(pair))?
            }
            Mode::Concave => check_jensen_concave(
                &instance.f,
                &instance.a,
                &instance.b,
                std::slice::from_ref(pair),
            )?,
        };
        let hypothesis = &hypothesis[0];
        if hypothesis.is_gap() || !hypothesis.pass || !preconditions_pass {
            continue;
        }

        let b_used = weakened.as_ref().unwrap_or(&instance.b);
        let conclusion = match instance.mode {
            Mode::Convex => check_conclusion_convex(
                &instance.f,
                &instance.a,
                b_used,
                pair,
                i,
                &t,
                &instance.slack,
            )?,
            Mode::Concave => check_conclusion_concave(
                &instance.f,
                &instance.a,
                b_used,
                pair,
                i,
                &t,
                &instance.slack,
            )?,
        };
        if conclusion.record.is_gap() || conclusion.record.pass {
            continue;
        }

        let mut reduced = family.clone();
        reduced.pairs = vec![family.pairs[i].clone()];
        reduced.depth = t.depth();
        return Ok(Some(CounterexampleWitness {
            kind: if family.probe_weakened {
                WitnessKind::HypothesisNecessity
            } else {
                WitnessKind::BugSignal
            },
            scenario: reduced,
            pair_index: i,
            t,
            record: conclusion.record,
        }));
    }
    Ok(None)
}

/// Margin statistic for the weakened probe: re-tests every conclusion with
/// the `B` error dropped and brackets the smallest common slack radius at
/// which all of them pass.  A zero bracket means the error term was never
/// needed on this scenario; `None` means some weakened conclusion cannot be
/// repaired by any bounded slack.  No sharpness claim is implied — this is
/// a measurement, not a bound.
pub fn weakened_margin(scenario: &Scenario, resolution: u32) -> Result<Option<MarginBracket>> {
    let instance = scenario.instantiate()?;
    let weakened = zero_error_map(scenario.domain_dim, scenario.value_dim)?;
    let slack = SlackBox::zero();
    let mut combined = MarginBracket {
        passes_at: Rational::zero(),
        fails_at: None,
    };
    for (i, pair) in instance.pairs.iter().enumerate() {
        for t in &pair.t_list {
            let conclusion = match instance.mode {
                Mode::Convex => check_conclusion_convex(
                    &instance.f,
                    &instance.a,
                    &weakened,
                    pair,
                    i,
                    t,
                    &slack,
                )?,
                Mode::Concave => check_conclusion_concave(
                    &instance.f,
                    &instance.a,
                    &weakened,
                    pair,
                    i,
                    t,
                    &slack,
                )?,
            };
            let Some((left, right)) = conclusion.sets else {
                continue; // coverage gap: nothing to measure
            };
            match margin_bracket(&left, &right, resolution)? {
                Some(bracket) => combined = combined.join(bracket),
                None => return Ok(None),
            }
        }
    }
    Ok(Some(combined))
}

fn strings(vals: &[&str]) -> Vec<String> {
    vals.iter().map(|v| v.to_string()).collect()
}

fn rows(vals: &[&[&str]]) -> Vec<Vec<String>> {
    vals.iter().map(|r| strings(r)).collect()
}

fn segment_spec(a: &str, b: &str) -> PolyhedronSpec {
    PolyhedronSpec {
        vertices: rows(&[&[a], &[b]]),
        rays: vec![],
    }
}

fn zero_map_spec(value_dim: usize) -> MapSpec {
    MapSpec::Singleton {
        components: vec![vec![]; value_dim],
    }
}

/// The constant map `u -> R_+` embedded in a 1-d value space.
fn plus_cone_spec() -> MapSpec {
    MapSpec::ConePlusScaled {
        k: ConeSpec {
            rays: rows(&[&["1"]]),
        },
        phi: PhiSpec::Constant {
            epsilon: "0".to_string(),
        },
        s0: PolyhedronSpec {
            vertices: rows(&[&["0"]]),
            rays: vec![],
        },
    }
}

fn pair_spec(x: &[&str], y: &[&str]) -> PairSpec {
    PairSpec {
        x: strings(x),
        y: strings(y),
    }
}

fn bernstein_doetsch() -> Scenario {
    Scenario {
        id: "bernstein-doetsch".to_string(),
        domain_dim: 1,
        value_dim: 1,
        grid: GridSpec::Box {
            lo: strings(&["-2"]),
            hi: strings(&["2"]),
            step: "1/2".to_string(),
        },
        // F(x) = [x^2, oo): the epigraph slice of a genuinely Jensen-convex map
        map: MapSpec::ConePlusScaled {
            k: ConeSpec {
                rays: rows(&[&["1"]]),
            },
            phi: PhiSpec::SqL2 {
                epsilon: "1".to_string(),
            },
            s0: PolyhedronSpec {
                vertices: rows(&[&["1"]]),
                rays: vec![],
            },
        },
        a: zero_map_spec(1),
        b: plus_cone_spec(),
        pairs: vec![
            pair_spec(&["2"], &["-2"]),
            pair_spec(&["2"], &["0"]),
            pair_spec(&["-3/2"], &["1/2"]),
            pair_spec(&["1"], &["-1/2"]),
        ],
        depth: 5,
        slack: "0".to_string(),
        mode: Mode::Convex,
        probe_weakened: false,
    }
}

fn ng_nikodem() -> Scenario {
    let depth = 4;
    let pair_specs = vec![
        pair_spec(&["1"], &["-1"]),
        pair_spec(&["1"], &["0"]),
        pair_spec(&["1/2"], &["-1/2"]),
    ];
    // tabulate f(x) = x^2 + eps [x = 0] over the lattice the checks touch
    let eps = parse_rational("1/3").expect("literal");
    let mut grid = DomainGrid::from_box(
        parse_vector(&strings(&["-1"])).expect("literal"),
        parse_vector(&strings(&["1"])).expect("literal"),
        parse_rational("1/4").expect("literal"),
    )
    .expect("valid box");
    let pairs: Vec<TestPair> = pair_specs
        .iter()
        .map(|p| TestPair {
            x: parse_vector(&p.x).expect("literal"),
            y: parse_vector(&p.y).expect("literal"),
            t_list: vec![],
        })
        .collect();
    for point in combination_points(&pairs, depth) {
        grid.adjoin(point);
    }
    let entries = grid
        .points()
        .iter()
        .map(|p| {
            let x = &p.0[0];
            let mut fx = x * x;
            if x.is_zero() {
                fx += &eps;
            }
            TableEntrySpec {
                at: vec![format_rational(x)],
                value: PolyhedronSpec {
                    vertices: vec![vec![format_rational(&fx)]],
                    rays: vec![],
                },
            }
        })
        .collect();
    Scenario {
        id: "ng-nikodem".to_string(),
        domain_dim: 1,
        value_dim: 1,
        grid: GridSpec::Box {
            lo: strings(&["-1"]),
            hi: strings(&["1"]),
            step: "1/4".to_string(),
        },
        map: MapSpec::Tabulated { entries },
        a: zero_map_spec(1),
        // B(u) = R_+ + eps [-1, 0]: the eps-Jensen-convexity encoding
        b: MapSpec::ConePlusScaled {
            k: ConeSpec {
                rays: rows(&[&["1"]]),
            },
            phi: PhiSpec::Constant {
                epsilon: "1/3".to_string(),
            },
            s0: segment_spec("-1", "0"),
        },
        pairs: pair_specs,
        depth,
        slack: "0".to_string(),
        mode: Mode::Convex,
        probe_weakened: false,
    }
}

fn hazy_pales() -> Scenario {
    Scenario {
        id: "hazy-pales".to_string(),
        domain_dim: 2,
        value_dim: 1,
        grid: GridSpec::Box {
            lo: strings(&["-1", "-1"]),
            hi: strings(&["1", "1"]),
            step: "1/2".to_string(),
        },
        map: MapSpec::Singleton {
            components: vec![vec![
                MonomialSpec {
                    coef: "1".to_string(),
                    powers: vec![2, 0],
                },
                MonomialSpec {
                    coef: "1".to_string(),
                    powers: vec![0, 2],
                },
            ]],
        },
        a: zero_map_spec(1),
        b: MapSpec::ConePlusScaled {
            k: ConeSpec {
                rays: rows(&[&["1"]]),
            },
            phi: PhiSpec::L1 {
                epsilon: "1/4".to_string(),
            },
            s0: segment_spec("-1", "0"),
        },
        pairs: vec![
            pair_spec(&["1", "1"], &["-1", "-1"]),
            pair_spec(&["1", "0"], &["0", "1"]),
            pair_spec(&["1", "-1"], &["-1", "1/2"]),
        ],
        depth: 4,
        slack: "0".to_string(),
        mode: Mode::Convex,
        probe_weakened: false,
    }
}

fn strong_quadratic(concave: bool) -> Scenario {
    let coef = if concave { "-1" } else { "1" };
    // every 5th of the 300 unordered integer-point pairs: 60 pairs
    let points: Vec<(i64, i64)> = (-2..=2)
        .flat_map(|a| (-2..=2).map(move |b| (a, b)))
        .collect();
    let mut pairs = Vec::new();
    let mut counter = 0usize;
    for i in 0..points.len() {
        for j in (i + 1)..points.len() {
            counter += 1;
            if counter % 5 == 0 {
                pairs.push(PairSpec {
                    x: vec![points[i].0.to_string(), points[i].1.to_string()],
                    y: vec![points[j].0.to_string(), points[j].1.to_string()],
                });
            }
        }
    }
    Scenario {
        id: if concave {
            "strong-quadratic-concave".to_string()
        } else {
            "strong-quadratic".to_string()
        },
        domain_dim: 2,
        value_dim: 1,
        grid: GridSpec::Box {
            lo: strings(&["-2", "-2"]),
            hi: strings(&["2", "2"]),
            step: "1/2".to_string(),
        },
        map: MapSpec::Singleton {
            components: vec![vec![
                MonomialSpec {
                    coef: coef.to_string(),
                    powers: vec![2, 0],
                },
                MonomialSpec {
                    coef: coef.to_string(),
                    powers: vec![0, 2],
                },
            ]],
        },
        // A(u) = (1/4) |u|_2^2 [-1, 0]: the exactly binding strong modulus
        a: MapSpec::ConePlusScaled {
            k: ConeSpec { rays: vec![] },
            phi: PhiSpec::SqL2 {
                epsilon: "1/4".to_string(),
            },
            s0: segment_spec("-1", "0"),
        },
        b: plus_cone_spec(),
        pairs,
        depth: 6,
        slack: "0".to_string(),
        mode: if concave { Mode::Concave } else { Mode::Convex },
        probe_weakened: false,
    }
}

fn cone_valued_2d() -> Scenario {
    let square = PolyhedronSpec {
        vertices: rows(&[&["0", "0"], &["-1", "0"], &["0", "-1"], &["-1", "-1"]]),
        rays: vec![],
    };
    Scenario {
        id: "cone-valued-2d".to_string(),
        domain_dim: 1,
        value_dim: 2,
        grid: GridSpec::Box {
            lo: strings(&["-1"]),
            hi: strings(&["1"]),
            step: "1/2".to_string(),
        },
        // F(x) = R_+ x {0} + x^2 [-1, 0]^2
        map: MapSpec::ConePlusScaled {
            k: ConeSpec {
                rays: rows(&[&["1", "0"]]),
            },
            phi: PhiSpec::SqL2 {
                epsilon: "1".to_string(),
            },
            s0: square.clone(),
        },
        a: zero_map_spec(2),
        b: MapSpec::ConePlusScaled {
            k: ConeSpec {
                rays: rows(&[&["1", "0"]]),
            },
            phi: PhiSpec::SqL2 {
                epsilon: "1/4".to_string(),
            },
            s0: square,
        },
        pairs: vec![
            pair_spec(&["1"], &["-1"]),
            pair_spec(&["1"], &["0"]),
            pair_spec(&["1/2"], &["-1"]),
        ],
        depth: 4,
        slack: "0".to_string(),
        mode: Mode::Convex,
        probe_weakened: false,
    }
}

pub fn builtin_scenarios() -> Vec<Scenario> {
    vec![
        bernstein_doetsch(),
        ng_nikodem(),
        hazy_pales(),
        strong_quadratic(false),
        strong_quadratic(true),
        cone_valued_2d(),
    ]
}
