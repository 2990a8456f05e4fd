//! Exact verification toolkit for convexity-type inclusions of set-valued
//! maps with Takagi-type error terms.
//!
//! Everything is computed in exact rational arithmetic over V-represented
//! polyhedra `conv(vertices) + cone(rays)`, so every inclusion tested here
//! is a theorem about the given data, not a floating-point approximation.
//! The crate is organised in five layers:
//!
//! * [`exactgeom`] — rational vectors, polyhedra, cones, Minkowski sums,
//!   exact membership / inclusion tests and recession cones;
//! * [`takagi`] — dyadic rationals, the Takagi-type series `T_alpha`, and
//!   scalar error functions together with their Takagi transform;
//! * [`svmap`] — set-valued maps on finite rational grids and the Takagi
//!   transformation of set-valued error maps;
//! * [`verify`] — midpoint (Jensen-type) hypothesis checks, full-conclusion
//!   checks at dyadic parameters, an independent inductive oracle that
//!   replays the bisection proof step by step, and precondition validators;
//! * [`scenario`] — a JSON scenario format, built-in scenario families,
//!   a deterministic runner and a seeded counterexample probe.

pub mod error;
pub mod exactgeom;
pub mod rational;
pub mod scenario;
pub mod svmap;
pub mod takagi;
pub mod verify;

pub use error::{Error, Result};
pub use exactgeom::{
    cone_intersection, contains_point, minkowski_sum, recession_cone, scale, scale_with, set_eq,
    subset, Cone, GeneratorKind, Polyhedron, RationalVector, SubsetOutcome, SubsetWitness,
};
pub use rational::{parse_rational, rat, rat_int, Rational};
pub use scenario::{
    builtin_scenarios, combination_points, run_instance, run_scenario, search_counterexample,
    weakened_margin, CounterexampleWitness, Scenario, ScenarioInstance, WitnessKind,
};
pub use svmap::{
    check_lemma_tt, rec_of_map, takagi_transform_structured, takagi_transform_truncated,
    DomainGrid, ErrorMap, GridRegion, LemmaTtOutcome, MapKind, Monomial, PolynomialMap,
    SetValuedMap, TransformTail,
};
pub use takagi::{
    dist_to_integers, functional_equation_residual, phi_transform_dyadic, takagi_alpha,
    takagi_alpha_dyadic, takagi_classic, BoundedValue, DyadicRational, ErrorFunction,
};
pub use verify::{
    check_conclusion_concave, check_conclusion_convex, check_jensen_concave, check_jensen_convex,
    inductive_oracle_concave, inductive_oracle_convex, margin_bracket, oracle_equivalence_record,
    validate_preconditions, CheckKind, CheckRecord, ConclusionOutcome, MarginBracket, Mode,
    OracleOutcome, SlackBox, Summary, TestPair, VerificationReport,
};
