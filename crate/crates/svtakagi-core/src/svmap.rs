//! Set-valued map families over rational domains and their Takagi
//! transformation.
//!
//! A map value is always a V-representation polyhedron.  Three families are
//! supported: singleton polynomial images `{f(x)}`, the structured family
//! `K + phi(x) S0`, and finite tables.  Error maps are set-valued maps with
//! `0 in S(u)` everywhere whose value at `0` makes the transform tail
//! tractable: either `S(0)` is conic (the tail collapses into itself) or the
//! map is `K + eps S0` with constant `eps` (closed form `K + 2 eps S0`).
//!
//! The truncated transform is the literal partial generator
//! `sum_{k=0}^{N} 2^(-k) S(2 d(2^k t) x)`; partial sums are nondecreasing in
//! `N` because every summand contains `0`.  At dyadic `t = p/2^m` with conic
//! `S(0)` the partial sum stabilizes for `N >= m` and equals the transform
//! exactly.

use crate::error::{Error, Result};
use crate::exactgeom::{
    cone_intersection, contains_point, minkowski_sum, recession_cone, scale, set_eq, subset, Cone,
    Polyhedron, RationalVector,
};
use crate::rational::{pow2, rat, Rational};
use crate::takagi::{dist_to_integers, phi_transform_dyadic, DyadicRational, ErrorFunction};
use num_traits::{Signed, Zero};
use std::collections::HashMap;

/// Shape of the convex region a grid was sampled from.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum GridRegion {
    Box {
        lo: RationalVector,
        hi: RationalVector,
        step: Rational,
    },
    Simplex {
        vertices: Vec<RationalVector>,
        levels: u32,
    },
    /// An explicit point list with no declared ambient region.
    Points,
}

/// A finite sample of a convex domain, with membership lookup.
#[derive(Clone, Debug)]
pub struct DomainGrid {
    dim: usize,
    points: Vec<RationalVector>,
    index: HashMap<RationalVector, usize>,
    region: GridRegion,
}

impl DomainGrid {
    fn from_parts(dim: usize, points: Vec<RationalVector>, region: GridRegion) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptyGrid);
        }
        let mut grid = DomainGrid {
            dim,
            points: Vec::new(),
            index: HashMap::new(),
            region,
        };
        for p in points {
            if p.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: p.dim(),
                });
            }
            grid.adjoin(p);
        }
        Ok(grid)
    }

    /// Row-major lattice `lo + step * k` clipped to `hi`, last axis fastest.
    pub fn from_box(lo: RationalVector, hi: RationalVector, step: Rational) -> Result<Self> {
        if !step.is_positive() {
            return Err(Error::NonPositiveStep {
                step: step.to_string(),
            });
        }
        let dim = lo.dim();
        if hi.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: hi.dim(),
            });
        }
        let mut counts = Vec::with_capacity(dim);
        for (l, h) in lo.0.iter().zip(&hi.0) {
            if l > h {
                return Err(Error::EmptyGrid);
            }
            let span = ((h - l) / &step).floor();
            let n: usize = span
                .numer()
                .try_into()
                .map_err(|_| Error::EmptyGrid)?;
            counts.push(n + 1);
        }
        let total: usize = counts.iter().product();
        let mut points = Vec::with_capacity(total);
        let mut odometer = vec![0usize; dim];
        loop {
            let coords: Vec<Rational> = odometer
                .iter()
                .zip(&lo.0)
                .map(|(&k, l)| l + &step * rat(k as i64, 1))
                .collect();
            points.push(RationalVector(coords));
            // advance, last axis fastest
            let mut axis = dim;
            while axis > 0 {
                axis -= 1;
                odometer[axis] += 1;
                if odometer[axis] < counts[axis] {
                    break;
                }
                odometer[axis] = 0;
                if axis == 0 {
                    let region = GridRegion::Box { lo, hi, step };
                    return Self::from_parts(dim, points, region);
                }
            }
        }
    }

    /// Barycentric lattice: all points `sum (k_i / levels) v_i` with natural
    /// weights summing to `levels`.
    pub fn from_simplex(vertices: Vec<RationalVector>, levels: u32) -> Result<Self> {
        if levels == 0 {
            return Err(Error::ZeroLevels);
        }
        if vertices.is_empty() {
            return Err(Error::EmptyGrid);
        }
        let dim = vertices[0].dim();
        let mut points = Vec::new();
        let mut weights = vec![0u32; vertices.len()];
        enumerate_compositions(levels, 0, &mut weights, &mut |w| {
            let mut acc = RationalVector::zero(dim);
            for (k, v) in w.iter().zip(&vertices) {
                if *k > 0 {
                    acc = acc.add(&v.scale(&rat(*k as i64, levels as i64)));
                }
            }
            points.push(acc);
        });
        let region = GridRegion::Simplex { vertices, levels };
        Self::from_parts(dim, points, region)
    }

    pub fn from_points(points: Vec<RationalVector>) -> Result<Self> {
        let dim = points.first().map(|p| p.dim()).unwrap_or(0);
        Self::from_parts(dim, points, GridRegion::Points)
    }

    /// Insert a point if absent, preserving first-seen order.
    pub fn adjoin(&mut self, point: RationalVector) {
        if !self.index.contains_key(&point) {
            self.index.insert(point.clone(), self.points.len());
            self.points.push(point);
        }
    }

    pub fn contains(&self, point: &RationalVector) -> bool {
        self.index.contains_key(point)
    }

    pub fn points(&self) -> &[RationalVector] {
        &self.points
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn region(&self) -> &GridRegion {
        &self.region
    }
}

fn enumerate_compositions(
    remaining: u32,
    slot: usize,
    weights: &mut Vec<u32>,
    emit: &mut impl FnMut(&[u32]),
) {
    if slot + 1 == weights.len() {
        weights[slot] = remaining;
        emit(weights);
        return;
    }
    for k in 0..=remaining {
        weights[slot] = k;
        enumerate_compositions(remaining - k, slot + 1, weights, emit);
    }
}

/// One term `coef * x^powers` of a polynomial component.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Monomial {
    pub coef: Rational,
    pub powers: Vec<u32>,
}

impl Monomial {
    pub fn degree(&self) -> usize {
        self.powers.iter().map(|&p| p as usize).sum()
    }
}

/// A vector-valued polynomial with rational coefficients, degree <= 4.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolynomialMap {
    domain_dim: usize,
    components: Vec<Vec<Monomial>>,
}

impl PolynomialMap {
    pub fn new(domain_dim: usize, components: Vec<Vec<Monomial>>) -> Result<Self> {
        for component in &components {
            for mono in component {
                if mono.powers.len() != domain_dim {
                    return Err(Error::DimensionMismatch {
                        expected: domain_dim,
                        got: mono.powers.len(),
                    });
                }
                if mono.degree() > 4 {
                    return Err(Error::DegreeTooHigh {
                        degree: mono.degree(),
                    });
                }
            }
        }
        Ok(PolynomialMap {
            domain_dim,
            components,
        })
    }

    pub fn domain_dim(&self) -> usize {
        self.domain_dim
    }

    pub fn value_dim(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Vec<Monomial>] {
        &self.components
    }

    pub fn evaluate(&self, x: &RationalVector) -> RationalVector {
        debug_assert_eq!(x.dim(), self.domain_dim);
        let coords = self
            .components
            .iter()
            .map(|component| {
                component
                    .iter()
                    .map(|mono| {
                        let mut term = mono.coef.clone();
                        for (xi, &p) in x.0.iter().zip(&mono.powers) {
                            for _ in 0..p {
                                term *= xi;
                            }
                        }
                        term
                    })
                    .sum()
            })
            .collect();
        RationalVector(coords)
    }

    /// True when every collected coefficient cancels.
    fn is_identically_zero(&self) -> bool {
        self.components.iter().all(|component| {
            let mut collected: Vec<(&Vec<u32>, Rational)> = Vec::new();
            for mono in component {
                match collected.iter_mut().find(|(p, _)| **p == mono.powers) {
                    Some((_, c)) => *c += &mono.coef,
                    None => collected.push((&mono.powers, mono.coef.clone())),
                }
            }
            collected.iter().all(|(_, c)| c.is_zero())
        })
    }
}

#[derive(Clone, Debug)]
pub enum MapKind {
    Singleton(PolynomialMap),
    ConePlusScaled {
        k: Cone,
        phi: ErrorFunction,
        s0: Polyhedron,
    },
    Tabulated(Vec<(RationalVector, Polyhedron)>),
}

/// A set-valued map with polyhedral values on a rational domain.
#[derive(Clone, Debug)]
pub struct SetValuedMap {
    domain_dim: usize,
    value_dim: usize,
    kind: MapKind,
}

impl SetValuedMap {
    pub fn new(domain_dim: usize, value_dim: usize, kind: MapKind) -> Result<Self> {
        match &kind {
            MapKind::Singleton(f) => {
                if f.domain_dim() != domain_dim {
                    return Err(Error::DimensionMismatch {
                        expected: domain_dim,
                        got: f.domain_dim(),
                    });
                }
                if f.value_dim() != value_dim {
                    return Err(Error::DimensionMismatch {
                        expected: value_dim,
                        got: f.value_dim(),
                    });
                }
            }
            MapKind::ConePlusScaled { k, s0, .. } => {
                for d in [k.dim(), s0.dim()] {
                    if d != value_dim {
                        return Err(Error::DimensionMismatch {
                            expected: value_dim,
                            got: d,
                        });
                    }
                }
            }
            MapKind::Tabulated(entries) => {
                for (at, value) in entries {
                    if at.dim() != domain_dim {
                        return Err(Error::DimensionMismatch {
                            expected: domain_dim,
                            got: at.dim(),
                        });
                    }
                    if value.dim() != value_dim {
                        return Err(Error::DimensionMismatch {
                            expected: value_dim,
                            got: value.dim(),
                        });
                    }
                    if entries.iter().filter(|(a, _)| a == at).count() > 1 {
                        return Err(Error::DuplicateTableEntry {
                            point: at.to_string(),
                        });
                    }
                }
            }
        }
        Ok(SetValuedMap {
            domain_dim,
            value_dim,
            kind,
        })
    }

    pub fn domain_dim(&self) -> usize {
        self.domain_dim
    }

    pub fn value_dim(&self) -> usize {
        self.value_dim
    }

    pub fn kind(&self) -> &MapKind {
        &self.kind
    }

    pub fn evaluate(&self, x: &RationalVector) -> Result<Polyhedron> {
        if x.dim() != self.domain_dim {
            return Err(Error::DimensionMismatch {
                expected: self.domain_dim,
                got: x.dim(),
            });
        }
        match &self.kind {
            MapKind::Singleton(f) => Polyhedron::singleton(f.evaluate(x)),
            MapKind::ConePlusScaled { k, phi, s0 } => {
                let factor = phi.evaluate(x)?;
                minkowski_sum(&k.as_polyhedron(), &scale(s0, &factor)?)
            }
            MapKind::Tabulated(entries) => entries
                .iter()
                .find(|(at, _)| at == x)
                .map(|(_, value)| value.clone())
                .ok_or_else(|| Error::MissingTableEntry {
                    point: x.to_string(),
                }),
        }
    }
}

/// How the infinite tail of the transform is handled for an error map.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TransformTail {
    /// `S(0)` is `{0}` or a cone; the tail collapses into `S(0)` itself.
    Conic,
    /// `S = K + eps S0` with constant `eps > 0`; closed form `K + 2 eps S0`.
    ConstantScaled,
    /// No exact tail; only one-sided truncated checks are meaningful.
    General,
}

/// A set-valued map usable as the error term of a Jensen-type inclusion:
/// `0 in S(u)` for every `u`, with a classified transform tail.
#[derive(Clone, Debug)]
pub struct ErrorMap {
    map: SetValuedMap,
    tail: TransformTail,
}

impl ErrorMap {
    /// Strict constructor: rejects maps whose tail is not exactly tractable.
    pub fn new(map: SetValuedMap) -> Result<Self> {
        let em = Self::new_unrestricted(map)?;
        if em.tail == TransformTail::General {
            return Err(Error::InvalidErrorMap {
                detail: "value at 0 must be a cone, {0}, or constant-scaled K + eps S0"
                    .to_string(),
            });
        }
        Ok(em)
    }

    /// Admits a general value at `0`; such maps support only the one-sided
    /// truncated transform (no exact tail), as in the forward half of the
    /// transform-restriction lemma.
    pub fn new_unrestricted(map: SetValuedMap) -> Result<Self> {
        Self::validate_zero_membership(&map)?;
        let tail = Self::classify(&map)?;
        Ok(ErrorMap { map, tail })
    }

    fn validate_zero_membership(map: &SetValuedMap) -> Result<()> {
        let zero = RationalVector::zero(map.value_dim());
        match &map.kind {
            MapKind::Singleton(f) => {
                if !f.is_identically_zero() {
                    return Err(Error::InvalidErrorMap {
                        detail: "singleton error map must be identically zero".to_string(),
                    });
                }
            }
            MapKind::ConePlusScaled { s0, .. } => {
                if !contains_point(s0, &zero)? {
                    return Err(Error::InvalidErrorMap {
                        detail: "S0 must contain 0".to_string(),
                    });
                }
            }
            MapKind::Tabulated(entries) => {
                for (at, value) in entries {
                    if !contains_point(value, &zero)? {
                        return Err(Error::InvalidErrorMap {
                            detail: format!("value at {at} does not contain 0"),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    fn classify(map: &SetValuedMap) -> Result<TransformTail> {
        match &map.kind {
            MapKind::Singleton(_) => Ok(TransformTail::Conic),
            MapKind::ConePlusScaled { phi, s0, .. } => {
                if s0.is_origin() {
                    return Ok(TransformTail::Conic);
                }
                if let Some(eps) = phi.constant_value() {
                    return Ok(if eps.is_zero() {
                        TransformTail::Conic
                    } else {
                        TransformTail::ConstantScaled
                    });
                }
                if phi.vanishes_at_zero(map.domain_dim) {
                    Ok(TransformTail::Conic)
                } else {
                    Ok(TransformTail::General)
                }
            }
            MapKind::Tabulated(entries) => {
                let zero = RationalVector::zero(map.domain_dim);
                match entries.iter().find(|(at, _)| *at == zero) {
                    Some((_, value)) if value.is_conic() => Ok(TransformTail::Conic),
                    Some(_) => Ok(TransformTail::General),
                    None => Ok(TransformTail::General),
                }
            }
        }
    }

    pub fn map(&self) -> &SetValuedMap {
        &self.map
    }

    pub fn tail(&self) -> TransformTail {
        self.tail
    }

    pub fn value_dim(&self) -> usize {
        self.map.value_dim()
    }

    pub fn evaluate(&self, u: &RationalVector) -> Result<Polyhedron> {
        self.map.evaluate(u)
    }

    /// The exact tail `sum_{k>=m} 2^(-k) S(2 d(2^k t) x)` of the transform at
    /// a depth-`m` dyadic `t`: all arguments are `0` there, so it depends on
    /// the tail class only.
    pub(crate) fn transform_tail(&self, m: u32) -> Result<Polyhedron> {
        match self.tail {
            TransformTail::Conic => {
                self.evaluate(&RationalVector::zero(self.map.domain_dim()))
            }
            TransformTail::ConstantScaled => match &self.map.kind {
                MapKind::ConePlusScaled { k, phi, s0 } => {
                    let eps = phi.constant_value().expect("constant-scaled tail");
                    minkowski_sum(
                        &k.as_polyhedron(),
                        &scale(s0, &(pow2(1 - m as i32) * eps))?,
                    )
                }
                _ => unreachable!("constant-scaled tail implies structured kind"),
            },
            TransformTail::General => Err(Error::InvalidErrorMap {
                detail: "transform tail undefined for a general value at 0".to_string(),
            }),
        }
    }
}

/// Partial generator `sum_{k=0}^{N} 2^(-k) S(2 d(2^k t) x)` of the Takagi
/// transformation.  For a constant-scaled map the series is bypassed and the
/// closed form `K + 2 eps S0` (valid for every `t`) is returned, so that the
/// result is the transform itself rather than an under-approximation.
pub fn takagi_transform_truncated(
    s: &ErrorMap,
    t: &Rational,
    x: &RationalVector,
    levels: u32,
) -> Result<Polyhedron> {
    if levels == 0 {
        return Err(Error::ZeroLevels);
    }
    if let TransformTail::ConstantScaled = s.tail {
        return s.transform_tail(0);
    }
    let two = rat(2, 1);
    let mut cur = t - t.floor();
    let mut acc: Option<Polyhedron> = None;
    for k in 0..=levels {
        let arg = x.scale(&(&two * dist_to_integers(&cur)));
        let term = scale(&s.evaluate(&arg)?, &pow2(-(k as i32)))?;
        acc = Some(match acc {
            None => term,
            Some(sum) => minkowski_sum(&sum, &term)?,
        });
        cur = &cur + &cur;
        cur -= cur.floor();
    }
    Ok(acc.expect("at least one term"))
}

/// Closed-form transform `K + phi^T(t, x) S0` of the structured family.
pub fn takagi_transform_structured(
    k: &Cone,
    phi: &ErrorFunction,
    s0: &Polyhedron,
    t: &DyadicRational,
    x: &RationalVector,
) -> Result<Polyhedron> {
    if !contains_point(s0, &RationalVector::zero(s0.dim()))? {
        return Err(Error::InvalidErrorMap {
            detail: "S0 must contain 0".to_string(),
        });
    }
    let coef = phi_transform_dyadic(phi, t, x)?;
    minkowski_sum(&k.as_polyhedron(), &scale(s0, &coef)?)
}

/// Outcome of the transform-restriction check at `t = 1/2`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct LemmaTtOutcome {
    /// `S(x) <= S^T(1/2, x)` at the given truncation.
    pub forward: bool,
    /// Whether the equality hypothesis `S(0) <= rec(S(x))` holds.
    pub equality_applicable: bool,
    /// Mutual inclusion, evaluated only when applicable.
    pub equality: Option<bool>,
}

impl LemmaTtOutcome {
    pub fn passed(&self) -> bool {
        self.forward && self.equality.unwrap_or(true)
    }
}

/// Checks `S(x) <= S^T(1/2, x)` at truncation `levels`, and mutual inclusion
/// when `S(0)` lies in the recession cone of the sampled value.
pub fn check_lemma_tt(
    s: &ErrorMap,
    x: &RationalVector,
    levels: u32,
) -> Result<LemmaTtOutcome> {
    let half = rat(1, 2);
    let value = s.evaluate(x)?;
    let transformed = takagi_transform_truncated(s, &half, x, levels)?;
    let forward = subset(&value, &transformed, &Rational::zero())?.holds();
    let at_zero = s.evaluate(&RationalVector::zero(s.map().domain_dim()))?;
    let rec_value = recession_cone(&value).as_polyhedron();
    let equality_applicable = subset(&at_zero, &rec_value, &Rational::zero())?.holds();
    let equality = if equality_applicable {
        Some(set_eq(&transformed, &value)?)
    } else {
        None
    };
    Ok(LemmaTtOutcome {
        forward,
        equality_applicable,
        equality,
    })
}

/// Sampled recession cone of a map: the intersection of the recession cones
/// of finitely many values.  A finite-sample under-approximation of the
/// intersection over the whole domain.
pub fn rec_of_map(s: &SetValuedMap, sample: &[RationalVector]) -> Result<Cone> {
    let mut acc = Cone::full_space(s.value_dim());
    for x in sample {
        let rc = recession_cone(&s.evaluate(x)?);
        acc = cone_intersection(&acc, &rc)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_int;

    fn vq(coords: &[(i64, i64)]) -> RationalVector {
        RationalVector(coords.iter().map(|&(p, q)| rat(p, q)).collect())
    }

    fn vi(coords: &[i64]) -> RationalVector {
        RationalVector(coords.iter().map(|&c| rat_int(c)).collect())
    }

    fn seg(a: (i64, i64), b: (i64, i64)) -> Polyhedron {
        Polyhedron::segment(vq(&[a]), vq(&[b])).unwrap()
    }

    fn halfline_map(eps: (i64, i64)) -> ErrorMap {
        // S(u) = R_+ + eps [-1, 0] = [-eps, oo)
        let k = Cone::new(1, vec![vi(&[1])]).unwrap();
        let phi = ErrorFunction::constant(rat(eps.0, eps.1)).unwrap();
        let s0 = seg((-1, 1), (0, 1));
        let map = SetValuedMap::new(1, 1, MapKind::ConePlusScaled { k, phi, s0 }).unwrap();
        ErrorMap::new(map).unwrap()
    }

    #[test]
    fn box_grid_points_row_major() {
        let g = DomainGrid::from_box(vi(&[0, 0]), vi(&[1, 1]), rat_int(1)).unwrap();
        assert_eq!(g.points().len(), 4);
        assert_eq!(g.points()[0], vi(&[0, 0]));
        assert_eq!(g.points()[1], vi(&[0, 1]));
        assert_eq!(g.points()[2], vi(&[1, 0]));
        assert!(g.contains(&vi(&[1, 1])));
        assert!(!g.contains(&vq(&[(1, 2), (0, 1)])));
    }

    #[test]
    fn box_grid_fractional_step() {
        let g = DomainGrid::from_box(vi(&[0]), vi(&[1]), rat(1, 4)).unwrap();
        assert_eq!(g.points().len(), 5);
        assert!(g.contains(&vq(&[(3, 4)])));
        assert!(DomainGrid::from_box(vi(&[0]), vi(&[1]), rat_int(0)).is_err());
        assert!(DomainGrid::from_box(vi(&[1]), vi(&[0]), rat_int(1)).is_err());
    }

    #[test]
    fn simplex_grid_barycentric() {
        let g = DomainGrid::from_simplex(vec![vi(&[0, 0]), vi(&[2, 0]), vi(&[0, 2])], 2).unwrap();
        assert_eq!(g.points().len(), 6);
        assert!(g.contains(&vi(&[1, 1])));
        assert!(g.contains(&vi(&[1, 0])));
        assert!(!g.contains(&vi(&[2, 2])));
        assert!(matches!(
            DomainGrid::from_simplex(vec![vi(&[0])], 0),
            Err(Error::ZeroLevels)
        ));
    }

    #[test]
    fn grid_adjoin_idempotent() {
        let mut g = DomainGrid::from_points(vec![vi(&[0]), vi(&[1])]).unwrap();
        g.adjoin(vi(&[1]));
        g.adjoin(vq(&[(1, 2)]));
        assert_eq!(g.points().len(), 3);
        assert_eq!(g.points()[2], vq(&[(1, 2)]));
    }

    #[test]
    fn polynomial_evaluation() {
        // f(x) = x^2 at 3 -> 9
        let f = PolynomialMap::new(
            1,
            vec![vec![Monomial {
                coef: rat_int(1),
                powers: vec![2],
            }]],
        )
        .unwrap();
        assert_eq!(f.evaluate(&vi(&[3])), vi(&[9]));
        assert!(matches!(
            PolynomialMap::new(
                1,
                vec![vec![Monomial {
                    coef: rat_int(1),
                    powers: vec![5],
                }]],
            ),
            Err(Error::DegreeTooHigh { degree: 5 })
        ));
    }

    #[test]
    fn polynomial_cancellation_detected() {
        let f = PolynomialMap::new(
            1,
            vec![vec![
                Monomial {
                    coef: rat(1, 2),
                    powers: vec![1],
                },
                Monomial {
                    coef: rat(-1, 2),
                    powers: vec![1],
                },
            ]],
        )
        .unwrap();
        assert!(f.is_identically_zero());
    }

    #[test]
    fn singleton_map_evaluates() {
        let f = PolynomialMap::new(
            1,
            vec![vec![Monomial {
                coef: rat_int(1),
                powers: vec![2],
            }]],
        )
        .unwrap();
        let map = SetValuedMap::new(1, 1, MapKind::Singleton(f)).unwrap();
        let value = map.evaluate(&vi(&[3])).unwrap();
        assert!(set_eq(&value, &Polyhedron::singleton(vi(&[9])).unwrap()).unwrap());
    }

    #[test]
    fn cone_plus_scaled_matches_halfline() {
        let em = halfline_map((1, 3));
        let value = em.evaluate(&vi(&[7])).unwrap();
        let expected =
            Polyhedron::new(1, vec![vq(&[(-1, 3)])], vec![vi(&[1])]).unwrap();
        assert!(set_eq(&value, &expected).unwrap());
    }

    #[test]
    fn tabulated_map_lookup() {
        let map = SetValuedMap::new(
            1,
            1,
            MapKind::Tabulated(vec![(vi(&[0]), seg((0, 1), (1, 1)))]),
        )
        .unwrap();
        assert!(map.evaluate(&vi(&[0])).is_ok());
        assert!(matches!(
            map.evaluate(&vi(&[2])),
            Err(Error::MissingTableEntry { .. })
        ));
        assert!(SetValuedMap::new(
            1,
            1,
            MapKind::Tabulated(vec![
                (vi(&[0]), seg((0, 1), (1, 1))),
                (vi(&[0]), seg((0, 1), (2, 1))),
            ]),
        )
        .is_err());
    }

    #[test]
    fn error_map_singleton_must_vanish() {
        let nonzero = PolynomialMap::new(
            1,
            vec![vec![Monomial {
                coef: rat_int(1),
                powers: vec![1],
            }]],
        )
        .unwrap();
        let map = SetValuedMap::new(1, 1, MapKind::Singleton(nonzero)).unwrap();
        assert!(ErrorMap::new(map).is_err());

        let zero = PolynomialMap::new(1, vec![vec![]]).unwrap();
        let map = SetValuedMap::new(1, 1, MapKind::Singleton(zero)).unwrap();
        let em = ErrorMap::new(map).unwrap();
        assert_eq!(em.tail(), TransformTail::Conic);
        // transform of the zero map is {0} at every (t, x, N)
        let out = takagi_transform_truncated(&em, &rat(1, 3), &vi(&[2]), 6).unwrap();
        assert!(set_eq(&out, &Polyhedron::origin(1)).unwrap());
    }

    #[test]
    fn error_map_tail_classes() {
        assert_eq!(halfline_map((1, 4)).tail(), TransformTail::ConstantScaled);

        let k = Cone::new(1, vec![vi(&[1])]).unwrap();
        let phi = ErrorFunction::sq_l2(rat(1, 4)).unwrap();
        let s0 = seg((-1, 1), (0, 1));
        let map = SetValuedMap::new(1, 1, MapKind::ConePlusScaled { k, phi, s0 }).unwrap();
        assert_eq!(ErrorMap::new(map).unwrap().tail(), TransformTail::Conic);

        // non-conic value at 0 is rejected strictly, admitted unrestricted
        let table = MapKind::Tabulated(vec![
            (vi(&[0]), seg((0, 1), (1, 1))),
            (vi(&[1]), seg((0, 1), (2, 1))),
        ]);
        let map = SetValuedMap::new(1, 1, table).unwrap();
        assert!(ErrorMap::new(map.clone()).is_err());
        let em = ErrorMap::new_unrestricted(map).unwrap();
        assert_eq!(em.tail(), TransformTail::General);
    }

    #[test]
    fn error_map_needs_zero_in_values() {
        let k = Cone::new(1, vec![vi(&[1])]).unwrap();
        let phi = ErrorFunction::constant(rat_int(1)).unwrap();
        let s0 = seg((1, 1), (2, 1)); // 0 not in S0
        let map = SetValuedMap::new(1, 1, MapKind::ConePlusScaled { k, phi, s0 }).unwrap();
        assert!(matches!(
            ErrorMap::new_unrestricted(map),
            Err(Error::InvalidErrorMap { .. })
        ));
    }

    #[test]
    fn constant_cone_map_is_fixed_point() {
        // S(u) = K: the transform is K at every (t, x, N)
        let k = Cone::new(2, vec![vi(&[1, 0]), vi(&[1, 1])]).unwrap();
        let phi = ErrorFunction::constant(rat_int(0)).unwrap();
        let s0 = Polyhedron::origin(2);
        let map = SetValuedMap::new(2, 2, MapKind::ConePlusScaled { k: k.clone(), phi, s0 })
            .unwrap();
        let em = ErrorMap::new(map).unwrap();
        for (t, n) in [(rat(1, 3), 4), (rat(5, 8), 2), (rat_int(0), 1)] {
            let out = takagi_transform_truncated(&em, &t, &vi(&[1, 2]), n).unwrap();
            assert!(set_eq(&out, &k.as_polyhedron()).unwrap());
        }
    }

    #[test]
    fn truncation_monotone_in_levels() {
        let k = Cone::new(1, vec![vi(&[1])]).unwrap();
        let phi = ErrorFunction::sq_l2(rat(1, 4)).unwrap();
        let s0 = seg((-1, 1), (0, 1));
        let map = SetValuedMap::new(1, 1, MapKind::ConePlusScaled { k, phi, s0 }).unwrap();
        let em = ErrorMap::new(map).unwrap();
        let x = vi(&[2]);
        let t = rat(1, 3); // non-dyadic: every level adds mass
        let mut prev = takagi_transform_truncated(&em, &t, &x, 1).unwrap();
        for n in 2..8 {
            let next = takagi_transform_truncated(&em, &t, &x, n).unwrap();
            assert!(subset(&prev, &next, &Rational::zero()).unwrap().holds());
            assert!(!subset(&next, &prev, &Rational::zero()).unwrap().holds());
            prev = next;
        }
    }

    #[test]
    fn dyadic_stabilization_conic_tail() {
        let k = Cone::new(1, vec![vi(&[1])]).unwrap();
        let phi = ErrorFunction::sq_l2(rat(1, 4)).unwrap();
        let s0 = seg((-1, 1), (0, 1));
        let map = SetValuedMap::new(1, 1, MapKind::ConePlusScaled { k, phi, s0 }).unwrap();
        let em = ErrorMap::new(map).unwrap();
        let t = rat(3, 8); // depth 3
        let x = vi(&[2]);
        let at3 = takagi_transform_truncated(&em, &t, &x, 3).unwrap();
        for n in 4..7 {
            let atn = takagi_transform_truncated(&em, &t, &x, n).unwrap();
            assert!(set_eq(&at3, &atn).unwrap());
        }
    }

    #[test]
    fn structured_agrees_with_truncated() {
        let k = Cone::new(1, vec![vi(&[1])]).unwrap();
        let phi = ErrorFunction::sq_l2(rat(1, 4)).unwrap();
        let s0 = seg((-1, 1), (0, 1));
        let map = SetValuedMap::new(
            1,
            1,
            MapKind::ConePlusScaled {
                k: k.clone(),
                phi: phi.clone(),
                s0: s0.clone(),
            },
        )
        .unwrap();
        let em = ErrorMap::new(map).unwrap();
        let t = DyadicRational::new(3, 3);
        let x = vi(&[2]);
        let closed = takagi_transform_structured(&k, &phi, &s0, &t, &x).unwrap();
        let truncated = takagi_transform_truncated(&em, &t.value(), &x, 5).unwrap();
        assert!(set_eq(&closed, &truncated).unwrap());
        // coefficient is (1/4) T_2(3/8) x^2 = (1/4)(15/16)(4) = 15/16
        let direct = minkowski_sum(
            &k.as_polyhedron(),
            &scale(&s0, &rat(15, 16)).unwrap(),
        )
        .unwrap();
        assert!(set_eq(&closed, &direct).unwrap());
    }

    #[test]
    fn constant_scaled_closed_form() {
        // Cor-style collapse: K + 2 eps S0 at every t, already at low levels
        let em = halfline_map((1, 3));
        let expected = Polyhedron::new(1, vec![vq(&[(-2, 3)])], vec![vi(&[1])]).unwrap();
        for t in [rat(1, 3), rat(5, 8), rat_int(0)] {
            let out = takagi_transform_truncated(&em, &t, &vi(&[9]), 1).unwrap();
            assert!(set_eq(&out, &expected).unwrap());
        }
    }

    #[test]
    fn lemma_tt_equality_for_structured() {
        let k = Cone::new(1, vec![vi(&[1])]).unwrap();
        let phi = ErrorFunction::sq_l2(rat(1, 2)).unwrap();
        let s0 = seg((-1, 1), (0, 1));
        let map = SetValuedMap::new(1, 1, MapKind::ConePlusScaled { k, phi, s0 }).unwrap();
        let em = ErrorMap::new(map).unwrap();
        let out = check_lemma_tt(&em, &vi(&[3]), 6).unwrap();
        assert!(out.forward && out.equality_applicable);
        assert_eq!(out.equality, Some(true));
        assert!(out.passed());
    }

    #[test]
    fn lemma_tt_one_sided_for_general_tail() {
        // S(0) = [0,1] not inside rec(S(1)) = {0}: only the forward inclusion
        let table = MapKind::Tabulated(vec![
            (vi(&[0]), seg((0, 1), (1, 1))),
            (vi(&[1]), seg((0, 1), (2, 1))),
        ]);
        let map = SetValuedMap::new(1, 1, table).unwrap();
        let em = ErrorMap::new_unrestricted(map).unwrap();
        let out = check_lemma_tt(&em, &vi(&[1]), 4).unwrap();
        assert!(out.forward);
        assert!(!out.equality_applicable);
        assert_eq!(out.equality, None);
        assert!(out.passed());
        // and equality indeed fails: the truncated transform is strictly larger
        let transformed =
            takagi_transform_truncated(&em, &rat(1, 2), &vi(&[1]), 4).unwrap();
        let value = em.evaluate(&vi(&[1])).unwrap();
        assert!(!subset(&transformed, &value, &Rational::zero())
            .unwrap()
            .holds());
    }

    #[test]
    fn rec_of_map_families() {
        // structured family: rec is K for any sample
        let k = Cone::new(2, vec![vi(&[1, 0])]).unwrap();
        let phi = ErrorFunction::constant(rat_int(1)).unwrap();
        let s0 = Polyhedron::new(
            2,
            vec![vi(&[0, 0]), vi(&[-1, 0]), vi(&[0, -1]), vi(&[-1, -1])],
            vec![],
        )
        .unwrap();
        let map = SetValuedMap::new(
            2,
            2,
            MapKind::ConePlusScaled {
                k: k.clone(),
                phi,
                s0,
            },
        )
        .unwrap();
        let rc = rec_of_map(&map, &[vi(&[0, 0]), vi(&[1, 1])]).unwrap();
        assert!(set_eq(&rc.as_polyhedron(), &k.as_polyhedron()).unwrap());

        // singleton family: bounded values, rec {0}
        let f = PolynomialMap::new(
            1,
            vec![vec![Monomial {
                coef: rat_int(1),
                powers: vec![2],
            }]],
        )
        .unwrap();
        let singleton = SetValuedMap::new(1, 1, MapKind::Singleton(f)).unwrap();
        let rc = rec_of_map(&singleton, &[vi(&[0]), vi(&[2])]).unwrap();
        assert!(rc.as_polyhedron().is_origin());

        // mixed tabulated cones: quadrant-wedge intersection
        let wedge1 = Cone::new(2, vec![vi(&[1, 0]), vi(&[1, 1])]).unwrap();
        let wedge2 = Cone::new(2, vec![vi(&[1, 1]), vi(&[0, 1])]).unwrap();
        let table = MapKind::Tabulated(vec![
            (vi(&[0]), wedge1.as_polyhedron()),
            (vi(&[1]), wedge2.as_polyhedron()),
        ]);
        let mixed = SetValuedMap::new(1, 2, table).unwrap();
        let rc = rec_of_map(&mixed, &[vi(&[0]), vi(&[1])]).unwrap();
        let expected = Cone::new(2, vec![vi(&[1, 1])]).unwrap();
        assert!(set_eq(&rc.as_polyhedron(), &expected.as_polyhedron()).unwrap());
    }
}
