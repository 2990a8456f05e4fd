//! Exact polyhedral geometry in V-representation.
//!
//! A [`Polyhedron`] is `conv(vertices) + cone(rays)` over the rationals.
//! Every set built this way is a closed convex polyhedron, so topological
//! closure is the identity on this class and all predicates below are
//! decided exactly.  Generators may be redundant; rays are kept in a
//! canonical scaling (first nonzero coordinate is +/-1) and exact
//! duplicates are dropped, so structural equality is meaningful, while
//! semantic set equality is mutual [`subset`].

mod dd;
mod lp;

pub use dd::{cone_facets, cone_intersection};

use crate::error::{Error, Result};
use crate::rational::{format_rational, parse_rational, Rational};
use num_traits::{Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;

/// Dense rational vector; coordinate-wise equality and hashing.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RationalVector(pub Vec<Rational>);

impl RationalVector {
    pub fn zero(dim: usize) -> Self {
        RationalVector(vec![Rational::zero(); dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.dim(), other.dim());
        RationalVector(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.dim(), other.dim());
        RationalVector(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn neg(&self) -> Self {
        RationalVector(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        RationalVector(self.0.iter().map(|a| a * c).collect())
    }

    pub fn dot(&self, other: &Self) -> Rational {
        debug_assert_eq!(self.dim(), other.dim());
        self.0
            .iter()
            .zip(other.0.iter())
            .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
    }

    /// `t*x + (1-t)*y`.
    pub fn combine(t: &Rational, x: &Self, y: &Self) -> Self {
        let one_minus = Rational::from_integer(1.into()) - t;
        x.scale(t).add(&y.scale(&one_minus))
    }

    pub fn midpoint(x: &Self, y: &Self) -> Self {
        Self::combine(&crate::rational::rat(1, 2), x, y)
    }

    pub fn l1_norm(&self) -> Rational {
        self.0
            .iter()
            .fold(Rational::zero(), |acc, c| acc + c.abs())
    }

    pub fn linf_norm(&self) -> Rational {
        self.0
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(Rational::zero)
    }

    pub fn sq_l2_norm(&self) -> Rational {
        self.0
            .iter()
            .fold(Rational::zero(), |acc, c| acc + c * c)
    }

    pub fn from_strings(coords: &[String]) -> Result<Self> {
        Ok(RationalVector(
            coords
                .iter()
                .map(|s| parse_rational(s))
                .collect::<Result<_>>()?,
        ))
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(format_rational).collect()
    }
}

impl fmt::Display for RationalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Scales a ray so its first nonzero coordinate is +1 or -1.
fn canonical_ray(ray: &RationalVector) -> Result<RationalVector> {
    let lead = ray.0.iter().find(|c| !c.is_zero()).ok_or(Error::ZeroRay)?;
    let norm = lead.abs();
    Ok(RationalVector(ray.0.iter().map(|c| c / &norm).collect()))
}

fn dedup_in_order(vs: Vec<RationalVector>) -> Vec<RationalVector> {
    let mut out: Vec<RationalVector> = Vec::with_capacity(vs.len());
    for v in vs {
        if !out.contains(&v) {
            out.push(v);
        }
    }
    out
}

/// `conv(vertices) + cone(rays)`; nonempty and closed by construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polyhedron {
    dim: usize,
    vertices: Vec<RationalVector>,
    rays: Vec<RationalVector>,
}

impl Polyhedron {
    pub fn new(
        dim: usize,
        vertices: Vec<RationalVector>,
        rays: Vec<RationalVector>,
    ) -> Result<Self> {
        if dim == 0 {
            return Err(Error::DimensionMismatch {
                expected: 1,
                got: 0,
            });
        }
        if vertices.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        for v in &vertices {
            if v.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: v.dim(),
                });
            }
        }
        let mut canon_rays = Vec::with_capacity(rays.len());
        for r in &rays {
            if r.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: r.dim(),
                });
            }
            canon_rays.push(canonical_ray(r)?);
        }
        Ok(Polyhedron {
            dim,
            vertices: dedup_in_order(vertices),
            rays: dedup_in_order(canon_rays),
        })
    }

    /// The one-point set `{p}`.
    pub fn singleton(p: RationalVector) -> Result<Self> {
        let dim = p.dim();
        Self::new(dim, vec![p], vec![])
    }

    /// `{0}` in the given dimension.
    pub fn origin(dim: usize) -> Self {
        Self::new(dim, vec![RationalVector::zero(dim)], vec![]).expect("dim >= 1")
    }

    /// The box `[-r, r]^dim` (degenerates to `{0}` at r = 0).
    pub fn symmetric_box(dim: usize, radius: &Rational) -> Result<Self> {
        if radius.is_negative() {
            return Err(Error::NegativeSlack {
                radius: format_rational(radius),
            });
        }
        let mut vertices = Vec::with_capacity(1 << dim);
        for mask in 0..(1u64 << dim) {
            let coords = (0..dim)
                .map(|i| {
                    if mask >> i & 1 == 1 {
                        radius.clone()
                    } else {
                        -radius.clone()
                    }
                })
                .collect();
            vertices.push(RationalVector(coords));
        }
        Self::new(dim, vertices, vec![])
    }

    /// The segment `conv{a, b}`.
    pub fn segment(a: RationalVector, b: RationalVector) -> Result<Self> {
        let dim = a.dim();
        Self::new(dim, vec![a, b], vec![])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[RationalVector] {
        &self.vertices
    }

    pub fn rays(&self) -> &[RationalVector] {
        &self.rays
    }

    /// True when the set is exactly `{0}`.
    pub fn is_origin(&self) -> bool {
        self.rays.is_empty() && self.vertices.iter().all(|v| v.is_zero())
    }

    /// True when the represented set is a cone: all vertices are 0.
    /// (`{0}` counts as the trivial cone.)
    pub fn is_conic(&self) -> bool {
        self.vertices.iter().all(|v| v.is_zero())
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PolyhedronRepr {
    dim: usize,
    vertices: Vec<Vec<String>>,
    #[serde(default)]
    rays: Vec<Vec<String>>,
}

impl Serialize for Polyhedron {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        PolyhedronRepr {
            dim: self.dim,
            vertices: self.vertices.iter().map(|v| v.to_strings()).collect(),
            rays: self.rays.iter().map(|r| r.to_strings()).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Polyhedron {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = PolyhedronRepr::deserialize(deserializer)?;
        let vertices = repr
            .vertices
            .iter()
            .map(|v| RationalVector::from_strings(v))
            .collect::<Result<_>>()
            .map_err(D::Error::custom)?;
        let rays = repr
            .rays
            .iter()
            .map(|r| RationalVector::from_strings(r))
            .collect::<Result<_>>()
            .map_err(D::Error::custom)?;
        Polyhedron::new(repr.dim, vertices, rays).map_err(D::Error::custom)
    }
}

/// `cone(rays)`, always containing 0; no rays means the trivial cone `{0}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Cone {
    dim: usize,
    rays: Vec<RationalVector>,
}

impl Cone {
    pub fn new(dim: usize, rays: Vec<RationalVector>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::DimensionMismatch {
                expected: 1,
                got: 0,
            });
        }
        let mut canon = Vec::with_capacity(rays.len());
        for r in &rays {
            if r.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: r.dim(),
                });
            }
            canon.push(canonical_ray(r)?);
        }
        Ok(Cone {
            dim,
            rays: dedup_in_order(canon),
        })
    }

    pub fn trivial(dim: usize) -> Self {
        Cone::new(dim, vec![]).expect("dim >= 1")
    }

    /// The whole space, generated by `+/-e_i`.
    pub fn full_space(dim: usize) -> Self {
        let mut rays = Vec::with_capacity(2 * dim);
        for i in 0..dim {
            let mut e = RationalVector::zero(dim);
            e.0[i] = Rational::from_integer(1.into());
            rays.push(e.neg());
            rays.push(e);
        }
        Cone::new(dim, rays).expect("dim >= 1")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rays(&self) -> &[RationalVector] {
        &self.rays
    }

    pub fn is_trivial(&self) -> bool {
        self.rays.is_empty()
    }

    /// Exact membership of `v` in `cone(rays)`.
    pub fn contains(&self, v: &RationalVector) -> Result<bool> {
        if v.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: v.dim(),
            });
        }
        if v.is_zero() {
            return Ok(true);
        }
        let columns: Vec<Vec<Rational>> = self.rays.iter().map(|r| r.0.clone()).collect();
        Ok(lp::solve_nonneg(&columns, &v.0).is_some())
    }

    pub fn as_polyhedron(&self) -> Polyhedron {
        Polyhedron::new(
            self.dim,
            vec![RationalVector::zero(self.dim)],
            self.rays.clone(),
        )
        .expect("cone data is canonical")
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConeRepr {
    dim: usize,
    #[serde(default)]
    rays: Vec<Vec<String>>,
}

impl Serialize for Cone {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        ConeRepr {
            dim: self.dim,
            rays: self.rays.iter().map(|r| r.to_strings()).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Cone {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = ConeRepr::deserialize(deserializer)?;
        let rays = repr
            .rays
            .iter()
            .map(|r| RationalVector::from_strings(r))
            .collect::<Result<_>>()
            .map_err(D::Error::custom)?;
        Cone::new(repr.dim, rays).map_err(D::Error::custom)
    }
}

/// Which generator class a subset violation points at.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GeneratorKind {
    Vertex,
    Ray,
}

/// A generator of the left set that escapes the right set.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SubsetWitness {
    pub generator: RationalVector,
    pub kind: GeneratorKind,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SubsetOutcome {
    Holds,
    Violated(SubsetWitness),
}

impl SubsetOutcome {
    pub fn holds(&self) -> bool {
        matches!(self, SubsetOutcome::Holds)
    }

    pub fn witness(&self) -> Option<&SubsetWitness> {
        match self {
            SubsetOutcome::Holds => None,
            SubsetOutcome::Violated(w) => Some(w),
        }
    }
}

fn check_same_dim(a: usize, b: usize) -> Result<()> {
    if a != b {
        return Err(Error::DimensionMismatch {
            expected: a,
            got: b,
        });
    }
    Ok(())
}

/// `P + Q`: vertices are all pairwise sums, rays are the union.
///
/// Pairwise sums grow multiplicatively under iterated summation, so the
/// result is pruned to irredundant generators.  Pruning is sound for every
/// observable operation here (membership, subset, recession) because it
/// preserves the represented set; only derived sums are pruned — polyhedra
/// built directly keep their generator lists verbatim.
pub fn minkowski_sum(p: &Polyhedron, q: &Polyhedron) -> Result<Polyhedron> {
    check_same_dim(p.dim, q.dim)?;
    let mut vertices = Vec::with_capacity(p.vertices.len() * q.vertices.len());
    for a in &p.vertices {
        for b in &q.vertices {
            vertices.push(a.add(b));
        }
    }
    let mut rays = p.rays.clone();
    rays.extend(q.rays.iter().cloned());
    prune_generators(Polyhedron::new(p.dim, vertices, rays)?)
}

/// Drops every generator expressible as a combination of the remaining
/// ones: rays inside the cone of the other rays, then vertices inside the
/// hull of the other vertices plus the (already pruned) rays.
fn prune_generators(p: Polyhedron) -> Result<Polyhedron> {
    let mut rays: Vec<RationalVector> = p.rays.clone();
    let mut i = 0;
    while i < rays.len() {
        let columns: Vec<Vec<Rational>> = rays
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, r)| r.0.clone())
            .collect();
        if lp::solve_nonneg(&columns, &rays[i].0).is_some() {
            rays.remove(i);
        } else {
            i += 1;
        }
    }
    let mut vertices: Vec<RationalVector> = p.vertices.clone();
    let mut i = 0;
    while i < vertices.len() {
        let mut columns: Vec<Vec<Rational>> = Vec::with_capacity(vertices.len() + rays.len());
        for (j, v) in vertices.iter().enumerate() {
            if j == i {
                continue;
            }
            let mut col = v.0.clone();
            col.push(Rational::from_integer(1.into()));
            columns.push(col);
        }
        for r in &rays {
            let mut col = r.0.clone();
            col.push(Rational::zero());
            columns.push(col);
        }
        let mut rhs = vertices[i].0.clone();
        rhs.push(Rational::from_integer(1.into()));
        if lp::solve_nonneg(&columns, &rhs).is_some() {
            vertices.remove(i);
        } else {
            i += 1;
        }
    }
    Ok(Polyhedron {
        dim: p.dim,
        vertices,
        rays,
    })
}

/// `c * P` for `c >= 0`.  At `c = 0` the result is `{0}` unless
/// `keep_rays` is set, in which case the recession directions survive:
/// both behaviours occur in the degenerate endpoints of convex
/// combinations, so the choice is the caller's.
pub fn scale_with(p: &Polyhedron, c: &Rational, keep_rays: bool) -> Result<Polyhedron> {
    if c.is_negative() {
        return Err(Error::NegativeScale {
            factor: format_rational(c),
        });
    }
    if c.is_zero() {
        let rays = if keep_rays { p.rays.clone() } else { vec![] };
        return Polyhedron::new(p.dim, vec![RationalVector::zero(p.dim)], rays);
    }
    let vertices = p.vertices.iter().map(|v| v.scale(c)).collect();
    Polyhedron::new(p.dim, vertices, p.rays.clone())
}

/// `c * P` with the default `0 * P = {0}` convention.
pub fn scale(p: &Polyhedron, c: &Rational) -> Result<Polyhedron> {
    scale_with(p, c, false)
}

/// Exact membership: is `v` a convex combination of vertices plus a
/// nonnegative combination of rays?
pub fn contains_point(p: &Polyhedron, v: &RationalVector) -> Result<bool> {
    check_same_dim(p.dim, v.dim())?;
    let mut columns: Vec<Vec<Rational>> = Vec::with_capacity(p.vertices.len() + p.rays.len());
    for vert in &p.vertices {
        let mut col = vert.0.clone();
        col.push(Rational::from_integer(1.into()));
        columns.push(col);
    }
    for ray in &p.rays {
        let mut col = ray.0.clone();
        col.push(Rational::zero());
        columns.push(col);
    }
    let mut rhs = v.0.clone();
    rhs.push(Rational::from_integer(1.into()));
    Ok(lp::solve_nonneg(&columns, &rhs).is_some())
}

/// Decides `P subset of Q + [-slack, slack]^d` and reports the first
/// violating generator otherwise.  Vertices of `P` must land in the
/// inflated `Q`; rays of `P` must lie in the recession cone of `Q`
/// (inflation by a bounded box does not change recession).
pub fn subset(p: &Polyhedron, q: &Polyhedron, slack: &Rational) -> Result<SubsetOutcome> {
    check_same_dim(p.dim, q.dim)?;
    if slack.is_negative() {
        return Err(Error::NegativeSlack {
            radius: format_rational(slack),
        });
    }
    let target = if slack.is_zero() {
        q.clone()
    } else {
        minkowski_sum(q, &Polyhedron::symmetric_box(q.dim, slack)?)?
    };
    for v in &p.vertices {
        if !contains_point(&target, v)? {
            return Ok(SubsetOutcome::Violated(SubsetWitness {
                generator: v.clone(),
                kind: GeneratorKind::Vertex,
            }));
        }
    }
    let qrec = recession_cone(q);
    for r in &p.rays {
        if !qrec.contains(r)? {
            return Ok(SubsetOutcome::Violated(SubsetWitness {
                generator: r.clone(),
                kind: GeneratorKind::Ray,
            }));
        }
    }
    Ok(SubsetOutcome::Holds)
}

/// Semantic set equality by mutual inclusion.
pub fn set_eq(p: &Polyhedron, q: &Polyhedron) -> Result<bool> {
    let zero = Rational::zero();
    Ok(subset(p, q, &zero)?.holds() && subset(q, p, &zero)?.holds())
}

/// The recession cone of a V-polyhedron is generated by its rays.
pub fn recession_cone(p: &Polyhedron) -> Cone {
    Cone {
        dim: p.dim,
        rays: p.rays.clone(),
    }
}

pub(crate) use lp::solve_nonneg;
