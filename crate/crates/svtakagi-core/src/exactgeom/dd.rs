//! Double description for polyhedral cones in small dimension.
//!
//! The single primitive is [`generators_from_halfspaces`]: V-generators of
//! `{x : a.x >= 0 for every normal a}`.  Applied to the rays of a cone it
//! yields the generators of the positive polar, i.e. the facet normals, so
//! two runs convert V -> H -> V and the intersection of two cones is the
//! H-to-V conversion of the combined facet lists.  Non-pointed cones are
//! handled implicitly: a line is represented by a pair of opposite rays
//! (the run starts from `+/-e_i`, which generate the whole space).
//!
//! After each halfspace insertion the generator set is pruned by an exact
//! LP redundancy test, which keeps intermediate sets small; adjacency
//! bookkeeping is not worth its complexity at dimension <= 4.

use super::{solve_nonneg, Cone, RationalVector};
use crate::error::{Error, Result};
use num_traits::Signed;

/// V-generators of the cone `{x : a.x >= 0 for all a in normals}`.
pub fn generators_from_halfspaces(dim: usize, normals: &[RationalVector]) -> Vec<RationalVector> {
    let mut gens = Cone::full_space(dim).rays().to_vec();
    for a in normals {
        if a.is_zero() {
            continue;
        }
        let mut plus: Vec<(RationalVector, crate::rational::Rational)> = Vec::new();
        let mut minus: Vec<(RationalVector, crate::rational::Rational)> = Vec::new();
        let mut next: Vec<RationalVector> = Vec::new();
        for g in gens {
            let d = a.dot(&g);
            if d.is_positive() {
                plus.push((g, d));
            } else if d.is_negative() {
                minus.push((g, d));
            } else {
                next.push(g);
            }
        }
        // Keep the nonnegative side and close the cut with the standard
        // combination (a.g+) g- - (a.g-) g+, which lies on the hyperplane.
        next.extend(plus.iter().map(|(g, _)| g.clone()));
        for (gp, dp) in &plus {
            for (gm, dm) in &minus {
                let w = gm.scale(dp).sub(&gp.scale(dm));
                if !w.is_zero() {
                    next.push(w);
                }
            }
        }
        gens = prune(dim, next);
    }
    gens
}

/// Canonicalizes, dedups and drops rays that are nonnegative combinations
/// of the others.  Deterministic: candidates are examined in order.
fn prune(dim: usize, gens: Vec<RationalVector>) -> Vec<RationalVector> {
    let canon = Cone::new(dim, gens).expect("combination rays are nonzero");
    let mut kept = canon.rays().to_vec();
    let mut i = 0;
    while i < kept.len() {
        let columns: Vec<Vec<crate::rational::Rational>> = kept
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, r)| r.0.clone())
            .collect();
        if solve_nonneg(&columns, &kept[i].0).is_some() {
            kept.remove(i);
        } else {
            i += 1;
        }
    }
    kept
}

/// Facet normals of `cone(rays)`: the generators of its positive polar
/// `{a : a.r >= 0 for every ray r}`.
pub fn cone_facets(c: &Cone) -> Vec<RationalVector> {
    generators_from_halfspaces(c.dim(), c.rays())
}

/// Exact intersection of two cones; supported up to dimension 4.
pub fn cone_intersection(c: &Cone, d: &Cone) -> Result<Cone> {
    if c.dim() != d.dim() {
        return Err(Error::DimensionMismatch {
            expected: c.dim(),
            got: d.dim(),
        });
    }
    if c.dim() > 4 {
        return Err(Error::DimensionLimit { dim: c.dim() });
    }
    let mut halfspaces = cone_facets(c);
    halfspaces.extend(cone_facets(d));
    let gens = generators_from_halfspaces(c.dim(), &halfspaces);
    Cone::new(c.dim(), gens)
}
