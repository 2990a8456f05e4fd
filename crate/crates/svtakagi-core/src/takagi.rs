//! Takagi-type series and scalar error functions.
//!
//! The central objects are the distance-to-integers function
//! `d(t) = dist(t, Z)` and the series
//!
//! ```text
//! T_alpha(t) = sum_{n>=0} 2^(alpha-n) d(2^n t)^alpha      (alpha >= 1)
//! T(t)       = sum_{n>=0} 2^(-n)      d(2^n t)            (classic kernel)
//! ```
//!
//! so `T_1 = 2 T`, and `T_2(t) = 4 t (1 - t)` on `[0, 1]`.  At a dyadic
//! argument `t = p/2^m` every term with `n >= m` vanishes and the sum is a
//! finite exact rational; elsewhere the term bound `2^(alpha-n) d^alpha <=
//! 2^(-n)` gives the enclosure tail `2^(1-N)` used by the interval mode.
//!
//! A scalar error function `phi` is lifted to its transform
//! `phi^T(t, x) = sum_n 2^(-n) phi(2 d(2^n t) x)`; for constant `phi == e`
//! the whole series collapses to the closed form `2 e` (no truncation), and
//! for `phi(0) = 0` it terminates at dyadic `t` like the series above.

use crate::error::{Error, Result};
use crate::exactgeom::RationalVector;
use crate::rational::{format_rational, pow2, rat, Rational};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;

/// Distance from `t` to the nearest integer; always in `[0, 1/2]`.
pub fn dist_to_integers(t: &Rational) -> Rational {
    let frac = t - t.floor();
    let complement = Rational::one() - &frac;
    frac.min(complement)
}

/// A dyadic rational `p / 2^m` in canonical form: `p` odd or `m = 0`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct DyadicRational {
    p: i128,
    m: u32,
}

impl DyadicRational {
    pub fn new(p: i128, m: u32) -> Self {
        let (mut p, mut m) = (p, m);
        while m > 0 && p % 2 == 0 {
            p /= 2;
            m -= 1;
        }
        DyadicRational { p, m }
    }

    pub fn zero() -> Self {
        DyadicRational { p: 0, m: 0 }
    }

    pub fn one() -> Self {
        DyadicRational { p: 1, m: 0 }
    }

    pub fn numer(&self) -> i128 {
        self.p
    }

    /// Depth of the canonical form: the least `m` with `2^m * t` integral.
    pub fn depth(&self) -> u32 {
        self.m
    }

    pub fn value(&self) -> Rational {
        Rational::new(BigInt::from(self.p), BigInt::one() << self.m as usize)
    }

    /// Exact conversion; fails when the denominator is not a power of two.
    pub fn from_rational(r: &Rational) -> Result<Self> {
        let not_dyadic = || Error::NotDyadic {
            value: format_rational(r),
        };
        let denom = r.denom();
        let tz = denom.trailing_zeros().unwrap_or(0);
        if denom.bits() != tz + 1 {
            return Err(not_dyadic());
        }
        let p: i128 = r.numer().try_into().map_err(|_| not_dyadic())?;
        let m: u32 = tz.try_into().map_err(|_| not_dyadic())?;
        Ok(DyadicRational::new(p, m))
    }

    /// `2t`, still canonical.
    pub fn double(&self) -> Self {
        if self.m == 0 {
            DyadicRational {
                p: self.p * 2,
                m: 0,
            }
        } else {
            DyadicRational {
                p: self.p,
                m: self.m - 1,
            }
        }
    }

    /// `1 - t`.
    pub fn complement(&self) -> Self {
        DyadicRational::new((1i128 << self.m) - self.p, self.m)
    }

    /// Fractional part in `[0, 1)`.
    pub fn fract(&self) -> Self {
        let q = 1i128 << self.m;
        DyadicRational::new(self.p.rem_euclid(q), self.m)
    }

    pub fn in_unit_interval(&self) -> bool {
        self.p >= 0 && self.p <= (1i128 << self.m)
    }

    /// All dyadics `k / 2^m` in `[0, 1]`, ascending.
    pub fn unit_grid(depth: u32) -> Vec<DyadicRational> {
        (0..=(1i128 << depth))
            .map(|k| DyadicRational::new(k, depth))
            .collect()
    }
}

impl PartialOrd for DyadicRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for DyadicRational {
    fn cmp(&self, other: &Self) -> Ordering {
        // p1/2^m1 vs p2/2^m2 on a common power-of-two denominator
        let shift = self.m.max(other.m);
        let a = self.p << (shift - self.m);
        let b = other.p << (shift - other.m);
        a.cmp(&b)
    }
}

impl fmt::Display for DyadicRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

/// An exact enclosure `[lower, upper]` of a real number.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BoundedValue {
    lower: Rational,
    upper: Rational,
}

impl BoundedValue {
    pub fn new(lower: Rational, upper: Rational) -> Self {
        debug_assert!(lower <= upper);
        BoundedValue { lower, upper }
    }

    pub fn exact(value: Rational) -> Self {
        BoundedValue {
            lower: value.clone(),
            upper: value,
        }
    }

    pub fn lower(&self) -> &Rational {
        &self.lower
    }

    pub fn upper(&self) -> &Rational {
        &self.upper
    }

    pub fn width(&self) -> Rational {
        &self.upper - &self.lower
    }

    pub fn contains(&self, v: &Rational) -> bool {
        self.lower <= *v && *v <= self.upper
    }

    pub fn intersects(&self, other: &Self) -> bool {
        self.lower <= other.upper && other.lower <= self.upper
    }

    pub fn scale(&self, c: &Rational) -> Self {
        debug_assert!(!c.is_negative());
        BoundedValue {
            lower: &self.lower * c,
            upper: &self.upper * c,
        }
    }
}

fn check_alpha_exact(alpha: u32) -> Result<()> {
    match alpha {
        1 | 2 => Ok(()),
        0 => Err(Error::ZeroAlpha),
        _ => Err(Error::UnsupportedAlpha { alpha }),
    }
}

fn pow_rat(base: &Rational, exp: u32) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

/// `T_alpha` at a dyadic argument: a finite sum, exact.  Exact mode is
/// deliberately restricted to `alpha` in `{1, 2}`.
pub fn takagi_alpha_dyadic(t: &DyadicRational, alpha: u32) -> Result<Rational> {
    check_alpha_exact(alpha)?;
    Ok(takagi_alpha_dyadic_any(t, alpha))
}

fn takagi_alpha_dyadic_any(t: &DyadicRational, alpha: u32) -> Rational {
    let mut sum = Rational::zero();
    let mut cur = *t;
    for n in 0..t.depth() {
        let d = dist_to_integers(&cur.value());
        if !d.is_zero() {
            sum += pow2(alpha as i32 - n as i32) * pow_rat(&d, alpha);
        }
        cur = cur.double();
    }
    sum
}

/// Least `N >= 1` with `2^(1-N) <= tail_bound`.
fn levels_for_tail(tail_bound: &Rational) -> Result<u32> {
    if !tail_bound.is_positive() {
        return Err(Error::NonPositiveTail {
            bound: format_rational(tail_bound),
        });
    }
    let mut n: u32 = 1;
    let mut budget = Rational::one(); // 2^(1-n)
    while budget > *tail_bound {
        budget /= rat(2, 1);
        n += 1;
    }
    Ok(n)
}

fn takagi_series_interval(
    t: &Rational,
    term: impl Fn(u32, &Rational) -> Rational,
    tail_at: impl Fn(u32) -> Rational,
    tail_bound: &Rational,
) -> Result<BoundedValue> {
    let levels = levels_for_tail(tail_bound)?;
    let mut cur = t - t.floor();
    let mut sum = Rational::zero();
    for n in 0..levels {
        if cur.is_zero() {
            // dyadic input: the series has terminated, enclosure is exact
            return Ok(BoundedValue::exact(sum));
        }
        sum += term(n, &dist_to_integers(&cur));
        cur = &cur + &cur;
        cur -= cur.floor();
    }
    if cur.is_zero() {
        return Ok(BoundedValue::exact(sum));
    }
    let upper = &sum + tail_at(levels);
    Ok(BoundedValue::new(sum, upper))
}

/// Interval enclosure of `T_alpha(t)` for natural `alpha >= 1`.  The
/// enclosure width is the proven termwise tail `2^(1-N)`; dyadic inputs
/// terminate early and come back exact (width 0).
pub fn takagi_alpha(t: &Rational, alpha: u32, tail_bound: &Rational) -> Result<BoundedValue> {
    if alpha == 0 {
        return Err(Error::ZeroAlpha);
    }
    takagi_series_interval(
        t,
        |n, d| pow2(alpha as i32 - n as i32) * pow_rat(d, alpha),
        |levels| pow2(1 - levels as i32),
        tail_bound,
    )
}

/// Interval enclosure of the classic kernel `T(t) = sum 2^(-n) d(2^n t)`;
/// termwise `2^(-n) d <= 2^(-n-1)`, so the tail from level `N` is `2^(-N)`.
pub fn takagi_classic(t: &Rational, tail_bound: &Rational) -> Result<BoundedValue> {
    takagi_series_interval(
        t,
        |n, d| pow2(-(n as i32)) * d,
        |levels| pow2(-(levels as i32)),
        tail_bound,
    )
}

/// `| T_alpha(t) - 2^alpha d(t)^alpha - T_alpha(2t) / 2 |`, exactly.
pub fn functional_equation_residual(alpha: u32, t: &DyadicRational) -> Result<Rational> {
    check_alpha_exact(alpha)?;
    let lhs = takagi_alpha_dyadic_any(t, alpha);
    let d = dist_to_integers(&t.value());
    let rhs = pow2(alpha as i32) * pow_rat(&d, alpha)
        + takagi_alpha_dyadic_any(&t.double(), alpha) / rat(2, 1);
    Ok((lhs - rhs).abs())
}

/// Scalar error functions `phi : Q^d -> Q_{>=0}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ErrorFunction {
    /// `phi == epsilon`.
    Constant { epsilon: Rational },
    /// `phi(x) = epsilon * |x|_1`.
    L1 { epsilon: Rational },
    /// `phi(x) = epsilon * |x|_inf`.
    Linf { epsilon: Rational },
    /// `phi(x) = epsilon * |x|_2^2`.
    SqL2 { epsilon: Rational },
    /// Finite table of exact values.
    Tabulated {
        entries: Vec<(RationalVector, Rational)>,
    },
}

impl ErrorFunction {
    pub fn constant(epsilon: Rational) -> Result<Self> {
        Self::check_nonneg(&epsilon)?;
        Ok(ErrorFunction::Constant { epsilon })
    }

    pub fn l1(epsilon: Rational) -> Result<Self> {
        Self::check_nonneg(&epsilon)?;
        Ok(ErrorFunction::L1 { epsilon })
    }

    pub fn linf(epsilon: Rational) -> Result<Self> {
        Self::check_nonneg(&epsilon)?;
        Ok(ErrorFunction::Linf { epsilon })
    }

    pub fn sq_l2(epsilon: Rational) -> Result<Self> {
        Self::check_nonneg(&epsilon)?;
        Ok(ErrorFunction::SqL2 { epsilon })
    }

    pub fn tabulated(entries: Vec<(RationalVector, Rational)>) -> Result<Self> {
        for (at, value) in &entries {
            if value.is_negative() {
                return Err(Error::NegativeErrorFunction {
                    detail: format!("value {} at {}", format_rational(value), at),
                });
            }
            if entries.iter().filter(|(a, _)| a == at).count() > 1 {
                return Err(Error::DuplicateTableEntry {
                    point: at.to_string(),
                });
            }
        }
        Ok(ErrorFunction::Tabulated { entries })
    }

    fn check_nonneg(epsilon: &Rational) -> Result<()> {
        if epsilon.is_negative() {
            return Err(Error::NegativeErrorFunction {
                detail: format!("epsilon = {}", format_rational(epsilon)),
            });
        }
        Ok(())
    }

    pub fn evaluate(&self, x: &RationalVector) -> Result<Rational> {
        match self {
            ErrorFunction::Constant { epsilon } => Ok(epsilon.clone()),
            ErrorFunction::L1 { epsilon } => Ok(epsilon * x.l1_norm()),
            ErrorFunction::Linf { epsilon } => Ok(epsilon * x.linf_norm()),
            ErrorFunction::SqL2 { epsilon } => Ok(epsilon * x.sq_l2_norm()),
            ErrorFunction::Tabulated { entries } => entries
                .iter()
                .find(|(at, _)| at == x)
                .map(|(_, v)| v.clone())
                .ok_or_else(|| Error::MissingTableEntry {
                    point: x.to_string(),
                }),
        }
    }

    /// The constant value, when the function is constant.
    pub fn constant_value(&self) -> Option<&Rational> {
        match self {
            ErrorFunction::Constant { epsilon } => Some(epsilon),
            _ => None,
        }
    }

    /// Whether `phi(0) = 0` is known to hold.
    pub fn vanishes_at_zero(&self, dim: usize) -> bool {
        match self {
            ErrorFunction::Constant { epsilon } => epsilon.is_zero(),
            ErrorFunction::L1 { .. } | ErrorFunction::Linf { .. } | ErrorFunction::SqL2 { .. } => {
                true
            }
            ErrorFunction::Tabulated { entries } => {
                let zero = RationalVector::zero(dim);
                entries
                    .iter()
                    .any(|(at, v)| *at == zero && v.is_zero())
            }
        }
    }
}

/// `phi^T(t, x)` at dyadic `t`, exactly.  Constant `phi == e` collapses to
/// the closed form `2e`; otherwise `phi(0) = 0` is required so the series
/// terminates at depth `m`.
pub fn phi_transform_dyadic(
    phi: &ErrorFunction,
    t: &DyadicRational,
    x: &RationalVector,
) -> Result<Rational> {
    if let Some(epsilon) = phi.constant_value() {
        return Ok(rat(2, 1) * epsilon);
    }
    if !phi.vanishes_at_zero(x.dim()) {
        return Err(Error::NonVanishingAtZero);
    }
    let mut sum = Rational::zero();
    let mut cur = *t;
    let two = rat(2, 1);
    for n in 0..t.depth() {
        let c = &two * dist_to_integers(&cur.value());
        sum += pow2(-(n as i32)) * phi.evaluate(&x.scale(&c))?;
        cur = cur.double();
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{parse_rational, rat_int};

    fn vq(coords: &[(i64, i64)]) -> RationalVector {
        RationalVector(coords.iter().map(|&(p, q)| rat(p, q)).collect())
    }

    #[test]
    fn dist_to_integers_cases() {
        assert_eq!(dist_to_integers(&rat(5, 3)), rat(1, 3));
        assert_eq!(dist_to_integers(&rat(-1, 4)), rat(1, 4));
        assert_eq!(dist_to_integers(&rat(7, 2)), rat(1, 2));
        assert_eq!(dist_to_integers(&rat_int(4)), rat_int(0));
        assert_eq!(dist_to_integers(&rat(1, 2)), rat(1, 2));
    }

    #[test]
    fn dyadic_canonical_form() {
        let t = DyadicRational::new(4, 3);
        assert_eq!((t.numer(), t.depth()), (1, 1));
        assert_eq!(t.value(), rat(1, 2));
        let z = DyadicRational::new(0, 7);
        assert_eq!((z.numer(), z.depth()), (0, 0));
    }

    #[test]
    fn dyadic_from_rational() {
        let t = DyadicRational::from_rational(&rat(3, 8)).unwrap();
        assert_eq!((t.numer(), t.depth()), (3, 3));
        assert!(DyadicRational::from_rational(&rat(1, 3)).is_err());
        assert_eq!(
            DyadicRational::from_rational(&rat_int(2)).unwrap(),
            DyadicRational::new(2, 0)
        );
    }

    #[test]
    fn dyadic_double_and_order() {
        let t = DyadicRational::new(3, 3);
        assert_eq!(t.double(), DyadicRational::new(3, 2));
        assert!(DyadicRational::new(1, 2) < DyadicRational::new(3, 3));
        let grid = DyadicRational::unit_grid(2);
        assert_eq!(grid.len(), 5);
        assert!(grid.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn dyadic_fract_orbit() {
        // 3/8 -> 3/4 -> 1/2 -> 0 under doubling mod 1
        let mut t = DyadicRational::new(3, 3);
        let mut seen = vec![t];
        while t.depth() > 0 {
            t = t.double().fract();
            seen.push(t);
        }
        assert_eq!(
            seen,
            vec![
                DyadicRational::new(3, 3),
                DyadicRational::new(3, 2),
                DyadicRational::new(1, 1),
                DyadicRational::zero(),
            ]
        );
    }

    #[test]
    fn takagi_alpha_dyadic_values() {
        // alpha = 2 closed form 4t(1-t) spot checks
        let cases = [((1, 1), rat_int(1)), ((1, 2), rat(3, 4)), ((3, 3), rat(15, 16))];
        for ((p, m), expected) in cases {
            let t = DyadicRational::new(p, m);
            assert_eq!(takagi_alpha_dyadic(&t, 2).unwrap(), expected);
        }
        // alpha = 1: T_1(1/4) = 1, T_1(3/8) = 5/4
        assert_eq!(
            takagi_alpha_dyadic(&DyadicRational::new(1, 2), 1).unwrap(),
            rat_int(1)
        );
        assert_eq!(
            takagi_alpha_dyadic(&DyadicRational::new(3, 3), 1).unwrap(),
            rat(5, 4)
        );
        // endpoints vanish
        for t in [DyadicRational::zero(), DyadicRational::one()] {
            assert_eq!(takagi_alpha_dyadic(&t, 1).unwrap(), rat_int(0));
            assert_eq!(takagi_alpha_dyadic(&t, 2).unwrap(), rat_int(0));
        }
        assert!(matches!(
            takagi_alpha_dyadic(&DyadicRational::new(1, 1), 3),
            Err(Error::UnsupportedAlpha { alpha: 3 })
        ));
    }

    #[test]
    fn takagi_interval_classic_third() {
        // d(2^n / 3) = 1/3 for every n, so T(1/3) = (1/3) * 2 = 2/3
        let enc = takagi_classic(&rat(1, 3), &pow2(-20)).unwrap();
        assert!(enc.contains(&rat(2, 3)));
        assert!(enc.width() <= pow2(-20));
    }

    #[test]
    fn takagi_interval_alpha_known_points() {
        // orbit of 1/5 alternates d = 1/5, 2/5: T_1(1/5) = 16/15
        let enc = takagi_alpha(&rat(1, 5), 1, &pow2(-30)).unwrap();
        assert!(enc.contains(&rat(16, 15)));
        // T_2(1/3) = 4 * (1/3) * (2/3) = 8/9
        let enc2 = takagi_alpha(&rat(1, 3), 2, &pow2(-30)).unwrap();
        assert!(enc2.contains(&rat(8, 9)));
        // dyadic input is exact
        let enc3 = takagi_alpha(&rat(3, 8), 2, &pow2(-5)).unwrap();
        assert_eq!(enc3.width(), rat_int(0));
        assert_eq!(*enc3.lower(), rat(15, 16));
    }

    #[test]
    fn takagi_interval_tail_validation() {
        assert!(matches!(
            takagi_alpha(&rat(1, 3), 1, &rat_int(0)),
            Err(Error::NonPositiveTail { .. })
        ));
        assert!(matches!(
            takagi_alpha(&rat(1, 3), 0, &rat(1, 4)),
            Err(Error::ZeroAlpha)
        ));
    }

    #[test]
    fn functional_equation_vanishes() {
        for alpha in [1, 2] {
            for t in DyadicRational::unit_grid(6) {
                assert_eq!(
                    functional_equation_residual(alpha, &t).unwrap(),
                    rat_int(0)
                );
            }
        }
    }

    #[test]
    fn error_function_values() {
        let x = vq(&[(1, 1), (-2, 1)]);
        assert_eq!(
            ErrorFunction::l1(rat(1, 2)).unwrap().evaluate(&x).unwrap(),
            rat(3, 2)
        );
        assert_eq!(
            ErrorFunction::linf(rat_int(3)).unwrap().evaluate(&x).unwrap(),
            rat_int(6)
        );
        assert_eq!(
            ErrorFunction::sq_l2(rat(1, 4)).unwrap().evaluate(&x).unwrap(),
            rat(5, 4)
        );
        assert!(ErrorFunction::constant(rat(-1, 2)).is_err());
    }

    #[test]
    fn tabulated_error_function() {
        let table = ErrorFunction::tabulated(vec![
            (vq(&[(0, 1)]), rat_int(0)),
            (vq(&[(1, 1)]), rat(1, 3)),
        ])
        .unwrap();
        assert_eq!(table.evaluate(&vq(&[(1, 1)])).unwrap(), rat(1, 3));
        assert!(matches!(
            table.evaluate(&vq(&[(2, 1)])),
            Err(Error::MissingTableEntry { .. })
        ));
        assert!(table.vanishes_at_zero(1));
        assert!(ErrorFunction::tabulated(vec![
            (vq(&[(0, 1)]), rat_int(0)),
            (vq(&[(0, 1)]), rat_int(1)),
        ])
        .is_err());
    }

    #[test]
    fn phi_transform_constant_collapses() {
        let phi = ErrorFunction::constant(rat(1, 3)).unwrap();
        let x = vq(&[(7, 2)]);
        for t in [DyadicRational::zero(), DyadicRational::new(5, 4)] {
            assert_eq!(phi_transform_dyadic(&phi, &t, &x).unwrap(), rat(2, 3));
        }
    }

    #[test]
    fn phi_transform_homogeneous_matches_series_identity() {
        // degree-1 kinds: phi^T(t, x) = epsilon * T_1(t) * |x|
        let t = DyadicRational::new(3, 3);
        let x = vq(&[(1, 1), (-2, 1)]);
        let phi = ErrorFunction::l1(rat(1, 2)).unwrap();
        let expected = rat(1, 2) * takagi_alpha_dyadic(&t, 1).unwrap() * x.l1_norm();
        assert_eq!(phi_transform_dyadic(&phi, &t, &x).unwrap(), expected);
        assert_eq!(expected, rat(15, 8));

        // degree-2 kind: phi^T(t, x) = epsilon * T_2(t) * |x|_2^2
        let phi2 = ErrorFunction::sq_l2(rat(1, 4)).unwrap();
        let expected2 = rat(1, 4) * takagi_alpha_dyadic(&t, 2).unwrap() * x.sq_l2_norm();
        assert_eq!(phi_transform_dyadic(&phi2, &t, &x).unwrap(), expected2);
        assert_eq!(expected2, rat(75, 64));
    }

    #[test]
    fn phi_transform_needs_vanishing_at_zero() {
        let phi = ErrorFunction::tabulated(vec![(vq(&[(0, 1)]), rat(1, 5))]).unwrap();
        let t = DyadicRational::new(1, 1);
        assert!(matches!(
            phi_transform_dyadic(&phi, &t, &vq(&[(1, 1)])),
            Err(Error::NonVanishingAtZero)
        ));
    }

    #[test]
    fn phi_transform_at_half_recovers_phi() {
        // phi(0) = 0 makes t = 1/2 reproduce phi(x) itself
        let phi = ErrorFunction::sq_l2(rat(2, 3)).unwrap();
        let x = vq(&[(3, 2)]);
        let t = DyadicRational::new(1, 1);
        assert_eq!(
            phi_transform_dyadic(&phi, &t, &x).unwrap(),
            phi.evaluate(&x).unwrap()
        );
    }

    #[test]
    fn bounded_value_ops() {
        let b = BoundedValue::new(rat(1, 2), rat(3, 4));
        assert_eq!(b.width(), rat(1, 4));
        assert!(b.contains(&rat(2, 3)));
        assert!(b.intersects(&BoundedValue::exact(rat(3, 4))));
        assert!(!b.intersects(&BoundedValue::exact(rat(7, 8))));
        assert_eq!(b.scale(&rat_int(2)).upper(), &rat(3, 2));
    }

    #[test]
    fn t1_equals_twice_classic_at_dyadics() {
        for t in DyadicRational::unit_grid(5) {
            let exact = takagi_alpha_dyadic(&t, 1).unwrap();
            let classic = takagi_classic(&t.value(), &pow2(-10)).unwrap();
            assert_eq!(classic.width(), rat_int(0));
            assert_eq!(exact, classic.lower() * rat_int(2));
        }
    }

    #[test]
    fn parse_alias() {
        // keep the string forms in one place for the series tests
        assert_eq!(parse_rational("15/16").unwrap(), rat(15, 16));
    }
}
