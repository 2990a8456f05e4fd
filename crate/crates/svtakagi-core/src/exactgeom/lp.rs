//! Exact rational feasibility kernel.
//!
//! Answers "does `sum_j x_j * col_j = rhs` admit a solution with `x >= 0`"
//! by a phase-1 simplex over arbitrary-precision rationals.  Pivots follow
//! Bland's rule (lowest eligible index enters; ratio ties leave by lowest
//! basis index), which makes the run deterministic and cycle-free.

use crate::rational::Rational;
use num_traits::{One, Signed, Zero};

/// Returns a nonnegative solution of the equality system, if any exists.
pub fn solve_nonneg(columns: &[Vec<Rational>], rhs: &[Rational]) -> Option<Vec<Rational>> {
    let m = rhs.len();
    let n = columns.len();
    debug_assert!(columns.iter().all(|c| c.len() == m));
    let width = n + m + 1;

    // Rows with negative right-hand side are negated so the artificial
    // start basis is feasible.
    let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(m);
    for i in 0..m {
        let flip = rhs[i].is_negative();
        let mut row: Vec<Rational> = Vec::with_capacity(width);
        for col in columns {
            row.push(if flip { -&col[i] } else { col[i].clone() });
        }
        for k in 0..m {
            row.push(if k == i {
                Rational::one()
            } else {
                Rational::zero()
            });
        }
        row.push(if flip { -&rhs[i] } else { rhs[i].clone() });
        rows.push(row);
    }
    let mut basis: Vec<usize> = (n..n + m).collect();

    // Reduced costs for minimizing the sum of artificials, priced out
    // against the artificial start basis.  The last entry holds the
    // negated objective value.
    let mut obj: Vec<Rational> = vec![Rational::zero(); width];
    for row in &rows {
        for (o, v) in obj.iter_mut().zip(row.iter()) {
            *o -= v;
        }
    }
    for k in 0..m {
        obj[n + k] += Rational::one();
    }

    loop {
        let Some(enter) = (0..n + m).find(|&j| obj[j].is_negative()) else {
            break;
        };
        let mut leave: Option<usize> = None;
        let mut best: Option<Rational> = None;
        for i in 0..m {
            if rows[i][enter].is_positive() {
                let ratio = &rows[i][width - 1] / &rows[i][enter];
                let better = match &best {
                    None => true,
                    Some(b) => {
                        ratio < *b || (ratio == *b && basis[i] < basis[leave.unwrap()])
                    }
                };
                if better {
                    best = Some(ratio);
                    leave = Some(i);
                }
            }
        }
        // The phase-1 objective is bounded below by zero, so an entering
        // column always admits a leaving row.
        let li = leave.expect("phase-1 simplex cannot be unbounded");
        pivot(&mut rows, &mut obj, li, enter);
        basis[li] = enter;
    }

    if !obj[width - 1].is_zero() {
        return None;
    }
    let mut x = vec![Rational::zero(); n];
    for i in 0..m {
        if basis[i] < n {
            x[basis[i]] = rows[i][width - 1].clone();
        } else {
            debug_assert!(rows[i][width - 1].is_zero());
        }
    }
    Some(x)
}

fn pivot(rows: &mut [Vec<Rational>], obj: &mut [Rational], li: usize, enter: usize) {
    let width = obj.len();
    let piv = rows[li][enter].clone();
    for v in rows[li].iter_mut() {
        *v /= &piv;
    }
    let prow = rows[li].clone();
    for (i, row) in rows.iter_mut().enumerate() {
        if i == li || row[enter].is_zero() {
            continue;
        }
        let f = row[enter].clone();
        for j in 0..width {
            if !prow[j].is_zero() {
                let d = &f * &prow[j];
                row[j] -= d;
            }
        }
    }
    if !obj[enter].is_zero() {
        let f = obj[enter].clone();
        for j in 0..width {
            if !prow[j].is_zero() {
                let d = &f * &prow[j];
                obj[j] -= d;
            }
        }
    }
}
