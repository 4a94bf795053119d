//! Gauss hypergeometric series 2F1(a, b; 1; x) with unit third parameter.
//!
//! Only the c = 1 case is needed in this crate. The series terminates when a
//! or b is a nonpositive integer (the Jacobi-polynomial branch, exact at any
//! real x); otherwise it converges for |x| < 1 and is summed with compensated
//! accumulation up to the switch radius `X_SWITCH`, beyond which callers are
//! expected to use an integral representation instead.

use crate::error::{Error, Result};
use num_complex::Complex64;

/// Largest |x| on which the non-terminating series is accepted; keeps the
/// term count (and cancellation) bounded at machine precision.
pub const X_SWITCH: f64 = 0.75;

const MAX_TERMS: usize = 4000;

/// Detects a nonpositive integer within floating tolerance; returns the
/// truncation degree.
fn poly_degree(a: Complex64) -> Option<usize> {
    if a.im.abs() > 1e-13 {
        return None;
    }
    let r = a.re.round();
    if (a.re - r).abs() < 1e-12 && r <= 0.0 && r >= -1e7 {
        Some((-r) as usize)
    } else {
        None
    }
}

/// 2F1(a, b; 1; x) = sum_k (a)_k (b)_k / (k!)^2 x^k.
///
/// Errors with non-convergence when |x| > X_SWITCH (non-terminating case) or
/// when the stopping criterion is not reached within the term budget.
pub fn hyp2f1_c1(a: Complex64, b: Complex64, x: f64) -> Result<Complex64> {
    let degree = match (poly_degree(a), poly_degree(b)) {
        (Some(p), Some(q)) => Some(p.min(q)),
        (Some(p), None) => Some(p),
        (None, Some(q)) => Some(q),
        (None, None) => None,
    };
    if degree.is_none() && x.abs() > X_SWITCH {
        return Err(Error::NonConvergence { terms: 0 });
    }

    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    let mut comp = Complex64::new(0.0, 0.0); // Kahan compensation
    let kmax = degree.unwrap_or(MAX_TERMS);
    let mut small_streak = 0;
    for k in 0..kmax {
        let kf = k as f64;
        term *= (a + kf) * (b + kf) * x / ((kf + 1.0) * (kf + 1.0));
        let y = term - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        if degree.is_none() {
            if term.norm() <= f64::EPSILON * sum.norm().max(1e-300) {
                small_streak += 1;
                if small_streak >= 2 {
                    return Ok(sum);
                }
            } else {
                small_streak = 0;
            }
        }
    }
    if degree.is_some() {
        Ok(sum)
    } else {
        Err(Error::NonConvergence { terms: MAX_TERMS })
    }
}
