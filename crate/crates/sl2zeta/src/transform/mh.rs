//! Strip norms for spectral multipliers: the supremum of
//! (1 + |s|)^j |d^j/ds^j m_n(s)| for j = 0, 1, 2 over the closed strip
//! |Re s - 1/2| <= delta(p), sampled on the two boundary lines and the real
//! segment across the strip.

use super::multiplier::Multiplier;
use crate::error::{Error, Result};
use crate::halfint::HalfInt;
use num_complex::Complex64;

/// Height up to which the boundary lines are sampled.
pub const MH_DEFAULT_CAP: f64 = 1e3;

/// delta(p) = |1/p - 1/2|, the strip halfwidth attached to an exponent.
pub fn strip_halfwidth(p: f64) -> Result<f64> {
    if !(p > 1.0 && p.is_finite()) {
        return Err(Error::Domain(format!("exponent p must lie in (1, inf), got {p}")));
    }
    Ok((1.0 / p - 0.5).abs())
}

/// Sampled sup of (1+|s|)^j |m_n^(j)(s)|, j <= 2, over the strip of
/// halfwidth delta(p); errs when the declared analyticity strip is narrower
/// or when derivatives cannot be produced on it.
pub fn mh_norm(m: &Multiplier, n: HalfInt, p: f64, im_cap: f64) -> Result<f64> {
    let delta = strip_halfwidth(p)?;
    if !(im_cap > 0.0) {
        return Err(Error::Domain(format!("imaginary cap must be positive, got {im_cap}")));
    }
    let halfwidth = m.analyticity_halfwidth(n);
    if halfwidth < delta {
        return Err(Error::StripTooNarrow {
            halfwidth,
            required: delta,
        });
    }
    // Cauchy radius for tabulated data: half the gap between the sampling
    // lines and the holomorphy boundary (built-in kinds ignore it).
    let radius = if halfwidth.is_finite() {
        (0.5 * (halfwidth - delta)).min(1e-2)
    } else {
        1e-2
    };

    let mut samples: Vec<Complex64> = Vec::new();
    let lines: &[f64] = if delta == 0.0 { &[0.5] } else { &[0.5 - delta, 0.5 + delta] };
    // log-spaced heights resolve both the unit scale and the far tail
    let heights = 120;
    for &re in lines {
        samples.push(Complex64::new(re, 0.0));
        for k in 0..=heights {
            let y = 1e-3 * (im_cap / 1e-3).powf(k as f64 / heights as f64);
            samples.push(Complex64::new(re, y));
            samples.push(Complex64::new(re, -y));
        }
    }
    // the real segment crossing the strip
    for k in 0..=40 {
        let re = 0.5 - delta + 2.0 * delta * k as f64 / 40.0;
        samples.push(Complex64::new(re, 0.0));
    }

    let mut sup: f64 = 0.0;
    for s in samples {
        let d = m.weight_derivatives(n, s, radius)?;
        let base = 1.0 + s.norm();
        for (j, dj) in d.iter().enumerate() {
            sup = sup.max(base.powi(j as i32) * dj.norm());
        }
    }
    Ok(sup)
}
