//! Spectral regions attached to an exponent p: the parabolic neighborhood of
//! the positive ray that the continuous spectrum sweeps out on L^p, shifted
//! by n^2, together with the finitely many discrete spectral points.

use crate::error::Result;
use crate::halfint::HalfInt;
use crate::spherical::discrete_set;
use num_complex::Complex64;

/// Region of the complex plane swept by the weight-n spectrum on L^p:
/// n^2 + Par(delta) union the discrete points n^2 + s(1-s), s in D_n, where
/// Par(delta) = { x + iy : x >= y^2/(4 delta^2) + 1/4 - delta^2 } and
/// Par(0) is the ray [1/4, inf).
#[derive(Debug, Clone)]
pub struct SpectrumRegion {
    pub n: HalfInt,
    pub p: f64,
    /// Strip halfwidth delta(p) = |1/p - 1/2| controlling the parabola.
    pub delta: f64,
    /// Discrete spectral points n^2 + s(1-s) (always real).
    pub discrete_points: Vec<f64>,
}

/// Builds the L^p spectral region at weight n.
pub fn spectrum_region(n: HalfInt, p: f64) -> Result<SpectrumRegion> {
    let delta = super::mh::strip_halfwidth(p)?;
    let nf = n.as_f64();
    let discrete_points = discrete_set(n)
        .members
        .iter()
        .map(|s| {
            let sf = s.as_f64();
            nf * nf + sf * (1.0 - sf)
        })
        .collect();
    Ok(SpectrumRegion {
        n,
        p,
        delta,
        discrete_points,
    })
}

impl SpectrumRegion {
    /// Height of the parabola boundary over the imaginary offset y,
    /// relative to the n^2 shift; infinite off the ray when delta = 0.
    fn parabola_floor(&self, y: f64) -> f64 {
        if self.delta == 0.0 {
            if y == 0.0 {
                0.25
            } else {
                f64::INFINITY
            }
        } else {
            y * y / (4.0 * self.delta * self.delta) + 0.25 - self.delta * self.delta
        }
    }

    /// Membership test with a relative slack of 1e-12 (1 + |z|).
    pub fn contains(&self, z: Complex64) -> bool {
        let slack = 1e-12 * (1.0 + z.norm());
        for &d in &self.discrete_points {
            if (z - d).norm() <= slack {
                return true;
            }
        }
        let w = z - self.n.as_f64() * self.n.as_f64();
        if self.delta == 0.0 {
            return w.im.abs() <= slack && w.re >= 0.25 - slack;
        }
        w.re >= self.parabola_floor(w.im) - slack
    }

    /// Deterministic boundary samples: points on the parabola (or the ray
    /// endpoint segment when delta = 0) followed by the discrete points.
    pub fn boundary_points(&self, count: usize) -> Vec<Complex64> {
        let n2 = self.n.as_f64() * self.n.as_f64();
        let mut pts = Vec::with_capacity(count + self.discrete_points.len());
        if count > 0 {
            if self.delta == 0.0 {
                // the boundary of the ray is the ray itself: sample a stretch
                for k in 0..count {
                    let x = 0.25 + 4.0 * k as f64 / count.max(2).saturating_sub(1) as f64;
                    pts.push(Complex64::new(n2 + x, 0.0));
                }
            } else {
                for k in 0..count {
                    let u = -1.0 + 2.0 * k as f64 / count.max(2).saturating_sub(1) as f64;
                    let y = 4.0 * self.delta * u;
                    pts.push(Complex64::new(n2 + self.parabola_floor(y), y));
                }
            }
        }
        for &d in &self.discrete_points {
            pts.push(Complex64::new(d, 0.0));
        }
        pts
    }
}
