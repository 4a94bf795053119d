//! Small-time behaviour and discrete-parameter bounds: the Bessel-type
//! leading term of zeta on the critical line, calibration of its universal
//! constant, the second-order ODE residual check, and the sharp decay bound
//! with its L^q norms at discrete parameters.

use crate::error::{Error, Result};
use crate::halfint::HalfInt;
use crate::special::bessel::bessel_script_j;
use crate::special::quad::{self, QuadKind, QuadratureSpec};
use crate::spherical::{c_constant, zeta_axis, zeta_cosine_with_nodes, Route};
use num_complex::Complex64;
use std::f64::consts::PI;

/// Universal leading constant of the small-time expansion: 2/sqrt(pi),
/// fixed by the normalization zeta(e) = 1 and script-J_0(0) = sqrt(pi)/2.
pub const B0: f64 = 1.128_379_167_095_512_6;

/// Leading small-time approximation (t / sinh t)^{1/2} b_0 J_0(lambda t)
/// of zeta_{n, 1/2 + i lambda}(a_t); independent of the weight n.
pub fn local_leading(lambda: f64, t: f64) -> Result<f64> {
    if t <= 0.0 || t > 1.0 {
        return Err(Error::Domain(format!(
            "leading term is stated for 0 < t <= 1, got {t}"
        )));
    }
    let envelope = (t / t.sinh()).sqrt();
    Ok(envelope * B0 * bessel_script_j(0, lambda * t))
}

/// Extract the leading constant numerically for a given weight by Richardson
/// extrapolation of zeta_{n,1/2}(a_t) / ((t/sinh t)^{1/2} J_0(0)) at t -> 0.
pub fn calibrate_b0(n: HalfInt) -> Result<f64> {
    let j0_at_zero = 0.5 * PI.sqrt();
    let sample = |t: f64| -> Result<f64> {
        let z = zeta_axis(n, Complex64::new(0.5, 0.0), t, Route::Auto)?;
        Ok(z.re / ((t / t.sinh()).sqrt() * j0_at_zero))
    };
    let coarse = sample(0.02)?;
    let fine = sample(0.01)?;
    Ok((4.0 * fine - coarse) / 3.0)
}

/// |zeta_{n,1/2+i lambda}(a_t) - leading term|: the size of everything the
/// leading approximation leaves out.
pub fn local_remainder(n: HalfInt, lambda: f64, t: f64) -> Result<f64> {
    let z = zeta_axis(n, Complex64::new(0.5, lambda), t, Route::Auto)?;
    let lead = local_leading(lambda, t)?;
    Ok((z - lead).norm())
}

/// Residual of the hypergeometric-type equation
/// f'' + (coth t + (1-4n) tanh t) f' + (lambda^2 + (1-2n)^2) f = 0
/// satisfied by f(t) = (cosh t)^{2n} zeta_{n, 1/2 + i lambda/2}(a_{2t}),
/// measured with central differences of step h. All three stencil points
/// share one fixed-node quadrature so the discretization error stays O(h^2).
pub fn jacobi_ode_residual(n: HalfInt, lambda: Complex64, t: f64, h: f64) -> Result<f64> {
    if t < 0.05 || t < 10.0 * h {
        return Err(Error::Domain(format!(
            "residual stencil needs t >= max(0.05, 10h), got t={t}, h={h}"
        )));
    }
    let nf = n.abs().as_f64();
    let s = Complex64::new(0.5, 0.0) + Complex64::new(0.0, 0.5) * lambda;
    let nodes = {
        let scale = 8.0 * ((1.0 + lambda.norm()) * (1.0 + 2.0 * (t + h))).ceil();
        super::even_at_least(scale, 128)
    };
    let phi = |tau: f64| -> Complex64 {
        tau.cosh().powf(2.0 * nf) * zeta_cosine_with_nodes(n, s, 2.0 * tau, nodes)
    };
    let f_minus = phi(t - h);
    let f_zero = phi(t);
    let f_plus = phi(t + h);
    let d1 = (f_plus - f_minus) / (2.0 * h);
    let d2 = (f_plus - 2.0 * f_zero + f_minus) / (h * h);
    let coeff1 = 1.0 / t.tanh() + (1.0 - 4.0 * nf) * t.tanh();
    let eig = lambda * lambda + (1.0 - 2.0 * nf) * (1.0 - 2.0 * nf);
    Ok((d2 + coeff1 * d1 + eig * f_zero).norm())
}

/// Check |zeta_{n,s}(a_t)| <= min(C_{n,s} e^{-s|t|}, 1) at a discrete
/// parameter s; returns the verdict (with 1e-12 slack) and the observed
/// ratio of value to bound for empirical-constant reporting.
pub fn bound_check_discrete(n: HalfInt, s: HalfInt, t: f64) -> Result<(bool, f64)> {
    let c = c_constant(n, s)?;
    let sf = s.as_f64();
    let z = zeta_axis(n, Complex64::new(sf, 0.0), t, Route::Hyper)?;
    let bound = (c * (-sf * t.abs()).exp()).min(1.0);
    let ratio = z.norm() / bound;
    Ok((z.norm() <= bound + 1e-12, ratio))
}

/// L^q norm (integral over the group of |zeta_{n,s}|^q against sinh t)
/// truncated at t_max, to the 1/q power.
pub fn zeta_lq_norm(n: HalfInt, s: HalfInt, q: f64, t_max: f64) -> Result<f64> {
    if q < 1.0 {
        return Err(Error::Domain(format!("norm exponent must be >= 1, got {q}")));
    }
    if q * s.as_f64() <= 1.0 {
        return Err(Error::Domain(format!(
            "integral diverges unless q s > 1 (q = {q}, s = {s})"
        )));
    }
    let sc = Complex64::new(s.as_f64(), 0.0);
    // 1e-9 keeps the rule from chasing the cancellation noise of the
    // high-degree terminating series at large weights
    let spec = QuadratureSpec {
        kind: QuadKind::AdaptiveSubdivision,
        abs_tol: 1e-9,
        rel_tol: 1e-9,
        max_nodes: 400_000,
    };
    let val = quad::integrate_real(
        |t| {
            let z = zeta_axis(n, sc, t, Route::Hyper).expect("polynomial route on D_n");
            z.norm().powf(q) * t.sinh()
        },
        0.0,
        t_max,
        &spec,
    )?;
    Ok(val.powf(1.0 / q))
}
