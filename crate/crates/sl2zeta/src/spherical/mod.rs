//! The two-parameter family of spherical functions zeta_{n,s} attached to
//! rotation weight n (half-integer) and spectral parameter s (complex), with
//! several independent evaluation routes:
//!
//! - `Hyper`: hypergeometric series in tanh^2(t/2) — terminating (exact
//!   polynomial) whenever s -+ n is a nonpositive integer, otherwise accurate
//!   for moderate t and |Im s|;
//! - `ThetaIntegral`: angular integral with positive base, spectrally exact
//!   but with node count growing like e^t;
//! - `CosineIntegral`: oscillatory cosine form after a sine substitution that
//!   removes the endpoint singularity; the workhorse for large t;
//! - `Definition`: the matrix-coefficient average over the rotation subgroup
//!   through the horocyclic decomposition; used as an independent oracle.
//!
//! Indexing symmetries (checked in tests): s and 1-s give the same function,
//! so do n and -n, and the axis value is even in t.

pub mod cfun;
pub mod local;

pub use cfun::{c_fn, c_limit_residual, gamma_coeffs, global_expansion, q_fn, GammaCoeffs};
pub use local::{
    bound_check_discrete, calibrate_b0, jacobi_ode_residual, local_leading, local_remainder,
    zeta_lq_norm, B0,
};

use crate::error::{Error, Result};
use crate::group::{GroupElement, IwasawaVariant};
use crate::halfint::HalfInt;
use crate::special::gamma::gamma_real;
use crate::special::hyp2f1::hyp2f1_c1;
use crate::special::orthopoly::chebyshev_t;
use crate::special::quad::periodic_trapezoid;
use num_complex::Complex64;
use std::f64::consts::PI;

/// Hard ceiling on quadrature nodes for a single axis evaluation.
const MAX_EVAL_NODES: usize = 4_000_000;

/// Rotation weight and spectral parameter of one spherical function.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralParam {
    pub n: HalfInt,
    pub s: Complex64,
}

impl SpectralParam {
    pub fn new(n: HalfInt, s: Complex64) -> Self {
        SpectralParam { n, s }
    }

    /// gamma(s) = s(1-s), invariant under s -> 1-s.
    pub fn gamma_value(&self) -> Complex64 {
        self.s * (Complex64::new(1.0, 0.0) - self.s)
    }

    /// Canonical representative of {s, 1-s}: Re s >= 1/2, and Im s >= 0 on
    /// the symmetry line Re s = 1/2.
    pub fn normalized(&self) -> Self {
        let s = self.s;
        let flip = s.re < 0.5 || (s.re == 0.5 && s.im < 0.0);
        SpectralParam {
            n: self.n,
            s: if flip { Complex64::new(1.0, 0.0) - s } else { s },
        }
    }

    /// True when s lies on the integer-spaced segment {-|n|+1, ..., |n|}.
    fn on_discrete_segment(&self) -> bool {
        let an = self.n.abs().as_f64();
        if self.s.im.abs() > 1e-12 {
            return false;
        }
        let x = self.s.re;
        let k = (x - an).round();
        (x - an - k).abs() < 1e-12 && x >= 1.0 - an - 1e-12 && x <= an + 1e-12
    }

    /// Boundedness of the spherical function: Re s in [0,1], or s on the
    /// integer-spaced segment {-|n|+1, ..., |n|}.
    pub fn is_bounded(&self) -> bool {
        (0.0..=1.0).contains(&self.s.re) || self.on_discrete_segment()
    }

    /// Positive type: Re s = 1/2, or s real in [0,1], or s on the
    /// integer-spaced segment {-|n|+1, ..., |n|}.
    pub fn is_positive_type(&self) -> bool {
        if (self.s.re - 0.5).abs() < 1e-12 {
            return true;
        }
        let real = self.s.im.abs() < 1e-12;
        (real && (0.0..=1.0).contains(&self.s.re)) || self.on_discrete_segment()
    }
}

/// The finite set D_n = { s in (1/2)Z : s - |n| integer, 1 <= s <= |n| }.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscreteSet {
    pub n: HalfInt,
    pub members: Vec<HalfInt>,
}

/// Enumerates D_n in increasing order.
pub fn discrete_set(n: HalfInt) -> DiscreteSet {
    let an = n.abs();
    let mut members = Vec::new();
    // walk s = |n|, |n|-1, ... while s >= 1
    let mut tw = an.twice();
    while tw >= 2 {
        members.push(HalfInt::from_twice(tw));
        tw -= 2;
    }
    members.reverse();
    DiscreteSet { n, members }
}

/// C_{n,s} = 2^{2s} Gamma(|n|+s) / (Gamma(|n|-s+1) Gamma(2s)) for s in D_n.
pub fn c_constant(n: HalfInt, s: HalfInt) -> Result<f64> {
    let dn = discrete_set(n);
    if !dn.members.contains(&s) {
        return Err(Error::Domain(format!(
            "s = {s} is not in the discrete set of n = {n}"
        )));
    }
    let an = n.abs().as_f64();
    let sf = s.as_f64();
    let num = 4f64.powf(sf) * gamma_real(an + sf)?;
    Ok(num / (gamma_real(an - sf + 1.0)? * gamma_real(2.0 * sf)?))
}

/// Evaluation route for `zeta_axis`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    Auto,
    Hyper,
    ThetaIntegral,
    CosineIntegral,
    Definition,
}

impl Route {
    pub fn name(&self) -> &'static str {
        match self {
            Route::Auto => "auto",
            Route::Hyper => "hyper",
            Route::ThetaIntegral => "theta_integral",
            Route::CosineIntegral => "cosine_integral",
            Route::Definition => "definition",
        }
    }
}

impl std::str::FromStr for Route {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(Route::Auto),
            "hyper" => Ok(Route::Hyper),
            "theta_integral" | "theta" => Ok(Route::ThetaIntegral),
            "cosine_integral" | "cosine" => Ok(Route::CosineIntegral),
            "definition" => Ok(Route::Definition),
            other => Err(Error::Parse(format!("unknown route `{other}`"))),
        }
    }
}

/// True when the hypergeometric series terminates (exact Jacobi-polynomial
/// branch): s - n or s + n is a nonpositive integer.
pub fn is_polynomial_case(n: HalfInt, s: Complex64) -> bool {
    let nf = n.abs().as_f64();
    let is_nonpos_int = |z: Complex64| {
        z.im.abs() < 1e-13 && {
            let r = z.re.round();
            (z.re - r).abs() < 1e-12 && r <= 0.0
        }
    };
    is_nonpos_int(s - nf) || is_nonpos_int(s + nf)
}

fn even_at_least(x: f64, floor: usize) -> usize {
    let n = (x.ceil() as usize).max(floor);
    n + (n % 2)
}

/// Node count for the theta route: oscillation scaling plus the e^t factor
/// demanded by the integrand's shrinking analyticity strip. The strip has
/// half-width ~2e^{-t}, so N ~ 34 e^t/2 pushes the trapezoid error e^{-2Ne^-t}
/// below 1e-14 times the integrand scale.
fn theta_nodes(im_s: f64, t: f64) -> usize {
    let osc = 8.0 * ((1.0 + im_s) * (1.0 + t)).ceil();
    let strip = (34.0 + 2.0 * im_s) * (0.5 * t.exp());
    even_at_least(osc.max(strip), 64)
}

pub(crate) fn cosine_nodes(lam_abs: f64, t: f64) -> usize {
    even_at_least(8.0 * ((1.0 + lam_abs) * (1.0 + t)).ceil(), 64)
}

/// sinh(x)/x with the removable singularity filled.
fn sinhc(x: f64) -> f64 {
    if x.abs() < 1e-4 {
        let q = x * x;
        1.0 + q / 6.0 + q * q / 120.0
    } else {
        x.sinh() / x
    }
}

fn zeta_hyper(n: HalfInt, s: Complex64, t: f64) -> Result<Complex64> {
    let nf = n.as_f64();
    let x = (0.5 * t).tanh().powi(2);
    let f = hyp2f1_c1(s - nf, s + nf, x)?;
    // (cosh t/2)^{-2s} on the positive real base
    let pre = (-2.0 * s * (0.5 * t).cosh().ln()).exp();
    Ok(pre * f)
}

fn zeta_theta(n: HalfInt, s: Complex64, t: f64) -> Result<Complex64> {
    let nodes = theta_nodes(s.im.abs(), t);
    if nodes > MAX_EVAL_NODES {
        return Err(Error::NodeBudget {
            budget: MAX_EVAL_NODES,
        });
    }
    let two_n = n.twice();
    let (ch, sh) = (t.cosh(), t.sinh());
    let (c2, s2) = ((0.5 * t).cosh(), (0.5 * t).sinh());
    let mut f = |theta: f64| {
        let base = ch + sh * theta.cos(); // strictly positive
        let w = Complex64::new(c2 + s2 * theta.cos(), -s2 * theta.sin());
        let phase = w.powi(two_n);
        let decay = (-(s + n.as_f64()) * base.ln()).exp();
        phase * decay
    };
    Ok(periodic_trapezoid(&mut f, 0.0, 2.0 * PI, nodes) / (2.0 * PI))
}

fn zeta_cosine(n: HalfInt, s: Complex64, t: f64) -> Complex64 {
    // lambda = -i(s - 1/2); real on the symmetry line Re s = 1/2
    let lam = Complex64::new(s.im, 0.5 - s.re);
    zeta_cosine_with_nodes(n, s, t, cosine_nodes(lam.norm(), t))
}

/// Cosine-substitution route with a caller-fixed node count, so that nearby
/// evaluations (finite-difference stencils) share identical quadrature error.
pub(crate) fn zeta_cosine_with_nodes(
    n: HalfInt,
    s: Complex64,
    t: f64,
    nodes: usize,
) -> Complex64 {
    let lam = Complex64::new(s.im, 0.5 - s.re);
    let half = 0.5 * t;
    let c2 = half.cosh();
    let cheb = n.abs().twice() as u32; // index 2|n|
    let mut f = |u: f64| {
        let sigma = half * u.sin();
        let osc = (2.0 * lam * sigma).cos();
        let poly = chebyshev_t(cheb, sigma.cosh() / c2);
        let p_plus = sinhc(half * (1.0 + u.sin()));
        let p_minus = sinhc(half * (1.0 - u.sin()));
        osc * poly / (p_plus * p_minus).sqrt()
    };
    periodic_trapezoid(&mut f, 0.0, 2.0 * PI, nodes) / (2.0 * PI)
}

/// zeta_{n, 1/2 + i lambda}(a_t) for real lambda, where the function is
/// real-valued: the all-real cosine route, used by the transform layer in
/// per-(lambda, t) hot loops. Matches `zeta_axis` to machine precision.
pub fn zeta_critical_line(n: HalfInt, lambda: f64, t: f64) -> f64 {
    let t = t.abs();
    let lam = lambda.abs();
    let nodes = cosine_nodes(lam, t);
    let half = 0.5 * t;
    let c2 = half.cosh();
    let cheb = n.abs().twice() as u32;
    let step = 2.0 * PI / nodes as f64;
    let mut acc = 0.0;
    for k in 0..nodes {
        let sin_u = (step * k as f64).sin();
        let sigma = half * sin_u;
        let weight = (sinhc(half * (1.0 + sin_u)) * sinhc(half * (1.0 - sin_u))).sqrt();
        acc += (2.0 * lam * sigma).cos() * chebyshev_t(cheb, sigma.cosh() / c2) / weight;
    }
    acc / nodes as f64
}

/// zeta_{n, 1/2 + i lambda}(a_t) for every lambda of an ascending grid at
/// once. On a uniform grid the quadrature nodes are shared across the sweep
/// and the oscillatory factors advance by a three-term cosine recurrence, so
/// the whole sweep costs barely more than the single hardest evaluation.
pub fn zeta_critical_line_sweep(n: HalfInt, lambdas: &[f64], t: f64) -> Vec<f64> {
    let mut out = vec![0.0; lambdas.len()];
    if lambdas.is_empty() {
        return out;
    }
    let t = t.abs();
    let dl = if lambdas.len() >= 2 {
        lambdas[1] - lambdas[0]
    } else {
        0.0
    };
    let uniform = lambdas
        .windows(2)
        .all(|w| ((w[1] - w[0]) - dl).abs() <= 1e-9 * dl.abs().max(1e-300));
    if !uniform {
        for (o, &lam) in out.iter_mut().zip(lambdas) {
            *o = zeta_critical_line(n, lam, t);
        }
        return out;
    }
    let lam_top = lambdas.iter().fold(0.0f64, |a, &l| a.max(l.abs()));
    let nodes = cosine_nodes(lam_top, t);
    let half = 0.5 * t;
    let c2 = half.cosh();
    let cheb = n.abs().twice() as u32;
    let step = 2.0 * PI / nodes as f64;
    for k in 0..nodes {
        let sin_u = (step * k as f64).sin();
        let sigma = half * sin_u;
        let weight = (sinhc(half * (1.0 + sin_u)) * sinhc(half * (1.0 - sin_u))).sqrt();
        let base = chebyshev_t(cheb, sigma.cosh() / c2) / weight;
        // cos(2 lambda_j sigma) along the arithmetic grid of lambda
        let b = 2.0 * dl * sigma;
        let two_cos_b = 2.0 * b.cos();
        let a = 2.0 * lambdas[0] * sigma;
        let mut curr = a.cos();
        let mut prev = (a - b).cos();
        for o in out.iter_mut() {
            *o += base * curr;
            let next = two_cos_b * curr - prev;
            prev = curr;
            curr = next;
        }
    }
    let inv = 1.0 / nodes as f64;
    for o in out.iter_mut() {
        *o *= inv;
    }
    out
}

/// Matrix-coefficient definition of zeta_{n,s}(g): average over the rotation
/// subgroup of e^{s tau} e^{i n (phi - theta)} where (tau, phi) are the
/// horocyclic coordinates of u_theta g. Independent of every other route.
pub fn zeta_group_definition(n: HalfInt, s: Complex64, g: &GroupElement) -> Result<Complex64> {
    let t_size = g.cartan_decompose().t;
    // the averaging interval is twice the theta-route period, so double the
    // nodes; off the symmetry line the integrand additionally swings over
    // e^{|Re s| t} instead of e^{t/2}, which costs a proportional boost
    let boost = (1.0 + (s.re.abs() - 0.5).max(0.0)).ceil() as usize;
    let nodes = 2 * boost * theta_nodes(s.im.abs(), t_size);
    if nodes > MAX_EVAL_NODES {
        return Err(Error::NodeBudget {
            budget: MAX_EVAL_NODES,
        });
    }
    let nf = n.as_f64();
    let mut acc = Complex64::new(0.0, 0.0);
    let step = 4.0 * PI / nodes as f64;
    for k in 0..nodes {
        let theta = step * k as f64;
        let m = GroupElement::rotation(theta).compose(g);
        let ic = m.iwasawa_decompose(IwasawaVariant::N);
        let val = (s * ic.t).exp() * Complex64::from_polar(1.0, nf * (ic.theta - theta));
        acc += val;
    }
    Ok(acc / nodes as f64)
}

/// The route `Auto` resolves to at (n, s, t): the cheapest route whose
/// accuracy contract covers the point. The series route is gated at
/// |Im s| <= 8 because its cancellation roundoff crosses 1e-10 near
/// |Im s| = 10, which the symmetry contract must stay below.
pub fn resolve_route(n: HalfInt, s: Complex64, t: f64) -> Route {
    if is_polynomial_case(n.abs(), s) {
        return Route::Hyper;
    }
    let x = (0.5 * t.abs()).tanh().powi(2);
    if x <= 0.75 && s.im.abs() <= 8.0 {
        Route::Hyper
    } else if t.abs() <= 4.0 {
        Route::ThetaIntegral
    } else {
        Route::CosineIntegral
    }
}

/// zeta_{n,s}(a_t) by the requested route; `Auto` picks the cheapest route
/// whose accuracy contract covers (s, t). Even in t and n; t = 0 gives 1.
pub fn zeta_axis(n: HalfInt, s: Complex64, t: f64, route: Route) -> Result<Complex64> {
    let n = n.abs();
    let t = t.abs();
    let route = match route {
        Route::Auto => resolve_route(n, s, t),
        other => other,
    };
    match route {
        Route::Hyper => zeta_hyper(n, s, t),
        Route::ThetaIntegral => zeta_theta(n, s, t),
        Route::CosineIntegral => Ok(zeta_cosine(n, s, t)),
        Route::Definition => zeta_group_definition(n, s, &GroupElement::diagonal(t)),
        Route::Auto => unreachable!("Auto resolved above"),
    }
}

/// zeta_{n,s}(g) through the polar decomposition: e^{i n (psi+theta)} times
/// the axis value. `zeta_group_definition` is the independent check path.
pub fn zeta_group(n: HalfInt, s: Complex64, g: &GroupElement) -> Result<Complex64> {
    let cc = g.cartan_decompose();
    let phase = Complex64::from_polar(1.0, n.as_f64() * (cc.psi + cc.theta));
    Ok(phase * zeta_axis(n, s, cc.t, Route::Auto)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::random_elements;

    fn hi(tw: i32) -> HalfInt {
        HalfInt::from_twice(tw)
    }

    fn s_c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn discrete_set_examples() {
        assert!(discrete_set(hi(0)).members.is_empty());
        assert!(discrete_set(hi(1)).members.is_empty()); // n = 1/2
        assert_eq!(discrete_set(hi(4)).members, vec![hi(2), hi(4)]); // n = 2
        assert_eq!(discrete_set(hi(5)).members, vec![hi(3), hi(5)]); // n = 5/2
        assert_eq!(discrete_set(hi(-4)).members, vec![hi(2), hi(4)]);
    }

    #[test]
    fn c_constant_examples() {
        assert!((c_constant(hi(2), hi(2)).unwrap() - 4.0).abs() < 1e-12);
        assert!((c_constant(hi(4), hi(2)).unwrap() - 8.0).abs() < 1e-12);
        assert!(c_constant(hi(0), hi(2)).is_err());
        assert!(c_constant(hi(4), hi(6)).is_err());
    }

    #[test]
    fn normalization_at_identity_is_exact() {
        for route in [
            Route::Hyper,
            Route::ThetaIntegral,
            Route::CosineIntegral,
            Route::Definition,
        ] {
            let v = zeta_axis(hi(3), s_c(0.5, 2.0), 0.0, route).unwrap();
            assert!((v - Complex64::new(1.0, 0.0)).norm() < 1e-14, "{route:?}");
        }
    }

    #[test]
    fn weight_one_discrete_value_is_sech_squared() {
        // zeta_{1,1}(a_t) = (cosh t/2)^{-2}: the series terminates at once
        for &t in &[0.3, 1.0, 2.5, 6.0] {
            let v = zeta_axis(hi(2), s_c(1.0, 0.0), t, Route::Auto).unwrap();
            let want = (0.5 * t).cosh().powi(-2);
            assert!((v - Complex64::new(want, 0.0)).norm() < 1e-14, "t={t}");
        }
    }

    #[test]
    fn frozen_reference_values() {
        // zeta_{0, 1/2+i}(a_1) and zeta_{3/2, 1/2+2i}(a_2), 20-digit oracle
        let v1 = zeta_axis(hi(0), s_c(0.5, 1.0), 1.0, Route::Auto).unwrap();
        assert!((v1 - Complex64::new(0.72207522827937457342, 0.0)).norm() < 1e-13);
        let v2 = zeta_axis(hi(3), s_c(0.5, 2.0), 2.0, Route::Auto).unwrap();
        assert!((v2 - Complex64::new(-0.19371591131638161976, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn routes_agree_pairwise() {
        let cases = [
            (hi(3), s_c(0.5, 2.0), 1.0),
            (hi(0), s_c(0.5, 1.0), 2.0),
            (hi(2), s_c(0.5, 5.0), 0.5),
            (hi(1), s_c(0.7, 0.3), 1.5),
        ];
        for (n, s, t) in cases {
            let h = zeta_axis(n, s, t, Route::Hyper).unwrap();
            let th = zeta_axis(n, s, t, Route::ThetaIntegral).unwrap();
            let co = zeta_axis(n, s, t, Route::CosineIntegral).unwrap();
            let de = zeta_axis(n, s, t, Route::Definition).unwrap();
            assert!((h - th).norm() < 1e-9, "hyper/theta {n} {s} {t}: {h} {th}");
            assert!((h - co).norm() < 1e-9, "hyper/cosine {n} {s} {t}: {h} {co}");
            assert!((h - de).norm() < 1e-8, "hyper/defn {n} {s} {t}: {h} {de}");
        }
    }

    #[test]
    fn large_time_uses_cosine_route() {
        // t = 6 forces the cosine route in Auto; check against the
        // polynomial (exact) branch at a discrete parameter
        let exact = zeta_axis(hi(4), s_c(1.0, 0.0), 6.0, Route::Hyper).unwrap();
        let auto = zeta_axis(hi(4), s_c(0.5, 3.0), 6.0, Route::Auto).unwrap();
        assert!(auto.im.abs() < 1e-10);
        let cos_route = zeta_axis(hi(4), s_c(1.0, 0.0), 6.0, Route::CosineIntegral).unwrap();
        assert!((exact - cos_route).norm() < 1e-12);
    }

    #[test]
    fn indexing_symmetries() {
        let pts = [
            (hi(2), s_c(0.5, 1.5), 1.2),
            (hi(3), s_c(0.3, 0.0), 0.7),
            (hi(0), s_c(0.5, 4.0), 2.0),
        ];
        for (n, s, t) in pts {
            let base = zeta_axis(n, s, t, Route::Auto).unwrap();
            let flip_s = zeta_axis(n, Complex64::new(1.0, 0.0) - s, t, Route::Auto).unwrap();
            let flip_n = zeta_axis(-n, s, t, Route::Auto).unwrap();
            let flip_t = zeta_axis(n, s, -t, Route::Auto).unwrap();
            assert!((base - flip_s).norm() < 1e-10);
            assert!((base - flip_n).norm() < 1e-10);
            assert!((base - flip_t).norm() < 1e-10);
        }
    }

    #[test]
    fn comparison_bound_spot_checks() {
        for (n, s, t) in [
            (hi(3), s_c(0.5, 2.0), 1.0),
            (hi(2), s_c(0.6, 3.0), 2.0),
            (hi(4), s_c(0.5, 0.0), 0.5),
        ] {
            let lhs = zeta_axis(n, s, t, Route::Auto).unwrap().norm();
            let rhs = zeta_axis(hi(0), s_c(s.re, 0.0), t, Route::Auto)
                .unwrap()
                .re;
            assert!(lhs <= rhs + 1e-12, "{n} {s} {t}: {lhs} vs {rhs}");
        }
    }

    #[test]
    fn group_evaluation_matches_definition_route() {
        let n = hi(3);
        let s = s_c(0.5, 1.0);
        assert!(
            (zeta_group(n, s, &GroupElement::identity()).unwrap() - Complex64::new(1.0, 0.0))
                .norm()
                < 1e-14
        );
        // pure rotation gives the character
        let phi = 2.3;
        let v = zeta_group(n, s, &GroupElement::rotation(phi)).unwrap();
        let want = Complex64::from_polar(1.0, 1.5 * phi);
        assert!((v - want).norm() < 1e-12);
        // random elements: polar path vs definition path
        for g in random_elements(3, 17) {
            let a = zeta_group(n, s, &g).unwrap();
            let b = zeta_group_definition(n, s, &g).unwrap();
            assert!((a - b).norm() < 1e-8, "{a} vs {b}");
        }
    }

    #[test]
    fn boundedness_and_positivity_predicates() {
        let p = |n: i32, re: f64, im: f64| SpectralParam::new(hi(n), s_c(re, im));
        assert!(p(0, 0.5, 3.0).is_bounded());
        assert!(p(0, 1.0, 0.0).is_bounded());
        assert!(!p(0, 1.2, 0.0).is_bounded());
        assert!(p(4, 2.0, 0.0).is_bounded()); // s = 2 = |n|
        assert!(p(4, -1.0, 0.0).is_bounded()); // s = -|n|+1
        assert!(!p(4, -2.0, 0.0).is_bounded());
        assert!(!p(4, 1.5, 0.0).is_bounded()); // off the integer lattice

        assert!(p(0, 0.5, 7.0).is_positive_type());
        assert!(p(0, 0.7, 0.0).is_positive_type());
        assert!(!p(0, 0.7, 0.1).is_positive_type());
        assert!(p(4, 2.0, 0.0).is_positive_type());
        assert!(!p(4, 1.7, 0.0).is_positive_type());
    }

    #[test]
    fn normalized_form_and_gamma_invariance() {
        let a = SpectralParam::new(hi(2), s_c(0.2, -0.7));
        let b = SpectralParam::new(hi(2), s_c(0.8, 0.7));
        assert_eq!(a.normalized().s, b.normalized().s);
        assert!((a.gamma_value() - b.gamma_value()).norm() < 1e-15);
        let line = SpectralParam::new(hi(0), s_c(0.5, -2.0));
        assert_eq!(line.normalized().s, s_c(0.5, 2.0));
    }

    #[test]
    fn hyper_route_rejects_nonterminating_large_t() {
        let err = zeta_axis(hi(0), s_c(0.5, 1.0), 4.0, Route::Hyper).unwrap_err();
        assert!(matches!(err, Error::NonConvergence { .. }));
    }

    #[test]
    fn critical_line_fast_path_matches_routes() {
        for &(ntw, lam, t) in &[(0, 0.5, 0.3), (1, 2.0, 1.7), (4, 7.0, 5.0), (3, 0.0, 0.0)] {
            let fast = zeta_critical_line(hi(ntw), lam, t);
            let slow = zeta_axis(hi(ntw), s_c(0.5, lam), t, Route::CosineIntegral).unwrap();
            assert!(
                (fast - slow.re).abs() < 1e-14 && slow.im.abs() < 1e-14,
                "n = {ntw}/2, lambda = {lam}, t = {t}"
            );
        }
    }

    #[test]
    fn critical_line_sweep_matches_pointwise() {
        // uniform grid: shared-node recurrence path
        let lambdas: Vec<f64> = (0..=300).map(|k| k as f64 * 0.2).collect();
        for &(ntw, t) in &[(0, 0.4), (1, 2.0), (4, 6.0)] {
            let sweep = zeta_critical_line_sweep(hi(ntw), &lambdas, t);
            for (&lam, &v) in lambdas.iter().zip(&sweep).step_by(37) {
                let direct = zeta_critical_line(hi(ntw), lam, t);
                assert!(
                    (v - direct).abs() < 1e-11,
                    "n = {ntw}/2, t = {t}, lambda = {lam}: {v} vs {direct}"
                );
            }
        }
        // non-uniform grids fall back to pointwise evaluation
        let ragged = [0.0, 0.3, 1.0, 2.5];
        let sweep = zeta_critical_line_sweep(hi(2), &ragged, 1.5);
        for (&lam, &v) in ragged.iter().zip(&sweep) {
            assert_eq!(v, zeta_critical_line(hi(2), lam, 1.5));
        }
    }
}
