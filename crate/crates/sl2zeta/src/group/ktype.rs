//! Functions of a fixed rotation type, sampled on the radial axis.
//!
//! A function of rotation weight n transforms as
//! f(u_alpha x u_beta) = e^{i n (alpha+beta)} f(x), so it is determined by its
//! restriction F(t) = f(a_t), which extends evenly to t < 0. `KTypeSample`
//! stores F on a finite grid; evaluation anywhere on the group goes through
//! the polar decomposition and the phase factor.

use super::{CartanCoords, GroupElement};
use crate::error::{Error, Result};
use crate::halfint::HalfInt;
use crate::special::quad::{self, QuadratureSpec};
use num_complex::Complex64;
use std::f64::consts::PI;

/// Radially sampled function of fixed rotation weight.
#[derive(Debug, Clone)]
pub struct KTypeSample {
    pub n: HalfInt,
    t_grid: Vec<f64>,
    values: Vec<Complex64>,
}

impl KTypeSample {
    /// Validates that the grid is strictly increasing, nonnegative, and has
    /// at least four points (cubic interpolation needs a full stencil).
    pub fn new(n: HalfInt, t_grid: Vec<f64>, values: Vec<Complex64>) -> Result<Self> {
        if t_grid.len() != values.len() {
            return Err(Error::GridMismatch(format!(
                "{} grid points vs {} values",
                t_grid.len(),
                values.len()
            )));
        }
        if t_grid.len() < 4 {
            return Err(Error::GridMismatch("need at least 4 grid points".into()));
        }
        if t_grid[0] < 0.0 {
            return Err(Error::GridMismatch("grid must start at t >= 0".into()));
        }
        if t_grid.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::GridMismatch("grid must be strictly increasing".into()));
        }
        Ok(KTypeSample { n, t_grid, values })
    }

    /// Samples a radial profile F(t) on the given grid.
    pub fn from_profile<F>(n: HalfInt, t_grid: Vec<f64>, f: F) -> Result<Self>
    where
        F: Fn(f64) -> Complex64,
    {
        let values = t_grid.iter().map(|&t| f(t)).collect();
        KTypeSample::new(n, t_grid, values)
    }

    pub fn n(&self) -> HalfInt {
        self.n
    }

    pub fn t_grid(&self) -> &[f64] {
        &self.t_grid
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    /// Largest grid point; the profile is treated as 0 beyond it.
    pub fn t_max(&self) -> f64 {
        *self.t_grid.last().unwrap()
    }

    /// Mirrored abscissa: index -k maps to -t_grid[k] by even reflection.
    fn knot(&self, i: isize) -> f64 {
        if i >= 0 {
            self.t_grid[i as usize]
        } else {
            -self.t_grid[(-i) as usize]
        }
    }

    fn knot_value(&self, i: isize) -> Complex64 {
        self.values[i.unsigned_abs()]
    }

    /// Evaluates F(t) by cubic interpolation on the evenly reflected grid;
    /// returns 0 beyond the last grid point.
    pub fn eval_axis(&self, t: f64) -> Complex64 {
        let q = t.abs();
        let last = self.t_grid.len() - 1;
        if q > self.t_grid[last] {
            return Complex64::new(0.0, 0.0);
        }
        // First grid index with t_grid[k] >= q; the query lives in
        // [knot(k-1), knot(k)] once mirrored indices are allowed.
        let k = self.t_grid.partition_point(|&g| g < q) as isize;
        let mut lo = k - 2;
        if lo + 3 > last as isize {
            lo = last as isize - 3;
        }
        if lo < -(last as isize) {
            lo = -(last as isize);
        }
        let xs = [
            self.knot(lo),
            self.knot(lo + 1),
            self.knot(lo + 2),
            self.knot(lo + 3),
        ];
        let ys = [
            self.knot_value(lo),
            self.knot_value(lo + 1),
            self.knot_value(lo + 2),
            self.knot_value(lo + 3),
        ];
        lagrange_cubic(&xs, &ys, q)
    }

    /// Evaluates the function anywhere on the group through the polar
    /// decomposition: e^{i n (psi+theta)} F(t).
    pub fn eval_group(&self, g: &GroupElement) -> Complex64 {
        let CartanCoords { psi, t, theta } = g.cartan_decompose();
        let nf = self.n.as_f64();
        Complex64::from_polar(1.0, nf * (psi + theta)) * self.eval_axis(t)
    }
}

/// Four-point Lagrange interpolation (exact on cubics).
fn lagrange_cubic(xs: &[f64; 4], ys: &[Complex64; 4], x: f64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for i in 0..4 {
        let mut w = 1.0;
        for j in 0..4 {
            if j != i {
                w *= (x - xs[j]) / (xs[i] - xs[j]);
            }
        }
        acc += ys[i] * w;
    }
    acc
}

/// Integrates f over the group in polar coordinates: the two angle averages
/// use `n_angle`-point periodic rules over [0, 4pi), the radial part is an
/// adaptive integral of sinh(t) times the angular mean over [0, t_max].
pub fn haar_integrate<F>(
    f: F,
    t_max: f64,
    n_angle: usize,
    spec: &QuadratureSpec,
) -> Result<Complex64>
where
    F: Fn(&GroupElement) -> Complex64,
{
    let step = 4.0 * PI / n_angle as f64;
    let mean = |t: f64| -> Complex64 {
        let at = GroupElement::diagonal(t);
        let mut acc = Complex64::new(0.0, 0.0);
        for i in 0..n_angle {
            let upsi = GroupElement::rotation(step * i as f64);
            let left = upsi.compose(&at);
            for j in 0..n_angle {
                let g = left.compose(&GroupElement::rotation(step * j as f64));
                acc += f(&g);
            }
        }
        acc / (n_angle * n_angle) as f64
    };
    quad::integrate(|t| mean(t) * t.sinh(), 0.0, t_max, spec)
}

/// Projects an arbitrary function onto rotation weight n from the right:
/// averages f(x u_theta) e^{-i n theta} over the full angle.
pub fn project_ktype<F>(f: F, n: HalfInt, n_nodes: usize) -> impl Fn(&GroupElement) -> Complex64
where
    F: Fn(&GroupElement) -> Complex64,
{
    let nf = n.as_f64();
    move |x: &GroupElement| {
        let step = 4.0 * PI / n_nodes as f64;
        let mut acc = Complex64::new(0.0, 0.0);
        for k in 0..n_nodes {
            let th = step * k as f64;
            let g = x.compose(&GroupElement::rotation(th));
            acc += f(&g) * Complex64::from_polar(1.0, -nf * th);
        }
        acc / n_nodes as f64
    }
}

/// Group convolution (f * g)(a_T) = int f(y) g(y^{-1} a_T) dy by direct polar
/// quadrature with `nodes` = (psi, t, theta) counts; the t rule is Simpson on
/// [0, f.t_max()]. Intended as a test oracle, budget about 32^3 per point.
pub fn convolve_ktype(
    f: &KTypeSample,
    g: &KTypeSample,
    out_grid: Vec<f64>,
    nodes: (usize, usize, usize),
) -> Result<KTypeSample> {
    if f.n != g.n {
        return Err(Error::GridMismatch(format!(
            "rotation weights differ: {} vs {}",
            f.n, g.n
        )));
    }
    let (n_psi, n_t, n_theta) = nodes;
    if n_t % 2 != 0 {
        return Err(Error::GridMismatch("radial node count must be even".into()));
    }
    let nf = f.n.as_f64();
    let t_max = f.t_max();
    let ht = t_max / n_t as f64;
    let step = 4.0 * PI / n_psi as f64;
    let step_th = 4.0 * PI / n_theta as f64;

    let mut out_values = Vec::with_capacity(out_grid.len());
    for &bigt in &out_grid {
        let a_bigt = GroupElement::diagonal(bigt);
        let mut acc = Complex64::new(0.0, 0.0);
        for jt in 0..=n_t {
            let t = ht * jt as f64;
            // Simpson weights 1,4,2,...,4,1 scaled by h/3
            let wt = ht / 3.0
                * if jt == 0 || jt == n_t {
                    1.0
                } else if jt % 2 == 1 {
                    4.0
                } else {
                    2.0
                };
            let radial = f.eval_axis(t) * t.sinh() * wt;
            if radial.norm_sqr() == 0.0 {
                continue;
            }
            let a_neg_t = GroupElement::diagonal(-t);
            for jp in 0..n_psi {
                let psi = step * jp as f64;
                let phase_psi = Complex64::from_polar(1.0, nf * psi);
                // y^{-1} a_T = u_{-theta} a_{-t} u_{-psi} a_T
                let core = a_neg_t
                    .compose(&GroupElement::rotation(-psi))
                    .compose(&a_bigt);
                for jq in 0..n_theta {
                    let theta = step_th * jq as f64;
                    let y_inv_at = GroupElement::rotation(-theta).compose(&core);
                    let fval = phase_psi * Complex64::from_polar(1.0, nf * theta) * radial;
                    acc += fval * g.eval_group(&y_inv_at);
                }
            }
        }
        // polar Haar measure normalization (1/4pi)^2 with angle means
        out_values.push(acc / (n_psi as f64 * n_theta as f64));
    }
    KTypeSample::new(f.n, out_grid, out_values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::random_elements;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn cubic_interpolation_is_exact_on_cubics() {
        let grid: Vec<f64> = (0..40).map(|i| 0.1 * i as f64).collect();
        // Away from the reflection point the stencil sees a plain cubic.
        let poly = |t: f64| c(0.3 + 1.7 * t * t + 0.9 * t * t * t);
        let s = KTypeSample::from_profile(HalfInt::from_int(1), grid.clone(), poly).unwrap();
        for &q in &[0.25, 0.55, 1.234, 3.899, 3.9] {
            assert!((s.eval_axis(q) - poly(q)).norm() < 1e-12, "q={q}");
        }
        // Near t = 0 the mirrored stencil reproduces even polynomials.
        let even = |t: f64| c(0.3 + 1.7 * t * t);
        let se = KTypeSample::from_profile(HalfInt::from_int(1), grid, even).unwrap();
        for &q in &[0.0, 0.03, 0.09, 0.15] {
            assert!((se.eval_axis(q) - even(q)).norm() < 1e-12, "q={q}");
        }
        // even reflection and compact support
        assert!((s.eval_axis(-1.0) - poly(1.0)).norm() < 1e-12);
        assert_eq!(s.eval_axis(4.5), c(0.0));
    }

    #[test]
    fn radial_haar_weight_matches_closed_form() {
        // int_0^inf e^{-2t} sinh t dt = 1/3 for a weight-0 radial function;
        // grid step 0.02 keeps the cubic-interpolation bias near 1e-7.
        let grid: Vec<f64> = (0..=1000).map(|i| 0.02 * i as f64).collect();
        let s = KTypeSample::from_profile(HalfInt::from_int(0), grid, |t| c((-2.0 * t).exp()))
            .unwrap();
        let spec = QuadratureSpec::default();
        let total = haar_integrate(|g| s.eval_group(g), 20.0, 16, &spec).unwrap();
        assert!((total - c(1.0 / 3.0)).norm() < 1e-6, "{total}");
    }

    #[test]
    fn distinct_weights_integrate_to_zero() {
        // weight-1 phase times weight-0 radial: the psi/theta averages kill it
        let spec = QuadratureSpec::default();
        let f = |g: &GroupElement| {
            let cc = g.cartan_decompose();
            Complex64::from_polar((-cc.t).exp(), cc.psi + cc.theta)
        };
        let total = haar_integrate(f, 25.0, 16, &spec).unwrap();
        assert!(total.norm() < 1e-9, "{total}");
    }

    #[test]
    fn projection_is_idempotent_and_contractive() {
        let grid: Vec<f64> = (0..=60).map(|i| 0.05 * i as f64).collect();
        let n = HalfInt::from_twice(3); // weight 3/2
        let s = KTypeSample::from_profile(n, grid, |t| c((-t * t).exp())).unwrap();
        let once = project_ktype(|g| s.eval_group(g), n, 32);
        for g in random_elements(20, 11) {
            // projecting a pure weight-n function returns it unchanged
            assert!((once(&g) - s.eval_group(&g)).norm() < 1e-12);
        }
        // projecting onto a different weight annihilates it
        let other = project_ktype(|g| s.eval_group(g), HalfInt::from_int(1), 32);
        for g in random_elements(20, 12) {
            assert!(other(&g).norm() < 1e-12);
        }
    }

    #[test]
    fn phase_is_well_defined_across_chart_seams() {
        // f(u_alpha x) picks up exactly e^{i n alpha}, including for
        // half-integer n where the angle lives on the double cover
        let grid: Vec<f64> = (0..=60).map(|i| 0.1 * i as f64).collect();
        let n = HalfInt::from_twice(1); // weight 1/2
        let s = KTypeSample::from_profile(n, grid, |t| c(1.0 / (1.0 + t * t))).unwrap();
        for g in random_elements(50, 13) {
            let base = s.eval_group(&g);
            for &alpha in &[0.7, 2.0 * PI, 3.9, 11.0] {
                let shifted = s.eval_group(&GroupElement::rotation(alpha).compose(&g));
                let expect = Complex64::from_polar(1.0, 0.5 * alpha) * base;
                assert!((shifted - expect).norm() < 1e-10, "alpha={alpha}");
            }
        }
    }

    #[test]
    fn haar_is_left_invariant_on_samples() {
        // The profile must have a smooth even extension (F'(0) = 0):
        // otherwise the shifted integrand has corner-type angular kinks
        // wherever the translated orbit crosses the rotation subgroup, and
        // the trapezoid angle rule loses its spectral accuracy.
        let grid: Vec<f64> = (0..=600).map(|i| 0.01 * i as f64).collect();
        let s = KTypeSample::from_profile(HalfInt::from_int(0), grid, |t| {
            c((1.0 + t * t) * (-t * t).exp())
        })
        .unwrap();
        let spec = QuadratureSpec {
            abs_tol: 1e-9,
            rel_tol: 1e-9,
            ..QuadratureSpec::default()
        };
        let plain = haar_integrate(|g| s.eval_group(g), 8.0, 32, &spec).unwrap();
        let h = GroupElement::upper(0.6).compose(&GroupElement::diagonal(0.4));
        let shifted = haar_integrate(|g| s.eval_group(&h.compose(g)), 8.0, 32, &spec).unwrap();
        assert!((plain - shifted).norm() < 1e-7, "{plain} vs {shifted}");
    }
}
