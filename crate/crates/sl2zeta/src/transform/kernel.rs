//! Radial convolution kernels synthesized from spectral multipliers:
//! the continuous and discrete parts of the kernel, its smooth local/global
//! splitting, and the exponentially weighted integral of the global part
//! that controls operator bounds away from the diagonal.

use super::multiplier::Multiplier;
use super::{grid_quadrature, nu_density, TransformGrid};
use crate::error::{Error, Result};
use crate::group::ktype::KTypeSample;
use crate::halfint::HalfInt;
use crate::spherical::{discrete_set, zeta_axis, zeta_critical_line_sweep, Route};
use num_complex::Complex64;

/// Smooth partition function: 1 for |t| <= 1/2, 0 for |t| >= 1, and a
/// C-infinity bridge g(1-u)/(g(1-u)+g(u)) with g(x) = e^{-1/x} in between.
pub fn chi_cutoff(t: f64) -> f64 {
    let u = 2.0 * t.abs() - 1.0;
    if u <= 0.0 {
        1.0
    } else if u >= 1.0 {
        0.0
    } else {
        let g = |x: f64| (-1.0 / x).exp();
        let a = g(1.0 - u);
        a / (a + g(u))
    }
}

/// Kernel of a spectral multiplier on the radial axis, with its continuous
/// and discrete parts and the cutoff splitting of the continuous part.
#[derive(Debug, Clone)]
pub struct KernelTable {
    pub n: HalfInt,
    pub t_grid: Vec<f64>,
    /// Continuous-spectrum part Phi_cont(t).
    pub cont: Vec<Complex64>,
    /// Discrete-part sum over D_n.
    pub disc: Vec<Complex64>,
    /// Local piece Phi_cont * chi (supported in |t| <= 1).
    pub loc: Vec<Complex64>,
    /// Global piece Phi_cont - loc (vanishes for |t| <= 1/2).
    pub glo: Vec<Complex64>,
    /// Regularization used: the synthesized multiplier is m(z) e^{-epsilon z}.
    pub epsilon: f64,
}

/// Synthesizes the kernel of m(z) e^{-epsilon z} at weight n:
/// Phi_cont(t) = int_0^Lambda m_eps(n^2+1/4+lambda^2)
///               zeta_{n,1/2+i lambda}(a_t) nu_n(lambda) dlambda,
/// Phi_disc(t) = sum_{s in D_n} (s-1/2) m_eps(n^2+gamma(s)) zeta_{n,s}(a_t).
pub fn synthesize_kernel(
    m: &Multiplier,
    n: HalfInt,
    t_grid: &[f64],
    epsilon: f64,
    grid: &TransformGrid,
) -> Result<KernelTable> {
    if epsilon < 0.0 {
        return Err(Error::Domain(format!(
            "regularization must be nonnegative, got {epsilon}"
        )));
    }
    if t_grid.is_empty() || t_grid[0] <= 0.0 || t_grid.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::GridMismatch(
            "kernel grid must be strictly increasing and positive".into(),
        ));
    }
    let nf = n.as_f64();
    let n2 = nf * nf;
    if epsilon + m.decay_rate() <= 0.0 && !m.is_identically_zero() {
        let cap = grid.lambda_max;
        let top = m.eval(Complex64::new(n2 + 0.25 + cap * cap, 0.0))?;
        return Err(Error::InsufficientDecay {
            tail_estimate: top.norm() * nu_density(n, cap) * cap,
        });
    }

    // zeta_{n,1/2+i lambda}(a_t) oscillates like cos(lambda t), so the
    // lambda rule must resolve a phase of t_max * step per cell: halve the
    // step until that phase is small, or deep kernel tails drown in
    // discretization error
    let t_cap = *t_grid.last().unwrap();
    let mut step = grid.lambda_step;
    while step * t_cap > 0.5 {
        step *= 0.5;
    }
    let lambda_grid = TransformGrid {
        lambda_max: grid.lambda_max,
        lambda_step: step,
    }
    .lambda_grid();
    let mut weights = Vec::with_capacity(lambda_grid.len());
    for &lam in &lambda_grid {
        let z = n2 + 0.25 + lam * lam;
        weights.push(m.eval(Complex64::new(z, 0.0))? * (-epsilon * z).exp() * nu_density(n, lam));
    }
    let disc_set = discrete_set(n);
    let mut disc_weights = Vec::new();
    for &s in &disc_set.members {
        let sf = s.as_f64();
        let z = n2 + sf * (1.0 - sf);
        disc_weights.push((s, (sf - 0.5) * m.eval(Complex64::new(z, 0.0))? * (-epsilon * z).exp()));
    }

    let mut cont = Vec::with_capacity(t_grid.len());
    let mut disc = Vec::with_capacity(t_grid.len());
    let mut integrand = vec![Complex64::new(0.0, 0.0); lambda_grid.len()];
    for &t in t_grid {
        let zs = zeta_critical_line_sweep(n, &lambda_grid, t);
        for ((slot, &z), w) in integrand.iter_mut().zip(&zs).zip(&weights) {
            *slot = w * z;
        }
        cont.push(grid_quadrature(&lambda_grid, &integrand));
        let mut d = Complex64::new(0.0, 0.0);
        for (s, w) in &disc_weights {
            let sc = Complex64::new(s.as_f64(), 0.0);
            d += w * zeta_axis(n, sc, t, Route::Hyper)?.re;
        }
        disc.push(d);
    }
    let loc: Vec<Complex64> = t_grid
        .iter()
        .zip(&cont)
        .map(|(&t, &v)| v * chi_cutoff(t))
        .collect();
    let glo: Vec<Complex64> = cont.iter().zip(&loc).map(|(&c, &l)| c - l).collect();
    Ok(KernelTable {
        n,
        t_grid: t_grid.to_vec(),
        cont,
        disc,
        loc,
        glo,
        epsilon,
    })
}

/// Exponentially weighted size of the global part,
/// int |Phi_glo(t)| sinh t e^{-t/p'} dt, with an exponential tail fit past
/// the grid. Envelopes below 1e-6 of the integrand's peak are treated as the
/// synthesis noise floor and dropped; above it, the last decade must show a
/// positive decay rate or the tail is declared unresolved.
pub fn herz_integral(k: &KernelTable, p: f64) -> Result<f64> {
    if !(p > 1.0 && p.is_finite()) {
        return Err(Error::Domain(format!("exponent p must lie in (1, inf), got {p}")));
    }
    let p_conj = p / (p - 1.0);
    let h: Vec<Complex64> = k
        .t_grid
        .iter()
        .zip(&k.glo)
        .map(|(&t, v)| Complex64::new(v.norm() * t.sinh() * (-t / p_conj).exp(), 0.0))
        .collect();
    let body = grid_quadrature(&k.t_grid, &h).re;
    let cap = *k.t_grid.last().unwrap();
    let scale = h.iter().map(|v| v.re).fold(0.0, f64::max);
    let mut env1: f64 = 0.0;
    let mut env2: f64 = 0.0;
    for (&t, v) in k.t_grid.iter().zip(&h) {
        if t >= 0.90 * cap && t < 0.95 * cap {
            env1 = env1.max(v.re);
        } else if t >= 0.95 * cap {
            env2 = env2.max(v.re);
        }
    }
    if env2 <= 1e-6 * (1.0 + scale) {
        return Ok(body);
    }
    let rate = (env1 / env2).ln() / (0.05 * cap);
    if rate <= 0.0 {
        return Err(Error::TailNotResolved { rate });
    }
    Ok(body + env2 / rate)
}

/// The full kernel cont + disc as a radial profile, for convolution against
/// other weight-n samples.
pub fn kernel_as_profile(k: &KernelTable) -> Result<KTypeSample> {
    let values = k.cont.iter().zip(&k.disc).map(|(&c, &d)| c + d).collect();
    KTypeSample::new(k.n, k.t_grid.clone(), values)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hi(tw: i32) -> HalfInt {
        HalfInt::from_twice(tw)
    }

    fn t_grid() -> Vec<f64> {
        (1..=160).map(|k| k as f64 * 0.05).collect()
    }

    #[test]
    fn cutoff_shape_and_smoothness() {
        assert_eq!(chi_cutoff(0.0), 1.0);
        assert_eq!(chi_cutoff(0.5), 1.0);
        assert_eq!(chi_cutoff(1.0), 0.0);
        assert_eq!(chi_cutoff(-2.0), 0.0);
        assert!((chi_cutoff(0.75) - 0.5).abs() < 1e-15);
        assert_eq!(chi_cutoff(0.6), chi_cutoff(-0.6));
        // monotone decreasing across the bridge
        let mut prev = 1.0;
        for k in 0..=100 {
            let v = chi_cutoff(0.5 + 0.005 * k as f64);
            assert!(v <= prev + 1e-15);
            prev = v;
        }
        // the bridge meets its endpoints to very high order
        assert!(chi_cutoff(0.5 + 1e-3) > 1.0 - 1e-10);
        assert!(chi_cutoff(1.0 - 1e-3) < 1e-10);
    }

    #[test]
    fn zero_multiplier_gives_zero_kernel() {
        let m = Multiplier::parse("const:value=0").unwrap();
        let k = synthesize_kernel(&m, hi(2), &t_grid(), 0.0, &TransformGrid::default()).unwrap();
        assert!(k.cont.iter().all(|v| v.norm() == 0.0));
        assert!(k.disc.iter().all(|v| v.norm() == 0.0));
        assert!(k.glo.iter().all(|v| v.norm() == 0.0));
        assert_eq!(herz_integral(&k, 4.0 / 3.0).unwrap(), 0.0);
    }

    #[test]
    fn splitting_is_supported_and_consistent() {
        let m = Multiplier::parse("heat:tau=0.4").unwrap();
        let k = synthesize_kernel(&m, hi(1), &t_grid(), 0.0, &TransformGrid::default()).unwrap();
        for (i, &t) in k.t_grid.iter().enumerate() {
            if t >= 1.0 {
                assert_eq!(k.loc[i].norm(), 0.0, "loc must vanish at t={t}");
            }
            if t <= 0.5 {
                assert_eq!(k.glo[i].norm(), 0.0, "glo must vanish at t={t}");
            }
            let sum = k.loc[i] + k.glo[i];
            assert!(
                (sum - k.cont[i]).norm() <= 1e-15 * (1.0 + k.cont[i].norm()),
                "split must recombine at t={t}"
            );
        }
    }

    #[test]
    fn heat_kernel_is_positive_and_decaying() {
        // the weight-0 heat kernel must be real and positive near the
        // identity and fall off monotonically in the bulk
        let m = Multiplier::parse("heat:tau=0.5").unwrap();
        let k = synthesize_kernel(&m, hi(0), &t_grid(), 0.0, &TransformGrid::default()).unwrap();
        assert!(k.cont[0].re > 0.0);
        assert!(k.cont[0].im.abs() < 1e-12 * k.cont[0].re);
        // kernels decay monotonically for moderate heat times
        let norms: Vec<f64> = k.cont.iter().map(|v| v.norm()).collect();
        assert!(norms[20] < norms[0] && norms[80] < norms[20]);
    }

    #[test]
    fn herz_integral_is_stable_under_domain_growth() {
        let m = Multiplier::parse("heat:tau=0.6").unwrap();
        let short: Vec<f64> = (1..=160).map(|k| k as f64 * 0.05).collect();
        let long: Vec<f64> = (1..=320).map(|k| k as f64 * 0.05).collect();
        let ka = synthesize_kernel(&m, hi(0), &short, 0.0, &TransformGrid::default()).unwrap();
        let kb = synthesize_kernel(&m, hi(0), &long, 0.0, &TransformGrid::default()).unwrap();
        let a = herz_integral(&ka, 4.0 / 3.0).unwrap();
        let b = herz_integral(&kb, 4.0 / 3.0).unwrap();
        assert!(a.is_finite() && b.is_finite() && a > 0.0);
        assert!((a - b).abs() < 0.05 * b.max(1e-12), "{a} vs {b}");
    }

    #[test]
    fn undamped_resolvent_is_rejected_without_regularization() {
        let m = Multiplier::parse("resolvent:z0=-1+0i").unwrap();
        let err =
            synthesize_kernel(&m, hi(0), &t_grid(), 0.0, &TransformGrid::default()).unwrap_err();
        assert!(matches!(err, Error::InsufficientDecay { .. }));
        // a positive regularization restores synthesizability
        let k = synthesize_kernel(&m, hi(0), &t_grid(), 0.05, &TransformGrid::default()).unwrap();
        assert!(k.cont[0].norm().is_finite());
    }

    #[test]
    fn discrete_part_matches_direct_formula() {
        let m = Multiplier::parse("const:value=1").unwrap();
        let eps = 0.3;
        let k = synthesize_kernel(&m, hi(4), &t_grid(), eps, &TransformGrid::default()).unwrap();
        for (i, &t) in k.t_grid.iter().enumerate().step_by(40) {
            let z1 = zeta_axis(hi(4), Complex64::new(1.0, 0.0), t, Route::Hyper)
                .unwrap()
                .re;
            let z2 = zeta_axis(hi(4), Complex64::new(2.0, 0.0), t, Route::Hyper)
                .unwrap()
                .re;
            // gamma(1) = 0 and gamma(2) = -2 shift the spectral points off n^2
            let want = 0.5 * (-eps * 4.0).exp() * z1 + 1.5 * (-eps * 2.0).exp() * z2;
            assert!(
                (k.disc[i].re - want).abs() < 1e-12 * (1.0 + want.abs()),
                "t={t}"
            );
        }
    }
}
