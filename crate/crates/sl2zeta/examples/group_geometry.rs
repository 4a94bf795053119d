//! Working on the double cover of SL(2, R): Cartan and Iwasawa coordinates,
//! Haar integration in polar form, and the rotation-averaged product identity
//! that characterizes the spherical functions.
//!
//! Run with `cargo run --release --example group_geometry`.

use num_complex::Complex64;
use sl2zeta::group::{
    haar_integrate, random_elements, GroupElement, IwasawaVariant, KTypeSample,
};
use sl2zeta::special::QuadratureSpec;
use sl2zeta::spherical::{zeta_group, Route, zeta_axis};
use sl2zeta::{HalfInt, Result};
use std::f64::consts::PI;

fn main() -> Result<()> {
    // Build an element from its Cartan coordinates u_psi a_t u_theta and
    // recover them; angles live on [0, 4 pi) because of the double cover.
    let g = GroupElement::rotation(1.0)
        .compose(&GroupElement::diagonal(0.7))
        .compose(&GroupElement::rotation(5.0));
    let cart = g.cartan_decompose();
    println!("cartan coordinates: psi = {:.12}, t = {:.12}, theta = {:.12}", cart.psi, cart.t, cart.theta);
    let back = GroupElement::from_cartan(&cart);
    println!("reconstruction defect: {:.3e}", matrix_gap(&g, &back));

    // The two horocyclic variants factor the same element differently.
    for variant in [IwasawaVariant::N, IwasawaVariant::Nbar] {
        let iw = g.iwasawa_decompose(variant);
        let re = GroupElement::from_iwasawa(&iw);
        println!("iwasawa {variant:?}: xi = {:+.6}, t = {:+.6}, defect {:.3e}",
            iw.xi, iw.t, matrix_gap(&g, &re));
    }

    // Haar measure in polar coordinates: the volume of the ball t <= R under
    // sinh t dt matches cosh R - 1 once the two angle averages normalize to 1.
    let spec = QuadratureSpec::default();
    let vol = haar_integrate(|_| Complex64::new(1.0, 0.0), 2.0, 8, &spec)?;
    println!("\npolar volume of t <= 2: {:.12} (cosh 2 - 1 = {:.12})", vol.re, 2.0f64.cosh() - 1.0);

    // The product identity: averaging zeta over a conjugated rotation orbit
    // factors it, which pins the spherical normalization with no freedom.
    let n = HalfInt::from_twice(2);
    let s = Complex64::new(0.5, 1.5);
    let pair = random_elements(2, 7);
    let (x, y) = (&pair[0], &pair[1]);
    let nodes = 64;
    let step = 4.0 * PI / nodes as f64;
    let mut avg = Complex64::new(0.0, 0.0);
    for k in 0..nodes {
        let u = GroupElement::rotation(step * k as f64);
        let conj = u.compose(x).compose(&u.inverse()).compose(y);
        avg += zeta_group(n, s, &conj)?;
    }
    avg /= nodes as f64;
    let product = zeta_group(n, s, x)? * zeta_group(n, s, y)?;
    println!("\nproduct identity defect: {:.3e}", (avg - product).norm());
    assert!((avg - product).norm() < 1e-6);

    // Weight-n profiles evaluate off the axis through their Cartan radius
    // and pick up the bi-rotation phases of their weight.
    let t_grid: Vec<f64> = (0..=80).map(|k| 0.05 * k as f64).collect();
    let f = KTypeSample::from_profile(n, t_grid, |t| Complex64::new((-t * t).exp(), 0.0))?;
    let at = GroupElement::diagonal(0.9);
    let rotated = GroupElement::rotation(0.4).compose(&at);
    let phase = f.eval_group(&rotated) / f.eval_group(&at);
    println!("\nweight-{n} left-rotation phase at theta = 0.4: {phase} (|.| = {:.12})", phase.norm());

    // Spherical functions themselves are the weight-n eigenprofiles.
    let direct = zeta_axis(n, s, 0.9, Route::Auto)?;
    let via_group = zeta_group(n, s, &at)?;
    println!("axis vs group evaluation defect: {:.3e}", (direct - via_group).norm());
    Ok(())
}

/// Frobenius gap between two 2x2 matrices, modulo the center +/- 1.
fn matrix_gap(a: &GroupElement, b: &GroupElement) -> f64 {
    let direct = ((a.a - b.a).powi(2) + (a.b - b.b).powi(2) + (a.c - b.c).powi(2)
        + (a.d - b.d).powi(2))
    .sqrt();
    let flipped = ((a.a + b.a).powi(2) + (a.b + b.b).powi(2) + (a.c + b.c).powi(2)
        + (a.d + b.d).powi(2))
    .sqrt();
    direct.min(flipped)
}
