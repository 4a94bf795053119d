//! Evaluating the weight-n spherical functions zeta_{n,s} on the diagonal
//! axis: route selection, cross-route agreement, the defining symmetries and
//! the closed polynomial cases.
//!
//! Run with `cargo run --release --example zeta_eval`.

use num_complex::Complex64;
use sl2zeta::spherical::{
    discrete_set, is_polynomial_case, resolve_route, zeta_axis, zeta_critical_line_sweep, Route,
};
use sl2zeta::{HalfInt, Result};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn main() -> Result<()> {
    // A point on the critical line s = 1/2 + i lambda at integer weight.
    let n = HalfInt::from_twice(2); // n = 1
    let s = c(0.5, 2.0);

    println!("zeta_{{n={n}, s={s}}} on the diagonal axis a_t:");
    println!("{:>6} {:>22} {:>14}", "t", "value", "route");
    for &t in &[0.0, 0.25, 0.5, 1.0, 2.0, 4.0, 8.0] {
        let route = resolve_route(n, s, t);
        let z = zeta_axis(n, s, t, Route::Auto)?;
        println!("{t:>6} {:>22.15} {:>14}", z.re, route.name());
    }

    // All evaluation routes agree where they are defined.
    let t = 1.5;
    let hyper = zeta_axis(n, s, t, Route::Hyper)?;
    let theta = zeta_axis(n, s, t, Route::ThetaIntegral)?;
    let cosine = zeta_axis(n, s, t, Route::CosineIntegral)?;
    println!("\ncross-route agreement at t = {t}:");
    println!("  hyper  = {hyper}");
    println!("  theta  = {theta}");
    println!("  cosine = {cosine}");
    assert!((hyper - theta).norm() < 1e-10);
    assert!((hyper - cosine).norm() < 1e-10);

    // Symmetries: s <-> 1-s and n <-> -n leave the function unchanged,
    // and on the axis the value is even in t.
    let refl = zeta_axis(n, c(1.0, 0.0) - s, t, Route::Auto)?;
    let mirr = zeta_axis(-n, s, t, Route::Auto)?;
    let even = zeta_axis(n, s, -t, Route::Auto)?;
    println!("\nsymmetry defects (all should be at roundoff):");
    println!("  s -> 1-s : {:.3e}", (hyper - refl).norm());
    println!("  n -> -n  : {:.3e}", (hyper - mirr).norm());
    println!("  t -> -t  : {:.3e}", (hyper - even).norm());

    // At the discrete points D_n the series terminates and the function is a
    // polynomial in tanh^2(t/2) times the center factor.
    let dn = discrete_set(HalfInt::from_twice(6)); // weight n = 3
    println!("\ndiscrete family D_3 = {:?}:", dn.members);
    for &sk in &dn.members {
        let sc = c(sk.as_f64(), 0.0);
        assert!(is_polynomial_case(HalfInt::from_twice(6), sc));
        let v = zeta_axis(HalfInt::from_twice(6), sc, 3.0, Route::Auto)?;
        println!("  zeta_{{3,{sk}}}(a_3) = {:.15}", v.re);
    }

    // Sweeps along the critical line share quadrature nodes and use a
    // three-term recurrence, so they are much faster than pointwise calls.
    let lambdas: Vec<f64> = (0..=50).map(|k| 0.2 * k as f64).collect();
    let sweep = zeta_critical_line_sweep(n, &lambdas, 2.0);
    let spot = zeta_axis(n, c(0.5, lambdas[37]), 2.0, Route::Auto)?;
    println!(
        "\nsweep over {} lambda values at t = 2: max |zeta| = {:.6}, \
         spot-check defect {:.3e}",
        lambdas.len(),
        sweep.iter().cloned().fold(0.0f64, f64::max),
        (sweep[37] - spot.re).abs()
    );

    // Half-odd weights live on the double cover; everything works the same.
    let half = HalfInt::from_twice(3); // n = 3/2
    let v = zeta_axis(half, c(0.5, 1.0), 1.0, Route::Auto)?;
    println!("half-odd weight n = {half}: zeta(a_1) = {v}");
    Ok(())
}
