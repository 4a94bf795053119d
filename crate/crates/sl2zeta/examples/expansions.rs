//! Asymptotic structure of the spherical functions: the large-time expansion
//! with its attached tail estimate, the small-time Bessel-type leading term,
//! and the limit that recovers the c-function.
//!
//! Run with `cargo run --release --example expansions`.

use num_complex::Complex64;
use sl2zeta::spherical::{
    c_fn, c_limit_residual, global_expansion, local_leading, local_remainder, zeta_axis, Route, B0,
};
use sl2zeta::{HalfInt, Result};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn main() -> Result<()> {
    let n = HalfInt::from_twice(1); // n = 1/2
    let lambda = c(2.0, 0.0);
    let s = c(0.5, lambda.re);

    // Large time: zeta ~ e^{-t/2} (c(lambda) e^{i lambda t} + c(-lambda)
    // e^{-i lambda t}) with exponentially small corrections. The expansion
    // returns the truncated sum together with an attached tail bound.
    println!("large-time expansion at n = {n}, lambda = {}:", lambda.re);
    println!(
        "{:>5} {:>22} {:>22} {:>12} {:>12}",
        "t", "direct", "expansion", "error", "tail"
    );
    for &t in &[2.0, 3.0, 4.0, 6.0, 8.0] {
        let direct = zeta_axis(n, s, t, Route::Auto)?;
        let (exp, tail) = global_expansion(n, lambda, t, 60)?;
        let err = (direct - exp).norm();
        println!(
            "{t:>5} {:>22.15} {:>22.15} {err:>12.3e} {tail:>12.3e}",
            direct.re, exp.re
        );
        assert!(err <= tail, "attached tail must dominate the actual error");
    }

    // The oscillation amplitudes are the c-function values: dividing out the
    // expansion's own prefactor and letting t grow isolates |c(lambda)|.
    let cv = c_fn(n, lambda)?;
    println!("\nc-function at lambda = {}: {cv}", lambda.re);
    for s_test in [c(0.25, 0.0), c(0.25, 0.5)] {
        let r = c_limit_residual(n, s_test, 30.0)?;
        println!("  c-limit residual at s = {s_test}, t = 30: {r:.3e}");
        assert!(r <= 1e-5);
    }

    // Small time: zeta_{n, 1/2+i lambda}(a_t) ~ b0 * J-type profile in
    // lambda t, with weight entering only at the next order. The leading
    // constant b0 = 2/sqrt(pi) is weight-independent.
    println!("\nsmall-time leading term (b0 = {B0:.15}):");
    println!("{:>6} {:>20} {:>20} {:>12}", "t", "direct", "leading", "rel rem");
    let lam = 3.0;
    for &t in &[0.05, 0.1, 0.2, 0.4] {
        let direct = zeta_axis(n, c(0.5, lam), t, Route::Auto)?;
        let lead = local_leading(lam, t)?;
        let rem = local_remainder(n, lam, t)?;
        println!(
            "{t:>6} {:>20.15} {lead:>20.15} {:>12.3e}",
            direct.re,
            rem / direct.norm()
        );
    }

    // The remainder shrinks like t^2 as t -> 0, uniformly in the weight.
    let r1 = local_remainder(HalfInt::from_twice(0), lam, 0.2)?;
    let r2 = local_remainder(HalfInt::from_twice(0), lam, 0.1)?;
    println!(
        "\nremainder ratio r(0.2)/r(0.1) = {:.2} (quadratic decay gives ~4)",
        r1 / r2
    );
    Ok(())
}
