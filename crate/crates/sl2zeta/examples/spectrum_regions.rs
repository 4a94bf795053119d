//! The L^p spectrum of the weight-n Casimir action: a ray plus finitely many
//! discrete points at the central exponent p = 2, opening into a parabolic
//! region as p moves away, identical for dual exponents.
//!
//! Run with `cargo run --release --example spectrum_regions`.

use num_complex::Complex64;
use sl2zeta::transform::spectrum_region;
use sl2zeta::{HalfInt, Result};

fn main() -> Result<()> {
    // p = 2: the continuous spectrum is the ray [n^2 + 1/4, infinity).
    let n = HalfInt::from_twice(4); // n = 2
    let central = spectrum_region(n, 2.0)?;
    println!("weight {n}, p = 2: delta = {}", central.delta);
    println!("  ray starts at {}", n.as_f64().powi(2) + 0.25);
    println!("  discrete points: {:?}", central.discrete_points);
    assert!(central.contains(Complex64::new(4.25, 0.0)));
    assert!(!central.contains(Complex64::new(4.25, 0.01)));
    assert!(central.contains(Complex64::new(2.0, 0.0))); // n^2 + gamma(2)

    // Away from p = 2 the region fattens into a parabola with vertex
    // n^2 + 1/4 - delta^2.
    let wide = spectrum_region(n, 4.0 / 3.0)?;
    println!("\nweight {n}, p = 4/3: delta = {}", wide.delta);
    let pts = wide.boundary_points(9);
    println!("  parabola boundary samples:");
    for z in &pts[..9] {
        println!("    {:>8.4} {:>+8.4}i", z.re, z.im);
    }
    let vertex = pts[4];
    println!("  vertex = {} (expect n^2 + 1/4 - delta^2)", vertex.re);
    assert!((vertex.re - (4.25 - wide.delta * wide.delta)).abs() < 1e-14);

    // Monotone inclusion: shrinking |1/p - 1/2| shrinks the region.
    let mid = spectrum_region(n, 1.6)?;
    let mut checked = 0;
    for i in 0..60 {
        for j in 0..60 {
            let z = Complex64::new(-1.0 + 12.0 * i as f64 / 59.0, -2.0 + 4.0 * j as f64 / 59.0);
            if mid.contains(z) {
                assert!(wide.contains(z), "{z} escaped the wider region");
                checked += 1;
            }
        }
    }
    println!("\nmonotone inclusion verified on {checked} grid points");

    // Dual exponents p and p/(p-1) describe the same region.
    let dual = spectrum_region(n, 4.0)?;
    assert_eq!(wide.delta, dual.delta);
    assert_eq!(wide.discrete_points, dual.discrete_points);
    println!("dual exponents 4/3 and 4 agree (delta = {})", dual.delta);

    // On the double cover the discrete family can be empty: weight 1/2 has
    // no discrete points at all.
    let half = spectrum_region(HalfInt::from_twice(1), 3.0)?;
    println!(
        "\nweight 1/2, p = 3: {} discrete points, vertex at {:.6}",
        half.discrete_points.len(),
        half.boundary_points(3)[1].re
    );
    Ok(())
}
