//! Probe: node requirements for the definition route at real s, plus the
//! worst offenders for the symmetry and tail-honesty criteria.

use num_complex::Complex64;
use sl2zeta::group::GroupElement;
use sl2zeta::spherical::{discrete_set, global_expansion, zeta_axis, Route};
use sl2zeta::HalfInt;
use std::f64::consts::PI;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn definition_with_nodes(n: HalfInt, s: Complex64, t: f64, nodes: usize) -> Complex64 {
    let g = GroupElement::diagonal(t);
    let nf = n.as_f64();
    let mut acc = Complex64::new(0.0, 0.0);
    let step = 4.0 * PI / nodes as f64;
    for k in 0..nodes {
        let theta = step * k as f64;
        let m = GroupElement::rotation(theta).compose(&g);
        let ic = m.iwasawa_decompose(sl2zeta::group::IwasawaVariant::N);
        acc += (s * ic.t).exp() * Complex64::from_polar(1.0, nf * (ic.theta - theta));
    }
    acc / nodes as f64
}

fn main() {
    // node requirement at the worst point (n = 3, s = 3, t = 5)
    let n = HalfInt::from_twice(6);
    let s = c(3.0, 0.0);
    let exact = zeta_axis(n, s, 5.0, Route::Hyper).unwrap();
    println!("exact zeta_{{3,3}}(a_5) = {:.6e}", exact.re);
    for mult in [1usize, 2, 3, 4, 6, 8] {
        let nodes = 5046 * mult;
        let v = definition_with_nodes(n, s, 5.0, nodes);
        println!("  x{mult} nodes = {nodes}: gap {:.3e}", (v - exact).norm());
    }
    // same scan at t = 2 (gap was 2.8e-8 there)
    let exact2 = zeta_axis(n, s, 2.0, Route::Hyper).unwrap();
    for mult in [1usize, 2, 3, 4] {
        let nodes = 2 * 252 * mult; // theta_nodes(0, 2) = 252
        let v = definition_with_nodes(n, s, 2.0, nodes);
        println!("  t=2 x{mult} nodes = {nodes}: gap {:.3e}", (v - exact2).norm());
    }

    // c02: worst symmetry offender
    let mut worst = (0.0f64, String::new());
    for &tw in &[0i32, 1, 2, 3, 4, 6] {
        let n = HalfInt::from_twice(tw);
        let mut ss: Vec<Complex64> = [0.0, 0.5, 1.0, 2.0, 5.0, 10.0]
            .iter()
            .map(|&l| c(0.5, l))
            .collect();
        for m in discrete_set(n).members {
            ss.push(c(m.as_f64(), 0.0));
        }
        for sv in ss {
            for &t in &[0.0, 0.1, 0.5, 1.0, 2.0, 5.0] {
                let v = zeta_axis(n, sv, t, Route::Auto).unwrap();
                let refl = zeta_axis(n, c(1.0, 0.0) - sv, t, Route::Auto).unwrap();
                let d = (v - refl).norm();
                if d > worst.0 {
                    worst = (d, format!("n={n} s={sv} t={t} refl gap {d:.3e}"));
                }
            }
        }
    }
    println!("c02 worst: {}", worst.1);

    // c06: tail-honesty offenders
    for &tw in &[0i32, 1, 2, 3, 4] {
        for &lam in &[0.2, 0.5, 1.0, 2.0, 5.0, 10.0] {
            for &t in &[2.0, 3.0, 5.0, 8.0] {
                let n = HalfInt::from_twice(tw);
                let (v, tail) = global_expansion(n, c(lam, 0.0), t, 60).unwrap();
                let direct = zeta_axis(n, c(0.5, lam), t, Route::Auto).unwrap();
                let err = (v - direct).norm();
                if err > tail {
                    println!(
                        "c06 excess: n={n} lam={lam} t={t}: err {err:.3e} > tail {tail:.3e}"
                    );
                }
            }
        }
    }
    println!("done");
}
