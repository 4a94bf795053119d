//! Chebyshev and Jacobi polynomials by three-term recurrence.
//!
//! Jacobi polynomials follow the standard normalization P_k^{(a,b)}(1) =
//! binom(k+a, k); in particular P_1^{(a,b)}(x) = (a-b)/2 + (a+b+2)x/2. The
//! hypergeometric identity used elsewhere in the crate reads
//! 2F1(-k, k+a+b+1; a+1; x) = k!/(a+1)_k * P_k^{(a,b)}(1-2x).

/// Chebyshev polynomial of the first kind, T_k(x), any real x.
pub fn chebyshev_t(k: u32, x: f64) -> f64 {
    match k {
        0 => 1.0,
        1 => x,
        _ => {
            let mut tm1 = 1.0;
            let mut t = x;
            for _ in 2..=k {
                let next = 2.0 * x * t - tm1;
                tm1 = t;
                t = next;
            }
            t
        }
    }
}

/// Jacobi polynomial P_k^{(a,b)}(x), standard normalization.
pub fn jacobi_p(k: u32, a: f64, b: f64, x: f64) -> f64 {
    match k {
        0 => 1.0,
        1 => 0.5 * (a - b) + 0.5 * (a + b + 2.0) * x,
        _ => {
            let mut pm1 = 1.0;
            let mut p = 0.5 * (a - b) + 0.5 * (a + b + 2.0) * x;
            for m in 2..=k {
                let m = m as f64;
                let c1 = 2.0 * m * (m + a + b) * (2.0 * m + a + b - 2.0);
                let c2 = (2.0 * m + a + b - 1.0)
                    * ((2.0 * m + a + b) * (2.0 * m + a + b - 2.0) * x + a * a - b * b);
                let c3 = 2.0 * (m + a - 1.0) * (m + b - 1.0) * (2.0 * m + a + b);
                let next = (c2 * p - c3 * pm1) / c1;
                pm1 = p;
                p = next;
            }
            p
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chebyshev_matches_cosine_identity() {
        // T_k(cos u) = cos(k u); k = 6, u = 0.3 is the frozen spot check.
        assert!((chebyshev_t(6, 0.3f64.cos()) - 1.8f64.cos()).abs() < 1e-14);
        for k in 0..=9u32 {
            for &u in &[0.0f64, 0.4, 1.1, 2.9] {
                assert!(
                    (chebyshev_t(k, u.cos()) - (k as f64 * u).cos()).abs() < 1e-13,
                    "k={k} u={u}"
                );
            }
        }
    }

    #[test]
    fn jacobi_low_degrees_explicit() {
        assert_eq!(jacobi_p(0, 0.0, 3.0, 0.77), 1.0);
        // Degree-1 explicit formula (a-b)/2 + (a+b+2)x/2 at (a,b) = (0,1).
        for &x in &[-1.0, -0.3, 0.0, 0.5, 1.0] {
            assert!((jacobi_p(1, 0.0, 1.0, x) - (3.0 * x - 1.0) / 2.0).abs() < 1e-15);
        }
        // P_2^{(0,3)}(0) = 1/4, frozen from the hypergeometric representation.
        assert!((jacobi_p(2, 0.0, 3.0, 0.0) - 0.25).abs() < 1e-14);
    }

    #[test]
    fn jacobi_value_at_one_is_binomial() {
        // P_k^{(a,b)}(1) = (a+1)_k / k!.
        for k in 0..=6u32 {
            for &a in &[0.0, 1.0, 2.5] {
                let mut want = 1.0;
                for m in 0..k {
                    want *= (a + 1.0 + m as f64) / (m as f64 + 1.0);
                }
                let got = jacobi_p(k, a, 1.5, 1.0);
                assert!((got - want).abs() < 1e-12 * want.abs().max(1.0), "k={k} a={a}");
            }
        }
    }

    #[test]
    fn jacobi_hypergeometric_consistency() {
        // 2F1(-k, k+beta; 1; x) = P_k^{(0, beta-1)}(1-2x) for k = 0..6,
        // beta = 1..6, x in [0,1).
        use crate::special::hyp2f1::hyp2f1_c1;
        use num_complex::Complex64;
        for k in 0..=6u32 {
            for beta in 1..=6u32 {
                for &x in &[0.0, 0.15, 0.5, 0.85, 0.99] {
                    let f = hyp2f1_c1(
                        Complex64::new(-(k as f64), 0.0),
                        Complex64::new(k as f64 + beta as f64, 0.0),
                        x,
                    )
                    .unwrap();
                    let p = jacobi_p(k, 0.0, beta as f64 - 1.0, 1.0 - 2.0 * x);
                    assert!(
                        (f.re - p).abs() < 1e-10 * p.abs().max(1.0),
                        "k={k} beta={beta} x={x}: {f} vs {p}"
                    );
                }
            }
        }
    }
}
