//! Scalar special functions and quadrature.
//!
//! | item                | purpose                                         |
//! |---------------------|-------------------------------------------------|
//! | [`gamma::gamma`]    | complex gamma (Lanczos + reflection)            |
//! | [`hyp2f1::hyp2f1_c1`] | 2F1(a,b;1;x) series with polynomial branch    |
//! | [`bessel::bessel_j`] | Bessel J_j, three cross-validated regimes      |
//! | [`bessel::bessel_script_j`] | normalized even Bessel kernel           |
//! | [`orthopoly`]       | Chebyshev T_k and Jacobi P_k^(a,b)              |
//! | [`quad`]            | trapezoid / Gauss-Kronrod / singular-endpoint   |

pub mod bessel;
pub mod gamma;
pub mod hyp2f1;
pub mod orthopoly;
pub mod quad;

pub use bessel::{bessel_j, bessel_script_j};
pub use gamma::{gamma, gamma_real};
pub use hyp2f1::{hyp2f1_c1, X_SWITCH};
pub use orthopoly::{chebyshev_t, jacobi_p};
pub use quad::{integrate, integrate_real, periodic_trapezoid, QuadKind, QuadratureSpec};
