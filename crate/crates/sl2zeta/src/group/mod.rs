//! The group of real unimodular 2x2 matrices, seen through its double cover:
//! rotation angles live in [0, 4pi), so half-integer rotation weights are
//! single-valued.
//!
//! Conventions (fixed throughout the crate):
//!
//! - rotations  u_theta = [[cos(th/2), sin(th/2)], [-sin(th/2), cos(th/2)]],
//!   theta in [0, 4pi), u_{2pi} = -I;
//! - diagonals  a_t = diag(e^{t/2}, e^{-t/2});
//! - upper/lower unipotents n_xi = [[1, xi/2], [0, 1]],
//!   nbar_xi = [[1, 0], [xi/2, 1]].
//!
//! Polar form g = u_psi a_t u_theta (t >= 0) is canonicalized by psi in
//! [0, 2pi) when t > 0; at t = 0 all rotation is carried by theta. Horocyclic
//! form g = n_xi a_t u_phi (or the lower-triangular variant) is unique with
//! phi in [0, 4pi).

pub mod ktype;

pub use ktype::{convolve_ktype, haar_integrate, project_ktype, KTypeSample};

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

const TAU4: f64 = 4.0 * PI; // full angle of the double cover

/// Real 2x2 matrix with det = 1 (checked on construction within 1e-12).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GroupElement {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

/// Polar coordinates g = u_psi a_t u_theta.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CartanCoords {
    pub psi: f64,
    pub t: f64,
    pub theta: f64,
}

/// Which unipotent subgroup a horocyclic decomposition uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum IwasawaVariant {
    /// g = n_xi a_t u_phi (upper triangular unipotent).
    N,
    /// g = nbar_xi a_t u_phi (lower triangular unipotent).
    Nbar,
}

/// Horocyclic coordinates g = n_xi a_t u_theta (or nbar variant).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IwasawaCoords {
    pub variant: IwasawaVariant,
    pub xi: f64,
    pub t: f64,
    pub theta: f64,
}

/// Reduces an angle into [0, 4pi).
pub fn wrap_angle(th: f64) -> f64 {
    let w = th.rem_euclid(TAU4);
    if w == TAU4 {
        0.0
    } else {
        w
    }
}

impl GroupElement {
    /// Checked constructor; the determinant must be 1 within 1e-12.
    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        let det = a * d - b * c;
        if (det - 1.0).abs() > 1e-12 {
            return Err(Error::NotUnimodular { det });
        }
        Ok(GroupElement { a, b, c, d })
    }

    /// Internal constructor for products of already-valid elements.
    pub(crate) fn new_unchecked(a: f64, b: f64, c: f64, d: f64) -> Self {
        GroupElement { a, b, c, d }
    }

    pub fn identity() -> Self {
        GroupElement::new_unchecked(1.0, 0.0, 0.0, 1.0)
    }

    /// Rotation u_theta (double-cover parametrization).
    pub fn rotation(theta: f64) -> Self {
        let (s, c) = (0.5 * theta).sin_cos();
        GroupElement::new_unchecked(c, s, -s, c)
    }

    /// Diagonal a_t = diag(e^{t/2}, e^{-t/2}).
    pub fn diagonal(t: f64) -> Self {
        let e = (0.5 * t).exp();
        GroupElement::new_unchecked(e, 0.0, 0.0, 1.0 / e)
    }

    /// Upper unipotent n_xi.
    pub fn upper(xi: f64) -> Self {
        GroupElement::new_unchecked(1.0, 0.5 * xi, 0.0, 1.0)
    }

    /// Lower unipotent nbar_xi.
    pub fn lower(xi: f64) -> Self {
        GroupElement::new_unchecked(1.0, 0.0, 0.5 * xi, 1.0)
    }

    pub fn det(&self) -> f64 {
        self.a * self.d - self.b * self.c
    }

    /// Matrix product self * rhs.
    pub fn compose(&self, rhs: &GroupElement) -> GroupElement {
        GroupElement::new_unchecked(
            self.a * rhs.a + self.b * rhs.c,
            self.a * rhs.b + self.b * rhs.d,
            self.c * rhs.a + self.d * rhs.c,
            self.c * rhs.b + self.d * rhs.d,
        )
    }

    /// Inverse via the adjugate (exact for det = 1).
    pub fn inverse(&self) -> GroupElement {
        GroupElement::new_unchecked(self.d, -self.b, -self.c, self.a)
    }

    /// Builds u_psi a_t u_theta.
    pub fn from_cartan(c: &CartanCoords) -> GroupElement {
        GroupElement::rotation(c.psi)
            .compose(&GroupElement::diagonal(c.t))
            .compose(&GroupElement::rotation(c.theta))
    }

    /// Builds n_xi a_t u_theta or nbar_xi a_t u_theta.
    pub fn from_iwasawa(c: &IwasawaCoords) -> GroupElement {
        let unipotent = match c.variant {
            IwasawaVariant::N => GroupElement::upper(c.xi),
            IwasawaVariant::Nbar => GroupElement::lower(c.xi),
        };
        unipotent
            .compose(&GroupElement::diagonal(c.t))
            .compose(&GroupElement::rotation(c.theta))
    }

    /// Polar decomposition g = u_psi a_t u_theta with t >= 0, psi in [0, 2pi)
    /// for t > 0; at t = 0 the rotation is carried entirely by theta.
    pub fn cartan_decompose(&self) -> CartanCoords {
        let (a, b, c, d) = (self.a, self.b, self.c, self.d);
        // g^T g = u_{-theta} a_{2t} u_theta fixes t (trace) and theta
        // (eigenvector); g g^T fixes psi the same way. Extracting psi from an
        // eigenvector instead of from g u_{-theta} a_{-t} keeps the angle
        // error O(eps) uniformly in t (the matrix route loses e^t).
        let p = a * a + c * c;
        let q = a * b + c * d;
        let r = b * b + d * d;
        let half_tr = 0.5 * (p + r);
        let x = half_tr.max(1.0);
        let t = (x + (x * x - 1.0).sqrt()).ln();
        if t < 1e-12 {
            // pure rotation: theta from the first row of u_theta
            let theta = wrap_angle(2.0 * f64::atan2(b, a));
            return CartanCoords {
                psi: 0.0,
                t: 0.0,
                theta,
            };
        }
        let mu = x + (x * x - 1.0).sqrt(); // e^t
        // Eigenvector of g^T g for e^t is +-(cos th/2, sin th/2); pick the
        // component pairing away from cancellation.
        let v = if (mu - p).abs() > (mu - r).abs() {
            (q, mu - p)
        } else {
            (mu - r, q)
        };
        let mut theta = 2.0 * f64::atan2(v.1, v.0);
        // Eigenvector of g g^T for e^t is +-(cos psi/2, -sin psi/2).
        let pp = a * a + b * b;
        let qq = a * c + b * d;
        let rr = c * c + d * d;
        let w = if (mu - pp).abs() > (mu - rr).abs() {
            (qq, mu - pp)
        } else {
            (mu - rr, qq)
        };
        let mut psi = 2.0 * f64::atan2(-w.1, w.0);
        // Each eigenvector is defined up to sign, so the reconstruction is
        // +-g; a flipped sign is absorbed by theta -> theta + 2pi.
        let recon = GroupElement::rotation(psi)
            .compose(&GroupElement::diagonal(t))
            .compose(&GroupElement::rotation(theta));
        let dist_plus = (recon.a - a).abs()
            + (recon.b - b).abs()
            + (recon.c - c).abs()
            + (recon.d - d).abs();
        let dist_minus = (recon.a + a).abs()
            + (recon.b + b).abs()
            + (recon.c + c).abs()
            + (recon.d + d).abs();
        if dist_minus < dist_plus {
            theta += 2.0 * PI;
        }
        psi = wrap_angle(psi);
        theta = wrap_angle(theta);
        // Canonical representative: psi in [0, 2pi); shift both angles by 2pi.
        if psi >= 2.0 * PI {
            psi -= 2.0 * PI;
            theta = wrap_angle(theta + 2.0 * PI);
        }
        CartanCoords { psi, t, theta }
    }

    /// Horocyclic decomposition, exact closed form.
    pub fn iwasawa_decompose(&self, variant: IwasawaVariant) -> IwasawaCoords {
        let (a, b, c, d) = (self.a, self.b, self.c, self.d);
        match variant {
            IwasawaVariant::N => {
                // bottom row of n_xi a_t u_phi is e^{-t/2} (-sin, cos)(phi/2)
                let r2 = c * c + d * d;
                let t = -r2.ln();
                let r = r2.sqrt();
                let (cp, sp) = (d / r, -c / r);
                let theta = wrap_angle(2.0 * f64::atan2(sp, cp));
                // xi = 2 e^{t/2} (b cos - a sin) with e^{t/2} = 1/r
                IwasawaCoords {
                    variant,
                    xi: 2.0 * (b * cp - a * sp) / r,
                    t,
                    theta,
                }
            }
            IwasawaVariant::Nbar => {
                // top row of nbar_xi a_t u_phi is e^{t/2} (cos, sin)(phi/2)
                let r2 = a * a + b * b;
                let t = r2.ln();
                let r = r2.sqrt();
                let (cp, sp) = (a / r, b / r);
                let theta = wrap_angle(2.0 * f64::atan2(sp, cp));
                IwasawaCoords {
                    variant,
                    xi: 2.0 * (c * cp + d * sp) / r,
                    t,
                    theta,
                }
            }
        }
    }
}

/// Deterministic stream of pseudo-random unimodular matrices for tests.
pub fn random_elements(count: usize, seed: u64) -> Vec<GroupElement> {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let m: [f64; 4] = [
            rng.gen_range(-2.0..2.0),
            rng.gen_range(-2.0..2.0),
            rng.gen_range(-2.0..2.0),
            rng.gen_range(-2.0..2.0),
        ];
        let det = m[0] * m[3] - m[1] * m[2];
        if det > 0.1 {
            let s = det.sqrt();
            out.push(GroupElement::new_unchecked(
                m[0] / s,
                m[1] / s,
                m[2] / s,
                m[3] / s,
            ));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(x: &GroupElement, y: &GroupElement, tol: f64) -> bool {
        (x.a - y.a).abs() < tol
            && (x.b - y.b).abs() < tol
            && (x.c - y.c).abs() < tol
            && (x.d - y.d).abs() < tol
    }

    #[test]
    fn double_cover_landmarks() {
        assert!(close(
            &GroupElement::rotation(TAU4),
            &GroupElement::identity(),
            1e-15
        ));
        let minus_i = GroupElement::new_unchecked(-1.0, 0.0, 0.0, -1.0);
        assert!(close(&GroupElement::rotation(2.0 * PI), &minus_i, 1e-15));
    }

    #[test]
    fn constructor_enforces_unimodularity() {
        assert!(GroupElement::new(1.0, 0.0, 0.0, 1.0).is_ok());
        assert!(matches!(
            GroupElement::new(2.0, 0.0, 0.0, 1.0),
            Err(Error::NotUnimodular { .. })
        ));
    }

    #[test]
    fn inverse_and_compose() {
        for g in random_elements(50, 7) {
            let gi = g.compose(&g.inverse());
            assert!(close(&gi, &GroupElement::identity(), 1e-12));
        }
    }

    #[test]
    fn cartan_round_trip_canonical() {
        for (i, g) in random_elements(1000, 42).iter().enumerate() {
            let cc = g.cartan_decompose();
            assert!(cc.t >= 0.0, "case {i}");
            assert!((0.0..2.0 * PI).contains(&cc.psi) || cc.t == 0.0, "case {i}");
            assert!((0.0..TAU4).contains(&cc.theta), "case {i}");
            let back = GroupElement::from_cartan(&cc);
            assert!(close(g, &back, 1e-10), "case {i}: {cc:?}");
        }
    }

    #[test]
    fn iwasawa_round_trip_both_variants() {
        for variant in [IwasawaVariant::N, IwasawaVariant::Nbar] {
            for (i, g) in random_elements(1000, 43).iter().enumerate() {
                let ic = g.iwasawa_decompose(variant);
                assert!((0.0..TAU4).contains(&ic.theta), "case {i}");
                let back = GroupElement::from_iwasawa(&ic);
                assert!(close(g, &back, 1e-10), "case {i} {variant:?}: {ic:?}");
            }
        }
    }

    #[test]
    fn axis_elements_decompose_to_themselves() {
        let cc = GroupElement::diagonal(1.3).cartan_decompose();
        assert!((cc.t - 1.3).abs() < 1e-14 && cc.psi == 0.0 && cc.theta == 0.0);
        let cc0 = GroupElement::rotation(5.0).cartan_decompose();
        assert!(cc0.t == 0.0 && (cc0.theta - 5.0).abs() < 1e-12);
        // a_{-t} = u_pi a_t u_{-pi} lands in the canonical chart
        let cc2 = GroupElement::diagonal(-0.9).cartan_decompose();
        assert!((cc2.t - 0.9).abs() < 1e-12);
        let back = GroupElement::from_cartan(&cc2);
        assert!(close(&GroupElement::diagonal(-0.9), &back, 1e-12));
    }

    #[test]
    fn iwasawa_of_triangular_products_recovers_inputs() {
        let g = GroupElement::upper(0.8)
            .compose(&GroupElement::diagonal(-0.4))
            .compose(&GroupElement::rotation(3.1));
        let ic = g.iwasawa_decompose(IwasawaVariant::N);
        assert!((ic.xi - 0.8).abs() < 1e-12);
        assert!((ic.t - -0.4).abs() < 1e-12);
        assert!((ic.theta - 3.1).abs() < 1e-12);
    }
}
