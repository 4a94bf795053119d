//! Spectral multipliers m(z) on the joint spectrum, their pullbacks
//! m_n(s) = m(n^2 + s(1-s)) to the parameter strip, analytic derivatives for
//! the built-in families, Cauchy-circle derivatives for tabulated data, and
//! the weighted discrete-part sum.

use crate::error::{Error, Result};
use crate::halfint::HalfInt;
use crate::spherical::discrete_set;
use num_complex::Complex64;
use std::f64::consts::PI;
use std::fmt;

/// One of the supported multiplier families.
#[derive(Debug, Clone)]
pub enum MultiplierKind {
    /// m(z) = value.
    Constant { value: Complex64 },
    /// m(z) = e^{-tau z}, tau >= 0.
    Heat { tau: f64 },
    /// m(z) = (z0 - z)^{-1}.
    Resolvent { z0: Complex64 },
    /// m(z) = z^{i sigma} (principal branch).
    ImagPower { sigma: f64 },
    /// Interpolated samples on a uniform real grid.
    Table(MultiplierTable),
}

/// Tabulated multiplier: values on a uniform real grid, cubic interpolation,
/// optional declared strip halfwidth for the pulled-back family.
#[derive(Debug, Clone)]
pub struct MultiplierTable {
    z_grid: Vec<f64>,
    values: Vec<Complex64>,
    declared_halfwidth: f64,
}

impl MultiplierTable {
    pub fn new(z_grid: Vec<f64>, values: Vec<Complex64>, declared_halfwidth: f64) -> Result<Self> {
        if z_grid.len() != values.len() {
            return Err(Error::GridMismatch(
                "table grid and values differ in length".into(),
            ));
        }
        if z_grid.len() < 4 {
            return Err(Error::GridMismatch("table needs at least 4 samples".into()));
        }
        let h = z_grid[1] - z_grid[0];
        if h <= 0.0 || z_grid.windows(2).any(|w| ((w[1] - w[0]) - h).abs() > 1e-9 * h) {
            return Err(Error::GridMismatch("table grid must be uniform increasing".into()));
        }
        Ok(MultiplierTable {
            z_grid,
            values,
            declared_halfwidth,
        })
    }

    /// Parses lines of `z,re[,im]`; `#`-lines are comments, and an optional
    /// `# halfwidth <x>` comment declares the trusted strip halfwidth.
    pub fn parse(text: &str) -> Result<Self> {
        let mut grid = Vec::new();
        let mut values = Vec::new();
        let mut halfwidth = 0.0;
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix('#') {
                let rest = rest.trim();
                if let Some(v) = rest.strip_prefix("halfwidth") {
                    halfwidth = v
                        .trim()
                        .parse::<f64>()
                        .map_err(|e| Error::Parse(format!("bad halfwidth: {e}")))?;
                }
                continue;
            }
            let fields: Vec<&str> = line.split(',').map(str::trim).collect();
            if fields.len() < 2 || fields.len() > 3 {
                return Err(Error::Parse(format!("table row needs z,re[,im]: {line:?}")));
            }
            let z: f64 = fields[0]
                .parse()
                .map_err(|e| Error::Parse(format!("bad abscissa {:?}: {e}", fields[0])))?;
            let re: f64 = fields[1]
                .parse()
                .map_err(|e| Error::Parse(format!("bad value {:?}: {e}", fields[1])))?;
            let im: f64 = if fields.len() == 3 {
                fields[2]
                    .parse()
                    .map_err(|e| Error::Parse(format!("bad value {:?}: {e}", fields[2])))?
            } else {
                0.0
            };
            grid.push(z);
            values.push(Complex64::new(re, im));
        }
        MultiplierTable::new(grid, values, halfwidth)
    }

    fn step(&self) -> f64 {
        self.z_grid[1] - self.z_grid[0]
    }

    /// Four-point Lagrange interpolation, valid for complex arguments near
    /// the real data segment (|Im z| up to ~2 grid steps).
    fn eval(&self, z: Complex64) -> Result<Complex64> {
        let h = self.step();
        if z.im.abs() > 2.0 * h {
            return Err(Error::Domain(format!(
                "table argument {z} too far from the real data segment"
            )));
        }
        let lo = self.z_grid[0];
        let hi = *self.z_grid.last().unwrap();
        if z.re < lo || z.re > hi {
            return Err(Error::Domain(format!(
                "table argument {z} outside the sampled range [{lo}, {hi}]"
            )));
        }
        let k = (((z.re - lo) / h).floor() as usize)
            .min(self.z_grid.len() - 2)
            .saturating_sub(1)
            .min(self.z_grid.len() - 4);
        let mut acc = Complex64::new(0.0, 0.0);
        for i in k..k + 4 {
            let mut basis = Complex64::new(1.0, 0.0);
            for j in k..k + 4 {
                if j != i {
                    basis *= (z - self.z_grid[j]) / (self.z_grid[i] - self.z_grid[j]);
                }
            }
            acc += basis * self.values[i];
        }
        Ok(acc)
    }
}

/// A spectral multiplier with an overall complex scale.
#[derive(Debug, Clone)]
pub struct Multiplier {
    pub kind: MultiplierKind,
    scale: Complex64,
}

impl Multiplier {
    pub fn new(kind: MultiplierKind) -> Result<Self> {
        if let MultiplierKind::Heat { tau } = kind {
            if tau < 0.0 {
                return Err(Error::Domain(format!(
                    "heat multiplier needs tau >= 0, got {tau}"
                )));
            }
        }
        Ok(Multiplier {
            kind,
            scale: Complex64::new(1.0, 0.0),
        })
    }

    /// Same multiplier times a complex constant.
    pub fn scaled(&self, alpha: Complex64) -> Multiplier {
        Multiplier {
            kind: self.kind.clone(),
            scale: self.scale * alpha,
        }
    }

    /// Parses the multiplier mini-grammar: `heat:tau=0.5`,
    /// `resolvent:z0=-1+0i`, `imagpower:sigma=1`, `const:value=2-1i`,
    /// `table:<path>`.
    pub fn parse(spec: &str) -> Result<Multiplier> {
        let (head, rest) = spec
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("multiplier spec needs kind:args, got {spec:?}")))?;
        let kind = match head {
            "heat" => MultiplierKind::Heat {
                tau: parse_key_real(rest, "tau")?,
            },
            "resolvent" => MultiplierKind::Resolvent {
                z0: parse_key_complex(rest, "z0")?,
            },
            "imagpower" => MultiplierKind::ImagPower {
                sigma: parse_key_real(rest, "sigma")?,
            },
            "const" => MultiplierKind::Constant {
                value: parse_key_complex(rest, "value")?,
            },
            "table" => {
                let text = std::fs::read_to_string(rest)
                    .map_err(|e| Error::Io(format!("reading table {rest:?}: {e}")))?;
                MultiplierKind::Table(MultiplierTable::parse(&text)?)
            }
            other => {
                return Err(Error::Parse(format!(
                    "unknown multiplier kind {other:?} (expected heat, resolvent, imagpower, const, table)"
                )))
            }
        };
        Multiplier::new(kind)
    }

    /// m(z), including the overall scale.
    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        let base = match &self.kind {
            MultiplierKind::Constant { value } => *value,
            MultiplierKind::Heat { tau } => (-tau * z).exp(),
            MultiplierKind::Resolvent { z0 } => {
                let d = z0 - z;
                if d.norm() < 1e-12 * (1.0 + z0.norm()) {
                    return Err(Error::Pole { re: z.re, im: z.im });
                }
                d.inv()
            }
            MultiplierKind::ImagPower { sigma } => {
                if z.norm() < 1e-300 {
                    return Err(Error::Pole { re: z.re, im: z.im });
                }
                z.powc(Complex64::new(0.0, *sigma))
            }
            MultiplierKind::Table(t) => t.eval(z)?,
        };
        Ok(self.scale * base)
    }

    /// The pulled-back family m_n(s) = m(n^2 + s(1-s)).
    pub fn eval_weight(&self, n: HalfInt, s: Complex64) -> Result<Complex64> {
        let nf = n.as_f64();
        self.eval(nf * nf + s * (Complex64::new(1.0, 0.0) - s))
    }

    /// [m_n(s), m_n'(s), m_n''(s)]: analytic for the built-in kinds, by a
    /// Cauchy circle of the given radius for tabulated data.
    pub fn weight_derivatives(
        &self,
        n: HalfInt,
        s: Complex64,
        cauchy_radius: f64,
    ) -> Result<[Complex64; 3]> {
        let nf = n.as_f64();
        let one = Complex64::new(1.0, 0.0);
        let g = nf * nf + s * (one - s);
        let gp = one - 2.0 * s;
        let gpp = Complex64::new(-2.0, 0.0);
        let out = match &self.kind {
            MultiplierKind::Constant { value } => [*value, Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0)],
            MultiplierKind::Heat { tau } => {
                let m = (-tau * g).exp();
                let d1 = -tau * gp * m;
                let d2 = m * (tau * tau * gp * gp - tau * gpp);
                [m, d1, d2]
            }
            MultiplierKind::Resolvent { z0 } => {
                let d = z0 - g;
                if d.norm() < 1e-12 * (1.0 + z0.norm()) {
                    return Err(Error::Pole { re: g.re, im: g.im });
                }
                let m = d.inv();
                let d1 = m * m * gp;
                let d2 = 2.0 * m * m * m * gp * gp + m * m * gpp;
                [m, d1, d2]
            }
            MultiplierKind::ImagPower { sigma } => {
                if g.norm() < 1e-300 {
                    return Err(Error::Pole { re: g.re, im: g.im });
                }
                let is = Complex64::new(0.0, *sigma);
                let m = g.powc(is);
                let mz = is * g.powc(is - 1.0);
                let mzz = is * (is - 1.0) * g.powc(is - 2.0);
                [m, mz * gp, mzz * gp * gp + mz * gpp]
            }
            MultiplierKind::Table(t) => {
                if cauchy_radius <= 0.0 {
                    return Err(Error::DerivativeUnavailable { order: 1 });
                }
                let nodes = 32;
                let mut sums = [Complex64::new(0.0, 0.0); 3];
                for k in 0..nodes {
                    let th = 2.0 * PI * k as f64 / nodes as f64;
                    let sk = s + cauchy_radius * Complex64::from_polar(1.0, th);
                    let zk = nf * nf + sk * (one - sk);
                    let mv = t.eval(zk).map_err(|_| Error::DerivativeUnavailable { order: 1 })?;
                    for (j, slot) in sums.iter_mut().enumerate() {
                        *slot += mv * Complex64::from_polar(1.0, -(j as f64) * th);
                    }
                }
                let n_f = nodes as f64;
                [
                    sums[0] / n_f,
                    sums[1] / (n_f * cauchy_radius),
                    2.0 * sums[2] / (n_f * cauchy_radius * cauchy_radius),
                ]
            }
        };
        Ok([self.scale * out[0], self.scale * out[1], self.scale * out[2]])
    }

    /// Halfwidth of the strip around Re s = 1/2 on which m_n is holomorphic.
    pub fn analyticity_halfwidth(&self, n: HalfInt) -> f64 {
        let nf = n.as_f64();
        match &self.kind {
            MultiplierKind::Constant { .. } | MultiplierKind::Heat { .. } => f64::INFINITY,
            MultiplierKind::Resolvent { z0 } => {
                // pole pulls back to s = 1/2 +- sqrt(1/4 - z0 + n^2)
                (Complex64::new(0.25 + nf * nf, 0.0) - z0).sqrt().re.abs()
            }
            MultiplierKind::ImagPower { .. } => (nf * nf + 0.25).sqrt(),
            MultiplierKind::Table(t) => t.declared_halfwidth,
        }
    }

    /// Exponential decay rate of m along the real spectrum (0 = none).
    pub fn decay_rate(&self) -> f64 {
        match &self.kind {
            MultiplierKind::Heat { tau } => *tau,
            _ => 0.0,
        }
    }

    /// True when the multiplier is exactly the zero function.
    pub fn is_identically_zero(&self) -> bool {
        self.scale.norm() == 0.0
            || matches!(&self.kind, MultiplierKind::Constant { value } if value.norm() == 0.0)
    }
}

impl fmt::Display for Multiplier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            MultiplierKind::Constant { value } => write!(f, "const:value={value}")?,
            MultiplierKind::Heat { tau } => write!(f, "heat:tau={tau}")?,
            MultiplierKind::Resolvent { z0 } => write!(f, "resolvent:z0={z0}")?,
            MultiplierKind::ImagPower { sigma } => write!(f, "imagpower:sigma={sigma}")?,
            MultiplierKind::Table(t) => write!(f, "table:<{} samples>", t.z_grid.len())?,
        }
        if (self.scale - Complex64::new(1.0, 0.0)).norm() != 0.0 {
            write!(f, " x {}", self.scale)?;
        }
        Ok(())
    }
}

fn parse_key_real(rest: &str, key: &str) -> Result<f64> {
    let value = expect_key(rest, key)?;
    value
        .parse()
        .map_err(|e| Error::Parse(format!("bad {key} value {value:?}: {e}")))
}

fn parse_key_complex(rest: &str, key: &str) -> Result<Complex64> {
    parse_complex(expect_key(rest, key)?)
}

fn expect_key<'a>(rest: &'a str, key: &str) -> Result<&'a str> {
    let (k, v) = rest
        .split_once('=')
        .ok_or_else(|| Error::Parse(format!("expected {key}=<value>, got {rest:?}")))?;
    if k != key {
        return Err(Error::Parse(format!("expected key {key:?}, got {k:?}")));
    }
    Ok(v)
}

/// Parses "1", "-0.5", "2i", "-1+0i", "0.3-2e-3i" into a complex number.
pub fn parse_complex(text: &str) -> Result<Complex64> {
    let s = text.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty complex literal".into()));
    }
    let bad = || Error::Parse(format!("not a complex number: {text:?}"));
    if let Some(body) = s.strip_suffix(['i', 'I']) {
        // find the split between real and imaginary parts: the last +/- that
        // is not leading and not an exponent sign
        let bytes = body.as_bytes();
        let mut split = None;
        for k in (1..bytes.len()).rev() {
            if (bytes[k] == b'+' || bytes[k] == b'-')
                && !matches!(bytes[k - 1], b'e' | b'E')
            {
                split = Some(k);
                break;
            }
        }
        return match split {
            Some(k) => {
                let re: f64 = body[..k].trim().parse().map_err(|_| bad())?;
                let imtxt = body[k..].trim();
                let im: f64 = match imtxt {
                    "+" => 1.0,
                    "-" => -1.0,
                    other => other.parse().map_err(|_| bad())?,
                };
                Ok(Complex64::new(re, im))
            }
            None => {
                let im: f64 = match body.trim() {
                    "" => 1.0,
                    "-" => -1.0,
                    other => other.parse().map_err(|_| bad())?,
                };
                Ok(Complex64::new(0.0, im))
            }
        };
    }
    Ok(Complex64::new(s.parse().map_err(|_| bad())?, 0.0))
}

/// Weighted discrete-part sum sum_{s in D_n} s |m_n(s)|.
pub fn discrete_multiplier_sum(m: &Multiplier, n: HalfInt) -> Result<f64> {
    let nf = n.as_f64();
    let mut acc = 0.0;
    for &s in &discrete_set(n).members {
        let sf = s.as_f64();
        acc += sf
            * m.eval(Complex64::new(nf * nf + sf * (1.0 - sf), 0.0))?
                .norm();
    }
    Ok(acc)
}
