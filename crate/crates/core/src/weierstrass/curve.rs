use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::complex::{HolomorphicForm, RationalHolomorphic};
use crate::error::{Error, Result};
use crate::lorentz::Ambient;

/// Relative isotropy residual accepted when constructing a curve.
pub const ISOTROPY_TOL: f64 = 1e-10;

/// Number of interior points used to certify isotropy.
pub const ISOTROPY_SAMPLES: usize = 32;

/// A holomorphic null curve: three 1-forms with `<Psi, Psi> = 0` in the
/// complexified metric of `ambient`.
///
/// The immersion generated by the curve is `X = X(z0) + Re int Psi`, i.e. the
/// stored densities are `2 X_z` in the conformal coordinate.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "CurveRepr")]
pub struct IsotropicCurve {
    psi: [HolomorphicForm; 3],
    ambient: Ambient,
}

#[derive(Deserialize)]
struct CurveRepr {
    psi: [HolomorphicForm; 3],
    ambient: Ambient,
}

impl TryFrom<CurveRepr> for IsotropicCurve {
    type Error = Error;

    fn try_from(r: CurveRepr) -> Result<Self> {
        IsotropicCurve::new(r.psi, r.ambient)
    }
}

impl IsotropicCurve {
    pub fn new(psi: [HolomorphicForm; 3], ambient: Ambient) -> Result<Self> {
        let curve = IsotropicCurve { psi, ambient };
        let residual = curve.isotropy_residual()?;
        if !(residual < ISOTROPY_TOL) {
            return Err(Error::NotIsotropic(residual));
        }
        Ok(curve)
    }

    /// Skips the isotropy check. Used where isotropy holds by an exact
    /// algebraic identity (scalar multiples, component twists).
    pub(crate) fn from_parts(psi: [HolomorphicForm; 3], ambient: Ambient) -> Self {
        IsotropicCurve { psi, ambient }
    }

    pub fn psi(&self) -> &[HolomorphicForm; 3] {
        &self.psi
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    /// Radius of the disk on which all three components are certified.
    pub fn radius(&self) -> f64 {
        self.psi.iter().map(|p| p.radius()).fold(f64::INFINITY, f64::min)
    }

    pub fn eval(&self, z: Complex64) -> Result<[Complex64; 3]> {
        Ok([self.psi[0].eval(z)?, self.psi[1].eval(z)?, self.psi[2].eval(z)?])
    }

    /// Deterministic interior sample points (a sunflower spiral).
    pub fn sample_points(radius: f64, count: usize) -> Vec<Complex64> {
        let golden = PI * (3.0 - 5f64.sqrt());
        (0..count)
            .map(|k| {
                let r = radius * ((k as f64 + 0.5) / count as f64).sqrt();
                Complex64::from_polar(r, golden * k as f64)
            })
            .collect()
    }

    /// Max over sample points of `|<Psi,Psi>| / max_i |Psi_i|^2`.
    pub fn isotropy_residual(&self) -> Result<f64> {
        let mut worst = 0.0_f64;
        for z in Self::sample_points(self.radius(), ISOTROPY_SAMPLES) {
            let v = self.eval(z)?;
            let scale = v.iter().map(|c| c.norm_sqr()).fold(0.0, f64::max);
            if scale == 0.0 {
                continue;
            }
            let q = self.ambient.complex_metric(v, v);
            worst = worst.max(q.norm() / scale);
        }
        Ok(worst)
    }

    /// Multiplies every component by the same constant.
    pub fn scale(&self, s: Complex64) -> IsotropicCurve {
        Self::from_parts(
            [self.psi[0].scale(s), self.psi[1].scale(s), self.psi[2].scale(s)],
            self.ambient,
        )
    }

    /// Multiplies the third component only and retags the ambient.
    pub(crate) fn twist_third(&self, s: Complex64, ambient: Ambient) -> IsotropicCurve {
        Self::from_parts(
            [self.psi[0].clone(), self.psi[1].clone(), self.psi[2].scale(s)],
            ambient,
        )
    }

    /// Largest coefficient discrepancy between corresponding components.
    pub fn coeff_discrepancy(&self, other: &IsotropicCurve) -> f64 {
        self.psi
            .iter()
            .zip(&other.psi)
            .map(|(a, b)| a.density.coeff_discrepancy(&b.density))
            .fold(0.0, f64::max)
    }
}

/// Isotropic curve of the conjugate surface: `Psi* = -i Psi`.
pub fn conjugate_curve(c: &IsotropicCurve) -> IsotropicCurve {
    c.scale(Complex64::new(0.0, -1.0))
}

fn half(c: Complex64) -> Complex64 {
    c * 0.5
}

/// Lorentzian curve from `(g, dh)`:
/// `Psi = (1/2 (1/g + g), i/2 (1/g - g), -1) dh`.
pub fn maximal_triple(g: &RationalHolomorphic, dh: &HolomorphicForm) -> Result<IsotropicCurve> {
    let inv = g.recip()?;
    let dh = &dh.density;
    let a = inv.add(g).scale(half(Complex64::new(1.0, 0.0)));
    let b = inv.sub(g).scale(half(Complex64::new(0.0, 1.0)));
    IsotropicCurve::new(
        [
            HolomorphicForm::new(a.mul(dh)),
            HolomorphicForm::new(b.mul(dh)),
            HolomorphicForm::new(dh.scale(Complex64::new(-1.0, 0.0))),
        ],
        Ambient::Lorentzian,
    )
}

/// Euclidean curve from `(g, dh)`:
/// `Phi = (1/2 (1/g - g), i/2 (1/g + g), 1) dh`.
pub fn minimal_triple(g: &RationalHolomorphic, dh: &HolomorphicForm) -> Result<IsotropicCurve> {
    let inv = g.recip()?;
    let dh = &dh.density;
    let a = inv.sub(g).scale(half(Complex64::new(1.0, 0.0)));
    let b = inv.add(g).scale(half(Complex64::new(0.0, 1.0)));
    IsotropicCurve::new(
        [
            HolomorphicForm::new(a.mul(dh)),
            HolomorphicForm::new(b.mul(dh)),
            HolomorphicForm::new(dh.clone()),
        ],
        Ambient::Euclidean,
    )
}

/// Lorentzian curve from the `(g, eta)` form of the data:
/// `Psi = (1/2 (1 + g^2), i/2 (1 - g^2), -g) eta`.
pub fn maximal_triple_from_eta(g: &RationalHolomorphic, eta: &HolomorphicForm) -> Result<IsotropicCurve> {
    let one = RationalHolomorphic::constant(Complex64::new(1.0, 0.0), g.radius())?;
    let g2 = g.mul(g);
    let eta = &eta.density;
    IsotropicCurve::new(
        [
            HolomorphicForm::new(one.add(&g2).scale(half(Complex64::new(1.0, 0.0))).mul(eta)),
            HolomorphicForm::new(one.sub(&g2).scale(half(Complex64::new(0.0, 1.0))).mul(eta)),
            HolomorphicForm::new(g.mul(eta).scale(Complex64::new(-1.0, 0.0))),
        ],
        Ambient::Lorentzian,
    )
}
