use num_complex::Complex64;
use serde::Serialize;

use crate::complex::{integrate_segment, HolomorphicForm};
use crate::error::{Error, Result};
use crate::lorentz::{stereo_inv, Point3, Tangent3};

use super::curve::IsotropicCurve;
use super::data::{build_isotropic_maximal, DatumKind, WeierstrassData};

const RADIUS_SLACK: f64 = 1e-12;

/// A conformal immersion `X(w) = base_value + Re int_{base_point}^w Psi`.
#[derive(Debug, Clone, PartialEq)]
pub struct Immersion {
    curve: IsotropicCurve,
    base_point: Complex64,
    base_value: Point3,
    domain_radius: f64,
}

impl Immersion {
    pub fn new(curve: IsotropicCurve, base_point: Complex64, base_value: Point3) -> Result<Self> {
        let domain_radius = curve.radius();
        if base_point.norm() > domain_radius * (1.0 + RADIUS_SLACK) {
            return Err(Error::Domain {
                point: format!("{base_point}"),
                radius: domain_radius,
            });
        }
        let base_value = base_value.with_ambient(curve.ambient());
        Ok(Immersion {
            curve,
            base_point,
            base_value,
            domain_radius,
        })
    }

    /// The maximal immersion generated by Weierstrass data.
    pub fn from_data(data: &WeierstrassData) -> Result<Self> {
        Self::new(build_isotropic_maximal(data)?, data.base_point(), data.base_value())
    }

    /// Same base point and value, different curve.
    pub fn with_curve(&self, curve: IsotropicCurve) -> Result<Self> {
        Self::new(curve, self.base_point, self.base_value)
    }

    pub fn curve(&self) -> &IsotropicCurve {
        &self.curve
    }

    pub fn base_point(&self) -> Complex64 {
        self.base_point
    }

    pub fn base_value(&self) -> Point3 {
        self.base_value
    }

    pub fn domain_radius(&self) -> f64 {
        self.domain_radius
    }

    fn check_domain(&self, w: Complex64) -> Result<()> {
        if !(w.re.is_finite() && w.im.is_finite()) || w.norm() > self.domain_radius * (1.0 + RADIUS_SLACK) {
            return Err(Error::Domain {
                point: format!("{w}"),
                radius: self.domain_radius,
            });
        }
        Ok(())
    }

    /// `int_a^b Psi` along the segment, all three components at once.
    pub fn integral_between(&self, a: Complex64, b: Complex64, tol: f64) -> Result<[Complex64; 3]> {
        self.check_domain(a)?;
        self.check_domain(b)?;
        integrate_segment(|z| self.curve.eval(z), a, b, tol)
    }

    /// `int_{base}^w Psi`.
    pub fn integral(&self, w: Complex64, tol: f64) -> Result<[Complex64; 3]> {
        self.integral_between(self.base_point, w, tol)
    }

    pub fn ambient(&self) -> crate::lorentz::Ambient {
        self.curve.ambient()
    }

    fn real_part(&self, v: [Complex64; 3]) -> Tangent3 {
        Tangent3::new([v[0].re, v[1].re, v[2].re], self.ambient())
    }

    fn imag_part(&self, v: [Complex64; 3]) -> Tangent3 {
        Tangent3::new([v[0].im, v[1].im, v[2].im], self.ambient())
    }

    /// `X(b)` from a known value `X(a)`; path independence makes this exact.
    pub fn immerse_from(&self, a: Complex64, x_a: Point3, b: Complex64, tol: f64) -> Result<Point3> {
        Ok(x_a + self.real_part(self.integral_between(a, b, tol)?))
    }
}

pub fn immerse(im: &Immersion, w: Complex64, tol: f64) -> Result<Point3> {
    Ok(im.base_value + im.real_part(im.integral(w, tol)?))
}

/// Conjugate surface `X*(w) = Im int_{base}^w Psi`, pinned to 0 at the base point.
pub fn conjugate_immerse(im: &Immersion, w: Complex64, tol: f64) -> Result<Point3> {
    Ok(im.imag_part(im.integral(w, tol)?))
}

/// Exact partial derivatives `(X_u, X_v) = (Re psi, -Im psi)` at `w`.
pub fn differential(im: &Immersion, w: Complex64) -> Result<(Tangent3, Tangent3)> {
    im.check_domain(w)?;
    let psi = im.curve.eval(w)?;
    Ok((im.real_part(psi), -im.imag_part(psi)))
}

/// Unit normal `N = mu^{-1}(g(w))` on the upper sheet of the hyperboloid.
pub fn gauss_map(data: &WeierstrassData, w: Complex64) -> Result<Point3> {
    if data.kind() != DatumKind::MaximalGraph {
        return Err(Error::InvalidInput("Gauss map requires a maximal-graph datum".into()));
    }
    stereo_inv(data.g().eval(w)?)
}

/// `(sigma(w), tau(w)) = (-int g/2 dh, int 1/(2g) dh)` from the base point.
pub fn sigma_tau(data: &WeierstrassData, w: Complex64, tol: f64) -> Result<(Complex64, Complex64)> {
    let g = data.g();
    let dh = &data.dh().density;
    let sigma_form = HolomorphicForm::new(g.mul(dh).scale(Complex64::new(-0.5, 0.0)));
    let tau_form = HolomorphicForm::new(g.recip()?.mul(dh).scale(Complex64::new(0.5, 0.0)));
    if w.norm() > data.domain_radius() * (1.0 + RADIUS_SLACK) {
        return Err(Error::Domain {
            point: format!("{w}"),
            radius: data.domain_radius(),
        });
    }
    let [s, t] = integrate_segment(
        |z| Ok([sigma_form.eval(z)?, tau_form.eval(z)?]),
        data.base_point(),
        w,
        tol,
    )?;
    Ok((s, t))
}

/// Both sides of the projection formulas, computed independently.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct ProjectionIdentities {
    /// `pi(X(w) - X(w0))` as `x1 + i x2`.
    pub pi_x: Complex64,
    /// `pi(X*(w))`.
    pub pi_x_star: Complex64,
    pub tau_bar_minus_sigma: Complex64,
    pub i_tau_bar_plus_sigma: Complex64,
}

impl ProjectionIdentities {
    pub fn max_discrepancy(&self) -> f64 {
        (self.pi_x - self.tau_bar_minus_sigma)
            .norm()
            .max((self.pi_x_star - self.i_tau_bar_plus_sigma).norm())
    }
}

pub fn projection_identities(data: &WeierstrassData, w: Complex64, tol: f64) -> Result<ProjectionIdentities> {
    let im = Immersion::from_data(data)?;
    let x = immerse(&im, w, tol)?;
    let xs = conjugate_immerse(&im, w, tol)?;
    let (sigma, tau) = sigma_tau(data, w, tol)?;
    Ok(ProjectionIdentities {
        pi_x: (x - data.base_value()).projected(),
        pi_x_star: xs.projected(),
        tau_bar_minus_sigma: tau.conj() - sigma,
        i_tau_bar_plus_sigma: Complex64::new(0.0, 1.0) * (tau.conj() + sigma),
    })
}
