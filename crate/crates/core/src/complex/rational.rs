use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::poly::Poly;
use super::quadrature::{integrate_segment, winding_number};
use crate::error::{Error, Result};

/// Moduli below this are treated as a vanishing denominator.
pub const POLE_THRESHOLD: f64 = 1e-14;

/// Winding numbers within this distance of zero certify a zero-free disk.
pub const WINDING_THRESHOLD: f64 = 0.4;

/// Slack on `|z| <= radius` so that points sampled on the boundary circle
/// are not rejected by rounding.
const RADIUS_SLACK: f64 = 1e-12;

/// A holomorphic function `P(z) / Q(z)` on the closed disk `|z| <= radius`,
/// with `Q` certified zero-free there.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RationalRepr", into = "RationalRepr")]
pub struct RationalHolomorphic {
    num: Poly,
    den: Poly,
    radius: f64,
}

#[derive(Serialize, Deserialize)]
struct RationalRepr {
    num: Vec<[f64; 2]>,
    den: Vec<[f64; 2]>,
    radius: f64,
}

fn to_pairs(p: &Poly) -> Vec<[f64; 2]> {
    if p.is_zero() {
        return vec![[0.0, 0.0]];
    }
    p.coeffs().iter().map(|c| [c.re, c.im]).collect()
}

impl From<RationalHolomorphic> for RationalRepr {
    fn from(f: RationalHolomorphic) -> Self {
        RationalRepr {
            num: to_pairs(&f.num),
            den: to_pairs(&f.den),
            radius: f.radius,
        }
    }
}

impl TryFrom<RationalRepr> for RationalHolomorphic {
    type Error = Error;

    fn try_from(r: RationalRepr) -> Result<Self> {
        let lift = |v: &[[f64; 2]]| Poly::new(v.iter().map(|c| Complex64::new(c[0], c[1])).collect());
        RationalHolomorphic::new(lift(&r.num), lift(&r.den), r.radius)
    }
}

impl RationalHolomorphic {
    /// Builds `num / den`, certifying that `den` has no zeros in the closed
    /// disk of the given radius.
    pub fn new(num: Poly, den: Poly, radius: f64) -> Result<Self> {
        if !(radius.is_finite() && radius > 0.0) {
            return Err(Error::InvalidRational(format!("radius must be positive, got {radius}")));
        }
        if !num.is_finite() || !den.is_finite() {
            return Err(Error::InvalidRational("non-finite coefficient".into()));
        }
        if den.is_zero() {
            return Err(Error::InvalidRational("denominator is identically zero".into()));
        }
        certify_zero_free(&den, radius)?;
        Ok(RationalHolomorphic { num, den, radius })
    }

    // Callers guarantee `den` is a product of already certified denominators.
    fn from_certified(num: Poly, den: Poly, radius: f64) -> Self {
        RationalHolomorphic { num, den, radius }
    }

    pub fn polynomial(p: Poly, radius: f64) -> Result<Self> {
        Self::new(p, Poly::constant(Complex64::new(1.0, 0.0)), radius)
    }

    pub fn constant(c: Complex64, radius: f64) -> Result<Self> {
        Self::polynomial(Poly::constant(c), radius)
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn contains(&self, z: Complex64) -> bool {
        z.norm() <= self.radius * (1.0 + RADIUS_SLACK)
    }

    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        if !self.contains(z) {
            return Err(Error::Domain {
                point: format!("{z}"),
                radius: self.radius,
            });
        }
        let q = self.den.eval(z);
        if q.norm() < POLE_THRESHOLD {
            return Err(Error::Pole {
                point: format!("{z}"),
                modulus: q.norm(),
            });
        }
        Ok(self.num.eval(z) / q)
    }

    /// Quotient-rule derivative `(P'Q - PQ') / Q^2`.
    pub fn differentiate(&self) -> Self {
        let top = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        Self::from_certified(top, &self.den * &self.den, self.radius)
    }

    /// Restricts to a smaller disk. Enlarging requires re-certification.
    pub fn with_radius(&self, radius: f64) -> Result<Self> {
        if radius <= self.radius {
            if !(radius > 0.0) {
                return Err(Error::InvalidRational(format!("radius must be positive, got {radius}")));
            }
            Ok(Self::from_certified(self.num.clone(), self.den.clone(), radius))
        } else {
            Self::new(self.num.clone(), self.den.clone(), radius)
        }
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self::from_certified(self.num.scale(s), self.den.clone(), self.radius)
    }

    pub fn add(&self, other: &Self) -> Self {
        let radius = self.radius.min(other.radius);
        if self.den == other.den {
            return Self::from_certified(&self.num + &other.num, self.den.clone(), radius);
        }
        let num = &(&self.num * &other.den) + &(&other.num * &self.den);
        Self::from_certified(num, &self.den * &other.den, radius)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(Complex64::new(-1.0, 0.0)))
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::from_certified(
            &self.num * &other.num,
            &self.den * &other.den,
            self.radius.min(other.radius),
        )
    }

    /// `1 / f`; fails with [`Error::PoleInDomain`] if `f` has a zero in the disk.
    pub fn recip(&self) -> Result<Self> {
        if self.num.is_zero() {
            return Err(Error::InvalidRational("reciprocal of zero".into()));
        }
        Self::new(self.den.clone(), self.num.clone(), self.radius)
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.recip()?))
    }

    /// Number of zeros in the open disk `|z| < r`, by the argument principle.
    pub fn zero_count(&self, r: f64) -> Result<f64> {
        if self.num.is_zero() {
            return Err(Error::InvalidRational("zero function has no isolated zeros".into()));
        }
        let dp = self.num.derivative();
        winding_number(|z| self.num.eval(z), |z| dp.eval(z), r)
    }

    /// Largest modulus of the coefficients of `P1 Q2 - P2 Q1`; zero iff the
    /// two functions agree identically.
    pub fn coeff_discrepancy(&self, other: &Self) -> f64 {
        let cross = &(&self.num * &other.den) - &(&other.num * &self.den);
        cross.max_abs_coeff()
    }
}

fn certify_zero_free(den: &Poly, radius: f64) -> Result<()> {
    if den.degree() == Some(0) {
        return Ok(());
    }
    let dq = den.derivative();
    let winding = winding_number(|z| den.eval(z), |z| dq.eval(z), radius).map_err(|e| match e {
        Error::Pole { .. } | Error::Tolerance { .. } => Error::PoleInDomain {
            radius,
            winding: f64::NAN,
        },
        other => other,
    })?;
    if winding.abs() > WINDING_THRESHOLD {
        return Err(Error::PoleInDomain { radius, winding });
    }
    Ok(())
}

/// The holomorphic 1-form `density(z) dz`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HolomorphicForm {
    pub density: RationalHolomorphic,
}

impl HolomorphicForm {
    pub fn new(density: RationalHolomorphic) -> Self {
        HolomorphicForm { density }
    }

    /// The form `dz` on the disk of the given radius.
    pub fn dz(radius: f64) -> Result<Self> {
        Ok(Self::new(RationalHolomorphic::constant(
            Complex64::new(1.0, 0.0),
            radius,
        )?))
    }

    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        self.density.eval(z)
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self::new(self.density.scale(s))
    }

    pub fn radius(&self) -> f64 {
        self.density.radius()
    }

    /// Integral of the form along the segment `[a, b]`.
    pub fn integrate(&self, a: Complex64, b: Complex64, tol: f64) -> Result<Complex64> {
        path_integrate(self, a, b, tol)
    }
}

/// Adaptive Gauss–Kronrod integral of `form` along the straight segment
/// from `a` to `b`, which must lie in the validity disk.
pub fn path_integrate(form: &HolomorphicForm, a: Complex64, b: Complex64, tol: f64) -> Result<Complex64> {
    for p in [a, b] {
        if !form.density.contains(p) {
            return Err(Error::Domain {
                point: format!("{p}"),
                radius: form.radius(),
            });
        }
    }
    let [v] = integrate_segment(|z| Ok([form.density.eval(z)?]), a, b, tol)?;
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn z_plus_3() -> RationalHolomorphic {
        RationalHolomorphic::polynomial(Poly::from_real(&[3.0, 1.0]), 1.0).unwrap()
    }

    #[test]
    fn eval_examples() {
        assert_eq!(z_plus_3().eval(c(1.0, 0.0)).unwrap(), c(4.0, 0.0));
        let inv = z_plus_3().recip().unwrap();
        assert!((inv.eval(c(0.0, 0.0)).unwrap() - c(1.0 / 3.0, 0.0)).norm() < 1e-16);
        let k = RationalHolomorphic::constant(c(1.25, 0.0), 1.0).unwrap();
        assert_eq!(k.eval(c(0.0, 1.0)).unwrap(), c(1.25, 0.0));
    }

    #[test]
    fn eval_outside_disk_is_domain_error() {
        let r = z_plus_3().eval(c(1.5, 0.0));
        assert!(matches!(r, Err(Error::Domain { .. })));
    }

    #[test]
    fn eval_at_pole_is_pole_error() {
        // 1/z is not certifiable on any disk around 0; build it unchecked.
        let f = RationalHolomorphic::from_certified(Poly::from_real(&[1.0]), Poly::z(), 1.0);
        assert!(matches!(f.eval(c(0.0, 0.0)), Err(Error::Pole { .. })));
    }

    #[test]
    fn pole_inside_disk_rejected() {
        let r = RationalHolomorphic::new(Poly::from_real(&[1.0]), Poly::from_real(&[-0.5, 1.0]), 1.0);
        assert!(matches!(r, Err(Error::PoleInDomain { .. })));
        assert!(RationalHolomorphic::new(Poly::from_real(&[1.0]), Poly::from_real(&[-0.5, 1.0]), 0.4).is_ok());
    }

    #[test]
    fn zero_denominator_rejected() {
        let r = RationalHolomorphic::new(Poly::from_real(&[1.0]), Poly::zero(), 1.0);
        assert!(matches!(r, Err(Error::InvalidRational(_))));
    }

    #[test]
    fn derivative_examples() {
        let z2 = RationalHolomorphic::polynomial(Poly::from_real(&[0.0, 0.0, 1.0]), 1.0).unwrap();
        let d = z2.differentiate();
        let two_z = RationalHolomorphic::polynomial(Poly::from_real(&[0.0, 2.0]), 1.0).unwrap();
        assert_eq!(d.coeff_discrepancy(&two_z), 0.0);

        let inv = z_plus_3().recip().unwrap();
        let d = inv.differentiate();
        // -1/(z+3)^2
        let expected =
            RationalHolomorphic::new(Poly::from_real(&[-1.0]), Poly::from_real(&[9.0, 6.0, 1.0]), 1.0).unwrap();
        assert_eq!(d.coeff_discrepancy(&expected), 0.0);

        let k = RationalHolomorphic::constant(c(2.0, -1.0), 1.0).unwrap();
        assert!(k.differentiate().num().is_zero());
    }

    #[test]
    fn path_integral_examples() {
        let w = c(0.3, 0.4);
        let one = HolomorphicForm::dz(1.0).unwrap();
        assert!((path_integrate(&one, c(0.0, 0.0), w, 1e-10).unwrap() - w).norm() < 1e-15);

        // (z+3)/2 dz from 0 to 1: z^2/4 + 3z/2 = 7/4.
        let lin = HolomorphicForm::new(z_plus_3().scale(c(0.5, 0.0)));
        let v = path_integrate(&lin, c(0.0, 0.0), c(1.0, 0.0), 1e-10).unwrap();
        assert!((v - c(1.75, 0.0)).norm() < 1e-10);

        // 1/(2(z+3)) dz from 0 to 1: ln(4/3)/2.
        let log = HolomorphicForm::new(z_plus_3().scale(c(2.0, 0.0)).recip().unwrap());
        let v = path_integrate(&log, c(0.0, 0.0), c(1.0, 0.0), 1e-10).unwrap();
        assert!((v - c(0.5 * (4.0_f64 / 3.0).ln(), 0.0)).norm() < 1e-10);
        assert!((v.re - 0.143841).abs() < 1e-6);
    }

    #[test]
    fn json_shape() {
        let f = z_plus_3();
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(s, r#"{"num":[[3.0,0.0],[1.0,0.0]],"den":[[1.0,0.0]],"radius":1.0}"#);
        let back: RationalHolomorphic = serde_json::from_str(&s).unwrap();
        assert_eq!(back, f);
        let bad = r#"{"num":[[1.0,0.0]],"den":[[-0.5,0.0],[1.0,0.0]],"radius":1.0}"#;
        assert!(serde_json::from_str::<RationalHolomorphic>(bad).is_err());
    }
}
