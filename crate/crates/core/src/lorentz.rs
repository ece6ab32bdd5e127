//! Euclidean and Lorentzian linear algebra in dimension three.
//!
//! The Lorentzian metric is `dx1^2 + dx2^2 - dx3^2`. Spacelike surfaces are
//! oriented so that the unit normal lies on the upper sheet of the hyperboloid
//! `<x,x> = -1`, which the stereographic chart [`stereo_inv`] covers for
//! `|z| > 1`.

use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Band around zero inside which a quadratic form counts as vanishing.
pub const ZERO_BAND: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Ambient {
    Euclidean,
    Lorentzian,
}

impl Ambient {
    /// Sign of the `dx3^2` term.
    pub fn third_sign(self) -> f64 {
        match self {
            Ambient::Euclidean => 1.0,
            Ambient::Lorentzian => -1.0,
        }
    }

    #[inline]
    pub fn metric(self, u: [f64; 3], v: [f64; 3]) -> f64 {
        u[0] * v[0] + u[1] * v[1] + self.third_sign() * u[2] * v[2]
    }

    /// Complex-bilinear extension of the metric, used for isotropy.
    #[inline]
    pub fn complex_metric(self, u: [Complex64; 3], v: [Complex64; 3]) -> Complex64 {
        u[0] * v[0] + u[1] * v[1] + u[2] * v[2] * self.third_sign()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CausalCharacter {
    Spacelike,
    Timelike,
    Lightlike,
}

/// A vector of R^3 tagged with the metric it is measured in.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tangent3 {
    pub x: [f64; 3],
    pub ambient: Ambient,
}

/// Points and vectors share one representation.
pub type Point3 = Tangent3;

impl Tangent3 {
    pub fn new(x: [f64; 3], ambient: Ambient) -> Self {
        Tangent3 { x, ambient }
    }

    pub fn lorentzian(x1: f64, x2: f64, x3: f64) -> Self {
        Self::new([x1, x2, x3], Ambient::Lorentzian)
    }

    pub fn euclidean(x1: f64, x2: f64, x3: f64) -> Self {
        Self::new([x1, x2, x3], Ambient::Euclidean)
    }

    pub fn zero(ambient: Ambient) -> Self {
        Self::new([0.0; 3], ambient)
    }

    pub fn is_finite(&self) -> bool {
        self.x.iter().all(|c| c.is_finite())
    }

    /// Euclidean length of the coordinate vector, regardless of ambient.
    pub fn coord_norm(&self) -> f64 {
        (self.x[0] * self.x[0] + self.x[1] * self.x[1] + self.x[2] * self.x[2]).sqrt()
    }

    /// Orthogonal projection onto the `x1 x2`-plane, as `x1 + i x2`.
    pub fn projected(&self) -> Complex64 {
        Complex64::new(self.x[0], self.x[1])
    }

    pub fn with_ambient(self, ambient: Ambient) -> Self {
        Self::new(self.x, ambient)
    }

    /// Self inner product in the vector's own ambient.
    pub fn quadratic_form(&self) -> f64 {
        self.ambient.metric(self.x, self.x)
    }
}

impl Add for Tangent3 {
    type Output = Tangent3;
    fn add(self, o: Tangent3) -> Tangent3 {
        Tangent3::new(
            [self.x[0] + o.x[0], self.x[1] + o.x[1], self.x[2] + o.x[2]],
            self.ambient,
        )
    }
}

impl Sub for Tangent3 {
    type Output = Tangent3;
    fn sub(self, o: Tangent3) -> Tangent3 {
        Tangent3::new(
            [self.x[0] - o.x[0], self.x[1] - o.x[1], self.x[2] - o.x[2]],
            self.ambient,
        )
    }
}

impl Mul<f64> for Tangent3 {
    type Output = Tangent3;
    fn mul(self, s: f64) -> Tangent3 {
        Tangent3::new([self.x[0] * s, self.x[1] * s, self.x[2] * s], self.ambient)
    }
}

impl Neg for Tangent3 {
    type Output = Tangent3;
    fn neg(self) -> Tangent3 {
        self * -1.0
    }
}

fn same_ambient(u: &Tangent3, v: &Tangent3) -> Result<Ambient> {
    if u.ambient != v.ambient {
        return Err(Error::AmbientMismatch {
            expected: u.ambient,
            found: v.ambient,
        });
    }
    Ok(u.ambient)
}

fn require_lorentzian(v: &Tangent3) -> Result<()> {
    if v.ambient != Ambient::Lorentzian {
        return Err(Error::AmbientMismatch {
            expected: Ambient::Lorentzian,
            found: v.ambient,
        });
    }
    Ok(())
}

pub fn inner(u: &Tangent3, v: &Tangent3) -> Result<f64> {
    let ambient = same_ambient(u, v)?;
    Ok(ambient.metric(u.x, v.x))
}

pub fn causal_character(v: &Tangent3) -> Result<CausalCharacter> {
    require_lorentzian(v)?;
    let q = v.quadratic_form();
    Ok(if q.abs() < ZERO_BAND {
        CausalCharacter::Lightlike
    } else if q > 0.0 {
        CausalCharacter::Spacelike
    } else {
        CausalCharacter::Timelike
    })
}

/// `det(u, v, w)` of the coordinate vectors.
pub fn det3(u: [f64; 3], v: [f64; 3], w: [f64; 3]) -> f64 {
    u[0] * (v[1] * w[2] - v[2] * w[1]) - u[1] * (v[0] * w[2] - v[2] * w[0]) + u[2] * (v[0] * w[1] - v[1] * w[0])
}

/// Lorentzian vector product, normalised by `<u x v, z> = -det(u, v, z)`.
///
/// With this sign `e1 x e2 = e3`, and for a conformal spacelike frame
/// `(X_u, X_v)` the future-pointing unit normal is a positive multiple of
/// `X_u x X_v`, so that `N x X_u = -X_v` and `N x X_v = X_u`.
pub fn cross_lorentz(u: &Tangent3, v: &Tangent3) -> Result<Tangent3> {
    same_ambient(u, v)?;
    require_lorentzian(u)?;
    let (a, b) = (u.x, v.x);
    Ok(Tangent3::lorentzian(
        a[2] * b[1] - a[1] * b[2],
        a[0] * b[2] - a[2] * b[0],
        a[0] * b[1] - a[1] * b[0],
    ))
}

/// Inverse stereographic projection from the north pole onto the
/// two-sheeted hyperboloid `<x,x> = -1`.
pub fn stereo_inv(z: Complex64) -> Result<Point3> {
    let m = z.norm_sqr();
    if (m - 1.0).abs() < ZERO_BAND {
        return Err(Error::Equator(format!("{z}")));
    }
    let d = m - 1.0;
    Ok(Tangent3::lorentzian(-2.0 * z.re / d, -2.0 * z.im / d, (m + 1.0) / d))
}

/// Stereographic projection from the north pole `(0,0,1)`.
pub fn stereo(p: &Point3) -> Result<Complex64> {
    require_lorentzian(p)?;
    let defect = p.quadratic_form() + 1.0;
    if defect.abs() > 1e-8 {
        return Err(Error::OffHyperboloid(defect));
    }
    let d = 1.0 - p.x[2];
    if d.abs() < ZERO_BAND {
        return Err(Error::NorthPole);
    }
    Ok(Complex64::new(p.x[0] / d, p.x[1] / d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn close(a: &Tangent3, b: [f64; 3], tol: f64) -> bool {
        a.x.iter().zip(b).all(|(p, q)| (p - q).abs() < tol)
    }

    #[test]
    fn inner_examples() {
        let e3 = Tangent3::lorentzian(0.0, 0.0, 1.0);
        assert_eq!(inner(&e3, &e3).unwrap(), -1.0);
        let xu = Tangent3::lorentzian(1.25, 0.0, -1.0);
        assert_eq!(inner(&xu, &xu).unwrap(), 9.0 / 16.0);
        let e3e = Tangent3::euclidean(0.0, 0.0, 1.0);
        assert_eq!(inner(&e3e, &e3e).unwrap(), 1.0);
        assert!(matches!(inner(&e3, &e3e), Err(Error::AmbientMismatch { .. })));
    }

    #[test]
    fn causal_examples() {
        use CausalCharacter::*;
        assert_eq!(
            causal_character(&Tangent3::lorentzian(1.0, 0.0, 0.0)).unwrap(),
            Spacelike
        );
        assert_eq!(
            causal_character(&Tangent3::lorentzian(1.0, 0.0, 1.0)).unwrap(),
            Lightlike
        );
        assert_eq!(
            causal_character(&Tangent3::lorentzian(0.0, 0.0, 1.0)).unwrap(),
            Timelike
        );
        assert!(causal_character(&Tangent3::euclidean(0.0, 0.0, 1.0)).is_err());
    }

    #[test]
    fn cross_examples() {
        let e1 = Tangent3::lorentzian(1.0, 0.0, 0.0);
        let e2 = Tangent3::lorentzian(0.0, 1.0, 0.0);
        let e3 = Tangent3::lorentzian(0.0, 0.0, 1.0);
        assert!(close(&cross_lorentz(&e1, &e2).unwrap(), [0.0, 0.0, 1.0], 1e-300));
        assert!(close(&cross_lorentz(&e2, &e3).unwrap(), [-1.0, 0.0, 0.0], 1e-300));
        let u = Tangent3::lorentzian(0.3, -2.0, 1.7);
        assert!(close(&cross_lorentz(&u, &u).unwrap(), [0.0; 3], 1e-300));
    }

    #[test]
    fn cross_rotates_conformal_frame() {
        // Frame of the plane datum g = 2, dh = dz.
        let xu = Tangent3::lorentzian(1.25, 0.0, -1.0);
        let xv = Tangent3::lorentzian(0.0, 0.75, 0.0);
        let n = stereo_inv(Complex64::new(2.0, 0.0)).unwrap();
        let nxu = cross_lorentz(&n, &xu).unwrap();
        let nxv = cross_lorentz(&n, &xv).unwrap();
        assert!(close(&nxu, [0.0, -0.75, 0.0], 1e-15));
        assert!(close(&nxv, xu.x, 1e-15));
        let m = cross_lorentz(&xu, &xv).unwrap();
        // N = lambda (X_u x X_v) with lambda = 16/9 > 0.
        assert!(close(&(m * (16.0 / 9.0)), n.x, 1e-15));
    }

    #[test]
    fn stereo_examples() {
        let p = stereo_inv(Complex64::new(2.0, 0.0)).unwrap();
        assert!(close(&p, [-4.0 / 3.0, 0.0, 5.0 / 3.0], 1e-15));
        assert!((p.quadratic_form() + 1.0).abs() < 1e-15);
        assert!(close(
            &stereo_inv(Complex64::new(0.0, 0.0)).unwrap(),
            [0.0, 0.0, -1.0],
            1e-300
        ));
        assert!(close(
            &stereo_inv(Complex64::new(0.0, 2.0)).unwrap(),
            [0.0, -4.0 / 3.0, 5.0 / 3.0],
            1e-15
        ));
        assert!(matches!(stereo_inv(Complex64::new(0.6, 0.8)), Err(Error::Equator(_))));

        let z = stereo(&Tangent3::lorentzian(-4.0 / 3.0, 0.0, 5.0 / 3.0)).unwrap();
        assert!((z - Complex64::new(2.0, 0.0)).norm() < 1e-14);
        assert_eq!(
            stereo(&Tangent3::lorentzian(0.0, 0.0, -1.0)).unwrap(),
            Complex64::new(0.0, 0.0)
        );
        assert!(matches!(
            stereo(&Tangent3::lorentzian(0.0, 0.0, 1.0)),
            Err(Error::OffHyperboloid(_)) | Err(Error::NorthPole)
        ));
        assert!(matches!(
            stereo(&Tangent3::lorentzian(1.0, 0.0, 0.0)),
            Err(Error::OffHyperboloid(_))
        ));
    }

    fn vec3() -> impl Strategy<Value = Tangent3> {
        prop::array::uniform3(-3.0f64..3.0).prop_map(|x| Tangent3::new(x, Ambient::Lorentzian))
    }

    proptest! {
        #[test]
        fn cross_matches_determinant(u in vec3(), v in vec3(), z in vec3()) {
            let w = cross_lorentz(&u, &v).unwrap();
            let lhs = inner(&w, &z).unwrap();
            prop_assert!((lhs + det3(u.x, v.x, z.x)).abs() < 1e-12);
        }

        #[test]
        fn cross_is_bilinear_antisymmetric(u in vec3(), v in vec3(), z in vec3(), a in -2.0f64..2.0) {
            let uv = cross_lorentz(&u, &v).unwrap();
            let vu = cross_lorentz(&v, &u).unwrap();
            prop_assert!(close(&(uv + vu), [0.0; 3], 1e-12));
            let lhs = cross_lorentz(&(u * a + z), &v).unwrap();
            let rhs = uv * a + cross_lorentz(&z, &v).unwrap();
            prop_assert!(close(&lhs, rhs.x, 1e-11));
        }

        #[test]
        fn stereo_round_trip_upper_sheet(r in 1.001f64..20.0, t in 0.0f64..std::f64::consts::TAU) {
            let z = Complex64::from_polar(r, t);
            let p = stereo_inv(z).unwrap();
            prop_assert!(p.x[2] >= 1.0);
            let back = stereo(&p).unwrap();
            prop_assert!((back - z).norm() < 1e-9 * r.max(1.0));
        }
    }
}
