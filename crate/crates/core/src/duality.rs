//! Duality between Euclidean minimal and Lorentzian maximal surfaces at the
//! level of isotropic curves.
//!
//! `flat` sends a Euclidean null curve `(Phi1, Phi2, Phi3)` to the Lorentzian
//! null curve `(Phi1, Phi2, -i Phi3)`; `sharp` is its inverse
//! `(Psi1, Psi2, i Psi3)`. Both are exact coefficient operations, so the maps
//! are mutually inverse and commute with conjugation `Psi -> -i Psi` without
//! rounding.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::lorentz::Ambient;
use crate::weierstrass::{conjugate_curve, IsotropicCurve};

fn require(c: &IsotropicCurve, expected: Ambient) -> Result<()> {
    if c.ambient() != expected {
        return Err(Error::AmbientMismatch {
            expected,
            found: c.ambient(),
        });
    }
    Ok(())
}

/// Minimal to maximal: multiplies the third component by `-i`.
pub fn flat(c: &IsotropicCurve) -> Result<IsotropicCurve> {
    require(c, Ambient::Euclidean)?;
    Ok(c.twist_third(Complex64::new(0.0, -1.0), Ambient::Lorentzian))
}

/// Maximal to minimal: multiplies the third component by `i`.
pub fn sharp(c: &IsotropicCurve) -> Result<IsotropicCurve> {
    require(c, Ambient::Lorentzian)?;
    Ok(c.twist_third(Complex64::new(0.0, 1.0), Ambient::Euclidean))
}

/// The duality map appropriate to the curve's ambient space.
pub fn dual(c: &IsotropicCurve) -> IsotropicCurve {
    match c.ambient() {
        Ambient::Euclidean => c.twist_third(Complex64::new(0.0, -1.0), Ambient::Lorentzian),
        Ambient::Lorentzian => c.twist_third(Complex64::new(0.0, 1.0), Ambient::Euclidean),
    }
}

/// Largest coefficient discrepancy between the dual of the conjugate and
/// the conjugate of the dual. Zero up to rounding for every curve.
pub fn check_commutation(c: &IsotropicCurve) -> f64 {
    let dual_then_conj = conjugate_curve(&dual(c));
    let conj_then_dual = dual(&conjugate_curve(c));
    dual_then_conj.coeff_discrepancy(&conj_then_dual)
}
