//! Adaptive Gauss–Kronrod (7/15) quadrature for complex-valued integrands.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Bisection depth after which adaptive integration gives up.
pub const MAX_DEPTH: usize = 40;

#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];

#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

// Gauss weights for the odd-indexed Kronrod nodes, then the centre.
#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

fn zero<const N: usize>() -> [Complex64; N] {
    [Complex64::new(0.0, 0.0); N]
}

/// One G7/K15 panel on `[a, b]`: Kronrod estimate, error estimate, and the
/// integral of the absolute values (used for the round-off floor).
fn panel<const N: usize, F>(f: &F, a: f64, b: f64) -> Result<([Complex64; N], f64, f64)>
where
    F: Fn(f64) -> Result<[Complex64; N]>,
{
    let centre = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(centre)?;
    let mut kron = zero::<N>();
    let mut gauss = zero::<N>();
    let mut abs = 0.0;
    for k in 0..N {
        kron[k] = fc[k] * WGK[7];
        gauss[k] = fc[k] * WG[3];
        abs += fc[k].norm() * WGK[7];
    }
    for j in 0..7 {
        let dx = half * XGK[j];
        let f1 = f(centre - dx)?;
        let f2 = f(centre + dx)?;
        for k in 0..N {
            let s = f1[k] + f2[k];
            kron[k] += s * WGK[j];
            if j % 2 == 1 {
                gauss[k] += s * WG[j / 2];
            }
            abs += (f1[k].norm() + f2[k].norm()) * WGK[j];
        }
    }
    let mut err = 0.0_f64;
    for k in 0..N {
        kron[k] *= half;
        gauss[k] *= half;
        err = err.max((kron[k] - gauss[k]).norm());
    }
    Ok((kron, err, abs * half.abs()))
}

fn adapt<const N: usize, F>(f: &F, a: f64, b: f64, tol: f64, depth: usize, global_tol: f64) -> Result<[Complex64; N]>
where
    F: Fn(f64) -> Result<[Complex64; N]>,
{
    let (value, err, abs) = panel(f, a, b)?;
    let floor = 50.0 * f64::EPSILON * abs;
    if err <= tol.max(floor) {
        return Ok(value);
    }
    if depth >= MAX_DEPTH {
        return Err(Error::Tolerance {
            tol: global_tol,
            depth: MAX_DEPTH,
        });
    }
    let mid = 0.5 * (a + b);
    let left = adapt(f, a, mid, 0.5 * tol, depth + 1, global_tol)?;
    let right = adapt(f, mid, b, 0.5 * tol, depth + 1, global_tol)?;
    let mut out = left;
    for k in 0..N {
        out[k] += right[k];
    }
    Ok(out)
}

/// Integrates a vector of complex functions of a real variable over `[a, b]`
/// to absolute accuracy `tol` (max norm over components).
pub fn integrate_real<const N: usize, F>(f: F, a: f64, b: f64, tol: f64) -> Result<[Complex64; N]>
where
    F: Fn(f64) -> Result<[Complex64; N]>,
{
    if !(tol > 0.0) {
        return Err(Error::InvalidInput(format!("tolerance must be positive, got {tol}")));
    }
    adapt(&f, a, b, tol, 0, tol)
}

/// Integrates `density(z) dz` along the straight segment from `a` to `b`.
pub fn integrate_segment<const N: usize, F>(density: F, a: Complex64, b: Complex64, tol: f64) -> Result<[Complex64; N]>
where
    F: Fn(Complex64) -> Result<[Complex64; N]>,
{
    let delta = b - a;
    if delta.norm() == 0.0 {
        return Ok(zero());
    }
    integrate_real(
        |t| {
            let mut v = density(a + delta * t)?;
            for x in v.iter_mut() {
                *x *= delta;
            }
            Ok(v)
        },
        0.0,
        1.0,
        tol,
    )
}

/// Winding number of the closed curve `theta -> p(R e^{i theta})` around 0,
/// computed as `(1 / 2 pi i) * integral of p'/p dz` over the circle.
pub fn winding_number<P, D>(p: P, dp: D, radius: f64) -> Result<f64>
where
    P: Fn(Complex64) -> Complex64,
    D: Fn(Complex64) -> Complex64,
{
    let [total] = integrate_real(
        |theta| {
            let z = Complex64::from_polar(radius, theta);
            let value = p(z);
            if value.norm() < 1e-14 {
                return Err(Error::Pole {
                    point: format!("{z}"),
                    modulus: value.norm(),
                });
            }
            Ok([dp(z) / value * Complex64::new(0.0, 1.0) * z])
        },
        0.0,
        2.0 * PI,
        1e-6,
    )?;
    Ok((total / Complex64::new(0.0, 2.0 * PI)).re)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_for_low_degree_polynomials() {
        let [v] = integrate_real(|t| Ok([Complex64::new(t.powi(6), -t)]), 0.0, 2.0, 1e-12).unwrap();
        assert!((v.re - 128.0 / 7.0).abs() < 1e-12);
        assert!((v.im + 2.0).abs() < 1e-14);
    }

    #[test]
    fn segment_integral_of_one_is_displacement() {
        let w = Complex64::new(0.3, -0.7);
        let [v] = integrate_segment(|_| Ok([Complex64::new(1.0, 0.0)]), Complex64::new(0.0, 0.0), w, 1e-12).unwrap();
        assert!((v - w).norm() < 1e-15);
    }

    #[test]
    fn peaked_integrand_needs_subdivision() {
        // Peak of width 1e-3; exact integral is 2 atan(1 / eps).
        let eps = 1e-3;
        let [v] = integrate_real(
            |t| Ok([Complex64::new(eps / (t * t + eps * eps), 0.0)]),
            -1.0,
            1.0,
            1e-10,
        )
        .unwrap();
        assert!((v.re - 2.0 * (1.0 / eps).atan()).abs() < 1e-9);
    }

    #[test]
    fn non_integrable_hits_depth_limit() {
        let r = integrate_real(|t: f64| Ok([Complex64::new(t.powf(-1.5), 0.0)]), 0.0, 1.0, 1e-10);
        assert!(matches!(r, Err(Error::Tolerance { .. })));
    }

    #[test]
    fn winding_counts_zeros() {
        // p(z) = (z - 0.5)(z + 2): one zero inside the unit circle.
        let p = |z: Complex64| (z - 0.5) * (z + 2.0);
        let dp = |z: Complex64| 2.0 * z + 1.5;
        assert!((winding_number(p, dp, 1.0).unwrap() - 1.0).abs() < 1e-6);
        assert!(winding_number(p, dp, 0.25).unwrap().abs() < 1e-6);
        assert!((winding_number(p, dp, 3.0).unwrap() - 2.0).abs() < 1e-6);
    }
}
