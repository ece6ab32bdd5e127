//! Lorentz–Minkowski linear algebra: metric, causal character, the
//! Lorentzian cross product and hyperbolic stereographic projection.
//!
//! Run with `cargo run --example lorentz_algebra`.

use maxsurf::complex::Complex64;
use maxsurf::lorentz::{causal_character, cross_lorentz, inner, stereo, stereo_inv, Tangent3};

fn main() -> maxsurf::Result<()> {
    for v in [
        Tangent3::lorentzian(1.0, 0.0, 0.0),
        Tangent3::lorentzian(0.0, 0.0, 1.0),
        Tangent3::lorentzian(1.0, 0.0, 1.0),
    ] {
        println!("{:?}: <v, v> = {:+}, {:?}", v.x, inner(&v, &v)?, causal_character(&v)?);
    }

    let (u, v) = (Tangent3::lorentzian(1.0, 0.0, 0.0), Tangent3::lorentzian(0.0, 1.0, 0.0));
    let n = cross_lorentz(&u, &v)?;
    println!(
        "e1 x e2 = {:?}, orthogonal to both: {} {}",
        n.x,
        inner(&n, &u)?,
        inner(&n, &v)?
    );

    // Points with |z| > 1 map to the upper sheet of the hyperboloid.
    for z in [
        Complex64::new(2.0, 0.0),
        Complex64::new(0.0, -3.0),
        Complex64::new(1.5, 1.5),
    ] {
        let p = stereo_inv(z)?;
        println!(
            "mu^-1({z}) = [{:.6}, {:.6}, {:.6}], <p, p> = {:.3e}, mu(p) = {}",
            p.x[0],
            p.x[1],
            p.x[2],
            inner(&p, &p)?,
            stereo(&p)?
        );
    }
    Ok(())
}
