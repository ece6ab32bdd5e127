//! Rational holomorphic functions and adaptive path integration.
//!
//! Integrates `dz / (1 - z/3)` along a chord of the unit disk and compares the
//! result with the closed form `-3 log(1 - z/3)`, then counts zeros with the
//! argument principle.
//!
//! Run with `cargo run --example rational_quadrature`.

use maxsurf::complex::{path_integrate, Complex64, HolomorphicForm, Poly, RationalHolomorphic, DEFAULT_TOL};

fn main() -> maxsurf::Result<()> {
    let f = RationalHolomorphic::new(Poly::from_real(&[1.0]), Poly::from_real(&[1.0, -1.0 / 3.0]), 1.0)?;
    let form = HolomorphicForm::new(f.clone());
    let (a, b) = (Complex64::new(-0.6, 0.2), Complex64::new(0.5, 0.7));

    let numeric = path_integrate(&form, a, b, DEFAULT_TOL)?;
    let primitive = |z: Complex64| -3.0 * (1.0 - z / 3.0).ln();
    let exact = primitive(b) - primitive(a);
    println!("integral of dz/(1 - z/3) from {a} to {b}");
    println!("  adaptive quadrature: {numeric:.15}");
    println!("  closed form:         {exact:.15}");
    println!("  |difference|:        {:.3e}", (numeric - exact).norm());

    let g = f.mul(&RationalHolomorphic::polynomial(
        Poly::from_real(&[-0.25, 0.0, 1.0]),
        1.0,
    )?);
    println!("zeros of (z^2 - 1/4)/(1 - z/3) in |z| < 0.9: {:.6}", g.zero_count(0.9)?);
    println!("f'(0.5) = {}", f.differentiate().eval(Complex64::new(0.5, 0.0))?);
    Ok(())
}
