//! Maximal surfaces from Weierstrass data `(g, dh)` and their conjugates.
//!
//! Evaluates `X` and `X*` of the catalog datum `g = z + 2.5`, `dh = dz`,
//! checks the projection formulas `pi X = conj(tau) - sigma` and
//! `pi X* = i (conj(tau) + sigma)`, and the Gauss map.
//!
//! Run with `cargo run --example weierstrass_immersion`.

use maxsurf::complex::Complex64;
use maxsurf::lorentz::inner;
use maxsurf::weierstrass::catalog::perturbed_plane;
use maxsurf::weierstrass::{conjugate_immerse, gauss_map, immerse, projection_identities, Immersion};

fn main() -> maxsurf::Result<()> {
    let data = perturbed_plane(2.5, 0.9)?;
    let im = Immersion::from_data(&data)?;
    println!("isotropy residual: {:.3e}", im.curve().isotropy_residual()?);
    println!("{:>18} {:>40} {:>40} {:>10}", "w", "X(w)", "X*(w)", "|pr err|");
    for w in [
        Complex64::new(0.3, 0.0),
        Complex64::new(-0.2, 0.6),
        Complex64::new(0.0, -0.85),
    ] {
        let x = immerse(&im, w, 1e-12)?;
        let xs = conjugate_immerse(&im, w, 1e-12)?;
        let ids = projection_identities(&data, w, 1e-12)?;
        println!(
            "{:>18} {:>40} {:>40} {:>10.2e}",
            format!("{w:.2}"),
            format!("[{:.6}, {:.6}, {:.6}]", x.x[0], x.x[1], x.x[2]),
            format!("[{:.6}, {:.6}, {:.6}]", xs.x[0], xs.x[1], xs.x[2]),
            ids.max_discrepancy()
        );
    }
    let n = gauss_map(&data, Complex64::new(0.3, 0.4))?;
    println!("Gauss map N(0.3+0.4i) = {:?}, <N, N> = {:.12}", n.x, inner(&n, &n)?);
    Ok(())
}
