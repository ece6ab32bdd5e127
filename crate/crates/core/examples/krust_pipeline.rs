//! Certifies over the whole catalog that the conjugate of a maximal graph
//! over a convex domain is again a graph, and shows the negative control.
//!
//! Run with `cargo run --release --example krust_pipeline`.

use maxsurf::complex::{HolomorphicForm, Poly, RationalHolomorphic};
use maxsurf::verify::{folded_mesh, krust_pipeline, projection_report};
use maxsurf::weierstrass::catalog::catalog;
use maxsurf::weierstrass::WeierstrassData;
use maxsurf::Error;

fn main() -> maxsurf::Result<()> {
    println!(
        "{:<22} {:>14} {:>16} {:>16}  verdict",
        "datum", "convex defect", "min area X", "min area X*"
    );
    for entry in catalog()? {
        let r = krust_pipeline(&entry.data, 64, 1e-10)?;
        println!(
            "{:<22} {:>14.3e} {:>16.3e} {:>16.3e}  {}",
            entry.name,
            r.domain_report.boundary_convexity_defect,
            r.domain_report.min_projected_triangle_area,
            r.conjugate_report.min_projected_triangle_area,
            r.verdict
        );
    }
    // g = 3 + z^3 on |z| <= 1.2 is a graph over a domain with a concave arc:
    // the hypothesis fails and no claim is made.
    let r = 1.2;
    let bumpy = WeierstrassData::maximal_graph(
        RationalHolomorphic::polynomial(Poly::from_real(&[3.0, 0.0, 0.0, 1.0]), r)?,
        HolomorphicForm::dz(r)?,
        r,
    )?;
    let report = krust_pipeline(&bumpy, 64, 1e-10)?;
    println!(
        "{:<22} {:>14.3e} {:>16.3e} {:>16.3e}  {}",
        "g = 3 + z^3, r = 1.2",
        report.domain_report.boundary_convexity_defect,
        report.domain_report.min_projected_triangle_area,
        report.conjugate_report.min_projected_triangle_area,
        report.verdict
    );
    match projection_report(&folded_mesh(16)?) {
        Ok(r) => println!(
            "folded control: injective = {}, flipped = {}",
            r.injective, r.flipped_triangles
        ),
        Err(Error::DegenerateTriangle { index, .. }) => println!("folded control: degenerate triangle {index}"),
        Err(e) => return Err(e),
    }
    Ok(())
}
