//! The flat/sharp duality between Euclidean minimal and Lorentzian maximal
//! surfaces on the level of isotropic curves.
//!
//! Run with `cargo run --example isotropic_duality`.

use maxsurf::duality::{check_commutation, flat, sharp};
use maxsurf::verify::{projection_report, sample_surface, triangulate_disk};
use maxsurf::weierstrass::catalog::catalog;
use maxsurf::weierstrass::Immersion;

fn main() -> maxsurf::Result<()> {
    println!(
        "{:<22} {:>10} {:>12} {:>12} {:>22}",
        "datum", "isotropy", "involution", "commutation", "dual projects 1-1"
    );
    for entry in catalog()? {
        let im = Immersion::from_data(&entry.data)?;
        let euclid = sharp(im.curve())?;
        let back = flat(&euclid)?;
        let dual_surface = sample_surface(
            &im.with_curve(euclid.clone())?,
            &triangulate_disk(im.domain_radius(), 16)?,
            1e-12,
        )?;
        println!(
            "{:<22} {:>10.1e} {:>12.1e} {:>12.1e} {:>22}",
            entry.name,
            euclid.isotropy_residual()?,
            back.coeff_discrepancy(im.curve()),
            check_commutation(im.curve()),
            projection_report(&dual_surface)?.injective
        );
    }
    Ok(())
}
