//! The graph duality and the isotropic-curve duality agree: the dual of the
//! resampled height function of a maximal graph matches the height of its
//! sharp-dual minimal surface up to a vertical shift, with an error that
//! decays like `h^2`.
//!
//! Run with `cargo run --release --example lee_equivalence`.

use maxsurf::verify::lee_equivalence_check;
use maxsurf::weierstrass::catalog::lookup;

fn main() -> maxsurf::Result<()> {
    for name in ["plane-r0.5", "perturbed-c3-r0.5", "rational-r0.5"] {
        let data = lookup(name)?;
        let coarse = lee_equivalence_check(&data, 0.02, 1e-10)?;
        let fine = lee_equivalence_check(&data, 0.01, 1e-10)?;
        println!(
            "{name:<20} h=0.02: {:.3e}  h=0.01: {:.3e}  ratio {:.2}  (curl {:.1e}, {} cells)",
            coarse.discrepancy,
            fine.discrepancy,
            coarse.discrepancy / fine.discrepancy,
            fine.max_curl,
            fine.overlap
        );
    }
    Ok(())
}
