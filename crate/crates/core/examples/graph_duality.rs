//! Graph-level duality: the rotated normalized gradient of a minimal graph is
//! closed, and its potential is a maximal graph (and back).
//!
//! Dualizes the helicoid `f = atan(y/x)` on an annular sector, certifies the
//! curl, checks the spacelike condition `|Df| < 1` of the dual, and shows the
//! second-order decay of the minimal-surface residual of the catenoid.
//!
//! Run with `cargo run --release --example graph_duality`.

use maxsurf::graph_pde::{dualize, minimal_residual, GraphKind, GridSpec, ScalarField};

fn sector(h: f64, f: impl Fn(f64, f64) -> f64) -> maxsurf::Result<ScalarField> {
    let grid = GridSpec::covering(0.0, 2.5, 0.0, 2.5, h)?;
    ScalarField::from_fn(grid, |x, y| {
        let (r, t) = (x.hypot(y), y.atan2(x));
        ((2.0..=2.5).contains(&r) && (0.2..=0.7).contains(&t)).then(|| f(x, y))
    })
}

fn main() -> maxsurf::Result<()> {
    println!(
        "{:>7} {:>14} {:>14} {:>16} {:>16}",
        "h", "helicoid curl", "|D dual| max", "catenoid resid", "order"
    );
    let mut previous: Option<f64> = None;
    for h in [0.02, 0.01, 0.005] {
        let helicoid = sector(h, |x, y| y.atan2(x))?;
        let dual = dualize(&helicoid, GraphKind::Minimal, 1e-2)?;
        let catenoid = sector(h, |x, y| x.hypot(y).acosh())?;
        let res = minimal_residual(&catenoid)?.max_abs();
        let order = previous.map(|p| (p / res).log2());
        println!(
            "{h:>7} {:>14.3e} {:>14.6} {:>16.3e} {:>16}",
            dual.max_curl,
            dual.max_slope,
            res,
            order.map_or("-".into(), |o| format!("{o:.3}"))
        );
        previous = Some(res);
    }
    Ok(())
}
