//! Graph-side duality between minimal graphs in Euclidean space and maximal
//! graphs in Lorentz–Minkowski space, on gridded scalar fields.
//!
//! A minimal graph `f` has a closed rotated flux `(-f_y, f_x) / sqrt(1 + |Df|^2)`
//! whose potential `f^flat` is a maximal graph with `|D f^flat| < 1`; the
//! reverse map uses `(f_y, -f_x) / sqrt(1 - |Df|^2)`. With these two
//! conventions the maps are mutually inverse up to an additive constant.
//!
//! Discretisation: gradients and fluxes live at cell centres, divergences and
//! curls at nodes, and the dual potential at cell centres again. The discrete
//! curl of the rotated flux is then literally the discrete residual of the
//! primal equation.

mod field;
mod ops;

pub use field::{GridSpec, ScalarField, VectorField2};
pub use ops::{
    cell_gradient, curl_field, dual_field, dualize, dualize_maximal_to_minimal, dualize_minimal_to_maximal, gradient,
    maximal_residual, minimal_residual, residual, GraphDual, GraphKind,
};

use std::fs::File;
use std::io::{BufReader, BufWriter};
use std::path::Path;

use crate::error::Result;

/// Writes `<stem>.csv` (masked `x,y,value` rows) and `<stem>.json` (grid header).
pub fn save_field(field: &ScalarField, stem: &Path) -> Result<()> {
    field.write_csv(BufWriter::new(File::create(stem.with_extension("csv"))?))?;
    let header = BufWriter::new(File::create(stem.with_extension("json"))?);
    serde_json::to_writer_pretty(header, field.grid())?;
    Ok(())
}

/// Reads a field written by [`save_field`].
pub fn load_field(stem: &Path) -> Result<ScalarField> {
    let grid: GridSpec = serde_json::from_reader(BufReader::new(File::open(stem.with_extension("json"))?))?;
    let grid = GridSpec::new(grid.origin, grid.spacing, grid.nx, grid.ny)?;
    ScalarField::read_csv(grid, BufReader::new(File::open(stem.with_extension("csv"))?))
}

#[cfg(test)]
mod tests;
