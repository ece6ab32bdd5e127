//! Built-in maximal-graph data used by examples, the CLI and the test suites.

use num_complex::Complex64;

use crate::complex::{HolomorphicForm, Poly, RationalHolomorphic};
use crate::error::Result;

use super::data::WeierstrassData;

pub const CATALOG_RADII: [f64; 2] = [0.5, 0.9];
pub const PERTURBED_SHIFTS: [f64; 3] = [2.5, 3.0, 4.0];
pub const PLANE_CONSTANT: f64 = 2.0;

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: String,
    pub data: WeierstrassData,
}

/// Spacelike plane `g = 2`, `dh = dz`.
pub fn plane(radius: f64) -> Result<WeierstrassData> {
    WeierstrassData::maximal_graph(
        RationalHolomorphic::constant(Complex64::new(PLANE_CONSTANT, 0.0), radius)?,
        HolomorphicForm::dz(radius)?,
        radius,
    )
}

/// `g = z + c`, `dh = dz`.
pub fn perturbed_plane(c: f64, radius: f64) -> Result<WeierstrassData> {
    WeierstrassData::maximal_graph(
        RationalHolomorphic::polynomial(Poly::from_real(&[c, 1.0]), radius)?,
        HolomorphicForm::dz(radius)?,
        radius,
    )
}

/// `g = (z + 3) / (1 - z/5)`, `dh = dz`.
pub fn rational(radius: f64) -> Result<WeierstrassData> {
    WeierstrassData::maximal_graph(
        RationalHolomorphic::new(Poly::from_real(&[3.0, 1.0]), Poly::from_real(&[1.0, -0.2]), radius)?,
        HolomorphicForm::dz(radius)?,
        radius,
    )
}

/// Every catalog datum, in a fixed order.
pub fn catalog() -> Result<Vec<CatalogEntry>> {
    let mut out = Vec::new();
    for r in CATALOG_RADII {
        out.push(CatalogEntry {
            name: format!("plane-r{r}"),
            data: plane(r)?,
        });
        for c in PERTURBED_SHIFTS {
            out.push(CatalogEntry {
                name: format!("perturbed-c{c}-r{r}"),
                data: perturbed_plane(c, r)?,
            });
        }
        out.push(CatalogEntry {
            name: format!("rational-r{r}"),
            data: rational(r)?,
        });
    }
    Ok(out)
}

/// Looks up a catalog datum by name.
pub fn lookup(name: &str) -> Result<WeierstrassData> {
    catalog()?
        .into_iter()
        .find(|e| e.name == name)
        .map(|e| e.data)
        .ok_or_else(|| crate::error::Error::InvalidInput(format!("unknown catalog datum {name:?}")))
}
