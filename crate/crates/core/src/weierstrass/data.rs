use std::f64::consts::TAU;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::complex::{HolomorphicForm, RationalHolomorphic, WINDING_THRESHOLD};
use crate::error::{Error, Result};
use crate::lorentz::{Point3, Tangent3};

use super::curve::{maximal_triple, minimal_triple, IsotropicCurve};

/// Polar sampling grid for the `|g| > 1` certificate.
pub const GRAPH_SAMPLES_ANGULAR: usize = 64;
pub const GRAPH_SAMPLES_RADIAL: usize = 16;
/// Margin required above `|g| = 1`.
pub const GRAPH_MARGIN: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DatumKind {
    /// Spacelike graph datum: `|g| > 1` on the closed domain disk.
    MaximalGraph,
    General,
}

/// Weierstrass data `(g, dh)` on the disk `|z| <= domain_radius`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "DataRepr", into = "DataRepr")]
pub struct WeierstrassData {
    g: RationalHolomorphic,
    dh: HolomorphicForm,
    domain_radius: f64,
    base_point: Complex64,
    base_value: Point3,
    kind: DatumKind,
}

#[derive(Serialize, Deserialize)]
struct DataRepr {
    g: RationalHolomorphic,
    dh: RationalHolomorphic,
    radius: f64,
    base: [f64; 2],
    base_value: [f64; 3],
    kind: DatumKind,
}

impl From<WeierstrassData> for DataRepr {
    fn from(d: WeierstrassData) -> Self {
        DataRepr {
            g: d.g,
            dh: d.dh.density,
            radius: d.domain_radius,
            base: [d.base_point.re, d.base_point.im],
            base_value: d.base_value.x,
            kind: d.kind,
        }
    }
}

impl TryFrom<DataRepr> for WeierstrassData {
    type Error = Error;

    fn try_from(r: DataRepr) -> Result<Self> {
        WeierstrassData::new(
            r.g,
            HolomorphicForm::new(r.dh),
            r.radius,
            Complex64::new(r.base[0], r.base[1]),
            Tangent3::lorentzian(r.base_value[0], r.base_value[1], r.base_value[2]),
            r.kind,
        )
    }
}

impl WeierstrassData {
    pub fn new(
        g: RationalHolomorphic,
        dh: HolomorphicForm,
        domain_radius: f64,
        base_point: Complex64,
        base_value: Point3,
        kind: DatumKind,
    ) -> Result<Self> {
        if !(domain_radius.is_finite() && domain_radius > 0.0) {
            return Err(Error::InvalidInput(format!(
                "domain radius must be positive, got {domain_radius}"
            )));
        }
        if !(base_point.re.is_finite() && base_point.im.is_finite()) || base_point.norm() > domain_radius {
            return Err(Error::InvalidInput(format!(
                "base point {base_point} outside the domain"
            )));
        }
        if !base_value.is_finite() {
            return Err(Error::InvalidInput("non-finite base value".into()));
        }
        // Re-certifies the denominators when the domain exceeds the stated validity.
        let g = g.with_radius(domain_radius)?;
        let dh = HolomorphicForm::new(dh.density.with_radius(domain_radius)?);

        if g.num().is_zero() {
            return Err(Error::InvalidInput("g vanishes identically".into()));
        }
        let g_zeros = g.zero_count(domain_radius)?;
        if g_zeros.abs() > WINDING_THRESHOLD {
            return Err(Error::PoleInDomain {
                radius: domain_radius,
                winding: g_zeros,
            });
        }
        if dh.density.num().is_zero() {
            return Err(Error::CommonZero("dh vanishes identically".into()));
        }
        let dh_zeros = dh.density.zero_count(domain_radius)?;
        if dh_zeros.abs() > WINDING_THRESHOLD {
            return Err(Error::CommonZero(format!("dh has {dh_zeros:.2} zeros in the disk")));
        }

        let data = WeierstrassData {
            g,
            dh,
            domain_radius,
            base_point,
            base_value: base_value.with_ambient(crate::lorentz::Ambient::Lorentzian),
            kind,
        };
        if kind == DatumKind::MaximalGraph {
            let m = data.min_abs_g()?;
            if !(m > 1.0 + GRAPH_MARGIN) {
                return Err(Error::NotGraphDatum(m));
            }
        }
        Ok(data)
    }

    /// Data from the `(g, eta)` form, converted exactly via `dh = g eta`.
    pub fn from_eta(
        g: RationalHolomorphic,
        eta: HolomorphicForm,
        domain_radius: f64,
        base_point: Complex64,
        base_value: Point3,
        kind: DatumKind,
    ) -> Result<Self> {
        let dh = HolomorphicForm::new(g.mul(&eta.density));
        Self::new(g, dh, domain_radius, base_point, base_value, kind)
    }

    /// Maximal-graph datum based at the origin with `X(0) = 0`.
    pub fn maximal_graph(g: RationalHolomorphic, dh: HolomorphicForm, domain_radius: f64) -> Result<Self> {
        Self::new(
            g,
            dh,
            domain_radius,
            Complex64::new(0.0, 0.0),
            Tangent3::lorentzian(0.0, 0.0, 0.0),
            DatumKind::MaximalGraph,
        )
    }

    pub fn g(&self) -> &RationalHolomorphic {
        &self.g
    }

    pub fn dh(&self) -> &HolomorphicForm {
        &self.dh
    }

    pub fn domain_radius(&self) -> f64 {
        self.domain_radius
    }

    pub fn base_point(&self) -> Complex64 {
        self.base_point
    }

    pub fn base_value(&self) -> Point3 {
        self.base_value
    }

    pub fn kind(&self) -> DatumKind {
        self.kind
    }

    /// Minimum of `|g|` over the 64 x 16 polar certification grid,
    /// boundary circle included.
    pub fn min_abs_g(&self) -> Result<f64> {
        let mut m = f64::INFINITY;
        for i in 0..GRAPH_SAMPLES_RADIAL {
            let r = self.domain_radius * i as f64 / (GRAPH_SAMPLES_RADIAL - 1) as f64;
            for j in 0..GRAPH_SAMPLES_ANGULAR {
                let z = Complex64::from_polar(r, TAU * j as f64 / GRAPH_SAMPLES_ANGULAR as f64);
                m = m.min(self.g.eval(z)?.norm());
            }
        }
        Ok(m)
    }

    /// Data of the conjugate surface: `(g, -i dh)`.
    pub fn conjugate(&self) -> WeierstrassData {
        WeierstrassData {
            dh: self.dh.scale(Complex64::new(0.0, -1.0)),
            base_value: Tangent3::lorentzian(0.0, 0.0, 0.0),
            ..self.clone()
        }
    }
}

/// Lorentzian isotropic curve `(1/2 (1/g + g), i/2 (1/g - g), -1) dh`.
pub fn build_isotropic_maximal(data: &WeierstrassData) -> Result<IsotropicCurve> {
    maximal_triple(&data.g, &data.dh)
}

/// Euclidean isotropic curve `(1/2 (1/g - g), i/2 (1/g + g), 1) dh`.
pub fn build_isotropic_euclidean(g: &RationalHolomorphic, dh: &HolomorphicForm) -> Result<IsotropicCurve> {
    let radius = g.radius().min(dh.radius());
    minimal_triple(
        &g.with_radius(radius)?,
        &HolomorphicForm::new(dh.density.with_radius(radius)?),
    )
}
