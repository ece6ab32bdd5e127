//! Weierstrass representation of maximal (and minimal) surfaces.
//!
//! Data are given in the `(g, dh)` form; the Lorentzian isotropic curve is
//! `(1/2 (1/g + g), i/2 (1/g - g), -1) dh` and the immersion is recovered by
//! integrating its real part from the base point.

pub mod catalog;
mod curve;
mod data;
mod immersion;

pub use curve::{conjugate_curve, maximal_triple_from_eta, IsotropicCurve, ISOTROPY_SAMPLES, ISOTROPY_TOL};
pub use data::{
    build_isotropic_euclidean, build_isotropic_maximal, DatumKind, WeierstrassData, GRAPH_MARGIN,
    GRAPH_SAMPLES_ANGULAR, GRAPH_SAMPLES_RADIAL,
};
pub use immersion::{
    conjugate_immerse, differential, gauss_map, immerse, projection_identities, sigma_tau, Immersion,
    ProjectionIdentities,
};

#[cfg(test)]
mod tests;
