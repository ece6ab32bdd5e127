//! Numerical engine for minimal surfaces in Euclidean space and maximal
//! surfaces in Lorentz–Minkowski space.
//!
//! Surfaces are generated from Weierstrass data `(g, dh)` made of rational
//! holomorphic functions on a disk. The crate computes immersions and their
//! conjugates, the isotropic-curve and graph dualities between minimal and
//! maximal surfaces, and certifies on triangulated meshes that the conjugate
//! of a maximal graph over a convex domain is again a graph.
//!
//! The modules mirror that pipeline:
//!
//! * [`complex`]: rational holomorphic functions and adaptive path integrals.
//! * [`lorentz`]: metrics, causal character, the Lorentzian cross product.
//! * [`weierstrass`]: isotropic curves, immersions, conjugates, Gauss map.
//! * [`duality`]: the `flat` / `sharp` maps on isotropic curves.
//! * [`graph_pde`]: gridded graphs, divergence-form residuals, graph duality.
//! * [`verify`]: meshes, graph certificates and the conjugate-graph pipeline.
//! * [`cli`]: the job runner behind the `maxsurf` binary, plus export formats.

// Guards such as `!(x > 0.0)` deliberately reject NaN as well.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod complex;
pub mod duality;
pub mod error;
pub mod graph_pde;
pub mod lorentz;
pub mod verify;
pub mod weierstrass;

pub use error::{Error, Result};
