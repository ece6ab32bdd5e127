//! Rational holomorphic functions on disks and adaptive path integration of
//! their 1-forms.

mod poly;
mod quadrature;
mod rational;

pub use num_complex::Complex64;
pub use poly::Poly;
pub use quadrature::{integrate_real, integrate_segment, winding_number, MAX_DEPTH};
pub use rational::{path_integrate, HolomorphicForm, RationalHolomorphic, POLE_THRESHOLD, WINDING_THRESHOLD};

/// Complex scalar used throughout the crate.
pub type ComplexScalar = Complex64;

/// Default absolute tolerance for path integration.
pub const DEFAULT_TOL: f64 = 1e-10;
