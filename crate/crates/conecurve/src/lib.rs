//! Intrinsic convex polyhedral surfaces, closed directed curves on them, and
//! the cones such curves live on.
//!
//! The library represents surfaces purely intrinsically (triangle
//! combinatorics plus edge lengths), classifies simple closed curves by their
//! side angles, fits the unique candidate cone on either side of a curve,
//! performs metric surgeries (vertex merging, doubling, polygon gluing), and
//! develops curves into the plane with simplicity and visibility checks.
//!
//! Core math is generic over the scalar via [`scalar::Real`]; the aliases
//! below fix `f64`, which every numeric guarantee in the test suite targets.

pub mod config;
pub mod geom;
pub mod scalar;
pub mod surface;

pub use config::Config;
pub use scalar::Real;

/// f64 instantiations, the types the CLI and file formats use.
pub type Surface = surface::IntrinsicSurface<f64>;
pub type Point = surface::SurfacePoint<f64>;
pub type Vec2 = geom::Vec2<f64>;
