//! Intrinsic triangulated metric surfaces and geodesic machinery.

pub mod fan;
pub mod io;
pub mod mesh;
pub mod point;
pub mod shortest;
pub mod unfold;

pub use fan::PointFan;
pub use mesh::{
    validate_surface, Curvature, IntrinsicSurface, InvalidSurface, SurfaceData, SurfaceReport,
    SurfaceViolation, VertexId,
};
pub use point::SurfacePoint;
pub use shortest::{shortest_path, GeodesicPath, PathError, SearchBudget};
pub use unfold::{unfold_chain, FacePlacement, PlanarChain, UnfoldError};
