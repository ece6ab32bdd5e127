//! Mesh-level certification of the conjugate-graph property.
//!
//! A disk-type mesh whose projected triangles all keep their orientation and
//! whose projected boundary is a simple polygon projects injectively: this is
//! the discrete form of "a local diffeomorphism that is injective on the
//! boundary of a disk is a graph". The Krust pipeline applies the test to a
//! maximal graph `X` over a convex domain and to its conjugate `X*`.

mod krust;
mod lee;
mod mesh;
mod report;
mod sampling;

pub use krust::{
    krust_inequality_check, krust_pipeline, krust_pipeline_immersion, pullback_from, pullback_segment,
    rotation_identity_check, KrustInequality, KrustReport, PulledSegment, Verdict, DEFAULT_STEPS,
};
pub use lee::{lee_equivalence_check, resample_graph, LeeReport, LEE_CURL_THRESHOLD, LEE_MESH_N};
pub use mesh::{folded_mesh, sample_conjugate, sample_pair, sample_surface, triangulate_disk, ParamMesh, SurfaceMesh};
pub use report::{
    convexity_defect, polygon_is_simple, projection_report, spacelike_mesh_check, GraphReport, SpacelikeReport,
    CONVEXITY_TOL, DEGENERATE_AREA,
};
pub use sampling::{random_directions, random_disk_points};
