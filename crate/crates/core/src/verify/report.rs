use robust::{orient2d, Coord};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lorentz::Ambient;

use super::mesh::SurfaceMesh;

/// Boundary turns more concave than this (cross product of consecutive
/// projected boundary edges) void the convexity hypothesis.
pub const CONVEXITY_TOL: f64 = -1e-9;

/// Projected triangles with `|area|` below this multiple of the squared
/// bounding-box size are rejected as degenerate.
pub const DEGENERATE_AREA: f64 = 1e-16;

/// Certification of the orthogonal projection `(x1, x2, x3) -> (x1, x2)`
/// of a disk-type mesh.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GraphReport {
    /// Smallest signed area among projected triangles.
    pub min_projected_triangle_area: f64,
    /// Number of projected triangles with negative orientation.
    pub flipped_triangles: usize,
    pub boundary_simple: bool,
    /// Most negative turn of the projected boundary (positive orientation).
    pub boundary_convexity_defect: f64,
    /// Every triangle keeps its orientation and the boundary is simple, so
    /// the projection is injective on the disk.
    pub injective: bool,
    pub is_convex_domain: bool,
}

fn coord(p: [f64; 2]) -> Coord<f64> {
    Coord { x: p[0], y: p[1] }
}

fn orient(a: [f64; 2], b: [f64; 2], c: [f64; 2]) -> f64 {
    orient2d(coord(a), coord(b), coord(c))
}

/// Projected area, boundary simplicity and convexity of a surface mesh.
pub fn projection_report(mesh: &SurfaceMesh) -> Result<GraphReport> {
    let pts: Vec<[f64; 2]> = mesh.positions().iter().map(|p| [p.x[0], p.x[1]]).collect();
    let (mut lo, mut hi) = ([f64::INFINITY; 2], [f64::NEG_INFINITY; 2]);
    for p in &pts {
        for k in 0..2 {
            lo[k] = lo[k].min(p[k]);
            hi[k] = hi[k].max(p[k]);
        }
    }
    let scale = (hi[0] - lo[0]).max(hi[1] - lo[1]);
    let floor = DEGENERATE_AREA * scale * scale;

    let mut min_area = f64::INFINITY;
    let mut flipped = 0;
    for (index, t) in mesh.param().triangles().iter().enumerate() {
        let area = 0.5 * orient(pts[t[0]], pts[t[1]], pts[t[2]]);
        if area.abs() < floor || area == 0.0 {
            return Err(Error::DegenerateTriangle { index, area });
        }
        if area < 0.0 {
            flipped += 1;
        }
        min_area = min_area.min(area);
    }

    let ring: Vec<[f64; 2]> = mesh.param().boundary().iter().map(|&k| pts[k]).collect();
    let boundary_simple = polygon_is_simple(&ring);
    let defect = convexity_defect(&ring);
    Ok(GraphReport {
        min_projected_triangle_area: min_area,
        flipped_triangles: flipped,
        boundary_simple,
        boundary_convexity_defect: defect,
        injective: min_area > 0.0 && boundary_simple,
        is_convex_domain: boundary_simple && defect >= CONVEXITY_TOL,
    })
}

/// Exact segment-pair test over all non-adjacent edges of a closed polygon.
pub fn polygon_is_simple(ring: &[[f64; 2]]) -> bool {
    let m = ring.len();
    if m < 3 {
        return false;
    }
    for i in 0..m {
        for j in i + 1..m {
            if ring[i] == ring[j] {
                return false;
            }
        }
    }
    for i in 0..m {
        let (a, b) = (ring[i], ring[(i + 1) % m]);
        for j in i + 1..m {
            // Skip edges sharing a vertex with edge i.
            if j == i + 1 || (i == 0 && j == m - 1) {
                continue;
            }
            let (c, d) = (ring[j], ring[(j + 1) % m]);
            if segments_meet(a, b, c, d) {
                return false;
            }
        }
    }
    true
}

fn segments_meet(a: [f64; 2], b: [f64; 2], c: [f64; 2], d: [f64; 2]) -> bool {
    let (d1, d2) = (orient(a, b, c), orient(a, b, d));
    let (d3, d4) = (orient(c, d, a), orient(c, d, b));
    if ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0)) && ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0)) {
        return true;
    }
    let on = |p: [f64; 2], q: [f64; 2], r: [f64; 2]| {
        r[0] >= p[0].min(q[0]) && r[0] <= p[0].max(q[0]) && r[1] >= p[1].min(q[1]) && r[1] <= p[1].max(q[1])
    };
    (d1 == 0.0 && on(a, b, c)) || (d2 == 0.0 && on(a, b, d)) || (d3 == 0.0 && on(c, d, a)) || (d4 == 0.0 && on(c, d, b))
}

/// Most negative cross product of consecutive edges, after orienting the
/// polygon counter-clockwise.
pub fn convexity_defect(ring: &[[f64; 2]]) -> f64 {
    let m = ring.len();
    let twice_area: f64 = (0..m)
        .map(|i| {
            let (p, q) = (ring[i], ring[(i + 1) % m]);
            p[0] * q[1] - p[1] * q[0]
        })
        .sum();
    let sign = if twice_area < 0.0 { -1.0 } else { 1.0 };
    (0..m)
        .map(|i| {
            let (p, q, r) = (ring[i], ring[(i + 1) % m], ring[(i + 2) % m]);
            let (e1, e2) = ([q[0] - p[0], q[1] - p[1]], [r[0] - q[0], r[1] - q[1]]);
            sign * (e1[0] * e2[1] - e1[1] * e2[0])
        })
        .fold(f64::INFINITY, f64::min)
}

/// Causal character of mesh edges.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpacelikeReport {
    /// `min <e, e>` over edges; positive for a spacelike mesh.
    pub min_edge_quadratic_form: f64,
    /// `min (|pi(e)|^2 - <e, e>)`, which equals `min e3^2 >= 0`.
    pub pr_margin: f64,
}

pub fn spacelike_mesh_check(mesh: &SurfaceMesh) -> Result<SpacelikeReport> {
    if mesh.ambient() != Ambient::Lorentzian {
        return Err(Error::AmbientMismatch {
            expected: Ambient::Lorentzian,
            found: mesh.ambient(),
        });
    }
    let pos = mesh.positions();
    let (mut q_min, mut margin) = (f64::INFINITY, f64::INFINITY);
    for (a, b) in mesh.param().edges() {
        let e = pos[b] - pos[a];
        let q = e.quadratic_form();
        q_min = q_min.min(q);
        margin = margin.min(e.x[0] * e.x[0] + e.x[1] * e.x[1] - q);
    }
    Ok(SpacelikeReport {
        min_edge_quadratic_form: q_min,
        pr_margin: margin,
    })
}
