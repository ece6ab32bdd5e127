use std::collections::HashMap;
use std::f64::consts::TAU;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::lorentz::{Ambient, Point3, Tangent3};
use crate::weierstrass::{conjugate_immerse, Immersion};

/// A triangulated disk in the parameter plane.
#[derive(Debug, Clone, PartialEq)]
pub struct ParamMesh {
    vertices: Vec<Complex64>,
    triangles: Vec<[usize; 3]>,
    boundary: Vec<usize>,
}

impl ParamMesh {
    /// Validates orientation, disk topology (`V - E + F = 1`) and that
    /// `boundary` is exactly the cycle of edges used by a single triangle.
    pub fn new(vertices: Vec<Complex64>, triangles: Vec<[usize; 3]>, boundary: Vec<usize>) -> Result<Self> {
        if triangles.is_empty() {
            return Err(Error::InvalidMesh("mesh has no triangles".into()));
        }
        if vertices.iter().any(|v| !(v.re.is_finite() && v.im.is_finite())) {
            return Err(Error::InvalidMesh("non-finite vertex".into()));
        }
        let mut edges: HashMap<(usize, usize), usize> = HashMap::new();
        for (t, tri) in triangles.iter().enumerate() {
            if tri.iter().any(|&k| k >= vertices.len()) {
                return Err(Error::InvalidMesh(format!("triangle {t} references a missing vertex")));
            }
            let [a, b, c] = tri.map(|k| vertices[k]);
            if signed_area(a, b, c) <= 0.0 {
                return Err(Error::InvalidMesh(format!("triangle {t} is not positively oriented")));
            }
            for (p, q) in [(tri[0], tri[1]), (tri[1], tri[2]), (tri[2], tri[0])] {
                *edges.entry((p.min(q), p.max(q))).or_default() += 1;
            }
        }
        if edges.values().any(|&c| c > 2) {
            return Err(Error::InvalidMesh(
                "an edge is shared by more than two triangles".into(),
            ));
        }
        let used: std::collections::HashSet<usize> = triangles.iter().flatten().copied().collect();
        let chi = used.len() as i64 - edges.len() as i64 + triangles.len() as i64;
        if chi != 1 {
            return Err(Error::InvalidMesh(format!("Euler characteristic {chi}, expected 1")));
        }
        let m = boundary.len();
        let distinct: std::collections::HashSet<usize> = boundary.iter().copied().collect();
        let boundary_edges = edges.values().filter(|&&c| c == 1).count();
        if m < 3 || distinct.len() != m || boundary_edges != m {
            return Err(Error::InvalidMesh(
                "boundary is not the simple cycle of free edges".into(),
            ));
        }
        for k in 0..m {
            let (p, q) = (boundary[k], boundary[(k + 1) % m]);
            if edges.get(&(p.min(q), p.max(q))) != Some(&1) {
                return Err(Error::InvalidMesh(format!(
                    "boundary edge ({p}, {q}) is not a free edge"
                )));
            }
        }
        Ok(ParamMesh {
            vertices,
            triangles,
            boundary,
        })
    }

    pub fn vertices(&self) -> &[Complex64] {
        &self.vertices
    }

    pub fn triangles(&self) -> &[[usize; 3]] {
        &self.triangles
    }

    pub fn boundary(&self) -> &[usize] {
        &self.boundary
    }

    /// Largest `|w|` over the vertices.
    pub fn radius(&self) -> f64 {
        self.vertices.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    /// Unique undirected edges.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut e: Vec<(usize, usize)> = self
            .triangles
            .iter()
            .flat_map(|t| [(t[0], t[1]), (t[1], t[2]), (t[2], t[0])])
            .map(|(p, q)| (p.min(q), p.max(q)))
            .collect();
        e.sort_unstable();
        e.dedup();
        e
    }
}

fn signed_area(a: Complex64, b: Complex64, c: Complex64) -> f64 {
    0.5 * ((b.re - a.re) * (c.im - a.im) - (b.im - a.im) * (c.re - a.re))
}

/// Polar triangulation of the disk `|w| <= r`: ring `k` (of `n`) carries
/// `6k` equally spaced vertices, consecutive rings are zipped by angle.
/// `1 + 3n(n+1)` vertices, `6n^2` triangles, boundary = outer ring.
pub fn triangulate_disk(r: f64, n: usize) -> Result<ParamMesh> {
    if n == 0 || !(r.is_finite() && r > 0.0) {
        return Err(Error::InvalidInput(format!(
            "need r > 0 and n >= 1, got r = {r}, n = {n}"
        )));
    }
    let mut vertices = vec![Complex64::new(0.0, 0.0)];
    let mut rings: Vec<Vec<usize>> = vec![vec![0]];
    for k in 1..=n {
        let m = 6 * k;
        let radius = r * k as f64 / n as f64;
        let start = vertices.len();
        vertices.extend((0..m).map(|j| Complex64::from_polar(radius, TAU * j as f64 / m as f64)));
        rings.push((start..start + m).collect());
    }
    let mut triangles = Vec::with_capacity(6 * n * n);
    for k in 1..=n {
        let (inner, outer) = (&rings[k - 1], &rings[k]);
        if k == 1 {
            for b in 0..outer.len() {
                triangles.push([0, outer[b], outer[(b + 1) % outer.len()]]);
            }
            continue;
        }
        let (m0, m1) = (inner.len(), outer.len());
        let (mut a, mut b) = (0, 0);
        while a < m0 || b < m1 {
            // Advance whichever ring has the smaller next angle.
            let next_inner = (a + 1) as f64 / m0 as f64;
            let next_outer = (b + 1) as f64 / m1 as f64;
            if a < m0 && (b == m1 || next_inner < next_outer) {
                triangles.push([inner[a % m0], outer[b % m1], inner[(a + 1) % m0]]);
                a += 1;
            } else {
                triangles.push([inner[a % m0], outer[b % m1], outer[(b + 1) % m1]]);
                b += 1;
            }
        }
    }
    let boundary = rings[n].clone();
    ParamMesh::new(vertices, triangles, boundary)
}

/// Sampled positions of a surface on a parameter mesh.
#[derive(Debug, Clone)]
pub struct SurfaceMesh {
    param: ParamMesh,
    positions: Vec<Point3>,
    ambient: Ambient,
}

impl SurfaceMesh {
    pub fn new(param: ParamMesh, positions: Vec<Point3>, ambient: Ambient) -> Result<Self> {
        if positions.len() != param.vertices().len() {
            return Err(Error::InvalidMesh(format!(
                "{} positions for {} vertices",
                positions.len(),
                param.vertices().len()
            )));
        }
        if positions.iter().any(|p| !p.is_finite()) {
            return Err(Error::InvalidMesh("non-finite position".into()));
        }
        let positions = positions.into_iter().map(|p| p.with_ambient(ambient)).collect();
        Ok(SurfaceMesh {
            param,
            positions,
            ambient,
        })
    }

    pub fn param(&self) -> &ParamMesh {
        &self.param
    }

    pub fn positions(&self) -> &[Point3] {
        &self.positions
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }
}

fn check_inside(im: &Immersion, mesh: &ParamMesh) -> Result<()> {
    let r = mesh.radius();
    if r > im.domain_radius() * (1.0 + 1e-12) {
        return Err(Error::Domain {
            point: format!("mesh of radius {r}"),
            radius: im.domain_radius(),
        });
    }
    Ok(())
}

/// `X` at every mesh vertex, evaluated in parallel.
pub fn sample_surface(im: &Immersion, mesh: &ParamMesh, tol: f64) -> Result<SurfaceMesh> {
    Ok(sample_pair(im, mesh, tol)?.0)
}

/// `X` and its conjugate `X*` on the same mesh, from a single set of
/// path integrals.
pub fn sample_pair(im: &Immersion, mesh: &ParamMesh, tol: f64) -> Result<(SurfaceMesh, SurfaceMesh)> {
    check_inside(im, mesh)?;
    let base = im.base_value();
    let ambient = im.ambient();
    let pairs: Vec<(Point3, Point3)> = mesh
        .vertices()
        .par_iter()
        .map(|&w| {
            let v = im.integral(w, tol)?;
            Ok((
                base + Tangent3::new([v[0].re, v[1].re, v[2].re], ambient),
                Tangent3::new([v[0].im, v[1].im, v[2].im], ambient),
            ))
        })
        .collect::<Result<_>>()?;
    let (x, xs): (Vec<Point3>, Vec<Point3>) = pairs.into_iter().unzip();
    Ok((
        SurfaceMesh::new(mesh.clone(), x, ambient)?,
        SurfaceMesh::new(mesh.clone(), xs, ambient)?,
    ))
}

/// `X*` at every mesh vertex.
pub fn sample_conjugate(im: &Immersion, mesh: &ParamMesh, tol: f64) -> Result<SurfaceMesh> {
    check_inside(im, mesh)?;
    let positions = mesh
        .vertices()
        .par_iter()
        .map(|&w| conjugate_immerse(im, w, tol))
        .collect::<Result<Vec<_>>>()?;
    SurfaceMesh::new(mesh.clone(), positions, im.ambient())
}

/// Negative control: the unit disk mesh mapped by `(u, v) -> (fold(u), v, 0)`
/// with `fold(u) = u^2` for `u < 0`, which folds the left half over the right.
pub fn folded_mesh(n: usize) -> Result<SurfaceMesh> {
    let param = triangulate_disk(1.0, n)?;
    let positions = param
        .vertices()
        .iter()
        .map(|w| {
            let u = if w.re < 0.0 { w.re * w.re } else { w.re };
            Tangent3::lorentzian(u, w.im, 0.0)
        })
        .collect();
    SurfaceMesh::new(param, positions, Ambient::Lorentzian)
}
