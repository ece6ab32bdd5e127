use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::duality::sharp;
use crate::error::{Error, Result};
use crate::graph_pde::{dualize, GraphKind, GridSpec, ScalarField};
use crate::weierstrass::{Immersion, WeierstrassData};

use super::krust::newton_solve;
use super::mesh::{sample_surface, triangulate_disk, SurfaceMesh};

/// Rings of the parameter mesh used to locate grid nodes.
pub const LEE_MESH_N: usize = 32;

/// Curl certificate used when dualising a resampled maximal graph. The
/// discrete curl of an exact solution is a truncation error of size
/// `O(h^2)`; a non-solution has curl of order one.
pub const LEE_CURL_THRESHOLD: f64 = 1e-2;

/// Buckets of projected triangles for point location.
struct Locator<'a> {
    surface: &'a SurfaceMesh,
    pts: Vec<[f64; 2]>,
    lo: [f64; 2],
    cell: f64,
    dims: [usize; 2],
    buckets: Vec<Vec<usize>>,
}

impl<'a> Locator<'a> {
    fn new(surface: &'a SurfaceMesh) -> Self {
        let pts: Vec<[f64; 2]> = surface.positions().iter().map(|p| [p.x[0], p.x[1]]).collect();
        let (lo, hi) = bbox(&pts);
        let tris = surface.param().triangles();
        let side = ((tris.len() as f64).sqrt().ceil() as usize).max(1);
        let cell = ((hi[0] - lo[0]).max(hi[1] - lo[1]) / side as f64).max(f64::MIN_POSITIVE);
        let dims = [
            ((hi[0] - lo[0]) / cell) as usize + 1,
            ((hi[1] - lo[1]) / cell) as usize + 1,
        ];
        let mut buckets = vec![Vec::new(); dims[0] * dims[1]];
        for (t, tri) in tris.iter().enumerate() {
            let corner: Vec<[f64; 2]> = tri.iter().map(|&k| pts[k]).collect();
            let (a, b) = bbox(&corner);
            let (i0, j0) = (((a[0] - lo[0]) / cell) as usize, ((a[1] - lo[1]) / cell) as usize);
            let (i1, j1) = (((b[0] - lo[0]) / cell) as usize, ((b[1] - lo[1]) / cell) as usize);
            for j in j0..=j1.min(dims[1] - 1) {
                for i in i0..=i1.min(dims[0] - 1) {
                    buckets[j * dims[0] + i].push(t);
                }
            }
        }
        Locator {
            surface,
            pts,
            lo,
            cell,
            dims,
            buckets,
        }
    }

    /// Containing triangle and barycentric coordinates of `p`.
    fn locate(&self, p: [f64; 2]) -> Option<(usize, [f64; 3])> {
        let fi = (p[0] - self.lo[0]) / self.cell;
        let fj = (p[1] - self.lo[1]) / self.cell;
        if fi < 0.0 || fj < 0.0 || fi as usize >= self.dims[0] || fj as usize >= self.dims[1] {
            return None;
        }
        let tris = self.surface.param().triangles();
        for &t in &self.buckets[fj as usize * self.dims[0] + fi as usize] {
            let [a, b, c] = tris[t].map(|k| self.pts[k]);
            let det = (b[0] - a[0]) * (c[1] - a[1]) - (c[0] - a[0]) * (b[1] - a[1]);
            let l1 = ((p[0] - a[0]) * (c[1] - a[1]) - (c[0] - a[0]) * (p[1] - a[1])) / det;
            let l2 = ((b[0] - a[0]) * (p[1] - a[1]) - (p[0] - a[0]) * (b[1] - a[1])) / det;
            let l0 = 1.0 - l1 - l2;
            if l0 >= 0.0 && l1 >= 0.0 && l2 >= 0.0 {
                return Some((t, [l0, l1, l2]));
            }
        }
        None
    }
}

fn bbox(pts: &[[f64; 2]]) -> ([f64; 2], [f64; 2]) {
    let mut lo = [f64::INFINITY; 2];
    let mut hi = [f64::NEG_INFINITY; 2];
    for p in pts {
        for k in 0..2 {
            lo[k] = lo[k].min(p[k]);
            hi[k] = hi[k].max(p[k]);
        }
    }
    (lo, hi)
}

/// Resamples the graph `x3 = f(x1, x2)` of a surface onto `grid`.
///
/// Nodes inside the projected triangulation get a barycentric initial guess
/// for their preimage, which Newton's method then solves exactly; the value
/// is `x3` at that preimage. Nodes outside the projected mesh are masked out.
pub fn resample_graph(im: &Immersion, surface: &SurfaceMesh, grid: GridSpec, tol: f64) -> Result<ScalarField> {
    let locator = Locator::new(surface);
    let verts = surface.param().vertices();
    let tris = surface.param().triangles();
    let quad_tol = (tol * 1e-3).max(1e-15);
    let samples: Vec<Option<f64>> = (0..grid.len())
        .into_par_iter()
        .map(|k| {
            let p = [grid.x(k % grid.nx), grid.y(k / grid.nx)];
            let Some((t, l)) = locator.locate(p) else {
                return Ok(None);
            };
            let tri = tris[t];
            let guess = verts[tri[0]] * l[0] + verts[tri[1]] * l[1] + verts[tri[2]] * l[2];
            let nearest = tri[(0..3).max_by(|&a, &b| l[a].total_cmp(&l[b])).expect("three corners")];
            let x0 = im.immerse_from(verts[nearest], surface.positions()[nearest], guess, quad_tol)?;
            let (_, x) = newton_solve(im, guess, x0, Complex64::new(p[0], p[1]), tol, 0.0)?;
            Ok(Some(x.x[2]))
        })
        .collect::<Result<_>>()?;
    let mask: Vec<bool> = samples.iter().map(Option::is_some).collect();
    let values = samples.into_iter().map(|v| v.unwrap_or(0.0)).collect();
    ScalarField::new(grid, values, mask)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LeeReport {
    /// `min_c max |f^sharp - g - c|` over the common cells.
    pub discrepancy: f64,
    pub grid_h: f64,
    /// Cells on which both duals are defined.
    pub overlap: usize,
    /// Curl certificate of the graph-side dual.
    pub max_curl: f64,
}

/// Compares the two dualities of a maximal graph: the graph-side dual of its
/// resampled height function against the isotropic-curve dual `X^sharp`
/// resampled over its own projection.
pub fn lee_equivalence_check(data: &WeierstrassData, grid_h: f64, tol: f64) -> Result<LeeReport> {
    let im = Immersion::from_data(data)?;
    let mesh = triangulate_disk(data.domain_radius(), LEE_MESH_N)?;
    let surface = sample_surface(&im, &mesh, tol * 1e-3)?;
    let pts: Vec<[f64; 2]> = surface.positions().iter().map(|p| [p.x[0], p.x[1]]).collect();
    let (lo, hi) = bbox(&pts);
    let grid = GridSpec::covering(lo[0], hi[0], lo[1], hi[1], grid_h)?;
    let f = resample_graph(&im, &surface, grid, tol)?;
    let dual = dualize(&f, GraphKind::Maximal, LEE_CURL_THRESHOLD)?;

    let sharp_im = im.with_curve(sharp(im.curve())?)?;
    let sharp_surface = sample_surface(&sharp_im, &mesh, tol * 1e-3)?;
    let g = resample_graph(&sharp_im, &sharp_surface, grid.dual()?, tol)?;

    let diff = dual.field.difference(&g)?;
    let overlap = diff.count();
    if overlap == 0 {
        return Err(Error::OverlapEmpty);
    }
    Ok(LeeReport {
        discrepancy: diff.oscillation_half(),
        grid_h,
        overlap,
        max_curl: dual.max_curl,
    })
}
