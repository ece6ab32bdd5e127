use std::collections::VecDeque;
use std::io::{Read, Write};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Lattice metadata shared by scalar and vector fields; also the JSON header
/// of the CSV field format.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    pub origin: [f64; 2],
    pub spacing: f64,
    pub nx: usize,
    pub ny: usize,
}

impl GridSpec {
    pub fn new(origin: [f64; 2], spacing: f64, nx: usize, ny: usize) -> Result<Self> {
        if !(spacing.is_finite() && spacing > 0.0) {
            return Err(Error::GridMismatch(format!("spacing must be positive, got {spacing}")));
        }
        if !(origin[0].is_finite() && origin[1].is_finite()) {
            return Err(Error::GridMismatch("non-finite origin".into()));
        }
        if nx == 0 || ny == 0 {
            return Err(Error::GridMismatch("empty grid".into()));
        }
        Ok(GridSpec {
            origin,
            spacing,
            nx,
            ny,
        })
    }

    /// Smallest grid with spacing `h` whose nodes cover `[x0, x1] x [y0, y1]`.
    pub fn covering(x0: f64, x1: f64, y0: f64, y1: f64, h: f64) -> Result<Self> {
        let nx = ((x1 - x0) / h).ceil() as usize + 1;
        let ny = ((y1 - y0) / h).ceil() as usize + 1;
        Self::new([x0, y0], h, nx, ny)
    }

    pub fn len(&self) -> usize {
        self.nx * self.ny
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Row-major index `j * nx + i`.
    pub fn idx(&self, i: usize, j: usize) -> usize {
        j * self.nx + i
    }

    pub fn x(&self, i: usize) -> f64 {
        self.origin[0] + i as f64 * self.spacing
    }

    pub fn y(&self, j: usize) -> f64 {
        self.origin[1] + j as f64 * self.spacing
    }

    /// Grid of cell centres: shifted by half a spacing, one fewer node per axis.
    pub fn dual(&self) -> Result<GridSpec> {
        if self.nx < 2 || self.ny < 2 {
            return Err(Error::DegenerateMask("grid has no cells".into()));
        }
        let h = self.spacing;
        Self::new(
            [self.origin[0] + h / 2.0, self.origin[1] + h / 2.0],
            h,
            self.nx - 1,
            self.ny - 1,
        )
    }
}

/// A gridded function `f(x, y)` on the masked nodes of a rectangular lattice.
#[derive(Debug, Clone, PartialEq)]
pub struct ScalarField {
    grid: GridSpec,
    values: Vec<f64>,
    mask: Vec<bool>,
}

impl ScalarField {
    /// Values off the mask are ignored (stored as 0).
    pub fn new(grid: GridSpec, mut values: Vec<f64>, mask: Vec<bool>) -> Result<Self> {
        if values.len() != grid.len() || mask.len() != grid.len() {
            return Err(Error::GridMismatch(format!(
                "expected {} values and mask entries, got {} and {}",
                grid.len(),
                values.len(),
                mask.len()
            )));
        }
        for (k, (v, &m)) in values.iter_mut().zip(&mask).enumerate() {
            if !m {
                *v = 0.0;
            } else if !v.is_finite() {
                return Err(Error::InvalidInput(format!("non-finite value at node {k}")));
            }
        }
        Ok(ScalarField { grid, values, mask })
    }

    /// Samples `f` at every node; `None` leaves the node off the mask.
    pub fn from_fn(grid: GridSpec, f: impl Fn(f64, f64) -> Option<f64>) -> Result<Self> {
        let mut values = vec![0.0; grid.len()];
        let mut mask = vec![false; grid.len()];
        for j in 0..grid.ny {
            for i in 0..grid.nx {
                if let Some(v) = f(grid.x(i), grid.y(j)) {
                    values[grid.idx(i, j)] = v;
                    mask[grid.idx(i, j)] = true;
                }
            }
        }
        Self::new(grid, values, mask)
    }

    pub fn grid(&self) -> &GridSpec {
        &self.grid
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn mask(&self) -> &[bool] {
        &self.mask
    }

    pub fn in_mask(&self, i: usize, j: usize) -> bool {
        i < self.grid.nx && j < self.grid.ny && self.mask[self.grid.idx(i, j)]
    }

    pub fn get(&self, i: usize, j: usize) -> Option<f64> {
        self.in_mask(i, j).then(|| self.values[self.grid.idx(i, j)])
    }

    pub fn count(&self) -> usize {
        self.mask.iter().filter(|&&m| m).count()
    }

    /// Masked nodes as `(x, y, value)` in row-major order.
    pub fn samples(&self) -> impl Iterator<Item = (f64, f64, f64)> + '_ {
        (0..self.grid.ny).flat_map(move |j| {
            (0..self.grid.nx).filter_map(move |i| self.get(i, j).map(|v| (self.grid.x(i), self.grid.y(j), v)))
        })
    }

    /// Largest `|value|` on the mask (0 for an empty mask).
    pub fn max_abs(&self) -> f64 {
        self.samples().map(|(_, _, v)| v.abs()).fold(0.0, f64::max)
    }

    /// `self - other` on the nodes both fields share, reported on the grid of
    /// `self`. The two grids must have the same spacing and origins that differ
    /// by whole grid steps (as for a field and its double dual).
    pub fn difference(&self, other: &ScalarField) -> Result<ScalarField> {
        let (a, b) = (&self.grid, &other.grid);
        let h = a.spacing;
        let offset = |d: f64| -> Result<i64> {
            let t = d / h;
            if (t - t.round()).abs() > 1e-6 {
                return Err(Error::GridMismatch("grids are not aligned".into()));
            }
            Ok(t.round() as i64)
        };
        if (a.spacing - b.spacing).abs() > 1e-12 * h {
            return Err(Error::GridMismatch("grids have different spacings".into()));
        }
        let di = offset(b.origin[0] - a.origin[0])?;
        let dj = offset(b.origin[1] - a.origin[1])?;
        let mut values = vec![0.0; a.len()];
        let mut mask = vec![false; a.len()];
        for j in 0..a.ny {
            for i in 0..a.nx {
                let (ib, jb) = (i as i64 - di, j as i64 - dj);
                if ib < 0 || jb < 0 {
                    continue;
                }
                if let (Some(u), Some(v)) = (self.get(i, j), other.get(ib as usize, jb as usize)) {
                    let k = a.idx(i, j);
                    values[k] = u - v;
                    mask[k] = true;
                }
            }
        }
        ScalarField::new(*a, values, mask)
    }

    /// `min_c max |self - c|` on the mask: half the oscillation.
    pub fn oscillation_half(&self) -> f64 {
        let (lo, hi) = self
            .samples()
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), (_, _, v)| {
                (lo.min(v), hi.max(v))
            });
        if lo > hi {
            0.0
        } else {
            (hi - lo) / 2.0
        }
    }

    /// Checks that the mask is non-empty, 4-connected and hole-free.
    pub fn check_simply_connected(&self) -> Result<()> {
        check_topology(&self.grid, &self.mask)
    }

    /// Writes masked nodes as CSV rows `x,y,value`.
    pub fn write_csv<W: Write>(&self, writer: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(writer);
        for (x, y, value) in self.samples() {
            w.serialize(CsvRow { x, y, value })?;
        }
        w.flush()?;
        Ok(())
    }

    /// Reads `x,y,value` rows onto the grid described by `grid`; absent rows
    /// are off the mask.
    pub fn read_csv<R: Read>(grid: GridSpec, reader: R) -> Result<Self> {
        let mut values = vec![0.0; grid.len()];
        let mut mask = vec![false; grid.len()];
        let mut r = csv::Reader::from_reader(reader);
        for row in r.deserialize::<CsvRow>() {
            let row = row?;
            let i = snap(row.x, grid.origin[0], grid.spacing, grid.nx)?;
            let j = snap(row.y, grid.origin[1], grid.spacing, grid.ny)?;
            let k = grid.idx(i, j);
            if mask[k] {
                return Err(Error::GridMismatch(format!("duplicate row at ({}, {})", row.x, row.y)));
            }
            values[k] = row.value;
            mask[k] = true;
        }
        Self::new(grid, values, mask)
    }
}

#[derive(Serialize, Deserialize)]
struct CsvRow {
    x: f64,
    y: f64,
    value: f64,
}

fn snap(x: f64, origin: f64, h: f64, n: usize) -> Result<usize> {
    let t = (x - origin) / h;
    let k = t.round();
    if !(k >= 0.0 && (k as usize) < n && (t - k).abs() < 1e-6) {
        return Err(Error::GridMismatch(format!("coordinate {x} is not a grid node")));
    }
    Ok(k as usize)
}

/// Connectivity via BFS, holes via the Euler characteristic of the cubical
/// complex (nodes, unit edges, full unit squares): a connected set is hole-free
/// iff `V - E + F = 1`.
pub(crate) fn check_topology(grid: &GridSpec, mask: &[bool]) -> Result<()> {
    let (nx, ny) = (grid.nx, grid.ny);
    let at = |i: usize, j: usize| mask[j * nx + i];
    let Some(start) = mask.iter().position(|&m| m) else {
        return Err(Error::DegenerateMask("mask is empty".into()));
    };
    let mut seen = vec![false; mask.len()];
    seen[start] = true;
    let mut queue = VecDeque::from([start]);
    let mut reached = 1;
    while let Some(k) = queue.pop_front() {
        for n in neighbours(grid, k) {
            if mask[n] && !seen[n] {
                seen[n] = true;
                reached += 1;
                queue.push_back(n);
            }
        }
    }
    let total = mask.iter().filter(|&&m| m).count();
    if reached != total {
        return Err(Error::NotSimplyConnected(format!(
            "mask has {} nodes but only {reached} are 4-connected to the first",
            total
        )));
    }
    let (mut e, mut f) = (0i64, 0i64);
    for j in 0..ny {
        for i in 0..nx {
            if !at(i, j) {
                continue;
            }
            if i + 1 < nx && at(i + 1, j) {
                e += 1;
            }
            if j + 1 < ny && at(i, j + 1) {
                e += 1;
            }
            if i + 1 < nx && j + 1 < ny && at(i + 1, j) && at(i, j + 1) && at(i + 1, j + 1) {
                f += 1;
            }
        }
    }
    let chi = total as i64 - e + f;
    if chi != 1 {
        return Err(Error::NotSimplyConnected(format!(
            "Euler characteristic {chi}, mask has holes"
        )));
    }
    Ok(())
}

/// 4-neighbours of a row-major index.
pub(crate) fn neighbours(grid: &GridSpec, k: usize) -> impl Iterator<Item = usize> {
    let (nx, ny) = (grid.nx, grid.ny);
    let (i, j) = (k % nx, k / nx);
    let mut out = [usize::MAX; 4];
    if i > 0 {
        out[0] = k - 1;
    }
    if i + 1 < nx {
        out[1] = k + 1;
    }
    if j > 0 {
        out[2] = k - nx;
    }
    if j + 1 < ny {
        out[3] = k + nx;
    }
    out.into_iter().filter(|&n| n != usize::MAX)
}

/// A gridded planar vector field `(w1, w2)`.
#[derive(Debug, Clone, PartialEq)]
pub struct VectorField2 {
    grid: GridSpec,
    w1: Vec<f64>,
    w2: Vec<f64>,
    mask: Vec<bool>,
}

impl VectorField2 {
    pub fn new(grid: GridSpec, w1: Vec<f64>, w2: Vec<f64>, mask: Vec<bool>) -> Result<Self> {
        let n = grid.len();
        if w1.len() != n || w2.len() != n || mask.len() != n {
            return Err(Error::GridMismatch("component length does not match the grid".into()));
        }
        for k in 0..n {
            if mask[k] && !(w1[k].is_finite() && w2[k].is_finite()) {
                return Err(Error::InvalidInput(format!("non-finite vector at node {k}")));
            }
        }
        Ok(VectorField2 { grid, w1, w2, mask })
    }

    pub fn grid(&self) -> &GridSpec {
        &self.grid
    }

    pub fn mask(&self) -> &[bool] {
        &self.mask
    }

    pub fn get(&self, i: usize, j: usize) -> Option<[f64; 2]> {
        let k = self.grid.idx(i, j);
        (i < self.grid.nx && j < self.grid.ny && self.mask[k]).then(|| [self.w1[k], self.w2[k]])
    }

    /// Largest Euclidean norm on the mask.
    pub fn max_norm(&self) -> f64 {
        (0..self.grid.len())
            .filter(|&k| self.mask[k])
            .map(|k| self.w1[k].hypot(self.w2[k]))
            .fold(0.0, f64::max)
    }
}
