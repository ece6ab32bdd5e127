use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::field::{check_topology, neighbours, GridSpec, ScalarField, VectorField2};

/// Which zero-mean-curvature equation a graph solves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GraphKind {
    /// Euclidean minimal graph: `div(Df / sqrt(1 + |Df|^2)) = 0`.
    Minimal,
    /// Lorentzian maximal graph: `div(Df / sqrt(1 - |Df|^2)) = 0`, `|Df| < 1`.
    Maximal,
}

impl GraphKind {
    pub fn dual(self) -> GraphKind {
        match self {
            GraphKind::Minimal => GraphKind::Maximal,
            GraphKind::Maximal => GraphKind::Minimal,
        }
    }
}

/// Node gradient: central differences where both neighbours are masked,
/// one-sided differences at the mask boundary.
pub fn gradient(f: &ScalarField) -> Result<VectorField2> {
    let grid = *f.grid();
    let h = grid.spacing;
    let mut w1 = vec![0.0; grid.len()];
    let mut w2 = vec![0.0; grid.len()];
    for j in 0..grid.ny {
        for i in 0..grid.nx {
            let Some(c) = f.get(i, j) else { continue };
            let left = i.checked_sub(1).and_then(|i| f.get(i, j));
            let down = j.checked_sub(1).and_then(|j| f.get(i, j));
            let dx = one_axis(left, c, f.get(i + 1, j), h)
                .ok_or_else(|| Error::DegenerateMask(format!("node ({i}, {j}) has no x-neighbour")))?;
            let dy = one_axis(down, c, f.get(i, j + 1), h)
                .ok_or_else(|| Error::DegenerateMask(format!("node ({i}, {j}) has no y-neighbour")))?;
            let k = grid.idx(i, j);
            w1[k] = dx;
            w2[k] = dy;
        }
    }
    VectorField2::new(grid, w1, w2, f.mask().to_vec())
}

fn one_axis(minus: Option<f64>, centre: f64, plus: Option<f64>, h: f64) -> Option<f64> {
    match (minus, plus) {
        (Some(a), Some(b)) => Some((b - a) / (2.0 * h)),
        (None, Some(b)) => Some((b - centre) / h),
        (Some(a), None) => Some((centre - a) / h),
        (None, None) => None,
    }
}

/// Gradient at cell centres from the four corner values, second order.
/// Lives on [`GridSpec::dual`]; a cell is valid when all corners are masked.
pub fn cell_gradient(f: &ScalarField) -> Result<VectorField2> {
    let grid = f.grid();
    let cells = grid.dual()?;
    let h = grid.spacing;
    let mut w1 = vec![0.0; cells.len()];
    let mut w2 = vec![0.0; cells.len()];
    let mut mask = vec![false; cells.len()];
    for j in 0..cells.ny {
        for i in 0..cells.nx {
            if let (Some(sw), Some(se), Some(nw), Some(ne)) =
                (f.get(i, j), f.get(i + 1, j), f.get(i, j + 1), f.get(i + 1, j + 1))
            {
                let k = cells.idx(i, j);
                w1[k] = ((se - sw) + (ne - nw)) / (2.0 * h);
                w2[k] = ((nw - sw) + (ne - se)) / (2.0 * h);
                mask[k] = true;
            }
        }
    }
    VectorField2::new(cells, w1, w2, mask)
}

/// Normalised flux `Df / sqrt(1 +- |Df|^2)` at cell centres.
fn flux(f: &ScalarField, kind: GraphKind) -> Result<VectorField2> {
    let grad = cell_gradient(f)?;
    let cells = *grad.grid();
    let mut v1 = vec![0.0; cells.len()];
    let mut v2 = vec![0.0; cells.len()];
    let mut worst = 0.0_f64;
    for j in 0..cells.ny {
        for i in 0..cells.nx {
            let Some([a, b]) = grad.get(i, j) else { continue };
            let s = a * a + b * b;
            worst = worst.max(s.sqrt());
            let norm = match kind {
                GraphKind::Minimal => (1.0 + s).sqrt(),
                GraphKind::Maximal => (1.0 - s).sqrt(),
            };
            let k = cells.idx(i, j);
            v1[k] = a / norm;
            v2[k] = b / norm;
        }
    }
    if kind == GraphKind::Maximal && worst >= 1.0 {
        return Err(Error::NotSpacelike(worst));
    }
    VectorField2::new(cells, v1, v2, grad.mask().to_vec())
}

/// The staggered divergence (or, with `rotate`, curl) of a cell-centred
/// field, evaluated at nodes whose four surrounding cells are valid.
///
/// With `W = J V` for the quarter turn `J(a, b) = (-b, a)`, `curl W` and
/// `div V` are the same floating-point expression, which is what makes the
/// curl certificate of the dual equal to the residual of the primal.
fn node_div(v: &VectorField2, base: &GridSpec, rotate: bool) -> Result<ScalarField> {
    let h = base.spacing;
    let mut values = vec![0.0; base.len()];
    let mut mask = vec![false; base.len()];
    for j in 1..base.ny.saturating_sub(1) {
        for i in 1..base.nx.saturating_sub(1) {
            if let (Some(sw), Some(se), Some(nw), Some(ne)) =
                (v.get(i - 1, j - 1), v.get(i, j - 1), v.get(i - 1, j), v.get(i, j))
            {
                let k = base.idx(i, j);
                values[k] = if rotate {
                    // curl W = d/dx W2 - d/dy W1
                    ((ne[1] + se[1]) - (nw[1] + sw[1])) / (2.0 * h) + (-(ne[0] + nw[0]) + (se[0] + sw[0])) / (2.0 * h)
                } else {
                    ((ne[0] + se[0]) - (nw[0] + sw[0])) / (2.0 * h) + ((ne[1] + nw[1]) - (se[1] + sw[1])) / (2.0 * h)
                };
                mask[k] = true;
            }
        }
    }
    ScalarField::new(*base, values, mask)
}

/// Residual of the minimal surface equation at interior nodes.
pub fn minimal_residual(f: &ScalarField) -> Result<ScalarField> {
    node_div(&flux(f, GraphKind::Minimal)?, f.grid(), false)
}

/// Residual of the maximal surface equation at interior nodes.
pub fn maximal_residual(f: &ScalarField) -> Result<ScalarField> {
    node_div(&flux(f, GraphKind::Maximal)?, f.grid(), false)
}

pub fn residual(f: &ScalarField, kind: GraphKind) -> Result<ScalarField> {
    node_div(&flux(f, kind)?, f.grid(), false)
}

/// The field whose potential is the dual graph, at cell centres:
/// `(-f_y, f_x) / sqrt(1 + |Df|^2)` for minimal input and
/// `(f_y, -f_x) / sqrt(1 - |Df|^2)` for maximal input.
pub fn dual_field(f: &ScalarField, kind: GraphKind) -> Result<VectorField2> {
    let v = flux(f, kind)?;
    let cells = *v.grid();
    let mut w1 = vec![0.0; cells.len()];
    let mut w2 = vec![0.0; cells.len()];
    for j in 0..cells.ny {
        for i in 0..cells.nx {
            let Some([a, b]) = v.get(i, j) else { continue };
            let k = cells.idx(i, j);
            (w1[k], w2[k]) = match kind {
                GraphKind::Minimal => (-b, a),
                GraphKind::Maximal => (b, -a),
            };
        }
    }
    VectorField2::new(cells, w1, w2, v.mask().to_vec())
}

/// Discrete curl of [`dual_field`] at interior nodes. Equals the residual of
/// `f` for minimal input and its negative for maximal input.
pub fn curl_field(f: &ScalarField, kind: GraphKind) -> Result<ScalarField> {
    node_div(&dual_field(f, kind)?, f.grid(), true)
}

/// Output of a graph duality.
#[derive(Debug, Clone)]
pub struct GraphDual {
    /// The dual graph on the cell-centre grid, zero at the anchor cell.
    pub field: ScalarField,
    pub kind: GraphKind,
    /// Largest `|curl W|` over interior nodes.
    pub max_curl: f64,
    /// Largest `|W|`: the slope of the dual graph at cell centres.
    pub max_slope: f64,
}

/// Integrates the closed field `W` along a BFS spanning tree of the valid
/// cells, after certifying that its curl is below `curl_threshold`.
pub fn dualize(f: &ScalarField, kind: GraphKind, curl_threshold: f64) -> Result<GraphDual> {
    f.check_simply_connected()?;
    let w = dual_field(f, kind)?;
    let curl = node_div(&w, f.grid(), true)?;
    let max_curl = curl.max_abs();
    if !(max_curl <= curl_threshold) {
        return Err(Error::Curl {
            curl: max_curl,
            threshold: curl_threshold,
        });
    }
    let cells = *w.grid();
    check_topology(&cells, w.mask()).map_err(|e| match e {
        Error::DegenerateMask(m) => Error::DegenerateMask(format!("no complete grid cell: {m}")),
        other => other,
    })?;
    let h = cells.spacing;
    let anchor = w
        .mask()
        .iter()
        .position(|&m| m)
        .expect("topology check guarantees a cell");
    let mut values = vec![0.0; cells.len()];
    let mut seen = vec![false; cells.len()];
    seen[anchor] = true;
    let mut queue = VecDeque::from([anchor]);
    let at = |k: usize| w.get(k % cells.nx, k / cells.nx).expect("masked cell");
    while let Some(k) = queue.pop_front() {
        let wk = at(k);
        for n in neighbours(&cells, k) {
            if !w.mask()[n] || seen[n] {
                continue;
            }
            let wn = at(n);
            // Trapezoid rule along the edge k -> n.
            let horizontal = n / cells.nx == k / cells.nx;
            let step = if horizontal && n > k {
                h * (wk[0] + wn[0]) / 2.0
            } else if horizontal {
                -h * (wk[0] + wn[0]) / 2.0
            } else if n > k {
                h * (wk[1] + wn[1]) / 2.0
            } else {
                -h * (wk[1] + wn[1]) / 2.0
            };
            values[n] = values[k] + step;
            seen[n] = true;
            queue.push_back(n);
        }
    }
    Ok(GraphDual {
        field: ScalarField::new(cells, values, w.mask().to_vec())?,
        kind: kind.dual(),
        max_curl,
        max_slope: w.max_norm(),
    })
}

/// Dual maximal graph `f^flat` of a minimal graph.
pub fn dualize_minimal_to_maximal(f: &ScalarField, curl_threshold: f64) -> Result<ScalarField> {
    Ok(dualize(f, GraphKind::Minimal, curl_threshold)?.field)
}

/// Dual minimal graph `f^sharp` of a maximal graph.
pub fn dualize_maximal_to_minimal(f: &ScalarField, curl_threshold: f64) -> Result<ScalarField> {
    Ok(dualize(f, GraphKind::Maximal, curl_threshold)?.field)
}
