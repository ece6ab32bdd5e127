use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lorentz::{cross_lorentz, Point3};
use crate::weierstrass::{conjugate_curve, differential, gauss_map, immerse, DatumKind, Immersion, WeierstrassData};

use super::mesh::{sample_pair, triangulate_disk};
use super::report::{projection_report, GraphReport};

/// Default number of continuation steps for segment pullbacks.
pub const DEFAULT_STEPS: usize = 200;

/// Newton iterations allowed per continuation node.
const NEWTON_ITERS: usize = 60;
/// Step halvings allowed per Newton iteration before giving up.
const MAX_HALVINGS: usize = 40;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    /// Convex graph domain and injective conjugate projection.
    Pass,
    /// Convex graph domain but the conjugate projection is not injective.
    Fail,
    /// The surface is not certified as a graph over a convex domain.
    NotApplicable,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::NotApplicable => "NOT_APPLICABLE",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct KrustReport {
    pub domain_report: GraphReport,
    pub conjugate_report: GraphReport,
    pub verdict: Verdict,
    pub mesh_n: usize,
    pub tol: f64,
}

/// Samples `X` and `X*` on the disk mesh of the immersion's domain and
/// decides whether the conjugate of a convex graph is again a graph.
pub fn krust_pipeline_immersion(im: &Immersion, n: usize, tol: f64) -> Result<KrustReport> {
    let mesh = triangulate_disk(im.domain_radius(), n)?;
    let (x, xs) = sample_pair(im, &mesh, tol)?;
    let domain_report = projection_report(&x)?;
    let conjugate_report = projection_report(&xs)?;
    let verdict = if !(domain_report.injective && domain_report.is_convex_domain) {
        Verdict::NotApplicable
    } else if conjugate_report.injective {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    Ok(KrustReport {
        domain_report,
        conjugate_report,
        verdict,
        mesh_n: n,
        tol,
    })
}

/// [`krust_pipeline_immersion`] for the maximal surface of a graph datum.
pub fn krust_pipeline(data: &WeierstrassData, n: usize, tol: f64) -> Result<KrustReport> {
    require_graph(data)?;
    krust_pipeline_immersion(&Immersion::from_data(data)?, n, tol)
}

fn require_graph(data: &WeierstrassData) -> Result<()> {
    if data.kind() != DatumKind::MaximalGraph {
        return Err(Error::InvalidInput("a maximal-graph datum is required".into()));
    }
    Ok(())
}

/// `|N(w) x dX(a, b) - dX*(a, b)|` with exact differentials; `dX*` is taken
/// from the conjugate curve `-i Psi`, independently of `dX`.
pub fn rotation_identity_check(im: &Immersion, data: &WeierstrassData, w: Complex64, dir: (f64, f64)) -> Result<f64> {
    let (a, b) = dir;
    let n = gauss_map(data, w)?;
    let (xu, xv) = differential(im, w)?;
    let conj = im.with_curve(conjugate_curve(im.curve()))?;
    let (su, sv) = differential(&conj, w)?;
    let dx = xu * a + xv * b;
    let dxs = su * a + sv * b;
    Ok((cross_lorentz(&n, &dx)? - dxs).coord_norm())
}

/// A parameter path `beta` whose image projects onto a straight segment.
#[derive(Debug, Clone)]
pub struct PulledSegment {
    pub t: Vec<f64>,
    pub beta: Vec<Complex64>,
    pub points: Vec<Point3>,
    /// Largest `|pi X(beta(t_k)) - gamma(t_k)|`.
    pub max_residual: f64,
}

fn project(p: &Point3) -> Complex64 {
    Complex64::new(p.x[0], p.x[1])
}

/// Solves `pi X(w) = target` by damped Newton from `(w, x)`, where `x = X(w)`.
pub(crate) fn newton_solve(
    im: &Immersion,
    w: Complex64,
    x: Point3,
    target: Complex64,
    tol: f64,
    t: f64,
) -> Result<(Complex64, Point3)> {
    let quad_tol = (tol * 1e-3).max(1e-15);
    let (mut w, mut x) = (w, x);
    let mut res = (project(&x) - target).norm();
    for _ in 0..NEWTON_ITERS {
        if res < tol {
            return Ok((w, x));
        }
        let (xu, xv) = differential(im, w)?;
        // Solve [[xu1, xv1], [xu2, xv2]] (du, dv) = target - pi X.
        let det = xu.x[0] * xv.x[1] - xv.x[0] * xu.x[1];
        if det.abs() < 1e-300 {
            return Err(Error::NewtonDivergence {
                t,
                reason: "singular projected Jacobian".into(),
            });
        }
        let r = target - project(&x);
        let du = (r.re * xv.x[1] - xv.x[0] * r.im) / det;
        let dv = (xu.x[0] * r.im - r.re * xu.x[1]) / det;
        let mut step = Complex64::new(du, dv);
        let mut accepted = false;
        for _ in 0..MAX_HALVINGS {
            let cand = w + step;
            if cand.norm() <= im.domain_radius() {
                let xc = im.immerse_from(w, x, cand, quad_tol)?;
                let rc = (project(&xc) - target).norm();
                if rc < res {
                    (w, x, res) = (cand, xc, rc);
                    accepted = true;
                    break;
                }
            }
            step *= 0.5;
        }
        if !accepted {
            return Err(Error::NewtonDivergence {
                t,
                reason: format!("no decrease from residual {res:e}; the target may lie outside the domain"),
            });
        }
    }
    if res < tol {
        Ok((w, x))
    } else {
        Err(Error::NewtonDivergence {
            t,
            reason: format!("residual {res:e} after {NEWTON_ITERS} iterations"),
        })
    }
}

/// Newton continuation of `pi X(beta(t)) = (1 - t) p1 + t p2` starting from
/// the known preimage `w1` of `p1 = pi X(w1)`.
pub fn pullback_from(im: &Immersion, w1: Complex64, p2: Complex64, steps: usize, tol: f64) -> Result<PulledSegment> {
    if steps == 0 {
        return Err(Error::InvalidInput("at least one continuation step is required".into()));
    }
    let x1 = immerse(im, w1, tol * 1e-3)?;
    let p1 = project(&x1);
    let mut out = PulledSegment {
        t: vec![0.0],
        beta: vec![w1],
        points: vec![x1],
        max_residual: 0.0,
    };
    let (mut w, mut x) = (w1, x1);
    for k in 1..=steps {
        let t = k as f64 / steps as f64;
        let target = p1 * (1.0 - t) + p2 * t;
        // Secant predictor from the last two nodes.
        let n = out.beta.len();
        let guess = if n >= 2 {
            2.0 * out.beta[n - 1] - out.beta[n - 2]
        } else {
            w
        };
        let (w0, x0) = if guess.norm() <= im.domain_radius() && guess != w {
            (guess, im.immerse_from(w, x, guess, tol * 1e-3)?)
        } else {
            (w, x)
        };
        let (wn, xn) = newton_solve(im, w0, x0, target, tol, t)?;
        out.max_residual = out.max_residual.max((project(&xn) - target).norm());
        (w, x) = (wn, xn);
        out.t.push(t);
        out.beta.push(w);
        out.points.push(x);
    }
    Ok(out)
}

/// Pulls the segment `[p1, p2]` of the projected domain back to the
/// parameter disk. The preimage of `p1` is itself found by continuation
/// along the segment from the projected base point.
pub fn pullback_segment(im: &Immersion, p1: [f64; 2], p2: [f64; 2], steps: usize, tol: f64) -> Result<PulledSegment> {
    let p1 = Complex64::new(p1[0], p1[1]);
    let p2 = Complex64::new(p2[0], p2[1]);
    let start = pullback_from(im, im.base_point(), p1, steps, tol)?;
    let w1 = *start.beta.last().expect("non-empty path");
    pullback_from(im, w1, p2, steps, tol)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct KrustInequality {
    /// `<p2 - p1, i (q2 - q1)>` from immersion values.
    pub lhs: f64,
    /// `int_0^1 |beta'|^2 |h'|^2 / 4 (|g|^2 - 1/|g|^2) dt` along the pullback.
    pub integral: f64,
    /// Allowed disagreement `max(1e-5, 1e-2 |lhs|)` minus the actual one.
    pub margin: f64,
}

impl KrustInequality {
    pub fn holds(&self) -> bool {
        self.lhs > 0.0 && self.integral > 0.0 && self.margin >= 0.0
    }
}

/// Compares the inner product of projected chords of `X` and `X*` with the
/// positive integral it equals along the pulled-back segment.
pub fn krust_inequality_check(
    data: &WeierstrassData,
    w1: Complex64,
    w2: Complex64,
    steps: usize,
    tol: f64,
) -> Result<KrustInequality> {
    require_graph(data)?;
    if w1 == w2 {
        return Err(Error::InvalidInput("w1 and w2 must differ".into()));
    }
    if steps < 2 {
        return Err(Error::InvalidInput("at least two steps are required".into()));
    }
    let im = Immersion::from_data(data)?;
    let quad_tol = tol * 1e-3;
    let v1 = im.integral(w1, quad_tol)?;
    let v2 = im.integral(w2, quad_tol)?;
    let p = Complex64::new(v2[0].re - v1[0].re, v2[1].re - v1[1].re);
    let q = Complex64::new(v2[0].im - v1[0].im, v2[1].im - v1[1].im);
    let lhs = (p * (Complex64::i() * q).conj()).re;

    let path = pullback_from(
        &im,
        w1,
        Complex64::new(v2[0].re, v2[1].re) + project(&im.base_value()),
        steps,
        tol,
    )?;
    let dt = 1.0 / steps as f64;
    let b = &path.beta;
    let m = b.len();
    let mut values = Vec::with_capacity(m);
    for k in 0..m {
        let d = if k == 0 {
            (-3.0 * b[0] + 4.0 * b[1] - b[2]) / (2.0 * dt)
        } else if k == m - 1 {
            (3.0 * b[m - 1] - 4.0 * b[m - 2] + b[m - 3]) / (2.0 * dt)
        } else {
            (b[k + 1] - b[k - 1]) / (2.0 * dt)
        };
        let g2 = data.g().eval(b[k])?.norm_sqr();
        let hp2 = data.dh().eval(b[k])?.norm_sqr();
        values.push(d.norm_sqr() * hp2 / 4.0 * (g2 - 1.0 / g2));
    }
    let integral = dt * (values.iter().sum::<f64>() - 0.5 * (values[0] + values[m - 1]));
    let margin = 1e-5_f64.max(1e-2 * lhs.abs()) - (lhs - integral).abs();
    Ok(KrustInequality { lhs, integral, margin })
}
