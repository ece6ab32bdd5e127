use num_complex::Complex64;

use super::*;
use crate::complex::integrate_real;
use crate::error::Error;

fn square(h: f64, half: f64) -> GridSpec {
    GridSpec::covering(-half, half, -half, half, h).unwrap()
}

fn field(grid: GridSpec, f: impl Fn(f64, f64) -> f64) -> ScalarField {
    ScalarField::from_fn(grid, |x, y| Some(f(x, y))).unwrap()
}

/// Nodes of the annular sector `r0 <= r <= r1`, `t0 <= theta <= t1`.
fn sector(h: f64, r0: f64, r1: f64, t0: f64, t1: f64, f: impl Fn(f64, f64) -> f64) -> ScalarField {
    let grid = GridSpec::covering(0.0, r1, 0.0, r1, h).unwrap();
    ScalarField::from_fn(grid, |x, y| {
        let (r, t) = (x.hypot(y), y.atan2(x));
        (r >= r0 && r <= r1 && t >= t0 && t <= t1).then(|| f(x, y))
    })
    .unwrap()
}

#[test]
fn gradient_of_zero_and_affine() {
    let g = gradient(&field(square(0.1, 1.0), |_, _| 0.0)).unwrap();
    assert_eq!(g.max_norm(), 0.0);
    let g = gradient(&field(square(0.1, 1.0), |x, _| x)).unwrap();
    for j in 0..g.grid().ny {
        for i in 0..g.grid().nx {
            let [a, b] = g.get(i, j).unwrap();
            assert!((a - 1.0).abs() < 1e-12 && b.abs() < 1e-12);
        }
    }
}

#[test]
fn gradient_of_quadratic_is_exact_inside() {
    let f = field(square(0.01, 0.5), |x, _| x * x);
    let g = gradient(&f).unwrap();
    let grid = *g.grid();
    for j in 1..grid.ny - 1 {
        for i in 1..grid.nx - 1 {
            let [a, b] = g.get(i, j).unwrap();
            assert!((a - 2.0 * grid.x(i)).abs() < 1e-10 && b.abs() < 1e-10);
        }
    }
}

#[test]
fn isolated_node_is_degenerate() {
    let grid = square(0.1, 0.5);
    let f = ScalarField::from_fn(grid, |x, y| (x.abs() < 1e-9 && y.abs() < 1e-9).then_some(1.0)).unwrap();
    assert!(matches!(gradient(&f), Err(Error::DegenerateMask(_))));
}

#[test]
fn affine_residuals_vanish() {
    let f = field(square(0.05, 1.0), |x, y| 0.3 * x - 0.2 * y + 1.0);
    // Rounding in f is amplified by 1/h^2 through two difference quotients.
    assert!(minimal_residual(&f).unwrap().max_abs() < 1e-11);
    assert!(maximal_residual(&f).unwrap().max_abs() < 1e-11);
}

#[test]
fn maximal_residual_requires_spacelike_slope() {
    let f = field(square(0.05, 1.0), |x, _| 1.5 * x);
    assert!(matches!(maximal_residual(&f), Err(Error::NotSpacelike(_))));
    assert!(matches!(
        dualize_maximal_to_minimal(&f, 1.0),
        Err(Error::NotSpacelike(_))
    ));
}

#[test]
fn catenoid_residual_is_second_order() {
    let catenoid = |x: f64, y: f64| x.hypot(y).acosh();
    let res: Vec<f64> = [0.02, 0.01]
        .iter()
        .map(|&h| {
            minimal_residual(&sector(h, 1.5, 2.5, 0.2, 1.2, catenoid))
                .unwrap()
                .max_abs()
        })
        .collect();
    let order = (res[0] / res[1]).log2();
    assert!(order >= 1.9, "residuals {res:?}, order {order}");
}

#[test]
fn dual_of_zero_and_affine() {
    let z = dualize_minimal_to_maximal(&field(square(0.1, 1.0), |_, _| 0.0), 1e-12).unwrap();
    assert_eq!(z.max_abs(), 0.0);
    let d = dualize(&field(square(0.1, 1.0), |x, _| x), GraphKind::Minimal, 1e-12).unwrap();
    let grid = *d.field.grid();
    let y0 = grid.y(0);
    for (_, y, v) in d.field.samples() {
        assert!((v - (y - y0) / 2f64.sqrt()).abs() < 1e-12);
    }
    assert!((d.max_slope - 1.0 / 2f64.sqrt()).abs() < 1e-15);
}

#[test]
fn dual_of_spacelike_plane() {
    // f = y / sqrt 2 has f^sharp = x + const.
    let d = dualize_maximal_to_minimal(&field(square(0.1, 1.0), |_, y| y / 2f64.sqrt()), 1e-12).unwrap();
    let x0 = d.grid().x(0);
    for (x, _, v) in d.samples() {
        assert!((v - (x - x0)).abs() < 1e-8);
    }
}

#[test]
fn curl_equals_residual() {
    let f = field(square(0.05, 1.0), |x, y| 0.3 * x * x - 0.1 * x * y + 0.2 * y.sin());
    let res = minimal_residual(&f).unwrap();
    let curl = curl_field(&f, GraphKind::Minimal).unwrap();
    assert!(res.difference(&curl).unwrap().max_abs() <= 1e-12);
    let res = maximal_residual(&f).unwrap();
    let curl = curl_field(&f, GraphKind::Maximal).unwrap();
    let sum: Vec<f64> = res.values().iter().zip(curl.values()).map(|(a, b)| a + b).collect();
    assert!(sum.iter().all(|s| s.abs() <= 1e-12));
}

#[test]
fn non_minimal_input_fails_curl_certificate() {
    let f = field(square(0.05, 1.0), |x, y| x * x + y * y);
    match dualize_minimal_to_maximal(&f, 1e-3) {
        Err(Error::Curl { curl, .. }) => assert!(curl > 1.0),
        other => panic!("expected CurlError, got {other:?}"),
    }
}

#[test]
fn annulus_is_not_simply_connected() {
    let grid = square(0.05, 1.0);
    let f = ScalarField::from_fn(grid, |x, y| {
        let r = x.hypot(y);
        (0.3..=0.9).contains(&r).then_some(0.0)
    })
    .unwrap();
    assert!(matches!(f.check_simply_connected(), Err(Error::NotSimplyConnected(_))));
    assert!(matches!(
        dualize_minimal_to_maximal(&f, 1.0),
        Err(Error::NotSimplyConnected(_))
    ));
}

/// `int_a^p W . dl` along the straight segment, for the helicoid's rotated flux
/// `W = -(x, y) / (r sqrt(r^2 + 1))`.
fn helicoid_oracle(a: [f64; 2], p: [f64; 2]) -> f64 {
    let d = [p[0] - a[0], p[1] - a[1]];
    let [v] = integrate_real(
        |t| {
            let (x, y) = (a[0] + t * d[0], a[1] + t * d[1]);
            let r = x.hypot(y);
            let s = -(x * d[0] + y * d[1]) / (r * (r * r + 1.0).sqrt());
            Ok([Complex64::new(s, 0.0)])
        },
        0.0,
        1.0,
        1e-13,
    )
    .unwrap();
    v.re
}

fn helicoid_error(h: f64) -> f64 {
    let f = sector(h, 2.0, 2.5, 0.2, 0.7, |x, y| y.atan2(x));
    let dual = dualize_minimal_to_maximal(&f, 1.0).unwrap();
    let grid = *dual.grid();
    let anchor = dual.mask().iter().position(|&m| m).unwrap();
    let a = [grid.x(anchor % grid.nx), grid.y(anchor / grid.nx)];
    let mut worst = 0.0_f64;
    for (x, y, v) in dual.samples() {
        worst = worst.max((v - helicoid_oracle(a, [x, y])).abs());
        // Closed form of the same potential: -asinh(r) + const.
        let closed = -(x.hypot(y)).asinh() + a[0].hypot(a[1]).asinh();
        assert!((helicoid_oracle(a, [x, y]) - closed).abs() < 1e-10);
    }
    worst
}

#[test]
fn helicoid_dual_converges() {
    let e1 = helicoid_error(0.02);
    let e2 = helicoid_error(0.01);
    let order = (e1 / e2).log2();
    assert!(order >= 1.9, "errors {e1:e} {e2:e}, order {order}");
}

#[test]
fn round_trip_recovers_field_up_to_constant() {
    let f = sector(0.01, 2.0, 2.5, 0.2, 0.7, |x, y| y.atan2(x));
    let flat = dualize_minimal_to_maximal(&f, 1.0).unwrap();
    let back = dualize_maximal_to_minimal(&flat, 1.0).unwrap();
    // `back` lives on the original nodes, on a shrunken mask.
    let diff = back.difference(&f).unwrap();
    assert!(diff.count() > 0);
    assert!(diff.oscillation_half() < 1e-5, "{}", diff.oscillation_half());
}

#[test]
fn csv_round_trip() {
    let f = sector(0.1, 1.0, 2.0, 0.1, 1.3, |x, y| x - y);
    let dir = tempfile::tempdir().unwrap();
    let stem = dir.path().join("field");
    save_field(&f, &stem).unwrap();
    let g = load_field(&stem).unwrap();
    assert_eq!(f.mask(), g.mask());
    for (a, b) in f.values().iter().zip(g.values()) {
        assert!((a - b).abs() <= 1e-15 * a.abs().max(1.0));
    }
}

#[test]
fn csv_rejects_off_grid_rows() {
    let grid = GridSpec::new([0.0, 0.0], 0.5, 3, 3).unwrap();
    let data = "x,y,value\n0.25,0.0,1.0\n";
    assert!(matches!(
        ScalarField::read_csv(grid, data.as_bytes()),
        Err(Error::GridMismatch(_))
    ));
}
