use num_complex::Complex64;
use proptest::prelude::*;

use super::catalog::{self, catalog};
use super::*;
use crate::complex::{HolomorphicForm, Poly, RationalHolomorphic};
use crate::error::Error;
use crate::lorentz::{cross_lorentz, inner, Ambient, Tangent3};

const TOL: f64 = 1e-10;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn close3(a: &Tangent3, b: [f64; 3], tol: f64) -> bool {
    a.x.iter().zip(b).all(|(p, q)| (p - q).abs() < tol)
}

fn plane() -> WeierstrassData {
    catalog::plane(1.5).unwrap()
}

fn z_plus_3(radius: f64) -> WeierstrassData {
    catalog::perturbed_plane(3.0, radius).unwrap()
}

fn constant(v: Complex64, r: f64) -> RationalHolomorphic {
    RationalHolomorphic::constant(v, r).unwrap()
}

#[test]
fn plane_curve_has_expected_constants() {
    let curve = build_isotropic_maximal(&plane()).unwrap();
    let expected = [c(1.25, 0.0), c(0.0, -0.75), c(-1.0, 0.0)];
    for (form, e) in curve.psi().iter().zip(expected) {
        assert!(form.density.coeff_discrepancy(&constant(e, 1.5)) < 1e-16);
    }
    // 25/16 - 9/16 - 1 = 0
    assert!(curve.isotropy_residual().unwrap() < 1e-16);
}

#[test]
fn perturbed_curve_first_component() {
    let curve = build_isotropic_maximal(&z_plus_3(1.0)).unwrap();
    // ((z+3)^2 + 1) / (2 (z+3))
    let expected =
        RationalHolomorphic::new(Poly::from_real(&[10.0, 6.0, 1.0]), Poly::from_real(&[6.0, 2.0]), 1.0).unwrap();
    assert!(curve.psi()[0].density.coeff_discrepancy(&expected) < 1e-14);
    assert!(curve.isotropy_residual().unwrap() < ISOTROPY_TOL);
}

#[test]
fn euclidean_plane_curve() {
    let g = constant(c(2.0, 0.0), 1.0);
    let curve = build_isotropic_euclidean(&g, &HolomorphicForm::dz(1.0).unwrap()).unwrap();
    assert_eq!(curve.ambient(), Ambient::Euclidean);
    let expected = [c(-0.75, 0.0), c(0.0, 1.25), c(1.0, 0.0)];
    for (form, e) in curve.psi().iter().zip(expected) {
        assert!(form.density.coeff_discrepancy(&constant(e, 1.0)) < 1e-16);
    }
    assert!(curve.isotropy_residual().unwrap() < 1e-16);
}

#[test]
fn every_catalog_curve_is_isotropic() {
    for entry in catalog().unwrap() {
        let lor = build_isotropic_maximal(&entry.data).unwrap();
        let euc = build_isotropic_euclidean(entry.data.g(), entry.data.dh()).unwrap();
        assert!(lor.isotropy_residual().unwrap() < ISOTROPY_TOL, "{}", entry.name);
        assert!(euc.isotropy_residual().unwrap() < ISOTROPY_TOL, "{}", entry.name);
    }
}

#[test]
fn eta_form_agrees_with_dh_form() {
    let data = catalog::rational(0.9).unwrap();
    let eta = HolomorphicForm::new(data.dh().density.div(data.g()).unwrap());
    let from_eta = maximal_triple_from_eta(data.g(), &eta).unwrap();
    let from_dh = build_isotropic_maximal(&data).unwrap();
    for z in IsotropicCurve::sample_points(0.9, 16) {
        let a = from_eta.eval(z).unwrap();
        let b = from_dh.eval(z).unwrap();
        for k in 0..3 {
            assert!((a[k] - b[k]).norm() < 1e-12 * (1.0 + b[k].norm()));
        }
    }
    let converted = WeierstrassData::from_eta(
        data.g().clone(),
        eta,
        0.9,
        c(0.0, 0.0),
        Tangent3::lorentzian(0.0, 0.0, 0.0),
        DatumKind::MaximalGraph,
    )
    .unwrap();
    assert!(converted.dh().density.coeff_discrepancy(&data.dh().density) < 1e-12);
}

#[test]
fn plane_immersion_values() {
    let im = Immersion::from_data(&plane()).unwrap();
    assert!(close3(
        &immerse(&im, c(1.0, 0.0), TOL).unwrap(),
        [1.25, 0.0, -1.0],
        1e-14
    ));
    assert!(close3(
        &immerse(&im, c(0.0, 1.0), TOL).unwrap(),
        [0.0, 0.75, 0.0],
        1e-14
    ));
    assert!(close3(
        &immerse(&im, c(0.0, 0.0), TOL).unwrap(),
        [0.0; 3],
        f64::MIN_POSITIVE
    ));

    assert!(close3(
        &conjugate_immerse(&im, c(1.0, 0.0), TOL).unwrap(),
        [0.0, -0.75, 0.0],
        1e-14
    ));
    assert!(close3(
        &conjugate_immerse(&im, c(0.0, 1.0), TOL).unwrap(),
        [1.25, 0.0, -1.0],
        1e-14
    ));
    assert!(close3(
        &conjugate_immerse(&im, c(0.0, 0.0), TOL).unwrap(),
        [0.0; 3],
        f64::MIN_POSITIVE
    ));
}

#[test]
fn immerse_respects_base_value() {
    let data = WeierstrassData::new(
        constant(c(2.0, 0.0), 1.0),
        HolomorphicForm::dz(1.0).unwrap(),
        1.0,
        c(0.2, -0.1),
        Tangent3::lorentzian(1.0, 2.0, 3.0),
        DatumKind::MaximalGraph,
    )
    .unwrap();
    let im = Immersion::from_data(&data).unwrap();
    assert!(close3(
        &immerse(&im, c(0.2, -0.1), TOL).unwrap(),
        [1.0, 2.0, 3.0],
        1e-15
    ));
}

#[test]
fn immerse_outside_domain_fails() {
    let im = Immersion::from_data(&catalog::plane(0.5).unwrap()).unwrap();
    assert!(matches!(immerse(&im, c(0.6, 0.0), TOL), Err(Error::Domain { .. })));
}

#[test]
fn conjugate_curve_examples() {
    let curve = build_isotropic_maximal(&plane()).unwrap();
    let conj = conjugate_curve(&curve);
    let expected = [c(0.0, -1.25), c(-0.75, 0.0), c(0.0, 1.0)];
    for (form, e) in conj.psi().iter().zip(expected) {
        assert_eq!(form.density.coeff_discrepancy(&constant(e, 1.5)), 0.0);
    }
    let twice = conjugate_curve(&conj);
    assert_eq!(twice.coeff_discrepancy(&curve.scale(c(-1.0, 0.0))), 0.0);
    assert!(conj.isotropy_residual().unwrap() < 1e-16);
}

#[test]
fn plane_differential_is_conformal() {
    let im = Immersion::from_data(&plane()).unwrap();
    for w in [c(0.0, 0.0), c(0.3, -0.9), c(-1.2, 0.4)] {
        let (xu, xv) = differential(&im, w).unwrap();
        assert!(close3(&xu, [1.25, 0.0, -1.0], 1e-15));
        assert!(close3(&xv, [0.0, 0.75, 0.0], 1e-15));
        assert!((inner(&xu, &xu).unwrap() - 9.0 / 16.0).abs() < 1e-15);
        assert!((inner(&xv, &xv).unwrap() - 9.0 / 16.0).abs() < 1e-15);
        assert_eq!(inner(&xu, &xv).unwrap(), 0.0);
    }
}

#[test]
fn gauss_map_of_plane() {
    let data = plane();
    let n = gauss_map(&data, c(0.4, 0.1)).unwrap();
    assert!(close3(&n, [-4.0 / 3.0, 0.0, 5.0 / 3.0], 1e-15));
    let e3 = Tangent3::lorentzian(0.0, 0.0, 1.0);
    assert!((inner(&n, &e3).unwrap() + 5.0 / 3.0).abs() < 1e-15);
    assert!((inner(&n, &n).unwrap() + 1.0).abs() < 1e-10);
}

#[test]
fn gauss_map_is_positive_multiple_of_frame_cross_product() {
    for entry in catalog().unwrap() {
        let im = Immersion::from_data(&entry.data).unwrap();
        for w in IsotropicCurve::sample_points(entry.data.domain_radius(), 8) {
            let n = gauss_map(&entry.data, w).unwrap();
            let (xu, xv) = differential(&im, w).unwrap();
            let m = cross_lorentz(&xu, &xv).unwrap();
            let e = inner(&xu, &xu).unwrap();
            // For a conformal frame <m, m> = -E^2, so N = m / E.
            assert!(m.x[2] > 0.0);
            assert!(close3(&(m * (1.0 / e)), n.x, 1e-12), "{}", entry.name);
            assert!((inner(&n, &n).unwrap() + 1.0).abs() < 1e-10);
        }
    }
}

#[test]
fn sigma_tau_examples() {
    let (s, t) = sigma_tau(&plane(), c(1.0, 0.0), TOL).unwrap();
    assert!((s - c(-1.0, 0.0)).norm() < 1e-14);
    assert!((t - c(0.25, 0.0)).norm() < 1e-14);

    let (s, t) = sigma_tau(&z_plus_3(1.0), c(1.0, 0.0), TOL).unwrap();
    assert!((s - c(-1.75, 0.0)).norm() < 1e-10);
    assert!((t - c(0.5 * (4.0f64 / 3.0).ln(), 0.0)).norm() < 1e-10);

    let (s, t) = sigma_tau(&z_plus_3(1.0), c(0.0, 0.0), TOL).unwrap();
    assert_eq!((s, t), (c(0.0, 0.0), c(0.0, 0.0)));
}

#[test]
fn projection_identity_examples() {
    let p = projection_identities(&plane(), c(1.0, 0.0), TOL).unwrap();
    assert!((p.pi_x - c(1.25, 0.0)).norm() < 1e-14);
    assert!((p.tau_bar_minus_sigma - c(1.25, 0.0)).norm() < 1e-14);
    assert!((p.pi_x_star - c(0.0, -0.75)).norm() < 1e-14);
    assert!((p.i_tau_bar_plus_sigma - c(0.0, -0.75)).norm() < 1e-14);

    let p = projection_identities(&plane(), c(0.0, 0.0), TOL).unwrap();
    assert_eq!(p.max_discrepancy(), 0.0);
    assert_eq!(p.pi_x.norm() + p.pi_x_star.norm(), 0.0);
}

#[test]
fn rejects_non_graph_data() {
    let g = RationalHolomorphic::polynomial(Poly::from_real(&[1.2, 1.0]), 0.5).unwrap();
    let r = WeierstrassData::maximal_graph(g.clone(), HolomorphicForm::dz(0.5).unwrap(), 0.5);
    assert!(matches!(r, Err(Error::NotGraphDatum(_))));
    let general = WeierstrassData::new(
        g,
        HolomorphicForm::dz(0.5).unwrap(),
        0.5,
        c(0.0, 0.0),
        Tangent3::lorentzian(0.0, 0.0, 0.0),
        DatumKind::General,
    );
    assert!(general.is_ok());
}

#[test]
fn rejects_common_zero_and_poles() {
    let g = constant(c(2.0, 0.0), 1.0);
    let dh = HolomorphicForm::new(RationalHolomorphic::polynomial(Poly::from_real(&[-0.25, 1.0]), 1.0).unwrap());
    let r = WeierstrassData::maximal_graph(g.clone(), dh, 1.0);
    assert!(matches!(r, Err(Error::CommonZero(_))));

    let g_pole = RationalHolomorphic::new(Poly::from_real(&[3.0]), Poly::from_real(&[1.0, -1.0 / 0.8]), 0.5).unwrap();
    let r = WeierstrassData::maximal_graph(g_pole, HolomorphicForm::dz(1.0).unwrap(), 1.0);
    assert!(matches!(r, Err(Error::PoleInDomain { .. })));
}

#[test]
fn data_json_round_trip() {
    let data = catalog::rational(0.9).unwrap();
    let s = serde_json::to_string(&data).unwrap();
    assert!(s.contains(r#""kind":"maximal-graph""#));
    assert!(s.contains(r#""base":[0.0,0.0]"#));
    let back: WeierstrassData = serde_json::from_str(&s).unwrap();
    assert_eq!(back, data);
}

fn catalog_point() -> impl Strategy<Value = (usize, Complex64)> {
    (0usize..10, 0.0f64..1.0, 0.0f64..std::f64::consts::TAU).prop_map(|(i, s, t)| {
        let r = catalog::CATALOG_RADII[i / 5];
        (i, Complex64::from_polar(r * s.sqrt(), t))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn conformal_spacelike_frames((i, w) in catalog_point()) {
        let data = catalog().unwrap().swap_remove(i).data;
        let im = Immersion::from_data(&data).unwrap();
        let (xu, xv) = differential(&im, w).unwrap();
        let e = inner(&xu, &xu).unwrap();
        let g = inner(&xv, &xv).unwrap();
        prop_assert!(e > 0.0);
        prop_assert!((e - g).abs() < 1e-9 * e);
        prop_assert!(inner(&xu, &xv).unwrap().abs() < 1e-9 * e);
    }

    #[test]
    fn double_conjugate_reflects((i, w) in catalog_point()) {
        let mut data = catalog().unwrap().swap_remove(i).data;
        data = WeierstrassData::new(
            data.g().clone(), data.dh().clone(), data.domain_radius(),
            data.base_point(), Tangent3::lorentzian(0.5, -1.0, 2.0), data.kind(),
        ).unwrap();
        let im = Immersion::from_data(&data).unwrap();
        let twice = im.with_curve(conjugate_curve(&conjugate_curve(im.curve()))).unwrap();
        let x = immerse(&im, w, TOL).unwrap();
        let y = immerse(&twice, w, TOL).unwrap();
        let expected = -x + data.base_value() * 2.0;
        prop_assert!(close3(&y, expected.x, 2.0 * TOL));
    }

    #[test]
    fn conjugate_differential_rotates((i, w) in catalog_point(), a in -1.0f64..1.0, b in -1.0f64..1.0) {
        let data = catalog().unwrap().swap_remove(i).data;
        let im = Immersion::from_data(&data).unwrap();
        let conj = im.with_curve(conjugate_curve(im.curve())).unwrap();
        let (xu, xv) = differential(&im, w).unwrap();
        let (su, sv) = differential(&conj, w).unwrap();
        // dX*(a, b) = -dX(J(a, b)) with J(a, b) = (-b, a)
        let lhs = su * a + sv * b;
        let rhs = -(xu * (-b) + xv * a);
        prop_assert!(close3(&lhs, rhs.x, 1e-14));
        prop_assert!(close3(&su, (-xv).x, 1e-15));
        prop_assert!(close3(&sv, xu.x, 1e-15));
    }

    #[test]
    fn projection_identities_hold((i, w) in catalog_point()) {
        let data = catalog().unwrap().swap_remove(i).data;
        let p = projection_identities(&data, w, TOL).unwrap();
        prop_assert!(p.max_discrepancy() < 10.0 * TOL);
    }

    #[test]
    fn projection_expands_lengths((i, w) in catalog_point(), t in 0.0f64..std::f64::consts::TAU) {
        let data = catalog().unwrap().swap_remove(i).data;
        let im = Immersion::from_data(&data).unwrap();
        let (xu, xv) = differential(&im, w).unwrap();
        let v = xu * t.cos() + xv * t.sin();
        let projected = v.x[0] * v.x[0] + v.x[1] * v.x[1];
        let form = v.quadratic_form();
        prop_assert!(form > 0.0);
        prop_assert!(projected >= form);
    }
}
