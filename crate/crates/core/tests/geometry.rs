use giantqed::geometry::*;
use proptest::prelude::*;
use std::f64::consts::PI;

const C6: f64 = 2.0 * PI * 2.8e12;
const OMEGA_E: f64 = 2.0 * PI * 1009e12;

#[test]
fn vdw_shift_for_reference_pair() {
    let v6 = vdw_shift(C6, 3.1).unwrap();
    // 2π·2.8e12/3.1⁶
    assert!((v6 - 1.98e10).abs() / 1.98e10 < 5e-3, "{v6:e}");
    assert!((per_us(v6) - 1.98e4).abs() < 1e2);
    assert!((vdw_shift(C6, 6.2).unwrap() - v6 / 64.0).abs() < 1e-6 * v6);
    assert_eq!(vdw_shift(0.0, 3.1).unwrap(), 0.0);
    assert!(vdw_shift(C6, 0.0).is_err());
}

#[test]
fn aligned_phase_near_forty_one_and_a_half_pi() {
    let phi = phase_from_separation(OMEGA_E, 3.1, 0.5 * SPEED_OF_LIGHT).unwrap();
    assert!((phi / PI - 41.6).abs() < 0.2, "{}", phi / PI);
    assert_eq!(phase_from_separation(OMEGA_E, 0.0, 0.5 * SPEED_OF_LIGHT).unwrap(), 0.0);
    let twice = phase_from_separation(OMEGA_E, 6.2, 0.5 * SPEED_OF_LIGHT).unwrap();
    assert!((twice - 2.0 * phi).abs() < 1e-12 * phi);
}

#[test]
fn projection() {
    assert_eq!(projected_separation(3.1, 0.0).unwrap(), 3.1);
    let d = projected_separation(3.1, 0.09 * PI).unwrap();
    assert!((d - 2.977).abs() < 1e-3, "{d}");
    assert!(projected_separation(3.1, PI / 2.0 - 1e-9).unwrap() < 1e-8);
    assert!(projected_separation(3.1, PI / 2.0).is_err());
}

#[test]
fn coupling_width_formula() {
    let h: f64 = 300.0;
    let theta = coupling_width(h * 2f64.sqrt(), h, OMEGA_E, 0.5 * SPEED_OF_LIGHT).unwrap();
    let want = 2.0 * h * 1e-9 * OMEGA_E / (0.5 * SPEED_OF_LIGHT);
    assert!((theta - want).abs() < 1e-12 * want);
    // r̄ = 583 nm, h = 449 nm with v_g = c/2 gives ≈ 31.4 rad, not 5π/2
    let t = coupling_width(583.0, 449.0, OMEGA_E, 0.5 * SPEED_OF_LIGHT).unwrap();
    assert!((t - 31.4).abs() < 0.2, "{t}");
    assert!(coupling_width(449.0 + 1e-9, 449.0, OMEGA_E, 0.5 * SPEED_OF_LIGHT).unwrap() < 1e-3);
    assert!(coupling_width(400.0, 449.0, OMEGA_E, 0.5 * SPEED_OF_LIGHT).is_err());
}

#[test]
fn round_trip_through_lab_geometry() {
    let g = LabGeometry::default();
    let rep = g.derive().unwrap();
    let direct = phase_from_separation(g.omega_e, g.r, g.v_g).unwrap();
    assert_eq!(rep.phi, direct);
    assert_eq!(rep.d, g.r);
}

#[test]
fn tilting_sweeps_phase_down_by_cosine() {
    let angles: Vec<f64> = (0..=90).map(|k| 0.09 * PI * k as f64 / 90.0).collect();
    let phis: Vec<f64> = angles
        .iter()
        .map(|&a| LabGeometry { misalign_angle: a, ..LabGeometry::default() }.derive().unwrap().phi)
        .collect();
    assert!(phis.windows(2).all(|w| w[1] < w[0]));
    let ratio = phis.last().unwrap() / phis[0];
    assert!((ratio / (0.09 * PI).cos() - 1.0).abs() < 0.01);
}

proptest! {
    #[test]
    fn phase_is_linear_in_separation(d in 0.0f64..100.0, k in 0.1f64..10.0) {
        let v = 0.5 * SPEED_OF_LIGHT;
        let a = phase_from_separation(OMEGA_E, d, v).unwrap();
        let b = phase_from_separation(OMEGA_E, k * d, v).unwrap();
        prop_assert!((b - k * a).abs() <= 1e-12 * b.abs().max(1.0));
    }
}
