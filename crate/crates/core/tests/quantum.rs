use giantqed::quantum::basis::{self, qubit_lowering, ATOM_LABELS, GG, GR, PAIR_LABELS, RG, RR};
use giantqed::quantum::{cross_dissipator, eigenvalues, lindblad_dissipator, ComplexMatrix, DensityMatrix, C64};
use giantqed::Error;
use proptest::prelude::*;

fn c(re: f64) -> C64 {
    C64::new(re, 0.0)
}

/// Triple-loop product, written without the matrix type's own routines.
fn loop_product(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    let n = a.dim();
    let mut out = ComplexMatrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            let mut s = C64::new(0.0, 0.0);
            for k in 0..n {
                s += a[(i, k)] * b[(k, j)];
            }
            out[(i, j)] = s;
        }
    }
    out
}

fn loop_adjoint(a: &ComplexMatrix) -> ComplexMatrix {
    ComplexMatrix::from_fn(a.dim(), |i, j| a[(j, i)].conj())
}

fn loop_cross(a: &ComplexMatrix, b: &ComplexMatrix, rho: &ComplexMatrix) -> ComplexMatrix {
    let bd = loop_adjoint(b);
    let jump = loop_product(&loop_product(a, rho), &bd);
    let m = loop_product(&bd, a);
    let anti = &loop_product(&m, rho) + &loop_product(rho, &m);
    &jump - &anti.scale_real(0.5)
}

#[test]
fn lindblad_examples() {
    let sm = qubit_lowering();
    let e = ComplexMatrix::unit(2, 1, 1);
    let g = ComplexMatrix::unit(2, 0, 0);
    assert_eq!(lindblad_dissipator(&sm, &e).unwrap(), &g - &e);
    let any = ComplexMatrix::from_rows([[c(0.3), C64::new(0.1, 0.2)], [C64::new(0.1, -0.2), c(0.7)]]);
    assert_eq!(lindblad_dissipator(&ComplexMatrix::identity(2), &any).unwrap().max_abs(), 0.0);
    assert_eq!(lindblad_dissipator(&sm, &g).unwrap().max_abs(), 0.0);
    assert!(matches!(
        lindblad_dissipator(&sm, &ComplexMatrix::zeros(4)),
        Err(Error::DimensionMismatch { .. })
    ));
}

#[test]
fn cross_examples() {
    let s1 = basis::sigma_minus(1);
    let s2 = basis::sigma_minus(2);
    let rho = ComplexMatrix::unit(4, RG, GR);

    // frozen from the loop oracle: |gg><gg| − ½(|r1g2><r1g2| + |g1r2><g1r2|)
    let mut want = ComplexMatrix::zeros(4);
    want[(GG, GG)] = c(1.0);
    want[(RG, RG)] = c(-0.5);
    want[(GR, GR)] = c(-0.5);
    assert_eq!(loop_cross(&s1, &s2, &rho), want);
    assert_eq!(cross_dissipator(&s1, &s2, &rho).unwrap(), want);

    let sm = qubit_lowering();
    let r = ComplexMatrix::from_rows([[c(0.4), C64::new(0.2, 0.1)], [C64::new(0.2, -0.1), c(0.6)]]);
    assert_eq!(cross_dissipator(&sm, &sm, &r).unwrap(), lindblad_dissipator(&sm, &r).unwrap());
    assert_eq!(cross_dissipator(&s1, &s2, &ComplexMatrix::zeros(4)).unwrap().max_abs(), 0.0);
    assert!(cross_dissipator(&s1, &sm, &rho).is_err());
}

#[test]
fn partial_trace_examples() {
    let rr = DensityMatrix::basis_state(RR, &PAIR_LABELS).unwrap();
    let r1 = rr.partial_trace(1).unwrap();
    assert_eq!(r1.matrix(), &ComplexMatrix::unit(2, 1, 1));

    let bell = DensityMatrix::pure(&basis::dressed_state(1.0), &PAIR_LABELS).unwrap();
    let half = ComplexMatrix::identity(2).scale_real(0.5);
    assert!(bell.partial_trace(2).unwrap().matrix().max_abs_diff(&half) < 1e-15);

    let mixed = DensityMatrix::maximally_mixed(&PAIR_LABELS);
    assert!(mixed.partial_trace(1).unwrap().matrix().max_abs_diff(&half) < 1e-15);

    let q = DensityMatrix::basis_state(0, &ATOM_LABELS).unwrap();
    assert!(matches!(q.partial_trace(1), Err(Error::DimensionMismatch { .. })));
    assert!(rr.partial_trace(3).is_err());
}

#[test]
fn partial_trace_of_product_state() {
    // |r1> ⊗ |g2> keeps atom 1 excited and atom 2 in ground
    let s = DensityMatrix::basis_state(RG, &PAIR_LABELS).unwrap();
    assert_eq!(s.partial_trace(1).unwrap().population(1), 1.0);
    assert_eq!(s.partial_trace(2).unwrap().population(0), 1.0);
}

#[test]
fn eigenvalue_examples() {
    let mut ev: Vec<f64> = eigenvalues(&ComplexMatrix::diag(&[c(1.0), c(2.0), c(3.0), c(4.0)]), "diag")
        .unwrap()
        .iter()
        .map(|z| z.re)
        .collect();
    ev.sort_by(f64::total_cmp);
    assert_eq!(ev, vec![1.0, 2.0, 3.0, 4.0]);
}

#[test]
fn validity_report() {
    let good = DensityMatrix::maximally_mixed(&PAIR_LABELS);
    assert!(good.validity().unwrap().is_physical());
    let bad = DensityMatrix::pair(ComplexMatrix::diag(&[c(1.2), c(-0.2), c(0.0), c(0.0)])).unwrap();
    let v = bad.validity().unwrap();
    assert!(!v.is_physical());
    assert!((v.min_eigenvalue + 0.2).abs() < 1e-15);
    assert!(DensityMatrix::checked(bad.into_matrix(), &PAIR_LABELS).is_err());
}

fn arb_matrix(n: usize) -> impl Strategy<Value = ComplexMatrix> {
    prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), n * n)
        .prop_map(move |v| ComplexMatrix::from_fn(n, |i, j| C64::new(v[i * n + j].0, v[i * n + j].1)))
}

fn arb_state() -> impl Strategy<Value = ComplexMatrix> {
    arb_matrix(4).prop_map(|a| {
        let rho = a.matmul(&a.adjoint());
        let tr = rho.trace().re.max(1e-12);
        rho.scale_real(1.0 / tr).hermitian_part()
    })
}

proptest! {
    #[test]
    fn dissipator_is_traceless(o in arb_matrix(4), rho in arb_matrix(4)) {
        let d = lindblad_dissipator(&o, &rho).unwrap();
        prop_assert!(d.trace().norm() < 1e-12);
    }

    #[test]
    fn dissipator_preserves_hermiticity(o in arb_matrix(4), rho in arb_state()) {
        let d = lindblad_dissipator(&o, &rho).unwrap();
        prop_assert!(d.hermiticity_error() < 1e-12);
    }

    #[test]
    fn partial_traces_have_unit_trace(rho in arb_state()) {
        let s = DensityMatrix::pair(rho).unwrap();
        for keep in [1u8, 2] {
            prop_assert!((s.partial_trace(keep).unwrap().matrix().trace() - 1.0).norm() < 1e-12);
        }
    }

    #[test]
    fn adjoint_involution(m in arb_matrix(4)) {
        prop_assert_eq!(m.adjoint().adjoint(), m);
    }

    #[test]
    fn hermitian_spectrum_is_real(m in arb_matrix(4)) {
        let h = m.hermitian_part();
        let ev = eigenvalues(&h, "proptest").unwrap();
        prop_assert!(ev.iter().all(|z| z.im.abs() < 1e-10));
        let sum: f64 = ev.iter().map(|z| z.re).sum();
        prop_assert!((sum - h.trace().re).abs() < 1e-12);
    }
}

#[test]
fn symmetrised_cross_term_is_hermitian_and_traceless() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2024);
    let rand_m = |rng: &mut rand_chacha::ChaCha8Rng| {
        ComplexMatrix::from_fn(4, |_, _| C64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
    };
    for _ in 0..100 {
        let a = rand_m(&mut rng);
        let b = rand_m(&mut rng);
        let rho = rand_m(&mut rng).hermitian_part();
        let sum = &cross_dissipator(&a, &b, &rho).unwrap() + &cross_dissipator(&b, &a, &rho).unwrap();
        assert!(sum.hermiticity_error() < 1e-12);
        assert!(sum.trace().norm() < 1e-12);
        // equals X + X† on Hermitian input
        let x = cross_dissipator(&a, &b, &rho).unwrap();
        assert!(sum.max_abs_diff(&(&x + &x.adjoint())) < 1e-12);
    }
}
