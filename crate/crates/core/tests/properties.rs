use proptest::prelude::*;

use quatspin_core::ga::{Multivector, Signature};
use quatspin_core::quaternion::{quat_mul, Quaternion};
use quatspin_core::{dirac, gspinor, iso, quat_rep, stereo, AlgebraTag, DiracSpinor4, GSpinor, PlanePoint};

fn coeffs(n: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(-2.0f64..2.0, n)
}

fn int_coeffs(n: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec((-4i32..=4).prop_map(f64::from), n)
}

fn g4(c: Vec<f64>) -> Multivector {
    Multivector::from_coeffs(&Signature::euclidean4(), c).unwrap()
}

fn sta(c: Vec<f64>) -> Multivector {
    Multivector::from_coeffs(&Signature::spacetime(), c).unwrap()
}

fn quaternion() -> impl Strategy<Value = Quaternion> {
    prop::array::uniform4(-2.0f64..2.0).prop_map(Quaternion::from_array)
}

fn point(radius: f64) -> impl Strategy<Value = PlanePoint> {
    prop::array::uniform3(-radius..radius)
        .prop_filter("inside radius", move |x| x.iter().map(|c| c * c).sum::<f64>() < radius * radius)
        .prop_map(PlanePoint::new)
}

proptest! {
    #[test]
    fn integer_products_are_exactly_associative(a in int_coeffs(16), b in int_coeffs(16), c in int_coeffs(16)) {
        for sig in [Signature::euclidean4(), Signature::spacetime()] {
            let (a, b, c) = (
                Multivector::from_coeffs(&sig, a.clone()).unwrap(),
                Multivector::from_coeffs(&sig, b.clone()).unwrap(),
                Multivector::from_coeffs(&sig, c.clone()).unwrap(),
            );
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        }
    }

    #[test]
    fn reverse_reverses_products(a in coeffs(16), b in coeffs(16)) {
        let (a, b) = (sta(a), sta(b));
        prop_assert!((&a * &b).reverse().approx_eq(&(&b.reverse() * &a.reverse()), 1e-12));
    }

    #[test]
    fn grade_involution_is_an_automorphism(a in coeffs(8), b in coeffs(8)) {
        let sig = Signature::pauli3();
        let a = Multivector::from_coeffs(&sig, a).unwrap();
        let b = Multivector::from_coeffs(&sig, b).unwrap();
        prop_assert!((&a * &b).grade_involution().approx_eq(&(&a.grade_involution() * &b.grade_involution()), 1e-12));
    }

    #[test]
    fn quaternion_norm_is_multiplicative(a in quaternion(), b in quaternion()) {
        let ab = quat_mul(a, b);
        prop_assert!((ab.norm_sq() - a.norm_sq() * b.norm_sq()).abs() < 1e-12 * (1.0 + a.norm_sq() * b.norm_sq()));
        prop_assert!(quat_mul(a, b).conj().max_abs_diff(quat_mul(b.conj(), a.conj())) < 1e-14);
    }

    #[test]
    fn both_representations_are_homomorphisms(a in coeffs(16), b in coeffs(16)) {
        let (a, b) = (g4(a), g4(b));
        let ab = &a * &b;
        let e = quat_rep::rep_e(&a).unwrap().matmul(&quat_rep::rep_e(&b).unwrap());
        prop_assert!(quat_rep::rep_e(&ab).unwrap().max_abs_diff(&e) <= 1e-12);
        let i = quat_rep::rep_I(&a).unwrap().matmul(&quat_rep::rep_I(&b).unwrap());
        prop_assert!(quat_rep::rep_I(&ab).unwrap().max_abs_diff(&i) <= 1e-12);
        prop_assert!(quat_rep::unrep_e(&quat_rep::rep_e(&a).unwrap()).approx_eq(&a, 1e-14));
        prop_assert!(quat_rep::unrep_I(&quat_rep::rep_I(&a).unwrap()).approx_eq(&a, 1e-14));
    }

    #[test]
    fn reverse_is_conjugate_transpose(a in coeffs(16)) {
        let a = g4(a);
        let lhs = quat_rep::rep_e(&a.reverse()).unwrap();
        prop_assert!(lhs.max_abs_diff(&quat_rep::rep_e(&a).unwrap().star()) < 1e-14);
    }

    #[test]
    fn isomorphism_preserves_products_both_ways(a in coeffs(16), b in coeffs(16)) {
        let (ga, gb) = (g4(a.clone()), g4(b.clone()));
        let lhs = iso::g4_to_sta(&(&ga * &gb)).unwrap();
        prop_assert!(lhs.approx_eq(&(&iso::g4_to_sta(&ga).unwrap() * &iso::g4_to_sta(&gb).unwrap()), 1e-12));
        let (sa, sb) = (sta(a), sta(b));
        let lhs = iso::sta_to_g4(&(&sa * &sb)).unwrap();
        prop_assert!(lhs.approx_eq(&(&iso::sta_to_g4(&sa).unwrap() * &iso::sta_to_g4(&sb).unwrap()), 1e-12));
        prop_assert!(iso::sta_to_g4(&iso::g4_to_sta(&ga).unwrap()).unwrap().approx_eq(&ga, 0.0));
    }

    #[test]
    fn sphere_projection_round_trip(x in point(10.0)) {
        let back = stereo::project_sphere(&stereo::lift_sphere(&x)).unwrap();
        prop_assert!(back.max_abs_diff(&x) <= 1e-10 * (1.0 + x.norm_sq()));
    }

    #[test]
    fn hyper_projection_round_trip(x in point(0.999)) {
        let back = stereo::project_hyper(&stereo::lift_hyper(&x).unwrap());
        prop_assert!(back.max_abs_diff(&x) <= 1e-10);
    }

    #[test]
    fn rotor_sandwich_is_the_lift(x in point(5.0)) {
        let e0 = Multivector::generator(&Signature::euclidean4(), 0);
        let r = stereo::sphere_rotor(&x);
        let image = &(&r.rotor * &e0) * &r.rotor.reverse();
        prop_assert!(image.approx_eq(stereo::lift_sphere(&x).a_hat(), 1e-10));
        prop_assert!((0.0..std::f64::consts::PI).contains(&r.theta));
    }

    #[test]
    fn boost_sandwich_is_the_lift(x in point(0.99)) {
        let g0 = Multivector::generator(&Signature::spacetime(), 0);
        let b = stereo::hyper_boost(&x).unwrap();
        let image = &(&b.rotor * &g0) * &b.rotor.reverse();
        let lifted = stereo::lift_hyper(&x).unwrap();
        prop_assert!(image.approx_eq(lifted.a_hat(), 1e-10 * b.cosh_phi.powi(2)));
    }

    #[test]
    fn fidelity_is_symmetric(a in prop::array::uniform2(-3.0f64..3.0), b in prop::array::uniform2(-3.0f64..3.0)) {
        let sa = GSpinor::from_plane(AlgebraTag::Pauli3, a).unwrap();
        let sb = GSpinor::from_plane(AlgebraTag::Pauli3, b).unwrap();
        let fab = gspinor::fidelity(&sa, &sb).unwrap();
        let fba = gspinor::fidelity(&sb, &sa).unwrap();
        prop_assert!((fab - fba).abs() < 1e-12);
    }

    #[test]
    fn dirac_round_trip(r in prop::array::uniform8(-5.0f64..5.0)) {
        let phi = DiracSpinor4::from_reals(&r).unwrap();
        let psi = dirac::dirac_to_qspinor(&phi);
        prop_assert_eq!(dirac::qspinor_to_dirac(&psi), phi);
        let geo = dirac::dirac_to_geometric(&phi);
        let recovered = dirac::geometric_to_qspinor(&geo).unwrap();
        prop_assert!(dirac::qspinor_to_dirac(&recovered).max_abs_diff(&phi) <= 1e-12);
    }
}
