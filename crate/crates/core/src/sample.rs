//! Seeded random inputs for property checks and benchmarks.

use rand::Rng;

use crate::ga::{Multivector, Signature};
use crate::gspinor::{CenterScalar, GSpinor};
use crate::iso::AlgebraTag;
use crate::qspinor::QSpinor;
use crate::quaternion::Quaternion;
use crate::stereo::PlanePoint;
use crate::dirac::DiracSpinor4;

/// Multivector with coefficients uniform in `[-1, 1]`.
pub fn multivector<R: Rng + ?Sized>(rng: &mut R, sig: &Signature) -> Multivector {
    let coeffs = (0..sig.size()).map(|_| rng.gen_range(-1.0..=1.0)).collect();
    Multivector::from_coeffs(sig, coeffs).expect("finite coefficients")
}

/// Multivector with integer coefficients in `[-3, 3]`; products stay exact.
pub fn int_multivector<R: Rng + ?Sized>(rng: &mut R, sig: &Signature) -> Multivector {
    let coeffs = (0..sig.size())
        .map(|_| f64::from(rng.gen_range(-3i32..=3)))
        .collect();
    Multivector::from_coeffs(sig, coeffs).expect("finite coefficients")
}

pub fn quaternion<R: Rng + ?Sized>(rng: &mut R) -> Quaternion {
    Quaternion::new(
        rng.gen_range(-1.0..=1.0),
        [
            rng.gen_range(-1.0..=1.0),
            rng.gen_range(-1.0..=1.0),
            rng.gen_range(-1.0..=1.0),
        ],
    )
}

pub fn int_quaternion<R: Rng + ?Sized>(rng: &mut R) -> Quaternion {
    let mut c = || f64::from(rng.gen_range(-5i32..=5));
    Quaternion::new(c(), [c(), c(), c()])
}

/// Direction uniform on the unit 2-sphere.
pub fn unit3<R: Rng + ?Sized>(rng: &mut R) -> [f64; 3] {
    loop {
        let v = [
            rng.gen_range(-1.0..=1.0),
            rng.gen_range(-1.0..=1.0),
            rng.gen_range(-1.0f64..=1.0),
        ];
        let n = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
        if n > 1e-3 && n <= 1.0 {
            return [v[0] / n, v[1] / n, v[2] / n];
        }
    }
}

/// Chart point with `|x|` uniform in `[0, radius)`.
pub fn plane_point<R: Rng + ?Sized>(rng: &mut R, radius: f64) -> PlanePoint {
    let d = unit3(rng);
    let r = rng.gen_range(0.0..radius);
    PlanePoint::new([d[0] * r, d[1] * r, d[2] * r])
}

pub fn vector3<R: Rng + ?Sized>(rng: &mut R) -> [f64; 3] {
    [
        rng.gen_range(-1.0..=1.0),
        rng.gen_range(-1.0..=1.0),
        rng.gen_range(-1.0..=1.0),
    ]
}

fn center<R: Rng + ?Sized>(rng: &mut R) -> CenterScalar {
    CenterScalar::new(rng.gen_range(-1.0..=1.0), rng.gen_range(-1.0..=1.0))
}

/// G3 spinor with `|α0| ≥ 0.2`, or G1,2 spinor with `|α1| ≤ 0.9 |α0|`.
pub fn gspinor<R: Rng + ?Sized>(rng: &mut R, tag: AlgebraTag) -> GSpinor {
    loop {
        let a0 = center(rng);
        let a1 = center(rng);
        let ok = a0.abs() >= 0.2
            && (tag == AlgebraTag::Pauli3 || a1.abs() <= 0.9 * a0.abs());
        if ok {
            return GSpinor::new(tag, a0, a1).expect("g-spinor tag");
        }
    }
}

/// Quaternion spinor with `|q0| ≥ 0.3` and `|q1| ≤ 0.9 |q0|`.
pub fn qspinor<R: Rng + ?Sized>(rng: &mut R, tag: AlgebraTag) -> QSpinor {
    loop {
        let q0 = quaternion(rng);
        let q1 = quaternion(rng);
        if q0.norm() >= 0.3 && q1.norm() <= 0.9 * q0.norm() {
            return QSpinor::new(tag, q0, q1).expect("quaternion spinor tag");
        }
    }
}

/// Admissible quaternion spinor with `⟨q0† q1⟩₀ = 0`.
pub fn orthogonal_qspinor<R: Rng + ?Sized>(rng: &mut R, tag: AlgebraTag) -> QSpinor {
    let psi = qspinor(rng, tag);
    // drop the scalar part of q0† q1 by removing the q0 component from q1
    let n = psi.q0.norm_sq();
    let w0 = psi.w().s;
    let q1 = psi.q1 - psi.q0.scale(w0 / n);
    QSpinor::new(tag, psi.q0, q1).expect("quaternion spinor tag")
}

pub fn dirac<R: Rng + ?Sized>(rng: &mut R) -> DiracSpinor4 {
    let r: Vec<f64> = (0..8).map(|_| rng.gen_range(-1.0..=1.0)).collect();
    DiracSpinor4::from_reals(&r).expect("eight finite reals")
}
