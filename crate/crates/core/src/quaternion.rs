//! Quaternions written as `x0 + i x` with `i = e123` and `x` a Euclidean
//! 3-vector, so the unit quaternions are the bivectors `i e1 = e23`,
//! `i e2 = -e13`, `i e3 = e12` of Cl(4,0).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::ga::{Multivector, Signature};

// Cl(4,0) blade masks (e0 is bit 0).
const E12: usize = 0b0110;
const E13: usize = 0b1010;
const E23: usize = 0b1100;

/// `s + i v` with `v = (x1, x2, x3)`.
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct Quaternion {
    pub s: f64,
    pub v: [f64; 3],
}

impl Quaternion {
    pub const ZERO: Quaternion = Quaternion { s: 0.0, v: [0.0; 3] };
    pub const ONE: Quaternion = Quaternion { s: 1.0, v: [0.0; 3] };

    pub const fn new(s: f64, v: [f64; 3]) -> Self {
        Quaternion { s, v }
    }

    pub const fn scalar(s: f64) -> Self {
        Quaternion { s, v: [0.0; 3] }
    }

    /// The pure quaternion `i x`.
    pub const fn pure(v: [f64; 3]) -> Self {
        Quaternion { s: 0.0, v }
    }

    /// `i e_k` for `k` in 1..=3.
    pub fn unit(k: usize) -> Self {
        assert!((1..=3).contains(&k), "quaternion units are indexed 1..=3");
        let mut v = [0.0; 3];
        v[k - 1] = 1.0;
        Quaternion::pure(v)
    }

    pub fn from_array(c: [f64; 4]) -> Self {
        Quaternion::new(c[0], [c[1], c[2], c[3]])
    }

    pub fn to_array(self) -> [f64; 4] {
        [self.s, self.v[0], self.v[1], self.v[2]]
    }

    /// `q† = s - i v`.
    pub fn conj(self) -> Self {
        Quaternion::new(self.s, [-self.v[0], -self.v[1], -self.v[2]])
    }

    /// `q q† = s² + |v|²`.
    pub fn norm_sq(self) -> f64 {
        self.s * self.s + self.v.iter().map(|x| x * x).sum::<f64>()
    }

    pub fn norm(self) -> f64 {
        self.norm_sq().sqrt()
    }

    pub fn vector_norm(self) -> f64 {
        self.v.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn scale(self, k: f64) -> Self {
        Quaternion::new(self.s * k, [self.v[0] * k, self.v[1] * k, self.v[2] * k])
    }

    pub fn is_finite(self) -> bool {
        self.s.is_finite() && self.v.iter().all(|x| x.is_finite())
    }

    pub fn max_abs_diff(self, other: Quaternion) -> f64 {
        self.to_array()
            .iter()
            .zip(other.to_array())
            .fold(0.0, |m, (a, b)| m.max((a - b).abs()))
    }

    /// Image in Cl(4,0): `s + x1 e23 - x2 e13 + x3 e12`.
    pub fn to_multivector(self) -> Multivector {
        let g4 = Signature::euclidean4();
        let mut m = Multivector::scalar(&g4, self.s);
        m.set_coeff(E23, self.v[0]);
        m.set_coeff(E13, -self.v[1]);
        m.set_coeff(E12, self.v[2]);
        m
    }

    /// Reads a quaternion back from Cl(4,0); anything outside the span of
    /// `{1, e23, e13, e12}` above `tol` is rejected.
    pub fn from_multivector(m: &Multivector, tol: f64) -> Result<Self> {
        let g4 = Signature::euclidean4();
        if *m.signature() != g4 {
            return Err(Error::SignatureMismatch {
                expected: g4.to_string(),
                found: m.signature().to_string(),
            });
        }
        let stray = m
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(b, _)| ![0, E12, E13, E23].contains(b))
            .fold(0.0f64, |acc, (_, c)| acc.max(c.abs()));
        if stray > tol {
            return Err(Error::DomainViolation(format!(
                "element has non-quaternion blades (max {stray:e})"
            )));
        }
        Ok(Quaternion::new(
            m.coeff(0),
            [m.coeff(E23), -m.coeff(E13), m.coeff(E12)],
        ))
    }
}

fn cross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn dot3(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

/// `(a0 + i a)(b0 + i b) = a0 b0 - a·b + i(a0 b + b0 a - a×b)`.
pub fn quat_mul(a: Quaternion, b: Quaternion) -> Quaternion {
    let c = cross(a.v, b.v);
    let mut v = [0.0; 3];
    for k in 0..3 {
        v[k] = a.s * b.v[k] + b.s * a.v[k] - c[k];
    }
    Quaternion::new(a.s * b.s - dot3(a.v, b.v), v)
}

impl Mul for Quaternion {
    type Output = Quaternion;
    fn mul(self, rhs: Quaternion) -> Quaternion {
        quat_mul(self, rhs)
    }
}

impl Mul<f64> for Quaternion {
    type Output = Quaternion;
    fn mul(self, rhs: f64) -> Quaternion {
        self.scale(rhs)
    }
}

impl Add for Quaternion {
    type Output = Quaternion;
    fn add(self, rhs: Quaternion) -> Quaternion {
        Quaternion::new(
            self.s + rhs.s,
            [
                self.v[0] + rhs.v[0],
                self.v[1] + rhs.v[1],
                self.v[2] + rhs.v[2],
            ],
        )
    }
}

impl Sub for Quaternion {
    type Output = Quaternion;
    fn sub(self, rhs: Quaternion) -> Quaternion {
        self + (-rhs)
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        self.scale(-1.0)
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{},{}", self.s, self.v[0], self.v[1], self.v[2])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_products_follow_the_embedded_blades() {
        let g4 = Signature::euclidean4();
        let e23 = Multivector::blade(&g4, E23);
        let e13 = Multivector::blade(&g4, E13);
        // i e1 i e2 as blades: e23 · (-e13)
        let blade_product = &e23 * &(-&e13);
        let q = Quaternion::unit(1) * Quaternion::unit(2);
        assert_eq!(q.to_multivector(), blade_product);
        assert_eq!(q, Quaternion::pure([0.0, 0.0, -1.0]));
    }

    #[test]
    fn pure_unit_squares_to_minus_one() {
        for k in 1..=3 {
            let u = Quaternion::unit(k);
            assert_eq!(u * u, Quaternion::scalar(-1.0));
            let m = u.to_multivector();
            assert_eq!(&m * &m, Multivector::scalar(&Signature::euclidean4(), -1.0));
        }
    }

    #[test]
    fn identity_and_conjugate() {
        let q = Quaternion::new(1.5, [-2.0, 0.25, 3.0]);
        assert_eq!(q * Quaternion::ONE, q);
        assert_eq!(Quaternion::ONE * q, q);
        assert_eq!(q * q.conj(), Quaternion::scalar(q.norm_sq()));
        assert_eq!(q.conj().to_multivector(), q.to_multivector().reverse());
    }

    #[test]
    fn embedding_round_trip() {
        let q = Quaternion::new(0.5, [1.0, -3.0, 2.0]);
        let m = q.to_multivector();
        assert_eq!(Quaternion::from_multivector(&m, 0.0).unwrap(), q);
        let g4 = Signature::euclidean4();
        let bad = &m + &Multivector::generator(&g4, 0);
        assert!(Quaternion::from_multivector(&bad, 1e-12).is_err());
    }
}
