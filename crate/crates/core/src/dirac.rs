//! Classical four-component Dirac columns and their geometric counterparts.
//!
//! The idempotents `u(s,t) = ¼(1 + sγ0)(1 + t j γ12)` need a commuting unit
//! imaginary `j` alongside the spacetime pseudoscalar, so this module works
//! in the complexified algebra Cl(1,3) ⊗ C, stored as pairs `re + j im`.
//! The spinor carrier is the left ideal of `u₊₊ = u(+,+)`, where
//! `j u₊₊ = γ21 u₊₊`.

use std::ops::{Add, Mul, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::ga::{Multivector, Signature, DEFAULT_TOL};
use crate::iso::{g4_to_sta, AlgebraTag};
use crate::qspinor::QSpinor;
use crate::quaternion::Quaternion;

/// `re + j im` with `re, im` in Cl(1,3) and `j` a commuting imaginary unit.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexMultivector {
    pub re: Multivector,
    pub im: Multivector,
}

impl ComplexMultivector {
    pub fn new(re: Multivector, im: Multivector) -> Self {
        assert_eq!(re.signature(), im.signature(), "real and imaginary parts share a signature");
        ComplexMultivector { re, im }
    }

    pub fn real(re: Multivector) -> Self {
        let im = Multivector::zero(re.signature());
        ComplexMultivector { re, im }
    }

    pub fn zero() -> Self {
        Self::real(Multivector::zero(&Signature::spacetime()))
    }

    /// `z · 1` for a complex number `z`.
    pub fn from_complex(z: Complex64) -> Self {
        let sta = Signature::spacetime();
        ComplexMultivector::new(Multivector::scalar(&sta, z.re), Multivector::scalar(&sta, z.im))
    }

    /// Multiplication by the classical unit: `j (a + j b) = -b + j a`.
    pub fn times_j(&self) -> Self {
        ComplexMultivector::new(-&self.im, self.re.clone())
    }

    pub fn scale(&self, k: f64) -> Self {
        ComplexMultivector::new(self.re.scale(k), self.im.scale(k))
    }

    /// `γ0 g̃ γ0` on both parts followed by complex conjugation.
    pub fn hermitian_adjoint(&self) -> Self {
        let g0 = Multivector::generator(self.re.signature(), 0);
        let adj = |m: &Multivector| &(&g0 * &m.reverse()) * &g0;
        ComplexMultivector::new(adj(&self.re), -&adj(&self.im))
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.re.max_abs_diff(&other.re).max(self.im.max_abs_diff(&other.im))
    }

    pub fn max_abs(&self) -> f64 {
        self.re.max_abs().max(self.im.max_abs())
    }

    /// Real inner product over all 32 coefficients.
    pub fn coeff_dot(&self, other: &Self) -> f64 {
        self.re.coeff_dot(&other.re) + self.im.coeff_dot(&other.im)
    }
}

impl Add for &ComplexMultivector {
    type Output = ComplexMultivector;
    fn add(self, rhs: &ComplexMultivector) -> ComplexMultivector {
        ComplexMultivector::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &ComplexMultivector {
    type Output = ComplexMultivector;
    fn sub(self, rhs: &ComplexMultivector) -> ComplexMultivector {
        ComplexMultivector::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &ComplexMultivector {
    type Output = ComplexMultivector;
    fn mul(self, rhs: &ComplexMultivector) -> ComplexMultivector {
        let re = &(&self.re * &rhs.re) - &(&self.im * &rhs.im);
        let im = &(&self.re * &rhs.im) + &(&self.im * &rhs.re);
        ComplexMultivector::new(re, im)
    }
}

/// One of the four primitive idempotents `¼(1 + sγ0)(1 + t j γ12)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DiracIdempotent {
    pub s: i8,
    pub t: i8,
}

impl DiracIdempotent {
    pub const PLUS_PLUS: DiracIdempotent = DiracIdempotent { s: 1, t: 1 };

    pub fn all() -> [DiracIdempotent; 4] {
        [(1, 1), (1, -1), (-1, 1), (-1, -1)].map(|(s, t)| DiracIdempotent { s, t })
    }

    pub fn element(self) -> ComplexMultivector {
        let sta = Signature::spacetime();
        let one = Multivector::one(&sta);
        let g0 = Multivector::generator(&sta, 0);
        let g12 = Multivector::blade(&sta, 0b0110);
        let left = ComplexMultivector::real((&one + &g0.scale(f64::from(self.s))).scale(0.5));
        let right = ComplexMultivector::new(one.scale(0.5), g12.scale(0.5 * f64::from(self.t)));
        &left * &right
    }
}

/// `u₊₊`.
pub fn u_plus_plus() -> ComplexMultivector {
    DiracIdempotent::PLUS_PLUS.element()
}

/// Column `(φ1, φ2, φ3, φ4)` with `φ_k = x_k + j y_k`.
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct DiracSpinor4 {
    pub phi: [Complex64; 4],
}

impl DiracSpinor4 {
    pub fn new(phi: [Complex64; 4]) -> Self {
        DiracSpinor4 { phi }
    }

    /// From `[x1, y1, x2, y2, x3, y3, x4, y4]`.
    pub fn from_reals(r: &[f64]) -> Result<Self> {
        if r.len() != 8 {
            return Err(Error::LengthMismatch {
                expected: 8,
                found: r.len(),
            });
        }
        if let Some(idx) = r.iter().position(|c| !c.is_finite()) {
            return Err(Error::NonFinite(idx));
        }
        let mut phi = [Complex64::new(0.0, 0.0); 4];
        for (k, z) in phi.iter_mut().enumerate() {
            *z = Complex64::new(r[2 * k], r[2 * k + 1]);
        }
        Ok(DiracSpinor4 { phi })
    }

    pub fn to_reals(&self) -> [f64; 8] {
        let mut out = [0.0; 8];
        for (k, z) in self.phi.iter().enumerate() {
            out[2 * k] = z.re;
            out[2 * k + 1] = z.im;
        }
        out
    }

    pub fn times_j(&self) -> Self {
        DiracSpinor4::new(self.phi.map(|z| z * Complex64::i()))
    }

    /// `Σ |φ_k|²`.
    pub fn norm_sq(&self) -> f64 {
        self.phi.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.phi
            .iter()
            .zip(&other.phi)
            .fold(0.0, |m, (a, b)| m.max((a - b).re.abs()).max((a - b).im.abs()))
    }
}

/// Cl(1,3) images of `1, e13, e3, e1`.
fn column_basis() -> [Multivector; 4] {
    let g4 = Signature::euclidean4();
    let map = |mask: usize| g4_to_sta(&Multivector::blade(&g4, mask)).expect("G4 blade");
    [map(0), map(0b1010), map(0b1000), map(0b0010)]
}

/// `(φ1 + φ2 e13 + φ3 e3 + φ4 e1) u₊₊` in the complexified algebra.
pub fn dirac_to_geometric(phi: &DiracSpinor4) -> ComplexMultivector {
    let u = u_plus_plus();
    let mut out = ComplexMultivector::zero();
    for (e, z) in column_basis().into_iter().zip(phi.phi) {
        let term = &(&ComplexMultivector::real(e) * &ComplexMultivector::from_complex(z)) * &u;
        out = &out + &term;
    }
    out
}

/// The same element with every `j` traded for `γ21` acting on `u₊₊`:
/// `Σ E_k (x_k + y_k γ21) u₊₊`.
pub fn dirac_to_geometric_right_action(phi: &DiracSpinor4) -> ComplexMultivector {
    let sta = Signature::spacetime();
    let g21 = Multivector::blade(&sta, 0b0110).scale(-1.0);
    let mut coeff = Multivector::zero(&sta);
    for (e, z) in column_basis().into_iter().zip(phi.phi) {
        let scalar = &Multivector::scalar(&sta, z.re) + &g21.scale(z.im);
        coeff += &(&e * &scalar);
    }
    &ComplexMultivector::real(coeff) * &u_plus_plus()
}

/// `X = (x1 + x4 e1 + y4 e2 + x3 e3) + i(y3 + y2 e1 - x2 e2 + y1 e3)` in
/// Cl(1,3), with `e_k = γ_k γ0` and `i = γ0123`, so that the geometric
/// spinor is `X u₊₊`.
pub fn expansion_coefficient(phi: &DiracSpinor4) -> Multivector {
    let g4 = Signature::euclidean4();
    let [x1, y1, x2, y2, x3, y3, x4, y4] = phi.to_reals();
    let real_part = Multivector::vector(&g4, &[0.0, x4, y4, x3]);
    let imag_part = Multivector::vector(&g4, &[0.0, y2, -x2, y1]);
    let i = Multivector::blade(&g4, 0b1110);
    let x = &(&Multivector::scalar(&g4, x1) + &real_part)
        + &(&i * &(&Multivector::scalar(&g4, y3) + &imag_part));
    g4_to_sta(&x).expect("G4 element")
}

/// Cl(1,3) images of `1, i e1, i e2, i e3` (as quaternions) and `i` times those.
fn extraction_basis() -> [ComplexMultivector; 8] {
    let i = Multivector::blade(&Signature::euclidean4(), 0b1110);
    let u = u_plus_plus();
    let quats = [
        Quaternion::ONE,
        Quaternion::unit(1),
        Quaternion::unit(2),
        Quaternion::unit(3),
    ];
    let mut out: Vec<ComplexMultivector> = Vec::with_capacity(8);
    for with_i in [false, true] {
        for q in quats {
            let mut m = q.to_multivector();
            if with_i {
                m = &i * &m;
            }
            let sta = g4_to_sta(&m).expect("G4 element");
            out.push(&ComplexMultivector::real(sta) * &u);
        }
    }
    out.try_into().expect("eight basis images")
}

/// `(q0 + i q1) u₊₊`.
pub fn qspinor_to_geometric(psi: &QSpinor) -> ComplexMultivector {
    let g4 = Signature::euclidean4();
    let i = Multivector::blade(&g4, 0b1110);
    let coeff = &psi.q0.to_multivector() + &(&i * &psi.q1.to_multivector());
    &ComplexMultivector::real(g4_to_sta(&coeff).expect("G4 element")) * &u_plus_plus()
}

/// Reads `q0, q1` off an element `(q0 + i q1) u₊₊` of the ideal.
pub fn geometric_to_qspinor(m: &ComplexMultivector) -> Result<QSpinor> {
    AlgebraTag::Spacetime13.require(&m.re)?;
    // the eight basis images are mutually orthogonal with squared norm ¼
    let c: Vec<f64> = extraction_basis().iter().map(|b| 4.0 * b.coeff_dot(m)).collect();
    let psi = QSpinor::new(
        AlgebraTag::Spacetime13,
        Quaternion::new(c[0], [c[1], c[2], c[3]]),
        Quaternion::new(c[4], [c[5], c[6], c[7]]),
    )?;
    let residual = qspinor_to_geometric(&psi).max_abs_diff(m);
    if residual > DEFAULT_TOL * m.max_abs().max(1.0) {
        return Err(Error::NotInIdeal(residual));
    }
    Ok(psi)
}

/// `φ1 = x0 + j x3`, `φ2 = -x2 + j x1`, `φ3 = -y3 + j y0`, `φ4 = -y1 - j y2`
/// for `q0 = x0 + i x`, `q1 = y0 + i y`.
pub fn qspinor_to_dirac(psi: &QSpinor) -> DiracSpinor4 {
    let (x0, [x1, x2, x3]) = (psi.q0.s, psi.q0.v);
    let (y0, [y1, y2, y3]) = (psi.q1.s, psi.q1.v);
    DiracSpinor4::new([
        Complex64::new(x0, x3),
        Complex64::new(-x2, x1),
        Complex64::new(-y3, y0),
        Complex64::new(-y1, -y2),
    ])
}

/// Inverse of [`qspinor_to_dirac`].
pub fn dirac_to_qspinor(phi: &DiracSpinor4) -> QSpinor {
    let [p1, p2, p3, p4] = phi.phi;
    QSpinor::new(
        AlgebraTag::Spacetime13,
        Quaternion::new(p1.re, [p2.im, -p2.re, p1.im]),
        Quaternion::new(p3.im, [-p4.re, -p4.im, -p3.re]),
    )
    .expect("finite components")
}

/// `4 Re⟨m‡ m⟩₀` with `‡` the Hermitian adjoint; equals `Σ |φ_k|²` on the ideal.
pub fn ideal_norm(m: &ComplexMultivector) -> f64 {
    4.0 * (&m.hermitian_adjoint() * m).re.scalar_part()
}

/// Compares the two definitions of `J` that appear alongside the idempotents:
/// `J = -j i` and `J = j γ0123`, and the idempotent `E₊ = ½(1 + J e3)` built
/// from each.
#[derive(Clone, Debug, PartialEq)]
pub struct JRelation {
    /// `|J(-ji) + J(jγ0123)|`: zero when the two differ by a sign.
    pub sum_residual: f64,
    /// `|u₊₊ - v₊ E₊|` using `J = -j i`.
    pub u_residual_minus_ji: f64,
    /// `|u₊₊ - v₊ E₊|` using `J = j γ0123`.
    pub u_residual_j_g0123: f64,
}

pub fn j_definitions() -> JRelation {
    let sta = Signature::spacetime();
    let zero = Multivector::zero(&sta);
    let one = Multivector::one(&sta);
    let g0123 = Multivector::blade(&sta, 0b1111);
    let j_a = ComplexMultivector::new(zero.clone(), -&g0123);
    let j_b = ComplexMultivector::new(zero, g0123);
    let e3 = ComplexMultivector::real(
        g4_to_sta(&Multivector::generator(&Signature::euclidean4(), 3)).expect("G4 vector"),
    );
    let v_plus = ComplexMultivector::real((&one + &Multivector::generator(&sta, 0)).scale(0.5));
    let half = ComplexMultivector::real(one.scale(0.5));
    let u = u_plus_plus();
    let residual = |j: &ComplexMultivector| {
        let e_plus = &half + &(j * &e3).scale(0.5);
        (&v_plus * &e_plus).max_abs_diff(&u)
    };
    JRelation {
        sum_residual: (&j_a + &j_b).max_abs(),
        u_residual_minus_ji: residual(&j_a),
        u_residual_j_g0123: residual(&j_b),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn idempotents_are_complete_and_orthogonal() {
        let all = DiracIdempotent::all().map(DiracIdempotent::element);
        let mut sum = ComplexMultivector::zero();
        for (a, ua) in all.iter().enumerate() {
            sum = &sum + ua;
            for (b, ub) in all.iter().enumerate() {
                let prod = ua * ub;
                let expected = if a == b { ua.clone() } else { ComplexMultivector::zero() };
                assert_eq!(prod, expected, "u{a} u{b}");
            }
        }
        assert_eq!(sum, ComplexMultivector::real(Multivector::one(&Signature::spacetime())));
    }

    #[test]
    fn j_acts_as_gamma21() {
        let u = u_plus_plus();
        let g21 = ComplexMultivector::real(Multivector::blade(&Signature::spacetime(), 0b0110).scale(-1.0));
        assert_eq!(u.times_j(), &g21 * &u);
    }

    #[test]
    fn unit_column_is_the_idempotent() {
        let phi = DiracSpinor4::new([c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]);
        assert_eq!(dirac_to_geometric(&phi), u_plus_plus());
        let psi = dirac_to_qspinor(&phi);
        assert_eq!((psi.q0, psi.q1), (Quaternion::ONE, Quaternion::ZERO));
    }

    #[test]
    fn j_column_extracts_x3() {
        let phi = DiracSpinor4::new([c(0.0, 1.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]);
        let m = dirac_to_geometric(&phi);
        let psi = geometric_to_qspinor(&m).unwrap();
        assert!(psi.q0.max_abs_diff(Quaternion::unit(3)) < 1e-15);
        assert!(psi.q1.max_abs_diff(Quaternion::ZERO) < 1e-15);
        assert!(qspinor_to_dirac(&psi).max_abs_diff(&phi) < 1e-15);
        // i e3 u₊₊
        let i_e3 = g4_to_sta(&Multivector::blade(&Signature::euclidean4(), 0b0110)).unwrap();
        let expected = &ComplexMultivector::real(i_e3) * &u_plus_plus();
        assert!(m.max_abs_diff(&expected) < 1e-15);
    }

    #[test]
    fn j_definitions_differ_by_sign() {
        let r = j_definitions();
        assert_eq!(r.sum_residual, 0.0);
        // u₊₊ = v₊E₊ holds with J = -ji and fails with the opposite sign
        assert!(r.u_residual_minus_ji < 1e-15, "{r:?}");
        assert!(r.u_residual_j_g0123 >= 0.5, "{r:?}");
    }

    #[test]
    fn non_ideal_elements_are_rejected() {
        let one = ComplexMultivector::real(Multivector::one(&Signature::spacetime()));
        assert!(matches!(geometric_to_qspinor(&one), Err(Error::NotInIdeal(_))));
    }

    #[test]
    fn arity_is_checked() {
        assert!(DiracSpinor4::from_reals(&[0.0; 7]).is_err());
        assert!(DiracSpinor4::from_reals(&[0.0; 8]).is_ok());
    }
}
