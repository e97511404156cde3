//! Quaternion spinors `α = (q0 + q1 i) v₊` with `i = e123`, `v₊ = ½(1 + e0)`
//! in Cl(4,0), or their images `i = γ0123`, `v₊ = ½(1 + γ0)` in Cl(1,3).
//!
//! Everything is assembled in Cl(4,0) and carried to Cl(1,3) through
//! [`crate::iso::g4_to_sta`] when the spinor is tagged as a spacetime spinor.

use crate::error::{Error, Result};
use crate::ga::{Multivector, Signature, DEFAULT_TOL};
use crate::gspinor::GSpinor;
use crate::iso::{g4_to_sta, sta_to_g4, AlgebraTag};
use crate::quaternion::{quat_mul, Quaternion};

const I_MASK: usize = 0b1110;
// blades of q0, of q1·i, of q0·e0 and of q1·i·e0 in Cl(4,0)
const Q0_BLADES: [usize; 4] = [0b0000, 0b0110, 0b1010, 0b1100];

/// `½(ab + ba)`.
pub fn circ(a: Quaternion, b: Quaternion) -> Quaternion {
    (quat_mul(a, b) + quat_mul(b, a)).scale(0.5)
}

/// `½(ab - ba)`.
pub fn otimes(a: Quaternion, b: Quaternion) -> Quaternion {
    (quat_mul(a, b) - quat_mul(b, a)).scale(0.5)
}

/// Scalar and vector parts of `q1 q0†` for `q0 = a`, `q1 = b`:
/// `(⟨b a†⟩₀, ⟨b a†⟩₁)` with `⟨b a†⟩₀ = ½(b a† + a b†)` and
/// `⟨b a†⟩₁ = ½(b a† - a b†)`.
pub fn grade_parts(a: Quaternion, b: Quaternion) -> (f64, Quaternion) {
    let ba = quat_mul(b, a.conj());
    let ab = quat_mul(a, b.conj());
    ((ba + ab).scale(0.5).s, (ba - ab).scale(0.5))
}

fn validate_tag(tag: AlgebraTag) -> Result<()> {
    match tag {
        AlgebraTag::Euclidean4 | AlgebraTag::Spacetime13 => Ok(()),
        other => Err(Error::TagMismatch(format!(
            "quaternion spinors live in G4 or G1,3, not {other}"
        ))),
    }
}

fn to_tag(m: Multivector, tag: AlgebraTag) -> Multivector {
    match tag {
        AlgebraTag::Spacetime13 => g4_to_sta(&m).expect("element of G4"),
        _ => m,
    }
}

fn g4() -> Signature {
    Signature::euclidean4()
}

fn g4_i() -> Multivector {
    Multivector::blade(&g4(), I_MASK)
}

fn g4_e0() -> Multivector {
    Multivector::generator(&g4(), 0)
}

fn g4_v_plus() -> Multivector {
    (&Multivector::one(&g4()) + &g4_e0()).scale(0.5)
}

/// `v₊ = ½(1 + e0)` or `½(1 + γ0)`.
pub fn v_plus(tag: AlgebraTag) -> Result<Multivector> {
    validate_tag(tag)?;
    Ok(to_tag(g4_v_plus(), tag))
}

/// The Hermitian adjoint: reversion in Cl(4,0), `γ0 g̃ γ0` in Cl(1,3).
pub fn dagger(m: &Multivector) -> Result<Multivector> {
    match AlgebraTag::of(m.signature()) {
        Some(AlgebraTag::Euclidean4) => Ok(m.reverse()),
        Some(AlgebraTag::Spacetime13) => {
            let g0 = Multivector::generator(m.signature(), 0);
            Ok(&(&g0 * &m.reverse()) * &g0)
        }
        _ => Err(Error::TagMismatch(format!(
            "no quaternion adjoint on Cl({})",
            m.signature()
        ))),
    }
}

/// Spacetime reversion `g̃` carried to the spinor's algebra.
fn spacetime_reverse(m: &Multivector, tag: AlgebraTag) -> Multivector {
    match tag {
        AlgebraTag::Spacetime13 => m.reverse(),
        _ => sta_to_g4(&g4_to_sta(m).expect("element of G4").reverse()).expect("element of G1,3"),
    }
}

/// Quaternion spinor `(q0 + q1 i) v₊`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QSpinor {
    tag: AlgebraTag,
    pub q0: Quaternion,
    pub q1: Quaternion,
}

/// Canonical form `ρ e^{θ i x̂} M̂ v₊`.
#[derive(Clone, Debug, PartialEq)]
pub struct CanonicalQ {
    pub rho: f64,
    pub theta: f64,
    /// Unit axis of the phase; `e3` when the phase is a real scalar.
    pub x_dir: [f64; 3],
    /// `e^{θ i x̂} = q0/|q0|`
    pub phase: Quaternion,
    pub m: Multivector,
    pub m_hat: Multivector,
    /// `M² = 1 - |q1|²/|q0|²`
    pub m_squared: f64,
}

/// Canonical form of an orthogonal spinor, where `M = (1 + x_m) e0`.
#[derive(Clone, Debug, PartialEq)]
pub struct CanonicalOrthogonal {
    pub canonical: CanonicalQ,
    /// Euclidean components of `x_m = (y0 x - x0 y - x × y)/(x0² + |x|²)`.
    pub x_m: [f64; 3],
    /// `|M| = √(1 - |x_m|²)`
    pub m_norm: f64,
}

impl QSpinor {
    pub fn new(tag: AlgebraTag, q0: Quaternion, q1: Quaternion) -> Result<Self> {
        validate_tag(tag)?;
        if !q0.is_finite() || !q1.is_finite() {
            return Err(Error::DomainViolation("non-finite quaternion".into()));
        }
        Ok(QSpinor { tag, q0, q1 })
    }

    pub fn tag(&self) -> AlgebraTag {
        self.tag
    }

    pub fn with_tag(&self, tag: AlgebraTag) -> Result<Self> {
        QSpinor::new(tag, self.q0, self.q1)
    }

    /// `(q0 + q1 i) v₊` in Cl(4,0), whatever the tag.
    fn g4_image(&self) -> Multivector {
        let coeff = &self.q0.to_multivector() + &(&self.q1.to_multivector() * &g4_i());
        &coeff * &g4_v_plus()
    }

    pub fn to_multivector(&self) -> Multivector {
        to_tag(self.g4_image(), self.tag)
    }

    /// Recovers `(q0, q1)` from an element of the ideal.
    pub fn from_multivector(m: &Multivector, tag: AlgebraTag) -> Result<Self> {
        validate_tag(tag)?;
        tag.require(m)?;
        let g = match tag {
            AlgebraTag::Spacetime13 => sta_to_g4(m)?,
            _ => m.clone(),
        };
        let residual = (&g * &g4_v_plus()).max_abs_diff(&g);
        if residual > DEFAULT_TOL * g.max_abs().max(1.0) {
            return Err(Error::NotInIdeal(residual));
        }
        // q0 and q1 i occupy disjoint blades of the even/odd-in-e0-free part
        let mut q0_part = Multivector::zero(&g4());
        let mut q1i_part = Multivector::zero(&g4());
        for (mask, &c) in g.coeffs().iter().enumerate() {
            if mask & 1 == 1 {
                continue;
            }
            if Q0_BLADES.contains(&mask) {
                q0_part.set_coeff(mask, 2.0 * c);
            } else {
                q1i_part.set_coeff(mask, 2.0 * c);
            }
        }
        let q0 = Quaternion::from_multivector(&q0_part, 0.0)?;
        let q1 = Quaternion::from_multivector(&-(&q1i_part * &g4_i()), DEFAULT_TOL)?;
        QSpinor::new(tag, q0, q1)
    }

    /// `ρ² = |q0|² - |q1|²`.
    pub fn rho_sq(&self) -> f64 {
        self.q0.norm_sq() - self.q1.norm_sq()
    }

    pub fn scale(&self, k: f64) -> QSpinor {
        QSpinor {
            tag: self.tag,
            q0: self.q0.scale(k),
            q1: self.q1.scale(k),
        }
    }

    /// Left multiplication of both quaternions by `p` (a phase when `|p| = 1`).
    pub fn left_mul(&self, p: Quaternion) -> QSpinor {
        QSpinor {
            tag: self.tag,
            q0: quat_mul(p, self.q0),
            q1: quat_mul(p, self.q1),
        }
    }

    pub fn normalized(&self) -> Result<QSpinor> {
        let r2 = self.rho_sq();
        if r2 <= 0.0 {
            return Err(Error::NonTimelike(r2));
        }
        Ok(self.scale(1.0 / r2.sqrt()))
    }

    /// `q0† q1`.
    pub fn w(&self) -> Quaternion {
        quat_mul(self.q0.conj(), self.q1)
    }

    pub fn is_orthogonal(&self, tol: f64) -> bool {
        self.w().s.abs() <= tol * self.q0.norm_sq().max(1.0)
    }

    /// `M = e0 + (⟨q0†q1⟩₀/N) i - (w e0)/N` with `q0†q1 = w0 + i w`, `N = |q0|²`.
    fn g4_m(&self) -> Result<Multivector> {
        let n = self.q0.norm_sq();
        if n == 0.0 {
            return Err(Error::ZeroQ0);
        }
        let w = self.w();
        let w_vec = Multivector::vector(&g4(), &[0.0, w.v[0], w.v[1], w.v[2]]);
        Ok(&(&g4_e0() + &g4_i().scale(w.s / n)) - &(&w_vec * &g4_e0()).scale(1.0 / n))
    }

    pub fn canonical_q(&self) -> Result<CanonicalQ> {
        let n = self.q0.norm_sq();
        if n == 0.0 {
            return Err(Error::ZeroQ0);
        }
        let rho2 = self.rho_sq();
        if rho2 <= 0.0 {
            return Err(Error::NonTimelike(rho2));
        }
        let m = self.g4_m()?;
        let m_squared = 1.0 - self.q1.norm_sq() / n;
        let m_hat = m.scale(1.0 / m_squared.sqrt());
        let phase = self.q0.scale(1.0 / n.sqrt());
        let vn = phase.vector_norm();
        let theta = vn.atan2(phase.s);
        let x_dir = if vn > 0.0 {
            [phase.v[0] / vn, phase.v[1] / vn, phase.v[2] / vn]
        } else {
            [0.0, 0.0, 1.0]
        };
        Ok(CanonicalQ {
            rho: rho2.sqrt(),
            theta,
            x_dir,
            phase,
            m: to_tag(m, self.tag),
            m_hat: to_tag(m_hat, self.tag),
            m_squared,
        })
    }

    /// `M` written directly in Cl(1,3):
    /// `γ0 + (y0 x - x0 y + γ123 x∧y)/N + γ0123 (x0 y0 - x·y)/N`
    /// with `x = Σ x_k γ_k`, `y = Σ y_k γ_k` and `N = x0² + |x|²`.
    pub fn m_spacetime_form(&self) -> Result<Multivector> {
        let sta = Signature::spacetime();
        let n = self.q0.norm_sq();
        if n == 0.0 {
            return Err(Error::ZeroQ0);
        }
        let (x0, y0) = (self.q0.s, self.q1.s);
        let x = Multivector::vector(&sta, &[0.0, self.q0.v[0], self.q0.v[1], self.q0.v[2]]);
        let y = Multivector::vector(&sta, &[0.0, self.q1.v[0], self.q1.v[1], self.q1.v[2]]);
        let wedge = (&(&x * &y) - &(&y * &x)).scale(0.5);
        let x_dot_y = crate::ga::dot(&x, &y)?;
        let g0 = Multivector::generator(&sta, 0);
        let g123 = Multivector::blade(&sta, 0b1110);
        let g0123 = Multivector::blade(&sta, 0b1111);
        let middle = &(&x.scale(y0) - &y.scale(x0)) + &(&g123 * &wedge);
        Ok(&(&g0 + &middle.scale(1.0 / n)) + &g0123.scale((x0 * y0 - x_dot_y) / n))
    }

    pub fn canonical_orthogonal(&self) -> Result<CanonicalOrthogonal> {
        let w0 = self.w().s;
        if !self.is_orthogonal(DEFAULT_TOL) {
            return Err(Error::NotOrthogonal(w0));
        }
        let canonical = self.canonical_q()?;
        let n = self.q0.norm_sq();
        let w = self.w();
        let x_m = [-w.v[0] / n, -w.v[1] / n, -w.v[2] / n];
        let r2: f64 = x_m.iter().map(|c| c * c).sum();
        Ok(CanonicalOrthogonal {
            canonical,
            x_m,
            m_norm: (1.0 - r2).sqrt(),
        })
    }

    /// `(|α⟩, ⟨α|) = (√2 α, √2 α†)`.
    pub fn braket_q(&self) -> (Multivector, Multivector) {
        let a = self.to_multivector();
        let k = std::f64::consts::SQRT_2;
        let bra = dagger(&a).expect("validated tag").scale(k);
        (a.scale(k), bra)
    }

    /// `|α⟩⟨α| = 2 α α†`.
    pub fn projector(&self) -> Multivector {
        let (ket, bra) = self.braket_q();
        &ket * &bra
    }

    /// Closed form of the projector for orthogonal spinors:
    /// `(|q0|² + |q1|²) + (|q0|² - |q1|²) e0 - 2(x0 y - y0 x - x × y)`.
    pub fn projector_closed_form(&self) -> Result<Multivector> {
        if !self.is_orthogonal(DEFAULT_TOL) {
            return Err(Error::NotOrthogonal(self.w().s));
        }
        let (x0, x) = (self.q0.s, self.q0.v);
        let (y0, y) = (self.q1.s, self.q1.v);
        let cross = [
            x[1] * y[2] - x[2] * y[1],
            x[2] * y[0] - x[0] * y[2],
            x[0] * y[1] - x[1] * y[0],
        ];
        let mut v = [0.0; 4];
        v[0] = self.q0.norm_sq() - self.q1.norm_sq();
        for k in 0..3 {
            v[k + 1] = -2.0 * (x0 * y[k] - y0 * x[k] - cross[k]);
        }
        let sum = self.q0.norm_sq() + self.q1.norm_sq();
        let m = &Multivector::scalar(&g4(), sum) + &Multivector::vector(&g4(), &v);
        Ok(to_tag(m, self.tag))
    }

    /// `⟨α||α⟩` with the spacetime bra `√2 α̃`; equals `2ρ² v₊`.
    pub fn bra_ket_product(&self) -> Multivector {
        let a = self.to_multivector();
        (&spacetime_reverse(&a, self.tag) * &a).scale(2.0)
    }
}

fn same_tag(a: &QSpinor, b: &QSpinor) -> Result<()> {
    if a.tag == b.tag {
        Ok(())
    } else {
        Err(Error::TagMismatch(format!("{} vs {}", a.tag, b.tag)))
    }
}

/// `⟨α|β⟩ = 2⟨α̃ β⟩₀₊₃` with the spacetime reversion, as a multivector of
/// grades 0 and 3 in the spinors' algebra.
pub fn inner_q(a: &QSpinor, b: &QSpinor) -> Result<Multivector> {
    same_tag(a, b)?;
    let prod = &spacetime_reverse(&a.to_multivector(), a.tag) * &b.to_multivector();
    // grade 0+3 in G1,3; pull back so the projection is taken there
    let sta = match a.tag {
        AlgebraTag::Spacetime13 => prod,
        _ => g4_to_sta(&prod)?,
    };
    let projected = sta.grade_select(&[0, 3])?.scale(2.0);
    Ok(match a.tag {
        AlgebraTag::Spacetime13 => projected,
        _ => sta_to_g4(&projected)?,
    })
}

/// Two evaluations of the transition quantity between normalized spinors.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QFidelityRoutes {
    /// Scalar part of `⟨β|α⟩⟨α|β⟩`.
    pub chain: f64,
    /// Largest non-scalar coefficient of that product (zero in exact arithmetic).
    pub chain_nonscalar: f64,
    /// `½(1 + Â′∘B̂′)` with `Â′ = M̂′_a γ0 M̂′_a`, `M̂′ = e^{θ i x̂} M̂ e^{-θ i x̂}`.
    pub circ_form: f64,
}

pub fn fidelity_q_routes(a: &QSpinor, b: &QSpinor) -> Result<QFidelityRoutes> {
    same_tag(a, b)?;
    let ca = a.canonical_q()?;
    let cb = b.canonical_q()?;
    let na = a.normalized()?;
    let nb = b.normalized()?;
    let ab = inner_q(&na, &nb)?;
    let ba = inner_q(&nb, &na)?;
    let product = &ba * &ab;
    let chain = product.scalar_part();
    let mut rest = product.clone();
    rest.set_coeff(0, 0.0);

    let primed = |c: &CanonicalQ| {
        let ph = to_tag(c.phase.to_multivector(), a.tag);
        let ph_inv = to_tag(c.phase.conj().to_multivector(), a.tag);
        let m = &(&ph * &c.m_hat) * &ph_inv;
        let pole = to_tag(g4_e0(), a.tag);
        &(&m * &pole) * &m
    };
    let a_p = primed(&ca);
    let b_p = primed(&cb);
    let sym = (&(&a_p * &b_p) + &(&b_p * &a_p)).scale(0.5);
    Ok(QFidelityRoutes {
        chain,
        chain_nonscalar: rest.max_abs(),
        circ_form: 0.5 * (1.0 + sym.scalar_part()),
    })
}

/// `⟨β|α⟩⟨α|β⟩` for the normalized spinors.
pub fn fidelity_q(a: &QSpinor, b: &QSpinor) -> Result<f64> {
    Ok(fidelity_q_routes(a, b)?.chain)
}

/// Lifts a Cl(1,2) g-spinor: each coefficient `s + p i` becomes the
/// quaternion `s + p (i e3)`.
pub fn from_gspinor(g: &GSpinor) -> Result<QSpinor> {
    if g.tag() != AlgebraTag::Minkowski12 {
        return Err(Error::TagMismatch(format!(
            "only G1,2 g-spinors reduce to quaternion spinors, got {}",
            g.tag()
        )));
    }
    let lift = |c: crate::gspinor::CenterScalar| Quaternion::new(c.s, [0.0, 0.0, c.p]);
    QSpinor::new(AlgebraTag::Spacetime13, lift(g.a0), lift(g.a1))
}

#[cfg(test)]
mod tests {
    use super::*;

    const G4: AlgebraTag = AlgebraTag::Euclidean4;
    const STA: AlgebraTag = AlgebraTag::Spacetime13;

    fn q(s: f64, v: [f64; 3]) -> Quaternion {
        Quaternion::new(s, v)
    }

    #[test]
    fn circ_and_otimes_examples() {
        // q0 = i e1, q1 = -i e2; k = e12 = i e3
        let q0 = q(0.0, [1.0, 0.0, 0.0]);
        let q1 = q(0.0, [0.0, -1.0, 0.0]);
        let k = q(0.0, [0.0, 0.0, 1.0]);
        assert_eq!(circ(q0.conj(), q1), Quaternion::ZERO);
        assert_eq!(otimes(q0.conj(), q1), -k);
        assert_eq!(otimes(q0.conj(), q1).to_multivector(), (-k).to_multivector());
        assert_eq!(otimes(q0, q1), k);
        let c = q(1.0, [2.0, -1.0, 0.5]);
        assert_eq!(circ(c, c), quat_mul(c, c));
        assert_eq!(otimes(c, c), Quaternion::ZERO);
    }

    #[test]
    fn grade_parts_examples() {
        let a = q(1.0, [2.0, -1.0, 0.5]);
        let (g0, g1) = grade_parts(a, a);
        assert_eq!(g0, a.norm_sq());
        assert_eq!(g1, Quaternion::ZERO);
        let (g0, _) = grade_parts(Quaternion::ONE, q(0.0, [1.0, 2.0, 3.0]));
        assert_eq!(g0, 0.0);
    }

    #[test]
    fn trivial_spinor() {
        for tag in [G4, STA] {
            let psi = QSpinor::new(tag, Quaternion::ONE, Quaternion::ZERO).unwrap();
            let c = psi.canonical_q().unwrap();
            assert_eq!((c.rho, c.theta), (1.0, 0.0));
            assert_eq!(c.m, to_tag(g4_e0(), tag));
            assert_eq!(psi.to_multivector(), v_plus(tag).unwrap());
            assert!(psi.projector().approx_eq(&v_plus(tag).unwrap().scale(2.0), 1e-15));
        }
    }

    #[test]
    fn null_spinor_is_rejected() {
        let psi = QSpinor::new(G4, Quaternion::ONE, q(0.0, [0.0, 1.0, 0.0])).unwrap();
        assert!(matches!(psi.canonical_q(), Err(Error::NonTimelike(_))));
        let zero = QSpinor::new(G4, Quaternion::ZERO, Quaternion::ZERO).unwrap();
        assert_eq!(zero.canonical_q(), Err(Error::ZeroQ0));
    }

    #[test]
    fn orthogonal_example() {
        let psi = QSpinor::new(STA, Quaternion::ONE, q(0.0, [0.5, 0.0, 0.0])).unwrap();
        assert!(psi.is_orthogonal(1e-12));
        let o = psi.canonical_orthogonal().unwrap();
        assert_eq!(o.x_m, [-0.5, 0.0, 0.0]);
        assert!((o.m_norm - 0.75f64.sqrt()).abs() < 1e-15);
        let not = QSpinor::new(G4, Quaternion::ONE, Quaternion::scalar(0.5)).unwrap();
        assert!(matches!(not.canonical_orthogonal(), Err(Error::NotOrthogonal(_))));
    }

    #[test]
    fn ideal_round_trip() {
        for tag in [G4, STA] {
            let psi = QSpinor::new(tag, q(0.3, [1.0, -2.0, 0.5]), q(-0.7, [0.2, 0.4, -1.1])).unwrap();
            let back = QSpinor::from_multivector(&psi.to_multivector(), tag).unwrap();
            assert!(back.q0.max_abs_diff(psi.q0) < 1e-15);
            assert!(back.q1.max_abs_diff(psi.q1) < 1e-15);
        }
    }

    #[test]
    fn dagger_commutes_with_iso() {
        let g = Multivector::from_coeffs(&g4(), (0..16).map(|k| k as f64 - 7.5).collect()).unwrap();
        let lhs = g4_to_sta(&dagger(&g).unwrap()).unwrap();
        let rhs = dagger(&g4_to_sta(&g).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn reduction_rejects_pauli() {
        let g = GSpinor::new(
            AlgebraTag::Pauli3,
            crate::gspinor::CenterScalar::ONE,
            crate::gspinor::CenterScalar::ZERO,
        )
        .unwrap();
        assert!(matches!(from_gspinor(&g), Err(Error::TagMismatch(_))));
    }
}
