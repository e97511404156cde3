//! Two-component geometric spinors living in a minimal left ideal:
//! `(α0 + α1 e1) u₊` in Cl(3,0) with `u₊ = ½(1 + e3)`, or
//! `(α0 + α1 γ1) v₊` in Cl(1,2) with `v₊ = ½(1 + γ0)`.
//!
//! The coefficients are "complex" elements `s + p i` of the center, where
//! `i` is the unit pseudoscalar (`e123` or `γ012`, both squaring to -1).

use std::fmt;
use std::ops::{Add, Mul, Sub};

use crate::error::{Error, Result};
use crate::ga::{Multivector, DEFAULT_TOL};
use crate::iso::AlgebraTag;
use crate::stereo::PlanePoint;

const PSEUDO: usize = 0b111;

/// `s + p i` with `i` the pseudoscalar of Cl(3,0) or Cl(1,2).
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct CenterScalar {
    pub s: f64,
    pub p: f64,
}

impl CenterScalar {
    pub const ZERO: CenterScalar = CenterScalar { s: 0.0, p: 0.0 };
    pub const ONE: CenterScalar = CenterScalar { s: 1.0, p: 0.0 };

    pub const fn new(s: f64, p: f64) -> Self {
        CenterScalar { s, p }
    }

    /// `s - p i`; this is both the reverse and the Hermitian conjugate.
    pub fn conj(self) -> Self {
        CenterScalar::new(self.s, -self.p)
    }

    pub fn norm_sq(self) -> f64 {
        self.s * self.s + self.p * self.p
    }

    pub fn abs(self) -> f64 {
        self.s.hypot(self.p)
    }

    pub fn scale(self, k: f64) -> Self {
        CenterScalar::new(self.s * k, self.p * k)
    }

    /// Argument `atan2(p, s)`.
    pub fn arg(self) -> f64 {
        self.p.atan2(self.s)
    }

    pub fn inverse(self) -> Option<Self> {
        let n = self.norm_sq();
        (n > 0.0).then(|| self.conj().scale(1.0 / n))
    }

    pub fn to_multivector(self, tag: AlgebraTag) -> Multivector {
        let mut m = Multivector::scalar(&tag.signature(), self.s);
        m.set_coeff(PSEUDO, self.p);
        m
    }

    /// Reads the scalar and pseudoscalar coefficients of an element of
    /// Cl(3,0) or Cl(1,2).
    pub fn from_multivector(m: &Multivector) -> Self {
        CenterScalar::new(m.coeff(0), m.coeff(PSEUDO))
    }

    pub fn max_abs_diff(self, other: CenterScalar) -> f64 {
        (self.s - other.s).abs().max((self.p - other.p).abs())
    }
}

impl Add for CenterScalar {
    type Output = CenterScalar;
    fn add(self, rhs: CenterScalar) -> CenterScalar {
        CenterScalar::new(self.s + rhs.s, self.p + rhs.p)
    }
}

impl Sub for CenterScalar {
    type Output = CenterScalar;
    fn sub(self, rhs: CenterScalar) -> CenterScalar {
        CenterScalar::new(self.s - rhs.s, self.p - rhs.p)
    }
}

impl Mul for CenterScalar {
    type Output = CenterScalar;
    fn mul(self, rhs: CenterScalar) -> CenterScalar {
        CenterScalar::new(
            self.s * rhs.s - self.p * rhs.p,
            self.s * rhs.p + self.p * rhs.s,
        )
    }
}

impl fmt::Display for CenterScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:+}i", self.s, self.p)
    }
}

/// Per-algebra constants: which generator plays `e1`/`γ1`, and the pole.
#[derive(Clone, Copy, Debug)]
struct Layout {
    first: usize,
    second: usize,
    pole: usize,
    // +1 in Cl(3,0), -1 in Cl(1,2)
    metric: f64,
}

fn layout(tag: AlgebraTag) -> Result<Layout> {
    match tag {
        AlgebraTag::Pauli3 => Ok(Layout {
            first: 0,
            second: 1,
            pole: 2,
            metric: 1.0,
        }),
        AlgebraTag::Minkowski12 => Ok(Layout {
            first: 1,
            second: 2,
            pole: 0,
            metric: -1.0,
        }),
        other => Err(Error::TagMismatch(format!(
            "g-spinors live in G3 or G1,2, not {other}"
        ))),
    }
}

fn generator(tag: AlgebraTag, k: usize) -> Multivector {
    Multivector::generator(&tag.signature(), k)
}

/// The idempotent `u₊ = ½(1 + e3)` or `v₊ = ½(1 + γ0)`.
pub fn idempotent(tag: AlgebraTag) -> Result<Multivector> {
    let l = layout(tag)?;
    let one = Multivector::one(&tag.signature());
    Ok((&one + &generator(tag, l.pole)).scale(0.5))
}

/// `⟨a⟩₀₊₃` as a center scalar.
fn center_part(m: &Multivector) -> CenterScalar {
    CenterScalar::from_multivector(m)
}

/// Geometric spinor `(α0 + α1 g1) idempotent`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GSpinor {
    tag: AlgebraTag,
    pub a0: CenterScalar,
    pub a1: CenterScalar,
}

/// Polar form `ρ e^{iθ} m̂ idempotent`.
#[derive(Clone, Debug, PartialEq)]
pub struct CanonicalG {
    pub rho: f64,
    pub theta: f64,
    /// Chart point: `x_m = x[0] g1 + x[1] g2`.
    pub x: [f64; 2],
    pub x_m: Multivector,
    pub m: Multivector,
    pub m_hat: Multivector,
}

impl GSpinor {
    pub fn new(tag: AlgebraTag, a0: CenterScalar, a1: CenterScalar) -> Result<Self> {
        layout(tag)?;
        Ok(GSpinor { tag, a0, a1 })
    }

    pub fn tag(&self) -> AlgebraTag {
        self.tag
    }

    /// Unit spinor `m̂ idempotent` for a chart point
    /// `x_m = x[0] g1 + x[1] g2`.
    pub fn from_plane(tag: AlgebraTag, x: [f64; 2]) -> Result<Self> {
        let l = layout(tag)?;
        let r2 = x[0] * x[0] + x[1] * x[1];
        let m2 = 1.0 + l.metric * r2;
        if m2 <= 0.0 {
            return Err(Error::DomainViolation(format!(
                "|x| = {} is outside the open unit disk",
                r2.sqrt()
            )));
        }
        let scale = 1.0 / m2.sqrt();
        // x_m = a g1 + b g2 comes from α1/α0 = a + b i in G3, a - b i in G1,2
        let ratio = CenterScalar::new(x[0], l.metric * x[1]);
        GSpinor::new(tag, CenterScalar::new(scale, 0.0), ratio.scale(scale))
    }

    pub fn scale(&self, k: f64) -> GSpinor {
        GSpinor {
            tag: self.tag,
            a0: self.a0.scale(k),
            a1: self.a1.scale(k),
        }
    }

    /// Multiplies both components by a center scalar (a global phase when unit).
    pub fn mul_center(&self, z: CenterScalar) -> GSpinor {
        GSpinor {
            tag: self.tag,
            a0: z * self.a0,
            a1: z * self.a1,
        }
    }

    /// `(α0 + α1 g1) idempotent`.
    pub fn to_multivector(&self) -> Multivector {
        let l = layout(self.tag).expect("validated tag");
        let g1 = generator(self.tag, l.first);
        let coeff = &self.a0.to_multivector(self.tag) + &(&self.a1.to_multivector(self.tag) * &g1);
        &coeff * &idempotent(self.tag).expect("validated tag")
    }

    /// The matrix sandwich `(1 g1) idem [[α0, 0], [α1, 0]] (1; ±g1)`.
    pub fn sandwich_form(&self) -> Multivector {
        let l = layout(self.tag).expect("validated tag");
        let sig = self.tag.signature();
        let g1 = generator(self.tag, l.first);
        let idem = idempotent(self.tag).expect("validated tag");
        let row = [Multivector::one(&sig), g1.clone()];
        let col = [Multivector::one(&sig), g1.scale(l.metric)];
        let matrix = [
            [self.a0.to_multivector(self.tag), Multivector::zero(&sig)],
            [self.a1.to_multivector(self.tag), Multivector::zero(&sig)],
        ];
        let mut out = Multivector::zero(&sig);
        for j in 0..2 {
            for k in 0..2 {
                out += &(&(&(&row[j] * &idem) * &matrix[j][k]) * &col[k]);
            }
        }
        out
    }

    /// Recovers `(α0, α1)` from an element of the ideal.
    pub fn from_multivector(m: &Multivector, tag: AlgebraTag) -> Result<Self> {
        let l = layout(tag)?;
        tag.require(m)?;
        let idem = idempotent(tag)?;
        let residual = (m * &idem).max_abs_diff(m);
        if residual > DEFAULT_TOL * m.max_abs().max(1.0) {
            return Err(Error::NotInIdeal(residual));
        }
        let g1 = generator(tag, l.first);
        let g1_inv = g1.scale(l.metric);
        let a0 = center_part(m).scale(2.0);
        let a1 = center_part(&(&g1_inv * m)).scale(2.0);
        GSpinor::new(tag, a0, a1)
    }

    /// `(|α⟩, ⟨α|) = (√2 α, √2 α̃)`.
    pub fn braket(&self) -> (Multivector, Multivector) {
        let a = self.to_multivector();
        let k = std::f64::consts::SQRT_2;
        (a.scale(k), a.reverse().scale(k))
    }

    /// `⟨α|α⟩`: `|α0|² + |α1|²` in G3, `|α0|² - |α1|²` in G1,2.
    pub fn norm_sq(&self) -> f64 {
        let l = layout(self.tag).expect("validated tag");
        self.a0.norm_sq() + l.metric * self.a1.norm_sq()
    }

    pub fn canonical_form(&self) -> Result<CanonicalG> {
        let l = layout(self.tag)?;
        let a0_abs = self.a0.abs();
        if a0_abs == 0.0 {
            return Err(Error::DegenerateState("α0 = 0 has no finite chart point"));
        }
        let rho2 = self.norm_sq();
        if rho2 <= 0.0 {
            return Err(Error::NonTimelike(rho2));
        }
        let z = self.a1 * self.a0.inverse().expect("α0 ≠ 0");
        // z g1 idem = (a g1 + b i g1) idem, and i g1 idem = metric·g2 idem
        let x = [z.s, l.metric * z.p];
        let x_m = &generator(self.tag, l.first).scale(x[0]) + &generator(self.tag, l.second).scale(x[1]);
        let m = &x_m + &generator(self.tag, l.pole);
        let m2 = (&m * &m).scalar_part();
        let m_hat = m.scale(1.0 / m2.sqrt());
        Ok(CanonicalG {
            rho: rho2.sqrt(),
            theta: self.a0.arg(),
            x,
            x_m,
            m,
            m_hat,
        })
    }

    /// `ρ e^{iθ} m̂ idempotent` from a canonical form.
    pub fn reconstruct(tag: AlgebraTag, c: &CanonicalG) -> Result<Multivector> {
        let phase = CenterScalar::new(c.theta.cos(), c.theta.sin()).scale(c.rho);
        Ok(&(&phase.to_multivector(tag) * &c.m_hat) * &idempotent(tag)?)
    }

    /// Unit vector `â = m̂ g_pole m̂`.
    pub fn bloch_vector(&self) -> Result<Multivector> {
        let l = layout(self.tag)?;
        let c = self.canonical_form()?;
        Ok(&(&c.m_hat * &generator(self.tag, l.pole)) * &c.m_hat)
    }

    /// The normalized spinor `α/ρ`.
    pub fn normalized(&self) -> Result<GSpinor> {
        let n = self.norm_sq();
        if n <= 0.0 {
            return Err(Error::NonTimelike(n));
        }
        Ok(self.scale(1.0 / n.sqrt()))
    }
}

fn same_tag(a: &GSpinor, b: &GSpinor) -> Result<()> {
    if a.tag == b.tag {
        Ok(())
    } else {
        Err(Error::TagMismatch(format!("{} vs {}", a.tag, b.tag)))
    }
}

/// `⟨α|β⟩` from the components.
pub fn inner(a: &GSpinor, b: &GSpinor) -> Result<CenterScalar> {
    same_tag(a, b)?;
    let l = layout(a.tag)?;
    Ok(a.a0.conj() * b.a0 + (a.a1.conj() * b.a1).scale(l.metric))
}

/// `⟨α|β⟩ = 2⟨α̃ β⟩₀₊₃` evaluated in the algebra.
pub fn inner_in_algebra(a: &GSpinor, b: &GSpinor) -> Result<CenterScalar> {
    same_tag(a, b)?;
    let product = &a.to_multivector().reverse() * &b.to_multivector();
    Ok(center_part(&product).scale(2.0))
}

/// Several evaluations of the transition quantity between two normalized states.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FidelityRoutes {
    /// `⟨β|α⟩⟨α|β⟩`, the product of the two inner products in the algebra.
    pub chain: f64,
    /// `½(1 + â·b̂)`
    pub dot_form: f64,
    /// `1 - (m_a - m_b)²/(m_a² m_b²)`
    pub distance_form: f64,
    /// `4⟨(α̃β)~(α̃β)⟩₀₊₃`, which equals twice the other three.
    pub doubled_chain: f64,
}

impl FidelityRoutes {
    /// Largest pairwise disagreement among the three routes that should agree.
    pub fn spread(&self) -> f64 {
        let v = [self.chain, self.dot_form, self.distance_form];
        let hi = v.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        let lo = v.iter().cloned().fold(f64::INFINITY, f64::min);
        hi - lo
    }
}

pub fn fidelity_routes(a: &GSpinor, b: &GSpinor) -> Result<FidelityRoutes> {
    same_tag(a, b)?;
    let l = layout(a.tag)?;
    let ca = a.canonical_form()?;
    let cb = b.canonical_form()?;
    let na = a.normalized()?;
    let nb = b.normalized()?;

    let ab = inner_in_algebra(&na, &nb)?.to_multivector(a.tag);
    let ba = inner_in_algebra(&nb, &na)?.to_multivector(a.tag);
    let chain = (&ba * &ab).scalar_part();

    let pole = generator(a.tag, l.pole);
    let a_hat = &(&ca.m_hat * &pole) * &ca.m_hat;
    let b_hat = &(&cb.m_hat * &pole) * &cb.m_hat;
    let dot_form = 0.5 * (1.0 + crate::ga::dot(&a_hat, &b_hat)?);

    let diff = &ca.m - &cb.m;
    let sq = |v: &Multivector| (v * v).scalar_part();
    let distance_form = 1.0 - sq(&diff) / (sq(&ca.m) * sq(&cb.m));

    let g = &na.to_multivector().reverse() * &nb.to_multivector();
    let doubled_chain = 4.0 * center_part(&(&g.reverse() * &g)).s;

    Ok(FidelityRoutes {
        chain,
        dot_form,
        distance_form,
        doubled_chain,
    })
}

/// `⟨β|α⟩⟨α|β⟩` for the normalized states; in `[0, 1]` on the Bloch sphere
/// and `≥ 1` on the Bloch hyperboloid.
pub fn fidelity(a: &GSpinor, b: &GSpinor) -> Result<f64> {
    Ok(fidelity_routes(a, b)?.chain)
}

/// The chart point `x_b = -x_a/|x_a|²` whose lifted state is antipodal to `x_a`.
pub fn antipodal_state(x_a: &PlanePoint) -> Result<PlanePoint> {
    let r2 = x_a.norm_sq();
    if r2 == 0.0 {
        return Err(Error::DegenerateState(
            "the antipode of the pole is the excluded projection point",
        ));
    }
    Ok(PlanePoint::new([-x_a.x[0] / r2, -x_a.x[1] / r2, -x_a.x[2] / r2]))
}

#[cfg(test)]
mod tests {
    use super::*;

    const P3: AlgebraTag = AlgebraTag::Pauli3;
    const M12: AlgebraTag = AlgebraTag::Minkowski12;

    fn cs(s: f64, p: f64) -> CenterScalar {
        CenterScalar::new(s, p)
    }

    #[test]
    fn pseudoscalars_are_central_and_square_to_minus_one() {
        for tag in [P3, M12] {
            let i = cs(0.0, 1.0).to_multivector(tag);
            assert_eq!((&i * &i).scalar_part(), -1.0);
            for k in 0..3 {
                let g = Multivector::generator(&tag.signature(), k);
                assert_eq!(&i * &g, &g * &i);
            }
        }
    }

    #[test]
    fn basis_images() {
        let u = idempotent(P3).unwrap();
        let up = GSpinor::new(P3, CenterScalar::ONE, CenterScalar::ZERO).unwrap();
        assert_eq!(up.to_multivector(), u);
        let down = GSpinor::new(P3, CenterScalar::ZERO, CenterScalar::ONE).unwrap();
        let e1 = Multivector::generator(&P3.signature(), 0);
        assert_eq!(down.to_multivector(), &e1 * &u);
    }

    #[test]
    fn sandwich_matches_direct_form() {
        for tag in [P3, M12] {
            let psi = GSpinor::new(tag, cs(0.3, -1.2), cs(2.0, 0.7)).unwrap();
            assert!(psi.sandwich_form().approx_eq(&psi.to_multivector(), 1e-15));
        }
    }

    #[test]
    fn ideal_round_trip_and_rejection() {
        for tag in [P3, M12] {
            let psi = GSpinor::new(tag, cs(0.3, -1.2), cs(2.0, 0.7)).unwrap();
            let back = GSpinor::from_multivector(&psi.to_multivector(), tag).unwrap();
            assert!(back.a0.max_abs_diff(psi.a0) < 1e-15);
            assert!(back.a1.max_abs_diff(psi.a1) < 1e-15);
            let one = Multivector::one(&tag.signature());
            assert!(matches!(
                GSpinor::from_multivector(&one, tag),
                Err(Error::NotInIdeal(_))
            ));
        }
    }

    #[test]
    fn braket_of_up_state() {
        let up = GSpinor::new(P3, CenterScalar::ONE, CenterScalar::ZERO).unwrap();
        let (ket, bra) = up.braket();
        let u = idempotent(P3).unwrap().scale(std::f64::consts::SQRT_2);
        assert!(ket.approx_eq(&u, 1e-15));
        assert!(bra.approx_eq(&u, 1e-15));
    }

    #[test]
    fn canonical_examples() {
        let up = GSpinor::new(P3, CenterScalar::ONE, CenterScalar::ZERO).unwrap();
        let c = up.canonical_form().unwrap();
        assert_eq!((c.rho, c.theta, c.x), (1.0, 0.0, [0.0, 0.0]));
        assert_eq!(c.m_hat, Multivector::generator(&P3.signature(), 2));

        let psi = GSpinor::new(P3, CenterScalar::ONE, CenterScalar::ONE).unwrap();
        let c = psi.canonical_form().unwrap();
        assert_eq!(c.x, [1.0, 0.0]);
        assert!((c.rho - 2f64.sqrt()).abs() < 1e-15);
        let expected = Multivector::vector(&P3.signature(), &[1.0, 0.0, 1.0])
            .scale(std::f64::consts::FRAC_1_SQRT_2);
        assert!(c.m_hat.approx_eq(&expected, 1e-15));

        let down = GSpinor::new(P3, CenterScalar::ZERO, CenterScalar::ONE).unwrap();
        assert!(matches!(down.canonical_form(), Err(Error::DegenerateState(_))));

        let light = GSpinor::new(M12, CenterScalar::ONE, cs(0.0, 1.0)).unwrap();
        assert!(matches!(light.canonical_form(), Err(Error::NonTimelike(_))));
    }

    #[test]
    fn inner_examples() {
        let up = GSpinor::new(P3, CenterScalar::ONE, CenterScalar::ZERO).unwrap();
        let down = GSpinor::new(P3, CenterScalar::ZERO, CenterScalar::ONE).unwrap();
        assert_eq!(inner(&up, &up).unwrap(), CenterScalar::ONE);
        assert_eq!(inner(&up, &down).unwrap(), CenterScalar::ZERO);
        assert_eq!(inner_in_algebra(&up, &down).unwrap(), CenterScalar::ZERO);
        let other = GSpinor::new(M12, CenterScalar::ONE, CenterScalar::ZERO).unwrap();
        assert!(matches!(inner(&up, &other), Err(Error::TagMismatch(_))));
    }

    #[test]
    fn hyperboloid_example_is_four_thirds() {
        let a = GSpinor::from_plane(M12, [0.0, 0.0]).unwrap();
        let b = GSpinor::from_plane(M12, [0.5, 0.0]).unwrap();
        let r = fidelity_routes(&a, &b).unwrap();
        for v in [r.chain, r.dot_form, r.distance_form] {
            assert!((v - 4.0 / 3.0).abs() < 1e-14, "{r:?}");
        }
    }

    #[test]
    fn from_plane_lands_on_the_chart_point() {
        for tag in [P3, M12] {
            let psi = GSpinor::from_plane(tag, [0.3, -0.4]).unwrap();
            let c = psi.canonical_form().unwrap();
            assert!((c.x[0] - 0.3).abs() < 1e-15 && (c.x[1] + 0.4).abs() < 1e-15);
            assert!((c.rho - 1.0).abs() < 1e-15);
        }
        assert!(GSpinor::from_plane(M12, [0.6, 0.8]).is_err());
    }

    #[test]
    fn antipode_examples() {
        let x = antipodal_state(&PlanePoint::new([1.0, 0.0, 0.0])).unwrap();
        assert_eq!(x, PlanePoint::new([-1.0, 0.0, 0.0]));
        let x = antipodal_state(&PlanePoint::new([0.0, 2.0, 0.0])).unwrap();
        assert_eq!(x, PlanePoint::new([0.0, -0.5, 0.0]));
        assert!(antipodal_state(&PlanePoint::ORIGIN).is_err());
    }
}
