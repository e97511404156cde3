//! Stereographic projection of the unit sphere S³ ⊂ R⁴ (Cl(4,0)) and of the
//! unit hyperboloid L³ ⊂ R^{1,3} (Cl(1,3)) onto flat 3-space, from the
//! point `-e0` (resp. `-γ0`). Generator 0 is always the pole axis.

use crate::error::{Error, Result};
use crate::ga::{exp_blade, Multivector, Signature, DEFAULT_TOL};

/// Tolerance used when validating points on S³ or L³.
pub const POINT_TOL: f64 = 1e-12;

/// Point of the flat chart: coefficients of `e1, e2, e3` (sphere) or
/// `γ1, γ2, γ3` (hyperboloid).
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct PlanePoint {
    pub x: [f64; 3],
}

impl PlanePoint {
    pub const ORIGIN: PlanePoint = PlanePoint { x: [0.0; 3] };

    pub const fn new(x: [f64; 3]) -> Self {
        PlanePoint { x }
    }

    /// Euclidean `|x|²`.
    pub fn norm_sq(&self) -> f64 {
        self.x.iter().map(|c| c * c).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sq().sqrt()
    }

    pub fn dot(&self, other: &[f64; 3]) -> f64 {
        self.x.iter().zip(other).map(|(a, b)| a * b).sum()
    }

    /// The chart point as a vector `x1 g1 + x2 g2 + x3 g3` of `sig`.
    pub fn to_vector(&self, sig: &Signature) -> Multivector {
        spatial_vector(sig, &self.x)
    }

    pub fn max_abs_diff(&self, other: &PlanePoint) -> f64 {
        self.x
            .iter()
            .zip(&other.x)
            .fold(0.0, |m, (a, b)| m.max((a - b).abs()))
    }
}

fn spatial_vector(sig: &Signature, x: &[f64; 3]) -> Multivector {
    Multivector::vector(sig, &[0.0, x[0], x[1], x[2]])
}

fn check_unit_vector(a: &Multivector, tol: f64) -> Result<f64> {
    if !a.is_vector(tol) {
        return Err(Error::NotAVector);
    }
    let sq = (a * a).scalar_part();
    if (sq - 1.0).abs() > tol {
        return Err(Error::DomainViolation(format!("â² = {sq}, expected 1")));
    }
    Ok(sq)
}

/// Unit vector `â` on S³ in Cl(4,0).
#[derive(Clone, Debug, PartialEq)]
pub struct SpherePoint {
    a_hat: Multivector,
}

impl SpherePoint {
    pub fn new(a_hat: Multivector) -> Result<Self> {
        if *a_hat.signature() != Signature::euclidean4() {
            return Err(Error::SignatureMismatch {
                expected: "4,0".into(),
                found: a_hat.signature().to_string(),
            });
        }
        check_unit_vector(&a_hat, POINT_TOL)?;
        Ok(SpherePoint { a_hat })
    }

    pub fn from_components(a: [f64; 4]) -> Result<Self> {
        Self::new(Multivector::vector(&Signature::euclidean4(), &a))
    }

    pub fn a_hat(&self) -> &Multivector {
        &self.a_hat
    }

    pub fn components(&self) -> [f64; 4] {
        let v = self.a_hat.vector_part();
        [v[0], v[1], v[2], v[3]]
    }
}

/// Unit timelike vector `â` on the future sheet L³ in Cl(1,3).
#[derive(Clone, Debug, PartialEq)]
pub struct HyperPoint {
    a_hat: Multivector,
}

impl HyperPoint {
    pub fn new(a_hat: Multivector) -> Result<Self> {
        if *a_hat.signature() != Signature::spacetime() {
            return Err(Error::SignatureMismatch {
                expected: "1,3".into(),
                found: a_hat.signature().to_string(),
            });
        }
        check_unit_vector(&a_hat, POINT_TOL)?;
        let a0 = a_hat.coeff(1);
        if a0 < 1.0 - POINT_TOL {
            return Err(Error::DomainViolation(format!(
                "γ0 component {a0} < 1: not on the future sheet"
            )));
        }
        Ok(HyperPoint { a_hat })
    }

    pub fn from_components(a: [f64; 4]) -> Result<Self> {
        Self::new(Multivector::vector(&Signature::spacetime(), &a))
    }

    pub fn a_hat(&self) -> &Multivector {
        &self.a_hat
    }

    pub fn components(&self) -> [f64; 4] {
        let v = self.a_hat.vector_part();
        [v[0], v[1], v[2], v[3]]
    }
}

/// `m = (â + e0)/(1 + e0·â) = e0 + x_m`.
pub fn sphere_m(a: &SpherePoint) -> Result<Multivector> {
    let e0 = Multivector::generator(&Signature::euclidean4(), 0);
    let denom = 1.0 + a.a_hat.coeff(1);
    if denom < DEFAULT_TOL {
        return Err(Error::PoleSingularity(denom));
    }
    Ok((&a.a_hat + &e0).scale(1.0 / denom))
}

/// Projects `â ∈ S³` from `-e0` onto the hyperplane through the origin.
pub fn project_sphere(a: &SpherePoint) -> Result<PlanePoint> {
    let m = sphere_m(a)?;
    Ok(PlanePoint::new([m.coeff(2), m.coeff(4), m.coeff(8)]))
}

/// `â = ((1 - x²) e0 + 2x)/(1 + x²)`.
pub fn lift_sphere(x: &PlanePoint) -> SpherePoint {
    let r2 = x.norm_sq();
    let d = 1.0 + r2;
    let a = [
        (1.0 - r2) / d,
        2.0 * x.x[0] / d,
        2.0 * x.x[1] / d,
        2.0 * x.x[2] / d,
    ];
    SpherePoint {
        a_hat: Multivector::vector(&Signature::euclidean4(), &a),
    }
}

/// Rotation taking the pole `e0` to the lifted point.
#[derive(Clone, Debug, PartialEq)]
pub struct SphereRotor {
    /// Angle from the pole, in `[0, π)`.
    pub theta: f64,
    pub cos_theta: f64,
    pub sin_theta: f64,
    /// `R = exp(θ x̂ e0 / 2)`
    pub rotor: Multivector,
}

/// `R = exp(θ x̂ e0 / 2)` with `cos θ = (1-x²)/(1+x²)`, `sin θ = 2|x|/(1+x²)`.
pub fn sphere_rotor(x: &PlanePoint) -> SphereRotor {
    let g4 = Signature::euclidean4();
    let r2 = x.norm_sq();
    let r = r2.sqrt();
    let cos_theta = (1.0 - r2) / (1.0 + r2);
    let sin_theta = 2.0 * r / (1.0 + r2);
    if r == 0.0 {
        return SphereRotor {
            theta: 0.0,
            cos_theta,
            sin_theta,
            rotor: Multivector::one(&g4),
        };
    }
    let theta = sin_theta.atan2(cos_theta);
    let x_hat = x.to_vector(&g4).scale(1.0 / r);
    let e0 = Multivector::generator(&g4, 0);
    let bivector = (&x_hat * &e0).scale(theta / 2.0);
    let rotor = exp_blade(&bivector).expect("x̂e0 squares to -1");
    SphereRotor {
        theta,
        cos_theta,
        sin_theta,
        rotor,
    }
}

/// The one-sided factor `(m̂ e0)²`, equal to `exp(θ x̂ e0)`; multiplying it
/// on the right by `e0` gives `â = m̂ e0 m̂`.
pub fn sphere_one_sided(x: &PlanePoint) -> Multivector {
    let g4 = Signature::euclidean4();
    let e0 = Multivector::generator(&g4, 0);
    let m = &e0 + &x.to_vector(&g4);
    let m_hat = m.scale(1.0 / (1.0 + x.norm_sq()).sqrt());
    let f = &m_hat * &e0;
    &f * &f
}

/// Tangent vector `dâ` and squared line element at a chart point.
#[derive(Clone, Debug, PartialEq)]
pub struct LineElement {
    pub da_hat: Multivector,
    pub ds2: f64,
}

/// `dâ = [2(1+x²) dx - 4(x·dx)(x + e0)]/(1+x²)²`, `(dâ)² = 4dx²/(1+x²)²`.
pub fn sphere_metric(x: &PlanePoint, dx: &[f64; 3]) -> LineElement {
    let g4 = Signature::euclidean4();
    let r2 = x.norm_sq();
    let d = 1.0 + r2;
    let xdx = x.dot(dx);
    let dx_v = spatial_vector(&g4, dx);
    let x_plus_e0 = &x.to_vector(&g4) + &Multivector::generator(&g4, 0);
    let da_hat = (&dx_v.scale(2.0 * d) - &x_plus_e0.scale(4.0 * xdx)).scale(1.0 / (d * d));
    let dx2: f64 = dx.iter().map(|c| c * c).sum();
    LineElement {
        da_hat,
        ds2: 4.0 * dx2 / (d * d),
    }
}

fn require_open_ball(x: &PlanePoint) -> Result<f64> {
    let r2 = x.norm_sq();
    // strict: the boundary sphere belongs to no point of L³
    if r2 < 1.0 {
        Ok(r2)
    } else {
        Err(Error::DomainViolation(format!(
            "|x| = {} is not inside the open unit ball",
            r2.sqrt()
        )))
    }
}

/// `â = ((1 + x²) γ0 + 2 x_m)/(1 - x²)` for `|x| < 1`.
pub fn lift_hyper(x: &PlanePoint) -> Result<HyperPoint> {
    let r2 = require_open_ball(x)?;
    let d = 1.0 - r2;
    let a = [
        (1.0 + r2) / d,
        2.0 * x.x[0] / d,
        2.0 * x.x[1] / d,
        2.0 * x.x[2] / d,
    ];
    Ok(HyperPoint {
        a_hat: Multivector::vector(&Signature::spacetime(), &a),
    })
}

/// `m = (â + γ0)/(1 + a0) = γ0 + x_m`.
pub fn hyper_m(a: &HyperPoint) -> Multivector {
    let g0 = Multivector::generator(&Signature::spacetime(), 0);
    (&a.a_hat + &g0).scale(1.0 / (1.0 + a.a_hat.coeff(1)))
}

/// Projects `â ∈ L³` from `-γ0` into the open unit ball.
pub fn project_hyper(a: &HyperPoint) -> PlanePoint {
    let m = hyper_m(a);
    PlanePoint::new([m.coeff(2), m.coeff(4), m.coeff(8)])
}

/// Boost taking `γ0` to the lifted point.
#[derive(Clone, Debug, PartialEq)]
pub struct HyperBoost {
    /// Rapidity `φ ≥ 0`.
    pub phi: f64,
    pub cosh_phi: f64,
    pub sinh_phi: f64,
    /// `R = exp(φ x̂ γ0 / 2)`
    pub rotor: Multivector,
}

/// `R = exp(φ x̂ γ0 / 2)` with `cosh φ = (1+x²)/(1-x²)`, `sinh φ = 2|x|/(1-x²)`.
pub fn hyper_boost(x: &PlanePoint) -> Result<HyperBoost> {
    let sta = Signature::spacetime();
    let r2 = require_open_ball(x)?;
    let r = r2.sqrt();
    let cosh_phi = (1.0 + r2) / (1.0 - r2);
    let sinh_phi = 2.0 * r / (1.0 - r2);
    if r == 0.0 {
        return Ok(HyperBoost {
            phi: 0.0,
            cosh_phi,
            sinh_phi,
            rotor: Multivector::one(&sta),
        });
    }
    // e^φ = cosh φ + sinh φ = (1 + r)/(1 - r)
    let phi = 2.0 * r.atanh();
    let x_hat = x.to_vector(&sta).scale(1.0 / r);
    let g0 = Multivector::generator(&sta, 0);
    let bivector = (&x_hat * &g0).scale(phi / 2.0);
    let rotor = exp_blade(&bivector).expect("x̂γ0 squares to +1");
    Ok(HyperBoost {
        phi,
        cosh_phi,
        sinh_phi,
        rotor,
    })
}

/// `dâ = [2(1-x²) dx + 4(x·dx)(x + γ0)]/(1-x²)²`, `(dâ)² = -4|dx|²/(1-x²)²`.
pub fn hyper_metric(x: &PlanePoint, dx: &[f64; 3]) -> Result<LineElement> {
    let sta = Signature::spacetime();
    let r2 = require_open_ball(x)?;
    let d = 1.0 - r2;
    let xdx = x.dot(dx);
    let dx_v = spatial_vector(&sta, dx);
    let x_plus_g0 = &x.to_vector(&sta) + &Multivector::generator(&sta, 0);
    let da_hat = (&dx_v.scale(2.0 * d) + &x_plus_g0.scale(4.0 * xdx)).scale(1.0 / (d * d));
    let dx2: f64 = dx.iter().map(|c| c * c).sum();
    Ok(LineElement {
        da_hat,
        ds2: -4.0 * dx2 / (d * d),
    })
}

/// Generator map sending `pole` to generator 0 and generators `0..pole` up
/// by one, so formulas written with the pole at index 0 apply to an algebra
/// whose distinguished axis is elsewhere (e.g. `e3` in Cl(3,0)).
pub fn pole_to_front(dim: usize, pole: usize) -> Vec<Option<usize>> {
    (0..dim)
        .map(|k| {
            Some(match k {
                k if k == pole => 0,
                k if k < pole => k + 1,
                k => k,
            })
        })
        .collect()
}

/// Inverse of [`pole_to_front`].
pub fn pole_from_front(dim: usize, pole: usize) -> Vec<Option<usize>> {
    let forward = pole_to_front(dim, pole);
    let mut inverse = vec![None; dim];
    for (k, t) in forward.iter().enumerate() {
        inverse[t.expect("total map")] = Some(k);
    }
    inverse
}
