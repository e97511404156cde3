//! The algebra isomorphism Cl(4,0) ≅ Cl(1,3) given on generators by
//! `e0 ↔ γ0` and `e_k ↔ γ_k γ0`, extended blade by blade.
//!
//! Grades are not preserved: the Euclidean vectors `e_k` become spacetime
//! bivectors, and the spacelike `γ_k` become the bivectors `e_k e0`.

use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::ga::{Multivector, Signature};

/// The four algebras used by the crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AlgebraTag {
    /// Cl(4,0)
    Euclidean4,
    /// Cl(1,3)
    Spacetime13,
    /// Cl(3,0)
    Pauli3,
    /// Cl(1,2)
    Minkowski12,
}

impl AlgebraTag {
    pub fn signature(self) -> Signature {
        match self {
            AlgebraTag::Euclidean4 => Signature::euclidean4(),
            AlgebraTag::Spacetime13 => Signature::spacetime(),
            AlgebraTag::Pauli3 => Signature::pauli3(),
            AlgebraTag::Minkowski12 => Signature::minkowski12(),
        }
    }

    /// Tag for a signature, if it is one of the four standard algebras.
    pub fn of(sig: &Signature) -> Option<Self> {
        [
            AlgebraTag::Euclidean4,
            AlgebraTag::Spacetime13,
            AlgebraTag::Pauli3,
            AlgebraTag::Minkowski12,
        ]
        .into_iter()
        .find(|t| t.signature() == *sig)
    }

    pub fn require(self, m: &Multivector) -> Result<()> {
        let sig = self.signature();
        if *m.signature() == sig {
            Ok(())
        } else {
            Err(Error::SignatureMismatch {
                expected: sig.to_string(),
                found: m.signature().to_string(),
            })
        }
    }
}

impl fmt::Display for AlgebraTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            AlgebraTag::Euclidean4 => "G4",
            AlgebraTag::Spacetime13 => "G1,3",
            AlgebraTag::Pauli3 => "G3",
            AlgebraTag::Minkowski12 => "G1,2",
        };
        f.write_str(name)
    }
}

fn blade_images(source: &Signature, target: &Signature, generator_image: impl Fn(usize) -> Multivector) -> Vec<Multivector> {
    let gens: Vec<Multivector> = (0..source.dim()).map(generator_image).collect();
    (0..source.size())
        .map(|mask| {
            gens.iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .fold(Multivector::one(target), |acc, (_, g)| &acc * g)
        })
        .collect()
}

fn g4_images() -> &'static [Multivector] {
    static TABLE: OnceLock<Vec<Multivector>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let sta = Signature::spacetime();
        let g0 = Multivector::generator(&sta, 0);
        blade_images(&Signature::euclidean4(), &sta, |k| {
            let gk = Multivector::generator(&sta, k);
            if k == 0 {
                gk
            } else {
                &gk * &g0
            }
        })
    })
}

fn sta_images() -> &'static [Multivector] {
    static TABLE: OnceLock<Vec<Multivector>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let g4 = Signature::euclidean4();
        let e0 = Multivector::generator(&g4, 0);
        blade_images(&Signature::spacetime(), &g4, |k| {
            let ek = Multivector::generator(&g4, k);
            if k == 0 {
                ek
            } else {
                &ek * &e0
            }
        })
    })
}

fn apply(g: &Multivector, images: &[Multivector], target: &Signature) -> Multivector {
    let mut out = Multivector::zero(target);
    for (c, img) in g.coeffs().iter().zip(images) {
        if *c != 0.0 {
            out += &img.scale(*c);
        }
    }
    out
}

/// Cl(4,0) → Cl(1,3).
pub fn g4_to_sta(g: &Multivector) -> Result<Multivector> {
    AlgebraTag::Euclidean4.require(g)?;
    Ok(apply(g, g4_images(), &Signature::spacetime()))
}

/// Cl(1,3) → Cl(4,0).
pub fn sta_to_g4(g: &Multivector) -> Result<Multivector> {
    AlgebraTag::Spacetime13.require(g)?;
    Ok(apply(g, sta_images(), &Signature::euclidean4()))
}

/// Image of a single Cl(4,0) basis blade as `(sign, Cl(1,3) mask)`.
///
/// Every image is a signed basis blade, so this is exact.
pub fn g4_blade_image(mask: usize) -> (i8, usize) {
    signed_blade(&g4_images()[mask])
}

/// Image of a single Cl(1,3) basis blade as `(sign, Cl(4,0) mask)`.
pub fn sta_blade_image(mask: usize) -> (i8, usize) {
    signed_blade(&sta_images()[mask])
}

fn signed_blade(m: &Multivector) -> (i8, usize) {
    let (mask, c) = m
        .coeffs()
        .iter()
        .enumerate()
        .find(|(_, c)| **c != 0.0)
        .expect("blade image is nonzero");
    (if *c > 0.0 { 1 } else { -1 }, mask)
}
