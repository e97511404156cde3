//! Two spectral-basis representations of Cl(4,0) as 2×2 quaternion matrices.
//!
//! The `e` basis is built on the idempotents `e± = ½(1 ± e0)`, the `I` basis
//! on `I± = ½(1 ± e0123)`. In both, a quaternion entry `x0 + i x` stands for
//! the Cl(4,0) element of [`Quaternion::to_multivector`].

use std::ops::{Add, Mul, Sub};
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::ga::{Multivector, Signature};
use crate::quaternion::Quaternion;

/// 2×2 matrix over the quaternions; `m[row][col]`.
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct QuatMatrix2 {
    pub m: [[Quaternion; 2]; 2],
}

impl QuatMatrix2 {
    pub const fn new(m: [[Quaternion; 2]; 2]) -> Self {
        QuatMatrix2 { m }
    }

    pub fn zero() -> Self {
        QuatMatrix2::default()
    }

    pub fn identity() -> Self {
        Self::from_real([[1.0, 0.0], [0.0, 1.0]])
    }

    pub fn from_real(r: [[f64; 2]; 2]) -> Self {
        QuatMatrix2::new([
            [Quaternion::scalar(r[0][0]), Quaternion::scalar(r[0][1])],
            [Quaternion::scalar(r[1][0]), Quaternion::scalar(r[1][1])],
        ])
    }

    /// Row-into-column product; each entry sums `a[r][k] * b[k][c]` with the
    /// quaternion factors kept in that order.
    pub fn matmul(&self, other: &QuatMatrix2) -> QuatMatrix2 {
        let mut out = QuatMatrix2::zero();
        for r in 0..2 {
            for c in 0..2 {
                out.m[r][c] = self.m[r][0] * other.m[0][c] + self.m[r][1] * other.m[1][c];
            }
        }
        out
    }

    /// Conjugate transpose `M*`.
    pub fn star(&self) -> QuatMatrix2 {
        let mut out = QuatMatrix2::zero();
        for r in 0..2 {
            for c in 0..2 {
                out.m[r][c] = self.m[c][r].conj();
            }
        }
        out
    }

    pub fn scale(&self, k: f64) -> QuatMatrix2 {
        self.map(|q| q.scale(k))
    }

    fn map(&self, f: impl Fn(Quaternion) -> Quaternion) -> QuatMatrix2 {
        let mut out = *self;
        for row in out.m.iter_mut() {
            for q in row.iter_mut() {
                *q = f(*q);
            }
        }
        out
    }

    pub fn max_abs_diff(&self, other: &QuatMatrix2) -> f64 {
        let mut worst = 0.0f64;
        for r in 0..2 {
            for c in 0..2 {
                worst = worst.max(self.m[r][c].max_abs_diff(other.m[r][c]));
            }
        }
        worst
    }
}

impl Mul for QuatMatrix2 {
    type Output = QuatMatrix2;
    fn mul(self, rhs: QuatMatrix2) -> QuatMatrix2 {
        self.matmul(&rhs)
    }
}

impl Add for QuatMatrix2 {
    type Output = QuatMatrix2;
    fn add(self, rhs: QuatMatrix2) -> QuatMatrix2 {
        let mut out = self;
        for r in 0..2 {
            for c in 0..2 {
                out.m[r][c] = self.m[r][c] + rhs.m[r][c];
            }
        }
        out
    }
}

impl Sub for QuatMatrix2 {
    type Output = QuatMatrix2;
    fn sub(self, rhs: QuatMatrix2) -> QuatMatrix2 {
        self + rhs.scale(-1.0)
    }
}

/// 2×2 matrix whose entries are Cl(4,0) multivectors. Used to state the
/// spectral-basis relations entirely inside the algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct MvMatrix2 {
    pub m: [[Multivector; 2]; 2],
}

impl MvMatrix2 {
    pub fn new(m: [[Multivector; 2]; 2]) -> Self {
        MvMatrix2 { m }
    }

    pub fn identity(sig: &Signature) -> Self {
        let one = Multivector::one(sig);
        let zero = Multivector::zero(sig);
        MvMatrix2::new([[one.clone(), zero.clone()], [zero, one]])
    }

    /// Outer product of a column and a row with `middle` sandwiched between.
    pub fn outer(col: [&Multivector; 2], middle: &Multivector, row: [&Multivector; 2]) -> Self {
        let entry = |r: usize, c: usize| &(col[r] * middle) * row[c];
        MvMatrix2::new([[entry(0, 0), entry(0, 1)], [entry(1, 0), entry(1, 1)]])
    }

    pub fn matmul(&self, other: &MvMatrix2) -> MvMatrix2 {
        let entry = |r: usize, c: usize| {
            &(&self.m[r][0] * &other.m[0][c]) + &(&self.m[r][1] * &other.m[1][c])
        };
        MvMatrix2::new([[entry(0, 0), entry(0, 1)], [entry(1, 0), entry(1, 1)]])
    }

    /// Conjugate transpose with reversion as the entry conjugation.
    pub fn star(&self) -> MvMatrix2 {
        let entry = |r: usize, c: usize| self.m[c][r].reverse();
        MvMatrix2::new([[entry(0, 0), entry(0, 1)], [entry(1, 0), entry(1, 1)]])
    }

    pub fn scale(&self, k: f64) -> MvMatrix2 {
        let entry = |r: usize, c: usize| self.m[r][c].scale(k);
        MvMatrix2::new([[entry(0, 0), entry(0, 1)], [entry(1, 0), entry(1, 1)]])
    }

    pub fn max_abs_diff(&self, other: &MvMatrix2) -> f64 {
        let mut worst = 0.0f64;
        for r in 0..2 {
            for c in 0..2 {
                worst = worst.max(self.m[r][c].max_abs_diff(&other.m[r][c]));
            }
        }
        worst
    }
}

/// Named elements of Cl(4,0) used by the spectral bases.
pub struct SpectralElements {
    pub e0: Multivector,
    /// `i = e123`
    pub i: Multivector,
    pub e_plus: Multivector,
    pub e_minus: Multivector,
    pub big_i_plus: Multivector,
    pub big_i_minus: Multivector,
    pub i_plus: Multivector,
    pub i_minus: Multivector,
}

impl SpectralElements {
    pub fn new() -> Self {
        let g4 = Signature::euclidean4();
        let one = Multivector::one(&g4);
        let e0 = Multivector::generator(&g4, 0);
        let i = Multivector::blade(&g4, 0b1110);
        let e0123 = Multivector::blade(&g4, 0b1111);
        let half = |x: &Multivector, sign: f64| (&one + &x.scale(sign)).scale(0.5);
        SpectralElements {
            e_plus: half(&e0, 1.0),
            e_minus: half(&e0, -1.0),
            big_i_plus: half(&e0123, 1.0),
            big_i_minus: half(&e0123, -1.0),
            i_plus: half(&i, 1.0),
            i_minus: half(&i, -1.0),
            e0,
            i,
        }
    }
}

impl Default for SpectralElements {
    fn default() -> Self {
        Self::new()
    }
}

fn require_g4(g: &Multivector) -> Result<()> {
    let g4 = Signature::euclidean4();
    if *g.signature() == g4 {
        Ok(())
    } else {
        Err(Error::SignatureMismatch {
            expected: g4.to_string(),
            found: g.signature().to_string(),
        })
    }
}

fn vector_generator_matrix(k: usize) -> QuatMatrix2 {
    let u = Quaternion::unit(k);
    QuatMatrix2::new([[Quaternion::ZERO, u], [-u, Quaternion::ZERO]])
}

// Blade images as ordered products of generator matrices.
fn blade_table(generators: [QuatMatrix2; 4]) -> [QuatMatrix2; 16] {
    let mut table = [QuatMatrix2::identity(); 16];
    for (mask, slot) in table.iter_mut().enumerate() {
        for (k, g) in generators.iter().enumerate() {
            if mask >> k & 1 == 1 {
                *slot = slot.matmul(g);
            }
        }
    }
    table
}

/// Matrices of e0..e3 in the `e` spectral basis.
pub fn e_generators() -> [QuatMatrix2; 4] {
    [
        QuatMatrix2::from_real([[1.0, 0.0], [0.0, -1.0]]),
        vector_generator_matrix(1),
        vector_generator_matrix(2),
        vector_generator_matrix(3),
    ]
}

/// Matrices of e0..e3 in the `I` spectral basis.
pub fn i_generators() -> [QuatMatrix2; 4] {
    [
        QuatMatrix2::from_real([[0.0, 1.0], [1.0, 0.0]]),
        vector_generator_matrix(1),
        vector_generator_matrix(2),
        vector_generator_matrix(3),
    ]
}

fn e_table() -> &'static [QuatMatrix2; 16] {
    static TABLE: OnceLock<[QuatMatrix2; 16]> = OnceLock::new();
    TABLE.get_or_init(|| blade_table(e_generators()))
}

fn i_table() -> &'static [QuatMatrix2; 16] {
    static TABLE: OnceLock<[QuatMatrix2; 16]> = OnceLock::new();
    TABLE.get_or_init(|| blade_table(i_generators()))
}

fn by_linearity(g: &Multivector, table: &[QuatMatrix2; 16]) -> QuatMatrix2 {
    g.coeffs()
        .iter()
        .zip(table)
        .filter(|(c, _)| **c != 0.0)
        .fold(QuatMatrix2::zero(), |acc, (c, m)| acc + m.scale(*c))
}

/// Matrix of `g` in the `e` spectral basis.
pub fn rep_e(g: &Multivector) -> Result<QuatMatrix2> {
    require_g4(g)?;
    Ok(by_linearity(g, e_table()))
}

/// Matrix of `g` in the `I` spectral basis.
#[allow(non_snake_case)]
pub fn rep_I(g: &Multivector) -> Result<QuatMatrix2> {
    require_g4(g)?;
    Ok(by_linearity(g, i_table()))
}

fn sandwich(row: [&Multivector; 2], idem: &Multivector, m: &QuatMatrix2, col: [&Multivector; 2]) -> Multivector {
    let mut out = Multivector::zero(&Signature::euclidean4());
    for j in 0..2 {
        let left = row[j] * idem;
        for k in 0..2 {
            let entry = m.m[j][k].to_multivector();
            out += &(&(&left * &entry) * col[k]);
        }
    }
    out
}

/// `(1 i) e₊ M (1; -i)`: the element whose `e`-basis matrix is `M`.
pub fn unrep_e(m: &QuatMatrix2) -> Multivector {
    let s = SpectralElements::new();
    let one = Multivector::one(&Signature::euclidean4());
    let minus_i = -&s.i;
    sandwich([&one, &s.i], &s.e_plus, m, [&one, &minus_i])
}

/// `(1 e0) I₊ M (1; e0)`: the element whose `I`-basis matrix is `M`.
#[allow(non_snake_case)]
pub fn unrep_I(m: &QuatMatrix2) -> Multivector {
    let s = SpectralElements::new();
    let one = Multivector::one(&Signature::euclidean4());
    sandwich([&one, &s.e0], &s.big_i_plus, m, [&one, &s.e0])
}

/// `A = (1/√2)[[1, 1], [-1, 1]]`.
pub fn a_matrix() -> QuatMatrix2 {
    QuatMatrix2::from_real([[1.0, 1.0], [-1.0, 1.0]]).scale(std::f64::consts::FRAC_1_SQRT_2)
}

/// `A⁻¹ = (1/√2)[[1, -1], [1, 1]]`.
pub fn a_inverse() -> QuatMatrix2 {
    QuatMatrix2::from_real([[1.0, -1.0], [1.0, 1.0]]).scale(std::f64::consts::FRAC_1_SQRT_2)
}

/// Converts an `I`-basis matrix to the `e` basis: `A M A⁻¹`.
pub fn change_basis(m_i: &QuatMatrix2) -> QuatMatrix2 {
    a_matrix().matmul(m_i).matmul(&a_inverse())
}

/// `B = (√2/2)[[i₊, i₋], [-i₋, i₊]]` as a matrix of multivectors.
pub fn b_matrix() -> MvMatrix2 {
    let s = SpectralElements::new();
    MvMatrix2::new([
        [s.i_plus.clone(), s.i_minus.clone()],
        [-&s.i_minus, s.i_plus.clone()],
    ])
    .scale(std::f64::consts::FRAC_1_SQRT_2)
}

/// Residuals of the relations linking the two spectral bases, all evaluated
/// in Cl(4,0).
#[derive(Clone, Debug, PartialEq)]
pub struct IdentityResiduals {
    /// `I₊ - 2 i₋ e₊ i₊`
    pub big_i_from_e: f64,
    /// `e₊ - 2 i₊ I₊ i₋`
    pub e_from_big_i: f64,
    /// `e₊I₊e₊ + e₋I₋e₋ - ½`
    pub half_sum: f64,
    /// `[[I₊, e0I₋], [e0I₊, I₋]] - (i₋; i₊)(e₊ + ie₋, e₊ - ie₋)`
    pub basis_factorization: f64,
    /// `[[e₊, -ie₋], [ie₊, e₋]] - 2(i₊; -i₋) I₊ (i₋, -i₊)`
    pub e_basis_outer: f64,
    /// `[[e₊, -ie₋], [ie₊, e₋]] - B [[I₊, e0I₋], [e0I₊, I₋]] B*`
    pub e_basis_via_b: f64,
    /// Max-norm distance of `B B*` from the identity; large because `B` is singular.
    pub b_b_star_deviation: f64,
}

impl IdentityResiduals {
    /// Largest residual among the relations that should vanish.
    pub fn max_residual(&self) -> f64 {
        [
            self.big_i_from_e,
            self.e_from_big_i,
            self.half_sum,
            self.basis_factorization,
            self.e_basis_outer,
            self.e_basis_via_b,
        ]
        .into_iter()
        .fold(0.0, f64::max)
    }
}

/// Evaluates the spectral-basis identities and reports their residuals.
pub fn idempotent_identities() -> IdentityResiduals {
    let s = SpectralElements::new();
    let g4 = Signature::euclidean4();
    let one = Multivector::one(&g4);

    let big_i_from_e =
        (&s.big_i_plus - &(&(&s.i_minus * &s.e_plus) * &s.i_plus).scale(2.0)).max_abs();
    let e_from_big_i =
        (&s.e_plus - &(&(&s.i_plus * &s.big_i_plus) * &s.i_minus).scale(2.0)).max_abs();
    let half_sum = (&(&(&(&s.e_plus * &s.big_i_plus) * &s.e_plus)
        + &(&(&s.e_minus * &s.big_i_minus) * &s.e_minus))
        - &one.scale(0.5))
        .max_abs();

    let i_basis = MvMatrix2::new([
        [s.big_i_plus.clone(), &s.e0 * &s.big_i_minus],
        [&s.e0 * &s.big_i_plus, s.big_i_minus.clone()],
    ]);
    let ie_minus = &s.i * &s.e_minus;
    let factored = MvMatrix2::outer(
        [&s.i_minus, &s.i_plus],
        &one,
        [&(&s.e_plus + &ie_minus), &(&s.e_plus - &ie_minus)],
    );
    let basis_factorization = i_basis.max_abs_diff(&factored);

    let e_basis = MvMatrix2::new([
        [s.e_plus.clone(), -&ie_minus],
        [&s.i * &s.e_plus, s.e_minus.clone()],
    ]);
    let minus_i_minus = -&s.i_minus;
    let minus_i_plus = -&s.i_plus;
    let outer = MvMatrix2::outer(
        [&s.i_plus, &minus_i_minus],
        &s.big_i_plus,
        [&s.i_minus, &minus_i_plus],
    )
    .scale(2.0);
    let e_basis_outer = e_basis.max_abs_diff(&outer);

    let b = b_matrix();
    let via_b = b.matmul(&i_basis).matmul(&b.star());
    let e_basis_via_b = e_basis.max_abs_diff(&via_b);
    let b_b_star_deviation = b.matmul(&b.star()).max_abs_diff(&MvMatrix2::identity(&g4));

    IdentityResiduals {
        big_i_from_e,
        e_from_big_i,
        half_sum,
        basis_factorization,
        e_basis_outer,
        e_basis_via_b,
        b_b_star_deviation,
    }
}
