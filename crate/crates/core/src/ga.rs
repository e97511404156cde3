//! Dense Clifford algebra Cl(p,q) over bit-indexed basis blades.
//!
//! Bit `k` of a blade mask selects generator `k`. Generators `0..p` square to
//! `+1`, generators `p..p+q` square to `-1`. Blades are stored in canonical
//! (ascending generator) order, so a product of two blades is a signed blade
//! whose sign comes from counting the transpositions needed to sort the
//! concatenated generator lists plus one metric factor per shared generator.
//!
//! Every other module in the crate is checked against this engine.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};

/// Largest supported `p + q`.
pub const MAX_DIM: usize = 6;

/// Default tolerance for composite floating-point checks.
pub const DEFAULT_TOL: f64 = 1e-12;

/// Sign of the reordering `a · b -> sorted(a ∪ b)` ignoring the metric.
///
/// Counts pairs `(i, j)` with `i` in `a`, `j` in `b` and `i > j`.
#[inline]
pub fn reorder_sign(a: u32, b: u32) -> i8 {
    let mut a = a >> 1;
    let mut swaps = 0u32;
    while a != 0 {
        swaps += (a & b).count_ones();
        a >>= 1;
    }
    if swaps & 1 == 0 {
        1
    } else {
        -1
    }
}

/// Number of generators in a blade.
#[inline]
pub fn grade_of(mask: usize) -> usize {
    mask.count_ones() as usize
}

/// Sign picked up by a grade-`k` blade under reversion, `(-1)^{k(k-1)/2}`.
#[inline]
pub fn reverse_sign(grade: usize) -> f64 {
    if (grade * grade.saturating_sub(1) / 2) % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

struct SignatureData {
    plus: usize,
    minus: usize,
    labels: Vec<String>,
    prefix: Option<String>,
    // products[a * size + b] = sign of blade_a * blade_b; the result mask is a ^ b.
    products: Vec<i8>,
}

/// Metric signature `(p, q)` together with generator labels.
///
/// Cloning is cheap; the blade product table is built once at construction.
#[derive(Clone)]
pub struct Signature(Arc<SignatureData>);

impl Signature {
    /// Builds a signature with explicit generator labels.
    pub fn with_labels<S: Into<String>>(
        plus: usize,
        minus: usize,
        labels: impl IntoIterator<Item = S>,
    ) -> Result<Self> {
        let dim = plus + minus;
        if dim == 0 {
            return Err(Error::InvalidSignature {
                plus,
                minus,
                reason: "p + q must be at least 1",
            });
        }
        if dim > MAX_DIM {
            return Err(Error::InvalidSignature {
                plus,
                minus,
                reason: "p + q must not exceed 6",
            });
        }
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() != dim {
            return Err(Error::InvalidSignature {
                plus,
                minus,
                reason: "one label per generator is required",
            });
        }
        let prefix = common_label_prefix(&labels);
        let size = 1usize << dim;
        let mut products = vec![0i8; size * size];
        for a in 0..size {
            for b in 0..size {
                let mut sign = reorder_sign(a as u32, b as u32);
                let shared = a & b;
                for k in plus..dim {
                    if shared >> k & 1 == 1 {
                        sign = -sign;
                    }
                }
                products[a * size + b] = sign;
            }
        }
        Ok(Signature(Arc::new(SignatureData {
            plus,
            minus,
            labels,
            prefix,
            products,
        })))
    }

    /// Standard labelling: the four algebras used throughout the crate get
    /// their conventional names, anything else is labelled `e1..en`.
    pub fn new(plus: usize, minus: usize) -> Result<Self> {
        match (plus, minus) {
            (4, 0) => Ok(Self::euclidean4()),
            (1, 3) => Ok(Self::spacetime()),
            (3, 0) => Ok(Self::pauli3()),
            (1, 2) => Ok(Self::minkowski12()),
            _ => Self::with_labels(plus, minus, (1..=plus + minus).map(|k| format!("e{k}"))),
        }
    }

    /// Cl(4,0) with generators e0..e3; e0 is the distinguished pole axis.
    pub fn euclidean4() -> Self {
        static SIG: OnceLock<Signature> = OnceLock::new();
        SIG.get_or_init(|| Self::with_labels(4, 0, ["e0", "e1", "e2", "e3"]).unwrap())
            .clone()
    }

    /// Cl(1,3) with generators γ0..γ3; γ0 is timelike.
    pub fn spacetime() -> Self {
        static SIG: OnceLock<Signature> = OnceLock::new();
        SIG.get_or_init(|| Self::with_labels(1, 3, ["γ0", "γ1", "γ2", "γ3"]).unwrap())
            .clone()
    }

    /// Cl(3,0) with generators e1..e3.
    pub fn pauli3() -> Self {
        static SIG: OnceLock<Signature> = OnceLock::new();
        SIG.get_or_init(|| Self::with_labels(3, 0, ["e1", "e2", "e3"]).unwrap())
            .clone()
    }

    /// Cl(1,2) with generators γ0..γ2.
    pub fn minkowski12() -> Self {
        static SIG: OnceLock<Signature> = OnceLock::new();
        SIG.get_or_init(|| Self::with_labels(1, 2, ["γ0", "γ1", "γ2"]).unwrap())
            .clone()
    }

    pub fn plus(&self) -> usize {
        self.0.plus
    }

    pub fn minus(&self) -> usize {
        self.0.minus
    }

    pub fn dim(&self) -> usize {
        self.0.plus + self.0.minus
    }

    /// Number of basis blades, `2^(p+q)`.
    pub fn size(&self) -> usize {
        1 << self.dim()
    }

    pub fn labels(&self) -> &[String] {
        &self.0.labels
    }

    /// Square of generator `k`.
    pub fn square(&self, k: usize) -> f64 {
        if k < self.0.plus {
            1.0
        } else {
            -1.0
        }
    }

    /// Signed product of two basis blades: `blade(a) * blade(b) = sign * blade(a ^ b)`.
    #[inline]
    pub fn blade_product(&self, a: usize, b: usize) -> (i8, usize) {
        (self.0.products[a * self.size() + b], a ^ b)
    }

    /// Name of a basis blade, e.g. `e12`, `γ013`, or `1` for the scalar.
    pub fn blade_name(&self, mask: usize) -> String {
        if mask == 0 {
            return "1".to_string();
        }
        let gens = (0..self.dim()).filter(|k| mask >> k & 1 == 1);
        match &self.0.prefix {
            Some(prefix) => {
                let mut name = prefix.clone();
                for k in gens {
                    name.push_str(&self.0.labels[k][prefix.len()..]);
                }
                name
            }
            None => gens
                .map(|k| self.0.labels[k].as_str())
                .collect::<Vec<_>>()
                .join("∧"),
        }
    }

    fn ensure_same(&self, other: &Signature) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::SignatureMismatch {
                expected: self.to_string(),
                found: other.to_string(),
            })
        }
    }
}

// Shared alphabetic prefix when every label is `prefix` followed by a single digit.
fn common_label_prefix(labels: &[String]) -> Option<String> {
    let first = labels.first()?;
    let mut chars: Vec<char> = first.chars().collect();
    let last = chars.pop()?;
    if !last.is_ascii_digit() {
        return None;
    }
    let prefix: String = chars.into_iter().collect();
    labels
        .iter()
        .all(|l| {
            l.strip_prefix(prefix.as_str())
                .map(|rest| rest.len() == 1 && rest.chars().all(|c| c.is_ascii_digit()))
                .unwrap_or(false)
        })
        .then_some(prefix)
}

impl PartialEq for Signature {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.plus == other.0.plus
                && self.0.minus == other.0.minus
                && self.0.labels == other.0.labels)
    }
}

impl Eq for Signature {}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.0.plus, self.0.minus)
    }
}

impl fmt::Debug for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cl({},{})[{}]", self.0.plus, self.0.minus, self.0.labels.join(","))
    }
}

/// Dense multivector: `coeffs[b]` is the coefficient of blade `b`.
#[derive(Clone, Debug, PartialEq)]
pub struct Multivector {
    sig: Signature,
    coeffs: Vec<f64>,
}

impl Multivector {
    pub fn zero(sig: &Signature) -> Self {
        Multivector {
            sig: sig.clone(),
            coeffs: vec![0.0; sig.size()],
        }
    }

    pub fn scalar(sig: &Signature, value: f64) -> Self {
        let mut m = Self::zero(sig);
        m.coeffs[0] = value;
        m
    }

    pub fn one(sig: &Signature) -> Self {
        Self::scalar(sig, 1.0)
    }

    /// Unit basis blade with the given mask.
    pub fn blade(sig: &Signature, mask: usize) -> Self {
        assert!(mask < sig.size(), "blade mask {mask} out of range for Cl({sig})");
        let mut m = Self::zero(sig);
        m.coeffs[mask] = 1.0;
        m
    }

    /// Generator `k` (e.g. e0 or γ1).
    pub fn generator(sig: &Signature, k: usize) -> Self {
        assert!(k < sig.dim(), "generator {k} out of range for Cl({sig})");
        Self::blade(sig, 1 << k)
    }

    /// Product of the listed generators in the given order.
    pub fn product_of_generators(sig: &Signature, gens: &[usize]) -> Self {
        gens.iter().fold(Self::one(sig), |acc, &k| {
            &acc * &Self::generator(sig, k)
        })
    }

    /// Grade-1 element with the given generator coefficients.
    pub fn vector(sig: &Signature, components: &[f64]) -> Self {
        assert_eq!(components.len(), sig.dim(), "one component per generator");
        let mut m = Self::zero(sig);
        for (k, &c) in components.iter().enumerate() {
            m.coeffs[1 << k] = c;
        }
        m
    }

    pub fn from_coeffs(sig: &Signature, coeffs: Vec<f64>) -> Result<Self> {
        if coeffs.len() != sig.size() {
            return Err(Error::LengthMismatch {
                expected: sig.size(),
                found: coeffs.len(),
            });
        }
        if let Some(idx) = coeffs.iter().position(|c| !c.is_finite()) {
            return Err(Error::NonFinite(idx));
        }
        Ok(Multivector {
            sig: sig.clone(),
            coeffs,
        })
    }

    pub fn signature(&self) -> &Signature {
        &self.sig
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn coeff(&self, mask: usize) -> f64 {
        self.coeffs[mask]
    }

    pub fn set_coeff(&mut self, mask: usize, value: f64) {
        self.coeffs[mask] = value;
    }

    pub fn scalar_part(&self) -> f64 {
        self.coeffs[0]
    }

    /// Coefficients of the grade-1 part in generator order.
    pub fn vector_part(&self) -> Vec<f64> {
        (0..self.sig.dim()).map(|k| self.coeffs[1 << k]).collect()
    }

    pub fn geometric_product(&self, other: &Multivector) -> Result<Multivector> {
        self.sig.ensure_same(&other.sig)?;
        let size = self.sig.size();
        let mut out = vec![0.0; size];
        for (a, &ca) in self.coeffs.iter().enumerate() {
            if ca == 0.0 {
                continue;
            }
            for (b, &cb) in other.coeffs.iter().enumerate() {
                if cb == 0.0 {
                    continue;
                }
                let (sign, mask) = self.sig.blade_product(a, b);
                out[mask] += f64::from(sign) * ca * cb;
            }
        }
        Ok(Multivector {
            sig: self.sig.clone(),
            coeffs: out,
        })
    }

    /// Reversion: grade-k part scaled by `(-1)^{k(k-1)/2}`.
    pub fn reverse(&self) -> Multivector {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(b, &c)| c * reverse_sign(grade_of(b)))
            .collect();
        Multivector {
            sig: self.sig.clone(),
            coeffs,
        }
    }

    /// Grade involution: odd grades change sign.
    pub fn grade_involution(&self) -> Multivector {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(b, &c)| if grade_of(b) % 2 == 1 { -c } else { c })
            .collect();
        Multivector {
            sig: self.sig.clone(),
            coeffs,
        }
    }

    /// Keeps only the listed grades.
    pub fn grade_select(&self, grades: &[usize]) -> Result<Multivector> {
        let dim = self.sig.dim();
        if let Some(&grade) = grades.iter().find(|&&g| g > dim) {
            return Err(Error::GradeOutOfRange { grade, dim });
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(b, &c)| if grades.contains(&grade_of(b)) { c } else { 0.0 })
            .collect();
        Ok(Multivector {
            sig: self.sig.clone(),
            coeffs,
        })
    }

    /// Single-grade projection `<a>_k`.
    pub fn grade(&self, k: usize) -> Result<Multivector> {
        self.grade_select(&[k])
    }

    /// Grades carrying a coefficient above `tol`.
    pub fn grades_present(&self, tol: f64) -> Vec<usize> {
        let mut grades: Vec<usize> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| c.abs() > tol)
            .map(|(b, _)| grade_of(b))
            .collect();
        grades.sort_unstable();
        grades.dedup();
        grades
    }

    pub fn is_vector(&self, tol: f64) -> bool {
        self.grades_present(tol).iter().all(|&g| g == 1)
    }

    pub fn scale(&self, factor: f64) -> Multivector {
        Multivector {
            sig: self.sig.clone(),
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    /// Largest absolute coefficient.
    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().fold(0.0, |m, c| m.max(c.abs()))
    }

    /// Largest componentwise difference; infinite when signatures differ.
    pub fn max_abs_diff(&self, other: &Multivector) -> f64 {
        if self.sig != other.sig {
            return f64::INFINITY;
        }
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .fold(0.0, |m, (a, b)| m.max((a - b).abs()))
    }

    pub fn approx_eq(&self, other: &Multivector, tol: f64) -> bool {
        self.max_abs_diff(other) <= tol
    }

    /// Euclidean norm of the coefficient vector.
    pub fn coeff_norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c * c).sum::<f64>().sqrt()
    }

    /// Coefficient-space inner product.
    pub fn coeff_dot(&self, other: &Multivector) -> f64 {
        self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a * b).sum()
    }

    /// Re-expresses this element in another algebra by sending generator `k`
    /// to generator `map[k]` of `target` (`None` drops a generator, which is
    /// only allowed where every coefficient touching it vanishes).
    ///
    /// Mapped generators must keep their squares.
    pub fn remap(&self, target: &Signature, map: &[Option<usize>]) -> Result<Multivector> {
        assert_eq!(map.len(), self.sig.dim(), "one entry per source generator");
        for (k, slot) in map.iter().enumerate() {
            if let Some(t) = *slot {
                if t >= target.dim() || target.square(t) != self.sig.square(k) {
                    return Err(Error::UnmappedGenerator(k));
                }
            }
        }
        let mut out = Multivector::zero(target);
        for (b, &c) in self.coeffs.iter().enumerate() {
            if c == 0.0 {
                continue;
            }
            let mut image = Multivector::one(target);
            for (k, slot) in map.iter().enumerate() {
                if b >> k & 1 == 0 {
                    continue;
                }
                match slot {
                    Some(t) => image = &image * &Multivector::generator(target, *t),
                    None => return Err(Error::UnmappedGenerator(k)),
                }
            }
            out += &image.scale(c);
        }
        Ok(out)
    }

    /// Formats with a caller-chosen number of significant digits; coefficients
    /// below `tol` are omitted.
    pub fn display_with(&self, tol: f64) -> String {
        let mut parts = Vec::new();
        for (b, &c) in self.coeffs.iter().enumerate() {
            if c.abs() <= tol {
                continue;
            }
            let name = self.sig.blade_name(b);
            let sign = if c < 0.0 { "-" } else { "+" };
            let mag = c.abs();
            let body = if b == 0 {
                format!("{mag}")
            } else if (mag - 1.0).abs() == 0.0 {
                name
            } else {
                format!("{mag}*{name}")
            };
            parts.push((sign, body));
        }
        if parts.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (sign, body)) in parts.into_iter().enumerate() {
            match (i, sign) {
                (0, "+") => {}
                (0, _) => out.push('-'),
                (_, s) => {
                    out.push(' ');
                    out.push_str(s);
                    out.push(' ');
                }
            }
            out.push_str(&body);
        }
        out
    }
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(0.0))
    }
}

/// Geometric product of two multivectors.
pub fn geometric_product(a: &Multivector, b: &Multivector) -> Result<Multivector> {
    a.geometric_product(b)
}

/// `v / v²` for a non-null vector.
pub fn vector_inverse(v: &Multivector) -> Result<Multivector> {
    vector_inverse_with_tol(v, DEFAULT_TOL)
}

pub fn vector_inverse_with_tol(v: &Multivector, tol: f64) -> Result<Multivector> {
    if !v.is_vector(tol) {
        return Err(Error::NotAVector);
    }
    let square = vector_square(v);
    if square.abs() < tol {
        return Err(Error::NullVector(square));
    }
    Ok(v.scale(1.0 / square))
}

// v² for a grade-1 element read straight off the metric.
fn vector_square(v: &Multivector) -> f64 {
    let sig = v.signature();
    (0..sig.dim())
        .map(|k| sig.square(k) * v.coeff(1 << k).powi(2))
        .sum()
}

/// Symmetric product `½(ab + ba)` of two vectors.
pub fn dot(a: &Multivector, b: &Multivector) -> Result<f64> {
    a.sig.ensure_same(&b.sig)?;
    if !a.is_vector(DEFAULT_TOL) || !b.is_vector(DEFAULT_TOL) {
        return Err(Error::NotAVector);
    }
    let sig = a.signature();
    Ok((0..sig.dim())
        .map(|k| sig.square(k) * a.coeff(1 << k) * b.coeff(1 << k))
        .sum())
}

/// Exponential of an element whose square is a real scalar.
///
/// `B² = -θ²` gives `cos θ + B sin θ / θ`, `B² = +φ²` gives
/// `cosh φ + B sinh φ / φ`, and `|B²| < tol` gives `1 + B`.
pub fn exp_blade(b: &Multivector) -> Result<Multivector> {
    exp_blade_with_tol(b, DEFAULT_TOL)
}

pub fn exp_blade_with_tol(b: &Multivector, tol: f64) -> Result<Multivector> {
    let square = b * b;
    let scalar = square.scalar_part();
    let mut rest = square.clone();
    rest.set_coeff(0, 0.0);
    // relative to the size of B² so large angles are not rejected by round-off
    let residual = rest.max_abs();
    if residual > tol * scalar.abs().max(1.0) {
        return Err(Error::NonScalarSquare(residual));
    }
    let one = Multivector::one(b.signature());
    if scalar.abs() < tol {
        return Ok(&one + b);
    }
    let (even, odd) = if scalar < 0.0 {
        let theta = (-scalar).sqrt();
        (theta.cos(), theta.sin() / theta)
    } else {
        let phi = scalar.sqrt();
        (phi.cosh(), phi.sinh() / phi)
    };
    Ok(&one.scale(even) + &b.scale(odd))
}

/// Signed Cayley table entry `(sign, mask)` for blades `a`, `b`.
pub fn cayley_entry(sig: &Signature, a: usize, b: usize) -> (i8, usize) {
    sig.blade_product(a, b)
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl $trait<&Multivector> for &Multivector {
            type Output = Multivector;
            fn $method(self, rhs: &Multivector) -> Multivector {
                let f: fn(&Multivector, &Multivector) -> Multivector = $body;
                f(self, rhs)
            }
        }
        impl $trait<Multivector> for Multivector {
            type Output = Multivector;
            fn $method(self, rhs: Multivector) -> Multivector {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Multivector> for Multivector {
            type Output = Multivector;
            fn $method(self, rhs: &Multivector) -> Multivector {
                (&self).$method(rhs)
            }
        }
        impl $trait<Multivector> for &Multivector {
            type Output = Multivector;
            fn $method(self, rhs: Multivector) -> Multivector {
                self.$method(&rhs)
            }
        }
    };
}

// Operators panic on mismatched signatures; use the `Result` methods to
// handle that case.
forward_binop!(Add, add, |a, b| {
    a.sig.ensure_same(&b.sig).expect("multivector addition");
    Multivector {
        sig: a.sig.clone(),
        coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect(),
    }
});
forward_binop!(Sub, sub, |a, b| {
    a.sig.ensure_same(&b.sig).expect("multivector subtraction");
    Multivector {
        sig: a.sig.clone(),
        coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x - y).collect(),
    }
});
forward_binop!(Mul, mul, |a, b| a
    .geometric_product(b)
    .expect("geometric product"));

impl AddAssign<&Multivector> for Multivector {
    fn add_assign(&mut self, rhs: &Multivector) {
        self.sig.ensure_same(&rhs.sig).expect("multivector addition");
        for (x, y) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *x += y;
        }
    }
}

impl SubAssign<&Multivector> for Multivector {
    fn sub_assign(&mut self, rhs: &Multivector) {
        self.sig.ensure_same(&rhs.sig).expect("multivector subtraction");
        for (x, y) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *x -= y;
        }
    }
}

impl Mul<f64> for &Multivector {
    type Output = Multivector;
    fn mul(self, rhs: f64) -> Multivector {
        self.scale(rhs)
    }
}

impl Mul<f64> for Multivector {
    type Output = Multivector;
    fn mul(self, rhs: f64) -> Multivector {
        self.scale(rhs)
    }
}

impl Neg for &Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        self.scale(-1.0)
    }
}

impl Neg for Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        self.scale(-1.0)
    }
}
