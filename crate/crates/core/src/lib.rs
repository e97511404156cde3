//! Dense Clifford algebras, their quaternion matrix pictures, stereographic
//! lifts onto the sphere and hyperboloid, and three equivalent spinor
//! formalisms (geometric, quaternion, complex-column Dirac).
//!
//! Every module validates its inputs and reports failures through [`Error`].
//! The [`verify`] module bundles the algebraic identities each module relies on
//! into seeded property suites.

pub mod error;
pub mod ga;
pub mod quaternion;
pub mod quat_rep;
pub mod iso;
pub mod stereo;
pub mod gspinor;
pub mod qspinor;
pub mod dirac;
pub mod figures;
pub mod sample;
pub mod verify;

pub use error::{Error, Result};
pub use ga::{Multivector, Signature, DEFAULT_TOL};
pub use quaternion::Quaternion;
pub use quat_rep::{MvMatrix2, QuatMatrix2};
pub use iso::AlgebraTag;
pub use stereo::{HyperPoint, PlanePoint, SpherePoint};
pub use gspinor::{CenterScalar, GSpinor};
pub use qspinor::QSpinor;
pub use dirac::{ComplexMultivector, DiracSpinor4};
pub use figures::{FigureData, FigureKind};
pub use verify::RunReport;
