//! Extremal odd univalent polynomials.
//!
//! This crate constructs the polynomial that minimizes `-iF(i)` over the
//! normalized odd polynomials `F(z) = a_1 z + a_2 z^3 + ... + a_N z^{2N-1}`
//! with real coefficients that are univalent in the unit disc, together with
//! the machinery needed to check the construction numerically:
//!
//! * [`chebyshev`] evaluates Chebyshev polynomials of the second kind and
//!   their derivatives in the trigonometric form, the building block of every
//!   coefficient formula.
//! * [`extremal`] builds the extremal coefficient vector through two
//!   independent formulas, the gamma change of variables, a closed-form
//!   evaluator, and the conjectured T-fold symmetric family.
//! * [`geometry`] samples the boundary curve `F(e^{it})` and certifies on a
//!   grid that it is simple, which is the computational content of the
//!   univalence claim.
//! * [`oracle`] re-derives the extremal ratios by brute force: it discretizes
//!   the underlying nonnegativity constraint and solves the resulting linear
//!   program with a self-contained simplex routine.
//!
//! All numerics are generic over the floating-point scalar through the
//! [`Scalar`] trait; the `*64` aliases at the crate root fix `f64`, which is
//! what the certification tolerances are calibrated for.

pub mod certificate;
pub mod chebyshev;
pub mod complex;
pub mod extremal;
pub mod geometry;
pub mod oracle;

mod error;
mod scalar;
mod sum;

pub use error::{Error, Result};
pub use scalar::Scalar;

/// `f64` instantiations of the domain types.
pub type ComplexPoint64 = complex::ComplexPoint<f64>;
pub type ChebyshevArgument64 = chebyshev::ChebyshevArgument<f64>;
pub type OddPolynomial64 = extremal::OddPolynomial<f64>;
pub type GammaVector64 = extremal::GammaVector<f64>;
pub type SymmetricPolynomial64 = extremal::SymmetricPolynomial<f64>;
pub type BoundaryTrace64 = geometry::BoundaryTrace<f64>;
pub type CertificateReport64 = certificate::CertificateReport<f64>;
pub type LinearProgram64 = oracle::LinearProgram<f64>;
pub type OracleSolution64 = oracle::OracleSolution<f64>;
