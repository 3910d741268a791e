//! Pass/fail reports produced by the numerical certification routines.

use std::fmt;

use crate::Scalar;

/// Which claim a report certifies.
///
/// `A` through `D`, `Aux` and `SimpleCurve` are the boundary-curve
/// statements; `Nonnegativity` and `OracleAgreement` come from the
/// linear-programming oracle and round out the set the `verify` command
/// aggregates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StatementId {
    A,
    B,
    C,
    D,
    Aux,
    SimpleCurve,
    Nonnegativity,
    OracleAgreement,
}

impl StatementId {
    pub fn as_str(self) -> &'static str {
        match self {
            StatementId::A => "A",
            StatementId::B => "B",
            StatementId::C => "C",
            StatementId::D => "D",
            StatementId::Aux => "AUX",
            StatementId::SimpleCurve => "SIMPLE_CURVE",
            StatementId::Nonnegativity => "NONNEGATIVITY",
            StatementId::OracleAgreement => "ORACLE_AGREEMENT",
        }
    }
}

impl fmt::Display for StatementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Outcome of one certification run.
///
/// `worst_margin` is signed slack: positive means the claim held with room to
/// spare, and `passed` is exactly `worst_margin >= -tolerance`. `worst_t`
/// locates the margin (the boundary parameter in radians for curve
/// certificates, the coefficient index for the oracle-agreement one).
/// Degenerate intervals pass vacuously with the largest finite margin.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CertificateReport<S> {
    pub statement_id: StatementId,
    pub passed: bool,
    pub worst_margin: S,
    pub worst_t: S,
    pub grid_size: usize,
    pub tolerance: S,
}

impl<S: Scalar> CertificateReport<S> {
    /// Builds a report, deriving `passed` from the margin and tolerance.
    pub fn from_margin(
        statement_id: StatementId,
        worst_margin: S,
        worst_t: S,
        grid_size: usize,
        tolerance: S,
    ) -> Self {
        Self {
            statement_id,
            passed: worst_margin >= -tolerance,
            worst_margin,
            worst_t,
            grid_size,
            tolerance,
        }
    }

    /// A vacuous pass for an empty interval.
    pub fn vacuous(statement_id: StatementId, worst_t: S, grid_size: usize, tolerance: S) -> Self {
        Self {
            statement_id,
            passed: true,
            worst_margin: S::max_value(),
            worst_t,
            grid_size,
            tolerance,
        }
    }
}
