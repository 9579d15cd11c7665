//! Brute-force recounts of every closed formula in the crate, used to keep
//! the formula layer honest. All censuses shard deterministically and stay
//! within an explicit enumeration budget.

mod budget;
mod census;
mod code;
mod family;
mod functionals;
mod mrd;
mod structure;

pub use budget::{Budget, BudgetExceeded};
pub use census::{
    collect_distinguishing_cone, count_common_complements, count_distinguishing_cone,
    count_intersecting_both, intersection_profile, theta_census, CcCensus, ConeCensus, ConeSpec,
};
pub use code::{dual_code, MatrixCode};
pub use family::FamilySpec;
pub use functionals::count_distinguishing_functionals;
pub use mrd::{mrd_census, MrdCensus};
pub use structure::{special_basis, split_code, SpecialBasis, SplitCodes};

use crate::error::DomainError;
use std::fmt;

#[derive(Debug)]
pub enum OracleError {
    Domain(DomainError),
    Budget(BudgetExceeded),
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::Domain(e) => e.fmt(f),
            OracleError::Budget(e) => e.fmt(f),
        }
    }
}

impl std::error::Error for OracleError {}

impl From<DomainError> for OracleError {
    fn from(e: DomainError) -> Self {
        OracleError::Domain(e)
    }
}

impl From<BudgetExceeded> for OracleError {
    fn from(e: BudgetExceeded) -> Self {
        OracleError::Budget(e)
    }
}
