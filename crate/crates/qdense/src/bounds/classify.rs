//! Regime classification for growing families of subspaces: does the set of
//! common complements become dense, become sparse, or stay in between?

use crate::error::{DomainError, DomainResult};
use crate::exact::{ipow, rat_int, ExactRational};
use crate::gf::Subspace;
use num_traits::Zero;
use std::collections::HashSet;

/// Declared growth of the family size |A_q| against the field size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyGrowth {
    /// |A_q| in o(q)
    NegligibleVsQ,
    /// |A_q| ~ gamma * q
    ProportionalToQ(ExactRational),
    /// q in o(|A_q|)
    DominatesQ,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CcVerdict {
    /// non-complements sparse: almost every k-space complements everything
    ComplementsDense,
    /// complements sparse: almost no k-space complements everything
    ComplementsSparse,
    /// limsup of the complement density is at most the given value; the
    /// family may or may not be sparse
    LimsupAtMost(ExactRational),
    Undetermined(String),
}

/// Case split on the declared growth regime. The spread flag asserts the
/// family is an asymptotic partial spread; lbound asserts a uniform cap on
/// pairwise intersection dimensions.
pub fn classify_cc_asymptotics(
    n_amb: u64,
    k: u64,
    growth: FamilyGrowth,
    spread: bool,
    lbound: Option<u64>,
) -> DomainResult<CcVerdict> {
    if n_amb < 3 || k == 0 || k >= n_amb {
        return Err(DomainError::new(
            "classify_cc_asymptotics",
            format!("need N >= 3 and 1 <= k <= N-1, got N = {n_amb}, k = {k}"),
        ));
    }
    let l_min = n_amb.saturating_sub(2 * k);
    let l_cap = n_amb - k - 1;
    match growth {
        FamilyGrowth::NegligibleVsQ => Ok(CcVerdict::ComplementsDense),
        FamilyGrowth::ProportionalToQ(gamma) => {
            if gamma <= ExactRational::zero() {
                return Err(DomainError::new(
                    "classify_cc_asymptotics",
                    "gamma must be positive",
                ));
            }
            if spread {
                // limsup <= 1/(gamma+1); examples on both sides exist
                Ok(CcVerdict::LimsupAtMost(
                    (gamma + ExactRational::from_integer(1.into())).recip(),
                ))
            } else {
                Ok(CcVerdict::Undetermined(
                    "family size ~ gamma q gives a limsup bound only for asymptotic \
                     partial spreads"
                        .into(),
                ))
            }
        }
        FamilyGrowth::DominatesQ => {
            if spread {
                return Ok(CcVerdict::ComplementsSparse);
            }
            match lbound {
                Some(l) if (l >= l_min && l < l_cap) || (l == l_min && l == l_cap) => {
                    Ok(CcVerdict::ComplementsSparse)
                }
                Some(l) => Ok(CcVerdict::Undetermined(format!(
                    "intersection cap l = {l} does not satisfy the sparseness \
                     hypotheses for (N, k) = ({n_amb}, {k})"
                ))),
                None => Ok(CcVerdict::Undetermined(
                    "fast-growing family needs either the spread property or an \
                     intersection cap"
                        .into(),
                )),
            }
        }
    }
}

/// |union of members| / (s * q^dim): how close the family comes to the
/// largest union its parameters allow. Exactly 1 for pairwise trivially
/// intersecting families.
pub fn spread_ratio(family: &[Subspace]) -> DomainResult<ExactRational> {
    let Some(first) = family.first() else {
        return Err(DomainError::new("spread_ratio", "family must be non-empty"));
    };
    let dim = first.dim();
    if family.iter().any(|s| s.dim() != dim) {
        return Err(DomainError::new("spread_ratio", "members must share a dimension"));
    }
    let q = first.field().q();
    let mut union: HashSet<Vec<u16>> = HashSet::new();
    for member in family {
        member.for_each_vector(|v| {
            union.insert(v.to_vec());
        });
    }
    let denom = ipow(q, dim as u64) * crate::exact::int(family.len() as i64);
    Ok(rat_int(&crate::exact::int(union.len() as i64)) / rat_int(&denom))
}
