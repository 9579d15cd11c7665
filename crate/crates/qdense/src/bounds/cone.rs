//! Bounds on the number of k-subspaces meeting a cone of vectors.

use crate::bounds::report::BoundReport;
use crate::error::{DomainError, DomainResult};
use crate::exact::{int, ipow, rat_int, ExactInt, ExactRational};
use crate::qfunc::qbinom;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde_json::json;

/// Sandwich on the number of k-subspaces of F_q^N intersecting a fixed cone
/// K (a union of L = (|K|-1)/(q-1) lines through the origin) nontrivially:
///
///   upper = L * qbinom(N-1, k-1)
///   lower = upper / (1 + (L-1)(q^(k-1) - 1)/(q^(N-1) - 1))
pub fn cone_bounds(cone_size: &ExactInt, n_amb: u64, k: u64, q: u64) -> DomainResult<BoundReport> {
    if q < 2 {
        return Err(DomainError::new("cone_bounds", format!("q = {q} is not a prime power >= 2")));
    }
    if k == 0 || k >= n_amb {
        return Err(DomainError::new(
            "cone_bounds",
            format!("need 1 <= k <= N-1, got N = {n_amb}, k = {k}"),
        ));
    }
    if cone_size < &int(q as i64) || cone_size > &ipow(q, n_amb) {
        return Err(DomainError::new(
            "cone_bounds",
            format!("cone size {cone_size} outside [q, q^N]"),
        ));
    }
    let (lines, rem) = (cone_size - ExactInt::one()).div_rem(&int((q - 1) as i64));
    if !rem.is_zero() {
        return Err(DomainError::new(
            "cone_bounds",
            format!("cone size {cone_size} is not 1 mod (q-1)"),
        ));
    }
    let upper = rat_int(&(&lines * qbinom(n_amb - 1, k - 1, q)));
    let crowding = ExactRational::one()
        + rat_int(&((&lines - ExactInt::one()) * (ipow(q, k - 1) - ExactInt::one())))
            / rat_int(&(ipow(q, n_amb - 1) - ExactInt::one()));
    let lower = &upper / crowding;
    Ok(BoundReport::new(
        "cone-intersecting count",
        json!({"N": n_amb, "k": k, "q": q, "cone_size": cone_size.to_string()}),
    )
    .with_bounds(lower, upper))
}
