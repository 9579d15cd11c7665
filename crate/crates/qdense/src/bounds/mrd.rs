//! Density bounds for rank-metric codes: the MRD-specific upper bound, the
//! generic ball-driven sandwich, and the large-m limiting bound.

use crate::bounds::report::BoundReport;
use crate::error::{DomainError, DomainResult};
use crate::exact::{int, ipow, rat_int, ExactInt, ExactRational};
use crate::interval::RealInterval;
use crate::qfunc::{ball_size, nu, pi_q_interval, qbinom, theta};
use num_integer::Integer;
use num_traits::{One, Zero};
use serde_json::json;

/// Upper bound on the density of MRD codes among k-spaces, k = m(n-d+1):
/// 1 - qbinom(n,d-1)^2 nu(mn,k,m(d-1))^2 /
///     (qbinom(mn,k) * sum_i nu(mn,k,mi) theta(n,d-1,i)).
///
/// Terms with i < max(0, 2(d-1)-n) are skipped: theta vanishes there and nu
/// is outside its domain (the same cutoff on both sides).
pub fn mrd_density_upper_q(n: u64, m: u64, d: u64, q: u64) -> DomainResult<ExactRational> {
    if n < 2 || m < n || d < 2 || d > n {
        return Err(DomainError::new(
            "mrd_density_upper_q",
            format!("need m >= n >= 2 and 2 <= d <= n, got n = {n}, m = {m}, d = {d}"),
        ));
    }
    let k = m * (n - d + 1);
    let u = d - 1;
    let top = nu(m * n, k, m * u, q)?;
    let numer = qbinom(n, u, q).pow(2) * &top * &top;
    let i0 = (2 * u).saturating_sub(n);
    let mut pair_sum = ExactInt::zero();
    for i in i0..=u {
        pair_sum += nu(m * n, k, m * i, q)? * theta(n, u, i, q)?;
    }
    let denom = qbinom(m * n, k, q) * pair_sum;
    Ok(ExactRational::one() - rat_int(&numer) / rat_int(&denom))
}

/// Sandwich on the density of k-spaces avoiding the punctured radius-(d-1)
/// ball, i.e. of [mn, k] codes with minimum distance >= d. Both ends come
/// from the cone sandwich at cone size b = ball_size(n, m, d-1, q):
///
///   lower = 1 - (b-1) qbinom(mn-1,k-1) / ((q-1) qbinom(mn,k))
///   upper = 1 - lower-cone-count / qbinom(mn,k)
pub fn generic_density_bounds(
    n: u64,
    m: u64,
    k: u64,
    d: u64,
    q: u64,
) -> DomainResult<BoundReport> {
    if d < 2 || d > n {
        return Err(DomainError::new(
            "generic_density_bounds",
            format!("need 2 <= d <= n, got n = {n}, d = {d}"),
        ));
    }
    if k == 0 || k > m * n {
        return Err(DomainError::new(
            "generic_density_bounds",
            format!("need 1 <= k <= mn, got k = {k}, mn = {}", m * n),
        ));
    }
    let ball = ball_size(n, m, d - 1, q)?;
    let (lines, rem) = (&ball - ExactInt::one()).div_rem(&int((q - 1) as i64));
    debug_assert!(rem.is_zero(), "ball size is always 1 mod (q-1)");
    let total = rat_int(&qbinom(m * n, k, q));
    let cone_upper = rat_int(&(&lines * qbinom(m * n - 1, k - 1, q)));
    let crowding = ExactRational::one()
        + rat_int(&((&lines - ExactInt::one()) * (ipow(q, k - 1) - ExactInt::one())))
            / rat_int(&(ipow(q, m * n - 1) - ExactInt::one()));
    let cone_lower = &cone_upper / crowding;
    let lower = ExactRational::one() - cone_upper / &total;
    let upper = ExactRational::one() - cone_lower / &total;
    let mut rep = BoundReport::new(
        "density of distance->=d codes",
        json!({"n": n, "m": m, "k": k, "d": d, "q": q}),
    )
    .with_bounds(lower.clone(), upper);
    if lower <= ExactRational::zero() {
        rep.vacuous = true;
        rep = rep.note("lower bound not positive; reported unclamped");
    }
    Ok(rep)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DensityRegime {
    Dense,
    Sparse,
    Boundary,
}

/// Large-q regime of [mn, k] codes with distance >= d, read off from the
/// dimension count of the determining variety.
pub fn density_regime(n: u64, m: u64, k: u64, d: u64) -> DomainResult<DensityRegime> {
    if d < 2 || d > n || n < 2 || m < n || k == 0 || k > m * n {
        return Err(DomainError::new(
            "density_regime",
            format!("parameters out of range: n = {n}, m = {m}, k = {k}, d = {d}"),
        ));
    }
    let lhs = (d - 1) * (m + n - d + 1);
    let rhs = m * n - k;
    Ok(if lhs <= rhs {
        DensityRegime::Dense
    } else if lhs >= rhs + 2 {
        DensityRegime::Sparse
    } else {
        DensityRegime::Boundary
    })
}

/// Limit bound for m -> infinity: enclosure of
/// 1 / (qbinom(n,d-1,q) (pi(q) - 1) + 1) of width at most eps.
pub fn mrd_density_upper_m(
    n: u64,
    d: u64,
    q: u64,
    eps: &ExactRational,
) -> DomainResult<RealInterval> {
    if d < 2 || d > n {
        return Err(DomainError::new(
            "mrd_density_upper_m",
            format!("need 2 <= d <= n, got n = {n}, d = {d}"),
        ));
    }
    if *eps <= ExactRational::zero() {
        return Err(DomainError::new("mrd_density_upper_m", "target width must be positive"));
    }
    let qb = rat_int(&qbinom(n, d - 1, q));
    let mut inner = eps / (&qb + ExactRational::one());
    loop {
        let pi = pi_q_interval(q, &inner)?;
        let denom = pi
            .shift(&ExactRational::from_integer((-1).into()))
            .scale(&qb)
            .shift(&ExactRational::one());
        let out = denom.recip();
        if out.width() <= *eps {
            return Ok(out);
        }
        inner /= ExactRational::from_integer(4.into());
    }
}
