//! Leading-term estimates for the counting formulas in two regimes: growing
//! field size at fixed dimensions, and growing matrix width at fixed shape.

use crate::error::{DomainError, DomainResult};
use crate::exact::{ipow, parse_rational, qpow, rat_int, ExactRational};
use crate::interval::RealInterval;
use crate::qfunc::pi_q_interval;

// width of the pi(q) enclosure backing the interval-valued estimates
fn pi_eps() -> ExactRational {
    parse_rational("1e-30").unwrap()
}

fn check_nu_domain(n_amb: u64, k: u64, l: u64, q: u64, op: &'static str) -> DomainResult<()> {
    if q < 2 {
        return Err(DomainError::new(op, format!("q = {q} is not a prime power >= 2")));
    }
    if n_amb < 3 || k == 0 || k >= n_amb {
        return Err(DomainError::new(
            op,
            format!("need N >= 3 and 1 <= k <= N-1, got N = {n_amb}, k = {k}"),
        ));
    }
    let l_min = n_amb.saturating_sub(2 * k);
    if l < l_min || l > n_amb - k {
        return Err(DomainError::new(
            op,
            format!("l = {l} outside [{l_min}, {}]", n_amb - k),
        ));
    }
    Ok(())
}

/// Leading term of nu_q(N, k, l) for large q, split on l against N-k-1 and
/// the lower domain endpoint.
pub fn nu_asym_q(n_amb: u64, k: u64, l: u64, q: u64) -> DomainResult<ExactRational> {
    check_nu_domain(n_amb, k, l, q, "nu_asym_q")?;
    let l_min = n_amb.saturating_sub(2 * k);
    let e = (k * (n_amb - k)) as i64;
    Ok(if l == n_amb - k {
        qpow(q, e - 1)
    } else if l == n_amb - k - 1 && l > l_min {
        qpow(q, e - 2) * ExactRational::from_integer(2.into())
    } else {
        qpow(q, e - 2)
    })
}

/// Leading term of the defect Delta_q = nu(N,k,N-k)^2/qbinom(N,k) - nu(N,k,l)
/// for large q; negative above the lower domain endpoint.
pub fn delta_asym_q(n_amb: u64, k: u64, l: u64, q: u64) -> DomainResult<ExactRational> {
    check_nu_domain(n_amb, k, l, q, "delta_asym_q")?;
    if l > n_amb - k - 1 {
        return Err(DomainError::new(
            "delta_asym_q",
            format!("l = {l} must stay below N - k = {}", n_amb - k),
        ));
    }
    let l_min = n_amb.saturating_sub(2 * k);
    let e = (k * (n_amb - k)) as i64;
    Ok(if l == l_min {
        if n_amb >= 2 * k {
            qpow(q, e - (n_amb as i64) + (k as i64) - 1)
        } else {
            qpow(q, e - (k as i64) - 1)
        }
    } else {
        -qpow(q, e - (n_amb as i64) + (k as i64) + (l as i64) - 1)
    })
}

/// Estimate of nu_q(mn, m(n-d+1), mi) for large m: the common-complement
/// count of a matrix-code pair at intersection step i.
pub fn nu_asym_m(n: u64, d: u64, i: u64, q: u64, m: u64) -> DomainResult<RealInterval> {
    if d < 2 || n < d || i > d - 1 || m == 0 {
        return Err(DomainError::new(
            "nu_asym_m",
            format!("need 2 <= d <= n, 0 <= i <= d-1, m >= 1; got n = {n}, d = {d}, i = {i}, m = {m}"),
        ));
    }
    let pi = pi_q_interval(q, &pi_eps())?;
    let pim1 = pi.shift(&ExactRational::from_integer((-1).into()));
    let factor = if i <= d - 2 {
        pim1.powi(2).mul(&pi.recip())
    } else {
        pim1
    };
    let lead = rat_int(&ipow(q, m * m * (n - d + 1) * (d - 1)));
    Ok(factor.scale(&lead))
}

/// Estimate qbinom(ma, mb) ~ q^(m^2 b(a-b)) * pi(q) for large m.
pub fn qbinom_asym_m(a: u64, b: u64, q: u64, m: u64) -> DomainResult<RealInterval> {
    if b == 0 || b >= a || m == 0 {
        return Err(DomainError::new(
            "qbinom_asym_m",
            format!("need a > b > 0 and m >= 1, got a = {a}, b = {b}, m = {m}"),
        ));
    }
    let pi = pi_q_interval(q, &pi_eps())?;
    let lead = rat_int(&ipow(q, m * m * b * (a - b)));
    Ok(pi.scale(&lead))
}
