//! q-binomials and the exact subspace / matrix counts built from them.

use crate::error::{DomainError, DomainResult};
use crate::exact::{int, ipow, ExactInt};
use num_integer::Integer;
use num_traits::{One, Zero};

/// Gaussian binomial coefficient: the number of b-dimensional subspaces of
/// F_q^a. Telescoping product; every partial product is itself a q-binomial,
/// so the division at each step is exact.
pub fn qbinom(a: u64, b: u64, q: u64) -> ExactInt {
    assert!(q >= 2, "qbinom needs q >= 2");
    assert!(b <= a, "qbinom needs b <= a");
    let mut acc = ExactInt::one();
    for t in 1..=b {
        let num = ipow(q, a - b + t) - ExactInt::one();
        let den = ipow(q, t) - ExactInt::one();
        let (quot, rem) = (acc * num).div_rem(&den);
        debug_assert!(rem.is_zero());
        acc = quot;
    }
    acc
}

/// Number of k-subspaces of F_q^N meeting both of two fixed
/// (N-k)-subspaces nontrivially, where the pair meets in dimension l.
///
/// Closed form qbinom(N,k) - 2q^(k(N-k)) + q^((2k-N+l)(N-k)) *
/// prod_{i=l}^{N-k-1} (q^(N-k) - q^i); the product is empty at l = N-k.
pub fn nu(n_amb: u64, k: u64, l: u64, q: u64) -> DomainResult<ExactInt> {
    if q < 2 {
        return Err(DomainError::new("nu", format!("q = {q} is not a prime power >= 2")));
    }
    if n_amb < 3 || k == 0 || k >= n_amb {
        return Err(DomainError::new(
            "nu",
            format!("need N >= 3 and 1 <= k <= N-1, got N = {n_amb}, k = {k}"),
        ));
    }
    let l_min = n_amb.saturating_sub(2 * k);
    let l_max = n_amb - k;
    if l < l_min || l > l_max {
        return Err(DomainError::new(
            "nu",
            format!("l = {l} outside [{l_min}, {l_max}] for (N, k) = ({n_amb}, {k})"),
        ));
    }
    let nk = n_amb - k;
    let mut third = ipow(q, (2 * k + l - n_amb) * nk);
    let qnk = ipow(q, nk);
    for i in l..nk {
        third *= &qnk - ipow(q, i);
    }
    Ok(qbinom(n_amb, k, q) - int(2) * ipow(q, k * nk) + third)
}

/// Number of ordered pairs of u-subspaces of F_q^n meeting in dimension
/// exactly i, as an alternating sum over the interval [i, u] in the
/// subspace lattice. Vanishes for i < max(0, 2u - n).
pub fn theta(n: u64, u: u64, i: u64, q: u64) -> DomainResult<ExactInt> {
    if q < 2 {
        return Err(DomainError::new("theta", format!("q = {q} is not a prime power >= 2")));
    }
    if u > n || i > u {
        return Err(DomainError::new(
            "theta",
            format!("need 0 <= i <= u <= n, got n = {n}, u = {u}, i = {i}"),
        ));
    }
    let mut sum = ExactInt::zero();
    for j in i..=u {
        let d = j - i;
        let term = ipow(q, d * d.saturating_sub(1) / 2)
            * qbinom(n, i, q)
            * qbinom(n - i, d, q)
            * qbinom(n - j, u - j, q).pow(2);
        if d % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    Ok(sum)
}

/// Number of n x m matrices over F_q of rank at most r: rank-i matrices are
/// counted by choosing a row space and an injection onto it.
pub fn ball_size(n: u64, m: u64, r: u64, q: u64) -> DomainResult<ExactInt> {
    if q < 2 {
        return Err(DomainError::new("ball_size", format!("q = {q} is not a prime power >= 2")));
    }
    if n < 2 || m < n {
        return Err(DomainError::new(
            "ball_size",
            format!("need m >= n >= 2, got n = {n}, m = {m}"),
        ));
    }
    if r > n {
        return Err(DomainError::new("ball_size", format!("radius {r} exceeds n = {n}")));
    }
    let mut sum = ExactInt::zero();
    let qm = ipow(q, m);
    for i in 0..=r {
        let mut surj = ExactInt::one();
        for j in 0..i {
            surj *= &qm - ipow(q, j);
        }
        sum += qbinom(n, i, q) * surj;
    }
    Ok(sum)
}
