//! Certified enclosures for the Euler function phi(1/q) and its reciprocal.

use crate::error::{DomainError, DomainResult};
use crate::exact::{qpow, rat, ExactRational};
use crate::interval::RealInterval;
use num_traits::{One, Zero};

/// Enclosure of phi(x) = prod_{i>=1} (1 - x^i) at x = 1/q via the pentagonal
/// number series 1 + sum_k (-1)^k (x^(k(3k-1)/2) + x^(k(3k+1)/2)).
///
/// All omitted terms have exponent >= E, and their coefficients are +-1, so
/// the tail is bounded in absolute value by x^E/(1-x); E is chosen as the
/// least exponent making the two-sided enclosure width 2x^E/(1-x) <= eps.
pub fn euler_phi_interval(q: u64, eps: &ExactRational) -> DomainResult<RealInterval> {
    if q < 2 {
        return Err(DomainError::new("euler_phi", format!("q = {q} is not a prime power >= 2")));
    }
    if *eps <= ExactRational::zero() {
        return Err(DomainError::new("euler_phi", "target width must be positive"));
    }
    let x = rat(1, q as i64);
    let one_minus_x = ExactRational::one() - &x;
    // least E with 2 x^E / (1-x) <= eps
    let mut e: i64 = 1;
    let mut tail = &x / &one_minus_x;
    while rat(2, 1) * &tail > *eps {
        tail *= &x;
        e += 1;
    }
    let mut partial = ExactRational::one();
    let mut k: i64 = 1;
    loop {
        let lo_exp = k * (3 * k - 1) / 2;
        if lo_exp >= e {
            break;
        }
        let mut term = qpow(q, -lo_exp);
        let hi_exp = k * (3 * k + 1) / 2;
        if hi_exp < e {
            term += qpow(q, -hi_exp);
        }
        if k % 2 == 1 {
            partial -= term;
        } else {
            partial += term;
        }
        k += 1;
    }
    Ok(RealInterval::new(&partial - &tail, &partial + &tail))
}

/// Enclosure of pi(q) = 1/phi(1/q) with width at most eps; tightens the phi
/// enclosure until the reciprocal is narrow enough.
pub fn pi_q_interval(q: u64, eps: &ExactRational) -> DomainResult<RealInterval> {
    if *eps <= ExactRational::zero() {
        return Err(DomainError::new("pi_q", "target width must be positive"));
    }
    let mut inner = eps / rat(16, 1);
    loop {
        let phi = euler_phi_interval(q, &inner)?;
        if phi.lo() > &ExactRational::zero() {
            let pi = phi.recip();
            if pi.width() <= *eps {
                return Ok(pi);
            }
        }
        inner /= rat(4, 1);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::parse_rational;

    #[test]
    fn phi_half_matches_partial_product() {
        let eps = parse_rational("1e-10").unwrap();
        let phi = euler_phi_interval(2, &eps).unwrap();
        assert!(phi.width() <= eps);
        // high-precision partial product prod_{i=1}^{60} (1 - 2^-i)
        let reference = parse_rational("0.288788095086602421278899721928").unwrap();
        assert!(phi.contains(&reference));
    }

    #[test]
    fn pi_reference_and_positivity() {
        let eps = parse_rational("1e-9").unwrap();
        for q in [2u64, 3, 4, 5, 7, 9, 16] {
            let pi = pi_q_interval(q, &eps).unwrap();
            assert!(pi.width() <= eps);
            assert!(pi.lo() > &ExactRational::one(), "pi({q}) must exceed 1");
        }
        let pi2 = pi_q_interval(2, &eps).unwrap();
        let reference = parse_rational("3.462746619455063611537957342914").unwrap();
        assert!(pi2.contains(&reference));
    }

    #[test]
    fn rejects_bad_eps() {
        assert!(euler_phi_interval(2, &ExactRational::zero()).is_err());
        assert!(pi_q_interval(2, &rat(-1, 2)).is_err());
    }
}
