//! Relations between code densities at different shapes: the top-row
//! decomposition inequality, duality, and the iterated two-row corollary.

use crate::error::{DomainError, DomainResult};
use crate::exact::{rat_int, ExactInt, ExactRational};
use crate::qfunc::qbinom;

/// Right-hand side of the decomposition inequality
///   delta(n x m, m(n-d+1), d) <= delta(d x m, m, d)
///                              * delta((n-1) x m, m(n-d), d) * B/A
/// with A = qbinom(mn, m(n-d+1)) and B = qbinom(md, m) qbinom(m(n-1), m(n-d)).
pub fn decomposition_rhs(
    n: u64,
    m: u64,
    d: u64,
    q: u64,
    delta_top: &ExactRational,
    delta_rest: &ExactRational,
) -> DomainResult<ExactRational> {
    if n < 3 || d < 2 || d >= n || m < n {
        return Err(DomainError::new(
            "decomposition_rhs",
            format!("need n >= 3, 2 <= d < n, m >= n; got n = {n}, m = {m}, d = {d}"),
        ));
    }
    let a = qbinom(m * n, m * (n - d + 1), q);
    let b = qbinom(m * d, m, q) * qbinom(m * (n - 1), m * (n - d), q);
    Ok(delta_top * delta_rest * rat_int(&b) / rat_int(&a))
}

/// Densities on both sides of the duality bijection: codes of shape n x m,
/// dimension m(n-d+1), distance >= d correspond to codes of dimension
/// m(d-1) with distance >= n-d+2. Returns both densities and whether they
/// agree exactly.
pub fn duality_densities(
    n: u64,
    m: u64,
    d: u64,
    q: u64,
    count_primal: &ExactInt,
    count_dual: &ExactInt,
) -> DomainResult<(ExactRational, ExactRational, bool)> {
    if d < 2 || d > n || m < n {
        return Err(DomainError::new(
            "duality_densities",
            format!("need 2 <= d <= n <= m, got n = {n}, m = {m}, d = {d}"),
        ));
    }
    let primal = rat_int(count_primal) / rat_int(&qbinom(m * n, m * (n - d + 1), q));
    let dual = rat_int(count_dual) / rat_int(&qbinom(m * n, m * (d - 1), q));
    let agree = primal == dual;
    Ok((primal, dual, agree))
}

/// Corollary of iterating the decomposition down to 2 x m blocks:
///   delta(n x m, m(n-d+1), d)
///     <= (delta(2 x m, m, 2) qbinom(2m, m))^((n-d+1)(d-1)) / qbinom(mn, m(n-d+1)).
pub fn special_basis_bound(
    n: u64,
    m: u64,
    d: u64,
    q: u64,
    delta_2m: &ExactRational,
) -> DomainResult<ExactRational> {
    if n < 2 || d < 2 || d > n || m < n {
        return Err(DomainError::new(
            "special_basis_bound",
            format!("need 2 <= d <= n <= m, got n = {n}, m = {m}, d = {d}"),
        ));
    }
    let e = ((n - d + 1) * (d - 1)) as u32;
    let block = delta_2m * rat_int(&qbinom(2 * m, m, q));
    let mut acc = ExactRational::from_integer(1.into());
    for _ in 0..e {
        acc *= &block;
    }
    Ok(acc / rat_int(&qbinom(m * n, m * (n - d + 1), q)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    #[test]
    fn duality_on_the_3x3_census() {
        // the distance-3 3-dim count and the distance-2 6-dim count coincide
        let (primal, dual, agree) =
            duality_densities(3, 3, 3, 2, &int(192), &int(192)).unwrap();
        assert!(agree);
        assert_eq!(primal, rat(192, 788035));
        assert_eq!(dual, rat(192, 788035));
        // qbinom(9,3) = qbinom(9,6) makes the two denominators equal here
        let (_, _, agree) = duality_densities(3, 3, 3, 2, &int(192), &int(191)).unwrap();
        assert!(!agree);
    }

    #[test]
    fn self_dual_shape_is_symmetric() {
        // n = d = 2: primal and dual parameters coincide
        let (primal, dual, agree) = duality_densities(2, 2, 2, 2, &int(2), &int(2)).unwrap();
        assert!(agree);
        assert_eq!(primal, dual);
    }

    #[test]
    fn decomposition_rhs_value() {
        // (n, m, d) = (3, 3, 2): A = qbinom(9, 6), B = qbinom(6, 3) qbinom(6, 3)
        let rhs = decomposition_rhs(3, 3, 2, 2, &rat(1, 10), &rat(1, 10)).unwrap();
        let expect = rat(1, 100) * rat(1395 * 1395, 1) / rat(788035, 1);
        assert_eq!(rhs, expect);
        assert!(decomposition_rhs(3, 3, 3, 2, &rat(1, 2), &rat(1, 2)).is_err());
        assert!(decomposition_rhs(2, 3, 2, 2, &rat(1, 2), &rat(1, 2)).is_err());
    }

    #[test]
    fn special_basis_bound_value() {
        // (n, d) = (3, 2): exponent 2, denominator qbinom(9, 6)
        let b = special_basis_bound(3, 3, 2, 2, &rat(1, 5)).unwrap();
        let expect = rat(1395, 5) * rat(1395, 5) / rat(788035, 1);
        assert_eq!(b, expect);
        assert!(special_basis_bound(3, 3, 4, 2, &rat(1, 5)).is_err());
    }
}
