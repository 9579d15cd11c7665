//! Frozen values and algebraic laws for the counting formulas. The frozen
//! numbers were computed independently (hand calculation or the exhaustive
//! censuses in this repository) and pinned here.

use proptest::prelude::*;
use qdense::exact::{int, ipow, rat, rat_int, ExactInt};
use qdense::interval::RealInterval;
use qdense::qfunc::{
    ball_size, euler_phi_interval, nu, pi_q_interval, qbinom, tau_linear, theta,
};

#[test]
fn qbinom_reference_values() {
    assert_eq!(qbinom(5, 3, 2), int(155));
    assert_eq!(qbinom(5, 2, 2), int(155));
    assert_eq!(qbinom(6, 3, 2), int(1395));
    assert_eq!(qbinom(9, 3, 2), int(788035));
    assert_eq!(qbinom(9, 6, 2), int(788035));
    assert_eq!(qbinom(4, 2, 3), int(130));
    assert_eq!(qbinom(5, 2, 3), int(1210));
    // degenerate cases
    assert_eq!(qbinom(7, 0, 2), int(1));
    assert_eq!(qbinom(7, 7, 3), int(1));
}

#[test]
#[should_panic(expected = "b <= a")]
fn qbinom_rejects_overwide_subspaces() {
    qbinom(3, 4, 2);
}

proptest! {
    // column symmetry: b-subspaces correspond to (a-b)-subspaces
    #[test]
    fn qbinom_symmetry(a in 0u64..12, b in 0u64..12, qi in 0usize..4) {
        prop_assume!(b <= a);
        let q = [2u64, 3, 4, 5][qi];
        prop_assert_eq!(qbinom(a, b, q), qbinom(a, a - b, q));
    }

    // Pascal recursion with the q-weight on the non-pivot branch
    #[test]
    fn qbinom_pascal(a in 1u64..12, b in 1u64..12, qi in 0usize..4) {
        prop_assume!(b < a);
        let q = [2u64, 3, 4, 5][qi];
        let lhs = qbinom(a, b, q);
        let rhs = qbinom(a - 1, b - 1, q) + ipow(q, b) * qbinom(a - 1, b, q);
        prop_assert_eq!(lhs, rhs);
    }

    // theta rows partition the ordered pairs of u-subspaces
    #[test]
    fn theta_rows_sum_to_pair_count(n in 0u64..7, u in 0u64..7, qi in 0usize..3) {
        prop_assume!(u <= n);
        let q = [2u64, 3, 5][qi];
        let total: ExactInt = (0..=u).map(|i| theta(n, u, i, q).unwrap()).sum();
        let per_side = qbinom(n, u, q);
        prop_assert_eq!(total, &per_side * &per_side);
    }

    // tau has the product form q^{r(N-k)} prod_{i<k} (q^r - q^i)
    #[test]
    fn tau_product_form(r in 1u64..4, k in 0u64..5, n_amb in 1u64..6, qi in 0usize..3) {
        prop_assume!(k <= n_amb);
        let q = [2u64, 3, 4][qi];
        let mut expect = ipow(q, r * (n_amb - k));
        for i in 0..k {
            expect *= ipow(q, r) - ipow(q, i);
        }
        prop_assert_eq!(tau_linear(r, k, n_amb, q).unwrap(), expect);
    }
}

#[test]
fn nu_reference_values() {
    assert_eq!(nu(5, 3, 0, 2).unwrap(), int(51));
    assert_eq!(nu(5, 3, 1, 2).unwrap(), int(59));
    assert_eq!(nu(5, 3, 2, 2).unwrap(), int(91));
    assert_eq!(nu(4, 2, 0, 2).unwrap(), int(9));
    // l = N - k means the two members coincide; every k-space meets the
    // member or avoids it, and the count is the one-subspace variant
    assert_eq!(nu(5, 3, 2, 2).unwrap(), qbinom(5, 3, 2) - int(64));
}

#[test]
fn nu_domain_checks() {
    assert!(nu(2, 1, 0, 2).is_err());
    assert!(nu(5, 0, 0, 2).is_err());
    assert!(nu(5, 5, 0, 2).is_err());
    assert!(nu(5, 3, 3, 2).is_err());
    // l below the forced intersection floor N - 2k
    assert!(nu(5, 1, 2, 2).is_err());
    assert!(nu(5, 1, 3, 2).is_ok());
}

#[test]
fn theta_reference_values() {
    assert_eq!(theta(3, 2, 0, 2).unwrap(), int(0));
    assert_eq!(theta(3, 2, 1, 2).unwrap(), int(42));
    assert_eq!(theta(3, 2, 2, 2).unwrap(), int(7));
    // forced-intersection vanishing: two u-spaces meet in >= 2u - n
    assert_eq!(theta(4, 3, 1, 2).unwrap(), int(0));
    assert!(theta(4, 3, 2, 2).unwrap() > int(0));
    assert!(theta(3, 4, 0, 2).is_err());
}

#[test]
fn tau_reference_values() {
    assert_eq!(tau_linear(2, 1, 3, 2).unwrap(), int(48));
    assert_eq!(tau_linear(1, 1, 2, 3).unwrap(), int(6));
    // r-tuples cannot separate a subspace wider than their joint kernel bound
    assert_eq!(tau_linear(1, 2, 3, 2).unwrap(), int(0));
    assert!(tau_linear(1, 4, 3, 2).is_err());
}

#[test]
fn ball_reference_values() {
    assert_eq!(ball_size(2, 2, 1, 2).unwrap(), int(10));
    assert_eq!(ball_size(3, 3, 1, 2).unwrap(), int(50));
    // full radius reaches the whole matrix space
    assert_eq!(ball_size(3, 3, 3, 2).unwrap(), ipow(2, 9));
    assert_eq!(ball_size(2, 3, 2, 3).unwrap(), ipow(3, 6));
    assert!(ball_size(3, 2, 1, 2).is_err());
}

fn contains_decimal(iv: &RealInterval, s: &str) -> bool {
    iv.contains(&qdense::exact::parse_rational(s).unwrap())
}

#[test]
fn euler_function_enclosures() {
    let eps = rat(1, 1_000_000_000);
    let phi = euler_phi_interval(2, &eps).unwrap();
    assert!(phi.width() <= eps);
    assert!(contains_decimal(&phi, "0.288788095086602421"));
    let pi = pi_q_interval(2, &eps).unwrap();
    assert!(pi.width() <= eps);
    assert!(contains_decimal(&pi, "3.462746619455063611"));
    // pi is the reciprocal: the product encloses 1
    let prod = phi.mul(&pi);
    assert!(prod.contains(&rat(1, 1)));
    // larger q converges toward 1 from the right
    for q in [3u64, 4, 5, 9] {
        let p = pi_q_interval(q, &eps).unwrap();
        assert!(*p.lo() > rat(1, 1));
        assert!(*p.hi() < pi.hi() + eps.clone());
    }
}

#[test]
fn nu_diagonal_matches_census_totals() {
    // nu at l = N - k counts k-spaces meeting one fixed (N-k)-space; the
    // complement count q^{k(N-k)} is what is left of the Gaussian binomial
    for (n_amb, k, q) in [(5u64, 3u64, 2u64), (5, 2, 2), (4, 2, 3), (6, 3, 2)] {
        let diag = nu(n_amb, k, n_amb - k, q).unwrap();
        let complements = ipow(q, k * (n_amb - k));
        assert_eq!(diag + complements, qbinom(n_amb, k, q));
    }
}

#[test]
fn nu_monotone_in_intersection_dimension() {
    // pairs that overlap more leave less room, so more k-spaces hit both
    for q in [2u64, 3] {
        for (n_amb, k) in [(5u64, 3u64), (6, 3), (6, 2)] {
            let l_min = n_amb.saturating_sub(2 * k);
            let values: Vec<ExactInt> = (l_min..=n_amb - k)
                .map(|l| nu(n_amb, k, l, q).unwrap())
                .collect();
            for w in values.windows(2) {
                assert!(w[0] < w[1], "nu must increase with l at N={n_amb} k={k} q={q}");
            }
        }
    }
}

#[test]
fn gaussian_binomial_ratio_near_limit_constant() {
    // qbinom(2m, m, q) / q^{m^2} climbs toward pi(q); at m = 8, q = 2 the
    // relative gap is already below one percent but not yet below a tenth
    let ratio = rat_int(&qbinom(16, 8, 2)) / rat_int(&ipow(2, 64));
    let gap = rat(1, 1) - ratio / pi_q_interval(2, &rat(1, 1_000_000_000_000)).unwrap().midpoint();
    assert!(gap > rat(1, 1000));
    assert!(gap < rat(1, 100));
}
