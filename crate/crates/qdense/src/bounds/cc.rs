//! Bounds on the number of k-subspaces that fail to complement every member
//! of a family, driven by its intersection profile.

use crate::bounds::profile::IntersectionProfile;
use crate::bounds::report::BoundReport;
use crate::error::{DomainError, DomainResult};
use crate::exact::{int, rat_int, ExactInt, ExactRational};
use crate::qfunc::nu;
use num_traits::Zero;
use serde_json::json;

/// Profile version: lower = nu(N,k,N-k)^2 s^2 / sum_l nu(N,k,l) count(l),
/// upper = s * nu(N,k,N-k). Bounds the count of k-spaces that are not
/// common complements; subtract from qbinom(N,k,q) for complement bounds.
pub fn cc_bounds(profile: &IntersectionProfile, q: u64) -> DomainResult<BoundReport> {
    let n_amb = profile.ambient();
    let k = profile.codim();
    let top = nu(n_amb, k, profile.member_dim(), q)?;
    let s = int(profile.s() as i64);
    let mut denom = ExactInt::zero();
    for (&l, c) in profile.counts() {
        if c.is_zero() {
            continue;
        }
        denom += nu(n_amb, k, l, q)? * c;
    }
    let lower = rat_int(&(&top * &top * &s * &s)) / rat_int(&denom);
    let upper = rat_int(&(&top * &s));
    Ok(BoundReport::new(
        "non-complement count",
        json!({"N": n_amb, "k": k, "q": q, "s": profile.s(), "via": "profile"}),
    )
    .with_bounds(lower, upper))
}

/// Worst-case version driven only by the family size and the largest
/// pairwise intersection dimension.
pub fn cc_bounds_lmax(s: u64, lmax: u64, n_amb: u64, k: u64, q: u64) -> DomainResult<BoundReport> {
    if s < 2 {
        return Err(DomainError::new(
            "cc_bounds_lmax",
            format!("needs at least two members, got s = {s}"),
        ));
    }
    let top = nu(n_amb, k, n_amb - k, q)?;
    let at_lmax = nu(n_amb, k, lmax, q)?;
    let s_int = int(s as i64);
    let denom = &top + (&s_int - int(1)) * at_lmax;
    let lower = rat_int(&(&top * &top * &s_int)) / rat_int(&denom);
    let upper = rat_int(&(&top * &s_int));
    Ok(BoundReport::new(
        "non-complement count",
        json!({"N": n_amb, "k": k, "q": q, "s": s, "lmax": lmax, "via": "lmax"}),
    )
    .with_bounds(lower, upper))
}

/// Classical lower bound q + 1 - s on the number of common complements,
/// applicable while the family is no larger than the field.
pub fn tingley_lower(s: u64, q: u64) -> DomainResult<ExactInt> {
    if s == 0 || s > q {
        return Err(DomainError::new(
            "tingley_lower",
            format!("needs 1 <= s <= q, got s = {s}, q = {q}"),
        ));
    }
    Ok(int((q + 1 - s) as i64))
}

/// Complement-count sandwich derived from a non-complement report:
/// [qbinom - upper, qbinom - lower], floored at zero on the left.
pub fn complement_bounds_from(report: &BoundReport, total: &ExactInt) -> (ExactRational, ExactRational) {
    let total = rat_int(total);
    let lo = (&total - report.upper.clone().unwrap()).max(ExactRational::zero());
    let hi = &total - report.lower.clone().unwrap();
    (lo, hi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::qfunc::qbinom;

    #[test]
    fn worked_spread_family() {
        let profile = IntersectionProfile::worst_case(5, 0, 5, 3).unwrap();
        let rep = cc_bounds(&profile, 2).unwrap();
        assert_eq!(rep.lower.clone().unwrap(), rat(8281, 59));
        assert_eq!(rep.lower_ceil().unwrap(), int(141));
        assert_eq!(rep.upper.clone().unwrap(), rat(455, 1));
        let rep2 = cc_bounds_lmax(5, 0, 5, 3, 2).unwrap();
        assert_eq!(rep2.lower.unwrap(), rat(8281, 59));
    }

    #[test]
    fn worked_plane_family() {
        let profile = IntersectionProfile::worst_case(7, 1, 5, 3).unwrap();
        let rep = cc_bounds(&profile, 2).unwrap();
        assert_eq!(rep.lower.clone().unwrap(), rat(57967, 445));
        assert_eq!(rep.lower_ceil().unwrap(), int(131));
        let rep2 = cc_bounds_lmax(7, 1, 5, 3, 2).unwrap();
        assert_eq!(rep2.lower.unwrap(), rat(57967, 445));
    }

    #[test]
    fn single_member_collapses_to_nu() {
        let profile = IntersectionProfile::worst_case(1, 0, 5, 3).unwrap();
        let rep = cc_bounds(&profile, 2).unwrap();
        let expect = rat_int(&nu(5, 3, 2, 2).unwrap());
        assert_eq!(rep.lower.clone().unwrap(), expect);
        assert_eq!(rep.upper.clone().unwrap(), expect);
        assert!(cc_bounds_lmax(1, 0, 5, 3, 2).is_err());
    }

    #[test]
    fn profile_lower_dominates_lmax_lower() {
        // a mixed profile: 3 members, one disjoint pair, one pair meeting in a line
        let counts = [(2u64, 3i64), (1, 2), (0, 4)]
            .iter()
            .map(|&(l, c)| (l, int(c)))
            .collect();
        let profile = IntersectionProfile::new(3, 5, 3, counts).unwrap();
        let via_profile = cc_bounds(&profile, 2).unwrap().lower.unwrap();
        let via_lmax = cc_bounds_lmax(3, 1, 5, 3, 2).unwrap().lower.unwrap();
        assert!(via_profile >= via_lmax);
    }

    #[test]
    fn tingley_values_and_comparison() {
        assert_eq!(tingley_lower(7, 7).unwrap(), int(1));
        assert_eq!(tingley_lower(1, 9).unwrap(), int(9));
        assert!(tingley_lower(8, 7).is_err());
        // on the worked spread family the upper bound exceeds the total count,
        // so the derived complement lower bound floors at zero
        let profile = IntersectionProfile::worst_case(5, 0, 5, 3).unwrap();
        let rep = cc_bounds(&profile, 2).unwrap();
        let (cc_lo, _) = complement_bounds_from(&rep, &qbinom(5, 3, 2));
        assert_eq!(cc_lo, rat(0, 1));
        // for s < q the derived complement lower bound beats q + 1 - s
        for q in [4u64, 5, 7, 9] {
            for s in [2u64, 3] {
                let rep = cc_bounds_lmax(s, 0, 5, 3, q).unwrap();
                let (lo, _) = complement_bounds_from(&rep, &qbinom(5, 3, q));
                assert!(lo >= rat_int(&tingley_lower(s, q).unwrap()));
            }
        }
    }
}
