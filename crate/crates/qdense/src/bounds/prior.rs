//! Previously published density bounds, evaluated in their own regimes so
//! the new bounds can be compared against them.

use crate::error::{DomainError, DomainResult};
use crate::exact::{int, ipow, rat, rat_int, ExactRational};
use crate::interval::RealInterval;
use crate::qfunc::euler_phi_interval;
use num_traits::One;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Extent {
    Finite(u64),
    Infinite,
}

#[derive(Debug, Clone)]
pub enum PriorValue {
    Exact(ExactRational),
    Interval(RealInterval),
}

#[derive(Debug, Clone)]
pub struct PriorBound {
    pub label: &'static str,
    pub value: PriorValue,
}

/// Evaluate every published bound applicable to the requested regime:
/// q -> infinity at fixed (n, m, d), m -> infinity at fixed (n, d, q), or
/// the exact 3x3 distance-3 density at finite parameters.
pub fn prior_bounds(
    n: u64,
    m: Extent,
    d: u64,
    q: Extent,
    eps: &ExactRational,
) -> DomainResult<Vec<PriorBound>> {
    if d < 2 || d > n {
        return Err(DomainError::new(
            "prior_bounds",
            format!("need 2 <= d <= n, got n = {n}, d = {d}"),
        ));
    }
    let exponent = (d - 1) * (n - d + 1);
    match (m, q) {
        (Extent::Infinite, Extent::Infinite) => Err(DomainError::new(
            "prior_bounds",
            "at most one of m, q may grow; pick a regime",
        )),
        // q -> infinity at fixed m
        (Extent::Finite(m), Extent::Infinite) => {
            if m < n {
                return Err(DomainError::new("prior_bounds", format!("need m >= n, got m = {m}")));
            }
            let mut out = vec![PriorBound {
                label: "limsup-one-half",
                value: PriorValue::Exact(rat(1, 2)),
            }];
            // truncated exponential sum (sum_{i<=m} (-1)^i/i!)^((d-1)(n-d+1))
            let mut sum = ExactRational::one();
            let mut fact = ExactRational::one();
            for i in 1..=m {
                fact *= rat(i as i64, 1);
                let term = fact.recip();
                if i % 2 == 1 {
                    sum -= term;
                } else {
                    sum += term;
                }
            }
            out.push(PriorBound {
                label: "truncated-exponential",
                value: PriorValue::Exact(pow_rat(&sum, exponent)),
            });
            Ok(out)
        }
        // m -> infinity at fixed q
        (Extent::Infinite, Extent::Finite(q)) => {
            if q < 2 {
                return Err(DomainError::new("prior_bounds", format!("bad q = {q}")));
            }
            let mut out = vec![PriorBound {
                label: "half-plus-half-inverse-square",
                value: PriorValue::Exact(
                    rat(((q - 1) * (q - 2) + 1) as i64, 1) / rat((2 * (q - 1) * (q - 1)) as i64, 1),
                ),
            }];
            let e = q * exponent + 1;
            let phi = euler_phi_interval(q, &tightened(eps, e))?;
            out.push(PriorBound {
                label: "euler-power",
                value: PriorValue::Interval(phi.powi(e)),
            });
            Ok(out)
        }
        // fully finite: only the exact 3x3 distance-3 density is known
        (Extent::Finite(m), Extent::Finite(q)) => {
            let mut out = Vec::new();
            if n == 3 && m == 3 && d == 3 && q >= 2 {
                let qi = |e: u64| ipow(q, e);
                let numer = int((q - 1) as i64)
                    * (&qi(3) - int(1))
                    * (&qi(3) - &qi(1)).pow(3)
                    * (&qi(3) - &qi(2)).pow(2)
                    * (&qi(3) - &qi(2) - &qi(1) - int(1));
                let denom = int(3) * (&qi(7) - int(1)) * (&qi(9) - int(1)) * (&qi(9) - &qi(1));
                out.push(PriorBound {
                    label: "exact-3x3-density",
                    value: PriorValue::Exact(rat_int(&numer) / rat_int(&denom)),
                });
            }
            Ok(out)
        }
    }
}

fn pow_rat(base: &ExactRational, mut e: u64) -> ExactRational {
    let mut acc = ExactRational::one();
    let mut sq = base.clone();
    while e > 0 {
        if e & 1 == 1 {
            acc *= &sq;
        }
        e >>= 1;
        sq = &sq * &sq;
    }
    acc
}

// width target for the phi enclosure so that phi^e still has width <= eps:
// |a^e - b^e| <= e |a - b| on [0, 1]
fn tightened(eps: &ExactRational, e: u64) -> ExactRational {
    eps / rat(e as i64, 1)
}
