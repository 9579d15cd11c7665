//! Exhaustive count of functional tuples separating a point set from 0.

use crate::error::DomainError;
use crate::exact::{int, ipow, ExactInt};
use crate::gf::FieldSpec;
use crate::oracle::budget::Budget;
use crate::oracle::OracleError;
use std::collections::BTreeSet;

/// Count the r-tuples of linear functionals on F_q^N (equivalently r x N
/// matrices) whose common kernel meets the point set only in 0.
pub fn count_distinguishing_functionals(
    field: &FieldSpec,
    n: usize,
    points: &[Vec<u16>],
    r: usize,
    budget: &Budget,
) -> Result<ExactInt, OracleError> {
    if n == 0 || r == 0 {
        return Err(DomainError::new(
            "count_distinguishing_functionals",
            "need N >= 1 and r >= 1",
        )
        .into());
    }
    let q = field.q();
    for p in points {
        if p.len() != n || p.iter().any(|&x| (x as u64) >= q) {
            return Err(DomainError::new(
                "count_distinguishing_functionals",
                "point outside the ambient space",
            )
            .into());
        }
    }
    let tuples = ipow(q, (r * n) as u64);
    budget.check_tuples(&tuples)?;

    // only distinct nonzero points constrain anything
    let pts: Vec<Vec<u16>> = points
        .iter()
        .filter(|p| p.iter().any(|&x| x != 0))
        .cloned()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    if pts.is_empty() {
        return Ok(tuples);
    }
    let np = pts.len();
    let words = np.div_ceil(64);

    // per-functional bitset of the points it kills
    let mut masks: Vec<Vec<u64>> = Vec::new();
    let mut f = vec![0u16; n];
    'outer: loop {
        let mut mask = vec![0u64; words];
        for (pi, pt) in pts.iter().enumerate() {
            let dot = f
                .iter()
                .zip(pt.iter())
                .fold(0u16, |acc, (&a, &b)| field.add(acc, field.mul(a, b)));
            if dot == 0 {
                mask[pi / 64] |= 1 << (pi % 64);
            }
        }
        masks.push(mask);
        let mut i = 0;
        loop {
            if i == n {
                break 'outer;
            }
            f[i] += 1;
            if (f[i] as u64) < q {
                break;
            }
            f[i] = 0;
            i += 1;
        }
    }

    // completions once nothing survives: q^{n * remaining} tuples at a stroke
    let pow_per_slot: Vec<ExactInt> = (0..=r).map(|j| ipow(q, (n * j) as u64)).collect();
    let mut alive = vec![!0u64; words];
    if np % 64 != 0 {
        alive[words - 1] = (1u64 << (np % 64)) - 1;
    }
    fn walk(
        masks: &[Vec<u64>],
        pow_per_slot: &[ExactInt],
        remaining: usize,
        alive: &[u64],
    ) -> ExactInt {
        if alive.iter().all(|&w| w == 0) {
            return pow_per_slot[remaining].clone();
        }
        if remaining == 0 {
            return int(0);
        }
        let mut total = int(0);
        let mut next = vec![0u64; alive.len()];
        for mask in masks {
            for ((dst, &a), &b) in next.iter_mut().zip(alive).zip(mask) {
                *dst = a & b;
            }
            total += walk(masks, pow_per_slot, remaining - 1, &next);
        }
        total
    }
    Ok(walk(&masks, &pow_per_slot, r, &alive))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::{field_make, Subspace};
    use crate::qfunc::tau_linear;

    #[test]
    fn zero_set_admits_every_tuple() {
        let f = field_make(2, 1).unwrap();
        let got =
            count_distinguishing_functionals(&f, 3, &[vec![0, 0, 0]], 2, &Budget::default())
                .unwrap();
        assert_eq!(got, int(64));
    }

    #[test]
    fn line_in_dimension_three() {
        let f = field_make(2, 1).unwrap();
        let line = [vec![0, 0, 0], vec![1, 0, 0]];
        let got =
            count_distinguishing_functionals(&f, 3, &line, 2, &Budget::default()).unwrap();
        assert_eq!(got, int(48));
    }

    #[test]
    fn matches_closed_count_on_subspaces() {
        let f = field_make(2, 1).unwrap();
        for k in 0..=3usize {
            let gens: Vec<Vec<u16>> = (0..k)
                .map(|i| {
                    let mut v = vec![0u16; 3];
                    v[i] = 1;
                    v
                })
                .collect();
            let s = Subspace::span(&f, 3, &gens);
            let mut pts = Vec::new();
            s.for_each_vector(|v| pts.push(v.to_vec()));
            for r in 1..=2usize {
                let got =
                    count_distinguishing_functionals(&f, 3, &pts, r, &Budget::default())
                        .unwrap();
                let want = tau_linear(r as u64, k as u64, 3, 2).unwrap();
                assert_eq!(got, want, "k = {k}, r = {r}");
            }
        }
    }

    #[test]
    fn odd_characteristic_line() {
        let f3 = field_make(3, 1).unwrap();
        let pts = [vec![1, 0], vec![2, 0]];
        let got =
            count_distinguishing_functionals(&f3, 2, &pts, 1, &Budget::default()).unwrap();
        assert_eq!(got, tau_linear(1, 1, 2, 3).unwrap());
        assert_eq!(got, int(6));
    }

    #[test]
    fn duplicates_and_zero_do_not_change_the_count() {
        let f = field_make(2, 1).unwrap();
        let a = [vec![1, 1, 0]];
        let b = [vec![1, 1, 0], vec![1, 1, 0], vec![0, 0, 0]];
        let ca = count_distinguishing_functionals(&f, 3, &a, 2, &Budget::default()).unwrap();
        let cb = count_distinguishing_functionals(&f, 3, &b, 2, &Budget::default()).unwrap();
        assert_eq!(ca, cb);
    }

    #[test]
    fn budget_refusal() {
        let f = field_make(2, 1).unwrap();
        let tight = Budget::with_override(Some(8));
        assert!(matches!(
            count_distinguishing_functionals(&f, 3, &[vec![1, 0, 0]], 2, &tight),
            Err(OracleError::Budget(_))
        ));
    }

    #[test]
    fn rejects_bad_points() {
        let f = field_make(2, 1).unwrap();
        assert!(count_distinguishing_functionals(
            &f,
            3,
            &[vec![1, 0]],
            1,
            &Budget::default()
        )
        .is_err());
        assert!(count_distinguishing_functionals(
            &f,
            3,
            &[vec![2, 0, 0]],
            1,
            &Budget::default()
        )
        .is_err());
    }
}
