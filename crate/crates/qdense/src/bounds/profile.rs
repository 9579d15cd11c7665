use crate::error::{DomainError, DomainResult};
use crate::exact::{int, ExactInt};
use num_traits::Zero;
use std::collections::BTreeMap;

/// Pairwise intersection statistics of a family of s subspaces of
/// codimension k in F_q^N: for each l, the number of ordered pairs (A, A')
/// with dim(A intersect A') = l.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionProfile {
    s: u64,
    n_amb: u64,
    k: u64,
    counts: BTreeMap<u64, ExactInt>,
}

impl IntersectionProfile {
    pub fn new(
        s: u64,
        n_amb: u64,
        k: u64,
        counts: BTreeMap<u64, ExactInt>,
    ) -> DomainResult<Self> {
        let err = |msg: String| Err(DomainError::new("intersection_profile", msg));
        if n_amb < 3 || k == 0 || k >= n_amb {
            return err(format!("need N >= 3 and 1 <= k <= N-1, got N = {n_amb}, k = {k}"));
        }
        if s == 0 {
            return err("family must be non-empty".into());
        }
        let dim = n_amb - k;
        let l_min = n_amb.saturating_sub(2 * k);
        let mut total = ExactInt::zero();
        for (&l, c) in &counts {
            if c < &ExactInt::zero() {
                return err(format!("negative count at l = {l}"));
            }
            if c.is_zero() {
                continue;
            }
            if l > dim {
                return err(format!("l = {l} exceeds member dimension {dim}"));
            }
            if l < l_min {
                return err(format!(
                    "two codimension-{k} spaces cannot meet in dimension {l} < {l_min}"
                ));
            }
            if l < dim && (c % int(2)) != ExactInt::zero() {
                return err(format!("off-diagonal count at l = {l} must be even"));
            }
            total += c;
        }
        if total != int((s * s) as i64) {
            return err(format!("counts sum to {total}, expected s^2 = {}", s * s));
        }
        if counts.get(&dim).cloned().unwrap_or_else(ExactInt::zero) < int(s as i64) {
            return err(format!("diagonal needs at least s = {s} pairs at l = {dim}"));
        }
        Ok(IntersectionProfile { s, n_amb, k, counts })
    }

    /// Worst-case profile compatible with a family of size s whose pairwise
    /// intersections all have dimension lmax: diagonal plus s(s-1) pairs at lmax.
    pub fn worst_case(s: u64, lmax: u64, n_amb: u64, k: u64) -> DomainResult<Self> {
        let mut counts = BTreeMap::new();
        counts.insert(n_amb - k, int(s as i64));
        if s > 1 {
            *counts.entry(lmax).or_insert_with(ExactInt::zero) += int((s * (s - 1)) as i64);
        }
        Self::new(s, n_amb, k, counts)
    }

    pub fn s(&self) -> u64 {
        self.s
    }

    pub fn ambient(&self) -> u64 {
        self.n_amb
    }

    pub fn codim(&self) -> u64 {
        self.k
    }

    /// Dimension of the family members (N - k).
    pub fn member_dim(&self) -> u64 {
        self.n_amb - self.k
    }

    pub fn counts(&self) -> &BTreeMap<u64, ExactInt> {
        &self.counts
    }

    /// Largest off-diagonal intersection dimension; None for s = 1.
    pub fn lmax(&self) -> Option<u64> {
        self.counts
            .iter()
            .filter(|(&l, c)| l < self.member_dim() && !c.is_zero())
            .map(|(&l, _)| l)
            .max()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn counts(pairs: &[(u64, i64)]) -> BTreeMap<u64, ExactInt> {
        pairs.iter().map(|&(l, c)| (l, int(c))).collect()
    }

    #[test]
    fn accepts_the_worked_profiles() {
        // five pairwise-disjoint planes in F_2^5
        let spread = IntersectionProfile::new(5, 5, 3, counts(&[(2, 5), (0, 20)])).unwrap();
        assert_eq!(spread.lmax(), Some(0));
        assert_eq!(spread.member_dim(), 2);
        // all seven planes of a fixed 3-space
        let planes = IntersectionProfile::new(7, 5, 3, counts(&[(2, 7), (1, 42)])).unwrap();
        assert_eq!(planes.lmax(), Some(1));
    }

    #[test]
    fn rejects_malformed_profiles() {
        // bad total
        assert!(IntersectionProfile::new(5, 5, 3, counts(&[(2, 5), (0, 19)])).is_err());
        // odd off-diagonal
        assert!(IntersectionProfile::new(2, 5, 3, counts(&[(2, 2), (1, 1), (0, 1)])).is_err());
        // intersection below the dimension-formula floor: 4-spaces in F_2^5 meet in >= 3
        assert!(IntersectionProfile::new(2, 5, 1, counts(&[(4, 2), (2, 2)])).is_err());
        // missing diagonal
        assert!(IntersectionProfile::new(2, 5, 3, counts(&[(1, 4)])).is_err());
        // l above member dimension
        assert!(IntersectionProfile::new(2, 5, 3, counts(&[(2, 2), (3, 2)])).is_err());
    }

    #[test]
    fn worst_case_matches_manual() {
        let wc = IntersectionProfile::worst_case(7, 1, 5, 3).unwrap();
        assert_eq!(wc.counts(), &counts(&[(1, 42), (2, 7)]));
        let single = IntersectionProfile::worst_case(1, 0, 5, 3).unwrap();
        assert_eq!(single.lmax(), None);
    }
}
