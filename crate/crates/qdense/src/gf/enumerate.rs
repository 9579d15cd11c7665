//! Exhaustive enumeration of k-subspaces in a fixed deterministic order.
//!
//! Order: pivot-column sets in colexicographic order; within a pivot set, the
//! free entries of the RREF basis run through odometer order (row-major free
//! position list, last position fastest). Each pivot set is an independent
//! shard, which is what the parallel censuses split on.

use super::field::FieldSpec;
use super::matrix::MatrixGF;
use super::subspace::Subspace;
use crate::exact::{ipow, ExactInt};

/// All k-element subsets of {0..n-1} in colexicographic order.
pub fn pivot_sets(n: usize, k: usize) -> Vec<Vec<usize>> {
    assert!(k <= n);
    let mut out = Vec::new();
    let mut cur = vec![0usize; k];
    fn rec(out: &mut Vec<Vec<usize>>, cur: &mut Vec<usize>, pos: usize, max_excl: usize) {
        if pos == 0 {
            out.push(cur.clone());
            return;
        }
        // the element at pos-1 is the largest of the prefix
        for top in (pos - 1)..max_excl {
            cur[pos - 1] = top;
            rec(out, cur, pos - 1, top);
        }
    }
    if k == 0 {
        out.push(Vec::new());
        return out;
    }
    rec(&mut out, &mut cur, k, n);
    out
}

/// Free (non-pivot, right-of-pivot) coordinate positions of an RREF basis
/// with the given pivot columns, listed in row-major order.
fn free_positions(n: usize, pivots: &[usize]) -> Vec<(usize, usize)> {
    let mut free = Vec::new();
    for (i, &p) in pivots.iter().enumerate() {
        for c in (p + 1)..n {
            if !pivots.contains(&c) {
                free.push((i, c));
            }
        }
    }
    free
}

/// Number of subspaces in the shard belonging to one pivot set: q^(#free).
pub fn shard_size(n: usize, pivots: &[usize], q: u64) -> ExactInt {
    ipow(q, free_positions(n, pivots).len() as u64)
}

/// Iterator over the k-subspaces of F_q^n, either a single pivot-set shard
/// or the full colex-ordered sequence.
pub struct SubspaceStream {
    field: FieldSpec,
    n: usize,
    shards: Vec<Vec<usize>>,
    shard_idx: usize,
    free: Vec<(usize, usize)>,
    digits: Vec<u16>,
    exhausted_shard: bool,
    started: bool,
}

impl SubspaceStream {
    pub fn all(field: &FieldSpec, n: usize, k: usize) -> SubspaceStream {
        Self::over_shards(field, n, pivot_sets(n, k))
    }

    pub fn shard(field: &FieldSpec, n: usize, pivots: Vec<usize>) -> SubspaceStream {
        Self::over_shards(field, n, vec![pivots])
    }

    fn over_shards(field: &FieldSpec, n: usize, shards: Vec<Vec<usize>>) -> SubspaceStream {
        SubspaceStream {
            field: field.clone(),
            n,
            shards,
            shard_idx: 0,
            free: Vec::new(),
            digits: Vec::new(),
            exhausted_shard: true,
            started: false,
        }
    }

    fn build_current(&self) -> Subspace {
        let pivots = &self.shards[self.shard_idx];
        let k = pivots.len();
        let mut m = MatrixGF::zero(k, self.n, self.field.clone());
        for (i, &p) in pivots.iter().enumerate() {
            m.set(i, p, 1);
        }
        for (&(i, c), &d) in self.free.iter().zip(self.digits.iter()) {
            m.set(i, c, d);
        }
        Subspace::from_rref_unchecked(m, pivots.clone())
    }

    /// Advances the free-entry odometer; false when the shard is finished.
    fn step(&mut self) -> bool {
        let q = self.field.q();
        let mut pos = self.digits.len();
        loop {
            if pos == 0 {
                return false;
            }
            pos -= 1;
            if (self.digits[pos] as u64) + 1 < q {
                self.digits[pos] += 1;
                return true;
            }
            self.digits[pos] = 0;
        }
    }
}

impl Iterator for SubspaceStream {
    type Item = Subspace;

    fn next(&mut self) -> Option<Subspace> {
        if self.exhausted_shard {
            let next_shard = if self.started { self.shard_idx + 1 } else { 0 };
            if next_shard >= self.shards.len() {
                return None;
            }
            self.shard_idx = next_shard;
            self.started = true;
            self.free = free_positions(self.n, &self.shards[self.shard_idx]);
            self.digits = vec![0; self.free.len()];
            self.exhausted_shard = false;
            return Some(self.build_current());
        }
        if self.step() {
            Some(self.build_current())
        } else {
            self.exhausted_shard = true;
            self.next()
        }
    }
}

/// Convenience wrapper yielding every k-subspace to a visitor.
pub fn enumerate_subspaces(field: &FieldSpec, n: usize, k: usize, mut f: impl FnMut(&Subspace)) {
    for s in SubspaceStream::all(field, n, k) {
        f(&s);
    }
}
