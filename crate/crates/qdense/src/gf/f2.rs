//! Bit-packed F_2 kernels for the census hot loops.
//!
//! A vector of F_2^n (n <= 63) is a u64 with coordinate j in bit j; a matrix
//! is a slice of packed rows. Row operations are single XORs.

use super::subspace::Subspace;

pub fn pack(v: &[u16]) -> u64 {
    debug_assert!(v.len() <= 63);
    let mut out = 0u64;
    for (j, &x) in v.iter().enumerate() {
        debug_assert!(x <= 1);
        out |= (x as u64) << j;
    }
    out
}

pub fn unpack(x: u64, n: usize) -> Vec<u16> {
    (0..n).map(|j| ((x >> j) & 1) as u16).collect()
}

pub fn pack_subspace(s: &Subspace) -> Vec<u64> {
    debug_assert_eq!(s.field().q(), 2);
    s.basis_rows().map(pack).collect()
}

/// Rank of a set of packed rows; scrambles the buffer.
pub fn rank(rows: &mut [u64]) -> usize {
    let mut rank = 0;
    for i in 0..rows.len() {
        let mut v = rows[i];
        for &pivot in &rows[..rank] {
            if (v >> pivot.trailing_zeros()) & 1 == 1 {
                v ^= pivot;
            }
        }
        if v != 0 {
            rows[rank] = v;
            rank += 1;
        }
    }
    rank
}

/// Growing reduced basis over F_2; packed mirror of `Echelon`.
///
/// Rows are kept in insertion order; each row was reduced against all rows
/// stored before it, which makes one reduction pass in that order exact.
#[derive(Clone, Default)]
pub struct F2Echelon {
    rows: Vec<u64>,
}

impl F2Echelon {
    pub fn new() -> Self {
        F2Echelon { rows: Vec::new() }
    }

    pub fn from_rows(rows: &[u64]) -> Self {
        let mut e = Self::new();
        for &r in rows {
            e.insert(r);
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn insert(&mut self, v: u64) -> bool {
        let v = self.reduce(v);
        if v == 0 {
            return false;
        }
        self.rows.push(v);
        true
    }

    pub fn contains(&self, v: u64) -> bool {
        self.reduce(v) == 0
    }

    #[inline]
    fn reduce(&self, mut v: u64) -> u64 {
        for &r in &self.rows {
            if (v >> r.trailing_zeros()) & 1 == 1 {
                v ^= r;
            }
        }
        v
    }

    /// True when span(self) and span(w_rows) intersect trivially; w_rows must
    /// be independent and hold at most 24 rows.
    pub fn meets_trivially(&self, w_rows: &[u64]) -> bool {
        debug_assert!(w_rows.len() <= 24);
        let mut tmp = [0u64; 24];
        let mut t = 0;
        for &w in w_rows {
            let mut v = w;
            for &r in self.rows.iter().chain(tmp[..t].iter()) {
                if (v >> r.trailing_zeros()) & 1 == 1 {
                    v ^= r;
                }
            }
            if v == 0 {
                return false;
            }
            tmp[t] = v;
            t += 1;
        }
        true
    }
}

/// Rank of the n x m matrix whose row-major flattening is `flat` (bit r*m+c).
#[inline]
pub fn matrix_rank_of_flat(flat: u64, n: usize, m: usize) -> usize {
    debug_assert!(n * m <= 63 && n <= 16);
    let mask = (1u64 << m) - 1;
    let mut rows = [0u64; 16];
    for r in 0..n {
        rows[r] = (flat >> (r * m)) & mask;
    }
    rank(&mut rows[..n])
}

/// a * transpose(b) over F_2 as packed rows: entry (i, j) = parity(a_i & b_j).
pub fn mul_transpose(a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter()
        .map(|&ai| {
            let mut row = 0u64;
            for (j, &bj) in b.iter().enumerate() {
                row |= (((ai & bj).count_ones() as u64) & 1) << j;
            }
            row
        })
        .collect()
}
