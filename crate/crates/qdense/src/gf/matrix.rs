//! Dense matrices over a finite field, row-major, entries as element indices.

use super::field::FieldSpec;
use std::hash::{Hash, Hasher};

#[derive(Clone)]
pub struct MatrixGF {
    rows: usize,
    cols: usize,
    data: Vec<u16>,
    field: FieldSpec,
}

impl std::fmt::Debug for MatrixGF {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "MatrixGF {}x{} over F_{}", self.rows, self.cols, self.field.q())?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        Ok(())
    }
}

impl PartialEq for MatrixGF {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self.field == other.field
            && self.data == other.data
    }
}

impl Eq for MatrixGF {}

impl Hash for MatrixGF {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.rows.hash(state);
        self.cols.hash(state);
        self.field.q().hash(state);
        self.data.hash(state);
    }
}

impl MatrixGF {
    pub fn zero(rows: usize, cols: usize, field: FieldSpec) -> Self {
        assert!(cols > 0, "matrices need at least one column");
        MatrixGF { rows, cols, data: vec![0; rows * cols], field }
    }

    pub fn identity(n: usize, field: FieldSpec) -> Self {
        let mut m = Self::zero(n, n, field);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<u16>>, cols: usize, field: FieldSpec) -> Self {
        let mut m = Self::zero(rows.len(), cols, field);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "row length mismatch");
            for (j, &v) in r.iter().enumerate() {
                assert!((v as u64) < m.field.q(), "entry out of field range");
                m.data[i * cols + j] = v;
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u16 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u16) {
        self.data[i * self.cols + j] = v;
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[u16] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn transpose(&self) -> MatrixGF {
        let mut out = MatrixGF::zero(self.cols, self.rows, self.field.clone());
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j));
            }
        }
        out
    }

    pub fn vstack(&self, other: &MatrixGF) -> MatrixGF {
        assert_eq!(self.cols, other.cols);
        assert_eq!(self.field, other.field);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        MatrixGF { rows: self.rows + other.rows, cols: self.cols, data, field: self.field.clone() }
    }

    pub fn mul(&self, other: &MatrixGF) -> MatrixGF {
        assert_eq!(self.cols, other.rows);
        let f = &self.field;
        let mut out = MatrixGF::zero(self.rows, other.cols, f.clone());
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let t = f.mul(a, other.get(l, j));
                    let cur = out.get(i, j);
                    out.set(i, j, f.add(cur, t));
                }
            }
        }
        out
    }

    /// Reduced row-echelon form: (rref matrix, pivot columns, rank).
    pub fn rref(&self) -> (MatrixGF, Vec<usize>, usize) {
        let mut m = self.clone();
        let f = m.field.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            let Some(pr) = (r..m.rows).find(|&i| m.get(i, c) != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..m.cols {
                    let t = m.get(r, j);
                    m.set(r, j, m.get(pr, j));
                    m.set(pr, j, t);
                }
            }
            let inv = f.inv(m.get(r, c));
            if inv != 1 {
                for j in 0..m.cols {
                    m.set(r, j, f.mul(m.get(r, j), inv));
                }
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c);
                if factor == 0 {
                    continue;
                }
                for j in 0..m.cols {
                    let t = f.mul(factor, m.get(r, j));
                    m.set(i, j, f.sub(m.get(i, j), t));
                }
            }
            pivots.push(c);
            r += 1;
            if r == m.rows {
                break;
            }
        }
        (m, pivots, r)
    }

    pub fn rank(&self) -> usize {
        self.rref().2
    }

    /// Basis of the right null space {x : M x^T = 0}, one vector per row.
    pub fn kernel(&self) -> MatrixGF {
        let (r, pivots, rank) = self.rref();
        let f = self.field.clone();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = MatrixGF::zero(free.len(), self.cols, f.clone());
        for (bi, &fc) in free.iter().enumerate() {
            out.set(bi, fc, 1);
            for (pi, &pc) in pivots.iter().enumerate().take(rank) {
                out.set(bi, pc, f.neg(r.get(pi, fc)));
            }
        }
        out
    }

    /// Inverse of a square matrix, or None when singular.
    pub fn inverse(&self) -> Option<MatrixGF> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = MatrixGF::zero(n, 2 * n, self.field.clone());
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, n + i, 1);
        }
        let (r, pivots, _) = aug.rref();
        // invertible iff every pivot lands in the left block
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        let mut out = MatrixGF::zero(n, n, self.field.clone());
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, r.get(i, n + j));
            }
        }
        Some(out)
    }
}

/// Incremental Gaussian elimination: a growing reduced basis used by the
/// census inner loops to decide independence cheaply.
#[derive(Clone)]
pub struct Echelon {
    field: FieldSpec,
    cols: usize,
    rows: Vec<Vec<u16>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(field: FieldSpec, cols: usize) -> Self {
        Echelon { field, cols, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the basis; inserts it if independent.
    /// Returns true when the vector enlarged the span.
    pub fn insert(&mut self, v: &[u16]) -> bool {
        assert_eq!(v.len(), self.cols);
        let f = self.field.clone();
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(self.pivots.iter()) {
            let c = v[p];
            if c != 0 {
                for j in p..self.cols {
                    let t = f.mul(c, row[j]);
                    v[j] = f.sub(v[j], t);
                }
            }
        }
        let Some(p) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = f.inv(v[p]);
        if inv != 1 {
            for x in v.iter_mut() {
                *x = f.mul(*x, inv);
            }
        }
        self.rows.push(v);
        self.pivots.push(p);
        true
    }

    pub fn contains(&self, v: &[u16]) -> bool {
        let f = &self.field;
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(self.pivots.iter()) {
            let c = v[p];
            if c != 0 {
                for j in p..self.cols {
                    let t = f.mul(c, row[j]);
                    v[j] = f.sub(v[j], t);
                }
            }
        }
        v.iter().all(|&x| x == 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::field_make;

    #[test]
    fn rref_examples() {
        let f2 = field_make(2, 1).unwrap();
        let z = MatrixGF::zero(2, 3, f2.clone());
        let (rz, pz, rkz) = z.rref();
        assert!(rz.is_zero());
        assert!(pz.is_empty());
        assert_eq!(rkz, 0);

        let id = MatrixGF::identity(3, f2.clone());
        let (ri, pi, rki) = id.rref();
        assert_eq!(ri, id);
        assert_eq!(pi, vec![0, 1, 2]);
        assert_eq!(rki, 3);

        let m = MatrixGF::from_rows(
            vec![vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]],
            3,
            f2.clone(),
        );
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn rref_normalizes_pivots_over_f3() {
        let f3 = field_make(3, 1).unwrap();
        let m = MatrixGF::from_rows(vec![vec![2, 1, 0], vec![0, 0, 2]], 3, f3);
        let (r, p, rk) = m.rref();
        assert_eq!(rk, 2);
        assert_eq!(p, vec![0, 2]);
        assert_eq!(r.row(0), &[1, 2, 0]);
        assert_eq!(r.row(1), &[0, 0, 1]);
    }

    #[test]
    fn kernel_is_orthogonal_to_rows() {
        let f3 = field_make(3, 1).unwrap();
        let m = MatrixGF::from_rows(vec![vec![1, 2, 0, 1], vec![0, 1, 1, 2]], 4, f3.clone());
        let k = m.kernel();
        assert_eq!(k.rows(), 2);
        let prod = m.mul(&k.transpose());
        assert!(prod.is_zero());
    }

    #[test]
    fn inverse_round_trip() {
        let f5 = field_make(5, 1).unwrap();
        let m = MatrixGF::from_rows(vec![vec![1, 2], vec![3, 4]], 2, f5.clone());
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), MatrixGF::identity(2, f5.clone()));
        let sing = MatrixGF::from_rows(vec![vec![1, 2], vec![2, 4]], 2, f5);
        assert!(sing.inverse().is_none());
    }

    #[test]
    fn echelon_tracks_rank_and_membership() {
        let f2 = field_make(2, 1).unwrap();
        let mut e = Echelon::new(f2, 3);
        assert!(e.insert(&[1, 1, 0]));
        assert!(e.insert(&[0, 1, 1]));
        assert!(!e.insert(&[1, 0, 1]));
        assert_eq!(e.rank(), 2);
        assert!(e.contains(&[1, 0, 1]));
        assert!(!e.contains(&[0, 0, 1]));
    }
}
