//! Canonical subspace representation: RREF basis plus pivot columns.

use super::field::FieldSpec;
use super::matrix::MatrixGF;

/// Subspace of F_q^N. Two subspaces are equal iff their canonical bases are
/// identical entry for entry.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    basis: MatrixGF,
    pivots: Vec<usize>,
}

impl Subspace {
    /// Canonical subspace spanned by the given vectors.
    pub fn span(field: &FieldSpec, ambient: usize, generators: &[Vec<u16>]) -> Subspace {
        assert!(ambient > 0);
        for g in generators {
            assert_eq!(g.len(), ambient, "generator length mismatch");
        }
        let m = MatrixGF::from_rows(generators.to_vec(), ambient, field.clone());
        Self::from_matrix(&m)
    }

    pub fn zero(field: &FieldSpec, ambient: usize) -> Subspace {
        Subspace { basis: MatrixGF::zero(0, ambient, field.clone()), pivots: Vec::new() }
    }

    pub fn full(field: &FieldSpec, ambient: usize) -> Subspace {
        Subspace { basis: MatrixGF::identity(ambient, field.clone()), pivots: (0..ambient).collect() }
    }

    /// Canonicalizes the row space of an arbitrary matrix.
    pub fn from_matrix(m: &MatrixGF) -> Subspace {
        let (r, pivots, rank) = m.rref();
        let mut basis = MatrixGF::zero(rank, m.cols(), m.field().clone());
        for i in 0..rank {
            for j in 0..m.cols() {
                basis.set(i, j, r.get(i, j));
            }
        }
        Subspace { basis, pivots }
    }

    /// Trusts the caller to pass a matrix already in RREF with these pivots.
    pub(crate) fn from_rref_unchecked(basis: MatrixGF, pivots: Vec<usize>) -> Subspace {
        debug_assert_eq!(basis.rows(), pivots.len());
        Subspace { basis, pivots }
    }

    pub fn ambient(&self) -> usize {
        self.basis.cols()
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn field(&self) -> &FieldSpec {
        self.basis.field()
    }

    pub fn basis(&self) -> &MatrixGF {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_rows(&self) -> impl Iterator<Item = &[u16]> {
        (0..self.dim()).map(|i| self.basis.row(i))
    }

    pub fn contains(&self, v: &[u16]) -> bool {
        assert_eq!(v.len(), self.ambient());
        let f = self.field();
        let mut v = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            let c = v[p];
            if c != 0 {
                for j in p..self.ambient() {
                    let t = f.mul(c, self.basis.get(i, j));
                    v[j] = f.sub(v[j], t);
                }
            }
        }
        v.iter().all(|&x| x == 0)
    }

    /// Sum of subspaces.
    pub fn join(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient(), other.ambient(), "ambient mismatch");
        assert_eq!(self.field(), other.field(), "field mismatch");
        Self::from_matrix(&self.basis.vstack(&other.basis))
    }

    /// Intersection, via elimination on the doubled matrix
    /// [U | U; V | 0]: rows with vanishing left half carry a basis of U cap V
    /// in their right half.
    pub fn meet(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient(), other.ambient(), "ambient mismatch");
        assert_eq!(self.field(), other.field(), "field mismatch");
        let n = self.ambient();
        let f = self.field().clone();
        let a = self.dim();
        let b = other.dim();
        let mut stacked = MatrixGF::zero(a + b, 2 * n, f.clone());
        for i in 0..a {
            for j in 0..n {
                let v = self.basis.get(i, j);
                stacked.set(i, j, v);
                stacked.set(i, n + j, v);
            }
        }
        for i in 0..b {
            for j in 0..n {
                stacked.set(a + i, j, other.basis.get(i, j));
            }
        }
        let (r, _, rank) = stacked.rref();
        let mut gens = Vec::new();
        for i in 0..rank {
            if (0..n).all(|j| r.get(i, j) == 0) {
                gens.push((n..2 * n).map(|j| r.get(i, j)).collect::<Vec<u16>>());
            }
        }
        Subspace::span(&f, n, &gens)
    }

    pub fn meet_dim(&self, other: &Subspace) -> usize {
        // dim(U) + dim(V) - dim(U + V), avoiding the doubled-matrix pass
        let joined = self.basis.vstack(&other.basis).rank();
        self.dim() + other.dim() - joined
    }

    /// Visits every vector of the subspace once, the zero vector included,
    /// in odometer order over basis coefficients.
    pub fn for_each_vector(&self, mut f: impl FnMut(&[u16])) {
        let k = self.dim();
        let n = self.ambient();
        let field = self.field().clone();
        let q = field.q();
        let mut digits = vec![0u16; k];
        let mut cur = vec![0u16; n];
        loop {
            f(&cur);
            // advance odometer, last digit fastest
            let mut pos = k;
            loop {
                if pos == 0 {
                    return;
                }
                pos -= 1;
                if (digits[pos] as u64) + 1 < q {
                    digits[pos] += 1;
                    break;
                }
                digits[pos] = 0;
            }
            for j in 0..n {
                let mut acc = 0u16;
                for (i, &d) in digits.iter().enumerate() {
                    if d != 0 {
                        acc = field.add(acc, field.mul(d, self.basis.get(i, j)));
                    }
                }
                cur[j] = acc;
            }
        }
    }
}
