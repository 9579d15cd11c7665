//! Rank-metric matrix codes as flattened subspaces: exact minimum distance
//! and the trace-form dual.

use crate::error::{DomainError, DomainResult};
use crate::gf::{f2, FieldSpec, MatrixGF, Subspace};
use std::sync::OnceLock;

/// A linear code of n x m matrices over F_q, stored as a subspace of
/// F_q^{nm} under the row-major flattening. Minimum distance is cached on
/// first computation.
#[derive(Debug, Clone)]
pub struct MatrixCode {
    space: Subspace,
    n: usize,
    m: usize,
    min_dist: OnceLock<usize>,
}

impl MatrixCode {
    pub fn new(space: Subspace, n: usize, m: usize) -> DomainResult<Self> {
        if n == 0 || m == 0 {
            return Err(DomainError::new("MatrixCode", "shape must be positive"));
        }
        if space.ambient() != n * m {
            return Err(DomainError::new(
                "MatrixCode",
                format!("ambient {} != n*m = {}", space.ambient(), n * m),
            ));
        }
        Ok(MatrixCode { space, n, m, min_dist: OnceLock::new() })
    }

    pub fn from_flat_rows(
        field: &FieldSpec,
        n: usize,
        m: usize,
        rows: &[Vec<u16>],
    ) -> DomainResult<Self> {
        Self::new(Subspace::span(field, n * m, rows), n, m)
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.n, self.m)
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn field(&self) -> &FieldSpec {
        self.space.field()
    }

    pub fn matrix_of(&self, flat: &[u16]) -> MatrixGF {
        MatrixGF::from_rows(
            (0..self.n).map(|r| flat[r * self.m..(r + 1) * self.m].to_vec()).collect(),
            self.m,
            self.field().clone(),
        )
    }

    /// Minimum rank over the q^k - 1 nonzero codewords, exactly.
    pub fn min_distance(&self) -> DomainResult<usize> {
        if let Some(&d) = self.min_dist.get() {
            return Ok(d);
        }
        if self.dim() == 0 {
            return Err(DomainError::new("min_distance", "zero code"));
        }
        let q = self.field().q();
        let nm = self.n * self.m;
        let mut best = self.n.min(self.m);
        if q == 2 && nm <= 63 && self.n <= 16 {
            let rows: Vec<u64> = self.space.basis_rows().map(f2::pack).collect();
            let mut cur = 0u64;
            for idx in 1u64..(1 << rows.len()) {
                cur ^= rows[idx.trailing_zeros() as usize];
                let r = f2::matrix_rank_of_flat(cur, self.n, self.m);
                best = best.min(r);
                if best == 1 {
                    break;
                }
            }
        } else {
            self.space.for_each_vector(|flat| {
                if flat.iter().all(|&x| x == 0) {
                    return;
                }
                best = best.min(self.matrix_of(flat).rank());
            });
        }
        let _ = self.min_dist.set(best);
        Ok(best)
    }

    /// MRD at shape (n, m) with n <= m means dim = m(n - d + 1).
    pub fn is_mrd(&self) -> DomainResult<bool> {
        let d = self.min_distance()?;
        Ok(self.dim() == self.m * (self.n + 1 - d))
    }
}

/// Orthogonal complement under Tr(A B^T), the dot product on the row-major
/// flattening. dim + dim(dual) = nm; the map is an involution.
pub fn dual_code(code: &MatrixCode) -> MatrixCode {
    let f = code.field().clone();
    let nm = code.n * code.m;
    let rows: Vec<Vec<u16>> = code.space.basis_rows().map(|r| r.to_vec()).collect();
    let b = MatrixGF::from_rows(rows, nm, f.clone());
    let ker = b.kernel();
    let gens: Vec<Vec<u16>> = (0..ker.rows()).map(|i| ker.row(i).to_vec()).collect();
    MatrixCode::new(Subspace::span(&f, nm, &gens), code.n, code.m)
        .expect("kernel lives in the same ambient space")
}
