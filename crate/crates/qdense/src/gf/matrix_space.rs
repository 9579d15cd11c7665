//! Lift of a column space to a space of matrices.

use super::subspace::Subspace;

/// All n x m matrices whose column space lies in U, as a subspace of
/// F_q^(n*m) under row-major flattening (matrix entry (r, c) at r*m + c).
///
/// Basis: u e_j^T for each basis vector u of U and each column j, so the
/// result has dimension m * dim(U).
pub fn matrix_space_of_column_space(u: &Subspace, m: usize) -> Subspace {
    assert!(m > 0, "matrix space needs at least one column");
    let n = u.ambient();
    let mut gens: Vec<Vec<u16>> = Vec::with_capacity(m * u.dim());
    for row in u.basis_rows() {
        for j in 0..m {
            let mut flat = vec![0u16; n * m];
            for (r, &x) in row.iter().enumerate() {
                flat[r * m + j] = x;
            }
            gens.push(flat);
        }
    }
    Subspace::span(u.field(), n * m, &gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::{enumerate_subspaces, field_make, MatrixGF};

    #[test]
    fn zero_and_full_lift() {
        let f2 = field_make(2, 1).unwrap();
        let zero = Subspace::zero(&f2, 3);
        assert_eq!(matrix_space_of_column_space(&zero, 2).dim(), 0);
        let full = Subspace::full(&f2, 3);
        let lifted = matrix_space_of_column_space(&full, 2);
        assert_eq!(lifted.dim(), 6);
        assert_eq!(lifted.ambient(), 6);
    }

    #[test]
    fn line_lift_zeroes_other_rows() {
        let f2 = field_make(2, 1).unwrap();
        let u = Subspace::span(&f2, 2, &[vec![1, 0]]);
        let lifted = matrix_space_of_column_space(&u, 2);
        assert_eq!(lifted.dim(), 2);
        // every member has zero second matrix row (flat positions 2, 3)
        lifted.for_each_vector(|v| {
            assert_eq!(v[2], 0);
            assert_eq!(v[3], 0);
        });
    }

    #[test]
    fn members_have_column_space_inside_u() {
        let f3 = field_make(3, 1).unwrap();
        let n = 3;
        let m = 2;
        for k in 0..=n {
            enumerate_subspaces(&f3, n, k, &mut |u: &Subspace| {
                let lifted = matrix_space_of_column_space(u, m);
                assert_eq!(lifted.dim(), m * u.dim());
                lifted.for_each_vector(|flat| {
                    // columns of the unflattened matrix must lie in u
                    let mat = MatrixGF::from_rows(
                        (0..n).map(|r| flat[r * m..(r + 1) * m].to_vec()).collect(),
                        m,
                        u.field().clone(),
                    );
                    let t = mat.transpose();
                    for c in 0..m {
                        assert!(u.contains(t.row(c)));
                    }
                });
            });
        }
    }
}
