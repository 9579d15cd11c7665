//! Structure maps on MRD codes: the unique unit-top-block basis and the
//! injective two-factor decomposition built from it.

use crate::error::{DomainError, DomainResult};
use crate::gf::MatrixGF;
use crate::oracle::code::MatrixCode;

/// The unique basis whose projection onto the top n-d+1 rows is the
/// standard unit-matrix pattern, ordered by unit position (i, j) row-major.
#[derive(Debug, Clone)]
pub struct SpecialBasis {
    pub d: usize,
    pub elements: Vec<MatrixGF>,
}

/// Compute the unit-top-block basis of an MRD code with d >= 2. The
/// canonical echelon basis of the underlying subspace is that basis exactly
/// when the top-block projection is an isomorphism; an independent
/// recomputation through a scrambled generating set confirms uniqueness.
pub fn special_basis(code: &MatrixCode) -> DomainResult<SpecialBasis> {
    let (n, m) = code.shape();
    let d = code.min_distance()?;
    if d < 2 {
        return Err(DomainError::new(
            "special_basis",
            format!("minimum distance must be at least 2, got {d}"),
        ));
    }
    let k = code.dim();
    if k != m * (n + 1 - d) {
        return Err(DomainError::new(
            "special_basis",
            format!("not MRD: dim {k} != m(n-d+1) = {}", m * (n + 1 - d)),
        ));
    }
    let pivots = code.space().pivots();
    if pivots.len() != k || pivots.iter().enumerate().any(|(i, &p)| p != i) {
        return Err(DomainError::new(
            "special_basis",
            "projection onto the top rows is not an isomorphism",
        ));
    }
    let flats: Vec<Vec<u16>> = code.space().basis_rows().map(|r| r.to_vec()).collect();

    // recompute through the projection isomorphism on an independent
    // generating set: prefix sums scramble the basis invertibly, then the
    // inverse of the scrambled top block must reproduce the same rows
    let f = code.field().clone();
    let nm = n * m;
    let mut scrambled: Vec<Vec<u16>> = Vec::with_capacity(k);
    let mut acc = vec![0u16; nm];
    for row in &flats {
        for (a, &b) in acc.iter_mut().zip(row) {
            *a = f.add(*a, b);
        }
        scrambled.push(acc.clone());
    }
    let g = MatrixGF::from_rows(scrambled, nm, f.clone());
    let mut top = MatrixGF::zero(k, k, f.clone());
    for i in 0..k {
        for j in 0..k {
            top.set(i, j, g.get(i, j));
        }
    }
    let inv = top
        .inverse()
        .ok_or_else(|| DomainError::new("special_basis", "scrambled top block is singular"))?;
    let recomputed = inv.mul(&g);
    for (i, row) in flats.iter().enumerate() {
        if recomputed.row(i) != &row[..] {
            return Err(DomainError::new(
                "special_basis",
                "projection recomputation disagrees with the canonical basis",
            ));
        }
    }

    let mut elements = Vec::with_capacity(k);
    for flat in &flats {
        let mat = code.matrix_of(flat);
        let r = mat.rank();
        if r != d {
            return Err(DomainError::new(
                "special_basis",
                format!("basis element has rank {r}, expected exactly {d}"),
            ));
        }
        elements.push(mat);
    }
    Ok(SpecialBasis { d, elements })
}

#[derive(Debug, Clone)]
pub struct SplitCodes {
    pub c1: MatrixCode,
    pub c2: MatrixCode,
}

/// Decompose an MRD code into the two smaller MRD codes carried by its
/// unit-top-block basis: the first unit row's slice trimmed to d x m rows,
/// and the remaining slices with the (zero) first row deleted. For d = n
/// the second factor is empty and only the first is checked.
pub fn split_code(code: &MatrixCode) -> DomainResult<SplitCodes> {
    let (n, m) = code.shape();
    if n < 3 {
        return Err(DomainError::new("split", format!("need n >= 3, got {n}")));
    }
    let sb = special_basis(code)?;
    let d = sb.d;
    let f = code.field().clone();

    let keep: Vec<usize> = std::iter::once(0).chain(n - d + 1..n).collect();
    let c1_rows: Vec<Vec<u16>> = sb.elements[..m]
        .iter()
        .map(|mat| {
            let mut flat = Vec::with_capacity(d * m);
            for &r in &keep {
                flat.extend_from_slice(mat.row(r));
            }
            flat
        })
        .collect();
    let c1 = MatrixCode::from_flat_rows(&f, d, m, &c1_rows)?;
    if c1.dim() != m || c1.min_distance()? != d {
        return Err(DomainError::new(
            "split",
            "first factor failed the expected distance check",
        ));
    }

    let c2_rows: Vec<Vec<u16>> = sb.elements[m..]
        .iter()
        .map(|mat| {
            debug_assert!(mat.row(0).iter().all(|&x| x == 0));
            let mut flat = Vec::with_capacity((n - 1) * m);
            for r in 1..n {
                flat.extend_from_slice(mat.row(r));
            }
            flat
        })
        .collect();
    let c2 = MatrixCode::from_flat_rows(&f, n - 1, m, &c2_rows)?;
    if d < n && (c2.dim() != m * (n - d) || c2.min_distance()? != d) {
        return Err(DomainError::new(
            "split",
            "second factor failed the expected distance check",
        ));
    }
    Ok(SplitCodes { c1, c2 })
}
