//! Exhaustive subspace censuses: common complements, cone avoidance, and
//! direct recounts of the closed intersection formulas.

use crate::bounds::IntersectionProfile;
use crate::error::{DomainError, DomainResult};
use crate::exact::{int, ExactInt};
use crate::gf::{f2, pivot_sets, Echelon, FieldSpec, MatrixGF, Subspace, SubspaceStream};
use crate::oracle::budget::Budget;
use crate::oracle::family::FamilySpec;
use crate::oracle::OracleError;
use crate::qfunc::qbinom;
use rayon::prelude::*;
use std::collections::BTreeMap;
use std::time::Instant;

const MAX_RANK: usize = 16;

/// Shard-parallel count of the k-subspaces passing `test`. Shards are the
/// pivot-set classes; per-shard subtotals are summed in shard order, so the
/// result does not depend on the thread count.
fn census_count<F>(
    field: &FieldSpec,
    n: usize,
    k: usize,
    budget: &Budget,
    test: F,
) -> Result<(ExactInt, usize), OracleError>
where
    F: Fn(&Subspace) -> bool + Sync,
{
    let total = qbinom(n as u64, k as u64, field.q());
    budget.check_subspaces(&total)?;
    let shards = pivot_sets(n, k);
    let subtotals: Vec<u64> = shards
        .par_iter()
        .map(|pivots| {
            let mut count = 0u64;
            for s in SubspaceStream::shard(field, n, pivots.clone()) {
                if test(&s) {
                    count += 1;
                }
            }
            count
        })
        .collect();
    let passing = subtotals.iter().map(|&c| int(c as i64)).sum();
    Ok((passing, shards.len()))
}

fn pack_basis(s: &Subspace, buf: &mut [u64; MAX_RANK]) -> usize {
    let mut k = 0;
    for row in s.basis_rows() {
        buf[k] = f2::pack(row);
        k += 1;
    }
    k
}

/// True when w meets every member of `echelons` (one per family member)
/// trivially; generic-field variant of the packed fast path.
fn meets_all_trivially_generic(w: &Subspace, echelons: &[Echelon]) -> bool {
    echelons.iter().all(|e| {
        let mut ext = e.clone();
        w.basis_rows().all(|row| ext.insert(row))
    })
}

#[derive(Debug, Clone)]
pub struct CcCensus {
    pub complements: ExactInt,
    pub intersecting: ExactInt,
    pub total: ExactInt,
    pub shards: usize,
    pub elapsed_ms: u128,
}

/// Count the k-subspaces complementing every family member, by exhaustion.
pub fn count_common_complements(
    family: &FamilySpec,
    k: usize,
    budget: &Budget,
) -> Result<CcCensus, OracleError> {
    let n = family.ambient();
    if k + family.member_dim() != n {
        return Err(DomainError::new(
            "count_common_complements",
            format!(
                "complement dimension must be N - dim(member) = {}, got k = {k}",
                n - family.member_dim()
            ),
        )
        .into());
    }
    let field = family.field().clone();
    let start = Instant::now();
    let (complements, shards) = if field.q() == 2 && n <= 63 {
        let members: Vec<f2::F2Echelon> = family
            .members()
            .iter()
            .map(|m| {
                let rows: Vec<u64> = m.basis_rows().map(f2::pack).collect();
                f2::F2Echelon::from_rows(&rows)
            })
            .collect();
        census_count(&field, n, k, budget, |s| {
            let mut buf = [0u64; MAX_RANK];
            let rows = pack_basis(s, &mut buf);
            members.iter().all(|m| m.meets_trivially(&buf[..rows]))
        })?
    } else {
        let members: Vec<Echelon> = family
            .members()
            .iter()
            .map(|m| {
                let mut e = Echelon::new(field.clone(), n);
                for row in m.basis_rows() {
                    e.insert(row);
                }
                e
            })
            .collect();
        census_count(&field, n, k, budget, |s| meets_all_trivially_generic(s, &members))?
    };
    let total = qbinom(n as u64, k as u64, field.q());
    Ok(CcCensus {
        intersecting: &total - &complements,
        complements,
        total,
        shards,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

/// Count the k-subspaces meeting both a and b nontrivially; the direct
/// recount behind the closed intersection formula.
pub fn count_intersecting_both(
    a: &Subspace,
    b: &Subspace,
    k: usize,
    budget: &Budget,
) -> Result<ExactInt, OracleError> {
    let field = a.field().clone();
    let n = a.ambient();
    if b.ambient() != n || b.field() != &field {
        return Err(DomainError::new("count_intersecting_both", "ambient mismatch").into());
    }
    let mk_echelon = |s: &Subspace| {
        let mut e = Echelon::new(field.clone(), n);
        for row in s.basis_rows() {
            e.insert(row);
        }
        e
    };
    let (ea, eb) = (mk_echelon(a), mk_echelon(b));
    let meets = |w: &Subspace, e: &Echelon| {
        let mut ext = e.clone();
        !w.basis_rows().all(|row| ext.insert(row))
    };
    let (count, _) =
        census_count(&field, n, k, budget, |s| meets(s, &ea) && meets(s, &eb))?;
    Ok(count)
}

/// All s^2 ordered pairwise intersection dimensions of a family.
pub fn intersection_profile(family: &FamilySpec) -> DomainResult<IntersectionProfile> {
    let members = family.members();
    let mut counts: BTreeMap<u64, ExactInt> = BTreeMap::new();
    for a in members {
        for b in members {
            *counts.entry(a.meet_dim(b) as u64).or_insert_with(|| int(0)) += int(1);
        }
    }
    IntersectionProfile::new(
        members.len() as u64,
        family.ambient() as u64,
        (family.ambient() - family.member_dim()) as u64,
        counts,
    )
}

/// A cone (scalar-closed, contains 0) given by structure or by predicate.
pub enum ConeSpec<'a> {
    /// matrices of rank at most `radius`, under the row-major flattening
    RankBall { n: usize, m: usize, radius: usize },
    UnionOfMembers(&'a [Subspace]),
    Predicate {
        size: ExactInt,
        member: &'a (dyn Fn(&[u16]) -> bool + Sync),
    },
}

impl ConeSpec<'_> {
    fn contains(&self, v: &[u16], field: &FieldSpec) -> bool {
        match self {
            ConeSpec::RankBall { n, m, radius } => {
                let mat = MatrixGF::from_rows(
                    (0..*n).map(|r| v[r * m..(r + 1) * m].to_vec()).collect(),
                    *m,
                    field.clone(),
                );
                mat.rank() <= *radius
            }
            ConeSpec::UnionOfMembers(members) => members.iter().any(|s| s.contains(v)),
            ConeSpec::Predicate { member, .. } => member(v),
        }
    }

    /// 0 in K and scalar closure, spot-checked on a deterministic sample of
    /// vectors for predicate cones (structural cones are closed by
    /// construction).
    fn spot_check(&self, field: &FieldSpec, n: usize) -> DomainResult<()> {
        let ConeSpec::Predicate { member, .. } = self else {
            return Ok(());
        };
        if !member(&vec![0u16; n]) {
            return Err(DomainError::new("cone", "predicate excludes 0"));
        }
        let q = field.q();
        let mut v = vec![0u16; n];
        // stride through a fixed odometer sample; cheap and reproducible
        for step in 0..256u64 {
            let mut x = step.wrapping_mul(2654435761) % clamped_pow(q, n as u32);
            for slot in v.iter_mut() {
                *slot = (x % q) as u16;
                x /= q;
            }
            let base = member(&v);
            for c in 2..q {
                let scaled: Vec<u16> =
                    v.iter().map(|&x| field.mul(c as u16, x)).collect();
                if member(&scaled) != base {
                    return Err(DomainError::new(
                        "cone",
                        "predicate is not closed under scalar multiplication",
                    ));
                }
            }
        }
        Ok(())
    }
}

fn clamped_pow(q: u64, e: u32) -> u64 {
    q.checked_pow(e).unwrap_or(u64::MAX)
}

#[derive(Debug, Clone)]
pub struct ConeCensus {
    pub distinguishing: ExactInt,
    pub meeting: ExactInt,
    pub total: ExactInt,
    pub shards: usize,
    pub elapsed_ms: u128,
}

/// Per-subspace avoidance test, specialized once per census: a packed
/// Gray-code walk for F_2, a projective-representative odometer otherwise.
fn cone_avoider<'a>(
    cone: &'a ConeSpec<'a>,
    field: &'a FieldSpec,
    n: usize,
) -> Box<dyn Fn(&Subspace) -> bool + Sync + 'a> {
    let q = field.q();
    if q == 2 && n <= 63 {
        let fast_rank =
            matches!(cone, ConeSpec::RankBall { n: bn, m: bm, .. } if bn * bm <= 63 && *bn <= 16);
        Box::new(move |s: &Subspace| {
            let mut buf = [0u64; MAX_RANK];
            let rows = pack_basis(s, &mut buf);
            let mut cur = 0u64;
            for idx in 1u64..(1 << rows) {
                cur ^= buf[idx.trailing_zeros() as usize];
                let inside = match cone {
                    ConeSpec::RankBall { n: bn, m: bm, radius } if fast_rank => {
                        f2::matrix_rank_of_flat(cur, *bn, *bm) <= *radius
                    }
                    _ => cone.contains(&f2::unpack(cur, n), field),
                };
                if inside {
                    return false;
                }
            }
            true
        })
    } else {
        Box::new(move |s: &Subspace| {
            let basis: Vec<&[u16]> = s.basis_rows().collect();
            let kdim = basis.len();
            let mut v = vec![0u16; n];
            // projective representatives suffice: cones are scalar-closed
            let mut coeff = vec![0u16; kdim];
            for lead in (0..kdim).rev() {
                coeff[..].fill(0);
                coeff[lead] = 1;
                loop {
                    v.fill(0);
                    for (c, row) in coeff.iter().zip(&basis) {
                        if *c != 0 {
                            for (slot, &x) in v.iter_mut().zip(*row) {
                                *slot = field.add(*slot, field.mul(*c, x));
                            }
                        }
                    }
                    if cone.contains(&v, field) {
                        return false;
                    }
                    // advance digits after the leading 1
                    let mut pos = kdim;
                    loop {
                        if pos == lead + 1 {
                            pos = 0;
                            break;
                        }
                        pos -= 1;
                        coeff[pos] += 1;
                        if (coeff[pos] as u64) < q {
                            break;
                        }
                        coeff[pos] = 0;
                    }
                    if pos == 0 {
                        break;
                    }
                }
            }
            true
        })
    }
}

/// Count the k-subspaces whose nonzero vectors all avoid the cone.
pub fn count_distinguishing_cone(
    cone: &ConeSpec<'_>,
    field: &FieldSpec,
    n: usize,
    k: usize,
    budget: &Budget,
) -> Result<ConeCensus, OracleError> {
    cone.spot_check(field, n)?;
    let start = Instant::now();
    let test = cone_avoider(cone, field, n);
    let (distinguishing, shards) = census_count(field, n, k, budget, |s| test(s))?;
    let total = qbinom(n as u64, k as u64, field.q());
    Ok(ConeCensus {
        meeting: &total - &distinguishing,
        distinguishing,
        total,
        shards,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

/// Materialize the distinguishing subspaces themselves, in shard order.
/// Meant for small result sets (every hit is kept in memory).
pub fn collect_distinguishing_cone(
    cone: &ConeSpec<'_>,
    field: &FieldSpec,
    n: usize,
    k: usize,
    budget: &Budget,
) -> Result<Vec<Subspace>, OracleError> {
    cone.spot_check(field, n)?;
    budget.check_subspaces(&qbinom(n as u64, k as u64, field.q()))?;
    let test = cone_avoider(cone, field, n);
    let shards = pivot_sets(n, k);
    let found: Vec<Vec<Subspace>> = shards
        .par_iter()
        .map(|pivots| {
            let mut hits = Vec::new();
            for s in SubspaceStream::shard(field, n, pivots.clone()) {
                if test(&s) {
                    hits.push(s);
                }
            }
            hits
        })
        .collect();
    Ok(found.into_iter().flatten().collect())
}

/// Direct pair census behind the closed pair-count formula: number of
/// ordered pairs of u-subspaces of F_q^n at each intersection dimension.
pub fn theta_census(
    field: &FieldSpec,
    n: usize,
    u: usize,
    budget: &Budget,
) -> Result<BTreeMap<u64, ExactInt>, OracleError> {
    let per_side = qbinom(n as u64, u as u64, field.q());
    budget.check_subspaces(&(&per_side * &per_side))?;
    let mut all = Vec::new();
    for s in SubspaceStream::all(field, n, u) {
        all.push(s);
    }
    let mut counts: BTreeMap<u64, ExactInt> = BTreeMap::new();
    for a in &all {
        for b in &all {
            *counts.entry(a.meet_dim(b) as u64).or_insert_with(|| int(0)) += int(1);
        }
    }
    Ok(counts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::field_make;
    use crate::qfunc::{ball_size, nu, theta};

    fn f2() -> FieldSpec {
        field_make(2, 1).unwrap()
    }

    fn plane(field: &FieldSpec, rows: &[Vec<u16>]) -> Subspace {
        Subspace::span(field, 5, rows)
    }

    #[test]
    fn worked_spread_family_census() {
        // five pairwise-disjoint planes covering F_2^5 minus 0
        let f = f2();
        let members = spread_planes(&f);
        let fam = FamilySpec::new(f, 5, members, None).unwrap();
        let census = count_common_complements(&fam, 3, &Budget::default()).unwrap();
        assert_eq!(census.complements, int(0));
        assert_eq!(census.intersecting, int(155));
        let profile = intersection_profile(&fam).unwrap();
        assert_eq!(profile.counts().get(&0).unwrap(), &int(20));
        assert_eq!(profile.counts().get(&2).unwrap(), &int(5));
    }

    #[test]
    fn worked_plane_family_census() {
        // all seven planes inside the hyperplane spanned by e0..e2
        let f = f2();
        let e = |i: usize| {
            let mut v = vec![0u16; 5];
            v[i] = 1;
            v
        };
        let mut members = Vec::new();
        let third = Subspace::span(&f, 5, &[e(0), e(1), e(2)]);
        let mut planes = Vec::new();
        crate::gf::enumerate_subspaces(&f, 5, 2, &mut |s: &Subspace| {
            if s.basis_rows().all(|r| third.contains(r)) {
                planes.push(s.clone());
            }
        });
        members.extend(planes);
        assert_eq!(members.len(), 7);
        let fam = FamilySpec::new(f, 5, members, None).unwrap();
        let census = count_common_complements(&fam, 3, &Budget::default()).unwrap();
        assert_eq!(census.intersecting, int(155));
        let profile = intersection_profile(&fam).unwrap();
        assert_eq!(profile.counts().get(&1).unwrap(), &int(42));
        assert_eq!(profile.counts().get(&2).unwrap(), &int(7));
    }

    fn spread_planes(f: &FieldSpec) -> Vec<Subspace> {
        // greedy: first five pairwise-disjoint 2-subspaces in stream order
        let mut members: Vec<Subspace> = Vec::new();
        for s in SubspaceStream::all(&f, 5, 2) {
            if members.iter().all(|m| m.meet_dim(&s) == 0) {
                members.push(s);
                if members.len() == 5 {
                    break;
                }
            }
        }
        members
    }

    #[test]
    fn single_member_complement_count_is_classical() {
        let f = f2();
        let a = plane(&f, &[vec![1, 0, 0, 0, 0], vec![0, 1, 0, 0, 0]]);
        let fam = FamilySpec::new(f, 5, vec![a], None).unwrap();
        let census = count_common_complements(&fam, 3, &Budget::default()).unwrap();
        assert_eq!(census.complements, int(64));
        assert_eq!(census.intersecting, int(91));
    }

    #[test]
    fn intersecting_pair_counts_match_formula() {
        let f = f2();
        // canonical pair at each feasible intersection dimension
        for l in 0..=2usize {
            let a = plane(&f, &[unit(0), unit(1)]);
            let rows: Vec<Vec<u16>> = (0..l)
                .map(unit)
                .chain((0..2 - l).map(|i| unit(2 + i)))
                .collect();
            let b = plane(&f, &rows);
            assert_eq!(a.meet_dim(&b), l);
            let got = count_intersecting_both(&a, &b, 3, &Budget::default()).unwrap();
            assert_eq!(got, nu(5, 3, l as u64, 2).unwrap(), "l = {l}");
        }
    }

    fn unit(i: usize) -> Vec<u16> {
        let mut v = vec![0u16; 5];
        v[i] = 1;
        v
    }

    #[test]
    fn budget_refusal() {
        let f = f2();
        let a = plane(&f, &[unit(0), unit(1)]);
        let fam = FamilySpec::new(f, 5, vec![a], None).unwrap();
        let tight = Budget::with_override(Some(10));
        assert!(matches!(
            count_common_complements(&fam, 3, &tight),
            Err(OracleError::Budget(_))
        ));
    }

    #[test]
    fn cone_trivial_cases() {
        let f = f2();
        let zero_only = ConeSpec::Predicate {
            size: int(1),
            member: &|v: &[u16]| v.iter().all(|&x| x == 0),
        };
        let census =
            count_distinguishing_cone(&zero_only, &f, 4, 2, &Budget::default()).unwrap();
        assert_eq!(census.distinguishing, int(35));
        let everything = ConeSpec::Predicate { size: int(16), member: &|_: &[u16]| true };
        let census =
            count_distinguishing_cone(&everything, &f, 4, 2, &Budget::default()).unwrap();
        assert_eq!(census.distinguishing, int(0));
    }

    #[test]
    fn cone_rank_ball_finds_the_two_mrd_codes() {
        let f = f2();
        let ball = ConeSpec::RankBall { n: 2, m: 2, radius: 1 };
        let census = count_distinguishing_cone(&ball, &f, 4, 2, &Budget::default()).unwrap();
        assert_eq!(census.distinguishing, int(2));
        assert_eq!(census.total, int(35));
    }

    #[test]
    fn cone_union_matches_family_complements() {
        let f = f2();
        let members = spread_planes(&f);
        let fam = FamilySpec::new(f.clone(), 5, members.clone(), None).unwrap();
        let via_family = count_common_complements(&fam, 3, &Budget::default()).unwrap();
        let cone = ConeSpec::UnionOfMembers(&members);
        let via_cone = count_distinguishing_cone(&cone, &f, 5, 3, &Budget::default()).unwrap();
        assert_eq!(via_cone.distinguishing, via_family.complements);
    }

    #[test]
    fn rejects_scalar_open_predicate() {
        let f3 = field_make(3, 1).unwrap();
        // contains v but not 2v: not a cone
        let bad = ConeSpec::Predicate {
            size: int(3),
            member: &|v: &[u16]| v.iter().all(|&x| x <= 1),
        };
        assert!(matches!(
            count_distinguishing_cone(&bad, &f3, 3, 1, &Budget::default()),
            Err(OracleError::Domain(_))
        ));
    }

    #[test]
    fn generic_field_cone_census() {
        let f3 = field_make(3, 1).unwrap();
        // lines of F_3^3 avoiding the rank<=1 ball of 3x1 matrices: none,
        // since every vector of F_3^3 is a 3x1 matrix of rank <= 1
        let ball = ConeSpec::RankBall { n: 3, m: 1, radius: 1 };
        let census = count_distinguishing_cone(&ball, &f3, 3, 1, &Budget::default()).unwrap();
        assert_eq!(census.distinguishing, int(0));
        assert_eq!(census.total, int(13));
        // same over F_3^4 viewed as 2x2 matrices, radius 1: count 2-spaces
        // of invertible matrices
        let ball = ConeSpec::RankBall { n: 2, m: 2, radius: 1 };
        let census = count_distinguishing_cone(&ball, &f3, 4, 2, &Budget::default()).unwrap();
        let expect_ball = ball_size(2, 2, 1, 3).unwrap();
        assert_eq!(expect_ball, int(33));
        assert!(census.distinguishing > int(0));
    }

    #[test]
    fn theta_census_matches_formula() {
        let f = f2();
        let counts = theta_census(&f, 4, 2, &Budget::default()).unwrap();
        for i in 0..=2u64 {
            let expect = theta(4, 2, i, 2).unwrap();
            assert_eq!(counts.get(&i).cloned().unwrap_or_else(|| int(0)), expect, "i = {i}");
        }
    }
}
