use crate::error::{DomainError, DomainResult};
use crate::gf::{
    enumerate_subspaces, field_make, matrix_space_of_column_space, FieldSpec, Subspace,
};
use serde::Deserialize;
use serde_json::json;
use std::collections::HashSet;

/// A finite family of equal-dimensional subspaces, the object whose common
/// complements get counted.
#[derive(Debug, Clone)]
pub struct FamilySpec {
    field: FieldSpec,
    n_amb: usize,
    members: Vec<Subspace>,
    provenance: Option<String>,
}

impl FamilySpec {
    pub fn new(
        field: FieldSpec,
        n_amb: usize,
        members: Vec<Subspace>,
        provenance: Option<String>,
    ) -> DomainResult<Self> {
        let err = |msg: String| Err(DomainError::new("family", msg));
        if members.is_empty() {
            return err("family must be non-empty".into());
        }
        let dim = members[0].dim();
        let mut seen = HashSet::new();
        for m in &members {
            if m.field() != &field || m.ambient() != n_amb {
                return err("member ambient space mismatch".into());
            }
            if m.dim() != dim {
                return err(format!("member dimensions differ: {} vs {dim}", m.dim()));
            }
            if !seen.insert(m.clone()) {
                return err("members must be distinct".into());
            }
        }
        Ok(FamilySpec { field, n_amb, members, provenance })
    }

    /// The family whose common complements are exactly the n x m MRD codes
    /// of minimum distance d: lifts of all (d-1)-subspaces of F_q^n to
    /// matrix spaces. For d = 1 this degenerates to the zero subspace.
    pub fn mrd_family(n: usize, m: usize, d: usize, field: FieldSpec) -> DomainResult<Self> {
        if n < 2 || m < n || d == 0 || d > n {
            return Err(DomainError::new(
                "family",
                format!("need 1 <= d <= n <= m, n >= 2; got n = {n}, m = {m}, d = {d}"),
            ));
        }
        let mut members = Vec::new();
        enumerate_subspaces(&field, n, d - 1, &mut |u: &Subspace| {
            members.push(matrix_space_of_column_space(u, m));
        });
        FamilySpec::new(field, n * m, members, Some(format!("mrd-family({n},{m},{d})")))
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn ambient(&self) -> usize {
        self.n_amb
    }

    pub fn members(&self) -> &[Subspace] {
        &self.members
    }

    pub fn member_dim(&self) -> usize {
        self.members[0].dim()
    }

    pub fn provenance(&self) -> Option<&str> {
        self.provenance.as_deref()
    }

    pub fn from_json(text: &str) -> DomainResult<Self> {
        #[derive(Deserialize)]
        struct Doc {
            q: u64,
            p: u64,
            e: u32,
            #[serde(rename = "N")]
            n_amb: usize,
            members: Vec<Vec<Vec<u16>>>,
        }
        let doc: Doc = serde_json::from_str(text)
            .map_err(|e| DomainError::new("family", format!("bad JSON: {e}")))?;
        let field = field_make(doc.p, doc.e)
            .map_err(|e| DomainError::new("family", e.to_string()))?;
        if field.q() != doc.q {
            return Err(DomainError::new(
                "family",
                format!("q = {} does not match p^e = {}", doc.q, field.q()),
            ));
        }
        let members = doc
            .members
            .iter()
            .map(|rows| {
                if rows.iter().any(|r| r.len() != doc.n_amb) {
                    return Err(DomainError::new("family", "member row length != N"));
                }
                Ok(Subspace::span(&field, doc.n_amb, rows))
            })
            .collect::<DomainResult<Vec<_>>>()?;
        FamilySpec::new(field, doc.n_amb, members, None)
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "q": self.field.q(),
            "p": self.field.p(),
            "e": self.field.e(),
            "N": self.n_amb,
            "members": self.members.iter()
                .map(|s| s.basis_rows().collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        })
    }
}
