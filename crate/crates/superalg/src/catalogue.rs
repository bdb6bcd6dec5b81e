//! The catalogue of indecomposables over u(osp(1|2)): projectives, string
//! families in both orientations, and one tube representative per parameter
//! class, with the parity-twist doubling for the supermodule listing.

use crate::error::AlgError;
use crate::families::{expected_dim, Family, FamilyParams};
use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct CatalogueRow {
    pub family: String,
    pub lambda: u64,
    pub n: usize,
    /// tube class parameter s1*s2, when applicable
    pub class: Option<u64>,
    pub dim: usize,
    pub label: String,
}

/// All catalogue rows for the given prime up to string/tube length n_max.
/// Simples appear as the length-zero string modules.
pub fn catalogue_rows(p: u64, n_max: usize) -> Vec<CatalogueRow> {
    let mut rows = Vec::new();
    let mut push = |params: FamilyParams, class: Option<u64>| {
        rows.push(CatalogueRow {
            family: format!("{:?}", params.family),
            lambda: params.lambda,
            n: params.n,
            class,
            dim: expected_dim(p, &params),
            label: params.label(),
        });
    };
    for lam in 0..p {
        push(FamilyParams::simple(Family::P, lam), None);
        for n in 0..=n_max {
            push(FamilyParams::string(Family::Vn, lam, n), None);
            if n > 0 {
                push(FamilyParams::string(Family::Vtn, lam, n), None);
            }
        }
        for n in 1..=n_max {
            push(FamilyParams::string(Family::Wn, lam, n), None);
            push(FamilyParams::string(Family::Wtn, lam, n), None);
            for c in 1..p {
                // one representative per class: s = (1, c)
                push(FamilyParams::tube(Family::T, lam, (1, c), n), Some(c));
            }
        }
    }
    rows
}

/// The parameters of every catalogue member with the given dimension, used
/// to match decomposition output against the classification.
pub fn members_of_dim(p: u64, dim: usize, n_max: usize) -> Vec<FamilyParams> {
    let mut out = Vec::new();
    for lam in 0..p {
        let mut candidates = vec![
            FamilyParams::simple(Family::V, lam),
            FamilyParams::simple(Family::W, lam),
            FamilyParams::simple(Family::Wt, lam),
            FamilyParams::simple(Family::P, lam),
        ];
        for n in 1..=n_max {
            candidates.push(FamilyParams::string(Family::Vn, lam, n));
            candidates.push(FamilyParams::string(Family::Vtn, lam, n));
            candidates.push(FamilyParams::string(Family::Wn, lam, n));
            candidates.push(FamilyParams::string(Family::Wtn, lam, n));
            for c in 1..p {
                candidates.push(FamilyParams::tube(Family::T, lam, (1, c), n));
            }
        }
        out.extend(candidates.into_iter().filter(|c| expected_dim(p, c) == dim));
    }
    out
}

/// Markdown table of the catalogue, with the parity-twist doubling column.
pub fn catalogue_markdown(p: u64, n_max: usize) -> String {
    let mut out = format!(
        "# indecomposables over u(osp(1|2)) at p = {p} (lengths <= {n_max})\n\n\
         Each row also stands for its parity twist in the supermodule listing.\n\n\
         | module | dim | tube class |\n|---|---|---|\n"
    );
    for r in catalogue_rows(p, n_max) {
        out.push_str(&format!(
            "| {} | {} | {} |\n",
            r.label,
            r.dim,
            r.class.map(|c| c.to_string()).unwrap_or_else(|| "-".into())
        ));
    }
    out
}

pub fn catalogue_json(p: u64, n_max: usize) -> Result<String, AlgError> {
    serde_json::to_string_pretty(&catalogue_rows(p, n_max))
        .map_err(|e| AlgError::Internal(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn row_counts_and_dims() {
        let rows = catalogue_rows(3, 1);
        // per lambda: P, V(0), V(1), V~(1), W(1), W~(1), T(1,c) x2 = 8 rows
        assert_eq!(rows.len(), 3 * 8);
        // with n_max 0: simples and projectives only
        let rows0 = catalogue_rows(3, 0);
        assert_eq!(rows0.len(), 3 * 2);
        // dims column at p=5: V gives 1,3,5,7,9 and P is always 20
        let rows5 = catalogue_rows(5, 0);
        let mut vdims: Vec<usize> = rows5
            .iter()
            .filter(|r| r.family == "Vn")
            .map(|r| r.dim)
            .collect();
        vdims.sort();
        assert_eq!(vdims, vec![1, 3, 5, 7, 9]);
        assert!(rows5.iter().filter(|r| r.family == "P").all(|r| r.dim == 20));
    }
}
