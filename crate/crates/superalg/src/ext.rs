//! Ext dimensions from minimal resolutions, and the parity-involution action
//! on Ext computed through semilinear lifts along the resolution.

use crate::error::AlgError;
use crate::hom::{flatten, hom_basis};
use crate::matrix::{Matrix, SolveResult};
use crate::module::Module;
use crate::resolution::{minimal_resolution, Resolution};

/// dim Ext^n(M, N) computed as homology of Hom(P_., N).
pub fn ext_dim(m: &Module, n_mod: &Module, n: usize) -> Result<usize, AlgError> {
    let res = minimal_resolution(m, n + 1)?;
    ext_dim_from(&res, n_mod, n)
}

pub fn ext_dim_from(res: &Resolution, n_mod: &Module, n: usize) -> Result<usize, AlgError> {
    if n + 1 > res.diffs.len() {
        return Err(AlgError::ParamOutOfRange(format!(
            "resolution too short for Ext^{n}"
        )));
    }
    let hom_n = hom_basis(&res.covers[n], n_mod);
    let delta_out = hom_complex_map(&hom_n, &hom_basis(&res.covers[n + 1], n_mod), &res.diffs[n], n_mod)?;
    let rank_out = delta_out.rank();
    let rank_in = if n == 0 {
        0
    } else {
        let hom_prev = hom_basis(&res.covers[n - 1], n_mod);
        hom_complex_map(&hom_prev, &hom_n, &res.diffs[n - 1], n_mod)?.rank()
    };
    Ok(hom_n.len() - rank_out - rank_in)
}

/// Matrix of f -> f o d from Hom(P_{k}, N) to Hom(P_{k+1}, N) in the given
/// bases.
fn hom_complex_map(
    src_basis: &[Matrix],
    dst_basis: &[Matrix],
    d: &Matrix,
    n_mod: &Module,
) -> Result<Matrix, AlgError> {
    let f = n_mod.alg.field;
    let dst_flat_len = n_mod.dim * d.cols;
    let mut dst_mat = Matrix::zeros(f, dst_flat_len, dst_basis.len());
    for (j, b) in dst_basis.iter().enumerate() {
        dst_mat.set_col(j, &flatten(b));
    }
    let mut out = Matrix::zeros(f, dst_basis.len(), src_basis.len());
    for (j, s) in src_basis.iter().enumerate() {
        let comp = s.mul(d);
        let rhs = Matrix::from_fn(f, dst_flat_len, 1, |i, _| flatten(&comp)[i]);
        match dst_mat.solve(&rhs) {
            SolveResult::Solution { particular, .. } => {
                for i in 0..dst_basis.len() {
                    out[(i, j)] = particular[(i, 0)];
                }
            }
            _ => {
                return Err(AlgError::Internal(
                    "composite hom not expressible in hom basis".into(),
                ))
            }
        }
    }
    Ok(out)
}

/// The parity automorphism twist of a module over a preset (E -> -E, F -> -F,
/// h -> h; e -> e on sl2 even generators). Odd generators flip sign.
pub fn parity_twist(m: &Module) -> Module {
    let f = m.alg.field;
    let action = m
        .alg
        .gens
        .iter()
        .zip(&m.action)
        .map(|(g, a)| if g.parity == 1 { a.scale(f.p() - 1) } else { a.clone() })
        .collect();
    Module::new(&m.alg, action, m.parity.clone(), format!("tw({})", m.label))
}

/// Degree-wise data for the parity action on Ext^*(triv, triv):
/// (dim Ext^n, dim of the +1 eigenspace).
pub fn parity_action_on_ext(
    m: &Module,
    depth: usize,
) -> Result<Vec<(usize, usize)>, AlgError> {
    let res = minimal_resolution(m, depth)?;
    let f = m.alg.field;
    let triv = Module::trivial(&m.alg);
    // semilinear lifts: A-linear maps Phi_n : P_n -> twist(P_n) with
    // d o Phi_n = Phi_{n-1} o d and aug o Phi_0 = aug (trivial target twist).
    let mut lifts: Vec<Matrix> = Vec::new();
    for n in 0..=depth {
        let twisted = parity_twist(&res.covers[n]);
        let homs = hom_basis(&res.covers[n], &twisted);
        if res.covers[n].dim == 0 {
            lifts.push(Matrix::zeros(f, 0, 0));
            continue;
        }
        // constraint: target o Phi = rhs
        let (constraint, rhs) = if n == 0 {
            (res.aug.clone(), res.aug.clone())
        } else {
            (res.diffs[n - 1].clone(), lifts[n - 1].mul(&res.diffs[n - 1]))
        };
        // solve for coefficients of Phi in the hom basis
        let rows = constraint.rows * res.covers[n].dim;
        let mut sys = Matrix::zeros(f, rows, homs.len());
        for (j, h) in homs.iter().enumerate() {
            sys.set_col(j, &flatten(&constraint.mul(h)));
        }
        let target = Matrix::from_fn(f, rows, 1, |i, _| flatten(&rhs)[i]);
        let phi = match sys.solve(&target) {
            SolveResult::Solution { particular, .. } => {
                let mut acc = Matrix::zeros(f, res.covers[n].dim, res.covers[n].dim);
                for (j, h) in homs.iter().enumerate() {
                    let c = particular[(j, 0)];
                    if c != 0 {
                        acc = acc.add(&h.scale(c));
                    }
                }
                acc
            }
            _ => return Err(AlgError::Internal("no semilinear lift found".into())),
        };
        lifts.push(phi);
    }
    // action on Ext^n = Hom(P_n, triv): phi -> phi o Phi_n
    let mut out = Vec::new();
    for n in 0..=depth {
        let hom_n = hom_basis(&res.covers[n], &triv);
        let r = hom_n.len();
        if r == 0 {
            out.push((0, 0));
            continue;
        }
        let mut mat = Matrix::zeros(f, r, r);
        // express each phi_i o Phi_n in the hom basis
        let flat_len = res.covers[n].dim;
        let mut basis_mat = Matrix::zeros(f, flat_len, r);
        for (j, h) in hom_n.iter().enumerate() {
            basis_mat.set_col(j, &flatten(h));
        }
        for (j, h) in hom_n.iter().enumerate() {
            let comp = h.mul(&lifts[n]);
            let rhs = Matrix::from_fn(f, flat_len, 1, |i, _| flatten(&comp)[i]);
            match basis_mat.solve(&rhs) {
                SolveResult::Solution { particular, .. } => {
                    for i in 0..r {
                        mat[(i, j)] = particular[(i, 0)];
                    }
                }
                _ => return Err(AlgError::Internal("Ext action outside basis".into())),
            }
        }
        // +1 eigenspace: kernel of (mat - I)
        let mut shifted = mat.clone();
        for i in 0..r {
            shifted[(i, i)] = f.sub(shifted[(i, i)], 1);
        }
        let fixed = shifted.kernel_basis().len();
        // the action must be an involution on Ext
        let sq = mat.mul(&mat);
        if sq != Matrix::identity(f, r) {
            return Err(AlgError::Internal(format!(
                "parity action on Ext^{n} is not an involution"
            )));
        }
        out.push((r, fixed));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{make_module, Family, FamilyParams};
    use crate::pbw::osp12;

    #[test]
    fn ext0_is_hom() {
        let a = osp12(3).unwrap();
        let v = make_module(&a, FamilyParams::simple(Family::V, 1)).unwrap();
        assert_eq!(ext_dim(&v, &v, 0).unwrap(), 1);
        let w = make_module(&a, FamilyParams::simple(Family::W, 1)).unwrap();
        assert_eq!(ext_dim(&w, &w, 0).unwrap(), 2);
    }

    #[test]
    fn ext1_between_linked_simples() {
        // Ext^1(V^0, V^2) = 2 and Ext^1(V^0, V^0) = 0 at p = 3.
        let a = osp12(3).unwrap();
        let v0 = make_module(&a, FamilyParams::simple(Family::V, 0)).unwrap();
        let v2 = make_module(&a, FamilyParams::simple(Family::V, 2)).unwrap();
        assert_eq!(ext_dim(&v0, &v2, 1).unwrap(), 2);
        assert_eq!(ext_dim(&v0, &v0, 1).unwrap(), 0);
    }
}
