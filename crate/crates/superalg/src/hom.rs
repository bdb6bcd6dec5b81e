//! Hom spaces between modules: bases of intertwiner matrices.
//!
//! The solver intersects the kernels of T -> T rho_M(x) - rho_N(x) T one
//! generator at a time. Generators whose action is diagonal on both sides
//! (h, and g on smash presets) are processed first with a combinatorial
//! kernel, which keeps the elimination sizes small for everything else.

use crate::matrix::{Matrix, Span};
use crate::module::Module;

/// Basis of Hom(M, N): matrices T (dim N x dim M) with
/// T rho_M(x) = rho_N(x) T for every generator x.
pub fn hom_basis(m: &Module, n: &Module) -> Vec<Matrix> {
    assert!(m.same_algebra(n), "hom requires a common algebra");
    let f = m.alg.field;
    let (dm, dn) = (m.dim, n.dim);
    if dm == 0 || dn == 0 {
        return Vec::new();
    }
    let ngens = m.alg.ngens();
    let mut order: Vec<usize> = (0..ngens).collect();
    order.sort_by_key(|&i| !(m.action[i].is_diagonal() && n.action[i].is_diagonal()));

    // Current basis of candidate maps, flattened row-major (dn x dm).
    let mut basis: Vec<Vec<u64>> = Vec::new();
    let mut started = false;
    for &gi in &order {
        let am = &m.action[gi];
        let an = &n.action[gi];
        if !started {
            if am.is_diagonal() && an.is_diagonal() {
                // T[r][c] must vanish unless the diagonal weights agree.
                for r in 0..dn {
                    for c in 0..dm {
                        if an[(r, r)] == am[(c, c)] {
                            let mut v = vec![0u64; dn * dm];
                            v[r * dm + c] = 1;
                            basis.push(v);
                        }
                    }
                }
            } else {
                basis = (0..dn * dm)
                    .map(|k| {
                        let mut v = vec![0u64; dn * dm];
                        v[k] = 1;
                        v
                    })
                    .collect();
            }
            started = true;
            if am.is_diagonal() && an.is_diagonal() {
                continue;
            }
            // fall through: the full space still needs this generator's cut
        }
        if basis.is_empty() {
            return Vec::new();
        }
        // Constraint image: L(T) = T am - an T, flattened.
        let rows: Vec<Vec<u64>> = basis
            .iter()
            .map(|t| {
                let tm = unflatten(f, t, dn, dm);
                let img = tm.mul(am).sub(&an.mul(&tm));
                flatten(&img)
            })
            .collect();
        // kernel of the coefficient matrix (constraints as columns)
        let mut cons = Matrix::zeros(f, dn * dm, basis.len());
        for (j, r) in rows.iter().enumerate() {
            cons.set_col(j, r);
        }
        let kern = cons.kernel_basis();
        let mut next = Vec::with_capacity(kern.len());
        for coeffs in kern {
            let mut v = vec![0u64; dn * dm];
            for (j, &c) in coeffs.iter().enumerate() {
                if c != 0 {
                    for (x, &b) in v.iter_mut().zip(&basis[j]) {
                        *x = (*x + c * b) % f.p();
                    }
                }
            }
            next.push(v);
        }
        basis = next;
    }
    // Echelonize for determinism.
    let mut span = Span::new(f, dn * dm);
    for v in &basis {
        span.insert(v);
    }
    span.basis()
        .iter()
        .map(|v| unflatten(f, v, dn, dm))
        .collect()
}

pub fn flatten(m: &Matrix) -> Vec<u64> {
    let mut v = Vec::with_capacity(m.rows * m.cols);
    for i in 0..m.rows {
        v.extend_from_slice(m.row(i));
    }
    v
}

pub fn unflatten(f: crate::field::Fp, v: &[u64], rows: usize, cols: usize) -> Matrix {
    Matrix::from_fn(f, rows, cols, |i, j| v[i * cols + j])
}

/// dim Hom(M, N).
pub fn hom_dim(m: &Module, n: &Module) -> usize {
    hom_basis(m, n).len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{make_module, Family, FamilyParams};
    use crate::pbw::osp12;

    #[test]
    fn schur_for_simples_p3() {
        let a = osp12(3).unwrap();
        let vs: Vec<_> = (0..3)
            .map(|l| make_module(&a, FamilyParams::simple(Family::V, l)).unwrap())
            .collect();
        for (i, m) in vs.iter().enumerate() {
            for (j, n) in vs.iter().enumerate() {
                let d = hom_dim(m, n);
                assert_eq!(d, usize::from(i == j), "hom(V^{i}, V^{j})");
            }
        }
    }

    #[test]
    fn middle_verma_has_two_dim_end() {
        // End(W^{(p-1)/2}) has dimension 2.
        let a = osp12(3).unwrap();
        let w = make_module(&a, FamilyParams::simple(Family::W, 1)).unwrap();
        assert_eq!(hom_dim(&w, &w), 2);
        let wt = make_module(&a, FamilyParams::simple(Family::Wt, 1)).unwrap();
        assert_eq!(hom_dim(&wt, &wt), 2);
        // other Vermas are bricks
        let w0 = make_module(&a, FamilyParams::simple(Family::W, 0)).unwrap();
        assert_eq!(hom_dim(&w0, &w0), 1);
    }

    #[test]
    fn hom_elements_intertwine() {
        let a = osp12(3).unwrap();
        let w = make_module(&a, FamilyParams::simple(Family::W, 1)).unwrap();
        let p = make_module(&a, FamilyParams::simple(Family::P, 1)).unwrap();
        for t in hom_basis(&w, &p) {
            for gi in 0..a.ngens() {
                assert_eq!(t.mul(&w.action[gi]), p.action[gi].mul(&t));
            }
        }
    }

    #[test]
    fn hom_to_zero_module() {
        let a = osp12(3).unwrap();
        let v = make_module(&a, FamilyParams::simple(Family::V, 1)).unwrap();
        let zero = crate::module::Module::new(
            &a,
            (0..a.ngens()).map(|_| Matrix::zeros(a.field, 0, 0)).collect(),
            vec![],
            "0",
        );
        assert_eq!(hom_dim(&v, &zero), 0);
    }
}
