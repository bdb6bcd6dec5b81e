//! Independent Ext-dimension oracles for local algebras: a truncated reduced
//! bar complex (exact but exponential, so budget-capped in degree) and a
//! generic minimal-free-resolution syzygy computation that never looks at the
//! explicit resolution formulas it is checking.

use crate::error::AlgError;
use crate::matrix::{Matrix, Span};
use crate::pbw::{left_mult_matrix, AlgElt, AlgRef};

/// dim Ext^n(triv, triv) for n = 0..=nmax from the reduced bar complex.
/// Entries are `None` where the tuple spaces exceed the budget.
pub fn bar_ext_dims(alg: &AlgRef, nmax: usize, budget: usize) -> Result<Vec<Option<usize>>, AlgError> {
    let f = alg.field;
    let d = alg.dim().ok_or_else(|| AlgError::Unsupported("finite algebra required".into()))?;
    let s = d - 1; // augmentation-ideal monomials
    let unit_idx = alg.index_of(&alg.zero_exps());
    // products of ideal basis elements, as coefficient vectors over the ideal
    let mut prod: Vec<Vec<Vec<(usize, u64)>>> = vec![vec![Vec::new(); s]; s];
    let ideal_idx = |k: usize| if k < unit_idx { k } else { k - 1 };
    let full_idx = |k: usize| if k < unit_idx { k } else { k + 1 };
    for a in 0..s {
        let ma = AlgElt::monomial(alg, alg.monomial_at(full_idx(a)), 1);
        for b in 0..s {
            let mb = AlgElt::monomial(alg, alg.monomial_at(full_idx(b)), 1);
            let pr = ma.mul(&mb);
            let mut terms = Vec::new();
            for (e, &c) in &pr.terms {
                let k = alg.index_of(e);
                assert_ne!(k, unit_idx, "ideal not closed under products");
                terms.push((ideal_idx(k), c));
            }
            prod[a][b] = terms;
        }
    }
    // rank of delta^n : C^n -> C^{n+1}; C^0 = scalars with delta^0 = 0
    let mut ranks: Vec<Option<usize>> = vec![Some(0)];
    let pow = |e: u32| -> Option<usize> {
        let mut acc = 1usize;
        for _ in 0..e {
            acc = acc.checked_mul(s)?;
            if acc > budget {
                return None;
            }
        }
        Some(acc)
    };
    for n in 1..=nmax {
        // delta^n has s^{n+1} rows and s^n columns
        let (Some(rows), Some(cols)) = (pow(n as u32 + 1), pow(n as u32)) else {
            ranks.push(None);
            continue;
        };
        let mut span = Span::new(f, cols);
        let mut tuple = vec![0usize; n + 1];
        for code in 0..rows {
            let mut c = code;
            for t in tuple.iter_mut() {
                *t = c % s;
                c /= s;
            }
            // row: sum_j (-1)^j f(merge_j)
            let mut row = vec![0u64; cols];
            for j in 0..n {
                let sign = if j % 2 == 0 { f.p() - 1 } else { 1 }; // (-1)^{j+1}
                for &(m, coef) in &prod[tuple[j]][tuple[j + 1]] {
                    // column index of the merged tuple
                    let mut idx = 0usize;
                    let mut stride = 1usize;
                    for (t, &v) in tuple
                        .iter()
                        .enumerate()
                        .filter(|&(t, _)| t != j + 1)
                        .map(|(t, v)| (t, v))
                    {
                        let digit = if t == j { m } else { v };
                        idx += digit * stride;
                        stride *= s;
                    }
                    row[idx] = f.add(row[idx], f.mul(sign, coef));
                }
            }
            span.insert(&row);
        }
        ranks.push(Some(span.rank()));
    }
    // dim Ext^n = s^n - rank d^n - rank d^{n-1}
    let mut out = Vec::new();
    for n in 0..=nmax {
        if n == 0 {
            out.push(Some(1));
            continue;
        }
        let dim_cn = pow(n as u32);
        let rn = ranks.get(n).copied().flatten();
        let rprev = ranks.get(n - 1).copied().flatten();
        out.push(match (dim_cn, rn, rprev) {
            (Some(dc), Some(a), Some(b)) => Some(dc - a - b),
            _ => None,
        });
    }
    Ok(out)
}

/// Minimal free resolution ranks of the trivial module over a local algebra
/// (every non-unit basis monomial nilpotent). This is the generic syzygy
/// computation: kernels and minimal generators only.
pub fn syzygy_ranks(alg: &AlgRef, nmax: usize) -> Result<Vec<usize>, AlgError> {
    let f = alg.field;
    let d = alg.dim().ok_or_else(|| AlgError::Unsupported("finite algebra required".into()))?;
    // left multiplication by each basis monomial
    let mono_mult: Vec<Matrix> = (0..d)
        .map(|k| left_mult_matrix(alg, &AlgElt::monomial(alg, alg.monomial_at(k), 1)))
        .collect();
    let gen_mults: Vec<&Matrix> = (0..alg.ngens())
        .map(|i| {
            let mut e = alg.zero_exps();
            e[i] = 1;
            &mono_mult[alg.index_of(&e)]
        })
        .collect();
    let unit_idx = alg.index_of(&alg.zero_exps());
    let mut ranks = vec![1usize];
    // current syzygy submodule: vectors in A^r, starting with the ideal in A
    let mut r = 1usize;
    let mut syz: Vec<Vec<u64>> = (0..d)
        .filter(|&k| k != unit_idx)
        .map(|k| {
            let mut v = vec![0u64; d];
            v[k] = 1;
            v
        })
        .collect();
    for _ in 1..=nmax {
        if syz.is_empty() {
            ranks.push(0);
            continue;
        }
        // span of the syzygy module and of (aug ideal) * it
        let dim_free = d * r;
        let mut total = Span::new(f, dim_free);
        for v in &syz {
            total.insert(v);
        }
        let mut radpart = Span::new(f, dim_free);
        for v in &syz {
            for g in &gen_mults {
                let mut w = vec![0u64; dim_free];
                for blk in 0..r {
                    let seg = &v[blk * d..(blk + 1) * d];
                    let img = g.mul_vec(seg);
                    for (i, &x) in img.iter().enumerate() {
                        w[blk * d + i] = x;
                    }
                }
                radpart.insert(&w);
            }
        }
        let m = total.rank() - radpart.rank();
        ranks.push(m);
        // pick m generators: basis vectors of the total span outside radpart
        let mut gens: Vec<Vec<u64>> = Vec::new();
        let mut grown = radpart;
        for v in total.basis() {
            if gens.len() == m {
                break;
            }
            if !grown.contains(v) {
                grown.insert(v);
                gens.push(v.clone());
                // saturate with multiples so later picks stay minimal
                let mut queue = vec![v.clone()];
                while let Some(w) = queue.pop() {
                    for g in &gen_mults {
                        let mut u = vec![0u64; dim_free];
                        for blk in 0..r {
                            let seg = &w[blk * d..(blk + 1) * d];
                            let img = g.mul_vec(seg);
                            for (i, &x) in img.iter().enumerate() {
                                u[blk * d + i] = x;
                            }
                        }
                        if grown.insert(&u) {
                            queue.push(u);
                        }
                    }
                }
            }
        }
        assert_eq!(gens.len(), m, "minimal generator selection failed");
        // differential A^m -> A^r, then its kernel is the next syzygy module
        let mut dmat = Matrix::zeros(f, d * r, d * m);
        for (j, v) in gens.iter().enumerate() {
            for b in 0..d {
                // column (j, monomial b) = b . v
                let mut w = vec![0u64; d * r];
                for blk in 0..r {
                    let seg = &v[blk * d..(blk + 1) * d];
                    let img = mono_mult[b].mul_vec(seg);
                    for (i, &x) in img.iter().enumerate() {
                        w[blk * d + i] = x;
                    }
                }
                dmat.set_col(j * d + b, &w);
            }
        }
        syz = dmat.kernel_basis();
        r = m;
    }
    Ok(ranks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::koszul::binomial;
    use crate::pbw::build_qci;

    #[test]
    fn bar_matches_binomials_for_small_qci() {
        let q = build_qci(3, &[2, 2], &[vec![0, 2], vec![]]).unwrap();
        let dims = bar_ext_dims(&q, 6, 1 << 20).unwrap();
        for (n, d) in dims.iter().enumerate() {
            assert_eq!(d.unwrap(), n + 1, "degree {n}");
        }
    }

    #[test]
    fn syzygy_matches_binomials() {
        let q = build_qci(5, &[3, 2], &[vec![0, 2], vec![]]).unwrap();
        let ranks = syzygy_ranks(&q, 6).unwrap();
        assert_eq!(ranks, vec![1, 2, 3, 4, 5, 6, 7]);
        let q3 = build_qci(3, &[2, 2, 3], &[vec![0, 1, 2], vec![0, 0, 2], vec![]]).unwrap();
        let ranks3 = syzygy_ranks(&q3, 5).unwrap();
        let expect: Vec<usize> = (0..=5).map(|n| binomial(n + 2, 2)).collect();
        assert_eq!(ranks3, expect);
    }

    #[test]
    fn bar_budget_caps_cleanly() {
        let q = build_qci(3, &[2, 2, 2], &[vec![0, 2, 2], vec![0, 0, 2], vec![]]).unwrap();
        let dims = bar_ext_dims(&q, 4, 4000).unwrap();
        assert_eq!(dims[1], Some(3));
        assert_eq!(dims[2], Some(6));
        assert!(dims[4].is_none()); // 7^5 rows over budget
    }
}
