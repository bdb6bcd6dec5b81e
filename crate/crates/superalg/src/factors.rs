//! Simple-module catalogues per algebra and Jordan-Holder multisets by
//! iterated socle peeling.

use crate::error::AlgError;
use crate::families::{make_module, Family, FamilyParams};
use crate::hom::hom_basis;
use crate::matrix::Span;
use crate::module::{weight_refine, Module};
use crate::pbw::{AlgRef, AlgebraKind};
use std::collections::BTreeMap;

/// The simple modules of a preset algebra, in a fixed enumeration order.
pub fn simples(alg: &AlgRef) -> Result<Vec<Module>, AlgError> {
    let p = alg.field.p();
    match alg.kind {
        AlgebraKind::Sl2 => (0..p)
            .map(|l| make_module(alg, FamilyParams::simple(Family::V0, l)))
            .collect(),
        AlgebraKind::Osp12 => (0..p)
            .map(|l| make_module(alg, FamilyParams::simple(Family::V, l)))
            .collect(),
        AlgebraKind::Sl2Smash | AlgebraKind::Osp12Smash => {
            let base = base_preset(alg)?;
            let mut out = Vec::new();
            for l in 0..p {
                let fam = if alg.kind == AlgebraKind::Sl2Smash { Family::V0 } else { Family::V };
                let v = make_module(&base, FamilyParams::simple(fam, l))?;
                out.push(v.to_smash(alg)?);
                let mut pi = v.parity_change().to_smash(alg)?;
                pi.label = format!("Pi({})", out.last().unwrap().label);
                out.push(pi);
            }
            Ok(out)
        }
        AlgebraKind::Qci | AlgebraKind::Graded => Ok(vec![Module::trivial(alg)]),
        AlgebraKind::Enveloping => Err(AlgError::Unsupported(
            "no simple catalogue for untruncated algebras".into(),
        )),
    }
}

/// Reconstruct the base preset of a smash algebra.
pub fn base_preset(alg: &AlgRef) -> Result<AlgRef, AlgError> {
    let p = alg.field.p();
    match alg.kind {
        AlgebraKind::Sl2Smash | AlgebraKind::Sl2 => crate::pbw::sl2(p),
        AlgebraKind::Osp12Smash | AlgebraKind::Osp12 => crate::pbw::osp12(p),
        _ => Err(AlgError::Unsupported("not a smash/preset algebra".into())),
    }
}

/// The socle of M: the sum of the images of all maps from simples.
pub fn socle_basis(m: &Module, simples: &[Module]) -> Vec<Vec<u64>> {
    let f = m.alg.field;
    let mut span = Span::new(f, m.dim);
    for s in simples {
        for h in hom_basis(s, m) {
            for j in 0..h.cols {
                span.insert(&h.col(j));
            }
        }
    }
    weight_refine(m, span.basis())
}

/// Composition-factor multiset, keyed by the simple's index in `simples`.
pub fn composition_factors(m: &Module, simples: &[Module]) -> BTreeMap<usize, usize> {
    let mut out = BTreeMap::new();
    let mut cur = m.clone();
    let mut guard = 0;
    while cur.dim > 0 {
        guard += 1;
        assert!(guard <= m.dim + 1, "socle peeling failed to terminate");
        let mut found = 0;
        for (i, s) in simples.iter().enumerate() {
            let mult = hom_basis(s, &cur).len();
            if mult > 0 {
                *out.entry(i).or_insert(0) += mult;
                found += mult * s.dim;
            }
        }
        assert!(found > 0, "socle of a nonzero module must be nonzero");
        let soc = socle_basis(&cur, simples);
        assert_eq!(soc.len(), found, "socle dimension mismatch");
        let (q, _) = cur.quotient(&soc, &format!("{}/soc", cur.label));
        cur = q;
    }
    out
}

/// Composition factors keyed by label, for reporting.
pub fn composition_factor_labels(m: &Module, simples: &[Module]) -> BTreeMap<String, usize> {
    composition_factors(m, simples)
        .into_iter()
        .map(|(i, k)| (simples[i].label.clone(), k))
        .collect()
}

/// Head multiplicities: dim Hom(M, S_i) for each simple (all simples here are
/// bricks, so no division by End dims is needed).
pub fn head_multiplicities(m: &Module, simples: &[Module]) -> Vec<usize> {
    simples.iter().map(|s| hom_basis(m, s).len()).collect()
}

/// Basis of rad(M) = the common kernel of all maps to simples.
pub fn radical_basis(m: &Module, simples: &[Module]) -> Vec<Vec<u64>> {
    let f = m.alg.field;
    let mut rows: Vec<Vec<u64>> = Vec::new();
    for s in simples {
        for h in hom_basis(m, s) {
            for i in 0..h.rows {
                rows.push(h.row(i).to_vec());
            }
        }
    }
    if rows.is_empty() {
        return (0..m.dim)
            .map(|i| {
                let mut v = vec![0u64; m.dim];
                v[i] = 1;
                v
            })
            .collect();
    }
    let mat = crate::matrix::Matrix::from_rows(f, &rows);
    weight_refine(m, &mat.kernel_basis())
}

/// Simplicity by spinning: every nonzero basis vector generates the module.
pub fn is_simple_by_spinning(m: &Module) -> bool {
    if m.dim == 0 {
        return false;
    }
    for start in 0..m.dim {
        let mut v = vec![0u64; m.dim];
        v[start] = 1;
        let mut span = Span::new(m.alg.field, m.dim);
        span.insert(&v);
        let mut queue = vec![v];
        while let Some(w) = queue.pop() {
            for a in &m.action {
                let u = a.mul_vec(&w);
                if span.insert(&u) {
                    queue.push(u);
                }
            }
        }
        if span.rank() != m.dim {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pbw::{osp12, sl2};

    #[test]
    fn osp_simples_are_simple() {
        let a = osp12(3).unwrap();
        for s in simples(&a).unwrap() {
            assert!(is_simple_by_spinning(&s), "{}", s.label);
        }
    }

    #[test]
    fn projective_factors_p3() {
        let a = osp12(3).unwrap();
        let ss = simples(&a).unwrap();
        // P^0 at p=3: factors {V^0 x2, V^2 x2}
        let p0 = make_module(&a, FamilyParams::simple(Family::P, 0)).unwrap();
        let f = composition_factor_labels(&p0, &ss);
        assert_eq!(f.get("V^0"), Some(&2));
        assert_eq!(f.get("V^2"), Some(&2));
        // P^1: {V^1 x4}
        let p1 = make_module(&a, FamilyParams::simple(Family::P, 1)).unwrap();
        let f1 = composition_factor_labels(&p1, &ss);
        assert_eq!(f1.get("V^1"), Some(&4));
    }

    #[test]
    fn verma_factors() {
        let a = osp12(5).unwrap();
        let ss = simples(&a).unwrap();
        for lam in 0..5u64 {
            let w = make_module(&a, FamilyParams::simple(Family::W, lam)).unwrap();
            let f = composition_factor_labels(&w, &ss);
            if lam == 2 {
                assert_eq!(f.get("V^2"), Some(&2));
                assert_eq!(f.len(), 1);
            } else {
                assert_eq!(f.get(&format!("V^{lam}")), Some(&1));
                assert_eq!(f.get(&format!("V^{}", 4 - lam)), Some(&1));
                assert_eq!(f.len(), 2);
            }
        }
    }

    #[test]
    fn simple_factors_are_themselves() {
        let a = sl2(3).unwrap();
        let ss = simples(&a).unwrap();
        for (i, s) in ss.iter().enumerate() {
            let f = composition_factors(s, &ss);
            assert_eq!(f.len(), 1);
            assert_eq!(f.get(&i), Some(&1));
        }
    }
}
