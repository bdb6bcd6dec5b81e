//! Isomorphism testing with a fixed escalation ladder: dimension check,
//! invertible-hom search (seeded random, then exhaustive sweep for small hom
//! spaces), structural no-certificates, and an explicit indeterminate
//! outcome that is never coerced.

use crate::endring::find_iso;
use crate::factors::{composition_factors, simples};
use crate::hom::hom_basis;
use crate::matrix::Matrix;
use crate::module::Module;

#[derive(Debug, Clone)]
pub enum IsoOutcome {
    Yes(Matrix),
    No(String),
    Indeterminate,
}

impl IsoOutcome {
    pub fn is_yes(&self) -> bool {
        matches!(self, IsoOutcome::Yes(_))
    }
    pub fn is_no(&self) -> bool {
        matches!(self, IsoOutcome::No(_))
    }
}

pub fn is_isomorphic(m: &Module, n: &Module, seed: u64) -> IsoOutcome {
    if !m.same_algebra(n) {
        return IsoOutcome::No("different algebras".into());
    }
    if m.dim != n.dim {
        return IsoOutcome::No(format!("dim {} != {}", m.dim, n.dim));
    }
    if m.dim == 0 {
        return IsoOutcome::Yes(Matrix::zeros(m.alg.field, 0, 0));
    }
    if let Some(w) = find_iso(m, n, seed) {
        return IsoOutcome::Yes(w);
    }
    // structural no-certificates
    let hmn = hom_basis(m, n).len();
    if hmn == 0 {
        return IsoOutcome::No("no homomorphisms at all".into());
    }
    let (em, en) = (hom_basis(m, m).len(), hom_basis(n, n).len());
    if em != en || hmn != em || hom_basis(n, m).len() != em {
        return IsoOutcome::No(format!(
            "hom-space dimensions differ: end {em}/{en}, hom {hmn}"
        ));
    }
    if let Ok(ss) = simples(&m.alg) {
        let (fm, fn_) = (composition_factors(m, &ss), composition_factors(n, &ss));
        if fm != fn_ {
            return IsoOutcome::No("composition factors differ".into());
        }
    }
    IsoOutcome::Indeterminate
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{make_module, Family, FamilyParams};
    use crate::pbw::osp12;

    #[test]
    fn identity_iso() {
        let a = osp12(3).unwrap();
        let v = make_module(&a, FamilyParams::simple(Family::V, 2)).unwrap();
        assert!(is_isomorphic(&v, &v, 1).is_yes());
    }

    #[test]
    fn tube_criterion_p3() {
        // T^1((1,2),1) and T^1((2,1),1) share s1*s2 = 2, so they are
        // isomorphic; T^1((1,1),1) has s1*s2 = 1 and is not.
        let a = osp12(3).unwrap();
        let t12 = make_module(&a, FamilyParams::tube(Family::T, 1, (1, 2), 1)).unwrap();
        let t21 = make_module(&a, FamilyParams::tube(Family::T, 1, (2, 1), 1)).unwrap();
        let t11 = make_module(&a, FamilyParams::tube(Family::T, 1, (1, 1), 1)).unwrap();
        assert!(is_isomorphic(&t12, &t21, 5).is_yes());
        assert!(is_isomorphic(&t11, &t12, 5).is_no());
    }

    #[test]
    fn different_simples_not_isomorphic() {
        let a = osp12(5).unwrap();
        let w = make_module(&a, FamilyParams::simple(Family::W, 0)).unwrap();
        let wt = make_module(&a, FamilyParams::simple(Family::Wt, 0)).unwrap();
        // same dims and factors but opposite orientation
        let out = is_isomorphic(&w, &wt, 9);
        assert!(out.is_no(), "{:?}", out);
    }
}
