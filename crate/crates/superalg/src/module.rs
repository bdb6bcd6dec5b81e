//! Modules: one square matrix per generator plus a parity vector.
//!
//! `check_relations` replays every straightening rule and truncation of the
//! underlying algebra against the action matrices, so a module that builds
//! cleanly is a module, not a transcription.

use crate::error::AlgError;
use crate::matrix::{Matrix, MatrixData};
use crate::pbw::{AlgRef, AlgebraKind, Exps};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::sync::Arc;

#[derive(Debug, Clone)]
pub struct Module {
    pub alg: AlgRef,
    pub dim: usize,
    /// One action matrix per generator, in generator order.
    pub action: Vec<Matrix>,
    pub parity: Vec<u8>,
    pub label: String,
}

impl Module {
    pub fn new(alg: &AlgRef, action: Vec<Matrix>, parity: Vec<u8>, label: impl Into<String>) -> Self {
        let dim = parity.len();
        assert_eq!(action.len(), alg.ngens());
        for m in &action {
            assert_eq!((m.rows, m.cols), (dim, dim));
        }
        Module {
            alg: alg.clone(),
            dim,
            action,
            parity,
            label: label.into(),
        }
    }

    /// The trivial (counit) module: primitives act by zero, group-likes by 1.
    pub fn trivial(alg: &AlgRef) -> Self {
        let f = alg.field;
        let action = alg
            .gens
            .iter()
            .map(|g| {
                if g.name == "g" {
                    Matrix::identity(f, 1)
                } else {
                    Matrix::zeros(f, 1, 1)
                }
            })
            .collect();
        Module::new(alg, action, vec![0], "triv")
    }

    /// The left regular module.
    pub fn regular(alg: &AlgRef) -> Self {
        let d = alg.dim().expect("finite algebra");
        let f = alg.field;
        let mut action = Vec::new();
        for g in 0..alg.ngens() {
            let ge = crate::pbw::AlgElt::generator(alg, g);
            let mut m = Matrix::zeros(f, d, d);
            for col in 0..d {
                let b = crate::pbw::AlgElt::monomial(alg, alg.monomial_at(col), 1);
                let prod = ge.mul(&b);
                for (e, &c) in &prod.terms {
                    m[(alg.index_of(e), col)] = c;
                }
            }
            action.push(m);
        }
        let parity = (0..d)
            .map(|i| alg.parity_of_monomial(&alg.monomial_at(i)))
            .collect();
        Module::new(alg, action, parity, format!("reg({})", alg.label))
    }

    pub fn same_algebra(&self, other: &Module) -> bool {
        Arc::ptr_eq(&self.alg, &other.alg)
            || (self.alg.label == other.alg.label && self.alg.field == other.alg.field)
    }

    /// Action of a normal-form monomial.
    pub fn act_monomial(&self, e: &Exps) -> Matrix {
        let mut m = Matrix::identity(self.alg.field, self.dim);
        for (i, &k) in e.iter().enumerate() {
            if k > 0 {
                m = m.mul(&self.action[i].pow(k as u64));
            }
        }
        m
    }

    /// Action of an algebra element.
    pub fn act_elem(&self, x: &crate::pbw::AlgElt) -> Matrix {
        let f = self.alg.field;
        let mut m = Matrix::zeros(f, self.dim, self.dim);
        for (e, &c) in &x.terms {
            m = m.add(&self.act_monomial(e).scale(c));
        }
        m
    }

    /// Verify every rewrite rule, truncation relation and parity constraint.
    pub fn check_relations(&self) -> Result<(), AlgError> {
        let alg = &self.alg;
        let f = alg.field;
        for (&(j, i), terms) in &alg.rewrite {
            let lhs = self.action[j].mul(&self.action[i]);
            let mut rhs = Matrix::zeros(f, self.dim, self.dim);
            for (e, c) in terms {
                rhs = rhs.add(&self.act_monomial(e).scale(*c));
            }
            if lhs != rhs {
                return Err(AlgError::RelationFailure(format!(
                    "{}: rewrite {}*{} with witness column {}",
                    self.label,
                    alg.gens[j].name,
                    alg.gens[i].name,
                    first_bad_col(&lhs, &rhs)
                )));
            }
        }
        for (i, g) in alg.gens.iter().enumerate() {
            if let Some(n) = g.trunc {
                let lhs = self.action[i].pow(n as u64);
                let mut rhs = Matrix::zeros(f, self.dim, self.dim);
                for (e, c) in &alg.trunc_images[i] {
                    rhs = rhs.add(&self.act_monomial(e).scale(*c));
                }
                if lhs != rhs {
                    return Err(AlgError::RelationFailure(format!(
                        "{}: truncation {}^{} with witness column {}",
                        self.label,
                        g.name,
                        n,
                        first_bad_col(&lhs, &rhs)
                    )));
                }
            }
        }
        // parity: even generators preserve the grading, odd generators swap it
        for (i, g) in alg.gens.iter().enumerate() {
            for r in 0..self.dim {
                for c in 0..self.dim {
                    if self.action[i][(r, c)] != 0
                        && (self.parity[r] + self.parity[c]) % 2 != g.parity % 2
                    {
                        return Err(AlgError::RelationFailure(format!(
                            "{}: parity of generator {} at entry ({r},{c})",
                            self.label, g.name
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn direct_sum(&self, other: &Module) -> Result<Module, AlgError> {
        if !self.same_algebra(other) {
            return Err(AlgError::AlgebraMismatch);
        }
        let action = (0..self.alg.ngens())
            .map(|i| Matrix::block_diag(&[&self.action[i], &other.action[i]]))
            .collect();
        let mut parity = self.parity.clone();
        parity.extend_from_slice(&other.parity);
        Ok(Module::new(
            &self.alg,
            action,
            parity,
            format!("{}(+){}", self.label, other.label),
        ))
    }

    /// Parity change: flip the grading, keep the action.
    pub fn parity_change(&self) -> Module {
        let parity = self.parity.iter().map(|&b| 1 - b).collect();
        Module::new(
            &self.alg,
            self.action.clone(),
            parity,
            format!("Pi({})", self.label),
        )
    }

    /// Dual module under the antipode twist. Even Lie generators act by
    /// -transpose, odd ones by -transpose with column signs from the parity,
    /// group-likes by plain transpose.
    pub fn dual(&self) -> Module {
        let f = self.alg.field;
        let sign_col = |m: &Matrix| -> Matrix {
            let mut out = m.clone();
            for r in 0..out.rows {
                for c in 0..out.cols {
                    if self.parity[c] == 1 {
                        out[(r, c)] = f.neg(out[(r, c)]);
                    }
                }
            }
            out
        };
        let action = self
            .alg
            .gens
            .iter()
            .enumerate()
            .map(|(i, g)| {
                let t = self.action[i].transpose();
                if g.name == "g" {
                    t
                } else if g.parity == 1 {
                    sign_col(&t).scale(f.p() - 1)
                } else {
                    t.scale(f.p() - 1)
                }
            })
            .collect();
        Module::new(
            &self.alg,
            action,
            self.parity.clone(),
            format!("dual({})", self.label),
        )
    }

    /// View a supermodule over the base preset as a module over the smash
    /// preset: the group-like acts by the parity involution.
    pub fn to_smash(&self, smash_alg: &AlgRef) -> Result<Module, AlgError> {
        let base_n = self.alg.ngens();
        if smash_alg.ngens() != base_n + 1 || smash_alg.gens[base_n].name != "g" {
            return Err(AlgError::Unsupported("target is not the matching smash preset".into()));
        }
        let f = self.alg.field;
        let gmat = Matrix::diagonal(
            f,
            &self
                .parity
                .iter()
                .map(|&b| if b == 1 { f.p() - 1 } else { 1 })
                .collect::<Vec<_>>(),
        );
        let mut action = self.action.clone();
        action.push(gmat);
        Ok(Module::new(
            smash_alg,
            action,
            self.parity.clone(),
            format!("{}#", self.label),
        ))
    }

    /// Restrict an osp(1|2)-module to u(sl2) through e = E^2, f = -F^2.
    pub fn restrict_to_sl2(&self, sl2_alg: &AlgRef) -> Result<Module, AlgError> {
        if self.alg.kind != AlgebraKind::Osp12 {
            return Err(AlgError::Unsupported("restrict expects a module over the osp12 preset".into()));
        }
        if sl2_alg.kind != AlgebraKind::Sl2 || sl2_alg.field != self.alg.field {
            return Err(AlgError::Unsupported("target must be the sl2 preset at the same prime".into()));
        }
        let f = self.alg.field;
        let e = self.action[0].pow(2);
        let fm = self.action[1].pow(2).scale(f.p() - 1);
        let h = self.action[2].clone();
        Ok(Module::new(
            sl2_alg,
            vec![e, fm, h],
            vec![0; self.dim],
            format!("res({})", self.label),
        ))
    }

    /// Submodule spanned by `vectors` (closed under the action by
    /// saturation), with its inclusion matrix. The basis is refined to
    /// h-weight vectors whenever the ambient h-action is diagonal.
    pub fn submodule_spanned(&self, vectors: &[Vec<u64>], label: &str) -> (Module, Matrix) {
        let f = self.alg.field;
        let mut span = crate::matrix::Span::new(f, self.dim);
        let mut queue: Vec<Vec<u64>> = Vec::new();
        for v in vectors {
            if span.insert(v) {
                queue.push(v.clone());
            }
        }
        while let Some(v) = queue.pop() {
            for a in &self.action {
                let w = a.mul_vec(&v);
                if span.insert(&w) {
                    queue.push(w);
                }
            }
        }
        let basis = weight_refine(self, span.basis());
        self.submodule_on_basis(&basis, label)
    }

    /// Submodule on an explicit invariant basis (caller guarantees closure).
    pub fn submodule_on_basis(&self, basis: &[Vec<u64>], label: &str) -> (Module, Matrix) {
        let f = self.alg.field;
        let k = basis.len();
        let mut incl = Matrix::zeros(f, self.dim, k);
        for (j, b) in basis.iter().enumerate() {
            incl.set_col(j, b);
        }
        let mut action = Vec::new();
        for a in &self.action {
            let images = a.mul(&incl);
            match incl.solve(&images) {
                crate::matrix::SolveResult::Solution { particular, kernel } => {
                    assert!(kernel.is_empty(), "submodule basis not independent");
                    action.push(particular);
                }
                _ => panic!("submodule basis not invariant under the action"),
            }
        }
        let parity = basis.iter().map(|b| vector_parity(self, b)).collect();
        (Module::new(&self.alg, action, parity, label), incl)
    }

    /// Quotient by the span of `sub_basis`; returns the module and the
    /// projection matrix (dim_quotient x dim).
    pub fn quotient(&self, sub_basis: &[Vec<u64>], label: &str) -> (Module, Matrix) {
        let f = self.alg.field;
        let mut span = crate::matrix::Span::new(f, self.dim);
        for b in sub_basis {
            span.insert(b);
        }
        // Complement coordinates: positions that are not pivots of the span.
        let pivots: Vec<usize> = span
            .basis()
            .iter()
            .map(|r| r.iter().position(|&x| x != 0).unwrap())
            .collect();
        let free: Vec<usize> = (0..self.dim).filter(|i| !pivots.contains(i)).collect();
        let k = free.len();
        // projection: reduce v modulo the span, then read free coordinates
        let project = |v: &[u64]| -> Vec<u64> {
            let mut v = v.to_vec();
            let p = f.p();
            for (row, &pc) in span.basis().iter().zip(&pivots) {
                if v[pc] != 0 {
                    let c = v[pc];
                    for t in 0..self.dim {
                        v[t] = (v[t] + (p - c) * row[t]) % p;
                    }
                }
            }
            free.iter().map(|&i| v[i]).collect()
        };
        let mut proj = Matrix::zeros(f, k, self.dim);
        for j in 0..self.dim {
            let mut v = vec![0u64; self.dim];
            v[j] = 1;
            let w = project(&v);
            for i in 0..k {
                proj[(i, j)] = w[i];
            }
        }
        let mut action = Vec::new();
        for a in &self.action {
            let mut m = Matrix::zeros(f, k, k);
            for (j, &fi) in free.iter().enumerate() {
                let mut v = vec![0u64; self.dim];
                v[fi] = 1;
                let w = project(&a.mul_vec(&v));
                m.set_col(j, &w);
            }
            action.push(m);
        }
        let parity = free.iter().map(|&i| self.parity[i]).collect();
        (Module::new(&self.alg, action, parity, label), proj)
    }

    /// Index of the generator named "h", if present (diagonal-weight pivot).
    pub fn h_index(&self) -> Option<usize> {
        self.alg.gen_index("h")
    }

    pub fn to_json(&self) -> ModuleJson {
        ModuleJson {
            version: 1,
            algebra_ref: self.alg.label.clone(),
            dim: self.dim,
            parity: self.parity.clone(),
            action: self
                .alg
                .gens
                .iter()
                .zip(&self.action)
                .map(|(g, m)| (g.name.clone(), m.to_data()))
                .collect(),
        }
    }

    pub fn from_json(alg: &AlgRef, j: &ModuleJson, label: &str) -> Result<Module, AlgError> {
        if j.algebra_ref != alg.label {
            return Err(AlgError::AlgebraMismatch);
        }
        let mut action = Vec::new();
        for g in &alg.gens {
            let m = j
                .action
                .get(&g.name)
                .ok_or_else(|| AlgError::Unsupported(format!("missing action for {}", g.name)))?;
            action.push(Matrix::from_data(alg.field, m));
        }
        Ok(Module::new(alg, action, j.parity.clone(), label))
    }
}

/// Parity of a vector: panics only if the vector mixes parities.
fn vector_parity(m: &Module, v: &[u64]) -> u8 {
    let mut par = None;
    for (i, &c) in v.iter().enumerate() {
        if c != 0 {
            match par {
                None => par = Some(m.parity[i]),
                Some(p) => {
                    if p != m.parity[i] {
                        // mixed-parity basis vector: fall back to 0; families
                        // never hit this, scratch constructions may
                        return 0;
                    }
                }
            }
        }
    }
    par.unwrap_or(0)
}

/// Split a basis of an invariant subspace into h-weight vectors when the
/// ambient h-action is diagonal; otherwise return it unchanged.
pub fn weight_refine(m: &Module, basis: &[Vec<u64>]) -> Vec<Vec<u64>> {
    let Some(hi) = m.h_index() else {
        return basis.to_vec();
    };
    let h = &m.action[hi];
    if !h.is_diagonal() {
        return basis.to_vec();
    }
    let f = m.alg.field;
    let mut by_weight: BTreeMap<u64, crate::matrix::Span> = BTreeMap::new();
    for v in basis {
        // split v into weight components
        let mut comps: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
        for (i, &c) in v.iter().enumerate() {
            if c != 0 {
                comps
                    .entry(h[(i, i)])
                    .or_insert_with(|| vec![0; m.dim])[i] = c;
            }
        }
        for (w, comp) in comps {
            by_weight
                .entry(w)
                .or_insert_with(|| crate::matrix::Span::new(f, m.dim))
                .insert(&comp);
        }
    }
    let mut out = Vec::new();
    for (_, span) in by_weight {
        for r in span.basis() {
            out.push(r.clone());
        }
    }
    out
}

fn first_bad_col(a: &Matrix, b: &Matrix) -> usize {
    for c in 0..a.cols {
        for r in 0..a.rows {
            if a[(r, c)] != b[(r, c)] {
                return c;
            }
        }
    }
    0
}

#[derive(Serialize, Deserialize)]
pub struct ModuleJson {
    pub version: u32,
    pub algebra_ref: String,
    pub dim: usize,
    pub parity: Vec<u8>,
    pub action: BTreeMap<String, MatrixData>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pbw::{build_preset, osp12, sl2};

    #[test]
    fn regular_module_checks_out() {
        for (name, p, d) in [("sl2", 3, 27), ("osp12", 3, 108)] {
            let a = build_preset(name, p).unwrap();
            let r = Module::regular(&a);
            assert_eq!(r.dim, d);
            r.check_relations().unwrap();
        }
        let q = crate::pbw::build_qci(3, &[2, 2], &[vec![0, 2], vec![]]).unwrap();
        let r = Module::regular(&q);
        assert_eq!(r.dim, 4);
        r.check_relations().unwrap();
    }

    #[test]
    fn trivial_module_over_smash() {
        let a = crate::pbw::smash(&osp12(3).unwrap()).unwrap();
        Module::trivial(&a).check_relations().unwrap();
    }

    #[test]
    fn parity_change_is_involution() {
        let a = osp12(3).unwrap();
        let m = Module::regular(&a);
        let mm = m.parity_change().parity_change();
        assert_eq!(m.parity, mm.parity);
        assert_eq!(m.action, mm.action);
    }

    #[test]
    fn dual_satisfies_relations() {
        let a = osp12(3).unwrap();
        Module::regular(&a).dual().check_relations().unwrap();
        let s = sl2(3).unwrap();
        Module::regular(&s).dual().check_relations().unwrap();
    }

    #[test]
    fn direct_sum_dims_add() {
        let a = osp12(3).unwrap();
        let m = Module::trivial(&a);
        let r = Module::regular(&a);
        assert_eq!(m.direct_sum(&r).unwrap().dim, m.dim + r.dim);
    }
}
