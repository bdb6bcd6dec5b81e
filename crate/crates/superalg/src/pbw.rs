//! Finite-dimensional algebras presented by ordered generators with
//! straightening rules and truncation exponents.
//!
//! A normal-form monomial is an exponent vector `(a_1, ..., a_k)` standing for
//! `g_1^{a_1} ... g_k^{a_k}`. Multiplication rewrites out-of-order products
//! using the stored expansion of `g_j g_i` (j > i) and folds `g_i^{N_i}` into
//! its truncation image. Rewrites strictly decrease a right-to-left weighted
//! lexicographic order on words, so straightening terminates.

use crate::error::AlgError;
use crate::field::{is_prime, max_prime, Fp};
use crate::matrix::Matrix;
use serde::{Deserialize, Serialize};
use smallvec::SmallVec;
use std::collections::BTreeMap;
use std::sync::Arc;

pub type Exps = SmallVec<[u32; 4]>;

/// One generator: display name, parity, optional truncation `g^N = image`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorSpec {
    pub name: String,
    pub parity: u8,
    /// `None` for an untruncated (enveloping-algebra) generator.
    pub trunc: Option<u32>,
}

/// What family of presentation an algebra instance came from. Used to pick
/// simple-module and projective-module catalogues.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum AlgebraKind {
    Sl2,
    Osp12,
    Sl2Smash,
    Osp12Smash,
    Qci,
    /// Untruncated enveloping algebra (infinite-dimensional).
    Enveloping,
    /// Associated graded of some other presentation.
    Graded,
}

#[derive(Debug)]
pub struct PBWAlgebra {
    pub field: Fp,
    pub kind: AlgebraKind,
    pub gens: Vec<GeneratorSpec>,
    /// Truncation images, aligned with `gens`; empty term list means zero.
    pub trunc_images: Vec<Vec<(Exps, u64)>>,
    /// For j > i, expansion of `g_j g_i` as normal-form terms.
    pub rewrite: BTreeMap<(usize, usize), Vec<(Exps, u64)>>,
    pub label: String,
}

pub type AlgRef = Arc<PBWAlgebra>;

/// An element: normal-form monomials with nonzero coefficients.
#[derive(Debug, Clone)]
pub struct AlgElt {
    pub alg: AlgRef,
    pub terms: BTreeMap<Exps, u64>,
}

impl PartialEq for AlgElt {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl Eq for AlgElt {}

impl PBWAlgebra {
    pub fn ngens(&self) -> usize {
        self.gens.len()
    }

    /// Total dimension, or `None` for untruncated presentations.
    pub fn dim(&self) -> Option<usize> {
        self.gens
            .iter()
            .map(|g| g.trunc.map(|n| n as usize))
            .product::<Option<usize>>()
    }

    pub fn zero_exps(&self) -> Exps {
        std::iter::repeat(0).take(self.ngens()).collect()
    }

    /// Mixed-radix rank of a basis monomial; generator 0 is the slowest digit.
    pub fn index_of(&self, e: &Exps) -> usize {
        let mut idx = 0usize;
        for (i, g) in self.gens.iter().enumerate() {
            let n = g.trunc.expect("index_of needs a finite algebra") as usize;
            debug_assert!((e[i] as usize) < n);
            idx = idx * n + e[i] as usize;
        }
        idx
    }

    pub fn monomial_at(&self, mut idx: usize) -> Exps {
        let mut e = self.zero_exps();
        for i in (0..self.ngens()).rev() {
            let n = self.gens[i].trunc.expect("finite algebra") as usize;
            e[i] = (idx % n) as u32;
            idx /= n;
        }
        e
    }

    pub fn basis(&self) -> impl Iterator<Item = Exps> + '_ {
        let d = self.dim().expect("finite algebra");
        (0..d).map(move |i| self.monomial_at(i))
    }

    pub fn parity_of_monomial(&self, e: &Exps) -> u8 {
        let mut s = 0u32;
        for (i, g) in self.gens.iter().enumerate() {
            s += e[i] * g.parity as u32;
        }
        (s % 2) as u8
    }

    pub fn monomial_string(&self, e: &Exps) -> String {
        let mut s = String::new();
        for (i, g) in self.gens.iter().enumerate() {
            match e[i] {
                0 => {}
                1 => s.push_str(&g.name),
                k => s.push_str(&format!("{}^{}", g.name, k)),
            }
        }
        if s.is_empty() {
            s.push('1');
        }
        s
    }

    pub fn gen_index(&self, name: &str) -> Option<usize> {
        self.gens.iter().position(|g| g.name == name)
    }
}

impl AlgElt {
    pub fn zero(alg: &AlgRef) -> Self {
        AlgElt {
            alg: alg.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn unit(alg: &AlgRef) -> Self {
        let mut t = BTreeMap::new();
        t.insert(alg.zero_exps(), 1);
        AlgElt {
            alg: alg.clone(),
            terms: t,
        }
    }

    pub fn monomial(alg: &AlgRef, e: Exps, c: u64) -> Self {
        let mut t = BTreeMap::new();
        let c = c % alg.field.p();
        if c != 0 {
            t.insert(e, c);
        }
        AlgElt {
            alg: alg.clone(),
            terms: t,
        }
    }

    pub fn generator(alg: &AlgRef, i: usize) -> Self {
        let mut e = alg.zero_exps();
        e[i] = 1;
        Self::monomial(alg, e, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, e: Exps, c: u64) {
        let f = self.alg.field;
        let c = c % f.p();
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(e).or_insert(0);
        *entry = f.add(*entry, c);
        if *entry == 0 {
            // remove to keep the zero-coefficients-omitted invariant
            let key = self
                .terms
                .iter()
                .find(|(_, &v)| v == 0)
                .map(|(k, _)| k.clone());
            if let Some(k) = key {
                self.terms.remove(&k);
            }
        }
    }

    pub fn add(&self, other: &AlgElt) -> AlgElt {
        assert!(Arc::ptr_eq(&self.alg, &other.alg), "algebra mismatch");
        let mut out = self.clone();
        for (e, &c) in &other.terms {
            out.add_term(e.clone(), c);
        }
        out
    }

    pub fn scale(&self, c: u64) -> AlgElt {
        let f = self.alg.field;
        let c = c % f.p();
        let mut out = AlgElt::zero(&self.alg);
        if c == 0 {
            return out;
        }
        for (e, &v) in &self.terms {
            out.terms.insert(e.clone(), f.mul(v, c));
        }
        out
    }

    pub fn sub(&self, other: &AlgElt) -> AlgElt {
        self.add(&other.scale(self.alg.field.p() - 1))
    }

    pub fn mul(&self, other: &AlgElt) -> AlgElt {
        let alg = &self.alg;
        assert!(Arc::ptr_eq(alg, &other.alg), "algebra mismatch");
        let f = alg.field;
        let mut out = AlgElt::zero(alg);
        for (ea, &ca) in &self.terms {
            for (eb, &cb) in &other.terms {
                let prod = mul_mono_mono(alg, ea, eb);
                for (e, c) in prod.terms {
                    out.add_term(e, f.mul(c, f.mul(ca, cb)));
                }
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> AlgElt {
        let mut acc = AlgElt::unit(&self.alg);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Dense coordinate vector in the monomial basis (finite algebras).
    pub fn to_vec(&self) -> Vec<u64> {
        let d = self.alg.dim().expect("finite algebra");
        let mut v = vec![0; d];
        for (e, &c) in &self.terms {
            v[self.alg.index_of(e)] = c;
        }
        v
    }

    pub fn from_vec(alg: &AlgRef, v: &[u64]) -> AlgElt {
        let mut out = AlgElt::zero(alg);
        for (i, &c) in v.iter().enumerate() {
            if c % alg.field.p() != 0 {
                out.terms.insert(alg.monomial_at(i), c % alg.field.p());
            }
        }
        out
    }

    /// Coefficient of the unit monomial (the counit on normal forms for
    /// augmented presentations where all generators are augmentation-trivial;
    /// for smash presets the group-like has eps = 1 and this is not the
    /// counit -- use `counit` instead).
    pub fn constant_term(&self) -> u64 {
        *self.terms.get(&self.alg.zero_exps()).unwrap_or(&0)
    }

    pub fn to_string_pretty(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (e, c) in &self.terms {
            let m = self.alg.monomial_string(e);
            if *c == 1 && m != "1" {
                parts.push(m);
            } else {
                parts.push(format!("{}*{}", c, m));
            }
        }
        parts.join(" + ")
    }
}

/// Multiply normal monomial `m` by generator `g` on the right.
fn mul_mono_gen(alg: &AlgRef, m: &Exps, g: usize) -> AlgElt {
    // Highest generator strictly above g carrying a nonzero exponent.
    let blocker = (g + 1..alg.ngens()).rev().find(|&j| m[j] > 0);
    match blocker {
        None => {
            let cur = m[g];
            match alg.gens[g].trunc {
                Some(n) if cur + 1 == n => {
                    // prefix * g^N -> prefix * image
                    let mut prefix = m.clone();
                    prefix[g] = 0;
                    let image = alg.trunc_images[g].clone();
                    let f = alg.field;
                    let mut out = AlgElt::zero(alg);
                    for (ie, ic) in image {
                        let part = mul_mono_mono(alg, &prefix, &ie);
                        for (e, c) in part.terms {
                            out.add_term(e, f.mul(c, ic));
                        }
                    }
                    out
                }
                _ => {
                    let mut e = m.clone();
                    e[g] += 1;
                    AlgElt::monomial(alg, e, 1)
                }
            }
        }
        Some(j) => {
            // m = m' * g_j ; m * g = m' * (g_j g) = m' * rewrite(j, g)
            let mut mp = m.clone();
            mp[j] -= 1;
            let rule = alg
                .rewrite
                .get(&(j, g))
                .unwrap_or_else(|| panic!("missing rewrite rule ({j},{g}) in {}", alg.label));
            let f = alg.field;
            let mut out = AlgElt::zero(alg);
            for (re, rc) in rule {
                let part = mul_mono_mono(alg, &mp, re);
                for (e, c) in part.terms {
                    out.add_term(e, f.mul(c, *rc));
                }
            }
            out
        }
    }
}

/// Multiply two normal monomials.
pub fn mul_mono_mono(alg: &AlgRef, a: &Exps, b: &Exps) -> AlgElt {
    let mut acc = AlgElt::monomial(alg, a.clone(), 1);
    for g in 0..alg.ngens() {
        for _ in 0..b[g] {
            acc = mul_elem_gen(alg, &acc, g);
        }
    }
    acc
}

fn mul_elem_gen(alg: &AlgRef, x: &AlgElt, g: usize) -> AlgElt {
    let f = alg.field;
    let mut out = AlgElt::zero(alg);
    for (e, &c) in &x.terms {
        let part = mul_mono_gen(alg, e, g);
        for (pe, pc) in part.terms {
            out.add_term(pe, f.mul(pc, c));
        }
    }
    out
}

/// Normal form of a word in the generators (empty word is the unit).
pub fn straighten(alg: &AlgRef, word: &[usize]) -> AlgElt {
    let mut acc = AlgElt::unit(alg);
    for &g in word {
        assert!(g < alg.ngens(), "generator index out of range");
        acc = mul_elem_gen(alg, &acc, g);
    }
    acc
}

/// Left-multiplication matrix of `x` on the monomial basis.
pub fn left_mult_matrix(alg: &AlgRef, x: &AlgElt) -> Matrix {
    let d = alg.dim().expect("finite algebra");
    let f = alg.field;
    let mut m = Matrix::zeros(f, d, d);
    for (col, b) in alg.basis().enumerate() {
        let be = AlgElt::monomial(alg, b, 1);
        let prod = x.mul(&be);
        for (e, &c) in &prod.terms {
            m[(alg.index_of(e), col)] = c;
        }
    }
    m
}

/// Right-multiplication matrix of `x` on the monomial basis.
pub fn right_mult_matrix(alg: &AlgRef, x: &AlgElt) -> Matrix {
    let d = alg.dim().expect("finite algebra");
    let f = alg.field;
    let mut m = Matrix::zeros(f, d, d);
    for (col, b) in alg.basis().enumerate() {
        let be = AlgElt::monomial(alg, b, 1);
        let prod = be.mul(x);
        for (e, &c) in &prod.terms {
            m[(alg.index_of(e), col)] = c;
        }
    }
    m
}

fn validate_p(p: u64) -> Result<Fp, AlgError> {
    if !is_prime(p) || p == 2 {
        return Err(AlgError::BadPrime(p));
    }
    if p < 3 || p > max_prime() {
        return Err(AlgError::PrimeOutOfRange(p, max_prime()));
    }
    Ok(Fp::new(p))
}

fn exps_of(n: usize, pairs: &[(usize, u32)]) -> Exps {
    let mut e: Exps = std::iter::repeat(0).take(n).collect();
    for &(i, k) in pairs {
        e[i] = k;
    }
    e
}

/// u(sl2): generators e < f < h, relations [e,f]=h, [h,e]=2e, [h,f]=-2f,
/// e^p = f^p = 0, h^p = h.
pub fn sl2(p: u64) -> Result<AlgRef, AlgError> {
    let f = validate_p(p)?;
    build_sl2(f, Some(p as u32), AlgebraKind::Sl2, format!("u(sl2)@{p}"))
}

/// U(sl2): same relations, no truncation.
pub fn sl2_untruncated(p: u64) -> Result<AlgRef, AlgError> {
    let f = validate_p(p)?;
    build_sl2(f, None, AlgebraKind::Enveloping, format!("U(sl2)@{p}"))
}

fn build_sl2(f: Fp, trunc: Option<u32>, kind: AlgebraKind, label: String) -> Result<AlgRef, AlgError> {
    let n = 3;
    let p = f.p();
    let gens = vec![
        GeneratorSpec { name: "e".into(), parity: 0, trunc },
        GeneratorSpec { name: "f".into(), parity: 0, trunc },
        GeneratorSpec { name: "h".into(), parity: 0, trunc: trunc.map(|_| p as u32) },
    ];
    let trunc_images = vec![
        vec![],
        vec![],
        vec![(exps_of(n, &[(2, 1)]), 1)], // h^p = h
    ];
    let mut rewrite = BTreeMap::new();
    // f e = e f - h
    rewrite.insert(
        (1, 0),
        vec![(exps_of(n, &[(0, 1), (1, 1)]), 1), (exps_of(n, &[(2, 1)]), p - 1)],
    );
    // h e = e h + 2 e
    rewrite.insert(
        (2, 0),
        vec![(exps_of(n, &[(0, 1), (2, 1)]), 1), (exps_of(n, &[(0, 1)]), 2 % p)],
    );
    // h f = f h - 2 f
    rewrite.insert(
        (2, 1),
        vec![(exps_of(n, &[(1, 1), (2, 1)]), 1), (exps_of(n, &[(1, 1)]), p - 2 % p)],
    );
    Ok(Arc::new(PBWAlgebra {
        field: f,
        kind,
        gens,
        trunc_images,
        rewrite,
        label,
    }))
}

/// u(osp(1|2)): generators E < F < h with EF + FE = h, hE - Eh = E,
/// hF - Fh = -F, E^{2p} = F^{2p} = 0, h^p = h. Folded basis: E and F carry
/// exponents in [0, 2p).
pub fn osp12(p: u64) -> Result<AlgRef, AlgError> {
    let f = validate_p(p)?;
    build_osp(f, true, AlgebraKind::Osp12, format!("u(osp(1|2))@{p}"))
}

/// U(osp(1|2)): same relations, exponents unbounded.
pub fn osp12_untruncated(p: u64) -> Result<AlgRef, AlgError> {
    let f = validate_p(p)?;
    build_osp(f, false, AlgebraKind::Enveloping, format!("U(osp(1|2))@{p}"))
}

fn build_osp(f: Fp, truncated: bool, kind: AlgebraKind, label: String) -> Result<AlgRef, AlgError> {
    let n = 3;
    let p = f.p();
    let (te, th) = if truncated {
        (Some(2 * p as u32), Some(p as u32))
    } else {
        (None, None)
    };
    let gens = vec![
        GeneratorSpec { name: "E".into(), parity: 1, trunc: te },
        GeneratorSpec { name: "F".into(), parity: 1, trunc: te },
        GeneratorSpec { name: "h".into(), parity: 0, trunc: th },
    ];
    let trunc_images = vec![vec![], vec![], vec![(exps_of(n, &[(2, 1)]), 1)]];
    let mut rewrite = BTreeMap::new();
    // F E = -E F + h
    rewrite.insert(
        (1, 0),
        vec![(exps_of(n, &[(0, 1), (1, 1)]), p - 1), (exps_of(n, &[(2, 1)]), 1)],
    );
    // h E = E h + E
    rewrite.insert(
        (2, 0),
        vec![(exps_of(n, &[(0, 1), (2, 1)]), 1), (exps_of(n, &[(0, 1)]), 1)],
    );
    // h F = F h - F
    rewrite.insert(
        (2, 1),
        vec![(exps_of(n, &[(1, 1), (2, 1)]), 1), (exps_of(n, &[(1, 1)]), p - 1)],
    );
    Ok(Arc::new(PBWAlgebra {
        field: f,
        kind,
        gens,
        trunc_images,
        rewrite,
        label,
    }))
}

/// Adjoin the parity involution g (g^2 = 1, g x g = (-1)^{|x|} x) to a finite
/// preset, doubling the dimension.
pub fn smash(base: &AlgRef) -> Result<AlgRef, AlgError> {
    let kind = match base.kind {
        AlgebraKind::Sl2 => AlgebraKind::Sl2Smash,
        AlgebraKind::Osp12 => AlgebraKind::Osp12Smash,
        _ => return Err(AlgError::Unsupported("smash expects the sl2 or osp12 preset".into())),
    };
    let f = base.field;
    let n = base.ngens() + 1;
    let p = f.p();
    let mut gens = base.gens.clone();
    gens.push(GeneratorSpec { name: "g".into(), parity: 0, trunc: Some(2) });
    let extend = |e: &Exps| -> Exps {
        let mut out = e.clone();
        out.push(0);
        out
    };
    let mut trunc_images: Vec<Vec<(Exps, u64)>> = base
        .trunc_images
        .iter()
        .map(|img| img.iter().map(|(e, c)| (extend(e), *c)).collect())
        .collect();
    trunc_images.push(vec![(exps_of(n, &[]), 1)]); // g^2 = 1
    let mut rewrite: BTreeMap<(usize, usize), Vec<(Exps, u64)>> = base
        .rewrite
        .iter()
        .map(|(&k, v)| (k, v.iter().map(|(e, c)| (extend(e), *c)).collect()))
        .collect();
    for (i, gdef) in base.gens.iter().enumerate() {
        // g x = (+-1) x g
        let sign = if gdef.parity == 1 { p - 1 } else { 1 };
        let mut e = exps_of(n, &[(i, 1)]);
        e[n - 1] = 1;
        rewrite.insert((n - 1, i), vec![(e, sign)]);
    }
    Ok(Arc::new(PBWAlgebra {
        field: f,
        kind,
        gens,
        trunc_images,
        rewrite,
        label: format!("{}#kZ2", base.label),
    }))
}

/// Build a preset by name: sl2, osp12, sl2_smash, osp12_smash.
pub fn build_preset(name: &str, p: u64) -> Result<AlgRef, AlgError> {
    match name {
        "sl2" => sl2(p),
        "osp12" => osp12(p),
        "sl2_smash" => smash(&sl2(p)?),
        "osp12_smash" => smash(&osp12(p)?),
        other => Err(AlgError::Unsupported(format!("unknown preset {other:?}"))),
    }
}

/// Quantum complete intersection: x_i x_j = q_{ij} x_j x_i (i < j),
/// x_i^{N_i} = 0. `q[i][j]` is read for i < j; all must be nonzero.
pub fn build_qci(p: u64, ns: &[u32], q: &[Vec<u64>]) -> Result<AlgRef, AlgError> {
    let f = validate_p(p)?;
    let n = ns.len();
    if ns.iter().any(|&k| k < 2) {
        return Err(AlgError::Unsupported("truncation exponents must be >= 2".into()));
    }
    for i in 0..n {
        for j in (i + 1)..n {
            let qij = q.get(i).and_then(|r| r.get(j)).copied().unwrap_or(0) % f.p();
            if qij == 0 {
                return Err(AlgError::ZeroQ(i, j));
            }
        }
    }
    let gens = (0..n)
        .map(|i| GeneratorSpec {
            name: format!("x{}", i + 1),
            parity: if ns[i] == 2 { 1 } else { 0 },
            trunc: Some(ns[i]),
        })
        .collect();
    let trunc_images = vec![vec![]; n];
    let mut rewrite = BTreeMap::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let qij = q[i][j] % f.p();
            // x_j x_i = q_{ij}^{-1} x_i x_j
            let mut e = exps_of(n, &[(i, 1)]);
            e[j] = 1;
            rewrite.insert((j, i), vec![(e, f.inv(qij))]);
        }
    }
    Ok(Arc::new(PBWAlgebra {
        field: f,
        kind: AlgebraKind::Qci,
        gens,
        trunc_images,
        rewrite,
        label: format!("qci{:?}@{p}", ns),
    }))
}

/// The q-matrix entry with the convention q_ij = q_ji^{-1} for i > j, q_ii = 1.
pub fn qci_q(alg: &PBWAlgebra, q_upper: &[Vec<u64>], i: usize, j: usize) -> u64 {
    let f = alg.field;
    use std::cmp::Ordering::*;
    match i.cmp(&j) {
        Equal => 1,
        Less => q_upper[i][j] % f.p(),
        Greater => f.inv(q_upper[j][i] % f.p()),
    }
}

/// Associated graded algebra for a generator-degree assignment: every rewrite
/// expansion keeps only its top-degree part; truncation images likewise.
/// Errors if some expansion contains a term of higher degree than its
/// left-hand side (the degree map is then not a filtration).
pub fn associated_graded(alg: &AlgRef, deg: &[u32]) -> Result<AlgRef, AlgError> {
    assert_eq!(deg.len(), alg.ngens());
    let mono_deg = |e: &Exps| -> u64 {
        e.iter()
            .zip(deg)
            .map(|(&a, &d)| a as u64 * d as u64)
            .sum()
    };
    let mut rewrite = BTreeMap::new();
    for (&(j, i), terms) in &alg.rewrite {
        let lhs = deg[j] as u64 + deg[i] as u64;
        let mut kept = Vec::new();
        for (e, c) in terms {
            let d = mono_deg(e);
            if d > lhs {
                return Err(AlgError::NotFiltered(format!(
                    "rewrite ({},{}) term {} has degree {} > {}",
                    alg.gens[j].name,
                    alg.gens[i].name,
                    alg.monomial_string(e),
                    d,
                    lhs
                )));
            }
            if d == lhs {
                kept.push((e.clone(), *c));
            }
        }
        rewrite.insert((j, i), kept);
    }
    let mut trunc_images = Vec::new();
    for (i, img) in alg.trunc_images.iter().enumerate() {
        match alg.gens[i].trunc {
            None => trunc_images.push(img.clone()),
            Some(n) => {
                let lhs = n as u64 * deg[i] as u64;
                let mut kept = Vec::new();
                for (e, c) in img {
                    let d = mono_deg(e);
                    if d > lhs {
                        return Err(AlgError::NotFiltered(format!(
                            "truncation of {} has degree {} > {}",
                            alg.gens[i].name, d, lhs
                        )));
                    }
                    if d == lhs {
                        kept.push((e.clone(), *c));
                    }
                }
                trunc_images.push(kept);
            }
        }
    }
    Ok(Arc::new(PBWAlgebra {
        field: alg.field,
        kind: AlgebraKind::Graded,
        gens: alg.gens.clone(),
        trunc_images,
        rewrite,
        label: format!("gr({})", alg.label),
    }))
}

// --- serialization -----------------------------------------------------

#[derive(Serialize, Deserialize)]
pub struct AlgebraJson {
    pub version: u32,
    pub p: u64,
    pub kind: String,
    pub label: String,
    pub gens: Vec<GeneratorSpec>,
    pub trunc_images: Vec<Vec<(Vec<u32>, u64)>>,
    pub rewrite: BTreeMap<String, Vec<(Vec<u32>, u64)>>,
}

pub fn algebra_to_json(alg: &PBWAlgebra) -> AlgebraJson {
    AlgebraJson {
        version: 1,
        p: alg.field.p(),
        kind: format!("{:?}", alg.kind),
        label: alg.label.clone(),
        gens: alg.gens.clone(),
        trunc_images: alg
            .trunc_images
            .iter()
            .map(|v| v.iter().map(|(e, c)| (e.to_vec(), *c)).collect())
            .collect(),
        rewrite: alg
            .rewrite
            .iter()
            .map(|(&(j, i), v)| {
                (
                    format!("{j},{i}"),
                    v.iter().map(|(e, c)| (e.to_vec(), *c)).collect(),
                )
            })
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn preset_dimensions() {
        assert_eq!(osp12(3).unwrap().dim(), Some(108)); // 2p*2p*p
        assert_eq!(sl2(5).unwrap().dim(), Some(125)); // p^3
        assert_eq!(smash(&osp12(3).unwrap()).unwrap().dim(), Some(216));
        assert_eq!(smash(&sl2(3).unwrap()).unwrap().dim(), Some(54));
        let q = build_qci(5, &[3, 3], &[vec![0, 2], vec![]]).unwrap();
        assert_eq!(q.dim(), Some(9));
    }

    #[test]
    fn dimension_is_product_of_truncations() {
        for name in ["sl2", "osp12", "sl2_smash", "osp12_smash"] {
            for p in [3, 5] {
                let a = build_preset(name, p).unwrap();
                let expect: usize = a.gens.iter().map(|g| g.trunc.unwrap() as usize).product();
                assert_eq!(a.dim(), Some(expect));
            }
        }
    }

    #[test]
    fn straighten_fe_in_osp() {
        // F e -> h - E F
        let a = osp12(5).unwrap();
        let fe = straighten(&a, &[1, 0]);
        let mut expect = AlgElt::zero(&a);
        expect.add_term(exps_of(3, &[(2, 1)]), 1);
        expect.add_term(exps_of(3, &[(0, 1), (1, 1)]), 4);
        assert_eq!(fe, expect);
    }

    #[test]
    fn straighten_ee_is_folded_square() {
        let a = osp12(5).unwrap();
        let ee = straighten(&a, &[0, 0]);
        assert_eq!(ee, AlgElt::monomial(&a, exps_of(3, &[(0, 2)]), 1));
    }

    #[test]
    fn straighten_empty_word_is_unit() {
        let a = osp12(3).unwrap();
        assert_eq!(straighten(&a, &[]), AlgElt::unit(&a));
    }

    #[test]
    fn e_power_p_vanishes() {
        // e^p = 0 in u(sl2); E^2 = e inside u(osp12) so e^p = E^{2p} = 0.
        let a = sl2(5).unwrap();
        let e = AlgElt::generator(&a, 0);
        assert!(e.pow(5).is_zero());
        let o = osp12(5).unwrap();
        let ee = straighten(&o, &[0, 0]);
        assert!(ee.pow(5).is_zero());
        let f = AlgElt::generator(&o, 1);
        assert!(f.pow(10).is_zero());
    }

    #[test]
    fn h_p_is_h() {
        let a = sl2(7).unwrap();
        let h = AlgElt::generator(&a, 2);
        assert_eq!(h.pow(7), h);
    }

    #[test]
    fn smash_conjugation_signs() {
        for (name, p) in [("sl2_smash", 5), ("osp12_smash", 3)] {
            let a = build_preset(name, p).unwrap();
            let gi = a.ngens() - 1;
            let g = AlgElt::generator(&a, gi);
            assert_eq!(g.mul(&g), AlgElt::unit(&a));
            for i in 0..gi {
                let x = AlgElt::generator(&a, i);
                let conj = g.mul(&x).mul(&g);
                if a.gens[i].parity == 1 {
                    assert_eq!(conj, x.scale(a.field.p() - 1), "odd gen {i}");
                } else {
                    assert_eq!(conj, x, "even gen {i}");
                }
            }
        }
    }

    #[test]
    fn qci_straightening_inverts_q() {
        // x2 x1 = q^{-1} x1 x2 = 3 x1 x2 for q = 2, p = 5.
        let a = build_qci(5, &[3, 3], &[vec![0, 2], vec![]]).unwrap();
        let w = straighten(&a, &[1, 0]);
        let mut e = a.zero_exps();
        e[0] = 1;
        e[1] = 1;
        assert_eq!(w, AlgElt::monomial(&a, e, 3));
    }

    #[test]
    fn qci_rejects_zero_q() {
        assert!(build_qci(5, &[2, 2], &[vec![0, 0], vec![]]).is_err());
    }

    #[test]
    fn associativity_random_triples() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(12);
        for name in ["sl2", "osp12", "osp12_smash"] {
            let a = build_preset(name, 3).unwrap();
            let d = a.dim().unwrap();
            let mut rand_elt = |rng: &mut rand_chacha::ChaCha8Rng| {
                let mut x = AlgElt::zero(&a);
                for _ in 0..3 {
                    let idx = rng.gen_range(0..d);
                    let c = rng.gen_range(1..a.field.p());
                    x.add_term(a.monomial_at(idx), c);
                }
                x
            };
            for _ in 0..60 {
                let (x, y, z) = (rand_elt(&mut rng), rand_elt(&mut rng), rand_elt(&mut rng));
                assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
            }
        }
    }

    #[test]
    fn straightening_idempotent_on_short_words() {
        // Exhaustive at p = 3 over words of length <= 3: straightening a word,
        // then re-straightening every monomial of the result, is stable.
        let a = osp12(3).unwrap();
        let n = a.ngens();
        let mut words: Vec<Vec<usize>> = vec![vec![]];
        for len in 1..=3 {
            let mut next = Vec::new();
            for w in words.iter().filter(|w| w.len() == len - 1) {
                for g in 0..n {
                    let mut w2 = w.clone();
                    w2.push(g);
                    next.push(w2);
                }
            }
            words.extend(next);
        }
        for w in words {
            let s = straighten(&a, &w);
            let mut again = AlgElt::zero(&a);
            for (e, &c) in &s.terms {
                let mut word = Vec::new();
                for (i, &k) in e.iter().enumerate() {
                    for _ in 0..k {
                        word.push(i);
                    }
                }
                again = again.add(&straighten(&a, &word).scale(c));
            }
            assert_eq!(s, again);
        }
    }

    #[test]
    fn graded_osp_kills_h_in_fe() {
        let a = osp12(5).unwrap();
        let g = associated_graded(&a, &[1, 1, 0]).unwrap();
        let fe = straighten(&g, &[1, 0]);
        let mut e = g.zero_exps();
        e[0] = 1;
        e[1] = 1;
        assert_eq!(fe, AlgElt::monomial(&g, e, 4)); // FE = -EF, h dropped
        // h-action relations survive
        let he = straighten(&g, &[2, 0]);
        assert_eq!(he.terms.len(), 2);
        // trivial degree map returns the algebra unchanged
        let t = associated_graded(&a, &[0, 0, 0]).unwrap();
        assert_eq!(t.rewrite, a.rewrite);
    }

    #[test]
    fn untruncated_products_grow() {
        let u = osp12_untruncated(3).unwrap();
        let e = AlgElt::generator(&u, 0);
        let big = e.pow(9); // would be zero in u(osp12) only at 2p = 6
        assert!(!big.is_zero());
        let mut expect = u.zero_exps();
        expect[0] = 9;
        assert_eq!(big, AlgElt::monomial(&u, expect, 1));
    }
}
