//! The module families over u(osp(1|2)) and the comparison families over
//! u(sl2), built directly from their action formulas on chain bases.
//!
//! Chain boundaries are handled by a symbol-resolution pass: every family
//! declares its index ranges and gluing aliases, out-of-range symbols resolve
//! to zero, and `check_relations` is the arbiter for every transcription.

use crate::error::AlgError;
use crate::field::Fp;
use crate::matrix::Matrix;
use crate::module::Module;
use crate::pbw::{AlgRef, AlgebraKind};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Family {
    /// Simple V^lambda, dim 2*lambda+1.
    V,
    /// Verma W^lambda, dim 2p.
    W,
    /// Opposite Verma, dim 2p.
    Wt,
    /// Projective P^lambda, dim 4p.
    P,
    /// String module V^lambda(n), dim (2*lambda+1) + 2pn.
    Vn,
    /// String module with arrows reversed, same dimensions.
    Vtn,
    /// W^lambda(n), dim 2pn.
    Wn,
    /// Opposite, dim 2pn.
    Wtn,
    /// Tube module T^lambda(s, n), dim 4pn.
    T,
    /// Opposite tube family.
    Tt,
    /// Simple sl2-module V0^lambda, dim lambda+1.
    V0,
    /// Projective sl2-module P0^lambda, dim 2p (lambda <= p-2).
    P0,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyParams {
    pub family: Family,
    pub lambda: u64,
    pub n: usize,
    pub s: (u64, u64),
}

impl FamilyParams {
    pub fn simple(family: Family, lambda: u64) -> Self {
        FamilyParams { family, lambda, n: 0, s: (1, 1) }
    }

    pub fn string(family: Family, lambda: u64, n: usize) -> Self {
        FamilyParams { family, lambda, n, s: (1, 1) }
    }

    pub fn tube(family: Family, lambda: u64, s: (u64, u64), n: usize) -> Self {
        FamilyParams { family, lambda, n, s }
    }

    pub fn label(&self) -> String {
        match self.family {
            Family::V => format!("V^{}", self.lambda),
            Family::W => format!("W^{}", self.lambda),
            Family::Wt => format!("W~^{}", self.lambda),
            Family::P => format!("P^{}", self.lambda),
            Family::Vn => format!("V^{}({})", self.lambda, self.n),
            Family::Vtn => format!("V~^{}({})", self.lambda, self.n),
            Family::Wn => format!("W^{}({})", self.lambda, self.n),
            Family::Wtn => format!("W~^{}({})", self.lambda, self.n),
            Family::T => format!("T^{}(({},{}),{})", self.lambda, self.s.0, self.s.1, self.n),
            Family::Tt => format!("T~^{}(({},{}),{})", self.lambda, self.s.0, self.s.1, self.n),
            Family::V0 => format!("V0^{}", self.lambda),
            Family::P0 => format!("P0^{}", self.lambda),
        }
    }
}

/// Symbol table for chain bases: (chain tag, block, position) -> basis index.
struct ChainBasis {
    syms: Vec<(u8, i64, i64)>,
    idx: HashMap<(u8, i64, i64), usize>,
}

impl ChainBasis {
    fn new() -> Self {
        ChainBasis { syms: Vec::new(), idx: HashMap::new() }
    }

    fn push(&mut self, c: u8, block: i64, pos: i64) {
        let key = (c, block, pos);
        self.idx.insert(key, self.syms.len());
        self.syms.push(key);
    }

    fn get(&self, c: u8, block: i64, pos: i64) -> Option<usize> {
        self.idx.get(&(c, block, pos)).copied()
    }

    fn dim(&self) -> usize {
        self.syms.len()
    }
}

struct ActionBuilder {
    f: Fp,
    mats: Vec<Matrix>,
}

impl ActionBuilder {
    fn new(f: Fp, ngens: usize, dim: usize) -> Self {
        ActionBuilder {
            f,
            mats: (0..ngens).map(|_| Matrix::zeros(f, dim, dim)).collect(),
        }
    }

    /// mats[g][target, src] += coeff
    fn add(&mut self, g: usize, target: Option<usize>, src: usize, coeff: i64) {
        let c = self.f.of_i64(coeff);
        if c == 0 {
            return;
        }
        if let Some(t) = target {
            let old = self.mats[g][(t, src)];
            self.mats[g][(t, src)] = self.f.add(old, c);
        }
    }
}

/// Parity vector by propagation from basis vector 0 (declared even), using
/// the generator parities; each unreached component restarts even.
fn solve_parity(alg: &AlgRef, action: &[Matrix], dim: usize) -> Result<Vec<u8>, AlgError> {
    let mut parity: Vec<Option<u8>> = vec![None; dim];
    for start in 0..dim {
        if parity[start].is_some() {
            continue;
        }
        parity[start] = Some(0);
        let mut queue = vec![start];
        while let Some(v) = queue.pop() {
            let pv = parity[v].unwrap();
            for (gi, m) in action.iter().enumerate() {
                let gp = alg.gens[gi].parity;
                for w in 0..dim {
                    // column v feeds row w, and column w feeds row v:
                    // either nonzero entry links the parities of v and w.
                    if m[(w, v)] != 0 || m[(v, w)] != 0 {
                        let pw = (pv + gp) % 2;
                        match parity[w] {
                            None => {
                                parity[w] = Some(pw);
                                queue.push(w);
                            }
                            Some(q) if q != pw => {
                                return Err(AlgError::Internal(
                                    "inconsistent parity assignment".into(),
                                ))
                            }
                            _ => {}
                        }
                    }
                }
            }
        }
    }
    Ok(parity.into_iter().map(|x| x.unwrap_or(0)).collect())
}

const E: usize = 0;
const FGEN: usize = 1;
const H: usize = 2;

fn even(x: i64) -> bool {
    x.rem_euclid(2) == 0
}

/// Construct a family member over the matching preset algebra.
pub fn make_module(alg: &AlgRef, params: FamilyParams) -> Result<Module, AlgError> {
    let p = alg.field.p() as i64;
    let lam = params.lambda as i64;
    match params.family {
        Family::V0 | Family::P0 => {
            if alg.kind != AlgebraKind::Sl2 {
                return Err(AlgError::Unsupported("sl2 families need the sl2 preset".into()));
            }
        }
        _ => {
            if alg.kind != AlgebraKind::Osp12 {
                return Err(AlgError::Unsupported("osp families need the osp12 preset".into()));
            }
        }
    }
    if params.lambda >= alg.field.p() {
        return Err(AlgError::ParamOutOfRange(format!("lambda = {}", params.lambda)));
    }
    match params.family {
        Family::Wn | Family::Wtn | Family::T | Family::Tt => {
            if params.n == 0 {
                return Err(AlgError::ParamOutOfRange("n must be >= 1".into()));
            }
        }
        Family::P0 => {
            if lam > p - 2 {
                return Err(AlgError::ParamOutOfRange("P0 needs lambda <= p-2".into()));
            }
        }
        _ => {}
    }
    if matches!(params.family, Family::T | Family::Tt) {
        let f = alg.field;
        if params.s.0 % f.p() == 0 || params.s.1 % f.p() == 0 {
            return Err(AlgError::ParamOutOfRange("tube parameters must be nonzero".into()));
        }
    }

    let module = match params.family {
        Family::V => simple_v(alg, lam, params.label()),
        Family::W => verma(alg, lam, false, params.label()),
        Family::Wt => verma(alg, lam, true, params.label()),
        Family::P => projective(alg, lam, params.label()),
        Family::Vn => string_v(alg, lam, params.n as i64, false, params.label()),
        Family::Vtn => string_v(alg, lam, params.n as i64, true, params.label()),
        Family::Wn => string_w(alg, lam, params.n as i64, false, params.label()),
        Family::Wtn => string_w(alg, lam, params.n as i64, true, params.label()),
        Family::T => tube(alg, lam, params.n as i64, params.s, false, params.label()),
        Family::Tt => tube(alg, lam, params.n as i64, params.s, true, params.label()),
        Family::V0 => sl2_simple(alg, lam, params.label()),
        Family::P0 => sl2_projective(alg, lam, params.label()),
    };
    Ok(module?)
}

/// Half of an even index, as a field scalar context integer.
fn half(i: i64) -> i64 {
    debug_assert!(even(i));
    i / 2
}

fn finish(
    alg: &AlgRef,
    cb: ChainBasis,
    ab: ActionBuilder,
    label: String,
) -> Result<Module, AlgError> {
    let parity = solve_parity(alg, &ab.mats, cb.dim())?;
    Ok(Module::new(alg, ab.mats, parity, label))
}

fn simple_v(alg: &AlgRef, lam: i64, label: String) -> Result<Module, AlgError> {
    let mut cb = ChainBasis::new();
    for i in 0..=2 * lam {
        cb.push(0, 0, i);
    }
    let mut ab = ActionBuilder::new(alg.field, alg.ngens(), cb.dim());
    for i in 0..=2 * lam {
        let src = cb.get(0, 0, i).unwrap();
        ab.add(H, Some(src), src, lam - i);
        ab.add(FGEN, cb.get(0, 0, i + 1), src, 1);
        if even(i) {
            ab.add(E, cb.get(0, 0, i - 1), src, -half(i));
        } else {
            ab.add(E, cb.get(0, 0, i - 1), src, lam - (i - 1) / 2);
        }
    }
    finish(alg, cb, ab, label)
}

fn verma(alg: &AlgRef, lam: i64, twisted: bool, label: String) -> Result<Module, AlgError> {
    let p = alg.field.p() as i64;
    let mut cb = ChainBasis::new();
    for i in 0..2 * p {
        cb.push(0, 0, i);
    }
    let mut ab = ActionBuilder::new(alg.field, alg.ngens(), cb.dim());
    for i in 0..2 * p {
        let src = cb.get(0, 0, i).unwrap();
        if !twisted {
            // W: h v_i = (lam - i) v_i, F raises, E lowers with branches.
            ab.add(H, Some(src), src, lam - i);
            ab.add(FGEN, cb.get(0, 0, i + 1), src, 1);
            if even(i) {
                ab.add(E, cb.get(0, 0, i - 1), src, -half(i));
            } else {
                ab.add(E, cb.get(0, 0, i - 1), src, lam - (i - 1) / 2);
            }
        } else {
            // W~: h v_i = (i - lam) v_i, E raises, F lowers with branches.
            ab.add(H, Some(src), src, i - lam);
            ab.add(E, cb.get(0, 0, i + 1), src, 1);
            if even(i) {
                ab.add(FGEN, cb.get(0, 0, i - 1), src, half(i));
            } else {
                ab.add(FGEN, cb.get(0, 0, i - 1), src, (i - 1) / 2 - lam);
            }
        }
    }
    finish(alg, cb, ab, label)
}

// chain tags for the projective/string bases
const CB: u8 = 0;
const CA: u8 = 1;
const CX: u8 = 2;
const CY: u8 = 3;

/// P^mu for mu = p-1-lam; internally the formulas are written in lam.
fn projective(alg: &AlgRef, mu: i64, label: String) -> Result<Module, AlgError> {
    let p = alg.field.p() as i64;
    let lam = p - 1 - mu;
    let blen = 2 * p - 2 - 2 * lam; // b_0..b_blen, same for a
    let xlen = 2 * lam; // x_0..x_xlen, same for y
    let mut cb = ChainBasis::new();
    for i in 0..=blen {
        cb.push(CB, 0, i);
    }
    for i in 0..=blen {
        cb.push(CA, 0, i);
    }
    for j in 0..=xlen {
        cb.push(CX, 0, j);
    }
    for j in 0..=xlen {
        cb.push(CY, 0, j);
    }
    // boundary aliases of the diamond
    let rb = |cb: &ChainBasis, i: i64| -> Option<usize> {
        if i == blen + 1 {
            cb.get(CY, 0, xlen) // b_{2p-1-2lam} = y_{2lam}
        } else if i == -1 {
            cb.get(CX, 0, xlen) // b_{-1} = x_{2lam}
        } else {
            cb.get(CB, 0, i)
        }
    };
    let ry = |cb: &ChainBasis, j: i64| -> Option<usize> {
        if j == xlen + 1 {
            cb.get(CA, 0, blen) // y_{2lam+1} = last a
        } else {
            cb.get(CY, 0, j)
        }
    };
    let rx = |cb: &ChainBasis, j: i64| -> Option<usize> {
        if j == xlen + 1 {
            cb.get(CA, 0, 0) // x_{2lam+1} = a_0
        } else {
            cb.get(CX, 0, j)
        }
    };
    let mut ab = ActionBuilder::new(alg.field, alg.ngens(), cb.dim());
    for i in 0..=blen {
        let src = cb.get(CB, 0, i).unwrap();
        ab.add(H, Some(src), src, p - 1 - lam - i);
        ab.add(FGEN, rb(&cb, i + 1), src, 1);
        if i == 0 {
            // Boundary of the diamond: E b_0 lands on the top of the x-chain
            // with coefficient 1, pinned by EF + FE = h at b_0.
            ab.add(E, rb(&cb, -1), src, 1);
        } else if even(i) {
            ab.add(E, rb(&cb, i - 1), src, -half(i));
            ab.add(E, cb.get(CA, 0, i - 1), src, 1);
        } else {
            ab.add(E, rb(&cb, i - 1), src, p - 1 - lam - (i - 1) / 2);
            ab.add(E, cb.get(CA, 0, i - 1), src, -1);
        }
    }
    for j in 0..=xlen {
        let src = cb.get(CY, 0, j).unwrap();
        ab.add(H, Some(src), src, j - lam);
        // the gluing into the socle chain carries a minus sign, pinned by
        // FE = -EF + h at the last b
        ab.add(E, ry(&cb, j + 1), src, if j == xlen { -1 } else { 1 });
        if even(j) {
            ab.add(FGEN, ry(&cb, j - 1), src, half(j));
        } else {
            ab.add(FGEN, ry(&cb, j - 1), src, (j - 1) / 2 - lam);
        }
    }
    for j in 0..=xlen {
        let src = cb.get(CX, 0, j).unwrap();
        ab.add(H, Some(src), src, lam - j);
        ab.add(FGEN, rx(&cb, j + 1), src, 1);
        if even(j) {
            ab.add(E, rx(&cb, j - 1), src, -half(j));
        } else {
            ab.add(E, rx(&cb, j - 1), src, lam - (j - 1) / 2);
        }
    }
    for i in 0..=blen {
        let src = cb.get(CA, 0, i).unwrap();
        ab.add(H, Some(src), src, p - 1 - lam - i);
        ab.add(FGEN, cb.get(CA, 0, i + 1), src, 1);
        if even(i) {
            ab.add(E, cb.get(CA, 0, i - 1), src, -half(i));
        } else {
            ab.add(E, cb.get(CA, 0, i - 1), src, p - 1 - lam - (i - 1) / 2);
        }
    }
    finish(alg, cb, ab, label)
}

/// V^lam(n) and V~^lam(n): n+1 simple strings glued through n Verma-top
/// chains, in the two possible orientations.
fn string_v(alg: &AlgRef, lam: i64, n: i64, twisted: bool, label: String) -> Result<Module, AlgError> {
    let p = alg.field.p() as i64;
    let alen = 2 * p - 2 * lam - 2;
    let mut cb = ChainBasis::new();
    for m in 0..=n {
        for v in 0..=2 * lam {
            cb.push(CB, m, v); // e_v(m)
        }
    }
    for m in 0..n {
        for u in 0..=alen {
            cb.push(CA, m, u); // a_u(m)
        }
    }
    let mut ab = ActionBuilder::new(alg.field, alg.ngens(), cb.dim());
    for m in 0..=n {
        for v in 0..=2 * lam {
            let src = cb.get(CB, m, v).unwrap();
            ab.add(H, Some(src), src, lam - v);
            if !twisted {
                // F e_v(m) = e_{v+1}(m), gluing e_{2lam+1}(m) = a_0(m-1)
                let tgt = if v == 2 * lam { cb.get(CA, m - 1, 0) } else { cb.get(CB, m, v + 1) };
                ab.add(FGEN, tgt, src, 1);
                if even(v) {
                    ab.add(E, cb.get(CB, m, v - 1), src, -half(v));
                    if v == 0 {
                        ab.add(E, cb.get(CA, m, alen), src, 1);
                    }
                } else {
                    ab.add(E, cb.get(CB, m, v - 1), src, lam - (v - 1) / 2);
                }
            } else {
                ab.add(FGEN, cb.get(CB, m, v + 1), src, 1);
                if even(v) {
                    ab.add(E, cb.get(CB, m, v - 1), src, -half(v));
                } else {
                    ab.add(E, cb.get(CB, m, v - 1), src, lam - (v - 1) / 2);
                }
            }
        }
    }
    for m in 0..n {
        for u in 0..=alen {
            let src = cb.get(CA, m, u).unwrap();
            ab.add(H, Some(src), src, p - 1 - lam - u);
            if !twisted {
                ab.add(FGEN, cb.get(CA, m, u + 1), src, 1);
                if even(u) {
                    ab.add(E, cb.get(CA, m, u - 1), src, -half(u));
                } else {
                    ab.add(E, cb.get(CA, m, u - 1), src, p - 1 - lam - (u - 1) / 2);
                }
            } else {
                // F a_u(m) = a_{u+1}(m), gluing a_{alen+1}(m) = e_0(m)
                let tgt = if u == alen { cb.get(CB, m, 0) } else { cb.get(CA, m, u + 1) };
                ab.add(FGEN, tgt, src, 1);
                if even(u) {
                    ab.add(E, cb.get(CA, m, u - 1), src, -half(u));
                    if u == 0 {
                        ab.add(E, cb.get(CB, m + 1, 2 * lam), src, 1);
                    }
                } else {
                    ab.add(E, cb.get(CA, m, u - 1), src, p - 1 - lam - (u - 1) / 2);
                }
            }
        }
    }
    finish(alg, cb, ab, label)
}

fn string_w(alg: &AlgRef, lam: i64, n: i64, twisted: bool, label: String) -> Result<Module, AlgError> {
    let p = alg.field.p() as i64;
    let mut cb = ChainBasis::new();
    for m in 1..=n {
        for u in 0..2 * p {
            cb.push(CB, m, u);
        }
    }
    let mut ab = ActionBuilder::new(alg.field, alg.ngens(), cb.dim());
    for m in 1..=n {
        for u in 0..2 * p {
            let src = cb.get(CB, m, u).unwrap();
            if !twisted {
                ab.add(H, Some(src), src, lam - u);
                ab.add(FGEN, cb.get(CB, m, u + 1), src, 1);
                if even(u) {
                    ab.add(E, cb.get(CB, m, u - 1), src, -half(u));
                    if u == 0 {
                        ab.add(E, cb.get(CB, m + 1, 2 * p - 1), src, 1);
                    }
                } else {
                    ab.add(E, cb.get(CB, m, u - 1), src, lam - (u - 1) / 2);
                }
            } else {
                ab.add(H, Some(src), src, u - lam);
                ab.add(E, cb.get(CB, m, u + 1), src, 1);
                if even(u) {
                    ab.add(FGEN, cb.get(CB, m, u - 1), src, half(u));
                    if u == 0 {
                        ab.add(FGEN, cb.get(CB, m - 1, 2 * p - 1), src, 1);
                    }
                } else {
                    ab.add(FGEN, cb.get(CB, m, u - 1), src, (u - 1) / 2 - lam);
                }
            }
        }
    }
    finish(alg, cb, ab, label)
}

fn tube(
    alg: &AlgRef,
    lam: i64,
    n: i64,
    s: (u64, u64),
    twisted: bool,
    label: String,
) -> Result<Module, AlgError> {
    let p = alg.field.p() as i64;
    let mut cb = ChainBasis::new();
    for m in 1..=n {
        for u in 0..2 * p {
            cb.push(CB, m, u); // e_u(m)
        }
    }
    for m in 1..=n {
        for u in 0..2 * p {
            cb.push(CA, m, u); // e-hat_u(m)
        }
    }
    let mut ab = ActionBuilder::new(alg.field, alg.ngens(), cb.dim());
    let (s1, s2) = (s.0 as i64, s.1 as i64);
    for (chain, other, sc) in [(CB, CA, s1), (CA, CB, s2)] {
        for m in 1..=n {
            for u in 0..2 * p {
                let src = cb.get(chain, m, u).unwrap();
                if !twisted {
                    ab.add(H, Some(src), src, lam - u);
                    ab.add(FGEN, cb.get(chain, m, u + 1), src, 1);
                    if even(u) {
                        ab.add(E, cb.get(chain, m, u - 1), src, -half(u));
                        if u == 0 {
                            ab.add(E, cb.get(other, m, 2 * p - 1), src, sc);
                            ab.add(E, cb.get(other, m - 1, 2 * p - 1), src, 1);
                        }
                    } else {
                        ab.add(E, cb.get(chain, m, u - 1), src, lam - (u - 1) / 2);
                    }
                } else {
                    ab.add(H, Some(src), src, u - lam);
                    ab.add(E, cb.get(chain, m, u + 1), src, 1);
                    if even(u) {
                        ab.add(FGEN, cb.get(chain, m, u - 1), src, half(u));
                        if u == 0 {
                            ab.add(FGEN, cb.get(other, m, 2 * p - 1), src, sc);
                            ab.add(FGEN, cb.get(other, m - 1, 2 * p - 1), src, 1);
                        }
                    } else {
                        ab.add(FGEN, cb.get(chain, m, u - 1), src, (u - 1) / 2 - lam);
                    }
                }
            }
        }
    }
    finish(alg, cb, ab, label)
}

fn sl2_simple(alg: &AlgRef, lam: i64, label: String) -> Result<Module, AlgError> {
    let mut cb = ChainBasis::new();
    for i in 0..=lam {
        cb.push(0, 0, i);
    }
    let mut ab = ActionBuilder::new(alg.field, alg.ngens(), cb.dim());
    for i in 0..=lam {
        let src = cb.get(0, 0, i).unwrap();
        ab.add(H, Some(src), src, lam - 2 * i);
        ab.add(E, cb.get(0, 0, i - 1), src, -i * (lam + 1 - i));
        ab.add(FGEN, cb.get(0, 0, i + 1), src, -1);
    }
    finish(alg, cb, ab, label)
}

/// P0^mu for mu = p-2-lam.
fn sl2_projective(alg: &AlgRef, mu: i64, label: String) -> Result<Module, AlgError> {
    let p = alg.field.p() as i64;
    let lam = p - 2 - mu;
    let blen = p - 2 - lam;
    let xlen = lam;
    let mut cb = ChainBasis::new();
    for i in 0..=blen {
        cb.push(CB, 0, i);
    }
    for i in 0..=blen {
        cb.push(CA, 0, i);
    }
    for j in 0..=xlen {
        cb.push(CX, 0, j);
    }
    for j in 0..=xlen {
        cb.push(CY, 0, j);
    }
    let rb = |cb: &ChainBasis, i: i64| -> Option<usize> {
        if i == blen + 1 {
            cb.get(CY, 0, xlen)
        } else if i == -1 {
            cb.get(CX, 0, xlen)
        } else {
            cb.get(CB, 0, i)
        }
    };
    let ry = |cb: &ChainBasis, j: i64| -> Option<usize> {
        if j == xlen + 1 {
            cb.get(CA, 0, blen)
        } else {
            cb.get(CY, 0, j)
        }
    };
    let rx = |cb: &ChainBasis, j: i64| -> Option<usize> {
        if j == xlen + 1 {
            cb.get(CA, 0, 0)
        } else {
            cb.get(CX, 0, j)
        }
    };
    let mut ab = ActionBuilder::new(alg.field, alg.ngens(), cb.dim());
    for i in 0..=blen {
        let src = cb.get(CB, 0, i).unwrap();
        ab.add(H, Some(src), src, p - 2 - lam - 2 * i);
        ab.add(FGEN, rb(&cb, i + 1), src, -1);
        if i == 0 {
            ab.add(E, rb(&cb, -1), src, 1);
        } else {
            ab.add(E, rb(&cb, i - 1), src, -i * (p - lam - 1 - i));
            ab.add(E, cb.get(CA, 0, i - 1), src, 1);
        }
    }
    for j in 0..=xlen {
        let src = cb.get(CY, 0, j).unwrap();
        ab.add(H, Some(src), src, 2 * j - lam);
        ab.add(E, ry(&cb, j + 1), src, 1);
        ab.add(FGEN, ry(&cb, j - 1), src, -j * (j - lam - 1));
    }
    for j in 0..=xlen {
        let src = cb.get(CX, 0, j).unwrap();
        ab.add(H, Some(src), src, lam - 2 * j);
        ab.add(FGEN, rx(&cb, j + 1), src, -1);
        ab.add(E, rx(&cb, j - 1), src, -j * (lam + 1 - j));
    }
    for i in 0..=blen {
        let src = cb.get(CA, 0, i).unwrap();
        ab.add(H, Some(src), src, p - 2 - lam - 2 * i);
        ab.add(FGEN, cb.get(CA, 0, i + 1), src, -1);
        ab.add(E, cb.get(CA, 0, i - 1), src, -i * (p - lam - 1 - i));
    }
    finish(alg, cb, ab, label)
}

/// Expected dimension of a family member.
pub fn expected_dim(p: u64, params: &FamilyParams) -> usize {
    let p = p as usize;
    let l = params.lambda as usize;
    let n = params.n;
    match params.family {
        Family::V => 2 * l + 1,
        Family::W | Family::Wt => 2 * p,
        Family::P => 4 * p,
        Family::Vn | Family::Vtn => 2 * l + 1 + 2 * p * n,
        Family::Wn | Family::Wtn => 2 * p * n,
        Family::T | Family::Tt => 4 * p * n,
        Family::V0 => l + 1,
        Family::P0 => 2 * p,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pbw::{osp12, sl2};

    fn all_osp_params(p: u64, nmax: usize) -> Vec<FamilyParams> {
        let mut out = Vec::new();
        for lam in 0..p {
            out.push(FamilyParams::simple(Family::V, lam));
            out.push(FamilyParams::simple(Family::W, lam));
            out.push(FamilyParams::simple(Family::Wt, lam));
            out.push(FamilyParams::simple(Family::P, lam));
            for n in 0..=nmax {
                out.push(FamilyParams::string(Family::Vn, lam, n));
                out.push(FamilyParams::string(Family::Vtn, lam, n));
            }
            for n in 1..=nmax {
                out.push(FamilyParams::string(Family::Wn, lam, n));
                out.push(FamilyParams::string(Family::Wtn, lam, n));
                for s1 in 1..p {
                    for s2 in 1..p {
                        out.push(FamilyParams::tube(Family::T, lam, (s1, s2), n));
                        out.push(FamilyParams::tube(Family::Tt, lam, (s1, s2), n));
                    }
                }
            }
        }
        out
    }

    #[test]
    fn every_family_member_is_a_module_p3() {
        let a = osp12(3).unwrap();
        for params in all_osp_params(3, 3) {
            let m = make_module(&a, params).unwrap();
            assert_eq!(m.dim, expected_dim(3, &params), "{}", params.label());
            m.check_relations().unwrap_or_else(|e| panic!("{}: {e}", params.label()));
        }
        let s = sl2(3).unwrap();
        for lam in 0..3 {
            let m = make_module(&s, FamilyParams::simple(Family::V0, lam)).unwrap();
            m.check_relations().unwrap();
            assert_eq!(m.dim, lam as usize + 1);
        }
        for lam in 0..=1 {
            let m = make_module(&s, FamilyParams::simple(Family::P0, lam)).unwrap();
            m.check_relations().unwrap();
            assert_eq!(m.dim, 6);
        }
    }

    #[test]
    fn every_family_member_is_a_module_p5() {
        let a = osp12(5).unwrap();
        for params in all_osp_params(5, 2) {
            let m = make_module(&a, params).unwrap();
            assert_eq!(m.dim, expected_dim(5, &params), "{}", params.label());
            m.check_relations().unwrap_or_else(|e| panic!("{}: {e}", params.label()));
        }
        let s = sl2(5).unwrap();
        for lam in 0..5 {
            make_module(&s, FamilyParams::simple(Family::V0, lam))
                .unwrap()
                .check_relations()
                .unwrap();
        }
        for lam in 0..=3 {
            make_module(&s, FamilyParams::simple(Family::P0, lam))
                .unwrap()
                .check_relations()
                .unwrap();
        }
    }

    #[test]
    fn sampled_families_p7() {
        let a = osp12(7).unwrap();
        for params in [
            FamilyParams::simple(Family::V, 4),
            FamilyParams::simple(Family::P, 0),
            FamilyParams::simple(Family::P, 6),
            FamilyParams::string(Family::Vn, 2, 2),
            FamilyParams::string(Family::Vtn, 5, 1),
            FamilyParams::string(Family::Wtn, 3, 2),
            FamilyParams::tube(Family::T, 1, (2, 5), 2),
            FamilyParams::tube(Family::Tt, 6, (3, 4), 1),
        ] {
            let m = make_module(&a, params).unwrap();
            assert_eq!(m.dim, expected_dim(7, &params), "{}", params.label());
            m.check_relations().unwrap_or_else(|e| panic!("{}: {e}", params.label()));
        }
    }

    #[test]
    fn v_weights_match_formula() {
        // V^2 at p=5: h eigenvalues (2,1,0,4,3).
        let a = osp12(5).unwrap();
        let m = make_module(&a, FamilyParams::simple(Family::V, 2)).unwrap();
        let h = &m.action[2];
        assert!(h.is_diagonal());
        let d: Vec<u64> = (0..5).map(|i| h[(i, i)]).collect();
        assert_eq!(d, vec![2, 1, 0, 4, 3]);
    }

    #[test]
    fn v_lambda_zero_is_trivial() {
        let a = osp12(5).unwrap();
        let m = make_module(&a, FamilyParams::simple(Family::V, 0)).unwrap();
        assert_eq!(m.dim, 1);
        assert!(m.action.iter().take(2).all(|x| x.is_zero()));
        assert!(m.action[2].is_zero());
    }

    #[test]
    fn corrupted_action_fails_relations() {
        let a = osp12(3).unwrap();
        let mut m = make_module(&a, FamilyParams::simple(Family::V, 1)).unwrap();
        m.action[0] = Matrix::zeros(a.field, m.dim, m.dim);
        assert!(m.check_relations().is_err());
    }

    #[test]
    fn parity_alternates_on_v() {
        let a = osp12(3).unwrap();
        let m = make_module(&a, FamilyParams::simple(Family::V, 1)).unwrap();
        assert_eq!(m.parity, vec![0, 1, 0]);
        // g acts as diag(1,-1,1) on the smash side
        let sm = crate::pbw::smash(&a).unwrap();
        let ms = m.to_smash(&sm).unwrap();
        ms.check_relations().unwrap();
        let g = &ms.action[3];
        assert_eq!((g[(0, 0)], g[(1, 1)], g[(2, 2)]), (1, 2, 1));
    }

    #[test]
    fn wn_at_one_matches_verma() {
        let a = osp12(3).unwrap();
        let w1 = make_module(&a, FamilyParams::string(Family::Wn, 1, 1)).unwrap();
        let w = make_module(&a, FamilyParams::simple(Family::W, 1)).unwrap();
        assert_eq!(w1.action, w.action);
        let wt1 = make_module(&a, FamilyParams::string(Family::Wtn, 1, 1)).unwrap();
        let wt = make_module(&a, FamilyParams::simple(Family::Wt, 1)).unwrap();
        assert_eq!(wt1.action, wt.action);
    }
}
