//! Indecomposable projectives, projective covers, and minimal resolutions.
//!
//! Covers are built by lifting a basis of Hom(P_i, M) against the head of M;
//! minimality is by construction (each cover matches the head of the kernel)
//! and asserted (differential images land in the radical).

use crate::error::AlgError;
use crate::factors::{head_multiplicities, radical_basis, simples};
use crate::families::{make_module, Family, FamilyParams};
use crate::hom::hom_basis;
use crate::matrix::{Matrix, Span};
use crate::module::{weight_refine, Module};
use crate::pbw::{AlgRef, AlgebraKind};

/// An indecomposable projective with its simple head and a cyclic generator.
#[derive(Debug, Clone)]
pub struct Projective {
    pub module: Module,
    pub head: usize,
    pub generator: usize,
}

/// The indecomposable projectives of a preset algebra, indexed to match
/// `factors::simples` (projectives[i] covers simples[i]).
pub fn projectives(alg: &AlgRef) -> Result<Vec<Projective>, AlgError> {
    let p = alg.field.p();
    let ss = simples(alg)?;
    let raw: Vec<Module> = match alg.kind {
        AlgebraKind::Sl2 => (0..p)
            .map(|l| {
                if l == p - 1 {
                    make_module(alg, FamilyParams::simple(Family::V0, l))
                } else {
                    make_module(alg, FamilyParams::simple(Family::P0, l))
                }
            })
            .collect::<Result<_, _>>()?,
        AlgebraKind::Osp12 => (0..p)
            .map(|l| make_module(alg, FamilyParams::simple(Family::P, l)))
            .collect::<Result<_, _>>()?,
        AlgebraKind::Sl2Smash | AlgebraKind::Osp12Smash => {
            let base = crate::factors::base_preset(alg)?;
            let mut out = Vec::new();
            for l in 0..p {
                let m = if alg.kind == AlgebraKind::Sl2Smash {
                    if l == p - 1 {
                        make_module(&base, FamilyParams::simple(Family::V0, l))?
                    } else {
                        make_module(&base, FamilyParams::simple(Family::P0, l))?
                    }
                } else {
                    make_module(&base, FamilyParams::simple(Family::P, l))?
                };
                out.push(m.to_smash(alg)?);
                out.push(m.parity_change().to_smash(alg)?);
            }
            out
        }
        AlgebraKind::Qci | AlgebraKind::Graded => vec![Module::regular(alg)],
        AlgebraKind::Enveloping => {
            return Err(AlgError::Unsupported("no projectives for untruncated algebras".into()))
        }
    };
    // match each projective to its head and find a cyclic generator
    let mut out = Vec::new();
    for m in raw {
        let heads = head_multiplicities(&m, &ss);
        let nz: Vec<usize> = heads
            .iter()
            .enumerate()
            .filter(|(_, &k)| k > 0)
            .map(|(i, _)| i)
            .collect();
        if nz.len() != 1 || heads[nz[0]] != 1 {
            return Err(AlgError::Internal(format!(
                "projective {} does not have a simple head",
                m.label
            )));
        }
        let generator = find_cyclic_generator(&m).ok_or_else(|| {
            AlgError::Internal(format!("projective {} has no cyclic basis generator", m.label))
        })?;
        out.push(Projective { module: m, head: nz[0], generator });
    }
    // order by head index so that covers are reproducible
    out.sort_by_key(|pr| pr.head);
    Ok(out)
}

fn find_cyclic_generator(m: &Module) -> Option<usize> {
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
        if span.rank() == m.dim {
            return Some(start);
        }
    }
    None
}

/// A projective cover: the cover module, the surjection, and the multiset of
/// summands as simple-head indices.
#[derive(Debug, Clone)]
pub struct Cover {
    pub module: Module,
    pub surjection: Matrix,
    pub summands: Vec<usize>,
}

fn zero_module(alg: &AlgRef) -> Module {
    Module::new(
        alg,
        (0..alg.ngens()).map(|_| Matrix::zeros(alg.field, 0, 0)).collect(),
        vec![],
        "0",
    )
}

/// Projective cover of M (empty cover for M = 0).
pub fn projective_cover(
    m: &Module,
    ss: &[Module],
    projs: &[Projective],
) -> Result<Cover, AlgError> {
    let f = m.alg.field;
    if m.dim == 0 {
        return Ok(Cover {
            module: zero_module(&m.alg),
            surjection: Matrix::zeros(f, 0, 0),
            summands: vec![],
        });
    }
    let mults = head_multiplicities(m, ss);
    // head coordinates: quotient map M -> M/rad(M)
    let rad = radical_basis(m, ss);
    let (head_mod, head_proj) = m.quotient(&rad, "hd");
    let mut accepted: Vec<(usize, Matrix)> = Vec::new();
    // span of head classes already covered, closed under the head action
    let mut head_span = Span::new(f, head_proj.rows);
    let mut saturate = |span: &mut Span, v: Vec<u64>| {
        let mut queue = vec![v];
        while let Some(w) = queue.pop() {
            if span.insert(&w) {
                for a in &head_mod.action {
                    queue.push(a.mul_vec(&w));
                }
            }
        }
    };
    for (si, &mult) in mults.iter().enumerate() {
        if mult == 0 {
            continue;
        }
        let pr = &projs[si];
        let homs = hom_basis(&pr.module, m);
        let mut taken = 0;
        for t in &homs {
            if taken == mult {
                break;
            }
            // head class of the generator image
            let gen_img = t.col(pr.generator);
            let class = head_proj.mul_vec(&gen_img);
            if !head_span.contains(&class) {
                saturate(&mut head_span, class);
                accepted.push((si, t.clone()));
                taken += 1;
            }
        }
        if taken != mult {
            return Err(AlgError::Internal(format!(
                "cover of {} found {taken} of {mult} copies for head {}",
                m.label, ss[si].label
            )));
        }
    }
    if head_span.rank() != head_proj.rows {
        return Err(AlgError::Internal(format!("cover of {} is not surjective", m.label)));
    }
    let mut it = accepted.iter();
    let first = it.next().expect("nonzero module has a cover");
    let mut cover_mod = projs[first.0].module.clone();
    for (si, _) in it.clone() {
        cover_mod = cover_mod.direct_sum(&projs[*si].module)?;
    }
    let pieces: Vec<&Matrix> = accepted.iter().map(|(_, t)| t).collect();
    let surjection = Matrix::hstack(&pieces);
    let summands = accepted.iter().map(|(si, _)| *si).collect();
    Ok(Cover { module: cover_mod, surjection, summands })
}

/// A minimal projective resolution P_D -> ... -> P_0 -> M.
#[derive(Debug)]
pub struct Resolution {
    /// P_0 .. P_D
    pub covers: Vec<Module>,
    /// summand head-indices per degree
    pub summands: Vec<Vec<usize>>,
    /// d_n : P_n -> P_{n-1} for n >= 1
    pub diffs: Vec<Matrix>,
    /// augmentation P_0 -> M
    pub aug: Matrix,
    pub total_dims: Vec<usize>,
}

impl Resolution {
    pub fn ranks(&self) -> Vec<usize> {
        self.summands.iter().map(|s| s.len()).collect()
    }
}

/// Compute the minimal resolution of M to homological degree `depth`.
pub fn minimal_resolution(m: &Module, depth: usize) -> Result<Resolution, AlgError> {
    let ss = simples(&m.alg)?;
    let projs = projectives(&m.alg)?;
    minimal_resolution_with(m, depth, &ss, &projs)
}

/// Same, with precomputed simple/projective catalogues.
pub fn minimal_resolution_with(
    m: &Module,
    depth: usize,
    ss: &[Module],
    projs: &[Projective],
) -> Result<Resolution, AlgError> {
    let mut covers = Vec::new();
    let mut summands = Vec::new();
    let mut diffs = Vec::new();
    let mut total_dims = Vec::new();
    let mut current = m.clone();
    let mut aug = None;
    // inclusion of `current` into the previous cover (identity for M itself)
    let mut incl: Option<Matrix> = None;
    for n in 0..=depth {
        let cover = projective_cover(&current, ss, projs)?;
        total_dims.push(cover.module.dim);
        let to_prev = match &incl {
            None => cover.surjection.clone(),
            Some(i) => i.mul(&cover.surjection),
        };
        if n == 0 {
            aug = Some(to_prev);
        } else {
            diffs.push(to_prev);
        }
        let stop = cover.module.dim == 0;
        let ker = weight_refine(&cover.module, &cover.surjection.kernel_basis());
        let (kmod, kincl) = cover.module.submodule_on_basis(&ker, &format!("syz{}", n + 1));
        covers.push(cover.module);
        summands.push(cover.summands);
        if stop {
            for k in (n + 1)..=depth {
                let prev_dim = covers[k - 1].dim;
                covers.push(zero_module(&m.alg));
                summands.push(vec![]);
                diffs.push(Matrix::zeros(m.alg.field, prev_dim, 0));
                total_dims.push(0);
            }
            break;
        }
        current = kmod;
        incl = Some(kincl);
    }
    let res = Resolution {
        covers,
        summands,
        diffs,
        aug: aug.expect("degree zero always built"),
        total_dims,
    };
    // sanity: complex property and minimality
    for n in 1..res.diffs.len() {
        if !res.diffs[n - 1].mul(&res.diffs[n]).is_zero() {
            return Err(AlgError::Internal(format!("d{} o d{} != 0", n, n + 1)));
        }
    }
    if let Some(d1) = res.diffs.first() {
        if !res.aug.mul(d1).is_zero() {
            return Err(AlgError::Internal("aug o d1 != 0".into()));
        }
    }
    for (n, d) in res.diffs.iter().enumerate() {
        let target = &res.covers[n];
        if d.cols == 0 {
            continue;
        }
        for s in ss {
            for h in hom_basis(target, s) {
                if !h.mul(d).is_zero() {
                    return Err(AlgError::Internal(format!(
                        "resolution not minimal at degree {}",
                        n + 1
                    )));
                }
            }
        }
    }
    Ok(res)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pbw::{build_qci, osp12, sl2};

    #[test]
    fn projectives_match_heads() {
        for alg in [sl2(3).unwrap(), osp12(3).unwrap()] {
            let ps = projectives(&alg).unwrap();
            assert_eq!(ps.len(), 3);
            for (i, pr) in ps.iter().enumerate() {
                assert_eq!(pr.head, i);
            }
        }
    }

    #[test]
    fn cover_of_simple_is_projective() {
        let a = osp12(3).unwrap();
        let ss = simples(&a).unwrap();
        let ps = projectives(&a).unwrap();
        for (i, s) in ss.iter().enumerate() {
            let c = projective_cover(s, &ss, &ps).unwrap();
            assert_eq!(c.summands, vec![i]);
            assert_eq!(c.module.dim, 12);
        }
    }

    #[test]
    fn resolution_of_projective_stops() {
        let a = osp12(3).unwrap();
        let ps = projectives(&a).unwrap();
        let res = minimal_resolution(&ps[1].module, 5).unwrap();
        assert_eq!(res.total_dims, vec![12, 0, 0, 0, 0, 0]);
        assert_eq!(res.ranks(), vec![1, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn qci_22_trivial_resolution_grows_linearly() {
        let q = build_qci(3, &[2, 2], &[vec![0, 2], vec![]]).unwrap();
        let t = Module::trivial(&q);
        let res = minimal_resolution(&t, 6).unwrap();
        assert_eq!(res.ranks(), vec![1, 2, 3, 4, 5, 6, 7]);
        assert_eq!(res.total_dims, vec![4, 8, 12, 16, 20, 24, 28]);
    }
}
