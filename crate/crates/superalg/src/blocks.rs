//! Block decomposition: connected components of the simple-module graph with
//! an edge wherever a projective cover mixes two simples (equivalently, a
//! nonzero first extension in either direction).

use crate::error::AlgError;
use crate::factors::{composition_factors, radical_basis, simples};
use crate::hom::hom_basis;
use crate::pbw::AlgRef;
use crate::resolution::projectives;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockPartition {
    /// sorted blocks of simple-module indices
    pub blocks: Vec<Vec<usize>>,
    pub labels: Vec<String>,
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }
    fn find(&mut self, i: usize) -> usize {
        if self.0[i] != i {
            let r = self.find(self.0[i]);
            self.0[i] = r;
        }
        self.0[i]
    }
    fn union(&mut self, i: usize, j: usize) {
        let (a, b) = (self.find(i), self.find(j));
        if a != b {
            self.0[a.min(b)] = a.min(b);
            self.0[a.max(b)] = a.min(b);
        }
    }
}

/// Blocks via shared composition factors of projective covers.
pub fn blocks(alg: &AlgRef) -> Result<BlockPartition, AlgError> {
    let ss = simples(alg)?;
    let ps = projectives(alg)?;
    let mut uf = UnionFind::new(ss.len());
    for pr in &ps {
        for (&j, _) in composition_factors(&pr.module, &ss).iter() {
            uf.union(pr.head, j);
        }
    }
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut reps: Vec<usize> = Vec::new();
    for i in 0..ss.len() {
        let r = uf.find(i);
        match reps.iter().position(|&x| x == r) {
            Some(k) => blocks[k].push(i),
            None => {
                reps.push(r);
                blocks.push(vec![i]);
            }
        }
    }
    for b in blocks.iter_mut() {
        b.sort();
    }
    blocks.sort();
    Ok(BlockPartition {
        blocks,
        labels: ss.iter().map(|s| s.label.clone()).collect(),
    })
}

/// Ext^1-linking graph computed from radical layers of the covers; used as a
/// cross-check that the two formulations give the same partition.
pub fn ext1_matrix(alg: &AlgRef) -> Result<Vec<Vec<usize>>, AlgError> {
    let ss = simples(alg)?;
    let ps = projectives(alg)?;
    let mut out = vec![vec![0; ss.len()]; ss.len()];
    for pr in &ps {
        // Ext^1(S_head, S_j) = multiplicity of S_j in rad(P)/rad^2(P)
        let rad = radical_basis(&pr.module, &ss);
        let (rad_mod, _) = pr.module.submodule_on_basis(&rad, "radP");
        let rad2 = radical_basis(&rad_mod, &ss);
        let (top, _) = rad_mod.quotient(&rad2, "radP/rad2P");
        for (j, s) in ss.iter().enumerate() {
            out[pr.head][j] = hom_basis(&top, s).len();
        }
    }
    Ok(out)
}

pub fn blocks_from_ext1(alg: &AlgRef) -> Result<BlockPartition, AlgError> {
    let ss = simples(alg)?;
    let ext1 = ext1_matrix(alg)?;
    let mut uf = UnionFind::new(ss.len());
    for i in 0..ss.len() {
        for j in 0..ss.len() {
            if ext1[i][j] > 0 {
                uf.union(i, j);
            }
        }
    }
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut reps: Vec<usize> = Vec::new();
    for i in 0..ss.len() {
        let r = uf.find(i);
        match reps.iter().position(|&x| x == r) {
            Some(k) => blocks[k].push(i),
            None => {
                reps.push(r);
                blocks.push(vec![i]);
            }
        }
    }
    for b in blocks.iter_mut() {
        b.sort();
    }
    blocks.sort();
    Ok(BlockPartition {
        blocks,
        labels: ss.iter().map(|s| s.label.clone()).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pbw::{osp12, sl2};

    #[test]
    fn osp_blocks_p3() {
        let a = osp12(3).unwrap();
        let b = blocks(&a).unwrap();
        assert_eq!(b.blocks, vec![vec![0, 2], vec![1]]);
        assert_eq!(blocks_from_ext1(&a).unwrap().blocks, b.blocks);
    }

    #[test]
    fn sl2_blocks_p3() {
        // pairs {lam, p-2-lam} plus the Steinberg module alone
        let a = sl2(3).unwrap();
        let b = blocks(&a).unwrap();
        assert_eq!(b.blocks, vec![vec![0, 1], vec![2]]);
    }

    #[test]
    fn osp_blocks_p5() {
        let a = osp12(5).unwrap();
        let b = blocks(&a).unwrap();
        assert_eq!(b.blocks.len(), 3);
        assert_eq!(b.blocks, vec![vec![0, 4], vec![1, 3], vec![2]]);
    }
}
