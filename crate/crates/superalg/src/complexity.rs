//! Complexity estimation from minimal-resolution growth, and the wildness
//! criterion it feeds.

use crate::error::AlgError;
use crate::module::Module;
use crate::resolution::minimal_resolution;
use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct GrowthFit {
    pub total_dims: Vec<usize>,
    /// the polynomial-degree candidate c with the last three c-th finite
    /// differences equal; complexity = c + 1
    pub difference_order: usize,
    pub complexity: usize,
}

/// Fit the dimension sequence of the minimal resolution of M with finite
/// differences; resolution dimension sequences here are eventually exactly
/// polynomial, so "stable" means the last three c-th differences are equal.
pub fn complexity_estimate(m: &Module, depth: usize) -> Result<GrowthFit, AlgError> {
    let res = minimal_resolution(m, depth)?;
    fit_growth(&res.total_dims)
}

pub fn fit_growth(dims: &[usize]) -> Result<GrowthFit, AlgError> {
    let mut seq: Vec<i64> = dims.iter().map(|&d| d as i64).collect();
    for c in 0..seq.len() {
        if seq.len() >= 3 {
            let k = seq.len();
            if seq[k - 1] == seq[k - 2] && seq[k - 2] == seq[k - 3] {
                return Ok(GrowthFit {
                    total_dims: dims.to_vec(),
                    difference_order: c,
                    complexity: c + 1,
                });
            }
        } else {
            break;
        }
        seq = seq.windows(2).map(|w| w[1] - w[0]).collect();
    }
    Err(AlgError::Internal(format!(
        "inconclusive growth for dimension sequence {:?}",
        dims
    )))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Wildness {
    Wild,
    NotDecided,
}

#[derive(Debug, Clone, Serialize)]
pub struct WildnessVerdict {
    pub verdict: Wildness,
    pub fit: GrowthFit,
}

/// Wild when the trivial module has complexity >= 3; never asserts tameness.
pub fn wildness_verdict(alg: &crate::pbw::AlgRef, depth: usize) -> Result<WildnessVerdict, AlgError> {
    let triv = Module::trivial(alg);
    let fit = complexity_estimate(&triv, depth)?;
    Ok(WildnessVerdict {
        verdict: if fit.complexity >= 3 { Wildness::Wild } else { Wildness::NotDecided },
        fit,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fit_linear_sequence() {
        // dims of a complexity-2 resolution (linear growth)
        let f = fit_growth(&[4, 8, 12, 16, 20, 24, 28]).unwrap();
        assert_eq!(f.complexity, 2);
    }

    #[test]
    fn fit_projective_sequence() {
        let f = fit_growth(&[12, 0, 0, 0, 0, 0]).unwrap();
        assert_eq!(f.complexity, 1);
    }

    #[test]
    fn fit_quadratic_sequence() {
        let dims: Vec<usize> = (0..=8).map(|n| (n + 1) * (n + 2) / 2 * 8).collect();
        let f = fit_growth(&dims).unwrap();
        assert_eq!(f.complexity, 3);
    }

    #[test]
    fn qci_triple_is_wild() {
        let q = crate::pbw::build_qci(3, &[2, 2, 2], &[vec![0, 2, 2], vec![0, 0, 2], vec![]]).unwrap();
        let v = wildness_verdict(&q, 8).unwrap();
        assert_eq!(v.verdict, Wildness::Wild);
        assert_eq!(v.fit.complexity, 3);
    }
}
