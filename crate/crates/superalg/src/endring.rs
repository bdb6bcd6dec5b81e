//! Endomorphism rings, locality, radicals, and Krull-Schmidt decomposition.
//!
//! Idempotents are produced exactly: for z in End(M), the subalgebra F_p[z]
//! is F_p[t]/(minpoly), so a CRT splitting of the minimal polynomial yields an
//! honest idempotent with no lifting. A module is certified indecomposable by
//! exhibiting its local End ring: the span of (b - eigenvalue(b)) over a basis
//! must be a nilpotent ideal of codimension one. A non-split quotient
//! (irreducible minimal polynomial factor of degree > 1 everywhere) is
//! reported loudly, never silently accepted.

use crate::error::AlgError;
use crate::field::Fp;
use crate::hom::{flatten, hom_basis, unflatten};
use crate::matrix::{Matrix, Span};
use crate::module::{weight_refine, Module};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

// --- dense polynomials over F_p, ascending coefficients ---------------

pub(crate) mod poly {
    use crate::field::Fp;

    pub fn trim(a: &mut Vec<u64>) {
        while a.last() == Some(&0) {
            a.pop();
        }
    }

    pub fn deg(a: &[u64]) -> usize {
        a.len().saturating_sub(1)
    }

    pub fn eval(f: Fp, a: &[u64], x: u64) -> u64 {
        let mut acc = 0;
        for &c in a.iter().rev() {
            acc = f.add(f.mul(acc, x), c);
        }
        acc
    }

    pub fn monic(f: Fp, a: &[u64]) -> Vec<u64> {
        let mut a = a.to_vec();
        trim(&mut a);
        if a.is_empty() {
            return a;
        }
        let inv = f.inv(*a.last().unwrap());
        for c in a.iter_mut() {
            *c = f.mul(*c, inv);
        }
        a
    }

    pub fn divmod(f: Fp, a: &[u64], b: &[u64]) -> (Vec<u64>, Vec<u64>) {
        let mut r = a.to_vec();
        trim(&mut r);
        let mut b = b.to_vec();
        trim(&mut b);
        assert!(!b.is_empty(), "division by zero polynomial");
        let mut q = vec![0u64; r.len().saturating_sub(b.len()) + 1];
        let binv = f.inv(*b.last().unwrap());
        while r.len() >= b.len() && !r.is_empty() {
            let c = f.mul(*r.last().unwrap(), binv);
            let shift = r.len() - b.len();
            q[shift] = c;
            for i in 0..b.len() {
                let t = f.mul(c, b[i]);
                r[shift + i] = f.sub(r[shift + i], t);
            }
            trim(&mut r);
        }
        trim(&mut q);
        (q, r)
    }

    pub fn mul(f: Fp, a: &[u64], b: &[u64]) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return vec![];
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(x, y));
            }
        }
        out
    }

    pub fn gcd(f: Fp, a: &[u64], b: &[u64]) -> Vec<u64> {
        let mut a = a.to_vec();
        let mut b = b.to_vec();
        trim(&mut a);
        trim(&mut b);
        while !b.is_empty() {
            let (_, r) = divmod(f, &a, &b);
            a = b;
            b = r;
        }
        monic(f, &a)
    }

    /// Extended gcd: (g, u, v) with u*a + v*b = g.
    pub fn xgcd(f: Fp, a: &[u64], b: &[u64]) -> (Vec<u64>, Vec<u64>, Vec<u64>) {
        let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
        trim(&mut r0);
        trim(&mut r1);
        let (mut s0, mut s1) = (vec![1u64], vec![]);
        let (mut t0, mut t1) = (vec![], vec![1u64]);
        while !r1.is_empty() {
            let (q, r) = divmod(f, &r0, &r1);
            let news = sub(f, &s0, &mul(f, &q, &s1));
            let newt = sub(f, &t0, &mul(f, &q, &t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, news);
            t0 = std::mem::replace(&mut t1, newt);
        }
        // normalize to monic gcd
        if r0.is_empty() {
            return (r0, s0, t0);
        }
        let lead = *r0.last().unwrap();
        let inv = f.inv(lead);
        let scale = |v: &[u64]| v.iter().map(|&c| f.mul(c, inv)).collect::<Vec<_>>();
        (scale(&r0), scale(&s0), scale(&t0))
    }

    pub fn sub(f: Fp, a: &[u64], b: &[u64]) -> Vec<u64> {
        let n = a.len().max(b.len());
        let mut out = vec![0u64; n];
        for i in 0..n {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            out[i] = f.sub(x, y);
        }
        trim(&mut out);
        out
    }

    pub fn derivative(f: Fp, a: &[u64]) -> Vec<u64> {
        let mut out: Vec<u64> = a
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| f.mul(i as u64 % f.p(), c))
            .collect();
        trim(&mut out);
        out
    }

    /// t^{p^d} mod s, by repeated squaring.
    pub fn frobenius_power(f: Fp, s: &[u64], d: u32) -> Vec<u64> {
        let mut result = vec![1u64];
        let mut base = vec![0u64, 1]; // t
        let mut e = f.p().pow(d);
        while e > 0 {
            if e & 1 == 1 {
                result = divmod(f, &mul(f, &result, &base), s).1;
            }
            base = divmod(f, &mul(f, &base, &base), s).1;
            e >>= 1;
        }
        trim(&mut result);
        result
    }
}

/// Minimal polynomial of a square matrix, monic, ascending coefficients.
pub fn min_poly(z: &Matrix) -> Vec<u64> {
    let f = z.field;
    let d = z.rows;
    let mut span = Span::new(f, d * d);
    let mut powers = vec![Matrix::identity(f, d)];
    loop {
        let cur = powers.last().unwrap().clone();
        let v = flatten(&cur);
        if let Some(coords) = span.coordinates(&v) {
            // cur = sum coords_k * basis_k where basis is echelonized; recover
            // in terms of raw powers by re-solving against the power list.
            let n = powers.len() - 1;
            let mut mat = Matrix::zeros(f, d * d, n);
            for (j, pw) in powers.iter().take(n).enumerate() {
                mat.set_col(j, &flatten(pw));
            }
            let rhs = Matrix::from_fn(f, d * d, 1, |i, _| v[i]);
            match mat.solve(&rhs) {
                crate::matrix::SolveResult::Solution { particular, .. } => {
                    let mut mp = vec![0u64; n + 1];
                    for k in 0..n {
                        mp[k] = f.neg(particular[(k, 0)]);
                    }
                    mp[n] = 1;
                    let _ = coords;
                    return mp;
                }
                _ => unreachable!("power in span must be solvable"),
            }
        }
        span.insert(&v);
        powers.push(cur.mul(z));
    }
}

/// Evaluate a polynomial at a matrix.
pub fn poly_at_matrix(a: &[u64], z: &Matrix) -> Matrix {
    let f = z.field;
    let mut acc = Matrix::zeros(f, z.rows, z.rows);
    for &c in a.iter().rev() {
        acc = acc.mul(z);
        for i in 0..z.rows {
            acc[(i, i)] = f.add(acc[(i, i)], c);
        }
    }
    acc
}

/// Try to extract a nontrivial idempotent from F_p[z].
///
/// Returns `Ok(Some(e))` on success, `Ok(None)` if the minimal polynomial is a
/// power of a single linear factor, and `Err` if it is primary with an
/// irreducible factor of degree > 1 (non-split evidence for the caller).
fn idempotent_from(z: &Matrix) -> Result<Option<Matrix>, AlgError> {
    let f = z.field;
    let m = min_poly(z);
    if poly::deg(&m) == 0 {
        return Ok(None);
    }
    let s = {
        let d = poly::derivative(f, &m);
        if d.is_empty() {
            // m is a p-th power; take its p-th root pattern via radical of m:
            // fall back to the full m (still correct, CRT only needs coprime
            // factors of m itself).
            m.clone()
        } else {
            let g = poly::gcd(f, &m, &d);
            poly::divmod(f, &m, &g).0
        }
    };
    // Try a linear-factor split first.
    let roots: Vec<u64> = (0..f.p()).filter(|&c| poly::eval(f, &s, c) == 0).collect();
    if let Some(&c) = roots.first() {
        // m = (t - c)^a * g with g(c) != 0
        let lin = vec![f.neg(c), 1];
        let mut g = m.clone();
        let mut a = 0;
        loop {
            let (q, r) = poly::divmod(f, &g, &lin);
            if r.is_empty() {
                g = q;
                a += 1;
            } else {
                break;
            }
        }
        if poly::deg(&g) == 0 {
            // primary with a single linear factor: no split from this element
            return Ok(None);
        }
        let mut pa = vec![1u64];
        for _ in 0..a {
            pa = poly::mul(f, &pa, &lin);
        }
        let (one, _u, v) = poly::xgcd(f, &pa, &g);
        assert_eq!(one, vec![1], "factors must be coprime");
        // e = v*g mod m is 1 mod (t-c)^a and 0 mod g
        let e_poly = poly::divmod(f, &poly::mul(f, &v, &g), &m).1;
        let e = poly_at_matrix(&e_poly, z);
        debug_assert_eq!(e.mul(&e), e);
        if e.is_zero() || e == Matrix::identity(f, z.rows) {
            return Ok(None);
        }
        return Ok(Some(e));
    }
    // No roots: look for a distinct-degree split of s.
    let sd = poly::deg(&s);
    for d in 1..=sd / 2 + 1 {
        let frob = poly::frobenius_power(f, &s, d as u32);
        // gcd(s, t^{p^d} - t)
        let tpoly = poly::sub(f, &frob, &[0, 1]);
        let g = poly::gcd(f, &s, &tpoly);
        if poly::deg(&g) > 0 && poly::deg(&g) < sd {
            let h = poly::divmod(f, &s, &g).0;
            // lift coprime split of s to a split of m: m = g' * h' with
            // g' collecting all factors of m dividing powers of g.
            let mut gp = g.clone();
            loop {
                let cand = poly::gcd(f, &m, &poly::mul(f, &gp, &gp));
                if cand == gp {
                    break;
                }
                gp = cand;
            }
            let hp = poly::divmod(f, &m, &gp).0;
            let (one, _u, v) = poly::xgcd(f, &gp, &hp);
            if one != vec![1] {
                continue;
            }
            let e_poly = poly::divmod(f, &poly::mul(f, &v, &hp), &m).1;
            let e = poly_at_matrix(&e_poly, z);
            if !e.is_zero() && e != Matrix::identity(f, z.rows) {
                debug_assert_eq!(e.mul(&e), e);
                return Ok(Some(e));
            }
            let _ = h;
        }
    }
    // primary, non-linear
    Err(AlgError::Unsupported(format!(
        "non-split quotient: minimal polynomial is primary of degree {} with no F_p root",
        poly::deg(&m)
    )))
}

/// One direct-sum split of M, or None if no idempotent was found in the
/// sampling budget (which certifies locality separately).
fn try_split(m: &Module, endo: &[Matrix], seed: u64) -> Result<Option<Matrix>, AlgError> {
    if endo.len() <= 1 {
        return Ok(None);
    }
    let f = m.alg.field;
    let mut nonsplit_evidence = None;
    // basis elements first, then seeded random combinations
    let mut candidates: Vec<Matrix> = endo.to_vec();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..64 {
        let mut z = Matrix::zeros(f, m.dim, m.dim);
        for b in endo {
            let c = rng.gen_range(0..f.p());
            if c != 0 {
                z = z.add(&b.scale(c));
            }
        }
        candidates.push(z);
    }
    for z in &candidates {
        match idempotent_from(z) {
            Ok(Some(e)) => return Ok(Some(e)),
            Ok(None) => {}
            Err(err) => nonsplit_evidence = Some(err),
        }
    }
    if endo.len() > 1 {
        // No split found. If the local certificate also fails, surface the
        // strongest evidence we have.
        if !local_certificate(m, endo) {
            return Err(nonsplit_evidence.unwrap_or_else(|| {
                AlgError::Internal("End ring is not local but no idempotent was found".into())
            }));
        }
    }
    Ok(None)
}

/// Certify that End(M) is local and split: every basis endomorphism must have
/// a unique eigenvalue in F_p, and the span of (b - eigenvalue) must be a
/// nilpotent ideal of codimension one.
pub fn local_certificate(m: &Module, endo: &[Matrix]) -> bool {
    let f = m.alg.field;
    let dim_e = endo.len();
    if dim_e == 0 {
        return false;
    }
    let mut nil_basis: Vec<Vec<u64>> = Vec::new();
    for b in endo {
        let mp = min_poly(b);
        // must be (t - c)^k
        let roots: Vec<u64> = (0..f.p()).filter(|&c| poly::eval(f, &mp, c) == 0).collect();
        if roots.len() != 1 {
            return false;
        }
        let c = roots[0];
        let lin = vec![f.neg(c), 1];
        let mut pow = vec![1u64];
        for _ in 0..poly::deg(&mp) {
            pow = poly::mul(f, &pow, &lin);
        }
        if poly::monic(f, &mp) != pow {
            return false;
        }
        let mut shifted = b.clone();
        for i in 0..shifted.rows {
            shifted[(i, i)] = f.sub(shifted[(i, i)], c);
        }
        nil_basis.push(flatten(&shifted));
    }
    let n = m.dim * m.dim;
    let mut rad = Span::new(f, n);
    for v in &nil_basis {
        rad.insert(v);
    }
    if rad.rank() != dim_e - 1 {
        return false;
    }
    // closure under multiplication and nilpotency by saturation
    let mats: Vec<Matrix> = rad.basis().iter().map(|v| unflatten(f, v, m.dim, m.dim)).collect();
    for a in &mats {
        for b in &mats {
            if !rad.contains(&flatten(&a.mul(b))) {
                return false;
            }
        }
    }
    let mut layer: Vec<Matrix> = mats.clone();
    for _ in 0..dim_e + 1 {
        if layer.is_empty() {
            return true;
        }
        let mut next_span = Span::new(f, n);
        let mut next = Vec::new();
        for a in &mats {
            for b in &layer {
                let prod = a.mul(b);
                if !prod.is_zero() && next_span.insert(&flatten(&prod)) {
                    next.push(prod);
                }
            }
        }
        layer = next;
    }
    layer.is_empty()
}

/// A direct summand with its inclusion and projection.
#[derive(Debug, Clone)]
pub struct Summand {
    pub module: Module,
    pub inclusion: Matrix,
    pub projection: Matrix,
}

/// Full Krull-Schmidt decomposition into indecomposables.
pub fn decompose(m: &Module, seed: u64) -> Result<Vec<Summand>, AlgError> {
    let f = m.alg.field;
    if m.dim == 0 {
        return Ok(Vec::new());
    }
    let endo = hom_basis(m, m);
    let split = try_split(m, &endo, seed)?;
    match split {
        None => Ok(vec![Summand {
            module: m.clone(),
            inclusion: Matrix::identity(f, m.dim),
            projection: Matrix::identity(f, m.dim),
        }]),
        Some(e) => {
            let img = image_basis(&e);
            let ker = e.kernel_basis();
            let img = weight_refine(m, &img);
            let ker = weight_refine(m, &ker);
            let (m1, i1) = m.submodule_on_basis(&img, &format!("{}<a>", m.label));
            let (m2, i2) = m.submodule_on_basis(&ker, &format!("{}<b>", m.label));
            // coordinates: [I1 | I2] is invertible; its inverse stacks the
            // two projections.
            let s = Matrix::hstack(&[&i1, &i2]);
            let sinv = s.inverse().ok_or_else(|| AlgError::Internal("split basis not invertible".into()))?;
            let p1 = Matrix::from_fn(f, m1.dim, m.dim, |i, j| sinv[(i, j)]);
            let p2 = Matrix::from_fn(f, m2.dim, m.dim, |i, j| sinv[(m1.dim + i, j)]);
            let mut out = Vec::new();
            for (sub, incl, proj) in [(m1, i1, p1), (m2, i2, p2)] {
                let inner = decompose(&sub, seed.wrapping_add(1))?;
                for s in inner {
                    out.push(Summand {
                        module: s.module,
                        inclusion: incl.mul(&s.inclusion),
                        projection: s.projection.mul(&proj),
                    });
                }
            }
            Ok(out)
        }
    }
}

pub fn image_basis(e: &Matrix) -> Vec<Vec<u64>> {
    let mut span = Span::new(e.field, e.rows);
    for j in 0..e.cols {
        span.insert(&e.col(j));
    }
    span.basis().to_vec()
}

/// Is M indecomposable? Certified through End(M).
pub fn is_indecomposable(m: &Module, seed: u64) -> Result<bool, AlgError> {
    let endo = hom_basis(m, m);
    if endo.len() == 1 {
        return Ok(true);
    }
    match try_split(m, &endo, seed)? {
        Some(_) => Ok(false),
        None => Ok(local_certificate(m, &endo)
            .then_some(true)
            .ok_or_else(|| AlgError::Internal("no idempotent and no local certificate".into()))?),
    }
}

/// The End ring with multiplication table, radical and locality data.
#[derive(Debug)]
pub struct EndRing {
    pub field: Fp,
    pub basis: Vec<Matrix>,
    /// structure constants: mult[i][j] = coordinates of basis_i * basis_j
    pub mult: Vec<Vec<Vec<u64>>>,
    /// radical basis vectors in End-ring coordinates
    pub radical: Vec<Vec<u64>>,
    pub is_local: bool,
    pub summand_count: usize,
}

impl EndRing {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn semisimple_quotient_dim(&self) -> usize {
        self.dim() - self.radical.len()
    }

    /// Coordinates of an endomorphism in the chosen basis.
    pub fn coords(&self, t: &Matrix) -> Option<Vec<u64>> {
        let dim = t.rows;
        let mut span = Span::new(self.field, dim * dim);
        for b in &self.basis {
            span.insert(&flatten(b));
        }
        // solve against the raw (non-echelon) basis
        let mut mat = Matrix::zeros(self.field, dim * dim, self.basis.len());
        for (j, b) in self.basis.iter().enumerate() {
            mat.set_col(j, &flatten(b));
        }
        let rhs = Matrix::from_fn(self.field, dim * dim, 1, |i, _| flatten(t)[i]);
        match mat.solve(&rhs) {
            crate::matrix::SolveResult::Solution { particular, .. } => {
                Some((0..self.basis.len()).map(|k| particular[(k, 0)]).collect())
            }
            _ => None,
        }
    }
}

/// Compute End(M) with radical and locality, via the decomposition of M.
pub fn end_ring(m: &Module, seed: u64) -> Result<EndRing, AlgError> {
    let f = m.alg.field;
    let basis = hom_basis(m, m);
    let dim_e = basis.len();
    let summands = decompose(m, seed)?;
    // group summands into isomorphism classes
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut witnesses: Vec<Vec<Matrix>> = Vec::new(); // iso: class rep -> member
    for (i, s) in summands.iter().enumerate() {
        let mut placed = false;
        for (ci, class) in classes.iter_mut().enumerate() {
            let rep = &summands[class[0]];
            if rep.module.dim == s.module.dim {
                if let Some(w) = find_iso(&rep.module, &s.module, seed ^ 0x5eed) {
                    class.push(i);
                    witnesses[ci].push(w);
                    placed = true;
                    break;
                }
            }
        }
        if !placed {
            classes.push(vec![i]);
            witnesses.push(vec![Matrix::identity(f, s.module.dim)]);
        }
    }
    // radical basis: all maps summand_s -> summand_t that are radical
    // morphisms (everything between non-isomorphic summands; the radical of
    // the local End ring translated along the iso otherwise).
    let mut rad = Span::new(f, m.dim * m.dim);
    let rep_rads: Vec<Vec<Matrix>> = classes
        .iter()
        .map(|class| {
            let rep = &summands[class[0]].module;
            let endo_rep = hom_basis(rep, rep);
            local_radical_matrices(rep, &endo_rep)
        })
        .collect();
    for (ci, class) in classes.iter().enumerate() {
        // within a class Hom(M_s, M_t) = w_t o End(rep) o w_s^{-1}; the
        // radical part comes from rad End(rep)
        for (ai, &si) in class.iter().enumerate() {
            for (bi, &ti) in class.iter().enumerate() {
                let src = &summands[si];
                let tgt = &summands[ti];
                let ws = &witnesses[ci][ai];
                let wt = &witnesses[ci][bi];
                let wsi = ws.inverse().expect("iso witness invertible");
                for r in &rep_rads[ci] {
                    let map = tgt.inclusion.mul(&wt.mul(&r.mul(&wsi)).mul(&src.projection));
                    rad.insert(&flatten(&map));
                }
            }
        }
        // maps between different classes are entirely radical
        for (cj, other) in classes.iter().enumerate() {
            if ci == cj {
                continue;
            }
            for &si in class {
                for &ti in other {
                    let src = &summands[si];
                    let tgt = &summands[ti];
                    for h in hom_basis(&src.module, &tgt.module) {
                        let map = tgt.inclusion.mul(&h).mul(&src.projection);
                        rad.insert(&flatten(&map));
                    }
                }
            }
        }
    }
    let expected_ss: usize = classes.iter().map(|c| c.len() * c.len()).sum();
    if rad.rank() + expected_ss != dim_e {
        return Err(AlgError::Internal(format!(
            "radical dimension {} + semisimple {} != dim End {} for {}",
            rad.rank(),
            expected_ss,
            dim_e,
            m.label
        )));
    }
    // structure constants and radical coordinates
    let mut mat = Matrix::zeros(f, m.dim * m.dim, dim_e);
    for (j, b) in basis.iter().enumerate() {
        mat.set_col(j, &flatten(b));
    }
    let coords_of = |t: &Matrix| -> Vec<u64> {
        let rhs = Matrix::from_fn(f, m.dim * m.dim, 1, |i, _| flatten(t)[i]);
        match mat.solve(&rhs) {
            crate::matrix::SolveResult::Solution { particular, .. } => {
                (0..dim_e).map(|k| particular[(k, 0)]).collect()
            }
            _ => panic!("endomorphism outside End basis"),
        }
    };
    let mult = basis
        .iter()
        .map(|a| basis.iter().map(|b| coords_of(&a.mul(b))).collect())
        .collect();
    let radical = rad
        .basis()
        .iter()
        .map(|v| coords_of(&unflatten(f, v, m.dim, m.dim)))
        .collect();
    Ok(EndRing {
        field: f,
        basis,
        mult,
        radical,
        is_local: summands.len() == 1,
        summand_count: summands.len(),
    })
}

/// Radical matrices of a local End ring (b - eigenvalue for each basis b,
/// echelonized).
fn local_radical_matrices(m: &Module, endo: &[Matrix]) -> Vec<Matrix> {
    let f = m.alg.field;
    let mut span = Span::new(f, m.dim * m.dim);
    for b in endo {
        let mp = min_poly(b);
        let root = (0..f.p()).find(|&c| poly::eval(f, &mp, c) == 0);
        if let Some(c) = root {
            let mut shifted = b.clone();
            for i in 0..shifted.rows {
                shifted[(i, i)] = f.sub(shifted[(i, i)], c);
            }
            span.insert(&flatten(&shifted));
        }
    }
    span.basis()
        .iter()
        .map(|v| unflatten(f, v, m.dim, m.dim))
        .collect()
}

/// Search Hom(M, N) for an invertible element: seeded random combinations,
/// then an exhaustive scalar sweep when the hom space is small.
pub fn find_iso(m: &Module, n: &Module, seed: u64) -> Option<Matrix> {
    if m.dim != n.dim {
        return None;
    }
    let f = m.alg.field;
    let homs = hom_basis(m, n);
    if homs.is_empty() {
        return None;
    }
    for h in &homs {
        if h.is_invertible() {
            return Some(h.clone());
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..64 {
        let mut t = Matrix::zeros(f, n.dim, m.dim);
        for h in &homs {
            let c = rng.gen_range(0..f.p());
            if c != 0 {
                t = t.add(&h.scale(c));
            }
        }
        if t.is_invertible() {
            return Some(t);
        }
    }
    let k = homs.len();
    let total = f.p().checked_pow(k as u32).filter(|&t| t <= 1 << 16);
    if let Some(total) = total {
        for code in 1..total {
            let mut c = code;
            let mut t = Matrix::zeros(f, n.dim, m.dim);
            for h in &homs {
                let coef = c % f.p();
                c /= f.p();
                if coef != 0 {
                    t = t.add(&h.scale(coef));
                }
            }
            if t.is_invertible() {
                return Some(t);
            }
        }
        return None;
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{make_module, Family, FamilyParams};
    use crate::pbw::osp12;

    #[test]
    fn minimal_polynomial_of_nilpotent_jordan_block() {
        let f = Fp::new(5);
        let m = Matrix::from_rows(f, &[vec![0, 1, 0], vec![0, 0, 1], vec![0, 0, 0]]);
        assert_eq!(min_poly(&m), vec![0, 0, 0, 1]); // t^3
    }

    #[test]
    fn decompose_block_diagonal_sum() {
        let a = osp12(5).unwrap();
        let v1 = make_module(&a, FamilyParams::simple(Family::V, 1)).unwrap();
        let v2 = make_module(&a, FamilyParams::simple(Family::V, 2)).unwrap();
        let sum = v1.direct_sum(&v2).unwrap();
        let parts = decompose(&sum, 7).unwrap();
        let mut dims: Vec<usize> = parts.iter().map(|s| s.module.dim).collect();
        dims.sort();
        assert_eq!(dims, vec![3, 5]);
        for s in &parts {
            s.module.check_relations().unwrap();
            // projection o inclusion = identity on the summand
            assert_eq!(
                s.projection.mul(&s.inclusion),
                Matrix::identity(a.field, s.module.dim)
            );
        }
    }

    #[test]
    fn projectives_are_indecomposable_with_local_end() {
        let a = osp12(3).unwrap();
        for lam in 0..3 {
            let p = make_module(&a, FamilyParams::simple(Family::P, lam)).unwrap();
            assert!(is_indecomposable(&p, 3).unwrap(), "P^{lam}");
        }
    }

    #[test]
    fn end_of_middle_projective_is_dim4_local() {
        let a = osp12(3).unwrap();
        let p1 = make_module(&a, FamilyParams::simple(Family::P, 1)).unwrap();
        let e = end_ring(&p1, 5).unwrap();
        assert_eq!(e.dim(), 4);
        assert!(e.is_local);
        assert_eq!(e.radical.len(), 3);
    }

    #[test]
    fn simple_modules_are_bricks() {
        let a = osp12(3).unwrap();
        let v = make_module(&a, FamilyParams::simple(Family::V, 2)).unwrap();
        let e = end_ring(&v, 11).unwrap();
        assert_eq!(e.dim(), 1);
        assert!(e.is_local);
        assert!(e.radical.is_empty());
    }
}
