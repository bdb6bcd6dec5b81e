//! The verification suites behind the batch front-end. Each suite runs a
//! family of exact checks at one prime and reports per-claim verdicts.

use crate::blocks::{blocks, blocks_from_ext1};
use crate::catalogue::members_of_dim;
use crate::cocycle::{PowerCocycle, XiHat};
use crate::complexity::{complexity_estimate, wildness_verdict, Wildness};
use crate::endring::{decompose, end_ring, EndRing};
use crate::error::AlgError;
use crate::extensions::{nonsplit_extension_check, ExtensionCheck};
use crate::ext::parity_action_on_ext;
use crate::factors::{composition_factor_labels, simples};
use crate::families::{expected_dim, make_module, Family, FamilyParams};
use crate::field::Fp;
use crate::frob::{pair_sum, FrobeniusContext};
use crate::hom::{hom_basis, hom_dim};
use crate::iso::{is_isomorphic, IsoOutcome};
use crate::koszul::{binomial, verify_relations, verify_weight_actions, Koszul, QciData};
use crate::matrix::Matrix;
use crate::module::Module;
use crate::oracle::{bar_ext_dims, syzygy_ranks};
use crate::pbw::{build_preset, osp12, sl2, smash, straighten, AlgElt};
use crate::report::{ClaimReport, SuiteReport};
use crate::resolution::{minimal_resolution, projectives};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const SUITE_NAMES: [&str; 9] = [
    "pbw",
    "modules",
    "blocks",
    "endrings",
    "qci",
    "cocycles",
    "frobenius",
    "complexity",
    "iso-sweep",
];

pub fn run_suite(name: &str, p: u64, depth: usize, seed: u64) -> Result<SuiteReport, AlgError> {
    match name {
        "pbw" => suite_pbw(p, seed, depth),
        "modules" => suite_modules(p, seed, depth),
        "blocks" => suite_blocks(p, seed, depth),
        "endrings" => suite_endrings(p, seed, depth),
        "qci" => suite_qci(p, seed, depth),
        "cocycles" => suite_cocycles(p, seed, depth),
        "frobenius" => suite_frobenius(p, seed, depth),
        "complexity" => suite_complexity(p, seed, depth),
        "iso-sweep" => suite_iso_sweep(p, seed, depth),
        other => Err(AlgError::Unsupported(format!("unknown suite {other:?}"))),
    }
}

fn sparse_random(alg: &crate::pbw::AlgRef, rng: &mut ChaCha8Rng, terms: usize) -> AlgElt {
    let d = alg.dim().unwrap();
    let mut x = AlgElt::zero(alg);
    for _ in 0..terms {
        let idx = rng.gen_range(0..d);
        let c = rng.gen_range(1..alg.field.p());
        x.add_term(alg.monomial_at(idx), c);
    }
    x
}

fn suite_pbw(p: u64, seed: u64, depth: usize) -> Result<SuiteReport, AlgError> {
    let mut s = SuiteReport::new("pbw", p, seed, depth);
    for name in ["sl2", "osp12", "sl2_smash", "osp12_smash"] {
        let a = build_preset(name, p)?;
        let expect: usize = a.gens.iter().map(|g| g.trunc.unwrap() as usize).product();
        s.push(ClaimReport::check(
            &format!("pbw.dim.{name}"),
            "dimension equals the product of truncation exponents",
            a.dim() == Some(expect),
            format!("dim = {:?}", a.dim()),
        ));
    }
    let o = osp12(p)?;
    let fe = straighten(&o, &[1, 0]);
    let expect = {
        let mut e = AlgElt::zero(&o);
        let mut m = o.zero_exps();
        m[2] = 1;
        e.add_term(m, 1);
        let mut m2 = o.zero_exps();
        m2[0] = 1;
        m2[1] = 1;
        e.add_term(m2, p - 1);
        e
    };
    s.push(ClaimReport::check(
        "pbw.straighten.fe",
        "the odd generators straighten with a Cartan correction",
        fe == expect,
        fe.to_string_pretty(),
    ));
    let ee = straighten(&o, &[0, 0]);
    s.push(ClaimReport::check(
        "pbw.straighten.ee",
        "odd squares fold into the even exponent range",
        ee.terms.len() == 1 && ee.terms.keys().next().unwrap()[0] == 2,
        ee.to_string_pretty(),
    ));
    // associativity on seeded sparse triples
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xa550c);
    for name in ["sl2", "osp12", "sl2_smash", "osp12_smash"] {
        let a = build_preset(name, p)?;
        let rounds = if p <= 5 { 500 } else { 120 };
        let mut ok = true;
        for _ in 0..rounds {
            let x = sparse_random(&a, &mut rng, 3);
            let y = sparse_random(&a, &mut rng, 3);
            let z = sparse_random(&a, &mut rng, 3);
            if x.mul(&y).mul(&z) != x.mul(&y.mul(&z)) {
                ok = false;
                break;
            }
        }
        s.push(ClaimReport::check(
            &format!("pbw.assoc.{name}"),
            "straightened multiplication is associative on sampled triples",
            ok,
            format!("{rounds} triples"),
        ));
    }
    // nilpotency of root elements
    let e_sl2 = AlgElt::generator(&sl2(p)?, 0);
    let o_e = AlgElt::generator(&o, 0);
    let o_f = AlgElt::generator(&o, 1);
    let even_sq = straighten(&o, &[0, 0]);
    s.push(ClaimReport::check(
        "pbw.nilpotent",
        "root vectors are nilpotent of the expected order",
        e_sl2.pow(p as u32).is_zero()
            && o_e.pow(2 * p as u32).is_zero()
            && o_f.pow(2 * p as u32).is_zero()
            && even_sq.pow(p as u32).is_zero(),
        "e^p, E^2p, F^2p, (E^2)^p",
    ));
    // restricted axioms
    let r1 = crate::restricted::sl2_data(p).verify(64);
    s.push(ClaimReport::check(
        "pbw.restricted.sl2",
        "restricted axioms hold for the sl2 data",
        r1.pass,
        format!("{:?}", r1.failures),
    ));
    let r2 = crate::restricted::osp12_data(p).verify(64);
    s.push(ClaimReport::check(
        "pbw.restricted.osp12",
        "restricted axioms hold for the osp(1|2) data",
        r2.pass,
        format!("{:?}", r2.failures),
    ));
    let mut bad = crate::restricted::sl2_data(p);
    bad.p_map[2] = vec![0, 0, 0];
    let r3 = bad.verify(64);
    s.push(ClaimReport::check(
        "pbw.restricted.negative",
        "corrupting the p-map is detected with a witness",
        !r3.pass && r3.failures.iter().any(|m| m.contains("(b)")),
        format!("{:?}", r3.failures),
    ));
    // smash conjugation
    let sm = smash(&o)?;
    let gi = sm.ngens() - 1;
    let g = AlgElt::generator(&sm, gi);
    let mut conj_ok = g.mul(&g) == AlgElt::unit(&sm);
    for i in 0..gi {
        let x = AlgElt::generator(&sm, i);
        let c = g.mul(&x).mul(&g);
        let want = if sm.gens[i].parity == 1 {
            x.scale(p - 1)
        } else {
            x
        };
        conj_ok &= c == want;
    }
    s.push(ClaimReport::check(
        "pbw.smash.conjugation",
        "the group-like conjugates generators by their parity sign",
        conj_ok,
        "all generators",
    ));
    // associated graded
    let gr = crate::pbw::associated_graded(&o, &[1, 1, 0])?;
    let fe_gr = straighten(&gr, &[1, 0]);
    let fe_ok = fe_gr.terms.len() == 1;
    let trivial = crate::pbw::associated_graded(&o, &[0, 0, 0])?;
    let q = crate::pbw::build_qci(p, &[2, 2], &[vec![0, p - 1], vec![]])?;
    let qg = crate::pbw::associated_graded(&q, &[1, 1])?;
    s.push(ClaimReport::check(
        "pbw.graded",
        "associated graded kills lower filtration parts and fixes graded input",
        fe_ok && trivial.rewrite == o.rewrite && qg.rewrite == q.rewrite,
        format!("graded FE = {}", fe_gr.to_string_pretty()),
    ));
    Ok(s)
}

fn family_sweep(p: u64) -> Vec<FamilyParams> {
    let nmax = if p == 3 { 3 } else { 2 };
    let tube_all = p == 3;
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
            if tube_all {
                for s1 in 1..p {
                    for s2 in 1..p {
                        out.push(FamilyParams::tube(Family::T, lam, (s1, s2), n));
                        out.push(FamilyParams::tube(Family::Tt, lam, (s1, s2), n));
                    }
                }
            } else {
                out.push(FamilyParams::tube(Family::T, lam, (1, lam + 1), n));
                out.push(FamilyParams::tube(Family::Tt, lam, (lam + 1, 1), n));
            }
        }
    }
    out
}

fn suite_modules(p: u64, seed: u64, depth: usize) -> Result<SuiteReport, AlgError> {
    let mut s = SuiteReport::new("modules", p, seed, depth);
    let o = osp12(p)?;
    let sl = sl2(p)?;
    let mut all_ok = true;
    let mut count = 0usize;
    let mut first_fail = String::new();
    for params in family_sweep(p) {
        let m = make_module(&o, params)?;
        count += 1;
        if m.dim != expected_dim(p, &params) {
            all_ok = false;
            first_fail = format!("{}: dim {}", params.label(), m.dim);
            break;
        }
        if let Err(e) = m.check_relations() {
            all_ok = false;
            first_fail = format!("{e}");
            break;
        }
    }
    for lam in 0..p {
        let v = make_module(&sl, FamilyParams::simple(Family::V0, lam))?;
        count += 1;
        if let Err(e) = v.check_relations() {
            all_ok = false;
            first_fail = format!("{e}");
        }
        if lam + 2 <= p {
            let pr = make_module(&sl, FamilyParams::simple(Family::P0, lam))?;
            count += 1;
            if let Err(e) = pr.check_relations() {
                all_ok = false;
                first_fail = format!("{e}");
            }
        }
    }
    s.push(ClaimReport::check(
        "modules.families",
        "every family member has the stated dimension and satisfies all relations",
        all_ok,
        if all_ok { format!("{count} modules checked") } else { first_fail },
    ));
    // h eigenvalues on a simple
    let lam = (p - 1) / 2;
    let v = make_module(&o, FamilyParams::simple(Family::V, lam))?;
    let h = &v.action[2];
    let diag_ok = h.is_diagonal()
        && (0..v.dim).all(|i| h[(i, i)] == Fp::new(p).of_i64(lam as i64 - i as i64));
    s.push(ClaimReport::check(
        "modules.weights",
        "the Cartan generator acts diagonally with the stated eigenvalues",
        diag_ok,
        format!("on {}", v.label),
    ));
    // parity change and dual
    let w = make_module(&o, FamilyParams::simple(Family::W, lam))?;
    let pi_ok = w.parity_change().parity_change().parity == w.parity;
    let dual_ok = w.dual().check_relations().is_ok() && v.dual().check_relations().is_ok();
    s.push(ClaimReport::check(
        "modules.involution",
        "parity change is an involution and duals satisfy all relations",
        pi_ok && dual_ok,
        "",
    ));
    // smash transport
    let sm = smash(&o)?;
    let vs = v.to_smash(&sm)?;
    let smash_ok = vs.check_relations().is_ok();
    s.push(ClaimReport::check(
        "modules.smash",
        "supermodules transport to the smash preset with the parity action",
        smash_ok,
        format!("{}", vs.label),
    ));
    // regular modules
    let reg_ok = Module::regular(&o).check_relations().is_ok()
        && Module::regular(&sl).check_relations().is_ok();
    s.push(ClaimReport::check(
        "modules.regular",
        "the regular representations satisfy all relations",
        reg_ok,
        format!("dims {} and {}", o.dim().unwrap(), sl.dim().unwrap()),
    ));
    // restriction commutes with direct sums
    let v2 = make_module(&o, FamilyParams::simple(Family::V, 1.min(p - 1)))?;
    let lhs = v.direct_sum(&v2)?.restrict_to_sl2(&sl)?;
    let rhs = v
        .restrict_to_sl2(&sl)?
        .direct_sum(&v2.restrict_to_sl2(&sl)?)?;
    s.push(ClaimReport::check(
        "modules.restrict_sum",
        "restriction commutes with direct sums as exact matrices",
        lhs.action == rhs.action,
        "",
    ));
    // JSON round trip
    let js = v.to_json();
    let text = serde_json::to_string(&js).unwrap();
    let parsed: crate::module::ModuleJson = serde_json::from_str(&text).unwrap();
    let back = Module::from_json(&o, &parsed, &v.label)?;
    s.push(ClaimReport::check(
        "modules.json",
        "module serialization round-trips bit-for-bit",
        back.action == v.action && back.parity == v.parity,
        format!("{} bytes", text.len()),
    ));
    Ok(s)
}

fn suite_blocks(p: u64, seed: u64, depth: usize) -> Result<SuiteReport, AlgError> {
    let mut s = SuiteReport::new("blocks", p, seed, depth);
    let o = osp12(p)?;
    let b = blocks(&o)?;
    let want = (p as usize + 1) / 2;
    let pairing_ok = b.blocks.iter().all(|blk| {
        blk.len() <= 2
            && blk
                .iter()
                .all(|&i| blk.contains(&((p - 1 - i as u64) as usize)))
    });
    s.push(ClaimReport::check(
        "blocks.osp.count",
        "the big preset has (p+1)/2 blocks pairing lambda with p-1-lambda",
        b.blocks.len() == want && pairing_ok,
        format!("{:?}", b.blocks),
    ));
    let sl = sl2(p)?;
    let bs = blocks(&sl)?;
    let pairing_sl = bs.blocks.iter().all(|blk| {
        if blk == &vec![(p - 1) as usize] {
            true
        } else {
            blk.iter().all(|&i| i as u64 <= p - 2 && blk.contains(&((p - 2 - i as u64) as usize)))
        }
    });
    s.push(ClaimReport::check(
        "blocks.sl2.count",
        "the even preset has (p+1)/2 blocks pairing lambda with p-2-lambda plus a projective simple",
        bs.blocks.len() == want && pairing_sl,
        format!("{:?}", bs.blocks),
    ));
    // the first-extension graph gives the same partition
    let b2 = blocks_from_ext1(&o)?;
    s.push(ClaimReport::check(
        "blocks.ext1_agrees",
        "linking by first extensions reproduces the cover-factor partition",
        b2.blocks == b.blocks,
        "",
    ));
    Ok(s)
}

fn lambda_shape_local(e: &EndRing) -> Result<String, AlgError> {
    // rad basis as abstract coordinates; lift products through the table
    let f = e.field;
    let dim = e.dim();
    if dim != 4 || !e.is_local || e.radical.len() != 3 {
        return Err(AlgError::Internal(format!(
            "expected a dim-4 local ring with 3-dim radical, got dim {dim}, local {}, rad {}",
            e.is_local,
            e.radical.len()
        )));
    }
    let mul = |a: &[u64], b: &[u64]| -> Vec<u64> {
        let mut out = vec![0u64; dim];
        for (i, &ca) in a.iter().enumerate() {
            if ca == 0 {
                continue;
            }
            for (j, &cb) in b.iter().enumerate() {
                if cb == 0 {
                    continue;
                }
                for (k, &ck) in e.mult[i][j].iter().enumerate() {
                    out[k] = f.add(out[k], f.mul(f.mul(ca, cb), ck));
                }
            }
        }
        out
    };
    // rad^2 inside rad
    let rad = &e.radical;
    let mut rad2 = crate::matrix::Span::new(f, dim);
    for a in rad {
        for b in rad {
            rad2.insert(&mul(a, b));
        }
    }
    if rad2.rank() != 1 {
        return Err(AlgError::Internal(format!("rad^2 has dim {}", rad2.rank())));
    }
    // pick u, v spanning rad / rad^2
    let mut cand = Vec::new();
    for a in rad {
        if !rad2.contains(a) {
            cand.push(a.clone());
        }
    }
    // search a basis change with x^2 = y^2 != 0 and xy = yx = 0
    for ci in 0..cand.len() {
        for cj in 0..cand.len() {
            if ci == cj {
                continue;
            }
            for a1 in 0..p_range(f) {
                for b1 in 0..p_range(f) {
                    for a2 in 0..p_range(f) {
                        for b2 in 0..p_range(f) {
                            let x = combine(f, &cand[ci], &cand[cj], a1, b1);
                            let y = combine(f, &cand[ci], &cand[cj], a2, b2);
                            if x.iter().all(|&c| c == 0) || y.iter().all(|&c| c == 0) {
                                continue;
                            }
                            let xx = mul(&x, &y);
                            let yx = mul(&y, &x);
                            if xx.iter().any(|&c| c != 0) || yx.iter().any(|&c| c != 0) {
                                continue;
                            }
                            let x2 = mul(&x, &x);
                            let y2 = mul(&y, &y);
                            if x2 == y2 && x2.iter().any(|&c| c != 0) {
                                return Ok(format!(
                                    "x = {a1}u+{b1}v, y = {a2}u+{b2}v with x^2 = y^2, xy = yx = 0"
                                ));
                            }
                        }
                    }
                }
            }
        }
    }
    Err(AlgError::Internal("no generator pair satisfies the loop relations".into()))
}

fn p_range(f: Fp) -> u64 {
    f.p()
}

fn combine(f: Fp, u: &[u64], v: &[u64], a: u64, b: u64) -> Vec<u64> {
    u.iter()
        .zip(v)
        .map(|(&x, &y)| f.add(f.mul(a, x), f.mul(b, y)))
        .collect()
}

fn suite_endrings(p: u64, seed: u64, depth: usize) -> Result<SuiteReport, AlgError> {
    let mut s = SuiteReport::new("endrings", p, seed, depth);
    let o = osp12(p)?;
    // Schur test on simples
    let ss = simples(&o)?;
    let mut schur = true;
    for (i, a) in ss.iter().enumerate() {
        for (j, b) in ss.iter().enumerate() {
            if hom_dim(a, b) != usize::from(i == j) {
                schur = false;
            }
        }
    }
    s.push(ClaimReport::check(
        "endrings.schur",
        "the p simples are pairwise orthogonal bricks",
        schur,
        format!("{} pairs", ss.len() * ss.len()),
    ));
    // middle Verma has a 2-dimensional End ring, others are bricks
    let mid = (p - 1) / 2;
    let wm = make_module(&o, FamilyParams::simple(Family::W, mid))?;
    let wtm = make_module(&o, FamilyParams::simple(Family::Wt, mid))?;
    let mut verma_ok = hom_dim(&wm, &wm) == 2 && hom_dim(&wtm, &wtm) == 2;
    for lam in 0..p {
        if lam != mid {
            let w = make_module(&o, FamilyParams::simple(Family::W, lam))?;
            verma_ok &= hom_dim(&w, &w) == 1;
        }
    }
    s.push(ClaimReport::check(
        "endrings.verma",
        "only the middle-weight half-free modules have End of dimension 2",
        verma_ok,
        "",
    ));
    // End(P^{mid}): dim 4, local, loop relations
    let pm = make_module(&o, FamilyParams::simple(Family::P, mid))?;
    let em = end_ring(&pm, seed)?;
    let shape = lambda_shape_local(&em);
    s.push(ClaimReport::check(
        "endrings.primary",
        "the primary block has a dim-4 local basic algebra with x^2 = y^2, xy = yx = 0",
        shape.is_ok(),
        match &shape {
            Ok(d) => d.clone(),
            Err(e) => format!("{e}"),
        },
    ));
    // End(P^lam + P^{p-1-lam}) has dim 8 for lam != mid
    let mut dims_ok = true;
    let mut detail = String::new();
    for lam in 0..p {
        if lam == mid || lam > p - 1 - lam {
            continue;
        }
        let a = make_module(&o, FamilyParams::simple(Family::P, lam))?;
        let b = make_module(&o, FamilyParams::simple(Family::P, p - 1 - lam))?;
        let sum = a.direct_sum(&b)?;
        let e = end_ring(&sum, seed ^ lam)?;
        let two_sided = quiver_shape_two_vertex(&e, &a, &b, &sum);
        if e.dim() != 8 || e.is_local || two_sided.is_err() {
            dims_ok = false;
            detail = format!(
                "lam {lam}: dim {} local {} shape {:?}",
                e.dim(),
                e.is_local,
                two_sided.err().map(|x| x.to_string())
            );
            break;
        }
    }
    s.push(ClaimReport::check(
        "endrings.paired",
        "paired-block basic algebras have dimension 8 with the double-arrow relations",
        dims_ok,
        detail,
    ));
    Ok(s)
}

/// Verify the two-vertex quiver shape of End(A + B): two orthogonal
/// idempotents, two arrows each way, composites equal in both tracks and
/// mixed composites zero.
fn quiver_shape_two_vertex(
    e: &EndRing,
    a: &Module,
    b: &Module,
    sum: &Module,
) -> Result<(), AlgError> {
    let f = e.field;
    let da = a.dim;
    let dim = sum.dim;
    // idempotent projections onto the two summands
    let mut e1 = Matrix::zeros(f, dim, dim);
    for i in 0..da {
        e1[(i, i)] = 1;
    }
    let mut e2 = Matrix::zeros(f, dim, dim);
    for i in da..dim {
        e2[(i, i)] = 1;
    }
    // arrows: hom(A, B) and hom(B, A) have dimension 2 each
    let ab = hom_basis(a, b);
    let ba = hom_basis(b, a);
    if ab.len() != 2 || ba.len() != 2 {
        return Err(AlgError::Internal(format!(
            "arrow spaces have dims {} and {}",
            ab.len(),
            ba.len()
        )));
    }
    // embed the arrows in End(sum)
    let embed_ab = |t: &Matrix| -> Matrix {
        let mut m = Matrix::zeros(f, dim, dim);
        for r in 0..t.rows {
            for c in 0..t.cols {
                m[(da + r, c)] = t[(r, c)];
            }
        }
        m
    };
    let embed_ba = |t: &Matrix| -> Matrix {
        let mut m = Matrix::zeros(f, dim, dim);
        for r in 0..t.rows {
            for c in 0..t.cols {
                m[(r, da + c)] = t[(r, c)];
            }
        }
        m
    };
    // bilinear pairings through the socle loops
    // find bases x1, y1 of Hom(A,B) and x2, y2 of Hom(B,A) with
    // x2 x1 = y2 y1 != 0, x1 x2 = y1 y2 != 0, mixed zero.
    let pairs = |u: &Matrix, v: &Matrix| -> Matrix {
        u.mul(v)
    };
    for code in 0..f.p().pow(4) {
        let mut c = code;
        let mut coef = [0u64; 4];
        for k in 0..4 {
            coef[k] = c % f.p();
            c /= f.p();
        }
        let x1 = ab[0].scale(coef[0]).add(&ab[1].scale(coef[1]));
        let y1 = ab[0].scale(coef[2]).add(&ab[1].scale(coef[3]));
        if x1.is_zero() || y1.is_zero() {
            continue;
        }
        // solve for x2, y2 with the relations, by sweeping the second space
        for code2 in 0..f.p().pow(4) {
            let mut c2 = code2;
            let mut coef2 = [0u64; 4];
            for k in 0..4 {
                coef2[k] = c2 % f.p();
                c2 /= f.p();
            }
            let x2 = ba[0].scale(coef2[0]).add(&ba[1].scale(coef2[1]));
            let y2 = ba[0].scale(coef2[2]).add(&ba[1].scale(coef2[3]));
            if x2.is_zero() || y2.is_zero() {
                continue;
            }
            let loop_a = pairs(&x2, &x1);
            let loop_a2 = pairs(&y2, &y1);
            let loop_b = pairs(&x1, &x2);
            let loop_b2 = pairs(&y1, &y2);
            let mixed1 = pairs(&x2, &y1);
            let mixed2 = pairs(&y2, &x1);
            let mixed3 = pairs(&x1, &y2);
            let mixed4 = pairs(&y1, &x2);
            if loop_a == loop_a2
                && !loop_a.is_zero()
                && loop_b == loop_b2
                && !loop_b.is_zero()
                && mixed1.is_zero()
                && mixed2.is_zero()
                && mixed3.is_zero()
                && mixed4.is_zero()
            {
                // also confirm the idempotents and arrows generate everything
                let mut span = crate::matrix::Span::new(f, dim * dim);
                let gens = [
                    e1.clone(),
                    e2.clone(),
                    embed_ab(&x1),
                    embed_ab(&y1),
                    embed_ba(&x2),
                    embed_ba(&y2),
                    Matrix::block_diag(&[&loop_a, &Matrix::zeros(f, dim - da, dim - da)]),
                    {
                        let z = Matrix::zeros(f, da, da);
                        Matrix::block_diag(&[&z, &loop_b])
                    },
                ];
                for g in &gens {
                    span.insert(&crate::hom::flatten(g));
                }
                if span.rank() == e.dim() {
                    return Ok(());
                }
            }
        }
    }
    Err(AlgError::Internal("no arrow bases satisfy the quiver relations".into()))
}

fn suite_qci(p: u64, seed: u64, depth: usize) -> Result<SuiteReport, AlgError> {
    let mut s = SuiteReport::new("qci", p, seed, depth);
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9c1);
    // seeded configurations: N <= 3 generators, exponents in {2,3,4}
    let mut configs: Vec<(Vec<u32>, Vec<Vec<u64>>)> = vec![
        (vec![2, 2], vec![vec![0, p - 1], vec![]]),
        (vec![2, 2, 2], vec![vec![0, p - 1, p - 1], vec![0, 0, p - 1], vec![]]),
    ];
    while configs.len() < 10 {
        let n = rng.gen_range(1..=3usize);
        let ns: Vec<u32> = (0..n).map(|_| rng.gen_range(2..=4u32)).collect();
        if ns.iter().map(|&x| x as usize).product::<usize>() > 64 {
            continue;
        }
        let mut q = vec![vec![0u64; n]; n];
        for i in 0..n {
            for j in (i + 1)..n {
                q[i][j] = rng.gen_range(1..p);
            }
        }
        configs.push((ns, q));
    }
    let deep = 6usize.max(depth.min(8));
    let mut all_ok = true;
    let mut detail = String::new();
    let mut checked = 0;
    for (ns, q) in &configs {
        let data = QciData::new(p, ns, q, &ns.iter().map(|&x| x == 2).collect::<Vec<_>>())?;
        let k = match Koszul::build(data, deep + 1) {
            Ok(k) => k,
            Err(e) => {
                all_ok = false;
                detail = format!("{ns:?}: {e}");
                break;
            }
        };
        if let Err(e) = k.verify_exactness() {
            all_ok = false;
            detail = format!("{ns:?}: {e}");
            break;
        }
        let nvars = ns.len();
        for n in 0..=deep {
            if k.rank(n) != binomial(n + nvars - 1, nvars - 1) {
                all_ok = false;
                detail = format!("{ns:?}: rank at {n}");
            }
        }
        let rel = verify_relations(&k)?;
        if !rel.pass {
            all_ok = false;
            detail = format!("{ns:?}: {:?}", rel.failures);
            break;
        }
        // independent oracles
        let dim_s: usize = ns.iter().map(|&x| x as usize).product();
        let syz_depth = if dim_s > 36 { 6 } else { 6 };
        let syz = syzygy_ranks(&k.data.alg, syz_depth)?;
        for (n, &r) in syz.iter().enumerate() {
            if r != k.rank(n) {
                all_ok = false;
                detail = format!("{ns:?}: syzygy oracle at {n}: {r} vs {}", k.rank(n));
            }
        }
        let bar = bar_ext_dims(&k.data.alg, deep.min(6), 300_000)?;
        for (n, b) in bar.iter().enumerate() {
            if let Some(b) = b {
                if *b != k.rank(n) {
                    all_ok = false;
                    detail = format!("{ns:?}: bar oracle at {n}: {b} vs {}", k.rank(n));
                }
            }
        }
        checked += 1;
    }
    s.push(ClaimReport::check(
        "qci.resolution",
        "d^2 = 0, exactness through degree 6, dims match binomials and both oracles, relations hold",
        all_ok,
        if all_ok { format!("{checked} configurations") } else { detail },
    ));
    // the graded instance: weight/parity actions
    let k = Koszul::build(QciData::osp_graded(p)?, (2 * p as usize).max(6) + 1)?;
    let w = verify_weight_actions(&k, &[1, p - 1])?;
    s.push(ClaimReport::check(
        "qci.weight_actions",
        "torus and parity operators commute with d, act as stated on generators, and fix p-th powers",
        w.pass,
        format!("invariants {:?}", w.invariant_dims.iter().take(5).collect::<Vec<_>>()),
    ));
    Ok(s)
}

fn suite_cocycles(p: u64, seed: u64, depth: usize) -> Result<SuiteReport, AlgError> {
    let mut s = SuiteReport::new("cocycles", p, seed, depth);
    let data = QciData::osp_graded(p)?;
    for i in 0..2 {
        let x = XiHat::build(data.clone(), i);
        let res = x.verify_cocycle_exhaustive();
        let cert = x.noncoboundary_certificate();
        let claim_ok = res.is_ok() && cert.is_ok() && x.matches_resolution_class();
        s.push(ClaimReport::check(
            &format!("cocycles.deg2.{i}"),
            "the degree-2 coefficient cocycle: exhaustive vanishing, witness, class match",
            claim_ok,
            match (res, cert) {
                (Ok(n), Ok(c)) => format!("{n} triples, witness {}", c.witness_value),
                (Err(e), _) => format!("{e}"),
                (_, Err(e)) => format!("{e}"),
            },
        ));
    }
    let o = osp12(p)?;
    let samples = if p == 3 { 10_000 } else { 600 };
    for i in 0..2 {
        let mut f = PowerCocycle::build(&o, i)?;
        let res = f.verify_sampled(samples, seed ^ (i as u64));
        let cert = res
            .as_ref()
            .ok()
            .map(|&n| f.noncoboundary_certificate(n))
            .unwrap_or_else(|| Err(AlgError::Internal("sampling failed".into())));
        s.push(ClaimReport::check(
            &format!("cocycles.deg2p.{i}"),
            "the degree-2p cocycle: seeded vanishing and the exact witness tuple",
            res.is_ok() && cert.is_ok(),
            match (&res, &cert) {
                (Ok(n), Ok(c)) => format!("{n} tuples, witness {}", c.witness_value),
                (Err(e), _) => format!("{e}"),
                (_, Err(e)) => format!("{e}"),
            },
        ));
    }
    Ok(s)
}

fn suite_frobenius(p: u64, seed: u64, depth: usize) -> Result<SuiteReport, AlgError> {
    let mut s = SuiteReport::new("frobenius", p, seed, depth);
    let o = osp12(p)?;
    s.push(ClaimReport::check(
        "frobenius.pair_sum",
        "the dual pair sums to the unit after straightening",
        pair_sum(&o, 1, 1) == AlgElt::unit(&o),
        "",
    ));
    if p > 7 {
        return Ok(s);
    }
    let ctx = FrobeniusContext::new(p)?;
    let rep = ctx.verify_dual_pair(50, seed ^ 0xd4a1)?;
    s.push(ClaimReport::check(
        "frobenius.reconstruction",
        "the reconstruction identity holds on seeded elements",
        rep.reconstruction_samples == 50,
        format!("assignment {:?}", rep.assignment),
    ));
    // split certificates for every projective and simple
    let mut all = true;
    let mut detail = String::new();
    for lam in 0..p {
        for fam in [Family::P, Family::V] {
            let m = make_module(&o, FamilyParams::simple(fam, lam))?;
            match ctx.split_summand_check(&m) {
                Ok((cert, _)) => {
                    if !cert.composite_is_identity {
                        all = false;
                    }
                }
                Err(e) => {
                    all = false;
                    detail = format!("{e}");
                }
            }
        }
    }
    s.push(ClaimReport::check(
        "frobenius.split",
        "every module splits off its induced restriction through the trace section",
        all,
        detail,
    ));
    // restriction identities
    let sl = sl2(p)?;
    let mut rest_ok = true;
    let mut rest_detail = String::new();
    for mu in 0..p {
        let pm = make_module(&o, FamilyParams::simple(Family::P, mu))?;
        let res = pm.restrict_to_sl2(&sl)?;
        let parts = decompose(&res, seed ^ mu)?;
        let mut got: Vec<String> = Vec::new();
        for part in &parts {
            let label = match_sl2_member(&part.module, &sl, seed)?;
            got.push(label);
        }
        got.sort();
        let mut want: Vec<String> = if mu == 0 {
            vec![
                "P0^0".into(),
                format!("V0^{}", p - 1),
                format!("V0^{}", p - 1),
            ]
        } else if mu == p - 1 {
            vec![
                format!("P0^{}", p - 2),
                format!("V0^{}", p - 1),
                format!("V0^{}", p - 1),
            ]
        } else {
            vec![format!("P0^{}", mu), format!("P0^{}", mu - 1)]
        };
        want.sort();
        if got != want {
            rest_ok = false;
            rest_detail = format!("restriction of P^{mu}: got {:?}, want {:?}", got, want);
            break;
        }
    }
    s.push(ClaimReport::check(
        "frobenius.restriction",
        "restrictions of the projectives decompose into the stated even projectives",
        rest_ok,
        rest_detail,
    ));
    // reciprocity on seeded pairs
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xad51);
    let mut recip_ok = true;
    for _ in 0..10 {
        let mu = rng.gen_range(0..p);
        let lam = rng.gen_range(0..p);
        let m = make_module(&sl, FamilyParams::simple(Family::V0, mu))?;
        let n = make_module(&o, FamilyParams::simple(Family::V, lam))?;
        let ind = ctx.induce(&m)?;
        let lhs = hom_dim(&ind, &n);
        let rhs = hom_dim(&m, &n.restrict_to_sl2(&sl)?);
        if lhs != rhs {
            recip_ok = false;
        }
    }
    s.push(ClaimReport::check(
        "frobenius.reciprocity",
        "hom spaces match across the induction adjunction on seeded pairs",
        recip_ok,
        "10 pairs",
    ));
    // projectivity transfer: induced even projectives decompose into big ones
    let mut transfer_ok = true;
    let mut tdetail = String::new();
    if p == 3 {
        for mu in 0..p - 1 {
            let p0 = make_module(&sl, FamilyParams::simple(Family::P0, mu))?;
            let ind = ctx.induce(&p0)?;
            let parts = decompose(&ind, seed ^ 0x77 ^ mu)?;
            for part in &parts {
                let mut matched = false;
                for lam in 0..p {
                    let cand = make_module(&o, FamilyParams::simple(Family::P, lam))?;
                    if part.module.dim == cand.dim
                        && is_isomorphic(&part.module, &cand, seed).is_yes()
                    {
                        matched = true;
                        break;
                    }
                }
                if !matched {
                    transfer_ok = false;
                    tdetail = format!("induced P0^{mu} has a non-projective summand of dim {}", part.module.dim);
                }
            }
        }
        s.push(ClaimReport::check(
            "frobenius.transfer",
            "induction carries even projectives to sums of big projectives",
            transfer_ok,
            tdetail,
        ));
    }
    Ok(s)
}

/// Identify an indecomposable sl2-module among the simples and projectives.
fn match_sl2_member(m: &Module, sl: &crate::pbw::AlgRef, seed: u64) -> Result<String, AlgError> {
    let p = sl.field.p();
    for lam in 0..p {
        let v = make_module(sl, FamilyParams::simple(Family::V0, lam))?;
        if v.dim == m.dim && is_isomorphic(m, &v, seed).is_yes() {
            return Ok(v.label);
        }
        if lam + 2 <= p {
            let pr = make_module(sl, FamilyParams::simple(Family::P0, lam))?;
            if pr.dim == m.dim && is_isomorphic(m, &pr, seed).is_yes() {
                return Ok(pr.label);
            }
        }
    }
    Err(AlgError::Internal(format!(
        "summand of dim {} matches no catalogue member",
        m.dim
    )))
}

fn suite_complexity(p: u64, seed: u64, depth: usize) -> Result<SuiteReport, AlgError> {
    let mut s = SuiteReport::new("complexity", p, seed, depth);
    let d = depth.max(8);
    if p == 3 {
        for name in ["sl2_smash", "osp12_smash"] {
            let alg = build_preset(name, p)?;
            let fit = complexity_estimate(&Module::trivial(&alg), d)?;
            let verdict = wildness_verdict(&alg, d)?;
            s.push(ClaimReport::check(
                &format!("complexity.{name}"),
                "the trivial module has complexity 2 and wildness is not decided",
                fit.complexity == 2 && verdict.verdict == Wildness::NotDecided,
                format!("dims {:?}", fit.total_dims),
            ));
        }
    }
    // a three-generator intersection is wild
    let q = crate::pbw::build_qci(p, &[2, 2, 2], &[vec![0, p - 1, p - 1], vec![0, 0, p - 1], vec![]])?;
    let verdict = wildness_verdict(&q, d)?;
    s.push(ClaimReport::check(
        "complexity.wild",
        "three anticommuting generators give complexity 3, hence wild",
        verdict.verdict == Wildness::Wild && verdict.fit.complexity == 3,
        format!("dims {:?}", verdict.fit.total_dims),
    ));
    // projectives have complexity 1 under the difference-fit convention
    let o = osp12(p)?;
    let pm = make_module(&o, FamilyParams::simple(Family::P, 0))?;
    let fit = complexity_estimate(&pm, 5)?;
    s.push(ClaimReport::check(
        "complexity.projective",
        "projective modules have bounded resolutions",
        fit.complexity == 1,
        format!("dims {:?}", fit.total_dims),
    ));
    // the parity-invariant dimensions of Ext match the smash computation
    if p == 3 {
        let triv = Module::trivial(&o);
        let inv = parity_action_on_ext(&triv, 4)?;
        let sm = smash(&o)?;
        let triv_sm = Module::trivial(&sm);
        let res = minimal_resolution(&triv_sm, 4)?;
        let ssm = simples(&sm)?;
        let triv_head = ssm
            .iter()
            .position(|x| hom_dim(&triv_sm, x) == 1)
            .expect("trivial head exists");
        let mut ok = true;
        let mut rows = Vec::new();
        for n in 0..=4 {
            let super_dim = res.summands[n].iter().filter(|&&h| h == triv_head).count();
            rows.push((n, inv[n].0, inv[n].1, super_dim));
            if inv[n].1 != super_dim {
                ok = false;
            }
        }
        s.push(ClaimReport::check(
            "complexity.invariants",
            "smash-algebra Ext dims equal the parity-invariant part of the plain Ext",
            ok,
            format!("{:?}", rows),
        ));
    }
    Ok(s)
}

fn suite_iso_sweep(p: u64, seed: u64, depth: usize) -> Result<SuiteReport, AlgError> {
    let mut s = SuiteReport::new("iso-sweep", p, seed, depth);
    let o = osp12(p)?;
    let f = Fp::new(p);
    let units: Vec<u64> = (1..p).collect();
    let mut pairs = Vec::new();
    for &a in &units {
        for &b in &units {
            pairs.push((a, b));
        }
    }
    let lam = 1.min(p - 1);
    let mut ok = true;
    let mut count = 0;
    let mut detail = String::new();
    for &sp in &pairs {
        for &tp in &pairs {
            let ms = make_module(&o, FamilyParams::tube(Family::T, lam, sp, 1))?;
            let mt = make_module(&o, FamilyParams::tube(Family::T, lam, tp, 1))?;
            let want = f.mul(sp.0, sp.1) == f.mul(tp.0, tp.1);
            let got = is_isomorphic(&ms, &mt, seed ^ count);
            count += 1;
            let got_yes = got.is_yes();
            if want != got_yes || (!want && !got.is_no()) {
                ok = false;
                detail = format!("s={sp:?} t={tp:?}: want {want}, got {:?}", got_yes);
            }
        }
    }
    s.push(ClaimReport::check(
        "iso.tube_criterion",
        "tube modules are isomorphic exactly when the parameter products agree",
        ok,
        if ok { format!("{count} ordered pairs") } else { detail },
    ));
    // the reversed-orientation tubes obey the same criterion (spot)
    let t1 = make_module(&o, FamilyParams::tube(Family::Tt, lam, (1, 1), 1))?;
    let t2 = make_module(&o, FamilyParams::tube(Family::Tt, lam, (p - 1, f.inv(p - 1)), 1))?;
    let spot = is_isomorphic(&t1, &t2, seed).is_yes();
    s.push(ClaimReport::check(
        "iso.tube_reversed",
        "the reversed tube family follows the same parameter-product rule",
        spot,
        "",
    ));
    let _ = depth;
    Ok(s)
}
