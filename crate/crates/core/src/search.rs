//! Parameterizing `𝒜(kG)` and searching it for kernels `P` with `Φ_P`
//! injective and multiplicative on class functions.
//!
//! The sampler works fiber by fiber. If `P` is admissible then `Φ_P` maps
//! the class indicators `1_C` (orthogonal idempotents of the class-function
//! algebra) injectively onto orthogonal idempotents of `Z(kG)`, so
//! `Φ_P(1_C) = e_{π(C)}` for a bijection `π` from classes to irreducibles,
//! where `e_U` is the central idempotent of `U`. Each `π` cuts out an affine
//! subspace of `𝒜`, sampled at small-height rational points.

use std::collections::BTreeMap;
use std::sync::Arc;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::groebner::{groebner, GroebnerCaps, GroebnerOutcome, MPoly, PolySystem};
use crate::groups::{burnside_orbit_count, diagonal_conjugation_orbits, Group};
use crate::hopf::TensorElement;
use crate::linalg::{solve_linear, sparse_rank, LinearSolution, Matrix, Subspace};
use crate::phi::{in_a, phi_matrix, PCandidate, PhiContext};
use crate::scalar::Scalar;

pub const DEFAULT_SEED: u64 = 7;
/// Bound on numerators and denominators of sampled rationals.
pub const SAMPLE_HEIGHT: i64 = 20;

/// Orbit indicators of the diagonal conjugation action: a basis of `𝒜(kG)`.
#[derive(Clone, Debug)]
pub struct ABasis {
    pub group: Arc<Group>,
    pub orbits: Vec<Vec<(usize, usize)>>,
    pub elements: Vec<TensorElement>,
    /// Kernel dimension of the commutation system, computed independently.
    pub kernel_dim: usize,
}

impl ABasis {
    pub fn dim(&self) -> usize {
        self.elements.len()
    }

    /// `Σ x_O 1_O`
    pub fn point(&self, coords: &[Scalar]) -> TensorElement {
        let terms = self
            .orbits
            .iter()
            .zip(coords)
            .flat_map(|(o, c)| o.iter().map(move |&(a, b)| (vec![a, b], c.clone())));
        TensorElement::from_terms(&self.group, 2, terms.collect::<Vec<_>>())
    }

    /// Orbit coordinates of `p`, if `p` is constant on orbits.
    pub fn coordinates(&self, p: &TensorElement) -> Option<Vec<Scalar>> {
        let coords: Vec<Scalar> = self.orbits.iter().map(|o| p.coeff(&[o[0].0, o[0].1])).collect();
        if self.point(&coords) == *p {
            Some(coords)
        } else {
            None
        }
    }
}

/// Number of independent solutions of `P(g⊗g) = (g⊗g)P` over the generators.
pub fn commutation_kernel_dim(group: &Arc<Group>) -> usize {
    let n = group.order();
    let mut rows = Vec::new();
    for &g in group.generators() {
        let gi = group.inv(g);
        for c in 0..n {
            for d in 0..n {
                // coefficient of c⊗d in P(g⊗g) − (g⊗g)P
                let mut row: BTreeMap<usize, Scalar> = BTreeMap::new();
                *row.entry(group.mul(c, gi) * n + group.mul(d, gi)).or_insert_with(Scalar::zero) += Scalar::one();
                *row.entry(group.mul(gi, c) * n + group.mul(gi, d)).or_insert_with(Scalar::zero) -= &Scalar::one();
                rows.push(row);
            }
        }
    }
    n * n - sparse_rank(rows)
}

pub fn a_basis(group: &Arc<Group>) -> Result<ABasis> {
    let orbits = diagonal_conjugation_orbits(group);
    let elements = orbits
        .iter()
        .map(|o| TensorElement::from_terms(group, 2, o.iter().map(|&(a, b)| (vec![a, b], Scalar::one()))))
        .collect();
    let kernel_dim = commutation_kernel_dim(group);
    let burnside = burnside_orbit_count(group);
    if kernel_dim != orbits.len() || burnside != orbits.len() {
        return Err(Error::Internal(format!(
            "dim 𝒜 disagrees: {} orbits, Burnside {}, kernel {}",
            orbits.len(),
            burnside,
            kernel_dim
        )));
    }
    Ok(ABasis { group: group.clone(), orbits, elements, kernel_dim })
}

/// `Φ_P(ξ)` as affine polynomials in `k` variables for `P = base + Σ yᵢ dirᵢ`.
fn affine_image(n: usize, base: &TensorElement, dirs: &[TensorElement], k: usize, xi: &[Scalar]) -> Vec<MPoly> {
    let mut out = vec![MPoly::zero(k); n];
    for (t, c) in base.terms() {
        if !xi[t[0]].is_zero() {
            out[t[1]] = out[t[1]].add(&MPoly::constant(k, c * &xi[t[0]]));
        }
    }
    for (i, d) in dirs.iter().enumerate() {
        for (t, c) in d.terms() {
            if !xi[t[0]].is_zero() {
                out[t[1]] = out[t[1]].add(&MPoly::var(k, i).scale(&(c * &xi[t[0]])));
            }
        }
    }
    out
}

/// `Φ(z_V z_W) − Φ(z_V)Φ(z_W)` at one representative per class, for `V ≤ W`,
/// with `P = base + Σ yᵢ dirᵢ`.
pub fn hom_system(ctx: &PhiContext, base: &TensorElement, dirs: &[TensorElement]) -> Result<PolySystem> {
    let grp = &ctx.group;
    let n = grp.order();
    let k = dirs.len();
    let images: Vec<Vec<MPoly>> = ctx.characters.iter().map(|c| affine_image(n, base, dirs, k, c.values())).collect();
    let mut polys = Vec::new();
    let r = ctx.characters.len();
    for i in 0..r {
        for j in i..r {
            let prod_char = ctx.characters[i].convolve(&ctx.characters[j])?;
            let lhs = affine_image(n, base, dirs, k, prod_char.values());
            for class in grp.classes() {
                let target = class[0];
                let mut rhs = MPoly::zero(k);
                for a in 0..n {
                    if images[i][a].is_zero() {
                        continue;
                    }
                    let b = grp.mul(grp.inv(a), target);
                    if images[j][b].is_zero() {
                        continue;
                    }
                    rhs = rhs.add(&images[i][a].mul(&images[j][b]));
                }
                polys.push(lhs[target].sub(&rhs));
            }
        }
    }
    PolySystem::new(k, polys)
}

/// The multiplicativity equations in orbit coordinates. Containment of
/// components and injectivity are checked on candidate points afterwards.
pub fn assemble_constraints(ctx: &PhiContext, basis: &ABasis) -> Result<PolySystem> {
    let zero = TensorElement::zero(&ctx.group, 2);
    hom_system(ctx, &zero, &basis.elements)
}

/// `e_U = (dim U / |G|) Σ_g χ_U(g⁻¹) g`
pub fn central_idempotents(ctx: &PhiContext) -> Vec<Vec<Scalar>> {
    let grp = &ctx.group;
    let n = grp.order() as i64;
    ctx.irreps
        .iter()
        .zip(&ctx.characters)
        .map(|(rep, chi)| {
            let scale = Scalar::rational(rep.dim() as i64, n);
            (0..grp.order()).map(|g| (chi.at(grp.inv(g)) * &scale).demote()).collect()
        })
        .collect()
}

#[derive(Clone, Debug)]
pub enum Strategy {
    VerifyOnly(PCandidate),
    RandomSampling { count: usize, seed: u64 },
    Groebner { caps: GroebnerCaps, injectivity: bool },
}

#[derive(Clone, Debug)]
pub enum Verdict {
    SolutionsFound(Vec<PCandidate>),
    NoneFoundBounded { samples: usize, log: Vec<String> },
    ProvedInfeasible { certificate: Value },
}

impl Verdict {
    pub fn name(&self) -> &'static str {
        match self {
            Verdict::SolutionsFound(_) => "SolutionsFound",
            Verdict::NoneFoundBounded { .. } => "NoneFoundBounded",
            Verdict::ProvedInfeasible { .. } => "ProvedInfeasible",
        }
    }
}

/// Per-stage survivor counts of the sampler.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub samples: usize,
    pub empty_fibers: usize,
    pub fiber_points: usize,
    /// Points satisfying the multiplicativity polynomials.
    pub hom_survivors: usize,
    /// Points that in addition satisfy component containment and central
    /// image, i.e. lie in `ℳ₀`.
    pub m0_members: usize,
    /// `ℳ₀` points with `det Φ_P ≠ 0`: survivors of the whole polynomial filter.
    pub filter_survivors: usize,
    pub verified: usize,
    /// Fiber dimension to number of nonempty fibers of that dimension.
    pub fiber_dims: BTreeMap<usize, usize>,
}

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub verdict: Verdict,
    pub stats: SearchStats,
    pub elapsed_ms: u128,
}

impl SearchOutcome {
    pub fn to_json(&self) -> Value {
        let verdict = match &self.verdict {
            Verdict::SolutionsFound(list) => json!({
                "kind": "SolutionsFound",
                "solutions": list.iter().map(|c| json!({"note": c.note, "P": c.p.to_json()})).collect::<Vec<_>>(),
            }),
            Verdict::NoneFoundBounded { samples, log } => json!({"kind": "NoneFoundBounded", "samples": samples, "log": log}),
            Verdict::ProvedInfeasible { certificate } => json!({"kind": "ProvedInfeasible", "certificate": certificate}),
        };
        let s = &self.stats;
        json!({
            "verdict": verdict,
            "stats": {
                "samples": s.samples,
                "empty_fibers": s.empty_fibers,
                "fiber_points": s.fiber_points,
                "hom_survivors": s.hom_survivors,
                "m0_members": s.m0_members,
                "filter_survivors": s.filter_survivors,
                "verified": s.verified,
                "fiber_dims": s.fiber_dims.iter().map(|(d, c)| json!({"dim": d, "count": c})).collect::<Vec<_>>(),
            },
        })
    }
}

/// The affine subspace `{P ∈ 𝒜 : Φ_P(1_C) = e_{π(C)}}`.
#[derive(Clone, Debug)]
pub struct Fiber {
    pub base: TensorElement,
    pub dirs: Vec<TensorElement>,
}

pub fn fiber(ctx: &PhiContext, basis: &ABasis, bijection: &[usize]) -> Result<Option<Fiber>> {
    let grp = &ctx.group;
    let n = grp.order();
    let classes = grp.classes();
    let idem = central_idempotents(ctx);
    let k = basis.dim();
    let mut a = Matrix::zeros(classes.len() * n, k);
    let mut rhs = Vec::with_capacity(classes.len() * n);
    for ci in 0..classes.len() {
        for (o, orbit) in basis.orbits.iter().enumerate() {
            for &(x, y) in orbit {
                if grp.class_of(x) == ci {
                    let cur = a.get(ci * n + y, o).clone();
                    a.set(ci * n + y, o, cur + Scalar::one());
                }
            }
        }
        rhs.extend(idem[bijection[ci]].iter().cloned());
    }
    match solve_linear(&a, &rhs)? {
        LinearSolution::Infeasible => Ok(None),
        LinearSolution::Feasible { particular, nullspace } => Ok(Some(Fiber {
            base: basis.point(&particular),
            dirs: nullspace.iter().map(|v| basis.point(v)).collect(),
        })),
    }
}

fn random_rational(rng: &mut ChaCha8Rng) -> Scalar {
    let num = rng.gen_range(-SAMPLE_HEIGHT..=SAMPLE_HEIGHT);
    let den = rng.gen_range(1..=SAMPLE_HEIGHT);
    Scalar::rational(num, den)
}

/// Full re-verification: `𝒜`, `ℳ`, multiplicative on invariants with central
/// image, and `Φ_P` of full rank.
pub fn is_admissible(ctx: &PhiContext, p: &TensorElement) -> Result<bool> {
    let r = ctx.report(p)?;
    Ok(r.a && r.m && r.m0 && r.rank == ctx.group.order())
}

fn all_bijections(r: usize) -> Vec<Vec<usize>> {
    if r == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for rest in all_bijections(r - 1) {
        for pos in 0..=rest.len() {
            let mut v = rest.clone();
            v.insert(pos, r - 1);
            out.push(v);
        }
    }
    out.sort();
    out
}

pub fn search(group: &Arc<Group>, strategy: &Strategy) -> Result<SearchOutcome> {
    let start = Instant::now();
    let ctx = PhiContext::new(group)?;
    let (verdict, stats) = match strategy {
        Strategy::VerifyOnly(candidate) => verify_only(&ctx, candidate)?,
        Strategy::RandomSampling { count, seed } => random_sampling(&ctx, *count, *seed)?,
        Strategy::Groebner { caps, injectivity } => groebner_search(&ctx, *caps, *injectivity)?,
    };
    Ok(SearchOutcome { verdict, stats, elapsed_ms: start.elapsed().as_millis() })
}

fn verify_only(ctx: &PhiContext, candidate: &PCandidate) -> Result<(Verdict, SearchStats)> {
    let r = ctx.report(&candidate.p)?;
    let mut stats = SearchStats { samples: 1, ..Default::default() };
    let ok = r.a && r.m && r.m0 && r.rank == ctx.group.order();
    if ok {
        stats.verified = 1;
        return Ok((Verdict::SolutionsFound(vec![candidate.clone()]), stats));
    }
    let mut log = Vec::new();
    if !r.a {
        log.push("not in 𝒜".to_string());
    }
    for (v, w) in &r.m_witnesses {
        log.push(format!("component containment fails for ({}, {})", v, w));
    }
    if !r.m0 {
        log.push("not multiplicative on class functions".into());
    }
    if r.rank != ctx.group.order() {
        log.push(format!("Φ_P has rank {}", r.rank));
    }
    Ok((Verdict::NoneFoundBounded { samples: 1, log }, stats))
}

fn random_sampling(ctx: &PhiContext, count: usize, seed: u64) -> Result<(Verdict, SearchStats)> {
    let basis = a_basis(&ctx.group)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let r = ctx.characters.len();
    let mut fibers: BTreeMap<Vec<usize>, Option<(Fiber, PolySystem)>> = BTreeMap::new();
    let mut stats = SearchStats::default();
    let mut found: Vec<PCandidate> = Vec::new();
    for _ in 0..count {
        stats.samples += 1;
        let mut pi: Vec<usize> = (0..r).collect();
        pi.shuffle(&mut rng);
        if !fibers.contains_key(&pi) {
            let entry = match fiber(ctx, &basis, &pi)? {
                None => None,
                Some(f) => {
                    let sys = hom_system(ctx, &f.base, &f.dirs)?;
                    *stats.fiber_dims.entry(f.dirs.len()).or_insert(0) += 1;
                    Some((f, sys))
                }
            };
            fibers.insert(pi.clone(), entry);
        }
        let Some((f, sys)) = &fibers[&pi] else {
            stats.empty_fibers += 1;
            continue;
        };
        stats.fiber_points += 1;
        let t: Vec<Scalar> = f.dirs.iter().map(|_| random_rational(&mut rng)).collect();
        if !sys.is_satisfied_by(&t) {
            continue;
        }
        stats.hom_survivors += 1;
        let mut p = f.base.clone();
        for (d, c) in f.dirs.iter().zip(&t) {
            p = p.add(&d.scale(c))?;
        }
        if !(ctx.center_image(&p)? && ctx.in_m(&p)?) {
            continue;
        }
        stats.m0_members += 1;
        if phi_matrix(&p).rank() != ctx.group.order() {
            continue;
        }
        stats.filter_survivors += 1;
        // the sampler's own algebra is not trusted: re-run every predicate
        if in_a(&p)? && is_admissible(ctx, &p)? {
            stats.verified += 1;
            if !found.iter().any(|c| c.p == p) {
                let params: Vec<String> = t.iter().map(|s| s.to_string()).collect();
                found.push(PCandidate::with_note(p, &format!("bijection {:?} params [{}]", pi, params.join(", "))));
            }
        }
    }
    let verdict = if found.is_empty() {
        let log = vec![
            format!("seed {}", seed),
            format!("{} of {} sampled bijections have empty fibers", fibers.values().filter(|f| f.is_none()).count(), fibers.len()),
        ];
        Verdict::NoneFoundBounded { samples: count, log }
    } else {
        Verdict::SolutionsFound(found)
    };
    Ok((verdict, stats))
}

/// Bareiss fraction-free determinant.
pub fn determinant(mut m: Vec<Vec<MPoly>>) -> MPoly {
    let n = m.len();
    if n == 0 {
        return MPoly::constant(0, Scalar::one());
    }
    let nvars = m[0][0].nvars();
    let mut sign = Scalar::one();
    let mut prev = MPoly::constant(nvars, Scalar::one());
    for k in 0..n.saturating_sub(1) {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return MPoly::zero(nvars),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[i][j].mul(&m[k][k]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = num.exact_div(&prev).expect("Bareiss division is exact");
            }
        }
        prev = m[k][k].clone();
    }
    m[n - 1][n - 1].scale(&sign)
}

/// Quadratic equations saying `Φ(H*_V)·Φ(H*_W) ⊆ Φ(H*_{V⊗W})` for the pairs
/// whose tensor product has only one-dimensional constituents; there the
/// target is spanned by fixed vectors `Φ(z_U) = Σ_C χ_U(C) e_{π(C)}`.
fn fixed_target_containment(ctx: &PhiContext, f: &Fiber, extra_vars: usize) -> Result<Vec<MPoly>> {
    let grp = &ctx.group;
    let n = grp.order();
    let k = f.dirs.len() + extra_vars;
    let tensor_images = |xi: &[Scalar]| affine_image(n, &f.base, &f.dirs, k, xi);
    let dims: Vec<usize> = ctx.irreps.iter().map(|r| r.dim()).collect();
    let mut polys = Vec::new();
    for i in 0..dims.len() {
        for j in i..dims.len() {
            let k0 = crate::reps::decompose_against(&ctx.irreps[i].tensor(&ctx.irreps[j])?, &ctx.irreps)?;
            let constituents: Vec<usize> = (0..dims.len()).filter(|&u| k0.multiplicities[u] > 0).collect();
            if constituents.iter().any(|&u| dims[u] != 1) {
                continue;
            }
            // fixed target: images of the one-dimensional characters
            let mut target_vecs = Vec::new();
            for &u in &constituents {
                let img: Vec<MPoly> = tensor_images(ctx.characters[u].values());
                let consts: Option<Vec<Scalar>> = img
                    .iter()
                    .map(|p| if p.is_zero() { Some(Scalar::zero()) } else if p.total_degree() == 0 { p.terms().next().map(|(_, c)| c.clone()) } else { None })
                    .collect();
                match consts {
                    Some(v) => target_vecs.push(v),
                    None => return Err(Error::Internal("character image is not constant on the fiber".into())),
                }
            }
            let target = Subspace::span(n, target_vecs)?;
            // annihilator of the target
            let annihilators = if target.dim() == 0 {
                (0..n).map(|b| crate::linalg::unit_vector(n, b)).collect::<Vec<_>>()
            } else {
                Matrix::from_rows(target.basis().to_vec())?.nullspace()
            };
            let left: Vec<Vec<MPoly>> = ctx.components[i].basis().iter().map(|v| tensor_images(v)).collect();
            let right: Vec<Vec<MPoly>> = ctx.components[j].basis().iter().map(|v| tensor_images(v)).collect();
            for x in &left {
                for y in &right {
                    let mut prod = vec![MPoly::zero(k); n];
                    for a in 0..n {
                        if x[a].is_zero() {
                            continue;
                        }
                        for b in 0..n {
                            if !y[b].is_zero() {
                                let ab = grp.mul(a, b);
                                prod[ab] = prod[ab].add(&x[a].mul(&y[b]));
                            }
                        }
                    }
                    for w in &annihilators {
                        let mut p = MPoly::zero(k);
                        for (c, q) in w.iter().zip(&prod) {
                            if !c.is_zero() && !q.is_zero() {
                                p = p.add(&q.scale(c));
                            }
                        }
                        polys.push(p);
                    }
                }
            }
        }
    }
    Ok(polys)
}

fn groebner_search(ctx: &PhiContext, caps: GroebnerCaps, injectivity: bool) -> Result<(Verdict, SearchStats)> {
    if caps.max_degree == 0 || caps.max_steps == 0 {
        return Err(Error::Strategy("caps must be positive".into()));
    }
    let basis = a_basis(&ctx.group)?;
    let n = ctx.group.order();
    let mut stats = SearchStats::default();
    let mut hasher = Sha256::new();
    let mut log = Vec::new();
    let mut open = 0usize;
    let mut found = Vec::new();
    for pi in all_bijections(ctx.characters.len()) {
        stats.samples += 1;
        let Some(f) = fiber(ctx, &basis, &pi)? else {
            stats.empty_fibers += 1;
            hasher.update(format!("{:?}:empty;", pi));
            continue;
        };
        *stats.fiber_dims.entry(f.dirs.len()).or_insert(0) += 1;
        if f.dirs.is_empty() {
            stats.fiber_points += 1;
            if is_admissible(ctx, &f.base)? {
                stats.verified += 1;
                found.push(PCandidate::with_note(f.base.clone(), &format!("bijection {:?}", pi)));
            } else {
                hasher.update(format!("{:?}:point-rejected;", pi));
            }
            continue;
        }
        let extra = usize::from(injectivity);
        let k = f.dirs.len() + extra;
        let mut polys: Vec<MPoly> = hom_system(ctx, &f.base, &f.dirs)?
            .polys
            .iter()
            .map(|p| widen(p, k))
            .collect();
        polys.extend(fixed_target_containment(ctx, &f, extra)?);
        if injectivity {
            let m = phi_matrix_poly(&f, n, k);
            let det = determinant(m);
            polys.push(det.mul(&MPoly::var(k, k - 1)).sub(&MPoly::constant(k, Scalar::one())));
        }
        let system = PolySystem::new(k, polys)?;
        match groebner(&system, caps) {
            GroebnerOutcome::ProvedInfeasible { trace_hash } => {
                hasher.update(format!("{:?}:{};", pi, trace_hash));
            }
            GroebnerOutcome::Basis(b) => {
                open += 1;
                log.push(format!("bijection {:?}: proper ideal, {} basis elements", pi, b.len()));
            }
            GroebnerOutcome::Unknown { reason } => {
                open += 1;
                log.push(format!("bijection {:?}: {}", pi, reason));
            }
        }
    }
    let verdict = if !found.is_empty() {
        Verdict::SolutionsFound(found)
    } else if open == 0 {
        Verdict::ProvedInfeasible {
            certificate: json!({
                "group": ctx.group.name(),
                "bijections": stats.samples,
                "empty_fibers": stats.empty_fibers,
                "injectivity_encoded": injectivity,
                "trace_hash": hex::encode(hasher.finalize()),
            }),
        }
    } else {
        Verdict::NoneFoundBounded { samples: stats.samples, log }
    };
    Ok((verdict, stats))
}

fn widen(p: &MPoly, k: usize) -> MPoly {
    let subs: Vec<MPoly> = (0..p.nvars()).map(|i| MPoly::var(k, i)).collect();
    if p.nvars() == 0 {
        return MPoly::from_terms(k, p.terms().map(|(_, c)| (vec![0; k], c.clone()))).expect("constant");
    }
    p.substitute(&subs)
}

fn phi_matrix_poly(f: &Fiber, n: usize, k: usize) -> Vec<Vec<MPoly>> {
    let mut m = vec![vec![MPoly::zero(k); n]; n];
    for (t, c) in f.base.terms() {
        m[t[1]][t[0]] = m[t[1]][t[0]].add(&MPoly::constant(k, c.clone()));
    }
    for (i, d) in f.dirs.iter().enumerate() {
        for (t, c) in d.terms() {
            m[t[1]][t[0]] = m[t[1]][t[0]].add(&MPoly::var(k, i).scale(c));
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::make_group;
    use crate::phi::s3_family;

    fn grp(s: &str) -> Arc<Group> {
        make_group(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn a_basis_dims() {
        assert_eq!(a_basis(&grp("S3")).unwrap().dim(), 11);
        assert_eq!(a_basis(&grp("Z1")).unwrap().dim(), 1);
        assert_eq!(a_basis(&grp("D4")).unwrap().dim(), 28);
        for b in a_basis(&grp("S3")).unwrap().elements {
            assert!(b.commutes_with_coproduct());
        }
    }

    #[test]
    fn constraints_hold_on_family() {
        let g = grp("S3");
        let ctx = PhiContext::new(&g).unwrap();
        let basis = a_basis(&g).unwrap();
        let sys = assemble_constraints(&ctx, &basis).unwrap();
        for (l, m) in [(1, 1), (5, 7)] {
            let p = s3_family(&g, &Scalar::from_int(l), &Scalar::from_int(m)).unwrap().p;
            let x = basis.coordinates(&p).unwrap();
            assert!(sys.is_satisfied_by(&x));
        }
        let p = s3_family(&g, &Scalar::one(), &Scalar::one()).unwrap().p;
        let mut x = basis.coordinates(&p).unwrap();
        x[3] += Scalar::one();
        assert!(!sys.is_satisfied_by(&x));
        let trivial = grp("Z1");
        let ctx = PhiContext::new(&trivial).unwrap();
        let sys = assemble_constraints(&ctx, &a_basis(&trivial).unwrap()).unwrap();
        assert!(sys.is_satisfied_by(&[Scalar::one()]));
    }

    #[test]
    fn verify_only_accepts_family() {
        let g = grp("S3");
        let p = s3_family(&g, &Scalar::one(), &Scalar::one()).unwrap();
        let out = search(&g, &Strategy::VerifyOnly(p)).unwrap();
        assert_eq!(out.verdict.name(), "SolutionsFound");
    }

    #[test]
    fn bareiss_determinant() {
        let x = MPoly::var(1, 0);
        let one = MPoly::constant(1, Scalar::one());
        let m = vec![vec![x.clone(), one.clone()], vec![one.clone(), x.clone()]];
        assert_eq!(determinant(m), x.mul(&x).sub(&one));
    }

    #[test]
    fn sampler_finds_klein_four_solutions() {
        let g = grp("Z2xZ2");
        let out = search(&g, &Strategy::RandomSampling { count: 200, seed: DEFAULT_SEED }).unwrap();
        assert_eq!(out.verdict.name(), "SolutionsFound");
    }

    #[test]
    fn family_slice_solves_system_identically() {
        let g = grp("S3");
        let ctx = PhiContext::new(&g).unwrap();
        let basis = a_basis(&g).unwrap();
        let sys = assemble_constraints(&ctx, &basis).unwrap();
        let at = |l: i64, m: i64| {
            basis.coordinates(&s3_family(&g, &Scalar::from_int(l), &Scalar::from_int(m)).unwrap().p).unwrap()
        };
        let (x00, x10, x01) = (at(0, 0), at(1, 0), at(0, 1));
        let lam = MPoly::var(2, 0);
        let mu = MPoly::var(2, 1);
        let coords: Vec<MPoly> = (0..basis.dim())
            .map(|i| {
                MPoly::constant(2, x00[i].clone())
                    .add(&lam.scale(&(&x10[i] - &x00[i])))
                    .add(&mu.scale(&(&x01[i] - &x00[i])))
            })
            .collect();
        // the family really is affine in (λ, μ)
        let x57 = at(5, 7);
        for (c, x) in coords.iter().zip(&x57) {
            assert_eq!(&c.eval(&[Scalar::from_int(5), Scalar::from_int(7)]), x);
        }
        for p in &sys.polys {
            assert!(p.substitute(&coords).is_zero());
        }
    }

    #[test]
    fn groebner_strategy_on_klein_four() {
        let g = grp("Z2xZ2");
        let out = search(&g, &Strategy::Groebner { caps: GroebnerCaps::default(), injectivity: true }).unwrap();
        match out.verdict {
            Verdict::SolutionsFound(list) => assert_eq!(list.len(), 24),
            v => panic!("{}", v.name()),
        }
    }
}
