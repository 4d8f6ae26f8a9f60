//! End-to-end acceptance checks. Runs without the libtest harness so that
//! every criterion prints its own PASS/FAIL line; exits nonzero on failure.

use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use peterweyl::groups::{make_group, Group};
use peterweyl::hopf::{
    action_invariants, antipode_invariants, center, invariant_functionals, verify_hopf_axioms, Action,
    AlgebraElement, Functional, TensorElement,
};
use peterweyl::linalg::{Matrix, Subspace};
use peterweyl::peter_weyl::{
    character_structure_constants, product_component_check, z, z_multiplicative_check,
};
use peterweyl::phi::{
    a_conditions_on, center_image_check, check_t, check_t_normalized, cyclic_r_matrix, equivariance_check, in_a,
    p_from_r, phi, r_membership, s3_family, solve_t, t_from_r, t_system, PhiContext,
};
use peterweyl::reps::{character_inner_product, irreps, Rep};
use peterweyl::search::{a_basis, search, Strategy, Verdict, DEFAULT_SEED};
use peterweyl::uq::{
    c_q, central_commutant_solve, in_span, joseph_component_check, linearly_independent, module, UqElement,
};
use peterweyl::Scalar;

type Check = Result<String, String>;

fn group(desc: &str) -> Arc<Group> {
    make_group(&desc.parse().expect("descriptor")).expect("group")
}

fn int(n: i64) -> Scalar {
    Scalar::from_int(n)
}

fn ensure(cond: bool, what: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn within(start: Instant, limit: u64) -> Result<Duration, String> {
    let t = start.elapsed();
    ensure(t < Duration::from_secs(limit), format!("took {:?}, limit {} s", t, limit))?;
    Ok(t)
}

fn e<E: std::fmt::Debug>(err: E) -> String {
    format!("{:?}", err)
}

fn s3_p(g: &Arc<Group>, l: i64, m: i64) -> TensorElement {
    s3_family(g, &int(l), &int(m)).expect("family").p
}

fn criterion_1() -> Check {
    let start = Instant::now();
    let g = group("S3");
    let ctx = PhiContext::new(&g).map_err(e)?;
    let all: Vec<usize> = (0..g.order()).collect();
    let mut notes = Vec::new();
    for (l, m, full) in [(1, 1, true), (2, 3, true), (5, 7, true), (0, 1, false), (1, 0, false)] {
        let p = s3_p(&g, l, m);
        let r = ctx.report(&p).map_err(e)?;
        let every = a_conditions_on(&p, &all);
        ensure(r.a && every == [true; 3], format!("({},{}) not in A", l, m))?;
        ensure(r.m0, format!("({},{}) not in M0", l, m))?;
        let rank = phi_matrix_rank_oracle(&p);
        ensure(rank == r.rank, format!("({},{}) rank {} vs oracle {}", l, m, r.rank, rank))?;
        ensure((rank == 6) == full, format!("({},{}) rank {}", l, m, rank))?;
        notes.push(format!("({},{}) rank {} M={}", l, m, rank, r.m));
    }
    let t = within(start, 5)?;
    Ok(format!("{} in {:?}", notes.join(", "), t))
}

/// Rank of `{Φ_P(δ_x)}` computed through `phi` on every delta functional.
fn phi_matrix_rank_oracle(p: &TensorElement) -> usize {
    let g = p.group();
    let images = (0..g.order()).map(|x| phi(p, &Functional::delta(g, x)).unwrap().to_vector());
    Subspace::span(g.order(), images).unwrap().dim()
}

fn criterion_2() -> Check {
    let start = Instant::now();
    let g = group("S3");
    let mut notes = Vec::new();
    for (l, m) in [(1, 1), (2, 3)] {
        let p = s3_p(&g, l, m);
        let (a, _) = t_system(&p);
        ensure(a.rows() == 216 && a.cols() == 1296, format!("system is {}x{}", a.rows(), a.cols()))?;
        ensure(solve_t(&p).map_err(e)?.is_none(), format!("T found for ({},{})", l, m))?;
        notes.push(format!("({},{}) infeasible {}x{}", l, m, a.rows(), a.cols()));
    }
    let t = within(start, 60)?;
    Ok(format!("{} in {:?}", notes.join(", "), t))
}

/// Character computed straight from the matrices.
fn trace_character(r: &Rep) -> Vec<Scalar> {
    (0..r.group().order()).map(|x| r.matrix(x).trace()).collect()
}

fn criterion_3() -> Check {
    let start = Instant::now();
    let mut pairs = 0;
    for desc in ["S3", "D4"] {
        let g = group(desc);
        let reps = irreps(&g).map_err(e)?;
        for v in &reps {
            for w in &reps {
                let (a, b) = (v.label(), w.label());
                ensure(product_component_check(v, w).map_err(e)?, format!("{}: H*_{} H*_{}", desc, a, b))?;
                ensure(z_multiplicative_check(v, w).map_err(e)?, format!("{}: z_{} z_{}", desc, a, b))?;
                // kG* multiplies pointwise, so z_V z_W is the product of traces
                let prod = z(v).convolve(&z(w)).map_err(e)?;
                let pointwise: Vec<Scalar> =
                    trace_character(v).iter().zip(trace_character(w)).map(|(x, y)| x * &y).collect();
                ensure(prod.values() == pointwise.as_slice(), format!("{}: trace oracle {} {}", desc, a, b))?;
                ensure(pointwise == trace_character(&v.tensor(w).map_err(e)?), format!("{}: V⊗W trace", desc))?;
                pairs += 1;
            }
        }
    }
    let t = within(start, 10)?;
    Ok(format!("{} irrep pairs over S3, D4 in {:?}", pairs, t))
}

fn criterion_4() -> Check {
    let start = Instant::now();
    let mut notes = Vec::new();
    for desc in ["S3", "D4", "S4"] {
        let g = group(desc);
        let reps = irreps(&g).map_err(e)?;
        let zs = Subspace::span(g.order(), reps.iter().map(|r| z(r).values().to_vec())).map_err(e)?;
        ensure(zs.dim() == reps.len(), format!("{}: z_V dependent", desc))?;
        let n = character_structure_constants(&g).map_err(e)?;
        for (a, va) in reps.iter().enumerate() {
            for (b, vb) in reps.iter().enumerate() {
                let t = va.tensor(vb).map_err(e)?;
                for (c, vc) in reps.iter().enumerate() {
                    // multiplicity from the dimension of Hom(V_c, V_a⊗V_b)
                    let mult = vc.intertwiner_dim(&t).map_err(e)? as i64;
                    ensure(
                        n[a][b][c] == int(mult),
                        format!("{}: N[{}][{}][{}] = {} vs {}", desc, va.label(), vb.label(), vc.label(), n[a][b][c], mult),
                    )?;
                }
            }
        }
        notes.push(format!("{} {} irreps", desc, reps.len()));
    }
    let t = within(start, 30)?;
    Ok(format!("{} in {:?}", notes.join(", "), t))
}

fn criterion_5() -> Check {
    let g = group("S3");
    let p = s3_p(&g, 1, 1);
    ensure(equivariance_check(&p).map_err(e)?, "equivariance")?;
    ensure(center_image_check(&p).map_err(e)?, "center image")?;
    // oracle: every (g, δ_x), and commutation with all of G
    for h in 0..g.order() {
        let he = AlgebraElement::basis(&g, h);
        for x in 0..g.order() {
            let xi = Functional::delta(&g, x);
            let lhs = phi(&p, &xi.act(Action::Diamond, &he).map_err(e)?).map_err(e)?;
            let rhs = he.mul(&phi(&p, &xi).map_err(e)?).map_err(e)?.mul(&AlgebraElement::basis(&g, g.inv(h))).map_err(e)?;
            ensure(lhs == rhs, format!("Φ(h⋄δ_x) at h={}, x={}", h, x))?;
        }
    }
    let z = center(&g);
    for class in g.classes() {
        let mut v = vec![Scalar::zero(); g.order()];
        for &c in class {
            v[c] = Scalar::one();
        }
        let img = phi(&p, &Functional::new(&g, v).map_err(e)?).map_err(e)?;
        ensure(z.contains(&img.to_vector()), "class image outside Z(kS3)")?;
        for h in 0..g.order() {
            let he = AlgebraElement::basis(&g, h);
            ensure(img.mul(&he).map_err(e)? == he.mul(&img).map_err(e)?, "class image not central")?;
        }
    }
    Ok(format!("{} generators x {} deltas, {} classes central", g.generators().len(), g.order(), g.classes().len()))
}

fn random_scalar(rng: &mut ChaCha8Rng) -> Scalar {
    Scalar::rational(rng.gen_range(-9..=9), rng.gen_range(1..=5))
}

/// Subspace of kG* cut out by `lhs(h, ξ) = rhs(h, ξ)` for all basis `h`.
fn functional_subspace(
    g: &Arc<Group>,
    eq: impl Fn(&AlgebraElement, &Functional) -> (Functional, Functional),
) -> Subspace {
    let n = g.order();
    let mut rows = Vec::new();
    for h in 0..n {
        let he = AlgebraElement::basis(g, h);
        let mut m = Matrix::zeros(n, n);
        for x in 0..n {
            let (l, r) = eq(&he, &Functional::delta(g, x));
            for y in 0..n {
                m.set(y, x, l.at(y) - r.at(y));
            }
        }
        rows.extend(m.to_rows());
    }
    Subspace::span(n, Matrix::from_rows(rows).unwrap().nullspace()).unwrap()
}

fn criterion_6() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    let mut notes = Vec::new();
    for desc in ["S3", "D4"] {
        let g = group(desc);
        let n = g.order();
        let all: Vec<usize> = (0..n).collect();
        let basis = a_basis(&g).map_err(e)?;
        let mut members = 0;
        for i in 0..50 {
            let p = if i % 2 == 0 {
                let coords: Vec<Scalar> = (0..basis.dim()).map(|_| random_scalar(&mut rng)).collect();
                basis.point(&coords)
            } else {
                let terms: Vec<(Vec<usize>, Scalar)> = (0..6)
                    .map(|_| (vec![rng.gen_range(0..n), rng.gen_range(0..n)], random_scalar(&mut rng)))
                    .collect();
                TensorElement::from_terms(&g, 2, terms)
            };
            let c = a_conditions_on(&p, &all);
            ensure(c[0] == c[1] && c[1] == c[2], format!("{}: conditions {:?} on sample {}", desc, c, i))?;
            members += c[0] as usize;
        }
        ensure(members >= 25 && members < 50, format!("{}: {} of 50 samples in A", desc, members))?;

        // kG as a bimodule over itself
        let zg = center(&g);
        ensure(action_invariants(&g, Action::Diamond) == zg, format!("{}: kG^⋄H ≠ kG^H", desc))?;
        ensure(antipode_invariants(&g) == zg, format!("{}: kG^S(H) ≠ kG^H", desc))?;
        ensure(action_invariants(&g, Action::Ad) == zg, format!("{}: kG^ad ≠ Z(kG)", desc))?;
        ensure(zg.dim() == g.classes().len(), format!("{}: dim Z(kG)", desc))?;

        // kG* with (h▷ξ◁h')(x) = ξ(h'xh)
        let inv = invariant_functionals(&g);
        let diamond = functional_subspace(&g, |h, xi| {
            (xi.act(Action::Diamond, h).unwrap(), xi.scale(&h.counit()))
        });
        let s_inv = functional_subspace(&g, |h, xi| {
            let s = h.antipode();
            (xi.act(Action::Left, &s).unwrap(), xi.act(Action::Right, &s).unwrap())
        });
        ensure(inv == diamond && diamond == s_inv, format!("{}: kG* invariant chain", desc))?;
        ensure(inv.dim() == g.classes().len(), format!("{}: dim (kG*)^H", desc))?;
        notes.push(format!("{} {}/50 in A, chains of dim {}", desc, members, zg.dim()));
    }
    Ok(notes.join(", "))
}

fn criterion_7() -> Check {
    let g = group("Z5");
    let r = cyclic_r_matrix(&g).map_err(e)?;
    ensure(r_membership(&r, &r), "R-pair axioms")?;
    ensure(r.terms().values().any(|c| c.to_rational().is_none()), "R not over Q(ζ5)")?;
    let p = p_from_r(&r, &r, &AlgebraElement::one(&g)).map_err(e)?.p;
    let ctx = PhiContext::new(&g).map_err(e)?;
    ensure(in_a(&p).map_err(e)?, "P not in A")?;
    ensure(ctx.in_m0(&p).map_err(e)?, "P not in M0")?;
    let t = t_from_r(&r).map_err(e)?;
    ensure(check_t(&p, &t).map_err(e)?, "check_T")?;
    ensure(check_t_normalized(&t), "check_T_normalized")?;
    Ok(format!("Z5: P with {} terms, rank {}", p.terms().len(), ctx.report(&p).map_err(e)?.rank))
}

fn criterion_8() -> Check {
    let g = group("S3");
    let ctx = PhiContext::new(&g).map_err(e)?;
    let pw = ctx.mock_pw_decomposition(&s3_p(&g, 1, 1)).map_err(e)?;
    ensure(pw.direct, "not a direct sum")?;
    let mut dims = Vec::new();
    for b in &pw.blocks {
        let want = match b.label.as_str() {
            "triv" | "sgn" => 1,
            "std" => 4,
            other => return Err(format!("unexpected block {}", other)),
        };
        ensure(b.dim == want, format!("H_{} has dim {}", b.label, b.dim))?;
        ensure(b.ad_stable, format!("H_{} not ad-stable", b.label))?;
        ensure(b.ad_type_matches, format!("H_{} ad-character", b.label))?;
        dims.push(format!("{}:{}", b.label, b.dim));
    }
    ensure(pw.central_independent && pw.central_spans_center, "c_V do not span Z(kS3)")?;
    let zdim = center(&g).dim();
    ensure(zdim == 3 && pw.central.len() == 3, "dim Z(kS3)")?;
    Ok(format!("blocks {}, c_V span Z of dim {}", dims.join(" "), zdim))
}

fn criterion_9() -> Check {
    let start = Instant::now();
    let d4 = search(&group("D4"), &Strategy::RandomSampling { count: 10_000, seed: DEFAULT_SEED }).map_err(e)?;
    let s = &d4.stats;
    ensure(matches!(d4.verdict, Verdict::NoneFoundBounded { .. }), format!("D4 verdict {}", d4.verdict.name()))?;
    ensure(s.filter_survivors == 0, format!("D4 filter survivors {}", s.filter_survivors))?;
    let k = group("Z2xZ2");
    let klein = search(&k, &Strategy::RandomSampling { count: 1000, seed: DEFAULT_SEED }).map_err(e)?;
    let Verdict::SolutionsFound(found) = &klein.verdict else {
        return Err(format!("Z2xZ2 verdict {}", klein.verdict.name()));
    };
    let ctx = PhiContext::new(&k).map_err(e)?;
    for c in found {
        let r = ctx.report(&c.p).map_err(e)?;
        ensure(r.a && r.m0 && r.rank == k.order(), "Z2xZ2 solution fails re-verification")?;
    }
    Ok(format!(
        "D4: {} samples, {} hom survivors, {} M0 members (all non-injective), 0 filter survivors; Z2xZ2: {} solutions; {:?}",
        s.samples,
        s.hom_survivors,
        s.m0_members,
        found.len(),
        start.elapsed()
    ))
}

fn criterion_10() -> Check {
    let start = Instant::now();
    let c: Vec<UqElement> = (0..=4).map(c_q).collect::<Result<_, _>>().map_err(e)?;
    ensure(c[0] == UqElement::one(), "c_q(0) ≠ 1")?;
    for (n, x) in c.iter().enumerate() {
        ensure(x.is_central(), format!("c_q({}) not central", n))?;
        // oracle: a central element acts by a scalar on each V(m)
        for m in 0..=3 {
            let a = module(m).act(x);
            let s = a.get(0, 0).clone();
            ensure(a == Matrix::identity(m + 1).scale(&s), format!("c_q({}) on V({}) not scalar", n, m))?;
        }
    }
    ensure(c[1].mul(&c[1]) == c[2].add(&c[0]), "c1·c1 ≠ c2 + c0")?;
    ensure(c[1].mul(&c[2]) == c[3].add(&c[1]), "c1·c2 ≠ c3 + c1")?;
    let comm = central_commutant_solve(1, 1, 1);
    ensure(in_span(&c[1], &comm), "c_q(1) outside the commutant solution")?;
    ensure(linearly_independent(&c), "c_q(0..4) dependent")?;
    let mut orbits = Vec::new();
    for n in 0..=3 {
        let r = joseph_component_check(n).map_err(e)?;
        ensure(r.unit_times_k2n, format!("V({}): image {} not a unit times K_2λ", n, r.highest_image))?;
        orbits.push(r.orbit_dim.to_string());
    }
    let t = within(start, 60)?;
    Ok(format!("commutant dim {}, ad-orbit dims {}, {:?}", comm.len(), orbits.join("/"), t))
}

fn criterion_11() -> Check {
    let mut notes = Vec::new();
    for (desc, _, _) in peterweyl::cli::group_catalog().map_err(e)? {
        let g = group(&desc);
        ensure(g.verify_axioms(), format!("{}: group axioms", desc))?;
        ensure(verify_hopf_axioms(&g), format!("{}: Hopf axioms", desc))?;
        let reps = irreps(&g).map_err(e)?;
        let mut dim2 = 0;
        for (i, r) in reps.iter().enumerate() {
            ensure(r.validate(), format!("{}: {} not a representation", desc, r.label()))?;
            ensure(r.end_dim() == 1, format!("{}: {} not simple", desc, r.label()))?;
            dim2 += r.dim() * r.dim();
            for (j, s) in reps.iter().enumerate() {
                let ip = character_inner_product(&r.character(), &s.character());
                ensure(ip == int((i == j) as i64), format!("{}: <{}, {}> = {}", desc, r.label(), s.label(), ip))?;
            }
        }
        ensure(reps.len() == g.classes().len() && dim2 == g.order(), format!("{}: irreducibles incomplete", desc))?;
        let b = a_basis(&g).map_err(e)?;
        let expected = match desc.as_str() {
            "S3" => Some(11),
            "D4" => Some(28),
            _ => None,
        };
        if let Some(d) = expected {
            ensure(b.dim() == d, format!("{}: dim A = {}", desc, b.dim()))?;
            notes.push(format!("dim A({}) = {}", desc, d));
        }
    }
    Ok(format!("all catalog groups; {}", notes.join(", ")))
}

fn main() {
    let criteria: [(&str, fn() -> Check); 11] = [
        ("S3 family membership and rank", criterion_1),
        ("no T for P(1,1), P(2,3)", criterion_2),
        ("component products and z multiplicativity", criterion_3),
        ("z independence and structure constants", criterion_4),
        ("equivariance and central image", criterion_5),
        ("commutation conditions agree; invariant chains", criterion_6),
        ("kernel from the Z5 R-matrix", criterion_7),
        ("mock Peter-Weyl for S3", criterion_8),
        ("D4 search bounded, Z2xZ2 solutions", criterion_9),
        ("U_q(sl2) central elements", criterion_10),
        ("Hopf, representation and counting laws", criterion_11),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("criterion {:>2} PASS  {}: {}", i + 1, name, detail),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {}: {}", i + 1, name, why);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
