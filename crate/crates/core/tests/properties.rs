use std::sync::Arc;

use proptest::prelude::*;

use peterweyl::groebner::{groebner, GroebnerCaps, GroebnerOutcome, MPoly, PolySystem};
use peterweyl::groups::{make_group, Group};
use peterweyl::hopf::{AlgebraElement, Functional};
use peterweyl::linalg::{solve_linear, LinearSolution, Matrix, Subspace};
use peterweyl::peter_weyl::{tensor_multiplicities, z};
use peterweyl::phi::{cyclic_r_matrix, equivariance_check, p_from_r, phi, phi_mult_identity, s3_family, t_from_r, PhiContext};
use peterweyl::poly::UPoly;
use peterweyl::reps::irreps;
use peterweyl::search::a_basis;
use peterweyl::uq::{module, UqElement};
use peterweyl::Scalar;

fn group(desc: &str) -> Arc<Group> {
    make_group(&desc.parse().unwrap()).unwrap()
}

fn rational() -> impl Strategy<Value = Scalar> {
    (-50i64..=50, 1i64..=20).prop_map(|(a, b)| Scalar::rational(a, b))
}

fn cyclotomic() -> impl Strategy<Value = Scalar> {
    prop::collection::vec(-6i64..=6, 4).prop_map(|c| Scalar::cyclotomic(5, UPoly::from_i64(&c)))
}

fn laurent_poly() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-4i64..=4, 1..=3)
}

fn ratfun() -> impl Strategy<Value = Scalar> {
    (laurent_poly(), laurent_poly().prop_filter("nonzero", |d| d.iter().any(|&c| c != 0)), -2i64..=2)
        .prop_map(|(n, d, k)| Scalar::ratfun(UPoly::from_i64(&n), UPoly::from_i64(&d)) * Scalar::v_pow(k))
}

fn field_axioms(a: &Scalar, b: &Scalar, c: &Scalar) -> Result<(), TestCaseError> {
    prop_assert_eq!((a + b) + c, a + (b + c));
    prop_assert_eq!((a * b) * c, a * (b * c));
    prop_assert_eq!(a * (b + c), a * b + a * c);
    prop_assert_eq!(a + b, b + a);
    prop_assert_eq!(a * b, b * a);
    if !a.is_zero() {
        prop_assert!((a * &a.inv().unwrap()).is_one());
    }
    let back: Scalar = a.to_string().parse().unwrap();
    prop_assert_eq!(&back, a);
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn rational_field_axioms(a in rational(), b in rational(), c in rational()) {
        field_axioms(&a, &b, &c)?;
    }

    #[test]
    fn cyclotomic_field_axioms(a in cyclotomic(), b in cyclotomic(), c in cyclotomic()) {
        field_axioms(&a, &b, &c)?;
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2_000))]

    #[test]
    fn ratfun_field_axioms(a in ratfun(), b in ratfun(), c in ratfun()) {
        field_axioms(&a, &b, &c)?;
    }
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(prop::collection::vec(-3i64..=3, cols), rows)
        .prop_map(|r| Matrix::from_rows(r.into_iter().map(|row| row.into_iter().map(Scalar::from_int).collect()).collect()).unwrap())
}

proptest! {
    #[test]
    fn solve_linear_resubstitutes(a in matrix(4, 5), b in prop::collection::vec(rational(), 4)) {
        if let LinearSolution::Feasible { particular, nullspace } = solve_linear(&a, &b).unwrap() {
            prop_assert_eq!(a.mul_vec(&particular), b);
            for v in nullspace {
                prop_assert!(a.mul_vec(&v).iter().all(Scalar::is_zero));
            }
        } else {
            prop_assert!(a.rank() < 4);
        }
    }

    #[test]
    fn subspace_bases_are_canonical(
        gens in matrix(3, 5),
        scales in prop::collection::vec((1i64..=9, prop::bool::ANY), 3),
        mix in prop::collection::vec(-3i64..=3, 3),
        shift in 0usize..3,
    ) {
        let rows = gens.to_rows();
        let a = Subspace::span(5, rows.clone()).unwrap();
        let mut others: Vec<Vec<Scalar>> = rows
            .iter()
            .zip(&scales)
            .map(|(r, &(k, neg))| {
                let s = Scalar::from_int(if neg { -k } else { k });
                r.iter().map(|x| x * &s).collect()
            })
            .collect();
        let combo: Vec<Scalar> = (0..5)
            .map(|j| rows.iter().zip(&mix).map(|(r, &m)| &r[j] * Scalar::from_int(m)).sum())
            .collect();
        others.push(combo);
        others.rotate_left(shift);
        let b = Subspace::span(5, others).unwrap();
        prop_assert_eq!(a.basis(), b.basis());
        prop_assert_eq!(a.dim(), gens.rank());
    }

    #[test]
    fn sparse_and_dense_rank_agree(a in matrix(6, 7)) {
        let rows = a.to_rows().into_iter().map(|r| r.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect());
        prop_assert_eq!(peterweyl::linalg::sparse_rank(rows), a.rank());
    }
}

fn mpoly() -> impl Strategy<Value = MPoly> {
    prop::collection::vec(((0u32..=2, 0u32..=2), -3i64..=3), 1..=4)
        .prop_map(|ts| MPoly::from_terms(2, ts.into_iter().map(|((i, j), c)| (vec![i, j], Scalar::from_int(c)))).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn groebner_respects_linear_units(f in mpoly(), g in mpoly(), a in -3i64..=3, b in -3i64..=3, forced in prop::bool::ANY) {
        let mut polys = vec![f.clone(), g.clone()];
        if forced {
            let unit = MPoly::constant(2, Scalar::one())
                .sub(&f.scale(&Scalar::from_int(a)))
                .sub(&g.scale(&Scalar::from_int(b)));
            polys.push(unit);
        }
        let sys = PolySystem::new(2, polys).unwrap();
        let linear = sys.has_linear_unit_combination();
        if forced {
            prop_assert!(linear);
        }
        let out = groebner(&sys, GroebnerCaps { max_degree: 8, max_steps: 500 });
        if linear {
            prop_assert!(!matches!(out, GroebnerOutcome::Basis(_)));
        }
        if let GroebnerOutcome::Basis(basis) = out {
            for p in &sys.polys {
                prop_assert!(p.reduce(&basis).is_zero());
            }
        }
    }
}

fn class_function(g: &Arc<Group>, vals: &[i64]) -> Functional {
    let v = (0..g.order()).map(|x| Scalar::from_int(vals[g.class_of(x) % vals.len()])).collect();
    Functional::new(g, v).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn invariant_functionals_form_a_subalgebra(a in prop::collection::vec(-5i64..=5, 5), b in prop::collection::vec(-5i64..=5, 5), d4 in prop::bool::ANY) {
        let g = group(if d4 { "D4" } else { "S3" });
        let (x, y) = (class_function(&g, &a), class_function(&g, &b));
        prop_assert!(x.is_class_function() && y.is_class_function());
        prop_assert!(x.convolve(&y).unwrap().is_class_function());
    }

    #[test]
    fn phi_mult_identity_for_cyclic_kernels(xs in prop::collection::vec(-5i64..=5, 5), ys in prop::collection::vec(-5i64..=5, 5)) {
        let g = group("Z5");
        let r = cyclic_r_matrix(&g).unwrap();
        let p = p_from_r(&r, &r, &AlgebraElement::one(&g)).unwrap().p;
        let t = t_from_r(&r).unwrap();
        let xi = Functional::new(&g, xs.into_iter().map(Scalar::from_int).collect()).unwrap();
        let xi2 = Functional::new(&g, ys.into_iter().map(Scalar::from_int).collect()).unwrap();
        prop_assert!(phi_mult_identity(&p, &t, &xi, &xi2).unwrap());
    }

    #[test]
    fn central_images_follow_tensor_rules(l in -6i64..=6, m in -6i64..=6) {
        let g = group("S3");
        let p = s3_family(&g, &Scalar::from_int(l), &Scalar::from_int(m)).unwrap().p;
        let ctx = PhiContext::new(&g).unwrap();
        prop_assert!(ctx.in_m0(&p).unwrap());
        let reps = irreps(&g).unwrap();
        let c: Vec<AlgebraElement> = reps.iter().map(|r| phi(&p, &z(r)).unwrap()).collect();
        let mult = tensor_multiplicities(&g).unwrap();
        for a in 0..reps.len() {
            for b in 0..reps.len() {
                let mut rhs = AlgebraElement::zero(&g);
                for (u, &k) in mult[a][b].iter().enumerate() {
                    rhs = rhs.add(&c[u].scale(&Scalar::from_int(k))).unwrap();
                }
                prop_assert_eq!(c[a].mul(&c[b]).unwrap(), rhs);
            }
        }
    }

    #[test]
    fn commuting_kernels_are_equivariant(coords in prop::collection::vec(-9i64..=9, 28), d4 in prop::bool::ANY) {
        let g = group(if d4 { "D4" } else { "S3" });
        let basis = a_basis(&g).unwrap();
        let p = basis.point(&coords[..basis.dim()].iter().map(|&c| Scalar::from_int(c)).collect::<Vec<_>>());
        prop_assert!(equivariance_check(&p).unwrap());
    }
}

fn uq_element() -> impl Strategy<Value = UqElement> {
    prop::collection::vec(((0u32..=2, -2i64..=2, 0u32..=2), -3i64..=3, -1i64..=1), 1..=3).prop_map(|ts| {
        ts.into_iter().fold(UqElement::zero(), |acc, (m, c, k)| {
            acc.add(&UqElement::monomial(m, Scalar::from_int(c) * Scalar::v_pow(k)))
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn uq_normal_form_is_associative(x in uq_element(), y in uq_element(), w in uq_element()) {
        prop_assert_eq!(x.mul(&y).mul(&w), x.mul(&y.mul(&w)));
    }

    #[test]
    fn uq_product_matches_module_action(x in uq_element(), y in uq_element(), n in 0usize..=3) {
        let v = module(n);
        prop_assert_eq!(v.act(&x.mul(&y)), v.act(&x).mul(&v.act(&y)));
    }
}

#[test]
fn class_equation_holds() {
    for desc in ["S3", "S4", "D4", "D6", "Z6", "Z2xZ2"] {
        let g = group(desc);
        let sizes: Vec<usize> = g.classes().iter().map(Vec::len).collect();
        assert_eq!(sizes.iter().sum::<usize>(), g.order(), "{}", desc);
        assert!(sizes.iter().all(|s| g.order() % s == 0), "{}", desc);
    }
}

#[test]
fn k0_structure_constants() {
    for desc in ["S3", "D4"] {
        let n = tensor_multiplicities(&group(desc)).unwrap();
        let k = n.len();
        for a in 0..k {
            for b in 0..k {
                assert_eq!(n[a][b], n[b][a]);
                assert!(n[a][b].iter().all(|&m| m >= 0));
                for c in 0..k {
                    // (a⊗b)⊗c and a⊗(b⊗c) have the same decomposition
                    for d in 0..k {
                        let left: i64 = (0..k).map(|u| n[a][b][u] * n[u][c][d]).sum();
                        let right: i64 = (0..k).map(|u| n[b][c][u] * n[a][u][d]).sum();
                        assert_eq!(left, right);
                    }
                }
            }
        }
    }
}
