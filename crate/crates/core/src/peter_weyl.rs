//! Matrix-coefficient spaces of kG-modules inside the dual `kG*`.

use std::sync::Arc;

use serde_json::{json, Value};

use crate::error::Result;
use crate::groups::Group;
use crate::hopf::Functional;
use crate::linalg::{unit_vector, Matrix, Subspace};
use crate::reps::{decompose_against, irreps, Rep};
use crate::scalar::Scalar;

/// `β_V(v ⊗ f)(g) = ⟨g·v, f⟩`.
pub fn beta(rep: &Rep, v: &[Scalar], f: &[Scalar]) -> Functional {
    let values = rep
        .matrices()
        .iter()
        .map(|m| m.mul_vec(v).iter().zip(f).map(|(a, b)| a * b).sum())
        .collect();
    Functional::new(rep.group(), values).expect("one value per element")
}

/// `β_V` on a general element `X = Σ X_ij eᵢ⊗eʲ` of `V⊗V*`: `g ↦ tr(ρ(g)X)`.
pub fn beta_tensor(rep: &Rep, x: &Matrix) -> Functional {
    let values = rep.matrices().iter().map(|m| m.mul(x).trace()).collect();
    Functional::new(rep.group(), values).expect("one value per element")
}

/// The character `z_V = β_V(1_V)`.
pub fn z(rep: &Rep) -> Functional {
    rep.character()
}

#[derive(Clone, Debug)]
pub struct PWComponent {
    pub label: String,
    pub subspace: Subspace,
    pub z: Functional,
}

/// `H*_V`: the span of all matrix coefficients of `V`.
pub fn component(rep: &Rep) -> PWComponent {
    let d = rep.dim();
    let n = rep.group().order();
    let coefficients = (0..d).flat_map(|i| (0..d).map(move |j| (i, j))).map(|(i, j)| {
        beta(rep, &unit_vector(d, i), &unit_vector(d, j)).into_values()
    });
    PWComponent {
        label: rep.label().to_string(),
        subspace: Subspace::span(n, coefficients).expect("functionals of length |G|"),
        z: z(rep),
    }
}

/// Span of the pointwise products of two subspaces of `kG*`.
pub fn product_span(a: &Subspace, b: &Subspace) -> Subspace {
    let n = a.ambient();
    let products = a
        .basis()
        .iter()
        .flat_map(|x| b.basis().iter().map(move |y| x.iter().zip(y).map(|(p, q)| p * q).collect::<Vec<Scalar>>()));
    Subspace::span(n, products).expect("same ambient")
}

/// `H*_V · H*_W = H*_{V⊗W}`.
pub fn product_component_check(v: &Rep, w: &Rep) -> Result<bool> {
    let lhs = product_span(&component(v).subspace, &component(w).subspace);
    Ok(lhs == component(&v.tensor(w)?).subspace)
}

/// `z_V · z_W = z_{V⊗W}`.
pub fn z_multiplicative_check(v: &Rep, w: &Rep) -> Result<bool> {
    Ok(z(v).convolve(&z(w))? == z(&v.tensor(w)?))
}

/// `z_{V ⊕_r W} = z_V + z_W` for a cocycle `r`.
pub fn z_additive_check(v: &Rep, w: &Rep, r: &[Matrix]) -> Result<bool> {
    let ext = crate::reps::extension_by_cocycle(v, w, r)?;
    Ok(z(&ext) == z(v).add(&z(w))?)
}

/// Components of the irreducibles have dimensions `(dim V)²`, sum to `|G|`
/// and are independent.
pub fn direct_sum_decomposition(group: &Arc<Group>) -> Result<bool> {
    let reps = irreps(group)?;
    let n = group.order();
    let mut total = Subspace::zero(n);
    let mut dims = 0;
    for r in &reps {
        let c = component(r);
        if c.subspace.dim() != r.dim() * r.dim() || !c.subspace.contains(c.z.values()) {
            return Ok(false);
        }
        dims += c.subspace.dim();
        total = total.sum(&c.subspace)?;
    }
    Ok(dims == n && total.dim() == n)
}

/// Structure constants of convolution on `{z_V}` for irreducible `V`:
/// `z_a · z_b = Σ_c N[a][b][c] z_c`, solved in the basis of characters.
pub fn character_structure_constants(group: &Arc<Group>) -> Result<Vec<Vec<Vec<Scalar>>>> {
    let reps = irreps(group)?;
    let zs: Vec<Functional> = reps.iter().map(z).collect();
    let n = group.order();
    // columns are the characters
    let mut m = Matrix::zeros(n, zs.len());
    for (c, f) in zs.iter().enumerate() {
        for g in 0..n {
            m.set(g, c, f.at(g).clone());
        }
    }
    let mut out = Vec::new();
    for a in &zs {
        let mut row = Vec::new();
        for b in &zs {
            let prod = a.convolve(b)?;
            match crate::linalg::solve_linear(&m, prod.values())? {
                crate::linalg::LinearSolution::Feasible { particular, nullspace } if nullspace.is_empty() => {
                    row.push(particular.into_iter().map(Scalar::demote).collect())
                }
                _ => return Err(crate::error::Error::Internal("characters not independent".into())),
            }
        }
        out.push(row);
    }
    Ok(out)
}

/// Tensor-product multiplicities `[V_a ⊗ V_b : V_c]` from character inner products.
pub fn tensor_multiplicities(group: &Arc<Group>) -> Result<Vec<Vec<Vec<i64>>>> {
    let reps = irreps(group)?;
    reps.iter()
        .map(|a| {
            reps.iter()
                .map(|b| Ok(decompose_against(&a.tensor(b)?, &reps)?.multiplicities))
                .collect()
        })
        .collect()
}

/// Per-irreducible dimension, character and pairwise product labels.
pub fn component_report(group: &Arc<Group>) -> Result<Value> {
    let reps = irreps(group)?;
    let comps: Vec<Value> = reps
        .iter()
        .map(|r| {
            let c = component(r);
            json!({
                "label": c.label,
                "dim": c.subspace.dim(),
                "z": c.z.values().iter().map(|s| s.to_string()).collect::<Vec<_>>(),
            })
        })
        .collect();
    let mut products = Vec::new();
    for a in &reps {
        for b in &reps {
            let k = decompose_against(&a.tensor(b)?, &reps)?;
            products.push(json!({"left": a.label(), "right": b.label(), "components": k.to_json()}));
        }
    }
    Ok(json!({
        "group": group.name(),
        "elements": group.names(),
        "components": comps,
        "products": products,
        "direct": direct_sum_decomposition(group)?,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::make_group;
    use crate::hopf::{Action, AlgebraElement};

    fn s3() -> Arc<Group> {
        make_group(&"S3".parse().unwrap()).unwrap()
    }

    #[test]
    fn beta_examples() {
        let g = s3();
        let reps = irreps(&g).unwrap();
        let one = vec![Scalar::one()];
        assert_eq!(beta(&reps[0], &one, &one), Functional::epsilon(&g));
        let sgn = beta(&reps[2], &one, &one);
        for x in 0..6 {
            let parity = g.element_name(x).len() / 2 % 2;
            assert_eq!(sgn.at(x), &Scalar::from_int(if parity == 0 { 1 } else { -1 }));
        }
    }

    #[test]
    fn beta_is_bimodule_map() {
        let g = s3();
        let std = &irreps(&g).unwrap()[1];
        let v = vec![Scalar::from_int(2), Scalar::rational(-1, 3)];
        let f = vec![Scalar::from_int(5), Scalar::from_int(1)];
        for h in 0..6 {
            let he = AlgebraElement::basis(&g, h);
            let hv = std.matrix(h).mul_vec(&v);
            assert_eq!(beta(std, &hv, &f), beta(std, &v, &f).act(Action::Left, &he).unwrap());
            let fh = std.dual().act(&f, h);
            assert_eq!(beta(std, &v, &fh), beta(std, &v, &f).act(Action::Right, &he).unwrap());
        }
    }

    #[test]
    fn components() {
        let g = s3();
        let reps = irreps(&g).unwrap();
        assert_eq!(component(&reps[0]).subspace.dim(), 1);
        let std = &reps[1];
        assert_eq!(component(std).subspace.dim(), 4);
        assert_eq!(component(&std.direct_sum(std).unwrap()).subspace, component(std).subspace);
        assert!(direct_sum_decomposition(&g).unwrap());
        for a in &reps {
            for b in &reps {
                assert!(product_component_check(a, b).unwrap());
                assert!(z_multiplicative_check(a, b).unwrap());
            }
        }
    }

    #[test]
    fn structure_constants_match_multiplicities() {
        let g = s3();
        let n = character_structure_constants(&g).unwrap();
        let m = tensor_multiplicities(&g).unwrap();
        for a in 0..3 {
            for b in 0..3 {
                for c in 0..3 {
                    assert_eq!(n[a][b][c], Scalar::from_int(m[a][b][c]));
                }
            }
        }
    }
}
