//! The group algebra kG as a Hopf algebra: elements, tensor powers, the dual
//! and the module/bimodule actions on each of them.
//!
//! Structure maps on the group basis: `Δ(g) = g⊗g`, `ε(g) = 1`, `S(g) = g⁻¹`.
//! Since kG is finite dimensional, completed tensor products are plain ones.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::groups::{make_group, Group, GroupSpec};
use crate::linalg::{Matrix, Subspace};
use crate::scalar::Scalar;

fn same_group(a: &Group, b: &Group) -> Result<()> {
    if a.spec() == b.spec() {
        Ok(())
    } else {
        Err(Error::GroupMismatch(a.name(), b.name()))
    }
}

fn insert_term<K: Ord>(map: &mut BTreeMap<K, Scalar>, key: K, c: Scalar) {
    if c.is_zero() {
        return;
    }
    let entry = map.entry(key);
    match entry {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            *o.get_mut() += &c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

/// Element of kG, sparse in the group basis.
#[derive(Clone, Debug)]
pub struct AlgebraElement {
    group: Arc<Group>,
    terms: BTreeMap<usize, Scalar>,
}

impl PartialEq for AlgebraElement {
    fn eq(&self, other: &Self) -> bool {
        self.group.spec() == other.group.spec() && self.terms == other.terms
    }
}

impl AlgebraElement {
    pub fn zero(group: &Arc<Group>) -> Self {
        AlgebraElement { group: group.clone(), terms: BTreeMap::new() }
    }

    pub fn one(group: &Arc<Group>) -> Self {
        Self::basis(group, 0)
    }

    pub fn basis(group: &Arc<Group>, g: usize) -> Self {
        Self::from_terms(group, [(g, Scalar::one())])
    }

    pub fn from_terms(group: &Arc<Group>, terms: impl IntoIterator<Item = (usize, Scalar)>) -> Self {
        let mut map = BTreeMap::new();
        for (g, c) in terms {
            assert!(g < group.order());
            insert_term(&mut map, g, c);
        }
        AlgebraElement { group: group.clone(), terms: map }
    }

    pub fn from_vector(group: &Arc<Group>, v: &[Scalar]) -> Self {
        Self::from_terms(group, v.iter().cloned().enumerate())
    }

    /// `Σ_g g`
    pub fn sum_of_elements(group: &Arc<Group>) -> Self {
        Self::from_terms(group, (0..group.order()).map(|g| (g, Scalar::one())))
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn terms(&self) -> &BTreeMap<usize, Scalar> {
        &self.terms
    }

    pub fn coeff(&self, g: usize) -> Scalar {
        self.terms.get(&g).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn to_vector(&self) -> Vec<Scalar> {
        (0..self.group.order()).map(|g| self.coeff(g)).collect()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        same_group(&self.group, &other.group)?;
        let mut out = self.clone();
        for (&g, c) in &other.terms {
            insert_term(&mut out.terms, g, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&Scalar::from_int(-1)))
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Self::from_terms(&self.group, self.terms.iter().map(|(&g, c)| (g, c * s)))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        same_group(&self.group, &other.group)?;
        let mut map = BTreeMap::new();
        for (&a, x) in &self.terms {
            for (&b, y) in &other.terms {
                insert_term(&mut map, self.group.mul(a, b), x * y);
            }
        }
        Ok(AlgebraElement { group: self.group.clone(), terms: map })
    }

    pub fn delta(&self) -> TensorElement {
        TensorElement::from_terms(&self.group, 2, self.terms.iter().map(|(&g, c)| (vec![g, g], c.clone())))
    }

    pub fn counit(&self) -> Scalar {
        self.terms.values().cloned().sum()
    }

    pub fn antipode(&self) -> Self {
        self.map_basis(|g| self.group.inv(g))
    }

    fn map_basis(&self, f: impl Fn(usize) -> usize) -> Self {
        Self::from_terms(&self.group, self.terms.iter().map(|(&g, c)| (f(g), c.clone())))
    }

    /// Applies an action of `h` to `self`. Actions are linear in `h`.
    pub fn act(&self, action: Action, h: &AlgebraElement) -> Result<Self> {
        same_group(&self.group, &h.group)?;
        let grp = &self.group;
        let mut out = Self::zero(grp);
        for (&g, c) in &h.terms {
            let moved = self.map_basis(|b| action.on_group(grp, g, b)).scale(c);
            out = out.add(&moved)?;
        }
        Ok(out)
    }
}

/// Actions of kG used throughout.
///
/// On kG itself (for a group element `g`): `Ad`: `gbg⁻¹`, `AdStar`: `g⁻¹bg`,
/// `Diamond`: `gbg⁻¹`, `Left`: `gb`, `Right`: `bg`.
/// On functionals (bimodule `(h▷ξ◁h')(x) = ξ(h'xh)`): `Left`: `ξ(xg)`,
/// `Right`: `ξ(gx)`, `Diamond`: `ξ(g⁻¹xg)`, `Ad`/`AdStar` are the
/// transposes of `AdStar`/`Ad` on kG.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Action {
    Ad,
    AdStar,
    Diamond,
    Left,
    Right,
}

impl Action {
    pub const ALL: [Action; 5] = [Action::Ad, Action::AdStar, Action::Diamond, Action::Left, Action::Right];

    /// Image of the basis element `b` of kG under the action of `g`.
    pub fn on_group(self, grp: &Group, g: usize, b: usize) -> usize {
        match self {
            Action::Ad | Action::Diamond => grp.conj(g, b),
            Action::AdStar => grp.conj(grp.inv(g), b),
            Action::Left => grp.mul(g, b),
            Action::Right => grp.mul(b, g),
        }
    }

    /// Argument at which `ξ` is evaluated to get `(g·ξ)(x)`.
    fn pullback(self, grp: &Group, g: usize, x: usize) -> usize {
        match self {
            Action::Left => grp.mul(x, g),
            Action::Right => grp.mul(g, x),
            Action::Diamond | Action::AdStar => grp.conj(grp.inv(g), x),
            Action::Ad => grp.conj(g, x),
        }
    }

    /// Whether `act(hh') = act(h)∘act(h')` (otherwise the order reverses).
    pub fn is_left_action_on_algebra(self) -> bool {
        matches!(self, Action::Ad | Action::Diamond | Action::Left)
    }
}

/// Element of kG^{⊗k}, sparse in the basis of group-element tuples.
#[derive(Clone, Debug)]
pub struct TensorElement {
    group: Arc<Group>,
    arity: usize,
    terms: BTreeMap<Vec<usize>, Scalar>,
}

impl PartialEq for TensorElement {
    fn eq(&self, other: &Self) -> bool {
        self.group.spec() == other.group.spec() && self.arity == other.arity && self.terms == other.terms
    }
}

impl TensorElement {
    pub fn zero(group: &Arc<Group>, arity: usize) -> Self {
        assert!(arity >= 1);
        TensorElement { group: group.clone(), arity, terms: BTreeMap::new() }
    }

    pub fn one(group: &Arc<Group>, arity: usize) -> Self {
        Self::basis(group, &vec![0; arity])
    }

    pub fn basis(group: &Arc<Group>, tuple: &[usize]) -> Self {
        Self::from_terms(group, tuple.len(), [(tuple.to_vec(), Scalar::one())])
    }

    pub fn from_terms(
        group: &Arc<Group>,
        arity: usize,
        terms: impl IntoIterator<Item = (Vec<usize>, Scalar)>,
    ) -> Self {
        let mut out = Self::zero(group, arity);
        for (t, c) in terms {
            assert_eq!(t.len(), arity);
            assert!(t.iter().all(|&g| g < group.order()));
            insert_term(&mut out.terms, t, c);
        }
        out
    }

    /// `x₁ ⊗ … ⊗ x_k`
    pub fn pure(factors: &[AlgebraElement]) -> Result<Self> {
        let group = factors.first().ok_or_else(|| Error::ArityMismatch(0, 1))?.group.clone();
        let mut acc: Vec<(Vec<usize>, Scalar)> = vec![(vec![], Scalar::one())];
        for f in factors {
            same_group(&group, &f.group)?;
            let mut next = Vec::new();
            for (t, c) in &acc {
                for (&g, d) in &f.terms {
                    let mut t2 = t.clone();
                    t2.push(g);
                    next.push((t2, c * d));
                }
            }
            acc = next;
        }
        Ok(Self::from_terms(&group, factors.len(), acc))
    }

    /// Dense coordinates, row-major over tuples (first slot most significant).
    pub fn from_vector(group: &Arc<Group>, arity: usize, v: &[Scalar]) -> Self {
        let n = group.order();
        assert_eq!(v.len(), n.pow(arity as u32));
        Self::from_terms(
            group,
            arity,
            v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (unflatten(i, n, arity), c.clone())),
        )
    }

    pub fn to_vector(&self) -> Vec<Scalar> {
        let n = self.group.order();
        let mut v = vec![Scalar::zero(); n.pow(self.arity as u32)];
        for (t, c) in &self.terms {
            v[flatten(t, n)] = c.clone();
        }
        v
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn terms(&self) -> &BTreeMap<Vec<usize>, Scalar> {
        &self.terms
    }

    pub fn coeff(&self, t: &[usize]) -> Scalar {
        self.terms.get(t).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn check(&self, other: &Self) -> Result<()> {
        same_group(&self.group, &other.group)?;
        if self.arity != other.arity {
            return Err(Error::ArityMismatch(self.arity, other.arity));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (t, c) in &other.terms {
            insert_term(&mut out.terms, t.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&Scalar::from_int(-1)))
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Self::from_terms(&self.group, self.arity, self.terms.iter().map(|(t, c)| (t.clone(), c * s)))
    }

    /// Componentwise product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let grp = &self.group;
        let mut map = BTreeMap::new();
        for (s, x) in &self.terms {
            for (t, y) in &other.terms {
                let st: Vec<usize> = s.iter().zip(t).map(|(&a, &b)| grp.mul(a, b)).collect();
                insert_term(&mut map, st, x * y);
            }
        }
        Ok(TensorElement { group: grp.clone(), arity: self.arity, terms: map })
    }

    /// Relabels every basis tuple.
    pub fn map_tuples(&self, arity: usize, f: impl Fn(&[usize]) -> Vec<usize>) -> Self {
        Self::from_terms(&self.group, arity, self.terms.iter().map(|(t, c)| (f(t), c.clone())))
    }

    /// Swaps the two slots of an arity-2 tensor (`x₂₁`).
    pub fn flip(&self) -> Self {
        self.map_tuples(self.arity, |t| t.iter().rev().cloned().collect())
    }

    /// Applies Δ to one slot, raising the arity by one.
    pub fn delta_slot(&self, slot: usize) -> Self {
        self.map_tuples(self.arity + 1, |t| {
            let mut u = t[..=slot].to_vec();
            u.extend_from_slice(&t[slot..]);
            u
        })
    }

    /// Applies the antipode to one slot.
    pub fn antipode_slot(&self, slot: usize) -> Self {
        self.map_tuples(self.arity, |t| {
            let mut u = t.to_vec();
            u[slot] = self.group.inv(u[slot]);
            u
        })
    }

    /// Applies ε to one slot, lowering the arity by one.
    pub fn counit_slot(&self, slot: usize) -> Self {
        self.map_tuples(self.arity - 1, |t| {
            let mut u = t.to_vec();
            u.remove(slot);
            u
        })
    }

    /// Multiplies all slots together (arity 1 result as an algebra element).
    pub fn multiply_out(&self) -> AlgebraElement {
        let grp = &self.group;
        AlgebraElement::from_terms(
            grp,
            self.terms.iter().map(|(t, c)| (t.iter().fold(0, |acc, &g| grp.mul(acc, g)), c.clone())),
        )
    }

    /// Acts on a single slot.
    pub fn act_slot(&self, action: Action, h: &AlgebraElement, slot: usize) -> Result<Self> {
        same_group(&self.group, &h.group)?;
        let grp = &self.group;
        let mut out = Self::zero(grp, self.arity);
        for (&g, c) in &h.terms {
            let moved = self
                .map_tuples(self.arity, |t| {
                    let mut u = t.to_vec();
                    u[slot] = action.on_group(grp, g, u[slot]);
                    u
                })
                .scale(c);
            out = out.add(&moved)?;
        }
        Ok(out)
    }

    /// `[x]_G = Σ_g (g⊗g) x (g⁻¹⊗g⁻¹)` for arity 2 (and the analogue in any arity).
    pub fn orbit_sum(&self) -> Self {
        let grp = &self.group;
        let mut map = BTreeMap::new();
        for g in 0..grp.order() {
            for (t, c) in &self.terms {
                insert_term(&mut map, t.iter().map(|&a| grp.conj(g, a)).collect(), c.clone());
            }
        }
        TensorElement { group: grp.clone(), arity: self.arity, terms: map }
    }

    /// Whether `x` commutes with `Δ^{(k)}(g)` for every group element `g`.
    pub fn commutes_with_coproduct(&self) -> bool {
        let grp = &self.group;
        grp.generators().iter().all(|&g| {
            let moved = self.map_tuples(self.arity, |t| t.iter().map(|&a| grp.conj(g, a)).collect());
            moved == *self
        })
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self.terms.iter().map(|(t, c)| json!([t, c.to_string()])).collect();
        json!({
            "group": serde_json::to_value(self.group.spec()).expect("group descriptor"),
            "arity": self.arity,
            "terms": terms,
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let spec: GroupSpec = serde_json::from_value(v.get("group").cloned().unwrap_or(Value::Null))
            .map_err(|e| Error::Parse(format!("group descriptor: {}", e)))?;
        let group = make_group(&spec)?;
        Self::from_json_in(&group, v)
    }

    /// Parses the JSON format against an already constructed group.
    pub fn from_json_in(group: &Arc<Group>, v: &Value) -> Result<Self> {
        let arity = v
            .get("arity")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Parse("missing arity".into()))? as usize;
        if arity == 0 {
            return Err(Error::Parse("arity must be at least 1".into()));
        }
        let terms = v.get("terms").and_then(Value::as_array).ok_or_else(|| Error::Parse("missing terms".into()))?;
        let mut out = Self::zero(group, arity);
        for term in terms {
            let pair = term.as_array().filter(|p| p.len() == 2).ok_or_else(|| Error::Parse("term must be [tuple, scalar]".into()))?;
            let tuple: Vec<usize> = serde_json::from_value(pair[0].clone()).map_err(|e| Error::Parse(e.to_string()))?;
            if tuple.len() != arity {
                return Err(Error::ArityMismatch(tuple.len(), arity));
            }
            if tuple.iter().any(|&g| g >= group.order()) {
                return Err(Error::Parse(format!("element index out of range in {:?}", tuple)));
            }
            let c: Scalar = pair[1].as_str().ok_or_else(|| Error::Parse("scalar must be a string".into()))?.parse()?;
            insert_term(&mut out.terms, tuple, c);
        }
        Ok(out)
    }
}

fn flatten(t: &[usize], n: usize) -> usize {
    t.iter().fold(0, |acc, &g| acc * n + g)
}

fn unflatten(mut i: usize, n: usize, arity: usize) -> Vec<usize> {
    let mut t = vec![0; arity];
    for k in (0..arity).rev() {
        t[k] = i % n;
        i /= n;
    }
    t
}

/// Element of the dual (kG)*, dense in the basis `δ_g`.
#[derive(Clone, Debug)]
pub struct Functional {
    group: Arc<Group>,
    values: Vec<Scalar>,
}

impl PartialEq for Functional {
    fn eq(&self, other: &Self) -> bool {
        self.group.spec() == other.group.spec() && self.values == other.values
    }
}

impl Functional {
    pub fn new(group: &Arc<Group>, values: Vec<Scalar>) -> Result<Self> {
        if values.len() != group.order() {
            return Err(Error::DimensionMismatch(format!("{} values for a group of order {}", values.len(), group.order())));
        }
        Ok(Functional { group: group.clone(), values })
    }

    pub fn zero(group: &Arc<Group>) -> Self {
        Functional { group: group.clone(), values: vec![Scalar::zero(); group.order()] }
    }

    /// The counit, the unit for convolution.
    pub fn epsilon(group: &Arc<Group>) -> Self {
        Functional { group: group.clone(), values: vec![Scalar::one(); group.order()] }
    }

    pub fn delta(group: &Arc<Group>, g: usize) -> Self {
        let mut f = Self::zero(group);
        f.values[g] = Scalar::one();
        f
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }

    pub fn into_values(self) -> Vec<Scalar> {
        self.values
    }

    pub fn at(&self, g: usize) -> &Scalar {
        &self.values[g]
    }

    pub fn pair(&self, x: &AlgebraElement) -> Result<Scalar> {
        same_group(&self.group, &x.group)?;
        Ok(x.terms.iter().map(|(&g, c)| c * &self.values[g]).sum())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        same_group(&self.group, &other.group)?;
        Ok(Functional { group: self.group.clone(), values: self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect() })
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Functional { group: self.group.clone(), values: self.values.iter().map(|a| a * s).collect() }
    }

    /// `(ξ·ξ')(h) = ξ(h₁)ξ'(h₂)`, pointwise on group elements.
    pub fn convolve(&self, other: &Self) -> Result<Self> {
        same_group(&self.group, &other.group)?;
        Ok(Functional { group: self.group.clone(), values: self.values.iter().zip(&other.values).map(|(a, b)| a * b).collect() })
    }

    pub fn act(&self, action: Action, h: &AlgebraElement) -> Result<Self> {
        same_group(&self.group, &h.group)?;
        let grp = &self.group;
        let mut out = Self::zero(grp);
        for (&g, c) in &h.terms {
            for x in 0..grp.order() {
                let t = c * &self.values[action.pullback(grp, g, x)];
                out.values[x] += &t;
            }
        }
        Ok(out)
    }

    /// Constant on conjugacy classes.
    pub fn is_class_function(&self) -> bool {
        let grp = &self.group;
        (0..grp.order()).all(|x| grp.generators().iter().all(|&g| self.values[grp.conj(g, x)] == self.values[x]))
    }
}

/// Common solution space, inside kG (as coordinate vectors), of the equations
/// `lhs(h, b) = rhs(h, b)` for all basis `h` and linear in `b`.
pub fn solution_subspace(
    group: &Arc<Group>,
    lhs: impl Fn(&AlgebraElement, &AlgebraElement) -> AlgebraElement,
    rhs: impl Fn(&AlgebraElement, &AlgebraElement) -> AlgebraElement,
) -> Subspace {
    let n = group.order();
    let mut m = Matrix::zeros(n * n, n);
    for h in 0..n {
        let he = AlgebraElement::basis(group, h);
        for b in 0..n {
            let be = AlgebraElement::basis(group, b);
            let diff = lhs(&he, &be).sub(&rhs(&he, &be)).expect("same group");
            for (&row, c) in diff.terms() {
                m.set(h * n + row, b, c.clone());
            }
        }
    }
    Subspace::span(n, m.nullspace()).expect("nullspace vectors")
}

/// `Z(kG)`: elements commuting with every basis element.
pub fn center(group: &Arc<Group>) -> Subspace {
    solution_subspace(group, |h, b| h.mul(b).unwrap(), |h, b| b.mul(h).unwrap())
}

/// `{b : h·b = ε(h) b}` for the given action on kG.
pub fn action_invariants(group: &Arc<Group>, action: Action) -> Subspace {
    solution_subspace(group, |h, b| b.act(action, h).unwrap(), |h, b| b.scale(&h.counit()))
}

/// `{b : S(h) b = b S(h)}`.
pub fn antipode_invariants(group: &Arc<Group>) -> Subspace {
    solution_subspace(
        group,
        |h, b| h.antipode().mul(b).unwrap(),
        |h, b| b.mul(&h.antipode()).unwrap(),
    )
}

/// `(kG*)^H = {ξ : h▷ξ = ξ◁h}`.
pub fn invariant_functionals(group: &Arc<Group>) -> Subspace {
    let n = group.order();
    let mut rows = Vec::new();
    for h in 0..n {
        let he = AlgebraElement::basis(group, h);
        let mut m = Matrix::zeros(n, n);
        for x in 0..n {
            let d = Functional::delta(group, x);
            let l = d.act(Action::Left, &he).unwrap();
            let r = d.act(Action::Right, &he).unwrap();
            for y in 0..n {
                m.set(y, x, l.at(y) - r.at(y));
            }
        }
        rows.extend(m.to_rows());
    }
    let m = Matrix::from_rows(rows).expect("rectangular");
    Subspace::span(n, m.nullspace()).expect("nullspace vectors")
}

/// Exhaustive check of coassociativity, counit and antipode laws on the basis.
pub fn verify_hopf_axioms(group: &Arc<Group>) -> bool {
    (0..group.order()).all(|g| {
        let x = AlgebraElement::basis(group, g);
        let d = x.delta();
        let coassoc = d.delta_slot(0) == d.delta_slot(1);
        let counit = d.counit_slot(0).multiply_out() == x && d.counit_slot(1).multiply_out() == x;
        let unit = AlgebraElement::one(group).scale(&x.counit());
        let antipode = d.antipode_slot(0).multiply_out() == unit && d.antipode_slot(1).multiply_out() == unit;
        let involutive = x.antipode().antipode() == x;
        coassoc && counit && antipode && involutive
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{dihedral, symmetric};

    fn s3() -> Arc<Group> {
        Arc::new(symmetric(3).unwrap())
    }

    #[test]
    fn products() {
        let g = s3();
        let s1 = g.element("s1").unwrap();
        let one = AlgebraElement::one(&g);
        let x = one.add(&AlgebraElement::basis(&g, s1)).unwrap();
        let y = one.sub(&AlgebraElement::basis(&g, s1)).unwrap();
        assert!(x.mul(&y).unwrap().is_zero());
        let a = g.element("s1s2").unwrap();
        let e = AlgebraElement::basis(&g, a).mul(&AlgebraElement::basis(&g, g.inv(a))).unwrap();
        assert_eq!(e, one);
        let t = TensorElement::basis(&g, &[1, 2]).mul(&TensorElement::basis(&g, &[3, 4])).unwrap();
        assert_eq!(t, TensorElement::basis(&g, &[g.mul(1, 3), g.mul(2, 4)]));
        assert!(TensorElement::one(&g, 2).mul(&TensorElement::one(&g, 3)).is_err());
    }

    #[test]
    fn structure_maps() {
        let g = s3();
        assert_eq!(AlgebraElement::one(&g).delta(), TensorElement::one(&g, 2));
        assert_eq!(AlgebraElement::sum_of_elements(&g).counit(), Scalar::from_int(6));
        let c = g.element("s1s2").unwrap();
        assert_eq!(AlgebraElement::basis(&g, c).antipode(), AlgebraElement::basis(&g, g.element("s2s1").unwrap()));
        assert!(verify_hopf_axioms(&g));
        assert!(verify_hopf_axioms(&Arc::new(dihedral(4).unwrap())));
    }

    #[test]
    fn actions() {
        let g = s3();
        let (s1, s2) = (g.element("s1").unwrap(), g.element("s2").unwrap());
        let h = AlgebraElement::basis(&g, s1);
        assert_eq!(AlgebraElement::one(&g).act(Action::Ad, &h).unwrap(), AlgebraElement::one(&g));
        assert_eq!(
            AlgebraElement::basis(&g, s2).act(Action::Ad, &h).unwrap(),
            AlgebraElement::basis(&g, g.element("s1s2s1").unwrap())
        );
        // module laws on a pair of elements
        let a = AlgebraElement::basis(&g, g.element("s1s2").unwrap());
        let b = AlgebraElement::from_terms(&g, [(s2, Scalar::from_int(3)), (0, Scalar::rational(1, 2))]);
        let ab = a.mul(&h).unwrap();
        for action in Action::ALL {
            let lhs = b.act(action, &ab).unwrap();
            let rhs = if action.is_left_action_on_algebra() {
                b.act(action, &h).unwrap().act(action, &a).unwrap()
            } else {
                b.act(action, &a).unwrap().act(action, &h).unwrap()
            };
            assert_eq!(lhs, rhs, "{:?}", action);
        }
    }

    #[test]
    fn functional_operations() {
        let g = s3();
        let xi = Functional::new(&g, (0..6).map(Scalar::from_int).collect()).unwrap();
        assert_eq!(Functional::epsilon(&g).convolve(&xi).unwrap(), xi);
        assert_eq!(Functional::delta(&g, 2).convolve(&Functional::delta(&g, 2)).unwrap(), Functional::delta(&g, 2));
        assert_eq!(Functional::delta(&g, 2).convolve(&Functional::delta(&g, 3)).unwrap(), Functional::zero(&g));
        let x = AlgebraElement::from_terms(&g, [(4, Scalar::from_int(7)), (1, Scalar::from_int(2))]);
        assert_eq!(Functional::delta(&g, 4).pair(&x).unwrap(), Scalar::from_int(7));
        // class functions are diamond invariant
        let class = Functional::new(&g, (0..6).map(|a| Scalar::from_int(g.class_of(a) as i64 + 1)).collect()).unwrap();
        for h in 0..6 {
            let he = AlgebraElement::basis(&g, h);
            assert_eq!(class.act(Action::Diamond, &he).unwrap(), class.scale(&he.counit()));
        }
    }

    #[test]
    fn orbit_sums() {
        let g = s3();
        assert_eq!(TensorElement::one(&g, 2).orbit_sum(), TensorElement::one(&g, 2).scale(&Scalar::from_int(6)));
        let s1 = g.element("s1").unwrap();
        let expected = TensorElement::from_terms(
            &g,
            2,
            g.classes()[g.class_of(s1)].iter().map(|&t| (vec![t, 0], Scalar::from_int(2))),
        );
        assert_eq!(TensorElement::basis(&g, &[s1, 0]).orbit_sum(), expected);
    }

    #[test]
    fn invariant_subspaces_agree() {
        for grp in [s3(), Arc::new(dihedral(4).unwrap())] {
            let z = center(&grp);
            assert_eq!(z.dim(), grp.classes().len());
            assert_eq!(action_invariants(&grp, Action::Ad), z);
            assert_eq!(action_invariants(&grp, Action::Diamond), z);
            assert_eq!(antipode_invariants(&grp), z);
            assert_eq!(invariant_functionals(&grp).dim(), grp.classes().len());
        }
    }

    #[test]
    fn json_round_trip() {
        let g = s3();
        let x = TensorElement::from_terms(&g, 2, [(vec![1, 2], Scalar::rational(1, 6)), (vec![0, 0], Scalar::one())]);
        let back = TensorElement::from_json(&x.to_json()).unwrap();
        assert_eq!(back, x);
        let v = x.to_vector();
        assert_eq!(TensorElement::from_vector(&g, 2, &v), x);
    }
}
