//! The transfer map `Φ_P(ξ) = (ξ⊗1)(P)` from `kG*` to `kG` and the
//! membership predicates built on it.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::groups::Group;
use crate::hopf::{Action, AlgebraElement, Functional, TensorElement};
use crate::linalg::{solve_linear, LinearSolution, Matrix, Subspace};
use crate::peter_weyl::{component, z};
use crate::reps::{decompose_against, irreps, K0Element, Rep};
use crate::scalar::Scalar;

/// A candidate kernel with an optional note on where it came from.
#[derive(Clone, Debug, PartialEq)]
pub struct PCandidate {
    pub p: TensorElement,
    pub note: Option<String>,
}

impl PCandidate {
    pub fn new(p: TensorElement) -> Self {
        PCandidate { p, note: None }
    }

    pub fn with_note(p: TensorElement, note: &str) -> Self {
        PCandidate { p, note: Some(note.to_string()) }
    }
}

/// `Φ_P(ξ) = Σ P(a,b) ξ(a) b`.
pub fn phi(p: &TensorElement, xi: &Functional) -> Result<AlgebraElement> {
    if p.group().spec() != xi.group().spec() {
        return Err(Error::GroupMismatch(p.group().name(), xi.group().name()));
    }
    let terms = p.terms().iter().map(|(t, c)| (t[1], c * xi.at(t[0])));
    Ok(AlgebraElement::from_terms(p.group(), terms))
}

/// Matrix of `Φ_P` in the bases `δ_g` and `g`; column `a` is `Φ_P(δ_a)`.
pub fn phi_matrix(p: &TensorElement) -> Matrix {
    let n = p.group().order();
    let mut m = Matrix::zeros(n, n);
    for (t, c) in p.terms() {
        m.set(t[1], t[0], c.clone());
    }
    m
}

pub fn phi_rank(p: &TensorElement) -> usize {
    phi_matrix(p).rank()
}

fn phi_subspace(m: &Matrix, s: &Subspace) -> Subspace {
    Subspace::span(m.rows(), s.basis().iter().map(|v| m.mul_vec(v))).expect("ambient |G|")
}

/// The three equivalent forms of `P ∈ 𝒜(kG)`, evaluated on group elements `hs`.
///
/// (a) `P(g⊗g) = (g⊗g)P`; (b) `(1⊗g)P = Σ P(a,b) g⁻¹ag ⊗ bg`;
/// (c) `Σ P(a,b) g⁻¹ag ⊗ b = Σ P(a,b) a ⊗ gbg⁻¹`.
pub fn a_conditions_on(p: &TensorElement, hs: &[usize]) -> [bool; 3] {
    let grp = p.group().clone();
    let mut out = [true; 3];
    for &g in hs {
        let gg = TensorElement::basis(&grp, &[g, g]);
        out[0] &= p.mul(&gg).unwrap() == gg.mul(p).unwrap();
        let lhs = TensorElement::basis(&grp, &[0, g]).mul(p).unwrap();
        let rhs = p.map_tuples(2, |t| vec![grp.conj(grp.inv(g), t[0]), grp.mul(t[1], g)]);
        out[1] &= lhs == rhs;
        let lhs = p.map_tuples(2, |t| vec![grp.conj(grp.inv(g), t[0]), t[1]]);
        let rhs = p.map_tuples(2, |t| vec![t[0], grp.conj(g, t[1])]);
        out[2] &= lhs == rhs;
    }
    out
}

/// `P ∈ 𝒜(kG)` checked on generators; errors if the three forms disagree.
pub fn in_a(p: &TensorElement) -> Result<bool> {
    let c = a_conditions_on(p, p.group().generators());
    if c[0] != c[1] || c[1] != c[2] {
        return Err(Error::Internal(format!("commutation conditions disagree: {:?}", c)));
    }
    Ok(c[0])
}

/// Precomputed per-group data for the membership predicates.
pub struct PhiContext {
    pub group: Arc<Group>,
    pub irreps: Vec<Rep>,
    pub components: Vec<Subspace>,
    /// `components_of_tensor[i][j]` is `H*_{V_i ⊗ V_j}`.
    pub components_of_tensor: Vec<Vec<Subspace>>,
    pub characters: Vec<Functional>,
    pub center: Subspace,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MembershipReport {
    pub a_conditions: [bool; 3],
    pub a: bool,
    pub m: bool,
    pub m_witnesses: Vec<(String, String)>,
    pub hom_on_invariants: bool,
    pub center_image: bool,
    pub m0: bool,
    pub rank: usize,
}

impl MembershipReport {
    pub fn to_json(&self) -> Value {
        let witnesses: Vec<Value> = self.m_witnesses.iter().map(|(a, b)| json!([a, b])).collect();
        json!({
            "A": self.a,
            "A_conditions": self.a_conditions,
            "M": self.m,
            "M_witnesses": witnesses,
            "M0": self.m0,
            "hom_on_invariants": self.hom_on_invariants,
            "center_image": self.center_image,
            "rank": self.rank,
        })
    }
}

impl PhiContext {
    pub fn new(group: &Arc<Group>) -> Result<PhiContext> {
        let irreps = irreps(group)?;
        let components: Vec<Subspace> = irreps.iter().map(|r| component(r).subspace).collect();
        let mut components_of_tensor = Vec::new();
        for a in &irreps {
            let mut row = Vec::new();
            for b in &irreps {
                row.push(component(&a.tensor(b)?).subspace);
            }
            components_of_tensor.push(row);
        }
        let characters = irreps.iter().map(z).collect();
        Ok(PhiContext {
            group: group.clone(),
            irreps,
            components,
            components_of_tensor,
            characters,
            center: crate::hopf::center(group),
        })
    }

    fn check_group(&self, p: &TensorElement) -> Result<()> {
        if p.group().spec() != self.group.spec() {
            return Err(Error::GroupMismatch(p.group().name(), self.group.name()));
        }
        if p.arity() != 2 {
            return Err(Error::ArityMismatch(p.arity(), 2));
        }
        Ok(())
    }

    /// Pairs `(V, W)` of irreducibles with `Φ(H*_V)·Φ(H*_W) ⊄ Φ(H*_{V⊗W})`.
    pub fn m_witnesses(&self, p: &TensorElement) -> Result<Vec<(String, String)>> {
        self.check_group(p)?;
        let m = phi_matrix(p);
        let images: Vec<Vec<AlgebraElement>> = self
            .components
            .iter()
            .map(|c| c.basis().iter().map(|v| AlgebraElement::from_vector(&self.group, &m.mul_vec(v))).collect())
            .collect();
        let mut out = Vec::new();
        for i in 0..self.irreps.len() {
            for j in 0..self.irreps.len() {
                let target = phi_subspace(&m, &self.components_of_tensor[i][j]);
                let ok = images[i].iter().all(|x| {
                    images[j].iter().all(|y| target.contains(&x.mul(y).unwrap().to_vector()))
                });
                if !ok {
                    out.push((self.irreps[i].label().to_string(), self.irreps[j].label().to_string()));
                }
            }
        }
        Ok(out)
    }

    pub fn in_m(&self, p: &TensorElement) -> Result<bool> {
        Ok(self.m_witnesses(p)?.is_empty())
    }

    /// `Φ(z_V z_W) = Φ(z_V)Φ(z_W)` for all pairs of irreducibles.
    pub fn hom_on_invariants(&self, p: &TensorElement) -> Result<bool> {
        self.check_group(p)?;
        let images: Vec<AlgebraElement> = self.characters.iter().map(|c| phi(p, c)).collect::<Result<_>>()?;
        for (i, a) in self.characters.iter().enumerate() {
            for (j, b) in self.characters.iter().enumerate() {
                if phi(p, &a.convolve(b)?)? != images[i].mul(&images[j])? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Every `Φ(z_V)` lies in `Z(kG)`.
    pub fn center_image(&self, p: &TensorElement) -> Result<bool> {
        self.check_group(p)?;
        for c in &self.characters {
            if !self.center.contains(&phi(p, c)?.to_vector()) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `Φ_P` restricted to class functions is an algebra map into `Z(kG)`.
    /// The class functions are spanned by the characters of irreducibles, so
    /// this is checked on pairs of characters. Containment of components
    /// (`in_m`) is reported separately.
    pub fn in_m0(&self, p: &TensorElement) -> Result<bool> {
        Ok(self.hom_on_invariants(p)? && self.center_image(p)?)
    }

    pub fn report(&self, p: &TensorElement) -> Result<MembershipReport> {
        self.check_group(p)?;
        let a_conditions = a_conditions_on(p, self.group.generators());
        let a = in_a(p)?;
        let m_witnesses = self.m_witnesses(p)?;
        let m = m_witnesses.is_empty();
        let hom_on_invariants = self.hom_on_invariants(p)?;
        let center_image = self.center_image(p)?;
        Ok(MembershipReport {
            a_conditions,
            a,
            m,
            m_witnesses,
            hom_on_invariants,
            center_image,
            m0: hom_on_invariants && center_image,
            rank: phi_rank(p),
        })
    }

    /// Mock Peter-Weyl decomposition `kG = ⊕ Φ_P(H*_V)`.
    pub fn mock_pw_decomposition(&self, p: &TensorElement) -> Result<MockPW> {
        self.check_group(p)?;
        if !in_a(p)? {
            return Err(Error::Precondition("P does not commute with the coproduct".into()));
        }
        if !self.in_m(p)? {
            return Err(Error::Precondition("Φ_P does not respect the Peter-Weyl components".into()));
        }
        let n = self.group.order();
        let m = phi_matrix(p);
        if m.rank() != n {
            return Err(Error::Precondition("Φ_P is not injective".into()));
        }
        let mut blocks = Vec::new();
        let mut total = Subspace::zero(n);
        let mut dims = 0;
        for (i, rep) in self.irreps.iter().enumerate() {
            let sub = phi_subspace(&m, &self.components[i]);
            let ad_stable = self.group.generators().iter().all(|&g| {
                let ge = AlgebraElement::basis(&self.group, g);
                sub.basis().iter().all(|v| {
                    sub.contains(&AlgebraElement::from_vector(&self.group, v).act(Action::Ad, &ge).unwrap().to_vector())
                })
            });
            let ad_type = if ad_stable {
                Some(character_decomposition(&ad_character(&self.group, &sub), &self.irreps)?)
            } else {
                None
            };
            let expected = decompose_against(&rep.tensor(&rep.contragredient())?, &self.irreps)?;
            dims += sub.dim();
            total = total.sum(&sub)?;
            blocks.push(MockBlock {
                label: rep.label().to_string(),
                dim: sub.dim(),
                ad_stable,
                ad_type_matches: ad_type.as_ref() == Some(&expected),
                ad_type,
                expected_type: expected,
                subspace: sub,
            });
        }
        let central: Vec<AlgebraElement> = self.characters.iter().map(|c| phi(p, c)).collect::<Result<_>>()?;
        let span = Subspace::span(n, central.iter().map(AlgebraElement::to_vector))?;
        Ok(MockPW {
            direct: dims == n && total.dim() == n,
            central_independent: span.dim() == central.len(),
            central_spans_center: span == self.center,
            central,
            blocks,
        })
    }
}

fn character_decomposition(chi: &Functional, irreps: &[Rep]) -> Result<K0Element> {
    let mut multiplicities = Vec::new();
    for w in irreps {
        let m = crate::reps::character_inner_product(chi, &w.character());
        multiplicities.push(m.to_i64().ok_or_else(|| Error::Internal(format!("non-integral multiplicity {}", m)))?);
    }
    Ok(K0Element { labels: irreps.iter().map(|w| w.label().to_string()).collect(), multiplicities })
}

/// Character of the conjugation action restricted to an ad-stable subspace.
fn ad_character(group: &Arc<Group>, sub: &Subspace) -> Functional {
    let values = (0..group.order())
        .map(|g| {
            let ge = AlgebraElement::basis(group, g);
            sub.basis()
                .iter()
                .enumerate()
                .map(|(i, v)| {
                    let moved = AlgebraElement::from_vector(group, v).act(Action::Ad, &ge).unwrap().to_vector();
                    sub.coordinates(&moved).expect("ad-stable")[i].clone()
                })
                .sum()
        })
        .collect();
    Functional::new(group, values).expect("one value per element")
}

#[derive(Clone, Debug)]
pub struct MockBlock {
    pub label: String,
    pub dim: usize,
    pub ad_stable: bool,
    pub ad_type: Option<K0Element>,
    pub expected_type: K0Element,
    pub ad_type_matches: bool,
    pub subspace: Subspace,
}

#[derive(Clone, Debug)]
pub struct MockPW {
    pub blocks: Vec<MockBlock>,
    pub direct: bool,
    pub central: Vec<AlgebraElement>,
    pub central_independent: bool,
    pub central_spans_center: bool,
}

impl MockPW {
    pub fn to_json(&self) -> Value {
        let blocks: Vec<Value> = self
            .blocks
            .iter()
            .map(|b| {
                json!({
                    "label": b.label,
                    "dim": b.dim,
                    "ad_stable": b.ad_stable,
                    "ad_type": b.ad_type.as_ref().map(K0Element::to_json),
                    "expected_type": b.expected_type.to_json(),
                    "ad_type_matches": b.ad_type_matches,
                })
            })
            .collect();
        let central: Vec<Vec<String>> = self.central.iter().map(|c| c.to_vector().iter().map(|s| s.to_string()).collect()).collect();
        json!({
            "blocks": blocks,
            "direct": self.direct,
            "central": central,
            "central_independent": self.central_independent,
            "central_spans_center": self.central_spans_center,
        })
    }
}

/// `Φ_P(g⋄ξ) = (ad g)Φ_P(ξ)` for every generator `g` and every `δ_x`.
pub fn equivariance_check(p: &TensorElement) -> Result<bool> {
    if !in_a(p)? {
        return Err(Error::Precondition("P does not commute with the coproduct".into()));
    }
    let grp = p.group();
    for &g in grp.generators() {
        let ge = AlgebraElement::basis(grp, g);
        for x in 0..grp.order() {
            let xi = Functional::delta(grp, x);
            if phi(p, &xi.act(Action::Diamond, &ge)?)? != phi(p, &xi)?.act(Action::Ad, &ge)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `Φ_P` maps every class indicator into the center.
pub fn center_image_check(p: &TensorElement) -> Result<bool> {
    if !in_a(p)? {
        return Err(Error::Precondition("P does not commute with the coproduct".into()));
    }
    let grp = p.group();
    for class in grp.classes() {
        let mut values = vec![Scalar::zero(); grp.order()];
        for &c in class {
            values[c] = Scalar::one();
        }
        let img = phi(p, &Functional::new(grp, values)?)?;
        for &g in grp.generators() {
            let ge = AlgebraElement::basis(grp, g);
            if img.mul(&ge)? != ge.mul(&img)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `Q(x, x', z) = Σ_{yy' = z} P(x,y) P(x',y')`, keyed by `(x, x', z)`.
fn pair_products(p: &TensorElement) -> BTreeMap<(usize, usize, usize), Scalar> {
    let grp = p.group();
    let mut q: BTreeMap<(usize, usize, usize), Scalar> = BTreeMap::new();
    for (s, a) in p.terms() {
        for (t, b) in p.terms() {
            let key = (s[0], t[0], grp.mul(s[1], t[1]));
            let c = a * b;
            let e = q.entry(key).or_insert_with(Scalar::zero);
            *e += &c;
        }
    }
    q.retain(|_, c| !c.is_zero());
    q
}

/// `(m⊗m⊗1)((T⊗1)P₁₅P₃₅) = Σ T(a,b,c,d) P(x,y)P(x',y') axb ⊗ cx'd ⊗ yy'`.
pub fn t_product(p: &TensorElement, t: &TensorElement) -> Result<TensorElement> {
    if t.arity() != 4 {
        return Err(Error::ArityMismatch(t.arity(), 4));
    }
    let grp = p.group().clone();
    let q = pair_products(p);
    let mut out: BTreeMap<Vec<usize>, Scalar> = BTreeMap::new();
    for (abcd, tau) in t.terms() {
        let (a, b, c, d) = (abcd[0], abcd[1], abcd[2], abcd[3]);
        for (&(x, x2, zz), qv) in &q {
            let key = vec![grp.mul(grp.mul(a, x), b), grp.mul(grp.mul(c, x2), d), zz];
            let v = tau * qv;
            let e = out.entry(key).or_insert_with(Scalar::zero);
            *e += &v;
        }
    }
    Ok(TensorElement::from_terms(&grp, 3, out))
}

/// `(Δ⊗1)(P) = (m⊗m⊗1)((T⊗1)P₁₅P₃₅)`.
pub fn check_t(p: &TensorElement, t: &TensorElement) -> Result<bool> {
    Ok(t_product(p, t)? == p.delta_slot(0))
}

/// `(m^op ⊗ m^op)(T) = 1⊗1`.
pub fn check_t_normalized(t: &TensorElement) -> bool {
    let grp = t.group();
    let prod = t.map_tuples(2, |u| vec![grp.mul(u[1], u[0]), grp.mul(u[3], u[2])]);
    prod == TensorElement::one(grp, 2)
}

/// Solves the linear system for `T` in `(Δ⊗1)(P) = (m⊗m⊗1)((T⊗1)P₁₅P₃₅)`:
/// `|G|³` equations in `|G|⁴` unknowns. `None` means no solution exists.
pub fn solve_t(p: &TensorElement) -> Result<Option<TensorElement>> {
    let (m, rhs) = t_system(p);
    let grp = p.group();
    match solve_linear(&m, &rhs)? {
        LinearSolution::Infeasible => Ok(None),
        LinearSolution::Feasible { particular, .. } => Ok(Some(TensorElement::from_vector(grp, 4, &particular))),
    }
}

/// Coefficient matrix and right-hand side of the `T` system.
/// Rows are indexed by `(i, j, k)`, columns by `(a, b, c, d)`, both row-major.
pub fn t_system(p: &TensorElement) -> (Matrix, Vec<Scalar>) {
    let grp = p.group();
    let n = grp.order();
    let q = pair_products(p);
    let mut m = Matrix::zeros(n * n * n, n * n * n * n);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    let col = ((a * n + b) * n + c) * n + d;
                    for (&(x, x2, zz), qv) in &q {
                        let i = grp.mul(grp.mul(a, x), b);
                        let j = grp.mul(grp.mul(c, x2), d);
                        let row = (i * n + j) * n + zz;
                        let cur = m.get(row, col).clone();
                        m.set(row, col, cur + qv);
                    }
                }
            }
        }
    }
    (m, p.delta_slot(0).to_vector())
}

/// `Φ_P(ξ·ξ') = Σ_T Φ_P(t₂▷ξ◁t₁) · Φ_P(t₄▷ξ'◁t₃)`.
pub fn phi_mult_identity(p: &TensorElement, t: &TensorElement, xi: &Functional, xi2: &Functional) -> Result<bool> {
    let grp = p.group();
    let lhs = phi(p, &xi.convolve(xi2)?)?;
    let mut rhs = AlgebraElement::zero(grp);
    for (u, tau) in t.terms() {
        let b = |k: usize| AlgebraElement::basis(grp, u[k]);
        let left = xi.act(Action::Left, &b(1))?.act(Action::Right, &b(0))?;
        let right = xi2.act(Action::Left, &b(3))?.act(Action::Right, &b(2))?;
        rhs = rhs.add(&phi(p, &left)?.mul(&phi(p, &right)?)?.scale(tau))?;
    }
    Ok(lhs == rhs)
}

/// Places the slots of `x` at the given positions of an arity-`arity`
/// tensor, with `1` elsewhere (e.g. `R₁₃`).
pub fn legs(x: &TensorElement, arity: usize, positions: &[usize]) -> TensorElement {
    assert_eq!(positions.len(), x.arity());
    x.map_tuples(arity, |t| {
        let mut u = vec![0; arity];
        for (k, &pos) in positions.iter().enumerate() {
            u[pos] = t[k];
        }
        u
    })
}

/// The axioms of an R-pair; `Err(Membership)` names the first failure.
pub fn r_membership_check(rp: &TensorElement, rm: &TensorElement) -> Result<()> {
    let grp = rp.group();
    let core = rp.flip().mul(rm)?;
    for &g in grp.generators() {
        let dg = TensorElement::basis(grp, &[g, g]);
        if core.mul(&dg)? != dg.mul(&core)? {
            return Err(Error::Membership("R⁺₂₁R⁻ does not commute with Δ(h)".into()));
        }
    }
    for (name, r) in [("R⁺", rp), ("R⁻", rm)] {
        if r.delta_slot(0) != legs(r, 3, &[0, 2]).mul(&legs(r, 3, &[1, 2]))? {
            return Err(Error::Membership(format!("(Δ⊗1)({}) ≠ {}₁₃{}₂₃", name, name, name)));
        }
    }
    if rp.delta_slot(1) != legs(rp, 3, &[0, 2]).mul(&legs(rp, 3, &[0, 1]))? {
        return Err(Error::Membership("(1⊗Δ)(R⁺) ≠ R⁺₁₃R⁺₁₂".into()));
    }
    Ok(())
}

pub fn r_membership(rp: &TensorElement, rm: &TensorElement) -> bool {
    r_membership_check(rp, rm).is_ok()
}

/// `g` is a group element (group-like) and `gS²(h) = hg` for all `h`.
pub fn grouplike_check(g: &AlgebraElement) -> bool {
    let grp = g.group();
    let grouplike = g.delta() == TensorElement::pure(&[g.clone(), g.clone()]).unwrap() && g.counit().is_one();
    grouplike
        && (0..grp.order()).all(|h| {
            let he = AlgebraElement::basis(grp, h);
            g.mul(&he.antipode().antipode()).unwrap() == he.mul(g).unwrap()
        })
}

/// `P = R⁺₂₁ R⁻ (g⊗1)`, checked to lie in `𝒜 ∩ ℳ₀`.
pub fn p_from_r(rp: &TensorElement, rm: &TensorElement, g: &AlgebraElement) -> Result<PCandidate> {
    r_membership_check(rp, rm)?;
    if !grouplike_check(g) {
        return Err(Error::Membership("g is not a central group-like element".into()));
    }
    let grp = rp.group();
    let g1 = TensorElement::pure(&[g.clone(), AlgebraElement::one(grp)])?;
    let p = rp.flip().mul(rm)?.mul(&g1)?;
    let ctx = PhiContext::new(grp)?;
    if !in_a(&p)? || !ctx.in_m0(&p)? {
        return Err(Error::Internal("R-pair construction left 𝒜 ∩ ℳ₀".into()));
    }
    Ok(PCandidate::with_note(p, "R-pair"))
}

/// `T = (S⊗S²⊗1⊗1)(R⁺₁₃ R⁺₂₃)`.
pub fn t_from_r(rp: &TensorElement) -> Result<TensorElement> {
    let t = legs(rp, 4, &[0, 2]).mul(&legs(rp, 4, &[1, 2]))?;
    Ok(t.antipode_slot(0))
}

/// `R = (1/n) Σ_{a,b} ζ^{-ab} g^a ⊗ g^b` on `Z_n`, over `Q(ζ_n)`.
pub fn cyclic_r_matrix(group: &Arc<Group>) -> Result<TensorElement> {
    let n = match group.spec() {
        crate::groups::GroupSpec::Cyclic { n } => *n,
        other => return Err(Error::Unsupported(format!("bicharacter R-matrix on {}", other))),
    };
    let g = group.generators().first().copied().unwrap_or(0);
    let mut powers = vec![0usize; n];
    for k in 1..n {
        powers[k] = group.mul(powers[k - 1], g);
    }
    let inv_n = Scalar::rational(1, n as i64);
    let zeta = |k: i64| if n <= 2 { Scalar::from_int(if k.rem_euclid(2) == 0 { 1 } else { -1 }) } else { Scalar::zeta_pow(n, k) };
    let terms = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).map(|(a, b)| {
        (vec![powers[a], powers[b]], (zeta(-((a * b) as i64)) * &inv_n).demote())
    });
    Ok(TensorElement::from_terms(group, 2, terms.collect::<Vec<_>>()))
}

/// `P_{λ,μ}` on `S₃`.
pub fn s3_family(group: &Arc<Group>, lambda: &Scalar, mu: &Scalar) -> Result<PCandidate> {
    if *group.spec() != (crate::groups::GroupSpec::Symmetric { n: 3 }) {
        return Err(Error::Unsupported(format!("the S3 family on {}", group.name())));
    }
    let e = |name: &str| AlgebraElement::basis(group, group.element(name).expect("S3 element"));
    let one = AlgebraElement::one(group);
    let int = |k: i64| Scalar::from_int(k);
    let pure = |a: &AlgebraElement, b: &AlgebraElement| TensorElement::pure(&[a.clone(), b.clone()]);

    let first = pure(&one, &AlgebraElement::sum_of_elements(group))?.scale(&Scalar::rational(1, 6));

    let x = one
        .add(&e("s1").scale(&(mu * int(2) - int(1))))?
        .sub(&e("s2").add(&e("s1s2s1"))?.scale(&(mu + int(1))))?
        .add(&e("s1s2"))?
        .add(&e("s2s1"))?;
    let second = pure(&e("s1"), &x)?.orbit_sum().scale(&Scalar::rational(1, 36));

    let y = one
        .scale(&int(2))
        .add(&e("s1s2").scale(&(lambda - int(1))))?
        .sub(&e("s2s1").scale(&(lambda + int(1))))?;
    let third = pure(&e("s1s2"), &y)?.orbit_sum().scale(&Scalar::rational(1, 18));

    let p = first.add(&second)?.add(&third)?;
    Ok(PCandidate::with_note(p, &format!("s3 family lambda={} mu={}", lambda, mu)))
}

/// `Σ_g g ⊗ g⁻¹`.
pub fn p_regular(group: &Arc<Group>) -> TensorElement {
    TensorElement::from_terms(group, 2, (0..group.order()).map(|g| (vec![g, group.inv(g)], Scalar::one())))
}
