//! Finite-dimensional representations of kG, their duals, tensor products,
//! characters and the irreducible modules of the supported groups.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_integer::Integer;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::groups::{make_group, Group, GroupSpec};
use crate::hopf::Functional;
use crate::linalg::Matrix;
use crate::scalar::{Field, Scalar};

/// A left kG-module given by one matrix per group element.
#[derive(Clone, Debug)]
pub struct Rep {
    group: Arc<Group>,
    label: String,
    dim: usize,
    mats: Vec<Matrix>,
}

impl PartialEq for Rep {
    fn eq(&self, other: &Self) -> bool {
        self.group.spec() == other.group.spec() && self.dim == other.dim && self.mats == other.mats
    }
}

impl Rep {
    /// Builds ρ from generator images by walking the BFS tree of the group,
    /// then checks the representation law on every pair of elements.
    pub fn from_generators(group: &Arc<Group>, label: &str, images: Vec<Matrix>) -> Result<Rep> {
        let rep = Self::from_generators_unchecked(group, label, images)?;
        if !rep.validate() {
            return Err(Error::Precondition(format!("generator images for '{}' do not define a representation", label)));
        }
        Ok(rep)
    }

    fn from_generators_unchecked(group: &Arc<Group>, label: &str, images: Vec<Matrix>) -> Result<Rep> {
        if images.len() != group.generators().len() {
            return Err(Error::DimensionMismatch(format!(
                "{} generator images for {} generators",
                images.len(),
                group.generators().len()
            )));
        }
        let dim = images.first().map(Matrix::rows).unwrap_or(1);
        if images.iter().any(|m| m.rows() != dim || m.cols() != dim) {
            return Err(Error::DimensionMismatch("generator images must be square of equal size".into()));
        }
        let mut mats = vec![Matrix::identity(dim)];
        for g in 1..group.order() {
            let (parent, k) = group.bfs_parent(g).expect("non-identity element has a parent");
            mats.push(mats[parent].mul(&images[k]));
        }
        Ok(Rep { group: group.clone(), label: label.to_string(), dim, mats })
    }

    /// Takes one matrix per group element.
    pub fn from_matrices(group: &Arc<Group>, label: &str, mats: Vec<Matrix>) -> Result<Rep> {
        if mats.len() != group.order() {
            return Err(Error::DimensionMismatch(format!("{} matrices for a group of order {}", mats.len(), group.order())));
        }
        let dim = mats[0].rows();
        if mats.iter().any(|m| m.rows() != dim || m.cols() != dim) {
            return Err(Error::DimensionMismatch("matrices must be square of equal size".into()));
        }
        let rep = Rep { group: group.clone(), label: label.to_string(), dim, mats };
        if !rep.validate() {
            return Err(Error::Precondition(format!("matrices for '{}' do not define a representation", label)));
        }
        Ok(rep)
    }

    pub fn trivial(group: &Arc<Group>) -> Rep {
        Rep { group: group.clone(), label: "triv".into(), dim: 1, mats: vec![Matrix::identity(1); group.order()] }
    }

    /// Left regular representation on the group basis.
    pub fn regular(group: &Arc<Group>) -> Rep {
        let n = group.order();
        let mats = (0..n)
            .map(|g| {
                let mut m = Matrix::zeros(n, n);
                for x in 0..n {
                    m.set(group.mul(g, x), x, Scalar::one());
                }
                m
            })
            .collect();
        Rep { group: group.clone(), label: "reg".into(), dim: n, mats }
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: &str) -> Rep {
        self.label = label.to_string();
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self, g: usize) -> &Matrix {
        &self.mats[g]
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.mats
    }

    pub fn field(&self) -> Result<Field> {
        Field::join_all(self.mats.iter().flat_map(|m| m.to_rows()).flatten().collect::<Vec<_>>().iter())
    }

    /// `ρ(e) = 1` and `ρ(a)ρ(b) = ρ(ab)` for all pairs.
    pub fn validate(&self) -> bool {
        let n = self.group.order();
        if self.mats[0] != Matrix::identity(self.dim) {
            return false;
        }
        (0..n).all(|a| (0..n).all(|b| self.mats[a].mul(&self.mats[b]) == self.mats[self.group.mul(a, b)]))
    }

    fn same_group(&self, other: &Rep) -> Result<()> {
        if self.group.spec() == other.group.spec() {
            Ok(())
        } else {
            Err(Error::GroupMismatch(self.group.name(), other.group.name()))
        }
    }

    pub fn tensor(&self, other: &Rep) -> Result<Rep> {
        self.same_group(other)?;
        let mats = self.mats.iter().zip(&other.mats).map(|(a, b)| a.kron(b)).collect();
        Ok(Rep {
            group: self.group.clone(),
            label: format!("{}⊗{}", self.label, other.label),
            dim: self.dim * other.dim,
            mats,
        })
    }

    pub fn direct_sum(&self, other: &Rep) -> Result<Rep> {
        self.same_group(other)?;
        let mats = self.mats.iter().zip(&other.mats).map(|(a, b)| a.direct_sum(b)).collect();
        Ok(Rep {
            group: self.group.clone(),
            label: format!("{}⊕{}", self.label, other.label),
            dim: self.dim + other.dim,
            mats,
        })
    }

    pub fn dual(&self) -> DualRep {
        DualRep {
            group: self.group.clone(),
            label: format!("{}*", self.label),
            dim: self.dim,
            mats: self.mats.iter().map(Matrix::transpose).collect(),
        }
    }

    /// The left module `V*` with `(g·f)(v) = f(g⁻¹v)`.
    pub fn contragredient(&self) -> Rep {
        let mats = (0..self.group.order()).map(|g| self.mats[self.group.inv(g)].transpose()).collect();
        Rep { group: self.group.clone(), label: format!("{}^", self.label), dim: self.dim, mats }
    }

    pub fn character(&self) -> Functional {
        Functional::new(&self.group, self.mats.iter().map(Matrix::trace).collect()).expect("one value per element")
    }

    /// Dimension of `Hom_G(other, self)`: matrices `X` with `ρ(g)X = Xσ(g)`.
    pub fn intertwiner_dim(&self, other: &Rep) -> Result<usize> {
        self.same_group(other)?;
        let (d, e) = (self.dim, other.dim);
        let mut rows = Vec::new();
        for &g in self.group.generators() {
            let (a, b) = (&self.mats[g], &other.mats[g]);
            for i in 0..d {
                for j in 0..e {
                    let mut row = vec![Scalar::zero(); d * e];
                    for k in 0..d {
                        row[k * e + j] += a.get(i, k);
                    }
                    for l in 0..e {
                        row[i * e + l] -= b.get(l, j);
                    }
                    rows.push(row);
                }
            }
        }
        if rows.is_empty() {
            return Ok(d * e);
        }
        Ok(Matrix::from_rows(rows)?.nullspace().len())
    }

    /// Dimension of `End_G(V)`.
    pub fn end_dim(&self) -> usize {
        self.intertwiner_dim(self).expect("same group")
    }

    /// Character equality, valid in characteristic zero.
    pub fn is_isomorphic(&self, other: &Rep) -> bool {
        self.group.spec() == other.group.spec() && self.dim == other.dim && self.character() == other.character()
    }

    /// Multiplicities of the irreducible modules of the group.
    pub fn decompose(&self) -> Result<K0Element> {
        let irreps = irreps(&self.group)?;
        decompose_against(self, &irreps)
    }

    pub fn to_json(&self) -> Value {
        let gens: Vec<Value> = self.group.generators().iter().map(|&g| self.mats[g].to_json()).collect();
        json!({
            "group": serde_json::to_value(self.group.spec()).expect("group descriptor"),
            "label": self.label,
            "dim": self.dim,
            "generators": self.group.generator_names(),
            "matrices": gens,
        })
    }

    pub fn from_json(v: &Value) -> Result<Rep> {
        let spec: GroupSpec = serde_json::from_value(v.get("group").cloned().unwrap_or(Value::Null))
            .map_err(|e| Error::Parse(format!("group descriptor: {}", e)))?;
        let group = make_group(&spec)?;
        let label = v.get("label").and_then(Value::as_str).unwrap_or("V");
        let mats = v
            .get("matrices")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("missing matrices".into()))?
            .iter()
            .map(Matrix::from_json)
            .collect::<Result<Vec<_>>>()?;
        if mats.is_empty() && group.order() == 1 {
            let dim = v.get("dim").and_then(Value::as_u64).unwrap_or(1) as usize;
            return Ok(Rep { group: group.clone(), label: label.into(), dim, mats: vec![Matrix::identity(dim)] });
        }
        Rep::from_generators(&group, label, mats)
    }
}

/// `V*` as a right module: `f ◁ g` has coordinates `ρ(g)ᵀ f`.
#[derive(Clone, Debug)]
pub struct DualRep {
    group: Arc<Group>,
    label: String,
    dim: usize,
    mats: Vec<Matrix>,
}

impl DualRep {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn matrix(&self, g: usize) -> &Matrix {
        &self.mats[g]
    }

    pub fn act(&self, f: &[Scalar], g: usize) -> Vec<Scalar> {
        self.mats[g].mul_vec(f)
    }

    /// `f ◁ (gh) = (f ◁ g) ◁ h` for all pairs.
    pub fn validate(&self) -> bool {
        let n = self.group.order();
        (0..n).all(|a| (0..n).all(|b| self.mats[b].mul(&self.mats[a]) == self.mats[self.group.mul(a, b)]))
    }
}

/// `⟨v, f⟩ = Σ vᵢ fᵢ` in the standard dual basis.
pub fn pairing(v: &[Scalar], f: &[Scalar]) -> Scalar {
    v.iter().zip(f).map(|(a, b)| a * b).sum()
}

/// An element of the Grothendieck group in the basis of irreducibles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct K0Element {
    pub labels: Vec<String>,
    pub multiplicities: Vec<i64>,
}

impl K0Element {
    pub fn get(&self, label: &str) -> i64 {
        self.labels.iter().position(|l| l == label).map(|i| self.multiplicities[i]).unwrap_or(0)
    }

    pub fn to_json(&self) -> Value {
        let map: BTreeMap<&str, i64> = self.labels.iter().map(String::as_str).zip(self.multiplicities.iter().cloned()).collect();
        json!(map)
    }
}

impl std::fmt::Display for K0Element {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self
            .labels
            .iter()
            .zip(&self.multiplicities)
            .filter(|(_, &m)| m != 0)
            .map(|(l, &m)| if m == 1 { l.clone() } else { format!("{}·{}", m, l) })
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// `(1/|G|) Σ_g χ(g) ψ(g⁻¹)`
pub fn character_inner_product(chi: &Functional, psi: &Functional) -> Scalar {
    let g = chi.group();
    let total: Scalar = (0..g.order()).map(|x| chi.at(x) * psi.at(g.inv(x))).sum();
    (total / Scalar::from_int(g.order() as i64)).demote()
}

pub fn decompose_against(v: &Rep, irreps: &[Rep]) -> Result<K0Element> {
    let chi = v.character();
    let mut multiplicities = Vec::new();
    for w in irreps {
        let m = character_inner_product(&chi, &w.character());
        multiplicities.push(m.to_i64().ok_or_else(|| Error::Internal(format!("non-integral multiplicity {}", m)))?);
    }
    Ok(K0Element { labels: irreps.iter().map(|w| w.label.clone()).collect(), multiplicities })
}

/// Cyclotomic order over which every irreducible of the group is realized
/// (1 when the rationals suffice).
pub fn splitting_order(spec: &GroupSpec) -> Result<usize> {
    Ok(match spec {
        GroupSpec::Symmetric { .. } => 1,
        GroupSpec::Dihedral { n } => {
            if [1, 2, 3, 4, 6].contains(n) {
                1
            } else {
                *n
            }
        }
        GroupSpec::Cyclic { n } => {
            if *n <= 2 {
                1
            } else {
                *n
            }
        }
        GroupSpec::Product { factors } => {
            let mut m = 1;
            for f in factors {
                m = m.lcm(&splitting_order(f)?);
            }
            m
        }
        GroupSpec::Table { .. } => return Err(Error::Unsupported("irreducibles of table-defined groups".into())),
    })
}

/// Irreducible modules over their natural splitting field, with the
/// splitting order's cyclotomic field used whenever rationals do not suffice.
pub fn irreps(group: &Arc<Group>) -> Result<Vec<Rep>> {
    let order = splitting_order(group.spec())?;
    let list = irreps_in(group, group.spec(), order)?;
    Ok(list)
}

/// Irreducibles realized over the given field, or a realizability error.
pub fn irreps_over(group: &Arc<Group>, field: Field) -> Result<Vec<Rep>> {
    let needed = splitting_order(group.spec())?;
    match field {
        Field::Rational if needed == 1 => irreps(group),
        Field::Cyclotomic(k) if k % needed == 0 => {
            let reps = irreps(group)?;
            reps.into_iter()
                .map(|r| {
                    let mats = r.mats.iter().map(|m| embed_matrix(m, k)).collect::<Result<Vec<_>>>()?;
                    Ok(Rep { mats, ..r })
                })
                .collect()
        }
        Field::RatFun => Err(Error::Unsupported("group representations over Q(v)".into())),
        _ => Err(Error::Realizability { group: group.name(), needed }),
    }
}

fn embed_matrix(m: &Matrix, order: usize) -> Result<Matrix> {
    let rows = m
        .to_rows()
        .into_iter()
        .map(|r| r.iter().map(|s| s.embed_cyclotomic(order).map(Scalar::demote)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(rows)
}

fn demote_matrix(m: Matrix) -> Matrix {
    let rows = m.to_rows().into_iter().map(|r| r.into_iter().map(Scalar::demote).collect()).collect();
    Matrix::from_rows(rows).expect("rectangular")
}

fn irreps_in(group: &Arc<Group>, spec: &GroupSpec, order: usize) -> Result<Vec<Rep>> {
    let gens = irrep_generator_images(spec, order)?;
    gens.into_iter()
        .map(|(label, images)| Rep::from_generators(group, &label, images))
        .collect()
}

type GeneratorImages = Vec<(String, Vec<Matrix>)>;

fn scalar_matrix(s: Scalar) -> Matrix {
    Matrix::diagonal(vec![s])
}

/// Irreducibles as generator images, in the generator order the group
/// constructors use. `order` is the cyclotomic field to express them in.
fn irrep_generator_images(spec: &GroupSpec, order: usize) -> Result<GeneratorImages> {
    match spec {
        GroupSpec::Symmetric { n } => Ok(symmetric_irreps(*n)),
        GroupSpec::Dihedral { n } => dihedral_irreps(*n, order),
        GroupSpec::Cyclic { n } => cyclic_irreps(*n, order),
        GroupSpec::Product { factors } => {
            let mut acc: GeneratorImages = vec![(String::new(), vec![])];
            let mut acc_dim = vec![1usize];
            for (idx, f) in factors.iter().enumerate() {
                let fac = irrep_generator_images(f, order)?;
                let fac_dims: Vec<usize> = fac
                    .iter()
                    .map(|(_, ims)| ims.first().map(Matrix::rows).unwrap_or(1))
                    .collect();
                let mut next = Vec::new();
                let mut next_dim = Vec::new();
                for ((label, ims), &d) in acc.iter().zip(&acc_dim) {
                    for ((flabel, fims), &e) in fac.iter().zip(&fac_dims) {
                        let mut images: Vec<Matrix> = ims.iter().map(|m| m.kron(&Matrix::identity(e))).collect();
                        images.extend(fims.iter().map(|m| Matrix::identity(d).kron(m)));
                        let label = if idx == 0 { flabel.clone() } else { format!("{},{}", label, flabel) };
                        next.push((label, images));
                        next_dim.push(d * e);
                    }
                }
                acc = next;
                acc_dim = next_dim;
            }
            Ok(acc
                .into_iter()
                .map(|(label, ims)| {
                    let label = if label.split(',').all(|p| p == "triv") { "triv".to_string() } else { format!("({})", label) };
                    (label, ims.into_iter().map(demote_matrix).collect())
                })
                .collect())
        }
        GroupSpec::Table { .. } => Err(Error::Unsupported("irreducibles of table-defined groups".into())),
    }
}

fn root_of_unity(order: usize, n: usize, j: i64) -> Scalar {
    // ζ_n^j expressed in Q(ζ_order)
    Scalar::zeta_pow(n, j).embed_cyclotomic(order).expect("n divides order").demote()
}

fn cyclic_irreps(n: usize, order: usize) -> Result<GeneratorImages> {
    if n == 1 {
        return Ok(vec![("triv".into(), vec![])]);
    }
    let order = if order == 1 { 2 } else { order };
    if order % n != 0 && n > 2 {
        return Err(Error::Realizability { group: format!("Z{}", n), needed: n });
    }
    Ok((0..n as i64)
        .map(|j| {
            let label = if j == 0 { "triv".to_string() } else { format!("chi{}", j) };
            let z = if n <= 2 { Scalar::from_int(if j == 0 { 1 } else { -1 }) } else { root_of_unity(order, n, j) };
            (label, vec![scalar_matrix(z)])
        })
        .collect())
}

fn dihedral_irreps(n: usize, order: usize) -> Result<GeneratorImages> {
    let one = || scalar_matrix(Scalar::one());
    let minus = || scalar_matrix(Scalar::from_int(-1));
    if n == 1 {
        return Ok(vec![("triv".into(), vec![one()]), ("sgn".into(), vec![minus()])]);
    }
    let mut out = vec![("triv".to_string(), vec![one(), one()]), ("sgn".to_string(), vec![one(), minus()])];
    if n % 2 == 0 {
        out.push(("sgn_r".into(), vec![minus(), one()]));
        out.push(("sgn_rs".into(), vec![minus(), minus()]));
    }
    let rational = [1, 2, 3, 4, 6].contains(&n);
    if !rational && order % n != 0 {
        return Err(Error::Realizability { group: format!("D{}", n), needed: n });
    }
    for j in 1..=((n - 1) / 2) as i64 {
        // t = ζ^j + ζ^{-j}; r acts by the companion matrix of x² − t x + 1
        let t = if rational {
            Scalar::from_int(match (n, j) {
                (3, 1) => -1,
                (4, 1) => 0,
                (6, 1) => 1,
                (6, 2) => -1,
                _ => unreachable!(),
            })
        } else {
            (root_of_unity(order, n, j) + root_of_unity(order, n, -j)).demote()
        };
        let r = Matrix::from_rows(vec![vec![Scalar::zero(), Scalar::from_int(-1)], vec![Scalar::one(), t]])?;
        let s = Matrix::from_i64(&[&[0, 1], &[1, 0]]);
        out.push((format!("rho{}", j), vec![r, s]));
    }
    Ok(out)
}

fn partitions(n: usize, max: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (1..=n.min(max)).rev() {
        for mut rest in partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Standard Young tableaux of a shape; each is a list of rows of entries 1..=n.
fn standard_tableaux(shape: &[usize]) -> Vec<Vec<Vec<usize>>> {
    let n: usize = shape.iter().sum();
    let mut out = Vec::new();
    let mut current: Vec<Vec<usize>> = vec![vec![]; shape.len()];
    fn fill(k: usize, n: usize, shape: &[usize], current: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if k > n {
            out.push(current.clone());
            return;
        }
        for r in 0..shape.len() {
            let len = current[r].len();
            if len < shape[r] && (r == 0 || current[r - 1].len() > len) {
                current[r].push(k);
                fill(k + 1, n, shape, current, out);
                current[r].pop();
            }
        }
    }
    fill(1, n, shape, &mut current, &mut out);
    out
}

fn position(t: &[Vec<usize>], k: usize) -> (usize, usize) {
    for (r, row) in t.iter().enumerate() {
        if let Some(c) = row.iter().position(|&x| x == k) {
            return (r, c);
        }
    }
    unreachable!("entry {} missing", k)
}

/// Young's seminormal form of the transposition `(i, i+1)` on the shape.
fn seminormal_generator(tableaux: &[Vec<Vec<usize>>], i: usize) -> Matrix {
    let d = tableaux.len();
    let mut m = Matrix::zeros(d, d);
    for (a, t) in tableaux.iter().enumerate() {
        let (r1, c1) = position(t, i);
        let (r2, c2) = position(t, i + 1);
        if r1 == r2 {
            m.set(a, a, Scalar::one());
        } else if c1 == c2 {
            m.set(a, a, Scalar::from_int(-1));
        } else {
            let dist = (c2 as i64 - r2 as i64) - (c1 as i64 - r1 as i64);
            let rinv = Scalar::rational(1, dist);
            let swapped: Vec<Vec<usize>> = t
                .iter()
                .map(|row| row.iter().map(|&x| if x == i { i + 1 } else if x == i + 1 { i } else { x }).collect())
                .collect();
            let b = tableaux.iter().position(|u| *u == swapped).expect("swapped tableau is standard");
            // column a holds the image of v_T
            m.set(a, a, rinv.clone());
            if r1 < r2 {
                m.set(b, a, Scalar::one());
            } else {
                m.set(b, a, Scalar::one() - &rinv * &rinv);
            }
        }
    }
    m
}

fn partition_label(shape: &[usize], n: usize) -> String {
    if shape == [n] {
        "triv".into()
    } else if shape.len() == n {
        "sgn".into()
    } else if n >= 3 && shape == [n - 1, 1] {
        "std".into()
    } else {
        let parts: Vec<String> = shape.iter().map(|p| p.to_string()).collect();
        format!("[{}]", parts.join(","))
    }
}

fn symmetric_irreps(n: usize) -> GeneratorImages {
    partitions(n, n)
        .into_iter()
        .map(|shape| {
            let tabs = standard_tableaux(&shape);
            let images = (1..n).map(|i| seminormal_generator(&tabs, i)).collect();
            (partition_label(&shape, n), images)
        })
        .collect()
}

/// Character table as JSON: class representatives, class sizes and one row per irreducible.
pub fn character_table_json(group: &Arc<Group>) -> Result<Value> {
    let reps = irreps(group)?;
    let classes: Vec<&str> = group.classes().iter().map(|c| group.element_name(c[0])).collect();
    let sizes: Vec<usize> = group.classes().iter().map(Vec::len).collect();
    let rows: BTreeMap<String, Vec<String>> = reps
        .iter()
        .map(|r| {
            let chi = r.character();
            (r.label().to_string(), group.classes().iter().map(|c| chi.at(c[0]).to_string()).collect())
        })
        .collect();
    Ok(json!({"group": group.name(), "classes": classes, "class_sizes": sizes, "characters": rows}))
}

pub fn character_table_csv(group: &Arc<Group>) -> Result<String> {
    let reps = irreps(group)?;
    let mut out = String::from("irrep");
    for c in group.classes() {
        out.push_str(&format!(",{}", group.element_name(c[0])));
    }
    out.push('\n');
    for r in &reps {
        let chi = r.character();
        out.push_str(r.label());
        for c in group.classes() {
            out.push_str(&format!(",{}", chi.at(c[0])));
        }
        out.push('\n');
    }
    Ok(out)
}

/// Checks `r_{gh} = ρ_V(g) r_h + r_g ρ_W(h)` for all pairs, with `r_g : W → V`.
pub fn cocycle_check(v: &Rep, w: &Rep, r: &[Matrix]) -> bool {
    let g = &v.group;
    if r.len() != g.order() || r.iter().any(|m| m.rows() != v.dim || m.cols() != w.dim) {
        return false;
    }
    (0..g.order()).all(|a| {
        (0..g.order()).all(|b| {
            let rhs = v.mats[a].mul(&r[b]).add(&r[a].mul(&w.mats[b]));
            r[g.mul(a, b)] == rhs
        })
    })
}

/// The module `V ⊕_r W` with matrices `[[ρ_V(g), r_g], [0, ρ_W(g)]]`;
/// `V` is a submodule and `W` the quotient.
pub fn extension_by_cocycle(v: &Rep, w: &Rep, r: &[Matrix]) -> Result<Rep> {
    v.same_group(w)?;
    if !cocycle_check(v, w, r) {
        return Err(Error::Cocycle(format!("r does not satisfy the cocycle identity for ({}, {})", v.label, w.label)));
    }
    let (d, e) = (v.dim, w.dim);
    let mats = (0..v.group.order())
        .map(|g| {
            let mut m = Matrix::zeros(d + e, d + e);
            for i in 0..d {
                for j in 0..d {
                    m.set(i, j, v.mats[g].get(i, j).clone());
                }
                for j in 0..e {
                    m.set(i, d + j, r[g].get(i, j).clone());
                }
            }
            for i in 0..e {
                for j in 0..e {
                    m.set(d + i, d + j, w.mats[g].get(i, j).clone());
                }
            }
            m
        })
        .collect();
    Ok(Rep { group: v.group.clone(), label: format!("{}⊕r{}", v.label, w.label), dim: d + e, mats })
}

/// The coboundary `r_g = ρ_V(g)φ − φρ_W(g)` of a linear map `φ : W → V`.
pub fn coboundary(v: &Rep, w: &Rep, phi: &Matrix) -> Vec<Matrix> {
    (0..v.group.order()).map(|g| v.mats[g].mul(phi).sub(&phi.mul(&w.mats[g]))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{cyclic, dihedral, symmetric};

    fn grp(s: &str) -> Arc<Group> {
        make_group(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn s3_irreps() {
        let g = Arc::new(symmetric(3).unwrap());
        let reps = irreps(&g).unwrap();
        let dims: Vec<usize> = reps.iter().map(Rep::dim).collect();
        assert_eq!(dims, vec![1, 2, 1]);
        let std = reps.iter().find(|r| r.label() == "std").unwrap();
        let chi = std.character();
        let s1 = g.element("s1").unwrap();
        let c = g.element("s1s2").unwrap();
        assert_eq!((chi.at(0), chi.at(s1), chi.at(c)), (&Scalar::from_int(2), &Scalar::zero(), &Scalar::from_int(-1)));
        let sq = std.tensor(std).unwrap();
        let k = sq.decompose().unwrap();
        assert_eq!((k.get("triv"), k.get("sgn"), k.get("std")), (1, 1, 1));
        assert_eq!(std.direct_sum(std).unwrap().end_dim(), 4);
    }

    #[test]
    fn irreps_sum_of_squares() {
        for s in ["S1", "S2", "S3", "S4", "D1", "D2", "D3", "D4", "D5", "D6", "D8", "Z1", "Z2", "Z3", "Z5", "Z2xZ2", "Z3xZ2"] {
            let g = grp(s);
            let reps = irreps(&g).unwrap();
            let total: usize = reps.iter().map(|r| r.dim() * r.dim()).sum();
            assert_eq!(total, g.order(), "{}", s);
            assert_eq!(reps.len(), g.classes().len(), "{}", s);
            for r in &reps {
                assert_eq!(r.end_dim(), 1, "{} {}", s, r.label());
            }
        }
    }

    #[test]
    fn realizability() {
        let z5 = Arc::new(cyclic(5).unwrap());
        match irreps_over(&z5, Field::Rational) {
            Err(Error::Realizability { needed, .. }) => assert_eq!(needed, 5),
            other => panic!("{:?}", other.map(|r| r.len())),
        }
        assert_eq!(irreps_over(&z5, Field::Cyclotomic(10)).unwrap().len(), 5);
        let d4 = Arc::new(dihedral(4).unwrap());
        assert_eq!(irreps_over(&d4, Field::Rational).unwrap().len(), 5);
    }

    #[test]
    fn dual_and_extensions() {
        let g = Arc::new(symmetric(3).unwrap());
        let reps = irreps(&g).unwrap();
        let (triv, sgn) = (&reps[0], &reps[2]);
        let d = sgn.dual();
        assert!(d.validate());
        let v = vec![Scalar::from_int(3)];
        let f = vec![Scalar::from_int(5)];
        for x in 0..6 {
            assert_eq!(pairing(&sgn.matrix(x).mul_vec(&v), &f), pairing(&v, &d.act(&f, x)));
        }
        let zero = vec![Matrix::zeros(1, 1); 6];
        assert_eq!(extension_by_cocycle(triv, sgn, &zero).unwrap(), triv.direct_sum(sgn).unwrap().with_label("x"));
        let r = coboundary(triv, sgn, &Matrix::from_i64(&[&[7]]));
        let ext = extension_by_cocycle(triv, sgn, &r).unwrap();
        assert!(ext.validate());
        assert!(ext.is_isomorphic(&triv.direct_sum(sgn).unwrap()));
        let bad = vec![Matrix::from_i64(&[&[1]]); 6];
        assert!(matches!(extension_by_cocycle(triv, sgn, &bad), Err(Error::Cocycle(_))));
    }

    #[test]
    fn json_round_trip() {
        let g = grp("D4");
        for r in irreps(&g).unwrap() {
            let back = Rep::from_json(&r.to_json()).unwrap();
            assert_eq!(back, r);
        }
        assert!(character_table_csv(&g).unwrap().starts_with("irrep,e"));
    }
}
