//! Finite groups stored as multiplication tables.
//!
//! Symmetric, dihedral and cyclic groups are realized concretely (permutations,
//! rotation/reflection pairs, residues), closed under their generators by
//! breadth-first search and then flattened to tables. Element 0 is always the
//! identity; every other element records the BFS parent and generator that
//! produced it, so representations can be evaluated from generator images.

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// How a group was built. Serialized as the JSON group descriptor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum GroupSpec {
    Symmetric { n: usize },
    Dihedral { n: usize },
    Cyclic { n: usize },
    Product { factors: Vec<GroupSpec> },
    /// User-supplied multiplication table; `table[a][b]` is the index of `ab`.
    Table { table: Vec<Vec<usize>>, names: Option<Vec<String>> },
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Symmetric { n } => write!(f, "S{}", n),
            GroupSpec::Dihedral { n } => write!(f, "D{}", n),
            GroupSpec::Cyclic { n } => write!(f, "Z{}", n),
            GroupSpec::Product { factors } => {
                let parts: Vec<String> = factors.iter().map(|g| g.to_string()).collect();
                write!(f, "{}", parts.join("x"))
            }
            GroupSpec::Table { table, .. } => write!(f, "Table{}", table.len()),
        }
    }
}

/// Short names: `S3`, `D4`, `Z5`, `Z2xZ2`.
impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<GroupSpec> {
        let s = s.trim();
        if s.contains('x') {
            let factors = s.split('x').map(str::parse).collect::<Result<Vec<GroupSpec>>>()?;
            return Ok(GroupSpec::Product { factors });
        }
        let bad = || Error::Parse(format!("unknown group '{}' (expected e.g. S3, D4, Z5, Z2xZ2)", s));
        let (kind, n) = s.split_at(1.min(s.len()));
        let n: usize = n.parse().map_err(|_| bad())?;
        match kind {
            "S" => Ok(GroupSpec::Symmetric { n }),
            "D" => Ok(GroupSpec::Dihedral { n }),
            "Z" | "C" => Ok(GroupSpec::Cyclic { n }),
            _ => Err(bad()),
        }
    }
}

#[derive(Debug, PartialEq, Eq)]
pub struct Group {
    spec: GroupSpec,
    table: Vec<usize>,
    inverse: Vec<usize>,
    generators: Vec<usize>,
    generator_names: Vec<String>,
    names: Vec<String>,
    /// BFS tree: `parent[g] = (h, k)` means `g = h * generators[k]`.
    parent: Vec<Option<(usize, usize)>>,
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
}

pub const MAX_ORDER: usize = 120;

/// Builds a group from a concrete realization closed under the generators.
fn close_under<T, F>(spec: GroupSpec, identity: T, gens: Vec<(String, T)>, mul: F) -> Group
where
    T: Clone + Eq + Hash,
    F: Fn(&T, &T) -> T,
{
    let mut elements = vec![identity];
    let mut words: Vec<Vec<usize>> = vec![vec![]];
    let mut parent = vec![None];
    let mut index: HashMap<T, usize> = HashMap::new();
    index.insert(elements[0].clone(), 0);
    let mut head = 0;
    while head < elements.len() {
        for (k, (_, g)) in gens.iter().enumerate() {
            let x = mul(&elements[head], g);
            if !index.contains_key(&x) {
                index.insert(x.clone(), elements.len());
                let mut w = words[head].clone();
                w.push(k);
                words.push(w);
                parent.push(Some((head, k)));
                elements.push(x);
            }
        }
        head += 1;
    }
    let n = elements.len();
    let mut table = vec![0; n * n];
    for a in 0..n {
        for b in 0..n {
            table[a * n + b] = index[&mul(&elements[a], &elements[b])];
        }
    }
    let generator_names: Vec<String> = gens.iter().map(|(name, _)| name.clone()).collect();
    let names = words.iter().map(|w| word_name(w, &generator_names)).collect();
    let generators = gens.iter().map(|(_, g)| index[g]).collect();
    Group::finish(spec, table, generators, generator_names, names, parent)
}

/// Display name of a generator word with runs compressed, e.g. `r^2s`.
fn word_name(word: &[usize], gen_names: &[String]) -> String {
    if word.is_empty() {
        return "e".to_string();
    }
    let mut out = String::new();
    let mut i = 0;
    while i < word.len() {
        let mut j = i;
        while j < word.len() && word[j] == word[i] {
            j += 1;
        }
        out.push_str(&gen_names[word[i]]);
        if j - i > 1 {
            out.push_str(&format!("^{}", j - i));
        }
        i = j;
    }
    out
}

impl Group {
    fn finish(
        spec: GroupSpec,
        table: Vec<usize>,
        generators: Vec<usize>,
        generator_names: Vec<String>,
        names: Vec<String>,
        parent: Vec<Option<(usize, usize)>>,
    ) -> Group {
        let n = names.len();
        let mut inverse = vec![0; n];
        for a in 0..n {
            for b in 0..n {
                if table[a * n + b] == 0 {
                    inverse[a] = b;
                }
            }
        }
        let mut class_of = vec![usize::MAX; n];
        let mut classes = Vec::new();
        for a in 0..n {
            if class_of[a] != usize::MAX {
                continue;
            }
            let mut class: Vec<usize> = (0..n).map(|g| table[table[g * n + a] * n + inverse[g]]).collect();
            class.sort_unstable();
            class.dedup();
            for &c in &class {
                class_of[c] = classes.len();
            }
            classes.push(class);
        }
        Group { spec, table, inverse, generators, generator_names, names, parent, classes, class_of }
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn name(&self) -> String {
        self.spec.to_string()
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order() + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// `g a g⁻¹`
    pub fn conj(&self, g: usize, a: usize) -> usize {
        self.mul(self.mul(g, a), self.inv(g))
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn generator_names(&self) -> &[String] {
        &self.generator_names
    }

    pub fn element_name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Index of the element with the given display name.
    pub fn element(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Evaluates a word in the generators (indices into `generators()`).
    pub fn word(&self, word: &[usize]) -> usize {
        word.iter().fold(0, |acc, &k| self.mul(acc, self.generators[k]))
    }

    pub fn bfs_parent(&self, a: usize) -> Option<(usize, usize)> {
        self.parent[a]
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_of(&self, a: usize) -> usize {
        self.class_of[a]
    }

    pub fn centralizer_order(&self, a: usize) -> usize {
        self.order() / self.classes[self.class_of[a]].len()
    }

    /// Exhaustive check of associativity, identity and inverse tables.
    pub fn verify_axioms(&self) -> bool {
        let n = self.order();
        for a in 0..n {
            if self.mul(0, a) != a || self.mul(a, 0) != a {
                return false;
            }
            if self.mul(a, self.inv(a)) != 0 || self.mul(self.inv(a), a) != 0 {
                return false;
            }
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }
}

fn perm_mul(p: &Vec<u8>, q: &Vec<u8>) -> Vec<u8> {
    // (pq)(i) = p(q(i))
    q.iter().map(|&i| p[i as usize]).collect()
}

pub fn symmetric(n: usize) -> Result<Group> {
    if !(1..=5).contains(&n) {
        return Err(Error::Unsupported(format!("symmetric group S{} (supported: 1..=5)", n)));
    }
    let identity: Vec<u8> = (0..n as u8).collect();
    let gens = (1..n)
        .map(|i| {
            let mut p = identity.clone();
            p.swap(i - 1, i);
            (format!("s{}", i), p)
        })
        .collect();
    Ok(close_under(GroupSpec::Symmetric { n }, identity, gens, perm_mul))
}

pub fn dihedral(n: usize) -> Result<Group> {
    if !(1..=8).contains(&n) {
        return Err(Error::Unsupported(format!("dihedral group D{} (supported: 1..=8)", n)));
    }
    // (k, f) = r^k s^f
    let m = n as i64;
    let mul = move |a: &(i64, u8), b: &(i64, u8)| {
        let k = if a.1 == 0 { a.0 + b.0 } else { a.0 - b.0 };
        (k.rem_euclid(m), a.1 ^ b.1)
    };
    let mut gens = Vec::new();
    if n > 1 {
        gens.push(("r".to_string(), (1i64, 0u8)));
    }
    gens.push(("s".to_string(), (0, 1)));
    Ok(close_under(GroupSpec::Dihedral { n }, (0, 0), gens, mul))
}

pub fn cyclic(n: usize) -> Result<Group> {
    if !(1..=12).contains(&n) {
        return Err(Error::Unsupported(format!("cyclic group Z{} (supported: 1..=12)", n)));
    }
    let gens = if n > 1 { vec![("g".to_string(), 1usize)] } else { vec![] };
    Ok(close_under(GroupSpec::Cyclic { n }, 0usize, gens, move |a, b| (a + b) % n))
}

/// Direct product; elements are pairs `(a, b)` and generators are the
/// embedded generators of each factor (right-factor names get a `'`).
pub fn product(left: &Group, right: &Group) -> Result<Group> {
    if left.order() * right.order() > MAX_ORDER {
        return Err(Error::Unsupported(format!("product of order {}", left.order() * right.order())));
    }
    let mut gens = Vec::new();
    for (g, name) in left.generators.iter().zip(&left.generator_names) {
        gens.push((name.clone(), (*g, 0usize)));
    }
    for (g, name) in right.generators.iter().zip(&right.generator_names) {
        let name = if left.generator_names.contains(name) { format!("{}'", name) } else { name.clone() };
        gens.push((name, (0usize, *g)));
    }
    let spec = GroupSpec::Product { factors: vec![left.spec.clone(), right.spec.clone()] };
    Ok(close_under(spec, (0usize, 0usize), gens, |a, b| (left.mul(a.0, b.0), right.mul(a.1, b.1))))
}

fn from_table(table: &[Vec<usize>], names: Option<&Vec<String>>) -> Result<Group> {
    let n = table.len();
    if n == 0 || n > MAX_ORDER {
        return Err(Error::Unsupported(format!("table of order {}", n)));
    }
    if table.iter().any(|row| row.len() != n || row.iter().any(|&x| x >= n)) {
        return Err(Error::Parse("multiplication table must be square with entries < order".into()));
    }
    let id = (0..n)
        .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
        .ok_or_else(|| Error::Parse("table has no identity".into()))?;
    // pick generators greedily, then re-close so the identity becomes index 0
    let mut gens: Vec<usize> = Vec::new();
    loop {
        let mut seen = vec![false; n];
        let mut frontier = vec![id];
        seen[id] = true;
        while let Some(x) = frontier.pop() {
            for &g in &gens {
                let y = table[x][g];
                if !seen[y] {
                    seen[y] = true;
                    frontier.push(y);
                }
            }
        }
        match (0..n).find(|&x| !seen[x]) {
            Some(x) => gens.push(x),
            None => break,
        }
    }
    let gen_names: Vec<(String, usize)> = gens
        .iter()
        .enumerate()
        .map(|(k, &g)| (names.map(|ns| ns[g].clone()).unwrap_or_else(|| format!("a{}", k + 1)), g))
        .collect();
    let spec = GroupSpec::Table { table: table.to_vec(), names: names.cloned() };
    let g = close_under(spec, id, gen_names, |a, b| table[*a][*b]);
    if g.order() != n || !g.verify_axioms() {
        return Err(Error::Parse("table does not define a group".into()));
    }
    Ok(g)
}

/// Constructs any supported group.
pub fn make_group(spec: &GroupSpec) -> Result<Arc<Group>> {
    build(spec).map(Arc::new)
}

fn build(spec: &GroupSpec) -> Result<Group> {
    match spec {
        GroupSpec::Symmetric { n } => symmetric(*n),
        GroupSpec::Dihedral { n } => dihedral(*n),
        GroupSpec::Cyclic { n } => cyclic(*n),
        GroupSpec::Product { factors } => {
            let mut it = factors.iter();
            let first = it.next().ok_or_else(|| Error::Parse("empty product".into()))?;
            let mut acc = build(first)?;
            for f in it {
                acc = product(&acc, &build(f)?)?;
            }
            acc.spec = spec.clone();
            Ok(acc)
        }
        GroupSpec::Table { table, names } => from_table(table, names.as_ref()),
    }
}

/// Orbits of G on G×G under simultaneous conjugation `(a, b) ↦ (gag⁻¹, gbg⁻¹)`.
/// Orbits are sorted by their smallest pair; each orbit is sorted.
pub fn diagonal_conjugation_orbits(g: &Group) -> Vec<Vec<(usize, usize)>> {
    let n = g.order();
    let mut seen = vec![false; n * n];
    let mut orbits = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if seen[a * n + b] {
                continue;
            }
            let mut orbit: Vec<(usize, usize)> = (0..n).map(|x| (g.conj(x, a), g.conj(x, b))).collect();
            orbit.sort_unstable();
            orbit.dedup();
            for &(c, d) in &orbit {
                seen[c * n + d] = true;
            }
            orbits.push(orbit);
        }
    }
    orbits
}

/// Burnside count `(1/|G|) Σ_g |C(g)|²` of the diagonal conjugation orbits.
pub fn burnside_orbit_count(g: &Group) -> usize {
    let n = g.order();
    let total: usize = (0..n)
        .map(|a| {
            let c = (0..n).filter(|&x| g.mul(x, a) == g.mul(a, x)).count();
            c * c
        })
        .sum();
    assert_eq!(total % n, 0);
    total / n
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_force_class_count(g: &Group) -> usize {
        let n = g.order();
        let mut reps: Vec<usize> = Vec::new();
        for a in 0..n {
            if !reps.iter().any(|&r| (0..n).any(|x| g.conj(x, r) == a)) {
                reps.push(a);
            }
        }
        reps.len()
    }

    #[test]
    fn s3_basics() {
        let g = symmetric(3).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.classes().len(), 3);
        assert_eq!(brute_force_class_count(&g), 3);
        assert_eq!(g.names(), &["e", "s1", "s2", "s1s2", "s2s1", "s1s2s1"]);
        assert_eq!(diagonal_conjugation_orbits(&g).len(), 11);
    }

    #[test]
    fn d4_and_trivial() {
        let d4 = dihedral(4).unwrap();
        assert_eq!(d4.order(), 8);
        assert_eq!(d4.classes().len(), 5);
        assert_eq!(brute_force_class_count(&d4), 5);
        assert_eq!(diagonal_conjugation_orbits(&d4).len(), 28);
        let z1 = cyclic(1).unwrap();
        assert_eq!((z1.order(), z1.classes().len()), (1, 1));
        assert_eq!(diagonal_conjugation_orbits(&z1).len(), 1);
    }

    #[test]
    fn orders_and_axioms() {
        let specs = ["S1", "S2", "S3", "S4", "D1", "D2", "D3", "D5", "D8", "Z1", "Z7", "Z12", "Z2xZ2", "Z2xS3"];
        for s in specs {
            let spec: GroupSpec = s.parse().unwrap();
            let g = make_group(&spec).unwrap();
            let expected = match &spec {
                GroupSpec::Symmetric { n } => (1..=*n).product(),
                GroupSpec::Dihedral { n } => 2 * n,
                GroupSpec::Cyclic { n } => *n,
                GroupSpec::Product { .. } => g.order(),
                _ => unreachable!(),
            };
            assert_eq!(g.order(), expected, "{}", s);
            assert!(g.verify_axioms(), "{}", s);
            let sizes: usize = g.classes().iter().map(Vec::len).sum();
            assert_eq!(sizes, g.order());
            assert!(g.classes().iter().all(|c| g.order() % c.len() == 0));
            assert_eq!(diagonal_conjugation_orbits(&g).len(), burnside_orbit_count(&g), "{}", s);
        }
        assert_eq!(make_group(&"Z2xZ2".parse().unwrap()).unwrap().order(), 4);
    }

    #[test]
    fn unsupported_sizes() {
        assert!(matches!(symmetric(6), Err(Error::Unsupported(_))));
        assert!(matches!(dihedral(9), Err(Error::Unsupported(_))));
        assert!(matches!(cyclic(13), Err(Error::Unsupported(_))));
    }

    #[test]
    fn table_descriptor_round_trip() {
        let z3 = cyclic(3).unwrap();
        let table: Vec<Vec<usize>> = (0..3).map(|a| (0..3).map(|b| z3.mul(a, b)).collect()).collect();
        let spec = GroupSpec::Table { table, names: None };
        let json = serde_json::to_string(&spec).unwrap();
        let back: GroupSpec = serde_json::from_str(&json).unwrap();
        let g = make_group(&back).unwrap();
        assert_eq!(g.order(), 3);
        assert!(g.is_abelian());
        let bad = GroupSpec::Table { table: vec![vec![0, 1], vec![1, 1]], names: None };
        assert!(make_group(&bad).is_err());
    }

    #[test]
    fn json_descriptor_shape() {
        let spec = GroupSpec::Symmetric { n: 3 };
        assert_eq!(serde_json::to_string(&spec).unwrap(), r#"{"kind":"symmetric","n":3}"#);
    }
}
