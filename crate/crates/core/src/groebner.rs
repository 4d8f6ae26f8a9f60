//! Sparse multivariate polynomials and Buchberger's algorithm (degrevlex).
//!
//! The algorithm is capped by a maximal S-polynomial degree and a maximal
//! number of reduction steps. Hitting either cap yields
//! [`GroebnerOutcome::Unknown`]; a basis is only reported when every pair
//! was processed, and infeasibility only when `1` was actually derived.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::linalg::{solve_linear, LinearSolution, Matrix};
use crate::scalar::Scalar;

/// Exponent vector ordered by degree-reverse-lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self | other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| b - a).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            o => return o,
        }
        // smaller exponent in the last differing variable is larger
        for (a, b) in self.0.iter().zip(&other.0).rev() {
            if a != b {
                return b.cmp(a);
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial in `nvars` variables with exact coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Scalar>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Scalar) -> Self {
        let mut p = MPoly::zero(nvars);
        p.add_term(Monomial::one(nvars), c);
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut p = MPoly::zero(nvars);
        p.add_term(Monomial::var(nvars, i), Scalar::one());
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Vec<u32>, Scalar)>) -> Result<Self> {
        let mut p = MPoly::zero(nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::DimensionMismatch(format!("exponent of length {} for {} vars", e.len(), nvars)));
            }
            p.add_term(Monomial(e), c);
        }
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_nonzero_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms.keys().next().unwrap().is_one()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn leading(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += &c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add(&self, other: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> MPoly {
        let mut out = MPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c * s);
        }
        out
    }

    pub fn mul_term(&self, m: &Monomial, s: &Scalar) -> MPoly {
        let mut out = MPoly::zero(self.nvars);
        if s.is_zero() {
            return out;
        }
        for (k, c) in &self.terms {
            out.terms.insert(k.mul(m), c * s);
        }
        out
    }

    pub fn mul(&self, other: &MPoly) -> MPoly {
        let mut out = MPoly::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn monic(&self) -> MPoly {
        match self.leading() {
            Some((_, c)) => self.scale(&c.inv().unwrap()),
            None => self.clone(),
        }
    }

    pub fn eval(&self, point: &[Scalar]) -> Scalar {
        assert_eq!(point.len(), self.nvars);
        let mut acc = Scalar::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                if e > 0 {
                    t = &t * &x.pow(e as i64);
                }
            }
            acc += &t;
        }
        acc
    }

    /// Substitutes a polynomial (in a possibly different ring) for each variable.
    pub fn substitute(&self, values: &[MPoly]) -> MPoly {
        assert_eq!(values.len(), self.nvars);
        let target = values.first().map_or(0, |v| v.nvars);
        let mut out = MPoly::zero(target);
        for (m, c) in &self.terms {
            let mut t = MPoly::constant(target, c.clone());
            for (v, &e) in values.iter().zip(&m.0) {
                for _ in 0..e {
                    t = t.mul(v);
                }
            }
            out = out.add(&t);
        }
        out
    }

    /// Exact quotient `self / divisor`, or None if the division leaves a remainder.
    pub fn exact_div(&self, divisor: &MPoly) -> Option<MPoly> {
        let (dl, dc) = divisor.leading()?;
        let (dl, dc_inv) = (dl.clone(), dc.inv().unwrap());
        let mut rem = self.clone();
        let mut quot = MPoly::zero(self.nvars);
        while let Some((m, c)) = rem.leading() {
            if !dl.divides(m) {
                return None;
            }
            let qm = dl.quotient_of(m);
            let qc = c * &dc_inv;
            rem = rem.sub(&divisor.mul_term(&qm, &qc));
            quot.add_term(qm, qc);
        }
        Some(quot)
    }

    /// Full reduction modulo a list of polynomials.
    pub fn reduce(&self, basis: &[MPoly]) -> MPoly {
        let mut p = self.clone();
        let mut r = MPoly::zero(self.nvars);
        while let Some((m, c)) = p.leading().map(|(m, c)| (m.clone(), c.clone())) {
            let divisor = basis.iter().find(|g| g.leading().map_or(false, |(lm, _)| lm.divides(&m)));
            match divisor {
                Some(g) => {
                    let (lm, lc) = g.leading().unwrap();
                    let factor = &c / lc;
                    p = p.sub(&g.mul_term(&lm.quotient_of(&m), &factor));
                }
                None => {
                    p.terms.remove(&m);
                    r.terms.insert(m, c);
                }
            }
        }
        r
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| {
                let vars: Vec<String> = m
                    .0
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, &e)| if e == 1 { format!("x{}", i) } else { format!("x{}^{}", i, e) })
                    .collect();
                if vars.is_empty() {
                    format!("({})", c)
                } else {
                    format!("({})*{}", c, vars.join("*"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// A list of polynomials in a common ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolySystem {
    pub nvars: usize,
    pub polys: Vec<MPoly>,
}

impl PolySystem {
    pub fn new(nvars: usize, polys: Vec<MPoly>) -> Result<Self> {
        if polys.iter().any(|p| p.nvars != nvars) {
            return Err(Error::DimensionMismatch("polynomial in the wrong ring".into()));
        }
        Ok(PolySystem { nvars, polys: polys.into_iter().filter(|p| !p.is_zero()).collect() })
    }

    pub fn is_satisfied_by(&self, point: &[Scalar]) -> bool {
        self.polys.iter().all(|p| p.eval(point).is_zero())
    }

    /// Index of the first equation violated at `point`.
    pub fn first_violation(&self, point: &[Scalar]) -> Option<usize> {
        self.polys.iter().position(|p| !p.eval(point).is_zero())
    }

    /// Whether `1` is a scalar linear combination of the polynomials, which
    /// certifies infeasibility without any multiplication.
    pub fn has_linear_unit_combination(&self) -> bool {
        let mut monos: Vec<Monomial> = self.polys.iter().flat_map(|p| p.terms.keys().cloned()).collect();
        monos.push(Monomial::one(self.nvars));
        monos.sort();
        monos.dedup();
        let mut a = Matrix::zeros(monos.len(), self.polys.len());
        for (j, p) in self.polys.iter().enumerate() {
            for (m, c) in &p.terms {
                let i = monos.binary_search(m).unwrap();
                a.set(i, j, c.clone());
            }
        }
        let b: Vec<Scalar> = monos.iter().map(|m| if m.is_one() { Scalar::one() } else { Scalar::zero() }).collect();
        matches!(solve_linear(&a, &b), Ok(LinearSolution::Feasible { .. }))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GroebnerCaps {
    pub max_degree: u32,
    pub max_steps: usize,
}

impl Default for GroebnerCaps {
    fn default() -> Self {
        GroebnerCaps { max_degree: 12, max_steps: 5_000 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroebnerOutcome {
    /// Reduced, monic Gröbner basis.
    Basis(Vec<MPoly>),
    /// `1` lies in the ideal; `trace_hash` digests the reduction trace.
    ProvedInfeasible { trace_hash: String },
    Unknown { reason: String },
}

fn s_polynomial(f: &MPoly, g: &MPoly) -> MPoly {
    let (fm, fc) = f.leading().unwrap();
    let (gm, gc) = g.leading().unwrap();
    let l = fm.lcm(gm);
    f.mul_term(&fm.quotient_of(&l), &fc.inv().unwrap())
        .sub(&g.mul_term(&gm.quotient_of(&l), &gc.inv().unwrap()))
}

fn interreduce(mut basis: Vec<MPoly>) -> Vec<MPoly> {
    basis.retain(|p| !p.is_zero());
    basis.sort_by(|a, b| a.leading().unwrap().0.cmp(b.leading().unwrap().0));
    // drop elements whose leading monomial is divisible by another's
    let mut minimal: Vec<MPoly> = Vec::new();
    for p in basis {
        let lm = p.leading().unwrap().0.clone();
        if !minimal.iter().any(|q| q.leading().unwrap().0.divides(&lm)) {
            minimal.push(p);
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<MPoly> = minimal.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, q)| q.clone()).collect();
        reduced.push(minimal[i].reduce(&others).monic());
    }
    reduced.sort_by(|a, b| a.leading().unwrap().0.cmp(b.leading().unwrap().0));
    reduced
}

/// Buchberger's algorithm with the product criterion.
pub fn groebner(system: &PolySystem, caps: GroebnerCaps) -> GroebnerOutcome {
    let mut hasher = Sha256::new();
    let mut basis: Vec<MPoly> = Vec::new();
    for p in &system.polys {
        let r = p.reduce(&basis);
        if !r.is_zero() {
            basis.push(r.monic());
        }
    }
    let certify = |hasher: Sha256| GroebnerOutcome::ProvedInfeasible { trace_hash: hex::encode(hasher.finalize()) };
    if basis.iter().any(MPoly::is_nonzero_constant) {
        hasher.update(b"input-unit");
        return certify(hasher);
    }
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    let mut steps = 0usize;
    let mut skipped = false;
    while !pairs.is_empty() {
        // normal selection strategy: smallest lcm first
        let idx = (0..pairs.len())
            .min_by(|&a, &b| {
                let la = basis[pairs[a].0].leading().unwrap().0.lcm(basis[pairs[a].1].leading().unwrap().0);
                let lb = basis[pairs[b].0].leading().unwrap().0.lcm(basis[pairs[b].1].leading().unwrap().0);
                la.cmp(&lb)
            })
            .unwrap();
        let (i, j) = pairs.swap_remove(idx);
        let (mi, mj) = (basis[i].leading().unwrap().0.clone(), basis[j].leading().unwrap().0.clone());
        if mi.coprime(&mj) {
            continue;
        }
        if mi.lcm(&mj).degree() > caps.max_degree {
            skipped = true;
            continue;
        }
        steps += 1;
        if steps > caps.max_steps {
            return GroebnerOutcome::Unknown { reason: format!("step cap {} reached", caps.max_steps) };
        }
        let r = s_polynomial(&basis[i], &basis[j]).reduce(&basis);
        if r.is_zero() {
            continue;
        }
        let r = r.monic();
        hasher.update(format!("S({},{})->{};", i, j, r).as_bytes());
        if r.is_nonzero_constant() {
            return certify(hasher);
        }
        let k = basis.len();
        basis.push(r);
        for i in 0..k {
            pairs.push((i, k));
        }
    }
    if skipped {
        return GroebnerOutcome::Unknown { reason: format!("degree cap {} reached", caps.max_degree) };
    }
    GroebnerOutcome::Basis(interreduce(basis))
}
