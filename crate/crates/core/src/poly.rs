//! Dense univariate polynomials over the rationals.
//!
//! Used as the payload of cyclotomic scalars (reduced modulo a cyclotomic
//! polynomial) and of rational functions in the single variable `v`.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;

/// Coefficients stored lowest degree first, with no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct UPoly {
    coeffs: Vec<Q>,
}

impl UPoly {
    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UPoly::constant(Q::one())
    }

    pub fn constant(c: Q) -> Self {
        UPoly::new(vec![c])
    }

    /// `c * x^k`
    pub fn monomial(c: Q, k: usize) -> Self {
        let mut coeffs = vec![Q::zero(); k + 1];
        coeffs[k] = c;
        UPoly::new(coeffs)
    }

    pub fn new(mut coeffs: Vec<Q>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        UPoly::new(coeffs.iter().map(|&c| Q::from_integer(BigInt::from(c))).collect())
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Q> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&Q> {
        self.coeffs.last()
    }

    pub fn coeff(&self, k: usize) -> Q {
        self.coeffs.get(k).cloned().unwrap_or_else(Q::zero)
    }

    /// Constant value if the polynomial has degree ≤ 0.
    pub fn as_constant(&self) -> Option<Q> {
        match self.coeffs.len() {
            0 => Some(Q::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn add(&self, other: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(match (self.coeffs.get(k), other.coeffs.get(k)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        UPoly::new(out)
    }

    pub fn neg(&self) -> UPoly {
        UPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn sub(&self, other: &UPoly) -> UPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &UPoly) -> UPoly {
        if self.is_zero() || other.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![Q::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        UPoly::new(out)
    }

    pub fn scale(&self, c: &Q) -> UPoly {
        if c.is_zero() {
            return UPoly::zero();
        }
        UPoly { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Division with remainder; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &UPoly) -> (UPoly, UPoly) {
        let dd = divisor.degree().expect("polynomial division by zero");
        let lead_inv = divisor.lead().unwrap().recip();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (UPoly::zero(), self.clone());
        }
        let mut quot = vec![Q::zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let factor = &rem[k] * &lead_inv;
            for (j, d) in divisor.coeffs.iter().enumerate() {
                if !d.is_zero() {
                    let t = &factor * d;
                    rem[k - dd + j] -= t;
                }
            }
            quot[k - dd] = factor;
        }
        rem.truncate(dd);
        (UPoly::new(quot), UPoly::new(rem))
    }

    pub fn rem(&self, divisor: &UPoly) -> UPoly {
        self.div_rem(divisor).1
    }

    pub fn monic(&self) -> UPoly {
        match self.lead() {
            None => UPoly::zero(),
            Some(l) if l.is_one() => self.clone(),
            Some(l) => self.scale(&l.recip()),
        }
    }

    /// Monic gcd (zero if both inputs are zero).
    pub fn gcd(&self, other: &UPoly) -> UPoly {
        let mut a = self.monic();
        let mut b = other.monic();
        while !b.is_zero() {
            let r = a.rem(&b).monic();
            a = b;
            b = r;
        }
        a
    }

    /// Returns `(g, s, t)` with `s*self + t*other = g`, `g` monic.
    pub fn ext_gcd(&self, other: &UPoly) -> (UPoly, UPoly, UPoly) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (UPoly::one(), UPoly::zero());
        let (mut t0, mut t1) = (UPoly::zero(), UPoly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s2 = s0.sub(&q.mul(&s1));
            let t2 = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s2;
            t0 = t1;
            t1 = t2;
        }
        match r0.lead().cloned() {
            None => (r0, s0, t0),
            Some(l) => {
                let inv = l.recip();
                (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
            }
        }
    }

    /// `p(x^k)`
    pub fn compose_power(&self, k: usize) -> UPoly {
        if self.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![Q::zero(); (self.coeffs.len() - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i * k] = c.clone();
        }
        UPoly::new(out)
    }

    pub fn eval(&self, x: &Q) -> Q {
        let mut acc = Q::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn is_negative_lead(&self) -> bool {
        self.lead().map_or(false, |l| l.is_negative())
    }
}

/// Largest cyclotomic order served from the cache.
const CYCLOTOMIC_CACHE: usize = 128;

fn compute_cyclotomic(n: usize, table: &[UPoly]) -> UPoly {
    // x^n - 1 divided by Φ_d for every proper divisor d
    let mut coeffs = vec![0i64; n + 1];
    coeffs[0] = -1;
    coeffs[n] = 1;
    let mut p = UPoly::from_i64(&coeffs);
    for d in 1..n {
        if n % d == 0 {
            let (q, r) = p.div_rem(&table[d]);
            debug_assert!(r.is_zero());
            p = q;
        }
    }
    p
}

/// The n-th cyclotomic polynomial Φ_n (n ≥ 1).
pub fn cyclotomic_poly(n: usize) -> UPoly {
    assert!(n >= 1, "cyclotomic order must be positive");
    static TABLE: OnceLock<Vec<UPoly>> = OnceLock::new();
    let table = TABLE.get_or_init(|| {
        let mut t = vec![UPoly::zero()];
        for k in 1..=CYCLOTOMIC_CACHE {
            let p = compute_cyclotomic(k, &t);
            t.push(p);
        }
        t
    });
    if n <= CYCLOTOMIC_CACHE {
        return table[n].clone();
    }
    let mut t = table.clone();
    for k in (CYCLOTOMIC_CACHE + 1)..=n {
        let p = compute_cyclotomic(k, &t);
        t.push(p);
    }
    t[n].clone()
}

/// Euler's totient, i.e. the degree of Φ_n.
pub fn totient(n: usize) -> usize {
    (1..=n).filter(|&k| num_integer::gcd(k, n) == 1).count()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic_poly(1), UPoly::from_i64(&[-1, 1]));
        assert_eq!(cyclotomic_poly(4), UPoly::from_i64(&[1, 0, 1]));
        assert_eq!(cyclotomic_poly(5), UPoly::from_i64(&[1, 1, 1, 1, 1]));
        assert_eq!(cyclotomic_poly(12), UPoly::from_i64(&[1, 0, -1, 0, 1]));
        for n in 1..30 {
            assert_eq!(cyclotomic_poly(n).degree(), Some(totient(n)));
        }
    }

    #[test]
    fn ext_gcd_bezout() {
        let a = UPoly::from_i64(&[1, 2, 1]);
        let b = UPoly::from_i64(&[-1, 0, 1]);
        let (g, s, t) = a.ext_gcd(&b);
        assert_eq!(g, UPoly::from_i64(&[1, 1]));
        assert_eq!(s.mul(&a).add(&t.mul(&b)), g);
    }

    #[test]
    fn division_identity() {
        let a = UPoly::from_i64(&[3, -2, 0, 5, 7]);
        let b = UPoly::from_i64(&[1, 0, 2]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.degree().unwrap_or(0) < 2);
    }
}
