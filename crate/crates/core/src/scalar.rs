//! Exact scalars: rationals, elements of a cyclotomic field ℚ(ζ_n) and
//! rational functions in one variable `v` over ℚ.
//!
//! A rational combines freely with either of the other two variants (it is
//! promoted first). Combining two different cyclotomic orders, or a
//! cyclotomic with a rational function, panics in the operator impls; use
//! [`Field::join`] to test compatibility up front.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::poly::{cyclotomic_poly, totient, UPoly, Q};

/// The field a scalar lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rational,
    Cyclotomic(usize),
    RatFun,
}

impl Field {
    /// Smallest common field of two scalars, if any.
    pub fn join(self, other: Field) -> Option<Field> {
        match (self, other) {
            (Field::Rational, f) | (f, Field::Rational) => Some(f),
            (Field::Cyclotomic(a), Field::Cyclotomic(b)) if a == b => Some(self),
            (Field::RatFun, Field::RatFun) => Some(Field::RatFun),
            _ => None,
        }
    }

    pub fn join_all<'a>(scalars: impl IntoIterator<Item = &'a Scalar>) -> Result<Field> {
        let mut f = Field::Rational;
        for s in scalars {
            let g = s.field();
            f = f.join(g).ok_or_else(|| Error::FieldMismatch(f.to_string(), g.to_string()))?;
        }
        Ok(f)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Cyclotomic(n) => write!(f, "Q(zeta{})", n),
            Field::RatFun => write!(f, "Q(v)"),
        }
    }
}

#[derive(Clone, Debug)]
pub enum Scalar {
    Rational(Q),
    /// Power-basis coordinates of an element of ℚ(ζ_order), reduced mod Φ_order.
    Cyclotomic { order: usize, value: UPoly },
    /// `num / den` in ℚ(v); coprime, `den` monic.
    RatFun { num: UPoly, den: UPoly },
}

fn q_int(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Rational(Q::zero())
    }

    pub fn one() -> Self {
        Scalar::Rational(Q::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::Rational(q_int(n))
    }

    pub fn rational(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Scalar::Rational(Q::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_q(q: Q) -> Self {
        Scalar::Rational(q)
    }

    /// A primitive n-th root of unity ζ_n.
    pub fn zeta(order: usize) -> Self {
        Scalar::cyclotomic(order, UPoly::monomial(Q::one(), 1))
    }

    /// ζ_n^k for any integer k.
    pub fn zeta_pow(order: usize, k: i64) -> Self {
        let e = k.rem_euclid(order as i64) as usize;
        Scalar::cyclotomic(order, UPoly::monomial(Q::one(), e))
    }

    /// Reduces an arbitrary polynomial in ζ_n.
    pub fn cyclotomic(order: usize, value: UPoly) -> Self {
        assert!(order >= 1, "cyclotomic order must be positive");
        let value = value.rem(&cyclotomic_poly(order));
        Scalar::Cyclotomic { order, value }
    }

    /// The transcendental `v` (with `q = v²`).
    pub fn v() -> Self {
        Scalar::RatFun { num: UPoly::monomial(Q::one(), 1), den: UPoly::one() }
    }

    /// `v^k` for any integer k.
    pub fn v_pow(k: i64) -> Self {
        if k >= 0 {
            Scalar::RatFun { num: UPoly::monomial(Q::one(), k as usize), den: UPoly::one() }
        } else {
            Scalar::RatFun { num: UPoly::one(), den: UPoly::monomial(Q::one(), (-k) as usize) }
        }
    }

    /// `q^k = v^{2k}`.
    pub fn q_pow(k: i64) -> Self {
        Scalar::v_pow(2 * k)
    }

    pub fn ratfun(num: UPoly, den: UPoly) -> Self {
        let (num, den) = normalize_ratfun(num, den);
        Scalar::RatFun { num, den }
    }

    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Cyclotomic { order, .. } => Field::Cyclotomic(*order),
            Scalar::RatFun { .. } => Field::RatFun,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Cyclotomic { value, .. } => value.is_zero(),
            Scalar::RatFun { num, .. } => num.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self.to_rational() {
            Some(q) => q.is_one(),
            None => false,
        }
    }

    /// The value as a rational, if it is one (any variant).
    pub fn to_rational(&self) -> Option<Q> {
        match self {
            Scalar::Rational(q) => Some(q.clone()),
            Scalar::Cyclotomic { value, .. } => value.as_constant(),
            Scalar::RatFun { num, den } => {
                if den.is_one() {
                    num.as_constant()
                } else {
                    None
                }
            }
        }
    }

    /// The value as an integer, if it is one.
    pub fn to_integer(&self) -> Option<BigInt> {
        self.to_rational().filter(|q| q.is_integer()).map(|q| q.to_integer())
    }

    pub fn to_i64(&self) -> Option<i64> {
        use num_traits::ToPrimitive;
        self.to_integer().and_then(|n| n.to_i64())
    }

    /// Replaces a value that happens to be rational by the plain rational variant.
    pub fn demote(self) -> Scalar {
        match self.to_rational() {
            Some(q) => Scalar::Rational(q),
            None => self,
        }
    }

    /// Re-expresses the value in the given (compatible) field.
    pub fn promote(&self, field: Field) -> Scalar {
        match (self, field) {
            (s, f) if s.field() == f => s.clone(),
            (Scalar::Rational(q), Field::Cyclotomic(order)) => {
                Scalar::Cyclotomic { order, value: UPoly::constant(q.clone()) }
            }
            (Scalar::Rational(q), Field::RatFun) => {
                Scalar::RatFun { num: UPoly::constant(q.clone()), den: UPoly::one() }
            }
            (s, f) => panic!("cannot promote {} into {}", s.field(), f),
        }
    }

    /// Embeds an element of ℚ(ζ_n) into ℚ(ζ_m) for n | m via ζ_n ↦ ζ_m^{m/n}.
    pub fn embed_cyclotomic(&self, target: usize) -> Result<Scalar> {
        match self {
            Scalar::Rational(_) => Ok(self.clone()),
            Scalar::Cyclotomic { order, value } if target % order == 0 => {
                Ok(Scalar::cyclotomic(target, value.compose_power(target / order)))
            }
            other => Err(Error::FieldMismatch(
                other.field().to_string(),
                Field::Cyclotomic(target).to_string(),
            )),
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Cyclotomic { order, value } => {
                let modulus = cyclotomic_poly(*order);
                let (g, s, _) = value.ext_gcd(&modulus);
                debug_assert!(g.is_one());
                Scalar::cyclotomic(*order, s)
            }
            Scalar::RatFun { num, den } => Scalar::ratfun(den.clone(), num.clone()),
        })
    }

    pub fn pow(&self, k: i64) -> Scalar {
        let base = if k < 0 { self.inv().expect("negative power of zero") } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Scalar::one();
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &b;
            }
            e >>= 1;
            if e > 0 {
                b = &b * &b;
            }
        }
        acc
    }

    fn add_ref(&self, other: &Scalar) -> Scalar {
        if let (Scalar::Rational(a), Scalar::Rational(b)) = (self, other) {
            return Scalar::Rational(a + b);
        }
        let f = join_or_panic(self, other);
        match (self.promote(f), other.promote(f)) {
            (Scalar::Cyclotomic { order, value: a }, Scalar::Cyclotomic { value: b, .. }) => {
                Scalar::Cyclotomic { order, value: a.add(&b) }
            }
            (Scalar::RatFun { num: an, den: ad }, Scalar::RatFun { num: bn, den: bd }) => {
                if ad == bd {
                    Scalar::ratfun(an.add(&bn), ad)
                } else {
                    Scalar::ratfun(an.mul(&bd).add(&bn.mul(&ad)), ad.mul(&bd))
                }
            }
            _ => unreachable!(),
        }
    }

    fn mul_ref(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => return Scalar::Rational(a * b),
            (Scalar::Rational(a), Scalar::Cyclotomic { order, value })
            | (Scalar::Cyclotomic { order, value }, Scalar::Rational(a)) => {
                return Scalar::Cyclotomic { order: *order, value: value.scale(a) };
            }
            (Scalar::Rational(a), Scalar::RatFun { num, den })
            | (Scalar::RatFun { num, den }, Scalar::Rational(a)) => {
                if a.is_zero() {
                    return Scalar::zero().promote(Field::RatFun);
                }
                return Scalar::RatFun { num: num.scale(a), den: den.clone() };
            }
            _ => {}
        }
        let f = join_or_panic(self, other);
        match (self.promote(f), other.promote(f)) {
            (Scalar::Cyclotomic { order, value: a }, Scalar::Cyclotomic { value: b, .. }) => {
                Scalar::Cyclotomic { order, value: a.mul(&b).rem(&cyclotomic_poly(order)) }
            }
            (Scalar::RatFun { num: an, den: ad }, Scalar::RatFun { num: bn, den: bd }) => {
                Scalar::ratfun(an.mul(&bn), ad.mul(&bd))
            }
            _ => unreachable!(),
        }
    }

    fn neg_ref(&self) -> Scalar {
        match self {
            Scalar::Rational(q) => Scalar::Rational(-q),
            Scalar::Cyclotomic { order, value } => Scalar::Cyclotomic { order: *order, value: value.neg() },
            Scalar::RatFun { num, den } => Scalar::RatFun { num: num.neg(), den: den.clone() },
        }
    }

    /// Evaluates a rational function at a rational point (None at a pole).
    pub fn eval_ratfun(&self, at: &Q) -> Option<Q> {
        match self {
            Scalar::RatFun { num, den } => {
                let d = den.eval(at);
                if d.is_zero() {
                    None
                } else {
                    Some(num.eval(at) / d)
                }
            }
            Scalar::Rational(q) => Some(q.clone()),
            Scalar::Cyclotomic { .. } => None,
        }
    }
}

fn join_or_panic(a: &Scalar, b: &Scalar) -> Field {
    a.field()
        .join(b.field())
        .unwrap_or_else(|| panic!("incompatible scalar fields {} and {}", a.field(), b.field()))
}

fn normalize_ratfun(num: UPoly, den: UPoly) -> (UPoly, UPoly) {
    assert!(!den.is_zero(), "rational function with zero denominator");
    if num.is_zero() {
        return (UPoly::zero(), UPoly::one());
    }
    let (num, den) = if den.degree() == Some(0) {
        (num, den)
    } else {
        let g = num.gcd(&den);
        if g.is_one() {
            (num, den)
        } else {
            (num.div_rem(&g).0, den.div_rem(&g).0)
        }
    };
    let lead = den.lead().unwrap().clone();
    if lead.is_one() {
        (num, den)
    } else {
        let inv = lead.recip();
        (num.scale(&inv), den.scale(&inv))
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Scalar) -> bool {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => a == b,
            (Scalar::Cyclotomic { order: m, value: a }, Scalar::Cyclotomic { order: n, value: b }) => {
                m == n && a == b
            }
            (Scalar::RatFun { num: an, den: ad }, Scalar::RatFun { num: bn, den: bd }) => an == bn && ad == bd,
            (a, b) => match a.field().join(b.field()) {
                Some(f) => a.promote(f) == b.promote(f),
                None => false,
            },
        }
    }
}

impl Eq for Scalar {}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<Q> for Scalar {
    fn from(q: Q) -> Self {
        Scalar::Rational(q)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $imp:ident) => {
        impl<'a, 'b> $trait<&'b Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'b Scalar) -> Scalar {
                self.$imp(rhs)
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$imp(&rhs)
            }
        }
        impl<'b> $trait<&'b Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'b Scalar) -> Scalar {
                (&self).$imp(rhs)
            }
        }
        impl<'a> $trait<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$imp(&rhs)
            }
        }
    };
}

impl Scalar {
    fn sub_ref(&self, other: &Scalar) -> Scalar {
        if let (Scalar::Rational(a), Scalar::Rational(b)) = (self, other) {
            return Scalar::Rational(a - b);
        }
        self.add_ref(&other.neg_ref())
    }

    fn div_ref(&self, other: &Scalar) -> Scalar {
        self.mul_ref(&other.inv().expect("division by zero scalar"))
    }
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);
forward_binop!(Div, div, div_ref);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl<'a> Neg for &'a Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        if let (Scalar::Rational(a), Scalar::Rational(b)) = (&mut *self, rhs) {
            *a += b;
            return;
        }
        *self = self.add_ref(rhs);
    }
}

impl AddAssign<Scalar> for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        *self += &rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        if let (Scalar::Rational(a), Scalar::Rational(b)) = (&mut *self, rhs) {
            *a -= b;
            return;
        }
        *self = self.sub_ref(rhs);
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = self.mul_ref(rhs);
    }
}

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        let mut acc = Scalar::zero();
        for x in iter {
            acc += &x;
        }
        acc
    }
}

fn fmt_q(q: &Q) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

fn fmt_coeffs(coeffs: &[Q], len: usize) -> String {
    let mut parts: Vec<String> = coeffs.iter().map(fmt_q).collect();
    while parts.len() < len {
        parts.push("0/1".to_string());
    }
    format!("[{}]", parts.join(","))
}

fn short_q(q: &Q) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        fmt_q(q)
    }
}

/// `1 - 2v^4 + v^8` style, lowest degree first.
fn poly_text(coeffs: &[Q], var: &str) -> String {
    let mut out = String::new();
    for (k, c) in coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        let neg = c.is_negative();
        let a = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let power = match k {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{}^{}", var, k),
        };
        if k == 0 || !a.is_one() {
            out.push_str(&short_q(&a));
        }
        out.push_str(&power);
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

impl Scalar {
    /// Human-readable form for text output; not parseable.
    pub fn pretty(&self) -> String {
        match self {
            Scalar::Rational(q) => short_q(q),
            Scalar::Cyclotomic { order, value } => poly_text(value.coeffs(), &format!("ζ{}", order)),
            Scalar::RatFun { num, den } => {
                let n = poly_text(num.coeffs(), "v");
                if den.is_one() {
                    return n;
                }
                let wrap = |t: String, terms: usize| if terms > 1 { format!("({})", t) } else { t };
                let terms = |p: &UPoly| p.coeffs().iter().filter(|c| !c.is_zero()).count();
                format!("{}/{}", wrap(n, terms(num)), wrap(poly_text(den.coeffs(), "v"), terms(den)))
            }
        }
    }
}

/// Canonical string form: `a/b`, `[c0,c1,...]@zeta(n)` or `[num...]/[den...]@v`.
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => write!(f, "{}", fmt_q(q)),
            Scalar::Cyclotomic { order, value } => {
                write!(f, "{}@zeta({})", fmt_coeffs(value.coeffs(), totient(*order)), order)
            }
            Scalar::RatFun { num, den } => {
                write!(f, "{}/{}@v", fmt_coeffs(num.coeffs(), 1), fmt_coeffs(den.coeffs(), 1))
            }
        }
    }
}

fn parse_q(s: &str) -> Result<Q> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad rational '{}'", s));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Q::new(n, d))
        }
        None => Ok(Q::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

fn parse_coeff_list(s: &str) -> Result<UPoly> {
    let s = s.trim();
    let inner = s
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("expected [..] in '{}'", s)))?;
    if inner.trim().is_empty() {
        return Ok(UPoly::zero());
    }
    let coeffs = inner.split(',').map(parse_q).collect::<Result<Vec<_>>>()?;
    Ok(UPoly::new(coeffs))
}

impl FromStr for Scalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Scalar> {
        let s = s.trim();
        if let Some(body) = s.strip_suffix("@v") {
            let (n, d) = body
                .split_once("]/[")
                .ok_or_else(|| Error::Parse(format!("bad rational function '{}'", s)))?;
            let num = parse_coeff_list(&format!("{}]", n))?;
            let den = parse_coeff_list(&format!("[{}", d))?;
            if den.is_zero() {
                return Err(Error::Parse(format!("zero denominator in '{}'", s)));
            }
            return Ok(Scalar::ratfun(num, den));
        }
        if let Some((body, tail)) = s.split_once("@zeta(") {
            let order: usize = tail
                .strip_suffix(')')
                .and_then(|t| t.trim().parse().ok())
                .filter(|&n| n >= 1)
                .ok_or_else(|| Error::Parse(format!("bad cyclotomic order in '{}'", s)))?;
            return Ok(Scalar::cyclotomic(order, parse_coeff_list(body)?));
        }
        Ok(Scalar::Rational(parse_q(s)?))
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Scalar, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Quantum integer `[k] = (q^k − q^{−k}) / (q − q^{−1})` in ℚ(v), q = v².
pub fn quantum_int(k: i64) -> Scalar {
    if k == 0 {
        return Scalar::zero().promote(Field::RatFun);
    }
    let sign = if k < 0 { -1 } else { 1 };
    let k = k.abs();
    // q^{k-1} + q^{k-3} + ... + q^{1-k}
    let mut acc = Scalar::zero();
    let mut e = k - 1;
    while e >= -(k - 1) {
        acc += &Scalar::q_pow(e);
        e -= 2;
    }
    if sign < 0 {
        -acc
    } else {
        acc
    }
}

/// `[k]!`
pub fn quantum_factorial(k: i64) -> Scalar {
    (1..=k).fold(Scalar::one().promote(Field::RatFun), |acc, j| &acc * &quantum_int(j))
}

impl Scalar {
    /// Sign of a rational value (None for other variants).
    pub fn rational_signum(&self) -> Option<i32> {
        self.to_rational().map(|q| if q.is_zero() { 0 } else if q.is_positive() { 1 } else { -1 })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pretty_forms() {
        assert_eq!(Scalar::rational(-3, 6).pretty(), "-1/2");
        assert_eq!(Scalar::from_int(4).pretty(), "4");
        assert_eq!((Scalar::zeta(5) * Scalar::from_int(2) + Scalar::one()).pretty(), "1 + 2ζ5");
        assert_eq!(Scalar::v_pow(-2).pretty(), "1/v^2");
        let x = (Scalar::v_pow(4) - Scalar::one()) / Scalar::v_pow(2);
        assert_eq!(x.pretty(), "(-1 + v^4)/v^2");
    }

    #[test]
    fn rational_canonical_form() {
        let a = Scalar::rational(6, -4);
        assert_eq!(a.to_string(), "-3/2");
        assert_eq!("-3/2".parse::<Scalar>().unwrap(), a);
        assert_eq!("7".parse::<Scalar>().unwrap(), Scalar::from_int(7));
    }

    #[test]
    fn cyclotomic_relations() {
        let z = Scalar::zeta(5);
        assert_eq!(z.pow(5), Scalar::one());
        let s: Scalar = (0..5).map(|k| z.pow(k)).sum();
        assert!(s.is_zero());
        let zi = z.inv().unwrap();
        assert_eq!(&z * &zi, Scalar::one());
        assert_eq!(Scalar::zeta(4).pow(2), Scalar::from_int(-1));
    }

    #[test]
    fn cyclotomic_embedding() {
        let i = Scalar::zeta(4);
        let e = i.embed_cyclotomic(8).unwrap();
        assert_eq!(e, Scalar::zeta(8).pow(2));
        assert_eq!(e.pow(2), Scalar::from_int(-1));
    }

    #[test]
    fn ratfun_normalization() {
        // (v^2 - 1)/(v - 1) = v + 1
        let x = Scalar::ratfun(UPoly::from_i64(&[-1, 0, 1]), UPoly::from_i64(&[-1, 1]));
        assert_eq!(x, &Scalar::v() + &Scalar::one());
        let qi = quantum_int(2);
        assert_eq!(qi, &Scalar::q_pow(1) + &Scalar::q_pow(-1));
        assert_eq!(x.to_string(), "[1/1,1/1]/[1/1]@v");
        assert_eq!(x.to_string().parse::<Scalar>().unwrap(), x);
    }

    #[test]
    fn string_round_trip_cyclotomic() {
        let x = &Scalar::zeta(5) + &Scalar::rational(1, 3);
        assert_eq!(x.to_string(), "[1/3,1/1,0/1,0/1]@zeta(5)");
        assert_eq!(x.to_string().parse::<Scalar>().unwrap(), x);
    }

    #[test]
    fn mixed_variant_equality() {
        assert_eq!(Scalar::one().promote(Field::RatFun), Scalar::one());
        assert_eq!(Scalar::zeta(1), Scalar::one());
        assert_ne!(Scalar::zeta(3), Scalar::one());
    }
}
