//! Sparse bivariate Laurent polynomials in `u`, `v` with arbitrary-precision
//! integer coefficients.
//!
//! Every Hodge polynomial in the crate is a [`BiLaurent`]. Values are kept in
//! canonical form (no zero coefficients), so structural equality is
//! polynomial equality.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Exponent pair `(p, q)` of the monomial `u^p v^q`.
///
/// Ordered graded-lexicographically: first by total degree `p + q`, then by
/// `p`. The order is compatible with addition, which is what exact division
/// relies on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Exponent {
    pub u: i64,
    pub v: i64,
}

impl Exponent {
    pub const ZERO: Exponent = Exponent { u: 0, v: 0 };

    pub const fn new(u: i64, v: i64) -> Self {
        Exponent { u, v }
    }

    pub fn degree(self) -> i64 {
        self.u + self.v
    }
}

impl Ord for Exponent {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(self.u.cmp(&other.u))
    }
}

impl PartialOrd for Exponent {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for Exponent {
    type Output = Exponent;
    fn add(self, o: Exponent) -> Exponent {
        Exponent::new(self.u + o.u, self.v + o.v)
    }
}

impl Sub for Exponent {
    type Output = Exponent;
    fn sub(self, o: Exponent) -> Exponent {
        Exponent::new(self.u - o.u, self.v - o.v)
    }
}

/// Substitution rules accepted by [`BiLaurent::specialize`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Substitution {
    /// `u -> t, v -> t`; the result is univariate, stored in the `u` slot.
    Diagonal,
    /// `u -> -u^2, v -> -v^2`.
    NegativeSquares,
    /// `u <-> v`.
    Swap,
}

/// Sparse Laurent polynomial in `u` and `v` over the integers.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BiLaurent {
    terms: BTreeMap<Exponent, BigInt>,
}

impl BiLaurent {
    pub fn zero() -> Self {
        BiLaurent::default()
    }

    pub fn one() -> Self {
        BiLaurent::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        BiLaurent::monomial(c, 0, 0)
    }

    pub fn monomial(c: impl Into<BigInt>, u: i64, v: i64) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Exponent::new(u, v), c);
        }
        BiLaurent { terms }
    }

    pub fn u() -> Self {
        BiLaurent::monomial(1, 1, 0)
    }

    pub fn v() -> Self {
        BiLaurent::monomial(1, 0, 1)
    }

    /// `(uv)^n`, for any integer `n`.
    pub fn uv_pow(n: i64) -> Self {
        BiLaurent::monomial(1, n, n)
    }

    /// Builds a polynomial from `(p, q, c)` triples; repeated exponents are
    /// summed and zero coefficients dropped.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, i64, C)>,
        C: Into<BigInt>,
    {
        let mut map: BTreeMap<Exponent, BigInt> = BTreeMap::new();
        for (p, q, c) in terms {
            *map.entry(Exponent::new(p, q)).or_insert_with(BigInt::zero) += c.into();
        }
        map.retain(|_, c| !c.is_zero());
        BiLaurent { terms: map }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coeff(0, 0).is_one()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (Exponent, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, u: i64, v: i64) -> BigInt {
        self.terms
            .get(&Exponent::new(u, v))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0, 0)
    }

    /// The single term of a monomial, or `None` for zero or multi-term values.
    pub fn as_monomial(&self) -> Option<(Exponent, &BigInt)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(e, c)| (*e, c))
        } else {
            None
        }
    }

    /// Largest term under the graded-lex order.
    pub fn leading_term(&self) -> Option<(Exponent, &BigInt)> {
        self.terms.iter().next_back().map(|(e, c)| (*e, c))
    }

    /// Smallest term under the graded-lex order.
    pub fn trailing_term(&self) -> Option<(Exponent, &BigInt)> {
        self.terms.iter().next().map(|(e, c)| (*e, c))
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return BiLaurent::zero();
        }
        BiLaurent {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    /// Multiplies by the monomial `u^p v^q`.
    pub fn shift(&self, p: i64, q: i64) -> Self {
        let s = Exponent::new(p, q);
        BiLaurent {
            terms: self.terms.iter().map(|(e, c)| (*e + s, c.clone())).collect(),
        }
    }

    /// Nonnegative integer power.
    pub fn powu(&self, n: u32) -> Self {
        let mut result = BiLaurent::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = &result * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Integer power. Negative exponents are only defined for unit monomials
    /// `±u^p v^q`.
    pub fn pow(&self, n: i64) -> Result<Self> {
        if n >= 0 {
            let n = u32::try_from(n)
                .map_err(|_| Error::UnsupportedOperation(format!("exponent {n} too large")))?;
            return Ok(self.powu(n));
        }
        match self.as_monomial() {
            Some((e, c)) if c.abs().is_one() => {
                let k = -n;
                let sign = if c.is_negative() && k % 2 == 1 { -1 } else { 1 };
                Ok(BiLaurent::monomial(sign, -e.u * k, -e.v * k))
            }
            Some(_) => Err(Error::UnsupportedOperation(format!(
                "negative power {n} of a monomial with non-unit coefficient"
            ))),
            None => Err(Error::UnsupportedOperation(format!(
                "negative power {n} of a polynomial with {} terms",
                self.len()
            ))),
        }
    }

    /// Exact quotient `self / den` by leading-term elimination.
    ///
    /// Fails with [`Error::InexactDivision`] as soon as the remainder cannot
    /// vanish: a quotient coefficient is not integral, or a quotient exponent
    /// leaves the Newton box `box(self) - box(den)`.
    pub fn exact_div(&self, den: &BiLaurent) -> Result<Self> {
        let (den_lead, den_lead_c) = den.leading_term().ok_or(Error::DivisionByZero)?;
        if self.is_zero() {
            return Ok(BiLaurent::zero());
        }
        if den.len() == 1 {
            let mut terms = BTreeMap::new();
            for (e, c) in &self.terms {
                let (q, r) = c.div_rem(den_lead_c);
                if !r.is_zero() {
                    return Err(self.inexact(den));
                }
                terms.insert(*e - den_lead, q);
            }
            return Ok(BiLaurent { terms });
        }

        let floor = self.trailing_term().unwrap().0 - den.trailing_term().unwrap().0;
        let (num_lo, num_hi) = self.exponent_box();
        let (den_lo, den_hi) = den.exponent_box();
        let lo = num_lo - den_lo;
        let hi = num_hi - den_hi;

        let mut rem = self.terms.clone();
        let mut quot = BTreeMap::new();
        while let Some((&e, c)) = rem.iter().next_back() {
            let qe = e - den_lead;
            if qe < floor || qe.u < lo.u || qe.v < lo.v || qe.u > hi.u || qe.v > hi.v {
                return Err(self.inexact(den));
            }
            let (qc, r) = c.div_rem(den_lead_c);
            if !r.is_zero() {
                return Err(self.inexact(den));
            }
            for (de, dc) in &den.terms {
                let key = qe + *de;
                let entry = rem.entry(key).or_insert_with(BigInt::zero);
                *entry -= &qc * dc;
                if entry.is_zero() {
                    rem.remove(&key);
                }
            }
            quot.insert(qe, qc);
        }
        Ok(BiLaurent { terms: quot })
    }

    /// Divides every coefficient by the integer `d`, which must divide each
    /// one exactly.
    pub fn div_integer(&self, d: &BigInt) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let (q, r) = c.div_rem(d);
            if !r.is_zero() {
                return Err(Error::InexactDivision(format!(
                    "coefficient {c} of u^{}v^{} is not divisible by {d}",
                    e.u, e.v
                )));
            }
            terms.insert(*e, q);
        }
        Ok(BiLaurent { terms })
    }

    fn inexact(&self, den: &BiLaurent) -> Error {
        Error::InexactDivision(format!(
            "{}-term numerator is not a multiple of {}",
            self.len(),
            truncate_display(den, 120)
        ))
    }

    /// Componentwise minimum and maximum exponents. Zero maps to the origin.
    pub fn exponent_box(&self) -> (Exponent, Exponent) {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else {
            return (Exponent::ZERO, Exponent::ZERO);
        };
        let (mut lo, mut hi) = (*first, *first);
        for e in it {
            lo.u = lo.u.min(e.u);
            lo.v = lo.v.min(e.v);
            hi.u = hi.u.max(e.u);
            hi.v = hi.v.max(e.v);
        }
        (lo, hi)
    }

    pub fn specialize(&self, rule: Substitution) -> Self {
        match rule {
            Substitution::Swap => self.map_exponents(|e| (Exponent::new(e.v, e.u), false)),
            Substitution::Diagonal => self.map_exponents(|e| (Exponent::new(e.degree(), 0), false)),
            Substitution::NegativeSquares => self.map_exponents(|e| {
                (Exponent::new(2 * e.u, 2 * e.v), (e.u + e.v).rem_euclid(2) == 1)
            }),
        }
    }

    pub fn swap_uv(&self) -> Self {
        self.specialize(Substitution::Swap)
    }

    /// `u, v -> t`, returned as a polynomial in `u` alone.
    pub fn diagonal(&self) -> Self {
        self.specialize(Substitution::Diagonal)
    }

    fn map_exponents(&self, f: impl Fn(Exponent) -> (Exponent, bool)) -> Self {
        let mut map: BTreeMap<Exponent, BigInt> = BTreeMap::new();
        for (e, c) in &self.terms {
            let (ne, negate) = f(*e);
            let entry = map.entry(ne).or_insert_with(BigInt::zero);
            if negate {
                *entry -= c;
            } else {
                *entry += c;
            }
        }
        map.retain(|_, c| !c.is_zero());
        BiLaurent { terms: map }
    }

    /// Value at a rational point. Negative powers of zero are rejected.
    pub fn evaluate(&self, u: &BigRational, v: &BigRational) -> Result<BigRational> {
        let mut total = BigRational::zero();
        for (e, c) in &self.terms {
            let term = rational_pow(u, e.u)? * rational_pow(v, e.v)?;
            total += term * BigRational::from_integer(c.clone());
        }
        Ok(total)
    }

    /// `(uv)^n * a(1/u, 1/v)`: sends `c u^p v^q` to `c u^(n-p) v^(n-q)`.
    pub fn reciprocal_dual(&self, n: i64) -> Self {
        BiLaurent {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (Exponent::new(n - e.u, n - e.v), c.clone()))
                .collect(),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        self.terms
            .iter()
            .all(|(e, c)| self.terms.get(&Exponent::new(e.v, e.u)) == Some(c))
    }

    /// Terms with a negative coefficient.
    pub fn negative_part(&self) -> Self {
        BiLaurent {
            terms: self
                .terms
                .iter()
                .filter(|(_, c)| c.is_negative())
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        }
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Whether every term is a power of `uv`.
    pub fn is_in_uv(&self) -> bool {
        self.terms.keys().all(|e| e.u == e.v)
    }

    /// LaTeX rendering with explicit signs, e.g. `1 - 2 u^{3} v^{-1}`.
    pub fn to_latex(&self) -> String {
        render(self, |e| {
            let mut s = String::new();
            for (name, k) in [("u", e.u), ("v", e.v)] {
                match k {
                    0 => {}
                    1 => push_factor(&mut s, name),
                    k => push_factor(&mut s, &format!("{name}^{{{k}}}")),
                }
            }
            s
        }, " ")
    }

    /// Text rendering of a univariate value (`u` slot) in the variable `var`.
    pub fn to_univariate_string(&self, var: &str) -> String {
        render(self, |e| match e.u {
            0 => String::new(),
            1 => var.to_string(),
            k => format!("{var}^{k}"),
        }, "")
    }
}

fn push_factor(s: &mut String, f: &str) {
    if !s.is_empty() {
        s.push(' ');
    }
    s.push_str(f);
}

fn render(p: &BiLaurent, mono: impl Fn(Exponent) -> String, sep: &str) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (e, c)) in p.terms().enumerate() {
        let m = mono(e);
        let mag = c.abs();
        if i == 0 {
            if c.is_negative() {
                out.push('-');
            }
        } else if c.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        if m.is_empty() {
            out.push_str(&mag.to_string());
        } else if mag.is_one() {
            out.push_str(&m);
        } else {
            out.push_str(&mag.to_string());
            out.push_str(sep);
            out.push_str(&m);
        }
    }
    out
}

fn truncate_display(p: &BiLaurent, max: usize) -> String {
    let s = p.to_string();
    if s.len() > max {
        let cut = s.char_indices().take_while(|(i, _)| *i < max).last().map_or(0, |(i, c)| i + c.len_utf8());
        format!("{}...", &s[..cut])
    } else {
        s
    }
}

fn rational_pow(x: &BigRational, k: i64) -> Result<BigRational> {
    if k >= 0 {
        Ok(num_traits::pow(x.clone(), k as usize))
    } else if x.is_zero() {
        Err(Error::Domain("negative power of zero".into()))
    } else {
        Ok(num_traits::pow(x.recip(), (-k) as usize))
    }
}

impl fmt::Display for BiLaurent {
    /// Plain text in increasing graded-lex order: `1 + 2v + 2u + 4uv`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = render(self, |e| {
            let mut s = String::new();
            for (name, k) in [("u", e.u), ("v", e.v)] {
                match k {
                    0 => {}
                    1 => s.push_str(name),
                    k => s.push_str(&format!("{name}^{k}")),
                }
            }
            s
        }, "");
        f.write_str(&s)
    }
}

impl fmt::Debug for BiLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiLaurent({self})")
    }
}

impl From<i64> for BiLaurent {
    fn from(c: i64) -> Self {
        BiLaurent::constant(c)
    }
}

impl From<BigInt> for BiLaurent {
    fn from(c: BigInt) -> Self {
        BiLaurent::constant(c)
    }
}

// ---------------------------------------------------------------------------
// Arithmetic

impl<'a> Add<&'a BiLaurent> for &BiLaurent {
    type Output = BiLaurent;
    fn add(self, rhs: &'a BiLaurent) -> BiLaurent {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a> Sub<&'a BiLaurent> for &BiLaurent {
    type Output = BiLaurent;
    fn sub(self, rhs: &'a BiLaurent) -> BiLaurent {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<'a> Mul<&'a BiLaurent> for &BiLaurent {
    type Output = BiLaurent;
    fn mul(self, rhs: &'a BiLaurent) -> BiLaurent {
        if self.is_zero() || rhs.is_zero() {
            return BiLaurent::zero();
        }
        if let Some((e, c)) = rhs.as_monomial() {
            return self.shift(e.u, e.v).scale(c);
        }
        if let Some((e, c)) = self.as_monomial() {
            return rhs.shift(e.u, e.v).scale(c);
        }
        let mut acc: BTreeMap<Exponent, BigInt> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                *acc.entry(*ea + *eb).or_insert_with(BigInt::zero) += ca * cb;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        BiLaurent { terms: acc }
    }
}

impl AddAssign<&BiLaurent> for BiLaurent {
    fn add_assign(&mut self, rhs: &BiLaurent) {
        for (e, c) in &rhs.terms {
            let entry = self.terms.entry(*e).or_insert_with(BigInt::zero);
            *entry += c;
            if entry.is_zero() {
                self.terms.remove(e);
            }
        }
    }
}

impl SubAssign<&BiLaurent> for BiLaurent {
    fn sub_assign(&mut self, rhs: &BiLaurent) {
        for (e, c) in &rhs.terms {
            let entry = self.terms.entry(*e).or_insert_with(BigInt::zero);
            *entry -= c;
            if entry.is_zero() {
                self.terms.remove(e);
            }
        }
    }
}

impl MulAssign<&BiLaurent> for BiLaurent {
    fn mul_assign(&mut self, rhs: &BiLaurent) {
        *self = &*self * rhs;
    }
}

impl Neg for &BiLaurent {
    type Output = BiLaurent;
    fn neg(self) -> BiLaurent {
        BiLaurent {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for BiLaurent {
    type Output = BiLaurent;
    fn neg(mut self) -> BiLaurent {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<BiLaurent> for BiLaurent {
            type Output = BiLaurent;
            fn $method(self, rhs: BiLaurent) -> BiLaurent {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a BiLaurent> for BiLaurent {
            type Output = BiLaurent;
            fn $method(self, rhs: &'a BiLaurent) -> BiLaurent {
                (&self).$method(rhs)
            }
        }
        impl $tr<BiLaurent> for &BiLaurent {
            type Output = BiLaurent;
            fn $method(self, rhs: BiLaurent) -> BiLaurent {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl AddAssign<BiLaurent> for BiLaurent {
    fn add_assign(&mut self, rhs: BiLaurent) {
        *self += &rhs;
    }
}

impl SubAssign<BiLaurent> for BiLaurent {
    fn sub_assign(&mut self, rhs: BiLaurent) {
        *self -= &rhs;
    }
}

impl std::iter::Sum for BiLaurent {
    fn sum<I: Iterator<Item = BiLaurent>>(iter: I) -> Self {
        iter.fold(BiLaurent::zero(), |mut acc, x| {
            acc += &x;
            acc
        })
    }
}

impl std::iter::Product for BiLaurent {
    fn product<I: Iterator<Item = BiLaurent>>(iter: I) -> Self {
        iter.fold(BiLaurent::one(), |acc, x| &acc * &x)
    }
}

// ---------------------------------------------------------------------------
// JSON: {"terms":[{"u":p,"v":q,"c":"<decimal>"}]}, sorted by (p, q).

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    u: i64,
    v: i64,
    c: String,
}

#[derive(Serialize, Deserialize)]
struct JsonPoly {
    terms: Vec<JsonTerm>,
}

impl Serialize for BiLaurent {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut terms: Vec<JsonTerm> = self
            .terms
            .iter()
            .map(|(e, c)| JsonTerm { u: e.u, v: e.v, c: c.to_string() })
            .collect();
        terms.sort_by_key(|t| (t.u, t.v));
        JsonPoly { terms }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for BiLaurent {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = JsonPoly::deserialize(deserializer)?;
        let mut terms = Vec::with_capacity(raw.terms.len());
        for t in raw.terms {
            let c: BigInt = t
                .c
                .parse()
                .map_err(|_| D::Error::custom(format!("invalid coefficient {:?}", t.c)))?;
            terms.push((t.u, t.v, c));
        }
        Ok(BiLaurent::from_terms(terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(n: i64) -> BiLaurent {
        BiLaurent::uv_pow(n)
    }

    fn one_plus(x: &BiLaurent) -> BiLaurent {
        &BiLaurent::one() + x
    }

    #[test]
    fn difference_of_squares() {
        let uv = BiLaurent::uv_pow(1);
        let a = &BiLaurent::one() + &uv;
        let b = &BiLaurent::one() - &uv;
        assert_eq!(&a * &b, &BiLaurent::one() - &t(2));
    }

    #[test]
    fn jacobian_genus_two_expansion() {
        let j = one_plus(&BiLaurent::u()).powu(2) * one_plus(&BiLaurent::v()).powu(2);
        let expected = BiLaurent::from_terms([
            (0, 0, 1),
            (1, 0, 2),
            (2, 0, 1),
            (0, 1, 2),
            (1, 1, 4),
            (2, 1, 2),
            (0, 2, 1),
            (1, 2, 2),
            (2, 2, 1),
        ]);
        assert_eq!(j, expected);
    }

    #[test]
    fn monomial_exponents_add() {
        assert_eq!(&t(-1) * &t(3), t(2));
        assert_eq!(t(1).pow(-3).unwrap(), t(-3));
        assert_eq!(BiLaurent::monomial(-1, 1, 2).pow(-3).unwrap(), BiLaurent::monomial(-1, -3, -6));
    }

    #[test]
    fn negative_power_of_polynomial_is_rejected() {
        let p = one_plus(&BiLaurent::u());
        assert!(matches!(p.pow(-1), Err(Error::UnsupportedOperation(_))));
        assert!(matches!(BiLaurent::monomial(2, 1, 0).pow(-1), Err(Error::UnsupportedOperation(_))));
    }

    #[test]
    fn geometric_division() {
        let num = &BiLaurent::one() - &t(3);
        let den = &BiLaurent::one() - &t(1);
        let q = num.exact_div(&den).unwrap();
        assert_eq!(q, BiLaurent::from_terms([(0, 0, 1), (1, 1, 1), (2, 2, 1)]));

        let e5 = (&BiLaurent::one() - &t(5)).exact_div(&den).unwrap();
        assert_eq!(e5, (0..5).map(t).sum());
    }

    #[test]
    fn inexact_division_is_an_error() {
        let num = &BiLaurent::one() + &t(1);
        let den = &BiLaurent::one() - &t(1);
        assert!(matches!(num.exact_div(&den), Err(Error::InexactDivision(_))));
        let skew = BiLaurent::u().exact_div(&(&BiLaurent::u() - &BiLaurent::v()));
        assert!(matches!(skew, Err(Error::InexactDivision(_))));
        assert!(matches!(num.exact_div(&BiLaurent::zero()), Err(Error::DivisionByZero)));
        assert!(matches!(
            BiLaurent::constant(3).exact_div(&BiLaurent::constant(2)),
            Err(Error::InexactDivision(_))
        ));
    }

    #[test]
    fn division_with_laurent_terms() {
        let a = BiLaurent::from_terms([(-2, 1, 3), (0, 0, -1), (4, -1, 7)]);
        let b = BiLaurent::from_terms([(1, 1, 1), (0, -3, 2), (-1, 0, -1)]);
        assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
    }

    #[test]
    fn specializations() {
        let p = one_plus(&BiLaurent::u()) * one_plus(&BiLaurent::v());
        assert_eq!(p.diagonal(), BiLaurent::from_terms([(0, 0, 1), (1, 0, 2), (2, 0, 1)]));

        let q = one_plus(&t(1)).specialize(Substitution::NegativeSquares);
        assert_eq!(q, one_plus(&t(2)));

        let p2 = one_plus(&t(1)) + t(2);
        let minus_one = BigRational::from_integer((-1).into());
        assert_eq!(
            p2.evaluate(&minus_one, &minus_one).unwrap(),
            BigRational::from_integer(3.into())
        );
    }

    #[test]
    fn reciprocal_dual_examples() {
        assert_eq!(one_plus(&t(1)).reciprocal_dual(1), one_plus(&t(1)));
        assert_eq!(
            one_plus(&BiLaurent::u()).reciprocal_dual(1),
            &BiLaurent::v() + &t(1)
        );
    }

    #[test]
    fn text_and_latex_rendering() {
        let p = BiLaurent::from_terms([(0, 0, 1), (1, 0, -2), (2, 3, 1), (-1, 0, 5)]);
        assert_eq!(p.to_string(), "5u^-1 + 1 - 2u + u^2v^3");
        assert_eq!(p.to_latex(), "5 u^{-1} + 1 - 2 u + u^{2} v^{3}");
        assert_eq!(BiLaurent::zero().to_string(), "0");
        assert_eq!((-BiLaurent::u()).to_string(), "-u");
        let t_poly = BiLaurent::from_terms([(0, 0, 1), (1, 0, 4), (2, 0, 6)]);
        assert_eq!(t_poly.to_univariate_string("t"), "1 + 4t + 6t^2");
    }

    #[test]
    fn json_shape_is_sorted_by_u_then_v() {
        let p = BiLaurent::from_terms([(0, 2, 1), (1, 0, -3), (0, 0, 7)]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(
            s,
            r#"{"terms":[{"u":0,"v":0,"c":"7"},{"u":0,"v":2,"c":"1"},{"u":1,"v":0,"c":"-3"}]}"#
        );
        let back: BiLaurent = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
        assert!(serde_json::from_str::<BiLaurent>(r#"{"terms":[{"u":0,"v":0,"c":"x"}]}"#).is_err());
    }

    #[test]
    fn integer_division_requires_divisibility() {
        let p = BiLaurent::from_terms([(0, 0, 4), (1, 1, 6)]);
        assert_eq!(p.div_integer(&BigInt::from(2)).unwrap(), BiLaurent::from_terms([(0, 0, 2), (1, 1, 3)]));
        assert!(p.div_integer(&BigInt::from(4)).is_err());
    }
}
