//! Holomorphic triples of ranks (2,1) and (1,2): stability intervals,
//! critical values and Hodge polynomials at non-critical parameters.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::{One, Signed};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hodge::{one_minus_t, t, HodgeResult};
use crate::polyring::BiLaurent;
use crate::varieties::jacobian;
use crate::xseries::{uv_binomial_numerator, GeomExpr, Pole};

/// Type `(n1, n2, d1, d2)` of a triple `E2 -> E1` on a genus `g` curve.
///
/// Ranks may be zero so that sub- and quotient types can be represented;
/// slope accessors fail on a zero rank.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct TripleType {
    pub g: u32,
    pub n1: i64,
    pub n2: i64,
    pub d1: i64,
    pub d2: i64,
}

impl TripleType {
    pub fn new(g: u32, n1: i64, n2: i64, d1: i64, d2: i64) -> Self {
        TripleType { g, n1, n2, d1, d2 }
    }

    pub fn rank21(g: u32, d1: i64, d2: i64) -> Self {
        TripleType::new(g, 2, 1, d1, d2)
    }

    pub fn rank12(g: u32, d1: i64, d2: i64) -> Self {
        TripleType::new(g, 1, 2, d1, d2)
    }

    pub fn rank22(g: u32, d1: i64, d2: i64) -> Self {
        TripleType::new(g, 2, 2, d1, d2)
    }

    pub fn mu1(&self) -> Result<Rational64> {
        slope(self.d1, self.n1)
    }

    pub fn mu2(&self) -> Result<Rational64> {
        slope(self.d2, self.n2)
    }

    /// `n2 / (n1 + n2)`.
    pub fn lambda(&self) -> Result<Rational64> {
        slope(self.n2, self.n1 + self.n2)
    }

    /// `mu1 - mu2`.
    pub fn slope_gap(&self) -> Result<Rational64> {
        Ok(self.mu1()? - self.mu2()?)
    }

    /// The dual type `(n2, n1, -d2, -d1)`.
    pub fn dual(&self) -> Self {
        TripleType::new(self.g, self.n2, self.n1, -self.d2, -self.d1)
    }

    /// Expected dimension `(g-1)(n1^2 + n2^2 - n1 n2) - n1 d2 + n2 d1 + 1`,
    /// i.e. `1 - chi(T, T)`.
    pub fn dimension(&self) -> i64 {
        let (n1, n2) = (self.n1, self.n2);
        (self.g as i64 - 1) * (n1 * n1 + n2 * n2 - n1 * n2) - n1 * self.d2 + n2 * self.d1 + 1
    }

    pub(crate) fn require_genus(&self) -> Result<()> {
        if self.g < 2 {
            return Err(Error::Domain(format!("genus must be at least 2, got {}", self.g)));
        }
        Ok(())
    }

    fn require_rank(&self, n1: i64, n2: i64) -> Result<()> {
        if (self.n1, self.n2) != (n1, n2) {
            return Err(Error::Domain(format!(
                "expected a triple of rank ({n1},{n2}), got ({},{})",
                self.n1, self.n2
            )));
        }
        Ok(())
    }
}

impl fmt::Display for TripleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "g={} ({},{},{},{})", self.g, self.n1, self.n2, self.d1, self.d2)
    }
}

fn slope(d: i64, n: i64) -> Result<Rational64> {
    if n == 0 {
        return Err(Error::Domain("slope of a rank zero bundle".into()));
    }
    Ok(Rational64::new(d, n))
}

/// Side of an infinitesimal perturbation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Side {
    Minus,
    Exact,
    Plus,
}

/// Exact rational parameter, possibly displaced by an infinitesimal.
///
/// Orders as `(v, -eps) < (v, exact) < (v, +eps)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SigmaValue {
    pub value: Rational64,
    pub side: Side,
}

impl SigmaValue {
    pub fn exact(value: Rational64) -> Self {
        SigmaValue { value, side: Side::Exact }
    }

    pub fn plus(value: Rational64) -> Self {
        SigmaValue { value, side: Side::Plus }
    }

    pub fn minus(value: Rational64) -> Self {
        SigmaValue { value, side: Side::Minus }
    }

    pub fn is_exact(&self) -> bool {
        self.side == Side::Exact
    }

    /// `self + c`, keeping the side.
    pub fn shifted(&self, c: Rational64) -> Self {
        SigmaValue { value: self.value + c, side: self.side }
    }

    /// Floor of the perturbed value: `+eps` never changes the floor, `-eps`
    /// drops an exact integer by one.
    pub fn floor(&self) -> i64 {
        match self.side {
            Side::Minus => self.value.ceil().to_integer() - 1,
            _ => self.value.floor().to_integer(),
        }
    }

    /// `(self + c) / k` with the same side, for `k > 0`.
    pub fn affine(&self, c: Rational64, k: i64) -> Self {
        SigmaValue { value: (self.value + c) / k, side: self.side }
    }
}

impl Ord for SigmaValue {
    fn cmp(&self, other: &Self) -> Ordering {
        self.value.cmp(&other.value).then(self.side.cmp(&other.side))
    }
}

impl PartialOrd for SigmaValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SigmaValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)?;
        match self.side {
            Side::Plus => f.write_str("+"),
            Side::Minus => f.write_str("-"),
            Side::Exact => Ok(()),
        }
    }
}

impl Serialize for SigmaValue {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Parses `NUM`, `NUM/DEN`, each optionally followed by `+` or `-`.
impl FromStr for SigmaValue {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (body, side) = match s.strip_suffix('+') {
            Some(b) => (b, Side::Plus),
            None => match s.strip_suffix('-').filter(|b| !b.is_empty()) {
                Some(b) => (b, Side::Minus),
                None => (s, Side::Exact),
            },
        };
        let bad = || Error::Domain(format!("cannot parse sigma value {s:?}"));
        let value = match body.split_once('/') {
            Some((n, d)) => {
                let n: i64 = n.trim().parse().map_err(|_| bad())?;
                let d: i64 = d.trim().parse().map_err(|_| bad())?;
                if d == 0 {
                    return Err(bad());
                }
                Rational64::new(n, d)
            }
            None => Rational64::from_integer(body.trim().parse().map_err(|_| bad())?),
        };
        Ok(SigmaValue { value, side })
    }
}

/// Upper end of the parameter interval.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bound {
    Finite(Rational64),
    Unbounded,
}

/// `[sigma_m, sigma_M]` with `sigma_m = mu1 - mu2` and
/// `sigma_M = (1 + (n1+n2)/|n1-n2|)(mu1 - mu2)`, unbounded when `n1 = n2`.
pub fn sigma_interval(t: &TripleType) -> Result<(Rational64, Bound)> {
    let gap = t.slope_gap()?;
    if gap.is_negative() {
        return Err(Error::EmptyModuli(format!("mu1 - mu2 = {gap} is negative for {t}")));
    }
    if t.n1 == t.n2 {
        return Ok((gap, Bound::Unbounded));
    }
    let factor = Rational64::one() + Rational64::new(t.n1 + t.n2, (t.n1 - t.n2).abs());
    Ok((gap, Bound::Finite(factor * gap)))
}

fn ceil_int(r: Rational64) -> i64 {
    r.ceil().to_integer()
}

/// `{3 d_M - d1 - d2 : mu1 <= d_M <= d1 - d2}` for rank (2,1).
pub fn critical_values_21(t: &TripleType) -> Result<Vec<Rational64>> {
    t.require_rank(2, 1)?;
    let lo = ceil_int(t.mu1()?);
    Ok((lo..=t.d1 - t.d2)
        .map(|dm| Rational64::from_integer(3 * dm - t.d1 - t.d2))
        .collect())
}

/// `{3 d_M + d1 + d2 : -mu2 <= d_M <= d1 - d2}` for rank (1,2).
pub fn critical_values_12(t: &TripleType) -> Result<Vec<Rational64>> {
    t.require_rank(1, 2)?;
    let lo = ceil_int(-t.mu2()?);
    Ok((lo..=t.d1 - t.d2)
        .map(|dm| Rational64::from_integer(3 * dm + t.d1 + t.d2))
        .collect())
}

/// Rejects parameters that are critical or outside `(sigma_m, sigma_M)`.
fn check_sigma(t: &TripleType, sigma: &SigmaValue, critical: &[Rational64]) -> Result<()> {
    let (lo, hi) = sigma_interval(t)?;
    let at_end = sigma.value == lo || matches!(hi, Bound::Finite(h) if sigma.value == h);
    if sigma.is_exact() && (at_end || critical.contains(&sigma.value)) {
        return Err(Error::CriticalValue(sigma.to_string()));
    }
    let below = *sigma <= SigmaValue::exact(lo);
    let above = matches!(hi, Bound::Finite(h) if *sigma >= SigmaValue::exact(h));
    if below || above {
        let hi_s = match hi {
            Bound::Finite(h) => h.to_string(),
            Bound::Unbounded => "inf".into(),
        };
        return Err(Error::EmptyModuli(format!(
            "sigma = {sigma} lies outside the open interval ({lo}, {hi_s}) for {t}"
        )));
    }
    Ok(())
}

/// The extraction
/// `J^2/(1-uv) coeff_{x^0} [ (1+ux)^g (1+vx)^g / ((1-x)(1-uvx) x^k)
///   ( (uv)^k/(1-(uv)^{-1}x) - (uv)^e/(1-(uv)^2 x) ) ]`
/// shared by both low-rank formulas.
fn low_rank_extraction(g: u32, k: i64, e: i64) -> Result<BiLaurent> {
    let num = uv_binomial_numerator(g);
    let base = || -> Result<Vec<Pole>> {
        Ok(vec![Pole::simple(BiLaurent::one())?, Pole::simple(t(1))?])
    };
    let mut poles_a = base()?;
    poles_a.push(Pole::simple(t(-1))?);
    let mut poles_b = base()?;
    poles_b.push(Pole::simple(t(2))?);
    let a = GeomExpr::new(num.scale(&t(k)), poles_a, k).coeff_x0();
    let b = GeomExpr::new(num.scale(&t(e)), poles_b, k).coeff_x0();
    let j = jacobian(g);
    (&j * &j * (a - b)).exact_div(&one_minus_t(1))
}

/// Hodge polynomial of the rank (2,1) moduli at a non-critical parameter.
///
/// With `d0 = floor((sigma + d1 + d2)/3) + 1` and `k = d1 - d2 - d0`, the
/// second exponent is `-d1 + g - 1 + 2 d0`.
pub fn hodge_21(t: &TripleType, sigma: &SigmaValue) -> Result<HodgeResult> {
    t.require_rank(2, 1)?;
    t.require_genus()?;
    check_sigma(t, sigma, &critical_values_21(t)?)?;
    let d0 = sigma.affine(Rational64::from_integer(t.d1 + t.d2), 3).floor() + 1;
    let k = t.d1 - t.d2 - d0;
    let g = t.g as i64;
    let poly = low_rank_extraction(t.g, k, -t.d1 + g - 1 + 2 * d0)?;
    Ok(HodgeResult::smooth_projective(poly, 3 * g - 2 + t.d1 - 2 * t.d2))
}

/// Hodge polynomial of the rank (1,2) moduli at a non-critical parameter,
/// with `d0 = floor((sigma - d1 - d2)/3) + 1` and second exponent
/// `d2 + g - 1 + 2 d0`.
pub fn hodge_12(t: &TripleType, sigma: &SigmaValue) -> Result<HodgeResult> {
    t.require_rank(1, 2)?;
    t.require_genus()?;
    check_sigma(t, sigma, &critical_values_12(t)?)?;
    let d0 = sigma.affine(Rational64::from_integer(-t.d1 - t.d2), 3).floor() + 1;
    let k = t.d1 - t.d2 - d0;
    let g = t.g as i64;
    let poly = low_rank_extraction(t.g, k, t.d2 + g - 1 + 2 * d0)?;
    Ok(HodgeResult::smooth_projective(poly, 3 * g - 2 + 2 * t.d1 - t.d2))
}

/// `chi(T'', T')` for triples of types `t2 = T''` and `t1 = T'`:
///
/// `(1-g)(n''1 n'1 + n''2 n'2 - n''2 n'1) + n''1 d'1 - n'1 d''1 + n''2 d'2
///  - n'2 d''2 - n''2 d'1 + n'1 d''2`.
pub fn chi_triples(t2: &TripleType, t1: &TripleType) -> i64 {
    let g = t1.g as i64;
    (1 - g) * (t2.n1 * t1.n1 + t2.n2 * t1.n2 - t2.n2 * t1.n1)
        + t2.n1 * t1.d1
        - t1.n1 * t2.d1
        + t2.n2 * t1.d2
        - t1.n2 * t2.d2
        - t2.n2 * t1.d1
        + t1.n1 * t2.d2
}

/// Midpoints of the open chambers between consecutive critical values of a
/// rank (2,1) or (1,2) type, as exact parameters.
pub fn chamber_samples(t: &TripleType) -> Result<Vec<(SigmaValue, SigmaValue)>> {
    let (lo, hi) = sigma_interval(t)?;
    let Bound::Finite(hi) = hi else {
        return Err(Error::Domain("chamber sampling needs a bounded interval".into()));
    };
    let crit = match (t.n1, t.n2) {
        (2, 1) => critical_values_21(t)?,
        (1, 2) => critical_values_12(t)?,
        _ => return Err(Error::Domain(format!("unsupported rank ({},{})", t.n1, t.n2))),
    };
    let mut cuts = vec![lo];
    cuts.extend(crit.into_iter().filter(|c| *c > lo && *c < hi));
    cuts.push(hi);
    cuts.dedup();
    Ok(cuts
        .windows(2)
        .map(|w| {
            let width = w[1] - w[0];
            (
                SigmaValue::exact(w[0] + width / 3),
                SigmaValue::exact(w[0] + width * Rational64::new(2, 3)),
            )
        })
        .collect())
}
