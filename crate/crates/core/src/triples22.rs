//! Triples of rank (2,2): walls, small and large parameter moduli, and the
//! wall-crossing contributions between them.
//!
//! Throughout, `J = (1+u)^g (1+v)^g`, `P = (1+u^2 v)^g (1+u v^2)^g`,
//! `t = uv` and `N = d1 - d2 - 2g + 2`.

use std::fmt;

use num_rational::Rational64;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hodge::{one_minus_t, t, HodgeResult};
use crate::polyring::BiLaurent;
use crate::rank2_bundles::{m2_even_stable, m2_odd, p_poly};
use crate::triples_low_rank::{hodge_12, hodge_21, SigmaValue, TripleType};
use crate::varieties::{e_n, grassmannian, jacobian, sym2_quotient};
use crate::xseries::{uv_binomial_numerator, GeomExpr, Pole, XPoly};

/// Which destabilizing line subbundle a wall comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum WallKind {
    /// A line subbundle `L` of `E1` of degree `d_L`, `sigma_c = 2 d_L - mu1 - mu2`.
    DL { d_l: i64 },
    /// A line subbundle `F` of `E2` of degree `d_F`, `sigma_c = mu1 + mu2 - 2 d_F`.
    DF { d_f: i64 },
    /// Both at once; only happens for `d1 + d2` even, where no flip
    /// formula is available.
    Both { d_l: i64, d_f: i64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FlipWall {
    /// `sigma_c = mu1 - mu2 + n`.
    pub n: i64,
    #[serde(serialize_with = "ser_rational")]
    pub sigma_c: Rational64,
    pub kind: WallKind,
}

impl FlipWall {
    pub fn flips_supported(&self) -> bool {
        !matches!(self.kind, WallKind::Both { .. })
    }
}

impl fmt::Display for FlipWall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} sigma_c={} ", self.n, self.sigma_c)?;
        match self.kind {
            WallKind::DL { d_l } => write!(f, "dL-wall d_L={d_l}"),
            WallKind::DF { d_f } => write!(f, "dF-wall d_F={d_f}"),
            WallKind::Both { d_l, d_f } => {
                write!(f, "dL+dF wall d_L={d_l} d_F={d_f} (flips not implemented)")
            }
        }
    }
}

fn ser_rational<S: serde::Serializer>(r: &Rational64, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

fn require_rank22(t: &TripleType) -> Result<()> {
    if (t.n1, t.n2) != (2, 2) {
        return Err(Error::Domain(format!(
            "expected a triple of rank (2,2), got ({},{})",
            t.n1, t.n2
        )));
    }
    t.require_genus()
}

fn require_nonempty(t: &TripleType) -> Result<()> {
    if t.d1 < t.d2 {
        return Err(Error::EmptyModuli(format!("d1 < d2 for {t}")));
    }
    Ok(())
}

fn require_odd_sum(t: &TripleType) -> Result<()> {
    if (t.d1 + t.d2).rem_euclid(2) == 0 {
        return Err(Error::EvenDegreeSum(t.d1 + t.d2));
    }
    Ok(())
}

/// `mu1 - mu2 > 2g - 2`, i.e. `d1 - d2 > 4g - 4`.
fn require_small_regime(t: &TripleType) -> Result<()> {
    if t.d1 - t.d2 <= 4 * (t.g as i64) - 4 {
        return Err(Error::Precondition(format!(
            "need mu1 - mu2 > 2g - 2 (d1 - d2 > {}), got d1 - d2 = {}",
            4 * t.g as i64 - 4,
            t.d1 - t.d2
        )));
    }
    Ok(())
}

/// `mu1 - mu2 > g - 1`, i.e. `d1 - d2 > 2g - 2`.
fn require_flip_regime(t: &TripleType) -> Result<()> {
    if t.d1 - t.d2 <= 2 * (t.g as i64) - 2 {
        return Err(Error::Precondition(format!(
            "need mu1 - mu2 > g - 1 (d1 - d2 > {}), got d1 - d2 = {}",
            2 * t.g as i64 - 2,
            t.d1 - t.d2
        )));
    }
    Ok(())
}

/// `floor(mu1 - mu2)`, the number of wall indices.
fn wall_count(t: &TripleType) -> i64 {
    (t.d1 - t.d2).div_euclid(2)
}

fn gap(t: &TripleType) -> Rational64 {
    Rational64::new(t.d1 - t.d2, 2)
}

/// `N = d1 - d2 - 2g + 2`.
pub fn big_n(t: &TripleType) -> i64 {
    t.d1 - t.d2 - 2 * t.g as i64 + 2
}

/// Walls `sigma_c = mu1 - mu2 + n`, `1 <= n <= floor(mu1 - mu2)`.
///
/// A `d_L` wall needs `mu1 <= d_L <= (3 mu1 - mu2)/2`, which for
/// `d_L = (d1 + n)/2` means `d1 + n` even; a `d_F` wall needs
/// `d_F = (d2 - n)/2` integral. For `d1 + d2` odd each index carries exactly
/// one kind; for `d1 + d2` even only indices with `n = d1 (mod 2)` are
/// walls, and they carry both kinds.
pub fn critical_values_22(t: &TripleType) -> Result<Vec<FlipWall>> {
    require_rank22(t)?;
    require_nonempty(t)?;
    let mut walls = Vec::new();
    for n in 1..=wall_count(t) {
        let dl = (t.d1 + n).rem_euclid(2) == 0;
        let df = (t.d2 - n).rem_euclid(2) == 0;
        let kind = match (dl, df) {
            (true, true) => WallKind::Both { d_l: (t.d1 + n) / 2, d_f: (t.d2 - n).div_euclid(2) },
            (true, false) => WallKind::DL { d_l: (t.d1 + n) / 2 },
            (false, true) => WallKind::DF { d_f: (t.d2 - n).div_euclid(2) },
            (false, false) => continue,
        };
        walls.push(FlipWall { n, sigma_c: gap(t) + n, kind });
    }
    Ok(walls)
}

fn wall_at(t: &TripleType, n: i64) -> Result<FlipWall> {
    critical_values_22(t)?
        .into_iter()
        .find(|w| w.n == n)
        .ok_or_else(|| {
            Error::Domain(format!(
                "wall index n = {n} outside 1..={} for {t}",
                wall_count(t)
            ))
        })
}

fn dimension22(t: &TripleType) -> i64 {
    4 * t.g as i64 + 2 * t.d1 - 2 * t.d2 - 3
}

/// `J^2 (1-t^N)(t^g J - P)(J(t^{g+1} + t^{N+g-1}) - P(1 + t^N))
///  / ((1-t)^3 (1-t^2)^2)`.
fn small_odd_even(g: u32, n: i64) -> Result<BiLaurent> {
    let g64 = g as i64;
    let j = jacobian(g);
    let p = p_poly(g);
    let num = &j * &j
        * one_minus_t(n)
        * (t(g64) * &j - &p)
        * (&j * &(t(g64 + 1) + t(n + g64 - 1)) - &p * &(BiLaurent::one() + t(n)));
    num.exact_div(&(one_minus_t(1).powu(3) * one_minus_t(2).powu(2)))
}

/// Moduli at `sigma_m^+`. Both degrees odd: `e(M(2,d1)) e(M(2,d2)) e_{2N}`;
/// mixed parity: the closed formula shared by both orders; both even:
/// unsupported.
pub fn small_sigma_22(t: &TripleType) -> Result<HodgeResult> {
    require_rank22(t)?;
    require_nonempty(t)?;
    if t.d1.rem_euclid(2) == 0 && t.d2.rem_euclid(2) == 0 {
        return Err(Error::UnsupportedCase(format!(
            "d1 = {} and d2 = {} are both even; no small-parameter formula",
            t.d1, t.d2
        )));
    }
    require_small_regime(t)?;
    let n = big_n(t);
    let poly = match (t.d1.rem_euclid(2), t.d2.rem_euclid(2)) {
        (1, 1) => {
            let mo = m2_odd(t.g)?.poly;
            &mo * &mo * e_n(2 * n)?
        }
        _ => small_odd_even(t.g, n)?,
    };
    Ok(HodgeResult::smooth_projective(poly, dimension22(t)))
}

/// The strata of the small-parameter moduli for `d1` odd, `d2` even.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmallStrata {
    pub x0: BiLaurent,
    pub x1: BiLaurent,
    pub x2: BiLaurent,
    pub x3: BiLaurent,
    pub x4: BiLaurent,
}

impl SmallStrata {
    pub fn total(&self) -> BiLaurent {
        &self.x0 + &self.x1 + &self.x2 + &self.x3 + &self.x4
    }
}

pub fn small_sigma_strata(t: &TripleType) -> Result<SmallStrata> {
    require_rank22(t)?;
    require_nonempty(t)?;
    require_small_regime(t)?;
    if t.d1.rem_euclid(2) != 1 || t.d2.rem_euclid(2) != 0 {
        return Err(Error::Precondition(format!(
            "the stratification needs d1 odd and d2 even, got ({}, {})",
            t.d1, t.d2
        )));
    }
    let g64 = t.g as i64;
    let n = big_n(t);
    let mo = m2_odd(t.g)?.poly;
    let ms = m2_even_stable(t.g)?.poly;
    let j = jacobian(t.g);
    let (en, en1, e2n) = (e_n(n)?, e_n(n - 1)?, e_n(2 * n)?);
    let (eg, eg1) = (e_n(g64)?, e_n(g64 - 1)?);

    let x0 = &mo * &ms * &e2n;
    let x1 = &mo * &j * &(&j - &BiLaurent::one()) * &eg1 * (&e2n - &en);
    let x2 = &mo * &j * &eg * &(&en - &en1) * &en;
    let x3 = &mo * &(sym2_quotient(&(&j * &en))? - &j * &sym2_quotient(&en)?);
    let x4 = &mo * &j * grassmannian(2, n)?;
    Ok(SmallStrata { x0, x1, x2, x3, x4 })
}

/// Sum of the strata, checked against [`small_sigma_22`].
pub fn small_sigma_strata_oracle(t: &TripleType) -> Result<BiLaurent> {
    let total = small_sigma_strata(t)?.total();
    let residual = &total - &small_sigma_22(t)?.poly;
    if !residual.is_zero() {
        return Err(Error::Consistency { check: format!("small-parameter strata {t}"), residual });
    }
    Ok(total)
}

fn flip_preconditions(t: &TripleType) -> Result<()> {
    require_rank22(t)?;
    require_nonempty(t)?;
    require_odd_sum(t)?;
    require_flip_regime(t)
}

fn pole(rate: BiLaurent, m: u32) -> Pole {
    Pole::new(rate, m).expect("monomial rate")
}

/// `e(N_{sigma_c^+}) - e(N_{sigma_c^-})` at the wall of index `n`:
///
/// `J^3 (t^{g-1+n} - t^{1-g+d1-d2}) / (1-t)^2 * coeff_{x^0}[ (1+ux)^g (1+vx)^g
///  / ((1-x)(1-tx) x^{h-n}) (t^{h-n}/(1-t^{-1}x) - t^{g+n}/(1-t^2 x)) ]`
/// with `h = floor(mu1 - mu2) = (d1 - d2 - 1)/2`.
pub fn flip_difference_n(t: &TripleType, n: i64) -> Result<BiLaurent> {
    flip_preconditions(t)?;
    wall_at(t, n)?;
    let g64 = t.g as i64;
    let h = wall_count(t);
    let num = uv_binomial_numerator(t.g);
    let a = GeomExpr::new(
        num.scale(&crate::hodge::t(h - n)),
        vec![pole(BiLaurent::one(), 1), pole(crate::hodge::t(1), 1), pole(crate::hodge::t(-1), 1)],
        h - n,
    );
    let b = GeomExpr::new(
        num.scale(&crate::hodge::t(g64 + n)),
        vec![pole(BiLaurent::one(), 1), pole(crate::hodge::t(1), 1), pole(crate::hodge::t(2), 1)],
        h - n,
    );
    let j = jacobian(t.g);
    let prefactor = j.powu(3) * (crate::hodge::t(g64 - 1 + n) - crate::hodge::t(1 - g64 + t.d1 - t.d2));
    (prefactor * (a.coeff_x0() - b.coeff_x0())).exact_div(&one_minus_t(1).powu(2))
}

pub fn flip_difference(t: &TripleType, wall: &FlipWall) -> Result<BiLaurent> {
    flip_difference_n(t, wall.n)
}

/// The same difference assembled from the flip loci: a projective bundle
/// over `Jac x N_{sigma_c}(T'')`, with `T''` of rank (1,2) or (2,1)
/// depending on the wall kind, counted with the fibre difference
/// `e_{1-g+d1-d2} - e_{g-1+n}`.
pub fn flip_difference_by_kind(t: &TripleType, wall: &FlipWall) -> Result<BiLaurent> {
    flip_preconditions(t)?;
    let wall = wall_at(t, wall.n)?;
    let g64 = t.g as i64;
    let sigma = SigmaValue::exact(wall.sigma_c);
    let moduli = match wall.kind {
        WallKind::DL { d_l } => hodge_12(&TripleType::rank12(t.g, t.d1 - d_l, t.d2), &sigma)?,
        WallKind::DF { d_f } => hodge_21(&TripleType::rank21(t.g, t.d1, t.d2 - d_f), &sigma)?,
        WallKind::Both { .. } => return Err(Error::EvenDegreeSum(t.d1 + t.d2)),
    };
    let fibre = e_n(1 - g64 + t.d1 - t.d2)? - e_n(g64 - 1 + wall.n)?;
    Ok(fibre * jacobian(t.g) * moduli.poly)
}

/// Number of walls strictly below `sigma`, after rejecting critical and
/// out-of-range parameters.
fn walls_below(t: &TripleType, sigma: &SigmaValue) -> Result<i64> {
    let lo = SigmaValue::exact(gap(t));
    if *sigma == lo {
        return Err(Error::CriticalValue(sigma.to_string()));
    }
    if *sigma < lo {
        return Err(Error::EmptyModuli(format!(
            "sigma = {sigma} is below sigma_m = {} for {t}",
            gap(t)
        )));
    }
    let walls = critical_values_22(t)?;
    if sigma.is_exact() && walls.iter().any(|w| w.sigma_c == sigma.value) {
        return Err(Error::CriticalValue(sigma.to_string()));
    }
    Ok(walls.iter().filter(|w| SigmaValue::exact(w.sigma_c) < *sigma).count() as i64)
}

/// Closed form of the accumulated flip differences over the first `n0`
/// walls.
fn accumulated_flips_closed(t: &TripleType, n0: i64) -> Result<BiLaurent> {
    if n0 == 0 {
        return Ok(BiLaurent::zero());
    }
    let g64 = t.g as i64;
    let f = wall_count(t);
    let dd = t.d1 - t.d2;
    let num = uv_binomial_numerator(t.g);
    let n0u = n0 as usize;
    let tt = crate::hodge::t;
    // x (1 - r x^{n0})
    let window = |r: BiLaurent| {
        XPoly::monomial(BiLaurent::one(), 1).sub(&XPoly::monomial(r, n0u + 1))
    };
    let one = BiLaurent::one();
    let term = |c: BiLaurent, r: BiLaurent, poles: Vec<Pole>| {
        GeomExpr::new(num.mul(&window(r)).scale(&c), poles, f).coeff_x0()
    };
    let a = term(
        tt(g64 - 1 + (dd - 1) / 2),
        one.clone(),
        vec![pole(one.clone(), 2), pole(tt(1), 1), pole(tt(-1), 1)],
    );
    let b = term(
        tt((3 * dd - 1) / 2 - g64),
        tt(-n0),
        vec![pole(one.clone(), 1), pole(tt(1), 1), pole(tt(-1), 2)],
    );
    let c = term(
        tt(2 * g64 + 1),
        tt(2 * n0),
        vec![pole(one.clone(), 1), pole(tt(1), 1), pole(tt(2), 2)],
    );
    let d = term(
        tt(dd + 2),
        tt(n0),
        vec![pole(one.clone(), 1), pole(tt(1), 2), pole(tt(2), 1)],
    );
    (jacobian(t.g).powu(3) * (a - b - c + d)).exact_div(&one_minus_t(1).powu(2))
}

/// Sum of the flip differences over walls `1..=n0`, evaluated in parallel.
pub fn accumulated_flips(t: &TripleType, n0: i64) -> Result<BiLaurent> {
    let parts: Vec<BiLaurent> = (1..=n0)
        .into_par_iter()
        .map(|n| flip_difference_n(t, n))
        .collect::<Result<_>>()?;
    Ok(parts.into_iter().sum())
}

/// Moduli at any non-critical `sigma > sigma_m`: the small-parameter value
/// plus the flips crossed on the way, checked against the closed form of
/// the accumulated sum.
pub fn cumulative_22(t: &TripleType, sigma: &SigmaValue) -> Result<HodgeResult> {
    flip_preconditions(t)?;
    require_small_regime(t)?;
    let n0 = walls_below(t, sigma)?;
    let small = small_sigma_22(t)?.poly;
    let summed = accumulated_flips(t, n0)?;
    let closed = accumulated_flips_closed(t, n0)?;
    let residual = &summed - &closed;
    if !residual.is_zero() {
        return Err(Error::Consistency { check: format!("accumulated flips {t} at {sigma}"), residual });
    }
    Ok(HodgeResult::smooth_projective(small + summed, dimension22(t)))
}

/// The large-parameter moduli (`sigma > 2(mu1 - mu2)`), in closed form.
pub fn large_sigma_22(t: &TripleType) -> Result<HodgeResult> {
    flip_preconditions(t)?;
    require_small_regime(t)?;
    let g = t.g;
    let g64 = g as i64;
    let n = big_n(t);
    let tt = crate::hodge::t;
    if (n + 1).rem_euclid(2) != 0 {
        return Err(Error::Precondition(format!("N = {n} must be odd")));
    }
    let half = (n + 1) / 2;
    let j = jacobian(g);
    let p = p_poly(g);
    let one = BiLaurent::one();
    let two_t = tt(2 * g64 - 2 + half);
    let j_minus = (&one + &BiLaurent::u()).powu(2 * g - 1) * (&one + &BiLaurent::v()).powu(2 * g - 1);

    let term1 = &p * &p * one_minus_t(2 * n);
    let term2 = &p * &j * tt(n + g64 - 1) * one_minus_t(2) * BiLaurent::constant(n);
    let inner = one_minus_t(n + 1) - one_minus_t(1) * (&one + &tt(n)) * BiLaurent::constant(half);
    let term3 = &j * &j * (&one + &tt(1)).powu(2) * &two_t * inner;
    let term4 = j_minus * one_minus_t(2).powu(2) * &two_t * one_minus_t(n) * BiLaurent::constant(g64);
    let bracket = term1 - term2 + term3 - term4;
    let poly = (&j * &j * bracket).exact_div(&(one_minus_t(1).powu(3) * one_minus_t(2).powu(2)))?;
    Ok(HodgeResult::smooth_projective(poly, dimension22(t)))
}

/// Partial-fraction value of
/// `coeff_{x^0} (1+ux)^g (1+vx)^g x^{3-2g-m} / ((1-ax)^2 (1-bx)(1-cx))`.
pub fn residue_f(a: &BiLaurent, b: &BiLaurent, c: &BiLaurent, m: i64, g: u32) -> Result<BiLaurent> {
    let u = BiLaurent::u();
    let v = BiLaurent::v();
    let big = |z: &BiLaurent, k: u32| (z + &u).powu(k) * (z + &v).powu(k);
    let (aa, ab, ac) = (big(a, g), big(b, g), big(c, g));
    let am1 = a.pow(m - 1)?;
    let (ab_, ac_, bc_) = (a - b, a - c, b - c);
    let g_big = BiLaurent::constant(g as i64);
    let m2 = BiLaurent::constant(m - 2);
    let two_a = a * &BiLaurent::constant(2);

    // over the common denominator (a-b)^2 (a-c)^2 (b-c)
    let t1 = -(&am1 * b * &aa * &ac_ * &bc_);
    let t2 = -(&am1 * c * &aa * &ab_ * &bc_);
    let t3 = b.pow(m)? * &ab * ac_.powu(2);
    let t4 = -(c.pow(m)? * &ac * ab_.powu(2));
    let k = &g_big * a * (&two_a + &u + &v) + &m2 * (a + &u) * (a + &v);
    let t5 = &am1 * big(a, g - 1) * k * &ab_ * &ac_ * &bc_;
    let den = ab_.powu(2) * ac_.powu(2) * &bc_;
    (t1 + t2 + t3 + t4 + t5).exact_div(&den).map_err(|e| match e {
        Error::DivisionByZero => Error::InexactDivision("coinciding pole rates".into()),
        other => other,
    })
}

/// The extraction that [`residue_f`] evaluates in closed form.
pub fn residue_f_expr(a: &BiLaurent, b: &BiLaurent, c: &BiLaurent, m: i64, g: u32) -> Result<GeomExpr> {
    Ok(GeomExpr::new(
        uv_binomial_numerator(g),
        vec![Pole::new(a.clone(), 2)?, Pole::simple(b.clone())?, Pole::simple(c.clone())?],
        2 * g as i64 - 3 + m,
    ))
}

/// The four `(a, b, c)` rate triples entering the large-parameter formula.
pub fn residue_triples() -> [(BiLaurent, BiLaurent, BiLaurent); 4] {
    let one = BiLaurent::one;
    [
        (one(), t(1), t(-1)),
        (t(-1), one(), t(1)),
        (t(2), one(), t(1)),
        (t(1), one(), t(2)),
    ]
}

/// The large-parameter value rebuilt from the small one and four
/// evaluations of [`residue_f`], with `m = floor(mu1 - mu2) - (2g - 2)`.
pub fn large_sigma_via_residues(t: &TripleType) -> Result<BiLaurent> {
    flip_preconditions(t)?;
    require_small_regime(t)?;
    let g = t.g;
    let g64 = g as i64;
    let m = wall_count(t) - (2 * g64 - 2);
    let tt = crate::hodge::t;
    let [f1, f2, f3, f4] = residue_triples().map(|(a, b, c)| residue_f(&a, &b, &c, m, g));
    let combo = tt(3 * g64 - 3 + m) * f1? - tt(5 * g64 - 5 + 3 * m) * f2? - tt(2 * g64 + 1) * f3?
        + tt(4 * g64 - 1 + 2 * m) * f4?;
    let flips = (jacobian(g).powu(3) * combo).exact_div(&one_minus_t(1).powu(2))?;
    Ok(small_sigma_22(t)?.poly + flips)
}

/// `large - (small + sum of all flips)`.
pub fn telescoping_residual(t: &TripleType) -> Result<BiLaurent> {
    let large = large_sigma_22(t)?.poly;
    let small = small_sigma_22(t)?.poly;
    let flips = accumulated_flips(t, wall_count(t))?;
    Ok(large - small - flips)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Regime {
    Small,
    Large,
}

/// `t^k` in the univariate slot.
fn tu(k: i64) -> BiLaurent {
    BiLaurent::monomial(1, k, 0)
}

fn one_plus_tu(k: i64) -> BiLaurent {
    &BiLaurent::one() + &tu(k)
}

fn one_minus_tu(k: i64) -> BiLaurent {
    &BiLaurent::one() - &tu(k)
}

fn poincare_small_closed(g: u32, n: i64) -> Result<BiLaurent> {
    let g64 = g as i64;
    let a = one_plus_tu(1).powu(2 * g);
    let b = one_plus_tu(3).powu(2 * g);
    let num = one_plus_tu(1).powu(4 * g)
        * one_minus_tu(2 * n)
        * (tu(2 * g64) * &a - &b)
        * (&a * &(tu(2 * g64 + 2) + tu(2 * n + 2 * g64 - 2)) - &b * &one_plus_tu(2 * n));
    num.exact_div(&(one_minus_tu(2).powu(3) * one_minus_tu(4).powu(2)))
}

fn poincare_large_closed(g: u32, n: i64) -> Result<BiLaurent> {
    let g64 = g as i64;
    let half = (n + 1) / 2;
    let c = |k: i64| BiLaurent::constant(k);
    let t1 = one_plus_tu(3).powu(4 * g) * one_minus_tu(4 * n);
    let t2 = one_plus_tu(3).powu(2 * g) * one_plus_tu(1).powu(2 * g) * tu(2 * n + 2 * g64 - 2)
        * one_minus_tu(4)
        * c(n);
    let inner = one_minus_tu(2 * n + 2) - one_minus_tu(2) * one_plus_tu(2 * n) * c(half);
    let t3 = one_plus_tu(1).powu(4 * g) * one_plus_tu(2).powu(2) * tu(n + 4 * g64 - 3) * inner;
    let t4 = one_plus_tu(1).powu(4 * g - 2) * one_minus_tu(4).powu(2) * tu(n + 4 * g64 - 3)
        * one_minus_tu(2 * n)
        * c(g64);
    let num = one_plus_tu(1).powu(4 * g) * (t1 - t2 + t3 - t4);
    num.exact_div(&(one_minus_tu(2).powu(3) * one_minus_tu(4).powu(2)))
}

/// Poincare polynomial (in the `u` slot) of the small or large parameter
/// moduli, from its closed form.
pub fn poincare_closed(t: &TripleType, which: Regime) -> Result<BiLaurent> {
    flip_preconditions(t)?;
    require_small_regime(t)?;
    let n = big_n(t);
    match which {
        Regime::Small => poincare_small_closed(t.g, n),
        Regime::Large => poincare_large_closed(t.g, n),
    }
}

/// Closed form minus the `u = v = t` specialization of the Hodge polynomial.
pub fn poincare_residual(t: &TripleType, which: Regime) -> Result<BiLaurent> {
    let closed = poincare_closed(t, which)?;
    let hodge = match which {
        Regime::Small => small_sigma_22(t)?,
        Regime::Large => large_sigma_22(t)?,
    };
    Ok(closed - hodge.poly.diagonal())
}

/// [`poincare_closed`], checked against the specialization.
pub fn poincare(t: &TripleType, which: Regime) -> Result<BiLaurent> {
    let residual = poincare_residual(t, which)?;
    if !residual.is_zero() {
        return Err(Error::Consistency { check: format!("Poincare polynomial {t}"), residual });
    }
    poincare_closed(t, which)
}

/// Two exact sample parameters strictly inside every chamber
/// `(sigma_m, w_1), (w_1, w_2), ..., (w_last, inf)`; the last chamber is
/// sampled at `sigma_M + 1/3` and `sigma_M + 5/2`.
pub fn chamber_samples_22(t: &TripleType) -> Result<Vec<(SigmaValue, SigmaValue)>> {
    let walls = critical_values_22(t)?;
    let mut cuts = vec![gap(t)];
    cuts.extend(walls.iter().map(|w| w.sigma_c));
    let mut out: Vec<(SigmaValue, SigmaValue)> = cuts
        .windows(2)
        .map(|w| {
            let width = w[1] - w[0];
            (
                SigmaValue::exact(w[0] + width / 3),
                SigmaValue::exact(w[0] + width * Rational64::new(2, 3)),
            )
        })
        .collect();
    let last = *cuts.last().unwrap();
    out.push((
        SigmaValue::exact(last + Rational64::new(1, 3)),
        SigmaValue::exact(last + Rational64::new(5, 2)),
    ));
    Ok(out)
}
