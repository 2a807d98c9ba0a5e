//! Moduli of rank 2 vector bundles on a genus `g` curve.

use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::hodge::{one_minus_t, t, HodgeResult};
use crate::polyring::{BiLaurent, Substitution};
use crate::triples_low_rank::{hodge_21, SigmaValue, TripleType};
use crate::varieties::{e_n, grassmannian, jacobian, projective_space, sym2_quotient};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BundleVariant {
    OddStable,
    EvenStable,
    EvenPolystable,
}

impl fmt::Display for BundleVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BundleVariant::OddStable => "odd-stable",
            BundleVariant::EvenStable => "even-stable",
            BundleVariant::EvenPolystable => "even-polystable",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BundleModuliQuery {
    pub g: u32,
    pub d: i64,
    pub variant: BundleVariant,
}

impl BundleModuliQuery {
    /// Checks that the degree parity matches the variant.
    pub fn new(g: u32, d: i64, variant: BundleVariant) -> Result<Self> {
        let odd = d.rem_euclid(2) == 1;
        if odd != (variant == BundleVariant::OddStable) {
            return Err(Error::Domain(format!(
                "{variant} moduli need {} degree, got d = {d}",
                if odd { "even" } else { "odd" }
            )));
        }
        Ok(BundleModuliQuery { g, d, variant })
    }

    pub fn compute(&self) -> Result<HodgeResult> {
        match self.variant {
            BundleVariant::OddStable => m2_odd(self.g),
            BundleVariant::EvenStable => m2_even_stable(self.g),
            BundleVariant::EvenPolystable => m2_even_polystable(self.g),
        }
    }
}

fn require_genus(g: u32) -> Result<()> {
    if g < 2 {
        return Err(Error::Domain(format!("genus must be at least 2, got {g}")));
    }
    Ok(())
}

/// `(1 + u^2 v)^g (1 + u v^2)^g`.
pub(crate) fn p_poly(g: u32) -> BiLaurent {
    let one = BiLaurent::one();
    (&one + &BiLaurent::monomial(1, 2, 1)).powu(g) * (&one + &BiLaurent::monomial(1, 1, 2)).powu(g)
}

/// `(1 - u^2)^g (1 - v^2)^g`, the Jacobian under `u -> -u^2, v -> -v^2`.
fn q_poly(g: u32) -> BiLaurent {
    jacobian(g).specialize(Substitution::NegativeSquares)
}

/// Odd degree: `(J P - (uv)^g J^2) / ((1 - uv)(1 - (uv)^2))`.
pub fn m2_odd(g: u32) -> Result<HodgeResult> {
    require_genus(g)?;
    let j = jacobian(g);
    let num = &j * &p_poly(g) - t(g as i64) * &j * &j;
    let poly = num.exact_div(&(one_minus_t(1) * one_minus_t(2)))?;
    Ok(HodgeResult::smooth_projective(poly, 4 * g as i64 - 3))
}

/// Even degree, stable locus:
/// `[2JP - J^2(1 + 2(uv)^{g+1} - (uv)^2) - Q(1-uv)^2] / [2(1-uv)(1-(uv)^2)]`.
pub fn m2_even_stable(g: u32) -> Result<HodgeResult> {
    require_genus(g)?;
    let j = jacobian(g);
    let g64 = g as i64;
    let two = BiLaurent::constant(2);
    let bracket = &BiLaurent::one() + &(&two * &t(g64 + 1)) - t(2);
    let num = &two * &j * p_poly(g) - &j * &j * bracket - q_poly(g) * one_minus_t(1).powu(2);
    let poly = num
        .exact_div(&(one_minus_t(1) * one_minus_t(2)))?
        .div_integer(&BigInt::from(2))?;
    Ok(HodgeResult { poly, dim: 4 * g64 - 3, smooth: true, projective: false })
}

/// Even degree, polystable: the stable locus plus `Sym^2 Jac`.
pub fn m2_even_polystable(g: u32) -> Result<HodgeResult> {
    let stable = m2_even_stable(g)?;
    let poly = stable.poly + sym2_quotient(&jacobian(g))?;
    // smooth only in genus 2
    Ok(HodgeResult { poly, dim: 4 * g as i64 - 3, smooth: g == 2, projective: true })
}

/// The four strata of the small-parameter rank (2,1) moduli that do not
/// involve the unknown `e(M^s(2,d))`, and the factor multiplying it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvenStrata {
    /// `X0 = e(M^s(2,d)) * x0_factor`.
    pub x0_factor: BiLaurent,
    pub x1: BiLaurent,
    pub x2: BiLaurent,
    pub x3: BiLaurent,
    pub x4: BiLaurent,
}

pub fn even_strata(g: u32) -> Result<EvenStrata> {
    require_genus(g)?;
    let g64 = g as i64;
    let j = jacobian(g);
    let j2 = &j * &j;
    let e = projective_space;
    let (eg, eg1, e2g) = (e(g64)?, e_n(g64 - 1)?, e(2 * g64)?);

    let x1 = &j2 * &(&j - &BiLaurent::one()) * &eg1 * (&e2g - &eg);
    let x2 = &j2 * &eg * &eg * (&eg - &eg1);
    let x3 = &j * &sym2_quotient(&(&j * &eg))? - &j2 * &sym2_quotient(&eg)?;
    let x4 = &j2 * &grassmannian(2, g64)?;
    Ok(EvenStrata { x0_factor: &j * &e2g, x1, x2, x3, x4 })
}

/// Recovers `e(M^s(2,d))`, `d` even, from the stratification of the
/// small-parameter rank (2,1) moduli of type `(2,1,0,1-2g)`: the Hodge
/// polynomial of the whole space minus strata `X1..X4`, divided by the
/// fibre factor of `X0`. Cross-checked against [`m2_even_stable`].
pub fn m2_even_strata_oracle(g: u32) -> Result<BiLaurent> {
    require_genus(g)?;
    let g64 = g as i64;
    let triple = TripleType::rank21(g, 0, 1 - 2 * g64);
    let sigma = SigmaValue::plus(triple.slope_gap()?);
    let whole = hodge_21(&triple, &sigma)?.poly;
    let s = even_strata(g)?;
    let rest = whole - s.x1 - s.x2 - s.x3 - s.x4;
    let value = rest.exact_div(&s.x0_factor)?;
    let closed = m2_even_stable(g)?.poly;
    let residual = &value - &closed;
    if !residual.is_zero() {
        return Err(Error::Consistency { check: "even-degree strata".into(), residual });
    }
    Ok(value)
}

/// `(1+u)^2 (1+v)^2 (1 + uv + (uv)^2 + (uv)^3)`, the genus 2 polystable value.
pub fn kirwan_genus2() -> BiLaurent {
    jacobian(2) * (0..4).map(t).sum::<BiLaurent>()
}
