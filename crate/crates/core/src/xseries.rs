//! Coefficient extraction in an auxiliary variable `x`.
//!
//! A [`GeomExpr`] is `N(x) / prod (1 - a_i x)^{m_i} * x^{-k}` with `N` a
//! polynomial in `x` over [`BiLaurent`] and every rate `a_i` a monomial in
//! `u, v`. Its `x^0` coefficient is the `x^k` coefficient of the power series
//! `N(x) / prod (1 - a_i x)^{m_i}`.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::polyring::BiLaurent;

/// Polynomial in `x` with [`BiLaurent`] coefficients; index is the `x` degree.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct XPoly {
    coeffs: Vec<BiLaurent>,
}

impl XPoly {
    pub fn zero() -> Self {
        XPoly::default()
    }

    pub fn one() -> Self {
        XPoly::constant(BiLaurent::one())
    }

    pub fn constant(c: BiLaurent) -> Self {
        XPoly::from_coeffs(vec![c])
    }

    /// `c * x^k`.
    pub fn monomial(c: BiLaurent, k: usize) -> Self {
        let mut coeffs = vec![BiLaurent::zero(); k + 1];
        coeffs[k] = c;
        XPoly::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<BiLaurent>) -> Self {
        while coeffs.last().is_some_and(BiLaurent::is_zero) {
            coeffs.pop();
        }
        XPoly { coeffs }
    }

    /// `(1 + c x)^g` with binomial coefficients.
    pub fn binomial_pow(c: &BiLaurent, g: u32) -> Self {
        let mut coeffs = Vec::with_capacity(g as usize + 1);
        let mut binom = BigInt::from(1);
        let mut power = BiLaurent::one();
        for k in 0..=g {
            coeffs.push(power.scale(&binom));
            power = &power * c;
            binom = binom * BigInt::from(g - k) / BigInt::from(k + 1);
        }
        XPoly::from_coeffs(coeffs)
    }

    /// Degree in `x`; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> BiLaurent {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[BiLaurent] {
        &self.coeffs
    }

    pub fn add(&self, other: &XPoly) -> XPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        XPoly::from_coeffs((0..n).map(|k| &self.coeff(k) + &other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &XPoly) -> XPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        XPoly::from_coeffs((0..n).map(|k| &self.coeff(k) - &other.coeff(k)).collect())
    }

    pub fn mul(&self, other: &XPoly) -> XPoly {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return XPoly::zero();
        }
        let mut out = vec![BiLaurent::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        XPoly::from_coeffs(out)
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &BiLaurent) -> XPoly {
        XPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }
}

/// Factor `1 / (1 - rate x)^multiplicity`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pole {
    rate: BiLaurent,
    multiplicity: u32,
}

impl Pole {
    /// Rates must be single-term monomials and multiplicities positive.
    pub fn new(rate: BiLaurent, multiplicity: u32) -> Result<Self> {
        if rate.as_monomial().is_none() {
            return Err(Error::UnsupportedOperation(format!(
                "pole rate {rate} is not a single monomial"
            )));
        }
        if multiplicity == 0 {
            return Err(Error::Domain("pole multiplicity must be positive".into()));
        }
        Ok(Pole { rate, multiplicity })
    }

    pub fn simple(rate: BiLaurent) -> Result<Self> {
        Pole::new(rate, 1)
    }

    pub fn rate(&self) -> &BiLaurent {
        &self.rate
    }

    pub fn multiplicity(&self) -> u32 {
        self.multiplicity
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeomExpr {
    pub numerator: XPoly,
    pub poles: Vec<Pole>,
    /// `k` in the overall factor `x^{-k}`.
    pub x_offset: i64,
}

impl GeomExpr {
    pub fn new(numerator: XPoly, poles: Vec<Pole>, x_offset: i64) -> Self {
        GeomExpr { numerator, poles, x_offset }
    }

    /// Smallest series truncation that determines the `x^k` coefficient:
    /// `k + deg_x(numerator)`.
    pub fn truncation_bound(&self) -> usize {
        let k = self.x_offset.max(0) as usize;
        k + self.numerator.degree().unwrap_or(0)
    }

    /// Coefficient of `x^0` in the Laurent expansion around `x = 0`.
    pub fn coeff_x0(&self) -> BiLaurent {
        self.coeff_x0_truncated(self.truncation_bound())
    }

    /// As [`coeff_x0`](Self::coeff_x0) but expanding every series to degree
    /// `bound`. Any `bound >= x_offset` gives the same answer.
    pub fn coeff_x0_truncated(&self, bound: usize) -> BiLaurent {
        if self.x_offset < 0 {
            return BiLaurent::zero();
        }
        let k = self.x_offset as usize;
        if k > bound {
            return BiLaurent::zero();
        }
        // Multiplying a truncated series by 1/(1 - a x) is the running
        // recurrence s_n <- s_n + a s_{n-1}.
        let mut series: Vec<BiLaurent> = (0..=bound).map(|n| self.numerator.coeff(n)).collect();
        for pole in &self.poles {
            let (e, c) = pole.rate.as_monomial().expect("pole rates are monomials");
            let (e, c) = (e, c.clone());
            for _ in 0..pole.multiplicity {
                for n in 1..=bound {
                    let prev = series[n - 1].shift(e.u, e.v).scale(&c);
                    series[n] += &prev;
                }
            }
        }
        series.swap_remove(k)
    }
}

/// `(1 + u x)^g (1 + v x)^g`.
pub fn uv_binomial_numerator(g: u32) -> XPoly {
    XPoly::binomial_pow(&BiLaurent::u(), g).mul(&XPoly::binomial_pow(&BiLaurent::v(), g))
}

/// The extraction `coeff_{x^0} (1+ux)^g (1+vx)^g / ((1-ax)(1-bx)(1-cx) x^{2g-2})`.
pub fn three_pole_expr(a: &BiLaurent, b: &BiLaurent, c: &BiLaurent, g: u32) -> Result<GeomExpr> {
    let poles = vec![
        Pole::simple(a.clone())?,
        Pole::simple(b.clone())?,
        Pole::simple(c.clone())?,
    ];
    Ok(GeomExpr::new(uv_binomial_numerator(g), poles, 2 * g as i64 - 2))
}

/// Partial-fraction value of [`three_pole_expr`]:
///
/// `A/((a-b)(a-c)) + B/((b-a)(b-c)) + C/((c-a)(c-b))` with
/// `A = (a+u)^g (a+v)^g` and likewise `B`, `C`, assembled over the common
/// denominator `(a-b)(a-c)(b-c)`.
pub fn three_pole_closed_form(a: &BiLaurent, b: &BiLaurent, c: &BiLaurent, g: u32) -> Result<BiLaurent> {
    for r in [a, b, c] {
        if r.as_monomial().is_none() {
            return Err(Error::UnsupportedOperation(format!("{r} is not a single monomial")));
        }
    }
    let big = |z: &BiLaurent| {
        (z + &BiLaurent::u()).powu(g) * (z + &BiLaurent::v()).powu(g)
    };
    let num = big(a) * (b - c) - big(b) * (a - c) + big(c) * (a - b);
    let den = (a - b) * (a - c) * (b - c);
    num.exact_div(&den).map_err(|e| match e {
        Error::DivisionByZero => Error::InexactDivision("coinciding pole rates".into()),
        other => other,
    })
}
