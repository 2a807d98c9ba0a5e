//! Hodge polynomials of the basic building blocks: projective spaces,
//! Jacobians, Grassmannians and symmetric squares.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::hodge::one_minus_t;
use crate::polyring::{BiLaurent, Substitution};

/// `e_n = e(P^{n-1}) = (1 - (uv)^n) / (1 - uv)`.
pub fn projective_space(n: i64) -> Result<BiLaurent> {
    if n < 1 {
        return Err(Error::Domain(format!("projective space e_n needs n >= 1, got {n}")));
    }
    one_minus_t(n).exact_div(&one_minus_t(1))
}

/// `(1 - (uv)^n) / (1 - uv)` for any `n >= 0`; `e_0 = 0`.
pub(crate) fn e_n(n: i64) -> Result<BiLaurent> {
    if n == 0 {
        return Ok(BiLaurent::zero());
    }
    projective_space(n)
}

/// `e(Jac X) = (1+u)^g (1+v)^g`.
pub fn jacobian(g: u32) -> BiLaurent {
    let one = BiLaurent::one();
    (&one + &BiLaurent::u()).powu(g) * (&one + &BiLaurent::v()).powu(g)
}

/// `Gr(k, N)`: `prod_{i=1}^{k} (1 - (uv)^{N-k+i}) / (1 - (uv)^i)`.
pub fn grassmannian(k: i64, n: i64) -> Result<BiLaurent> {
    if k < 1 || k > n {
        return Err(Error::Domain(format!("Grassmannian Gr({k},{n}) needs 1 <= k <= N")));
    }
    let num: BiLaurent = (1..=k).map(|i| one_minus_t(n - k + i)).product();
    let den: BiLaurent = (1..=k).map(one_minus_t).product();
    num.exact_div(&den)
}

/// `e(Z x Z / Z_2) = (m(u,v)^2 + m(-u^2,-v^2)) / 2`.
pub fn sym2_quotient(m: &BiLaurent) -> Result<BiLaurent> {
    let sum = m * m + m.specialize(Substitution::NegativeSquares);
    sum.div_integer(&BigInt::from(2))
}
