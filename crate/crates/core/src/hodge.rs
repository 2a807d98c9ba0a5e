use serde::Serialize;

use crate::polyring::BiLaurent;

/// A Hodge polynomial together with the geometric facts claimed about the
/// space it describes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HodgeResult {
    pub poly: BiLaurent,
    /// Complex dimension.
    pub dim: i64,
    pub smooth: bool,
    pub projective: bool,
}

impl HodgeResult {
    pub fn smooth_projective(poly: BiLaurent, dim: i64) -> Self {
        HodgeResult { poly, dim, smooth: true, projective: true }
    }

    pub fn is_smooth_projective(&self) -> bool {
        self.smooth && self.projective
    }

    /// `e(u,v) - e(v,u)`.
    pub fn symmetry_residual(&self) -> BiLaurent {
        &self.poly - &self.poly.swap_uv()
    }

    /// `e - (uv)^dim e(1/u, 1/v)`; zero for a smooth projective space.
    pub fn duality_residual(&self) -> BiLaurent {
        &self.poly - &self.poly.reciprocal_dual(self.dim)
    }

    /// The smooth projective battery: symmetry, nonnegativity, `h^{0,0} = 1`
    /// and Poincare duality. Returns the name of the first failing property
    /// and a nonzero residual.
    pub fn projective_failures(&self) -> Vec<(&'static str, BiLaurent)> {
        let mut out = Vec::new();
        let sym = self.symmetry_residual();
        if !sym.is_zero() {
            out.push(("symmetry", sym));
        }
        let neg = self.poly.negative_part();
        if !neg.is_zero() {
            out.push(("positivity", neg));
        }
        let c0 = self.poly.constant_term();
        if c0 != 1.into() {
            out.push(("constant-term", &BiLaurent::constant(c0) - &BiLaurent::one()));
        }
        let dual = self.duality_residual();
        if !dual.is_zero() {
            out.push(("duality", dual));
        }
        out
    }
}

/// `1 - (uv)^n`.
pub(crate) fn one_minus_t(n: i64) -> BiLaurent {
    &BiLaurent::one() - &BiLaurent::uv_pow(n)
}

/// `(uv)^n`.
pub(crate) fn t(n: i64) -> BiLaurent {
    BiLaurent::uv_pow(n)
}
