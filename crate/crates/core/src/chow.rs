//! Intersection numbers on the canonical resolution `X̃ = P(E)`.
//!
//! The form is fixed by `H̃^r = f`, `H̃^{r-1}·R̃ = 1` and `H̃^{r-j}·R̃^j = 0`
//! for `j ≥ 2`. Products are expanded multilinearly keeping only the
//! `R̃^0` and `R̃^1` parts, since everything else vanishes.

use crate::error::{ensure, Error, Result};
use crate::scroll::{ResolvedClass, ScrollType};

fn overflow() -> Error {
    Error::pre("no_arithmetic_overflow", "intersection number does not fit in 64 bits")
}

/// Intersection number of exactly `r` resolved classes.
pub fn intersect(scroll: &ScrollType, classes: &[ResolvedClass]) -> Result<i64> {
    ensure(classes.len() as i64 == scroll.dim(), "intersect_arity", || {
        format!(
            "a product on a scroll of dimension {} needs {} factors, got {}",
            scroll.dim(),
            scroll.dim(),
            classes.len()
        )
    })?;
    // (coefficient of H̃^k, coefficient of H̃^{k-1}·R̃) after k factors.
    let mut pure: i128 = 1;
    let mut linear: i128 = 0;
    for c in classes {
        let (h, rr) = (c.h as i128, c.rr as i128);
        linear = linear
            .checked_mul(h)
            .and_then(|a| pure.checked_mul(rr).and_then(|b| a.checked_add(b)))
            .ok_or_else(overflow)?;
        pure = pure.checked_mul(h).ok_or_else(overflow)?;
    }
    let total = pure
        .checked_mul(scroll.degree() as i128)
        .and_then(|p| p.checked_add(linear))
        .ok_or_else(overflow)?;
    i64::try_from(total).map_err(|_| overflow())
}

/// Degree, ruling degree and arithmetic genus of a complete intersection
/// of hypersurfaces of degrees `a` and `b` on a scroll 3-fold.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CiCurveData {
    pub a: i64,
    pub b: i64,
    pub degree: i64,
    pub ruling_degree: i64,
    pub genus: i64,
}

/// Largest hypersurface degree accepted by [`ci_invariants`].
pub const MAX_CI_DEGREE: i64 = 1 << 16;

pub fn ci_invariants(scroll: &ScrollType, a: i64, b: i64) -> Result<CiCurveData> {
    ensure(scroll.dim() == 3, "scroll_is_threefold", || {
        format!("complete-intersection curves need a 3-fold scroll, got dimension {}", scroll.dim())
    })?;
    ensure(a >= 1 && b >= 1, "ci_degrees_positive", || {
        format!("hypersurface degrees must be positive, got ({a}, {b})")
    })?;
    ensure(a <= MAX_CI_DEGREE && b <= MAX_CI_DEGREE, "ci_degree_bound", || {
        format!("hypersurface degrees must be at most {MAX_CI_DEGREE}")
    })?;
    let ah = ResolvedClass::H.scaled(a);
    let bh = ResolvedClass::H.scaled(b);
    let degree = intersect(scroll, &[ah, bh, ResolvedClass::H])?;
    let ruling_degree = intersect(scroll, &[ah, bh, ResolvedClass::R])?;
    // adjunction: ω_Y = O_Y(a+b-3, n-4)
    let twice_g_minus_2 = (a + b - 3) * degree + (scroll.embedding_dim() - 4) * ruling_degree;
    if twice_g_minus_2.rem_euclid(2) != 0 {
        return Err(Error::Consistency(format!(
            "adjunction gives odd 2g-2 = {twice_g_minus_2} for ({a}, {b}) on {scroll}"
        )));
    }
    Ok(CiCurveData {
        a,
        b,
        degree,
        ruling_degree,
        genus: twice_g_minus_2 / 2 + 1,
    })
}
