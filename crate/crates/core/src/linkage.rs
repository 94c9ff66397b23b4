//! Genus bookkeeping for curves linked by a complete intersection of type
//! `(a, b)` on a scroll 3-fold, together with the classical plane-curve and
//! union formulas used alongside it.
//!
//! If `Y = Y_1 ∪ Y_2` is the complete intersection, then
//! `p_a(Y_2) = p_a(Y_1) - p_a(Y) + (a+b-3)·deg(Y_2) + (n-4)·deg(R ∩ Y_2) + 1`.
//! This needs `Y_1` locally Cohen-Macaulay, which is assumed, not checked.

use crate::chow::{ci_invariants, CiCurveData};
use crate::error::{ensure, Error, Result};
use crate::scroll::{AmbientClass, ScrollType};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct CurveInvariants {
    pub degree: i64,
    pub genus: i64,
    /// `deg(R ∩ C)`.
    pub ruling_degree: i64,
}

impl CurveInvariants {
    pub const fn new(degree: i64, genus: i64, ruling_degree: i64) -> Self {
        CurveInvariants {
            degree,
            genus,
            ruling_degree,
        }
    }
}

/// Which form of the linkage genus formula applies to the scroll.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LinkageVariant {
    /// Smooth 3-fold scroll.
    SmoothScroll,
    /// 3-fold scroll whose vertex is a point.
    PointVertex,
}

impl LinkageVariant {
    pub fn label(self) -> &'static str {
        match self {
            LinkageVariant::SmoothScroll => "smooth",
            LinkageVariant::PointVertex => "point-vertex",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LinkedCurve {
    pub curve: CurveInvariants,
    pub variant: LinkageVariant,
    pub complete_intersection: CiCurveData,
    /// One side of the link has degree zero.
    pub empty_curve: bool,
}

/// Solves for the genus of the curve residual to `known` in the complete
/// intersection of type `(a, b)`.
pub fn link_genus(
    scroll: &ScrollType,
    a: i64,
    b: i64,
    known: CurveInvariants,
    unknown_degree: i64,
    unknown_ruling: i64,
) -> Result<LinkedCurve> {
    ensure(scroll.dim() == 3, "scroll_is_threefold", || {
        format!("linkage needs a 3-fold scroll, got {scroll}")
    })?;
    let variant = match scroll.vertex_dim() {
        -1 => LinkageVariant::SmoothScroll,
        0 => LinkageVariant::PointVertex,
        _ => {
            return Err(Error::pre(
                "vertex_not_a_line",
                format!("{scroll} has a line as vertex; only a lower bound is available there"),
            ))
        }
    };
    let ci = ci_invariants(scroll, a, b)?;
    ensure(
        known.degree >= 0 && unknown_degree >= 0 && known.ruling_degree >= 0 && unknown_ruling >= 0,
        "degrees_nonnegative",
        || "curve degrees and ruling degrees must be nonnegative".to_string(),
    )?;
    ensure(known.degree + unknown_degree == ci.degree, "degree_conservation", || {
        format!(
            "deg(Y1) + deg(Y2) = {} + {} but the complete intersection has degree {}",
            known.degree, unknown_degree, ci.degree
        )
    })?;
    ensure(known.ruling_degree + unknown_ruling == ci.ruling_degree, "ruling_conservation", || {
        format!(
            "ruling degrees {} + {} do not add up to {}",
            known.ruling_degree, unknown_ruling, ci.ruling_degree
        )
    })?;
    let genus = known.genus - ci.genus
        + (a + b - 3) * unknown_degree
        + (scroll.embedding_dim() - 4) * unknown_ruling
        + 1;
    Ok(LinkedCurve {
        curve: CurveInvariants::new(unknown_degree, genus, unknown_ruling),
        variant,
        complete_intersection: ci,
        empty_curve: known.degree == 0 || unknown_degree == 0,
    })
}

/// `p_a(C_1 ∪ C_2) = p_a(C_1) + p_a(C_2) + t - 1` for `t` intersection points.
pub fn noether_union(p1: i64, p2: i64, t: i64) -> Result<i64> {
    ensure(t >= 0, "intersection_length_nonnegative", || format!("t = {t} < 0"))?;
    Ok(p1 + p2 + t - 1)
}

/// Arithmetic genus of a plane curve of the given degree.
pub fn clebsch(degree: i64) -> Result<i64> {
    ensure(degree >= 1, "degree_positive", || format!("plane curve degree {degree} < 1"))?;
    Ok((degree - 1) * (degree - 2) / 2)
}

/// Invariants of the scheme residual to a scroll in a complete
/// intersection of `n - 3` quadrics, cut down to a curve section.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ResidualQuadricData {
    pub n: i64,
    /// Class of `Y_B = X ∩ B`.
    pub yb_class: AmbientClass,
    /// `deg(B_H ∩ C_{n-2}) = (n-4)(n-3)`.
    pub yb_degree: i64,
    /// `p_a(A_H) = 1 + 2^{n-4}(n-5)`.
    pub pa_ah: i64,
    /// `p_a(B_H) = 2^{n-4}(n-5) - (n-2)(n-5)`.
    pub pa_bh: i64,
}

pub fn residual_quadric_invariants(n: i64) -> Result<ResidualQuadricData> {
    ensure(n >= 5, "n_at_least_5", || format!("need n >= 5, got {n}"))?;
    ensure(n <= 56, "n_bound", || format!("2^(n-4) overflows for n = {n}"))?;
    let pow = 1i64 << (n - 4);
    let data = ResidualQuadricData {
        n,
        yb_class: AmbientClass::new(n - 4, -(n - 4)),
        yb_degree: (n - 4) * (n - 3),
        pa_ah: 1 + pow * (n - 5),
        pa_bh: pow * (n - 5) - (n - 2) * (n - 5),
    };
    // the rational normal curve section has genus 0
    if noether_union(data.pa_bh, 0, data.yb_degree)? != data.pa_ah {
        return Err(Error::Consistency(format!("Noether closure fails for n = {n}")));
    }
    Ok(data)
}
