//! Rational normal scrolls and their Weil divisor classes.
//!
//! A scroll is given by the splitting type `(a_1, ..., a_r)` of a rank-`r`
//! bundle on the projective line. Its degree is `f = Σ a_i`, it spans
//! projective space of dimension `f + r - 1`, and its vertex is the linear
//! space of dimension `l - 1` where `l` is the number of zero summands.
//!
//! Ambient classes `h·H + rr·R` live in `Cl(X)`, which is free of rank two
//! unless the vertex has codimension two, in which case `H ~ f·R`.

use std::fmt;

use crate::error::{ensure, Result};

/// Upper bound on any single splitting degree; keeps all derived arithmetic in `i64`.
pub const MAX_SPLITTING_DEGREE: i64 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ScrollType {
    degrees: Vec<i64>,
}

/// Structure of the Weil divisor class group of a scroll.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassGroup {
    /// `Cl(X) = Z[H] ⊕ Z[R]`.
    FreeRank2,
    /// Vertex of codimension two: `H ~ f·R` and `Cl(X) = Z[R]`.
    CyclicHisFR,
}

impl fmt::Display for ClassGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassGroup::FreeRank2 => f.write_str("Z[H]+Z[R]"),
            ClassGroup::CyclicHisFR => f.write_str("Z[R] (H~fR)"),
        }
    }
}

/// Weil class `h·H + rr·R` on the scroll itself. Compare with [`ScrollType::classes_equal`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct AmbientClass {
    pub h: i64,
    pub rr: i64,
}

/// Picard class `h·H̃ + rr·R̃` on the canonical resolution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ResolvedClass {
    pub h: i64,
    pub rr: i64,
}

impl AmbientClass {
    pub const fn new(h: i64, rr: i64) -> Self {
        AmbientClass { h, rr }
    }
}

impl ResolvedClass {
    pub const H: ResolvedClass = ResolvedClass { h: 1, rr: 0 };
    pub const R: ResolvedClass = ResolvedClass { h: 0, rr: 1 };

    pub const fn new(h: i64, rr: i64) -> Self {
        ResolvedClass { h, rr }
    }

    pub fn scaled(self, k: i64) -> Self {
        ResolvedClass::new(self.h * k, self.rr * k)
    }
}

impl std::ops::Add for ResolvedClass {
    type Output = ResolvedClass;
    fn add(self, o: ResolvedClass) -> ResolvedClass {
        ResolvedClass::new(self.h + o.h, self.rr + o.rr)
    }
}

fn fmt_class(f: &mut fmt::Formatter<'_>, h: i64, rr: i64, hs: &str, rs: &str) -> fmt::Result {
    match (h, rr) {
        (0, 0) => f.write_str("0"),
        (h, 0) => write!(f, "{h}{hs}"),
        (0, r) => write!(f, "{r}{rs}"),
        (h, r) if r < 0 => write!(f, "{h}{hs}-{}{rs}", -r),
        (h, r) => write!(f, "{h}{hs}+{r}{rs}"),
    }
}

impl fmt::Display for AmbientClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_class(f, self.h, self.rr, "H", "R")
    }
}

impl fmt::Display for ResolvedClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_class(f, self.h, self.rr, "H~", "R~")
    }
}

impl ScrollType {
    /// Builds a scroll from its splitting type. The list is sorted here.
    pub fn new(degrees: &[i64]) -> Result<Self> {
        ensure(degrees.len() >= 2, "scroll_dimension_at_least_2", || {
            format!("need at least two splitting degrees, got {}", degrees.len())
        })?;
        if let Some(bad) = degrees.iter().find(|&&a| a < 0) {
            return Err(crate::Error::pre(
                "splitting_degrees_nonnegative",
                format!("negative splitting degree {bad}"),
            ));
        }
        ensure(degrees.iter().any(|&a| a > 0), "splitting_degrees_not_all_zero", || {
            "all splitting degrees are zero".to_string()
        })?;
        ensure(
            degrees.iter().all(|&a| a <= MAX_SPLITTING_DEGREE),
            "splitting_degree_bound",
            || format!("splitting degrees must be at most {MAX_SPLITTING_DEGREE}"),
        )?;
        ensure(degrees.len() <= 64, "scroll_dimension_bound", || {
            "at most 64 splitting degrees are supported".to_string()
        })?;
        let mut degrees = degrees.to_vec();
        degrees.sort_unstable();
        Ok(ScrollType { degrees })
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    /// Dimension `r`.
    pub fn dim(&self) -> i64 {
        self.degrees.len() as i64
    }

    /// Degree `f = Σ a_i`.
    pub fn degree(&self) -> i64 {
        self.degrees.iter().sum()
    }

    /// Dimension of the ambient projective space, `f + r - 1`.
    pub fn embedding_dim(&self) -> i64 {
        self.degree() + self.dim() - 1
    }

    pub fn zero_count(&self) -> i64 {
        self.degrees.iter().take_while(|&&a| a == 0).count() as i64
    }

    /// `-1` for a smooth scroll.
    pub fn vertex_dim(&self) -> i64 {
        self.zero_count() - 1
    }

    pub fn is_smooth(&self) -> bool {
        self.zero_count() == 0
    }

    /// Codimension of the vertex in the scroll; `None` when smooth.
    pub fn vertex_codim(&self) -> Option<i64> {
        (!self.is_smooth()).then(|| self.dim() - self.vertex_dim())
    }

    pub fn class_group(&self) -> ClassGroup {
        if self.vertex_codim() == Some(2) {
            ClassGroup::CyclicHisFR
        } else {
            ClassGroup::FreeRank2
        }
    }

    /// Canonical representative: identity on a free class group, `(0, h·f + rr)` otherwise.
    pub fn normalize_class(&self, c: AmbientClass) -> AmbientClass {
        match self.class_group() {
            ClassGroup::FreeRank2 => c,
            ClassGroup::CyclicHisFR => AmbientClass::new(0, c.h * self.degree() + c.rr),
        }
    }

    pub fn classes_equal(&self, a: AmbientClass, b: AmbientClass) -> bool {
        self.normalize_class(a) == self.normalize_class(b)
    }

    /// `K_X ~ -r·H + (f-2)·R`, not normalized.
    pub fn canonical_class(&self) -> AmbientClass {
        AmbientClass::new(-self.dim(), self.degree() - 2)
    }

    /// Whether `O_X(a, b)` is reflexive. Only meaningful on singular scrolls.
    pub fn is_reflexive(&self, _a: i64, b: i64) -> Result<bool> {
        match self.vertex_codim() {
            None => Err(crate::Error::pre(
                "scroll_singular",
                "the reflexivity criterion applies to singular scrolls only",
            )),
            Some(2) => Ok(b < self.degree()),
            Some(_) => Ok(true),
        }
    }

    /// Dimension, degree and smoothness of a general hyperplane section.
    pub fn hyperplane_section(&self) -> Result<HyperplaneSection> {
        ensure(self.dim() >= 3, "scroll_dimension_at_least_3", || {
            format!("hyperplane section of a surface scroll is a curve (r = {})", self.dim())
        })?;
        Ok(HyperplaneSection {
            dim: self.dim() - 1,
            degree: self.degree(),
            smooth: self.vertex_dim() <= 0,
        })
    }
}

impl fmt::Display for ScrollType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("S(")?;
        for (i, a) in self.degrees.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str(")")
    }
}

impl std::str::FromStr for ScrollType {
    type Err = crate::Error;

    /// Parses a comma separated splitting type such as `0,1,2`.
    fn from_str(s: &str) -> Result<Self> {
        let degrees = s
            .split(',')
            .map(|t| {
                t.trim().parse::<i64>().map_err(|e| {
                    crate::Error::pre("scroll_degree_list", format!("bad splitting degree {t:?}: {e}"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        ScrollType::new(&degrees)
    }
}

/// The splitting type of the section is not part of this descriptor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HyperplaneSection {
    pub dim: i64,
    pub degree: i64,
    pub smooth: bool,
}
