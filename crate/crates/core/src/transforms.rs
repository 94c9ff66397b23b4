//! Proper and integral total transforms of Weil divisors on scrolls whose
//! vertex has codimension two, and the vertex multiplicities they produce.

use crate::chow::intersect;
use crate::error::{ensure, Result};
use crate::scroll::{ClassGroup, ResolvedClass, ScrollType};

fn require_codim2_vertex(scroll: &ScrollType) -> Result<()> {
    ensure(scroll.class_group() == ClassGroup::CyclicHisFR, "vertex_codim_2", || {
        format!("{scroll} does not have a vertex of codimension 2")
    })
}

fn require_line_vertex_threefold(scroll: &ScrollType) -> Result<()> {
    ensure(scroll.dim() == 3 && scroll.vertex_dim() == 1, "threefold_with_line_vertex", || {
        format!("{scroll} is not a 3-fold whose vertex is a line")
    })
}

/// Integral total transform of an effective divisor `D ~ d·R`.
///
/// With `d - 1 = k·f + h`, `0 ≤ h < f`, this is `(k+1)·H̃ - (f-h-1)·R̃`.
pub fn total_transform(scroll: &ScrollType, d: i64) -> Result<ResolvedClass> {
    require_codim2_vertex(scroll)?;
    ensure(d >= 1, "divisor_effective", || format!("need d >= 1, got {d}"))?;
    let f = scroll.degree();
    let k = (d - 1).div_euclid(f);
    let h = (d - 1).rem_euclid(f);
    Ok(ResolvedClass::new(k + 1, -(f - h - 1)))
}

/// Proper transform of the divisor cut by a hypersurface of degree
/// `cut_degree` with multiplicity `mult` along the singular line.
pub fn proper_transform_through_vertex(
    scroll: &ScrollType,
    cut_degree: i64,
    mult: i64,
) -> Result<ResolvedClass> {
    require_line_vertex_threefold(scroll)?;
    ensure(mult >= 0, "multiplicity_nonnegative", || format!("multiplicity {mult} < 0"))?;
    ensure(mult <= cut_degree, "multiplicity_at_most_degree", || {
        format!("multiplicity {mult} exceeds hypersurface degree {cut_degree}")
    })?;
    Ok(ResolvedClass::new(cut_degree - mult, scroll.degree() * mult))
}

/// Multiplicity of the singular line in the intersection of two divisors
/// cut by hypersurfaces through it: `S*·F*·H̃ - S̃·F̃·H̃`.
pub fn vertex_multiplicity_ci(
    scroll: &ScrollType,
    deg1: i64,
    mult1: i64,
    deg2: i64,
    mult2: i64,
) -> Result<i64> {
    let s_proper = proper_transform_through_vertex(scroll, deg1, mult1)?;
    let f_proper = proper_transform_through_vertex(scroll, deg2, mult2)?;
    let s_total = ResolvedClass::H.scaled(deg1);
    let f_total = ResolvedClass::H.scaled(deg2);
    let h = ResolvedClass::H;
    Ok(intersect(scroll, &[s_total, f_total, h])? - intersect(scroll, &[s_proper, f_proper, h])?)
}

/// Same computation with the second divisor a ruling plane `π ~ R`,
/// whose total transform is `total_transform(scroll, 1)`.
pub fn vertex_multiplicity_in_ruling_plane(scroll: &ScrollType, deg1: i64, mult1: i64) -> Result<i64> {
    let s_proper = proper_transform_through_vertex(scroll, deg1, mult1)?;
    let s_total = ResolvedClass::H.scaled(deg1);
    let plane_total = total_transform(scroll, 1)?;
    let h = ResolvedClass::H;
    Ok(intersect(scroll, &[s_total, plane_total, h])?
        - intersect(scroll, &[s_proper, ResolvedClass::R, h])?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(d: &[i64]) -> ScrollType {
        ScrollType::new(d).unwrap()
    }

    #[test]
    fn total_transform_examples() {
        let x = s(&[0, 0, 3]);
        assert_eq!(total_transform(&x, 1).unwrap(), ResolvedClass::new(1, -2));
        assert_eq!(total_transform(&x, 4).unwrap(), ResolvedClass::new(2, -2));
        assert_eq!(total_transform(&x, 3).unwrap(), ResolvedClass::new(1, 0));
        assert!(total_transform(&x, 0).is_err());
        assert!(total_transform(&s(&[0, 1, 2]), 1).is_err());
    }

    #[test]
    fn total_transform_of_ruling_plane() {
        for f in 1..20 {
            assert_eq!(total_transform(&s(&[0, 0, f]), 1).unwrap(), ResolvedClass::new(1, -(f - 1)));
        }
    }

    #[test]
    fn total_transform_of_multiples_of_h() {
        // H ~ fR pulls back to H̃ itself
        for f in 1..10 {
            for t in 1..6 {
                assert_eq!(total_transform(&s(&[0, 0, f]), t * f).unwrap(), ResolvedClass::new(t, 0));
            }
        }
    }

    #[test]
    fn proper_transform_examples() {
        assert_eq!(proper_transform_through_vertex(&s(&[0, 0, 3]), 3, 1).unwrap(), ResolvedClass::new(2, 3));
        assert_eq!(proper_transform_through_vertex(&s(&[0, 0, 3]), 5, 0).unwrap(), ResolvedClass::new(5, 0));
        assert_eq!(proper_transform_through_vertex(&s(&[0, 0, 4]), 4, 2).unwrap(), ResolvedClass::new(2, 8));
        assert!(proper_transform_through_vertex(&s(&[0, 0, 3]), 3, -1).is_err());
        assert!(proper_transform_through_vertex(&s(&[0, 0, 3]), 3, 4).is_err());
        assert!(proper_transform_through_vertex(&s(&[0, 1, 2]), 3, 1).is_err());
    }

    #[test]
    fn multiplicity_examples() {
        assert_eq!(vertex_multiplicity_ci(&s(&[0, 0, 3]), 3, 1, 11, 1).unwrap(), 3);
        assert_eq!(vertex_multiplicity_ci(&s(&[0, 0, 3]), 4, 0, 7, 2).unwrap(), 0);
        assert_eq!(vertex_multiplicity_ci(&s(&[0, 0, 4]), 5, 2, 6, 3).unwrap(), 24);
        assert_eq!(vertex_multiplicity_in_ruling_plane(&s(&[0, 0, 3]), 3, 1).unwrap(), 1);
        assert_eq!(vertex_multiplicity_in_ruling_plane(&s(&[0, 0, 3]), 6, 0).unwrap(), 0);
        assert_eq!(vertex_multiplicity_in_ruling_plane(&s(&[0, 0, 5]), 9, 4).unwrap(), 4);
    }

    #[test]
    fn multiplicity_sweep() {
        for f in 2..=8 {
            let x = s(&[0, 0, f]);
            for d1 in 1..=12 {
                for a in 0..=d1 {
                    assert_eq!(vertex_multiplicity_in_ruling_plane(&x, d1, a).unwrap(), a);
                    for d2 in 1..=12 {
                        for b in 0..=d2 {
                            assert_eq!(vertex_multiplicity_ci(&x, d1, a, d2, b).unwrap(), a * b * f);
                        }
                    }
                }
            }
        }
    }
}
