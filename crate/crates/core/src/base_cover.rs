//! Closed-form base and cover partitions.
//!
//! Nothing in this module enumerates tableaux. The base partition of a skew
//! character is read off the diagram,
//!
//! ```text
//! B_i = max_j max(0, λ_{i+j-1} - μ_j),
//! ```
//!
//! and cover partitions of products come from the base partition of the
//! diagram left in a `k x l` box after cutting `ν` from the top-left corner
//! and a rotated `μ` from the bottom-right corner.

use crate::error::{Constraint, Error, Result};
use crate::partition::{Partition, Rectangle};
use crate::skew::SkewShape;

/// Base partition of the skew character `[A]`: the intersection of all its
/// constituents.
pub fn base_skew(shape: &SkewShape) -> Result<Partition> {
    if shape.is_empty() {
        return Err(Error::EmptyShape);
    }
    let outer = shape.outer();
    let inner = shape.inner();
    let l = outer.len();
    let parts = (1..=l)
        .map(|i| {
            (1..=l + 1 - i)
                .map(|j| outer.part(i + j - 2).saturating_sub(inner.part(j - 1)))
                .max()
                .unwrap_or(0)
        })
        .collect();
    Ok(Partition::from_trusted(parts))
}

/// Union of the maximal rectangles that fit inside the diagram.
pub fn union_partition(shape: &SkewShape) -> Result<Partition> {
    if shape.is_empty() {
        return Err(Error::EmptyShape);
    }
    Ok(shape
        .max_rectangle_placements()
        .iter()
        .fold(Partition::empty(), |acc, pl| acc.union(&pl.as_partition())))
}

/// Base partition of the outer product `[μ] ⊗ [ν]`.
pub fn base_product(mu: &Partition, nu: &Partition) -> Partition {
    let shape = SkewShape::disjoint_union(mu, nu);
    base_skew(&shape).unwrap_or_default()
}

/// The rectangle in which the Schubert product agrees with the outer product.
pub fn ordinary_rectangle(mu: &Partition, nu: &Partition) -> Option<Rectangle> {
    Rectangle::new(mu.first() + nu.first(), mu.len() + nu.len()).ok()
}

/// The diagram `(rect minus rotated μ) / ν` attached to `[μ] ⋆ [ν]`.
///
/// The outer partition is the complement of `μ` in `rect`; the displayed
/// picture with `μ` cut from the top-left is its 180 degree rotation.
pub fn product_shape(mu: &Partition, nu: &Partition, rect: Rectangle) -> Result<SkewShape> {
    for factor in [mu, nu] {
        if !rect.contains(factor) {
            return Err(Error::FactorOutsideRectangle {
                factor: factor.clone(),
                rect,
            });
        }
    }
    let outer = mu.complement_in(rect)?;
    if !outer.contains(nu) {
        return Err(Error::OverlappingBlocks {
            mu: mu.clone(),
            nu: nu.clone(),
            rect,
        });
    }
    SkewShape::new(outer, nu.clone())
}

/// Cover partition (union of all constituents) of `[μ] ⋆ [ν]` inside
/// `rect`, or of the outer product `[μ] ⊗ [ν]` when `rect` is `None`.
pub fn cover_product(mu: &Partition, nu: &Partition, rect: Option<Rectangle>) -> Result<Partition> {
    let rect = match rect.or_else(|| ordinary_rectangle(mu, nu)) {
        Some(r) => r,
        // Both factors empty: the product is [()].
        None => return Ok(Partition::empty()),
    };
    let shape = product_shape(mu, nu, rect)?;
    // An empty diagram carries the trivial character, whose base is ().
    let base = if shape.is_empty() {
        Partition::empty()
    } else {
        base_skew(&shape)?
    };
    base.complement_in(rect)
}

/// Cover partition of `[λ/μ]` for shapes whose top rows all have full width
/// `λ_1`, with `μ` confined to those rows and no wider than the last row.
pub fn cover_skew(shape: &SkewShape) -> Result<Partition> {
    if shape.is_empty() {
        return Err(Error::EmptyShape);
    }
    let lambda = shape.outer();
    let mu = shape.inner();
    let width = lambda.first();
    let block_rows = lambda.parts().iter().take_while(|&&x| x == width).count();
    let outer_last = lambda.part(lambda.len() - 1);
    if mu.first() > outer_last {
        return Err(Error::ConstraintViolated(Constraint::InnerTooWide {
            inner_first: mu.first(),
            outer_last,
        }));
    }
    if mu.len() > block_rows {
        return Err(Error::ConstraintViolated(Constraint::InnerTooLong {
            inner_len: mu.len(),
            block_rows,
        }));
    }
    let rect = Rectangle::new(width, lambda.len())?;
    let lambda_dual = lambda.complement_in(rect)?;
    base_product(mu, &lambda_dual).complement_in(rect)
}

/// Durfee size of `[μ] ⋆ [ν]`, read off its cover partition.
pub fn durfee_schubert(mu: &Partition, nu: &Partition, rect: Rectangle) -> Result<usize> {
    Ok(cover_product(mu, nu, Some(rect))?.durfee())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lr::{decompose, outer_product, schubert_product};
    use crate::testing::{partition_strategy, skew_strategy};
    use proptest::prelude::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn sk(s: &str) -> SkewShape {
        s.parse().unwrap()
    }

    fn rect(w: usize, h: usize) -> Rectangle {
        Rectangle::new(w, h).unwrap()
    }

    #[test]
    fn base_skew_examples() {
        assert_eq!(base_skew(&sk("9^3,7^2,4/4,3,1")).unwrap(), p("8,7,6,4,3"));
        assert_eq!(base_skew(&sk("7,5,5,2/4,3,1")).unwrap(), p("4,2,1"));
        assert_eq!(base_skew(&sk("5,3,3,1")).unwrap(), p("5,3,3,1"));
        assert_eq!(base_skew(&SkewShape::empty()), Err(Error::EmptyShape));
    }

    #[test]
    fn union_partition_examples() {
        assert_eq!(union_partition(&sk("11,6,5^3,4/3^2")).unwrap(), p("8,5,5,4,2,1"));
        assert_eq!(base_skew(&sk("11,6,5^3,4/3^2")).unwrap(), p("8,5,5,4,2,1"));
        assert_eq!(union_partition(&sk("4^3")).unwrap(), p("4^3"));
        assert_eq!(union_partition(&SkewShape::empty()), Err(Error::EmptyShape));
    }

    #[test]
    fn base_product_examples() {
        assert_eq!(base_product(&p("4,3,1"), &p("5,2,2")), p("5,3,2"));
        assert_eq!(base_product(&Partition::empty(), &p("3,2")), p("3,2"));
        assert_eq!(base_product(&p("1"), &p("1")), p("1"));
        assert_eq!(base_product(&Partition::empty(), &Partition::empty()), Partition::empty());
    }

    #[test]
    fn product_shape_examples() {
        let mu = p("4,3,1");
        let nu = p("5,2,2");
        let a1 = product_shape(&mu, &nu, rect(9, 6)).unwrap();
        assert_eq!(a1.rotate(), sk("9^3,7^2,4/4,3,1"));
        let a2 = product_shape(&mu, &nu, rect(7, 4)).unwrap();
        assert_eq!(a2, sk("7,6,4,3/5,2,2"));
        assert_eq!(a2.rotate(), sk("7,5,5,2/4,3,1"));
        assert_eq!(
            product_shape(&Partition::empty(), &Partition::empty(), rect(3, 2)).unwrap(),
            sk("3,3")
        );
        assert!(matches!(
            product_shape(&p("2"), &p("2"), rect(3, 1)),
            Err(Error::OverlappingBlocks { .. })
        ));
        assert!(matches!(
            product_shape(&p("4"), &p("1"), rect(3, 1)),
            Err(Error::FactorOutsideRectangle { .. })
        ));
    }

    #[test]
    fn cover_product_examples() {
        let mu = p("4,3,1");
        let nu = p("5,2,2");
        assert_eq!(cover_product(&mu, &nu, None).unwrap(), p("9,6,5,3,2,1"));
        assert_eq!(cover_product(&mu, &nu, Some(rect(7, 4))).unwrap(), p("7,6,5,3"));
        assert_eq!(cover_product(&Partition::empty(), &p("3,1"), None).unwrap(), p("3,1"));
        assert_eq!(
            cover_product(&Partition::empty(), &Partition::empty(), None).unwrap(),
            Partition::empty()
        );
        // ν fills the box exactly: the product is [ν] and the diagram is empty.
        assert_eq!(
            cover_product(&Partition::empty(), &p("2,2"), Some(rect(2, 2))).unwrap(),
            p("2,2")
        );
    }

    #[test]
    fn durfee_examples() {
        assert_eq!(durfee_schubert(&p("4,3,1"), &p("5,2,2"), rect(7, 4)).unwrap(), 3);
        assert_eq!(durfee_schubert(&Partition::empty(), &p("1"), rect(1, 1)).unwrap(), 1);
    }

    #[test]
    fn cover_skew_examples() {
        assert_eq!(cover_skew(&sk("4^3")).unwrap(), p("4^3"));
        for text in ["3,3,2/1", "4,4,3,2/2,1"] {
            let a = sk(text);
            let oracle = decompose(&a).unwrap().cover().unwrap();
            assert_eq!(cover_skew(&a).unwrap(), oracle, "{text}");
        }
        assert!(matches!(
            cover_skew(&sk("4,4,1/2")),
            Err(Error::ConstraintViolated(Constraint::InnerTooWide { .. }))
        ));
        assert!(matches!(
            cover_skew(&sk("4,3,3/1,1")),
            Err(Error::ConstraintViolated(Constraint::InnerTooLong { .. }))
        ));
        assert_eq!(cover_skew(&SkewShape::empty()), Err(Error::EmptyShape));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]

        #[test]
        fn base_equals_union_equals_oracle(a in skew_strategy(12)) {
            let base = base_skew(&a).unwrap();
            prop_assert_eq!(&union_partition(&a).unwrap(), &base);
            prop_assert_eq!(&decompose(&a).unwrap().base().unwrap(), &base);
            for i in 1..=a.num_rows() {
                prop_assert_eq!(a.rho(i).first().copied().unwrap_or(0), base.part(i - 1));
            }
        }

        #[test]
        fn ordinary_product_bounds_are_attained(mu in partition_strategy(5), nu in partition_strategy(5)) {
            let d = outer_product(&mu, &nu).unwrap();
            prop_assert_eq!(base_product(&mu, &nu), d.base().unwrap());
            prop_assert_eq!(cover_product(&mu, &nu, None).unwrap(), d.cover().unwrap());
        }

        #[test]
        fn schubert_cover_matches_oracle((w, h, mu) in crate::testing::rect_and_partition(5, 4), nu in partition_strategy(8)) {
            let r = rect(w, h);
            prop_assume!(r.contains(&nu));
            let d = schubert_product(&mu, &nu, r).unwrap();
            match cover_product(&mu, &nu, Some(r)) {
                Ok(c) => {
                    prop_assert_eq!(c, d.cover().unwrap());
                    prop_assert_eq!(durfee_schubert(&mu, &nu, r).unwrap(), d.durfee());
                }
                Err(Error::OverlappingBlocks { .. }) => prop_assert!(d.is_empty()),
                Err(e) => prop_assert!(false, "unexpected {e}"),
            }
        }
    }
}
