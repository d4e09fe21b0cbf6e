//! Exhaustive Littlewood-Richardson oracle.
//!
//! Everything here is computed by listing LR tableaux one by one. It is slow
//! by nature and meant for small instances, so every entry point checks the
//! box count against a ceiling (22 by default) before enumerating.

mod decomposition;
mod enumerate;

use std::collections::HashMap;
use std::fmt;

pub use decomposition::{base_of, cover_of, durfee_of, Decomposition};

use crate::error::{Error, Result};
use crate::partition::{Partition, Rectangle};
use crate::skew::SkewShape;
use enumerate::{checked_inc, content_partition, ContentFilter, Enumerator};

pub const DEFAULT_MAX_BOXES: usize = 22;

/// True iff every prefix holds at least as many `i`s as `i+1`s, for all `i`.
pub fn is_lattice(word: &[usize]) -> bool {
    let mut counts: Vec<usize> = Vec::new();
    for &v in word {
        if v == 0 {
            return false;
        }
        if counts.len() < v {
            counts.resize(v, 0);
        }
        counts[v - 1] += 1;
        if v > 1 && counts[v - 1] > counts[v - 2] {
            return false;
        }
    }
    true
}

/// A semistandard filling of a skew shape whose reverse row word is a
/// lattice word.
#[derive(Clone, PartialEq, Eq)]
pub struct LrTableau {
    shape: SkewShape,
    rows: Vec<Vec<usize>>,
}

impl LrTableau {
    /// Wraps a filling, given row by row left to right, without checking it.
    pub fn from_rows(shape: SkewShape, rows: Vec<Vec<usize>>) -> Self {
        LrTableau { shape, rows }
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    /// Entries of each row, left to right.
    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Entry of the zero-based box `(row, col)`.
    pub fn entry(&self, row: usize, col: usize) -> Option<usize> {
        let range = self.shape.row_range(row);
        if !range.contains(&col) {
            return None;
        }
        self.rows.get(row)?.get(col - range.start).copied()
    }

    /// Rows top to bottom, each read right to left.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().flat_map(|r| r.iter().rev().copied()).collect()
    }

    pub fn content(&self) -> Partition {
        let word = self.reading_word();
        let top = word.iter().copied().max().unwrap_or(0);
        let counts: Vec<usize> = (1..=top).map(|v| word.iter().filter(|&&x| x == v).count()).collect();
        Partition::from_unsorted(counts).expect("counts are nonnegative")
    }

    /// Rows weakly increase, columns strictly increase, entries positive.
    pub fn is_semistandard(&self) -> bool {
        let lengths_match = self.rows.len() == self.shape.num_rows()
            && self
                .rows
                .iter()
                .enumerate()
                .all(|(i, r)| r.len() == self.shape.row_range(i).len());
        if !lengths_match {
            return false;
        }
        self.shape.boxes().into_iter().all(|(i, j)| {
            let v = self.entry(i, j).unwrap_or(0);
            let right_ok = self.entry(i, j + 1).map_or(true, |r| v <= r);
            let below_ok = self.entry(i + 1, j).map_or(true, |b| v < b);
            v >= 1 && right_ok && below_ok
        })
    }

    pub fn is_lr(&self) -> bool {
        self.is_semistandard() && is_lattice(&self.reading_word())
    }
}

impl fmt::Debug for LrTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            write!(f, "{}", ".".repeat(self.shape.inner().part(i)))?;
            for v in row {
                write!(f, "{v}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// The enumeration oracle with its box-count ceiling.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Oracle {
    max_boxes: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle {
            max_boxes: DEFAULT_MAX_BOXES,
        }
    }
}

impl Oracle {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_max_boxes(max_boxes: usize) -> Self {
        Oracle { max_boxes }
    }

    pub fn max_boxes(&self) -> usize {
        self.max_boxes
    }

    fn check_size(&self, boxes: usize) -> Result<()> {
        if boxes > self.max_boxes {
            return Err(Error::InstanceTooLarge {
                boxes,
                limit: self.max_boxes,
            });
        }
        Ok(())
    }

    /// `c(λ; μ, ν)`: the number of LR tableaux of shape `λ/μ` and content `ν`.
    /// Zero when `μ ⊄ λ` or the weights disagree.
    pub fn lr_coefficient(&self, lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
        if !lambda.contains(mu) || lambda.weight() != mu.weight() + nu.weight() {
            return Ok(0);
        }
        self.check_size(nu.weight())?;
        let filter = ContentFilter {
            exact: Some(nu.clone()),
            fits_in: None,
        };
        let mut total = 0u64;
        Enumerator::new(lambda, mu, &filter).run(|_, _| checked_inc(&mut total))?;
        Ok(total)
    }

    /// The skew character `[A] = Σ_ν c(λ; μ, ν) [ν]`.
    pub fn decompose(&self, shape: &SkewShape) -> Result<Decomposition> {
        self.decompose_filtered(shape, ContentFilter::default())
    }

    fn decompose_filtered(&self, shape: &SkewShape, filter: ContentFilter) -> Result<Decomposition> {
        self.check_size(shape.size())?;
        let mut counts: HashMap<Partition, u64> = HashMap::new();
        Enumerator::new(shape.outer(), shape.inner(), &filter)
            .run(|_, content| checked_inc(counts.entry(content_partition(content)).or_insert(0)))?;
        let mut d = Decomposition::new(shape.size());
        for (key, m) in counts {
            d.add(key, m)?;
        }
        Ok(d)
    }

    /// Every LR tableau of the shape, in enumeration order.
    pub fn tableaux(&self, shape: &SkewShape) -> Result<Vec<LrTableau>> {
        self.check_size(shape.size())?;
        let enumerator = Enumerator::new(shape.outer(), shape.inner(), &ContentFilter::default());
        let positions = enumerator.positions().to_vec();
        let mut out = Vec::new();
        enumerator.run(|values, _| {
            let mut rows: Vec<Vec<usize>> = (0..shape.num_rows())
                .map(|i| vec![0; shape.row_range(i).len()])
                .collect();
            for (&(i, j), &v) in positions.iter().zip(values) {
                rows[i][j - shape.inner().part(i)] = v;
            }
            out.push(LrTableau::from_rows(shape.clone(), rows));
            Ok(())
        })?;
        Ok(out)
    }

    /// `[μ] ⊗ [ν]`, via the skew character of the disjoint union.
    pub fn outer_product(&self, mu: &Partition, nu: &Partition) -> Result<Decomposition> {
        self.decompose(&SkewShape::disjoint_union(mu, nu))
    }

    /// `[μ] ⋆ [ν]` inside `rect`: the constituents of the outer product that
    /// fit in the rectangle. Possibly empty.
    pub fn schubert_product(&self, mu: &Partition, nu: &Partition, rect: Rectangle) -> Result<Decomposition> {
        for factor in [mu, nu] {
            if !rect.contains(factor) {
                return Err(Error::FactorOutsideRectangle {
                    factor: factor.clone(),
                    rect,
                });
            }
        }
        let filter = ContentFilter {
            exact: None,
            fits_in: Some((rect.width(), rect.height())),
        };
        self.decompose_filtered(&SkewShape::disjoint_union(mu, nu), filter)
    }
}

/// [`Oracle::lr_coefficient`] with the default ceiling.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
    Oracle::new().lr_coefficient(lambda, mu, nu)
}

/// [`Oracle::decompose`] with the default ceiling.
pub fn decompose(shape: &SkewShape) -> Result<Decomposition> {
    Oracle::new().decompose(shape)
}

/// [`Oracle::outer_product`] with the default ceiling.
pub fn outer_product(mu: &Partition, nu: &Partition) -> Result<Decomposition> {
    Oracle::new().outer_product(mu, nu)
}

/// [`Oracle::schubert_product`] with the default ceiling.
pub fn schubert_product(mu: &Partition, nu: &Partition, rect: Rectangle) -> Result<Decomposition> {
    Oracle::new().schubert_product(mu, nu, rect)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_of;
    use crate::testing::{partition_strategy, skew_strategy};
    use proptest::prelude::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn sk(s: &str) -> SkewShape {
        s.parse().unwrap()
    }

    fn dec(terms: &[(&str, u64)]) -> Decomposition {
        let w = p(terms[0].0).weight();
        let mut d = Decomposition::new(w);
        for &(q, m) in terms {
            d.add(p(q), m).unwrap();
        }
        d
    }

    /// Every filling of the shape with values 1..=size, kept when it is
    /// semistandard with a lattice reading word.
    fn brute_force_count(shape: &SkewShape, content: &Partition) -> u64 {
        let n = shape.size();
        let mut rows: Vec<Vec<usize>> = (0..shape.num_rows())
            .map(|i| vec![1; shape.row_range(i).len()])
            .collect();
        let slots: Vec<(usize, usize)> = rows
            .iter()
            .enumerate()
            .flat_map(|(i, r)| (0..r.len()).map(move |k| (i, k)))
            .collect();
        let mut count = 0;
        loop {
            let t = LrTableau::from_rows(shape.clone(), rows.clone());
            if t.is_lr() && &t.content() == content {
                count += 1;
            }
            // odometer over all value assignments
            let mut idx = 0;
            loop {
                if idx == slots.len() {
                    return count;
                }
                let (i, k) = slots[idx];
                if rows[i][k] < n.max(1) {
                    rows[i][k] += 1;
                    break;
                }
                rows[i][k] = 1;
                idx += 1;
            }
        }
    }

    #[test]
    fn lattice_words() {
        assert!(is_lattice(&[1, 1, 2]));
        assert!(!is_lattice(&[2, 1, 1]));
        assert!(!is_lattice(&[1, 2, 1, 3, 3]));
        assert!(is_lattice(&[]));
        assert!(is_lattice(&[1, 2, 1, 3, 2]));
        assert!(!is_lattice(&[0]));
    }

    #[test]
    fn small_coefficients() {
        assert_eq!(lr_coefficient(&p("2,1"), &p("1"), &p("1,1")).unwrap(), 1);
        assert_eq!(lr_coefficient(&p("4,2"), &p("2,1"), &p("2,1")).unwrap(), 1);
        assert_eq!(brute_force_count(&sk("2,1/1"), &p("1,1")), 1);
        assert_eq!(brute_force_count(&sk("4,2/2,1"), &p("2,1")), 1);
        // (3,2,1) appears twice in (2,1)⊗(2,1).
        assert_eq!(lr_coefficient(&p("3,2,1"), &p("2,1"), &p("2,1")).unwrap(), 2);
        assert_eq!(brute_force_count(&sk("3,2,1/2,1"), &p("2,1")), 2);
        assert_eq!(lr_coefficient(&p("2"), &p("1,1"), &p("1")).unwrap(), 0);
        assert_eq!(lr_coefficient(&p("2"), &p("1"), &p("2")).unwrap(), 0);
    }

    #[test]
    fn decompose_examples() {
        assert_eq!(decompose(&sk("2,1/1")).unwrap(), dec(&[("2", 1), ("1,1", 1)]));
        assert_eq!(decompose(&sk("2,2/1")).unwrap(), dec(&[("2,1", 1)]));
        let empty = decompose(&SkewShape::empty()).unwrap();
        assert_eq!(empty, Decomposition::irreducible(Partition::empty()));
    }

    #[test]
    fn outer_product_examples() {
        assert_eq!(outer_product(&p("1"), &p("1")).unwrap(), dec(&[("2", 1), ("1,1", 1)]));
        assert_eq!(
            outer_product(&p("2,1"), &p("1")).unwrap(),
            dec(&[("3,1", 1), ("2,2", 1), ("2,1,1", 1)])
        );
        let big = outer_product(&p("4,3,1"), &p("5,2,2")).unwrap();
        assert_eq!(big.base().unwrap(), p("5,3,2"));
        assert_eq!(big.cover().unwrap(), p("9,6,5,3,2,1"));
    }

    #[test]
    fn schubert_product_examples() {
        let r = Rectangle::new(7, 4).unwrap();
        let d = schubert_product(&p("4,3,1"), &p("5,2,2"), r).unwrap();
        assert_eq!(d.base().unwrap(), p("5,4,2"));
        assert_eq!(d.cover().unwrap(), p("7,6,5,3"));
        assert_eq!(durfee_of(&d), 3);
        assert!(d.constituents().all(|q| r.contains(q)));
        assert!(matches!(
            schubert_product(&p("8"), &p("1"), r),
            Err(Error::FactorOutsideRectangle { .. })
        ));
        // (2)⋆(2) in a 2x1 box has no room at all.
        let tight = schubert_product(&p("2"), &p("2"), Rectangle::new(2, 1).unwrap()).unwrap();
        assert!(tight.is_empty());
    }

    #[test]
    fn ceiling_is_enforced() {
        let big = sk("9^3,7^2,4/4,3,1");
        assert_eq!(
            decompose(&big),
            Err(Error::InstanceTooLarge { boxes: 37, limit: 22 })
        );
        let tiny = Oracle::with_max_boxes(2);
        assert!(tiny.decompose(&sk("3")).is_err());
        assert!(tiny.decompose(&sk("2")).is_ok());
    }

    #[test]
    fn large_skew_with_raised_ceiling() {
        let big = sk("9^3,7^2,4/4,3,1");
        let d = Oracle::with_max_boxes(40).decompose(&big).unwrap();
        assert_eq!(d.base().unwrap(), p("8,7,6,4,3"));
    }

    #[test]
    fn tableaux_are_lr() {
        let shape = sk("4,3,2/2,1");
        let all = Oracle::new().tableaux(&shape).unwrap();
        assert!(all.iter().all(LrTableau::is_lr));
        let d = decompose(&shape).unwrap();
        assert_eq!(all.len() as u64, d.total_multiplicity().unwrap());
        for (q, m) in d.iter() {
            let n = all.iter().filter(|t| &t.content() == q).count() as u64;
            assert_eq!(n, m, "content {q}");
            assert_eq!(brute_force_count(&shape, q), m, "content {q}");
        }
    }

    /// Outer product by scanning every candidate γ and counting tableaux of γ/μ.
    fn outer_product_by_coefficients(mu: &Partition, nu: &Partition) -> Decomposition {
        let n = mu.weight() + nu.weight();
        let mut d = Decomposition::new(n);
        for gamma in partitions_of(n) {
            let c = lr_coefficient(&gamma, mu, nu).unwrap();
            d.add(gamma, c).unwrap();
        }
        d
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn enumeration_matches_brute_force(shape in skew_strategy(5)) {
            let d = decompose(&shape).unwrap();
            for q in partitions_of(shape.size()) {
                prop_assert_eq!(d.get(&q), brute_force_count(&shape, &q), "content {}", q);
            }
        }

        #[test]
        fn outer_product_two_routes(mu in partition_strategy(4), nu in partition_strategy(4)) {
            prop_assert_eq!(outer_product(&mu, &nu).unwrap(), outer_product_by_coefficients(&mu, &nu));
        }

        #[test]
        fn coefficients_are_symmetric(shape in skew_strategy(8)) {
            let lambda = shape.outer();
            let mu = shape.inner();
            for nu in partitions_of(shape.size()) {
                let a = lr_coefficient(lambda, mu, &nu).unwrap();
                prop_assert_eq!(a, lr_coefficient(lambda, &nu, mu).unwrap());
                prop_assert_eq!(
                    a,
                    lr_coefficient(&lambda.conjugate(), &mu.conjugate(), &nu.conjugate()).unwrap()
                );
            }
        }

        #[test]
        fn keys_have_shape_weight(shape in skew_strategy(10)) {
            let d = decompose(&shape).unwrap();
            prop_assert!(d.constituents().all(|q| q.weight() == shape.size()));
            prop_assert!(d.iter().all(|(_, m)| m >= 1));
            prop_assert!(d.contains(&shape.row_lengths_partition()));
        }

        #[test]
        fn schubert_in_large_box_is_outer(mu in partition_strategy(4), nu in partition_strategy(4)) {
            prop_assume!(!mu.is_empty() || !nu.is_empty());
            let rect = Rectangle::new(mu.first() + nu.first(), mu.len() + nu.len()).unwrap();
            prop_assert_eq!(schubert_product(&mu, &nu, rect).unwrap(), outer_product(&mu, &nu).unwrap());
        }
    }
}
