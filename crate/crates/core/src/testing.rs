//! Proptest strategies shared by the unit tests.

use proptest::prelude::*;

use crate::partition::Partition;
use crate::skew::SkewShape;

/// Partitions of weight at most `max_weight`.
pub fn partition_strategy(max_weight: usize) -> impl Strategy<Value = Partition> {
    let cap = max_weight.clamp(1, 8);
    prop::collection::vec(1..=cap, 0..=cap)
        .prop_map(|v| Partition::from_unsorted(v).unwrap())
        .prop_filter("weight", move |p| p.weight() <= max_weight)
}

/// A rectangle `w x h` with sides at most the given bounds, and a partition inside it.
pub fn rect_and_partition(
    max_w: usize,
    max_h: usize,
) -> impl Strategy<Value = (usize, usize, Partition)> {
    (1..=max_w, 1..=max_h).prop_flat_map(|(w, h)| {
        prop::collection::vec(0..=w, 0..=h)
            .prop_map(move |v| (w, h, Partition::from_unsorted(v).unwrap()))
    })
}

/// Canonical skew shapes with between one and `max_boxes` boxes.
pub fn skew_strategy(max_boxes: usize) -> impl Strategy<Value = SkewShape> {
    (prop::collection::vec(1usize..=6, 1..=6), prop::collection::vec(0usize..=6, 0..=6))
        .prop_map(|(outer, inner)| {
            let outer = Partition::from_unsorted(outer).unwrap();
            let inner: Vec<usize> = inner
                .into_iter()
                .enumerate()
                .map(|(i, x)| x.min(outer.part(i)))
                .collect();
            let inner = Partition::from_unsorted(inner).unwrap();
            let inner = inner.intersect(&outer);
            SkewShape::new(outer, inner).unwrap()
        })
        .prop_filter("size", move |s| s.size() >= 1 && s.size() <= max_boxes)
}
