#![allow(dead_code)]

use basecover::{Partition, Rectangle, SkewShape};
use proptest::prelude::*;

pub fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

pub fn sk(s: &str) -> SkewShape {
    s.parse().unwrap()
}

pub fn rect(w: usize, h: usize) -> Rectangle {
    Rectangle::new(w, h).unwrap()
}

pub fn partition_strategy(max_weight: usize) -> impl Strategy<Value = Partition> {
    let cap = max_weight.clamp(1, 8);
    prop::collection::vec(1..=cap, 0..=cap)
        .prop_map(|v| Partition::from_unsorted(v).unwrap())
        .prop_filter("weight", move |q| q.weight() <= max_weight)
}

/// A rectangle of area at most `max_area` and a partition inside it.
pub fn boxed_partition(max_area: usize) -> impl Strategy<Value = (Rectangle, Partition)> {
    (1..=max_area)
        .prop_flat_map(move |w| (Just(w), 1..=(max_area / w).max(1)))
        .prop_flat_map(|(w, h)| {
            prop::collection::vec(0..=w, 0..=h)
                .prop_map(move |v| (rect(w, h), Partition::from_unsorted(v).unwrap()))
        })
}

pub fn skew_strategy(max_boxes: usize) -> impl Strategy<Value = SkewShape> {
    (prop::collection::vec(1usize..=6, 1..=6), prop::collection::vec(0usize..=6, 0..=6))
        .prop_map(|(outer, inner)| {
            let outer = Partition::from_unsorted(outer).unwrap();
            let inner = Partition::from_unsorted(inner).unwrap().intersect(&outer);
            SkewShape::new(outer, inner).unwrap()
        })
        .prop_filter("size", move |s| (1..=max_boxes).contains(&s.size()))
}
