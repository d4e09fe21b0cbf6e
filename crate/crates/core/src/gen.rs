//! Seeded random instances for the verification harness.
//!
//! All randomness comes from a `ChaCha8Rng` seeded with a single `u64`, so
//! any reported counterexample can be regenerated from `(seed, scope)`.
//! Draws:
//!
//! * partition with parts `<= max_part` and length `<= max_len`: a length
//!   uniform in `0..=max_len`, then that many parts uniform in
//!   `1..=max_part`, sorted descending;
//! * sub-partition of `outer`: row by row, `inner_i` uniform in
//!   `0..=min(outer_i, inner_{i-1})`;
//! * skew shape with at most `n` boxes: outer with parts and length bounded
//!   by `min(n, 6)`, a sub-partition inside it, rejected until the shape has
//!   between 1 and `n` boxes.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::partition::{Partition, Rectangle};
use crate::skew::SkewShape;

pub type InstanceRng = ChaCha8Rng;

/// Generator for one named stream of a seed.
pub fn rng_for(seed: u64, stream: u64) -> InstanceRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

pub fn partition(rng: &mut InstanceRng, max_part: usize, max_len: usize) -> Partition {
    if max_part == 0 {
        return Partition::empty();
    }
    let len = rng.gen_range(0..=max_len);
    let parts = (0..len).map(|_| rng.gen_range(1..=max_part)).collect();
    Partition::from_unsorted(parts).expect("sorted parts")
}

pub fn sub_partition(rng: &mut InstanceRng, outer: &Partition) -> Partition {
    let mut prev = usize::MAX;
    let parts = outer
        .parts()
        .iter()
        .map(|&p| {
            let x = rng.gen_range(0..=p.min(prev));
            prev = x;
            x
        })
        .collect();
    Partition::new(parts).expect("bounded by the previous part")
}

/// A nonempty canonical skew shape with at most `max_boxes` boxes.
pub fn skew_shape(rng: &mut InstanceRng, max_boxes: usize) -> SkewShape {
    let side = max_boxes.clamp(1, 6);
    loop {
        let outer = partition(rng, side, side);
        let inner = sub_partition(rng, &outer);
        let shape = SkewShape::new(outer, inner).expect("inner drawn inside outer");
        if (1..=max_boxes).contains(&shape.size()) {
            return shape;
        }
    }
}

/// A rectangle of area at most `max_area`.
pub fn rectangle(rng: &mut InstanceRng, max_area: usize) -> Rectangle {
    let width = rng.gen_range(1..=max_area.max(1));
    let height = rng.gen_range(1..=(max_area / width).max(1));
    Rectangle::new(width, height).expect("positive sides")
}

/// Two partitions of total weight at most `max_boxes`.
pub fn factor_pair(rng: &mut InstanceRng, max_boxes: usize) -> (Partition, Partition) {
    let side = max_boxes.clamp(1, 4);
    loop {
        let mu = partition(rng, side, side);
        let nu = partition(rng, side, side);
        if mu.weight() + nu.weight() <= max_boxes {
            return (mu, nu);
        }
    }
}

/// Factors inside `rect`. Three times out of four `ν` is drawn inside the
/// complement of `μ`, so the Schubert product is nonzero; otherwise `ν` is
/// any partition in the box.
pub fn schubert_factors(rng: &mut InstanceRng, rect: Rectangle) -> (Partition, Partition) {
    let mu = partition(rng, rect.width(), rect.height());
    let nu = if rng.gen_range(0..4) < 3 {
        let room = mu.complement_in(rect).expect("drawn inside rect");
        sub_partition(rng, &room)
    } else {
        partition(rng, rect.width(), rect.height())
    };
    (mu, nu)
}

/// `λ/μ` with `λ = (k^n, tail)`, `l(μ) <= n` and `μ_1 <= λ_l`, at most
/// `max_boxes` boxes.
pub fn constrained_skew(rng: &mut InstanceRng, max_boxes: usize) -> SkewShape {
    loop {
        let k = rng.gen_range(1..=5);
        let n = rng.gen_range(1..=4);
        let tail = partition(rng, k, 3);
        let outer_parts: Vec<usize> = std::iter::repeat(k).take(n).chain(tail.parts().iter().copied()).collect();
        let outer = Partition::new(outer_parts).expect("tail parts are at most k");
        let last = outer.part(outer.len() - 1);
        let inner = partition(rng, last, n);
        let shape = SkewShape::new(outer, inner).expect("inner fits in the full-width block");
        if (1..=max_boxes).contains(&shape.size()) {
            return shape;
        }
    }
}
