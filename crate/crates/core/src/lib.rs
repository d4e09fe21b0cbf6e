//! Base partitions, cover partitions and Durfee sizes of skew characters and
//! of outer and Schubert products of symmetric group characters.
//!
//! The closed forms live in [`base_cover`]; [`lr`] holds an exhaustive
//! Littlewood-Richardson tableau enumerator that serves as ground truth for
//! them on small instances.

pub mod base_cover;
pub mod cli;
pub mod error;
pub mod gen;
pub mod lr;
pub mod partition;
pub mod skew;
pub mod verify;

#[cfg(test)]
pub(crate) mod testing;

pub use base_cover::{
    base_product, base_skew, cover_product, cover_skew, durfee_schubert, product_shape,
    union_partition,
};
pub use error::{Error, Result};
pub use lr::{
    base_of, cover_of, decompose, durfee_of, is_lattice, lr_coefficient, outer_product,
    schubert_product, Decomposition, LrTableau, Oracle,
};
pub use partition::{Partition, Rectangle};
pub use skew::{RectanglePlacement, SkewShape};
