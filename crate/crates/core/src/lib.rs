//! Exact hook-length and content combinatorics for strict partitions and
//! shifted Young diagrams.
//!
//! The crate revolves around one operator: the weighted difference of a
//! partition function over all one-box growths of a shifted diagram. Around
//! it sit the pieces needed to verify, in exact rational arithmetic, that
//! hook-product sums telescope and that the resulting sequences are
//! polynomial in the number of added boxes:
//!
//! - [`partition`]: strict partitions, shifted diagrams, hooks, contents,
//!   skew shapes, enumeration.
//! - [`tableaux`]: standard shifted tableau counts by hook formula, by
//!   memoized recursion, and by capped brute force.
//! - [`corners`]: interlacing corner profiles, the `q_k` statistics, growth
//!   transitions, and closed-form hook-product ratios.
//! - [`series`]: partial-fraction kernels at exact rational points and the
//!   universal expansion of kernel moments in power sums.
//! - [`diffop`]: the difference operator, telescoped skew sums, and the
//!   binomial-transform cross-checks.
//! - [`poly`]: polynomial detection from exact difference tables.
//! - [`display`]: deterministic text rendering of diagrams and statistics.
//! - [`parallel`]: exact parallel reductions (rayon behind the default
//!   `parallel` feature, sequential fallback without it).
//!
//! Everything is exact; no floating point is used anywhere.

pub mod corners;
pub mod diffop;
pub mod display;
pub mod parallel;
pub mod partition;
pub mod poly;
pub mod rational;
pub mod series;
pub mod tableaux;

pub use corners::{add_box_transitions, hook_product_ratio, CornerProfile, Transition};
pub use partition::{
    extensions, strict_partitions, subpartitions, Partition, PartitionError, ShiftedBox,
    SkewShape, StrictPartition,
};
pub use rational::Rational;
