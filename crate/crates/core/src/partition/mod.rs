//! Set partitions of `[d]`, the refinement lattice, and its Möbius function.

mod integer;
mod lattice;
mod perm;
mod set_partition;

use num_bigint::BigInt;

pub use integer::{Composition, IntegerPartition};
pub(crate) use lattice::all_partitions;
pub use lattice::{
    coarsenings, enumerate_palpha, enumerate_partitions, mobius, mobius_from_bottom, refinements,
    Marked, RgsIter,
};
pub use perm::Perm;
pub use set_partition::{as_blocks, SetPartition};

pub fn factorial(n: usize) -> BigInt {
    (1..=n).map(BigInt::from).product()
}
