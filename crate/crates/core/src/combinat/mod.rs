//! Partitions, compositions, permutations and the bits of elementary
//! number theory the rest of the crate is built on.

mod arith;
mod composition;
mod partition;
mod permutation;

pub use arith::{binomial, divisors, factorial, mobius};
pub use composition::Composition;
pub use partition::{partitions_of, Partition, Partitions};
pub use permutation::Permutation;
