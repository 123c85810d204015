//! Partitions, hook conditions, marked diagrams and pairings.

pub mod marked;
pub mod pairing;
pub mod partition;

pub use marked::{
    enumerate_marked_diagrams, enumerate_marked_families, sort_sign, MarkedDiagram, MarkedFamily,
};
pub use pairing::{enumerate_pairings, Pairing};
pub use partition::{
    enumerate_even_partitions, enumerate_hook_partitions, enumerate_nested_hook_partitions,
    partitions_of, HookFlavor, Partition,
};
