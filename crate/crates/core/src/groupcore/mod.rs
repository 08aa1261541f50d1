//! Permutation arithmetic, group enumeration by closure and conjugacy classes.

mod classes;
mod group;
mod perm;

pub use classes::{conjugacy_classes, ConjugacyClassSet};
pub use group::{exponent, generate_group, GroupTable};
pub(crate) use perm::lcm;
pub use perm::{element_order, Permutation};

/// Largest supported permutation degree.
pub const MAX_DEGREE: usize = 128;

/// Default bound on the order of an enumerated group.
pub const DEFAULT_ORDER_CAP: usize = 200_000;
