//! Character combinatorics of the symmetric and alternating groups.

mod alt_table;
mod labels;
mod mn;
mod partition;

pub use alt_table::{
    verify_alternating_table, AltTableReport, PairCheck, PrimeCheck, ALT_TABLE_MAX_N, ALT_TABLE_MIN_N,
};
pub use labels::label_symmetric_rows;
pub use mn::{mn_table, mn_value};
pub use partition::{
    alt_class_size, alt_class_splits, class_size, degree, is_self_conjugate, CycleType, Partition, MAX_N,
};
