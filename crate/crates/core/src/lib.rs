pub mod arith;
pub mod chartab;
pub mod error;
pub mod groupcore;
pub mod structure;
pub mod symchar;
pub mod theorems;
pub mod toolkit;
pub mod vanish;

pub use error::{Error, Result};
