//! Group files, the built-in catalog, analysis bundles, the result cache and the CLI.

pub mod bundle;
pub mod cache;
pub mod catalog;
pub mod cli;
pub mod definition;
pub mod lemmas;
pub mod render;

pub use bundle::{AnalysisBundle, ClassData, TableData, Timing, TOOLKIT_VERSION};
pub use cache::{Cache, CACHE_ENV};
pub use catalog::{builtin_catalog, find_builtin, stretch_catalog, tags};
pub use cli::{run_cli, run_cli_with};
pub use definition::{load_group_file, parse_group_file, GroupDefinition};
pub use lemmas::{verify_lemmas, LemmaCheck};
