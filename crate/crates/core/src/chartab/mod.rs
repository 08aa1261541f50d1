//! Exact irreducible character tables by the Burnside–Dixon–Schneider method.
//!
//! Class multiplication coefficients give commuting matrices whose common
//! eigenvectors over a suitable prime field are the central characters.
//! Degrees and values follow modulo the prime, and exact cyclotomic values
//! are recovered from the values on powers of each class representative.

mod constants;
mod cyclotomic;
mod modular;
mod table;

pub use constants::{class_structure_constants, StructureConstants};
pub use cyclotomic::{cyclotomic_polynomial, CyclotomicInteger, CyclotomicRing};
pub use modular::{character_table_mod_p, dixon_prime, ModularTable};
pub use table::{
    character_table, character_table_with_classes, check_table_invariants, lift_character_table, verify_orthogonality,
    CharacterTable, TableInvariants,
};
