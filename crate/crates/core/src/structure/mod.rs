//! Structural tests on enumerated groups: series, solubility, supersolubility,
//! nilpotency, Fitting subgroup, normal `p`-complements, quotients, and the
//! structure of minimally non-supersoluble soluble groups.
//!
//! Normal subgroups are found as normal closures of conjugacy classes and
//! their joins; no full subgroup lattice is built.

mod formation;
mod quotient;
mod series;
mod subgroup;

pub use formation::{
    find_complement, is_maximal, verify_formation_lemma, FormationFindings, FormationReport, FORMATION_ORDER_BOUND,
};
pub use quotient::{quotient, Quotient};
pub use series::{
    center, chief_factor_orders_above, chief_series, derived_series, derived_subgroup, elementary_abelian_prime,
    fitting_subgroup, has_normal_p_complement, is_nilpotent, is_soluble, is_supersoluble, minimal_normal_subgroups,
    normal_subgroups, o_p, subgroup_from_elements, NormalSeries,
};
pub use subgroup::{generated_subgroup, is_normal, join, normal_closure, Subgroup};
