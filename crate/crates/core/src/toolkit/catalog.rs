use crate::toolkit::definition::GroupDefinition;

/// Expectation tags understood by the catalog tests.
///
/// Each group carries exactly one structural tag naming the strongest
/// property among abelian, nilpotent, supersoluble and soluble, or one of
/// `simple` and `non-soluble`.
pub mod tags {
    pub const ABELIAN: &str = "abelian";
    pub const NILPOTENT: &str = "nilpotent";
    pub const SUPERSOLUBLE: &str = "supersoluble";
    pub const SOLUBLE: &str = "soluble";
    pub const NON_SOLUBLE: &str = "non-soluble";
    pub const SIMPLE: &str = "simple";
    pub const NO_2_DEFECT_ZERO: &str = "no-2-defect-zero";
    pub const NO_3_DEFECT_ZERO: &str = "no-3-defect-zero";
    /// `vanishing=a,b,c`: sorted vanishing class sizes.
    pub const VANISHING: &str = "vanishing";
    /// `order=n`.
    pub const ORDER: &str = "order";
}

/// Groups of order at most 2520 covering the worked examples and proof fixtures.
pub fn builtin_catalog() -> Vec<GroupDefinition> {
    use tags::*;
    vec![
        GroupDefinition::new("Sym3", 3, &["(1,2)", "(1,2,3)"], &["order=6", SUPERSOLUBLE, "vanishing=3"]),
        GroupDefinition::new("Sym4", 4, &["(1,2,3,4)", "(1,2)"], &["order=24", SOLUBLE]),
        GroupDefinition::new("Sym5", 5, &["(1,2,3,4,5)", "(1,2)"], &["order=120", NON_SOLUBLE]),
        GroupDefinition::new("Alt4", 4, &["(1,2,3)", "(2,3,4)"], &["order=12", SOLUBLE, "vanishing=4,4"]),
        GroupDefinition::new("Alt5", 5, &["(1,2,3,4,5)", "(1,2,3)"], &["order=60", SIMPLE]),
        GroupDefinition::new("Alt6", 6, &["(1,2,3,4,5)", "(4,5,6)"], &["order=360", SIMPLE]),
        GroupDefinition::new(
            "Alt7",
            7,
            &["(1,2,3,4,5,6,7)", "(1,2,3)"],
            &["order=2520", SIMPLE, NO_2_DEFECT_ZERO, NO_3_DEFECT_ZERO],
        ),
        GroupDefinition::new(
            "C5xC4_semidirect",
            5,
            &["(1,2,3,4,5)", "(2,3,5,4)"],
            &["order=20", SUPERSOLUBLE, "vanishing=5,5,5"],
        ),
        GroupDefinition::new("SL23", 8, &["(1,4,7)(2,8,5)", "(1,6,2,3)(4,7,8,5)"], &["order=24", SOLUBLE]),
        GroupDefinition::new(
            "GL23",
            8,
            &["(1,4,7)(2,8,5)", "(1,6,2,3)(4,7,8,5)", "(3,6)(4,7)(5,8)"],
            &["order=48", SOLUBLE],
        ),
        GroupDefinition::new(
            "Q8",
            8,
            &["(1,2,3,4)(5,6,7,8)", "(1,5,3,7)(2,8,4,6)"],
            &["order=8", NILPOTENT, "vanishing=2,2,2"],
        ),
        GroupDefinition::new("D8", 4, &["(1,2,3,4)", "(1,3)"], &["order=8", NILPOTENT, "vanishing=2,2,2"]),
        GroupDefinition::new("C12", 12, &["(1,2,3,4,5,6,7,8,9,10,11,12)"], &["order=12", ABELIAN]),
        GroupDefinition::new("C2xC2", 4, &["(1,2)", "(3,4)"], &["order=4", ABELIAN]),
        GroupDefinition::new("C6", 6, &["(1,2,3,4,5,6)"], &["order=6", ABELIAN]),
        GroupDefinition::new("C3xC3", 6, &["(1,2,3)", "(4,5,6)"], &["order=9", ABELIAN]),
        GroupDefinition::new("D10", 5, &["(1,2,3,4,5)", "(2,5)(3,4)"], &["order=10", SUPERSOLUBLE]),
        GroupDefinition::new("PSL27", 8, &["(1,2,3,4,5,6,7)", "(1,8)(2,7)(3,4)(5,6)"], &["order=168", SIMPLE]),
        GroupDefinition::new("Frob21", 7, &["(1,2,3,4,5,6,7)", "(2,3,5)(4,7,6)"], &["order=21", SUPERSOLUBLE]),
        GroupDefinition::new("Sym3xC3", 6, &["(1,2)", "(1,2,3)", "(4,5,6)"], &["order=18", SUPERSOLUBLE]),
        GroupDefinition::new("Sym3xSym3", 6, &["(1,2)", "(1,2,3)", "(4,5)", "(4,5,6)"], &["order=36", SUPERSOLUBLE]),
    ]
}

/// Larger groups outside the default scan.
pub fn stretch_catalog() -> Vec<GroupDefinition> {
    vec![GroupDefinition::new(
        "M12",
        12,
        &["(1,2,3,4,5,6,7,8,9,10,11)", "(3,7,11,8)(4,10,5,6)", "(1,12)(2,11)(3,6)(4,8)(5,9)(7,10)"],
        &["order=95040", tags::SIMPLE, tags::NO_2_DEFECT_ZERO],
    )]
}

/// Looks a name up in the built-in and stretch catalogs.
pub fn find_builtin(name: &str) -> Option<GroupDefinition> {
    builtin_catalog().into_iter().chain(stretch_catalog()).find(|d| d.name == name)
}
