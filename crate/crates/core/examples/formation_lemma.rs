use vanishkit::structure::{verify_formation_lemma, FormationReport};
use vanishkit::toolkit::find_builtin;

fn main() -> vanishkit::Result<()> {
    for name in ["Alt4", "Sym4", "SL23", "Sym3"] {
        let group = find_builtin(name).expect("catalog entry").build(1000)?;
        match verify_formation_lemma(&group) {
            FormationReport::Checked(f) => println!(
                "{name}: F(G) of order {} unique minimal normal {}, elementary abelian for p={:?}, \
                 complement of order {:?} maximal {}",
                f.fitting_order,
                f.fitting_unique_minimal_normal,
                f.elementary_abelian_prime,
                f.complement_order,
                f.complement_maximal
            ),
            FormationReport::NotApplicable { reason } => println!("{name}: not applicable, {reason}"),
        }
    }
    Ok(())
}
