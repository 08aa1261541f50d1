//! Elements of Alt(5) of order divisible by q vanish in Sym(5) when Alt(5)
//! has a q-defect-zero character.

use vanishkit::toolkit::find_builtin;
use vanishkit::vanish::{check_minimal_normal_lift, LiftReport};

fn main() -> vanishkit::Result<()> {
    let sym5 = find_builtin("Sym5").expect("catalog entry").build(1000)?;
    let alt5 = find_builtin("Alt5").expect("catalog entry").permutations()?;
    for q in [2, 3, 5] {
        match check_minimal_normal_lift(&sym5, &alt5, q)? {
            LiftReport::Checked(f) => println!(
                "q={q}: defect-zero degrees {:?}, {} elements checked, non-vanishing classes {:?}",
                f.defect_zero_degrees, f.checked_elements, f.non_vanishing_classes
            ),
            LiftReport::NotApplicable { reason } => println!("q={q}: not applicable ({reason})"),
        }
    }
    Ok(())
}
