use serde::Serialize;

use crate::chartab::character_table;
use crate::error::Result;
use crate::structure::{normal_subgroups, verify_formation_lemma};
use crate::toolkit::catalog::find_builtin;
use crate::vanish::{
    check_alt_restriction, check_minimal_normal_lift, check_quotient_compatibility, defect_zero_characters,
    RESTRICTION_MAX_N,
};

#[derive(Clone, Debug, Serialize)]
pub struct LemmaCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn builtin(name: &str, cap: usize) -> Result<crate::groupcore::GroupTable> {
    find_builtin(name).ok_or_else(|| crate::Error::UnknownGroup(name.into()))?.build(cap)
}

/// Runs the supporting lemmas on their fixture groups.
pub fn verify_lemmas(order_cap: usize) -> Result<Vec<LemmaCheck>> {
    let mut out = Vec::new();

    let sym5 = builtin("Sym5", order_cap)?;
    let alt5_gens = find_builtin("Alt5").expect("catalog").permutations()?;
    for q in [2, 3, 5] {
        let report = check_minimal_normal_lift(&sym5, &alt5_gens, q)?;
        out.push(LemmaCheck {
            name: format!("lifting: Alt5 in Sym5, q={q}"),
            passed: report.passed(),
            detail: serde_json::to_string(&report)?,
        });
    }

    for name in ["Alt4", "Sym4"] {
        let report = verify_formation_lemma(&builtin(name, order_cap)?);
        out.push(LemmaCheck {
            name: format!("formation: {name}"),
            passed: report.passed(),
            detail: serde_json::to_string(&report)?,
        });
    }

    for (name, lacking) in [("Alt5", vec![]), ("Alt6", vec![]), ("Alt7", vec![2, 3])] {
        let table = character_table(&builtin(name, order_cap)?)?;
        let mut missing = Vec::new();
        for q in crate::arith::prime_divisors(table.group_order() as u64) {
            if defect_zero_characters(&table, q)?.is_empty() {
                missing.push(q);
            }
        }
        out.push(LemmaCheck {
            name: format!("defect zero: {name}"),
            passed: missing == lacking,
            detail: format!("primes without a defect-zero character: {missing:?}"),
        });
    }

    for n in 3..=RESTRICTION_MAX_N {
        let report = check_alt_restriction(n)?;
        out.push(LemmaCheck {
            name: format!("restriction: Sym{n} to Alt{n}"),
            passed: report.passed(),
            detail: serde_json::to_string(&report)?,
        });
    }

    for name in ["Sym4", "SL23", "Sym3xSym3"] {
        let g = builtin(name, order_cap)?;
        let table = character_table(&g)?;
        let mut ok = true;
        let mut notes = Vec::new();
        for n in normal_subgroups(&g).iter().filter(|n| !n.is_trivial()) {
            let r = check_quotient_compatibility(&g, &table, n)?;
            ok &= r.forward_holds() && r.divisibility_holds;
            notes.push(format!("|N|={}: {} classes vanish only upstairs", n.order(), r.backward_exceptions.len()));
        }
        out.push(LemmaCheck { name: format!("quotients: {name}"), passed: ok, detail: notes.join("; ") });
    }
    Ok(out)
}
