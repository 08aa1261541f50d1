//! Plain-text views of bundles and reports.

use std::fmt::Write;

use crate::symchar::AltTableReport;
use crate::theorems::{Detail, ScanReport, TheoremReport};
use crate::toolkit::bundle::AnalysisBundle;

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

pub fn classes(b: &AnalysisBundle) -> String {
    let c = &b.classes;
    let mut out = format!("group {} (order {}, {} classes)\n", b.group.name, b.order, c.sizes.len());
    out.push_str("class  order  size  centralizer  representative\n");
    for i in 0..c.sizes.len() {
        let _ = writeln!(
            out,
            "{i:>5}  {:>5}  {:>4}  {:>11}  {}",
            c.element_orders[i], c.sizes[i], c.centralizer_orders[i], c.representatives[i]
        );
    }
    let _ = writeln!(out, "sizes: {}", join(&c.sizes));
    out
}

pub fn chartable(b: &AnalysisBundle) -> String {
    let t = &b.character_table;
    let k = t.degrees.len();
    let cells: Vec<Vec<String>> = t.values.iter().map(|row| row.iter().map(ToString::to_string).collect()).collect();
    let width: Vec<usize> =
        (0..k).map(|c| cells.iter().map(|row| row[c].len()).max().unwrap_or(1).max(format!("c{c}").len())).collect();
    let label = format!("chi{}", k.saturating_sub(1)).len();
    let mut out = format!("group {} (order {}, conductor {}, prime {})\n", b.group.name, b.order, t.conductor, t.prime);
    let _ = write!(out, "{:label$}", "");
    for (c, w) in width.iter().enumerate() {
        let _ = write!(out, "  {:>w$}", format!("c{c}"));
    }
    out.push('\n');
    for (r, row) in cells.iter().enumerate() {
        let _ = write!(out, "{:label$}", format!("chi{r}"));
        for (cell, w) in row.iter().zip(&width) {
            let _ = write!(out, "  {cell:>w$}");
        }
        out.push('\n');
    }
    out
}

pub fn vanishing(b: &AnalysisBundle) -> String {
    let v = &b.vanishing;
    let mut out = format!("group {}: {} vanishing classes\n", b.group.name, v.vanishing_class_indices.len());
    for (&c, &r) in &v.witnesses {
        let _ = writeln!(
            out,
            "class {c}  size {}  order {}  zero in chi{r}",
            b.classes.sizes[c], b.classes.element_orders[c]
        );
    }
    let _ = writeln!(out, "vanishing sizes: {}", join(&v.vanishing_class_sizes));
    out
}

pub fn defect_zero(b: &AnalysisBundle, rows: &[(u64, Vec<usize>)]) -> String {
    let mut out = format!("group {} (order {})\n", b.group.name, b.order);
    for (q, rows) in rows {
        if rows.is_empty() {
            let _ = writeln!(out, "q={q}: none");
        } else {
            let names: Vec<String> =
                rows.iter().map(|&r| format!("chi{r} (degree {})", b.character_table.degrees[r])).collect();
            let _ = writeln!(out, "q={q}: {}", names.join(", "));
        }
    }
    out
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "true"
    } else {
        "false"
    }
}

pub fn theorem(r: &TheoremReport) -> String {
    let prime = r.prime.map(|p| format!(" (p={p})")).unwrap_or_default();
    let mut out = format!("group {}, theorem {}{prime}\n", r.group, r.theorem);
    let _ = writeln!(out, "hypothesis: {}", yes_no(r.hypothesis_holds));
    for c in &r.clauses {
        let _ = writeln!(out, "  [{}] {}", if c.holds { "ok" } else { "fails" }, c.name);
    }
    let _ = writeln!(out, "conclusion: {}: {}", r.conclusion, yes_no(r.conclusion_holds));
    let _ = writeln!(out, "consistent: {}", yes_no(r.consistent));
    for d in &r.details {
        let line = match d {
            Detail::VanishingClass { class, size, element_order, witness_row } => format!(
                "witness: vanishing class {class} of size {size} (element order {element_order}, zero in chi{witness_row})"
            ),
            Detail::PrimeDoesNotDivideOrder { prime, order } => format!("{prime} does not divide |G| = {order}"),
            Detail::PrimeDividesPMinusOne { q, prime } => format!("prime divisor {q} of |G| divides {prime}-1"),
            Detail::NormalComplement { order } => format!("normal complement of order {order}"),
        };
        let _ = writeln!(out, "{line}");
    }
    out
}

pub fn scan(report: &ScanReport) -> String {
    let mut out = String::new();
    for g in &report.groups {
        match (&g.error, g.order) {
            (Some(e), _) => {
                let _ = writeln!(out, "{:<18} error: {e}", g.name);
            }
            (None, order) => {
                let bad = g.inconsistent().count();
                let hyp: Vec<String> = g
                    .reports
                    .iter()
                    .map(|r| {
                        let p = r.prime.map(|p| format!("({p})")).unwrap_or_default();
                        format!("{}{p}:{}", r.theorem, if r.hypothesis_holds { "H" } else { "-" })
                    })
                    .collect();
                let _ = writeln!(
                    out,
                    "{:<18} order {:>5}  invariants {}  inconsistent {bad}  {}",
                    g.name,
                    order.unwrap_or(0),
                    if g.invariants_hold() { "ok" } else { "FAILED" },
                    hyp.join(" ")
                );
            }
        }
    }
    let _ = writeln!(
        out,
        "{} groups, {} reports, {} inconsistent, {} failed",
        report.groups.len(),
        report.report_count(),
        report.inconsistent_count(),
        report.failures().count()
    );
    out
}

pub fn alt_table(r: &AltTableReport) -> String {
    let mut out = format!("n={} ({}): {}\n", r.n, r.case, if r.passed() { "pass" } else { "FAIL" });
    for p in &r.pairs {
        let _ = writeln!(
            out,
            "  {}: chi{} on {}  value {}  self-conjugate {}  |x^Sym| {} (table {})  |x^Alt| {}",
            p.label,
            p.sigma,
            p.cycle_type,
            p.value,
            yes_no(p.self_conjugate),
            p.sym_class_size,
            p.expected_sym_class_size,
            p.alt_class_size
        );
    }
    let _ = writeln!(
        out,
        "  case (1) via {}: 8 | |x^Sym| {}, 4 | |x^Alt| {}",
        r.case1_pair,
        yes_no(r.eight_divides_sym_size),
        yes_no(r.four_divides_alt_size)
    );
    let missing = r.missing_odd_primes();
    if !missing.is_empty() {
        let _ = writeln!(out, "  odd primes not dividing |x^Alt|: {}", join(&missing));
    }
    let case2: Vec<String> =
        r.primes.iter().map(|c| format!("{}:{}", c.prime, c.case2_witness.unwrap_or("none"))).collect();
    let _ = writeln!(out, "  case (2) witnesses: {}", case2.join(" "));
    out
}
