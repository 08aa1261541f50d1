use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::prime_divisors;
use crate::chartab::{check_table_invariants, TableInvariants};
use crate::error::Result;
use crate::groupcore::DEFAULT_ORDER_CAP;
use crate::theorems::{check_all, GroupAnalysis, TheoremReport};
use crate::toolkit::GroupDefinition;
use crate::vanish::check_brauer_vanishing;

#[derive(Clone, Copy, Debug)]
pub struct ScanOptions {
    pub order_cap: usize,
}

impl Default for ScanOptions {
    fn default() -> Self {
        Self { order_cap: DEFAULT_ORDER_CAP }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BrauerCheck {
    pub prime: u64,
    pub holds: bool,
}

/// Everything the scan learned about one group, or why it could not.
#[derive(Clone, Debug, Serialize)]
pub struct GroupScan {
    pub name: String,
    pub order: Option<usize>,
    pub error: Option<String>,
    pub table_invariants: Option<TableInvariants>,
    pub brauer: Vec<BrauerCheck>,
    pub reports: Vec<TheoremReport>,
}

impl GroupScan {
    pub fn inconsistent(&self) -> impl Iterator<Item = &TheoremReport> {
        self.reports.iter().filter(|r| !r.consistent)
    }

    /// Table identities and Brauer vanishing all hold.
    pub fn invariants_hold(&self) -> bool {
        self.table_invariants.is_some_and(|t| t.passed()) && self.brauer.iter().all(|b| b.holds)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanReport {
    pub groups: Vec<GroupScan>,
}

impl ScanReport {
    pub fn inconsistent_count(&self) -> usize {
        self.groups.iter().map(|g| g.inconsistent().count()).sum()
    }

    pub fn report_count(&self) -> usize {
        self.groups.iter().map(|g| g.reports.len()).sum()
    }

    pub fn failures(&self) -> impl Iterator<Item = &GroupScan> {
        self.groups.iter().filter(|g| g.error.is_some())
    }
}

/// Runs every checker on every group in parallel; results are sorted by name.
pub fn scan_catalog(catalog: &[GroupDefinition], options: ScanOptions) -> ScanReport {
    let mut groups: Vec<GroupScan> = catalog.par_iter().map(|def| scan_one(def, options)).collect();
    groups.sort_by(|a, b| a.name.cmp(&b.name));
    ScanReport { groups }
}

fn scan_one(def: &GroupDefinition, options: ScanOptions) -> GroupScan {
    let mut scan = GroupScan {
        name: def.name.clone(),
        order: None,
        error: None,
        table_invariants: None,
        brauer: Vec::new(),
        reports: Vec::new(),
    };
    if let Err(e) = fill(def, options, &mut scan) {
        scan.error = Some(e.to_string());
    }
    scan
}

fn fill(def: &GroupDefinition, options: ScanOptions, scan: &mut GroupScan) -> Result<()> {
    let group = def.build(options.order_cap)?;
    scan.order = Some(group.order());
    let analysis = GroupAnalysis::new(group)?;
    scan.table_invariants = Some(check_table_invariants(&analysis.table));
    for q in prime_divisors(analysis.group.order() as u64) {
        scan.brauer.push(BrauerCheck { prime: q, holds: check_brauer_vanishing(&analysis.table, q)? });
    }
    scan.reports = check_all(&analysis)?;
    Ok(())
}
