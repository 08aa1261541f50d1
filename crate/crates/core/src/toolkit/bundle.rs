use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::chartab::CyclotomicInteger;
use crate::error::Result;
use crate::theorems::{check_all, GroupAnalysis, TheoremReport};
use crate::toolkit::definition::GroupDefinition;
use crate::vanish::VanishingReport;

pub const BUNDLE_FORMAT: u32 = 1;
pub const TOOLKIT_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassData {
    pub representatives: Vec<String>,
    pub sizes: Vec<usize>,
    pub centralizer_orders: Vec<usize>,
    pub element_orders: Vec<usize>,
}

/// Exact character values; each entry is `{order, coeffs}` in the power basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableData {
    pub conductor: usize,
    pub prime: u64,
    pub degrees: Vec<u64>,
    pub values: Vec<Vec<CyclotomicInteger>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timing {
    pub analysis_micros: u64,
}

/// Self-describing record of one group's analysis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisBundle {
    pub format: u32,
    pub toolkit_version: String,
    pub group: GroupDefinition,
    pub order: usize,
    pub classes: ClassData,
    pub character_table: TableData,
    pub vanishing: VanishingReport,
    pub theorems: Vec<TheoremReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing: Option<Timing>,
}

impl AnalysisBundle {
    pub fn from_analysis(def: &GroupDefinition, analysis: &GroupAnalysis) -> Result<Self> {
        let classes = analysis.table.classes();
        let table = &analysis.table;
        Ok(Self {
            format: BUNDLE_FORMAT,
            toolkit_version: TOOLKIT_VERSION.to_string(),
            group: def.clone(),
            order: analysis.group.order(),
            classes: ClassData {
                representatives: classes.representatives().iter().map(|x| x.to_string()).collect(),
                sizes: classes.sizes().to_vec(),
                centralizer_orders: classes.centralizer_orders().to_vec(),
                element_orders: classes.element_orders().to_vec(),
            },
            character_table: TableData {
                conductor: table.conductor(),
                prime: table.prime(),
                degrees: table.degrees().to_vec(),
                values: table.values().to_vec(),
            },
            vanishing: analysis.vanishing.clone(),
            theorems: check_all(analysis)?,
            timing: None,
        })
    }

    /// Builds the group and runs the full analysis.
    pub fn compute(def: &GroupDefinition, order_cap: usize, timing: bool) -> Result<Self> {
        let start = Instant::now();
        let analysis = GroupAnalysis::new(def.build(order_cap)?)?;
        let mut bundle = Self::from_analysis(def, &analysis)?;
        if timing {
            bundle.timing = Some(Timing { analysis_micros: start.elapsed().as_micros() as u64 });
        }
        Ok(bundle)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)? + "\n")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}
