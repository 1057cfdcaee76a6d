//! Report records and their CSV and JSON renderings. Rationals are written
//! as numerator and denominator, never as decimals.

use serde::Serialize;

use crate::covering::InducedSplitting;
use crate::enumeration::SubgroupCatalog;
use crate::gog::{CollapseStep, InclusionIndex, PhiTable};
use crate::rational::Exact;
use crate::volumes::{EstimateRow, VolumeEstimate};
use crate::{Error, Result};

pub const ESTIMATE_HEADER: &str =
    "quotient_id,index,complexity_num,complexity_den,ratio_num,ratio_den,residual_num,residual_den";

fn csv_row(r: &EstimateRow) -> String {
    let (rn, rd) = match &r.residual {
        Some(x) => (x.0.numer().to_string(), x.0.denom().to_string()),
        None => (String::new(), String::new()),
    };
    format!(
        "{},{},{},{},{},{},{rn},{rd}",
        r.quotient_id,
        r.index,
        r.complexity.0.numer(),
        r.complexity.0.denom(),
        r.ratio.0.numer(),
        r.ratio.0.denom()
    )
}

/// Catalog rows followed by chain rows.
pub fn estimate_csv(e: &VolumeEstimate) -> String {
    let mut out = String::from(ESTIMATE_HEADER);
    out.push('\n');
    for r in e.rows.iter().chain(&e.chain) {
        out.push_str(&csv_row(r));
        out.push('\n');
    }
    out
}

pub fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value).map_err(|e| Error::Io(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

#[derive(Debug, Clone, Serialize)]
pub struct ComplexityReport {
    pub graph_rank: u64,
    pub nondegenerate: u64,
    pub complexity: u64,
    pub phi: String,
    pub weighted_complexity: Exact,
    pub reduced: bool,
}

impl ComplexityReport {
    pub fn csv(&self) -> String {
        format!(
            "graph_rank,nondegenerate,complexity,weighted_num,weighted_den,reduced\n{},{},{},{},{},{}\n",
            self.graph_rank,
            self.nondegenerate,
            self.complexity,
            self.weighted_complexity.0.numer(),
            self.weighted_complexity.0.denom(),
            self.reduced
        )
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ReduceReport {
    /// The reduced splitting as an input document.
    pub splitting: String,
    pub trace: Vec<CollapseStep>,
}

impl ReduceReport {
    pub fn csv(&self) -> String {
        let mut out = String::from("edge,removed,kept,complexity_before,complexity_after\n");
        for s in &self.trace {
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                s.edge, s.removed, s.kept, s.complexity_before, s.complexity_after
            ));
        }
        out
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CatalogEntryRecord {
    pub id: String,
    pub index: u64,
    pub degree: usize,
    /// Generator images in cycle notation.
    pub images: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CatalogReport {
    pub kind: String,
    pub max_index: u64,
    pub entries: Vec<CatalogEntryRecord>,
}

impl CatalogReport {
    pub fn new(c: &SubgroupCatalog) -> Self {
        CatalogReport {
            kind: format!("{:?}", c.kind()).to_lowercase(),
            max_index: c.max_index(),
            entries: c
                .entries()
                .iter()
                .map(|q| CatalogEntryRecord {
                    id: q.id().to_string(),
                    index: q.index(),
                    degree: q.map().degree(),
                    images: q.images().iter().map(|p| p.to_string()).collect(),
                })
                .collect(),
        }
    }

    pub fn csv(&self) -> String {
        let mut out = String::from("quotient_id,index,degree,images\n");
        for e in &self.entries {
            out.push_str(&format!("{},{},{},{}\n", e.id, e.index, e.degree, e.images.join(" ; ")));
        }
        out
    }
}

fn index_text(i: InclusionIndex) -> String {
    match i {
        InclusionIndex::Finite(n) => n.to_string(),
        InclusionIndex::Infinite => "inf".into(),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct InducedVertexRecord {
    pub id: String,
    pub base: String,
    pub representative: String,
    pub stabilizer_index: u64,
    pub stabilizer: String,
    pub degenerate: bool,
    pub phi: Exact,
}

#[derive(Debug, Clone, Serialize)]
pub struct InducedEdgeRecord {
    pub id: String,
    pub base: String,
    pub representative: String,
    pub stabilizer_index: u64,
    pub source: String,
    pub target: String,
    pub source_index: String,
    pub target_index: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct InducedReport {
    pub quotient_id: String,
    pub index: u64,
    pub vertices: Vec<InducedVertexRecord>,
    pub edges: Vec<InducedEdgeRecord>,
    pub graph_rank: u64,
    pub complexity: u64,
    pub phi: String,
    pub weighted_complexity: Exact,
}

impl InducedReport {
    pub fn new(s: &InducedSplitting, phi: &PhiTable) -> Result<Self> {
        let phis = s.vertex_phis(phi)?;
        Ok(InducedReport {
            quotient_id: s.quotient_id.clone(),
            index: s.index,
            vertices: s
                .vertices
                .iter()
                .zip(phis)
                .map(|(v, p)| InducedVertexRecord {
                    id: v.id.clone(),
                    base: v.base.clone(),
                    representative: v.representative.to_string(),
                    stabilizer_index: v.stabilizer_index,
                    stabilizer: v.descriptor.to_string(),
                    degenerate: v.degenerate,
                    phi: Exact(p),
                })
                .collect(),
            edges: s
                .edges
                .iter()
                .map(|e| InducedEdgeRecord {
                    id: e.id.clone(),
                    base: e.base.clone(),
                    representative: e.representative.to_string(),
                    stabilizer_index: e.stabilizer_index,
                    source: s.vertices[e.source].id.clone(),
                    target: s.vertices[e.target].id.clone(),
                    source_index: index_text(e.source_index),
                    target_index: index_text(e.target_index),
                })
                .collect(),
            graph_rank: s.graph_rank(),
            complexity: s.complexity()?,
            phi: phi.name().to_string(),
            weighted_complexity: Exact(s.weighted_complexity(phi)?),
        })
    }

    /// The vertex table.
    pub fn csv(&self) -> String {
        let mut out = String::from("vertex_id,base,representative,stabilizer_index,stabilizer,degenerate,phi_num,phi_den\n");
        for v in &self.vertices {
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{}\n",
                v.id,
                v.base,
                v.representative,
                v.stabilizer_index,
                v.stabilizer,
                v.degenerate,
                v.phi.0.numer(),
                v.phi.0.denom()
            ));
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Inapplicable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    /// Name of the identity or inequality checked.
    pub name: String,
    pub status: CheckStatus,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }

    pub fn csv(&self) -> String {
        let mut out = String::from("check,status,detail\n");
        for c in &self.checks {
            let status = serde_json::to_value(c.status).ok().and_then(|v| v.as_str().map(String::from));
            out.push_str(&format!("{},{},\"{}\"\n", c.name, status.unwrap_or_default(), c.detail.replace('"', "'")));
        }
        out
    }
}
