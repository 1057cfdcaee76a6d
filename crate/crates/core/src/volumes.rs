//! Closed-form volumes, maximal complexity for free products, the volume
//! estimator over a subgroup catalog, and the necessary inequalities that
//! every instance must satisfy.

use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::covering::{induce, InducedSplitting};
use crate::enumeration::{descending_chain_partial, FiniteQuotient, SubgroupCatalog};
use crate::gog::{EdgeStabilizer, GraphOfGroups, PhiTable, RankInfo, Skeleton, StabilizerDescriptor};
use crate::rational::{self, Exact};
use crate::{Caps, Error, Rational, Result};

/// An exact value together with the name of the formula that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedForm {
    pub value: Rational,
    pub formula: &'static str,
}

pub const FORMULA_EDGE_VERTEX_SUM: &str = "edge_vertex_sum";
pub const FORMULA_AMALGAM: &str = "amalgam";
pub const FORMULA_HNN: &str = "hnn";
pub const FORMULA_FINITE: &str = "finite_group";

/// Maximal complexity of the group split by `s`, for splittings with
/// trivial edge groups: the number of Grushko factors, counting each free
/// generator once. The trivial group counts as 1.
pub fn cmax_oracle(s: &Skeleton) -> Result<u64> {
    if let Some(e) = s.edges.iter().find(|e| !e.stabilizer.is_trivial()) {
        return Err(Error::Unsupported(format!(
            "maximal complexity needs trivial edge groups, edge `{}` has a nontrivial one",
            e.id
        )));
    }
    let mut count = s.graph_rank()?;
    for v in &s.vertices {
        count += match &v.descriptor {
            StabilizerDescriptor::Finite { order, .. } => u64::from(*order > 1),
            StabilizerDescriptor::FreeRank(r) => *r,
            StabilizerDescriptor::CyclicZ => 1,
            StabilizerDescriptor::FreeAbelianRank(r) => u64::from(*r > 0),
            StabilizerDescriptor::SurfaceGenus(g) => u64::from(*g > 0),
            StabilizerDescriptor::Opaque { one_ended: true, .. } => 1,
            StabilizerDescriptor::Opaque { .. } => {
                return Err(Error::Unsupported(format!(
                    "maximal complexity of the opaque group at `{}` is unknown",
                    v.id
                )))
            }
        };
    }
    Ok(count.max(1))
}

/// Maximal complexity of a single group.
pub fn cmax_descriptor(d: &StabilizerDescriptor) -> Result<u64> {
    cmax_oracle(&Skeleton {
        vertices: vec![crate::gog::SkeletonVertex { id: "v".into(), descriptor: d.clone(), phi_override: None }],
        edges: vec![],
    })
}

/// `Σ_e 1/|G_e| - Σ_{finite v} 1/|G_v|` for splittings with finite edge groups
/// whose infinite vertex groups are infinite cyclic or one-ended.
pub fn closed_form_vfin_skeleton(s: &Skeleton) -> Result<ClosedForm> {
    if s.edges.is_empty() {
        return Err(Error::Inapplicable("the splitting has no edges".into()));
    }
    let mut value = Rational::zero();
    for e in &s.edges {
        let order = e
            .stabilizer
            .order()
            .ok_or_else(|| Error::Inapplicable(format!("edge `{}` has an infinite group", e.id)))?;
        value += rational::frac(1, order as i64);
    }
    for v in &s.vertices {
        let d = &v.descriptor;
        let order = match d {
            StabilizerDescriptor::Finite { order, .. } => Some(*order),
            StabilizerDescriptor::FreeRank(0)
            | StabilizerDescriptor::FreeAbelianRank(0)
            | StabilizerDescriptor::SurfaceGenus(0) => Some(1),
            _ if d.is_z_like() || d.is_one_ended() => None,
            _ => {
                return Err(Error::Inapplicable(format!(
                    "vertex `{}` ({d}) is neither finite, infinite cyclic nor one-ended",
                    v.id
                )))
            }
        };
        if let Some(n) = order {
            value -= rational::frac(1, n as i64);
        }
    }
    Ok(ClosedForm { value, formula: FORMULA_EDGE_VERTEX_SUM })
}

pub fn closed_form_vfin(y: &GraphOfGroups) -> Result<ClosedForm> {
    closed_form_vfin_skeleton(&y.skeleton()?)
}

/// `vA + vB + 1/|H|` for an amalgam, `vA + 1/|H|` for an HNN extension
/// (`v_b = None`).
pub fn closed_form_amalgam(v_a: &Rational, v_b: Option<&Rational>, h_order: u64) -> Result<ClosedForm> {
    if h_order == 0 {
        return Err(Error::Precondition("edge group order must be positive".into()));
    }
    let mut value = v_a + rational::frac(1, h_order as i64);
    let formula = match v_b {
        Some(b) => {
            value += b;
            FORMULA_AMALGAM
        }
        None => FORMULA_HNN,
    };
    Ok(ClosedForm { value, formula })
}

pub fn finite_group_volume(order: u64) -> Result<ClosedForm> {
    if order == 0 {
        return Err(Error::Precondition("group order must be positive".into()));
    }
    Ok(ClosedForm { value: rational::frac(1, order as i64), formula: FORMULA_FINITE })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum VolumeMode {
    /// Maximal complexity of the kernel.
    Plain,
    /// Weighted complexity of the reduced induced splitting.
    Weighted,
}

impl VolumeMode {
    pub fn from_name(name: &str) -> Result<Self> {
        match name {
            "plain" => Ok(VolumeMode::Plain),
            "weighted" => Ok(VolumeMode::Weighted),
            other => Err(Error::Configuration(format!("unknown mode `{other}` (expected plain or weighted)"))),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            VolumeMode::Plain => "plain",
            VolumeMode::Weighted => "weighted",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EstimateRow {
    pub quotient_id: String,
    pub index: u64,
    pub complexity: Exact,
    pub ratio: Exact,
    pub residual: Option<Exact>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SkippedRow {
    pub quotient_id: String,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VolumeEstimate {
    pub mode: VolumeMode,
    pub phi: String,
    pub rows: Vec<EstimateRow>,
    /// Rows for the descending chain of intersections, ids `chain{n}`.
    pub chain: Vec<EstimateRow>,
    /// Why the chain stopped before the catalog's maximal index, if it did.
    pub chain_truncated: Option<String>,
    pub closed_form: Option<Exact>,
    pub closed_form_formula: Option<&'static str>,
    pub skipped: Vec<SkippedRow>,
    /// The last chain ratio.
    pub estimate: Option<Exact>,
}

/// The complexity value the estimator divides by the index.
pub fn kernel_complexity(y: &GraphOfGroups, q: &FiniteQuotient, mode: VolumeMode, phi: &PhiTable) -> Result<Rational> {
    let s = induce(y, q)?;
    match mode {
        VolumeMode::Plain => Ok(rational::int(cmax_oracle(&s.skeleton())? as i64)),
        VolumeMode::Weighted => s.skeleton().reduce()?.0.weighted_complexity(phi),
    }
}

fn make_row(id: &str, index: u64, value: Rational, closed: Option<&Rational>) -> EstimateRow {
    let ratio = &value / rational::int(index as i64);
    EstimateRow {
        quotient_id: id.to_string(),
        index,
        residual: closed.map(|c| Exact(&ratio - c)),
        complexity: Exact(value),
        ratio: Exact(ratio),
    }
}

fn rows_for(
    y: &GraphOfGroups,
    qs: &[&FiniteQuotient],
    mode: VolumeMode,
    phi: &PhiTable,
    closed: Option<&Rational>,
) -> Result<(Vec<EstimateRow>, Vec<SkippedRow>)> {
    let results: Vec<Result<Rational>> = qs.par_iter().map(|q| kernel_complexity(y, q, mode, phi)).collect();
    let mut rows = Vec::new();
    let mut skipped = Vec::new();
    for (q, r) in qs.iter().zip(results) {
        match r {
            Ok(v) => rows.push(make_row(q.id(), q.index(), v, closed)),
            Err(Error::Unsupported(reason)) if mode == VolumeMode::Plain => {
                skipped.push(SkippedRow { quotient_id: q.id().to_string(), reason })
            }
            Err(e) => return Err(e),
        }
    }
    Ok((rows, skipped))
}

/// Ratios `complexity / index` over the catalog and along its descending
/// chain. In plain mode kernels outside the supported classes are skipped and
/// listed, and residuals against the closed form are attached when it
/// applies.
pub fn estimate_volume(
    y: &GraphOfGroups,
    catalog: &SubgroupCatalog,
    mode: VolumeMode,
    phi: &PhiTable,
    caps: &Caps,
) -> Result<VolumeEstimate> {
    if catalog.presentation() != y.ambient() {
        return Err(Error::Precondition("catalog is for a different presentation".into()));
    }
    let closed = match mode {
        VolumeMode::Plain => closed_form_vfin(y).ok(),
        VolumeMode::Weighted => None,
    };
    let closed_value = closed.as_ref().map(|c| &c.value);
    let entries: Vec<&FiniteQuotient> = catalog.entries().iter().collect();
    let (mut rows, mut skipped) = rows_for(y, &entries, mode, phi, closed_value)?;
    rows.sort_by(|a, b| (a.index, &a.quotient_id).cmp(&(b.index, &b.quotient_id)));

    let (steps, stop) = descending_chain_partial(catalog, caps);
    let chain_quotients: Vec<&FiniteQuotient> = steps.iter().map(|s| &s.quotient).collect();
    let (chain, chain_skipped) = rows_for(y, &chain_quotients, mode, phi, closed_value)?;
    skipped.extend(chain_skipped);
    let chain_truncated = match stop {
        None => None,
        Some(e @ Error::Resource { .. }) => Some(e.to_string()),
        Some(e) => return Err(e),
    };
    Ok(VolumeEstimate {
        mode,
        phi: phi.name().to_string(),
        estimate: chain.last().map(|r| r.ratio.clone()),
        rows,
        chain,
        chain_truncated,
        closed_form: closed.as_ref().map(|c| Exact(c.value.clone())),
        closed_form_formula: closed.map(|c| c.formula),
        skipped,
    })
}

/// Every weighted ratio over the catalog is at least `φ(G_v)`.
pub fn weighted_lower_bound_check(
    y: &GraphOfGroups,
    catalog: &SubgroupCatalog,
    phi: &PhiTable,
    vertex: &str,
) -> Result<bool> {
    let base = y.skeleton()?;
    if !base.is_reduced() {
        return Err(Error::Precondition("the splitting is not reduced".into()));
    }
    if y.acylindricity_k().is_none() {
        return Err(Error::Inapplicable("no acylindricity constant is declared".into()));
    }
    if let Some(e) = base.edges.iter().find(|e| !e.stabilizer.is_infinite_abelian()) {
        return Err(Error::Inapplicable(format!("edge `{}` is not infinite abelian", e.id)));
    }
    let v = base
        .vertex_position(vertex)
        .ok_or_else(|| Error::Precondition(format!("no vertex `{vertex}`")))?;
    let bound = base.vertex_phi(v, phi)?;
    if !bound.is_positive() {
        return Err(Error::Precondition(format!("φ of vertex `{vertex}` is not positive")));
    }
    let values: Vec<Result<bool>> = catalog
        .entries()
        .par_iter()
        .map(|q| {
            let c = kernel_complexity(y, q, VolumeMode::Weighted, phi)?;
            Ok(c / rational::int(q.index() as i64) >= bound)
        })
        .collect();
    values.into_iter().try_fold(true, |acc, r| Ok(acc && r?))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeidmannReport {
    pub rhs: Exact,
    /// Generator count of the ambient presentation, an upper bound on its rank.
    pub gen_upper: u64,
    pub satisfied: bool,
}

fn exact_rank(d: &StabilizerDescriptor, what: &str) -> Result<u64> {
    match d.rank() {
        RankInfo::Exact(r) => Ok(r),
        RankInfo::Upper(_) => Err(Error::Inapplicable(format!("rank of {what} is only bounded above"))),
    }
}

/// The lower bound on the rank of an acylindrical splitting, checked against
/// the generator count.
pub fn check_weidmann(y: &GraphOfGroups) -> Result<WeidmannReport> {
    let s = y.skeleton()?;
    if let Some(e) = s.edges.iter().find(|e| e.stabilizer.is_trivial()) {
        return Err(Error::Precondition(format!("edge `{}` has a trivial group", e.id)));
    }
    let k = y
        .acylindricity_k()
        .ok_or_else(|| Error::Precondition("no acylindricity constant is declared".into()))? as i64;
    let mut sum: i64 = 0;
    for v in &s.vertices {
        sum += exact_rank(&v.descriptor, &format!("vertex `{}`", v.id))? as i64;
    }
    for e in &s.edges {
        sum -= e.stabilizer.rank() as i64;
    }
    sum += 2 * s.edges.len() as i64 + s.graph_rank()? as i64 + 1 + 3 * k - k / 2;
    let rhs = rational::frac(sum, 2 * k + 1);
    let gen_upper = y.ambient().rank_upper_bound() as u64;
    Ok(WeidmannReport { satisfied: rational::int(gen_upper as i64) >= rhs, rhs: Exact(rhs), gen_upper })
}

/// `index * (gens - 1) + 1`, the Reidemeister–Schreier bound on the rank of
/// a subgroup of the given index.
pub fn reidemeister_schreier_bound(index: u64, gens: u64) -> u64 {
    index * gens.saturating_sub(1) + 1
}

fn declared_k(s: &InducedSplitting) -> Result<i64> {
    match s.acylindricity_k {
        Some(k) if k >= 1 => Ok(k as i64),
        Some(_) => Err(Error::Inapplicable("acylindricity constant is zero".into())),
        None => Err(Error::Inapplicable("no acylindricity constant is declared".into())),
    }
}

/// At most `2k(r - 1) + 1` vertices in the reduced induced splitting, with
/// `r_upper` bounding the rank of the kernel.
pub fn check_acyl_accessibility(s: &InducedSplitting, r_upper: u64) -> Result<bool> {
    let k = declared_k(s)?;
    let reduced = s.skeleton().reduce()?.0;
    Ok(reduced.vertices.len() as i64 <= 2 * k * (r_upper as i64 - 1) + 1)
}

/// `Σ_v r(H_v) ≤ (2k + n) r + (n - 2) 2k (r - 1)` over the reduced induced
/// splitting, with `r_upper` for `r`.
pub fn check_rank_sum_bound(s: &InducedSplitting, r_upper: u64) -> Result<bool> {
    let k = declared_k(s)?;
    let reduced = s.skeleton().reduce()?.0;
    if reduced.edges.is_empty() {
        return Err(Error::Inapplicable("the reduced splitting has no edges".into()));
    }
    let n = s.edge_rank_bound_n as i64;
    if let Some(e) = reduced.edges.iter().find(|e| !e.stabilizer.is_abelian() || e.stabilizer.rank() as i64 > n) {
        return Err(Error::Inapplicable(format!(
            "edge `{}` is not abelian of rank at most {n}",
            e.id
        )));
    }
    let mut sum: i64 = 0;
    for v in &reduced.vertices {
        sum += exact_rank(&v.descriptor, &format!("vertex `{}`", v.id))? as i64;
    }
    let r = r_upper as i64;
    Ok(sum <= (2 * k + n) * r + (n - 2) * 2 * k * (r - 1))
}

/// Every ratio is at most `m * gen_upper + 1`.
pub fn check_vfinm_bound(estimate: &VolumeEstimate, m: u64, gen_upper: u64) -> bool {
    let bound = rational::int((m * gen_upper + 1) as i64);
    estimate.rows.iter().chain(&estimate.chain).all(|r| r.ratio.0 <= bound)
}

/// The closed form of the kernel's induced splitting is `index` times that
/// of `y`.
pub fn check_multiplicativity(y: &GraphOfGroups, q: &FiniteQuotient) -> Result<bool> {
    let base = closed_form_vfin(y)?;
    let s = induce(y, q)?;
    let lifted = closed_form_vfin_skeleton(&s.skeleton())?;
    Ok(lifted.value == base.value * rational::int(q.index() as i64))
}

/// Largest order of a finite edge group, 1 if all are trivial, `None` if any
/// is infinite.
pub fn max_finite_edge_order(y: &GraphOfGroups) -> Result<Option<u64>> {
    let s = y.skeleton()?;
    let mut m = 1;
    for e in &s.edges {
        match e.stabilizer {
            EdgeStabilizer::Trivial => {}
            EdgeStabilizer::Finite { order, .. } => m = m.max(order),
            _ => return Ok(None),
        }
    }
    Ok(Some(m))
}

/// Sum of `r - 1` over free vertex groups, a lower bound for weighted
/// complexity with the default table.
pub fn free_vertex_phi_sum(y: &GraphOfGroups) -> Result<Rational> {
    let s = y.skeleton()?;
    Ok(s.vertices
        .iter()
        .map(|v| match v.descriptor {
            StabilizerDescriptor::FreeRank(r) if r >= 1 => rational::int(r as i64 - 1),
            _ => Rational::zero(),
        })
        .fold(Rational::zero(), |a, b| a + b))
}
