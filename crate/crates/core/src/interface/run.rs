//! Command runner shared by the binary and the tests.

use std::path::PathBuf;

use num_traits::Signed;
use rayon::prelude::*;

use super::builtin::builtin;
use super::document::{parse_document, serialize_document};
use super::report::{
    estimate_csv, to_json, CatalogReport, CheckResult, CheckStatus, ComplexityReport, InducedReport, ReduceReport,
    VerifyReport,
};
use crate::covering::{
    coset_counts_check, degeneracy_count_check, edge_terms_check, euler_consistency_check, induce, InducedSplitting,
};
use crate::enumeration::{cyclic_quotients, normal_subgroups, CatalogKind, SubgroupCatalog};
use crate::gog::{reduce, GraphOfGroups, PhiTable};
use crate::volumes::{
    check_acyl_accessibility, check_multiplicativity, check_rank_sum_bound, check_vfinm_bound, check_weidmann,
    estimate_volume, max_finite_edge_order, reidemeister_schreier_bound, weighted_lower_bound_check, VolumeMode,
};
use crate::{Caps, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Complexity,
    Reduce,
    Subgroups,
    Induce,
    Volume,
    Verify,
}

impl Command {
    pub fn from_name(name: &str) -> Result<Self> {
        Ok(match name {
            "complexity" => Command::Complexity,
            "reduce" => Command::Reduce,
            "subgroups" => Command::Subgroups,
            "induce" => Command::Induce,
            "volume" => Command::Volume,
            "verify" => Command::Verify,
            other => return Err(Error::Configuration(format!("unknown command `{other}`"))),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Source {
    File(PathBuf),
    Builtin { name: String, params: Vec<u32> },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Doc,
}

impl Format {
    pub fn from_name(name: &str) -> Result<Self> {
        match name {
            "csv" => Ok(Format::Csv),
            "doc" => Ok(Format::Doc),
            other => Err(Error::Configuration(format!("unknown format `{other}` (expected csv or doc)"))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: Command,
    pub source: Source,
    pub max_index: u64,
    pub phi: String,
    pub mode: VolumeMode,
    pub catalog: CatalogKind,
    /// For cyclic catalogs: send only this generator to the cycle.
    pub generator: Option<usize>,
    /// Catalog id for `induce`.
    pub quotient: Option<String>,
    pub caps: Caps,
    pub out: Option<PathBuf>,
    pub format: Format,
}

impl RunConfig {
    pub fn new(command: Command, source: Source) -> Self {
        RunConfig {
            command,
            source,
            max_index: 12,
            phi: "vfin".into(),
            mode: VolumeMode::Plain,
            catalog: CatalogKind::Normal,
            generator: None,
            quotient: None,
            caps: Caps::default(),
            out: None,
            format: Format::Doc,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_index == 0 {
            return Err(Error::Configuration("max index must be at least 1".into()));
        }
        let c = &self.caps;
        if c.closure == 0 || c.candidates == 0 || c.product == 0 || c.search_nodes == 0 {
            return Err(Error::Configuration("caps must be positive".into()));
        }
        Ok(())
    }
}

/// Output text and whether every check passed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunOutcome {
    pub text: String,
    pub success: bool,
}

pub fn load(source: &Source, caps: &Caps) -> Result<GraphOfGroups> {
    match source {
        Source::File(path) => parse_document(&std::fs::read_to_string(path)?, caps),
        Source::Builtin { name, params } => builtin(name, params),
    }
}

pub fn build_catalog(y: &GraphOfGroups, config: &RunConfig) -> Result<SubgroupCatalog> {
    match config.catalog {
        CatalogKind::Normal => normal_subgroups(y.ambient(), config.max_index, &config.caps),
        CatalogKind::Cyclic => cyclic_quotients(y.ambient(), config.max_index, config.generator, &config.caps),
    }
}

pub fn run(config: &RunConfig) -> Result<RunOutcome> {
    config.validate()?;
    let y = load(&config.source, &config.caps)?;
    let phi = PhiTable::by_name(&config.phi)?;
    let csv = config.format == Format::Csv;
    let ok = |text: String| Ok(RunOutcome { text, success: true });
    match config.command {
        Command::Complexity => {
            let s = y.skeleton()?;
            let r = ComplexityReport {
                graph_rank: s.graph_rank()?,
                nondegenerate: s.nondegenerate_count(),
                complexity: s.complexity()?,
                phi: phi.name().to_string(),
                weighted_complexity: crate::rational::Exact(s.weighted_complexity(&phi)?),
                reduced: s.is_reduced(),
            };
            ok(if csv { r.csv() } else { to_json(&r)? })
        }
        Command::Reduce => {
            let (reduced, trace) = reduce(&y)?;
            let r = ReduceReport { splitting: serialize_document(&reduced)?, trace };
            ok(if csv { r.csv() } else { to_json(&r)? })
        }
        Command::Subgroups => {
            let r = CatalogReport::new(&build_catalog(&y, config)?);
            ok(if csv { r.csv() } else { to_json(&r)? })
        }
        Command::Induce => {
            let id = config
                .quotient
                .as_deref()
                .ok_or_else(|| Error::Configuration("induce needs a quotient id".into()))?;
            let catalog = build_catalog(&y, config)?;
            let q = catalog
                .get(id)
                .ok_or_else(|| Error::Configuration(format!("no quotient `{id}` in the catalog")))?;
            let r = InducedReport::new(&induce(&y, q)?, &phi)?;
            ok(if csv { r.csv() } else { to_json(&r)? })
        }
        Command::Volume => {
            let catalog = build_catalog(&y, config)?;
            let e = estimate_volume(&y, &catalog, config.mode, &phi, &config.caps)?;
            ok(if csv { estimate_csv(&e) } else { to_json(&e)? })
        }
        Command::Verify => {
            let catalog = build_catalog(&y, config)?;
            let r = verify(&y, &catalog, &phi, &config.caps)?;
            let text = if csv { r.csv() } else { to_json(&r)? };
            Ok(RunOutcome { text, success: r.passed() })
        }
    }
}

fn is_inapplicable(e: &Error) -> bool {
    matches!(e, Error::Inapplicable(_) | Error::Precondition(_) | Error::Unsupported(_))
}

/// Collects per-quotient outcomes of one check into a single result.
struct Tally {
    name: &'static str,
    passed: usize,
    failed: Vec<String>,
    inapplicable: Vec<String>,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Tally { name, passed: 0, failed: Vec::new(), inapplicable: Vec::new() }
    }

    fn record(&mut self, id: &str, outcome: Result<bool>) {
        match outcome {
            Ok(true) => self.passed += 1,
            Ok(false) => self.failed.push(id.to_string()),
            Err(e) if is_inapplicable(&e) => self.inapplicable.push(format!("{id}: {e}")),
            Err(e) => self.failed.push(format!("{id}: {e}")),
        }
    }

    fn finish(self) -> CheckResult {
        let (status, detail) = if !self.failed.is_empty() {
            (CheckStatus::Fail, format!("failed for {}", self.failed.join(", ")))
        } else if self.passed == 0 {
            let why = self.inapplicable.first().cloned().unwrap_or_else(|| "no instances".into());
            (CheckStatus::Inapplicable, why)
        } else {
            (
                CheckStatus::Pass,
                format!("{} instances, {} inapplicable", self.passed, self.inapplicable.len()),
            )
        };
        CheckResult { name: self.name.to_string(), status, detail }
    }
}

/// Every identity and necessary inequality that applies to `y` and the
/// kernels of `catalog`.
pub fn verify(y: &GraphOfGroups, catalog: &SubgroupCatalog, phi: &PhiTable, caps: &Caps) -> Result<VerifyReport> {
    let induced: Vec<Result<InducedSplitting>> = catalog.entries().par_iter().map(|q| induce(y, q)).collect();
    let gens = y.ambient().rank_upper_bound() as u64;

    let mut soundness = Tally::new("marking_soundness");
    let mut counts = Tally::new("coset_counts");
    let mut uniform = Tally::new("degeneracy_uniformity");
    let mut euler = Tally::new("euler_consistency");
    let mut terms = Tally::new("edge_terms_nonnegative");
    let mut access = Tally::new("acylindrical_accessibility");
    let mut ranks = Tally::new("rank_sum_bound");
    let mut mult = Tally::new("multiplicativity");
    for (q, s) in catalog.entries().iter().zip(&induced) {
        let id = q.id();
        let s = match s {
            Ok(s) => {
                soundness.record(id, Ok(true));
                s
            }
            Err(e) => {
                soundness.record(id, Err(Error::InvalidMarking(e.to_string())));
                continue;
            }
        };
        counts.record(id, Ok(coset_counts_check(s)));
        uniform.record(id, Ok(degeneracy_count_check(s)));
        euler.record(id, euler_consistency_check(y, s));
        terms.record(id, edge_terms_check(s).map(|ts| ts.iter().all(|t| t.ok())));
        let r_upper = reidemeister_schreier_bound(q.index(), gens);
        access.record(id, check_acyl_accessibility(s, r_upper));
        ranks.record(id, check_rank_sum_bound(s, r_upper));
        mult.record(id, check_multiplicativity(y, q));
    }

    let mut weidmann = Tally::new("weidmann_rank_inequality");
    weidmann.record("base", check_weidmann(y).map(|r| r.satisfied));

    let mut vfinm = Tally::new("vfinm_bound");
    let m = max_finite_edge_order(y)?;
    vfinm.record(
        "catalog",
        match m {
            None => Err(Error::Inapplicable("some edge group is infinite".into())),
            Some(m) => estimate_volume(y, catalog, VolumeMode::Plain, phi, caps).map(|e| check_vfinm_bound(&e, m, gens)),
        },
    );

    let mut lower = Tally::new("weighted_lower_bound");
    let base = y.skeleton()?;
    for (i, v) in base.vertices.iter().enumerate() {
        let value = base.vertex_phi(i, phi)?;
        let outcome = if value.is_positive() {
            weighted_lower_bound_check(y, catalog, phi, &v.id)
        } else {
            Err(Error::Inapplicable("φ is not positive".into()))
        };
        lower.record(&v.id, outcome);
    }

    Ok(VerifyReport {
        checks: vec![
            soundness.finish(),
            counts.finish(),
            uniform.finish(),
            euler.finish(),
            terms.finish(),
            weidmann.finish(),
            access.finish(),
            ranks.finish(),
            vfinm.finish(),
            mult.finish(),
            lower.finish(),
        ],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn builtin_config(command: Command, name: &str, params: &[u32]) -> RunConfig {
        RunConfig::new(command, Source::Builtin { name: name.into(), params: params.to_vec() })
    }

    #[test]
    fn surface_weighted_complexity_is_four() {
        let out = run(&builtin_config(Command::Complexity, "surface_amalgam", &[2])).unwrap();
        let v: serde_json::Value = serde_json::from_str(&out.text).unwrap();
        assert_eq!(v["weighted_complexity"]["num"], 4);
        assert_eq!(v["weighted_complexity"]["den"], 1);
        assert_eq!(v["complexity"], 2);
    }

    #[test]
    fn modular_volume_csv() {
        let mut c = builtin_config(Command::Volume, "free_product_finite_cyclics", &[2, 3]);
        c.max_index = 24;
        c.format = Format::Csv;
        let out = run(&c).unwrap();
        let mut lines = out.text.lines();
        assert_eq!(lines.next().unwrap(), super::super::report::ESTIMATE_HEADER);
        assert!(lines.any(|l| l.starts_with("q6.")));
        assert_eq!(run(&c).unwrap(), out);
    }

    #[test]
    fn verify_builtins() {
        for (name, params, catalog, max) in [
            ("free_product_finite_cyclics", vec![2, 3], CatalogKind::Normal, 12),
            ("free_product_finite_cyclics", vec![2, 2], CatalogKind::Normal, 12),
            ("wedge", vec![2], CatalogKind::Normal, 6),
            ("surface_amalgam", vec![2], CatalogKind::Cyclic, 8),
        ] {
            let mut c = builtin_config(Command::Verify, name, &params);
            c.catalog = catalog;
            c.max_index = max;
            let out = run(&c).unwrap();
            assert!(out.success, "{name}: {}", out.text);
        }
    }

    #[test]
    fn bad_config() {
        let mut c = builtin_config(Command::Volume, "wedge", &[2]);
        c.max_index = 0;
        assert!(matches!(run(&c), Err(Error::Configuration(_))));
        let c = builtin_config(Command::Induce, "wedge", &[2]);
        assert!(matches!(run(&c), Err(Error::Configuration(_))));
    }
}
