//! Tables assigning a nonnegative rational φ to each vertex group kind.
//!
//! Every rule is multiplicative under passing to a subgroup of index `m`:
//! the value on the lifted descriptor is `m` times the value on the base.

use std::collections::BTreeMap;

use super::descriptor::{KindTag, StabilizerDescriptor};
use crate::{rational, Error, Rational, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PhiRule {
    Zero,
    /// `r - 1` on free groups of rank `r`.
    RankMinusOne,
    /// `2g - 2` on closed surface groups of genus `g`.
    NegEuler,
    /// `1 / |G|` on finite groups.
    InverseOrder,
    /// The value carried by an opaque descriptor.
    Declared,
}

impl PhiRule {
    fn applies_to(self, tag: KindTag) -> bool {
        match self {
            PhiRule::Zero => true,
            PhiRule::RankMinusOne => tag == KindTag::FreeRank,
            PhiRule::NegEuler => tag == KindTag::SurfaceGenus,
            PhiRule::InverseOrder => tag == KindTag::Finite,
            PhiRule::Declared => tag == KindTag::Opaque,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            PhiRule::Zero => "zero",
            PhiRule::RankMinusOne => "rank_minus_one",
            PhiRule::NegEuler => "neg_euler",
            PhiRule::InverseOrder => "inverse_order",
            PhiRule::Declared => "declared",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiTable {
    name: String,
    rules: BTreeMap<KindTag, PhiRule>,
}

impl PhiTable {
    /// Builds a table, rejecting rules that do not fit their kind. Abelian
    /// kinds only admit the zero rule.
    pub fn new(name: impl Into<String>, rules: BTreeMap<KindTag, PhiRule>) -> Result<Self> {
        for (&tag, &rule) in &rules {
            if !rule.applies_to(tag) {
                return Err(Error::Configuration(format!(
                    "phi rule `{}` does not apply to kind `{tag}`",
                    rule.name()
                )));
            }
        }
        Ok(PhiTable { name: name.into(), rules })
    }

    /// φ identically zero.
    pub fn zero() -> Self {
        let rules = KindTag::ALL.into_iter().map(|k| (k, PhiRule::Zero)).collect();
        PhiTable { name: "zero".into(), rules }
    }

    /// φ = V_fin on free and finite groups, declared on opaque groups and
    /// zero elsewhere.
    pub fn vfin() -> Self {
        let mut t = Self::zero();
        t.name = "vfin".into();
        t.rules.insert(KindTag::FreeRank, PhiRule::RankMinusOne);
        t.rules.insert(KindTag::Finite, PhiRule::InverseOrder);
        t.rules.insert(KindTag::Opaque, PhiRule::Declared);
        t
    }

    /// Like [`PhiTable::vfin`], with surface groups weighted by `2g - 2`.
    pub fn euler() -> Self {
        let mut t = Self::vfin();
        t.name = "euler".into();
        t.rules.insert(KindTag::SurfaceGenus, PhiRule::NegEuler);
        t
    }

    pub fn by_name(name: &str) -> Result<Self> {
        match name {
            "zero" => Ok(Self::zero()),
            "vfin" => Ok(Self::vfin()),
            "euler" => Ok(Self::euler()),
            other => Err(Error::Configuration(format!(
                "unknown phi table `{other}` (expected zero, vfin or euler)"
            ))),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rule(&self, tag: KindTag) -> Option<PhiRule> {
        self.rules.get(&tag).copied()
    }

    pub fn evaluate(&self, d: &StabilizerDescriptor) -> Result<Rational> {
        let rule = self.rule(d.tag()).ok_or_else(|| {
            Error::Configuration(format!("phi table `{}` has no rule for kind `{}`", self.name, d.tag()))
        })?;
        Ok(match (rule, d) {
            (PhiRule::Zero, _) => rational::zero(),
            (PhiRule::RankMinusOne, StabilizerDescriptor::FreeRank(r)) => rational::int(*r as i64 - 1),
            (PhiRule::NegEuler, StabilizerDescriptor::SurfaceGenus(g)) => rational::int(2 * *g as i64 - 2),
            (PhiRule::InverseOrder, StabilizerDescriptor::Finite { order, .. }) => {
                rational::frac(1, *order as i64)
            }
            (PhiRule::Declared, StabilizerDescriptor::Opaque { phi, .. }) => phi.clone(),
            _ => unreachable!("rules are checked against kinds at construction"),
        })
    }

    /// φ of a vertex: its override if present, otherwise the table value.
    pub fn vertex_phi(&self, d: &StabilizerDescriptor, phi_override: Option<&Rational>) -> Result<Rational> {
        match phi_override {
            Some(v) => Ok(v.clone()),
            None => self.evaluate(d),
        }
    }
}

impl Default for PhiTable {
    fn default() -> Self {
        Self::vfin()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_tables() {
        let f3 = StabilizerDescriptor::FreeRank(3);
        assert_eq!(PhiTable::zero().evaluate(&f3).unwrap(), rational::zero());
        assert_eq!(PhiTable::vfin().evaluate(&f3).unwrap(), rational::int(2));
        let s2 = StabilizerDescriptor::SurfaceGenus(2);
        assert_eq!(PhiTable::vfin().evaluate(&s2).unwrap(), rational::zero());
        assert_eq!(PhiTable::euler().evaluate(&s2).unwrap(), rational::int(2));
        let fin = StabilizerDescriptor::Finite { order: 6, rank: 1 };
        assert_eq!(PhiTable::vfin().evaluate(&fin).unwrap(), rational::frac(1, 6));
        assert!(PhiTable::by_name("nope").is_err());
    }

    #[test]
    fn rejects_bad_rules() {
        let rules = BTreeMap::from([(KindTag::FreeAbelianRank, PhiRule::RankMinusOne)]);
        assert!(matches!(PhiTable::new("bad", rules), Err(Error::Configuration(_))));
        let partial = PhiTable::new("partial", BTreeMap::from([(KindTag::FreeRank, PhiRule::Zero)])).unwrap();
        assert!(matches!(
            partial.evaluate(&StabilizerDescriptor::CyclicZ),
            Err(Error::Configuration(_))
        ));
    }

    #[test]
    fn multiplicative_under_lifting() {
        let t = PhiTable::euler();
        for d in [
            StabilizerDescriptor::FreeRank(3),
            StabilizerDescriptor::SurfaceGenus(4),
            StabilizerDescriptor::CyclicZ,
            StabilizerDescriptor::Opaque { rank_upper: 3, phi: rational::frac(3, 2), one_ended: true },
        ] {
            for m in 1..6u64 {
                let lifted = d.lift_infinite(m);
                assert_eq!(
                    t.evaluate(&lifted).unwrap(),
                    t.evaluate(&d).unwrap() * rational::int(m as i64)
                );
            }
        }
    }
}
