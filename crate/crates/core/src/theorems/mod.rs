//! Executable forms of the identities and existence equivalences for
//! Moore-Penrose inverses of expressions in two projections.
//!
//! Every check decides existence with the ring's own engine (a constructive
//! solver or an exhaustive search) and certifies every witness against the
//! Penrose equations; closed-form candidates are never trusted unverified.
//!
//! Batteries that only hold in `*`-reducing rings report themselves as not
//! applicable elsewhere, but still record the relevant existence flags as
//! observations.

mod commutators;
mod complements;
mod differences;
mod drazin;
mod identities;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use commutators::{self_adjoint_gate, thm213_check, thm214_check};
pub use complements::{cor25_battery, cor26_battery, eq215_formula, pxp_extraction, thm24_battery};
pub use differences::{cor28_battery, cor29_chains, lemma210_battery, thm27_check};
pub use drazin::{lemma211_check, lemma212_check, lemma212_pair};
pub use identities::{diff_mp_formula, lemma21_checks, lemma21_pair, lemma22_identities, lemma23_identities};

use crate::context::ProjectionPairContext;
use crate::ring::{verify_mp, El, InverseEngine, StarRing};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TheoremId {
    Lemma21,
    Lemma22,
    Lemma23,
    Thm24,
    Cor25,
    Cor26,
    Thm27,
    Cor28,
    Cor29,
    Lemma210,
    Lemma211,
    Lemma212,
    Thm213,
    Thm214,
}

impl TheoremId {
    pub const ALL: [TheoremId; 14] = [
        TheoremId::Lemma21,
        TheoremId::Lemma22,
        TheoremId::Lemma23,
        TheoremId::Thm24,
        TheoremId::Cor25,
        TheoremId::Cor26,
        TheoremId::Thm27,
        TheoremId::Cor28,
        TheoremId::Cor29,
        TheoremId::Lemma210,
        TheoremId::Lemma211,
        TheoremId::Lemma212,
        TheoremId::Thm213,
        TheoremId::Thm214,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::Lemma21 => "lemma21",
            TheoremId::Lemma22 => "lemma22",
            TheoremId::Lemma23 => "lemma23",
            TheoremId::Thm24 => "thm24",
            TheoremId::Cor25 => "cor25",
            TheoremId::Cor26 => "cor26",
            TheoremId::Thm27 => "thm27",
            TheoremId::Cor28 => "cor28",
            TheoremId::Cor29 => "cor29",
            TheoremId::Lemma210 => "lemma210",
            TheoremId::Lemma211 => "lemma211",
            TheoremId::Lemma212 => "lemma212",
            TheoremId::Thm213 => "thm213",
            TheoremId::Thm214 => "thm214",
        }
    }

    /// Parses `all` or a comma-separated list of ids.
    pub fn parse_list(s: &str) -> Result<Vec<TheoremId>, String> {
        if s.trim() == "all" {
            return Ok(TheoremId::ALL.to_vec());
        }
        let mut ids: Vec<TheoremId> = s.split(',').map(|t| t.trim().parse()).collect::<Result<_, _>>()?;
        ids.sort();
        ids.dedup();
        Ok(ids)
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        TheoremId::ALL.into_iter().find(|id| id.as_str() == s).ok_or_else(|| format!("unknown theorem id `{s}`"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub ok: bool,
}

/// Serialized inputs of a failing verdict, in the ring's file format.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub ring: String,
    pub elements: Vec<(String, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremVerdict {
    pub theorem: TheoremId,
    pub applicable: bool,
    pub passed: bool,
    /// Asserted sub-checks; `passed` requires all of them.
    pub checks: Vec<Check>,
    /// Recorded facts that are not asserted.
    pub observations: Vec<Check>,
    pub reason: Option<String>,
    pub counterexample: Option<Counterexample>,
}

impl TheoremVerdict {
    pub fn failing_checks(&self) -> Vec<&str> {
        self.checks.iter().filter(|c| !c.ok).map(|c| c.name.as_str()).collect()
    }

    pub fn check(&self, name: &str) -> Option<bool> {
        self.checks.iter().find(|c| c.name == name).map(|c| c.ok)
    }

    pub fn observation(&self, name: &str) -> Option<bool> {
        self.observations.iter().find(|c| c.name == name).map(|c| c.ok)
    }
}

/// Accumulates checks for one verdict.
pub(crate) struct Verdict {
    theorem: TheoremId,
    checks: Vec<Check>,
    observations: Vec<Check>,
    inapplicable: Option<String>,
    witnesses_certified: Option<bool>,
}

impl Verdict {
    pub(crate) fn new(theorem: TheoremId) -> Self {
        Verdict { theorem, checks: Vec::new(), observations: Vec::new(), inapplicable: None, witnesses_certified: None }
    }

    pub(crate) fn check(&mut self, name: impl Into<String>, ok: bool) {
        self.checks.push(Check { name: name.into(), ok });
    }

    pub(crate) fn observe(&mut self, name: impl Into<String>, ok: bool) {
        self.observations.push(Check { name: name.into(), ok });
    }

    pub(crate) fn not_applicable(&mut self, reason: impl Into<String>) {
        self.inapplicable = Some(reason.into());
    }

    /// Merges another verdict's checks under a name prefix.
    pub(crate) fn absorb(&mut self, prefix: &str, other: TheoremVerdict) {
        for c in other.checks {
            self.check(format!("{prefix}{}", c.name), c.ok);
        }
        for c in other.observations {
            self.observe(format!("{prefix}{}", c.name), c.ok);
        }
    }

    /// Engine MP inverse, certified against the Penrose equations.
    pub(crate) fn dag<'r, R: InverseEngine>(&mut self, x: &El<'r, R>) -> Option<El<'r, R>> {
        let w = x.dag()?;
        let ok = verify_mp(x.ring(), x.val(), w.val()).all;
        self.witnesses_certified = Some(self.witnesses_certified.unwrap_or(true) && ok);
        Some(w)
    }

    pub(crate) fn exists<R: InverseEngine>(&mut self, x: &El<'_, R>) -> bool {
        self.dag(x).is_some()
    }

    pub(crate) fn profile<'r, R: InverseEngine>(&mut self, entries: &[(&str, &El<'r, R>)]) -> ExistenceProfile<'r, R> {
        let entries =
            entries.iter().map(|(name, x)| ProfileEntry { name: name.to_string(), witness: self.dag(x) }).collect();
        ExistenceProfile { entries }
    }

    pub(crate) fn finish_with<R: StarRing>(mut self, ring: &R, elements: &[(&str, &R::Elem)]) -> TheoremVerdict {
        let applicable = self.inapplicable.is_none() && !self.checks.is_empty();
        if let (true, Some(ok)) = (applicable, self.witnesses_certified) {
            self.check("engine witnesses certified", ok);
        }
        let reason = match (&self.inapplicable, applicable) {
            (Some(r), _) => Some(r.clone()),
            (None, false) => Some("no sub-check preconditions met".to_string()),
            _ => None,
        };
        let passed = applicable && self.checks.iter().all(|c| c.ok);
        let counterexample = (applicable && !passed).then(|| Counterexample {
            ring: ring.ring_id(),
            elements: elements.iter().map(|(n, e)| (n.to_string(), ring.render(e))).collect(),
        });
        TheoremVerdict {
            theorem: self.theorem,
            applicable,
            passed,
            checks: self.checks,
            observations: self.observations,
            reason,
            counterexample,
        }
    }

    pub(crate) fn finish<R: StarRing>(self, ctx: &ProjectionPairContext<'_, R>) -> TheoremVerdict {
        self.finish_with(ctx.ring(), &[("p", ctx.p.val()), ("q", ctx.q.val())])
    }
}

pub struct ProfileEntry<'r, R: StarRing> {
    pub name: String,
    pub witness: Option<El<'r, R>>,
}

/// Existence of the MP inverse for a list of named elements, with witnesses.
pub struct ExistenceProfile<'r, R: StarRing> {
    pub entries: Vec<ProfileEntry<'r, R>>,
}

impl<'r, R: StarRing> ExistenceProfile<'r, R> {
    pub fn flags(&self) -> Vec<bool> {
        self.entries.iter().map(|e| e.witness.is_some()).collect()
    }

    pub fn all_agree(&self) -> bool {
        let flags = self.flags();
        flags.windows(2).all(|w| w[0] == w[1])
    }

    pub fn exists(&self, i: usize) -> bool {
        self.entries[i].witness.is_some()
    }

    pub fn witness(&self, i: usize) -> Option<&El<'r, R>> {
        self.entries[i].witness.as_ref()
    }

    pub(crate) fn observe_into(&self, v: &mut Verdict) {
        for e in &self.entries {
            v.observe(format!("{} in R†", e.name), e.witness.is_some());
        }
    }
}

/// Runs one theorem battery on a projection pair.
pub fn run_theorem<R: InverseEngine>(id: TheoremId, ctx: &ProjectionPairContext<'_, R>) -> TheoremVerdict {
    match id {
        TheoremId::Lemma21 => lemma21_pair(ctx),
        TheoremId::Lemma22 => lemma22_identities(ctx),
        TheoremId::Lemma23 => lemma23_identities(ctx),
        TheoremId::Thm24 => thm24_battery(ctx),
        TheoremId::Cor25 => cor25_battery(ctx),
        TheoremId::Cor26 => cor26_battery(ctx),
        TheoremId::Thm27 => thm27_check(ctx),
        TheoremId::Cor28 => cor28_battery(ctx),
        TheoremId::Cor29 => cor29_chains(ctx),
        TheoremId::Lemma210 => lemma210_battery(ctx),
        TheoremId::Lemma211 => lemma211_check(ctx),
        TheoremId::Lemma212 => lemma212_pair(ctx),
        TheoremId::Thm213 => thm213_check(ctx),
        TheoremId::Thm214 => thm214_check(ctx),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theorem_id_parsing() {
        assert_eq!(TheoremId::parse_list("all").unwrap().len(), 14);
        assert_eq!(TheoremId::parse_list("thm24,cor25,thm24").unwrap(), vec![TheoremId::Thm24, TheoremId::Cor25]);
        assert!(TheoremId::parse_list("thm99").is_err());
        for id in TheoremId::ALL {
            assert_eq!(id.as_str().parse::<TheoremId>().unwrap(), id);
            assert_eq!(serde_json::to_string(&id).unwrap(), format!("\"{}\"", id.as_str()));
        }
    }
}
