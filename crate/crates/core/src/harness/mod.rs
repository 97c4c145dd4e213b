//! Exhaustive and sampled verification suites over small graphs.
//!
//! Each suite walks a deterministic instance stream, checks one family of
//! statements on every instance, and records failures with a replayable
//! instance dump. A failed instance never stops the run.

mod sources;
mod suites;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::labeling::Labeling;

pub use sources::{labeled_trees, sample_corona, CoronaSample};

/// Failures kept verbatim per report; the rest are only counted.
pub const MAX_STORED_FAILURES: usize = 50;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SuiteId {
    UnderClosedEquiv,
    UnitEquiv123,
    StarTheorem,
    ClosedIsProper,
    StrongImpliesUc,
    Monotone,
    SortableEquiv,
    IntervalTheoremA,
    Forbidden,
    UnitImpliesChordalComplex,
    Cycles,
    Forests,
    Corona,
    SortableForbidden,
}

impl SuiteId {
    pub const ALL: [SuiteId; 14] = [
        SuiteId::UnderClosedEquiv,
        SuiteId::UnitEquiv123,
        SuiteId::StarTheorem,
        SuiteId::ClosedIsProper,
        SuiteId::StrongImpliesUc,
        SuiteId::Monotone,
        SuiteId::SortableEquiv,
        SuiteId::IntervalTheoremA,
        SuiteId::Forbidden,
        SuiteId::UnitImpliesChordalComplex,
        SuiteId::Cycles,
        SuiteId::Forests,
        SuiteId::Corona,
        SuiteId::SortableForbidden,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SuiteId::UnderClosedEquiv => "UNDER_CLOSED_EQUIV",
            SuiteId::UnitEquiv123 => "UNIT_EQUIV_123",
            SuiteId::StarTheorem => "STAR_THEOREM",
            SuiteId::ClosedIsProper => "CLOSED_IS_PROPER",
            SuiteId::StrongImpliesUc => "STRONG_IMPLIES_UC",
            SuiteId::Monotone => "MONOTONE",
            SuiteId::SortableEquiv => "SORTABLE_EQUIV",
            SuiteId::IntervalTheoremA => "INTERVAL_THEOREM_A",
            SuiteId::Forbidden => "FORBIDDEN",
            SuiteId::UnitImpliesChordalComplex => "UNIT_IMPLIES_CHORDAL_COMPLEX",
            SuiteId::Cycles => "CYCLES",
            SuiteId::Forests => "FORESTS",
            SuiteId::Corona => "CORONA",
            SuiteId::SortableForbidden => "SORTABLE_FORBIDDEN",
        }
    }

    /// Default instance domain for the suite.
    pub fn default_params(self) -> SuiteParams {
        let p = |n_max, d_min, d_max, labeled_up_to| SuiteParams {
            n_max,
            d_min,
            d_max,
            labeled_up_to,
            seed: None,
            samples: 0,
            mutation: false,
        };
        match self {
            SuiteId::UnderClosedEquiv => p(5, 1, 3, 5),
            SuiteId::UnitEquiv123 => p(5, 1, 3, 5),
            SuiteId::StarTheorem => p(6, 1, 3, 6),
            SuiteId::ClosedIsProper => p(6, 1, 1, 6),
            SuiteId::StrongImpliesUc => p(5, 1, 3, 5),
            SuiteId::Monotone => p(6, 1, 3, 6),
            SuiteId::SortableEquiv => p(6, 1, 3, 6),
            SuiteId::IntervalTheoremA => p(6, 1, 1, 6),
            SuiteId::Forbidden => p(7, 1, 3, 6),
            SuiteId::UnitImpliesChordalComplex => p(7, 1, 3, 5),
            SuiteId::Cycles => p(7, 1, 6, 7),
            SuiteId::Forests => p(7, 2, 3, 7),
            SuiteId::Corona => SuiteParams {
                samples: 200,
                ..p(8, 2, 4, 8)
            },
            SuiteId::SortableForbidden => p(6, 2, 3, 5),
        }
    }
}

impl fmt::Display for SuiteId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SuiteId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let upper = s.to_ascii_uppercase().replace('-', "_");
        SuiteId::ALL
            .into_iter()
            .find(|id| id.name() == upper)
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

impl Serialize for SuiteId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteParams {
    /// Largest vertex count enumerated.
    pub n_max: usize,
    pub d_min: usize,
    pub d_max: usize,
    /// Graphs with at most this many vertices are enumerated labeled; larger
    /// ones by isomorphism class.
    pub labeled_up_to: usize,
    pub seed: Option<u64>,
    /// Sample count for randomized suites.
    pub samples: usize,
    /// Replace the under-closed predicate by a deliberately broken variant.
    pub mutation: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    /// Which statement of the suite failed.
    pub check: String,
    /// Replayable dump: graph text followed by `#` comment lines.
    pub instance: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: SuiteId,
    pub params: SuiteParams,
    pub instances: u64,
    pub failure_count: u64,
    pub failures: Vec<Failure>,
    /// Failure counts per check name, including checks with zero failures.
    pub checks: BTreeMap<String, CheckStats>,
    pub notes: Vec<String>,
    pub elapsed_ms: u64,
    pub passed: bool,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CheckStats {
    pub evaluated: u64,
    pub failed: u64,
}

impl SuiteReport {
    /// Failures recorded under any of `checks`.
    pub fn failures_in(&self, checks: &[&str]) -> u64 {
        checks
            .iter()
            .filter_map(|c| self.checks.get(*c))
            .map(|s| s.failed)
            .sum()
    }
}

/// Per-worker accumulator, merged in instance order.
#[derive(Default)]
pub(crate) struct Tally {
    instances: u64,
    failures: Vec<Failure>,
    failure_count: u64,
    checks: BTreeMap<&'static str, CheckStats>,
    counters: BTreeMap<String, u64>,
}

impl Tally {
    pub(crate) fn instance(&mut self) {
        self.instances += 1;
    }

    pub(crate) fn check(
        &mut self,
        ok: bool,
        check: &'static str,
        instance: impl FnOnce() -> String,
        expected: impl fmt::Display,
        actual: impl fmt::Display,
    ) {
        let stats = self.checks.entry(check).or_default();
        stats.evaluated += 1;
        if ok {
            return;
        }
        stats.failed += 1;
        self.failure_count += 1;
        if self.failures.len() < MAX_STORED_FAILURES {
            self.failures.push(Failure {
                check: check.to_string(),
                instance: instance(),
                expected: expected.to_string(),
                actual: actual.to_string(),
            });
        }
    }

    /// Records an error raised while evaluating an instance.
    pub(crate) fn error(&mut self, check: &'static str, instance: impl FnOnce() -> String, e: &Error) {
        self.check(false, check, instance, "no error", e);
    }

    pub(crate) fn count(&mut self, key: impl Into<String>, by: u64) {
        *self.counters.entry(key.into()).or_default() += by;
    }

    fn merge(&mut self, other: Tally) {
        self.instances += other.instances;
        self.failure_count += other.failure_count;
        let room = MAX_STORED_FAILURES.saturating_sub(self.failures.len());
        self.failures.extend(other.failures.into_iter().take(room));
        for (k, s) in other.checks {
            let e = self.checks.entry(k).or_default();
            e.evaluated += s.evaluated;
            e.failed += s.failed;
        }
        for (k, v) in other.counters {
            *self.counters.entry(k).or_default() += v;
        }
    }
}

/// Runs `f` on every item, in parallel, merging tallies in item order.
pub(crate) fn run_each<T, F>(items: &[T], f: F) -> Tally
where
    T: Sync,
    F: Fn(&T, &mut Tally) + Sync,
{
    let parts: Vec<Tally> = items
        .par_iter()
        .map(|item| {
            let mut t = Tally::default();
            f(item, &mut t);
            t
        })
        .collect();
    let mut total = Tally::default();
    for p in parts {
        total.merge(p);
    }
    total
}

/// Graph text followed by comment lines carrying `d` and an optional labeling.
pub fn instance_dump(g: &Graph, d: Option<usize>, labeling: Option<&Labeling>) -> String {
    let mut s = g.to_text();
    if let Some(d) = d {
        s.push_str(&format!("# d {d}\n"));
    }
    if let Some(l) = labeling {
        s.push_str(&format!("# labeling {l}\n"));
    }
    s
}

fn validate(id: SuiteId, p: &SuiteParams) -> Result<()> {
    if p.d_min == 0 || p.d_min > p.d_max {
        return Err(Error::invalid(format!(
            "bad d range {}..={}",
            p.d_min, p.d_max
        )));
    }
    let enumerated_max = if id == SuiteId::Corona {
        8
    } else {
        p.n_max
    };
    let labeled_limit = crate::graph::MAX_LABELED_N;
    let class_limit = crate::graph::MAX_CLASSES_N;
    if p.n_max > p.labeled_up_to.min(labeled_limit) && p.n_max > class_limit {
        return Err(Error::Guard {
            what: "harness graph size",
            limit: class_limit.max(p.labeled_up_to.min(labeled_limit)),
            got: p.n_max,
        });
    }
    if id == SuiteId::Corona {
        if p.seed.is_none() {
            return Err(Error::invalid("suite CORONA needs a seed"));
        }
        if p.n_max > enumerated_max || p.n_max < 4 {
            return Err(Error::Guard {
                what: "corona sample size",
                limit: enumerated_max,
                got: p.n_max,
            });
        }
    }
    Ok(())
}

/// Runs one suite. Instance order and results do not depend on thread count.
pub fn run_suite(id: SuiteId, params: &SuiteParams) -> Result<SuiteReport> {
    validate(id, params)?;
    let start = Instant::now();
    let tally = suites::run(id, params)?;
    let elapsed_ms = start.elapsed().as_millis() as u64;
    let notes = tally
        .counters
        .iter()
        .map(|(k, v)| format!("{k}: {v}"))
        .collect();
    Ok(SuiteReport {
        suite: id,
        params: params.clone(),
        instances: tally.instances,
        failure_count: tally.failure_count,
        failures: tally.failures,
        checks: tally
            .checks
            .into_iter()
            .map(|(k, v)| (k.to_string(), v))
            .collect(),
        notes,
        elapsed_ms,
        passed: tally.failure_count == 0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for id in SuiteId::ALL {
            assert_eq!(id.name().parse::<SuiteId>().unwrap(), id);
        }
        assert_eq!("cycles".parse::<SuiteId>().unwrap(), SuiteId::Cycles);
        assert!(matches!(
            "NOPE".parse::<SuiteId>(),
            Err(Error::UnknownSuite(_))
        ));
    }

    #[test]
    fn tally_caps_stored_failures() {
        let mut t = Tally::default();
        for i in 0..MAX_STORED_FAILURES + 5 {
            t.check(false, "x", || i.to_string(), "a", "b");
        }
        let mut total = Tally::default();
        total.merge(t);
        assert_eq!(total.failure_count as usize, MAX_STORED_FAILURES + 5);
        assert_eq!(total.failures.len(), MAX_STORED_FAILURES);
        assert_eq!(total.checks["x"].failed as usize, MAX_STORED_FAILURES + 5);
    }

    #[test]
    fn corona_requires_seed() {
        let p = SuiteId::Corona.default_params();
        assert!(run_suite(SuiteId::Corona, &p).is_err());
    }

    #[test]
    fn dump_parses_back() {
        let g = Graph::path(3);
        let dump = instance_dump(&g, Some(2), Some(&Labeling::identity(3)));
        assert_eq!(Graph::parse(&dump).unwrap(), g);
    }
}
