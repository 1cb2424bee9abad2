//! Named verification suites, selected at runtime from a registry.
//!
//! Reports contain only deterministic data, so two runs with the same configuration
//! serialize to identical bytes.

mod epsilon_suites;
mod group_suites;

use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};

pub const DEFAULT_SEED: u64 = 0x5eed_2024;

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    /// `(q, r)` pairs overriding the suite's default groups.
    pub groups: Option<Vec<(u64, usize)>>,
    pub seed: u64,
    /// Overrides the default number of sampled instances.
    pub samples: Option<usize>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            groups: None,
            seed: DEFAULT_SEED,
            samples: None,
        }
    }
}

impl SuiteConfig {
    fn groups_or(&self, default: &[(u64, usize)]) -> Vec<(u64, usize)> {
        self.groups.clone().unwrap_or_else(|| default.to_vec())
    }

    fn samples_or(&self, default: usize) -> usize {
        self.samples.unwrap_or(default)
    }

    /// Generator for one `(q, r)`, independent of the order groups are visited in.
    fn rng(&self, q: u64, r: usize) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed ^ (q << 8) ^ r as u64)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub passed: bool,
    pub checks: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Accumulates checks in execution order.
#[derive(Default)]
struct Checks(Vec<CheckResult>);

impl Checks {
    fn record(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.0.push(CheckResult {
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }

    /// Records the number of passing instances out of the total.
    fn tally(&mut self, name: impl Into<String>, passed: usize, total: usize) {
        self.record(name, passed == total && total > 0, format!("{passed}/{total}"));
    }

    fn finish(self, suite: &str, seed: u64) -> SuiteReport {
        SuiteReport {
            suite: suite.to_string(),
            seed,
            passed: self.0.iter().all(|c| c.passed),
            checks: self.0,
        }
    }
}

pub trait Suite: Send + Sync {
    fn name(&self) -> &'static str;
    fn description(&self) -> &'static str;
    fn run(&self, config: &SuiteConfig) -> Result<SuiteReport>;
}

pub struct Registry {
    suites: BTreeMap<&'static str, Box<dyn Suite>>,
}

impl Registry {
    pub fn empty() -> Self {
        Registry {
            suites: BTreeMap::new(),
        }
    }

    /// All built-in suites.
    pub fn standard() -> Self {
        let mut reg = Self::empty();
        reg.register(Box::new(group_suites::CuspidalSuite));
        reg.register(Box::new(group_suites::BesselSuite));
        reg.register(Box::new(group_suites::RealizationSuite));
        reg.register(Box::new(group_suites::VanishingSuite));
        reg.register(Box::new(epsilon_suites::EpsilonSuite));
        reg.register(Box::new(epsilon_suites::TransferSuite));
        reg
    }

    pub fn register(&mut self, suite: Box<dyn Suite>) {
        self.suites.insert(suite.name(), suite);
    }

    pub fn get(&self, name: &str) -> Result<&dyn Suite> {
        self.suites
            .get(name)
            .map(|s| s.as_ref())
            .ok_or_else(|| Error::UnknownSuite(name.to_string()))
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.suites.keys().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn Suite> {
        self.suites.values().map(|s| s.as_ref())
    }

    pub fn run(&self, name: &str, config: &SuiteConfig) -> Result<SuiteReport> {
        self.get(name)?.run(config)
    }
}
