//! Random-failure survivability: Monte Carlo trials and the exact
//! enumeration oracle they must converge to.
//!
//! Each trial fails `f` uniformly-random distinct nodes (or links) and asks
//! whether the survivors still form a connected graph. Per-trial randomness
//! comes from a substream seeded with `seed ^ trial_index`, so the outcome
//! of a trial never depends on execution order and the parallel and
//! sequential runs produce identical reports.

use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::combi::{binomial, visit_combinations};
use crate::connectivity::{vertex_connectivity, ConnectivityError};
use crate::topology::{reachable_count, Topology};

/// Subset-count budget for the exhaustive oracle.
pub const SUBSET_BUDGET: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FailureMode {
    Node,
    Link,
}

impl FailureMode {
    pub fn as_str(self) -> &'static str {
        match self {
            FailureMode::Node => "node",
            FailureMode::Link => "link",
        }
    }
}

impl fmt::Display for FailureMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FailureMode {
    type Err = SimError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "node" => Ok(FailureMode::Node),
            "link" => Ok(FailureMode::Link),
            other => Err(SimError::UnknownMode(other.to_owned())),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SimError {
    #[error("trials must be >= 1")]
    NoTrials,
    #[error("node mode needs f <= n-2; got f={f} with n={n}")]
    TooManyNodeFailures { f: u32, n: usize },
    #[error("link mode needs f <= |edges| = {edges}; got f={f}")]
    TooManyLinkFailures { f: u32, edges: usize },
    #[error("C({n},{f}) = {count} subsets exceed the enumeration budget of {budget}")]
    SubsetBudget {
        n: usize,
        f: u32,
        count: u64,
        budget: u64,
    },
    #[error("subset count C({n},{f}) overflows")]
    SubsetOverflow { n: usize, f: u32 },
    #[error("failure mode must be `node` or `link`, got {0:?}")]
    UnknownMode(String),
    #[error(transparent)]
    Connectivity(#[from] ConnectivityError),
}

/// Failure-injection experiment description.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TrialConfig {
    pub mode: FailureMode,
    /// Simultaneously failed elements per trial.
    pub failures: u32,
    pub trials: u64,
    pub seed: u64,
}

/// Monte Carlo outcome, with the topology's exact connectivity attached for
/// context.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurvivabilityReport {
    pub mode: FailureMode,
    pub failures: u32,
    pub trials: u64,
    pub survived: u64,
    pub kappa: u32,
}

impl SurvivabilityReport {
    pub fn fraction(&self) -> f64 {
        self.survived as f64 / self.trials as f64
    }

    pub fn csv_header() -> &'static str {
        "mode,f,trials,survived,fraction,kappa"
    }

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{:.6},{}",
            self.mode,
            self.failures,
            self.trials,
            self.survived,
            self.fraction(),
            self.kappa
        )
    }
}

/// Exact enumeration outcome: `survived` of `total` f-subsets keep the
/// graph connected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactSurvivability {
    pub mode: FailureMode,
    pub failures: u32,
    pub survived: u64,
    pub total: u64,
}

impl ExactSurvivability {
    pub fn fraction(&self) -> f64 {
        self.survived as f64 / self.total as f64
    }
}

/// Prebuilt lookup tables shared by all trials.
struct SimContext<'a> {
    nodes: &'a [u32],
    /// node-id indexed neighbor lists
    adj: Vec<Vec<u32>>,
    /// node-id indexed (neighbor, edge index) lists, for link failures
    adj_edges: Vec<Vec<(u32, u32)>>,
}

impl<'a> SimContext<'a> {
    fn new(t: &'a Topology) -> Self {
        let adj = t.adjacency();
        let max = t.nodes().last().copied().unwrap_or(0) as usize;
        let mut adj_edges = vec![Vec::new(); max + 1];
        for (idx, &(u, v)) in t.edges().iter().enumerate() {
            adj_edges[u as usize].push((v, idx as u32));
            adj_edges[v as usize].push((u, idx as u32));
        }
        SimContext {
            nodes: t.nodes(),
            adj,
            adj_edges,
        }
    }

    fn node_subset_survives(&self, failed_positions: &[usize]) -> bool {
        let mut dead = vec![false; self.adj.len()];
        for &p in failed_positions {
            dead[self.nodes[p] as usize] = true;
        }
        let survivors = self.nodes.len() - failed_positions.len();
        let Some(start) = self.nodes.iter().copied().find(|&v| !dead[v as usize]) else {
            return false;
        };
        reachable_count(&self.adj, start, |v| !dead[v as usize]) == survivors
    }

    fn link_subset_survives(&self, failed_edges: &[usize], edge_count: usize) -> bool {
        let mut removed = vec![false; edge_count];
        for &e in failed_edges {
            removed[e] = true;
        }
        // BFS over all nodes, skipping removed edges
        let mut seen = vec![false; self.adj_edges.len()];
        let start = self.nodes[0];
        let mut queue = std::collections::VecDeque::new();
        seen[start as usize] = true;
        queue.push_back(start);
        let mut count = 0usize;
        while let Some(v) = queue.pop_front() {
            count += 1;
            for &(w, e) in &self.adj_edges[v as usize] {
                if !removed[e as usize] && !seen[w as usize] {
                    seen[w as usize] = true;
                    queue.push_back(w);
                }
            }
        }
        count == self.nodes.len()
    }
}

fn validate(t: &Topology, mode: FailureMode, failures: u32) -> Result<(), SimError> {
    let n = t.node_count();
    match mode {
        FailureMode::Node => {
            if failures as usize + 2 > n {
                return Err(SimError::TooManyNodeFailures { f: failures, n });
            }
        }
        FailureMode::Link => {
            if failures as usize > t.edge_count() {
                return Err(SimError::TooManyLinkFailures {
                    f: failures,
                    edges: t.edge_count(),
                });
            }
        }
    }
    Ok(())
}

fn trial_survives(ctx: &SimContext<'_>, t: &Topology, c: &TrialConfig, trial: u64) -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(c.seed ^ trial);
    match c.mode {
        FailureMode::Node => {
            let picks =
                rand::seq::index::sample(&mut rng, ctx.nodes.len(), c.failures as usize).into_vec();
            ctx.node_subset_survives(&picks)
        }
        FailureMode::Link => {
            let picks =
                rand::seq::index::sample(&mut rng, t.edge_count(), c.failures as usize).into_vec();
            ctx.link_subset_survives(&picks, t.edge_count())
        }
    }
}

fn finish_report(
    t: &Topology,
    c: &TrialConfig,
    survived: u64,
) -> Result<SurvivabilityReport, SimError> {
    Ok(SurvivabilityReport {
        mode: c.mode,
        failures: c.failures,
        trials: c.trials,
        survived,
        kappa: vertex_connectivity(t)?.kappa,
    })
}

/// Monte Carlo survivability estimate. Trials fan out via rayon; the report
/// is identical to [`simulate_seq`] for the same inputs.
#[cfg(feature = "parallel")]
pub fn simulate(t: &Topology, c: &TrialConfig) -> Result<SurvivabilityReport, SimError> {
    use rayon::prelude::*;

    if c.trials == 0 {
        return Err(SimError::NoTrials);
    }
    validate(t, c.mode, c.failures)?;
    let ctx = SimContext::new(t);
    let survived = (0..c.trials)
        .into_par_iter()
        .filter(|&trial| trial_survives(&ctx, t, c, trial))
        .count() as u64;
    finish_report(t, c, survived)
}

/// Sequential build: identical to the parallel version.
#[cfg(not(feature = "parallel"))]
pub fn simulate(t: &Topology, c: &TrialConfig) -> Result<SurvivabilityReport, SimError> {
    simulate_seq(t, c)
}

/// Single-threaded variant of [`simulate`]; always available and guaranteed
/// to return the identical report.
pub fn simulate_seq(t: &Topology, c: &TrialConfig) -> Result<SurvivabilityReport, SimError> {
    if c.trials == 0 {
        return Err(SimError::NoTrials);
    }
    validate(t, c.mode, c.failures)?;
    let ctx = SimContext::new(t);
    let survived = (0..c.trials)
        .filter(|&trial| trial_survives(&ctx, t, c, trial))
        .count() as u64;
    finish_report(t, c, survived)
}

fn exhaustive_budget(t: &Topology, f: u32, mode: FailureMode) -> Result<(usize, u64), SimError> {
    validate(t, mode, f)?;
    let population = match mode {
        FailureMode::Node => t.node_count(),
        FailureMode::Link => t.edge_count(),
    };
    let count = binomial(population as u64, u64::from(f))
        .ok_or(SimError::SubsetOverflow { n: population, f })?;
    if count > SUBSET_BUDGET {
        return Err(SimError::SubsetBudget {
            n: population,
            f,
            count,
            budget: SUBSET_BUDGET,
        });
    }
    Ok((population, count))
}

fn subset_survives(
    ctx: &SimContext<'_>,
    t: &Topology,
    mode: FailureMode,
    subset: &[usize],
) -> bool {
    match mode {
        FailureMode::Node => ctx.node_subset_survives(subset),
        FailureMode::Link => ctx.link_subset_survives(subset, t.edge_count()),
    }
}

/// Exact survivable fraction over every f-subset of nodes or links.
/// Enumeration splits by smallest failed element and fans out via rayon;
/// identical to [`exhaustive_survivability_seq`].
#[cfg(feature = "parallel")]
pub fn exhaustive_survivability(
    t: &Topology,
    f: u32,
    mode: FailureMode,
) -> Result<ExactSurvivability, SimError> {
    use rayon::prelude::*;

    let (population, total) = exhaustive_budget(t, f, mode)?;
    let ctx = SimContext::new(t);
    let survived = if f == 0 {
        u64::from(subset_survives(&ctx, t, mode, &[]))
    } else {
        let f = f as usize;
        (0..=(population - f))
            .into_par_iter()
            .map(|first| {
                let mut hits = 0u64;
                let mut subset = Vec::with_capacity(f);
                visit_combinations(population - first - 1, f - 1, &mut |rest| {
                    subset.clear();
                    subset.push(first);
                    subset.extend(rest.iter().map(|&r| first + 1 + r));
                    if subset_survives(&ctx, t, mode, &subset) {
                        hits += 1;
                    }
                    false
                });
                hits
            })
            .sum()
    };
    Ok(ExactSurvivability {
        mode,
        failures: f,
        survived,
        total,
    })
}

/// Sequential build: identical to the parallel version.
#[cfg(not(feature = "parallel"))]
pub fn exhaustive_survivability(
    t: &Topology,
    f: u32,
    mode: FailureMode,
) -> Result<ExactSurvivability, SimError> {
    exhaustive_survivability_seq(t, f, mode)
}

/// Single-threaded variant of [`exhaustive_survivability`].
pub fn exhaustive_survivability_seq(
    t: &Topology,
    f: u32,
    mode: FailureMode,
) -> Result<ExactSurvivability, SimError> {
    let (population, total) = exhaustive_budget(t, f, mode)?;
    let ctx = SimContext::new(t);
    let mut survived = 0u64;
    visit_combinations(population, f as usize, &mut |subset| {
        if subset_survives(&ctx, t, mode, subset) {
            survived += 1;
        }
        false
    });
    Ok(ExactSurvivability {
        mode,
        failures: f,
        survived,
        total,
    })
}
