//! Exact vertex connectivity with checkable certificates.
//!
//! Local connectivity of a pair comes from unit-capacity max flow on the
//! node-split digraph; global connectivity minimizes over all non-adjacent
//! pairs (complete graphs are `n-1`-connected by convention). Every answer
//! ships a certificate — a disjoint-path family for the binding pair, or a
//! vertex cut re-checked by traversal — plus an exponential brute-force
//! oracle for cross-checking small graphs.

use thiserror::Error;

use crate::combi::visit_combinations;
use crate::flow;
use crate::topology::{reachable_count, Topology};

/// Node budget for the exhaustive oracle.
pub const BRUTE_FORCE_NODE_LIMIT: usize = 12;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConnectivityError {
    #[error("connectivity needs at least 2 nodes, got {0}")]
    TooSmall(usize),
    #[error("nodes must be distinct, got {0} twice")]
    SameNode(u32),
    #[error("node {0} is not in the graph")]
    NoSuchNode(u32),
    #[error("k must satisfy 1 <= k <= n-1; got k={k}, n={n}")]
    BadK { k: u32, n: usize },
    #[error("exhaustive enumeration refused: {nodes} nodes exceeds the limit of {limit}")]
    TooLargeForBruteForce { nodes: usize, limit: usize },
}

/// Maximum internally-disjoint-path count for one pair, with the paths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalConnectivity {
    pub value: u32,
    pub paths: Vec<Vec<u32>>,
}

/// Exact vertex connectivity plus its certificates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectivityReport {
    pub kappa: u32,
    /// Vertex set whose removal disconnects the graph. `None` exactly when
    /// the graph is complete; the empty set when it is already disconnected.
    pub witness_cut: Option<Vec<u32>>,
    /// The pair whose local connectivity is binding (for a disconnected
    /// graph: representatives of two different components).
    pub sample_pair: (u32, u32),
    /// `kappa` internally disjoint paths joining `sample_pair`.
    pub sample_paths: Vec<Vec<u32>>,
}

/// Outcome of a k-connectivity check with the certifying evidence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KConnectedVerdict {
    pub satisfied: bool,
    pub kappa: u32,
    pub certificate: Certificate,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// `kappa` internally disjoint paths for the binding pair.
    DisjointPaths {
        pair: (u32, u32),
        paths: Vec<Vec<u32>>,
    },
    /// A vertex cut smaller than the requested k. For a disconnected graph
    /// the cut is empty and `separated` names two component representatives.
    VertexCut {
        nodes: Vec<u32>,
        separated: Option<(u32, u32)>,
    },
}

impl Certificate {
    /// Structured text form: the cut node list, or one line per disjoint
    /// path.
    pub fn render(&self) -> String {
        let mut out = String::new();
        match self {
            Certificate::DisjointPaths { pair, paths } => {
                out.push_str(&format!("pair: {} {}\n", pair.0, pair.1));
                for path in paths {
                    let joined: Vec<String> = path.iter().map(u32::to_string).collect();
                    out.push_str(&format!("path: {}\n", joined.join(" ")));
                }
            }
            Certificate::VertexCut { nodes, separated } => {
                let joined: Vec<String> = nodes.iter().map(u32::to_string).collect();
                if joined.is_empty() {
                    out.push_str("cut:\n");
                } else {
                    out.push_str(&format!("cut: {}\n", joined.join(" ")));
                }
                if let Some((a, b)) = separated {
                    out.push_str(&format!("separated: {a} {b}\n"));
                }
            }
        }
        out
    }
}

impl KConnectedVerdict {
    /// Structured text form: kappa, then the certificate.
    pub fn render(&self) -> String {
        format!("kappa: {}\n{}", self.kappa, self.certificate.render())
    }
}

fn require_node(t: &Topology, v: u32) -> Result<(), ConnectivityError> {
    if t.has_node(v) {
        Ok(())
    } else {
        Err(ConnectivityError::NoSuchNode(v))
    }
}

/// Maximum number of internally vertex-disjoint `s`–`u` paths, with the
/// family itself. Adjacent pairs count the direct edge as one path.
pub fn local_connectivity(
    t: &Topology,
    s: u32,
    u: u32,
) -> Result<LocalConnectivity, ConnectivityError> {
    if s == u {
        return Err(ConnectivityError::SameNode(s));
    }
    require_node(t, s)?;
    require_node(t, u)?;
    let pf = flow::pair_flow(t.nodes(), t.edges(), s, u);
    Ok(LocalConnectivity {
        value: pf.value,
        paths: pf.paths,
    })
}

fn non_adjacent_pairs(t: &Topology) -> Vec<(u32, u32)> {
    let nodes = t.nodes();
    let mut pairs = Vec::new();
    for (i, &s) in nodes.iter().enumerate() {
        for &u in &nodes[i + 1..] {
            if !t.has_edge(s, u) {
                pairs.push((s, u));
            }
        }
    }
    pairs
}

fn report_for_pair(t: &Topology, s: u32, u: u32, value: u32) -> ConnectivityReport {
    let pf = flow::pair_flow(t.nodes(), t.edges(), s, u);
    debug_assert_eq!(pf.value, value);
    if value == 0 {
        return ConnectivityReport {
            kappa: 0,
            witness_cut: Some(Vec::new()),
            sample_pair: (s, u),
            sample_paths: Vec::new(),
        };
    }
    let cut = pf.cut.expect("minimizing pair is non-adjacent");
    assert_eq!(cut.len() as u32, value, "residual cut size must equal flow");
    // never trust the residual alone: re-check the cut by traversal
    assert!(
        cut_disconnects(t, &cut),
        "flow-derived cut failed the traversal re-check"
    );
    ConnectivityReport {
        kappa: value,
        witness_cut: Some(cut),
        sample_pair: (s, u),
        sample_paths: pf.paths,
    }
}

fn complete_report(t: &Topology) -> ConnectivityReport {
    let nodes = t.nodes();
    let (s, u) = (nodes[0], nodes[1]);
    let pf = flow::pair_flow(t.nodes(), t.edges(), s, u);
    ConnectivityReport {
        kappa: t.node_count() as u32 - 1,
        witness_cut: None,
        sample_pair: (s, u),
        sample_paths: pf.paths,
    }
}

fn check_size(t: &Topology) -> Result<(), ConnectivityError> {
    if t.node_count() < 2 {
        return Err(ConnectivityError::TooSmall(t.node_count()));
    }
    Ok(())
}

/// Exact vertex connectivity, minimizing pair local connectivity over all
/// non-adjacent pairs (ties broken toward the lexicographically smallest
/// pair, so the report is deterministic). Fans out over the pairs with
/// rayon; identical to [`vertex_connectivity_seq`].
#[cfg(feature = "parallel")]
pub fn vertex_connectivity(t: &Topology) -> Result<ConnectivityReport, ConnectivityError> {
    use rayon::prelude::*;

    check_size(t)?;
    let pairs = non_adjacent_pairs(t);
    if pairs.is_empty() {
        return Ok(complete_report(t));
    }
    let (value, s, u) = pairs
        .par_iter()
        .map(|&(s, u)| (flow::pair_flow(t.nodes(), t.edges(), s, u).value, s, u))
        .min()
        .expect("at least one pair");
    Ok(report_for_pair(t, s, u, value))
}

/// Sequential build: identical to the parallel version.
#[cfg(not(feature = "parallel"))]
pub fn vertex_connectivity(t: &Topology) -> Result<ConnectivityReport, ConnectivityError> {
    vertex_connectivity_seq(t)
}

/// Single-threaded variant of [`vertex_connectivity`]; always available and
/// guaranteed to return the identical report.
pub fn vertex_connectivity_seq(t: &Topology) -> Result<ConnectivityReport, ConnectivityError> {
    check_size(t)?;
    let pairs = non_adjacent_pairs(t);
    if pairs.is_empty() {
        return Ok(complete_report(t));
    }
    let (value, s, u) = pairs
        .iter()
        .map(|&(s, u)| (flow::pair_flow(t.nodes(), t.edges(), s, u).value, s, u))
        .min()
        .expect("at least one pair");
    Ok(report_for_pair(t, s, u, value))
}

/// Whether the graph is k-connected, certified either way.
pub fn is_k_connected(t: &Topology, k: u32) -> Result<KConnectedVerdict, ConnectivityError> {
    check_size(t)?;
    let n = t.node_count();
    if k == 0 || k as usize >= n {
        return Err(ConnectivityError::BadK { k, n });
    }
    let report = vertex_connectivity(t)?;
    if report.kappa >= k {
        Ok(KConnectedVerdict {
            satisfied: true,
            kappa: report.kappa,
            certificate: Certificate::DisjointPaths {
                pair: report.sample_pair,
                paths: report.sample_paths,
            },
        })
    } else {
        Ok(KConnectedVerdict {
            satisfied: false,
            kappa: report.kappa,
            certificate: Certificate::VertexCut {
                nodes: report.witness_cut.unwrap_or_default(),
                separated: (report.kappa == 0).then_some(report.sample_pair),
            },
        })
    }
}

/// Exhaustive oracle: the smallest removal count that disconnects the
/// graph, by enumerating every node subset in increasing size. Removals
/// that leave fewer than two nodes never count, so complete graphs come out
/// as `n-1`. Refuses graphs beyond [`BRUTE_FORCE_NODE_LIMIT`] nodes.
pub fn brute_force_connectivity(t: &Topology) -> Result<u32, ConnectivityError> {
    check_size(t)?;
    let n = t.node_count();
    if n > BRUTE_FORCE_NODE_LIMIT {
        return Err(ConnectivityError::TooLargeForBruteForce {
            nodes: n,
            limit: BRUTE_FORCE_NODE_LIMIT,
        });
    }
    let nodes = t.nodes();
    let adj = t.adjacency();
    let mut alive = vec![false; adj.len()];
    for c in 0..=(n - 2) {
        let mut disconnects = false;
        visit_combinations(n, c, &mut |subset| {
            for &v in nodes {
                alive[v as usize] = true;
            }
            for &i in subset {
                alive[nodes[i] as usize] = false;
            }
            let start = nodes
                .iter()
                .copied()
                .find(|&v| alive[v as usize])
                .expect("at least two survivors");
            if reachable_count(&adj, start, |v| alive[v as usize]) != n - c {
                disconnects = true;
            }
            disconnects // stop as soon as one subset disconnects
        });
        if disconnects {
            return Ok(c as u32);
        }
    }
    Ok(n as u32 - 1)
}

/// True when removing `cut` leaves at least two nodes that are no longer
/// mutually reachable. Independent of the flow machinery.
pub fn cut_disconnects(t: &Topology, cut: &[u32]) -> bool {
    let rest = t.remove_nodes(cut);
    rest.node_count() >= 2 && !rest.is_connected().unwrap_or(true)
}

/// Validates a Menger path family: every path is a simple `s..=u` walk along
/// existing edges, internal nodes are disjoint across paths, and no path
/// repeats. Independent of the flow machinery.
pub fn validate_disjoint_paths(t: &Topology, s: u32, u: u32, paths: &[Vec<u32>]) -> bool {
    use std::collections::HashSet;
    let mut internals = HashSet::new();
    let mut seen_direct = false;
    for path in paths {
        if path.len() < 2 || path[0] != s || *path.last().unwrap() != u {
            return false;
        }
        if path.len() == 2 {
            // only one direct path can exist in a simple graph
            if seen_direct {
                return false;
            }
            seen_direct = true;
        }
        for pair in path.windows(2) {
            if !t.has_edge(pair[0], pair[1]) {
                return false;
            }
        }
        let inner = &path[1..path.len() - 1];
        let mut local = HashSet::new();
        for &v in inner {
            if v == s || v == u || !local.insert(v) || !internals.insert(v) {
                return false;
            }
        }
    }
    true
}
