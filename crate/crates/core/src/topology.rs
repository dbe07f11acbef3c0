//! Undirected simple graph on numbered nodes, shared by every other stage.
//!
//! Nodes are the ranks produced by the numbering step. Edges are stored in
//! canonical form (`u < v`, sorted lexicographically) so identical inputs
//! serialize byte-for-byte identically.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::costmodel::Numbering;

/// Tag identifying which construction produced a topology.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Bipartite,
    Sequential,
    Harary,
    Hypercube,
    External,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Bipartite => "bipartite",
            Method::Sequential => "sequential",
            Method::Harary => "harary",
            Method::Hypercube => "hypercube",
            Method::External => "external",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = TopologyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "bipartite" => Ok(Method::Bipartite),
            "sequential" => Ok(Method::Sequential),
            "harary" => Ok(Method::Harary),
            "hypercube" => Ok(Method::Hypercube),
            "external" => Ok(Method::External),
            other => Err(TopologyError::UnknownMethod(other.to_owned())),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum TopologyError {
    #[error("graph has no nodes")]
    Empty,
    #[error("node ids must be in 1..=n; got {0}")]
    NodeOutOfRange(u32),
    #[error("self-loop at node {0}")]
    SelfLoop(u32),
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(u32, u32),
    #[error("edge {0} {1} touches a node that is not in the graph")]
    UnknownEndpoint(u32, u32),
    #[error("node {0} is not in the graph")]
    NoSuchNode(u32),
    #[error("unknown construction method {0:?}")]
    UnknownMethod(String),
    #[error("edge list needs a `n k method` header line")]
    MissingHeader,
    #[error("header: {0}")]
    BadHeader(String),
    #[error("header: k must satisfy 1 <= k <= n-1; got k={k}, n={n}")]
    HeaderBadK { n: u32, k: u32 },
    #[error("line {line}: expected `u v`, got {raw:?}")]
    BadEdgeLine { line: usize, raw: String },
    #[error("only graphs on contiguous nodes 1..=n can be serialized")]
    NotContiguous,
}

/// Split of the node set `1..=n` into `v1 = 1..=k` and `v2 = k+1..=n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Partition {
    n: u32,
    k: u32,
}

impl Partition {
    pub fn new(n: u32, k: u32) -> Result<Self, TopologyError> {
        if n < 2 {
            return Err(TopologyError::Empty);
        }
        if k == 0 || k >= n {
            return Err(TopologyError::HeaderBadK { n, k });
        }
        Ok(Partition { n, k })
    }

    pub fn v1(&self) -> std::ops::RangeInclusive<u32> {
        1..=self.k
    }

    pub fn v2(&self) -> std::ops::RangeInclusive<u32> {
        self.k + 1..=self.n
    }
}

/// Immutable undirected simple graph.
///
/// Usually lives on nodes `1..=n`; removing nodes keeps the survivors under
/// their original identities, so the node set may have gaps after removal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Topology {
    nodes: Vec<u32>,        // sorted, distinct, all >= 1
    edges: Vec<(u32, u32)>, // canonical u < v, sorted, distinct
    method: Method,
}

/// Parsed edge-list file: the topology plus the connectivity target `k`
/// recorded in its header.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeListDoc {
    pub topology: Topology,
    pub k: u32,
}

impl Topology {
    /// Builds a graph on nodes `1..=n` from an edge list in any order.
    pub fn new(n: u32, edges: Vec<(u32, u32)>, method: Method) -> Result<Self, TopologyError> {
        if n == 0 {
            return Err(TopologyError::Empty);
        }
        let mut canon = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            if a == b {
                return Err(TopologyError::SelfLoop(a));
            }
            for v in [a, b] {
                if v == 0 || v > n {
                    return Err(TopologyError::NodeOutOfRange(v));
                }
            }
            canon.push((a.min(b), a.max(b)));
        }
        canon.sort_unstable();
        if let Some(w) = canon.windows(2).find(|w| w[0] == w[1]) {
            return Err(TopologyError::DuplicateEdge(w[0].0, w[0].1));
        }
        Ok(Topology {
            nodes: (1..=n).collect(),
            edges: canon,
            method,
        })
    }

    /// Internal constructor for generators that already produce canonical,
    /// duplicate-free edge sets.
    pub(crate) fn from_canonical(n: u32, mut edges: Vec<(u32, u32)>, method: Method) -> Self {
        edges.sort_unstable();
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(edges.iter().all(|&(u, v)| u < v && u >= 1 && v <= n));
        Topology {
            nodes: (1..=n).collect(),
            edges,
            method,
        }
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn nodes(&self) -> &[u32] {
        &self.nodes
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn method(&self) -> Method {
        self.method
    }

    /// `Some(n)` when the node set is exactly `1..=n`.
    pub fn contiguous_n(&self) -> Option<u32> {
        let n = self.nodes.len() as u32;
        (self.nodes.first() == Some(&1) && self.nodes.last() == Some(&n)).then_some(n)
    }

    pub fn has_node(&self, v: u32) -> bool {
        self.nodes.binary_search(&v).is_ok()
    }

    pub fn has_edge(&self, a: u32, b: u32) -> bool {
        if a == b {
            return false;
        }
        self.edges.binary_search(&(a.min(b), a.max(b))).is_ok()
    }

    /// Number of edges incident on `v`.
    pub fn degree(&self, v: u32) -> Result<u32, TopologyError> {
        if !self.has_node(v) {
            return Err(TopologyError::NoSuchNode(v));
        }
        Ok(self
            .edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count() as u32)
    }

    /// Neighbor lists indexed by node id (index 0 unused; absent nodes get
    /// empty lists). Each list is sorted.
    pub fn adjacency(&self) -> Vec<Vec<u32>> {
        let max = self.nodes.last().copied().unwrap_or(0) as usize;
        let mut adj = vec![Vec::new(); max + 1];
        for &(u, v) in &self.edges {
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    /// Whether every node is reachable from the smallest node.
    /// A single-node graph counts as connected; an empty graph is an error.
    pub fn is_connected(&self) -> Result<bool, TopologyError> {
        let Some(&start) = self.nodes.first() else {
            return Err(TopologyError::Empty);
        };
        let adj = self.adjacency();
        Ok(reachable_count(&adj, start, |_| true) == self.node_count())
    }

    /// Induced subgraph on the surviving nodes; survivors keep their ids.
    /// Ids in `removed` that are not present are ignored.
    pub fn remove_nodes(&self, removed: &[u32]) -> Topology {
        let gone: Vec<u32> = removed.to_vec();
        let dropped = |v: u32| gone.contains(&v);
        Topology {
            nodes: self
                .nodes
                .iter()
                .copied()
                .filter(|&v| !dropped(v))
                .collect(),
            edges: self
                .edges
                .iter()
                .copied()
                .filter(|&(u, v)| !dropped(u) && !dropped(v))
                .collect(),
            method: self.method,
        }
    }

    /// Canonical edge-list document: `n k method` header, one `u v` line per
    /// edge in sorted order. Requires nodes `1..=n`.
    pub fn write_edge_list(&self, k: u32) -> Result<String, TopologyError> {
        let n = self.contiguous_n().ok_or(TopologyError::NotContiguous)?;
        let mut out = format!("{} {} {}\n", n, k, self.method);
        for &(u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        Ok(out)
    }

    /// Parses the canonical edge-list document.
    pub fn parse_edge_list(text: &str) -> Result<EdgeListDoc, TopologyError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let (_, header) = lines.next().ok_or(TopologyError::MissingHeader)?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        if fields.len() != 3 {
            return Err(TopologyError::BadHeader(format!(
                "expected `n k method`, got {header:?}"
            )));
        }
        let n: u32 = fields[0]
            .parse()
            .map_err(|_| TopologyError::BadHeader(format!("bad node count {:?}", fields[0])))?;
        let k: u32 = fields[1]
            .parse()
            .map_err(|_| TopologyError::BadHeader(format!("bad k {:?}", fields[1])))?;
        let method: Method = fields[2].parse()?;
        if n < 2 {
            return Err(TopologyError::BadHeader(format!("need n >= 2, got {n}")));
        }
        if k == 0 || k >= n {
            return Err(TopologyError::HeaderBadK { n, k });
        }
        let mut edges = Vec::new();
        for (line, raw) in lines {
            let mut it = raw.split_whitespace();
            let (Some(a), Some(b), None) = (it.next(), it.next(), it.next()) else {
                return Err(TopologyError::BadEdgeLine {
                    line,
                    raw: raw.to_owned(),
                });
            };
            let parse = |s: &str| {
                s.parse::<u32>().map_err(|_| TopologyError::BadEdgeLine {
                    line,
                    raw: raw.to_owned(),
                })
            };
            edges.push((parse(a)?, parse(b)?));
        }
        let topology = Topology::new(n, edges, method)?;
        Ok(EdgeListDoc { topology, k })
    }

    /// DOT serialization. When a numbering is supplied, nodes carry their
    /// original symbols as labels.
    pub fn to_dot(&self, labels: Option<&Numbering>) -> String {
        let mut out = String::from("graph topology {\n");
        for &v in &self.nodes {
            match labels.and_then(|nb| nb.label_of(v)) {
                Some(label) => out.push_str(&format!("  {v} [label=\"{label}\"];\n")),
                None => out.push_str(&format!("  {v};\n")),
            }
        }
        for &(u, v) in &self.edges {
            out.push_str(&format!("  {u} -- {v};\n"));
        }
        out.push_str("}\n");
        out
    }
}

/// BFS size of the component containing `start`, restricted to nodes where
/// `alive` holds. `adj` is indexed by node id.
pub(crate) fn reachable_count(adj: &[Vec<u32>], start: u32, alive: impl Fn(u32) -> bool) -> usize {
    let mut seen = vec![false; adj.len()];
    let mut queue = VecDeque::new();
    seen[start as usize] = true;
    queue.push_back(start);
    let mut count = 0;
    while let Some(v) = queue.pop_front() {
        count += 1;
        for &w in &adj[v as usize] {
            if !seen[w as usize] && alive(w) {
                seen[w as usize] = true;
                queue.push_back(w);
            }
        }
    }
    count
}
