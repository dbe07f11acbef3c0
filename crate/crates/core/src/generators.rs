//! Topology constructions: the complete-bipartite design plus the three
//! comparator families it is measured against.
//!
//! All generators are pure functions of their parameters and emit canonical
//! edge sets, so the same inputs always produce byte-identical edge lists.

use thiserror::Error;

use crate::topology::{Method, Partition, Topology};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeneratorError {
    #[error("need n >= 2, got {0}")]
    TooFewNodes(u32),
    #[error("connectivity target must satisfy 1 <= k <= n-1; got k={k}, n={n}")]
    BadK { n: u32, k: u32 },
    #[error("hypercube dimension must be >= 1")]
    ZeroDimension,
    #[error("hypercube dimension {0} is too large (limit 16)")]
    DimensionTooLarge(u32),
    #[error("hypercube requires n = 2^k; got n={n}, k={k}")]
    NotPowerOfTwo { n: u32, k: u32 },
    #[error("method `external` has no generator")]
    NotGeneratable,
}

/// Validated `(n, k)` generation parameters: `n >= 2`, `1 <= k <= n-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GeneratorParams {
    n: u32,
    k: u32,
}

impl GeneratorParams {
    pub fn new(n: u32, k: u32) -> Result<Self, GeneratorError> {
        if n < 2 {
            return Err(GeneratorError::TooFewNodes(n));
        }
        if k == 0 || k >= n {
            return Err(GeneratorError::BadK { n, k });
        }
        Ok(GeneratorParams { n, k })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }
}

/// Machine-readable caveat attached to a generated topology.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeneratorWarning {
    /// The complete bipartite graph K_{k,n-k} only reaches vertex
    /// connectivity n-k when k > n/2, short of the requested k.
    ConnectivityShortfall { requested: u32, achieved: u32 },
}

/// Generator output: the topology plus any structural caveat.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generated {
    pub topology: Topology,
    pub warning: Option<GeneratorWarning>,
}

impl Generated {
    fn plain(topology: Topology) -> Self {
        Generated {
            topology,
            warning: None,
        }
    }
}

/// Complete bipartite graph on `v1 = 1..=k` and `v2 = k+1..=n`:
/// every cross pair is linked, giving k(n-k) edges.
///
/// For `k > n/2` generation still succeeds but carries a
/// [`GeneratorWarning::ConnectivityShortfall`], since min(k, n-k) < k there.
pub fn generate_bipartite(p: &GeneratorParams) -> Generated {
    let (n, k) = (p.n, p.k);
    let partition = Partition::new(n, k).expect("params validated");
    let mut edges = Vec::with_capacity((k * (n - k)) as usize);
    for i in partition.v1() {
        for j in partition.v2() {
            edges.push((i, j));
        }
    }
    let topology = Topology::from_canonical(n, edges, Method::Bipartite);
    let warning = (k > n - k).then_some(GeneratorWarning::ConnectivityShortfall {
        requested: k,
        achieved: n - k,
    });
    Generated { topology, warning }
}

/// Each of the first k nodes links to every higher-numbered node:
/// (n-1) + (n-2) + … + (n-k) = kn - k(k+1)/2 edges.
pub fn generate_sequential(p: &GeneratorParams) -> Generated {
    let (n, k) = (p.n, p.k);
    let mut edges = Vec::new();
    for i in 1..=k {
        for j in (i + 1)..=n {
            edges.push((i, j));
        }
    }
    Generated::plain(Topology::from_canonical(n, edges, Method::Sequential))
}

/// Circulant construction on nodes equispaced around a circle, using
/// ceil(kn/2) edges.
///
/// Even k links each node to its k/2 nearest neighbors on both sides. Odd k
/// adds the diameters (even n) or the standard near-diameter completion
/// (odd n, one node ends up with degree k+1).
pub fn generate_harary(p: &GeneratorParams) -> Generated {
    let (n, k) = (p.n, p.k);
    let half = k / 2;
    let mut edges = Vec::new();
    let mut push = |a: u32, b: u32| {
        // a, b are 0-based positions on the circle
        let (a, b) = (a % n, b % n);
        let (lo, hi) = (a.min(b) + 1, a.max(b) + 1);
        edges.push((lo, hi));
    };
    for i in 0..n {
        for off in 1..=half {
            push(i, i + off);
        }
    }
    if k % 2 == 1 {
        if n % 2 == 0 {
            for i in 0..n / 2 {
                push(i, i + n / 2);
            }
        } else {
            push(0, (n - 1) / 2);
            push(0, n.div_ceil(2));
            for i in 1..(n - 1) / 2 {
                push(i, i + n.div_ceil(2));
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();
    Generated::plain(Topology::from_canonical(n, edges, Method::Harary))
}

/// Hypercube Q_k on 2^k nodes: node i and j are adjacent iff the k-bit
/// codes of i-1 and j-1 differ in exactly one bit. Every node has degree k.
pub fn generate_hypercube(dimension: u32) -> Result<Generated, GeneratorError> {
    if dimension == 0 {
        return Err(GeneratorError::ZeroDimension);
    }
    if dimension > 16 {
        return Err(GeneratorError::DimensionTooLarge(dimension));
    }
    let n = 1u32 << dimension;
    let mut edges = Vec::with_capacity((dimension * (n / 2)) as usize);
    for code in 0..n {
        for bit in 0..dimension {
            let other = code ^ (1 << bit);
            if code < other {
                edges.push((code + 1, other + 1));
            }
        }
    }
    Ok(Generated::plain(Topology::from_canonical(
        n,
        edges,
        Method::Hypercube,
    )))
}

/// Dispatch by method tag. Hypercube demands `n = 2^k`.
pub fn generate(method: Method, p: &GeneratorParams) -> Result<Generated, GeneratorError> {
    match method {
        Method::Bipartite => Ok(generate_bipartite(p)),
        Method::Sequential => Ok(generate_sequential(p)),
        Method::Harary => Ok(generate_harary(p)),
        Method::Hypercube => {
            if 1u64 << p.k != u64::from(p.n) {
                return Err(GeneratorError::NotPowerOfTwo { n: p.n, k: p.k });
            }
            generate_hypercube(p.k)
        }
        Method::External => Err(GeneratorError::NotGeneratable),
    }
}
