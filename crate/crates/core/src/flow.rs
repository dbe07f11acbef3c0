//! Unit-capacity max flow on the node-split digraph.
//!
//! Every node other than the endpoints becomes an `in -> out` arc of
//! capacity one; each undirected edge becomes two wide arcs between the
//! matching out/in copies. The flow value then equals the number of
//! internally vertex-disjoint paths between the endpoints, the saturated
//! split arcs on the residual boundary form a minimum vertex cut, and
//! decomposing the flow recovers the path family itself.

use std::collections::VecDeque;

pub(crate) struct PairFlow {
    pub value: u32,
    /// Internally vertex-disjoint paths, each `s ..= t`, `value` of them.
    pub paths: Vec<Vec<u32>>,
    /// Minimum vertex cut separating the pair; `None` for adjacent pairs
    /// (no vertex set can separate the endpoints of an edge).
    pub cut: Option<Vec<u32>>,
}

struct Net {
    graph: Vec<Vec<u32>>, // vertex -> arc ids (forward arcs have even ids)
    to: Vec<u32>,
    cap: Vec<u32>, // residual capacity
}

impl Net {
    fn new(vertices: usize) -> Self {
        Net {
            graph: vec![Vec::new(); vertices],
            to: Vec::new(),
            cap: Vec::new(),
        }
    }

    fn arc(&mut self, from: u32, to: u32, cap: u32) {
        let id = self.to.len() as u32;
        self.graph[from as usize].push(id);
        self.to.push(to);
        self.cap.push(cap);
        self.graph[to as usize].push(id + 1);
        self.to.push(from);
        self.cap.push(0);
    }

    fn flow_on(&self, forward_arc: u32) -> u32 {
        self.cap[(forward_arc ^ 1) as usize]
    }

    fn consume(&mut self, forward_arc: u32) {
        self.cap[(forward_arc ^ 1) as usize] -= 1;
    }
}

/// Maximum internally-disjoint-path count between `s` and `t`, with the
/// certifying path family and (for non-adjacent pairs) a minimum vertex cut.
///
/// `nodes` and `edges` must be sorted and canonical, as stored in
/// [`crate::topology::Topology`].
pub(crate) fn pair_flow(nodes: &[u32], edges: &[(u32, u32)], s: u32, t: u32) -> PairFlow {
    debug_assert!(s != t);
    let max_id = nodes.last().copied().unwrap_or(0) as usize;
    let mut dense = vec![u32::MAX; max_id + 1];
    for (i, &v) in nodes.iter().enumerate() {
        dense[v as usize] = i as u32;
    }
    let vin = |v: u32| 2 * dense[v as usize];
    let vout = |v: u32| 2 * dense[v as usize] + 1;

    let direct = (s.min(t), s.max(t));
    let adjacent = edges.binary_search(&direct).is_ok();
    // wider than any possible split-only cut, so saturated boundary arcs
    // are always split arcs
    let wide = nodes.len() as u32 + 1;

    let vertex_count = 2 * nodes.len();
    let mut net = Net::new(vertex_count);
    let mut split_arc = vec![u32::MAX; nodes.len()];
    for &v in nodes {
        if v != s && v != t {
            split_arc[dense[v as usize] as usize] = net.to.len() as u32;
            net.arc(vin(v), vout(v), 1);
        }
    }
    for &(a, b) in edges {
        if (a, b) == direct {
            continue; // the direct edge is accounted for as its own path
        }
        if a != t && b != s {
            net.arc(vout(a), vin(b), wide);
        }
        if b != t && a != s {
            net.arc(vout(b), vin(a), wide);
        }
    }

    let source = vout(s);
    let sink = vin(t);

    // Edmonds-Karp rounds; each augmentation adds exactly one disjoint path.
    let mut value = 0u32;
    let mut parent = vec![u32::MAX; vertex_count];
    let mut queue = VecDeque::new();
    loop {
        parent.fill(u32::MAX);
        queue.clear();
        queue.push_back(source);
        'bfs: while let Some(v) = queue.pop_front() {
            for &arc in &net.graph[v as usize] {
                let w = net.to[arc as usize];
                if net.cap[arc as usize] > 0 && parent[w as usize] == u32::MAX && w != source {
                    parent[w as usize] = arc;
                    if w == sink {
                        break 'bfs;
                    }
                    queue.push_back(w);
                }
            }
        }
        if parent[sink as usize] == u32::MAX {
            break;
        }
        let mut bottleneck = u32::MAX;
        let mut v = sink;
        while v != source {
            let arc = parent[v as usize];
            bottleneck = bottleneck.min(net.cap[arc as usize]);
            v = net.to[(arc ^ 1) as usize];
        }
        let mut v = sink;
        while v != source {
            let arc = parent[v as usize];
            net.cap[arc as usize] -= bottleneck;
            net.cap[(arc ^ 1) as usize] += bottleneck;
            v = net.to[(arc ^ 1) as usize];
        }
        value += bottleneck;
    }

    // Residual boundary before the decomposition below disturbs the caps.
    let cut = (!adjacent).then(|| {
        let mut reach = vec![false; vertex_count];
        let mut queue = VecDeque::new();
        reach[source as usize] = true;
        queue.push_back(source);
        while let Some(v) = queue.pop_front() {
            for &arc in &net.graph[v as usize] {
                let w = net.to[arc as usize] as usize;
                if net.cap[arc as usize] > 0 && !reach[w] {
                    reach[w] = true;
                    queue.push_back(w as u32);
                }
            }
        }
        nodes
            .iter()
            .copied()
            .filter(|&v| v != s && v != t && reach[vin(v) as usize] && !reach[vout(v) as usize])
            .collect::<Vec<u32>>()
    });

    // Peel one path per unit of flow leaving the source. Unit split arcs
    // make the outgoing flow arc unique at every interior node.
    let mut paths = Vec::with_capacity(value as usize + 1);
    if adjacent {
        paths.push(vec![s, t]);
    }
    let source_arcs: Vec<u32> = net.graph[source as usize]
        .iter()
        .copied()
        .filter(|&a| a % 2 == 0)
        .collect();
    for arc in source_arcs {
        if net.flow_on(arc) == 0 {
            continue;
        }
        net.consume(arc);
        let mut path = vec![s];
        let mut at = net.to[arc as usize]; // an in-vertex
        loop {
            if at == sink {
                path.push(t);
                break;
            }
            let v = nodes[(at / 2) as usize];
            path.push(v);
            let split = split_arc[(at / 2) as usize];
            debug_assert!(net.flow_on(split) > 0, "flow conservation violated");
            net.consume(split);
            let out_vertex = net.to[split as usize];
            let next = net.graph[out_vertex as usize]
                .iter()
                .copied()
                .find(|&a| a % 2 == 0 && net.flow_on(a) > 0)
                .expect("flow conservation violated");
            net.consume(next);
            at = net.to[next as usize];
        }
        paths.push(path);
    }
    debug_assert_eq!(paths.len() as u32, value + u32::from(adjacent));

    PairFlow {
        value: value + u32::from(adjacent),
        paths,
        cut,
    }
}
