//! Local vertex connectivity by unit-capacity max flow on the vertex-split network.

use std::collections::VecDeque;

use crate::graph::Multigraph;

#[derive(Debug, Clone, Copy)]
struct Arc {
    to: usize,
    cap: u32,
    rev: usize,
}

/// Residual network with adjacency lists and paired reverse arcs.
#[derive(Debug, Clone)]
pub(crate) struct FlowNetwork {
    adj: Vec<Vec<Arc>>,
}

impl FlowNetwork {
    pub(crate) fn new(nodes: usize) -> Self {
        FlowNetwork {
            adj: vec![Vec::new(); nodes],
        }
    }

    pub(crate) fn add_arc(&mut self, from: usize, to: usize, cap: u32) {
        let rev_from = self.adj[to].len();
        let rev_to = self.adj[from].len();
        self.adj[from].push(Arc { to, cap, rev: rev_from });
        self.adj[to].push(Arc {
            to: from,
            cap: 0,
            rev: rev_to,
        });
    }

    /// Edmonds–Karp. Every augmenting path carries one unit here, since each
    /// path crosses a unit split arc or stops because `limit` was reached.
    pub(crate) fn max_flow(&mut self, source: usize, sink: usize, limit: u32) -> u32 {
        let mut flow = 0;
        let nodes = self.adj.len();
        let mut parent: Vec<Option<(usize, usize)>> = vec![None; nodes];
        while flow < limit {
            parent.iter_mut().for_each(|p| *p = None);
            let mut queue = VecDeque::from([source]);
            let mut seen = vec![false; nodes];
            seen[source] = true;
            while let Some(v) = queue.pop_front() {
                if v == sink {
                    break;
                }
                for (i, arc) in self.adj[v].iter().enumerate() {
                    if arc.cap > 0 && !seen[arc.to] {
                        seen[arc.to] = true;
                        parent[arc.to] = Some((v, i));
                        queue.push_back(arc.to);
                    }
                }
            }
            if !seen[sink] {
                break;
            }
            let mut bottleneck = u32::MAX;
            let mut v = sink;
            while let Some((u, i)) = parent[v] {
                bottleneck = bottleneck.min(self.adj[u][i].cap);
                v = u;
            }
            let push = bottleneck.min(limit - flow);
            let mut v = sink;
            while let Some((u, i)) = parent[v] {
                let rev = self.adj[u][i].rev;
                self.adj[u][i].cap -= push;
                self.adj[v][rev].cap += push;
                v = u;
            }
            flow += push;
        }
        flow
    }

    /// Nodes reachable from `source` in the residual network.
    pub(crate) fn residual_reach(&self, source: usize) -> Vec<bool> {
        let mut seen = vec![false; self.adj.len()];
        seen[source] = true;
        let mut stack = vec![source];
        while let Some(v) = stack.pop() {
            for arc in &self.adj[v] {
                if arc.cap > 0 && !seen[arc.to] {
                    seen[arc.to] = true;
                    stack.push(arc.to);
                }
            }
        }
        seen
    }
}

/// Minimum `s`–`t` vertex separator in the underlying simple graph of `g`.
///
/// `s` and `t` must be distinct and non-adjacent. Vertex `v` becomes the arc
/// `2v → 2v+1` with capacity one (unbounded for `s` and `t`), and every edge
/// `{u, v}` becomes the arcs `2u+1 → 2v` and `2v+1 → 2u`. Returns the separator,
/// sorted; its size is the number of internally disjoint `s`–`t` paths.
pub fn min_vertex_separator(g: &Multigraph, s: usize, t: usize) -> Vec<usize> {
    debug_assert!(s != t && !g.is_adjacent(s, t));
    let n = g.vertex_count();
    let big = n as u32 + 1;
    let mut net = FlowNetwork::new(2 * n);
    for v in 0..n {
        let cap = if v == s || v == t { big } else { 1 };
        net.add_arc(2 * v, 2 * v + 1, cap);
    }
    for (u, v, _) in g.edges() {
        net.add_arc(2 * u + 1, 2 * v, big);
        net.add_arc(2 * v + 1, 2 * u, big);
    }
    net.max_flow(2 * s + 1, 2 * t, big);
    let reach = net.residual_reach(2 * s + 1);
    (0..n)
        .filter(|&v| v != s && v != t && reach[2 * v] && !reach[2 * v + 1])
        .collect()
}
