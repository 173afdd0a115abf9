//! Simple undirected graphs with dense vertex ids, plus the classical
//! metrics the construction relies on.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("line {line}: self-loop on vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: duplicate edge {u} {v}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("line {line}: expected two nonnegative integers, got {text:?}")]
    Malformed { line: usize, text: String },
    #[error("input contains no edges")]
    Empty,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("vertex {0} does not exist")]
    UnknownVertex(usize),
    #[error("vertex sets overlap at {0}")]
    Overlap(usize),
}

/// An undirected edge, normalized so that `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    /// Builds the normalized edge. Panics on a self-loop.
    pub fn new(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "self-loop {a}-{b}");
        if a < b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    pub fn other(&self, x: usize) -> usize {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }

    pub fn has(&self, x: usize) -> bool {
        self.u == x || self.v == x
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

/// Simple undirected graph on vertices `0..n`.
///
/// Adjacency lists are sorted ascending, which makes every traversal in the
/// crate visit neighbors smallest id first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edges: Vec<Edge>,
}

impl Graph {
    /// Builds a graph on `n` vertices. Self-loops and repeated edges are rejected.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); n];
        let mut set = BTreeSet::new();
        for (i, (a, b)) in edges.into_iter().enumerate() {
            if a >= n {
                return Err(GraphError::UnknownVertex(a));
            }
            if b >= n {
                return Err(GraphError::UnknownVertex(b));
            }
            if a == b {
                return Err(GraphError::SelfLoop { line: i + 1, vertex: a });
            }
            let e = Edge::new(a, b);
            if !set.insert(e) {
                return Err(GraphError::DuplicateEdge { line: i + 1, u: e.u, v: e.v });
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { adj, edges: set.into_iter().collect() })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges in ascending `(u, v)` order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n() && self.adj[a].binary_search(&b).is_ok()
    }

    /// Position of `e` in [`Graph::edges`].
    pub fn edge_index(&self, e: Edge) -> Option<usize> {
        self.edges.binary_search(&e).ok()
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n() {
            Ok(())
        } else {
            Err(GraphError::UnknownVertex(v))
        }
    }

    pub(crate) fn mask(&self, set: &[usize]) -> Result<Vec<bool>, GraphError> {
        let mut mask = vec![false; self.n()];
        for &v in set {
            self.check_vertex(v)?;
            mask[v] = true;
        }
        Ok(mask)
    }

    /// Canonical edge-list text, one `u v` line per edge.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::with_capacity(self.m() * 6);
        for e in &self.edges {
            out.push_str(&format!("{} {}\n", e.u, e.v));
        }
        out
    }
}

/// Parses the `u v` edge-list format.
///
/// Blank lines and lines starting with `#` are skipped. Fields are separated
/// by spaces or tabs. The vertex count is one more than the largest id seen.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut pairs = Vec::new();
    let mut lines = Vec::new();
    let mut max_id = 0usize;
    for (idx, raw) in text.split('\n').enumerate() {
        let line = raw.strip_suffix('\r').unwrap_or(raw);
        let trimmed = line.trim_matches(|c| c == ' ' || c == '\t');
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let malformed = || GraphError::Malformed { line: idx + 1, text: line.to_string() };
        let mut fields = trimmed.split([' ', '\t']).filter(|s| !s.is_empty());
        let (Some(a), Some(b), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(malformed());
        };
        let a: usize = parse_id(a).ok_or_else(malformed)?;
        let b: usize = parse_id(b).ok_or_else(malformed)?;
        max_id = max_id.max(a).max(b);
        pairs.push((a, b));
        lines.push(idx + 1);
    }
    if pairs.is_empty() {
        return Err(GraphError::Empty);
    }
    // Re-map positional errors from `from_edges` onto source lines.
    Graph::from_edges(max_id + 1, pairs).map_err(|e| match e {
        GraphError::SelfLoop { line, vertex } => GraphError::SelfLoop { line: lines[line - 1], vertex },
        GraphError::DuplicateEdge { line, u, v } => GraphError::DuplicateEdge { line: lines[line - 1], u, v },
        other => other,
    })
}

fn parse_id(s: &str) -> Option<usize> {
    if s.bytes().all(|b| b.is_ascii_digit()) {
        s.parse().ok()
    } else {
        None
    }
}

/// True iff a BFS from vertex 0 reaches every vertex.
pub fn is_connected(g: &Graph) -> bool {
    if g.n() == 0 {
        return true;
    }
    multi_source_distances(g, &[0]).iter().all(Option::is_some)
}

pub(crate) fn ensure_connected(g: &Graph) -> Result<(), GraphError> {
    if is_connected(g) {
        Ok(())
    } else {
        Err(GraphError::Disconnected)
    }
}

/// Hop distances from a set of sources; `None` for unreachable vertices.
pub(crate) fn multi_source_distances(g: &Graph, sources: &[usize]) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.n()];
    let mut queue = VecDeque::new();
    for &s in sources {
        if dist[s].is_none() {
            dist[s] = Some(0);
            queue.push_back(s);
        }
    }
    while let Some(u) = queue.pop_front() {
        let du = dist[u].unwrap();
        for &w in g.neighbors(u) {
            if dist[w].is_none() {
                dist[w] = Some(du + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Hop distances from `source` in a connected graph.
pub fn bfs_distances(g: &Graph, source: usize) -> Result<Vec<usize>, GraphError> {
    g.check_vertex(source)?;
    multi_source_distances(g, &[source])
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or(GraphError::Disconnected)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Metrics {
    /// `distances[s][v]` is the hop distance from `s` to `v`.
    pub distances: Vec<Vec<usize>>,
    pub eccentricities: Vec<usize>,
    pub radius: usize,
    pub diameter: usize,
    /// Every vertex whose eccentricity equals the radius, ascending.
    pub centers: Vec<usize>,
}

impl Metrics {
    /// The smallest-id center.
    pub fn center(&self) -> usize {
        self.centers[0]
    }
}

pub fn radius_center(g: &Graph) -> Result<Metrics, GraphError> {
    if g.n() == 0 {
        return Err(GraphError::Empty);
    }
    let distances = (0..g.n()).map(|s| bfs_distances(g, s)).collect::<Result<Vec<_>, _>>()?;
    let eccentricities: Vec<usize> = distances.iter().map(|row| *row.iter().max().unwrap()).collect();
    let radius = *eccentricities.iter().min().unwrap();
    let diameter = *eccentricities.iter().max().unwrap();
    let centers = (0..g.n()).filter(|&v| eccentricities[v] == radius).collect();
    Ok(Metrics { distances, eccentricities, radius, diameter, centers })
}

/// All bridges, ascending, by an iterative low-link traversal.
pub fn find_bridges(g: &Graph) -> Vec<Edge> {
    let n = g.n();
    let mut order = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut bridges = Vec::new();
    let mut next = 0;
    // (vertex, parent, next neighbor index)
    let mut stack: Vec<(usize, usize, usize)> = Vec::new();
    for root in 0..n {
        if order[root] != usize::MAX {
            continue;
        }
        order[root] = next;
        low[root] = next;
        next += 1;
        stack.push((root, usize::MAX, 0));
        while let Some(frame) = stack.last_mut() {
            let (v, parent, i) = *frame;
            if let Some(&w) = g.neighbors(v).get(i) {
                frame.2 += 1;
                if order[w] == usize::MAX {
                    order[w] = next;
                    low[w] = next;
                    next += 1;
                    stack.push((w, v, 0));
                } else if w != parent {
                    low[v] = low[v].min(order[w]);
                }
            } else {
                stack.pop();
                if parent != usize::MAX {
                    low[parent] = low[parent].min(low[v]);
                    if low[v] > order[parent] {
                        bridges.push(Edge::new(parent, v));
                    }
                }
            }
        }
    }
    bridges.sort_unstable();
    bridges
}

/// Induced subgraph on `set`, relabelled `0..|set|` in ascending id order.
#[derive(Debug, Clone)]
pub struct Subgraph {
    pub graph: Graph,
    /// `original[i]` is the id in the parent graph of local vertex `i`.
    pub original: Vec<usize>,
}

impl Subgraph {
    pub fn lift(&self, e: Edge) -> Edge {
        Edge::new(self.original[e.u], self.original[e.v])
    }
}

pub fn induced_subgraph(g: &Graph, set: &[usize]) -> Result<Subgraph, GraphError> {
    let mask = g.mask(set)?;
    let original: Vec<usize> = (0..g.n()).filter(|&v| mask[v]).collect();
    let mut local = vec![usize::MAX; g.n()];
    for (i, &v) in original.iter().enumerate() {
        local[v] = i;
    }
    let edges = g
        .edges()
        .iter()
        .filter(|e| mask[e.u] && mask[e.v])
        .map(|e| (local[e.u], local[e.v]));
    let graph = Graph::from_edges(original.len(), edges)?;
    Ok(Subgraph { graph, original })
}

/// `E[X, Y]`: every edge with one end in `x` and the other in `y`.
pub fn cut_edges(g: &Graph, x: &[usize], y: &[usize]) -> Result<Vec<Edge>, GraphError> {
    let in_x = g.mask(x)?;
    let in_y = g.mask(y)?;
    if let Some(v) = (0..g.n()).find(|&v| in_x[v] && in_y[v]) {
        return Err(GraphError::Overlap(v));
    }
    Ok(g
        .edges()
        .iter()
        .copied()
        .filter(|e| (in_x[e.u] && in_y[e.v]) || (in_y[e.u] && in_x[e.v]))
        .collect())
}
