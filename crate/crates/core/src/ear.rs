//! One expansion step of the construction: grow a connected `k`-step
//! dominating core into a connected `(k-1)`-step dominating core by
//! attaching pendant bridges and evenly colored eager ears.
//!
//! Within a stage every color is an offset `1..=max(2k+1, b_k)` into the
//! stage's palette block. Offsets `1..=k+1` form the low half and
//! `k+2..=2k+1` the high half of the ear palette.

use std::collections::{BTreeSet, VecDeque};

use serde::Serialize;
use thiserror::Error;

use crate::coloring::{Color, Coloring, PaletteBlock};
use crate::graph::{find_bridges, induced_subgraph, Edge, Graph, GraphError};
use crate::layers::{decompose, LayerDecomposition, LayerError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EarError {
    #[error("ear of length {p} exceeds 2k+1 = {} at stage {k}", 2 * k + 1)]
    EarTooLong { p: usize, k: usize },
    #[error("frontier vertex {vertex} has degree {degree} in G[N[D]], expected 1")]
    PendantDegree { vertex: usize, degree: usize },
    #[error("edge {0} inside the newly absorbed vertices is a bridge of the grown core")]
    AbsorbedBridge(Edge),
    #[error("core is not a connected {k}-step dominating set")]
    NotDominating { k: usize },
    #[error("grown core is not a connected {k}-step dominating set")]
    GrowthFailed { k: usize },
    #[error("stage index must be at least 1")]
    ZeroStage,
    #[error("seed edge {x0}-{x1} must join the core to an unabsorbed neighbor")]
    BadSeed { x0: usize, x1: usize },
    #[error("no ear through seed edge {x0}-{x1}")]
    NoEar { x0: usize, x1: usize },
    #[error(transparent)]
    Layer(#[from] LayerError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    /// Low half first: `1, 2, ..., ceil(p/2), 2k+2-floor(p/2), ..., 2k+1`.
    Ascending,
    /// The reverse sequence.
    Descending,
}

/// Color offsets of an evenly colored ear with `p` edges at stage `k`.
pub fn even_color_sequence(p: usize, k: usize, orientation: Orientation) -> Result<Vec<u32>, EarError> {
    if k == 0 {
        return Err(EarError::ZeroStage);
    }
    if p > 2 * k + 1 {
        return Err(EarError::EarTooLong { p, k });
    }
    let low = p.div_ceil(2) as u32;
    let high = (p / 2) as u32;
    let top = 2 * k as u32 + 1;
    let mut seq: Vec<u32> = (1..=low).chain(top + 1 - high..=top).collect();
    if orientation == Orientation::Descending {
        seq.reverse();
    }
    Ok(seq)
}

/// A host ear whose segment completes a spliced ear.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Splice {
    /// Edges of the new prefix `x_0 ... x_l`.
    pub prefix_len: usize,
    /// Index of the host ear within the stage.
    pub host: usize,
    /// The borrowed segment runs from `x_l` back to the host's first vertex.
    pub toward_host_start: bool,
}

/// A path `v_0 ... v_p` meeting the core exactly in its endpoints.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EarPath {
    pub vertices: Vec<usize>,
    pub splice: Option<Splice>,
}

impl EarPath {
    /// Number of edges.
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.len() < 2
    }

    pub fn is_closed(&self) -> bool {
        self.vertices.first() == self.vertices.last()
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.vertices.windows(2).map(|w| Edge::new(w[0], w[1]))
    }

    /// Edges the ear itself introduces; a spliced ear reuses its host's tail.
    pub fn new_edge_count(&self) -> usize {
        self.splice.map_or(self.len(), |s| s.prefix_len)
    }

    /// Vertices outside the current core that this ear absorbs.
    pub fn absorbed(&self) -> &[usize] {
        &self.vertices[1..self.new_edge_count()]
    }
}

/// Pendant bridges hanging off the core: `B`, `B_E` and `b_k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BridgeFrontier {
    /// Frontier endpoints `x_i`, ascending.
    pub vertices: Vec<usize>,
    /// `edges[i]` is the bridge `x_i y_i` with `y_i` in the core.
    pub edges: Vec<Edge>,
}

impl BridgeFrontier {
    pub fn count(&self) -> usize {
        self.vertices.len()
    }
}

pub fn bridge_frontier(g: &Graph, core: &[usize]) -> Result<BridgeFrontier, EarError> {
    let in_core = g.mask(core)?;
    frontier_with_bridges(g, &in_core, &find_bridges(g))
}

fn frontier_with_bridges(g: &Graph, in_core: &[bool], bridges: &[Edge]) -> Result<BridgeFrontier, EarError> {
    let mut pairs: Vec<(usize, Edge)> = bridges
        .iter()
        .filter(|e| in_core[e.u] != in_core[e.v])
        .map(|&e| (if in_core[e.u] { e.v } else { e.u }, e))
        .collect();
    pairs.sort_unstable();
    // The closed neighborhood N[D] is the core plus anything adjacent to it.
    let in_closed = |v: usize| in_core[v] || g.neighbors(v).iter().any(|&w| in_core[w]);
    for &(x, _) in &pairs {
        let degree = g.neighbors(x).iter().filter(|&&w| in_closed(w)).count();
        if degree != 1 {
            return Err(EarError::PendantDegree { vertex: x, degree });
        }
    }
    Ok(BridgeFrontier {
        vertices: pairs.iter().map(|p| p.0).collect(),
        edges: pairs.iter().map(|p| p.1).collect(),
    })
}

/// Ears absorbed so far in the current stage, indexed by the vertices they
/// brought into the core.
#[derive(Debug, Clone, Default)]
pub struct EarBook {
    ears: Vec<EarPath>,
    /// `(ear, position)` for every absorbed vertex.
    owner: Vec<Option<(usize, usize)>>,
    /// Frontier endpoints; part of the core-in-progress but never on an ear.
    pendant: Vec<bool>,
}

impl EarBook {
    pub fn new(n: usize, frontier: &BridgeFrontier) -> Self {
        let mut pendant = vec![false; n];
        for &x in &frontier.vertices {
            pendant[x] = true;
        }
        EarBook { ears: Vec::new(), owner: vec![None; n], pendant }
    }

    pub fn ears(&self) -> &[EarPath] {
        &self.ears
    }

    pub fn is_absorbed(&self, v: usize) -> bool {
        self.owner[v].is_some()
    }

    /// Records `ear` and returns its index.
    pub fn absorb(&mut self, ear: EarPath) -> usize {
        let id = self.ears.len();
        for (offset, &v) in ear.absorbed().iter().enumerate() {
            debug_assert!(self.owner[v].is_none());
            self.owner[v] = Some((id, offset + 1));
        }
        self.ears.push(ear);
        id
    }

    /// The shorter host segment from absorbed vertex `v` to the core.
    fn host_segment(&self, v: usize) -> Option<(usize, bool, &[usize])> {
        let (id, pos) = self.owner[v]?;
        let host = &self.ears[id].vertices;
        let q = host.len() - 1;
        if 2 * pos <= q {
            Some((id, true, &host[..=pos]))
        } else {
            Some((id, false, &host[pos..]))
        }
    }
}

/// Shortest ear starting with the seed edge `x0 x1`.
///
/// The search leaves `x1` through vertices outside the core and stops at the
/// first core vertex or previously absorbed vertex. Stopping on an absorbed
/// vertex `x_l` splices the prefix `x0 ... x_l` with the shorter segment of
/// the ear that absorbed `x_l`. Candidates are ranked by total length, then
/// unspliced before spliced, then BFS discovery order (smallest ids first).
pub fn find_eager_ear(
    g: &Graph,
    layers: &LayerDecomposition,
    seed: (usize, usize),
    book: &EarBook,
) -> Result<EarPath, EarError> {
    let (x0, x1) = seed;
    if x0 >= g.n()
        || x1 >= g.n()
        || !layers.in_core(x0)
        || layers.in_core(x1)
        || !g.has_edge(x0, x1)
        || book.is_absorbed(x1)
        || book.pendant[x1]
    {
        return Err(EarError::BadSeed { x0, x1 });
    }
    let mut dist = vec![usize::MAX; g.n()];
    let mut parent = vec![usize::MAX; g.n()];
    dist[x1] = 1;
    let mut queue = VecDeque::from([x1]);
    // (total length, spliced, last free vertex, terminal)
    let mut best: Option<(usize, bool, usize, usize)> = None;
    while let Some(u) = queue.pop_front() {
        if best.is_some_and(|b| dist[u] + 1 > b.0) {
            break;
        }
        for &w in g.neighbors(u) {
            let candidate = if layers.in_core(w) {
                if u == x1 && w == x0 {
                    continue;
                }
                (dist[u] + 1, false, u, w)
            } else if let Some((_, _, seg)) = book.host_segment(w) {
                (dist[u] + seg.len(), true, u, w)
            } else {
                if !book.pendant[w] && dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                }
                continue;
            };
            if best.is_none_or(|b| (candidate.0, candidate.1) < (b.0, b.1)) {
                best = Some(candidate);
            }
        }
    }
    let (_, spliced, last, terminal) = best.ok_or(EarError::NoEar { x0, x1 })?;
    let mut prefix = vec![terminal];
    let mut v = last;
    while v != usize::MAX {
        prefix.push(v);
        v = parent[v];
    }
    prefix.push(x0);
    prefix.reverse();
    if !spliced {
        return Ok(EarPath { vertices: prefix, splice: None });
    }
    let (host, toward_host_start, seg) = book.host_segment(terminal).unwrap();
    let prefix_len = prefix.len() - 1;
    let mut vertices = prefix;
    if toward_host_start {
        vertices.extend(seg.iter().rev().skip(1));
    } else {
        vertices.extend(seg.iter().skip(1));
    }
    Ok(EarPath { vertices, splice: Some(Splice { prefix_len, host, toward_host_start }) })
}

/// The uncolored skeleton of one stage: which vertices join the core, and how.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StagePlan {
    pub k: usize,
    pub frontier: BridgeFrontier,
    pub ears: Vec<EarPath>,
    pub core_in: Vec<usize>,
    pub core_out: Vec<usize>,
    /// Bridges of `G[D' \ D]` itself; informational only.
    pub bridges_inside_absorbed: Vec<Edge>,
}

impl StagePlan {
    pub fn b(&self) -> usize {
        self.frontier.count()
    }

    /// Stage palette size `max(2k+1, b_k)`.
    pub fn budget(&self) -> usize {
        (2 * self.k + 1).max(self.b())
    }
}

/// Plans the growth of `core` at stage `k` without assigning colors.
///
/// `bridges` must be the bridge set of `g`.
pub fn plan_stage(g: &Graph, core: &[usize], k: usize, bridges: &[Edge]) -> Result<StagePlan, EarError> {
    if k == 0 {
        return Err(EarError::ZeroStage);
    }
    let layers = decompose(g, core)?;
    if layers.step() > k || !induced_connected(g, core)? {
        return Err(EarError::NotDominating { k });
    }
    let in_core: Vec<bool> = layers.dist.iter().map(|&d| d == 0).collect();
    let frontier = frontier_with_bridges(g, &in_core, bridges)?;
    let mut book = EarBook::new(g.n(), &frontier);

    // Lexicographically smallest edge from the core to an unabsorbed
    // non-pendant neighbor, if any remains.
    let next_seed = |book: &EarBook| {
        layers.core().iter().find_map(|&x0| {
            g.neighbors(x0)
                .iter()
                .find(|&&x1| layers.dist[x1] == 1 && !book.is_absorbed(x1) && !book.pendant[x1])
                .map(|&x1| (x0, x1))
        })
    };
    while let Some(seed) = next_seed(&book) {
        let ear = find_eager_ear(g, &layers, seed, &book)?;
        if ear.len() > 2 * k + 1 {
            return Err(EarError::EarTooLong { p: ear.len(), k });
        }
        book.absorb(ear);
    }

    let mut grown: BTreeSet<usize> = core.iter().copied().collect();
    grown.extend(&frontier.vertices);
    for ear in book.ears() {
        grown.extend(ear.absorbed());
    }
    let core_out: Vec<usize> = grown.into_iter().collect();
    let grown_layers = decompose(g, &core_out)?;
    if grown_layers.step() > k - 1 || !induced_connected(g, &core_out)? {
        return Err(EarError::GrowthFailed { k: k - 1 });
    }

    let added: Vec<usize> = core_out.iter().copied().filter(|&v| !in_core[v]).collect();
    let mut is_added = vec![false; g.n()];
    for &v in &added {
        is_added[v] = true;
    }
    let sub = induced_subgraph(g, &core_out)?;
    for e in find_bridges(&sub.graph).into_iter().map(|e| sub.lift(e)) {
        if is_added[e.u] && is_added[e.v] {
            return Err(EarError::AbsorbedBridge(e));
        }
    }
    let inner = induced_subgraph(g, &added)?;
    let bridges_inside_absorbed = find_bridges(&inner.graph).into_iter().map(|e| inner.lift(e)).collect();

    Ok(StagePlan {
        k,
        frontier,
        ears: book.ears,
        core_in: core.to_vec(),
        core_out,
        bridges_inside_absorbed,
    })
}

fn induced_connected(g: &Graph, set: &[usize]) -> Result<bool, GraphError> {
    Ok(crate::graph::is_connected(&induced_subgraph(g, set)?.graph))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ColoredEar {
    pub ear: EarPath,
    pub orientation: Orientation,
    /// Absolute colors along the ear, first edge first.
    pub colors: Vec<Color>,
    /// The colors match the even pattern for the ear's length exactly.
    pub even: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StageReport {
    pub k: usize,
    pub b: usize,
    pub bridges: Vec<Edge>,
    pub ears: Vec<ColoredEar>,
    pub block: PaletteBlock,
    pub colors_used: usize,
    pub core_in: Vec<usize>,
    pub core_out: Vec<usize>,
    pub bridges_inside_absorbed: Vec<Edge>,
    pub warnings: Vec<String>,
}

/// Colors a planned stage into `coloring` using the block starting at
/// `palette_start`.
pub fn color_stage(g: &Graph, plan: StagePlan, coloring: &mut Coloring, palette_start: Color) -> StageReport {
    let k = plan.k;
    let block = PaletteBlock { stage: k, start: palette_start, size: plan.budget() as u32 };
    let mut used = BTreeSet::new();
    let mut warnings = Vec::new();
    let mut ears: Vec<ColoredEar> = Vec::with_capacity(plan.ears.len());

    for ear in plan.ears {
        let orientation = match ear.splice {
            None => Orientation::Ascending,
            Some(s) => {
                // A borrowed segment from the high half forces c(x0 x1) = 1,
                // one from the low half forces c(x0 x1) = 2k+1.
                let borrowed = &ear.vertices[s.prefix_len..];
                let high = borrowed.windows(2).all(|w| {
                    coloring
                        .get(Edge::new(w[0], w[1]))
                        .and_then(|c| block.offset(c))
                        .is_some_and(|o| o as usize > k + 1)
                });
                if high {
                    Orientation::Ascending
                } else {
                    Orientation::Descending
                }
            }
        };
        let seq = even_color_sequence(ear.len(), k, orientation).expect("planned ears respect 2k+1");
        let mut colors = Vec::with_capacity(ear.len());
        for (i, e) in ear.edges().enumerate() {
            let c = if i < ear.new_edge_count() {
                let c = block.color(seq[i]);
                coloring.set(e, c);
                used.insert(c);
                c
            } else {
                coloring.get(e).expect("host segment is colored")
            };
            colors.push(c);
        }
        let even = colors.iter().zip(&seq).all(|(&c, &o)| block.offset(c) == Some(o));
        if !even {
            warnings.push(format!("ear {:?} is not evenly colored: {:?}", ear.vertices, colors));
        }
        if colors.iter().collect::<BTreeSet<_>>().len() != colors.len() {
            warnings.push(format!("ear {:?} repeats a color: {:?}", ear.vertices, colors));
        }
        ears.push(ColoredEar { ear, orientation, colors, even });
    }

    for (i, &e) in plan.frontier.edges.iter().enumerate() {
        let c = block.color(i as u32 + 1);
        coloring.set(e, c);
        used.insert(c);
    }

    let mut in_out = vec![false; g.n()];
    for &v in &plan.core_out {
        in_out[v] = true;
    }
    for &e in g.edges() {
        if in_out[e.u] && in_out[e.v] && !coloring.is_colored(e) {
            let c = block.color(1);
            coloring.set(e, c);
            used.insert(c);
        }
    }
    coloring.push_block(block);

    StageReport {
        k,
        b: plan.frontier.count(),
        bridges: plan.frontier.edges,
        ears,
        block,
        colors_used: used.len(),
        core_in: plan.core_in,
        core_out: plan.core_out,
        bridges_inside_absorbed: plan.bridges_inside_absorbed,
        warnings,
    }
}

/// Grows `core` from a connected `k`-step dominating set to a connected
/// `(k-1)`-step dominating set, coloring every new edge of the grown core
/// from the block starting at `palette_start`.
pub fn expand_step(
    g: &Graph,
    core: &[usize],
    k: usize,
    coloring: &mut Coloring,
    palette_start: Color,
) -> Result<(Vec<usize>, StageReport), EarError> {
    let plan = plan_stage(g, core, k, &find_bridges(g))?;
    let report = color_stage(g, plan, coloring, palette_start);
    Ok((report.core_out.clone(), report))
}
