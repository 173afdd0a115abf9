//! Distance layers around a core set: `N^0(D), N^1(D), ..., N^k(D)`.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{induced_subgraph, is_connected, multi_source_distances, Graph, GraphError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LayerError {
    #[error("core set is empty")]
    EmptyCore,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LayerDecomposition {
    /// `dist[v]` is the hop distance from `v` to the core.
    pub dist: Vec<usize>,
    /// `layers[i]` holds the vertices at distance exactly `i`, ascending.
    pub layers: Vec<Vec<usize>>,
}

impl LayerDecomposition {
    /// Largest distance from the core; the core is `step`-dominating.
    pub fn step(&self) -> usize {
        self.layers.len() - 1
    }

    pub fn core(&self) -> &[usize] {
        &self.layers[0]
    }

    pub fn in_core(&self, v: usize) -> bool {
        self.dist[v] == 0
    }

    pub fn layer_of(&self, v: usize) -> usize {
        self.dist[v]
    }
}

/// `N^k(S)`: vertices at distance exactly `k` from `s`, ascending.
pub fn k_step_neighborhood(g: &Graph, s: &[usize], k: usize) -> Result<Vec<usize>, LayerError> {
    if s.is_empty() {
        return Err(LayerError::EmptyCore);
    }
    g.mask(s)?;
    let dist = multi_source_distances(g, s);
    Ok((0..g.n()).filter(|&v| dist[v] == Some(k)).collect())
}

pub fn decompose(g: &Graph, core: &[usize]) -> Result<LayerDecomposition, LayerError> {
    if core.is_empty() {
        return Err(LayerError::EmptyCore);
    }
    g.mask(core)?;
    let dist = multi_source_distances(g, core)
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or(GraphError::Disconnected)?;
    let step = dist.iter().copied().max().unwrap_or(0);
    let mut layers = vec![Vec::new(); step + 1];
    for (v, &d) in dist.iter().enumerate() {
        layers[d].push(v);
    }
    Ok(LayerDecomposition { dist, layers })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Domination {
    /// Every vertex lies within `k` of the set.
    pub dominating: bool,
    /// `G[S]` is connected.
    pub connected: bool,
}

impl Domination {
    pub fn connected_dominating(&self) -> bool {
        self.dominating && self.connected
    }
}

pub fn is_k_step_dominating(g: &Graph, s: &[usize], k: usize) -> Result<Domination, LayerError> {
    if s.is_empty() {
        return Err(LayerError::EmptyCore);
    }
    g.mask(s)?;
    let dist = multi_source_distances(g, s);
    let dominating = dist.iter().all(|d| d.is_some_and(|d| d <= k));
    let connected = is_connected(&induced_subgraph(g, s)?.graph);
    Ok(Domination { dominating, connected })
}
