//! Rainbow connectivity checking by breadth-first search over
//! `(vertex, used colors)` states.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::coloring::{Color, Coloring};
use crate::graph::{Edge, Graph};
use crate::par::{self, Exec};

/// Largest number of distinct colors a coloring may use; used-color sets are `u64` masks.
pub const MAX_COLORS: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VerifyError {
    #[error("edge {0} is not colored")]
    Uncolored(Edge),
    #[error("colored edge {0} is not in the graph")]
    ForeignEdge(Edge),
    #[error("coloring uses {0} distinct colors; the search supports at most {MAX_COLORS}")]
    TooManyColors(usize),
    #[error("vertex {0} does not exist")]
    UnknownVertex(usize),
}

/// Adjacency with each edge's color replaced by a single bit.
#[derive(Debug, Clone)]
pub(crate) struct ColorMasks {
    adj: Vec<Vec<(usize, u64)>>,
}

impl ColorMasks {
    pub(crate) fn new(g: &Graph, coloring: &Coloring) -> Result<Self, VerifyError> {
        for (e, _) in coloring.iter() {
            if !g.has_edge(e.u, e.v) {
                return Err(VerifyError::ForeignEdge(e));
            }
        }
        let mut palette: Vec<Color> = coloring.distinct_colors().into_iter().collect();
        palette.sort_unstable();
        if palette.len() > MAX_COLORS {
            return Err(VerifyError::TooManyColors(palette.len()));
        }
        let mut adj = vec![Vec::new(); g.n()];
        for &e in g.edges() {
            let c = coloring.get(e).ok_or(VerifyError::Uncolored(e))?;
            let bit = 1u64 << palette.binary_search(&c).unwrap();
            adj[e.u].push((e.v, bit));
            adj[e.v].push((e.u, bit));
        }
        Ok(ColorMasks { adj })
    }

    /// Color bits given directly as indices `0..64`, one per edge of `g`.
    pub(crate) fn from_indices(g: &Graph, colors: &[u8]) -> Self {
        let mut adj = vec![Vec::new(); g.n()];
        for (e, &c) in g.edges().iter().zip(colors) {
            adj[e.u].push((e.v, 1u64 << c));
            adj[e.v].push((e.u, 1u64 << c));
        }
        ColorMasks { adj }
    }

    fn n(&self) -> usize {
        self.adj.len()
    }

    /// Shortest rainbow paths from `source` to every vertex flagged in `wanted`.
    ///
    /// States reached with a superset of an already seen color set at the
    /// same vertex are pruned: their continuations are a subset of the
    /// earlier state's, which BFS reached no later.
    fn search(&self, source: usize, wanted: &[bool], keep_paths: bool) -> Vec<Option<Vec<usize>>> {
        let n = self.n();
        let mut remaining = wanted.iter().filter(|&&w| w).count();
        let mut found: Vec<Option<Vec<usize>>> = vec![None; n];
        if wanted[source] {
            found[source] = Some(vec![source]);
            remaining -= 1;
        }
        // Arena of (vertex, mask, parent index).
        let mut states: Vec<(usize, u64, usize)> = vec![(source, 0, usize::MAX)];
        let mut seen: Vec<Vec<u64>> = vec![Vec::new(); n];
        seen[source].push(0);
        let mut head = 0;
        while head < states.len() && remaining > 0 {
            let (v, mask, _) = states[head];
            for &(w, bit) in &self.adj[v] {
                if mask & bit != 0 {
                    continue;
                }
                let next = mask | bit;
                if seen[w].iter().any(|&m| m & !next == 0) {
                    continue;
                }
                seen[w].push(next);
                states.push((w, next, head));
                if wanted[w] && found[w].is_none() {
                    found[w] = Some(if keep_paths { trace(&states, states.len() - 1) } else { Vec::new() });
                    remaining -= 1;
                    if remaining == 0 {
                        break;
                    }
                }
            }
            head += 1;
        }
        found
    }

    /// Early-exit check that every pair is rainbow connected.
    pub(crate) fn all_connected(&self) -> bool {
        (0..self.n()).all(|u| {
            let wanted: Vec<bool> = (0..self.n()).map(|v| v > u).collect();
            self.search(u, &wanted, false).iter().zip(&wanted).all(|(f, &w)| !w || f.is_some())
        })
    }
}

fn trace(states: &[(usize, u64, usize)], mut idx: usize) -> Vec<usize> {
    let mut path = Vec::new();
    while idx != usize::MAX {
        path.push(states[idx].0);
        idx = states[idx].2;
    }
    path.reverse();
    path
}

/// Panics unless `path` is a walk in `g` whose edges carry distinct colors.
fn assert_rainbow(g: &Graph, coloring: &Coloring, path: &[usize]) {
    let colors = coloring.path_colors(path).expect("witness follows colored edges");
    let mut sorted = colors.clone();
    sorted.sort_unstable();
    sorted.dedup();
    assert_eq!(sorted.len(), colors.len(), "witness {path:?} repeats a color: {colors:?}");
    assert!(path.windows(2).all(|w| g.has_edge(w[0], w[1])));
}

/// A shortest `u`-`v` path with pairwise distinct edge colors, if one exists.
pub fn rainbow_path_exists(
    g: &Graph,
    coloring: &Coloring,
    u: usize,
    v: usize,
) -> Result<Option<Vec<usize>>, VerifyError> {
    for x in [u, v] {
        if x >= g.n() {
            return Err(VerifyError::UnknownVertex(x));
        }
    }
    let masks = ColorMasks::new(g, coloring)?;
    let mut wanted = vec![false; g.n()];
    wanted[v] = true;
    let path = masks.search(u, &wanted, true).swap_remove(v);
    if let Some(p) = &path {
        assert_rainbow(g, coloring, p);
    }
    Ok(path)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub u: usize,
    pub v: usize,
    pub path: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub ok: bool,
    pub checked_pairs: usize,
    /// Pairs `(u, v)`, `u < v`, with no rainbow path, lexicographic.
    pub failures: Vec<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_paths: Option<Vec<Witness>>,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct VerifyOptions {
    pub witnesses: bool,
    pub exec: Exec,
}

pub fn is_rainbow_connected(g: &Graph, coloring: &Coloring) -> Result<VerificationReport, VerifyError> {
    is_rainbow_connected_with(g, coloring, VerifyOptions::default())
}

/// Checks every unordered pair; one search per source covers all larger targets.
pub fn is_rainbow_connected_with(
    g: &Graph,
    coloring: &Coloring,
    opts: VerifyOptions,
) -> Result<VerificationReport, VerifyError> {
    let masks = ColorMasks::new(g, coloring)?;
    let n = g.n();
    let sources: Vec<usize> = (0..n).collect();
    let per_source = par::map(opts.exec, &sources, |&u| {
        let wanted: Vec<bool> = (0..n).map(|v| v > u).collect();
        masks.search(u, &wanted, opts.witnesses)
    });
    let mut failures = Vec::new();
    let mut witnesses = BTreeMap::new();
    for (u, found) in per_source.into_iter().enumerate() {
        for (v, path) in found.into_iter().enumerate().skip(u + 1) {
            match path {
                None => failures.push((u, v)),
                Some(p) if opts.witnesses => {
                    assert_rainbow(g, coloring, &p);
                    witnesses.insert((u, v), p);
                }
                Some(_) => {}
            }
        }
    }
    Ok(VerificationReport {
        ok: failures.is_empty(),
        checked_pairs: n * n.saturating_sub(1) / 2,
        failures,
        witness_paths: opts
            .witnesses
            .then(|| witnesses.into_iter().map(|((u, v), path)| Witness { u, v, path }).collect()),
    })
}
