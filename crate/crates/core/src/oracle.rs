//! Exact rainbow connection numbers for tiny graphs.

use std::sync::atomic::{AtomicBool, Ordering};
use std::time::{Duration, Instant};

use thiserror::Error;

use crate::graph::{ensure_connected, find_bridges, radius_center, Graph, GraphError};
use crate::par::{self, Exec};
use crate::verify::{ColorMasks, MAX_COLORS};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("graph has {m} edges; the exact search is capped at {cap}")]
    TooManyEdges { m: usize, cap: usize },
    #[error("exact search would need more than {cap} colors")]
    TooManyColors { cap: usize },
    #[error("exact search exceeded its time budget of {0:?}")]
    OverBudget(Duration),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleLimits {
    pub max_edges: usize,
    pub max_colors: usize,
    pub time_budget: Duration,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits { max_edges: 9, max_colors: MAX_COLORS, time_budget: Duration::from_secs(60) }
    }
}

/// `max(diameter, bridge count)`.
///
/// Any rainbow coloring needs at least `diam` colors, and two bridges always
/// separate some pair of vertices, so all bridges need distinct colors.
pub fn rc_lower_bound(g: &Graph) -> Result<usize, GraphError> {
    ensure_connected(g)?;
    let diameter = radius_center(g)?.diameter;
    Ok(diameter.max(find_bridges(g).len()))
}

pub fn exact_rc(g: &Graph, limits: OracleLimits) -> Result<usize, OracleError> {
    exact_rc_with(g, limits, Exec::default())
}

/// Smallest `t` such that some `t`-coloring of `g` is rainbow connected.
///
/// Colorings are enumerated up to renaming of colors: edge `i` (in edge
/// order) takes a color at most one above the largest color among edges
/// `0..i`. The search starts at [`rc_lower_bound`] and stops at `m`, where
/// all-distinct colors always succeed.
pub fn exact_rc_with(g: &Graph, limits: OracleLimits, exec: Exec) -> Result<usize, OracleError> {
    ensure_connected(g)?;
    let m = g.m();
    if m > limits.max_edges {
        return Err(OracleError::TooManyEdges { m, cap: limits.max_edges });
    }
    if m == 0 {
        return Ok(0);
    }
    let deadline = Instant::now() + limits.time_budget;
    let lower = rc_lower_bound(g)?;
    for t in lower..=m {
        if t > limits.max_colors.min(MAX_COLORS) {
            return Err(OracleError::TooManyColors { cap: limits.max_colors });
        }
        if some_coloring_works(g, t, deadline, exec).ok_or(OracleError::OverBudget(limits.time_budget))? {
            return Ok(t);
        }
    }
    unreachable!("m distinct colors always rainbow-connect a connected graph")
}

/// `None` when the deadline passed before an answer was found.
fn some_coloring_works(g: &Graph, t: usize, deadline: Instant, exec: Exec) -> Option<bool> {
    let m = g.m();
    // Split the enumeration on its first few positions.
    let split = m.min(4);
    let mut prefixes = Vec::new();
    growth_strings(split, t, &mut vec![0; split], 0, 0, &mut |p| prefixes.push(p.to_vec()));
    let expired = AtomicBool::new(false);
    let found = par::any(exec, &prefixes, |prefix| {
        let mut colors = vec![0u8; m];
        colors[..split].copy_from_slice(prefix);
        let used = prefix.iter().map(|&c| c as usize + 1).max().unwrap_or(0);
        let mut hit = false;
        let mut checked = 0u32;
        complete(&mut colors, split, used, t, &mut |colors| {
            if hit || expired.load(Ordering::Relaxed) {
                return;
            }
            checked += 1;
            if checked % 256 == 1 && Instant::now() >= deadline {
                expired.store(true, Ordering::Relaxed);
                return;
            }
            hit = ColorMasks::from_indices(g, colors).all_connected();
        });
        hit
    });
    if found {
        Some(true)
    } else if expired.load(Ordering::Relaxed) {
        None
    } else {
        Some(false)
    }
}

/// Restricted growth strings of length `len` over at most `t` colors.
fn growth_strings(len: usize, t: usize, buf: &mut Vec<u8>, pos: usize, used: usize, f: &mut impl FnMut(&[u8])) {
    if pos == len {
        f(buf);
        return;
    }
    for c in 0..(used + 1).min(t) {
        buf[pos] = c as u8;
        growth_strings(len, t, buf, pos + 1, used.max(c + 1), f);
    }
}

fn complete(colors: &mut [u8], pos: usize, used: usize, t: usize, f: &mut impl FnMut(&[u8])) {
    if pos == colors.len() {
        f(colors);
        return;
    }
    for c in 0..(used + 1).min(t) {
        colors[pos] = c as u8;
        complete(colors, pos + 1, used.max(c + 1), t, f);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn complete_graph(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)))).unwrap()
    }

    #[test]
    fn lower_bounds() {
        assert_eq!(rc_lower_bound(&path(4)).unwrap(), 3);
        assert_eq!(rc_lower_bound(&cycle(6)).unwrap(), 3);
        assert_eq!(rc_lower_bound(&complete_graph(4)).unwrap(), 1);
    }

    #[test]
    fn growth_string_counts_are_bell_numbers() {
        let mut count = 0;
        growth_strings(5, 5, &mut vec![0; 5], 0, 0, &mut |_| count += 1);
        assert_eq!(count, 52);
        count = 0;
        growth_strings(4, 2, &mut vec![0; 4], 0, 0, &mut |_| count += 1);
        // S(4,1) + S(4,2)
        assert_eq!(count, 8);
    }

    #[test]
    fn small_exact_values() {
        let limits = OracleLimits::default();
        assert_eq!(exact_rc(&complete_graph(4), limits).unwrap(), 1);
        assert_eq!(exact_rc(&cycle(5), limits).unwrap(), 3);
        assert_eq!(exact_rc(&path(4), limits).unwrap(), 3);
        assert_eq!(exact_rc(&Graph::from_edges(1, []).unwrap(), limits).unwrap(), 0);
    }

    #[test]
    fn refusals() {
        let limits = OracleLimits::default();
        assert_eq!(exact_rc(&cycle(20), limits).unwrap_err(), OracleError::TooManyEdges { m: 20, cap: 9 });
        let tight = OracleLimits { max_colors: 2, ..limits };
        assert_eq!(exact_rc(&path(4), tight).unwrap_err(), OracleError::TooManyColors { cap: 2 });
        let rushed = OracleLimits { time_budget: Duration::ZERO, max_edges: 12, ..limits };
        // The deadline is checked before the first candidate of every branch.
        assert!(matches!(exact_rc(&cycle(12), rushed), Err(OracleError::OverBudget(_))));
    }
}
