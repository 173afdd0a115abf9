//! Brute-force reference implementations used only by tests.

#![allow(dead_code)]

use rainbow_ears::{Color, Coloring, Edge, Graph};

/// Bridges found by deleting each edge and re-testing connectivity.
pub fn bridges_by_removal(g: &Graph) -> Vec<Edge> {
    g.edges()
        .iter()
        .copied()
        .filter(|&cut| {
            let mut seen = vec![false; g.n()];
            let mut stack = vec![0];
            seen[0] = true;
            while let Some(v) = stack.pop() {
                for &w in g.neighbors(v) {
                    if Edge::new(v, w) != cut && !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            seen.iter().any(|&s| !s)
        })
        .collect()
}

/// Even ear coloring written out edge by edge: edge `i` (1-based) of an
/// ascending ear gets `i` while `i <= ceil(p/2)` and `2k+1-(p-i)` after that.
pub fn even_by_position(p: usize, k: usize, ascending: bool) -> Vec<u32> {
    let half = p.div_ceil(2);
    let asc: Vec<u32> = (1..=p)
        .map(|i| if i <= half { i as u32 } else { (2 * k + 1 - (p - i)) as u32 })
        .collect();
    if ascending {
        asc
    } else {
        asc.into_iter().rev().collect()
    }
}

/// Depth-first enumeration of simple paths; true if some `u`-`v` path has
/// distinct colors.
pub fn rainbow_by_enumeration(g: &Graph, coloring: &Coloring, u: usize, v: usize) -> bool {
    fn dfs(g: &Graph, c: &Coloring, at: usize, target: usize, on_path: &mut [bool], used: &mut Vec<Color>) -> bool {
        if at == target {
            return true;
        }
        for &w in g.neighbors(at) {
            if on_path[w] {
                continue;
            }
            let color = c.get(Edge::new(at, w)).unwrap();
            if used.contains(&color) {
                continue;
            }
            on_path[w] = true;
            used.push(color);
            let found = dfs(g, c, w, target, on_path, used);
            used.pop();
            on_path[w] = false;
            if found {
                return true;
            }
        }
        false
    }
    let mut on_path = vec![false; g.n()];
    on_path[u] = true;
    dfs(g, coloring, u, v, &mut on_path, &mut Vec::new())
}

/// Pairs `(u, v)`, `u < v`, without a rainbow path, by enumeration.
pub fn failures_by_enumeration(g: &Graph, coloring: &Coloring) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if !rainbow_by_enumeration(g, coloring, u, v) {
                out.push((u, v));
            }
        }
    }
    out
}

/// Whether some coloring with colors `1..=t` is rainbow connected, trying
/// all `t^m` assignments and checking each by path enumeration.
pub fn some_t_coloring_by_enumeration(g: &Graph, t: usize) -> bool {
    let m = g.m();
    if t == 0 {
        return m == 0;
    }
    let mut digits = vec![0usize; m];
    loop {
        let coloring =
            Coloring::from_assignment(g.edges().iter().zip(&digits).map(|(&e, &d)| (e, d as Color + 1)));
        if failures_by_enumeration(g, &coloring).is_empty() {
            return true;
        }
        let mut i = 0;
        loop {
            if i == m {
                return false;
            }
            digits[i] += 1;
            if digits[i] < t {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}

/// Vertices within distance 1 of `set`.
pub fn closed_neighborhood(g: &Graph, set: &[usize]) -> Vec<bool> {
    let mut out = vec![false; g.n()];
    for &v in set {
        out[v] = true;
        for &w in g.neighbors(v) {
            out[w] = true;
        }
    }
    out
}
