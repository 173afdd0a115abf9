//! Deterministic graph families for tests, benches and the `gen` command.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{is_connected, Graph};

/// Connectivity attempts for `RandomConnected` before giving up.
pub const MAX_ATTEMPTS: usize = 1000;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GenError {
    #[error("invalid parameters for {family}: {reason}")]
    Invalid { family: &'static str, reason: String },
    #[error("no connected sample after {MAX_ATTEMPTS} attempts (n = {n}, p = {p})")]
    Exhausted { n: usize, p: f64 },
}

#[derive(Debug, Clone, PartialEq)]
pub enum FamilySpec {
    /// `C_n`, vertices in cyclic order.
    Cycle { n: usize },
    /// `P_n` on `n` vertices.
    Path { n: usize },
    /// `K_{1,leaves}` with hub 0.
    Star { leaves: usize },
    /// Two junctions (0 and 1) joined by internally disjoint paths of the given lengths.
    Theta { arms: Vec<usize> },
    /// Erdős–Rényi `G(n, p)` resampled until connected.
    RandomConnected { n: usize, p: f64, seed: u64 },
    /// Uniform labelled tree from a random Prüfer sequence.
    RandomTree { n: usize, seed: u64 },
    /// Two `K_clique` joined by a path of `bridge_len` bridges.
    BarbellBridge { clique: usize, bridge_len: usize },
    /// `C_n` with one pendant vertex per entry of `attach`.
    CycleWithPendants { n: usize, attach: Vec<usize> },
}

impl FamilySpec {
    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::Cycle { .. } => "cycle",
            FamilySpec::Path { .. } => "path",
            FamilySpec::Star { .. } => "star",
            FamilySpec::Theta { .. } => "theta",
            FamilySpec::RandomConnected { .. } => "random_connected",
            FamilySpec::RandomTree { .. } => "random_tree",
            FamilySpec::BarbellBridge { .. } => "barbell_bridge",
            FamilySpec::CycleWithPendants { .. } => "cycle_with_pendants",
        }
    }

    /// Short human-readable identifier, e.g. `theta(2,3,4)`.
    pub fn label(&self) -> String {
        let list = |v: &[usize]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
        match self {
            FamilySpec::Cycle { n } | FamilySpec::Path { n } => format!("{}({n})", self.name()),
            FamilySpec::Star { leaves } => format!("star({leaves})"),
            FamilySpec::Theta { arms } => format!("theta({})", list(arms)),
            FamilySpec::RandomConnected { n, p, seed } => format!("random_connected({n},{p},{seed})"),
            FamilySpec::RandomTree { n, seed } => format!("random_tree({n},{seed})"),
            FamilySpec::BarbellBridge { clique, bridge_len } => format!("barbell_bridge({clique},{bridge_len})"),
            FamilySpec::CycleWithPendants { n, attach } => format!("cycle_with_pendants({n};{})", list(attach)),
        }
    }

    fn invalid(&self, reason: impl Into<String>) -> GenError {
        GenError::Invalid { family: self.name(), reason: reason.into() }
    }
}

pub fn generate(spec: &FamilySpec) -> Result<Graph, GenError> {
    let edges = match spec {
        FamilySpec::Cycle { n } => {
            if *n < 3 {
                return Err(spec.invalid("cycle needs n >= 3"));
            }
            return Ok(cycle(*n));
        }
        FamilySpec::Path { n } => {
            if *n < 1 {
                return Err(spec.invalid("path needs n >= 1"));
            }
            return Ok(build(*n, (1..*n).map(|i| (i - 1, i)).collect()));
        }
        FamilySpec::Star { leaves } => {
            if *leaves < 1 {
                return Err(spec.invalid("star needs at least one leaf"));
            }
            (1..=*leaves).map(|i| (0, i)).collect::<Vec<_>>()
        }
        FamilySpec::Theta { arms } => {
            if arms.len() < 2 {
                return Err(spec.invalid("theta needs at least two arms"));
            }
            if arms.contains(&0) {
                return Err(spec.invalid("arm lengths must be at least 1"));
            }
            if arms.iter().filter(|&&a| a == 1).count() > 1 {
                return Err(spec.invalid("at most one arm may have length 1"));
            }
            let mut edges = Vec::new();
            let mut next = 2;
            for &len in arms {
                let mut prev = 0;
                for _ in 1..len {
                    edges.push((prev, next));
                    prev = next;
                    next += 1;
                }
                edges.push((prev, 1));
            }
            return Ok(build(next, edges));
        }
        FamilySpec::RandomConnected { n, p, seed } => return random_connected(spec, *n, *p, *seed),
        FamilySpec::RandomTree { n, seed } => {
            if *n < 1 {
                return Err(spec.invalid("tree needs n >= 1"));
            }
            return Ok(build(*n, random_tree(*n, *seed)));
        }
        FamilySpec::BarbellBridge { clique, bridge_len } => {
            if *clique < 3 || *bridge_len < 1 {
                return Err(spec.invalid("barbell needs clique >= 3 and bridge_len >= 1"));
            }
            let a = *clique;
            let mut edges: Vec<(usize, usize)> = (0..a).flat_map(|i| (i + 1..a).map(move |j| (i, j))).collect();
            // Path a-1, a, ..., a+bridge_len-1 hands over to the second clique's first vertex.
            let mut prev = a - 1;
            for i in 0..*bridge_len {
                edges.push((prev, a + i));
                prev = a + i;
            }
            let offset = a + bridge_len - 1;
            edges.extend((0..a).flat_map(|i| (i + 1..a).map(move |j| (offset + i, offset + j))));
            edges
        }
        FamilySpec::CycleWithPendants { n, attach } => {
            if *n < 3 {
                return Err(spec.invalid("cycle needs n >= 3"));
            }
            if let Some(&bad) = attach.iter().find(|&&a| a >= *n) {
                return Err(spec.invalid(format!("attach point {bad} is not a cycle vertex")));
            }
            let mut edges: Vec<(usize, usize)> = (0..*n).map(|i| (i, (i + 1) % n)).collect();
            edges.extend(attach.iter().enumerate().map(|(i, &a)| (a, n + i)));
            edges
        }
    };
    let n = edges.iter().map(|&(a, b)| a.max(b) + 1).max().unwrap_or(1);
    Ok(build(n, edges))
}

/// The fixed test corpus: named cycles, paths, stars, theta graphs,
/// pendant-decorated cycles, barbells, seeded random connected graphs and
/// seeded random trees.
pub fn standard_corpus() -> Vec<(String, FamilySpec)> {
    let mut specs = Vec::new();
    for n in 3..=30 {
        specs.push(FamilySpec::Cycle { n });
    }
    for n in 2..=30 {
        specs.push(FamilySpec::Path { n });
    }
    for n in 2..=20 {
        specs.push(FamilySpec::Star { leaves: n - 1 });
    }
    for arms in [
        vec![1, 2],
        vec![2, 2],
        vec![2, 3],
        vec![1, 3, 3],
        vec![2, 3, 4],
        vec![3, 3, 3],
        vec![1, 4, 6],
        vec![2, 2, 2, 2],
        vec![2, 5, 5],
        vec![4, 4, 6],
        vec![1, 2, 3, 4, 5],
        vec![6, 7],
    ] {
        specs.push(FamilySpec::Theta { arms });
    }
    for (n, attach) in [
        (3, vec![0]),
        (4, vec![0, 2]),
        (5, vec![0, 0, 0]),
        (6, vec![0, 3]),
        (6, vec![0, 1, 2, 3, 4, 5]),
        (7, vec![2, 2, 5]),
        (8, vec![0, 4]),
        (9, vec![1, 1, 1, 1, 1, 1, 1, 1]),
        (10, vec![0, 5, 7]),
        (12, vec![3]),
        (15, vec![0, 5, 10]),
        (20, vec![0, 1, 2, 3]),
    ] {
        specs.push(FamilySpec::CycleWithPendants { n, attach });
    }
    for (clique, bridge_len) in [(3, 1), (3, 4), (4, 2), (5, 3), (6, 1)] {
        specs.push(FamilySpec::BarbellBridge { clique, bridge_len });
    }
    for n in [10, 15, 20, 25, 30, 35, 40] {
        for p in [0.15, 0.3, 0.6] {
            for seed in 0..3 {
                specs.push(FamilySpec::RandomConnected { n, p, seed: 1000 * n as u64 + seed });
            }
        }
    }
    for n in 2..=25 {
        for seed in 0..2 {
            specs.push(FamilySpec::RandomTree { n, seed: 100 * n as u64 + seed });
        }
    }
    specs.into_iter().map(|s| (s.label(), s)).collect()
}

fn build(n: usize, edges: Vec<(usize, usize)>) -> Graph {
    Graph::from_edges(n, edges).expect("generated edges are simple")
}

fn cycle(n: usize) -> Graph {
    build(n, (0..n).map(|i| (i, (i + 1) % n)).collect())
}

fn random_connected(spec: &FamilySpec, n: usize, p: f64, seed: u64) -> Result<Graph, GenError> {
    if n < 1 {
        return Err(spec.invalid("n must be at least 1"));
    }
    if !(p > 0.0 && p <= 1.0) {
        return Err(spec.invalid("p must lie in (0, 1]"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_ATTEMPTS {
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if rng.random::<f64>() < p {
                    edges.push((a, b));
                }
            }
        }
        let g = build(n, edges);
        if is_connected(&g) {
            return Ok(g);
        }
    }
    Err(GenError::Exhausted { n, p })
}

fn random_tree(n: usize, seed: u64) -> Vec<(usize, usize)> {
    match n {
        1 => return Vec::new(),
        2 => return vec![(0, 1)],
        _ => {}
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let code: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &c in &code {
        degree[c] += 1;
    }
    let mut leaves: BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &c in &code {
        let leaf = leaves.pop_first().unwrap();
        edges.push((leaf, c));
        degree[c] -= 1;
        if degree[c] == 1 {
            leaves.insert(c);
        }
    }
    let last: Vec<usize> = leaves.into_iter().collect();
    edges.push((last[0], last[1]));
    edges
}
