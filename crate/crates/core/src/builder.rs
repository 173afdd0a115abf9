//! Center-seeded driver: run the expansion step for `k = r, r-1, ..., 1`.

use serde::Serialize;
use thiserror::Error;

use crate::coloring::{Color, Coloring};
use crate::ear::{color_stage, plan_stage, EarError, StagePlan, StageReport};
use crate::graph::{ensure_connected, find_bridges, radius_center, Graph, GraphError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BuildError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("stage {k}: {source}")]
    Stage { k: usize, source: EarError },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RcResult {
    #[serde(skip)]
    pub coloring: Coloring,
    /// `sum over i of max(2i+1, b_i)`.
    pub bound: usize,
    /// Distinct colors in the final coloring.
    pub colors_used: usize,
    pub center: usize,
    pub radius: usize,
    /// Stage reports from `k = r` down to `k = 1`.
    pub stages: Vec<StageReport>,
}

impl RcResult {
    /// `b_r, ..., b_1` in stage order.
    pub fn b_sequence(&self) -> Vec<usize> {
        self.stages.iter().map(|s| s.b).collect()
    }
}

/// `max(2i+1, b_i)` summed over the stages.
pub fn bound_from_stages(stages: impl IntoIterator<Item = (usize, usize)>) -> usize {
    stages.into_iter().map(|(k, b)| (2 * k + 1).max(b)).sum()
}

/// The center-seeded chain of stage plans, `k = r` first.
fn plan_chain(g: &Graph) -> Result<(usize, usize, Vec<StagePlan>), BuildError> {
    ensure_connected(g)?;
    let metrics = radius_center(g)?;
    let center = metrics.center();
    let bridges = find_bridges(g);
    let mut core = vec![center];
    let mut plans = Vec::with_capacity(metrics.radius);
    for k in (1..=metrics.radius).rev() {
        let plan = plan_stage(g, &core, k, &bridges).map_err(|source| BuildError::Stage { k, source })?;
        core = plan.core_out.clone();
        plans.push(plan);
    }
    debug_assert_eq!(core.len(), g.n());
    Ok((center, metrics.radius, plans))
}

/// Builds a rainbow coloring of `g` stage by stage.
///
/// The result is not verified here; see [`crate::verify`].
pub fn build(g: &Graph) -> Result<RcResult, BuildError> {
    let (center, radius, plans) = plan_chain(g)?;
    let mut coloring = Coloring::new();
    let mut start: Color = 1;
    let mut stages = Vec::with_capacity(plans.len());
    for plan in plans {
        let budget = plan.budget() as Color;
        stages.push(color_stage(g, plan, &mut coloring, start));
        start += budget;
    }
    let bound = bound_from_stages(stages.iter().map(|s| (s.k, s.b)));
    let colors_used = coloring.distinct_colors().len();
    Ok(RcResult { coloring, bound, colors_used, center, radius, stages })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Bound {
    pub bound: usize,
    pub radius: usize,
    /// `(i, b_i)` from `i = r` down to `1`.
    pub b: Vec<(usize, usize)>,
}

/// The bound along the same core chain as [`build`], without coloring.
pub fn theorem2_bound(g: &Graph) -> Result<Bound, BuildError> {
    let (_, radius, plans) = plan_chain(g)?;
    let b: Vec<(usize, usize)> = plans.iter().map(|p| (p.k, p.b())).collect();
    Ok(Bound { bound: bound_from_stages(b.iter().copied()), radius, b })
}

/// The per-stage pendant bridge counts add up to the bridge count of `g`.
pub fn corollary1_check(g: &Graph, stages: &[StageReport]) -> bool {
    stages.iter().map(|s| s.b).sum::<usize>() == find_bridges(g).len()
}
