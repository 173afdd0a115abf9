use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::graph::{Edge, Graph};

/// Positive color index.
pub type Color = u32;

/// A contiguous range of colors reserved for one expansion stage.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PaletteBlock {
    pub stage: usize,
    pub start: Color,
    pub size: u32,
}

impl PaletteBlock {
    /// Absolute color for a 1-based offset into the block.
    pub fn color(&self, offset: u32) -> Color {
        debug_assert!(offset >= 1 && offset <= self.size);
        self.start + offset - 1
    }

    pub fn offset(&self, color: Color) -> Option<u32> {
        (color >= self.start && color < self.start + self.size).then(|| color - self.start + 1)
    }

    /// One past the last color of the block.
    pub fn end(&self) -> Color {
        self.start + self.size
    }
}

/// Partial edge coloring.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Coloring {
    assignment: BTreeMap<Edge, Color>,
    blocks: Vec<PaletteBlock>,
}

impl Coloring {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_assignment(assignment: impl IntoIterator<Item = (Edge, Color)>) -> Self {
        Coloring { assignment: assignment.into_iter().collect(), blocks: Vec::new() }
    }

    pub fn get(&self, e: Edge) -> Option<Color> {
        self.assignment.get(&e).copied()
    }

    pub fn set(&mut self, e: Edge, c: Color) {
        assert!(c >= 1, "colors are positive");
        self.assignment.insert(e, c);
    }

    pub fn is_colored(&self, e: Edge) -> bool {
        self.assignment.contains_key(&e)
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    /// Colored edges in ascending edge order.
    pub fn iter(&self) -> impl Iterator<Item = (Edge, Color)> + '_ {
        self.assignment.iter().map(|(&e, &c)| (e, c))
    }

    pub fn distinct_colors(&self) -> BTreeSet<Color> {
        self.assignment.values().copied().collect()
    }

    pub fn blocks(&self) -> &[PaletteBlock] {
        &self.blocks
    }

    pub(crate) fn push_block(&mut self, block: PaletteBlock) {
        self.blocks.push(block);
    }

    /// True when every edge of `g` is colored and nothing else is.
    pub fn is_total_on(&self, g: &Graph) -> bool {
        self.assignment.len() == g.m() && g.edges().iter().all(|e| self.assignment.contains_key(e))
    }

    /// Colors along a vertex walk; `None` if some step is uncolored.
    pub fn path_colors(&self, path: &[usize]) -> Option<Vec<Color>> {
        path.windows(2).map(|w| self.get(Edge::new(w[0], w[1]))).collect()
    }

    /// Applies `f` to every color, keeping palette blocks untouched.
    pub fn recolor(&self, mut f: impl FnMut(Color) -> Color) -> Coloring {
        Coloring {
            assignment: self.assignment.iter().map(|(&e, &c)| (e, f(c))).collect(),
            blocks: self.blocks.clone(),
        }
    }
}
