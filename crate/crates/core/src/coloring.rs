//! Colorings, single-vertex recoloring steps and sequence verification.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

pub type Color = usize;

/// An assignment of colors `0..k` to the vertices of a graph. Properness is
/// checked against a graph with [`is_proper`], it is not part of the type.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coloring {
    k: usize,
    colors: Vec<Color>,
}

impl Coloring {
    pub fn new(k: usize, colors: Vec<Color>) -> Result<Coloring> {
        if let Some((vertex, &color)) = colors.iter().enumerate().find(|(_, &c)| c >= k) {
            return Err(Error::ColorOutsidePalette { vertex, color, k });
        }
        Ok(Coloring { k, colors })
    }

    pub(crate) fn new_unchecked(k: usize, colors: Vec<Color>) -> Coloring {
        debug_assert!(colors.iter().all(|&c| c < k));
        Coloring { k, colors }
    }

    #[inline]
    pub fn k(&self) -> usize {
        self.k
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    #[inline]
    pub fn get(&self, v: Vertex) -> Color {
        self.colors[v]
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn into_colors(self) -> Vec<Color> {
        self.colors
    }

    /// Same colors under a different palette size.
    pub fn with_palette(&self, k: usize) -> Result<Coloring> {
        Coloring::new(k, self.colors.clone())
    }

    /// Number of distinct colors in use.
    pub fn distinct_colors(&self) -> usize {
        let mut seen = Vec::new();
        for &c in &self.colors {
            if !seen.contains(&c) {
                seen.push(c);
            }
        }
        seen.len()
    }

    pub(crate) fn set(&mut self, v: Vertex, color: Color) {
        self.colors[v] = color;
    }
}

impl fmt::Display for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.colors.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// Recolor `vertex` with `color`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Step {
    pub vertex: Vertex,
    pub color: Color,
}

impl Step {
    pub fn new(vertex: Vertex, color: Color) -> Step {
        Step { vertex, color }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct RecoloringSequence {
    steps: Vec<Step>,
}

impl RecoloringSequence {
    pub fn new() -> RecoloringSequence {
        RecoloringSequence::default()
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn iter(&self) -> core::slice::Iter<'_, Step> {
        self.steps.iter()
    }

    pub fn push(&mut self, step: Step) {
        self.steps.push(step);
    }

    pub fn extend_from(&mut self, other: &RecoloringSequence) {
        self.steps.extend_from_slice(&other.steps);
    }

    /// The sequence that undoes `self` when `self` is played from `start`:
    /// each step is replaced by one restoring the color it overwrote, in
    /// reverse order.
    pub fn reversed(&self, start: &Coloring) -> Result<RecoloringSequence> {
        let mut current = start.colors.clone();
        let mut undo = Vec::with_capacity(self.steps.len());
        for (i, step) in self.steps.iter().enumerate() {
            let slot = current.get_mut(step.vertex).ok_or(Error::StepOutOfRange(i))?;
            undo.push(Step::new(step.vertex, *slot));
            *slot = step.color;
        }
        undo.reverse();
        Ok(RecoloringSequence { steps: undo })
    }
}

impl From<Vec<Step>> for RecoloringSequence {
    fn from(steps: Vec<Step>) -> Self {
        RecoloringSequence { steps }
    }
}

impl FromIterator<Step> for RecoloringSequence {
    fn from_iter<I: IntoIterator<Item = Step>>(iter: I) -> Self {
        RecoloringSequence {
            steps: iter.into_iter().collect(),
        }
    }
}

impl<'a> IntoIterator for &'a RecoloringSequence {
    type Item = &'a Step;
    type IntoIter = core::slice::Iter<'a, Step>;

    fn into_iter(self) -> Self::IntoIter {
        self.steps.iter()
    }
}

fn check_shape(g: &Graph, c: &Coloring) -> Result<()> {
    if c.len() != g.n() {
        return Err(Error::ShapeError {
            expected: g.n(),
            found: c.len(),
        });
    }
    Ok(())
}

pub(crate) fn is_proper_slice(g: &Graph, colors: &[Color]) -> bool {
    g.edges().iter().all(|&(u, v)| colors[u] != colors[v])
}

/// True when no neighbor of `v` has `color`.
#[inline]
pub(crate) fn color_free_at(g: &Graph, colors: &[Color], v: Vertex, color: Color) -> bool {
    g.neighbors(v).iter().all(|&w| colors[w] != color)
}

pub fn is_proper(g: &Graph, c: &Coloring) -> Result<bool> {
    check_shape(g, c)?;
    Ok(is_proper_slice(g, c.colors()))
}

fn require_proper(g: &Graph, c: &Coloring) -> Result<()> {
    if !is_proper(g, c)? {
        return Err(Error::NotProper);
    }
    Ok(())
}

/// Calls `f` for every admissible move of a proper coloring, in ascending
/// `(vertex, color)` order.
#[inline]
pub(crate) fn for_each_move(g: &Graph, k: usize, colors: &[Color], mut f: impl FnMut(Vertex, Color)) {
    for v in 0..g.n() {
        for a in 0..k {
            if a != colors[v] && color_free_at(g, colors, v, a) {
                f(v, a);
            }
        }
    }
}

pub fn admissible_moves(g: &Graph, c: &Coloring) -> Result<Vec<Step>> {
    require_proper(g, c)?;
    let mut moves = Vec::new();
    for_each_move(g, c.k(), c.colors(), |v, a| moves.push(Step::new(v, a)));
    Ok(moves)
}

/// Plays `s` from `c`, checking every intermediate coloring.
pub fn apply_sequence(g: &Graph, c: &Coloring, s: &RecoloringSequence) -> Result<Coloring> {
    require_proper(g, c)?;
    let mut current = c.clone();
    for (i, step) in s.iter().enumerate() {
        if step.vertex >= g.n() {
            return Err(Error::StepOutOfRange(i));
        }
        if step.color >= c.k() {
            return Err(Error::PaletteError(i));
        }
        if current.get(step.vertex) == step.color {
            return Err(Error::NoOpStep(i));
        }
        if !color_free_at(g, current.colors(), step.vertex, step.color) {
            return Err(Error::ImproperStep(i));
        }
        current.set(step.vertex, step.color);
    }
    Ok(current)
}

pub fn is_frozen(g: &Graph, c: &Coloring) -> Result<bool> {
    require_proper(g, c)?;
    let mut frozen = true;
    for_each_move(g, c.k(), c.colors(), |_, _| frozen = false);
    Ok(frozen)
}
