//! Constructive recoloring sequences.
//!
//! Two pipelines live here. [`compose_three_mixing`] connects any two
//! 3-colorings of a 3-mixing bipartite graph by walking both to 2-colorings,
//! bridging the first 2-coloring onto the color classes of the second, and
//! unwinding the second walk. [`synthesize_k`] connects any two k-colorings
//! of a reduction instance: it normalizes `B` to its canonical 2-coloring on
//! both ends with `X` pinned, identifies the two classes of `B` so that the
//! instance collapses onto a clique, schedules the clique, and lifts the
//! schedule back.
//!
//! The walks to 2-colorings are found by exhaustive search; no shortcut is
//! known for them.

use alloc::vec;
use alloc::vec::Vec;

use crate::coloring::{self, Color, Coloring, RecoloringSequence, Step};
use crate::decide;
use crate::error::{Error, Result};
use crate::explore::{self, Budget};
use crate::graph::{Bipartition, Graph, QuotientMap};
use crate::reduction::ReductionInstance;

/// Applies the color permutation `pi` to a start coloring and to every step.
pub fn relabel(
    s: &RecoloringSequence,
    c_start: &Coloring,
    pi: &[Color],
) -> Result<(RecoloringSequence, Coloring)> {
    let k = c_start.k();
    if pi.len() != k {
        return Err(Error::BadPermutation);
    }
    let mut seen = vec![false; k];
    for &p in pi {
        if p >= k || core::mem::replace(&mut seen[p], true) {
            return Err(Error::BadPermutation);
        }
    }
    let mut steps = RecoloringSequence::new();
    for (i, step) in s.iter().enumerate() {
        let color = *pi.get(step.color).ok_or(Error::PaletteError(i))?;
        steps.push(Step::new(step.vertex, color));
    }
    let start = c_start.colors().iter().map(|&c| pi[c]).collect();
    Ok((steps, Coloring::new_unchecked(k, start)))
}

/// Moves a 2-coloring on colors {1, 2} onto the classes `(X0, X1)` of
/// `target`: every vertex of `X0` is recolored 0, then every vertex of `X1`
/// not already colored 1 is recolored 1.
pub fn two_coloring_bridge(g: &Graph, c: &Coloring, target: &Bipartition) -> Result<RecoloringSequence> {
    if c.k() < 3 {
        return Err(Error::PaletteTooSmall { needed: 3, k: c.k() });
    }
    if !coloring::is_proper(g, c)? {
        return Err(Error::NotProper);
    }
    if let Some((vertex, &color)) = c.colors().iter().enumerate().find(|(_, &a)| a != 1 && a != 2) {
        return Err(Error::UnexpectedColor { vertex, color });
    }
    if !target.separates(g) {
        return Err(Error::NotBipartition);
    }
    let mut s = RecoloringSequence::new();
    for v in (0..g.n()).filter(|&v| target.is_on_a(v)) {
        s.push(Step::new(v, 0));
    }
    for v in (0..g.n()).filter(|&v| !target.is_on_a(v) && c.get(v) != 1) {
        s.push(Step::new(v, 1));
    }
    Ok(s)
}

/// Recolors every vertex colored `from` to `to`, in index order.
fn recolor_class(c: &mut Coloring, from: Color, to: Color, s: &mut RecoloringSequence) {
    for v in 0..c.len() {
        if c.get(v) == from {
            c.set(v, to);
            s.push(Step::new(v, to));
        }
    }
}

/// Walks a 3-coloring to a coloring whose colors avoid `avoid`, via a
/// shortest walk to some coloring on at most two colors followed by moving
/// the class colored `avoid` (if any) onto the unused color.
fn walk_to_two_coloring(
    b: &Graph,
    c: &Coloring,
    avoid: Color,
    budget: Budget,
) -> Result<(RecoloringSequence, Coloring)> {
    let (mut s, mut reached) =
        explore::search(b, c, budget, explore::uses_at_most_two)?.ok_or(Error::NotMixing)?;
    if reached.colors().contains(&avoid) {
        let spare = (0..3)
            .find(|&a| a != avoid && !reached.colors().contains(&a))
            .expect("a coloring on at most two colors leaves one color free");
        recolor_class(&mut reached, avoid, spare, &mut s);
    }
    Ok((s, reached))
}

/// A recoloring sequence between two 3-colorings of a 3-mixing graph.
pub fn compose_three_mixing(
    b: &Graph,
    c1: &Coloring,
    c2: &Coloring,
    budget: Budget,
) -> Result<RecoloringSequence> {
    for c in [c1, c2] {
        if c.k() != 3 {
            return Err(Error::PaletteMismatch {
                expected: 3,
                found: c.k(),
            });
        }
        if !coloring::is_proper(b, c)? {
            return Err(Error::NotProper);
        }
    }
    if !decide::is_3_mixing(b, budget)?.answer {
        return Err(Error::NotMixing);
    }
    let (s1, c1_two) = walk_to_two_coloring(b, c1, 0, budget)?;
    let (s2, c2_two) = walk_to_two_coloring(b, c2, 2, budget)?;
    let zeros: Vec<_> = (0..b.n()).filter(|&v| c2_two.get(v) == 0).collect();
    let classes = Bipartition::from_side_a(b, &zeros)?;
    let bridge = two_coloring_bridge(b, &c1_two, &classes)?;

    let mut out = s1;
    out.extend_from(&bridge);
    out.extend_from(&s2.reversed(c2)?);
    Ok(out)
}

/// A recoloring schedule between two rainbow colorings of `K_m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueSchedule {
    pub source: Coloring,
    pub target: Coloring,
    pub steps: RecoloringSequence,
}

/// Moves the clique from `source` to `target` with at most `2m` steps.
///
/// Repeatedly recolors the lowest vertex whose target color is currently
/// unused; when every mismatched vertex is blocked, the lowest mismatched
/// vertex parks on an unused color, which frees the target of whichever
/// vertex it was blocking.
pub fn clique_schedule(m: usize, k: usize, source: &Coloring, target: &Coloring) -> Result<CliqueSchedule> {
    if m >= k {
        return Err(Error::PaletteTooSmall { needed: m + 1, k });
    }
    for c in [source, target] {
        if c.len() != m {
            return Err(Error::ShapeError {
                expected: m,
                found: c.len(),
            });
        }
        if c.k() != k {
            return Err(Error::PaletteMismatch {
                expected: k,
                found: c.k(),
            });
        }
        if c.distinct_colors() != m {
            return Err(Error::NotProper);
        }
    }
    let mut current = source.colors().to_vec();
    let goal = target.colors();
    let mut in_use = vec![false; k];
    for &c in &current {
        in_use[c] = true;
    }
    let mut steps = RecoloringSequence::new();
    let mut recolor = |current: &mut Vec<Color>, in_use: &mut Vec<bool>, v: usize, a: Color| {
        in_use[current[v]] = false;
        in_use[a] = true;
        current[v] = a;
        steps.push(Step::new(v, a));
    };
    while let Some(first_mismatch) = (0..m).find(|&v| current[v] != goal[v]) {
        if let Some(v) = (first_mismatch..m).find(|&v| current[v] != goal[v] && !in_use[goal[v]]) {
            recolor(&mut current, &mut in_use, v, goal[v]);
        } else {
            let spare = (0..k).find(|&a| !in_use[a]).expect("m < k leaves a free color");
            recolor(&mut current, &mut in_use, first_mismatch, spare);
        }
    }
    Ok(CliqueSchedule {
        source: source.clone(),
        target: target.clone(),
        steps,
    })
}

/// Expands a sequence on the quotient `g / q` into a sequence on `g`: a step
/// on class `C` recolors the members of `C` one by one in index order.
pub fn lift(
    g: &Graph,
    q: &QuotientMap,
    c_start: &Coloring,
    s_q: &RecoloringSequence,
) -> Result<RecoloringSequence> {
    if q.n() != g.n() {
        return Err(Error::InvalidPartition);
    }
    if !coloring::is_proper(g, c_start)? {
        return Err(Error::NotProper);
    }
    let mut class_color = Vec::with_capacity(q.len());
    for (i, class) in q.classes().iter().enumerate() {
        let color = class.first().map(|&v| c_start.get(v));
        if class.iter().any(|&v| Some(c_start.get(v)) != color) {
            return Err(Error::NotClassConstant { class: i });
        }
        class_color.push(color);
    }
    let mut out = RecoloringSequence::new();
    for (i, step) in s_q.iter().enumerate() {
        let slot = class_color.get_mut(step.vertex).ok_or(Error::StepOutOfRange(i))?;
        if *slot != Some(step.color) {
            for &v in q.class(step.vertex) {
                out.push(Step::new(v, step.color));
            }
            if !q.class(step.vertex).is_empty() {
                *slot = Some(step.color);
            }
        }
    }
    Ok(out)
}

/// The three phases of [`synthesize_k`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KSynthesis {
    /// Walks `B` from `c1` to its canonical 2-coloring; `X` is untouched.
    pub normalize: RecoloringSequence,
    /// The clique schedule on the quotient, lifted to the instance.
    pub lifted: RecoloringSequence,
    /// Walks `B` from its canonical 2-coloring back to `c2`; `X` is untouched.
    pub unwind: RecoloringSequence,
}

impl KSynthesis {
    pub fn len(&self) -> usize {
        self.normalize.len() + self.lifted.len() + self.unwind.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn sequence(&self) -> RecoloringSequence {
        let mut s = self.normalize.clone();
        s.extend_from(&self.lifted);
        s.extend_from(&self.unwind);
        s
    }
}

/// The colors `B` uses in a proper coloring of the instance: the complement
/// of the clique's colors, ascending.
fn b_palette(inst: &ReductionInstance, c: &Coloring) -> [Color; 3] {
    let x = &c.colors()[inst.x_range()];
    let free: Vec<Color> = (0..inst.k()).filter(|a| !x.contains(a)).collect();
    [free[0], free[1], free[2]]
}

/// Sequence (on the instance, touching only `B`) from `c` to the coloring
/// with `B` on its canonical 2-coloring through `c`'s own palette for `B`.
fn normalize_b(
    inst: &ReductionInstance,
    c: &Coloring,
    budget: Budget,
) -> Result<(RecoloringSequence, Coloring)> {
    let k = inst.k();
    let b = inst.source();
    let palette = b_palette(inst, c);
    let local: Vec<Color> = c.colors()[inst.b_range()]
        .iter()
        .map(|col| {
            palette
                .iter()
                .position(|p| p == col)
                .expect("B avoids the clique colors")
        })
        .collect();
    let local = Coloring::new_unchecked(3, local);
    let canonical = inst.canonical_two_coloring();
    let walk = explore::reachable(b, 3, &local, &canonical, budget)?.ok_or(Error::NotMixing)?;

    // Map colors 0, 1, 2 back onto the palette, extended to a permutation of 0..k.
    let mut pi: Vec<Color> = palette.to_vec();
    pi.extend((0..k).filter(|a| !palette.contains(a)));
    let (walk, _) = relabel(&walk, &local.with_palette(k)?, &pi)?;

    let mut reached = c.clone();
    for v in inst.b_range() {
        reached.set(v, palette[canonical.get(v)]);
    }
    Ok((walk, reached))
}

/// Quotient of the instance: side A of `B`, side B of `B` (each omitted when
/// empty), then one singleton per clique vertex.
fn instance_quotient(inst: &ReductionInstance) -> QuotientMap {
    let bip = inst.source().bipartition().expect("source graph is bipartite");
    let mut classes: Vec<Vec<usize>> = [bip.side_a(), bip.side_b()]
        .into_iter()
        .filter(|c| !c.is_empty())
        .collect();
    classes.extend(inst.x_range().map(|x| vec![x]));
    QuotientMap::new(inst.graph().n(), classes).expect("classes partition the instance")
}

fn quotient_coloring(q: &QuotientMap, c: &Coloring) -> Coloring {
    let colors = q.classes().iter().map(|class| c.get(class[0])).collect();
    Coloring::new_unchecked(c.k(), colors)
}

pub fn synthesize_k_phases(
    inst: &ReductionInstance,
    c1: &Coloring,
    c2: &Coloring,
    budget: Budget,
) -> Result<KSynthesis> {
    let g = inst.graph();
    let k = inst.k();
    for c in [c1, c2] {
        if c.k() != k {
            return Err(Error::PaletteMismatch {
                expected: k,
                found: c.k(),
            });
        }
        if !coloring::is_proper(g, c)? {
            return Err(Error::NotProper);
        }
    }
    if !decide::three_to_two(inst.source(), budget)?.answer {
        return Err(Error::NotMixing);
    }
    let (normalize, c1_two) = normalize_b(inst, c1, budget)?;
    let (to_c2_two, c2_two) = normalize_b(inst, c2, budget)?;

    let q = instance_quotient(inst);
    let source = quotient_coloring(&q, &c1_two);
    let target = quotient_coloring(&q, &c2_two);
    // Both quotient colorings are rainbow. The quotient is a clique, or a
    // clique minus the edge between the two sides of an edgeless B, so a
    // schedule valid on the full clique is valid on it.
    let schedule = clique_schedule(q.len(), k, &source, &target)?;
    debug_assert_eq!(
        coloring::apply_sequence(&g.quotient(&q)?, &source, &schedule.steps).as_ref(),
        Ok(&target)
    );
    let lifted = lift(g, &q, &c1_two, &schedule.steps)?;
    let unwind = to_c2_two.reversed(c2)?;
    Ok(KSynthesis {
        normalize,
        lifted,
        unwind,
    })
}

/// A recoloring sequence between two k-colorings of a reduction instance
/// whose source graph passes the 3-to-2 test.
pub fn synthesize_k(
    inst: &ReductionInstance,
    c1: &Coloring,
    c2: &Coloring,
    budget: Budget,
) -> Result<RecoloringSequence> {
    Ok(synthesize_k_phases(inst, c1, c2, budget)?.sequence())
}
