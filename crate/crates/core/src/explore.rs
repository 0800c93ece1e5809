//! Exhaustive search over the configuration graph of proper k-colorings.
//!
//! States are packed into [`StateCode`]s: the color vector read as a base-k
//! numeral with vertex 0 as the most significant digit, so numeric order on
//! codes is lexicographic order on color vectors. [`ConfigSpace`] keeps every
//! proper coloring as a sorted code array and finds neighbors by binary
//! search, which makes every traversal deterministic.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use crate::coloring::{self, Color, Coloring, RecoloringSequence, Step};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_MAX_STATES: u64 = 1 << 26;

/// Cap on the size of configuration spaces the explorer will touch. The
/// estimate is the upper bound `k^n` on the number of colorings.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_states: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_states: DEFAULT_MAX_STATES,
        }
    }
}

impl Budget {
    pub fn new(max_states: u64) -> Budget {
        Budget { max_states }
    }

    pub fn unlimited() -> Budget {
        Budget { max_states: u64::MAX }
    }

    /// Returns the `k^n` estimate, or `TooLarge` when it exceeds the cap.
    pub fn check(&self, n: usize, k: usize) -> Result<u64> {
        let estimate = u32::try_from(n).ok().and_then(|n| (k as u64).checked_pow(n));
        match estimate {
            Some(e) if e <= self.max_states => Ok(e),
            _ => Err(Error::TooLarge {
                estimate,
                cap: self.max_states,
            }),
        }
    }

    pub fn allows(&self, n: usize, k: usize) -> bool {
        self.check(n, k).is_ok()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StateCode(pub u64);

/// Packs color vectors of length `n` over palette `k` into [`StateCode`]s.
#[derive(Debug, Clone)]
pub struct Codec {
    k: usize,
    weights: Vec<u64>,
}

impl Codec {
    pub fn new(n: usize, k: usize) -> Result<Codec> {
        let overflow = Error::EncodingOverflow { n, k };
        // Digits of k^n - 1 must fit; k <= 1 always does.
        if k > 1 {
            let exp = u32::try_from(n).map_err(|_| overflow.clone())?;
            (k as u64).checked_pow(exp).ok_or(overflow)?;
        }
        let mut weights = vec![1u64; n];
        for i in (0..n.saturating_sub(1)).rev() {
            weights[i] = weights[i + 1] * k as u64;
        }
        Ok(Codec { k, weights })
    }

    pub fn n(&self) -> usize {
        self.weights.len()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    #[inline]
    pub fn encode(&self, colors: &[Color]) -> StateCode {
        debug_assert_eq!(colors.len(), self.weights.len());
        StateCode(
            colors
                .iter()
                .zip(&self.weights)
                .map(|(&c, &w)| c as u64 * w)
                .sum(),
        )
    }

    #[inline]
    pub fn decode_into(&self, code: StateCode, out: &mut [Color]) {
        let mut rest = code.0;
        for (slot, &w) in out.iter_mut().zip(&self.weights) {
            *slot = (rest / w) as Color;
            rest %= w;
        }
    }

    pub fn decode(&self, code: StateCode) -> Vec<Color> {
        let mut out = vec![0; self.n()];
        self.decode_into(code, &mut out);
        out
    }

    /// Code of the coloring obtained by recoloring `v` from `old` to `new`.
    #[inline]
    fn shift(&self, code: StateCode, v: usize, old: Color, new: Color) -> StateCode {
        let w = self.weights[v];
        StateCode(code.0 - old as u64 * w + new as u64 * w)
    }
}

/// Backtracking over vertices in index order, colors ascending: yields proper
/// colorings in lexicographic order.
fn backtrack(g: &Graph, k: usize, mut f: impl FnMut(&[Color]) -> ControlFlow<()>) {
    let n = g.n();
    if n == 0 {
        let _ = f(&[]);
        return;
    }
    if k == 0 {
        return;
    }
    let mut colors = vec![0usize; n];
    // next[v] is the next color to try at v
    let mut next = vec![0usize; n];
    let mut v = 0usize;
    loop {
        let mut placed = false;
        while next[v] < k {
            let a = next[v];
            next[v] += 1;
            if g.neighbors(v).iter().all(|&w| w > v || colors[w] != a) {
                colors[v] = a;
                placed = true;
                break;
            }
        }
        if placed {
            if v + 1 == n {
                if f(&colors).is_break() {
                    return;
                }
            } else {
                v += 1;
                next[v] = 0;
            }
        } else {
            if v == 0 {
                return;
            }
            v -= 1;
        }
    }
}

/// Streams every proper k-coloring of `g` in lexicographic order.
pub fn for_each_coloring(g: &Graph, k: usize, budget: Budget, mut f: impl FnMut(&[Color])) -> Result<()> {
    budget.check(g.n(), k)?;
    backtrack(g, k, |c| {
        f(c);
        ControlFlow::Continue(())
    });
    Ok(())
}

pub fn enumerate_colorings(g: &Graph, k: usize, budget: Budget) -> Result<u64> {
    let mut count = 0u64;
    for_each_coloring(g, k, budget, |_| count += 1)?;
    Ok(count)
}

/// Lexicographically least proper k-coloring, if any. Not budgeted: it stops
/// at the first hit.
pub fn first_coloring(g: &Graph, k: usize) -> Option<Coloring> {
    let mut found = None;
    backtrack(g, k, |c| {
        found = Some(Coloring::new_unchecked(k, c.to_vec()));
        ControlFlow::Break(())
    });
    found
}

/// Component census of a configuration graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Census {
    /// Component id per state index; ids follow the order of each
    /// component's least state.
    pub component: Vec<u32>,
    pub sizes: Vec<usize>,
    pub frozen: Vec<bool>,
}

impl Census {
    pub fn num_components(&self) -> usize {
        self.sizes.len()
    }

    pub fn num_frozen(&self) -> usize {
        self.frozen.iter().filter(|&&f| f).count()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConfigStats {
    pub num_colorings: u64,
    pub num_components: u64,
    pub num_frozen: u64,
    pub is_connected: bool,
    pub largest_component: u64,
}

/// All proper k-colorings of a graph, indexed in lexicographic order.
#[derive(Debug, Clone)]
pub struct ConfigSpace<'g> {
    graph: &'g Graph,
    codec: Codec,
    states: Vec<StateCode>,
}

impl<'g> ConfigSpace<'g> {
    pub fn build(graph: &'g Graph, k: usize, budget: Budget) -> Result<ConfigSpace<'g>> {
        budget.check(graph.n(), k)?;
        let codec = Codec::new(graph.n(), k)?;
        let mut states = Vec::new();
        backtrack(graph, k, |c| {
            states.push(codec.encode(c));
            ControlFlow::Continue(())
        });
        debug_assert!(states.windows(2).all(|w| w[0] < w[1]));
        Ok(ConfigSpace { graph, codec, states })
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn k(&self) -> usize {
        self.codec.k()
    }

    pub fn codec(&self) -> &Codec {
        &self.codec
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn code(&self, index: usize) -> StateCode {
        self.states[index]
    }

    pub fn coloring(&self, index: usize) -> Coloring {
        Coloring::new_unchecked(self.k(), self.codec.decode(self.states[index]))
    }

    pub fn index_of_code(&self, code: StateCode) -> Option<usize> {
        self.states.binary_search(&code).ok()
    }

    /// Index of a proper coloring with this space's palette.
    pub fn index_of(&self, c: &Coloring) -> Option<usize> {
        if c.k() != self.k() || c.len() != self.graph.n() {
            return None;
        }
        self.index_of_code(self.codec.encode(c.colors()))
    }

    /// Calls `f(step, neighbor_index)` for every single-vertex recoloring of
    /// state `index`, in ascending `(vertex, color)` order. `scratch` must
    /// hold `n` colors.
    pub fn for_each_neighbor(&self, index: usize, scratch: &mut [Color], mut f: impl FnMut(Step, usize)) {
        let code = self.states[index];
        self.codec.decode_into(code, scratch);
        coloring::for_each_move(self.graph, self.k(), scratch, |v, a| {
            let next = self.codec.shift(code, v, scratch[v], a);
            let j = self
                .index_of_code(next)
                .expect("admissible move leads to a proper coloring");
            f(Step::new(v, a), j);
        });
    }

    pub fn neighbors(&self, index: usize) -> Vec<usize> {
        let mut scratch = vec![0; self.graph.n()];
        let mut out = Vec::new();
        self.for_each_neighbor(index, &mut scratch, |_, j| out.push(j));
        out
    }

    /// Number of edges of the configuration graph.
    pub fn edge_count(&self) -> u64 {
        let mut scratch = vec![0; self.graph.n()];
        let mut degree_sum = 0u64;
        for i in 0..self.len() {
            self.for_each_neighbor(i, &mut scratch, |_, _| degree_sum += 1);
        }
        degree_sum / 2
    }

    pub fn census(&self) -> Census {
        const UNSEEN: u32 = u32::MAX;
        let mut component = vec![UNSEEN; self.len()];
        let mut frozen = vec![false; self.len()];
        let mut sizes = Vec::new();
        let mut scratch = vec![0; self.graph.n()];
        let mut queue = VecDeque::new();
        for root in 0..self.len() {
            if component[root] != UNSEEN {
                continue;
            }
            let id = sizes.len() as u32;
            component[root] = id;
            queue.push_back(root);
            let mut size = 0usize;
            while let Some(i) = queue.pop_front() {
                size += 1;
                let mut degree = 0;
                self.for_each_neighbor(i, &mut scratch, |_, j| {
                    degree += 1;
                    if component[j] == UNSEEN {
                        component[j] = id;
                        queue.push_back(j);
                    }
                });
                frozen[i] = degree == 0;
            }
            sizes.push(size);
        }
        Census {
            component,
            sizes,
            frozen,
        }
    }

    pub fn stats(&self) -> ConfigStats {
        stats_of(&self.census())
    }
}

fn stats_of(census: &Census) -> ConfigStats {
    let num_colorings = census.component.len() as u64;
    ConfigStats {
        num_colorings,
        num_components: census.num_components() as u64,
        num_frozen: census.num_frozen() as u64,
        is_connected: census.num_components() <= 1,
        largest_component: census.sizes.iter().copied().max().unwrap_or(0) as u64,
    }
}

pub fn components(g: &Graph, k: usize, budget: Budget) -> Result<ConfigStats> {
    Ok(ConfigSpace::build(g, k, budget)?.stats())
}

/// Whether the configuration graph of proper k-colorings is connected.
/// Vacuously true when `g` has no proper k-coloring.
pub fn is_mixing_bruteforce(g: &Graph, k: usize, budget: Budget) -> Result<bool> {
    Ok(components(g, k, budget)?.is_connected)
}

fn require_proper_with(g: &Graph, c: &Coloring, k: usize) -> Result<()> {
    if c.k() != k {
        return Err(Error::PaletteMismatch {
            expected: k,
            found: c.k(),
        });
    }
    if !coloring::is_proper(g, c)? {
        return Err(Error::NotProper);
    }
    Ok(())
}

/// Breadth-first search from `start` for the first coloring accepted by
/// `is_target`. Returns a shortest sequence to it together with the coloring
/// reached. Neighbors are expanded in ascending `(vertex, color)` order.
pub fn search(
    g: &Graph,
    start: &Coloring,
    budget: Budget,
    mut is_target: impl FnMut(&[Color]) -> bool,
) -> Result<Option<(RecoloringSequence, Coloring)>> {
    let k = start.k();
    require_proper_with(g, start, k)?;
    budget.check(g.n(), k)?;
    let codec = Codec::new(g.n(), k)?;
    if is_target(start.colors()) {
        return Ok(Some((RecoloringSequence::new(), start.clone())));
    }
    let root = codec.encode(start.colors());
    // parent link for every visited state except the root
    let mut parent: BTreeMap<StateCode, Option<(StateCode, Step)>> = BTreeMap::new();
    parent.insert(root, None);
    let mut queue = VecDeque::from([root]);
    let mut colors = vec![0; g.n()];
    while let Some(code) = queue.pop_front() {
        codec.decode_into(code, &mut colors);
        let mut hit = None;
        let mut moves = Vec::new();
        coloring::for_each_move(g, k, &colors, |v, a| moves.push(Step::new(v, a)));
        for step in moves {
            let old = colors[step.vertex];
            let next = codec.shift(code, step.vertex, old, step.color);
            if parent.contains_key(&next) {
                continue;
            }
            parent.insert(next, Some((code, step)));
            colors[step.vertex] = step.color;
            let found = is_target(&colors);
            colors[step.vertex] = old;
            if found {
                hit = Some(next);
                break;
            }
            queue.push_back(next);
        }
        if let Some(target) = hit {
            let mut steps = Vec::new();
            let mut cur = target;
            while let Some(&Some((prev, step))) = parent.get(&cur) {
                steps.push(step);
                cur = prev;
            }
            steps.reverse();
            let reached = Coloring::new_unchecked(k, codec.decode(target));
            return Ok(Some((RecoloringSequence::from(steps), reached)));
        }
    }
    Ok(None)
}

/// A shortest recoloring sequence from `c1` to `c2`, or `None` when they lie
/// in different components.
pub fn reachable(
    g: &Graph,
    k: usize,
    c1: &Coloring,
    c2: &Coloring,
    budget: Budget,
) -> Result<Option<RecoloringSequence>> {
    require_proper_with(g, c1, k)?;
    require_proper_with(g, c2, k)?;
    let target = c2.colors();
    Ok(search(g, c1, budget, |c| c == target)?.map(|(s, _)| s))
}

/// Whether some coloring using at most two colors is reachable from the
/// 3-coloring `c`.
pub fn reaches_two_coloring(g: &Graph, c: &Coloring, budget: Budget) -> Result<bool> {
    require_proper_with(g, c, 3)?;
    Ok(search(g, c, budget, uses_at_most_two)?.is_some())
}

pub(crate) fn uses_at_most_two(colors: &[Color]) -> bool {
    let mut seen = [false; 3];
    for &c in colors {
        seen[c] = true;
    }
    seen.iter().filter(|&&s| s).count() <= 2
}
