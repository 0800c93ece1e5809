//! Mixing decisions: the 3-to-2 predicate, the bipartite characterization of
//! 3-mixing, and a dispatcher over brute force and that characterization.
//!
//! A graph is 3-mixing exactly when it is bipartite and every proper
//! 3-coloring can reach a coloring that uses at most two colors. The
//! characterization only changes which configuration graph is searched; the
//! search itself is still exhaustive.

use alloc::vec;

use crate::coloring::{self, Coloring};
use crate::error::{Error, Result};
use crate::explore::{self, Budget, ConfigSpace};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Method {
    /// `Lemma3` for `k = 3`, `Brute` otherwise.
    #[default]
    Auto,
    Brute,
    Lemma3,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Reason {
    NonBipartite,
    /// A coloring admitting no recoloring at all.
    FrozenWitness(Coloring),
    /// A coloring that cannot reach the target set (a coloring on at most
    /// two colors for the 3-to-2 predicate, the lexicographically least
    /// coloring for brute force).
    StuckWitness(Coloring),
    Connected,
    VacuousNoColorings,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixingVerdict {
    pub answer: bool,
    pub reason: Reason,
}

impl MixingVerdict {
    fn yes(reason: Reason) -> MixingVerdict {
        MixingVerdict { answer: true, reason }
    }

    fn no(reason: Reason) -> MixingVerdict {
        MixingVerdict {
            answer: false,
            reason,
        }
    }

    pub fn witness(&self) -> Option<&Coloring> {
        match &self.reason {
            Reason::FrozenWitness(c) | Reason::StuckWitness(c) => Some(c),
            _ => None,
        }
    }
}

fn witness_reason(g: &Graph, c: Coloring) -> Reason {
    if coloring::is_frozen(g, &c).unwrap_or(false) {
        Reason::FrozenWitness(c)
    } else {
        Reason::StuckWitness(c)
    }
}

/// Whether every proper 3-coloring of `b` can reach a coloring on at most two
/// colors. On failure the witness is the lexicographically least stuck
/// coloring.
pub fn three_to_two(b: &Graph, budget: Budget) -> Result<MixingVerdict> {
    let space = ConfigSpace::build(b, 3, budget)?;
    if space.is_empty() {
        return Ok(MixingVerdict::yes(Reason::VacuousNoColorings));
    }
    // One census, then mark the components that contain a two-color state.
    let census = space.census();
    let mut good = vec![false; census.num_components()];
    let mut scratch = vec![0; b.n()];
    for i in 0..space.len() {
        space.codec().decode_into(space.code(i), &mut scratch);
        if explore::uses_at_most_two(&scratch) {
            good[census.component[i] as usize] = true;
        }
    }
    // States are in lexicographic order, so the first bad one is the least.
    match (0..space.len()).find(|&i| !good[census.component[i] as usize]) {
        None => Ok(MixingVerdict::yes(Reason::Connected)),
        Some(i) => Ok(MixingVerdict::no(witness_reason(b, space.coloring(i)))),
    }
}

pub fn is_3_mixing(g: &Graph, budget: Budget) -> Result<MixingVerdict> {
    if g.bipartition().is_none() {
        // Graphs without any proper 3-coloring are vacuously mixing, in
        // agreement with the brute-force census.
        if explore::first_coloring(g, 3).is_none() {
            return Ok(MixingVerdict::yes(Reason::VacuousNoColorings));
        }
        return Ok(MixingVerdict::no(Reason::NonBipartite));
    }
    three_to_two(g, budget)
}

/// Brute-force verdict. When the configuration graph is disconnected the
/// witness is the least frozen coloring if one exists, otherwise the least
/// coloring outside the component of the lexicographically least coloring.
pub fn brute_verdict(g: &Graph, k: usize, budget: Budget) -> Result<MixingVerdict> {
    let space = ConfigSpace::build(g, k, budget)?;
    if space.is_empty() {
        return Ok(MixingVerdict::yes(Reason::VacuousNoColorings));
    }
    let census = space.census();
    if census.num_components() == 1 {
        return Ok(MixingVerdict::yes(Reason::Connected));
    }
    if let Some(i) = census.frozen.iter().position(|&f| f) {
        return Ok(MixingVerdict::no(Reason::FrozenWitness(space.coloring(i))));
    }
    let i = census
        .component
        .iter()
        .position(|&c| c != 0)
        .expect("more than one component");
    Ok(MixingVerdict::no(Reason::StuckWitness(space.coloring(i))))
}

pub fn decide_mixing(g: &Graph, k: usize, method: Method, budget: Budget) -> Result<MixingVerdict> {
    match method {
        Method::Lemma3 if k != 3 => Err(Error::MethodMismatch { k }),
        Method::Lemma3 => is_3_mixing(g, budget),
        Method::Auto if k == 3 => is_3_mixing(g, budget),
        Method::Auto | Method::Brute => brute_verdict(g, k, budget),
    }
}
