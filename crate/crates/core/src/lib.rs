//! Single-vertex recoloring reconfiguration of graph colorings.
//!
//! Two proper k-colorings are adjacent when they differ on exactly one
//! vertex; a graph is *k-mixing* when the resulting configuration graph is
//! connected. This crate decides k-mixing by exhaustive search, decides
//! 3-mixing through the bipartite 3-to-2 characterization, builds the
//! clique-join reduction instances that carry hardness from 3 colors to
//! every `k >= 4`, and synthesizes explicit recoloring sequences that
//! [`apply_sequence`] can check step by step.
//!
//! The crate is `no_std` and only needs `alloc`.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod coloring;
pub mod decide;
pub mod error;
pub mod explore;
pub mod graph;
pub mod reduction;
pub mod synthesis;

pub use coloring::{
    admissible_moves, apply_sequence, is_frozen, is_proper, Color, Coloring, RecoloringSequence, Step,
};
pub use decide::{decide_mixing, is_3_mixing, three_to_two, Method, MixingVerdict, Reason};
pub use error::{Error, Result};
pub use explore::{
    components, enumerate_colorings, is_mixing_bruteforce, reachable, reaches_two_coloring, Budget,
    ConfigSpace, ConfigStats, StateCode,
};
pub use graph::{Bipartition, Graph, QuotientMap, Vertex};
pub use reduction::{
    embed_coloring, non_mixing_witness, reduce, Certification, ReductionInstance, WitnessPair,
};
pub use synthesis::{
    clique_schedule, compose_three_mixing, lift, relabel, synthesize_k, synthesize_k_phases,
    two_coloring_bridge, CliqueSchedule, KSynthesis,
};
