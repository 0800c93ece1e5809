//! Reduction instances: a bipartite graph `B` joined with a clique `X` of
//! `k - 3` vertices complete to `B`.
//!
//! In every proper k-coloring of such an instance the clique takes `k - 3`
//! distinct colors and `B` lives in the three remaining ones. If some
//! 3-coloring of `B` cannot reach a 2-coloring then no vertex of `X` can ever
//! move from it, which yields a pair of colorings in different components.

use alloc::vec::Vec;
use core::ops::Range;

use crate::coloring::{self, Color, Coloring};
use crate::error::{Error, Result};
use crate::explore::{self, Budget};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionInstance {
    g: Graph,
    b: Graph,
    k: usize,
}

impl ReductionInstance {
    /// The joined graph.
    pub fn graph(&self) -> &Graph {
        &self.g
    }

    /// The source bipartite graph.
    pub fn source(&self) -> &Graph {
        &self.b
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn b_range(&self) -> Range<usize> {
        0..self.b.n()
    }

    pub fn x_range(&self) -> Range<usize> {
        self.b.n()..self.g.n()
    }

    /// Colors `3..k` in index order: the canonical palette of `X`.
    pub fn canonical_x_colors(&self) -> Vec<Color> {
        (3..self.k).collect()
    }

    /// Side A of the canonical bipartition colored 0, side B colored 1.
    pub fn canonical_two_coloring(&self) -> Coloring {
        let bip = self.b.bipartition().expect("source graph is bipartite");
        let colors = (0..self.b.n()).map(|v| usize::from(!bip.is_on_a(v))).collect();
        Coloring::new_unchecked(3, colors)
    }
}

pub fn reduce(b: &Graph, k: usize) -> Result<ReductionInstance> {
    if k < 4 {
        return Err(Error::PaletteTooSmall { needed: 4, k });
    }
    if b.bipartition().is_none() {
        return Err(Error::NotBipartite);
    }
    Ok(ReductionInstance {
        g: b.join_clique(k - 3),
        b: b.clone(),
        k,
    })
}

/// Lifts a 3-coloring of `B` to a k-coloring of the instance: `B` is colored
/// through `palette_map` (color `i` becomes `palette_map[i]`), and the
/// `j`-th vertex of `X` gets `x_colors[j]`.
pub fn embed_coloring(
    inst: &ReductionInstance,
    c_b: &Coloring,
    palette_map: [Color; 3],
    x_colors: &[Color],
) -> Result<Coloring> {
    let k = inst.k;
    if c_b.k() != 3 {
        return Err(Error::PaletteMismatch {
            expected: 3,
            found: c_b.k(),
        });
    }
    if !coloring::is_proper(&inst.b, c_b)? {
        return Err(Error::NotProper);
    }
    if x_colors.len() != k - 3 {
        return Err(Error::ShapeError {
            expected: k - 3,
            found: x_colors.len(),
        });
    }
    let mut used = alloc::vec![false; k];
    for &c in palette_map.iter().chain(x_colors) {
        if c >= k {
            return Err(Error::PaletteTooSmall { needed: c + 1, k });
        }
        if core::mem::replace(&mut used[c], true) {
            return Err(Error::PaletteClash { color: c });
        }
    }
    let colors = c_b
        .colors()
        .iter()
        .map(|&c| palette_map[c])
        .chain(x_colors.iter().copied())
        .collect();
    Ok(Coloring::new_unchecked(k, colors))
}

/// How the disconnection of a witness pair was established.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Certification {
    /// Breadth-first search over the instance's configuration graph found no
    /// sequence between the pair.
    Exhaustive,
    /// The instance is too large to search. `X` cannot move while `B` is
    /// 3-colored, so `B` stays inside three colors and never reaches the
    /// 2-coloring of the second coloring; only the `B`-side stuckness was
    /// machine-checked.
    FrozenClique,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessPair {
    pub from: Coloring,
    pub to: Coloring,
    pub certification: Certification,
}

/// Turns a stuck 3-coloring of `B` into two k-colorings of the instance
/// that lie in different components of its configuration graph.
pub fn non_mixing_witness(inst: &ReductionInstance, stuck: &Coloring, budget: Budget) -> Result<WitnessPair> {
    if explore::reaches_two_coloring(&inst.b, stuck, budget)? {
        return Err(Error::BadWitness);
    }
    let x_colors = inst.canonical_x_colors();
    let from = embed_coloring(inst, stuck, [0, 1, 2], &x_colors)?;
    let to = embed_coloring(inst, &inst.canonical_two_coloring(), [0, 1, 2], &x_colors)?;
    let certification = if budget.allows(inst.g.n(), inst.k) {
        if explore::reachable(&inst.g, inst.k, &from, &to, budget)?.is_some() {
            return Err(Error::BadWitness);
        }
        Certification::Exhaustive
    } else {
        Certification::FrozenClique
    };
    Ok(WitnessPair {
        from,
        to,
        certification,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn col(k: usize, colors: &[usize]) -> Coloring {
        Coloring::new(k, colors.to_vec()).unwrap()
    }

    #[test]
    fn reduce_examples() {
        let inst = reduce(&Graph::cycle(6), 4).unwrap();
        assert_eq!(inst.graph(), &Graph::cycle(6).join_clique(1));
        assert_eq!(inst.x_range(), 6..7);

        let inst = reduce(&Graph::cycle(4), 6).unwrap();
        assert_eq!(inst.graph().n(), 7);
        assert_eq!(inst.x_range(), 4..7);
        assert_eq!(inst.graph().edge_count(), 19);
        assert_eq!(inst.graph().prefix(4), Graph::cycle(4));

        assert_eq!(reduce(&Graph::cycle(5), 4), Err(Error::NotBipartite));
        assert_eq!(
            reduce(&Graph::cycle(4), 3),
            Err(Error::PaletteTooSmall { needed: 4, k: 3 })
        );
    }

    #[test]
    fn embedding() {
        let inst = reduce(&Graph::cycle(6), 4).unwrap();
        let frozen = col(3, &[0, 1, 2, 0, 1, 2]);
        assert_eq!(
            embed_coloring(&inst, &frozen, [0, 1, 2], &[3]).unwrap(),
            col(4, &[0, 1, 2, 0, 1, 2, 3])
        );
        let two = col(3, &[0, 1, 0, 1, 0, 1]);
        let e = embed_coloring(&inst, &two, [0, 1, 2], &[3]).unwrap();
        assert_eq!(e, col(4, &[0, 1, 0, 1, 0, 1, 3]));
        assert!(coloring::is_proper(inst.graph(), &e).unwrap());

        assert_eq!(
            embed_coloring(&inst, &frozen, [0, 1, 2], &[2]),
            Err(Error::PaletteClash { color: 2 })
        );
        assert_eq!(
            embed_coloring(&inst, &col(3, &[0, 0, 1, 2, 0, 1]), [0, 1, 2], &[3]),
            Err(Error::NotProper)
        );
        // Permuted palette.
        assert_eq!(
            embed_coloring(&inst, &two, [3, 1, 0], &[2]).unwrap(),
            col(4, &[3, 1, 3, 1, 3, 1, 2])
        );
    }

    #[test]
    fn witness_for_c6() {
        let b = Budget::default();
        let inst = reduce(&Graph::cycle(6), 4).unwrap();
        let stuck = col(3, &[0, 1, 2, 0, 1, 2]);
        let pair = non_mixing_witness(&inst, &stuck, b).unwrap();
        assert_eq!(pair.from, col(4, &[0, 1, 2, 0, 1, 2, 3]));
        assert_eq!(pair.to, col(4, &[0, 1, 0, 1, 0, 1, 3]));
        assert_eq!(pair.certification, Certification::Exhaustive);

        let inst5 = reduce(&Graph::cycle(6), 5).unwrap();
        let pair = non_mixing_witness(&inst5, &stuck, b).unwrap();
        assert_eq!(pair.from, col(5, &[0, 1, 2, 0, 1, 2, 3, 4]));
        assert_eq!(pair.to, col(5, &[0, 1, 0, 1, 0, 1, 3, 4]));
        assert_eq!(
            explore::reachable(inst5.graph(), 5, &pair.from, &pair.to, b).unwrap(),
            None
        );

        assert_eq!(
            non_mixing_witness(&inst, &col(3, &[0, 1, 0, 1, 0, 1]), b),
            Err(Error::BadWitness)
        );
    }

    #[test]
    fn large_instances_fall_back_to_structural_certificate() {
        let inst = reduce(&Graph::cycle(6), 4).unwrap();
        let stuck = col(3, &[0, 1, 2, 0, 1, 2]);
        // 3^6 fits, 4^7 does not.
        let pair = non_mixing_witness(&inst, &stuck, Budget::new(1000)).unwrap();
        assert_eq!(pair.certification, Certification::FrozenClique);
    }

    #[test]
    fn clique_colors_stay_disjoint_from_b() {
        let inst = reduce(&Graph::path(3), 5).unwrap();
        explore::for_each_coloring(inst.graph(), 5, Budget::default(), |c| {
            let x: Vec<_> = c[inst.x_range()].to_vec();
            assert_ne!(x[0], x[1]);
            assert!(c[inst.b_range()].iter().all(|b| !x.contains(b)));
        })
        .unwrap();
    }
}
