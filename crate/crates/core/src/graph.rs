//! Simple undirected graphs on dense vertex indices `0..n`.
//!
//! Graphs are immutable once built. Edges are stored normalized (`u < v`,
//! sorted, deduplicated) next to sorted adjacency lists, so two graphs built
//! from the same edge set compare equal regardless of input order.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    adj: Vec<Vec<Vertex>>,
}

impl Graph {
    /// Builds a graph on `n` vertices. Duplicate edges (in either orientation)
    /// are merged; loops and out-of-range endpoints are rejected.
    pub fn new<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut normalized = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange { vertex: u.max(v), n });
            }
            if u == v {
                return Err(Error::InvalidEdge { u, v });
            }
            normalized.push((u.min(v), u.max(v)));
        }
        normalized.sort_unstable();
        normalized.dedup();
        Ok(Graph::from_normalized(n, normalized))
    }

    fn from_normalized(n: usize, edges: Vec<(Vertex, Vertex)>) -> Graph {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    pub fn empty(n: usize) -> Graph {
        Graph::from_normalized(n, Vec::new())
    }

    pub fn complete(n: usize) -> Graph {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Graph::from_normalized(n, edges)
    }

    /// Path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Graph {
        let edges = (1..n).map(|v| (v - 1, v)).collect();
        Graph::from_normalized(n, edges)
    }

    /// Cycle `0 - 1 - ... - (n-1) - 0`. Requires `n >= 3`.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        Graph::new(n, (0..n).map(|v| (v, (v + 1) % n))).expect("cycle edges are valid")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Component index of every vertex; components are numbered in order of
    /// their lowest vertex.
    pub fn component_labels(&self) -> (Vec<usize>, usize) {
        let mut label = vec![usize::MAX; self.n];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for root in 0..self.n {
            if label[root] != usize::MAX {
                continue;
            }
            label[root] = count;
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if label[w] == usize::MAX {
                        label[w] = count;
                        queue.push_back(w);
                    }
                }
            }
            count += 1;
        }
        (label, count)
    }

    pub fn is_connected(&self) -> bool {
        self.component_labels().1 <= 1
    }

    /// Two-coloring of the graph in canonical orientation, or `None` when the
    /// graph has an odd cycle.
    pub fn bipartition(&self) -> Option<Bipartition> {
        let mut on_a: Vec<Option<bool>> = vec![None; self.n];
        let mut component = vec![0; self.n];
        let mut count = 0;
        let mut queue = VecDeque::new();
        // Scanning roots in index order makes each root its component's lowest vertex.
        for root in 0..self.n {
            if on_a[root].is_some() {
                continue;
            }
            on_a[root] = Some(true);
            component[root] = count;
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                let side = on_a[u].unwrap();
                for &w in &self.adj[u] {
                    match on_a[w] {
                        None => {
                            on_a[w] = Some(!side);
                            component[w] = count;
                            queue.push_back(w);
                        }
                        Some(s) if s == side => return None,
                        Some(_) => {}
                    }
                }
            }
            count += 1;
        }
        Some(Bipartition {
            on_a: on_a.into_iter().map(|s| s.unwrap()).collect(),
            component,
            num_components: count,
        })
    }

    /// Adds a clique on `m` new vertices `n..n+m`, each joined to every
    /// original vertex.
    pub fn join_clique(&self, m: usize) -> Graph {
        let n = self.n;
        let mut edges = self.edges.clone();
        edges.reserve(m * n + m * m.saturating_sub(1) / 2);
        for x in n..n + m {
            edges.extend((0..n).map(|b| (b, x)));
            edges.extend((x + 1..n + m).map(|y| (x, y)));
        }
        edges.sort_unstable();
        Graph::from_normalized(n + m, edges)
    }

    /// Identifies each class of `q` into a single vertex. Quotient vertex `i`
    /// stands for `q.classes()[i]`.
    pub fn quotient(&self, q: &QuotientMap) -> Result<Graph> {
        if q.n() != self.n {
            return Err(Error::InvalidPartition);
        }
        let mut edges = Vec::new();
        for &(u, v) in &self.edges {
            let (cu, cv) = (q.class_of(u), q.class_of(v));
            if cu == cv {
                return Err(Error::NotIndependent { class: cu });
            }
            edges.push((cu.min(cv), cu.max(cv)));
        }
        edges.sort_unstable();
        edges.dedup();
        Ok(Graph::from_normalized(q.len(), edges))
    }

    /// Subgraph induced on the vertices `0..n_prefix`.
    pub fn prefix(&self, n_prefix: usize) -> Graph {
        let edges = self
            .edges
            .iter()
            .copied()
            .filter(|&(_, v)| v < n_prefix)
            .collect();
        Graph::from_normalized(n_prefix.min(self.n), edges)
    }
}

/// A witness that a graph is bipartite: side A and side B of every vertex,
/// plus the connected component it lives in. Within each component the sides
/// may be swapped independently and still form a bipartition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    on_a: Vec<bool>,
    component: Vec<usize>,
    num_components: usize,
}

impl Bipartition {
    /// Builds a bipartition with `side_a` on side A and every other vertex on
    /// side B, checking that every edge of `g` crosses the two sides.
    pub fn from_side_a(g: &Graph, side_a: &[Vertex]) -> Result<Bipartition> {
        let mut on_a = vec![false; g.n()];
        for &v in side_a {
            if v >= g.n() {
                return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
            }
            on_a[v] = true;
        }
        let (component, num_components) = g.component_labels();
        let bip = Bipartition {
            on_a,
            component,
            num_components,
        };
        if !bip.separates(g) {
            return Err(Error::NotBipartition);
        }
        Ok(bip)
    }

    pub fn n(&self) -> usize {
        self.on_a.len()
    }

    #[inline]
    pub fn is_on_a(&self, v: Vertex) -> bool {
        self.on_a[v]
    }

    pub fn side_a(&self) -> Vec<Vertex> {
        (0..self.n()).filter(|&v| self.on_a[v]).collect()
    }

    pub fn side_b(&self) -> Vec<Vertex> {
        (0..self.n()).filter(|&v| !self.on_a[v]).collect()
    }

    pub fn component(&self, v: Vertex) -> usize {
        self.component[v]
    }

    pub fn num_components(&self) -> usize {
        self.num_components
    }

    /// True when every edge of `g` has one endpoint on each side.
    pub fn separates(&self, g: &Graph) -> bool {
        g.n() == self.n() && g.edges().iter().all(|&(u, v)| self.on_a[u] != self.on_a[v])
    }
}

/// Partition of `0..n` into classes; class `i` becomes quotient vertex `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientMap {
    classes: Vec<Vec<Vertex>>,
    class_of: Vec<usize>,
}

impl QuotientMap {
    /// Classes must be disjoint and cover `0..n`. Members are stored sorted.
    pub fn new(n: usize, classes: Vec<Vec<Vertex>>) -> Result<QuotientMap> {
        let mut class_of = vec![usize::MAX; n];
        let mut classes = classes;
        for (i, class) in classes.iter_mut().enumerate() {
            class.sort_unstable();
            for &v in class.iter() {
                if v >= n || class_of[v] != usize::MAX {
                    return Err(Error::InvalidPartition);
                }
                class_of[v] = i;
            }
        }
        if class_of.contains(&usize::MAX) {
            return Err(Error::InvalidPartition);
        }
        Ok(QuotientMap { classes, class_of })
    }

    pub fn identity(n: usize) -> QuotientMap {
        QuotientMap {
            classes: (0..n).map(|v| vec![v]).collect(),
            class_of: (0..n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.class_of.len()
    }

    /// Number of classes.
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[Vec<Vertex>] {
        &self.classes
    }

    pub fn class(&self, i: usize) -> &[Vertex] {
        &self.classes[i]
    }

    #[inline]
    pub fn class_of(&self, v: Vertex) -> usize {
        self.class_of[v]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_force_bipartite(g: &Graph) -> bool {
        (0u32..1 << g.n()).any(|mask| g.edges().iter().all(|&(u, v)| (mask >> u & 1) != (mask >> v & 1)))
    }

    #[test]
    fn build_normalizes() {
        let g = Graph::new(3, []).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edge_count(), 0);

        let c6 = Graph::new(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
        assert_eq!(c6.edge_count(), 6);
        assert_eq!(c6, Graph::cycle(6));

        let dup = Graph::new(3, [(0, 1), (1, 0), (0, 1), (2, 1)]).unwrap();
        assert_eq!(dup.edges(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn build_rejects_bad_edges() {
        assert_eq!(Graph::new(2, [(0, 0)]), Err(Error::InvalidEdge { u: 0, v: 0 }));
        assert_eq!(
            Graph::new(2, [(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        );
    }

    #[test]
    fn bipartition_examples() {
        let c4 = Graph::cycle(4);
        let bip = c4.bipartition().unwrap();
        assert_eq!(bip.side_a(), vec![0, 2]);
        assert_eq!(bip.side_b(), vec![1, 3]);

        assert!(Graph::cycle(5).bipartition().is_none());

        let two_edges = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        let bip = two_edges.bipartition().unwrap();
        assert_eq!(bip.side_a(), vec![0, 2]);
        assert_eq!(bip.side_b(), vec![1, 3]);
        assert_eq!(bip.num_components(), 2);
        assert_eq!(bip.component(3), 1);

        // Lowest vertex of each component is on side A even when it is
        // discovered late in the edge list.
        let g = Graph::new(5, [(4, 3), (3, 1)]).unwrap();
        let bip = g.bipartition().unwrap();
        assert_eq!(bip.side_a(), vec![0, 1, 2, 4]);
        assert_eq!(bip.side_b(), vec![3]);
    }

    #[test]
    fn bipartition_matches_brute_force_on_all_small_graphs() {
        for n in 0..=6usize {
            let pairs: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            for mask in 0u32..1 << pairs.len() {
                let edges = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &e)| e);
                let g = Graph::new(n, edges).unwrap();
                let bip = g.bipartition();
                assert_eq!(bip.is_some(), brute_force_bipartite(&g), "{g:?}");
                if let Some(bip) = bip {
                    assert!(bip.separates(&g));
                }
            }
        }
    }

    #[test]
    fn join_clique_examples() {
        let w6 = Graph::cycle(6).join_clique(1);
        assert_eq!((w6.n(), w6.edge_count()), (7, 12));

        let b = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(b.join_clique(0), b);

        let g = Graph::cycle(4).join_clique(3);
        assert_eq!((g.n(), g.edge_count()), (7, 19));
        assert!(g.has_edge(4, 5) && g.has_edge(5, 6) && g.has_edge(4, 6));
        assert_eq!(g.prefix(4), Graph::cycle(4));
    }

    #[test]
    fn join_clique_edge_count_formula() {
        for n in 0..6 {
            for m in 0..5usize {
                let b = Graph::path(n);
                let e = b.edge_count() + m * m.saturating_sub(1) / 2 + m * n;
                assert_eq!(b.join_clique(m).edge_count(), e);
            }
        }
    }

    #[test]
    fn quotient_examples() {
        let w6 = Graph::cycle(6).join_clique(1);
        let q = QuotientMap::new(7, vec![vec![0, 2, 4], vec![1, 3, 5], vec![6]]).unwrap();
        assert_eq!(w6.quotient(&q).unwrap(), Graph::complete(3));

        assert_eq!(w6.quotient(&QuotientMap::identity(7)).unwrap(), w6);

        let c4 = Graph::cycle(4);
        let q = QuotientMap::new(4, vec![vec![0, 1], vec![2], vec![3]]).unwrap();
        assert_eq!(c4.quotient(&q), Err(Error::NotIndependent { class: 0 }));
    }

    #[test]
    fn quotient_map_rejects_overlap_and_gaps() {
        assert_eq!(
            QuotientMap::new(3, vec![vec![0, 1], vec![1, 2]]),
            Err(Error::InvalidPartition)
        );
        assert_eq!(
            QuotientMap::new(3, vec![vec![0, 1]]),
            Err(Error::InvalidPartition)
        );
        assert_eq!(
            QuotientMap::new(2, vec![vec![0, 5]]),
            Err(Error::InvalidPartition)
        );
    }

    #[test]
    fn explicit_bipartition_is_validated() {
        let c4 = Graph::cycle(4);
        assert!(Bipartition::from_side_a(&c4, &[1, 3]).is_ok());
        assert_eq!(Bipartition::from_side_a(&c4, &[0, 1]), Err(Error::NotBipartition));
    }
}
