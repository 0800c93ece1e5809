//! Shared helpers for the integration tests: graph enumeration and a naive
//! configuration-graph oracle that shares no code with the explorer.

#![allow(dead_code)]

use recolor_core::{Coloring, Graph};

/// Every labeled graph on `n` vertices, by edge-subset enumeration.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        Graph::new(n, edges).unwrap()
    })
}

pub fn all_connected_graphs(max_n: usize) -> impl Iterator<Item = Graph> {
    (1..=max_n).flat_map(all_graphs).filter(|g| g.is_connected())
}

pub fn col(k: usize, colors: &[usize]) -> Coloring {
    Coloring::new(k, colors.to_vec()).unwrap()
}

/// All proper k-colorings, by scanning every vector in `0..k^n` with a
/// little-endian counter, then sorting.
pub fn naive_colorings(g: &Graph, k: usize) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut out = Vec::new();
    if k == 0 {
        return if n == 0 { vec![vec![]] } else { out };
    }
    let mut c = vec![0usize; n];
    loop {
        if g.edges().iter().all(|&(u, v)| c[u] != c[v]) {
            out.push(c.clone());
        }
        let mut i = 0;
        loop {
            if i == n {
                out.sort();
                return out;
            }
            c[i] += 1;
            if c[i] < k {
                break;
            }
            c[i] = 0;
            i += 1;
        }
    }
}

fn differ_in_one(a: &[usize], b: &[usize]) -> bool {
    a.iter().zip(b).filter(|(x, y)| x != y).count() == 1
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut x = x;
    while parent[x] != r {
        let next = parent[x];
        parent[x] = r;
        x = next;
    }
    r
}

/// Configuration graph by pairwise comparison plus union-find.
pub struct NaiveCensus {
    pub colorings: Vec<Vec<usize>>,
    /// Representative of each coloring's component.
    pub root: Vec<usize>,
    pub degree: Vec<usize>,
}

impl NaiveCensus {
    pub fn new(g: &Graph, k: usize) -> NaiveCensus {
        let colorings = naive_colorings(g, k);
        let m = colorings.len();
        let mut parent: Vec<usize> = (0..m).collect();
        let mut degree = vec![0; m];
        for i in 0..m {
            for j in i + 1..m {
                if differ_in_one(&colorings[i], &colorings[j]) {
                    degree[i] += 1;
                    degree[j] += 1;
                    let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let root = (0..m).map(|i| find(&mut parent, i)).collect();
        NaiveCensus {
            colorings,
            root,
            degree,
        }
    }

    pub fn num_components(&self) -> usize {
        let mut roots = self.root.clone();
        roots.sort();
        roots.dedup();
        roots.len()
    }

    pub fn num_frozen(&self) -> usize {
        self.degree.iter().filter(|&&d| d == 0).count()
    }

    pub fn is_connected(&self) -> bool {
        self.num_components() <= 1
    }

    pub fn component_size(&self, i: usize) -> usize {
        self.root.iter().filter(|&&r| r == self.root[i]).count()
    }

    pub fn index(&self, c: &[usize]) -> usize {
        self.colorings.iter().position(|x| x == c).unwrap()
    }

    /// Colorings from which no coloring on at most two colors is in the same
    /// component, in lexicographic order.
    pub fn stuck(&self) -> Vec<Vec<usize>> {
        let two = |c: &Vec<usize>| {
            let mut d = c.clone();
            d.sort();
            d.dedup();
            d.len() <= 2
        };
        let good_roots: Vec<usize> = (0..self.colorings.len())
            .filter(|&i| two(&self.colorings[i]))
            .map(|i| self.root[i])
            .collect();
        (0..self.colorings.len())
            .filter(|&i| !good_roots.contains(&self.root[i]))
            .map(|i| self.colorings[i].clone())
            .collect()
    }
}
