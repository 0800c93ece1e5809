//! Explorer and decider results against the naive oracle in `common`.

mod common;

use common::{all_graphs, col, NaiveCensus};
use recolor_core::explore::{self, ConfigSpace};
use recolor_core::{
    apply_sequence, components, enumerate_colorings, is_frozen, reachable, three_to_two, Budget, Graph,
};

fn b() -> Budget {
    Budget::default()
}

#[test]
fn census_matches_naive_oracle_on_all_small_graphs() {
    for n in 0..=5 {
        for g in all_graphs(n) {
            for k in 1..=3 {
                let naive = NaiveCensus::new(&g, k);
                let stats = components(&g, k, b()).unwrap();
                assert_eq!(stats.num_colorings as usize, naive.colorings.len(), "{g:?} k={k}");
                assert_eq!(
                    stats.num_components as usize,
                    naive.num_components(),
                    "{g:?} k={k}"
                );
                assert_eq!(stats.num_frozen as usize, naive.num_frozen(), "{g:?} k={k}");
                assert_eq!(stats.is_connected, naive.is_connected(), "{g:?} k={k}");
                let largest = (0..naive.colorings.len())
                    .map(|i| naive.component_size(i))
                    .max()
                    .unwrap_or(0);
                assert_eq!(stats.largest_component as usize, largest);
            }
        }
    }
}

#[test]
fn census_matches_naive_oracle_for_four_colors() {
    for g in all_graphs(4) {
        let naive = NaiveCensus::new(&g, 4);
        let stats = components(&g, 4, b()).unwrap();
        assert_eq!(stats.num_colorings as usize, naive.colorings.len());
        assert_eq!(stats.num_components as usize, naive.num_components());
        assert_eq!(stats.num_frozen as usize, naive.num_frozen());
    }
}

#[test]
fn enumeration_matches_chromatic_polynomials() {
    let pow = |k: i64, e: usize| k.pow(e as u32);
    for k in 1..=5i64 {
        for n in 3..=8 {
            let sign = if n % 2 == 0 { 1 } else { -1 };
            let cycle = pow(k - 1, n) + sign * (k - 1);
            assert_eq!(
                enumerate_colorings(&Graph::cycle(n), k as usize, b()).unwrap() as i64,
                cycle
            );
        }
        for n in 1..=8 {
            let tree = k * pow(k - 1, n - 1);
            assert_eq!(
                enumerate_colorings(&Graph::path(n), k as usize, b()).unwrap() as i64,
                tree
            );
            let star = Graph::new(n, (1..n).map(|v| (0, v))).unwrap();
            assert_eq!(enumerate_colorings(&star, k as usize, b()).unwrap() as i64, tree);
        }
        for n in 0..=6 {
            let falling: i64 = (0..n as i64).map(|i| (k - i).max(0)).product();
            assert_eq!(
                enumerate_colorings(&Graph::complete(n), k as usize, b()).unwrap() as i64,
                falling
            );
        }
    }
}

#[test]
fn golden_values_from_the_oracle() {
    let c6 = NaiveCensus::new(&Graph::cycle(6), 3);
    assert_eq!(
        (c6.colorings.len(), c6.num_frozen(), c6.is_connected()),
        (66, 6, false)
    );
    let w6 = NaiveCensus::new(&Graph::cycle(6).join_clique(1), 4);
    assert_eq!((w6.colorings.len(), w6.is_connected()), (264, false));
    let c4 = NaiveCensus::new(&Graph::cycle(4), 3);
    assert!(c4.is_connected());
    assert_eq!(c4.num_frozen(), 0);
    let j = NaiveCensus::new(&Graph::cycle(4).join_clique(1), 4);
    assert!(j.is_connected());
}

#[test]
fn three_to_two_witness_is_the_least_stuck_coloring() {
    for n in 1..=5 {
        for g in all_graphs(n) {
            let naive = NaiveCensus::new(&g, 3);
            let stuck = naive.stuck();
            let verdict = three_to_two(&g, b()).unwrap();
            assert_eq!(verdict.answer, stuck.is_empty(), "{g:?}");
            if let Some(w) = verdict.witness() {
                assert_eq!(w.colors(), stuck[0].as_slice());
                assert!(!explore::reaches_two_coloring(&g, w, b()).unwrap());
            }
        }
    }
    let w = three_to_two(&Graph::cycle(6), b()).unwrap();
    assert_eq!(
        w.witness().unwrap().colors(),
        NaiveCensus::new(&Graph::cycle(6), 3).stuck()[0].as_slice()
    );
}

#[test]
fn frozen_colorings_are_singleton_components() {
    for g in all_graphs(5) {
        let space = ConfigSpace::build(&g, 3, b()).unwrap();
        let census = space.census();
        for i in 0..space.len() {
            let frozen = is_frozen(&g, &space.coloring(i)).unwrap();
            assert_eq!(frozen, census.frozen[i]);
            assert_eq!(frozen, census.sizes[census.component[i] as usize] == 1);
        }
    }
}

/// Distance by naive BFS over the oracle's coloring list.
fn naive_distance(naive: &NaiveCensus, from: &[usize], to: &[usize]) -> Option<usize> {
    let m = naive.colorings.len();
    let mut dist = vec![usize::MAX; m];
    let start = naive.index(from);
    dist[start] = 0;
    let mut frontier = vec![start];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &i in &frontier {
            for j in 0..m {
                let diff = naive.colorings[i]
                    .iter()
                    .zip(&naive.colorings[j])
                    .filter(|(a, b)| a != b)
                    .count();
                if diff == 1 && dist[j] == usize::MAX {
                    dist[j] = dist[i] + 1;
                    next.push(j);
                }
            }
        }
        frontier = next;
    }
    let d = dist[naive.index(to)];
    (d != usize::MAX).then_some(d)
}

#[test]
fn reachable_returns_shortest_sequences() {
    let c4 = Graph::cycle(4);
    let naive = NaiveCensus::new(&c4, 3);
    let from = [0, 1, 0, 1];
    let to = [1, 0, 1, 0];
    let s = reachable(&c4, 3, &col(3, &from), &col(3, &to), b())
        .unwrap()
        .unwrap();
    assert_eq!(Some(s.len()), naive_distance(&naive, &from, &to));
    assert!(s.len() >= 4 && s.len().is_multiple_of(2));

    for g in [Graph::path(4), Graph::cycle(5), Graph::cycle(6)] {
        let naive = NaiveCensus::new(&g, 3);
        for a in naive.colorings.iter().step_by(5) {
            for z in naive.colorings.iter().step_by(7) {
                let s = reachable(&g, 3, &col(3, a), &col(3, z), b()).unwrap();
                assert_eq!(s.as_ref().map(|s| s.len()), naive_distance(&naive, a, z));
                if let Some(s) = s {
                    assert_eq!(apply_sequence(&g, &col(3, a), &s).unwrap().colors(), z.as_slice());
                }
            }
        }
    }
}
