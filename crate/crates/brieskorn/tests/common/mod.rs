//! Helpers shared by the integration suites: small-graph enumeration, a
//! deterministic generator, and an order-independent reference walker for
//! the full-path algorithm.

#![allow(dead_code)]

use std::collections::{HashMap, HashSet};

use num_integer::Integer;

use brieskorn::contact::CharVector;
use brieskorn::correction::{full_path, is_initial, is_terminal, PathStatus};
use brieskorn::exact::FramingChain;
use brieskorn::plumbing::{standard_graph, PlumbingGraph};
use brieskorn::seifert::{BrieskornIndex, SeifertData};

pub fn star(center: i64, leg_framings: &[Vec<i64>]) -> PlumbingGraph {
    let legs = leg_framings
        .iter()
        .map(|l| FramingChain::new(l.clone()).expect("legs framed <= -2"))
        .collect();
    PlumbingGraph::star(center, legs)
}

pub fn brieskorn_graph(exponents: &[u64]) -> PlumbingGraph {
    let index = BrieskornIndex::new(exponents).unwrap();
    standard_graph(&SeifertData::from_brieskorn(&index).unwrap()).unwrap()
}

/// All partitions of `total` into weakly decreasing positive parts.
pub fn partitions(total: usize, max_part: usize) -> Vec<Vec<usize>> {
    if total == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (1..=total.min(max_part)).rev() {
        for rest in partitions(total - first, first) {
            let mut p = vec![first];
            p.extend(rest);
            out.push(p);
        }
    }
    out
}

/// Star graph on `len(framings)` vertices with the framing assignment laid
/// over a leg-length partition: framing 0 is the center, the rest fill the
/// legs in order.
pub fn star_with_framings(leg_lengths: &[usize], framings: &[i64]) -> PlumbingGraph {
    let mut legs = Vec::with_capacity(leg_lengths.len());
    let mut next = 1;
    for &len in leg_lengths {
        legs.push(framings[next..next + len].to_vec());
        next += len;
    }
    star(framings[0], &legs)
}

/// Visits every framing assignment over `{-4, -3, -2}^n`.
pub fn for_each_framing(n: usize, mut f: impl FnMut(&[i64])) {
    let mut digits = vec![0u8; n];
    loop {
        let framings: Vec<i64> = digits.iter().map(|&d| -2 - d as i64).collect();
        f(&framings);
        let mut i = 0;
        loop {
            if i == n {
                return;
            }
            digits[i] += 1;
            if digits[i] < 3 {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}

/// Visits every vector of the initial window `m_v + 2 <= K(v) <= -m_v`.
pub fn for_each_initial(graph: &PlumbingGraph, mut f: impl FnMut(&[i64])) {
    let n = graph.vertex_count();
    let widths: Vec<i64> = (0..n).map(|v| -graph.framing(v)).collect();
    let mut digits = vec![0i64; n];
    let mut k: Vec<i64> = (0..n).map(|v| graph.framing(v) + 2).collect();
    loop {
        f(&k);
        let mut i = 0;
        loop {
            if i == n {
                return;
            }
            digits[i] += 1;
            k[i] += 2;
            if digits[i] < widths[i] {
                break;
            }
            digits[i] = 0;
            k[i] = graph.framing(i) + 2;
            i += 1;
        }
    }
}

/// Splitmix-style deterministic generator for the seeded sweeps.
pub struct Rng(pub u64);

impl Rng {
    pub fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, bound: u64) -> u64 {
        self.next() % bound
    }
}

/// Follows every admissible reflection (not just the lowest-index one) and
/// checks that all choices reach the same outcome; memoized across the
/// vectors reachable inside one graph. Returns true when the path ends
/// correctly.
pub fn branching_outcome(
    graph: &PlumbingGraph,
    k: Vec<i64>,
    memo: &mut HashMap<Vec<i64>, bool>,
    in_progress: &mut HashSet<Vec<i64>>,
) -> bool {
    if let Some(&done) = memo.get(&k) {
        return done;
    }
    assert!(
        in_progress.insert(k.clone()),
        "reflection sequence revisited a vector: the walk would not terminate"
    );
    let n = graph.vertex_count();
    let overshoot = (0..n).any(|v| k[v] > -graph.framing(v));
    let result = if overshoot {
        false
    } else {
        let movable: Vec<usize> = (0..n).filter(|&v| k[v] == -graph.framing(v)).collect();
        if movable.is_empty() {
            // every coordinate sits in [m, -m-2]: the path ends correctly
            assert!(is_terminal(graph, &CharVector::new(k.clone())));
            true
        } else {
            let mut outcomes = movable.into_iter().map(|v| {
                let mut next = k.clone();
                next[v] += 2 * graph.framing(v);
                for &w in graph.neighbors(v) {
                    next[w] += 2;
                }
                branching_outcome(graph, next, memo, in_progress)
            });
            let first = outcomes.next().expect("at least one movable vertex");
            for other in outcomes {
                assert_eq!(first, other, "outcome depended on the reflection choice");
            }
            first
        }
    };
    in_progress.remove(&k);
    memo.insert(k, result);
    result
}

/// Runs the branching walker against the deterministic one on every initial
/// vector of the graph.
pub fn assert_confluent_on_all_initial_vectors(graph: &PlumbingGraph) {
    let mut memo = HashMap::new();
    let mut in_progress = HashSet::new();
    for_each_initial(graph, |k| {
        let vector = CharVector::new(k.to_vec());
        assert!(is_initial(graph, &vector));
        let branching = branching_outcome(graph, k.to_vec(), &mut memo, &mut in_progress);
        let deterministic = full_path(graph, &vector).unwrap();
        assert_eq!(
            branching,
            deterministic.status == PathStatus::EndsCorrectly,
            "deterministic walk disagrees with the branching walk"
        );
    });
}

pub fn coprime(x: u64, y: u64) -> bool {
    x.gcd(&y) == 1
}

/// 1/a + 1/b + 1/c + 1/d = 1 + 1/(abcd), cleared of denominators.
pub fn unit_condition(a: u64, b: u64, c: u64, d: u64) -> bool {
    let [a, b, c, d] = [a as u128, b as u128, c as u128, d as u128];
    b * c * d + a * c * d + a * b * d + a * b * c == a * b * c * d + 1
}

/// Expands a `(file leg order) -> (graph vertex)` map: published coordinates
/// list the center first and then the legs in the printed figure's order,
/// which differs from construction order by the recorded permutation.
pub fn figure_ordering(graph: &PlumbingGraph, leg_order: [usize; 3]) -> Vec<usize> {
    let mut ordering = vec![0];
    for leg in leg_order {
        ordering.extend(graph.legs()[leg].iter().copied());
    }
    ordering
}
