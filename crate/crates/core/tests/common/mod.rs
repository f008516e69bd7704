// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

#![allow(dead_code)]

use funcent::{Graph, Hypergraph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdős–Rényi `G(n, p)`.
pub fn gnp(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Random graph with random order in `1..=max_n` and random density.
pub fn random_graph(rng: &mut impl Rng, max_n: usize) -> Graph {
    let n = rng.gen_range(1..=max_n);
    let p = rng.gen_range(0.05..0.95);
    gnp(rng, n, p)
}

/// Random bipartite graph: edges only between the two colour classes.
pub fn random_bipartite(rng: &mut impl Rng, max_n: usize) -> Graph {
    let n = rng.gen_range(2..=max_n);
    let side: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.5)).collect();
    let p = rng.gen_range(0.1..0.9);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if side[u] != side[v] && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Random connected graph: a random spanning tree plus extra edges.
pub fn random_connected(rng: &mut impl Rng, n: usize, extra: f64) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(extra) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

pub fn random_hypergraph(rng: &mut impl Rng, max_n: usize, max_edges: usize) -> Hypergraph {
    let n = rng.gen_range(1..=max_n);
    let m = rng.gen_range(0..=max_edges);
    let edges = (0..m)
        .map(|_| {
            let mut e: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.5)).collect();
            if e.is_empty() {
                e.push(rng.gen_range(0..n));
            }
            e
        })
        .collect();
    Hypergraph::new(n, edges).unwrap()
}

/// Walks of length `k` from `i` to `j` in a hypergraph, enumerated as
/// sequences `v_0, E_1, v_1, …, E_k, v_k` with `v_{t-1} ≠ v_t` and both in
/// `E_t`.
pub fn enumerate_hyperwalks(h: &Hypergraph, k: usize, i: usize, j: usize) -> u64 {
    if k == 0 {
        return u64::from(i == j);
    }
    let mut total = 0;
    for edge in h.hyperedges() {
        if !edge.contains(&i) {
            continue;
        }
        for &next in edge {
            if next != i {
                total += enumerate_hyperwalks(h, k - 1, next, j);
            }
        }
    }
    total
}

/// `A^k` by repeated multiplication in exact integers.
pub fn integer_power(a: &[Vec<i128>], k: usize) -> Vec<Vec<i128>> {
    let n = a.len();
    let mut p: Vec<Vec<i128>> = (0..n).map(|i| (0..n).map(|j| i128::from(i == j)).collect()).collect();
    for _ in 0..k {
        p = (0..n)
            .map(|i| (0..n).map(|j| (0..n).map(|l| p[i][l] * a[l][j]).sum()).collect())
            .collect();
    }
    p
}

pub fn rel_close(a: f64, b: f64, rel: f64) -> bool {
    (a - b).abs() <= rel * a.abs().max(b.abs()).max(1.0)
}
