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

//! Property tests for the structural and numerical invariants.

mod common;

use funcent::io::{read_tsv_rows, Analysis, InputKind, MeasureSpec};
use funcent::{
    bipartivity, eigendecompose, functional_centrality, node_bipartivity, rank_nodes, Graph, Hypergraph,
    SymmetricMatrix, WalkTable, Weight,
};
use proptest::prelude::*;

use common::integer_power;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            let edges: Vec<_> = pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e).collect();
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn bipartite_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        (
            proptest::collection::vec(any::<bool>(), n),
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2),
        )
            .prop_map(move |(side, bits)| {
                let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
                let edges: Vec<_> = pairs
                    .zip(bits)
                    .filter(|((u, v), b)| *b && side[*u] != side[*v])
                    .map(|(e, _)| e)
                    .collect();
                Graph::from_edges(n, edges).unwrap()
            })
    })
}

fn hypergraph_strategy(max_n: usize, max_edges: usize) -> impl Strategy<Value = Hypergraph> {
    (1..=max_n).prop_flat_map(move |n| {
        proptest::collection::vec(
            proptest::sample::subsequence((0..n).collect::<Vec<_>>(), 1..=n),
            0..=max_edges,
        )
        .prop_map(move |edges| Hypergraph::new(n, edges).unwrap())
    })
}

fn adjacency_rows(g: &Graph) -> Vec<Vec<i128>> {
    let a = g.adjacency_matrix::<i128>();
    (0..a.dim()).map(|i| a.row(i).to_vec()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn adjacency_is_symmetric_with_zero_diagonal(g in graph_strategy(12)) {
        let a = g.adjacency_matrix::<u8>();
        for i in 0..g.order() {
            prop_assert_eq!(*a.get(i, i), 0);
            for j in 0..g.order() {
                prop_assert_eq!(a.get(i, j), a.get(j, i));
                prop_assert_eq!(*a.get(i, j) == 1, g.has_edge(i, j));
            }
        }
    }

    #[test]
    fn hypergraph_adjacency_is_incidence_product(h in hypergraph_strategy(5, 4)) {
        let e = h.incidence_matrix();
        let a = h.adjacency_matrix::<u32>();
        for i in 0..h.order() {
            for j in 0..h.order() {
                let eet: u32 = (0..h.hyperedges().len()).map(|k| e[i][k] * e[j][k]).sum();
                prop_assert_eq!(*a.get(i, j), if i == j { 0 } else { eet });
            }
        }
    }

    #[test]
    fn pair_hypergraph_is_multigraph(n in 2usize..8, raw in proptest::collection::vec((0usize..8, 0usize..8), 0..20)) {
        let pairs: Vec<(usize, usize)> = raw.into_iter().map(|(u, v)| (u % n, v % n)).filter(|(u, v)| u != v).collect();
        let h = Hypergraph::new(n, pairs.iter().map(|&(u, v)| vec![u, v]).collect()).unwrap();
        let mut multigraph = SymmetricMatrix::<u32>::zeros(n);
        for &(u, v) in &pairs {
            let next = multigraph.get(u, v) + 1;
            multigraph.set(u, v, next);
        }
        prop_assert_eq!(h.adjacency_matrix::<u32>(), multigraph);
    }

    #[test]
    fn trace_and_frobenius_identities(g in graph_strategy(14)) {
        let a = g.adjacency_matrix::<f64>();
        let d = eigendecompose(&a).unwrap();
        let sum: f64 = d.eigenvalues().iter().sum();
        let squares: f64 = d.eigenvalues().iter().map(|x| x * x).sum();
        prop_assert!(sum.abs() <= 1e-9);
        prop_assert!((squares - 2.0 * g.size() as f64).abs() <= 1e-9);
        prop_assert!(d.orthogonality_residual() <= 1e-10);
        prop_assert!(d.reconstruction_residual(&a) <= 1e-10);
    }

    #[test]
    fn perron_vector_is_positive(seed in any::<u64>(), n in 2usize..16) {
        let mut r = common::rng(seed);
        let g = common::random_connected(&mut r, n, 0.2);
        let d = eigendecompose(&g.adjacency_matrix::<f64>()).unwrap();
        let ev = d.eigenvalues();
        prop_assert!(ev[0] - ev[1] > 1e-9, "simple top eigenvalue");
        prop_assert!(d.column(0).iter().all(|&x| x > 0.0));
    }

    #[test]
    fn walk_counts_are_symmetric_and_bounded(g in graph_strategy(9)) {
        let t = WalkTable::<u128>::for_graph(&g, 10).unwrap();
        let lambda = eigendecompose(&g.adjacency_matrix::<f64>()).unwrap().spectral_radius();
        let a = adjacency_rows(&g);
        for k in 0..=10 {
            let power = integer_power(&a, k);
            for (i, row) in power.iter().enumerate() {
                let mu = *t.local_moment(k, i).unwrap() as f64;
                prop_assert!(mu <= lambda.powi(k as i32) * (1.0 + 1e-9) + 1e-6);
                for (j, &exact) in row.iter().enumerate() {
                    prop_assert_eq!(t.walk_count(k, i, j).unwrap(), t.walk_count(k, j, i).unwrap());
                    prop_assert_eq!(*t.walk_count(k, i, j).unwrap() as i128, exact);
                }
            }
        }
    }

    #[test]
    fn bipartite_graphs_have_no_odd_closed_walks(g in bipartite_strategy(10)) {
        let t = WalkTable::<u128>::for_graph(&g, 9).unwrap();
        for k in (1..=9).step_by(2) {
            for i in 0..g.order() {
                prop_assert_eq!(*t.local_moment(k, i).unwrap(), 0);
            }
        }
        let d = eigendecompose(&g.adjacency_matrix::<f64>()).unwrap();
        prop_assert!((bipartivity(&d) - 1.0).abs() <= 1e-10);
        for i in 0..g.order() {
            prop_assert!((node_bipartivity(&d, i).unwrap() - 1.0).abs() <= 1e-10);
        }
    }

    #[test]
    fn triangles_lower_bipartivity(g in graph_strategy(10)) {
        let t = WalkTable::<u128>::for_graph(&g, 3).unwrap();
        prop_assume!(t.spectral_moment(3).unwrap() > 0);
        let d = eigendecompose(&g.adjacency_matrix::<f64>()).unwrap();
        prop_assert!(bipartivity(&d) < 1.0);
    }

    #[test]
    fn ranking_is_scale_invariant(
        raw in proptest::collection::vec(0i32..50, 1..20),
        scale in 0.01f64..100.0,
    ) {
        let values: Vec<f64> = raw.iter().map(|&x| x as f64).collect();
        let scaled: Vec<f64> = values.iter().map(|x| x * scale).collect();
        let a = rank_nodes("x", values.clone()).unwrap();
        let b = rank_nodes("x", scaled).unwrap();
        prop_assert_eq!(&a.ranking, &b.ranking);
        prop_assert_eq!(&a.tie_groups, &b.tie_groups);
        let mut sorted = a.ranking.clone();
        sorted.sort_unstable();
        prop_assert_eq!(sorted, (0..values.len()).collect::<Vec<_>>());
        prop_assert!(a.ranking.windows(2).all(|w| values[w[0]] >= values[w[1]] - 1e-9));
    }

    #[test]
    fn tsv_round_trip_and_determinism(g in graph_strategy(10), labels_seed in any::<u64>()) {
        let offset = labels_seed % 1000;
        let mut text = String::new();
        for v in 0..g.order() {
            text.push_str(&format!("{}\n", v as u64 * 7 + offset));
        }
        for (u, v) in g.edges() {
            text.push_str(&format!("{} {}\n", u as u64 * 7 + offset, v as u64 * 7 + offset));
        }
        let analysis = Analysis::from_text(&text, InputKind::EdgeList).unwrap();
        for measure in MeasureSpec::all(3) {
            let report = analysis.report(measure).unwrap();
            let tsv = report.to_tsv();
            prop_assert_eq!(&tsv, &Analysis::from_text(&text, InputKind::EdgeList).unwrap().report(measure).unwrap().to_tsv());
            let rows = read_tsv_rows(&tsv).unwrap();
            prop_assert_eq!(rows.len(), g.order());
            for (row, node) in rows.iter().zip(&report.nodes) {
                prop_assert_eq!(row.0, node.label);
                prop_assert_eq!(row.2, node.rank);
                prop_assert!((row.1 - node.value).abs() <= 1e-11 * node.value.abs().max(1e-300));
                prop_assert_eq!(funcent::io::format_significant(row.1, 12), funcent::io::format_significant(node.value, 12));
                prop_assert!((row.0 - offset) % 7 == 0);
            }
        }
    }

    #[test]
    fn spectral_matches_walk_series(g in graph_strategy(8)) {
        let d = eigendecompose(&g.adjacency_matrix::<f64>()).unwrap();
        let t = funcent::BigWalkTable::for_graph(&g, 60).unwrap();
        for f in [Weight::exp(), Weight::sinh(), Weight::cosh(), Weight::radius(5), Weight::monomial(4).unwrap()] {
            let values = functional_centrality(&d, &f).unwrap();
            for (i, v) in values.iter().enumerate() {
                let oracle = t.truncated_centrality_within(&f, i, 1e-10).unwrap();
                prop_assert!((v - oracle.value).abs() <= 1e-8);
            }
        }
    }
}
