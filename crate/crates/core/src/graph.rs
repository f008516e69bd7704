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

//! Simple graphs, hypergraphs and their adjacency matrices.

use std::collections::BTreeSet;

use num_traits::Num;

use crate::error::{Error, Result};

/// Simple undirected graph on vertices `0..n`.
///
/// Edges are stored once, as `(min, max)` pairs, in sorted order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    /// Builds a graph from vertex pairs. Duplicates and both orientations
    /// collapse to one undirected edge.
    pub fn from_edges<I>(n: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut edges = BTreeSet::new();
        for (u, v) in pairs {
            for index in [u, v] {
                if index >= n {
                    return Err(Error::IndexOutOfRange { index, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            edges.insert((u.min(v), u.max(v)));
        }
        Ok(Graph { n, edges })
    }

    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: BTreeSet::new(),
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges `m`.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    /// 0/1 adjacency matrix with zero diagonal.
    pub fn adjacency_matrix<T: Num + Clone>(&self) -> SymmetricMatrix<T> {
        let mut a = SymmetricMatrix::zeros(self.n);
        for &(u, v) in &self.edges {
            a.set(u, v, T::one());
        }
        a
    }
}

/// Hypergraph on vertices `0..n` with an ordered list of hyperedges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    hyperedges: Vec<Vec<usize>>,
}

impl Hypergraph {
    /// Every hyperedge must be non-empty, in range, and free of repeats.
    pub fn new(n: usize, hyperedges: Vec<Vec<usize>>) -> Result<Self> {
        for (k, edge) in hyperedges.iter().enumerate() {
            if edge.is_empty() {
                return Err(Error::EmptyHyperedge(k));
            }
            let mut seen = BTreeSet::new();
            for &v in edge {
                if v >= n {
                    return Err(Error::IndexOutOfRange { index: v, n });
                }
                if !seen.insert(v) {
                    return Err(Error::DuplicateVertexInHyperedge {
                        hyperedge: k,
                        vertex: v,
                    });
                }
            }
        }
        Ok(Hypergraph { n, hyperedges })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn hyperedges(&self) -> &[Vec<usize>] {
        &self.hyperedges
    }

    /// Vertex-by-hyperedge 0/1 incidence matrix, as rows.
    pub fn incidence_matrix(&self) -> Vec<Vec<u32>> {
        let mut e = vec![vec![0; self.hyperedges.len()]; self.n];
        for (k, edge) in self.hyperedges.iter().enumerate() {
            for &v in edge {
                e[v][k] = 1;
            }
        }
        e
    }

    /// Adjacency of the associated multigraph: `a_ij` counts the hyperedges
    /// containing both `i` and `j`, and the diagonal is zero.
    pub fn adjacency_matrix<T: Num + Clone>(&self) -> SymmetricMatrix<T> {
        let mut a = SymmetricMatrix::<T>::zeros(self.n);
        for edge in &self.hyperedges {
            for (x, &u) in edge.iter().enumerate() {
                for &v in &edge[x + 1..] {
                    let next = a.get(u, v).clone() + T::one();
                    a.set(u, v, next);
                }
            }
        }
        a
    }
}

/// Dense symmetric `n × n` matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricMatrix<T> {
    n: usize,
    data: Vec<T>,
}

impl<T: Num + Clone> SymmetricMatrix<T> {
    pub fn zeros(n: usize) -> Self {
        SymmetricMatrix {
            n,
            data: vec![T::zero(); n * n],
        }
    }

    /// Sets both `(i, j)` and `(j, i)`.
    pub fn set(&mut self, i: usize, j: usize, value: T) {
        self.data[i * self.n + j] = value.clone();
        self.data[j * self.n + i] = value;
    }
}

impl<T: PartialEq> SymmetricMatrix<T> {
    /// Wraps row-major data after checking exact symmetry.
    pub fn from_row_major(n: usize, data: Vec<T>) -> Result<Self> {
        if data.len() != n * n {
            return Err(Error::DimensionMismatch { n, len: data.len() });
        }
        for i in 0..n {
            for j in i + 1..n {
                if data[i * n + j] != data[j * n + i] {
                    return Err(Error::NotSymmetric(i, j));
                }
            }
        }
        Ok(SymmetricMatrix { n, data })
    }
}

impl<T> SymmetricMatrix<T> {
    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn as_slice(&self) -> &[T] {
        &self.data
    }

    /// Entrywise conversion, e.g. integer counts to floating point.
    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> SymmetricMatrix<U> {
        SymmetricMatrix {
            n: self.n,
            data: self.data.iter().map(f).collect(),
        }
    }
}

/// The complete graph `K_n`.
pub fn complete_graph(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidOrder(n));
    }
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// The 8-vertex cubic graph used as the reference fixture.
///
/// One triangle on labels {1, 2, 8}; vertices 4 and 6 each lie on three
/// 4-cycles and 3, 5, 7 on two each. Labels here are 1-based; vertex `k` is
/// index `k - 1`.
pub fn example_cubic_graph() -> Graph {
    const EDGES: [(usize, usize); 12] = [
        (1, 2),
        (1, 8),
        (2, 8),
        (1, 3),
        (2, 5),
        (8, 7),
        (3, 4),
        (3, 6),
        (5, 4),
        (5, 6),
        (7, 4),
        (7, 6),
    ];
    Graph::from_edges(8, EDGES.iter().map(|&(u, v)| (u - 1, v - 1))).expect("fixture is a simple graph")
}
