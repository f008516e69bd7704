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

//! Closed-walk centralities of graphs and hypergraphs.
//!
//! A node's functional centrality weights its closed walks of length `k` by
//! the Taylor coefficient `a_k` of a function `f`, which collapses to
//! `C_f(i) = Σ_j u_ij² f(λ_j)` over the eigenpairs of the adjacency matrix.
//! The same machinery gives graph-level centralizations, the spectral
//! bipartivity measure, and (through the associated multigraph) the same
//! quantities for hypergraphs.
//!
//! Numerical code is generic over [`Scalar`] (`f32` or `f64`); the aliases
//! at the crate root fix it to `f64`. The [`walks`] module is an exact
//! integer oracle that never touches the eigensolver.

pub mod centrality;
pub mod error;
pub mod graph;
pub mod io;
pub mod scalar;
pub mod spectral;
pub mod walks;
pub mod weight;

pub use centrality::{
    bipartivity, bipartivity_excess, complete_graph_bound, functional_centrality, functional_centralization,
    node_bipartivity, node_bipartivity_excess, rank_nodes, rank_nodes_by, CentralityReport, TIE_TOLERANCE,
};
pub use error::{Error, Result};
pub use graph::{complete_graph, example_cubic_graph, Graph, Hypergraph, SymmetricMatrix};
pub use scalar::Scalar;
pub use spectral::{eigendecompose, SpectralDecomposition};
pub use walks::{Truncation, WalkTable};
pub use weight::{WeightFunction, WeightKind};

/// Double-precision spectral decomposition.
pub type Decomposition = SpectralDecomposition<f64>;
/// Double-precision weight function.
pub type Weight = WeightFunction<f64>;
/// Double-precision dense symmetric matrix.
pub type Matrix = SymmetricMatrix<f64>;
/// Double-precision ranking report.
pub type Report = CentralityReport<f64>;
/// Walk table over checked 128-bit counts.
pub type WalkTable128 = WalkTable<u128>;
/// Walk table over arbitrary-precision counts; never overflows.
pub type BigWalkTable = WalkTable<num_bigint::BigUint>;
