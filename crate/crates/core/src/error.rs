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

use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {index} out of range for order {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("invalid order {0}: at least one vertex is required")]
    InvalidOrder(usize),
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("hyperedge {0} is empty")]
    EmptyHyperedge(usize),
    #[error("vertex {vertex} repeated in hyperedge {hyperedge}")]
    DuplicateVertexInHyperedge { hyperedge: usize, vertex: usize },
    #[error("matrix is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),
    #[error("matrix data has {len} entries, expected {n}x{n}")]
    DimensionMismatch { n: usize, len: usize },
    #[error("Jacobi iteration did not converge within {sweeps} sweeps")]
    NoConvergence { sweeps: usize },
    #[error("invalid parameter: {0}")]
    InvalidParam(String),
    #[error("{measure}: f({at}) is not finite")]
    Overflow { measure: String, at: f64 },
    #[error("convergence radius {radius} does not exceed spectral radius {spectral_radius}")]
    RadiusTooSmall { radius: f64, spectral_radius: f64 },
    #[error("value at node {0} is not finite")]
    NonFinite(usize),
    #[error("walk order {requested} exceeds table order {max}")]
    OrderExceeded { requested: usize, max: usize },
    #[error("walk count overflowed at order {0}")]
    IntegerOverflow(usize),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: {source}")]
    AtLine { line: usize, source: Box<Error> },
    #[error("{}: {source}", path.display())]
    File { path: PathBuf, source: Box<Error> },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn at_line(self, line: usize) -> Self {
        Error::AtLine {
            line,
            source: Box::new(self),
        }
    }

    pub(crate) fn in_file(self, path: impl Into<PathBuf>) -> Self {
        Error::File {
            path: path.into(),
            source: Box::new(self),
        }
    }
}
