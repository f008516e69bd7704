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

//! Exact walk counts from integer matrix powers.
//!
//! This is the ground truth the spectral formulas are checked against: it
//! only multiplies integer matrices and sums truncated series, and never
//! calls the eigensolver.

use std::fmt::Debug;

use num_traits::{CheckedAdd, CheckedMul, Num, ToPrimitive};

use crate::error::{Error, Result};
use crate::graph::{Graph, Hypergraph, SymmetricMatrix};
use crate::scalar::Scalar;
use crate::weight::{WeightFunction, WeightKind};

/// Largest truncation order chosen automatically.
pub const MAX_AUTO_ORDER: usize = 60;

/// Integer type holding walk counts.
pub trait Count: Clone + Debug + Num + CheckedAdd + CheckedMul + ToPrimitive {}

impl<C> Count for C where C: Clone + Debug + Num + CheckedAdd + CheckedMul + ToPrimitive {}

/// Powers `A⁰ … A^K` of an integer adjacency matrix.
#[derive(Debug, Clone)]
pub struct WalkTable<C> {
    n: usize,
    // powers[k][i * n + j] = (A^k)_ij
    powers: Vec<Vec<C>>,
    row_sum_bound: f64,
}

/// A partial sum `Σ_{k≤K} a_k μ_k(i)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Truncation<T> {
    pub value: T,
    pub order: usize,
    /// Upper bound on `|Σ_{k>K} a_k μ_k(i)|`; `None` when no closed form
    /// is known for the weight.
    pub tail_bound: Option<T>,
}

impl<C: Count> WalkTable<C> {
    /// Computes every power up to `max_order` with overflow-checked
    /// arithmetic.
    pub fn new(adjacency: &SymmetricMatrix<C>, max_order: usize) -> Result<Self> {
        let n = adjacency.dim();
        let a = adjacency.as_slice();
        let mut identity = vec![C::zero(); n * n];
        for i in 0..n {
            identity[i * n + i] = C::one();
        }
        let mut powers = Vec::with_capacity(max_order + 1);
        powers.push(identity);
        for k in 1..=max_order {
            let prev = &powers[k - 1];
            let mut next = vec![C::zero(); n * n];
            for i in 0..n {
                for l in 0..n {
                    let left = &prev[i * n + l];
                    if left.is_zero() {
                        continue;
                    }
                    for j in 0..n {
                        let right = &a[l * n + j];
                        if right.is_zero() {
                            continue;
                        }
                        let product = left.checked_mul(right).ok_or(Error::IntegerOverflow(k))?;
                        next[i * n + j] = next[i * n + j].checked_add(&product).ok_or(Error::IntegerOverflow(k))?;
                    }
                }
            }
            powers.push(next);
        }
        let row_sum_bound = (0..n)
            .map(|i| {
                adjacency
                    .row(i)
                    .iter()
                    .map(|x| x.to_f64().unwrap_or(f64::INFINITY))
                    .sum::<f64>()
            })
            .fold(0.0, f64::max);
        Ok(WalkTable {
            n,
            powers,
            row_sum_bound,
        })
    }

    pub fn for_graph(g: &Graph, max_order: usize) -> Result<Self> {
        Self::new(&g.adjacency_matrix(), max_order)
    }

    pub fn for_hypergraph(h: &Hypergraph, max_order: usize) -> Result<Self> {
        Self::new(&h.adjacency_matrix(), max_order)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn max_order(&self) -> usize {
        self.powers.len() - 1
    }

    /// Largest row sum of `A`; bounds the spectral radius from above.
    pub fn spectral_bound(&self) -> f64 {
        self.row_sum_bound
    }

    fn power(&self, k: usize) -> Result<&[C]> {
        self.powers.get(k).map(Vec::as_slice).ok_or(Error::OrderExceeded {
            requested: k,
            max: self.max_order(),
        })
    }

    fn check_vertex(&self, i: usize) -> Result<()> {
        if i < self.n {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { index: i, n: self.n })
        }
    }

    /// `μ_k(ij)`: walks of length `k` from `i` to `j`.
    pub fn walk_count(&self, k: usize, i: usize, j: usize) -> Result<&C> {
        let p = self.power(k)?;
        self.check_vertex(i)?;
        self.check_vertex(j)?;
        Ok(&p[i * self.n + j])
    }

    /// `μ_k(i)`: closed walks of length `k` at `i`.
    pub fn local_moment(&self, k: usize, i: usize) -> Result<&C> {
        self.walk_count(k, i, i)
    }

    /// `θ_k = tr A^k`: all closed walks of length `k`.
    pub fn spectral_moment(&self, k: usize) -> Result<C> {
        let p = self.power(k)?;
        sum_checked((0..self.n).map(|i| &p[i * self.n + i]), k)
    }

    /// `w_k`: all walks of length `k`.
    pub fn total_walks(&self, k: usize) -> Result<C> {
        sum_checked(self.power(k)?.iter(), k)
    }

    /// Partial sum of the defining series up to order `order`.
    pub fn truncated_centrality<T: Scalar>(
        &self,
        f: &WeightFunction<T>,
        i: usize,
        order: usize,
    ) -> Result<Truncation<T>> {
        self.power(order)?;
        self.check_vertex(i)?;
        let mut value = 0.0;
        for k in 0..=order {
            let a = f.coefficient(k).to_f64().unwrap_or(f64::NAN);
            if a != 0.0 {
                let mu = self.powers[k][i * self.n + i].to_f64().unwrap_or(f64::INFINITY);
                value += a * mu;
            }
        }
        let tail_bound = tail_bound(f, order, self.row_sum_bound);
        Ok(Truncation {
            value: T::lit(value),
            order,
            tail_bound: tail_bound.map(T::lit),
        })
    }

    /// Partial sum whose order is chosen from the weight: the degree for
    /// polynomials, otherwise the smallest order whose tail bound is at
    /// most `tolerance`, capped at [`MAX_AUTO_ORDER`] and the table size.
    pub fn truncated_centrality_within<T: Scalar>(
        &self,
        f: &WeightFunction<T>,
        i: usize,
        tolerance: f64,
    ) -> Result<Truncation<T>> {
        let order = self.select_order(f, tolerance)?;
        self.truncated_centrality(f, i, order)
    }

    /// The order [`Self::truncated_centrality_within`] would use.
    pub fn select_order<T: Scalar>(&self, f: &WeightFunction<T>, tolerance: f64) -> Result<usize> {
        if let Some(degree) = f.degree() {
            self.power(degree)?;
            return Ok(degree);
        }
        let cap = MAX_AUTO_ORDER.min(self.max_order());
        let exp = WeightFunction::<f64>::exp();
        for order in 0..=cap {
            let tail = match f.kind() {
                WeightKind::Series { .. } => tail_bound(&exp, order, self.row_sum_bound),
                _ => tail_bound(f, order, self.row_sum_bound),
            };
            if tail.is_some_and(|t| t <= tolerance) {
                return Ok(order);
            }
        }
        Ok(cap)
    }
}

fn sum_checked<'a, C: Count + 'a>(mut items: impl Iterator<Item = &'a C>, k: usize) -> Result<C> {
    items.try_fold(C::zero(), |acc, x| acc.checked_add(x).ok_or(Error::IntegerOverflow(k)))
}

/// `Σ_{k>order} |a_k| ρ^k` for the built-in kinds. Since `μ_k(i) ≤ λ_1^k ≤ ρ^k`
/// this bounds the truncation error.
fn tail_bound<T: Scalar>(f: &WeightFunction<T>, order: usize, rho: f64) -> Option<f64> {
    let parity = match f.kind() {
        WeightKind::Exp => None,
        WeightKind::Sinh => Some(1),
        WeightKind::Cosh => Some(0),
        WeightKind::Monomial(_) | WeightKind::Polynomial(_) => {
            let degree = f.degree().unwrap_or(0);
            return Some(
                (order + 1..=degree)
                    .map(|k| f.coefficient(k).to_f64().unwrap_or(f64::NAN).abs() * rho.powi(k as i32))
                    .sum(),
            );
        }
        WeightKind::Series { .. } => return None,
    };
    // ρ^k / k! built incrementally
    let mut term = 1.0;
    for k in 1..=order {
        term *= rho / k as f64;
    }
    let mut tail = 0.0;
    let mut k = order;
    loop {
        k += 1;
        term *= rho / k as f64;
        if parity.is_none_or(|p| k % 2 == p) {
            tail += term;
        }
        if !tail.is_finite() {
            return Some(f64::INFINITY);
        }
        if (k as f64 > rho && term <= tail * 1e-18) || term == 0.0 {
            return Some(tail);
        }
    }
}
