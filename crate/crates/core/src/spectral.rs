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

//! Dense symmetric eigendecomposition by cyclic Jacobi rotations.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::graph::SymmetricMatrix;
use crate::scalar::Scalar;

/// Full sweeps over the upper triangle before giving up.
pub const MAX_SWEEPS: usize = 100;

/// Eigenvalues in non-increasing order with an orthonormal eigenvector
/// matrix `U` whose column `j` pairs with `eigenvalues[j]`.
///
/// Each column is signed so that its largest-magnitude entry (lowest index
/// on ties) is positive.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralDecomposition<T> {
    n: usize,
    eigenvalues: Vec<T>,
    // row-major, u[i * n + j] = u_ij
    eigenvectors: Vec<T>,
}

impl<T: Scalar> SpectralDecomposition<T> {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn eigenvalues(&self) -> &[T] {
        &self.eigenvalues
    }

    /// Entry `u_ij`: component `i` of the eigenvector for `λ_j`.
    pub fn component(&self, i: usize, j: usize) -> T {
        self.eigenvectors[i * self.n + j]
    }

    /// Row `i` of `U`.
    pub fn row(&self, i: usize) -> &[T] {
        &self.eigenvectors[i * self.n..(i + 1) * self.n]
    }

    /// Eigenvector for `λ_j`.
    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.n).map(|i| self.component(i, j)).collect()
    }

    /// The largest eigenvalue `λ_1`, or zero for the empty matrix.
    pub fn spectral_radius(&self) -> T {
        self.eigenvalues.first().copied().unwrap_or_else(T::zero)
    }

    /// `‖UᵀU − I‖_∞` (max absolute row sum).
    pub fn orthogonality_residual(&self) -> T {
        let n = self.n;
        (0..n)
            .map(|a| {
                (0..n).fold(T::zero(), |acc, b| {
                    let dot = (0..n).fold(T::zero(), |s, i| s + self.component(i, a) * self.component(i, b));
                    let target = if a == b { T::one() } else { T::zero() };
                    acc + (dot - target).abs()
                })
            })
            .fold(T::zero(), T::max)
    }

    /// `‖A − U·diag(λ)·Uᵀ‖_∞ / max(1, ‖A‖_∞)`.
    pub fn reconstruction_residual(&self, a: &SymmetricMatrix<T>) -> T {
        let n = self.n;
        let mut worst = T::zero();
        let mut norm = T::zero();
        for i in 0..n {
            let (mut diff_sum, mut row_sum) = (T::zero(), T::zero());
            for k in 0..n {
                let rebuilt = (0..n).fold(T::zero(), |s, j| {
                    s + self.component(i, j) * self.eigenvalues[j] * self.component(k, j)
                });
                diff_sum += (*a.get(i, k) - rebuilt).abs();
                row_sum += a.get(i, k).abs();
            }
            worst = worst.max(diff_sum);
            norm = norm.max(row_sum);
        }
        worst / norm.max(T::one())
    }
}

/// Convergence threshold on the off-diagonal Frobenius norm, relative to
/// `‖A‖_F`: `1e-12` in double precision, a few ulps in single.
fn relative_tolerance<T: Scalar>() -> T {
    T::lit(1e-12).max(T::epsilon() * T::lit(16.0))
}

/// Decomposes a symmetric matrix as `A = U·diag(λ)·Uᵀ`.
///
/// The result is a deterministic function of the input. Fails with
/// [`Error::NoConvergence`] if the off-diagonal mass does not fall below
/// `1e-12·‖A‖_F` within [`MAX_SWEEPS`] sweeps; once it does, a final sweep
/// polishes the result.
pub fn eigendecompose<T: Scalar>(a: &SymmetricMatrix<T>) -> Result<SpectralDecomposition<T>> {
    let n = a.dim();
    let mut m = a.as_slice().to_vec();
    if let Some(bad) = m.iter().position(|x| !x.is_finite()) {
        return Err(Error::NonFinite(bad / n.max(1)));
    }
    // vt[j * n + i] = u_ij, so that rotations touch contiguous rows
    let mut vt = vec![T::zero(); n * n];
    for i in 0..n {
        vt[i * n + i] = T::one();
    }

    let frobenius = m.iter().fold(T::zero(), |s, &x| s + x * x).sqrt();
    let threshold = relative_tolerance::<T>() * frobenius;
    let off_norm = |m: &[T]| {
        let mut s = T::zero();
        for p in 0..n {
            for q in p + 1..n {
                s += m[p * n + q] * m[p * n + q];
            }
        }
        (s + s).sqrt()
    };

    let sweep = |m: &mut [T], vt: &mut [T]| {
        for p in 0..n {
            for q in p + 1..n {
                rotate(m, vt, n, p, q);
            }
        }
    };
    let mut sweeps = 0;
    while off_norm(&m) > threshold {
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence { sweeps });
        }
        sweeps += 1;
        sweep(&mut m, &mut vt);
    }
    // Convergence is quadratic, so one more sweep takes the residual from
    // the threshold down to roundoff.
    if sweeps > 0 {
        sweep(&mut m, &mut vt);
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&x, &y| m[y * n + y].partial_cmp(&m[x * n + x]).unwrap_or(Ordering::Equal));
    let eigenvalues = order.iter().map(|&j| m[j * n + j]).collect();
    let mut eigenvectors = vec![T::zero(); n * n];
    for (col, &j) in order.iter().enumerate() {
        let v = &vt[j * n..(j + 1) * n];
        let mut pivot = 0;
        for i in 1..n {
            if v[i].abs() > v[pivot].abs() {
                pivot = i;
            }
        }
        let sign = if v[pivot] < T::zero() { -T::one() } else { T::one() };
        for i in 0..n {
            eigenvectors[i * n + col] = sign * v[i];
        }
    }
    Ok(SpectralDecomposition {
        n,
        eigenvalues,
        eigenvectors,
    })
}

/// One Jacobi rotation annihilating `m[p][q]`, applied as `JᵀMJ`, with the
/// rotation accumulated into the rows `p`, `q` of `vt`.
fn rotate<T: Scalar>(m: &mut [T], vt: &mut [T], n: usize, p: usize, q: usize) {
    let apq = m[p * n + q];
    if apq == T::zero() {
        return;
    }
    let app = m[p * n + p];
    let aqq = m[q * n + q];
    let theta = (aqq - app) / (apq + apq);
    let t = if theta.abs() > T::lit(1e150) {
        T::one() / (theta + theta)
    } else {
        let t = T::one() / (theta.abs() + (theta * theta + T::one()).sqrt());
        if theta < T::zero() {
            -t
        } else {
            t
        }
    };
    let c = T::one() / (t * t + T::one()).sqrt();
    let s = t * c;

    for k in 0..n {
        if k == p || k == q {
            continue;
        }
        let akp = m[p * n + k];
        let akq = m[q * n + k];
        let new_p = c * akp - s * akq;
        let new_q = s * akp + c * akq;
        m[p * n + k] = new_p;
        m[q * n + k] = new_q;
        m[k * n + p] = new_p;
        m[k * n + q] = new_q;
    }
    m[p * n + p] = app - t * apq;
    m[q * n + q] = aqq + t * apq;
    m[p * n + q] = T::zero();
    m[q * n + p] = T::zero();

    let (head, tail) = vt.split_at_mut(q * n);
    let row_p = &mut head[p * n..(p + 1) * n];
    let row_q = &mut tail[..n];
    for (vp, vq) in row_p.iter_mut().zip(row_q.iter_mut()) {
        let (x, y) = (*vp, *vq);
        *vp = c * x - s * y;
        *vq = s * x + c * y;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, Graph};

    fn spectrum(g: &Graph) -> Vec<f64> {
        eigendecompose(&g.adjacency_matrix::<f64>())
            .unwrap()
            .eigenvalues()
            .to_vec()
    }

    fn assert_close(got: &[f64], want: &[f64], tol: f64) {
        assert_eq!(got.len(), want.len());
        for (g, w) in got.iter().zip(want) {
            assert!((g - w).abs() <= tol, "{got:?} vs {want:?}");
        }
    }

    #[test]
    fn small_spectra() {
        assert_close(&spectrum(&complete_graph(2).unwrap()), &[1.0, -1.0], 1e-14);
        let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_close(&spectrum(&c4), &[2.0, 0.0, 0.0, -2.0], 1e-12);
        for n in 1..=12 {
            let mut want = vec![-1.0; n];
            want[0] = (n - 1) as f64;
            assert_close(&spectrum(&complete_graph(n).unwrap()), &want, 1e-12);
        }
    }

    #[test]
    fn spectral_radius_cases() {
        let d = |g: Graph| eigendecompose(&g.adjacency_matrix::<f64>()).unwrap().spectral_radius();
        assert!((d(complete_graph(4).unwrap()) - 3.0).abs() < 1e-12);
        assert!((d(complete_graph(2).unwrap()) - 1.0).abs() < 1e-14);
        assert_eq!(d(Graph::empty(3)), 0.0);
    }

    #[test]
    fn sign_convention_is_applied() {
        let a = SymmetricMatrix::from_row_major(3, vec![2.0f64, -1.0, 0.0, -1.0, 2.0, -1.0, 0.0, -1.0, 2.0]).unwrap();
        let d = eigendecompose(&a).unwrap();
        for j in 0..3 {
            let col = d.column(j);
            let pivot = col
                .iter()
                .enumerate()
                .fold(0, |best, (i, x)| if x.abs() > col[best].abs() { i } else { best });
            assert!(col[pivot] > 0.0);
        }
        assert!(d.orthogonality_residual() < 1e-12);
        assert!(d.reconstruction_residual(&a) < 1e-12);
    }

    #[test]
    fn single_precision_also_works() {
        let a = complete_graph(5).unwrap().adjacency_matrix::<f32>();
        let d = eigendecompose(&a).unwrap();
        assert!((d.spectral_radius() - 4.0).abs() < 1e-5);
        assert!(d.orthogonality_residual() < 1e-5);
    }

    #[test]
    fn empty_matrix() {
        let d = eigendecompose(&SymmetricMatrix::<f64>::zeros(0)).unwrap();
        assert_eq!(d.order(), 0);
        assert_eq!(d.spectral_radius(), 0.0);
    }

    #[test]
    fn deterministic() {
        let a = crate::graph::example_cubic_graph().adjacency_matrix::<f64>();
        assert_eq!(eigendecompose(&a).unwrap(), eigendecompose(&a).unwrap());
    }
}
