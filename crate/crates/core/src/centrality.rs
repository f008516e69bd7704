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

//! Functional centralities and the graph-level quantities built on them.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::spectral::SpectralDecomposition;
use crate::weight::{WeightFunction, WeightKind};

/// Values closer than this (absolute) share a tie group.
pub const TIE_TOLERANCE: f64 = 1e-9;

fn largest_magnitude<T: Scalar>(d: &SpectralDecomposition<T>) -> T {
    d.eigenvalues().iter().fold(T::zero(), |m, x| m.max(x.abs()))
}

fn evaluate_spectrum<T: Scalar>(d: &SpectralDecomposition<T>, f: &WeightFunction<T>) -> Result<Vec<T>> {
    f.check_radius(largest_magnitude(d))?;
    d.eigenvalues().iter().map(|&x| f.evaluate_finite(x)).collect()
}

/// `C_f(i) = Σ_j u_ij² f(λ_j)` for every node `i`.
pub fn functional_centrality<T: Scalar>(d: &SpectralDecomposition<T>, f: &WeightFunction<T>) -> Result<Vec<T>> {
    let fx = evaluate_spectrum(d, f)?;
    Ok((0..d.order())
        .map(|i| {
            d.row(i)
                .iter()
                .zip(&fx)
                .fold(T::zero(), |acc, (&u, &y)| acc + u * u * y)
        })
        .collect())
}

/// `C_f(Γ) = Σ_j f(λ_j)`, which equals the sum of the node centralities.
pub fn functional_centralization<T: Scalar>(d: &SpectralDecomposition<T>, f: &WeightFunction<T>) -> Result<T> {
    Ok(evaluate_spectrum(d, f)?.into_iter().fold(T::zero(), |acc, y| acc + y))
}

/// Upper bound `(1/n)[f(n−1) + (n−1)f(−1)]` on `C_f(i)` over all simple
/// graphs of order `n`, attained exactly by `K_n`. Only valid for weights
/// with non-negative coefficients; built-in polynomials with a negative
/// coefficient are rejected, user series are the caller's responsibility.
pub fn complete_graph_bound<T: Scalar>(n: usize, f: &WeightFunction<T>) -> Result<T> {
    if n < 1 {
        return Err(Error::InvalidOrder(n));
    }
    if !matches!(f.kind(), WeightKind::Series { .. }) && !f.has_nonnegative_coefficients() {
        return Err(Error::InvalidParam(format!("{} has a negative coefficient", f.name())));
    }
    let order = T::from_count(n);
    let rest = order - T::one();
    if n > 1 {
        f.check_radius(rest)?;
    }
    let top = f.evaluate_finite(rest)?;
    let bottom = if n > 1 {
        f.evaluate_finite(-T::one())?
    } else {
        T::zero()
    };
    Ok((top + rest * bottom) / order)
}

/// Shifted sums `(Σ w e^{λ−s}, Σ w e^{−λ−s})` with `s = max(|λ| + ln w)`, so
/// no term exceeds one. With `up` and `down` the bipartivity is
/// `(up + down) / 2up = 1/2 + down / 2up`.
fn shifted_sums<T: Scalar>(terms: impl Iterator<Item = (T, T)> + Clone) -> Option<(T, T)> {
    let live = terms.filter(|&(w, _)| w > T::zero());
    let shift = live
        .clone()
        .fold(T::neg_infinity(), |s, (w, x)| s.max(x.abs() + w.ln()));
    if shift == T::neg_infinity() {
        return None;
    }
    let (mut up, mut down) = (T::zero(), T::zero());
    for (w, x) in live {
        up += (w.ln() + x - shift).exp();
        down += (w.ln() - x - shift).exp();
    }
    Some((up, down))
}

fn even_fraction<T: Scalar>(sums: Option<(T, T)>) -> T {
    match sums {
        // odd closed-walk weight (up - down) is a sum of non-negative counts
        Some((up, down)) => ((up + down.min(up)) / (up + up)).min(T::one()),
        None => T::one(),
    }
}

fn excess_over_half<T: Scalar>(sums: Option<(T, T)>) -> T {
    match sums {
        Some((up, down)) => down.min(up) / (up + up),
        None => T::lit(0.5),
    }
}

fn spectrum_terms<T: Scalar>(d: &SpectralDecomposition<T>) -> impl Iterator<Item = (T, T)> + Clone + '_ {
    d.eigenvalues().iter().map(|&x| (T::one(), x))
}

fn node_terms<T: Scalar>(d: &SpectralDecomposition<T>, i: usize) -> Result<impl Iterator<Item = (T, T)> + Clone + '_> {
    if i >= d.order() {
        return Err(Error::IndexOutOfRange { index: i, n: d.order() });
    }
    Ok(d.row(i).iter().zip(d.eigenvalues()).map(|(&u, &x)| (u * u, x)))
}

/// Spectral bipartivity `β(Γ) = Σ cosh(λ_j) / Σ e^{λ_j}`, in `(1/2, 1]` and
/// equal to one exactly for bipartite graphs. Finite for every spectrum.
pub fn bipartivity<T: Scalar>(d: &SpectralDecomposition<T>) -> T {
    even_fraction(shifted_sums(spectrum_terms(d)))
}

/// `β(Γ) − 1/2 = Σ e^{−λ_j} / 2Σ e^{λ_j}`, accurate even where `β` itself
/// rounds to one half (dense graphs such as `K_50`).
pub fn bipartivity_excess<T: Scalar>(d: &SpectralDecomposition<T>) -> T {
    excess_over_half(shifted_sums(spectrum_terms(d)))
}

/// Node share of bipartivity, `Σ_j u_ij² cosh(λ_j) / Σ_j u_ij² e^{λ_j}`.
pub fn node_bipartivity<T: Scalar>(d: &SpectralDecomposition<T>, i: usize) -> Result<T> {
    Ok(even_fraction(shifted_sums(node_terms(d, i)?)))
}

/// `β(i) − 1/2`, see [`bipartivity_excess`].
pub fn node_bipartivity_excess<T: Scalar>(d: &SpectralDecomposition<T>, i: usize) -> Result<T> {
    Ok(excess_over_half(shifted_sums(node_terms(d, i)?)))
}

/// Per-node values with a descending ranking.
#[derive(Debug, Clone, PartialEq)]
pub struct CentralityReport<T> {
    pub measure: String,
    pub values: Vec<T>,
    /// Node indices, highest value first.
    pub ranking: Vec<usize>,
    /// Runs of `ranking` whose neighbouring values differ by at most
    /// [`TIE_TOLERANCE`].
    pub tie_groups: Vec<Vec<usize>>,
    /// Competition rank (1-based) of each node, indexed by node.
    pub ranks: Vec<usize>,
}

/// Ranks nodes by descending value, breaking ties by node index.
pub fn rank_nodes<T: Scalar>(measure: impl Into<String>, values: Vec<T>) -> Result<CentralityReport<T>> {
    rank_nodes_by(measure, values, |i| i)
}

/// Ranks nodes by descending value; members of a tie group are ordered by
/// ascending `key`.
pub fn rank_nodes_by<T, K, F>(measure: impl Into<String>, values: Vec<T>, key: F) -> Result<CentralityReport<T>>
where
    T: Scalar,
    K: Ord,
    F: Fn(usize) -> K,
{
    if let Some(bad) = values.iter().position(|v| !v.is_finite()) {
        return Err(Error::NonFinite(bad));
    }
    let tolerance = T::lit(TIE_TOLERANCE);
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| {
        values[b]
            .partial_cmp(&values[a])
            .unwrap_or(Ordering::Equal)
            .then(a.cmp(&b))
    });

    let mut tie_groups: Vec<Vec<usize>> = Vec::new();
    let mut previous: Option<T> = None;
    for &i in &order {
        match (previous, tie_groups.last_mut()) {
            (Some(p), Some(group)) if p - values[i] <= tolerance => group.push(i),
            _ => tie_groups.push(vec![i]),
        }
        previous = Some(values[i]);
    }

    let mut ranks = vec![0; values.len()];
    let mut ranking = Vec::with_capacity(values.len());
    for group in &mut tie_groups {
        group.sort_by_key(|&i| key(i));
        let rank = ranking.len() + 1;
        for &i in group.iter() {
            ranks[i] = rank;
        }
        ranking.extend_from_slice(group);
    }
    Ok(CentralityReport {
        measure: measure.into(),
        values,
        ranking,
        tie_groups,
        ranks,
    })
}
