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

//! Weight functions: a closed form `f(x)` paired with its Taylor
//! coefficients `a_k`, which weight closed walks of length `k`.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

type Evaluator<T> = Arc<dyn Fn(T) -> T + Send + Sync>;
type CoefficientRule<T> = Arc<dyn Fn(usize) -> T + Send + Sync>;

#[derive(Clone)]
pub enum WeightKind<T> {
    /// `e^x`, subgraph centrality.
    Exp,
    /// `sinh x`, odd closed walks only.
    Sinh,
    /// `cosh x`, even closed walks only.
    Cosh,
    /// `x^k`, the local spectral moment of order `k`.
    Monomial(usize),
    /// `a_0 + a_1 x + … + a_k x^k`.
    Polynomial(Vec<T>),
    /// Caller-supplied power series.
    Series {
        name: String,
        evaluator: Evaluator<T>,
        coefficient: CoefficientRule<T>,
        radius: T,
    },
}

impl<T: fmt::Debug> fmt::Debug for WeightKind<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeightKind::Exp => f.write_str("Exp"),
            WeightKind::Sinh => f.write_str("Sinh"),
            WeightKind::Cosh => f.write_str("Cosh"),
            WeightKind::Monomial(k) => f.debug_tuple("Monomial").field(k).finish(),
            WeightKind::Polynomial(c) => f.debug_tuple("Polynomial").field(c).finish(),
            WeightKind::Series { name, radius, .. } => f
                .debug_struct("Series")
                .field("name", name)
                .field("radius", radius)
                .finish(),
        }
    }
}

/// A measure definition.
#[derive(Debug, Clone)]
pub struct WeightFunction<T> {
    kind: WeightKind<T>,
    name: String,
}

impl<T: Scalar> WeightFunction<T> {
    pub fn exp() -> Self {
        WeightFunction {
            kind: WeightKind::Exp,
            name: "subgraph".into(),
        }
    }

    pub fn sinh() -> Self {
        WeightFunction {
            kind: WeightKind::Sinh,
            name: "odd".into(),
        }
    }

    pub fn cosh() -> Self {
        WeightFunction {
            kind: WeightKind::Cosh,
            name: "even".into(),
        }
    }

    /// `f(x) = x^k`; `k = 2` gives the degree.
    pub fn monomial(k: usize) -> Result<Self> {
        if k > i32::MAX as usize {
            return Err(Error::InvalidParam(format!("monomial order {k} too large")));
        }
        Ok(WeightFunction {
            kind: WeightKind::Monomial(k),
            name: format!("monomial:{k}"),
        })
    }

    /// Radius-`k` polynomial with `a_0 = 1` and `a_l = 1/l` for `1 ≤ l ≤ k`.
    pub fn radius(k: usize) -> Self {
        let coefficients = (0..=k)
            .map(|l| if l == 0 { T::one() } else { T::one() / T::from_count(l) })
            .collect();
        WeightFunction {
            kind: WeightKind::Polynomial(coefficients),
            name: format!("radius:{k}"),
        }
    }

    /// Polynomial with explicit coefficients `a_0, …, a_k`.
    pub fn polynomial(coefficients: Vec<T>) -> Result<Self> {
        if coefficients.is_empty() {
            return Err(Error::InvalidParam("polynomial needs at least one coefficient".into()));
        }
        if coefficients.iter().any(|c| !c.is_finite()) {
            return Err(Error::InvalidParam("polynomial coefficients must be finite".into()));
        }
        let name = format!("polynomial:{}", coefficients.len() - 1);
        Ok(WeightFunction {
            kind: WeightKind::Polynomial(coefficients),
            name,
        })
    }

    /// A user power series. `radius` is its convergence radius; it must be
    /// positive (use infinity for entire functions).
    pub fn series(
        name: impl Into<String>,
        evaluator: impl Fn(T) -> T + Send + Sync + 'static,
        coefficient: impl Fn(usize) -> T + Send + Sync + 'static,
        radius: T,
    ) -> Result<Self> {
        if radius.is_nan() || radius <= T::zero() {
            return Err(Error::InvalidParam("convergence radius must be positive".into()));
        }
        let name = name.into();
        Ok(WeightFunction {
            kind: WeightKind::Series {
                name: name.clone(),
                evaluator: Arc::new(evaluator),
                coefficient: Arc::new(coefficient),
                radius,
            },
            name,
        })
    }

    pub fn kind(&self) -> &WeightKind<T> {
        &self.kind
    }

    /// Short descriptor such as `subgraph` or `radius:3`.
    pub fn name(&self) -> &str {
        &self.name
    }

    /// Closed form `f(x)`.
    pub fn evaluate(&self, x: T) -> T {
        match &self.kind {
            WeightKind::Exp => x.exp(),
            WeightKind::Sinh => x.sinh(),
            WeightKind::Cosh => x.cosh(),
            WeightKind::Monomial(k) => x.powi(*k as i32),
            WeightKind::Polynomial(c) => c.iter().rev().fold(T::zero(), |acc, &a| acc * x + a),
            WeightKind::Series { evaluator, .. } => evaluator(x),
        }
    }

    /// Taylor coefficient `a_k`.
    pub fn coefficient(&self, k: usize) -> T {
        let inverse_factorial = || (1..=k).fold(T::one(), |acc, j| acc / T::from_count(j));
        match &self.kind {
            WeightKind::Exp => inverse_factorial(),
            WeightKind::Sinh if k % 2 == 1 => inverse_factorial(),
            WeightKind::Cosh if k.is_multiple_of(2) => inverse_factorial(),
            WeightKind::Sinh | WeightKind::Cosh => T::zero(),
            WeightKind::Monomial(m) => {
                if k == *m {
                    T::one()
                } else {
                    T::zero()
                }
            }
            WeightKind::Polynomial(c) => c.get(k).copied().unwrap_or_else(T::zero),
            WeightKind::Series { coefficient, .. } => coefficient(k),
        }
    }

    /// Convergence radius `λ_*`; `None` means infinite.
    pub fn convergence_radius(&self) -> Option<T> {
        match &self.kind {
            WeightKind::Series { radius, .. } if radius.is_finite() => Some(*radius),
            _ => None,
        }
    }

    /// Highest non-zero power for polynomial kinds, `None` for series.
    pub fn degree(&self) -> Option<usize> {
        match &self.kind {
            WeightKind::Monomial(k) => Some(*k),
            WeightKind::Polynomial(c) => Some(c.iter().rposition(|a| *a != T::zero()).unwrap_or(0)),
            _ => None,
        }
    }

    /// Whether every `a_k` is non-negative, the hypothesis of the
    /// complete-graph bound. Undecidable (and reported `false`) for
    /// user series.
    pub fn has_nonnegative_coefficients(&self) -> bool {
        match &self.kind {
            WeightKind::Exp | WeightKind::Sinh | WeightKind::Cosh | WeightKind::Monomial(_) => true,
            WeightKind::Polynomial(c) => c.iter().all(|a| *a >= T::zero()),
            WeightKind::Series { .. } => false,
        }
    }

    /// Checks that the series converges on the whole spectrum.
    pub(crate) fn check_radius(&self, spectral_radius: T) -> Result<()> {
        match self.convergence_radius() {
            Some(radius) if radius <= spectral_radius.abs() => Err(Error::RadiusTooSmall {
                radius: radius.to_f64().unwrap_or(f64::NAN),
                spectral_radius: spectral_radius.to_f64().unwrap_or(f64::NAN),
            }),
            _ => Ok(()),
        }
    }

    /// `f(x)`, or [`Error::Overflow`] when it is not finite.
    pub(crate) fn evaluate_finite(&self, x: T) -> Result<T> {
        let y = self.evaluate(x);
        if y.is_finite() {
            Ok(y)
        } else {
            Err(Error::Overflow {
                measure: self.name.clone(),
                at: x.to_f64().unwrap_or(f64::NAN),
            })
        }
    }
}
