// Copyright 2026 The ksconf Developers
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may not use this file except
// in compliance with the License. You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software distributed under the License
// is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express
// or implied. See the License for the specific language governing permissions and limitations under
// the License.

//! Probability weights, per-clique entropies and upper bounds on configuration entropy.
//!
//! A probability weight assigns each ray a value in `[0, 1]` so that every
//! `d`-clique sums to one. Entropies use the natural logarithm and `0·log 0 = 0`.

use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::bits::Bits;
use crate::colouring::{
    find_ks_colouring, find_partition_colouring, verify_partition_colouring, Colouring, ColouringError,
};
use crate::orthograph::{is_saturated, maximal_cliques};
use crate::rays::Configuration;

/// Equientropy tolerance in floating mode.
pub const EQUIENTROPY_TOL: f64 = 1e-9;
/// Clique-sum tolerance in floating mode.
pub const SUM_TOL: f64 = 1e-9;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum EntropyError {
    #[error("configuration is not saturated; probability weights need every non-maximal clique to extend")]
    NotSaturated,
    #[error("weight has {found} values for a configuration of {expected} rays")]
    LengthMismatch { expected: usize, found: usize },
    #[error("not a probability weight: clique {clique:?} sums to {sum}")]
    Invalid { clique: Vec<usize>, sum: f64 },
    #[error("value {value} of ray {index} lies outside [0, 1]")]
    OutOfRange { index: usize, value: f64 },
    #[error("colour values give Σ N_α·v_α = {0}, not 1")]
    BadColourValues(Rational64),
    #[error("{expected} colour values needed, {found} given")]
    ColourCount { expected: usize, found: usize },
    #[error("colouring does not match its partition on every maximal clique")]
    BadColouring,
    #[error(transparent)]
    Colouring(#[from] ColouringError),
}

#[derive(Clone, Debug, PartialEq)]
pub enum ProbabilityWeight {
    Rational(Vec<Rational64>),
    Float(Vec<f64>),
}

impl ProbabilityWeight {
    pub fn uniform(n: usize, d: usize) -> Self {
        ProbabilityWeight::Rational(vec![Rational64::new(1, d as i64); n])
    }

    /// `value` on `set`, zero elsewhere.
    pub fn on_set(n: usize, set: &[usize], value: Rational64) -> Self {
        let mut v = vec![Rational64::zero(); n];
        for &i in set {
            v[i] = value;
        }
        ProbabilityWeight::Rational(v)
    }

    pub fn len(&self) -> usize {
        match self {
            ProbabilityWeight::Rational(v) => v.len(),
            ProbabilityWeight::Float(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn value(&self, i: usize) -> f64 {
        match self {
            ProbabilityWeight::Rational(v) => v[i].to_f64().unwrap_or(f64::NAN),
            ProbabilityWeight::Float(v) => v[i],
        }
    }

    pub fn to_f64(&self) -> Vec<f64> {
        (0..self.len()).map(|i| self.value(i)).collect()
    }
}

fn h(p: f64) -> f64 {
    if p <= 0.0 {
        0.0
    } else {
        -p * p.ln()
    }
}

/// `-Σ p log p` over the rays of `clique`.
pub fn clique_entropy(f: &ProbabilityWeight, clique: &Bits) -> f64 {
    clique.iter().map(|x| h(f.value(x))).sum()
}

fn check_shape(config: &Configuration, f: &ProbabilityWeight) -> Result<(), EntropyError> {
    if f.len() != config.len() {
        return Err(EntropyError::LengthMismatch {
            expected: config.len(),
            found: f.len(),
        });
    }
    if !is_saturated(config).is_saturated() {
        return Err(EntropyError::NotSaturated);
    }
    Ok(())
}

/// First violated clique or out-of-range value.
fn first_violation(f: &ProbabilityWeight, cliques: &[Bits]) -> Option<EntropyError> {
    for i in 0..f.len() {
        let in_range = match f {
            ProbabilityWeight::Rational(v) => !v[i].is_negative() && v[i] <= Rational64::one(),
            ProbabilityWeight::Float(v) => (-SUM_TOL..=1.0 + SUM_TOL).contains(&v[i]),
        };
        if !in_range {
            return Some(EntropyError::OutOfRange {
                index: i,
                value: f.value(i),
            });
        }
    }
    for c in cliques {
        let ok = match f {
            ProbabilityWeight::Rational(v) => c.iter().map(|x| v[x]).sum::<Rational64>().is_one(),
            ProbabilityWeight::Float(v) => (c.iter().map(|x| v[x]).sum::<f64>() - 1.0).abs() <= SUM_TOL,
        };
        if !ok {
            return Some(EntropyError::Invalid {
                clique: c.to_vec(),
                sum: c.iter().map(|x| f.value(x)).sum(),
            });
        }
    }
    None
}

/// Whether every `d`-clique sums to one (exactly for rational weights).
pub fn validate_probability_weight(config: &Configuration, f: &ProbabilityWeight) -> Result<bool, EntropyError> {
    check_shape(config, f)?;
    Ok(first_violation(f, &maximal_cliques(config)).is_none())
}

#[derive(Clone, Debug, PartialEq)]
pub struct EntropyReport {
    pub per_clique: Vec<(Bits, f64)>,
    pub equientropic: bool,
    /// Equientropy was decided exactly (equal value multisets on every clique).
    pub exact: bool,
    pub common_value: Option<f64>,
    /// `common_value` when equientropic: the entropy of the configuration is at most this.
    pub configuration_entropy_upper_bound: Option<f64>,
    pub statistical_weight: Option<f64>,
}

pub fn entropy_report(config: &Configuration, f: &ProbabilityWeight, tol: f64) -> Result<EntropyReport, EntropyError> {
    check_shape(config, f)?;
    let cliques = maximal_cliques(config);
    if let Some(e) = first_violation(f, &cliques) {
        return Err(e);
    }
    Ok(report_for(f, &cliques, tol))
}

fn report_for(f: &ProbabilityWeight, cliques: &[Bits], tol: f64) -> EntropyReport {
    let per_clique: Vec<(Bits, f64)> = cliques.iter().map(|c| (*c, clique_entropy(f, c))).collect();
    let exact = match f {
        ProbabilityWeight::Rational(v) => {
            let key = |c: &Bits| {
                let mut m: Vec<Rational64> = c.iter().map(|x| v[x]).collect();
                m.sort();
                m
            };
            cliques
                .first()
                .map(key)
                .is_some_and(|k0| cliques.iter().all(|c| key(c) == k0))
        }
        ProbabilityWeight::Float(_) => false,
    };
    let (lo, hi) = per_clique
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), (_, s)| {
            (lo.min(*s), hi.max(*s))
        });
    let equientropic = !per_clique.is_empty() && (exact || hi - lo <= tol);
    let common_value = equientropic.then_some(per_clique[0].1);
    EntropyReport {
        per_clique,
        equientropic,
        exact,
        common_value,
        configuration_entropy_upper_bound: common_value,
        statistical_weight: common_value.map(f64::exp),
    }
}

/// Weight `colour_values[colour(x)]`; equientropic because clique multiplicities are fixed.
pub fn weight_from_partition_colouring(
    config: &Configuration,
    colouring: &Colouring,
    colour_values: &[Rational64],
) -> Result<ProbabilityWeight, EntropyError> {
    let p = &colouring.partition;
    if colour_values.len() != p.len() {
        return Err(EntropyError::ColourCount {
            expected: p.len(),
            found: colour_values.len(),
        });
    }
    if let Some((i, v)) = colour_values
        .iter()
        .enumerate()
        .find(|(_, v)| v.is_negative() || **v > Rational64::one())
    {
        return Err(EntropyError::OutOfRange {
            index: i,
            value: v.to_f64().unwrap_or(f64::NAN),
        });
    }
    let total: Rational64 = p
        .iter()
        .zip(colour_values)
        .map(|(&n, v)| Rational64::from_integer(n as i64) * v)
        .sum();
    if !total.is_one() {
        return Err(EntropyError::BadColourValues(total));
    }
    if !verify_partition_colouring(config, colouring)? {
        return Err(EntropyError::BadColouring);
    }
    Ok(ProbabilityWeight::Rational(
        colouring.values.iter().map(|&c| colour_values[c as usize]).collect(),
    ))
}

/// Distinct values `q_i/Γ` of a rational weight with per-clique multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightSpec {
    pub values: Vec<Rational64>,
    pub gamma: i64,
    pub numerators: Vec<i64>,
    /// `multiplicities[u][i]` = rays of clique `u` carrying `values[i]`.
    pub multiplicities: Vec<Vec<usize>>,
}

impl WeightSpec {
    pub fn from_weight(config: &Configuration, values: &[Rational64]) -> WeightSpec {
        let mut distinct: Vec<Rational64> = values.to_vec();
        distinct.sort();
        distinct.dedup();
        let gamma = distinct.iter().fold(1i64, |g, v| g.lcm(v.denom()));
        let numerators = distinct.iter().map(|v| (v * gamma).to_integer()).collect();
        let multiplicities = maximal_cliques(config)
            .iter()
            .map(|c| {
                let mut m = vec![0usize; distinct.len()];
                for x in c.iter() {
                    m[distinct.binary_search(&values[x]).expect("value is listed")] += 1;
                }
                m
            })
            .collect();
        WeightSpec {
            values: distinct,
            gamma,
            numerators,
            multiplicities,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BoundSource {
    KsColouring,
    PartitionColouring(Vec<usize>),
    ContinuousSearch,
    Uniform,
}

#[derive(Clone, Debug, PartialEq)]
pub struct EntropyBound {
    /// Upper bound on the configuration entropy (an infimum over equientropic weights).
    pub bound: f64,
    pub witness: ProbabilityWeight,
    pub source: BoundSource,
    pub report: EntropyReport,
}

#[derive(Clone, Copy, Debug)]
pub struct MinimizeOptions {
    pub starts: usize,
    pub iterations: usize,
    pub seed: u64,
    pub try_partitions: bool,
}

impl Default for MinimizeOptions {
    fn default() -> Self {
        MinimizeOptions {
            starts: 8,
            iterations: 400,
            seed: 7,
            try_partitions: true,
        }
    }
}

/// Smallest equientropic value found; an upper bound, never a proof of optimality.
///
/// Two-colour partition colourings `(d - k, k)` are tried for increasing `k`: a
/// colouring with a class of `k` rays per clique carries the weight `1/k` on
/// that class, of entropy `log k`, and a class with fewer rays per clique can
/// always be split off as such a two-colour colouring.
pub fn minimize_entropy(config: &Configuration, opts: MinimizeOptions) -> Result<EntropyBound, EntropyError> {
    let n = config.len();
    let d = config.dim();
    let uniform = ProbabilityWeight::uniform(n, d);
    check_shape(config, &uniform)?;
    let cliques = maximal_cliques(config);

    if let Some(c) = find_ks_colouring(config) {
        let w = ProbabilityWeight::Rational(c.values.iter().map(|&v| Rational64::from_integer(v as i64)).collect());
        return Ok(finish(w, &cliques, BoundSource::KsColouring));
    }

    let mut best = finish(uniform, &cliques, BoundSource::Uniform);
    if opts.try_partitions {
        for k in 2..=d / 2 {
            if (k as f64).ln() >= best.bound {
                break;
            }
            if let Some(c) = find_partition_colouring(config, &[d - k, k])? {
                let w =
                    weight_from_partition_colouring(config, &c, &[Rational64::zero(), Rational64::new(1, k as i64)])?;
                best = finish(w, &cliques, BoundSource::PartitionColouring(vec![d - k, k]));
                break;
            }
        }
    }

    let found: Vec<Vec<f64>> = (0..opts.starts)
        .into_par_iter()
        .filter_map(|s| continuous_search(n, d, &cliques, opts.seed.wrapping_add(s as u64), opts.iterations))
        .collect();
    for f in found {
        let w = ProbabilityWeight::Float(f);
        if first_violation(&w, &cliques).is_some() {
            continue;
        }
        let r = report_for(&w, &cliques, EQUIENTROPY_TOL);
        if let Some(s) = r.common_value {
            let better = s < best.bound - EQUIENTROPY_TOL;
            let tie = (s - best.bound).abs() <= EQUIENTROPY_TOL
                && best.source == BoundSource::ContinuousSearch
                && lexicographically_smaller(&w.to_f64(), &best.witness.to_f64());
            if better || tie {
                best = EntropyBound {
                    bound: s,
                    witness: w,
                    source: BoundSource::ContinuousSearch,
                    report: r,
                };
            }
        }
    }
    Ok(best)
}

fn lexicographically_smaller(a: &[f64], b: &[f64]) -> bool {
    a.iter().zip(b).find(|(x, y)| x != y).is_some_and(|(x, y)| x < y)
}

fn finish(w: ProbabilityWeight, cliques: &[Bits], source: BoundSource) -> EntropyBound {
    let report = report_for(&w, cliques, EQUIENTROPY_TOL);
    EntropyBound {
        bound: report.common_value.expect("colouring-induced weights are equientropic"),
        witness: w,
        source,
        report,
    }
}

/// Alternating projections onto the clique hyperplanes and the unit box.
fn project(f: &mut [f64], cliques: &[Bits], sweeps: usize) -> f64 {
    let mut worst = f64::INFINITY;
    for _ in 0..sweeps {
        for c in cliques {
            let s: f64 = c.iter().map(|x| f[x]).sum();
            let shift = (1.0 - s) / c.len() as f64;
            for x in c.iter() {
                f[x] += shift;
            }
        }
        for v in f.iter_mut() {
            *v = v.clamp(0.0, 1.0);
        }
        worst = cliques
            .iter()
            .map(|c| (c.iter().map(|x| f[x]).sum::<f64>() - 1.0).abs())
            .fold(0.0, f64::max);
        if worst <= 1e-13 {
            break;
        }
    }
    worst
}

/// Descends mean clique entropy plus a spread penalty; returns a feasible
/// equientropic point or nothing.
fn continuous_search(n: usize, d: usize, cliques: &[Bits], seed: u64, iterations: usize) -> Option<Vec<f64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut f: Vec<f64> = (0..n).map(|_| rng.gen::<f64>().powi(3) * 2.0 / d as f64).collect();
    project(&mut f, cliques, 200);
    let penalty = 10.0;
    let mut step = 0.05;
    for _ in 0..iterations {
        let s: Vec<f64> = cliques.iter().map(|c| c.iter().map(|x| h(f[x])).sum()).collect();
        let mean = s.iter().sum::<f64>() / s.len() as f64;
        let mut grad = vec![0.0; n];
        for (c, &su) in cliques.iter().zip(&s) {
            let coef = (1.0 + 2.0 * penalty * (su - mean)) / cliques.len() as f64;
            for x in c.iter() {
                let dh = if f[x] > 1e-12 { -(f[x].ln() + 1.0) } else { 0.0 };
                grad[x] += coef * dh;
            }
        }
        let norm = grad.iter().map(|g| g * g).sum::<f64>().sqrt();
        if norm < 1e-14 {
            break;
        }
        for (v, g) in f.iter_mut().zip(&grad) {
            *v -= step * g / norm;
        }
        project(&mut f, cliques, 200);
        step *= 0.995;
    }
    for v in f.iter_mut() {
        if *v < 1e-12 {
            *v = 0.0;
        }
    }
    if project(&mut f, cliques, 2000) > SUM_TOL {
        return None;
    }
    let s: Vec<f64> = cliques.iter().map(|c| c.iter().map(|x| h(f[x])).sum()).collect();
    let (lo, hi) = s
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), &x| (a.min(x), b.max(x)));
    (hi - lo <= EQUIENTROPY_TOL).then_some(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rays::Ray;

    fn basis(d: usize) -> Configuration {
        let rays = (0..d)
            .map(|i| {
                let mut v = vec![0i64; d];
                v[i] = 1;
                Ray::from_ints(&v).unwrap()
            })
            .collect();
        Configuration::new(rays).unwrap()
    }

    #[test]
    fn uniform_on_basis() {
        let b = basis(4);
        let f = ProbabilityWeight::uniform(4, 4);
        let r = entropy_report(&b, &f, 1e-12).unwrap();
        assert!(r.equientropic && r.exact);
        assert!((r.common_value.unwrap() - 4f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn basis_bound_is_zero() {
        let b = basis(3);
        let r = minimize_entropy(&b, MinimizeOptions::default()).unwrap();
        assert_eq!(r.bound, 0.0);
        assert_eq!(r.source, BoundSource::KsColouring);
    }

    #[test]
    fn invalid_weights() {
        let b = basis(2);
        let f = ProbabilityWeight::Float(vec![0.1, 0.1]);
        assert!(!validate_probability_weight(&b, &f).unwrap());
        assert!(matches!(
            entropy_report(&b, &f, 1e-9),
            Err(EntropyError::Invalid { .. })
        ));
        let short = ProbabilityWeight::Float(vec![1.0]);
        assert!(matches!(
            validate_probability_weight(&b, &short),
            Err(EntropyError::LengthMismatch { .. })
        ));
    }

    #[test]
    fn spec_extraction() {
        let b = basis(4);
        let v = vec![
            Rational64::new(1, 2),
            Rational64::new(1, 3),
            Rational64::new(1, 6),
            Rational64::zero(),
        ];
        let s = WeightSpec::from_weight(&b, &v);
        assert_eq!(s.gamma, 6);
        assert_eq!(s.numerators, vec![0, 1, 2, 3]);
        assert_eq!(s.multiplicities, vec![vec![1, 1, 1, 1]]);
    }

    #[test]
    fn zero_log_zero() {
        assert_eq!(h(0.0), 0.0);
        assert_eq!(h(1.0), 0.0);
    }
}
