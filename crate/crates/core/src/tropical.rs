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

//! Anticlique sections, tropical dimension and tropical subconfigurations.
//!
//! An anticlique section of a collection of `d`-cliques is a set of rays meeting
//! each clique exactly once that is independent in the full orthogonality graph.
//!
//! Tuple enumeration keeps, for the current prefix of cliques, the inclusion-minimal
//! "blocked" sets (rays orthogonal to some chosen ray) over all partial sections.
//! A further clique `U` extends none of them iff `U` lies inside their common
//! intersection, so the last clique of a tuple is tested with one subset check.

use std::collections::BTreeSet;
use std::sync::atomic::{AtomicU64, Ordering};

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::bits::Bits;
use crate::colouring::independent_transversal;
use crate::orthograph::{maximal_cliques, signature_in, Signature};
use crate::rays::Configuration;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TropicalError {
    #[error("collection member {index} is not a {dim}-clique of the configuration")]
    NotAMaximalClique { index: usize, dim: usize },
    #[error("empty clique collection")]
    EmptyCollection,
    #[error("orthogonal pair ({0}, {1}) lies in no maximal clique")]
    UncoveredPair(usize, usize),
}

/// `d`-cliques of a parent configuration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueCollection {
    pub cliques: Vec<Bits>,
}

impl CliqueCollection {
    pub fn new(parent: &Configuration, cliques: Vec<Bits>) -> Result<Self, TropicalError> {
        let d = parent.dim();
        for (index, c) in cliques.iter().enumerate() {
            let ok = c.len() == d
                && c.iter().all(|x| x < parent.len())
                && c.iter()
                    .all(|x| c.minus(&Bits::singleton(x)).is_subset(&parent.adjacency()[x]));
            if !ok {
                return Err(TropicalError::NotAMaximalClique { index, dim: d });
            }
        }
        Ok(CliqueCollection { cliques })
    }

    pub fn union(&self) -> Bits {
        self.cliques.iter().fold(Bits::EMPTY, |a, c| a | *c)
    }
}

/// A section of `collection`, or `None` if it admits none.
pub fn admits_anticlique_section(
    parent: &Configuration,
    collection: &CliqueCollection,
) -> Result<Option<Bits>, TropicalError> {
    if collection.cliques.is_empty() {
        return Err(TropicalError::EmptyCollection);
    }
    Ok(independent_transversal(parent.adjacency(), &collection.cliques))
}

/// Post-hoc check of a claimed section against raw adjacency.
pub fn is_section(parent: &Configuration, collection: &CliqueCollection, section: &Bits) -> bool {
    let rows = parent.adjacency();
    let independent = section.iter().all(|x| !rows[x].intersects(section));
    independent
        && collection.cliques.iter().all(|c| (*c & *section).len() == 1)
        && section.is_subset(&collection.union())
}

/// Checks that every orthogonal pair lies in some `d`-clique.
pub fn check_pair_coverage(config: &Configuration, cliques: &[Bits]) -> Result<(), TropicalError> {
    let mut covered: Vec<Bits> = vec![Bits::EMPTY; config.len()];
    for c in cliques {
        for x in c.iter() {
            covered[x] |= *c;
        }
    }
    for (i, (row, cov)) in config.adjacency().iter().zip(&covered).enumerate() {
        let missing = row.minus(cov).above(i);
        if let Some(j) = missing.first() {
            return Err(TropicalError::UncoveredPair(i, j));
        }
    }
    Ok(())
}

/// Which clique tuples a search visits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coverage {
    /// Every index-increasing tuple.
    Exhaustive,
    /// Tuples of pairwise disjoint cliques only, plus `samples` random overlapping tuples per size.
    DisjointPlusSample { samples: usize, seed: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TropicalWitness {
    /// Indices into the parent's [`maximal_cliques`] list, increasing.
    pub clique_indices: Vec<usize>,
    pub union: Bits,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TropicalDimension {
    pub n: usize,
    pub witnesses: Vec<TropicalWitness>,
    pub coverage: Coverage,
    /// Random overlapping tuples checked per size below `n` (and at `n`).
    pub sampled: Vec<(usize, usize)>,
}

/// Minimal blocked sets of partial sections after adding clique `c`.
fn extend_frontier(rows: &[Bits], frontier: &[Bits], c: &Bits) -> Vec<Bits> {
    let mut next: Vec<Bits> = Vec::new();
    for bl in frontier {
        for x in c.minus(bl).iter() {
            next.push(*bl | rows[x]);
        }
    }
    minimize(next)
}

fn minimize(mut sets: Vec<Bits>) -> Vec<Bits> {
    sets.sort_unstable_by_key(|s| s.len());
    sets.dedup();
    let mut keep: Vec<Bits> = Vec::with_capacity(sets.len());
    for s in sets {
        if !keep.iter().any(|k| k.is_subset(&s)) {
            keep.push(s);
        }
    }
    keep
}

struct TupleSearch<'a> {
    rows: &'a [Bits],
    cliques: &'a [Bits],
    /// `later[i]`: cliques with index above `i`, restricted to those disjoint from clique `i` when `disjoint`.
    later: Vec<Vec<usize>>,
    disjoint: bool,
    n: usize,
}

impl TupleSearch<'_> {
    fn run_from(&self, first: usize, on_witness: &mut dyn FnMut(&[usize])) {
        let mut tuple = vec![first];
        let frontier = extend_frontier(self.rows, &[Bits::EMPTY], &self.cliques[first]);
        let cand: Vec<usize> = self.later[first].clone();
        self.rec(&mut tuple, &frontier, &cand, on_witness);
    }

    fn rec(&self, tuple: &mut Vec<usize>, frontier: &[Bits], cand: &[usize], on_witness: &mut dyn FnMut(&[usize])) {
        if tuple.len() + 1 == self.n {
            let common = frontier.iter().fold(!Bits::EMPTY, |a, b| a & *b);
            if common.len() < self.cliques[0].len() {
                return;
            }
            for &c in cand {
                if self.cliques[c].is_subset(&common) {
                    tuple.push(c);
                    on_witness(tuple);
                    tuple.pop();
                }
            }
            return;
        }
        let need = self.n - tuple.len();
        if need == 2 {
            self.last_two(tuple, frontier, cand, on_witness);
            return;
        }
        for (pos, &c) in cand.iter().enumerate() {
            if cand.len() - pos < need {
                break;
            }
            let next = extend_frontier(self.rows, frontier, &self.cliques[c]);
            if next.is_empty() {
                // a shorter tuple already lacks a section; it is reported at its own size
                continue;
            }
            let rest: Vec<usize> = if self.disjoint {
                cand[pos + 1..]
                    .iter()
                    .copied()
                    .filter(|&o| !self.cliques[o].intersects(&self.cliques[c]))
                    .collect()
            } else {
                cand[pos + 1..].to_vec()
            };
            tuple.push(c);
            self.rec(tuple, &next, &rest, on_witness);
            tuple.pop();
        }
    }

    /// Intersection of the next frontier without building it: each partial
    /// `bl` extends through `x ∈ c \ bl` to `bl | rows[x]`, so it contributes
    /// `bl | ⋂ rows[x]`.
    fn last_two(
        &self,
        tuple: &mut Vec<usize>,
        frontier: &[Bits],
        cand: &[usize],
        on_witness: &mut dyn FnMut(&[usize]),
    ) {
        let d = self.cliques[0].len();
        for (pos, &c) in cand.iter().enumerate() {
            let clique = &self.cliques[c];
            let mut common = !Bits::EMPTY;
            let mut extends = false;
            for bl in frontier {
                let free = clique.minus(bl);
                if free.is_empty() {
                    continue;
                }
                extends = true;
                let meet = free.iter().fold(!Bits::EMPTY, |a, x| a & self.rows[x]);
                common &= *bl | meet;
                if common.len() < d {
                    break;
                }
            }
            if !extends || common.len() < d {
                continue;
            }
            tuple.push(c);
            for &o in &cand[pos + 1..] {
                let other = &self.cliques[o];
                if self.disjoint && other.intersects(clique) {
                    continue;
                }
                if other.is_subset(&common) {
                    tuple.push(o);
                    on_witness(tuple);
                    tuple.pop();
                }
            }
            tuple.pop();
        }
    }
}

/// Section-free `n`-tuples grouped by their smallest clique, so that long runs
/// can be split and resumed.
pub struct TupleEnumerator<'a> {
    search: TupleSearch<'a>,
}

impl<'a> TupleEnumerator<'a> {
    /// Tuples over `cliques` (pairwise disjoint ones only if `disjoint`).
    pub fn new(rows: &'a [Bits], cliques: &'a [Bits], n: usize, disjoint: bool) -> Self {
        let later = (0..cliques.len())
            .map(|i| {
                (i + 1..cliques.len())
                    .filter(|&j| !disjoint || !cliques[i].intersects(&cliques[j]))
                    .collect()
            })
            .collect();
        TupleEnumerator {
            search: TupleSearch {
                rows,
                cliques,
                later,
                disjoint,
                n,
            },
        }
    }

    pub fn firsts(&self) -> usize {
        self.search.cliques.len()
    }

    /// Index-increasing tuples starting at clique `first` that admit no section
    /// while all their proper prefixes do.
    pub fn from_first(&self, first: usize) -> Vec<Vec<usize>> {
        let mut found = Vec::new();
        if self.search.n >= 2 {
            self.search.run_from(first, &mut |t| found.push(t.to_vec()));
        }
        found
    }

    pub fn count_from_first(&self, first: usize) -> u64 {
        let mut count = 0u64;
        if self.search.n >= 2 {
            self.search.run_from(first, &mut |_| count += 1);
        }
        count
    }
}

/// All index-increasing `n`-tuples of `cliques` (pairwise disjoint ones only if
/// `disjoint`) that admit no section but whose proper prefixes do.
pub fn section_free_tuples(rows: &[Bits], cliques: &[Bits], n: usize, disjoint: bool) -> Vec<Vec<usize>> {
    let e = TupleEnumerator::new(rows, cliques, n, disjoint);
    let mut out: Vec<Vec<usize>> = (0..e.firsts())
        .into_par_iter()
        .flat_map_iter(|first| e.from_first(first))
        .collect();
    out.sort();
    out
}

/// Counts the tuples [`section_free_tuples`] would return without storing them.
pub fn count_section_free_tuples(rows: &[Bits], cliques: &[Bits], n: usize, disjoint: bool) -> u64 {
    let e = TupleEnumerator::new(rows, cliques, n, disjoint);
    let total = AtomicU64::new(0);
    (0..e.firsts()).into_par_iter().for_each(|first| {
        total.fetch_add(e.count_from_first(first), Ordering::Relaxed);
    });
    total.into_inner()
}

/// Random `n`-subsets of `0..cliques.len()`; returns those lacking a section.
pub fn sample_section_free(rows: &[Bits], cliques: &[Bits], n: usize, samples: usize, seed: u64) -> Vec<Vec<usize>> {
    if n > cliques.len() {
        return Vec::new();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (n as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    let tuples: Vec<Vec<usize>> = (0..samples)
        .map(|_| {
            let mut t = sample(&mut rng, cliques.len(), n).into_vec();
            t.sort_unstable();
            t
        })
        .collect();
    tuples
        .into_par_iter()
        .filter(|t| {
            let sel: Vec<Bits> = t.iter().map(|&i| cliques[i]).collect();
            independent_transversal(rows, &sel).is_none()
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TropicalOptions {
    pub max_n: usize,
    pub coverage: Coverage,
}

impl Default for TropicalOptions {
    fn default() -> Self {
        TropicalOptions {
            max_n: 6,
            coverage: Coverage::DisjointPlusSample {
                samples: 1000,
                seed: 0x5eed,
            },
        }
    }
}

/// Smallest `n <= max_n` with a section-free collection of `n` maximal cliques,
/// with every witness at that size (within the chosen coverage).
pub fn tropical_dimension(
    config: &Configuration,
    opts: TropicalOptions,
) -> Result<Option<TropicalDimension>, TropicalError> {
    let cliques = maximal_cliques(config);
    check_pair_coverage(config, &cliques)?;
    let rows = config.adjacency();
    let mut sampled = Vec::new();
    for n in 2..=opts.max_n.min(cliques.len()) {
        let mut tuples = match opts.coverage {
            Coverage::Exhaustive => section_free_tuples(rows, &cliques, n, false),
            Coverage::DisjointPlusSample { samples, seed } => {
                let mut t = section_free_tuples(rows, &cliques, n, true);
                let extra = sample_section_free(rows, &cliques, n, samples, seed);
                sampled.push((n, samples));
                t.extend(extra);
                t.sort();
                t.dedup();
                t
            }
        };
        if !tuples.is_empty() {
            let witnesses = tuples
                .drain(..)
                .map(|t| TropicalWitness {
                    union: t.iter().fold(Bits::EMPTY, |a, &i| a | cliques[i]),
                    clique_indices: t,
                })
                .collect();
            return Ok(Some(TropicalDimension {
                n,
                witnesses,
                coverage: opts.coverage,
                sampled,
            }));
        }
    }
    Ok(None)
}

/// A distinct union of a section-free collection at the tropical dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TropicalSubconfiguration {
    /// Ray indices into the parent, increasing.
    pub indices: Vec<usize>,
    pub configuration: Configuration,
    /// Number of witness tuples with this union.
    pub multiplicity: usize,
}

/// Distinct witness unions, ordered lexicographically by their sorted index lists.
pub fn enumerate_tropical_subconfigurations(
    config: &Configuration,
    dim: &TropicalDimension,
) -> Vec<TropicalSubconfiguration> {
    let mut unions: std::collections::BTreeMap<Vec<usize>, usize> = Default::default();
    for w in &dim.witnesses {
        *unions.entry(w.union.to_vec()).or_default() += 1;
    }
    unions
        .into_iter()
        .map(|(indices, multiplicity)| TropicalSubconfiguration {
            configuration: config.induced_by_indices(&indices),
            indices,
            multiplicity,
        })
        .collect()
}

/// Tropical subconfigurations of the built-in 64-ray configuration (disjoint-tuple search).
pub fn tropical_subconfigurations_of_m() -> Vec<TropicalSubconfiguration> {
    let m = crate::datasets::saturated_64();
    let cliques = maximal_cliques(&m);
    let tuples = section_free_tuples(m.adjacency(), &cliques, 6, true);
    let dim = TropicalDimension {
        n: 6,
        witnesses: tuples
            .into_iter()
            .map(|t| TropicalWitness {
                union: t.iter().fold(Bits::EMPTY, |a, &i| a | cliques[i]),
                clique_indices: t,
            })
            .collect(),
        coverage: Coverage::DisjointPlusSample { samples: 0, seed: 0 },
        sampled: Vec::new(),
    };
    enumerate_tropical_subconfigurations(&m, &dim)
}

/// Distinct signatures of a family of subconfigurations of `parent`.
pub fn distinct_signatures(parent: &Configuration, subs: &[TropicalSubconfiguration]) -> BTreeSet<Signature> {
    subs.iter()
        .map(|s| signature_in(parent.adjacency(), Bits::from_indices(s.indices.iter().copied())))
        .collect()
}
