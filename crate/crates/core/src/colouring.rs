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

//! KS colourings, partition-compatible colourings, criticality and signature-guided
//! reduction to critical subconfigurations.
//!
//! A KS colouring is the indicator of an anticlique that meets every `d`-clique.
//! Because the members of a clique are pairwise orthogonal, an anticlique meets a
//! clique at most once, so "meets every `d`-clique" already means "exactly once".
//! The search is therefore an independent-transversal search over the `d`-cliques.

use std::collections::{HashMap, HashSet};

use rayon::prelude::*;
use thiserror::Error;

use crate::bits::Bits;
use crate::orthograph::{cliques_of_size_in, signature_in, Signature};
use crate::rays::Configuration;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColouringError {
    #[error("invalid partition {0:?}: need s >= 2 positive non-increasing parts summing to the dimension {1}")]
    InvalidPartition(Vec<usize>, usize),
    #[error("colouring has {found} values for a configuration of {expected} rays")]
    LengthMismatch { expected: usize, found: usize },
    #[error("configuration admits a KS colouring; nothing to reduce")]
    Colourable,
}

/// A map from rays to colours `0..s` together with the partition it is meant to honour.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Colouring {
    pub values: Vec<u8>,
    pub partition: Vec<usize>,
}

impl Colouring {
    /// Colour 1 on `set`, 0 elsewhere.
    pub fn indicator(n: usize, set: &[usize], partition: Vec<usize>) -> Colouring {
        let mut values = vec![0u8; n];
        for &i in set {
            values[i] = 1;
        }
        Colouring { values, partition }
    }

    /// Rays carrying colour `c`.
    pub fn class(&self, c: u8) -> Vec<usize> {
        self.values
            .iter()
            .enumerate()
            .filter(|(_, &v)| v == c)
            .map(|(i, _)| i)
            .collect()
    }
}

/// Searches for a set meeting every clique of `cliques` exactly once that is an
/// anticlique for `rows`. Cliques are visited fail-first (fewest open candidates).
pub fn independent_transversal(rows: &[Bits], cliques: &[Bits]) -> Option<Bits> {
    let open: Vec<usize> = (0..cliques.len()).collect();
    transversal_rec(rows, cliques, Bits::EMPTY, Bits::EMPTY, &open)
}

fn transversal_rec(rows: &[Bits], cliques: &[Bits], chosen: Bits, blocked: Bits, open: &[usize]) -> Option<Bits> {
    let mut best: Option<(usize, Bits)> = None;
    for &c in open {
        let avail = cliques[c].minus(&blocked);
        let n = avail.len();
        if n == 0 {
            return None;
        }
        if best.is_none_or(|(_, b)| n < b.len()) {
            best = Some((c, avail));
            if n == 1 {
                break;
            }
        }
    }
    let Some((_, avail)) = best else {
        return Some(chosen);
    };
    for x in avail.iter() {
        let mut ch = chosen;
        ch.insert(x);
        let bl = blocked | rows[x];
        let rest: Vec<usize> = open.iter().copied().filter(|&c| !cliques[c].contains(x)).collect();
        if let Some(found) = transversal_rec(rows, cliques, ch, bl, &rest) {
            return Some(found);
        }
    }
    None
}

/// Precomputed `d`-cliques of a configuration, reused across subconfiguration queries.
#[derive(Clone, Debug)]
pub struct CliqueIndex<'a> {
    config: &'a Configuration,
    cliques: Vec<Bits>,
}

impl<'a> CliqueIndex<'a> {
    pub fn new(config: &'a Configuration) -> Self {
        let cliques = cliques_of_size_in(config.adjacency(), config.all(), config.dim());
        CliqueIndex { config, cliques }
    }

    pub fn config(&self) -> &'a Configuration {
        self.config
    }

    pub fn cliques(&self) -> &[Bits] {
        &self.cliques
    }

    /// `d`-cliques of the subconfiguration on `mask`.
    pub fn within(&self, mask: &Bits) -> Vec<Bits> {
        self.cliques.iter().copied().filter(|c| c.is_subset(mask)).collect()
    }

    /// A KS colouring's 1-set for the subconfiguration on `mask`, if one exists.
    pub fn ks_witness_in(&self, mask: &Bits) -> Option<Bits> {
        independent_transversal(self.config.adjacency(), &self.within(mask))
    }

    pub fn is_colourable_in(&self, mask: &Bits) -> bool {
        self.ks_witness_in(mask).is_some()
    }

    /// KS configuration on `mask` none of whose single-ray deletions is KS.
    pub fn is_critical_in(&self, mask: &Bits) -> bool {
        if self.is_colourable_in(mask) {
            return false;
        }
        mask.to_vec().into_par_iter().all(|x| {
            let mut m = *mask;
            m.remove(x);
            self.is_colourable_in(&m)
        })
    }
}

/// A KS colouring (`partition = (d-1, 1)`, colour 1 marks the "1" rays), or `None`
/// if the configuration is a KS configuration.
pub fn find_ks_colouring(config: &Configuration) -> Option<Colouring> {
    let idx = CliqueIndex::new(config);
    idx.ks_witness_in(&config.all()).map(|ones| {
        let set = ones.to_vec();
        Colouring::indicator(config.len(), &set, vec![config.dim() - 1, 1])
    })
}

pub fn is_ks_configuration(config: &Configuration) -> bool {
    find_ks_colouring(config).is_none()
}

pub fn is_critical(config: &Configuration) -> bool {
    CliqueIndex::new(config).is_critical_in(&config.all())
}

/// Literal check of both KS conditions: no orthogonal pair is coloured `(1, 1)` and
/// every `d`-clique contains exactly one ray coloured 1.
pub fn is_ks_colouring(config: &Configuration, values: &[u8]) -> bool {
    if values.len() != config.len() || values.iter().any(|&v| v > 1) {
        return false;
    }
    for i in 0..config.len() {
        for j in config.adjacency()[i].above(i).iter() {
            if values[i] == 1 && values[j] == 1 {
                return false;
            }
        }
    }
    cliques_of_size_in(config.adjacency(), config.all(), config.dim())
        .iter()
        .all(|c| c.iter().filter(|&x| values[x] == 1).count() == 1)
}

fn validate_partition(partition: &[usize], d: usize) -> Result<(), ColouringError> {
    let ok = partition.len() >= 2
        && partition.len() <= u8::MAX as usize
        && partition.iter().all(|&p| p > 0)
        && partition.windows(2).all(|w| w[0] >= w[1])
        && partition.iter().sum::<usize>() == d;
    if ok {
        Ok(())
    } else {
        Err(ColouringError::InvalidPartition(partition.to_vec(), d))
    }
}

const UNSET: u8 = u8::MAX;

struct PartitionSearch<'a> {
    partition: &'a [usize],
    cliques: &'a [Bits],
    ray_cliques: Vec<Vec<usize>>,
    values: Vec<u8>,
    counts: Vec<Vec<usize>>,
    unassigned: Vec<usize>,
}

impl PartitionSearch<'_> {
    fn pick(&self) -> Option<usize> {
        let c = (0..self.cliques.len())
            .filter(|&c| self.unassigned[c] > 0)
            .min_by_key(|&c| self.unassigned[c])?;
        self.cliques[c].iter().find(|&x| self.values[x] == UNSET)
    }

    fn fits(&self, x: usize, colour: usize) -> bool {
        self.ray_cliques[x]
            .iter()
            .all(|&c| self.counts[c][colour] < self.partition[colour])
    }

    fn set(&mut self, x: usize, colour: usize) {
        self.values[x] = colour as u8;
        for &c in &self.ray_cliques[x] {
            self.counts[c][colour] += 1;
            self.unassigned[c] -= 1;
        }
    }

    fn unset(&mut self, x: usize, colour: usize) {
        self.values[x] = UNSET;
        for &c in &self.ray_cliques[x] {
            self.counts[c][colour] -= 1;
            self.unassigned[c] += 1;
        }
    }

    fn solve(&mut self) -> bool {
        let Some(x) = self.pick() else {
            return true;
        };
        for colour in 0..self.partition.len() {
            if self.fits(x, colour) {
                self.set(x, colour);
                if self.solve() {
                    return true;
                }
                self.unset(x, colour);
            }
        }
        false
    }
}

/// A colouring whose colour counts on every `d`-clique equal `partition`, or `None`
/// after exhausting the search.
pub fn find_partition_colouring(
    config: &Configuration,
    partition: &[usize],
) -> Result<Option<Colouring>, ColouringError> {
    validate_partition(partition, config.dim())?;
    let cliques = cliques_of_size_in(config.adjacency(), config.all(), config.dim());
    let mut ray_cliques = vec![Vec::new(); config.len()];
    for (c, clique) in cliques.iter().enumerate() {
        for x in clique.iter() {
            ray_cliques[x].push(c);
        }
    }
    let mut search = PartitionSearch {
        partition,
        cliques: &cliques,
        ray_cliques,
        values: vec![UNSET; config.len()],
        counts: vec![vec![0; partition.len()]; cliques.len()],
        unassigned: vec![config.dim(); cliques.len()],
    };
    if !search.solve() {
        return Ok(None);
    }
    let values = search
        .values
        .into_iter()
        .map(|v| if v == UNSET { 0 } else { v })
        .collect();
    Ok(Some(Colouring {
        values,
        partition: partition.to_vec(),
    }))
}

/// True iff every `d`-clique carries exactly `partition[α]` rays of colour `α`.
pub fn verify_partition_colouring(config: &Configuration, colouring: &Colouring) -> Result<bool, ColouringError> {
    if colouring.values.len() != config.len() {
        return Err(ColouringError::LengthMismatch {
            expected: config.len(),
            found: colouring.values.len(),
        });
    }
    let s = colouring.partition.len();
    if colouring.values.iter().any(|&v| v as usize >= s) {
        return Ok(false);
    }
    let cliques = cliques_of_size_in(config.adjacency(), config.all(), config.dim());
    Ok(cliques.iter().all(|c| {
        let mut counts = vec![0usize; s];
        for x in c.iter() {
            counts[colouring.values[x] as usize] += 1;
        }
        counts == colouring.partition
    }))
}

/// One pass of the reduction loop.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionStep {
    /// Distinct one-ray deletions (over the whole frontier) that stay KS.
    pub survivors: usize,
    /// Distinct signatures among the survivors.
    pub classes: usize,
    /// First survivor of each signature class, as index sets into the input.
    pub representatives: Vec<Bits>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalReport {
    pub steps: Vec<ReductionStep>,
    /// Critical subconfigurations reached, as index sets into the input, in discovery order.
    pub critical: Vec<Bits>,
    /// The critical configurations left on the last frontier.
    pub terminal: Vec<Bits>,
}

impl CriticalReport {
    pub fn iterations(&self) -> usize {
        self.steps.len()
    }

    pub fn configurations(&self, input: &Configuration) -> Vec<Configuration> {
        self.critical.iter().map(|m| input.induced(m)).collect()
    }
}

/// Deletes rays one at a time, keeping only deletions that remain KS and only the
/// first representative (smallest deleted index, frontier order) of each signature.
/// Stops once every configuration on the frontier is critical.
pub fn critical_reduce(config: &Configuration) -> Result<CriticalReport, ColouringError> {
    let idx = CliqueIndex::new(config);
    let rows = config.adjacency();
    if idx.is_colourable_in(&config.all()) {
        return Err(ColouringError::Colourable);
    }
    let mut frontier = vec![config.all()];
    let mut steps = Vec::new();
    let mut critical: Vec<Bits> = Vec::new();
    loop {
        let per_parent: Vec<Vec<Bits>> = frontier
            .iter()
            .map(|parent| {
                parent
                    .to_vec()
                    .into_par_iter()
                    .filter_map(|x| {
                        let mut m = *parent;
                        m.remove(x);
                        (!idx.is_colourable_in(&m)).then_some(m)
                    })
                    .collect()
            })
            .collect();
        let mut seen = HashSet::new();
        let mut survivors = Vec::new();
        for (parent, kids) in frontier.iter().zip(per_parent) {
            if kids.is_empty() && !critical.contains(parent) {
                critical.push(*parent);
            }
            for k in kids {
                if seen.insert(k) {
                    survivors.push(k);
                }
            }
        }
        if survivors.is_empty() {
            return Ok(CriticalReport {
                steps,
                critical,
                terminal: frontier,
            });
        }
        let sigs: Vec<Signature> = survivors.par_iter().map(|m| signature_in(rows, *m)).collect();
        let mut classes: HashMap<Signature, Bits> = HashMap::new();
        let mut representatives = Vec::new();
        for (m, s) in survivors.iter().zip(sigs) {
            classes.entry(s).or_insert_with(|| {
                representatives.push(*m);
                *m
            });
        }
        steps.push(ReductionStep {
            survivors: survivors.len(),
            classes: representatives.len(),
            representatives: representatives.clone(),
        });
        frontier = representatives;
    }
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
    fn basis_colouring_has_one_ray() {
        let b = basis(8);
        let c = find_ks_colouring(&b).unwrap();
        assert_eq!(c.class(1).len(), 1);
        assert!(is_ks_colouring(&b, &c.values));
        assert!(!is_ks_configuration(&b));
        assert!(!is_critical(&b));
    }

    #[test]
    fn basis_four_four() {
        let b = basis(8);
        let c = find_partition_colouring(&b, &[4, 4]).unwrap().unwrap();
        assert_eq!(c.class(1).len(), 4);
        assert!(verify_partition_colouring(&b, &c).unwrap());
    }

    #[test]
    fn bad_partitions() {
        let b = basis(8);
        for p in [vec![8], vec![3, 5], vec![4, 3], vec![6, 2, 0]] {
            assert!(matches!(
                find_partition_colouring(&b, &p),
                Err(ColouringError::InvalidPartition(..))
            ));
        }
    }

    #[test]
    fn verify_rejects_wrong_length() {
        let b = basis(8);
        let c = Colouring::indicator(3, &[0], vec![7, 1]);
        assert!(verify_partition_colouring(&b, &c).is_err());
    }

    #[test]
    fn reduce_rejects_colourable() {
        assert_eq!(critical_reduce(&basis(4)), Err(ColouringError::Colourable));
    }

    #[test]
    fn transversal_on_disjoint_triangles() {
        // two disjoint 2-cliques {0,1}, {2,3} where 0~2,0~3,1~2 are extra edges;
        // the only independent transversal is {1, 3}
        let mut rows = vec![Bits::EMPTY; 4];
        let mut edge = |a: usize, b: usize| {
            rows[a].insert(b);
            rows[b].insert(a);
        };
        edge(0, 1);
        edge(2, 3);
        edge(0, 2);
        edge(0, 3);
        edge(1, 2);
        let cliques = [Bits::from_indices([0, 1]), Bits::from_indices([2, 3])];
        assert_eq!(
            independent_transversal(&rows, &cliques),
            Some(Bits::from_indices([1, 3]))
        );
        rows[1].insert(3);
        rows[3].insert(1);
        assert_eq!(independent_transversal(&rows, &cliques), None);
    }
}
