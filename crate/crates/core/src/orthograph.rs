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

//! Cliques and anticliques of the orthogonality graph.
//!
//! Every routine here is a thin wrapper around one kernel: ordered backtracking
//! over index-increasing extensions, with the candidate set carried as a bitset
//! and narrowed by intersecting adjacency rows. Anticliques reuse the kernel on
//! the complement rows. The kernels take `(rows, mask)` so that subconfigurations
//! can be analysed in place without rebuilding a [`Configuration`].

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;

use crate::bits::Bits;
use crate::rays::Configuration;

/// Clique and anticlique counts, `cliques[k - 1] = #k-cliques`, both truncated
/// after the last nonzero entry.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Signature {
    pub cliques: Vec<u64>,
    pub anticliques: Vec<u64>,
}

impl Signature {
    /// Number of `k`-cliques (`k >= 1`).
    pub fn clique(&self, k: usize) -> u64 {
        k.checked_sub(1).and_then(|i| self.cliques.get(i).copied()).unwrap_or(0)
    }

    /// Number of `k`-anticliques (`k >= 1`).
    pub fn anticlique(&self, k: usize) -> u64 {
        k.checked_sub(1)
            .and_then(|i| self.anticliques.get(i).copied())
            .unwrap_or(0)
    }
}

fn join(v: &[u64]) -> String {
    v.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
}

/// Two comma-separated rows: clique counts, then anticlique counts.
impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", join(&self.cliques))?;
        write!(f, "{}", join(&self.anticliques))
    }
}

/// Complement rows restricted to `mask` (no loops).
pub fn complement_rows(rows: &[Bits], mask: Bits) -> Vec<Bits> {
    rows.iter()
        .enumerate()
        .map(|(i, r)| {
            let mut c = mask.minus(r);
            c.remove(i);
            c
        })
        .collect()
}

fn count_rec(rows: &[Bits], mut cand: Bits, depth: usize, max_k: usize, counts: &mut [u64]) {
    while let Some(v) = cand.pop_first() {
        counts[depth] += 1;
        if depth + 1 < max_k {
            let next = cand & rows[v];
            if !next.is_empty() {
                count_rec(rows, next, depth + 1, max_k, counts);
            }
        }
    }
}

/// Counts cliques of every size `1..=max_k` inside `mask`; `out[k - 1]` is the count for `k`.
pub fn clique_counts_in(rows: &[Bits], mask: Bits, max_k: usize) -> Vec<u64> {
    if max_k == 0 {
        return Vec::new();
    }
    let firsts = mask.to_vec();
    firsts
        .par_iter()
        .map(|&v| {
            let mut counts = vec![0u64; max_k];
            counts[0] = 1;
            if max_k > 1 {
                let next = mask.above(v) & rows[v];
                count_rec(rows, next, 1, max_k, &mut counts);
            }
            counts
        })
        .reduce(
            || vec![0u64; max_k],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        )
}

fn truncate(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// Signature of the subgraph induced on `mask`.
pub fn signature_in(rows: &[Bits], mask: Bits) -> Signature {
    let n = mask.len();
    let cliques = truncate(clique_counts_in(rows, mask, n));
    let comp = complement_rows(rows, mask);
    let anticliques = truncate(clique_counts_in(&comp, mask, n));
    Signature { cliques, anticliques }
}

/// Number of `k`-subsets of pairwise orthogonal rays.
pub fn count_cliques(config: &Configuration, k: usize) -> u64 {
    if k == 0 {
        return 0;
    }
    clique_counts_in(config.adjacency(), config.all(), k)[k - 1]
}

/// Number of `k`-subsets of pairwise non-orthogonal rays.
pub fn count_anticliques(config: &Configuration, k: usize) -> u64 {
    if k == 0 {
        return 0;
    }
    let comp = complement_rows(config.adjacency(), config.all());
    clique_counts_in(&comp, config.all(), k)[k - 1]
}

pub fn signature(config: &Configuration) -> Signature {
    signature_in(config.adjacency(), config.all())
}

fn list_rec(rows: &[Bits], clique: Bits, mut cand: Bits, need: usize, out: &mut Vec<Bits>) {
    if need == 0 {
        out.push(clique);
        return;
    }
    while cand.len() >= need {
        let v = cand.pop_first().expect("nonempty");
        let mut c = clique;
        c.insert(v);
        list_rec(rows, c, cand & rows[v], need - 1, out);
    }
}

/// All `k`-cliques inside `mask`, in lexicographic order of their sorted members.
pub fn cliques_of_size_in(rows: &[Bits], mask: Bits, k: usize) -> Vec<Bits> {
    let mut out = Vec::new();
    if k > 0 {
        list_rec(rows, Bits::EMPTY, mask, k, &mut out);
    }
    out
}

/// All cliques of size `d` (the dimension), lexicographically ordered.
pub fn maximal_cliques(config: &Configuration) -> Vec<Bits> {
    cliques_of_size_in(config.adjacency(), config.all(), config.dim())
}

/// Number of `d`-cliques.
pub fn capacity(config: &Configuration) -> usize {
    maximal_cliques(config).len()
}

/// Number of the given `d`-cliques that lie inside `set`.
pub fn capacity_within(cliques: &[Bits], set: &Bits) -> usize {
    cliques.iter().filter(|c| c.is_subset(set)).count()
}

/// Outcome of the saturation check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Saturation {
    Saturated,
    /// A clique of size `< d` that no ray of the configuration extends.
    Blocked(Vec<usize>),
}

impl Saturation {
    pub fn is_saturated(&self) -> bool {
        matches!(self, Saturation::Saturated)
    }
}

fn saturation_rec(rows: &[Bits], clique: &mut Vec<usize>, cand: Bits, common: Bits, d: usize) -> bool {
    if clique.len() >= d {
        return true;
    }
    if common.is_empty() {
        return false;
    }
    let mut cand = cand;
    while let Some(v) = cand.pop_first() {
        clique.push(v);
        if !saturation_rec(rows, clique, cand & rows[v], common & rows[v], d) {
            return false;
        }
        clique.pop();
    }
    true
}

fn saturation_in(rows: &[Bits], mask: Bits, d: usize) -> Saturation {
    let mut clique = Vec::with_capacity(d);
    let mut cand = mask;
    while let Some(v) = cand.pop_first() {
        clique.push(v);
        let row = rows[v] & mask;
        if !saturation_rec(rows, &mut clique, cand & row, row, d) {
            return Saturation::Blocked(clique);
        }
        clique.pop();
    }
    Saturation::Saturated
}

/// Checks that every clique of size `1..d` extends by a ray of the configuration.
pub fn is_saturated(config: &Configuration) -> Saturation {
    saturation_in(config.adjacency(), config.all(), config.dim())
}

/// Saturation of the subconfiguration on `mask`.
pub fn is_saturated_in(config: &Configuration, mask: Bits) -> Saturation {
    saturation_in(config.adjacency(), mask, config.dim())
}

/// True iff every `(d - 1)`-clique lies in exactly one `d`-clique.
pub fn steiner_check(config: &Configuration) -> bool {
    let d = config.dim();
    if d < 2 {
        return true;
    }
    let rows = config.adjacency();
    cliques_of_size_in(rows, config.all(), d - 1).into_par_iter().all(|w| {
        let common = w.iter().fold(config.all(), |acc, v| acc & rows[v]);
        common.len() == 1
    })
}

/// Distinct values of `#(U ∩ U')` over unordered pairs of distinct cliques.
pub fn pairwise_intersection_sizes(cliques: &[Bits]) -> BTreeSet<usize> {
    let mut out = BTreeSet::new();
    for (i, a) in cliques.iter().enumerate() {
        for b in &cliques[i + 1..] {
            out.insert((*a & *b).len());
        }
    }
    out
}

/// Graph-theoretic maximal cliques: cliques no vertex of `mask` extends.
pub fn inclusion_maximal_cliques(rows: &[Bits], mask: Bits) -> Vec<Bits> {
    fn rec(rows: &[Bits], r: Bits, mut p: Bits, mut x: Bits, out: &mut Vec<Bits>) {
        if p.is_empty() {
            if x.is_empty() {
                out.push(r);
            }
            return;
        }
        let pivot = (p | x).iter().max_by_key(|&u| (p & rows[u]).len()).expect("nonempty");
        let todo = p.minus(&rows[pivot]);
        for v in todo.iter() {
            let mut r2 = r;
            r2.insert(v);
            rec(rows, r2, p & rows[v], x & rows[v], out);
            p.remove(v);
            x.insert(v);
        }
    }
    let mut out = Vec::new();
    rec(rows, Bits::EMPTY, mask, Bits::EMPTY, &mut out);
    out
}
