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

//! Independent oracles: plain loops over coordinates and index lists, sharing
//! nothing with the library beyond the ray data itself.

#![allow(dead_code)]

use ksconf::{Configuration, Ray};

/// Hermitian inner product `Σ conj(a_k) b_k == 0`, straight from coordinates.
pub fn orthogonal(a: &Ray, b: &Ray) -> bool {
    let (mut re, mut im) = (0i128, 0i128);
    for (x, y) in a.coords().iter().zip(b.coords()) {
        let (xr, xi, yr, yi) = (x.re as i128, x.im as i128, y.re as i128, y.im as i128);
        re += xr * yr + xi * yi;
        im += xr * yi - xi * yr;
    }
    re == 0 && im == 0
}

pub fn adjacency(c: &Configuration) -> Vec<Vec<bool>> {
    let r = c.rays();
    (0..r.len())
        .map(|i| (0..r.len()).map(|j| i != j && orthogonal(&r[i], &r[j])).collect())
        .collect()
}

/// All `k`-subsets of mutually adjacent vertices, increasing.
pub fn cliques(adj: &[Vec<bool>], k: usize) -> Vec<Vec<usize>> {
    fn go(adj: &[Vec<bool>], k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..adj.len() {
            if cur.iter().all(|&u| adj[u][v]) {
                cur.push(v);
                go(adj, k, v + 1, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(adj, k, 0, &mut Vec::new(), &mut out);
    out
}

/// Number of `k`-subsets with no adjacent pair.
pub fn anticlique_count(adj: &[Vec<bool>], k: usize) -> u64 {
    fn go(adj: &[Vec<bool>], k: usize, start: usize, cur: &mut Vec<usize>) -> u64 {
        if cur.len() == k {
            return 1;
        }
        let mut n = 0;
        for v in start..adj.len() {
            if cur.iter().all(|&u| !adj[u][v]) {
                cur.push(v);
                n += go(adj, k, v + 1, cur);
                cur.pop();
            }
        }
        n
    }
    go(adj, k, 0, &mut Vec::new())
}

/// KS-colourability by enumerating every subset of at most 20 rays: a KS colouring
/// is a set of pairwise non-orthogonal rays meeting each `d`-clique exactly once.
pub fn naive_colourable(c: &Configuration) -> bool {
    let n = c.len();
    assert!(n <= 20, "oracle is exponential");
    let adj = adjacency(c);
    let masks: Vec<u32> = cliques(&adj, c.dim())
        .iter()
        .map(|cl| cl.iter().fold(0u32, |m, &i| m | 1 << i))
        .collect();
    let nbr: Vec<u32> = (0..n)
        .map(|i| (0..n).filter(|&j| adj[i][j]).fold(0u32, |m, j| m | 1 << j))
        .collect();
    (0u32..1 << n).any(|s| {
        let independent = (0..n).all(|i| s >> i & 1 == 0 || nbr[i] & s == 0);
        independent && masks.iter().all(|m| (m & s).count_ones() == 1)
    })
}

/// Whether some choice of one ray per clique is pairwise non-orthogonal.
pub fn has_section(adj: &[Vec<bool>], cols: &[Vec<usize>]) -> bool {
    fn go(adj: &[Vec<bool>], cols: &[Vec<usize>], i: usize, chosen: &mut Vec<usize>) -> bool {
        if i == cols.len() {
            return true;
        }
        for &v in &cols[i] {
            // two distinct rays of one clique are orthogonal, so independence alone
            // forces each clique to be met exactly once
            if chosen.iter().all(|&u| u == v || !adj[u][v]) {
                chosen.push(v);
                if go(adj, cols, i + 1, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    go(adj, cols, 0, &mut Vec::new())
}

/// Real 2^n × 2^n matrix of a Pauli word; letter `k` acts on bit `k` of the basis index.
pub fn pauli_matrix(word: &str) -> Vec<Vec<i64>> {
    let single = |ch: char| -> [[i64; 2]; 2] {
        match ch {
            'I' => [[1, 0], [0, 1]],
            'X' => [[0, 1], [1, 0]],
            'Y' => [[0, 1], [-1, 0]],
            'Z' => [[1, 0], [0, -1]],
            _ => panic!("bad letter {ch}"),
        }
    };
    let letters: Vec<[[i64; 2]; 2]> = word.chars().map(single).collect();
    let dim = 1usize << letters.len();
    (0..dim)
        .map(|r| {
            (0..dim)
                .map(|c| {
                    letters
                        .iter()
                        .enumerate()
                        .map(|(k, m)| m[r >> k & 1][c >> k & 1])
                        .product()
                })
                .collect()
        })
        .collect()
}

pub fn matmul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect())
        .collect()
}

/// `Some(±1)` if `m = ±I`.
pub fn scalar_sign(m: &[Vec<i64>]) -> Option<i64> {
    let s = m[0][0];
    let ok = (s == 1 || s == -1)
        && m.iter()
            .enumerate()
            .all(|(i, row)| row.iter().enumerate().all(|(j, &x)| x == if i == j { s } else { 0 }));
    ok.then_some(s)
}
