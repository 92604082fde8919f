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

//! Real Pauli words, parity tuples, joint eigenrays and parity proofs.
//!
//! Single-qubit matrices are `I`, `X`, `Y = [[0,1],[-1,0]]` and `Z`; with this
//! real `Y` every product of words is a word up to a sign in `{+1, -1}`.
//! Letter `k` of a word acts on bit `k` of the basis index.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use thiserror::Error;

use crate::rays::{Configuration, GaussianInt, Ray, RayError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PauliError {
    #[error("invalid Pauli letter {0:?} (expected I, X, Y or Z)")]
    BadLetter(char),
    #[error("empty Pauli word")]
    Empty,
    #[error("qubit counts differ: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("{0} and {1} do not commute")]
    NotCommuting(String, String),
    #[error("{0} has an odd number of Y letters and squares to -1")]
    OddY(String),
    #[error("the words generate a group of rank {rank}, expected {qubits}")]
    NotMaximal { rank: usize, qubits: usize },
    #[error("the words generate -1")]
    ContainsMinusIdentity,
    #[error("edge {edge}: product of its vertices is not a multiple of the identity")]
    NotScalar { edge: usize },
    #[error("edge {edge}: declared sign {declared:+} but the product is {actual:+}")]
    SignMismatch { edge: usize, declared: i8, actual: i8 },
    #[error("edge {edge} refers to vertex {vertex}, which does not exist")]
    BadVertex { edge: usize, vertex: usize },
    #[error(transparent)]
    Ray(#[from] RayError),
}

const LETTERS: [char; 4] = ['I', 'X', 'Y', 'Z'];

/// `(sign, code)` of the product of single-qubit letters `a·b`.
const MUL: [[(i8, u8); 4]; 4] = [
    [(1, 0), (1, 1), (1, 2), (1, 3)],
    [(1, 1), (1, 0), (-1, 3), (-1, 2)],
    [(1, 2), (1, 3), (-1, 0), (-1, 1)],
    [(1, 3), (1, 2), (1, 1), (1, 0)],
];

/// A tensor product of `I`, `X`, `Y`, `Z`; letter codes 0..=3.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PauliWord {
    letters: Vec<u8>,
}

impl PauliWord {
    pub fn new(letters: Vec<u8>) -> Result<Self, PauliError> {
        if letters.is_empty() {
            return Err(PauliError::Empty);
        }
        if let Some(&bad) = letters.iter().find(|&&c| c > 3) {
            return Err(PauliError::BadLetter(char::from(b'0' + bad.min(9))));
        }
        Ok(PauliWord { letters })
    }

    pub fn identity(n: usize) -> Self {
        PauliWord { letters: vec![0; n] }
    }

    /// Decodes `α = Σ code_k·4^k`.
    pub fn from_index(alpha: usize, n: usize) -> Self {
        PauliWord {
            letters: (0..n).map(|k| ((alpha >> (2 * k)) & 3) as u8).collect(),
        }
    }

    pub fn index(&self) -> usize {
        self.letters
            .iter()
            .enumerate()
            .map(|(k, &c)| (c as usize) << (2 * k))
            .sum()
    }

    pub fn qubits(&self) -> usize {
        self.letters.len()
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn is_identity(&self) -> bool {
        self.letters.iter().all(|&c| c == 0)
    }

    pub fn y_count(&self) -> usize {
        self.letters.iter().filter(|&&c| c == 2).count()
    }

    /// Symplectic `(x, z)` bit vectors.
    fn symplectic(&self) -> (u64, u64) {
        let mut x = 0u64;
        let mut z = 0u64;
        for (k, &c) in self.letters.iter().enumerate() {
            if c == 1 || c == 2 {
                x |= 1 << k;
            }
            if c == 2 || c == 3 {
                z |= 1 << k;
            }
        }
        (x, z)
    }

    /// Image of basis vector `j` as `(sign, index)`.
    pub fn apply_basis(&self, j: usize) -> (i8, usize) {
        let mut sign = 1i8;
        let mut out = j;
        for (k, &c) in self.letters.iter().enumerate() {
            let b = (j >> k) & 1;
            match c {
                1 => out ^= 1 << k,
                2 => {
                    out ^= 1 << k;
                    if b == 0 {
                        sign = -sign;
                    }
                }
                3 if b == 1 => sign = -sign,
                _ => {}
            }
        }
        (sign, out)
    }

    /// `self · v` for a vector of length `2^n`.
    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        let mut out = vec![0i64; v.len()];
        for (j, &x) in v.iter().enumerate() {
            if x != 0 {
                let (s, i) = self.apply_basis(j);
                out[i] += s as i64 * x;
            }
        }
        out
    }
}

impl fmt::Display for PauliWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &c in &self.letters {
            write!(f, "{}", LETTERS[c as usize])?;
        }
        Ok(())
    }
}

impl fmt::Debug for PauliWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for PauliWord {
    type Err = PauliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let letters = s
            .trim()
            .chars()
            .map(|ch| match ch.to_ascii_uppercase() {
                'I' => Ok(0),
                'X' => Ok(1),
                'Y' => Ok(2),
                'Z' => Ok(3),
                other => Err(PauliError::BadLetter(other)),
            })
            .collect::<Result<Vec<u8>, _>>()?;
        PauliWord::new(letters)
    }
}

/// `pw("XIZ")` for built-in tables.
fn pw(s: &str) -> PauliWord {
    s.parse().expect("built-in Pauli word")
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SignedWord {
    pub sign: i8,
    pub word: PauliWord,
}

impl SignedWord {
    pub fn plus(word: PauliWord) -> Self {
        SignedWord { sign: 1, word }
    }
}

impl fmt::Display for SignedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", if self.sign < 0 { '-' } else { '+' }, self.word)
    }
}

pub fn pauli_mul(a: &SignedWord, b: &SignedWord) -> Result<SignedWord, PauliError> {
    if a.word.qubits() != b.word.qubits() {
        return Err(PauliError::LengthMismatch {
            left: a.word.qubits(),
            right: b.word.qubits(),
        });
    }
    let mut sign = a.sign * b.sign;
    let letters = a
        .word
        .letters
        .iter()
        .zip(&b.word.letters)
        .map(|(&x, &y)| {
            let (s, c) = MUL[x as usize][y as usize];
            sign *= s;
            c
        })
        .collect();
    Ok(SignedWord {
        sign,
        word: PauliWord { letters },
    })
}

/// Signed product of a sequence of words (all of one length).
pub fn product<'a, I: IntoIterator<Item = &'a PauliWord>>(words: I, n: usize) -> Result<SignedWord, PauliError> {
    words
        .into_iter()
        .try_fold(SignedWord::plus(PauliWord::identity(n)), |acc, w| {
            pauli_mul(&acc, &SignedWord::plus(w.clone()))
        })
}

pub fn commutes(a: &PauliWord, b: &PauliWord) -> Result<bool, PauliError> {
    if a.qubits() != b.qubits() {
        return Err(PauliError::LengthMismatch {
            left: a.qubits(),
            right: b.qubits(),
        });
    }
    let clashes = a
        .letters
        .iter()
        .zip(&b.letters)
        .filter(|(&x, &y)| x != 0 && y != 0 && x != y)
        .count();
    Ok(clashes % 2 == 0)
}

/// Index-increasing `s`-tuples of distinct, non-identity, mutually commuting
/// words whose product is `±1`, with that sign.
pub fn enumerate_parity_tuples(n: usize, s: usize) -> Vec<(Vec<PauliWord>, i8)> {
    if s < 2 || n == 0 || n > 8 {
        return Vec::new();
    }
    let words: Vec<PauliWord> = (1..1usize << (2 * n)).map(|a| PauliWord::from_index(a, n)).collect();
    let mut out = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    parity_rec(&words, n, s, 0, &mut stack, &mut out);
    out
}

fn parity_rec(
    words: &[PauliWord],
    n: usize,
    s: usize,
    start: usize,
    stack: &mut Vec<usize>,
    out: &mut Vec<(Vec<PauliWord>, i8)>,
) {
    let compatible = |i: usize, stack: &[usize]| stack.iter().all(|&j| commutes(&words[i], &words[j]).unwrap());
    if stack.len() + 1 == s {
        // the last factor is forced to be ± the product of the others
        let p = product(stack.iter().map(|&i| &words[i]), n).unwrap();
        if p.word.is_identity() {
            return;
        }
        let last = p.word.index() - 1;
        if last >= start && compatible(last, stack) {
            let mut t: Vec<PauliWord> = stack.iter().map(|&i| words[i].clone()).collect();
            t.push(words[last].clone());
            let total = product(t.iter(), n).unwrap();
            debug_assert!(total.word.is_identity());
            out.push((t, total.sign));
        }
        return;
    }
    for i in start..words.len() {
        if compatible(i, stack) {
            stack.push(i);
            parity_rec(words, n, s, i + 1, stack, out);
            stack.pop();
        }
    }
}

/// Greedy GF(2)-independent subset (indices into `words`).
fn independent_generators(words: &[PauliWord]) -> Vec<usize> {
    let mut basis: Vec<u128> = Vec::new();
    let mut chosen = Vec::new();
    for (i, w) in words.iter().enumerate() {
        let (x, z) = w.symplectic();
        let mut v = (x as u128) | ((z as u128) << 64);
        for &b in &basis {
            let top = 127 - b.leading_zeros();
            if v >> top & 1 == 1 {
                v ^= b;
            }
        }
        if v != 0 {
            basis.push(v);
            basis.sort_unstable_by(|a, b| b.cmp(a));
            chosen.push(i);
        }
    }
    chosen
}

/// The `2^n` joint eigenrays of a maximal set of commuting real words, sorted.
pub fn joint_eigenrays(words: &[PauliWord]) -> Result<Vec<Ray>, PauliError> {
    let n = words.first().ok_or(PauliError::Empty)?.qubits();
    for (i, a) in words.iter().enumerate() {
        if a.y_count() % 2 == 1 {
            return Err(PauliError::OddY(a.to_string()));
        }
        for b in &words[i + 1..] {
            if !commutes(a, b)? {
                return Err(PauliError::NotCommuting(a.to_string(), b.to_string()));
            }
        }
    }
    let gens: Vec<&PauliWord> = independent_generators(words).into_iter().map(|i| &words[i]).collect();
    if gens.len() != n {
        return Err(PauliError::NotMaximal {
            rank: gens.len(),
            qubits: n,
        });
    }
    let dim = 1usize << n;
    let mut rays = Vec::with_capacity(dim);
    for pattern in 0..dim {
        let mut found = None;
        for j in 0..dim {
            let mut v = vec![0i64; dim];
            v[j] = 1;
            for (k, g) in gens.iter().enumerate() {
                let s = if pattern >> k & 1 == 1 { -1 } else { 1 };
                let gv = g.apply(&v);
                v.iter_mut().zip(gv).for_each(|(x, y)| *x += s * y);
            }
            if v.iter().any(|&x| x != 0) {
                found = Some(v);
                break;
            }
        }
        // a commuting set of independent generators always has all 2^n joint eigenspaces
        let v = found.ok_or(PauliError::ContainsMinusIdentity)?;
        rays.push(Ray::new(v.into_iter().map(GaussianInt::from).collect())?);
    }
    rays.sort();
    rays.dedup();
    if rays.len() != dim {
        return Err(PauliError::ContainsMinusIdentity);
    }
    Ok(rays)
}

/// Eigenvalue of `word` on `ray`, if `ray` is an eigenvector.
pub fn eigenvalue(word: &PauliWord, ray: &Ray) -> Option<i8> {
    let v = ray.as_ints()?;
    let w = word.apply(&v);
    if w == v {
        Some(1)
    } else if w.iter().zip(&v).all(|(a, b)| *a == -*b) {
        Some(-1)
    } else {
        None
    }
}

/// Vertices and signed edges; edge signs are declared and checked on verification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedHypergraph {
    pub vertices: Vec<PauliWord>,
    pub edges: Vec<(Vec<usize>, i8)>,
}

impl SignedHypergraph {
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertices.len()];
        for (e, _) in &self.edges {
            for &v in e {
                deg[v] += 1;
            }
        }
        deg
    }

    /// Builds from word-lists, computing signs.
    pub fn from_edges(edges: &[Vec<PauliWord>]) -> Result<Self, PauliError> {
        let mut vertices: Vec<PauliWord> = Vec::new();
        let mut out = Vec::with_capacity(edges.len());
        for (i, e) in edges.iter().enumerate() {
            let n = e.first().ok_or(PauliError::Empty)?.qubits();
            let p = product(e.iter(), n)?;
            if !p.word.is_identity() {
                return Err(PauliError::NotScalar { edge: i });
            }
            let idx = e
                .iter()
                .map(|w| match vertices.iter().position(|v| v == w) {
                    Some(k) => k,
                    None => {
                        vertices.push(w.clone());
                        vertices.len() - 1
                    }
                })
                .collect();
            out.push((idx, p.sign));
        }
        Ok(SignedHypergraph { vertices, edges: out })
    }
}

/// Odd number of negative edges and every vertex of even degree.
pub fn verify_parity_proof(h: &SignedHypergraph) -> Result<bool, PauliError> {
    for (i, (e, declared)) in h.edges.iter().enumerate() {
        if let Some(&vertex) = e.iter().find(|&&v| v >= h.vertices.len()) {
            return Err(PauliError::BadVertex { edge: i, vertex });
        }
        let words: Vec<&PauliWord> = e.iter().map(|&v| &h.vertices[v]).collect();
        for (a, wa) in words.iter().enumerate() {
            for wb in &words[a + 1..] {
                if !commutes(wa, wb)? {
                    return Err(PauliError::NotCommuting(wa.to_string(), wb.to_string()));
                }
            }
        }
        let n = words[0].qubits();
        let p = product(words.iter().copied(), n)?;
        if !p.word.is_identity() {
            return Err(PauliError::NotScalar { edge: i });
        }
        if p.sign != *declared {
            return Err(PauliError::SignMismatch {
                edge: i,
                declared: *declared,
                actual: p.sign,
            });
        }
    }
    let negatives = h.edges.iter().filter(|(_, s)| *s < 0).count();
    Ok(negatives % 2 == 1 && h.degrees().iter().all(|d| d % 2 == 0))
}

/// The eight maximal commuting sets whose joint eigenrays make up the 64-ray configuration.
pub const LINES: [[&str; 7]; 8] = [
    ["XII", "IXI", "XXI", "IIZ", "XIZ", "IXZ", "XXZ"],
    ["XII", "IXX", "XXX", "IYY", "XYY", "IZZ", "XZZ"],
    ["IXI", "ZIX", "ZXX", "YIY", "YXY", "XIZ", "XXZ"],
    ["XXI", "YYX", "ZZX", "ZYY", "YZY", "XIZ", "IXZ"],
    ["ZXI", "YYI", "XZI", "IIZ", "ZXZ", "YYZ", "XZZ"],
    ["ZXI", "ZIX", "IXX", "XYY", "YZY", "YYZ", "XZZ"],
    ["YYI", "XXX", "ZZX", "YIY", "IYY", "ZXZ", "XZZ"],
    ["XZI", "ZXX", "YYX", "YXY", "ZYY", "XIZ", "IZZ"],
];

/// The 26 distinct words occurring in [`LINES`].
pub const LINE_WORDS: [&str; 26] = [
    "XII", "IXI", "XXI", "ZXI", "YYI", "XZI", "ZIX", "IXX", "XXX", "ZXX", "YYX", "ZZX", "YIY", "YXY", "IYY", "XYY",
    "ZYY", "YZY", "IIZ", "XIZ", "IXZ", "XXZ", "ZXZ", "YYZ", "IZZ", "XZZ",
];

/// Seven negative 4-edges and one positive one forming a parity proof on [`LINE_WORDS`].
pub const PROOF_EDGES: [[&str; 4]; 8] = [
    ["IXI", "ZIX", "YXY", "XIZ"],
    ["IXI", "ZXX", "YIY", "XIZ"],
    ["ZXI", "YYI", "IIZ", "XZZ"],
    ["ZXI", "XZI", "IIZ", "YYZ"],
    ["YYI", "XXX", "YIY", "XZZ"],
    ["XZI", "ZXX", "YXY", "IZZ"],
    ["ZIX", "IXX", "YYZ", "XZZ"],
    ["IXX", "XXX", "IZZ", "XZZ"],
];

pub fn lines() -> Vec<Vec<PauliWord>> {
    LINES.iter().map(|l| l.iter().map(|s| pw(s)).collect()).collect()
}

pub fn line_words() -> Vec<PauliWord> {
    LINE_WORDS.iter().map(|s| pw(s)).collect()
}

pub fn proof_example() -> SignedHypergraph {
    let edges: Vec<Vec<PauliWord>> = PROOF_EDGES.iter().map(|e| e.iter().map(|s| pw(s)).collect()).collect();
    SignedHypergraph::from_edges(&edges).expect("built-in edges multiply to ±1")
}

/// Rays of every line; the lines' rays are pairwise disjoint.
pub fn configuration_from_lines(lines: &[Vec<PauliWord>]) -> Result<Configuration, PauliError> {
    let mut rays = Vec::new();
    for l in lines {
        rays.extend(joint_eigenrays(l)?);
    }
    Ok(Configuration::new(rays)?)
}

/// Joint eigenrays of those `lines` containing a vertex of `h`.
pub fn underlying_configuration(h: &SignedHypergraph, lines: &[Vec<PauliWord>]) -> Result<Configuration, PauliError> {
    let used: Vec<Vec<PauliWord>> = lines
        .iter()
        .filter(|l| l.iter().any(|w| h.vertices.contains(w)))
        .cloned()
        .collect();
    configuration_from_lines(&used)
}

/// `C(n, k)` exactly.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// All 4-vertex parity edges over `vertices`, split by sign. Edges are vertex bitmasks.
pub fn four_edges(vertices: &[PauliWord]) -> (Vec<u32>, Vec<u32>) {
    let n = vertices.len();
    let mut neg = Vec::new();
    let mut pos = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let q = [a, b, c, d];
                    let commuting = q.iter().enumerate().all(|(i, &x)| {
                        q[i + 1..]
                            .iter()
                            .all(|&y| commutes(&vertices[x], &vertices[y]).unwrap_or(false))
                    });
                    if !commuting {
                        continue;
                    }
                    let p = match product(q.iter().map(|&i| &vertices[i]), vertices[a].qubits()) {
                        Ok(p) => p,
                        Err(_) => continue,
                    };
                    if p.word.is_identity() {
                        let mask = q.iter().fold(0u32, |m, &i| m | 1 << i);
                        if p.sign < 0 {
                            neg.push(mask);
                        } else {
                            pos.push(mask);
                        }
                    }
                }
            }
        }
    }
    (neg, pos)
}

/// One mined proof: a set of negative edges plus one positive edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinedProof {
    /// Bit `i` selects negative edge `i`.
    pub negative_mask: u32,
    /// Index into the positive edge list.
    pub positive: usize,
}

#[derive(Clone, Debug)]
pub struct MiningReport {
    pub vertices: Vec<PauliWord>,
    pub negative_edges: Vec<u32>,
    pub positive_edges: Vec<u32>,
    pub proofs: Vec<MinedProof>,
    /// Distinct `{n_k}`: `n_k` vertices lie in exactly `k` negative edges.
    pub profiles: BTreeSet<Vec<usize>>,
}

impl MiningReport {
    pub fn hypergraph(&self, proof: &MinedProof) -> SignedHypergraph {
        let members = |m: u32| {
            (0..self.vertices.len())
                .filter(|&i| m >> i & 1 == 1)
                .collect::<Vec<_>>()
        };
        let mut edges: Vec<(Vec<usize>, i8)> = (0..self.negative_edges.len())
            .filter(|&i| proof.negative_mask >> i & 1 == 1)
            .map(|i| (members(self.negative_edges[i]), -1))
            .collect();
        edges.push((members(self.positive_edges[proof.positive]), 1));
        SignedHypergraph {
            vertices: self.vertices.clone(),
            edges,
        }
    }

    pub fn profile(&self, proof: &MinedProof) -> Vec<usize> {
        profile_of(&self.negative_edges, self.vertices.len(), proof.negative_mask)
    }
}

fn profile_of(neg: &[u32], n_vertices: usize, mask: u32) -> Vec<usize> {
    let mut deg = vec![0usize; n_vertices];
    for (i, &e) in neg.iter().enumerate() {
        if mask >> i & 1 == 1 {
            for (v, d) in deg.iter_mut().enumerate() {
                if e >> v & 1 == 1 {
                    *d += 1;
                }
            }
        }
    }
    let mut prof = vec![0usize; neg.len()];
    for d in deg {
        prof[d] += 1;
    }
    prof
}

/// Single-positive-edge proofs over `vertices` with 4-vertex edges.
///
/// Walks every odd subset of negative edges in Gray-code order, tracking the
/// parity of each vertex degree; a subset closes into a proof when exactly four
/// vertices have odd degree and they form a positive edge.
pub fn mine_parity_proofs(vertices: &[PauliWord]) -> MiningReport {
    assert!(vertices.len() <= 32, "vertex masks are 32-bit");
    let (neg, pos) = four_edges(vertices);
    assert!(neg.len() <= 31, "negative-edge masks are 32-bit");
    let positive: HashMap<u32, usize> = pos.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    let m = neg.len();
    let split = m.min(6);
    let low = m - split;
    let mut proofs: Vec<MinedProof> = (0u32..1 << split)
        .into_par_iter()
        .flat_map_iter(|high| {
            let mut found = Vec::new();
            let base = (high as u64) << low;
            let mut parity = (0..m).filter(|&i| base >> i & 1 == 1).fold(0u32, |p, i| p ^ neg[i]);
            let mut count = high.count_ones() & 1;
            let mut gray = 0u64;
            for step in 0u64..1 << low {
                if step > 0 {
                    let bit = step.trailing_zeros() as usize;
                    gray ^= 1 << bit;
                    parity ^= neg[bit];
                    count ^= 1;
                }
                if count == 1 && parity.count_ones() == 4 {
                    if let Some(&p) = positive.get(&parity) {
                        found.push(MinedProof {
                            negative_mask: (base | gray) as u32,
                            positive: p,
                        });
                    }
                }
            }
            found
        })
        .collect();
    proofs.sort_by_key(|p| (p.negative_mask, p.positive));
    let profiles = proofs
        .par_iter()
        .map(|p| profile_of(&neg, vertices.len(), p.negative_mask))
        .collect::<Vec<_>>()
        .into_iter()
        .collect();
    MiningReport {
        vertices: vertices.to_vec(),
        negative_edges: neg,
        positive_edges: pos,
        proofs,
        profiles,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sw(s: &str) -> SignedWord {
        SignedWord::plus(pw(s))
    }

    #[test]
    fn encoding_round_trip() {
        for a in 0..64 {
            assert_eq!(PauliWord::from_index(a, 3).index(), a);
        }
        assert_eq!(pw("XYZ").index(), 1 + 4 * 2 + 16 * 3);
        assert_eq!(pw("IXX").to_string(), "IXX");
        assert!("IQX".parse::<PauliWord>().is_err());
    }

    #[test]
    fn products() {
        let p = pauli_mul(&sw("X"), &sw("Y")).unwrap();
        assert_eq!((p.sign, p.word), (-1, pw("Z")));
        let p = pauli_mul(&sw("YIY"), &sw("YIY")).unwrap();
        assert_eq!((p.sign, p.word), (1, pw("III")));
        assert!(pauli_mul(&sw("X"), &sw("XX")).is_err());
    }

    #[test]
    fn commutation() {
        assert!(commutes(&pw("XII"), &pw("IXI")).unwrap());
        assert!(!commutes(&pw("X"), &pw("Y")).unwrap());
        assert!(commutes(&pw("XX"), &pw("YY")).unwrap());
    }

    #[test]
    fn small_tuple_counts() {
        assert!(enumerate_parity_tuples(1, 3).is_empty());
        let t = enumerate_parity_tuples(2, 3);
        assert!(t
            .iter()
            .any(|(w, s)| w == &vec![pw("XX"), pw("YY"), pw("ZZ")] && *s == 1));
    }

    #[test]
    fn diagonal_eigenrays_are_basis() {
        let z: Vec<PauliWord> = ["ZII", "IZI", "IIZ", "ZZI", "ZIZ", "IZZ", "ZZZ"]
            .iter()
            .map(|s| pw(s))
            .collect();
        let rays = joint_eigenrays(&z).unwrap();
        assert_eq!(rays.len(), 8);
        assert!(rays
            .iter()
            .all(|r| r.as_ints().unwrap().iter().filter(|&&x| x != 0).count() == 1));
    }

    #[test]
    fn eigenray_errors() {
        assert!(matches!(
            joint_eigenrays(&[pw("XI"), pw("ZI")]),
            Err(PauliError::NotCommuting(_, _))
        ));
        assert!(matches!(
            joint_eigenrays(&[pw("YI"), pw("IZ")]),
            Err(PauliError::OddY(_))
        ));
        assert!(matches!(
            joint_eigenrays(&[pw("ZI")]),
            Err(PauliError::NotMaximal { rank: 1, qubits: 2 })
        ));
    }

    #[test]
    fn trivial_proofs() {
        let empty = SignedHypergraph {
            vertices: vec![],
            edges: vec![],
        };
        assert!(!verify_parity_proof(&empty).unwrap());
        let one = SignedHypergraph::from_edges(&[PROOF_EDGES[0].iter().map(|s| pw(s)).collect()]).unwrap();
        assert!(!verify_parity_proof(&one).unwrap());
        let mut bad = proof_example();
        bad.edges[7].1 = -1;
        assert!(matches!(
            verify_parity_proof(&bad),
            Err(PauliError::SignMismatch { edge: 7, .. })
        ));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(135, 8), 2214919483920);
        assert_eq!(binomial(3, 4), 0);
    }
}
