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

//! Invariants checked against the oracles in `common`.

mod common;

use std::collections::BTreeSet;

use ksconf::colouring::{find_ks_colouring, is_ks_colouring, is_ks_configuration};
use ksconf::datasets::{self, Dataset};
use ksconf::io;
use ksconf::orthograph::{is_saturated, maximal_cliques, signature, steiner_check};
use ksconf::pauli::{commutes, pauli_mul, PauliWord, SignedWord};
use ksconf::{Bits, Configuration, GaussianInt, Ray};
use proptest::prelude::*;

fn subset(c: &Configuration, idx: &BTreeSet<usize>) -> Configuration {
    c.induced_by_indices(&idx.iter().copied().collect::<Vec<_>>())
}

/// Every clique of size below `d` extends inside the configuration.
fn naive_saturated(c: &Configuration) -> bool {
    let adj = common::adjacency(c);
    (1..c.dim()).all(|k| {
        common::cliques(&adj, k)
            .iter()
            .all(|cl| (0..c.len()).any(|v| cl.iter().all(|&u| adj[u][v])))
    })
}

fn gaussian() -> impl Strategy<Value = GaussianInt> {
    (-3i64..=3, -3i64..=3).prop_map(|(re, im)| GaussianInt::new(re, im))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rays_are_scale_invariant(
        v in prop::collection::vec(gaussian(), 1..6),
        k in gaussian().prop_filter("nonzero", |z| !z.is_zero()),
    ) {
        prop_assume!(v.iter().any(|z| !z.is_zero()));
        let scaled: Vec<GaussianInt> = v.iter().map(|&z| z * k).collect();
        prop_assert_eq!(Ray::new(v).unwrap(), Ray::new(scaled).unwrap());
    }

    #[test]
    fn adjacency_matches_coordinates(idx in prop::collection::btree_set(0usize..120, 2..40)) {
        let c = subset(&datasets::e8(), &idx);
        let adj = common::adjacency(&c);
        for (i, row) in adj.iter().enumerate() {
            for (j, &o) in row.iter().enumerate() {
                prop_assert_eq!(c.orthogonal(i, j), o);
            }
        }
    }

    #[test]
    fn signature_matches_enumeration(idx in prop::collection::btree_set(0usize..64, 1..22)) {
        let c = subset(&datasets::saturated_64(), &idx);
        let adj = common::adjacency(&c);
        let s = signature(&c);
        for (k, &n) in s.cliques.iter().enumerate() {
            prop_assert_eq!(n, common::cliques(&adj, k + 1).len() as u64);
        }
        for (k, &n) in s.anticliques.iter().enumerate() {
            prop_assert_eq!(n, common::anticlique_count(&adj, k + 1));
        }
        prop_assert_eq!(common::anticlique_count(&adj, s.anticliques.len() + 1), 0);
        let capacity = s.cliques.get(7).copied().unwrap_or(0) as usize;
        prop_assert_eq!(maximal_cliques(&c).len(), capacity);
    }

    #[test]
    fn saturation_matches_enumeration(idx in prop::collection::btree_set(0usize..64, 1..18)) {
        let c = subset(&datasets::saturated_64(), &idx);
        prop_assert_eq!(is_saturated(&c).is_saturated(), naive_saturated(&c));
    }

    #[test]
    fn ks_colourings_verify(idx in prop::collection::btree_set(0usize..64, 1..40)) {
        let c = subset(&datasets::saturated_64(), &idx);
        match find_ks_colouring(&c) {
            Some(col) => prop_assert!(is_ks_colouring(&c, &col.values)),
            None => prop_assert!(is_ks_configuration(&c)),
        }
    }

    #[test]
    fn pauli_products_match_matrices(a in 0usize..64, b in 0usize..64) {
        let (wa, wb) = (PauliWord::from_index(a, 3), PauliWord::from_index(b, 3));
        let (ma, mb) = (common::pauli_matrix(&wa.to_string()), common::pauli_matrix(&wb.to_string()));
        let p = pauli_mul(&SignedWord::plus(wa.clone()), &SignedWord::plus(wb.clone())).unwrap();
        let mp: Vec<Vec<i64>> = common::pauli_matrix(&p.word.to_string())
            .into_iter()
            .map(|row| row.into_iter().map(|x| x * p.sign as i64).collect())
            .collect();
        prop_assert_eq!(common::matmul(&ma, &mb), mp);
        prop_assert_eq!(commutes(&wa, &wb).unwrap(), common::matmul(&ma, &mb) == common::matmul(&mb, &ma));
        let v: Vec<i64> = (0..8).map(|i| i as i64 - 3).collect();
        let mv: Vec<i64> = ma.iter().map(|row| row.iter().zip(&v).map(|(x, y)| x * y).sum()).collect();
        prop_assert_eq!(wa.apply(&v), mv);
    }

    #[test]
    fn bits_match_sets(a in prop::collection::btree_set(0usize..256, 0..60), b in prop::collection::btree_set(0usize..256, 0..60)) {
        let (x, y) = (Bits::from_indices(a.iter().copied()), Bits::from_indices(b.iter().copied()));
        prop_assert_eq!((x & y).to_vec(), a.intersection(&b).copied().collect::<Vec<_>>());
        prop_assert_eq!((x | y).to_vec(), a.union(&b).copied().collect::<Vec<_>>());
        prop_assert_eq!(x.minus(&y).to_vec(), a.difference(&b).copied().collect::<Vec<_>>());
        prop_assert_eq!(x.is_subset(&y), a.is_subset(&b));
        prop_assert_eq!(x.intersects(&y), !a.is_disjoint(&b));
        prop_assert_eq!(x.len(), a.len());
        prop_assert_eq!(x.first(), a.first().copied());
    }

    #[test]
    fn vector_files_round_trip(idx in prop::collection::btree_set(0usize..120, 2..30)) {
        let c = subset(&datasets::e8(), &idx);
        let text = io::write_vectors(&c);
        prop_assert_eq!(io::parse_vectors(&text, None, None).unwrap(), c.clone());
        let flat = text.replace('\n', " ");
        prop_assert_eq!(io::parse_vectors(&flat, Some(8), Some(c.len())).unwrap(), c);
    }
}

/// The 18-ray set in dimension 4 with nine orthogonal bases, each ray in two of them.
fn eighteen_rays() -> Configuration {
    let rows: [[i64; 4]; 18] = [
        [0, 0, 0, 1],
        [0, 0, 1, 0],
        [1, 1, 0, 0],
        [1, -1, 0, 0],
        [0, 1, 0, 0],
        [1, 0, 1, 0],
        [1, 0, -1, 0],
        [1, -1, 1, -1],
        [1, -1, -1, 1],
        [0, 0, 1, 1],
        [1, 1, 1, 1],
        [0, 1, 0, -1],
        [1, 0, 0, 1],
        [1, 0, 0, -1],
        [0, 1, -1, 0],
        [1, 1, -1, 1],
        [1, 1, 1, -1],
        [-1, 1, 1, 1],
    ];
    Configuration::new(rows.iter().map(|r| Ray::from_ints(r).unwrap()).collect()).unwrap()
}

#[test]
fn eighteen_ray_set_is_ks_under_both_checks() {
    let c = eighteen_rays();
    assert_eq!(maximal_cliques(&c).len(), 9);
    assert!(!common::naive_colourable(&c));
    assert!(is_ks_configuration(&c));
    // removing any ray makes it colourable
    for i in 0..c.len() {
        let sub = c.without(i);
        assert!(common::naive_colourable(&sub));
        assert!(!is_ks_configuration(&sub));
    }
}

#[test]
fn e8_steiner_by_enumeration() {
    let e8 = datasets::builtin(Dataset::E8);
    let adj = common::adjacency(&e8);
    let sevens = common::cliques(&adj, 7);
    assert_eq!(sevens.len(), 16200);
    let unique = sevens
        .iter()
        .all(|w| (0..e8.len()).filter(|&v| w.iter().all(|&u| adj[u][v])).count() == 1);
    assert!(unique);
    assert!(steiner_check(&e8));
}

#[test]
fn e8_vectors_are_roots() {
    // 112 integer roots (±1, ±1, 0^6) and 128 half-integer ones, up to sign
    let e8 = datasets::e8();
    let (mut integral, mut half) = (0, 0);
    for r in e8.rays() {
        let v = r.as_ints().unwrap();
        let support = v.iter().filter(|&&x| x != 0).count();
        match support {
            2 if v.iter().all(|x| x.abs() <= 1) => integral += 1,
            8 if v.iter().all(|x| x.abs() == 1) && v.iter().filter(|&&x| x < 0).count() % 2 == 0 => half += 1,
            _ => panic!("unexpected vector {v:?}"),
        }
    }
    assert_eq!((integral, half), (56, 64));
}
