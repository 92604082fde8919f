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

//! Built-in configurations in `C^8`.
//!
//! Vectors are written one string per ray with `1`, `0` and `-` (for `-1`).
//! Subconfigurations of the 64-ray configuration are stored as index sets into
//! it, so each vector lives in exactly one table.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{One, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::bits::Bits;
use crate::colouring::is_ks_configuration;
use crate::orthograph::{capacity_within, maximal_cliques};
use crate::rays::{Configuration, GaussianInt, Ray, RayError};

pub type Q = Ratio<i64>;

const SATURATED_64: [&str; 64] = [
    "1------1", "1-----1-", "1---11-1", "1---111-", "1--1----", "1--1--11", "1--111--", "1--11111", "1-1-----",
    "1-1---11", "1-1-11--", "1-1-1111", "1-11---1", "1-11--1-", "1-1111-1", "1-11111-", "11---1-1", "11---11-",
    "11--1--1", "11--1-1-", "11-1-1--", "11-1-111", "11-11---", "11-11-11", "111--1--", "111--111", "111-1---",
    "111-1-11", "1111-1-1", "1111-11-", "11111--1", "11111-1-", "1--10000", "1---0000", "1-0000-1", "1-0000--",
    "1-000011", "1-00001-", "1-110000", "1-1-0000", "11-10000", "11--0000", "110000-1", "110000--", "11000011",
    "1100001-", "11110000", "111-0000", "001--100", "0011-100", "00001--1", "00001---", "00001-11", "00001-1-",
    "00111-00", "001-1-00", "001---00", "0011--00", "000011-1", "000011--", "00001111", "0000111-", "00111100",
    "001-1100",
];

/// Indices into the 64-ray configuration of the 36-ray critical subconfiguration.
pub const CRITICAL_36: [usize; 36] = [
    2, 3, 4, 9, 12, 13, 14, 15, 16, 19, 21, 23, 24, 25, 26, 27, 29, 30, 32, 33, 34, 37, 39, 40, 41, 43, 46, 48, 51, 52,
    55, 58, 59, 60, 61, 62,
];

/// Indices into the 64-ray configuration of the tropical subconfiguration containing
/// [`CRITICAL_36`].
pub const TROPICAL_48: [usize; 48] = [
    0, 1, 2, 3, 4, 7, 9, 10, 12, 13, 14, 15, 16, 19, 20, 21, 22, 23, 24, 25, 26, 27, 29, 30, 32, 33, 34, 37, 38, 39,
    40, 41, 43, 44, 46, 47, 48, 50, 51, 52, 53, 55, 57, 58, 59, 60, 61, 62,
];

/// Witness set meeting every 8-clique of the 64-ray configuration in exactly 2 rays.
pub const SIX_TWO_SET: [usize; 16] = [0, 1, 3, 4, 5, 7, 11, 15, 32, 33, 36, 37, 60, 61, 62, 63];

/// Witness set meeting every 8-clique of the 64-ray configuration in exactly 4 rays.
pub const FOUR_FOUR_SET: [usize; 32] = [
    0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 32, 33, 34, 35, 36, 37, 38, 39, 56, 57, 58, 59, 60, 61, 62,
    63,
];

const KERNAGHAN_PERES_40: [&str; 40] = [
    "10000000", "01000000", "00100000", "00010000", "00001000", "00000100", "00000010", "00000001", "11110000",
    "11--0000", "1-1-0000", "1--10000", "00001111", "000011--", "00001-1-", "00001--1", "11001100", "1100--00",
    "1-001-00", "1-00-100", "00110011", "001100--", "001-001-", "001-00-1", "10101010", "1010-0-0", "10-010-0",
    "10-0-010", "01010101", "01010-0-", "010-010-", "010-0-01", "100101-0", "100-0110", "10010-10", "100-0--0",
    "0110-001", "01-01001", "0-101001", "0--0-001",
];

/// The 32 tropical 48-ray subconfigurations of [`saturated_64`], as index sets,
/// in lexicographic order. Reproduced by the disjoint six-clique search in
/// [`crate::tropical::tropical_subconfigurations_of_m`]; stored because that search takes minutes.
#[rustfmt::skip]
pub const TROPICAL_UNIONS: [[u8; 48]; 32] = [
    [0, 1, 2, 3, 4, 7, 9, 10, 12, 13, 14, 15, 16, 19, 20, 21, 22, 23, 24, 25, 26, 27, 29, 30, 32, 33, 34, 37, 38, 39, 40, 41, 43, 44, 46, 47, 48, 50, 51, 52, 53, 55, 57, 58, 59, 60, 61, 62],
    [0, 1, 2, 3, 4, 7, 9, 10, 12, 13, 14, 15, 16, 19, 20, 21, 22, 23, 24, 25, 26, 27, 29, 30, 32, 33, 34, 37, 38, 39, 40, 42, 43, 44, 45, 47, 48, 49, 51, 52, 54, 55, 57, 58, 59, 60, 61, 62],
    [0, 1, 2, 3, 4, 7, 9, 10, 12, 13, 14, 15, 16, 19, 20, 21, 22, 23, 24, 25, 26, 27, 29, 30, 33, 34, 35, 36, 37, 38, 40, 41, 43, 44, 46, 47, 48, 50, 51, 52, 53, 55, 56, 57, 58, 61, 62, 63],
    [0, 1, 2, 3, 4, 7, 9, 10, 12, 13, 14, 15, 16, 19, 20, 21, 22, 23, 24, 25, 26, 27, 29, 30, 33, 34, 35, 36, 37, 38, 40, 42, 43, 44, 45, 47, 48, 49, 51, 52, 54, 55, 56, 57, 58, 61, 62, 63],
    [0, 1, 2, 3, 4, 7, 9, 10, 12, 13, 14, 15, 17, 18, 20, 21, 22, 23, 24, 25, 26, 27, 28, 31, 32, 33, 34, 37, 38, 39, 40, 41, 43, 44, 46, 47, 48, 50, 51, 52, 53, 55, 57, 58, 59, 60, 61, 62],
    [0, 1, 2, 3, 4, 7, 9, 10, 12, 13, 14, 15, 17, 18, 20, 21, 22, 23, 24, 25, 26, 27, 28, 31, 32, 33, 34, 37, 38, 39, 40, 42, 43, 44, 45, 47, 48, 49, 51, 52, 54, 55, 57, 58, 59, 60, 61, 62],
    [0, 1, 2, 3, 4, 7, 9, 10, 12, 13, 14, 15, 17, 18, 20, 21, 22, 23, 24, 25, 26, 27, 28, 31, 33, 34, 35, 36, 37, 38, 40, 41, 43, 44, 46, 47, 48, 50, 51, 52, 53, 55, 56, 57, 58, 61, 62, 63],
    [0, 1, 2, 3, 4, 7, 9, 10, 12, 13, 14, 15, 17, 18, 20, 21, 22, 23, 24, 25, 26, 27, 28, 31, 33, 34, 35, 36, 37, 38, 40, 42, 43, 44, 45, 47, 48, 49, 51, 52, 54, 55, 56, 57, 58, 61, 62, 63],
    [0, 1, 2, 3, 5, 6, 8, 11, 12, 13, 14, 15, 16, 19, 20, 21, 22, 23, 24, 25, 26, 27, 29, 30, 32, 33, 34, 37, 38, 39, 40, 41, 43, 44, 46, 47, 48, 50, 51, 52, 53, 55, 57, 58, 59, 60, 61, 62],
    [0, 1, 2, 3, 5, 6, 8, 11, 12, 13, 14, 15, 16, 19, 20, 21, 22, 23, 24, 25, 26, 27, 29, 30, 32, 33, 34, 37, 38, 39, 40, 42, 43, 44, 45, 47, 48, 49, 51, 52, 54, 55, 57, 58, 59, 60, 61, 62],
    [0, 1, 2, 3, 5, 6, 8, 11, 12, 13, 14, 15, 16, 19, 20, 21, 22, 23, 24, 25, 26, 27, 29, 30, 33, 34, 35, 36, 37, 38, 40, 41, 43, 44, 46, 47, 48, 50, 51, 52, 53, 55, 56, 57, 58, 61, 62, 63],
    [0, 1, 2, 3, 5, 6, 8, 11, 12, 13, 14, 15, 16, 19, 20, 21, 22, 23, 24, 25, 26, 27, 29, 30, 33, 34, 35, 36, 37, 38, 40, 42, 43, 44, 45, 47, 48, 49, 51, 52, 54, 55, 56, 57, 58, 61, 62, 63],
    [0, 1, 2, 3, 5, 6, 8, 11, 12, 13, 14, 15, 17, 18, 20, 21, 22, 23, 24, 25, 26, 27, 28, 31, 32, 33, 34, 37, 38, 39, 40, 41, 43, 44, 46, 47, 48, 50, 51, 52, 53, 55, 57, 58, 59, 60, 61, 62],
    [0, 1, 2, 3, 5, 6, 8, 11, 12, 13, 14, 15, 17, 18, 20, 21, 22, 23, 24, 25, 26, 27, 28, 31, 32, 33, 34, 37, 38, 39, 40, 42, 43, 44, 45, 47, 48, 49, 51, 52, 54, 55, 57, 58, 59, 60, 61, 62],
    [0, 1, 2, 3, 5, 6, 8, 11, 12, 13, 14, 15, 17, 18, 20, 21, 22, 23, 24, 25, 26, 27, 28, 31, 33, 34, 35, 36, 37, 38, 40, 41, 43, 44, 46, 47, 48, 50, 51, 52, 53, 55, 56, 57, 58, 61, 62, 63],
    [0, 1, 2, 3, 5, 6, 8, 11, 12, 13, 14, 15, 17, 18, 20, 21, 22, 23, 24, 25, 26, 27, 28, 31, 33, 34, 35, 36, 37, 38, 40, 42, 43, 44, 45, 47, 48, 49, 51, 52, 54, 55, 56, 57, 58, 61, 62, 63],
    [0, 3, 4, 5, 6, 7, 8, 9, 10, 11, 13, 14, 16, 17, 18, 19, 20, 23, 25, 26, 28, 29, 30, 31, 32, 33, 35, 36, 38, 39, 40, 41, 42, 45, 46, 47, 49, 50, 51, 52, 53, 54, 56, 58, 59, 60, 61, 63],
    [0, 3, 4, 5, 6, 7, 8, 9, 10, 11, 13, 14, 16, 17, 18, 19, 20, 23, 25, 26, 28, 29, 30, 31, 32, 33, 35, 36, 38, 39, 41, 42, 43, 44, 45, 46, 48, 49, 50, 53, 54, 55, 56, 58, 59, 60, 61, 63],
    [0, 3, 4, 5, 6, 7, 8, 9, 10, 11, 13, 14, 16, 17, 18, 19, 20, 23, 25, 26, 28, 29, 30, 31, 32, 34, 35, 36, 37, 39, 40, 41, 42, 45, 46, 47, 49, 50, 51, 52, 53, 54, 56, 57, 59, 60, 62, 63],
    [0, 3, 4, 5, 6, 7, 8, 9, 10, 11, 13, 14, 16, 17, 18, 19, 20, 23, 25, 26, 28, 29, 30, 31, 32, 34, 35, 36, 37, 39, 41, 42, 43, 44, 45, 46, 48, 49, 50, 53, 54, 55, 56, 57, 59, 60, 62, 63],
    [0, 3, 4, 5, 6, 7, 8, 9, 10, 11, 13, 14, 16, 17, 18, 19, 21, 22, 24, 27, 28, 29, 30, 31, 32, 33, 35, 36, 38, 39, 40, 41, 42, 45, 46, 47, 49, 50, 51, 52, 53, 54, 56, 58, 59, 60, 61, 63],
    [0, 3, 4, 5, 6, 7, 8, 9, 10, 11, 13, 14, 16, 17, 18, 19, 21, 22, 24, 27, 28, 29, 30, 31, 32, 33, 35, 36, 38, 39, 41, 42, 43, 44, 45, 46, 48, 49, 50, 53, 54, 55, 56, 58, 59, 60, 61, 63],
    [0, 3, 4, 5, 6, 7, 8, 9, 10, 11, 13, 14, 16, 17, 18, 19, 21, 22, 24, 27, 28, 29, 30, 31, 32, 34, 35, 36, 37, 39, 40, 41, 42, 45, 46, 47, 49, 50, 51, 52, 53, 54, 56, 57, 59, 60, 62, 63],
    [0, 3, 4, 5, 6, 7, 8, 9, 10, 11, 13, 14, 16, 17, 18, 19, 21, 22, 24, 27, 28, 29, 30, 31, 32, 34, 35, 36, 37, 39, 41, 42, 43, 44, 45, 46, 48, 49, 50, 53, 54, 55, 56, 57, 59, 60, 62, 63],
    [1, 2, 4, 5, 6, 7, 8, 9, 10, 11, 12, 15, 16, 17, 18, 19, 20, 23, 25, 26, 28, 29, 30, 31, 32, 33, 35, 36, 38, 39, 40, 41, 42, 45, 46, 47, 49, 50, 51, 52, 53, 54, 56, 58, 59, 60, 61, 63],
    [1, 2, 4, 5, 6, 7, 8, 9, 10, 11, 12, 15, 16, 17, 18, 19, 20, 23, 25, 26, 28, 29, 30, 31, 32, 33, 35, 36, 38, 39, 41, 42, 43, 44, 45, 46, 48, 49, 50, 53, 54, 55, 56, 58, 59, 60, 61, 63],
    [1, 2, 4, 5, 6, 7, 8, 9, 10, 11, 12, 15, 16, 17, 18, 19, 20, 23, 25, 26, 28, 29, 30, 31, 32, 34, 35, 36, 37, 39, 40, 41, 42, 45, 46, 47, 49, 50, 51, 52, 53, 54, 56, 57, 59, 60, 62, 63],
    [1, 2, 4, 5, 6, 7, 8, 9, 10, 11, 12, 15, 16, 17, 18, 19, 20, 23, 25, 26, 28, 29, 30, 31, 32, 34, 35, 36, 37, 39, 41, 42, 43, 44, 45, 46, 48, 49, 50, 53, 54, 55, 56, 57, 59, 60, 62, 63],
    [1, 2, 4, 5, 6, 7, 8, 9, 10, 11, 12, 15, 16, 17, 18, 19, 21, 22, 24, 27, 28, 29, 30, 31, 32, 33, 35, 36, 38, 39, 40, 41, 42, 45, 46, 47, 49, 50, 51, 52, 53, 54, 56, 58, 59, 60, 61, 63],
    [1, 2, 4, 5, 6, 7, 8, 9, 10, 11, 12, 15, 16, 17, 18, 19, 21, 22, 24, 27, 28, 29, 30, 31, 32, 33, 35, 36, 38, 39, 41, 42, 43, 44, 45, 46, 48, 49, 50, 53, 54, 55, 56, 58, 59, 60, 61, 63],
    [1, 2, 4, 5, 6, 7, 8, 9, 10, 11, 12, 15, 16, 17, 18, 19, 21, 22, 24, 27, 28, 29, 30, 31, 32, 34, 35, 36, 37, 39, 40, 41, 42, 45, 46, 47, 49, 50, 51, 52, 53, 54, 56, 57, 59, 60, 62, 63],
    [1, 2, 4, 5, 6, 7, 8, 9, 10, 11, 12, 15, 16, 17, 18, 19, 21, 22, 24, 27, 28, 29, 30, 31, 32, 34, 35, 36, 37, 39, 41, 42, 43, 44, 45, 46, 48, 49, 50, 53, 54, 55, 56, 57, 59, 60, 62, 63],
];

/// Rays of the 40-ray configuration removed to obtain its 36-ray critical part.
pub const KP_EXCLUDED: [usize; 4] = [0, 12, 22, 31];

const TRANSFORM_PAIRS: [(&str, &str); 8] = [
    ("1------1", "1--10000"),
    ("1---111-", "1-1-0000"),
    ("1-11--1-", "11--0000"),
    ("1-1111-1", "11110000"),
    ("11-1-1--", "00001--1"),
    ("11-11-11", "00001-1-"),
    ("111--111", "000011--"),
    ("111-1---", "00001111"),
];

fn parse_pattern(s: &str) -> Vec<i64> {
    s.chars()
        .map(|c| match c {
            '1' => 1,
            '0' => 0,
            '-' => -1,
            _ => unreachable!("pattern tables only use 1, 0 and -"),
        })
        .collect()
}

fn table(rows: &[&str]) -> Configuration {
    let rays = rows
        .iter()
        .map(|s| Ray::from_ints(&parse_pattern(s)).expect("nonzero table row"))
        .collect();
    Configuration::new(rays).expect("built-in table is duplicate-free")
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DatasetError {
    #[error("unknown dataset {0:?} (expected one of M, N, T0, TROPICALS, KP40, KP36, E8, A, B)")]
    UnknownName(String),
    #[error("linear map constraints are inconsistent: source vectors are linearly dependent")]
    SingularSources,
    #[error(transparent)]
    Ray(#[from] RayError),
}

/// Names of the built-in datasets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Dataset {
    /// Saturated 64-ray configuration.
    M,
    /// Critical 36-ray subconfiguration of `M`.
    N,
    /// The tropical 48-ray subconfiguration of `M` containing `N`.
    T0,
    /// All tropical subconfigurations of `M`.
    Tropicals,
    /// Kernaghan-Peres 40 rays.
    Kp40,
    /// Kernaghan-Peres critical 36 rays.
    Kp36,
    /// The 120 rays of the E8 root system.
    E8,
    /// The 64 full-support E8 rays.
    A,
    /// `A ∪ T(A)`.
    B,
}

impl Dataset {
    pub const ALL: [Dataset; 9] = [
        Dataset::M,
        Dataset::N,
        Dataset::T0,
        Dataset::Tropicals,
        Dataset::Kp40,
        Dataset::Kp36,
        Dataset::E8,
        Dataset::A,
        Dataset::B,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Dataset::M => "M",
            Dataset::N => "N",
            Dataset::T0 => "T0",
            Dataset::Tropicals => "TROPICALS",
            Dataset::Kp40 => "KP40",
            Dataset::Kp36 => "KP36",
            Dataset::E8 => "E8",
            Dataset::A => "A",
            Dataset::B => "B",
        }
    }

    /// All configurations under this name; one element except for [`Dataset::Tropicals`].
    pub fn load(self) -> Vec<Configuration> {
        match self {
            Dataset::Tropicals => tropicals(),
            other => vec![builtin(other)],
        }
    }
}

impl fmt::Display for Dataset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Dataset {
    type Err = DatasetError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Dataset::ALL
            .into_iter()
            .find(|d| d.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| DatasetError::UnknownName(s.to_string()))
    }
}

/// The configurations of [`TROPICAL_UNIONS`].
pub fn tropicals() -> Vec<Configuration> {
    let m = saturated_64();
    TROPICAL_UNIONS
        .iter()
        .map(|u| m.induced_by_indices(&u.iter().map(|&i| usize::from(i)).collect::<Vec<_>>()))
        .collect()
}

/// A single-configuration dataset.
///
/// # Panics
/// On [`Dataset::Tropicals`], which names a family; use [`Dataset::load`].
pub fn builtin(name: Dataset) -> Configuration {
    match name {
        Dataset::M => saturated_64(),
        Dataset::N => saturated_64().induced_by_indices(&CRITICAL_36),
        Dataset::T0 => saturated_64().induced_by_indices(&TROPICAL_48),
        Dataset::Kp40 => kernaghan_peres_40(),
        Dataset::Kp36 => {
            let all = Bits::prefix(40);
            let drop = Bits::from_indices(KP_EXCLUDED);
            kernaghan_peres_40().induced(&all.minus(&drop))
        }
        Dataset::E8 => e8(),
        Dataset::A => e8().induced(&Bits::prefix(64)),
        Dataset::B => b_configuration(),
        Dataset::Tropicals => panic!("TROPICALS is a family of configurations; use Dataset::load"),
    }
}

pub fn saturated_64() -> Configuration {
    table(&SATURATED_64)
}

pub fn kernaghan_peres_40() -> Configuration {
    table(&KERNAGHAN_PERES_40)
}

/// The 120 E8 rays: first the 64 vectors `(1, ±1, ..., ±1)` with an even number of
/// minus signs in lexicographic order (`-1` before `1`), then the 56 vectors
/// `e_i ± e_j`, `i < j`, ordered by `(i, j)` with `+` before `-`.
pub fn e8() -> Configuration {
    let mut rays = Vec::with_capacity(120);
    for bits in 0u32..128 {
        // bit 6 - p set means +1 at position p + 1, so counting order is lexicographic
        let v: Vec<i64> = std::iter::once(1)
            .chain((0..7).map(|p| if bits >> (6 - p) & 1 == 1 { 1 } else { -1 }))
            .collect();
        if v.iter().filter(|&&x| x < 0).count() % 2 == 0 {
            rays.push(Ray::from_ints(&v).expect("nonzero"));
        }
    }
    for i in 0..8 {
        for j in (i + 1)..8 {
            for s in [1, -1] {
                let mut v = vec![0i64; 8];
                v[i] = 1;
                v[j] = s;
                rays.push(Ray::from_ints(&v).expect("nonzero"));
            }
        }
    }
    Configuration::new(rays).expect("E8 rays are distinct")
}

/// Rational square matrix acting on column vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap {
    rows: Vec<Vec<Q>>,
}

impl LinearMap {
    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> Q {
        self.rows[i][j]
    }

    pub fn apply(&self, v: &[Q]) -> Vec<Q> {
        self.rows
            .iter()
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Image of a real ray, re-canonicalized.
    pub fn apply_ray(&self, ray: &Ray) -> Result<Ray, RayError> {
        let v: Vec<Q> = ray
            .as_ints()
            .expect("linear maps act on real rays")
            .into_iter()
            .map(Q::from_integer)
            .collect();
        rational_to_ray(&self.apply(&v))
    }

    /// `c` such that `MᵀM = c·I`, if it exists and is positive.
    pub fn orthogonal_scale(&self) -> Option<Q> {
        let n = self.dim();
        let gram = |i: usize, j: usize| -> Q { (0..n).map(|k| self.rows[k][i] * self.rows[k][j]).sum() };
        let c = gram(0, 0);
        if c <= Q::zero() {
            return None;
        }
        for i in 0..n {
            for j in 0..n {
                let expect = if i == j { c } else { Q::zero() };
                if gram(i, j) != expect {
                    return None;
                }
            }
        }
        Some(c)
    }

    /// The map sending each `sources[k]` to `images[k]`.
    pub fn from_assignments(sources: &[Vec<Q>], images: &[Vec<Q>]) -> Result<LinearMap, DatasetError> {
        let n = sources.len();
        // S has the sources as columns; the map is Im · S⁻¹
        let s: Vec<Vec<Q>> = (0..n).map(|i| (0..n).map(|k| sources[k][i]).collect()).collect();
        let inv = invert(s).ok_or(DatasetError::SingularSources)?;
        let rows = (0..n)
            .map(|i| (0..n).map(|j| (0..n).map(|k| images[k][i] * inv[k][j]).sum()).collect())
            .collect();
        Ok(LinearMap { rows })
    }
}

fn invert(mut a: Vec<Vec<Q>>) -> Option<Vec<Vec<Q>>> {
    let n = a.len();
    let mut inv: Vec<Vec<Q>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { Q::one() } else { Q::zero() }).collect())
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        inv.swap(col, piv);
        let p = a[col][col];
        for j in 0..n {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                for j in 0..n {
                    let (ac, ic) = (a[col][j], inv[col][j]);
                    a[r][j] -= f * ac;
                    inv[r][j] -= f * ic;
                }
            }
        }
    }
    Some(inv)
}

/// Clears denominators of a rational vector and canonicalizes.
pub fn rational_to_ray(v: &[Q]) -> Result<Ray, RayError> {
    let l = v.iter().fold(1i64, |acc, q| num_integer::lcm(acc, *q.denom()));
    Ray::new(
        v.iter()
            .map(|q| GaussianInt::real((q * Q::from_integer(l)).to_integer()))
            .collect(),
    )
}

/// The orthogonal-up-to-scale map taking eight mutually orthogonal full-support
/// rays onto eight mutually orthogonal rays with four nonzero entries each.
pub fn build_transform_t() -> Result<LinearMap, DatasetError> {
    let to_q = |s: &str| -> Vec<Q> { parse_pattern(s).into_iter().map(Q::from_integer).collect() };
    let sources: Vec<Vec<Q>> = TRANSFORM_PAIRS.iter().map(|(s, _)| to_q(s)).collect();
    let images: Vec<Vec<Q>> = TRANSFORM_PAIRS.iter().map(|(_, t)| to_q(t)).collect();
    LinearMap::from_assignments(&sources, &images)
}

/// `T(A)` in the order of `A`.
pub fn transformed_a() -> Configuration {
    let t = build_transform_t().expect("transform is well defined");
    let a = builtin(Dataset::A);
    let rays = a
        .rays()
        .iter()
        .map(|r| t.apply_ray(r).expect("orthogonal maps send rays to rays"))
        .collect();
    Configuration::new(rays).expect("T is injective on rays")
}

/// `A` followed by `T(A)`: indices `0..64` are `A`, `64..128` the images in the same order.
pub fn b_configuration() -> Configuration {
    let a = builtin(Dataset::A);
    let ta = transformed_a();
    let rays = a.rays().iter().chain(ta.rays()).cloned().collect();
    Configuration::new(rays).expect("A and T(A) are disjoint")
}

/// Intermediate sets of the maximal-capacity construction inside `B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CapacityPipeline {
    /// Capacities of `U0 ∪ U1` over disjoint clique pairs of `A`.
    pub pair_capacities: BTreeSet<usize>,
    /// Distinct maximal-capacity unions of two disjoint cliques, indices into `A`.
    pub w_sets: Vec<Bits>,
    /// Capacities of `W ∪ W'` over disjoint pairs of `w_sets`.
    pub w_pair_capacities: BTreeSet<usize>,
    /// Distinct maximal-capacity unions of two disjoint `w_sets`.
    pub q_sets: Vec<Bits>,
    pub q_capacity: usize,
    pub capacity_a: usize,
    /// Pairs `i < j` with `q_sets[i] ∪ q_sets[j] = A`.
    pub a_splits: Vec<(usize, usize)>,
    /// Number of pairs `(i, j)` per capacity of `Q_i ∪ T(Q_j)` inside `B`.
    pub union_capacities: BTreeMap<usize, usize>,
    /// Every pair whose union has capacity above `capacity_a`, in `(i, j)` order.
    pub improving: Vec<PairUnion>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairUnion {
    pub i: usize,
    pub j: usize,
    pub capacity: usize,
    /// Indices into `B` (`A` first, then `T(A)` in the order of `A`).
    pub union: Bits,
    pub kochen_specker: bool,
    pub equals_m: bool,
}

impl CapacityPipeline {
    pub fn pairs_with_capacity(&self, capacity: usize) -> Vec<&PairUnion> {
        self.improving.iter().filter(|p| p.capacity == capacity).collect()
    }
}

fn distinct_max_unions(parts: &[Bits], cliques: &[Bits]) -> (BTreeSet<usize>, Vec<Bits>, usize) {
    let mut caps = BTreeSet::new();
    let mut best = 0;
    let mut unions: Vec<Bits> = Vec::new();
    for (i, a) in parts.iter().enumerate() {
        for b in &parts[i + 1..] {
            if a.intersects(b) {
                continue;
            }
            let u = *a | *b;
            let c = capacity_within(cliques, &u);
            caps.insert(c);
            if c > best {
                best = c;
                unions.clear();
            }
            if c == best {
                unions.push(u);
            }
        }
    }
    unions.sort_by_key(|u| u.to_vec());
    unions.dedup();
    (caps, unions, best)
}

fn shifted(b: &Bits, by: usize) -> Bits {
    b.iter().map(|x| x + by).collect()
}

/// Re-runs the maximal-capacity search that assembles the 64-ray configuration inside `B`.
pub fn capacity_pipeline() -> CapacityPipeline {
    let a = builtin(Dataset::A);
    let cliques_a = maximal_cliques(&a);
    let (pair_capacities, w_sets, _) = distinct_max_unions(&cliques_a, &cliques_a);
    let (w_pair_capacities, q_sets, q_capacity) = distinct_max_unions(&w_sets, &cliques_a);
    let all_a = a.all();
    let a_splits = (0..q_sets.len())
        .flat_map(|i| (i + 1..q_sets.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| (q_sets[i] | q_sets[j]) == all_a)
        .collect();

    let b = b_configuration();
    let cliques_b = maximal_cliques(&b);
    let offset = a.len();
    let scored: Vec<((usize, usize), usize, Bits)> = (0..q_sets.len())
        .into_par_iter()
        .flat_map_iter(|i| {
            let q = q_sets[i];
            let cliques_b = &cliques_b;
            q_sets.iter().enumerate().map(move |(j, qt)| {
                let u = q | shifted(qt, offset);
                ((i, j), capacity_within(cliques_b, &u), u)
            })
        })
        .collect();
    let capacity_a = cliques_a.len();
    let mut union_capacities = BTreeMap::new();
    for s in &scored {
        *union_capacities.entry(s.1).or_insert(0) += 1;
    }
    let mut m_rays = saturated_64().rays().to_vec();
    m_rays.sort();
    let improving = scored
        .into_iter()
        .filter(|s| s.1 > capacity_a)
        .map(|((i, j), capacity, union)| {
            let mut rays: Vec<Ray> = union.iter().map(|x| b.ray(x).clone()).collect();
            rays.sort();
            PairUnion {
                i,
                j,
                capacity,
                union,
                kochen_specker: is_ks_configuration(&b.induced(&union)),
                equals_m: rays == m_rays,
            }
        })
        .collect();
    CapacityPipeline {
        pair_capacities,
        w_sets,
        w_pair_capacities,
        q_sets,
        q_capacity,
        capacity_a,
        a_splits,
        union_capacities,
        improving,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cardinalities() {
        let expect = [
            (Dataset::M, 64),
            (Dataset::N, 36),
            (Dataset::T0, 48),
            (Dataset::Kp40, 40),
            (Dataset::Kp36, 36),
            (Dataset::E8, 120),
            (Dataset::A, 64),
            (Dataset::B, 128),
        ];
        for (d, n) in expect {
            assert_eq!(builtin(d).len(), n, "{d}");
        }
    }

    #[test]
    fn names_parse() {
        for d in Dataset::ALL {
            assert_eq!(d.name().parse::<Dataset>().unwrap(), d);
        }
        assert_eq!("kp36".parse::<Dataset>().unwrap(), Dataset::Kp36);
        assert!("Q".parse::<Dataset>().is_err());
    }

    #[test]
    fn kp_phi8() {
        let kp = builtin(Dataset::Kp40);
        assert_eq!(kp.ray(8).as_ints().unwrap(), vec![1, 1, 1, 1, 0, 0, 0, 0]);
    }

    #[test]
    fn kp36_drops_phi31_not_phi27() {
        let kp = builtin(Dataset::Kp40);
        let kp36 = builtin(Dataset::Kp36);
        assert!(kp36.index_of(kp.ray(27)).is_some());
        assert!(kp36.index_of(kp.ray(31)).is_none());
    }

    #[test]
    fn e8_shapes() {
        let e = builtin(Dataset::E8);
        let full = e
            .rays()
            .iter()
            .filter(|r| r.as_ints().unwrap().iter().all(|&x| x != 0))
            .count();
        assert_eq!(full, 64);
        for r in &e.rays()[..64] {
            let v = r.as_ints().unwrap();
            assert_eq!(v[0], 1);
            assert_eq!(v.iter().filter(|&&x| x < 0).count() % 2, 0);
        }
        for r in &e.rays()[64..] {
            assert_eq!(r.as_ints().unwrap().iter().filter(|&&x| x != 0).count(), 2);
        }
    }

    #[test]
    fn half_of_n_has_full_support() {
        let low = CRITICAL_36.iter().filter(|&&i| i < 32).count();
        assert_eq!(low, 18);
        let n = builtin(Dataset::N);
        let full = n
            .rays()
            .iter()
            .filter(|r| r.as_ints().unwrap().iter().all(|&x| x != 0))
            .count();
        assert_eq!(full, 18);
    }

    #[test]
    fn nested_inclusions() {
        let m = builtin(Dataset::M);
        let t0 = builtin(Dataset::T0);
        let n = builtin(Dataset::N);
        assert!(t0.locate(&n).is_some());
        assert!(m.locate(&t0).is_some());
    }

    #[test]
    fn transform_maps_first_source() {
        let t = build_transform_t().unwrap();
        let src = Ray::from_ints(&[1, -1, -1, -1, -1, -1, -1, 1]).unwrap();
        assert_eq!(
            t.apply_ray(&src).unwrap().as_ints().unwrap(),
            vec![1, -1, -1, 1, 0, 0, 0, 0]
        );
        assert_eq!(t.orthogonal_scale(), Some(Q::new(1, 2)));
    }

    #[test]
    fn transform_images_are_small() {
        let ta = transformed_a();
        for r in ta.rays() {
            assert!(r.as_ints().unwrap().iter().all(|x| x.abs() <= 1));
        }
    }

    #[test]
    fn singular_sources_rejected() {
        let v = vec![Q::one(), Q::zero()];
        let err = LinearMap::from_assignments(&[v.clone(), v.clone()], &[v.clone(), v]).unwrap_err();
        assert_eq!(err, DatasetError::SingularSources);
    }

    #[test]
    fn deterministic() {
        assert_eq!(builtin(Dataset::B), builtin(Dataset::B));
    }
}
