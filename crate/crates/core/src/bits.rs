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

//! Fixed-width bitsets used as vertex sets throughout the enumeration kernels.

use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, BitXor, Not};

const WORDS: usize = 4;

/// Largest number of elements a [`Bits`] can hold.
pub const MAX_BITS: usize = WORDS * 64;

/// A set of small indices (`< MAX_BITS`) stored inline.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Bits([u64; WORDS]);

impl Bits {
    pub const EMPTY: Bits = Bits([0; WORDS]);

    #[inline]
    pub const fn new() -> Self {
        Self::EMPTY
    }

    /// The set `{0, 1, ..., n - 1}`.
    pub fn prefix(n: usize) -> Self {
        assert!(n <= MAX_BITS, "bitset capacity exceeded");
        let mut out = Self::EMPTY;
        for (w, word) in out.0.iter_mut().enumerate() {
            let lo = w * 64;
            if n >= lo + 64 {
                *word = u64::MAX;
            } else if n > lo {
                *word = (1u64 << (n - lo)) - 1;
            }
        }
        out
    }

    pub fn singleton(i: usize) -> Self {
        let mut b = Self::EMPTY;
        b.insert(i);
        b
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        let mut b = Self::EMPTY;
        for i in it {
            b.insert(i);
        }
        b
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        self.0[i >> 6] |= 1u64 << (i & 63);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        self.0[i >> 6] &= !(1u64 << (i & 63));
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        i < MAX_BITS && self.0[i >> 6] >> (i & 63) & 1 == 1
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn intersects(&self, other: &Bits) -> bool {
        self.0.iter().zip(other.0.iter()).any(|(a, b)| a & b != 0)
    }

    #[inline]
    pub fn is_subset(&self, other: &Bits) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a & !b == 0)
    }

    /// `self \ other`
    #[inline]
    pub fn minus(&self, other: &Bits) -> Bits {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(other.0.iter()) {
            *a &= !b;
        }
        out
    }

    #[inline]
    pub fn first(&self) -> Option<usize> {
        self.0
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    /// Removes and returns the smallest element.
    #[inline]
    pub fn pop_first(&mut self) -> Option<usize> {
        for (i, w) in self.0.iter_mut().enumerate() {
            if *w != 0 {
                let t = w.trailing_zeros() as usize;
                *w &= *w - 1;
                return Some(i * 64 + t);
            }
        }
        None
    }

    /// Elements strictly greater than `i`.
    #[inline]
    pub fn above(&self, i: usize) -> Bits {
        let mut out = *self;
        let w = i >> 6;
        for word in out.0.iter_mut().take(w) {
            *word = 0;
        }
        let b = i & 63;
        out.0[w] &= if b == 63 { 0 } else { u64::MAX << (b + 1) };
        out
    }

    pub fn iter(&self) -> BitsIter {
        BitsIter(*self)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

pub struct BitsIter(Bits);

impl Iterator for BitsIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        self.0.pop_first()
    }
}

impl FromIterator<usize> for Bits {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Bits::from_indices(iter)
    }
}

macro_rules! bitop {
    ($tr:ident, $f:ident, $tra:ident, $fa:ident) => {
        impl $tr for Bits {
            type Output = Bits;
            #[inline]
            fn $f(mut self, rhs: Bits) -> Bits {
                self.$fa(rhs);
                self
            }
        }
        impl $tra for Bits {
            #[inline]
            fn $fa(&mut self, rhs: Bits) {
                for (a, b) in self.0.iter_mut().zip(rhs.0.iter()) {
                    a.$fa(*b);
                }
            }
        }
    };
}

bitop!(BitAnd, bitand, BitAndAssign, bitand_assign);
bitop!(BitOr, bitor, BitOrAssign, bitor_assign);

impl BitXor for Bits {
    type Output = Bits;
    #[inline]
    fn bitxor(mut self, rhs: Bits) -> Bits {
        for (a, b) in self.0.iter_mut().zip(rhs.0.iter()) {
            *a ^= *b;
        }
        self
    }
}

impl Not for Bits {
    type Output = Bits;
    #[inline]
    fn not(mut self) -> Bits {
        for a in self.0.iter_mut() {
            *a = !*a;
        }
        self
    }
}

impl fmt::Debug for Bits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
