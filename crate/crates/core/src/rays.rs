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

//! Exact projective arithmetic for rays with Gaussian-integer coordinates.
//!
//! A [`Ray`] is stored as its canonical representative: the coordinate vector
//! is divided by the Gaussian gcd of its entries and then rotated by a unit so
//! that the first nonzero entry lies in the sector `re > 0, im >= 0`. For
//! vectors with entries in `{0, ±1, ±i}` the leading entry becomes exactly `1`.
//! Two vectors span the same complex line iff their canonical forms agree.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use thiserror::Error;

use crate::bits::{Bits, MAX_BITS};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RayError {
    #[error("zero vector is not a ray")]
    ZeroVector,
    #[error("empty coordinate list")]
    NoCoordinates,
    #[error("dimension mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("duplicate ray: input positions {first} and {second} span the same line")]
    DuplicateRay { first: usize, second: usize },
    #[error("ray at position {index} has dimension {found}, expected {expected}")]
    MixedDimension {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("configuration of {count} rays exceeds the supported maximum of {MAX_BITS}")]
    TooManyRays { count: usize },
    #[error("cannot infer the dimension of an empty configuration")]
    EmptyConfiguration,
    #[error("invalid Gaussian integer token {0:?}")]
    BadToken(String),
}

/// An element `re + im·i` of the Gaussian integers.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GaussianInt {
    pub re: i64,
    pub im: i64,
}

impl GaussianInt {
    pub const ZERO: GaussianInt = GaussianInt { re: 0, im: 0 };
    pub const ONE: GaussianInt = GaussianInt { re: 1, im: 0 };
    pub const I: GaussianInt = GaussianInt { re: 0, im: 1 };
    pub const UNITS: [GaussianInt; 4] = [
        GaussianInt { re: 1, im: 0 },
        GaussianInt { re: 0, im: 1 },
        GaussianInt { re: -1, im: 0 },
        GaussianInt { re: 0, im: -1 },
    ];

    #[inline]
    pub const fn new(re: i64, im: i64) -> Self {
        Self { re, im }
    }

    #[inline]
    pub const fn real(re: i64) -> Self {
        Self { re, im: 0 }
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.re == 0 && self.im == 0
    }

    #[inline]
    pub fn conj(self) -> Self {
        Self::new(self.re, -self.im)
    }

    /// Squared modulus.
    #[inline]
    pub fn norm(self) -> i64 {
        self.re * self.re + self.im * self.im
    }

    /// Nearest-integer quotient in the Euclidean division `self = q·rhs + r`, `N(r) < N(rhs)`.
    fn div_round(self, rhs: GaussianInt) -> GaussianInt {
        let n = rhs.norm() as i128;
        let p = self * rhs.conj();
        let round = |x: i64| -> i64 { (2 * x as i128 + n).div_euclid(2 * n) as i64 };
        GaussianInt::new(round(p.re), round(p.im))
    }

    /// A greatest common divisor in `Z[i]` (unique up to a unit).
    pub fn gcd(self, other: GaussianInt) -> GaussianInt {
        let (mut a, mut b) = (self, other);
        while !b.is_zero() {
            let q = a.div_round(b);
            let r = a - q * b;
            a = b;
            b = r;
        }
        a
    }

    /// Exact division; caller guarantees `rhs` divides `self`.
    fn div_exact(self, rhs: GaussianInt) -> GaussianInt {
        let n = rhs.norm();
        let p = self * rhs.conj();
        debug_assert!(p.re % n == 0 && p.im % n == 0);
        GaussianInt::new(p.re / n, p.im / n)
    }

    /// The unique unit `u` such that `u·self` has `re > 0, im >= 0`.
    fn normalizing_unit(self) -> GaussianInt {
        debug_assert!(!self.is_zero());
        *GaussianInt::UNITS
            .iter()
            .find(|&&u| {
                let z = u * self;
                z.re > 0 && z.im >= 0
            })
            .expect("one rotation of a nonzero Gaussian integer lies in the first sector")
    }
}

impl Add for GaussianInt {
    type Output = Self;
    #[inline]
    fn add(self, r: Self) -> Self {
        Self::new(self.re + r.re, self.im + r.im)
    }
}

impl Sub for GaussianInt {
    type Output = Self;
    #[inline]
    fn sub(self, r: Self) -> Self {
        Self::new(self.re - r.re, self.im - r.im)
    }
}

impl Mul for GaussianInt {
    type Output = Self;
    #[inline]
    fn mul(self, r: Self) -> Self {
        Self::new(self.re * r.re - self.im * r.im, self.re * r.im + self.im * r.re)
    }
}

impl Neg for GaussianInt {
    type Output = Self;
    #[inline]
    fn neg(self) -> Self {
        Self::new(-self.re, -self.im)
    }
}

impl From<i64> for GaussianInt {
    fn from(re: i64) -> Self {
        Self::real(re)
    }
}

impl fmt::Debug for GaussianInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Plain integers for real values, `re+imj` / `re-imj` otherwise.
impl fmt::Display for GaussianInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im == 0 {
            write!(f, "{}", self.re)
        } else if self.im > 0 {
            write!(f, "{}+{}j", self.re, self.im)
        } else {
            write!(f, "{}{}j", self.re, self.im)
        }
    }
}

impl FromStr for GaussianInt {
    type Err = RayError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || RayError::BadToken(s.to_string());
        if let Some(body) = s.strip_suffix('j') {
            // split at the last sign that is not the leading one
            let split = body
                .char_indices()
                .skip(1)
                .filter(|(_, c)| *c == '+' || *c == '-')
                .map(|(i, _)| i)
                .last();
            let (re, im) = match split {
                Some(i) => (&body[..i], &body[i..]),
                None => ("0", body),
            };
            let im = match im {
                "+" | "" => "1",
                "-" => "-1",
                other => other,
            };
            let re: i64 = re.parse().map_err(|_| bad())?;
            let im: i64 = im.trim_start_matches('+').parse().map_err(|_| bad())?;
            Ok(GaussianInt::new(re, im))
        } else {
            s.parse::<i64>().map(GaussianInt::real).map_err(|_| bad())
        }
    }
}

/// A one-dimensional subspace of `C^d`, held as its canonical representative.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ray {
    coords: Vec<GaussianInt>,
}

impl Ray {
    /// Canonicalizes `coords` into a ray.
    pub fn new(coords: Vec<GaussianInt>) -> Result<Self, RayError> {
        if coords.is_empty() {
            return Err(RayError::NoCoordinates);
        }
        let Some(lead) = coords.iter().position(|c| !c.is_zero()) else {
            return Err(RayError::ZeroVector);
        };
        let g = coords.iter().fold(GaussianInt::ZERO, |acc, &c| acc.gcd(c));
        let mut coords: Vec<GaussianInt> = coords.into_iter().map(|c| c.div_exact(g)).collect();
        let u = coords[lead].normalizing_unit();
        for c in coords.iter_mut() {
            *c = u * *c;
        }
        Ok(Ray { coords })
    }

    pub fn from_ints(coords: &[i64]) -> Result<Self, RayError> {
        Ray::new(coords.iter().map(|&c| GaussianInt::real(c)).collect())
    }

    #[inline]
    pub fn coords(&self) -> &[GaussianInt] {
        &self.coords
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    /// Real integer coordinates, if every entry is real.
    pub fn as_ints(&self) -> Option<Vec<i64>> {
        self.coords.iter().map(|c| (c.im == 0).then_some(c.re)).collect()
    }

    pub fn is_orthogonal_to(&self, other: &Ray) -> bool {
        inner_product(self, other).is_ok_and(|z| z.is_zero())
    }
}

/// Shorthand for [`Ray::new`].
pub fn make_ray(coords: Vec<GaussianInt>) -> Result<Ray, RayError> {
    Ray::new(coords)
}

/// `<x, y> = Σ conj(x_k)·y_k`
pub fn inner_product(x: &Ray, y: &Ray) -> Result<GaussianInt, RayError> {
    inner_product_raw(x.coords(), y.coords())
}

pub fn inner_product_raw(x: &[GaussianInt], y: &[GaussianInt]) -> Result<GaussianInt, RayError> {
    if x.len() != y.len() {
        return Err(RayError::LengthMismatch {
            left: x.len(),
            right: y.len(),
        });
    }
    Ok(x.iter()
        .zip(y)
        .fold(GaussianInt::ZERO, |acc, (&a, &b)| acc + a.conj() * b))
}

impl fmt::Debug for Ray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for Ray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// An ordered set of distinct rays together with their orthogonality graph.
#[derive(Clone, Debug)]
pub struct Configuration {
    dim: usize,
    rays: Vec<Ray>,
    adj: Vec<Bits>,
}

impl PartialEq for Configuration {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.rays == other.rays
    }
}

impl Eq for Configuration {}

impl Configuration {
    /// Builds a configuration, inferring the dimension from the first ray.
    pub fn new(rays: Vec<Ray>) -> Result<Self, RayError> {
        let dim = rays.first().ok_or(RayError::EmptyConfiguration)?.dim();
        Self::with_dim(dim, rays)
    }

    /// Builds a configuration in `C^dim`; `rays` may be empty.
    pub fn with_dim(dim: usize, rays: Vec<Ray>) -> Result<Self, RayError> {
        if rays.len() > MAX_BITS {
            return Err(RayError::TooManyRays { count: rays.len() });
        }
        let mut seen: HashMap<&Ray, usize> = HashMap::with_capacity(rays.len());
        for (i, r) in rays.iter().enumerate() {
            if r.dim() != dim {
                return Err(RayError::MixedDimension {
                    index: i,
                    expected: dim,
                    found: r.dim(),
                });
            }
            if let Some(&first) = seen.get(r) {
                return Err(RayError::DuplicateRay { first, second: i });
            }
            seen.insert(r, i);
        }
        let n = rays.len();
        let mut adj = vec![Bits::EMPTY; n];
        for i in 0..n {
            for j in (i + 1)..n {
                if rays[i].is_orthogonal_to(&rays[j]) {
                    adj[i].insert(j);
                    adj[j].insert(i);
                }
            }
        }
        Ok(Configuration { dim, rays, adj })
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.rays.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.rays.is_empty()
    }

    #[inline]
    pub fn rays(&self) -> &[Ray] {
        &self.rays
    }

    #[inline]
    pub fn ray(&self, i: usize) -> &Ray {
        &self.rays[i]
    }

    /// Orthogonality rows: `adjacency()[i]` is the set of rays orthogonal to ray `i`.
    #[inline]
    pub fn adjacency(&self) -> &[Bits] {
        &self.adj
    }

    #[inline]
    pub fn orthogonal(&self, i: usize, j: usize) -> bool {
        self.adj[i].contains(j)
    }

    /// All ray indices.
    #[inline]
    pub fn all(&self) -> Bits {
        Bits::prefix(self.len())
    }

    pub fn orthogonal_pair_count(&self) -> usize {
        self.adj.iter().map(Bits::len).sum::<usize>() / 2
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adj[i].len()
    }

    pub fn index_of(&self, ray: &Ray) -> Option<usize> {
        self.rays.iter().position(|r| r == ray)
    }

    /// The subconfiguration on `keep`, in increasing index order.
    pub fn induced(&self, keep: &Bits) -> Configuration {
        let idx: Vec<usize> = keep.iter().filter(|&i| i < self.len()).collect();
        let rays = idx.iter().map(|&i| self.rays[i].clone()).collect();
        let adj = idx
            .iter()
            .map(|&i| {
                idx.iter()
                    .enumerate()
                    .filter(|(_, &j)| self.adj[i].contains(j))
                    .map(|(p, _)| p)
                    .collect()
            })
            .collect();
        Configuration {
            dim: self.dim,
            rays,
            adj,
        }
    }

    pub fn induced_by_indices(&self, indices: &[usize]) -> Configuration {
        self.induced(&Bits::from_indices(indices.iter().copied()))
    }

    /// Copy without ray `i`.
    pub fn without(&self, i: usize) -> Configuration {
        let mut keep = self.all();
        keep.remove(i);
        self.induced(&keep)
    }

    /// Indices of `sub`'s rays inside `self`, or `None` if some ray is absent.
    pub fn locate(&self, sub: &Configuration) -> Option<Vec<usize>> {
        let lookup: HashMap<&Ray, usize> = self.rays.iter().enumerate().map(|(i, r)| (r, i)).collect();
        sub.rays.iter().map(|r| lookup.get(r).copied()).collect()
    }
}
