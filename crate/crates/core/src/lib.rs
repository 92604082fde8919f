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

//! Kochen-Specker configurations over Gaussian-integer rays.
//!
//! Orthogonality graphs, clique and anticlique signatures, KS colourings,
//! criticality reduction, tropical subconfigurations, real Pauli parity
//! proofs and equientropic probability weights.
//!
//! ```
//! use ksconf::colouring::is_ks_configuration;
//! use ksconf::datasets::{builtin, Dataset};
//! use ksconf::orthograph::signature;
//!
//! let m = builtin(Dataset::M);
//! assert_eq!(signature(&m).cliques[7], 320);
//! assert!(is_ks_configuration(&m));
//! ```

pub mod bits;
pub mod cli;
pub mod colouring;
pub mod datasets;
pub mod entropy;
pub mod io;
pub mod orthograph;
pub mod pauli;
pub mod rays;
pub mod tropical;

pub use bits::Bits;
pub use rays::{Configuration, GaussianInt, Ray};
