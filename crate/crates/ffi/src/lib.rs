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

//! C ABI over `ksconf`.
//!
//! Configurations live behind the opaque [`KsConfiguration`] handle. Every
//! function returns a [`KsStatus`]; on failure the message is kept per thread
//! and read back with [`ks_last_error_message`]. Panics never cross the
//! boundary: they are caught and reported as [`KsStatus::Panic`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use ksconf::colouring::{find_partition_colouring, is_critical, is_ks_configuration};
use ksconf::datasets::Dataset;
use ksconf::orthograph::{capacity, is_saturated, signature, steiner_check};
use ksconf::pauli::{self, PauliWord};
use ksconf::rays::Ray;
use ksconf::{io, Configuration, GaussianInt};

/// Result codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KsStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    ParseError = 3,
    UnknownDataset = 4,
    BufferTooSmall = 5,
    Panic = 6,
}

/// Opaque configuration handle.
pub struct KsConfiguration {
    inner: Configuration,
}

thread_local! {
    static LAST_ERROR: RefCell<String> = const { RefCell::new(String::new()) };
}

fn set_error(msg: impl Into<String>) {
    LAST_ERROR.with(|e| *e.borrow_mut() = msg.into());
}

fn fail(status: KsStatus, msg: impl Into<String>) -> KsStatus {
    set_error(msg);
    status
}

fn guard(f: impl FnOnce() -> KsStatus) -> KsStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => {
            if s == KsStatus::Ok {
                set_error("");
            }
            s
        }
        Err(p) => {
            let msg = p
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| p.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            fail(KsStatus::Panic, format!("panic: {msg}"))
        }
    }
}

unsafe fn c_str<'a>(s: *const c_char) -> Result<&'a str, KsStatus> {
    if s.is_null() {
        return Err(fail(KsStatus::NullPointer, "null string"));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| fail(KsStatus::InvalidArgument, "string is not UTF-8"))
}

unsafe fn config<'a>(h: *const KsConfiguration) -> Result<&'a Configuration, KsStatus> {
    h.as_ref()
        .map(|c| &c.inner)
        .ok_or_else(|| fail(KsStatus::NullPointer, "null configuration handle"))
}

fn hand_out(c: Configuration, out: *mut *mut KsConfiguration) -> KsStatus {
    if out.is_null() {
        return fail(KsStatus::NullPointer, "null output pointer");
    }
    unsafe { *out = Box::into_raw(Box::new(KsConfiguration { inner: c })) };
    KsStatus::Ok
}

macro_rules! tri {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(s) => return s,
        }
    };
}

fn write_bool(out: *mut bool, v: bool) -> KsStatus {
    if out.is_null() {
        return fail(KsStatus::NullPointer, "null output pointer");
    }
    unsafe { *out = v };
    KsStatus::Ok
}

/// Copies the last error message of this thread into `buf` (NUL-terminated,
/// truncated to `len`) and returns the full message length without the NUL.
///
/// # Safety
/// `buf` must be null or point to `len` writable bytes.
#[no_mangle]
pub unsafe extern "C" fn ks_last_error_message(buf: *mut c_char, len: usize) -> usize {
    LAST_ERROR.with(|e| {
        let e = e.borrow();
        if !buf.is_null() && len > 0 {
            let n = e.len().min(len - 1);
            ptr::copy_nonoverlapping(e.as_ptr().cast::<c_char>(), buf, n);
            *buf.add(n) = 0;
        }
        e.len()
    })
}

/// Static NUL-terminated version string.
#[no_mangle]
pub extern "C" fn ks_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Loads a single-configuration built-in dataset by name (`M`, `N`, `T0`,
/// `KP40`, `KP36`, `E8`, `A`, `B`; case-insensitive).
///
/// # Safety
/// `name` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ks_configuration_builtin(name: *const c_char, out: *mut *mut KsConfiguration) -> KsStatus {
    guard(|| {
        let name = tri!(c_str(name));
        let d: Dataset = match name.parse() {
            Ok(d) => d,
            Err(e) => return fail(KsStatus::UnknownDataset, e.to_string()),
        };
        if d == Dataset::Tropicals {
            return fail(
                KsStatus::InvalidArgument,
                "TROPICALS names 32 configurations; use ks_configuration_tropical",
            );
        }
        hand_out(ksconf::datasets::builtin(d), out)
    })
}

/// The `index`-th tropical 48-ray subconfiguration of `M` (`0 <= index < 32`).
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ks_configuration_tropical(index: usize, out: *mut *mut KsConfiguration) -> KsStatus {
    guard(|| {
        let mut all = Dataset::Tropicals.load();
        if index >= all.len() {
            return fail(
                KsStatus::InvalidArgument,
                format!("index {index} out of range for {} tropicals", all.len()),
            );
        }
        hand_out(all.swap_remove(index), out)
    })
}

/// Builds a configuration from `count·dim` Gaussian integers given as
/// interleaved `(re, im)` pairs, ray-major.
///
/// # Safety
/// `coords` must point to `2·count·dim` readable values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ks_configuration_from_coords(
    dim: usize,
    count: usize,
    coords: *const i64,
    out: *mut *mut KsConfiguration,
) -> KsStatus {
    guard(|| {
        if coords.is_null() {
            return fail(KsStatus::NullPointer, "null coordinate array");
        }
        if dim == 0 {
            return fail(KsStatus::InvalidArgument, "dimension must be positive");
        }
        let Some(total) = count.checked_mul(dim).and_then(|n| n.checked_mul(2)) else {
            return fail(KsStatus::InvalidArgument, "coordinate count overflows");
        };
        let raw = std::slice::from_raw_parts(coords, total);
        let mut rays = Vec::with_capacity(count);
        for (i, chunk) in raw.chunks(2 * dim).enumerate() {
            let z = chunk.chunks(2).map(|p| GaussianInt::new(p[0], p[1])).collect();
            match Ray::new(z) {
                Ok(r) => rays.push(r),
                Err(e) => return fail(KsStatus::InvalidArgument, format!("ray {i}: {e}")),
            }
        }
        match Configuration::with_dim(dim, rays) {
            Ok(c) => hand_out(c, out),
            Err(e) => fail(KsStatus::InvalidArgument, e.to_string()),
        }
    })
}

/// Parses a vector file. `dim == 0` or `count == 0` leaves that value to inference.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ks_configuration_parse(
    text: *const c_char,
    dim: usize,
    count: usize,
    out: *mut *mut KsConfiguration,
) -> KsStatus {
    guard(|| {
        let text = tri!(c_str(text));
        let opt = |n: usize| (n > 0).then_some(n);
        match io::parse_vectors(text, opt(dim), opt(count)) {
            Ok(c) => hand_out(c, out),
            Err(e) => fail(KsStatus::ParseError, e.to_string()),
        }
    })
}

/// Subconfiguration on the listed ray indices.
///
/// # Safety
/// `indices` must point to `n` readable values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ks_configuration_induced(
    handle: *const KsConfiguration,
    indices: *const usize,
    n: usize,
    out: *mut *mut KsConfiguration,
) -> KsStatus {
    guard(|| {
        let c = tri!(config(handle));
        if indices.is_null() && n > 0 {
            return fail(KsStatus::NullPointer, "null index array");
        }
        let idx = if n == 0 {
            &[][..]
        } else {
            std::slice::from_raw_parts(indices, n)
        };
        if let Some(bad) = idx.iter().find(|&&i| i >= c.len()) {
            return fail(
                KsStatus::InvalidArgument,
                format!("index {bad} out of range for {} rays", c.len()),
            );
        }
        hand_out(c.induced_by_indices(idx), out)
    })
}

/// Releases a handle; null is ignored.
///
/// # Safety
/// `handle` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn ks_configuration_free(handle: *mut KsConfiguration) {
    if !handle.is_null() {
        drop(Box::from_raw(handle));
    }
}

/// Number of rays and dimension.
///
/// # Safety
/// `len` and `dim` must be writable (either may be null to skip it).
#[no_mangle]
pub unsafe extern "C" fn ks_configuration_shape(
    handle: *const KsConfiguration,
    len: *mut usize,
    dim: *mut usize,
) -> KsStatus {
    guard(|| {
        let c = tri!(config(handle));
        if !len.is_null() {
            *len = c.len();
        }
        if !dim.is_null() {
            *dim = c.dim();
        }
        KsStatus::Ok
    })
}

/// Writes the clique and anticlique rows (`k = 1..`) into two arrays of
/// capacity `cap`; `written` receives the row lengths. Too small a buffer gives
/// [`KsStatus::BufferTooSmall`] with `written` set to the needed size.
///
/// # Safety
/// Both arrays must hold `cap` writable values; `written` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ks_signature(
    handle: *const KsConfiguration,
    cliques: *mut u64,
    anticliques: *mut u64,
    cap: usize,
    clique_len: *mut usize,
    anticlique_len: *mut usize,
) -> KsStatus {
    guard(|| {
        let c = tri!(config(handle));
        if clique_len.is_null() || anticlique_len.is_null() {
            return fail(KsStatus::NullPointer, "null length pointer");
        }
        let s = signature(c);
        *clique_len = s.cliques.len();
        *anticlique_len = s.anticliques.len();
        if s.cliques.len() > cap || s.anticliques.len() > cap {
            return fail(KsStatus::BufferTooSmall, "signature rows longer than the buffers");
        }
        if cliques.is_null() || anticliques.is_null() {
            return fail(KsStatus::NullPointer, "null signature buffer");
        }
        ptr::copy_nonoverlapping(s.cliques.as_ptr(), cliques, s.cliques.len());
        ptr::copy_nonoverlapping(s.anticliques.as_ptr(), anticliques, s.anticliques.len());
        KsStatus::Ok
    })
}

/// No KS colouring exists.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ks_is_kochen_specker(handle: *const KsConfiguration, out: *mut bool) -> KsStatus {
    guard(|| write_bool(out, is_ks_configuration(tri!(config(handle)))))
}

/// Every clique extends to a maximal clique inside the configuration.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ks_is_saturated(handle: *const KsConfiguration, out: *mut bool) -> KsStatus {
    guard(|| write_bool(out, is_saturated(tri!(config(handle))).is_saturated()))
}

/// KS, and colourable after deleting any one ray.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ks_is_critical(handle: *const KsConfiguration, out: *mut bool) -> KsStatus {
    guard(|| write_bool(out, is_critical(tri!(config(handle)))))
}

/// Every `(d-1)`-clique lies in exactly one `d`-clique.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ks_steiner(handle: *const KsConfiguration, out: *mut bool) -> KsStatus {
    guard(|| write_bool(out, steiner_check(tri!(config(handle)))))
}

/// Number of maximal (`d`-element) cliques.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ks_capacity(handle: *const KsConfiguration, out: *mut usize) -> KsStatus {
    guard(|| {
        let c = tri!(config(handle));
        if out.is_null() {
            return fail(KsStatus::NullPointer, "null output pointer");
        }
        *out = capacity(c);
        KsStatus::Ok
    })
}

/// Searches for a colouring with `partition[a]` rays of colour `a` in every
/// maximal clique. On success `found` tells whether one exists and, if so,
/// `values` (length = number of rays) holds the colours.
///
/// # Safety
/// `partition` must hold `parts` values, `values` `values_len` writable bytes,
/// and `found` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ks_partition_colouring(
    handle: *const KsConfiguration,
    partition: *const usize,
    parts: usize,
    values: *mut u8,
    values_len: usize,
    found: *mut bool,
) -> KsStatus {
    guard(|| {
        let c = tri!(config(handle));
        if partition.is_null() || found.is_null() {
            return fail(KsStatus::NullPointer, "null partition or output pointer");
        }
        let p = std::slice::from_raw_parts(partition, parts);
        match find_partition_colouring(c, p) {
            Err(e) => fail(KsStatus::InvalidArgument, e.to_string()),
            Ok(None) => {
                *found = false;
                KsStatus::Ok
            }
            Ok(Some(col)) => {
                *found = true;
                if values.is_null() || values_len < col.values.len() {
                    return fail(
                        KsStatus::BufferTooSmall,
                        format!("need {} bytes for the colouring", col.values.len()),
                    );
                }
                ptr::copy_nonoverlapping(col.values.as_ptr(), values, col.values.len());
                KsStatus::Ok
            }
        }
    })
}

/// Whether two Pauli words (e.g. `"XZY"`) commute.
///
/// # Safety
/// Both strings must be NUL-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ks_pauli_commutes(a: *const c_char, b: *const c_char, out: *mut bool) -> KsStatus {
    guard(|| {
        let parse = |s: &str| {
            s.parse::<PauliWord>()
                .map_err(|e| fail(KsStatus::ParseError, e.to_string()))
        };
        let a = tri!(parse(tri!(c_str(a))));
        let b = tri!(parse(tri!(c_str(b))));
        match pauli::commutes(&a, &b) {
            Ok(v) => write_bool(out, v),
            Err(e) => fail(KsStatus::InvalidArgument, e.to_string()),
        }
    })
}

/// Number of index-increasing commuting `size`-tuples on `qubits` qubits whose
/// product is `±1`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ks_pauli_parity_tuple_count(qubits: usize, size: usize, out: *mut usize) -> KsStatus {
    guard(|| {
        if out.is_null() {
            return fail(KsStatus::NullPointer, "null output pointer");
        }
        if qubits == 0 || qubits > 4 {
            return fail(KsStatus::InvalidArgument, "qubits must be between 1 and 4");
        }
        *out = pauli::enumerate_parity_tuples(qubits, size).len();
        KsStatus::Ok
    })
}
