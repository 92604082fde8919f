/* Copyright 2026 The ksconf Developers. Licensed under the Apache License, Version 2.0. */

#ifndef KSCONF_H
#define KSCONF_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes.
 */
typedef enum KsStatus {
  KS_STATUS_OK = 0,
  KS_STATUS_NULL_POINTER = 1,
  KS_STATUS_INVALID_ARGUMENT = 2,
  KS_STATUS_PARSE_ERROR = 3,
  KS_STATUS_UNKNOWN_DATASET = 4,
  KS_STATUS_BUFFER_TOO_SMALL = 5,
  KS_STATUS_PANIC = 6,
} KsStatus;

/**
 * Opaque configuration handle.
 */
typedef struct KsConfiguration KsConfiguration;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Copies the last error message of this thread into `buf` (NUL-terminated,
 * truncated to `len`) and returns the full message length without the NUL.
 *
 * # Safety
 * `buf` must be null or point to `len` writable bytes.
 */
size_t ks_last_error_message(char *buf, size_t len);

/**
 * Static NUL-terminated version string.
 */
const char *ks_version(void);

/**
 * Loads a single-configuration built-in dataset by name (`M`, `N`, `T0`,
 * `KP40`, `KP36`, `E8`, `A`, `B`; case-insensitive).
 *
 * # Safety
 * `name` must be a NUL-terminated string; `out` must be writable.
 */
enum KsStatus ks_configuration_builtin(const char *name, struct KsConfiguration **out);

/**
 * The `index`-th tropical 48-ray subconfiguration of `M` (`0 <= index < 32`).
 *
 * # Safety
 * `out` must be writable.
 */
enum KsStatus ks_configuration_tropical(size_t index, struct KsConfiguration **out);

/**
 * Builds a configuration from `count·dim` Gaussian integers given as
 * interleaved `(re, im)` pairs, ray-major.
 *
 * # Safety
 * `coords` must point to `2·count·dim` readable values; `out` must be writable.
 */
enum KsStatus ks_configuration_from_coords(size_t dim,
                                           size_t count,
                                           const int64_t *coords,
                                           struct KsConfiguration **out);

/**
 * Parses a vector file. `dim == 0` or `count == 0` leaves that value to inference.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum KsStatus ks_configuration_parse(const char *text,
                                     size_t dim,
                                     size_t count,
                                     struct KsConfiguration **out);

/**
 * Subconfiguration on the listed ray indices.
 *
 * # Safety
 * `indices` must point to `n` readable values; `out` must be writable.
 */
enum KsStatus ks_configuration_induced(const struct KsConfiguration *handle,
                                       const size_t *indices,
                                       size_t n,
                                       struct KsConfiguration **out);

/**
 * Releases a handle; null is ignored.
 *
 * # Safety
 * `handle` must come from this library and not be used afterwards.
 */
void ks_configuration_free(struct KsConfiguration *handle);

/**
 * Number of rays and dimension.
 *
 * # Safety
 * `len` and `dim` must be writable (either may be null to skip it).
 */
enum KsStatus ks_configuration_shape(const struct KsConfiguration *handle,
                                     size_t *len,
                                     size_t *dim);

/**
 * Writes the clique and anticlique rows (`k = 1..`) into two arrays of
 * capacity `cap`; `written` receives the row lengths. Too small a buffer gives
 * [`KsStatus::BufferTooSmall`] with `written` set to the needed size.
 *
 * # Safety
 * Both arrays must hold `cap` writable values; `written` must be writable.
 */
enum KsStatus ks_signature(const struct KsConfiguration *handle,
                           uint64_t *cliques,
                           uint64_t *anticliques,
                           size_t cap,
                           size_t *clique_len,
                           size_t *anticlique_len);

/**
 * No KS colouring exists.
 *
 * # Safety
 * `out` must be writable.
 */
enum KsStatus ks_is_kochen_specker(const struct KsConfiguration *handle, bool *out);

/**
 * Every clique extends to a maximal clique inside the configuration.
 *
 * # Safety
 * `out` must be writable.
 */
enum KsStatus ks_is_saturated(const struct KsConfiguration *handle, bool *out);

/**
 * KS, and colourable after deleting any one ray.
 *
 * # Safety
 * `out` must be writable.
 */
enum KsStatus ks_is_critical(const struct KsConfiguration *handle, bool *out);

/**
 * Every `(d-1)`-clique lies in exactly one `d`-clique.
 *
 * # Safety
 * `out` must be writable.
 */
enum KsStatus ks_steiner(const struct KsConfiguration *handle, bool *out);

/**
 * Number of maximal (`d`-element) cliques.
 *
 * # Safety
 * `out` must be writable.
 */
enum KsStatus ks_capacity(const struct KsConfiguration *handle, size_t *out);

/**
 * Searches for a colouring with `partition[a]` rays of colour `a` in every
 * maximal clique. On success `found` tells whether one exists and, if so,
 * `values` (length = number of rays) holds the colours.
 *
 * # Safety
 * `partition` must hold `parts` values, `values` `values_len` writable bytes,
 * and `found` must be writable.
 */
enum KsStatus ks_partition_colouring(const struct KsConfiguration *handle,
                                     const size_t *partition,
                                     size_t parts,
                                     uint8_t *values,
                                     size_t values_len,
                                     bool *found);

/**
 * Whether two Pauli words (e.g. `"XZY"`) commute.
 *
 * # Safety
 * Both strings must be NUL-terminated; `out` must be writable.
 */
enum KsStatus ks_pauli_commutes(const char *a, const char *b, bool *out);

/**
 * Number of index-increasing commuting `size`-tuples on `qubits` qubits whose
 * product is `±1`.
 *
 * # Safety
 * `out` must be writable.
 */
enum KsStatus ks_pauli_parity_tuple_count(size_t qubits, size_t size, size_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* KSCONF_H */
