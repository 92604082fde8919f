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

//! Text formats: vector files, index-set files and weight files.
//!
//! A vector file is a whitespace-separated stream of `N·d` entries, ray `i`
//! coordinate `k` at position `i·d + k`. Entries are integers or `re+imj`.
//! Index-set files are whitespace-separated ray indices; a file of several
//! sets holds fixed-size chunks. Weight files hold one `index value` pair per
//! line with `value` an integer, `p/q`, or a decimal.

use std::fmt::Write as _;

use num_rational::Rational64;
use thiserror::Error;

use crate::entropy::ProbabilityWeight;
use crate::rays::{Configuration, GaussianInt, Ray, RayError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IoError {
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{tokens} entries do not split into vectors of dimension {dim}")]
    Dimension { tokens: usize, dim: usize },
    #[error("expected {expected} vectors, found {found}")]
    Count { expected: usize, found: usize },
    #[error("cannot infer the dimension: pass it explicitly or put one vector per line")]
    UnknownDimension,
    #[error("index {index} out of range for {len} rays")]
    IndexRange { index: usize, len: usize },
    #[error("{tokens} indices do not split into sets of {size}")]
    ChunkSize { tokens: usize, size: usize },
    #[error("ray {index}: {source}")]
    Ray { index: usize, source: RayError },
}

struct Token<'a> {
    text: &'a str,
    line: usize,
    column: usize,
}

fn tokens(text: &str) -> impl Iterator<Item = Token<'_>> {
    text.lines().enumerate().flat_map(|(l, line)| {
        let body = line.split('#').next().unwrap_or("");
        body.split_whitespace().map(move |t| Token {
            text: t,
            line: l + 1,
            column: t.as_ptr() as usize - line.as_ptr() as usize + 1,
        })
    })
}

fn parse_error(t: &Token<'_>, message: impl Into<String>) -> IoError {
    IoError::Parse {
        line: t.line,
        column: t.column,
        message: message.into(),
    }
}

/// Parses a vector file. Without `dim`, the dimension comes from `count` or
/// from a layout of one vector per line.
pub fn parse_vectors(text: &str, dim: Option<usize>, count: Option<usize>) -> Result<Configuration, IoError> {
    let toks: Vec<Token<'_>> = tokens(text).collect();
    let entries = toks
        .iter()
        .map(|t| {
            t.text
                .parse::<GaussianInt>()
                .map_err(|_| parse_error(t, format!("{:?} is neither an integer nor re+imj", t.text)))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let dim = match (dim, count) {
        (Some(d), _) => d,
        (None, Some(c)) if c > 0 && entries.len() % c == 0 => entries.len() / c,
        (None, Some(c)) => {
            return Err(IoError::Count {
                expected: c,
                found: entries.len(),
            })
        }
        (None, None) => line_dimension(&toks)?,
    };
    if dim == 0 || entries.len() % dim != 0 {
        return Err(IoError::Dimension {
            tokens: entries.len(),
            dim,
        });
    }
    let n = entries.len() / dim;
    if let Some(c) = count {
        if c != n {
            return Err(IoError::Count { expected: c, found: n });
        }
    }
    let rays = entries
        .chunks(dim)
        .enumerate()
        .map(|(index, c)| Ray::new(c.to_vec()).map_err(|source| IoError::Ray { index, source }))
        .collect::<Result<Vec<_>, _>>()?;
    Configuration::with_dim(dim, rays).map_err(|source| IoError::Ray { index: 0, source })
}

fn line_dimension(toks: &[Token<'_>]) -> Result<usize, IoError> {
    let mut per_line: Vec<usize> = Vec::new();
    let mut last = 0;
    for t in toks {
        if t.line != last {
            per_line.push(0);
            last = t.line;
        }
        *per_line.last_mut().expect("pushed above") += 1;
    }
    match per_line.first() {
        Some(&d) if per_line.len() > 1 && per_line.iter().all(|&x| x == d) => Ok(d),
        _ => Err(IoError::UnknownDimension),
    }
}

/// One ray per line, entries separated by single spaces.
pub fn write_vectors(config: &Configuration) -> String {
    let mut out = String::new();
    for r in config.rays() {
        let row: Vec<String> = r.coords().iter().map(|z| z.to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// Whitespace-separated indices, each `< len`.
pub fn parse_index_set(text: &str, len: usize) -> Result<Vec<usize>, IoError> {
    tokens(text)
        .map(|t| {
            let i: usize = t
                .text
                .parse()
                .map_err(|_| parse_error(&t, format!("{:?} is not a ray index", t.text)))?;
            if i >= len {
                return Err(parse_error(&t, format!("index {i} out of range for {len} rays")));
            }
            Ok(i)
        })
        .collect()
}

/// Consecutive chunks of `size` indices.
pub fn parse_index_sets(text: &str, len: usize, size: usize) -> Result<Vec<Vec<usize>>, IoError> {
    let all = parse_index_set(text, len)?;
    if size == 0 || all.len() % size != 0 {
        return Err(IoError::ChunkSize {
            tokens: all.len(),
            size,
        });
    }
    Ok(all.chunks(size).map(<[usize]>::to_vec).collect())
}

pub fn write_index_set(indices: &[usize]) -> String {
    let row: Vec<String> = indices.iter().map(usize::to_string).collect();
    row.join(" ") + "\n"
}

/// One set per line.
pub fn write_index_sets(sets: &[Vec<usize>]) -> String {
    sets.iter().map(|s| write_index_set(s)).collect()
}

/// Weight file; rays not listed get zero. Any decimal entry switches to floating mode.
pub fn parse_weights(text: &str, len: usize) -> Result<ProbabilityWeight, IoError> {
    enum V {
        Q(Rational64),
        F(f64),
    }
    let mut entries: Vec<(usize, V)> = Vec::new();
    for (l, line) in text.lines().enumerate() {
        let toks: Vec<Token<'_>> = tokens(line).map(|t| Token { line: l + 1, ..t }).collect();
        match toks.as_slice() {
            [] => continue,
            [i, v] => {
                let index: usize = i
                    .text
                    .parse()
                    .map_err(|_| parse_error(i, format!("{:?} is not a ray index", i.text)))?;
                if index >= len {
                    return Err(parse_error(i, format!("index {index} out of range for {len} rays")));
                }
                let value = if v.text.contains(['.', 'e', 'E']) {
                    V::F(v.text.parse().map_err(|_| parse_error(v, "bad decimal value"))?)
                } else {
                    V::Q(
                        v.text
                            .parse()
                            .map_err(|_| parse_error(v, "bad rational value (expected p/q)"))?,
                    )
                };
                entries.push((index, value));
            }
            [first, ..] => return Err(parse_error(first, "expected `index value`")),
        }
    }
    if entries.iter().any(|(_, v)| matches!(v, V::F(_))) {
        let mut out = vec![0.0; len];
        for (i, v) in entries {
            out[i] = match v {
                V::F(x) => x,
                V::Q(q) => *q.numer() as f64 / *q.denom() as f64,
            };
        }
        Ok(ProbabilityWeight::Float(out))
    } else {
        let mut out = vec![Rational64::from_integer(0); len];
        for (i, v) in entries {
            if let V::Q(q) = v {
                out[i] = q;
            }
        }
        Ok(ProbabilityWeight::Rational(out))
    }
}

/// Nonzero entries as `index p/q` (or decimals in floating mode).
pub fn write_weights(f: &ProbabilityWeight) -> String {
    let mut out = String::new();
    match f {
        ProbabilityWeight::Rational(v) => {
            for (i, q) in v.iter().enumerate().filter(|(_, q)| **q != Rational64::from_integer(0)) {
                let _ = writeln!(out, "{i} {}/{}", q.numer(), q.denom());
            }
        }
        ProbabilityWeight::Float(v) => {
            for (i, x) in v.iter().enumerate().filter(|(_, x)| **x != 0.0) {
                let _ = writeln!(out, "{i} {x:.17e}");
            }
        }
    }
    out
}
