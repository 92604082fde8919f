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

//! Command-line front end.
//!
//! Machine-readable results go to standard output; lines starting with `#` are
//! comments, so the output of `reduce`, `tropical` and `entropy` can be read
//! back as index-set or weight files. Human summaries go to standard error.

use std::collections::{BTreeMap, BTreeSet};
use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;

use crate::bits::Bits;
use crate::colouring::{critical_reduce, find_partition_colouring, is_critical, is_ks_configuration};
use crate::datasets::{self, Dataset, CRITICAL_36, TROPICAL_48};
use crate::entropy::{entropy_report, minimize_entropy, BoundSource, MinimizeOptions, EQUIENTROPY_TOL};
use crate::io::{self, IoError};
use crate::orthograph::{is_saturated, maximal_cliques, signature, steiner_check, Saturation};
use crate::pauli::{self, PauliWord};
use crate::rays::Configuration;
use crate::tropical::{
    check_pair_coverage, enumerate_tropical_subconfigurations, tropical_dimension, Coverage, TropicalDimension,
    TropicalOptions, TropicalWitness, TupleEnumerator,
};

/// Exit status for unreadable or malformed input.
pub const EXIT_INPUT: i32 = 3;
/// Exit status for a computation that cannot proceed on valid input.
pub const EXIT_COMPUTE: i32 = 1;

#[derive(Parser, Debug)]
#[command(
    name = "ksconf",
    version,
    about = "Exact analysis of Kochen-Specker ray configurations"
)]
pub struct Cli {
    /// Worker threads (default: available hardware parallelism).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

/// A built-in dataset name or a vector file.
#[derive(Args, Debug, Clone)]
pub struct Input {
    /// Built-in name (M, N, T0, TROPICALS, KP40, KP36, E8, A, B) or path to a vector file.
    pub input: String,
    /// Dimension of the vectors in the file.
    #[arg(long)]
    pub dim: Option<usize>,
    /// Number of vectors expected in the file.
    #[arg(long)]
    pub count: Option<usize>,
    /// Restrict to the rays listed in this index-set file.
    #[arg(long)]
    pub subset: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Saturation, KS, criticality and the Steiner-like property.
    Check(Input),
    /// Clique row and anticlique row.
    Signature(Input),
    /// Signature-guided deletion down to critical subconfigurations.
    Reduce(Input),
    /// Tropical dimension and tropical subconfigurations.
    Tropical {
        #[command(flatten)]
        input: Input,
        /// Largest collection size to try.
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        /// Visit every tuple of maximal cliques (very long for 64 rays).
        #[arg(long)]
        exhaustive: bool,
        /// Random overlapping tuples checked per size in the default mode.
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        /// Seed for the overlapping-tuple sample.
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
        /// Progress file for `--exhaustive`; an existing file is resumed.
        #[arg(long)]
        checkpoint: Option<PathBuf>,
    },
    /// Colouring with a fixed number of rays of each colour in every maximal clique.
    Colour {
        #[command(flatten)]
        input: Input,
        /// Colour multiplicities per clique, non-increasing, e.g. `6,2`.
        #[arg(long, value_delimiter = ',', required = true)]
        partition: Vec<usize>,
    },
    /// Entropy of a given weight, or an upper bound on the configuration entropy.
    Entropy {
        #[command(flatten)]
        input: Input,
        /// Weight file (`index p/q` per line) to evaluate instead of searching.
        #[arg(long)]
        witness: Option<PathBuf>,
        /// Random starts of the continuous search.
        #[arg(long, default_value_t = 8)]
        starts: usize,
        /// Seed for the random starts.
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
    /// Real Pauli words on qubits.
    #[command(subcommand)]
    Pauli(PauliCommand),
    /// Built-in datasets.
    #[command(subcommand)]
    Dataset(DatasetCommand),
    /// Capacity-guided assembly of the 64-ray configuration from A and T(A).
    Construct,
}

#[derive(Subcommand, Debug)]
pub enum PauliCommand {
    /// Joint eigenrays of the eight built-in lines, as a vector file.
    Lines,
    /// Index-increasing commuting tuples with product ±1.
    Tuples {
        #[arg(long, default_value_t = 3)]
        qubits: usize,
        #[arg(long, default_value_t = 7)]
        size: usize,
    },
    /// Single-positive-edge parity proofs over the 26 line words.
    Mine {
        /// Also list every proof.
        #[arg(long)]
        proofs: bool,
    },
    /// Joint eigenrays of commuting words.
    Eigenrays {
        #[arg(required = true)]
        words: Vec<String>,
    },
    /// Checks the built-in eight-edge parity proof.
    Proof,
}

#[derive(Subcommand, Debug)]
pub enum DatasetCommand {
    /// Names and sizes.
    List,
    /// Vector file of a dataset, or index sets into M with `--indices`.
    Export {
        name: String,
        #[arg(long)]
        indices: bool,
    },
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

struct Loaded {
    label: String,
    config: Configuration,
    /// Index of each ray in the base configuration (the input file or `M`).
    origin: Vec<usize>,
    base: String,
}

impl Loaded {
    fn to_base(&self, local: &Bits) -> Vec<usize> {
        local.iter().map(|i| self.origin[i]).collect()
    }
}

fn load(input: &Input) -> Result<Vec<Loaded>> {
    let path = Path::new(&input.input);
    let mut loaded = if path.is_file() {
        let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let config =
            io::parse_vectors(&text, input.dim, input.count).with_context(|| format!("parsing {}", path.display()))?;
        vec![Loaded {
            label: path.display().to_string(),
            origin: (0..config.len()).collect(),
            base: path.display().to_string(),
            config,
        }]
    } else {
        let name: Dataset = input
            .input
            .parse()
            .with_context(|| format!("{:?} is neither a file nor a dataset", input.input))?;
        name.load()
            .into_iter()
            .enumerate()
            .map(|(i, config)| {
                let in_m: Option<Vec<usize>> = match name {
                    Dataset::N => Some(CRITICAL_36.to_vec()),
                    Dataset::T0 => Some(TROPICAL_48.to_vec()),
                    Dataset::Tropicals => Some(datasets::TROPICAL_UNIONS[i].iter().map(|&x| usize::from(x)).collect()),
                    _ => None,
                };
                Loaded {
                    label: if name == Dataset::Tropicals {
                        format!("{name}[{i}]")
                    } else {
                        name.to_string()
                    },
                    base: if in_m.is_some() { "M".into() } else { name.to_string() },
                    origin: in_m.unwrap_or_else(|| (0..config.len()).collect()),
                    config,
                }
            })
            .collect()
    };
    if let Some(sub) = &input.subset {
        let text = fs::read_to_string(sub).with_context(|| format!("reading {}", sub.display()))?;
        for l in loaded.iter_mut() {
            let idx =
                io::parse_index_set(&text, l.config.len()).with_context(|| format!("parsing {}", sub.display()))?;
            let keep = Bits::from_indices(idx);
            l.origin = keep.iter().map(|i| l.origin[i]).collect();
            l.config = l.config.induced(&keep);
            l.label = format!("{} / {}", l.label, sub.display());
        }
    }
    Ok(loaded)
}

fn load_one(input: &Input) -> Result<Loaded> {
    let mut all = load(input)?;
    if all.len() != 1 {
        bail!(
            "{} names {} configurations; pick one with a file",
            input.input,
            all.len()
        );
    }
    Ok(all.remove(0))
}

/// Parses `args`, runs the command, and returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return code;
        }
    };
    if let Some(j) = cli.jobs {
        // a global pool can be installed once per process; later calls keep the first
        let _ = rayon::ThreadPoolBuilder::new().num_threads(j.max(1)).build_global();
    }
    match dispatch(&cli.command, out, err) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            if e.chain()
                .any(|c| c.is::<IoError>() || c.is::<datasets::DatasetError>() || c.is::<std::io::Error>())
            {
                EXIT_INPUT
            } else {
                EXIT_COMPUTE
            }
        }
    }
}

fn dispatch(cmd: &Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<()> {
    let started = Instant::now();
    match cmd {
        Command::Check(input) => {
            let all = load(input)?;
            let many = all.len() > 1;
            for l in all {
                let c = &l.config;
                let sat = is_saturated(c);
                let ks = is_ks_configuration(c);
                let critical = ks && is_critical(c);
                let steiner = steiner_check(c);
                let prefix = if many { format!("{}: ", l.label) } else { String::new() };
                writeln!(
                    out,
                    "{prefix}saturated: {}, KS: {}, critical: {}, Steiner: {}",
                    yes(sat.is_saturated()),
                    yes(ks),
                    yes(critical),
                    yes(steiner)
                )?;
                if let Saturation::Blocked(cl) = sat {
                    writeln!(err, "{}: clique {:?} has no common orthogonal ray", l.label, cl)?;
                }
                writeln!(err, "{}: {} rays in dimension {}", l.label, c.len(), c.dim())?;
            }
        }
        Command::Signature(input) => {
            for l in load(input)? {
                writeln!(out, "{}", signature(&l.config))?;
                writeln!(err, "{}: {} rays", l.label, l.config.len())?;
            }
        }
        Command::Reduce(input) => {
            let l = load_one(input)?;
            let report = critical_reduce(&l.config)?;
            for (i, s) in report.steps.iter().enumerate() {
                writeln!(out, "# step {}: m={} k={}", i + 1, s.survivors, s.classes)?;
            }
            writeln!(out, "# critical subconfigurations as indices into {}", l.base)?;
            for t in &report.terminal {
                write!(out, "{}", io::write_index_set(&l.to_base(t)))?;
            }
            writeln!(
                err,
                "{}: {} iterations; {} critical subconfiguration(s) on the last frontier, {} in total (sizes {:?})",
                l.label,
                report.iterations(),
                report.terminal.len(),
                report.critical.len(),
                report.critical.iter().map(Bits::len).collect::<Vec<_>>()
            )?;
        }
        Command::Tropical {
            input,
            max_n,
            exhaustive,
            samples,
            seed,
            checkpoint,
        } => {
            let l = load_one(input)?;
            let dim = if *exhaustive {
                exhaustive_tropical(&l.config, *max_n, checkpoint.as_deref(), err)?
            } else {
                tropical_dimension(
                    &l.config,
                    TropicalOptions {
                        max_n: *max_n,
                        coverage: Coverage::DisjointPlusSample {
                            samples: *samples,
                            seed: *seed,
                        },
                    },
                )?
            };
            match dim {
                None => {
                    writeln!(out, "# no section-free collection of at most {max_n} maximal cliques")?;
                    writeln!(
                        err,
                        "{}: tropical dimension exceeds {max_n} (within the searched tuples)",
                        l.label
                    )?;
                }
                Some(d) => {
                    let subs = enumerate_tropical_subconfigurations(&l.config, &d);
                    writeln!(out, "# tropical dimension {}; unions as indices into {}", d.n, l.base)?;
                    for s in &subs {
                        let local = Bits::from_indices(s.indices.iter().copied());
                        write!(out, "{}", io::write_index_set(&l.to_base(&local)))?;
                    }
                    let disjoint = d
                        .witnesses
                        .iter()
                        .filter(|w| w.union.len() == d.n * l.config.dim())
                        .count();
                    writeln!(
                        err,
                        "{}: n = {}, {} witness tuples ({} pairwise disjoint), {} distinct unions of sizes {:?}; coverage {:?}",
                        l.label,
                        d.n,
                        d.witnesses.len(),
                        disjoint,
                        subs.len(),
                        subs.iter().map(|s| s.indices.len()).collect::<BTreeSet<_>>(),
                        d.coverage
                    )?;
                }
            }
        }
        Command::Colour { input, partition } => {
            let l = load_one(input)?;
            match find_partition_colouring(&l.config, partition)? {
                Some(c) => {
                    let vals: Vec<String> = c.values.iter().map(u8::to_string).collect();
                    writeln!(out, "{}", vals.join(" "))?;
                    for (k, n) in partition.iter().enumerate() {
                        writeln!(err, "colour {k}: {n} per clique, {} rays", c.class(k as u8).len())?;
                    }
                }
                None => {
                    writeln!(out, "none")?;
                    writeln!(
                        err,
                        "{}: no {:?} colouring exists (exhaustive search)",
                        l.label, partition
                    )?;
                }
            }
        }
        Command::Entropy {
            input,
            witness,
            starts,
            seed,
        } => {
            let l = load_one(input)?;
            if let Some(path) = witness {
                let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
                let w =
                    io::parse_weights(&text, l.config.len()).with_context(|| format!("parsing {}", path.display()))?;
                let r = entropy_report(&l.config, &w, EQUIENTROPY_TOL)?;
                writeln!(out, "equientropic: {}", yes(r.equientropic))?;
                if let Some(s) = r.common_value {
                    writeln!(out, "S0: {s:.15}")?;
                    writeln!(out, "statistical weight: {:.15}", s.exp())?;
                }
                let spread: BTreeSet<String> = r.per_clique.iter().map(|(_, s)| format!("{s:.12}")).collect();
                writeln!(err, "{} cliques; distinct entropies: {:?}", r.per_clique.len(), spread)?;
            } else {
                let b = minimize_entropy(
                    &l.config,
                    MinimizeOptions {
                        starts: *starts,
                        seed: *seed,
                        ..MinimizeOptions::default()
                    },
                )?;
                writeln!(
                    out,
                    "# entropy upper bound (not a proof of optimality): {:.15}",
                    b.bound
                )?;
                let source = match &b.source {
                    BoundSource::KsColouring => "KS colouring".to_string(),
                    BoundSource::PartitionColouring(p) => format!("partition colouring {p:?}"),
                    BoundSource::ContinuousSearch => "continuous search".to_string(),
                    BoundSource::Uniform => "uniform weight".to_string(),
                };
                writeln!(out, "# source: {source}")?;
                write!(out, "{}", io::write_weights(&b.witness))?;
                writeln!(
                    err,
                    "{}: S <= {:.15} (statistical weight <= {:.6})",
                    l.label,
                    b.bound,
                    b.bound.exp()
                )?;
            }
        }
        Command::Pauli(p) => pauli_command(p, out, err)?,
        Command::Dataset(DatasetCommand::List) => {
            for d in Dataset::ALL {
                if d == Dataset::Tropicals {
                    writeln!(out, "{d}\t32 x 48")?;
                } else {
                    writeln!(out, "{d}\t{}", datasets::builtin(d).len())?;
                }
            }
        }
        Command::Dataset(DatasetCommand::Export { name, indices }) => {
            let d: Dataset = name.parse()?;
            if *indices {
                match d {
                    Dataset::N => write!(out, "{}", io::write_index_set(&CRITICAL_36))?,
                    Dataset::T0 => write!(out, "{}", io::write_index_set(&TROPICAL_48))?,
                    Dataset::Tropicals => {
                        let sets: Vec<Vec<usize>> = datasets::TROPICAL_UNIONS
                            .iter()
                            .map(|u| u.iter().map(|&i| usize::from(i)).collect())
                            .collect();
                        write!(out, "{}", io::write_index_sets(&sets))?;
                    }
                    other => bail!("{other} is not stored as an index set into M"),
                }
            } else {
                for c in d.load() {
                    write!(out, "{}", io::write_vectors(&c))?;
                }
            }
        }
        Command::Construct => {
            let p = datasets::capacity_pipeline();
            writeln!(out, "clique pair capacities: {:?}", p.pair_capacities)?;
            writeln!(out, "W sets: {}", p.w_sets.len())?;
            writeln!(out, "W pair capacities: {:?}", p.w_pair_capacities)?;
            writeln!(
                out,
                "Q sets: {} (capacity {}, sizes {:?})",
                p.q_sets.len(),
                p.q_capacity,
                p.q_sets.iter().map(Bits::len).collect::<BTreeSet<_>>()
            )?;
            writeln!(
                out,
                "capacity of A: {} ({} splits into two Q sets)",
                p.capacity_a,
                p.a_splits.len()
            )?;
            writeln!(out, "union capacities: {:?}", p.union_capacities)?;
            let mut by_cap: BTreeMap<usize, (usize, usize, usize)> = BTreeMap::new();
            for u in &p.improving {
                let e = by_cap.entry(u.capacity).or_default();
                e.0 += 1;
                e.1 += usize::from(u.kochen_specker);
                e.2 += usize::from(u.equals_m);
            }
            for (cap, (n, ks, m)) in by_cap {
                writeln!(out, "capacity {cap}: {n} pairs, {ks} KS, {m} equal to M")?;
            }
        }
    }
    writeln!(err, "elapsed: {:.3}s", started.elapsed().as_secs_f64())?;
    Ok(())
}

fn pauli_command(p: &PauliCommand, out: &mut dyn Write, err: &mut dyn Write) -> Result<()> {
    match p {
        PauliCommand::Lines => {
            let c = pauli::configuration_from_lines(&pauli::lines())?;
            write!(out, "{}", io::write_vectors(&c))?;
            let m = datasets::saturated_64();
            let same = c.len() == m.len() && m.locate(&c).is_some();
            writeln!(err, "{} distinct rays; equal to M as a ray set: {}", c.len(), yes(same))?;
        }
        PauliCommand::Tuples { qubits, size } => {
            let t = pauli::enumerate_parity_tuples(*qubits, *size);
            for (words, sign) in &t {
                let w: Vec<String> = words.iter().map(PauliWord::to_string).collect();
                writeln!(out, "{} {}", if *sign < 0 { '-' } else { '+' }, w.join(" "))?;
            }
            writeln!(err, "{} tuples of size {size} on {qubits} qubits", t.len())?;
        }
        PauliCommand::Mine { proofs } => {
            let r = pauli::mine_parity_proofs(&pauli::line_words());
            for prof in &r.profiles {
                let row: Vec<String> = prof.iter().map(usize::to_string).collect();
                writeln!(out, "{}", row.join(" "))?;
            }
            if *proofs {
                for pr in &r.proofs {
                    writeln!(
                        out,
                        "# proof negative-mask {:#08x} positive {}",
                        pr.negative_mask, pr.positive
                    )?;
                }
            }
            writeln!(
                err,
                "{} negative and {} positive 4-edges; {} proofs; {} distinct profiles",
                r.negative_edges.len(),
                r.positive_edges.len(),
                r.proofs.len(),
                r.profiles.len()
            )?;
        }
        PauliCommand::Eigenrays { words } => {
            let w = words
                .iter()
                .map(|s| s.parse::<PauliWord>())
                .collect::<Result<Vec<_>, _>>()?;
            let rays = pauli::joint_eigenrays(&w)?;
            let c = Configuration::new(rays)?;
            write!(out, "{}", io::write_vectors(&c))?;
        }
        PauliCommand::Proof => {
            let h = pauli::proof_example();
            let ok = pauli::verify_parity_proof(&h)?;
            writeln!(out, "parity proof: {}", yes(ok))?;
            for (v, d) in h.vertices.iter().zip(h.degrees()) {
                writeln!(out, "{v} {d}")?;
            }
            let c = pauli::underlying_configuration(&h, &pauli::lines())?;
            writeln!(
                err,
                "underlying rays: {}, KS: {}",
                c.len(),
                yes(is_ks_configuration(&c))
            )?;
        }
    }
    Ok(())
}

/// A size and an increasing clique-index tuple.
type Witness = (usize, Vec<usize>);

/// Line `done n first count` marks a finished first clique; `w n i0 i1 …` lines are its witnesses.
#[derive(Default)]
struct Checkpoint {
    /// Finished `(n, first clique)` pairs.
    done: BTreeSet<(usize, usize)>,
    witnesses: Vec<Witness>,
}

fn read_checkpoint(path: &Path) -> Result<Checkpoint> {
    let mut done = BTreeSet::new();
    let mut witnesses = Vec::new();
    if !path.exists() {
        return Ok(Checkpoint::default());
    }
    let text = fs::read_to_string(path)?;
    let mut pending: Vec<Witness> = Vec::new();
    for (no, line) in text.lines().enumerate() {
        let parts: Vec<&str> = line.split_whitespace().collect();
        let nums = |s: &[&str]| -> Result<Vec<usize>> {
            s.iter()
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| anyhow!("checkpoint line {}: bad number {t:?}", no + 1))
                })
                .collect()
        };
        match parts.split_first() {
            Some((&"w", rest)) => {
                let v = nums(rest)?;
                let (n, t) = v
                    .split_first()
                    .ok_or_else(|| anyhow!("checkpoint line {}: empty witness", no + 1))?;
                pending.push((*n, t.to_vec()));
            }
            Some((&"done", rest)) => {
                let v = nums(rest)?;
                if v.len() != 3 {
                    bail!("checkpoint line {}: expected `done n first count`", no + 1);
                }
                // witnesses written before an unfinished `done` are dropped and recomputed
                let mine: Vec<_> = pending
                    .drain(..)
                    .filter(|(n, t)| *n == v[0] && t.first() == Some(&v[1]))
                    .collect();
                if mine.len() != v[2] {
                    bail!(
                        "checkpoint line {}: {} witnesses recorded, {} declared",
                        no + 1,
                        mine.len(),
                        v[2]
                    );
                }
                done.insert((v[0], v[1]));
                witnesses.extend(mine);
            }
            None => {}
            Some(_) => bail!("checkpoint line {}: unknown record", no + 1),
        }
    }
    Ok(Checkpoint { done, witnesses })
}

fn exhaustive_tropical(
    config: &Configuration,
    max_n: usize,
    checkpoint: Option<&Path>,
    err: &mut dyn Write,
) -> Result<Option<TropicalDimension>> {
    let cliques = maximal_cliques(config);
    check_pair_coverage(config, &cliques)?;
    let Checkpoint {
        done,
        witnesses: mut found,
    } = match checkpoint {
        Some(p) => read_checkpoint(p)?,
        None => Checkpoint::default(),
    };
    let mut log = match checkpoint {
        Some(p) => Some(fs::OpenOptions::new().create(true).append(true).open(p)?),
        None => None,
    };
    let batch = rayon::current_num_threads().max(1);
    for n in 2..=max_n.min(cliques.len()) {
        let e = TupleEnumerator::new(config.adjacency(), &cliques, n, false);
        let todo: Vec<usize> = (0..e.firsts()).filter(|f| !done.contains(&(n, *f))).collect();
        let mut finished = e.firsts() - todo.len();
        for chunk in todo.chunks(batch) {
            let results: Vec<(usize, Vec<Vec<usize>>)> = chunk.par_iter().map(|&f| (f, e.from_first(f))).collect();
            for (f, ws) in results {
                if let Some(file) = log.as_mut() {
                    for w in &ws {
                        let row: Vec<String> = w.iter().map(usize::to_string).collect();
                        writeln!(file, "w {n} {}", row.join(" "))?;
                    }
                    writeln!(file, "done {n} {f} {}", ws.len())?;
                    file.flush()?;
                }
                found.extend(ws.into_iter().map(|w| (n, w)));
                finished += 1;
            }
            let so_far = found.iter().filter(|(k, _)| *k == n).count();
            writeln!(
                err,
                "n={n}: {finished}/{} first cliques done, {so_far} witnesses",
                e.firsts()
            )?;
        }
        let mut at_n: Vec<Vec<usize>> = found.iter().filter(|(k, _)| *k == n).map(|(_, w)| w.clone()).collect();
        if !at_n.is_empty() {
            at_n.sort();
            return Ok(Some(TropicalDimension {
                n,
                witnesses: at_n
                    .into_iter()
                    .map(|t| TropicalWitness {
                        union: t.iter().fold(Bits::EMPTY, |a, &i| a | cliques[i]),
                        clique_indices: t,
                    })
                    .collect(),
                coverage: Coverage::Exhaustive,
                sampled: Vec::new(),
            }));
        }
    }
    Ok(None)
}
