//! Irreducible tetrahedra and the sequence `T(n)/2`.
//!
//! Every regular tetrahedron in `{0..n}³` is a translate of a cube-symmetric
//! image of `j·T` for exactly one irreducible class `T` and one dilation `j`.
//! Generation walks faces `(d, k, (m, n), solution)` and keeps one record per
//! class; counting sums the orbit polynomial over records and dilations.

use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cache::CacheError;
use crate::facegen::{
    enclosing_cube, face_basis, is_regular, max_face_d, tetra_pair, FaceBasis, FaceError, Tetra,
};
use crate::numtheory::{
    k_values, mn_primitive, three_squares_primitive, MNPair, NumError, PrimitiveSolution,
};
use crate::orbits::{class_key, ShapeProfile};

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error(transparent)]
    Num(#[from] NumError),
    #[error(transparent)]
    Face(#[from] FaceError),
    #[error(transparent)]
    Cache(#[from] CacheError),
    #[error("total count for n = {n} is odd ({total}); pairing violated")]
    OddTotal { n: u32, total: u64 },
    #[error("failed to build thread pool: {0}")]
    ThreadPool(String),
}

pub type Result<T> = std::result::Result<T, PipelineError>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrreducibleRecord {
    /// `d` of the generating face.
    pub d: i64,
    pub k: i64,
    pub mn: MNPair,
    pub m_cube: i64,
    /// Class representative: the smallest octant-normalized symmetric image.
    pub tetra: Tetra,
    pub source: PrimitiveSolution,
}

impl IrreducibleRecord {
    /// `λ = d·k`; every edge has length `λ√2`.
    pub fn side(&self) -> i64 {
        self.d * self.k
    }
}

fn solutions_with_bases(d: u64) -> Result<Vec<FaceBasis>> {
    three_squares_primitive(d)?
        .into_iter()
        .map(|s| face_basis(s).map_err(PipelineError::from))
        .collect()
}

/// Generates the records whose side `λ = d·k` lies in `(above, n_max]`.
///
/// For each `k`, both the canonical `(m, n)` pairs and their mirror images are
/// tried: the canonical pairs are representatives modulo the full dihedral
/// symmetry of `m² − mn + n²`, but reflections inside a face plane are not
/// always realized by cube symmetries.
fn generate(above: u32, n_max: u32) -> Result<Vec<IrreducibleRecord>> {
    let mut bases: BTreeMap<u64, Vec<FaceBasis>> = BTreeMap::new();
    let mut seen: HashSet<Tetra> = HashSet::new();
    let mut records = Vec::new();
    let (above, n_max) = (above as i64, n_max as i64);

    for k in k_values(n_max as u64) {
        let k = k as i64;
        let mut pairs = Vec::new();
        for mn in mn_primitive(k as u64) {
            pairs.push(mn);
            if k > 1 {
                pairs.push(mn.mirrored());
            }
        }
        for mn in pairs {
            for d in (1..=n_max / k).step_by(2) {
                let side = d * k;
                if side <= above {
                    continue;
                }
                let face_bases = match bases.entry(d as u64) {
                    std::collections::btree_map::Entry::Occupied(e) => e.into_mut(),
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(solutions_with_bases(d as u64)?)
                    }
                };
                for basis in face_bases.iter() {
                    let (first, second) = tetra_pair(basis, mn)?;
                    for t in [first, second] {
                        debug_assert_eq!(is_regular(t.vertices()), Some(side));
                        // a face with k = 1 would have produced it already
                        if k > 1 && max_face_d(&t)? >= side {
                            continue;
                        }
                        if t.edge_content() != 1 {
                            continue;
                        }
                        let key = class_key(&t);
                        if seen.insert(key) {
                            records.push(IrreducibleRecord {
                                d,
                                k,
                                mn,
                                m_cube: enclosing_cube(&key),
                                tetra: key,
                                source: basis.solution,
                            });
                        }
                    }
                }
            }
        }
    }
    records.sort_by_key(|r| (r.side(), r.tetra));
    Ok(records)
}

/// One record per irreducible class with side at most `n_max`, sorted by
/// `(λ, tetra)`.
pub fn irreducible_list(n_max: u32) -> Result<Vec<IrreducibleRecord>> {
    generate(0, n_max)
}

/// Adds the classes with side in `(covered, n_max]` to a list that already
/// covers every side up to `covered`.
pub fn extend_list(
    mut records: Vec<IrreducibleRecord>,
    covered: u32,
    n_max: u32,
) -> Result<Vec<IrreducibleRecord>> {
    if n_max > covered {
        records.extend(generate(covered, n_max)?);
        records.sort_by_key(|r| (r.side(), r.tetra));
    }
    Ok(records)
}

/// Contribution of one record and all of its dilations to `T(n)`.
fn record_total(profile: &ShapeProfile, side: i64, n: i64) -> u64 {
    let mut total = 0;
    let mut j = 1;
    while j * profile.m <= n && j * side <= n {
        total += profile.stats(j).count_in_cube(n);
        j += 1;
    }
    total
}

/// `T(n)`: the number of regular tetrahedra with vertices in `{0..n}³`.
pub fn total_tetrahedra(n: u32, records: &[IrreducibleRecord]) -> u64 {
    let n = n as i64;
    records
        .iter()
        .filter(|r| r.m_cube <= n)
        .map(|r| record_total(&ShapeProfile::new(&r.tetra), r.side(), n))
        .sum()
}

/// `T(n)/2`, the OEIS A103158 term.
pub fn total_count(n: u32, records: &[IrreducibleRecord]) -> Result<u64> {
    let total = total_tetrahedra(n, records);
    if !total.is_multiple_of(2) {
        return Err(PipelineError::OddTotal { n, total });
    }
    Ok(total / 2)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountRow {
    pub n: u32,
    /// `T(n)/2`
    pub half: u64,
    /// `T(n)`
    pub total: u64,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountTable {
    pub rows: Vec<CountRow>,
}

impl CountTable {
    pub fn get(&self, n: u32) -> Option<&CountRow> {
        self.rows.iter().find(|r| r.n == n)
    }

    pub fn halves(&self) -> Vec<u64> {
        self.rows.iter().map(|r| r.half).collect()
    }
}

/// Per-`n` totals for `n = 1..=n_max` from a record list covering `n_max`.
///
/// Records are processed in parallel on the current rayon pool; the reduction
/// is an integer sum so the result does not depend on scheduling.
pub fn count_table(n_max: u32, records: &[IrreducibleRecord]) -> Result<CountTable> {
    let len = n_max as usize + 1;
    let totals = records
        .par_iter()
        .filter(|r| r.m_cube <= n_max as i64)
        .map(|r| {
            let profile = ShapeProfile::new(&r.tetra);
            let mut row = vec![0u64; len];
            for (n, slot) in row.iter_mut().enumerate().skip(1) {
                *slot = record_total(&profile, r.side(), n as i64);
            }
            row
        })
        .reduce(
            || vec![0u64; len],
            |mut acc, row| {
                acc.iter_mut().zip(row).for_each(|(a, b)| *a += b);
                acc
            },
        );
    let mut rows = Vec::with_capacity(n_max as usize);
    for n in 1..=n_max {
        let total = totals[n as usize];
        if total % 2 != 0 {
            return Err(PipelineError::OddTotal { n, total });
        }
        rows.push(CountRow {
            n,
            half: total / 2,
            total,
        });
    }
    Ok(CountTable { rows })
}

/// Runs `f` on a dedicated pool of `threads` workers, or on the global pool.
pub fn with_threads<T: Send>(threads: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    match threads {
        None => Ok(f()),
        Some(t) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(t.max(1))
                .build()
                .map_err(|e| PipelineError::ThreadPool(e.to_string()))?;
            Ok(pool.install(f))
        }
    }
}

/// The table of `A103158(n)` for `n = 1..=n_max`.
///
/// With a cache path, records already stored there are reused, the list is
/// extended only for the missing sides, and the file is rewritten when it grew.
pub fn sequence(n_max: u32, cache: Option<&std::path::Path>) -> Result<CountTable> {
    let records = match cache {
        None => irreducible_list(n_max)?,
        Some(path) => crate::cache::load_or_build(path, n_max)?,
    };
    count_table(n_max, &records)
}
