//! Brute-force counters of regular tetrahedra in `{0..n}³`, independent of the
//! face-plane parametrization. Used to validate the pipeline.

use std::collections::{HashMap, HashSet};

use rayon::prelude::*;
use thiserror::Error;

use crate::facegen::{LatticePoint, Tetra};

pub const QUADRUPLE_GUARD: u32 = 4;
pub const TRIANGLE_GUARD: u32 = 10;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("n = {n} exceeds the {method} oracle limit of {limit}")]
    Guard {
        method: &'static str,
        n: u32,
        limit: u32,
    },
}

fn cube_points(n: u32) -> Vec<LatticePoint> {
    let n = n as i64;
    let mut pts = Vec::with_capacity(((n + 1) * (n + 1) * (n + 1)) as usize);
    for x in 0..=n {
        for y in 0..=n {
            for z in 0..=n {
                pts.push(LatticePoint::new(x, y, z));
            }
        }
    }
    pts
}

/// Counts 4-subsets of `{0..n}³` with all six distances equal.
pub fn quadruple_count(n: u32) -> Result<u64, OracleError> {
    if n > QUADRUPLE_GUARD {
        return Err(OracleError::Guard {
            method: "quadruple",
            n,
            limit: QUADRUPLE_GUARD,
        });
    }
    let pts = cube_points(n);
    let len = pts.len();
    let mut count = 0;
    for i in 0..len {
        for j in (i + 1)..len {
            let s = pts[i].dist2(&pts[j]);
            for k in (j + 1)..len {
                if pts[i].dist2(&pts[k]) != s || pts[j].dist2(&pts[k]) != s {
                    continue;
                }
                for l in (k + 1)..len {
                    if pts[i].dist2(&pts[l]) == s
                        && pts[j].dist2(&pts[l]) == s
                        && pts[k].dist2(&pts[l]) == s
                    {
                        count += 1;
                    }
                }
            }
        }
    }
    Ok(count)
}

/// Every regular tetrahedron in `{0..n}³`, found by completing equilateral
/// lattice triangles with the apex `centroid ± 2N/(3λ)`.
pub fn triangle_tetrahedra(n: u32) -> HashSet<Tetra> {
    let pts = cube_points(n);
    let limit = n as i64;
    let in_range = |p: &LatticePoint| p.coords().iter().all(|&c| (0..=limit).contains(&c));

    (0..pts.len())
        .into_par_iter()
        .fold(HashSet::new, |mut found, i| {
            let a = pts[i];
            let mut shells: HashMap<i64, Vec<LatticePoint>> = HashMap::new();
            for b in &pts[i + 1..] {
                shells.entry(a.dist2(b)).or_default().push(*b);
            }
            for (&side2, shell) in &shells {
                // regular lattice tetrahedra have side λ√2
                let lambda = match crate::numtheory::exact_sqrt(side2 / 2) {
                    Some(l) if side2 % 2 == 0 => l,
                    _ => continue,
                };
                for (x, b) in shell.iter().enumerate() {
                    for c in &shell[x + 1..] {
                        if b.dist2(c) != side2 {
                            continue;
                        }
                        let normal = (*b - a).cross(&(*c - a));
                        let sum = (a + *b + *c) * lambda;
                        for twice in [normal * 2, normal * -2] {
                            let numer = sum + twice;
                            let den = 3 * lambda;
                            let [x, y, z] = numer.coords();
                            if x % den != 0 || y % den != 0 || z % den != 0 {
                                continue;
                            }
                            let apex = LatticePoint::new(x / den, y / den, z / den);
                            if in_range(&apex) {
                                found.insert(Tetra::from_points([a, *b, *c, apex]));
                            }
                        }
                    }
                }
            }
            found
        })
        .reduce(HashSet::new, |mut acc, part| {
            if acc.len() < part.len() {
                return part.into_iter().chain(acc).collect();
            }
            acc.extend(part);
            acc
        })
}

/// `T(n)` by triangle completion, refusing `n` above [`TRIANGLE_GUARD`].
pub fn triangle_count(n: u32) -> Result<u64, OracleError> {
    if n > TRIANGLE_GUARD {
        return Err(OracleError::Guard {
            method: "triangle",
            n,
            limit: TRIANGLE_GUARD,
        });
    }
    Ok(triangle_count_unguarded(n))
}

pub fn triangle_count_unguarded(n: u32) -> u64 {
    triangle_tetrahedra(n).len() as u64
}
