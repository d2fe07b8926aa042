//! Orbits of a tetrahedron under the symmetries and translations of its
//! minimal cube, and the counting polynomial built from them.

use std::collections::{BTreeSet, HashSet};

use serde::{Deserialize, Serialize};

use crate::facegen::{enclosing_cube, normalize_octant, LatticePoint, Tetra};

/// One of the 48 symmetries of `[0, m]³`: output axis `i` reads input axis
/// `perm[i]`, complemented as `m − x` when `flip[i]` is set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CubeSymmetry {
    pub perm: [usize; 3],
    pub flip: [bool; 3],
}

const PERMUTATIONS: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

impl CubeSymmetry {
    pub fn all() -> impl Iterator<Item = CubeSymmetry> {
        PERMUTATIONS.into_iter().flat_map(|perm| {
            (0..8u8).map(move |bits| CubeSymmetry {
                perm,
                flip: [bits & 1 != 0, bits & 2 != 0, bits & 4 != 0],
            })
        })
    }

    pub fn apply_point(&self, p: LatticePoint, m: i64) -> LatticePoint {
        let c = p.coords();
        let mut out = [0; 3];
        for axis in 0..3 {
            let v = c[self.perm[axis]];
            out[axis] = if self.flip[axis] { m - v } else { v };
        }
        LatticePoint::from(out)
    }

    pub fn apply(&self, t: &Tetra, m: i64) -> Tetra {
        Tetra::from_points(t.vertices().map(|p| self.apply_point(p, m)))
    }
}

/// Images of `t` under the 48 symmetries of its own minimal cube.
pub fn symmetry_orbit(t: &Tetra) -> BTreeSet<Tetra> {
    let m = enclosing_cube(t);
    CubeSymmetry::all().map(|g| g.apply(t, m)).collect()
}

/// Distinct octant-normalized shapes among the 48 symmetric images.
pub fn symmetry_shapes(t: &Tetra) -> Vec<Tetra> {
    let m = enclosing_cube(t);
    let shapes: BTreeSet<Tetra> = CubeSymmetry::all()
        .map(|g| normalize_octant(*g.apply(t, m).vertices()))
        .collect();
    shapes.into_iter().collect()
}

/// Representative of the class of `t` under all cube symmetries and lattice
/// translations: the smallest normalized image.
pub fn class_key(t: &Tetra) -> Tetra {
    let base = normalize_octant(*t.vertices());
    let m = enclosing_cube(&base);
    CubeSymmetry::all()
        .map(|g| normalize_octant(*g.apply(&base, m).vertices()))
        .min()
        .expect("symmetry group is non-empty")
}

/// Every tetrahedron inside `[0, m]³` obtained from `t` by translations and
/// cube symmetries, enumerated explicitly.
pub fn full_orbit(t: &Tetra) -> HashSet<Tetra> {
    let m = enclosing_cube(t);
    let [ex, ey, ez] = t.extents();
    let mut out = HashSet::new();
    for i in 0..=(m - ex) {
        for j in 0..=(m - ey) {
            for k in 0..=(m - ez) {
                let moved = t.translate(LatticePoint::new(i, j, k));
                out.extend(CubeSymmetry::all().map(|g| g.apply(&moved, m)));
            }
        }
    }
    out
}

fn shifted(set: &HashSet<Tetra>, v: LatticePoint) -> HashSet<Tetra> {
    set.iter().map(|t| t.translate(v)).collect()
}

const E_Y: LatticePoint = LatticePoint::new(0, 1, 0);
const E_Z: LatticePoint = LatticePoint::new(0, 0, 1);

/// `|S ∩ (S + e)|` for the full orbit `S` and the unit shift `e`.
pub fn beta_along(t: &Tetra, e: LatticePoint) -> usize {
    let s = full_orbit(t);
    let moved = shifted(&s, e);
    s.intersection(&moved).count()
}

pub fn beta(t: &Tetra) -> usize {
    beta_along(t, E_Z)
}

/// `|(S + e_z) ∩ (S + e_y)|` for the full orbit `S`.
pub fn gamma(t: &Tetra) -> usize {
    let s = full_orbit(t);
    shifted(&s, E_Z).intersection(&shifted(&s, E_Y)).count()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OrbitStats {
    pub m: i64,
    pub alpha: u64,
    pub beta: u64,
    pub gamma: u64,
}

impl OrbitStats {
    /// Closed-form stats from the distinct symmetric shapes, see [`ShapeProfile`].
    pub fn of(t: &Tetra) -> Self {
        ShapeProfile::new(t).stats(1)
    }

    /// Stats computed by explicit set enumeration. Slow; intended for checks.
    pub fn by_enumeration(t: &Tetra) -> Self {
        let base = normalize_octant(*t.vertices());
        OrbitStats {
            m: enclosing_cube(&base),
            alpha: full_orbit(&base).len() as u64,
            beta: beta(&base) as u64,
            gamma: gamma(&base) as u64,
        }
    }

    /// Number of congruent copies (under translations and cube symmetries)
    /// inside `[0, n]³`:
    /// `(n+1−m)³α − 3(n+1−m)²(n−m)β + 3(n+1−m)(n−m)²γ`.
    pub fn count_in_cube(&self, n: i64) -> u64 {
        if n < self.m {
            return 0;
        }
        let free = (n + 1 - self.m) as i128;
        let slack = (n - self.m) as i128;
        let total = free.pow(3) * self.alpha as i128 - 3 * free.pow(2) * slack * self.beta as i128
            + 3 * free * slack.pow(2) * self.gamma as i128;
        debug_assert!(total >= 0);
        total as u64
    }
}

/// Per-axis slack `m − e` of each distinct symmetric shape of a tetrahedron.
///
/// A shape with slack `f` has `∏(f_i + 1)` placements in `[0, m]³`, of which
/// `(f_x + 1)(f_y + 1)f_z` clear the floor `z = 0` and `(f_x + 1)f_y f_z`
/// clear both `y = 0` and `z = 0`. Dilating by `j` scales `m` and every slack
/// by `j`, so one profile serves every dilation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShapeProfile {
    pub m: i64,
    pub slack: Vec<[i64; 3]>,
}

impl ShapeProfile {
    pub fn new(t: &Tetra) -> Self {
        let base = normalize_octant(*t.vertices());
        let m = enclosing_cube(&base);
        let slack = symmetry_shapes(&base)
            .iter()
            .map(|s| s.extents().map(|e| m - e))
            .collect();
        ShapeProfile { m, slack }
    }

    /// Stats of the dilation `j·T`.
    pub fn stats(&self, j: i64) -> OrbitStats {
        let (mut alpha, mut beta, mut gamma) = (0, 0, 0);
        for s in &self.slack {
            let [fx, fy, fz] = s.map(|v| (v * j) as u64);
            alpha += (fx + 1) * (fy + 1) * (fz + 1);
            beta += (fx + 1) * (fy + 1) * fz;
            gamma += (fx + 1) * fy * fz;
        }
        OrbitStats {
            m: self.m * j,
            alpha,
            beta,
            gamma,
        }
    }
}

/// `f(T, n)` for a normalized tetrahedron.
pub fn count_in_cube(t: &Tetra, n: i64) -> u64 {
    OrbitStats::of(t).count_in_cube(n)
}
