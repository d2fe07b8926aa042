//! Equilateral triangles in the face-plane lattice `{v ∈ ℤ³ : v·(a,b,c) = 0}`
//! and their completion to regular tetrahedra.

use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::numtheory::{exact_sqrt, s3r_solutions, MNPair, PrimitiveSolution};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FaceError {
    #[error("no (r, s) yields an integral face basis for {0}")]
    NoIntegralBasis(PrimitiveSolution),
    #[error("(m, n) = (0, 0) does not define a triangle")]
    DegenerateTriangle,
    #[error("m² − mn + n² = {0} is not a perfect square")]
    NonSquareNorm(i64),
    #[error("apex with sign {sign} is not equidistant from the triangle")]
    NotRegular { sign: i8 },
    #[error("no choice of sign gives an integral apex")]
    NoIntegralApex,
    #[error("face normal {0:?} does not satisfy i² + j² + k² = 3d²")]
    BadFaceNormal([i64; 3]),
    #[error("input is not a regular tetrahedron")]
    NotRegularTetra,
}

pub type Result<T> = std::result::Result<T, FaceError>;

#[derive(
    Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
#[serde(from = "[i64; 3]", into = "[i64; 3]")]
pub struct LatticePoint {
    pub x: i64,
    pub y: i64,
    pub z: i64,
}

impl LatticePoint {
    pub const ORIGIN: LatticePoint = LatticePoint { x: 0, y: 0, z: 0 };

    pub const fn new(x: i64, y: i64, z: i64) -> Self {
        Self { x, y, z }
    }

    pub fn coords(&self) -> [i64; 3] {
        [self.x, self.y, self.z]
    }

    pub fn dot(&self, other: &Self) -> i64 {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    pub fn cross(&self, other: &Self) -> Self {
        Self {
            x: self.y * other.z - self.z * other.y,
            y: self.z * other.x - self.x * other.z,
            z: self.x * other.y - self.y * other.x,
        }
    }

    pub fn norm2(&self) -> i64 {
        self.dot(self)
    }

    pub fn dist2(&self, other: &Self) -> i64 {
        (*self - *other).norm2()
    }

    /// gcd of the absolute coordinates (0 for the origin).
    pub fn content(&self) -> i64 {
        self.x.gcd(&self.y).gcd(&self.z)
    }
}

impl From<[i64; 3]> for LatticePoint {
    fn from(c: [i64; 3]) -> Self {
        Self::new(c[0], c[1], c[2])
    }
}

impl From<LatticePoint> for [i64; 3] {
    fn from(p: LatticePoint) -> Self {
        p.coords()
    }
}

impl Add for LatticePoint {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Sub for LatticePoint {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Neg for LatticePoint {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.x, -self.y, -self.z)
    }
}

impl Mul<i64> for LatticePoint {
    type Output = Self;
    fn mul(self, k: i64) -> Self {
        Self::new(self.x * k, self.y * k, self.z * k)
    }
}

/// Four lattice points in sorted order. Whether they form a regular
/// tetrahedron is checked separately by [`is_regular`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Tetra([LatticePoint; 4]);

impl Tetra {
    /// Sorts the vertices into canonical order.
    pub fn from_points(mut points: [LatticePoint; 4]) -> Self {
        points.sort_unstable();
        Tetra(points)
    }

    pub fn vertices(&self) -> &[LatticePoint; 4] {
        &self.0
    }

    pub fn translate(&self, v: LatticePoint) -> Self {
        // translation preserves lexicographic order
        Tetra(self.0.map(|p| p + v))
    }

    pub fn dilate(&self, factor: i64) -> Self {
        debug_assert!(factor > 0);
        Tetra(self.0.map(|p| p * factor))
    }

    /// gcd of all edge-vector coordinates. 1 for irreducible tetrahedra.
    pub fn edge_content(&self) -> i64 {
        let base = self.0[0];
        self.0[1..]
            .iter()
            .fold(0, |g, p| g.gcd(&(*p - base).content()))
    }

    /// Per-axis extent `max − min`.
    pub fn extents(&self) -> [i64; 3] {
        let mut lo = self.0[0].coords();
        let mut hi = lo;
        for p in &self.0[1..] {
            for (axis, c) in p.coords().into_iter().enumerate() {
                lo[axis] = lo[axis].min(c);
                hi[axis] = hi[axis].max(c);
            }
        }
        [hi[0] - lo[0], hi[1] - lo[1], hi[2] - lo[2]]
    }

    pub fn fits_in_cube(&self, n: i64) -> bool {
        self.0
            .iter()
            .all(|p| p.coords().iter().all(|&c| (0..=n).contains(&c)))
    }
}

/// Generators `ζ`, `η` of the equilateral-triangle sublattice in the plane
/// orthogonal to `solution`'s normal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FaceBasis {
    pub solution: PrimitiveSolution,
    pub r: i64,
    pub s: i64,
    pub zeta: LatticePoint,
    pub eta: LatticePoint,
}

impl FaceBasis {
    /// Basis for a specific `(r, s)` with `2(a² + b²) = s² + 3r²`; `None` unless
    /// every coordinate is integral and the basis invariants hold.
    pub fn with_rs(sol: PrimitiveSolution, r: i64, s: i64) -> Option<Self> {
        let PrimitiveSolution { a, b, c, d } = sol;
        let q = a * a + b * b;
        if s * s + 3 * r * r != 2 * q {
            return None;
        }
        let exact = |num: i64, den: i64| (num % den == 0).then(|| num / den);
        let zeta = LatticePoint::new(
            exact(-(r * a * c + d * b * s), q)?,
            exact(d * a * s - b * c * r, q)?,
            r,
        );
        let eta = LatticePoint::new(
            exact(-(d * b * (s - 3 * r) + a * c * (r + s)), 2 * q)?,
            exact(d * a * (s - 3 * r) - b * c * (r + s), 2 * q)?,
            exact(r + s, 2)?,
        );
        let basis = FaceBasis {
            solution: sol,
            r,
            s,
            zeta,
            eta,
        };
        basis.check_invariants().then_some(basis)
    }

    pub fn check_invariants(&self) -> bool {
        let normal = LatticePoint::from(self.solution.normal());
        let d2 = self.solution.d * self.solution.d;
        self.zeta.dot(&normal) == 0
            && self.eta.dot(&normal) == 0
            && self.zeta.norm2() == 2 * d2
            && self.eta.norm2() == 2 * d2
            && self.zeta.dot(&self.eta) == d2
    }
}

/// First integral basis in sorted `(r, s)` order.
pub fn face_basis(sol: PrimitiveSolution) -> Result<FaceBasis> {
    let q = (sol.a * sol.a + sol.b * sol.b) as u64;
    s3r_solutions(q)
        .into_iter()
        .find_map(|(r, s)| FaceBasis::with_rs(sol, r, s))
        .ok_or(FaceError::NoIntegralBasis(sol))
}

/// The two non-origin vertices `P = mζ − nη`, `Q = nζ − (n − m)η`.
pub fn triangle(basis: &FaceBasis, mn: MNPair) -> Result<(LatticePoint, LatticePoint)> {
    if mn.m == 0 && mn.n == 0 {
        return Err(FaceError::DegenerateTriangle);
    }
    let MNPair { m, n } = mn;
    let p = basis.zeta * m - basis.eta * n;
    let q = basis.zeta * n - basis.eta * (n - m);
    Ok((p, q))
}

/// A point with coordinates `numer / 3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ThirdPoint {
    pub numer: LatticePoint,
}

impl ThirdPoint {
    pub fn to_integer(&self) -> Option<LatticePoint> {
        let [x, y, z] = self.numer.coords();
        (x % 3 == 0 && y % 3 == 0 && z % 3 == 0).then(|| LatticePoint::new(x / 3, y / 3, z / 3))
    }
}

/// Fourth vertex `(P + Q + sign·2k·(a, b, c)) / 3` of the tetrahedron on `O, P, Q`.
pub fn apex(
    p: LatticePoint,
    q: LatticePoint,
    sol: &PrimitiveSolution,
    k: i64,
    sign: i8,
) -> Result<ThirdPoint> {
    let normal = LatticePoint::from(sol.normal());
    let numer = p + q + normal * (2 * k * sign.signum() as i64);
    // |3R − 3X|² = 9 · 2(dk)² for each X in {O, P, Q}
    let side2 = 2 * (sol.d * k) * (sol.d * k);
    let regular = [LatticePoint::ORIGIN, p, q]
        .iter()
        .all(|x| numer.dist2(&(*x * 3)) == 9 * side2);
    if !regular || p.norm2() != side2 || q.norm2() != side2 || p.dist2(&q) != side2 {
        return Err(FaceError::NotRegular { sign });
    }
    Ok(ThirdPoint { numer })
}

fn complete(
    p: LatticePoint,
    q: LatticePoint,
    sol: &PrimitiveSolution,
    k: i64,
) -> Result<[LatticePoint; 4]> {
    for sign in [-1, 1] {
        if let Some(r) = apex(p, q, sol, k, sign)?.to_integer() {
            return Ok([LatticePoint::ORIGIN, p, q, r]);
        }
    }
    Err(FaceError::NoIntegralApex)
}

/// The two tetrahedra built on the triangles for `(m, n)` and `(n, n − m)`,
/// which share the side `OQ`. Both are returned octant-normalized.
pub fn tetra_pair(basis: &FaceBasis, mn: MNPair) -> Result<(Tetra, Tetra)> {
    let k = exact_sqrt(mn.norm()).ok_or(FaceError::NonSquareNorm(mn.norm()))?;
    let sol = &basis.solution;
    let (p1, q1) = triangle(basis, mn)?;
    let (p2, q2) = triangle(basis, MNPair::new(mn.n, mn.n - mn.m))?;
    let first = normalize_octant(complete(p1, q1, sol, k)?);
    let second = normalize_octant(complete(p2, q2, sol, k)?);
    Ok((first, second))
}

/// Translates so each axis minimum is 0, then sorts.
pub fn normalize_octant(points: [LatticePoint; 4]) -> Tetra {
    let mut lo = points[0];
    for p in &points[1..] {
        lo = LatticePoint::new(lo.x.min(p.x), lo.y.min(p.y), lo.z.min(p.z));
    }
    Tetra::from_points(points.map(|p| p - lo))
}

/// Side of the smallest cube `[0, m]³` holding a normalized tetrahedron.
pub fn enclosing_cube(t: &Tetra) -> i64 {
    t.vertices()
        .iter()
        .flat_map(|p| p.coords())
        .max()
        .unwrap_or(0)
}

/// `λ` such that every edge has squared length `2λ²`, if the points form a
/// regular tetrahedron.
pub fn is_regular(points: &[LatticePoint; 4]) -> Option<i64> {
    let side2 = points[0].dist2(&points[1]);
    if side2 == 0 || side2 % 2 != 0 {
        return None;
    }
    for i in 0..4 {
        for j in (i + 1)..4 {
            if points[i].dist2(&points[j]) != side2 {
                return None;
            }
        }
    }
    exact_sqrt(side2 / 2)
}

/// The `d` of a face: `√((i² + j² + k²)/3)` for the primitive normal `(i, j, k)`.
pub fn face_d(a: LatticePoint, b: LatticePoint, c: LatticePoint) -> Result<i64> {
    let normal = (b - a).cross(&(c - a));
    let g = normal.content();
    if g == 0 {
        return Err(FaceError::BadFaceNormal(normal.coords()));
    }
    let primitive = LatticePoint::new(normal.x / g, normal.y / g, normal.z / g);
    let n2 = primitive.norm2();
    if n2 % 3 != 0 {
        return Err(FaceError::BadFaceNormal(primitive.coords()));
    }
    exact_sqrt(n2 / 3).ok_or(FaceError::BadFaceNormal(primitive.coords()))
}

/// Face `d` for each of the four faces, in the order of the omitted vertex.
pub fn face_ds(t: &Tetra) -> Result<[i64; 4]> {
    let v = t.vertices();
    Ok([
        face_d(v[1], v[2], v[3])?,
        face_d(v[0], v[2], v[3])?,
        face_d(v[0], v[1], v[3])?,
        face_d(v[0], v[1], v[2])?,
    ])
}

/// Largest face `d` over the four faces of a regular lattice tetrahedron.
pub fn max_face_d(t: &Tetra) -> Result<i64> {
    if is_regular(t.vertices()).is_none() {
        return Err(FaceError::NotRegularTetra);
    }
    Ok(face_ds(t)?.into_iter().max().unwrap_or(0))
}
