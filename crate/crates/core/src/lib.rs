//! Counting regular tetrahedra whose vertices lie in the integer cube
//! `{0, 1, ..., n}³` (OEIS A103158 is half of that count).
//!
//! The pipeline:
//!
//! 1. [`numtheory`] enumerates the face-plane normals `(a, b, c)` with
//!    `a² + b² + c² = 3d²` and the Eisenstein pairs `(m, n)` with
//!    `m² − mn + n² = k²`, alongside closed-form counts used as cross-checks.
//! 2. [`facegen`] builds equilateral triangles in each face plane and completes
//!    them to regular tetrahedra of side `dk√2`.
//! 3. [`orbits`] computes the orbit statistics `(m, α, β, γ)` of a tetrahedron
//!    in its minimal cube and the number of its copies in `[0, n]³`.
//! 4. [`pipeline`] keeps one record per irreducible class and sums the
//!    contributions of all dilations.
//!
//! [`oracle`] provides brute-force counts for validation and [`rtgraph`] the
//! graph of face planes meeting at the tetrahedral dihedral angle.

pub mod cache;
pub mod facegen;
pub mod numtheory;
pub mod oracle;
pub mod orbits;
pub mod pipeline;
pub mod rtgraph;

pub use facegen::{LatticePoint, Tetra};
pub use numtheory::{MNPair, PrimitiveSolution};
pub use orbits::OrbitStats;
pub use pipeline::{CountRow, CountTable, IrreducibleRecord};
