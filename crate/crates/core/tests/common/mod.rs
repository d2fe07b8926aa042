//! Direct checks shared by the invariant sweeps and the acceptance suite.

use std::collections::HashSet;

use regtet::facegen::{apex, face_basis, triangle};
use regtet::numtheory::{three_squares_primitive, MNPair};
use regtet::orbits::symmetry_shapes;
use regtet::{LatticePoint, Tetra};

/// Cases where the number of integral apex candidates is not 2 for `3 | k`
/// and 1 otherwise, over every `(m, n)` of norm `k²`.
pub fn sign_rule_exceptions(d_max: u64, k_max: i64) -> Vec<String> {
    let mut bad = Vec::new();
    for d in (1..=d_max).step_by(2) {
        for sol in three_squares_primitive(d).unwrap() {
            let basis = face_basis(sol).unwrap();
            for k in 1..=k_max {
                for m in -k..=k {
                    for n in -2 * k..=2 * k {
                        if m * m - m * n + n * n != k * k {
                            continue;
                        }
                        let (p, q) = triangle(&basis, MNPair::new(m, n)).unwrap();
                        let integral = [-1, 1]
                            .iter()
                            .filter(|&&s| apex(p, q, &sol, k, s).unwrap().to_integer().is_some())
                            .count();
                        let want = if k % 3 == 0 { 2 } else { 1 };
                        if integral != want {
                            bad.push(format!("{sol} k={k} (m,n)=({m},{n}): {integral}"));
                        }
                    }
                }
            }
        }
    }
    bad
}

/// Every copy of `t` in `[0, n]³` under the 48 cube maps and all translations.
pub fn direct_copies(t: &Tetra, n: i64) -> HashSet<Tetra> {
    let mut out = HashSet::new();
    for shape in symmetry_shapes(t) {
        let [ex, ey, ez] = shape.extents();
        for x in 0..=n - ex {
            for y in 0..=n - ey {
                for z in 0..=n - ez {
                    out.insert(shape.translate(LatticePoint::new(x, y, z)));
                }
            }
        }
    }
    out
}
