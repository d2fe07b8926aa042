//! Sweeps of the number-theoretic and geometric invariants against direct scans.

mod common;

use std::collections::{BTreeSet, HashMap, HashSet};

use num_integer::Integer;
use regtet::facegen::{face_basis, face_ds, is_regular, normalize_octant, tetra_pair};
use regtet::numtheory::*;
use regtet::oracle::triangle_tetrahedra;
use regtet::orbits::{class_key, count_in_cube};
use regtet::pipeline::{irreducible_list, sequence, total_tetrahedra, IrreducibleRecord};
use regtet::{LatticePoint, Tetra};

fn brute_lambda(d: i64) -> u64 {
    let target = 3 * d * d;
    let bound = exact_sqrt(target).unwrap_or((target as f64).sqrt() as i64 + 1);
    let mut count = 0;
    for a in -bound..=bound {
        for b in -bound..=bound {
            let rest = target - a * a - b * b;
            if rest < 0 {
                continue;
            }
            if let Some(c) = exact_sqrt(rest) {
                for c in if c == 0 { vec![0] } else { vec![c, -c] } {
                    if a.gcd(&b).gcd(&c) == 1 {
                        count += 1;
                    }
                }
            }
        }
    }
    count
}

fn direct_form_count(d: i64, coeff_x: i64, coeff_y: i64) -> u64 {
    let mut count = 0;
    let mut x = 1;
    while coeff_x * x * x < d {
        let rest = d - coeff_x * x * x;
        if rest % coeff_y == 0 {
            if let Some(y) = exact_sqrt(rest / coeff_y) {
                if y >= 1 && x.gcd(&y) == 1 {
                    count += 1;
                }
            }
        }
        x += 1;
    }
    count
}

#[test]
fn lambda_matches_brute_force() {
    for d in (1..=99).step_by(2) {
        assert_eq!(lambda_count(d).unwrap(), brute_lambda(d as i64), "d = {d}");
    }
}

#[test]
fn gamma_closed_forms_match_direct_counts() {
    for d in 1..=999u64 {
        if d % 2 == 1 {
            assert_eq!(
                gamma2(d).unwrap(),
                direct_form_count(d as i64, 2, 1),
                "gamma2({d})"
            );
        }
        assert_eq!(
            gamma3(d).unwrap(),
            direct_form_count(d as i64, 1, 3),
            "gamma3({d})"
        );
    }
}

#[test]
fn ordered_solution_count_matches_pi_epsilon() {
    for d in (1..=199).step_by(2) {
        let sols = three_squares_primitive(d).unwrap();
        assert_eq!(sols.len() as u64, pi_epsilon(d).unwrap(), "d = {d}");
        let unique: BTreeSet<_> = sols.iter().collect();
        assert_eq!(unique.len(), sols.len());
    }
}

#[test]
fn hs_total_matches_scan() {
    for d in 1..=45u64 {
        let target = 3 * (d * d) as i64;
        let bound = (target as f64).sqrt() as i64 + 1;
        let mut count = 0;
        for a in -bound..=bound {
            for b in -bound..=bound {
                let rest = target - a * a - b * b;
                if rest >= 0 {
                    if let Some(c) = exact_sqrt(rest) {
                        count += if c == 0 { 1 } else { 2 };
                    }
                }
            }
        }
        assert_eq!(hs_total_count(d).unwrap(), count, "d = {d}");
    }
}

#[test]
fn twoac_forward_and_converse() {
    let mut produced = HashSet::new();
    for l in 1..=30u64 {
        for k in (1..=30u64).step_by(2) {
            if l.gcd(&k) != 1 {
                continue;
            }
            for s in twoac_param(l, k).unwrap() {
                assert_eq!(2 * s.a * s.a + s.c * s.c, 3 * s.d * s.d);
                assert_eq!(s.a.gcd(&s.c).gcd(&s.d), 1);
            }
        }
    }
    // every (l, k) with 2l² + k² ≤ 500
    for l in 1..=16u64 {
        for k in (1..=23u64).step_by(2) {
            if 2 * l * l + k * k <= 500 && l.gcd(&k) == 1 {
                produced.extend(twoac_param(l, k).unwrap());
            }
        }
    }
    // d = 1 would need l = 0
    for d in (3..=500i64).step_by(2) {
        let target = 3 * d * d;
        let mut a = 1;
        while 2 * a * a < target {
            if let Some(c) = exact_sqrt(target - 2 * a * a) {
                if c > 0 && a.gcd(&c).gcd(&d) == 1 {
                    assert!(
                        produced.contains(&EqualPairSolution { a, c, d }),
                        "2·{a}² + {c}² = 3·{d}² not parametrized"
                    );
                }
            }
            a += 1;
        }
    }
}

fn form_orbit(p: MNPair) -> Vec<MNPair> {
    let mut out = Vec::new();
    let mut cur = p;
    for _ in 0..6 {
        out.push(cur);
        out.push(cur.mirrored());
        cur = MNPair::new(cur.n, cur.n - cur.m);
    }
    out
}

#[test]
fn mn_solutions_recovered_from_primitive_pairs() {
    let ks = k_values(200);
    for &k in &ks {
        let k = k as i64;
        let mut expected = HashSet::new();
        for m in -2 * k..=2 * k {
            for n in -2 * k..=2 * k {
                if m * m - m * n + n * n == k * k {
                    expected.insert(MNPair::new(m, n));
                }
            }
        }
        let mut recovered = HashSet::new();
        for &kp in ks.iter().filter(|&&kp| k % kp as i64 == 0) {
            let scale = k / kp as i64;
            for p in mn_primitive(kp) {
                assert_eq!(p.norm(), (kp * kp) as i64);
                for q in form_orbit(p) {
                    recovered.insert(MNPair::new(q.m * scale, q.n * scale));
                }
            }
        }
        assert_eq!(recovered, expected, "k = {k}");
    }
}

#[test]
fn face_basis_invariants_hold() {
    for d in (1..=199).step_by(2) {
        for sol in three_squares_primitive(d).unwrap() {
            let b = face_basis(sol).unwrap();
            let n = LatticePoint::from(sol.normal());
            let d = sol.d;
            assert_eq!(b.zeta.dot(&n), 0);
            assert_eq!(b.eta.dot(&n), 0);
            assert_eq!(b.zeta.norm2(), 2 * d * d);
            assert_eq!(b.eta.norm2(), 2 * d * d);
            assert_eq!(b.zeta.dot(&b.eta), d * d);
        }
    }
}

#[test]
fn tetra_pairs_are_regular_with_side_dk() {
    for d in (1..=51).step_by(2) {
        for sol in three_squares_primitive(d).unwrap() {
            let basis = face_basis(sol).unwrap();
            for k in k_values(7) {
                for mn in mn_primitive(k) {
                    let (a, b) = tetra_pair(&basis, mn).unwrap();
                    for t in [a, b] {
                        let side = is_regular(t.vertices()).unwrap();
                        assert_eq!(side, sol.d * k as i64);
                        for fd in face_ds(&t).unwrap() {
                            assert_eq!(side % fd, 0, "face d {fd} does not divide {side}");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn apex_sign_rule() {
    assert_eq!(common::sign_rule_exceptions(51, 9), Vec::<String>::new());
}

#[test]
fn orbit_polynomial_matches_direct_enumeration() {
    let records: Vec<IrreducibleRecord> = irreducible_list(7)
        .unwrap()
        .into_iter()
        .filter(|r| r.m_cube <= 4)
        .collect();
    assert!(records.len() > 1);
    for r in &records {
        for n in 1..=7 {
            assert_eq!(
                count_in_cube(&r.tetra, n),
                common::direct_copies(&r.tetra, n).len() as u64,
                "record {:?} n = {n}",
                r.tetra
            );
        }
    }
}

fn shrink(t: &Tetra) -> (Tetra, i64) {
    let g = t.edge_content();
    let base = normalize_octant(*t.vertices());
    let points = base
        .vertices()
        .map(|p| LatticePoint::new(p.x / g, p.y / g, p.z / g));
    (class_key(&Tetra::from_points(points)), g)
}

#[test]
fn dilated_orbits_partition_all_tetrahedra() {
    for n in 1..=7u32 {
        let records = irreducible_list(n).unwrap();
        let by_key: HashMap<Tetra, usize> = records
            .iter()
            .enumerate()
            .map(|(i, r)| (r.tetra, i))
            .collect();
        let all = triangle_tetrahedra(n);

        // each tetrahedron belongs to exactly one (record, dilation)
        let mut tally: HashMap<(usize, i64), u64> = HashMap::new();
        for t in &all {
            let (key, j) = shrink(t);
            let idx = *by_key
                .get(&key)
                .unwrap_or_else(|| panic!("{t:?} has no record"));
            *tally.entry((idx, j)).or_default() += 1;
        }
        for (&(idx, j), &count) in &tally {
            let dilated = records[idx].tetra.dilate(j);
            assert_eq!(count_in_cube(&dilated, n as i64), count);
        }

        // the explicit orbits are pairwise disjoint and cover everything
        let mut union = HashSet::new();
        let mut sum = 0;
        for r in &records {
            let mut j = 1;
            while j * r.m_cube <= n as i64 && j * r.side() <= n as i64 {
                let copies = common::direct_copies(&r.tetra.dilate(j), n as i64);
                sum += copies.len();
                union.extend(copies);
                j += 1;
            }
        }
        assert_eq!(sum, union.len(), "n = {n}: orbits overlap");
        assert_eq!(union, all);
        assert_eq!(union.len() % 2, 0);
        assert_eq!(total_tetrahedra(n, &records), all.len() as u64);
    }
}

#[test]
fn sequence_strictly_increases() {
    let halves = sequence(40, None).unwrap().halves();
    assert!(halves.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn oracle_tetrahedra_have_integral_side() {
    for t in triangle_tetrahedra(6) {
        let side = is_regular(t.vertices()).unwrap();
        assert!(side >= 1);
        assert_eq!(t.vertices()[0].dist2(&t.vertices()[1]), 2 * side * side);
    }
}
