//! Exact solvers and closed-form counts for the quadratic forms behind lattice
//! regular tetrahedra:
//!
//! * `a² + b² + c² = 3d²` (face-plane normals),
//! * `2x² + y² = d` and `x² + 3y² = d` (equal-entry solutions and Eisenstein norms),
//! * `m² − mn + n² = k²` (equilateral triangles inside a face plane).
//!
//! Everything is integer arithmetic; the only products that grow are bounded by
//! `12·(3d²)²`, which fits comfortably in `i64`/`u64` for `d ≤ 10⁴`.

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest `d` for which the solvers promise overflow-free arithmetic.
pub const MAX_SAFE_D: u64 = 10_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NumError {
    #[error("expected an odd value, got {0}")]
    Even(u64),
    #[error("expected a positive value")]
    NonPositive,
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("gcd({k}, {l}) must be 1")]
    NotCoprime { k: u64, l: u64 },
    #[error("{value} exceeds the supported bound {bound}")]
    TooLarge { value: u64, bound: u64 },
    #[error("closed form for {what}({d}) is not integral: {num}/{den}")]
    NonIntegral {
        what: &'static str,
        d: u64,
        num: u128,
        den: u128,
    },
}

pub type Result<T> = std::result::Result<T, NumError>;

/// A positive ordered primitive solution of `a² + b² + c² = 3d²`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PrimitiveSolution {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl PrimitiveSolution {
    /// Validates all invariants; `None` if any fails.
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Option<Self> {
        let ok = 0 < a
            && a <= b
            && b <= c
            && d > 0
            && a * a + b * b + c * c == 3 * d * d
            && a.gcd(&b).gcd(&c) == 1;
        ok.then_some(Self { a, b, c, d })
    }

    pub fn normal(&self) -> [i64; 3] {
        [self.a, self.b, self.c]
    }
}

impl std::fmt::Display for PrimitiveSolution {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[({},{},{}),{}]", self.a, self.b, self.c, self.d)
    }
}

/// A solution of `m² − mn + n² = k²`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct MNPair {
    pub m: i64,
    pub n: i64,
}

impl MNPair {
    pub const SEED: MNPair = MNPair { m: 0, n: 1 };

    pub fn new(m: i64, n: i64) -> Self {
        Self { m, n }
    }

    /// `m² − mn + n²`
    pub fn norm(&self) -> i64 {
        self.m * self.m - self.m * self.n + self.n * self.n
    }

    /// The pair with coordinates swapped, i.e. the mirror image of the triangle
    /// inside its plane.
    pub fn mirrored(&self) -> Self {
        Self {
            m: self.n,
            n: self.m,
        }
    }
}

fn require_odd(d: u64) -> Result<()> {
    if d == 0 {
        Err(NumError::NonPositive)
    } else if d.is_multiple_of(2) {
        Err(NumError::Even(d))
    } else {
        Ok(())
    }
}

fn require_safe(d: u64) -> Result<()> {
    if d > MAX_SAFE_D {
        Err(NumError::TooLarge {
            value: d,
            bound: MAX_SAFE_D,
        })
    } else {
        Ok(())
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut p = 3;
    while p * p <= n {
        if n.is_multiple_of(p) {
            return false;
        }
        p += 2;
    }
    true
}

/// Prime factorization by trial division, as `(prime, exponent)` in ascending order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Exact integer square root if `n` is a perfect square.
pub fn exact_sqrt(n: i64) -> Option<i64> {
    if n < 0 {
        return None;
    }
    let r = n.isqrt();
    (r * r == n).then_some(r)
}

/// The Legendre symbol `(−3/p)` for an odd prime `p`.
pub fn legendre_minus3(p: u64) -> Result<i8> {
    if p.is_multiple_of(2) || !is_prime(p) {
        return Err(NumError::NotOddPrime(p));
    }
    Ok(match p % 12 {
        3 => 0,
        1 | 7 => 1,
        _ => -1,
    })
}

/// Number of primitive solutions of `a² + b² + c² = 3d²` counting every sign
/// change and permutation: `8d · ∏_{p|d} (1 − (−3/p)/p)`.
pub fn lambda_count(d: u64) -> Result<u64> {
    require_odd(d)?;
    require_safe(d)?;
    let mut num: u128 = 8 * d as u128;
    let mut den: u128 = 1;
    for (p, _) in factorize(d) {
        let chi = legendre_minus3(p)? as i128;
        num *= (p as i128 - chi) as u128;
        den *= p as u128;
    }
    if !num.is_multiple_of(den) {
        return Err(NumError::NonIntegral {
            what: "lambda",
            d,
            num,
            den,
        });
    }
    Ok((num / den) as u64)
}

/// Total number of integer triples with `a² + b² + c² = 3d²`, primitive or not,
/// counting signs and permutations.
///
/// Each prime power `p^β ‖ d` contributes `p^β` when `p ≡ 1, 7 (mod 12)`,
/// `p^β + 2(p^β − 1)/(p − 1)` when `p ≡ 5, 11 (mod 12)`, and the power of three
/// `3^γ ‖ d` contributes `(3^(γ+1) − 1)/2`. Powers of two contribute nothing.
pub fn hs_total_count(d: u64) -> Result<u64> {
    if d == 0 {
        return Err(NumError::NonPositive);
    }
    require_safe(d)?;
    let mut total: u64 = 8;
    for (p, e) in factorize(d) {
        let pe = p.pow(e);
        let factor = match p % 12 {
            2 => 1,
            3 => (3 * pe - 1) / 2,
            1 | 7 => pe,
            _ => pe + 2 * (pe - 1) / (p - 1),
        };
        total *= factor;
    }
    Ok(total)
}

/// Positive primitive representations `d = 2x² + y²`, `x, y ≥ 1`, `gcd(x, y) = 1`.
pub fn gamma2(d: u64) -> Result<u64> {
    require_odd(d)?;
    let mut split = 0u32;
    for (p, _) in factorize(d) {
        match p % 8 {
            1 | 3 => split += 1,
            _ => return Ok(0),
        }
    }
    // d = 1 has no representation with x ≥ 1.
    Ok(if split == 0 { 0 } else { 1 << (split - 1) })
}

/// Positive primitive representations `d = x² + 3y²`, `x, y ≥ 1`, `gcd(x, y) = 1`.
///
/// Only primes `≡ 1 (mod 3)` double the count. A single factor 3 is absorbed by
/// `x = 3x'`; `9 | d` forces `3 | gcd(x, y)`. Even `d` is representable only as
/// `d ≡ 4 (mod 8)` with `x, y` both odd, which yields `2^k` instead of `2^(k−1)`.
pub fn gamma3(d: u64) -> Result<u64> {
    if d == 0 {
        return Err(NumError::NonPositive);
    }
    let (odd, even_case) = match d % 8 {
        4 => (d / 4, true),
        _ if d.is_multiple_of(2) => return Ok(0),
        _ => (d, false),
    };
    let mut split = 0u32;
    for (p, e) in factorize(odd) {
        match p % 3 {
            1 => split += 1,
            0 if e == 1 => {}
            _ => return Ok(0),
        }
    }
    Ok(match (even_case, split) {
        (true, k) => 1 << k,
        (false, 0) => 0,
        (false, k) => 1 << (k - 1),
    })
}

/// Number of positive ordered primitive solutions, `(Λ(d) + 24·Γ₂(3d²)) / 48`.
pub fn pi_epsilon(d: u64) -> Result<u64> {
    require_odd(d)?;
    require_safe(d)?;
    if d == 1 {
        // (1,1,1) is the only solution with a = b = c.
        return Ok(1);
    }
    let num = lambda_count(d)? + 24 * gamma2(3 * d * d)?;
    if num % 48 != 0 {
        return Err(NumError::NonIntegral {
            what: "pi_epsilon",
            d,
            num: num as u128,
            den: 48,
        });
    }
    Ok(num / 48)
}

/// All positive ordered primitive solutions for `d`, sorted lexicographically.
pub fn three_squares_primitive(d: u64) -> Result<Vec<PrimitiveSolution>> {
    require_odd(d)?;
    require_safe(d)?;
    let d = d as i64;
    let target = 3 * d * d;
    let mut out = Vec::new();
    let mut a = 1;
    while 3 * a * a <= target {
        let mut b = a;
        while a * a + 2 * b * b <= target {
            if let Some(c) = exact_sqrt(target - a * a - b * b) {
                if c >= b && a.gcd(&b).gcd(&c) == 1 {
                    out.push(PrimitiveSolution { a, b, c, d });
                }
            }
            b += 1;
        }
        a += 1;
    }
    Ok(out)
}

/// A positive primitive solution of `2a² + c² = 3d²`, i.e. the face normal `(a, a, c)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EqualPairSolution {
    pub a: i64,
    pub c: i64,
    pub d: i64,
}

/// Parametrization of `2a² + c² = 3d²` by coprime `(l, k)` with `k` odd.
///
/// Emits the triple from every branch whose congruence condition holds; when
/// both hold and they agree after absolute values, a single triple is returned.
pub fn twoac_param(l: u64, k: u64) -> Result<Vec<EqualPairSolution>> {
    if l == 0 || k == 0 {
        return Err(NumError::NonPositive);
    }
    require_odd(k)?;
    if l.gcd(&k) != 1 {
        return Err(NumError::NotCoprime { k, l });
    }
    let (l, k) = (l as i64, k as i64);
    let d = 2 * l * l + k * k;
    let mut out = Vec::with_capacity(2);
    if (k - l).rem_euclid(3) != 0 {
        out.push(EqualPairSolution {
            a: (2 * l * l + 2 * k * l - k * k).abs(),
            c: (k * k + 4 * k * l - 2 * l * l).abs(),
            d,
        });
    }
    if (k + l).rem_euclid(3) != 0 {
        out.push(EqualPairSolution {
            a: (2 * l * l - 2 * k * l - k * k).abs(),
            c: (k * k - 4 * k * l - 2 * l * l).abs(),
            d,
        });
    }
    out.retain(|s| s.a.gcd(&s.c).gcd(&s.d) == 1);
    out.sort();
    out.dedup();
    Ok(out)
}

/// Odd `k ≤ n` whose prime factors are all `≡ 1 (mod 3)`, i.e. those for which
/// `m² − mn + n² = k²` has a coprime solution. Always starts with 1.
pub fn k_values(n: u64) -> Vec<u64> {
    (1..=n)
        .step_by(2)
        .filter(|&k| factorize(k).iter().all(|&(p, _)| p % 3 == 1))
        .collect()
}

/// Canonical coprime solutions of `m² − mn + n² = k²` with `0 < m`, `2m < n`.
///
/// `k = 1` yields the seed `(0, 1)`.
pub fn mn_primitive(k: u64) -> Vec<MNPair> {
    if k == 1 {
        return vec![MNPair::SEED];
    }
    let k2 = (k * k) as i64;
    let mut out = Vec::new();
    // 2m < n gives m² − mn + n² > 3n²/4, so n < 2k/√3.
    let mut n = 1i64;
    while 3 * n * n < 4 * k2 {
        if let Some(root) = exact_sqrt(4 * k2 - 3 * n * n) {
            for twice_m in [n - root, n + root] {
                if twice_m > 0 && twice_m % 2 == 0 {
                    let m = twice_m / 2;
                    if 2 * m < n && m.gcd(&n) == 1 {
                        out.push(MNPair { m, n });
                    }
                }
            }
        }
        n += 1;
    }
    out.sort();
    out.dedup();
    out
}

/// All integer `(r, s)` with `2q = s² + 3r²`, sorted.
pub fn s3r_solutions(q: u64) -> Vec<(i64, i64)> {
    let two_q = 2 * q as i64;
    let mut out = Vec::new();
    let bound = (two_q / 3).isqrt();
    for r in -bound..=bound {
        if let Some(s) = exact_sqrt(two_q - 3 * r * r) {
            out.push((r, -s));
            if s != 0 {
                out.push((r, s));
            }
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn direct_gamma2(d: i64) -> u64 {
        let mut count = 0;
        let mut x = 1;
        while 2 * x * x < d {
            if let Some(y) = exact_sqrt(d - 2 * x * x) {
                if y >= 1 && x.gcd(&y) == 1 {
                    count += 1;
                }
            }
            x += 1;
        }
        count
    }

    #[test]
    fn legendre_table() {
        assert_eq!(legendre_minus3(3), Ok(0));
        assert_eq!(legendre_minus3(7), Ok(1));
        assert_eq!(legendre_minus3(41), Ok(-1));
        assert_eq!(legendre_minus3(13), Ok(1));
        assert_eq!(legendre_minus3(11), Ok(-1));
        assert!(legendre_minus3(2).is_err());
        assert!(legendre_minus3(9).is_err());
        assert!(legendre_minus3(1).is_err());
    }

    #[test]
    fn lambda_examples() {
        assert_eq!(lambda_count(1), Ok(8));
        assert_eq!(lambda_count(3), Ok(24));
        assert_eq!(lambda_count(2009), Ok(48 * 294));
        assert_eq!(lambda_count(4), Err(NumError::Even(4)));
        assert_eq!(lambda_count(0), Err(NumError::NonPositive));
    }

    #[test]
    fn hs_small() {
        assert_eq!(hs_total_count(1), Ok(8));
        // r3(27) = 24 permuted/signed (1,1,5) + 8 signed (3,3,3)
        assert_eq!(hs_total_count(3), Ok(32));
    }

    #[test]
    fn gamma2_examples() {
        assert_eq!(gamma2(27), Ok(1));
        assert_eq!(gamma2(33), Ok(2));
        assert_eq!(gamma2(75), Ok(0));
        assert_eq!(gamma2(1), Ok(0));
        assert!(gamma2(10).is_err());
        for d in (1..200).step_by(2) {
            assert_eq!(gamma2(d as u64).unwrap(), direct_gamma2(d), "d={d}");
        }
    }

    #[test]
    fn gamma3_examples() {
        assert_eq!(gamma3(7), Ok(1));
        assert_eq!(gamma3(91), Ok(2));
        assert_eq!(gamma3(5), Ok(0));
        assert_eq!(gamma3(3), Ok(0));
        assert_eq!(gamma3(21), Ok(1));
        assert_eq!(gamma3(4), Ok(1));
        assert_eq!(gamma3(28), Ok(2));
        assert_eq!(gamma3(8), Ok(0));
    }

    #[test]
    fn pi_epsilon_examples() {
        assert_eq!(pi_epsilon(1), Ok(1));
        assert_eq!(pi_epsilon(3), Ok(1));
        assert_eq!(pi_epsilon(9), Ok(2));
        assert_eq!(pi_epsilon(2009), Ok(294));
    }

    #[test]
    fn three_squares_examples() {
        let one = three_squares_primitive(1).unwrap();
        assert_eq!(
            one,
            vec![PrimitiveSolution {
                a: 1,
                b: 1,
                c: 1,
                d: 1
            }]
        );
        let three = three_squares_primitive(3).unwrap();
        assert_eq!(
            three,
            vec![PrimitiveSolution {
                a: 1,
                b: 1,
                c: 5,
                d: 3
            }]
        );
        let nine: Vec<_> = three_squares_primitive(9)
            .unwrap()
            .iter()
            .map(|s| (s.a, s.b, s.c))
            .collect();
        assert_eq!(nine, vec![(1, 11, 11), (5, 7, 13)]);
        assert!(three_squares_primitive(6).is_err());
    }

    #[test]
    fn twoac_examples() {
        assert_eq!(
            twoac_param(1, 1).unwrap(),
            vec![EqualPairSolution { a: 1, c: 5, d: 3 }]
        );
        let sols = twoac_param(1, 3).unwrap();
        assert!(sols.contains(&EqualPairSolution { a: 1, c: 19, d: 11 }));
        assert!(matches!(twoac_param(2, 4), Err(NumError::Even(4))));
        assert!(matches!(
            twoac_param(3, 3),
            Err(NumError::NotCoprime { .. })
        ));
    }

    #[test]
    fn k_values_examples() {
        assert_eq!(
            k_values(100),
            vec![1, 7, 13, 19, 31, 37, 43, 49, 61, 67, 73, 79, 91, 97]
        );
        assert_eq!(k_values(1), vec![1]);
        assert_eq!(k_values(13), vec![1, 7, 13]);
    }

    #[test]
    fn mn_examples() {
        assert_eq!(mn_primitive(1), vec![MNPair::new(0, 1)]);
        assert_eq!(mn_primitive(7), vec![MNPair::new(3, 8)]);
        assert_eq!(
            mn_primitive(91),
            vec![MNPair::new(11, 96), MNPair::new(19, 99)]
        );
        // (1991, 9095) has norm k⁴, not k²
        assert_eq!(MNPair::new(1991, 9095).norm(), 91i64.pow(4));
        assert!(mn_primitive(3).is_empty());
    }

    #[test]
    fn s3r_examples() {
        assert!(s3r_solutions(2).contains(&(1, 1)));
        assert!(s3r_solutions(1).is_empty());
        let q26 = s3r_solutions(26);
        for sol in [(4, 2), (4, -2), (-4, 2), (-4, -2)] {
            assert!(q26.contains(&sol));
        }
        assert!(q26.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn factorize_roundtrip() {
        for n in 1..500u64 {
            let prod: u64 = factorize(n).iter().map(|&(p, e)| p.pow(e)).product();
            assert_eq!(prod, n);
        }
    }
}
