//! Exact arbitrary-precision counting primitives.
//!
//! Everything in this module is computed over `BigUint`; no floating point
//! enters any formula path. The main quantities are binomial and Gaussian
//! (q-ary) binomial coefficients, ball sizes in the Hamming and injection
//! metrics, Singleton-type maxima, and leading-order asymptotic descriptors
//! of the ball sizes.

use num::bigint::Sign;
use num::{BigInt, BigUint, One, Zero};

use crate::error::{Error, Result};

/// Exact non-negative count. Never truncated to a machine integer.
pub type Count = BigUint;

/// Leading-order description of an integer-valued function of `q`:
/// `f(q) ~ coefficient * q^exponent` as `q -> infinity`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AsymptoticForm {
    pub coefficient: Count,
    pub exponent: u32,
}

impl AsymptoticForm {
    /// Evaluate the leading term `coefficient * q^exponent` at a concrete `q`.
    pub fn leading_term(&self, q: u64) -> Count {
        &self.coefficient * BigUint::from(q).pow(self.exponent)
    }
}

/// Binomial coefficient `C(m, l)`, with the usual convention that the value
/// is 0 whenever `l < 0` or `l > m`.
pub fn binom(m: impl Into<BigUint>, l: impl Into<BigInt>) -> Count {
    let m = m.into();
    let l = l.into();
    if l.sign() == Sign::Minus {
        return BigUint::zero();
    }
    let l = l.to_biguint().expect("non-negative");
    if l > m {
        return BigUint::zero();
    }
    // Symmetry keeps the product short when l is close to m.
    let l = l.clone().min(&m - &l);
    let l = u64::try_from(&l).expect("binomial index too large for exact evaluation");
    let mut acc = BigUint::one();
    for i in 1..=l {
        // acc * (m - l + i) is divisible by i at every step.
        acc = acc * (&m - BigUint::from(l - i)) / BigUint::from(i);
    }
    acc
}

/// Gaussian binomial coefficient `[m choose l]_q`, the number of
/// l-dimensional subspaces of an m-dimensional space over F_q.
///
/// Computed exactly via the product formula
/// `prod_{i=1}^{l} (q^{m-l+i} - 1) / (q^i - 1)`; 0 when `l < 0` or `l > m`.
pub fn q_binom(m: u32, l: i64, q: u64) -> Result<Count> {
    if q < 2 {
        return Err(Error::invalid("q", format!("must be at least 2, got {q}")));
    }
    if l < 0 || l > m as i64 {
        return Ok(BigUint::zero());
    }
    let l = (l as u32).min(m - l as u32);
    let q = BigUint::from(q);
    let mut acc = BigUint::one();
    for i in 1..=l {
        // Each prefix is itself a Gaussian binomial, so the division is exact.
        acc = acc * (q.pow(m - l + i) - 1u32) / (q.pow(i) - 1u32);
    }
    Ok(acc)
}

/// Size of the Hamming ball of radius `r` in F_q^n (any alphabet size
/// `q >= 2`, not only prime powers): `sum_{i=0}^{r} C(n,i) (q-1)^i`.
/// The size does not depend on the center.
pub fn hamming_ball_size(q: u64, n: u32, r: u32) -> Result<Count> {
    if q < 2 {
        return Err(Error::invalid("q", format!("must be at least 2, got {q}")));
    }
    if n == 0 {
        return Err(Error::invalid("n", "must be positive"));
    }
    if r > n {
        return Err(Error::invalid(
            "r",
            format!("radius {r} out of range 0..={n}"),
        ));
    }
    let qm1 = BigUint::from(q - 1);
    let mut total = BigUint::zero();
    for i in 0..=r {
        total += binom(n, i as i64) * qm1.pow(i);
    }
    Ok(total)
}

/// Size of the injection ball of radius `r` in the Grassmannian G_q(k, n):
/// `sum_{i=0}^{r} q^{i^2} [k choose i]_q [n-k choose i]_q`.
/// Requires a prime-power `q` and `1 <= k <= n-k`; independent of the center.
pub fn injection_ball_size(q: u64, n: u32, k: u32, r: u32) -> Result<Count> {
    prime_power_parts(q).ok_or(Error::NotPrimePower(q))?;
    if k == 0 || 2 * k > n {
        return Err(Error::invalid(
            "k",
            format!("must satisfy 1 <= k <= n-k, got k={k}, n={n}"),
        ));
    }
    if r > k {
        return Err(Error::invalid(
            "r",
            format!("radius {r} out of range 0..={k}"),
        ));
    }
    let qb = BigUint::from(q);
    let mut total = BigUint::zero();
    for i in 0..=r {
        total += qb.pow(i * i) * q_binom(k, i as i64, q)? * q_binom(n - k, i as i64, q)?;
    }
    Ok(total)
}

/// Singleton bound for block codes: the maximum cardinality `q^{n-d+1}` of a
/// code in F_q^n with minimum Hamming distance at least `d`.
pub fn hamming_singleton_max(q: u64, n: u32, d: u32) -> Result<Count> {
    if q < 2 {
        return Err(Error::invalid("q", format!("must be at least 2, got {q}")));
    }
    if d == 0 || d > n {
        return Err(Error::invalid(
            "d",
            format!("must satisfy 1 <= d <= n, got d={d}, n={n}"),
        ));
    }
    Ok(BigUint::from(q).pow(n - d + 1))
}

/// Singleton-type bound for subspace codes: a code in G_q(k, n) with minimum
/// injection distance at least `d` has at most `[n-d+1 choose n-k]_q` elements.
pub fn subspace_singleton_max(q: u64, n: u32, k: u32, d: u32) -> Result<Count> {
    prime_power_parts(q).ok_or(Error::NotPrimePower(q))?;
    if k == 0 || 2 * k > n {
        return Err(Error::invalid(
            "k",
            format!("must satisfy 1 <= k <= n-k, got k={k}, n={n}"),
        ));
    }
    if d == 0 || d > k {
        return Err(Error::invalid(
            "d",
            format!("must satisfy 1 <= d <= k, got d={d}, k={k}"),
        ));
    }
    q_binom(n - d + 1, (n - k) as i64, q)
}

/// Leading term of the Hamming ball of radius `d-1` for large `q`:
/// `C(n, d-1) * q^{d-1}`.
pub fn hamming_ball_asymptotic(n: u32, d: u32) -> Result<AsymptoticForm> {
    if d < 2 || d > n {
        return Err(Error::invalid(
            "d",
            format!("must satisfy 2 <= d <= n, got d={d}, n={n}"),
        ));
    }
    Ok(AsymptoticForm {
        coefficient: binom(n, (d - 1) as i64),
        exponent: d - 1,
    })
}

/// Leading term of the injection ball of radius `d-1` for large `q`:
/// `q^{(d-1)(n-d+1)}` (unit coefficient; the bounded q-binomial factors are
/// absorbed into ~).
pub fn injection_ball_asymptotic(n: u32, k: u32, d: u32) -> Result<AsymptoticForm> {
    if d < 2 || d > k || 2 * k > n {
        return Err(Error::invalid(
            "d",
            format!("must satisfy 2 <= d <= k <= n-k, got d={d}, k={k}, n={n}"),
        ));
    }
    Ok(AsymptoticForm {
        coefficient: BigUint::one(),
        exponent: (d - 1) * (n - d + 1),
    })
}

/// Decompose `q` as `p^e` with `p` prime, if possible.
pub fn prime_power_parts(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 0;
    let mut c = 2;
    while c * c <= q {
        if q.is_multiple_of(c) {
            p = c;
            break;
        }
        c += 1;
    }
    if p == 0 {
        return Some((q, 1)); // q itself is prime
    }
    let mut rest = q;
    let mut e = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        e += 1;
    }
    if rest == 1 {
        Some((p, e))
    } else {
        None
    }
}

/// True iff `q` is a prime power (and therefore a valid finite-field order).
pub fn is_prime_power(q: u64) -> bool {
    prime_power_parts(q).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::ToPrimitive;
    use proptest::prelude::*;

    fn c(v: u64) -> Count {
        BigUint::from(v)
    }

    #[test]
    fn binom_small_values() {
        assert_eq!(binom(5u32, 2), c(10));
        assert_eq!(binom(4u32, 0), c(1));
        assert_eq!(binom(4u32, -1), c(0));
        assert_eq!(binom(4u32, 5), c(0));
        assert_eq!(binom(0u32, 0), c(1));
        assert_eq!(binom(100u32, 49), "98913082887808032681188722800".parse().unwrap());
    }

    #[test]
    fn binom_absorption_identity() {
        // l * C(m, l) = m * C(m-1, l-1) for 1 <= l <= m.
        for m in 1u64..=20 {
            for l in 1..=m {
                let lhs = binom(m, l as i64) * c(l);
                let rhs = binom(m - 1, l as i64 - 1) * c(m);
                assert_eq!(lhs, rhs, "m={m} l={l}");
            }
        }
    }

    #[test]
    fn q_binom_small_values() {
        assert_eq!(q_binom(2, 1, 2).unwrap(), c(3));
        assert_eq!(q_binom(4, 2, 2).unwrap(), c(35));
        assert_eq!(q_binom(3, 1, 3).unwrap(), c(13));
        assert_eq!(q_binom(4, 2, 3).unwrap(), c(130));
        assert_eq!(q_binom(5, 2, 2).unwrap(), c(155));
        assert_eq!(q_binom(6, 3, 2).unwrap(), c(1395));
        assert_eq!(q_binom(3, -1, 2).unwrap(), c(0));
        assert_eq!(q_binom(3, 4, 2).unwrap(), c(0));
        for m in 0..8 {
            for q in [2, 3, 4, 5] {
                assert_eq!(q_binom(m, 0, q).unwrap(), c(1));
            }
        }
        assert!(q_binom(3, 1, 1).is_err());
    }

    proptest! {
        #[test]
        fn q_binom_symmetry(m in 0u32..12, l in 0i64..12, q in 2u64..16) {
            let a = q_binom(m, l, q).unwrap();
            let b = q_binom(m, m as i64 - l, q).unwrap();
            if l <= m as i64 {
                prop_assert_eq!(a, b);
            }
        }
    }

    // Independent brute-force ball count: walks every vector of F_q^n by
    // odometer and compares coordinates against a fixed center, with no help
    // from the codespace module.
    fn brute_ball(q: u64, n: u32, r: u32, center: &[u64]) -> u64 {
        let mut digits = vec![0u64; n as usize];
        let mut count = 0;
        loop {
            let dist = digits
                .iter()
                .zip(center)
                .filter(|(a, b)| a != b)
                .count() as u32;
            if dist <= r {
                count += 1;
            }
            let mut i = 0;
            loop {
                if i == n as usize {
                    return count;
                }
                digits[i] += 1;
                if digits[i] < q {
                    break;
                }
                digits[i] = 0;
                i += 1;
            }
        }
    }

    #[test]
    fn hamming_ball_matches_brute_force() {
        assert_eq!(hamming_ball_size(2, 3, 1).unwrap(), c(4));
        assert_eq!(hamming_ball_size(3, 4, 2).unwrap(), c(33));
        for q in [2u64, 3, 4] {
            for n in 1u32..=5 {
                for r in 0..=n {
                    let expect = brute_ball(q, n, r, &vec![0; n as usize]);
                    assert_eq!(hamming_ball_size(q, n, r).unwrap(), c(expect));
                    // A couple of non-zero centers: the size is center-free.
                    let center: Vec<u64> = (0..n as u64).map(|i| i % q).collect();
                    assert_eq!(brute_ball(q, n, r, &center), expect);
                }
            }
        }
    }

    #[test]
    fn hamming_ball_full_radius_is_whole_space() {
        for q in [2u64, 3, 5, 6] {
            for n in 1u32..=4 {
                assert_eq!(
                    hamming_ball_size(q, n, n).unwrap(),
                    BigUint::from(q).pow(n)
                );
            }
        }
    }

    #[test]
    fn hamming_ball_strictly_increasing_in_radius() {
        for q in [2u64, 3, 4, 7] {
            for n in 1u32..=5 {
                for r in 0..n {
                    let a = hamming_ball_size(q, n, r).unwrap();
                    let b = hamming_ball_size(q, n, r + 1).unwrap();
                    assert!(a < b, "q={q} n={n} r={r}");
                }
            }
        }
    }

    #[test]
    fn hamming_ball_rejects_bad_radius() {
        assert!(hamming_ball_size(2, 3, 4).is_err());
        assert!(hamming_ball_size(1, 3, 1).is_err());
    }

    #[test]
    fn injection_ball_values() {
        assert_eq!(injection_ball_size(2, 4, 2, 1).unwrap(), c(19));
        assert_eq!(injection_ball_size(2, 4, 2, 2).unwrap(), c(35));
        assert_eq!(injection_ball_size(2, 4, 2, 0).unwrap(), c(1));
        for (q, n, k) in [(3u64, 4u32, 2u32), (2, 6, 3), (4, 4, 2)] {
            assert_eq!(injection_ball_size(q, n, k, 0).unwrap(), c(1));
            // Radius k reaches the whole Grassmannian.
            assert_eq!(
                injection_ball_size(q, n, k, k).unwrap(),
                q_binom(n, k as i64, q).unwrap()
            );
        }
    }

    #[test]
    fn injection_ball_rejects_invalid_input() {
        assert!(injection_ball_size(6, 4, 2, 1).is_err()); // composite q
        assert!(matches!(
            injection_ball_size(6, 4, 2, 1),
            Err(Error::NotPrimePower(6))
        ));
        assert!(injection_ball_size(2, 4, 3, 1).is_err()); // k > n-k
        assert!(injection_ball_size(2, 4, 2, 3).is_err()); // r > k
    }

    #[test]
    fn singleton_maxima() {
        assert_eq!(hamming_singleton_max(2, 4, 2).unwrap(), c(8));
        assert_eq!(hamming_singleton_max(4, 5, 3).unwrap(), c(64));
        for (q, n) in [(2u64, 3u32), (5, 4)] {
            assert_eq!(
                hamming_singleton_max(q, n, 1).unwrap(),
                BigUint::from(q).pow(n)
            );
        }
        assert!(hamming_singleton_max(2, 4, 5).is_err());

        assert_eq!(subspace_singleton_max(2, 4, 2, 2).unwrap(), c(7));
        assert_eq!(subspace_singleton_max(2, 6, 3, 3).unwrap(), c(15));
        // d = 1 recovers the full Grassmannian by q-binomial symmetry.
        for (q, n, k) in [(2u64, 4u32, 2u32), (3, 6, 2), (2, 6, 3)] {
            assert_eq!(
                subspace_singleton_max(q, n, k, 1).unwrap(),
                q_binom(n, k as i64, q).unwrap()
            );
        }
    }

    #[test]
    fn hamming_asymptotic_form() {
        let f = hamming_ball_asymptotic(4, 3).unwrap();
        assert_eq!(f.coefficient, c(6));
        assert_eq!(f.exponent, 2);
        for n in 2u32..8 {
            let f = hamming_ball_asymptotic(n, 2).unwrap();
            assert_eq!(f.coefficient, c(n as u64));
            assert_eq!(f.exponent, 1);
        }
        assert!(hamming_ball_asymptotic(4, 1).is_err());
        // Ratio ball/leading-term stays within (0.9, 1.1) for large prime q.
        for q in [101u64, 103, 107] {
            let ball = hamming_ball_size(q, 4, 2).unwrap();
            let lead = hamming_ball_asymptotic(4, 3).unwrap().leading_term(q);
            assert!(ball.clone() * 10u32 > lead.clone() * 9u32, "q={q}");
            assert!(ball * 10u32 < lead * 11u32, "q={q}");
        }
    }

    #[test]
    fn injection_asymptotic_form() {
        let f = injection_ball_asymptotic(4, 2, 2).unwrap();
        assert_eq!(f.coefficient, c(1));
        assert_eq!(f.exponent, 3);
        let f = injection_ball_asymptotic(6, 3, 2).unwrap();
        assert_eq!(f.exponent, 5);
        assert!(injection_ball_asymptotic(4, 2, 3).is_err());

        // The ratio ball / q^3 decreases with q and stays in (1, 3); at q = 2
        // it is 19/8.
        let mut prev: Option<f64> = None;
        for q in [2u64, 3, 4, 5, 7, 8, 9] {
            let ball = injection_ball_size(q, 4, 2, 1).unwrap();
            let lead = BigUint::from(q).pow(3);
            let ratio = ball.to_f64().unwrap() / lead.to_f64().unwrap();
            if q == 2 {
                assert!((ratio - 19.0 / 8.0).abs() < 1e-12);
            }
            assert!(ratio > 1.0 && ratio < 3.0, "q={q}");
            if let Some(p) = prev {
                assert!(ratio < p, "q={q}");
            }
            prev = Some(ratio);
        }
    }

    #[test]
    fn prime_power_recognition() {
        assert_eq!(prime_power_parts(2), Some((2, 1)));
        assert_eq!(prime_power_parts(9), Some((3, 2)));
        assert_eq!(prime_power_parts(128), Some((2, 7)));
        assert_eq!(prime_power_parts(125), Some((5, 3)));
        assert_eq!(prime_power_parts(6), None);
        assert_eq!(prime_power_parts(12), None);
        assert_eq!(prime_power_parts(1), None);
        assert_eq!(prime_power_parts(0), None);
        let powers: Vec<u64> = (2..=32).filter(|&q| is_prime_power(q)).collect();
        assert_eq!(
            powers,
            vec![2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32]
        );
    }
}
