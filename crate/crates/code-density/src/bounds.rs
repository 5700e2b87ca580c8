//! Exact density bounds for block codes (Hamming metric) and subspace codes
//! (injection metric).
//!
//! The density of interest is the fraction of size-S codes with minimum
//! distance at least d among all size-S codes of the same ambient space.
//! Writing M for the number of points of the ambient space (q^n vectors, or
//! the Grassmannian size for subspace codes) and b for the ball size of
//! radius d-1, the bounds computed here are
//!
//! ```text
//! lower = 1 - (b-1) S (S-1) / (2 (M-1))
//! upper = 1 - (b-1) S (S-1) / (2 Omega (M-1))
//! Omega = 1 + beta1 (S-2)/(M-2) + beta0 (S-2)(S-3)/((M-2)(M-3))
//! beta1 = 2b - 4,    beta0 = M(b-1)/2 - 2b + 3
//! ```
//!
//! all evaluated as exact rationals. The same formulas serve both metrics;
//! only M and b change.

use num::{BigInt, BigRational, BigUint, One, Signed, ToPrimitive, Zero};

use crate::assoc::AssociationProfile;
use crate::combinat::{
    binom, hamming_ball_size, injection_ball_size, prime_power_parts, q_binom, Count,
};
use crate::error::{Error, Result};
use crate::ratio::{rat_i, rat_u};

/// Validated parameter tuple for block-code densities. Any integer alphabet
/// size `q >= 2` is accepted; the Hamming-side results do not need a field
/// structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HammingParams {
    pub q: u64,
    pub n: u32,
    pub d: u32,
    pub size: Count,
}

impl HammingParams {
    pub fn new(q: u64, n: u32, d: u32, size: impl Into<Count>) -> Result<Self> {
        if q < 2 {
            return Err(Error::invalid("q", format!("must be at least 2, got {q}")));
        }
        if n == 0 {
            return Err(Error::invalid("n", "must be positive"));
        }
        if d == 0 || d > n {
            return Err(Error::invalid(
                "d",
                format!("must satisfy 1 <= d <= n, got d={d}, n={n}"),
            ));
        }
        let size = size.into();
        let space = BigUint::from(q).pow(n);
        if size < BigUint::from(2u32) || size > space {
            return Err(Error::invalid(
                "S",
                format!("cardinality must satisfy 2 <= S <= q^n = {space}, got {size}"),
            ));
        }
        Ok(HammingParams { q, n, d, size })
    }

    /// Number of points of the ambient space, `q^n`.
    pub fn space_size(&self) -> Count {
        BigUint::from(self.q).pow(self.n)
    }

    /// Hamming ball size of radius `d-1`.
    pub fn ball_size(&self) -> Count {
        hamming_ball_size(self.q, self.n, self.d - 1).expect("validated")
    }
}

/// Validated parameter tuple for subspace-code densities. `q` must be a
/// prime power. Codes in G_q(k, n) and G_q(n-k, n) have equal densities
/// (orthogonal complementation is a distance-preserving bijection), so the
/// dimension is canonicalized to `k <= n-k` on construction; the value the
/// caller passed is kept in `original_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubspaceParams {
    pub q: u64,
    pub n: u32,
    k: u32,
    pub original_k: u32,
    pub d: u32,
    pub size: Count,
}

impl SubspaceParams {
    pub fn new(q: u64, n: u32, k: u32, d: u32, size: impl Into<Count>) -> Result<Self> {
        prime_power_parts(q).ok_or(Error::NotPrimePower(q))?;
        if n < 2 {
            return Err(Error::invalid("n", "must be at least 2"));
        }
        if k == 0 || k >= n {
            return Err(Error::invalid(
                "k",
                format!("must satisfy 1 <= k <= n-1, got k={k}, n={n}"),
            ));
        }
        let canonical = k.min(n - k);
        if d == 0 || d > canonical {
            return Err(Error::invalid(
                "d",
                format!(
                    "must satisfy 1 <= d <= min(k, n-k) = {canonical}, got d={d}"
                ),
            ));
        }
        let size = size.into();
        let space = q_binom(n, canonical as i64, q)?;
        if size < BigUint::from(2u32) || size > space {
            return Err(Error::invalid(
                "S",
                format!(
                    "cardinality must satisfy 2 <= S <= [n choose k]_q = {space}, got {size}"
                ),
            ));
        }
        Ok(SubspaceParams {
            q,
            n,
            k: canonical,
            original_k: k,
            d,
            size,
        })
    }

    /// Canonical dimension, always `<= n-k`.
    pub fn k(&self) -> u32 {
        self.k
    }

    /// Number of points of the ambient space, `[n choose k]_q`.
    pub fn space_size(&self) -> Count {
        q_binom(self.n, self.k as i64, self.q).expect("validated")
    }

    /// Injection ball size of radius `d-1`.
    pub fn ball_size(&self) -> Count {
        injection_ball_size(self.q, self.n, self.k, self.d - 1).expect("validated")
    }
}

/// Exact rational density bounds. The raw values are the formulas as
/// written, which can leave [0, 1]; the clamped values are what users see.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DensityInterval {
    pub lower_raw: BigRational,
    pub upper_raw: BigRational,
    pub lower: BigRational,
    pub upper: BigRational,
}

impl DensityInterval {
    fn from_raw(lower_raw: BigRational, upper_raw: BigRational) -> Self {
        let zero = BigRational::zero();
        let one = BigRational::one();
        let lower = lower_raw.clone().max(zero);
        let upper = upper_raw.clone().min(one);
        DensityInterval {
            lower_raw,
            upper_raw,
            lower,
            upper,
        }
    }

    fn exact(value: BigRational) -> Self {
        DensityInterval {
            lower_raw: value.clone(),
            upper_raw: value.clone(),
            lower: value.clone(),
            upper: value,
        }
    }
}

/// Exact representation of `base^(exp_num / exp_den)`, used for the
/// sparseness/density threshold cardinality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QPower {
    pub base: u64,
    pub exp_num: u32,
    pub exp_den: u32,
}

impl QPower {
    /// The exact integer value, when the power is a perfect root.
    pub fn exact_integer(&self) -> Option<Count> {
        let x = BigUint::from(self.base).pow(self.exp_num);
        let root = x.nth_root(self.exp_den);
        if root.pow(self.exp_den) == x {
            Some(root)
        } else {
            None
        }
    }

    /// Exact ceiling of this power raised to `t_num / t_den`, i.e.
    /// `ceil(base^(exp_num * t_num / (exp_den * t_den)))`.
    pub fn ceil_pow(&self, t_num: u32, t_den: u32) -> Count {
        assert!(t_den > 0, "rational exponent needs a positive denominator");
        if t_num == 0 {
            return BigUint::one();
        }
        let a = self.exp_num * t_num;
        let b = self.exp_den * t_den;
        let x = BigUint::from(self.base).pow(a);
        let root = x.nth_root(b);
        if root.pow(b) == x {
            root
        } else {
            root + 1u32
        }
    }

    /// Decimal approximation (not part of any formula path).
    pub fn approx_f64(&self) -> f64 {
        let exp = self.exp_num as f64 / self.exp_den as f64;
        (self.base as f64).powf(exp)
    }
}

/// Shared interior of the two density-bound computations.
fn density_interval(space: &Count, ball: &Count, size: &Count) -> Result<DensityInterval> {
    let m = rat_u(space);
    let b = rat_u(ball);
    let s = rat_u(size);
    let one = BigRational::one();
    let two = rat_i(2);
    let three = rat_i(3);
    let four = rat_i(4);

    // (b-1) S (S-1) / (2 (M-1))
    let mass = (&b - &one) * &s * (&s - &one) / (&two * (&m - &one));
    let lower_raw = &one - &mass;

    if size > &BigUint::from(2u32) && space <= &BigUint::from(3u32) {
        // The Omega denominators (M-2)(M-3) vanish. Unreachable through the
        // validated constructors (it forces d = 1), but rejected distinctly.
        return Err(Error::DegenerateAmbientSpace {
            points: space.to_u64().unwrap_or(u64::MAX),
            size: size.to_u64().unwrap_or(u64::MAX),
        });
    }

    let omega = if size == &BigUint::from(2u32) {
        one.clone()
    } else {
        let beta1 = &two * &b - &four;
        let beta0 = &m * (&b - &one) / &two - &two * &b + &three;
        &one
            + beta1 * (&s - &two) / (&m - &two)
            + beta0 * (&s - &two) * (&s - &three) / ((&m - &two) * (&m - &three))
    };
    let upper_raw = &one - &mass / omega;
    Ok(DensityInterval::from_raw(lower_raw, upper_raw))
}

/// Density bounds for block codes in F_q^n of cardinality S and minimum
/// Hamming distance at least d. `d = 1` is degenerate (every code
/// qualifies) and returns the exact interval [1, 1].
pub fn density_bounds_hamming(params: &HammingParams) -> Result<DensityInterval> {
    if params.d == 1 {
        return Ok(DensityInterval::exact(BigRational::one()));
    }
    density_interval(&params.space_size(), &params.ball_size(), &params.size)
}

/// Density bounds for subspace codes in G_q(k, n) of cardinality S and
/// minimum injection distance at least d. `d = 1` returns [1, 1].
pub fn density_bounds_injection(params: &SubspaceParams) -> Result<DensityInterval> {
    if params.d == 1 {
        return Ok(DensityInterval::exact(BigRational::one()));
    }
    density_interval(&params.space_size(), &params.ball_size(), &params.size)
}

/// Shared profile construction: magnitude-2 association over the pairs of
/// close points, with class sizes from the free-choice count of overlapping
/// pairs and co-neighborhood counts `W_l = C(M-4+l, S-4+l)`.
fn pair_profile(space: &Count, ball: &Count, size: &Count) -> AssociationProfile {
    let two = BigUint::from(2u32);
    let product = space * (ball - 1u32);
    debug_assert!((&product % &two).is_zero());
    let v = product / &two;

    // beta0 = V - 2b + 3 is positive for every ambient with at least 4
    // points; guard the unsigned subtraction anyway.
    let v_plus_3 = &v + BigUint::from(3u32);
    let twice_ball = ball * &two;
    assert!(
        v_plus_3 >= twice_ball,
        "pair count must dominate twice the ball size"
    );
    let v2b3 = v_plus_3 - twice_ball;
    let class_sizes = vec![
        &v * v2b3,
        &v * &two * (ball - &two),
        v.clone(),
    ];
    let s = BigInt::from(size.clone());
    let w_values = (0..3)
        .map(|l| binom(space - BigUint::from(4 - l as u32), &s - (4 - l)))
        .collect();
    AssociationProfile {
        magnitude: 2,
        v_size: v,
        class_sizes,
        w_values,
    }
}

/// Association profile of the Hamming pair graph: left vertices are the
/// unordered pairs of distinct vectors at distance at most d-1, right
/// vertices the size-S codes, with containment edges. Requires `d >= 2`
/// (otherwise the left side is empty).
pub fn hamming_profile(params: &HammingParams) -> Result<AssociationProfile> {
    if params.d < 2 {
        return Err(Error::invalid(
            "d",
            "profile needs d >= 2; no pair of distinct vectors is within distance 0",
        ));
    }
    Ok(pair_profile(
        &params.space_size(),
        &params.ball_size(),
        &params.size,
    ))
}

/// Association profile of the injection pair graph over G_q(k, n); the
/// analogue of [`hamming_profile`] with the Grassmannian as point set.
pub fn injection_profile(params: &SubspaceParams) -> Result<AssociationProfile> {
    if params.d < 2 {
        return Err(Error::invalid(
            "d",
            "profile needs d >= 2; no pair of distinct subspaces is within distance 0",
        ));
    }
    Ok(pair_profile(
        &params.space_size(),
        &params.ball_size(),
        &params.size,
    ))
}

/// Sparseness/density threshold for block codes: `gamma = sqrt(q^{n-d+1})`,
/// the square root of the Singleton maximum.
pub fn gamma_hamming(q: u64, n: u32, d: u32) -> Result<QPower> {
    if q < 2 {
        return Err(Error::invalid("q", format!("must be at least 2, got {q}")));
    }
    if d < 2 || d > n {
        return Err(Error::invalid(
            "d",
            format!("must satisfy 2 <= d <= n, got d={d}, n={n}"),
        ));
    }
    Ok(QPower {
        base: q,
        exp_num: n - d + 1,
        exp_den: 2,
    })
}

/// Sparseness/density threshold for subspace codes:
/// `gamma = sqrt(q^{k(n-k) - (d-1)(n-d+1)})`.
pub fn gamma_injection(q: u64, n: u32, k: u32, d: u32) -> Result<QPower> {
    prime_power_parts(q).ok_or(Error::NotPrimePower(q))?;
    if k == 0 || 2 * k > n {
        return Err(Error::invalid(
            "k",
            format!("must satisfy 1 <= k <= n-k, got k={k}, n={n}"),
        ));
    }
    if d < 2 || d > k {
        return Err(Error::invalid(
            "d",
            format!("must satisfy 2 <= d <= k, got d={d}, k={k}"),
        ));
    }
    // k(n-k) >= (d-1)(n-d+1) whenever d <= k <= n-k, with margin n-2k+1 at
    // d = k, so the exponent is a positive integer.
    Ok(QPower {
        base: q,
        exp_num: k * (n - k) - (d - 1) * (n - d + 1),
        exp_den: 2,
    })
}

/// Leading-order cardinality guaranteed by the Gilbert-Varshamov argument:
/// codes of minimum distance >= d and size about `q^{n-d+1} / C(n, d-1)`
/// exist for every large q.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GvEstimate {
    pub exponent: u32,
    pub divisor: Count,
}

impl GvEstimate {
    /// Evaluate `q^exponent / divisor` at a concrete alphabet size.
    pub fn evaluate(&self, q: u64) -> BigRational {
        BigRational::new(
            BigInt::from(BigUint::from(q).pow(self.exponent)),
            BigInt::from(self.divisor.clone()),
        )
    }
}

/// The Gilbert-Varshamov cardinality descriptor `(n-d+1, C(n, d-1))`.
pub fn gv_cardinality_estimate(n: u32, d: u32) -> Result<GvEstimate> {
    if d < 2 || d > n {
        return Err(Error::invalid(
            "d",
            format!("must satisfy 2 <= d <= n, got d={d}, n={n}"),
        ));
    }
    Ok(GvEstimate {
        exponent: n - d + 1,
        divisor: binom(n, (d - 1) as i64),
    })
}

/// Density bounds for partial spreads: collections of S pairwise
/// trivially-intersecting k-subspaces, i.e. subspace codes with d = k.
/// `k = 1` (or its dual) is degenerate: distinct lines always intersect
/// trivially, so the interval is [1, 1].
pub fn spread_bounds(q: u64, n: u32, k: u32, size: impl Into<Count>) -> Result<DensityInterval> {
    prime_power_parts(q).ok_or(Error::NotPrimePower(q))?;
    if k == 0 || k >= n {
        return Err(Error::invalid(
            "k",
            format!("must satisfy 1 <= k <= n-1, got k={k}, n={n}"),
        ));
    }
    let canonical = k.min(n - k);
    let params = SubspaceParams::new(q, n, k, canonical, size)?;
    density_bounds_injection(&params)
}

/// Number of k-subspaces in a spread of F_q^n: `(q^n - 1) / (q^k - 1)`.
/// Defined only when k divides n.
pub fn spread_size(q: u64, n: u32, k: u32) -> Result<Count> {
    prime_power_parts(q).ok_or(Error::NotPrimePower(q))?;
    if k == 0 || k > n {
        return Err(Error::invalid(
            "k",
            format!("must satisfy 1 <= k <= n, got k={k}, n={n}"),
        ));
    }
    if !n.is_multiple_of(k) {
        return Err(Error::invalid(
            "k",
            format!("{k} does not divide n = {n}; no spread exists"),
        ));
    }
    let q = BigUint::from(q);
    Ok((q.pow(n) - 1u32) / (q.pow(k) - 1u32))
}

/// Check that `interval.lower <= value <= interval.upper` with exact
/// rational comparisons. Used by the sandwich verifications.
pub fn sandwich_holds(interval: &DensityInterval, value: &BigRational) -> bool {
    !value.is_negative() && &interval.lower <= value && value <= &interval.upper
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::assoc::{lower_bound_nonisolated, upper_bound_nonisolated, validate_profile};
    use crate::ratio::rat;

    fn c(v: u64) -> Count {
        BigUint::from(v)
    }

    #[test]
    fn hamming_params_validation() {
        assert!(HammingParams::new(2, 3, 2, 3u32).is_ok());
        assert!(HammingParams::new(1, 3, 2, 3u32).is_err());
        assert!(HammingParams::new(2, 3, 4, 3u32).is_err());
        assert!(HammingParams::new(2, 3, 0, 3u32).is_err());
        assert!(HammingParams::new(2, 3, 2, 1u32).is_err());
        assert!(HammingParams::new(2, 3, 2, 9u32).is_err()); // S > q^n = 8
        assert!(HammingParams::new(6, 3, 2, 3u32).is_ok()); // composite q fine
    }

    #[test]
    fn subspace_params_validation_and_dualization() {
        let p = SubspaceParams::new(2, 4, 2, 2, 3u32).unwrap();
        assert_eq!(p.k(), 2);
        let dual = SubspaceParams::new(2, 5, 3, 2, 3u32).unwrap();
        assert_eq!(dual.k(), 2);
        assert_eq!(dual.original_k, 3);
        assert_eq!(dual.space_size(), c(155));
        assert!(SubspaceParams::new(6, 4, 2, 2, 3u32).is_err()); // composite q
        assert!(SubspaceParams::new(2, 4, 0, 1, 3u32).is_err());
        assert!(SubspaceParams::new(2, 4, 4, 1, 3u32).is_err()); // k = n
        assert!(SubspaceParams::new(2, 4, 3, 2, 3u32).is_err()); // dual k = 1 < d
        assert!(SubspaceParams::new(2, 4, 2, 2, 36u32).is_err()); // S > 35
    }

    #[test]
    fn hamming_profile_worked_example() {
        let p = HammingParams::new(2, 3, 2, 3u32).unwrap();
        let profile = hamming_profile(&p).unwrap();
        assert_eq!(profile.magnitude, 2);
        assert_eq!(profile.v_size, c(12));
        assert_eq!(profile.class_sizes, vec![c(84), c(48), c(12)]);
        assert_eq!(profile.w_values, vec![c(0), c(1), c(6)]);
        assert!(validate_profile(&profile).is_valid());
    }

    #[test]
    fn hamming_profile_size_two_w_values() {
        for (q, n, d) in [(2u64, 3u32, 2u32), (3, 3, 2), (2, 4, 3)] {
            let p = HammingParams::new(q, n, d, 2u32).unwrap();
            let profile = hamming_profile(&p).unwrap();
            assert_eq!(profile.w_values, vec![c(0), c(0), c(1)], "q={q} n={n} d={d}");
        }
    }

    #[test]
    fn hamming_profile_class_sum_identity() {
        for (q, n, d, s) in [(3u64, 3u32, 2u32, 3u32), (2, 4, 2, 4), (2, 4, 3, 3)] {
            let p = HammingParams::new(q, n, d, s).unwrap();
            let profile = hamming_profile(&p).unwrap();
            let sum: Count = profile.class_sizes.iter().sum();
            assert_eq!(sum, &profile.v_size * &profile.v_size);
        }
    }

    #[test]
    fn hamming_profile_rejects_d1() {
        let p = HammingParams::new(2, 3, 1, 3u32).unwrap();
        assert!(hamming_profile(&p).is_err());
    }

    #[test]
    fn injection_profile_worked_example() {
        let p = SubspaceParams::new(2, 4, 2, 2, 4u32).unwrap();
        let profile = injection_profile(&p).unwrap();
        assert_eq!(profile.v_size, c(315));
        assert_eq!(profile.class_sizes[1], c(10710));
        assert_eq!(profile.class_sizes[2], c(315));
        assert_eq!(profile.w_values, vec![c(1), c(32), c(528)]);
        let sum: Count = profile.class_sizes.iter().sum();
        assert_eq!(sum, c(315) * c(315));
    }

    #[test]
    fn density_bounds_hamming_worked_examples() {
        // S = 2 in F_2^2: both bounds collapse to the exact density 1/3.
        let p = HammingParams::new(2, 2, 2, 2u32).unwrap();
        let i = density_bounds_hamming(&p).unwrap();
        assert_eq!(i.lower, rat(1, 3));
        assert_eq!(i.upper, rat(1, 3));

        // The (2,3,2,3) instance: raw lower -2/7 clamps to 0; upper 8/35.
        let p = HammingParams::new(2, 3, 2, 3u32).unwrap();
        let i = density_bounds_hamming(&p).unwrap();
        assert_eq!(i.lower_raw, rat(-2, 7));
        assert_eq!(i.lower, rat(0, 1));
        assert_eq!(i.upper_raw, rat(8, 35));
        assert_eq!(i.upper, rat(8, 35));

        // d = 1 is the degenerate full interval.
        let p = HammingParams::new(5, 3, 1, 7u32).unwrap();
        let i = density_bounds_hamming(&p).unwrap();
        assert_eq!(i.lower, rat(1, 1));
        assert_eq!(i.upper, rat(1, 1));
    }

    #[test]
    fn density_bounds_injection_worked_examples() {
        let p = SubspaceParams::new(2, 4, 2, 2, 2u32).unwrap();
        let i = density_bounds_injection(&p).unwrap();
        assert_eq!(i.lower, rat(8, 17));
        assert_eq!(i.upper, rat(8, 17));

        let p = SubspaceParams::new(2, 4, 2, 2, 3u32).unwrap();
        let i = density_bounds_injection(&p).unwrap();
        assert_eq!(i.lower_raw, rat(-10, 17));
        assert_eq!(i.lower, rat(0, 1));
        // Omega = 67/33 and the mass term is 891/1139.
        assert_eq!(i.upper, rat(248, 1139));

        let p = SubspaceParams::new(2, 4, 1, 1, 3u32).unwrap();
        let i = density_bounds_injection(&p).unwrap();
        assert_eq!(i.lower, rat(1, 1));
        assert_eq!(i.upper, rat(1, 1));
    }

    #[test]
    fn size_two_collapse_in_both_metrics() {
        for (q, n, d) in [(2u64, 3u32, 2u32), (3, 4, 3), (4, 4, 2), (5, 2, 2)] {
            let p = HammingParams::new(q, n, d, 2u32).unwrap();
            let i = density_bounds_hamming(&p).unwrap();
            assert_eq!(i.lower_raw, i.upper_raw, "q={q} n={n} d={d}");
            let b = p.ball_size();
            let m = p.space_size();
            let expect = BigRational::one()
                - BigRational::new(BigInt::from(b - 1u32), BigInt::from(m - 1u32));
            assert_eq!(i.lower_raw, expect);
        }
        for (q, n, k, d) in [(2u64, 4u32, 2u32, 2u32), (3, 4, 2, 2), (2, 6, 3, 2)] {
            let p = SubspaceParams::new(q, n, k, d, 2u32).unwrap();
            let i = density_bounds_injection(&p).unwrap();
            assert_eq!(i.lower_raw, i.upper_raw);
        }
    }

    #[test]
    fn lower_raw_strictly_decreasing_in_size() {
        for (q, n, d) in [(2u64, 3u32, 2u32), (3, 4, 2)] {
            let mut prev: Option<BigRational> = None;
            for s in 2u32..6 {
                let p = HammingParams::new(q, n, d, s).unwrap();
                let i = density_bounds_hamming(&p).unwrap();
                if let Some(prev) = prev {
                    assert!(i.lower_raw < prev, "q={q} n={n} d={d} S={s}");
                }
                prev = Some(i.lower_raw);
            }
        }
    }

    #[test]
    fn injection_duality() {
        for s in [2u32, 3, 5] {
            let a = SubspaceParams::new(2, 5, 2, 2, s).unwrap();
            let b = SubspaceParams::new(2, 5, 3, 2, s).unwrap();
            assert_eq!(
                density_bounds_injection(&a).unwrap(),
                density_bounds_injection(&b).unwrap()
            );
        }
    }

    // The closed forms must agree with the generic association-engine route:
    // upper = 1 - lower_bound_nonisolated(profile) / C(M, S) and
    // lower = 1 - V * W_2 / C(M, S), for any parameters.
    #[test]
    fn bounds_match_association_engine_route() {
        let cases = [
            (2u64, 3u32, 2u32, 3u32),
            (2, 4, 2, 4),
            (2, 4, 3, 3),
            (3, 3, 2, 5),
            (5, 3, 2, 7),
            (3, 4, 3, 4),
        ];
        for (q, n, d, s) in cases {
            let p = HammingParams::new(q, n, d, s).unwrap();
            let i = density_bounds_hamming(&p).unwrap();
            let profile = hamming_profile(&p).unwrap();
            let total = rat_u(&binom(p.space_size(), BigInt::from(s)));
            let lb = lower_bound_nonisolated(&profile).unwrap();
            assert_eq!(
                i.upper_raw,
                BigRational::one() - lb / total.clone(),
                "upper route q={q} n={n} d={d} S={s}"
            );
            let degree = profile.w_values.last().unwrap();
            let ub = upper_bound_nonisolated(&profile.v_size, degree).unwrap();
            assert_eq!(
                i.lower_raw,
                BigRational::one() - rat_u(&ub) / total,
                "lower route q={q} n={n} d={d} S={s}"
            );
        }
    }

    #[test]
    fn degenerate_ambient_is_rejected() {
        // Not reachable through the validated constructors; exercise the
        // interior guard directly.
        let err = density_interval(&c(3), &c(2), &c(3)).unwrap_err();
        assert!(matches!(err, Error::DegenerateAmbientSpace { .. }));
    }

    #[test]
    fn gamma_descriptors() {
        let g = gamma_hamming(4, 5, 3).unwrap();
        assert_eq!((g.base, g.exp_num, g.exp_den), (4, 3, 2));
        assert_eq!(g.exact_integer(), Some(c(8)));

        let g = gamma_hamming(2, 4, 2).unwrap();
        assert_eq!((g.exp_num, g.exp_den), (3, 2));
        assert_eq!(g.exact_integer(), None);

        for (q, n) in [(2u64, 3u32), (3, 5)] {
            let g = gamma_hamming(q, n, n).unwrap();
            assert_eq!((g.exp_num, g.exp_den), (1, 2));
        }

        let g = gamma_injection(2, 4, 2, 2).unwrap();
        assert_eq!((g.exp_num, g.exp_den), (1, 2));
        let g = gamma_injection(3, 6, 2, 2).unwrap();
        assert_eq!((g.exp_num, g.exp_den), (3, 2));
        for k in [2u32, 3, 4] {
            let g = gamma_injection(2, 2 * k, k, k).unwrap();
            assert_eq!((g.exp_num, g.exp_den), (1, 2), "k={k}");
        }
        assert!(gamma_injection(6, 4, 2, 2).is_err());
    }

    #[test]
    fn gamma_ceil_pow() {
        // gamma for (q, n, d) = (q, 4, 3) is q; ceil(gamma^(1/2)) = ceil(sqrt q).
        let g = gamma_hamming(7, 4, 3).unwrap();
        assert_eq!(g.ceil_pow(1, 2), c(3));
        assert_eq!(g.ceil_pow(2, 1), c(49));
        let g = gamma_hamming(16, 4, 3).unwrap();
        assert_eq!(g.ceil_pow(1, 2), c(4));
        assert_eq!(g.ceil_pow(0, 1), c(1));
    }

    #[test]
    fn gv_descriptor() {
        let e = gv_cardinality_estimate(4, 3).unwrap();
        assert_eq!((e.exponent, e.divisor.clone()), (2, c(6)));
        let e = gv_cardinality_estimate(5, 3).unwrap();
        assert_eq!((e.exponent, e.divisor.clone()), (3, c(10)));
        for n in 2u32..8 {
            let e = gv_cardinality_estimate(n, 2).unwrap();
            assert_eq!((e.exponent, e.divisor.clone()), (n - 1, c(n as u64)));
        }
        assert_eq!(gv_cardinality_estimate(4, 3).unwrap().evaluate(5), rat(25, 6));
    }

    #[test]
    fn spread_helpers() {
        assert_eq!(spread_size(2, 4, 2).unwrap(), c(5));
        assert_eq!(spread_size(3, 4, 2).unwrap(), c(10));
        assert_eq!(spread_size(2, 6, 6).unwrap(), c(1));
        assert!(spread_size(2, 5, 2).is_err());

        let i = spread_bounds(2, 4, 2, 2u32).unwrap();
        assert_eq!(i.lower, rat(8, 17));
        assert_eq!(i.upper, rat(8, 17));

        // Lines always qualify.
        let i = spread_bounds(3, 4, 1, 5u32).unwrap();
        assert_eq!(i.lower, rat(1, 1));
        assert_eq!(i.upper, rat(1, 1));
    }
}
