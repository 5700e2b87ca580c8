//! Bounds on non-isolated right vertices of association-regular bipartite
//! graphs.
//!
//! The graphs of interest here are astronomically large (their right side is
//! the set of all size-S codes), so the engine never materializes a graph.
//! It works on an [`AssociationProfile`]: the magnitude `r` of the
//! association, the left vertex count `|V|`, the class sizes
//! `|alpha^{-1}(0)| .. |alpha^{-1}(r)|`, and the co-neighborhood counts
//! `W_0 .. W_r`. Materialized tiny graphs, used only to check these bounds
//! empirically, live in the estimator module.

use num::{BigRational, Zero};
use std::fmt;

use crate::combinat::Count;
use crate::error::{Error, Result};

/// Abstract description of an association of magnitude `r` on a left vertex
/// set, together with the co-neighborhood counts of an association-regular
/// bipartite graph over it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssociationProfile {
    /// Magnitude `r` of the association.
    pub magnitude: usize,
    /// Number of left vertices `|V|`.
    pub v_size: Count,
    /// `class_sizes[l] = |alpha^{-1}(l)|` for `l = 0..=r`.
    pub class_sizes: Vec<Count>,
    /// `w_values[l] = W_l(alpha)`, the number of common right neighbors of a
    /// pair of left vertices in class `l`, for `l = 0..=r`.
    pub w_values: Vec<Count>,
}

/// Lower and upper bounds on the count of non-isolated right vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundPair {
    /// Exact rational lower bound (not floored; callers may take ceilings).
    pub lower: BigRational,
    /// Exact integer upper bound `|V| * degree`.
    pub upper: Count,
}

/// A single violated profile invariant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProfileViolation {
    /// `class_sizes` or `w_values` does not have `magnitude + 1` entries.
    ArrayLength { field: &'static str, expected: usize, actual: usize },
    /// The left vertex set is empty.
    EmptyVertexSet,
    /// The class sizes do not sum to `|V|^2`.
    ClassSizeSum { expected: Count, actual: Count },
    /// `|alpha^{-1}(r)| < |V|`: the diagonal pairs alone already fill class r.
    DiagonalClassTooSmall { class_size: Count, v_size: Count },
}

impl fmt::Display for ProfileViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProfileViolation::ArrayLength { field, expected, actual } => {
                write!(f, "{field} has {actual} entries, expected {expected}")
            }
            ProfileViolation::EmptyVertexSet => write!(f, "left vertex set is empty"),
            ProfileViolation::ClassSizeSum { expected, actual } => {
                write!(f, "class-size sum is {actual}, expected |V|^2 = {expected}")
            }
            ProfileViolation::DiagonalClassTooSmall { class_size, v_size } => {
                write!(
                    f,
                    "class {class_size} at top magnitude is smaller than |V| = {v_size}"
                )
            }
        }
    }
}

/// Outcome of validating a profile. Validation never aborts: all violations
/// are collected, and the separate `lower_bound_applicable` flag records
/// whether the lower bound's hypothesis `W_r > 0` holds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<ProfileViolation>,
    /// False iff `W_r = 0`, which makes the lower bound inapplicable.
    pub lower_bound_applicable: bool,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Check the structural invariants of an association profile.
pub fn validate_profile(profile: &AssociationProfile) -> ValidationReport {
    let mut violations = Vec::new();
    let want = profile.magnitude + 1;
    if profile.class_sizes.len() != want {
        violations.push(ProfileViolation::ArrayLength {
            field: "class_sizes",
            expected: want,
            actual: profile.class_sizes.len(),
        });
    }
    if profile.w_values.len() != want {
        violations.push(ProfileViolation::ArrayLength {
            field: "w_values",
            expected: want,
            actual: profile.w_values.len(),
        });
    }
    if profile.v_size.is_zero() {
        violations.push(ProfileViolation::EmptyVertexSet);
    }
    if profile.class_sizes.len() == want {
        let sum: Count = profile.class_sizes.iter().sum();
        let expected = &profile.v_size * &profile.v_size;
        if sum != expected {
            violations.push(ProfileViolation::ClassSizeSum {
                expected,
                actual: sum,
            });
        }
        if let Some(top) = profile.class_sizes.last() {
            // alpha(X, X) = r for every X, so class r holds all diagonal pairs.
            if *top < profile.v_size {
                violations.push(ProfileViolation::DiagonalClassTooSmall {
                    class_size: top.clone(),
                    v_size: profile.v_size.clone(),
                });
            }
        }
    }
    let lower_bound_applicable = profile
        .w_values
        .last()
        .map(|w| !w.is_zero())
        .unwrap_or(false);
    ValidationReport {
        violations,
        lower_bound_applicable,
    }
}

/// Upper bound `|V| * degree` on the number of non-isolated right vertices
/// of a left-regular bipartite graph. The degree must be positive.
pub fn upper_bound_nonisolated(v_size: &Count, degree: &Count) -> Result<Count> {
    if degree.is_zero() {
        return Err(Error::ZeroDegree);
    }
    Ok(v_size * degree)
}

/// Lower bound `W_r^2 |V|^2 / sum_l W_l |alpha^{-1}(l)|` on the number of
/// non-isolated right vertices of an association-regular bipartite graph.
///
/// The profile must be valid and have `W_r > 0`. The result is an exact
/// rational; the true count is an integer at least this large.
pub fn lower_bound_nonisolated(profile: &AssociationProfile) -> Result<BigRational> {
    let report = validate_profile(profile);
    if !report.is_valid() {
        let text = report
            .violations
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join("; ");
        return Err(Error::InvalidProfile(text));
    }
    if !report.lower_bound_applicable {
        return Err(Error::LowerBoundInapplicable);
    }
    let w_top = profile.w_values.last().expect("validated length");
    let v = &profile.v_size;
    let numerator = w_top * w_top * v * v;
    let denominator: Count = profile
        .w_values
        .iter()
        .zip(&profile.class_sizes)
        .map(|(w, c)| w * c)
        .sum();
    // W_r > 0 and class r >= |V| >= 1, so the denominator is positive.
    Ok(BigRational::new(
        numerator.into(),
        denominator.into(),
    ))
}

/// Both bounds at once for an association-regular graph. Its left degree is
/// the top co-neighborhood count `W_r`.
pub fn nonisolated_bounds(profile: &AssociationProfile) -> Result<BoundPair> {
    let lower = lower_bound_nonisolated(profile)?;
    let degree = profile.w_values.last().expect("validated length");
    let upper = upper_bound_nonisolated(&profile.v_size, degree)?;
    Ok(BoundPair { lower, upper })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::{BigInt, BigUint};
    use proptest::prelude::*;

    fn c(v: u64) -> Count {
        BigUint::from(v)
    }

    fn ratio(n: u64, d: u64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn degenerate_single_class_profile() {
        // r = 0: every pair is in class 0 and the bound collapses to W_0.
        let p = AssociationProfile {
            magnitude: 0,
            v_size: c(7),
            class_sizes: vec![c(49)],
            w_values: vec![c(5)],
        };
        assert!(validate_profile(&p).is_valid());
        assert_eq!(lower_bound_nonisolated(&p).unwrap(), ratio(5, 1));
    }

    #[test]
    fn hamming_toy_profile_bound() {
        // Pair graph of F_2^3 with d = 2, S = 3: |V| = 12, W = [0, 1, 6],
        // classes [84, 48, 12]. Lower bound 36*144/120 = 43.2.
        let p = AssociationProfile {
            magnitude: 2,
            v_size: c(12),
            class_sizes: vec![c(84), c(48), c(12)],
            w_values: vec![c(0), c(1), c(6)],
        };
        assert!(validate_profile(&p).is_valid());
        assert_eq!(lower_bound_nonisolated(&p).unwrap(), ratio(216, 5));
        let pair = nonisolated_bounds(&p).unwrap();
        assert_eq!(pair.upper, c(72));
        assert!(pair.lower <= ratio(72, 1));
    }

    #[test]
    fn upper_bound_is_plain_product() {
        assert_eq!(upper_bound_nonisolated(&c(3), &c(2)).unwrap(), c(6));
        assert_eq!(upper_bound_nonisolated(&c(12), &c(6)).unwrap(), c(72));
        assert_eq!(
            upper_bound_nonisolated(&c(3), &c(0)),
            Err(Error::ZeroDegree)
        );
    }

    #[test]
    fn validation_catches_bad_sums_and_flags_zero_w() {
        let p = AssociationProfile {
            magnitude: 1,
            v_size: c(3),
            class_sizes: vec![c(2), c(3)],
            w_values: vec![c(1), c(0)],
        };
        let report = validate_profile(&p);
        assert!(!report.is_valid());
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, ProfileViolation::ClassSizeSum { .. })));
        assert!(!report.lower_bound_applicable);
        assert_eq!(
            lower_bound_nonisolated(&p),
            Err(Error::InvalidProfile(
                report
                    .violations
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join("; ")
            ))
        );
    }

    #[test]
    fn zero_top_w_is_rejected_for_lower_bound() {
        let p = AssociationProfile {
            magnitude: 1,
            v_size: c(2),
            class_sizes: vec![c(2), c(2)],
            w_values: vec![c(3), c(0)],
        };
        let report = validate_profile(&p);
        assert!(report.is_valid());
        assert!(!report.lower_bound_applicable);
        assert_eq!(
            lower_bound_nonisolated(&p),
            Err(Error::LowerBoundInapplicable)
        );
    }

    #[test]
    fn diagonal_class_must_cover_v() {
        let p = AssociationProfile {
            magnitude: 1,
            v_size: c(4),
            class_sizes: vec![c(13), c(3)],
            w_values: vec![c(1), c(1)],
        };
        let report = validate_profile(&p);
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, ProfileViolation::DiagonalClassTooSmall { .. })));
    }

    // Random valid profiles for the property checks below.
    fn arb_profile() -> impl Strategy<Value = AssociationProfile> {
        (1usize..4, 2u64..24, proptest::collection::vec(0u64..40, 4), 1u64..40)
            .prop_map(|(r, v, raw, w_top)| {
                let total = v * v;
                let mut class_sizes = vec![0u64; r + 1];
                class_sizes[r] = v;
                let mut rest = total - v;
                for l in 1..=r {
                    let take = raw[l - 1].min(rest);
                    class_sizes[l - 1] = take;
                    rest -= take;
                }
                class_sizes[0] += rest;
                let mut w_values: Vec<Count> =
                    raw.iter().take(r).map(|&x| c(x)).collect();
                w_values.push(c(w_top));
                AssociationProfile {
                    magnitude: r,
                    v_size: c(v),
                    class_sizes: class_sizes.into_iter().map(c).collect(),
                    w_values,
                }
            })
    }

    proptest! {
        #[test]
        fn lower_never_exceeds_upper(p in arb_profile()) {
            prop_assert!(validate_profile(&p).is_valid());
            let pair = nonisolated_bounds(&p).unwrap();
            let upper = BigRational::from_integer(BigInt::from(pair.upper.clone()));
            prop_assert!(pair.lower <= upper);
        }

        #[test]
        fn lower_bound_is_homogeneous_in_w(p in arb_profile(), scale in 1u64..20) {
            let base = lower_bound_nonisolated(&p).unwrap();
            let scaled_profile = AssociationProfile {
                w_values: p.w_values.iter().map(|w| w * c(scale)).collect(),
                ..p
            };
            let scaled = lower_bound_nonisolated(&scaled_profile).unwrap();
            let factor = BigRational::from_integer(BigInt::from(scale));
            prop_assert_eq!(scaled, base * factor);
        }
    }
}
