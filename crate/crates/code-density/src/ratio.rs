//! Small conversion helpers between counts and exact rationals.

use num::{BigInt, BigRational, BigUint};

pub(crate) fn rat_u(x: &BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from(x.clone()))
}

pub(crate) fn rat_i(x: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(x.into())
}

#[cfg(test)]
pub(crate) fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}
