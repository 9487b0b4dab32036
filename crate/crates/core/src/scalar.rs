//! Scalar abstraction shared by the clustering metrics and the hull oracle.
//!
//! Clustering coefficients are ratios of small integers, so every scalar only
//! has to be constructible from such a ratio. The hull oracle additionally
//! needs exact zero tests and a total order, which only the rational types
//! provide ([`ExactScalar`]).

use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{Num, Signed, ToPrimitive};

pub trait Scalar: Num + Clone + PartialOrd + Debug {
    /// `num / den`; `den` must be nonzero.
    fn from_ratio(num: u64, den: u64) -> Self;

    fn from_i64(value: i64) -> Self;

    fn to_f64(&self) -> f64;
}

/// Scalars with exact arithmetic: equality is decidable and the order is total.
pub trait ExactScalar: Scalar + Ord + Signed {}

macro_rules! impl_float_scalar {
    ($($t:ty),*) => {$(
        impl Scalar for $t {
            fn from_ratio(num: u64, den: u64) -> Self {
                num as $t / den as $t
            }

            fn from_i64(value: i64) -> Self {
                value as $t
            }

            fn to_f64(&self) -> f64 {
                *self as f64
            }
        }
    )*};
}

impl_float_scalar!(f32, f64);

impl Scalar for Ratio<i64> {
    fn from_ratio(num: u64, den: u64) -> Self {
        let num = i64::try_from(num).expect("numerator exceeds i64");
        let den = i64::try_from(den).expect("denominator exceeds i64");
        Ratio::new(num, den)
    }

    fn from_i64(value: i64) -> Self {
        Ratio::from_integer(value)
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

impl Scalar for Ratio<BigInt> {
    fn from_ratio(num: u64, den: u64) -> Self {
        Ratio::new(BigInt::from(num), BigInt::from(den))
    }

    fn from_i64(value: i64) -> Self {
        Ratio::from_integer(BigInt::from(value))
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

impl ExactScalar for Ratio<i64> {}
impl ExactScalar for Ratio<BigInt> {}

/// Renders an exact rational as a decimal with `digits` fractional digits,
/// rounding half away from zero.
pub fn render_decimal(value: &Ratio<BigInt>, digits: u32) -> String {
    use num_integer::Integer;
    use num_traits::{Signed, Zero};

    let negative = value.is_negative();
    let scale = BigInt::from(10u32).pow(digits);
    let scaled = value.abs() * Ratio::from_integer(scale.clone());
    let (q, r) = scaled.numer().div_rem(scaled.denom());
    let rounded = if r.clone() * 2u32 >= *scaled.denom() {
        q + 1u32
    } else {
        q
    };
    let (int_part, frac_part) = rounded.div_rem(&scale);
    let sign = if negative && !(int_part.is_zero() && frac_part.is_zero()) {
        "-"
    } else {
        ""
    };
    if digits == 0 {
        format!("{sign}{int_part}")
    } else {
        format!(
            "{sign}{int_part}.{frac_part:0>width$}",
            width = digits as usize
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ratio_construction_reduces() {
        let r = <Ratio<i64> as Scalar>::from_ratio(2, 6);
        assert_eq!(r, Ratio::new(1, 3));
        assert_eq!(<f64 as Scalar>::from_ratio(1, 4), 0.25);
    }

    #[test]
    fn decimal_rendering() {
        let third = Ratio::new(BigInt::from(1), BigInt::from(3));
        assert_eq!(render_decimal(&third, 6), "0.333333");
        let two_thirds = Ratio::new(BigInt::from(2), BigInt::from(3));
        assert_eq!(render_decimal(&two_thirds, 6), "0.666667");
        assert_eq!(
            render_decimal(&Ratio::from_integer(BigInt::from(1)), 3),
            "1.000"
        );
        assert_eq!(
            render_decimal(&Ratio::new(BigInt::from(7), BigInt::from(12)), 0),
            "1"
        );
        assert_eq!(
            render_decimal(&Ratio::new(BigInt::from(-1), BigInt::from(8)), 2),
            "-0.13"
        );
    }
}
