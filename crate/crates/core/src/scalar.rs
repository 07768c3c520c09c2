//! Coordinate scalars for geometric representations and threshold weights.
//!
//! Representations are generic over [`Scalar`]; exact rationals are the
//! default (see the aliases at the crate root), `f64`/`f32` work as well.

use std::fmt::{Debug, Display};

use num_rational::Ratio;
use num_traits::{Num, ToPrimitive};

pub type Rational = Ratio<i64>;

pub trait Scalar: Num + PartialOrd + Copy + Debug + Display + Send + Sync + 'static {
    /// Parses a decimal string such as `-1.25`; rationals also accept `p/q`.
    fn parse_decimal(s: &str) -> Option<Self>;

    /// Formats the value so that `parse_decimal` recovers it exactly.
    fn to_decimal(&self) -> String;

    fn to_f64(&self) -> f64;
}

macro_rules! float_scalar {
    ($($t:ty)*) => {$(
        impl Scalar for $t {
            fn parse_decimal(s: &str) -> Option<Self> {
                s.trim().parse().ok()
            }

            fn to_decimal(&self) -> String {
                format!("{}", self)
            }

            fn to_f64(&self) -> f64 {
                *self as f64
            }
        }
    )*};
}

float_scalar!(f32 f64);

impl Scalar for Rational {
    fn parse_decimal(s: &str) -> Option<Self> {
        let s = s.trim();
        if let Some((p, q)) = s.split_once('/') {
            let q: i64 = q.trim().parse().ok()?;
            if q == 0 {
                return None;
            }
            return Some(Ratio::new(p.trim().parse().ok()?, q));
        }
        let (neg, body) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s.strip_prefix('+').unwrap_or(s)),
        };
        let (int, frac) = body.split_once('.').unwrap_or((body, ""));
        if int.is_empty() && frac.is_empty() {
            return None;
        }
        if !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) || frac.len() > 17 {
            return None;
        }
        let digits = format!("{int}{frac}");
        let numer: i64 = if digits.is_empty() { 0 } else { digits.parse().ok()? };
        let denom = 10i64.checked_pow(frac.len() as u32)?;
        let r = Ratio::new(numer, denom);
        Some(if neg { -r } else { r })
    }

    fn to_decimal(&self) -> String {
        let mut denom = *self.denom();
        let (mut twos, mut fives) = (0u32, 0u32);
        while denom % 2 == 0 {
            denom /= 2;
            twos += 1;
        }
        while denom % 5 == 0 {
            denom /= 5;
            fives += 1;
        }
        if denom != 1 {
            return format!("{}/{}", self.numer(), self.denom());
        }
        let places = twos.max(fives);
        let scale = 10i128.pow(places);
        let scaled = *self.numer() as i128 * scale / *self.denom() as i128;
        if places == 0 {
            return scaled.to_string();
        }
        let sign = if scaled < 0 { "-" } else { "" };
        let abs = scaled.unsigned_abs();
        let int = abs / scale as u128;
        let frac = abs % scale as u128;
        format!("{sign}{int}.{frac:0width$}", width = places as usize)
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rational_decimals() {
        assert_eq!(Rational::parse_decimal("0.25"), Some(Ratio::new(1, 4)));
        assert_eq!(Rational::parse_decimal("-1.5"), Some(Ratio::new(-3, 2)));
        assert_eq!(Rational::parse_decimal("3"), Some(Ratio::from_integer(3)));
        assert_eq!(Rational::parse_decimal("1/3"), Some(Ratio::new(1, 3)));
        assert_eq!(Rational::parse_decimal("x"), None);
        assert_eq!(Rational::parse_decimal("."), None);
        assert_eq!(Ratio::new(1, 8).to_decimal(), "0.125");
        assert_eq!(Ratio::new(-3, 2).to_decimal(), "-1.5");
        assert_eq!(Ratio::new(1, 3).to_decimal(), "1/3");
        assert_eq!(Ratio::from_integer(7).to_decimal(), "7");
    }

    proptest! {
        #[test]
        fn rational_decimal_round_trip(p in -100_000i64..100_000, e2 in 0u32..6, e5 in 0u32..4, q3 in prop::bool::ANY) {
            let denom = 2i64.pow(e2) * 5i64.pow(e5) * if q3 { 3 } else { 1 };
            let r = Ratio::new(p, denom);
            prop_assert_eq!(Rational::parse_decimal(&r.to_decimal()), Some(r));
        }
    }
}
