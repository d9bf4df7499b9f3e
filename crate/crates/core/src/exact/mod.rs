//! Exact integer and rational primitives.
//!
//! Every ceiling, floor, sign and root bracket produced by this crate is
//! decided here, by integer arithmetic alone.  Floating point appears only
//! in display helpers, never in a certified value.

pub mod cubic;
pub mod poly;
pub mod quadratic;

pub use cubic::{isolate_positive_roots, RationalCubic};
pub use poly::RationalPoly;
pub use quadratic::{ceil_quadratic, floor_quadratic, QuadraticExpr};

use crate::error::{Error, Result};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision integer used throughout the crate.
pub type Int = num_bigint::BigInt;

/// Arbitrary-precision rational, always reduced with positive denominator.
pub type Rat = num_rational::BigRational;

/// Shorthand for `Int::from`.
pub fn int(v: i64) -> Int {
    Int::from(v)
}

/// Shorthand for building a rational from machine integers.
///
/// Panics if `denom == 0`; intended for literals in code and tests.
pub fn rat(numer: i64, denom: i64) -> Rat {
    Rat::new(int(numer), int(denom))
}

/// Embeds an integer into the rationals.
pub fn to_rat(v: &Int) -> Rat {
    Rat::from(v.clone())
}

/// Floor of the square root of a non-negative integer.
///
/// Returns `r` with `r^2 <= n < (r+1)^2`; negative input is a domain error.
pub fn isqrt(n: &Int) -> Result<Int> {
    if n.is_negative() {
        return Err(Error::Domain(format!("isqrt of negative integer {n}")));
    }
    Ok(n.sqrt())
}

/// Halves an integer known to be even; oddness means the caller fed
/// inconsistent data (a parity violation) and is reported as such.
pub(crate) fn exact_half(v: Int) -> Result<Int> {
    if v.is_even() {
        Ok(v / int(2))
    } else {
        Err(Error::Integrity(format!(
            "{v} is odd where an even value is forced"
        )))
    }
}

/// Sign of an exact integer value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of(v: &Int) -> Sign {
        if v.is_negative() {
            Sign::Negative
        } else if v.is_zero() {
            Sign::Zero
        } else {
            Sign::Positive
        }
    }

    /// Sign of a rational (the denominator is always positive).
    pub fn of_rat(v: &Rat) -> Sign {
        Sign::of(v.numer())
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Sign::Negative => "-",
            Sign::Zero => "0",
            Sign::Positive => "+",
        }
    }
}

/// Renders a rational as a fixed-point decimal string, rounding to nearest
/// (ties away from zero).  Used for display; never fed back into arithmetic.
pub fn decimal_string(x: &Rat, places: u32) -> String {
    let mut scale = Int::one();
    for _ in 0..places {
        scale *= int(10);
    }
    let scaled = x * to_rat(&scale);
    let half = rat(1, 2);
    let rounded: Int = if scaled.is_negative() {
        -(((-scaled) + half).floor().to_integer())
    } else {
        (scaled + half).floor().to_integer()
    };
    let neg = rounded.is_negative();
    let abs = rounded.abs();
    if places == 0 {
        return format!("{}{}", if neg { "-" } else { "" }, abs);
    }
    let (q, r) = abs.div_rem(&scale);
    format!(
        "{}{}.{:0>width$}",
        if neg { "-" } else { "" },
        q,
        r.to_string(),
        width = places as usize
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn isqrt_small_values() {
        assert_eq!(isqrt(&int(0)).unwrap(), int(0));
        assert_eq!(isqrt(&int(1)).unwrap(), int(1));
        assert_eq!(isqrt(&int(3)).unwrap(), int(1));
        assert_eq!(isqrt(&int(4)).unwrap(), int(2));
        assert_eq!(isqrt(&int(465)).unwrap(), int(21));
    }

    #[test]
    fn isqrt_rejects_negative() {
        assert!(matches!(isqrt(&int(-1)), Err(Error::Domain(_))));
    }

    #[test]
    fn isqrt_bracket_property() {
        // 10^4 deterministic samples of r^2 <= n < (r+1)^2.
        let mut x = int(12345);
        let modulus = Int::from(10u8).pow(30);
        for _ in 0..10_000 {
            x = (&x * int(1_103_515_245) + int(12_345)) % &modulus;
            let n = x.abs();
            let r = isqrt(&n).unwrap();
            assert!(&r * &r <= n);
            let r1 = &r + 1;
            assert!(&r1 * &r1 > n);
        }
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(decimal_string(&rat(1, 4), 2), "0.25");
        assert_eq!(decimal_string(&rat(-1, 3), 4), "-0.3333");
        assert_eq!(decimal_string(&rat(2, 1), 2), "2.00");
        assert_eq!(decimal_string(&rat(2875, 1000), 2), "2.88");
        assert_eq!(decimal_string(&rat(-1, 400), 2), "0.00");
        assert_eq!(decimal_string(&rat(199, 2), 0), "100");
    }

    #[test]
    fn sign_of() {
        assert_eq!(Sign::of(&int(-3)), Sign::Negative);
        assert_eq!(Sign::of(&int(0)), Sign::Zero);
        assert_eq!(Sign::of(&int(7)), Sign::Positive);
    }
}
