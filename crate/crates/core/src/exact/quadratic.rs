//! Values of the form `base + sqrt(radicand)` with exact ceiling and floor.
//!
//! The only irrationality the bound formulas ever produce is a single square
//! root added to a rational.  Ceilings and floors of such values are decided
//! without approximation: an integer `k` satisfies `k >= base + sqrt(r)`
//! iff `k - base >= 0` and `(k - base)^2 >= r`, and symmetrically for `<=`.

use super::{int, isqrt, to_rat, Int, Rat};
use crate::error::{Error, Result};
use num_traits::Signed;

/// `base + sqrt(radicand)` with `radicand >= 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticExpr {
    base: Rat,
    radicand: Rat,
}

impl QuadraticExpr {
    pub fn new(base: Rat, radicand: Rat) -> Result<Self> {
        if radicand.is_negative() {
            return Err(Error::Domain(format!(
                "negative radicand {radicand}: value is not real"
            )));
        }
        Ok(QuadraticExpr { base, radicand })
    }

    pub fn base(&self) -> &Rat {
        &self.base
    }

    pub fn radicand(&self) -> &Rat {
        &self.radicand
    }

    /// Exact test of `k >= base + sqrt(radicand)`.
    fn int_geq(&self, k: &Int) -> bool {
        let t = to_rat(k) - &self.base;
        if t.is_negative() {
            return false;
        }
        &t * &t >= self.radicand
    }

    /// Exact test of `k <= base + sqrt(radicand)`.
    fn int_leq(&self, k: &Int) -> bool {
        let t = to_rat(k) - &self.base;
        if !t.is_positive() {
            return true;
        }
        &t * &t <= self.radicand
    }

    /// Rational lower bound `a/q <= sqrt(radicand) < (a+1)/q`.
    fn sqrt_lower_bound(&self) -> Rat {
        let p = self.radicand.numer();
        let q = self.radicand.denom();
        let a = isqrt(&(p * q)).expect("radicand is non-negative");
        Rat::new(a, q.clone())
    }

    /// Least integer `>= base + sqrt(radicand)`, computed exactly.
    pub fn ceil(&self) -> Int {
        let lo = self.sqrt_lower_bound();
        // The value lies in [base + lo, base + lo + 1), so its ceiling is
        // c or c + 1 for c = ceil(base + lo).
        let c = (&self.base + lo).ceil().to_integer();
        for off in 0..=2 {
            let k = &c + int(off);
            if self.int_geq(&k) {
                debug_assert!(off < 2, "candidate window missed the ceiling");
                return k;
            }
        }
        unreachable!("ceiling must occur within the candidate window")
    }

    /// Greatest integer `<= base + sqrt(radicand)`, computed exactly.
    pub fn floor(&self) -> Int {
        let lo = self.sqrt_lower_bound();
        let f = (&self.base + lo).floor().to_integer();
        for off in (0..=2).rev() {
            let k = &f + int(off);
            if self.int_leq(&k) {
                debug_assert!(off > 0 || !self.int_leq(&(&f + int(1))));
                return k;
            }
        }
        unreachable!("floor must occur within the candidate window")
    }
}

/// Convenience wrapper: exact ceiling of `base + sqrt(radicand)`.
pub fn ceil_quadratic(base: Rat, radicand: Rat) -> Result<Int> {
    Ok(QuadraticExpr::new(base, radicand)?.ceil())
}

/// Convenience wrapper: exact floor of `base + sqrt(radicand)`.
pub fn floor_quadratic(base: Rat, radicand: Rat) -> Result<Int> {
    Ok(QuadraticExpr::new(base, radicand)?.floor())
}
