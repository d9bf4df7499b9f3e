//! Cubic polynomials and isolation of their positive real roots.
//!
//! Thin shell over [`RationalPoly`]: the discriminant-per-degree curves the
//! threshold analysis studies are cubics, and callers want the roots bracketed
//! without committing to how many there are.  The count comes out of the exact
//! Sturm analysis rather than being assumed.

use super::poly::RationalPoly;
use super::Rat;
use crate::error::{Error, Result};
use num_traits::Zero;

/// A cubic c3·x³ + c2·x² + c1·x + c0 with c3 ≠ 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalCubic {
    poly: RationalPoly,
}

impl RationalCubic {
    /// Coefficients are given highest degree first, matching the way the
    /// curve is usually written out.
    pub fn new(c3: Rat, c2: Rat, c1: Rat, c0: Rat) -> Result<Self> {
        if c3.is_zero() {
            return Err(Error::Domain(
                "leading coefficient of a cubic must be nonzero".into(),
            ));
        }
        Ok(RationalCubic {
            poly: RationalPoly::new(vec![c0, c1, c2, c3]),
        })
    }

    pub fn poly(&self) -> &RationalPoly {
        &self.poly
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        self.poly.eval(x)
    }

    pub fn is_root(&self, x: &Rat) -> bool {
        self.poly.is_root(x)
    }
}

/// Brackets every positive real root of the cubic in disjoint open intervals
/// of width at most `precision`, one root per interval, sorted ascending.
pub fn isolate_positive_roots(c: &RationalCubic, precision: &Rat) -> Result<Vec<(Rat, Rat)>> {
    c.poly.isolate_positive_roots(precision)
}
