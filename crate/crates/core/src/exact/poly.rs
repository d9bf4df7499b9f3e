//! Dense univariate polynomials with rational coefficients.
//!
//! Coefficients are stored lowest degree first with no trailing zeros, so the
//! zero polynomial is the empty list.  On top of the ring operations this
//! module provides the real-root machinery the threshold formulas need:
//! Sturm chains, a Cauchy root bound, and bisection-based isolation of the
//! positive real roots into arbitrarily narrow rational brackets.  Everything
//! is exact; no floating point is involved anywhere.

use super::{int, rat, to_rat, Int, Rat, Sign};
use crate::error::{Error, Result};
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalPoly {
    coeffs: Vec<Rat>,
}

impl RationalPoly {
    /// Builds a polynomial from coefficients listed lowest degree first.
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        RationalPoly { coeffs }
    }

    pub fn zero() -> Self {
        RationalPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rat) -> Self {
        RationalPoly::new(vec![c])
    }

    /// Convenience constructor from integer coefficients, lowest degree first.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        RationalPoly::new(coeffs.iter().map(|&c| rat(c, 1)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    /// Coefficient of x^k (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_int(&self, x: &Int) -> Rat {
        self.eval(&to_rat(x))
    }

    pub fn is_root(&self, x: &Rat) -> bool {
        self.eval(x).is_zero()
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * to_rat(&int(k as i64)))
            .collect();
        RationalPoly::new(coeffs)
    }

    pub fn scale(&self, factor: &Rat) -> Self {
        RationalPoly::new(self.coeffs.iter().map(|c| c * factor).collect())
    }

    /// The composition self(a·x + b).
    pub fn compose_linear(&self, a: &Rat, b: &Rat) -> Self {
        let inner = RationalPoly::new(vec![b.clone(), a.clone()]);
        let mut acc = RationalPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &inner) + &RationalPoly::constant(c.clone());
        }
        acc
    }

    /// Euclidean division: returns (quotient, remainder) with
    /// `self = quotient·divisor + remainder` and deg r < deg divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let dlead = divisor.leading_coeff().unwrap().clone();
        let ddeg = divisor.degree().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rat::zero(); self.coeffs.len().saturating_sub(ddeg)];
        while rem.len() > ddeg {
            let factor = rem.last().unwrap() / &dlead;
            let shift = rem.len() - 1 - ddeg;
            quot[shift] = factor.clone();
            for (k, dc) in divisor.coeffs.iter().enumerate() {
                let v = &rem[shift + k] - dc * &factor;
                rem[shift + k] = v;
            }
            // The leading term cancels by construction, so this always pops.
            while rem.last().map_or(false, |c| c.is_zero()) {
                rem.pop();
            }
        }
        (RationalPoly::new(quot), RationalPoly::new(rem))
    }

    /// Monic greatest common divisor via the Euclidean algorithm.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        match a.leading_coeff() {
            Some(lead) => {
                let inv = Rat::one() / lead.clone();
                a.scale(&inv)
            }
            None => a,
        }
    }

    /// The square-free part self / gcd(self, self'), monic up to the sign of
    /// the original leading coefficient.
    pub fn square_free(&self) -> Self {
        if self.degree().map_or(true, |d| d == 0) {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        let (q, r) = self.div_rem(&g);
        debug_assert!(r.is_zero(), "gcd must divide the polynomial exactly");
        q
    }

    /// A strict upper bound on the absolute value of every real root:
    /// 1 + max |c_k / c_lead|.
    pub fn cauchy_root_bound(&self) -> Rat {
        let lead = self
            .leading_coeff()
            .expect("root bound of the zero polynomial")
            .clone();
        let mut top = Rat::zero();
        for c in &self.coeffs[..self.coeffs.len() - 1] {
            let ratio = (c / &lead).abs();
            if ratio > top {
                top = ratio;
            }
        }
        Rat::one() + top
    }

    /// The Sturm chain p, p', then negated remainders until zero.
    pub fn sturm_chain(&self) -> Vec<Self> {
        let mut chain = vec![self.clone(), self.derivative()];
        loop {
            let n = chain.len();
            if chain[n - 1].is_zero() {
                chain.pop();
                return chain;
            }
            let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
            chain.push(-&r);
        }
    }

    /// Isolates every positive real root of `self` into disjoint open
    /// brackets (lo, hi) of width at most `precision`, each containing
    /// exactly one root and with non-root rational endpoints.  Roots are
    /// counted without multiplicity; brackets come back sorted.
    pub fn isolate_positive_roots(&self, precision: &Rat) -> Result<Vec<(Rat, Rat)>> {
        if self.is_zero() {
            return Err(Error::Domain(
                "cannot isolate roots of the zero polynomial".into(),
            ));
        }
        if !precision.is_positive() {
            return Err(Error::Domain(format!(
                "precision must be positive, got {precision}"
            )));
        }
        let mut f = self.square_free();
        // Strip the root at zero if present; only strictly positive roots
        // are wanted and a zero constant term would sit on our left endpoint.
        while !f.is_zero() && f.coeff(0).is_zero() {
            let (q, r) = f.div_rem(&RationalPoly::from_ints(&[0, 1]));
            debug_assert!(r.is_zero());
            f = q;
        }
        if f.degree().map_or(true, |d| d == 0) {
            return Ok(Vec::new());
        }

        let chain = f.sturm_chain();
        let lo = Rat::zero();
        let hi = f.cauchy_root_bound();
        // Both endpoints are non-roots: zero was stripped and the Cauchy
        // bound is strict, so Sturm's theorem counts the roots in (lo, hi).
        let total = count_roots(&chain, &lo, &hi);
        let mut queue = vec![(lo, hi, total)];
        let mut brackets = Vec::new();
        while let Some((lo, hi, count)) = queue.pop() {
            if count == 0 {
                continue;
            }
            if count == 1 && &hi - &lo <= *precision {
                brackets.push((lo, hi));
                continue;
            }
            let mid = split_point(&f, &lo, &hi);
            let left = count_roots(&chain, &lo, &mid);
            queue.push((mid.clone(), hi, count - left));
            queue.push((lo, mid, left));
        }
        brackets.sort_by(|a, b| a.0.cmp(&b.0));
        Ok(brackets)
    }
}

/// Number of distinct real roots in the open interval (lo, hi); both
/// endpoints must be non-roots of the chain's first polynomial.
fn count_roots(chain: &[RationalPoly], lo: &Rat, hi: &Rat) -> usize {
    sign_variations(chain, lo) - sign_variations(chain, hi)
}

fn sign_variations(chain: &[RationalPoly], x: &Rat) -> usize {
    let mut variations = 0;
    let mut last = Sign::Zero;
    for p in chain {
        let s = Sign::of_rat(&p.eval(x));
        if s == Sign::Zero {
            continue;
        }
        if last != Sign::Zero && s != last {
            variations += 1;
        }
        last = s;
    }
    variations
}

/// Picks an interior point of (lo, hi) that is not a root of f, trying the
/// midpoint first and then other simple fractions of the interval.
fn split_point(f: &RationalPoly, lo: &Rat, hi: &Rat) -> Rat {
    let width = hi - lo;
    for denom in 2i64.. {
        for numer in 1..denom {
            let candidate = lo + &width * rat(numer, denom);
            if !f.is_root(&candidate) {
                return candidate;
            }
        }
    }
    unreachable!("a polynomial has finitely many roots")
}

impl Add for &RationalPoly {
    type Output = RationalPoly;
    fn add(self, rhs: &RationalPoly) -> RationalPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        RationalPoly::new(coeffs)
    }
}

impl Sub for &RationalPoly {
    type Output = RationalPoly;
    fn sub(self, rhs: &RationalPoly) -> RationalPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect();
        RationalPoly::new(coeffs)
    }
}

impl Mul for &RationalPoly {
    type Output = RationalPoly;
    fn mul(self, rhs: &RationalPoly) -> RationalPoly {
        if self.is_zero() || rhs.is_zero() {
            return RationalPoly::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let v = &coeffs[i + j] + a * b;
                coeffs[i + j] = v;
            }
        }
        RationalPoly::new(coeffs)
    }
}

impl Neg for &RationalPoly {
    type Output = RationalPoly;
    fn neg(self) -> RationalPoly {
        RationalPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for RationalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if first {
                write!(f, "{c}")?;
                first = false;
            } else if c.is_negative() {
                write!(f, " - {}", -c)?;
            } else {
                write!(f, " + {c}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "·x")?,
                _ => write!(f, "·x^{k}")?,
            }
        }
        Ok(())
    }
}
