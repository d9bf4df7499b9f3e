//! Integer intervals of certified non-gap genera.
//!
//! Level n of the polarization contributes the interval
//! [p(d,e,n-1), p(d,e,n)]: every genus in it occurs for a nodal curve at that
//! level.  Consecutive intervals share an endpoint exactly, so from the
//! threshold level on their union is one unbroken run of genera.  The
//! coverage certificate records a finite verified prefix of that chain
//! together with the shared-endpoint equalities that extend it.

use crate::error::{Error, Result};
use crate::exact::{int, Int};
use crate::surface::PolarizedSurface;
use num_traits::Signed;
use std::fmt;

/// An inclusive interval [lo, hi] of genus values, 0 <= lo <= hi.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct GenusInterval {
    lo: Int,
    hi: Int,
}

impl GenusInterval {
    pub fn new(lo: Int, hi: Int) -> Result<Self> {
        if lo.is_negative() {
            return Err(Error::Domain(format!(
                "genus interval endpoints must be non-negative, got lo = {lo}"
            )));
        }
        if lo > hi {
            return Err(Error::Domain(format!(
                "inverted genus interval [{lo}, {hi}]"
            )));
        }
        Ok(GenusInterval { lo, hi })
    }

    pub fn from_i64(lo: i64, hi: i64) -> Result<Self> {
        GenusInterval::new(int(lo), int(hi))
    }

    pub fn lo(&self) -> &Int {
        &self.lo
    }

    pub fn hi(&self) -> &Int {
        &self.hi
    }

    pub fn contains(&self, g: &Int) -> bool {
        &self.lo <= g && g <= &self.hi
    }

    /// Number of integers in the interval (at least 1 by construction).
    pub fn len(&self) -> Int {
        &self.hi - &self.lo + int(1)
    }
}

impl fmt::Display for GenusInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// The non-gap interval contributed by level n: [p(d,e,n-1), p(d,e,n)].
pub fn interval_for(s: &PolarizedSurface, n: &Int) -> Result<GenusInterval> {
    if !n.is_positive() {
        return Err(Error::Precondition(format!(
            "level intervals start at n = 1, got {n}"
        )));
    }
    let lo = s.arithmetic_genus(&(n - int(1)))?;
    let hi = s.arithmetic_genus(n)?;
    GenusInterval::new(lo, hi)
}

/// Collapses a list of intervals to sorted, maximal, pairwise disjoint ones
/// covering the same set of integers; adjacent intervals fuse ([0,5] and
/// [6,9] become [0,9]).
pub fn merge(intervals: &[GenusInterval]) -> Vec<GenusInterval> {
    let mut sorted = intervals.to_vec();
    sorted.sort();
    let mut merged: Vec<GenusInterval> = Vec::new();
    for iv in sorted {
        match merged.last_mut() {
            Some(last) if iv.lo <= &last.hi + int(1) => {
                if iv.hi > last.hi {
                    last.hi = iv.hi;
                }
            }
            _ => merged.push(iv),
        }
    }
    merged
}

/// A verified prefix of the non-gap chain for one surface.
#[derive(Debug, Clone)]
pub struct CoverageCertificate {
    pub surface: PolarizedSurface,
    /// First certified level (the threshold level n0).
    pub start_n: Int,
    /// One interval per level from start_n through verified_up_to.
    pub intervals: Vec<GenusInterval>,
    /// The genus bound phi = min of the first interval.
    pub threshold: Int,
    pub verified_up_to: Int,
}

/// Builds the level intervals from the surface's threshold level up to
/// `horizon` and verifies that each consecutive pair shares an endpoint
/// exactly, which is what lets the chain continue indefinitely.
pub fn certify_coverage(s: &PolarizedSurface, horizon: &Int) -> Result<CoverageCertificate> {
    let profile = s.bound_profile()?;
    let start_n = profile.n0_star.clone();
    if horizon < &start_n {
        return Err(Error::Precondition(format!(
            "horizon {horizon} is below the threshold level {start_n}"
        )));
    }
    let mut intervals: Vec<GenusInterval> = Vec::new();
    let mut n = start_n.clone();
    while &n <= horizon {
        let iv = interval_for(s, &n).map_err(|err| match err {
            Error::Domain(msg) => Error::Certification {
                n: n.clone(),
                reason: msg,
            },
            other => other,
        })?;
        if let Some(prev) = intervals.last() {
            if prev.hi != iv.lo {
                return Err(Error::Certification {
                    n: n.clone(),
                    reason: format!("interval {iv} does not continue {prev}: endpoints differ"),
                });
            }
        }
        intervals.push(iv);
        n += 1;
    }
    let threshold = intervals[0].lo.clone();
    if threshold != profile.phi {
        return Err(Error::Certification {
            n: start_n,
            reason: format!(
                "chain starts at {threshold} but the profile promises phi = {}",
                profile.phi
            ),
        });
    }
    Ok(CoverageCertificate {
        surface: s.clone(),
        start_n,
        intervals,
        threshold,
        verified_up_to: horizon.clone(),
    })
}
