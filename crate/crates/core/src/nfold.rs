//! Genus bounds for an n-dimensional polarized variety (X, L) from its
//! Hilbert data.
//!
//! The caller supplies two exact rational polynomials: P_can(m), the value of
//! h^0(omega_X tensor O(mL)) in the stable range, and P_lin(m), the value of
//! h^0(O(mL)) from a declared level on.  Everything here is arithmetic on
//! those polynomials: the genus sequence p_m, its steps delta_m, the
//! condition that each step fits inside the auxiliary linear system |nu L|
//! with nu = floor(m/n), a certificate that the condition holds for every m
//! beyond an exact root bound, and the minimal level m_XL from which it
//! never fails again, with the resulting genus bound p_XL = p_{m_XL - 1}.

use crate::error::{Error, Result};
use crate::exact::{int, rat, to_rat, Int, Rat, RationalPoly};
use crate::surface::PolarizedSurface;
use num_integer::Integer;
use num_traits::{One, Signed};

/// Exact Hilbert data for an n-dimensional polarized variety.
///
/// Both polynomials must have degree exactly `dim_n` with the same positive
/// leading coefficient (L^n / n! for both), and must take integer values at
/// every integer; the latter is proved by checking dim_n + 1 consecutive
/// values, which forces integrality everywhere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertData {
    dim_n: usize,
    p_can: RationalPoly,
    p_lin: RationalPoly,
    q: Int,
    pg: Int,
    plin_valid_from: Int,
}

impl HilbertData {
    pub fn new(
        dim_n: usize,
        p_can: RationalPoly,
        p_lin: RationalPoly,
        q: Int,
        pg: Int,
        plin_valid_from: Int,
    ) -> Result<Self> {
        if dim_n < 2 {
            return Err(Error::Domain(format!(
                "the ambient dimension must be at least 2, got {dim_n}"
            )));
        }
        if q.is_negative() || pg.is_negative() {
            return Err(Error::Domain(format!(
                "q and pg must be non-negative, got q = {q}, pg = {pg}"
            )));
        }
        if plin_valid_from < Int::one() {
            return Err(Error::Domain(format!(
                "the linear-system polynomial must be declared valid from some level >= 1, got {plin_valid_from}"
            )));
        }
        for (name, poly) in [("canonical", &p_can), ("linear-system", &p_lin)] {
            if poly.degree() != Some(dim_n) {
                return Err(Error::Domain(format!(
                    "the {name} polynomial must have degree {dim_n}, got degree {:?}",
                    poly.degree()
                )));
            }
        }
        let lead_can = p_can.leading_coeff().expect("degree checked above");
        let lead_lin = p_lin.leading_coeff().expect("degree checked above");
        if lead_can != lead_lin {
            return Err(Error::CertificationImpossible(format!(
                "leading coefficients must agree (both L^n/n!), got {lead_can} and {lead_lin}"
            )));
        }
        if !lead_can.is_positive() {
            return Err(Error::CertificationImpossible(format!(
                "the common leading coefficient must be positive, got {lead_can}"
            )));
        }
        // A degree-k polynomial that is integral at k+1 consecutive integers
        // is integral at every integer, so this window is a proof, not a
        // sample.
        for (name, poly) in [("canonical", &p_can), ("linear-system", &p_lin)] {
            for k in 1..=(dim_n as i64 + 1) {
                let v = poly.eval_int(&int(k));
                if !v.is_integer() {
                    return Err(Error::Integrity(format!(
                        "the {name} polynomial takes the non-integer value {v} at m = {k}"
                    )));
                }
            }
        }
        Ok(HilbertData {
            dim_n,
            p_can,
            p_lin,
            q,
            pg,
            plin_valid_from,
        })
    }

    /// Builds the dimension-2 data matching a polarized surface:
    /// P_can(m) = (d/2)m^2 + (e/2)m + (1 + pg - q) and
    /// P_lin(m) = (d/2)m^2 - (e/2)m + (1 + pg - q), valid from the
    /// surface's declared level n4.
    pub fn from_surface(s: &PolarizedSurface) -> Result<Self> {
        let half_d = to_rat(s.d()) / rat(2, 1);
        let half_e = to_rat(s.e()) / rat(2, 1);
        let c0 = Rat::one() + to_rat(s.p()) - to_rat(s.q());
        let p_can = RationalPoly::new(vec![c0.clone(), half_e.clone(), half_d.clone()]);
        let p_lin = RationalPoly::new(vec![c0, -half_e, half_d]);
        HilbertData::new(
            2,
            p_can,
            p_lin,
            s.q().clone(),
            s.p().clone(),
            s.n4().clone(),
        )
    }

    pub fn dim_n(&self) -> usize {
        self.dim_n
    }

    pub fn p_can(&self) -> &RationalPoly {
        &self.p_can
    }

    pub fn p_lin(&self) -> &RationalPoly {
        &self.p_lin
    }

    pub fn q(&self) -> &Int {
        &self.q
    }

    pub fn pg(&self) -> &Int {
        &self.pg
    }

    pub fn plin_valid_from(&self) -> &Int {
        &self.plin_valid_from
    }

    fn dim_int(&self) -> Int {
        int(self.dim_n as i64)
    }
}

/// The genus sequence p_m = P_can(m) + q - pg for m >= 1, asserted integral.
pub fn genus_pm(h: &HilbertData, m: &Int) -> Result<Int> {
    if m < &Int::one() {
        return Err(Error::Precondition(format!(
            "the genus sequence starts at m = 1, got {m}"
        )));
    }
    let value = h.p_can.eval_int(m) + to_rat(&(&h.q - &h.pg));
    if !value.is_integer() {
        return Err(Error::Integrity(format!(
            "p_{m} evaluates to the non-integer {value}; the Hilbert data is inconsistent"
        )));
    }
    Ok(value.to_integer())
}

/// The genus step delta_m = p_m - p_{m-1} - 1 for m >= 2.
pub fn genus_step(h: &HilbertData, m: &Int) -> Result<Int> {
    if m < &int(2) {
        return Err(Error::Precondition(format!(
            "genus steps are defined from m = 2, got {m}"
        )));
    }
    Ok(genus_pm(h, m)? - genus_pm(h, &(m - Int::one()))? - Int::one())
}

/// Whether the genus step at level m fits inside the auxiliary linear system
/// at level nu = floor(m / dim): delta_m <= P_lin(nu) - 1 - dim.  Requires
/// m >= dim and nu within the declared validity range of P_lin.
pub fn genus_step_condition(h: &HilbertData, m: &Int) -> Result<bool> {
    let dim = h.dim_int();
    if m < &dim {
        return Err(Error::Domain(format!(
            "the step condition needs m >= {dim}, got {m}"
        )));
    }
    let (nu, _mu) = m.div_rem(&dim);
    if nu < h.plin_valid_from {
        return Err(Error::Domain(format!(
            "nu = {nu} is below the declared validity level {} of the linear-system polynomial",
            h.plin_valid_from
        )));
    }
    let delta = genus_step(h, m)?;
    let dim_lin = h.p_lin.eval_int(&nu);
    assert!(
        dim_lin.is_integer(),
        "integrality on a full window forces integrality everywhere"
    );
    Ok(to_rat(&delta) <= dim_lin - to_rat(&(&dim + Int::one())))
}

/// The step condition read as "certifiably true": levels below the declared
/// validity range cannot be certified and count as failures.
fn step_certified(h: &HilbertData, m: &Int) -> Result<bool> {
    match genus_step_condition(h, m) {
        Ok(v) => Ok(v),
        Err(Error::Domain(_)) => Ok(false),
        Err(e) => Err(e),
    }
}

/// Certifies the infinite tail: returns an M such that the step condition
/// holds for every m >= M, by rewriting the slack
/// (P_lin(nu) - 1 - dim) - delta_m per residue class m = dim*nu + mu as a
/// polynomial in nu and bounding its real roots exactly.  The slack has
/// degree dim in nu with the common leading coefficient on top, so beyond
/// the root bound it is positive.
pub fn tail_certificate(h: &HilbertData) -> Result<Int> {
    let dim = h.dim_n;
    // delta as a polynomial in m: (p_m) - (p_{m-1}) - 1; the q - pg shifts
    // cancel in the difference.
    let step = {
        let shifted = h.p_can.compose_linear(&Rat::one(), &rat(-1, 1));
        &(&h.p_can - &shifted) - &RationalPoly::constant(Rat::one())
    };
    assert_eq!(
        step.degree(),
        Some(dim - 1),
        "the leading terms of P_can(m) and P_can(m-1) must cancel"
    );
    let room = &h.p_lin - &RationalPoly::constant(to_rat(&(h.dim_int() + Int::one())));
    let mut nu_min = h.plin_valid_from.clone().max(Int::one());
    for mu in 0..dim {
        let step_in_nu = step.compose_linear(&rat(dim as i64, 1), &rat(mu as i64, 1));
        let slack = &room - &step_in_nu;
        if slack.degree() != Some(dim)
            || !slack.leading_coeff().expect("degree checked").is_positive()
        {
            return Err(Error::CertificationImpossible(format!(
                "the slack polynomial for residue {mu} does not grow: {slack}"
            )));
        }
        let beyond_roots = slack.cauchy_root_bound().floor().to_integer() + Int::one();
        nu_min = nu_min.max(beyond_roots);
    }
    // Every m >= dim * nu_min has floor(m / dim) >= nu_min, which clears the
    // root bound for every residue and sits inside the validity range.
    Ok(h.dim_int() * nu_min)
}

/// Threshold and genus bound for the polarized pair: the stabilization level
/// `m_xl`, the bound `p_xl`, and the level from which the tail argument
/// takes over.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NfoldBoundResult {
    /// Least level >= dim such that the step condition holds at every
    /// m >= m_xl.
    pub m_xl: Int,
    /// The genus bound p_{m_xl - 1}.
    pub p_xl: Int,
    /// Levels beyond this are covered by the polynomial certificate rather
    /// than direct evaluation.
    pub tail_certified_from: Int,
}

/// Finds the minimal level from which the step condition never fails again:
/// direct evaluation walks down from the tail certificate, and the
/// certificate covers everything above it.
pub fn find_m_xl(h: &HilbertData) -> Result<NfoldBoundResult> {
    let dim = h.dim_int();
    let t = tail_certificate(h)?;
    assert!(t >= dim, "the certificate never starts below dim");
    let mut streak_start = t.clone();
    let mut m = &t - Int::one();
    while m >= dim {
        if step_certified(h, &m)? {
            streak_start = m.clone();
            m -= 1;
        } else {
            break;
        }
    }
    let p_xl = genus_pm(h, &(&streak_start - Int::one()))?;
    Ok(NfoldBoundResult {
        m_xl: streak_start,
        p_xl,
        tail_certified_from: t,
    })
}
