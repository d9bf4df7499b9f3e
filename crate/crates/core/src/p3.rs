//! Specialization to smooth degree-d surfaces in projective 3-space.
//!
//! For these surfaces every invariant is a polynomial in the degree:
//! e = d(d-4), p = (d-1)(d-2)(d-3)/6, q = 0, and the vanishing level is
//! n4 = d-3 by Serre duality.  The general threshold formulas then admit
//! closed forms in d, which this module evaluates side by side with the
//! general ones: the two n1 and n2 families agree identically, while the
//! closed forms usually quoted for n3 answer a parity-restricted variant of
//! the search and genuinely differ from it at several degrees.  Divergences
//! are reported as structured warnings, never silently dropped.
//!
//! The discriminants divided by d are cubic polynomials in d whose positive
//! roots locate the sign changes; the module isolates them exactly and
//! tabulates the sign of each discriminant across a degree range.

use crate::batch;
use crate::error::{Error, Result};
use crate::exact::quadratic::{ceil_quadratic, floor_quadratic};
use crate::exact::{decimal_string, int, rat, to_rat, Int, Rat, RationalCubic, Sign};
use crate::intervals::GenusInterval;
use crate::surface::{BoundProfile, Eps, PolarizedSurface};
use num_integer::Integer;
use num_traits::{One, Zero};
use std::fmt;

/// The invariants (d, d(d-4), (d-1)(d-2)(d-3)/6, 0, d-3) of a smooth
/// degree-d surface in projective 3-space.
pub fn derive_invariants(d: &Int) -> Result<PolarizedSurface> {
    if d < &int(4) {
        return Err(Error::Domain(format!(
            "the specialization needs degree d >= 4, got {d}"
        )));
    }
    let e = d * &(d - int(4));
    let p_six = (d - int(1)) * (d - int(2)) * (d - int(3));
    let (p, r) = p_six.div_rem(&int(6));
    assert!(
        r.is_zero(),
        "a product of three consecutive integers is divisible by 6"
    );
    PolarizedSurface::new(d.clone(), e, p, Int::zero(), d - int(3))
}

/// The six closed-form threshold values quoted for this family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedFormThresholds {
    pub n1_0: Int,
    pub n1_1: Int,
    pub n2_0: Int,
    pub n2_1: Int,
    pub n3_0: Int,
    pub n3_1: Int,
}

/// Evaluates the printed closed forms: n1(0) = 2 for d >= 33 and
/// ceil(d + sqrt(disc)/d) below; n2(0) = ceil(d-5 + 6(d-3)/(d(d-2)));
/// n3(0) = 3 + floor(sqrt(2d-6-4/d)); and their eps = 1 companions with the
/// case split one degree later.
pub fn closed_form_thresholds(d: &Int) -> Result<ClosedFormThresholds> {
    let s = derive_invariants(d)?;
    let dr = to_rat(d);
    let d2 = &dr * &dr;

    let n1_0 = if d >= &int(33) {
        int(2)
    } else {
        ceil_quadratic(dr.clone(), to_rat(&s.discriminant(Eps::Zero)) / &d2)?
    };
    let n1_1 = if d >= &int(34) {
        int(2)
    } else {
        ceil_quadratic(&dr + Rat::one(), to_rat(&s.discriminant(Eps::One)) / &d2)?
    };

    let n2_0 = (to_rat(&(d - int(5)))
        + rat(6, 1) * to_rat(&(d - int(3))) / (&dr * to_rat(&(d - int(2)))))
    .ceil()
    .to_integer();
    let n2_1 = (to_rat(&(d - int(5))) + rat(9, 1) * to_rat(&(d - int(2))) / &d2)
        .ceil()
        .to_integer();

    let n3_0 = int(3)
        + floor_quadratic(
            Rat::zero(),
            to_rat(&(int(2) * d - int(6))) - rat(4, 1) / &dr,
        )?;
    let n3_1 = int(4)
        + floor_quadratic(
            Rat::zero(),
            to_rat(&(int(2) * d - int(2))) - rat(4, 1) / &dr,
        )?;

    Ok(ClosedFormThresholds {
        n1_0,
        n1_1,
        n2_0,
        n2_1,
        n3_0,
        n3_1,
    })
}

/// The discriminant divided by d, as a cubic in the degree:
/// -(1/3)x^3 + 12x^2 - ((104 - 24 eps)/3)x + 8.
pub fn discriminant_per_degree_cubic(eps: Eps) -> RationalCubic {
    let linear = match eps {
        Eps::Zero => rat(-104, 3),
        Eps::One => rat(-80, 3),
    };
    RationalCubic::new(rat(-1, 3), rat(12, 1), linear, rat(8, 1))
        .expect("leading coefficient -1/3 is nonzero")
}

/// One isolated root of a discriminant cubic: an open rational bracket of
/// width at most the table's precision.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootBracket {
    pub lo: Rat,
    pub hi: Rat,
}

impl RootBracket {
    pub fn contains(&self, x: &Rat) -> bool {
        &self.lo < x && x < &self.hi
    }

    /// Midpoint rendered to two decimal places, for display next to the
    /// exact endpoints.
    pub fn display_value(&self) -> String {
        let mid = (&self.lo + &self.hi) / rat(2, 1);
        decimal_string(&mid, 2)
    }
}

impl fmt::Display for RootBracket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "~{} in ({}, {})", self.display_value(), self.lo, self.hi)
    }
}

/// Exact sign of each discriminant at one degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignRow {
    pub d: Int,
    pub delta0: Sign,
    pub delta1: Sign,
}

/// Isolated positive roots of both discriminant cubics plus the sign of each
/// discriminant at every integer degree in a range.
#[derive(Debug, Clone)]
pub struct RootTable {
    pub precision: Rat,
    pub eps0_roots: Vec<RootBracket>,
    pub eps1_roots: Vec<RootBracket>,
    pub signs: Vec<SignRow>,
}

/// Brackets are refined to width 1/10000 so that the two-decimal display
/// value is stable.
pub fn root_table(d_lo: &Int, d_hi: &Int) -> Result<RootTable> {
    if d_lo < &Int::one() || d_hi < d_lo {
        return Err(Error::Domain(format!(
            "sign table needs 1 <= d_lo <= d_hi, got {d_lo}..{d_hi}"
        )));
    }
    let precision = rat(1, 10_000);
    let isolate = |eps: Eps| -> Result<Vec<RootBracket>> {
        let cubic = discriminant_per_degree_cubic(eps);
        Ok(cubic
            .poly()
            .isolate_positive_roots(&precision)?
            .into_iter()
            .map(|(lo, hi)| RootBracket { lo, hi })
            .collect())
    };
    let eps0_roots = isolate(Eps::Zero)?;
    let eps1_roots = isolate(Eps::One)?;
    let cubic0 = discriminant_per_degree_cubic(Eps::Zero);
    let cubic1 = discriminant_per_degree_cubic(Eps::One);
    let mut signs = Vec::new();
    let mut d = d_lo.clone();
    // For d >= 1 the discriminant is d times the cubic's value, so the
    // cubic's sign at d is the discriminant's sign.
    while &d <= d_hi {
        let x = to_rat(&d);
        signs.push(SignRow {
            d: d.clone(),
            delta0: Sign::of_rat(&cubic0.eval(&x)),
            delta1: Sign::of_rat(&cubic1.eval(&x)),
        });
        d += 1;
    }
    Ok(RootTable {
        precision,
        eps0_roots,
        eps1_roots,
        signs,
    })
}

/// The certified genus bound phi for the degree-d family.
pub fn cd_bound(d: &Int) -> Result<Int> {
    Ok(derive_invariants(d)?.bound_profile()?.phi)
}

/// The interval known to contain every gap of the degree-d family:
/// no gaps at all for d = 4, the set {0, 1, 2} for d = 5, and
/// [0, d(d-1)(5d-19)/6 - 1] from d = 6 on.
pub fn gap_containment_interval(d: &Int) -> Result<Option<GenusInterval>> {
    if d < &int(4) {
        return Err(Error::Domain(format!(
            "gap containment is stated for d >= 4, got {d}"
        )));
    }
    if d == &int(4) {
        return Ok(None);
    }
    if d == &int(5) {
        return Ok(Some(GenusInterval::from_i64(0, 2)?));
    }
    let six_hi = d * &(d - int(1)) * (int(5) * d - int(19));
    let (hi, r) = six_hi.div_rem(&int(6));
    assert!(
        r.is_zero(),
        "d(d-1)(5d-19) is divisible by 6 for every integer d"
    );
    Ok(Some(GenusInterval::new(Int::zero(), hi - Int::one())?))
}

/// Which threshold a closed form was compared against.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ThresholdKind {
    N1,
    N2,
    N3,
}

impl fmt::Display for ThresholdKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ThresholdKind::N1 => "n1",
            ThresholdKind::N2 => "n2",
            ThresholdKind::N3 => "n3",
        };
        write!(f, "{s}")
    }
}

/// A closed-form value differing from the general formula it shadows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThresholdMismatch {
    pub kind: ThresholdKind,
    pub eps: Eps,
    pub closed_form: Int,
    pub general: Int,
}

impl fmt::Display for ThresholdMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}({}): closed form gives {}, general formula gives {}",
            self.kind, self.eps, self.closed_form, self.general
        )
    }
}

/// Everything the degree-d analysis produces.
#[derive(Debug, Clone)]
pub struct P3Report {
    pub degree: Int,
    pub surface: PolarizedSurface,
    pub profile: BoundProfile,
    pub closed_forms: ClosedFormThresholds,
    pub mismatches: Vec<ThresholdMismatch>,
    /// The certified genus bound phi for this degree (equals profile.phi).
    pub cd_bound: Int,
    /// phi evaluated one level lower, at n0 = d-4, where the asymptotic
    /// count is often quoted; present for d >= 5.
    pub cd_bound_at_dm4: Option<Int>,
    pub gap_containment: Option<GenusInterval>,
    pub notes: Vec<String>,
}

/// Runs the full degree-d analysis: derived invariants, threshold profile,
/// closed forms with mismatch warnings, the genus bound, and the known gap
/// containment interval.
pub fn report(d: &Int) -> Result<P3Report> {
    let surface = derive_invariants(d)?;
    let profile = surface.bound_profile()?;
    let closed_forms = closed_form_thresholds(d)?;

    let mut mismatches = Vec::new();
    let comparisons = [
        (
            ThresholdKind::N1,
            Eps::Zero,
            &closed_forms.n1_0,
            &profile.n1_0,
        ),
        (
            ThresholdKind::N1,
            Eps::One,
            &closed_forms.n1_1,
            &profile.n1_1,
        ),
        (
            ThresholdKind::N2,
            Eps::Zero,
            &closed_forms.n2_0,
            &profile.n2_0,
        ),
        (
            ThresholdKind::N2,
            Eps::One,
            &closed_forms.n2_1,
            &profile.n2_1,
        ),
        (
            ThresholdKind::N3,
            Eps::Zero,
            &closed_forms.n3_0,
            &profile.n3,
        ),
        (ThresholdKind::N3, Eps::One, &closed_forms.n3_1, &profile.n3),
    ];
    for (kind, eps, closed, general) in comparisons {
        if closed != general {
            mismatches.push(ThresholdMismatch {
                kind,
                eps,
                closed_form: closed.clone(),
                general: general.clone(),
            });
        }
    }

    let mut notes = Vec::new();
    let cd_bound_at_dm4 = if d >= &int(5) {
        let at_dm4 = surface.phi_at(&(d - int(4)))?;
        // Exact closed form for phi one level below the vanishing level.
        let closed = d * &(d - int(5)) * (int(2) * d - int(9)) / int(2) + Int::one();
        assert_eq!(
            at_dm4, closed,
            "phi(d, d(d-4), d-4) must equal d(d-5)(2d-9)/2 + 1"
        );
        notes.push(format!(
            "phi at level d-4 = {} equals d(d-5)(2d-9)/2 + 1 = {}; \
             quoted forms often drop the trailing +1",
            d - int(4),
            at_dm4
        ));
        Some(at_dm4)
    } else {
        None
    };
    notes.push(format!(
        "profile threshold n0 = {}; the vanishing level n4 = d-3 = {} is \
         sometimes quoted one lower, at d-4",
        profile.n0_star,
        surface.n4()
    ));

    let gap_containment = gap_containment_interval(d)?;
    let cd_bound = profile.phi.clone();
    Ok(P3Report {
        degree: d.clone(),
        surface,
        profile,
        closed_forms,
        mismatches,
        cd_bound,
        cd_bound_at_dm4,
        gap_containment,
        notes,
    })
}

/// Reports for every degree in d_lo..=d_hi, computed in parallel when the
/// `parallel` feature is enabled; row order follows the degrees.
pub fn batch_reports(d_lo: &Int, d_hi: &Int) -> Result<Vec<P3Report>> {
    batch::map(degree_range(d_lo, d_hi), |d| report(&d))
        .into_iter()
        .collect()
}

/// Sequential twin of [`batch_reports`].
pub fn batch_reports_seq(d_lo: &Int, d_hi: &Int) -> Result<Vec<P3Report>> {
    batch::map_seq(degree_range(d_lo, d_hi), |d| report(&d))
        .into_iter()
        .collect()
}

fn degree_range(d_lo: &Int, d_hi: &Int) -> Vec<Int> {
    let mut degrees = Vec::new();
    let mut d = d_lo.clone();
    while &d <= d_hi {
        degrees.push(d.clone());
        d += 1;
    }
    degrees
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derived_invariants_examples() {
        for (d, e, p, n4) in [(5i64, 5i64, 4i64, 2i64), (4, 0, 1, 1), (6, 12, 10, 3)] {
            let s = derive_invariants(&int(d)).unwrap();
            assert_eq!(s.d(), &int(d));
            assert_eq!(s.e(), &int(e));
            assert_eq!(s.p(), &int(p));
            assert_eq!(s.q(), &int(0));
            assert_eq!(s.n4(), &int(n4));
        }
        assert!(matches!(derive_invariants(&int(3)), Err(Error::Domain(_))));
    }

    #[test]
    fn closed_forms_at_degree_five() {
        let cf = closed_form_thresholds(&int(5)).unwrap();
        assert_eq!(cf.n1_0, int(10));
        assert_eq!(cf.n2_0, int(1));
        assert_eq!(cf.n3_0, int(4));
        assert_eq!(cf.n3_1, int(6));
    }

    #[test]
    fn closed_forms_collapse_for_large_degree() {
        let cf33 = closed_form_thresholds(&int(33)).unwrap();
        assert_eq!(cf33.n1_0, int(2));
        let cf100 = closed_form_thresholds(&int(100)).unwrap();
        assert_eq!(cf100.n1_0, int(2));
        assert_eq!(cf100.n1_1, int(2));
        // d-5 plus a fractional part in (0,1), so the ceiling is d-4.
        assert_eq!(cf100.n2_0, int(96));
        assert_eq!(cf100.n2_1, int(96));
        assert_eq!(cf100.n3_0, int(16));
        assert_eq!(cf100.n3_1, int(18));
    }

    #[test]
    fn n1_and_n2_closed_forms_match_general_formulas() {
        for d in 4i64..=200 {
            let d = int(d);
            let cf = closed_form_thresholds(&d).unwrap();
            let s = derive_invariants(&d).unwrap();
            assert_eq!(cf.n1_0, s.n1(Eps::Zero), "n1(0) differs at d = {d}");
            assert_eq!(cf.n1_1, s.n1(Eps::One), "n1(1) differs at d = {d}");
            assert_eq!(
                cf.n2_0,
                s.n2(Eps::Zero).unwrap(),
                "n2(0) differs at d = {d}"
            );
            assert_eq!(cf.n2_1, s.n2(Eps::One).unwrap(), "n2(1) differs at d = {d}");
        }
    }

    #[test]
    fn n3_closed_forms_diverge_but_are_always_recorded() {
        // The parity-indexed closed forms genuinely differ from the direct
        // search at several degrees; what the report owes the caller is that
        // every difference shows up in the mismatch list.
        let mut seen_divergence = false;
        for d in 4i64..=60 {
            let rep = report(&int(d)).unwrap();
            let general = &rep.profile.n3;
            for (eps, closed) in [
                (Eps::Zero, &rep.closed_forms.n3_0),
                (Eps::One, &rep.closed_forms.n3_1),
            ] {
                let recorded = rep.mismatches.iter().any(|m| {
                    m.kind == ThresholdKind::N3 && m.eps == eps && &m.closed_form == closed
                });
                assert_eq!(
                    closed != general,
                    recorded,
                    "silent n3 divergence at d = {d}"
                );
                seen_divergence |= recorded;
            }
        }
        assert!(
            seen_divergence,
            "expected at least one genuine n3 divergence"
        );
        // Two concrete cases, fixed: at d = 5 the direct search gives 4
        // against a printed 6 for eps = 1; at d = 6 it gives 6 against a
        // printed 5 for eps = 0, so neither form dominates the other.
        let rep5 = report(&int(5)).unwrap();
        assert_eq!(rep5.profile.n3, int(4));
        assert_eq!(rep5.closed_forms.n3_1, int(6));
        let rep6 = report(&int(6)).unwrap();
        assert_eq!(rep6.profile.n3, int(6));
        assert_eq!(rep6.closed_forms.n3_0, int(5));
    }

    #[test]
    fn discriminant_cubics_match_exact_discriminants() {
        for d in 4i64..=200 {
            let d = int(d);
            let s = derive_invariants(&d).unwrap();
            let x = to_rat(&d);
            for eps in Eps::BOTH {
                let via_cubic = discriminant_per_degree_cubic(eps).eval(&x) * &x;
                assert_eq!(via_cubic, to_rat(&s.discriminant(eps)));
            }
        }
    }

    #[test]
    fn root_table_reproduces_known_displays() {
        let table = root_table(&int(4), &int(40)).unwrap();
        let show = |brackets: &[RootBracket]| -> Vec<String> {
            brackets.iter().map(|b| b.display_value()).collect()
        };
        assert_eq!(show(&table.eps0_roots), ["0.25", "2.89", "32.86"]);
        assert_eq!(show(&table.eps1_roots), ["0.36", "2.00", "33.64"]);
        // The middle eps = 1 root is exactly 2.
        let cubic1 = discriminant_per_degree_cubic(Eps::One);
        assert!(cubic1.is_root(&rat(2, 1)));
        assert!(table.eps1_roots[1].contains(&rat(2, 1)));
    }

    #[test]
    fn sign_table_flips_where_the_roots_say() {
        let table = root_table(&int(4), &int(40)).unwrap();
        for row in &table.signs {
            let expect0 = if row.d <= int(32) {
                Sign::Positive
            } else {
                Sign::Negative
            };
            let expect1 = if row.d <= int(33) {
                Sign::Positive
            } else {
                Sign::Negative
            };
            assert_eq!(row.delta0, expect0, "delta0 sign at d = {}", row.d);
            assert_eq!(row.delta1, expect1, "delta1 sign at d = {}", row.d);
        }
    }

    #[test]
    fn cd_bound_values_and_growth() {
        // Once n4 dominates the other thresholds the bound closes to
        // d(d-4)^2 + 1 exactly.
        for d in 34i64..=80 {
            assert_eq!(
                cd_bound(&int(d)).unwrap(),
                int(d * (d - 4) * (d - 4) + 1),
                "at d = {d}"
            );
        }
        // Cubic growth: the ratio to d^3 sits inside [1/2, 3/2].
        for d in [100i64, 150, 200] {
            let phi = cd_bound(&int(d)).unwrap();
            let ratio = Rat::new(phi, int(d * d * d));
            assert!(ratio >= rat(1, 2) && ratio <= rat(3, 2));
        }
    }

    #[test]
    fn gap_containment_examples() {
        assert_eq!(gap_containment_interval(&int(4)).unwrap(), None);
        assert_eq!(
            gap_containment_interval(&int(5)).unwrap(),
            Some(GenusInterval::from_i64(0, 2).unwrap())
        );
        assert_eq!(
            gap_containment_interval(&int(6)).unwrap(),
            Some(GenusInterval::from_i64(0, 54).unwrap())
        );
        assert!(matches!(
            gap_containment_interval(&int(3)),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn report_carries_the_asymptotic_identity() {
        let rep = report(&int(100)).unwrap();
        assert_eq!(rep.cd_bound, rep.profile.phi);
        assert_eq!(rep.cd_bound_at_dm4, Some(int(100 * 95 * 191 / 2 + 1)));
        assert!(rep.notes.iter().any(|n| n.contains("+1")));
    }

    #[test]
    fn batch_reports_match_single_reports() {
        let batch = batch_reports(&int(4), &int(12)).unwrap();
        assert_eq!(batch.len(), 9);
        for rep in &batch {
            let single = report(&rep.degree).unwrap();
            assert_eq!(rep.cd_bound, single.cd_bound);
            assert_eq!(rep.mismatches, single.mismatches);
        }
        let seq = batch_reports_seq(&int(4), &int(12)).unwrap();
        assert_eq!(seq.len(), batch.len());
        for (a, b) in batch.iter().zip(&seq) {
            assert_eq!(a.cd_bound, b.cd_bound);
        }
    }
}
