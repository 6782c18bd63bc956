//! Twin classification for isogenous curve pairs.
//!
//! Two non-isomorphic curves over a field `K` are *discriminant ideal
//! twins* when they share both their conductor and their minimal
//! discriminant ideal, and *discriminant twins* when in addition, prime by
//! prime, minimal models can be chosen whose discriminants agree as field
//! elements.  This module provides three layers:
//!
//! * [`classify_pair`] — the direct test: run the reduction algorithm on
//!   both curves at every bad prime and compare the local data.
//! * [`family_twin_criterion`] / [`special_pair_criterion`] — closed-form
//!   predictions from the parameter of an isogenous family alone, without
//!   touching local data.
//! * [`enumerate_over_q`] / [`enumerate_imag_quad`] — exhaustive candidate
//!   scans that pair each prediction with the direct verdict.
//!
//! The value-level upgrade from ideal twin to full twin hinges on one
//! observation: minimal discriminants at a fixed prime can be matched
//! exactly when the ratio of any two global discriminants is a twelfth
//! power in `K`, because changing models scales a discriminant by twelfth
//! powers and integrality can always be restored away from the prime under
//! inspection.  For a family pair with parameter `t0` that ratio is
//! `t0^(p-1) / p^12`, so the decision reduces to a twelfth-power test on
//! `t0^(p-1)`.

use std::fmt;

use rayon::prelude::*;
use serde::ser::{Serialize, SerializeMap, Serializer};

use crate::curve::{is_isomorphic, WeierstrassModel};
use crate::error::{Error, Result};
use crate::families::{
    equal_j_case, family_curve, family_j, family_polys, special_j_pair, EqualJCase, FAMILY_PRIMES,
};
use crate::ideals::{factor_principal_ideal, principal_generator_of_power, split_prime, SplitKind};
use crate::localdata::{local_data_all, minimal_discriminant_value, tate_local, LocalData};
use crate::numeric::{nth_power_root, units_of, Field, FieldElem};

/// How a pair of curves over the same field relates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TwinStatus {
    /// The parameter degenerates to a singular cubic; no pair exists.
    Singular,
    /// The two curves are isomorphic over the field, so the twin question
    /// does not arise.
    Isomorphic,
    /// Conductor or minimal discriminant ideal differ.
    NotTwin,
    /// Equal conductor and minimal discriminant ideal, but the minimal
    /// discriminants cannot be made equal as field elements.
    DiscIdealTwin,
    /// Equal conductor, equal minimal discriminant ideal, and equal
    /// minimal discriminant values prime by prime.
    DiscTwin,
}

impl TwinStatus {
    /// Stable kebab-case name, used by the command-line output.
    pub fn as_str(self) -> &'static str {
        match self {
            TwinStatus::Singular => "singular",
            TwinStatus::Isomorphic => "isomorphic",
            TwinStatus::NotTwin => "not-twin",
            TwinStatus::DiscIdealTwin => "disc-ideal-twin",
            TwinStatus::DiscTwin => "disc-twin",
        }
    }

    /// True for both twin flavours.
    pub fn is_twin(self) -> bool {
        matches!(self, TwinStatus::DiscIdealTwin | TwinStatus::DiscTwin)
    }
}

impl fmt::Display for TwinStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for TwinStatus {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.serialize_str(self.as_str())
    }
}

/// The decisive comparison behind a [`TwinVerdict`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerdictReason {
    /// The curves are isomorphic over the field.
    Isomorphism,
    /// Some prime carries different conductor exponents.
    ConductorMismatch,
    /// Some prime carries different minimal discriminant valuations.
    DiscIdealMismatch,
    /// Global minimal discriminants exist and agree.
    MinimalValuesEqual,
    /// Global minimal discriminants exist and differ.
    MinimalValuesDiffer,
    /// No global minimal models, but the discriminant ratio is a twelfth
    /// power, so minimal discriminants match prime by prime.
    RatioTwelfthPower,
    /// No global minimal models and the discriminant ratio is not a
    /// twelfth power; the values can never be matched.
    RatioNotTwelfthPower,
    /// The ideal data agree but the value comparison is out of reach
    /// (irrational discriminant ratio over a real quadratic field).
    TwinUndecided,
}

impl VerdictReason {
    /// Stable kebab-case name, used by the command-line output.
    pub fn as_str(self) -> &'static str {
        match self {
            VerdictReason::Isomorphism => "isomorphism",
            VerdictReason::ConductorMismatch => "conductor-mismatch",
            VerdictReason::DiscIdealMismatch => "disc-ideal-mismatch",
            VerdictReason::MinimalValuesEqual => "minimal-values-equal",
            VerdictReason::MinimalValuesDiffer => "minimal-values-differ",
            VerdictReason::RatioTwelfthPower => "ratio-twelfth-power",
            VerdictReason::RatioNotTwelfthPower => "ratio-not-twelfth-power",
            VerdictReason::TwinUndecided => "twin-undecided",
        }
    }
}

impl fmt::Display for VerdictReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for VerdictReason {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.serialize_str(self.as_str())
    }
}

/// Outcome of [`classify_pair`]: the status, the comparison that settled
/// it, and the paired local data at every prime dividing either
/// discriminant.
#[derive(Debug, Clone)]
pub struct TwinVerdict {
    status: TwinStatus,
    reason: VerdictReason,
    per_prime: Vec<(LocalData, LocalData)>,
}

impl TwinVerdict {
    /// Final status of the pair.
    pub fn status(&self) -> TwinStatus {
        self.status
    }

    /// Which comparison produced the status.
    pub fn reason(&self) -> VerdictReason {
        self.reason
    }

    /// Local data of both curves, one entry per bad prime, sorted by
    /// prime.  Empty when the pair is isomorphic.
    pub fn per_prime(&self) -> &[(LocalData, LocalData)] {
        &self.per_prime
    }
}

impl Serialize for TwinVerdict {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = ser.serialize_map(Some(3))?;
        map.serialize_entry("status", &self.status)?;
        map.serialize_entry("reason", &self.reason)?;
        let pairs: Vec<[&LocalData; 2]> = self.per_prime.iter().map(|(a, b)| [a, b]).collect();
        map.serialize_entry("per_prime", &pairs)?;
        map.end()
    }
}

/// Run the reduction algorithm on both curves at the union of their bad
/// primes and return the paired local data, sorted by prime.  A prime
/// dividing only one discriminant still gets an entry for the other curve
/// (necessarily good reduction there).
fn paired_local_data(
    e1: &WeierstrassModel,
    e2: &WeierstrassModel,
) -> Result<Vec<(LocalData, LocalData)>> {
    let d1 = local_data_all(e1)?;
    let d2 = local_data_all(e2)?;
    let mut primes: Vec<_> = d1
        .iter()
        .chain(d2.iter())
        .map(|ld| ld.prime().clone())
        .collect();
    primes.sort();
    primes.dedup();
    primes
        .into_iter()
        .map(|prime| {
            let find = |data: &[LocalData], model: &WeierstrassModel| match data
                .iter()
                .find(|ld| *ld.prime() == prime)
            {
                Some(ld) => Ok(ld.clone()),
                None => tate_local(model, &prime),
            };
            Ok((find(&d1, e1)?, find(&d2, e2)?))
        })
        .collect()
}

/// Minimal discriminant as a value when the field supports one globally;
/// `None` when no global minimal model exists or the unit group is
/// infinite, both of which defer the value comparison to the ratio test.
fn minimal_value_opt(model: &WeierstrassModel) -> Result<Option<FieldElem>> {
    match minimal_discriminant_value(model) {
        Ok(v) => Ok(Some(v)),
        Err(Error::NoGlobalMinimalModel) | Err(Error::InfiniteUnitGroup) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Decide the twin status of two curves by direct comparison of local
/// data.
///
/// The curves are coerced into a common field first.  Isomorphic pairs
/// short-circuit; otherwise conductor exponents and minimal discriminant
/// valuations are compared at every bad prime, and surviving pairs are
/// upgraded from ideal twin to full twin when the minimal discriminant
/// values agree — tested directly where global minimal models exist, and
/// through the twelfth-power ratio criterion where they do not.
pub fn classify_pair(e1: &WeierstrassModel, e2: &WeierstrassModel) -> Result<TwinVerdict> {
    let field = e1.field().unify(e2.field())?;
    let e1 = e1.coerce(field)?;
    let e2 = e2.coerce(field)?;
    if e1.is_singular() || e2.is_singular() {
        return Err(Error::SingularModel);
    }
    if is_isomorphic(&e1, &e2)? {
        return Ok(TwinVerdict {
            status: TwinStatus::Isomorphic,
            reason: VerdictReason::Isomorphism,
            per_prime: Vec::new(),
        });
    }
    let per_prime = paired_local_data(&e1, &e2)?;
    let verdict = |status, reason, per_prime| Ok(TwinVerdict { status, reason, per_prime });
    if per_prime
        .iter()
        .any(|(l1, l2)| l1.conductor_exponent() != l2.conductor_exponent())
    {
        return verdict(TwinStatus::NotTwin, VerdictReason::ConductorMismatch, per_prime);
    }
    if per_prime
        .iter()
        .any(|(l1, l2)| l1.minimal_disc_valuation() != l2.minimal_disc_valuation())
    {
        return verdict(TwinStatus::NotTwin, VerdictReason::DiscIdealMismatch, per_prime);
    }
    // Ideal twin established; try to settle the value question.
    if let (Some(v1), Some(v2)) = (minimal_value_opt(&e1)?, minimal_value_opt(&e2)?) {
        return if v1 == v2 {
            verdict(TwinStatus::DiscTwin, VerdictReason::MinimalValuesEqual, per_prime)
        } else {
            verdict(TwinStatus::DiscIdealTwin, VerdictReason::MinimalValuesDiffer, per_prime)
        };
    }
    let ratio = e1.discriminant().div(&e2.discriminant())?;
    match nth_power_root(&ratio, 12) {
        Ok(Some(_)) => verdict(TwinStatus::DiscTwin, VerdictReason::RatioTwelfthPower, per_prime),
        Ok(None) => verdict(
            TwinStatus::DiscIdealTwin,
            VerdictReason::RatioNotTwelfthPower,
            per_prime,
        ),
        Err(Error::UnsupportedField(_)) => verdict(
            TwinStatus::DiscIdealTwin,
            VerdictReason::TwinUndecided,
            per_prime,
        ),
        Err(e) => Err(e),
    }
}

/// What the parameter criterion can promise for a candidate pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CriterionOutcome {
    /// For isogeny degrees 3, 5, 7 and 13 the criterion is a complete
    /// classification.
    Decided(TwinStatus),
    /// For degree 2 the valuation condition is necessary only: failure
    /// still decides `NotTwin`, but success leaves the ideal comparison to
    /// [`classify_pair`].  `value_twin_possible` reports whether the
    /// minimal discriminant values could agree at all, i.e. whether the
    /// discriminant ratio is a twelfth power.
    NecessaryOnly { value_twin_possible: bool },
}

impl Serialize for CriterionOutcome {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = ser.serialize_map(Some(2))?;
        match self {
            CriterionOutcome::Decided(status) => {
                map.serialize_entry("kind", "decided")?;
                map.serialize_entry("status", status)?;
            }
            CriterionOutcome::NecessaryOnly { value_twin_possible } => {
                map.serialize_entry("kind", "necessary-only")?;
                map.serialize_entry("value_twin_possible", value_twin_possible)?;
            }
        }
        map.end()
    }
}

/// Predict the twin status of the degree-`p` family pair with parameter
/// `t0` and twist `d0` from the parameter alone.
///
/// The route: degenerate and shared-`j` parameters are dispatched first
/// (singular cubics, parameters whose two curves are isomorphic); then the
/// valuation condition — at every prime the valuation of `t0` must be a
/// multiple of `12/(p-1)` lying between `0` and that multiple times the
/// ramification of `p` — decides ideal twinhood; finally a twelfth-power
/// test on `t0^(p-1)` separates full twins from ideal-only twins.  The
/// twist `d0` never enters: simultaneous twists move both curves' local
/// data in lockstep.
pub fn family_twin_criterion(p: u64, t0: &FieldElem, d0: &FieldElem) -> Result<CriterionOutcome> {
    family_polys(p, 1)?;
    if t0.is_zero() {
        return Err(Error::ZeroParameter);
    }
    if d0.is_zero() {
        return Err(Error::ZeroFamilyTwist);
    }
    let field = t0.field().unify(d0.field())?;
    let t0 = t0.coerce(field)?;
    match equal_j_case(p, &t0)? {
        EqualJCase::SingularJ { .. } => return Ok(CriterionOutcome::Decided(TwinStatus::Singular)),
        EqualJCase::IsomorphicCm { .. } => {
            return Ok(CriterionOutcome::Decided(TwinStatus::Isomorphic))
        }
        EqualJCase::EqualJConditional { cm_radicand, .. }
            if field.radicand() == Some(cm_radicand) =>
        {
            return Ok(CriterionOutcome::Decided(TwinStatus::Isomorphic))
        }
        _ => {}
    }
    let step = (12 / (p - 1)) as i64;
    let mut admissible = true;
    for (prime, e) in factor_principal_ideal(&t0)?.factors() {
        let cap = if prime.p() == p { i64::from(prime.e()) } else { 0 };
        if e % step != 0 || e / step < 0 || e / step > cap {
            admissible = false;
            break;
        }
    }
    if !admissible {
        return Ok(CriterionOutcome::Decided(TwinStatus::NotTwin));
    }
    // Minimal discriminants differ exactly by the class of t0^(p-1)/p^12
    // modulo twelfth powers, and p^12 is already one.
    let value_twin = nth_power_root(&t0.pow((p - 1) as i64)?, 12)?.is_some();
    if p == 2 {
        return Ok(CriterionOutcome::NecessaryOnly {
            value_twin_possible: value_twin,
        });
    }
    Ok(CriterionOutcome::Decided(if value_twin {
        TwinStatus::DiscTwin
    } else {
        TwinStatus::DiscIdealTwin
    }))
}

/// Whether the rational prime `p` ramifies in the field (for the rational
/// field itself: never).
fn prime_ramifies(field: Field, p: u64) -> Result<bool> {
    Ok(match field {
        Field::Rational => false,
        _ => split_prime(field, p)?[0].kind() == SplitKind::Ramified,
    })
}

/// Predict the twin status of the fixed isogenous pair with shared
/// `j`-invariant `0` (degree 3) or `1728` (degree 2) over `field`.
///
/// For `j = 0` the prediction is complete: the pair is isomorphic when
/// the field contains the third roots of unity, an ideal twin exactly
/// when `3` ramifies, and a full twin only when the field also contains
/// `sqrt(3)`.  For `j = 1728` the conditions (no fourth roots of unity,
/// `2` ramified) are necessary, and full twins never occur.
pub fn special_pair_criterion(p: u64, j: i64, field: Field) -> Result<CriterionOutcome> {
    match (p, j) {
        (3, 0) => {
            if field.radicand() == Some(-3) {
                return Ok(CriterionOutcome::Decided(TwinStatus::Isomorphic));
            }
            if !prime_ramifies(field, 3)? {
                return Ok(CriterionOutcome::Decided(TwinStatus::NotTwin));
            }
            Ok(CriterionOutcome::Decided(if field.radicand() == Some(3) {
                TwinStatus::DiscTwin
            } else {
                TwinStatus::DiscIdealTwin
            }))
        }
        (2, 1728) => {
            if field.radicand() == Some(-1) {
                return Ok(CriterionOutcome::Decided(TwinStatus::Isomorphic));
            }
            if !prime_ramifies(field, 2)? {
                return Ok(CriterionOutcome::Decided(TwinStatus::NotTwin));
            }
            Ok(CriterionOutcome::NecessaryOnly {
                value_twin_possible: false,
            })
        }
        _ => Err(Error::BadPair(p, j)),
    }
}

/// Where an enumerated parameter came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CandidateSource {
    /// A unit of the ring of integers (over the rationals: a sign).
    Unit,
    /// A unit multiple of a generator of `P^(12/(p-1))` for a prime `P`
    /// over `p`.
    IdealPower,
    /// The fixed twist pair with shared `j`-invariant 0 or 1728.
    SpecialJ,
}

impl CandidateSource {
    /// Stable kebab-case name, used by the command-line output.
    pub fn as_str(self) -> &'static str {
        match self {
            CandidateSource::Unit => "unit",
            CandidateSource::IdealPower => "ideal-power",
            CandidateSource::SpecialJ => "special-j",
        }
    }
}

impl fmt::Display for CandidateSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for CandidateSource {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.serialize_str(self.as_str())
    }
}

/// One enumerated candidate pair: the parameters, the criterion
/// prediction, and the direct verdict.
#[derive(Debug, Clone)]
pub struct TwinCandidate {
    /// Isogeny degree.
    pub p: u64,
    /// Family parameter; `None` for the shared-`j` twist pairs, which are
    /// not family members.
    pub t0: Option<FieldElem>,
    /// Simultaneous quadratic twist applied to both curves.
    pub d0: FieldElem,
    /// How the parameter was produced.
    pub source: CandidateSource,
    /// Closed-form prediction from the parameter.
    pub predicted: CriterionOutcome,
    /// Direct verdict from the local data.
    pub verdict: TwinVerdict,
    /// The two curves of the pair.
    pub curves: (WeierstrassModel, WeierstrassModel),
    /// Their `j`-invariants.
    pub j_invariants: (FieldElem, FieldElem),
}

impl TwinCandidate {
    /// True when prediction and direct verdict tell the same story: a
    /// decided prediction must equal the verdict, and a necessary-only
    /// prediction must see a twin whose value-level status matches the
    /// twelfth-power flag.
    pub fn prediction_consistent(&self) -> bool {
        match self.predicted {
            CriterionOutcome::Decided(status) => status == self.verdict.status(),
            CriterionOutcome::NecessaryOnly { value_twin_possible } => {
                match self.verdict.status() {
                    TwinStatus::DiscTwin => value_twin_possible,
                    TwinStatus::DiscIdealTwin => {
                        !value_twin_possible
                            || self.verdict.reason() == VerdictReason::TwinUndecided
                    }
                    TwinStatus::NotTwin => true,
                    _ => false,
                }
            }
        }
    }
}

impl Serialize for TwinCandidate {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = ser.serialize_map(Some(8))?;
        map.serialize_entry("p", &self.p)?;
        map.serialize_entry("t0", &self.t0.as_ref().map(ToString::to_string))?;
        map.serialize_entry("d0", &self.d0.to_string())?;
        map.serialize_entry("source", &self.source)?;
        map.serialize_entry("predicted", &self.predicted)?;
        map.serialize_entry("verdict", &self.verdict)?;
        map.serialize_entry(
            "curves",
            &[&self.curves.0, &self.curves.1],
        )?;
        map.serialize_entry(
            "j_invariants",
            &[self.j_invariants.0.to_string(), self.j_invariants.1.to_string()],
        )?;
        map.end()
    }
}

/// A family candidate before classification.
struct RawCandidate {
    p: u64,
    t0: FieldElem,
    source: CandidateSource,
}

/// Build the classified candidate list from raw parameters plus any
/// shared-`j` pairs, running the direct comparisons in parallel.
fn classify_candidates(
    raw: Vec<RawCandidate>,
    special: Vec<(u64, i64)>,
    field: Field,
) -> Result<Vec<TwinCandidate>> {
    let one = FieldElem::one(field);
    let mut prepared: Vec<(
        u64,
        Option<FieldElem>,
        CandidateSource,
        CriterionOutcome,
        (WeierstrassModel, WeierstrassModel),
        (FieldElem, FieldElem),
    )> = Vec::new();
    for c in &raw {
        let curves = (
            family_curve(c.p, 1, &c.t0, &one)?,
            family_curve(c.p, 2, &c.t0, &one)?,
        );
        let js = (family_j(c.p, 1, &c.t0)?, family_j(c.p, 2, &c.t0)?);
        let predicted = family_twin_criterion(c.p, &c.t0, &one)?;
        prepared.push((c.p, Some(c.t0.clone()), c.source, predicted, curves, js));
    }
    for &(p, j) in &special {
        let curves = special_j_pair(p, j, &one)?;
        let j_elem = FieldElem::int_in(field, j);
        let predicted = special_pair_criterion(p, j, field)?;
        prepared.push((
            p,
            None,
            CandidateSource::SpecialJ,
            predicted,
            curves,
            (j_elem.clone(), j_elem),
        ));
    }
    let verdicts: Vec<TwinVerdict> = prepared
        .par_iter()
        .map(|(_, _, _, _, curves, _)| classify_pair(&curves.0, &curves.1))
        .collect::<Result<_>>()?;
    Ok(prepared
        .into_iter()
        .zip(verdicts)
        .map(|((p, t0, source, predicted, curves, js), verdict)| TwinCandidate {
            p,
            t0,
            d0: one.clone(),
            source,
            predicted,
            verdict,
            curves,
            j_invariants: js,
        })
        .collect())
}

/// Enumerate the twin candidates over the rationals: for each family
/// degree the parameters `t0 = 1` and `t0 = -1`, each twisted to its
/// smallest-conductor representative.
pub fn enumerate_over_q() -> Result<Vec<TwinCandidate>> {
    // Twists chosen so each pair hits the smallest conductor and minimal
    // discriminant among its quadratic twists.
    const TWISTS: [(u64, i64, i64); 10] = [
        (2, 1, -1),
        (2, -1, -3),
        (3, 1, -21),
        (3, -1, 39),
        (5, 1, -2),
        (5, -1, -1),
        (7, 1, -1),
        (7, -1, 1),
        (13, 1, 2),
        (13, -1, -1),
    ];
    let mut prepared = Vec::new();
    for &(p, t, d) in &TWISTS {
        let t0 = FieldElem::from_int(t);
        let d0 = FieldElem::from_int(d);
        let curves = (family_curve(p, 1, &t0, &d0)?, family_curve(p, 2, &t0, &d0)?);
        let js = (family_j(p, 1, &t0)?, family_j(p, 2, &t0)?);
        let predicted = family_twin_criterion(p, &t0, &d0)?;
        prepared.push((p, t0, d0, predicted, curves, js));
    }
    let verdicts: Vec<TwinVerdict> = prepared
        .par_iter()
        .map(|(_, _, _, _, curves, _)| classify_pair(&curves.0, &curves.1))
        .collect::<Result<_>>()?;
    Ok(prepared
        .into_iter()
        .zip(verdicts)
        .map(|((p, t0, d0, predicted, curves, js), verdict)| TwinCandidate {
            p,
            t0: Some(t0),
            d0,
            source: CandidateSource::Unit,
            predicted,
            verdict,
            curves,
            j_invariants: js,
        })
        .collect())
}

/// Enumerate all twin candidates over an imaginary quadratic field.
///
/// For each family degree `p` the admissible parameters form a finite
/// set: every unit, and every unit multiple of a generator of
/// `P^(12/(p-1))` for each prime `P` over `p` (skipped when that ideal
/// power is not principal — no admissible parameter exists there).  Two
/// parameters `t` and `p^(12/(p-1))/t` produce the same unordered pair
/// with the roles of the two curves swapped, so each such orbit keeps one
/// representative.  Parameters whose curves degenerate are dropped;
/// parameters whose curves coincide are kept and flagged isomorphic.
/// When `2` or `3` ramifies the fixed shared-`j` twist pair joins the
/// list.  Every candidate carries both the closed-form prediction and the
/// direct verdict.
pub fn enumerate_imag_quad(field: Field) -> Result<Vec<TwinCandidate>> {
    match field.quadratic() {
        Some(k) if k.is_imaginary() => {}
        _ => {
            return Err(Error::UnsupportedField(
                "imaginary quadratic field required".into(),
            ))
        }
    }
    let units = units_of(field)?;
    let one = FieldElem::one(field);
    let mut raw: Vec<RawCandidate> = Vec::new();
    for &p in &FAMILY_PRIMES {
        let step = 12 / (p as u32 - 1);
        let mut bases = vec![(one.clone(), CandidateSource::Unit)];
        for prime in split_prime(field, p)? {
            if prime.kind() == SplitKind::Inert {
                continue;
            }
            if let Some(generator) = principal_generator_of_power(&prime, step)? {
                bases.push((generator, CandidateSource::IdealPower));
            }
        }
        // The swap t -> p^(12/(p-1)) / t exchanges the two curves of the
        // pair, so two parameters in the same swap orbit describe one
        // unordered pair: keep the first representative encountered
        // (self-paired parameters stay).
        let m = FieldElem::int_in(field, p as i64).pow(i64::from(step))?;
        let mut kept: Vec<RawCandidate> = Vec::new();
        for (base, source) in &bases {
            for unit in &units {
                let t0 = unit.mul(base)?;
                if matches!(equal_j_case(p, &t0)?, EqualJCase::SingularJ { .. }) {
                    continue;
                }
                let partner = m.div(&t0)?;
                if kept.iter().any(|c| c.t0 == t0 || c.t0 == partner) {
                    continue;
                }
                kept.push(RawCandidate {
                    p,
                    t0,
                    source: *source,
                });
            }
        }
        raw.extend(kept);
    }
    let mut special = Vec::new();
    if prime_ramifies(field, 2)? {
        special.push((2, 1728));
    }
    if prime_ramifies(field, 3)? {
        special.push((3, 0));
    }
    classify_candidates(raw, special, field)
}
