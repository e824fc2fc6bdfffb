//! Elementary transformations `0 → F' → F → i_*L(2,−1) → 0` along a curve
//! `i: Σ ↪ X`, and their effect on the charge.

use alloc::vec::Vec;

use crate::chow::{to_integer, ChowRing};
use crate::curves::{
    curve_class, twisted_curve_cohomology, CurveComponent, CurveProfile, CurveSheafData, LineType,
};
use crate::error::{Error, Result};
use crate::instanton::{
    is_admissible_charge, rank0_instanton_check, Freeness, InstantonData, Outcome, Stability,
};
use crate::sheafdata::{ChernData, Twist};

/// How surjectivity of `F → i_*L(2,−1)` is justified.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Witness {
    /// Accepted only when the two `h¹` sufficiency checks pass.
    #[default]
    CatalogVerified,
    AssertedByCaller,
}

/// One transformation step, applied to whatever sheaf is current.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ElementaryStep {
    pub curve: CurveSheafData,
    pub witness: Witness,
}

impl ElementaryStep {
    /// `L` of degree `g − 1` on every component.
    pub fn from_profile(profile: CurveProfile, witness: Witness) -> Self {
        ElementaryStep {
            curve: CurveSheafData::theta_characteristic_degrees(profile),
            witness,
        }
    }

    /// A single catalogue line carrying `O(−1)`.
    pub fn catalog(tag: LineType) -> Option<Self> {
        CurveComponent::catalog(tag)
            .map(|c| Self::from_profile(CurveProfile::single(c), Witness::CatalogVerified))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct ElementaryData {
    pub source: InstantonData,
    pub curve: CurveSheafData,
    pub witness: Witness,
}

impl ElementaryData {
    pub fn new(source: InstantonData, step: ElementaryStep) -> Self {
        ElementaryData {
            source,
            curve: step.curve,
            witness: step.witness,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Verdict {
    Valid,
    ValidByAssertion,
    Invalid,
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct ElementaryReport {
    /// `deg L|_{Σ_c} = g_c − 1`, per component.
    pub degree_checks: Vec<Outcome>,
    /// `h⁰(i_*L) = h¹(i_*L) = 0`
    pub untwisted_vanishing: Outcome,
    /// `h¹(i_*L(1,0)) = 0`
    pub h1_twist_1_0: Outcome,
    /// `h¹(i_*L(1,−1)) = 0`
    pub h1_twist_1_m1: Outcome,
    /// Echo of the caller's disjointness claim.
    pub disjoint: bool,
    pub verdict: Verdict,
}

fn outcome(table: Result<bool>) -> Outcome {
    match table {
        Ok(true) => Outcome::Pass,
        Ok(false) => Outcome::Fail,
        Err(_) => Outcome::Unknown,
    }
}

fn validate(curve: &CurveSheafData, witness: Witness) -> ElementaryReport {
    let degree_checks: Vec<Outcome> = curve
        .profile()
        .components
        .iter()
        .zip(curve.degrees())
        .map(|(c, &d)| {
            if d == i64::from(c.genus) - 1 {
                Outcome::Pass
            } else {
                Outcome::Fail
            }
        })
        .collect();
    let untwisted_vanishing =
        outcome(twisted_curve_cohomology(curve, Twist::ZERO).map(|t| t.h0 == 0 && t.h1 == 0));
    let h1_at = |t| outcome(twisted_curve_cohomology(curve, t).map(|t| t.h1 == 0));
    let h1_twist_1_0 = h1_at(Twist::new(1, 0));
    let h1_twist_1_m1 = h1_at(Twist::new(1, -1));

    let necessary = degree_checks.iter().copied().chain([untwisted_vanishing]);
    let sufficient = [h1_twist_1_0, h1_twist_1_m1];
    let verdict = if necessary.clone().any(|o| o == Outcome::Fail) {
        Verdict::Invalid
    } else if necessary.chain(sufficient).any(|o| o == Outcome::Unknown) {
        Verdict::ValidByAssertion
    } else if sufficient.contains(&Outcome::Fail) {
        match witness {
            Witness::AssertedByCaller => Verdict::ValidByAssertion,
            Witness::CatalogVerified => Verdict::Invalid,
        }
    } else {
        Verdict::Valid
    };
    ElementaryReport {
        degree_checks,
        untwisted_vanishing,
        h1_twist_1_0,
        h1_twist_1_m1,
        disjoint: curve.profile().disjoint,
        verdict,
    }
}

pub fn validate_elementary(e: &ElementaryData) -> ElementaryReport {
    validate(&e.curve, e.witness)
}

/// `(d1, d2)` with `[Σ] = d1·H² + d2·E²`.
pub fn charge_increment(ring: &ChowRing, profile: &CurveProfile) -> (i64, i64) {
    let class = curve_class(ring, profile);
    let d1 = to_integer(class.h2).expect("curve classes are integral");
    let d2 = to_integer(class.e2).expect("curve classes are integral");
    (d1, d2)
}

/// Increment under the reading in which a line of the exceptional plane
/// contributes `+E²` rather than its intersection-derived class.
pub fn alternative_increment(ring: &ChowRing, profile: &CurveProfile) -> (i64, i64) {
    let (d1, d2) = charge_increment(ring, profile);
    let x = profile.count(LineType::ExceptionalLine) as i64;
    let (_, xe) = charge_increment(ring, &CurveProfile::lines(0, 0, 1));
    (d1, d2 - x * xe + x)
}

fn apply(ring: &ChowRing, source: &InstantonData, curve: &CurveSheafData) -> Result<InstantonData> {
    let (k, l) = source.charge();
    let (d1, d2) = charge_increment(ring, curve.profile());
    let chern = ChernData::new(source.rank(), 0, 0, k + d1, l + d2, source.chern().m())?;
    let (freeness, double_dual) = match source.freeness() {
        _ if curve.profile().is_empty() => (source.freeness(), source.double_dual_charge()),
        Freeness::LocallyFree => (Freeness::StrictlyTorsionFree, Some(source.charge())),
        other => (other, source.double_dual_charge()),
    };
    Ok(InstantonData::from_chern(chern, source.gamma() as i64)?
        .with_stability(source.stability())
        .with_freeness(freeness, double_dual))
}

/// Data of the kernel `F'`: `c2` grows by `[Σ]`, everything else is kept.
pub fn transform_charge(ring: &ChowRing, e: &ElementaryData) -> Result<InstantonData> {
    if validate_elementary(e).verdict == Verdict::Invalid {
        return Err(Error::InvalidElementaryData);
    }
    apply(ring, &e.source, &e.curve)
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct TrajectoryPoint {
    pub data: InstantonData,
    pub admissible: bool,
    /// Verdict of the step that produced this point; `None` for the seed.
    pub verdict: Option<Verdict>,
    /// Whether this step's quotient `i_*L(2,−1)` is a rank-0 instanton;
    /// `None` for the seed or when the curve has positive genus.
    pub rank0_quotient: Option<bool>,
    /// Charge this step would give if exceptional lines added `+E²`; set
    /// only when the step contains such lines.
    pub alternative_charge: Option<(i64, i64)>,
}

impl TrajectoryPoint {
    pub fn charge(&self) -> (i64, i64) {
        self.data.charge()
    }

    /// Cumulative charge of `F^{∨∨}/F`.
    pub fn quotient_charge(&self) -> Option<(i64, i64)> {
        self.data.quotient_charge()
    }
}

/// Applies `steps` in order. The result starts with the seed.
pub fn iterate_transforms(
    ring: &ChowRing,
    seed: &InstantonData,
    steps: &[ElementaryStep],
) -> Result<Vec<TrajectoryPoint>> {
    let mut points = Vec::with_capacity(steps.len() + 1);
    points.push(TrajectoryPoint {
        data: *seed,
        admissible: seed.is_admissible(),
        verdict: None,
        rank0_quotient: None,
        alternative_charge: None,
    });
    let mut current = *seed;
    for (index, step) in steps.iter().enumerate() {
        let report = validate(&step.curve, step.witness);
        if report.verdict == Verdict::Invalid {
            return Err(Error::InvalidStep { index });
        }
        let next = apply(ring, &current, &step.curve).map_err(|_| Error::InvalidStep { index })?;
        let profile = step.curve.profile();
        let alternative_charge = (profile.count(LineType::ExceptionalLine) > 0).then(|| {
            let (k, l) = current.charge();
            let (d1, d2) = alternative_increment(ring, profile);
            (k + d1, l + d2)
        });
        let quotient = step.curve.twisted(Twist::new(2, -1));
        let (k, l) = next.charge();
        points.push(TrajectoryPoint {
            admissible: is_admissible_charge(next.rank(), k, l),
            verdict: Some(report.verdict),
            rank0_quotient: rank0_instanton_check(&quotient).ok(),
            alternative_charge,
            data: next,
        });
        current = next;
    }
    Ok(points)
}

/// A t'Hooft bundle from `k − l` pulled-back lines missing the point and
/// `l + 1` fibre lines.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct THooftSeed {
    pub k: i64,
    pub l: i64,
    pub scheme: CurveProfile,
    pub data: InstantonData,
}

pub fn thooft_seed(k: i64, l: i64) -> Result<THooftSeed> {
    if k - l < 0 || l < -1 || !is_admissible_charge(2, k, l) {
        return Err(Error::InadmissibleCharge { r: 2, k, l });
    }
    let scheme = CurveProfile::lines((k - l) as usize, (l + 1) as usize, 0);
    let data = InstantonData::new(2, k, l, 0, 0)?
        .with_stability(Stability::MuStable)
        .locally_free();
    Ok(THooftSeed { k, l, scheme, data })
}
