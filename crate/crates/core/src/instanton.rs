//! Instanton sheaves: charge admissibility, the vanishing checklist and the
//! term ranks of the monad
//!
//! ```text
//! 0 → O(−1,1)^{l+γ} ⊕ Ω¹(0,−1)^{k−l}
//!   → O(−1,1)^{γ} ⊕ Ω¹(1,−1)^{k} ⊕ O(−1,0)^{2(k−l)}
//!   → O^{2k−l−r} → 0.
//! ```

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::chow::{frac, rat, ChowClass, ChowRing};
use crate::cohomology::{BundleDescriptor, BundleKind, CohomTable};
use crate::curves::CurveSheafData;
use crate::error::{Error, Result};
use crate::sheafdata::{ChernData, Twist};

/// Carried stability flag; never computed.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Stability {
    MuStable,
    SemiStable,
    #[default]
    Unknown,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Freeness {
    LocallyFree,
    StrictlyTorsionFree,
    #[default]
    Unspecified,
}

pub fn is_admissible_charge(r: i64, k: i64, l: i64) -> bool {
    2 * k - l >= r && k - l >= 0
}

/// Numerical data of an instanton sheaf: `c1 = 0`, charge `kH² + lE²`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct InstantonData {
    chern: ChernData,
    stability: Stability,
    gamma: u64,
    freeness: Freeness,
    double_dual_charge: Option<(i64, i64)>,
}

impl InstantonData {
    /// Rank `r` data of charge `(k, l)` with `c3` coefficient `m` and
    /// `γ = h²(F(−2,2))` supplied by the caller.
    pub fn new(r: i64, k: i64, l: i64, m: i64, gamma: i64) -> Result<Self> {
        Self::from_chern(ChernData::new(r, 0, 0, k, l, m)?, gamma)
    }

    pub fn from_chern(chern: ChernData, gamma: i64) -> Result<Self> {
        if chern.a() != 0 || chern.b() != 0 {
            return Err(Error::NonZeroFirstChern {
                a: chern.a(),
                b: chern.b(),
            });
        }
        if gamma < 0 {
            return Err(Error::NegativeGamma(gamma));
        }
        let (r, k, l) = (chern.rank(), chern.k(), chern.l());
        if !is_admissible_charge(r, k, l) {
            return Err(Error::InadmissibleCharge { r, k, l });
        }
        let chern = ChernData::new(r, 0, 0, k, l, chern.m())?;
        Ok(InstantonData {
            chern,
            stability: Stability::Unknown,
            gamma: gamma as u64,
            freeness: Freeness::Unspecified,
            double_dual_charge: None,
        })
    }

    pub fn with_stability(mut self, stability: Stability) -> Self {
        self.stability = stability;
        self
    }

    /// Marks the sheaf locally free; it is then its own double dual.
    pub fn locally_free(mut self) -> Self {
        self.freeness = Freeness::LocallyFree;
        self.double_dual_charge = Some(self.charge());
        self
    }

    pub(crate) fn with_freeness(
        mut self,
        freeness: Freeness,
        double_dual: Option<(i64, i64)>,
    ) -> Self {
        self.freeness = freeness;
        self.double_dual_charge = double_dual;
        self
    }

    pub fn chern(&self) -> &ChernData {
        &self.chern
    }

    pub fn rank(&self) -> i64 {
        self.chern.rank()
    }

    pub fn charge(&self) -> (i64, i64) {
        (self.chern.k(), self.chern.l())
    }

    pub fn gamma(&self) -> u64 {
        self.gamma
    }

    pub fn stability(&self) -> Stability {
        self.stability
    }

    pub fn freeness(&self) -> Freeness {
        self.freeness
    }

    /// Charge of `F^{∨∨}` when known.
    pub fn double_dual_charge(&self) -> Option<(i64, i64)> {
        self.double_dual_charge
    }

    /// `c2(F) − c2(F^{∨∨})`, the charge of the rank-0 quotient `F^{∨∨}/F`.
    pub fn quotient_charge(&self) -> Option<(i64, i64)> {
        let (k, l) = self.charge();
        self.double_dual_charge.map(|(k0, l0)| (k - k0, l - l0))
    }

    pub fn is_admissible(&self) -> bool {
        let (k, l) = self.charge();
        is_admissible_charge(self.rank(), k, l)
    }
}

/// Multiplicities of the six monad summands.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct MonadShape {
    /// `O(−1,1)` in degree −1: `l + γ`
    pub left_line: u64,
    /// `Ω¹(0,−1)` in degree −1: `k − l`
    pub left_omega: u64,
    /// `O(−1,1)` in degree 0: `γ`
    pub middle_line: u64,
    /// `Ω¹(1,−1)` in degree 0: `k`
    pub middle_omega: u64,
    /// `O(−1,0)` in degree 0: `2(k − l)`
    pub middle_hyperplane: u64,
    /// `O` in degree 1: `2k − l − r`
    pub right_trivial: u64,
}

/// One summand `bundle^{⊕ multiplicity}` in cohomological degree `degree`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MonadTerm {
    pub degree: i8,
    pub bundle: BundleDescriptor,
    pub multiplicity: u64,
}

impl MonadShape {
    pub fn from_charge(r: i64, k: i64, l: i64, gamma: i64) -> Result<Self> {
        if !is_admissible_charge(r, k, l) {
            return Err(Error::InadmissibleCharge { r, k, l });
        }
        if gamma < 0 {
            return Err(Error::NegativeGamma(gamma));
        }
        let mult = |x: i64| u64::try_from(x).map_err(|_| Error::InadmissibleCharge { r, k, l });
        Ok(MonadShape {
            left_line: mult(l + gamma)?,
            left_omega: mult(k - l)?,
            middle_line: mult(gamma)?,
            middle_omega: mult(k)?,
            middle_hyperplane: mult(2 * (k - l))?,
            right_trivial: mult(2 * k - l - r)?,
        })
    }

    pub fn multiplicities(&self) -> [u64; 6] {
        [
            self.left_line,
            self.left_omega,
            self.middle_line,
            self.middle_omega,
            self.middle_hyperplane,
            self.right_trivial,
        ]
    }

    pub fn terms(&self) -> [MonadTerm; 6] {
        let term = |degree, bundle, multiplicity| MonadTerm {
            degree,
            bundle,
            multiplicity,
        };
        [
            term(-1, BundleDescriptor::line(-1, 1), self.left_line),
            term(-1, BundleDescriptor::omega(0, -1), self.left_omega),
            term(0, BundleDescriptor::line(-1, 1), self.middle_line),
            term(0, BundleDescriptor::omega(1, -1), self.middle_omega),
            term(0, BundleDescriptor::line(-1, 0), self.middle_hyperplane),
            term(1, BundleDescriptor::line(0, 0), self.right_trivial),
        ]
    }

    /// `rank M⁰ − rank M⁻¹ − rank M¹`.
    pub fn alternating_rank(&self) -> i64 {
        self.terms()
            .iter()
            .map(|t| {
                let rank = match t.bundle.kind {
                    BundleKind::LineBundle => 1,
                    BundleKind::OmegaTwist => 2,
                };
                sign(t.degree) * rank * t.multiplicity as i64
            })
            .sum()
    }

    /// `ch(M⁰) − ch(M⁻¹) − ch(M¹)`, expanded in the Chow ring.
    pub fn character(&self, ring: &ChowRing) -> ChowClass {
        self.terms()
            .iter()
            .map(|t| {
                bundle_character(ring, t.bundle).scale(rat(sign(t.degree) * t.multiplicity as i64))
            })
            .sum()
    }
}

fn sign(degree: i8) -> i64 {
    if degree == 0 {
        1
    } else {
        -1
    }
}

/// `ch(Ω¹) = 2 − 3(H−E) + (3/2)(H−E)²`, the pull-back of the plane
/// cotangent character along `pr*h = H − E`.
pub fn omega_character(ring: &ChowRing) -> ChowClass {
    let h = ChowClass::divisor(1, -1);
    ChowClass::scalar(rat(2)) - h.scale(rat(3)) + ring.mul(&h, &h).scale(frac(3, 2))
}

pub fn bundle_character(ring: &ChowRing, b: BundleDescriptor) -> ChowClass {
    let twist = b.twist.character(ring);
    match b.kind {
        BundleKind::LineBundle => twist,
        BundleKind::OmegaTwist => ring.mul(&omega_character(ring), &twist),
    }
}

pub fn monad_shape(d: &InstantonData) -> MonadShape {
    let (k, l) = d.charge();
    MonadShape::from_charge(d.rank(), k, l, d.gamma as i64)
        .expect("instanton data is admissible by construction")
}

/// Per-degree comparison of the monad character with `ch(F)` (`m = 0`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct MonadCheck {
    pub rank: bool,
    pub c1: bool,
    pub c2: bool,
    pub ch3: bool,
}

impl MonadCheck {
    pub fn all(&self) -> bool {
        self.rank && self.c1 && self.c2 && self.ch3
    }
}

pub fn monad_chern_report(ring: &ChowRing, d: &InstantonData, s: &MonadShape) -> MonadCheck {
    let (k, l) = d.charge();
    let target = ChernData::new_unchecked(d.rank(), 0, 0, k, l, 0).character(ring);
    let got = s.character(ring);
    MonadCheck {
        rank: got.part(0) == target.part(0),
        c1: got.part(1) == target.part(1),
        c2: got.part(2) == target.part(2),
        ch3: got.part(3) == target.part(3),
    }
}

pub fn monad_chern_check(ring: &ChowRing, d: &InstantonData, s: &MonadShape) -> bool {
    monad_chern_report(ring, d, s).all()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Outcome {
    Pass,
    Fail,
    Unknown,
}

impl Outcome {
    fn from_bool(ok: bool) -> Self {
        if ok {
            Outcome::Pass
        } else {
            Outcome::Fail
        }
    }

    fn combine(self, other: Outcome) -> Outcome {
        match (self, other) {
            (Outcome::Fail, _) | (_, Outcome::Fail) => Outcome::Fail,
            (Outcome::Unknown, _) | (_, Outcome::Unknown) => Outcome::Unknown,
            _ => Outcome::Pass,
        }
    }
}

/// Which clause of the instanton definition a check belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum DefinitionItem {
    /// `h⁰(F) = h³(F(−4,1)) = 0`
    I,
    /// `h¹(F(−2,1)) = h²(F(−2,1)) = 0`
    II,
    /// `h²(F(0,−1)) = h²(F(−1,1)) = 0`
    III,
    /// `χ(F(−2,1)) = 0`, from Riemann–Roch alone
    EulerCharacteristic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct ChecklistItem {
    pub item: DefinitionItem,
    pub twist: Twist,
    /// Cohomological degree that must vanish; `None` for the χ check.
    pub degree: Option<usize>,
    pub outcome: Outcome,
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct ChecklistReport {
    pub items: Vec<ChecklistItem>,
}

impl ChecklistReport {
    pub fn item(&self, which: DefinitionItem) -> Outcome {
        self.items
            .iter()
            .filter(|i| i.item == which)
            .fold(Outcome::Pass, |acc, i| acc.combine(i.outcome))
    }

    pub fn overall(&self) -> Outcome {
        self.items
            .iter()
            .fold(Outcome::Pass, |acc, i| acc.combine(i.outcome))
    }
}

/// The twists at which cohomology must be supplied.
pub const REQUIRED_TWISTS: [Twist; 5] = [
    Twist::new(0, 0),
    Twist::new(-4, 1),
    Twist::new(-2, 1),
    Twist::new(0, -1),
    Twist::new(-1, 1),
];

/// Evaluates the vanishing conditions on caller-supplied cohomology tables.
/// Missing tables give [`Outcome::Unknown`].
pub fn definition_checklist(
    d: &InstantonData,
    tables: &BTreeMap<Twist, CohomTable>,
) -> ChecklistReport {
    let required: [(DefinitionItem, Twist, usize); 6] = [
        (DefinitionItem::I, Twist::new(0, 0), 0),
        (DefinitionItem::I, Twist::new(-4, 1), 3),
        (DefinitionItem::II, Twist::new(-2, 1), 1),
        (DefinitionItem::II, Twist::new(-2, 1), 2),
        (DefinitionItem::III, Twist::new(0, -1), 2),
        (DefinitionItem::III, Twist::new(-1, 1), 2),
    ];
    let mut items: Vec<ChecklistItem> = required
        .iter()
        .map(|&(item, twist, degree)| {
            let outcome = tables
                .get(&twist)
                .and_then(|t| t.get(degree))
                .map_or(Outcome::Unknown, |h| Outcome::from_bool(h == 0));
            ChecklistItem {
                item,
                twist,
                degree: Some(degree),
                outcome,
            }
        })
        .collect();
    let twist = Twist::new(-2, 1);
    let chi = d.chern().euler_characteristic(twist);
    items.push(ChecklistItem {
        item: DefinitionItem::EulerCharacteristic,
        twist,
        degree: None,
        outcome: chi.map_or(Outcome::Unknown, |c| Outcome::from_bool(c == 0)),
    });
    ChecklistReport { items }
}

/// `h⁰ = h¹ = 0` for `Q(−2,1)`, where `Q` is the given line bundle pushed
/// forward from a union of rational curves.
pub fn rank0_instanton_check(q: &CurveSheafData) -> Result<bool> {
    q.require_rational()?;
    Ok(q.twisted(Twist::new(-2, 1))
        .degrees()
        .iter()
        .all(|&d| d == -1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::cohomology_table;
    use crate::curves::{CurveComponent, CurveProfile};
    use alloc::vec;

    fn ring() -> ChowRing {
        ChowRing::default()
    }

    #[test]
    fn admissibility_examples() {
        assert!(is_admissible_charge(2, 1, 0));
        assert!(!is_admissible_charge(2, 1, 1));
        assert!(!is_admissible_charge(2, 0, 0));
        assert!(!is_admissible_charge(2, 3, 4));
    }

    #[test]
    fn constructor_checks() {
        assert_eq!(
            InstantonData::new(2, 1, 1, 0, 0),
            Err(Error::InadmissibleCharge { r: 2, k: 1, l: 1 })
        );
        assert!(matches!(
            InstantonData::new(2, 1, 0, 1, 0),
            Err(Error::ParityViolation { .. })
        ));
        assert_eq!(
            InstantonData::new(2, 1, 0, 0, -1),
            Err(Error::NegativeGamma(-1))
        );
        let c = ChernData::new(2, 2, 0, 1, 0, 0).unwrap();
        assert_eq!(
            InstantonData::from_chern(c, 0),
            Err(Error::NonZeroFirstChern { a: 2, b: 0 })
        );
    }

    #[test]
    fn shape_examples() {
        let s = monad_shape(&InstantonData::new(2, 1, 0, 0, 0).unwrap());
        assert_eq!(s.multiplicities(), [0, 1, 0, 1, 2, 0]);
        let s = monad_shape(&InstantonData::new(2, 2, 2, 0, 0).unwrap());
        assert_eq!(s.multiplicities(), [2, 0, 0, 2, 0, 0]);
        let s = monad_shape(&InstantonData::new(2, 1, 0, 0, 3).unwrap());
        assert_eq!(s.multiplicities(), [3, 1, 3, 1, 2, 0]);
        assert!(MonadShape::from_charge(2, 1, 1, 0).is_err());
    }

    #[test]
    fn monad_character_c2_example() {
        let r = ring();
        let d = InstantonData::new(2, 1, 0, 0, 0).unwrap();
        let ch = monad_shape(&d).character(&r);
        assert_eq!(ch, ChowClass::from_ints(2, 0, 0, -1, 0, 0));
        assert!(monad_chern_check(&r, &d, &monad_shape(&d)));
    }

    #[test]
    fn monad_check_detects_wrong_shape() {
        let r = ring();
        let d = InstantonData::new(2, 2, 1, 0, 0).unwrap();
        let mut s = monad_shape(&d);
        s.middle_omega += 1;
        let report = monad_chern_report(&r, &d, &s);
        assert!(!report.rank);
        assert!(!monad_chern_check(&r, &d, &s));
    }

    #[test]
    fn monad_identities_sweep() {
        let r = ring();
        for rank in 0..=4 {
            for k in 0..=8 {
                for l in 0..=8 {
                    for gamma in 0..=8 {
                        if !is_admissible_charge(rank, k, l) {
                            continue;
                        }
                        let d = InstantonData::new(rank, k, l, 0, gamma).unwrap();
                        let s = monad_shape(&d);
                        assert_eq!(s.alternating_rank(), rank);
                        assert!(monad_chern_check(&r, &d, &s), "{rank} {k} {l} {gamma}");
                    }
                }
            }
        }
    }

    #[test]
    fn monad_terms_have_expected_cohomology() {
        for b in [
            BundleDescriptor::line(-1, 1),
            BundleDescriptor::line(-2, 2),
            BundleDescriptor::line(-1, 0),
            BundleDescriptor::line(-2, 1),
            BundleDescriptor::omega(1, -1),
            BundleDescriptor::omega(0, -1),
        ] {
            assert!(cohomology_table(b).is_zero(), "{b:?}");
        }
        // twisted by (−2,1): O(−1,1) → O(−3,2), Ω¹(1,−1) → Ω¹(−1,0), O(−1,0) → O(−3,1), O → O(−2,1)
        for b in [
            BundleDescriptor::line(-3, 2),
            BundleDescriptor::line(-3, 1),
            BundleDescriptor::line(-2, 1),
            BundleDescriptor::omega(-1, 0),
        ] {
            assert!(cohomology_table(b).is_zero(), "{b:?}");
        }
    }

    #[test]
    fn euler_characteristic_vanishes_at_minus_two_one() {
        for k in -20..=20 {
            for l in -20..=20 {
                let d = ChernData::new(2, 0, 0, k, l, 0).unwrap();
                assert_eq!(d.euler_characteristic(Twist::new(-2, 1)), Ok(0));
            }
        }
    }

    fn all_tables(t: CohomTable) -> BTreeMap<Twist, CohomTable> {
        REQUIRED_TWISTS.iter().map(|&tw| (tw, t)).collect()
    }

    #[test]
    fn checklist_examples() {
        let d = InstantonData::new(2, 1, 0, 0, 0).unwrap();
        let report = definition_checklist(&d, &all_tables(CohomTable::ZERO));
        assert_eq!(report.overall(), Outcome::Pass);
        assert_eq!(report.items.len(), 7);

        let mut tables = all_tables(CohomTable::ZERO);
        tables.insert(Twist::new(-2, 1), CohomTable::new(0, 1, 0, 0));
        let report = definition_checklist(&d, &tables);
        assert_eq!(report.item(DefinitionItem::II), Outcome::Fail);
        assert_eq!(report.item(DefinitionItem::I), Outcome::Pass);
        assert_eq!(
            report.item(DefinitionItem::EulerCharacteristic),
            Outcome::Pass
        );

        let mut tables = all_tables(CohomTable::ZERO);
        tables.remove(&Twist::new(0, -1));
        let report = definition_checklist(&d, &tables);
        assert_eq!(report.item(DefinitionItem::III), Outcome::Unknown);
        assert_eq!(report.overall(), Outcome::Unknown);
    }

    #[test]
    fn checklist_chi_for_admissible_charges() {
        for k in 1..=10 {
            for l in 0..=k {
                if let Ok(d) = InstantonData::new(2, k, l, 0, 0) {
                    let report = definition_checklist(&d, &BTreeMap::new());
                    assert_eq!(
                        report.item(DefinitionItem::EulerCharacteristic),
                        Outcome::Pass
                    );
                }
            }
        }
    }

    #[test]
    fn rank0_examples() {
        let q = CurveSheafData::new(
            CurveProfile::single(CurveComponent::pullback_line()),
            vec![-1],
        )
        .unwrap();
        assert_eq!(rank0_instanton_check(&q), Ok(false));
        let q = CurveSheafData::new(
            CurveProfile::single(CurveComponent::custom(1, 1, 0)),
            vec![0],
        )
        .unwrap();
        assert_eq!(rank0_instanton_check(&q), Ok(true));
        let q = CurveSheafData::new(CurveProfile::empty(), vec![]).unwrap();
        assert_eq!(rank0_instanton_check(&q), Ok(true));
        let q = CurveSheafData::new(
            CurveProfile::single(CurveComponent::custom(1, 0, 2)),
            vec![1],
        )
        .unwrap();
        assert_eq!(
            rank0_instanton_check(&q),
            Err(Error::PositiveGenus { index: 0, genus: 2 })
        );
    }
}
