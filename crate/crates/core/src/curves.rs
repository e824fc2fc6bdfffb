//! Curves on the blow-up, described by intersection profiles.
//!
//! A component is recorded by `(H·Σ, E·Σ, genus)` rather than by a class
//! label; its class in `A²` follows from the intersection numbers once the
//! sign `ε = deg(E³)` is fixed.

use alloc::vec::Vec;

use crate::chow::{rat, ChowClass, ChowRing, Rational};
use crate::cohomology::CohomTable;
use crate::error::{Error, Result};
use crate::sheafdata::Twist;

/// Catalogued line types.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum LineType {
    /// Pull-back of a line of 3-space missing the blown-up point: `(1, 0)`.
    PullbackLine,
    /// Fibre of the projection to the plane: `(1, 1)`.
    FiberLine,
    /// Line inside the exceptional plane: `(0, −1)`.
    ExceptionalLine,
    Custom,
}

impl LineType {
    pub fn letter(self) -> char {
        match self {
            LineType::PullbackLine => 'P',
            LineType::FiberLine => 'F',
            LineType::ExceptionalLine => 'X',
            LineType::Custom => 'C',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CurveComponent {
    /// `H·Σ_c`
    pub hdot: i64,
    /// `E·Σ_c`
    pub edot: i64,
    pub genus: u32,
    pub tag: LineType,
}

impl CurveComponent {
    pub const fn pullback_line() -> Self {
        CurveComponent {
            hdot: 1,
            edot: 0,
            genus: 0,
            tag: LineType::PullbackLine,
        }
    }

    pub const fn fiber_line() -> Self {
        CurveComponent {
            hdot: 1,
            edot: 1,
            genus: 0,
            tag: LineType::FiberLine,
        }
    }

    pub const fn exceptional_line() -> Self {
        CurveComponent {
            hdot: 0,
            edot: -1,
            genus: 0,
            tag: LineType::ExceptionalLine,
        }
    }

    pub const fn custom(hdot: i64, edot: i64, genus: u32) -> Self {
        CurveComponent {
            hdot,
            edot,
            genus,
            tag: LineType::Custom,
        }
    }

    /// Catalogue component for a line type; `None` for [`LineType::Custom`].
    pub fn catalog(tag: LineType) -> Option<Self> {
        match tag {
            LineType::PullbackLine => Some(Self::pullback_line()),
            LineType::FiberLine => Some(Self::fiber_line()),
            LineType::ExceptionalLine => Some(Self::exceptional_line()),
            LineType::Custom => None,
        }
    }

    /// Degree of `O(p,q)` restricted to the component.
    pub fn restriction_degree(&self, t: Twist) -> i64 {
        t.p * self.hdot + t.q * self.edot
    }

    /// `hdot·H² + ε·edot·E²`.
    pub fn class(&self, ring: &ChowRing) -> ChowClass {
        ChowClass::curve(self.hdot, ring.epsilon.value() * self.edot)
    }
}

/// A reduced curve, as a list of components.
///
/// `disjoint` is the caller's assertion that the components are pairwise
/// disjoint; it is carried, never verified.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CurveProfile {
    pub components: Vec<CurveComponent>,
    pub disjoint: bool,
}

impl CurveProfile {
    pub fn empty() -> Self {
        CurveProfile {
            components: Vec::new(),
            disjoint: true,
        }
    }

    pub fn new(components: Vec<CurveComponent>, disjoint: bool) -> Self {
        CurveProfile {
            components,
            disjoint,
        }
    }

    /// Disjoint union of `pullback` pulled-back lines, `fiber` fibre lines
    /// and `exceptional` lines in the exceptional plane.
    pub fn lines(pullback: usize, fiber: usize, exceptional: usize) -> Self {
        let mut components = Vec::with_capacity(pullback + fiber + exceptional);
        components.extend(core::iter::repeat_n(
            CurveComponent::pullback_line(),
            pullback,
        ));
        components.extend(core::iter::repeat_n(CurveComponent::fiber_line(), fiber));
        components.extend(core::iter::repeat_n(
            CurveComponent::exceptional_line(),
            exceptional,
        ));
        CurveProfile {
            components,
            disjoint: true,
        }
    }

    pub fn single(c: CurveComponent) -> Self {
        CurveProfile {
            components: alloc::vec![c],
            disjoint: true,
        }
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn count(&self, tag: LineType) -> usize {
        self.components.iter().filter(|c| c.tag == tag).count()
    }

    /// Disjoint union; the result is disjoint only if both inputs claim it.
    pub fn union(&self, other: &CurveProfile) -> CurveProfile {
        let mut components = self.components.clone();
        components.extend_from_slice(&other.components);
        CurveProfile {
            components,
            disjoint: self.disjoint && other.disjoint,
        }
    }
}

/// `Σ_c hdot_c·H² + ε·edot_c·E²`.
pub fn curve_class(ring: &ChowRing, profile: &CurveProfile) -> ChowClass {
    profile.components.iter().map(|c| c.class(ring)).sum()
}

/// A line bundle on a curve, given by its degree on each component.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CurveSheafData {
    profile: CurveProfile,
    degrees: Vec<i64>,
}

impl CurveSheafData {
    pub fn new(profile: CurveProfile, degrees: Vec<i64>) -> Result<Self> {
        if profile.len() != degrees.len() {
            return Err(Error::DegreeCountMismatch {
                components: profile.len(),
                degrees: degrees.len(),
            });
        }
        Ok(CurveSheafData { profile, degrees })
    }

    /// Degree `g − 1` on every component, as elementary transformation data
    /// requires.
    pub fn theta_characteristic_degrees(profile: CurveProfile) -> Self {
        let degrees = profile
            .components
            .iter()
            .map(|c| i64::from(c.genus) - 1)
            .collect();
        CurveSheafData { profile, degrees }
    }

    pub fn profile(&self) -> &CurveProfile {
        &self.profile
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    /// The same curve carrying `L ⊗ O(t)|_Σ`.
    pub fn twisted(&self, t: Twist) -> Self {
        let degrees = self
            .profile
            .components
            .iter()
            .zip(&self.degrees)
            .map(|(c, d)| d + c.restriction_degree(t))
            .collect();
        CurveSheafData {
            profile: self.profile.clone(),
            degrees,
        }
    }

    fn components(&self) -> impl Iterator<Item = (usize, &CurveComponent, i64)> + '_ {
        self.profile
            .components
            .iter()
            .zip(&self.degrees)
            .enumerate()
            .map(|(i, (c, d))| (i, c, *d))
    }

    pub(crate) fn require_rational(&self) -> Result<()> {
        match self.components().find(|(_, c, _)| c.genus > 0) {
            Some((index, c, _)) => Err(Error::PositiveGenus {
                index,
                genus: c.genus,
            }),
            None => Ok(()),
        }
    }
}

/// `A*(Σ_c) = Z·1 ⊕ Z·[pt]` for a single component.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct CurveChow {
    fundamental: Rational,
    points: Rational,
}

impl CurveChow {
    fn new(fundamental: i64, points: i64) -> Self {
        CurveChow {
            fundamental: rat(fundamental),
            points: rat(points),
        }
    }

    fn mul(self, other: CurveChow) -> CurveChow {
        CurveChow {
            fundamental: self.fundamental * other.fundamental,
            points: self.fundamental * other.points + self.points * other.fundamental,
        }
    }

    /// `i_*`: the fundamental class goes to the component class, a point to `[pt]`.
    fn push_forward(self, class: ChowClass) -> ChowClass {
        class.scale(self.fundamental) + ChowClass::point().scale(self.points)
    }
}

/// `ch(i_*(L ⊗ O(t)))`, by Grothendieck–Riemann–Roch:
/// `i_*[ch(L ⊗ i*O(t)) · Td(N)^{-1}]` with
/// `Td(N)^{-1} = 1 − (deg O(2,−1)|_Σ + g − 1)[pt]`.
pub fn grr_pushforward(ring: &ChowRing, d: &CurveSheafData, t: Twist) -> ChowClass {
    d.components()
        .map(|(_, c, deg)| {
            let ch = CurveChow::new(1, deg + c.restriction_degree(t));
            let normal = c.restriction_degree(Twist::new(2, -1)) + i64::from(c.genus) - 1;
            let td_inv = CurveChow::new(1, -normal);
            ch.mul(td_inv).push_forward(c.class(ring))
        })
        .sum()
}

/// Cohomology of `i_*(L ⊗ O(t))` for a union of rational components.
pub fn twisted_curve_cohomology(d: &CurveSheafData, t: Twist) -> Result<CohomTable> {
    d.require_rational()?;
    let mut table = CohomTable::ZERO;
    for (_, c, deg) in d.components() {
        let n = deg + c.restriction_degree(t);
        table.h0 += (n + 1).max(0) as u64;
        table.h1 += (-n - 1).max(0) as u64;
    }
    Ok(table)
}
