//! Cohomology tables of `O(p,q)` and `Ω¹(p,q)`.
//!
//! The blow-up is the projective bundle `P(O ⊕ O(1))` over the plane. Its
//! relative hyperplane class is `O(1,0)`: `H` satisfies the bundle relation
//! `ξ² = ξ·pr*c1(O ⊕ O(1))`, i.e. `H² − H(H−E) = 0`, while `E` does not.
//! Hence `O(p,q) = O_rel(p+q) ⊗ pr*O(−q)` and, for `n = p+q ≥ 0`,
//!
//! ```text
//! pr_* O(p,q) = ⊕_{j=0..n} O_plane(j − q),   R¹pr_* O(p,q) = 0.
//! ```
//!
//! Fibre degree `n = −1` kills every direct image. For `n ≤ −2` Serre
//! duality with `ω = O(−4,2)` moves the computation back to `n ≥ 0`.
//! `Ω¹ = pr*Ω¹_plane` is handled the same way, with dual partner
//! `Ω¹(−1−p, −1−q)` because `(Ω¹)^∨ = Ω¹ ⊗ O(3,−3)`.

use crate::sheafdata::Twist;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum BundleKind {
    LineBundle,
    OmegaTwist,
}

/// `O(p,q)` or `Ω¹(p,q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct BundleDescriptor {
    pub kind: BundleKind,
    pub twist: Twist,
}

impl BundleDescriptor {
    pub fn line(p: i64, q: i64) -> Self {
        BundleDescriptor {
            kind: BundleKind::LineBundle,
            twist: Twist::new(p, q),
        }
    }

    pub fn omega(p: i64, q: i64) -> Self {
        BundleDescriptor {
            kind: BundleKind::OmegaTwist,
            twist: Twist::new(p, q),
        }
    }

    /// The bundle whose cohomology is Serre dual to this one.
    pub fn serre_partner(&self) -> Self {
        let Twist { p, q } = self.twist;
        match self.kind {
            BundleKind::LineBundle => BundleDescriptor::line(-4 - p, 2 - q),
            BundleKind::OmegaTwist => BundleDescriptor::omega(-1 - p, -1 - q),
        }
    }
}

/// `(h⁰, h¹, h², h³)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CohomTable {
    pub h0: u64,
    pub h1: u64,
    pub h2: u64,
    pub h3: u64,
}

impl CohomTable {
    pub const ZERO: CohomTable = CohomTable {
        h0: 0,
        h1: 0,
        h2: 0,
        h3: 0,
    };

    pub const fn new(h0: u64, h1: u64, h2: u64, h3: u64) -> Self {
        CohomTable { h0, h1, h2, h3 }
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.h0 as i64 - self.h1 as i64 + self.h2 as i64 - self.h3 as i64
    }

    /// `(h³, h², h¹, h⁰)`.
    pub fn reversed(&self) -> Self {
        CohomTable::new(self.h3, self.h2, self.h1, self.h0)
    }

    pub fn is_zero(&self) -> bool {
        *self == CohomTable::ZERO
    }

    pub fn get(&self, i: usize) -> Option<u64> {
        match i {
            0 => Some(self.h0),
            1 => Some(self.h1),
            2 => Some(self.h2),
            3 => Some(self.h3),
            _ => None,
        }
    }
}

/// `(h⁰, h¹, h²)` of a sheaf on the plane.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct PlaneCohomology {
    pub h0: u64,
    pub h1: u64,
    pub h2: u64,
}

impl PlaneCohomology {
    pub const fn new(h0: u64, h1: u64, h2: u64) -> Self {
        PlaneCohomology { h0, h1, h2 }
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.h0 as i64 - self.h1 as i64 + self.h2 as i64
    }
}

fn choose2(n: i64) -> u64 {
    if n < 2 {
        0
    } else {
        (n * (n - 1) / 2) as u64
    }
}

/// Cohomology of `O(d)` on the plane.
pub fn plane_cohomology(d: i64) -> PlaneCohomology {
    let h0 = if d >= 0 { choose2(d + 2) } else { 0 };
    let h2 = if d <= -3 { choose2(-d - 1) } else { 0 };
    PlaneCohomology::new(h0, 0, h2)
}

/// Cohomology of `Ω¹(d)` on the plane; `χ = d² − 1`.
pub fn plane_cotangent_cohomology(d: i64) -> PlaneCohomology {
    let sq = (d * d - 1).max(0) as u64;
    let h0 = if d >= 2 { sq } else { 0 };
    let h1 = u64::from(d == 0);
    let h2 = if d <= -2 { sq } else { 0 };
    PlaneCohomology::new(h0, h1, h2)
}

/// Full cohomology table of `O(p,q)` or `Ω¹(p,q)`.
pub fn cohomology_table(b: BundleDescriptor) -> CohomTable {
    let Twist { p, q } = b.twist;
    let fibre = p + q;
    match fibre {
        -1 => CohomTable::ZERO,
        n if n >= 0 => {
            let plane = match b.kind {
                BundleKind::LineBundle => plane_cohomology,
                BundleKind::OmegaTwist => plane_cotangent_cohomology,
            };
            // no higher direct images: plane h^i lands in ambient degree i
            (0..=n)
                .map(|j| plane(j - q))
                .fold(CohomTable::ZERO, |acc, c| {
                    CohomTable::new(acc.h0 + c.h0, acc.h1 + c.h1, acc.h2 + c.h2, 0)
                })
        }
        _ => cohomology_table(b.serre_partner()).reversed(),
    }
}

pub fn is_cohomologically_trivial(b: BundleDescriptor) -> bool {
    cohomology_table(b).is_zero()
}

/// The direct image `π_* O(qE)` under the blow-down.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum DirectImage {
    StructureSheaf,
    /// `I_{p0}^n`, a power of the ideal of the blown-up point.
    IdealPower(u64),
}

pub fn pushforward_line_bundle(q: i64) -> DirectImage {
    if q < 0 {
        DirectImage::IdealPower(q.unsigned_abs())
    } else {
        DirectImage::StructureSheaf
    }
}
