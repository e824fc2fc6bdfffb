//! Dimension counts for deformations of elementary transforms of t'Hooft
//! bundles along a single line.
//!
//! For such a transform `F`,
//! `ext¹(F,F) = h⁰(Ext¹(F,F)) + h¹(Hom(F,F))` and
//! `h¹(Hom(F,F)) = 8k − 4l − 3 + h⁰(i_*L⊗²(4,−2))`.

use alloc::vec::Vec;

use crate::curves::{
    twisted_curve_cohomology, CurveComponent, CurveProfile, CurveSheafData, LineType,
};
use crate::error::{Error, Result};
use crate::instanton::is_admissible_charge;
use crate::sheafdata::Twist;

/// `8k − 4l − 3`, the dimension of the t'Hooft component of charge `(k, l)`.
pub fn thooft_component_dimension(k: i64, l: i64) -> Result<i64> {
    if !is_admissible_charge(2, k, l) {
        return Err(Error::InadmissibleCharge { r: 2, k, l });
    }
    Ok(8 * k - 4 * l - 3)
}

fn catalog_component(tag: LineType) -> Result<CurveComponent> {
    CurveComponent::catalog(tag).ok_or(Error::UnsupportedLineType(tag))
}

/// Degree of `L⊗²(4,−2)` on the line, with `deg L = −1`.
fn twisted_square(c: CurveComponent) -> CurveSheafData {
    let square = 2 * (i64::from(c.genus) - 1);
    CurveSheafData::new(CurveProfile::single(c), alloc::vec![square])
        .expect("one degree for one component")
        .twisted(Twist::new(4, -2))
}

/// `h⁰(i_*L⊗²(4,−2))` for a catalogue line.
pub fn h0_twisted_square(tag: LineType) -> Result<u64> {
    let c = catalog_component(tag)?;
    Ok(twisted_curve_cohomology(&twisted_square(c), Twist::ZERO)?.h0)
}

/// Local `Ext¹(F,F)` data along the line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct LineTypeEntry {
    pub tag: LineType,
    pub h0_local: u64,
    pub h1_local: u64,
    /// Degrees of the summands of `Ext¹(F,F)` on the line.
    pub local_ext_degrees: [i64; 3],
}

impl LineTypeEntry {
    /// `(h⁰, h¹)` recomputed from the splitting.
    pub fn from_degrees(&self) -> (u64, u64) {
        self.local_ext_degrees.iter().fold((0, 0), |(h0, h1), &d| {
            (h0 + (d + 1).max(0) as u64, h1 + (-d - 1).max(0) as u64)
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct LineTypeTable {
    pub entries: [LineTypeEntry; 2],
}

impl LineTypeTable {
    pub const CATALOG: LineTypeTable = LineTypeTable {
        entries: [
            LineTypeEntry {
                tag: LineType::PullbackLine,
                h0_local: 5,
                h1_local: 0,
                local_ext_degrees: [1, 1, 0],
            },
            LineTypeEntry {
                tag: LineType::FiberLine,
                h0_local: 3,
                h1_local: 0,
                local_ext_degrees: [1, 0, -1],
            },
        ],
    };

    pub fn get(&self, tag: LineType) -> Result<&LineTypeEntry> {
        self.entries
            .iter()
            .find(|e| e.tag == tag)
            .ok_or(Error::UnsupportedLineType(tag))
    }
}

const HYPOTHESIS_NOTE: &str =
    "only h1(i_*L^2(4,-2)) = 0 is required; its h0 is nonzero and enters h1_hom";

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct DeformationReport {
    pub ext1: i64,
    pub h0_local_ext: u64,
    pub h1_local_ext: u64,
    pub h1_hom: i64,
    pub h0_twisted_square: u64,
    /// `8k′ − 4l′ − 3` at the boundary component.
    pub component_dimension: i64,
    pub smooth: bool,
    pub boundary_component: (i64, i64),
    pub notes: &'static str,
}

/// Report for the transform of a charge-`(k, l)` t'Hooft bundle along one
/// line of type `tag`.
pub fn transform_deformation_report(k: i64, l: i64, tag: LineType) -> Result<DeformationReport> {
    let entry = LineTypeTable::CATALOG.get(tag)?;
    let base = thooft_component_dimension(k, l)?;
    let c = catalog_component(tag)?;
    let square = twisted_curve_cohomology(&twisted_square(c), Twist::ZERO)?;
    if square.h1 != 0 {
        return Err(Error::NotSmooth { index: 0 });
    }
    let h1_hom = base + square.h0 as i64;
    let ext1 = entry.h0_local as i64 + h1_hom;
    let boundary_component = (k + c.hdot, l + c.edot);
    let component_dimension =
        thooft_component_dimension(boundary_component.0, boundary_component.1)?;
    Ok(DeformationReport {
        ext1,
        h0_local_ext: entry.h0_local,
        h1_local_ext: entry.h1_local,
        h1_hom,
        h0_twisted_square: square.h0,
        component_dimension,
        smooth: entry.h1_local == 0 && ext1 == component_dimension,
        boundary_component,
        notes: HYPOTHESIS_NOTE,
    })
}

/// Dimension of the component reached after transforming along `steps`
/// one line at a time; every intermediate point must be smooth.
pub fn iterated_deformation_dimension(k: i64, l: i64, steps: &[LineType]) -> Result<i64> {
    let (k, l) = deformation_path(k, l, steps)?
        .last()
        .map_or((k, l), |r| r.boundary_component);
    thooft_component_dimension(k, l)
}

/// The per-step reports behind [`iterated_deformation_dimension`].
pub fn deformation_path(k: i64, l: i64, steps: &[LineType]) -> Result<Vec<DeformationReport>> {
    let mut charge = (k, l);
    let mut reports = Vec::with_capacity(steps.len());
    for (index, &tag) in steps.iter().enumerate() {
        let report = transform_deformation_report(charge.0, charge.1, tag)?;
        if !report.smooth {
            return Err(Error::NotSmooth { index });
        }
        charge = report.boundary_component;
        reports.push(report);
    }
    Ok(reports)
}
