//! Exact intersection theory and sheaf bookkeeping on the blow-up of
//! projective 3-space at a point.
//!
//! The crate is `no_std` (it needs `alloc`) and performs every computation
//! with exact rationals. It covers:
//!
//! * [`chow`]: the Chow ring `Z[E,H]/(E·H, E³ − H³)`, degrees and the Todd class;
//! * [`sheafdata`]: numerical Chern data, twisting, duals and Euler characteristics;
//! * [`cohomology`]: full cohomology tables of line bundles and twisted
//!   pull-backs of the plane cotangent bundle;
//! * [`instanton`]: charge admissibility, the instanton vanishing checklist
//!   and monad term ranks;
//! * [`curves`]: curve profiles and pushforward Chern characters;
//! * [`transform`]: elementary transformations and their charge arithmetic;
//! * [`deformation`]: deformation-space dimension counts at boundary points.

#![cfg_attr(not(any(test, feature = "std")), no_std)]
#![deny(unsafe_code)]

extern crate alloc;

pub mod chow;
pub mod cohomology;
pub mod curves;
pub mod deformation;
mod error;
pub mod instanton;
pub mod sheafdata;
pub mod transform;

pub use chow::{ChowClass, ChowRing, Epsilon, Rational, ToddClass};
pub use cohomology::{BundleDescriptor, BundleKind, CohomTable, DirectImage, PlaneCohomology};
pub use curves::{CurveComponent, CurveProfile, CurveSheafData, LineType};
pub use deformation::{DeformationReport, LineTypeTable};
pub use error::{Error, Result};
pub use instanton::{ChecklistReport, Freeness, InstantonData, MonadShape, Outcome, Stability};
pub use sheafdata::{ChernData, Twist};
pub use transform::{
    ElementaryData, ElementaryReport, ElementaryStep, THooftSeed, TrajectoryPoint, Verdict, Witness,
};
