use core::fmt;

use crate::curves::LineType;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Validation failures raised by the calculators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Rank must be non-negative.
    NegativeRank(i64),
    /// `m ≢ k(a+4) − l(b−6) (mod 2)`.
    ParityViolation {
        k: i64,
        l: i64,
        a: i64,
        b: i64,
        m: i64,
    },
    /// The Euler characteristic came out fractional.
    NonIntegralEuler,
    /// A Chern character did not convert back to integral Chern data.
    NonIntegralChern,
    /// The operation is only defined for rank 2 data.
    RankNotTwo(i64),
    /// Instanton data must have `c1 = 0`.
    NonZeroFirstChern { a: i64, b: i64 },
    /// `2k − l ≥ r` and `k − l ≥ 0` must hold.
    InadmissibleCharge { r: i64, k: i64, l: i64 },
    /// Curve cohomology is only implemented for rational components.
    PositiveGenus { index: usize, genus: u32 },
    /// Per-component degree list does not match the component count.
    DegreeCountMismatch { components: usize, degrees: usize },
    /// Elementary transformation data failed validation.
    InvalidElementaryData,
    /// A step of an iterated transformation failed validation.
    InvalidStep { index: usize },
    /// No deformation data is available for this line type.
    UnsupportedLineType(LineType),
    /// A deformation step did not land on a smooth point.
    NotSmooth { index: usize },
    /// Gamma must be non-negative.
    NegativeGamma(i64),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NegativeRank(r) => write!(f, "rank must be non-negative, got {r}"),
            Error::ParityViolation { k, l, a, b, m } => write!(
                f,
                "parity violation: m = {m} but k(a+4) - l(b-6) = {} (mod 2)",
                (k * (a + 4) - l * (b - 6)).rem_euclid(2)
            ),
            Error::NonIntegralEuler => f.write_str("Euler characteristic is not an integer"),
            Error::NonIntegralChern => {
                f.write_str("Chern character does not correspond to integral Chern data")
            }
            Error::RankNotTwo(r) => write!(f, "operation requires rank 2, got rank {r}"),
            Error::NonZeroFirstChern { a, b } => {
                write!(f, "instanton data needs c1 = 0, got {a}H + {b}E")
            }
            Error::InadmissibleCharge { r, k, l } => write!(
                f,
                "charge (k, l) = ({k}, {l}) is inadmissible for rank {r}: need 2k - l >= r and k - l >= 0"
            ),
            Error::PositiveGenus { index, genus } => write!(
                f,
                "component {index} has genus {genus}; only rational components are supported"
            ),
            Error::DegreeCountMismatch { components, degrees } => write!(
                f,
                "{degrees} degrees supplied for {components} curve components"
            ),
            Error::InvalidElementaryData => f.write_str("elementary transformation data is invalid"),
            Error::InvalidStep { index } => write!(f, "transformation step {index} is invalid"),
            Error::UnsupportedLineType(t) => {
                write!(f, "no deformation data available for line type {t:?}")
            }
            Error::NotSmooth { index } => write!(f, "step {index} does not give a smooth point"),
            Error::NegativeGamma(g) => write!(f, "gamma must be non-negative, got {g}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}
