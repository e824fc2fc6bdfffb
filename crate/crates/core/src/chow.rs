//! The Chow ring `A*(X) = Z[E,H] / (E·H, E³ − H³)` of the blow-up, with
//! rational coefficients.
//!
//! A class is stored by its six coordinates in the basis
//! `1, H, E, H², E², [pt]` where `[pt] = H³`. Products above codimension 3
//! vanish. The only convention that is not forced by the presentation is the
//! sign `ε = deg(E³)`; it lives in [`ChowRing`] and defaults to `+1`.

use alloc::string::String;
use core::fmt::{self, Write as _};
use core::ops::{Add, AddAssign, Neg, Sub, SubAssign};
use core::str::FromStr;

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

pub type Rational = Ratio<i128>;

pub(crate) fn rat(n: i64) -> Rational {
    Rational::from_integer(i128::from(n))
}

pub(crate) fn frac(n: i64, d: i64) -> Rational {
    Rational::new(i128::from(n), i128::from(d))
}

/// Exact integer value of a rational, if it has one.
pub(crate) fn to_integer(x: Rational) -> Option<i64> {
    if x.is_integer() {
        i64::try_from(x.to_integer()).ok()
    } else {
        None
    }
}

/// Sign of the top self-intersection `deg(E³)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Epsilon {
    #[default]
    Plus,
    Minus,
}

impl Epsilon {
    pub fn value(self) -> i64 {
        match self {
            Epsilon::Plus => 1,
            Epsilon::Minus => -1,
        }
    }

    pub fn from_sign(v: i64) -> Option<Self> {
        match v {
            1 => Some(Epsilon::Plus),
            -1 => Some(Epsilon::Minus),
            _ => None,
        }
    }
}

/// A class `r + (aH + bE) + (sH² + tE²) + u[pt]`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct ChowClass {
    pub deg0: Rational,
    pub h: Rational,
    pub e: Rational,
    pub h2: Rational,
    pub e2: Rational,
    pub pt: Rational,
}

impl ChowClass {
    pub fn new(
        deg0: Rational,
        h: Rational,
        e: Rational,
        h2: Rational,
        e2: Rational,
        pt: Rational,
    ) -> Self {
        ChowClass {
            deg0,
            h,
            e,
            h2,
            e2,
            pt,
        }
    }

    /// Class with integer coordinates.
    pub fn from_ints(deg0: i64, h: i64, e: i64, h2: i64, e2: i64, pt: i64) -> Self {
        ChowClass::new(rat(deg0), rat(h), rat(e), rat(h2), rat(e2), rat(pt))
    }

    pub fn zero() -> Self {
        ChowClass::default()
    }

    pub fn one() -> Self {
        ChowClass::scalar(Rational::one())
    }

    pub fn scalar(c: Rational) -> Self {
        ChowClass {
            deg0: c,
            ..Default::default()
        }
    }

    pub fn hyperplane() -> Self {
        ChowClass {
            h: Rational::one(),
            ..Default::default()
        }
    }

    pub fn exceptional() -> Self {
        ChowClass {
            e: Rational::one(),
            ..Default::default()
        }
    }

    pub fn hyperplane_sq() -> Self {
        ChowClass {
            h2: Rational::one(),
            ..Default::default()
        }
    }

    pub fn exceptional_sq() -> Self {
        ChowClass {
            e2: Rational::one(),
            ..Default::default()
        }
    }

    pub fn point() -> Self {
        ChowClass {
            pt: Rational::one(),
            ..Default::default()
        }
    }

    /// Divisor class `aH + bE`.
    pub fn divisor(a: i64, b: i64) -> Self {
        ChowClass {
            h: rat(a),
            e: rat(b),
            ..Default::default()
        }
    }

    /// Codimension-2 class `sH² + tE²`.
    pub fn curve(s: i64, t: i64) -> Self {
        ChowClass {
            h2: rat(s),
            e2: rat(t),
            ..Default::default()
        }
    }

    /// Coefficient of `[pt]`.
    pub fn degree(&self) -> Rational {
        self.pt
    }

    pub fn scale(&self, c: Rational) -> Self {
        ChowClass {
            deg0: self.deg0 * c,
            h: self.h * c,
            e: self.e * c,
            h2: self.h2 * c,
            e2: self.e2 * c,
            pt: self.pt * c,
        }
    }

    /// The homogeneous part of codimension `codim` (0..=3).
    pub fn part(&self, codim: usize) -> Self {
        let z = Rational::zero();
        match codim {
            0 => ChowClass {
                deg0: self.deg0,
                ..Default::default()
            },
            1 => ChowClass {
                h: self.h,
                e: self.e,
                ..Default::default()
            },
            2 => ChowClass {
                h2: self.h2,
                e2: self.e2,
                ..Default::default()
            },
            3 => ChowClass {
                pt: self.pt,
                ..Default::default()
            },
            _ => ChowClass::scalar(z),
        }
    }

    pub fn is_zero(&self) -> bool {
        *self == ChowClass::zero()
    }

    pub fn is_integral(&self) -> bool {
        self.coords().iter().all(|c| c.is_integer())
    }

    fn coords(&self) -> [Rational; 6] {
        [self.deg0, self.h, self.e, self.h2, self.e2, self.pt]
    }
}

impl Add for ChowClass {
    type Output = ChowClass;

    fn add(self, rhs: ChowClass) -> ChowClass {
        ChowClass {
            deg0: self.deg0 + rhs.deg0,
            h: self.h + rhs.h,
            e: self.e + rhs.e,
            h2: self.h2 + rhs.h2,
            e2: self.e2 + rhs.e2,
            pt: self.pt + rhs.pt,
        }
    }
}

impl AddAssign for ChowClass {
    fn add_assign(&mut self, rhs: ChowClass) {
        *self = *self + rhs;
    }
}

impl Neg for ChowClass {
    type Output = ChowClass;

    fn neg(self) -> ChowClass {
        self.scale(-Rational::one())
    }
}

impl Sub for ChowClass {
    type Output = ChowClass;

    fn sub(self, rhs: ChowClass) -> ChowClass {
        self + (-rhs)
    }
}

impl SubAssign for ChowClass {
    fn sub_assign(&mut self, rhs: ChowClass) {
        *self = *self - rhs;
    }
}

impl core::iter::Sum for ChowClass {
    fn sum<I: Iterator<Item = ChowClass>>(iter: I) -> ChowClass {
        iter.fold(ChowClass::zero(), Add::add)
    }
}

/// Multiplication context: the ring relations plus the sign `ε = deg(E³)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct ChowRing {
    pub epsilon: Epsilon,
}

impl ChowRing {
    pub fn new(epsilon: Epsilon) -> Self {
        ChowRing { epsilon }
    }

    pub fn mul(&self, x: &ChowClass, y: &ChowClass) -> ChowClass {
        let eps = rat(self.epsilon.value());
        // H·E = 0, H·H² = [pt], E·E² = ε[pt], H·E² = E·H² = 0
        ChowClass {
            deg0: x.deg0 * y.deg0,
            h: x.deg0 * y.h + x.h * y.deg0,
            e: x.deg0 * y.e + x.e * y.deg0,
            h2: x.deg0 * y.h2 + x.h2 * y.deg0 + x.h * y.h,
            e2: x.deg0 * y.e2 + x.e2 * y.deg0 + x.e * y.e,
            pt: x.deg0 * y.pt
                + x.pt * y.deg0
                + x.h * y.h2
                + x.h2 * y.h
                + eps * (x.e * y.e2 + x.e2 * y.e),
        }
    }

    pub fn pow(&self, x: &ChowClass, n: u32) -> ChowClass {
        (0..n).fold(ChowClass::one(), |acc, _| self.mul(&acc, x))
    }

    /// `exp(x)` truncated at codimension 3; `x` should have no constant term.
    pub fn exp(&self, x: &ChowClass) -> ChowClass {
        let x2 = self.mul(x, x);
        let x3 = self.mul(&x2, x);
        ChowClass::one() + *x + x2.scale(frac(1, 2)) + x3.scale(frac(1, 6))
    }

    /// Chern character of the line bundle `O(p,q)`.
    pub fn line_bundle_character(&self, p: i64, q: i64) -> ChowClass {
        self.exp(&ChowClass::divisor(p, q))
    }

    /// The Todd class of the blow-up.
    pub fn todd_class(&self) -> ToddClass {
        ToddClass::new()
    }

    /// `∫ ch · Td`.
    pub fn hirzebruch_riemann_roch(&self, ch: &ChowClass) -> Rational {
        self.mul(ch, self.todd_class().class()).degree()
    }

    /// Canonical class `K = −4H + 2E`.
    pub fn canonical_class(&self) -> ChowClass {
        ChowClass::divisor(-4, 2)
    }
}

/// `Td(X) = 1 + (2H − E) + (11/6 H² + 1/3 E²) + [pt]`.
///
/// The codimension-1 part is `−K/2`; the higher parts are the unique values
/// for which `∫ ch(O(p,q))·Td` reproduces the line-bundle Euler
/// characteristic for every `p, q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ToddClass(ChowClass);

impl ToddClass {
    fn new() -> Self {
        ToddClass(ChowClass::new(
            rat(1),
            rat(2),
            rat(-1),
            frac(11, 6),
            frac(1, 3),
            rat(1),
        ))
    }

    pub fn class(&self) -> &ChowClass {
        &self.0
    }
}

impl fmt::Display for ChowClass {
    /// Writes `r + a H + b E + s H2 + t E2 + u P`, skipping zero terms.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = [
            (self.deg0, ""),
            (self.h, "H"),
            (self.e, "E"),
            (self.h2, "H2"),
            (self.e2, "E2"),
            (self.pt, "P"),
        ];
        let mut out = String::new();
        for (c, sym) in terms.iter().filter(|(c, _)| !c.is_zero()) {
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let abs = c.abs();
            write!(out, "{abs}")?;
            if !sym.is_empty() {
                write!(out, " {sym}")?;
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

/// Error from parsing the textual class notation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseClassError {
    pub message: String,
}

impl fmt::Display for ParseClassError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "malformed class literal: {}", self.message)
    }
}

#[cfg(feature = "std")]
impl std::error::Error for ParseClassError {}

fn parse_error(message: &str) -> ParseClassError {
    ParseClassError {
        message: String::from(message),
    }
}

fn parse_rational(s: &str) -> Result<Rational, ParseClassError> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let num: i128 = num.parse().map_err(|_| parse_error(s))?;
    let den: i128 = den.parse().map_err(|_| parse_error(s))?;
    if den == 0 {
        return Err(parse_error("zero denominator"));
    }
    Ok(Rational::new(num, den))
}

impl FromStr for ChowClass {
    type Err = ParseClassError;

    /// Parses `"r + a H + b E + s H2 + t E2 + u P"`; coefficients are
    /// rational literals `p/q`, omitted terms are zero, a bare symbol has
    /// coefficient 1 and repeated symbols accumulate.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(parse_error("empty"));
        }
        let mut class = ChowClass::zero();
        let mut rest = compact.as_str();
        while !rest.is_empty() {
            let mut negative = false;
            if let Some(r) = rest.strip_prefix('+') {
                rest = r;
            } else if let Some(r) = rest.strip_prefix('-') {
                negative = true;
                rest = r;
            }
            let end = rest.find(['+', '-']).unwrap_or(rest.len());
            if end == 0 {
                return Err(parse_error("dangling sign"));
            }
            let term = &rest[..end];
            rest = &rest[end..];
            let split = term
                .find(|c: char| c.is_ascii_alphabetic())
                .unwrap_or(term.len());
            let (coef, sym) = term.split_at(split);
            let mut c = if coef.is_empty() {
                Rational::one()
            } else {
                parse_rational(coef)?
            };
            if negative {
                c = -c;
            }
            match sym {
                "" => class.deg0 += c,
                "H" => class.h += c,
                "E" => class.e += c,
                "H2" => class.h2 += c,
                "E2" => class.e2 += c,
                "P" => class.pt += c,
                _ => return Err(parse_error(sym)),
            }
        }
        Ok(class)
    }
}

#[cfg(feature = "serde")]
impl serde::Serialize for ChowClass {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
