//! Command-line literals.
//!
//! * pairs: `a,b`
//! * bundles: `O(p,q)`, `Omega1(p,q)`
//! * seeds: `thooft:k,l`
//! * curves: comma-separated `P`, `F`, `X` or `(h.e.g)`, each optionally
//!   followed by `*n`, e.g. `P*2,F,(3.-1.0)`

use blowup_core::cohomology::BundleDescriptor;
use blowup_core::{CurveComponent, CurveProfile, LineType};

use crate::error::CliError;

pub fn int(s: &str) -> Result<i64, CliError> {
    s.trim()
        .parse()
        .map_err(|_| CliError::numeric(s, "an integer"))
}

pub fn pair(s: &str) -> Result<(i64, i64), CliError> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| CliError::numeric(s, "a pair a,b"))?;
    let expected = "a pair of integers a,b";
    let a = a
        .trim()
        .parse()
        .map_err(|_| CliError::numeric(s, expected))?;
    let b = b
        .trim()
        .parse()
        .map_err(|_| CliError::numeric(s, expected))?;
    Ok((a, b))
}

pub fn bundle(s: &str) -> Result<BundleDescriptor, CliError> {
    let s = s.trim();
    let open = s.find('(').filter(|_| s.ends_with(')'));
    let Some(open) = open else {
        return Err(CliError::Usage(format!(
            "bundle {s:?} is not of the form O(p,q) or Omega1(p,q)"
        )));
    };
    let (p, q) = pair(&s[open + 1..s.len() - 1])?;
    match s[..open].trim() {
        "O" => Ok(BundleDescriptor::line(p, q)),
        "Omega1" => Ok(BundleDescriptor::omega(p, q)),
        other => Err(CliError::Usage(format!(
            "unknown bundle {other:?}; expected O or Omega1"
        ))),
    }
}

pub fn seed(s: &str) -> Result<(i64, i64), CliError> {
    match s.trim().split_once(':') {
        Some(("thooft", charge)) => pair(charge),
        _ => Err(CliError::Usage(format!(
            "seed {s:?} is not of the form thooft:k,l"
        ))),
    }
}

pub fn line_type(s: &str) -> Result<LineType, CliError> {
    match s.trim() {
        "P" => Ok(LineType::PullbackLine),
        "F" => Ok(LineType::FiberLine),
        "X" => Ok(LineType::ExceptionalLine),
        other => Err(CliError::Usage(format!(
            "unknown line type {other:?}; expected P, F or X"
        ))),
    }
}

fn component(s: &str) -> Result<CurveComponent, CliError> {
    let s = s.trim();
    if let Some(inner) = s.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
        let fields: Vec<&str> = inner.split('.').collect();
        let expected = "a custom component (h.e.g)";
        let [h, e, g] = fields[..] else {
            return Err(CliError::numeric(s, expected));
        };
        let h = h
            .trim()
            .parse()
            .map_err(|_| CliError::numeric(s, expected))?;
        let e = e
            .trim()
            .parse()
            .map_err(|_| CliError::numeric(s, expected))?;
        let g = g
            .trim()
            .parse()
            .map_err(|_| CliError::numeric(s, expected))?;
        return Ok(CurveComponent::custom(h, e, g));
    }
    let tag = line_type(s)?;
    Ok(CurveComponent::catalog(tag).expect("P, F and X are catalogued"))
}

/// One entry per comma-separated token, with `*n` expanded.
pub fn components(s: &str) -> Result<Vec<CurveComponent>, CliError> {
    let mut out = Vec::new();
    for token in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let (base, count) = match token.rsplit_once('*') {
            Some((base, n)) => {
                let n: usize = n
                    .trim()
                    .parse()
                    .map_err(|_| CliError::numeric(token, "a repeat count"))?;
                (base, n)
            }
            None => (token, 1),
        };
        let c = component(base)?;
        out.extend(std::iter::repeat_n(c, count));
    }
    Ok(out)
}

pub fn curve(s: &str) -> Result<CurveProfile, CliError> {
    Ok(CurveProfile::new(components(s)?, true))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::{EXIT_DATA, EXIT_USAGE};

    #[test]
    fn pairs() {
        assert_eq!(pair("2,-1").unwrap(), (2, -1));
        assert_eq!(pair(" -3 , 4 ").unwrap(), (-3, 4));
        assert_eq!(pair("2").unwrap_err().exit_code(), EXIT_DATA);
        assert_eq!(pair("2,x").unwrap_err().exit_code(), EXIT_DATA);
    }

    #[test]
    fn bundles() {
        assert_eq!(bundle("O(-2,1)").unwrap(), BundleDescriptor::line(-2, 1));
        assert_eq!(
            bundle("Omega1(1, -1)").unwrap(),
            BundleDescriptor::omega(1, -1)
        );
        assert_eq!(bundle("T(1,1)").unwrap_err().exit_code(), EXIT_USAGE);
        assert_eq!(bundle("O(1,a)").unwrap_err().exit_code(), EXIT_DATA);
        assert_eq!(bundle("O1,1").unwrap_err().exit_code(), EXIT_USAGE);
    }

    #[test]
    fn seeds() {
        assert_eq!(seed("thooft:3,1").unwrap(), (3, 1));
        assert_eq!(seed("other:3,1").unwrap_err().exit_code(), EXIT_USAGE);
    }

    #[test]
    fn curves() {
        let c = curve("P*2,F,(3.-1.1)").unwrap();
        assert_eq!(c.count(LineType::PullbackLine), 2);
        assert_eq!(c.count(LineType::FiberLine), 1);
        assert_eq!(c.components[3], CurveComponent::custom(3, -1, 1));
        assert!(curve("").unwrap().is_empty());
        assert_eq!(curve("(1.2)").unwrap_err().exit_code(), EXIT_DATA);
        assert_eq!(curve("P*x").unwrap_err().exit_code(), EXIT_DATA);
        assert_eq!(curve("Q").unwrap_err().exit_code(), EXIT_USAGE);
    }
}
