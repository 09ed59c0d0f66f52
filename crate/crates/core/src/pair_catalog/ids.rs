//! Case identifiers and parameter ranges.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum CaseKind {
    /// SO_n on ℝⁿ ⊕ so_n.
    A1So,
    /// O_n on ℝⁿ ⊕ so_n.
    A1O,
    /// Spin₇ on ℝ⁸ ⊕ ℝ⁷.
    A2,
    /// G₂ on ℝ⁷ ⊕ ℝ⁷.
    A3,
    /// U_n on ℂⁿ ⊕ Λ²ℂⁿ.
    A45U,
    /// SU_n on ℂⁿ ⊕ Λ²ℂⁿ.
    A45Su,
    /// U_n on ℂⁿ ⊕ u_n.
    A6,
    /// Sp_n on ℍⁿ ⊕ (HS²₀ℍⁿ ⊕ Im ℍ).
    A7Sp,
    /// U₁ × Sp_n on the same space.
    A7USp,
    /// U₁ × Spin₇ on ℂ⁸ ⊕ ℝ⁷.
    A8,
    /// Sp₁ × Sp_n on ℍⁿ ⊕ sp₁.
    A9,
    /// Sp₂ × Sp_n on ℍ² ⊗ ℍⁿ ⊕ sp₂.
    A10,
    /// U₂ × SU_n on ℂ² ⊗ ℂⁿ ⊕ u₂.
    A11U,
    /// SU₂ × SU_n on the same space, n ≥ 3.
    A11Su,
    /// U₂ × Sp_n on ℂ² ⊗ ℍⁿ ⊕ u₂.
    A12,
    /// The modified generators on ℝ² ⊗ ℍⁿ ⊕ (ℝ ⊕ sp₁).
    A12Mod,
    /// A line of the classification table, 1..=12.
    Line(u8),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CaseId {
    pub kind: CaseKind,
    pub n: Option<usize>,
}

impl CaseKind {
    pub const APPENDIX: [CaseKind; 16] = [
        CaseKind::A1So,
        CaseKind::A1O,
        CaseKind::A2,
        CaseKind::A3,
        CaseKind::A45U,
        CaseKind::A45Su,
        CaseKind::A6,
        CaseKind::A7Sp,
        CaseKind::A7USp,
        CaseKind::A8,
        CaseKind::A9,
        CaseKind::A10,
        CaseKind::A11U,
        CaseKind::A11Su,
        CaseKind::A12,
        CaseKind::A12Mod,
    ];

    pub fn name(self) -> String {
        match self {
            CaseKind::A1So => "A1-SO".into(),
            CaseKind::A1O => "A1-O".into(),
            CaseKind::A2 => "A2".into(),
            CaseKind::A3 => "A3".into(),
            CaseKind::A45U => "A45-U".into(),
            CaseKind::A45Su => "A45-SU".into(),
            CaseKind::A6 => "A6".into(),
            CaseKind::A7Sp => "A7-Sp".into(),
            CaseKind::A7USp => "A7-USp".into(),
            CaseKind::A8 => "A8".into(),
            CaseKind::A9 => "A9".into(),
            CaseKind::A10 => "A10".into(),
            CaseKind::A11U => "A11-U".into(),
            CaseKind::A11Su => "A11-SU".into(),
            CaseKind::A12 => "A12".into(),
            CaseKind::A12Mod => "A12-mod".into(),
            CaseKind::Line(l) => format!("T1-L{l}"),
        }
    }

    /// Appendix case number (1–12) or None for table lines.
    pub fn appendix_number(self) -> Option<u8> {
        Some(match self {
            CaseKind::A1So | CaseKind::A1O => 1,
            CaseKind::A2 => 2,
            CaseKind::A3 => 3,
            CaseKind::A45U => 4,
            CaseKind::A45Su => 5,
            CaseKind::A6 => 6,
            CaseKind::A7Sp | CaseKind::A7USp => 7,
            CaseKind::A8 => 8,
            CaseKind::A9 => 9,
            CaseKind::A10 => 10,
            CaseKind::A11U | CaseKind::A11Su => 11,
            CaseKind::A12 | CaseKind::A12Mod => 12,
            CaseKind::Line(_) => return None,
        })
    }

    pub fn line(self) -> Option<u8> {
        match self {
            CaseKind::Line(l) => Some(l),
            _ => None,
        }
    }

    /// Smallest legal n, or None if the case has no parameter.
    pub fn min_n(self) -> Option<usize> {
        match self {
            CaseKind::A1So | CaseKind::A1O => Some(2),
            CaseKind::A45U | CaseKind::A45Su => Some(2),
            CaseKind::A6 => Some(1),
            CaseKind::A7Sp | CaseKind::A7USp => Some(2),
            CaseKind::A9 | CaseKind::A10 => Some(1),
            CaseKind::A11U => Some(2),
            CaseKind::A11Su => Some(3),
            CaseKind::A12 | CaseKind::A12Mod => Some(2),
            CaseKind::Line(1) | CaseKind::Line(2) => Some(1),
            CaseKind::Line(7) => Some(3),
            CaseKind::Line(8) => Some(2),
            _ => None,
        }
    }

    /// Parameters exercised by the default suite.
    pub fn default_params(self) -> Vec<Option<usize>> {
        let span = |ns: &[usize]| ns.iter().map(|&n| Some(n)).collect();
        match self {
            CaseKind::A1So | CaseKind::A1O => span(&[2, 3, 4, 5]),
            CaseKind::A45U | CaseKind::A45Su => span(&[2, 3, 4, 5]),
            CaseKind::A6 => span(&[1, 2, 3]),
            CaseKind::A7Sp | CaseKind::A7USp => span(&[2, 3]),
            CaseKind::A9 => span(&[1, 2]),
            CaseKind::A10 => span(&[1, 2, 3]),
            CaseKind::A11U => span(&[2, 3]),
            CaseKind::A11Su => span(&[3, 4]),
            CaseKind::A12 | CaseKind::A12Mod => span(&[2, 3]),
            CaseKind::Line(1) | CaseKind::Line(2) => span(&[1, 2]),
            CaseKind::Line(7) => span(&[3, 4]),
            CaseKind::Line(8) => span(&[2, 3]),
            _ => vec![None],
        }
    }
}

impl CaseId {
    pub fn new(kind: CaseKind, n: Option<usize>) -> Result<Self> {
        if let CaseKind::Line(l) = kind {
            if !(1..=12).contains(&l) {
                return Err(Error::UnknownCase(kind.name()));
            }
        }
        match (kind.min_n(), n) {
            (None, None) => Ok(CaseId { kind, n: None }),
            (None, Some(n)) => Err(Error::InvalidParameter {
                case: kind.name(),
                n,
                reason: "case takes no parameter".into(),
            }),
            (Some(m), None) => Ok(CaseId { kind, n: Some(m) }),
            (Some(m), Some(n)) if n < m => Err(Error::InvalidParameter {
                case: kind.name(),
                n,
                reason: format!("minimum is {m}"),
            }),
            (Some(_), Some(n)) if n > 8 => Err(Error::InvalidParameter {
                case: kind.name(),
                n,
                reason: "maximum supported is 8".into(),
            }),
            (Some(_), Some(n)) => Ok(CaseId { kind, n: Some(n) }),
        }
    }

    pub fn line(l: u8) -> Self {
        let kind = CaseKind::Line(l);
        CaseId::new(kind, kind.min_n()).expect("valid table line")
    }

    pub fn n(&self) -> usize {
        self.n.unwrap_or(0)
    }

    /// Every case at its default parameters, appendix first, then table lines.
    pub fn default_suite() -> Vec<CaseId> {
        let mut out = Vec::new();
        for kind in CaseKind::APPENDIX.iter().copied().chain((1..=12).map(CaseKind::Line)) {
            for n in kind.default_params() {
                out.push(CaseId { kind, n });
            }
        }
        out
    }
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.n {
            Some(n) => write!(f, "{}[n={}]", self.kind.name(), n),
            None => write!(f, "{}", self.kind.name()),
        }
    }
}

impl FromStr for CaseKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        for k in CaseKind::APPENDIX {
            if k.name().eq_ignore_ascii_case(t) {
                return Ok(k);
            }
        }
        let lower = t.to_ascii_lowercase();
        let line = lower
            .strip_prefix("t1-l")
            .or_else(|| lower.strip_prefix("table1-line"))
            .or_else(|| lower.strip_prefix("line"));
        if let Some(rest) = line {
            if let Ok(l) = rest.parse::<u8>() {
                if (1..=12).contains(&l) {
                    return Ok(CaseKind::Line(l));
                }
            }
        }
        Err(Error::UnknownCase(s.to_string()))
    }
}

impl FromStr for CaseId {
    type Err = Error;
    /// Accepts `KIND` or `KIND[n=N]`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if let Some(open) = t.find('[') {
            let kind: CaseKind = t[..open].parse()?;
            let inner = t[open + 1..].trim_end_matches(']');
            let n = inner
                .trim_start_matches("n=")
                .parse::<usize>()
                .map_err(|_| Error::UnknownCase(s.to_string()))?;
            CaseId::new(kind, Some(n))
        } else {
            let kind: CaseKind = t.parse()?;
            CaseId::new(kind, None)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_names() {
        for id in CaseId::default_suite() {
            let parsed: CaseId = id.to_string().parse().unwrap();
            assert_eq!(parsed, id);
        }
    }

    #[test]
    fn parameter_gates() {
        assert!(CaseId::new(CaseKind::Line(7), Some(2)).is_err());
        assert!(CaseId::new(CaseKind::Line(3), Some(2)).is_err());
        assert!(CaseId::new(CaseKind::Line(13), None).is_err());
        assert!("A99".parse::<CaseKind>().is_err());
        assert_eq!(CaseId::line(2).n, Some(1));
    }
}
