use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest finite exponent magnitude accepted; beyond it use the infinity tags.
pub const MAX_FINITE_EXPONENT: f64 = (1u64 << 30) as f64;

/// A point of the extended exponent line.
///
/// `Finite` never holds zero or a non-finite value; construct it through
/// [`Exponent::finite`] or [`Exponent::new`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Exponent {
    NegInf,
    Finite(f64),
    Zero,
    PosInf,
}

impl Exponent {
    /// Validated finite exponent. Zero and infinities are rejected; use the
    /// dedicated tags for them.
    pub fn finite(p: f64) -> Result<Self> {
        if p.is_finite() && p != 0.0 && p.abs() <= MAX_FINITE_EXPONENT {
            Ok(Exponent::Finite(p))
        } else {
            Err(Error::InvalidExponent(p))
        }
    }

    /// Maps any real (including ±inf and 0) to its tag.
    pub fn new(p: f64) -> Result<Self> {
        if p == f64::INFINITY {
            Ok(Exponent::PosInf)
        } else if p == f64::NEG_INFINITY {
            Ok(Exponent::NegInf)
        } else if p == 0.0 {
            Ok(Exponent::Zero)
        } else {
            Exponent::finite(p)
        }
    }

    /// The exponent as an `f64` (±inf for the infinity tags, 0 for `Zero`).
    pub fn as_f64(self) -> f64 {
        match self {
            Exponent::NegInf => f64::NEG_INFINITY,
            Exponent::Finite(p) => p,
            Exponent::Zero => 0.0,
            Exponent::PosInf => f64::INFINITY,
        }
    }

    pub fn finite_value(self) -> Option<f64> {
        match self {
            Exponent::Finite(p) => Some(p),
            _ => None,
        }
    }

    /// Finite value or a [`Error::FiniteExponentRequired`].
    pub fn require_finite(self) -> Result<f64> {
        self.finite_value()
            .ok_or_else(|| Error::FiniteExponentRequired(self.to_string()))
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Exponent::NegInf => f.write_str("-inf"),
            Exponent::Zero => f.write_str("0"),
            Exponent::PosInf => f.write_str("inf"),
            Exponent::Finite(p) => write!(f, "{p}"),
        }
    }
}

impl FromStr for Exponent {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        match t.to_ascii_lowercase().as_str() {
            "inf" | "+inf" | "infinity" | "+infinity" => return Ok(Exponent::PosInf),
            "-inf" | "-infinity" => return Ok(Exponent::NegInf),
            _ => {}
        }
        let v: f64 = t
            .parse()
            .map_err(|_| Error::Parse(format!("not an exponent: {s:?}")))?;
        if v.is_nan() {
            return Err(Error::Parse(format!("not an exponent: {s:?}")));
        }
        Exponent::new(v)
    }
}

impl Serialize for Exponent {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
