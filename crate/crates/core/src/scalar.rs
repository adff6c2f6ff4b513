//! Exact scalars: arbitrary-precision rationals and their one-point extension.
//!
//! Every coordinate in the engine is an [`ExactScalar`] (a reduced fraction of
//! big integers); cross-ratios and conic parameters additionally admit the
//! single point at infinity, modelled by [`ExtendedScalar`]. There is no
//! floating point and no rounding anywhere.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::Error;

/// Arbitrary-precision rational. `num_rational` keeps the invariants we need:
/// the fraction is stored reduced with a positive denominator.
pub type ExactScalar = BigRational;

/// Shorthand for an integer as an exact scalar.
pub fn rat<T: Into<BigInt>>(n: T) -> ExactScalar {
    BigRational::from_integer(n.into())
}

/// Shorthand for the reduced fraction `n / d`.
pub fn ratio<T: Into<BigInt>, U: Into<BigInt>>(n: T, d: U) -> ExactScalar {
    BigRational::new(n.into(), d.into())
}

/// A rational number or the single point at infinity of the projective line.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtendedScalar {
    Finite(ExactScalar),
    Infinity,
}

impl ExtendedScalar {
    pub fn zero() -> Self {
        ExtendedScalar::Finite(ExactScalar::zero())
    }

    pub fn one() -> Self {
        ExtendedScalar::Finite(ExactScalar::one())
    }

    pub fn from_int(n: i64) -> Self {
        ExtendedScalar::Finite(rat(n))
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        ExtendedScalar::Finite(ratio(n, d))
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtendedScalar::Infinity)
    }

    pub fn as_finite(&self) -> Option<&ExactScalar> {
        match self {
            ExtendedScalar::Finite(q) => Some(q),
            ExtendedScalar::Infinity => None,
        }
    }

    /// Builds `n/d`, mapping a zero denominator to infinity.
    /// A `0/0` quotient is rejected as indeterminate.
    pub fn quotient(n: ExactScalar, d: ExactScalar) -> Option<Self> {
        if d.is_zero() {
            if n.is_zero() {
                None
            } else {
                Some(ExtendedScalar::Infinity)
            }
        } else {
            Some(ExtendedScalar::Finite(n / d))
        }
    }

    /// Evaluates the fractional linear map `z -> (a z + b) / (c z + d)`.
    ///
    /// The matrix must be nonsingular; infinity maps to `a/c` and a zero
    /// denominator maps to infinity, exactly as on the projective line.
    pub fn mobius(
        &self,
        a: &ExactScalar,
        b: &ExactScalar,
        c: &ExactScalar,
        d: &ExactScalar,
    ) -> Self {
        debug_assert!(!(a * d - b * c).is_zero(), "singular mobius matrix");
        match self {
            ExtendedScalar::Infinity => Self::quotient(a.clone(), c.clone())
                .expect("nonsingular map is defined at infinity"),
            ExtendedScalar::Finite(z) => {
                Self::quotient(a * z + b, c * z + d).expect("nonsingular map is defined everywhere")
            }
        }
    }

    /// Multiplicative inverse on the projective line: `1/0 = inf`, `1/inf = 0`.
    pub fn reciprocal(&self) -> Self {
        match self {
            ExtendedScalar::Infinity => Self::zero(),
            ExtendedScalar::Finite(q) if q.is_zero() => ExtendedScalar::Infinity,
            ExtendedScalar::Finite(q) => ExtendedScalar::Finite(q.recip()),
        }
    }
}

/// Renders a rational without a trailing `/1`, e.g. `3`, `-1/2`.
pub fn format_rational(q: &ExactScalar) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `p`, `p/q` or a sign-prefixed variant; the result is reduced.
pub fn parse_rational(s: &str) -> Result<ExactScalar, Error> {
    let bad = || Error::Parse {
        what: "rational",
        input: s.to_string(),
    };
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let n = BigInt::from_str(n).map_err(|_| bad())?;
    let d = BigInt::from_str(d).map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}

impl fmt::Display for ExtendedScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedScalar::Infinity => write!(f, "inf"),
            ExtendedScalar::Finite(q) => write!(f, "{}", format_rational(q)),
        }
    }
}

impl FromStr for ExtendedScalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t == "inf" || t == "∞" {
            Ok(ExtendedScalar::Infinity)
        } else {
            Ok(ExtendedScalar::Finite(parse_rational(t)?))
        }
    }
}

impl From<ExactScalar> for ExtendedScalar {
    fn from(q: ExactScalar) -> Self {
        ExtendedScalar::Finite(q)
    }
}
