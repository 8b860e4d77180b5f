//! Rational phases `p/q` standing for the root of unity `exp(2πi p/q)`.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Rational64;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A reduced fraction in `[0, 1)`.
///
/// Zero is stored as `0/1`. Ordering is by numeric value.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Phase {
    num: u32,
    den: u32,
}

impl Phase {
    pub const ZERO: Phase = Phase { num: 0, den: 1 };

    /// Builds the phase `num/den mod 1`. The denominator must be nonzero.
    pub fn new(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::input("phase denominator is zero"));
        }
        let (mut num, mut den) = if den < 0 { (-num, -den) } else { (num, den) };
        num = num.rem_euclid(den);
        let g = num.gcd(&den);
        num /= g;
        den /= g;
        let den = u32::try_from(den)
            .map_err(|_| Error::resource(format!("phase denominator {den} too large")))?;
        Ok(Phase {
            num: num as u32,
            den,
        })
    }

    pub fn numerator(self) -> u32 {
        self.num
    }

    pub fn denominator(self) -> u32 {
        self.den
    }

    pub fn is_zero(self) -> bool {
        self.num == 0
    }

    /// `self + other mod 1`.
    #[allow(clippy::should_implement_trait)]
    pub fn add(self, other: Phase) -> Phase {
        let den = self.den as u64 / (self.den as u64).gcd(&(other.den as u64)) * other.den as u64;
        let num =
            self.num as u64 * (den / self.den as u64) + other.num as u64 * (den / other.den as u64);
        Self::reduce_u64(num % den, den)
    }

    /// `-self mod 1`.
    #[allow(clippy::should_implement_trait)]
    pub fn neg(self) -> Phase {
        if self.num == 0 {
            self
        } else {
            Phase {
                num: self.den - self.num,
                den: self.den,
            }
        }
    }

    /// `(self + shift) / divisor mod 1`, the phases of the `divisor`-th roots.
    pub(crate) fn root(self, shift: u32, divisor: u32) -> Phase {
        let num = self.num as u64 + shift as u64 * self.den as u64;
        let den = self.den as u64 * divisor as u64;
        Self::reduce_u64(num % den, den)
    }

    fn reduce_u64(num: u64, den: u64) -> Phase {
        let g = num.gcd(&den);
        Phase {
            num: (num / g) as u32,
            den: (den / g) as u32,
        }
    }

    pub fn to_rational(self) -> Rational64 {
        Rational64::new(self.num as i64, self.den as i64)
    }
}

impl Default for Phase {
    fn default() -> Self {
        Phase::ZERO
    }
}

impl PartialOrd for Phase {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Phase {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.num as u64 * other.den as u64).cmp(&(other.num as u64 * self.den as u64))
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.num == 0 {
            write!(f, "0")
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for Phase {
    type Err = Error;

    /// Accepts `p/q` and bare integers `p`; the value is taken mod 1.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parse = |t: &str| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| Error::input(format!("cannot parse phase {s:?}")))
        };
        match s.split_once('/') {
            Some((p, q)) => Phase::new(parse(p)?, parse(q)?),
            None => Phase::new(parse(s)?, 1),
        }
    }
}

impl Serialize for Phase {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Phase {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
