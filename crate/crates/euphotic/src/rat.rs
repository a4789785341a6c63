//! Exact rational scalars and vectors.
//!
//! All geometry in this crate is done in "simple-root-value" coordinates:
//! a point `x` of the apartment is stored as the vector of pairings
//! `v_i = <alpha_i, x>` against the simple roots. Every quantity the
//! combinatorics consumes is an integer combination of these values, so
//! exact rational arithmetic suffices throughout.
//!
//! Rationals serialize as the string `p/q`, with `/q` omitted when `q = 1`.

use crate::error::{input_err, Error, Result};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};
use std::fmt;
use std::ops::{Add, Index, Mul, Neg, Sub};

/// Exact rational number, always stored reduced with positive denominator.
pub type Rat = BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rat {
    BigRational::from(BigInt::from(n))
}

/// Formats as `p/q`, omitting the denominator when it is 1.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p` or `p/q`; `q` must be nonzero.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let numer: BigInt = n
        .parse()
        .map_err(|_| Error::Input(format!("bad rational numerator: {s:?}")))?;
    let denom: BigInt = d
        .parse()
        .map_err(|_| Error::Input(format!("bad rational denominator: {s:?}")))?;
    if denom.is_zero() {
        return input_err(format!("zero denominator in rational: {s:?}"));
    }
    Ok(BigRational::new(numer, denom))
}

/// Fractional part in `[0, 1)`.
pub fn frac_part(r: &Rat) -> Rat {
    r - r.floor()
}

/// Exact rational point, componentwise arithmetic.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RatVec(pub Vec<Rat>);

impl RatVec {
    pub fn zero(dim: usize) -> Self {
        RatVec(vec![Rat::zero(); dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn from_i64(v: &[i64]) -> Self {
        RatVec(v.iter().map(|&n| rat_int(n)).collect())
    }

    /// Parses a vector of `p/q` strings.
    pub fn parse(parts: &[&str]) -> Result<Self> {
        parts.iter().map(|s| parse_rat(s)).collect::<Result<_>>().map(RatVec)
    }

    pub fn strings(&self) -> Vec<String> {
        self.0.iter().map(format_rat).collect()
    }

    pub fn dot(&self, other: &RatVec) -> Rat {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch in dot product");
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a * b)
            .fold(Rat::zero(), |acc, t| acc + t)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    pub fn scale(&self, s: &Rat) -> RatVec {
        RatVec(self.0.iter().map(|c| c * s).collect())
    }

    /// True when every coordinate is an integer.
    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|c| c.denom().is_one())
    }
}

impl Index<usize> for RatVec {
    type Output = Rat;
    fn index(&self, i: usize) -> &Rat {
        &self.0[i]
    }
}

impl Add for &RatVec {
    type Output = RatVec;
    fn add(self, other: &RatVec) -> RatVec {
        assert_eq!(self.dim(), other.dim());
        RatVec(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &RatVec {
    type Output = RatVec;
    fn sub(self, other: &RatVec) -> RatVec {
        assert_eq!(self.dim(), other.dim());
        RatVec(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &RatVec {
    type Output = RatVec;
    fn neg(self) -> RatVec {
        RatVec(self.0.iter().map(|c| -c).collect())
    }
}

impl Mul<&Rat> for &RatVec {
    type Output = RatVec;
    fn mul(self, s: &Rat) -> RatVec {
        self.scale(s)
    }
}

impl fmt::Debug for RatVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.strings().join(", "))
    }
}

impl fmt::Display for RatVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.strings().join(", "))
    }
}

impl serde::Serialize for RatVec {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        self.strings().serialize(ser)
    }
}

impl<'de> serde::Deserialize<'de> for RatVec {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let parts: Vec<String> = Vec::deserialize(de)?;
        let refs: Vec<&str> = parts.iter().map(|s| s.as_str()).collect();
        RatVec::parse(&refs).map_err(serde::de::Error::custom)
    }
}

/// Signed fractional-class absolute value: the distance of `r` to the
/// nearest point of `Z`, i.e. `min(frac, 1 - frac)`. Invariant under
/// negation and integer translation, which is what signed-permutation
/// orbit pruning needs.
pub fn frac_dist(r: &Rat) -> Rat {
    let f = frac_part(r);
    let g = Rat::one() - &f;
    if f <= g {
        f
    } else {
        g
    }
}
