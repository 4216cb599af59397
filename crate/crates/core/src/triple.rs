//! Triples, the two families, and the membership predicates.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{self, add, mul, square, sub};
use crate::error::{Error, Result};

/// Which distinguished angle sits opposite side `a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    /// `a² = b² + c² − bc`
    Sixty,
    /// `a² = b² + c² + bc`
    OneTwenty,
}

impl Family {
    pub const ALL: [Family; 2] = [Family::Sixty, Family::OneTwenty];

    /// The angle in degrees, which is also the family's CLI name.
    pub fn degrees(self) -> u32 {
        match self {
            Family::Sixty => 60,
            Family::OneTwenty => 120,
        }
    }

    pub fn from_degrees(deg: u32) -> Option<Self> {
        match deg {
            60 => Some(Family::Sixty),
            120 => Some(Family::OneTwenty),
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.degrees())
    }
}

/// Side lengths `(a, b, c)` of an integer triangle, `a` opposite the
/// distinguished angle. All sides are at least 1.
///
/// The order of `b` and `c` is significant: trees emit `(a, b, c)` and
/// `(a, c, b)` as different nodes. Use [`Triple::canonical`] for
/// order-insensitive comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "[i64; 3]", into = "[i64; 3]")]
pub struct Triple {
    a: i64,
    b: i64,
    c: i64,
}

impl Triple {
    pub fn new(a: i64, b: i64, c: i64) -> Result<Self> {
        if a < 1 || b < 1 || c < 1 {
            return Err(Error::NonPositiveSide(a, b, c));
        }
        Ok(Self { a, b, c })
    }

    /// Builds a triple from a matrix product, reporting non-positive
    /// components as [`Error::NonPositiveResult`].
    pub(crate) fn from_product([a, b, c]: [i64; 3]) -> Result<Self> {
        if a < 1 || b < 1 || c < 1 {
            return Err(Error::NonPositiveResult(a, b, c));
        }
        Ok(Self { a, b, c })
    }

    pub const fn a(&self) -> i64 {
        self.a
    }

    pub const fn b(&self) -> i64 {
        self.b
    }

    pub const fn c(&self) -> i64 {
        self.c
    }

    pub const fn to_array(self) -> [i64; 3] {
        [self.a, self.b, self.c]
    }

    /// `(a, max(b, c), min(b, c))`.
    pub fn canonical(self) -> Self {
        Self {
            a: self.a,
            b: self.b.max(self.c),
            c: self.b.min(self.c),
        }
    }

    pub fn is_equilateral(&self) -> bool {
        self.a == self.b && self.b == self.c
    }
}

impl TryFrom<[i64; 3]> for Triple {
    type Error = Error;

    fn try_from([a, b, c]: [i64; 3]) -> Result<Self> {
        Triple::new(a, b, c)
    }
}

impl From<Triple> for [i64; 3] {
    fn from(t: Triple) -> Self {
        t.to_array()
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

/// The family's quadratic form in `b` and `c`.
pub fn form_value(family: Family, b: i64, c: i64) -> Result<i64> {
    let squares = add(square(b)?, square(c)?)?;
    let cross = mul(b, c)?;
    match family {
        Family::Sixty => sub(squares, cross),
        Family::OneTwenty => add(squares, cross),
    }
}

pub fn gcd3(a: i64, b: i64, c: i64) -> i64 {
    arith::gcd3(a, b, c)
}

/// True iff `a² = form_value(family, b, c)`. Primitivity is not checked.
pub fn is_member(family: Family, t: Triple) -> Result<bool> {
    Ok(square(t.a)? == form_value(family, t.b, t.c)?)
}

pub fn is_primitive(family: Family, t: Triple) -> Result<bool> {
    Ok(is_member(family, t)? && gcd3(t.a, t.b, t.c) == 1)
}

/// The family whose primitive test `t` passes. The two forms differ by
/// `2bc > 0`, so at most one can hold.
pub fn classify(t: Triple) -> Result<Option<Family>> {
    for family in Family::ALL {
        if is_primitive(family, t)? {
            return Ok(Some(family));
        }
    }
    Ok(None)
}

/// Family whose membership form `t` satisfies, ignoring primitivity.
pub fn member_family(t: Triple) -> Result<Option<Family>> {
    for family in Family::ALL {
        if is_member(family, t)? {
            return Ok(Some(family));
        }
    }
    Ok(None)
}

pub fn canonicalize(t: Triple) -> Triple {
    t.canonical()
}
