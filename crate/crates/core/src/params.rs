//! The `(m, n)` parametrizations of both families and their inverses.
//!
//! For coprime `m > n > 0` with `m ≢ n (mod 3)`:
//!
//! * 60°: `(m² + mn + n², m² + 2mn, n² + 2mn)` or `(…, …, m² − n²)`
//! * 120°: `(m² + mn + n², n² + 2mn, m² − n²)`

use serde::{Deserialize, Serialize};

use crate::arith::{add, exact_sqrt, gcd, isqrt, mul, square, sub};
use crate::error::{Error, Result};
use crate::triple::{is_member, Family, Triple};

/// Which third side the 60° map produces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Variant {
    /// third side `n² + 2mn`
    Plus,
    /// third side `m² − n²`
    Minus,
}

impl Variant {
    pub fn name(self) -> &'static str {
        match self {
            Variant::Plus => "PLUS",
            Variant::Minus => "MINUS",
        }
    }
}

/// A validated parameter pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ParamPair {
    m: i64,
    n: i64,
    variant: Variant,
}

impl ParamPair {
    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn with_variant(self, variant: Variant) -> Self {
        Self { variant, ..self }
    }

    /// The shared hypotenuse-like side `m² + mn + n²`.
    pub fn longest_side(&self) -> Result<i64> {
        add(add(square(self.m)?, mul(self.m, self.n)?)?, square(self.n)?)
    }
}

/// Checks `m > n > 0`, `gcd(m, n) = 1` and `m ≢ n (mod 3)`, in that order.
/// The returned pair has variant [`Variant::Plus`].
pub fn validate_params(m: i64, n: i64) -> Result<ParamPair> {
    if n <= 0 || m <= n {
        return Err(Error::NotOrdered { m, n });
    }
    let g = gcd(m, n);
    if g != 1 {
        return Err(Error::NotCoprime { m, n, gcd: g });
    }
    if (m - n) % 3 == 0 {
        return Err(Error::Mod3Collision { m, n });
    }
    Ok(ParamPair { m, n, variant: Variant::Plus })
}

pub fn eisenstein_from_params(p: ParamPair) -> Result<Triple> {
    let (m, n) = (p.m, p.n);
    let a = p.longest_side()?;
    let b = add(square(m)?, mul(2, mul(m, n)?)?)?;
    let c = match p.variant {
        Variant::Plus => add(square(n)?, mul(2, mul(m, n)?)?)?,
        Variant::Minus => sub(square(m)?, square(n)?)?,
    };
    Triple::new(a, b, c)
}

/// The 120° map. The variant is ignored; the output keeps the literal
/// order `(a, n² + 2mn, m² − n²)` even when the last side is larger.
pub fn sub_eisenstein_from_params(p: ParamPair) -> Result<Triple> {
    let (m, n) = (p.m, p.n);
    let a = p.longest_side()?;
    let b = add(square(n)?, mul(2, mul(m, n)?)?)?;
    let c = sub(square(m)?, square(n)?)?;
    Triple::new(a, b, c)
}

/// Inverse of the family's parametrization, up to the order of `b` and `c`.
///
/// Tries every `m ≤ ⌊√a⌋` and solves `n² + mn + (m² − a) = 0` through its
/// discriminant `4a − 3m²`. Returns `None` for `(1, 1, 1)`, non-members
/// and non-primitive members.
pub fn params_from_triple(family: Family, t: Triple) -> Result<Option<ParamPair>> {
    if !is_member(family, t)? {
        return Ok(None);
    }
    let target = t.canonical();
    let a = t.a();
    let four_a = mul(4, a)?;
    for m in 1..=isqrt(a as u64) as i64 {
        let Some(d) = exact_sqrt(four_a - 3 * m * m) else {
            continue;
        };
        if d <= m || (d - m) % 2 != 0 {
            continue;
        }
        let n = (d - m) / 2;
        let Ok(p) = validate_params(m, n) else {
            continue;
        };
        let found = match family {
            Family::Sixty => [Variant::Plus, Variant::Minus]
                .into_iter()
                .map(|v| p.with_variant(v))
                .find(|&q| matches!(eisenstein_from_params(q), Ok(x) if x.canonical() == target)),
            Family::OneTwenty => {
                (sub_eisenstein_from_params(p)?.canonical() == target).then_some(p)
            }
        };
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

/// `(a, b, b − c)`: the other 60° triple sharing `a` and `b`.
pub fn twin_60(t: Triple) -> Result<Triple> {
    if !is_member(Family::Sixty, t)? {
        return Err(Error::NotInFamily(format!("{t} is not a 60-degree triple")));
    }
    if t.b() == t.c() {
        return Err(Error::Degenerate(format!("{t} has b = c")));
    }
    if t.b() < t.c() {
        return Err(Error::NotInFamily(format!("{t} is not in ordered b > c form")));
    }
    Triple::new(t.a(), t.b(), t.b() - t.c())
}

/// `(a, c, b)`.
pub fn swap_120(t: Triple) -> Triple {
    Triple::new(t.a(), t.c(), t.b()).expect("sides already positive")
}

/// All valid pairs (variant PLUS) whose longest side is at most `max_a`,
/// ordered by `m` then `n`.
pub fn valid_pairs(max_a: i64) -> Result<Vec<ParamPair>> {
    let mut out = Vec::new();
    let mut m = 2i64;
    // smallest side for a given m is m² + m + 1 (n = 1)
    while add(add(square(m)?, m)?, 1)? <= max_a {
        for n in 1..m {
            if add(add(square(m)?, mul(m, n)?)?, square(n)?)? > max_a {
                break;
            }
            if let Ok(p) = validate_params(m, n) {
                out.push(p);
            }
        }
        m += 1;
    }
    Ok(out)
}
