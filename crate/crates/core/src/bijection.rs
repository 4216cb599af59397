//! The map `S` between the 60° and 120° families, and conjugation of
//! generator matrices through it.

use crate::error::{Error, Result};
use crate::matrix::GenMatrix;
use crate::triple::{is_primitive, Family, Triple};

/// `S · (a, b, c) = (a, c, b − c)`.
pub const S: GenMatrix = GenMatrix::new([[1, 0, 0], [0, 0, 1], [0, 1, -1]]);

/// `S⁻¹ · (a, b, c) = (a, b + c, b)`.
pub const S_INV: GenMatrix = GenMatrix::new([[1, 0, 0], [0, 1, 1], [0, 1, 0]]);

/// Exact product `m · t`. Fails with [`Error::NonPositiveResult`] when a
/// component drops below 1, which usually means `m` was applied to a
/// triple of the wrong family or orientation.
pub fn apply_matrix(m: &GenMatrix, t: Triple) -> Result<Triple> {
    Triple::from_product(m.mul_triple(t)?)
}

/// `S · M · S⁻¹`.
pub fn conjugate(m: &GenMatrix) -> Result<GenMatrix> {
    S.mul(m)?.mul(&S_INV)
}

/// `S⁻¹ · M · S`, the inverse of [`conjugate`].
pub fn deconjugate(m: &GenMatrix) -> Result<GenMatrix> {
    S_INV.mul(m)?.mul(&S)
}

/// Sends a non-equilateral primitive 60° triple in ordered `b > c` form
/// to the primitive 120° triple `(a, c, b − c)`.
pub fn to_sub(t: Triple) -> Result<Triple> {
    if !is_primitive(Family::Sixty, t)? {
        return Err(Error::NotInFamily(format!("{t} is not a primitive 60-degree triple")));
    }
    if t.b() == t.c() {
        return Err(Error::Degenerate(format!("{t} is equilateral")));
    }
    if t.b() < t.c() {
        return Err(Error::NotInFamily(format!("{t} is not in ordered b > c form")));
    }
    apply_matrix(&S, t)
}

/// Sends a primitive 120° triple to the 60° triple `(a, b + c, b)`.
pub fn from_sub(t: Triple) -> Result<Triple> {
    if !is_primitive(Family::OneTwenty, t)? {
        return Err(Error::NotInFamily(format!("{t} is not a primitive 120-degree triple")));
    }
    apply_matrix(&S_INV, t)
}
