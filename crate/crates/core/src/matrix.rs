//! 3×3 integer matrices with checked arithmetic.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{add, mul, sub};
use crate::error::Result;
use crate::triple::Triple;

/// A 3×3 signed integer matrix, row-major.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GenMatrix(pub [[i64; 3]; 3]);

impl GenMatrix {
    pub const IDENTITY: GenMatrix = GenMatrix([[1, 0, 0], [0, 1, 0], [0, 0, 1]]);

    pub const fn new(rows: [[i64; 3]; 3]) -> Self {
        Self(rows)
    }

    pub const fn rows(&self) -> &[[i64; 3]; 3] {
        &self.0
    }

    pub fn mul(&self, rhs: &GenMatrix) -> Result<GenMatrix> {
        let mut out = [[0i64; 3]; 3];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                let mut acc = 0i64;
                for k in 0..3 {
                    acc = add(acc, mul(self.0[i][k], rhs.0[k][j])?)?;
                }
                *cell = acc;
            }
        }
        Ok(GenMatrix(out))
    }

    /// Raw matrix–vector product; components may be zero or negative.
    pub fn mul_vec(&self, v: [i64; 3]) -> Result<[i64; 3]> {
        let mut out = [0i64; 3];
        for (i, cell) in out.iter_mut().enumerate() {
            let mut acc = 0i64;
            for (k, x) in v.iter().enumerate() {
                acc = add(acc, mul(self.0[i][k], *x)?)?;
            }
            *cell = acc;
        }
        Ok(out)
    }

    pub fn mul_triple(&self, t: Triple) -> Result<[i64; 3]> {
        self.mul_vec(t.to_array())
    }

    pub fn det(&self) -> Result<i64> {
        let m = &self.0;
        let minor = |r1: usize, r2: usize, c1: usize, c2: usize| -> Result<i64> {
            sub(mul(m[r1][c1], m[r2][c2])?, mul(m[r1][c2], m[r2][c1])?)
        };
        let t0 = mul(m[0][0], minor(1, 2, 1, 2)?)?;
        let t1 = mul(m[0][1], minor(1, 2, 0, 2)?)?;
        let t2 = mul(m[0][2], minor(1, 2, 0, 1)?)?;
        add(sub(t0, t1)?, t2)
    }

    /// Exact inverse of a unimodular matrix (`|det| = 1`); `None` otherwise.
    pub fn inverse(&self) -> Result<Option<GenMatrix>> {
        let det = self.det()?;
        if det.abs() != 1 {
            return Ok(None);
        }
        let m = &self.0;
        let mut adj = [[0i64; 3]; 3];
        for (i, row) in adj.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                // cofactor of m[j][i]
                let rs: Vec<usize> = (0..3).filter(|&r| r != j).collect();
                let cs: Vec<usize> = (0..3).filter(|&c| c != i).collect();
                let minor = sub(
                    mul(m[rs[0]][cs[0]], m[rs[1]][cs[1]])?,
                    mul(m[rs[0]][cs[1]], m[rs[1]][cs[0]])?,
                )?;
                let signed = if (i + j) % 2 == 0 { minor } else { -minor };
                *cell = signed * det;
            }
        }
        Ok(Some(GenMatrix(adj)))
    }
}

impl fmt::Display for GenMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .0
            .iter()
            .map(|r| format!("[{},{},{}]", r[0], r[1], r[2]))
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use proptest::prelude::*;

    #[test]
    fn determinant_and_inverse() {
        let s = GenMatrix::new([[1, 0, 0], [0, 0, 1], [0, 1, -1]]);
        assert_eq!(s.det(), Ok(-1));
        let inv = s.inverse().unwrap().unwrap();
        assert_eq!(inv, GenMatrix::new([[1, 0, 0], [0, 1, 1], [0, 1, 0]]));
        assert_eq!(s.mul(&inv).unwrap(), GenMatrix::IDENTITY);
        let singular = GenMatrix::new([[1, 2, 3], [2, 4, 6], [0, 0, 1]]);
        assert_eq!(singular.inverse(), Ok(None));
    }

    #[test]
    fn overflow_is_reported() {
        let big = GenMatrix::new([[i64::MAX, 1, 0], [0, 1, 0], [0, 0, 1]]);
        assert_eq!(big.mul(&big), Err(Error::Overflow));
        assert_eq!(big.mul_vec([2, 0, 0]), Err(Error::Overflow));
    }

    fn unimodular() -> impl Strategy<Value = GenMatrix> {
        // products of elementary row operations stay unimodular
        proptest::collection::vec((0usize..3, 0usize..3, -3i64..=3), 0..6).prop_map(|ops| {
            let mut m = GenMatrix::IDENTITY;
            for (i, j, k) in ops {
                if i == j {
                    continue;
                }
                let mut e = GenMatrix::IDENTITY;
                e.0[i][j] = k;
                m = e.mul(&m).unwrap();
            }
            m
        })
    }

    proptest! {
        #[test]
        fn inverse_is_two_sided(m in unimodular()) {
            let inv = m.inverse().unwrap().unwrap();
            prop_assert_eq!(m.mul(&inv).unwrap(), GenMatrix::IDENTITY);
            prop_assert_eq!(inv.mul(&m).unwrap(), GenMatrix::IDENTITY);
        }
    }
}
