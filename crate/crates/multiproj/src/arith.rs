//! Checked scalar arithmetic, gcd utilities, and a small exact rational type.
//!
//! Every operation that could leave the representable range reports
//! [`Error::Overflow`] instead of wrapping. Public matrix entries are `i64`;
//! fraction-free eliminations and rational solves run over `i128`.

// In-place eliminations read the pivot row while writing another; index
// loops are the natural shape for that.
#![allow(clippy::needless_range_loop)]

use crate::{Error, Result};

#[inline]
pub fn add(a: i64, b: i64) -> Result<i64> {
    a.checked_add(b).ok_or(Error::Overflow)
}

#[inline]
pub fn sub(a: i64, b: i64) -> Result<i64> {
    a.checked_sub(b).ok_or(Error::Overflow)
}

#[inline]
pub fn mul(a: i64, b: i64) -> Result<i64> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

#[inline]
pub fn neg(a: i64) -> Result<i64> {
    a.checked_neg().ok_or(Error::Overflow)
}

/// `a + b*c` in one step.
#[inline]
pub fn add_mul(a: i64, b: i64, c: i64) -> Result<i64> {
    add(a, mul(b, c)?)
}

pub fn dot(a: &[i64], b: &[i64]) -> Result<i64> {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = 0i64;
    for (&x, &y) in a.iter().zip(b) {
        acc = add_mul(acc, x, y)?;
    }
    Ok(acc)
}

/// Nonnegative gcd; `gcd(0, 0) = 0`.
pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a as i64
}

pub fn vec_gcd(v: &[i64]) -> i64 {
    v.iter().fold(0, |g, &x| gcd(g, x))
}

/// Divides by the content, leaving the zero vector unchanged.
pub fn primitive(mut v: Vec<i64>) -> Vec<i64> {
    let g = vec_gcd(&v);
    if g > 1 {
        for x in &mut v {
            *x /= g;
        }
    }
    v
}

/// Scale a vector by a checked factor.
pub fn scale(v: &[i64], c: i64) -> Result<Vec<i64>> {
    v.iter().map(|&x| mul(x, c)).collect()
}

/// `a*u + b*v` componentwise.
pub fn combine(a: i64, u: &[i64], b: i64, v: &[i64]) -> Result<Vec<i64>> {
    debug_assert_eq!(u.len(), v.len());
    u.iter()
        .zip(v)
        .map(|(&x, &y)| add(mul(a, x)?, mul(b, y)?))
        .collect()
}

/// Rational rank of a list of integer row vectors, by fraction-free
/// Gaussian elimination over `i128`.
pub fn rank_rows(rows: &[Vec<i64>]) -> Result<usize> {
    if rows.is_empty() {
        return Ok(0);
    }
    let cols = rows[0].len();
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| {
            debug_assert_eq!(r.len(), cols);
            r.iter().map(|&x| x as i128).collect()
        })
        .collect();
    let mut rank = 0usize;
    let mut row = 0usize;
    for col in 0..cols {
        let Some(p) = (row..m.len()).find(|&i| m[i][col] != 0) else {
            continue;
        };
        m.swap(row, p);
        let pivot = m[row][col];
        for i in row + 1..m.len() {
            let factor = m[i][col];
            if factor == 0 {
                continue;
            }
            for j in col..cols {
                let a = pivot.checked_mul(m[i][j]).ok_or(Error::Overflow)?;
                let b = factor.checked_mul(m[row][j]).ok_or(Error::Overflow)?;
                m[i][j] = a.checked_sub(b).ok_or(Error::Overflow)?;
            }
            // Keep the growth of fraction-free entries in check.
            let g = m[i].iter().fold(0i128, |g, &x| gcd_i128(g, x));
            if g > 1 {
                for x in &mut m[i] {
                    *x /= g;
                }
            }
        }
        row += 1;
        rank += 1;
        if row == m.len() {
            break;
        }
    }
    Ok(rank)
}

fn gcd_i128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a as i128
}

/// Determinant of a square `i64` matrix (rows), exact over `i128`.
pub fn det_rows(rows: &[Vec<i64>]) -> Result<i128> {
    let n = rows.len();
    if n == 0 {
        return Ok(1);
    }
    let mut m: Vec<Vec<Rat>> = rows
        .iter()
        .map(|r| {
            debug_assert_eq!(r.len(), n);
            r.iter().map(|&x| Rat::from_i64(x)).collect()
        })
        .collect();
    let mut det = Rat::from_i64(1);
    for col in 0..n {
        let Some(p) = (col..n).find(|&i| !m[i][col].is_zero()) else {
            return Ok(0);
        };
        if p != col {
            m.swap(col, p);
            det = det.neg()?;
        }
        let pivot = m[col][col];
        det = det.mul(pivot)?;
        for i in col + 1..n {
            if m[i][col].is_zero() {
                continue;
            }
            let factor = m[i][col].div(pivot)?;
            for j in col..n {
                let t = factor.mul(m[col][j])?;
                m[i][j] = m[i][j].sub(t)?;
            }
        }
    }
    debug_assert_eq!(det.den, 1);
    Ok(det.num)
}

/// A reduced rational over `i128` with positive denominator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Rat {
    pub num: i128,
    pub den: i128,
}

#[allow(clippy::should_implement_trait)] // checked ops return Result, the std traits cannot
impl Rat {
    pub fn new(num: i128, den: i128) -> Result<Rat> {
        if den == 0 {
            return Err(Error::Inconsistency(
                "rational with zero denominator".into(),
            ));
        }
        let s = if den < 0 { -1 } else { 1 };
        let (num, den) = (
            num.checked_mul(s).ok_or(Error::Overflow)?,
            den.checked_mul(s).ok_or(Error::Overflow)?,
        );
        let g = gcd_i128(num, den).max(1);
        Ok(Rat {
            num: num / g,
            den: den / g,
        })
    }

    pub fn from_i64(x: i64) -> Rat {
        Rat {
            num: x as i128,
            den: 1,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    pub fn add(self, o: Rat) -> Result<Rat> {
        let a = self.num.checked_mul(o.den).ok_or(Error::Overflow)?;
        let b = o.num.checked_mul(self.den).ok_or(Error::Overflow)?;
        Rat::new(
            a.checked_add(b).ok_or(Error::Overflow)?,
            self.den.checked_mul(o.den).ok_or(Error::Overflow)?,
        )
    }

    pub fn sub(self, o: Rat) -> Result<Rat> {
        self.add(o.neg()?)
    }

    pub fn neg(self) -> Result<Rat> {
        Ok(Rat {
            num: self.num.checked_neg().ok_or(Error::Overflow)?,
            den: self.den,
        })
    }

    pub fn mul(self, o: Rat) -> Result<Rat> {
        Rat::new(
            self.num.checked_mul(o.num).ok_or(Error::Overflow)?,
            self.den.checked_mul(o.den).ok_or(Error::Overflow)?,
        )
    }

    pub fn div(self, o: Rat) -> Result<Rat> {
        if o.is_zero() {
            return Err(Error::Inconsistency("rational division by zero".into()));
        }
        Rat::new(
            self.num.checked_mul(o.den).ok_or(Error::Overflow)?,
            self.den.checked_mul(o.num).ok_or(Error::Overflow)?,
        )
    }

    /// Floor of the rational as an integer.
    pub fn floor(self) -> i128 {
        self.num.div_euclid(self.den)
    }
}

/// Solves the square system `a x = b` over the rationals by Gaussian
/// elimination with exact arithmetic. Returns `None` when `a` is singular.
pub fn solve_rat(a: &[Vec<Rat>], b: &[Rat]) -> Result<Option<Vec<Rat>>> {
    let n = a.len();
    debug_assert!(a.iter().all(|r| r.len() == n));
    debug_assert_eq!(b.len(), n);
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(row, &rhs)| {
            let mut r = row.clone();
            r.push(rhs);
            r
        })
        .collect();
    for col in 0..n {
        let Some(p) = (col..n).find(|&i| !m[i][col].is_zero()) else {
            return Ok(None);
        };
        m.swap(col, p);
        let pivot = m[col][col];
        for i in 0..n {
            if i == col || m[i][col].is_zero() {
                continue;
            }
            let factor = m[i][col].div(pivot)?;
            for j in col..=n {
                let t = factor.mul(m[col][j])?;
                m[i][j] = m[i][j].sub(t)?;
            }
        }
    }
    let mut x = Vec::with_capacity(n);
    for i in 0..n {
        x.push(m[i][n].div(m[i][i])?);
    }
    Ok(Some(x))
}
