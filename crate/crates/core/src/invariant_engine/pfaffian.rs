//! Pfaffians by first-row expansion, memoized over index subsets.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::ring::Scalar;

/// Square matrix with Mᵀ = −M, stored by its strict upper triangle.
#[derive(Clone, Debug, PartialEq)]
pub struct SkewMatrix<T> {
    n: usize,
    upper: Vec<T>,
    zero: T,
}

impl<T: Scalar> SkewMatrix<T> {
    /// Builds from the entries m_ij, i < j; `zero` fixes the scalar kind.
    pub fn from_upper(n: usize, zero: T, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut upper = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for i in 0..n {
            for j in i + 1..n {
                upper.push(f(i, j));
            }
        }
        SkewMatrix { n, upper, zero }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    fn idx(&self, i: usize, j: usize) -> usize {
        i * self.n - i * (i + 1) / 2 + (j - i - 1)
    }

    pub fn get(&self, i: usize, j: usize) -> T {
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self.upper[self.idx(i, j)].clone(),
            std::cmp::Ordering::Greater => -self.upper[self.idx(j, i)].clone(),
            std::cmp::Ordering::Equal => self.zero.clone(),
        }
    }
}

impl<T: Scalar + PartialEq> SkewMatrix<T> {
    /// Rejects rows that are not exactly antisymmetric.
    pub fn try_from_rows(rows: &[Vec<T>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Dimension("skew matrix must be square".into()));
        }
        if n == 0 {
            return Err(Error::Dimension("empty matrix".into()));
        }
        let zero = rows[0][0].zero_like();
        for i in 0..n {
            if rows[i][i] != zero {
                return Err(Error::NotSkew);
            }
            for j in i + 1..n {
                if rows[i][j] != -rows[j][i].clone() {
                    return Err(Error::NotSkew);
                }
            }
        }
        Ok(SkewMatrix::from_upper(n, zero, |i, j| rows[i][j].clone()))
    }
}

/// The bordered matrix (z | v) = [[z, v], [−ᵗv, 0]].
pub fn bordered<T: Scalar>(z: &SkewMatrix<T>, v: &[T]) -> Result<SkewMatrix<T>> {
    let n = z.dim();
    if v.len() != n {
        return Err(Error::Dimension(format!("border of length {} for a {n}×{n} matrix", v.len())));
    }
    Ok(SkewMatrix::from_upper(n + 1, z.zero.clone(), |i, j| if j == n { v[i].clone() } else { z.get(i, j) }))
}

pub fn pfaffian<T: Scalar>(m: &SkewMatrix<T>) -> Result<T> {
    let n = m.dim();
    if n == 0 || n % 2 == 1 {
        return Err(Error::OddDimension(n));
    }
    if n > 63 {
        return Err(Error::Dimension("pfaffian limited to 62 rows".into()));
    }
    let mut memo = HashMap::new();
    Ok(pf_rec(m, (1u64 << n) - 1, &mut memo))
}

fn pf_rec<T: Scalar>(m: &SkewMatrix<T>, mask: u64, memo: &mut HashMap<u64, T>) -> T {
    if mask == 0 {
        return m.zero.one_like();
    }
    if let Some(v) = memo.get(&mask) {
        return v.clone();
    }
    let i = mask.trailing_zeros() as usize;
    let rest = mask & !(1u64 << i);
    let mut acc: Option<T> = None;
    let mut sign_positive = true;
    let mut bits = rest;
    while bits != 0 {
        let j = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        let term = m.get(i, j) * pf_rec(m, rest & !(1u64 << j), memo);
        let term = if sign_positive { term } else { -term };
        acc = Some(match acc {
            None => term,
            Some(a) => a + term,
        });
        sign_positive = !sign_positive;
    }
    let out = acc.expect("nonempty mask has at least two indices");
    memo.insert(mask, out.clone());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_by_two() {
        let m = SkewMatrix::from_upper(2, 0.0, |_, _| 3.5);
        assert_eq!(pfaffian(&m).unwrap(), 3.5);
    }

    #[test]
    fn block_diagonal() {
        let m = SkewMatrix::from_upper(4, 0.0, |i, j| if (i, j) == (0, 1) || (i, j) == (2, 3) { 1.0 } else { 0.0 });
        assert_eq!(pfaffian(&m).unwrap(), 1.0);
    }

    #[test]
    fn odd_dimension_rejected() {
        let z = SkewMatrix::from_upper(2, 0.0, |_, _| 1.0);
        let b = bordered(&z, &[2.0, 3.0]).unwrap();
        assert!(matches!(pfaffian(&b), Err(Error::OddDimension(3))));
        assert!(bordered(&z, &[1.0]).is_err());
    }

    #[test]
    fn zero_border_is_zero() {
        let z = SkewMatrix::from_upper(3, 0.0, |_, _| 0.0);
        let b = bordered(&z, &[0.0; 3]).unwrap();
        assert!((0..4).all(|i| (0..4).all(|j| b.get(i, j) == 0.0)));
        assert_eq!(pfaffian(&b).unwrap(), 0.0);
    }

    #[test]
    fn asymmetric_rows_rejected() {
        let rows = vec![vec![0.0, 1.0], vec![1.0, 0.0]];
        assert!(matches!(SkewMatrix::try_from_rows(&rows), Err(Error::NotSkew)));
    }
}
