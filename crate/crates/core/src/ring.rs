//! Coefficient rings shared by the numeric and exact code paths.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// A commutative ring the invariant formulas can be evaluated over.
pub trait Ring:
    Clone
    + Debug
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn from_ratio(num: i64, den: i64) -> Self;
    /// Exact rings take the binary value of `x` verbatim.
    fn from_f64(x: f64) -> Self;

    fn scale_i64(self, k: i64) -> Self {
        self * Self::from_i64(k)
    }
}

impl Ring for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_i64(n: i64) -> Self {
        n as f64
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }
    fn from_f64(x: f64) -> Self {
        x
    }
}

impl Ring for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }
    fn from_f64(x: f64) -> Self {
        BigRational::from_float(x).expect("finite float")
    }
}

/// Forward-mode dual number `v + d·ε`, ε² = 0.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Dual {
    pub v: f64,
    pub d: f64,
}

impl Dual {
    pub fn new(v: f64, d: f64) -> Self {
        Dual { v, d }
    }
    pub fn constant(v: f64) -> Self {
        Dual { v, d: 0.0 }
    }
    pub fn exp(self) -> Self {
        let e = self.v.exp();
        Dual { v: e, d: e * self.d }
    }
}

impl Add for Dual {
    type Output = Dual;
    fn add(self, o: Dual) -> Dual {
        Dual::new(self.v + o.v, self.d + o.d)
    }
}

impl Sub for Dual {
    type Output = Dual;
    fn sub(self, o: Dual) -> Dual {
        Dual::new(self.v - o.v, self.d - o.d)
    }
}

impl Mul for Dual {
    type Output = Dual;
    fn mul(self, o: Dual) -> Dual {
        Dual::new(self.v * o.v, self.v * o.d + self.d * o.v)
    }
}

impl Neg for Dual {
    type Output = Dual;
    fn neg(self) -> Dual {
        Dual::new(-self.v, -self.d)
    }
}

impl Ring for Dual {
    fn zero() -> Self {
        Dual::constant(0.0)
    }
    fn one() -> Self {
        Dual::constant(1.0)
    }
    fn from_i64(n: i64) -> Self {
        Dual::constant(n as f64)
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        Dual::constant(num as f64 / den as f64)
    }
    fn from_f64(x: f64) -> Self {
        Dual::constant(x)
    }
}

pub fn sum<R: Ring>(items: impl IntoIterator<Item = R>) -> R {
    items.into_iter().fold(R::zero(), |a, b| a + b)
}

pub fn pow<R: Ring>(x: &R, k: u32) -> R {
    let mut acc = R::one();
    for _ in 0..k {
        acc = acc * x.clone();
    }
    acc
}

/// Scalars for generic matrices: rings and composition-algebra elements.
pub trait Scalar:
    Clone + Debug + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn conj(&self) -> Self;
}

impl<R: Ring> Scalar for R {
    fn zero_like(&self) -> Self {
        R::zero()
    }
    fn one_like(&self) -> Self {
        R::one()
    }
    fn conj(&self) -> Self {
        self.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dual_product_rule() {
        let x = Dual::new(3.0, 1.0);
        let y = x * x * x;
        assert_eq!(y.v, 27.0);
        assert_eq!(y.d, 27.0);
    }

    #[test]
    fn rational_from_f64_is_exact() {
        let q = <BigRational as Ring>::from_f64(0.375);
        assert_eq!(q, <BigRational as Ring>::from_ratio(3, 8));
    }

    #[test]
    fn pow_and_sum() {
        assert_eq!(pow(&2.0f64, 10), 1024.0);
        assert_eq!(sum(vec![1.0f64, 2.0, 3.0]), 6.0);
    }
}
