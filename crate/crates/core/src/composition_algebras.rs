//! ℝ, ℂ, ℍ and 𝕆 over a generic coefficient ring, built by Cayley–Dickson doubling
//! with (a,b)(c,d) = (ac − d̄b, da + bc̄).

use std::ops::{Add, Mul, Neg, Sub};

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::{Ring, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum AlgebraTag {
    R,
    C,
    H,
    O,
}

impl AlgebraTag {
    pub fn dim(self) -> usize {
        match self {
            AlgebraTag::R => 1,
            AlgebraTag::C => 2,
            AlgebraTag::H => 4,
            AlgebraTag::O => 8,
        }
    }

    pub fn from_dim(dim: usize) -> Option<Self> {
        match dim {
            1 => Some(AlgebraTag::R),
            2 => Some(AlgebraTag::C),
            4 => Some(AlgebraTag::H),
            8 => Some(AlgebraTag::O),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CAElement<R> {
    tag: AlgebraTag,
    coeffs: Vec<R>,
}

fn cd_conj<R: Ring>(x: &[R]) -> Vec<R> {
    let mut out = Vec::with_capacity(x.len());
    out.push(x[0].clone());
    out.extend(x[1..].iter().map(|c| -c.clone()));
    out
}

fn cd_mul<R: Ring>(x: &[R], y: &[R]) -> Vec<R> {
    let n = x.len();
    if n == 1 {
        return vec![x[0].clone() * y[0].clone()];
    }
    let h = n / 2;
    let (a, b) = x.split_at(h);
    let (c, d) = y.split_at(h);
    let ac = cd_mul(a, c);
    let db = cd_mul(&cd_conj(d), b);
    let da = cd_mul(d, a);
    let bc = cd_mul(b, &cd_conj(c));
    let mut out = Vec::with_capacity(n);
    out.extend(ac.into_iter().zip(db).map(|(p, q)| p - q));
    out.extend(da.into_iter().zip(bc).map(|(p, q)| p + q));
    out
}

impl<R: Ring> CAElement<R> {
    pub fn new(tag: AlgebraTag, coeffs: Vec<R>) -> Result<Self> {
        if coeffs.len() != tag.dim() {
            return Err(Error::Dimension(format!(
                "{:?} needs {} coefficients, got {}",
                tag,
                tag.dim(),
                coeffs.len()
            )));
        }
        Ok(CAElement { tag, coeffs })
    }

    /// Panics on a length mismatch; for internal callers with fixed shapes.
    pub fn from_slice(tag: AlgebraTag, coeffs: &[R]) -> Self {
        Self::new(tag, coeffs.to_vec()).expect("coefficient count")
    }

    pub fn zero(tag: AlgebraTag) -> Self {
        CAElement { tag, coeffs: vec![R::zero(); tag.dim()] }
    }

    pub fn one(tag: AlgebraTag) -> Self {
        Self::real(tag, R::one())
    }

    pub fn real(tag: AlgebraTag, r: R) -> Self {
        let mut coeffs = vec![R::zero(); tag.dim()];
        coeffs[0] = r;
        CAElement { tag, coeffs }
    }

    /// The k-th basis unit e_k (e_0 = 1).
    pub fn unit(tag: AlgebraTag, k: usize) -> Self {
        let mut coeffs = vec![R::zero(); tag.dim()];
        coeffs[k] = R::one();
        CAElement { tag, coeffs }
    }

    pub fn tag(&self) -> AlgebraTag {
        self.tag
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn scale(&self, r: &R) -> Self {
        CAElement { tag: self.tag, coeffs: self.coeffs.iter().map(|c| c.clone() * r.clone()).collect() }
    }
}

pub fn ca_mul<R: Ring>(x: &CAElement<R>, y: &CAElement<R>) -> Result<CAElement<R>> {
    if x.tag != y.tag {
        return Err(Error::TagMismatch(x.tag, y.tag));
    }
    Ok(CAElement { tag: x.tag, coeffs: cd_mul(&x.coeffs, &y.coeffs) })
}

pub fn ca_conj<R: Ring>(x: &CAElement<R>) -> CAElement<R> {
    CAElement { tag: x.tag, coeffs: cd_conj(&x.coeffs) }
}

pub fn ca_re<R: Ring>(x: &CAElement<R>) -> R {
    x.coeffs[0].clone()
}

pub fn ca_im<R: Ring>(x: &CAElement<R>) -> CAElement<R> {
    let mut coeffs = x.coeffs.clone();
    coeffs[0] = R::zero();
    CAElement { tag: x.tag, coeffs }
}

pub fn ca_norm2<R: Ring>(x: &CAElement<R>) -> R {
    ca_re(&ca_mul(x, &ca_conj(x)).expect("same tag"))
}

/// Real inner product Re(x ȳ), the Euclidean product of coefficient vectors.
pub fn ca_dot<R: Ring>(x: &CAElement<R>, y: &CAElement<R>) -> R {
    x.coeffs.iter().zip(&y.coeffs).fold(R::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
}

/// Matrix of x ↦ a·x in the coefficient basis.
pub fn left_mult_matrix(a: &CAElement<f64>) -> DMatrix<f64> {
    let n = a.tag.dim();
    DMatrix::from_fn(n, n, |i, j| cd_mul(&a.coeffs, CAElement::<f64>::unit(a.tag, j).coeffs())[i])
}

/// Matrix of x ↦ x·a in the coefficient basis.
pub fn right_mult_matrix(a: &CAElement<f64>) -> DMatrix<f64> {
    let n = a.tag.dim();
    DMatrix::from_fn(n, n, |i, j| cd_mul(CAElement::<f64>::unit(a.tag, j).coeffs(), &a.coeffs)[i])
}

fn same_tag<R>(x: &CAElement<R>, y: &CAElement<R>) {
    assert_eq!(x.tag, y.tag, "composition algebra tag mismatch");
}

impl<R: Ring> Add for CAElement<R> {
    type Output = CAElement<R>;
    fn add(self, o: Self) -> Self {
        same_tag(&self, &o);
        CAElement { tag: self.tag, coeffs: self.coeffs.into_iter().zip(o.coeffs).map(|(a, b)| a + b).collect() }
    }
}

impl<R: Ring> Sub for CAElement<R> {
    type Output = CAElement<R>;
    fn sub(self, o: Self) -> Self {
        same_tag(&self, &o);
        CAElement { tag: self.tag, coeffs: self.coeffs.into_iter().zip(o.coeffs).map(|(a, b)| a - b).collect() }
    }
}

impl<R: Ring> Mul for CAElement<R> {
    type Output = CAElement<R>;
    fn mul(self, o: Self) -> Self {
        ca_mul(&self, &o).expect("composition algebra tag mismatch")
    }
}

impl<R: Ring> Neg for CAElement<R> {
    type Output = CAElement<R>;
    fn neg(self) -> Self {
        CAElement { tag: self.tag, coeffs: self.coeffs.into_iter().map(|a| -a).collect() }
    }
}

impl<R: Ring> Scalar for CAElement<R> {
    fn zero_like(&self) -> Self {
        CAElement::zero(self.tag)
    }
    fn one_like(&self) -> Self {
        CAElement::one(self.tag)
    }
    fn conj(&self) -> Self {
        ca_conj(self)
    }
}
