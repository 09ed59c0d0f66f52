//! Small dense matrices over rings or composition-algebra elements.

use crate::composition_algebras::{AlgebraTag, CAElement};
use crate::ring::{Ring, Scalar};

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<T> {
    pub rows: usize,
    pub cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn from_vec(rows: usize, cols: usize, data: Vec<T>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix shape");
        Matrix { rows, cols, data }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn filled(rows: usize, cols: usize, x: T) -> Self {
        Matrix { rows, cols, data: vec![x; rows * cols] }
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: T) {
        self.data[i * self.cols + j] = x;
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn map(&self, f: impl Fn(&T) -> T) -> Self {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).conj())
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "matrix product shape");
        Matrix::from_fn(self.rows, o.cols, |i, j| {
            let mut acc = self.get(i, 0).clone() * o.get(0, j).clone();
            for k in 1..self.cols {
                acc = acc + self.get(i, k).clone() * o.get(k, j).clone();
            }
            acc
        })
    }

    pub fn add(&self, o: &Self) -> Self {
        Matrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j).clone() + o.get(i, j).clone())
    }

    pub fn sub(&self, o: &Self) -> Self {
        Matrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j).clone() - o.get(i, j).clone())
    }

    pub fn neg(&self) -> Self {
        self.map(|x| -x.clone())
    }

    /// Entrywise left multiplication by a scalar.
    pub fn scale_left(&self, s: &T) -> Self {
        self.map(|x| s.clone() * x.clone())
    }

    pub fn trace(&self) -> T {
        let mut acc = self.get(0, 0).clone();
        for k in 1..self.rows.min(self.cols) {
            acc = acc + self.get(k, k).clone();
        }
        acc
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = self.identity_like();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn identity_like(&self) -> Self {
        let z = self.data[0].zero_like();
        let o = self.data[0].one_like();
        Matrix::from_fn(self.rows, self.rows, |i, j| if i == j { o.clone() } else { z.clone() })
    }

    pub fn commutator(&self, o: &Self) -> Self {
        self.mul(o).sub(&o.mul(self))
    }
}

impl<R: Ring> Matrix<R> {
    pub fn real_from_slice(rows: usize, cols: usize, x: &[R]) -> Self {
        Matrix::from_vec(rows, cols, x.to_vec())
    }
}

impl<R: Ring> Matrix<CAElement<R>> {
    /// Reads `rows × cols` entries of the given algebra, row-major, from real coordinates.
    pub fn from_coords(tag: AlgebraTag, rows: usize, cols: usize, x: &[R]) -> Self {
        let d = tag.dim();
        assert_eq!(x.len(), rows * cols * d, "coordinate count");
        Matrix::from_fn(rows, cols, |i, j| {
            let o = (i * cols + j) * d;
            CAElement::from_slice(tag, &x[o..o + d])
        })
    }

    pub fn to_coords(&self) -> Vec<R> {
        self.data.iter().flat_map(|e| e.coeffs().to_vec()).collect()
    }

    pub fn re_trace(&self) -> R {
        self.trace().coeffs()[0].clone()
    }

    /// Σ |entries|², the Euclidean norm of the coordinates.
    pub fn norm2(&self) -> R {
        self.data.iter().flat_map(|e| e.coeffs().iter()).fold(R::zero(), |a, c| a + c.clone() * c.clone())
    }

    /// Re tr(A* B), the real inner product.
    pub fn dot(&self, o: &Self) -> R {
        self.data
            .iter()
            .zip(&o.data)
            .flat_map(|(a, b)| a.coeffs().iter().zip(b.coeffs()))
            .fold(R::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quaternion_adjoint_reverses_products() {
        let a = Matrix::from_coords(AlgebraTag::H, 2, 2, &(0..16).map(|k| k as f64 - 3.0).collect::<Vec<_>>());
        let b = Matrix::from_coords(AlgebraTag::H, 2, 2, &(0..16).map(|k| (k * k % 7) as f64).collect::<Vec<_>>());
        let l = a.mul(&b).adjoint();
        let r = b.adjoint().mul(&a.adjoint());
        assert_eq!(l, r);
    }

    #[test]
    fn real_trace_and_power() {
        let m = Matrix::real_from_slice(2, 2, &[1.0, 1.0, 0.0, 1.0]);
        assert_eq!(m.pow(3), Matrix::real_from_slice(2, 2, &[1.0, 3.0, 0.0, 1.0]));
        assert_eq!(m.trace(), 2.0);
    }
}
