//! Orthonormal coordinate charts for the matrix spaces that occur as 𝔳 or 𝔷.
//!
//! Every chart is an isometry from Euclidean coordinates onto the space with an
//! invariant inner product (a fixed multiple of Re tr(xy*)).

use std::f64::consts::FRAC_1_SQRT_2;

use crate::composition_algebras::{AlgebraTag, CAElement};
use crate::matrix::Matrix;
use crate::ring::Ring;

pub type E<R> = CAElement<R>;

pub fn cx<R: Ring>(re: R, im: R) -> E<R> {
    E::new(AlgebraTag::C, vec![re, im]).expect("two coefficients")
}

pub fn quat<R: Ring>(c: [R; 4]) -> E<R> {
    E::new(AlgebraTag::H, c.to_vec()).expect("four coefficients")
}

/// The imaginary quaternion or octonion with the given imaginary coordinates.
pub fn imaginary<R: Ring>(tag: AlgebraTag, im: &[R]) -> E<R> {
    let mut c = vec![R::zero()];
    c.extend(im.iter().cloned());
    E::new(tag, c).expect("imaginary coordinates")
}

pub fn im_coords<R: Ring>(x: &E<R>) -> Vec<R> {
    x.coeffs()[1..].to_vec()
}

/// Complex a + bi as the quaternion a + bi + 0j + 0k.
pub fn c_to_h<R: Ring>(x: &E<R>) -> E<R> {
    let c = x.coeffs();
    quat([c[0].clone(), c[1].clone(), R::zero(), R::zero()])
}

pub fn sqrt_half<R: Ring>() -> R {
    R::from_f64(FRAC_1_SQRT_2)
}

pub fn sqrt_two<R: Ring>() -> R {
    R::from_f64(std::f64::consts::SQRT_2)
}

pub fn sum_sq<R: Ring>(x: &[R]) -> R {
    x.iter().fold(R::zero(), |a, c| a + c.clone() * c.clone())
}

pub fn dot<R: Ring>(x: &[R], y: &[R]) -> R {
    x.iter().zip(y).fold(R::zero(), |a, (p, q)| a + p.clone() * q.clone())
}

pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            out.push((i, j));
        }
    }
    out
}

/// so_n: coordinate z_ij (i < j, row-major) at entry (i,j), −z_ij at (j,i).
pub fn so_matrix<R: Ring>(n: usize, z: &[R]) -> Matrix<R> {
    let mut m = Matrix::filled(n, n, R::zero());
    for (k, (i, j)) in pairs(n).into_iter().enumerate() {
        m.set(i, j, z[k].clone());
        m.set(j, i, -z[k].clone());
    }
    m
}

pub fn so_coords<R: Ring>(m: &Matrix<R>) -> Vec<R> {
    pairs(m.rows).into_iter().map(|(i, j)| m.get(i, j).clone()).collect()
}

/// Λ²ℂⁿ as complex skew matrices, two real coordinates per pair i < j.
pub fn lambda2_matrix<R: Ring>(n: usize, z: &[R]) -> Matrix<E<R>> {
    let mut m = Matrix::filled(n, n, E::zero(AlgebraTag::C));
    for (k, (i, j)) in pairs(n).into_iter().enumerate() {
        let c = cx(z[2 * k].clone(), z[2 * k + 1].clone());
        m.set(i, j, c.clone());
        m.set(j, i, -c);
    }
    m
}

pub fn lambda2_coords<R: Ring>(m: &Matrix<E<R>>) -> Vec<R> {
    pairs(m.rows).into_iter().flat_map(|(i, j)| m.get(i, j).coeffs().to_vec()).collect()
}

/// u_n: n diagonal coordinates (z_kk = i a_k), then per pair (s, t) with
/// z_jk = (s + it)/√2, z_kj = (−s + it)/√2.
pub fn u_matrix<R: Ring>(n: usize, z: &[R]) -> Matrix<E<R>> {
    let mut m = Matrix::filled(n, n, E::zero(AlgebraTag::C));
    for k in 0..n {
        m.set(k, k, cx(R::zero(), z[k].clone()));
    }
    let h = sqrt_half::<R>();
    for (p, (j, k)) in pairs(n).into_iter().enumerate() {
        let s = z[n + 2 * p].clone() * h.clone();
        let t = z[n + 2 * p + 1].clone() * h.clone();
        m.set(j, k, cx(s.clone(), t.clone()));
        m.set(k, j, cx(-s, t));
    }
    m
}

pub fn u_coords<R: Ring>(m: &Matrix<E<R>>) -> Vec<R> {
    let n = m.rows;
    let r2 = sqrt_two::<R>();
    let mut out: Vec<R> = (0..n).map(|k| m.get(k, k).coeffs()[1].clone()).collect();
    for (j, k) in pairs(n) {
        let c = m.get(j, k).coeffs();
        out.push(c[0].clone() * r2.clone());
        out.push(c[1].clone() * r2.clone());
    }
    out
}

pub fn u_dim(n: usize) -> usize {
    n * n
}

/// su₂ as [[ia, b+ic], [−b+ic, −ia]].
pub fn su2_matrix<R: Ring>(z: &[R]) -> Matrix<E<R>> {
    let (a, b, c) = (z[0].clone(), z[1].clone(), z[2].clone());
    Matrix::from_vec(
        2,
        2,
        vec![cx(R::zero(), a.clone()), cx(b.clone(), c.clone()), cx(-b, c), cx(R::zero(), -a)],
    )
}

pub fn su2_coords<R: Ring>(m: &Matrix<E<R>>) -> Vec<R> {
    let d = m.get(0, 0).coeffs();
    let o = m.get(0, 1).coeffs();
    vec![d[1].clone(), o[0].clone(), o[1].clone()]
}

/// Traceless quaternionic Hermitian 2×2 matrices [[a, q], [q̄, −a]].
pub fn hs2_matrix<R: Ring>(z: &[R]) -> Matrix<E<R>> {
    let a = z[0].clone();
    let q = quat([z[1].clone(), z[2].clone(), z[3].clone(), z[4].clone()]);
    Matrix::from_vec(
        2,
        2,
        vec![E::real(AlgebraTag::H, a.clone()), q.clone(), crate::composition_algebras::ca_conj(&q), E::real(AlgebraTag::H, -a)],
    )
}

pub fn hs2_coords<R: Ring>(m: &Matrix<E<R>>) -> Vec<R> {
    let mut out = vec![m.get(0, 0).coeffs()[0].clone()];
    out.extend(m.get(0, 1).coeffs().iter().cloned());
    out
}

/// Orthonormal basis of the trace-zero diagonal: u_k ∝ (1,…,1,−k,0,…), k = 1..n−1.
fn helmert(n: usize, k: usize) -> Vec<f64> {
    let norm = ((k * (k + 1)) as f64).sqrt();
    (0..n)
        .map(|i| {
            if i < k {
                1.0 / norm
            } else if i == k {
                -(k as f64) / norm
            } else {
                0.0
            }
        })
        .collect()
}

/// HS²₀ℍⁿ: n−1 Helmert diagonal coordinates, then 4 per pair with z_jk = q/√2.
pub fn hs0_matrix<R: Ring>(n: usize, z: &[R]) -> Matrix<E<R>> {
    let mut m = Matrix::filled(n, n, E::zero(AlgebraTag::H));
    for i in 0..n {
        let mut d = R::zero();
        for k in 1..n {
            d = d + z[k - 1].clone() * R::from_f64(helmert(n, k)[i]);
        }
        m.set(i, i, E::real(AlgebraTag::H, d));
    }
    let h = sqrt_half::<R>();
    for (p, (j, k)) in pairs(n).into_iter().enumerate() {
        let o = n - 1 + 4 * p;
        let q = quat([z[o].clone(), z[o + 1].clone(), z[o + 2].clone(), z[o + 3].clone()]).scale(&h);
        m.set(j, k, q.clone());
        m.set(k, j, crate::composition_algebras::ca_conj(&q));
    }
    m
}

pub fn hs0_coords(m: &Matrix<E<f64>>) -> Vec<f64> {
    let n = m.rows;
    let mut out: Vec<f64> = (1..n)
        .map(|k| {
            let u = helmert(n, k);
            (0..n).map(|i| u[i] * m.get(i, i).coeffs()[0]).sum()
        })
        .collect();
    for (j, k) in pairs(n) {
        out.extend(m.get(j, k).coeffs().iter().map(|c| c * std::f64::consts::SQRT_2));
    }
    out
}

pub fn hs0_dim(n: usize) -> usize {
    n - 1 + 2 * n * (n - 1)
}

/// sp₂: imaginary diagonal p₁, p₂ (3 each), then q with z₁₂ = q/√2, z₂₁ = −q̄/√2.
pub fn sp2_matrix<R: Ring>(z: &[R]) -> Matrix<E<R>> {
    let p1 = imaginary(AlgebraTag::H, &z[0..3]);
    let p2 = imaginary(AlgebraTag::H, &z[3..6]);
    let q = quat([z[6].clone(), z[7].clone(), z[8].clone(), z[9].clone()]).scale(&sqrt_half::<R>());
    let qb = -crate::composition_algebras::ca_conj(&q);
    Matrix::from_vec(2, 2, vec![p1, q, qb, p2])
}

pub fn sp2_coords(m: &Matrix<E<f64>>) -> Vec<f64> {
    let mut out = im_coords(m.get(0, 0));
    out.extend(im_coords(m.get(1, 1)));
    out.extend(m.get(0, 1).coeffs().iter().map(|c| c * std::f64::consts::SQRT_2));
    out
}
