//! Lie-algebra generators of the compact groups K acting on 𝔳 ⊕ 𝔷, their exponentials,
//! and seeded sampling of group elements.

use nalgebra::{DMatrix, DVector};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::composition_algebras::{left_mult_matrix, AlgebraTag, CAElement};
use crate::error::Result;
use crate::linalg;

#[derive(Clone, Debug, PartialEq)]
pub struct ActionElement {
    pub a_v: DMatrix<f64>,
    pub a_z: DMatrix<f64>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct GroupElement {
    pub g_v: DMatrix<f64>,
    pub g_z: DMatrix<f64>,
}

impl ActionElement {
    pub fn zero(dim_v: usize, dim_z: usize) -> Self {
        ActionElement { a_v: DMatrix::zeros(dim_v, dim_v), a_z: DMatrix::zeros(dim_z, dim_z) }
    }

    /// Matrix form of a linear map on 𝔳 ⊕ 𝔷 given pointwise.
    pub fn from_linear(dim_v: usize, dim_z: usize, f: impl Fn(&[f64], &[f64]) -> (Vec<f64>, Vec<f64>)) -> Self {
        let mut a_v = DMatrix::zeros(dim_v, dim_v);
        let mut a_z = DMatrix::zeros(dim_z, dim_z);
        let zero_v = vec![0.0; dim_v];
        let zero_z = vec![0.0; dim_z];
        for j in 0..dim_v {
            let mut e = zero_v.clone();
            e[j] = 1.0;
            let (img, _) = f(&e, &zero_z);
            a_v.set_column(j, &DVector::from_vec(img));
        }
        for j in 0..dim_z {
            let mut e = zero_z.clone();
            e[j] = 1.0;
            let (_, img) = f(&zero_v, &e);
            a_z.set_column(j, &DVector::from_vec(img));
        }
        ActionElement { a_v, a_z }
    }

    pub fn scaled(&self, t: f64) -> Self {
        ActionElement { a_v: &self.a_v * t, a_z: &self.a_z * t }
    }

    pub fn add(&self, o: &Self) -> Self {
        ActionElement { a_v: &self.a_v + &o.a_v, a_z: &self.a_z + &o.a_z }
    }

    pub fn skew_residual(&self) -> f64 {
        linalg::skew_residual(&self.a_v).max(linalg::skew_residual(&self.a_z))
    }
}

impl GroupElement {
    pub fn identity(dim_v: usize, dim_z: usize) -> Self {
        GroupElement { g_v: DMatrix::identity(dim_v, dim_v), g_z: DMatrix::identity(dim_z, dim_z) }
    }

    pub fn compose(&self, o: &Self) -> Self {
        GroupElement { g_v: &self.g_v * &o.g_v, g_z: &self.g_z * &o.g_z }
    }

    pub fn apply(&self, v: &[f64], z: &[f64]) -> (Vec<f64>, Vec<f64>) {
        let gv = &self.g_v * DVector::from_column_slice(v);
        let gz = &self.g_z * DVector::from_column_slice(z);
        (gv.iter().copied().collect(), gz.iter().copied().collect())
    }

    pub fn orthogonality_residual(&self) -> f64 {
        linalg::orthogonality_residual(&self.g_v).max(linalg::orthogonality_residual(&self.g_z))
    }
}

pub fn exp_action(a: &ActionElement, t: f64) -> GroupElement {
    GroupElement { g_v: linalg::expm(&(&a.a_v * t)), g_z: linalg::expm(&(&a.a_z * t)) }
}

/// Product of exponentials of three random combinations of `basis`, times one
/// randomly chosen discrete element (or none), deterministic in `seed`.
pub fn sample_from_basis(
    basis: &[ActionElement],
    discrete: &[GroupElement],
    dim_v: usize,
    dim_z: usize,
    rng: &mut ChaCha8Rng,
) -> GroupElement {
    let mut g = GroupElement::identity(dim_v, dim_z);
    if !basis.is_empty() {
        for _ in 0..3 {
            let mut a = ActionElement::zero(dim_v, dim_z);
            for b in basis {
                let c: f64 = StandardNormal.sample(rng);
                a = a.add(&b.scaled(c));
            }
            g = g.compose(&exp_action(&a, 1.0));
        }
    }
    if !discrete.is_empty() {
        let pick = (rand::Rng::gen_range(rng, 0..=discrete.len())) as usize;
        if pick > 0 {
            g = g.compose(&discrete[pick - 1]);
        }
    }
    g
}

pub fn seeded_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// The 21 products L_{e_i} L_{e_j}, 1 ≤ i < j ≤ 7, acting on 𝕆 = ℝ⁸.
pub fn spin7_basis() -> Vec<DMatrix<f64>> {
    let l: Vec<DMatrix<f64>> =
        (0..8).map(|k| left_mult_matrix(&CAElement::unit(AlgebraTag::O, k))).collect();
    let mut out = Vec::with_capacity(21);
    for i in 1..8 {
        for j in i + 1..8 {
            out.push(&l[i] * &l[j]);
        }
    }
    out
}

fn octonion_mul_coords(x: &[f64], y: &[f64]) -> Vec<f64> {
    crate::composition_algebras::ca_mul(&CAElement::from_slice(AlgebraTag::O, x), &CAElement::from_slice(AlgebraTag::O, y))
        .expect("octonions")
        .into_coeffs()
}

/// Derivations of 𝕆 as 7×7 matrices on Im 𝕆: the null space of the derivation
/// constraints over the standard basis of so(7), orthonormalized.
pub fn g2_basis() -> Result<Vec<DMatrix<f64>>> {
    let mut so7 = Vec::with_capacity(21);
    for i in 0..7 {
        for j in i + 1..7 {
            let mut m = DMatrix::zeros(7, 7);
            m[(i, j)] = -1.0;
            m[(j, i)] = 1.0;
            so7.push(m);
        }
    }
    let extend = |d: &DMatrix<f64>, x: &[f64]| -> Vec<f64> {
        let mut out = vec![0.0; 8];
        for r in 0..7 {
            out[r + 1] = (0..7).map(|c| d[(r, c)] * x[c + 1]).sum();
        }
        out
    };
    let unit = |k: usize| {
        let mut e = vec![0.0; 8];
        e[k] = 1.0;
        e
    };
    let mut rows: Vec<Vec<f64>> = Vec::new();
    for a in 1..8 {
        for b in 1..8 {
            let (ea, eb) = (unit(a), unit(b));
            let prod = octonion_mul_coords(&ea, &eb);
            let cols: Vec<Vec<f64>> = so7
                .iter()
                .map(|d| {
                    let lhs = extend(d, &prod);
                    let t1 = octonion_mul_coords(&extend(d, &ea), &eb);
                    let t2 = octonion_mul_coords(&ea, &extend(d, &eb));
                    (0..8).map(|k| lhs[k] - t1[k] - t2[k]).collect()
                })
                .collect();
            for k in 0..8 {
                rows.push(cols.iter().map(|c| c[k]).collect());
            }
        }
    }
    let m = DMatrix::from_fn(rows.len(), 21, |i, j| rows[i][j]);
    let ns = linalg::null_space(&m)?;
    Ok((0..ns.ncols())
        .map(|c| {
            let mut d = DMatrix::zeros(7, 7);
            for (k, s) in so7.iter().enumerate() {
                d += s * ns[(k, c)];
            }
            d
        })
        .collect())
}

/// Solves a_z [v,u] = [a_v v, u] + [v, a_v u] in the least-squares sense over
/// coordinate pairs; returns a_z and the max residual.
pub fn solve_center_action(
    a_v: &DMatrix<f64>,
    dim_z: usize,
    bracket: &dyn Fn(&[f64], &[f64]) -> Vec<f64>,
) -> (DMatrix<f64>, f64) {
    let n = a_v.nrows();
    let unit = |k: usize| {
        let mut e = vec![0.0; n];
        e[k] = 1.0;
        e
    };
    let col = |k: usize| a_v.column(k).iter().copied().collect::<Vec<f64>>();
    let mut w_cols = Vec::new();
    let mut b_cols = Vec::new();
    for r in 0..n {
        for s in r + 1..n {
            let w = bracket(&unit(r), &unit(s));
            let b1 = bracket(&col(r), &unit(s));
            let b2 = bracket(&unit(r), &col(s));
            w_cols.push(DVector::from_vec(w));
            b_cols.push(DVector::from_vec(b1.iter().zip(&b2).map(|(x, y)| x + y).collect()));
        }
    }
    let w = DMatrix::from_columns(&w_cols);
    let b = DMatrix::from_columns(&b_cols);
    debug_assert_eq!(w.nrows(), dim_z);
    let a_z = linalg::solve_right(&w, &b);
    let residual = (&a_z * &w - &b).amax();
    (a_z, residual)
}

/// Max over generator pairs of the distance of [A,B] from span(basis).
pub fn commutator_closure_residual(basis: &[DMatrix<f64>]) -> f64 {
    if basis.is_empty() {
        return 0.0;
    }
    let n = basis[0].nrows();
    let flat = DMatrix::from_fn(n * n, basis.len(), |i, k| basis[k][(i / n, i % n)]);
    let q = linalg::column_space(&flat);
    let mut worst: f64 = 0.0;
    for a in basis {
        for b in basis {
            let c = a * b - b * a;
            let cv = DVector::from_iterator(n * n, (0..n * n).map(|i| c[(i / n, i % n)]));
            let proj = &q * (q.transpose() * &cv);
            worst = worst.max((cv - proj).amax());
        }
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;

    fn im_oct_bracket(v: &[f64], u: &[f64]) -> Vec<f64> {
        let vu = octonion_mul_coords(v, &conj(u));
        let uv = octonion_mul_coords(u, &conj(v));
        (1..8).map(|k| 0.5 * (vu[k] - uv[k])).collect()
    }

    fn conj(x: &[f64]) -> Vec<f64> {
        x.iter().enumerate().map(|(k, c)| if k == 0 { *c } else { -c }).collect()
    }

    #[test]
    fn spin7_is_a_skew_lie_algebra_of_dim_21() {
        let b = spin7_basis();
        assert_eq!(b.len(), 21);
        assert!(b.iter().all(|m| linalg::skew_residual(m) <= 1e-12));
        let flat = DMatrix::from_fn(64, 21, |i, k| b[k][(i / 8, i % 8)]);
        assert_eq!(linalg::rank(&flat, 1e-8), 21);
        assert!(commutator_closure_residual(&b) <= 1e-10);
    }

    #[test]
    fn g2_has_dimension_14_and_derives() {
        let b = g2_basis().unwrap();
        assert_eq!(b.len(), 14);
        assert!(commutator_closure_residual(&b) <= 1e-10);
        for d in &b {
            let ext = |x: &[f64]| {
                let mut out = vec![0.0; 8];
                for r in 0..7 {
                    out[r + 1] = (0..7).map(|c| d[(r, c)] * x[c + 1]).sum();
                }
                out
            };
            for a in 0..8 {
                for c in 0..8 {
                    let mut ea = vec![0.0; 8];
                    ea[a] = 1.0;
                    let mut ec = vec![0.0; 8];
                    ec[c] = 1.0;
                    let lhs = ext(&octonion_mul_coords(&ea, &ec));
                    let r1 = octonion_mul_coords(&ext(&ea), &ec);
                    let r2 = octonion_mul_coords(&ea, &ext(&ec));
                    let res = (0..8).map(|k| (lhs[k] - r1[k] - r2[k]).abs()).fold(0.0, f64::max);
                    assert!(res <= 1e-10);
                }
            }
        }
    }

    #[test]
    fn center_action_of_spin7_generator() {
        let b = spin7_basis();
        let (a_z, res) = solve_center_action(&b[0], 7, &im_oct_bracket);
        assert!(res <= 1e-9, "residual {res}");
        assert!(linalg::skew_residual(&a_z) < 1e-9);
        let (zero, res0) = solve_center_action(&DMatrix::zeros(8, 8), 7, &im_oct_bracket);
        assert!(zero.amax() < 1e-14 && res0 < 1e-14);
    }

    #[test]
    fn generic_skew_is_not_equivariant() {
        let mut rng = seeded_rng(7, 0);
        let mut a = DMatrix::from_fn(8, 8, |_, _| rng.gen_range(-1.0..1.0));
        a = &a - a.transpose();
        let (_, res) = solve_center_action(&a, 7, &im_oct_bracket);
        assert!(res > 1e-3);
    }

    #[test]
    fn exponentials_are_orthogonal_one_parameter_groups() {
        let a = ActionElement { a_v: spin7_basis()[3].clone(), a_z: DMatrix::zeros(1, 1) };
        let g = exp_action(&a, 0.7);
        assert!(g.orthogonality_residual() <= 1e-10);
        let back = exp_action(&a, -0.7);
        let id = g.compose(&back);
        assert!((id.g_v - DMatrix::identity(8, 8)).amax() <= 1e-10);
        let e0 = exp_action(&ActionElement::zero(3, 2), 1.0);
        assert_eq!(e0, GroupElement::identity(3, 2));
    }
}
