//! Numeric certificates for the Hilbert bases.

use nalgebra::{DMatrix, DVector};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::Serialize;

use crate::error::Result;
use crate::group_actions::{sample_from_basis, seeded_rng, GroupElement};
use crate::linalg;
use crate::pair_catalog::quotient::get_quotient_for;
use crate::pair_catalog::{j_from_structure, CaseDescriptor};
use crate::par::{map_range, ExecMode};
use crate::ring::Dual;
use crate::tolerances;

use super::pfaffian::{pfaffian, SkewMatrix};

/// Anything that can be evaluated as a Hilbert map on 𝔳 ⊕ 𝔷.
pub trait InvariantMap: Sync {
    fn dims(&self) -> (usize, usize);
    fn eval(&self, v: &[f64], z: &[f64]) -> Vec<f64>;
    fn eval_dual(&self, v: &[Dual], z: &[Dual]) -> Vec<Dual>;
}

impl InvariantMap for CaseDescriptor {
    fn dims(&self) -> (usize, usize) {
        (self.dim_v, self.dim_z)
    }

    fn eval(&self, v: &[f64], z: &[f64]) -> Vec<f64> {
        self.hilbert(v, z).expect("dimensions checked by caller")
    }

    fn eval_dual(&self, v: &[Dual], z: &[Dual]) -> Vec<Dual> {
        self.hilbert(v, z).expect("dimensions checked by caller")
    }
}

/// A case whose entry `index` has the sign of its v₀² contribution flipped.
pub struct SignFlipMutant<'a> {
    pub case: &'a CaseDescriptor,
    pub index: usize,
}

impl InvariantMap for SignFlipMutant<'_> {
    fn dims(&self) -> (usize, usize) {
        self.case.dims()
    }

    fn eval(&self, v: &[f64], z: &[f64]) -> Vec<f64> {
        let mut out = self.case.eval(v, z);
        out[self.index] -= 2.0 * v[0] * v[0];
        out
    }

    fn eval_dual(&self, v: &[Dual], z: &[Dual]) -> Vec<Dual> {
        let mut out = self.case.eval_dual(v, z);
        out[self.index] = out[self.index] - Dual::constant(2.0) * v[0] * v[0];
        out
    }
}

pub fn eval_hilbert(case: &CaseDescriptor, v: &[f64], z: &[f64]) -> Result<Vec<f64>> {
    case.hilbert(v, z)
}

pub fn random_point(rng: &mut ChaCha8Rng, dim_v: usize, dim_z: usize) -> (Vec<f64>, Vec<f64>) {
    let v = (0..dim_v).map(|_| rng.gen_range(-1.0..1.0)).collect();
    let z = (0..dim_z).map(|_| rng.gen_range(-1.0..1.0)).collect();
    (v, z)
}

fn rel_gap(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs() / (1.0 + x.abs())).fold(0.0, f64::max)
}

fn max_of(xs: impl IntoIterator<Item = f64>) -> f64 {
    xs.into_iter().fold(0.0, f64::max)
}

/// max over samples of |ρ(g·x) − ρ(x)| / (1 + |ρ(x)|), with group elements
/// drawn from the case's generators and discrete elements.
pub fn invariance_residual(case: &CaseDescriptor, samples: usize, seed: u64, mode: ExecMode) -> f64 {
    invariance_residual_of(case, case, samples, seed, mode)
}

pub fn invariance_residual_of(
    map: &dyn InvariantMap,
    case: &CaseDescriptor,
    samples: usize,
    seed: u64,
    mode: ExecMode,
) -> f64 {
    let (dv, dz) = map.dims();
    max_of(map_range(mode, samples, |s| {
        let mut rng = seeded_rng(seed, s as u64);
        let g = sample_from_basis(&case.generators, &case.discrete, dv, dz, &mut rng);
        let (v, z) = random_point(&mut rng, dv, dz);
        residual_at(map, &g, &v, &z)
    }))
}

pub fn residual_at(map: &dyn InvariantMap, g: &GroupElement, v: &[f64], z: &[f64]) -> f64 {
    let (gv, gz) = g.apply(v, z);
    rel_gap(&map.eval(v, z), &map.eval(&gv, &gz))
}

fn directional(map: &dyn InvariantMap, v: &[f64], z: &[f64], dv: &[f64], dz: &[f64]) -> Vec<Dual> {
    let vd: Vec<Dual> = v.iter().zip(dv).map(|(&a, &b)| Dual::new(a, b)).collect();
    let zd: Vec<Dual> = z.iter().zip(dz).map(|(&a, &b)| Dual::new(a, b)).collect();
    map.eval_dual(&vd, &zd)
}

/// max over samples and generators A of |dρ_j(x)·(A x)| / (1 + |ρ_j(x)|).
/// Derivatives are exact directional derivatives by forward-mode dual numbers.
pub fn infinitesimal_residual(case: &CaseDescriptor, samples: usize, seed: u64, mode: ExecMode) -> f64 {
    infinitesimal_residual_of(case, case, samples, seed, mode)
}

pub fn infinitesimal_residual_of(
    map: &dyn InvariantMap,
    case: &CaseDescriptor,
    samples: usize,
    seed: u64,
    mode: ExecMode,
) -> f64 {
    let (dv, dz) = map.dims();
    max_of(map_range(mode, samples, |s| {
        let mut rng = seeded_rng(seed ^ 0x1f1f, s as u64);
        let (v, z) = random_point(&mut rng, dv, dz);
        let vv = DVector::from_column_slice(&v);
        let zz = DVector::from_column_slice(&z);
        max_of(case.generators.iter().map(|a| {
            let av = &a.a_v * &vv;
            let az = &a.a_z * &zz;
            let out = directional(map, &v, &z, av.as_slice(), az.as_slice());
            max_of(out.iter().map(|x| x.d.abs() / (1.0 + x.v.abs())))
        }))
    }))
}

/// d × dim 𝔫 Jacobian of ρ at (v, z).
pub fn jacobian(map: &dyn InvariantMap, v: &[f64], z: &[f64]) -> DMatrix<f64> {
    let (dv, dz) = map.dims();
    let n = dv + dz;
    let cols: Vec<Vec<f64>> = (0..n)
        .map(|k| {
            let mut ev = vec![0.0; dv];
            let mut ez = vec![0.0; dz];
            if k < dv {
                ev[k] = 1.0;
            } else {
                ez[k - dv] = 1.0;
            }
            directional(map, v, z, &ev, &ez).iter().map(|x| x.d).collect()
        })
        .collect();
    let d = cols.first().map_or(0, |c| c.len());
    DMatrix::from_fn(d, n, |i, k| cols[k][i])
}

/// Numeric rank of the row-normalized Jacobian.
pub fn jacobian_rank(map: &dyn InvariantMap, v: &[f64], z: &[f64], rel_tol: f64) -> usize {
    let mut j = jacobian(map, v, z);
    for mut row in j.row_iter_mut() {
        let norm = row.norm();
        if norm > 0.0 {
            row /= norm;
        }
    }
    linalg::rank(&j, rel_tol)
}

/// Fraction of random points at which the Jacobian has full rank d.
pub fn jacobian_pass_rate(case: &CaseDescriptor, samples: usize, seed: u64, mode: ExecMode) -> f64 {
    let d = case.d();
    let hits = map_range(mode, samples, |s| {
        let mut rng = seeded_rng(seed ^ 0x2e2e, s as u64);
        let (v, z) = random_point(&mut rng, case.dim_v, case.dim_z);
        jacobian_rank(case, &v, &z, tolerances::RANK_REL_TOL) == d
    })
    .into_iter()
    .filter(|&b| b)
    .count();
    if samples == 0 {
        1.0
    } else {
        hits as f64 / samples as f64
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BidegreeReport {
    pub bidegrees: Vec<(u32, u32)>,
    /// γ_j = deg_v + 2 deg_z.
    pub degrees: Vec<u32>,
    pub max_residual: f64,
}

/// Checks ρ_j(sv, tz) = s^a t^b ρ_j(v, z) on random data.
pub fn bidegree_check(case: &CaseDescriptor, samples: usize, seed: u64) -> BidegreeReport {
    let mut worst: f64 = 0.0;
    for s_idx in 0..samples {
        let mut rng = seeded_rng(seed ^ 0x3d3d, s_idx as u64);
        let (v, z) = random_point(&mut rng, case.dim_v, case.dim_z);
        let s: f64 = rng.gen_range(0.5..2.0);
        let t: f64 = rng.gen_range(0.5..2.0);
        let sv: Vec<f64> = v.iter().map(|x| s * x).collect();
        let tz: Vec<f64> = z.iter().map(|x| t * x).collect();
        let base = case.eval(&v, &z);
        let scaled = case.eval(&sv, &tz);
        for ((b, sc), &(a, c)) in base.iter().zip(&scaled).zip(&case.bidegrees) {
            let expect = s.powi(a as i32) * t.powi(c as i32) * b;
            worst = worst.max((sc - expect).abs() / expect.abs().max(1.0));
        }
    }
    BidegreeReport {
        bidegrees: case.bidegrees.clone(),
        degrees: case.bidegrees.iter().map(|&(a, b)| a + 2 * b).collect(),
        max_residual: worst,
    }
}

/// max over random (v, t) and quotient entries of |ρ_parent(v, tζ₀) − ρ′_j(v, t)^p|.
pub fn restriction_check(case: &CaseDescriptor, samples: usize, seed: u64) -> Result<f64> {
    let q = get_quotient_for(case.id)?;
    let mut worst: f64 = 0.0;
    for s in 0..samples {
        let mut rng = seeded_rng(seed ^ 0x4c4c, s as u64);
        let (v, _) = random_point(&mut rng, case.dim_v, 0);
        let t: f64 = rng.gen_range(-2.0..2.0);
        let parent = case.hilbert(&v, &q.z_point(&t))?;
        let rp = q.rho_prime(&v, &t);
        for (j, e) in q.entries.iter().enumerate() {
            let lhs = parent[e.parent];
            let rhs = rp[j].powi(e.power as i32);
            worst = worst.max((lhs - rhs).abs() / (1.0 + lhs.abs()));
        }
    }
    Ok(worst)
}

/// dim span{a_z ζ}: the dimension of the K-orbit through ζ, which is dim 𝔷 − 1
/// for a rank-one action at generic ζ.
pub fn orbit_codim(case: &CaseDescriptor, zeta: &[f64]) -> usize {
    case.orbit_dim(zeta)
}

/// Orbit dimension at a random point of 𝔷.
pub fn generic_orbit_codim(case: &CaseDescriptor, seed: u64) -> usize {
    let mut rng = seeded_rng(seed ^ 0x5b5b, 0);
    let (_, z) = random_point(&mut rng, 0, case.dim_z);
    orbit_codim(case, &z)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HTypeReport {
    pub block: u8,
    /// max | |J_z v| − |z||v| | over unit samples.
    pub max_defect: f64,
    /// dim 𝔳 − rank J_{ζ₀} (third block only).
    pub radical: Option<usize>,
    pub expected_radical: Option<usize>,
    pub verdict: bool,
}

pub fn h_type_check(case: &CaseDescriptor, samples: usize, seed: u64) -> Result<HTypeReport> {
    let s = case.structure_constants::<f64>()?;
    let block = case.block.unwrap_or(0);
    let mut worst: f64 = 0.0;
    for k in 0..samples {
        let mut rng = seeded_rng(seed ^ 0x6a6a, k as u64);
        let mut unit = |n: usize| {
            let x = DVector::from_fn(n, |_, _| StandardNormal.sample(&mut rng));
            x.normalize()
        };
        let z = unit(case.dim_z);
        let v = unit(case.dim_v);
        let jv = j_from_structure(&s, z.as_slice()) * v;
        worst = worst.max((jv.norm() - 1.0).abs());
    }
    if block == 3 {
        let q = get_quotient_for(case.id)?;
        let j0 = j_from_structure(&s, &q.zeta0);
        let radical = case.dim_v - linalg::rank(&j0, tolerances::RANK_REL_TOL);
        Ok(HTypeReport {
            block,
            max_defect: worst,
            radical: Some(radical),
            expected_radical: q.radical,
            verdict: worst > 1e-3 && Some(radical) == q.radical,
        })
    } else {
        Ok(HTypeReport { block, max_defect: worst, radical: None, expected_radical: None, verdict: worst <= tolerances::H_TYPE })
    }
}

fn random_skew(rng: &mut ChaCha8Rng, n: usize) -> DMatrix<f64> {
    let a = DMatrix::from_fn(n, n, |_, _| rng.gen_range(-1.0..1.0));
    &a - a.transpose()
}

fn pf_of(m: &DMatrix<f64>) -> f64 {
    let s = SkewMatrix::from_upper(m.nrows(), 0.0, |i, j| m[(i, j)]);
    pfaffian(&s).expect("even size")
}

/// Random orthogonal matrix from the QR factor of a Gaussian matrix.
pub fn random_orthogonal(rng: &mut ChaCha8Rng, n: usize) -> DMatrix<f64> {
    let a = DMatrix::from_fn(n, n, |_, _| StandardNormal.sample(&mut *rng));
    a.qr().q()
}

/// max over random even skew matrices of size ≤ `max_size` of |Pf² − det| / |det|.
pub fn pfaffian_det_residual(max_size: usize, per_size: usize, seed: u64) -> f64 {
    let mut worst: f64 = 0.0;
    for n in (2..=max_size).step_by(2) {
        for k in 0..per_size {
            let mut rng = seeded_rng(seed ^ 0x7979, (n * 1000 + k) as u64);
            let m = random_skew(&mut rng, n);
            let pf = pf_of(&m);
            let det = m.determinant();
            worst = worst.max((pf * pf - det).abs() / det.abs());
        }
    }
    worst
}

/// max over random orthogonal g of |Pf(gMgᵀ) − det(g) Pf(M)| / |Pf(M)|.
pub fn pfaffian_equivariance_residual(size: usize, samples: usize, seed: u64) -> f64 {
    let mut worst: f64 = 0.0;
    for k in 0..samples {
        let mut rng = seeded_rng(seed ^ 0x8888, k as u64);
        let m = random_skew(&mut rng, size);
        let g = random_orthogonal(&mut rng, size);
        let lhs = pf_of(&(&g * &m * g.transpose()));
        let rhs = g.determinant() * pf_of(&m);
        worst = worst.max((lhs - rhs).abs() / rhs.abs());
    }
    worst
}
