//! Fiber integrals over ζ₀^⊥ and the commutation 𝓡(DF) = D′(𝓡F).

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::pair_catalog::quotient::get_quotient;
use crate::pair_catalog::{get_case, CaseId};
use crate::par::{map_slice, ExecMode};
use crate::symm_calculus::{exact_hilbert, radon_reduce, DiffOp, StepTwoAlgebra};

use super::gaussian::GaussianPoly;
use super::quadrature::{for_each_tensor_node, hermite_rule, sample_grid, QuadSpec};

/// A function on 𝔳 ⊕ 𝔷 decaying like e^{−b|z|²} along the center.
pub trait SampledFunction: Sync {
    fn dims(&self) -> (usize, usize);

    /// The rate b.
    fn decay(&self) -> f64;

    fn eval(&self, v: &[f64], z: &[f64]) -> Complex64;

    /// F(v, z) e^{b|z|²}.
    fn eval_unweighted(&self, v: &[f64], z: &[f64]) -> Complex64 {
        self.eval(v, z) * (self.decay() * z.iter().map(|x| x * x).sum::<f64>()).exp()
    }

    /// Degree in z of the unweighted function, when it is a polynomial there.
    fn fiber_degree(&self) -> Option<usize> {
        None
    }
}

/// A closure with a declared decay rate.
pub struct FnSampled<F> {
    pub dim_v: usize,
    pub dim_z: usize,
    pub decay: f64,
    pub f: F,
}

impl<F: Fn(&[f64], &[f64]) -> Complex64 + Sync> SampledFunction for FnSampled<F> {
    fn dims(&self) -> (usize, usize) {
        (self.dim_v, self.dim_z)
    }
    fn decay(&self) -> f64 {
        self.decay
    }
    fn eval(&self, v: &[f64], z: &[f64]) -> Complex64 {
        (self.f)(v, z)
    }
}

/// Unit ζ₀ and an orthonormal basis of ζ₀^⊥.
pub fn fiber_basis(zeta0: &[f64]) -> Result<(Vec<f64>, Vec<Vec<f64>>)> {
    let norm = zeta0.iter().map(|x| x * x).sum::<f64>().sqrt();
    if !(norm > 0.0) {
        return Err(Error::Precondition("ζ₀ must be nonzero".into()));
    }
    let unit: Vec<f64> = zeta0.iter().map(|x| x / norm).collect();
    let n = unit.len();
    let mut frame = vec![unit.clone()];
    for e in 0..n {
        let mut w = vec![0.0; n];
        w[e] = 1.0;
        for _ in 0..2 {
            for f in &frame {
                let d: f64 = f.iter().zip(&w).map(|(a, b)| a * b).sum();
                w.iter_mut().zip(f).for_each(|(x, y)| *x -= d * y);
            }
        }
        let len = w.iter().map(|x| x * x).sum::<f64>().sqrt();
        if len > 1e-8 {
            frame.push(w.into_iter().map(|x| x / len).collect());
        }
        if frame.len() == n {
            break;
        }
    }
    let basis = frame.split_off(1);
    Ok((unit, basis))
}

/// 𝓡F(v, t) = ∫ F(v, tζ₀ + ζ′) dζ′ over ζ′ ⊥ ζ₀.
pub struct RadonTransform<'a> {
    f: &'a dyn SampledFunction,
    unit: Vec<f64>,
    basis: Vec<Vec<f64>>,
    order: usize,
    rule: Vec<(f64, f64)>,
}

impl<'a> RadonTransform<'a> {
    /// Uses `quad.order`, lowered to the exact order when F is polynomial along the fibers.
    pub fn new(f: &'a dyn SampledFunction, zeta0: &[f64], quad: &QuadSpec) -> Result<Self> {
        let order = match f.fiber_degree() {
            Some(p) => quad.order.min(p / 2 + 1).max(2),
            None => quad.order,
        };
        Self::with_order(f, zeta0, order, quad.max_nodes)
    }

    pub fn with_order(f: &'a dyn SampledFunction, zeta0: &[f64], order: usize, max_nodes: usize) -> Result<Self> {
        let (dv, dz) = f.dims();
        let _ = dv;
        if zeta0.len() != dz {
            return Err(Error::Dimension(format!("ζ₀ has {} entries, 𝔷 has dimension {dz}", zeta0.len())));
        }
        let (unit, basis) = fiber_basis(zeta0)?;
        let nodes = (order as f64).powi(basis.len() as i32);
        if nodes > max_nodes as f64 {
            return Err(Error::Precondition(format!("{nodes} quadrature nodes exceed the limit {max_nodes}")));
        }
        let rule = hermite_rule(order, f.decay())?;
        Ok(RadonTransform { f, unit, basis, order, rule })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn eval(&self, v: &[f64], t: f64) -> Complex64 {
        let b = self.f.decay();
        let mut z = vec![0.0; self.unit.len()];
        let mut acc = Complex64::new(0.0, 0.0);
        for_each_tensor_node(&self.rule, self.basis.len(), |s, w| {
            for (l, zl) in z.iter_mut().enumerate() {
                *zl = t * self.unit[l] + self.basis.iter().zip(s).map(|(e, si)| e[l] * si).sum::<f64>();
            }
            acc += self.f.eval_unweighted(v, &z) * w;
        });
        acc * (-b * t * t).exp()
    }

    /// Evaluates at orders q and 2q and fails when they disagree by more than `tol`.
    pub fn eval_checked(&self, v: &[f64], t: f64, tol: f64) -> Result<Complex64> {
        let coarse = self.eval(v, t);
        let fine = RadonTransform::with_order(self.f, &self.unit, 2 * self.order, usize::MAX)?.eval(v, t);
        let gap = (coarse - fine).norm();
        if gap > tol {
            return Err(Error::Quadrature(gap));
        }
        Ok(fine)
    }
}

/// 𝓡F for a Table 1 line at its quotient direction.
pub fn radon_transform<'a>(f: &'a dyn SampledFunction, line: u8, quad: &QuadSpec) -> Result<RadonTransform<'a>> {
    let q = get_quotient(line)?;
    RadonTransform::new(f, &q.zeta0, quad)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct CommutationResidual {
    /// sup |𝓡(DF) − D′(𝓡F)| over the grid.
    pub sup_abs: f64,
    /// sup |D′(𝓡F)| over the same grid.
    pub sup_value: f64,
}

impl CommutationResidual {
    pub fn relative(&self) -> f64 {
        self.sup_abs / self.sup_value.max(f64::MIN_POSITIVE)
    }
}

/// Compares 𝓡(DF) with D′(𝓡F), D′ the operator-level reduction, on the sample grid.
/// Both sides integrate fiber monomials with the tensor Gauss–Hermite rule.
pub fn radon_commutation_residual(d: &DiffOp, zeta0: &[f64], f: &GaussianPoly, quad: &QuadSpec, mode: ExecMode) -> Result<CommutationResidual> {
    let lhs = f.apply(d).radon(zeta0, quad)?;
    let rhs = f.radon(zeta0, quad)?.apply(&radon_reduce(d, f.dim_v, zeta0));
    let grid = sample_grid(f.dim_v + 1, quad.grid_points, quad.window);
    let vals = map_slice(mode, &grid, |p| ((lhs.eval_at(p) - rhs.eval_at(p)).norm(), rhs.eval_at(p).norm()));
    Ok(vals.into_iter().fold(CommutationResidual { sup_abs: 0.0, sup_value: 0.0 }, |acc, (e, v)| CommutationResidual {
        sup_abs: acc.sup_abs.max(e),
        sup_value: acc.sup_value.max(v),
    }))
}

/// The residual for D = λ′(ρ_j) on a Table 1 line at its smallest n.
pub fn check_radon_commutation(line: u8, generator_index: usize, f: &GaussianPoly, quad: &QuadSpec, mode: ExecMode) -> Result<CommutationResidual> {
    let case = get_case(CaseId::line(line))?;
    let q = get_quotient(line)?;
    let rho = exact_hilbert(&case)?;
    let p = rho
        .get(generator_index)
        .ok_or_else(|| Error::Precondition(format!("line {line} has {} generators", rho.len())))?;
    let alg = StepTwoAlgebra::from_case(&case)?;
    let d = alg.symmetrizer().symmetrize(p);
    radon_commutation_residual(&d, &q.zeta0, f, quad, mode)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symm_calculus::ExactPoly;
    use std::f64::consts::PI;

    #[test]
    fn fiber_basis_is_orthonormal_complement() {
        let (u, b) = fiber_basis(&[1.0, 2.0, 2.0]).unwrap();
        assert_eq!(b.len(), 2);
        for x in b.iter().chain(std::iter::once(&u)) {
            assert!((x.iter().map(|a| a * a).sum::<f64>() - 1.0).abs() < 1e-14);
        }
        for x in &b {
            assert!(x.iter().zip(&u).map(|(a, c)| a * c).sum::<f64>().abs() < 1e-14);
        }
        assert!(fiber_basis(&[0.0, 0.0]).is_err());
    }

    #[test]
    fn gaussian_closed_form() {
        let f = FnSampled {
            dim_v: 2,
            dim_z: 3,
            decay: 1.0,
            f: |v: &[f64], z: &[f64]| Complex64::new((-v.iter().chain(z).map(|x| x * x).sum::<f64>()).exp(), 0.0),
        };
        let r = RadonTransform::new(&f, &[0.0, 0.0, 1.0], &QuadSpec::default()).unwrap();
        for (v, t) in [([0.1f64, -0.3], 0.5f64), ([1.0, 0.0], -1.2)] {
            let expect = PI * (-(v[0] * v[0] + v[1] * v[1]) - t * t).exp();
            assert!((r.eval(&v, t).re - expect).abs() < 1e-8);
        }
    }

    #[test]
    fn order_doubling_flags_low_order() {
        let f = FnSampled { dim_v: 0, dim_z: 2, decay: 1.0, f: |_: &[f64], z: &[f64]| Complex64::new((3.0 * z[1]).cos() * (-z[1] * z[1]).exp(), 0.0) };
        let low = RadonTransform::with_order(&f, &[1.0, 0.0], 3, 100).unwrap();
        assert!(matches!(low.eval_checked(&[], 0.0, 1e-8), Err(Error::Quadrature(_))));
        let high = RadonTransform::with_order(&f, &[1.0, 0.0], 40, 100).unwrap();
        let expect = PI.sqrt() * (-9.0f64 / 4.0).exp();
        assert!((high.eval_checked(&[], 0.0, 1e-8).unwrap().re - expect).abs() < 1e-10);
    }

    #[test]
    fn moment_rule_matches_pointwise_quadrature() {
        let p = ExactPoly::var(0).mul_ref(&ExactPoly::var(3)) + ExactPoly::var(2).mul_ref(&ExactPoly::var(2)).mul_ref(&ExactPoly::var(4));
        let f = GaussianPoly::with_factor(2, 3, &p);
        let zeta0 = [0.0, 1.0, 0.0];
        let quad = QuadSpec::default();
        let moments = f.radon(&zeta0, &quad).unwrap();
        let pointwise = RadonTransform::new(&f, &zeta0, &quad).unwrap();
        for x in sample_grid(3, 20, 2.0) {
            assert!((moments.eval_at(&x) - pointwise.eval(&x[..2], x[2])).norm() < 1e-12);
        }
    }

    #[test]
    fn identity_operator_commutes_trivially() {
        let f = GaussianPoly::standard(3, 3);
        let r = radon_commutation_residual(&DiffOp::identity(), &[1.0, 0.0, 0.0], &f, &QuadSpec::default(), ExecMode::Sequential).unwrap();
        assert_eq!(r.sup_abs, 0.0);
    }
}
