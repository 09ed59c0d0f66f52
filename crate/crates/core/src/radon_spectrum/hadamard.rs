//! h(x, y) = Σ_j y_j h_j(x, y) for h vanishing on y = 0, with a C² cutoff.

use crate::error::{Error, Result};
use crate::ring::Dual;

use super::quadrature::{legendre_unit_rule, sample_grid, QuadSpec};

/// A function on ℝⁿ × ℝᵐ with its y-gradient.
pub trait SmoothFunction: Sync {
    fn dims(&self) -> (usize, usize);
    fn eval(&self, x: &[f64], y: &[f64]) -> f64;
    fn grad_y(&self, x: &[f64], y: &[f64]) -> Vec<f64>;
}

/// A closure over dual numbers; gradients come from forward mode.
pub struct DualFn<F> {
    pub n: usize,
    pub m: usize,
    pub f: F,
}

impl<F: Fn(&[Dual], &[Dual]) -> Dual + Sync> SmoothFunction for DualFn<F> {
    fn dims(&self) -> (usize, usize) {
        (self.n, self.m)
    }

    fn eval(&self, x: &[f64], y: &[f64]) -> f64 {
        let xd: Vec<Dual> = x.iter().map(|&a| Dual::constant(a)).collect();
        let yd: Vec<Dual> = y.iter().map(|&a| Dual::constant(a)).collect();
        (self.f)(&xd, &yd).v
    }

    fn grad_y(&self, x: &[f64], y: &[f64]) -> Vec<f64> {
        let xd: Vec<Dual> = x.iter().map(|&a| Dual::constant(a)).collect();
        (0..y.len())
            .map(|j| {
                let yd: Vec<Dual> = y.iter().enumerate().map(|(k, &a)| Dual::new(a, (k == j) as u8 as f64)).collect();
                (self.f)(&xd, &yd).d
            })
            .collect()
    }
}

/// ψ(r): 1 on [0, R/2], 0 beyond R, quintic smoothstep in between.
pub fn bump(r: f64, radius: f64) -> f64 {
    let half = 0.5 * radius;
    if r <= half {
        return 1.0;
    }
    if r >= radius {
        return 0.0;
    }
    let s = (r - half) / half;
    1.0 - s * s * s * (10.0 - 15.0 * s + 6.0 * s * s)
}

pub struct HadamardSplit<'a> {
    h: &'a dyn SmoothFunction,
    radius: f64,
    rule: Vec<(f64, f64)>,
}

impl HadamardSplit<'_> {
    /// h_j(x, y) = ψ(y) ∫₀¹ ∂_{y_j}h(x, ry) dr + y_j h(x, y)(1 − ψ(y))/|y|².
    pub fn components(&self, x: &[f64], y: &[f64]) -> Vec<f64> {
        let m = y.len();
        let r2: f64 = y.iter().map(|a| a * a).sum();
        let psi = bump(r2.sqrt(), self.radius);
        let mut out = vec![0.0; m];
        if psi > 0.0 {
            let mut ry = vec![0.0; m];
            for &(r, w) in &self.rule {
                ry.iter_mut().zip(y).for_each(|(a, b)| *a = r * b);
                let g = self.h.grad_y(x, &ry);
                out.iter_mut().zip(&g).for_each(|(o, gi)| *o += psi * w * gi);
            }
        }
        if psi < 1.0 {
            let hv = self.h.eval(x, y) * (1.0 - psi) / r2;
            out.iter_mut().zip(y).for_each(|(o, yj)| *o += yj * hv);
        }
        out
    }

    pub fn component(&self, j: usize, x: &[f64], y: &[f64]) -> f64 {
        self.components(x, y)[j]
    }

    /// Σ_j y_j h_j(x, y).
    pub fn reconstruct(&self, x: &[f64], y: &[f64]) -> f64 {
        self.components(x, y).iter().zip(y).map(|(a, b)| a * b).sum()
    }

    /// sup over a sample grid of |Σ y_j h_j − h|.
    pub fn reconstruction_residual(&self, quad: &QuadSpec) -> f64 {
        let (n, m) = self.h.dims();
        sample_grid(n + m, quad.grid_points, quad.window)
            .iter()
            .map(|p| {
                let (x, y) = p.split_at(n);
                (self.reconstruct(x, y) - self.h.eval(x, y)).abs()
            })
            .fold(0.0, f64::max)
    }
}

/// Tolerance on h(x, 0) = 0.
pub const VANISHING_TOL: f64 = 1e-9;

pub fn hadamard_split<'a>(h: &'a dyn SmoothFunction, cutoff_radius: f64, quad: &QuadSpec) -> Result<HadamardSplit<'a>> {
    if !(cutoff_radius > 0.0) {
        return Err(Error::Precondition("cutoff radius must be positive".into()));
    }
    let (n, m) = h.dims();
    let zero = vec![0.0; m];
    for x in sample_grid(n, quad.grid_points, quad.window) {
        let v = h.eval(&x, &zero);
        if v.abs() > VANISHING_TOL {
            return Err(Error::Precondition(format!("h(x, 0) = {v:.3e} at x = {x:?}")));
        }
    }
    Ok(HadamardSplit { h, radius: cutoff_radius, rule: legendre_unit_rule(quad.legendre_order)? })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bump_is_c2() {
        let r = 2.0;
        assert_eq!(bump(0.9, r), 1.0);
        assert_eq!(bump(2.1, r), 0.0);
        let h = 1e-4;
        for edge in [1.0, 2.0] {
            let d1 = (bump(edge + h, r) - bump(edge - h, r)) / (2.0 * h);
            let d2 = (bump(edge + h, r) - 2.0 * bump(edge, r) + bump(edge - h, r)) / (h * h);
            assert!(d1.abs() < 1e-6 && d2.abs() < 1e-3, "edge {edge}: {d1} {d2}");
        }
    }

    #[test]
    fn one_variable_recovers_the_quotient() {
        let g = |x: &[Dual], y: &[Dual]| (x[0] * y[0] - x[0] * x[0] - y[0] * y[0]).exp() + Dual::constant(0.5);
        let h = DualFn { n: 1, m: 1, f: move |x: &[Dual], y: &[Dual]| y[0] * g(x, y) };
        let split = hadamard_split(&h, 1.5, &QuadSpec::default()).unwrap();
        for (x, y) in [(0.3, 0.2), (-1.0, 0.9), (2.0, -3.0)] {
            let expect = g(&[Dual::constant(x)], &[Dual::constant(y)]).v;
            assert!((split.component(0, &[x], &[y]) - expect).abs() < 1e-6);
        }
    }

    #[test]
    fn precondition_is_checked() {
        let h = DualFn { n: 1, m: 1, f: |x: &[Dual], y: &[Dual]| x[0] + y[0] };
        assert!(matches!(hadamard_split(&h, 1.0, &QuadSpec::default()), Err(Error::Precondition(_))));
    }
}
