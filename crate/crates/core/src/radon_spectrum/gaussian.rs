//! Gaussian × polynomial test functions with analytic derivatives.

use std::collections::{BTreeMap, HashMap};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::symm_calculus::{DiffOp, ExactPoly, Monomial};

use super::quadrature::{hermite_rule, QuadSpec};
use super::transform::{fiber_basis, SampledFunction};

/// Polynomial with complex floating coefficients.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct CPoly {
    terms: BTreeMap<Monomial, Complex64>,
}

impl CPoly {
    pub fn zero() -> Self {
        CPoly::default()
    }

    pub fn constant(c: Complex64) -> Self {
        let mut p = CPoly::zero();
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn from_exact(p: &ExactPoly) -> Self {
        let mut out = CPoly::zero();
        for (m, c) in p.terms() {
            out.add_term(m.clone(), c.to_c64());
        }
        out
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Complex64> {
        &self.terms
    }

    pub fn add_term(&mut self, m: Monomial, c: Complex64) {
        if c == Complex64::new(0.0, 0.0) {
            return;
        }
        *self.terms.entry(m).or_default() += c;
    }

    pub fn add_assign_ref(&mut self, o: &CPoly) {
        for (m, c) in &o.terms {
            self.add_term(m.clone(), *c);
        }
    }

    pub fn scale(&self, s: Complex64) -> CPoly {
        let mut out = CPoly::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c * s);
        }
        out
    }

    pub fn mul_ref(&self, o: &CPoly) -> CPoly {
        let mut out = CPoly::zero();
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                out.add_term(a.mul(b), x * y);
            }
        }
        out
    }

    pub fn partial(&self, i: usize) -> CPoly {
        let mut out = CPoly::zero();
        for (m, c) in &self.terms {
            let e = m.exp(i);
            if e > 0 {
                out.add_term(m.with_exp(i, e - 1), c * e as f64);
            }
        }
        out
    }

    /// x_i · self.
    pub fn times_var(&self, i: usize) -> CPoly {
        let mut out = CPoly::zero();
        for (m, c) in &self.terms {
            out.add_term(m.with_exp(i, m.exp(i) + 1), *c);
        }
        out
    }

    pub fn eval(&self, x: &[f64]) -> Complex64 {
        self.terms
            .iter()
            .map(|(m, c)| m.support().fold(*c, |acc, (i, e)| acc * x[i].powi(e as i32)))
            .sum()
    }

    pub fn degree_in(&self, range: std::ops::Range<usize>) -> u32 {
        self.terms.keys().map(|m| m.degree_in(range.clone())).max().unwrap_or(0)
    }

    pub fn max_abs_coeff(&self) -> f64 {
        self.terms.values().map(|c| c.norm()).fold(0.0, f64::max)
    }
}

/// F(v, z) = P(v, z) e^{−a|v|² − b|z|²}, variables v_0.. then z_0...
#[derive(Clone, Debug, PartialEq)]
pub struct GaussianPoly {
    pub dim_v: usize,
    pub dim_z: usize,
    pub a: f64,
    pub b: f64,
    pub poly: CPoly,
}

impl GaussianPoly {
    pub fn new(dim_v: usize, dim_z: usize, a: f64, b: f64, poly: CPoly) -> Result<Self> {
        if !(a > 0.0 && b > 0.0) {
            return Err(Error::Precondition("Gaussian rates must be positive".into()));
        }
        Ok(GaussianPoly { dim_v, dim_z, a, b, poly })
    }

    /// e^{−|v|²−|z|²}.
    pub fn standard(dim_v: usize, dim_z: usize) -> Self {
        GaussianPoly { dim_v, dim_z, a: 1.0, b: 1.0, poly: CPoly::constant(Complex64::new(1.0, 0.0)) }
    }

    pub fn with_factor(dim_v: usize, dim_z: usize, p: &ExactPoly) -> Self {
        GaussianPoly { dim_v, dim_z, a: 1.0, b: 1.0, poly: CPoly::from_exact(p) }
    }

    fn rate(&self, i: usize) -> f64 {
        if i < self.dim_v {
            self.a
        } else {
            self.b
        }
    }

    fn envelope(&self, x: &[f64]) -> f64 {
        let (v, z) = x.split_at(self.dim_v);
        (-self.a * v.iter().map(|t| t * t).sum::<f64>() - self.b * z.iter().map(|t| t * t).sum::<f64>()).exp()
    }

    pub fn eval_at(&self, x: &[f64]) -> Complex64 {
        self.poly.eval(x) * self.envelope(x)
    }

    pub fn linear_combination(&self, s: Complex64, o: &GaussianPoly, t: Complex64) -> Result<GaussianPoly> {
        if (self.dim_v, self.dim_z, self.a, self.b) != (o.dim_v, o.dim_z, o.a, o.b) {
            return Err(Error::Dimension("Gaussian envelopes differ".into()));
        }
        let mut poly = self.poly.scale(s);
        poly.add_assign_ref(&o.poly.scale(t));
        Ok(GaussianPoly { poly, ..self.clone() })
    }

    /// ∂_i F, as P ↦ ∂_i P − 2c_i x_i P.
    pub fn partial(&self, i: usize) -> GaussianPoly {
        let mut p = self.poly.partial(i);
        p.add_assign_ref(&self.poly.times_var(i).scale(Complex64::new(-2.0 * self.rate(i), 0.0)));
        GaussianPoly { poly: p, ..self.clone() }
    }

    /// D F for a normal-ordered operator D.
    pub fn apply(&self, d: &DiffOp) -> GaussianPoly {
        let mut cache: HashMap<Monomial, CPoly> = HashMap::new();
        let mut out = CPoly::zero();
        for (beta, coeff) in d.terms() {
            let deriv = self.derivative(beta, &mut cache);
            out.add_assign_ref(&CPoly::from_exact(coeff).mul_ref(&deriv));
        }
        GaussianPoly { poly: out, ..self.clone() }
    }

    fn derivative(&self, beta: &Monomial, cache: &mut HashMap<Monomial, CPoly>) -> CPoly {
        if let Some(p) = cache.get(beta) {
            return p.clone();
        }
        let out = match beta.support().last() {
            None => self.poly.clone(),
            Some((i, e)) => {
                let lower = self.derivative(&beta.with_exp(i, e - 1), cache);
                let mut p = lower.partial(i);
                p.add_assign_ref(&lower.times_var(i).scale(Complex64::new(-2.0 * self.rate(i), 0.0)));
                p
            }
        };
        cache.insert(beta.clone(), out.clone());
        out
    }

    /// 𝓡F on (v, t) with fiber moments from Gauss–Hermite quadrature.
    pub fn radon(&self, zeta0: &[f64], quad: &QuadSpec) -> Result<GaussianPoly> {
        if zeta0.len() != self.dim_z {
            return Err(Error::Dimension(format!("ζ₀ has {} entries, 𝔷 has dimension {}", zeta0.len(), self.dim_z)));
        }
        let (unit, basis) = fiber_basis(zeta0)?;
        let k = basis.len();
        let t = self.dim_v;
        let s0 = self.dim_v + 1;
        let rule = hermite_rule(quad.order, self.b)?;
        let max_deg = self.poly.degree_in(self.dim_v..self.dim_v + self.dim_z) as usize;
        let moments: Vec<f64> = (0..=max_deg).map(|e| rule.iter().map(|&(x, w)| w * x.powi(e as i32)).sum()).collect();

        // z_l ↦ t ζ₀_l + Σ_i basis[i][l] s_i
        let images: Vec<CPoly> = (0..self.dim_z)
            .map(|l| {
                let mut p = CPoly::zero();
                p.add_term(Monomial::var(t), Complex64::new(unit[l], 0.0));
                for (i, w) in basis.iter().enumerate() {
                    p.add_term(Monomial::var(s0 + i), Complex64::new(w[l], 0.0));
                }
                p
            })
            .collect();

        let mut out = CPoly::zero();
        for (m, c) in self.poly.terms() {
            let mut acc = CPoly::constant(*c);
            for (i, e) in m.support() {
                for _ in 0..e {
                    acc = if i < self.dim_v { acc.times_var(i) } else { acc.mul_ref(&images[i - self.dim_v]) };
                }
            }
            for (mono, coeff) in acc.terms() {
                let weight: f64 = (0..k).map(|i| moments[mono.exp(s0 + i) as usize]).product();
                let mut reduced = mono.clone();
                for i in 0..k {
                    reduced = reduced.with_exp(s0 + i, 0);
                }
                out.add_term(reduced, coeff * weight);
            }
        }
        Ok(GaussianPoly { dim_v: self.dim_v, dim_z: 1, a: self.a, b: self.b, poly: out })
    }
}

impl SampledFunction for GaussianPoly {
    fn dims(&self) -> (usize, usize) {
        (self.dim_v, self.dim_z)
    }

    fn decay(&self) -> f64 {
        self.b
    }

    fn eval(&self, v: &[f64], z: &[f64]) -> Complex64 {
        let x: Vec<f64> = v.iter().chain(z).copied().collect();
        self.eval_at(&x)
    }

    fn eval_unweighted(&self, v: &[f64], z: &[f64]) -> Complex64 {
        let x: Vec<f64> = v.iter().chain(z).copied().collect();
        self.poly.eval(&x) * (-self.a * v.iter().map(|t| t * t).sum::<f64>()).exp()
    }

    fn fiber_degree(&self) -> Option<usize> {
        Some(self.poly.degree_in(self.dim_v..self.dim_v + self.dim_z) as usize)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn analytic_derivative_matches_finite_difference() {
        let p = ExactPoly::var(0).mul_ref(&ExactPoly::var(2)) + ExactPoly::var(1);
        let f = GaussianPoly::with_factor(2, 1, &p);
        let x = [0.3, -0.7, 0.4];
        let h = 1e-6;
        for i in 0..3 {
            let mut xp = x;
            let mut xm = x;
            xp[i] += h;
            xm[i] -= h;
            let fd = (f.eval_at(&xp) - f.eval_at(&xm)) / (2.0 * h);
            assert!((fd - f.partial(i).eval_at(&x)).norm() < 1e-8);
        }
    }

    #[test]
    fn apply_agrees_with_iterated_partials() {
        let f = GaussianPoly::with_factor(1, 1, &ExactPoly::var(1));
        let d = DiffOp::partial(0).compose(&DiffOp::partial(1));
        let x = [0.2, 0.9];
        let a = f.apply(&d).eval_at(&x);
        let b = f.partial(1).partial(0).eval_at(&x);
        assert!((a - b).norm() < 1e-14);
    }
}
