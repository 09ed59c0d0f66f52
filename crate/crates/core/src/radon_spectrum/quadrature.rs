//! Quadrature rules and the JSON-configurable quadrature spec.

use gauss_quad::{GaussHermite, GaussLegendre};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct QuadSpec {
    /// Gauss–Hermite order per fiber dimension.
    pub order: usize,
    /// Half-width of the sampling window for sup-norm residuals.
    pub window: f64,
    /// Number of sample points in a residual grid.
    pub grid_points: usize,
    /// Gauss–Legendre order for integrals over [0, 1].
    pub legendre_order: usize,
    /// Refuse tensor rules with more nodes than this.
    pub max_nodes: usize,
}

impl Default for QuadSpec {
    fn default() -> Self {
        QuadSpec { order: 40, window: 4.0, grid_points: 50, legendre_order: 40, max_nodes: 4_000_000 }
    }
}

impl QuadSpec {
    pub fn validate(&self) -> Result<()> {
        if self.order < 2 || self.legendre_order < 2 {
            return Err(Error::Config("quadrature orders must be at least 2".into()));
        }
        if !(self.window.is_finite() && self.window > 0.0) {
            return Err(Error::Config("window must be positive".into()));
        }
        if self.grid_points == 0 {
            return Err(Error::Config("grid_points must be positive".into()));
        }
        Ok(())
    }
}

/// Nodes and weights for ∫ f(s) e^{−b s²} ds.
pub fn hermite_rule(order: usize, b: f64) -> Result<Vec<(f64, f64)>> {
    if !(b > 0.0) {
        return Err(Error::Precondition(format!("decay rate {b} is not positive")));
    }
    let rule = GaussHermite::new(order).map_err(|e| Error::Config(format!("Gauss–Hermite order {order}: {e}")))?;
    let scale = b.sqrt().recip();
    let mut out: Vec<(f64, f64)> = rule.as_node_weight_pairs().iter().map(|&(x, w)| (x * scale, w * scale)).collect();
    out.sort_by(|a, b| a.0.total_cmp(&b.0));
    Ok(out)
}

/// Nodes and weights for ∫₀¹ f(r) dr.
pub fn legendre_unit_rule(order: usize) -> Result<Vec<(f64, f64)>> {
    let rule = GaussLegendre::new(order).map_err(|e| Error::Config(format!("Gauss–Legendre order {order}: {e}")))?;
    let mut out: Vec<(f64, f64)> = rule.as_node_weight_pairs().iter().map(|&(x, w)| (0.5 * (x + 1.0), 0.5 * w)).collect();
    out.sort_by(|a, b| a.0.total_cmp(&b.0));
    Ok(out)
}

/// Calls `f(nodes, weight)` for every node of the k-fold tensor rule.
pub fn for_each_tensor_node(rule: &[(f64, f64)], k: usize, mut f: impl FnMut(&[f64], f64)) {
    let n = rule.len();
    let mut idx = vec![0usize; k];
    let mut nodes = vec![0.0; k];
    loop {
        let mut w = 1.0;
        for (j, &i) in idx.iter().enumerate() {
            nodes[j] = rule[i].0;
            w *= rule[i].1;
        }
        f(&nodes, w);
        let mut j = 0;
        loop {
            if j == k {
                return;
            }
            idx[j] += 1;
            if idx[j] < n {
                break;
            }
            idx[j] = 0;
            j += 1;
        }
    }
}

/// Deterministic points in [−w, w]^dim: Halton directions, with sup-norms
/// spread evenly over (0, w).
pub fn sample_grid(dim: usize, count: usize, window: f64) -> Vec<Vec<f64>> {
    const PRIMES: [u32; 24] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89];
    let radical_inverse = |mut i: u32, base: u32| {
        let mut f = 1.0;
        let mut r = 0.0;
        while i > 0 {
            f /= base as f64;
            r += f * (i % base) as f64;
            i /= base;
        }
        r
    };
    (0..count)
        .map(|k| {
            let c: Vec<f64> =
                (0..dim).map(|d| 2.0 * radical_inverse(k as u32 + 1, PRIMES[d % PRIMES.len()]) - 1.0).collect();
            let sup = c.iter().fold(0.0f64, |m, x| m.max(x.abs())).max(f64::MIN_POSITIVE);
            let radius = window * (k as f64 + 0.5) / count as f64;
            c.iter().map(|x| x * radius / sup).collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hermite_moments() {
        let r = hermite_rule(10, 2.0).unwrap();
        let m0: f64 = r.iter().map(|&(_, w)| w).sum();
        let m2: f64 = r.iter().map(|&(x, w)| w * x * x).sum();
        let pi = std::f64::consts::PI;
        assert!((m0 - (pi / 2.0).sqrt()).abs() < 1e-13);
        assert!((m2 - (pi / 2.0).sqrt() / 4.0).abs() < 1e-13);
    }

    #[test]
    fn legendre_on_unit_interval() {
        let r = legendre_unit_rule(8).unwrap();
        let i: f64 = r.iter().map(|&(x, w)| w * x.powi(5)).sum();
        assert!((i - 1.0 / 6.0).abs() < 1e-14);
    }

    #[test]
    fn tensor_rule_visits_all_nodes() {
        let r = hermite_rule(3, 1.0).unwrap();
        let mut count = 0;
        let mut total = 0.0;
        for_each_tensor_node(&r, 3, |_, w| {
            count += 1;
            total += w;
        });
        assert_eq!(count, 27);
        assert!((total - std::f64::consts::PI.powf(1.5)).abs() < 1e-12);
        let mut zero_dim = 0;
        for_each_tensor_node(&r, 0, |_, w| zero_dim += (w == 1.0) as usize);
        assert_eq!(zero_dim, 1);
    }

    #[test]
    fn grid_is_deterministic_and_inside_window() {
        let g = sample_grid(4, 50, 4.0);
        assert_eq!(g, sample_grid(4, 50, 4.0));
        assert!(g.iter().flatten().all(|x| x.abs() <= 4.0));
    }
}
