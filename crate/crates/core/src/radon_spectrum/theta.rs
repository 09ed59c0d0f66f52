//! The map Θ between regular spectral parameters of N and N′, and the
//! regions Ω, Ω̃ gating its test points.

use serde::{Deserialize, Serialize};

use rand::Rng;

use crate::error::{Error, Result};
use crate::group_actions::seeded_rng;
use crate::pair_catalog::{get_case, CaseId};

/// The printed line-8 row reads η₄ = ξ₃ ξ₅^{−½}; the other rows suggest ξ₄ ξ₅^{−½}.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Line8Variant {
    #[default]
    PatternCorrected,
    AsPrinted,
}

/// η_j = ξ_src · ξ_d^{−½ if scaled} for j < d, and η_d = √ξ_d.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Slot {
    src: usize,
    scaled: bool,
}

const fn s(src: usize, scaled: bool) -> Slot {
    Slot { src, scaled }
}

fn row(line: u8, d: usize, variant: Line8Variant) -> Result<Vec<Slot>> {
    let r = match (line, d) {
        (1..=3, 2) => vec![s(0, false)],
        (4 | 5 | 10 | 11 | 12, 3) => vec![s(0, false), s(1, true)],
        (6 | 7 | 9, 4) => vec![s(0, false), s(1, false), s(2, true)],
        (8, 5) => {
            let last = match variant {
                Line8Variant::PatternCorrected => s(3, true),
                Line8Variant::AsPrinted => s(2, true),
            };
            vec![s(0, false), s(1, false), s(2, false), last]
        }
        (11, 4) => vec![s(0, false), s(1, true), s(2, true)],
        (1..=12, _) => return Err(Error::Dimension(format!("line {line} takes no {d}-tuples"))),
        _ => return Err(Error::UnknownCase(format!("T1-L{line}"))),
    };
    Ok(r)
}

/// Number of coordinates of the spectral parameter on each line.
pub fn line_d(line: u8) -> Result<usize> {
    const D: [usize; 12] = [2, 2, 2, 3, 3, 4, 4, 5, 4, 3, 4, 3];
    D.get((line as usize).wrapping_sub(1)).copied().ok_or_else(|| Error::UnknownCase(format!("T1-L{line}")))
}

pub fn theta_map(line: u8, xi: &[f64], variant: Line8Variant) -> Result<Vec<f64>> {
    let slots = row(line, xi.len(), variant)?;
    let xd = xi[xi.len() - 1];
    if !(xd > 0.0) {
        return Err(Error::Precondition(format!("ξ_d = {xd} is not positive")));
    }
    let inv = xd.sqrt().recip();
    let mut eta: Vec<f64> = slots.iter().map(|sl| if sl.scaled { xi[sl.src] * inv } else { xi[sl.src] }).collect();
    eta.push(xd.sqrt());
    Ok(eta)
}

/// Θ⁻¹ on η_d > 0; the printed line-8 row has no inverse.
pub fn theta_inverse(line: u8, eta: &[f64], variant: Line8Variant) -> Result<Vec<f64>> {
    let slots = row(line, eta.len(), variant)?;
    let ed = eta[eta.len() - 1];
    if !(ed > 0.0) {
        return Err(Error::Precondition(format!("η_d = {ed} is not positive")));
    }
    let mut seen = vec![false; eta.len() - 1];
    let mut xi = vec![0.0; eta.len()];
    for (j, sl) in slots.iter().enumerate() {
        if std::mem::replace(&mut seen[sl.src], true) {
            return Err(Error::Precondition(format!("line {line}: Θ repeats ξ_{} and is not invertible", sl.src + 1)));
        }
        xi[sl.src] = if sl.scaled { eta[j] * ed } else { eta[j] };
    }
    xi[eta.len() - 1] = ed * ed;
    Ok(xi)
}

/// Homogeneity weights (γ_j) of the ξ coordinates and (γ′_j) of the η coordinates.
pub fn theta_weights(line: u8, variant: Line8Variant) -> Result<(Vec<i64>, Vec<i64>)> {
    let case = get_case(CaseId::line(line))?;
    let gamma: Vec<i64> = case.bidegrees.iter().map(|&(a, b)| (a + 2 * b) as i64).collect();
    let gd = gamma[gamma.len() - 1];
    let slots = row(line, gamma.len(), variant)?;
    let mut out: Vec<i64> = slots.iter().map(|sl| gamma[sl.src] - if sl.scaled { gd / 2 } else { 0 }).collect();
    out.push(gd / 2);
    Ok((gamma, out))
}

/// Ω = Ω₁ ∪ Ω₂ and Ω̃ = Ω̃₁ ∪ Ω̃₂ for given constants C_2..C_d.
#[derive(Clone, Debug, PartialEq)]
pub struct OmegaRegion {
    pub gamma: Vec<i64>,
    pub constants: Vec<f64>,
}

impl OmegaRegion {
    pub fn new(gamma: Vec<i64>, constants: Vec<f64>) -> Result<Self> {
        if constants.len() + 1 != gamma.len() {
            return Err(Error::Dimension(format!("{} constants for {} coordinates", constants.len(), gamma.len())));
        }
        Ok(OmegaRegion { gamma, constants })
    }

    fn member(&self, xi: &[f64], factor: f64, tube: f64) -> bool {
        let growth = 1.0 + xi[0].abs();
        let in_cone = xi[1..]
            .iter()
            .zip(&self.constants)
            .zip(&self.gamma[1..])
            .all(|((x, c), &g)| x.abs() <= factor * c * growth.powf(g as f64 / 2.0));
        in_cone || xi[1..].iter().map(|x| x * x).sum::<f64>() <= tube
    }

    pub fn contains(&self, xi: &[f64]) -> bool {
        self.member(xi, 2.0, 1.0)
    }

    pub fn contains_tilde(&self, xi: &[f64]) -> bool {
        self.member(xi, 4.0, 2.0)
    }

    /// |ξ| = Σ |ξ_j|^{2/γ_j}.
    pub fn norm(&self, xi: &[f64]) -> f64 {
        xi.iter().zip(&self.gamma).map(|(x, &g)| x.abs().powf(2.0 / g as f64)).sum()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct InjectivityReport {
    pub samples: usize,
    /// Pairs differing in one coordinate with equal images.
    pub collisions: usize,
    /// max |Θ⁻¹(Θ(ξ)) − ξ| / (1 + |ξ|), or None when Θ⁻¹ does not exist.
    pub round_trip: Option<f64>,
}

impl InjectivityReport {
    pub fn injective(&self) -> bool {
        self.collisions == 0 && self.round_trip.is_some_and(|r| r < 1e-12)
    }
}

/// Random regular tuples inside Ω (all C_l = 1): each is paired with a copy
/// whose coordinate c is redrawn, and both images are compared.
pub fn theta_injectivity(line: u8, samples: usize, seed: u64, variant: Line8Variant) -> Result<InjectivityReport> {
    let (gamma, _) = theta_weights(line, variant)?;
    let d = gamma.len();
    let region = OmegaRegion::new(gamma, vec![1.0; d - 1])?;
    let mut rng = seeded_rng(seed ^ 0x7e7a, line as u64);
    let draw = |rng: &mut rand_chacha::ChaCha8Rng| loop {
        let mut xi: Vec<f64> = (0..d).map(|_| rng.gen_range(-10.0..10.0)).collect();
        xi[0] = rng.gen_range(0.0..10.0);
        xi[d - 1] = rng.gen_range(0.01..10.0);
        if region.contains(&xi) {
            return xi;
        }
    };
    let mut collisions = 0;
    let mut round_trip = Some(0.0f64);
    for _ in 0..samples {
        let xi = draw(&mut rng);
        let c = rng.gen_range(0..d);
        let mut other = xi.clone();
        while other[c] == xi[c] {
            other[c] = draw(&mut rng)[c];
        }
        if theta_map(line, &xi, variant)? == theta_map(line, &other, variant)? {
            collisions += 1;
        }
        let eta = theta_map(line, &xi, variant)?;
        round_trip = match (round_trip, theta_inverse(line, &eta, variant)) {
            (Some(r), Ok(back)) => {
                let gap = xi.iter().zip(&back).map(|(a, b)| (a - b).abs() / (1.0 + a.abs())).fold(0.0, f64::max);
                Some(r.max(gap))
            }
            _ => None,
        };
    }
    Ok(InjectivityReport { samples, collisions, round_trip })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_example() {
        let eta = theta_map(4, &[1.0, 0.5, 4.0], Line8Variant::default()).unwrap();
        assert_eq!(eta, vec![1.0, 0.25, 2.0]);
        assert!(theta_map(4, &[1.0, 0.5, 0.0], Line8Variant::default()).is_err());
        assert!(theta_map(4, &[1.0, 0.5, 1.0, 1.0], Line8Variant::default()).is_err());
    }

    #[test]
    fn line_eight_variants() {
        let xi = [1.0, 2.0, 3.0, 8.0, 4.0];
        assert_eq!(theta_map(8, &xi, Line8Variant::PatternCorrected).unwrap(), vec![1.0, 2.0, 3.0, 4.0, 2.0]);
        assert_eq!(theta_map(8, &xi, Line8Variant::AsPrinted).unwrap(), vec![1.0, 2.0, 3.0, 1.5, 2.0]);
        assert!(theta_inverse(8, &[1.0, 2.0, 3.0, 1.5, 2.0], Line8Variant::AsPrinted).is_err());
    }

    #[test]
    fn inverse_round_trip() {
        for line in 1..=12u8 {
            let d = line_d(line).unwrap();
            let xi: Vec<f64> = (0..d).map(|j| 0.5 + j as f64).collect();
            let eta = theta_map(line, &xi, Line8Variant::default()).unwrap();
            let back = theta_inverse(line, &eta, Line8Variant::default()).unwrap();
            assert!(xi.iter().zip(&back).all(|(a, b)| (a - b).abs() < 1e-12), "line {line}");
        }
    }

    #[test]
    fn printed_line_eight_row_is_not_injective() {
        let fixed = theta_injectivity(8, 400, 3, Line8Variant::PatternCorrected).unwrap();
        assert!(fixed.injective(), "{fixed:?}");
        let printed = theta_injectivity(8, 400, 3, Line8Variant::AsPrinted).unwrap();
        assert!(printed.collisions > 0 && printed.round_trip.is_none());
        assert!(theta_injectivity(4, 400, 3, Line8Variant::AsPrinted).unwrap().injective());
    }

    #[test]
    fn weights_scale_consistently() {
        let r: f64 = 1.7;
        for line in 1..=12u8 {
            let (g, gp) = theta_weights(line, Line8Variant::default()).unwrap();
            let xi: Vec<f64> = (0..g.len()).map(|j| 0.3 + j as f64).collect();
            let scaled: Vec<f64> = xi.iter().zip(&g).map(|(x, &w)| x * r.powi(w as i32)).collect();
            let a = theta_map(line, &scaled, Line8Variant::default()).unwrap();
            let b: Vec<f64> = theta_map(line, &xi, Line8Variant::default()).unwrap().iter().zip(&gp).map(|(x, &w)| x * r.powi(w as i32)).collect();
            assert!(a.iter().zip(&b).all(|(x, y)| (x - y).abs() < 1e-10 * (1.0 + y.abs())), "line {line}");
        }
    }

    #[test]
    fn omega_regions() {
        let o = OmegaRegion::new(vec![2, 4, 4], vec![1.0, 1.0]).unwrap();
        assert!(o.contains(&[0.0, 0.5, 0.5]));
        assert!(o.contains(&[3.0, 30.0, -1.0]));
        assert!(!o.contains(&[0.0, 3.0, 0.0]));
        assert!(o.contains_tilde(&[0.0, 3.0, 0.0]));
        assert!((o.norm(&[4.0, 16.0, 81.0]) - 17.0).abs() < 1e-12);
    }
}
