//! Quotient pairs N′ = N / exp(ζ₀^⊥) with their restricted Hilbert bases.
//!
//! The radical of ω_{ζ₀} has dimension 1 at lines 10 and 12 and 2 at line 11
//! (𝔳₂ = ℝe₃, ℂe₃ and ℝe₇ respectively). The printed summary sentence that
//! assigns r = 1 to line 11 as well is not followed.

use serde::Serialize;

use crate::composition_algebras::{ca_conj, ca_mul, AlgebraTag};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::ring::Ring;

use super::charts::{sum_sq, E};
use super::ids::{CaseId, CaseKind};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct QuotientEntry {
    pub label: String,
    /// Index of the parent Hilbert-basis entry this one restricts from.
    pub parent: usize,
    /// Power of t carried by the entry.
    pub t_exp: u32,
    /// ρ_parent(v, tζ₀) = ρ′_j(v, t)^power.
    pub power: u32,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct QuotientDescriptor {
    pub line: u8,
    pub n: usize,
    pub zeta0: Vec<f64>,
    /// (dim 𝔳₁, dim 𝔳₂) where the quotient splits 𝔳.
    pub v_split: Option<(usize, usize)>,
    pub radical: Option<usize>,
    pub entries: Vec<QuotientEntry>,
}

fn entry(label: &str, parent: usize, t_exp: u32) -> QuotientEntry {
    QuotientEntry { label: label.into(), parent, t_exp, power: 1 }
}

fn t_entry(parent: usize) -> QuotientEntry {
    QuotientEntry { label: "t".into(), parent, t_exp: 1, power: 2 }
}

fn unit(k: usize, len: usize) -> Vec<f64> {
    (0..len).map(|i| if i == k { 1.0 } else { 0.0 }).collect()
}

pub fn get_quotient(line: u8) -> Result<QuotientDescriptor> {
    let kind = CaseKind::Line(line);
    let id = CaseId::new(kind, kind.min_n())?;
    get_quotient_for(id)
}

pub fn get_quotient_for(id: CaseId) -> Result<QuotientDescriptor> {
    let line = id.kind.line().ok_or_else(|| Error::UnknownCase(format!("{id} has no quotient")))?;
    let n = id.n();
    let (dim_v, dim_z) = super::models::dims(id.kind, n);
    let v2 = |a: &str| entry(a, 0, 0);
    let (zeta0, v_split, radical, entries) = match line {
        1..=3 => (unit(0, dim_z), None, None, vec![v2("|v|^2"), t_entry(1)]),
        4 | 5 => {
            let mut z = unit(0, dim_z);
            if line == 4 {
                z[0] = -1.0;
            }
            (z, Some((dim_v / 2, dim_v / 2)), None, vec![v2("|v|^2"), entry("|v1|^2-|v2|^2", 1, 1), t_entry(2)])
        }
        6 | 7 => {
            let mut z = unit(0, dim_z);
            z[0] = -1.0;
            (
                z,
                Some((dim_v / 2, dim_v / 2)),
                None,
                vec![v2("|v|^2"), entry("tr((v*v)^2)", 1, 0), entry("|v1|^2-|v2|^2", 2, 1), t_entry(3)],
            )
        }
        8 => (
            unit(0, dim_z),
            Some((dim_v / 2, dim_v / 2)),
            None,
            vec![
                v2("|v|^2"),
                entry("|v1|^4+2|v1v2*|^2+|v2|^4", 1, 0),
                entry("|v1|^2|v2|^2-Re(v1v2*)^2", 2, 0),
                entry("-2 Im_i(v1v2*)", 3, 1),
                t_entry(4),
            ],
        ),
        9 => (
            unit(0, dim_z),
            Some((8, 8)),
            None,
            vec![
                v2("|v|^2"),
                entry("|v1|^2|v2|^2-Re(v1v2bar)^2", 1, 0),
                entry("-2 Im_1(v1v2bar)", 2, 1),
                t_entry(3),
            ],
        ),
        10 => (unit(2, 3), Some((2, 1)), Some(1), vec![v2("|v|^2"), entry("v3", 1, 1), t_entry(2)]),
        11 => (
            unit(4, 6),
            Some((4, 2)),
            Some(2),
            vec![v2("|v|^2"), entry("Re v3", 1, 1), entry("Im v3", 2, 1), t_entry(3)],
        ),
        12 => (unit(6, 7), Some((6, 1)), Some(1), vec![v2("|v|^2"), entry("v7", 1, 1), t_entry(2)]),
        _ => return Err(Error::UnknownCase(format!("table line {line}"))),
    };
    Ok(QuotientDescriptor { line, n, zeta0, v_split, radical, entries })
}

fn im_coeff<R: Ring>(x: &E<R>, k: usize) -> R {
    x.coeffs()[k].clone()
}

impl QuotientDescriptor {
    pub fn d(&self) -> usize {
        self.entries.len()
    }

    /// ρ′_𝔳 as listed for the quotient: every entry except the central t.
    pub fn rho_prime_v_labels(&self) -> Vec<String> {
        self.entries[..self.entries.len() - 1].iter().map(|e| e.label.clone()).collect()
    }

    /// The t-free factors of ρ′, i.e. ρ′_𝔳 followed by 1 for the central entry.
    pub fn rho_prime_v<R: Ring>(&self, v: &[R]) -> Vec<R> {
        let half = self.v_split.map_or(0, |(a, _)| a);
        let split_diff = || sum_sq(&v[..half]) - sum_sq(&v[half..]);
        let mut out = vec![sum_sq(v)];
        match self.line {
            1..=3 => {}
            4 | 5 => out.push(split_diff()),
            6 | 7 => {
                let p = v.len() / 4;
                let vm = Matrix::from_coords(AlgebraTag::C, 2, p, v);
                let g = vm.adjoint().mul(&vm);
                out.push(g.mul(&g).re_trace());
                out.push(split_diff());
            }
            8 => {
                let m = self.n;
                let vm = Matrix::from_coords(AlgebraTag::H, 2, m, v);
                let r1 = Matrix::from_fn(1, m, |_, j| vm.get(0, j).clone());
                let r2 = Matrix::from_fn(1, m, |_, j| vm.get(1, j).clone());
                let (n1, n2) = (r1.norm2(), r2.norm2());
                let c = r1.mul(&r2.adjoint()).get(0, 0).clone();
                let c2 = crate::composition_algebras::ca_norm2(&c);
                let re = c.coeffs()[0].clone();
                out.push(n1.clone() * n1.clone() + c2.scale_i64(2) + n2.clone() * n2.clone());
                out.push(n1 * n2 - re.clone() * re);
                out.push(im_coeff(&c, 1).scale_i64(-2));
            }
            9 => {
                let v1 = E::from_slice(AlgebraTag::O, &v[..8]);
                let v2 = E::from_slice(AlgebraTag::O, &v[8..]);
                let c = ca_mul(&v1, &ca_conj(&v2)).expect("octonions");
                let re = c.coeffs()[0].clone();
                out.push(sum_sq(&v[..8]) * sum_sq(&v[8..]) - re.clone() * re);
                out.push(im_coeff(&c, 1).scale_i64(-2));
            }
            10 => out.push(v[2].clone()),
            11 => out.extend([v[4].clone(), v[5].clone()]),
            _ => out.push(v[6].clone()),
        }
        out.push(R::one());
        out
    }

    /// ρ′(v, t).
    pub fn rho_prime<R: Ring>(&self, v: &[R], t: &R) -> Vec<R> {
        self.rho_prime_v(v)
            .into_iter()
            .zip(&self.entries)
            .map(|(x, e)| x * crate::ring::pow(t, e.t_exp))
            .collect()
    }

    /// The point tζ₀ in 𝔷 coordinates.
    pub fn z_point<R: Ring>(&self, t: &R) -> Vec<R> {
        self.zeta0.iter().map(|&c| R::from_f64(c) * t.clone()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pair_catalog::get_case;

    #[test]
    fn table_three_rows() {
        assert_eq!(get_quotient(4).unwrap().rho_prime_v_labels(), vec!["|v|^2", "|v1|^2-|v2|^2"]);
        assert_eq!(get_quotient(12).unwrap().rho_prime_v_labels(), vec!["|v|^2", "v7"]);
        assert_eq!(get_quotient(1).unwrap().rho_prime_v_labels(), vec!["|v|^2"]);
        assert!(get_quotient(13).is_err());
    }

    #[test]
    fn cardinality_matches_parent() {
        for l in 1..=12u8 {
            let q = get_quotient(l).unwrap();
            let c = get_case(CaseId::line(l)).unwrap();
            assert_eq!(q.d(), c.d(), "line {l}");
            let norm: f64 = q.zeta0.iter().map(|x| x * x).sum();
            assert_eq!(norm, 1.0);
        }
    }

    #[test]
    fn restrictions_agree_with_parents() {
        let mut rng = crate::group_actions::seeded_rng(21, 0);
        for l in 1..=12u8 {
            let q = get_quotient(l).unwrap();
            let c = get_case(CaseId::line(l)).unwrap();
            for _ in 0..10 {
                let v: Vec<f64> = (0..c.dim_v).map(|_| rand::Rng::gen_range(&mut rng, -1.0..1.0)).collect();
                let t: f64 = rand::Rng::gen_range(&mut rng, -2.0..2.0);
                let parent = c.hilbert(&v, &q.z_point(&t)).unwrap();
                let rp = q.rho_prime(&v, &t);
                for (j, e) in q.entries.iter().enumerate() {
                    let lhs = parent[e.parent];
                    let rhs = rp[j].powi(e.power as i32);
                    assert!((lhs - rhs).abs() <= 1e-9 * (1.0 + lhs.abs()), "line {l} entry {j}: {lhs} vs {rhs}");
                }
            }
        }
    }
}
