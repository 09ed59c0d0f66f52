//! Step-two Lie algebras in exponential coordinates, their left-invariant
//! fields, and the twisted symmetrization λ′.

use std::collections::HashMap;

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::pair_catalog::quotient::QuotientDescriptor;
use crate::pair_catalog::CaseDescriptor;
use crate::ring::Ring;

use super::diffop::DiffOp;
use super::poly::{ExactPoly, GaussRat, Monomial};

/// 𝔫 = 𝔳 ⊕ 𝔷 with [e_i, e_j] = Σ_l S[l][i][j] ε_l. Coordinates are
/// v_0..v_{dim_v−1} followed by z_0..z_{dim_z−1}.
#[derive(Clone, Debug, PartialEq)]
pub struct StepTwoAlgebra {
    pub dim_v: usize,
    pub dim_z: usize,
    structure: Vec<Vec<Vec<GaussRat>>>,
}

impl StepTwoAlgebra {
    pub fn new(dim_v: usize, dim_z: usize, structure: Vec<Vec<Vec<GaussRat>>>) -> Result<Self> {
        if structure.len() != dim_z || structure.iter().any(|m| m.len() != dim_v || m.iter().any(|r| r.len() != dim_v)) {
            return Err(Error::Dimension("structure constants shape".into()));
        }
        for m in &structure {
            for i in 0..dim_v {
                for j in 0..dim_v {
                    if m[i][j].clone() + m[j][i].clone() != GaussRat::int(0) {
                        return Err(Error::NotSkew);
                    }
                }
            }
        }
        Ok(StepTwoAlgebra { dim_v, dim_z, structure })
    }

    pub fn abelian(dim_v: usize, dim_z: usize) -> Self {
        StepTwoAlgebra { dim_v, dim_z, structure: vec![vec![vec![GaussRat::int(0); dim_v]; dim_v]; dim_z] }
    }

    pub fn from_case(case: &CaseDescriptor) -> Result<Self> {
        StepTwoAlgebra::new(case.dim_v, case.dim_z, case.structure_constants::<GaussRat>()?)
    }

    /// The quotient 𝔫′ = 𝔳 ⊕ ℝζ₀ with bracket ⟨[·,·], ζ₀⟩.
    pub fn quotient(case: &CaseDescriptor, q: &QuotientDescriptor) -> Result<Self> {
        let s = case.structure_constants::<GaussRat>()?;
        let z0: Vec<GaussRat> = q.zeta0.iter().map(|&c| GaussRat::from_f64(c)).collect();
        let m = (0..case.dim_v)
            .map(|i| {
                (0..case.dim_v)
                    .map(|j| s.iter().zip(&z0).fold(GaussRat::int(0), |acc, (sl, c)| acc + sl[i][j].mul_ref(c)))
                    .collect()
            })
            .collect();
        StepTwoAlgebra::new(case.dim_v, 1, vec![m])
    }

    pub fn dim(&self) -> usize {
        self.dim_v + self.dim_z
    }

    pub fn structure(&self) -> &[Vec<Vec<GaussRat>>] {
        &self.structure
    }

    pub fn names(&self) -> impl Fn(usize) -> String + '_ {
        move |i| if i < self.dim_v { format!("v{i}") } else { format!("z{}", i - self.dim_v) }
    }

    pub fn central_field(&self, l: usize) -> DiffOp {
        DiffOp::partial(self.dim_v + l)
    }

    /// X_r = ∂_{v_r} + ½ Σ_l ⟨[v, e_r], ε_l⟩ ∂_{z_l}.
    pub fn field(&self, r: usize) -> DiffOp {
        let half = GaussRat::ratio(1, 2);
        let mut x = DiffOp::partial(r);
        for (l, sl) in self.structure.iter().enumerate() {
            let mut coeff = ExactPoly::zero();
            for (i, row) in sl.iter().enumerate() {
                coeff.add_term(Monomial::var(i), row[r].mul_ref(&half));
            }
            x.add_term(Monomial::var(self.dim_v + l), coeff);
        }
        x
    }

    /// X_0..X_{dim_v−1} followed by ∂_{z_0}..∂_{z_{dim_z−1}}.
    pub fn left_invariant_fields(&self) -> Vec<DiffOp> {
        (0..self.dim_v).map(|r| self.field(r)).chain((0..self.dim_z).map(|l| self.central_field(l))).collect()
    }

    /// Σ_l S[l][r][s] ∂_{z_l}, the expected value of [X_r, X_s].
    pub fn structure_operator(&self, r: usize, s: usize) -> DiffOp {
        let mut out = DiffOp::zero();
        for (l, sl) in self.structure.iter().enumerate() {
            out.add_term(Monomial::var(self.dim_v + l), ExactPoly::constant(sl[r][s].clone()));
        }
        out
    }

    pub fn symmetrizer(&self) -> Symmetrizer<'_> {
        Symmetrizer { fields: self.left_invariant_fields(), memo: HashMap::new(), _alg: self }
    }

    /// Ξ_A = Σ (A x)_k ∂_k for a linear map A on 𝔫 given on 𝔳 and 𝔷 separately.
    pub fn linear_vector_field(&self, a_v: &DMatrix<f64>, a_z: &DMatrix<f64>) -> DiffOp {
        let mut out = DiffOp::zero();
        let mut push = |row: usize, offset: usize, m: &DMatrix<f64>| {
            let mut c = ExactPoly::zero();
            for col in 0..m.ncols() {
                c.add_term(Monomial::var(offset + col), GaussRat::from_f64(m[(row, col)]));
            }
            out.add_term(Monomial::var(offset + row), c);
        };
        for r in 0..self.dim_v {
            push(r, 0, a_v);
        }
        for l in 0..self.dim_z {
            push(l, self.dim_v, a_z);
        }
        out
    }
}

/// Memoized symmetrization over one algebra.
pub struct Symmetrizer<'a> {
    fields: Vec<DiffOp>,
    memo: HashMap<Monomial, DiffOp>,
    _alg: &'a StepTwoAlgebra,
}

impl Symmetrizer<'_> {
    /// Average over all orderings of the product of fields named by α, via
    /// S(α) = |α|⁻¹ Σ_k α_k Y_k S(α − e_k).
    pub fn symmetric_product(&mut self, alpha: &Monomial) -> DiffOp {
        if let Some(d) = self.memo.get(alpha) {
            return d.clone();
        }
        let m = alpha.degree();
        let out = if m == 0 {
            DiffOp::identity()
        } else {
            let mut acc = DiffOp::zero();
            let support: Vec<(usize, u8)> = alpha.support().collect();
            for (k, e) in support {
                let rest = alpha.with_exp(k, e - 1);
                let tail = self.symmetric_product(&rest);
                let prod = self.fields[k].compose(&tail);
                acc.add_assign_ref(&prod.scale(&GaussRat::int(e as i64)));
            }
            acc.scale(&GaussRat::ratio(1, m as i64))
        };
        self.memo.insert(alpha.clone(), out.clone());
        out
    }

    /// λ′(P): x^α ↦ i^{−|α|} S(α).
    pub fn symmetrize(&mut self, p: &ExactPoly) -> DiffOp {
        let mut out = DiffOp::zero();
        for (alpha, c) in p.terms() {
            let s = self.symmetric_product(alpha);
            out.add_assign_ref(&s.scale(&c.mul_ref(&GaussRat::i_pow(-(alpha.degree() as i64)))));
        }
        out
    }
}

/// Coordinate polynomials v_0.., z_0.. of an algebra.
pub fn coordinate_vars(alg: &StepTwoAlgebra) -> (Vec<ExactPoly>, Vec<ExactPoly>) {
    (ExactPoly::vars(0, alg.dim_v), ExactPoly::vars(alg.dim_v, alg.dim_z))
}

/// The Hilbert basis of a case as exact polynomials in the coordinates.
pub fn exact_hilbert(case: &CaseDescriptor) -> Result<Vec<ExactPoly>> {
    let v = ExactPoly::vars(0, case.dim_v);
    let z = ExactPoly::vars(case.dim_v, case.dim_z);
    case.hilbert(&v, &z)
}

/// ρ′ of a quotient as exact polynomials in (v, t).
pub fn exact_rho_prime(q: &QuotientDescriptor, dim_v: usize) -> Vec<ExactPoly> {
    let v = ExactPoly::vars(0, dim_v);
    q.rho_prime(&v, &ExactPoly::var(dim_v))
}

/// P(v, tζ₀) as a polynomial in (v, t).
pub fn restrict_to_quotient(p: &ExactPoly, dim_v: usize, zeta0: &[f64]) -> ExactPoly {
    let t = ExactPoly::var(dim_v);
    let mut images = ExactPoly::vars(0, dim_v);
    images.extend(zeta0.iter().map(|&c| t.scale(&GaussRat::from_f64(c))));
    p.substitute(&images)
}

/// Operator-level substitution z → tζ₀: ∂_{z_l} ↦ ζ₀_l ∂_t, coefficients
/// restricted to z = tζ₀.
pub fn radon_reduce(d: &DiffOp, dim_v: usize, zeta0: &[f64]) -> DiffOp {
    let z0: Vec<GaussRat> = zeta0.iter().map(|&c| GaussRat::from_f64(c)).collect();
    let mut out = DiffOp::zero();
    for (beta, a) in d.terms() {
        let mut factor = GaussRat::int(1);
        let mut t_order = 0u8;
        for (l, c) in z0.iter().enumerate() {
            let e = beta.exp(dim_v + l);
            for _ in 0..e {
                factor = factor.mul_ref(c);
            }
            t_order += e;
        }
        if factor.is_zero() {
            continue;
        }
        let mut nb: Vec<u8> = (0..dim_v).map(|i| beta.exp(i)).collect();
        nb.push(t_order);
        let coeff = restrict_to_quotient(a, dim_v, zeta0).scale(&factor);
        out.add_term(Monomial::from_exponents(&nb), coeff);
    }
    out
}

/// Lower bound on the central order of M^j − p(i⁻¹∇)^j.
pub fn replace_constant_coeff_defect(m: &DiffOp, p: &ExactPoly, j: u32) -> DiffOp {
    let pj = crate::ring::pow(p, j);
    m.pow(j).sub(&DiffOp::from_symbol(&pj))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pair_catalog::{get_case, CaseId};

    #[test]
    fn abelian_fields_are_partials() {
        let a = StepTwoAlgebra::abelian(2, 1);
        assert_eq!(a.field(1), DiffOp::partial(1));
    }

    #[test]
    fn heisenberg_structure() {
        let c = get_case(CaseId::line(1)).unwrap();
        let a = StepTwoAlgebra::from_case(&c).unwrap();
        let f = a.left_invariant_fields();
        for r in 0..a.dim_v {
            for s in 0..a.dim_v {
                assert_eq!(f[r].commutator(&f[s]), a.structure_operator(r, s));
            }
            for l in 0..a.dim_z {
                assert!(f[r].commutator(&a.central_field(l)).is_zero());
            }
        }
    }

    #[test]
    fn degree_one_and_two_symmetrizations() {
        let c = get_case(CaseId::line(10)).unwrap();
        let a = StepTwoAlgebra::from_case(&c).unwrap();
        let mut s = a.symmetrizer();
        let v0 = ExactPoly::var(0);
        assert_eq!(s.symmetrize(&v0), a.field(0).scale(&GaussRat::i_pow(-1)));
        let z = ExactPoly::vars(3, 3);
        let zz = z.iter().fold(ExactPoly::zero(), |acc, x| acc + x.mul_ref(x));
        let delta = (0..3).fold(DiffOp::zero(), |acc, l| acc.sub(&a.central_field(l).pow(2)));
        assert_eq!(s.symmetrize(&zz), delta);
    }
}
