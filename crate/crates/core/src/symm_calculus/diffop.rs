//! Normal-ordered differential operators Σ a_β(x) ∂^β with exact coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::poly::{ExactPoly, GaussRat, Monomial};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DiffOp {
    terms: BTreeMap<Monomial, ExactPoly>,
}

fn int_coeff(k: BigInt) -> GaussRat {
    GaussRat::new(BigRational::from_integer(k), <BigRational as Zero>::zero())
}

impl DiffOp {
    pub fn zero() -> Self {
        DiffOp::default()
    }

    pub fn identity() -> Self {
        DiffOp::term(Monomial::one(), ExactPoly::constant(GaussRat::int(1)))
    }

    pub fn term(beta: Monomial, coeff: ExactPoly) -> Self {
        let mut d = DiffOp::zero();
        d.add_term(beta, coeff);
        d
    }

    /// ∂_{x_i}.
    pub fn partial(i: usize) -> Self {
        DiffOp::term(Monomial::var(i), ExactPoly::constant(GaussRat::int(1)))
    }

    /// Multiplication by a polynomial.
    pub fn multiply(p: ExactPoly) -> Self {
        DiffOp::term(Monomial::one(), p)
    }

    /// The constant-coefficient operator P(i⁻¹∇): x^α ↦ i^{−|α|} ∂^α.
    pub fn from_symbol(p: &ExactPoly) -> Self {
        let mut d = DiffOp::zero();
        for (m, c) in p.terms() {
            let k = m.degree() as i64;
            d.add_term(m.clone(), ExactPoly::constant(c.mul_ref(&GaussRat::i_pow(-k))));
        }
        d
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, ExactPoly> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, beta: Monomial, coeff: ExactPoly) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(beta) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                e.get_mut().add_assign_ref(&coeff);
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_assign_ref(&mut self, o: &DiffOp) {
        for (b, c) in &o.terms {
            self.add_term(b.clone(), c.clone());
        }
    }

    pub fn add(&self, o: &DiffOp) -> DiffOp {
        let mut out = self.clone();
        out.add_assign_ref(o);
        out
    }

    pub fn sub(&self, o: &DiffOp) -> DiffOp {
        self.add(&o.scale(&GaussRat::int(-1)))
    }

    pub fn scale(&self, s: &GaussRat) -> DiffOp {
        let mut out = DiffOp::zero();
        for (b, c) in &self.terms {
            out.add_term(b.clone(), c.scale(s));
        }
        out
    }

    fn is_vector_field(&self) -> bool {
        self.terms.keys().all(|b| b.degree() == 1)
    }

    /// self ∘ o, re-normal-ordered by the Leibniz rule.
    pub fn compose(&self, o: &DiffOp) -> DiffOp {
        if self.is_vector_field() {
            return self.compose_vector_field(o);
        }
        let mut out = DiffOp::zero();
        for (alpha, a) in &self.terms {
            let divisors = alpha.divisors();
            for (beta, b) in &o.terms {
                for gamma in &divisors {
                    let db = b.derivative(gamma);
                    if db.is_zero() {
                        continue;
                    }
                    let c = alpha.binomial(gamma);
                    let coeff = a.mul_ref(&db).scale(&int_coeff(c));
                    out.add_term(alpha.sub(gamma).mul(beta), coeff);
                }
            }
        }
        out
    }

    /// (Σ c_i ∂_i) ∘ a ∂^β = Σ c_i (∂_i a) ∂^β + c_i a ∂^{β+e_i}.
    fn compose_vector_field(&self, o: &DiffOp) -> DiffOp {
        let mut out = DiffOp::zero();
        for (alpha, c) in &self.terms {
            let (i, _) = alpha.support().next().expect("first-order term");
            for (beta, a) in &o.terms {
                let da = a.partial(i);
                if !da.is_zero() {
                    out.add_term(beta.clone(), c.mul_ref(&da));
                }
                out.add_term(beta.mul(alpha), c.mul_ref(a));
            }
        }
        out
    }

    pub fn commutator(&self, o: &DiffOp) -> DiffOp {
        self.compose(o).sub(&o.compose(self))
    }

    pub fn pow(&self, k: u32) -> DiffOp {
        let mut acc = DiffOp::identity();
        for _ in 0..k {
            acc = acc.compose(self);
        }
        acc
    }

    /// Formal adjoint: (a ∂^β)* = (−1)^{|β|} ∂^β ∘ ā.
    pub fn adjoint(&self) -> DiffOp {
        let mut out = DiffOp::zero();
        for (beta, a) in &self.terms {
            let sign = if beta.degree() % 2 == 0 { 1 } else { -1 };
            let d = DiffOp::term(beta.clone(), ExactPoly::constant(GaussRat::int(sign)));
            out.add_assign_ref(&d.compose(&DiffOp::multiply(a.conj())));
        }
        out
    }

    /// Applies the operator to a polynomial.
    pub fn apply(&self, f: &ExactPoly) -> ExactPoly {
        let mut out = ExactPoly::zero();
        for (beta, a) in &self.terms {
            out.add_assign_ref(&a.mul_ref(&f.derivative(beta)));
        }
        out
    }

    /// γ such that conjugation by the dilations (v, z) ↦ (rv, r²z) scales the
    /// operator by r^γ; None when terms disagree. Variables ≥ `dim_v` are central.
    pub fn homogeneity_degree(&self, dim_v: usize) -> Option<i64> {
        let weight = |m: &Monomial| {
            let total = m.degree() as i64;
            let v = m.degree_in(0..dim_v) as i64;
            v + 2 * (total - v)
        };
        let mut out = None;
        for (beta, a) in &self.terms {
            for m in a.terms().keys() {
                let w = weight(beta) - weight(m);
                match out {
                    None => out = Some(w),
                    Some(x) if x != w => return None,
                    _ => {}
                }
            }
        }
        out
    }

    /// Minimum number of central derivatives over the terms.
    pub fn z_order_lower_bound(&self, dim_v: usize) -> Option<u32> {
        self.terms.keys().map(|b| b.degree() - b.degree_in(0..dim_v)).min()
    }

    pub fn format_with(&self, names: &dyn Fn(usize) -> String) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(b, a)| {
                let d = if b.degree() == 0 { "1".to_string() } else { format!("d[{}]", b.format_with(names)) };
                format!("({}) {}", a.format_with(names), d)
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

impl fmt::Display for DiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format_with(&|i| format!("x{i}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> ExactPoly {
        ExactPoly::var(i)
    }

    #[test]
    fn leibniz_commutator() {
        let d = DiffOp::partial(0);
        let m = DiffOp::multiply(x(0));
        assert_eq!(d.commutator(&m), DiffOp::identity());
    }

    #[test]
    fn adjoint_of_derivative_is_negative() {
        let d = DiffOp::partial(3);
        assert_eq!(d.adjoint(), d.scale(&GaussRat::int(-1)));
        let op = DiffOp::term(Monomial::from_exponents(&[1, 1]), x(0).mul_ref(&x(1)).scale(&GaussRat::i()));
        assert_eq!(op.adjoint().adjoint(), op);
    }

    #[test]
    fn application_matches_composition() {
        let a = DiffOp::partial(0).compose(&DiffOp::multiply(x(1).mul_ref(&x(0))));
        let f = x(0).mul_ref(&x(0)).mul_ref(&x(1));
        let lhs = a.apply(&f);
        let rhs = DiffOp::partial(0).apply(&x(1).mul_ref(&x(0)).mul_ref(&f));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn vector_field_fast_path_matches_leibniz() {
        let y = DiffOp::term(Monomial::var(0), x(1).mul_ref(&x(2))).add(&DiffOp::partial(2));
        let o = DiffOp::term(Monomial::from_exponents(&[1, 0, 2]), x(0).mul_ref(&x(2)).mul_ref(&x(2)));
        let mut general = DiffOp::zero();
        for (alpha, a) in y.terms() {
            for gamma in alpha.divisors() {
                for (beta, b) in o.terms() {
                    let db = b.derivative(&gamma);
                    general.add_term(alpha.sub(&gamma).mul(beta), a.mul_ref(&db).scale(&int_coeff(alpha.binomial(&gamma))));
                }
            }
        }
        assert_eq!(y.compose(&o), general);
    }

    #[test]
    fn degrees() {
        assert_eq!(DiffOp::partial(0).homogeneity_degree(2), Some(1));
        assert_eq!(DiffOp::partial(2).homogeneity_degree(2), Some(2));
        assert_eq!(DiffOp::multiply(x(0)).homogeneity_degree(2), Some(-1));
        assert_eq!(DiffOp::partial(0).add(&DiffOp::partial(2)).homogeneity_degree(2), None);
        assert_eq!(DiffOp::partial(2).pow(2).z_order_lower_bound(2), Some(2));
    }
}
