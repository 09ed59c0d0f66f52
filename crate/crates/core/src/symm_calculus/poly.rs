//! Exact Gaussian-rational polynomials in the real coordinates of 𝔫.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::ring::Ring;

/// a + b·i with a, b rational.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaussRat {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussRat {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussRat { re, im }
    }

    pub fn int(n: i64) -> Self {
        GaussRat::new(BigRational::from_integer(BigInt::from(n)), <BigRational as Zero>::zero())
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        GaussRat::new(BigRational::new(BigInt::from(num), BigInt::from(den)), <BigRational as Zero>::zero())
    }

    pub fn i() -> Self {
        GaussRat::new(<BigRational as Zero>::zero(), <BigRational as One>::one())
    }

    /// i^k.
    pub fn i_pow(k: i64) -> Self {
        match k.rem_euclid(4) {
            0 => GaussRat::int(1),
            1 => GaussRat::i(),
            2 => GaussRat::int(-1),
            _ => -GaussRat::i(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussRat::new(self.re.clone(), -self.im.clone())
    }

    pub fn to_c64(&self) -> num_complex::Complex64 {
        use num_traits::ToPrimitive;
        num_complex::Complex64::new(self.re.to_f64().unwrap_or(f64::NAN), self.im.to_f64().unwrap_or(f64::NAN))
    }

    pub fn mul_ref(&self, o: &Self) -> Self {
        let zero = <BigRational as Zero>::zero;
        match (self.im.is_zero(), o.im.is_zero()) {
            (true, true) => GaussRat::new(&self.re * &o.re, zero()),
            (true, false) => GaussRat::new(&self.re * &o.re, &self.re * &o.im),
            (false, true) => GaussRat::new(&self.re * &o.re, &self.im * &o.re),
            (false, false) => GaussRat::new(&self.re * &o.re - &self.im * &o.im, &self.re * &o.im + &self.im * &o.re),
        }
    }

    pub fn add_assign_ref(&mut self, o: &Self) {
        if !o.re.is_zero() {
            self.re += &o.re;
        }
        if !o.im.is_zero() {
            self.im += &o.im;
        }
    }
}

impl Add for GaussRat {
    type Output = GaussRat;
    fn add(self, o: Self) -> Self {
        GaussRat::new(self.re + o.re, self.im + o.im)
    }
}

impl Sub for GaussRat {
    type Output = GaussRat;
    fn sub(self, o: Self) -> Self {
        GaussRat::new(self.re - o.re, self.im - o.im)
    }
}

impl Mul for GaussRat {
    type Output = GaussRat;
    fn mul(self, o: Self) -> Self {
        self.mul_ref(&o)
    }
}

impl Neg for GaussRat {
    type Output = GaussRat;
    fn neg(self) -> Self {
        GaussRat::new(-self.re, -self.im)
    }
}

impl Ring for GaussRat {
    fn zero() -> Self {
        GaussRat::int(0)
    }
    fn one() -> Self {
        GaussRat::int(1)
    }
    fn from_i64(n: i64) -> Self {
        GaussRat::int(n)
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        GaussRat::ratio(num, den)
    }
    fn from_f64(x: f64) -> Self {
        GaussRat::new(<BigRational as Ring>::from_f64(x), <BigRational as Zero>::zero())
    }
}

fn fmt_rat(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", fmt_rat(&self.re)),
            (true, false) => write!(f, "{}i", fmt_rat(&self.im)),
            (false, false) => {
                let sign = if self.im.is_negative() { "-" } else { "+" };
                write!(f, "({}{}{}i)", fmt_rat(&self.re), sign, fmt_rat(&self.im.abs()))
            }
        }
    }
}

/// Exponent vector with trailing zeros trimmed, so equal monomials compare equal
/// regardless of how many variables were in scope.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<u8>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn from_exponents(e: &[u8]) -> Self {
        let mut v = e.to_vec();
        while v.last() == Some(&0) {
            v.pop();
        }
        Monomial(v)
    }

    pub fn var(i: usize) -> Self {
        let mut v = vec![0u8; i + 1];
        v[i] = 1;
        Monomial(v)
    }

    pub fn exp(&self, i: usize) -> u8 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> &[u8] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    /// Degree restricted to the variables in `range`.
    pub fn degree_in(&self, range: std::ops::Range<usize>) -> u32 {
        range.map(|i| self.exp(i) as u32).sum()
    }

    pub fn mul(&self, o: &Self) -> Self {
        let n = self.0.len().max(o.0.len());
        let v: Vec<u8> = (0..n)
            .map(|i| self.exp(i).checked_add(o.exp(i)).expect("exponent overflow"))
            .collect();
        Monomial(v)
    }

    pub fn with_exp(&self, i: usize, e: u8) -> Self {
        let mut v = self.0.clone();
        if v.len() <= i {
            v.resize(i + 1, 0);
        }
        v[i] = e;
        Monomial::from_exponents(&v)
    }

    /// Multi-indices δ ≤ self.
    pub fn divisors(&self) -> Vec<Monomial> {
        let mut out = vec![Vec::<u8>::new()];
        for (i, &e) in self.0.iter().enumerate() {
            let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
            for base in &out {
                for k in 0..=e {
                    let mut b = base.clone();
                    b.resize(i + 1, 0);
                    b[i] = k;
                    next.push(b);
                }
            }
            out = next;
        }
        out.into_iter().map(|v| Monomial::from_exponents(&v)).collect()
    }

    /// self − o, assuming o ≤ self.
    pub fn sub(&self, o: &Self) -> Self {
        let v: Vec<u8> = (0..self.0.len()).map(|i| self.exp(i) - o.exp(i)).collect();
        Monomial::from_exponents(&v)
    }

    /// Π_i C(self_i, o_i).
    pub fn binomial(&self, o: &Self) -> BigInt {
        let mut acc = BigInt::one();
        for i in 0..self.0.len() {
            acc *= binom(self.exp(i) as u64, o.exp(i) as u64);
        }
        acc
    }

    /// α! = Π α_i!.
    pub fn factorial(&self) -> BigInt {
        self.0.iter().fold(BigInt::one(), |acc, &e| acc * factorial(e as u64))
    }

    pub fn support(&self) -> impl Iterator<Item = (usize, u8)> + '_ {
        self.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, &e)| (i, e))
    }

    pub fn format_with(&self, names: &dyn Fn(usize) -> String) -> String {
        let parts: Vec<String> = self
            .support()
            .map(|(i, e)| if e == 1 { names(i) } else { format!("{}^{}", names(i), e) })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |a, k| a * BigInt::from(k))
}

pub fn binom(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ExactPoly {
    terms: BTreeMap<Monomial, GaussRat>,
}

impl ExactPoly {
    pub fn zero() -> Self {
        ExactPoly { terms: BTreeMap::new() }
    }

    pub fn constant(c: GaussRat) -> Self {
        ExactPoly::monomial(Monomial::one(), c)
    }

    pub fn monomial(m: Monomial, c: GaussRat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        ExactPoly { terms }
    }

    pub fn var(i: usize) -> Self {
        ExactPoly::monomial(Monomial::var(i), GaussRat::int(1))
    }

    /// Variables offset, offset+1, … as a vector.
    pub fn vars(offset: usize, count: usize) -> Vec<ExactPoly> {
        (offset..offset + count).map(ExactPoly::var).collect()
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, GaussRat> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: Monomial, c: GaussRat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                e.get_mut().add_assign_ref(&c);
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_assign_ref(&mut self, o: &ExactPoly) {
        for (m, c) in &o.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn add_scaled(&mut self, o: &ExactPoly, s: &GaussRat) {
        for (m, c) in &o.terms {
            self.add_term(m.clone(), c.mul_ref(s));
        }
    }

    pub fn mul_ref(&self, o: &ExactPoly) -> ExactPoly {
        let mut out = ExactPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                out.add_term(m1.mul(m2), c1.mul_ref(c2));
            }
        }
        out
    }

    pub fn scale(&self, s: &GaussRat) -> ExactPoly {
        let mut out = ExactPoly::zero();
        out.add_scaled(self, s);
        out
    }

    pub fn conj(&self) -> ExactPoly {
        ExactPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), c.conj())).collect() }
    }

    pub fn is_real(&self) -> bool {
        self.terms.values().all(|c| c.im.is_zero())
    }

    /// ∂^δ applied to the polynomial.
    pub fn derivative(&self, delta: &Monomial) -> ExactPoly {
        let mut out = ExactPoly::zero();
        'terms: for (m, c) in &self.terms {
            let mut coeff = BigInt::one();
            for (i, d) in delta.support() {
                let e = m.exp(i);
                if e < d {
                    continue 'terms;
                }
                for k in 0..d {
                    coeff *= BigInt::from(e - k);
                }
            }
            let nm = m.sub(delta);
            out.add_term(nm, c.mul_ref(&GaussRat::new(BigRational::from_integer(coeff), <BigRational as Zero>::zero())));
        }
        out
    }

    pub fn partial(&self, i: usize) -> ExactPoly {
        self.derivative(&Monomial::var(i))
    }

    /// Replaces every variable x_k by `images[k]` (variables beyond the slice map to zero).
    pub fn substitute(&self, images: &[ExactPoly]) -> ExactPoly {
        let mut out = ExactPoly::zero();
        for (m, c) in &self.terms {
            let mut acc = ExactPoly::constant(c.clone());
            for (i, e) in m.support() {
                let img = images.get(i).cloned().unwrap_or_else(ExactPoly::zero);
                for _ in 0..e {
                    acc = acc.mul_ref(&img);
                }
                if acc.is_zero() {
                    break;
                }
            }
            out.add_assign_ref(&acc);
        }
        out
    }

    pub fn eval_f64(&self, x: &[f64]) -> num_complex::Complex64 {
        let mut acc = num_complex::Complex64::new(0.0, 0.0);
        for (m, c) in &self.terms {
            let mut t = c.to_c64();
            for (i, e) in m.support() {
                t *= x[i].powi(e as i32);
            }
            acc += t;
        }
        acc
    }

    /// Bi-degree sets: all (deg over range_a, deg over range_b) pairs that occur.
    pub fn degrees_in(&self, a: std::ops::Range<usize>, b: std::ops::Range<usize>) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> =
            self.terms.keys().map(|m| (m.degree_in(a.clone()), m.degree_in(b.clone()))).collect();
        out.sort();
        out.dedup();
        out
    }

    pub fn format_with(&self, names: &dyn Fn(usize) -> String) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(m, c)| format!("{}*{}", c, m.format_with(names)))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl fmt::Display for ExactPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format_with(&|i| format!("x{i}")))
    }
}

impl Add for ExactPoly {
    type Output = ExactPoly;
    fn add(mut self, o: Self) -> Self {
        if self.terms.len() < o.terms.len() {
            let mut o = o;
            o.add_assign_ref(&self);
            return o;
        }
        self.add_assign_ref(&o);
        self
    }
}

impl Sub for ExactPoly {
    type Output = ExactPoly;
    fn sub(mut self, o: Self) -> Self {
        self.add_scaled(&o, &GaussRat::int(-1));
        self
    }
}

impl Mul for ExactPoly {
    type Output = ExactPoly;
    fn mul(self, o: Self) -> Self {
        self.mul_ref(&o)
    }
}

impl Neg for ExactPoly {
    type Output = ExactPoly;
    fn neg(self) -> Self {
        ExactPoly { terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect() }
    }
}

impl Ring for ExactPoly {
    fn zero() -> Self {
        ExactPoly::zero()
    }
    fn one() -> Self {
        ExactPoly::constant(GaussRat::int(1))
    }
    fn from_i64(n: i64) -> Self {
        ExactPoly::constant(GaussRat::int(n))
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        ExactPoly::constant(GaussRat::ratio(num, den))
    }
    fn from_f64(x: f64) -> Self {
        ExactPoly::constant(<GaussRat as Ring>::from_f64(x))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_coefficients_are_never_stored() {
        let x = ExactPoly::var(0);
        let d = x.clone() - x;
        assert!(d.terms().is_empty());
        assert_eq!(d, ExactPoly::zero());
    }

    #[test]
    fn monomials_ignore_trailing_zeros() {
        assert_eq!(Monomial::from_exponents(&[1, 0, 0]), Monomial::var(0));
        assert_eq!(Monomial::var(2).mul(&Monomial::var(0)), Monomial::from_exponents(&[1, 0, 1]));
    }

    #[test]
    fn derivative_of_power() {
        let x = ExactPoly::var(1);
        let p = x.clone() * x.clone() * x;
        let d = p.partial(1);
        assert_eq!(d, ExactPoly::monomial(Monomial::from_exponents(&[0, 2]), GaussRat::int(3)));
    }

    #[test]
    fn i_powers_cycle() {
        assert_eq!(GaussRat::i_pow(-1), -GaussRat::i());
        assert_eq!(GaussRat::i_pow(-2), GaussRat::int(-1));
        assert_eq!(GaussRat::i() * GaussRat::i(), GaussRat::int(-1));
    }

    #[test]
    fn substitution_composes() {
        let (x, y) = (ExactPoly::var(0), ExactPoly::var(1));
        let p = x.clone() * y.clone();
        let q = p.substitute(&[y.clone(), x.clone() + y.clone()]);
        assert_eq!(q, y.clone() * x + y.clone() * y);
    }

    #[test]
    fn divisors_count() {
        let m = Monomial::from_exponents(&[2, 0, 1]);
        assert_eq!(m.divisors().len(), 6);
        assert_eq!(m.binomial(&Monomial::var(0)), BigInt::from(2));
    }
}
