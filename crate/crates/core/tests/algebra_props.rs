use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use nilpair_core::composition_algebras::{ca_conj, ca_mul, ca_norm2, AlgebraTag, CAElement};
use nilpair_core::invariant_engine::pfaffian::{bordered, pfaffian, SkewMatrix};
use nilpair_core::symm_calculus::{DiffOp, ExactPoly, GaussRat, Monomial};

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn element(tag: AlgebraTag, c: &[i64]) -> CAElement<BigRational> {
    CAElement::new(tag, c[..tag.dim()].iter().map(|&x| q(x)).collect()).unwrap()
}

fn tags() -> impl Strategy<Value = AlgebraTag> {
    prop_oneof![Just(AlgebraTag::R), Just(AlgebraTag::C), Just(AlgebraTag::H), Just(AlgebraTag::O)]
}

fn coeffs() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-9i64..=9, 8)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn norm_is_multiplicative(tag in tags(), a in coeffs(), b in coeffs()) {
        let (x, y) = (element(tag, &a), element(tag, &b));
        let xy = ca_mul(&x, &y).unwrap();
        prop_assert_eq!(ca_norm2(&xy), ca_norm2(&x) * ca_norm2(&y));
    }

    #[test]
    fn conjugation_reverses_products(tag in tags(), a in coeffs(), b in coeffs()) {
        let (x, y) = (element(tag, &a), element(tag, &b));
        let lhs = ca_conj(&ca_mul(&x, &y).unwrap());
        let rhs = ca_mul(&ca_conj(&y), &ca_conj(&x)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn alternative_laws(tag in tags(), a in coeffs(), b in coeffs()) {
        let (x, y) = (element(tag, &a), element(tag, &b));
        let xx = ca_mul(&x, &x).unwrap();
        prop_assert_eq!(ca_mul(&xx, &y).unwrap(), ca_mul(&x, &ca_mul(&x, &y).unwrap()).unwrap());
        prop_assert_eq!(ca_mul(&y, &xx).unwrap(), ca_mul(&ca_mul(&y, &x).unwrap(), &x).unwrap());
    }

    #[test]
    fn pfaffian_squares_to_determinant(half in 1usize..=5, entries in prop::collection::vec(-5i64..=5, 45)) {
        let n = 2 * half;
        let mut it = entries.into_iter();
        let m = SkewMatrix::from_upper(n, q(0), |_, _| q(it.next().unwrap()));
        let pf = pfaffian(&m).unwrap();
        prop_assert_eq!(pf.clone() * pf, exact_det(&m));
    }

    #[test]
    fn bordered_pfaffian_is_linear_in_the_border(
        half in 1usize..=3,
        entries in prop::collection::vec(-5i64..=5, 21),
        v in prop::collection::vec(-5i64..=5, 7),
        w in prop::collection::vec(-5i64..=5, 7),
    ) {
        let n = 2 * half + 1;
        let mut it = entries.into_iter();
        let z = SkewMatrix::from_upper(n, q(0), |_, _| q(it.next().unwrap()));
        let pf = |b: &[BigRational]| pfaffian(&bordered(&z, b).unwrap()).unwrap();
        let vq: Vec<BigRational> = v[..n].iter().map(|&x| q(x)).collect();
        let wq: Vec<BigRational> = w[..n].iter().map(|&x| q(x)).collect();
        let sum: Vec<BigRational> = vq.iter().zip(&wq).map(|(a, b)| a + b).collect();
        prop_assert_eq!(pf(&sum), pf(&vq) + pf(&wq));
    }
}

/// Determinant by elimination over ℚ.
fn exact_det(m: &SkewMatrix<BigRational>) -> BigRational {
    let n = m.dim();
    let mut a: Vec<Vec<BigRational>> = (0..n).map(|i| (0..n).map(|j| m.get(i, j)).collect()).collect();
    let mut det = q(1);
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| a[r][c] != q(0)) else { return q(0) };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det *= a[c][c].clone();
        for r in c + 1..n {
            let f = a[r][c].clone() / a[c][c].clone();
            for k in c..n {
                let t = f.clone() * a[c][k].clone();
                a[r][k] -= t;
            }
        }
    }
    det
}

fn small_op() -> impl Strategy<Value = DiffOp> {
    let term = (prop::collection::vec(0u8..=1, 3), prop::collection::vec(0u8..=1, 3), -3i64..=3);
    prop::collection::vec(term, 1..4).prop_map(|terms| {
        let mut d = DiffOp::zero();
        for (beta, alpha, c) in terms {
            let coeff = ExactPoly::monomial(Monomial::from_exponents(&alpha), GaussRat::int(c));
            d.add_term(Monomial::from_exponents(&beta), coeff);
        }
        d
    })
}

fn small_poly() -> impl Strategy<Value = ExactPoly> {
    prop::collection::vec((prop::collection::vec(0u8..=3, 3), -4i64..=4), 1..5).prop_map(|terms| {
        terms.into_iter().fold(ExactPoly::zero(), |acc, (e, c)| acc + ExactPoly::monomial(Monomial::from_exponents(&e), GaussRat::int(c)))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn composition_is_associative(a in small_op(), b in small_op(), c in small_op()) {
        prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
    }

    #[test]
    fn composition_acts_as_successive_application(a in small_op(), b in small_op(), f in small_poly()) {
        prop_assert_eq!(a.compose(&b).apply(&f), a.apply(&b.apply(&f)));
    }

    #[test]
    fn adjoint_is_an_anti_involution(a in small_op(), b in small_op()) {
        prop_assert_eq!(a.adjoint().adjoint(), a.clone());
        prop_assert_eq!(a.compose(&b).adjoint(), b.adjoint().compose(&a.adjoint()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn pfaffian_is_orthogonally_equivariant(half in 1usize..=5, seed in any::<u64>()) {
        use nilpair_core::group_actions::seeded_rng;
        use nilpair_core::invariant_engine::random_orthogonal;
        use rand::Rng;

        let n = 2 * half;
        let mut rng = seeded_rng(seed, 0);
        let a = nalgebra::DMatrix::from_fn(n, n, |_, _| rng.gen_range(-1.0..1.0));
        let m = &a - a.transpose();
        let g = random_orthogonal(&mut rng, n);
        let pf = |x: &nalgebra::DMatrix<f64>| pfaffian(&SkewMatrix::from_upper(n, 0.0, |i, j| x[(i, j)])).unwrap();
        let lhs = pf(&(&g * &m * g.transpose()));
        let rhs = g.determinant() * pf(&m);
        prop_assert!((lhs - rhs).abs() <= 1e-8 * rhs.abs().max(1e-3));
    }
}
