//! Hilbert bases and brackets, written once over a generic ring.

use crate::composition_algebras::{ca_conj, ca_mul, AlgebraTag};
use crate::invariant_engine::pfaffian::{bordered, pfaffian, SkewMatrix};
use crate::matrix::Matrix;
use crate::ring::Ring;

use super::charts::*;
use super::ids::CaseKind;

fn col<R: Ring>(tag: AlgebraTag, v: &[R]) -> Matrix<E<R>> {
    Matrix::from_coords(tag, v.len() / tag.dim(), 1, v)
}

fn re<R: Ring>(x: &E<R>) -> R {
    x.coeffs()[0].clone()
}

fn im_part<R: Ring>(x: &E<R>) -> R {
    x.coeffs()[1].clone()
}

fn c_i<R: Ring>() -> E<R> {
    E::unit(AlgebraTag::C, 1)
}

fn oct<R: Ring>(x: &[R]) -> E<R> {
    E::from_slice(AlgebraTag::O, x)
}

fn mul<R: Ring>(a: &E<R>, b: &E<R>) -> E<R> {
    ca_mul(a, b).expect("same algebra")
}

/// Real part of a 1×1 matrix entry.
fn scalar_re<R: Ring>(m: &Matrix<E<R>>) -> R {
    re(m.get(0, 0))
}

/// Row a of a 2×n quaternionic matrix as a 1×n matrix.
fn row<R: Ring>(m: &Matrix<E<R>>, a: usize) -> Matrix<E<R>> {
    Matrix::from_fn(1, m.cols, |_, j| m.get(a, j).clone())
}

/// (Dimension of 𝔳, dimension of 𝔷).
pub fn dims(kind: CaseKind, n: usize) -> (usize, usize) {
    match kind {
        CaseKind::A1So | CaseKind::A1O => (n, n * (n - 1) / 2),
        CaseKind::A2 => (8, 7),
        CaseKind::A3 => (7, 7),
        CaseKind::A45U | CaseKind::A45Su => (2 * n, n * (n - 1)),
        CaseKind::A6 => (2 * n, n * n),
        CaseKind::A7Sp | CaseKind::A7USp => (4 * n, hs0_dim(n) + 3),
        CaseKind::A8 => (16, 7),
        CaseKind::A9 => (4 * n, 3),
        CaseKind::A10 => (8 * n, 10),
        CaseKind::A11U | CaseKind::A11Su => (4 * n, 4),
        CaseKind::A12 | CaseKind::A12Mod => (8 * n, 4),
        CaseKind::Line(l) => match l {
            1 => (4 * n, 2),
            2 => (4 * n, 3),
            3 => (8, 7),
            4 => (4, 3),
            5 => (8, 5),
            6 => (8, 3),
            7 => (4 * n, 3),
            8 => (8 * n, 3),
            9 => (16, 7),
            10 => (3, 3),
            11 => (6, 6),
            _ => (7, 7),
        },
    }
}

/// Bi-degrees (deg_v, deg_z) in catalog order.
pub fn bidegrees(kind: CaseKind, n: usize) -> Vec<(u32, u32)> {
    let n32 = n as u32;
    match kind {
        CaseKind::A1So => {
            let l = n32 / 2;
            if n % 2 == 0 {
                let mut out: Vec<(u32, u32)> = (1..l).map(|k| (0, 2 * k)).collect();
                out.push((0, l));
                out.extend((0..l).map(|k| (2, 2 * k)));
                out
            } else {
                let mut out: Vec<(u32, u32)> = (1..=l).map(|k| (0, 2 * k)).collect();
                out.extend((0..l).map(|k| (2, 2 * k)));
                out.push((1, l));
                out
            }
        }
        CaseKind::A1O => {
            let mut out: Vec<(u32, u32)> = (1..=n32 / 2).map(|k| (0, 2 * k)).collect();
            out.extend((0..=(n32 - 1) / 2).map(|k| (2, 2 * k)));
            out
        }
        CaseKind::A2 | CaseKind::A9 => vec![(2, 0), (0, 2)],
        CaseKind::A3 => vec![(2, 0), (1, 1), (0, 2)],
        CaseKind::A45U => {
            if n == 2 {
                return vec![(2, 0), (0, 2)];
            }
            let mut out: Vec<(u32, u32)> = (1..=n32 / 2).map(|k| (0, 2 * k)).collect();
            out.extend((0..=(n32 - 1) / 2).map(|k| (2, 2 * k)));
            out
        }
        CaseKind::A45Su => {
            if n == 2 {
                return vec![(2, 0), (0, 1), (0, 1)];
            }
            let l = n32 / 2;
            if n % 2 == 0 {
                let mut out: Vec<(u32, u32)> = (1..l).map(|k| (0, 2 * k)).collect();
                out.push((0, l));
                out.push((0, l));
                out.extend((0..=(n32 - 1) / 2).map(|k| (2, 2 * k)));
                out
            } else {
                let mut out: Vec<(u32, u32)> = (1..=l).map(|k| (0, 2 * k)).collect();
                out.extend((0..l).map(|k| (2, 2 * k)));
                out.push((1, l));
                out.push((1, l));
                out
            }
        }
        CaseKind::A6 => {
            let mut out: Vec<(u32, u32)> = (1..=n32).map(|k| (0, k)).collect();
            out.extend((0..n32).map(|k| (2, k)));
            out
        }
        CaseKind::A7Sp | CaseKind::A7USp => {
            let mut out: Vec<(u32, u32)> = (2..=n32).map(|k| (0, k)).collect();
            out.extend((0..n32).map(|k| (2, k)));
            if kind == CaseKind::A7Sp {
                out.extend([(0, 1), (0, 1), (0, 1)]);
            } else {
                out.extend([(0, 1), (0, 2)]);
            }
            out
        }
        CaseKind::A8 => vec![(0, 2), (2, 0), (2, 1), (4, 0)],
        CaseKind::A10 => {
            let mut out = vec![(0, 2), (0, 4), (2, 0), (2, 2), (4, 2)];
            if n >= 2 {
                out.push((4, 0));
            }
            out
        }
        CaseKind::A11U | CaseKind::A11Su => vec![(0, 1), (0, 2), (2, 0), (4, 0), (2, 1)],
        CaseKind::A12 | CaseKind::A12Mod => vec![(0, 1), (0, 2), (2, 0), (4, 0), (4, 0), (2, 1)],
        CaseKind::Line(l) => match l {
            1..=3 => vec![(2, 0), (0, 2)],
            4 | 5 => vec![(2, 0), (2, 1), (0, 2)],
            6 | 7 => vec![(2, 0), (4, 0), (2, 1), (0, 2)],
            8 => vec![(2, 0), (4, 0), (4, 0), (2, 1), (0, 2)],
            9 => vec![(2, 0), (4, 0), (2, 1), (0, 2)],
            10 | 12 => vec![(2, 0), (1, 1), (0, 2)],
            _ => vec![(2, 0), (1, 1), (1, 1), (0, 2)],
        },
    }
}

/// Human-readable labels of the Hilbert-basis entries, in catalog order.
pub fn labels(kind: CaseKind, n: usize) -> Vec<String> {
    let s = |x: &str| x.to_string();
    match kind {
        CaseKind::A1So => {
            let l = n / 2;
            let mut out: Vec<String>;
            if n % 2 == 0 {
                out = (1..l).map(|k| format!("tr(z^{})", 2 * k)).collect();
                out.push(s("Pf(z)"));
                out.extend((0..l).map(|k| format!("v^t z^{} v", 2 * k)));
            } else {
                out = (1..=l).map(|k| format!("tr(z^{})", 2 * k)).collect();
                out.extend((0..l).map(|k| format!("v^t z^{} v", 2 * k)));
                out.push(s("Pf(z|v)"));
            }
            out
        }
        CaseKind::A1O => {
            let mut out: Vec<String> = (1..=n / 2).map(|k| format!("tr(z^{})", 2 * k)).collect();
            out.extend((0..=(n - 1) / 2).map(|k| format!("v^t z^{} v", 2 * k)));
            out
        }
        CaseKind::A2 | CaseKind::A9 => vec![s("|v|^2"), s("|z|^2")],
        CaseKind::A3 => vec![s("|v|^2"), s("v^t z"), s("|z|^2")],
        CaseKind::A45U => {
            if n == 2 {
                return vec![s("|v|^2"), s("|z|^2")];
            }
            let mut out: Vec<String> = (1..=n / 2).map(|k| format!("tr((zbar z)^{k})")).collect();
            out.extend((0..=(n - 1) / 2).map(|k| format!("v* (z zbar)^{k} v")));
            out
        }
        CaseKind::A45Su => {
            if n == 2 {
                return vec![s("|v|^2"), s("Re z"), s("Im z")];
            }
            let l = n / 2;
            if n % 2 == 0 {
                let mut out: Vec<String> = (1..l).map(|k| format!("tr((zbar z)^{k})")).collect();
                out.extend([s("Re Pf(z)"), s("Im Pf(z)")]);
                out.extend((0..=(n - 1) / 2).map(|k| format!("v* (z zbar)^{k} v")));
                out
            } else {
                let mut out: Vec<String> = (1..=l).map(|k| format!("tr((zbar z)^{k})")).collect();
                out.extend((0..l).map(|k| format!("v* (z zbar)^{k} v")));
                out.extend([s("Re Pf(z|v)"), s("Im Pf(z|v)")]);
                out
            }
        }
        CaseKind::A6 => {
            let mut out: Vec<String> = (1..=n).map(|k| format!("i^{k} tr(z^{k})")).collect();
            out.extend((0..n).map(|k| format!("i^{k} v* z^{k} v")));
            out
        }
        CaseKind::A7Sp | CaseKind::A7USp => {
            let mut out: Vec<String> = (2..=n).map(|k| format!("tr(z^{k})")).collect();
            out.extend((0..n).map(|k| format!("v* z^{k} v")));
            if kind == CaseKind::A7Sp {
                out.extend([s("a"), s("b"), s("c")]);
            } else {
                out.extend([s("a"), s("b^2+c^2")]);
            }
            out
        }
        CaseKind::A8 => vec![s("|z|^2"), s("|v|^2"), s("Re(z (v1 v2bar))"), s("|v1|^2|v2|^2-Re(v1 v2bar)^2")],
        CaseKind::A10 => {
            let mut out = vec![s("tr(z^2)"), s("tr(z^4)"), s("|v|^2"), s("tr(zv(zv)*)"), s("tr((zvv*-vv*z)^2)")];
            if n >= 2 {
                out.push(s("tr((vv*)^2)"));
            }
            out
        }
        CaseKind::A11U | CaseKind::A11Su => {
            vec![s("i tr(z)"), s("tr(z^2)"), s("|v|^2"), s("tr((vv*)^2)"), s("i tr(v* z v)")]
        }
        CaseKind::A12 => vec![
            s("i tr(z)"),
            s("tr(z^2)"),
            s("|v|^2"),
            s("tr((vv*)^2)"),
            s("|x|^2|y|^2-(x.y)^2"),
            s("tr(v* i z v)"),
        ],
        CaseKind::A12Mod => vec![
            s("t"),
            s("|z0|^2"),
            s("|v|^2"),
            s("|v1|^4+2|v1v2*|^2+|v2|^4"),
            s("|v1|^2|v2|^2-Re(v1v2*)^2"),
            s("Re((v1v2*-v2v1*)z0)"),
        ],
        CaseKind::Line(l) => match l {
            1..=3 => vec![s("|v|^2"), s("|z|^2")],
            4 => vec![s("|v|^2"), s("i v* z v"), s("|z|^2")],
            5 => vec![s("|v|^2"), s("v* z v"), s("|z|^2")],
            6 | 7 => vec![s("|v|^2"), s("tr((v*v)^2)"), s("i tr(v* z v)"), s("|z|^2")],
            8 => vec![
                s("|v|^2"),
                s("|v1|^4+2|v1v2*|^2+|v2|^4"),
                s("|v1|^2|v2|^2-Re(v1v2*)^2"),
                s("Re((v1v2*-v2v1*)z)"),
                s("|z|^2"),
            ],
            9 => vec![s("|v|^2"), s("|v1|^2|v2|^2-Re(v1v2bar)^2"), s("Re((v1v2bar-v2v1bar)z)"), s("|z|^2")],
            10 | 12 => vec![s("|v|^2"), s("v^t z"), s("|z|^2")],
            _ => vec![s("|v|^2"), s("Re v^t z"), s("Im v^t z"), s("|z|^2")],
        },
    }
}

fn real_pf<R: Ring>(m: &Matrix<R>) -> R {
    let s = SkewMatrix::from_upper(m.rows, R::zero(), |i, j| m.get(i, j).clone());
    pfaffian(&s).expect("even size")
}

fn real_pf_bordered<R: Ring>(m: &Matrix<R>, v: &[R]) -> R {
    let s = SkewMatrix::from_upper(m.rows, R::zero(), |i, j| m.get(i, j).clone());
    pfaffian(&bordered(&s, v).expect("matching border")).expect("even size")
}

fn complex_pf<R: Ring>(m: &Matrix<E<R>>, border: Option<&[E<R>]>) -> E<R> {
    let s = SkewMatrix::from_upper(m.rows, E::zero(AlgebraTag::C), |i, j| m.get(i, j).clone());
    match border {
        None => pfaffian(&s).expect("even size"),
        Some(b) => pfaffian(&bordered(&s, b).expect("matching border")).expect("even size"),
    }
}

/// Quartic and Gram invariants of a pair of rows (v₁, v₂) over ℍⁿ or 𝕆.
struct RowPair<R: Ring> {
    n1: R,
    n2: R,
    /// v₁v₂* (ℍ rows) or v₁v̄₂ (𝕆).
    cross: E<R>,
}

impl<R: Ring> RowPair<R> {
    fn quaternion_rows(v: &[R], n: usize) -> Self {
        let m = Matrix::from_coords(AlgebraTag::H, 2, n, v);
        let (r1, r2) = (row(&m, 0), row(&m, 1));
        RowPair { n1: r1.norm2(), n2: r2.norm2(), cross: r1.mul(&r2.adjoint()).get(0, 0).clone() }
    }

    fn octonion_pair(v: &[R]) -> Self {
        let (v1, v2) = (oct(&v[0..8]), oct(&v[8..16]));
        RowPair { n1: sum_sq(&v[0..8]), n2: sum_sq(&v[8..16]), cross: mul(&v1, &ca_conj(&v2)) }
    }

    fn quartic(&self) -> R {
        let c2 = crate::composition_algebras::ca_norm2(&self.cross);
        self.n1.clone() * self.n1.clone() + c2.scale_i64(2) + self.n2.clone() * self.n2.clone()
    }

    fn gram(&self) -> R {
        let r = re(&self.cross);
        self.n1.clone() * self.n2.clone() - r.clone() * r
    }

    /// Re((c − c̄) z) for an imaginary z.
    fn mixed(&self, z: &E<R>) -> R {
        let d = self.cross.clone() - ca_conj(&self.cross);
        re(&mul(&d, z))
    }
}

/// The Hilbert map in catalog order.
pub fn hilbert<R: Ring>(kind: CaseKind, n: usize, v: &[R], z: &[R]) -> Vec<R> {
    match kind {
        CaseKind::A1So | CaseKind::A1O => {
            let zm = so_matrix(n, z);
            let vm = Matrix::real_from_slice(n, 1, v);
            let z2 = zm.mul(&zm);
            let trz = |k: u32| z2.pow(k).trace();
            let vzv = |k: u32| vm.transpose().mul(&z2.pow(k)).mul(&vm).get(0, 0).clone();
            let l = (n / 2) as u32;
            let mut out = Vec::new();
            if kind == CaseKind::A1O {
                out.extend((1..=l).map(trz));
                out.extend((0..=(n as u32 - 1) / 2).map(vzv));
            } else if n % 2 == 0 {
                out.extend((1..l).map(trz));
                out.push(real_pf(&zm));
                out.extend((0..l).map(vzv));
            } else {
                out.extend((1..=l).map(trz));
                out.extend((0..l).map(vzv));
                out.push(real_pf_bordered(&zm, v));
            }
            out
        }
        CaseKind::A2 | CaseKind::A9 | CaseKind::Line(1) | CaseKind::Line(2) | CaseKind::Line(3) => {
            vec![sum_sq(v), sum_sq(z)]
        }
        CaseKind::A3 | CaseKind::Line(10) | CaseKind::Line(12) => vec![sum_sq(v), dot(v, z), sum_sq(z)],
        CaseKind::A45U | CaseKind::A45Su => {
            let zm = lambda2_matrix(n, z);
            if n == 2 {
                return if kind == CaseKind::A45U {
                    vec![sum_sq(v), sum_sq(z)]
                } else {
                    vec![sum_sq(v), z[0].clone(), z[1].clone()]
                };
            }
            let vm = col(AlgebraTag::C, v);
            let zb = zm.map(|x| ca_conj(x));
            let zbz = zb.mul(&zm);
            let zzb = zm.mul(&zb);
            let trz = |k: u32| re(&zbz.pow(k).trace());
            let vzv = |k: u32| scalar_re(&vm.adjoint().mul(&zzb.pow(k)).mul(&vm));
            let n32 = n as u32;
            let l = n32 / 2;
            let mut out = Vec::new();
            if kind == CaseKind::A45U {
                out.extend((1..=l).map(trz));
                out.extend((0..=(n32 - 1) / 2).map(vzv));
            } else if n % 2 == 0 {
                out.extend((1..l).map(trz));
                let pf = complex_pf(&zm, None);
                out.push(re(&pf));
                out.push(im_part(&pf));
                out.extend((0..=(n32 - 1) / 2).map(vzv));
            } else {
                out.extend((1..=l).map(trz));
                out.extend((0..l).map(vzv));
                let border: Vec<E<R>> = (0..n).map(|k| cx(v[2 * k].clone(), v[2 * k + 1].clone())).collect();
                let pf = complex_pf(&zm, Some(&border));
                out.push(re(&pf));
                out.push(im_part(&pf));
            }
            out
        }
        CaseKind::A6 => {
            let iz = u_matrix(n, z).scale_left(&c_i());
            let vm = col(AlgebraTag::C, v);
            let mut out: Vec<R> = (1..=n as u32).map(|k| re(&iz.pow(k).trace())).collect();
            out.extend((0..n as u32).map(|k| scalar_re(&vm.adjoint().mul(&iz.pow(k)).mul(&vm))));
            out
        }
        CaseKind::A7Sp | CaseKind::A7USp => {
            let hd = hs0_dim(n);
            let zm = hs0_matrix(n, &z[..hd]);
            let vm = col(AlgebraTag::H, v);
            let mut out: Vec<R> = (2..=n as u32).map(|k| zm.pow(k).re_trace()).collect();
            out.extend((0..n as u32).map(|k| scalar_re(&vm.adjoint().mul(&zm.pow(k)).mul(&vm))));
            let (a, b, c) = (z[hd].clone(), z[hd + 1].clone(), z[hd + 2].clone());
            if kind == CaseKind::A7Sp {
                out.extend([a, b, c]);
            } else {
                out.extend([a, b.clone() * b + c.clone() * c]);
            }
            out
        }
        CaseKind::A8 => {
            let p = RowPair::octonion_pair(v);
            let zo = imaginary(AlgebraTag::O, z);
            let f3 = re(&mul(&zo, &p.cross));
            vec![sum_sq(z), sum_sq(v), f3, p.gram()]
        }
        CaseKind::A10 => {
            let vm = Matrix::from_coords(AlgebraTag::H, 2, n, v);
            let zm = sp2_matrix(z);
            let vv = vm.mul(&vm.adjoint());
            let zv = zm.mul(&vm);
            let c = zm.mul(&vv).sub(&vv.mul(&zm));
            let mut out = vec![
                zm.pow(2).re_trace(),
                zm.pow(4).re_trace(),
                sum_sq(v),
                zv.mul(&zv.adjoint()).re_trace(),
                c.mul(&c).re_trace(),
            ];
            if n >= 2 {
                out.push(vv.mul(&vv).re_trace());
            }
            out
        }
        CaseKind::A11U | CaseKind::A11Su => {
            let vm = Matrix::from_coords(AlgebraTag::C, 2, n, v);
            let zm = u_matrix(2, z);
            let vv = vm.mul(&vm.adjoint());
            let i = c_i::<R>();
            vec![
                re(&mul(&i, &zm.trace())),
                zm.pow(2).re_trace(),
                sum_sq(v),
                vv.mul(&vv).re_trace(),
                re(&mul(&i, &vm.adjoint().mul(&zm).mul(&vm).trace())),
            ]
        }
        CaseKind::A12 => {
            let vm = Matrix::from_coords(AlgebraTag::H, 2, n, v);
            let zc = u_matrix(2, z);
            let izh = zc.scale_left(&c_i()).map(c_to_h);
            let vv = vm.mul(&vm.adjoint());
            let qi: E<R> = E::unit(AlgebraTag::H, 1);
            let qj: E<R> = E::unit(AlgebraTag::H, 2);
            let sigma = Matrix::from_fn(2, n, |a, k| {
                if a == 0 {
                    -mul(&qj, vm.get(1, k))
                } else {
                    mul(&qj, vm.get(0, k))
                }
            });
            let half = R::from_ratio(1, 2);
            let x = vm.add(&sigma).map(|e| e.scale(&half));
            let y = vm.sub(&sigma).map(|e| mul(&(-qi.clone()), e).scale(&half));
            let (xx, yy, xy) = (x.norm2(), y.norm2(), x.dot(&y));
            vec![
                re(&mul(&c_i(), &zc.trace())),
                zc.pow(2).re_trace(),
                sum_sq(v),
                vv.mul(&vv).re_trace(),
                xx * yy - xy.clone() * xy,
                vm.adjoint().mul(&izh).mul(&vm).re_trace(),
            ]
        }
        CaseKind::A12Mod => {
            let p = RowPair::quaternion_rows(v, n);
            let z0 = imaginary(AlgebraTag::H, &z[1..4]);
            vec![z[0].clone(), sum_sq(&z[1..4]), sum_sq(v), p.quartic(), p.gram(), p.mixed(&z0)]
        }
        CaseKind::Line(4) => {
            let vm = col(AlgebraTag::C, v);
            let zm = su2_matrix(z);
            let m = re(&mul(&c_i(), vm.adjoint().mul(&zm).mul(&vm).get(0, 0)));
            vec![sum_sq(v), m, sum_sq(z)]
        }
        CaseKind::Line(5) => {
            let vm = col(AlgebraTag::H, v);
            let zm = hs2_matrix(z);
            vec![sum_sq(v), scalar_re(&vm.adjoint().mul(&zm).mul(&vm)), sum_sq(z)]
        }
        CaseKind::Line(6) | CaseKind::Line(7) => {
            let p = if kind == CaseKind::Line(6) { 2 } else { n };
            let vm = Matrix::from_coords(AlgebraTag::C, 2, p, v);
            let zm = su2_matrix(z);
            let vsv = vm.adjoint().mul(&vm);
            let m = re(&mul(&c_i(), &vm.adjoint().mul(&zm).mul(&vm).trace()));
            vec![sum_sq(v), vsv.mul(&vsv).re_trace(), m, sum_sq(z)]
        }
        CaseKind::Line(8) => {
            let p = RowPair::quaternion_rows(v, n);
            let zq = imaginary(AlgebraTag::H, z);
            vec![sum_sq(v), p.quartic(), p.gram(), p.mixed(&zq), sum_sq(z)]
        }
        CaseKind::Line(9) => {
            let p = RowPair::octonion_pair(v);
            let zo = imaginary(AlgebraTag::O, z);
            vec![sum_sq(v), p.gram(), p.mixed(&zo), sum_sq(z)]
        }
        CaseKind::Line(11) => {
            let mut tr = cx(R::zero(), R::zero());
            for k in 0..3 {
                let a = cx(v[2 * k].clone(), v[2 * k + 1].clone());
                let b = cx(z[2 * k].clone(), z[2 * k + 1].clone());
                tr = tr + mul(&a, &b);
            }
            vec![sum_sq(v), re(&tr), im_part(&tr), sum_sq(z)]
        }
        CaseKind::Line(_) => unreachable!("table lines are 1..=12"),
    }
}

fn cross3<T: Clone + std::ops::Mul<Output = T> + std::ops::Sub<Output = T>>(a: &[T], b: &[T]) -> [T; 3] {
    [
        a[1].clone() * b[2].clone() - a[2].clone() * b[1].clone(),
        a[2].clone() * b[0].clone() - a[0].clone() * b[2].clone(),
        a[0].clone() * b[1].clone() - a[1].clone() * b[0].clone(),
    ]
}

/// ½(xȳ − yx̄) = Im(xȳ) in a composition algebra.
fn half_skew<R: Ring>(x: &E<R>, y: &E<R>) -> E<R> {
    let a = mul(x, &ca_conj(y));
    let b = mul(y, &ca_conj(x));
    (a - b).scale(&R::from_ratio(1, 2))
}

/// The stored bracket [v, u] ∈ 𝔷 in coordinates, when the case carries one.
pub fn bracket<R: Ring>(kind: CaseKind, n: usize, v: &[R], u: &[R]) -> Option<Vec<R>> {
    let out = match kind {
        CaseKind::Line(1) => {
            let mut acc = cx(R::zero(), R::zero());
            for a in 0..n {
                let c = |x: &[R], k: usize| cx(x[2 * k].clone(), x[2 * k + 1].clone());
                acc = acc + mul(&c(v, a), &c(u, a + n)) - mul(&c(v, a + n), &c(u, a));
            }
            acc.into_coeffs()
        }
        CaseKind::Line(2) | CaseKind::A9 => {
            let (vm, um) = (col(AlgebraTag::H, v), col(AlgebraTag::H, u));
            im_coords(vm.adjoint().mul(&um).get(0, 0))
        }
        CaseKind::Line(3) | CaseKind::A2 => im_coords(&half_skew(&oct(v), &oct(u))),
        CaseKind::Line(4) | CaseKind::Line(6) | CaseKind::Line(7) => {
            let p = match kind {
                CaseKind::Line(4) => 1,
                CaseKind::Line(6) => 2,
                _ => n,
            };
            let (vm, um) = (Matrix::from_coords(AlgebraTag::C, 2, p, v), Matrix::from_coords(AlgebraTag::C, 2, p, u));
            let w = vm.mul(&um.adjoint()).sub(&um.mul(&vm.adjoint()));
            let half_tr = w.trace().scale(&R::from_ratio(1, 2));
            let w0 = w.sub(&w.identity_like().scale_left(&half_tr));
            su2_coords(&w0)
        }
        CaseKind::Line(5) => {
            let (vm, um) = (col(AlgebraTag::H, v), col(AlgebraTag::H, u));
            let qi: E<R> = E::unit(AlgebraTag::H, 1);
            let w = vm.mul(&um.adjoint().scale_left(&qi)).sub(&um.mul(&vm.adjoint().scale_left(&qi)));
            let half_tr = E::real(AlgebraTag::H, w.re_trace() * R::from_ratio(1, 2));
            let w0 = w.sub(&w.identity_like().scale_left(&half_tr));
            hs2_coords(&w0)
        }
        CaseKind::Line(8) => {
            let (vm, um) = (Matrix::from_coords(AlgebraTag::H, 2, n, v), Matrix::from_coords(AlgebraTag::H, 2, n, u));
            let mut acc = E::zero(AlgebraTag::H);
            for a in 0..2 {
                let (va, ua) = (row(&vm, a), row(&um, a));
                let x = va.mul(&ua.adjoint()).get(0, 0).clone();
                let y = ua.mul(&va.adjoint()).get(0, 0).clone();
                acc = acc + x - y;
            }
            im_coords(&acc.scale(&R::from_ratio(-1, 2)))
        }
        CaseKind::Line(9) | CaseKind::A8 => {
            let s1 = half_skew(&oct(&v[0..8]), &oct(&u[0..8]));
            let s2 = half_skew(&oct(&v[8..16]), &oct(&u[8..16]));
            im_coords(&(-(s1 + s2)))
        }
        CaseKind::Line(10) => cross3(v, u).to_vec(),
        CaseKind::Line(11) => {
            let c = |x: &[R]| -> Vec<E<R>> { (0..3).map(|k| cx(x[2 * k].clone(), x[2 * k + 1].clone())).collect() };
            cross3(&c(v), &c(u)).into_iter().flat_map(|e| e.into_coeffs()).collect()
        }
        CaseKind::Line(12) | CaseKind::A3 => {
            let (vo, uo) = (imaginary(AlgebraTag::O, v), imaginary(AlgebraTag::O, u));
            im_coords(&half_skew(&vo, &uo))
        }
        _ => return None,
    };
    Some(out)
}

pub fn has_bracket(kind: CaseKind) -> bool {
    matches!(kind, CaseKind::Line(_) | CaseKind::A2 | CaseKind::A3 | CaseKind::A8 | CaseKind::A9)
}
