//! Infinitesimal K-actions per case, built from matrix formulas on the charts.

use nalgebra::DMatrix;

use crate::composition_algebras::{ca_conj, ca_mul, AlgebraTag};
use crate::error::Result;
use crate::group_actions::{g2_basis, solve_center_action, spin7_basis, ActionElement, GroupElement};
use crate::matrix::Matrix;

use super::charts::*;
use super::ids::CaseKind;
use super::models::{bracket, dims};

type CM = Matrix<E<f64>>;

fn unit_c(k: usize) -> E<f64> {
    E::unit(AlgebraTag::C, k)
}

fn unit_h(k: usize) -> E<f64> {
    E::unit(AlgebraTag::H, k)
}

fn zero_mat(tag: AlgebraTag, n: usize) -> CM {
    Matrix::filled(n, n, E::zero(tag))
}

/// so_n basis E_ij − E_ji.
pub fn so_basis(n: usize) -> Vec<Matrix<f64>> {
    pairs(n)
        .into_iter()
        .map(|(i, j)| {
            let mut m = Matrix::filled(n, n, 0.0);
            m.set(i, j, -1.0);
            m.set(j, i, 1.0);
            m
        })
        .collect()
}

/// u_n (or su_n when `traceless`) as complex anti-Hermitian matrices.
pub fn u_basis(n: usize, traceless: bool) -> Vec<CM> {
    let mut out = Vec::new();
    if traceless {
        for k in 0..n.saturating_sub(1) {
            let mut m = zero_mat(AlgebraTag::C, n);
            m.set(k, k, unit_c(1));
            m.set(k + 1, k + 1, -unit_c(1));
            out.push(m);
        }
    } else {
        for k in 0..n {
            let mut m = zero_mat(AlgebraTag::C, n);
            m.set(k, k, unit_c(1));
            out.push(m);
        }
    }
    for (j, k) in pairs(n) {
        let mut m = zero_mat(AlgebraTag::C, n);
        m.set(j, k, unit_c(0));
        m.set(k, j, -unit_c(0));
        out.push(m);
        let mut m = zero_mat(AlgebraTag::C, n);
        m.set(j, k, unit_c(1));
        m.set(k, j, unit_c(1));
        out.push(m);
    }
    out
}

/// sp_n as quaternionic anti-Hermitian matrices.
pub fn sp_basis(n: usize) -> Vec<CM> {
    let mut out = Vec::new();
    for k in 0..n {
        for u in 1..4 {
            let mut m = zero_mat(AlgebraTag::H, n);
            m.set(k, k, unit_h(u));
            out.push(m);
        }
    }
    for (j, k) in pairs(n) {
        for u in 0..4 {
            let mut m = zero_mat(AlgebraTag::H, n);
            m.set(j, k, unit_h(u));
            m.set(k, j, -ca_conj(&unit_h(u)));
            out.push(m);
        }
    }
    out
}

/// sp_n ⊂ u_{2n} as complex matrices [[A, B], [−B̄, Ā]].
fn sp_complex_basis(n: usize) -> Vec<CM> {
    let block = |a: &CM, b: &CM| -> CM {
        Matrix::from_fn(2 * n, 2 * n, |i, j| match (i < n, j < n) {
            (true, true) => a.get(i, j).clone(),
            (true, false) => b.get(i, j - n).clone(),
            (false, true) => -ca_conj(b.get(i - n, j)),
            (false, false) => ca_conj(a.get(i - n, j - n)),
        })
    };
    let zero = zero_mat(AlgebraTag::C, n);
    let mut out: Vec<CM> = u_basis(n, false).iter().map(|a| block(a, &zero)).collect();
    let mut sym = Vec::new();
    for k in 0..n {
        for u in 0..2 {
            let mut b = zero_mat(AlgebraTag::C, n);
            b.set(k, k, unit_c(u));
            sym.push(b);
        }
    }
    for (j, k) in pairs(n) {
        for u in 0..2 {
            let mut b = zero_mat(AlgebraTag::C, n);
            b.set(j, k, unit_c(u));
            b.set(k, j, unit_c(u));
            sym.push(b);
        }
    }
    out.extend(sym.iter().map(|b| block(&zero, b)));
    out
}

fn im_h_units() -> Vec<E<f64>> {
    (1..4).map(unit_h).collect()
}

fn lmul(a: &E<f64>, b: &E<f64>) -> E<f64> {
    ca_mul(a, b).expect("same algebra")
}

fn act(
    kind: CaseKind,
    n: usize,
    f: impl Fn(&[f64], &[f64]) -> (Vec<f64>, Vec<f64>),
) -> ActionElement {
    let (dv, dz) = dims(kind, n);
    ActionElement::from_linear(dv, dz, f)
}

fn spin_on_pair(kind: CaseKind, n: usize, copies: usize) -> Vec<ActionElement> {
    let (dv, dz) = dims(kind, n);
    let br = |v: &[f64], u: &[f64]| bracket(kind, n, v, u).expect("bracket");
    spin7_basis()
        .into_iter()
        .map(|s| {
            let mut a_v = DMatrix::zeros(dv, dv);
            for c in 0..copies {
                a_v.view_mut((8 * c, 8 * c), (8, 8)).copy_from(&s);
            }
            let (a_z, _) = solve_center_action(&a_v, dz, &br);
            ActionElement { a_v, a_z }
        })
        .collect()
}

fn row_rotation(kind: CaseKind, n: usize, half: usize) -> ActionElement {
    act(kind, n, |v, z| {
        let mut out = vec![0.0; v.len()];
        for k in 0..half {
            out[k] = -v[half + k];
            out[half + k] = v[k];
        }
        (out, vec![0.0; z.len()])
    })
}

/// Sp₁ on the left of both quaternion rows and by conjugation on Im ℍ, plus
/// Sp_n on the right of the rows (v ↦ −vX).
fn rows_sp1_spn(kind: CaseKind, n: usize, zoff: usize) -> Vec<ActionElement> {
    let mut out = Vec::new();
    for q in im_h_units() {
        out.push(act(kind, n, |v, z| {
            let vm = Matrix::from_coords(AlgebraTag::H, 2, n, v);
            let dv = vm.map(|e| lmul(&q, e)).to_coords();
            let mut dz = vec![0.0; z.len()];
            let z0 = imaginary(AlgebraTag::H, &z[zoff..zoff + 3]);
            let c = lmul(&q, &z0) - lmul(&z0, &q);
            dz[zoff..zoff + 3].copy_from_slice(&im_coords(&c));
            (dv, dz)
        }));
    }
    for x in sp_basis(n) {
        out.push(act(kind, n, |v, z| {
            let vm = Matrix::from_coords(AlgebraTag::H, 2, n, v);
            (vm.mul(&x).neg().to_coords(), vec![0.0; z.len()])
        }));
    }
    out
}

pub fn lie_basis(kind: CaseKind, n: usize) -> Result<Vec<ActionElement>> {
    let out = match kind {
        CaseKind::A1So | CaseKind::A1O => so_basis(n)
            .into_iter()
            .map(|a| {
                act(kind, n, |v, z| {
                    let vm = Matrix::real_from_slice(n, 1, v);
                    let zm = so_matrix(n, z);
                    (a.mul(&vm).entries().to_vec(), so_coords(&a.commutator(&zm)))
                })
            })
            .collect(),
        CaseKind::A2 | CaseKind::Line(3) => spin_on_pair(kind, n, 1),
        CaseKind::A3 | CaseKind::Line(12) => g2_basis()?
            .into_iter()
            .map(|d| ActionElement { a_v: d.clone(), a_z: d })
            .collect(),
        CaseKind::A45U | CaseKind::A45Su => u_basis(n, kind == CaseKind::A45Su)
            .into_iter()
            .map(|x| {
                act(kind, n, |v, z| {
                    let vm = Matrix::from_coords(AlgebraTag::C, n, 1, v);
                    let zm = lambda2_matrix(n, z);
                    let dz = x.mul(&zm).add(&zm.mul(&x.transpose()));
                    (x.mul(&vm).to_coords(), lambda2_coords(&dz))
                })
            })
            .collect(),
        CaseKind::A6 => u_basis(n, false)
            .into_iter()
            .map(|x| {
                act(kind, n, |v, z| {
                    let vm = Matrix::from_coords(AlgebraTag::C, n, 1, v);
                    let zm = u_matrix(n, z);
                    (x.mul(&vm).to_coords(), u_coords(&x.commutator(&zm)))
                })
            })
            .collect(),
        CaseKind::A7Sp | CaseKind::A7USp => {
            let hd = hs0_dim(n);
            let mut out: Vec<ActionElement> = sp_basis(n)
                .into_iter()
                .map(|x| {
                    act(kind, n, |v, z| {
                        let vm = Matrix::from_coords(AlgebraTag::H, n, 1, v);
                        let zm = hs0_matrix(n, &z[..hd]);
                        let mut dz = hs0_coords(&x.commutator(&zm));
                        dz.extend([0.0; 3]);
                        (x.mul(&vm).to_coords(), dz)
                    })
                })
                .collect();
            if kind == CaseKind::A7USp {
                let qi = unit_h(1);
                out.push(act(kind, n, |v, z| {
                    let vm = Matrix::from_coords(AlgebraTag::H, n, 1, v);
                    let dv = vm.map(|e| lmul(e, &qi)).to_coords();
                    let w = imaginary(AlgebraTag::H, &z[hd..hd + 3]);
                    let mut dz = vec![0.0; hd];
                    dz.extend(im_coords(&(lmul(&qi, &w) - lmul(&w, &qi))));
                    (dv, dz)
                }));
            }
            out
        }
        CaseKind::A8 | CaseKind::Line(9) => {
            let mut out = vec![row_rotation(kind, n, 8)];
            out.extend(spin_on_pair(kind, n, 2));
            out
        }
        CaseKind::A9 | CaseKind::Line(2) => {
            let mut out = Vec::new();
            for q in im_h_units() {
                out.push(act(kind, n, |v, z| {
                    let vm = Matrix::from_coords(AlgebraTag::H, n, 1, v);
                    let dv = vm.map(|e| -lmul(e, &q)).to_coords();
                    let zq = imaginary(AlgebraTag::H, z);
                    (dv, im_coords(&(lmul(&q, &zq) - lmul(&zq, &q))))
                }));
            }
            for x in sp_basis(n) {
                out.push(act(kind, n, |v, z| {
                    let vm = Matrix::from_coords(AlgebraTag::H, n, 1, v);
                    (x.mul(&vm).to_coords(), vec![0.0; z.len()])
                }));
            }
            out
        }
        CaseKind::A10 => {
            let mut out: Vec<ActionElement> = sp_basis(2)
                .into_iter()
                .map(|x| {
                    act(kind, n, |v, z| {
                        let vm = Matrix::from_coords(AlgebraTag::H, 2, n, v);
                        let zm = sp2_matrix(z);
                        (x.mul(&vm).to_coords(), sp2_coords(&x.commutator(&zm)))
                    })
                })
                .collect();
            for y in sp_basis(n) {
                out.push(act(kind, n, |v, z| {
                    let vm = Matrix::from_coords(AlgebraTag::H, 2, n, v);
                    (vm.mul(&y).neg().to_coords(), vec![0.0; z.len()])
                }));
            }
            out
        }
        CaseKind::A11U | CaseKind::A11Su | CaseKind::A12 => {
            let quaternionic = kind == CaseKind::A12;
            let tag = if quaternionic { AlgebraTag::H } else { AlgebraTag::C };
            let mut out: Vec<ActionElement> = u_basis(2, kind == CaseKind::A11Su)
                .into_iter()
                .map(|x| {
                    let xv = if quaternionic { x.map(c_to_h) } else { x.clone() };
                    act(kind, n, move |v, z| {
                        let vm = Matrix::from_coords(tag, 2, n, v);
                        let zm = u_matrix(2, z);
                        (xv.mul(&vm).to_coords(), u_coords(&x.commutator(&zm)))
                    })
                })
                .collect();
            let right = if quaternionic { sp_basis(n) } else { u_basis(n, true) };
            for y in right {
                out.push(act(kind, n, |v, z| {
                    let vm = Matrix::from_coords(tag, 2, n, v);
                    (vm.mul(&y).neg().to_coords(), vec![0.0; z.len()])
                }));
            }
            out
        }
        CaseKind::A12Mod | CaseKind::Line(8) => {
            let zoff = if kind == CaseKind::A12Mod { 1 } else { 0 };
            let mut out = vec![row_rotation(kind, n, 4 * n)];
            out.extend(rows_sp1_spn(kind, n, zoff));
            out
        }
        CaseKind::Line(1) => {
            let mut out = vec![act(kind, n, |v, z| {
                let dv: Vec<f64> = (0..2 * n).flat_map(|k| [-v[2 * k + 1], v[2 * k]]).collect();
                (dv, vec![-2.0 * z[1], 2.0 * z[0]])
            })];
            for x in sp_complex_basis(n) {
                out.push(act(kind, n, |v, z| {
                    let vm = Matrix::from_coords(AlgebraTag::C, 2 * n, 1, v);
                    (x.mul(&vm).to_coords(), vec![0.0; z.len()])
                }));
            }
            out
        }
        CaseKind::Line(4) | CaseKind::Line(6) | CaseKind::Line(7) => {
            let p = match kind {
                CaseKind::Line(4) => 1,
                CaseKind::Line(6) => 2,
                _ => n,
            };
            let left = u_basis(2, kind == CaseKind::Line(7));
            let mut out: Vec<ActionElement> = left
                .into_iter()
                .map(|x| {
                    act(kind, n, |v, z| {
                        let vm = Matrix::from_coords(AlgebraTag::C, 2, p, v);
                        let zm = su2_matrix(z);
                        (x.mul(&vm).to_coords(), su2_coords(&x.commutator(&zm)))
                    })
                })
                .collect();
            if p > 1 {
                for y in u_basis(p, true) {
                    out.push(act(kind, n, |v, z| {
                        let vm = Matrix::from_coords(AlgebraTag::C, 2, p, v);
                        (vm.mul(&y).neg().to_coords(), vec![0.0; z.len()])
                    }));
                }
            }
            out
        }
        CaseKind::Line(5) => sp_basis(2)
            .into_iter()
            .map(|x| {
                act(kind, n, |v, z| {
                    let vm = Matrix::from_coords(AlgebraTag::H, 2, 1, v);
                    let zm = hs2_matrix(z);
                    (x.mul(&vm).to_coords(), hs2_coords(&x.commutator(&zm)))
                })
            })
            .collect(),
        CaseKind::Line(10) => so_basis(3)
            .into_iter()
            .map(|a| {
                act(kind, n, |v, z| {
                    let vm = Matrix::real_from_slice(3, 1, v);
                    let zm = Matrix::real_from_slice(3, 1, z);
                    (a.mul(&vm).entries().to_vec(), a.mul(&zm).entries().to_vec())
                })
            })
            .collect(),
        CaseKind::Line(11) => u_basis(3, true)
            .into_iter()
            .map(|x| {
                let xb = x.map(ca_conj);
                act(kind, n, move |v, z| {
                    let vm = Matrix::from_coords(AlgebraTag::C, 3, 1, v);
                    let zm = Matrix::from_coords(AlgebraTag::C, 3, 1, z);
                    (x.mul(&vm).to_coords(), xb.mul(&zm).to_coords())
                })
            })
            .collect(),
        CaseKind::Line(_) => unreachable!("table lines are 1..=12"),
    };
    Ok(out)
}

/// Fixed elements outside the identity component.
pub fn discrete_elements(kind: CaseKind, n: usize) -> Vec<GroupElement> {
    let (dv, dz) = dims(kind, n);
    let mk = |f: &dyn Fn(&[f64], &[f64]) -> (Vec<f64>, Vec<f64>)| {
        let a = ActionElement::from_linear(dv, dz, f);
        GroupElement { g_v: a.a_v, g_z: a.a_z }
    };
    match kind {
        CaseKind::A1O => {
            let mut g = Matrix::filled(n, n, 0.0);
            for k in 0..n {
                g.set(k, k, if k == 0 { -1.0 } else { 1.0 });
            }
            vec![mk(&|v, z| {
                let vm = Matrix::real_from_slice(n, 1, v);
                let zm = so_matrix(n, z);
                (g.mul(&vm).entries().to_vec(), so_coords(&g.mul(&zm).mul(&g.transpose())))
            })]
        }
        CaseKind::A45U => {
            let theta: f64 = 0.9;
            let mut g = zero_mat(AlgebraTag::C, n);
            for k in 0..n {
                g.set(k, k, if k == 0 { cx(theta.cos(), theta.sin()) } else { unit_c(0) });
            }
            vec![mk(&|v, z| {
                let vm = Matrix::from_coords(AlgebraTag::C, n, 1, v);
                let zm = lambda2_matrix(n, z);
                (g.mul(&vm).to_coords(), lambda2_coords(&g.mul(&zm).mul(&g.transpose())))
            })]
        }
        _ => Vec::new(),
    }
}

/// dim K from the standard formulas, for cross-checking basis lengths.
pub fn group_dimension(kind: CaseKind, n: usize) -> usize {
    let sp = |m: usize| m * (2 * m + 1);
    match kind {
        CaseKind::A1So | CaseKind::A1O => n * (n - 1) / 2,
        CaseKind::A2 | CaseKind::Line(3) => 21,
        CaseKind::A3 | CaseKind::Line(12) => 14,
        CaseKind::A45U | CaseKind::A6 => n * n,
        CaseKind::A45Su => n * n - 1,
        CaseKind::A7Sp => sp(n),
        CaseKind::A7USp => 1 + sp(n),
        CaseKind::A8 | CaseKind::Line(9) => 22,
        CaseKind::A9 | CaseKind::Line(2) => 3 + sp(n),
        CaseKind::A10 => 10 + sp(n),
        CaseKind::A11U => 4 + n * n - 1,
        CaseKind::A11Su => 3 + n * n - 1,
        CaseKind::A12 => 4 + sp(n),
        CaseKind::A12Mod | CaseKind::Line(8) => 1 + 3 + sp(n),
        CaseKind::Line(1) => 1 + sp(n),
        CaseKind::Line(4) => 4,
        CaseKind::Line(5) => 10,
        CaseKind::Line(6) => 4 + 3,
        CaseKind::Line(7) => 3 + n * n - 1,
        CaseKind::Line(10) => 3,
        CaseKind::Line(11) => 8,
        CaseKind::Line(_) => 0,
    }
}
