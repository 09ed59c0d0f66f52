//! Thin numeric helpers over nalgebra.

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};
use crate::tolerances::{RANK_AMBIGUITY_BAND, RANK_REL_TOL};

/// Singular values in descending order.
pub fn singular_values(m: &DMatrix<f64>) -> Vec<f64> {
    if m.nrows() == 0 || m.ncols() == 0 {
        return Vec::new();
    }
    let mut s: Vec<f64> = m.clone().svd(false, false).singular_values.iter().copied().collect();
    s.sort_by(|a, b| b.partial_cmp(a).unwrap());
    s
}

/// Numeric rank with threshold `rel_tol · σ_max`.
pub fn rank(m: &DMatrix<f64>, rel_tol: f64) -> usize {
    let s = singular_values(m);
    match s.first() {
        Some(&smax) if smax > 0.0 => s.iter().filter(|&&x| x > rel_tol * smax).count(),
        _ => 0,
    }
}

/// Rank that refuses to decide when a singular value sits inside the ambiguity band.
pub fn rank_checked(m: &DMatrix<f64>) -> Result<usize> {
    let s = singular_values(m);
    let smax = match s.first() {
        Some(&x) if x > 0.0 => x,
        _ => return Ok(0),
    };
    let (lo, hi) = RANK_AMBIGUITY_BAND;
    if let Some(&bad) = s.iter().find(|&&x| x > lo * smax && x < hi * smax) {
        return Err(Error::RankAmbiguity(bad / smax));
    }
    Ok(s.iter().filter(|&&x| x > RANK_REL_TOL * smax).count())
}

/// Orthonormal basis (as columns) of the null space of `m`.
pub fn null_space(m: &DMatrix<f64>) -> Result<DMatrix<f64>> {
    let n = m.ncols();
    let mut padded = DMatrix::zeros(m.nrows().max(n), n);
    padded.rows_mut(0, m.nrows()).copy_from(m);
    let r = rank_checked(&padded)?;
    let svd = padded.svd(false, true);
    let vt = svd.v_t.expect("requested V^T");
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| svd.singular_values[b].partial_cmp(&svd.singular_values[a]).unwrap());
    let cols: Vec<DVector<f64>> = order[r..].iter().map(|&k| vt.row(k).transpose()).collect();
    if cols.is_empty() {
        return Ok(DMatrix::zeros(n, 0));
    }
    Ok(DMatrix::from_columns(&cols))
}

/// Orthonormal basis of the column span of `m`.
pub fn column_space(m: &DMatrix<f64>) -> DMatrix<f64> {
    let r = rank(m, RANK_REL_TOL);
    if r == 0 {
        return DMatrix::zeros(m.nrows(), 0);
    }
    let svd = m.clone().svd(true, false);
    let u = svd.u.expect("requested U");
    let mut order: Vec<usize> = (0..svd.singular_values.len()).collect();
    order.sort_by(|&a, &b| svd.singular_values[b].partial_cmp(&svd.singular_values[a]).unwrap());
    let cols: Vec<DVector<f64>> = order[..r].iter().map(|&k| u.column(k).into_owned()).collect();
    DMatrix::from_columns(&cols)
}

/// Least-squares solution X of X·A = B.
pub fn solve_right(a: &DMatrix<f64>, b: &DMatrix<f64>) -> DMatrix<f64> {
    let at = a.transpose();
    let svd = at.svd(true, true);
    let x_t = svd.solve(&b.transpose(), 1e-13).expect("svd solve");
    x_t.transpose()
}

pub fn expm(a: &DMatrix<f64>) -> DMatrix<f64> {
    if a.nrows() == 0 {
        return a.clone();
    }
    a.exp()
}

pub fn skew_residual(a: &DMatrix<f64>) -> f64 {
    if a.nrows() == 0 {
        return 0.0;
    }
    (a + a.transpose()).amax()
}

pub fn orthogonality_residual(g: &DMatrix<f64>) -> f64 {
    if g.nrows() == 0 {
        return 0.0;
    }
    (g.transpose() * g - DMatrix::identity(g.nrows(), g.ncols())).amax()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn null_space_of_rank_one() {
        let m = DMatrix::from_row_slice(1, 3, &[1.0, 1.0, 0.0]);
        let ns = null_space(&m).unwrap();
        assert_eq!(ns.ncols(), 2);
        assert!((&m * &ns).amax() < 1e-12);
    }

    #[test]
    fn ambiguous_rank_is_reported() {
        let m = DMatrix::from_diagonal(&DVector::from_vec(vec![1.0, 1e-8]));
        assert!(matches!(rank_checked(&m), Err(Error::RankAmbiguity(_))));
        assert_eq!(rank(&m, 1e-6), 1);
    }

    #[test]
    fn expm_of_rotation_generator() {
        let a = DMatrix::from_row_slice(2, 2, &[0.0, -1.0, 1.0, 0.0]);
        let g = expm(&(a * std::f64::consts::FRAC_PI_2));
        assert!((g - DMatrix::from_row_slice(2, 2, &[0.0, -1.0, 1.0, 0.0])).amax() < 1e-14);
    }

    #[test]
    fn right_solve_recovers_matrix() {
        let x = DMatrix::from_row_slice(2, 2, &[1.0, 2.0, -1.0, 0.5]);
        let a = DMatrix::from_row_slice(2, 3, &[1.0, 0.0, 2.0, 0.0, 1.0, 1.0]);
        let b = &x * &a;
        assert!((solve_right(&a, &b) - x).amax() < 1e-12);
    }
}
