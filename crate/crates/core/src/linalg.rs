//! Dense numerical helpers: SVD-based rank, nullspaces, minimum-norm solves,
//! eigenvalue clustering and eigenspace extraction.

use nalgebra::{ComplexField, DMatrix, DVector};
use num_complex::Complex64;

/// Relative factor of the numerical rank threshold:
/// a singular value counts as zero when below `max(rows, cols) * sigma_max * RANK_REL_EPS`.
pub const RANK_REL_EPS: f64 = 1e-12;

/// Rank of a matrix together with the margins needed to reproduce the decision.
#[derive(Debug, Clone)]
pub struct RankInfo {
    pub rank: usize,
    /// Smallest singular value counted as nonzero, relative to the largest one.
    /// Infinite when the matrix is numerically zero.
    pub rel_margin: f64,
    pub sigma_max: f64,
}

fn rank_from_singular_values(nrows: usize, ncols: usize, sv: &[f64]) -> RankInfo {
    let sigma_max = sv.iter().cloned().fold(0.0_f64, f64::max);
    let tol = nrows.max(ncols) as f64 * sigma_max * RANK_REL_EPS;
    let rank = sv.iter().filter(|&&s| s > tol).count();
    let rel_margin = if rank == 0 || sigma_max == 0.0 {
        f64::INFINITY
    } else {
        let mut kept: Vec<f64> = sv.iter().cloned().filter(|&s| s > tol).collect();
        kept.sort_by(|a, b| a.partial_cmp(b).unwrap());
        kept[0] / sigma_max
    };
    RankInfo { rank, rel_margin, sigma_max }
}

/// Numerical rank via singular values with the scale-aware relative threshold.
pub fn rank_info<T>(m: &DMatrix<T>) -> RankInfo
where
    T: ComplexField<RealField = f64>,
{
    if m.is_empty() {
        return RankInfo { rank: 0, rel_margin: f64::INFINITY, sigma_max: 0.0 };
    }
    let sv = m.clone().singular_values();
    rank_from_singular_values(m.nrows(), m.ncols(), sv.as_slice())
}

/// Full SVD: pads short-and-wide matrices with zero rows so the returned
/// `v_t` is square and exposes the entire right singular basis.
fn full_svd<T>(m: &DMatrix<T>) -> (Vec<f64>, DMatrix<T>, DMatrix<T>)
where
    T: ComplexField<RealField = f64>,
{
    let (r, c) = m.shape();
    let padded = if r < c {
        let mut p = DMatrix::zeros(c, c);
        p.view_mut((0, 0), (r, c)).copy_from(m);
        p
    } else {
        m.clone()
    };
    let svd = padded.svd(true, true);
    let u = svd.u.expect("svd requested u");
    let v_t = svd.v_t.expect("svd requested v_t");
    let sv = svd.singular_values.as_slice().to_vec();
    // u refers to the padded matrix; callers using it must account for padding.
    (sv, u, v_t)
}

/// Orthonormal basis of the right nullspace, columns of the result.
pub fn nullspace<T>(m: &DMatrix<T>) -> DMatrix<T>
where
    T: ComplexField<RealField = f64>,
{
    let (r, c) = m.shape();
    let (sv, _, v_t) = full_svd(m);
    let info = rank_from_singular_values(r, c, &sv);
    let dim = c - info.rank;
    let mut basis = DMatrix::zeros(c, dim);
    for (k, row) in (info.rank..c).enumerate() {
        basis.set_column(k, &v_t.row(row).adjoint());
    }
    basis
}

/// Minimum-norm least-squares solution of `M x = b` plus the absolute residual.
pub fn min_norm_solve<T>(m: &DMatrix<T>, b: &DVector<T>) -> (DVector<T>, f64)
where
    T: ComplexField<RealField = f64>,
{
    let (r, c) = m.shape();
    assert_eq!(r, b.len(), "min_norm_solve shape");
    let (sv, u, v_t) = full_svd(m);
    let info = rank_from_singular_values(r, c, &sv);
    let tol = r.max(c) as f64 * info.sigma_max * RANK_REL_EPS;
    let mut b_pad = DVector::zeros(u.nrows());
    b_pad.rows_mut(0, r).copy_from(b);
    let mut x = DVector::zeros(c);
    for i in 0..sv.len().min(c) {
        if sv[i] > tol {
            let coeff = u.column(i).dotc(&b_pad) / T::from_real(sv[i]);
            x += v_t.row(i).adjoint() * coeff;
        }
    }
    let residual = (m * &x - b).norm();
    (x, residual)
}

/// Orthonormalizes a set of vectors (columns), dropping near-dependent ones.
pub fn orthonormal_columns(cols: &[DVector<f64>]) -> Vec<DVector<f64>> {
    if cols.is_empty() {
        return Vec::new();
    }
    let n = cols[0].len();
    let mut stack = DMatrix::zeros(n, cols.len());
    for (j, c) in cols.iter().enumerate() {
        stack.set_column(j, c);
    }
    let svd = stack.clone().svd(true, false);
    let info = rank_from_singular_values(n, cols.len(), svd.singular_values.as_slice());
    let u = svd.u.expect("svd requested u");
    (0..info.rank).map(|j| u.column(j).into_owned()).collect()
}

/// Greedy absolute-distance clustering of eigenvalues; returns (representative, count).
pub fn cluster_eigenvalues(eigs: &[Complex64], tol: f64) -> Vec<(Complex64, usize)> {
    let mut clusters: Vec<(Complex64, usize)> = Vec::new();
    let mut sorted: Vec<Complex64> = eigs.to_vec();
    sorted.sort_by(|a, b| {
        (a.re, a.im)
            .partial_cmp(&(b.re, b.im))
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    for &e in &sorted {
        match clusters.iter_mut().find(|(rep, _)| (e - *rep).norm() <= tol) {
            Some((rep, count)) => {
                // running mean keeps the representative centered
                *rep = (*rep * (*count as f64) + e) / (*count as f64 + 1.0);
                *count += 1;
            }
            None => clusters.push((e, 1)),
        }
    }
    clusters
}

/// Promotes a real matrix to complex entries.
pub fn complexify(m: &DMatrix<f64>) -> DMatrix<Complex64> {
    m.map(|x| Complex64::new(x, 0.0))
}

/// `m - lambda I` over the complex field.
pub fn shifted(m: &DMatrix<f64>, lambda: Complex64) -> DMatrix<Complex64> {
    let n = m.nrows();
    let mut s = complexify(m);
    for i in 0..n {
        s[(i, i)] -= lambda;
    }
    s
}

/// Orthonormal basis of the eigenspace of `m` at `lambda`.
pub fn eigenspace(m: &DMatrix<f64>, lambda: Complex64) -> DMatrix<Complex64> {
    nullspace(&shifted(m, lambda))
}

/// Largest singular value.
pub fn spectral_norm(m: &DMatrix<f64>) -> f64 {
    if m.is_empty() {
        return 0.0;
    }
    m.clone().singular_values().max()
}

/// Spectral radius (largest eigenvalue modulus).
pub fn spectral_radius(m: &DMatrix<f64>) -> f64 {
    if m.is_empty() {
        return 0.0;
    }
    m.complex_eigenvalues().iter().map(|e| e.norm()).fold(0.0, f64::max)
}

/// Largest real part over the spectrum.
pub fn spectral_abscissa(m: &DMatrix<f64>) -> f64 {
    m.complex_eigenvalues().iter().map(|e| e.re).fold(f64::NEG_INFINITY, f64::max)
}

/// Column-stacking of a matrix into a vector.
pub fn vec_of(m: &DMatrix<f64>) -> DVector<f64> {
    DVector::from_column_slice(m.as_slice())
}

/// Inverse of column-stacking.
pub fn unvec(v: &DVector<f64>, rows: usize, cols: usize) -> DMatrix<f64> {
    assert_eq!(v.len(), rows * cols, "unvec shape");
    DMatrix::from_column_slice(rows, cols, v.as_slice())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_of_rectangular() {
        let m = DMatrix::from_row_slice(2, 3, &[1.0, 0.0, 2.0, 0.0, 0.0, 0.0]);
        let info = rank_info(&m);
        assert_eq!(info.rank, 1);
        let z = DMatrix::<f64>::zeros(3, 2);
        assert_eq!(rank_info(&z).rank, 0);
    }

    #[test]
    fn nullspace_wide_matrix() {
        // row [1 1 1]: nullspace is 2-dimensional and orthonormal
        let m = DMatrix::from_row_slice(1, 3, &[1.0, 1.0, 1.0]);
        let ns = nullspace(&m);
        assert_eq!(ns.ncols(), 2);
        for j in 0..2 {
            assert!((m.clone() * ns.column(j)).norm() < 1e-12);
            assert!((ns.column(j).norm() - 1.0).abs() < 1e-12);
        }
        assert!(ns.column(0).dot(&ns.column(1).into_owned()).abs() < 1e-12);
    }

    #[test]
    fn min_norm_underdetermined() {
        // x1 + x2 = 2 has min-norm solution (1, 1)
        let m = DMatrix::from_row_slice(1, 2, &[1.0, 1.0]);
        let b = DVector::from_row_slice(&[2.0]);
        let (x, res) = min_norm_solve(&m, &b);
        assert!(res < 1e-12);
        assert!((x[0] - 1.0).abs() < 1e-12 && (x[1] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn min_norm_complex() {
        let i = Complex64::new(0.0, 1.0);
        let m = DMatrix::from_row_slice(2, 2, &[i, Complex64::from(1.0), Complex64::from(0.0), i]);
        let b = DVector::from_row_slice(&[Complex64::from(1.0), i]);
        let (x, res) = min_norm_solve(&m, &b);
        assert!(res < 1e-12, "residual {res}");
        assert!(((m * x) - b).norm() < 1e-12);
    }

    #[test]
    fn cluster_repeated() {
        let eigs = [
            Complex64::new(0.0, 1.0),
            Complex64::new(1e-10, 1.0),
            Complex64::new(0.0, -1.0),
        ];
        let clusters = cluster_eigenvalues(&eigs, 1e-8);
        assert_eq!(clusters.len(), 2);
        assert!(clusters.iter().any(|&(_, c)| c == 2));
    }

    #[test]
    fn eigenspace_of_rotation() {
        let a = DMatrix::from_row_slice(2, 2, &[0.0, 1.0, -1.0, 0.0]);
        let es = eigenspace(&a, Complex64::new(0.0, 1.0));
        assert_eq!(es.ncols(), 1);
        let av = complexify(&a) * es.column(0);
        let lv = es.column(0) * Complex64::new(0.0, 1.0);
        assert!((av - lv).norm() < 1e-12);
    }

    #[test]
    fn vec_unvec_roundtrip() {
        let m = DMatrix::from_row_slice(2, 3, &[1.0, 2.0, 3.0, 4.0, 5.0, 6.0]);
        let v = vec_of(&m);
        // column stacking: first column first
        assert_eq!(v.as_slice(), &[1.0, 4.0, 2.0, 5.0, 3.0, 6.0]);
        assert_eq!(unvec(&v, 2, 3), m);
    }
}
