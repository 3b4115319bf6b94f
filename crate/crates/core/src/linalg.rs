//! Small dense linear-algebra helpers on top of `nalgebra`.

use nalgebra::{DMatrix, DVector, SymmetricEigen};

/// Numeric rank of the matrix whose rows are `rows`, counting singular values
/// above `rel * sigma_max`.
pub fn numeric_rank(rows: &[Vec<f64>], rel: f64) -> (usize, Vec<f64>) {
    if rows.is_empty() {
        return (0, Vec::new());
    }
    let ncols = rows[0].len();
    let m = DMatrix::from_fn(rows.len(), ncols, |i, j| rows[i][j]);
    let mut sv: Vec<f64> = m.singular_values().iter().copied().collect();
    sv.sort_by(|a, b| b.total_cmp(a));
    let max = sv.first().copied().unwrap_or(0.0);
    if max == 0.0 {
        return (0, sv);
    }
    let rank = sv.iter().filter(|s| **s > rel * max).count();
    (rank, sv)
}

/// Minimum-norm least-squares solution of `a x = b`.
pub fn least_squares(a: &DMatrix<f64>, b: &DVector<f64>) -> DVector<f64> {
    let svd = a.clone().svd(true, true);
    let max = svd.singular_values.max();
    let eps = (max * 1e-12).max(f64::MIN_POSITIVE);
    svd.solve(b, eps).expect("u and v were computed")
}

/// Eigenvalues (descending) with matching column eigenvectors of a symmetric
/// matrix.
pub fn symmetric_eigen(m: DMatrix<f64>) -> Vec<(f64, DVector<f64>)> {
    let eig = SymmetricEigen::new(m);
    let mut pairs: Vec<(f64, DVector<f64>)> = eig
        .eigenvalues
        .iter()
        .enumerate()
        .map(|(i, v)| (*v, eig.eigenvectors.column(i).into_owned()))
        .collect();
    pairs.sort_by(|a, b| b.0.total_cmp(&a.0));
    pairs
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_of_dependent_rows() {
        let rows = vec![vec![1.0, 2.0, 3.0], vec![2.0, 4.0, 6.0], vec![0.0, 1.0, 0.0]];
        assert_eq!(numeric_rank(&rows, 1e-10).0, 2);
        assert_eq!(numeric_rank(&[], 1e-10).0, 0);
    }

    #[test]
    fn least_squares_exact_system() {
        let a = DMatrix::from_row_slice(2, 2, &[2.0, 0.0, 0.0, 4.0]);
        let x = least_squares(&a, &DVector::from_vec(vec![2.0, 2.0]));
        assert!((x[0] - 1.0).abs() < 1e-14 && (x[1] - 0.5).abs() < 1e-14);
    }
}
