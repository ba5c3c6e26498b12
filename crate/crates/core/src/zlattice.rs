//! Integer linear algebra: column Hermite form, integral kernels and solving
//! `A·x = b` over the integers.

use crate::matrix::Matrix;

pub type IntMatrix = Matrix<i64>;

/// Column echelon form `H = A·U` with `U` unimodular, plus the pivot row of
/// each nonzero column of `H`. Nonzero columns of `H` come first.
pub struct ColumnHermite {
    pub h: IntMatrix,
    pub u: IntMatrix,
    pub pivot_rows: Vec<usize>,
}

impl ColumnHermite {
    pub fn rank(&self) -> usize {
        self.pivot_rows.len()
    }
}

pub fn column_hermite(a: &IntMatrix) -> ColumnHermite {
    let (m, n) = (a.rows(), a.cols());
    let mut h: Vec<Vec<i128>> = (0..n).map(|j| (0..m).map(|i| a[(i, j)] as i128).collect()).collect();
    let mut u: Vec<Vec<i128>> = (0..n)
        .map(|j| (0..n).map(|i| i128::from(i == j)).collect())
        .collect();
    let mut pivot_rows = Vec::new();
    let mut k = 0;
    for row in 0..m {
        if k == n {
            break;
        }
        loop {
            // smallest nonzero entry in this row among columns k..n moves to k
            let Some(best) = (k..n)
                .filter(|&j| h[j][row] != 0)
                .min_by_key(|&j| h[j][row].abs())
            else {
                break;
            };
            h.swap(k, best);
            u.swap(k, best);
            let mut done = true;
            for j in k + 1..n {
                if h[j][row] == 0 {
                    continue;
                }
                let q = h[j][row].div_euclid(h[k][row]);
                for i in 0..m {
                    h[j][i] -= q * h[k][i];
                }
                for i in 0..n {
                    u[j][i] -= q * u[k][i];
                }
                if h[j][row] != 0 {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h[k][row] != 0 {
            if h[k][row] < 0 {
                for x in h[k].iter_mut() {
                    *x = -*x;
                }
                for x in u[k].iter_mut() {
                    *x = -*x;
                }
            }
            pivot_rows.push(row);
            k += 1;
        }
    }
    let narrow = |x: i128| i64::try_from(x).expect("integer overflow in Hermite reduction");
    ColumnHermite {
        h: Matrix::from_fn(m, n, |i, j| narrow(h[j][i])),
        u: Matrix::from_fn(n, n, |i, j| narrow(u[j][i])),
        pivot_rows,
    }
}

/// A basis of the integral kernel `{x ∈ Zⁿ : A·x = 0}`; it is saturated.
pub fn integer_kernel(a: &IntMatrix) -> Vec<Vec<i64>> {
    let ch = column_hermite(a);
    (ch.rank()..a.cols()).map(|j| ch.u.column(j)).collect()
}

/// A basis of the column span of `A`.
pub fn image_basis(a: &IntMatrix) -> Vec<Vec<i64>> {
    let ch = column_hermite(a);
    (0..ch.rank()).map(|j| ch.h.column(j)).collect()
}

/// An integer solution of `A·x = b`, if one exists.
pub fn solve_integer(a: &IntMatrix, b: &[i64]) -> Option<Vec<i64>> {
    assert_eq!(b.len(), a.rows());
    let ch = column_hermite(a);
    let mut residual: Vec<i128> = b.iter().map(|&x| x as i128).collect();
    let mut z = vec![0i128; a.cols()];
    for (j, &row) in ch.pivot_rows.iter().enumerate() {
        let piv = ch.h[(row, j)] as i128;
        if residual[row] % piv != 0 {
            return None;
        }
        z[j] = residual[row] / piv;
        for (i, r) in residual.iter_mut().enumerate() {
            *r -= z[j] * ch.h[(i, j)] as i128;
        }
    }
    if residual.iter().any(|&r| r != 0) {
        return None;
    }
    let x = (0..a.cols())
        .map(|i| {
            let v: i128 = (0..a.cols()).map(|j| ch.u[(i, j)] as i128 * z[j]).sum();
            i64::try_from(v).expect("solution overflows i64")
        })
        .collect();
    Some(x)
}

/// Absolute determinant of a square integer matrix (via Hermite form).
pub fn abs_det(a: &IntMatrix) -> u64 {
    assert_eq!(a.rows(), a.cols());
    let ch = column_hermite(a);
    if ch.rank() < a.rows() {
        return 0;
    }
    (0..a.rows()).map(|j| ch.h[(ch.pivot_rows[j], j)].unsigned_abs()).product()
}

/// Matrix with the given vectors as columns.
pub fn from_columns(cols: &[Vec<i64>], rows: usize) -> IntMatrix {
    Matrix::from_fn(rows, cols.len(), |i, j| cols[j][i])
}
