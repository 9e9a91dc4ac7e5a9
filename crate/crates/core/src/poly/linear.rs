//! Dense linear algebra over a [`Field`], sized for coordinate changes and small echelon forms.

use super::field::Field;

pub type Matrix<F> = Vec<Vec<F>>;

/// Reduced row echelon form in place. Returns the pivot column of each nonzero row;
/// zero rows are removed.
pub fn row_reduce<F: Field>(rows: &mut Matrix<F>) -> Vec<usize> {
    let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(found) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, found);
        let inv = rows[r][col].inverse().expect("nonzero pivot");
        for x in rows[r].iter_mut() {
            *x = x.times(&inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x = x.minus(&factor.times(p));
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

pub fn rank<F: Field>(m: &[Vec<F>]) -> usize {
    let mut rows = m.to_vec();
    row_reduce(&mut rows).len()
}

/// Gauss-Jordan inverse; `None` for singular or non-square input.
pub fn invert<F: Field>(m: &[Vec<F>]) -> Option<Matrix<F>> {
    let n = m.len();
    if n == 0 {
        return Some(Vec::new());
    }
    if m.iter().any(|row| row.len() != n) {
        return None;
    }
    let zero = m[0][0].zero_like();
    let one = zero.one_like();
    let mut aug: Matrix<F> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { one.clone() } else { zero.clone() }));
            r
        })
        .collect();
    let pivots = row_reduce(&mut aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Basis of `{x : m·x = 0}`; `ncols` is needed when `m` has no rows.
pub fn nullspace<F: Field>(m: &[Vec<F>], ncols: usize, zero: &F) -> Matrix<F> {
    let mut rows = m.to_vec();
    let pivots = row_reduce(&mut rows);
    let one = zero.one_like();
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![zero.clone(); ncols];
        v[free] = one.clone();
        for (row, &pc) in rows.iter().zip(&pivots) {
            v[pc] = row[free].negated();
        }
        basis.push(v);
    }
    basis
}

/// One solution of `m·x = b`, or `None` when inconsistent.
pub fn solve_particular<F: Field>(m: &[Vec<F>], b: &[F], ncols: usize, zero: &F) -> Option<Vec<F>> {
    let mut aug: Matrix<F> = m
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = row_reduce(&mut aug);
    if pivots.last() == Some(&ncols) {
        return None;
    }
    let mut x = vec![zero.clone(); ncols];
    for (row, &pc) in aug.iter().zip(&pivots) {
        x[pc] = row[ncols].clone();
    }
    Some(x)
}

pub fn mat_vec<F: Field>(m: &[Vec<F>], v: &[F]) -> Vec<F> {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(v[0].zero_like(), |acc, (a, b)| acc.plus(&a.times(b)))
        })
        .collect()
}

pub fn identity<F: Field>(n: usize, zero: &F) -> Matrix<F> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { zero.one_like() } else { zero.clone() })
                .collect()
        })
        .collect()
}
