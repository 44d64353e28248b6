//! Exact Gaussian elimination over `ℚ`.

use alloc::vec::Vec;

use crate::rational::Rational;

pub(crate) type Row = Vec<Rational>;

pub(crate) fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = Rational::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += &(x * y);
        }
    }
    acc
}

/// Reduced row echelon form. Returns the non-zero rows and their pivot
/// columns; every pivot entry is 1 and pivot columns are zero elsewhere.
pub(crate) fn rref(mut rows: Vec<Row>, ncols: usize) -> (Vec<Row>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip().expect("non-zero pivot");
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in c..ncols {
                    if !rows[r][j].is_zero() {
                        let d = &f * &rows[r][j];
                        rows[i][j] -= &d;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    (rows, pivots)
}

pub(crate) fn rank(rows: Vec<Row>, ncols: usize) -> usize {
    rref(rows, ncols).1.len()
}

/// Basis of `{x : row·x = 0 for every row}`.
pub(crate) fn nullspace(rows: Vec<Row>, ncols: usize) -> Vec<Row> {
    let (reduced, pivots) = rref(rows, ncols);
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = alloc::vec![Rational::zero(); ncols];
        v[free] = Rational::one();
        for (row, &p) in reduced.iter().zip(&pivots) {
            v[p] = -&row[free];
        }
        basis.push(v);
    }
    basis
}

/// Subtracts the reduced rows from `v` so that `v` vanishes on every pivot
/// column; the result is zero iff `v` lies in the row span.
pub(crate) fn reduce_against(reduced: &[Row], pivots: &[usize], v: &mut Row) {
    for (row, &p) in reduced.iter().zip(pivots) {
        if v[p].is_zero() {
            continue;
        }
        let f = v[p].clone();
        for (x, r) in v.iter_mut().zip(row) {
            if !r.is_zero() {
                *x -= &(&f * r);
            }
        }
    }
}

pub(crate) fn determinant(mut m: Vec<Row>) -> Rational {
    let n = m.len();
    let mut det = Rational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return Rational::zero();
        };
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        det = &det * &m[c][c];
        let inv = m[c][c].recip().expect("non-zero pivot");
        for i in c + 1..n {
            if m[i][c].is_zero() {
                continue;
            }
            let f = &m[i][c] * &inv;
            for j in c..n {
                if !m[c][j].is_zero() {
                    let d = &f * &m[c][j];
                    m[i][j] -= &d;
                }
            }
        }
    }
    det
}

/// Coefficients `x` with `Σ x_i · vectors[i] = target`, if the vectors are
/// independent and the target lies in their span.
pub(crate) fn coordinates_in(vectors: &[Row], target: &[Rational]) -> Option<Row> {
    let k = vectors.len();
    let n = target.len();
    // Columns are the vectors, augmented with the target.
    let rows: Vec<Row> = (0..n)
        .map(|i| {
            let mut row: Row = vectors.iter().map(|v| v[i].clone()).collect();
            row.push(target[i].clone());
            row
        })
        .collect();
    let (reduced, pivots) = rref(rows, k + 1);
    if pivots.len() != k || pivots.contains(&k) {
        return None;
    }
    Some(reduced.iter().take(k).map(|row| row[k].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;
    use alloc::vec;

    fn ints(v: &[i64]) -> Row {
        v.iter().map(|&x| Rational::from_integer(x)).collect()
    }

    #[test]
    fn rank_of_dependent_rows() {
        let rows = vec![ints(&[1, 2, 3]), ints(&[2, 4, 6]), ints(&[0, 1, 1])];
        assert_eq!(rank(rows, 3), 2);
    }

    #[test]
    fn nullspace_is_orthogonal() {
        let rows = vec![ints(&[1, 2, 3]), ints(&[0, 1, 1])];
        let ns = nullspace(rows.clone(), 3);
        assert_eq!(ns.len(), 1);
        for r in &rows {
            assert!(dot(r, &ns[0]).is_zero());
        }
    }

    #[test]
    fn determinant_matches_cofactor_expansion() {
        let m = vec![ints(&[2, 0, 1]), ints(&[1, 3, 2]), ints(&[1, 1, 1])];
        // 2(3-2) - 0 + 1(1-3) = 0
        assert!(determinant(m).is_zero());
        let m = vec![ints(&[0, 1]), ints(&[1, 0])];
        assert_eq!(determinant(m), Rational::from_integer(-1));
    }

    #[test]
    fn coordinates_solve_exactly() {
        let vs = vec![ints(&[1, 1, 0]), ints(&[0, 1, 1])];
        let t = vec![q(1, 2), q(5, 6), q(1, 3)];
        let x = coordinates_in(&vs, &t).unwrap();
        assert_eq!(x, vec![q(1, 2), q(1, 3)]);
        assert!(coordinates_in(&vs, &ints(&[1, 0, 0])).is_none());
    }
}
