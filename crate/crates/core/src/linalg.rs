//! Small exact linear-algebra helpers over `BigInt` / `BigRational`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Determinant of a square integer matrix by fraction-free (Bareiss) elimination.
pub fn det(rows: &[Vec<BigInt>]) -> BigInt {
    let n = rows.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut m: Vec<Vec<BigInt>> = rows.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Rank of a rational matrix.
pub fn rank(rows: &[Vec<BigRational>]) -> usize {
    row_echelon(rows.to_vec()).1.len()
}

/// Reduced row echelon form; returns the matrix and its pivot columns.
pub fn row_echelon(mut m: Vec<Vec<BigRational>>) -> (Vec<Vec<BigRational>>, Vec<usize>) {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let v = &m[r][j] * &f;
                    m[i][j] -= v;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (m, pivots)
}

/// Inverse of a square rational matrix, or `None` if singular.
pub fn inverse(a: &[Vec<BigRational>]) -> Option<Vec<Vec<BigRational>>> {
    let n = a.len();
    let aug: Vec<Vec<BigRational>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| {
                if i == j {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
            }));
            r
        })
        .collect();
    let (red, pivots) = row_echelon(aug);
    if pivots.len() < n || pivots[n - 1] >= n {
        return None;
    }
    Some(red.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Solve `a x = b` for a square nonsingular `a`.
pub fn solve(a: &[Vec<BigRational>], b: &[BigRational]) -> Option<Vec<BigRational>> {
    let inv = inverse(a)?;
    Some(
        inv.iter()
            .map(|row| row.iter().zip(b).map(|(x, y)| x * y).sum())
            .collect(),
    )
}

pub fn to_rational(m: &[Vec<BigInt>]) -> Vec<Vec<BigRational>> {
    m.iter()
        .map(|r| r.iter().cloned().map(BigRational::from_integer).collect())
        .collect()
}

pub fn from_i64(m: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    m.iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect()
}

pub fn transpose<T: Clone>(m: &[Vec<T>]) -> Vec<Vec<T>> {
    let cols = m.first().map_or(0, Vec::len);
    (0..cols)
        .map(|j| m.iter().map(|r| r[j].clone()).collect())
        .collect()
}

/// Integer version of a rational matrix, if every entry is integral.
pub fn to_integer(m: &[Vec<BigRational>]) -> Option<Vec<Vec<BigInt>>> {
    m.iter()
        .map(|r| r.iter().map(|x| x.is_integer().then(|| x.to_integer())).collect())
        .collect()
}

pub fn is_unimodular(m: &[Vec<BigInt>]) -> bool {
    det(m).abs().is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(m: &[&[i64]]) -> Vec<Vec<BigInt>> {
        from_i64(&m.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
    }

    #[test]
    fn bareiss_matches_cofactor_expansion() {
        let m = int(&[&[2, -1, 0], &[1, 3, 4], &[0, 5, -2]]);
        // 2(3*-2 - 4*5) - (-1)(1*-2 - 0) + 0 = -52 - 2
        assert_eq!(det(&m), BigInt::from(-54));
        assert_eq!(det(&int(&[&[0, 1], &[1, 0]])), BigInt::from(-1));
        assert_eq!(det(&int(&[&[1, 2], &[2, 4]])), BigInt::zero());
    }

    #[test]
    fn inverse_round_trips() {
        let m = to_rational(&int(&[
            &[1, 0, 0, 0],
            &[0, 1, 0, 0],
            &[0, 0, 1, 0],
            &[-1, -1, -1, 3],
        ]));
        let inv = inverse(&m).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                let v: BigRational = (0..4).map(|k| &m[i][k] * &inv[k][j]).sum();
                assert_eq!(v, BigRational::from_integer(BigInt::from((i == j) as i64)));
            }
        }
        assert!(inverse(&to_rational(&int(&[&[1, 2], &[2, 4]]))).is_none());
    }
}
