//! Smith and Hermite normal forms of integer matrices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type IntMatrix = Vec<Vec<BigInt>>;

/// `left * input * right == diagonal`, with `left` and `right` unimodular and
/// each diagonal entry dividing the next.
#[derive(Debug, Clone)]
pub struct SmithForm {
    pub diagonal: Vec<BigInt>,
    pub left: IntMatrix,
    pub right: IntMatrix,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.diagonal.iter().filter(|d| !d.is_zero()).count()
    }
}

pub fn identity(n: usize) -> IntMatrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect()
}

pub fn mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).map(|k| &row[k] * &b[k][j]).sum())
                .collect()
        })
        .collect()
}

/// Deterministic Smith normal form. The pivot at each step is the entry of
/// smallest nonzero absolute value in the remaining block, ties broken by
/// row-major position.
pub fn smith_normal_form(input: &IntMatrix) -> SmithForm {
    let rows = input.len();
    let cols = input.first().map_or(0, Vec::len);
    let mut a = input.clone();
    let mut left = identity(rows);
    let mut right = identity(cols);

    for t in 0..rows.min(cols) {
        loop {
            let Some((pi, pj)) = smallest_entry(&a, t) else {
                return finish(a, left, right);
            };
            a.swap(t, pi);
            left.swap(t, pi);
            swap_cols(&mut a, t, pj);
            swap_cols(&mut right, t, pj);

            let mut clean = true;
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = &a[i][t] / &a[t][t];
                sub_row(&mut a, i, t, &q);
                sub_row(&mut left, i, t, &q);
                clean &= a[i][t].is_zero();
            }
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = &a[t][j] / &a[t][t];
                sub_col(&mut a, j, t, &q);
                sub_col(&mut right, j, t, &q);
                clean &= a[t][j].is_zero();
            }
            if !clean {
                continue;
            }
            // divisibility of the remaining block by the pivot
            let bad_row = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a[i][j].is_multiple_of(&a[t][t])));
            match bad_row {
                Some(i) => {
                    add_row(&mut a, t, i);
                    add_row(&mut left, t, i);
                }
                None => break,
            }
        }
        if a[t][t].is_negative() {
            for x in a[t].iter_mut() {
                *x = -&*x;
            }
            for x in left[t].iter_mut() {
                *x = -&*x;
            }
        }
    }
    finish(a, left, right)
}

fn finish(a: IntMatrix, left: IntMatrix, right: IntMatrix) -> SmithForm {
    let k = a.len().min(a.first().map_or(0, Vec::len));
    SmithForm {
        diagonal: (0..k).map(|i| a[i][i].clone()).collect(),
        left,
        right,
    }
}

fn smallest_entry(a: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, BigInt)> = None;
    for (i, row) in a.iter().enumerate().skip(t) {
        for (j, x) in row.iter().enumerate().skip(t) {
            if x.is_zero() {
                continue;
            }
            let ax = x.abs();
            if best.as_ref().is_none_or(|(_, _, b)| ax < *b) {
                best = Some((i, j, ax));
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

fn swap_cols(m: &mut IntMatrix, a: usize, b: usize) {
    if a != b {
        for row in m.iter_mut() {
            row.swap(a, b);
        }
    }
}

/// row[i] -= q * row[t]
fn sub_row(m: &mut IntMatrix, i: usize, t: usize, q: &BigInt) {
    let src = m[t].clone();
    for (x, s) in m[i].iter_mut().zip(src) {
        *x -= q * s;
    }
}

/// row[t] += row[i]
fn add_row(m: &mut IntMatrix, t: usize, i: usize) {
    let src = m[i].clone();
    for (x, s) in m[t].iter_mut().zip(src) {
        *x += s;
    }
}

/// col[j] -= q * col[t]
fn sub_col(m: &mut IntMatrix, j: usize, t: usize, q: &BigInt) {
    for row in m.iter_mut() {
        let v = q * &row[t];
        row[j] -= v;
    }
}

/// Row-style Hermite normal form: `u * m` is in reduced row echelon form over
/// the integers, pivots positive, entries above each pivot in `[0, pivot)`.
/// Zero rows are dropped. Returns the nonzero rows only.
pub fn hermite_normal_form(m: &IntMatrix) -> IntMatrix {
    let mut a = m.clone();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        // Euclid down column c among rows r..
        loop {
            let pivot = (r..rows)
                .filter(|&i| !a[i][c].is_zero())
                .min_by(|&i, &j| a[i][c].abs().cmp(&a[j][c].abs()).then(i.cmp(&j)));
            let Some(p) = pivot else { break };
            a.swap(r, p);
            let mut done = true;
            for i in r + 1..rows {
                if !a[i][c].is_zero() {
                    let q = &a[i][c] / &a[r][c];
                    sub_row(&mut a, i, r, &q);
                    done &= a[i][c].is_zero();
                }
            }
            if done {
                break;
            }
        }
        if a.get(r).is_none_or(|row| row[c].is_zero()) {
            continue;
        }
        if a[r][c].is_negative() {
            for x in a[r].iter_mut() {
                *x = -&*x;
            }
        }
        for i in 0..r {
            let q = a[i][c].div_floor(&a[r][c]);
            if !q.is_zero() {
                sub_row(&mut a, i, r, &q);
            }
        }
        r += 1;
    }
    a.truncate(r);
    a
}
