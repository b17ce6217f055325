//! Small exact linear algebra: fraction-free elimination and inertia.

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Signed, Zero};

use crate::scalar::ExactInt;

/// Leading principal minors of an integer matrix, via Bareiss elimination.
///
/// Stops after the first vanishing minor, which is still reported.
pub fn leading_minors<I: ExactInt>(m: &[Vec<I>]) -> Vec<I> {
    let n = m.len();
    let mut a: Vec<Vec<I>> = m.to_vec();
    let mut prev = I::one();
    let mut minors = Vec::with_capacity(n);
    for k in 0..n {
        let pivot = a[k][k].clone();
        minors.push(pivot.clone());
        if pivot.is_zero() {
            break;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = a[i][j].clone() * pivot.clone() - a[i][k].clone() * a[k][j].clone();
                a[i][j] = v.div_floor(&prev);
            }
        }
        prev = pivot;
    }
    minors
}

/// Outcome of a negative-definite solve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveError {
    /// The `k`-th leading minor (1-based) has the wrong sign.
    NotNegativeDefinite { index: usize },
}

/// Solve `A x = b` for a negative definite rational `A`.
///
/// Rows are cleared of denominators by positive scalings, which changes
/// neither the solution nor the signs of the leading minors; the integer
/// system is then eliminated fraction-free and back-substituted exactly.
pub fn solve_negative_definite<I: ExactInt>(a: &[Vec<Ratio<I>>], b: &[Ratio<I>]) -> Result<Vec<Ratio<I>>, SolveError> {
    let n = a.len();
    let mut m: Vec<Vec<I>> = Vec::with_capacity(n);
    for (row, rhs) in a.iter().zip(b) {
        let l = row
            .iter()
            .chain(std::iter::once(rhs))
            .fold(I::one(), |acc, x| acc.lcm(x.denom()));
        let scale = Ratio::from_integer(l);
        m.push(
            row.iter()
                .chain(std::iter::once(rhs))
                .map(|x| (x * &scale).to_integer())
                .collect(),
        );
    }
    let mut prev = I::one();
    for k in 0..n {
        let pivot = m[k][k].clone();
        let want_negative = k % 2 == 0;
        let ok = if want_negative {
            pivot.is_negative()
        } else {
            pivot.is_positive()
        };
        if !ok {
            return Err(SolveError::NotNegativeDefinite { index: k + 1 });
        }
        for i in k + 1..n {
            for j in k + 1..=n {
                let v = m[i][j].clone() * pivot.clone() - m[i][k].clone() * m[k][j].clone();
                m[i][j] = v.div_floor(&prev);
            }
            m[i][k] = I::zero();
        }
        prev = pivot;
    }
    let mut x = vec![Ratio::<I>::zero(); n];
    for i in (0..n).rev() {
        let mut acc = Ratio::from_integer(m[i][n].clone());
        for j in i + 1..n {
            acc = acc - Ratio::from_integer(m[i][j].clone()) * &x[j];
        }
        x[i] = acc / Ratio::from_integer(m[i][i].clone());
    }
    Ok(x)
}

/// Is the rational symmetric matrix negative definite.
pub fn is_negative_definite<I: ExactInt>(a: &[Vec<Ratio<I>>]) -> bool {
    let zeros = vec![Ratio::zero(); a.len()];
    solve_negative_definite(a, &zeros).is_ok()
}

/// `(positive, negative)` inertia of a symmetric integer matrix.
pub fn inertia(gram: &[Vec<i64>]) -> (usize, usize) {
    let n = gram.len();
    let mut a: Vec<Vec<BigRational>> = gram
        .iter()
        .map(|r| r.iter().map(|&x| Ratio::from_integer(BigInt::from(x))).collect())
        .collect();
    let (mut pos, mut neg) = (0, 0);
    for k in 0..n {
        if a[k][k].is_zero() {
            if let Some(j) = (k + 1..n).find(|&j| !a[j][j].is_zero()) {
                a.swap(k, j);
                for row in a.iter_mut() {
                    row.swap(k, j);
                }
            } else if let Some(j) = (k + 1..n).find(|&j| !a[k][j].is_zero()) {
                // congruence by e_k + e_j makes the diagonal 2·a[k][j]
                for c in 0..n {
                    let v = a[j][c].clone();
                    a[k][c] += v;
                }
                for r in 0..n {
                    let v = a[r][j].clone();
                    a[r][k] += v;
                }
            } else {
                continue;
            }
        }
        let p = a[k][k].clone();
        if p.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        for i in k + 1..n {
            let f = &a[i][k] / &p;
            if f.is_zero() {
                continue;
            }
            for j in k..n {
                let v = &f * &a[k][j];
                a[i][j] -= v;
            }
        }
        for i in k + 1..n {
            a[k][i] = BigRational::zero();
            a[i][k] = BigRational::zero();
        }
    }
    (pos, neg)
}

/// Determinant of a small integer matrix, for test oracles.
pub fn determinant(m: &[Vec<i64>]) -> BigInt {
    let big: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&x| x.into()).collect()).collect();
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    // Laplace-free: rational elimination with row swaps
    let mut a: Vec<Vec<BigRational>> = big
        .into_iter()
        .map(|r| r.into_iter().map(Ratio::from_integer).collect())
        .collect();
    let mut det = BigRational::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return BigInt::zero();
        };
        if p != k {
            a.swap(p, k);
            det = -det;
        }
        let piv = a[k][k].clone();
        det *= &piv;
        for i in k + 1..n {
            let f = &a[i][k] / &piv;
            for j in k..n {
                let v = &f * &a[k][j];
                a[i][j] -= v;
            }
        }
    }
    det.to_integer()
}
