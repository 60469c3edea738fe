//! Euler form of a quiver and the matrix identities built on it.

use crate::dimvec::DimVec;
use crate::error::{Error, Result};
use crate::quiver::Quiver;

/// <d, e> = sum_i d_i e_i - sum_{a: i -> j} d_i e_j, with overflow checked.
pub fn euler_form(q: &Quiver, d: &DimVec, e: &DimVec) -> Result<i64> {
    let n = q.vertex_count();
    debug_assert_eq!(d.len(), n);
    debug_assert_eq!(e.len(), n);
    let mut acc: i64 = 0;
    for i in 0..n {
        let term = d[i].checked_mul(e[i]).ok_or(Error::Overflow)?;
        acc = acc.checked_add(term).ok_or(Error::Overflow)?;
    }
    for a in q.arrows() {
        let term = d[a.tail].checked_mul(e[a.head]).ok_or(Error::Overflow)?;
        acc = acc.checked_sub(term).ok_or(Error::Overflow)?;
    }
    Ok(acc)
}

/// The matrix E with <d, e> = d^T E e: identity minus arrow counts.
#[derive(Clone, Debug)]
pub struct EulerMatrix {
    n: usize,
    /// e[i][j], row-major.
    e: Vec<Vec<i64>>,
}

impl EulerMatrix {
    pub fn new(q: &Quiver) -> Self {
        let n = q.vertex_count();
        let mut e = vec![vec![0i64; n]; n];
        for i in 0..n {
            e[i][i] = 1;
        }
        for a in q.arrows() {
            e[a.tail][a.head] -= 1;
        }
        EulerMatrix { n, e }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.e[i][j]
    }

    /// <d, e> evaluated through the stored matrix. Entries stay within i64
    /// for validated dimension vectors, so plain arithmetic suffices here.
    pub fn form(&self, d: &DimVec, e: &DimVec) -> i64 {
        let mut acc = 0i64;
        for i in 0..self.n {
            if d[i] == 0 {
                continue;
            }
            let mut row = 0i64;
            for j in 0..self.n {
                row += self.e[i][j] * e[j];
            }
            acc += d[i] * row;
        }
        acc
    }

    /// Row vector d^T E, for evaluating many <d, -> against a fixed d.
    pub fn row_form(&self, d: &DimVec) -> Vec<i64> {
        let mut out = vec![0i64; self.n];
        for j in 0..self.n {
            for i in 0..self.n {
                out[j] += d[i] * self.e[i][j];
            }
        }
        out
    }

    /// Column vector E e, for evaluating many <-, e> against a fixed e.
    pub fn col_form(&self, e: &DimVec) -> Vec<i64> {
        let mut out = vec![0i64; self.n];
        for i in 0..self.n {
            for j in 0..self.n {
                out[i] += self.e[i][j] * e[j];
            }
        }
        out
    }

    pub fn quadratic(&self, d: &DimVec) -> i64 {
        self.form(d, d)
    }

    /// Determinant by fraction-free elimination over i128; the matrix is
    /// unitriangular under a topological order, so this is always +1, and
    /// the computation doubles as a sanity check.
    pub fn det(&self) -> i64 {
        let n = self.n;
        if n == 0 {
            return 1;
        }
        let mut m: Vec<Vec<i128>> = self
            .e
            .iter()
            .map(|row| row.iter().map(|&x| x as i128).collect())
            .collect();
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..n - 1 {
            if m[k][k] == 0 {
                let swap = (k + 1..n).find(|&r| m[r][k] != 0);
                match swap {
                    Some(r) => {
                        m.swap(k, r);
                        sign = -sign;
                    }
                    None => return 0,
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
                }
                m[i][k] = 0;
            }
            prev = m[k][k];
        }
        (sign * m[n - 1][n - 1]) as i64
    }

    /// E^{-1} = I + A + A^2 + ... where A holds arrow counts; A is
    /// nilpotent because the quiver is acyclic, and the (i, j) entry of the
    /// sum counts paths from i to j.
    pub fn inverse(&self) -> Vec<Vec<i64>> {
        let n = self.n;
        // A = I - E.
        let a: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { 0 } else { -self.e[i][j] })
                    .collect()
            })
            .collect();
        let mut sum: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
        let mut power = a.clone();
        for _ in 0..n {
            let mut nonzero = false;
            for i in 0..n {
                for j in 0..n {
                    if power[i][j] != 0 {
                        sum[i][j] += power[i][j];
                        nonzero = true;
                    }
                }
            }
            if !nonzero {
                break;
            }
            let mut next = vec![vec![0i64; n]; n];
            for i in 0..n {
                for k in 0..n {
                    if power[i][k] == 0 {
                        continue;
                    }
                    for j in 0..n {
                        next[i][j] += power[i][k] * a[k][j];
                    }
                }
            }
            power = next;
        }
        sum
    }
}
