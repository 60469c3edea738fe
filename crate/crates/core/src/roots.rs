//! Positive roots of a Dynkin quiver and the dimension counts attached to
//! pairs of them.

use crate::dimvec::DimVec;
use crate::error::{Error, Result};
use crate::euler::EulerMatrix;
use crate::quiver::Quiver;
use std::collections::BTreeSet;

/// All positive roots, sorted lexicographically, with O(1) membership.
#[derive(Clone, Debug)]
pub struct RootSystem {
    roots: Vec<DimVec>,
    index: std::collections::HashMap<DimVec, usize>,
}

impl RootSystem {
    pub fn new(q: &Quiver) -> Result<Self> {
        let roots = roots_by_box_scan(q)?;
        let index = roots
            .iter()
            .enumerate()
            .map(|(k, r)| (r.clone(), k))
            .collect();
        Ok(RootSystem { roots, index })
    }

    pub fn roots(&self) -> &[DimVec] {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn contains(&self, d: &DimVec) -> bool {
        self.index.contains_key(d)
    }

    pub fn index_of(&self, d: &DimVec) -> Option<usize> {
        self.index.get(d).copied()
    }
}

/// Upper bound for each coordinate over all positive roots: 1 for type A,
/// 2 for type D, and the highest-root entries for type E. Used to keep the
/// scan box small.
fn coordinate_bounds(q: &Quiver) -> Vec<i64> {
    let mut bound = vec![0i64; q.vertex_count()];
    for t in q.dynkin_types() {
        use crate::quiver::Family;
        let per_position: Vec<i64> = match (t.family, t.rank) {
            (Family::A, r) => vec![1; r],
            (Family::D, r) => {
                // Highest root of D_n is (1, 2, ..., 2, 1, 1).
                let mut v = vec![2; r];
                v[0] = 1;
                v[r - 1] = 1;
                v[r - 2] = 1;
                v
            }
            (Family::E, 6) => vec![1, 2, 2, 3, 2, 1],
            (Family::E, 7) => vec![2, 2, 3, 4, 3, 2, 1],
            (Family::E, 8) => vec![2, 3, 4, 6, 5, 4, 3, 2],
            _ => unreachable!("validated Dynkin type"),
        };
        for (pos, &v) in t.vertices.iter().enumerate() {
            bound[v] = per_position[pos];
        }
    }
    bound
}

/// Positive roots by scanning the coordinate box under the highest root and
/// keeping the vectors of quadratic form one.
pub fn roots_by_box_scan(q: &Quiver) -> Result<Vec<DimVec>> {
    let n = q.vertex_count();
    let m = EulerMatrix::new(q);
    let bound = coordinate_bounds(q);
    let mut out = Vec::new();
    let mut cur = vec![0i64; n];
    loop {
        // Advance the odometer.
        let mut pos = 0;
        loop {
            if pos == n {
                out.sort();
                return Ok(out);
            }
            if cur[pos] < bound[pos] {
                cur[pos] += 1;
                break;
            }
            cur[pos] = 0;
            pos += 1;
        }
        let d = DimVec::new(cur.clone());
        if m.quadratic(&d) == 1 {
            out.push(d);
        }
    }
}

/// Positive roots by closing the simple roots under addition: a nonnegative
/// vector is a root iff its quadratic form is one, and every root is a sum
/// of a smaller root and a simple root. Independent of the box scan.
pub fn roots_by_closure(q: &Quiver) -> Result<Vec<DimVec>> {
    let n = q.vertex_count();
    let m = EulerMatrix::new(q);
    let mut found: BTreeSet<DimVec> = (0..n).map(|i| DimVec::unit(n, i)).collect();
    let mut frontier: Vec<DimVec> = found.iter().cloned().collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for r in &frontier {
            for i in 0..n {
                let cand = r.checked_add(&DimVec::unit(n, i))?;
                if m.quadratic(&cand) == 1 && found.insert(cand.clone()) {
                    next.push(cand);
                }
            }
        }
        frontier = next;
    }
    Ok(found.into_iter().collect())
}

/// dim Hom between the indecomposables at two positive roots: the Euler
/// form clamped at zero. Valid because Hom or Ext vanishes for any pair of
/// indecomposables over a Dynkin quiver.
pub fn hom_dim(m: &EulerMatrix, alpha: &DimVec, beta: &DimVec) -> i64 {
    m.form(alpha, beta).max(0)
}

/// dim Ext^1 between the indecomposables at two positive roots.
pub fn ext_dim(m: &EulerMatrix, alpha: &DimVec, beta: &DimVec) -> i64 {
    (-m.form(alpha, beta)).max(0)
}

/// The linear map M with <M d, e> = -<e, d> for all d, e. It sends the
/// dimension vector of a non-projective indecomposable to its inverse
/// Auslander-Reiten translate and describes how dimension vectors move
/// under the inverse Coxeter transformation.
#[derive(Clone, Debug)]
pub struct CoxeterMap {
    m: Vec<Vec<i64>>,
}

impl CoxeterMap {
    /// M = -P^T E with P = E^{-1}.
    pub fn inverse_coxeter(euler: &EulerMatrix) -> Self {
        let n = euler.size();
        let p = euler.inverse();
        let mut m = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = 0i64;
                for k in 0..n {
                    acc -= p[k][i] * euler.entry(k, j);
                }
                m[i][j] = acc;
            }
        }
        CoxeterMap { m }
    }

    pub fn apply(&self, d: &DimVec) -> DimVec {
        let n = self.m.len();
        let mut out = vec![0i64; n];
        for i in 0..n {
            for j in 0..n {
                out[i] += self.m[i][j] * d[j];
            }
        }
        DimVec::new(out)
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.m
    }
}

/// Closed-form count of positive roots for a connected Dynkin diagram.
pub fn expected_root_count(family: crate::quiver::Family, rank: usize) -> Result<usize> {
    use crate::quiver::Family;
    Ok(match (family, rank) {
        (Family::A, n) => n * (n + 1) / 2,
        (Family::D, n) => n * n - n,
        (Family::E, 6) => 36,
        (Family::E, 7) => 63,
        (Family::E, 8) => 120,
        (f, r) => {
            return Err(Error::Internal(format!(
                "no root count for {f}{r}"
            )))
        }
    })
}
