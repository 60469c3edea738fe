//! Dimension vectors of subrepresentations and quotient representations of
//! an indecomposable, characterized numerically through the Euler form.

use crate::dimvec::DimVec;
use crate::error::{Error, Result};
use crate::euler::EulerMatrix;
use crate::roots::RootSystem;
use std::collections::HashMap;
use std::sync::{Arc, RwLock};

/// Sub and quotient dimension vectors of the indecomposable at one root.
/// Both lists are sorted, exclude zero, and contain the root itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubQuotSets {
    pub root: DimVec,
    pub subs: Vec<DimVec>,
    pub quots: Vec<DimVec>,
}

/// Computes the sub and quotient sets of the indecomposable at `alpha` by
/// scanning the box 0 <= e <= alpha.
///
/// e is a sub dimension vector iff <beta, e> <= max(<beta, alpha>, 0) for
/// every positive root beta; quotients satisfy the mirrored condition
/// <e, beta> <= max(<alpha, beta>, 0).
pub fn sub_quot_sets(
    euler: &EulerMatrix,
    roots: &RootSystem,
    alpha: &DimVec,
) -> Result<SubQuotSets> {
    if !roots.contains(alpha) {
        return Err(Error::NotARoot(alpha.clone()));
    }
    let n = euler.size();
    // Rows <beta, -> and columns <-, beta>, restricted to nothing: full
    // vectors, but evaluation below touches only the support of alpha.
    let beta_rows: Vec<Vec<i64>> = roots.roots().iter().map(|b| euler.row_form(b)).collect();
    let beta_cols: Vec<Vec<i64>> = roots.roots().iter().map(|b| euler.col_form(b)).collect();
    let sub_caps: Vec<i64> = roots
        .roots()
        .iter()
        .enumerate()
        .map(|(k, _)| {
            let v: i64 = (0..n).map(|j| beta_rows[k][j] * alpha[j]).sum();
            v.max(0)
        })
        .collect();
    let quot_caps: Vec<i64> = roots
        .roots()
        .iter()
        .enumerate()
        .map(|(k, _)| {
            let v: i64 = (0..n).map(|i| alpha[i] * beta_cols[k][i]).sum();
            v.max(0)
        })
        .collect();

    let support: Vec<usize> = alpha.support().collect();
    let mut subs = Vec::new();
    let mut quots = Vec::new();
    let mut cur = vec![0i64; n];
    loop {
        // Odometer over coordinates in the support of alpha.
        let mut pos = 0;
        loop {
            if pos == support.len() {
                subs.sort();
                quots.sort();
                return Ok(SubQuotSets {
                    root: alpha.clone(),
                    subs,
                    quots,
                });
            }
            let v = support[pos];
            if cur[v] < alpha[v] {
                cur[v] += 1;
                break;
            }
            cur[v] = 0;
            pos += 1;
        }
        let is_sub = (0..roots.len()).all(|k| {
            let val: i64 = support.iter().map(|&j| beta_rows[k][j] * cur[j]).sum();
            val <= sub_caps[k]
        });
        if is_sub {
            subs.push(DimVec::new(cur.clone()));
        }
        let is_quot = (0..roots.len()).all(|k| {
            let val: i64 = support.iter().map(|&i| cur[i] * beta_cols[k][i]).sum();
            val <= quot_caps[k]
        });
        if is_quot {
            quots.push(DimVec::new(cur.clone()));
        }
    }
}

/// Memoizes sub/quot sets per root index; the sets depend only on the
/// quiver, so one cache is shared across a whole computation.
pub struct SubQuotCache {
    map: RwLock<HashMap<usize, Arc<SubQuotSets>>>,
}

impl SubQuotCache {
    pub fn new() -> Self {
        SubQuotCache {
            map: RwLock::new(HashMap::new()),
        }
    }

    pub fn get(
        &self,
        euler: &EulerMatrix,
        roots: &RootSystem,
        alpha: &DimVec,
    ) -> Result<Arc<SubQuotSets>> {
        let key = roots
            .index_of(alpha)
            .ok_or_else(|| Error::NotARoot(alpha.clone()))?;
        if let Some(hit) = self.map.read().expect("cache lock").get(&key) {
            return Ok(Arc::clone(hit));
        }
        let computed = Arc::new(sub_quot_sets(euler, roots, alpha)?);
        let mut guard = self.map.write().expect("cache lock");
        // A racing writer may have inserted first; keep whichever is there.
        Ok(Arc::clone(
            guard.entry(key).or_insert_with(|| Arc::clone(&computed)),
        ))
    }
}

impl Default for SubQuotCache {
    fn default() -> Self {
        Self::new()
    }
}

/// dim Hom from the indecomposable at `alpha` into the rigid representation
/// of dimension vector `d`: the largest <f, d> over quotient dimension
/// vectors f of alpha, clamped at zero.
pub fn hom_root_to(
    euler: &EulerMatrix,
    roots: &RootSystem,
    cache: &SubQuotCache,
    alpha: &DimVec,
    d: &DimVec,
) -> Result<i64> {
    let sets = cache.get(euler, roots, alpha)?;
    let ed = euler.col_form(d);
    let best = sets
        .quots
        .iter()
        .map(|f| (0..euler.size()).map(|i| f[i] * ed[i]).sum::<i64>())
        .max()
        .unwrap_or(0);
    Ok(best.max(0))
}
