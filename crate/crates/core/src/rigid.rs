//! Decomposition of the rigid representation at a dimension vector into
//! indecomposables, plus an exhaustive search oracle for small inputs.

use crate::dimvec::DimVec;
use crate::error::{Error, Result};
use crate::euler::EulerMatrix;
use crate::roots::{ext_dim, RootSystem};
use crate::subquot::SubQuotCache;
use std::collections::BTreeMap;

/// Multiplicity of each indecomposable summand, keyed by its dimension
/// vector. Only nonzero entries are stored.
pub type MultiplicityFunction = BTreeMap<DimVec, i64>;

/// The minimum over sub and quotient dimension vectors that the
/// multiplicity formula clamps at zero: for each positive root alpha,
/// min over e in subs(alpha) of <e, d> and over f in quots(alpha) of
/// <d, f>. Exposed unclamped so a fault hook can skip the clamp.
pub fn rigid_raw_minima(
    euler: &EulerMatrix,
    roots: &RootSystem,
    cache: &SubQuotCache,
    d: &DimVec,
) -> Result<Vec<(DimVec, i64)>> {
    let n = euler.size();
    d.validate_for(n)?;
    let ed = euler.col_form(d);
    let de = euler.row_form(d);
    let mut out = Vec::with_capacity(roots.len());
    for alpha in roots.roots() {
        let sets = cache.get(euler, roots, alpha)?;
        let sub_min = sets
            .subs
            .iter()
            .map(|e| (0..n).map(|i| e[i] * ed[i]).sum::<i64>())
            .min();
        let quot_min = sets
            .quots
            .iter()
            .map(|f| (0..n).map(|j| de[j] * f[j]).sum::<i64>())
            .min();
        let m = match (sub_min, quot_min) {
            (Some(a), Some(b)) => a.min(b),
            _ => {
                return Err(Error::Internal(format!(
                    "empty sub or quotient set at root {alpha}"
                )))
            }
        };
        out.push((alpha.clone(), m));
    }
    Ok(out)
}

/// Multiplicity of every indecomposable in the rigid representation of
/// dimension vector `d`: the raw minimum clamped at zero.
pub fn rigid_multiplicities(
    euler: &EulerMatrix,
    roots: &RootSystem,
    cache: &SubQuotCache,
    d: &DimVec,
) -> Result<MultiplicityFunction> {
    let raw = rigid_raw_minima(euler, roots, cache, d)?;
    let mut out = MultiplicityFunction::new();
    for (alpha, m) in raw {
        if m > 0 {
            out.insert(alpha, m);
        }
    }
    Ok(out)
}

/// Structural checks on a claimed decomposition of `d`.
#[derive(Clone, Debug)]
pub struct DecompositionCheck {
    pub sum_ok: bool,
    pub achieved_sum: DimVec,
    pub ext_free: bool,
    /// First pair of distinct summands with a nonzero extension, if any.
    pub ext_witness: Option<(DimVec, DimVec)>,
    /// At most `n` distinct summands can appear in a rigid representation.
    pub support_bound_ok: bool,
    pub support_size: usize,
}

impl DecompositionCheck {
    pub fn all_ok(&self) -> bool {
        self.sum_ok && self.ext_free && self.support_bound_ok
    }
}

pub fn check_decomposition(
    euler: &EulerMatrix,
    d: &DimVec,
    mult: &MultiplicityFunction,
) -> Result<DecompositionCheck> {
    let n = euler.size();
    let mut sum = DimVec::zeros(n);
    for (alpha, &m) in mult {
        sum = sum.checked_add_scaled(m, alpha)?;
    }
    let summands: Vec<&DimVec> = mult
        .iter()
        .filter(|&(_, &m)| m != 0)
        .map(|(a, _)| a)
        .collect();
    let mut ext_witness = None;
    // The range includes the diagonal: a summand must not extend itself.
    'outer: for (i, a) in summands.iter().enumerate() {
        for b in summands.iter().skip(i) {
            if ext_dim(euler, a, b) != 0 || ext_dim(euler, b, a) != 0 {
                ext_witness = Some(((*a).clone(), (*b).clone()));
                break 'outer;
            }
        }
    }
    Ok(DecompositionCheck {
        sum_ok: sum == *d,
        achieved_sum: sum,
        ext_free: ext_witness.is_none(),
        ext_witness,
        support_bound_ok: summands.len() <= n,
        support_size: summands.len(),
    })
}

/// Largest total dimension the exhaustive search accepts by default.
pub const BRUTE_FORCE_DEFAULT_BOUND: i64 = 14;

/// Finds the decomposition of `d` into positive roots with all pairwise
/// extensions zero by exhaustive search, independently of the multiplicity
/// formula. Errors if the total dimension exceeds `bound` or if the number
/// of extension-free decompositions is not exactly one.
pub fn brute_force_rigid(
    euler: &EulerMatrix,
    roots: &RootSystem,
    d: &DimVec,
    bound: i64,
) -> Result<MultiplicityFunction> {
    let n = euler.size();
    d.validate_for(n)?;
    let total = d.total();
    if total > bound {
        return Err(Error::BruteForceBound { total, bound });
    }
    let root_list = roots.roots();
    // coverable[k][i]: some root at index >= k has a nonzero i-th entry.
    let mut coverable = vec![vec![false; n]; root_list.len() + 1];
    for k in (0..root_list.len()).rev() {
        for i in 0..n {
            coverable[k][i] = coverable[k + 1][i] || root_list[k][i] > 0;
        }
    }

    struct Search<'a> {
        euler: &'a EulerMatrix,
        root_list: &'a [DimVec],
        coverable: &'a [Vec<bool>],
        n: usize,
        chosen: Vec<(usize, i64)>,
        solutions: Vec<MultiplicityFunction>,
    }

    impl Search<'_> {
        fn run(&mut self, k: usize, remaining: &DimVec) {
            if self.solutions.len() >= 2 {
                return;
            }
            if remaining.is_zero() {
                let sol: MultiplicityFunction = self
                    .chosen
                    .iter()
                    .map(|&(idx, m)| (self.root_list[idx].clone(), m))
                    .collect();
                self.solutions.push(sol);
                return;
            }
            if k == self.root_list.len() {
                return;
            }
            if (0..self.n).any(|i| remaining[i] > 0 && !self.coverable[k][i]) {
                return;
            }
            let alpha = &self.root_list[k];
            // Any positive multiplicity of alpha is ruled out as soon as it
            // has an extension with a root already chosen; pairwise
            // extension-freeness cannot be restored later.
            let clashes = self.chosen.iter().any(|&(idx, _)| {
                let beta = &self.root_list[idx];
                ext_dim(self.euler, alpha, beta) != 0 || ext_dim(self.euler, beta, alpha) != 0
            });
            let max_mult = if clashes {
                0
            } else {
                (0..self.n)
                    .filter(|&i| alpha[i] > 0)
                    .map(|i| remaining[i] / alpha[i])
                    .min()
                    .unwrap_or(0)
            };
            for m in (0..=max_mult).rev() {
                let rest = remaining
                    .checked_add_scaled(-m, alpha)
                    .expect("bounded by remaining");
                if m > 0 {
                    self.chosen.push((k, m));
                }
                self.run(k + 1, &rest);
                if m > 0 {
                    self.chosen.pop();
                }
            }
        }
    }

    let mut search = Search {
        euler,
        root_list,
        coverable: &coverable,
        n,
        chosen: Vec::new(),
        solutions: Vec::new(),
    };
    search.run(0, d);
    match search.solutions.len() {
        1 => Ok(search.solutions.pop().unwrap()),
        0 => Err(Error::Internal(format!(
            "no extension-free decomposition of {d}"
        ))),
        _ => Err(Error::Internal(format!(
            "multiple extension-free decompositions of {d}"
        ))),
    }
}
