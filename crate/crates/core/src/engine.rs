//! Bundles a quiver with its Euler matrix, root system, and sub/quotient
//! cache so callers can run the decomposition pipeline without wiring the
//! pieces by hand.

use crate::dimvec::DimVec;
use crate::error::Result;
use crate::euler::EulerMatrix;
use crate::rigid::{
    brute_force_rigid, check_decomposition, rigid_multiplicities, rigid_raw_minima,
    DecompositionCheck, MultiplicityFunction,
};
use crate::roots::{CoxeterMap, RootSystem};
use crate::subquot::{hom_root_to, sub_quot_sets, SubQuotCache, SubQuotSets};
use crate::quiver::Quiver;
use std::sync::Arc;

pub struct Engine {
    quiver: Quiver,
    euler: EulerMatrix,
    roots: RootSystem,
    cache: SubQuotCache,
}

impl Engine {
    pub fn new(quiver: Quiver) -> Result<Self> {
        let euler = EulerMatrix::new(&quiver);
        let roots = RootSystem::new(&quiver)?;
        Ok(Engine {
            quiver,
            euler,
            roots,
            cache: SubQuotCache::new(),
        })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn euler(&self) -> &EulerMatrix {
        &self.euler
    }

    pub fn roots(&self) -> &RootSystem {
        &self.roots
    }

    pub fn cache(&self) -> &SubQuotCache {
        &self.cache
    }

    /// Multiplicity of every indecomposable in the rigid representation.
    pub fn rigid(&self, d: &DimVec) -> Result<MultiplicityFunction> {
        rigid_multiplicities(&self.euler, &self.roots, &self.cache, d)
    }

    /// The per-root minima before clamping at zero; negative values mark
    /// roots excluded from the decomposition.
    pub fn rigid_raw(&self, d: &DimVec) -> Result<Vec<(DimVec, i64)>> {
        rigid_raw_minima(&self.euler, &self.roots, &self.cache, d)
    }

    pub fn check(&self, d: &DimVec, mult: &MultiplicityFunction) -> Result<DecompositionCheck> {
        check_decomposition(&self.euler, d, mult)
    }

    pub fn brute_force(&self, d: &DimVec, bound: Option<i64>) -> Result<MultiplicityFunction> {
        let bound = bound.unwrap_or(crate::rigid::BRUTE_FORCE_DEFAULT_BOUND);
        brute_force_rigid(&self.euler, &self.roots, d, bound)
    }

    pub fn hom_root_to(&self, alpha: &DimVec, d: &DimVec) -> Result<i64> {
        hom_root_to(&self.euler, &self.roots, &self.cache, alpha, d)
    }

    pub fn sub_quot(&self, alpha: &DimVec) -> Result<Arc<SubQuotSets>> {
        self.cache.get(&self.euler, &self.roots, alpha)
    }

    /// Direct computation bypassing the cache, mainly for cross-checks.
    pub fn sub_quot_fresh(&self, alpha: &DimVec) -> Result<SubQuotSets> {
        sub_quot_sets(&self.euler, &self.roots, alpha)
    }

    pub fn coxeter_inverse(&self) -> CoxeterMap {
        CoxeterMap::inverse_coxeter(&self.euler)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn engine_pipeline_runs_end_to_end() {
        let q = Quiver::new(3, &[(1, 2), (3, 2)]).unwrap();
        let engine = Engine::new(q).unwrap();
        let d = DimVec::from(&[1i64, 2, 1][..]);
        let mult = engine.rigid(&d).unwrap();
        assert_eq!(mult.len(), 2);
        let check = engine.check(&d, &mult).unwrap();
        assert!(check.all_ok());
        assert_eq!(engine.brute_force(&d, None).unwrap(), mult);
        let raw = engine.rigid_raw(&d).unwrap();
        assert_eq!(raw.len(), engine.roots().len());
    }
}
