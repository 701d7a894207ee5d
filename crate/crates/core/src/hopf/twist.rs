use std::sync::Arc;

use dashmap::DashMap;

use super::algebra::Algebra;
use super::forms::FormRef;
use crate::freealg::{Gen, NcPoly, Word};
use crate::scalars::Scalar;

/// A product on the normal-form basis of a fixed coalgebra.
pub trait Product: Send + Sync {
    fn coalgebra(&self) -> &Algebra;
    fn mul_words(&self, x: &[Gen], y: &[Gen]) -> NcPoly;

    fn mul(&self, x: &NcPoly, y: &NcPoly) -> NcPoly {
        let mut out = NcPoly::zero();
        for (wx, cx) in x.terms() {
            for (wy, cy) in y.terms() {
                out.add_scaled(&self.mul_words(wx, wy), &(cx * cy));
            }
        }
        out
    }
}

impl Product for Algebra {
    fn coalgebra(&self) -> &Algebra {
        self
    }
    fn mul_words(&self, x: &[Gen], y: &[Gen]) -> NcPoly {
        Algebra::mul_words(self, x, y)
    }
}

/// A_σ: the coalgebra of the base with product
///   x · y = Σ σ(x1, y1) x2 y2 σ^{-1}(x3, y3).
/// Elements are kept in the base's normal-form basis.
pub struct TwistedAlgebra {
    base: Arc<dyn Product>,
    sigma: FormRef,
    sigma_inv: FormRef,
    memo: DashMap<(Word, Word), NcPoly>,
}

impl TwistedAlgebra {
    pub fn new(base: Arc<dyn Product>, sigma: FormRef, sigma_inv: FormRef) -> Self {
        TwistedAlgebra { base, sigma, sigma_inv, memo: DashMap::new() }
    }

    pub fn sigma(&self) -> &FormRef {
        &self.sigma
    }

    pub fn sigma_inv(&self) -> &FormRef {
        &self.sigma_inv
    }
}

impl Product for TwistedAlgebra {
    fn coalgebra(&self) -> &Algebra {
        self.base.coalgebra()
    }

    fn mul_words(&self, x: &[Gen], y: &[Gen]) -> NcPoly {
        let key: (Word, Word) = (x.iter().copied().collect(), y.iter().copied().collect());
        if let Some(hit) = self.memo.get(&key) {
            return hit.value().clone();
        }
        let co = self.base.coalgebra();
        let sx = co.sweedler3(x);
        let sy = co.sweedler3(y);
        let mut out = NcPoly::zero();
        for (x1, x2, x3, cx) in sx.iter() {
            for (y1, y2, y3, cy) in sy.iter() {
                let a = self.sigma.eval_words(x1, y1);
                if a.is_zero() {
                    continue;
                }
                let b = self.sigma_inv.eval_words(x3, y3);
                if b.is_zero() {
                    continue;
                }
                let c: Scalar = &(&a * &b) * &(cx * cy);
                out.add_scaled(&self.base.mul_words(x2, y2), &c);
            }
        }
        self.memo.insert(key, out.clone());
        out
    }
}
