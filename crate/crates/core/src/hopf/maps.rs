use std::collections::HashMap;
use std::sync::Arc;

use dashmap::DashMap;

use super::algebra::Algebra;
use crate::freealg::{Gen, NcPoly, Word};

/// An algebra map given by generator images, extended multiplicatively.
pub struct HopfMap {
    name: String,
    source: Arc<Algebra>,
    target: Arc<Algebra>,
    images: HashMap<Gen, NcPoly>,
    memo: DashMap<Word, NcPoly>,
}

impl HopfMap {
    pub fn new(name: impl Into<String>, source: Arc<Algebra>, target: Arc<Algebra>, images: HashMap<Gen, NcPoly>) -> Self {
        let images = images.into_iter().map(|(g, p)| (g, target.nf(&p))).collect();
        HopfMap { name: name.into(), source, target, images, memo: DashMap::new() }
    }

    pub fn identity(alg: Arc<Algebra>) -> Self {
        let images = alg.gens().into_iter().map(|g| (g, NcPoly::gen(g))).collect();
        HopfMap::new("id", alg.clone(), alg, images)
    }

    /// x ↦ ε(x)1.
    pub fn counit_map(source: Arc<Algebra>, target: Arc<Algebra>) -> Self {
        let images = source.gens().into_iter().map(|g| (g, NcPoly::constant(source.counit_gen(g)))).collect();
        HopfMap::new("eps", source, target, images)
    }

    /// Δ: A → A ⊗ A.
    pub fn coproduct_map(alg: Arc<Algebra>) -> Self {
        let sq = alg.square().clone();
        let images = alg.gens().into_iter().map(|g| (g, alg.coproduct_word(&[g]))).collect();
        HopfMap::new("Delta", alg, sq, images)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn source(&self) -> &Arc<Algebra> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Algebra> {
        &self.target
    }

    pub fn image(&self, g: Gen) -> &NcPoly {
        &self.images[&g]
    }

    pub fn apply_word(&self, w: &[Gen]) -> NcPoly {
        if w.is_empty() {
            return NcPoly::one();
        }
        if w.len() == 1 {
            return self.images[&w[0]].clone();
        }
        let key: Word = w.iter().copied().collect();
        if let Some(hit) = self.memo.get(&key) {
            return hit.value().clone();
        }
        let out = self.target.mul(&self.images[&w[0]], &self.apply_word(&w[1..]));
        self.memo.insert(key, out.clone());
        out
    }

    pub fn apply(&self, p: &NcPoly) -> NcPoly {
        let mut out = NcPoly::zero();
        for (w, c) in p.terms() {
            out.add_scaled(&self.apply_word(w), c);
        }
        out
    }

    /// The first source relation not sent to zero.
    pub fn check_relations(&self) -> Option<String> {
        for (label, r) in self.source.relation_polys() {
            let img = self.apply(&r);
            if !img.is_zero() {
                return Some(format!("{}: image {}", label, self.target.format(&img)));
            }
        }
        None
    }

    /// Coalgebra compatibility on generators: Δφ = (φ⊗φ)Δ and εφ = ε.
    pub fn check_coalgebra(&self) -> Option<String> {
        let tsq = self.target.square();
        for g in self.source.gens() {
            let img = &self.images[&g];
            let lhs = self.target.coproduct(img);
            let mut rhs = NcPoly::zero();
            for (a, b, c) in self.source.sweedler(&[g]).iter() {
                let pa = self.apply_word(a);
                let pb = self.apply_word(b);
                for (wa, ca) in pa.terms() {
                    for (wb, cb) in pb.terms() {
                        rhs.add_term(self.target.join_square_word(wa, wb), &(c * &(ca * cb)));
                    }
                }
            }
            let rhs = tsq.nf(&rhs);
            if lhs != rhs {
                return Some(format!("Delta on {}: {} != {}", self.source.format_word(&[g]), tsq.format(&lhs), tsq.format(&rhs)));
            }
            if self.target.counit(img) != self.source.counit_gen(g) {
                return Some(format!("counit on {}", self.source.format_word(&[g])));
            }
        }
        None
    }
}
