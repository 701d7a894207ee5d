use std::collections::BTreeMap;
use std::sync::Arc;

use super::DoubleAlgebra;
use crate::freealg::{NcPoly, Word};
use crate::hopf::{Algebra, Form, HopfMap};
use crate::qgroups::QgError;
use crate::report::Suite;
use crate::scalars::{matrix_rank, Matrix, Scalar, SparseVec};

pub(super) struct StructureMaps {
    pub m: Arc<HopfMap>,
    pub theta: Arc<HopfMap>,
    pub xi: Arc<HopfMap>,
    pub uu: Arc<Algebra>,
}

impl StructureMaps {
    pub fn build(d: &DoubleAlgebra) -> Result<StructureMaps, QgError> {
        let g = d.group;
        let l = g.lmaps()?;
        let a = d.a().clone();
        let m = Arc::new(HopfMap::new("m", d.alg.clone(), a.clone(), d.slot_images(|x| NcPoly::gen(x.with_slot(0)))));
        let theta = Arc::new(HopfMap::new(
            "theta",
            d.alg.clone(),
            g.u_cop.clone(),
            d.slot_images(|x| if x.slot == 0 { l.plus.image(x).clone() } else { l.minus.image(x.with_slot(0)).clone() }),
        ));
        let target = Algebra::tensor(vec![a.factor(0).clone(), g.u_cop.factor(0).clone()]);
        let xi_images = d.slot_images(|x| {
            let mut out = NcPoly::zero();
            for (w1, w2, c) in d.alg.sweedler(&[x]).iter() {
                let p = &m.apply_word(w1) * &theta.apply_word(w2).shift_slots(1);
                out.add_scaled(&p, c);
            }
            out
        });
        let xi = Arc::new(HopfMap::new("xi", d.alg.clone(), target, xi_images));
        let uu = Algebra::tensor(vec![g.u.factor(0).clone(), g.u.factor(0).clone()]);
        Ok(StructureMaps { m, theta, xi, uu })
    }
}

/// Coordinates of polynomials over a growing basis of normal words.
#[derive(Default)]
pub(crate) struct Coordinates {
    index: BTreeMap<Word, usize>,
}

impl Coordinates {
    pub fn vector(&mut self, p: &NcPoly) -> SparseVec {
        let mut out = SparseVec::new();
        for (w, c) in p.terms() {
            let n = self.index.len();
            let k = *self.index.entry(w.clone()).or_insert(n);
            out.insert(k, c.clone());
        }
        out
    }

    pub fn len(&self) -> usize {
        self.index.len()
    }
}

/// Rank of a list of polynomials in the span of their normal words.
pub(crate) fn poly_rank(polys: &[NcPoly]) -> usize {
    let mut coords = Coordinates::default();
    let rows: Vec<SparseVec> = polys.iter().map(|p| coords.vector(p)).collect();
    let mut m = Matrix::new(coords.len());
    for r in rows {
        m.push_row(r);
    }
    matrix_rank(&m)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XiReport {
    pub degree: usize,
    pub rank: usize,
    pub count: usize,
}

impl XiReport {
    pub fn passed(&self) -> bool {
        self.rank == self.count
    }
}

/// Rank of ξ on every canonical double monomial of degree ≤ `degree`.
pub fn check_xi_injective(d: &DoubleAlgebra, degree: usize) -> Result<XiReport, QgError> {
    let xi = d.map_xi()?;
    let words = d.alg.normal_words(degree);
    let images: Vec<NcPoly> = words.iter().map(|w| xi.apply_word(w)).collect();
    Ok(XiReport { degree, rank: poly_rank(&images), count: words.len() })
}

/// Inside U ⊗ U through χ, for generators u of U and a of A:
///   Σ θ*(a1) m*(u1) ⟨u2, a2⟩ = Σ ⟨u1, a1⟩ m*(u2) θ*(a2),
/// with χm*(u) = Δ(u) and χθ*(a) = Σ l⁻S(a1) ⊗ l⁺S(a2).
pub fn chi_commutation_check(d: &DoubleAlgebra) -> Result<Suite, QgError> {
    let g = d.group;
    let uu = d.u_tensor_u()?.clone();
    let a = d.a();
    let mut suite = Suite::new(format!("chi[sl{}]", d.n));
    let delta = |w: &[crate::freealg::Gen]| -> NcPoly {
        // Δ of U lands in U's square, whose slot layout matches U ⊗ U.
        g.u.coproduct_word(w)
    };
    let mut bad = None;
    'outer: for u in g.u.gens() {
        for x in a.gens() {
            let mut lhs = NcPoly::zero();
            let mut rhs = NcPoly::zero();
            for (a1, a2, ca) in a.sweedler(&[x]).iter() {
                for (u1, u2, cu) in g.u.sweedler(&[u]).iter() {
                    let c: Scalar = ca * cu;
                    let p = g.pairing.eval_words(u2, a2);
                    if !p.is_zero() {
                        let t = uu.mul(&d.chi_theta_star(a1)?, &delta(u1));
                        lhs.add_scaled(&t, &(&c * &p));
                    }
                    let p = g.pairing.eval_words(u1, a1);
                    if !p.is_zero() {
                        let t = uu.mul(&delta(u2), &d.chi_theta_star(a2)?);
                        rhs.add_scaled(&t, &(&c * &p));
                    }
                }
            }
            if lhs != rhs {
                bad = Some(format!("u={} a={}: {} != {}", g.u.format_word(&[u]), a.format_word(&[x]), uu.format(&lhs), uu.format(&rhs)));
                break 'outer;
            }
        }
    }
    suite.record("theta* m* commutation on generators", bad);
    Ok(suite)
}
