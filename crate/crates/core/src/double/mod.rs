//! The double C_q[D(G)] = A ⋈_β A of A = C_q[SL(n)]: cross commutation,
//! derived relations, the braiding γ, the maps m, θ, ξ and χθ*, the Γ-action,
//! the Iwasawa and localization identities, and iterated doubles.

mod gamma;
mod gamma_group;
mod iterated;
mod localization;
mod maps;
mod relations;

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock};

pub use gamma::{gamma_convolution, gamma_prime, verify_braiding, GammaForm};
pub use gamma_group::{gamma_invariance_check, GammaGroup};
pub use iterated::{cocycle_suite, iterated_double, twist_round_trip, verify_iterated, IteratedDouble};
pub use localization::{eta_quotient_check, localization_identities};
pub use maps::{check_xi_injective, chi_commutation_check, XiReport};
pub use relations::{derive_cross_relations, paper_relations, CrossRelation, PaperLine, RelationReport};

use crate::freealg::{Gen, NcPoly, Rule, Word};
use crate::hopf::{Algebra, FormRef, HopfMap, Interaction};
use crate::qgroups::{QgError, QuantumGroup};

/// A ⋈_β A on two slots: slot 0 holds a, slot 1 holds ã. Canonical words
/// are a slot-0 normal word followed by a slot-1 normal word.
pub struct DoubleAlgebra {
    pub n: usize,
    pub group: &'static QuantumGroup,
    pub alg: Arc<Algebra>,
    cross: BTreeMap<(Gen, Gen), NcPoly>,
    maps: OnceLock<Result<maps::StructureMaps, QgError>>,
}

static DOUBLES: [OnceLock<Result<DoubleAlgebra, QgError>>; 2] = [OnceLock::new(), OnceLock::new()];

/// Σ τ(a1, u1) τ⁻¹(a3, u3) a2 ⊗ u2 for words a, u of A, as a polynomial on
/// two slots (a2 in slot 0, u2 in slot 1).
fn cross_sum(a_alg: &Algebra, tau: &FormRef, tau_inv: &FormRef, u: &[Gen], a: &[Gen]) -> NcPoly {
    let sa = a_alg.sweedler3(a);
    let su = a_alg.sweedler3(u);
    let mut out = NcPoly::zero();
    for (a1, a2, a3, ca) in sa.iter() {
        for (u1, u2, u3, cu) in su.iter() {
            let x = tau.eval_words(a1, u1);
            if x.is_zero() {
                continue;
            }
            let y = tau_inv.eval_words(a3, u3);
            if y.is_zero() {
                continue;
            }
            let w: Word = a2.iter().copied().chain(u2.iter().map(|g| g.with_slot(1))).collect();
            out.add_term(w, &(&(&x * &y) * &(ca * cu)));
        }
    }
    out
}

impl DoubleAlgebra {
    pub fn build(n: usize) -> Result<DoubleAlgebra, QgError> {
        let group = QuantumGroup::get(n)?;
        let a = &group.a;
        let mut cross = BTreeMap::new();
        let mut rules = Vec::new();
        for u in a.gens() {
            for x in a.gens() {
                let rhs = cross_sum(a, &group.beta, &group.beta_inv, &[u], &[x]);
                let lhs: Word = [u.with_slot(1), x].into_iter().collect();
                rules.push(Rule::new(lhs, rhs.clone()));
                cross.insert((u, x), rhs);
            }
        }
        let pres = a.factor(0).clone();
        let mut inter = BTreeMap::new();
        inter.insert((0u8, 1u8), Interaction::Rules(rules));
        let name = format!("C_q[D(SL{})]", n);
        let alg = Algebra::new(name, vec![pres.clone(), pres], inter).map_err(|e| QgError::Solver(e.to_string()))?;
        Ok(DoubleAlgebra { n, group, alg, cross, maps: OnceLock::new() })
    }

    /// The shared instance for n = 2 or 3.
    pub fn get(n: usize) -> Result<&'static DoubleAlgebra, QgError> {
        if !(2..=3).contains(&n) {
            return Err(QgError::Unsupported(n));
        }
        DOUBLES[n - 2].get_or_init(|| DoubleAlgebra::build(n)).as_ref().map_err(|e| e.clone())
    }

    pub fn a(&self) -> &Arc<Algebra> {
        &self.group.a
    }

    /// The cached right-hand side of ũ a for generators u, a of A.
    pub fn cross_rule(&self, u: Gen, a: Gen) -> &NcPoly {
        &self.cross[&(u.with_slot(0), a.with_slot(0))]
    }

    /// (1 ⊗ u)(a ⊗ 1) for words u, a of A, from the defining sum and
    /// normalised in the double.
    pub fn cross_commute(&self, u: &[Gen], a: &[Gen]) -> NcPoly {
        self.alg.nf(&cross_sum(self.a(), &self.group.beta, &self.group.beta_inv, u, a))
    }

    /// Embeds a polynomial of A into slot 0 (x ⊗ 1) or slot 1 (1 ⊗ x).
    pub fn embed(&self, p: &NcPoly, slot: u8) -> NcPoly {
        self.alg.nf(&p.shift_slots(slot))
    }

    /// Splits a canonical word into its slot-0 and slot-1 parts, both as words of A.
    pub fn split(&self, w: &[Gen]) -> (Word, Word) {
        let cut = w.iter().position(|g| g.slot == 1).unwrap_or(w.len());
        debug_assert!(w[cut..].iter().all(|g| g.slot == 1));
        (w[..cut].iter().copied().collect(), w[cut..].iter().map(|g| g.with_slot(0)).collect())
    }

    pub fn parse(&self, s: &str) -> Result<NcPoly, crate::freealg::ExprError> {
        self.alg.parse(s)
    }

    pub fn format(&self, p: &NcPoly) -> String {
        self.alg.format(p)
    }

    fn structure(&self) -> Result<&maps::StructureMaps, QgError> {
        self.maps.get_or_init(|| maps::StructureMaps::build(self)).as_ref().map_err(|e| e.clone())
    }

    /// m: A ⋈ A → A, the multiplication map.
    pub fn map_m(&self) -> Result<&Arc<HopfMap>, QgError> {
        Ok(&self.structure()?.m)
    }

    /// θ(x ⊗ y) = l⁺(x) l⁻(y) in U_q^cop.
    pub fn map_theta(&self) -> Result<&Arc<HopfMap>, QgError> {
        Ok(&self.structure()?.theta)
    }

    /// ξ = (m ⊗ θ)Δ into A ⊗ U_q^cop.
    pub fn map_xi(&self) -> Result<&Arc<HopfMap>, QgError> {
        Ok(&self.structure()?.xi)
    }

    /// ξ on a word from the defining formula Σ m(w1) ⊗ θ(w2).
    pub fn xi_direct(&self, w: &[Gen]) -> Result<NcPoly, QgError> {
        let s = self.structure()?;
        let t = s.xi.target();
        let mut out = NcPoly::zero();
        for (w1, w2, c) in self.alg.sweedler(w).iter() {
            let x = s.m.apply_word(w1);
            let y = s.theta.apply_word(w2);
            out.add_scaled(&t.nf(&(&x * &y.shift_slots(1))), c);
        }
        Ok(out)
    }

    /// χθ*(c) = Σ l⁻S(c1) ⊗ l⁺S(c2) in U ⊗ U, for a word c of A.
    pub fn chi_theta_star(&self, c: &[Gen]) -> Result<NcPoly, QgError> {
        let s = self.structure()?;
        let a = self.a();
        let l = self.group.lmaps()?;
        let mut out = NcPoly::zero();
        for (c1, c2, k) in a.sweedler(c).iter() {
            let x = l.minus.apply(&a.antipode_word(c1));
            if x.is_zero() {
                continue;
            }
            let y = l.plus.apply(&a.antipode_word(c2));
            out.add_scaled(&(&x * &y.shift_slots(1)), k);
        }
        Ok(s.uu.nf(&out))
    }

    /// The U ⊗ U algebra that χ lands in.
    pub fn u_tensor_u(&self) -> Result<&Arc<Algebra>, QgError> {
        Ok(&self.structure()?.uu)
    }

    /// Generator images of a map given per slot.
    fn slot_images(&self, f: impl Fn(Gen) -> NcPoly) -> HashMap<Gen, NcPoly> {
        self.alg.gens().into_iter().map(|g| (g, f(g))).collect()
    }
}

#[cfg(test)]
mod tests;
