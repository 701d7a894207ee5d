use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};

use dashmap::DashMap;

use super::presentation::HopfPresentation;
use crate::freealg::{Alphabet, ExprError, Gen, NcPoly, RewriteError, RewriteSystem, Rule, TermOrder, Word};
use crate::scalars::Scalar;

/// How the generators of two slots `lo < hi` are reordered.
#[derive(Clone, Debug)]
pub enum Interaction {
    /// `g_hi h_lo -> h_lo g_hi`.
    Commute,
    /// Rules with leading word `[g_hi, h_lo]` (e.g. the cross relations of a double).
    Rules(Vec<Rule>),
}

pub type Sweedler = Arc<Vec<(Word, Word, Scalar)>>;
pub type Sweedler3 = Arc<Vec<(Word, Word, Word, Scalar)>>;

/// An algebra on several slots, one Hopf presentation per slot, with slot
/// interactions given by commutation or explicit rules.
///
/// The coalgebra is always the tensor coalgebra: generator `g` of slot `s`
/// has coproduct `Δ(g)` with its two tensor legs placed in slots `s` and
/// `s + k` of the tensor square (`k` the number of slots). This covers tensor
/// products, doubles and iterated doubles, whose coalgebras are unchanged by
/// the twist.
pub struct Algebra {
    name: String,
    factors: Vec<Arc<HopfPresentation>>,
    interactions: BTreeMap<(u8, u8), Interaction>,
    alphabet: Alphabet,
    rs: RewriteSystem,
    delta_memo: DashMap<Word, NcPoly>,
    sweedler_memo: DashMap<Word, Sweedler>,
    sweedler3_memo: DashMap<Word, Sweedler3>,
    antipode_memo: DashMap<Word, NcPoly>,
    square: OnceLock<Arc<Algebra>>,
}

impl std::fmt::Debug for Algebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Algebra({})", self.name)
    }
}

impl Algebra {
    pub fn new(
        name: impl Into<String>,
        factors: Vec<Arc<HopfPresentation>>,
        interactions: BTreeMap<(u8, u8), Interaction>,
    ) -> Result<Arc<Algebra>, RewriteError> {
        let k = factors.len();
        let mut order = TermOrder::new();
        let mut rules = Vec::new();
        let mut reductions = Vec::new();
        for (s, f) in factors.iter().enumerate() {
            let s = s as u8;
            for (g, w) in f.order.weights() {
                order = order.with_weight(g.with_slot(s), *w);
            }
            for r in &f.rules {
                rules.push(Rule::new(r.lhs.iter().map(|g| g.with_slot(s)).collect(), r.rhs.shift_slots(s)));
            }
            if let Some(red) = &f.reduction {
                let mut red = red.clone();
                red.lead = red.lead.iter().map(|g| g.with_slot(s)).collect();
                red.relation = red.relation.shift_slots(s);
                red.slot = s;
                reductions.push(red);
            }
        }
        for lo in 0..k {
            for hi in lo + 1..k {
                match interactions.get(&(lo as u8, hi as u8)) {
                    Some(Interaction::Rules(rs)) => rules.extend(rs.iter().cloned()),
                    _ => {
                        for g in 0..factors[hi].ngens() {
                            for h in 0..factors[lo].ngens() {
                                let gh = Gen::new(hi as u8, g as u8);
                                let hl = Gen::new(lo as u8, h as u8);
                                rules.push(Rule::new([gh, hl].into_iter().collect(), NcPoly::from_word([hl, gh].into_iter().collect())));
                            }
                        }
                    }
                }
            }
        }
        let rs = RewriteSystem::new(order, rules, reductions)?;
        let alphabet = Alphabet::new(factors.iter().map(|f| f.names.clone()).collect());
        Ok(Arc::new(Algebra {
            name: name.into(),
            factors,
            interactions,
            alphabet,
            rs,
            delta_memo: DashMap::new(),
            sweedler_memo: DashMap::new(),
            sweedler3_memo: DashMap::new(),
            antipode_memo: DashMap::new(),
            square: OnceLock::new(),
        }))
    }

    pub fn single(p: Arc<HopfPresentation>) -> Arc<Algebra> {
        let name = p.name.clone();
        Algebra::new(name, vec![p], BTreeMap::new()).expect("presentation rules are oriented")
    }

    /// Plain tensor product: distinct slots commute.
    pub fn tensor(factors: Vec<Arc<HopfPresentation>>) -> Arc<Algebra> {
        let name = factors.iter().map(|f| f.name.as_str()).collect::<Vec<_>>().join(" (x) ");
        Algebra::new(name, factors, BTreeMap::new()).expect("presentation rules are oriented")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn slots(&self) -> usize {
        self.factors.len()
    }

    pub fn factor(&self, slot: usize) -> &Arc<HopfPresentation> {
        &self.factors[slot]
    }

    pub fn factors(&self) -> &[Arc<HopfPresentation>] {
        &self.factors
    }

    pub fn interactions(&self) -> &BTreeMap<(u8, u8), Interaction> {
        &self.interactions
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn rewrite_system(&self) -> &RewriteSystem {
        &self.rs
    }

    pub fn gens(&self) -> Vec<Gen> {
        self.alphabet.gens()
    }

    /// `r` copies of this algebra side by side, copies commuting.
    pub fn tensor_power(&self, r: usize) -> Arc<Algebra> {
        let k = self.slots() as u8;
        let mut factors = Vec::new();
        let mut interactions = BTreeMap::new();
        for c in 0..r as u8 {
            factors.extend(self.factors.iter().cloned());
            for (&(lo, hi), i) in &self.interactions {
                let shifted = match i {
                    Interaction::Commute => Interaction::Commute,
                    Interaction::Rules(rs) => Interaction::Rules(
                        rs.iter()
                            .map(|r| Rule::new(r.lhs.iter().map(|g| g.with_slot(g.slot + c * k)).collect(), r.rhs.shift_slots(c * k)))
                            .collect(),
                    ),
                };
                interactions.insert((lo + c * k, hi + c * k), shifted);
            }
        }
        Algebra::new(format!("({})^{}", self.name, r), factors, interactions).expect("shifted rules stay oriented")
    }

    /// The tensor square, which receives coproducts.
    pub fn square(&self) -> &Arc<Algebra> {
        self.square.get_or_init(|| self.tensor_power(2))
    }

    pub fn nf(&self, p: &NcPoly) -> NcPoly {
        self.rs.normal_form(p)
    }

    pub fn try_nf(&self, p: &NcPoly) -> Result<NcPoly, RewriteError> {
        self.rs.try_normal_form(p)
    }

    pub fn mul(&self, x: &NcPoly, y: &NcPoly) -> NcPoly {
        self.nf(&(x * y))
    }

    pub fn mul_words(&self, x: &[Gen], y: &[Gen]) -> NcPoly {
        let mut w: Word = x.iter().copied().collect();
        w.extend_from_slice(y);
        self.nf(&NcPoly::from_word(w))
    }

    pub fn parse(&self, s: &str) -> Result<NcPoly, ExprError> {
        Ok(self.nf(&self.alphabet.parse(s)?))
    }

    pub fn format(&self, p: &NcPoly) -> String {
        self.alphabet.format(p)
    }

    pub fn format_word(&self, w: &[Gen]) -> String {
        if w.is_empty() {
            "1".into()
        } else {
            self.alphabet.format_word(w)
        }
    }

    /// Places a factor-local polynomial (slot 0) into `slot`.
    pub fn embed(&self, p: &NcPoly, slot: u8) -> NcPoly {
        p.shift_slots(slot)
    }

    /// Normal words of length at most `max_len`, shortest first.
    pub fn normal_words(&self, max_len: usize) -> Vec<Word> {
        self.rs.normal_words(&self.gens(), max_len)
    }

    pub fn counit_gen(&self, g: Gen) -> Scalar {
        self.factors[g.slot as usize].counit[g.id as usize].clone()
    }

    pub fn counit_word(&self, w: &[Gen]) -> Scalar {
        let mut c = Scalar::one();
        for g in w {
            c = &c * &self.counit_gen(*g);
            if c.is_zero() {
                break;
            }
        }
        c
    }

    pub fn counit(&self, p: &NcPoly) -> Scalar {
        let mut acc = Scalar::zero();
        for (w, c) in p.terms() {
            acc = &acc + &(c * &self.counit_word(w));
        }
        acc
    }

    fn coproduct_gen(&self, g: Gen) -> NcPoly {
        let k = self.slots() as u8;
        let d = self.factors[g.slot as usize].coproduct_of(g.id);
        let s = g.slot;
        self.square().nf(&d.map_gens(|h| if h.slot == 0 { h.with_slot(s) } else { h.with_slot(s + k) }))
    }

    /// Coproduct of an arbitrary word, in normal form of the tensor square.
    pub fn coproduct_word(&self, w: &[Gen]) -> NcPoly {
        if w.is_empty() {
            return NcPoly::one();
        }
        let key: Word = w.iter().copied().collect();
        if let Some(hit) = self.delta_memo.get(&key) {
            return hit.value().clone();
        }
        let head = self.coproduct_gen(w[0]);
        let out = if w.len() == 1 { head } else { self.square().mul(&head, &self.coproduct_word(&w[1..])) };
        self.delta_memo.insert(key, out.clone());
        out
    }

    pub fn coproduct(&self, p: &NcPoly) -> NcPoly {
        let mut out = NcPoly::zero();
        for (w, c) in p.terms() {
            out.add_scaled(&self.coproduct_word(w), c);
        }
        out
    }

    /// Splits a normal word of the tensor square into its two legs.
    pub fn split_square_word(&self, w: &[Gen]) -> (Word, Word) {
        let k = self.slots() as u8;
        let cut = w.iter().position(|g| g.slot >= k).unwrap_or(w.len());
        let left: Word = w[..cut].iter().copied().collect();
        let right: Word = w[cut..].iter().map(|g| g.with_slot(g.slot - k)).collect();
        debug_assert!(left.iter().all(|g| g.slot < k));
        (left, right)
    }

    /// Joins two words into a word of the tensor square.
    pub fn join_square_word(&self, a: &[Gen], b: &[Gen]) -> Word {
        let k = self.slots() as u8;
        a.iter().copied().chain(b.iter().map(|g| g.with_slot(g.slot + k))).collect()
    }

    /// `Δ(w) = Σ w1 ⊗ w2` as a list of normal-word pairs.
    pub fn sweedler(&self, w: &[Gen]) -> Sweedler {
        let key: Word = w.iter().copied().collect();
        if let Some(hit) = self.sweedler_memo.get(&key) {
            return hit.value().clone();
        }
        let d = self.coproduct_word(w);
        let list: Vec<_> = d
            .terms()
            .map(|(x, c)| {
                let (a, b) = self.split_square_word(x);
                (a, b, c.clone())
            })
            .collect();
        let list = Arc::new(list);
        self.sweedler_memo.insert(key, list.clone());
        list
    }

    /// `(Δ ⊗ id)Δ(w) = Σ w1 ⊗ w2 ⊗ w3`.
    pub fn sweedler3(&self, w: &[Gen]) -> Sweedler3 {
        let key: Word = w.iter().copied().collect();
        if let Some(hit) = self.sweedler3_memo.get(&key) {
            return hit.value().clone();
        }
        let mut acc: BTreeMap<(Word, Word, Word), Scalar> = BTreeMap::new();
        for (x1, x2, c) in self.sweedler(w).iter() {
            for (y1, y2, c2) in self.sweedler(x1).iter() {
                let e = acc.entry((y1.clone(), y2.clone(), x2.clone())).or_insert_with(Scalar::zero);
                *e = &*e + &(c * c2);
            }
        }
        let list: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).map(|((a, b, c), s)| (a, b, c, s)).collect();
        let list = Arc::new(list);
        self.sweedler3_memo.insert(key, list.clone());
        list
    }

    fn antipode_gen(&self, g: Gen) -> NcPoly {
        self.factors[g.slot as usize].antipode[g.id as usize].shift_slots(g.slot)
    }

    /// Antipode of an arbitrary word: the anti-homomorphic extension.
    pub fn antipode_word(&self, w: &[Gen]) -> NcPoly {
        if w.is_empty() {
            return NcPoly::one();
        }
        let key: Word = w.iter().copied().collect();
        if let Some(hit) = self.antipode_memo.get(&key) {
            return hit.value().clone();
        }
        let head = self.nf(&self.antipode_gen(w[0]));
        let out = if w.len() == 1 { head } else { self.mul(&self.antipode_word(&w[1..]), &head) };
        self.antipode_memo.insert(key, out.clone());
        out
    }

    pub fn antipode(&self, p: &NcPoly) -> NcPoly {
        let mut out = NcPoly::zero();
        for (w, c) in p.terms() {
            out.add_scaled(&self.antipode_word(w), c);
        }
        out
    }

    /// Every relation the algebra is defined by, as `(label, lhs - rhs)`:
    /// factor relations and rules per slot, central relations, and the
    /// interaction rules between slots.
    pub fn relation_polys(&self) -> Vec<(String, NcPoly)> {
        let mut out = Vec::new();
        for (s, f) in self.factors.iter().enumerate() {
            let s = s as u8;
            let al = Alphabet::new(vec![f.names.clone()]);
            for r in &f.relations {
                out.push((format!("{} = {}", al.format(&r.lhs), al.format(&r.rhs)), r.difference().shift_slots(s)));
            }
            for r in &f.rules {
                let l = NcPoly::from_word(r.lhs.clone());
                out.push((format!("{} -> {}", al.format(&l), al.format(&r.rhs)), (&l - &r.rhs).shift_slots(s)));
            }
            if let Some(red) = &f.reduction {
                out.push((format!("{} = 0", al.format(&red.relation)), red.relation.shift_slots(s)));
            }
        }
        for i in self.interactions.values() {
            if let Interaction::Rules(rs) = i {
                for r in rs {
                    let l = NcPoly::from_word(r.lhs.clone());
                    out.push((format!("{} -> {}", self.format(&l), self.format(&r.rhs)), &l - &r.rhs));
                }
            }
        }
        for (lo, hi) in self.commute_pairs() {
            for g in 0..self.factors[hi as usize].ngens() {
                for h in 0..self.factors[lo as usize].ngens() {
                    let a = NcPoly::gen(Gen::new(hi, g as u8));
                    let b = NcPoly::gen(Gen::new(lo, h as u8));
                    out.push((format!("{} commutes with {}", self.format(&a), self.format(&b)), &(&a * &b) - &(&b * &a)));
                }
            }
        }
        out
    }

    fn commute_pairs(&self) -> Vec<(u8, u8)> {
        let k = self.slots() as u8;
        let mut out = Vec::new();
        for lo in 0..k {
            for hi in lo + 1..k {
                if !matches!(self.interactions.get(&(lo, hi)), Some(Interaction::Rules(_))) {
                    out.push((lo, hi));
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::word;

    /// Group algebra of Z/2: one grouplike `g` with `g g = 1`.
    fn z2() -> Arc<HopfPresentation> {
        let g = Gen::new(0, 0);
        let gg = NcPoly::from_word(word(&[(0, 0), (0, 0)]));
        Arc::new(HopfPresentation {
            name: "Z2".into(),
            names: vec!["g".into()],
            order: TermOrder::new(),
            relations: vec![super::super::Relation::new(gg, NcPoly::one())],
            rules: vec![Rule::new(word(&[(0, 0), (0, 0)]), NcPoly::one())],
            reduction: None,
            coproduct: vec![NcPoly::from_word(word(&[(0, 0), (1, 0)]))],
            counit: vec![Scalar::one()],
            antipode: vec![NcPoly::gen(g)],
            cop: false,
        })
    }

    #[test]
    fn group_algebra_structure() {
        let a = Algebra::single(z2());
        let g = NcPoly::gen(Gen::new(0, 0));
        assert!(a.mul(&g, &g).as_scalar().unwrap().is_one());
        assert_eq!(a.sweedler(&word(&[(0, 0)])).len(), 1);
        assert_eq!(a.antipode(&g), g);
        assert_eq!(a.normal_words(3).len(), 2);
        let t = a.tensor_power(2);
        assert_eq!(t.format(&t.parse("g_2*g").unwrap()), "g*g_2");
    }
}
