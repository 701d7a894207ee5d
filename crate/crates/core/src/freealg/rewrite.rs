use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};

use dashmap::DashMap;

use super::poly::{Gen, NcPoly, Word};
use crate::scalars::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RewriteError {
    #[error("rewriting exceeded the step budget ({0} steps) while normalising {1}")]
    Budget(usize, String),
    #[error("rewriting recursion too deep while normalising {0}")]
    Depth(String),
    #[error("rule {0} does not decrease the term order")]
    NotDecreasing(String),
    #[error("leading coefficient {0} of relation is not a unit of Q[v, v^-1]")]
    NonUnitLead(String),
    #[error("relation is zero")]
    ZeroRelation,
    #[error("central reduction failed on {0}")]
    Central(String),
}

/// Graded order: weighted degree, then length, then lexicographic on
/// `(slot, id)`. Unlisted generators have weight 1.
#[derive(Clone, Debug, Default)]
pub struct TermOrder {
    weights: HashMap<Gen, u32>,
}

impl TermOrder {
    pub fn new() -> Self {
        TermOrder { weights: HashMap::new() }
    }

    pub fn with_weight(mut self, g: Gen, w: u32) -> Self {
        self.weights.insert(g, w);
        self
    }

    pub fn weight(&self, g: Gen) -> u32 {
        self.weights.get(&g).copied().unwrap_or(1)
    }

    pub fn weighted_degree(&self, w: &[Gen]) -> u64 {
        w.iter().map(|g| self.weight(*g) as u64).sum()
    }

    pub fn cmp(&self, a: &[Gen], b: &[Gen]) -> Ordering {
        self.weighted_degree(a)
            .cmp(&self.weighted_degree(b))
            .then(a.len().cmp(&b.len()))
            .then_with(|| a.cmp(b))
    }

    /// Merges the weights of another order (used when combining slots).
    pub fn merged(&self, other: &TermOrder) -> TermOrder {
        let mut weights = self.weights.clone();
        weights.extend(other.weights.iter().map(|(g, w)| (*g, *w)));
        TermOrder { weights }
    }

    pub fn weights(&self) -> impl Iterator<Item = (&Gen, &u32)> {
        self.weights.iter()
    }
}

/// A directed rule `lhs -> rhs`.
#[derive(Clone, Debug, PartialEq)]
pub struct Rule {
    pub lhs: Word,
    pub rhs: NcPoly,
}

impl Rule {
    pub fn new(lhs: Word, rhs: NcPoly) -> Self {
        Rule { lhs, rhs }
    }

    /// Orients the relation `rel = 0` by its leading word.
    pub fn orient(rel: &NcPoly, order: &TermOrder) -> Result<Rule, RewriteError> {
        let (lead, c) = rel
            .terms()
            .max_by(|a, b| order.cmp(a.0, b.0))
            .map(|(w, c)| (w.clone(), c.clone()))
            .ok_or(RewriteError::ZeroRelation)?;
        if !c.is_laurent_unit() {
            return Err(RewriteError::NonUnitLead(c.to_string()));
        }
        let inv = c.inv().unwrap();
        let mut rhs = rel.scale(&-inv);
        rhs.add_term(lead.clone(), &Scalar::one());
        Ok(Rule { lhs: lead, rhs })
    }
}

/// Reduction modulo a central relation, applied to straightened single-slot
/// segments by multiset divisibility of `lead` (e.g. `det_q - 1`).
#[derive(Clone, Debug)]
pub struct CentralReduction {
    pub slot: u8,
    /// The leading monomial as a sorted word.
    pub lead: Word,
    /// The relation (equal to zero) with coefficient 1 on `lead`.
    pub relation: NcPoly,
}

impl CentralReduction {
    fn divides(&self, w: &[Gen]) -> bool {
        let mut need: BTreeMap<Gen, usize> = BTreeMap::new();
        for g in &self.lead {
            *need.entry(*g).or_default() += 1;
        }
        for g in w {
            if let Some(n) = need.get_mut(g) {
                if *n > 0 {
                    *n -= 1;
                }
            }
        }
        need.values().all(|n| *n == 0)
    }

    fn cofactor(&self, w: &[Gen]) -> Word {
        let mut need: BTreeMap<Gen, usize> = BTreeMap::new();
        for g in &self.lead {
            *need.entry(*g).or_default() += 1;
        }
        let mut out = Word::new();
        for g in w {
            match need.get_mut(g) {
                Some(n) if *n > 0 => *n -= 1,
                _ => out.push(*g),
            }
        }
        out
    }
}

const DEFAULT_BUDGET: usize = 5_000_000;
const MAX_DEPTH: usize = 1_500;

struct Ctx {
    steps: usize,
    budget: usize,
}

/// An oriented rewriting system with memoised left multiplication.
///
/// Normal forms are computed by multiplying generators onto already normal
/// words from the right end: in `g·u` with `u` normal every redex is a
/// prefix, so the memo key is `(g, u)`.
pub struct RewriteSystem {
    order: TermOrder,
    rules: Vec<Rule>,
    by_prefix: HashMap<(Gen, Option<Gen>), Vec<usize>>,
    reductions: HashMap<u8, CentralReduction>,
    budget: usize,
    memo: DashMap<(Gen, Word), NcPoly>,
    seg_memo: DashMap<Word, NcPoly>,
}

impl std::fmt::Debug for RewriteSystem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("RewriteSystem").field("rules", &self.rules.len()).finish()
    }
}

/// An overlap ambiguity that did not resolve.
#[derive(Clone, Debug)]
pub struct OverlapFailure {
    pub word: Word,
    pub detail: String,
}

impl RewriteSystem {
    /// Builds a system, refusing rules that do not decrease `order`.
    pub fn new(order: TermOrder, rules: Vec<Rule>, reductions: Vec<CentralReduction>) -> Result<Self, RewriteError> {
        for r in &rules {
            for (w, _) in r.rhs.terms() {
                if order.cmp(w, &r.lhs) != Ordering::Less {
                    return Err(RewriteError::NotDecreasing(format!("{:?} -> {:?}", r.lhs, r.rhs)));
                }
            }
        }
        Ok(Self::unchecked(order, rules, reductions))
    }

    /// Builds a system without checking orientation (for diagnosing bad rule sets).
    pub fn unchecked(order: TermOrder, rules: Vec<Rule>, reductions: Vec<CentralReduction>) -> Self {
        let mut by_prefix: HashMap<(Gen, Option<Gen>), Vec<usize>> = HashMap::new();
        for (i, r) in rules.iter().enumerate() {
            by_prefix.entry((r.lhs[0], r.lhs.get(1).copied())).or_default().push(i);
        }
        RewriteSystem {
            order,
            rules,
            by_prefix,
            reductions: reductions.into_iter().map(|r| (r.slot, r)).collect(),
            budget: DEFAULT_BUDGET,
            memo: DashMap::new(),
            seg_memo: DashMap::new(),
        }
    }

    pub fn with_budget(mut self, budget: usize) -> Self {
        self.budget = budget;
        self
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn reductions(&self) -> impl Iterator<Item = &CentralReduction> {
        self.reductions.values()
    }

    /// Normal form; panics with a diagnostic if the step budget is exhausted.
    pub fn normal_form(&self, p: &NcPoly) -> NcPoly {
        self.try_normal_form(p).unwrap_or_else(|e| panic!("{}", e))
    }

    pub fn try_normal_form(&self, p: &NcPoly) -> Result<NcPoly, RewriteError> {
        let mut ctx = Ctx { steps: 0, budget: self.budget };
        let mut out = NcPoly::zero();
        for (w, c) in p.terms() {
            let n = self.nf_word(w, &mut ctx, 0)?;
            let n = self.central(&n, &mut ctx)?;
            out.add_scaled(&n, c);
        }
        Ok(out)
    }

    /// Subword normal form of a single word.
    fn nf_word(&self, w: &[Gen], ctx: &mut Ctx, depth: usize) -> Result<NcPoly, RewriteError> {
        let mut cur = NcPoly::from_word(Word::new());
        for &g in w.iter().rev() {
            let mut next = NcPoly::zero();
            for (u, c) in cur.terms() {
                let r = self.lmul(g, u, ctx, depth + 1)?;
                next.add_scaled(&r, c);
            }
            cur = next;
        }
        Ok(cur)
    }

    /// Normal form of `g·u` for a subword-normal word `u`.
    fn lmul(&self, g: Gen, u: &Word, ctx: &mut Ctx, depth: usize) -> Result<NcPoly, RewriteError> {
        let key = (g, u.clone());
        if let Some(hit) = self.memo.get(&key) {
            return Ok(hit.value().clone());
        }
        if depth > MAX_DEPTH {
            return Err(RewriteError::Depth(format!("{:?}", u)));
        }
        let matches = |key: (Gen, Option<Gen>)| {
            self.by_prefix.get(&key).and_then(|ids| {
                ids.iter().map(|&i| &self.rules[i]).find(|r| r.lhs.len() - 1 <= u.len() && r.lhs[1..] == u[..r.lhs.len() - 1])
            })
        };
        let rule = u.first().and_then(|&h| matches((g, Some(h)))).or_else(|| matches((g, None)));
        let result = match rule {
            None => {
                let mut w = Word::with_capacity(u.len() + 1);
                w.push(g);
                w.extend_from_slice(u);
                NcPoly::from_word(w)
            }
            Some(rule) => {
                ctx.steps += 1;
                if ctx.steps > ctx.budget {
                    return Err(RewriteError::Budget(ctx.budget, format!("{:?}", u)));
                }
                let rest: Word = u[rule.lhs.len() - 1..].iter().copied().collect();
                let mut out = NcPoly::zero();
                for (w, c) in rule.rhs.terms() {
                    let mut cur = NcPoly::from_word(rest.clone());
                    for &h in w.iter().rev() {
                        let mut next = NcPoly::zero();
                        for (x, cx) in cur.terms() {
                            let r = self.lmul(h, x, ctx, depth + 1)?;
                            next.add_scaled(&r, cx);
                        }
                        cur = next;
                    }
                    out.add_scaled(&cur, c);
                }
                out
            }
        };
        self.memo.insert(key, result.clone());
        Ok(result)
    }

    /// Applies the per-slot central reductions to a subword-normal polynomial.
    fn central(&self, p: &NcPoly, ctx: &mut Ctx) -> Result<NcPoly, RewriteError> {
        if self.reductions.is_empty() {
            return Ok(p.clone());
        }
        let mut out = NcPoly::zero();
        for (w, c) in p.terms() {
            let mut acc = NcPoly::one();
            let mut start = 0;
            while start < w.len() {
                let slot = w[start].slot;
                let mut end = start;
                while end < w.len() && w[end].slot == slot {
                    end += 1;
                }
                let seg: Word = w[start..end].iter().copied().collect();
                let red = match self.reductions.get(&slot) {
                    Some(r) => self.reduce_segment(r, &seg, ctx, 0)?,
                    None => NcPoly::from_word(seg),
                };
                acc = &acc * &red;
                start = end;
            }
            out.add_scaled(&acc, c);
        }
        Ok(out)
    }

    fn reduce_segment(&self, red: &CentralReduction, seg: &Word, ctx: &mut Ctx, depth: usize) -> Result<NcPoly, RewriteError> {
        if !red.divides(seg) {
            return Ok(NcPoly::from_word(seg.clone()));
        }
        if let Some(hit) = self.seg_memo.get(seg) {
            return Ok(hit.value().clone());
        }
        if depth > MAX_DEPTH {
            return Err(RewriteError::Depth(format!("{:?}", seg)));
        }
        let cof = NcPoly::from_word(red.cofactor(seg));
        let prod = self.nf_word_poly(&(&cof * &red.relation), ctx, depth)?;
        let c = prod.coeff(seg);
        if c.is_zero() {
            return Err(RewriteError::Central(format!("{:?}", seg)));
        }
        // cof·rel = c·seg + rest ≡ 0, so seg ≡ -rest / c.
        let mut rest = prod;
        rest.add_term(seg.clone(), &-c.clone());
        let f = -c.inv().unwrap();
        let mut out = NcPoly::zero();
        for (w, x) in rest.terms() {
            let r = self.reduce_segment(red, w, ctx, depth + 1)?;
            out.add_scaled(&r, &(x * &f));
        }
        self.seg_memo.insert(seg.clone(), out.clone());
        Ok(out)
    }

    fn nf_word_poly(&self, p: &NcPoly, ctx: &mut Ctx, depth: usize) -> Result<NcPoly, RewriteError> {
        let mut out = NcPoly::zero();
        for (w, c) in p.terms() {
            out.add_scaled(&self.nf_word(w, ctx, depth)?, c);
        }
        Ok(out)
    }

    /// True when no rule applies and no central reduction divides a segment.
    pub fn is_normal_word(&self, w: &[Gen]) -> bool {
        for r in &self.rules {
            if r.lhs.len() <= w.len() && w.windows(r.lhs.len()).any(|s| s == r.lhs.as_slice()) {
                return false;
            }
        }
        if !self.reductions.is_empty() {
            let mut start = 0;
            while start < w.len() {
                let slot = w[start].slot;
                let mut end = start;
                while end < w.len() && w[end].slot == slot {
                    end += 1;
                }
                if let Some(r) = self.reductions.get(&slot) {
                    if r.divides(&w[start..end]) {
                        return false;
                    }
                }
                start = end;
            }
        }
        true
    }

    /// All normal words over `alphabet` of length at most `max_len`, shortest first.
    pub fn normal_words(&self, alphabet: &[Gen], max_len: usize) -> Vec<Word> {
        let mut out = vec![Word::new()];
        let mut layer = vec![Word::new()];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for w in &layer {
                for &g in alphabet {
                    let mut x = w.clone();
                    x.push(g);
                    if self.is_normal_word(&x) {
                        next.push(x);
                    }
                }
            }
            next.sort();
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }

    /// Resolves every overlap and inclusion ambiguity between rule leading words
    /// whose ambiguity word has length at most `degree`.
    pub fn confluence_check(&self, degree: usize) -> Vec<OverlapFailure> {
        let mut failures = Vec::new();
        let n = self.rules.len();
        for i in 0..n {
            for j in 0..n {
                let l1 = &self.rules[i].lhs;
                let l2 = &self.rules[j].lhs;
                for k in 1..l1.len().min(l2.len()) {
                    if l1[l1.len() - k..] == l2[..k] {
                        let mut w = l1.clone();
                        w.extend_from_slice(&l2[k..]);
                        if w.len() <= degree {
                            if let Some(f) = self.resolve(&w, (i, 0), (j, l1.len() - k)) {
                                failures.push(f);
                            }
                        }
                    }
                }
                if i != j && l2.len() <= l1.len() && l1.len() <= degree {
                    for p in 0..=l1.len() - l2.len() {
                        if l1[p..p + l2.len()] == l2[..] {
                            if let Some(f) = self.resolve(l1, (i, 0), (j, p)) {
                                failures.push(f);
                            }
                        }
                    }
                }
            }
        }
        failures
    }

    fn apply_at(&self, w: &Word, rule: usize, pos: usize) -> NcPoly {
        let r = &self.rules[rule];
        let pre = NcPoly::from_word(w[..pos].iter().copied().collect());
        let post = NcPoly::from_word(w[pos + r.lhs.len()..].iter().copied().collect());
        &(&pre * &r.rhs) * &post
    }

    fn resolve(&self, w: &Word, a: (usize, usize), b: (usize, usize)) -> Option<OverlapFailure> {
        let left = self.try_normal_form(&self.apply_at(w, a.0, a.1));
        let right = self.try_normal_form(&self.apply_at(w, b.0, b.1));
        match (left, right) {
            (Ok(x), Ok(y)) if x == y => None,
            (Ok(x), Ok(y)) => Some(OverlapFailure { word: w.clone(), detail: format!("{:?} != {:?}", x, y) }),
            (Err(e), _) | (_, Err(e)) => Some(OverlapFailure { word: w.clone(), detail: e.to_string() }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::{word, Alphabet};

    fn quantum_plane() -> (Alphabet, RewriteSystem) {
        let al = Alphabet::single(&["a", "b"]);
        let order = TermOrder::new();
        let rel = al.parse("b*a + (-1*v^2)*a*b").unwrap();
        let sys = RewriteSystem::new(order.clone(), vec![Rule::orient(&rel, &order).unwrap()], vec![]).unwrap();
        (al, sys)
    }

    #[test]
    fn straightens_quantum_plane() {
        let (al, sys) = quantum_plane();
        let p = al.parse("b*a").unwrap();
        assert_eq!(al.format(&sys.normal_form(&p)), "(v^2)*a*b");
        let p = al.parse("b*b*a").unwrap();
        assert_eq!(al.format(&sys.normal_form(&p)), "(v^4)*a*b*b");
        assert!(sys.confluence_check(4).is_empty());
        assert_eq!(sys.normal_words(&al.gens(), 3).len(), 1 + 2 + 3 + 4);
    }

    #[test]
    fn central_reduction_of_a_commutative_hyperbola() {
        // a*b = b*a, a*b = 1: normal words are a^i and b^j.
        let al = Alphabet::single(&["a", "b"]);
        let order = TermOrder::new();
        let rel = al.parse("b*a + -1*a*b").unwrap();
        let red = CentralReduction { slot: 0, lead: word(&[(0, 0), (0, 1)]), relation: al.parse("a*b + -1").unwrap() };
        let sys = RewriteSystem::new(order.clone(), vec![Rule::orient(&rel, &order).unwrap()], vec![red]).unwrap();
        let p = al.parse("b*a*a*b*b + a").unwrap();
        assert_eq!(al.format(&sys.normal_form(&p)), "a + b");
        assert!(!sys.is_normal_word(&word(&[(0, 0), (0, 1)])));
    }

    #[test]
    fn looping_rules_hit_the_budget() {
        let al = Alphabet::single(&["a", "b"]);
        let r1 = Rule::new(word(&[(0, 1), (0, 0)]), al.parse("a*b").unwrap());
        let r2 = Rule::new(word(&[(0, 0), (0, 1)]), al.parse("(2)*b*a").unwrap());
        assert!(RewriteSystem::new(TermOrder::new(), vec![r1.clone(), r2.clone()], vec![]).is_err());
        let sys = RewriteSystem::unchecked(TermOrder::new(), vec![r1, r2], vec![]).with_budget(10_000);
        assert!(sys.try_normal_form(&al.parse("b*a").unwrap()).is_err());
        assert!(!sys.confluence_check(3).is_empty());
    }

    #[test]
    fn orient_needs_unit_lead() {
        let al = Alphabet::single(&["a", "b"]);
        let rel = al.parse("(v^2 + 1)*b*a + a*b").unwrap();
        assert!(matches!(Rule::orient(&rel, &TermOrder::new()), Err(RewriteError::NonUnitLead(_))));
    }
}
