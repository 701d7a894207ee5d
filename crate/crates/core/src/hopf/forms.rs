use std::collections::HashMap;
use std::sync::Arc;

use dashmap::DashMap;

use super::algebra::Algebra;
use super::maps::HopfMap;
use crate::freealg::{Gen, NcPoly, Word};
use crate::scalars::Scalar;

/// A bilinear form on a pair of algebras, evaluated on words.
///
/// Words need not be normal: every implementation here is defined through
/// products, coproducts, counits and antipodes of words, all of which are
/// computed letter by letter.
pub trait Form: Send + Sync {
    fn name(&self) -> String;
    fn left(&self) -> &Arc<Algebra>;
    fn right(&self) -> &Arc<Algebra>;
    fn eval_words(&self, x: &[Gen], y: &[Gen]) -> Scalar;

    fn eval(&self, x: &NcPoly, y: &NcPoly) -> Scalar {
        let mut acc = Scalar::zero();
        for (wx, cx) in x.terms() {
            for (wy, cy) in y.terms() {
                let v = self.eval_words(wx, wy);
                if !v.is_zero() {
                    acc = &acc + &(&v * &(cx * cy));
                }
            }
        }
        acc
    }

    /// `F(x, ·)` against a polynomial on the right only.
    fn eval_word_poly(&self, x: &[Gen], y: &NcPoly) -> Scalar {
        let mut acc = Scalar::zero();
        for (wy, cy) in y.terms() {
            let v = self.eval_words(x, wy);
            if !v.is_zero() {
                acc = &acc + &(&v * cy);
            }
        }
        acc
    }

    /// `F(·, y)` against a polynomial on the left only.
    fn eval_poly_word(&self, x: &NcPoly, y: &[Gen]) -> Scalar {
        let mut acc = Scalar::zero();
        for (wx, cx) in x.terms() {
            let v = self.eval_words(wx, y);
            if !v.is_zero() {
                acc = &acc + &(&v * cx);
            }
        }
        acc
    }
}

pub type FormRef = Arc<dyn Form>;

fn key(x: &[Gen], y: &[Gen]) -> (Word, Word) {
    (x.iter().copied().collect(), y.iter().copied().collect())
}

/// A skew pairing on `(A, H)` determined by its values on generator pairs,
/// extended by
///   τ(bc, u) = Σ τ(b, u1) τ(c, u2),   τ(b, uv) = Σ τ(b1, v) τ(b2, u),
///   τ(1, u) = ε(u),  τ(a, 1) = ε(a).
/// The left argument is split first; a single left generator splits the right
/// argument. Whether the table is consistent with the relations is checked
/// separately (see `verify_skew_pairing`).
pub struct SkewPairing {
    name: String,
    left: Arc<Algebra>,
    right: Arc<Algebra>,
    table: HashMap<(Gen, Gen), Scalar>,
    memo: DashMap<(Word, Word), Scalar>,
}

impl SkewPairing {
    pub fn new(name: impl Into<String>, left: Arc<Algebra>, right: Arc<Algebra>, table: HashMap<(Gen, Gen), Scalar>) -> Self {
        let table = table.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        SkewPairing { name: name.into(), left, right, table, memo: DashMap::new() }
    }

    pub fn table(&self) -> &HashMap<(Gen, Gen), Scalar> {
        &self.table
    }

    pub fn entry(&self, a: Gen, b: Gen) -> Scalar {
        self.table.get(&(a, b)).cloned().unwrap_or_else(Scalar::zero)
    }
}

impl Form for SkewPairing {
    fn name(&self) -> String {
        self.name.clone()
    }
    fn left(&self) -> &Arc<Algebra> {
        &self.left
    }
    fn right(&self) -> &Arc<Algebra> {
        &self.right
    }

    fn eval_words(&self, x: &[Gen], y: &[Gen]) -> Scalar {
        if x.is_empty() {
            return self.right.counit_word(y);
        }
        if y.is_empty() {
            return self.left.counit_word(x);
        }
        if x.len() == 1 && y.len() == 1 {
            return self.entry(x[0], y[0]);
        }
        let k = key(x, y);
        if let Some(hit) = self.memo.get(&k) {
            return hit.value().clone();
        }
        let mut acc = Scalar::zero();
        if x.len() >= 2 {
            let g = &x[..1];
            let rest = &x[1..];
            for (y1, y2, c) in self.right.sweedler(y).iter() {
                let a = self.eval_words(g, y1);
                if a.is_zero() {
                    continue;
                }
                let b = self.eval_words(rest, y2);
                if !b.is_zero() {
                    acc = &acc + &(&(&a * &b) * c);
                }
            }
        } else {
            let h = &y[..1];
            let rest = &y[1..];
            for (x1, x2, c) in self.left.sweedler(x).iter() {
                let a = self.eval_words(x1, rest);
                if a.is_zero() {
                    continue;
                }
                let b = self.eval_words(x2, h);
                if !b.is_zero() {
                    acc = &acc + &(&(&a * &b) * c);
                }
            }
        }
        self.memo.insert(k, acc.clone());
        acc
    }
}

/// `F_21(a, b) = F(b, a)`.
pub struct Transposed(pub FormRef);

impl Form for Transposed {
    fn name(&self) -> String {
        format!("{}_21", self.0.name())
    }
    fn left(&self) -> &Arc<Algebra> {
        self.0.right()
    }
    fn right(&self) -> &Arc<Algebra> {
        self.0.left()
    }
    fn eval_words(&self, x: &[Gen], y: &[Gen]) -> Scalar {
        self.0.eval_words(y, x)
    }
}

/// The convolution inverse of a skew pairing: τ^{-1}(a, u) = τ(S a, u).
pub struct InverseViaAntipode {
    inner: FormRef,
    memo: DashMap<(Word, Word), Scalar>,
}

impl InverseViaAntipode {
    pub fn new(inner: FormRef) -> Self {
        InverseViaAntipode { inner, memo: DashMap::new() }
    }
}

impl Form for InverseViaAntipode {
    fn name(&self) -> String {
        format!("{}^-1", self.inner.name())
    }
    fn left(&self) -> &Arc<Algebra> {
        self.inner.left()
    }
    fn right(&self) -> &Arc<Algebra> {
        self.inner.right()
    }
    fn eval_words(&self, x: &[Gen], y: &[Gen]) -> Scalar {
        let k = key(x, y);
        if let Some(hit) = self.memo.get(&k) {
            return hit.value().clone();
        }
        let s = self.inner.left().antipode_word(x);
        let v = self.inner.eval_poly_word(&s, y);
        self.memo.insert(k, v.clone());
        v
    }
}

/// ε ⊗ ε.
pub struct Trivial {
    left: Arc<Algebra>,
    right: Arc<Algebra>,
}

impl Trivial {
    pub fn new(left: Arc<Algebra>, right: Arc<Algebra>) -> Self {
        Trivial { left, right }
    }
}

impl Form for Trivial {
    fn name(&self) -> String {
        "eps(x)eps".into()
    }
    fn left(&self) -> &Arc<Algebra> {
        &self.left
    }
    fn right(&self) -> &Arc<Algebra> {
        &self.right
    }
    fn eval_words(&self, x: &[Gen], y: &[Gen]) -> Scalar {
        &self.left.counit_word(x) * &self.right.counit_word(y)
    }
}

/// Splits a word of a two-block tensor product at slot `k`; `None` if the
/// word is not block-sorted.
fn split_blocks(w: &[Gen], k: u8) -> Option<(Word, Word)> {
    let cut = w.iter().position(|g| g.slot >= k).unwrap_or(w.len());
    if w[cut..].iter().any(|g| g.slot < k) {
        return None;
    }
    Some((w[..cut].iter().copied().collect(), w[cut..].iter().map(|g| g.with_slot(g.slot - k)).collect()))
}

/// Evaluates a form defined on block-sorted words by normalising unsorted ones.
fn eval_sorted(alg: &Algebra, alg_r: &Algebra, x: &[Gen], y: &[Gen], f: &dyn Fn(&[Gen], &[Gen]) -> Scalar, k: u8) -> Scalar {
    let sorted = |w: &[Gen]| split_blocks(w, k).is_some();
    if sorted(x) && sorted(y) {
        return f(x, y);
    }
    let px = alg.nf(&NcPoly::from_word(x.iter().copied().collect()));
    let py = alg_r.nf(&NcPoly::from_word(y.iter().copied().collect()));
    let mut acc = Scalar::zero();
    for (wx, cx) in px.terms() {
        for (wy, cy) in py.terms() {
            acc = &acc + &(&f(wx, wy) * &(cx * cy));
        }
    }
    acc
}

/// On a tensor product B ⊗ H (B occupying the first `k` slots):
/// [τ](b ⊗ g, c ⊗ h) = ε(b) ε(h) τ(c, g), for a skew pairing τ on (B, H).
pub struct Bracket {
    tau: FormRef,
    alg: Arc<Algebra>,
    k: u8,
}

impl Bracket {
    pub fn new(tau: FormRef, alg: Arc<Algebra>) -> Self {
        let k = tau.left().slots() as u8;
        Bracket { tau, alg, k }
    }

    /// [τ]^{-1} = [τ^{-1}].
    pub fn inverse(&self) -> Bracket {
        let inv: FormRef = Arc::new(InverseViaAntipode::new(self.tau.clone()));
        Bracket { tau: inv, alg: self.alg.clone(), k: self.k }
    }
}

impl Form for Bracket {
    fn name(&self) -> String {
        format!("[{}]", self.tau.name())
    }
    fn left(&self) -> &Arc<Algebra> {
        &self.alg
    }
    fn right(&self) -> &Arc<Algebra> {
        &self.alg
    }
    fn eval_words(&self, x: &[Gen], y: &[Gen]) -> Scalar {
        let k = self.k;
        let f = |x: &[Gen], y: &[Gen]| {
            let (xb, xh) = split_blocks(x, k).unwrap();
            let (yb, yh) = split_blocks(y, k).unwrap();
            let e = &self.tau.left().counit_word(&xb) * &self.tau.right().counit_word(&yh);
            if e.is_zero() {
                return e;
            }
            &e * &self.tau.eval_words(&yb, &xh)
        };
        eval_sorted(&self.alg, &self.alg, x, y, &f, k)
    }
}

/// (F0, F1) on A0 ⊗ A1: the product of the factor forms.
pub struct TensorForm {
    f0: FormRef,
    f1: FormRef,
    alg: Arc<Algebra>,
    k: u8,
}

impl TensorForm {
    pub fn new(f0: FormRef, f1: FormRef, alg: Arc<Algebra>) -> Self {
        let k = f0.left().slots() as u8;
        TensorForm { f0, f1, alg, k }
    }
}

impl Form for TensorForm {
    fn name(&self) -> String {
        format!("({}, {})", self.f0.name(), self.f1.name())
    }
    fn left(&self) -> &Arc<Algebra> {
        &self.alg
    }
    fn right(&self) -> &Arc<Algebra> {
        &self.alg
    }
    fn eval_words(&self, x: &[Gen], y: &[Gen]) -> Scalar {
        let k = self.k;
        let f = |x: &[Gen], y: &[Gen]| {
            let (x0, x1) = split_blocks(x, k).unwrap();
            let (y0, y1) = split_blocks(y, k).unwrap();
            let a = self.f0.eval_words(&x0, &y0);
            if a.is_zero() {
                return a;
            }
            &a * &self.f1.eval_words(&x1, &y1)
        };
        eval_sorted(&self.alg, &self.alg, x, y, &f, k)
    }
}

/// (F * G)(x, y) = Σ F(x1, y1) G(x2, y2).
pub struct Convolution {
    f: FormRef,
    g: FormRef,
    memo: DashMap<(Word, Word), Scalar>,
}

impl Convolution {
    pub fn new(f: FormRef, g: FormRef) -> Self {
        Convolution { f, g, memo: DashMap::new() }
    }
}

impl Form for Convolution {
    fn name(&self) -> String {
        format!("{} * {}", self.f.name(), self.g.name())
    }
    fn left(&self) -> &Arc<Algebra> {
        self.f.left()
    }
    fn right(&self) -> &Arc<Algebra> {
        self.f.right()
    }
    fn eval_words(&self, x: &[Gen], y: &[Gen]) -> Scalar {
        let k = key(x, y);
        if let Some(hit) = self.memo.get(&k) {
            return hit.value().clone();
        }
        let sx = self.f.left().sweedler(x);
        let sy = self.f.right().sweedler(y);
        let mut acc = Scalar::zero();
        for (x1, x2, cx) in sx.iter() {
            for (y1, y2, cy) in sy.iter() {
                let a = self.f.eval_words(x1, y1);
                if a.is_zero() {
                    continue;
                }
                let b = self.g.eval_words(x2, y2);
                if !b.is_zero() {
                    acc = &acc + &(&(&a * &b) * &(cx * cy));
                }
            }
        }
        self.memo.insert(k, acc.clone());
        acc
    }
}

/// σ'(x, y) = σ(φ x, ψ y).
pub struct Pullback {
    sigma: FormRef,
    phi: Arc<HopfMap>,
    psi: Arc<HopfMap>,
    memo: DashMap<(Word, Word), Scalar>,
}

impl Pullback {
    pub fn new(sigma: FormRef, phi: Arc<HopfMap>, psi: Arc<HopfMap>) -> Self {
        Pullback { sigma, phi, psi, memo: DashMap::new() }
    }
}

impl Form for Pullback {
    fn name(&self) -> String {
        format!("{}^*({})", self.phi.name(), self.sigma.name())
    }
    fn left(&self) -> &Arc<Algebra> {
        self.phi.source()
    }
    fn right(&self) -> &Arc<Algebra> {
        self.psi.source()
    }
    fn eval_words(&self, x: &[Gen], y: &[Gen]) -> Scalar {
        let k = key(x, y);
        if let Some(hit) = self.memo.get(&k) {
            return hit.value().clone();
        }
        let v = self.sigma.eval(&self.phi.apply_word(x), &self.psi.apply_word(y));
        self.memo.insert(k, v.clone());
        v
    }
}

/// A form given by a closure (used for forms defined by explicit formulas).
pub struct FnForm<F: Fn(&[Gen], &[Gen]) -> Scalar + Send + Sync> {
    name: String,
    left: Arc<Algebra>,
    right: Arc<Algebra>,
    f: F,
    memo: DashMap<(Word, Word), Scalar>,
}

impl<F: Fn(&[Gen], &[Gen]) -> Scalar + Send + Sync> FnForm<F> {
    pub fn new(name: impl Into<String>, left: Arc<Algebra>, right: Arc<Algebra>, f: F) -> Self {
        FnForm { name: name.into(), left, right, f, memo: DashMap::new() }
    }
}

impl<F: Fn(&[Gen], &[Gen]) -> Scalar + Send + Sync> Form for FnForm<F> {
    fn name(&self) -> String {
        self.name.clone()
    }
    fn left(&self) -> &Arc<Algebra> {
        &self.left
    }
    fn right(&self) -> &Arc<Algebra> {
        &self.right
    }
    fn eval_words(&self, x: &[Gen], y: &[Gen]) -> Scalar {
        let k = key(x, y);
        if let Some(hit) = self.memo.get(&k) {
            return hit.value().clone();
        }
        let v = (self.f)(x, y);
        self.memo.insert(k, v.clone());
        v
    }
}
