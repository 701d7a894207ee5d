use std::sync::Arc;

use dashmap::DashMap;

use super::DoubleAlgebra;
use crate::freealg::{Gen, NcPoly, Word};
use crate::hopf::{
    compare_forms, pairs_up_to, verify_braided_commutativity, verify_skew_pairing, Algebra, Bracket, Convolution, FnForm, Form, FormRef,
    HopfMap, InverseViaAntipode, TensorForm, Transposed,
};
use crate::qgroups::QgError;
use crate::report::Suite;
use crate::scalars::Scalar;

/// γ(a ⊗ b, y) = Σ β(a, m(y1)) β⁻¹(m(y2), b) on the double.
pub struct GammaForm {
    alg: Arc<Algebra>,
    beta: FormRef,
    beta_inv: FormRef,
    m: Arc<HopfMap>,
    memo: DashMap<(Word, Word), Scalar>,
}

impl GammaForm {
    pub fn new(d: &DoubleAlgebra) -> Result<GammaForm, QgError> {
        Ok(GammaForm {
            alg: d.alg.clone(),
            beta: d.group.beta.clone(),
            beta_inv: d.group.beta_inv.clone(),
            m: d.map_m()?.clone(),
            memo: DashMap::new(),
        })
    }

    fn eval_canonical(&self, x: &[Gen], y: &[Gen]) -> Scalar {
        let cut = x.iter().position(|g| g.slot == 1).unwrap_or(x.len());
        let a = &x[..cut];
        let b: Word = x[cut..].iter().map(|g| g.with_slot(0)).collect();
        let mut acc = Scalar::zero();
        for (y1, y2, c) in self.alg.sweedler(y).iter() {
            let s = self.beta.eval_word_poly(a, &self.m.apply_word(y1));
            if s.is_zero() {
                continue;
            }
            let t = self.beta_inv.eval_poly_word(&self.m.apply_word(y2), &b);
            if !t.is_zero() {
                acc = &acc + &(&(&s * &t) * c);
            }
        }
        acc
    }
}

impl Form for GammaForm {
    fn name(&self) -> String {
        "gamma".into()
    }
    fn left(&self) -> &Arc<Algebra> {
        &self.alg
    }
    fn right(&self) -> &Arc<Algebra> {
        &self.alg
    }
    fn eval_words(&self, x: &[Gen], y: &[Gen]) -> Scalar {
        let key: (Word, Word) = (x.iter().copied().collect(), y.iter().copied().collect());
        if let Some(hit) = self.memo.get(&key) {
            return hit.value().clone();
        }
        let nx = self.alg.nf(&NcPoly::from_word(key.0.clone()));
        let mut acc = Scalar::zero();
        for (w, c) in nx.terms() {
            let v = self.eval_canonical(w, y);
            if !v.is_zero() {
                acc = &acc + &(&v * c);
            }
        }
        self.memo.insert(key, acc.clone());
        acc
    }
}

/// [β]₂₁ * (β, β₂₁⁻¹) * [β]⁻¹, evaluated on A ⊗ A. Canonical words of the
/// double are words of A ⊗ A with the same coproduct, so the two forms can be
/// compared word by word.
pub fn gamma_convolution(d: &DoubleAlgebra) -> FormRef {
    let g = d.group;
    let pres = d.a().factor(0).clone();
    let t = Algebra::tensor(vec![pres.clone(), pres]);
    let bracket = Bracket::new(g.beta.clone(), t.clone());
    let bracket_inv: FormRef = Arc::new(bracket.inverse());
    let bracket: FormRef = Arc::new(bracket);
    let b21: FormRef = Arc::new(Transposed(bracket));
    let inv21: FormRef = Arc::new(Transposed(g.beta_inv.clone()));
    let pair: FormRef = Arc::new(TensorForm::new(g.beta.clone(), inv21, t));
    let left: FormRef = Arc::new(Convolution::new(b21, pair));
    Arc::new(Convolution::new(left, bracket_inv))
}

/// γ′(x, y) = ⟨θ(x), m(y)⟩ through the evaluation pairing of U_q and A.
pub fn gamma_prime(d: &DoubleAlgebra) -> Result<FormRef, QgError> {
    let theta = d.map_theta()?.clone();
    let m = d.map_m()?.clone();
    let pairing = d.group.pairing_form();
    Ok(Arc::new(FnForm::new("gamma'", d.alg.clone(), d.alg.clone(), move |x: &[Gen], y: &[Gen]| {
        pairing.eval(&theta.apply_word(x), &m.apply_word(y))
    })))
}

/// The braiding suite: skew-pairing axioms and braided commutativity for γ,
/// and agreement of γ with the convolution form and with γ′.
pub fn verify_braiding(d: &DoubleAlgebra, degree: usize) -> Result<Suite, QgError> {
    let gamma: FormRef = Arc::new(GammaForm::new(d)?);
    let gamma_inv: FormRef = Arc::new(InverseViaAntipode::new(gamma.clone()));
    let mut suite = Suite::new(format!("braiding[sl{}]", d.n));
    suite.extend(verify_skew_pairing(&gamma, &gamma_inv, degree));
    let words = d.alg.normal_words(degree);
    let gens = d.alg.normal_words(1);
    let gen_pairs = pairs_up_to(&gens, 2);
    let pairs = pairs_up_to(&words, degree.max(2));
    suite.record(
        format!("braided commutativity ({} pairs)", pairs.len()),
        verify_braided_commutativity(gamma.as_ref(), &pairs),
    );
    let conv = gamma_convolution(d);
    suite.record(format!("gamma = [beta]21 * (beta, beta21^-1) * [beta]^-1 ({} pairs)", gen_pairs.len()), compare_forms(gamma.as_ref(), conv.as_ref(), &gen_pairs));
    let prime = gamma_prime(d)?;
    suite.record(format!("gamma = gamma' ({} pairs)", pairs.len()), compare_forms(gamma.as_ref(), prime.as_ref(), &pairs));
    // On slot 0 alone γ collapses to β.
    let a = d.a();
    let mut bad = None;
    for x in a.gens() {
        for y in a.gens() {
            let got = gamma.eval_words(&[x], &[y]);
            let want = d.group.beta.eval_words(&[x], &[y]);
            if got != want {
                bad = Some(format!("({}, {}): {} != {}", a.format_word(&[x]), a.format_word(&[y]), got, want));
            }
        }
    }
    suite.record("gamma(a(x)1, a'(x)1) = beta(a, a')", bad);
    Ok(suite)
}
