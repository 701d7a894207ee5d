use std::collections::HashMap;
use std::sync::Arc;

use super::cartan::{CartanDatum, Weight};
use super::oq::t;
use super::uq::UqLayout;
use super::QgError;
use crate::freealg::{Gen, NcPoly, Word};
use crate::hopf::{Algebra, Form, FormRef, HopfMap};
use crate::scalars::linalg::solve_linear;
use crate::scalars::{Scalar, SparseVec};

/// l⁺(x) = β(x, ·) and l⁻(y) = β⁻¹(·, y), realised inside U_q(sl_n) and
/// read as maps into U_q(sl_n)^cop.
pub struct LMaps {
    pub plus: Arc<HopfMap>,
    pub minus: Arc<HopfMap>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// The value the functional attached to `x` must take on `y`.
fn target(sign: Sign, beta: &dyn Form, beta_inv: &dyn Form, x: Gen, y: &[Gen]) -> Scalar {
    match sign {
        Sign::Plus => beta.eval_words(&[x], y),
        Sign::Minus => beta_inv.eval_words(y, &[x]),
    }
}

/// The weight μ with ⟨k_μ, t_kk⟩ = value(k) for every k, searched in a small box.
fn diagonal_weight(d: &CartanDatum, values: &[Scalar]) -> Option<Weight> {
    let vw = d.vector_weights();
    let span = -4..=4i64;
    let mut cands: Vec<Weight> = vec![vec![]];
    for _ in 0..d.rank {
        cands = cands.into_iter().flat_map(|c| span.clone().map(move |x| [c.clone(), vec![x]].concat())).collect();
    }
    cands.into_iter().find(|mu| vw.iter().zip(values).all(|(w, v)| Scalar::from(d.q_power(mu, w)) == *v))
}

/// Normal words in the e's (or the f's) of length at most `max_len`.
fn triangular_words(u: &Algebra, gens: &[Gen], max_len: usize) -> Vec<Word> {
    u.rewrite_system().normal_words(gens, max_len)
}

/// Solves l⁺ or l⁻ on every generator of C_q[SL(n)]. The ansatz is
/// (e-words or f-words of length < n) · k_μ over the weights μ read off the
/// diagonal generators, cut down to the weights the degree-one targets allow.
/// The coefficients are fixed by matching the pairing with every normal
/// monomial of degree ≤ 2 (≤ 3 if that leaves freedom) and must be unique.
pub fn solve_lmap(
    sign: Sign,
    n: usize,
    a: &Arc<Algebra>,
    u_cop: &Arc<Algebra>,
    beta: &dyn Form,
    beta_inv: &dyn Form,
    pairing: &dyn Form,
) -> Result<Arc<HopfMap>, QgError> {
    let d = CartanDatum::sl(n)?;
    let l = UqLayout { rank: d.rank };
    let mut mus: Vec<Weight> = Vec::new();
    for i in 1..=n {
        let values: Vec<Scalar> = (1..=n).map(|k| target(sign, beta, beta_inv, t(n, i, i), &[t(n, k, k)])).collect();
        let mu = diagonal_weight(&d, &values).ok_or_else(|| QgError::Solver(format!("no Cartan weight matches the diagonal of t{}{}", i, i)))?;
        if !mus.contains(&mu) {
            mus.push(mu);
        }
    }
    let es: Vec<Gen> = (0..d.rank).map(|i| l.e(i)).collect();
    let fs: Vec<Gen> = (0..d.rank).map(|i| l.f(i)).collect();
    let mut ansatz: Vec<Word> = Vec::new();
    for tri in triangular_words(u_cop, &es, n - 1).into_iter().chain(triangular_words(u_cop, &fs, n - 1)) {
        for mu in &mus {
            let mut w = tri.clone();
            w.extend(l.k_word(mu));
            if !ansatz.contains(&w) {
                ansatz.push(w);
            }
        }
    }
    let vw = d.vector_weights();
    let word_weight = |w: &Word| -> Weight { w.iter().fold(d.zero(), |acc, g| d.add(&acc, &l.gen_weight(&d, *g))) };
    let mut images = HashMap::new();
    for x in a.gens() {
        // ⟨u, t_kl⟩ ≠ 0 forces wt(u) = wt(v_k) - wt(v_l): keep only the weights the targets need.
        let mut needed: Vec<Weight> = Vec::new();
        for k in 1..=n {
            for m in 1..=n {
                if !target(sign, beta, beta_inv, x, &[t(n, k, m)]).is_zero() {
                    needed.push(d.add(&vw[k - 1], &d.neg(&vw[m - 1])));
                }
            }
        }
        let local: Vec<Word> = ansatz.iter().filter(|w| needed.contains(&word_weight(w))).cloned().collect();
        let mut solved = None;
        for depth in 2..=3 {
            let probes = a.normal_words(depth);
            let mut rows: Vec<SparseVec> = Vec::new();
            let mut rhs = Vec::new();
            for y in &probes {
                let row: SparseVec =
                    local.iter().enumerate().map(|(k, w)| (k, pairing.eval_words(w, y))).filter(|(_, v)| !v.is_zero()).collect();
                rows.push(row);
                rhs.push(target(sign, beta, beta_inv, x, y));
            }
            let sol = solve_linear(&rows, &rhs, local.len())
                .ok_or_else(|| QgError::Solver(format!("no element of the ansatz matches l{}({})", sign_str(sign), a.format_word(&[x]))))?;
            if sol.nullspace.is_empty() {
                solved = Some(sol);
                break;
            }
        }
        let sol = solved.ok_or_else(|| QgError::Solver(format!("l{}({}) is not unique on the ansatz", sign_str(sign), a.format_word(&[x]))))?;
        let img = NcPoly::from_terms(sol.particular.iter().map(|(k, c)| (local[*k].clone(), c.clone())));
        images.insert(x, img);
    }
    let name = match sign {
        Sign::Plus => "l+",
        Sign::Minus => "l-",
    };
    Ok(Arc::new(HopfMap::new(name, a.clone(), u_cop.clone(), images)))
}

fn sign_str(sign: Sign) -> &'static str {
    match sign {
        Sign::Plus => "+",
        Sign::Minus => "-",
    }
}

pub fn solve_lmaps(
    n: usize,
    a: &Arc<Algebra>,
    u_cop: &Arc<Algebra>,
    beta: &FormRef,
    beta_inv: &FormRef,
    pairing: &FormRef,
) -> Result<LMaps, QgError> {
    Ok(LMaps {
        plus: solve_lmap(Sign::Plus, n, a, u_cop, beta.as_ref(), beta_inv.as_ref(), pairing.as_ref())?,
        minus: solve_lmap(Sign::Minus, n, a, u_cop, beta.as_ref(), beta_inv.as_ref(), pairing.as_ref())?,
    })
}

/// Checks ⟨l±(x), y⟩ against the defining values for all normal words x, y
/// with |x| ≤ max_x and |y| ≤ max_y; returns the first mismatch.
pub fn check_lmap_values(
    sign: Sign,
    map: &HopfMap,
    beta: &dyn Form,
    beta_inv: &dyn Form,
    pairing: &dyn Form,
    max_x: usize,
    max_y: usize,
) -> Option<String> {
    let a = map.source();
    let xs = a.normal_words(max_x);
    let ys = a.normal_words(max_y);
    for x in &xs {
        let img = map.apply_word(x);
        for y in &ys {
            let got = pairing.eval_poly_word(&img, y);
            let want = match sign {
                Sign::Plus => beta.eval_words(x, y),
                Sign::Minus => beta_inv.eval_words(y, x),
            };
            if got != want {
                return Some(format!("x={} y={}: {} != {}", a.format_word(x), a.format_word(y), got, want));
            }
        }
    }
    None
}
