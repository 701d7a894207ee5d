use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_traits::Signed;

use super::oq::{quantum_determinant, t};
use super::QgError;
use crate::freealg::{Gen, Word};
use crate::hopf::{Algebra, Form, SkewPairing};
use crate::scalars::linalg::nullspace;
use crate::scalars::{LaurentScalar, Rat, Scalar, SparseVec};

/// Which off-diagonal entries the pairing is allowed to see: `Upper` pairs
/// t_ij with t_ji for i < j, `Lower` for i > j.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    Upper,
    Lower,
}

pub fn beta_support(n: usize, orientation: Orientation) -> Vec<(Gen, Gen)> {
    let mut out = Vec::new();
    for i in 1..=n {
        for k in 1..=n {
            out.push((t(n, i, i), t(n, k, k)));
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            let keep = match orientation {
                Orientation::Upper => i < j,
                Orientation::Lower => i > j,
            };
            if keep {
                out.push((t(n, i, j), t(n, j, i)));
            }
        }
    }
    out
}

/// The solved pairing together with the data of the solve.
pub struct BetaSolve {
    pub form: Arc<SkewPairing>,
    pub nullity: usize,
    /// The scale applied to the nullspace vector normalised at (t_11, t_11) = 1.
    pub root: Scalar,
}

/// Solves braided commutativity
///   Σ β(x_2, y_2) y_1 x_1 = Σ β(x_1, y_1) x_2 y_2
/// on generator pairs for a table supported on `beta_support`, then fixes
/// the scale by β(det_q, t_11) = 1 with the positive real n-th root.
pub fn solve_beta(alg: &Arc<Algebra>, n: usize, orientation: Orientation) -> Result<BetaSolve, QgError> {
    let support = beta_support(n, orientation);
    let index: HashMap<(Gen, Gen), usize> = support.iter().enumerate().map(|(i, p)| (*p, i)).collect();
    let gens = alg.gens();
    let mut rows: Vec<SparseVec> = Vec::new();
    for &x in &gens {
        for &y in &gens {
            let mut eqs: BTreeMap<Word, SparseVec> = BTreeMap::new();
            let sx = alg.sweedler(&[x]);
            let sy = alg.sweedler(&[y]);
            for (x1, x2, cx) in sx.iter() {
                for (y1, y2, cy) in sy.iter() {
                    let c = cx * cy;
                    if let Some(&var) = index.get(&(x2[0], y2[0])) {
                        for (w, k) in alg.mul_words(y1, x1).terms() {
                            add(eqs.entry(w.clone()).or_default(), var, &(&c * k));
                        }
                    }
                    if let Some(&var) = index.get(&(x1[0], y1[0])) {
                        for (w, k) in alg.mul_words(x2, y2).terms() {
                            add(eqs.entry(w.clone()).or_default(), var, &-(&c * k));
                        }
                    }
                }
            }
            rows.extend(eqs.into_values().filter(|r| !r.is_empty()));
        }
    }
    let null = nullspace(&rows, support.len());
    let nullity = null.len();
    if nullity != 1 {
        return Err(QgError::Solver(format!("braided commutativity leaves a {}-dimensional solution space", nullity)));
    }
    let raw = &null[0];
    let pivot = raw.get(&0).cloned().ok_or_else(|| QgError::Solver("solution vanishes on (t11, t11)".into()))?;
    let pivot_inv = pivot.inv().unwrap();
    let table0: HashMap<(Gen, Gen), Scalar> = support.iter().enumerate().map(|(i, p)| (*p, raw.get(&i).map(|c| c * &pivot_inv).unwrap_or_else(Scalar::zero))).collect();
    let probe = SkewPairing::new("β0", alg.clone(), alg.clone(), table0.clone());
    // det_q reduces to 1 in the algebra, so evaluate on its free expansion.
    let raw_det = quantum_determinant(&super::cartan::CartanDatum::sl(n)?);
    let mut value = Scalar::zero();
    for (w, c) in raw_det.terms() {
        value += &(c * &probe.eval_words(w, &[t(n, 1, 1)]));
    }
    let root = nth_root_inverse(&value, n as u32)?;
    let table = table0.into_iter().map(|(k, v)| (k, &v * &root)).collect();
    let name = match orientation {
        Orientation::Upper => "β",
        Orientation::Lower => "β'",
    };
    Ok(BetaSolve { form: Arc::new(SkewPairing::new(name, alg.clone(), alg.clone(), table)), nullity, root })
}

fn add(row: &mut SparseVec, var: usize, c: &Scalar) {
    let next = row.get(&var).cloned().unwrap_or_else(Scalar::zero) + c.clone();
    if next.is_zero() {
        row.remove(&var);
    } else {
        row.insert(var, next);
    }
}

/// λ with λ^n x = 1, for x = c v^m with c a positive rational n-th power.
fn nth_root_inverse(x: &Scalar, n: u32) -> Result<Scalar, QgError> {
    let bad = || QgError::Solver(format!("normalisation value {} has no exact {}-th root", x, n));
    let l = x.as_laurent().ok_or_else(bad)?;
    let [(m, c)] = l.terms() else { return Err(bad()) };
    if m % n as i32 != 0 || !c.is_positive() {
        return Err(bad());
    }
    let (num, den) = (c.numer(), c.denom());
    let (rn, rd) = (num.nth_root(n), den.nth_root(n));
    if rn.pow(n) != *num || rd.pow(n) != *den {
        return Err(bad());
    }
    let root = LaurentScalar::monomial(Rat::new(rd, rn), -m / n as i32);
    Ok(Scalar::from(root))
}

pub fn build_beta(alg: &Arc<Algebra>, n: usize, orientation: Orientation) -> Result<Arc<SkewPairing>, QgError> {
    Ok(solve_beta(alg, n, orientation)?.form)
}

/// β(det_q, x) = ε(x) = β(x, det_q), evaluated on the free expansion of det_q.
pub fn det_is_central_for(beta: &dyn Form, n: usize, words: &[Word]) -> Option<String> {
    let d = super::cartan::CartanDatum::sl(n).ok()?;
    let det = quantum_determinant(&d);
    let alg = beta.left().clone();
    for w in words {
        let eps = alg.counit_word(w);
        let mut l = Scalar::zero();
        let mut r = Scalar::zero();
        for (dw, c) in det.terms() {
            l += &(c * &beta.eval_words(dw, w));
            r += &(c * &beta.eval_words(w, dw));
        }
        if l != eps || r != eps {
            return Some(format!("x={}: β(det,x)={} β(x,det)={} ε(x)={}", alg.format_word(w), l, r, eps));
        }
    }
    None
}
