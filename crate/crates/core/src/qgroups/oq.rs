use std::collections::BTreeMap;
use std::sync::Arc;

use super::cartan::CartanDatum;
use super::QgError;
use crate::freealg::{CentralReduction, Gen, NcPoly, Rule, TermOrder, Word};
use crate::hopf::{Algebra, HopfPresentation, Relation};
use crate::scalars::linalg::solve_linear;
use crate::scalars::{Scalar, SparseVec};

/// Generator of C_q[SL(n)] for the matrix entry t_ij (1-based), row-major ids.
pub fn t(n: usize, i: usize, j: usize) -> Gen {
    Gen::new(0, ((i - 1) * n + (j - 1)) as u8)
}

pub fn oq_names(n: usize) -> Vec<String> {
    if n == 2 {
        ["a", "b", "c", "d"].iter().map(|s| s.to_string()).collect()
    } else {
        (1..=n).flat_map(|i| (1..=n).map(move |j| format!("t{}{}", i, j))).collect()
    }
}

fn q(d: &CartanDatum) -> Scalar {
    Scalar::v_pow(d.big_d)
}

fn w(gs: &[Gen]) -> Word {
    gs.iter().copied().collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut x = p.clone();
            x.insert(pos, n - 1);
            out.push(x);
        }
    }
    out.sort();
    out
}

fn inversions(p: &[usize]) -> usize {
    (0..p.len()).flat_map(|i| (i + 1..p.len()).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count()
}

/// det_q = Σ_σ (-q^{-1})^{ℓ(σ)} t_{1σ(1)} ... t_{nσ(n)}.
pub fn quantum_determinant(d: &CartanDatum) -> NcPoly {
    let n = d.n;
    let mq = -q(d).inv().unwrap();
    let mut out = NcPoly::zero();
    for p in permutations(n) {
        let word: Word = (0..n).map(|i| t(n, i + 1, p[i] + 1)).collect();
        out.add_term(word, &mq.pow(inversions(&p) as i32));
    }
    out
}

/// The FRT rules for O_q(M_n): for i < k, j < l
///   t_il t_ij -> q t_ij t_il,  t_kj t_ij -> q t_ij t_kj,
///   t_kj t_il -> t_il t_kj,    t_kl t_ij -> t_ij t_kl + (q - q^{-1}) t_il t_kj.
fn frt_rules(d: &CartanDatum) -> Vec<Rule> {
    let n = d.n;
    let qq = q(d);
    let qd = &qq - &qq.inv().unwrap();
    let mut rules = Vec::new();
    for i in 1..=n {
        for jj in 1..=n {
            for l in jj + 1..=n {
                rules.push(Rule::new(w(&[t(n, i, l), t(n, i, jj)]), NcPoly::term(qq.clone(), w(&[t(n, i, jj), t(n, i, l)]))));
                rules.push(Rule::new(w(&[t(n, l, i), t(n, jj, i)]), NcPoly::term(qq.clone(), w(&[t(n, jj, i), t(n, l, i)]))));
            }
        }
    }
    for i in 1..=n {
        for k in i + 1..=n {
            for jj in 1..=n {
                for l in jj + 1..=n {
                    rules.push(Rule::new(w(&[t(n, k, jj), t(n, i, l)]), NcPoly::from_word(w(&[t(n, i, l), t(n, k, jj)]))));
                    let mut rhs = NcPoly::from_word(w(&[t(n, i, jj), t(n, k, l)]));
                    rhs.add_term(w(&[t(n, i, l), t(n, k, jj)]), &qd);
                    rules.push(Rule::new(w(&[t(n, k, l), t(n, i, jj)]), rhs));
                }
            }
        }
    }
    rules.sort_by(|a, b| a.lhs.cmp(&b.lhs));
    rules
}

/// C_q[SL(n)] for n = 2, 3: FRT relations, det_q = 1, matrix coproduct,
/// ε(t_ij) = δ_ij and the antipode solved from Σ_p S(t_ip) t_pj = δ_ij.
pub fn build_oq_sln(n: usize) -> Result<Arc<HopfPresentation>, QgError> {
    let d = CartanDatum::sl(n)?;
    let names = oq_names(n);
    let rules = frt_rules(&d);
    let det = quantum_determinant(&d);
    let mut relations: Vec<Relation> = rules.iter().map(|r| Relation::new(NcPoly::from_word(r.lhs.clone()), r.rhs.clone())).collect();
    relations.push(Relation::new(det.clone(), NcPoly::one()));
    let lead: Word = (1..=n).map(|i| t(n, i, i)).collect();
    let reduction = CentralReduction { slot: 0, lead, relation: &det - &NcPoly::one() };
    let coproduct = (1..=n)
        .flat_map(|i| (1..=n).map(move |j| (i, j)))
        .map(|(i, j)| {
            let mut p = NcPoly::zero();
            for k in 1..=n {
                p.add_term(w(&[t(n, i, k), t(n, k, j).with_slot(1)]), &Scalar::one());
            }
            p
        })
        .collect();
    let counit = (1..=n).flat_map(|i| (1..=n).map(move |j| if i == j { Scalar::one() } else { Scalar::zero() })).collect();
    let pres = HopfPresentation {
        name: format!("C_q[SL({})]", n),
        names,
        order: TermOrder::new(),
        relations,
        rules,
        reduction: Some(reduction),
        coproduct,
        counit,
        antipode: Vec::new(),
        cop: false,
    };
    let alg = Algebra::single(Arc::new(pres.clone()));
    let antipode = solve_antipode(&alg, n)?;
    Ok(Arc::new(pres.with_antipode(antipode)))
}

/// Normal monomials of degree n-1 whose row multiset is {1..n} minus {j} and
/// column multiset is {1..n} minus {i}.
fn antipode_ansatz(alg: &Algebra, n: usize, i: usize, j: usize) -> Vec<Word> {
    let rows: Vec<usize> = (1..=n).filter(|&r| r != j).collect();
    let cols: Vec<usize> = (1..=n).filter(|&c| c != i).collect();
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        let mut gens: Vec<Gen> = rows.iter().enumerate().map(|(k, &r)| t(n, r, cols[p[k]])).collect();
        gens.sort();
        let word: Word = gens.into_iter().collect();
        if alg.rewrite_system().is_normal_word(&word) && !out.contains(&word) {
            out.push(word);
        }
    }
    out
}

fn solve_antipode(alg: &Algebra, n: usize) -> Result<Vec<NcPoly>, QgError> {
    let mut table = vec![NcPoly::zero(); n * n];
    for i in 1..=n {
        // unknowns: coefficients of S(t_ip) on its ansatz, for every p
        let ansatz: Vec<Vec<Word>> = (1..=n).map(|p| antipode_ansatz(alg, n, i, p)).collect();
        let mut offsets = Vec::new();
        let mut nvars = 0;
        for a in &ansatz {
            offsets.push(nvars);
            nvars += a.len();
        }
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        for j in 1..=n {
            let mut eqs: BTreeMap<Word, SparseVec> = BTreeMap::new();
            for p in 1..=n {
                for (k, mono) in ansatz[p - 1].iter().enumerate() {
                    let prod = alg.mul_words(mono, &[t(n, p, j)]);
                    for (word, c) in prod.terms() {
                        eqs.entry(word.clone()).or_default().insert(offsets[p - 1] + k, c.clone());
                    }
                }
            }
            eqs.entry(Word::new()).or_default();
            for (word, row) in eqs {
                rhs.push(if word.is_empty() && i == j { Scalar::one() } else { Scalar::zero() });
                rows.push(row);
            }
        }
        let sol = solve_linear(&rows, &rhs, nvars).ok_or(QgError::Solver("antipode system inconsistent".into()))?;
        if !sol.nullspace.is_empty() {
            return Err(QgError::Solver("antipode not unique on the ansatz".into()));
        }
        for p in 1..=n {
            let mut s = NcPoly::zero();
            for (k, mono) in ansatz[p - 1].iter().enumerate() {
                if let Some(c) = sol.particular.get(&(offsets[p - 1] + k)) {
                    s.add_term(mono.clone(), c);
                }
            }
            table[(i - 1) * n + (p - 1)] = s;
        }
    }
    Ok(table)
}
