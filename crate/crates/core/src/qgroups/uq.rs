use std::sync::Arc;

use super::cartan::CartanDatum;
use super::QgError;
use crate::freealg::{Gen, NcPoly, Rule, TermOrder, Word};
use crate::hopf::{HopfPresentation, Relation};
use crate::scalars::{q_integer, Scalar};

/// Generator layout of U_q(sl_n): e_1..e_r, f_1..f_r, then K_i, K_i^{-1}
/// pairs where K_i = k_{ω_i}.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct UqLayout {
    pub rank: usize,
}

impl UqLayout {
    pub fn e(&self, i: usize) -> Gen {
        Gen::new(0, i as u8)
    }

    pub fn f(&self, i: usize) -> Gen {
        Gen::new(0, (self.rank + i) as u8)
    }

    pub fn k(&self, i: usize) -> Gen {
        Gen::new(0, (2 * self.rank + 2 * i) as u8)
    }

    pub fn k_inv(&self, i: usize) -> Gen {
        Gen::new(0, (2 * self.rank + 2 * i + 1) as u8)
    }

    pub fn is_cartan(&self, g: Gen) -> bool {
        g.id as usize >= 2 * self.rank
    }

    /// The normal word of k_λ = Π K_i^{λ_i}.
    pub fn k_word(&self, lambda: &[i64]) -> Word {
        let mut out = Word::new();
        for (i, &m) in lambda.iter().enumerate() {
            let g = if m >= 0 { self.k(i) } else { self.k_inv(i) };
            for _ in 0..m.unsigned_abs() {
                out.push(g);
            }
        }
        out
    }

    /// λ with g = k_λ, for a Cartan generator g = K_i^{±1}.
    pub fn k_weight(&self, g: Gen) -> Vec<i64> {
        let mut w = vec![0; self.rank];
        let id = g.id as usize - 2 * self.rank;
        w[id / 2] = if id % 2 == 0 { 1 } else { -1 };
        w
    }

    /// Weight (in the ω basis) of a generator under the adjoint action.
    pub fn gen_weight(&self, d: &CartanDatum, g: Gen) -> Vec<i64> {
        let id = g.id as usize;
        if id < self.rank {
            d.simple_root(id)
        } else if id < 2 * self.rank {
            d.neg(&d.simple_root(id - self.rank))
        } else {
            d.zero()
        }
    }
}

pub fn uq_names(n: usize) -> Vec<String> {
    if n == 2 {
        ["e", "f", "K", "Ki"].iter().map(|s| s.to_string()).collect()
    } else {
        let r = n - 1;
        let mut v: Vec<String> = (1..=r).map(|i| format!("e{}", i)).collect();
        v.extend((1..=r).map(|i| format!("f{}", i)));
        for i in 1..=r {
            v.push(format!("K{}", i));
            v.push(format!("K{}i", i));
        }
        v
    }
}

fn w(gs: &[Gen]) -> Word {
    gs.iter().copied().collect()
}

fn uq_rules(d: &CartanDatum, l: UqLayout) -> Vec<Rule> {
    let r = d.rank;
    let qd = &Scalar::v_pow(d.big_d) - &Scalar::v_pow(-d.big_d);
    let inv_qd = qd.inv().unwrap();
    let mut rules = Vec::new();
    // Cartan part: sorted commuting Laurent generators.
    let ks: Vec<Gen> = (0..r).flat_map(|i| [l.k(i), l.k_inv(i)]).collect();
    for &x in &ks {
        for &y in &ks {
            if x <= y {
                continue;
            }
            if x.id / 2 == y.id / 2 {
                rules.push(Rule::new(w(&[x, y]), NcPoly::one()));
            } else {
                rules.push(Rule::new(w(&[x, y]), NcPoly::from_word(w(&[y, x]))));
            }
        }
    }
    for i in 0..r {
        rules.push(Rule::new(w(&[l.k(i), l.k_inv(i)]), NcPoly::one()));
    }
    // K_i x = q^{(ω_i, wt x)} x K_i
    for i in 0..r {
        for j in 0..r {
            let a = d.simple_root(j);
            let up = d.q_exp(&d.fundamental(i), &a);
            for (k, sign) in [(l.k(i), 1), (l.k_inv(i), -1)] {
                rules.push(Rule::new(w(&[k, l.e(j)]), NcPoly::term(Scalar::v_pow(sign * up), w(&[l.e(j), k]))));
                rules.push(Rule::new(w(&[k, l.f(j)]), NcPoly::term(Scalar::v_pow(-sign * up), w(&[l.f(j), k]))));
            }
        }
    }
    // f_j e_i = e_i f_j - δ_ij (k_{α_i} - k_{-α_i}) / (q - q^{-1})
    for i in 0..r {
        for j in 0..r {
            let mut rhs = NcPoly::from_word(w(&[l.e(i), l.f(j)]));
            if i == j {
                let a = d.simple_root(i);
                rhs.add_term(l.k_word(&a), &-&inv_qd);
                rhs.add_term(l.k_word(&d.neg(&a)), &inv_qd);
            }
            rules.push(Rule::new(w(&[l.f(j), l.e(i)]), rhs));
        }
    }
    // Serre relations for adjacent nodes (only n = 3 has any).
    if r == 2 {
        let two = Scalar::from(q_integer(2, 1, d.big_d));
        for x in [[l.e(0), l.e(1)], [l.f(0), l.f(1)]] {
            let [a, b] = x;
            // b a a = [2] a b a - a a b
            let mut rhs = NcPoly::term(two.clone(), w(&[a, b, a]));
            rhs.add_term(w(&[a, a, b]), &-Scalar::one());
            rules.push(Rule::new(w(&[b, a, a]), rhs));
            // b b a = [2] b a b - a b b
            let mut rhs = NcPoly::term(two.clone(), w(&[b, a, b]));
            rhs.add_term(w(&[a, b, b]), &-Scalar::one());
            rules.push(Rule::new(w(&[b, b, a]), rhs));
        }
    }
    rules.sort_by(|a, b| a.lhs.cmp(&b.lhs));
    rules
}

/// U_q(sl_n) for n = 2, 3 with Δe = e⊗1 + k_α⊗e, Δf = f⊗k_{-α} + 1⊗f,
/// ΔK = K⊗K and S(e) = -k_{-α}e, S(f) = -f k_α.
pub fn build_uq_sln(n: usize) -> Result<Arc<HopfPresentation>, QgError> {
    let d = CartanDatum::sl(n)?;
    let l = UqLayout { rank: d.rank };
    let names = uq_names(n);
    let mut order = TermOrder::new();
    for i in 0..d.rank {
        order = order.with_weight(l.k(i), 0).with_weight(l.k_inv(i), 0);
    }
    let rules = uq_rules(&d, l);
    let relations = rules.iter().map(|r| Relation::new(NcPoly::from_word(r.lhs.clone()), r.rhs.clone())).collect();
    let ngens = names.len();
    let mut coproduct = vec![NcPoly::zero(); ngens];
    let mut counit = vec![Scalar::zero(); ngens];
    let mut antipode = vec![NcPoly::zero(); ngens];
    let one = Scalar::one();
    let shift = |ws: Word| -> Word { ws.into_iter().map(|g| g.with_slot(1)).collect() };
    for i in 0..d.rank {
        let a = d.simple_root(i);
        let ka = l.k_word(&a);
        let kma = l.k_word(&d.neg(&a));
        let (e, f) = (l.e(i), l.f(i));

        let mut de = NcPoly::from_word(w(&[e]));
        let mut lhs = ka.clone();
        lhs.push(e.with_slot(1));
        de.add_term(lhs, &one);
        coproduct[e.id as usize] = de;

        let mut df = NcPoly::from_word(w(&[f]));
        df = &df * &NcPoly::from_word(shift(kma.clone()));
        df.add_term(w(&[f.with_slot(1)]), &one);
        coproduct[f.id as usize] = df;

        let mut se = kma.clone();
        se.push(e);
        antipode[e.id as usize] = NcPoly::term(-one.clone(), se);
        let mut sf = w(&[f]);
        sf.extend(ka.iter().copied());
        antipode[f.id as usize] = NcPoly::term(-one.clone(), sf);

        for (k, ki) in [(l.k(i), l.k_inv(i)), (l.k_inv(i), l.k(i))] {
            coproduct[k.id as usize] = NcPoly::from_word(w(&[k, k.with_slot(1)]));
            counit[k.id as usize] = one.clone();
            antipode[k.id as usize] = NcPoly::gen(ki);
        }
    }
    Ok(Arc::new(HopfPresentation {
        name: format!("U_q(sl_{})", n),
        names,
        order,
        relations,
        rules,
        reduction: None,
        coproduct,
        counit,
        antipode,
        cop: false,
    }))
}

/// S^{-1} on generators: S^{-1}(e) = -e k_{-α}, S^{-1}(f) = -k_α f, S^{-1}(K) = K^{-1}.
pub fn uq_antipode_inverse(n: usize) -> Result<Vec<NcPoly>, QgError> {
    let d = CartanDatum::sl(n)?;
    let l = UqLayout { rank: d.rank };
    let mut out = vec![NcPoly::zero(); 4 * d.rank];
    let m1 = -Scalar::one();
    for i in 0..d.rank {
        let a = d.simple_root(i);
        let mut se = w(&[l.e(i)]);
        se.extend(l.k_word(&d.neg(&a)));
        out[l.e(i).id as usize] = NcPoly::term(m1.clone(), se);
        let mut sf = l.k_word(&a);
        sf.push(l.f(i));
        out[l.f(i).id as usize] = NcPoly::term(m1.clone(), sf);
        out[l.k(i).id as usize] = NcPoly::gen(l.k_inv(i));
        out[l.k_inv(i).id as usize] = NcPoly::gen(l.k(i));
    }
    Ok(out)
}

/// U_q(sl_n)^cop.
pub fn build_uq_cop(n: usize) -> Result<Arc<HopfPresentation>, QgError> {
    let u = build_uq_sln(n)?;
    Ok(Arc::new(u.cop(uq_antipode_inverse(n)?)))
}
