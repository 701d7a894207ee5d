use std::collections::BTreeMap;

use rayon::prelude::*;

use super::algebra::Algebra;
use super::forms::{Form, FormRef};
use crate::freealg::{NcPoly, Word};
use crate::report::Suite;
use crate::scalars::Scalar;

fn first_failure<T: Sync>(items: &[T], f: impl Fn(&T) -> Option<String> + Sync) -> Option<String> {
    items.par_iter().filter_map(&f).min()
}

/// Bialgebra and antipode axioms on generators and every normal monomial of
/// length at most `degree`, plus compatibility of Δ, ε, S with every relation.
pub fn verify_hopf(alg: &Algebra, degree: usize) -> Suite {
    let mut suite = Suite::new(format!("hopf[{}]", alg.name()));
    let relations = alg.relation_polys();
    let sq = alg.square();

    suite.record(
        format!("coproduct respects relations ({})", relations.len()),
        first_failure(&relations, |(label, r)| {
            let d = alg.coproduct(r);
            (!d.is_zero()).then(|| format!("{}: Delta = {}", label, sq.format(&d)))
        }),
    );
    suite.record(
        format!("counit respects relations ({})", relations.len()),
        first_failure(&relations, |(label, r)| {
            let e = alg.counit(r);
            (!e.is_zero()).then(|| format!("{}: eps = {}", label, e))
        }),
    );
    suite.record(
        format!("antipode respects relations ({})", relations.len()),
        first_failure(&relations, |(label, r)| {
            let s = alg.antipode(r);
            (!s.is_zero()).then(|| format!("{}: S = {}", label, alg.format(&s)))
        }),
    );

    let words = alg.normal_words(degree);
    let n = words.len();
    suite.record(
        format!("coassociativity ({} monomials)", n),
        first_failure(&words, |w| {
            let mut left: BTreeMap<(Word, Word, Word), Scalar> = BTreeMap::new();
            let mut right: BTreeMap<(Word, Word, Word), Scalar> = BTreeMap::new();
            for (x1, x2, c) in alg.sweedler(w).iter() {
                for (y1, y2, c2) in alg.sweedler(x1).iter() {
                    let e = left.entry((y1.clone(), y2.clone(), x2.clone())).or_insert_with(Scalar::zero);
                    *e = &*e + &(c * c2);
                }
                for (y1, y2, c2) in alg.sweedler(x2).iter() {
                    let e = right.entry((x1.clone(), y1.clone(), y2.clone())).or_insert_with(Scalar::zero);
                    *e = &*e + &(c * c2);
                }
            }
            left.retain(|_, c| !c.is_zero());
            right.retain(|_, c| !c.is_zero());
            (left != right).then(|| alg.format_word(w))
        }),
    );
    suite.record(
        format!("counit laws ({} monomials)", n),
        first_failure(&words, |w| {
            let mut l = NcPoly::zero();
            let mut r = NcPoly::zero();
            for (x1, x2, c) in alg.sweedler(w).iter() {
                l.add_term(x2.clone(), &(c * &alg.counit_word(x1)));
                r.add_term(x1.clone(), &(c * &alg.counit_word(x2)));
            }
            let x = NcPoly::from_word(w.clone());
            (l != x || r != x).then(|| alg.format_word(w))
        }),
    );
    suite.record(
        format!("antipode laws ({} monomials)", n),
        first_failure(&words, |w| {
            let mut l = NcPoly::zero();
            let mut r = NcPoly::zero();
            for (x1, x2, c) in alg.sweedler(w).iter() {
                l.add_scaled(&alg.mul(&alg.antipode_word(x1), &NcPoly::from_word(x2.clone())), c);
                r.add_scaled(&alg.mul(&NcPoly::from_word(x1.clone()), &alg.antipode_word(x2)), c);
            }
            let e = NcPoly::constant(alg.counit_word(w));
            if l != e {
                Some(format!("m(S(x)id)Delta({}) = {}", alg.format_word(w), alg.format(&l)))
            } else if r != e {
                Some(format!("m(id(x)S)Delta({}) = {}", alg.format_word(w), alg.format(&r)))
            } else {
                None
            }
        }),
    );
    suite
}

/// All ordered pairs from `words` whose lengths sum to at most `max_total`.
pub fn pairs_up_to(words: &[Word], max_total: usize) -> Vec<(Word, Word)> {
    let mut out = Vec::new();
    for a in words {
        for b in words {
            if a.len() + b.len() <= max_total {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    out
}

/// The 2-cocycle identity
///   Σ σ(x1, y1) σ(x2 y2, z) = Σ σ(y1, z1) σ(x, y2 z2),
/// σ(1,1) = 1, and σ * σ^{-1} = ε⊗ε = σ^{-1} * σ, over the given triples.
pub fn verify_cocycle_on(sigma: &FormRef, sigma_inv: &FormRef, triples: &[(Word, Word, Word)]) -> Suite {
    let alg = sigma.left().clone();
    let mut suite = Suite::new(format!("cocycle[{}]", sigma.name()));
    suite.record("sigma(1,1) = 1", (!sigma.eval_words(&[], &[]).is_one()).then(|| "sigma(1,1) != 1".to_string()));

    let fmt3 = |x: &Word, y: &Word, z: &Word| format!("({}, {}, {})", alg.format_word(x), alg.format_word(y), alg.format_word(z));
    suite.record(
        format!("cocycle identity ({} triples)", triples.len()),
        first_failure(triples, |(x, y, z)| {
            let mut lhs = Scalar::zero();
            for (x1, x2, cx) in alg.sweedler(x).iter() {
                for (y1, y2, cy) in alg.sweedler(y).iter() {
                    let a = sigma.eval_words(x1, y1);
                    if a.is_zero() {
                        continue;
                    }
                    let b = sigma.eval_poly_word(&alg.mul_words(x2, y2), z);
                    lhs = &lhs + &(&(&a * &b) * &(cx * cy));
                }
            }
            let mut rhs = Scalar::zero();
            for (y1, y2, cy) in alg.sweedler(y).iter() {
                for (z1, z2, cz) in alg.sweedler(z).iter() {
                    let a = sigma.eval_words(y1, z1);
                    if a.is_zero() {
                        continue;
                    }
                    let b = sigma.eval_word_poly(x, &alg.mul_words(y2, z2));
                    rhs = &rhs + &(&(&a * &b) * &(cy * cz));
                }
            }
            (lhs != rhs).then(|| format!("{}: {} != {}", fmt3(x, y, z), lhs, rhs))
        }),
    );
    let mut pairs: Vec<(Word, Word)> = triples.iter().flat_map(|(x, y, _)| [(x.clone(), y.clone())]).collect();
    pairs.sort();
    pairs.dedup();
    suite.record(format!("convolution inverse ({} pairs)", pairs.len()), check_inverse(sigma, sigma_inv, &pairs));
    suite
}

/// `verify_cocycle_on` over all triples of normal monomials of length at most `degree`.
pub fn verify_cocycle(sigma: &FormRef, sigma_inv: &FormRef, degree: usize) -> Suite {
    let words = sigma.left().normal_words(degree);
    let mut triples = Vec::new();
    for x in &words {
        for y in &words {
            for z in &words {
                triples.push((x.clone(), y.clone(), z.clone()));
            }
        }
    }
    verify_cocycle_on(sigma, sigma_inv, &triples)
}

/// First pair on which F * G or G * F differs from ε⊗ε.
pub fn check_inverse(f: &FormRef, g: &FormRef, pairs: &[(Word, Word)]) -> Option<String> {
    let l = f.left();
    let r = f.right();
    first_failure(pairs, |(x, y)| {
        let eps = &l.counit_word(x) * &r.counit_word(y);
        let mut fg = Scalar::zero();
        let mut gf = Scalar::zero();
        for (x1, x2, cx) in l.sweedler(x).iter() {
            for (y1, y2, cy) in r.sweedler(y).iter() {
                let c = cx * cy;
                fg = &fg + &(&(&f.eval_words(x1, y1) * &g.eval_words(x2, y2)) * &c);
                gf = &gf + &(&(&g.eval_words(x1, y1) * &f.eval_words(x2, y2)) * &c);
            }
        }
        (fg != eps || gf != eps).then(|| format!("({}, {})", l.format_word(x), r.format_word(y)))
    })
}

/// Skew-pairing axioms on normalised products, unit laws, vanishing on
/// relations and invertibility via the antipode, for left/right monomials of
/// length at most `degree`.
pub fn verify_skew_pairing(tau: &FormRef, tau_inv: &FormRef, degree: usize) -> Suite {
    let l = tau.left().clone();
    let r = tau.right().clone();
    let mut suite = Suite::new(format!("skew-pairing[{}]", tau.name()));
    let lw = l.normal_words(degree);
    let rw = r.normal_words(degree);

    let mut first_args = Vec::new();
    for (b, c) in pairs_up_to(&lw, degree.max(2)) {
        for u in &rw {
            first_args.push((b.clone(), c.clone(), u.clone()));
        }
    }
    suite.record(
        format!("tau(bc,u) = tau(b,u1)tau(c,u2) ({} cases)", first_args.len()),
        first_failure(&first_args, |(b, c, u)| {
            let lhs = tau.eval_poly_word(&l.mul_words(b, c), u);
            let mut rhs = Scalar::zero();
            for (u1, u2, cu) in r.sweedler(u).iter() {
                rhs = &rhs + &(&(&tau.eval_words(b, u1) * &tau.eval_words(c, u2)) * cu);
            }
            (lhs != rhs).then(|| format!("b={} c={} u={}", l.format_word(b), l.format_word(c), r.format_word(u)))
        }),
    );
    let mut second_args = Vec::new();
    for (u, v) in pairs_up_to(&rw, degree.max(2)) {
        for b in &lw {
            second_args.push((b.clone(), u.clone(), v.clone()));
        }
    }
    suite.record(
        format!("tau(b,uv) = tau(b1,v)tau(b2,u) ({} cases)", second_args.len()),
        first_failure(&second_args, |(b, u, v)| {
            let lhs = tau.eval_word_poly(b, &r.mul_words(u, v));
            let mut rhs = Scalar::zero();
            for (b1, b2, cb) in l.sweedler(b).iter() {
                rhs = &rhs + &(&(&tau.eval_words(b1, v) * &tau.eval_words(b2, u)) * cb);
            }
            (lhs != rhs).then(|| format!("b={} u={} v={}", l.format_word(b), r.format_word(u), r.format_word(v)))
        }),
    );
    let units: Vec<_> = lw.iter().map(|w| (w.clone(), true)).chain(rw.iter().map(|w| (w.clone(), false))).collect();
    suite.record(
        "unit laws",
        first_failure(&units, |(w, left)| {
            let ok = if *left { tau.eval_words(w, &[]) == l.counit_word(w) } else { tau.eval_words(&[], w) == r.counit_word(w) };
            (!ok).then(|| format!("unit against {}", if *left { l.format_word(w) } else { r.format_word(w) }))
        }),
    );
    let lrel = l.relation_polys();
    let rrel = r.relation_polys();
    let small_r = r.normal_words(degree.min(2));
    let small_l = l.normal_words(degree.min(2));
    let mut rel_cases = Vec::new();
    for (i, _) in lrel.iter().enumerate() {
        for u in &small_r {
            rel_cases.push((true, i, u.clone()));
        }
    }
    for (i, _) in rrel.iter().enumerate() {
        for b in &small_l {
            rel_cases.push((false, i, b.clone()));
        }
    }
    suite.record(
        format!("vanishes on relations ({} cases)", rel_cases.len()),
        first_failure(&rel_cases, |(left, i, w)| {
            let v = if *left { tau.eval_poly_word(&lrel[*i].1, w) } else { tau.eval_word_poly(w, &rrel[*i].1) };
            (!v.is_zero()).then(|| {
                if *left {
                    format!("tau({}, {}) = {}", lrel[*i].0, r.format_word(w), v)
                } else {
                    format!("tau({}, {}) = {}", l.format_word(w), rrel[*i].0, v)
                }
            })
        }),
    );
    let pairs: Vec<(Word, Word)> = lw.iter().flat_map(|x| rw.iter().map(move |y| (x.clone(), y.clone()))).filter(|(x, y)| x.len() + y.len() <= degree.max(2)).collect();
    suite.record(format!("convolution inverse ({} pairs)", pairs.len()), check_inverse(tau, tau_inv, &pairs));
    suite
}

/// Braided commutativity Σ b1 a1 β(a2, b2) = Σ β(a1, b1) a2 b2 on the given pairs.
pub fn verify_braided_commutativity(beta: &dyn Form, pairs: &[(Word, Word)]) -> Option<String> {
    let alg = beta.left().clone();
    first_failure(pairs, |(a, b)| {
        let mut lhs = NcPoly::zero();
        let mut rhs = NcPoly::zero();
        for (a1, a2, ca) in alg.sweedler(a).iter() {
            for (b1, b2, cb) in alg.sweedler(b).iter() {
                let c = ca * cb;
                let x = beta.eval_words(a2, b2);
                if !x.is_zero() {
                    lhs.add_scaled(&alg.mul_words(b1, a1), &(&x * &c));
                }
                let y = beta.eval_words(a1, b1);
                if !y.is_zero() {
                    rhs.add_scaled(&alg.mul_words(a2, b2), &(&y * &c));
                }
            }
        }
        (lhs != rhs).then(|| format!("a={} b={}: {} != {}", alg.format_word(a), alg.format_word(b), alg.format(&lhs), alg.format(&rhs)))
    })
}

/// Compares two forms on the given pairs.
pub fn compare_forms(f: &dyn Form, g: &dyn Form, pairs: &[(Word, Word)]) -> Option<String> {
    let l = f.left().clone();
    let r = f.right().clone();
    first_failure(pairs, |(x, y)| {
        let a = f.eval_words(x, y);
        let b = g.eval_words(x, y);
        (a != b).then(|| format!("({}, {}): {} != {}", l.format_word(x), r.format_word(y), a, b))
    })
}
