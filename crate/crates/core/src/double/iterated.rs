use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::DoubleAlgebra;
use crate::freealg::{NcPoly, Word};
use crate::hopf::{verify_cocycle, verify_cocycle_on, Algebra, Bracket, FormRef, HopfMap, Interaction, Product, Pullback, TwistedAlgebra};
use crate::qgroups::QgError;
use crate::report::Suite;
use crate::scalars::Scalar;

/// A^{⋈k} for k = 2, 3. For k = 2 this is (A ⊗ A)_{[β]}; for k = 3 it is
/// ((A ⋈ A) ⊗ A)_{σ'} with σ' the pullback of [β] along m ⊗ 1.
pub struct IteratedDouble {
    pub k: usize,
    pub base: Arc<Algebra>,
    pub product: Arc<TwistedAlgebra>,
    /// The Hopf map onto the double (identity on words for k = 2).
    pub to_double: Arc<HopfMap>,
}

fn tensor_square(d: &DoubleAlgebra) -> Arc<Algebra> {
    let pres = d.a().factor(0).clone();
    Algebra::tensor(vec![pres.clone(), pres])
}

fn bracket_pair(d: &DoubleAlgebra, t: &Arc<Algebra>) -> (FormRef, FormRef) {
    let b = Bracket::new(d.group.beta.clone(), t.clone());
    let inv: FormRef = Arc::new(b.inverse());
    (Arc::new(b), inv)
}

pub fn iterated_double(d: &DoubleAlgebra, k: usize) -> Result<IteratedDouble, QgError> {
    let t = tensor_square(d);
    let (sigma, sigma_inv) = bracket_pair(d, &t);
    match k {
        2 => {
            let product = Arc::new(TwistedAlgebra::new(t.clone(), sigma, sigma_inv));
            let to_double = Arc::new(HopfMap::new("id", t.clone(), d.alg.clone(), t.gens().into_iter().map(|g| (g, NcPoly::gen(g))).collect()));
            Ok(IteratedDouble { k, base: t, product, to_double })
        }
        3 => {
            let pres = d.a().factor(0).clone();
            let mut inter = BTreeMap::new();
            if let Some(rules) = d.alg.interactions().get(&(0, 1)) {
                inter.insert((0u8, 1u8), rules.clone());
            } else {
                return Err(QgError::Solver("double without cross rules".into()));
            }
            debug_assert!(matches!(inter[&(0, 1)], Interaction::Rules(_)));
            let name = format!("({}) (x) {}", d.alg.name(), pres.name);
            let base = Algebra::new(name, vec![pres.clone(), pres.clone(), pres], inter).map_err(|e| QgError::Solver(e.to_string()))?;
            // m ⊗ 1: slots 0 and 1 multiply into slot 0, slot 2 becomes slot 1.
            let images: HashMap<_, _> =
                base.gens().into_iter().map(|g| (g, NcPoly::gen(g.with_slot(if g.slot == 2 { 1 } else { 0 })))).collect();
            let phi = Arc::new(HopfMap::new("m(x)1", base.clone(), t.clone(), images.clone()));
            let to_double = Arc::new(HopfMap::new("m(x)1", base.clone(), d.alg.clone(), images));
            let s: FormRef = Arc::new(Pullback::new(sigma, phi.clone(), phi.clone()));
            let s_inv: FormRef = Arc::new(Pullback::new(sigma_inv, phi.clone(), phi));
            let product = Arc::new(TwistedAlgebra::new(base.clone(), s, s_inv));
            Ok(IteratedDouble { k, base, product, to_double })
        }
        _ => Err(QgError::Solver(format!("iterated doubles are built for k = 2, 3, not {}", k))),
    }
}

/// Pairs of normal words with total length ≤ `max`.
fn pairs(alg: &Algebra, max: usize) -> Vec<(Word, Word)> {
    crate::hopf::pairs_up_to(&alg.normal_words(max), max)
}

/// (A ⊗ A)_{[β]} reproduces the double; twisting it back by [β]⁻¹ restores
/// the tensor product, on all pairs of total degree ≤ `degree`.
pub fn twist_round_trip(d: &DoubleAlgebra, degree: usize) -> Result<Suite, QgError> {
    let it = iterated_double(d, 2)?;
    let t = it.base.clone();
    let (sigma, sigma_inv) = bracket_pair(d, &t);
    let back = TwistedAlgebra::new(it.product.clone(), sigma_inv, sigma);
    let ps = pairs(&t, degree);
    let mut suite = Suite::new(format!("twist[sl{}]", d.n));
    let mut bad = None;
    for (x, y) in &ps {
        let got = it.product.mul_words(x, y);
        let want = d.alg.mul_words(x, y);
        if got != want {
            bad = Some(format!("{} . {}: {} != {}", t.format_word(x), t.format_word(y), t.format(&got), d.format(&want)));
            break;
        }
    }
    suite.record(format!("(A(x)A)_[beta] products equal the double ({} pairs)", ps.len()), bad);
    let mut bad = None;
    for (x, y) in &ps {
        let got = back.mul_words(x, y);
        let want = t.mul_words(x, y);
        if got != want {
            bad = Some(format!("{} . {}: {} != {}", t.format_word(x), t.format_word(y), t.format(&got), t.format(&want)));
            break;
        }
    }
    suite.record(format!("twist by [beta] then [beta]^-1 restores A(x)A ({} pairs)", ps.len()), bad);
    Ok(suite)
}

/// A^{⋈3}: associativity on `samples` random generator triples, the map
/// onto the double is multiplicative on pairs of degree ≤ 2 and a
/// coalgebra map, and σ' is a 2-cocycle on generator triples.
pub fn verify_iterated(d: &DoubleAlgebra, samples: usize, seed: u64) -> Result<Suite, QgError> {
    let it = iterated_double(d, 3)?;
    let base = &it.base;
    let prod = &it.product;
    let mut suite = Suite::new(format!("iterated[sl{},k=3]", d.n));

    let gens: Vec<Word> = base.normal_words(1).into_iter().filter(|w| !w.is_empty()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bad = None;
    for _ in 0..samples {
        let pick = |rng: &mut ChaCha8Rng| gens.choose(rng).expect("generators").clone();
        let (x, y, z) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
        let l = prod.mul(&prod.mul_words(&x, &y), &NcPoly::from_word(z.clone()));
        let r = prod.mul(&NcPoly::from_word(x.clone()), &prod.mul_words(&y, &z));
        if l != r && bad.is_none() {
            bad = Some(format!("({})({})({})", base.format_word(&x), base.format_word(&y), base.format_word(&z)));
        }
    }
    suite.record(format!("associativity ({} random generator triples)", samples), bad);

    let phi = &it.to_double;
    let mut bad = None;
    for (x, y) in pairs(base, 2) {
        let l = phi.apply(&prod.mul_words(&x, &y));
        let r = d.alg.mul(&phi.apply_word(&x), &phi.apply_word(&y));
        if l != r {
            bad = Some(format!("{} . {}: {} != {}", base.format_word(&x), base.format_word(&y), d.format(&l), d.format(&r)));
            break;
        }
    }
    suite.record("m(x)1 is multiplicative onto the double (degree <= 2)", bad);
    suite.record("m(x)1 is a coalgebra map onto the double", phi.check_coalgebra());

    let s = prod.sigma().clone();
    let s_inv = prod.sigma_inv().clone();
    let mut triples = Vec::new();
    for x in &gens {
        for y in &gens {
            for z in &gens {
                triples.push((x.clone(), y.clone(), z.clone()));
            }
        }
    }
    suite.extend_prefixed(verify_cocycle_on(&s, &s_inv, &triples), "pullback along m(x)1");
    Ok(suite)
}

/// [β] on A ⊗ A over all generator triples; its pullbacks at degree ≤ `degree`
/// along the Hopf maps swap and Ad_λ ⊗ Ad_λ (t_ij ↦ v^{i-j} t_ij) of A ⊗ A,
/// whose Hopf property is checked first; and the pullback along
/// Δ: A → A ⊗ A, which is an algebra map but not a coalgebra map.
pub fn cocycle_suite(d: &DoubleAlgebra, degree: usize) -> Result<Suite, QgError> {
    let t = tensor_square(d);
    let (sigma, sigma_inv) = bracket_pair(d, &t);
    let mut suite = Suite::new(format!("cocycle[sl{}]", d.n));
    suite.extend_prefixed(verify_cocycle(&sigma, &sigma_inv, 1), "[beta] on generators");

    let n = d.n as i32;
    let swap = t.gens().into_iter().map(|g| (g, NcPoly::gen(g.with_slot(1 - g.slot)))).collect();
    let torus = t
        .gens()
        .into_iter()
        .map(|g| {
            let (i, j) = (g.id as i32 / n, g.id as i32 % n);
            (g, NcPoly::gen(g).scale(&Scalar::v_pow(i - j)))
        })
        .collect();
    for (name, images) in [("swap", swap), ("Ad(lambda)(x)Ad(lambda)", torus)] {
        let phi = Arc::new(HopfMap::new(name, t.clone(), t.clone(), images));
        let hopf = phi.check_relations().or_else(|| phi.check_coalgebra());
        suite.record(format!("{} is a Hopf map of A(x)A", name), hopf);
        let s: FormRef = Arc::new(Pullback::new(sigma.clone(), phi.clone(), phi.clone()));
        let s_inv: FormRef = Arc::new(Pullback::new(sigma_inv.clone(), phi.clone(), phi));
        suite.extend_prefixed(verify_cocycle(&s, &s_inv, degree), &format!("pullback along {}, degree <= {}", name, degree));
    }

    let a = d.a().clone();
    let images = a.gens().into_iter().map(|g| (g, a.coproduct_word(&[g]))).collect();
    let delta = Arc::new(HopfMap::new("Delta", a.clone(), t.clone(), images));
    let s: FormRef = Arc::new(Pullback::new(sigma, delta.clone(), delta.clone()));
    let s_inv: FormRef = Arc::new(Pullback::new(sigma_inv, delta.clone(), delta));
    suite.extend_prefixed(verify_cocycle(&s, &s_inv, degree), &format!("pullback along Delta, degree <= {}", degree));
    Ok(suite)
}
