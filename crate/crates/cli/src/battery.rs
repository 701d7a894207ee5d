//! Named verification suites shared by `verify` and `double verify`.

use std::time::Instant;

use qdouble::double::{
    check_xi_injective, chi_commutation_check, cocycle_suite, derive_cross_relations, eta_quotient_check,
    gamma_invariance_check, localization_identities, twist_round_trip, verify_braiding, verify_iterated, DoubleAlgebra,
};
use qdouble::freealg::NcPoly;
use qdouble::hopf::{pairs_up_to, verify_braided_commutativity, verify_hopf, verify_skew_pairing};
use qdouble::qgroups::{check_lmap_values, t, QgError, QuantumGroup, Sign};
use qdouble::repr::{flag_invariance_check, is_simple, peter_weyl_rank, DoubleModule};
use qdouble::report::Suite;

/// Suites reachable from `verify --suite`, in battery order.
pub const ALL: &[&str] = &[
    "hopf",
    "beta",
    "relations",
    "cocycle",
    "braiding",
    "iwasawa",
    "localization",
    "gamma-invariance",
    "eta",
    "twist",
    "iterated",
    "repr",
    "flags",
];

/// Suites about the double, the default set of `double verify`.
pub const DOUBLE: &[&str] =
    &["hopf", "braiding", "iwasawa", "gamma-invariance", "localization", "eta", "cocycle", "twist", "iterated"];

/// Exhaustive cocycle checks grow like (#words)³. For sl2, degree 2 is
/// 8·10⁴ triples and takes seconds; for sl3 one degree-2 triple of A ⊗ A
/// already costs seconds, so sl3 stops at degree 1.
pub fn cocycle_degree(cfg: Settings) -> usize {
    cfg.degree.min(if cfg.n == 2 { 2 } else { 1 })
}

#[derive(Clone, Copy, Debug)]
pub struct Settings {
    pub n: usize,
    pub degree: usize,
    pub seed: u64,
    pub fast_rank: bool,
}

fn timed(f: impl FnOnce() -> Result<Suite, QgError>) -> Result<Suite, QgError> {
    let start = Instant::now();
    let mut s = f()?.sorted();
    s.elapsed_ms = Some(start.elapsed().as_millis() as u64);
    Ok(s)
}

/// Runs one named suite. `double_only` selects the double's Hopf axioms for
/// `hopf` instead of those of C_q[G] and U_q(g) plus the double.
pub fn run(name: &str, cfg: Settings, double_only: bool) -> Result<Suite, QgError> {
    timed(|| match name {
        "hopf" if double_only => hopf_double(cfg),
        "hopf" => hopf(cfg),
        "beta" => beta(cfg),
        "relations" => {
            let d = DoubleAlgebra::get(cfg.n)?;
            Ok(derive_cross_relations(d, true, 200, cfg.seed).suite)
        }
        "cocycle" => cocycle_suite(DoubleAlgebra::get(cfg.n)?, cocycle_degree(cfg)),
        "braiding" => verify_braiding(DoubleAlgebra::get(cfg.n)?, double_degree(cfg)),
        "iwasawa" => iwasawa(cfg),
        "localization" => localization_identities(DoubleAlgebra::get(cfg.n)?),
        "gamma-invariance" => gamma_invariance_check(DoubleAlgebra::get(cfg.n)?, cfg.degree),
        "eta" => eta_quotient_check(DoubleAlgebra::get(cfg.n)?, cfg.degree),
        "twist" => twist_round_trip(DoubleAlgebra::get(cfg.n)?, cfg.degree),
        "iterated" => verify_iterated(DoubleAlgebra::get(cfg.n)?, 50, cfg.seed),
        "repr" => repr(cfg),
        "flags" => flag_invariance_check(DoubleAlgebra::get(cfg.n)?),
        other => Err(QgError::Solver(format!("unknown suite {}", other))),
    })
}

/// Degree for exhaustive checks on pairs of words of the double. For sl3
/// the double has 18 generators and degree 3 is out of reach, so it is
/// capped at 2.
pub fn double_degree(cfg: Settings) -> usize {
    if cfg.n == 2 {
        cfg.degree
    } else {
        cfg.degree.min(2)
    }
}

fn hopf_double(cfg: Settings) -> Result<Suite, QgError> {
    let d = DoubleAlgebra::get(cfg.n)?;
    let mut s = Suite::new(format!("hopf[D(sl{})]", cfg.n));
    s.extend_prefixed(verify_hopf(&d.alg, double_degree(cfg)), &d.alg.name().to_string());
    Ok(s)
}

fn hopf(cfg: Settings) -> Result<Suite, QgError> {
    let g = QuantumGroup::get(cfg.n)?;
    let mut s = Suite::new(format!("hopf[sl{}]", cfg.n));
    for alg in [&g.a, &g.u] {
        s.extend_prefixed(verify_hopf(alg, cfg.degree), &alg.name().to_string());
    }
    s.extend(hopf_double(cfg)?);
    Ok(s)
}

/// β and the pairing: skew-pairing axioms, braided commutativity, the
/// defining values of l± and their Hopf property.
fn beta(cfg: Settings) -> Result<Suite, QgError> {
    let g = QuantumGroup::get(cfg.n)?;
    let mut s = Suite::new(format!("beta[sl{}]", cfg.n));
    let deg = cfg.degree.min(2);
    s.extend_prefixed(verify_skew_pairing(&g.beta, &g.beta_inv, deg), "beta");
    let words = g.a.normal_words(deg);
    let pairs = pairs_up_to(&words, deg.max(2));
    s.record(
        format!("beta is braided commutative ({} pairs)", pairs.len()),
        verify_braided_commutativity(g.beta.as_ref(), &pairs),
    );
    let lm = g.lmaps()?;
    let pairing = g.pairing_form();
    for (sign, map, label) in [(Sign::Plus, &lm.plus, "l+"), (Sign::Minus, &lm.minus, "l-")] {
        s.record(
            format!("{} matches its defining values on degree <= (2, 1)", label),
            check_lmap_values(sign, map, g.beta.as_ref(), g.beta_inv.as_ref(), pairing.as_ref(), 2, 1),
        );
        s.record(format!("{} respects the relations of A", label), map.check_relations());
        s.record(format!("{} is a coalgebra map", label), map.check_coalgebra());
    }
    Ok(s)
}

/// ξ: both constructions agree, ξ is an algebra map, injective at degrees
/// 1 and 2, ξ(a ⊗ 1) = a ⊗ k_{-ω}; for sl2 the localization identities.
fn iwasawa(cfg: Settings) -> Result<Suite, QgError> {
    let d = DoubleAlgebra::get(cfg.n)?;
    let mut s = Suite::new(format!("iwasawa[sl{}]", cfg.n));
    let xi = d.map_xi()?;
    s.record("xi respects the relations of the double", xi.check_relations());

    let mut bad = None;
    for w in d.alg.normal_words(2) {
        if xi.apply_word(&w) != d.xi_direct(&w)? {
            bad.get_or_insert_with(|| d.alg.format_word(&w));
        }
    }
    s.record("xi as a Hopf map agrees with the direct formula (degree <= 2)", bad);

    for deg in 1..=cfg.degree.min(2) {
        let r = check_xi_injective(d, deg)?;
        s.record(
            format!("xi injective at degree {} ({}/{})", deg, r.rank, r.count),
            (!r.passed()).then(|| format!("rank {} of {}", r.rank, r.count)),
        );
    }

    let a11 = NcPoly::gen(t(d.n, 1, 1));
    let img = xi.target().format(&xi.apply(&a11));
    // v_1 is the lowest weight vector, of weight -ω_{n-1}; K_i is k_{ω_i}.
    let want = if d.n == 2 { "a*Ki_2" } else { "t11*K2i_2" };
    s.record(format!("xi(a(x)1) = {}", img), (img != want).then(|| format!("expected {}", want)));

    if d.n == 2 {
        s.extend_prefixed(localization_identities(d)?, "localization");
    }
    Ok(s)
}

/// The (ν, ν′) pairs checked by the representation suite.
pub fn simple_cases(n: usize) -> Vec<(usize, usize)> {
    if n == 2 {
        vec![(1, 1), (2, 1), (1, 2), (2, 2)]
    } else {
        vec![(1, 0), (0, 1), (1, 1)]
    }
}

/// Simplicity of L(ν) ⊗ L(ν′) over the double, reducibility under the
/// diagonal U_q, χθ*(a) = k_{-ω} ⊗ k_ω, and the Peter-Weyl rank of L(1) ⊗ L(1).
fn repr(cfg: Settings) -> Result<Suite, QgError> {
    let mut s = Suite::new(format!("repr[sl{}]", cfg.n));
    for (nu, nup) in simple_cases(cfg.n) {
        let m = DoubleModule::build(cfg.n, nu, nup)?;
        s.extend_prefixed(m.check()?, &format!("action on L({})(x)L({})", nu, nup));
        let r = is_simple(m.dim(), &m.operators(false), cfg.seed);
        s.record(
            format!("L({})(x)L({}) is simple over the double", nu, nup),
            (r.is_simple() != Some(true)).then(|| format!("{:?}", r)),
        );
    }

    let d = DoubleAlgebra::get(cfg.n)?;
    let chi = d.u_tensor_u()?.format(&d.chi_theta_star(&[t(d.n, 1, 1)])?);
    let want = if d.n == 2 { "Ki*K_2" } else { "K2i*K2_2" };
    s.record(format!("chi theta*(a) = {}", chi), (chi != want).then(|| format!("expected {}", want)));
    s.extend_prefixed(chi_commutation_check(d)?, "chi");

    let m = DoubleModule::build(cfg.n, 1, 1)?;
    let r = is_simple(m.dim(), &m.operators(true), cfg.seed);
    let witness = r.witness_dim();
    s.record(
        format!("L(1)(x)L(1) is reducible under the diagonal U_q (witness dim {})", witness.unwrap_or(0)),
        (r.is_simple() != Some(false)).then(|| format!("{:?}", r)),
    );

    let ops = m.operators(false);
    let dim = m.dim();
    let rank = peter_weyl_rank(&ops, dim, cfg.fast_rank.then_some(cfg.seed));
    s.record(
        format!("Peter-Weyl rank of L(1)(x)L(1) is {} of {}", rank, dim * dim),
        (rank != dim * dim).then(|| format!("rank {}", rank)),
    );
    Ok(s)
}
