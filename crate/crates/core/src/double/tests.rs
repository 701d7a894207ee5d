use super::*;
use crate::qgroups::t;
use crate::report::{Status, Suite};

fn d2() -> &'static DoubleAlgebra {
    DoubleAlgebra::get(2).unwrap()
}

fn assert_passes(s: Suite) {
    assert!(s.passed(), "{}", s.to_text());
}

#[test]
fn cross_rules_sl2() {
    let d = d2();
    let p = |s: &str| d.format(&d.alg.nf(&d.parse(s).unwrap()));
    assert_eq!(p("a_2*a"), "a*a_2");
    assert_eq!(p("a_2*c"), "(v^-2)*c*a_2");
    assert_eq!(p("b_2*b"), "b*b_2");
    assert_eq!(p("d_2*d"), "d*d_2");
    assert_eq!(p("d_2*c"), "(v^2)*c*d_2");
}

#[test]
fn cross_rule_table_matches_direct_sum() {
    let d = d2();
    for u in d.a().gens() {
        for x in d.a().gens() {
            assert_eq!(d.alg.nf(d.cross_rule(u, x)), d.cross_commute(&[u], &[x]));
        }
    }
}

#[test]
fn split_and_embed() {
    let d = d2();
    let w = d.parse("a*b_2*c_2").unwrap();
    let (word, _) = w.terms().next().unwrap();
    let (x, y) = d.split(word);
    assert_eq!(d.a().format_word(&x), "a");
    assert_eq!(d.a().format_word(&y), "b*c");
    let b = NcPoly::gen(t(2, 1, 2));
    assert_eq!(d.format(&d.embed(&b, 1)), "b_2");
}

#[test]
fn double_is_hopf_at_degree_2() {
    assert_passes(crate::hopf::verify_hopf(&d2().alg, 2));
}

#[test]
fn derived_relations_sl2() {
    let r = derive_cross_relations(d2(), true, 200, 0);
    assert_eq!(r.relations.len(), 16);
    assert!(r.suite.passed(), "{}", r.suite.to_text());
    let warned: Vec<_> = r.suite.checks.iter().filter(|c| c.status == Status::Warn).map(|c| c.name.clone()).collect();
    assert!(!warned.is_empty());
    for line in paper_relations().iter().filter(|l| l.required) {
        assert!(r.suite.checks.iter().any(|c| c.name.contains(&format!("relation {}", line.label)) && c.status == Status::Pass));
    }
}

#[test]
fn structure_maps_respect_relations() {
    let d = d2();
    for m in [d.map_m().unwrap(), d.map_theta().unwrap(), d.map_xi().unwrap()] {
        assert_eq!(m.check_relations(), None);
    }
    assert_eq!(d.map_m().unwrap().check_coalgebra(), None);
    assert_eq!(d.map_theta().unwrap().check_coalgebra(), None);
}

#[test]
fn xi_routes_agree() {
    let d = d2();
    let xi = d.map_xi().unwrap();
    for w in d.alg.normal_words(2) {
        assert_eq!(xi.apply_word(&w), d.xi_direct(&w).unwrap());
    }
}

#[test]
fn xi_injective_sl2() {
    let d = d2();
    assert_eq!(check_xi_injective(d, 1).unwrap(), XiReport { degree: 1, rank: 9, count: 9 });
    assert!(check_xi_injective(d, 2).unwrap().passed());
}

#[test]
fn xi_of_a() {
    let d = d2();
    let xi = d.map_xi().unwrap();
    let img = xi.apply(&d.parse("a").unwrap());
    assert_eq!(xi.target().format(&img), "a*Ki_2");
}

#[test]
fn chi_theta_star_of_a() {
    let d = d2();
    let p = d.chi_theta_star(&[t(2, 1, 1)]).unwrap();
    assert_eq!(d.u_tensor_u().unwrap().format(&p), "Ki*K_2");
    assert_passes(chi_commutation_check(d).unwrap());
}

#[test]
fn localization_sl2() {
    assert_passes(localization_identities(d2()).unwrap());
}

#[test]
fn gamma_invariance_and_eta_sl2() {
    assert_passes(gamma_invariance_check(d2(), 2).unwrap());
    assert_passes(eta_quotient_check(d2(), 2).unwrap());
}

#[test]
fn braiding_sl2() {
    assert_passes(verify_braiding(d2(), 2).unwrap());
}

#[test]
fn twist_round_trip_sl2() {
    assert_passes(twist_round_trip(d2(), 2).unwrap());
}

#[test]
fn iterated_double_sl2() {
    assert_passes(verify_iterated(d2(), 20, 1).unwrap());
    assert!(iterated_double(d2(), 4).is_err());
}

#[test]
fn bracket_cocycle_and_delta_pullback() {
    let s = cocycle_suite(d2(), 1).unwrap();
    for c in s.checks.iter().filter(|c| !c.name.contains("Delta")) {
        assert_eq!(c.status, Status::Pass, "{}", c.name);
    }
    // Δ is not a coalgebra map, so its pullback is not expected to be a cocycle.
    assert!(s.checks.iter().any(|c| c.name.contains("pullback along Delta") && c.status == Status::Fail));
}

#[test]
fn sl3_double_basics() {
    let d = DoubleAlgebra::get(3).unwrap();
    assert_eq!(check_xi_injective(d, 1).unwrap(), XiReport { degree: 1, rank: 19, count: 19 });
    assert_passes(gamma_invariance_check(d, 1).unwrap());
    assert!(DoubleAlgebra::get(4).is_err());
}
