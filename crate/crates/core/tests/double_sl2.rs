//! End-to-end checks on the sl2 double through the public API.

use qdouble::double::{derive_cross_relations, paper_relations, DoubleAlgebra, GammaForm};
use qdouble::hopf::{verify_hopf, Form};
use qdouble::qgroups::QuantumGroup;
use qdouble::repr::{is_simple, peter_weyl_rank, DoubleModule};
use qdouble::report::Status;

#[test]
fn normal_form_of_ba() {
    let a = &QuantumGroup::get(2).unwrap().a;
    assert_eq!(a.format(&a.nf(&a.parse("b*a").unwrap())), "(v^2)*a*b");
    assert_eq!(a.format(&a.nf(&a.parse("a*d + (-1*v^-2)*b*c").unwrap())), "1");
}

#[test]
fn beta_is_unital() {
    let g = QuantumGroup::get(2).unwrap();
    let one = g.a.parse("1").unwrap();
    for x in ["a", "b", "c", "d"] {
        let p = g.a.parse(x).unwrap();
        assert_eq!(g.beta.eval(&one, &p), g.a.counit(&p));
        assert_eq!(g.beta.eval(&p, &one), g.a.counit(&p));
    }
}

#[test]
fn gamma_restricts_to_beta_on_the_first_factor() {
    let d = DoubleAlgebra::get(2).unwrap();
    let gamma = GammaForm::new(d).unwrap();
    let g = d.group;
    for x in ["a", "b", "c", "d"] {
        for y in ["a", "b", "c", "d"] {
            let (px, py) = (d.parse(x).unwrap(), d.parse(y).unwrap());
            assert_eq!(gamma.eval(&px, &py), g.beta.eval(&g.a.parse(x).unwrap(), &g.a.parse(y).unwrap()));
        }
    }
}

#[test]
fn required_printed_relations_hold() {
    let d = DoubleAlgebra::get(2).unwrap();
    let r = derive_cross_relations(d, true, 50, 3);
    for line in paper_relations().into_iter().filter(|l| l.required) {
        let check = r.suite.checks.iter().find(|c| c.name.contains(&format!("relation {}:", line.label))).unwrap();
        assert_eq!(check.status, Status::Pass, "{}", check.name);
    }
}

#[test]
fn double_hopf_axioms_at_degree_3() {
    let s = verify_hopf(&DoubleAlgebra::get(2).unwrap().alg, 3);
    assert!(s.passed(), "{}", s.to_text());
}

#[test]
fn simple_modules_of_the_double() {
    for (nu, nup) in [(1, 1), (2, 1), (1, 2), (2, 2)] {
        let m = DoubleModule::build(2, nu, nup).unwrap();
        assert_eq!(is_simple(m.dim(), &m.operators(false), 0).is_simple(), Some(true), "({}, {})", nu, nup);
    }
    let m = DoubleModule::build(2, 1, 1).unwrap();
    let diag = is_simple(m.dim(), &m.operators(true), 0);
    assert_eq!(diag.witness_dim(), Some(3));
    assert_eq!(peter_weyl_rank(&m.operators(false), m.dim(), None), 16);
}
