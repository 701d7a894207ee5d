//! Finite-dimensional weight modules of U_q(sl_n), the evaluation pairing
//! with C_q[SL(n)], double actions, simplicity and braided flags.

mod double_action;
mod flags;
mod mat;
pub mod modp;
mod module;
mod pairing;
mod simple;

pub use double_action::{module_for, DoubleModule};
pub use flags::{braiding_operator, flag_invariance_check, Comodule, FlagOrder};
pub use mat::{dense, sparse, Mat};
pub use module::{build_L, trivial_module, vector_module, WeightModule};
pub use pairing::UaPairing;
pub use simple::{algebra_span, closure, commutant, is_simple, peter_weyl_rank, Simplicity};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::Form;
    use crate::qgroups::QuantumGroup;

    #[test]
    fn modules_respect_relations() {
        let g2 = QuantumGroup::get(2).unwrap();
        for m in 0..4 {
            assert!(build_L(m).check_relations(&g2.u).is_none());
        }
        for n in [2, 3] {
            let g = QuantumGroup::get(n).unwrap();
            let v = vector_module(n);
            assert!(v.check_relations(&g.u).is_none());
            assert!(v.dual(&g.u).check_relations(&g.u).is_none());
            assert!(g.pairing.tensor_power(2).check_relations(&g.u).is_none());
        }
    }

    #[test]
    fn pairing_kills_coordinate_relations() {
        for n in [2, 3] {
            let g = QuantumGroup::get(n).unwrap();
            let us = g.u.normal_words(2);
            for (label, r) in g.a.relation_polys() {
                for u in &us {
                    let x = g.pairing.eval_word_poly(u, &r);
                    assert!(x.is_zero(), "sl{}: <{}, {}> = {}", n, g.u.format_word(u), label, x);
                }
            }
        }
    }

    #[test]
    fn double_action_is_well_defined() {
        for (a, b) in [(0, 0), (1, 0), (1, 1), (2, 1)] {
            let m = DoubleModule::build(2, a, b).unwrap();
            let s = m.check().unwrap();
            assert!(s.passed(), "{}", s.to_text());
        }
    }

    #[test]
    fn theta_star_of_a_is_cartan() {
        let m = DoubleModule::build(2, 1, 1).unwrap();
        let g = QuantumGroup::get(2).unwrap();
        let l = crate::qgroups::UqLayout { rank: 1 };
        let want = build_L(1).generator(l.k_inv(0)).kron(build_L(1).generator(l.k(0)));
        assert_eq!(m.theta[0].1, want);
        assert_eq!(m.theta[0].0, crate::qgroups::t(2, 1, 1));
        assert_eq!(g.a.format_word(&[m.theta[0].0]), "a");
    }

    #[test]
    fn simplicity_sl2() {
        for (a, b) in [(1, 1), (2, 1), (1, 2)] {
            let m = DoubleModule::build(2, a, b).unwrap();
            assert_eq!(is_simple(m.dim(), &m.operators(false), 0), Simplicity::Simple, "({}, {})", a, b);
        }
        let m = DoubleModule::build(2, 1, 1).unwrap();
        let diag = is_simple(m.dim(), &m.operators(true), 0);
        assert_eq!(diag.is_simple(), Some(false));
        assert_eq!(diag.witness_dim(), Some(3));
        assert_eq!(is_simple(1, &[], 0), Simplicity::Simple);
    }

    #[test]
    fn simplicity_agrees_with_brute_force_mod_p() {
        let g = QuantumGroup::get(2).unwrap();
        let mut cases: Vec<(String, usize, Vec<Mat>)> = Vec::new();
        for m in 0..4 {
            let l = build_L(m);
            let ops = g.u.gens().into_iter().map(|x| l.generator(x).clone()).collect();
            cases.push((format!("L({})", m), l.dim(), ops));
        }
        for (a, b) in [(1, 0), (0, 1), (1, 1)] {
            let m = DoubleModule::build(2, a, b).unwrap();
            for diag in [false, true] {
                cases.push((format!("({}, {}) diagonal={}", a, b, diag), m.dim(), m.operators(diag)));
            }
        }
        for (label, dim, ops) in cases {
            let exact = is_simple(dim, &ops, 0).is_simple();
            let brute = modp::is_simple_mod_p(&ops, dim, 2, 29);
            assert_eq!(exact, brute, "{}", label);
        }
    }

    #[test]
    fn commutant_detects_reducibility() {
        let m = DoubleModule::build(2, 1, 1).unwrap();
        assert_eq!(commutant(&m.operators(false), 4).len(), 1);
        assert_eq!(commutant(&m.operators(true), 4).len(), 2);
    }

    #[test]
    fn peter_weyl_ranks() {
        for ((a, b), want) in [((0, 0), 1), ((1, 0), 4), ((1, 1), 16)] {
            let m = DoubleModule::build(2, a, b).unwrap();
            assert_eq!(peter_weyl_rank(&m.operators(false), m.dim(), None), want);
            assert_eq!(peter_weyl_rank(&m.operators(false), m.dim(), Some(3)), want);
        }
        let m = DoubleModule::build(2, 1, 1).unwrap();
        assert_eq!(peter_weyl_rank(&m.operators(true), 4, None), 10);
    }

    #[test]
    fn flags_sl2() {
        let s = flag_invariance_check(crate::double::DoubleAlgebra::get(2).unwrap()).unwrap();
        assert!(s.passed(), "{}", s.to_text());
    }

    #[test]
    fn sl3_modules() {
        assert!(module_for(3, 2).is_err());
        let m = DoubleModule::build(3, 1, 0).unwrap();
        assert_eq!(m.dim(), 3);
        assert!(m.check().unwrap().passed());
        assert_eq!(is_simple(3, &m.operators(false), 0), Simplicity::Simple);
    }
}
