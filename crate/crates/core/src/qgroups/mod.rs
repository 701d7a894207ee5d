//! The two quantum groups of type A_{n-1} for n = 2, 3: the coordinate
//! algebra C_q[SL(n)] and U_q(sl_n), plus the skew pairing β on C_q[SL(n)].

mod beta;
mod cartan;
mod group;
mod lmaps;
mod oq;
mod uq;

pub use beta::{beta_support, build_beta, det_is_central_for, solve_beta, BetaSolve, Orientation};
pub use cartan::{CartanDatum, Weight};
pub use group::QuantumGroup;
pub use lmaps::{check_lmap_values, solve_lmap, solve_lmaps, LMaps, Sign};
pub use oq::{build_oq_sln, oq_names, quantum_determinant, t};
pub use uq::{build_uq_cop, build_uq_sln, uq_antipode_inverse, uq_names, UqLayout};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QgError {
    #[error("SL({0}) is not supported (n must be 2 or 3)")]
    Unsupported(usize),
    #[error("solver: {0}")]
    Solver(String),
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{pairs_up_to, verify_braided_commutativity, verify_hopf, verify_skew_pairing, Algebra};

    #[test]
    fn sl2_coordinate_ring() {
        let a = Algebra::single(build_oq_sln(2).unwrap());
        let nf = |s: &str| a.format(&a.parse(s).unwrap());
        assert_eq!(nf("b*a"), "(v^2)*a*b");
        assert_eq!(nf("d*a"), "1 + (v^2)*b*c");
        assert_eq!(nf("a*d"), "1 + (v^-2)*b*c");
        let s: Vec<String> = a.gens().iter().map(|g| a.format(&a.antipode_word(&[*g]))).collect();
        assert_eq!(s, ["d", "(-1*v^2)*b", "(-1*v^-2)*c", "a"]);
    }

    #[test]
    fn confluence() {
        for n in [2, 3] {
            let a = Algebra::single(build_oq_sln(n).unwrap());
            let bad = a.rewrite_system().confluence_check(3);
            assert!(bad.is_empty(), "O_q sl{}: {:?}", n, bad.first());
            let u = Algebra::single(build_uq_sln(n).unwrap());
            let bad = u.rewrite_system().confluence_check(4);
            assert!(bad.is_empty(), "U_q sl{}: {:?}", n, bad.first());
        }
    }

    #[test]
    fn hopf_axioms() {
        for n in [2, 3] {
            for p in [build_oq_sln(n).unwrap(), build_uq_sln(n).unwrap(), build_uq_cop(n).unwrap()] {
                let suite = verify_hopf(&Algebra::single(p), 2);
                assert!(suite.passed(), "{}", suite.to_text());
            }
        }
    }

    #[test]
    fn beta_tables() {
        for n in [2, 3] {
            let a = Algebra::single(build_oq_sln(n).unwrap());
            let sol = solve_beta(&a, n, Orientation::Upper).unwrap();
            assert_eq!(sol.nullity, 1);
            let d = CartanDatum::sl(n).unwrap();
            let r = crate::scalars::Scalar::v_pow(-d.big_d / n as i32);
            let q = crate::scalars::Scalar::v_pow(d.big_d);
            let qd = &q - &q.inv().unwrap();
            for i in 1..=n {
                for k in 1..=n {
                    let expect = if i == k { &r * &q } else { r.clone() };
                    assert_eq!(sol.form.entry(t(n, i, i), t(n, k, k)), expect);
                    if i < k {
                        assert_eq!(sol.form.entry(t(n, i, k), t(n, k, i)), &r * &qd);
                    }
                }
            }
            let words = a.normal_words(2);
            let pairs = pairs_up_to(&words, 2);
            assert!(verify_braided_commutativity(sol.form.as_ref(), &pairs).is_none());
            assert!(det_is_central_for(sol.form.as_ref(), n, &words).is_none());
        }
    }

    #[test]
    fn beta_pairing_axioms() {
        let a = Algebra::single(build_oq_sln(2).unwrap());
        let beta: crate::hopf::FormRef = build_beta(&a, 2, Orientation::Upper).unwrap();
        let inv: crate::hopf::FormRef = std::sync::Arc::new(crate::hopf::InverseViaAntipode::new(beta.clone()));
        let suite = verify_skew_pairing(&beta, &inv, 2);
        assert!(suite.passed(), "{}", suite.to_text());
    }
}

#[cfg(test)]
mod lmap_tests {
    use super::*;

    #[test]
    fn sl2_lmaps() {
        let g = QuantumGroup::get(2).unwrap();
        let l = g.lmaps().unwrap();
        let img = |m: &crate::hopf::HopfMap, s: &str| g.u.format(m.image(g.a.gens()[["a", "b", "c", "d"].iter().position(|x| *x == s).unwrap()]));
        assert_eq!(img(&l.plus, "a"), "Ki");
        assert_eq!(img(&l.plus, "d"), "K");
        assert_eq!(img(&l.plus, "c"), "0");
        assert_eq!(img(&l.plus, "b"), "(1 + -1*v^-4)*e*Ki");
        assert_eq!(img(&l.minus, "a"), "K");
        assert_eq!(img(&l.minus, "b"), "0");
        assert_eq!(img(&l.minus, "c"), "(-1*v^2 + v^-2)*f*K");
    }

    #[test]
    fn lmaps_are_hopf_maps() {
        for n in [2, 3] {
            let g = QuantumGroup::get(n).unwrap();
            let l = g.lmaps().unwrap();
            for (sign, m) in [(Sign::Plus, &l.plus), (Sign::Minus, &l.minus)] {
                assert!(m.check_relations().is_none(), "sl{} {:?}: {:?}", n, sign, m.check_relations());
                assert!(m.check_coalgebra().is_none(), "sl{} {:?}: {:?}", n, sign, m.check_coalgebra());
                let (mx, my) = if n == 2 { (2, 3) } else { (1, 3) };
                let bad = check_lmap_values(sign, m, g.beta.as_ref(), g.beta_inv.as_ref(), g.pairing.as_ref(), mx, my);
                assert!(bad.is_none(), "sl{} {:?}: {:?}", n, sign, bad);
            }
        }
    }
}
