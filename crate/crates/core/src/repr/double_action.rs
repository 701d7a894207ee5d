use super::mat::Mat;
use super::module::{build_L, trivial_module, vector_module, WeightModule};
use crate::double::DoubleAlgebra;
use crate::freealg::{Gen, NcPoly};
use crate::hopf::{Algebra, Form};
use crate::qgroups::QgError;
use crate::report::Suite;

/// V = M ⊗ N as a module over U_q(d(g)) through χ: m*(u) acts by Δ(u) and
/// θ*(c) by χθ*(c) = Σ l⁻S(c1) ⊗ l⁺S(c2), each tensor factor of U ⊗ U
/// acting on its own factor of V.
pub struct DoubleModule {
    pub double: &'static DoubleAlgebra,
    pub left: WeightModule,
    pub right: WeightModule,
    /// M ⊗ N with the diagonal action of U_q.
    pub diagonal: WeightModule,
    /// χθ*(c) for each generator c of A, in generator order.
    pub theta: Vec<(Gen, Mat)>,
}

/// L(ν) for sl2; for sl3 only the trivial (0) and vector (1) modules.
pub fn module_for(n: usize, nu: usize) -> Result<WeightModule, QgError> {
    match (n, nu) {
        (2, m) => Ok(build_L(m)),
        (3, 0) => Ok(trivial_module(3)),
        (3, 1) => Ok(vector_module(3)),
        _ => Err(QgError::Solver(format!("no module L({}) for sl{}: sl3 ships the trivial and vector modules", nu, n))),
    }
}

impl DoubleModule {
    pub fn new(double: &'static DoubleAlgebra, left: WeightModule, right: WeightModule) -> Result<Self, QgError> {
        let u = &double.group.u;
        let diagonal = left.tensor(&right, u);
        let mut out = DoubleModule { double, left, right, diagonal, theta: Vec::new() };
        for c in double.a().gens() {
            let m = out.act_uu(&double.chi_theta_star(&[c])?);
            out.theta.push((c, m));
        }
        Ok(out)
    }

    /// L(ν) ⊗ L(ν′) over the double of the given rank.
    pub fn build(n: usize, nu: usize, nuprime: usize) -> Result<Self, QgError> {
        DoubleModule::new(DoubleAlgebra::get(n)?, module_for(n, nu)?, module_for(n, nuprime)?)
    }

    pub fn dim(&self) -> usize {
        self.diagonal.dim()
    }

    /// An element of U ⊗ U acting factorwise.
    pub fn act_uu(&self, p: &NcPoly) -> Mat {
        let mut out = Mat::zeros(self.dim(), self.dim());
        for (w, c) in p.terms() {
            let cut = w.iter().position(|g| g.slot == 1).unwrap_or(w.len());
            let a: Vec<Gen> = w[..cut].to_vec();
            let b: Vec<Gen> = w[cut..].iter().map(|g| g.with_slot(0)).collect();
            out.add_scaled(&self.left.act_word(&a).kron(&self.right.act_word(&b)), c);
        }
        out
    }

    /// θ*(c) for a word c of A, from χθ* of the whole word.
    pub fn theta_word(&self, c: &[Gen]) -> Result<Mat, QgError> {
        Ok(self.act_uu(&self.double.chi_theta_star(c)?))
    }

    /// Generator operators: Δ(u) for the generators of U_q, then θ*(c) unless
    /// `diagonal_only`.
    pub fn operators(&self, diagonal_only: bool) -> Vec<Mat> {
        let u = &self.double.group.u;
        let mut ops: Vec<Mat> = u.gens().into_iter().map(|g| self.diagonal.generator(g).clone()).collect();
        if !diagonal_only {
            ops.extend(self.theta.iter().map(|(_, m)| m.clone()));
        }
        ops
    }

    /// The action is well defined: U_q relations hold, θ* reverses products
    /// of generator pairs (an algebra map from A^op), the relations of A
    /// map to zero, and the commutation identity
    ///   Σ θ*(a1) Δ(u1) ⟨u2, a2⟩ = Σ ⟨u1, a1⟩ Δ(u2) θ*(a2)
    /// holds as matrices on generators.
    pub fn check(&self) -> Result<Suite, QgError> {
        let g = self.double.group;
        let (u, a): (&Algebra, &Algebra) = (&g.u, &g.a);
        let mut suite = Suite::new(format!("double-action[{}]", self.diagonal.label));
        suite.record("U_q relations hold under Delta", self.diagonal.check_relations(u));

        let mut bad = None;
        for (x, mx) in &self.theta {
            for (y, my) in &self.theta {
                if self.theta_word(&[*x, *y])? != my.mul(mx) {
                    bad.get_or_insert_with(|| format!("theta*({}) != theta*({}) theta*({})", a.format_word(&[*x, *y]), a.format_word(&[*y]), a.format_word(&[*x])));
                }
            }
        }
        suite.record("theta* is anti-multiplicative on generator pairs", bad);

        let mut bad = None;
        for (label, r) in a.relation_polys() {
            let mut m = Mat::zeros(self.dim(), self.dim());
            for (w, c) in r.terms() {
                m.add_scaled(&self.theta_word(w)?, c);
            }
            if !m.is_zero() {
                bad.get_or_insert(label);
            }
        }
        suite.record("relations of A act by zero through theta*", bad);

        let theta_of = |w: &[Gen]| -> Result<Mat, QgError> {
            if w.is_empty() {
                Ok(Mat::identity(self.dim()))
            } else {
                self.theta_word(w)
            }
        };
        let mut bad = None;
        for x in a.gens() {
            for ug in u.gens() {
                let mut lhs = Mat::zeros(self.dim(), self.dim());
                let mut rhs = Mat::zeros(self.dim(), self.dim());
                for (a1, a2, ca) in a.sweedler(&[x]).iter() {
                    for (u1, u2, cu) in u.sweedler(&[ug]).iter() {
                        let c = ca * cu;
                        let p = g.pairing.eval_words(u2, a2);
                        if !p.is_zero() {
                            lhs.add_scaled(&theta_of(a1)?.mul(&self.diagonal.act_word(u1)), &(&c * &p));
                        }
                        let p = g.pairing.eval_words(u1, a1);
                        if !p.is_zero() {
                            rhs.add_scaled(&self.diagonal.act_word(u2).mul(&theta_of(a2)?), &(&c * &p));
                        }
                    }
                }
                if lhs != rhs {
                    bad.get_or_insert_with(|| format!("u={} a={}", u.format_word(&[ug]), a.format_word(&[x])));
                }
            }
        }
        suite.record("commutation identity between Delta(u) and theta*(a)", bad);
        Ok(suite)
    }
}
