use std::sync::Arc;

use dashmap::DashMap;

use super::module::{vector_module, WeightModule};
use crate::freealg::Gen;
use crate::hopf::{Algebra, Form};
use crate::scalars::Scalar;

/// The evaluation pairing ⟨u, t_{i1 j1} ... t_{ir jr}⟩ between U_q(sl_n) and
/// C_q[SL(n)]: the ((i1..ir), (j1..jr)) entry of u acting on V^{⊗r}.
pub struct UaPairing {
    n: usize,
    u: Arc<Algebra>,
    a: Arc<Algebra>,
    powers: DashMap<usize, Arc<WeightModule>>,
}

impl UaPairing {
    pub fn new(n: usize, u: Arc<Algebra>, a: Arc<Algebra>) -> Self {
        let powers = DashMap::new();
        powers.insert(1, Arc::new(vector_module(n)));
        UaPairing { n, u, a, powers }
    }

    /// V^{⊗r}, built through the coproduct of U.
    pub fn tensor_power(&self, r: usize) -> Arc<WeightModule> {
        if let Some(hit) = self.powers.get(&r) {
            return hit.clone();
        }
        let prev = self.tensor_power(r - 1);
        let v = self.tensor_power(1);
        let m = Arc::new(prev.tensor(&v, &self.u));
        self.powers.insert(r, m.clone());
        m
    }

    pub fn vector(&self) -> Arc<WeightModule> {
        self.tensor_power(1)
    }

    fn index(&self, a: &[Gen]) -> (usize, usize) {
        let (mut row, mut col) = (0, 0);
        for g in a {
            row = row * self.n + g.id as usize / self.n;
            col = col * self.n + g.id as usize % self.n;
        }
        (row, col)
    }
}

impl Form for UaPairing {
    fn name(&self) -> String {
        "<U,A>".into()
    }
    fn left(&self) -> &Arc<Algebra> {
        &self.u
    }
    fn right(&self) -> &Arc<Algebra> {
        &self.a
    }
    fn eval_words(&self, u: &[Gen], a: &[Gen]) -> Scalar {
        if a.is_empty() {
            return self.u.counit_word(u);
        }
        let m = self.tensor_power(a.len());
        let (i, j) = self.index(a);
        m.act_word(u).get(i, j).clone()
    }
}
