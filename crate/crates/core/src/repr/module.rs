use dashmap::DashMap;

use super::mat::Mat;
use crate::freealg::{Gen, NcPoly, Word};
use crate::hopf::Algebra;
use crate::qgroups::{CartanDatum, UqLayout, Weight};
use crate::scalars::{q_integer, Scalar};

/// A finite-dimensional U_q(sl_n)-module with a weight basis.
pub struct WeightModule {
    pub label: String,
    pub weights: Vec<Weight>,
    gens: Vec<Mat>,
    memo: DashMap<Word, Mat>,
}

impl Clone for WeightModule {
    fn clone(&self) -> Self {
        WeightModule::from_generators(self.label.clone(), self.weights.clone(), self.gens.clone())
    }
}

impl std::fmt::Debug for WeightModule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "WeightModule({}, dim {})", self.label, self.dim())
    }
}

impl WeightModule {
    pub fn from_generators(label: String, weights: Vec<Weight>, gens: Vec<Mat>) -> Self {
        WeightModule { label, weights, gens, memo: DashMap::new() }
    }

    /// Builds the module from e_i/f_i matrices, with K_i acting by q^{(ω_i, wt)}.
    pub fn from_ladder(label: String, d: &CartanDatum, weights: Vec<Weight>, e: Vec<Mat>, f: Vec<Mat>) -> Self {
        let l = UqLayout { rank: d.rank };
        let mut gens = vec![Mat::zeros(0, 0); 4 * d.rank];
        for i in 0..d.rank {
            gens[l.e(i).id as usize] = e[i].clone();
            gens[l.f(i).id as usize] = f[i].clone();
            let w = d.fundamental(i);
            let k: Vec<Scalar> = weights.iter().map(|mu| Scalar::from(d.q_power(&w, mu))).collect();
            let ki: Vec<Scalar> = k.iter().map(|x| x.inv().unwrap()).collect();
            gens[l.k(i).id as usize] = Mat::diag(k);
            gens[l.k_inv(i).id as usize] = Mat::diag(ki);
        }
        WeightModule::from_generators(label, weights, gens)
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn generator(&self, g: Gen) -> &Mat {
        &self.gens[g.id as usize]
    }

    pub fn act_word(&self, w: &[Gen]) -> Mat {
        if w.is_empty() {
            return Mat::identity(self.dim());
        }
        if w.len() == 1 {
            return self.gens[w[0].id as usize].clone();
        }
        let key: Word = w.iter().copied().collect();
        if let Some(hit) = self.memo.get(&key) {
            return hit.clone();
        }
        let out = self.gens[w[0].id as usize].mul(&self.act_word(&w[1..]));
        self.memo.insert(key, out.clone());
        out
    }

    pub fn act(&self, p: &NcPoly) -> Mat {
        let mut out = Mat::zeros(self.dim(), self.dim());
        for (w, c) in p.terms() {
            out.add_scaled(&self.act_word(w), c);
        }
        out
    }

    /// Every defining relation of `u` acts by zero.
    pub fn check_relations(&self, u: &Algebra) -> Option<String> {
        for (label, r) in u.relation_polys() {
            if !self.act(&r).is_zero() {
                return Some(format!("{} on {}", label, self.label));
            }
        }
        None
    }

    /// Tensor product through the coproduct of `u`.
    pub fn tensor(&self, other: &WeightModule, u: &Algebra) -> WeightModule {
        let gens = u
            .gens()
            .iter()
            .map(|&g| {
                let mut m = Mat::zeros(self.dim() * other.dim(), self.dim() * other.dim());
                for (w, c) in u.coproduct_word(&[g]).terms() {
                    let (a, b) = u.split_square_word(w);
                    m.add_scaled(&self.act_word(&a).kron(&other.act_word(&b)), c);
                }
                m
            })
            .collect();
        let weights = self.weights.iter().flat_map(|x| other.weights.iter().map(move |y| x.iter().zip(y).map(|(a, b)| a + b).collect())).collect();
        WeightModule::from_generators(format!("{}⊗{}", self.label, other.label), weights, gens)
    }

    /// The dual module: u acts by the transpose of S(u).
    pub fn dual(&self, u: &Algebra) -> WeightModule {
        let gens = u.gens().iter().map(|&g| self.act(&u.antipode_word(&[g])).transpose()).collect();
        let weights = self.weights.iter().map(|w| w.iter().map(|x| -x).collect()).collect();
        WeightModule::from_generators(format!("{}*", self.label), weights, gens)
    }

    /// Indices of basis vectors grouped by weight, in order of first appearance.
    pub fn weight_spaces(&self) -> Vec<(Weight, Vec<usize>)> {
        let mut out: Vec<(Weight, Vec<usize>)> = Vec::new();
        for (i, w) in self.weights.iter().enumerate() {
            match out.iter_mut().find(|(x, _)| x == w) {
                Some((_, v)) => v.push(i),
                None => out.push((w.clone(), vec![i])),
            }
        }
        out
    }
}

/// L(m) for U_q(sl_2): basis w_0..w_m of weights m, m-2, ..., -m (highest
/// first), e w_k = [m-k+1] w_{k-1}, f w_k = [k+1] w_{k+1}.
#[allow(non_snake_case)]
pub fn build_L(m: usize) -> WeightModule {
    let d = CartanDatum::sl(2).expect("sl2");
    let dim = m + 1;
    let mut e = Mat::zeros(dim, dim);
    let mut f = Mat::zeros(dim, dim);
    for k in 0..dim {
        if k >= 1 {
            e.set(k - 1, k, Scalar::from(q_integer((m - k + 1) as i64, 1, d.big_d)));
        }
        if k + 1 < dim {
            f.set(k + 1, k, Scalar::from(q_integer((k + 1) as i64, 1, d.big_d)));
        }
    }
    let weights = (0..dim).map(|k| vec![m as i64 - 2 * k as i64]).collect();
    WeightModule::from_ladder(format!("L({})", m), &d, weights, vec![e], vec![f])
}

/// The vector representation with basis v_1..v_n, v_i of weight ε_{n+1-i}
/// (lowest first): e_j v_{n-j} = v_{n+1-j}, f_j the transpose.
pub fn vector_module(n: usize) -> WeightModule {
    let d = CartanDatum::sl(n).expect("supported rank");
    let mut e = Vec::new();
    let mut f = Vec::new();
    for j in 1..=d.rank {
        // α_j = ε_j - ε_{j+1} moves v_{n-j} (weight ε_{j+1}) to v_{n+1-j} (weight ε_j).
        e.push(Mat::unit(n, n - j, n - j - 1));
        f.push(Mat::unit(n, n - j - 1, n - j));
    }
    WeightModule::from_ladder("V".to_string(), &d, d.vector_weights(), e, f)
}

/// The one-dimensional trivial module: e, f act by 0 and K by 1.
pub fn trivial_module(n: usize) -> WeightModule {
    let d = CartanDatum::sl(n).expect("supported rank");
    let z = vec![Mat::zeros(1, 1); d.rank];
    WeightModule::from_ladder("L(0)".to_string(), &d, vec![vec![0; d.rank]], z.clone(), z)
}
