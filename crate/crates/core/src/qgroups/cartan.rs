use num_traits::{ToPrimitive, Zero};

use crate::scalars::{rat, LaurentScalar, Rat};

use super::QgError;

/// Integer coordinates in the basis of fundamental weights.
pub type Weight = Vec<i64>;

/// Type A_{n-1} data for SL(n): Cartan matrix, the symmetric form on the
/// weight lattice P, and the root denominator D with q = v^D.
#[derive(Clone, Debug, PartialEq)]
pub struct CartanDatum {
    pub n: usize,
    pub rank: usize,
    pub cartan: Vec<Vec<i64>>,
    /// q = v^D, D = lcm(2, n): every q^{(λ,μ)} and q^{1/n} is a power of v.
    pub big_d: i32,
    omega_form: Vec<Vec<Rat>>,
}

impl CartanDatum {
    pub fn sl(n: usize) -> Result<Self, QgError> {
        if !(2..=3).contains(&n) {
            return Err(QgError::Unsupported(n));
        }
        let rank = n - 1;
        let cartan: Vec<Vec<i64>> =
            (0..rank).map(|i| (0..rank).map(|j| if i == j { 2 } else if i.abs_diff(j) == 1 { -1 } else { 0 }).collect()).collect();
        // (ω_i, ω_j) = min(i,j)(n - max(i,j))/n with 1-based indices.
        let omega_form = (1..=rank)
            .map(|i| (1..=rank).map(|j| Rat::new((i.min(j) * (n - i.max(j))).into(), (n as i64).into())).collect())
            .collect();
        let big_d = if n % 2 == 0 { n as i32 } else { 2 * n as i32 };
        Ok(CartanDatum { n, rank, cartan, big_d, omega_form })
    }

    pub fn zero(&self) -> Weight {
        vec![0; self.rank]
    }

    pub fn fundamental(&self, i: usize) -> Weight {
        let mut w = self.zero();
        w[i] = 1;
        w
    }

    /// α_i = Σ_j a_ij ω_j.
    pub fn simple_root(&self, i: usize) -> Weight {
        self.cartan[i].clone()
    }

    pub fn pairing(&self, a: &[i64], b: &[i64]) -> Rat {
        let mut acc = Rat::zero();
        for i in 0..self.rank {
            for j in 0..self.rank {
                acc += &self.omega_form[i][j] * rat(a[i] * b[j]);
            }
        }
        acc
    }

    /// D·(λ, μ), the exponent of v in q^{(λ,μ)}.
    pub fn q_exp(&self, a: &[i64], b: &[i64]) -> i32 {
        let x = self.pairing(a, b) * rat(self.big_d as i64);
        assert!(x.is_integer(), "non-integral exponent");
        x.to_integer().to_i32().expect("exponent overflow")
    }

    pub fn q_power(&self, a: &[i64], b: &[i64]) -> LaurentScalar {
        LaurentScalar::v_pow(self.q_exp(a, b))
    }

    /// ε_k (1-based) in the ω basis: ω_1, ω_k - ω_{k-1}, ..., -ω_{n-1}.
    pub fn epsilon(&self, k: usize) -> Weight {
        let mut w = self.zero();
        if k <= self.rank {
            w[k - 1] += 1;
        }
        if k >= 2 {
            w[k - 2] -= 1;
        }
        w
    }

    /// Weights of the vector representation basis v_1..v_n, lowest first:
    /// v_i has weight ε_{n+1-i}.
    pub fn vector_weights(&self) -> Vec<Weight> {
        (1..=self.n).map(|i| self.epsilon(self.n + 1 - i)).collect()
    }

    /// The longest Weyl element: w0(ε_k) = ε_{n+1-k}.
    pub fn w0(&self, w: &[i64]) -> Weight {
        // w0(ω_i) = -ω_{n-i}
        let mut out = self.zero();
        for i in 0..self.rank {
            out[self.rank - 1 - i] -= w[i];
        }
        out
    }

    pub fn add(&self, a: &[i64], b: &[i64]) -> Weight {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    pub fn neg(&self, a: &[i64]) -> Weight {
        a.iter().map(|x| -x).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn forms() {
        let c = CartanDatum::sl(3).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                let expect = rat(c.cartan[i][j]);
                assert_eq!(c.pairing(&c.simple_root(i), &c.simple_root(j)), expect);
                assert_eq!(c.pairing(&c.simple_root(i), &c.fundamental(j)), rat((i == j) as i64));
            }
        }
        let w = c.vector_weights();
        assert_eq!(w, vec![vec![0, -1], vec![-1, 1], vec![1, 0]]);
        assert_eq!(c.w0(&c.fundamental(0)), vec![0, -1]);
        let c2 = CartanDatum::sl(2).unwrap();
        assert_eq!(c2.q_exp(&[1], &[1]), 1);
        assert!(CartanDatum::sl(4).is_err());
    }
}
