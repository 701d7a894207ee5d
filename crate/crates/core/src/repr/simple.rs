use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::mat::{dense, sparse, Mat};
use super::modp;
use crate::scalars::linalg::nullspace;
use crate::scalars::{Scalar, SparseVec, Subspace};

/// Outcome of a simplicity test over Q(v).
#[derive(Clone, Debug, PartialEq)]
pub enum Simplicity {
    /// The operators span End(V), so V is (absolutely) simple.
    Simple,
    /// A proper nonzero invariant subspace, given by a basis.
    Reducible(Vec<SparseVec>),
    /// No invariant subspace was found but the commutant has this dimension.
    Undecided(usize),
}

impl Simplicity {
    pub fn is_simple(&self) -> Option<bool> {
        match self {
            Simplicity::Simple => Some(true),
            Simplicity::Reducible(_) => Some(false),
            Simplicity::Undecided(_) => None,
        }
    }

    pub fn witness_dim(&self) -> Option<usize> {
        match self {
            Simplicity::Reducible(b) => Some(b.len()),
            _ => None,
        }
    }
}

/// The smallest subspace containing `start` and closed under `ops`.
pub fn closure(ops: &[Mat], start: &SparseVec) -> Subspace {
    let dim = ops.first().map_or(0, |m| m.cols());
    let mut span = Subspace::new();
    if span.insert(start).is_none() {
        return span;
    }
    let mut queue = vec![start.clone()];
    while let Some(w) = queue.pop() {
        let w = dense(&w, dim);
        for x in ops {
            let y = sparse(&x.apply(&w));
            if let Some(r) = span.insert(&y) {
                queue.push(r);
            }
        }
    }
    span
}

/// Closure from each basis vector and a few seeded random vectors, then
/// Burnside: V is simple when the operators span End(V). Closures and the
/// span are first computed at a random point mod a prime, where full
/// dimension already proves full generic dimension; only a short closure is
/// recomputed exactly, to produce the witness. Failing both, a non-scalar commutant element
/// T with T - c singular for a diagonal entry c yields an invariant kernel.
pub fn is_simple(dim: usize, ops: &[Mat], seed: u64) -> Simplicity {
    if dim <= 1 {
        return Simplicity::Simple;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut starts: Vec<SparseVec> = (0..dim).map(|i| SparseVec::from([(i, Scalar::one())])).collect();
    for _ in 0..3 {
        let v: Vec<Scalar> = (0..dim).map(|_| Scalar::from_int(rng.gen_range(-5..=5))).collect();
        starts.push(sparse(&v));
    }
    let special = special_point(ops, seed);
    for s in starts.iter().filter(|s| !s.is_empty()) {
        if let Some((x, ops_p)) = &special {
            let start: Option<Vec<u64>> = dense(s, dim).iter().map(|c| c.eval_mod(*x, P)).collect();
            if start.is_some_and(|v| modp::closure_dim(ops_p, &v, P) == dim) {
                continue;
            }
        }
        let span = closure(ops, s);
        if span.dim() < dim {
            return Simplicity::Reducible(span.basis().cloned().collect());
        }
    }
    if full_rank_mod_p(ops, dim, seed) || algebra_span(ops, dim).dim() == dim * dim {
        return Simplicity::Simple;
    }
    let comm = commutant(ops, dim);
    for t in &comm {
        let t = Mat::from_flat(dim, &dense(t, dim * dim));
        for c in 0..dim {
            let shifted = t.sub(&Mat::identity(dim).scale(t.get(c, c)));
            let k = kernel(&shifted);
            if !k.is_empty() && k.len() < dim {
                return Simplicity::Reducible(k);
            }
        }
    }
    Simplicity::Undecided(comm.len())
}

fn kernel(m: &Mat) -> Vec<SparseVec> {
    let rows: Vec<SparseVec> = (0..m.rows()).map(|i| sparse(&(0..m.cols()).map(|j| m.get(i, j).clone()).collect::<Vec<_>>())).collect();
    nullspace(&rows, m.cols())
}

/// Basis of {T : T X = X T for all X in ops}, as flattened row-major vectors.
pub fn commutant(ops: &[Mat], dim: usize) -> Vec<SparseVec> {
    let var = |i: usize, j: usize| i * dim + j;
    let mut rows = Vec::new();
    for x in ops {
        for i in 0..dim {
            for j in 0..dim {
                // (T X - X T)_{ij} = Σ_k T_ik X_kj - X_ik T_kj.
                let mut row = SparseVec::new();
                for k in 0..dim {
                    for (v, c) in [(var(i, k), x.get(k, j).clone()), (var(k, j), -x.get(i, k).clone())] {
                        if c.is_zero() {
                            continue;
                        }
                        let e = row.entry(v).or_insert_with(Scalar::zero);
                        *e = &*e + &c;
                    }
                }
                row.retain(|_, c| !c.is_zero());
                if !row.is_empty() {
                    rows.push(row);
                }
            }
        }
    }
    nullspace(&rows, dim * dim)
}

/// The span of all products of `ops` (identity included), flattened.
pub fn algebra_span(ops: &[Mat], dim: usize) -> Subspace {
    let mut span = Subspace::new();
    let id = Mat::identity(dim);
    span.insert(&id.flatten());
    let mut queue = vec![id];
    while let Some(m) = queue.pop() {
        for x in ops {
            let y = x.mul(&m);
            if span.insert(&y.flatten()).is_some() {
                queue.push(y);
            }
        }
    }
    span
}

const P: u64 = 2_147_483_647;

/// A seeded point x mod P at which every entry of `ops` is defined.
fn special_point(ops: &[Mat], seed: u64) -> Option<(u64, Vec<modp::MatP>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    (0..4).find_map(|_| {
        let x = rng.gen_range(2..P - 1);
        let m: Option<Vec<_>> = ops.iter().map(|m| modp::specialize(m, x, P)).collect();
        m.map(|m| (x, m))
    })
}

fn full_rank_mod_p(ops: &[Mat], dim: usize, seed: u64) -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..4 {
        let x = rng.gen_range(2..P - 1);
        if let Some(r) = modp::algebra_dim_mod_p(ops, dim, x, P) {
            return r == dim * dim;
        }
    }
    false
}

/// Rank of the Gram matrix between the dim² matrix coefficients of V and
/// the operators of all action words. With `fast`, the rank is computed at
/// a seeded random point mod a large prime, falling back to exact
/// elimination when that rank is not full.
pub fn peter_weyl_rank(ops: &[Mat], dim: usize, fast: Option<u64>) -> usize {
    if let Some(seed) = fast {
        if full_rank_mod_p(ops, dim, seed) {
            return dim * dim;
        }
    }
    algebra_span(ops, dim).dim()
}
