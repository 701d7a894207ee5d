//! Sparse exact linear algebra over `Q(v)`.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::field::FieldScalar;
use super::laurent::{modpow, mulmod, poly_divrem, poly_gcd, LaurentScalar};

/// A sparse vector: column index to nonzero scalar.
pub type SparseVec = BTreeMap<usize, FieldScalar>;

/// A sparse row-major matrix over `Q(v)`.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Matrix {
    pub ncols: usize,
    pub rows: Vec<SparseVec>,
}

impl Matrix {
    pub fn new(ncols: usize) -> Self {
        Matrix { ncols, rows: Vec::new() }
    }

    pub fn from_dense(rows: Vec<Vec<FieldScalar>>) -> Self {
        let ncols = rows.first().map_or(0, |r| r.len());
        let rows = rows
            .into_iter()
            .map(|r| {
                assert_eq!(r.len(), ncols, "ragged matrix");
                r.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect()
            })
            .collect();
        Matrix { ncols, rows }
    }

    pub fn identity(n: usize) -> Self {
        Matrix { ncols: n, rows: (0..n).map(|i| BTreeMap::from([(i, FieldScalar::one())])).collect() }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn push_row(&mut self, row: SparseVec) {
        debug_assert!(row.keys().all(|&c| c < self.ncols));
        self.rows.push(row.into_iter().filter(|(_, x)| !x.is_zero()).collect());
    }

    pub fn get(&self, r: usize, c: usize) -> FieldScalar {
        self.rows[r].get(&c).cloned().unwrap_or_else(FieldScalar::zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut rows = vec![SparseVec::new(); self.ncols];
        for (i, r) in self.rows.iter().enumerate() {
            for (c, x) in r {
                rows[*c].insert(i, x.clone());
            }
        }
        Matrix { ncols: self.rows.len(), rows }
    }
}

/// How `matrix_rank` computes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RankMode {
    /// Fraction-free elimination over `Q[v, v^-1]`.
    Exact,
    /// Rank modulo a prime at a random point first; a full-rank answer there is a
    /// proof of full generic rank, otherwise the exact path decides.
    Fast { seed: u64 },
}

/// Exact rank over `Q(v)`.
pub fn matrix_rank(m: &Matrix) -> usize {
    matrix_rank_with(m, RankMode::Exact)
}

pub fn matrix_rank_with(m: &Matrix, mode: RankMode) -> usize {
    if let RankMode::Fast { seed } = mode {
        let full = m.nrows().min(m.ncols);
        if let Some(r) = rank_mod_p(m, seed) {
            if r == full {
                return r;
            }
        }
    }
    exact_rank(m)
}

const PRIME: u64 = (1 << 61) - 1;

/// Rank of the specialisation `v := x mod p`; a lower bound for the generic rank.
pub fn rank_mod_p(m: &Matrix, seed: u64) -> Option<usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    'attempt: for _ in 0..8 {
        let x = rng.gen_range(2..PRIME - 1);
        let mut rows: Vec<Vec<u64>> = Vec::with_capacity(m.nrows());
        for r in &m.rows {
            let mut dense = vec![0u64; m.ncols];
            for (c, s) in r {
                match s.eval_mod(x, PRIME) {
                    Some(val) => dense[*c] = val,
                    None => continue 'attempt,
                }
            }
            rows.push(dense);
        }
        return Some(dense_rank_mod(rows, PRIME));
    }
    None
}

fn dense_rank_mod(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..ncols {
        let Some(piv) = (rank..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
        rows.swap(rank, piv);
        let inv = modpow(rows[rank][c], p - 2, p);
        let prow: Vec<u64> = rows[rank].iter().map(|&x| mulmod(x, inv, p)).collect();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == rank || row[c] == 0 {
                continue;
            }
            let f = row[c];
            for (x, &y) in row.iter_mut().zip(prow.iter()) {
                *x = (*x + p - mulmod(f, y, p)) % p;
            }
        }
        rows[rank] = prow;
        rank += 1;
    }
    rank
}

type LRow = BTreeMap<usize, LaurentScalar>;

/// Clears denominators of a row, returning Laurent entries.
fn to_laurent_row(r: &SparseVec) -> LRow {
    let mut l = LaurentScalar::one();
    for x in r.values() {
        if !x.is_laurent() {
            let d = x.denom();
            let (_, pl) = l.to_poly();
            let (_, pd) = d.to_poly();
            let g = poly_gcd(&pl, &pd);
            let (q, _) = poly_divrem(&pd, &g);
            l = &l * &LaurentScalar::from_poly(0, &q);
        }
    }
    r.iter()
        .map(|(c, x)| {
            let n = x.numer() * &l;
            (*c, n.div_exact(x.denom()).expect("denominator must divide row lcm"))
        })
        .collect()
}

/// Divides a Laurent row by the gcd of its entries (keeps coefficients small).
fn make_primitive(row: &mut LRow) {
    let mut g: Option<Vec<super::laurent::Rat>> = None;
    let mut min_e = i32::MAX;
    for x in row.values() {
        min_e = min_e.min(x.min_exp().unwrap());
        let (_, p) = x.to_poly();
        g = Some(match g {
            None => p,
            Some(g0) => poly_gcd(&g0, &p),
        });
        if g.as_ref().is_some_and(|g| g.len() == 1) {
            break;
        }
    }
    let Some(g) = g else { return };
    let glaur = if g.len() > 1 { Some(LaurentScalar::from_poly(0, &g)) } else { None };
    for x in row.values_mut() {
        let mut y = x.shift(-min_e);
        if let Some(gl) = &glaur {
            y = y.div_exact(gl).expect("gcd divides entry");
        }
        *x = y;
    }
    // Normalise the rational content by the first entry's leading coefficient.
    if let Some(first) = row.values().next() {
        let lc = first.leading_coeff().unwrap().recip();
        for x in row.values_mut() {
            *x = x.scale(&lc);
        }
    }
}

fn exact_rank(m: &Matrix) -> usize {
    let rows: Vec<LRow> = m.rows.iter().filter(|r| !r.is_empty()).map(to_laurent_row).collect();
    // Connected components of the row/column incidence graph are eliminated independently.
    let n = rows.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], i: usize) -> usize {
        let mut i = i;
        while p[i] != i {
            p[i] = p[p[i]];
            i = p[i];
        }
        i
    }
    let mut owner: BTreeMap<usize, usize> = BTreeMap::new();
    for (i, r) in rows.iter().enumerate() {
        for c in r.keys() {
            match owner.get(c) {
                Some(&j) => {
                    let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                    if a != b {
                        parent[a] = b;
                    }
                }
                None => {
                    owner.insert(*c, i);
                }
            }
        }
    }
    let mut comps: BTreeMap<usize, Vec<LRow>> = BTreeMap::new();
    for (i, r) in rows.into_iter().enumerate() {
        let root = find(&mut parent, i);
        comps.entry(root).or_default().push(r);
    }
    comps.into_values().map(eliminate).sum()
}

fn eliminate(mut rows: Vec<LRow>) -> usize {
    let mut rank = 0;
    loop {
        rows.retain(|r| !r.is_empty());
        if rows.is_empty() {
            return rank;
        }
        // Markowitz-style pivot: sparsest column, then the lightest entry in it.
        let mut count: BTreeMap<usize, usize> = BTreeMap::new();
        for r in &rows {
            for c in r.keys() {
                *count.entry(*c).or_default() += 1;
            }
        }
        let (&pc, _) = count.iter().min_by_key(|(c, k)| (**k, **c)).unwrap();
        let pr = rows
            .iter()
            .enumerate()
            .filter(|(_, r)| r.contains_key(&pc))
            .min_by_key(|(i, r)| (r[&pc].weight() + r.len(), *i))
            .map(|(i, _)| i)
            .unwrap();
        let prow = rows.swap_remove(pr);
        let p = prow[&pc].clone();
        rank += 1;
        for r in rows.iter_mut() {
            let Some(f) = r.get(&pc).cloned() else { continue };
            let mut out = LRow::new();
            for (c, x) in r.iter() {
                let y = x * &p;
                if !y.is_zero() {
                    out.insert(*c, y);
                }
            }
            for (c, x) in prow.iter() {
                let y = x * &f;
                let e = out.entry(*c).or_insert_with(LaurentScalar::zero);
                *e -= &y;
                if e.is_zero() {
                    out.remove(c);
                }
            }
            debug_assert!(!out.contains_key(&pc));
            make_primitive(&mut out);
            *r = out;
        }
    }
}

/// Incrementally built row-echelon basis of a subspace of `Q(v)^n`.
///
/// Basis vectors are normalised to have pivot entry 1 and are fully reduced
/// against one another.
#[derive(Clone, Debug, Default)]
pub struct Subspace {
    basis: Vec<(usize, SparseVec)>,
}

impl Subspace {
    pub fn new() -> Self {
        Subspace { basis: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> impl Iterator<Item = &SparseVec> {
        self.basis.iter().map(|(_, v)| v)
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.basis.iter().map(|(p, _)| *p).collect()
    }

    /// Reduces `v` against the basis.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut v = v.clone();
        for (p, b) in &self.basis {
            if let Some(f) = v.get(p).cloned() {
                axpy(&mut v, &-f, b);
            }
        }
        v
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v`; returns the reduced new basis vector, or `None` if `v` was already in the span.
    pub fn insert(&mut self, v: &SparseVec) -> Option<SparseVec> {
        let r = self.reduce(v);
        let (&p, lead) = r.iter().next()?;
        let inv = lead.inv().unwrap();
        let r: SparseVec = r.iter().map(|(c, x)| (*c, x * &inv)).collect();
        for (_, b) in self.basis.iter_mut() {
            if let Some(f) = b.get(&p).cloned() {
                axpy(b, &-f, &r);
            }
        }
        self.basis.push((p, r.clone()));
        self.basis.sort_by_key(|(p, _)| *p);
        Some(r)
    }
}

/// `v += f * w`.
pub fn axpy(v: &mut SparseVec, f: &FieldScalar, w: &SparseVec) {
    if f.is_zero() {
        return;
    }
    for (c, x) in w {
        let y = f * x;
        let e = v.entry(*c).or_insert_with(FieldScalar::zero);
        *e += &y;
        if e.is_zero() {
            v.remove(c);
        }
    }
}

/// Solution set of a linear system `A x = b`.
#[derive(Clone, Debug)]
pub struct LinearSolution {
    pub particular: SparseVec,
    pub nullspace: Vec<SparseVec>,
}

/// Solves `A x = b` exactly, where `rows[i] · x = rhs[i]`. Returns `None` when inconsistent.
pub fn solve_linear(rows: &[SparseVec], rhs: &[FieldScalar], nvars: usize) -> Option<LinearSolution> {
    assert_eq!(rows.len(), rhs.len());
    // Augmented column `nvars` carries the right-hand side.
    let mut echelon = Subspace::new();
    for (r, b) in rows.iter().zip(rhs) {
        let mut v = r.clone();
        if !b.is_zero() {
            v.insert(nvars, b.clone());
        }
        echelon.insert(&v);
    }
    if echelon.pivots().contains(&nvars) {
        return None;
    }
    let pivots = echelon.pivots();
    let mut particular = SparseVec::new();
    for (p, vec) in echelon.basis.iter() {
        if let Some(b) = vec.get(&nvars) {
            particular.insert(*p, b.clone());
        }
    }
    let free: Vec<usize> = (0..nvars).filter(|c| !pivots.contains(c)).collect();
    let mut nullspace = Vec::new();
    for f in free {
        let mut v = SparseVec::new();
        v.insert(f, FieldScalar::one());
        for (p, vec) in echelon.basis.iter() {
            if let Some(x) = vec.get(&f) {
                v.insert(*p, -x);
            }
        }
        nullspace.push(v);
    }
    Some(LinearSolution { particular, nullspace })
}

/// Basis of `{x : A x = 0}`.
pub fn nullspace(rows: &[SparseVec], nvars: usize) -> Vec<SparseVec> {
    let zeros = vec![FieldScalar::zero(); rows.len()];
    solve_linear(rows, &zeros, nvars).expect("homogeneous systems are consistent").nullspace
}
