//! Linear algebra over F_p for actions specialised at v = x.

use super::mat::Mat;

pub type MatP = Vec<Vec<u64>>;

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn inv_mod(x: u64, p: u64) -> u64 {
    pow_mod(x, p - 2, p)
}

/// Entrywise evaluation at v = x mod p; `None` if some denominator vanishes.
pub fn specialize(m: &Mat, x: u64, p: u64) -> Option<MatP> {
    (0..m.rows()).map(|i| (0..m.cols()).map(|j| m.get(i, j).eval_mod(x, p)).collect()).collect()
}

pub fn apply(m: &MatP, v: &[u64], p: u64) -> Vec<u64> {
    m.iter().map(|row| row.iter().zip(v).fold(0, |acc, (a, b)| (acc + a * b) % p)).collect()
}

fn mul(a: &MatP, b: &MatP, p: u64) -> MatP {
    let n = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..n)
                .map(|j| row.iter().enumerate().fold(0, |acc, (k, x)| (acc + x * b[k][j]) % p))
                .collect()
        })
        .collect()
}

/// Row-echelon span over F_p.
pub struct SpanP {
    p: u64,
    rows: Vec<(usize, Vec<u64>)>,
}

impl SpanP {
    pub fn new(p: u64) -> Self {
        SpanP { p, rows: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Adds `v`; true if it was independent of the span.
    pub fn insert(&mut self, v: &[u64]) -> bool {
        let p = self.p;
        let mut v = v.to_vec();
        for (piv, r) in &self.rows {
            let c = v[*piv];
            if c != 0 {
                for (x, y) in v.iter_mut().zip(r) {
                    *x = (*x + (p - c) * y) % p;
                }
            }
        }
        match v.iter().position(|&x| x != 0) {
            None => false,
            Some(piv) => {
                let s = inv_mod(v[piv], p);
                for x in v.iter_mut() {
                    *x = *x * s % p;
                }
                self.rows.push((piv, v));
                true
            }
        }
    }
}

/// Dimension of the smallest subspace containing `start` and closed under `ops`.
pub fn closure_dim(ops: &[MatP], start: &[u64], p: u64) -> usize {
    let mut span = SpanP::new(p);
    if !span.insert(start) {
        return 0;
    }
    let mut queue = vec![start.to_vec()];
    while let Some(w) = queue.pop() {
        for x in ops {
            let y = apply(x, &w, p);
            if span.insert(&y) {
                queue.push(y);
            }
        }
    }
    span.dim()
}

/// Brute force over F_p: V is simple iff every projective point generates V.
/// Intended for dim ≤ 4; `None` if the specialisation is undefined.
pub fn is_simple_mod_p(ops: &[Mat], dim: usize, x: u64, p: u64) -> Option<bool> {
    let ops: Vec<MatP> = ops.iter().map(|m| specialize(m, x, p)).collect::<Option<_>>()?;
    for lead in 0..dim {
        let free = dim - lead - 1;
        let count = p.checked_pow(free as u32)?;
        for code in 0..count {
            let mut v = vec![0; dim];
            v[lead] = 1;
            let mut c = code;
            for slot in v.iter_mut().skip(lead + 1) {
                *slot = c % p;
                c /= p;
            }
            if closure_dim(&ops, &v, p) != dim {
                return Some(false);
            }
        }
    }
    Some(true)
}

/// Dimension over F_p of the span of all products of `ops`, identity included.
pub fn algebra_dim_mod_p(ops: &[Mat], dim: usize, x: u64, p: u64) -> Option<usize> {
    let ops: Vec<MatP> = ops.iter().map(|m| specialize(m, x, p)).collect::<Option<_>>()?;
    let id: MatP = (0..dim).map(|i| (0..dim).map(|j| u64::from(i == j)).collect()).collect();
    let mut span = SpanP::new(p);
    span.insert(&id.concat());
    let mut queue = vec![id];
    while let Some(m) = queue.pop() {
        for x in &ops {
            let y = mul(x, &m, p);
            if span.insert(&y.concat()) {
                queue.push(y);
            }
        }
    }
    Some(span.dim())
}
