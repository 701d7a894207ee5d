use std::sync::Arc;

use super::mat::Mat;
use crate::double::{DoubleAlgebra, GammaForm};
use crate::freealg::NcPoly;
use crate::hopf::{Form, FormRef, Transposed};
use crate::qgroups::{t, QgError};
use crate::report::Suite;

/// A finite-dimensional right comodule, δ(v_j) = Σ_i v_i ⊗ coeff[i][j].
#[derive(Clone, Debug)]
pub struct Comodule {
    pub label: String,
    pub coeff: Vec<Vec<NcPoly>>,
}

impl Comodule {
    pub fn dim(&self) -> usize {
        self.coeff.len()
    }

    /// The vector comodule of C_q[SL(n)]: δ(v_j) = Σ_i v_i ⊗ t_ij.
    pub fn vector(n: usize) -> Comodule {
        let coeff = (1..=n).map(|i| (1..=n).map(|j| NcPoly::gen(t(n, i, j))).collect()).collect();
        Comodule { label: "V".into(), coeff }
    }

    /// V ⊗ V′ over the double: δ(v_j ⊗ v′_l) = Σ v_i ⊗ v′_k ⊗ (t_ij ⊗ t̃_kl).
    /// Basis index of v_i ⊗ v′_k is i·dim V′ + k.
    pub fn double_product(d: &DoubleAlgebra, v: &Comodule, w: &Comodule) -> Comodule {
        let (m, n) = (v.dim(), w.dim());
        let mut coeff = vec![vec![NcPoly::zero(); m * n]; m * n];
        for i in 0..m {
            for k in 0..n {
                for j in 0..m {
                    for l in 0..n {
                        coeff[i * n + k][j * n + l] = d.alg.mul(&v.coeff[i][j], &w.coeff[k][l].shift_slots(1));
                    }
                }
            }
        }
        Comodule { label: format!("{}(x){}'", v.label, w.label), coeff }
    }
}

/// σ_{V,W}: V ⊗ W → W ⊗ V, v ⊗ w ↦ Σ w0 ⊗ v0 σ(v1, w1). Column j·dim W + l
/// is the image of v_j ⊗ w_l; row k·dim V + i is the coordinate of w_k ⊗ v_i.
pub fn braiding_operator(sigma: &dyn Form, v: &Comodule, w: &Comodule) -> Mat {
    let (m, n) = (v.dim(), w.dim());
    let mut out = Mat::zeros(m * n, m * n);
    for i in 0..m {
        for j in 0..m {
            for k in 0..n {
                for l in 0..n {
                    let x = sigma.eval(&v.coeff[i][j], &w.coeff[k][l]);
                    if !x.is_zero() {
                        out.set(k * m + i, j * n + l, x);
                    }
                }
            }
        }
    }
    out
}

/// B(F ⊗ W) = W ⊗ F as subspaces, for F spanned by the basis vectors in `f`.
fn maps_onto(op: &Mat, f: &[usize], dim_v: usize, dim_w: usize) -> Result<(), String> {
    let cols: Vec<usize> = f.iter().flat_map(|&j| (0..dim_w).map(move |l| j * dim_w + l)).collect();
    let allowed = |row: usize| f.contains(&(row % dim_v));
    for &c in &cols {
        for r in 0..op.rows() {
            if !op.get(r, c).is_zero() && !allowed(r) {
                return Err(format!("column {} leaves W(x)F at row {}", c, r));
            }
        }
    }
    let mut sub = Mat::zeros(op.rows(), cols.len());
    for (k, &c) in cols.iter().enumerate() {
        for r in 0..op.rows() {
            sub.set(r, k, op.get(r, c).clone());
        }
    }
    let rank = sub.rank();
    if rank != cols.len() {
        return Err(format!("image has dimension {} < {}", rank, cols.len()));
    }
    Ok(())
}

/// A full flag given as an ordering of basis vectors: F_i = first i of them.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FlagOrder {
    Ascending,
    Descending,
}

impl FlagOrder {
    fn levels(self, dim: usize) -> Vec<Vec<usize>> {
        let order: Vec<usize> = match self {
            FlagOrder::Ascending => (0..dim).collect(),
            FlagOrder::Descending => (0..dim).rev().collect(),
        };
        (0..=dim).map(|i| order[..i].to_vec()).collect()
    }

    fn name(self) -> &'static str {
        match self {
            FlagOrder::Ascending => "ascending",
            FlagOrder::Descending => "descending",
        }
    }
}

/// The flag order whose levels F satisfy op(F ⊗ W) = W ⊗ F, if any.
fn invariant_order(op: &Mat, dim_v: usize, dim_w: usize) -> Option<FlagOrder> {
    [FlagOrder::Ascending, FlagOrder::Descending]
        .into_iter()
        .find(|o| o.levels(dim_v).iter().all(|f| maps_onto(op, f, dim_v, dim_w).is_ok()))
}

/// Strong invariance of product weight flags on V ⊗ V′ = L(ω) ⊗ L(ω) over the
/// double, with W = the same double comodule:
///   - the flag of V is strongly β-invariant, the flag of V′ is strongly
///     invariant for the inverse braiding, both found among weight orders;
///   - γ_{V⊗V′,W}(V_i ⊗ V′_j ⊗ W) = W ⊗ V_i ⊗ V′_j for all i, j;
///   - the lexicographic full flag of V ⊗ V′ is strongly γ-invariant;
///   - γ_{V⊗V′,W} has full rank.
pub fn flag_invariance_check(d: &DoubleAlgebra) -> Result<Suite, QgError> {
    let g = d.group;
    let v = Comodule::vector(d.n);
    let n = v.dim();
    let mut suite = Suite::new(format!("flags[sl{}]", d.n));

    let beta_op = braiding_operator(g.beta.as_ref(), &v, &v);
    let inv21: FormRef = Arc::new(Transposed(g.beta_inv.clone()));
    let inv_op = braiding_operator(inv21.as_ref(), &v, &v);
    let (ov, ovp) = (invariant_order(&beta_op, n, n), invariant_order(&inv_op, n, n));
    suite.record(
        format!("V has a strongly beta-invariant weight flag ({})", ov.map_or("none", |o| o.name())),
        ov.is_none().then(|| "neither weight order is invariant".to_string()),
    );
    suite.record(
        format!("V' has a weight flag invariant for the inverse braiding ({})", ovp.map_or("none", |o| o.name())),
        ovp.is_none().then(|| "neither weight order is invariant".to_string()),
    );
    let (Some(ov), Some(ovp)) = (ov, ovp) else {
        return Ok(suite.sorted());
    };

    let vv = Comodule::double_product(d, &v, &v);
    let gamma = GammaForm::new(d)?;
    let op = braiding_operator(&gamma, &vv, &vv);
    let dim = vv.dim();

    let mut bad = None;
    let mut count = 0;
    for fi in ov.levels(n) {
        for fj in ovp.levels(n) {
            count += 1;
            let f: Vec<usize> = fi.iter().flat_map(|&i| fj.iter().map(move |&k| i * n + k)).collect();
            if let Err(e) = maps_onto(&op, &f, dim, dim) {
                bad.get_or_insert_with(|| format!("V_{} (x) V'_{}: {}", fi.len(), fj.len(), e));
            }
        }
    }
    suite.record(format!("gamma(V_i (x) V'_j (x) W) = W (x) V_i (x) V'_j ({} flag pairs)", count), bad);

    let order: Vec<usize> = {
        let ordv = ov.levels(n).last().cloned().unwrap_or_default();
        let ordp = ovp.levels(n).last().cloned().unwrap_or_default();
        ordv.iter().flat_map(|&i| ordp.iter().map(move |&k| i * n + k)).collect()
    };
    let mut bad = None;
    for k in 0..=dim {
        if let Err(e) = maps_onto(&op, &order[..k], dim, dim) {
            bad.get_or_insert_with(|| format!("level {}: {}", k, e));
        }
    }
    suite.record("lexicographic full flag of V (x) V' is strongly gamma-invariant", bad);

    let rank = op.rank();
    suite.record(
        format!("gamma_(V,W) has full rank ({} of {})", rank, dim * dim),
        (rank != dim * dim).then(|| format!("rank {}", rank)),
    );
    Ok(suite.sorted())
}
