use super::DoubleAlgebra;
use crate::freealg::{Gen, NcPoly, Word};
use crate::hopf::Algebra;
use crate::qgroups::{CartanDatum, QgError, UqLayout};
use crate::report::Suite;
use crate::scalars::Scalar;

/// Γ = L/2L-dual: h ∈ {0,1}^rank with λ(h) = (-1)^{Σ λ_i h_i}.
pub struct GammaGroup {
    pub datum: CartanDatum,
    pub elements: Vec<Vec<i64>>,
}

impl GammaGroup {
    pub fn new(n: usize) -> Result<GammaGroup, QgError> {
        let datum = CartanDatum::sl(n)?;
        let mut elements = vec![vec![]];
        for _ in 0..datum.rank {
            elements = elements.into_iter().flat_map(|e: Vec<i64>| [0, 1].map(|x| [e.clone(), vec![x]].concat())).collect();
        }
        Ok(GammaGroup { datum, elements })
    }

    pub fn character(&self, lambda: &[i64], h: &[i64]) -> Scalar {
        let s: i64 = lambda.iter().zip(h).map(|(a, b)| a * b).sum();
        if s.rem_euclid(2) == 0 {
            Scalar::one()
        } else {
            -Scalar::one()
        }
    }

    /// h on C_q[SL(n)]: t_ij ↦ δ_ij wt(v_i)(h), extended multiplicatively.
    pub fn on_a(&self, h: &[i64], w: &[Gen]) -> Scalar {
        let n = self.datum.n;
        let vw = self.datum.vector_weights();
        let mut acc = Scalar::one();
        for g in w {
            let (i, j) = (g.id as usize / n, g.id as usize % n);
            if i != j {
                return Scalar::zero();
            }
            acc = &acc * &self.character(&vw[i], h);
        }
        acc
    }

    /// h on U_q: k_λ ↦ λ(h), e_i, f_i ↦ 0.
    pub fn on_u(&self, h: &[i64], w: &[Gen]) -> Scalar {
        let l = UqLayout { rank: self.datum.rank };
        let mut acc = Scalar::one();
        for g in w {
            if !l.is_cartan(*g) {
                return Scalar::zero();
            }
            acc = &acc * &self.character(&l.k_weight(*g), h);
        }
        acc
    }

    /// r_h(x) = Σ x1 h(x2) on A.
    pub fn r_h(&self, a: &Algebra, h: &[i64], p: &NcPoly) -> NcPoly {
        let mut out = NcPoly::zero();
        for (w, c) in p.terms() {
            for (x1, x2, k) in a.sweedler(w).iter() {
                let v = self.on_a(h, x2);
                if !v.is_zero() {
                    out.add_term(x1.clone(), &(&(c * k) * &v));
                }
            }
        }
        a.nf(&out)
    }

    /// l_h(x) = Σ h⁻¹(x1) x2 on U_q^cop, with h⁻¹ = h ∘ S.
    pub fn l_h(&self, u_cop: &Algebra, h: &[i64], p: &NcPoly) -> NcPoly {
        let mut out = NcPoly::zero();
        for (w, c) in p.terms() {
            for (x1, x2, k) in u_cop.sweedler(w).iter() {
                let s = u_cop.antipode_word(x1);
                let mut v = Scalar::zero();
                for (sw, sc) in s.terms() {
                    v = &v + &(&self.on_u(h, sw) * sc);
                }
                if !v.is_zero() {
                    out.add_term(x2.clone(), &(&(c * k) * &v));
                }
            }
        }
        u_cop.nf(&out)
    }

    /// d̃_h(u ⊗ w) = r_h(u) ⊗ l_h(w) on A ⊗ U_q^cop.
    pub fn act(&self, t: &Algebra, a: &Algebra, u_cop: &Algebra, h: &[i64], p: &NcPoly) -> NcPoly {
        let mut out = NcPoly::zero();
        for (w, c) in p.terms() {
            let cut = w.iter().position(|g| g.slot == 1).unwrap_or(w.len());
            let x: Word = w[..cut].iter().copied().collect();
            let y: Word = w[cut..].iter().map(|g| g.with_slot(0)).collect();
            let rx = self.r_h(a, h, &NcPoly::from_word(x));
            let ly = self.l_h(u_cop, h, &NcPoly::from_word(y));
            out.add_scaled(&(&rx * &ly.shift_slots(1)), c);
        }
        t.nf(&out)
    }
}

/// ξ(x) is fixed by every d̃_h, for all canonical double monomials of
/// degree ≤ `degree`; also checks that r_h and l_h are involutive algebra maps.
pub fn gamma_invariance_check(d: &DoubleAlgebra, degree: usize) -> Result<Suite, QgError> {
    let gg = GammaGroup::new(d.n)?;
    let xi = d.map_xi()?;
    let t = xi.target().clone();
    let a = d.a();
    let u_cop = &d.group.u_cop;
    let mut suite = Suite::new(format!("gamma-invariance[sl{}]", d.n));

    let mut bad = None;
    for h in &gg.elements {
        for (label, r) in a.relation_polys() {
            if !gg.r_h(a, h, &r).is_zero() {
                bad = Some(format!("r_h, h={:?}: {}", h, label));
            }
        }
        for (label, r) in u_cop.relation_polys() {
            if !gg.l_h(u_cop, h, &r).is_zero() {
                bad = Some(format!("l_h, h={:?}: {}", h, label));
            }
        }
        for g in a.gens() {
            let x = NcPoly::gen(g);
            if gg.r_h(a, h, &gg.r_h(a, h, &x)) != x {
                bad = Some(format!("r_h^2 != id on {}", a.format_word(&[g])));
            }
        }
        for g in u_cop.gens() {
            let x = NcPoly::gen(g);
            if gg.l_h(u_cop, h, &gg.l_h(u_cop, h, &x)) != x {
                bad = Some(format!("l_h^2 != id on {}", u_cop.format_word(&[g])));
            }
        }
    }
    suite.record(format!("r_h, l_h are involutive algebra maps (|Gamma| = {})", gg.elements.len()), bad);

    let words = d.alg.normal_words(degree);
    let mut bad = None;
    let mut count = 0;
    for w in &words {
        let img = xi.apply_word(w);
        for h in &gg.elements {
            count += 1;
            let moved = gg.act(&t, a, u_cop, h, &img);
            if moved != img {
                bad.get_or_insert_with(|| format!("x={} h={:?}: {} -> {}", d.alg.format_word(w), h, t.format(&img), t.format(&moved)));
            }
        }
    }
    suite.record(format!("xi(x) is Gamma-invariant ({} monomials, {} cases)", words.len(), count), bad);
    Ok(suite)
}
