use super::gamma_group::GammaGroup;
use super::maps::Coordinates;
use super::DoubleAlgebra;
use crate::freealg::{Gen, NcPoly, Word};
use crate::qgroups::{t, QgError, UqLayout};
use crate::report::Suite;
use crate::scalars::{linalg::nullspace, matrix_rank, Matrix, Scalar, SparseVec, Subspace};

/// Reads `p` as c · (1 ⊗ g k_μ) for the given root vector g; returns (c, μ).
fn as_root_times_k(d: &DoubleAlgebra, p: &NcPoly, want: Gen) -> Option<(Scalar, Vec<i64>)> {
    let l = UqLayout { rank: d.group.datum.rank };
    let terms: Vec<_> = p.terms().collect();
    if terms.len() != 1 {
        return None;
    }
    let (w, c) = terms[0];
    if w.first().map(|g| g.slot) != Some(1) || w[0].with_slot(0) != want {
        return None;
    }
    let mut mu = vec![0; l.rank];
    for g in &w[1..] {
        if g.slot != 1 || !l.is_cartan(g.with_slot(0)) {
            return None;
        }
        let g = g.with_slot(0);
        for (m, x) in mu.iter_mut().zip(l.k_weight(g)) {
            *m += x;
        }
    }
    Some((c.clone(), mu))
}

/// The exact identities behind the Ore property of ξ(1 ⊗ c) for n = 2, λ = ω:
///   (i)   Σ ξ(1 ⊗ S(a_1i)) ξ(a_2i ⊗ 1) = 1 ⊗ k_{-2ω}, with Δ(a) = Σ a_1i ⊗ a_2i;
///   (ii)  Σ S(a_1i) a_2i = 1 in A;
///   (iii) 1 ⊗ e k_μ and 1 ⊗ f k_μ', up to nonzero scalars, as combinations of
///         products of ξ-images and the element of (i).
pub fn localization_identities(d: &DoubleAlgebra) -> Result<Suite, QgError> {
    let mut suite = Suite::new(format!("localization[sl{}]", d.n));
    if d.n != 2 {
        suite.warn("skipped", format!("localization identities are implemented for sl2, not sl{}", d.n));
        return Ok(suite);
    }
    let n = d.n;
    let a = d.a();
    let xi = d.map_xi()?;
    let tt = xi.target().clone();
    let l = UqLayout { rank: 1 };
    let ki = |k: usize| -> NcPoly { NcPoly::from_word((0..k).map(|_| l.k_inv(0).with_slot(1)).collect()) };
    let one_x = |p: &NcPoly| xi.apply(&d.embed(p, 1));
    let x_one = |p: &NcPoly| xi.apply(&d.embed(p, 0));
    let gen = |i, j| NcPoly::gen(t(n, i, j));
    let mul = |x: &NcPoly, y: &NcPoly| tt.mul(x, y);
    let fmt = |p: &NcPoly| tt.format(p);
    let check_eq = |suite: &mut Suite, name: String, got: &NcPoly, want: &NcPoly| {
        suite.record(name, (got != want).then(|| format!("{} != {}", fmt(got), fmt(want))));
    };

    // ξ on the generators of the first column (slot 0) and the last column (slot 1).
    for i in 1..=n {
        let x = gen(i, 1);
        check_eq(&mut suite, format!("xi({} (x) 1) = {} (x) k_-w", a.format(&x), a.format(&x)), &x_one(&x), &(&x * &ki(1)));
        let y = gen(i, 2);
        check_eq(&mut suite, format!("xi(1 (x) {}) = {} (x) k_-w", a.format(&y), a.format(&y)), &one_x(&y), &(&y * &ki(1)));
    }

    let delta_a = a.sweedler(&[t(n, 1, 1)]);
    let mut ii = NcPoly::zero();
    let mut id = NcPoly::zero();
    for (x1, x2, c) in delta_a.iter() {
        ii.add_scaled(&a.mul(&a.antipode_word(x1), &NcPoly::from_word(x2.clone())), c);
        id.add_scaled(&mul(&one_x(&a.antipode_word(x1)), &x_one(&NcPoly::from_word(x2.clone()))), c);
    }
    suite.record("(ii) S(a)a + S(b)c = 1", (!ii.as_scalar().is_some_and(|s| s.is_one())).then(|| a.format(&ii)));
    check_eq(&mut suite, "(i) sum xi(1 (x) S(a_1i)) xi(a_2i (x) 1) = 1 (x) k_-2w".into(), &id, &ki(2));

    // Row partners: first column t_i1 against last column t_i2.
    let x = ki(2);
    let row_in_col1 = |w: &Word| -> Option<usize> { (w.len() == 1 && w[0].id as usize % n == 0).then(|| w[0].id as usize / n + 1) };
    let row_in_col2 = |w: &Word| -> Option<usize> { (w.len() == 1 && w[0].id as usize % n == 1).then(|| w[0].id as usize / n + 1) };

    // (iii, e) ξ(t_i2 ⊗ 1)·X − ξ(1 ⊗ t_i2) = t_i1 ⊗ E, then Σ ξ(1 ⊗ S(a_1i))(a_2i ⊗ E).
    let mut y_e = Vec::new();
    for i in 1..=n {
        let y = &mul(&x_one(&gen(i, 2)), &x) - &one_x(&gen(i, 2));
        y_e.push(y);
    }
    let mut e_sum = NcPoly::zero();
    for (x1, x2, c) in delta_a.iter() {
        let row = row_in_col1(x2).ok_or_else(|| QgError::Solver("unexpected coproduct of a".into()))?;
        e_sum.add_scaled(&mul(&one_x(&a.antipode_word(x1)), &y_e[row - 1]), c);
    }
    match as_root_times_k(d, &e_sum, l.e(0)) {
        Some((c, mu)) => suite.pass(format!("(iii) 1 (x) e k_mu recovered: scalar {}, mu = {:?}", c, mu)),
        None => suite.fail("(iii) 1 (x) e k_mu recovered", fmt(&e_sum)),
    }

    // (iii, f) ξ(1 ⊗ t_i1)·X − ξ(t_i1 ⊗ 1) = t_i2 ⊗ F, then Σ ξ(S(d_1j) ⊗ 1)(d_2j ⊗ F).
    let mut w_f = Vec::new();
    for i in 1..=n {
        let w = &mul(&one_x(&gen(i, 1)), &x) - &x_one(&gen(i, 1));
        w_f.push(w);
    }
    let mut f_sum = NcPoly::zero();
    for (x1, x2, c) in a.sweedler(&[t(n, 2, 2)]).iter() {
        let row = row_in_col2(x2).ok_or_else(|| QgError::Solver("unexpected coproduct of d".into()))?;
        f_sum.add_scaled(&mul(&x_one(&a.antipode_word(x1)), &w_f[row - 1]), c);
    }
    match as_root_times_k(d, &f_sum, l.f(0)) {
        Some((c, mu)) => suite.pass(format!("(iii) 1 (x) f k_mu recovered: scalar {}, mu = {:?}", c, mu)),
        None => suite.fail("(iii) 1 (x) f k_mu recovered", fmt(&f_sum)),
    }
    Ok(suite.sorted())
}

/// η_h(x ⊗ y) = h(x) h(y), with h the character of A attached to h ∈ Γ.
fn eta(gg: &GammaGroup, h: &[i64], w: &[Gen]) -> Scalar {
    let plain: Word = w.iter().map(|g| g.with_slot(0)).collect();
    gg.on_a(h, &plain)
}

fn eta_vector(gg: &GammaGroup, p: &NcPoly) -> SparseVec {
    let mut out = SparseVec::new();
    for (k, h) in gg.elements.iter().enumerate() {
        let mut acc = Scalar::zero();
        for (w, c) in p.terms() {
            acc = &acc + &(&eta(gg, h, w) * c);
        }
        if !acc.is_zero() {
            out.insert(k, acc);
        }
    }
    out
}

/// η: C_q[D(SL2)] → C[Γ̂] is a character for each h, kills Ker m and Ker θ
/// on monomials of degree ≤ `degree`, and t_λ = [a ⊗ 1] satisfies
/// t_λ² = 1, t_λ t_μ = t_{λ+μ}; the t_λ span the image.
pub fn eta_quotient_check(d: &DoubleAlgebra, degree: usize) -> Result<Suite, QgError> {
    let mut suite = Suite::new(format!("eta[sl{}]", d.n));
    if d.n != 2 {
        suite.warn("skipped", format!("the eta quotient check is implemented for sl2, not sl{}", d.n));
        return Ok(suite);
    }
    let gg = GammaGroup::new(d.n)?;
    let alg = &d.alg;

    let mut bad = None;
    for h in &gg.elements {
        for (label, r) in alg.relation_polys() {
            let mut acc = Scalar::zero();
            for (w, c) in r.terms() {
                acc = &acc + &(&eta(&gg, h, w) * c);
            }
            if !acc.is_zero() {
                bad.get_or_insert_with(|| format!("h={:?}: {}", h, label));
            }
        }
    }
    suite.record("eta_h respects the relations of the double", bad);

    let words = alg.normal_words(degree);
    let m = d.map_m()?;
    let theta = d.map_theta()?;
    let mut kernels = Subspace::new();
    for (name, images) in [
        ("m", words.iter().map(|w| m.apply_word(w)).collect::<Vec<_>>()),
        ("theta", words.iter().map(|w| theta.apply_word(w)).collect::<Vec<_>>()),
    ] {
        // Columns are monomials, rows are coordinates of the images.
        let mut coords = Coordinates::default();
        let cols: Vec<SparseVec> = images.iter().map(|p| coords.vector(p)).collect();
        let mut rows = vec![SparseVec::new(); coords.len()];
        for (j, col) in cols.iter().enumerate() {
            for (i, c) in col {
                rows[*i].insert(j, c.clone());
            }
        }
        let ker = nullspace(&rows, words.len());
        let mut bad = None;
        for z in &ker {
            kernels.insert(z);
            let p = NcPoly::from_terms(z.iter().map(|(j, c)| (words[*j].clone(), c.clone())));
            let v = eta_vector(&gg, &p);
            if !v.is_empty() {
                bad.get_or_insert_with(|| format!("eta({}) != 0", alg.format(&p)));
            }
        }
        suite.record(format!("eta kills Ker {} (degree <= {}, dim {})", name, degree, ker.len()), bad);
    }

    let a1 = d.parse("a").map_err(|e| QgError::Solver(e.to_string()))?;
    let t_w = eta_vector(&gg, &a1);
    let t_w2 = eta_vector(&gg, &alg.mul(&a1, &a1));
    let one = eta_vector(&gg, &NcPoly::one());
    suite.record("t_w^2 = 1", (t_w2 != one).then(|| format!("{:?} != {:?}", t_w2, one)));
    // t_w t_w is the class of a^2 ⊗ 1, the highest coefficient of L(2w), and 2w ≡ 0.
    let prod: SparseVec = t_w.iter().map(|(k, c)| (*k, c * c)).collect();
    suite.record("t_w t_w = t_2w", (prod != t_w2).then(|| format!("{:?} != {:?}", prod, t_w2)));

    let mut m_all = Matrix::new(gg.elements.len());
    for w in &words {
        m_all.push_row(eta_vector(&gg, &NcPoly::from_word(w.clone())));
    }
    let mut m_t = Matrix::new(gg.elements.len());
    m_t.push_row(one);
    m_t.push_row(t_w);
    let (r_all, r_t) = (matrix_rank(&m_all), matrix_rank(&m_t));
    suite.record(
        format!("the classes t_0, t_w span the image (rank {} of |Gamma| = {})", r_all, gg.elements.len()),
        (r_all != gg.elements.len() || r_t != r_all).then(|| format!("rank of eta = {}, rank of t's = {}", r_all, r_t)),
    );
    suite.record(
        format!("codimension of Ker m + Ker theta at degree <= {} is |Gamma|", degree),
        (words.len() - kernels.dim() != gg.elements.len()).then(|| format!("codimension {}", words.len() - kernels.dim())),
    );
    Ok(suite.sorted())
}
