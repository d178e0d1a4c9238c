//! Substitutions: boundary graph, weighted coordinate changes, dilations.

use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::exact::{gq, gq_i, rat_pow, Gq, Rat};
use crate::wpoly::{is_homogeneous_of, Ctx, MixedPoly, Monomial, WeightSystem};

/// Simultaneously replace `z_j` by `subs[j]` and `zb_j` by `conj(subs[j])`;
/// `w`, `wb`, `u` pass through.  Each substitute must be a holomorphic
/// `z`-only polynomial.
pub fn substitute_z(p: &MixedPoly, subs: &[MixedPoly]) -> MixedPoly {
    let n = p.n();
    assert_eq!(subs.len(), n);
    for s in subs {
        assert!(s.is_z_only() && s.is_holomorphic(), "substitutes must be holomorphic in z");
        assert_eq!(s.n(), n);
    }
    let mut max_z = vec![0u32; n];
    let mut max_zb = vec![0u32; n];
    for (m, _) in p.iter() {
        for j in 0..n {
            max_z[j] = max_z[j].max(m.z[j]);
            max_zb[j] = max_zb[j].max(m.zb[j]);
        }
    }
    let powers: Vec<Vec<MixedPoly>> = (0..n)
        .map(|j| power_table(&subs[j].with_ctx(p.ctx()), max_z[j]))
        .collect();
    let conj_powers: Vec<Vec<MixedPoly>> = (0..n)
        .map(|j| power_table(&subs[j].with_ctx(p.ctx()).conj(), max_zb[j]))
        .collect();

    let mut out = MixedPoly::zero(n, p.ctx());
    for (m, c) in p.iter() {
        let mut shell = Monomial::one(n);
        shell.w = m.w;
        shell.wb = m.wb;
        shell.u = m.u;
        let mut acc = MixedPoly::from_terms(n, p.ctx(), [(shell, c.clone())]);
        for j in 0..n {
            if m.z[j] > 0 {
                acc = &acc * &powers[j][m.z[j] as usize];
            }
            if m.zb[j] > 0 {
                acc = &acc * &conj_powers[j][m.zb[j] as usize];
            }
        }
        out = &out + &acc;
    }
    out
}

fn power_table(base: &MixedPoly, up_to: u32) -> Vec<MixedPoly> {
    let mut table = Vec::with_capacity(up_to as usize + 1);
    table.push(MixedPoly::constant(base.n(), base.ctx(), Gq::one()));
    for e in 1..=up_to as usize {
        let next = &table[e - 1] * base;
        table.push(next);
    }
    table
}

/// Substitute the boundary graph `w = u - i p`, `wb = u + i p` into an
/// ambient polynomial.  The result lives in the boundary context
/// `(u, z, zb)` and vanishes identically iff the input vanishes on the
/// graph.
pub fn substitute_boundary(q: &MixedPoly, p: &MixedPoly) -> Result<MixedPoly, Error> {
    if q.ctx() != Ctx::Ambient {
        return Err(Error::ContextMismatch("boundary substitution needs an ambient input".into()));
    }
    if !p.is_z_only() {
        return Err(Error::ContextMismatch("the graph polynomial must be z/zb-only".into()));
    }
    if !p.is_real() {
        return Err(Error::NotReal);
    }
    let n = q.n();
    if p.n() != n {
        return Err(Error::VariableCountMismatch { left: q.n(), right: p.n() });
    }
    let u = MixedPoly::var_u(n);
    let pb = p.with_ctx(Ctx::Boundary);
    let w_image = &u - &pb.scale(&gq_i());
    let wb_image = &u + &pb.scale(&gq_i());

    let max_w = q.iter().map(|(m, _)| m.w).max().unwrap_or(0);
    let max_wb = q.iter().map(|(m, _)| m.wb).max().unwrap_or(0);
    let w_pows = power_table(&w_image, max_w);
    let wb_pows = power_table(&wb_image, max_wb);

    let mut out = MixedPoly::zero(n, Ctx::Boundary);
    for (m, c) in q.iter() {
        let mut shell = Monomial::one(n);
        shell.z = m.z.clone();
        shell.zb = m.zb.clone();
        let mut acc = MixedPoly::from_terms(n, Ctx::Boundary, [(shell, c.clone())]);
        if m.w > 0 {
            acc = &acc * &w_pows[m.w as usize];
        }
        if m.wb > 0 {
            acc = &acc * &wb_pows[m.wb as usize];
        }
        out = &out + &acc;
    }
    Ok(out)
}

/// Apply a weighted change of coordinates `z_j = subs[j](ztilde)` to `p`.
///
/// Every substitute must be holomorphic and weighted-homogeneous of the
/// weight of its variable, and the change must be exactly invertible; the
/// result `r` satisfies `r(ztilde) = p(z(ztilde))`.
pub fn weighted_substitution(
    p: &MixedPoly,
    subs: &[MixedPoly],
    ws: &WeightSystem,
) -> Result<MixedPoly, Error> {
    check_weighted_subs(subs, ws, p.n())?;
    invert_weighted_substitution(subs, ws)?;
    Ok(substitute_z(p, subs))
}

fn check_weighted_subs(subs: &[MixedPoly], ws: &WeightSystem, n: usize) -> Result<(), Error> {
    if subs.len() != n || ws.n() != n {
        return Err(Error::VariableCountMismatch { left: subs.len(), right: n });
    }
    for (j, s) in subs.iter().enumerate() {
        if !(s.is_z_only() && s.is_holomorphic()) {
            return Err(Error::NotHolomorphic);
        }
        if !is_homogeneous_of(s, ws, &ws.delta(j)) {
            return Err(Error::WrongWeight(format!(
                "substitute for z{} must be homogeneous of weight {}",
                j + 1,
                ws.delta(j)
            )));
        }
    }
    Ok(())
}

/// Compute the exact inverse of a weighted change of coordinates.
///
/// A weighted-homogeneous substitute of weight `d_j` decomposes as a linear
/// part in the variables of the same weight plus nonlinear monomials in
/// variables of strictly smaller weight.  The linear part is inverted per
/// weight class by Gauss-Jordan elimination and the nonlinear part unwinds
/// in ascending weight order; the result is verified by composing with the
/// input.
pub fn invert_weighted_substitution(
    subs: &[MixedPoly],
    ws: &WeightSystem,
) -> Result<Vec<MixedPoly>, Error> {
    let n = ws.n();
    check_weighted_subs(subs, ws, n)?;

    // Weight classes in ascending order of delta.
    let mut deltas: Vec<Rat> = (0..n).map(|j| ws.delta(j)).collect();
    let mut classes: Vec<(Rat, Vec<usize>)> = Vec::new();
    deltas.sort();
    deltas.dedup();
    for d in deltas {
        let members: Vec<usize> = (0..n).filter(|&j| ws.delta(j) == d).collect();
        classes.push((d, members));
    }

    let mut inverse: Vec<Option<MixedPoly>> = vec![None; n];
    for (_, members) in &classes {
        let k = members.len();
        // Linear part within the class.
        let mut a = vec![vec![Gq::zero(); k]; k];
        for (r, &jr) in members.iter().enumerate() {
            for (c, &jc) in members.iter().enumerate() {
                let mut e = Monomial::one(n);
                e.z[jc] = 1;
                a[r][c] = subs[jr].coeff(&e);
            }
        }
        let inv = invert_gq_matrix(&a).ok_or_else(|| {
            Error::NotInvertible("linear part of a weight class is singular".into())
        })?;
        // Nonlinear parts depend only on strictly lighter variables, whose
        // inverses are already known; unreferenced slots use placeholders.
        let partial: Vec<MixedPoly> = (0..n)
            .map(|j| {
                inverse[j]
                    .clone()
                    .unwrap_or_else(|| MixedPoly::var_z(n, j, Ctx::Ambient))
            })
            .collect();
        // Solve the class at once: ztilde_C = A^{-1} (z_C - N_C(inverse)).
        let mut rhs: Vec<MixedPoly> = Vec::with_capacity(k);
        for &jr in members.iter() {
            let mut linear = MixedPoly::zero(n, Ctx::Ambient);
            for &jc in members.iter() {
                let mut e = Monomial::one(n);
                e.z[jc] = 1;
                let c = subs[jr].coeff(&e);
                linear.insert(e, c);
            }
            let nonlinear = &subs[jr] - &linear;
            rhs.push(&MixedPoly::var_z(n, jr, Ctx::Ambient) - &substitute_z(&nonlinear, &partial));
        }
        for (c, &jc) in members.iter().enumerate() {
            let mut acc = MixedPoly::zero(n, Ctx::Ambient);
            for (r, rhs_r) in rhs.iter().enumerate() {
                acc = &acc + &rhs_r.scale(&inv[c][r]);
            }
            inverse[jc] = Some(acc);
        }
    }

    let inverse: Vec<MixedPoly> = inverse.into_iter().map(|p| p.unwrap()).collect();
    // Safety net: the composition must be the identity.
    for (j, s) in subs.iter().enumerate() {
        if substitute_z(s, &inverse) != MixedPoly::var_z(n, j, Ctx::Ambient) {
            return Err(Error::NotInvertible("composition check failed".into()));
        }
    }
    Ok(inverse)
}

fn invert_gq_matrix(a: &[Vec<Gq>]) -> Option<Vec<Vec<Gq>>> {
    let k = a.len();
    let mut m: Vec<Vec<Gq>> = a
        .iter()
        .enumerate()
        .map(|(r, row)| {
            let mut full = row.clone();
            for c in 0..k {
                full.push(if c == r { Gq::one() } else { Gq::zero() });
            }
            full
        })
        .collect();
    for col in 0..k {
        let pivot_row = (col..k).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot_row);
        let inv_p = Gq::one() / m[col][col].clone();
        for x in m[col].iter_mut() {
            *x = x.clone() * inv_p.clone();
        }
        for r in 0..k {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].clone();
            for c in 0..2 * k {
                let sub = f.clone() * m[col][c].clone();
                m[r][c] = m[r][c].clone() - sub;
            }
        }
    }
    Some(m.into_iter().map(|row| row[k..].to_vec()).collect())
}

/// Weighted dilation by `t = r^{2M}`: `z_j -> t^{d_j} z_j`, `w -> t w`.
///
/// Supplying the `2M`-th root `r > 0` instead of `t` keeps every scaling
/// factor exactly rational.
pub fn dilate(p: &MixedPoly, r: &Rat, ws: &WeightSystem) -> Result<MixedPoly, Error> {
    if !r.is_positive() {
        return Err(Error::Invalid("dilation parameter must be positive".into()));
    }
    let two_m = 2 * ws.lcm_m() as i64;
    let mut out = MixedPoly::zero(p.n(), p.ctx());
    for (m, c) in p.iter() {
        let e = ws.monomial_weight(m) * crate::exact::rati(two_m);
        assert!(e.is_integer(), "weight denominators divide 2M");
        let e: i64 = i64::try_from(e.to_integer()).expect("dilation exponent fits i64");
        let factor = rat_pow(r, e);
        out.insert(m.clone(), c.clone() * gq(factor, Rat::zero()));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{gq_im, gqi, rat, rati};

    fn z(n: usize, j: usize) -> MixedPoly {
        MixedPoly::var_z(n, j, Ctx::Ambient)
    }

    fn zb(n: usize, j: usize) -> MixedPoly {
        MixedPoly::var_zb(n, j, Ctx::Ambient)
    }

    #[test]
    fn boundary_graph_kills_the_defining_equation() {
        // q = w - wb + 2i p vanishes on the graph.
        let p = &z(1, 0) * &zb(1, 0);
        let q = &(&MixedPoly::var_w(1) - &MixedPoly::var_wb(1)) + &p.scale(&gq_im(2));
        assert!(substitute_boundary(&q, &p).unwrap().is_zero());
    }

    #[test]
    fn boundary_substitution_direct() {
        // q = w, p = z1 zb1 -> u - i z1 zb1.
        let p = &z(1, 0) * &zb(1, 0);
        let got = substitute_boundary(&MixedPoly::var_w(1), &p).unwrap();
        let expect = &MixedPoly::var_u(1) - &p.with_ctx(Ctx::Boundary).scale(&gq_i());
        assert_eq!(got, expect);
    }

    #[test]
    fn boundary_substitution_square() {
        // q = w^2, p = z1 zb1 -> u^2 - 2i u z1 zb1 - z1^2 zb1^2.
        let p = &z(1, 0) * &zb(1, 0);
        let got = substitute_boundary(&MixedPoly::var_w(1).pow(2), &p).unwrap();
        let u = MixedPoly::var_u(1);
        let pb = p.with_ctx(Ctx::Boundary);
        let expect = &(&u.pow(2) - &(&u * &pb).scale(&gq_im(2))) - &pb.pow(2);
        assert_eq!(got, expect);
    }

    #[test]
    fn identity_substitution() {
        let ws = WeightSystem::new(vec![4, 3]).unwrap();
        let p = &(&z(2, 0).pow(3) * &z(2, 1).pow(2)) * &zb(2, 0);
        let id: Vec<MixedPoly> = (0..2).map(|j| z(2, j)).collect();
        assert_eq!(weighted_substitution(&p, &id, &ws).unwrap(), p);
    }

    #[test]
    fn triangular_substitution_expands() {
        // z2 -> z2 + z1^2 with delta_2 = 2 delta_1 applied to z2 zb2.
        let ws = WeightSystem::new(vec![2, 1]).unwrap();
        let p = &z(2, 1) * &zb(2, 1);
        let subs = vec![z(2, 0), &z(2, 1) + &z(2, 0).pow(2)];
        let got = weighted_substitution(&p, &subs, &ws).unwrap();
        let s = &z(2, 1) + &z(2, 0).pow(2);
        assert_eq!(got, &s * &s.conj());
        // The inverse really is z2 -> z2 - z1^2.
        let inv = invert_weighted_substitution(&subs, &ws).unwrap();
        assert_eq!(inv[1], &z(2, 1) - &z(2, 0).pow(2));
    }

    #[test]
    fn same_weight_linear_change() {
        // z1 -> z1 - i a z2 with equal weights; invertible.
        let ws = WeightSystem::new(vec![1, 1]).unwrap();
        let a = rat(3, 2);
        let subs = vec![
            &z(2, 0) - &z(2, 1).scale(&gq(Rat::zero(), a.clone())),
            z(2, 1),
        ];
        let inv = invert_weighted_substitution(&subs, &ws).unwrap();
        assert_eq!(inv[0], &z(2, 0) + &z(2, 1).scale(&gq(Rat::zero(), a)));
        let p = &z(2, 0) * &zb(2, 0);
        let r = weighted_substitution(&p, &subs, &ws).unwrap();
        assert!(r.is_real());
    }

    #[test]
    fn rejects_wrong_weight_and_singular() {
        let ws = WeightSystem::new(vec![2, 1]).unwrap();
        // z1 -> z2 has weight 1/2, but z1 needs weight 1/4.
        let bad = vec![z(2, 1), z(2, 1)];
        assert!(matches!(
            weighted_substitution(&(&z(2, 0) * &zb(2, 0)), &bad, &ws),
            Err(Error::WrongWeight(_))
        ));
        // Singular linear part: both map to z1.
        let ws11 = WeightSystem::new(vec![1, 1]).unwrap();
        let sing = vec![z(2, 0), z(2, 0)];
        assert!(matches!(
            invert_weighted_substitution(&sing, &ws11),
            Err(Error::NotInvertible(_))
        ));
    }

    #[test]
    fn dilation_scales_by_weight() {
        // t = 1 is the identity.
        let ws = WeightSystem::new(vec![1]).unwrap();
        let p = &z(1, 0) * &zb(1, 0);
        assert_eq!(dilate(&p, &rati(1), &ws).unwrap(), p);
        // m = (1), r = 2 gives t = 4 and p -> 4 p.
        assert_eq!(dilate(&p, &rati(2), &ws).unwrap(), p.scale(&gqi(4)));
        // Weight-1 polynomial with m = (4,3) scales by t = r^24.
        let ws43 = WeightSystem::new(vec![4, 3]).unwrap();
        let f = &z(2, 0).pow(3) * &z(2, 1).pow(2);
        let g = &z(2, 0) * &z(2, 1);
        let p = &(&f * &g.conj()) + &(&g * &f.conj());
        let r = rat(2, 3);
        let t = rat_pow(&r, 24);
        assert_eq!(
            dilate(&p, &r, &ws43).unwrap(),
            p.scale(&gq(t, Rat::zero()))
        );
        // w carries weight 1: w -> t w.
        let w = MixedPoly::var_w(1);
        assert_eq!(dilate(&w, &rati(2), &ws).unwrap(), w.scale(&gqi(4)));
    }
}
