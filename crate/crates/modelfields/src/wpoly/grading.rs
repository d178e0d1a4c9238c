//! Signature decomposition and weight grading.

use std::collections::BTreeMap;

use crate::error::Error;
use crate::exact::Rat;
use crate::wpoly::{MixedPoly, WeightSystem};
use num_traits::Zero;

/// A real `z`/`zb` polynomial split into parts of fixed signature
/// `wt(A) - wt(B)`.  The parts reconstruct the input exactly and satisfy
/// the conjugate symmetry `part(-s) = conj(part(s))`.
#[derive(Debug, Clone)]
pub struct SignatureDecomposition {
    parts: BTreeMap<Rat, MixedPoly>,
}

impl SignatureDecomposition {
    pub fn signatures(&self) -> impl Iterator<Item = &Rat> {
        self.parts.keys()
    }

    pub fn parts(&self) -> impl Iterator<Item = (&Rat, &MixedPoly)> {
        self.parts.iter()
    }

    pub fn part(&self, s: &Rat) -> Option<&MixedPoly> {
        self.parts.get(s)
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Exact sum of all parts.
    pub fn reconstruct(&self, n: usize) -> MixedPoly {
        let mut acc = MixedPoly::zero(n, crate::wpoly::Ctx::Ambient);
        for p in self.parts.values() {
            acc = &acc + p;
        }
        acc
    }

    /// True iff the only signature present is zero.
    pub fn is_balanced(&self) -> bool {
        self.parts.keys().all(|s| s.is_zero())
    }
}

/// Split a real polynomial in `z, zb` into its signature parts.
///
/// Rejects non-real input (conjugate symmetry of the parts would be
/// undefined) and anything that mentions `w`, `wb` or `u`.
pub fn signature_decompose(
    p: &MixedPoly,
    ws: &WeightSystem,
) -> Result<SignatureDecomposition, Error> {
    if !p.is_z_only() {
        return Err(Error::ContextMismatch(
            "signature decomposition needs a z/zb polynomial".into(),
        ));
    }
    if !p.is_real() {
        return Err(Error::NotReal);
    }
    let mut parts: BTreeMap<Rat, MixedPoly> = BTreeMap::new();
    for (m, c) in p.iter() {
        let s = ws.signature(m);
        parts
            .entry(s)
            .or_insert_with(|| MixedPoly::zero(p.n(), p.ctx()))
            .insert(m.clone(), c.clone());
    }
    Ok(SignatureDecomposition { parts })
}

/// The signature-zero part of a real polynomial.
pub fn balanced_part(p: &MixedPoly, ws: &WeightSystem) -> Result<MixedPoly, Error> {
    if !p.is_z_only() {
        return Err(Error::ContextMismatch(
            "balanced part needs a z/zb polynomial".into(),
        ));
    }
    if !p.is_real() {
        return Err(Error::NotReal);
    }
    let mut out = MixedPoly::zero(p.n(), p.ctx());
    for (m, c) in p.iter() {
        if ws.signature(m).is_zero() {
            out.insert(m.clone(), c.clone());
        }
    }
    Ok(out)
}

/// Group a single signature part as `sum_B f_B(z) * zb^B`: the keys are the
/// antiholomorphic multi-indices `B`, the values the holomorphic
/// coefficient polynomials `f_B`.
pub fn coefficient_functions(part: &MixedPoly) -> BTreeMap<Vec<u32>, MixedPoly> {
    assert!(part.is_z_only(), "coefficient functions need a z/zb polynomial");
    let mut out: BTreeMap<Vec<u32>, MixedPoly> = BTreeMap::new();
    for (m, c) in part.iter() {
        let mut holo = m.clone();
        holo.zb = vec![0; m.n()];
        out.entry(m.zb.clone())
            .or_insert_with(|| MixedPoly::zero(part.n(), part.ctx()))
            .insert(holo, c.clone());
    }
    out
}

/// Split an ambient polynomial into weighted-homogeneous parts.
pub fn weight_graded_parts(f: &MixedPoly, ws: &WeightSystem) -> BTreeMap<Rat, MixedPoly> {
    let mut parts: BTreeMap<Rat, MixedPoly> = BTreeMap::new();
    for (m, c) in f.iter() {
        let w = ws.monomial_weight(m);
        parts
            .entry(w)
            .or_insert_with(|| MixedPoly::zero(f.n(), f.ctx()))
            .insert(m.clone(), c.clone());
    }
    parts
}

/// The common weight of all monomials, `None` if the polynomial is zero or
/// not homogeneous.
pub fn weighted_homogeneous_weight(f: &MixedPoly, ws: &WeightSystem) -> Option<Rat> {
    let mut it = f.iter();
    let first = ws.monomial_weight(it.next()?.0);
    for (m, _) in it {
        if ws.monomial_weight(m) != first {
            return None;
        }
    }
    Some(first)
}

/// True iff `f` is nonzero and weighted-homogeneous of exactly weight `mu`.
pub fn is_homogeneous_of(f: &MixedPoly, ws: &WeightSystem, mu: &Rat) -> bool {
    weighted_homogeneous_weight(f, ws).as_ref() == Some(mu)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{gqi, rat};
    use crate::wpoly::{Ctx, WeightSystem};

    fn z(n: usize, j: usize) -> MixedPoly {
        MixedPoly::var_z(n, j, Ctx::Ambient)
    }

    fn zb(n: usize, j: usize) -> MixedPoly {
        MixedPoly::var_zb(n, j, Ctx::Ambient)
    }

    #[test]
    fn single_part_for_balanced_monomial() {
        let ws = WeightSystem::new(vec![1]).unwrap();
        let p = &z(1, 0) * &zb(1, 0);
        let d = signature_decompose(&p, &ws).unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(d.part(&rat(0, 1)).unwrap(), &p);
        assert!(d.is_balanced());
    }

    #[test]
    fn example_pair_splits_at_five_twelfths() {
        // p = z1^3 z2^2 zb1 zb2 + z1 z2 zb1^3 zb2^2, m = (4,3).
        let ws = WeightSystem::new(vec![4, 3]).unwrap();
        let f = &z(2, 0).pow(3) * &z(2, 1).pow(2);
        let g = &z(2, 0) * &z(2, 1);
        let p = &(&f * &g.conj()) + &(&g * &f.conj());
        let d = signature_decompose(&p, &ws).unwrap();
        let sigs: Vec<_> = d.signatures().cloned().collect();
        assert_eq!(sigs, vec![rat(-5, 12), rat(5, 12)]);
        // Conjugate symmetry and exact reconstruction.
        let plus = d.part(&rat(5, 12)).unwrap();
        let minus = d.part(&rat(-5, 12)).unwrap();
        assert_eq!(&plus.conj(), minus);
        assert_eq!(d.reconstruct(2), p);
        // Both signatures nonzero, so the balanced part vanishes.
        assert!(balanced_part(&p, &ws).unwrap().is_zero());
    }

    #[test]
    fn cross_terms_can_balance() {
        // z1^2 zb2 + z2 zb1^2 with m = (4,2) is balanced: wt(z1^2) = 1/4 = wt(z2).
        let ws = WeightSystem::new(vec![4, 2]).unwrap();
        let p = &(&z(2, 0).pow(2) * &zb(2, 1)) + &(&z(2, 1) * &zb(2, 0).pow(2));
        let d = signature_decompose(&p, &ws).unwrap();
        assert_eq!(d.len(), 1);
        assert!(d.is_balanced());
        assert_eq!(balanced_part(&p, &ws).unwrap(), p);
    }

    #[test]
    fn balanced_part_bookkeeping() {
        // z1 zb1 + z1^3 zb1 + z1 zb1^3, m = (1): only the first term balances.
        let ws = WeightSystem::new(vec![1]).unwrap();
        let diag = &z(1, 0) * &zb(1, 0);
        let p = &(&diag + &(&z(1, 0).pow(3) * &zb(1, 0))) + &(&z(1, 0) * &zb(1, 0).pow(3));
        assert_eq!(balanced_part(&p, &ws).unwrap(), diag);
        // Idempotent.
        let b = balanced_part(&p, &ws).unwrap();
        assert_eq!(balanced_part(&b, &ws).unwrap(), b);
    }

    #[test]
    fn rejects_non_real() {
        let ws = WeightSystem::new(vec![1]).unwrap();
        let p = (&z(1, 0) * &zb(1, 0)).scale(&crate::exact::gq_i());
        assert!(signature_decompose(&p, &ws).is_err());
        assert!(balanced_part(&p, &ws).is_err());
    }

    #[test]
    fn coefficient_function_grouping() {
        // part = z1^3 z2^2 zb1 zb2 -> { B = (1,1) -> z1^3 z2^2 }.
        let f = &z(2, 0).pow(3) * &z(2, 1).pow(2);
        let part = &f * &(&z(2, 0) * &z(2, 1)).conj();
        let groups = coefficient_functions(&part);
        assert_eq!(groups.len(), 1);
        assert_eq!(groups.get(&vec![1, 1][..].to_vec()).unwrap(), &f);
        // Empty polynomial -> empty map.
        assert!(coefficient_functions(&MixedPoly::zero(2, Ctx::Ambient)).is_empty());
        // Mixed grouping: z1^2 zb2 + z1 z2 zb1 with m = (4,2).
        let p = &(&z(2, 0).pow(2) * &zb(2, 1)) + &(&(&z(2, 0) * &z(2, 1)) * &zb(2, 0));
        let groups = coefficient_functions(&p);
        assert_eq!(groups.len(), 2);
        assert_eq!(groups.get(&vec![0, 1][..].to_vec()).unwrap(), &z(2, 0).pow(2));
        assert_eq!(
            groups.get(&vec![1, 0][..].to_vec()).unwrap(),
            &(&z(2, 0) * &z(2, 1))
        );
    }

    #[test]
    fn coefficient_functions_weight_relation() {
        // For a weight-1 part at signature s, each f_B has weight (s+1)/2.
        let ws = WeightSystem::new(vec![4, 3]).unwrap();
        let f = &z(2, 0).pow(3) * &z(2, 1).pow(2);
        let g = &z(2, 0) * &z(2, 1);
        let part = &f * &g.conj();
        let s = rat(5, 12);
        for (_, fb) in coefficient_functions(&part) {
            let wt = weighted_homogeneous_weight(&fb, &ws).unwrap();
            assert_eq!(wt, (&s + rat(1, 1)) / rat(2, 1));
        }
    }

    #[test]
    fn graded_parts_reconstruct() {
        let ws = WeightSystem::new(vec![1, 2]).unwrap();
        // |z1|^2 + |z2|^4 + |z2|^6 with m = (1,2): weights 1, 1, 3/2.
        let a = &z(2, 0) * &zb(2, 0);
        let b = (&z(2, 1) * &zb(2, 1)).pow(2);
        let c = (&z(2, 1) * &zb(2, 1)).pow(3);
        let f = &(&a + &b) + &c;
        let parts = weight_graded_parts(&f, &ws);
        assert_eq!(parts.len(), 2);
        assert_eq!(parts.get(&rat(1, 1)).unwrap(), &(&a + &b));
        assert_eq!(parts.get(&rat(3, 2)).unwrap(), &c);
        let total = parts.values().fold(MixedPoly::zero(2, Ctx::Ambient), |acc, p| &acc + p);
        assert_eq!(total, f);
        // Homogeneous input has a single part.
        assert_eq!(weight_graded_parts(&a, &ws).len(), 1);
        assert!(is_homogeneous_of(&a, &ws, &rat(1, 1)));
        assert!(!is_homogeneous_of(&f, &ws, &rat(1, 1)));
        let _ = gqi(0);
    }
}
